use std::sync::Arc;

use combinatorics::{enumerate_index_sets, IndexSet};
use exact_algebra::{Matrix, Poly, Ring};

use crate::rmatrix::r_matrix_full;
use crate::{kappa, weight_ring, z, OperatorMatrix, WeightError};

/// `R(u)^{(i,j)}` restricted to the `(k, n−k)` weight space.
pub fn r_action(ring: &Arc<Ring>, basis: &[IndexSet], i: usize, j: usize, u: &Poly) -> Matrix {
    let mut m = Matrix::zeros(ring, basis.len(), basis.len());
    let one = Poly::one(ring);
    for (c, idx) in basis.iter().enumerate() {
        match (idx.contains(i), idx.contains(j)) {
            (true, false) => {
                m.add_at(c, c, u);
                m.add_at(idx.swap(i, j).rank(), c, &one);
            }
            (false, true) => m.add_at(idx.swap(i, j).rank(), c, &one),
            _ => m.add_at(c, c, &one),
        }
    }
    m
}

fn diag_p(ring: &Arc<Ring>, basis: &[IndexSet], a: usize) -> Matrix {
    let (p1, p2) = (Poly::v(ring, "p1"), Poly::v(ring, "p2"));
    let mut m = Matrix::zeros(ring, basis.len(), basis.len());
    for (c, idx) in basis.iter().enumerate() {
        m.set(c, c, if idx.contains(a) { p1.clone() } else { p2.clone() });
    }
    m
}

/// The ordered factor list of `K_a`, leftmost first: `(i, j, argument)` or
/// `None` for the diagonal `p1^{e11} p2^{e22}` factor at slot `a`.
fn factors(ring: &Arc<Ring>, n: usize, a: usize) -> Vec<Option<(usize, usize, Poly)>> {
    let kp = kappa(ring);
    let mut out = Vec::new();
    for b in (1..a).rev() {
        out.push(Some((a, b, &(&z(ring, a) - &z(ring, b)) + &kp)));
    }
    out.push(None);
    for b in (a + 1..=n).rev() {
        out.push(Some((a, b, &z(ring, a) - &z(ring, b))));
    }
    out
}

/// `K_a` on the `(k, n−k)` weight space, built blockwise.
pub fn qkz_operator_in(ring: &Arc<Ring>, n: usize, k: usize, a: usize) -> Matrix {
    let basis = enumerate_index_sets(k, n).expect("valid shape");
    let mut acc = Matrix::identity(ring, basis.len());
    for f in factors(ring, n, a) {
        let m = match f {
            Some((i, j, u)) => r_action(ring, &basis, i, j, &u),
            None => diag_p(ring, &basis, a),
        };
        acc = acc.mul(&m);
    }
    acc
}

pub fn qkz_operator(n: usize, k: usize, a: usize) -> Result<OperatorMatrix, WeightError> {
    if a == 0 || a > n || k > n {
        return Err(WeightError::BadRange(format!("(n,k,a)=({n},{k},{a})")));
    }
    Ok(OperatorMatrix { k, n, matrix: qkz_operator_in(&weight_ring(n), n, k, a) })
}

/// `K_a` on the whole `2^n`-dimensional tensor space.
pub fn qkz_operator_full(ring: &Arc<Ring>, n: usize, a: usize) -> Matrix {
    let dim = 1usize << n;
    let mut acc = Matrix::identity(ring, dim);
    for f in factors(ring, n, a) {
        let m = match f {
            Some((i, j, u)) => r_matrix_full(ring, n, i, j, &u),
            None => {
                let (p1, p2) = (Poly::v(ring, "p1"), Poly::v(ring, "p2"));
                let mut d = Matrix::zeros(ring, dim, dim);
                for w in 0..dim {
                    let v1 = (w >> (n - a)) & 1 == 0;
                    d.set(w, w, if v1 { p1.clone() } else { p2.clone() });
                }
                d
            }
        };
        acc = acc.mul(&m);
    }
    acc
}
