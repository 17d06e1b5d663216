use std::sync::Arc;

use combinatorics::enumerate_index_sets;
use exact_algebra::{Matrix, Poly, Ring};

use crate::{weight_ring, z, OperatorMatrix, WeightError};

/// `Q^{a,b}_{i,j}`: sends `v_I` to `v_{s_ab(I)}` when `a ∈ I_i`, `b ∈ I_j`
/// and `(j−i)(a−b) ≡ 1 mod n`; zero otherwise.
pub fn q_operator(ring: &Arc<Ring>, n: usize, k: usize, a: usize, b: usize, i: usize, j: usize) -> Matrix {
    let basis = enumerate_index_sets(k, n).expect("valid shape");
    let mut m = Matrix::zeros(ring, basis.len(), basis.len());
    let cond = ((j as i64 - i as i64) * (a as i64 - b as i64)).rem_euclid(n as i64) == 1 % n as i64;
    if !cond {
        return m;
    }
    let part = |idx: &combinatorics::IndexSet, x: usize, which: usize| idx.contains(x) == (which == 1);
    for (c, idx) in basis.iter().enumerate() {
        if part(idx, a, i) && part(idx, b, j) {
            m.add_at(idx.swap(a, b).rank(), c, &Poly::one(ring));
        }
    }
    m
}

pub fn dynamical_operator_in(ring: &Arc<Ring>, n: usize, k: usize, which: usize) -> Matrix {
    let basis = enumerate_index_sets(k, n).expect("valid shape");
    let ratio = &Poly::v(ring, "p2") * &Poly::var_pow(ring, "p1", -1).expect("p1 is Laurent");
    let mut m = Matrix::zeros(ring, basis.len(), basis.len());
    for (c, idx) in basis.iter().enumerate() {
        let mut d = Poly::zero(ring);
        for a in 1..=n {
            if idx.contains(a) == (which == 1) {
                d += &z(ring, a);
            }
        }
        m.set(c, c, d);
    }
    for a in 1..=n {
        for b in 1..=n {
            if a == b {
                continue;
            }
            let (q, coeff) = if which == 1 {
                let q = q_operator(ring, n, k, a, b, 1, 2);
                (q, if b < a { Poly::one(ring) } else { ratio.clone() })
            } else {
                let q = q_operator(ring, n, k, a, b, 2, 1);
                (q, if b < a { -&ratio } else { -Poly::one(ring) })
            };
            if !q.is_zero() {
                m = m.add(&q.scale(&coeff));
            }
        }
    }
    m
}

pub fn dynamical_operator(n: usize, k: usize, i: usize) -> Result<OperatorMatrix, WeightError> {
    if !(i == 1 || i == 2) || k > n || n == 0 {
        return Err(WeightError::BadRange(format!("(n,k,i)=({n},{k},{i})")));
    }
    Ok(OperatorMatrix { k, n, matrix: dynamical_operator_in(&weight_ring(n), n, k, i) })
}
