use std::str::FromStr;

use combinatorics::{enumerate_index_sets, IndexSet, Partition};
use exact_algebra::{Matrix, Poly};
use weight_ops::{dynamical_operator_in, weight_ring};

use crate::{quantum_ring, CohError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QBasis {
    Stab,
    Schubert,
}

impl FromStr for QBasis {
    type Err = CohError;
    fn from_str(s: &str) -> Result<Self, CohError> {
        match s {
            "stab" => Ok(QBasis::Stab),
            "schubert" => Ok(QBasis::Schubert),
            other => Err(CohError::BadRange(format!("unknown basis {other}"))),
        }
    }
}

/// Partitions labelling the Schubert basis, in basis order: `λ(I)` for `I`
/// in lexicographic order.
pub fn schubert_order(k: usize, n: usize) -> Vec<Partition> {
    enumerate_index_sets(k, n).expect("valid shape").iter().map(|i| i.partition()).collect()
}

/// Signed permutation `S` with `Stab_J = Σ_λ S_{λ,J} σ_λ`, using
/// `Stab_J = (−1)^{|λ(J)^∨|} σ_{λ(J)^∨}`.
pub fn stab_to_schubert(k: usize, n: usize) -> Matrix {
    let r = quantum_ring(n);
    let sets = enumerate_index_sets(k, n).expect("valid shape");
    let mut s = Matrix::zeros(&r, sets.len(), sets.len());
    for (j, idx) in sets.iter().enumerate() {
        let flipped = IndexSet::new(n, idx.i1.iter().map(|&a| n + 1 - a).collect()).expect("valid");
        let e = idx.partition().complement(k, n).size();
        s.set(flipped.rank(), j, Poly::int(&r, if e % 2 == 0 { 1 } else { -1 }));
    }
    s
}

/// Matrix of quantum multiplication by `c_1(E_i)`. In the stable basis this
/// is the dynamical operator at `p_1 = q^{-1}`, `p_2 = 1`.
pub fn quantum_c1_matrix(k: usize, n: usize, i: usize, basis: QBasis) -> Result<Matrix, CohError> {
    if k == 0 || k > n || !(i == 1 || i == 2) {
        return Err(CohError::BadRange(format!("(k,n,i)=({k},{n},{i})")));
    }
    let w = weight_ring(n);
    let r = quantum_ring(n);
    let mut img: Vec<Poly> = (0..n).map(|a| Poly::var_idx(&r, a)).collect();
    img.push(Poly::zero(&r));
    img.push(Poly::var_pow(&r, "q", -1).expect("q is Laurent"));
    img.push(Poly::one(&r));
    let x = dynamical_operator_in(&w, n, k, i);
    let m = x.try_map(|p| p.subs(&img)).map_err(|e| CohError::ShapeMismatch(e.to_string()))?;
    if m.to_strings().is_empty() {
        return Err(CohError::ShapeMismatch("empty".into()));
    }
    for a in 0..m.rows() {
        for b in 0..m.cols() {
            if !m.get(a, b).is_polynomial() {
                return Err(CohError::NotPolynomial);
            }
        }
    }
    Ok(match basis {
        QBasis::Stab => m,
        QBasis::Schubert => {
            let s = stab_to_schubert(k, n);
            s.mul(&m).mul(&s.transpose())
        }
    })
}
