use std::str::FromStr;

use combinatorics::{enumerate_index_sets, IndexSet};
use exact_algebra::{Matrix, Poly};

use crate::WeightError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExteriorMode {
    /// `∧^k M`: matrix of k×k minors.
    Multiplicative,
    /// Leibniz extension `Σ_i 1⊗…⊗M⊗…⊗1`.
    Derivation,
}

impl FromStr for ExteriorMode {
    type Err = WeightError;
    fn from_str(s: &str) -> Result<Self, WeightError> {
        match s {
            "multiplicative" => Ok(ExteriorMode::Multiplicative),
            "derivation" => Ok(ExteriorMode::Derivation),
            other => Err(WeightError::BadMode(other.into())),
        }
    }
}

/// Sort `v` in place, returning the permutation sign, or `None` on a repeat.
fn sort_sign(v: &mut [usize]) -> Option<bool> {
    let mut odd = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(odd)
    }
}

/// Induced operator on `∧^k` of an `n×n` matrix, basis = lexicographic k-subsets.
pub fn exterior_power_matrix(m: &Matrix, k: usize, mode: ExteriorMode) -> Result<Matrix, WeightError> {
    let n = m.rows();
    if m.cols() != n || k > n {
        return Err(WeightError::BadRange(format!("{}x{} matrix, k={k}", m.rows(), m.cols())));
    }
    let subsets: Vec<Vec<usize>> =
        enumerate_index_sets(k, n).map_err(|e| WeightError::BadRange(e.to_string()))?.into_iter().map(|i| i.i1).collect();
    let ring = m.ring().clone();
    let dim = subsets.len();
    let mut out = Matrix::zeros(&ring, dim, dim);
    match mode {
        ExteriorMode::Multiplicative => {
            for (r, a) in subsets.iter().enumerate() {
                let rows: Vec<usize> = a.iter().map(|x| x - 1).collect();
                for (c, b) in subsets.iter().enumerate() {
                    let cols: Vec<usize> = b.iter().map(|x| x - 1).collect();
                    let d = m.submatrix(&rows, &cols).det().expect("square minor");
                    out.set(r, c, d);
                }
            }
        }
        ExteriorMode::Derivation => {
            for (c, b) in subsets.iter().enumerate() {
                for pos in 0..k {
                    for row in 1..=n {
                        let e = m.get(row - 1, b[pos] - 1);
                        if e.is_zero() {
                            continue;
                        }
                        let mut w = b.clone();
                        w[pos] = row;
                        if let Some(odd) = sort_sign(&mut w) {
                            let r = IndexSet { k, n, i1: w }.rank();
                            let t: Poly = if odd { -e } else { e.clone() };
                            out.add_at(r, c, &t);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `v_{[a_1]}∧…∧v_{[a_k]} ↦ v_I` with `I_1 = {a_1..a_k}`; both sides are
/// listed in the same lexicographic order, so the map is the identity matrix.
pub fn satake_theta(k: usize, n: usize) -> Result<Vec<(Vec<usize>, IndexSet)>, WeightError> {
    if k == 0 || k > n {
        return Err(WeightError::BadRange(format!("(k,n)=({k},{n})")));
    }
    let sets = enumerate_index_sets(k, n).map_err(|e| WeightError::BadRange(e.to_string()))?;
    Ok(sets.into_iter().map(|i| (i.i1.clone(), i)).collect())
}
