use combinatorics::{binomial, enumerate_index_sets};
use exact_algebra::{determinant_rr, q, Poly, RestrictedRational as RR};

use crate::classes::poincare_pairing;
use crate::{coh_ring, z_of, CohClass, CohError};

/// `ϑ(f_1∧…∧f_k)|_I = det(f_j|_{[a_i]}) / Π_{i<j}(z_{a_i} − z_{a_j})` for
/// classes `f_j` on `ℙ^{n−1}` and `I_1 = {a_1 < … < a_k}`.
pub fn satake_cohomology(fs: &[CohClass]) -> Result<CohClass, CohError> {
    let k = fs.len();
    let n = fs.first().ok_or_else(|| CohError::BadRange("empty wedge".into()))?.n;
    if fs.iter().any(|f| f.k != 1 || f.n != n) || k > n {
        return Err(CohError::ShapeMismatch("factors must be classes on one projective space".into()));
    }
    let r = coh_ring(n);
    let mut loc = Vec::with_capacity(binomial(n, k));
    for idx in enumerate_index_sets(k, n).map_err(|e| CohError::BadRange(e.to_string()))? {
        let a = &idx.i1;
        let m: Vec<Vec<RR>> = a.iter().map(|&ai| fs.iter().map(|f| f.loc[ai - 1].clone()).collect()).collect();
        let mut d = determinant_rr(&m).map_err(|e| CohError::ShapeMismatch(e.to_string()))?;
        for i in 0..k {
            for j in i + 1..k {
                let w: Poly = &z_of(&r, a[i]) - &z_of(&r, a[j]);
                d = d.div_linear(&w).map_err(|e| CohError::ShapeMismatch(e.to_string()))?;
            }
        }
        loc.push(d);
    }
    Ok(CohClass { k, n, loc })
}

/// Induced pairing on `∧^k H(ℙ^{n−1})`:
/// `(−1)^{k(k−1)/2} det(η(u_i, v_j))`.
pub fn wedge_pairing(us: &[CohClass], vs: &[CohClass]) -> Result<RR, CohError> {
    let k = us.len();
    if vs.len() != k || k == 0 {
        return Err(CohError::ShapeMismatch("wedge lengths differ".into()));
    }
    let m: Vec<Vec<RR>> = us.iter().map(|u| vs.iter().map(|v| poincare_pairing(u, v)).collect()).collect();
    let d = determinant_rr(&m).map_err(|e| CohError::ShapeMismatch(e.to_string()))?;
    let s = if (k * (k - 1) / 2) % 2 == 0 { 1 } else { -1 };
    Ok(d.scale(&q(s)))
}
