use std::sync::Arc;

use combinatorics::{enumerate_index_sets, Partition};
use exact_algebra::{Matrix, Poly, Ring};

use crate::exceptional::ExceptionalBasis;
use crate::{k_ring, zv, KClass, KError};

/// `ϑ^K_ℓ(f_1 ∧ … ∧ f_k)`: at `pt_I`, `det(f_j(Z_{i_l}))` divided by
/// `(∏Γ)^{(k−1)(ℓ+1)} 𝔇_k(Γ^{-1}) = (∏Γ)^{(k−1)ℓ} ∏_{a<b}(Γ_b − Γ_a)`.
pub fn satake_k(fs: &[KClass], ell: i32) -> Result<KClass, KError> {
    let k = fs.len();
    let n = fs.first().map(|f| f.n).ok_or_else(|| KError::ShapeMismatch("no factors".into()))?;
    if fs.iter().any(|f| f.k != 1 || f.n != n) || k > n {
        return Err(KError::ShapeMismatch("factors must live on one projective space".into()));
    }
    let r = k_ring(n);
    let mut loc = Vec::new();
    for idx in enumerate_index_sets(k, n).expect("valid shape") {
        let m = Matrix::from_fn(&r, k, k, |l, j| fs[j].loc[idx.i1[l] - 1].clone());
        let det = m.det().map_err(|_| KError::DivisionNotExact)?;
        let mut den = Poly::one(&r);
        for a in 0..k {
            for b in a + 1..k {
                den = &den * &(&zv(&r, idx.i1[b]) - &zv(&r, idx.i1[a]));
            }
        }
        let prod = idx.i1.iter().fold(Poly::one(&r), |acc, &a| &acc * &zv(&r, a));
        let twist = prod.powi(-((k as i32 - 1) * ell)).expect("monomial power");
        let q = det.div_exact(&den).ok_or(KError::DivisionNotExact)?;
        loc.push(&q * &twist);
    }
    Ok(KClass { k, n, loc })
}

/// Lexicographically ordered wedges of a basis of `K_0^T(ℙ^{n−1})` pushed
/// through `ϑ^K_ℓ`.
pub fn satake_exterior_basis(basis: &ExceptionalBasis, k: usize, ell: i32) -> Result<ExceptionalBasis, KError> {
    if basis.k != 1 || k == 0 || k > basis.n {
        return Err(KError::BadRange(format!("k={k} on a basis of ({},{})", basis.k, basis.n)));
    }
    let mut out = Vec::new();
    for s in enumerate_index_sets(k, basis.n).expect("valid shape") {
        let fs: Vec<KClass> = s.i1.iter().map(|&a| basis.elements[a - 1].clone()).collect();
        out.push(satake_k(&fs, ell)?);
    }
    ExceptionalBasis::new(out, format!("wedge{k}({})", basis.provenance))
}

fn complete(ring: &Arc<Ring>, vals: &[Poly], m: i64) -> Poly {
    if m < 0 {
        return Poly::zero(ring);
    }
    // h_m(x_1..x_j) = Σ_t x_j^t h_{m−t}(x_1..x_{j−1})
    let m = m as usize;
    let mut h = vec![Poly::zero(ring); m + 1];
    h[0] = Poly::one(ring);
    for v in vals {
        for d in (1..=m).rev() {
            let mut acc = Poly::zero(ring);
            let mut p = Poly::one(ring);
            for t in 1..=d {
                p = &p * v;
                acc += &(&p * &h[d - t]);
            }
            h[d] += &acc;
        }
    }
    h.swap_remove(m)
}

/// Schur polynomial through the Jacobi–Trudi determinant `det(h_{λ_i − i + j})`.
pub fn schur_jacobi_trudi(lambda: &Partition, vals: &[Poly]) -> Poly {
    let ring = vals[0].ring().clone();
    let l = lambda.parts().len();
    if l > vals.len() {
        return Poly::zero(&ring);
    }
    let p = lambda.padded(l);
    let m = Matrix::from_fn(&ring, l, l, |i, j| complete(&ring, vals, p[i] as i64 - i as i64 + j as i64));
    m.det().expect("square")
}
