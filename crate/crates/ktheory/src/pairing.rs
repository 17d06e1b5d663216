use combinatorics::IndexSet;
use exact_algebra::{Matrix, Poly};

use crate::{k_gamma_ring, k_ring, zv, KClass, KError};

/// `∏_{a<b} (Z_b − Z_a)`.
fn vandermonde(n: usize) -> Poly {
    let r = k_ring(n);
    let mut v = Poly::one(&r);
    for a in 1..=n {
        for b in a + 1..=n {
            v = &v * &(&zv(&r, b) - &zv(&r, a));
        }
    }
    v
}

/// `V / ∏_{i∈I_1, j∈I_2} (Z_j − Z_i)`, a polynomial.
fn cofactor(i: &IndexSet) -> Poly {
    let r = k_ring(i.n);
    let mut p = Poly::one(&r);
    let mut flips = 0;
    for a in 1..=i.n {
        for b in a + 1..=i.n {
            if i.contains(a) == i.contains(b) {
                p = &p * &(&zv(&r, b) - &zv(&r, a));
            } else if i.contains(b) {
                flips += 1;
            }
        }
    }
    if flips % 2 == 1 {
        -p
    } else {
        p
    }
}

/// `χ^T(f) = Σ_I f_I / ∏_{i∈I_1, j∈I_2}(1 − Z_i/Z_j)`.
pub fn chi(f: &KClass) -> Result<Poly, KError> {
    let r = k_ring(f.n);
    let mut num = Poly::zero(&r);
    for (idx, v) in f.basis().iter().zip(&f.loc) {
        if v.is_zero() {
            continue;
        }
        let mut w = v * &cofactor(idx);
        for j in idx.i2() {
            w = &w * &zv(&r, j).pow(f.k as u32);
        }
        num += &w;
    }
    num.div_exact(&vandermonde(f.n)).ok_or(KError::NotLaurentPolynomial)
}

/// `f ↦ f*`, inverting every `Z` in each localization.
pub fn dual_involution(e: &KClass) -> KClass {
    KClass { k: e.k, n: e.n, loc: e.loc.iter().map(|p| p.invert_vars()).collect() }
}

/// Mukai pairing `χ(e, f) = χ^T(e* ⊗ f)`.
pub fn chi_pairing(e: &KClass, f: &KClass) -> Result<Poly, KError> {
    if (e.k, e.n) != (f.k, f.n) {
        return Err(KError::ShapeMismatch(format!("({},{}) vs ({},{})", e.k, e.n, f.k, f.n)));
    }
    chi(&dual_involution(e).mul(f))
}

/// `𝒢_{ij} = χ(e_i, e_j)`.
pub fn gram_matrix(basis: &[KClass]) -> Result<Matrix, KError> {
    let n = basis.first().map(|b| b.n).ok_or_else(|| KError::ShapeMismatch("empty basis".into()))?;
    let r = k_ring(n);
    let duals: Vec<KClass> = basis.iter().map(dual_involution).collect();
    let mut g = Matrix::zeros(&r, basis.len(), basis.len());
    for (i, d) in duals.iter().enumerate() {
        for (j, f) in basis.iter().enumerate() {
            g.set(i, j, chi(&d.mul(f))?);
        }
    }
    Ok(g)
}

/// `A†`: transpose composed with the entrywise duality.
pub fn dagger(a: &Matrix) -> Matrix {
    a.transpose().map(|p| p.invert_vars())
}

/// Canonical operator `f ↦ (−1)^{k(n−k)} (∏Γ_1)^n (∏Z)^{−k} f`.
pub fn canonical_operator(f: &KClass) -> KClass {
    let nu = crate::stokes::canonical_eigenvalues(f.k, f.n);
    KClass { k: f.k, n: f.n, loc: f.loc.iter().zip(&nu).map(|(a, b)| a * b).collect() }
}

/// Laurent representative in `G1..Gk, Z1..Zn` by interpolation through the
/// classes `∏_{i, b∈I_2}(G_i − Z_b)` that localize to zero away from `pt_I`.
pub fn interpolate(f: &KClass) -> Result<Poly, KError> {
    let gr = k_gamma_ring(f.k, f.n);
    let emb = |p: &Poly| p.embed(&gr).expect("Z variables embed");
    let g = |i: usize| Poly::var_idx(&gr, i - 1);
    let z = |a: usize| Poly::var_idx(&gr, f.k + a - 1);
    let mut num = Poly::zero(&gr);
    for (idx, v) in f.basis().iter().zip(&f.loc) {
        if v.is_zero() {
            continue;
        }
        let mut w = &emb(v) * &emb(&cofactor(idx));
        for i in 1..=f.k {
            for b in idx.i2() {
                w = &w * &(&g(i) - &z(b));
            }
        }
        num += &w;
    }
    if (f.k * (f.n - f.k)) % 2 == 1 {
        num = -num;
    }
    num.div_exact(&emb(&vandermonde(f.n))).ok_or(KError::DivisionNotExact)
}
