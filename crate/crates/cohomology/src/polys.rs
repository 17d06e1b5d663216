use std::sync::Arc;

use combinatorics::{inverse, compose, is_permutation, reduced_word, sigma0, Partition};
use exact_algebra::{Matrix, Poly, Ring};

use crate::CohError;

/// `e_j` of a list of polynomials.
pub fn elementary(ring: &Arc<Ring>, vals: &[Poly], j: usize) -> Poly {
    // e_0..e_j by the usual recursion over the variables
    let mut e = vec![Poly::zero(ring); j + 1];
    e[0] = Poly::one(ring);
    for v in vals {
        for t in (1..=j).rev() {
            let add = &e[t - 1] * v;
            e[t] += &add;
        }
    }
    e.swap_remove(j)
}

fn rising(x: &Poly, y: &[Poly], m: usize) -> Poly {
    let mut r = Poly::one(x.ring());
    for yi in &y[..m] {
        r = &r * &(x - yi);
    }
    r
}

/// `s_λ(x|y) = det((x_i|y)^{λ_j+k−j}) / Π_{i<j}(x_i − x_j)`.
///
/// `x` must be distinct variables of the ring so that the Vandermonde
/// division is exact; `y` needs at least `λ_1 + k − 1` entries.
pub fn factorial_schur_in(lambda: &Partition, x: &[Poly], y: &[Poly]) -> Result<Poly, CohError> {
    let k = x.len();
    if k == 0 {
        return Err(CohError::BadRange("no x variables".into()));
    }
    if lambda.parts().len() > k {
        return Err(CohError::BadRange(format!("{lambda:?} has more than {k} rows")));
    }
    let need = lambda.part(1) + k - 1;
    if y.len() < need {
        return Err(CohError::BadRange(format!("need {need} shift parameters, got {}", y.len())));
    }
    let ring = x[0].ring().clone();
    let lam = lambda.padded(k);
    let m = Matrix::from_fn(&ring, k, k, |i, j| rising(&x[i], y, lam[j] + k - 1 - j));
    let mut d = m.det().map_err(|_| CohError::ShapeMismatch("det".into()))?;
    for i in 0..k {
        for j in i + 1..k {
            d = d.div_exact(&(&x[i] - &x[j])).ok_or(CohError::DivisionNotExact)?;
        }
    }
    Ok(d)
}

/// `s_λ(g|z_τ)` in the ring `g1..gk, z1..zn`, where `τ = σ_0` for the
/// standard flag and the identity for the opposite one.
pub fn factorial_schur(lambda: &Partition, k: usize, n: usize, reversed: bool) -> Result<Poly, CohError> {
    let r = crate::gamma_ring(k, n);
    let x: Vec<Poly> = (0..k).map(|i| Poly::var_idx(&r, i)).collect();
    let y: Vec<Poly> = if reversed {
        (1..=n).rev().map(|a| Poly::var_idx(&r, k + a - 1)).collect()
    } else {
        (1..=n).map(|a| Poly::var_idx(&r, k + a - 1)).collect()
    };
    factorial_schur_in(lambda, &x, &y)
}

/// `x1..xn, y1..yn`.
pub fn schubert_ring(n: usize) -> Arc<Ring> {
    let mut v: Vec<(String, bool)> = (1..=n).map(|a| (format!("x{a}"), false)).collect();
    v.extend((1..=n).map(|a| (format!("y{a}"), false)));
    Ring::new(&v)
}

fn divided_difference(f: &Poly, i: usize) -> Result<Poly, CohError> {
    let ring = f.ring();
    let mut perm: Vec<usize> = (0..ring.len()).collect();
    perm.swap(i - 1, i);
    let num = f - &f.permute_vars(&perm);
    let den = &Poly::var_idx(ring, i - 1) - &Poly::var_idx(ring, i);
    num.div_exact(&den).ok_or(CohError::DivisionNotExact)
}

/// Double Schubert polynomial `𝔖_w(x; y)`, from
/// `𝔖_{w_0} = Π_{i+j≤n}(x_i − y_j)` by divided differences.
pub fn double_schubert(w: &[usize]) -> Result<Poly, CohError> {
    if !is_permutation(w) {
        return Err(CohError::BadRange(format!("{w:?} is not a permutation")));
    }
    let n = w.len();
    let r = schubert_ring(n);
    let mut f = Poly::one(&r);
    for i in 1..=n {
        for j in 1..=n - i {
            f = &f * &(&Poly::var_idx(&r, i - 1) - &Poly::var_idx(&r, n + j - 1));
        }
    }
    // 𝔖_w = ∂_{w^{-1} w_0} 𝔖_{w_0}; the rightmost letter acts first
    let v = compose(&inverse(w), &sigma0(n));
    for &i in reduced_word(&v).iter().rev() {
        f = divided_difference(&f, i)?;
    }
    Ok(f)
}
