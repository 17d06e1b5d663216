use std::collections::HashMap;
use std::sync::Arc;

use combinatorics::Partition;
use exact_algebra::{Matrix, Poly, Ring};

use crate::{KClass, KError};

/// `x1..xk, y1..yn`; the `y` are invertible.
pub fn groth_ring(k: usize, n: usize) -> Arc<Ring> {
    let mut v: Vec<(String, bool)> = (1..=k).map(|a| (format!("x{a}"), false)).collect();
    v.extend((1..=n).map(|a| (format!("y{a}"), true)));
    Ring::new(&v)
}

fn check_fit(lambda: &Partition, k: usize, n: usize) -> Result<(), KError> {
    if k == 0 || k > n || !lambda.fits(k, n) {
        return Err(KError::BadRange(format!("partition {:?} in {k}x{}", lambda.parts(), n.saturating_sub(k))));
    }
    Ok(())
}

fn one_minus_ratio(r: &Arc<Ring>, k: usize, i: usize, j: usize) -> Poly {
    let x = Poly::var_idx(r, i - 1);
    let yinv = Poly::var_idx(r, k + j - 1).powi(-1).expect("y is Laurent");
    &Poly::one(r) - &(&x * &yinv)
}

/// `D_i f = (y_i f − y_{i+1} s_i f)/(y_i − y_{i+1})`.
fn demazure(f: &Poly, k: usize, i: usize) -> Poly {
    let r = f.ring().clone();
    let mut perm: Vec<usize> = (0..r.len()).collect();
    perm.swap(k + i - 1, k + i);
    let yi = Poly::var_idx(&r, k + i - 1);
    let yj = Poly::var_idx(&r, k + i);
    let num = &(&yi * f) - &(&yj * &f.permute_vars(&perm));
    num.div_exact(&(&yi - &yj)).expect("Demazure quotient is exact")
}

/// Double Grothendieck polynomial by Demazure recursion from the top class
/// `∏_{i≤k, j≤n−k}(1 − x_i/y_j)`.
pub fn grothendieck_polynomial(lambda: &Partition, k: usize, n: usize) -> Result<Poly, KError> {
    check_fit(lambda, k, n)?;
    let mut memo = HashMap::new();
    Ok(groth_rec(&lambda.index_set(k, n).expect("fits").i1, k, n, &mut memo))
}

fn groth_rec(i1: &[usize], k: usize, n: usize, memo: &mut HashMap<Vec<usize>, Poly>) -> Poly {
    if let Some(p) = memo.get(i1) {
        return p.clone();
    }
    let r = groth_ring(k, n);
    // climb: replace some i ∈ I by i+1 ∉ I, then apply D_i
    let step = i1.iter().position(|&a| a < n && !i1.contains(&(a + 1)));
    let out = match step {
        None => {
            let mut p = Poly::one(&r);
            for i in 1..=k {
                for j in 1..=n - k {
                    p = &p * &one_minus_ratio(&r, k, i, j);
                }
            }
            p
        }
        Some(pos) => {
            let i = i1[pos];
            let mut up = i1.to_vec();
            up[pos] = i + 1;
            demazure(&groth_rec(&up, k, n, memo), k, i)
        }
    };
    memo.insert(i1.to_vec(), out.clone());
    out
}

/// Determinantal formula `det((x_i|y)^{λ_j+k−j} x_i^{j−1}) / ∏_{i<j}(x_j − x_i)`.
pub fn grothendieck_determinant(lambda: &Partition, k: usize, n: usize) -> Result<Poly, KError> {
    check_fit(lambda, k, n)?;
    let r = groth_ring(k, n);
    let lam = lambda.padded(k);
    let m = Matrix::from_fn(&r, k, k, |i, j| {
        let mut p = Poly::var_idx(&r, i).pow(j as u32);
        for t in 1..=lam[j] + k - 1 - j {
            p = &p * &one_minus_ratio(&r, k, i + 1, t);
        }
        p
    });
    let mut den = Poly::one(&r);
    for i in 0..k {
        for j in i + 1..k {
            den = &den * &(&Poly::var_idx(&r, j) - &Poly::var_idx(&r, i));
        }
    }
    let det = m.det().map_err(|_| KError::DivisionNotExact)?;
    det.div_exact(&den).ok_or(KError::DivisionNotExact)
}

/// `[𝒪_λ] = 𝔊_λ(Γ_1; Z)`.
pub fn schubert_structure_sheaf(lambda: &Partition, k: usize, n: usize) -> Result<KClass, KError> {
    let g = grothendieck_polynomial(lambda, k, n)?;
    let gr = crate::k_gamma_ring(k, n);
    let img: Vec<Poly> = (0..k + n).map(|i| Poly::var_idx(&gr, i)).collect();
    Ok(KClass::from_gamma_poly(k, n, &g.subs(&img).expect("rename")))
}
