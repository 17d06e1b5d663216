use std::f64::consts::PI;

use combinatorics::enumerate_index_sets;
use exact_algebra::Poly;
use ktheory::{p_ring, satake_k, KClass};

use crate::jackson::psi_class;
use crate::weight::next_permutation;
use crate::{i_unit, Cx, NumError, NumericReport, SamplePoint};

#[derive(Debug, Clone, PartialEq)]
pub struct DetpropOptions {
    pub max_l: usize,
    pub tol: f64,
    /// `ℓ` in `p1 e^{πi(2ℓ+1)(k−1)}`, paired with `ϑ^K_ℓ` on the left.
    pub branch: i32,
}

impl Default for DetpropOptions {
    fn default() -> Self {
        DetpropOptions { max_l: 40, tol: 1e-8, branch: 0 }
    }
}

/// `P_i = X^{i−1} + i X^{−i} Z_{i+1}` (indices of `Z` mod `n`): generic enough
/// that no localization of `ϑ^K(P_1 ∧ … ∧ P_k)` vanishes at sample points.
pub fn default_factors(k: usize, n: usize) -> Vec<Poly> {
    let r = p_ring(n);
    (1..=k)
        .map(|i| {
            let x = Poly::var_idx(&r, 0);
            let zi = Poly::var_idx(&r, 1 + i % n);
            let a = x.powi(i as i32 - 1).expect("Laurent");
            let b = &x.powi(-(i as i32)).expect("Laurent") * &zi;
            &a + &b.scale_int(i as i64)
        })
        .collect()
}

pub(crate) fn det_complex(m: &[Vec<Cx>]) -> Cx {
    let k = m.len();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut acc = Cx::new(0.0, 0.0);
    loop {
        let mut inv = 0;
        for a in 0..k {
            for b in a + 1..k {
                if perm[a] > perm[b] {
                    inv += 1;
                }
            }
        }
        let mut t = Cx::new(if inv % 2 == 0 { 1.0 } else { -1.0 }, 0.0);
        for (a, &p) in perm.iter().enumerate() {
            t *= m[a][p];
        }
        acc += t;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    acc
}

/// `μ_J(z;p;κ) = (2πi/κ)^{−C(k,2)} p2^{(1−k)Σz/κ} det(μ_{i,j_a}(z; p1 e^{πi(2ℓ+1)(k−1)}, p2; κ))`,
/// the left side from `k`-dimensional Jackson sums of `ϑ^K_ℓ(P_1 ∧ … ∧ P_k)`,
/// the right side from one-dimensional sums of the `P_i`.
pub fn verify_detprop(k: usize, n: usize, sp: &SamplePoint, factors: &[Poly], opts: &DetpropOptions) -> Result<NumericReport, NumError> {
    if k == 0 || k > n || factors.len() != k || sp.n() != n {
        return Err(NumError::BadRange(format!("(k,n)=({k},{n}) with {} factors", factors.len())));
    }
    let fs: Vec<KClass> = factors.iter().map(|p| KClass::from_p_poly(n, p)).collect();
    let big = satake_k(&fs, opts.branch).map_err(|e| NumError::Algebra(e.to_string()))?;
    let lhs = psi_class(&big, sp, opts.max_l)?;

    let turned = sp.rotate_p1(PI * ((2 * opts.branch + 1) * (k as i32 - 1)) as f64);
    let mus: Vec<Vec<Cx>> = fs.iter().map(|f| psi_class(f, &turned, opts.max_l)).collect::<Result<_, _>>()?;
    let sum_z: Cx = sp.zc().iter().sum();
    let c2 = (k * (k - 1) / 2) as i32;
    let scalar = (2.0 * PI * i_unit() / sp.kappa).powi(-c2) * ((1.0 - k as f64) * sum_z / sp.kappa * sp.log_p2).exp();
    let basis = enumerate_index_sets(k, n).map_err(|e| NumError::BadRange(e.to_string()))?;
    let rhs: Vec<Cx> = basis
        .iter()
        .map(|j| {
            let m: Vec<Vec<Cx>> = (0..k).map(|i| j.i1.iter().map(|&a| mus[i][a - 1]).collect()).collect();
            scalar * det_complex(&m)
        })
        .collect();
    Ok(NumericReport::new(format!("detprop ({k},{n}) branch {}", opts.branch), "detprop", lhs, rhs, opts.tol))
}
