use combinatorics::{enumerate_index_sets, IndexSet};
use ktheory::KClass;
use weight_ops::{qkz_operator_in, weight_ring};

use crate::bclass::chern_character_eval;
use crate::gamma::{log_factorial, log_gamma, recip_gamma};
use crate::weight::weight_function;
use crate::{Cx, NumError, NumericReport, SamplePoint};

/// Two consecutive shells below this fraction of the running total stop the sum.
pub const TAIL_RATIO: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct JacksonSum {
    pub values: Vec<Cx>,
    /// Last total degree `|ℓ|` summed.
    pub shells: usize,
    pub tail_ratio: f64,
}

/// All `ℓ ∈ ℤ_{≥0}^k` with `|ℓ| = d`.
fn compositions(d: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    if k == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in compositions(d - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `𝓜_J(Φ_{k,n} f)`: iterated residues at `t_a = z_{j_a} − κ ℓ_a`, summed over
/// shells `|ℓ| = 0, 1, …, max_l`. The pole of `Γ((t_a − z_{j_a})/κ)` has
/// residue `κ(−1)^ℓ/ℓ!` in `t_a`; everything else is evaluated in log space.
pub fn jackson_integral(
    j1: &[usize],
    sp: &SamplePoint,
    max_l: usize,
    f: &dyn Fn(&[Cx]) -> Result<Vec<Cx>, NumError>,
) -> Result<JacksonSum, NumError> {
    let k = j1.len();
    let n = sp.n();
    let kp = sp.kappa;
    let z = sp.zc();
    let sum_z: Cx = z.iter().sum();
    let pre_z = sum_z / kp * (-(k as f64) * sp.log_kappa + sp.log_p2);
    let t_coeff = (n as f64 * sp.log_kappa + sp.log_p1 - sp.log_p2) / kp;
    let kappa_k = kp.powi(k as i32);

    let mut total: Vec<Cx> = Vec::new();
    let mut quiet = 0;
    let mut ratio = f64::INFINITY;
    let mut shells = 0;
    for d in 0..=max_l {
        let mut shell: Vec<Cx> = Vec::new();
        for ell in compositions(d, k) {
            let t: Vec<Cx> = (0..k).map(|a| z[j1[a] - 1] - kp * ell[a] as f64).collect();
            let sum_t: Cx = t.iter().sum();
            let mut log = pre_z + t_coeff * sum_t;
            let mut mult = kappa_k;
            for a in 0..k {
                log -= log_factorial(ell[a]);
                if ell[a] % 2 == 1 {
                    mult = -mult;
                }
                for (c, zc) in z.iter().enumerate() {
                    if c + 1 != j1[a] {
                        log += log_gamma((t[a] - zc) / kp)?;
                    }
                }
                for b in 0..k {
                    if b != a {
                        mult *= recip_gamma((t[a] - t[b]) / kp);
                    }
                }
            }
            let w = mult * log.exp();
            let fv = f(&t)?;
            if shell.is_empty() {
                shell = vec![Cx::new(0.0, 0.0); fv.len()];
            }
            for (s, v) in shell.iter_mut().zip(&fv) {
                *s += w * v;
            }
        }
        if total.is_empty() {
            total = vec![Cx::new(0.0, 0.0); shell.len()];
        }
        for (t, s) in total.iter_mut().zip(&shell) {
            *t += s;
        }
        shells = d;
        let sn: f64 = shell.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        let tn: f64 = total.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        ratio = if tn == 0.0 { 0.0 } else { sn / tn };
        if d > 0 && ratio < TAIL_RATIO {
            quiet += 1;
            if quiet == 2 {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    if max_l > 0 && quiet < 2 && ratio >= TAIL_RATIO {
        return Err(NumError::TruncationNotConverged(ratio));
    }
    Ok(JacksonSum { values: total, shells, tail_ratio: ratio })
}

/// `Ψ_J = κ^{−k(n−k)−k} Σ_I 𝓜_J(Φ W_I) v_I`, components in lexicographic `I`.
/// `max_l = 0` keeps only the leading residue.
pub fn jackson_solution(j: &IndexSet, sp: &SamplePoint, max_l: usize) -> Result<Vec<Cx>, NumError> {
    let (k, n) = (j.i1.len(), j.n);
    if sp.n() != n {
        return Err(NumError::BadRange(format!("sample point has {} coordinates, need {n}", sp.n())));
    }
    let basis = enumerate_index_sets(k, n).map_err(|e| NumError::BadRange(e.to_string()))?;
    let z = sp.zc();
    let f = |t: &[Cx]| basis.iter().map(|i| weight_function(i, t, &z)).collect::<Result<Vec<_>, _>>();
    let s = jackson_integral(&j.i1, sp, max_l, &f)?;
    let norm = sp.kappa.powi(-((k * (n - k) + k) as i32));
    Ok(s.values.into_iter().map(|v| v * norm).collect())
}

/// `Ψ_P = Σ_J Ṕ(z_{σ_J}) Ψ_J`.
pub fn psi_class(p: &KClass, sp: &SamplePoint, max_l: usize) -> Result<Vec<Cx>, NumError> {
    let basis = enumerate_index_sets(p.k, p.n).map_err(|e| NumError::BadRange(e.to_string()))?;
    let ch = chern_character_eval(p, sp);
    let mut acc = vec![Cx::new(0.0, 0.0); basis.len()];
    for (h, c) in basis.iter().zip(ch) {
        if c == Cx::new(0.0, 0.0) {
            continue;
        }
        for (a, v) in acc.iter_mut().zip(jackson_solution(h, sp, max_l)?) {
            *a += c * v;
        }
    }
    Ok(acc)
}

/// `Ψ_J(…, z_a + κ, …) = K_a(z) Ψ_J(z)` at a numeric point.
pub fn qkz_shift_check(j: &IndexSet, a: usize, sp: &SamplePoint, max_l: usize, tol: f64) -> Result<NumericReport, NumError> {
    let (k, n) = (j.i1.len(), j.n);
    let ring = weight_ring(n);
    let ka = qkz_operator_in(&ring, n, k, a);
    let mut vals = sp.zc();
    vals.extend([sp.kappa, sp.p1(), sp.p2()]);
    let psi = jackson_solution(j, sp, max_l)?;
    let rhs: Vec<Cx> = (0..psi.len())
        .map(|r| (0..psi.len()).map(|c| ka.get(r, c).eval_complex(&vals) * psi[c]).sum())
        .collect();
    let lhs = jackson_solution(j, &sp.shift_z(a), max_l)?;
    Ok(NumericReport::new(format!("qkz-shift ({k},{n}) J={:?} a={a}", j.i1), "qKZ.0", lhs, rhs, tol))
}
