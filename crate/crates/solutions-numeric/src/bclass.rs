use cohomology::stable_envelope_basis;
use combinatorics::{enumerate_index_sets, IndexSet};
use ktheory::KClass;

use crate::gamma::log_gamma;
use crate::jackson::psi_class;
use crate::{Cx, NumError, NumericReport, SamplePoint};

/// `Ṕ(z_{σ_J}; z; κ)` at every fixed point: the localizations of `P` with
/// `Z_a ↦ ź_a`.
pub fn chern_character_eval(p: &KClass, sp: &SamplePoint) -> Vec<Cx> {
    let za = sp.acute();
    p.loc.iter().map(|l| l.eval_complex(&za)).collect()
}

/// `B(P; κ)|_{pt_J} = Ṕ(z_{σ_J}) κ^{((n−k)Σ_{J1}z − kΣ_{J2}z)/κ} ∏_{a∈J1,b∈J2} Γ(1 + (z_a − z_b)/κ)`.
pub fn b_class_restriction(p: &KClass, j: &IndexSet, sp: &SamplePoint) -> Result<Cx, NumError> {
    let (k, n) = (p.k, p.n);
    if j.n != n || j.i1.len() != k || sp.n() != n {
        return Err(NumError::BadRange(format!("J={:?} on ({k},{n})", j.i1)));
    }
    let z = sp.zc();
    let j2 = j.i2();
    let s1: Cx = j.i1.iter().map(|&a| z[a - 1]).sum();
    let s2: Cx = j2.iter().map(|&b| z[b - 1]).sum();
    let mut log = ((n - k) as f64 * s1 - k as f64 * s2) / sp.kappa * sp.log_kappa;
    for &a in &j.i1 {
        for &b in &j2 {
            let arg = Cx::new(1.0, 0.0) + (z[a - 1] - z[b - 1]) / sp.kappa;
            log += log_gamma(arg).map_err(|_| NumError::GammaPole(format!("z{a} − z{b}")))?;
        }
    }
    let ch = p.loc[j.rank()].eval_complex(&sp.acute());
    Ok(ch * log.exp())
}

pub fn b_class_vector(p: &KClass, sp: &SamplePoint) -> Result<Vec<Cx>, NumError> {
    enumerate_index_sets(p.k, p.n)
        .map_err(|e| NumError::BadRange(e.to_string()))?
        .iter()
        .map(|j| b_class_restriction(p, j, sp))
        .collect()
}

/// `S[I][J] = Stab_I|_{pt_J}` at the numeric point.
pub fn stab_restriction(k: usize, n: usize, sp: &SamplePoint) -> Result<Vec<Vec<Cx>>, NumError> {
    let (st, _) = stable_envelope_basis(k, n).map_err(|e| NumError::Algebra(e.to_string()))?;
    let z = sp.zc();
    Ok(st
        .iter()
        .map(|c| c.loc.iter().map(|r| r.numerator().eval_complex(&z) / r.denominator().eval_complex(&z)).collect())
        .collect())
}

/// Leading residue term of `Stab Ψ_P`, stripped of `p1^{c1(E1)/κ} p2^{c1(E2)/κ}`,
/// against the B-class localizations.
pub fn leading_term_check(p: &KClass, sp: &SamplePoint, tol: f64) -> Result<NumericReport, NumError> {
    let (k, n) = (p.k, p.n);
    let psi0 = psi_class(p, sp, 0)?;
    let stab = stab_restriction(k, n, sp)?;
    let z = sp.zc();
    let basis = enumerate_index_sets(k, n).map_err(|e| NumError::BadRange(e.to_string()))?;
    let mut lhs = Vec::new();
    for (jj, j) in basis.iter().enumerate() {
        let v: Cx = psi0.iter().zip(&stab).map(|(x, row)| x * row[jj]).sum();
        let s1: Cx = j.i1.iter().map(|&a| z[a - 1]).sum();
        let s2: Cx = j.i2().iter().map(|&b| z[b - 1]).sum();
        let pw = (s1 / sp.kappa * sp.log_p1 + s2 / sp.kappa * sp.log_p2).exp();
        lhs.push(v / pw);
    }
    let rhs = b_class_vector(p, sp)?;
    Ok(NumericReport::new(format!("leading term = B-class ({k},{n})"), "apj", lhs, rhs, tol))
}
