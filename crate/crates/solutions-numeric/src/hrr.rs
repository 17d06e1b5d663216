use std::f64::consts::PI;

use combinatorics::enumerate_index_sets;
use ktheory::{chi, chi_pairing, KClass};

use crate::bclass::{b_class_vector, chern_character_eval};
use crate::{i_unit, Cx, NumError, NumericReport, SamplePoint};

/// `F(t) = −(2πi/κ) t / (1 − exp(2πi t/κ))`, the κ-deformed Todd series.
pub fn todd_series(t: Cx, kappa: Cx) -> Cx {
    let c = 2.0 * PI * i_unit() / kappa;
    if t.norm() < 1e-8 {
        // 1 − (πi/κ)t − 2ζ(2)t²/κ²
        return Cx::new(1.0, 0.0) - PI * i_unit() / kappa * t - PI * PI / 3.0 * t * t / (kappa * kappa);
    }
    -c * t / (Cx::new(1.0, 0.0) - (c * t).exp())
}

/// `(−κ/2πi)^{dim} Σ_J α|_J / e(T_J)`, tangent weights `z_b − z_a`, `a ∈ J1`, `b ∈ J2`.
fn integrate(k: usize, n: usize, sp: &SamplePoint, alpha: &[Cx]) -> Result<Cx, NumError> {
    let z = sp.zc();
    let basis = enumerate_index_sets(k, n).map_err(|e| NumError::BadRange(e.to_string()))?;
    let mut acc = Cx::new(0.0, 0.0);
    for (j, a) in basis.iter().zip(alpha) {
        let mut e = Cx::new(1.0, 0.0);
        for &x in &j.i1 {
            for y in j.i2() {
                e *= z[y - 1] - z[x - 1];
            }
        }
        acc += a / e;
    }
    let dim = (k * (n - k)) as i32;
    Ok(acc * (-sp.kappa / (2.0 * PI * i_unit())).powi(dim))
}

/// `(−κ/2πi)^{dim} ∫ Ch^{(κ)}(V) Td^{(κ)}` against `χ^T(V)` at `Z = ź`.
pub fn hrr_check(v: &KClass, sp: &SamplePoint, tol: f64) -> Result<NumericReport, NumError> {
    let (k, n) = (v.k, v.n);
    let z = sp.zc();
    let ch = chern_character_eval(v, sp);
    let basis = enumerate_index_sets(k, n).map_err(|e| NumError::BadRange(e.to_string()))?;
    let alpha: Vec<Cx> = basis
        .iter()
        .zip(ch)
        .map(|(j, c)| {
            let mut td = Cx::new(1.0, 0.0);
            for &a in &j.i1 {
                for b in j.i2() {
                    td *= todd_series(z[b - 1] - z[a - 1], sp.kappa);
                }
            }
            c * td
        })
        .collect();
    let lhs = integrate(k, n, sp, &alpha)?;
    let rhs = chi(v).map_err(|e| NumError::Algebra(e.to_string()))?.eval_complex(&sp.acute());
    Ok(NumericReport::with_floor(format!("HRR ({k},{n})"), "HRR", vec![lhs], vec![rhs], tol, 1.0))
}

/// `(−κ/2πi)^{dim} ∫ B(V1; e^{−πi}κ) B(V2; κ)` against `χ^T(V1, V2)`.
pub fn hrr2_check(v1: &KClass, v2: &KClass, sp: &SamplePoint, tol: f64) -> Result<NumericReport, NumError> {
    let (k, n) = (v1.k, v1.n);
    let b1 = b_class_vector(v1, &sp.half_turn_kappa())?;
    let b2 = b_class_vector(v2, sp)?;
    let alpha: Vec<Cx> = b1.iter().zip(&b2).map(|(x, y)| x * y).collect();
    let lhs = integrate(k, n, sp, &alpha)?;
    let rhs = chi_pairing(v1, v2).map_err(|e| NumError::Algebra(e.to_string()))?.eval_complex(&sp.acute());
    Ok(NumericReport::with_floor(format!("HRR pairing ({k},{n})"), "HRR2", vec![lhs], vec![rhs], tol, 1.0))
}
