//! Numeric side of the hypergeometric solutions: Jackson residue sums,
//! B-class restrictions, κ-deformed HRR, exact Levelt coefficients and the
//! determinantal identity between `ℙ^{n−1}` and `G(k,n)` solutions.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

mod bclass;
mod detprop;
mod gamma;
mod hrr;
mod jackson;
mod levelt;
mod weight;

pub use bclass::{b_class_restriction, b_class_vector, chern_character_eval, leading_term_check, stab_restriction};
pub use detprop::{default_factors, verify_detprop, DetpropOptions};
pub use gamma::{gamma, log_gamma, log_factorial, recip_gamma};
pub use hrr::{hrr2_check, hrr_check, todd_series};
pub use jackson::{jackson_integral, jackson_solution, psi_class, qkz_shift_check, JacksonSum};
pub use levelt::{levelt_series, LeveltSeries};
pub use weight::{u_function, weight_function};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumError {
    #[error("Gamma pole at {0}")]
    PoleAt(f64),
    #[error("coinciding integration variables")]
    CoincidingT,
    #[error("truncation not converged: tail ratio {0:e}")]
    TruncationNotConverged(f64),
    #[error("Gamma pole in the B-class at {0}")]
    GammaPole(String),
    #[error("resonant z: {0}")]
    ResonantZ(String),
    #[error("bad range: {0}")]
    BadRange(String),
    #[error("algebra: {0}")]
    Algebra(String),
}

pub type Cx = Complex64;

pub fn i_unit() -> Cx {
    Cx::new(0.0, 1.0)
}

/// Equivariant parameters `z`, quantum parameters through their logarithms,
/// and `κ` with a chosen `log κ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SamplePoint {
    pub z: Vec<f64>,
    #[serde(serialize_with = "ser_cx")]
    pub kappa: Cx,
    #[serde(serialize_with = "ser_cx")]
    pub log_kappa: Cx,
    #[serde(serialize_with = "ser_cx")]
    pub log_p1: Cx,
    #[serde(serialize_with = "ser_cx")]
    pub log_p2: Cx,
}

impl SamplePoint {
    /// `p1 = 1/q`, `p2 = 1`, `κ = −1` with `arg(−1) = (2ℓ+1)π`.
    pub fn specpar(z: &[f64], q: f64, branch: i32) -> SamplePoint {
        SamplePoint {
            z: z.to_vec(),
            kappa: Cx::new(-1.0, 0.0),
            log_kappa: Cx::new(0.0, PI * (2 * branch + 1) as f64),
            log_p1: Cx::from(-q.ln()),
            log_p2: Cx::from(0.0),
        }
    }

    pub fn n(&self) -> usize {
        self.z.len()
    }

    pub fn p1(&self) -> Cx {
        self.log_p1.exp()
    }

    pub fn p2(&self) -> Cx {
        self.log_p2.exp()
    }

    pub fn zc(&self) -> Vec<Cx> {
        self.z.iter().map(|&x| Cx::from(x)).collect()
    }

    /// `ź_a = exp(−2πi z_a/κ)`.
    pub fn acute(&self) -> Vec<Cx> {
        self.z.iter().map(|&x| acute(Cx::from(x), self.kappa)).collect()
    }

    /// `p1 ↦ e^{iθ} p1` on the chosen logarithm.
    pub fn rotate_p1(&self, theta: f64) -> SamplePoint {
        SamplePoint { log_p1: self.log_p1 + i_unit() * theta, ..self.clone() }
    }

    /// `κ ↦ e^{−πi} κ`.
    pub fn half_turn_kappa(&self) -> SamplePoint {
        SamplePoint { kappa: -self.kappa, log_kappa: self.log_kappa - i_unit() * PI, ..self.clone() }
    }

    /// `z_a ↦ z_a + κ` (real κ only).
    pub fn shift_z(&self, a: usize) -> SamplePoint {
        let mut z = self.z.clone();
        z[a - 1] += self.kappa.re;
        SamplePoint { z, ..self.clone() }
    }

    /// `x^s` on the branch `exp(s log x)` given `log x`.
    pub fn power(log_base: Cx, s: Cx) -> Cx {
        (s * log_base).exp()
    }
}

pub fn acute(x: Cx, kappa: Cx) -> Cx {
    (-2.0 * PI * i_unit() * x / kappa).exp()
}

/// Numeric verification record.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericReport {
    pub identity: String,
    pub anchor: String,
    #[serde(serialize_with = "ser_cx_vec")]
    pub lhs: Vec<Cx>,
    #[serde(serialize_with = "ser_cx_vec")]
    pub rhs: Vec<Cx>,
    pub max_rel_err: f64,
    pub tol: f64,
    pub passed: bool,
}

impl NumericReport {
    pub fn new(identity: impl Into<String>, anchor: impl Into<String>, lhs: Vec<Cx>, rhs: Vec<Cx>, tol: f64) -> NumericReport {
        Self::with_floor(identity, anchor, lhs, rhs, tol, 0.0)
    }

    /// Errors are measured against `max(|lhs|, |rhs|, floor)`; a floor of 1
    /// suits values of integral Laurent polynomials at unit-modulus points,
    /// where exact zeros occur.
    pub fn with_floor(identity: impl Into<String>, anchor: impl Into<String>, lhs: Vec<Cx>, rhs: Vec<Cx>, tol: f64, floor: f64) -> NumericReport {
        let max_rel_err = max_rel_err(&lhs, &rhs, floor);
        NumericReport { identity: identity.into(), anchor: anchor.into(), lhs, rhs, max_rel_err, tol, passed: max_rel_err <= tol }
    }
}

/// Componentwise relative error; components far below the vector scale are
/// measured against `1e-12` of that scale, or against `floor`.
pub fn max_rel_err(a: &[Cx], b: &[Cx], floor: f64) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let scale = b.iter().chain(a).map(|x| x.norm()).fold(0.0, f64::max);
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = (x - y).norm();
            let m = x.norm().max(y.norm()).max(1e-12 * scale).max(floor);
            if m == 0.0 {
                0.0
            } else {
                d / m
            }
        })
        .fold(0.0, |acc, e| if e.is_nan() || acc.is_nan() { f64::NAN } else { acc.max(e) })
}

fn ser_cx<S: serde::Serializer>(c: &Cx, s: S) -> Result<S::Ok, S::Error> {
    [c.re, c.im].serialize(s)
}

fn ser_cx_vec<S: serde::Serializer>(v: &[Cx], s: S) -> Result<S::Ok, S::Error> {
    v.iter().map(|c| [c.re, c.im]).collect::<Vec<_>>().serialize(s)
}
