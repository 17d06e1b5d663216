//! qKZ and dynamical operators on weight spaces of `(ℂ²)^{⊗n}`, exterior
//! powers, and the checks relating the `(1,n)` and `(k,n)` systems.

use std::sync::Arc;

use combinatorics::{enumerate_index_sets, IndexSet};
use exact_algebra::{Matrix, Poly, Ring};
use thiserror::Error;

mod dynamical;
mod exterior;
mod qkz;
mod rmatrix;
mod verify;

pub use dynamical::{dynamical_operator, dynamical_operator_in, q_operator};
pub use exterior::{exterior_power_matrix, satake_theta, ExteriorMode};
pub use qkz::{qkz_operator, qkz_operator_full, qkz_operator_in, r_action};
pub use rmatrix::{r_matrix, r_matrix_full};
pub use verify::{verify_compatibility, verify_compatibility_pair, verify_satake_gauge};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("bad range: {0}")]
    BadRange(String),
    #[error("bad exterior mode `{0}`")]
    BadMode(String),
}

/// `z1..zn, kp, p1^{±1}, p2^{±1}`.
pub fn weight_ring(n: usize) -> Arc<Ring> {
    let mut v: Vec<(String, bool)> = (1..=n).map(|a| (format!("z{a}"), false)).collect();
    v.push(("kp".into(), false));
    v.push(("p1".into(), true));
    v.push(("p2".into(), true));
    Ring::new(&v)
}

pub fn z(ring: &Arc<Ring>, a: usize) -> Poly {
    Poly::v(ring, &format!("z{a}"))
}

pub fn kappa(ring: &Arc<Ring>) -> Poly {
    Poly::v(ring, "kp")
}

pub fn sum_z(ring: &Arc<Ring>, n: usize) -> Poly {
    let mut s = Poly::zero(ring);
    for a in 1..=n {
        s += &z(ring, a);
    }
    s
}

/// Operator on the `(k, n−k)` weight space in the lexicographic basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorMatrix {
    pub k: usize,
    pub n: usize,
    pub matrix: Matrix,
}

impl OperatorMatrix {
    pub fn basis(&self) -> Vec<IndexSet> {
        enumerate_index_sets(self.k, self.n).expect("valid shape")
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    pub fn entries(&self) -> Vec<Vec<String>> {
        self.matrix.to_strings()
    }
}

/// `z_a ↦ z_a + κ`.
pub fn shift_z(m: &Matrix, a: usize) -> Matrix {
    let r = m.ring().clone();
    let i = r.index(&format!("z{a}")).expect("z variable");
    let img = &z(&r, a) + &kappa(&r);
    m.map(|p| p.subs_var(i, &img).expect("polynomial substitution"))
}

/// `p1 ↦ −p1`.
pub fn flip_p1(m: &Matrix) -> Matrix {
    let r = m.ring().clone();
    let i = r.index("p1").expect("p1");
    let img = -Poly::v(&r, "p1");
    m.map(|p| p.subs_var(i, &img).expect("Laurent substitution"))
}

/// `κ p ∂_p` applied entrywise.
pub fn kappa_euler(m: &Matrix, var: &str) -> Matrix {
    let r = m.ring().clone();
    let i = r.index(var).expect("variable");
    let k = kappa(&r);
    m.map(|p| &p.euler(i) * &k)
}
