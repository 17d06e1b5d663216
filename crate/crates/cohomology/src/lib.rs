//! Torus-equivariant cohomology of `G(k,n)` through fixed-point localization.
//!
//! A class is the vector of its restrictions to the fixed points `pt_I`,
//! listed in the lexicographic order of `I_1`. Polynomials in the Chern
//! roots `γ_1 = (g1..gk)` localize by `g_j ↦ z_{σ_I(j)}`.

use std::sync::Arc;

use combinatorics::{enumerate_index_sets, IndexSet};
use exact_algebra::{Poly, RestrictedRational as RR, Ring};
use thiserror::Error;

mod classes;
mod polys;
mod quantum;
mod satake;

pub use classes::{
    c1_class, chern_e2_minus_flag, idempotent_basis, idempotent_representative, poincare_pairing, pairing_polynomial,
    reconstruct, representative, schubert_class, schubert_class_kempf_laksov, schubert_expansion, stab_expansion,
    stable_envelope_basis, stable_envelope_via_double_schubert, Flag,
};
pub use polys::{double_schubert, elementary, factorial_schur, factorial_schur_in, schubert_ring};
pub use quantum::{quantum_c1_matrix, schubert_order, stab_to_schubert, QBasis};
pub use satake::{satake_cohomology, wedge_pairing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohError {
    #[error("division is not exact")]
    DivisionNotExact,
    #[error("value is not a polynomial")]
    NotPolynomial,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("bad range: {0}")]
    BadRange(String),
}

/// `z1..zn`.
pub fn coh_ring(n: usize) -> Arc<Ring> {
    let v: Vec<(String, bool)> = (1..=n).map(|a| (format!("z{a}"), false)).collect();
    Ring::new(&v)
}

/// `g1..gk, z1..zn`: polynomial representatives in the Chern roots of `E_1`.
pub fn gamma_ring(k: usize, n: usize) -> Arc<Ring> {
    let mut v: Vec<(String, bool)> = (1..=k).map(|a| (format!("g{a}"), false)).collect();
    v.extend((1..=n).map(|a| (format!("z{a}"), false)));
    Ring::new(&v)
}

/// `z1..zn, q`.
pub fn quantum_ring(n: usize) -> Arc<Ring> {
    let mut v: Vec<(String, bool)> = (1..=n).map(|a| (format!("z{a}"), false)).collect();
    v.push(("q".into(), true));
    Ring::new(&v)
}

/// Localization vector of an equivariant class.
#[derive(Debug, Clone)]
pub struct CohClass {
    pub k: usize,
    pub n: usize,
    pub loc: Vec<RR>,
}

impl PartialEq for CohClass {
    fn eq(&self, o: &Self) -> bool {
        self.k == o.k && self.n == o.n && self.loc.iter().zip(&o.loc).all(|(a, b)| a == b)
    }
}

impl CohClass {
    pub fn basis(&self) -> Vec<IndexSet> {
        enumerate_index_sets(self.k, self.n).expect("valid shape")
    }

    pub fn from_fn(k: usize, n: usize, f: impl Fn(&IndexSet) -> RR) -> CohClass {
        let loc = enumerate_index_sets(k, n).expect("valid shape").iter().map(f).collect();
        CohClass { k, n, loc }
    }

    pub fn constant(k: usize, n: usize, c: i64) -> CohClass {
        let r = coh_ring(n);
        CohClass::from_fn(k, n, |_| RR::from_poly(Poly::int(&r, c)))
    }

    /// Localize a polynomial in `g1..gk, z1..zn`.
    pub fn from_gamma_poly(k: usize, n: usize, p: &Poly) -> CohClass {
        let r = coh_ring(n);
        CohClass::from_fn(k, n, |i| {
            let mut img: Vec<Poly> = i.i1.iter().map(|&a| Poly::var_idx(&r, a - 1)).collect();
            img.extend((0..n).map(|a| Poly::var_idx(&r, a)));
            RR::from_poly(p.subs(&img).expect("polynomial substitution"))
        })
    }

    fn zip(&self, o: &Self, f: impl Fn(&RR, &RR) -> RR) -> CohClass {
        assert_eq!((self.k, self.n), (o.k, o.n), "classes on different Grassmannians");
        CohClass { k: self.k, n: self.n, loc: self.loc.iter().zip(&o.loc).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn mul(&self, o: &Self) -> CohClass {
        self.zip(o, |a, b| a.mul(b))
    }

    pub fn add(&self, o: &Self) -> CohClass {
        self.zip(o, |a, b| a.add(b))
    }

    pub fn sub(&self, o: &Self) -> CohClass {
        self.zip(o, |a, b| a.sub(b))
    }

    pub fn neg(&self) -> CohClass {
        CohClass { k: self.k, n: self.n, loc: self.loc.iter().map(|a| a.neg()).collect() }
    }

    pub fn scale_poly(&self, p: &Poly) -> CohClass {
        CohClass { k: self.k, n: self.n, loc: self.loc.iter().map(|a| a.mul_poly(p)).collect() }
    }

    /// True when every localization is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.loc.iter().all(|x| x.to_poly().is_some())
    }
}

pub(crate) fn z_of(r: &Arc<Ring>, a: usize) -> Poly {
    Poly::var_idx(r, a - 1)
}
