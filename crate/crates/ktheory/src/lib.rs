//! Torus-equivariant K-theory of `G(k,n)` through fixed-point localization.
//!
//! A class is the vector of its restrictions to the fixed points `pt_I`
//! (lex order of `I_1`), each a Laurent polynomial in `Z1..Zn`. Laurent
//! polynomials in the K-theoretic Chern roots `G1..Gk` of `E_1` localize by
//! `G_j ↦ Z_{I_1[j]}`; on `ℙ^{n-1}` the single root is called `X`.

use std::sync::Arc;

use combinatorics::{enumerate_index_sets, IndexSet};
use exact_algebra::{Poly, Ring};
use thiserror::Error;

mod exceptional;
mod formal;
mod grothendieck;
mod pairing;
mod satake;
mod stokes;

pub use exceptional::{
    apply_braid, check_exceptional, dual_basis, kapranov_basis, left_mutation, mutate, parse_braid, q_basis_labels, generate_q_basis,
    right_mutation, x_poly, BraidLetter, ExceptionalBasis, QKind, Side,
};
pub use formal::{cyclotomic, formal_data, smallest_prime_factor, spectrum_criterion, spectrum_simple, FormalData};
pub use grothendieck::{grothendieck_determinant, grothendieck_polynomial, groth_ring, schubert_structure_sheaf};
pub use pairing::{canonical_operator, chi, chi_pairing, dagger, dual_involution, gram_matrix, interpolate};
pub use satake::{satake_exterior_basis, satake_k, schur_jacobi_trudi};
pub use stokes::{
    canonical_checks, canonical_eigenvalues, eigen_elementary, markov_checks, pencil_elementary, wedge_stokes_checks, minor_matrix, stokes_from_gram, stokes_matrices,
    trace_wedge,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KError {
    #[error("value is not a Laurent polynomial")]
    NotLaurentPolynomial,
    #[error("division is not exact")]
    DivisionNotExact,
    #[error("basis is not exceptional: {0}")]
    NotExceptional(String),
    #[error("bad kind: {0}")]
    BadKind(String),
    #[error("bad range: {0}")]
    BadRange(String),
    #[error("entries are not symmetric integer Laurent polynomials: {0}")]
    NotSymmetricLaurent(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

/// `Z1..Zn`, all invertible.
pub fn k_ring(n: usize) -> Arc<Ring> {
    let v: Vec<(String, bool)> = (1..=n).map(|a| (format!("Z{a}"), true)).collect();
    Ring::new(&v)
}

/// `G1..Gk, Z1..Zn`: representatives in the K-theoretic Chern roots of `E_1`.
pub fn k_gamma_ring(k: usize, n: usize) -> Arc<Ring> {
    let mut v: Vec<(String, bool)> = (1..=k).map(|a| (format!("G{a}"), true)).collect();
    v.extend((1..=n).map(|a| (format!("Z{a}"), true)));
    Ring::new(&v)
}

/// `X, Z1..Zn` for classes on `ℙ^{n-1}`.
pub fn p_ring(n: usize) -> Arc<Ring> {
    let mut v: Vec<(String, bool)> = vec![("X".into(), true)];
    v.extend((1..=n).map(|a| (format!("Z{a}"), true)));
    Ring::new(&v)
}

pub(crate) fn zv(r: &Arc<Ring>, a: usize) -> Poly {
    Poly::var_idx(r, a - 1)
}

/// Elementary symmetric polynomial of a list of values.
pub(crate) fn elementary(ring: &Arc<Ring>, vals: &[Poly], j: usize) -> Poly {
    let mut e = vec![Poly::zero(ring); j + 1];
    e[0] = Poly::one(ring);
    for v in vals {
        for i in (1..=j).rev() {
            let t = &e[i - 1] * v;
            e[i] += &t;
        }
    }
    e.swap_remove(j)
}

/// Localization vector of a K-theory class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KClass {
    pub k: usize,
    pub n: usize,
    pub loc: Vec<Poly>,
}

impl KClass {
    pub fn basis(&self) -> Vec<IndexSet> {
        enumerate_index_sets(self.k, self.n).expect("valid shape")
    }

    pub fn from_fn(k: usize, n: usize, f: impl Fn(&IndexSet) -> Poly) -> KClass {
        let loc = enumerate_index_sets(k, n).expect("valid shape").iter().map(f).collect();
        KClass { k, n, loc }
    }

    pub fn constant(k: usize, n: usize, c: i64) -> KClass {
        let r = k_ring(n);
        KClass::from_fn(k, n, |_| Poly::int(&r, c))
    }

    /// Localize a Laurent polynomial in `G1..Gk, Z1..Zn`.
    pub fn from_gamma_poly(k: usize, n: usize, p: &Poly) -> KClass {
        let r = k_ring(n);
        KClass::from_fn(k, n, |i| {
            let mut img: Vec<Poly> = i.i1.iter().map(|&a| zv(&r, a)).collect();
            img.extend((1..=n).map(|a| zv(&r, a)));
            p.subs(&img).expect("Laurent substitution")
        })
    }

    /// Class on `ℙ^{n-1}` from a Laurent polynomial in `X, Z1..Zn`.
    pub fn from_p_poly(n: usize, p: &Poly) -> KClass {
        let r = k_ring(n);
        KClass::from_fn(1, n, |i| {
            let mut img = vec![zv(&r, i.i1[0])];
            img.extend((1..=n).map(|a| zv(&r, a)));
            p.subs(&img).expect("Laurent substitution")
        })
    }

    fn zip(&self, o: &Self, f: impl Fn(&Poly, &Poly) -> Poly) -> KClass {
        assert_eq!((self.k, self.n), (o.k, o.n), "classes on different Grassmannians");
        KClass { k: self.k, n: self.n, loc: self.loc.iter().zip(&o.loc).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn mul(&self, o: &Self) -> KClass {
        self.zip(o, |a, b| a * b)
    }

    pub fn add(&self, o: &Self) -> KClass {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Self) -> KClass {
        self.zip(o, |a, b| a - b)
    }

    pub fn neg(&self) -> KClass {
        KClass { k: self.k, n: self.n, loc: self.loc.iter().map(|a| -a).collect() }
    }

    /// Multiply by an element of `R(T) = ℤ[Z^{±1}]`.
    pub fn scale(&self, rho: &Poly) -> KClass {
        KClass { k: self.k, n: self.n, loc: self.loc.iter().map(|a| a * rho).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.loc.iter().all(|p| p.is_zero())
    }
}
