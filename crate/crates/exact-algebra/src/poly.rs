use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;
use crate::ring::{same, Ring};
use crate::Q;

/// Exponent vector, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<i32>);

impl Mono {
    pub fn one(n: usize) -> Mono {
        Mono(vec![0; n])
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    fn mul(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    fn div(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<Ring>,
    terms: BTreeMap<Mono, Q>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Poly {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Poly {
        Poly::constant(ring, Q::one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Q) -> Poly {
        let mut p = Poly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Mono::one(ring.len()), c);
        }
        p
    }

    pub fn int(ring: &Arc<Ring>, c: i64) -> Poly {
        Poly::constant(ring, crate::q(c))
    }

    pub fn var(ring: &Arc<Ring>, name: &str) -> Result<Poly, AlgebraError> {
        let i = ring.index(name).ok_or_else(|| AlgebraError::UnknownVariable(name.into()))?;
        Ok(Poly::var_idx(ring, i))
    }

    /// Variable by name; panics if absent. For internal construction code.
    pub fn v(ring: &Arc<Ring>, name: &str) -> Poly {
        Poly::var(ring, name).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn var_idx(ring: &Arc<Ring>, i: usize) -> Poly {
        let mut e = vec![0; ring.len()];
        e[i] = 1;
        Poly::monomial(ring, Mono(e), Q::one())
    }

    pub fn monomial(ring: &Arc<Ring>, m: Mono, c: Q) -> Poly {
        assert_eq!(m.0.len(), ring.len());
        for (i, &e) in m.0.iter().enumerate() {
            assert!(e >= 0 || ring.is_laurent(i), "negative exponent on {}", ring.name(i));
        }
        let mut p = Poly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// `x^e` for a single variable; `e < 0` needs a Laurent variable.
    pub fn var_pow(ring: &Arc<Ring>, name: &str, e: i32) -> Result<Poly, AlgebraError> {
        let i = ring.index(name).ok_or_else(|| AlgebraError::UnknownVariable(name.into()))?;
        if e < 0 && !ring.is_laurent(i) {
            return Err(AlgebraError::NegativeExponent(name.into()));
        }
        let mut m = vec![0; ring.len()];
        m[i] = e;
        Ok(Poly::monomial(ring, Mono(m), Q::one()))
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    pub fn constant_value(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.0.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn leading(&self) -> Option<(&Mono, &Q)> {
        self.terms.iter().next_back()
    }

    /// Coefficient of an exact monomial.
    pub fn coeff(&self, m: &Mono) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.leading().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    pub fn min_degree_in(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.0[i]).min()
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.0.iter().all(|&e| e >= 0))
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn check(&self, o: &Poly) -> Result<(), AlgebraError> {
        if same(&self.ring, &o.ring) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn try_add(&self, o: &Poly) -> Result<Poly, AlgebraError> {
        self.check(o)?;
        let (mut big, small) = if self.terms.len() >= o.terms.len() { (self.clone(), o) } else { (o.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        Ok(big)
    }

    pub fn try_sub(&self, o: &Poly) -> Result<Poly, AlgebraError> {
        self.check(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), -c.clone());
        }
        Ok(r)
    }

    pub fn try_mul(&self, o: &Poly) -> Result<Poly, AlgebraError> {
        self.check(o)?;
        if let (Some(a), Some(b)) = (self.small_int_terms(), o.small_int_terms()) {
            let mut acc: HashMap<Mono, i128> = HashMap::with_capacity(a.len() * b.len());
            for (m1, c1) in &a {
                for (m2, c2) in &b {
                    *acc.entry(m1.mul(m2)).or_insert(0) += (*c1 as i128) * (*c2 as i128);
                }
            }
            let terms = acc
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(m, c)| (m, Q::from_integer(num_bigint::BigInt::from(c))))
                .collect();
            return Ok(Poly { ring: self.ring.clone(), terms });
        }
        let mut acc: HashMap<Mono, Q> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Q::zero) += c1 * c2;
            }
        }
        Ok(Poly { ring: self.ring.clone(), terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    /// Integer coefficients bounded so that products and sums stay in `i128`.
    fn small_int_terms(&self) -> Option<Vec<(&Mono, i64)>> {
        const BOUND: i64 = 1 << 40;
        self.terms
            .iter()
            .map(|(m, c)| {
                if !c.is_integer() {
                    return None;
                }
                c.numer().to_i64().filter(|v| v.abs() < BOUND).map(|v| (m, v))
            })
            .collect()
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn scale_int(&self, c: i64) -> Poly {
        self.scale(&crate::q(c))
    }

    /// Multiply by a monomial (exponents may be negative for Laurent slots).
    pub fn shift(&self, m: &Mono) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (k, c) in &self.terms {
            let e = k.mul(m);
            for (i, &x) in e.0.iter().enumerate() {
                assert!(x >= 0 || self.ring.is_laurent(i), "negative exponent on {}", self.ring.name(i));
            }
            out.terms.insert(e, c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.ring);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative powers only for monomials with invertible
    /// (Laurent) variables.
    pub fn powi(&self, e: i32) -> Result<Poly, AlgebraError> {
        if e >= 0 {
            return Ok(self.pow(e as u32));
        }
        if self.terms.len() != 1 {
            return Err(AlgebraError::DivisionNotExact);
        }
        let (m, c) = self.terms.iter().next().unwrap();
        for (i, &x) in m.0.iter().enumerate() {
            if x != 0 && !self.ring.is_laurent(i) {
                return Err(AlgebraError::NegativeExponent(self.ring.name(i).into()));
            }
        }
        let inv = Mono(m.0.iter().map(|x| -x * (-e)).collect());
        let c = c.recip();
        let mut cc = Q::one();
        for _ in 0..(-e) {
            cc *= &c;
        }
        Ok(Poly::monomial(&self.ring, inv, cc))
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(same(&self.ring, &d.ring), "ring mismatch");
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let n = self.ring.len();
        let lo = |p: &Poly| Mono((0..n).map(|i| p.min_degree_in(i).unwrap().min(0)).collect());
        let sp = lo(self);
        let neg = |m: &Mono| Mono(m.0.iter().map(|x| -x).collect());
        // for Laurent slots normalize the divisor to minimal exponent 0
        let dmin = Mono((0..n).map(|i| if self.ring.is_laurent(i) { d.min_degree_in(i).unwrap() } else { 0 }).collect());
        let d0 = d.shift_unchecked(&neg(&dmin));
        let p0 = self.shift_unchecked(&neg(&sp));
        let q0 = div_poly(&p0, &d0)?;
        let back = Mono(sp.0.iter().zip(&dmin.0).map(|(a, b)| a - b).collect());
        let q = q0.shift_unchecked(&back);
        for (i, x) in (0..n).map(|i| (i, q.min_degree_in(i).unwrap_or(0))) {
            if x < 0 && !self.ring.is_laurent(i) {
                return None;
            }
        }
        Some(q)
    }

    fn shift_unchecked(&self, m: &Mono) -> Poly {
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    /// `x_i d/dx_i`.
    pub fn euler(&self, i: usize) -> Poly {
        let mut r = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            r.add_term(m.clone(), c * crate::q(m.0[i] as i64));
        }
        r
    }

    pub fn derivative(&self, i: usize) -> Poly {
        let mut r = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            if m.0[i] != 0 {
                let mut e = m.clone();
                e.0[i] -= 1;
                r.add_term(e, c * crate::q(m.0[i] as i64));
            }
        }
        r
    }

    /// Rename variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Poly {
        let n = self.ring.len();
        assert_eq!(perm.len(), n);
        let mut r = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut e = vec![0; n];
            for i in 0..n {
                e[perm[i]] += m.0[i];
            }
            for (i, &x) in e.iter().enumerate() {
                assert!(x >= 0 || self.ring.is_laurent(i));
            }
            r.add_term(Mono(e), c.clone());
        }
        r
    }

    /// Substitute every variable by a polynomial of a common target ring.
    pub fn subs(&self, images: &[Poly]) -> Result<Poly, AlgebraError> {
        assert_eq!(images.len(), self.ring.len());
        let target = images.first().map(|p| p.ring.clone());
        let target = match target {
            Some(t) => t,
            None => {
                return Ok(Poly::constant(&self.ring, self.constant_value().unwrap_or_default()));
            }
        };
        for im in images {
            if !same(&im.ring, &target) {
                return Err(AlgebraError::RingMismatch);
            }
        }
        let mut cache: Vec<BTreeMap<i32, Poly>> = vec![BTreeMap::new(); images.len()];
        let mut out = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !cache[i].contains_key(&e) {
                    let p = images[i].powi(e)?;
                    cache[i].insert(e, p);
                }
                t = &t * &cache[i][&e];
            }
            out += &t;
        }
        Ok(out)
    }

    /// Substitute a single variable, leaving the rest unchanged.
    pub fn subs_var(&self, i: usize, image: &Poly) -> Result<Poly, AlgebraError> {
        self.check(image)?;
        let mut by_pow: BTreeMap<i32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let e = rest.0[i];
            rest.0[i] = 0;
            by_pow.entry(e).or_insert_with(|| Poly::zero(&self.ring)).add_term(rest, c.clone());
        }
        let mut out = Poly::zero(&self.ring);
        for (e, p) in by_pow {
            out += &(&p * &image.powi(e)?);
        }
        Ok(out)
    }

    /// Re-express in another ring that contains all variables used here.
    pub fn embed(&self, target: &Arc<Ring>) -> Result<Poly, AlgebraError> {
        let map: Vec<Option<usize>> = self.ring.names().iter().map(|n| target.index(n)).collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.0.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| AlgebraError::UnknownVariable(self.ring.name(i).into()))?;
                if x < 0 && !target.is_laurent(j) {
                    return Err(AlgebraError::NegativeExponent(target.name(j).into()));
                }
                e[j] = x;
            }
            out.add_term(Mono(e), c.clone());
        }
        Ok(out)
    }

    /// Invert every Laurent variable: `x -> x^{-1}`. Panics on non-Laurent use.
    pub fn invert_vars(&self) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = Mono(m.0.iter().map(|x| -x).collect());
            for (i, &x) in e.0.iter().enumerate() {
                assert!(x >= 0 || self.ring.is_laurent(i), "cannot invert {}", self.ring.name(i));
            }
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn eval(&self, vals: &[Q]) -> Result<Q, AlgebraError> {
        assert_eq!(vals.len(), self.ring.len());
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if vals[i].is_zero() && e < 0 {
                    return Err(AlgebraError::DivisionByZero);
                }
                let mut p = Q::one();
                for _ in 0..e.unsigned_abs() {
                    p *= &vals[i];
                }
                if e < 0 {
                    p = p.recip();
                }
                t *= p;
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn eval_complex(&self, vals: &[Complex64]) -> Complex64 {
        assert_eq!(vals.len(), self.ring.len());
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    t *= vals[i].powi(e);
                }
            }
            acc += t;
        }
        acc
    }

    /// Collect as a polynomial in variable `i` with coefficients in the same ring.
    pub fn coefficients_in(&self, i: usize) -> BTreeMap<i32, Poly> {
        let mut out: BTreeMap<i32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let e = rest.0[i];
            rest.0[i] = 0;
            out.entry(e).or_insert_with(|| Poly::zero(&self.ring)).add_term(rest, c.clone());
        }
        out
    }

    /// Drop every term whose exponent in variable `i` exceeds `max`.
    pub fn truncate_in(&self, i: usize, max: i32) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.0[i] <= max).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&Q) -> Q) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn parse(ring: &Arc<Ring>, s: &str) -> Result<Poly, AlgebraError> {
        crate::parse::parse(ring, s)
    }
}

/// Division of genuine polynomials; `None` unless the remainder is zero.
fn div_poly(p: &Poly, d: &Poly) -> Option<Poly> {
    let (lm, lc) = d.leading().map(|(m, c)| (m.clone(), c.clone()))?;
    let mut r = p.clone();
    let mut q = Poly::zero(&p.ring);
    while let Some((m, c)) = r.leading().map(|(m, c)| (m.clone(), c.clone())) {
        if !lm.divides(&m) {
            return None;
        }
        let tm = m.div(&lm);
        let tc = &c / &lc;
        for (dm, dc) in &d.terms {
            r.add_term(dm.mul(&tm), -(dc * &tc));
        }
        // guard against any rounding of the leading term (exact arithmetic, so it vanishes)
        debug_assert!(r.terms.get(&m).is_none());
        q.add_term(tm, tc);
    }
    Some(q)
}

fn fmt_coeff(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| if e == 1 { self.ring.name(i).to_string() } else { format!("{}^{}", self.ring.name(i), e) })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", fmt_coeff(&a))?;
            } else if a.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_coeff(&a), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $m(self, o: &Poly) -> Poly {
                self.$f(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                (&self).$f(&o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, o: &Poly) -> Poly {
                (&self).$f(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                self.$f(&o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, o: &Poly) {
        self.check(o).unwrap_or_else(|e| panic!("{e}"));
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, o: &Poly) {
        self.check(o).unwrap_or_else(|e| panic!("{e}"));
        for (m, c) in &o.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.map_coeffs(|c| -c.clone())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
