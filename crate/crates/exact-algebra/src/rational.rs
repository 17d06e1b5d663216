use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::poly::Poly;
use crate::ring::Ring;
use crate::Q;

/// Primitive integer linear form `Σ a_i v_i + c`, sign-normalized so the
/// first nonzero variable coefficient is positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    coeffs: Vec<i64>,
    constant: i64,
}

impl LinearForm {
    /// Split `p = scale * form`. Constants are rejected.
    pub fn from_poly(p: &Poly) -> Result<(Q, LinearForm), AlgebraError> {
        let n = p.ring().len();
        let mut lcm = BigInt::one();
        for (m, c) in p.terms() {
            if m.degree() > 1 || m.0.iter().any(|&e| e != 0 && e != 1) {
                return Err(AlgebraError::NotLinear);
            }
            lcm = lcm.lcm(c.denom());
        }
        let mut coeffs = vec![BigInt::zero(); n];
        let mut constant = BigInt::zero();
        for (m, c) in p.terms() {
            let v = (c * Q::from_integer(lcm.clone())).to_integer();
            match m.0.iter().position(|&e| e == 1) {
                Some(i) => coeffs[i] = v,
                None => constant = v,
            }
        }
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(AlgebraError::NotLinear);
        }
        let mut g = constant.abs();
        for c in &coeffs {
            g = g.gcd(c);
        }
        let lead = coeffs.iter().find(|c| !c.is_zero()).unwrap();
        if lead.is_negative() {
            g = -g;
        }
        let to_i64 = |b: &BigInt| -> i64 { i64::try_from(&(b / &g)).expect("linear form coefficient overflow") };
        let form = LinearForm { coeffs: coeffs.iter().map(to_i64).collect(), constant: to_i64(&constant) };
        let scale = Q::new(g, lcm);
        Ok((scale, form))
    }

    pub fn to_poly(&self, ring: &Arc<Ring>) -> Poly {
        let mut p = Poly::int(ring, self.constant);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a != 0 {
                p += &Poly::var_idx(ring, i).scale_int(a);
            }
        }
        p
    }
}

/// Rational function whose denominator is a product of linear forms.
#[derive(Clone)]
pub struct RestrictedRational {
    num: Poly,
    den: BTreeMap<LinearForm, u32>,
}

impl fmt::Debug for RestrictedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RR({self})")
    }
}

impl RestrictedRational {
    pub fn from_poly(p: Poly) -> Self {
        RestrictedRational { num: p, den: BTreeMap::new() }
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Self::from_poly(Poly::zero(ring))
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::from_poly(Poly::one(ring))
    }

    /// `num / Π den_i`, each `den_i` a nonzero linear or constant polynomial.
    pub fn new(num: Poly, dens: &[Poly]) -> Result<Self, AlgebraError> {
        let mut r = Self::from_poly(num);
        for d in dens {
            r = r.div_linear(d)?;
        }
        Ok(r)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.num.ring()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator_factors(&self) -> impl Iterator<Item = (&LinearForm, u32)> {
        self.den.iter().map(|(f, m)| (f, *m))
    }

    pub fn denominator(&self) -> Poly {
        let mut d = Poly::one(self.ring());
        for (f, m) in &self.den {
            d = &d * &f.to_poly(self.ring()).pow(*m);
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn to_poly(&self) -> Option<Poly> {
        self.den.is_empty().then(|| self.num.clone())
    }

    /// Divide by a linear (or nonzero constant) polynomial.
    pub fn div_linear(&self, d: &Poly) -> Result<Self, AlgebraError> {
        if let Some(c) = d.constant_value() {
            if c.is_zero() {
                return Err(AlgebraError::DivisionByZero);
            }
            return Ok(RestrictedRational { num: self.num.scale(&c.recip()), den: self.den.clone() });
        }
        let (s, f) = LinearForm::from_poly(d)?;
        let mut den = self.den.clone();
        *den.entry(f).or_insert(0) += 1;
        Ok(RestrictedRational { num: self.num.scale(&s.recip()), den }.reduce())
    }

    /// Cancel every denominator factor that divides the numerator.
    pub fn reduce(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero(self.ring());
        }
        let mut num = self.num.clone();
        let mut den = BTreeMap::new();
        for (f, &m) in &self.den {
            let fp = f.to_poly(self.ring());
            let mut left = m;
            while left > 0 {
                match num.div_exact(&fp) {
                    Some(qq) => {
                        num = qq;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                den.insert(f.clone(), left);
            }
        }
        RestrictedRational { num, den }
    }

    fn common(&self, o: &Self) -> (Poly, Poly, BTreeMap<LinearForm, u32>) {
        let mut den = self.den.clone();
        for (f, &m) in &o.den {
            let e = den.entry(f.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |r: &Self| {
            let mut p = r.num.clone();
            for (f, &m) in &den {
                let have = r.den.get(f).copied().unwrap_or(0);
                if m > have {
                    p = &p * &f.to_poly(r.ring()).pow(m - have);
                }
            }
            p
        };
        (lift(self), lift(o), den)
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, AlgebraError> {
        if !Arc::ptr_eq(self.ring(), o.ring()) && **self.ring() != **o.ring() {
            return Err(AlgebraError::RingMismatch);
        }
        let (a, b, den) = self.common(o);
        Ok(RestrictedRational { num: &a + &b, den }.reduce())
    }

    pub fn add(&self, o: &Self) -> Self {
        self.try_add(o).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn neg(&self) -> Self {
        RestrictedRational { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut den = self.den.clone();
        for (f, &m) in &o.den {
            *den.entry(f.clone()).or_insert(0) += m;
        }
        RestrictedRational { num: &self.num * &o.num, den }.reduce()
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        RestrictedRational { num: &self.num * p, den: self.den.clone() }.reduce()
    }

    pub fn scale(&self, c: &Q) -> Self {
        RestrictedRational { num: self.num.scale(c), den: self.den.clone() }.reduce()
    }

    /// Apply a substitution to numerator and denominator alike.
    pub fn subs(&self, images: &[Poly]) -> Result<Self, AlgebraError> {
        let num = self.num.subs(images)?;
        let mut out = Self::from_poly(num);
        for (f, &m) in &self.den {
            let d = f.to_poly(self.ring()).subs(images)?;
            for _ in 0..m {
                out = out.div_linear(&d)?;
            }
        }
        Ok(out)
    }

    pub fn eval(&self, vals: &[Q]) -> Result<Q, AlgebraError> {
        let d = self.denominator().eval(vals)?;
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.num.eval(vals)? / d)
    }

    /// Equality as rational functions.
    pub fn equals(&self, o: &Self) -> bool {
        let (a, b, _) = self.common(o);
        a == b
    }
}

impl PartialEq for RestrictedRational {
    fn eq(&self, o: &Self) -> bool {
        self.equals(o)
    }
}

impl fmt::Display for RestrictedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let ds: Vec<String> = self
            .den
            .iter()
            .map(|(lf, m)| {
                let s = format!("({})", lf.to_poly(self.ring()));
                if *m == 1 {
                    s
                } else {
                    format!("{s}^{m}")
                }
            })
            .collect();
        write!(f, "({})/({})", self.num, ds.join("*"))
    }
}
