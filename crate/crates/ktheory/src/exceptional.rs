use std::str::FromStr;

use combinatorics::{binomial, enumerate_index_sets};
use exact_algebra::{Matrix, Poly};

use crate::pairing::{chi_pairing, gram_matrix};
use crate::satake::schur_jacobi_trudi;
use crate::{elementary, k_ring, p_ring, zv, KClass, KError};

/// Ordered basis with unitriangular Gram matrix, `χ(e_i,e_i)=1` and
/// `χ(e_j,e_i)=0` for `j > i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalBasis {
    pub k: usize,
    pub n: usize,
    pub elements: Vec<KClass>,
    /// How the basis was produced, e.g. `kapranov(2,4)` or `t1 t2^-1 · …`.
    pub provenance: String,
}

impl ExceptionalBasis {
    /// Wrap a list of classes after verifying exceptionality.
    pub fn new(elements: Vec<KClass>, provenance: impl Into<String>) -> Result<ExceptionalBasis, KError> {
        let (k, n) = elements.first().map(|e| (e.k, e.n)).ok_or_else(|| KError::NotExceptional("empty".into()))?;
        if elements.len() != binomial(n, k) || elements.iter().any(|e| (e.k, e.n) != (k, n)) {
            return Err(KError::NotExceptional(format!("need {} classes on G({k},{n})", binomial(n, k))));
        }
        check_exceptional(&elements)?;
        Ok(ExceptionalBasis { k, n, elements, provenance: provenance.into() })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn gram(&self) -> Result<Matrix, KError> {
        gram_matrix(&self.elements)
    }
}

/// `Ok` iff the Gram matrix of the list is upper unitriangular.
pub fn check_exceptional(elements: &[KClass]) -> Result<(), KError> {
    for (i, e) in elements.iter().enumerate() {
        if !chi_pairing(e, e)?.is_one() {
            return Err(KError::NotExceptional(format!("χ(e{0},e{0}) ≠ 1", i + 1)));
        }
        for (j, f) in elements.iter().enumerate().skip(i + 1) {
            let c = chi_pairing(f, e)?;
            if !c.is_zero() {
                return Err(KError::NotExceptional(format!("χ(e{},e{}) = {c}", j + 1, i + 1)));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl FromStr for Side {
    type Err = KError;

    fn from_str(s: &str) -> Result<Side, KError> {
        match s {
            "left" | "l" => Ok(Side::Left),
            "right" | "r" => Ok(Side::Right),
            _ => Err(KError::BadKind(s.into())),
        }
    }
}

/// `𝕃_e f = f − χ(e,f) e`.
pub fn left_mutation(e: &KClass, f: &KClass) -> Result<KClass, KError> {
    Ok(f.sub(&e.scale(&chi_pairing(e, f)?)))
}

/// `ℝ_e f = f − χ(f,e)* e`.
pub fn right_mutation(e: &KClass, f: &KClass) -> Result<KClass, KError> {
    Ok(f.sub(&e.scale(&chi_pairing(f, e)?.invert_vars())))
}

/// `𝕃_i`: `(…, 𝕃_{e_i}e_{i+1}, e_i, …)`; `ℝ_i`: `(…, e_{i+1}, ℝ_{e_{i+1}}e_i, …)`.
/// `i` is 1-based.
pub fn mutate(basis: &ExceptionalBasis, i: usize, side: Side) -> Result<ExceptionalBasis, KError> {
    let out = mutate_unchecked(basis, i, side)?;
    check_exceptional(&out.elements)?;
    Ok(out)
}

fn mutate_unchecked(basis: &ExceptionalBasis, i: usize, side: Side) -> Result<ExceptionalBasis, KError> {
    if i == 0 || i >= basis.len() {
        return Err(KError::BadRange(format!("mutation index {i} for a basis of length {}", basis.len())));
    }
    let (a, b) = (&basis.elements[i - 1], &basis.elements[i]);
    let (x, y) = match side {
        Side::Left => (left_mutation(a, b)?, a.clone()),
        Side::Right => (b.clone(), right_mutation(b, a)?),
    };
    let mut elements = basis.elements.clone();
    elements[i - 1] = x;
    elements[i] = y;
    let tag = match side {
        Side::Left => "L",
        Side::Right => "R",
    };
    Ok(ExceptionalBasis { k: basis.k, n: basis.n, elements, provenance: format!("{tag}{i}·{}", basis.provenance) })
}

/// Braid generator `τ_i` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidLetter {
    pub gen: usize,
    pub inverse: bool,
}

/// Parse words like `"t1 t2^-1 t1"`.
pub fn parse_braid(s: &str) -> Result<Vec<BraidLetter>, KError> {
    s.split_whitespace()
        .map(|tok| {
            let body = tok.strip_prefix('t').ok_or_else(|| KError::BadKind(tok.into()))?;
            let (num, inverse) = match body.strip_suffix("^-1") {
                Some(b) => (b, true),
                None => (body, false),
            };
            let gen = num.parse::<usize>().map_err(|_| KError::BadKind(tok.into()))?;
            Ok(BraidLetter { gen, inverse })
        })
        .collect()
}

/// Apply a braid word, rightmost letter first; `τ_i` acts as `ℝ_{N−i}` and
/// `τ_i^{-1}` as `𝕃_{N−i}`.
pub fn apply_braid(basis: &ExceptionalBasis, word: &[BraidLetter]) -> Result<ExceptionalBasis, KError> {
    let nn = basis.len();
    let mut cur = basis.clone();
    for l in word.iter().rev() {
        if l.gen == 0 || l.gen >= nn {
            return Err(KError::BadRange(format!("generator t{} for length {nn}", l.gen)));
        }
        let side = if l.inverse { Side::Left } else { Side::Right };
        cur = mutate_unchecked(&cur, nn - l.gen, side)?;
    }
    check_exceptional(&cur.elements)?;
    Ok(cur)
}

/// `β = τ_1(τ_2τ_1)…(τ_{N−1}…τ_1)`.
fn beta(nn: usize) -> Vec<BraidLetter> {
    let mut w = Vec::new();
    for top in 1..nn {
        for g in (1..=top).rev() {
            w.push(BraidLetter { gen: g, inverse: false });
        }
    }
    w
}

/// Left dual `β ε` or right dual `β^{-1} ε`.
pub fn dual_basis(basis: &ExceptionalBasis, side: Side) -> Result<ExceptionalBasis, KError> {
    let mut w = beta(basis.len());
    if side == Side::Right {
        w.reverse();
        for l in &mut w {
            l.inverse = true;
        }
    }
    let mut out = apply_braid(basis, &w)?;
    out.provenance = format!("{}dual({})", if side == Side::Left { "left" } else { "right" }, basis.provenance);
    Ok(out)
}

/// `(Σ_λ E_1^*)_λ`, optionally twisted by `ℒ = (∏Γ_1)^{1−k}`, in lex order of `I`.
pub fn kapranov_basis(k: usize, n: usize, twisted: bool) -> Result<ExceptionalBasis, KError> {
    if k == 0 || k > n {
        return Err(KError::BadRange(format!("(k,n)=({k},{n})")));
    }
    let r = k_ring(n);
    let elements = enumerate_index_sets(k, n)
        .expect("valid shape")
        .iter()
        .map(|lam_idx| {
            let lam = lam_idx.partition();
            KClass::from_fn(k, n, |i| {
                let inv: Vec<Poly> = i.i1.iter().map(|&a| zv(&r, a).powi(-1).expect("Laurent")).collect();
                let s = schur_jacobi_trudi(&lam, &inv);
                if twisted {
                    let prod = i.i1.iter().fold(Poly::one(&r), |acc, &a| &acc * &zv(&r, a));
                    &s * &prod.powi(1 - k as i32).expect("monomial")
                } else {
                    s
                }
            })
        })
        .collect();
    let tag = if twisted { "kapranov~" } else { "kapranov" };
    ExceptionalBasis::new(elements, format!("{tag}({k},{n})"))
}

/// `X^m(h) = Σ_{i=0}^{m−h} (−1)^i e_i(Z) X^{m−i}` in `X, Z1..Zn`.
pub fn x_poly(n: usize, m: i32, h: i32) -> Result<Poly, KError> {
    if m - h < 0 || m - h > n as i32 {
        return Err(KError::BadRange(format!("X^{m}({h}) on n={n}")));
    }
    let r = p_ring(n);
    let zs: Vec<Poly> = (1..=n).map(|a| Poly::var_idx(&r, a)).collect();
    let x = Poly::var_idx(&r, 0);
    let mut p = Poly::zero(&r);
    for i in 0..=(m - h) {
        let t = &elementary(&r, &zs, i as usize) * &x.powi(m - i).expect("Laurent");
        if i % 2 == 0 {
            p += &t;
        } else {
            p -= &t;
        }
    }
    Ok(p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QKind {
    Prime,
    DoublePrime,
}

impl FromStr for QKind {
    type Err = KError;

    fn from_str(s: &str) -> Result<QKind, KError> {
        match s {
            "prime" | "qprime" => Ok(QKind::Prime),
            "doubleprime" | "qdoubleprime" => Ok(QKind::DoublePrime),
            _ => Err(KError::BadKind(s.into())),
        }
    }
}

/// Objects `∧^j T(m)` of the collection, as pairs `(j, m)`; `j = 0` is `𝒪(m)`.
pub fn q_basis_labels(n: usize, ell: i32, kind: QKind) -> Vec<(usize, i32)> {
    let ni = n as i32;
    let mut out = Vec::new();
    match (n % 2, kind) {
        (1, QKind::Prime) => {
            let c = -ell - (ni - 1) / 2;
            for j in 0..=(n - 1) / 2 {
                out.push((0, c + j as i32));
                if j < (n - 1) / 2 {
                    out.push((2 * j + 1, c - j as i32 - 1));
                }
            }
        }
        (1, QKind::DoublePrime) => {
            let c = -ell - (ni - 1) / 2;
            out.push((0, c));
            for j in 1..=(n - 1) / 2 {
                out.push((0, c + j as i32));
                out.push((2 * j, c - j as i32));
            }
        }
        (_, QKind::Prime) => {
            let c = -ell - ni / 2;
            out.push((0, c));
            for j in 1..=n / 2 {
                out.push((0, c + j as i32));
                if j < n / 2 {
                    out.push((2 * j, c - j as i32));
                }
            }
        }
        (_, QKind::DoublePrime) => {
            let d = -ell - ni / 2 + 1;
            for j in 0..n / 2 {
                out.push((0, d + j as i32));
                out.push((2 * j + 1, d - j as i32 - 1));
            }
        }
    }
    out
}

/// `[Q'_ℓ]`, `[Q''_ℓ]` on `ℙ^{n−1}`: `∧^{m−h}T(−m) ↦ X^m(h)`, and for the
/// twisted versions `X^m(h) ↦ ((−1)^{n+1}e_n(Z))^a X^m(h)` with `0 ≤ m+an ≤ n−1`.
pub fn generate_q_basis(n: usize, ell: i32, kind: QKind, twisted: bool) -> Result<ExceptionalBasis, KError> {
    if n < 2 {
        return Err(KError::BadRange(format!("n={n}")));
    }
    let r = p_ring(n);
    let en: Poly = (1..=n).fold(Poly::one(&r), |acc, a| &acc * &Poly::var_idx(&r, a));
    let en = if n % 2 == 0 { -en } else { en };
    let mut elements = Vec::new();
    for (j, mp) in q_basis_labels(n, ell, kind) {
        let m = -mp;
        let mut p = x_poly(n, m, m - j as i32)?;
        if twisted {
            let a = -m.div_euclid(n as i32);
            p = &p * &en.powi(a).expect("monomial");
        }
        elements.push(KClass::from_p_poly(n, &p));
    }
    let tag = match kind {
        QKind::Prime => "Q'",
        QKind::DoublePrime => "Q''",
    };
    let tw = if twisted { "~" } else { "" };
    ExceptionalBasis::new(elements, format!("{tag}{tw}_{ell}(n={n})"))
}
