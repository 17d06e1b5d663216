use combinatorics::{enumerate_index_sets, IndexSet, Partition};
use exact_algebra::{determinant_rr, Poly, RestrictedRational as RR};

use crate::polys::{double_schubert, factorial_schur, schubert_ring};
use crate::{coh_ring, gamma_ring, z_of, CohClass, CohError};

/// Which complete flag a Schubert cell is taken with respect to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flag {
    /// `L_m = span(e_1..e_m)`.
    Standard,
    /// `L_m = span(e_{n−m+1}..e_n)`.
    Opposite,
}

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

fn check_shape(lambda: &Partition, k: usize, n: usize) -> Result<(), CohError> {
    if k == 0 || k > n {
        return Err(CohError::BadRange(format!("(k,n)=({k},{n})")));
    }
    if !lambda.fits(k, n) {
        return Err(CohError::BadRange(format!("{:?} does not fit a {k}x{} box", lambda.parts(), n - k)));
    }
    Ok(())
}

/// `c_1(E_i)` as a localization vector.
pub fn c1_class(k: usize, n: usize, i: usize) -> CohClass {
    let r = coh_ring(n);
    CohClass::from_fn(k, n, |idx| {
        let mut s = Poly::zero(&r);
        for a in 1..=n {
            if idx.contains(a) == (i == 1) {
                s += &z_of(&r, a);
            }
        }
        RR::from_poly(s)
    })
}

/// `[Ω_λ] = (−1)^{|λ|} s_λ(γ_1 | z_{σ_0})`, or with `z` for the opposite flag.
pub fn schubert_class(lambda: &Partition, k: usize, n: usize, flag: Flag) -> Result<CohClass, CohError> {
    check_shape(lambda, k, n)?;
    let s = factorial_schur(lambda, k, n, flag == Flag::Standard)?;
    Ok(CohClass::from_gamma_poly(k, n, &s.scale_int(sign(lambda.size()))))
}

/// `c_j(E_2 − L_m)` restricted to `pt_I`.
pub fn chern_e2_minus_flag(idx: &IndexSet, j: usize, m: usize, flag: Flag) -> Poly {
    let n = idx.n;
    let r = coh_ring(n);
    let e2: Vec<Poly> = idx.i2().iter().map(|&a| z_of(&r, a)).collect();
    let flag_weights: Vec<usize> = match flag {
        Flag::Standard => (1..=m).collect(),
        Flag::Opposite => (n + 1 - m..=n).collect(),
    };
    // 1/c(L_m) = Σ_b (−1)^b h_b(weights) u^b
    let mut h = vec![Poly::zero(&r); j + 1];
    h[0] = Poly::one(&r);
    for &w in &flag_weights {
        let zw = z_of(&r, w);
        for t in 1..=j {
            let add = &h[t - 1] * &zw;
            h[t] += &add;
        }
    }
    let mut c = Poly::zero(&r);
    for a in 0..=j {
        let b = j - a;
        let ea = crate::polys::elementary(&r, &e2, a);
        if ea.is_zero() {
            continue;
        }
        c += &(&ea * &h[b]).scale_int(sign(b));
    }
    c
}

/// Schubert class by the Kempf–Laksov determinant
/// `det(c_{λ_i+j−i}(E_2 − L_{n−k+i−λ_i}))`, computed pointwise.
pub fn schubert_class_kempf_laksov(lambda: &Partition, k: usize, n: usize, flag: Flag) -> Result<CohClass, CohError> {
    check_shape(lambda, k, n)?;
    let lam = lambda.padded(k);
    let r = coh_ring(n);
    let mut loc = Vec::new();
    for idx in enumerate_index_sets(k, n).map_err(|e| CohError::BadRange(e.to_string()))? {
        let m: Vec<Vec<RR>> = (1..=k)
            .map(|i| {
                let li = lam[i - 1];
                let fl = n - k + i - li;
                (1..=k)
                    .map(|j| {
                        let deg = li as i64 + j as i64 - i as i64;
                        if deg < 0 {
                            RR::zero(&r)
                        } else {
                            RR::from_poly(chern_e2_minus_flag(&idx, deg as usize, fl, flag))
                        }
                    })
                    .collect()
            })
            .collect();
        loc.push(determinant_rr(&m).map_err(|e| CohError::ShapeMismatch(e.to_string()))?);
    }
    Ok(CohClass { k, n, loc })
}

/// `(Stab_I, Stab^op_I)` for all `I`, with `Stab_I = s_{λ^∨}(γ_1|z_{σ_0})`
/// and `Stab^op_I = s_λ(γ_1|z)`, `λ = λ(I)`.
pub fn stable_envelope_basis(k: usize, n: usize) -> Result<(Vec<CohClass>, Vec<CohClass>), CohError> {
    let sets = enumerate_index_sets(k, n).map_err(|e| CohError::BadRange(e.to_string()))?;
    let mut st = Vec::new();
    let mut op = Vec::new();
    for idx in &sets {
        let lam = idx.partition();
        let s = factorial_schur(&lam.complement(k, n), k, n, true)?;
        st.push(CohClass::from_gamma_poly(k, n, &s));
        let o = factorial_schur(&lam, k, n, false)?;
        op.push(CohClass::from_gamma_poly(k, n, &o));
    }
    Ok((st, op))
}

fn schubert_to_gamma(w: &[usize], k: usize, reversed: bool) -> Result<Poly, CohError> {
    let n = w.len();
    let f = double_schubert(w)?;
    let target = gamma_ring(k, n);
    let src = schubert_ring(n);
    for j in k..n {
        if f.degree_in(j).unwrap_or(0) > 0 {
            return Err(CohError::ShapeMismatch(format!("{} appears in a Grassmannian class", src.name(j))));
        }
    }
    let mut img: Vec<Poly> = (0..n).map(|j| if j < k { Poly::var_idx(&target, j) } else { Poly::zero(&target) }).collect();
    for j in 1..=n {
        let a = if reversed { n + 1 - j } else { j };
        img.push(Poly::var_idx(&target, k + a - 1));
    }
    f.subs(&img).map_err(|e| CohError::ShapeMismatch(e.to_string()))
}

/// Same basis through double Schubert polynomials:
/// `Stab_I = 𝔖_{σ_{σ_0(I)}}(γ; z_{σ_0})`, `Stab^op_I = 𝔖_{σ_I}(γ; z)`.
pub fn stable_envelope_via_double_schubert(k: usize, n: usize) -> Result<(Vec<CohClass>, Vec<CohClass>), CohError> {
    let sets = enumerate_index_sets(k, n).map_err(|e| CohError::BadRange(e.to_string()))?;
    let mut st = Vec::new();
    let mut op = Vec::new();
    for idx in &sets {
        let flipped = IndexSet::new(n, idx.i1.iter().map(|&a| n + 1 - a).collect())
            .map_err(|e| CohError::BadRange(e.to_string()))?;
        st.push(CohClass::from_gamma_poly(k, n, &schubert_to_gamma(&flipped.grass_perm().values, k, true)?));
        op.push(CohClass::from_gamma_poly(k, n, &schubert_to_gamma(&idx.grass_perm().values, k, false)?));
    }
    Ok((st, op))
}

fn tangent_weights(idx: &IndexSet) -> Vec<Poly> {
    let r = coh_ring(idx.n);
    let mut out = Vec::new();
    for &i in &idx.i1 {
        for a in idx.i2() {
            out.push(&z_of(&r, i) - &z_of(&r, a));
        }
    }
    out
}

/// `η(u,v) = (−1)^{k(n−k)} Σ_I u_I v_I / Π_{i∈I_1, a∈I_2}(z_i − z_a)`.
pub fn poincare_pairing(u: &CohClass, v: &CohClass) -> RR {
    let r = coh_ring(u.n);
    let mut s = RR::zero(&r);
    for (idx, (a, b)) in u.basis().iter().zip(u.loc.iter().zip(&v.loc)) {
        let term = a.mul(b);
        let mut t = term;
        for w in tangent_weights(idx) {
            t = t.div_linear(&w).expect("nonzero weight");
        }
        s = s.add(&t);
    }
    s.scale(&exact_algebra::q(sign(u.k * (u.n - u.k))))
}

/// The pairing, required to be a polynomial.
pub fn pairing_polynomial(u: &CohClass, v: &CohClass) -> Result<Poly, CohError> {
    poincare_pairing(u, v).to_poly().ok_or(CohError::NotPolynomial)
}

/// Fixed-point idempotents `Δ_I`.
pub fn idempotent_basis(k: usize, n: usize) -> Vec<CohClass> {
    let r = coh_ring(n);
    let m = combinatorics::binomial(n, k);
    (0..m)
        .map(|j| CohClass::from_fn(k, n, |idx| if idx.rank() == j { RR::one(&r) } else { RR::zero(&r) }))
        .collect()
}

/// `Δ_I = Π_j Π_{b∈I_2}(g_j − z_b) / Π_{a∈I_1,b∈I_2}(z_a − z_b)` in `g, z`.
pub fn idempotent_representative(idx: &IndexSet) -> RR {
    let r = gamma_ring(idx.k, idx.n);
    let k = idx.k;
    let zz = |a: usize| Poly::var_idx(&r, k + a - 1);
    let mut num = Poly::one(&r);
    let mut dens = Vec::new();
    for j in 0..k {
        for b in idx.i2() {
            num = &num * &(&Poly::var_idx(&r, j) - &zz(b));
        }
    }
    for &a in &idx.i1 {
        for b in idx.i2() {
            dens.push(&zz(a) - &zz(b));
        }
    }
    RR::new(num, &dens).expect("distinct weights")
}

/// Coordinates in the idempotent basis: the localizations themselves.
pub fn reconstruct(f: &CohClass) -> Vec<RR> {
    f.loc.clone()
}

/// `Σ_I f|_I Δ_I` as a function of `g, z`.
pub fn representative(f: &CohClass) -> RR {
    let (k, n) = (f.k, f.n);
    let r = gamma_ring(k, n);
    let emb: Vec<Poly> = (0..n).map(|a| Poly::var_idx(&r, k + a)).collect();
    let mut s = RR::zero(&r);
    for (idx, v) in f.basis().iter().zip(&f.loc) {
        let lifted = v.subs(&emb).expect("linear substitution");
        s = s.add(&lifted.mul(&idempotent_representative(idx)));
    }
    s
}

/// Coefficients of `f` in the Schubert basis `σ_λ`, `λ = λ(I)` in basis
/// order, via `c_λ = η(f, σ̃_{λ^∨})`.
pub fn schubert_expansion(f: &CohClass) -> Result<Vec<RR>, CohError> {
    let (k, n) = (f.k, f.n);
    f.basis()
        .iter()
        .map(|idx| {
            let dual = schubert_class(&idx.partition().complement(k, n), k, n, Flag::Opposite)?;
            Ok(poincare_pairing(f, &dual))
        })
        .collect()
}

/// `f = Σ_I (−1)^{k(n−k)} η(f, Stab^op_I) Stab_I`.
pub fn stab_expansion(f: &CohClass) -> Result<Vec<RR>, CohError> {
    let (_, op) = stable_envelope_basis(f.k, f.n)?;
    let s = exact_algebra::q(sign(f.k * (f.n - f.k)));
    Ok(op.iter().map(|o| poincare_pairing(f, o).scale(&s)).collect())
}
