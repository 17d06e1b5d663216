use combinatorics::enumerate_index_sets;
use exact_algebra::{qf, Check, Matrix, Poly, Ring};

use crate::exceptional::{generate_q_basis, ExceptionalBasis, QKind};
use crate::pairing::{canonical_operator, chi_pairing, dagger};
use crate::satake::satake_exterior_basis;
use crate::{elementary, k_ring, zv, KError};

/// `ν_I = (−1)^{k(n−k)} (∏_{i∈I_1} Z_i)^n / (∏Z)^k`, in lex order.
pub fn canonical_eigenvalues(k: usize, n: usize) -> Vec<Poly> {
    let r = k_ring(n);
    let all = (1..=n).fold(Poly::one(&r), |acc, a| &acc * &zv(&r, a));
    let inv = all.powi(-(k as i32)).expect("monomial");
    enumerate_index_sets(k, n)
        .expect("valid shape")
        .iter()
        .map(|i| {
            let p = i.i1.iter().fold(Poly::one(&r), |acc, &a| &acc * &zv(&r, a)).pow(n as u32);
            let v = &p * &inv;
            if (k * (n - k)) % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect()
}

fn flip(a: &Matrix) -> Matrix {
    let n = a.rows();
    Matrix::from_fn(a.ring(), n, n, |i, j| a.get(n - 1 - i, n - 1 - j).clone())
}

/// `(𝕊_1, 𝕊_2) = (J(𝒢†)^{-1}J, J𝒢J)`.
pub fn stokes_from_gram(g: &Matrix) -> Result<(Matrix, Matrix), KError> {
    let inv = dagger(g).unitriangular_inverse().map_err(|e| KError::ShapeMismatch(e.to_string()))?;
    Ok((flip(&inv), flip(g)))
}

fn symmetric_integral(p: &Poly, n: usize) -> bool {
    p.is_integral()
        && (0..n - 1).all(|a| {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(a, a + 1);
            p.permute_vars(&perm) == *p
        })
}

/// Stokes matrices attached to `[^{(k)}Q'_ℓ]` or `[^{(k)}Q''_ℓ]`.
pub fn stokes_matrices(k: usize, n: usize, ell: i32, kind: QKind) -> Result<(Matrix, Matrix), KError> {
    if combinatorics::binomial(n, k) > 10 {
        return Err(KError::BadRange(format!("C({n},{k}) > 10")));
    }
    let q = generate_q_basis(n, ell, kind, true)?;
    let basis = satake_exterior_basis(&q, k, 0)?;
    let (s1, s2) = stokes_from_gram(&basis.gram()?)?;
    for m in [&s1, &s2] {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if !symmetric_integral(m.get(i, j), n) {
                    return Err(KError::NotSymmetricLaurent(format!("entry ({},{})", i + 1, j + 1)));
                }
            }
        }
    }
    Ok((s1, s2))
}

/// `∧^k 𝕊^ℙ` against the Stokes data of the wedge basis on `G(k,n)`.
///
/// The wedge basis is ordered lexicographically, so the reversal that
/// conjugates its Gram matrix is `∧^k J`, a signed permutation, rather
/// than the plain anti-diagonal.
pub fn wedge_stokes_checks(k: usize, n: usize, ell: i32, kind: QKind) -> Result<Vec<Check>, KError> {
    let q = generate_q_basis(n, ell, kind, true)?;
    let gp = q.gram()?;
    let (p1, p2) = stokes_from_gram(&gp)?;
    let wedge = satake_exterior_basis(&q, k, 0)?;
    let gg = wedge.gram()?;
    let r = k_ring(n);
    let j = Matrix::from_fn(&r, n, n, |a, b| if a + b == n - 1 { Poly::one(&r) } else { Poly::zero(&r) });
    let w = minor_matrix(&j, k);
    let inv = dagger(&gg).unitriangular_inverse().map_err(|e| KError::ShapeMismatch(e.to_string()))?;
    let tag = format!("({k},{n}) ℓ={ell} {kind:?}");
    Ok(vec![
        Check::new(format!("gram-minors {tag}"), "corstokmat", minor_matrix(&gp, k) == gg, "𝒢^G = ∧^k 𝒢^ℙ"),
        Check::new(format!("wedge-S1 {tag}"), "corstokmat", minor_matrix(&p1, k) == w.mul(&inv).mul(&w), "∧^k𝕊_1 = W(𝒢†)^{-1}W"),
        Check::new(format!("wedge-S2 {tag}"), "corstokmat", minor_matrix(&p2, k) == w.mul(&gg).mul(&w), "∧^k𝕊_2 = W𝒢W"),
    ])
}

/// Matrix of `k × k` minors, rows and columns in lex order.
pub fn minor_matrix(m: &Matrix, k: usize) -> Matrix {
    let subsets = enumerate_index_sets(k, m.rows()).expect("valid shape");
    let idx: Vec<Vec<usize>> = subsets.iter().map(|s| s.i1.iter().map(|a| a - 1).collect()).collect();
    Matrix::from_fn(m.ring(), idx.len(), idx.len(), |a, b| m.submatrix(&idx[a], &idx[b]).det().expect("square"))
}

/// `Tr ∧^ℓ M`, the sum of principal `ℓ × ℓ` minors.
pub fn trace_wedge(m: &Matrix, l: usize) -> Poly {
    if l == 0 {
        return Poly::one(m.ring());
    }
    let mut acc = Poly::zero(m.ring());
    for s in enumerate_index_sets(l, m.rows()).expect("valid shape") {
        let idx: Vec<usize> = s.i1.iter().map(|a| a - 1).collect();
        acc += &m.submatrix(&idx, &idx).det().expect("square");
    }
    acc
}

/// `e_ℓ` of the eigenvalues of `m` for `ℓ = 0..=size`, by Faddeev–LeVerrier.
pub fn eigen_elementary(m: &Matrix) -> Vec<Poly> {
    let size = m.rows();
    let r = m.ring();
    let mut c = vec![Poly::one(r)];
    let mut acc = Matrix::zeros(r, size, size);
    for step in 1..=size {
        let top = c[step - 1].clone();
        acc = m.mul(&acc).add(&Matrix::scalar(r, size, &top));
        let tr = m.mul(&acc).trace();
        c.push(tr.scale(&qf(-1, step as i64)));
    }
    // c[ℓ] is the coefficient of t^{size−ℓ} in det(t − m)
    c.into_iter().enumerate().map(|(l, p)| if l % 2 == 1 { -p } else { p }).collect()
}

/// `e_ℓ` of the eigenvalues of `a^{-1}b` for unitriangular `a`, read off
/// `det(t a − b)`.
pub fn pencil_elementary(a: &Matrix, b: &Matrix) -> Vec<Poly> {
    let r = a.ring();
    let mut names: Vec<(String, bool)> = (0..r.len()).map(|i| (r.name(i).to_string(), r.is_laurent(i))).collect();
    names.push(("t".into(), false));
    let rt = Ring::new(&names);
    let emb = |p: &Poly| p.embed(&rt).expect("embedding into a ring with t");
    let t = Poly::v(&rt, "t");
    let size = a.rows();
    let pencil = Matrix::from_fn(&rt, size, size, |i, j| &(&t * &emb(a.get(i, j))) - &emb(b.get(i, j)));
    let d = pencil.det().expect("square");
    let coeffs = d.coefficients_in(r.len());
    (0..=size)
        .map(|l| {
            let c = coeffs.get(&((size - l) as i32)).map(|p| project(p, r)).unwrap_or_else(|| Poly::zero(r));
            if l % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect()
}

/// Drop the trailing `t` slot of a polynomial free of `t`.
fn project(p: &Poly, r: &std::sync::Arc<Ring>) -> Poly {
    let mut out = Poly::zero(r);
    for (m, c) in p.terms() {
        let mono = exact_algebra::Mono(m.0[..r.len()].to_vec());
        out += &Poly::monomial(r, mono, c.clone());
    }
    out
}

fn char_poly_check(g: &Matrix, nu: &[Poly]) -> bool {
    let e = pencil_elementary(g, &dagger(g));
    e.iter().enumerate().all(|(l, p)| *p == elementary(g.ring(), nu, l))
}

/// Canonical-operator identities for an exceptional basis: the matrix of
/// `𝗄` is `𝒢^{-1}𝒢†`, its characteristic polynomial is `∏(t − ν_I)`, and
/// `Tr ∧^ℓ(𝕊†𝕊^{-1}) = e_ℓ(ν)` for both Stokes matrices.
pub fn canonical_checks(basis: &ExceptionalBasis) -> Result<Vec<Check>, KError> {
    let (k, n) = (basis.k, basis.n);
    let tag = format!("({k},{n}) {}", basis.provenance);
    let g = basis.gram()?;
    let nu = canonical_eigenvalues(k, n);
    let mut out = Vec::new();

    let size = basis.len();
    let r = k_ring(n);
    let mut serre = Matrix::zeros(&r, size, size);
    for (a, e) in basis.elements.iter().enumerate() {
        for (j, f) in basis.elements.iter().enumerate() {
            serre.set(a, j, chi_pairing(e, &canonical_operator(f))?);
        }
    }
    out.push(Check::new(format!("serre {tag}"), "matrk", serre == dagger(&g), "χ(e_a, 𝗄e_j) = χ(e_j, e_a)*"));

    out.push(Check::new(format!("charpoly {tag}"), "eigenvaluescanop", char_poly_check(&g, &nu), ""));

    let (s1, s2) = stokes_from_gram(&g)?;
    let id = Matrix::identity(&r, size);
    out.push(Check::new(format!("s2-dagger {tag}"), "corstokmatr", s2.mul(&dagger(&s1)) == id, "𝕊_2 𝕊_1† = 1"));
    for (name, s) in [("S1", &s1), ("S2", &s2)] {
        // 𝕊†𝕊^{-1} is conjugate to 𝕊^{-1}𝕊†
        let tr = pencil_elementary(s, &dagger(s));
        let bad: Vec<usize> = (0..=size).filter(|&l| tr[l] != elementary(&r, &nu, l)).collect();
        out.push(Check::new(
            format!("trace-constraints {name} {tag}"),
            "constrS",
            bad.is_empty(),
            if bad.is_empty() { String::new() } else { format!("failing ℓ = {bad:?}") },
        ));
    }
    Ok(out)
}

fn markov_rhs(n: usize, k: usize, which: usize) -> Poly {
    let r = k_ring(n);
    let nu = canonical_eigenvalues(k, n);
    &Poly::int(&r, 3) - &elementary(&r, &nu, which)
}

/// Left-hand sides `aa*+bb*+cc*−ab*c` and `aa*+bb*+cc*−a*bc*`.
fn markov_lhs(a: &Poly, b: &Poly, c: &Poly) -> (Poly, Poly) {
    let s = |p: &Poly| p.invert_vars();
    let base = &(&(a * &s(a)) + &(b * &s(b))) + &(c * &s(c));
    let l1 = &base - &(&(a * &s(b)) * c);
    let l2 = &base - &(&(&s(a) * b) * &s(c));
    (l1, l2)
}

/// `*`-Markov identities for `ℙ^2` and `G(2,3)` Stokes entries, and the
/// transfer `(a,b,c) ↦ (c, ac − b, a)` between them.
pub fn markov_checks(ell: i32, kind: QKind) -> Result<Vec<Check>, KError> {
    let tag = format!("ℓ={ell} {kind:?}");
    let (p1, _) = stokes_matrices(1, 3, ell, kind)?;
    let (g1, _) = stokes_matrices(2, 3, ell, kind)?;
    let abc = |m: &Matrix| (m.get(0, 1).clone(), m.get(0, 2).clone(), m.get(1, 2).clone());
    let (a, b, c) = abc(&p1);
    let (l1, l2) = markov_lhs(&a, &b, &c);
    // ℙ²: ℓ=1 gives e_1(ν), ℓ=2 gives e_2(ν)
    let p_rhs1 = markov_rhs(3, 1, 1);
    let p_rhs2 = markov_rhs(3, 1, 2);
    let g_rhs1 = markov_rhs(3, 2, 1);
    let g_rhs2 = markov_rhs(3, 2, 2);
    let mut out = vec![
        Check::new(format!("markov1 {tag}"), "markov1", l1 == p_rhs1, format!("(a,b,c) = ({a}, {b}, {c})")),
        Check::new(format!("markov2 {tag}"), "markov2", l2 == p_rhs2, ""),
    ];
    let (ga, gb, gc) = abc(&g1);
    let (m1, m2) = markov_lhs(&ga, &gb, &gc);
    out.push(Check::new(format!("23markov1 {tag}"), "23markov1", m1 == g_rhs1, format!("({ga}, {gb}, {gc})")));
    out.push(Check::new(format!("23markov2 {tag}"), "23markov2", m2 == g_rhs2, ""));
    let (ta, tb, tc) = (c.clone(), &(&a * &c) - &b, a.clone());
    let (t1, t2) = markov_lhs(&ta, &tb, &tc);
    out.push(Check::new(
        format!("transfer {tag}"),
        "23markov",
        t1 == g_rhs1 && t2 == g_rhs2 && (ta, tb, tc) == (ga, gb, gc),
        "(c, ac−b, a) solves the G(2,3) equations and equals the G(2,3) entries",
    ));
    let (d1, d2) = markov_lhs(&a.invert_vars(), &b.invert_vars(), &c.invert_vars());
    out.push(Check::new(format!("dual-transfer {tag}"), "23markov", d1 == g_rhs1 && d2 == g_rhs2, "(a*, b*, c*)"));
    Ok(out)
}
