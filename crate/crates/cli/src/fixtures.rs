//! Worked matrices and class values, transcribed by hand and compared
//! byte-for-byte in the canonical grammar.

use cohomology::{
    coh_ring, gamma_ring, idempotent_basis, idempotent_representative, poincare_pairing, quantum_c1_matrix, quantum_ring,
    satake_cohomology, schubert_class, schubert_order, CohClass, Flag, QBasis,
};
use combinatorics::{IndexSet, Partition};
use exact_algebra::{Check, Matrix, Poly, RestrictedRational as RR};
use ktheory::{k_gamma_ring, p_ring, satake_k, KClass};
use weight_ops::{dynamical_operator, exterior_power_matrix, flip_p1, qkz_operator, weight_ring, ExteriorMode};

fn wparse(n: usize, rows: &[&[&str]]) -> Matrix {
    Matrix::parse(&weight_ring(n), rows).expect("fixture parses")
}

/// Compare two matrices through their canonical strings.
pub fn matrix_check(id: impl Into<String>, anchor: &str, got: &Matrix, want: &Matrix) -> Check {
    let (g, w) = (got.to_strings(), want.to_strings());
    if g == w {
        return Check::new(id, anchor, true, "");
    }
    let detail = if g.len() != w.len() || g.first().map(Vec::len) != w.first().map(Vec::len) {
        format!("shape {}x{} vs {}x{}", g.len(), g.first().map_or(0, Vec::len), w.len(), w.first().map_or(0, Vec::len))
    } else {
        let (i, j) = (0..g.len()).flat_map(|i| (0..g[i].len()).map(move |j| (i, j))).find(|&(i, j)| g[i][j] != w[i][j]).unwrap_or((0, 0));
        format!("entry ({i},{j}): got {} want {}", g[i][j], w[i][j])
    };
    Check::new(id, anchor, false, detail)
}

fn eq_check<T: PartialEq + std::fmt::Debug>(id: impl Into<String>, anchor: &str, got: T, want: T) -> Check {
    let ok = got == want;
    Check::new(id, anchor, ok, if ok { String::new() } else { format!("got {got:?}") })
}

fn err_check(id: impl Into<String>, anchor: &str, e: impl std::fmt::Display) -> Check {
    Check::new(id, anchor, false, e.to_string())
}

/// `K_a` on the `n = 3` weight spaces, including the scalar ends. The third
/// operator uses `R(z_3 − z_1 + κ)`, the reading that reproduces the display.
pub fn qkz_n3_checks() -> Vec<Check> {
    let k1 = [
        wparse(3, &[&["p1*(z1-z2)*(z1-z3)", "p1*(z1-z3)", "p1"], &["p2", "0", "0"], &["p2*(z1-z2)", "p2", "0"]]),
        wparse(3, &[&["0", "p1*(z2-z3)", "p1"], &["p2", "p1*(kp-z1+z2)*(z2-z3)", "p1*(kp-z1+z2)"], &["0", "p2", "0"]]),
        wparse(3, &[&["0", "0", "p1"], &["p2", "0", "p1*(kp-z1+z3)"], &["p2*(kp-z2+z3)", "p2", "p1*(kp-z1+z3)*(kp-z2+z3)"]]),
    ];
    let k2 = [
        wparse(3, &[&["p1*z1 - p1*z3", "p1", "0"], &["0", "p1*z1 - p1*z2", "p1"], &["p2", "0", "0"]]),
        wparse(3, &[&["p1*z2 - p1*z3", "p1", "0"], &["0", "0", "p1"], &["p2", "0", "kp*p1 - p1*z1 + p1*z2"]]),
        wparse(3, &[&["0", "p1", "0"], &["0", "kp*p1 - p1*z2 + p1*z3", "p1"], &["p2", "0", "kp*p1 - p1*z1 + p1*z3"]]),
    ];
    let mut out = Vec::new();
    for a in 1..=3 {
        for (k, want) in [(1, &k1[a - 1]), (2, &k2[a - 1])] {
            let id = format!("qkz n=3 k={k} a={a}");
            out.push(match qkz_operator(3, k, a) {
                Ok(m) => matrix_check(id, "exqkz", &m.matrix, want),
                Err(e) => err_check(id, "exqkz", e),
            });
        }
        for (k, want) in [(0, "p2"), (3, "p1")] {
            let id = format!("qkz n=3 k={k} a={a}");
            out.push(match qkz_operator(3, k, a) {
                Ok(m) => eq_check(id, "exqkz", m.entries(), vec![vec![want.to_string()]]),
                Err(e) => err_check(id, "exqkz", e),
            });
        }
    }
    out
}

/// `X_1, X_2` on the `n = 3` weight spaces.
pub fn dyn_n3_checks() -> Vec<Check> {
    let mats = [
        (1, 1, wparse(3, &[&["z1", "1", "0"], &["0", "z2", "1"], &["p1^-1*p2", "0", "z3"]])),
        (1, 2, wparse(3, &[&["z2+z3", "-1", "0"], &["0", "z1+z3", "-1"], &["-p1^-1*p2", "0", "z1+z2"]])),
        (2, 1, wparse(3, &[&["z1+z2", "1", "0"], &["0", "z1+z3", "1"], &["p1^-1*p2", "0", "z2+z3"]])),
        (2, 2, wparse(3, &[&["z3", "-1", "0"], &["0", "z2", "-1"], &["-p1^-1*p2", "0", "z1"]])),
        (0, 1, wparse(3, &[&["0"]])),
        (0, 2, wparse(3, &[&["z1+z2+z3"]])),
        (3, 1, wparse(3, &[&["z1+z2+z3"]])),
        (3, 2, wparse(3, &[&["0"]])),
    ];
    mats.iter()
        .map(|(k, i, want)| {
            let id = format!("dyn n=3 k={k} i={i}");
            match dynamical_operator(3, *k, *i) {
                Ok(m) => matrix_check(id, "ex2", &m.matrix, want),
                Err(e) => err_check(id, "ex2", e),
            }
        })
        .collect()
}

/// `K_1` for `n = 4` and its exterior square, cube and top power.
pub fn n4_exterior_checks() -> Vec<Check> {
    let r = weight_ring(4);
    let k1 = match qkz_operator(4, 1, 1) {
        Ok(m) => m.matrix,
        Err(e) => return vec![err_check("n=4 K1", "tildeka", e)],
    };
    let want1 = wparse(
        4,
        &[
            &["p1*(z1-z2)*(z1-z3)*(z1-z4)", "p1*(z3-z1)*(z4-z1)", "p1*(z1-z4)", "p1"],
            &["p2", "0", "0", "0"],
            &["p2*(z1-z2)", "p2", "0", "0"],
            &["p2*(z2-z1)*(z3-z1)", "p2*(z1-z3)", "p2", "0"],
        ],
    );
    let want2 = wparse(
        4,
        &[
            &["p1*(z1-z3)*(z1-z4)", "p1*(z1-z4)", "p1", "0", "0", "0"],
            &["0", "p1*(z1-z2)*(z1-z4)", "p1*(z1-z2)", "p1*(z1-z4)", "p1", "0"],
            &["0", "0", "p1*(z1-z2)*(z1-z3)", "0", "p1*(z1-z3)", "p1"],
            &["p2", "0", "0", "0", "0", "0"],
            &["p2*(z1-z3)", "p2", "0", "0", "0", "0"],
            &["0", "p2*(z1-z2)", "0", "p2", "0", "0"],
        ],
    );
    let want3 = wparse(4, &[&["p1*(z1-z4)", "p1", "0", "0"], &["0", "p1*(z1-z3)", "p1", "0"], &["0", "0", "p1*(z1-z2)", "p1"], &["p2", "0", "0", "0"]]);
    let p2inv = Poly::var_pow(&r, "p2", -1).expect("p2 is Laurent");
    let wedge = |m: &Matrix, k: usize| exterior_power_matrix(m, k, ExteriorMode::Multiplicative).map(|w| w.scale(&p2inv.pow(k as u32 - 1)));
    let mut out = vec![matrix_check("n=4 K1", "tildeka", &k1, &want1)];
    let flipped = flip_p1(&k1);
    for (k, src, want) in [(2, &flipped, &want2), (3, &k1, &want3)] {
        let id = format!("n=4 wedge{k} K1");
        out.push(match wedge(src, k) {
            Ok(m) => matrix_check(id, "tildeka", &m, want),
            Err(e) => err_check(id, "tildeka", e),
        });
        let id = format!("n=4 K1 on k={k}");
        out.push(match qkz_operator(4, k, 1) {
            Ok(m) => matrix_check(id, "tildeka", &m.matrix, want),
            Err(e) => err_check(id, "tildeka", e),
        });
    }
    out.push(match wedge(&flipped, 4) {
        Ok(m) => eq_check("n=4 wedge4 K1", "tildeka", m.to_strings(), vec![vec!["p1".to_string()]]),
        Err(e) => err_check("n=4 wedge4 K1", "tildeka", e),
    });
    out
}

/// Quantum multiplication by `c_1(E_1)` on `G(2,4)` and `ℙ^3`, Schubert basis.
pub fn quantum_table_checks() -> Vec<Check> {
    let r = quantum_ring(4);
    let g24 = Matrix::parse(
        &r,
        &[
            &["z3+z4", "0", "0", "0", "-q", "0"],
            &["-1", "z2+z4", "0", "0", "0", "-q"],
            &["0", "-1", "z1+z4", "0", "0", "0"],
            &["0", "-1", "0", "z2+z3", "0", "0"],
            &["0", "0", "-1", "-1", "z1+z3", "0"],
            &["0", "0", "0", "0", "-1", "z1+z2"],
        ],
    )
    .expect("fixture parses");
    let p3 = Matrix::parse(&r, &[&["z4", "0", "0", "-q"], &["-1", "z3", "0", "0"], &["0", "-1", "z2", "0"], &["0", "0", "-1", "z1"]]).expect("fixture parses");
    let mut out = Vec::new();
    for (k, want) in [(2, &g24), (1, &p3)] {
        let id = format!("quantum c1(E1) ({k},4)");
        out.push(match quantum_c1_matrix(k, 4, 1, QBasis::Schubert) {
            Ok(m) => matrix_check(id, "stabint", &m, want),
            Err(e) => err_check(id, "stabint", e),
        });
    }
    let labels: Vec<Vec<usize>> = schubert_order(2, 4).iter().map(|p| p.parts().to_vec()).collect();
    out.push(eq_check("schubert order (2,4)", "stabint", labels, vec![vec![], vec![1], vec![2], vec![1, 1], vec![2, 1], vec![2, 2]]));
    out
}

/// Satake images of Schubert and idempotent classes from `ℙ^2` to `G(2,3)`.
pub fn p2g23_checks() -> Vec<Check> {
    let g = |s: &str| Poly::parse(&gamma_ring(2, 3), s).expect("fixture parses");
    let p = |a: usize| schubert_class(&Partition::new(vec![a]), 1, 3, Flag::Standard);
    let mut out = Vec::new();
    let r = (|| -> Result<Vec<Check>, cohomology::CohError> {
        let mut v = Vec::new();
        v.push(eq_check("satake(σ0∧σ1)", "p2g23", satake_cohomology(&[p(0)?, p(1)?])?, CohClass::constant(2, 3, 1)));
        let s02 = satake_cohomology(&[p(0)?, p(2)?])?;
        v.push(eq_check("satake(σ0∧σ2) = σ1", "p2g23", s02.clone(), schubert_class(&Partition::new(vec![1]), 2, 3, Flag::Standard)?));
        v.push(eq_check("satake(σ0∧σ2) representative", "p2g23", s02, CohClass::from_gamma_poly(2, 3, &g("-(g1+g2-z2-z3)"))));
        let ids = idempotent_basis(1, 3);
        let gids = idempotent_basis(2, 3);
        let lhs = satake_cohomology(&[ids[0].clone(), ids[1].clone()])?;
        let z12 = Poly::parse(&coh_ring(3), "z1-z2").expect("fixture parses");
        let loc = gids[0].loc.iter().map(|x| x.div_linear(&z12)).collect::<Result<Vec<_>, _>>();
        v.push(match loc {
            Ok(loc) => eq_check("satake(Δ1∧Δ2) = Δ12/(z1−z2)", "p2g23", lhs, CohClass { k: 2, n: 3, loc }),
            Err(e) => err_check("satake(Δ1∧Δ2) = Δ12/(z1−z2)", "p2g23", e),
        });
        Ok(v)
    })();
    match r {
        Ok(v) => out.extend(v),
        Err(e) => out.push(err_check("satake ℙ2 → G(2,3)", "p2g23", e)),
    }

    let d12 = idempotent_representative(&IndexSet::new(3, vec![1, 2]).expect("valid"));
    out.push(match RR::new(g("(g1-z3)*(g2-z3)"), &[g("z1-z3"), g("z2-z3")]) {
        Ok(want) => eq_check("idempotent Δ12 on G(2,3)", "thlocal", d12, want),
        Err(e) => err_check("idempotent Δ12 on G(2,3)", "thlocal", e),
    });
    let g1 = |s: &str| Poly::parse(&gamma_ring(1, 3), s).expect("fixture parses");
    for j in 1..=3usize {
        let d = idempotent_representative(&IndexSet::new(3, vec![j]).expect("valid"));
        let others: Vec<usize> = (1..=3).filter(|&i| i != j).collect();
        let num = others.iter().fold(g1("1"), |a, i| &a * &g1(&format!("g1-z{i}")));
        let dens: Vec<Poly> = others.iter().map(|i| g1(&format!("z{j}-z{i}"))).collect();
        let id = format!("idempotent Δ{j} on ℙ2");
        out.push(match RR::new(num, &dens) {
            Ok(want) => eq_check(id, "thlocal", d, want),
            Err(e) => err_check(id, "thlocal", e),
        });
    }
    let ids = idempotent_basis(1, 3);
    let mut ok = true;
    for i in 0..3 {
        for j in 0..3 {
            let v = poincare_pairing(&ids[i], &ids[j]);
            if i != j {
                ok &= v.is_zero();
            } else {
                let dens: Vec<Poly> = (1..=3)
                    .filter(|&a| a != i + 1)
                    .map(|a| Poly::parse(&coh_ring(3), &format!("z{}-z{a}", i + 1)).expect("fixture parses"))
                    .collect();
                ok &= RR::new(Poly::one(&coh_ring(3)), &dens).is_ok_and(|w| w == v);
            }
        }
    }
    out.push(Check::new("η(Δi, Δj) on ℙ2", "poimet", ok, ""));
    out
}

/// `ϑ^K` of wedges of `X, X^2 − e_1X, 1, X^3, e_5X^{−1}` on `ℙ^4`, landing in `G(4,5)`.
pub fn theta_g45_checks() -> Vec<Check> {
    let f: Vec<KClass> = ["X", "X^2 - (Z1+Z2+Z3+Z4+Z5)*X", "1", "X^3", "Z1*Z2*Z3*Z4*Z5*X^-1"]
        .iter()
        .map(|s| KClass::from_p_poly(5, &Poly::parse(&p_ring(5), s).expect("fixture parses")))
        .collect();
    let gr = k_gamma_ring(4, 5);
    let e5 = "Z1*Z2*Z3*Z4*Z5";
    let e1z = "(Z1+Z2+Z3+Z4+Z5)";
    let pg = "G1^-1*G2^-1*G3^-1*G4^-1";
    let expected = [
        ([0, 1, 2, 3], "1".to_string()),
        ([0, 1, 2, 4], format!("-{e5}*{pg}")),
        ([0, 1, 3, 4], format!("{e5}*(-G1^-1 - G2^-1 - (G3+G4)*G3^-1*G4^-1)")),
        ([0, 2, 3, 4], format!("{e5}*(G1+G2+G3+G4)*{pg}")),
        ([1, 2, 3, 4], format!("{e5}*(-{e1z}*(G1+G2+G3+G4) + G1*(G2+G3+G4) + G4*(G2+G3) + G2*G3)*{pg}")),
    ];
    expected
        .iter()
        .map(|(idx, s)| {
            let id = format!("ϑ(f{}∧f{}∧f{}∧f{})", idx[0] + 1, idx[1] + 1, idx[2] + 1, idx[3] + 1);
            let fs: Vec<KClass> = idx.iter().map(|&i| f[i].clone()).collect();
            let want = KClass::from_gamma_poly(4, 5, &Poly::parse(&gr, s).expect("fixture parses"));
            match satake_k(&fs, 0) {
                Ok(got) => eq_check(id, "forthi+", got == want, true),
                Err(e) => err_check(id, "forthi+", e),
            }
        })
        .collect()
}
