use std::f64::consts::PI;

use combinatorics::{enumerate_index_sets, IndexSet};
use exact_algebra::{qf, Poly, Q};
use ktheory::{generate_q_basis, k_gamma_ring, kapranov_basis, p_ring, KClass, QKind};
use num_complex::Complex64;
use rand::{rngs::StdRng, Rng, SeedableRng};
use solutions_numeric::*;

fn c(x: f64) -> Cx {
    Complex64::new(x, 0.0)
}

fn sample(n: usize) -> SamplePoint {
    SamplePoint::specpar(&[0.31, -0.57, 0.11, 0.23][..n], 0.05, 0)
}

fn seeded_z(seed: u64, n: usize) -> Vec<f64> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..n).map(|_| rng.gen_range(-0.9..0.9)).collect()
}

fn idx(n: usize, i1: &[usize]) -> IndexSet {
    IndexSet::new(n, i1.to_vec()).unwrap()
}

#[test]
fn gamma_values() {
    assert!(log_gamma(c(1.0)).unwrap().norm() < 1e-15);
    assert!((gamma(c(0.5)).unwrap() - c(PI.sqrt())).norm() < 1e-14);
    let mut f = 1.0;
    for m in 1..20 {
        let g = gamma(c(m as f64)).unwrap();
        assert!(((g - c(f)) / f).norm() < 1e-13, "Γ({m})");
        f *= m as f64;
    }
    assert_eq!(log_gamma(c(-3.0)), Err(NumError::PoleAt(-3.0)));
    assert_eq!(recip_gamma(c(0.0)), c(0.0));
}

#[test]
fn weight_functions_small() {
    let z = [c(0.3), c(-1.2), c(0.7)];
    let t = c(0.45);
    for a in 1..=3 {
        let w = weight_function(&idx(3, &[a]), &[t], &z).unwrap();
        let expect: Cx = z[..a - 1].iter().map(|zc| t - zc).product();
        assert!((w - expect).norm() < 1e-14);
    }
    let w = weight_function(&idx(2, &[1, 2]), &[c(0.2), c(-0.9)], &z[..2]).unwrap();
    assert!((w - c(1.0)).norm() < 1e-14);
    assert_eq!(weight_function(&idx(2, &[1, 2]), &[c(0.2), c(0.2)], &z[..2]), Err(NumError::CoincidingT));
}

/// `Σ_I W_I(t; z) Stab_I|_J = ∏_{j, b∈J2} (t_j − z_b)`.
#[test]
fn weight_functions_expand_hat_w_in_stable_envelopes() {
    for (k, n) in [(1, 3), (2, 3), (2, 4), (3, 5)] {
        let sp = SamplePoint::specpar(&seeded_z(7, n), 0.05, 0);
        let stab = stab_restriction(k, n, &sp).unwrap();
        let basis = enumerate_index_sets(k, n).unwrap();
        let t: Vec<Cx> = (0..k).map(|a| c(0.17 + 0.4 * a as f64)).collect();
        let z = sp.zc();
        for (jj, j) in basis.iter().enumerate() {
            let lhs: Cx = basis.iter().zip(&stab).map(|(i, row)| weight_function(i, &t, &z).unwrap() * row[jj]).sum();
            let rhs: Cx = t.iter().map(|ta| j.i2().iter().map(|&b| ta - z[b - 1]).product::<Cx>()).product();
            assert!((lhs - rhs).norm() < 1e-12 * rhs.norm().max(1.0), "({k},{n}) J={:?}", j.i1);
        }
    }
}

/// The `(1,2)` series written out term by term.
#[test]
fn exdetid_p1_series() {
    let sp = sample(2);
    let (z1, z2, kp) = (c(sp.z[0]), c(sp.z[1]), sp.kappa);
    let (p1, p2) = (sp.p1(), sp.p2());
    let pw = |base_log: Cx, s: Cx| (s * base_log).exp();
    let m1: Cx = pw(sp.log_kappa, (z1 - z2) / kp + 1.0)
        * pw(sp.log_p1, z1 / kp)
        * pw(sp.log_p2, z2 / kp)
        * (0..40)
            .map(|l| {
                let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
                let fact = (1..=l).map(|x| x as f64).product::<f64>();
                sign / fact * gamma((z1 - z2 - kp * l as f64) / kp).unwrap() * (p2 / (kp * kp * p1)).powi(l)
            })
            .sum::<Cx>();
    let j = jackson_solution(&idx(2, &[1]), &sp, 40).unwrap();
    // Ψ_[1] = κ^{-2} 𝓜_[1](Φ W_I) v_I and W_[1] = 1
    assert!((j[0] - m1 / (kp * kp)).norm() < 1e-12 * m1.norm());
}

/// `μ_{({1,2},∅)} = Ṕ(z; z) p1^{(z1+z2)/κ} (1 + O(p2/p1))`.
#[test]
fn exdetid_point_leading_term() {
    let sp = sample(2);
    let fs = default_factors(2, 2);
    let classes: Vec<KClass> = fs.iter().map(|p| KClass::from_p_poly(2, p)).collect();
    let big = ktheory::satake_k(&classes, 0).unwrap();
    let lead = psi_class(&big, &sp, 0).unwrap()[0];
    let pdot = chern_character_eval(&big, &sp)[0];
    let expect = pdot * ((sp.zc().iter().sum::<Cx>()) / sp.kappa * sp.log_p1).exp();
    assert!((lead - expect).norm() < 1e-13 * expect.norm());
    // on a point X_1 is the scalar z1 + z2: all higher residue shells cancel
    let full = psi_class(&big, &sp, 40).unwrap()[0];
    assert!(((full - lead) / lead).norm() < 1e-13);
    let one_shell = jackson_integral(&[1, 2], &sp, 1, &|_| Ok(vec![c(1.0)])).unwrap();
    let lead_shell = jackson_integral(&[1, 2], &sp, 0, &|_| Ok(vec![c(1.0)])).unwrap();
    assert!((one_shell.values[0] - lead_shell.values[0]).norm() < 1e-13 * lead_shell.values[0].norm());
}

#[test]
fn detprop_small_cases() {
    for (k, n) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
        let sp = SamplePoint::specpar(&[0.31, -0.57, 0.11][..n], 0.05, 0);
        let r = verify_detprop(k, n, &sp, &default_factors(k, n), &DetpropOptions::default()).unwrap();
        assert!(r.passed, "{} err {:e}", r.identity, r.max_rel_err);
    }
}

#[test]
fn detprop_seeded_points_and_branches() {
    for seed in 0..3 {
        for (k, n) in [(2, 2), (2, 3), (3, 4)] {
            let sp = SamplePoint::specpar(&seeded_z(seed, n), 0.05, 0);
            for branch in -1..=1 {
                let opts = DetpropOptions { branch, ..Default::default() };
                let r = verify_detprop(k, n, &sp, &default_factors(k, n), &opts).unwrap();
                assert!(r.passed, "seed {seed} {} err {:e}", r.identity, r.max_rel_err);
            }
        }
    }
}

#[test]
fn detprop_other_determination_of_log_kappa() {
    let mut sp = sample(3);
    sp.log_kappa = Complex64::new(0.0, -PI);
    let r = verify_detprop(2, 3, &sp, &default_factors(2, 3), &DetpropOptions::default()).unwrap();
    assert!(r.passed, "err {:e}", r.max_rel_err);
}

#[test]
fn detprop_fails_without_the_phase() {
    // dropping e^{πi(k−1)} breaks the identity: the check is not vacuous
    let sp = sample(3);
    let fs: Vec<KClass> = default_factors(2, 3).iter().map(|p| KClass::from_p_poly(3, p)).collect();
    let big = ktheory::satake_k(&fs, 0).unwrap();
    let lhs = psi_class(&big, &sp, 40).unwrap();
    let mus: Vec<Vec<Cx>> = fs.iter().map(|f| psi_class(f, &sp, 40).unwrap()).collect();
    let scale = (2.0 * PI * i_unit() / sp.kappa).powi(-1) * (-(sp.zc().iter().sum::<Cx>()) / sp.kappa * sp.log_p2).exp();
    let rhs: Vec<Cx> = enumerate_index_sets(2, 3)
        .unwrap()
        .iter()
        .map(|j| scale * (mus[0][j.i1[0] - 1] * mus[1][j.i1[1] - 1] - mus[0][j.i1[1] - 1] * mus[1][j.i1[0] - 1]))
        .collect();
    assert!(max_rel_err(&lhs, &rhs, 0.0) > 1e-3);
}

#[test]
fn chern_character_examples() {
    let sp = sample(3);
    assert!(chern_character_eval(&KClass::constant(2, 3, 1), &sp).iter().all(|v| (v - c(1.0)).norm() < 1e-15));
    let r = k_gamma_ring(2, 3);
    let det_e1 = &Poly::var_idx(&r, 0) * &Poly::var_idx(&r, 1);
    let cls = KClass::from_gamma_poly(2, 3, &det_e1);
    for (j, v) in enumerate_index_sets(2, 3).unwrap().iter().zip(chern_character_eval(&cls, &sp)) {
        let s: f64 = j.i1.iter().map(|&a| sp.z[a - 1]).sum();
        assert!((v - (-2.0 * PI * i_unit() * s / sp.kappa).exp()).norm() < 1e-14);
    }
    let std = SamplePoint { kappa: Complex64::new(0.0, -2.0 * PI), log_kappa: Complex64::new((2.0 * PI).ln(), -PI / 2.0), ..sp };
    for (j, v) in enumerate_index_sets(2, 3).unwrap().iter().zip(chern_character_eval(&cls, &std)) {
        let s: f64 = j.i1.iter().map(|&a| std.z[a - 1]).sum();
        assert!((v - c(s.exp())).norm() < 1e-14);
    }
}

#[test]
fn b_class_p1_closed_form() {
    let sp = sample(2);
    let (z1, z2, kp) = (c(sp.z[0]), c(sp.z[1]), sp.kappa);
    let v = b_class_restriction(&KClass::constant(1, 2, 1), &idx(2, &[1]), &sp).unwrap();
    let expect = ((z1 - z2) / kp * sp.log_kappa).exp() * gamma(c(1.0) + (z1 - z2) / kp).unwrap();
    assert!((v - expect).norm() < 1e-14);
    let zero = SamplePoint { z: vec![0.0, 0.0], ..sp };
    assert!((b_class_restriction(&KClass::constant(1, 2, 1), &idx(2, &[2]), &zero).unwrap() - c(1.0)).norm() < 1e-15);
}

#[test]
fn leading_residue_equals_b_class() {
    for (k, n) in [(1, 2), (1, 3), (2, 3)] {
        let mut classes = kapranov_basis(k, n, false).unwrap().elements;
        classes.extend(kapranov_basis(k, n, true).unwrap().elements);
        for seed in 0..3 {
            let sp = SamplePoint::specpar(&seeded_z(10 + seed, n), 0.05, 0);
            for p in &classes {
                let r = leading_term_check(p, &sp, 1e-10).unwrap();
                assert!(r.passed, "({k},{n}) err {:e}", r.max_rel_err);
            }
        }
    }
}

#[test]
fn hrr_on_small_grassmannians() {
    let sp = sample(3);
    for (k, n) in [(1, 2), (1, 3), (2, 3)] {
        let sp = SamplePoint { z: sp.z[..n].to_vec(), ..sp.clone() };
        let mut classes = kapranov_basis(k, n, false).unwrap().elements;
        classes.push(KClass::constant(k, n, 1));
        if k == 1 {
            classes.extend(generate_q_basis(n, 0, QKind::Prime, false).unwrap().elements);
        }
        for v in &classes {
            let r = hrr_check(v, &sp, 1e-9).unwrap();
            assert!(r.passed, "({k},{n}) err {:e}", r.max_rel_err);
        }
    }
    let o = hrr_check(&KClass::constant(2, 3, 1), &sample(3), 1e-9).unwrap();
    assert!((o.lhs[0] - c(1.0)).norm() < 1e-12 && o.rhs[0] == c(1.0));
}

#[test]
fn hrr_pairing_form() {
    let sp = sample(3);
    let kap = kapranov_basis(2, 3, false).unwrap();
    for a in &kap.elements {
        for b in &kap.elements {
            let r = hrr2_check(a, b, &sp, 1e-9).unwrap();
            assert!(r.passed, "err {:e}", r.max_rel_err);
        }
    }
}

#[test]
fn todd_series_expansion() {
    let kp = c(-1.0);
    for t in [1e-3, 0.02, -0.05] {
        let t = c(t);
        let series = c(1.0) - PI * i_unit() / kp * t - 2.0 * (PI * PI / 6.0) * t * t / (kp * kp);
        assert!((todd_series(t, kp) - series).norm() < 10.0 * t.norm().powi(3) * 100.0);
    }
}

fn zq(n: usize) -> Vec<Q> {
    [qf(31, 97), qf(-57, 89), qf(11, 83), qf(23, 79)][..n].to_vec()
}

#[test]
fn levelt_g13_and_g24() {
    for (k, n, order) in [(1, 3, 10), (2, 4, 6)] {
        let lev = levelt_series(k, n, order, &zq(n), &qf(-1, 1)).unwrap();
        assert!(lev.coeffs[0].iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, v)| *v == qf((i == j) as i64, 1))));
        let r = lev.residual_check();
        assert!(r.passed, "{r}");
        let d = lev.det_check();
        assert!(d.passed, "{d}");
    }
}

#[test]
fn levelt_detects_resonance() {
    let z = vec![qf(1, 2), qf(-1, 2)];
    assert!(matches!(levelt_series(1, 2, 3, &z, &qf(-1, 1)), Err(NumError::ResonantZ(_))));
}

/// Jackson solutions are Levelt columns: `Ψ_J / (p1^{E_J/κ} p2^{…}) = Ψ•(s) u_J`.
#[test]
fn levelt_matches_jackson_solutions() {
    for (k, n, order) in [(1, 2, 3), (1, 2, 12), (1, 3, 10), (2, 4, 6)] {
        let lev = levelt_series(k, n, order, &zq(n), &qf(-1, 1)).unwrap();
        let z: Vec<f64> = [31.0 / 97.0, -57.0 / 89.0, 11.0 / 83.0, 23.0 / 79.0][..n].to_vec();
        let q = 0.01;
        let sp = SamplePoint::specpar(&z, q, 0);
        let psi = lev.eval(c(q));
        let tol = 10.0 * q.powi(order as i32 + 1) + 1e-12;
        for j in enumerate_index_sets(k, n).unwrap() {
            let s1: f64 = j.i1.iter().map(|&a| z[a - 1]).sum();
            let s2: f64 = j.i2().iter().map(|&a| z[a - 1]).sum();
            let pw = ((s1 * sp.log_p1 + s2 * sp.log_p2) / sp.kappa).exp();
            let full: Vec<Cx> = jackson_solution(&j, &sp, 60).unwrap().iter().map(|v| v / pw).collect();
            let lead: Vec<Cx> = jackson_solution(&j, &sp, 0).unwrap().iter().map(|v| v / pw).collect();
            let pred: Vec<Cx> = (0..lead.len()).map(|r| (0..lead.len()).map(|c| psi[r][c] * lead[c]).sum()).collect();
            let err = max_rel_err(&full, &pred, 0.0);
            assert!(err < tol, "({k},{n}) N={order} J={:?}: {err:e}", j.i1);
        }
    }
}

#[test]
fn qkz_shift_on_jackson_solutions() {
    for (k, n) in [(1, 2), (1, 3), (2, 3)] {
        let sp = sample(n);
        for j in enumerate_index_sets(k, n).unwrap() {
            for a in 1..=n {
                let r = qkz_shift_check(&j, a, &sp, 60, 1e-8).unwrap();
                assert!(r.passed, "{} err {:e}", r.identity, r.max_rel_err);
            }
        }
    }
}

#[test]
fn truncation_is_stable_and_reported() {
    let sp = sample(3);
    for j in enumerate_index_sets(2, 3).unwrap() {
        let a = jackson_solution(&j, &sp, 40).unwrap();
        let b = jackson_solution(&j, &sp, 50).unwrap();
        assert!(max_rel_err(&a, &b, 0.0) < 1e-12);
    }
    let far = SamplePoint::specpar(&sp.z, 0.9, 0);
    assert!(matches!(jackson_solution(&idx(3, &[1]), &far, 3), Err(NumError::TruncationNotConverged(_))));
    let s = jackson_integral(&[1], &sp, 40, &|_| Ok(vec![c(1.0)])).unwrap();
    assert!(s.shells < 40 && s.tail_ratio < 1e-12);
}

#[test]
fn default_factors_shape() {
    let fs = default_factors(2, 3);
    assert_eq!(fs.len(), 2);
    assert_eq!(fs[0].ring().names(), p_ring(3).names());
}
