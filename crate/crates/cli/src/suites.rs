use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::Instant;

use cohomology::{
    coh_ring, idempotent_basis, pairing_polynomial, quantum_c1_matrix, quantum_ring, schubert_class, schubert_class_kempf_laksov,
    stable_envelope_basis, CohClass, Flag, QBasis,
};
use combinatorics::enumerate_index_sets;
use exact_algebra::{qf, Check, Matrix, Poly, Q};
use ktheory::{
    apply_braid, canonical_checks, chi_pairing, dagger, dual_involution, generate_q_basis, k_ring, kapranov_basis, markov_checks,
    parse_braid, satake_exterior_basis, spectrum_criterion, spectrum_simple, stokes_matrices, wedge_stokes_checks, ExceptionalBasis,
    KClass, QKind,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use solutions_numeric::{
    default_factors, hrr2_check, hrr_check, leading_term_check, levelt_series, qkz_shift_check, verify_detprop, DetpropOptions,
    NumericReport, SamplePoint,
};
use weight_ops::{exterior_power_matrix, verify_compatibility, verify_compatibility_pair, verify_satake_gauge, weight_ring, ExteriorMode};

use crate::{fixtures, run_jobs, workers_from_env, ConfigError, Job, Report, Sample};

pub const SUITE_NAMES: &[&str] = &["qkz-examples", "compat", "satake", "cohomology", "ktheory", "markov", "spectrum", "numerics", "properties"];

#[derive(Debug, Clone, PartialEq)]
pub struct Tolerances {
    pub detprop: f64,
    pub leading_term: f64,
    pub hrr: f64,
    /// Cap on the residue degree `|ℓ|` in Jackson sums.
    pub trunc: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { detprop: 1e-8, leading_term: 1e-10, hrr: 1e-9, trunc: 40 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub max_n: usize,
    /// Empty selects every suite.
    pub which: BTreeSet<String>,
    pub tol: Tolerances,
    pub output: Option<PathBuf>,
    pub seed: u64,
    /// `None` reads the worker count from the environment.
    pub workers: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { max_n: 4, which: BTreeSet::new(), tol: Tolerances::default(), output: None, seed: 0, workers: None }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(1..=5).contains(&self.max_n) {
            return Err(ConfigError::MaxN(self.max_n));
        }
        if let Some(bad) = self.which.iter().find(|s| !SUITE_NAMES.contains(&s.as_str())) {
            return Err(ConfigError::UnknownSuite(bad.clone()));
        }
        for t in [self.tol.detprop, self.tol.leading_term, self.tol.hrr] {
            if !(t.is_finite() && t > 0.0) {
                return Err(ConfigError::Tolerance(t));
            }
        }
        if self.workers == Some(0) {
            return Err(ConfigError::Workers);
        }
        Ok(())
    }

    fn selected(&self) -> Vec<&'static str> {
        SUITE_NAMES.iter().copied().filter(|s| self.which.is_empty() || self.which.contains(*s)).collect()
    }
}

fn shapes(max_n: usize) -> Vec<(usize, usize)> {
    (1..=max_n).flat_map(|n| (0..=n).map(move |k| (k, n))).collect()
}

fn fail(id: impl Into<String>, anchor: &str, e: impl std::fmt::Display) -> Vec<Check> {
    vec![Check::new(id, anchor, false, e.to_string())]
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<Report, ConfigError> {
    cfg.validate()?;
    let workers = match cfg.workers {
        Some(w) => w,
        None => workers_from_env()?,
    };
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let mut samples = Vec::new();
    let mut jobs = Vec::new();
    let suites = cfg.selected();
    for s in &suites {
        match *s {
            "qkz-examples" => qkz_examples(&mut jobs),
            "compat" => compat(&mut jobs),
            "satake" => satake(&mut jobs),
            "cohomology" => cohomology_suite(&mut jobs),
            "ktheory" => ktheory_suite(&mut jobs),
            "markov" => markov(&mut jobs),
            "spectrum" => spectrum(&mut jobs),
            "numerics" => numerics(&mut jobs, &mut rng, &mut samples, &cfg.tol),
            "properties" => properties(&mut jobs, &mut rng, cfg.max_n),
            _ => unreachable!("validated"),
        }
    }
    jobs.retain(|j| j.size <= cfg.max_n);
    let checks = run_jobs(jobs, workers);
    samples.retain(|s: &Sample| s.z.len() <= cfg.max_n);
    Ok(Report {
        suites: suites.iter().map(|s| s.to_string()).collect(),
        seed: cfg.seed,
        max_n: cfg.max_n,
        samples,
        checks,
        elapsed: start.elapsed(),
    })
}

fn qkz_examples(jobs: &mut Vec<Job>) {
    jobs.push(Job::new("qkz-examples", 3, fixtures::qkz_n3_checks));
    jobs.push(Job::new("qkz-examples", 3, fixtures::dyn_n3_checks));
}

fn compat(jobs: &mut Vec<Job>) {
    for (k, n) in shapes(4) {
        jobs.push(Job::new("compat", n, move || verify_compatibility(n, k)));
    }
    jobs.push(Job::new("compat", 5, || vec![verify_compatibility_pair(5, 2, 1, 2)]));
}

fn satake(jobs: &mut Vec<Job>) {
    for (k, n) in shapes(5) {
        if k > 0 {
            jobs.push(Job::new("satake", n, move || verify_satake_gauge(n, k)));
        }
    }
    jobs.push(Job::new("satake", 4, fixtures::n4_exterior_checks));
}

fn stab_orthogonality(k: usize, n: usize) -> Vec<Check> {
    let id = format!("stab orthogonality ({k},{n})");
    let (st, op) = match stable_envelope_basis(k, n) {
        Ok(x) => x,
        Err(e) => return fail(id, "stabort", e),
    };
    let sgn = if k * (n - k) % 2 == 0 { 1 } else { -1 };
    for (i, s) in st.iter().enumerate() {
        for (j, o) in op.iter().enumerate() {
            let want = Poly::int(&coh_ring(n), if i == j { sgn } else { 0 });
            match pairing_polynomial(s, o) {
                Ok(v) if v == want => {}
                Ok(v) => return vec![Check::new(id, "stabort", false, format!("η(Stab_{i}, Stab^op_{j}) = {v}"))],
                Err(e) => return fail(id, "stabort", e),
            }
        }
    }
    vec![Check::new(id, "stabort", true, format!("η = {sgn}·δ"))]
}

fn schubert_routes(k: usize, n: usize) -> Vec<Check> {
    let id = format!("kempf-laksov = factorial schur ({k},{n})");
    let sets = match enumerate_index_sets(k, n) {
        Ok(s) => s,
        Err(e) => return fail(id, "facschurpol", e),
    };
    for idx in sets {
        let lam = idx.partition();
        for flag in [Flag::Standard, Flag::Opposite] {
            match (schubert_class(&lam, k, n, flag), schubert_class_kempf_laksov(&lam, k, n, flag)) {
                (Ok(a), Ok(b)) if a == b => {}
                (Ok(_), Ok(_)) => return vec![Check::new(id, "facschurpol", false, format!("λ = {:?} {flag:?}", lam.parts()))],
                (Err(e), _) | (_, Err(e)) => return fail(id, "facschurpol", e),
            }
        }
    }
    vec![Check::new(id, "facschurpol", true, "")]
}

fn idempotent_relations(k: usize, n: usize) -> Vec<Check> {
    let ids = idempotent_basis(k, n);
    let sum = ids.iter().skip(1).fold(ids[0].clone(), |a, b| a.add(b));
    let mut ok = sum == CohClass::constant(k, n, 1);
    for (i, a) in ids.iter().enumerate() {
        for (j, b) in ids.iter().enumerate() {
            ok &= a.mul(b) == if i == j { a.clone() } else { CohClass::constant(k, n, 0) };
        }
    }
    vec![Check::new(format!("idempotents ({k},{n})"), "thlocal", ok, "ΣΔ = 1, ΔiΔj = δijΔi")]
}

/// `X_i` on `G(k,n)` from the exterior derivation of the `ℙ^{n−1}` matrices,
/// with `q ↦ (−1)^{k−1} q` and the shift `(1−k)Σz` on `X_2`.
fn exterior_derivation(k: usize, n: usize) -> Vec<Check> {
    let r = quantum_ring(n);
    let mut img: Vec<Poly> = (0..n).map(|a| Poly::var_idx(&r, a)).collect();
    let qv = Poly::v(&r, "q");
    img.push(if k % 2 == 0 { -&qv } else { qv });
    let sum_z = (0..n).fold(Poly::zero(&r), |a, i| &a + &Poly::var_idx(&r, i));
    (1..=2)
        .map(|i| {
            let id = format!("exterior derivation ({k},{n}) X{i}");
            let built = (|| -> Result<(Matrix, Matrix), String> {
                let p = quantum_c1_matrix(1, n, i, QBasis::Schubert).map_err(|e| e.to_string())?;
                let p = p.try_map(|e| e.subs(&img)).map_err(|e| e.to_string())?;
                let mut lifted = exterior_power_matrix(&p, k, ExteriorMode::Derivation).map_err(|e| e.to_string())?;
                if i == 2 {
                    lifted = lifted.add(&Matrix::scalar(&r, lifted.rows(), &sum_z.scale_int(1 - k as i64)));
                }
                Ok((quantum_c1_matrix(k, n, i, QBasis::Schubert).map_err(|e| e.to_string())?, lifted))
            })();
            match built {
                Ok((got, want)) => fixtures::matrix_check(id, "gSc", &got, &want),
                Err(e) => Check::new(id, "gSc", false, e),
            }
        })
        .collect()
}

fn cohomology_suite(jobs: &mut Vec<Job>) {
    for (k, n) in shapes(4) {
        if k == 0 {
            continue;
        }
        jobs.push(Job::new("cohomology", n, move || stab_orthogonality(k, n)));
        jobs.push(Job::new("cohomology", n, move || schubert_routes(k, n)));
        jobs.push(Job::new("cohomology", n, move || idempotent_relations(k, n)));
    }
    jobs.push(Job::new("cohomology", 3, fixtures::p2g23_checks));
    jobs.push(Job::new("cohomology", 4, fixtures::quantum_table_checks));
    for (k, n) in [(2, 3), (2, 4), (3, 4)] {
        jobs.push(Job::new("cohomology", n, move || exterior_derivation(k, n)));
    }
}

/// Unitriangular, integral, and invariant under permutations of `Z`.
fn gram_shape(b: &ExceptionalBasis, label: &str) -> Check {
    let id = format!("gram {label}");
    let g = match b.gram() {
        Ok(g) => g,
        Err(e) => return Check::new(id, "epgm", false, e.to_string()),
    };
    let n = b.n;
    for i in 0..g.rows() {
        for j in 0..g.cols() {
            let e = g.get(i, j);
            let tri = if i == j { e.is_one() } else if i > j { e.is_zero() } else { true };
            if !tri || !e.is_integral() {
                return Check::new(id, "epgm", false, format!("entry ({i},{j}) = {e}"));
            }
            for s in 0..n.saturating_sub(1) {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(s, s + 1);
                if e.permute_vars(&perm) != *e {
                    return Check::new(id, "epgm", false, format!("entry ({i},{j}) not symmetric"));
                }
            }
        }
    }
    Check::new(id, "epgm", true, format!("{}x{}", g.rows(), g.cols()))
}

fn stokes_pair(k: usize, n: usize, ell: i32, kind: QKind) -> Vec<Check> {
    let id = format!("S2 = (S1†)^-1 ({k},{n}) ℓ={ell} {kind:?}");
    match stokes_matrices(k, n, ell, kind) {
        Ok((s1, s2)) => {
            let ok = dagger(&s1).unitriangular_inverse().is_ok_and(|m| m == s2);
            vec![Check::new(id, "corstokmatr", ok, "")]
        }
        Err(e) => fail(id, "corstokmatr", e),
    }
}

fn ktheory_suite(jobs: &mut Vec<Job>) {
    for n in 2..=4 {
        for k in 1..n {
            jobs.push(Job::new("ktheory", n, move || {
                let mut v = Vec::new();
                for tw in [false, true] {
                    let label = format!("kapranov ({k},{n}) twisted={tw}");
                    v.push(match kapranov_basis(k, n, tw) {
                        Ok(b) => gram_shape(&b, &label),
                        Err(e) => Check::new(format!("gram {label}"), "epgm", false, e.to_string()),
                    });
                }
                v
            }));
            for kind in [QKind::Prime, QKind::DoublePrime] {
                for ell in [-1, 0] {
                    jobs.push(Job::new("ktheory", n, move || stokes_pair(k, n, ell, kind)));
                }
            }
        }
        for kind in [QKind::Prime, QKind::DoublePrime] {
            for ell in -1..=1 {
                jobs.push(Job::new("ktheory", n, move || {
                    let label = format!("{kind:?} ℓ={ell} (1,{n})");
                    match generate_q_basis(n, ell, kind, true) {
                        Ok(b) => vec![gram_shape(&b, &label)],
                        Err(e) => fail(format!("gram {label}"), "epgm", e),
                    }
                }));
            }
        }
    }
    for n in [3, 4] {
        for kind in [QKind::Prime, QKind::DoublePrime] {
            jobs.push(Job::new("ktheory", n, move || wedge_stokes_checks(2, n, -1, kind).unwrap_or_else(|e| fail(format!("corstokmat (2,{n})"), "corstokmat", e))));
        }
    }
    for (k, n) in [(1, 3), (2, 3), (1, 4), (2, 4)] {
        jobs.push(Job::new("ktheory", n, move || {
            let id = format!("canonical ({k},{n})");
            generate_q_basis(n, -1, QKind::Prime, true)
                .and_then(|q| satake_exterior_basis(&q, k, 0))
                .and_then(|b| canonical_checks(&b))
                .unwrap_or_else(|e| fail(id, "constrS", e))
        }));
    }
    jobs.push(Job::new("ktheory", 5, fixtures::theta_g45_checks));
}

fn markov(jobs: &mut Vec<Job>) {
    for ell in [-1, 0] {
        for kind in [QKind::Prime, QKind::DoublePrime] {
            jobs.push(Job::new("markov", 3, move || markov_checks(ell, kind).unwrap_or_else(|e| fail(format!("markov ℓ={ell} {kind:?}"), "markov1", e))));
        }
    }
}

fn spectrum(jobs: &mut Vec<Job>) {
    jobs.push(Job::new("spectrum", 0, || {
        (2..=10usize)
            .flat_map(|n| (0..=n).map(move |k| (k, n)))
            .map(|(k, n)| {
                let (a, b) = (spectrum_simple(k, n), spectrum_criterion(k, n));
                Check::new(format!("spectrum ({k:02},{n:02})"), "spectral-simplicity", a == b, format!("simple = {a}"))
            })
            .collect()
    }));
}

fn sample_z(rng: &mut StdRng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-0.9..0.9)).collect()
}

fn numeric_check(r: Result<NumericReport, solutions_numeric::NumError>, id: String, anchor: &str) -> Vec<Check> {
    match r {
        Ok(r) => vec![Check::new(id, r.anchor.clone(), r.passed, format!("max rel err {:.3e} (tol {:.0e})", r.max_rel_err, r.tol))],
        Err(e) => fail(id, anchor, e),
    }
}

fn numerics(jobs: &mut Vec<Job>, rng: &mut StdRng, samples: &mut Vec<Sample>, tol: &Tolerances) {
    const Q_PARAM: f64 = 0.05;
    for (k, n) in [(2, 2), (2, 3)] {
        let z = sample_z(rng, n);
        samples.push(Sample { label: format!("detprop ({k},{n})"), z: z.clone() });
        for branch in -1..=1 {
            let opts = DetpropOptions { max_l: tol.trunc, tol: tol.detprop, branch };
            let z = z.clone();
            jobs.push(Job::new("numerics", n, move || {
                let sp = SamplePoint::specpar(&z, Q_PARAM, 0);
                let r = verify_detprop(k, n, &sp, &default_factors(k, n), &opts);
                numeric_check(r, format!("detprop ({k},{n}) branch {branch}"), "detprop")
            }));
        }
    }
    for (k, n) in [(1, 2), (1, 3), (2, 3)] {
        let z = sample_z(rng, n);
        samples.push(Sample { label: format!("apj ({k},{n})"), z: z.clone() });
        let t = tol.leading_term;
        jobs.push(Job::new("numerics", n, move || {
            let sp = SamplePoint::specpar(&z, Q_PARAM, 0);
            let mut out = Vec::new();
            for tw in [false, true] {
                match kapranov_basis(k, n, tw) {
                    Ok(b) => {
                        for (i, p) in b.elements.iter().enumerate() {
                            out.extend(numeric_check(leading_term_check(p, &sp, t), format!("apj ({k},{n}) kapranov twisted={tw} #{i}"), "apj"));
                        }
                    }
                    Err(e) => out.extend(fail(format!("apj ({k},{n})"), "apj", e)),
                }
            }
            out
        }));
    }
    for (k, n) in [(1, 2), (1, 3), (2, 3)] {
        let z = sample_z(rng, n);
        samples.push(Sample { label: format!("HRR ({k},{n})"), z: z.clone() });
        let t = tol.hrr;
        jobs.push(Job::new("numerics", n, move || {
            let sp = SamplePoint::specpar(&z, Q_PARAM, 0);
            let mut classes = match kapranov_basis(k, n, false) {
                Ok(b) => b.elements,
                Err(e) => return fail(format!("HRR ({k},{n})"), "HRR", e),
            };
            classes.push(KClass::constant(k, n, 1));
            let mut out = Vec::new();
            for (i, v) in classes.iter().enumerate() {
                out.extend(numeric_check(hrr_check(v, &sp, t), format!("HRR ({k},{n}) #{i}"), "HRR"));
            }
            for (i, a) in classes.iter().enumerate() {
                for (j, b) in classes.iter().enumerate() {
                    out.extend(numeric_check(hrr2_check(a, b, &sp, t), format!("HRR2 ({k},{n}) #{i},#{j}"), "HRR2"));
                }
            }
            out
        }));
    }
    let z = sample_z(rng, 3);
    samples.push(Sample { label: "qKZ shift (1,3)".into(), z: z.clone() });
    let trunc = tol.trunc;
    jobs.push(Job::new("numerics", 3, move || {
        let sp = SamplePoint::specpar(&z, Q_PARAM, 0);
        let mut out = Vec::new();
        for j in enumerate_index_sets(1, 3).unwrap_or_default() {
            for a in 1..=3 {
                out.extend(numeric_check(qkz_shift_check(&j, a, &sp, trunc, 1e-9), format!("qKZ shift (1,3) J={:?} a={a}", j.i1), "qKZ.0"));
            }
        }
        out
    }));
    // exact rational point, away from resonances
    let zq = [qf(31, 97), qf(-57, 89), qf(11, 83), qf(23, 79)];
    for (k, n, order) in [(1, 3, 10), (2, 4, 6)] {
        let z: Vec<Q> = zq[..n].to_vec();
        jobs.push(Job::new("numerics", n, move || match levelt_series(k, n, order, &z, &qf(-1, 1)) {
            Ok(lev) => vec![lev.residual_check(), lev.det_check()],
            Err(e) => fail(format!("levelt ({k},{n}) N={order}"), "thmlev", e),
        }));
    }
}

fn random_laurent(rng: &mut StdRng, n: usize) -> Poly {
    let r = k_ring(n);
    let mut p = Poly::zero(&r);
    for _ in 0..rng.gen_range(1..4) {
        let mut t = Poly::int(&r, rng.gen_range(-3..4));
        for a in 0..n {
            t = &t * &Poly::var_idx(&r, a).powi(rng.gen_range(-2..3)).expect("Laurent");
        }
        p += &t;
    }
    p
}

fn random_class(rng: &mut StdRng, kap: &ExceptionalBasis) -> KClass {
    kap.elements.iter().fold(KClass::constant(kap.k, kap.n, 0), |acc, e| acc.add(&e.scale(&random_laurent(rng, kap.n))))
}

fn properties(jobs: &mut Vec<Job>, rng: &mut StdRng, max_n: usize) {
    let cb_seed: u64 = rng.gen();
    let chi_seed: u64 = rng.gen();
    let top = max_n.min(5);
    jobs.push(Job::new("properties", top, move || {
        let mut rng = StdRng::seed_from_u64(cb_seed);
        let r = weight_ring(1);
        let mut bad = Vec::new();
        for trial in 0..50 {
            let n = rng.gen_range(1..=top);
            let k = rng.gen_range(1..=n);
            let mut draw = || {
                let v: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-4..5)).collect();
                Matrix::from_fn(&r, n, n, |i, j| Poly::int(&r, v[i * n + j]))
            };
            let (a, b) = (draw(), draw());
            let w = |m: &Matrix| exterior_power_matrix(m, k, ExteriorMode::Multiplicative);
            match (w(&a.mul(&b)), w(&a), w(&b)) {
                (Ok(l), Ok(x), Ok(y)) if l == x.mul(&y) => {}
                _ => bad.push(trial),
            }
        }
        vec![Check::new("cauchy-binet on 50 integer matrices", "cauchy-binet", bad.is_empty(), format!("n ≤ {top}, failing trials {bad:?}"))]
    }));
    jobs.push(Job::new("properties", 4, || {
        let kap = match kapranov_basis(2, 4, true) {
            Ok(b) => b,
            Err(e) => return fail("braid relations G(2,4)", "braid", e),
        };
        let mut words: Vec<(String, String)> = (1..5).map(|i| (format!("t{i} t{} t{i}", i + 1), format!("t{} t{i} t{}", i + 1, i + 1))).collect();
        words.extend([("t1 t4".into(), "t4 t1".into()), ("t1 t3".into(), "t3 t1".into()), ("t2 t5".into(), "t5 t2".into())]);
        words.push(("t1 t1^-1".into(), "".into()));
        words
            .into_iter()
            .map(|(w1, w2)| {
                let id = format!("braid {w1} = {}", if w2.is_empty() { "1" } else { &w2 });
                let go = |w: &str| parse_braid(w).and_then(|word| apply_braid(&kap, &word)).map(|b| b.elements);
                match (go(&w1), go(&w2)) {
                    (Ok(a), Ok(b)) => Check::new(id, "braid", a == b, ""),
                    (Err(e), _) | (_, Err(e)) => Check::new(id, "braid", false, e.to_string()),
                }
            })
            .collect()
    }));
    jobs.push(Job::new("properties", 4, move || {
        let mut rng = StdRng::seed_from_u64(chi_seed);
        let kap = match kapranov_basis(2, 4, false) {
            Ok(b) => b,
            Err(e) => return fail("χ properties", "epgm", e),
        };
        let (mut inv_bad, mut ses_bad) = (Vec::new(), Vec::new());
        for trial in 0..50 {
            let (e, f) = (random_class(&mut rng, &kap), random_class(&mut rng, &kap));
            let (p1, p2) = (random_laurent(&mut rng, 4), random_laurent(&mut rng, 4));
            if dual_involution(&dual_involution(&e)) != e {
                inv_bad.push(trial);
            }
            let ok = (|| -> Result<bool, ktheory::KError> {
                let lhs = chi_pairing(&e.scale(&p1), &f.scale(&p2))?;
                let base = chi_pairing(&e, &f)?;
                let rhs = &(&p1.invert_vars() * &p2) * &base;
                let additive = chi_pairing(&e.add(&f), &f)? == &base + &chi_pairing(&f, &f)?;
                Ok(lhs == rhs && additive)
            })();
            if !ok.unwrap_or(false) {
                ses_bad.push(trial);
            }
        }
        vec![
            Check::new("dual involution on 50 classes", "epgm", inv_bad.is_empty(), format!("failing trials {inv_bad:?}")),
            Check::new("χ sesquilinear on 50 pairs", "epgm", ses_bad.is_empty(), format!("failing trials {ses_bad:?}")),
        ]
    }));
}
