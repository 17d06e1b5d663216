use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use grassmann_cli::export::{self, checks_doc, Doc};
use grassmann_cli::{run_suite, Format, SuiteConfig, Tolerances};
use ktheory::{canonical_checks, kapranov_basis, parse_braid, KClass};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use solutions_numeric::{default_factors, hrr2_check, hrr_check, leading_term_check, verify_detprop, DetpropOptions, SamplePoint};
use weight_ops::{verify_compatibility, verify_compatibility_pair, verify_satake_gauge};

#[derive(Parser)]
#[command(name = "grassmann", version, about = "qKZ, quantum cohomology and quantum K-theory of Grassmannians")]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// qKZ operator K_a on the (k, n−k) weight space.
    Qkz {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        a: usize,
    },
    /// Dynamical operator X_i.
    Dyn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        i: usize,
    },
    /// Flatness and compatibility of the joint qKZ / dynamical system.
    VerifyCompat {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Only the pair (a, b), e.g. `1,2`.
        #[arg(long, value_delimiter = ',')]
        pair: Option<Vec<usize>>,
    },
    /// Exterior-power gauge identities.
    SatakeCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Equivariant Schubert class, as fixed-point restrictions.
    Schubert {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Partition, e.g. `2,1`; empty for the fundamental class.
        #[arg(long, value_delimiter = ',', default_value = "")]
        lambda: Vec<String>,
        #[arg(long)]
        opposite: bool,
    },
    /// Quantum multiplication by c1(E_bundle).
    QuantumMatrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        bundle: usize,
        #[arg(long, default_value = "schubert")]
        basis: String,
    },
    /// Equivariant Poincaré pairing table.
    PairingTable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "stab")]
        basis: String,
    },
    /// Gram matrix χ(e_i, e_j) of an exceptional basis.
    Gram {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "kapranov")]
        basis: String,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        ell: i32,
        #[arg(long)]
        twisted: bool,
    },
    /// Stokes matrices S1, S2 from the Gram matrix.
    Stokes {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        ell: i32,
        #[arg(long, default_value = "prime")]
        kind: String,
    },
    /// Apply a braid word such as "t1 t2^-1" to an exceptional basis.
    Mutate {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value = "kapranov")]
        basis: String,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        ell: i32,
        #[arg(long)]
        braid: String,
    },
    /// Canonical operator, trace constraints and Stokes identities.
    CanonicalCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "prime")]
        basis: String,
        #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
        ell: i32,
    },
    /// Determinantal identity for Jackson solutions.
    Detprop {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, default_value_t = 40)]
        trunc: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        branch: i32,
    },
    /// Leading residue term against the B-class.
    Bcheck {
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Hirzebruch–Riemann–Roch via the κ-deformed Chern character and Todd class.
    Hrr {
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        class: ClassArgs,
        /// Second Kapranov index for the pairing form.
        #[arg(long)]
        with: Option<usize>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Run the verification suite; exit code 0 iff every check passes.
    Suite {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Suite names, comma separated; all when omitted.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-8)]
        tol_detprop: f64,
        #[arg(long, default_value_t = 1e-10)]
        tol_bclass: f64,
        #[arg(long, default_value_t = 1e-9)]
        tol_hrr: f64,
        #[arg(long, default_value_t = 40)]
        trunc: usize,
    },
    /// Print a stored object by id, e.g. `qkz:3:2:1` or `gram:kapranov:2:3`.
    Export {
        id: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct PointArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Equivariant parameters, comma separated; drawn from `--seed` when omitted.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    z: Vec<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// p1 = 1/q, p2 = 1.
    #[arg(long, default_value_t = 0.05)]
    q: f64,
    #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
    kappa: f64,
}

impl PointArgs {
    fn sample(&self) -> Result<SamplePoint, String> {
        let z = if self.z.is_empty() {
            let mut rng = StdRng::seed_from_u64(self.seed);
            (0..self.n).map(|_| rng.gen_range(-0.9..0.9)).collect()
        } else {
            self.z.clone()
        };
        if z.len() != self.n {
            return Err(format!("--z has {} values, need {}", z.len(), self.n));
        }
        if self.kappa == 0.0 || self.q <= 0.0 {
            return Err("need κ ≠ 0 and q > 0".into());
        }
        let mut sp = SamplePoint::specpar(&z, self.q, 0);
        sp.kappa = Complex64::new(self.kappa, 0.0);
        sp.log_kappa = Complex64::new(self.kappa.abs().ln(), if self.kappa < 0.0 { PI } else { 0.0 });
        eprintln!("sample z = {z:?}");
        Ok(sp)
    }
}

#[derive(Args)]
struct ClassArgs {
    /// Kapranov class index (1-based); the structure sheaf when omitted.
    #[arg(long)]
    class: Option<usize>,
    #[arg(long)]
    twisted: bool,
}

impl ClassArgs {
    fn pick(&self, k: usize, n: usize, idx: Option<usize>) -> Result<KClass, String> {
        match idx {
            None => Ok(KClass::constant(k, n, 1)),
            Some(i) => {
                let b = kapranov_basis(k, n, self.twisted).map_err(|e| e.to_string())?;
                b.elements.get(i.wrapping_sub(1)).cloned().ok_or_else(|| format!("class index {i} out of 1..={}", b.len()))
            }
        }
    }
}

fn parse_lambda(v: &[String]) -> Result<Vec<usize>, String> {
    v.iter().filter(|s| !s.trim().is_empty()).map(|s| s.trim().parse::<usize>().map_err(|e| format!("λ part `{s}`: {e}"))).collect()
}

fn run(cmd: Cmd, format: Format) -> Result<(String, bool), String> {
    let e = |x: export::ExportError| x.to_string();
    let doc: Doc = match cmd {
        Cmd::Qkz { n, k, a } => export::qkz_doc(n, k, a).map_err(e)?,
        Cmd::Dyn { n, k, i } => export::dyn_doc(n, k, i).map_err(e)?,
        Cmd::VerifyCompat { n, k, pair } => {
            let checks = match pair.as_deref() {
                Some([a, b]) => vec![verify_compatibility_pair(n, k, *a, *b)],
                Some(_) => return Err("--pair takes two indices, e.g. 1,2".into()),
                None => verify_compatibility(n, k),
            };
            checks_doc("compat", checks)
        }
        Cmd::SatakeCheck { n, k } => checks_doc("satake", verify_satake_gauge(n, k)),
        Cmd::Schubert { n, k, lambda, opposite } => export::schubert_doc(n, k, &parse_lambda(&lambda)?, opposite).map_err(e)?,
        Cmd::QuantumMatrix { n, k, bundle, basis } => export::quantum_doc(n, k, bundle, &basis).map_err(e)?,
        Cmd::PairingTable { n, k, basis } => export::pairing_doc(n, k, &basis).map_err(e)?,
        Cmd::Gram { n, k, basis, ell, twisted } => export::gram_doc(n, k, &basis, ell, twisted).map_err(e)?,
        Cmd::Stokes { n, k, ell, kind } => export::stokes_doc(n, k, ell, &kind).map_err(e)?,
        Cmd::Mutate { n, k, basis, ell, braid } => {
            let b = export::exceptional(n, k, &basis, ell, true).map_err(e)?;
            let word = parse_braid(&braid).map_err(|x| x.to_string())?;
            let moved = ktheory::apply_braid(&b, &word).map_err(|x| x.to_string())?;
            export::basis_doc(&moved).map_err(e)?
        }
        Cmd::CanonicalCheck { n, k, basis, ell } => {
            let b = export::exceptional(n, k, &basis, ell, true).map_err(e)?;
            checks_doc("canonical", canonical_checks(&b).map_err(|x| x.to_string())?)
        }
        Cmd::Detprop { point, trunc, tol, branch } => {
            let sp = point.sample()?;
            let opts = DetpropOptions { max_l: trunc, tol, branch };
            let r = verify_detprop(point.k, point.n, &sp, &default_factors(point.k, point.n), &opts).map_err(|x| x.to_string())?;
            Doc::Numeric(vec![r])
        }
        Cmd::Bcheck { point, class, tol } => {
            let sp = point.sample()?;
            let p = class.pick(point.k, point.n, class.class)?;
            Doc::Numeric(vec![leading_term_check(&p, &sp, tol).map_err(|x| x.to_string())?])
        }
        Cmd::Hrr { point, class, with, tol } => {
            let sp = point.sample()?;
            let p = class.pick(point.k, point.n, class.class)?;
            let r = match with {
                None => hrr_check(&p, &sp, tol),
                Some(j) => hrr2_check(&p, &class.pick(point.k, point.n, Some(j))?, &sp, tol),
            };
            Doc::Numeric(vec![r.map_err(|x| x.to_string())?])
        }
        Cmd::Suite { max_n, only, seed, output, tol_detprop, tol_bclass, tol_hrr, trunc } => {
            let cfg = SuiteConfig {
                max_n,
                which: only.into_iter().filter(|s| !s.is_empty()).collect::<BTreeSet<_>>(),
                tol: Tolerances { detprop: tol_detprop, leading_term: tol_bclass, hrr: tol_hrr, trunc },
                output,
                seed,
                workers: None,
            };
            let report = run_suite(&cfg).map_err(|x| x.to_string())?;
            for s in &report.samples {
                eprintln!("sample {}: z = {:?}", s.label, s.z);
            }
            eprintln!("{} checks in {:.2?}", report.checks.len(), report.elapsed);
            let text = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            if let Some(path) = &cfg.output {
                std::fs::write(path, &text).map_err(|x| format!("{}: {x}", path.display()))?;
            }
            return Ok((text, report.passed()));
        }
        Cmd::Export { id, output } => {
            let text = export::export(&id, format).map_err(e)?;
            if let Some(path) = output {
                std::fs::write(&path, &text).map_err(|x| format!("{}: {x}", path.display()))?;
            }
            return Ok((text, true));
        }
    };
    Ok((doc.render(format), doc.passed()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd, cli.format) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
