use std::f64::consts::PI;

use combinatorics::{enumerate_index_sets, IndexSet};
use exact_algebra::{qf, Poly, Ring};
use num_complex::Complex64;

/// Integer polynomial, coefficients from degree 0 upward.
type IPoly = Vec<i64>;

fn trim(mut p: IPoly) -> IPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Remainder of `a` modulo a monic `m`.
fn rem_monic(a: &[i64], m: &[i64]) -> IPoly {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] -= lead * c;
        }
        r.pop();
    }
    trim(r)
}

/// Exact quotient of `a` by a monic `m`.
fn div_monic(a: &[i64], m: &[i64]) -> IPoly {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let mut q = vec![0; r.len().saturating_sub(dm)];
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        q[shift] = lead;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] -= lead * c;
        }
        r.pop();
    }
    assert!(r.iter().all(|&c| c == 0), "cyclotomic division must be exact");
    q
}

/// `Φ_n(x)` by dividing `x^n − 1` by every `Φ_d`, `d | n`, `d < n`.
pub fn cyclotomic(n: usize) -> Vec<i64> {
    let mut p = vec![0; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = div_monic(&p, &cyclotomic(d));
        }
    }
    p
}

pub fn smallest_prime_factor(n: usize) -> usize {
    (2..=n).find(|d| n % d == 0).unwrap_or(n)
}

/// `𝔰_I = Σ_{i∈I_1} ζ_n^{i−1}` reduced modulo `Φ_n`.
fn sum_class(i: &IndexSet, phi: &[i64]) -> IPoly {
    let mut v = vec![0; i.n];
    for &a in &i.i1 {
        v[a - 1] += 1;
    }
    rem_monic(&v, phi)
}

/// `U` has simple spectrum iff the values `𝔰_I` are pairwise distinct,
/// decided exactly in `ℚ(ζ_n)`.
pub fn spectrum_simple(k: usize, n: usize) -> bool {
    let phi = cyclotomic(n);
    let mut vals: Vec<IPoly> = enumerate_index_sets(k, n).expect("valid shape").iter().map(|i| sum_class(i, &phi)).collect();
    let total = vals.len();
    vals.sort();
    vals.dedup();
    vals.len() == total
}

/// Closed criterion: not simple iff `π_1(n) ≤ k ≤ n − π_1(n)`.
pub fn spectrum_criterion(k: usize, n: usize) -> bool {
    let p = smallest_prime_factor(n);
    !(p <= k && k + p <= n)
}

/// Formal-monodromy and exponential data at `s = ∞`.
#[derive(Debug, Clone)]
pub struct FormalData {
    pub k: usize,
    pub n: usize,
    /// `Φ_n`, low degree first.
    pub cyclotomic: Vec<i64>,
    /// `𝔰_I` as integer vectors modulo `Φ_n`, lex order of `I`.
    pub sums: Vec<Vec<i64>>,
    /// `𝔭_I = ζ_n^{p}`, stored as `p mod n`.
    pub product_exponents: Vec<usize>,
    /// `Λ_{k,n}(z) = k((n−1)/2 + Σ z_a)`.
    pub exponent: Poly,
    /// `U = diag(n ζ_{2n}^{k−1} 𝔰_I)`: the exponent of `ζ_{2n}`.
    pub u_phase: usize,
    /// `𝒦_j = diag(ζ_{2n}^{−k(k−1)} 𝔭_I)`: the exponent of `ζ_{2n}` mod `2n`.
    pub k_phase: usize,
}

impl FormalData {
    pub fn sum_value(&self, idx: usize) -> Complex64 {
        let z = Complex64::from_polar(1.0, 2.0 * PI / self.n as f64);
        self.sums[idx].iter().enumerate().map(|(i, &c)| z.powu(i as u32) * c as f64).sum()
    }

    pub fn u_entry(&self, idx: usize) -> Complex64 {
        let ph = Complex64::from_polar(1.0, PI * self.u_phase as f64 / self.n as f64);
        ph * self.n as f64 * self.sum_value(idx)
    }

    pub fn k_entry(&self, idx: usize) -> Complex64 {
        let e = self.k_phase as f64 / self.n as f64 + 2.0 * self.product_exponents[idx] as f64 / self.n as f64;
        Complex64::from_polar(1.0, PI * e)
    }
}

pub fn formal_data(k: usize, n: usize) -> FormalData {
    let phi = cyclotomic(n);
    let sets = enumerate_index_sets(k, n).expect("valid shape");
    let sums = sets.iter().map(|i| sum_class(i, &phi)).collect();
    let product_exponents = sets
        .iter()
        .map(|i| {
            let s: i64 = i.i1.iter().map(|&a| 1 - a as i64).sum();
            s.rem_euclid(n as i64) as usize
        })
        .collect();
    let names: Vec<(String, bool)> = (1..=n).map(|a| (format!("z{a}"), false)).collect();
    let r = Ring::new(&names);
    let mut lam = Poly::constant(&r, qf((k * (n - 1)) as i64, 2));
    for a in 0..n {
        lam += &Poly::var_idx(&r, a).scale_int(k as i64);
    }
    let two_n = 2 * n as i64;
    FormalData {
        k,
        n,
        cyclotomic: phi,
        sums,
        product_exponents,
        exponent: lam,
        u_phase: (k as i64 - 1).rem_euclid(two_n) as usize,
        k_phase: (-((k * k.saturating_sub(1)) as i64)).rem_euclid(two_n) as usize,
    }
}
