use exact_algebra::{Check, Matrix, Poly};
use rayon::prelude::*;

use crate::exterior::{exterior_power_matrix, ExteriorMode};
use crate::{dynamical_operator_in, flip_p1, kappa_euler, qkz_operator_in, shift_z, sum_z, weight_ring};

fn diff_detail(lhs: &Matrix, rhs: &Matrix) -> String {
    if lhs == rhs {
        return String::new();
    }
    for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            if lhs.get(i, j) != rhs.get(i, j) {
                return format!("entry ({i},{j}): {} vs {}", lhs.get(i, j), rhs.get(i, j));
            }
        }
    }
    "shape".into()
}

/// `K_a(z+κe_b)K_b(z) = K_b(z+κe_a)K_a(z)` for one pair.
pub fn verify_compatibility_pair(n: usize, k: usize, a: usize, b: usize) -> Check {
    let r = weight_ring(n);
    let ka = qkz_operator_in(&r, n, k, a);
    let kb = qkz_operator_in(&r, n, k, b);
    let lhs = shift_z(&ka, b).mul(&kb);
    let rhs = shift_z(&kb, a).mul(&ka);
    Check::new(format!("qkz-flat/{k},{n}/{a},{b}"), "discrconn", lhs == rhs, diff_detail(&lhs, &rhs))
}

/// All flatness and compatibility identities of the joint system.
pub fn verify_compatibility(n: usize, k: usize) -> Vec<Check> {
    let r = weight_ring(n);
    let x = [dynamical_operator_in(&r, n, k, 1), dynamical_operator_in(&r, n, k, 2)];
    let ks: Vec<Matrix> = (1..=n).map(|a| qkz_operator_in(&r, n, k, a)).collect();
    let mut jobs: Vec<(usize, usize)> = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            jobs.push((a, b));
        }
    }
    let mut checks: Vec<Check> = jobs
        .par_iter()
        .map(|&(a, b)| {
            let lhs = shift_z(&ks[a - 1], b).mul(&ks[b - 1]);
            let rhs = shift_z(&ks[b - 1], a).mul(&ks[a - 1]);
            Check::new(format!("qkz-flat/{k},{n}/{a},{b}"), "discrconn", lhs == rhs, diff_detail(&lhs, &rhs))
        })
        .collect();
    let comm = x[0].mul(&x[1]).sub(&x[1].mul(&x[0]));
    let rhs = kappa_euler(&x[1], "p1").sub(&kappa_euler(&x[0], "p2"));
    checks.push(Check::new(format!("dyn-flat/{k},{n}/1,2"), "ccond1", comm == rhs, diff_detail(&comm, &rhs)));
    let more: Vec<Check> = (1..=n)
        .into_par_iter()
        .flat_map_iter(|a| {
            let ka = &ks[a - 1];
            let x = &x;
            (1..=2).map(move |i| {
                let p = if i == 1 { "p1" } else { "p2" };
                let lhs = kappa_euler(ka, p);
                let rhs = shift_z(&x[i - 1], a).mul(ka).sub(&ka.mul(&x[i - 1]));
                Check::new(format!("dyn-qkz/{k},{n}/X{i},K{a}"), "ccond2", lhs == rhs, diff_detail(&lhs, &rhs))
            })
        })
        .collect();
    checks.extend(more);
    checks
}

/// `θ∘∧^kK_a[z;(−1)^{k−1}p1,p2] = p2^{k−1}K_a∘θ`, and the two dynamical
/// intertwining identities. `θ` is the identity in the lexicographic bases.
pub fn verify_satake_gauge(n: usize, k: usize) -> Vec<Check> {
    let r = weight_ring(n);
    let flip = |m: &Matrix| if k % 2 == 0 { flip_p1(m) } else { m.clone() };
    let p2pow = Poly::v(&r, "p2").pow((k - 1) as u32);
    let mut checks: Vec<Check> = (1..=n)
        .into_par_iter()
        .map(|a| {
            let k1 = flip(&qkz_operator_in(&r, n, 1, a));
            let lhs = exterior_power_matrix(&k1, k, ExteriorMode::Multiplicative).expect("square");
            let rhs = qkz_operator_in(&r, n, k, a).scale(&p2pow);
            Check::new(format!("satake-qkz/{k},{n}/K{a}"), "gauge1", lhs == rhs, diff_detail(&lhs, &rhs))
        })
        .collect();
    let shift = sum_z(&r, n).scale_int(k as i64 - 1);
    for i in 1..=2 {
        let x1 = flip(&dynamical_operator_in(&r, n, 1, i));
        let lhs = exterior_power_matrix(&x1, k, ExteriorMode::Derivation).expect("square");
        let mut rhs = dynamical_operator_in(&r, n, k, i);
        if i == 2 {
            rhs = rhs.add(&Matrix::scalar(&r, rhs.rows(), &shift));
        }
        let anchor = if i == 1 { "gauge2" } else { "gauge3" };
        checks.push(Check::new(format!("satake-dyn/{k},{n}/X{i}"), anchor, lhs == rhs, diff_detail(&lhs, &rhs)));
    }
    checks
}
