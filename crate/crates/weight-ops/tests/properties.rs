use exact_algebra::{Matrix, Poly};
use proptest::prelude::*;
use weight_ops::{exterior_power_matrix, weight_ring, ExteriorMode};

fn int_matrix(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..5, n * n)
}

fn build(n: usize, v: &[i64]) -> Matrix {
    let r = weight_ring(1);
    Matrix::from_fn(&r, n, n, |i, j| Poly::int(&r, v[i * n + j]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn cauchy_binet(n in 1usize..=5, seed in any::<u64>(), k_raw in 0usize..5) {
        let k = 1 + k_raw % n;
        let mut s = seed;
        let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); ((s >> 33) % 9) as i64 - 4 };
        let a: Vec<i64> = (0..n * n).map(|_| next()).collect();
        let b: Vec<i64> = (0..n * n).map(|_| next()).collect();
        let (ma, mb) = (build(n, &a), build(n, &b));
        let lhs = exterior_power_matrix(&ma.mul(&mb), k, ExteriorMode::Multiplicative).unwrap();
        let rhs = exterior_power_matrix(&ma, k, ExteriorMode::Multiplicative).unwrap()
            .mul(&exterior_power_matrix(&mb, k, ExteriorMode::Multiplicative).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivation_is_a_lie_map(v in int_matrix(4), w in int_matrix(4)) {
        let (a, b) = (build(4, &v), build(4, &w));
        let br = |x: &Matrix, y: &Matrix| x.mul(y).sub(&y.mul(x));
        let d = |m: &Matrix| exterior_power_matrix(m, 2, ExteriorMode::Derivation).unwrap();
        prop_assert_eq!(d(&br(&a, &b)), br(&d(&a), &d(&b)));
    }
}

#[test]
fn identity_and_diagonal() {
    let r = weight_ring(1);
    let id = Matrix::identity(&r, 4);
    assert_eq!(exterior_power_matrix(&id, 2, ExteriorMode::Multiplicative).unwrap(), Matrix::identity(&r, 6));
    let d = Matrix::from_fn(&r, 4, 4, |i, j| if i == j { Poly::int(&r, 1 << i) } else { Poly::zero(&r) });
    let e = exterior_power_matrix(&d, 2, ExteriorMode::Derivation).unwrap();
    let sums = [3, 5, 9, 6, 10, 12];
    for (i, s) in sums.iter().enumerate() {
        assert_eq!(e.get(i, i), &Poly::int(&r, *s));
    }
}
