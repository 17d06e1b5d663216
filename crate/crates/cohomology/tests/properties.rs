use cohomology::*;
use exact_algebra::{Mono, Poly, Q};
use proptest::prelude::*;

fn poly_strategy(k: usize, n: usize) -> impl Strategy<Value = Poly> {
    let nv = k + n;
    prop::collection::vec((prop::collection::vec(0i32..3, nv), -4i64..5), 1..5).prop_map(move |terms| {
        let r = gamma_ring(k, n);
        let mut p = Poly::zero(&r);
        for (e, c) in terms {
            p += &Poly::monomial(&r, Mono(e), Q::from_integer(c.into()));
        }
        // genuine classes are symmetric in the Chern roots
        if k == 2 {
            let mut perm: Vec<usize> = (0..nv).collect();
            perm.swap(0, 1);
            p = &p + &p.permute_vars(&perm);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn localization_is_a_ring_map((a, b) in (poly_strategy(2, 4), poly_strategy(2, 4))) {
        let lhs = CohClass::from_gamma_poly(2, 4, &(&a * &b));
        let rhs = CohClass::from_gamma_poly(2, 4, &a).mul(&CohClass::from_gamma_poly(2, 4, &b));
        prop_assert_eq!(lhs, rhs);
        let lhs = CohClass::from_gamma_poly(2, 4, &(&a + &b));
        let rhs = CohClass::from_gamma_poly(2, 4, &a).add(&CohClass::from_gamma_poly(2, 4, &b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_of_genuine_classes_is_polynomial_and_symmetric((a, b) in (poly_strategy(2, 4), poly_strategy(2, 4))) {
        let (u, v) = (CohClass::from_gamma_poly(2, 4, &a), CohClass::from_gamma_poly(2, 4, &b));
        let x = pairing_polynomial(&u, &v).unwrap();
        prop_assert_eq!(x, pairing_polynomial(&v, &u).unwrap());
    }

    #[test]
    fn representative_round_trip(a in poly_strategy(1, 3)) {
        let f = CohClass::from_gamma_poly(1, 3, &a);
        let rep = representative(&f).to_poly().unwrap();
        prop_assert!(rep.degree_in(0).unwrap_or(0) <= 2);
        prop_assert_eq!(CohClass::from_gamma_poly(1, 3, &rep), f);
    }
}
