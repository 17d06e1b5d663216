use cohomology::*;
use combinatorics::{enumerate_index_sets, IndexSet, Partition};
use exact_algebra::{Poly, RestrictedRational as RR};

fn gpoly(k: usize, n: usize, s: &str) -> Poly {
    Poly::parse(&gamma_ring(k, n), s).unwrap()
}

fn zpoly(n: usize, s: &str) -> RR {
    RR::from_poly(Poly::parse(&coh_ring(n), s).unwrap())
}

fn shapes(max_n: usize) -> Vec<(usize, usize)> {
    (1..=max_n).flat_map(|n| (1..=n).map(move |k| (k, n))).collect()
}

#[test]
fn factorial_schur_small_cases() {
    let r = gamma_ring(1, 3);
    let x = [Poly::v(&r, "g1")];
    let y: Vec<Poly> = ["z1", "z2", "z3"].iter().map(|s| Poly::v(&r, s)).collect();
    assert!(factorial_schur_in(&Partition::empty(), &x, &y).unwrap().is_one());
    let s2 = factorial_schur_in(&Partition::new(vec![2]), &x, &y).unwrap();
    assert_eq!(s2, gpoly(1, 3, "(g1-z1)*(g1-z2)"));
    let s = factorial_schur(&Partition::new(vec![1]), 2, 3, true).unwrap();
    assert_eq!(s, gpoly(2, 3, "g1+g2-z2-z3"));
    let s = factorial_schur(&Partition::new(vec![1, 1]), 2, 3, true).unwrap();
    assert_eq!(s, gpoly(2, 3, "(g1-z3)*(g2-z3)"));
}

#[test]
fn double_schubert_ends() {
    let r = schubert_ring(2);
    assert_eq!(double_schubert(&[2, 1]).unwrap(), Poly::parse(&r, "x1-y1").unwrap());
    for n in 1..=4 {
        assert!(double_schubert(&(1..=n).collect::<Vec<_>>()).unwrap().is_one());
    }
    assert!(double_schubert(&[1, 1]).is_err());
}

#[test]
fn double_schubert_of_grassmannian_permutation_is_factorial_schur() {
    for (k, n) in shapes(5) {
        for idx in enumerate_index_sets(k, n).unwrap() {
            let ds = double_schubert(&idx.grass_perm().values).unwrap();
            let r = schubert_ring(n);
            let x: Vec<Poly> = (0..k).map(|i| Poly::var_idx(&r, i)).collect();
            let y: Vec<Poly> = (0..n).map(|j| Poly::var_idx(&r, n + j)).collect();
            let fs = factorial_schur_in(&idx.partition(), &x, &y).unwrap();
            assert_eq!(ds, fs, "I={:?}", idx.i1);
        }
    }
}

#[test]
fn schubert_routes_agree() {
    for (k, n) in shapes(5) {
        for idx in enumerate_index_sets(k, n).unwrap() {
            let lam = idx.partition();
            for flag in [Flag::Standard, Flag::Opposite] {
                let a = schubert_class(&lam, k, n, flag).unwrap();
                let b = schubert_class_kempf_laksov(&lam, k, n, flag).unwrap();
                assert_eq!(a, b, "λ={:?} ({k},{n}) {flag:?}", lam.parts());
            }
        }
    }
}

#[test]
fn degree_one_schubert_classes() {
    for (k, n) in shapes(5) {
        if k == n {
            continue;
        }
        let lam = Partition::new(vec![1]);
        let c1 = c1_class(k, n, 1);
        let top: String = (n - k + 1..=n).map(|i| format!("+z{i}")).collect();
        let bottom: String = (1..=k).map(|i| format!("+z{i}")).collect();
        let st = c1.neg().add(&CohClass::from_fn(k, n, |_| zpoly(n, &format!("0{top}"))));
        let op = c1.neg().add(&CohClass::from_fn(k, n, |_| zpoly(n, &format!("0{bottom}"))));
        assert_eq!(schubert_class(&lam, k, n, Flag::Standard).unwrap(), st);
        assert_eq!(schubert_class(&lam, k, n, Flag::Opposite).unwrap(), op);
    }
    for n in 2..=5 {
        for a in 0..n {
            let g = (n - a + 1..=n).fold(gpoly(1, n, "1"), |acc, i| &acc * &gpoly(1, n, &format!("z{i}-g1")));
            let want = CohClass::from_gamma_poly(1, n, &g);
            assert_eq!(schubert_class(&Partition::new(vec![a]), 1, n, Flag::Standard).unwrap(), want);
        }
    }
}

#[test]
fn stable_envelopes_two_routes_and_examples() {
    for (k, n) in shapes(5) {
        let (s1, o1) = stable_envelope_basis(k, n).unwrap();
        let (s2, o2) = stable_envelope_via_double_schubert(k, n).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(o1, o2);
        for (idx, s) in enumerate_index_sets(k, n).unwrap().iter().zip(&s1) {
            let dual = idx.partition().complement(k, n);
            let sg = if dual.size() % 2 == 0 { 1 } else { -1 };
            let sch = schubert_class(&dual, k, n, Flag::Standard).unwrap();
            assert_eq!(*s, sch.scale_poly(&Poly::int(&coh_ring(n), sg)));
        }
    }
    for n in 2..=5 {
        let (st, _) = stable_envelope_basis(1, n).unwrap();
        for a in 1..=n {
            let g = (a + 1..=n).fold(gpoly(1, n, "1"), |acc, c| &acc * &gpoly(1, n, &format!("g1-z{c}")));
            assert_eq!(st[a - 1], CohClass::from_gamma_poly(1, n, &g));
        }
    }
    let (st, _) = stable_envelope_basis(2, 3).unwrap();
    assert_eq!(st[2], CohClass::constant(2, 3, 1));
    assert_eq!(st[0], CohClass::from_gamma_poly(2, 3, &gpoly(2, 3, "(g1-z3)*(g2-z3)")));
    assert_eq!(st[1], CohClass::from_gamma_poly(2, 3, &gpoly(2, 3, "g1+g2-z2-z3")));
}

#[test]
fn stab_orthogonality() {
    for (k, n) in shapes(4).into_iter().chain([(2, 5), (3, 5)]) {
        let (st, op) = stable_envelope_basis(k, n).unwrap();
        let sgn = if k * (n - k) % 2 == 0 { 1 } else { -1 };
        for (i, s) in st.iter().enumerate() {
            for (j, o) in op.iter().enumerate() {
                let v = pairing_polynomial(s, o).unwrap();
                let want = if i == j { sgn } else { 0 };
                assert_eq!(v, Poly::int(&coh_ring(n), want), "({k},{n}) I={i} J={j}");
            }
        }
    }
}

#[test]
fn schubert_duality_and_expansions() {
    for (k, n) in shapes(4) {
        let sets = enumerate_index_sets(k, n).unwrap();
        for a in &sets {
            let la = a.partition();
            let sa = schubert_class(&la, k, n, Flag::Standard).unwrap();
            for b in &sets {
                let mu = b.partition();
                let ob = schubert_class(&mu, k, n, Flag::Opposite).unwrap();
                let want = i64::from(mu == la.complement(k, n));
                assert_eq!(pairing_polynomial(&sa, &ob).unwrap(), Poly::int(&coh_ring(n), want));
            }
            let coeffs = schubert_expansion(&sa).unwrap();
            for (j, c) in coeffs.iter().enumerate() {
                assert_eq!(c.to_poly().unwrap(), Poly::int(&coh_ring(n), i64::from(j == a.rank())));
            }
        }
        // Stab expansion recovers a random-ish class
        let f = c1_class(k, n, 1).mul(&c1_class(k, n, 2)).add(&CohClass::constant(k, n, 3));
        let coeffs = stab_expansion(&f).unwrap();
        let (st, _) = stable_envelope_basis(k, n).unwrap();
        let mut back = CohClass::constant(k, n, 0);
        for (c, s) in coeffs.iter().zip(&st) {
            back = back.add(&CohClass { k, n, loc: s.loc.iter().map(|x| x.mul(c)).collect() });
        }
        assert_eq!(back, f);
    }
}

#[test]
fn idempotents() {
    for (k, n) in shapes(5) {
        let ids = idempotent_basis(k, n);
        let sum = ids.iter().skip(1).fold(ids[0].clone(), |a, b| a.add(b));
        assert_eq!(sum, CohClass::constant(k, n, 1));
        for (i, a) in ids.iter().enumerate() {
            for (j, b) in ids.iter().enumerate() {
                let p = a.mul(b);
                assert_eq!(p, if i == j { a.clone() } else { CohClass::constant(k, n, 0) });
            }
        }
        for idx in enumerate_index_sets(k, n).unwrap() {
            let rep = idempotent_representative(&idx);
            let as_class = CohClass::from_fn(k, n, |j| {
                let r = coh_ring(n);
                let mut img: Vec<Poly> = j.i1.iter().map(|&a| Poly::var_idx(&r, a - 1)).collect();
                img.extend((0..n).map(|a| Poly::var_idx(&r, a)));
                rep.subs(&img).unwrap()
            });
            assert_eq!(as_class, ids[idx.rank()]);
        }
    }
    let d = idempotent_representative(&IndexSet::new(3, vec![1, 2]).unwrap());
    let want = RR::new(gpoly(2, 3, "(g1-z3)*(g2-z3)"), &[gpoly(2, 3, "z1-z3"), gpoly(2, 3, "z2-z3")]).unwrap();
    assert_eq!(d, want);
    for j in 1..=3usize {
        let d = idempotent_representative(&IndexSet::new(3, vec![j]).unwrap());
        let others: Vec<usize> = (1..=3).filter(|&i| i != j).collect();
        let num = others.iter().fold(gpoly(1, 3, "1"), |a, i| &a * &gpoly(1, 3, &format!("g1-z{i}")));
        let dens: Vec<Poly> = others.iter().map(|i| gpoly(1, 3, &format!("z{j}-z{i}"))).collect();
        assert_eq!(d, RR::new(num, &dens).unwrap());
    }
    // η(Δ_i, Δ_j) on ℙ²
    let ids = idempotent_basis(1, 3);
    for i in 0..3 {
        for j in 0..3 {
            let v = poincare_pairing(&ids[i], &ids[j]);
            if i != j {
                assert!(v.is_zero());
            } else {
                let dens: Vec<Poly> =
                    (1..=3).filter(|&a| a != i + 1).map(|a| Poly::parse(&coh_ring(3), &format!("z{}-z{a}", i + 1)).unwrap()).collect();
                assert_eq!(v, RR::new(Poly::one(&coh_ring(3)), &dens).unwrap());
            }
        }
    }
}

#[test]
fn representatives_are_polynomials_of_bounded_degree() {
    for (k, n) in shapes(4) {
        for idx in enumerate_index_sets(k, n).unwrap() {
            let f = schubert_class(&idx.partition(), k, n, Flag::Standard).unwrap();
            let rep = representative(&f).to_poly().expect("polynomial representative");
            for j in 0..k {
                assert!(rep.degree_in(j).unwrap_or(0) <= (n - k) as i32);
            }
            assert_eq!(CohClass::from_gamma_poly(k, n, &rep), f);
        }
    }
}

#[test]
fn satake_examples() {
    let p = |a: usize| schubert_class(&Partition::new(vec![a]), 1, 3, Flag::Standard).unwrap();
    assert_eq!(satake_cohomology(&[p(0), p(1)]).unwrap(), CohClass::constant(2, 3, 1));
    let s1 = schubert_class(&Partition::new(vec![1]), 2, 3, Flag::Standard).unwrap();
    assert_eq!(satake_cohomology(&[p(0), p(2)]).unwrap(), s1);
    assert_eq!(
        satake_cohomology(&[p(0), p(2)]).unwrap(),
        CohClass::from_gamma_poly(2, 3, &gpoly(2, 3, "-(g1+g2-z2-z3)"))
    );
    let ids = idempotent_basis(1, 3);
    let g = idempotent_basis(2, 3);
    let lhs = satake_cohomology(&[ids[0].clone(), ids[1].clone()]).unwrap();
    let r = coh_ring(3);
    let want = CohClass { k: 2, n: 3, loc: g[0].loc.iter().map(|x| x.div_linear(&Poly::parse(&r, "z1-z2").unwrap()).unwrap()).collect() };
    assert_eq!(lhs, want);
    assert!(satake_cohomology(&[s1]).is_err());
}

#[test]
fn satake_maps_wedges_of_schubert_classes_and_is_isometric() {
    for (k, n) in shapes(5) {
        let pc = |a: usize, flag| schubert_class(&Partition::new(vec![a]), 1, n, flag).unwrap();
        let sets = enumerate_index_sets(k, n).unwrap();
        for idx in &sets {
            let lam = idx.partition().padded(k);
            let wedge: Vec<CohClass> = (0..k).map(|j| pc(lam[k - 1 - j] + j, Flag::Standard)).collect();
            let img = satake_cohomology(&wedge).unwrap();
            assert_eq!(img, schubert_class(&idx.partition(), k, n, Flag::Standard).unwrap(), "({k},{n}) {lam:?}");
        }
        if n <= 4 {
            for a in &sets {
                for b in &sets {
                    let u: Vec<CohClass> = a.i1.iter().map(|&x| pc(x - 1, Flag::Standard)).collect();
                    let v: Vec<CohClass> = b.i1.iter().map(|&x| pc(x - 1, Flag::Opposite)).collect();
                    let lhs = wedge_pairing(&u, &v).unwrap();
                    let rhs = poincare_pairing(&satake_cohomology(&u).unwrap(), &satake_cohomology(&v).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
