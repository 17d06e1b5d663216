use combinatorics::*;

fn all_labels(k: usize, n: usize) -> Vec<Label> {
    enumerate_index_sets(k, n).unwrap().into_iter().map(Label::Index).collect()
}

#[test]
fn conversions_compose_to_identity() {
    use LabelKind::*;
    for n in 1..=6 {
        for k in 0..=n {
            for start in all_labels(k, n) {
                for a in [Index, Perm, Diagram] {
                    let x = convert(&start, a).unwrap();
                    for b in [Index, Perm, Diagram] {
                        let y = convert(&x, b).unwrap();
                        assert_eq!(convert(&y, a).unwrap(), x, "{a:?}->{b:?}->{a:?} on {x:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn counts_are_binomial() {
    for n in 0..=8 {
        for k in 0..=n {
            assert_eq!(enumerate_index_sets(k, n).unwrap().len(), binomial(n, k));
        }
    }
}

#[test]
fn path_rule_matches_arithmetic_rule() {
    for n in 1..=6 {
        for k in 0..=n {
            for i in enumerate_index_sets(k, n).unwrap() {
                let lam = i.partition();
                assert!(lam.fits(k, n));
                assert_eq!(lam.grass_perm(k, n).unwrap(), lam.grass_perm_by_path(k, n).unwrap());
            }
        }
    }
}

#[test]
fn permuted_tuples() {
    let z = ["z1", "z2", "z3"];
    assert_eq!(permute_tuple(&sigma0(3), &z), vec!["z3", "z2", "z1"]);
    assert_eq!(permute_tuple(&[1, 2, 3], &z), z.to_vec());
    let s = IndexSet::new(3, vec![1, 3]).unwrap().grass_perm();
    assert_eq!(permute_tuple(&s.values, &z), vec!["z1", "z3", "z2"]);
    // (z_a)_σ then τ equals z_{σ∘τ}
    let a = [2, 3, 1];
    let b = [3, 1, 2];
    assert_eq!(permute_tuple(&b, &permute_tuple(&a, &z)), permute_tuple(&compose(&a, &b), &z));
}

#[test]
fn json_forms() {
    let i = IndexSet::new(4, vec![3, 1]).unwrap();
    assert_eq!(serde_json::to_string(&i).unwrap(), r#"{"k":2,"n":4,"I1":[1,3]}"#);
    assert_eq!(serde_json::to_string(&Partition::new(vec![2, 1, 0])).unwrap(), "[2,1]");
}

#[test]
fn complement_is_an_involution() {
    for n in 1..=6 {
        for k in 0..=n {
            for i in enumerate_index_sets(k, n).unwrap() {
                let l = i.partition();
                assert_eq!(l.complement(k, n).complement(k, n), l);
                assert_eq!(l.size() + l.complement(k, n).size(), k * (n - k));
            }
        }
    }
}
