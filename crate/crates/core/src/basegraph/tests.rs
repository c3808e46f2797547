use super::*;
use crate::q;
use crate::rootdata::parse_algebra;
use proptest::prelude::*;

fn alg(s: &str) -> Algebra {
    parse_algebra(s).unwrap()
}

fn fmt_all(a: &Algebra, bases: &[Base]) -> Vec<String> {
    let mut v: Vec<String> = bases.iter().map(|b| a.fmt_base(b)).collect();
    v.sort();
    v
}

#[test]
fn distinguished_counts() {
    for (s, k) in [
        ("gl(2|1)", 2),
        ("gl(2|3)", 2),
        ("D(2,1,a=1/2)", 3),
        ("osp(1|4)", 1),
        ("osp(3|2)", 2),
        ("osp(5|4)", 2),
    ] {
        assert_eq!(distinguished_bases(&alg(s)).len(), k, "{s}");
    }
    assert_eq!(all_bases(&alg("gl(1|1)")).len(), 2);
    assert_eq!(all_bases(&alg("osp(1|6)")).len(), 1);
}

#[test]
fn osp74_fixture() {
    let a = alg("osp(7|4)");
    assert_eq!(
        fmt_all(&a, &distinguished_bases(&a)),
        vec![
            "{δ1-δ2, δ2-ε1, ε1-ε2, ε2-ε3, ε3}",
            "{ε1-ε2, ε2-ε3, ε3-δ1, δ1-δ2, δ2}"
        ]
    );
    let p = pi_ni(&a);
    let comps: Vec<(Vec<String>, ComponentKind)> = p
        .components
        .iter()
        .map(|c| (c.simples.iter().map(|r| a.fmt(&r.weight)).collect(), c.kind))
        .collect();
    assert_eq!(
        comps,
        vec![
            (
                vec!["ε1-ε2".to_string(), "ε2-ε3".into(), "ε3".into()],
                ComponentKind::B
            ),
            (
                vec!["δ1-δ2".to_string(), "δ2".into()],
                ComponentKind::BcSuper
            ),
        ]
    );
}

#[test]
fn osp54_hosts() {
    let a = alg("osp(5|4)");
    let p = pi_ni(&a);
    let hosts: Vec<(String, String)> = p
        .components
        .iter()
        .map(|c| (c.name(&a), a.fmt_base(&c.host_base)))
        .collect();
    assert_eq!(
        hosts,
        vec![
            ("o5".to_string(), "{δ1-δ2, δ2-ε1, ε1-ε2, ε2}".to_string()),
            (
                "osp(1|4)".to_string(),
                "{ε1-ε2, ε2-δ1, δ1-δ2, δ2}".to_string()
            ),
        ]
    );
}

#[test]
fn osp12n_is_its_own_component() {
    let a = alg("osp(1|6)");
    let p = pi_ni(&a);
    assert_eq!(p.components.len(), 1);
    assert_eq!(p.components[0].kind, ComponentKind::BcSuper);
    assert_eq!(
        Base::new(p.components[0].simples.clone()),
        *a.default_base()
    );
}

#[test]
fn component_kinds() {
    let kinds = |s: &str| -> Vec<String> {
        let a = alg(s);
        pi_ni(&a).components.iter().map(|c| c.name(&a)).collect()
    };
    assert_eq!(kinds("gl(2|3)"), vec!["sl2", "sl3"]);
    assert_eq!(kinds("o(8)"), vec!["o8"]);
    assert_eq!(kinds("o(6)"), vec!["sl4"]);
    assert_eq!(kinds("o(5)"), vec!["o5"]);
    assert_eq!(kinds("sp(4)"), vec!["sp4"]);
    assert_eq!(kinds("osp(4|4)"), vec!["sl2", "sl2", "sp4"]);
    assert_eq!(kinds("osp(3|2)"), vec!["o3", "osp(1|2)"]);
    assert_eq!(kinds("D(2,1,a=1/2)"), vec!["sl2", "sl2", "sl2"]);
    assert_eq!(kinds("F(4)").len(), 2);
    assert!(kinds("F(4)").contains(&"o7".to_string()));
    let g3 = kinds("G(3)");
    assert!(
        g3.contains(&"G2".to_string()) && g3.contains(&"osp(1|2)".to_string()),
        "{g3:?}"
    );
}

#[test]
fn hosts_are_distinguished_and_contain_component() {
    for s in [
        "gl(2|3)",
        "osp(4|4)",
        "osp(5|4)",
        "osp(7|6)",
        "D(2,1,a=1/2)",
        "F(4)",
        "G(3)",
    ] {
        let a = alg(s);
        for c in pi_ni(&a).components {
            assert!(c.host_base.is_distinguished(), "{s}");
            assert!(
                c.simples.iter().all(|r| c.host_base.contains(&r.weight)),
                "{s}"
            );
        }
    }
}

#[test]
fn gl_components_share_the_delta_first_base() {
    let a = alg("gl(2|3)");
    let p = pi_ni(&a);
    assert_eq!(p.components[0].host_base, p.components[1].host_base);
    assert_eq!(
        a.fmt_base(&p.components[0].host_base),
        "{δ1-δ2, δ2-δ3, δ3-ε1, ε1-ε2}"
    );
}

#[test]
fn every_base_is_valid_and_ni_positives_agree() {
    for s in [
        "gl(2|3)",
        "osp(3|4)",
        "osp(4|4)",
        "osp(5|4)",
        "D(2,1,a=1/2)",
        "F(4)",
        "G(3)",
    ] {
        let a = alg(s);
        let ni = |b: &Base| -> BTreeSet<Weight> {
            a.positive_roots(b)
                .into_iter()
                .filter(|r| !r.isotropic)
                .map(|r| r.weight)
                .collect()
        };
        let first = ni(a.default_base());
        for b in all_bases(&a) {
            assert!(a.is_valid_base(b), "{s}: {}", a.fmt_base(b));
            assert_eq!(ni(b), first, "{s}");
        }
    }
}

#[test]
fn odd_reflection_examples() {
    let a = alg("osp(3|2)");
    let w = |s: &str| a.parse_weight(s).unwrap();
    let b = odd_reflect(&a, a.default_base(), &w("-1|1")).unwrap();
    assert_eq!(a.fmt_base(&b), "{ε1-δ1, δ1}");
    assert_eq!(odd_reflect(&a, &b, &w("1|-1")).unwrap(), *a.default_base());
    assert!(matches!(
        odd_reflect(&a, &b, &w("0|1")),
        Err(Error::NotIsotropicSimple(_))
    ));
    assert!(matches!(
        odd_reflect(&a, &b, &w("1|1")),
        Err(Error::NotIsotropicSimple(_))
    ));
}

#[test]
fn odd_reflection_is_an_involution() {
    for s in ["gl(2|3)", "osp(5|4)", "D(2,1,a=1/2)", "F(4)", "G(3)"] {
        let a = alg(s);
        for b in all_bases(&a) {
            for r in b.simples.iter().filter(|r| r.isotropic) {
                let c = odd_reflect(&a, b, &r.weight).unwrap();
                assert_eq!(odd_reflect(&a, &c, &-&r.weight).unwrap(), *b);
            }
        }
    }
}

/// Every `rank`-subset of `Δ` that is a valid base, found without odd
/// reflections.
fn brute_force_bases(a: &Algebra) -> usize {
    let roots = a.roots();
    let rank = a.default_base().rank();
    let mut count = 0;
    let mut idx: Vec<usize> = (0..rank).collect();
    loop {
        let b = Base::new(idx.iter().map(|&i| roots[i].clone()).collect());
        if a.is_valid_base(&b) {
            count += 1;
        }
        // next combination
        let mut i = rank;
        loop {
            if i == 0 {
                return count;
            }
            i -= 1;
            if idx[i] < roots.len() - rank + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..rank {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[test]
fn bfs_finds_every_base() {
    for s in [
        "osp(3|2)",
        "gl(2|1)",
        "osp(2|2)",
        "D(2,1,a=1/2)",
        "osp(1|4)",
    ] {
        let a = alg(s);
        assert_eq!(all_bases(&a).len(), brute_force_bases(&a), "{s}");
    }
}

#[test]
fn transport_trivial_cases() {
    let a = alg("osp(3|2)");
    let zero = Weight::zero(2);
    for b in all_bases(&a) {
        assert_eq!(
            transport_weight(&a, &zero, a.default_base(), b).unwrap(),
            zero
        );
    }
    let lam = a.parse_weight("1/3|7/5").unwrap();
    assert_eq!(
        transport_weight(&a, &lam, a.default_base(), a.default_base()).unwrap(),
        lam
    );
}

#[test]
fn display_order_is_a_path() {
    let a = alg("osp(4|4)");
    assert_eq!(a.fmt_base(a.default_base()), "{δ1-δ2, δ2-ε1, ε1-ε2, ε1+ε2}");
    let f = alg("F(4)");
    assert_eq!(
        f.fmt_base(f.default_base()),
        "{ε1-ε2, ε2-ε3, ε3, 1/2δ-1/2ε1-1/2ε2-1/2ε3}"
    );
}

fn small_rational() -> impl Strategy<Value = Q> {
    (-12i64..12, prop::sample::select(vec![1i64, 2, 3, 5])).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #[test]
    fn transport_is_path_independent(xs in prop::collection::vec(small_rational(), 4)) {
        let a = alg("osp(5|4)");
        let lam = Weight(xs);
        let bases = all_bases(&a);
        let d = a.default_base();
        for to in bases {
            let direct = transport_weight(&a, &lam, d, to).unwrap();
            for mid in bases {
                let via = transport_weight(&a, &transport_weight(&a, &lam, d, mid).unwrap(), mid, to).unwrap();
                prop_assert_eq!(&via, &direct);
            }
        }
    }

    #[test]
    fn strongly_typical_transport_fixes_lambda_plus_rho(xs in prop::collection::vec(small_rational(), 4)) {
        let a = alg("osp(5|4)");
        let lam = Weight(xs);
        let d = a.default_base();
        let lr = &lam + &a.rho(d);
        let typical = a.roots().iter().filter(|r| r.isotropic).all(|r| !a.form(&lr, &r.weight).unwrap().is_zero());
        prop_assume!(typical);
        for b in distinguished_bases(&a) {
            let t = transport_weight(&a, &lam, d, &b).unwrap();
            prop_assert_eq!(&t + &a.rho(&b), lr.clone());
        }
    }
}
