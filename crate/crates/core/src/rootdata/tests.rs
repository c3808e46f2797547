use super::*;
use proptest::prelude::*;

fn alg(s: &str) -> Algebra {
    parse_algebra(s).unwrap()
}

fn w(a: &Algebra, s: &str) -> Weight {
    a.parse_weight(s).unwrap()
}

#[test]
fn parses_the_grammar() {
    assert_eq!(
        AlgebraSpec::parse("gl(2|1)").unwrap(),
        AlgebraSpec::Gl { m: 2, n: 1 }
    );
    assert_eq!(
        AlgebraSpec::parse("osp(5|4)").unwrap(),
        AlgebraSpec::Osp { m: 5, n: 2 }
    );
    assert_eq!(
        AlgebraSpec::parse("sp(4)").unwrap(),
        AlgebraSpec::Osp { m: 0, n: 2 }
    );
    assert_eq!(
        AlgebraSpec::parse("o(7)").unwrap(),
        AlgebraSpec::Osp { m: 7, n: 0 }
    );
    assert_eq!(
        AlgebraSpec::parse("sl(3)").unwrap(),
        AlgebraSpec::Sl { k: 3 }
    );
    assert_eq!(
        AlgebraSpec::parse("D(2,1,a=1/2)").unwrap(),
        AlgebraSpec::D21a { a: q(1, 2) }
    );
    assert_eq!(
        AlgebraSpec::parse("D(2, 1, -3)").unwrap(),
        AlgebraSpec::D21a { a: q(-3, 1) }
    );
    assert_eq!(AlgebraSpec::parse("F(4)").unwrap(), AlgebraSpec::F4);
    assert_eq!(AlgebraSpec::parse(" G(3) ").unwrap(), AlgebraSpec::G3);
    for bad in ["osp(5|3)", "sp(3)", "foo", "gl(2)", "D(2,1,a=x)"] {
        assert!(
            matches!(AlgebraSpec::parse(bad), Err(Error::Parse(_))),
            "{bad}"
        );
    }
    assert!(matches!(
        AlgebraSpec::parse("D(2,1,a=-1)"),
        Err(Error::InvalidParameter(_))
    ));
    assert!(matches!(
        AlgebraSpec::parse("D(2,1,0)"),
        Err(Error::InvalidParameter(_))
    ));
}

#[test]
fn display_round_trips() {
    for s in [
        "gl(2|3)",
        "sl(4)",
        "osp(5|4)",
        "sp(6)",
        "o(7)",
        "D(2,1,a=1/2)",
        "F(4)",
        "G(3)",
    ] {
        let spec = AlgebraSpec::parse(s).unwrap();
        assert_eq!(spec.to_string(), s);
        assert_eq!(AlgebraSpec::parse(&spec.to_string()).unwrap(), spec);
    }
}

#[test]
fn root_counts() {
    for (m, n) in [(1, 1), (2, 1), (2, 3), (3, 2)] {
        let a = alg(&format!("gl({m}|{n})"));
        let k = m + n;
        assert_eq!(a.roots().len(), k * k - k);
        assert_eq!(a.roots().iter().filter(|r| r.is_odd()).count(), 2 * m * n);
    }
    assert_eq!(alg("sp(4)").roots().len(), 8);
    assert_eq!(alg("o(5)").roots().len(), 8);
    assert_eq!(alg("o(8)").roots().len(), 24);
    for (m, n) in [(1, 1), (3, 2), (4, 2), (5, 2), (7, 3)] {
        let a = alg(&format!("osp({m}|{})", 2 * n));
        assert_eq!(a.roots().iter().filter(|r| r.is_odd()).count(), 2 * m * n);
    }
    let f4 = alg("F(4)");
    assert_eq!(f4.roots().iter().filter(|r| !r.is_odd()).count(), 20);
    assert_eq!(f4.roots().iter().filter(|r| r.is_odd()).count(), 16);
    let g3 = alg("G(3)");
    assert_eq!(g3.roots().iter().filter(|r| !r.is_odd()).count(), 14);
    assert_eq!(g3.roots().iter().filter(|r| r.is_odd()).count(), 14);
    assert_eq!(alg("D(2,1,a=2)").roots().len(), 14);
}

#[test]
fn osp54_odd_positive_roots() {
    let a = alg("osp(5|4)");
    let pos = a.positive_roots(a.default_base());
    let odd: Vec<_> = pos.iter().filter(|r| r.is_odd()).collect();
    // δj ± εi and δj
    assert_eq!(odd.len(), 10);
    assert_eq!(odd.iter().filter(|r| r.isotropic).count(), 8);
    for r in &odd {
        assert!(&r.weight[2] + &r.weight[3] > Q::zero());
    }
}

#[test]
fn isotropy_matches_parity_tables() {
    for s in [
        "gl(2|3)",
        "osp(1|4)",
        "osp(3|2)",
        "osp(4|4)",
        "osp(7|6)",
        "D(2,1,a=1/2)",
        "F(4)",
        "G(3)",
        "sp(6)",
        "o(7)",
    ] {
        let a = alg(s);
        for r in a.roots() {
            assert_eq!(
                r.isotropic,
                a.form(&r.weight, &r.weight).unwrap().is_zero(),
                "{s}"
            );
            if r.isotropic {
                assert!(r.is_odd(), "{s}: even isotropic root {}", a.fmt(&r.weight));
            }
        }
    }
    assert!(alg("osp(1|4)").roots().iter().all(|r| !r.isotropic));
}

#[test]
fn default_bases_are_valid() {
    for s in [
        "gl(1|1)",
        "gl(2|1)",
        "gl(2|3)",
        "sl(4)",
        "osp(1|2)",
        "osp(1|4)",
        "osp(2|2)",
        "osp(2|4)",
        "osp(3|2)",
        "osp(4|4)",
        "osp(5|4)",
        "osp(6|2)",
        "osp(7|6)",
        "sp(6)",
        "o(5)",
        "o(6)",
        "o(8)",
        "D(2,1,a=1/2)",
        "F(4)",
        "G(3)",
    ] {
        let a = alg(s);
        assert!(a.is_valid_base(a.default_base()), "{s}");
    }
    let g3 = alg("G(3)");
    let bogus = Base::new(g3.even_simples().to_vec());
    assert!(!g3.is_valid_base(&bogus));
}

#[test]
fn form_examples() {
    let a = alg("osp(5|4)");
    assert_eq!(
        a.form(&w(&a, "1,0|0,0"), &w(&a, "1,0|0,0")).unwrap(),
        q(1, 1)
    );
    let e1_d1 = w(&a, "1,0|-1,0");
    assert_eq!(a.form(&e1_d1, &e1_d1).unwrap(), q(0, 1));
    let sp = alg("sp(4)");
    assert_eq!(sp.form(&w(&sp, "1,0"), &w(&sp, "1,0")).unwrap(), q(1, 1));
    assert!(matches!(
        a.form(&w(&sp, "1,0"), &e1_d1),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn coroot_examples() {
    let sp = alg("sp(6)");
    let xi = sp.xi();
    assert_eq!(sp.coroot_pair(&xi, &w(&sp, "0,1,0")).unwrap(), q(2, 1));
    assert_eq!(sp.coroot_pair(&xi, &w(&sp, "1,-1,0")).unwrap(), q(0, 1));
    assert_eq!(
        sp.coroot_pair(&Weight::zero(3), &w(&sp, "2,0,0")).unwrap(),
        q(0, 1)
    );
    let a = alg("osp(3|2)");
    assert!(matches!(
        a.coroot_pair(&w(&a, "1|1"), &w(&a, "1|-1")),
        Err(Error::IsotropicRoot(_))
    ));
}

#[test]
fn negated_convention_keeps_coroots() {
    let spec = AlgebraSpec::parse("osp(5|4)").unwrap();
    let p = Algebra::new(spec.clone(), FormConvention::default()).unwrap();
    let n = Algebra::new(spec, FormConvention { delta_sign: 1 }).unwrap();
    let lam = w(&p, "1/3,2|5/7,-1");
    for r in p.roots().iter().filter(|r| !r.isotropic) {
        assert_eq!(
            p.coroot_pair(&lam, &r.weight).unwrap(),
            n.coroot_pair(&lam, &r.weight).unwrap()
        );
    }
    assert_eq!(p.roots(), n.roots());
    assert_eq!(p.rho(p.default_base()), n.rho(n.default_base()));
}

#[test]
fn rho_examples() {
    let sp = alg("sp(4)");
    assert_eq!(sp.rho(sp.default_base()), w(&sp, "2,1"));
    let a = alg("osp(5|4)");
    let r = a.rho_vectors(a.default_base());
    assert_eq!(r.rho1, w(&a, "0,0|5/2,5/2"));
    assert_eq!(&r.rho0 - &r.rho, r.rho1);
    let b = alg("osp(3|2)");
    assert_eq!(b.rho(b.default_base()), w(&b, "1/2|-1/2"));
}

#[test]
fn integral_subsystem_examples() {
    let sp = alg("sp(4)");
    let d2: BTreeSet<Weight> = sp
        .integral_subsystem(&w(&sp, "-1/2,-1/2"))
        .unwrap()
        .into_iter()
        .map(|r| r.weight)
        .collect();
    let expect: BTreeSet<Weight> = ["1,-1", "-1,1", "1,1", "-1,-1"]
        .iter()
        .map(|s| w(&sp, s))
        .collect();
    assert_eq!(d2, expect);
    assert_eq!(sp.integral_subsystem(&w(&sp, "3,1")).unwrap().len(), 8);
    assert!(sp
        .integral_subsystem(&w(&sp, "1/3,1/7"))
        .unwrap()
        .is_empty());
}

#[test]
fn simple_system_examples() {
    let sp = alg("sp(6)");
    let pos = sp.even_positive_roots();
    let dn: Vec<Root> = sp
        .roots()
        .iter()
        .filter(|r| r.weight.iter().all(|x| x.abs() <= Q::one()))
        .cloned()
        .collect();
    let got: Vec<Weight> = sp
        .simple_system(&dn, &pos)
        .into_iter()
        .map(|r| r.weight)
        .collect();
    let mut expect: Vec<Weight> = ["1,-1,0", "0,1,-1", "0,1,1"]
        .iter()
        .map(|s| w(&sp, s))
        .collect();
    expect.sort();
    assert_eq!(got, expect);

    let sp4 = alg("sp(4)");
    let pos = sp4.even_positive_roots();
    let got: Vec<Weight> = sp4
        .simple_system(sp4.roots(), &pos)
        .into_iter()
        .map(|r| r.weight)
        .collect();
    let mut expect = vec![w(&sp4, "1,-1"), w(&sp4, "0,2")];
    expect.sort();
    assert_eq!(got, expect);
    assert!(sp4.simple_system(&[], &pos).is_empty());
}

/// Shortest word in the Coxeter generators of `W(C₂)` taking `mu` into the
/// chamber, by exhaustive search.
fn brute_force_c2(a: &Algebra, mu: &Weight) -> (usize, Weight) {
    let gens = [w(a, "1,-1"), w(a, "0,2")];
    let mut best: Option<(usize, Weight)> = None;
    let mut frontier = vec![(0usize, mu.clone())];
    let mut seen = HashSet::new();
    while let Some((len, p)) = frontier.pop() {
        if !seen.insert((len, p.clone())) || len > 4 {
            continue;
        }
        if a.in_chamber(&p).unwrap() && best.as_ref().is_none_or(|(l, _)| len < *l) {
            best = Some((len, p.clone()));
        }
        for g in &gens {
            frontier.push((len + 1, a.reflect(&p, g).unwrap()));
        }
    }
    best.unwrap()
}

#[test]
fn dominant_representative_examples() {
    let sp = alg("sp(4)");
    let (word, nu) = sp.dominant_representative(&w(&sp, "2,1")).unwrap();
    assert!(word.is_empty());
    assert_eq!(nu, w(&sp, "2,1"));

    let (word, nu) = sp.dominant_representative(&w(&sp, "1,2")).unwrap();
    assert_eq!(nu, w(&sp, "2,1"));
    assert_eq!(word.len(), 1);
    assert_eq!(word.0[0].weight, w(&sp, "1,-1"));

    let mu = w(&sp, "-1,-2");
    let (word, nu) = sp.dominant_representative(&mu).unwrap();
    assert_eq!(nu, w(&sp, "2,1"));
    let (len, bf) = brute_force_c2(&sp, &mu);
    assert_eq!((word.len(), nu), (len, bf));
}

#[test]
fn chamber_can_be_out_of_reach() {
    let a = alg("osp(1|2)");
    assert!(matches!(
        a.dominant_representative(&w(&a, "|-1")),
        Err(Error::Hypothesis(_))
    ));
    let (_, nu) = a.dominant_representative(&w(&a, "|-1/2")).unwrap();
    assert_eq!(nu, w(&a, "|1/2"));
}

#[test]
fn weight_grammar() {
    let a = alg("osp(5|4)");
    assert_eq!(
        w(&a, "5/2,3/2|3,1"),
        Weight(vec![q(5, 2), q(3, 2), q(3, 1), q(1, 1)])
    );
    let err = a.parse_weight("1,2|3").unwrap_err().to_string();
    assert!(err.contains("s=2, n=2"), "{err}");
    assert!(a.parse_weight("1,2,3").is_err());
    let d = alg("D(2,1,a=1/2)");
    assert_eq!(w(&d, "1,2,3"), Weight::from_ints(&[1, 2, 3]));
}

#[test]
fn layout_formatting() {
    let a = alg("osp(7|4)");
    assert_eq!(a.fmt(&w(&a, "0,0,0|1,-1")), "δ1-δ2");
    assert_eq!(a.fmt(&w(&a, "0,0,0|0,2")), "2δ2");
    assert_eq!(a.fmt(&w(&a, "-1,0,0|0,1")), "δ2-ε1");
    let f = alg("F(4)");
    assert_eq!(
        f.fmt(&Weight(vec![q(-1, 2), q(-1, 2), q(-1, 2), q(1, 2)])),
        "1/2δ-1/2ε1-1/2ε2-1/2ε3"
    );
}

fn small_rational() -> impl Strategy<Value = Q> {
    (-12i64..12, prop::sample::select(vec![1i64, 2, 3])).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #[test]
    fn integral_subsystem_is_closed(ys in prop::collection::vec(small_rational(), 3)) {
        let a = alg("sp(6)");
        let lam = Weight(ys);
        let sub: Vec<Root> = a.integral_subsystem(&lam).unwrap();
        let set: HashSet<&Weight> = sub.iter().map(|r| &r.weight).collect();
        for x in &sub {
            for y in &sub {
                prop_assert!(set.contains(&a.reflect(&y.weight, &x.weight).unwrap()));
            }
        }
    }

    #[test]
    fn dominant_representative_lands_in_chamber(xs in prop::collection::vec(small_rational(), 2), ys in prop::collection::vec(-6i64..6, 2)) {
        // integral λ, so the whole of W(sp) is available
        let a = alg("osp(4|4)");
        let rho = a.rho(a.default_base());
        let mu = &Weight([xs, ys.iter().map(|&y| q(y, 1)).collect()].concat()) + &Weight([vec![Q::zero(); 2], rho.0[2..].to_vec()].concat());
        let (word, nu) = a.dominant_representative(&mu).unwrap();
        prop_assert!(a.in_chamber(&nu).unwrap());
        let mut p = mu.clone();
        for r in &word.0 {
            p = a.reflect(&p, &r.weight).unwrap();
        }
        prop_assert_eq!(p, nu);
    }

    #[test]
    fn reflection_is_an_involution(xs in prop::collection::vec(small_rational(), 4)) {
        let a = alg("osp(5|4)");
        let mu = Weight(xs);
        for r in a.roots().iter().filter(|r| !r.isotropic) {
            let back = a.reflect(&a.reflect(&mu, &r.weight).unwrap(), &r.weight).unwrap();
            prop_assert_eq!(&back, &mu);
        }
    }
}

#[test]
fn combinations_round_trip() {
    for s in [
        "gl(2|3)",
        "osp(5|4)",
        "osp(1|4)",
        "D(2,1,a=1/2)",
        "F(4)",
        "G(3)",
    ] {
        let a = parse_algebra(s).unwrap();
        for r in a.roots() {
            assert_eq!(
                a.layout().parse_combination(&a.fmt(&r.weight)).unwrap(),
                r.weight,
                "{s}"
            );
        }
        for b in crate::basegraph::all_bases(&a) {
            assert_eq!(&a.parse_base(&a.fmt_base(b)).unwrap(), b, "{s}");
        }
    }
    let a = parse_algebra("osp(5|4)").unwrap();
    assert_eq!(
        a.layout().parse_combination("d2 - e1").unwrap(),
        a.layout().parse_combination("δ2-ε1").unwrap()
    );
    assert!(a.layout().parse_combination("δ3").is_err());
    assert!(a.layout().parse_combination("").is_err());
    assert!(matches!(
        a.parse_base("{ε1-ε2, ε2}"),
        Err(Error::InvalidBase(_))
    ));
    assert!(matches!(a.parse_base("{ε1+ε2+δ1}"), Err(Error::Parse(_))));
}
