//! Worked examples with independent brute-force oracles.

use engel_lab::analysis::Analysis;
use engel_lab::constructions::{
    cyclic, direct_product, free_nil_c2, make_group, parse_group_spec, permutation_group, perm_from_cycles,
    symmetric, wreath, FreeNilVariant, GroupRing, GroupSpec, GuptaLevinGroup, GuptaLevinVariant,
};
use engel_lab::engel::{left_engel_status, right_engel_status, rho_sets, Side};
use engel_lab::group::DEFAULT_ORDER_CAP as CAP;
use engel_lab::structure::{
    center, nilpotency_class, normal_closure, normalizer, radicals, subnormal_defect, upper_central_series,
};
use engel_lab::verify::{run_check, search_witness, CheckId, Outcome, SearchPredicate, VerifyConfig};
use engel_lab::{closure, engel_commutator, quotient, Element, Error, FiniteGroup, GroupOps, Subgroup};

fn group(spec: &str) -> FiniteGroup {
    make_group(&parse_group_spec(spec).unwrap(), CAP).unwrap()
}

/// `(12)` and `(123)` in `S3`, as generated by `symmetric`.
fn s3() -> (FiniteGroup, Element, Element) {
    let g = symmetric(3, CAP).unwrap();
    let (t, c) = (g.generators()[0], g.generators()[1]);
    (g, t, c)
}

/// Repeated multiplication until the identity, independent of `element_order`.
fn order_by_powers(g: &FiniteGroup, a: Element) -> usize {
    let mut x = a;
    let mut k = 1;
    while !x.is_identity() {
        x = g.mul(x, a);
        k += 1;
    }
    k
}

/// Closure by repeated products of everything found so far.
fn naive_closure(g: &FiniteGroup, seeds: &[Element]) -> Vec<Element> {
    let mut set = vec![g.identity()];
    set.extend(seeds.iter().copied());
    loop {
        let mut next = set.clone();
        for &a in &set {
            for &b in &set {
                let p = g.mul(a, b);
                if !next.contains(&p) {
                    next.push(p);
                }
            }
        }
        if next.len() == set.len() {
            set.sort();
            set.dedup();
            return set;
        }
        set = next;
    }
}

fn naive_normal_closure(g: &FiniteGroup, seeds: &[Element]) -> Vec<Element> {
    let conjugates: Vec<Element> = seeds.iter().flat_map(|&s| g.elements().map(move |x| (s, x))).map(|(s, x)| g.conj(s, x)).collect();
    naive_closure(g, &conjugates)
}

#[test]
fn engel_commutator_base_cases() {
    let (g, t, c) = s3();
    for x in g.elements() {
        assert_eq!(engel_commutator(&g, &x, &c, 0).unwrap(), x);
        for n in 1..4 {
            assert!(engel_commutator(&g, &x, &g.identity(), n).unwrap().is_identity());
        }
    }
    // [x, y] = x⁻¹y⁻¹xy computed by hand.
    let by_hand = g.mul(g.mul(g.inv(t), g.inv(c)), g.mul(t, c));
    assert_eq!(engel_commutator(&g, &t, &c, 1).unwrap(), by_hand);
    assert!(matches!(
        engel_commutator(&g, &Element(99), &c, 1),
        Err(Error::Usage(_))
    ));
}

#[test]
fn closures_in_s3() {
    let (g, t, c) = s3();
    assert_eq!(closure(&g, &[g.identity()]).unwrap().order(), 1);
    assert_eq!(closure(&g, &[c]).unwrap().order(), 3);
    assert_eq!(closure(&g, &[t, c]).unwrap().order(), 6);
    assert_eq!(closure(&g, &[c]).unwrap().elements(), &naive_closure(&g, &[c])[..]);
}

#[test]
fn construction_from_cayley_table_and_permutations() {
    let c2 = FiniteGroup::from_cayley_text("2\n0 1\n1 0\n").unwrap();
    assert_eq!(c2.order(), 2);
    assert_eq!(c2.elements().filter(|e| !e.is_identity()).count(), 1);
    let p = permutation_group(
        3,
        &[perm_from_cycles(3, &[&[0, 1]]), perm_from_cycles(3, &[&[0, 1, 2]])],
        CAP,
    )
    .unwrap();
    assert_eq!(p.order(), 6);
    assert_eq!(group("wreath(C2, C2 x C2)").order(), 64);
}

#[test]
fn quotients() {
    let (g, _, c) = s3();
    assert_eq!(quotient(&g, &Subgroup::whole(&g)).unwrap().order(), 1);
    let a3 = closure(&g, &[c]).unwrap();
    assert_eq!(quotient(&g, &a3).unwrap().order(), 2);
}

#[test]
fn element_orders() {
    let (g, _, c) = s3();
    assert_eq!(g.element_order(g.identity()), 1);
    assert_eq!(g.element_order(c), 3);
    let w = group("wreath(C4,C2xC2)");
    let a = w.generators()[0];
    assert_eq!(w.element_order(a), 4);
    for x in w.elements().step_by(37) {
        assert_eq!(w.element_order(x), order_by_powers(&w, x));
    }
}

#[test]
fn normal_closures_and_defects() {
    let (g, t, c) = s3();
    assert!(normal_closure(&g, &[g.identity()]).is_trivial());
    assert_eq!(normal_closure(&g, &[t]).order(), 6);
    assert_eq!(normal_closure(&g, &[c]).order(), 3);
    assert_eq!(normal_closure(&g, &[c]).elements(), &naive_normal_closure(&g, &[c])[..]);

    assert_eq!(subnormal_defect(&g, &Subgroup::whole(&g)), Some(0));
    assert_eq!(subnormal_defect(&g, &closure(&g, &[c]).unwrap()), Some(1));
    assert_eq!(subnormal_defect(&g, &closure(&g, &[t]).unwrap()), None);
}

#[test]
fn normalizers() {
    let (g, t, c) = s3();
    let a3 = closure(&g, &[c]).unwrap();
    assert!(normalizer(&g, &a3).is_whole());
    let h = closure(&g, &[t]).unwrap();
    assert_eq!(normalizer(&g, &h), h);

    // A Sylow 2-subgroup of S4: ⟨(0 1 2 3), (0 2)⟩.
    let s4 = permutation_group(
        4,
        &[perm_from_cycles(4, &[&[0, 1, 2, 3]]), perm_from_cycles(4, &[&[0, 2]])],
        CAP,
    )
    .unwrap();
    let g4 = symmetric(4, CAP).unwrap();
    assert_eq!(s4.order(), 8);
    let sylow = find_order_8_subgroup(&g4);
    let n = normalizer(&g4, &sylow);
    assert_eq!(n.order(), 8);
    assert_eq!(n, sylow);
}

fn find_order_8_subgroup(g: &FiniteGroup) -> Subgroup<'_> {
    for a in g.elements() {
        for b in g.elements() {
            let h = Subgroup::generated_by(g, [a, b]);
            if h.order() == 8 {
                return h;
            }
        }
    }
    panic!("S4 has a subgroup of order 8");
}

#[test]
fn centers_and_series() {
    let (g, _, _) = s3();
    assert!(center(&g).is_trivial());
    let d8 = group("D8");
    assert_eq!(center(&d8).order(), 2);
    assert_eq!(nilpotency_class(&Subgroup::whole(&d8)), Some(2));
    assert_eq!(nilpotency_class(&Subgroup::whole(&g)), None);
    let u = upper_central_series(&d8).unwrap();
    assert_eq!(u.last().order(), 8);
}

#[test]
fn radicals_of_small_groups() {
    let (g, _, c) = s3();
    let r = radicals(&g).unwrap();
    assert_eq!(r.fitting, closure(&g, &[c]).unwrap());
    let s4 = group("S4");
    assert_eq!(radicals(&s4).unwrap().fitting.order(), 4);
    assert_eq!(radicals(&group("D8")).unwrap().fitting.order(), 8);
}

#[test]
fn engel_statuses_in_s3() {
    let (g, t, c) = s3();
    let id = left_engel_status(&g, g.identity());
    assert!(id.is_engel);
    assert!(left_engel_status(&g, c).is_engel);
    let st = left_engel_status(&g, t);
    assert!(!st.is_engel);
    assert_eq!(st.length, None);
    assert!(right_engel_status(&g, g.identity()).is_engel);
    assert!(!right_engel_status(&g, c).is_engel);
    // Central elements are right 1-Engel.
    let d8 = group("D8");
    for z in center(&d8).elements() {
        assert!(right_engel_status(&d8, *z).length.is_some_and(|n| n <= 1));
    }
}

#[test]
fn engel_sets_of_small_groups() {
    let (g, _, _) = s3();
    let a = Analysis::new(&g);
    let r = a.engel().unwrap();
    assert_eq!(r.left.len(), 3);
    assert_eq!(r.right.len(), 1);
    assert_eq!(r.rho.len(), 1);

    let c6 = cyclic(6, CAP).unwrap();
    let a = Analysis::new(&c6);
    let r = a.engel().unwrap();
    assert_eq!(r.level(Side::Left, 1).unwrap().elements.len(), 6);
    assert_eq!(r.level(Side::Right, 1).unwrap().elements.len(), 6);

    let d8 = group("D8");
    let a = Analysis::new(&d8);
    let r = a.engel().unwrap();
    assert_eq!(r.level(Side::Left, 2).unwrap().elements.len(), 8);
    assert_eq!(r.level(Side::Right, 2).unwrap().elements.len(), 8);
    assert_eq!(r.left.len(), 8);
    assert_eq!(r.right.len(), 8);
}

#[test]
fn rho_contains_center() {
    let d8 = group("D8");
    let rho = rho_sets(&d8).unwrap();
    for z in center(&d8).elements() {
        assert!(rho.rho.contains(z));
    }
}

#[test]
fn wreath_l2_flags() {
    let g = group("wreath(C2,C2xC2)");
    let a = Analysis::with_max_n(&g, 4);
    let l2 = a.engel().unwrap().level(Side::Left, 2).unwrap();
    assert!(l2.elements.len() < g.order());
    assert!(l2.generates_group);
    assert!(!l2.is_subgroup);
    for x in g.generators_with_role(engel_lab::GeneratorRole::Top) {
        assert!(a.in_left(x, 2).unwrap());
        assert!(!a.in_left(x, 1).unwrap());
    }
}

#[test]
fn wreath_top_generator_lengths() {
    let g = group("wreath(C4,C2xC2)");
    assert_eq!(g.order(), 1024);
    let a = Analysis::new(&g);
    let tops = g.generators_with_role(engel_lab::GeneratorRole::Top);
    let (x, y) = (tops[0], tops[1]);
    for t in [x, y, g.mul(x, y)] {
        assert!(a.in_left(t, 3).unwrap());
        assert!(!a.in_left(t, 2).unwrap());
    }
    let base = g.generators_with_role(engel_lab::GeneratorRole::Base)[0];
    assert!(!a.in_left(g.mul(base, x), 3).unwrap());
    // A base element of order 2 behaves differently.
    let a2 = g.mul(base, base);
    assert!(a.in_left(g.mul(a2, x), 3).unwrap());
    assert_eq!(left_engel_status(&g, g.mul(a2, x)).length, Some(3));
    assert_eq!(left_engel_status(&g, g.mul(base, x)).length, Some(4));
}

#[test]
fn constructed_orders() {
    assert_eq!(cyclic(6, CAP).unwrap().order(), 6);
    assert!(cyclic(6, CAP).unwrap().is_abelian());
    let c2 = cyclic(2, CAP).unwrap();
    let v4 = direct_product(&[c2.clone(), c2.clone()], CAP).unwrap();
    let c4 = cyclic(4, CAP).unwrap();
    assert_eq!(wreath(&c2, &v4, CAP).unwrap().order(), 64);
    assert_eq!(wreath(&c4, &v4, CAP).unwrap().order(), 1024);
    // wreath(C2, C2) is dihedral of order 8: class 2, exponent 4, five involutions.
    let w = wreath(&c2, &c2, CAP).unwrap();
    let d8 = group("D8");
    assert_eq!(w.order(), 8);
    assert_eq!(nilpotency_class(&Subgroup::whole(&w)), Some(2));
    assert_eq!(w.exponent(), 4);
    let involutions = |g: &FiniteGroup| g.elements().filter(|&e| g.element_order(e) == 2).count();
    assert_eq!(involutions(&w), involutions(&d8));
    assert_eq!(involutions(&w), 5);
}

#[test]
fn free_nilpotent_examples() {
    let g = free_nil_c2(FreeNilVariant::OddPrime(3), 2, CAP).unwrap();
    assert_eq!(g.order(), 27);
    assert_eq!(g.exponent(), 3);
    assert_eq!(nilpotency_class(&Subgroup::whole(&g)), Some(2));

    let h = free_nil_c2(FreeNilVariant::Exponent4, 2, CAP).unwrap();
    assert_eq!(h.order(), 32);
    assert_eq!(h.exponent(), 4);
    assert_eq!(nilpotency_class(&Subgroup::whole(&h)), Some(2));
    let (x, y) = (h.generators()[0], h.generators()[1]);
    assert!(h.pow(h.comm(x, y), 2).is_identity());

    assert_eq!(free_nil_c2(FreeNilVariant::OddPrime(3), 3, CAP).unwrap().order(), 729);
}

#[test]
fn group_ring_examples() {
    let c2 = cyclic(2, CAP).unwrap();
    let ring = GroupRing::new(2, &c2);
    let u = ring.augmentation_generator(c2.generators()[0]);
    assert!(ring.mul(&u, &u).is_zero());

    let c4 = cyclic(4, CAP).unwrap();
    let ring = GroupRing::new(2, &c4);
    let u = ring.augmentation_generator(c4.generators()[0]);
    assert!(!ring.pow(&u, 3).is_zero());
    assert!(ring.pow(&u, 4).is_zero());

    let base = free_nil_c2(FreeNilVariant::Exponent4, 2, CAP).unwrap();
    let ring = GroupRing::new(2, &base);
    let (x0, x1) = (base.generators()[0], base.generators()[1]);
    assert!(!ring.augmentation_generator(base.comm(x0, x1)).is_zero());
}

#[test]
fn gupta_levin_examples() {
    let m = GuptaLevinGroup::new(GuptaLevinVariant::Exponent4, 3, CAP).unwrap();
    assert_eq!(m.base().order(), 512);
    assert!(matches!(m.elements(), Err(Error::Capability(_))));
    let ring = m.ring();

    // [A, B] = (1, s(g − 1)) for A = (1, s).
    let s = ring.from_terms([(m.base().generators()[1], 1)]);
    let a = m.element(Element::IDENTITY, s.clone());
    let g = m.base().mul(m.base().generators()[0], m.base().generators()[2]);
    let b = m.element(g, ring.from_terms([(m.base().generators()[0], 1)]));
    let c = m.commutator(&a, &b);
    assert!(c.g.is_identity());
    assert_eq!(c.r, ring.mul(&s, &ring.augmentation_generator(g)));

    // [A, ₄B] is trivial.
    assert!(m.is_identity(&m.engel(&a, &b, 4)));

    // [Y, [X₀, X₁], …, [X₀, Xₘ]] is a nontrivial kernel element.
    let mut acc = m.y();
    for j in 1..m.rank() {
        acc = m.commutator(&acc, &m.commutator(&m.x(0), &m.x(j)));
        assert!(acc.g.is_identity());
        assert!(!acc.r.is_zero());
    }
}

#[test]
fn spec_parsing_examples() {
    assert_eq!(
        parse_group_spec("C2 x C2").unwrap(),
        GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)])
    );
    let w = parse_group_spec("wreath(C4, C2 x C2)").unwrap();
    assert!(matches!(w, GroupSpec::Wreath(..)));
    assert_eq!(w.projected_order(), Some(1024));
    let f = parse_group_spec("fnil(p=3,k=2)").unwrap();
    assert_eq!(f, GroupSpec::FreeNil { p: 3, k: 2 });
    assert_eq!(f.projected_order(), Some(27));
    match parse_group_spec("C2 x Q") {
        Err(Error::Parse { token, .. }) => assert_eq!(token, "Q"),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn capacity_errors() {
    let spec = parse_group_spec("S5").unwrap();
    assert!(matches!(make_group(&spec, 100), Err(Error::Capacity { .. })));
}

#[test]
fn check_examples() {
    let cfg = VerifyConfig::default();
    let run = |id: CheckId, spec: &str| {
        let spec = parse_group_spec(spec).unwrap();
        run_check(id, &spec, &spec.instantiate(CAP).unwrap(), &cfg).unwrap()
    };
    assert_eq!(run(CheckId::PengR, "S3").outcome, Outcome::Pass);
    assert_eq!(run(CheckId::WreathSeparation, "wreath(C2,C2xC2)").outcome, Outcome::Pass);
    assert_eq!(run(CheckId::HeinekenIdentity, "C2xC4").outcome, Outcome::Pass);
    assert_eq!(run(CheckId::HeinekenInclusions, "S4").outcome, Outcome::Pass);
    let gl = run(CheckId::GuptaLevin6Engel, "gl(p=2,k=3)");
    assert_eq!(gl.outcome, Outcome::Pass);
    assert_eq!(run(CheckId::PengR, "gl(p=2,k=3)").outcome, Outcome::Skipped);
}

#[test]
fn search_examples() {
    let abelian: Vec<(GroupSpec, FiniteGroup)> = ["C2", "C6", "C2xC4", "C3xC3"]
        .iter()
        .map(|s| {
            let spec = parse_group_spec(s).unwrap();
            let g = make_group(&spec, CAP).unwrap();
            (spec, g)
        })
        .collect();
    let zoo: Vec<(GroupSpec, &FiniteGroup)> = abelian.iter().map(|(s, g)| (s.clone(), g)).collect();
    for p in [SearchPredicate::MacdonaldR3, SearchPredicate::MacdonaldRnLn] {
        assert!(search_witness(p, &zoo, 8).unwrap().is_none());
    }

    let class_two: Vec<(GroupSpec, FiniteGroup)> = ["D8", "Q8", "fnil(p=3,k=2)", "fnil4(k=2)"]
        .iter()
        .map(|s| {
            let spec = parse_group_spec(s).unwrap();
            let g = make_group(&spec, CAP).unwrap();
            (spec, g)
        })
        .collect();
    let zoo: Vec<(GroupSpec, &FiniteGroup)> = class_two.iter().map(|(s, g)| (s.clone(), g)).collect();
    assert!(search_witness(SearchPredicate::MacdonaldR3, &zoo, 8).unwrap().is_none());
}
