//! Property tests over the default zoo and random inputs.

use std::sync::OnceLock;

use engel_lab::analysis::Analysis;
use engel_lab::constructions::{
    cyclic, direct_product, free_nil_c2, make_group, parse_group_spec, wreath, FreeNilVariant, GroupRing,
    GroupRingElement, GroupSpec, GuptaLevinGroup, GuptaLevinVariant, RingMatrix,
};
use engel_lab::engel::Side;
use engel_lab::group::DEFAULT_ORDER_CAP as CAP;
use engel_lab::structure::{
    lower_central_series, normal_closure, radical_candidates, radicals, subnormal_defect, upper_central_series,
};
use engel_lab::verify::{
    replay, run_check_finite, set_members, CheckId, Outcome, Relation, SetName, VerifyConfig, Witness, DEFAULT_ZOO,
};
use engel_lab::{closure, quotient, Element, FiniteGroup, GroupOps, Subgroup};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn zoo() -> &'static [(GroupSpec, FiniteGroup)] {
    static ZOO: OnceLock<Vec<(GroupSpec, FiniteGroup)>> = OnceLock::new();
    ZOO.get_or_init(|| {
        DEFAULT_ZOO
            .iter()
            .map(|s| {
                let spec = parse_group_spec(s).unwrap();
                let g = make_group(&spec, CAP).unwrap();
                (spec, g)
            })
            .collect()
    })
}

fn small_zoo() -> impl Iterator<Item = &'static FiniteGroup> {
    zoo().iter().map(|(_, g)| g).filter(|g| g.order() <= 256)
}

fn pick(g: &FiniteGroup, i: usize) -> Element {
    Element((i % g.order()) as u32)
}

fn cases(n: u32) -> ProptestConfig {
    ProptestConfig::with_cases(n)
}

fn leaf_spec() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (1usize..13).prop_map(GroupSpec::Cyclic),
        (1usize..9).prop_map(|n| GroupSpec::Dihedral(2 * n)),
        (1usize..6).prop_map(GroupSpec::Symmetric),
        (1usize..6).prop_map(GroupSpec::Alternating),
        Just(GroupSpec::Quaternion8),
        (prop::sample::select(vec![3u32, 5, 7]), 2usize..5).prop_map(|(p, k)| GroupSpec::FreeNil { p, k }),
        (2usize..5).prop_map(|k| GroupSpec::FreeNil4 { k }),
        (prop::sample::select(vec![2u32, 3, 5]), 2usize..5).prop_map(|(p, k)| GroupSpec::GuptaLevin { p, k }),
    ]
}

fn spec_strategy() -> impl Strategy<Value = GroupSpec> {
    leaf_spec().prop_recursive(3, 12, 3, |inner| {
        let wreath = (inner.clone(), inner).prop_map(|(a, b)| GroupSpec::Wreath(Box::new(a), Box::new(b)));
        // Nested products print flat.
        let factor = prop_oneof![leaf_spec(), wreath.clone()];
        prop_oneof![prop::collection::vec(factor, 2..4).prop_map(GroupSpec::Product), wreath]
    })
}

proptest! {
    #![proptest_config(cases(256))]

    #[test]
    fn spec_display_reparses(spec in spec_strategy()) {
        let text = spec.to_string();
        prop_assert_eq!(parse_group_spec(&text).unwrap(), spec.clone());
        let spaced = text.replace('x', " x ").replace(',', " , ").replace('(', " ( ");
        prop_assert_eq!(parse_group_spec(&spaced).unwrap(), spec);
    }

    #[test]
    fn closure_is_idempotent_and_order_free(gi in 0usize..17, picks in prop::collection::vec(any::<usize>(), 0..4)) {
        let g = &zoo()[gi].1;
        let seeds: Vec<Element> = picks.iter().map(|&i| pick(g, i)).collect();
        let h = closure(g, &seeds).unwrap();
        let again = closure(g, h.elements()).unwrap();
        prop_assert_eq!(&again, &h);
        let reversed: Vec<Element> = seeds.iter().rev().copied().collect();
        prop_assert_eq!(&closure(g, &reversed).unwrap(), &h);
        for &a in h.elements() {
            for &b in h.elements().iter().step_by(7) {
                prop_assert!(h.contains(g.mul(a, b)));
            }
        }
    }

    #[test]
    fn engel_recursion(gi in 0usize..17, x in any::<usize>(), y in any::<usize>(), n in 0usize..8) {
        let g = &zoo()[gi].1;
        let (x, y) = (pick(g, x), pick(g, y));
        prop_assert_eq!(g.engel(x, y, n + 1), g.comm(g.engel(x, y, n), y));
    }

    #[test]
    fn heineken_identity(gi in 0usize..17, x in any::<usize>(), y in any::<usize>(), n in 1usize..7) {
        let g = &zoo()[gi].1;
        let (x, y) = (pick(g, x), pick(g, y));
        let lhs = g.engel(x, y, n + 1);
        let rhs = g.conj(g.engel(g.conj(g.inv(y), x), y, n), y);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn table_depth_matches_iteration(gi in 0usize..17, x in any::<usize>(), y in any::<usize>()) {
        let g = &zoo()[gi].1;
        let a = Analysis::new(g);
        let (x, y) = (pick(g, x), pick(g, y));
        let mut seen = Vec::new();
        let mut c = x;
        let mut n = 0;
        let naive = loop {
            if c.is_identity() {
                break Some(n);
            }
            if seen.contains(&c) {
                break None;
            }
            seen.push(c);
            c = g.comm(c, y);
            n += 1;
        };
        prop_assert_eq!(a.depth(x, y).unwrap(), naive);
    }

    #[test]
    fn levels_are_closed_under_conjugation(gi in 0usize..17, h in any::<usize>()) {
        let g = &zoo()[gi].1;
        let a = Analysis::with_max_n(g, 6);
        let h = pick(g, h);
        for side in [Side::Left, Side::Right] {
            for n in 1..=6 {
                let level = a.engel().unwrap().level(side, n).unwrap();
                for &x in level.elements.iter().step_by(3) {
                    prop_assert!(level.elements.binary_search(&g.conj(x, h)).is_ok(), "{side:?} {n}");
                }
            }
        }
    }

    #[test]
    fn upper_central_terms_are_characteristic(gi in 0usize..17, h in any::<usize>()) {
        let g = &zoo()[gi].1;
        let h = pick(g, h);
        for term in &upper_central_series(g).unwrap().terms {
            prop_assert!(term.elements().iter().all(|&x| term.contains(g.conj(x, h))));
        }
    }

    #[test]
    fn quotient_by_everything_is_trivial(gi in 0usize..17, x in any::<usize>()) {
        let g = &zoo()[gi].1;
        let n = normal_closure(g, &[pick(g, x)]);
        let q = quotient(g, &n).unwrap();
        prop_assert_eq!(q.order() * n.order(), g.order());
        let qq = quotient(&q, &Subgroup::whole(&q)).unwrap();
        prop_assert_eq!(qq.order(), 1);
    }

    #[test]
    fn wreath_order_formula(a in prop::sample::select(vec!["C1", "C2", "C3", "S3", "C2xC2"]),
                            b in prop::sample::select(vec!["C1", "C2", "C3", "C4", "C2xC2"])) {
        let (ga, gb) = (group(a), group(b));
        let expected = (ga.order() as u128).pow(gb.order() as u32) * gb.order() as u128;
        match wreath(&ga, &gb, CAP) {
            Ok(w) => prop_assert_eq!(w.order() as u128, expected),
            Err(_) => prop_assert!(expected > CAP as u128),
        }
    }

    #[test]
    fn membership_witnesses_replay(gi in 0usize..17, x in any::<usize>(), n in 1usize..5) {
        let g = &zoo()[gi].1;
        let a = Analysis::new(g);
        let x = pick(g, x);
        for set in [SetName::Left, SetName::LeftLevel(n), SetName::RightLevel(n), SetName::Fitting, SetName::Hypercenter] {
            let actual = set_members(&a, set).unwrap()[x.index()];
            let wrong = Witness::new(g, Relation::Membership { set, expected: !actual }, &[x]);
            prop_assert!(replay(&a, &wrong).unwrap());
            let right = Witness::new(g, Relation::Membership { set, expected: actual }, &[x]);
            prop_assert!(!replay(&a, &right).unwrap());
        }
    }

    #[test]
    fn sparse_ring_product_matches_dense(bi in 0usize..6, p in prop::sample::select(vec![2u32, 3]),
                                         ta in prop::collection::vec((any::<usize>(), 1u32..3), 0..5),
                                         tb in prop::collection::vec((any::<usize>(), 1u32..3), 0..5)) {
        let base = &ring_bases()[bi];
        let ring = GroupRing::new(p, base);
        let make = |t: &[(usize, u32)]| ring.from_terms(t.iter().map(|&(i, c)| (pick(base, i), c % p)));
        let (a, b) = (make(&ta), make(&tb));
        let dense = |e: &GroupRingElement| -> Vec<u32> { base.elements().map(|g| e.coefficient(g)).collect() };
        let (da, db) = (dense(&a), dense(&b));
        let mut expected = vec![0u32; base.order()];
        for g in base.elements() {
            for h in base.elements() {
                let k = base.mul(g, h).index();
                expected[k] = (expected[k] + da[g.index()] * db[h.index()]) % p;
            }
        }
        prop_assert_eq!(dense(&ring.mul(&a, &b)), expected);
    }
}

fn group(spec: &str) -> FiniteGroup {
    make_group(&parse_group_spec(spec).unwrap(), CAP).unwrap()
}

fn ring_bases() -> &'static [FiniteGroup] {
    static BASES: OnceLock<Vec<FiniteGroup>> = OnceLock::new();
    BASES.get_or_init(|| ["C2", "C4", "S3", "D8", "C2xC4xC4", "fnil4(k=2)"].iter().map(|s| group(s)).collect())
}

#[test]
fn level_chains_are_increasing() {
    for (spec, g) in zoo() {
        let a = Analysis::new(g);
        let r = a.engel().unwrap();
        for side in [Side::Left, Side::Right] {
            for n in 1..r.max_n {
                let lo = &r.level(side, n).unwrap().elements;
                let hi = &r.level(side, n + 1).unwrap().elements;
                assert!(lo.iter().all(|x| hi.binary_search(x).is_ok()), "{spec} {side:?} {n}");
            }
        }
    }
}

#[test]
fn radical_chain_and_equalities() {
    for (spec, g) in zoo() {
        let c = radical_candidates(g).unwrap();
        assert!(c.fitting.is_subset_of(&c.baer), "{spec}");
        assert!(c.baer.is_subset_of(&c.gruenberg), "{spec}");
        assert!(c.gruenberg.is_subset_of(&c.hirsch_plotkin), "{spec}");
        assert_eq!(c.fitting, c.hirsch_plotkin, "{spec}");
        radicals(g).unwrap();
    }
}

#[test]
fn nilpotency_tests_agree() {
    for (spec, g) in zoo().iter().chain(std::iter::once(&(parse_group_spec("S4").unwrap(), group("S4")))) {
        let upper = upper_central_series(g).unwrap();
        let lower = lower_central_series(&Subgroup::whole(g));
        assert_eq!(upper.last().is_whole(), lower.last().is_trivial(), "{spec}");
        if upper.last().is_whole() {
            assert_eq!(upper.length(), lower.length(), "{spec}");
        }
    }
}

#[test]
fn baer_radical_matches_subnormal_cyclics() {
    let extra = [group("S4"), group("A4")];
    let mut groups: Vec<&FiniteGroup> = small_zoo().collect();
    groups.extend(extra.iter());
    for g in groups {
        let baer = radicals(g).unwrap().baer;
        for x in g.elements() {
            let cyc = Subgroup::generated_by(g, [x]);
            assert_eq!(subnormal_defect(g, &cyc).is_some(), baer.contains(x));
        }
    }
}

#[test]
fn gruenberg_chains_hold() {
    for (spec, g) in zoo() {
        let a = Analysis::new(g);
        let mask = |s| set_members(&a, s).unwrap();
        let subset = |x: &[bool], y: &[bool]| x.iter().zip(y).all(|(&p, &q)| !p || q);
        assert!(subset(&mask(SetName::ZetaOmega), &mask(SetName::RhoBar)), "{spec}");
        assert!(subset(&mask(SetName::RhoBar), &mask(SetName::Baer)), "{spec}");
        assert!(subset(&mask(SetName::Hypercenter), &mask(SetName::Rho)), "{spec}");
        assert!(subset(&mask(SetName::Rho), &mask(SetName::Gruenberg)), "{spec}");
        assert!(subset(&mask(SetName::Rho), &mask(SetName::Right)), "{spec}");
        assert!(subset(&mask(SetName::RhoBar), &mask(SetName::RightBounded)), "{spec}");
    }
}

#[test]
fn free_nilpotent_associativity() {
    for v in [FreeNilVariant::OddPrime(3), FreeNilVariant::OddPrime(5), FreeNilVariant::Exponent4] {
        let g = free_nil_c2(v, 2, CAP).unwrap();
        for a in g.elements() {
            for b in g.elements() {
                let ab = g.mul(a, b);
                for c in g.elements() {
                    assert_eq!(g.mul(ab, c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }
    let g = free_nil_c2(FreeNilVariant::Exponent4, 3, CAP).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..2000 {
        let [a, b, c] = [(); 3].map(|_| Element(rng.gen_range(0..g.order() as u32)));
        assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
    }
    assert_eq!(g.exponent(), 4);
}

fn gupta_levin_variants() -> Vec<GuptaLevinGroup> {
    vec![
        GuptaLevinGroup::new(GuptaLevinVariant::Exponent4, 3, CAP).unwrap(),
        GuptaLevinGroup::new(GuptaLevinVariant::OddPrime(3), 2, CAP).unwrap(),
    ]
}

#[test]
fn gupta_levin_group_axioms() {
    for m in gupta_levin_variants() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let e = m.identity();
        for _ in 0..10_000 {
            let (a, b, c) = (m.random_element(&mut rng, 4), m.random_element(&mut rng, 4), m.random_element(&mut rng, 4));
            assert_eq!(m.op(&m.op(&a, &b), &c), m.op(&a, &m.op(&b, &c)));
            assert_eq!(m.op(&a, &e), a);
            assert_eq!(m.op(&e, &a), a);
            assert!(m.is_identity(&m.op(&a, &m.inverse(&a))));
            assert!(m.is_member(&m.op(&a, &b)));
        }
    }
}

#[test]
fn gupta_levin_pair_law_matches_matrices() {
    for m in gupta_levin_variants() {
        let ring = m.ring();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..1000 {
            let (a, b) = (m.random_element(&mut rng, 4), m.random_element(&mut rng, 4));
            let product = RingMatrix::from_pair(&ring, &a).mul(&ring, &RingMatrix::from_pair(&ring, &b));
            assert_eq!(RingMatrix::from_pair(&ring, &m.op(&a, &b)), product);
        }
    }
}

#[test]
fn direct_product_orders_multiply() {
    let parts = [cyclic(2, CAP).unwrap(), cyclic(3, CAP).unwrap(), group("S3")];
    assert_eq!(direct_product(&parts, CAP).unwrap().order(), 36);
}

#[test]
fn failing_check_witness_replays() {
    let g = group("wreath(C4,C2xC2)");
    let spec = parse_group_spec("wreath(C4,C2xC2)").unwrap();
    let a = Analysis::new(&g);
    let r = run_check_finite(CheckId::WreathSeparation, &spec, &a, &VerifyConfig::default()).unwrap();
    assert_eq!(r.outcome, Outcome::Fail);
    assert!(replay(&a, r.witness.as_ref().unwrap()).unwrap());
}

#[test]
fn inclusion_witness_replays() {
    let g = group("D16");
    let a = Analysis::new(&g);
    let (l2, l1) = (SetName::LeftLevel(2), SetName::LeftLevel(1));
    let m2 = set_members(&a, l2).unwrap();
    let m1 = set_members(&a, l1).unwrap();
    let x = g.elements().find(|x| m2[x.index()] && !m1[x.index()]).unwrap();
    let w = Witness::new(&g, Relation::Inclusion { from: l2, to: l1 }, &[x]);
    assert!(replay(&a, &w).unwrap());
    let back = Witness::new(&g, Relation::Inclusion { from: l1, to: l2 }, &[x]);
    assert!(!replay(&a, &back).unwrap());
}

#[test]
fn seeded_checks_are_deterministic() {
    let spec = parse_group_spec("fnil4(k=3)").unwrap();
    let g = make_group(&spec, CAP).unwrap();
    let cfg = VerifyConfig {
        seed: 42,
        ..VerifyConfig::default()
    };
    for id in [CheckId::HeinekenIdentity, CheckId::LemmaXY, CheckId::LeviKappeIdentities] {
        let first = run_check_finite(id, &spec, &Analysis::new(&g), &cfg).unwrap();
        let second = run_check_finite(id, &spec, &Analysis::new(&g), &cfg).unwrap();
        assert_eq!(first, second);
        assert!(!first.stats.exhaustive, "{id}");
        assert_eq!(first.stats.seed, Some(42));
    }
}

#[test]
fn catalog_on_zoo() {
    let cfg = VerifyConfig::default();
    for (spec, g) in zoo() {
        let a = Analysis::new(g);
        for &id in CheckId::ALL {
            let r = run_check_finite(id, spec, &a, &cfg).unwrap();
            let expected_failure = id == CheckId::WreathSeparation && spec.to_string() == "wreath(C4,C2xC2)";
            if expected_failure {
                assert_eq!(r.outcome, Outcome::Fail);
            } else {
                assert_ne!(r.outcome, Outcome::Fail, "{id} on {spec}: {:?}", r.witness);
            }
            if let Some(w) = &r.witness {
                assert!(replay(&a, w).unwrap(), "{id} on {spec}");
            }
        }
    }
}
