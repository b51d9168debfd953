//! Sampled verification of the Gupta–Levin matrix group properties.

use rand_chacha::ChaCha8Rng;

use crate::constructions::{GroupSpec, GuptaLevinElement, GuptaLevinGroup, RingMatrix};
use crate::group::Element;
use crate::ops::GroupOps;
use crate::structure::nilpotency_class;
use crate::subgroup::Subgroup;
use crate::verify::witness::{Relation, Witness};
use crate::verify::{CheckId, CheckResult, Outcome, Stats, VerifyConfig};

pub(crate) const RING_SAMPLES: usize = 100;
pub(crate) const KERNEL_PAIRS: usize = 200;
pub(crate) const ENGEL_PAIRS: usize = 200;
pub(crate) const GAMMA3_SAMPLES: usize = 200;
const MAX_TERMS: usize = 4;

struct Run<'m> {
    m: &'m GuptaLevinGroup,
    rng: ChaCha8Rng,
    examined: u64,
    failure: Option<Witness>,
}

impl Run<'_> {
    fn fail(&mut self, part: &str, sample: usize, elements: &[&GuptaLevinElement]) {
        if self.failure.is_none() {
            self.failure = Some(Witness {
                relation: Relation::BlackBox {
                    part: part.into(),
                    sample,
                },
                elements: elements.iter().map(|e| self.m.display(e).to_string()).collect(),
            });
        }
    }

    fn sample(&mut self) -> GuptaLevinElement {
        self.m.random_element(&mut self.rng, MAX_TERMS)
    }
}

/// Checks, at finite rank:
/// 1. `M` has exponent `p²` (`8` for the exponent-4 base) and `γ₃(M)` has
///    exponent `p` (`2`), and the pair law matches 2×2 matrix products;
/// 2. `M` is abelian-by-(class 2): the kernel `{(1, r)}` is abelian and the
///    base has class at most 2;
/// 3. `(g − 1)ᵉ = 0` in the group ring, `[A, ₑ B] = 1` for kernel `A`, and
///    `M` satisfies the `(e + 2)`-Engel law, where `e` is the base exponent;
/// 4. `[Y, [X₀, X₁], …, [X₀, Xₘ]] = (1, uₘ)` with `uₘ ≠ 0` for `m < rank`.
pub(crate) fn run(m: &GuptaLevinGroup, spec: &GroupSpec, cfg: &VerifyConfig) -> CheckResult {
    let id = CheckId::GuptaLevin6Engel;
    let mut run = Run {
        m,
        rng: cfg.rng_for(id),
        examined: 0,
        failure: None,
    };
    let ring = m.ring();
    let variant = m.variant();
    let e = variant.base_exponent();
    let base = m.base();

    for i in 0..RING_SAMPLES {
        let g = Element(rand::Rng::gen_range(&mut run.rng, 0..base.order() as u32));
        run.examined += 1;
        if !ring.pow(&ring.augmentation_generator(g), e).is_zero() {
            let shown = m.element(g, ring.zero());
            run.fail("augmentation power", i, &[&shown]);
        }
    }

    for i in 0..KERNEL_PAIRS {
        let a = m.random_kernel_element(&mut run.rng, MAX_TERMS);
        let b = run.sample();
        run.examined += 1;
        if !m.is_identity(&m.engel(&a, &b, e as usize)) {
            run.fail("kernel Engel law", i, &[&a, &b]);
        }
    }

    let degree = variant.engel_degree();
    for i in 0..ENGEL_PAIRS {
        let x = run.sample();
        let z = run.sample();
        run.examined += 1;
        if !m.is_identity(&m.engel(&x, &z, degree)) {
            run.fail("Engel law", i, &[&x, &z]);
        }
        let (px, pz) = (RingMatrix::from_pair(&ring, &x), RingMatrix::from_pair(&ring, &z));
        if RingMatrix::from_pair(&ring, &m.op(&x, &z)) != px.mul(&ring, &pz) {
            run.fail("matrix product", i, &[&x, &z]);
        }
    }

    let gamma3_exponent = variant.modulus() as i64;
    for i in 0..GAMMA3_SAMPLES {
        let (u, v, w) = (run.sample(), run.sample(), run.sample());
        let c = m.left_normed(&[u.clone(), v.clone(), w.clone()]);
        run.examined += 1;
        if !c.g.is_identity() {
            run.fail("gamma3 in kernel", i, &[&u, &v, &w]);
        }
        if !m.is_identity(&m.power(&c, gamma3_exponent)) {
            run.fail("gamma3 exponent", i, &[&u, &v, &w]);
        }
        let (a, b) = (
            m.random_kernel_element(&mut run.rng, MAX_TERMS),
            m.random_kernel_element(&mut run.rng, MAX_TERMS),
        );
        if m.op(&a, &b) != m.op(&b, &a) {
            run.fail("kernel abelian", i, &[&a, &b]);
        }
        if !m.is_identity(&m.power(&u, variant.group_exponent() as i64)) {
            run.fail("group exponent", i, &[&u]);
        }
    }
    let x0 = m.x(0);
    if m.is_identity(&m.power(&x0, variant.group_exponent() as i64 / variant.modulus() as i64)) {
        run.fail("exponent is exact", 0, &[&x0]);
    }
    if !nilpotency_class(&Subgroup::whole(base)).is_some_and(|c| c <= 2) {
        run.fail("base class", 0, &[]);
    }

    let mut notes = Vec::new();
    let mut acc = m.y();
    let mut u = ring.one();
    for j in 1..m.rank() {
        let c = m.commutator(&x0, &m.x(j));
        acc = m.commutator(&acc, &c);
        u = ring.mul(&u, &ring.augmentation_generator(base.comm(base.generators()[0], base.generators()[j])));
        run.examined += 1;
        if !acc.g.is_identity() || acc.r != u || u.is_zero() {
            run.fail("u_m nonzero", j, &[&acc]);
        }
        notes.push(format!("u_{j} has {} terms", u.support_len()));
    }
    notes.insert(
        0,
        format!(
            "{RING_SAMPLES} ring samples, {KERNEL_PAIRS} kernel pairs, {ENGEL_PAIRS} Engel pairs, \
             {GAMMA3_SAMPLES} gamma3 samples; Engel degree {degree}"
        ),
    );

    CheckResult {
        id: id.as_str().into(),
        group: spec.to_string(),
        outcome: if run.failure.is_some() { Outcome::Fail } else { Outcome::Pass },
        reason: None,
        witness: run.failure,
        stats: Stats {
            examined: run.examined,
            exhaustive: false,
            seed: Some(cfg.seed),
            samples: Some(RING_SAMPLES + KERNEL_PAIRS + ENGEL_PAIRS + GAMMA3_SAMPLES),
            notes,
        },
    }
}
