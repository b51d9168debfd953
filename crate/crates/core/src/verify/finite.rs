//! Checks over enumerable groups.

use std::collections::HashSet;

use rand_chacha::ChaCha8Rng;

use crate::analysis::Analysis;
use crate::constructions::{make_group, GroupSpec};
use crate::error::Result;
use crate::group::{Element, FiniteGroup, GeneratorRole, DEFAULT_ORDER_CAP};
use crate::structure::{conjugacy_classes, nilpotency_class};
use crate::subgroup::Subgroup;
use crate::verify::sets::{set_members, SetName};
use crate::verify::witness::{
    heineken_identity_holds, involution_formula_holds, lemma_xy_holds, level_generation_holds, levi_kappe_holds,
    plotkin_holds, Relation, Witness,
};
use crate::verify::{CheckId, CheckResult, Outcome, Stats, Tuples, VerifyConfig};

/// Highest `n` used by the bounded-level checks.
const LEVEL_BOUND: usize = 6;

pub(crate) struct Ctx<'a, 'g> {
    id: CheckId,
    pub(crate) analysis: &'a Analysis<'g>,
    pub(crate) group: &'g FiniteGroup,
    cfg: &'a VerifyConfig,
    rng: ChaCha8Rng,
    examined: u64,
    sampled: bool,
    notes: Vec<String>,
    failure: Option<Witness>,
}

impl<'a, 'g> Ctx<'a, 'g> {
    pub(crate) fn new(id: CheckId, analysis: &'a Analysis<'g>, cfg: &'a VerifyConfig) -> Self {
        Ctx {
            id,
            analysis,
            group: analysis.group(),
            cfg,
            rng: cfg.rng_for(id),
            examined: 0,
            sampled: false,
            notes: Vec::new(),
            failure: None,
        }
    }

    fn failed(&self) -> bool {
        self.failure.is_some()
    }

    fn fail(&mut self, relation: Relation, elements: &[Element]) {
        if self.failure.is_none() {
            self.failure = Some(Witness::new(self.group, relation, elements));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn mask(&self, set: SetName) -> Result<Vec<bool>> {
        set_members(self.analysis, set)
    }

    fn members(&self, set: SetName) -> Result<Vec<Element>> {
        let m = self.mask(set)?;
        Ok(self.group.elements().filter(|e| m[e.index()]).collect())
    }

    /// Quantifies over tuples drawn from `pools`: exhaustively up to the
    /// exhaustive limit, by seeded sampling above it. `f` returns the
    /// violated relation, if any.
    fn forall(&mut self, pools: &[&[Element]], mut f: impl FnMut(&[Element]) -> Option<Relation>) {
        if self.failed() {
            return;
        }
        let tuples = if self.group.order() <= self.cfg.exhaustive_limit {
            Tuples::Exhaustive
        } else {
            self.sampled = true;
            Tuples::Sampled(self.cfg.samples)
        };
        let mut failure = None;
        let n = tuples.for_each(pools, &mut self.rng, |t| match f(t) {
            Some(r) => {
                failure = Some((r, t.to_vec()));
                false
            }
            None => true,
        });
        self.examined += n;
        if let Some((r, t)) = failure {
            self.fail(r, &t);
        }
    }

    /// Exhaustive version of `forall` regardless of group order.
    fn forall_exhaustive(&mut self, pools: &[&[Element]], mut f: impl FnMut(&[Element]) -> Option<Relation>) {
        if self.failed() {
            return;
        }
        let mut failure = None;
        let n = Tuples::Exhaustive.for_each(pools, &mut self.rng, |t| match f(t) {
            Some(r) => {
                failure = Some((r, t.to_vec()));
                false
            }
            None => true,
        });
        self.examined += n;
        if let Some((r, t)) = failure {
            self.fail(r, &t);
        }
    }

    /// `from ⊆ to` over every element.
    fn inclusion(&mut self, from: SetName, to: SetName) -> Result<()> {
        if self.failed() {
            return Ok(());
        }
        let (a, b) = (self.mask(from)?, self.mask(to)?);
        self.examined += a.len() as u64;
        if let Some(i) = (0..a.len()).find(|&i| a[i] && !b[i]) {
            self.fail(Relation::Inclusion { from, to }, &[Element(i as u32)]);
        }
        Ok(())
    }

    fn equality(&mut self, x: SetName, y: SetName) -> Result<()> {
        self.inclusion(x, y)?;
        self.inclusion(y, x)
    }

    fn expect(&mut self, set: SetName, e: Element, expected: bool) -> Result<()> {
        if self.failed() {
            return Ok(());
        }
        self.examined += 1;
        if self.mask(set)?[e.index()] != expected {
            self.fail(Relation::Membership { set, expected }, &[e]);
        }
        Ok(())
    }

    pub(crate) fn finish(self, spec: &GroupSpec) -> CheckResult {
        let outcome = if self.failure.is_some() { Outcome::Fail } else { Outcome::Pass };
        CheckResult {
            id: self.id.as_str().into(),
            group: spec.to_string(),
            outcome,
            reason: None,
            witness: self.failure,
            stats: Stats {
                examined: self.examined,
                exhaustive: !self.sampled,
                seed: self.sampled.then_some(self.cfg.seed),
                samples: self.sampled.then_some(self.cfg.samples),
                notes: self.notes,
            },
        }
    }
}

/// Runs a finite check. Returns a skip reason when the check does not apply.
pub(crate) fn run(ctx: &mut Ctx<'_, '_>, id: CheckId, spec: &GroupSpec) -> Result<Option<String>> {
    let g = ctx.group;
    let all: Vec<Element> = g.elements().collect();
    match id {
        CheckId::HeinekenIdentity => {
            ctx.forall(&[&all, &all], |t| {
                (1..=LEVEL_BOUND)
                    .find(|&n| !heineken_identity_holds(g, t[0], t[1], n))
                    .map(|n| Relation::HeinekenIdentity { n })
            });
        }
        CheckId::HeinekenInclusions => {
            ctx.inclusion(SetName::Right, SetName::InverseLeft)?;
            ctx.inclusion(SetName::RightBounded, SetName::InverseLeftBounded)?;
            for n in 1..=LEVEL_BOUND {
                ctx.inclusion(SetName::RightLevel(n), SetName::InverseLeftLevel(n + 1))?;
            }
            // Direct iteration, independent of the Engel table.
            let right = ctx.members(SetName::RightBounded)?;
            let analysis = ctx.analysis;
            ctx.forall(&[&right, &all], |t| {
                let n = analysis.table().ok()?.right(t[0]).length?;
                let ok = g.engel(t[1], g.inv(t[0]), n + 1).is_identity();
                (!ok).then_some(Relation::Inclusion {
                    from: SetName::RightLevel(n),
                    to: SetName::InverseLeftLevel(n + 1),
                })
            });
            if let Some(w) = &mut ctx.failure {
                if w.elements.len() == 2 {
                    w.elements.truncate(1);
                }
            }
        }
        CheckId::BaerPlotkinL => {
            ctx.equality(SetName::Left, SetName::HirschPlotkin)?;
            ctx.equality(SetName::Left, SetName::LeftBounded)?;
        }
        CheckId::HeldLbar => ctx.equality(SetName::LeftBounded, SetName::Fitting)?,
        CheckId::PengR => {
            ctx.equality(SetName::Right, SetName::Hypercenter)?;
            ctx.equality(SetName::Right, SetName::RightBounded)?;
        }
        CheckId::L2Characterization => {
            ctx.equality(SetName::LeftLevel(2), SetName::AbelianNormalClosure)?;
            ctx.inclusion(SetName::LeftLevel(2), SetName::Fitting)?;
        }
        CheckId::L3Characterization => {
            ctx.equality(SetName::LeftLevel(3), SetName::ConjugatePairClassTwo)?;
            ctx.inclusion(SetName::LeftLevel(3), SetName::PowersInLeftLevel(3))?;
        }
        CheckId::InvolutionFormula => {
            let involutions: Vec<Element> = all.iter().copied().filter(|&x| g.mul(x, x).is_identity()).collect();
            ctx.forall(&[&all, &involutions], |t| {
                (1..=LEVEL_BOUND)
                    .find(|&n| !involution_formula_holds(g, t[0], t[1], n))
                    .map(|n| Relation::InvolutionFormula { n })
            });
        }
        CheckId::KappeR2Subgroup => {
            let set = SetName::RightLevel(2);
            let mask = ctx.mask(set)?;
            let r2 = ctx.members(set)?;
            ctx.forall_exhaustive(&[&r2, &r2], |t| {
                (!mask[g.mul(t[0], t[1]).index()]).then_some(Relation::NotClosedUnderProduct { set })
            });
            ctx.forall_exhaustive(&[&r2], |t| {
                (!mask[g.inv(t[0]).index()]).then_some(Relation::NotClosedUnderInverse { set })
            });
            ctx.forall_exhaustive(&[&r2, &all], |t| {
                (!mask[g.conj(t[0], t[1]).index()]).then_some(Relation::NotClosedUnderConjugation { set })
            });
        }
        CheckId::LeviKappeIdentities => {
            ctx.inclusion(SetName::RightLevel(2), SetName::LeftLevel(2))?;
            ctx.inclusion(SetName::RightLevel(2), SetName::NormalClosureInRightLevel(2))?;
            ctx.inclusion(SetName::RightLevel(2), SetName::SquareInZeta(3))?;
            let r2 = ctx.members(SetName::RightLevel(2))?;
            ctx.forall(&[&r2, &all, &all, &all], |t| {
                [3u8, 4, 5, 6]
                    .into_iter()
                    .find(|&p| !levi_kappe_holds(g, p, t[0], t[1], t[2], t[3]))
                    .map(|part| Relation::LeviKappe { part })
            });
        }
        CheckId::NewellR3 => ctx.inclusion(SetName::RightLevel(3), SetName::NormalClosureClassAtMost(3))?,
        CheckId::AbdollahiL3Pair => {
            let l3 = ctx.members(SetName::LeftLevel(3))?;
            let mut seen = HashSet::new();
            ctx.forall(&[&l3, &l3], |t| {
                let h = Subgroup::generated_by(g, [t[0], t[1]]);
                if !seen.insert(h.elements().to_vec()) {
                    return None;
                }
                (!nilpotency_class(&h).is_some_and(|c| c <= 4)).then_some(Relation::GeneratedClass { bound: 4 })
            });
        }
        CheckId::ProductL2Ln => {
            let l2 = ctx.members(SetName::LeftLevel(2))?;
            let bounded = ctx.members(SetName::LeftBounded)?;
            let table = ctx.analysis.table()?;
            ctx.forall_exhaustive(&[&l2, &bounded], |t| {
                let n = table.left(t[1]).length.unwrap_or(0).max(1);
                let within = |e: Element| table.left(e).length.is_some_and(|l| l <= 2 * n);
                let relation = |reversed| Relation::Product {
                    first: SetName::LeftLevel(2),
                    second: SetName::LeftLevel(n),
                    target: SetName::LeftLevel(2 * n),
                    reversed,
                };
                if !within(g.mul(t[0], t[1])) {
                    Some(relation(false))
                } else if !within(g.mul(t[1], t[0])) {
                    Some(relation(true))
                } else {
                    None
                }
            });
        }
        CheckId::ProductR2R3 => {
            let r2 = ctx.members(SetName::RightLevel(2))?;
            let r3 = ctx.members(SetName::RightLevel(3))?;
            let in_r3 = ctx.mask(SetName::RightLevel(3))?;
            let in_r4 = ctx.mask(SetName::RightLevel(4))?;
            ctx.forall_exhaustive(&[&r2, &r3], |t| {
                (!in_r3[g.mul(t[0], t[1]).index()]).then_some(Relation::Product {
                    first: SetName::RightLevel(2),
                    second: SetName::RightLevel(3),
                    target: SetName::RightLevel(3),
                    reversed: false,
                })
            });
            ctx.forall_exhaustive(&[&r3, &r3], |t| {
                (!in_r4[g.mul(t[0], t[1]).index()]).then_some(Relation::Product {
                    first: SetName::RightLevel(3),
                    second: SetName::RightLevel(3),
                    target: SetName::RightLevel(4),
                    reversed: false,
                })
            });
        }
        CheckId::WreathSeparation => return wreath_separation(ctx, spec),
        CheckId::LemmaXY => {
            let table = ctx.analysis.table()?;
            ctx.forall(&[&all, &all], |t| {
                let d = table.depth(t[0], t[1]).filter(|&d| d <= LEVEL_BOUND)?;
                (d.max(1)..=LEVEL_BOUND)
                    .find(|&n| !lemma_xy_holds(g, t[0], t[1], n))
                    .map(|n| Relation::LemmaXY { n })
            });
        }
        CheckId::PlotkinNormalizer => {
            ctx.note("H ranges over subgroups generated by at most two left Engel elements");
            let left = ctx.members(SetName::Left)?;
            let left_mask = ctx.mask(SetName::Left)?;
            let class = conjugacy_classes(g);
            let mut seen = HashSet::new();
            ctx.forall(&[&left, &left], |t| {
                let h = Subgroup::generated_by(g, [t[0], t[1]]);
                if !seen.insert(h.elements().to_vec()) {
                    return None;
                }
                if nilpotency_class(&h).is_none() {
                    return Some(Relation::Inclusion {
                        from: SetName::Left,
                        to: SetName::Fitting,
                    });
                }
                (!plotkin_holds(g, t[0], t[1], &class, &left_mask)).then_some(Relation::PlotkinNormalizer)
            });
        }
        CheckId::GruenbergRhoChain => {
            ctx.inclusion(SetName::ZetaOmega, SetName::RhoBar)?;
            ctx.inclusion(SetName::RhoBar, SetName::Baer)?;
            ctx.inclusion(SetName::Hypercenter, SetName::Rho)?;
            ctx.inclusion(SetName::Rho, SetName::Gruenberg)?;
            ctx.inclusion(SetName::Rho, SetName::Right)?;
            ctx.inclusion(SetName::RhoBar, SetName::RightBounded)?;
            ctx.equality(SetName::Rho, SetName::RhoBar)?;
            ctx.inclusion(SetName::Fitting, SetName::Baer)?;
            ctx.inclusion(SetName::Baer, SetName::Gruenberg)?;
            ctx.inclusion(SetName::Gruenberg, SetName::HirschPlotkin)?;
            ctx.inclusion(SetName::HirschPlotkin, SetName::Fitting)?;
        }
        CheckId::HpInL => ctx.inclusion(SetName::HirschPlotkin, SetName::Left)?,
        CheckId::BaerInLbar => ctx.inclusion(SetName::Baer, SetName::LeftBounded)?,
        CheckId::ZomegaInRbar => ctx.inclusion(SetName::ZetaOmega, SetName::RightBounded)?,
        CheckId::GuptaLevin6Engel => unreachable!("black-box check dispatched separately"),
    }
    Ok(None)
}

/// For `A ≀ (C₂ × C₂)` with `A` of exponent `2ᵏ`: the top generators `x`, `y`
/// and `xy` lie in `Lₖ₊₁ \ Lₖ`, and `ax ∉ Lₖ₊₁` for `1 ≠ a ∈ A`. For `A = C₂`
/// also `⟨L₂⟩ = G` while `L₂` is not a subgroup.
fn wreath_separation(ctx: &mut Ctx<'_, '_>, spec: &GroupSpec) -> Result<Option<String>> {
    let GroupSpec::Wreath(a_spec, b_spec) = spec else {
        return Ok(Some("needs a wreath product A wr (C2 x C2)".into()));
    };
    let a = make_group(a_spec, DEFAULT_ORDER_CAP)?;
    let b = make_group(b_spec, DEFAULT_ORDER_CAP)?;
    if b.order() != 4 || b.exponent() != 2 {
        return Ok(Some("top group is not C2 x C2".into()));
    }
    let e = a.exponent();
    if e < 2 || !e.is_power_of_two() {
        return Ok(Some(format!("base group has exponent {e}, not a power of 2")));
    }
    let k = e.trailing_zeros() as usize;
    let g = ctx.group;
    let top = g.generators_with_role(GeneratorRole::Top);
    let (x, y) = (top[0], top[1]);
    for t in [x, y, g.mul(x, y)] {
        ctx.expect(SetName::LeftLevel(k + 1), t, true)?;
        ctx.expect(SetName::LeftLevel(k), t, false)?;
    }
    let base = Subgroup::generated_by(g, g.generators_with_role(GeneratorRole::Base));
    let level = ctx.mask(SetName::LeftLevel(k + 1))?;
    let outside: Vec<bool> = base.elements().iter().map(|&a| !level[g.mul(a, x).index()]).collect();
    let by_order = base
        .elements()
        .iter()
        .zip(&outside)
        .filter(|(a, _)| !a.is_identity())
        .all(|(&a, &out)| out == (g.element_order(a) == e));
    ctx.note(format!("base exponent 2^{k}; base copy of order {}", base.order()));
    ctx.note(format!(
        "a*x lies outside L{} exactly for base elements a of order {e}: {by_order}",
        k + 1
    ));
    for &a in base.elements().iter().filter(|a| !a.is_identity()) {
        ctx.expect(SetName::LeftLevel(k + 1), g.mul(a, x), false)?;
    }
    if k == 1 && !ctx.failed() {
        ctx.examined += 1;
        if !level_generation_holds(ctx.analysis, 2)? {
            ctx.fail(Relation::LevelGeneration { n: 2 }, &[]);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::parse_group_spec;

    fn run_on(id: CheckId, spec: &str) -> CheckResult {
        let spec = parse_group_spec(spec).unwrap();
        let g = make_group(&spec, DEFAULT_ORDER_CAP).unwrap();
        let a = Analysis::new(&g);
        crate::verify::run_check_finite(id, &spec, &a, &VerifyConfig::default()).unwrap()
    }

    #[test]
    fn unrelated_groups_skip_wreath_separation() {
        assert_eq!(run_on(CheckId::WreathSeparation, "S3").outcome, Outcome::Skipped);
        assert_eq!(run_on(CheckId::WreathSeparation, "wreath(C3,C3)").outcome, Outcome::Skipped);
        assert_eq!(run_on(CheckId::WreathSeparation, "wreath(C2,C2)").outcome, Outcome::Skipped);
    }

    #[test]
    fn peng_on_s3() {
        let r = run_on(CheckId::PengR, "S3");
        assert_eq!(r.outcome, Outcome::Pass);
    }

    #[test]
    fn wreath_separation_on_c2_base() {
        let r = run_on(CheckId::WreathSeparation, "wreath(C2,C2xC2)");
        assert_eq!(r.outcome, Outcome::Pass, "{r:?}");
    }

    #[test]
    fn wreath_separation_fails_for_short_base_elements() {
        // For A = C4 the element a of order 2 gives a*x in L3.
        let r = run_on(CheckId::WreathSeparation, "wreath(C4,C2xC2)");
        assert_eq!(r.outcome, Outcome::Fail);
        let w = r.witness.unwrap();
        assert_eq!(
            w.relation,
            Relation::Membership {
                set: SetName::LeftLevel(3),
                expected: false
            }
        );
        assert!(r.stats.notes.iter().any(|n| n.ends_with("order 4: true")));
    }
}
