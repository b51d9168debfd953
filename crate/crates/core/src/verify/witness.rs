//! Failure witnesses and their replay through public operations.

use serde::Serialize;

use crate::analysis::Analysis;
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::structure::{nilpotency_class, normal_closure_in, normalizer};
use crate::subgroup::Subgroup;
use crate::verify::sets::{set_members, SetName};

/// The relation a witness violates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Relation {
    /// `(x, g)`: `[x, ₙ₊₁ g] ≠ [g⁻ˣ, ₙ g]ᵍ`.
    HeinekenIdentity { n: usize },
    /// `(a)`: `a ∈ from` but `a ∉ to`.
    Inclusion { from: SetName, to: SetName },
    /// `(a)`: membership of `a` in `set` differs from `expected`.
    Membership { set: SetName, expected: bool },
    /// `(g, x)`: `x² = 1` but `[g, ₙ x] ≠ [g, x]^((−2)ⁿ⁻¹)`.
    InvolutionFormula { n: usize },
    /// `(a, b)`: `ab ∉ set` although `a, b ∈ set`.
    NotClosedUnderProduct { set: SetName },
    /// `(a)`: `a⁻¹ ∉ set`.
    NotClosedUnderInverse { set: SetName },
    /// `(a, g)`: `aᵍ ∉ set`.
    NotClosedUnderConjugation { set: SetName },
    /// `(a, x, y, z)`: the numbered Levi–Kappe identity fails.
    LeviKappe { part: u8 },
    /// `(a, b)`: `⟨a, b⟩` is not nilpotent of class at most `bound`.
    GeneratedClass { bound: usize },
    /// `(a, b)`: `a ∈ first`, `b ∈ second`, and the product (`ba` when
    /// `reversed`) is not in `target`.
    Product {
        first: SetName,
        second: SetName,
        target: SetName,
        reversed: bool,
    },
    /// `(x, y)`: `[x, ₙ y] = 1` but the three subgroups differ.
    LemmaXY { n: usize },
    /// `(a, b)`: `H = ⟨a, b⟩` is not normal and no element of `N(H) \ H`
    /// is conjugate to an element of `H ∩ L`.
    PlotkinNormalizer,
    /// No elements: `⟨Lₙ⟩ = G` with `Lₙ ≠ G` and `Lₙ` not a subgroup fails.
    LevelGeneration { n: usize },
    /// `(a)`: the search predicate holds at level `n`.
    SearchHit { predicate: String, n: usize },
    /// Black-box failure, reproduced by rerunning with the same seed.
    BlackBox { part: String, sample: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub relation: Relation,
    /// Element labels in the order described by the relation.
    pub elements: Vec<String>,
}

impl Witness {
    pub fn new(group: &FiniteGroup, relation: Relation, elements: &[Element]) -> Self {
        Witness {
            relation,
            elements: elements.iter().map(|&e| group.label(e).to_string()).collect(),
        }
    }
}

pub(crate) fn heineken_identity_holds(g: &FiniteGroup, x: Element, y: Element, n: usize) -> bool {
    let lhs = g.engel(x, y, n + 1);
    let rhs = g.conj(g.engel(g.conj(g.inv(y), x), y, n), y);
    lhs == rhs
}

pub(crate) fn involution_formula_holds(g: &FiniteGroup, h: Element, x: Element, n: usize) -> bool {
    g.engel(h, x, n) == g.pow(g.comm(h, x), (-2i64).pow(n as u32 - 1))
}

/// `[a, b, c, ...]` left-normed.
fn lc(g: &FiniteGroup, xs: &[Element]) -> Element {
    xs[1..].iter().fold(xs[0], |acc, &x| g.comm(acc, x))
}

pub(crate) fn levi_kappe_holds(g: &FiniteGroup, part: u8, a: Element, x: Element, y: Element, z: Element) -> bool {
    match part {
        3 => lc(g, &[a, x, y]) == g.inv(lc(g, &[a, y, x])),
        4 => g.comm(a, g.comm(x, y)) == g.pow(lc(g, &[a, x, y]), 2),
        5 => {
            let a2 = g.mul(a, a);
            lc(g, &[a2, x, y, z]).is_identity() && g.pow(lc(g, &[a, x, y, z]), 2).is_identity()
        }
        6 => lc(g, &[a, g.comm(x, y), z]).is_identity(),
        _ => true,
    }
}

pub(crate) fn lemma_xy_holds(g: &FiniteGroup, x: Element, y: Element, n: usize) -> bool {
    let conj_closure = normal_closure_in(g, &[y], &[x]);
    let mut comms = vec![x];
    let mut conjs = vec![x];
    for _ in 1..n {
        comms.push(g.comm(*comms.last().unwrap(), y));
        conjs.push(g.conj(*conjs.last().unwrap(), y));
    }
    let by_comms = Subgroup::generated_by(g, comms);
    let by_conjs = Subgroup::generated_by(g, conjs);
    conj_closure == by_comms && by_comms == by_conjs
}

/// Plotkin's normalizer property for `H = ⟨a, b⟩`, given the classes of
/// all elements and the membership mask of `L`.
pub(crate) fn plotkin_holds(g: &FiniteGroup, a: Element, b: Element, class: &[u32], left: &[bool]) -> bool {
    let h = Subgroup::generated_by(g, [a, b]);
    if h.is_normal() {
        return true;
    }
    let mut wanted = vec![false; class.iter().map(|&c| c as usize + 1).max().unwrap_or(0)];
    for &e in h.elements() {
        if left[e.index()] {
            wanted[class[e.index()] as usize] = true;
        }
    }
    normalizer(g, &h)
        .elements()
        .iter()
        .any(|&x| !h.contains(x) && wanted[class[x.index()] as usize])
}

pub(crate) fn level_generation_holds(analysis: &Analysis<'_>, n: usize) -> Result<bool> {
    let g = analysis.group();
    let mask = set_members(analysis, SetName::LeftLevel(n))?;
    let members: Vec<Element> = g.elements().filter(|a| mask[a.index()]).collect();
    let generated = Subgroup::generated_by(g, members.iter().copied());
    Ok(generated.is_whole() && members.len() < g.order() && generated.order() != members.len())
}

pub(crate) fn search_predicate_holds(analysis: &Analysis<'_>, predicate: &str, a: Element, n: usize) -> Result<bool> {
    let g = analysis.group();
    let ai = g.inv(a);
    Ok(match predicate {
        "macdonald_r3" => analysis.in_right(a, 3)? && !analysis.in_right(ai, 3)?,
        "macdonald_rn_ln" => analysis.in_right(a, n)? && !analysis.in_left(a, n)? && !analysis.in_left(ai, n)?,
        other => return Err(Error::Usage(format!("unknown search predicate {other:?}"))),
    })
}

/// Re-evaluates the violated relation on the witness elements. Returns true
/// when the violation reproduces.
pub fn replay(analysis: &Analysis<'_>, witness: &Witness) -> Result<bool> {
    let g = analysis.group();
    let els = witness
        .elements
        .iter()
        .map(|l| {
            g.element_by_label(l)
                .ok_or_else(|| Error::Usage(format!("unknown element label {l:?}")))
        })
        .collect::<Result<Vec<Element>>>()?;
    let need = |k: usize| -> Result<()> {
        if els.len() == k {
            Ok(())
        } else {
            Err(Error::Usage(format!("witness needs {k} elements, got {}", els.len())))
        }
    };
    let member = |set: SetName, e: Element| -> Result<bool> { Ok(set_members(analysis, set)?[e.index()]) };
    Ok(match &witness.relation {
        Relation::HeinekenIdentity { n } => {
            need(2)?;
            !heineken_identity_holds(g, els[0], els[1], *n)
        }
        Relation::Inclusion { from, to } => {
            need(1)?;
            member(*from, els[0])? && !member(*to, els[0])?
        }
        Relation::Membership { set, expected } => {
            need(1)?;
            member(*set, els[0])? != *expected
        }
        Relation::InvolutionFormula { n } => {
            need(2)?;
            g.mul(els[1], els[1]).is_identity() && !involution_formula_holds(g, els[0], els[1], *n)
        }
        Relation::NotClosedUnderProduct { set } => {
            need(2)?;
            member(*set, els[0])? && member(*set, els[1])? && !member(*set, g.mul(els[0], els[1]))?
        }
        Relation::NotClosedUnderInverse { set } => {
            need(1)?;
            member(*set, els[0])? && !member(*set, g.inv(els[0]))?
        }
        Relation::NotClosedUnderConjugation { set } => {
            need(2)?;
            member(*set, els[0])? && !member(*set, g.conj(els[0], els[1]))?
        }
        Relation::LeviKappe { part } => {
            need(4)?;
            analysis.in_right(els[0], 2)? && !levi_kappe_holds(g, *part, els[0], els[1], els[2], els[3])
        }
        Relation::GeneratedClass { bound } => {
            need(2)?;
            !nilpotency_class(&Subgroup::generated_by(g, [els[0], els[1]])).is_some_and(|c| c <= *bound)
        }
        Relation::Product {
            first,
            second,
            target,
            reversed,
        } => {
            need(2)?;
            let p = if *reversed { g.mul(els[1], els[0]) } else { g.mul(els[0], els[1]) };
            member(*first, els[0])? && member(*second, els[1])? && !member(*target, p)?
        }
        Relation::LemmaXY { n } => {
            need(2)?;
            g.engel(els[0], els[1], *n).is_identity() && !lemma_xy_holds(g, els[0], els[1], *n)
        }
        Relation::PlotkinNormalizer => {
            need(2)?;
            let class = crate::structure::conjugacy_classes(g);
            let left = set_members(analysis, SetName::Left)?;
            !plotkin_holds(g, els[0], els[1], &class, &left)
        }
        Relation::LevelGeneration { n } => {
            need(0)?;
            !level_generation_holds(analysis, *n)?
        }
        Relation::SearchHit { predicate, n } => {
            need(1)?;
            search_predicate_holds(analysis, predicate, els[0], *n)?
        }
        Relation::BlackBox { .. } => {
            return Err(Error::Capability(
                "black-box witnesses are replayed by rerunning the check with its seed".into(),
            ))
        }
    })
}
