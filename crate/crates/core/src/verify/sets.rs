//! Named element sets used by checks and witness replay.

use std::fmt;

use serde::Serialize;

use crate::analysis::Analysis;
use crate::error::Result;
use crate::group::Element;
use crate::structure::{nilpotency_class, normal_closure};
use crate::subgroup::Subgroup;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "set", content = "n", rename_all = "snake_case")]
pub enum SetName {
    Left,
    LeftBounded,
    LeftLevel(usize),
    Right,
    RightBounded,
    RightLevel(usize),
    /// `{a : a⁻¹ ∈ L}`
    InverseLeft,
    InverseLeftBounded,
    InverseLeftLevel(usize),
    Fitting,
    Baer,
    Gruenberg,
    HirschPlotkin,
    Hypercenter,
    ZetaOmega,
    /// `{a : a² ∈ ζᵢ}`
    SquareInZeta(usize),
    Rho,
    RhoBar,
    /// `{a : ⟨a⟩ᴳ abelian}`
    AbelianNormalClosure,
    /// `{a : ⟨a⟩ᴳ nilpotent of class ≤ c}`
    NormalClosureClassAtMost(usize),
    /// `{a : ⟨a, aʸ⟩ nilpotent of class ≤ 2 for every y}`
    ConjugatePairClassTwo,
    /// `{a : every power of a lies in Lₙ}`
    PowersInLeftLevel(usize),
    /// `{a : ⟨a⟩ᴳ ⊆ Rₙ}`
    NormalClosureInRightLevel(usize),
}

impl fmt::Display for SetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetName::Left => write!(f, "L"),
            SetName::LeftBounded => write!(f, "Lbar"),
            SetName::LeftLevel(n) => write!(f, "L{n}"),
            SetName::Right => write!(f, "R"),
            SetName::RightBounded => write!(f, "Rbar"),
            SetName::RightLevel(n) => write!(f, "R{n}"),
            SetName::InverseLeft => write!(f, "L^-1"),
            SetName::InverseLeftBounded => write!(f, "Lbar^-1"),
            SetName::InverseLeftLevel(n) => write!(f, "L{n}^-1"),
            SetName::Fitting => write!(f, "Fitt"),
            SetName::Baer => write!(f, "B"),
            SetName::Gruenberg => write!(f, "Gr"),
            SetName::HirschPlotkin => write!(f, "HP"),
            SetName::Hypercenter => write!(f, "hypercenter"),
            SetName::ZetaOmega => write!(f, "zeta_omega"),
            SetName::SquareInZeta(i) => write!(f, "sqrt(zeta_{i})"),
            SetName::Rho => write!(f, "rho"),
            SetName::RhoBar => write!(f, "rho_bar"),
            SetName::AbelianNormalClosure => write!(f, "abelian normal closure"),
            SetName::NormalClosureClassAtMost(c) => write!(f, "normal closure of class <= {c}"),
            SetName::ConjugatePairClassTwo => write!(f, "<a, a^y> of class <= 2"),
            SetName::PowersInLeftLevel(n) => write!(f, "powers in L{n}"),
            SetName::NormalClosureInRightLevel(n) => write!(f, "normal closure in R{n}"),
        }
    }
}

fn mask(n: usize, members: impl IntoIterator<Item = Element>) -> Vec<bool> {
    let mut m = vec![false; n];
    for e in members {
        m[e.index()] = true;
    }
    m
}

/// Class of `⟨u, v⟩` is at most 2 exactly when `[u, v]` commutes with both
/// generators.
pub(crate) fn two_generated_class_at_most_two(analysis: &Analysis<'_>, u: Element, v: Element) -> bool {
    let g = analysis.group();
    let c = g.comm(u, v);
    g.comm(c, u).is_identity() && g.comm(c, v).is_identity()
}

/// Membership mask of a named set over all elements.
pub fn set_members(analysis: &Analysis<'_>, name: SetName) -> Result<Vec<bool>> {
    let g = analysis.group();
    let n = g.order();
    let table = analysis.table()?;
    let by_element = |f: &dyn Fn(Element) -> bool| -> Vec<bool> { g.elements().map(f).collect() };
    Ok(match name {
        SetName::Left => by_element(&|a| table.left(a).is_engel),
        SetName::LeftBounded => by_element(&|a| table.left(a).length.is_some()),
        SetName::LeftLevel(k) => by_element(&|a| table.left(a).length.is_some_and(|l| l <= k)),
        SetName::Right => by_element(&|a| table.right(a).is_engel),
        SetName::RightBounded => by_element(&|a| table.right(a).length.is_some()),
        SetName::RightLevel(k) => by_element(&|a| table.right(a).length.is_some_and(|l| l <= k)),
        SetName::InverseLeft => by_element(&|a| table.left(g.inv(a)).is_engel),
        SetName::InverseLeftBounded => by_element(&|a| table.left(g.inv(a)).length.is_some()),
        SetName::InverseLeftLevel(k) => by_element(&|a| table.left(g.inv(a)).length.is_some_and(|l| l <= k)),
        SetName::Fitting => mask(n, analysis.radicals()?.fitting.elements().iter().copied()),
        SetName::Baer => mask(n, analysis.radicals()?.baer.elements().iter().copied()),
        SetName::Gruenberg => mask(n, analysis.radicals()?.gruenberg.elements().iter().copied()),
        SetName::HirschPlotkin => mask(n, analysis.radicals()?.hirsch_plotkin.elements().iter().copied()),
        SetName::Hypercenter | SetName::ZetaOmega => mask(n, analysis.hypercenter()?.elements().iter().copied()),
        SetName::SquareInZeta(i) => {
            let z = analysis.zeta(i)?;
            by_element(&|a| z.contains(g.mul(a, a)))
        }
        SetName::Rho => mask(n, analysis.engel()?.rho.iter().copied()),
        SetName::RhoBar => mask(n, analysis.engel()?.rho_bar.iter().copied()),
        SetName::AbelianNormalClosure => by_element(&|a| normal_closure(g, &[a]).is_abelian()),
        SetName::NormalClosureClassAtMost(c) => {
            by_element(&|a| nilpotency_class(&normal_closure(g, &[a])).is_some_and(|k| k <= c))
        }
        SetName::ConjugatePairClassTwo => {
            by_element(&|a| g.elements().all(|y| two_generated_class_at_most_two(analysis, a, g.conj(a, y))))
        }
        SetName::PowersInLeftLevel(k) => by_element(&|a| {
            Subgroup::generated_by(g, [a])
                .elements()
                .iter()
                .all(|&p| table.left(p).length.is_some_and(|l| l <= k))
        }),
        SetName::NormalClosureInRightLevel(k) => by_element(&|a| {
            normal_closure(g, &[a])
                .elements()
                .iter()
                .all(|&p| table.right(p).length.is_some_and(|l| l <= k))
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{dihedral, symmetric, wreath};
    use crate::group::DEFAULT_ORDER_CAP as CAP;
    use crate::structure::nilpotency_class;

    #[test]
    fn class_two_shortcut_agrees_with_lower_central_series() {
        let c2 = crate::constructions::cyclic(2, CAP).unwrap();
        let v4 = crate::constructions::direct_product(&[c2.clone(), c2.clone()], CAP).unwrap();
        for g in [symmetric(4, CAP).unwrap(), dihedral(16, CAP).unwrap(), wreath(&c2, &v4, CAP).unwrap()] {
            let a = Analysis::new(&g);
            for u in g.elements() {
                for v in g.elements() {
                    let h = Subgroup::generated_by(&g, [u, v]);
                    let by_series = nilpotency_class(&h).is_some_and(|c| c <= 2);
                    assert_eq!(two_generated_class_at_most_two(&a, u, v), by_series);
                }
            }
        }
    }
}
