//! Normal closures, subnormality, central and derived series, and the four
//! nilpotent radicals of a finite group.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::subgroup::{ClosureBuilder, Subgroup};

/// Smallest subgroup containing `seeds` that is normalized by every element
/// of `ambient`.
pub fn normal_closure_in<'g>(group: &'g FiniteGroup, ambient: &[Element], seeds: &[Element]) -> Subgroup<'g> {
    let mut b = ClosureBuilder::new(group);
    for &s in seeds {
        b.add(s);
    }
    let mut i = 0;
    while i < b.generators().len() {
        let h = b.generators()[i];
        for &g in ambient {
            b.add(group.conj(h, g));
        }
        i += 1;
    }
    b.finish()
}

/// Normal closure of `set` in the whole group.
pub fn normal_closure<'g>(group: &'g FiniteGroup, set: &[Element]) -> Subgroup<'g> {
    normal_closure_in(group, group.generators(), set)
}

/// Subnormal defect of `h` inside `ambient`: the least `i` such that the
/// chain `K₀ = ambient`, `Kᵢ₊₁ = hᴷⁱ` reaches `h`, or `None` if the chain
/// stalls above it. `h` must be a subgroup of `ambient`.
pub fn subnormal_defect_in(ambient: &Subgroup<'_>, h: &Subgroup<'_>) -> Option<usize> {
    let group = ambient.group();
    let mut k = ambient.clone();
    let mut i = 0;
    loop {
        if k == *h {
            return Some(i);
        }
        let next = normal_closure_in(group, k.generators(), h.generators());
        if next == k {
            return None;
        }
        k = next;
        i += 1;
    }
}

pub fn subnormal_defect(group: &FiniteGroup, h: &Subgroup<'_>) -> Option<usize> {
    subnormal_defect_in(&Subgroup::whole(group), h)
}

/// `{g : Hᵍ = H}`.
pub fn normalizer<'g>(group: &'g FiniteGroup, h: &Subgroup<'_>) -> Subgroup<'g> {
    let members: Vec<Element> = group
        .elements()
        .filter(|&g| h.generators().iter().all(|&x| h.contains(group.conj(x, g))))
        .collect();
    Subgroup::generated_by(group, members)
}

pub fn center<'g>(group: &'g FiniteGroup) -> Subgroup<'g> {
    let gens = group.generators();
    Subgroup::generated_by(
        group,
        group
            .elements()
            .filter(|&z| gens.iter().all(|&g| group.mul(z, g) == group.mul(g, z))),
    )
}

/// Conjugacy class index of every element, classes numbered by their least
/// element.
pub fn conjugacy_classes(group: &FiniteGroup) -> Vec<u32> {
    let n = group.order();
    let mut class = vec![u32::MAX; n];
    let mut next = 0;
    for e in group.elements() {
        if class[e.index()] != u32::MAX {
            continue;
        }
        class[e.index()] = next;
        let mut orbit = vec![e];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            for &g in group.generators() {
                let y = group.conj(x, g);
                if class[y.index()] == u32::MAX {
                    class[y.index()] = next;
                    orbit.push(y);
                }
            }
            head += 1;
        }
        next += 1;
    }
    class
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    UpperCentral,
    LowerCentral,
    Derived,
}

/// A central or derived series, stored without repeated terms. The series
/// is always run until it stabilizes, so `stabilized` is true for every
/// finite group.
#[derive(Clone, Debug)]
pub struct SeriesResult<'g> {
    pub kind: SeriesKind,
    pub terms: Vec<Subgroup<'g>>,
    pub stabilized: bool,
}

impl<'g> SeriesResult<'g> {
    /// Number of proper steps taken before stabilizing.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn last(&self) -> &Subgroup<'g> {
        self.terms.last().unwrap()
    }

    /// Term `i`, repeating the final term past stabilization.
    pub fn term(&self, i: usize) -> &Subgroup<'g> {
        &self.terms[i.min(self.terms.len() - 1)]
    }
}

/// Lower central series of `k`, computed with `[N, K] = ⟨[n, g]⟩ᴷ` over
/// generators of `N` and `K`.
pub fn lower_central_series<'g>(k: &Subgroup<'g>) -> SeriesResult<'g> {
    let group = k.group();
    let mut terms = vec![k.clone()];
    loop {
        let cur = terms.last().unwrap();
        let comms: Vec<Element> = cur
            .generators()
            .iter()
            .flat_map(|&n| k.generators().iter().map(move |&g| group.comm(n, g)))
            .collect();
        let next = normal_closure_in(group, k.generators(), &comms);
        if next == *cur {
            break;
        }
        terms.push(next);
    }
    SeriesResult {
        kind: SeriesKind::LowerCentral,
        terms,
        stabilized: true,
    }
}

pub fn derived_series<'g>(k: &Subgroup<'g>) -> SeriesResult<'g> {
    let group = k.group();
    let mut terms = vec![k.clone()];
    loop {
        let cur = terms.last().unwrap();
        let gens = cur.generators();
        let comms: Vec<Element> = gens
            .iter()
            .flat_map(|&a| gens.iter().map(move |&b| group.comm(a, b)))
            .collect();
        let next = normal_closure_in(group, gens, &comms);
        if next == *cur {
            break;
        }
        terms.push(next);
    }
    SeriesResult {
        kind: SeriesKind::Derived,
        terms,
        stabilized: true,
    }
}

/// Upper central series of the whole group:
/// `ζᵢ₊₁ = {g : [g, s] ∈ ζᵢ for every generator s}`.
pub fn upper_central_series<'g>(group: &'g FiniteGroup) -> Result<SeriesResult<'g>> {
    let mut terms = vec![Subgroup::trivial(group)];
    loop {
        let cur = terms.last().unwrap();
        let members: Vec<Element> = group
            .elements()
            .filter(|&g| group.generators().iter().all(|&s| cur.contains(group.comm(g, s))))
            .collect();
        let next = Subgroup::from_elements(group, &members)?;
        if next == *cur {
            break;
        }
        terms.push(next);
    }
    Ok(SeriesResult {
        kind: SeriesKind::UpperCentral,
        terms,
        stabilized: true,
    })
}

/// Series of the given kind for the whole group.
pub fn series<'g>(group: &'g FiniteGroup, kind: SeriesKind) -> Result<SeriesResult<'g>> {
    match kind {
        SeriesKind::UpperCentral => upper_central_series(group),
        SeriesKind::LowerCentral => Ok(lower_central_series(&Subgroup::whole(group))),
        SeriesKind::Derived => Ok(derived_series(&Subgroup::whole(group))),
    }
}

/// Nilpotency class of `k` if its lower central series reaches the identity.
pub fn nilpotency_class(k: &Subgroup<'_>) -> Option<usize> {
    let s = lower_central_series(k);
    s.last().is_trivial().then(|| s.length())
}

pub fn is_nilpotent(k: &Subgroup<'_>) -> bool {
    nilpotency_class(k).is_some()
}

pub fn derived_length(k: &Subgroup<'_>) -> Option<usize> {
    let s = derived_series(k);
    s.last().is_trivial().then(|| s.length())
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RadicalKind {
    Fitting,
    Baer,
    Gruenberg,
    HirschPlotkin,
}

#[derive(Clone, Debug)]
pub struct RadicalReport<'g> {
    pub fitting: Subgroup<'g>,
    pub baer: Subgroup<'g>,
    pub gruenberg: Subgroup<'g>,
    pub hirsch_plotkin: Subgroup<'g>,
}

/// Per-class and per-cyclic-subgroup caches shared by the radical
/// computations.
struct ClassData<'g> {
    class: Vec<u32>,
    reps: Vec<Element>,
    normal_closures: Vec<Subgroup<'g>>,
}

impl<'g> ClassData<'g> {
    fn new(group: &'g FiniteGroup) -> Self {
        let class = conjugacy_classes(group);
        let count = class.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        let mut reps = vec![Element::IDENTITY; count];
        for e in group.elements().rev() {
            reps[class[e.index()] as usize] = e;
        }
        let normal_closures = reps.iter().map(|&r| normal_closure(group, &[r])).collect();
        ClassData {
            class,
            reps,
            normal_closures,
        }
    }
}

fn fitting_from_elements<'g>(group: &'g FiniteGroup, data: &ClassData<'g>) -> Result<Subgroup<'g>> {
    let nilpotent: Vec<bool> = data.normal_closures.iter().map(is_nilpotent).collect();
    let members: Vec<Element> = group
        .elements()
        .filter(|e| nilpotent[data.class[e.index()] as usize])
        .collect();
    let f = Subgroup::generated_by(group, members.iter().copied());
    if f.order() != members.len() {
        return Err(Error::InvariantViolation(
            "elements with nilpotent normal closure do not form a subgroup".into(),
        ));
    }
    if !f.is_normal() || !is_nilpotent(&f) {
        return Err(Error::InvariantViolation("Fitting subgroup is not normal nilpotent".into()));
    }
    Ok(f)
}

fn baer_from_subnormality<'g>(group: &'g FiniteGroup) -> Result<Subgroup<'g>> {
    let whole = Subgroup::whole(group);
    let mut cache: HashMap<Vec<Element>, bool> = HashMap::new();
    let mut members = Vec::new();
    for x in group.elements() {
        let cyclic = Subgroup::generated_by(group, [x]);
        let sub = *cache
            .entry(cyclic.elements().to_vec())
            .or_insert_with(|| subnormal_defect_in(&whole, &cyclic).is_some());
        if sub {
            members.push(x);
        }
    }
    Subgroup::from_elements(group, &members)
        .map_err(|_| Error::InvariantViolation("elements with subnormal cyclic subgroup do not form a subgroup".into()))
}

/// Finite groups have no ascending series longer than a subnormal one, so
/// ascendancy of `⟨x⟩` is tested through Baer's criterion: `⟨x, xᵍ⟩` is
/// nilpotent for every conjugate `xᵍ`.
fn gruenberg_from_conjugate_pairs<'g>(group: &'g FiniteGroup, data: &ClassData<'g>) -> Result<Subgroup<'g>> {
    let mut good = vec![true; data.reps.len()];
    for (c, &rep) in data.reps.iter().enumerate() {
        good[c] = group
            .elements()
            .filter(|e| data.class[e.index()] as usize == c)
            .all(|conj| is_nilpotent(&Subgroup::generated_by(group, [rep, conj])));
    }
    let members: Vec<Element> = group
        .elements()
        .filter(|e| good[data.class[e.index()] as usize])
        .collect();
    Subgroup::from_elements(group, &members)
        .map_err(|_| Error::InvariantViolation("Gruenberg candidate set is not a subgroup".into()))
}

/// Join of normal nilpotent subgroups, grown one conjugacy class at a time
/// until no class can be added without losing nilpotency.
fn hirsch_plotkin_from_joins<'g>(group: &'g FiniteGroup, data: &ClassData<'g>) -> Subgroup<'g> {
    let mut current = Subgroup::trivial(group);
    loop {
        let mut grew = false;
        for (c, &rep) in data.reps.iter().enumerate() {
            if current.contains(rep) {
                continue;
            }
            let seeds: Vec<Element> = current
                .generators()
                .iter()
                .chain(data.normal_closures[c].generators())
                .copied()
                .collect();
            let joined = normal_closure(group, &seeds);
            if is_nilpotent(&joined) {
                current = joined;
                grew = true;
            }
        }
        if !grew {
            return current;
        }
    }
}

/// The four radicals, each computed by its own route, without comparing
/// them against each other.
pub fn radical_candidates<'g>(group: &'g FiniteGroup) -> Result<RadicalReport<'g>> {
    let data = ClassData::new(group);
    Ok(RadicalReport {
        fitting: fitting_from_elements(group, &data)?,
        baer: baer_from_subnormality(group)?,
        gruenberg: gruenberg_from_conjugate_pairs(group, &data)?,
        hirsch_plotkin: hirsch_plotkin_from_joins(group, &data),
    })
}

/// Computes all four radicals, each by its own route, and checks the chain
/// `Fitt ⊆ B ⊆ Gr ⊆ HP` together with the finite-group equalities.
pub fn radicals<'g>(group: &'g FiniteGroup) -> Result<RadicalReport<'g>> {
    let report = radical_candidates(group)?;
    let chain = [
        ("Fitt", &report.fitting),
        ("B", &report.baer),
        ("Gr", &report.gruenberg),
        ("HP", &report.hirsch_plotkin),
    ];
    for w in chain.windows(2) {
        if !w[0].1.is_subset_of(w[1].1) {
            return Err(Error::InvariantViolation(format!("{} is not contained in {}", w[0].0, w[1].0)));
        }
    }
    for (name, r) in &chain[1..] {
        if **r != report.fitting {
            return Err(Error::InvariantViolation(format!(
                "finite group with |Fitt| = {} but |{name}| = {}",
                report.fitting.order(),
                r.order()
            )));
        }
    }
    Ok(report)
}

/// A single radical, taken from the cross-checked report.
pub fn radical<'g>(group: &'g FiniteGroup, kind: RadicalKind) -> Result<Subgroup<'g>> {
    let r = radicals(group)?;
    Ok(match kind {
        RadicalKind::Fitting => r.fitting,
        RadicalKind::Baer => r.baer,
        RadicalKind::Gruenberg => r.gruenberg,
        RadicalKind::HirschPlotkin => r.hirsch_plotkin,
    })
}
