use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};

/// A subgroup stored as a sorted element list plus a membership mask.
/// Equality is element-set equality.
#[derive(Clone)]
pub struct Subgroup<'g> {
    group: &'g FiniteGroup,
    elements: Vec<Element>,
    members: FixedBitSet,
    generators: Vec<Element>,
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup<'_> {}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.elements.len())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Incremental closure: the element list stays closed under right
/// multiplication by every generator added so far.
pub(crate) struct ClosureBuilder<'g> {
    group: &'g FiniteGroup,
    list: Vec<Element>,
    members: FixedBitSet,
    gens: Vec<Element>,
}

impl<'g> ClosureBuilder<'g> {
    pub(crate) fn new(group: &'g FiniteGroup) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        members.insert(0);
        ClosureBuilder {
            group,
            list: vec![Element::IDENTITY],
            members,
            gens: Vec::new(),
        }
    }

    #[inline]
    pub(crate) fn contains(&self, e: Element) -> bool {
        self.members.contains(e.index())
    }

    pub(crate) fn generators(&self) -> &[Element] {
        &self.gens
    }

    /// Adds `c` as a generator. Returns false if it was already inside.
    pub(crate) fn add(&mut self, c: Element) -> bool {
        if self.contains(c) {
            return false;
        }
        self.gens.push(c);
        let old = self.list.len();
        for i in 0..old {
            let p = self.group.mul(self.list[i], c);
            if !self.members.put(p.index()) {
                self.list.push(p);
            }
        }
        let mut k = old;
        while k < self.list.len() {
            let e = self.list[k];
            for gi in 0..self.gens.len() {
                let p = self.group.mul(e, self.gens[gi]);
                if !self.members.put(p.index()) {
                    self.list.push(p);
                }
            }
            k += 1;
        }
        true
    }

    pub(crate) fn finish(self) -> Subgroup<'g> {
        let mut elements = self.list;
        elements.sort_unstable();
        Subgroup {
            group: self.group,
            elements,
            members: self.members,
            generators: self.gens,
        }
    }
}

impl<'g> Subgroup<'g> {
    pub fn trivial(group: &'g FiniteGroup) -> Self {
        ClosureBuilder::new(group).finish()
    }

    pub fn whole(group: &'g FiniteGroup) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        members.insert_range(..);
        Subgroup {
            group,
            elements: group.elements().collect(),
            members,
            generators: group.generators().to_vec(),
        }
    }

    /// Subgroup generated by `gens`, assumed to be valid elements.
    pub fn generated_by(group: &'g FiniteGroup, gens: impl IntoIterator<Item = Element>) -> Self {
        let mut b = ClosureBuilder::new(group);
        for g in gens {
            b.add(g);
        }
        b.finish()
    }

    /// Wraps an element set the caller knows to be a subgroup, checking that
    /// claim. The witness generators are chosen greedily.
    pub fn from_elements(group: &'g FiniteGroup, elements: &[Element]) -> Result<Self> {
        let h = Self::generated_by(group, elements.iter().copied());
        let mut sorted = elements.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if h.elements != sorted {
            return Err(Error::InvariantViolation(format!(
                "element set of size {} is not a subgroup (closure has size {})",
                sorted.len(),
                h.order()
            )));
        }
        Ok(h)
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    #[inline]
    pub fn contains(&self, e: Element) -> bool {
        self.members.contains(e.index())
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.group.order()
    }

    pub fn is_subset_of(&self, other: &Subgroup<'_>) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Normal in the whole group.
    pub fn is_normal(&self) -> bool {
        self.is_normalized_by(self.group.generators())
    }

    /// `H^g ⊆ H` for each `g` in `by`; for finite groups this is equality.
    pub fn is_normalized_by(&self, by: &[Element]) -> bool {
        by.iter().all(|&g| {
            self.generators
                .iter()
                .all(|&h| self.contains(self.group.conj(h, g)))
        })
    }

    pub fn is_abelian(&self) -> bool {
        let gs = &self.generators;
        gs.iter()
            .all(|&a| gs.iter().all(|&b| self.group.mul(a, b) == self.group.mul(b, a)))
    }
}

/// Smallest subgroup containing `set`.
pub fn closure<'g>(group: &'g FiniteGroup, set: &[Element]) -> Result<Subgroup<'g>> {
    if let Some(bad) = set.iter().find(|e| !group.contains(**e)) {
        return Err(Error::Usage(format!(
            "element index {} out of range for group of order {}",
            bad.0,
            group.order()
        )));
    }
    Ok(Subgroup::generated_by(group, set.iter().copied()))
}

/// The group of cosets of a normal subgroup. The coset of the identity gets
/// index 0; other cosets are numbered by their least element.
pub fn quotient(group: &FiniteGroup, normal: &Subgroup<'_>) -> Result<FiniteGroup> {
    if !normal.is_normal() {
        return Err(Error::Precondition("quotient by a subgroup that is not normal".into()));
    }
    let n = group.order();
    let mut coset = vec![u32::MAX; n];
    let mut reps = Vec::new();
    for g in group.elements() {
        if coset[g.index()] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(g);
        for &h in normal.elements() {
            coset[group.mul(h, g).index()] = id;
        }
    }
    let table: Vec<Vec<u32>> = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| coset[group.mul(a, b).index()]).collect())
        .collect();
    let mut gens: Vec<u32> = group
        .generators()
        .iter()
        .map(|g| coset[g.index()])
        .filter(|&c| c != 0)
        .collect();
    gens.dedup();
    let gens = if reps.len() == 1 { None } else { Some(gens) };
    FiniteGroup::from_table(table, gens)
}
