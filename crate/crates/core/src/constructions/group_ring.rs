//! Sparse arithmetic in the group ring `ℤ_p G` over an enumerable base group.

use std::collections::BTreeMap;
use std::fmt;

use crate::group::{Element, FiniteGroup};

/// Formal sum `Σ c_g · g` with coefficients in `0..p`. Zero coefficients are
/// never stored, so structural equality is ring equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    coeffs: BTreeMap<Element, u32>,
}

impl GroupRingElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, g: Element) -> u32 {
        self.coeffs.get(&g).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Element, u32)> + '_ {
        self.coeffs.iter().map(|(&g, &c)| (g, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }
}

/// Arithmetic context for `ℤ_p G`.
#[derive(Clone, Copy)]
pub struct GroupRing<'g> {
    p: u32,
    base: &'g FiniteGroup,
}

impl<'g> GroupRing<'g> {
    pub fn new(p: u32, base: &'g FiniteGroup) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        GroupRing { p, base }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn base(&self) -> &'g FiniteGroup {
        self.base
    }

    pub fn zero(&self) -> GroupRingElement {
        GroupRingElement::default()
    }

    pub fn one(&self) -> GroupRingElement {
        self.from_element(Element::IDENTITY)
    }

    pub fn from_element(&self, g: Element) -> GroupRingElement {
        self.from_terms([(g, 1)])
    }

    /// Builds an element from `(g, c)` terms, accumulating repeated `g`.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Element, u32)>) -> GroupRingElement {
        let mut r = self.zero();
        for (g, c) in terms {
            self.add_term(&mut r, g, c);
        }
        r
    }

    /// `g − 1`.
    pub fn augmentation_generator(&self, g: Element) -> GroupRingElement {
        self.from_terms([(g, 1), (Element::IDENTITY, self.p - 1)])
    }

    fn add_term(&self, r: &mut GroupRingElement, g: Element, c: u32) {
        let c = c % self.p;
        if c == 0 {
            return;
        }
        let slot = r.coeffs.entry(g).or_insert(0);
        *slot = (*slot + c) % self.p;
        if *slot == 0 {
            r.coeffs.remove(&g);
        }
    }

    pub fn add(&self, a: &GroupRingElement, b: &GroupRingElement) -> GroupRingElement {
        let mut r = a.clone();
        for (g, c) in b.terms() {
            self.add_term(&mut r, g, c);
        }
        r
    }

    pub fn neg(&self, a: &GroupRingElement) -> GroupRingElement {
        self.from_terms(a.terms().map(|(g, c)| (g, self.p - c)))
    }

    pub fn sub(&self, a: &GroupRingElement, b: &GroupRingElement) -> GroupRingElement {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &GroupRingElement, k: u32) -> GroupRingElement {
        self.from_terms(a.terms().map(|(g, c)| (g, (c as u64 * k as u64 % self.p as u64) as u32)))
    }

    pub fn mul(&self, a: &GroupRingElement, b: &GroupRingElement) -> GroupRingElement {
        let mut r = self.zero();
        for (g, c) in a.terms() {
            for (h, d) in b.terms() {
                let cd = (c as u64 * d as u64 % self.p as u64) as u32;
                self.add_term(&mut r, self.base.mul(g, h), cd);
            }
        }
        r
    }

    /// `r · h` for a group element `h` (right translation of the support).
    pub fn act_right(&self, a: &GroupRingElement, h: Element) -> GroupRingElement {
        GroupRingElement {
            coeffs: a.terms().map(|(g, c)| (self.base.mul(g, h), c)).collect(),
        }
    }

    pub fn pow(&self, a: &GroupRingElement, k: u32) -> GroupRingElement {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn display<'a>(&'a self, a: &'a GroupRingElement) -> impl fmt::Display + 'a {
        DisplayRing { ring: self, elem: a }
    }
}

struct DisplayRing<'a> {
    ring: &'a GroupRing<'a>,
    elem: &'a GroupRingElement,
}

impl fmt::Display for DisplayRing<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (g, c) in self.elem.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c != 1 {
                write!(f, "{c}·")?;
            }
            write!(f, "{}", self.ring.base.label(g))?;
        }
        Ok(())
    }
}
