//! Black-box groups of lower-triangular 2×2 matrices over a group ring.
//!
//! An element `(g, r)` stands for the matrix `((g, 0), (r, 1))` with `g` in a
//! free nilpotent class-2 base group `G` and `r ∈ ℤ_p G`. Multiplication is
//! `(g, r)(h, s) = (gh, r·h + s)`. The group is never enumerated.

use std::fmt;

use rand::Rng;

use crate::constructions::fnil::{free_nil_c2, FreeNilVariant};
use crate::constructions::group_ring::{GroupRing, GroupRingElement};
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::ops::GroupOps;

/// Which base group and coefficient ring the matrices use.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GuptaLevinVariant {
    /// Base of exponent `p`, coefficients mod `p`, for an odd prime `p`.
    OddPrime(u32),
    /// Base of exponent 4, coefficients mod 2.
    Exponent4,
}

impl GuptaLevinVariant {
    pub fn from_prime(p: u32) -> Self {
        if p == 2 {
            GuptaLevinVariant::Exponent4
        } else {
            GuptaLevinVariant::OddPrime(p)
        }
    }

    pub fn modulus(self) -> u32 {
        match self {
            GuptaLevinVariant::OddPrime(p) => p,
            GuptaLevinVariant::Exponent4 => 2,
        }
    }

    /// Exponent of the base group; `(g − 1)` raised to it vanishes.
    pub fn base_exponent(self) -> u32 {
        match self {
            GuptaLevinVariant::OddPrime(p) => p,
            GuptaLevinVariant::Exponent4 => 4,
        }
    }

    /// Engel degree of the matrix group: two commutators land in the abelian
    /// kernel, then `base_exponent` more kill it.
    pub fn engel_degree(self) -> usize {
        self.base_exponent() as usize + 2
    }

    /// Exponent of the matrix group.
    pub fn group_exponent(self) -> u64 {
        match self {
            GuptaLevinVariant::OddPrime(p) => (p * p) as u64,
            GuptaLevinVariant::Exponent4 => 8,
        }
    }

    fn base_variant(self) -> FreeNilVariant {
        match self {
            GuptaLevinVariant::OddPrime(p) => FreeNilVariant::OddPrime(p),
            GuptaLevinVariant::Exponent4 => FreeNilVariant::Exponent4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GuptaLevinElement {
    pub g: Element,
    pub r: GroupRingElement,
}

pub struct GuptaLevinGroup {
    variant: GuptaLevinVariant,
    rank: usize,
    base: FiniteGroup,
}

impl GuptaLevinGroup {
    pub fn new(variant: GuptaLevinVariant, rank: usize, cap: usize) -> Result<Self> {
        let base = free_nil_c2(variant.base_variant(), rank, cap)?;
        Ok(GuptaLevinGroup { variant, rank, base })
    }

    pub fn variant(&self) -> GuptaLevinVariant {
        self.variant
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn ring(&self) -> GroupRing<'_> {
        GroupRing::new(self.variant.modulus(), &self.base)
    }

    /// Enumeration is not available for black-box groups.
    pub fn elements(&self) -> Result<Vec<GuptaLevinElement>> {
        Err(Error::Capability(
            "matrix group over a group ring cannot be enumerated".into(),
        ))
    }

    pub fn element(&self, g: Element, r: GroupRingElement) -> GuptaLevinElement {
        GuptaLevinElement { g, r }
    }

    /// `Xᵢ = ((xᵢ, 0), (1, 1))` for the `i`-th free generator `xᵢ`.
    pub fn x(&self, i: usize) -> GuptaLevinElement {
        GuptaLevinElement {
            g: self.base.generators()[i],
            r: self.ring().one(),
        }
    }

    /// `Y = ((1, 0), (1, 1))`.
    pub fn y(&self) -> GuptaLevinElement {
        GuptaLevinElement {
            g: Element::IDENTITY,
            r: self.ring().one(),
        }
    }

    /// Uniform base element with a group-ring part of at most `max_terms`
    /// random terms.
    pub fn random_element<R: Rng>(&self, rng: &mut R, max_terms: usize) -> GuptaLevinElement {
        let g = Element(rng.gen_range(0..self.base.order() as u32));
        GuptaLevinElement {
            g,
            r: self.random_ring_element(rng, max_terms),
        }
    }

    /// Random element of the abelian kernel `{(1, r)}`.
    pub fn random_kernel_element<R: Rng>(&self, rng: &mut R, max_terms: usize) -> GuptaLevinElement {
        GuptaLevinElement {
            g: Element::IDENTITY,
            r: self.random_ring_element(rng, max_terms),
        }
    }

    pub fn random_ring_element<R: Rng>(&self, rng: &mut R, max_terms: usize) -> GroupRingElement {
        let ring = self.ring();
        let terms = rng.gen_range(1..=max_terms.max(1));
        let n = self.base.order() as u32;
        let p = ring.modulus();
        ring.from_terms((0..terms).map(|_| (Element(rng.gen_range(0..n)), rng.gen_range(1..p))))
    }

    pub fn display<'a>(&'a self, e: &'a GuptaLevinElement) -> impl fmt::Display + 'a {
        DisplayElement { group: self, elem: e }
    }
}

struct DisplayElement<'a> {
    group: &'a GuptaLevinGroup,
    elem: &'a GuptaLevinElement,
}

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = self.group.ring();
        let r = ring.display(&self.elem.r).to_string();
        write!(f, "({}; {})", self.group.base.label(self.elem.g), r)
    }
}

impl GroupOps for GuptaLevinGroup {
    type Elem = GuptaLevinElement;

    fn identity(&self) -> GuptaLevinElement {
        GuptaLevinElement {
            g: Element::IDENTITY,
            r: GroupRingElement::default(),
        }
    }

    fn op(&self, a: &GuptaLevinElement, b: &GuptaLevinElement) -> GuptaLevinElement {
        let ring = self.ring();
        GuptaLevinElement {
            g: self.base.mul(a.g, b.g),
            r: ring.add(&ring.act_right(&a.r, b.g), &b.r),
        }
    }

    fn inverse(&self, a: &GuptaLevinElement) -> GuptaLevinElement {
        let ring = self.ring();
        let gi = self.base.inv(a.g);
        GuptaLevinElement {
            g: gi,
            r: ring.neg(&ring.act_right(&a.r, gi)),
        }
    }

    fn is_member(&self, a: &GuptaLevinElement) -> bool {
        let p = self.variant.modulus();
        self.base.contains(a.g) && a.r.terms().all(|(g, c)| self.base.contains(g) && c > 0 && c < p)
    }

    fn is_identity(&self, a: &GuptaLevinElement) -> bool {
        a.g.is_identity() && a.r.is_zero()
    }
}

/// Plain 2×2 matrices over the group ring, used as an independent oracle for
/// the pair multiplication law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix(pub [[GroupRingElement; 2]; 2]);

impl RingMatrix {
    pub fn from_pair(ring: &GroupRing<'_>, e: &GuptaLevinElement) -> Self {
        RingMatrix([[ring.from_element(e.g), ring.zero()], [e.r.clone(), ring.one()]])
    }

    pub fn mul(&self, ring: &GroupRing<'_>, other: &RingMatrix) -> RingMatrix {
        let entry = |i: usize, j: usize| {
            ring.add(
                &ring.mul(&self.0[i][0], &other.0[0][j]),
                &ring.mul(&self.0[i][1], &other.0[1][j]),
            )
        };
        RingMatrix([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
    }
}
