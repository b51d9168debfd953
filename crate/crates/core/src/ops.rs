//! Group arithmetic shared by enumerable and black-box groups, and the Engel
//! commutator calculus on top of it.

use std::fmt::Debug;

use crate::error::{Error, Result};

/// Minimal group interface. Enumerable groups implement it over table
/// indices; black-box groups over their own element payloads.
pub trait GroupOps {
    type Elem: Clone + PartialEq + Debug;

    fn identity(&self) -> Self::Elem;
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;
    /// Whether `a` is a well-formed element of this particular group.
    fn is_member(&self, a: &Self::Elem) -> bool;

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }

    /// `a^b = b⁻¹ a b`
    fn conjugate(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.op(&self.op(&self.inverse(b), a), b)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`
    fn commutator(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let ia = self.inverse(a);
        let ib = self.inverse(b);
        self.op(&self.op(&ia, &ib), &self.op(a, b))
    }

    fn power(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        let mut base = if k < 0 { self.inverse(a) } else { a.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.op(&acc, &base);
            }
            base = self.op(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Left-normed commutator `[a₁, a₂, …, aₖ] = [[a₁, …, aₖ₋₁], aₖ]`.
    /// A single entry is returned unchanged.
    fn left_normed(&self, items: &[Self::Elem]) -> Self::Elem {
        let mut it = items.iter();
        let mut acc = match it.next() {
            Some(a) => a.clone(),
            None => return self.identity(),
        };
        for b in it {
            acc = self.commutator(&acc, b);
        }
        acc
    }

    /// `[x, n y]`, with `[x, 0 y] = x`.
    fn engel(&self, x: &Self::Elem, y: &Self::Elem, n: usize) -> Self::Elem {
        let mut c = x.clone();
        for _ in 0..n {
            c = self.commutator(&c, y);
        }
        c
    }
}

/// Checked Engel commutator `[x, n y]`.
///
/// Both operands must belong to `group`; anything else is a usage error.
pub fn engel_commutator<G: GroupOps>(group: &G, x: &G::Elem, y: &G::Elem, n: usize) -> Result<G::Elem> {
    for (name, e) in [("x", x), ("y", y)] {
        if !group.is_member(e) {
            return Err(Error::Usage(format!("operand {name} = {e:?} is not an element of this group")));
        }
    }
    Ok(group.engel(x, y, n))
}
