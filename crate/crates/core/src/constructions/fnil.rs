//! Free nilpotent class-2 groups realized as central extensions.
//!
//! An element is a pair `(v, w)`: `v` holds the exponents of the `k` free
//! generators and `w` one coordinate per pair `i < j`. The product is
//! `(v, w)(v', w') = (v + v', w + w' + β(v, v'))` with `β(v, v')ᵢⱼ = vᵢ·v'ⱼ`,
//! which makes `[eᵢ, eⱼ]` the `(i, j)` basis vector of `w`.
//!
//! For odd `p` both `v` and `w` live mod `p` (exponent `p`). The exponent-4
//! variant keeps `v` mod 4 and `w` mod 2, evaluating `β` on `v` mod 2.

use crate::error::{Error, Result};
use crate::group::{enumerate, FiniteGroup, GeneratorRole};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FreeNilVariant {
    /// Exponent `p` for an odd prime `p`.
    OddPrime(u32),
    /// Exponent 4.
    Exponent4,
}

impl FreeNilVariant {
    fn moduli(self) -> (u32, u32) {
        match self {
            FreeNilVariant::OddPrime(p) => (p, p),
            FreeNilVariant::Exponent4 => (4, 2),
        }
    }

    pub fn exponent(self) -> usize {
        match self {
            FreeNilVariant::OddPrime(p) => p as usize,
            FreeNilVariant::Exponent4 => 4,
        }
    }
}

/// `(v, w)` coordinates of an element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeNilC2Element {
    pub v: Vec<u8>,
    pub w: Vec<u8>,
}

pub fn pair_count(rank: usize) -> usize {
    rank * rank.saturating_sub(1) / 2
}

/// Position of the pair `(i, j)`, `i < j`, in the `w` vector.
pub fn pair_index(rank: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < rank);
    i * (2 * rank - i - 1) / 2 + (j - i - 1)
}

pub fn projected_order(variant: FreeNilVariant, rank: usize) -> u128 {
    let (mv, mw) = variant.moduli();
    (mv as u128)
        .checked_pow(rank as u32)
        .and_then(|a| (mw as u128).checked_pow(pair_count(rank) as u32).and_then(|b| a.checked_mul(b)))
        .unwrap_or(u128::MAX)
}

pub fn multiply(variant: FreeNilVariant, a: &FreeNilC2Element, b: &FreeNilC2Element) -> FreeNilC2Element {
    let (mv, mw) = variant.moduli();
    let k = a.v.len();
    let reduce = |x: u8| -> u32 {
        match variant {
            FreeNilVariant::Exponent4 => (x % 2) as u32,
            FreeNilVariant::OddPrime(_) => x as u32,
        }
    };
    let v = a
        .v
        .iter()
        .zip(&b.v)
        .map(|(&x, &y)| ((x as u32 + y as u32) % mv) as u8)
        .collect();
    let mut w: Vec<u8> = a
        .w
        .iter()
        .zip(&b.w)
        .map(|(&x, &y)| ((x as u32 + y as u32) % mw) as u8)
        .collect();
    for i in 0..k {
        for j in i + 1..k {
            let idx = pair_index(k, i, j);
            let beta = reduce(a.v[i]) * reduce(b.v[j]);
            w[idx] = ((w[idx] as u32 + beta) % mw) as u8;
        }
    }
    FreeNilC2Element { v, w }
}

/// Builds the enumerable group of the given variant and rank `k ≥ 2`.
pub fn free_nil_c2(variant: FreeNilVariant, rank: usize, cap: usize) -> Result<FiniteGroup> {
    if rank < 2 {
        return Err(Error::Usage(format!("free nilpotent group needs rank ≥ 2, got {rank}")));
    }
    if let FreeNilVariant::OddPrime(p) = variant {
        if p < 3 || !(2..p).take_while(|d| d * d <= p).all(|d| p % d != 0) {
            return Err(Error::Usage(format!("exponent-p variant needs an odd prime, got {p}")));
        }
    }
    let projected = projected_order(variant, rank);
    if projected > cap as u128 {
        return Err(Error::Capacity { projected, cap });
    }
    let m = pair_count(rank);
    let identity = FreeNilC2Element {
        v: vec![0; rank],
        w: vec![0; m],
    };
    let gens: Vec<FreeNilC2Element> = (0..rank)
        .map(|i| {
            let mut v = vec![0; rank];
            v[i] = 1;
            FreeNilC2Element { v, w: vec![0; m] }
        })
        .collect();
    let e = enumerate(identity, &gens, |a, b| multiply(variant, a, b), cap)?;
    Ok(e.into_group(vec![GeneratorRole::Plain; rank])?.0)
}
