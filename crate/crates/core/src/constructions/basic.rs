//! Cyclic, dihedral, symmetric, alternating and quaternion groups, direct and
//! standard wreath products.

use crate::error::{Error, Result};
use crate::group::{enumerate, Element, FiniteGroup, GeneratorRole};

fn plain(k: usize) -> Vec<GeneratorRole> {
    vec![GeneratorRole::Plain; k]
}

pub fn cyclic(n: usize, cap: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::Usage("cyclic group of order 0".into()));
    }
    let gens: Vec<usize> = if n == 1 { vec![] } else { vec![1] };
    let e = enumerate(0usize, &gens, |a, b| (a + b) % n, cap)?;
    Ok(e.into_group(plain(gens.len()))?.0)
}

/// Dihedral group of the given order (`D8` has order 8), generated by a
/// rotation and a reflection.
pub fn dihedral(order: usize, cap: usize) -> Result<FiniteGroup> {
    if order < 2 || !order.is_multiple_of(2) {
        return Err(Error::Usage(format!("dihedral group needs an even order, got {order}")));
    }
    let m = order / 2;
    let mul = |a: &(usize, bool), b: &(usize, bool)| {
        let rot = if a.1 { (a.0 + m - b.0) % m } else { (a.0 + b.0) % m };
        (rot, a.1 ^ b.1)
    };
    let gens = if m == 1 { vec![(0, true)] } else { vec![(1 % m, false), (0, true)] };
    let e = enumerate((0usize, false), &gens, mul, cap)?;
    Ok(e.into_group(plain(gens.len()))?.0)
}

/// Permutation group on `degree` points. Products compose left to right:
/// `(a*b)(i) = b(a(i))`.
pub fn permutation_group(degree: usize, gens: &[Vec<u32>], cap: usize) -> Result<FiniteGroup> {
    for g in gens {
        let mut seen = vec![false; degree];
        if g.len() != degree || g.iter().any(|&i| i as usize >= degree || std::mem::replace(&mut seen[i as usize], true)) {
            return Err(Error::Usage(format!("{g:?} is not a permutation of {degree} points")));
        }
    }
    let id: Vec<u32> = (0..degree as u32).collect();
    let e = enumerate(
        id,
        gens,
        |a: &Vec<u32>, b: &Vec<u32>| a.iter().map(|&i| b[i as usize]).collect(),
        cap,
    )?;
    Ok(e.into_group(plain(gens.len()))?.0)
}

/// Permutation of `degree` points given in cycle notation (0-based points).
pub fn perm_from_cycles(degree: usize, cycles: &[&[u32]]) -> Vec<u32> {
    let mut p: Vec<u32> = (0..degree as u32).collect();
    for c in cycles {
        for i in 0..c.len() {
            p[c[i] as usize] = c[(i + 1) % c.len()];
        }
    }
    p
}

pub fn symmetric(n: usize, cap: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::Usage("symmetric group on 0 points".into()));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(perm_from_cycles(n, &[&[0, 1]]));
    }
    if n >= 3 {
        let cyc: Vec<u32> = (0..n as u32).collect();
        gens.push(perm_from_cycles(n, &[&cyc]));
    }
    permutation_group(n, &gens, cap)
}

pub fn alternating(n: usize, cap: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::Usage("alternating group on 0 points".into()));
    }
    let gens: Vec<Vec<u32>> = (2..n as u32).map(|k| perm_from_cycles(n, &[&[0, 1, k]])).collect();
    permutation_group(n, &gens, cap)
}

/// Quaternion group of order 8, generated by `i` and `j`.
pub fn quaternion8(cap: usize) -> Result<FiniteGroup> {
    // (negated, unit) with unit 0..4 = 1, i, j, k
    const TABLE: [[(bool, u8); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let mul = |a: &(bool, u8), b: &(bool, u8)| {
        let (neg, u) = TABLE[a.1 as usize][b.1 as usize];
        (a.0 ^ b.0 ^ neg, u)
    };
    let e = enumerate((false, 0u8), &[(false, 1), (false, 2)], mul, cap)?;
    Ok(e.into_group(plain(2))?.0)
}

/// Direct product; generators of each factor are placed in their own
/// coordinate, in factor order.
pub fn direct_product(factors: &[FiniteGroup], cap: usize) -> Result<FiniteGroup> {
    let projected: u128 = factors.iter().map(|f| f.order() as u128).product();
    if projected > cap as u128 {
        return Err(Error::Capacity { projected, cap });
    }
    let identity = vec![0u32; factors.len()];
    let mut gens = Vec::new();
    let mut roles = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        for &g in f.generators() {
            let mut v = identity.clone();
            v[i] = g.0;
            gens.push(v);
            roles.push(GeneratorRole::Plain);
        }
    }
    let mul = |a: &Vec<u32>, b: &Vec<u32>| {
        factors
            .iter()
            .zip(a.iter().zip(b))
            .map(|(f, (&x, &y))| f.mul(Element(x), Element(y)).0)
            .collect::<Vec<u32>>()
    };
    let e = enumerate(identity, &gens, mul, cap)?;
    Ok(e.into_group(roles)?.0)
}

/// Standard (regular) wreath product `A ≀ B`.
///
/// Elements are pairs `(f, b)` with `f: B → A`; the top group acts on
/// coordinates by right multiplication, giving
/// `(f, b)(f', b') = (c ↦ f(c)·f'(c·b), b·b')`.
/// Generators: those of `A` in the coordinate of the identity of `B` (tagged
/// base), then those of `B` (tagged top).
pub fn wreath(a: &FiniteGroup, b: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    let projected = (a.order() as u128)
        .checked_pow(b.order() as u32)
        .and_then(|x| x.checked_mul(b.order() as u128))
        .unwrap_or(u128::MAX);
    if projected > cap as u128 {
        return Err(Error::Capacity { projected, cap });
    }
    let nb = b.order();
    let identity = (vec![0u32; nb], 0u32);
    let mut gens = Vec::new();
    let mut roles = Vec::new();
    for &g in a.generators() {
        let mut f = vec![0u32; nb];
        f[0] = g.0;
        gens.push((f, 0));
        roles.push(GeneratorRole::Base);
    }
    for &g in b.generators() {
        gens.push((vec![0u32; nb], g.0));
        roles.push(GeneratorRole::Top);
    }
    let mul = |x: &(Vec<u32>, u32), y: &(Vec<u32>, u32)| {
        let top = Element(x.1);
        let f: Vec<u32> = (0..nb)
            .map(|c| {
                let shifted = b.mul(Element(c as u32), top).index();
                a.mul(Element(x.0[c]), Element(y.0[shifted])).0
            })
            .collect();
        (f, b.mul(top, Element(y.1)).0)
    };
    let e = enumerate(identity, &gens, mul, cap)?;
    Ok(e.into_group(roles)?.0)
}
