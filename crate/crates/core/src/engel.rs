//! Left and right Engel elements, level sets and Engel lengths of finite
//! groups, plus the ρ and ρ̄ sets.
//!
//! For fixed `y` the map `x ↦ [x, y]` is a function on a finite set, so the
//! sequence `[x, ₙ y]` either reaches the identity (a fixed point) or falls
//! into a cycle avoiding it. Depths are found by walking the functional
//! graph once per `y`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::structure::{normal_closure, subnormal_defect_in};
use crate::subgroup::Subgroup;

/// Largest order for which the full Engel table and report are built.
pub const FULL_TABLE_LIMIT: usize = 1024;
/// Default highest level `n` reported for `Lₙ` and `Rₙ`.
pub const DEFAULT_MAX_N: usize = 8;

const INFINITE: u16 = u16::MAX;
const UNSEEN: u16 = u16::MAX - 1;
const ON_PATH: u16 = u16::MAX - 2;

/// `(is_engel, length)` for a single element.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EngelStatus {
    pub is_engel: bool,
    pub length: Option<usize>,
}

impl EngelStatus {
    fn from_depth(d: u16) -> Self {
        if d == INFINITE {
            EngelStatus {
                is_engel: false,
                length: None,
            }
        } else {
            EngelStatus {
                is_engel: true,
                length: Some(d as usize),
            }
        }
    }
}

/// Depth of every `x` under `x ↦ [x, y]`: the least `n` with `[x, ₙ y] = 1`,
/// or `INFINITE`.
fn depths_for(group: &FiniteGroup, y: Element, out: &mut [u16], path: &mut Vec<Element>) {
    out.fill(UNSEEN);
    out[0] = 0;
    for start in group.elements() {
        if out[start.index()] != UNSEEN {
            continue;
        }
        path.clear();
        let mut cur = start;
        let tail = loop {
            match out[cur.index()] {
                UNSEEN => {
                    out[cur.index()] = ON_PATH;
                    path.push(cur);
                    cur = group.comm(cur, y);
                }
                ON_PATH => break INFINITE,
                d => break d,
            }
        };
        let mut d = tail;
        for &p in path.iter().rev() {
            if d != INFINITE {
                d += 1;
            }
            out[p.index()] = d;
        }
    }
}

/// Least `n` with `[x, ₙ y] = 1`, by walking the orbit of `x` with cycle
/// detection.
fn depth_of(group: &FiniteGroup, x: Element, y: Element, stamp: &mut [u32], epoch: u32) -> u16 {
    let mut cur = x;
    let mut n = 0u16;
    while !cur.is_identity() {
        if stamp[cur.index()] == epoch {
            return INFINITE;
        }
        stamp[cur.index()] = epoch;
        cur = group.comm(cur, y);
        n += 1;
    }
    n
}

/// Whether `a` is a left Engel element (`[g, ₙ a] = 1` for all `g`) and its
/// left Engel length. Works at any order.
pub fn left_engel_status(group: &FiniteGroup, a: Element) -> EngelStatus {
    let mut depths = vec![0; group.order()];
    depths_for(group, a, &mut depths, &mut Vec::new());
    EngelStatus::from_depth(depths.iter().copied().max().unwrap_or(0))
}

/// Whether `a` is a right Engel element (`[a, ₙ g] = 1` for all `g`) and its
/// right Engel length. Works at any order.
pub fn right_engel_status(group: &FiniteGroup, a: Element) -> EngelStatus {
    let mut stamp = vec![0u32; group.order()];
    let mut worst = 0;
    for (i, g) in group.elements().enumerate() {
        let d = depth_of(group, a, g, &mut stamp, i as u32 + 1);
        if d == INFINITE {
            return EngelStatus::from_depth(INFINITE);
        }
        worst = worst.max(d);
    }
    EngelStatus::from_depth(worst)
}

/// Full table `depth(x, y)` = least `n` with `[x, ₙ y] = 1`.
pub struct EngelTable {
    order: usize,
    depth: Vec<u16>,
}

impl EngelTable {
    pub fn new(group: &FiniteGroup) -> Result<Self> {
        let n = group.order();
        if n > FULL_TABLE_LIMIT {
            return Err(Error::Capacity {
                projected: n as u128,
                cap: FULL_TABLE_LIMIT,
            });
        }
        let mut depth = vec![0u16; n * n];
        let mut path = Vec::new();
        for y in group.elements() {
            depths_for(group, y, &mut depth[y.index() * n..(y.index() + 1) * n], &mut path);
        }
        Ok(EngelTable { order: n, depth })
    }

    /// Least `n` with `[x, ₙ y] = 1`, if any.
    pub fn depth(&self, x: Element, y: Element) -> Option<usize> {
        let d = self.depth[y.index() * self.order + x.index()];
        (d != INFINITE).then_some(d as usize)
    }

    pub fn left(&self, a: Element) -> EngelStatus {
        let row = &self.depth[a.index() * self.order..(a.index() + 1) * self.order];
        EngelStatus::from_depth(row.iter().copied().max().unwrap_or(0))
    }

    pub fn right(&self, a: Element) -> EngelStatus {
        let worst = (0..self.order)
            .map(|y| self.depth[y * self.order + a.index()])
            .max()
            .unwrap_or(0);
        EngelStatus::from_depth(worst)
    }
}

/// Which Engel-type set a level belongs to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// `Lₙ` or `Rₙ` for a single `n`.
#[derive(Clone, Debug, Serialize)]
pub struct LevelSet {
    pub n: usize,
    pub elements: Vec<Element>,
    pub is_subgroup: bool,
    pub generates_group: bool,
}

/// Per-element data of an Engel report.
#[derive(Copy, Clone, Debug, Serialize)]
pub struct ElementEngel {
    pub element: Element,
    pub left: EngelStatus,
    pub right: EngelStatus,
}

/// Every Engel set of a finite group.
#[derive(Clone, Debug)]
pub struct EngelReport {
    pub max_n: usize,
    pub per_element: Vec<ElementEngel>,
    pub left_levels: Vec<LevelSet>,
    pub right_levels: Vec<LevelSet>,
    pub left: Vec<Element>,
    pub left_bounded: Vec<Element>,
    pub right: Vec<Element>,
    pub right_bounded: Vec<Element>,
    pub rho: Vec<Element>,
    pub rho_bar: Vec<Element>,
    /// Largest subnormal defect over all `x`, per element of `ρ̄`.
    pub rho_bounds: Vec<(Element, usize)>,
}

impl EngelReport {
    pub fn level(&self, side: Side, n: usize) -> Option<&LevelSet> {
        let levels = match side {
            Side::Left => &self.left_levels,
            Side::Right => &self.right_levels,
        };
        levels.get(n.checked_sub(1)?)
    }

    /// Left Engel length of an element, if it is a left Engel element.
    pub fn left_length(&self, a: Element) -> Option<usize> {
        self.per_element[a.index()].left.length
    }

    pub fn right_length(&self, a: Element) -> Option<usize> {
        self.per_element[a.index()].right.length
    }
}

fn level_set(group: &FiniteGroup, n: usize, elements: Vec<Element>) -> LevelSet {
    let generated = Subgroup::generated_by(group, elements.iter().copied());
    LevelSet {
        n,
        is_subgroup: generated.order() == elements.len(),
        generates_group: generated.is_whole(),
        elements,
    }
}

/// Builds the full Engel report with level sets `1..=max_n`.
pub fn engel_level_sets(group: &FiniteGroup, max_n: usize) -> Result<EngelReport> {
    let table = EngelTable::new(group)?;
    engel_report_from_table(group, &table, max_n)
}

pub fn engel_report_from_table(group: &FiniteGroup, table: &EngelTable, max_n: usize) -> Result<EngelReport> {
    if max_n == 0 {
        return Err(Error::Usage("max-n must be at least 1".into()));
    }
    let per_element: Vec<ElementEngel> = group
        .elements()
        .map(|a| ElementEngel {
            element: a,
            left: table.left(a),
            right: table.right(a),
        })
        .collect();
    let select = |f: &dyn Fn(&ElementEngel) -> bool| -> Vec<Element> {
        per_element.iter().filter(|e| f(e)).map(|e| e.element).collect()
    };
    let left_levels = (1..=max_n)
        .map(|n| level_set(group, n, select(&|e| e.left.length.is_some_and(|l| l <= n))))
        .collect();
    let right_levels = (1..=max_n)
        .map(|n| level_set(group, n, select(&|e| e.right.length.is_some_and(|l| l <= n))))
        .collect();
    let left = select(&|e| e.left.is_engel);
    let right = select(&|e| e.right.is_engel);
    let left_bounded = select(&|e| e.left.length.is_some());
    let right_bounded = select(&|e| e.right.length.is_some());
    let rho = rho_sets(group)?;
    Ok(EngelReport {
        max_n,
        per_element,
        left_levels,
        right_levels,
        left,
        left_bounded,
        right,
        right_bounded,
        rho: rho.rho,
        rho_bar: rho.rho_bar,
        rho_bounds: rho.bounds,
    })
}

/// `ρ(G)`, `ρ̄(G)` and the uniform defect bound of each element of `ρ̄`.
#[derive(Clone, Debug)]
pub struct RhoSets {
    pub rho: Vec<Element>,
    pub rho_bar: Vec<Element>,
    pub bounds: Vec<(Element, usize)>,
}

/// `a ∈ ρ` iff every `⟨x⟩` is subnormal in `⟨x⟩⟨a⟩ᴳ`. Membership depends
/// on `a` only through `⟨a⟩ᴳ`, so results are cached per normal closure.
pub fn rho_sets(group: &FiniteGroup) -> Result<RhoSets> {
    let cyclics: Vec<Subgroup<'_>> = {
        let mut seen: HashMap<Vec<Element>, ()> = HashMap::new();
        let mut out = Vec::new();
        for x in group.elements() {
            let c = Subgroup::generated_by(group, [x]);
            if seen.insert(c.elements().to_vec(), ()).is_none() {
                out.push(c);
            }
        }
        out
    };
    let mut by_closure: HashMap<Vec<Element>, Option<usize>> = HashMap::new();
    let mut rho = Vec::new();
    let mut rho_bar = Vec::new();
    let mut bounds = Vec::new();
    for a in group.elements() {
        let n = normal_closure(group, &[a]);
        let bound = *by_closure.entry(n.elements().to_vec()).or_insert_with(|| {
            let mut worst = 0;
            for c in &cyclics {
                let seeds: Vec<Element> = c.generators().iter().chain(n.generators()).copied().collect();
                let ambient = Subgroup::generated_by(group, seeds);
                match subnormal_defect_in(&ambient, c) {
                    Some(d) => worst = worst.max(d),
                    None => return None,
                }
            }
            Some(worst)
        });
        if let Some(b) = bound {
            rho.push(a);
            rho_bar.push(a);
            bounds.push((a, b));
        }
    }
    if rho != rho_bar {
        return Err(Error::InvariantViolation("ρ and ρ̄ differ in a finite group".into()));
    }
    Ok(RhoSets { rho, rho_bar, bounds })
}
