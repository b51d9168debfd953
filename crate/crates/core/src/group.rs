//! Table-driven finite groups.
//!
//! Every enumerable group is stored as a full multiplication table over
//! indices `0..order`, with index 0 the identity. Element indices are assigned
//! in breadth-first order over the generators, so the shortlex-least word for
//! each element doubles as its label.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ops::GroupOps;

/// Default cap on the order of enumerable groups.
pub const DEFAULT_ORDER_CAP: usize = 4096;
/// Groups up to this order get exhaustive pair/triple checks.
pub const EXHAUSTIVE_LIMIT: usize = 256;
/// Sample count used above [`EXHAUSTIVE_LIMIT`].
pub const DEFAULT_SAMPLES: usize = 512;

const ASSOCIATIVITY_SEED: u64 = 0x5eed_a550c;

/// Index of an element in its group's tables. `Element(0)` is the identity.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Element(pub u32);

impl Element {
    pub const IDENTITY: Element = Element(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

/// How a generator entered the group. Wreath products tag their base and top
/// generators so that callers can recover the two factors.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorRole {
    Plain,
    Base,
    Top,
}

/// How associativity of the table was validated.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum AssociativityCheck {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<Element>,
    roles: Vec<GeneratorRole>,
    generator_names: Vec<String>,
    labels: Vec<String>,
    associativity: AssociativityCheck,
}

/// Result of a breadth-first enumeration of a group given by generators in
/// some concrete representation `T`.
pub struct Enumeration<T> {
    pub elements: Vec<T>,
    parent: Vec<u32>,
    via: Vec<u32>,
    right_gen: Vec<u32>,
    num_gens: usize,
}

/// Enumerates the group generated by `gens` inside some concrete
/// representation, failing once more than `cap` elements have been found.
pub fn enumerate<T, F>(identity: T, gens: &[T], mul: F, cap: usize) -> Result<Enumeration<T>>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let k = gens.len();
    let mut index: HashMap<T, u32> = HashMap::new();
    let mut elements = vec![identity.clone()];
    index.insert(identity, 0);
    let mut parent = vec![0u32];
    let mut via = vec![u32::MAX];
    let mut right_gen: Vec<u32> = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        for (s, gen) in gens.iter().enumerate() {
            let prod = mul(&elements[head], gen);
            let idx = match index.get(&prod) {
                Some(&i) => i,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::Capacity {
                            projected: elements.len() as u128 + 1,
                            cap,
                        });
                    }
                    let i = elements.len() as u32;
                    index.insert(prod.clone(), i);
                    elements.push(prod);
                    parent.push(head as u32);
                    via.push(s as u32);
                    i
                }
            };
            right_gen.push(idx);
        }
        head += 1;
    }
    Ok(Enumeration {
        elements,
        parent,
        via,
        right_gen,
        num_gens: k,
    })
}

impl<T> Enumeration<T> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Index of generator `s` in the enumeration.
    pub fn generator_index(&self, s: usize) -> Element {
        Element(self.right_gen[s])
    }

    /// Builds the full table by the recursion `g * (p s) = (g * p) s`, which
    /// only needs right multiplication by generators.
    pub fn into_group(self, roles: Vec<GeneratorRole>) -> Result<(FiniteGroup, Vec<T>)> {
        let n = self.order();
        let k = self.num_gens;
        let mut mul = vec![0u32; n * n];
        for g in 0..n {
            mul[g * n] = g as u32;
        }
        for j in 1..n {
            let p = self.parent[j] as usize;
            let s = self.via[j] as usize;
            for g in 0..n {
                let gp = mul[g * n + p] as usize;
                mul[g * n + j] = self.right_gen[gp * k + s];
            }
        }
        let generators: Vec<Element> = (0..k).map(|s| self.generator_index(s)).collect();
        let group = FiniteGroup::from_parts(mul, generators, roles)?;
        Ok((group, self.elements))
    }
}

fn default_generator_names(k: usize) -> Vec<String> {
    (0..k)
        .map(|i| {
            if k <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("g{i}")
            }
        })
        .collect()
}

impl FiniteGroup {
    /// Builds a group from a multiplication table (row `g`, column `h` holds
    /// `g*h`). If `generators` is `None` a generating set is picked greedily in
    /// index order.
    pub fn from_table(table: Vec<Vec<u32>>, generators: Option<Vec<u32>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Validation("empty table".into()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (g, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Validation(format!(
                    "row {g} has {} entries, expected {n}",
                    row.len()
                )));
            }
            mul.extend_from_slice(row);
        }
        let gens = match generators {
            Some(gs) => gs.into_iter().map(Element).collect(),
            None => Vec::new(),
        };
        let roles = vec![GeneratorRole::Plain; gens.len()];
        let mut group = Self::from_parts(mul, gens, roles)?;
        if group.generators.is_empty() && n > 1 {
            group.generators = greedy_generators(&group);
            group.roles = vec![GeneratorRole::Plain; group.generators.len()];
            group.generator_names = default_generator_names(group.generators.len());
            group.assign_labels()?;
        }
        Ok(group)
    }

    fn from_parts(mul: Vec<u32>, generators: Vec<Element>, roles: Vec<GeneratorRole>) -> Result<Self> {
        let n = (mul.len() as f64).sqrt().round() as usize;
        if n * n != mul.len() || n == 0 {
            return Err(Error::Validation("table is not square".into()));
        }
        if let Some(bad) = mul.iter().find(|&&v| v as usize >= n) {
            return Err(Error::Validation(format!("entry {bad} out of range")));
        }
        for g in 0..n {
            if mul[g] as usize != g || mul[g * n] as usize != g {
                return Err(Error::Validation(format!(
                    "index 0 is not a two-sided identity (fails at {g})"
                )));
            }
        }
        // Latin-square rows and columns give unique inverses and cancellation.
        let mut seen = vec![u32::MAX; n];
        for g in 0..n {
            for h in 0..n {
                let v = mul[g * n + h] as usize;
                if seen[v] == g as u32 {
                    return Err(Error::Validation(format!("row {g} repeats entry {v}")));
                }
                seen[v] = g as u32;
            }
        }
        seen.fill(u32::MAX);
        for h in 0..n {
            for g in 0..n {
                let v = mul[g * n + h] as usize;
                if seen[v] == h as u32 {
                    return Err(Error::Validation(format!("column {h} repeats entry {v}")));
                }
                seen[v] = h as u32;
            }
        }
        let mut inv = vec![0u32; n];
        for g in 0..n {
            let row = &mul[g * n..(g + 1) * n];
            inv[g] = row.iter().position(|&v| v == 0).unwrap() as u32;
        }
        for gen in &generators {
            if gen.index() >= n {
                return Err(Error::Validation(format!("generator {} out of range", gen.0)));
            }
        }
        let associativity = check_associativity(&mul, n)?;
        let k = generators.len();
        let mut group = FiniteGroup {
            order: n,
            mul,
            inv,
            generators,
            roles,
            generator_names: default_generator_names(k),
            labels: Vec::new(),
            associativity,
        };
        if k > 0 || n == 1 {
            group.assign_labels()?;
        }
        Ok(group)
    }

    /// Assigns shortlex-least generator words as labels; fails if the
    /// generators do not reach every element.
    fn assign_labels(&mut self) -> Result<()> {
        let n = self.order;
        let mut word: Vec<Option<(u32, u32)>> = vec![None; n];
        let mut reached = vec![false; n];
        reached[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let e = queue[head];
            for (s, gen) in self.generators.iter().enumerate() {
                let p = self.mul[e * n + gen.index()] as usize;
                if !reached[p] {
                    reached[p] = true;
                    word[p] = Some((e as u32, s as u32));
                    queue.push(p);
                }
            }
            head += 1;
        }
        if queue.len() != n {
            return Err(Error::Validation(format!(
                "generators reach only {} of {n} elements",
                queue.len()
            )));
        }
        let mut words: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &e in &queue[1..] {
            let (p, s) = word[e].unwrap();
            let mut w = words[p as usize].clone();
            w.push(s);
            words[e] = w;
        }
        self.labels = words.iter().map(|w| self.render_word(w)).collect();
        Ok(())
    }

    fn render_word(&self, word: &[u32]) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < word.len() {
            let mut j = i;
            while j < word.len() && word[j] == word[i] {
                j += 1;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&self.generator_names[word[i] as usize]);
            if j - i > 1 {
                let _ = write!(out, "^{}", j - i);
            }
            i = j;
        }
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        Element::IDENTITY
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = Element> + DoubleEndedIterator + Clone {
        (0..self.order as u32).map(Element)
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        Element(self.mul[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        Element(self.inv[a.index()])
    }

    /// `a^b = b⁻¹ a b`.
    #[inline]
    pub fn conj(&self, a: Element, b: Element) -> Element {
        self.mul(self.mul(self.inv(b), a), b)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    #[inline]
    pub fn comm(&self, a: Element, b: Element) -> Element {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// `[x, n y]` without range checks.
    #[inline]
    pub fn engel(&self, x: Element, y: Element, n: usize) -> Element {
        let mut c = x;
        for _ in 0..n {
            c = self.comm(c, y);
        }
        c
    }

    pub fn pow(&self, a: Element, k: i64) -> Element {
        let ord = self.element_order(a) as i64;
        let mut e = k.rem_euclid(ord);
        let mut base = a;
        let mut acc = Element::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Least `n ≥ 1` with `aⁿ = 1`.
    pub fn element_order(&self, a: Element) -> usize {
        let mut x = a;
        let mut n = 1;
        while !x.is_identity() {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|e| self.element_order(e))
            .fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn contains(&self, a: Element) -> bool {
        a.index() < self.order
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn generator_roles(&self) -> &[GeneratorRole] {
        &self.roles
    }

    /// Generators carrying the given role, in generator order.
    pub fn generators_with_role(&self, role: GeneratorRole) -> Vec<Element> {
        self.generators
            .iter()
            .zip(&self.roles)
            .filter(|(_, r)| **r == role)
            .map(|(g, _)| *g)
            .collect()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn label(&self, a: Element) -> &str {
        &self.labels[a.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element_by_label(&self, label: &str) -> Option<Element> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| Element(i as u32))
    }

    pub fn associativity_check(&self) -> AssociativityCheck {
        self.associativity
    }

    /// Serializes to the plain-text Cayley table format.
    pub fn to_cayley_text(&self) -> String {
        let n = self.order;
        let mut out = format!("{n}\n");
        for g in 0..n {
            let row: Vec<String> = self.mul[g * n..(g + 1) * n]
                .iter()
                .map(|v| v.to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        if !self.generators.is_empty() {
            let gens: Vec<String> = self.generators.iter().map(|g| g.0.to_string()).collect();
            let _ = writeln!(out, "gens: {}", gens.join(" "));
        }
        out
    }

    /// Parses the plain-text Cayley table format: the order on the first line,
    /// then one row per element, then an optional `gens:` line.
    pub fn from_cayley_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Validation("missing order line".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::Validation(format!("bad order line {header:?}")))?;
        let parse_row = |line: &str| -> Result<Vec<u32>> {
            line.split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Validation(format!("bad table entry {t:?}")))
                })
                .collect()
        };
        let mut table = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::Validation(format!("missing row {i}")))?;
            table.push(parse_row(line)?);
        }
        let gens = match lines.next() {
            Some(line) => {
                let rest = line
                    .strip_prefix("gens:")
                    .ok_or_else(|| Error::Validation(format!("unexpected trailing line {line:?}")))?;
                Some(parse_row(rest)?)
            }
            None => None,
        };
        if let Some(extra) = lines.next() {
            return Err(Error::Validation(format!("unexpected trailing line {extra:?}")));
        }
        Self::from_table(table, gens)
    }
}

fn greedy_generators(group: &FiniteGroup) -> Vec<Element> {
    let n = group.order;
    let mut inside = vec![false; n];
    inside[0] = true;
    let mut list = vec![Element::IDENTITY];
    let mut gens = Vec::new();
    for cand in group.elements() {
        if inside[cand.index()] {
            continue;
        }
        gens.push(cand);
        let mut head = 0;
        // Re-close from scratch; only runs once per chosen generator.
        while head < list.len() {
            let e = list[head];
            for &g in &gens {
                let p = group.mul(e, g);
                if !inside[p.index()] {
                    inside[p.index()] = true;
                    list.push(p);
                }
            }
            head += 1;
        }
    }
    gens
}

fn check_associativity(mul: &[u32], n: usize) -> Result<AssociativityCheck> {
    let at = |a: usize, b: usize| mul[a * n + b] as usize;
    let fail = |a, b, c| {
        Err(Error::Validation(format!(
            "multiplication is not associative at ({a}, {b}, {c})"
        )))
    };
    if n <= EXHAUSTIVE_LIMIT {
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return fail(a, b, c);
                    }
                }
            }
        }
        Ok(AssociativityCheck::Exhaustive)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(ASSOCIATIVITY_SEED);
        for _ in 0..DEFAULT_SAMPLES {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if at(at(a, b), c) != at(a, at(b, c)) {
                return fail(a, b, c);
            }
        }
        Ok(AssociativityCheck::Sampled {
            samples: DEFAULT_SAMPLES,
            seed: ASSOCIATIVITY_SEED,
        })
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl GroupOps for FiniteGroup {
    type Elem = Element;

    fn identity(&self) -> Element {
        Element::IDENTITY
    }

    fn op(&self, a: &Element, b: &Element) -> Element {
        self.mul(*a, *b)
    }

    fn inverse(&self, a: &Element) -> Element {
        self.inv(*a)
    }

    fn is_member(&self, a: &Element) -> bool {
        self.contains(*a)
    }
}
