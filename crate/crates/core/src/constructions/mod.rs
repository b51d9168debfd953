//! Example groups and the textual group-spec grammar.
//!
//! ```text
//! spec    := factor ('x' factor)*
//! factor  := 'C' n | 'D' n | 'S' n | 'A' n | 'Q8'
//!          | 'wreath(' spec ',' spec ')'
//!          | 'fnil(p=' n ',k=' n ')' | 'fnil4(k=' n ')'
//!          | 'gl(p=' n ',k=' n ')'
//!          | 'cayley(' path ')'
//!          | '(' spec ')'
//! ```
//! Whitespace is ignored everywhere except inside a `cayley(...)` path.

pub mod basic;
pub mod fnil;
pub mod group_ring;
pub mod gupta_levin;

use std::fmt;
use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub use basic::{alternating, cyclic, dihedral, direct_product, permutation_group, perm_from_cycles, quaternion8, symmetric, wreath};
pub use fnil::{free_nil_c2, FreeNilC2Element, FreeNilVariant};
pub use group_ring::{GroupRing, GroupRingElement};
pub use gupta_levin::{GuptaLevinElement, GuptaLevinGroup, GuptaLevinVariant, RingMatrix};

/// Construction descriptor for a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Dihedral group of the given order.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    Product(Vec<GroupSpec>),
    Wreath(Box<GroupSpec>, Box<GroupSpec>),
    FreeNil { p: u32, k: usize },
    FreeNil4 { k: usize },
    GuptaLevin { p: u32, k: usize },
    Cayley(PathBuf),
}

/// A constructed group: either fully tabulated or black-box.
pub enum GroupInstance {
    Finite(FiniteGroup),
    BlackBox(GuptaLevinGroup),
}

impl GroupSpec {
    pub fn is_black_box(&self) -> bool {
        matches!(self, GroupSpec::GuptaLevin { .. })
    }

    /// Order predicted from the descriptor alone, saturating at `u128::MAX`.
    /// `None` for black-box groups and for Cayley files, whose order is only
    /// known after reading them.
    pub fn projected_order(&self) -> Option<u128> {
        use GroupSpec::*;
        let fact = |n: usize| (1..=n as u128).try_fold(1u128, |a, b| a.checked_mul(b));
        match self {
            Cyclic(n) | Dihedral(n) => Some(*n as u128),
            Symmetric(n) => Some(fact(*n).unwrap_or(u128::MAX)),
            Alternating(n) => Some(fact(*n).map(|f| if *n >= 2 { f / 2 } else { f }).unwrap_or(u128::MAX)),
            Quaternion8 => Some(8),
            Product(fs) => fs
                .iter()
                .map(|f| f.projected_order())
                .try_fold(1u128, |acc, o| o.map(|o| acc.saturating_mul(o))),
            Wreath(a, b) => {
                let (a, b) = (a.projected_order()?, b.projected_order()?);
                let e = u32::try_from(b).unwrap_or(u32::MAX);
                Some(a.checked_pow(e).map(|x| x.saturating_mul(b)).unwrap_or(u128::MAX))
            }
            FreeNil { p, k } => Some(fnil::projected_order(FreeNilVariant::OddPrime(*p), *k)),
            FreeNil4 { k } => Some(fnil::projected_order(FreeNilVariant::Exponent4, *k)),
            GuptaLevin { .. } | Cayley(_) => None,
        }
    }

    /// Builds the group, failing with a capacity error if its order would
    /// exceed `cap`.
    pub fn instantiate(&self, cap: usize) -> Result<GroupInstance> {
        match self {
            GroupSpec::GuptaLevin { p, k } => {
                let variant = GuptaLevinVariant::from_prime(*p);
                if let GuptaLevinVariant::OddPrime(p) = variant {
                    if p < 3 {
                        return Err(Error::Usage(format!("gl needs p = 2 or an odd prime, got {p}")));
                    }
                }
                Ok(GroupInstance::BlackBox(GuptaLevinGroup::new(variant, *k, cap)?))
            }
            _ => Ok(GroupInstance::Finite(make_group(self, cap)?)),
        }
    }
}

/// Builds an enumerable group from a descriptor.
pub fn make_group(spec: &GroupSpec, cap: usize) -> Result<FiniteGroup> {
    if let Some(projected) = spec.projected_order() {
        if projected > cap as u128 {
            return Err(Error::Capacity { projected, cap });
        }
    }
    match spec {
        GroupSpec::Cyclic(n) => cyclic(*n, cap),
        GroupSpec::Dihedral(n) => dihedral(*n, cap),
        GroupSpec::Symmetric(n) => symmetric(*n, cap),
        GroupSpec::Alternating(n) => alternating(*n, cap),
        GroupSpec::Quaternion8 => quaternion8(cap),
        GroupSpec::Product(fs) => {
            let groups = fs.iter().map(|f| make_group(f, cap)).collect::<Result<Vec<_>>>()?;
            direct_product(&groups, cap)
        }
        GroupSpec::Wreath(a, b) => wreath(&make_group(a, cap)?, &make_group(b, cap)?, cap),
        GroupSpec::FreeNil { p, k } => free_nil_c2(FreeNilVariant::OddPrime(*p), *k, cap),
        GroupSpec::FreeNil4 { k } => free_nil_c2(FreeNilVariant::Exponent4, *k, cap),
        GroupSpec::GuptaLevin { .. } => Err(Error::Capability(format!(
            "{spec} is a black-box group and cannot be tabulated"
        ))),
        GroupSpec::Cayley(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let g = FiniteGroup::from_cayley_text(&text)?;
            if g.order() > cap {
                return Err(Error::Capacity {
                    projected: g.order() as u128,
                    cap,
                });
            }
            Ok(g)
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Quaternion8 => write!(f, "Q8"),
            GroupSpec::Product(fs) => {
                for (i, factor) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    if matches!(factor, GroupSpec::Product(_)) {
                        write!(f, "({factor})")?;
                    } else {
                        write!(f, "{factor}")?;
                    }
                }
                Ok(())
            }
            GroupSpec::Wreath(a, b) => write!(f, "wreath({a},{b})"),
            GroupSpec::FreeNil { p, k } => write!(f, "fnil(p={p},k={k})"),
            GroupSpec::FreeNil4 { k } => write!(f, "fnil4(k={k})"),
            GroupSpec::GuptaLevin { p, k } => write!(f, "gl(p={p},k={k})"),
            GroupSpec::Cayley(path) => write!(f, "cayley({})", path.display()),
        }
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group_spec(s)
    }
}

/// Parses a group spec such as `wreath(C4, C2 x C2)`.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let mut p = Parser {
        src: text,
        chars: text.char_indices().collect(),
        pos: 0,
    };
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(spec)
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn byte_pos(&self) -> usize {
        self.chars.get(self.pos).map(|c| c.0).unwrap_or(self.src.len())
    }

    fn error(&self, message: &str) -> Error {
        let start = self.byte_pos();
        let token: String = self.src[start..]
            .chars()
            .take_while(|c| !c.is_whitespace())
            .take(16)
            .collect();
        Error::Parse {
            pos: start,
            token: if token.is_empty() { "<end of input>".into() } else { token },
            message: message.into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    /// Consumes `word` (ignoring interior whitespace) if it comes next.
    fn keyword(&mut self, word: &str) -> bool {
        let save = self.pos;
        for w in word.chars() {
            if self.peek() == Some(w) {
                self.pos += 1;
            } else {
                self.pos = save;
                return false;
            }
        }
        true
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        digits.parse().map_err(|_| {
            self.pos = start;
            self.error("number out of range")
        })
    }

    fn param(&mut self, name: &str) -> Result<usize> {
        if !self.keyword(name) {
            return Err(self.error(&format!("expected parameter '{name}'")));
        }
        self.expect('=')?;
        self.number()
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let mut factors = vec![self.factor()?];
        while matches!(self.peek(), Some('x') | Some('×')) {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            GroupSpec::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<GroupSpec> {
        let start = self.pos;
        if self.keyword("wreath") {
            self.expect('(')?;
            let a = self.spec()?;
            self.expect(',')?;
            let b = self.spec()?;
            self.expect(')')?;
            return Ok(GroupSpec::Wreath(Box::new(a), Box::new(b)));
        }
        if self.keyword("fnil4") {
            self.expect('(')?;
            let k = self.param("k")?;
            self.expect(')')?;
            return Ok(GroupSpec::FreeNil4 { k });
        }
        if self.keyword("fnil") {
            self.expect('(')?;
            let p = self.param("p")?;
            self.expect(',')?;
            let k = self.param("k")?;
            self.expect(')')?;
            return Ok(GroupSpec::FreeNil { p: p as u32, k });
        }
        if self.keyword("gl") {
            self.expect('(')?;
            let p = self.param("p")?;
            self.expect(',')?;
            let k = self.param("k")?;
            self.expect(')')?;
            return Ok(GroupSpec::GuptaLevin { p: p as u32, k });
        }
        if self.keyword("cayley") {
            self.expect('(')?;
            let open = self.pos;
            let mut depth = 0usize;
            while self.pos < self.chars.len() {
                match self.chars[self.pos].1 {
                    '(' => depth += 1,
                    ')' if depth == 0 => break,
                    ')' => depth -= 1,
                    _ => {}
                }
                self.pos += 1;
            }
            let close = self.byte_pos();
            let path = self.src[self.chars.get(open).map(|c| c.0).unwrap_or(close)..close].trim();
            if path.is_empty() {
                return Err(self.error("expected a file path"));
            }
            self.expect(')')?;
            return Ok(GroupSpec::Cayley(PathBuf::from(path)));
        }
        if self.keyword("Q8") {
            return Ok(GroupSpec::Quaternion8);
        }
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.spec()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(c @ ('C' | 'D' | 'S' | 'A')) => {
                self.pos += 1;
                let n = self.number()?;
                if n == 0 {
                    self.pos = start;
                    return Err(self.error("group parameter must be positive"));
                }
                Ok(match c {
                    'C' => GroupSpec::Cyclic(n),
                    'D' => GroupSpec::Dihedral(n),
                    'S' => GroupSpec::Symmetric(n),
                    _ => GroupSpec::Alternating(n),
                })
            }
            _ => Err(self.error("unknown group")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_products_with_whitespace() {
        let s = parse_group_spec("C2 x C2").unwrap();
        assert_eq!(s, GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)]));
        assert_eq!(parse_group_spec("C2xC2").unwrap(), s);
        assert_eq!(s.to_string(), "C2xC2");
    }

    #[test]
    fn parses_wreath_and_projects_order() {
        let s = parse_group_spec("wreath(C4, C2 x C2)").unwrap();
        assert_eq!(s.to_string(), "wreath(C4,C2xC2)");
        assert_eq!(s.projected_order(), Some(1024));
    }

    #[test]
    fn parses_parameterized_families() {
        let s = parse_group_spec("fnil(p=3,k=2)").unwrap();
        assert_eq!(s, GroupSpec::FreeNil { p: 3, k: 2 });
        assert_eq!(s.projected_order(), Some(27));
        assert_eq!(parse_group_spec(" fnil4( k = 3 )").unwrap().projected_order(), Some(512));
        assert!(parse_group_spec("gl(p=2,k=3)").unwrap().is_black_box());
        assert_eq!(parse_group_spec("Q8xS3").unwrap().projected_order(), Some(48));
        assert_eq!(
            parse_group_spec("cayley( tables/c2.txt )").unwrap(),
            GroupSpec::Cayley("tables/c2.txt".into())
        );
    }

    #[test]
    fn error_reports_offending_token() {
        match parse_group_spec("C2 x Z7") {
            Err(Error::Parse { pos, token, .. }) => {
                assert_eq!(pos, 5);
                assert_eq!(token, "Z7");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_group_spec("wreath(C2 C2)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_group_spec("C0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_group_spec(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_group_spec("C2)"), Err(Error::Parse { .. })));
    }

    #[test]
    fn capacity_checked_before_building() {
        let s = parse_group_spec("S8").unwrap();
        assert!(matches!(make_group(&s, 4096), Err(Error::Capacity { projected: 40320, .. })));
    }

    #[test]
    fn black_box_cannot_be_tabulated() {
        let s = parse_group_spec("gl(p=2,k=2)").unwrap();
        assert!(matches!(make_group(&s, 4096), Err(Error::Capability(_))));
        assert!(matches!(s.instantiate(4096), Ok(GroupInstance::BlackBox(_))));
    }
}
