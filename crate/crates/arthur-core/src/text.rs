//! Text forms of every domain object: parsers for the same canonical
//! syntax the `Display` implementations emit.
//!
//! Grammar summary (whitespace is allowed around list punctuation):
//!
//! - partition: `[4,2^3]`, `[5,3,1,1,1]`, `[]` — `part^mult` expands.
//! - classical type: `B`, `C`, `D`.
//! - orbit: `C:[4,2^3]`, `D:[2^2]#I` — a `#I`/`#II` label marks the two
//!   orbits of a very even partition.
//! - group: `SO11`, `Sp10`, `SO10`.
//! - half-integer: `3/2`, `-1/2`, `2`, `0`.
//! - L-parameter: `1:S4 + 1[1]:S2 + 1[-1/2]:S1`, `0` — an omitted twist
//!   bracket means twist 0.
//! - Arthur parameter: `1:S2:S3 + 1:S4:S1`, `0`.
//! - infinitesimal parameter: `1[1/2] + 1[-1/2]`, `0` — brackets required.
//!
//! Label names (`1`, `eta`, `tau^`, ...) are resolved against a
//! [`LabelRegistry`]; the trivial label `1` is predeclared. Pure syntax
//! violations surface as [`ParseError`] with a byte position; label
//! discipline (very even orbits must be labeled, only they may be) is a
//! domain matter and surfaces as [`DomainError`] through [`TextError`].

use std::collections::BTreeMap;

use crate::error::{DomainError, ParseError};
use crate::orbits::{NilpotentOrbit, VeryEvenLabel};
use crate::parameters::{
    ASummand, ArthurParameter, GroupContext, GroupFamily, HalfInt, InfinitesimalParameter,
    LParameter, LSummand, Rho,
};
use crate::partitions::{ClassicalType, Partition};

/// Either of the two ways reading text can fail: the text is not
/// well-formed, or it denotes an object that violates a domain rule.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TextError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] DomainError),
}

/// The labels a parameter string may mention, by name. Registering a
/// non-self-dual label also registers its partner.
#[derive(Debug, Clone)]
pub struct LabelRegistry {
    labels: BTreeMap<String, Rho>,
}

impl Default for LabelRegistry {
    /// A registry holding only the trivial label `1`.
    fn default() -> LabelRegistry {
        let mut registry = LabelRegistry {
            labels: BTreeMap::new(),
        };
        registry.register(&Rho::trivial());
        registry
    }
}

impl LabelRegistry {
    pub fn register(&mut self, rho: &Rho) {
        self.labels.insert(rho.name().to_string(), rho.clone());
        if !rho.is_self_dual() {
            let partner = rho.dual();
            self.labels
                .entry(partner.name().to_string())
                .or_insert(partner);
        }
    }

    pub fn get(&self, name: &str) -> Option<&Rho> {
        self.labels.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.labels.keys().map(String::as_str)
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Cursor<'a> {
        Cursor { text, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn error(&self, expected: &str) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("{c:?}"),
            None => "end of input".to_string(),
        };
        ParseError::new(self.pos, expected, found)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("{c:?}")))
        }
    }

    fn expect_str(&mut self, s: &str) -> Result<(), ParseError> {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            Ok(())
        } else {
            Err(self.error(&format!("{s:?}")))
        }
    }

    fn uint(&mut self, what: &str) -> Result<u32, ParseError> {
        let digits: usize = self.rest().chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error(what));
        }
        let end = self.pos + digits;
        let value = self.text[self.pos..end]
            .parse::<u32>()
            .map_err(|_| ParseError::new(self.pos, "a smaller number", &self.text[self.pos..end]))?;
        self.pos = end;
        Ok(value)
    }

    /// A label name: letters, digits, `_`, `^`.
    fn name(&mut self) -> Result<&'a str, ParseError> {
        let len: usize = self
            .rest()
            .chars()
            .take_while(|&c| c.is_ascii_alphanumeric() || c == '_' || c == '^')
            .map(char::len_utf8)
            .sum();
        if len == 0 {
            return Err(self.error("a label name"));
        }
        let name = &self.text[self.pos..self.pos + len];
        self.pos += len;
        Ok(name)
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }
}

fn partition_body(cur: &mut Cursor) -> Result<Partition, ParseError> {
    cur.skip_ws();
    cur.expect('[')?;
    cur.skip_ws();
    let mut parts: Vec<u32> = Vec::new();
    if !cur.eat(']') {
        loop {
            cur.skip_ws();
            let part = cur.uint("a part")?;
            cur.skip_ws();
            let mult = if cur.eat('^') {
                cur.skip_ws();
                cur.uint("a multiplicity")?
            } else {
                1
            };
            if parts.len() + mult as usize > 4096 {
                return Err(cur.error("a partition with at most 4096 parts"));
            }
            parts.extend(std::iter::repeat(part).take(mult as usize));
            cur.skip_ws();
            if cur.eat(']') {
                break;
            }
            cur.expect(',')?;
        }
    }
    Ok(Partition::new(parts))
}

pub fn parse_partition(text: &str) -> Result<Partition, ParseError> {
    let mut cur = Cursor::new(text);
    let p = partition_body(&mut cur)?;
    cur.finish()?;
    Ok(p)
}

fn classical_type_body(cur: &mut Cursor) -> Result<ClassicalType, ParseError> {
    cur.skip_ws();
    for (c, t) in [('B', ClassicalType::B), ('C', ClassicalType::C), ('D', ClassicalType::D)] {
        if cur.eat(c) {
            return Ok(t);
        }
    }
    Err(cur.error("a classical type B, C, or D"))
}

pub fn parse_classical_type(text: &str) -> Result<ClassicalType, ParseError> {
    let mut cur = Cursor::new(text);
    let t = classical_type_body(&mut cur)?;
    cur.finish()?;
    Ok(t)
}

/// The raw pieces of an orbit string, before label discipline is applied.
pub fn parse_orbit_parts(
    text: &str,
) -> Result<(Partition, ClassicalType, Option<VeryEvenLabel>), ParseError> {
    let mut cur = Cursor::new(text);
    let ctype = classical_type_body(&mut cur)?;
    cur.expect(':')?;
    let partition = partition_body(&mut cur)?;
    let label = if cur.eat('#') {
        if cur.eat('I') {
            if cur.eat('I') {
                Some(VeryEvenLabel::II)
            } else {
                Some(VeryEvenLabel::I)
            }
        } else {
            return Err(cur.error("a label I or II"));
        }
    } else {
        None
    };
    cur.finish()?;
    Ok((partition, ctype, label))
}

pub fn parse_orbit(text: &str) -> Result<NilpotentOrbit, TextError> {
    let (partition, ctype, label) = parse_orbit_parts(text)?;
    Ok(NilpotentOrbit::new(partition, ctype, label)?)
}

pub fn parse_group(text: &str) -> Result<GroupContext, ParseError> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    let family = if cur.rest().starts_with("SO") {
        cur.pos += 2;
        None
    } else if cur.rest().starts_with("Sp") {
        cur.pos += 2;
        Some(GroupFamily::Sp)
    } else {
        return Err(cur.error("\"SO\" or \"Sp\""));
    };
    let size_pos = cur.pos;
    let size = cur.uint("the group size")?;
    cur.finish()?;
    let (family, rank) = match family {
        Some(GroupFamily::Sp) => {
            if size % 2 != 0 {
                return Err(ParseError::new(size_pos, "an even size for Sp", size.to_string()));
            }
            (GroupFamily::Sp, size / 2)
        }
        _ => {
            if size % 2 == 0 {
                (GroupFamily::SOEven, size / 2)
            } else {
                (GroupFamily::SOOdd, size / 2)
            }
        }
    };
    Ok(GroupContext::new(family, rank))
}

fn halfint_body(cur: &mut Cursor) -> Result<HalfInt, ParseError> {
    cur.skip_ws();
    let negative = cur.eat('-');
    let numerator = cur.uint("a number")? as i64;
    let twice = if cur.eat('/') {
        cur.expect('2')?;
        numerator
    } else {
        2 * numerator
    };
    Ok(HalfInt::from_twice(if negative { -twice } else { twice }))
}

pub fn parse_halfint(text: &str) -> Result<HalfInt, ParseError> {
    let mut cur = Cursor::new(text);
    let x = halfint_body(&mut cur)?;
    cur.finish()?;
    Ok(x)
}

fn label_body<'a>(cur: &mut Cursor<'a>, registry: &LabelRegistry) -> Result<Rho, ParseError> {
    let pos = cur.pos;
    let name = cur.name()?;
    registry
        .get(name)
        .cloned()
        .ok_or_else(|| ParseError::new(pos, "a registered label name", name))
}

/// `S<k>` with `k >= 1`.
fn block_body(cur: &mut Cursor) -> Result<u32, ParseError> {
    let pos = cur.pos;
    cur.expect('S')?;
    let a = cur.uint("a block size")?;
    if a == 0 {
        return Err(ParseError::new(pos, "a block size of at least 1", "S0"));
    }
    Ok(a)
}

/// Parses a `+`-separated list, or the single token `0` for the empty sum.
fn plus_list<T>(
    text: &str,
    mut term: impl FnMut(&mut Cursor) -> Result<T, ParseError>,
) -> Result<Vec<T>, ParseError> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    if cur.eat('0') {
        cur.finish()?;
        return Ok(Vec::new());
    }
    let mut items = Vec::new();
    loop {
        cur.skip_ws();
        items.push(term(&mut cur)?);
        cur.skip_ws();
        if cur.pos == cur.text.len() {
            return Ok(items);
        }
        cur.expect('+')?;
    }
}

pub fn parse_lparameter(text: &str, registry: &LabelRegistry) -> Result<LParameter, ParseError> {
    let summands = plus_list(text, |cur| {
        let rho = label_body(cur, registry)?;
        let twist = if cur.eat('[') {
            let x = halfint_body(cur)?;
            cur.skip_ws();
            cur.expect(']')?;
            x
        } else {
            HalfInt::ZERO
        };
        cur.expect(':')?;
        let a = block_body(cur)?;
        Ok(LSummand::new(rho, twist, a))
    })?;
    Ok(LParameter::new(summands))
}

pub fn parse_aparameter(
    text: &str,
    registry: &LabelRegistry,
) -> Result<ArthurParameter, ParseError> {
    let summands = plus_list(text, |cur| {
        let rho = label_body(cur, registry)?;
        cur.expect(':')?;
        let a = block_body(cur)?;
        cur.expect(':')?;
        let b = block_body(cur)?;
        Ok(ASummand::new(rho, a, b))
    })?;
    Ok(ArthurParameter::new(summands))
}

pub fn parse_lambda(
    text: &str,
    registry: &LabelRegistry,
) -> Result<InfinitesimalParameter, ParseError> {
    let exps = plus_list(text, |cur| {
        let rho = label_body(cur, registry)?;
        cur.expect('[')?;
        let x = halfint_body(cur)?;
        cur.skip_ws();
        cur.expect(']')?;
        Ok((rho, x))
    })?;
    Ok(InfinitesimalParameter::new(exps))
}

/// A `NAME:DIM:KIND[:ram]` label declaration, as the command line takes
/// them: `KIND` is `O` (orthogonal), `S` (symplectic), or `N`
/// (non-self-dual, with the partner named `NAME^`); a trailing `:ram`
/// marks the label ramified.
pub fn parse_label_spec(text: &str) -> Result<Rho, TextError> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    let name = cur.name()?.to_string();
    cur.expect(':')?;
    let dim = cur.uint("a dimension")?;
    cur.expect(':')?;
    let duality = if cur.eat('O') {
        crate::parameters::SelfDuality::Orthogonal
    } else if cur.eat('S') {
        crate::parameters::SelfDuality::Symplectic
    } else if cur.eat('N') {
        crate::parameters::SelfDuality::NotSelfDual(format!("{name}^"))
    } else {
        return Err(cur.error("a duality kind O, S, or N").into());
    };
    let unramified = if cur.eat(':') {
        cur.expect_str("ram")?;
        false
    } else {
        true
    };
    cur.finish()?;
    Ok(Rho::new(name, dim, duality, unramified)?)
}
