//! Partition arithmetic for the classical types B, C and D.
//!
//! A partition is a non-increasing sequence of positive integers. A partition
//! of `n` is of type B when `n` is odd and every even part has even
//! multiplicity, of type C when `n` is even and every odd part has even
//! multiplicity, and of type D when `n` is even and every even part has even
//! multiplicity. These sets parametrize the nilpotent orbits of
//! `so_{2n+1}`, `sp_{2n}` and `so_{2n}` respectively.
//!
//! The module provides:
//! - [`Partition::transpose`], [`Partition::union`], [`Partition::plus`],
//!   [`Partition::minus`]: the elementary operations,
//! - [`Partition::collapse`]: the dominance-maximal type-X partition below a
//!   given one,
//! - [`Partition::dominance`]: the dominance partial order,
//! - [`Partition::dbv`]: Barbasch–Vogan duality
//!   (B -> C via minus/C-collapse/transpose, C -> B via plus/B-collapse/
//!   transpose, D -> D via transpose/D-collapse),
//! - [`Partition::is_special`]: fixed points of the double duality.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::DomainError;

/// The classical type of a partition: B, C or D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClassicalType {
    B,
    C,
    D,
}

impl ClassicalType {
    /// Name used in error messages and text output.
    pub fn name(self) -> &'static str {
        match self {
            ClassicalType::B => "B",
            ClassicalType::C => "C",
            ClassicalType::D => "D",
        }
    }

    /// The required parity of the size: 1 for type B (odd), 0 for C and D.
    fn size_parity(self) -> u32 {
        match self {
            ClassicalType::B => 1,
            ClassicalType::C | ClassicalType::D => 0,
        }
    }

    /// True if a partition of size `n` can be of this type at all.
    pub fn admits_size(self, n: u32) -> bool {
        n % 2 == self.size_parity()
    }

    /// Parts of this parity must occur with even multiplicity:
    /// even parts for types B and D, odd parts for type C.
    fn forbidden_part_parity(self) -> u32 {
        match self {
            ClassicalType::B | ClassicalType::D => 0,
            ClassicalType::C => 1,
        }
    }

    /// The type on the other side of the Barbasch–Vogan duality:
    /// duality maps type-B partitions to type-C partitions and back, and
    /// type-D partitions to type-D partitions.
    pub fn dual(self) -> ClassicalType {
        match self {
            ClassicalType::B => ClassicalType::C,
            ClassicalType::C => ClassicalType::B,
            ClassicalType::D => ClassicalType::D,
        }
    }
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of comparing two partitions (or two orbits) in a partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderRelation {
    Greater,
    Less,
    Equal,
    Incomparable,
}

impl fmt::Display for OrderRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OrderRelation::Greater => "Greater",
            OrderRelation::Less => "Less",
            OrderRelation::Equal => "Equal",
            OrderRelation::Incomparable => "Incomparable",
        };
        f.write_str(s)
    }
}

/// A partition: parts stored non-increasing with no zeros, so structural
/// equality is multiset equality.
///
/// The derived `Ord` is lexicographic on the part lists; it is used only to
/// return results in a canonical deterministic order and is unrelated to the
/// dominance order (see [`Partition::dominance`]).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize)]
#[serde(from = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl From<Vec<u32>> for Partition {
    fn from(parts: Vec<u32>) -> Self {
        Partition::new(parts)
    }
}

impl Partition {
    /// Builds a partition from arbitrary entries: zeros are dropped and the
    /// remaining parts are sorted non-increasing.
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The empty partition (size 0).
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The parts, non-increasing.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The i-th part, 1-based, with `part(i) = 0` beyond the length.
    /// The virtual zero at index `len() + 1` is how several operations treat
    /// "no part here".
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// The transpose (conjugate) partition: `p*_i = #{j : p_j >= i}`.
    /// An involution that preserves the size.
    pub fn transpose(&self) -> Partition {
        let cols = self.part(1) as usize;
        let mut parts = Vec::with_capacity(cols);
        for i in 1..=cols {
            parts.push(self.parts.iter().filter(|&&p| p as usize >= i).count() as u32);
        }
        // Column counts are automatically non-increasing and positive.
        Partition { parts }
    }

    /// Multiset union of parts, re-sorted non-increasing.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::new(self.parts.iter().chain(other.parts.iter()).copied())
    }

    /// Adds 1 to the largest part (`[1]` for the empty partition).
    pub fn plus(&self) -> Partition {
        let mut parts = self.parts.clone();
        if parts.is_empty() {
            parts.push(1);
        } else {
            parts[0] += 1;
        }
        Partition { parts }
    }

    /// Subtracts 1 from the smallest positive part, dropping it if it
    /// becomes 0. Undefined (rejected) on the empty partition.
    pub fn minus(&self) -> Result<Partition, DomainError> {
        let mut parts = self.parts.clone();
        match parts.last_mut() {
            None => return Err(DomainError::MinusOnEmpty),
            Some(last) => *last -= 1,
        }
        if parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Multiplicity of a given part value.
    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// True iff this partition is of classical type `x`: the size parity
    /// matches and every part of the forbidden parity (even parts for B and
    /// D, odd parts for C) occurs with even multiplicity.
    ///
    /// The empty partition is of types C and D (size 0).
    pub fn is_type(&self, x: ClassicalType) -> bool {
        if !x.admits_size(self.size()) {
            return false;
        }
        let forbidden = x.forbidden_part_parity();
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i];
            let mut run = 1;
            while i + run < self.parts.len() && self.parts[i + run] == v {
                run += 1;
            }
            if v % 2 == forbidden && run % 2 == 1 {
                return false;
            }
            i += run;
        }
        true
    }

    /// The X-collapse: the unique dominance-maximal partition of type `x`
    /// below this one. Identity when the partition is already of type `x`.
    ///
    /// Implemented by iterative repair: take the largest part of the
    /// forbidden parity with odd multiplicity, decrement its last occurrence,
    /// and increment the first later part that can absorb a unit without
    /// breaking monotonicity (possibly appending a new part 1). Each step
    /// strictly lowers the partition in dominance order; correctness is
    /// pinned to the exhaustive brute-force maximum in the test suites.
    pub fn collapse(&self, x: ClassicalType) -> Result<Partition, DomainError> {
        if !x.admits_size(self.size()) {
            return Err(DomainError::ParityMismatch {
                size: self.size(),
                ctype: x.name(),
            });
        }
        let forbidden = x.forbidden_part_parity();
        let mut parts = self.parts.clone();
        // Each repair step strictly decreases Σ i·p_i, so this terminates.
        loop {
            // Find the largest part value of forbidden parity with odd
            // multiplicity, and the index of its last occurrence.
            let mut offender: Option<usize> = None;
            let mut i = 0;
            while i < parts.len() {
                let v = parts[i];
                let mut run = 1;
                while i + run < parts.len() && parts[i + run] == v {
                    run += 1;
                }
                if v % 2 == forbidden && run % 2 == 1 {
                    offender = Some(i + run - 1);
                    break;
                }
                i += run;
            }
            let Some(j) = offender else {
                return Ok(Partition { parts });
            };
            let v = parts[j];
            parts[j] -= 1;
            // First later position whose value is < v - 1 absorbs the unit;
            // the virtual zero at the end absorbs it as a new part 1.
            let k = (j + 1..parts.len()).find(|&k| parts[k] < v - 1);
            match k {
                Some(k) => parts[k] += 1,
                None => parts.push(1),
            }
            if parts[j] == 0 {
                // v = 1 cannot offend (forbidden parity is even for B/D, and
                // for type C a largest odd offender of value 1 cannot exist
                // when the size parity matches), but stay canonical anyway.
                parts.retain(|&p| p > 0);
            }
        }
    }

    /// Dominance comparison of two partitions of the same size: compares all
    /// partial sums. `Greater` iff every partial sum of `self` is >= the
    /// corresponding one of `other` and at least one is strictly bigger.
    pub fn dominance(&self, other: &Partition) -> Result<OrderRelation, DomainError> {
        if self.size() != other.size() {
            return Err(DomainError::DominanceSizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let len = self.parts.len().max(other.parts.len());
        let (mut sum_l, mut sum_r) = (0u32, 0u32);
        let (mut some_gt, mut some_lt) = (false, false);
        for i in 1..=len {
            sum_l += self.part(i);
            sum_r += other.part(i);
            some_gt |= sum_l > sum_r;
            some_lt |= sum_l < sum_r;
        }
        Ok(match (some_gt, some_lt) {
            (false, false) => OrderRelation::Equal,
            (true, false) => OrderRelation::Greater,
            (false, true) => OrderRelation::Less,
            (true, true) => OrderRelation::Incomparable,
        })
    }

    /// True iff `self >= other` in dominance order.
    pub fn dominates(&self, other: &Partition) -> Result<bool, DomainError> {
        Ok(matches!(
            self.dominance(other)?,
            OrderRelation::Greater | OrderRelation::Equal
        ))
    }

    /// Barbasch–Vogan duality on partitions. The input must be of type `x`;
    /// the result is the dual-type partition:
    ///
    /// - type B input `p`:  `((p^-)_C)*`, of type C (size drops by 1);
    /// - type C input `p`:  `((p^+)_B)*`, of type B (size grows by 1);
    /// - type D input `p`:  `(p*)_D`, of type D (size preserved).
    ///
    /// The result is always special (fixed by the double duality).
    pub fn dbv(&self, x: ClassicalType) -> Result<(Partition, ClassicalType), DomainError> {
        if !self.is_type(x) {
            return Err(DomainError::NotOfType {
                partition: self.to_string(),
                ctype: x.name(),
            });
        }
        let result = match x {
            ClassicalType::B => self.minus()?.collapse(ClassicalType::C)?.transpose(),
            ClassicalType::C => self.plus().collapse(ClassicalType::B)?.transpose(),
            ClassicalType::D => self.transpose().collapse(ClassicalType::D)?,
        };
        Ok((result, x.dual()))
    }

    /// True iff the partition is special: applying the duality twice returns
    /// the partition itself (equivalently, it lies in the image of `dbv`).
    pub fn is_special(&self, x: ClassicalType) -> Result<bool, DomainError> {
        let (q, y) = self.dbv(x)?;
        let (double, _) = q.dbv(y)?;
        Ok(double == *self)
    }

    /// All partitions of `n`, in descending lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: current.clone(),
                });
                return;
            }
            let mut k = remaining.min(max);
            while k >= 1 {
                current.push(k);
                rec(remaining - k, k, current, out);
                current.pop();
                k -= 1;
            }
        }
        rec(n, n.max(1), &mut current, &mut out);
        out
    }

    /// All partitions of `n` of classical type `x` (empty when the parity of
    /// `n` does not match).
    pub fn all_of_type(n: u32, x: ClassicalType) -> Vec<Partition> {
        if !x.admits_size(n) {
            return Vec::new();
        }
        Partition::all_of(n)
            .into_iter()
            .filter(|p| p.is_type(x))
            .collect()
    }
}

impl fmt::Display for Partition {
    /// Canonical exponent form: `[5,3,1^3]`, `[]` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let mut i = 0;
        let mut first = true;
        while i < self.parts.len() {
            let v = self.parts[i];
            let mut run = 1;
            while i + run < self.parts.len() && self.parts[i + run] == v {
                run += 1;
            }
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if run == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{run}")?;
            }
            i += run;
        }
        write!(f, "]")
    }
}
