//! L-parameters, local Arthur parameters and infinitesimal parameters for
//! the split classical groups SO_{2n+1}, Sp_{2n} and SO_{2n}, modeled as
//! multisets of summands.
//!
//! A Weil-group representation enters only as an opaque [`Rho`] label
//! carrying a name, a dimension, a self-duality kind, and an unramified
//! flag; all unboundedness lives in explicit half-integer twists. On top of
//! the labels:
//!
//! - [`LParameter`]: multiset of `rho|.|^x (x) S_a` summands,
//! - [`ArthurParameter`]: multiset of `rho (x) S_a (x) S_b` summands,
//! - [`InfinitesimalParameter`]: multiset of `(rho, exponent)` pairs,
//! - [`ArthurParameter::phi`] / [`LParameter::lambda`]: the two expansion
//!   formulas connecting them,
//! - [`ArthurParameter::hat`]: the involution swapping the two SL2 factors,
//! - the partition extractors `p(phi)`, `p^D(psi)`, `p^A(psi)`,
//! - [`GroupContext`] and the `is_valid_for` checks: dimension, self-dual
//!   multiset, and even multiplicity for constituents whose form opposes
//!   the dual group's form,
//! - [`ParamFlags`] classification and [`dll_data`] for unramified
//!   L-parameters.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::DomainError;
use crate::partitions::{ClassicalType, Partition};

/// An element of (1/2)Z stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct HalfInt {
    pub twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    pub fn from_twice(twice: i64) -> HalfInt {
        HalfInt { twice }
    }

    pub fn int(n: i64) -> HalfInt {
        HalfInt { twice: 2 * n }
    }

    pub fn is_zero(self) -> bool {
        self.twice == 0
    }

    pub fn plus(self, other: HalfInt) -> HalfInt {
        HalfInt {
            twice: self.twice + other.twice,
        }
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;

    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
    /// Integers plainly (`-1`, `0`, `2`), halves as fractions (`3/2`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Self-duality kind of a label: orthogonal, symplectic, or non-self-dual
/// with the partner label's name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SelfDuality {
    Orthogonal,
    Symplectic,
    NotSelfDual(String),
}

impl SelfDuality {
    pub fn is_self_dual(&self) -> bool {
        !matches!(self, SelfDuality::NotSelfDual(_))
    }

    /// The opposite self-dual kind (panics on a non-self-dual kind).
    fn flipped(&self) -> SelfDuality {
        match self {
            SelfDuality::Orthogonal => SelfDuality::Symplectic,
            SelfDuality::Symplectic => SelfDuality::Orthogonal,
            SelfDuality::NotSelfDual(_) => unreachable!("flip of a non-self-dual kind"),
        }
    }
}

/// An opaque bounded irreducible label standing in for a Weil-group
/// representation: a name, a dimension, a self-duality kind and an
/// unramified flag. One-dimensional labels cannot be symplectic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rho {
    name: String,
    dim: u32,
    duality: SelfDuality,
    unramified: bool,
}

impl Serialize for Rho {
    /// Labels serialize as their name; the declaration carries the rest.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.name.serialize(serializer)
    }
}

impl Rho {
    pub fn new(
        name: impl Into<String>,
        dim: u32,
        duality: SelfDuality,
        unramified: bool,
    ) -> Result<Rho, DomainError> {
        let name = name.into();
        if name.is_empty() {
            return Err(DomainError::InvalidLabel {
                name,
                reason: "label name must be nonempty".into(),
            });
        }
        if dim == 0 {
            return Err(DomainError::InvalidLabel {
                name,
                reason: "label dimension must be positive".into(),
            });
        }
        if dim == 1 && duality == SelfDuality::Symplectic {
            return Err(DomainError::InvalidLabel {
                name,
                reason: "a one-dimensional label cannot be symplectic".into(),
            });
        }
        if let SelfDuality::NotSelfDual(partner) = &duality {
            if *partner == name {
                return Err(DomainError::InvalidLabel {
                    name,
                    reason: "a non-self-dual label cannot partner itself".into(),
                });
            }
        }
        Ok(Rho {
            name,
            dim,
            duality,
            unramified,
        })
    }

    /// The trivial character: name `1`, dimension 1, orthogonal, unramified.
    pub fn trivial() -> Rho {
        Rho {
            name: "1".into(),
            dim: 1,
            duality: SelfDuality::Orthogonal,
            unramified: true,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn duality(&self) -> &SelfDuality {
        &self.duality
    }

    pub fn is_unramified(&self) -> bool {
        self.unramified
    }

    pub fn is_self_dual(&self) -> bool {
        self.duality.is_self_dual()
    }

    pub fn is_trivial(&self) -> bool {
        self.name == "1" && self.dim == 1 && self.duality == SelfDuality::Orthogonal
    }

    /// The dual label: itself when self-dual, otherwise the partner label
    /// (same dimension and ramification, names swapped), so that partnering
    /// is symmetric by construction.
    pub fn dual(&self) -> Rho {
        match &self.duality {
            SelfDuality::NotSelfDual(partner) => Rho {
                name: partner.clone(),
                dim: self.dim,
                duality: SelfDuality::NotSelfDual(self.name.clone()),
                unramified: self.unramified,
            },
            _ => self.clone(),
        }
    }
}

/// One L-parameter summand `rho|.|^twist (x) S_a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LSummand {
    pub rho: Rho,
    pub twist: HalfInt,
    pub a: u32,
}

impl LSummand {
    pub fn new(rho: Rho, twist: HalfInt, a: u32) -> LSummand {
        assert!(a >= 1, "S_a block size must be positive");
        LSummand { rho, twist, a }
    }

    pub fn dim(&self) -> u32 {
        self.rho.dim() * self.a
    }

    /// The dual summand `rho^v|.|^{-twist} (x) S_a`.
    pub fn dual(&self) -> LSummand {
        LSummand {
            rho: self.rho.dual(),
            twist: -self.twist,
            a: self.a,
        }
    }
}

impl Ord for LSummand {
    /// Canonical order: by label, then descending block size, then
    /// descending twist — the order summands are displayed in.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rho
            .cmp(&other.rho)
            .then(other.a.cmp(&self.a))
            .then(other.twist.cmp(&self.twist))
    }
}

impl PartialOrd for LSummand {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LSummand {
    /// `1:S4`, `1[1/2]:S2` — the twist bracket is omitted when zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rho.name())?;
        if !self.twist.is_zero() {
            write!(f, "[{}]", self.twist)?;
        }
        write!(f, ":S{}", self.a)
    }
}

/// One Arthur-parameter summand `rho (x) S_a (x) S_b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ASummand {
    pub rho: Rho,
    pub a: u32,
    pub b: u32,
}

impl ASummand {
    pub fn new(rho: Rho, a: u32, b: u32) -> ASummand {
        assert!(a >= 1 && b >= 1, "S_a and S_b block sizes must be positive");
        ASummand { rho, a, b }
    }

    pub fn dim(&self) -> u32 {
        self.rho.dim() * self.a * self.b
    }

    pub fn dual(&self) -> ASummand {
        ASummand {
            rho: self.rho.dual(),
            a: self.a,
            b: self.b,
        }
    }
}

impl Ord for ASummand {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rho
            .cmp(&other.rho)
            .then(other.a.cmp(&self.a))
            .then(other.b.cmp(&self.b))
    }
}

impl PartialOrd for ASummand {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ASummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:S{}:S{}", self.rho.name(), self.a, self.b)
    }
}

/// An L-parameter: a multiset of [`LSummand`]s, stored canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LParameter {
    summands: Vec<LSummand>,
}

/// A local Arthur parameter: a multiset of [`ASummand`]s, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArthurParameter {
    summands: Vec<ASummand>,
}

/// An infinitesimal parameter: a multiset of `(rho, exponent)` pairs, each
/// label counting as a single entry regardless of its dimension.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InfinitesimalParameter {
    exps: Vec<(Rho, HalfInt)>,
}

impl Serialize for LParameter {
    /// A parameter serializes as the bare array of its summands.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.summands.serialize(serializer)
    }
}

impl Serialize for ArthurParameter {
    /// A parameter serializes as the bare array of its summands.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.summands.serialize(serializer)
    }
}

impl Serialize for InfinitesimalParameter {
    /// Serializes as the bare array of `[label, exponent]` pairs.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.exps.serialize(serializer)
    }
}

/// Classification flags shared by L-parameters and Arthur parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamFlags {
    pub tempered: bool,
    pub anti_tempered: bool,
    pub basic: bool,
    pub unramified: bool,
    pub real_infinitesimal: bool,
    pub self_dual: bool,
}

/// The family of a split classical group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum GroupFamily {
    SOOdd,
    Sp,
    SOEven,
}

/// A split classical group SO_{2n+1}, Sp_{2n} or SO_{2n}, determined by
/// family and rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupContext {
    pub family: GroupFamily,
    pub rank: u32,
}

impl Serialize for GroupContext {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_string().serialize(serializer)
    }
}

impl GroupContext {
    pub fn new(family: GroupFamily, rank: u32) -> GroupContext {
        GroupContext { family, rank }
    }

    /// The dimension N of the dual-group standard representation:
    /// 2n+1 for Sp_{2n}, 2n for SO_{2n+1} and SO_{2n}.
    pub fn cap_n(&self) -> u32 {
        match self.family {
            GroupFamily::Sp => 2 * self.rank + 1,
            GroupFamily::SOOdd | GroupFamily::SOEven => 2 * self.rank,
        }
    }

    /// Partition type of the nilpotent orbits of the dual Lie algebra:
    /// C for SO_{2n+1} (dual sp_{2n}), B for Sp_{2n} (dual so_{2n+1}),
    /// D for SO_{2n} (dual so_{2n}).
    pub fn dual_partition_type(&self) -> ClassicalType {
        match self.family {
            GroupFamily::SOOdd => ClassicalType::C,
            GroupFamily::Sp => ClassicalType::B,
            GroupFamily::SOEven => ClassicalType::D,
        }
    }

    /// The self-duality kind an even-multiplicity constraint applies to:
    /// constituents of this kind oppose the dual group's form. The dual
    /// group of SO_{2n+1} is symplectic, so orthogonal constituents are
    /// constrained; the dual groups of Sp_{2n} and SO_{2n} are orthogonal,
    /// so symplectic constituents are constrained.
    fn opposing_kind(&self) -> SelfDuality {
        match self.family {
            GroupFamily::SOOdd => SelfDuality::Orthogonal,
            GroupFamily::Sp | GroupFamily::SOEven => SelfDuality::Symplectic,
        }
    }
}

impl fmt::Display for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            GroupFamily::SOOdd => write!(f, "SO{}", 2 * self.rank + 1),
            GroupFamily::Sp => write!(f, "Sp{}", 2 * self.rank),
            GroupFamily::SOEven => write!(f, "SO{}", 2 * self.rank),
        }
    }
}

/// Counts multiplicities of the (sorted) items in a run-length scan.
fn runs<T: Eq>(items: &[T]) -> Vec<(&T, usize)> {
    let mut out: Vec<(&T, usize)> = Vec::new();
    for item in items {
        match out.last_mut() {
            Some((prev, count)) if *prev == item => *count += 1,
            _ => out.push((item, 1)),
        }
    }
    out
}

impl LParameter {
    pub fn new(mut summands: Vec<LSummand>) -> LParameter {
        summands.sort();
        LParameter { summands }
    }

    pub fn empty() -> LParameter {
        LParameter {
            summands: Vec::new(),
        }
    }

    pub fn summands(&self) -> &[LSummand] {
        &self.summands
    }

    /// Total dimension sum dim(rho)·a.
    pub fn dim(&self) -> u32 {
        self.summands.iter().map(LSummand::dim).sum()
    }

    /// True iff the summand multiset is fixed by
    /// `(rho, x, a) -> (rho^v, -x, a)`.
    pub fn is_self_dual(&self) -> bool {
        let dual = LParameter::new(self.summands.iter().map(LSummand::dual).collect());
        *self == dual
    }

    /// The infinitesimal parameter: each `(rho, x, a)` contributes the `a`
    /// exponents `x + (a-1)/2 - k`, `k = 0..a-1`, on the same label.
    pub fn lambda(&self) -> InfinitesimalParameter {
        let mut exps = Vec::new();
        for s in &self.summands {
            for k in 0..s.a as i64 {
                let twice = s.twist.twice + (s.a as i64 - 1) - 2 * k;
                exps.push((s.rho.clone(), HalfInt::from_twice(twice)));
            }
        }
        InfinitesimalParameter::new(exps)
    }

    /// The underlying partition `p(phi) = |_|_i [a_i^{dim rho_i}]`.
    pub fn partition(&self) -> Partition {
        Partition::new(
            self.summands
                .iter()
                .flat_map(|s| std::iter::repeat(s.a).take(s.rho.dim() as usize)),
        )
    }

    /// Validity as a parameter of `g`: total dimension `N(g)`, self-dual
    /// multiset, and every zero-twist constituent on a self-dual label
    /// whose kind (label kind, flipped iff `a` is even) opposes the dual
    /// group's form must occur with even multiplicity.
    pub fn is_valid_for(&self, g: &GroupContext) -> bool {
        self.validity_error(g).is_none()
    }

    /// Why the parameter fails to be one of `g`, or `None` when it is.
    pub fn validity_error(&self, g: &GroupContext) -> Option<String> {
        if self.dim() != g.cap_n() {
            return Some(format!(
                "total dimension {} differs from N = {}",
                self.dim(),
                g.cap_n()
            ));
        }
        if !self.is_self_dual() {
            return Some("the summand multiset is not self-dual".into());
        }
        let opposing = g.opposing_kind();
        for (s, mult) in runs(&self.summands) {
            let constrained = s.twist.is_zero()
                && s.rho.is_self_dual()
                && constituent_kind(s.rho.duality(), s.a % 2 == 0) == opposing;
            if constrained && mult % 2 != 0 {
                return Some(format!(
                    "constituent {s} opposes the dual group's form but has odd multiplicity {mult}"
                ));
            }
        }
        None
    }

    pub fn classify(&self) -> ParamFlags {
        let unramified = self.summands.iter().all(|s| s.rho.is_unramified());
        let anti_tempered = self.summands.iter().all(|s| s.a == 1);
        ParamFlags {
            tempered: self.summands.iter().all(|s| s.twist.is_zero()),
            anti_tempered,
            basic: anti_tempered && self.summands.iter().all(|s| s.rho.is_trivial()),
            unramified,
            real_infinitesimal: unramified,
            self_dual: self.is_self_dual(),
        }
    }
}

impl ArthurParameter {
    pub fn new(mut summands: Vec<ASummand>) -> ArthurParameter {
        summands.sort();
        ArthurParameter { summands }
    }

    pub fn summands(&self) -> &[ASummand] {
        &self.summands
    }

    /// Total dimension sum dim(rho)·a·b.
    pub fn dim(&self) -> u32 {
        self.summands.iter().map(ASummand::dim).sum()
    }

    pub fn is_self_dual(&self) -> bool {
        let dual = ArthurParameter::new(self.summands.iter().map(ASummand::dual).collect());
        *self == dual
    }

    /// The associated L-parameter: each `(rho, a, b)` expands to the `b`
    /// summands `rho|.|^{(b-1)/2-k} (x) S_a`, `k = 0..b-1`.
    pub fn phi(&self) -> LParameter {
        let mut out = Vec::new();
        for s in &self.summands {
            for k in 0..s.b as i64 {
                let twist = HalfInt::from_twice((s.b as i64 - 1) - 2 * k);
                out.push(LSummand::new(s.rho.clone(), twist, s.a));
            }
        }
        LParameter::new(out)
    }

    /// The infinitesimal parameter of the associated L-parameter.
    pub fn lambda(&self) -> InfinitesimalParameter {
        self.phi().lambda()
    }

    /// Swaps the two SL2 factors in every summand; an involution.
    pub fn hat(&self) -> ArthurParameter {
        ArthurParameter::new(
            self.summands
                .iter()
                .map(|s| ASummand::new(s.rho.clone(), s.b, s.a))
                .collect(),
        )
    }

    /// The partition `p^D(psi) = |_|_j [a_j^{dim(rho_j)·b_j}]` recording the
    /// first SL2 factor.
    pub fn partition_d(&self) -> Partition {
        Partition::new(
            self.summands
                .iter()
                .flat_map(|s| std::iter::repeat(s.a).take((s.rho.dim() * s.b) as usize)),
        )
    }

    /// The partition `p^A(psi) = |_|_j [b_j^{dim(rho_j)·a_j}]` recording the
    /// second SL2 factor.
    pub fn partition_a(&self) -> Partition {
        Partition::new(
            self.summands
                .iter()
                .flat_map(|s| std::iter::repeat(s.b).take((s.rho.dim() * s.a) as usize)),
        )
    }

    /// Validity as an Arthur parameter of `g`: total dimension `N(g)`,
    /// self-dual multiset, and every constituent on a self-dual label whose
    /// kind (label kind, flipped iff exactly one of `a`, `b` is even)
    /// opposes the dual group's form must occur with even multiplicity.
    pub fn is_valid_for(&self, g: &GroupContext) -> bool {
        self.validity_error(g).is_none()
    }

    /// Why the parameter fails to be one of `g`, or `None` when it is.
    pub fn validity_error(&self, g: &GroupContext) -> Option<String> {
        if self.dim() != g.cap_n() {
            return Some(format!(
                "total dimension {} differs from N = {}",
                self.dim(),
                g.cap_n()
            ));
        }
        if !self.is_self_dual() {
            return Some("the summand multiset is not self-dual".into());
        }
        let opposing = g.opposing_kind();
        for (s, mult) in runs(&self.summands) {
            let flip = (s.a % 2 == 0) != (s.b % 2 == 0);
            let constrained =
                s.rho.is_self_dual() && constituent_kind(s.rho.duality(), flip) == opposing;
            if constrained && mult % 2 != 0 {
                return Some(format!(
                    "constituent {s} opposes the dual group's form but has odd multiplicity {mult}"
                ));
            }
        }
        None
    }

    pub fn classify(&self) -> ParamFlags {
        let unramified = self.summands.iter().all(|s| s.rho.is_unramified());
        let anti_tempered = self.summands.iter().all(|s| s.a == 1);
        ParamFlags {
            tempered: self.summands.iter().all(|s| s.b == 1),
            anti_tempered,
            basic: anti_tempered && self.summands.iter().all(|s| s.rho.is_trivial()),
            unramified,
            real_infinitesimal: unramified,
            self_dual: self.is_self_dual(),
        }
    }
}

/// Kind of a self-dual constituent: the label's kind, flipped or not.
fn constituent_kind(duality: &SelfDuality, flip: bool) -> SelfDuality {
    if flip {
        duality.flipped()
    } else {
        duality.clone()
    }
}

impl InfinitesimalParameter {
    pub fn new(mut exps: Vec<(Rho, HalfInt)>) -> InfinitesimalParameter {
        exps.sort_by(|(r1, x1), (r2, x2)| r1.cmp(r2).then(x2.cmp(x1)));
        InfinitesimalParameter { exps }
    }

    pub fn exps(&self) -> &[(Rho, HalfInt)] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    /// Total dimension sum dim(rho) over all entries.
    pub fn dim(&self) -> u32 {
        self.exps.iter().map(|(r, _)| r.dim()).sum()
    }

    /// True iff the multiset is fixed by `(rho, x) -> (rho^v, -x)` — the
    /// closure property every lambda of a self-dual L-parameter has.
    pub fn is_self_dual_closed(&self) -> bool {
        let dual = InfinitesimalParameter::new(
            self.exps
                .iter()
                .map(|(r, x)| (r.dual(), -*x))
                .collect(),
        );
        *self == dual
    }
}

impl fmt::Display for LParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        display_joined(f, &self.summands)
    }
}

impl fmt::Display for ArthurParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        display_joined(f, &self.summands)
    }
}

impl fmt::Display for InfinitesimalParameter {
    /// Entries `rho[x]` joined by ` + `; the bracket is always present.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "0");
        }
        for (i, (rho, x)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}[{}]", rho.name(), x)?;
        }
        Ok(())
    }
}

/// Writes summands joined by ` + `, or `0` for an empty parameter.
fn display_joined<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    if items.is_empty() {
        return write!(f, "0");
    }
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            write!(f, " + ")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

/// The data of an unramified L-parameter as a pair (semisimple part,
/// nilpotent part): the multiset of q-power exponents of the semisimple
/// element (one per label entry, equal to the lambda exponents) and the
/// partition of the nilpotent element's orbit. The group fixes the ambient
/// dual group but does not change the returned data. Ramified input is
/// rejected.
pub fn dll_data(
    phi: &LParameter,
    _group: &GroupContext,
) -> Result<(InfinitesimalParameter, Partition), DomainError> {
    if let Some(s) = phi.summands().iter().find(|s| !s.rho.is_unramified()) {
        return Err(DomainError::RamifiedLabel {
            label: s.rho.name().to_string(),
        });
    }
    Ok((phi.lambda(), phi.partition()))
}
