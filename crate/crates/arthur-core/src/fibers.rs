//! Duality fibers: the full preimage of a special partition or orbit under
//! Barbasch–Vogan duality.
//!
//! Every member of the fiber over a special partition lies below the
//! distinguished maximal member `p_max = d_BV(p_special)` and is reachable
//! from it by a sequence of elementary "box moves". A move takes a pair of
//! positions `(x, y)` with `p_x = p_{x+1}+1 = ... = p_{y-1}+1 = p_y + 2`
//! (reading a virtual zero just past the end) and replaces the the pair of
//! parts `{p_x, p_y}` by `{p_x - 1, p_y + 1}`. The module provides:
//!
//! - [`MoveSequence`] and [`apply_moves`]: validated application of a batch
//!   of moves with strictly decreasing moved values,
//! - [`enumerate_move_sequences`]: all valid move sequences on a partition,
//!   deduplicated by resulting partition,
//! - [`fiber_partitions`] / [`fiber_orbits`]: generate candidates from
//!   `p_max` by moves, then keep exactly those whose duality lands back on
//!   the given special partition or orbit.

use serde::{Deserialize, Serialize};

use crate::error::DomainError;
use crate::orbits::{dbv_orbit, is_very_even, NilpotentOrbit};
use crate::partitions::{ClassicalType, Partition};

/// A sequence of box moves `(x_i, y_i)` on an ambient partition of length
/// `r`, 1-based, with `y = r + 1` addressing the virtual zero past the end.
///
/// Validity (checked by [`MoveSequence::validate`]) requires for each pair
/// `1 <= x_i < y_i <= r+1`, the value chain
/// `p_{x_i} = p_{x_i+1}+1 = ... = p_{y_i-1}+1 = p_{y_i}+2`, and strictly
/// decreasing moved values `p_{x_1} > p_{x_2} > ...`. A later move may reuse
/// a position as its `x` that an earlier move used as its `y`; application
/// is simultaneous, so such a position nets to its original value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MoveSequence {
    pairs: Vec<(usize, usize)>,
}

impl MoveSequence {
    pub fn new(pairs: Vec<(usize, usize)>) -> Self {
        MoveSequence { pairs }
    }

    pub fn empty() -> Self {
        MoveSequence { pairs: Vec::new() }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Checks the three validity conditions against the ambient partition:
    /// (a) index bounds, (b) the value chain at each pair, (c) strictly
    /// decreasing moved values across the sequence.
    pub fn validate(&self, p: &Partition) -> Result<(), DomainError> {
        let r = p.len();
        let mut prev_value: Option<u32> = None;
        for &(x, y) in &self.pairs {
            if !(1 <= x && x < y && y <= r + 1) {
                return Err(DomainError::InvalidMoveSequence {
                    condition: "a",
                    detail: format!("pair ({x},{y}) out of bounds for length {r}"),
                });
            }
            let v = p.part(x);
            if v < 2 {
                return Err(DomainError::InvalidMoveSequence {
                    condition: "b",
                    detail: format!("pair ({x},{y}): part {v} at x cannot drop below a part plus 2"),
                });
            }
            for z in x + 1..y {
                if p.part(z) != v - 1 {
                    return Err(DomainError::InvalidMoveSequence {
                        condition: "b",
                        detail: format!(
                            "pair ({x},{y}): expected {} at position {z}, found {}",
                            v - 1,
                            p.part(z)
                        ),
                    });
                }
            }
            if p.part(y) != v - 2 {
                return Err(DomainError::InvalidMoveSequence {
                    condition: "b",
                    detail: format!(
                        "pair ({x},{y}): expected {} at position {y}, found {}",
                        v - 2,
                        p.part(y)
                    ),
                });
            }
            if let Some(prev) = prev_value {
                if v >= prev {
                    return Err(DomainError::InvalidMoveSequence {
                        condition: "c",
                        detail: format!("moved values must strictly decrease: {prev} then {v}"),
                    });
                }
            }
            prev_value = Some(v);
        }
        Ok(())
    }
}

/// Applies a validated move sequence to `p`: simultaneously, every pair
/// `(x, y)` decrements the part at `x` and increments the part at `y`
/// (creating a new part 1 at the virtual position). Rejects invalid
/// sequences naming the violated condition. The size is preserved.
pub fn apply_moves(p: &Partition, moves: &MoveSequence) -> Result<Partition, DomainError> {
    moves.validate(p)?;
    let r = p.len();
    let mut delta = vec![0i64; r + 1];
    for &(x, y) in moves.pairs() {
        delta[x - 1] -= 1;
        delta[y - 1] += 1;
    }
    let mut parts: Vec<u32> = (1..=r)
        .map(|i| (p.part(i) as i64 + delta[i - 1]) as u32)
        .collect();
    if delta[r] > 0 {
        // Only one move can address the virtual zero (its value is forced
        // to 2, and values strictly decrease), so this is a single part 1.
        parts.push(1);
    }
    Ok(Partition::new(parts))
}

/// The candidate move for a distinct part value `v >= 2`, when one exists:
/// `x` is the last position holding `v` (earlier positions of the run fail
/// the value chain) and `y` is the first position past the run of `v - 1`s,
/// which must hold `v - 2` (the virtual zero when `v = 2`).
fn candidate_move(p: &Partition, v: u32) -> Option<(usize, usize)> {
    debug_assert!(v >= 2);
    let r = p.len();
    let x = (1..=r).rev().find(|&i| p.part(i) == v)?;
    let mut y = x + 1;
    while y <= r && p.part(y) == v - 1 {
        y += 1;
    }
    (p.part(y) == v - 2).then_some((x, y))
}

/// All valid move sequences on `p`, deduplicated by resulting partition and
/// returned in a canonical order (sorted by their pair lists).
///
/// Every valid sequence moves each distinct value at most once (values
/// strictly decrease), and for a given value only one `(x, y)` pair passes
/// the value-chain condition; so the sequences are exactly the subsets of
/// the per-value candidate moves, taken in decreasing value order. Distinct
/// subsets can collide after re-sorting only through position reuse, which
/// the dedup by result absorbs.
pub fn enumerate_move_sequences(p: &Partition) -> Vec<MoveSequence> {
    let mut values: Vec<u32> = Vec::new();
    for &v in p.parts() {
        if values.last() != Some(&v) {
            values.push(v);
        }
    }
    let candidates: Vec<(usize, usize)> = values
        .into_iter()
        .filter(|&v| v >= 2)
        .filter_map(|v| candidate_move(p, v))
        .collect();
    let mut by_result: std::collections::BTreeMap<Partition, MoveSequence> =
        std::collections::BTreeMap::new();
    // Subsets in binary-counting order; bit i = candidate i (decreasing
    // value), so each selected subset is already in condition-(c) order.
    for mask in 0u64..(1u64 << candidates.len()) {
        let pairs: Vec<(usize, usize)> = candidates
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &m)| m)
            .collect();
        let seq = MoveSequence::new(pairs);
        let result = apply_moves(p, &seq).expect("candidate subsets are valid sequences");
        by_result.entry(result).or_insert(seq);
    }
    let mut out: Vec<MoveSequence> = by_result.into_values().collect();
    out.sort();
    out
}

/// The full duality fiber over a special partition: all partitions of the
/// source type (the dual of `x_target`) whose Barbasch–Vogan dual is
/// `p_special`, paired with that source type.
///
/// Candidates are generated by applying every valid move sequence to
/// `p_max = d_BV(p_special)` and filtering by source type and by recomputing
/// the duality; the brute-force oracle in the test suites pins completeness.
/// The fiber is empty iff `p_special` is not special. Errors when
/// `p_special` is not of type `x_target`.
pub fn fiber_partitions(
    p_special: &Partition,
    x_target: ClassicalType,
) -> Result<Vec<(Partition, ClassicalType)>, DomainError> {
    if !p_special.is_type(x_target) {
        return Err(DomainError::NotOfType {
            partition: p_special.to_string(),
            ctype: x_target.name(),
        });
    }
    if !p_special.is_special(x_target)? {
        return Ok(Vec::new());
    }
    let (p_max, source_type) = p_special.dbv(x_target)?;
    let mut fiber: Vec<Partition> = Vec::new();
    for seq in enumerate_move_sequences(&p_max) {
        let q = apply_moves(&p_max, &seq)?;
        if q.is_type(source_type) && q.dbv(source_type)?.0 == *p_special {
            fiber.push(q);
        }
    }
    fiber.sort();
    fiber.dedup();
    Ok(fiber.into_iter().map(|q| (q, source_type)).collect())
}

/// The duality fiber at the orbit level. For a special orbit whose
/// partition is not very even, the partition fiber lifts verbatim (no
/// member can be very even, since very even partitions dualize to very
/// even partitions). For a very even special orbit the fiber is the
/// singleton containing its own dual, with the label rule applied.
/// A non-special orbit has an empty fiber.
pub fn fiber_orbits(o_special: &NilpotentOrbit) -> Result<Vec<NilpotentOrbit>, DomainError> {
    let p = o_special.partition();
    let x = o_special.ctype();
    if !p.is_special(x)? {
        return Ok(Vec::new());
    }
    if is_very_even(p, x) {
        return Ok(vec![dbv_orbit(o_special)?]);
    }
    let mut out = Vec::new();
    for (q, source_type) in fiber_partitions(p, x)? {
        out.push(NilpotentOrbit::new(q, source_type, None)?);
    }
    Ok(out)
}
