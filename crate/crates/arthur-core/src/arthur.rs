//! The Arthur-type decision procedure and parameter enumeration at a fixed
//! infinitesimal parameter.
//!
//! An L-parameter is of Arthur type when it equals `phi(psi)` for some
//! Arthur parameter `psi`. Because every `psi`-summand `rho (x) S_a (x) S_b`
//! expands to a twist interval centered at 0, the twist multiset of an
//! Arthur-type `phi` at each `(rho class, a)` decomposes into centered
//! step-1 chains — and that decomposition is unique (the maximal remaining
//! exponent always forces its chain), so a greedy extraction decides the
//! question and constructs the unique candidate witness. The module
//! provides:
//!
//! - [`arthur_witness`]: the three-way decision (witness / decomposes over
//!   GL but invalid for the group / not of Arthur type),
//! - [`construct_psi_special_case`]: the direct witness formula attached to
//!   a move sequence on a partition,
//! - [`enumerate_lparams`] / [`enumerate_apars`]: all valid L-parameters,
//!   resp. Arthur parameters, with a given infinitesimal parameter,
//! - [`IsotypicBlock`]: the per-label-class view of an L-parameter's twist
//!   exponents.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::DomainError;
use crate::fibers::MoveSequence;
use crate::parameters::{
    ASummand, ArthurParameter, GroupContext, HalfInt, InfinitesimalParameter, LParameter,
    LSummand, Rho,
};
use crate::partitions::Partition;

/// Outcome of the Arthur-type decision for an L-parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArthurTypeOutcome {
    /// The unique Arthur parameter whose associated L-parameter is the
    /// input, itself valid for the group.
    Witness(ArthurParameter),
    /// The twist multisets decompose into centered chains, so the input is
    /// `phi(psi)` for this unique `psi` over the general linear group — but
    /// `psi` is not a valid Arthur parameter of the group.
    GlOnly(ArthurParameter),
    /// Some twist multiset admits no centered-chain decomposition: the
    /// input is not `phi(psi)` for any `psi`.
    NotArthurType,
}

impl ArthurTypeOutcome {
    /// The witness when the parameter is of Arthur type for the group.
    pub fn witness(&self) -> Option<&ArthurParameter> {
        match self {
            ArthurTypeOutcome::Witness(psi) => Some(psi),
            _ => None,
        }
    }

    pub fn is_arthur_type(&self) -> bool {
        matches!(self, ArthurTypeOutcome::Witness(_))
    }
}

/// The exponent data of one label class of an L-parameter: the class
/// representative and, for each block size `a`, the multiset of twists of
/// all summands `rho|.|^x (x) S_a` with `rho` in the class (both members of
/// a non-self-dual pair contribute to the same block).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotypicBlock {
    rep: Rho,
    per_a: BTreeMap<u32, Vec<HalfInt>>,
}

impl IsotypicBlock {
    pub fn rep(&self) -> &Rho {
        &self.rep
    }

    pub fn per_a(&self) -> &BTreeMap<u32, Vec<HalfInt>> {
        &self.per_a
    }

    /// True iff every block's twist multiset is fixed by negation — the
    /// shape every self-dual L-parameter has, class by class.
    pub fn is_negation_symmetric(&self) -> bool {
        self.per_a.values().all(|twists| {
            let mut negated: Vec<HalfInt> = twists.iter().map(|x| -*x).collect();
            negated.sort();
            let mut sorted = twists.clone();
            sorted.sort();
            negated == sorted
        })
    }
}

/// The canonical representative of a label's duality class: the label
/// itself when self-dual, otherwise the lexicographically smaller of the
/// pair.
fn class_rep(rho: &Rho) -> Rho {
    let dual = rho.dual();
    if dual < *rho {
        dual
    } else {
        rho.clone()
    }
}

/// Splits an L-parameter into its label-class blocks.
pub fn isotypic_blocks(phi: &LParameter) -> Vec<IsotypicBlock> {
    let mut blocks: BTreeMap<Rho, BTreeMap<u32, Vec<HalfInt>>> = BTreeMap::new();
    for s in phi.summands() {
        blocks
            .entry(class_rep(&s.rho))
            .or_default()
            .entry(s.a)
            .or_default()
            .push(s.twist);
    }
    blocks
        .into_iter()
        .map(|(rep, per_a)| IsotypicBlock { rep, per_a })
        .collect()
}

/// Greedy centered-chain extraction: repeatedly removes the chain
/// `{x_max, x_max - 1, ..., -x_max}` forced by the maximal remaining
/// exponent, returning the chain tops, or `None` when an element is
/// missing (the decomposition into centered chains is unique, so greedy
/// failure is definitive).
fn centered_chains(twists: &[HalfInt]) -> Option<Vec<HalfInt>> {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for x in twists {
        *counts.entry(x.twice).or_default() += 1;
    }
    let mut tops = Vec::new();
    while let Some((&top, _)) = counts.iter().next_back() {
        if top < 0 {
            return None;
        }
        let mut t = top;
        while t >= -top {
            let c = counts.get_mut(&t)?;
            *c -= 1;
            if *c == 0 {
                counts.remove(&t);
            }
            t -= 2;
        }
        tops.push(HalfInt::from_twice(top));
    }
    Some(tops)
}

/// Decides whether `phi` is of Arthur type for `g` and constructs the
/// unique candidate witness.
///
/// The input must be self-dual and valid for `g`; violations are rejected
/// as errors, distinct from the in-domain `NotArthurType` outcome. For each
/// label class and block size `a`, the twist multiset of the class
/// representative's summands is decomposed into centered chains; a chain
/// topped by `x` yields the summand `(rho, a, b = 2x + 1)`, mirrored onto
/// the partner label for a non-self-dual class (self-duality of `phi`
/// forces the partner side to decompose identically, negated). If every
/// block decomposes, the resulting `psi` satisfies `psi.phi() == phi` and
/// is the only Arthur parameter that does; it is then checked against `g`.
pub fn arthur_witness(
    phi: &LParameter,
    g: &GroupContext,
) -> Result<ArthurTypeOutcome, DomainError> {
    if !phi.is_self_dual() {
        return Err(DomainError::NotSelfDual);
    }
    if let Some(reason) = phi.validity_error(g) {
        return Err(DomainError::InvalidForGroup {
            group: g.to_string(),
            reason,
        });
    }
    // Group twists by (class representative, a), keeping only summands
    // whose label IS the representative: for a non-self-dual pair the
    // partner side is the forced mirror image.
    let mut rep_blocks: BTreeMap<(Rho, u32), Vec<HalfInt>> = BTreeMap::new();
    for s in phi.summands() {
        if class_rep(&s.rho) == s.rho {
            rep_blocks
                .entry((s.rho.clone(), s.a))
                .or_default()
                .push(s.twist);
        }
    }
    let mut summands: Vec<ASummand> = Vec::new();
    for ((rho, a), twists) in rep_blocks {
        let Some(tops) = centered_chains(&twists) else {
            return Ok(ArthurTypeOutcome::NotArthurType);
        };
        for top in tops {
            let b = (top.twice + 1) as u32;
            summands.push(ASummand::new(rho.clone(), a, b));
            if !rho.is_self_dual() {
                summands.push(ASummand::new(rho.dual(), a, b));
            }
        }
    }
    let psi = ArthurParameter::new(summands);
    debug_assert_eq!(psi.phi(), *phi, "witness must reproduce its input");
    if psi.is_valid_for(g) {
        Ok(ArthurTypeOutcome::Witness(psi))
    } else {
        Ok(ArthurTypeOutcome::GlOnly(psi))
    }
}

/// The direct witness formula attached to a move sequence: for a
/// one-dimensional self-dual label `rho`, a partition `p` of length `r`
/// and valid moves `{(x_i, y_i)}` with pairwise distinct positions,
///
/// `psi = (+)_{j in J} rho (x) S_{p_j} (x) S_1
///        (+)_{i} rho (x) S_{p_{x_i} - 1} (x) S_2`
///
/// where `J` omits every `x_i` and every in-range `y_i`. The associated
/// L-parameter's partition is exactly `apply_moves(p, moves)`, and its
/// infinitesimal parameter equals that of the block-diagonal tempered
/// parameter on `p` — the witness exhibiting each fiber member as Arthur
/// type.
pub fn construct_psi_special_case(
    p: &Partition,
    moves: &MoveSequence,
    rho: &Rho,
) -> Result<ArthurParameter, DomainError> {
    if rho.dim() != 1 || !rho.is_self_dual() {
        return Err(DomainError::LabelNotOneDimSelfDual {
            name: rho.name().to_string(),
            dim: rho.dim(),
        });
    }
    moves.validate(p)?;
    let mut used: BTreeSet<usize> = BTreeSet::new();
    for &(x, y) in moves.pairs() {
        if !used.insert(x) || !used.insert(y) {
            return Err(DomainError::InvalidMoveSequence {
                condition: "disjointness",
                detail: "the witness formula needs pairwise distinct move positions".into(),
            });
        }
    }
    let r = p.len();
    let mut summands = Vec::new();
    for j in 1..=r {
        if !used.contains(&j) {
            summands.push(ASummand::new(rho.clone(), p.part(j), 1));
        }
    }
    for &(x, _) in moves.pairs() {
        summands.push(ASummand::new(rho.clone(), p.part(x) - 1, 2));
    }
    Ok(ArthurParameter::new(summands))
}

/// A step-1 exponent segment, recorded by its top exponent and length;
/// it corresponds to the L-summand with twist centered in the segment.
type Segment = (i64, u32);

/// All decompositions of an exponent multiset into step-1 segments.
/// The segment containing the maximal exponent must be topped by it, so
/// the recursion branches only on that segment's length; decompositions
/// are canonicalized (sorted) and deduplicated.
fn segment_decompositions(twists: &[HalfInt]) -> BTreeSet<Vec<Segment>> {
    fn rec(counts: &mut BTreeMap<i64, usize>, current: &mut Vec<Segment>, out: &mut BTreeSet<Vec<Segment>>) {
        let Some((&top, _)) = counts.iter().next_back() else {
            let mut done = current.clone();
            done.sort();
            out.insert(done);
            return;
        };
        let mut bottom = top;
        let mut len = 0u32;
        while let Some(c) = counts.get_mut(&bottom) {
            *c -= 1;
            if *c == 0 {
                counts.remove(&bottom);
            }
            len += 1;
            current.push((top, len));
            rec(counts, current, out);
            current.pop();
            bottom -= 2;
        }
        // Restore the consumed prefix [bottom + 2, top].
        let mut t = bottom + 2;
        while t <= top {
            *counts.entry(t).or_default() += 1;
            t += 2;
        }
    }
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for x in twists {
        *counts.entry(x.twice).or_default() += 1;
    }
    let mut out = BTreeSet::new();
    rec(&mut counts, &mut Vec::new(), &mut out);
    out
}

/// True iff the multiset of segments is fixed by negation (the mirror of a
/// segment topped by `t` with length `a` is topped by `2(a-1) - t`... in
/// twice-units: `-(t - 2(a-1))`).
fn segments_symmetric(segments: &[Segment]) -> bool {
    let mut mirrored: Vec<Segment> = segments
        .iter()
        .map(|&(top, a)| (2 * (a as i64 - 1) - top, a))
        .collect();
    mirrored.sort();
    mirrored == *segments
}

/// The L-summands encoded by a segment decomposition on a label.
fn segments_to_summands(rho: &Rho, segments: &[Segment]) -> Vec<LSummand> {
    segments
        .iter()
        .map(|&(top, a)| {
            let twist = HalfInt::from_twice(top - (a as i64 - 1));
            LSummand::new(rho.clone(), twist, a)
        })
        .collect()
}

/// All L-parameters of `g` with infinitesimal parameter `lambda`,
/// canonically ordered without duplicates.
///
/// `lambda` must be closed under `(rho, x) -> (rho^v, -x)`. Per label
/// class, the exponent multiset on the class representative is decomposed
/// into segments in every possible way; a non-self-dual class mirrors each
/// decomposition onto the partner label, while a self-dual class keeps the
/// negation-symmetric decompositions. Products across classes are filtered
/// by group validity.
pub fn enumerate_lparams(
    lambda: &InfinitesimalParameter,
    g: &GroupContext,
) -> Result<Vec<LParameter>, DomainError> {
    if !lambda.is_self_dual_closed() {
        return Err(DomainError::LambdaNotSelfDual);
    }
    // Exponents on each class representative.
    let mut rep_exps: BTreeMap<Rho, Vec<HalfInt>> = BTreeMap::new();
    for (rho, x) in lambda.exps() {
        if class_rep(rho) == *rho {
            rep_exps.entry(rho.clone()).or_default().push(*x);
        }
    }
    // Per class: every admissible summand list.
    let mut per_class: Vec<Vec<Vec<LSummand>>> = Vec::new();
    for (rho, exps) in rep_exps {
        let mut options: Vec<Vec<LSummand>> = Vec::new();
        for segments in segment_decompositions(&exps) {
            if rho.is_self_dual() {
                if !segments_symmetric(&segments) {
                    continue;
                }
                options.push(segments_to_summands(&rho, &segments));
            } else {
                let mut summands = segments_to_summands(&rho, &segments);
                let partner = rho.dual();
                summands.extend(segments.iter().map(|&(top, a)| {
                    let twist = HalfInt::from_twice(-(top - (a as i64 - 1)));
                    LSummand::new(partner.clone(), twist, a)
                }));
                options.push(summands);
            }
        }
        per_class.push(options);
    }
    // Cartesian product across classes.
    let mut combos: Vec<Vec<LSummand>> = vec![Vec::new()];
    for options in per_class {
        let mut next = Vec::new();
        for combo in &combos {
            for option in &options {
                let mut extended = combo.clone();
                extended.extend(option.iter().cloned());
                next.push(extended);
            }
        }
        combos = next;
    }
    let set: BTreeSet<LParameter> = combos
        .into_iter()
        .map(LParameter::new)
        .filter(|phi| phi.is_valid_for(g))
        .collect();
    Ok(set.into_iter().collect())
}

/// All Arthur parameters of `g` with infinitesimal parameter `lambda`:
/// the witnesses of the Arthur-type members of the L-parameter family
/// (complete because `psi -> phi(psi)` is injective and lands in the
/// family).
pub fn enumerate_apars(
    lambda: &InfinitesimalParameter,
    g: &GroupContext,
) -> Result<Vec<ArthurParameter>, DomainError> {
    let mut out = BTreeSet::new();
    for phi in enumerate_lparams(lambda, g)? {
        if let ArthurTypeOutcome::Witness(psi) = arthur_witness(&phi, g)? {
            debug_assert_eq!(psi.phi(), phi);
            out.insert(psi);
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parameters::{GroupFamily, SelfDuality};

    fn triv() -> Rho {
        Rho::trivial()
    }

    fn lp(summands: &[(i64, u32)]) -> LParameter {
        LParameter::new(
            summands
                .iter()
                .map(|&(twice, a)| LSummand::new(triv(), HalfInt::from_twice(twice), a))
                .collect(),
        )
    }

    fn ap(summands: &[(u32, u32)]) -> ArthurParameter {
        ArthurParameter::new(
            summands
                .iter()
                .map(|&(a, b)| ASummand::new(triv(), a, b))
                .collect(),
        )
    }

    fn so(odd_n: u32) -> GroupContext {
        GroupContext::new(GroupFamily::SOOdd, odd_n / 2)
    }

    #[test]
    fn witness_of_phi_psi() {
        // phi of 1:S2:S3 + 1:S4:S1, which must be recovered exactly.
        let phi = ap(&[(2, 3), (4, 1)]).phi();
        let outcome = arthur_witness(&phi, &so(11)).unwrap();
        assert_eq!(outcome.witness(), Some(&ap(&[(2, 3), (4, 1)])));
    }

    #[test]
    fn witness_rejects_phi1_and_phi2() {
        // phi_1 = S4 + S2 + S2 + S1[3/2] + S1[-3/2]: the a=1 chain from 3/2
        // requires 1/2, which is absent.
        let phi1 = lp(&[(0, 4), (0, 2), (0, 2), (3, 1), (-3, 1)]);
        assert_eq!(arthur_witness(&phi1, &so(11)).unwrap(), ArthurTypeOutcome::NotArthurType);
        // phi_2 = S4 + S2[1] + S2[-1] + S1[1/2] + S1[-1/2]: the a=2 chain
        // from 1 requires 0, which is absent.
        let phi2 = lp(&[(0, 4), (2, 2), (-2, 2), (1, 1), (-1, 1)]);
        assert_eq!(arthur_witness(&phi2, &so(11)).unwrap(), ArthurTypeOutcome::NotArthurType);
    }

    #[test]
    fn witness_of_tempered_is_b_one() {
        let phi0 = lp(&[(0, 4), (0, 4), (0, 2)]);
        let outcome = arthur_witness(&phi0, &so(11)).unwrap();
        assert_eq!(outcome.witness(), Some(&ap(&[(4, 1), (4, 1), (2, 1)])));
    }

    #[test]
    fn witness_distinguishes_gl_only() {
        // Decomposes into chains {1,0,-1} and {0}, but the resulting psi
        // has the odd-multiplicity orthogonal constituent 1:S1:S3 and is
        // not a parameter of SO5, although phi itself is.
        let phi = lp(&[(2, 1), (0, 1), (0, 1), (-2, 1)]);
        assert!(phi.is_valid_for(&so(5)));
        let outcome = arthur_witness(&phi, &so(5)).unwrap();
        assert_eq!(outcome, ArthurTypeOutcome::GlOnly(ap(&[(1, 3), (1, 1)])));
        assert!(!outcome.is_arthur_type());
    }

    #[test]
    fn witness_rejects_bad_inputs() {
        let skew = lp(&[(1, 1)]);
        assert!(matches!(
            arthur_witness(&skew, &so(3)),
            Err(DomainError::NotSelfDual)
        ));
        let phi = ap(&[(2, 3), (4, 1)]).phi();
        assert!(matches!(
            arthur_witness(&phi, &so(9)),
            Err(DomainError::InvalidForGroup { .. })
        ));
    }

    #[test]
    fn witness_handles_nsd_pairs() {
        let tau = Rho::new("t", 1, SelfDuality::NotSelfDual("t^".into()), true).unwrap();
        // psi = (t + t^) (x) S1 (x) S3 expands to the centered chains on
        // both labels; dim 6 = N(SO7), and non-self-dual labels carry no
        // multiplicity constraint.
        let psi = ArthurParameter::new(vec![
            ASummand::new(tau.clone(), 1, 3),
            ASummand::new(tau.dual(), 1, 3),
        ]);
        let phi = psi.phi();
        let outcome = arthur_witness(&phi, &so(7)).unwrap();
        assert_eq!(outcome.witness(), Some(&psi));
    }

    #[test]
    fn isotypic_block_symmetry() {
        let phi = ap(&[(2, 3), (4, 1)]).phi();
        let blocks = isotypic_blocks(&phi);
        assert_eq!(blocks.len(), 1);
        assert!(blocks[0].is_negation_symmetric());
        assert_eq!(blocks[0].per_a().len(), 2);

        let skew = lp(&[(2, 2), (0, 1)]);
        assert!(!isotypic_blocks(&skew)[0].is_negation_symmetric());
    }

    #[test]
    fn special_case_construction() {
        let p = Partition::new([4, 2, 2, 2]);
        // One move at value 2 (positions 4 -> virtual 5): J = {1,2,3}.
        let psi =
            construct_psi_special_case(&p, &MoveSequence::new(vec![(4, 5)]), &triv()).unwrap();
        assert_eq!(psi, ap(&[(4, 1), (2, 1), (2, 1), (1, 2)]));
        assert_eq!(psi.phi().partition(), Partition::new([4, 2, 2, 1, 1]));

        // Empty move sequence: the tempered block-diagonal witness.
        let psi = construct_psi_special_case(&p, &MoveSequence::empty(), &triv()).unwrap();
        assert_eq!(psi, ap(&[(4, 1), (2, 1), (2, 1), (2, 1)]));

        // One move at value 4 (positions 1 -> 2): J = {3,4}.
        let psi =
            construct_psi_special_case(&p, &MoveSequence::new(vec![(1, 2)]), &triv()).unwrap();
        assert_eq!(psi, ap(&[(3, 2), (2, 1), (2, 1)]));
        assert_eq!(psi.phi().partition(), Partition::new([3, 3, 2, 2]));

        // The infinitesimal parameter matches the tempered one on p.
        let tempered = ap(&[(4, 1), (2, 1), (2, 1), (2, 1)]);
        assert_eq!(psi.lambda(), tempered.lambda());
    }

    #[test]
    fn special_case_rejects_bad_inputs() {
        let p = Partition::new([4, 3, 2, 1]);
        let sympl = Rho::new("s", 2, SelfDuality::Symplectic, true).unwrap();
        assert!(matches!(
            construct_psi_special_case(&p, &MoveSequence::empty(), &sympl),
            Err(DomainError::LabelNotOneDimSelfDual { .. })
        ));
        // Valid as a move sequence, but positions overlap at 3.
        let overlapping = MoveSequence::new(vec![(1, 3), (3, 5)]);
        assert!(overlapping.validate(&p).is_ok());
        assert!(matches!(
            construct_psi_special_case(&p, &overlapping, &triv()),
            Err(DomainError::InvalidMoveSequence { condition: "disjointness", .. })
        ));
        // Invalid sequences are rejected by the underlying validation.
        assert!(construct_psi_special_case(&p, &MoveSequence::new(vec![(2, 5)]), &triv()).is_err());
    }

    #[test]
    fn enumerate_rank_one() {
        // lambda = {0}: the only candidate 1:S1 is orthogonal of odd
        // multiplicity, invalid for the symplectic dual group.
        let lam = InfinitesimalParameter::new(vec![(triv(), HalfInt::ZERO)]);
        assert!(enumerate_lparams(&lam, &so(3)).unwrap().is_empty());

        // lambda = {1/2, -1/2}: the full block and the split pair.
        let lam = InfinitesimalParameter::new(vec![
            (triv(), HalfInt::from_twice(1)),
            (triv(), HalfInt::from_twice(-1)),
        ]);
        let phis = enumerate_lparams(&lam, &so(3)).unwrap();
        assert_eq!(
            phis,
            vec![
                lp(&[(0, 2)]),
                lp(&[(1, 1), (-1, 1)]),
            ]
        );
        let psis = enumerate_apars(&lam, &so(3)).unwrap();
        assert_eq!(psis, vec![ap(&[(2, 1)]), ap(&[(1, 2)])]);

        // Non-closed lambda is rejected.
        let skew = InfinitesimalParameter::new(vec![(triv(), HalfInt::from_twice(1))]);
        assert!(matches!(
            enumerate_lparams(&skew, &so(3)),
            Err(DomainError::LambdaNotSelfDual)
        ));
    }

    #[test]
    fn enumerate_the_running_family() {
        // lambda* = {±3/2 x2, ±1/2 x3} over SO11.
        let lam = ap(&[(2, 3), (4, 1)]).lambda();
        let phis = enumerate_lparams(&lam, &so(11)).unwrap();
        let phi_psi = ap(&[(2, 3), (4, 1)]).phi();
        let phi1 = lp(&[(0, 4), (0, 2), (0, 2), (3, 1), (-3, 1)]);
        let phi2 = lp(&[(0, 4), (2, 2), (-2, 2), (1, 1), (-1, 1)]);
        let phi0 = lp(&[(0, 4), (0, 4), (0, 2)]);
        for expected in [&phi_psi, &phi1, &phi2, &phi0] {
            assert!(phis.contains(expected), "missing {expected}");
        }
        // Every member shares the infinitesimal parameter and is valid.
        for phi in &phis {
            assert_eq!(phi.lambda(), lam);
            assert!(phi.is_valid_for(&so(11)));
        }

        let psis = enumerate_apars(&lam, &so(11)).unwrap();
        let psi1 = ap(&[(2, 3), (4, 1)]);
        let psi2 = ap(&[(1, 2), (1, 4), (4, 1)]);
        let hat_psi0 = ap(&[(1, 4), (1, 4), (1, 2)]);
        for expected in [&psi1, &psi2, &hat_psi0] {
            assert!(psis.contains(expected), "missing {expected}");
        }
        for psi in &psis {
            assert_eq!(psi.lambda(), lam);
            assert!(psis.contains(&psi.clone()));
        }
        // Witness soundness across the family.
        for psi in &psis {
            assert_eq!(
                arthur_witness(&psi.phi(), &so(11)).unwrap().witness(),
                Some(psi)
            );
        }
    }
}
