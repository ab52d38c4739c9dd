//! Brute-force reference implementations ("oracles") for the fast
//! algorithms in this crate. Each one recomputes a result by exhaustive
//! search from definitions, with no shared logic beyond the primitive
//! operations being checked against, so agreement is meaningful evidence.
//! They are exercised by the test suite and by the command line's
//! `--oracle` flag.

use std::collections::BTreeMap;

use crate::error::DomainError;
use crate::parameters::{
    ASummand, ArthurParameter, GroupContext, HalfInt, InfinitesimalParameter, LParameter,
    LSummand, Rho,
};
use crate::partitions::{ClassicalType, Partition};

/// The dominance-greatest type-`x` partition below `p`, by scanning every
/// type-`x` partition of the same size — the defining property of the
/// collapse. `None` when no candidate dominates all others (the collapse
/// theorem says this cannot happen; the oracle keeps the honest option).
pub fn max_type_minorant(p: &Partition, x: ClassicalType) -> Option<Partition> {
    let candidates: Vec<Partition> = Partition::all_of_type(p.size(), x)
        .into_iter()
        .filter(|q| p.dominates(q).unwrap_or(false))
        .collect();
    // Dominance implies lexicographic order, so the maximum, if it exists,
    // is the lexicographically greatest candidate.
    let best = candidates.iter().max()?.clone();
    candidates
        .iter()
        .all(|q| best.dominates(q).unwrap_or(false))
        .then_some(best)
}

/// The source type and size whose duality map lands in type-`x_target`
/// partitions of size `target_size`.
pub fn dbv_source(target_size: u32, x_target: ClassicalType) -> (ClassicalType, u32) {
    match x_target {
        ClassicalType::B => (ClassicalType::C, target_size.saturating_sub(1)),
        ClassicalType::C => (ClassicalType::B, target_size + 1),
        ClassicalType::D => (ClassicalType::D, target_size),
    }
}

/// The full duality preimage of `target` by scanning every partition of
/// the source type, paired with the source type.
pub fn dbv_preimage(
    target: &Partition,
    x_target: ClassicalType,
) -> Result<Vec<(Partition, ClassicalType)>, DomainError> {
    if !target.is_type(x_target) {
        return Err(DomainError::NotOfType {
            partition: target.to_string(),
            ctype: x_target.name(),
        });
    }
    let (source, source_size) = dbv_source(target.size(), x_target);
    let mut out = Vec::new();
    for q in Partition::all_of_type(source_size, source) {
        if q.dbv(source)?.0 == *target {
            out.push((q, source));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Exact covers of an exponent multiset by candidate blocks: every
/// multiset of candidates (chosen with non-decreasing index) whose
/// exponent contributions add up to exactly `lambda`.
fn exact_covers<C: Clone>(
    candidates: &[(C, Vec<(Rho, HalfInt)>)],
    lambda: &InfinitesimalParameter,
) -> Vec<Vec<C>> {
    type Counts = BTreeMap<(Rho, i64), usize>;
    fn counts_of(exps: &[(Rho, HalfInt)]) -> Counts {
        let mut counts = Counts::new();
        for (rho, x) in exps {
            *counts.entry((rho.clone(), x.twice)).or_default() += 1;
        }
        counts
    }
    fn subtract(remaining: &mut Counts, needed: &Counts) -> bool {
        for (key, &n) in needed {
            if remaining.get(key).copied().unwrap_or(0) < n {
                return false;
            }
        }
        for (key, &n) in needed {
            let slot = remaining.get_mut(key).unwrap();
            *slot -= n;
            if *slot == 0 {
                remaining.remove(key);
            }
        }
        true
    }
    fn restore(remaining: &mut Counts, needed: &Counts) {
        for (key, &n) in needed {
            *remaining.entry(key.clone()).or_default() += n;
        }
    }
    fn rec<C: Clone>(
        candidates: &[(C, Counts)],
        from: usize,
        remaining: &mut Counts,
        current: &mut Vec<C>,
        out: &mut Vec<Vec<C>>,
    ) {
        if remaining.is_empty() {
            out.push(current.clone());
            return;
        }
        for i in from..candidates.len() {
            if subtract(remaining, &candidates[i].1) {
                current.push(candidates[i].0.clone());
                rec(candidates, i, remaining, current, out);
                current.pop();
                restore(remaining, &candidates[i].1);
            }
        }
    }
    let prepared: Vec<(C, Counts)> = candidates
        .iter()
        .map(|(c, exps)| (c.clone(), counts_of(exps)))
        .collect();
    let mut remaining = counts_of(lambda.exps());
    let mut out = Vec::new();
    rec(&prepared, 0, &mut remaining, &mut Vec::new(), &mut out);
    out
}

fn distinct_rhos(lambda: &InfinitesimalParameter) -> Vec<Rho> {
    let mut rhos: Vec<Rho> = lambda.exps().iter().map(|(rho, _)| rho.clone()).collect();
    rhos.sort();
    rhos.dedup();
    rhos
}

/// The exponents contributed to `lambda` by `rho|.|^twist (x) S_a`.
fn lsummand_exps(rho: &Rho, twist: HalfInt, a: u32) -> Vec<(Rho, HalfInt)> {
    (0..a as i64)
        .map(|k| (rho.clone(), HalfInt::from_twice(twist.twice + (a as i64 - 1) - 2 * k)))
        .collect()
}

/// All L-parameters of `g` with infinitesimal parameter `lambda`, by
/// exact-cover search over every block that fits inside `lambda`,
/// followed by the validity filter.
pub fn lparams_direct(lambda: &InfinitesimalParameter, g: &GroupContext) -> Vec<LParameter> {
    let mut per_rho_twices: BTreeMap<Rho, Vec<i64>> = BTreeMap::new();
    for (rho, x) in lambda.exps() {
        per_rho_twices.entry(rho.clone()).or_default().push(x.twice);
    }
    let mut candidates: Vec<(LSummand, Vec<(Rho, HalfInt)>)> = Vec::new();
    for rho in distinct_rhos(lambda) {
        let twices = &per_rho_twices[&rho];
        for a in 1..=twices.len() as u32 {
            for &top in twices.iter() {
                let twist = HalfInt::from_twice(top - (a as i64 - 1));
                let summand = LSummand::new(rho.clone(), twist, a);
                let exps = lsummand_exps(&rho, twist, a);
                if fits(&exps, &per_rho_twices) {
                    candidates.push((summand, exps));
                }
            }
        }
    }
    candidates.sort_by(|x, y| x.0.cmp(&y.0));
    candidates.dedup_by(|x, y| x.0 == y.0);
    let mut out: Vec<LParameter> = exact_covers(&candidates, lambda)
        .into_iter()
        .map(LParameter::new)
        .filter(|phi| phi.is_valid_for(g))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Whether a block's exponents appear in the ambient multiset (a cheap
/// candidate filter; exactness is re-checked by the cover search).
fn fits(exps: &[(Rho, HalfInt)], per_rho_twices: &BTreeMap<Rho, Vec<i64>>) -> bool {
    let mut needed: BTreeMap<(&Rho, i64), usize> = BTreeMap::new();
    for (rho, x) in exps {
        *needed.entry((rho, x.twice)).or_default() += 1;
    }
    needed.into_iter().all(|((rho, twice), n)| {
        per_rho_twices
            .get(rho)
            .map(|twices| twices.iter().filter(|&&t| t == twice).count() >= n)
            .unwrap_or(false)
    })
}

/// All Arthur parameters of `g` with infinitesimal parameter `lambda`, by
/// exact-cover search over every `rho (x) S_a (x) S_b` whose expansion
/// fits inside `lambda` — independent of the witness machinery.
pub fn apars_direct(lambda: &InfinitesimalParameter, g: &GroupContext) -> Vec<ArthurParameter> {
    let mut per_rho_twices: BTreeMap<Rho, Vec<i64>> = BTreeMap::new();
    for (rho, x) in lambda.exps() {
        per_rho_twices.entry(rho.clone()).or_default().push(x.twice);
    }
    let mut candidates: Vec<(ASummand, Vec<(Rho, HalfInt)>)> = Vec::new();
    for rho in distinct_rhos(lambda) {
        let count = per_rho_twices[&rho].len() as u32;
        for a in 1..=count {
            for b in 1..=count / a {
                // Exponents {i + j : i centered of length a, j of length b}.
                let mut exps = Vec::new();
                for k in 0..b as i64 {
                    let twist = HalfInt::from_twice((b as i64 - 1) - 2 * k);
                    exps.extend(lsummand_exps(&rho, twist, a));
                }
                if fits(&exps, &per_rho_twices) {
                    candidates.push((ASummand::new(rho.clone(), a, b), exps));
                }
            }
        }
    }
    candidates.sort_by(|x, y| x.0.cmp(&y.0));
    let mut out: Vec<ArthurParameter> = exact_covers(&candidates, lambda)
        .into_iter()
        .map(ArthurParameter::new)
        .filter(|psi| psi.is_valid_for(g))
        .collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parameters::GroupFamily;

    fn triv() -> Rho {
        Rho::trivial()
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
    fn minorant_matches_collapse_examples() {
        let p = Partition::new([5, 3, 1, 1]);
        assert_eq!(
            max_type_minorant(&p, ClassicalType::C).unwrap(),
            p.collapse(ClassicalType::C).unwrap()
        );
        let p = Partition::new([4, 3, 1, 1, 1, 1]);
        assert_eq!(
            max_type_minorant(&p, ClassicalType::B).unwrap(),
            p.collapse(ClassicalType::B).unwrap()
        );
    }

    #[test]
    fn preimage_matches_running_example() {
        let target = Partition::new([5, 3, 1, 1, 1]);
        let preimage = dbv_preimage(&target, ClassicalType::B).unwrap();
        assert_eq!(
            preimage,
            vec![
                (Partition::new([4, 2, 2, 1, 1]), ClassicalType::C),
                (Partition::new([4, 2, 2, 2]), ClassicalType::C),
            ]
        );
        // Wrong-type targets are rejected.
        assert!(dbv_preimage(&target, ClassicalType::C).is_err());
    }

    #[test]
    fn direct_enumerations_match_small_families() {
        let lam = ap(&[(1, 2)]).lambda();
        let g = so(3);
        let phis = lparams_direct(&lam, &g);
        assert_eq!(phis, crate::arthur::enumerate_lparams(&lam, &g).unwrap());
        assert_eq!(phis.len(), 2);
        let psis = apars_direct(&lam, &g);
        assert_eq!(psis, crate::arthur::enumerate_apars(&lam, &g).unwrap());
        assert_eq!(psis.len(), 2);

        let lam = ap(&[(2, 3), (4, 1)]).lambda();
        let g = so(11);
        assert_eq!(
            lparams_direct(&lam, &g),
            crate::arthur::enumerate_lparams(&lam, &g).unwrap()
        );
        assert_eq!(
            apars_direct(&lam, &g),
            crate::arthur::enumerate_apars(&lam, &g).unwrap()
        );
    }
}
