//! Parameter-level weak local Arthur packets: duality fibers inside the
//! L-parameter and Arthur-parameter families of a fixed infinitesimal
//! parameter, the open/closed extremes of such a family, and the
//! closure-order index sets of weak packets.
//!
//! Everything here is computed on parameters. The orbit attached to a
//! parameter lives on the dual side (partition type `C`, `B`, `D` for the
//! odd orthogonal, symplectic, even orthogonal families respectively), and
//! Barbasch–Vogan duality carries it to an orbit of the group's own type;
//! packets are cut out by equality with, or closure-order bounds against, a
//! target orbit there.

use serde::Serialize;

use crate::arthur::{arthur_witness, enumerate_apars, enumerate_lparams};
use crate::error::DomainError;
use crate::orbits::{dbv_orbit, is_very_even, NilpotentOrbit, VeryEvenLabel};
use crate::parameters::{ArthurParameter, GroupContext, InfinitesimalParameter, LParameter};
use crate::partitions::OrderRelation;

/// The parameter-level content of a weak packet: the infinitesimal
/// parameter, the target orbit `O' = d_BV(O^A)` of the anti-tempered seed,
/// both duality fibers over it, the closure-order index set, and whether
/// every L-parameter in the fiber is of Arthur type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakPacketReport {
    pub lambda: InfinitesimalParameter,
    pub target_orbit: NilpotentOrbit,
    pub lpar_fiber: Vec<LParameter>,
    pub apar_fiber: Vec<ArthurParameter>,
    pub leq_set: Vec<LParameter>,
    pub all_arthur: bool,
}

/// Wraps a dual-side partition as a nilpotent orbit, labeling very even
/// partitions with `I` (the formalism carries no finer datum that would
/// select a label, so the convention is fixed once and used consistently
/// on both sides of every comparison).
fn dual_side_orbit(
    partition: crate::partitions::Partition,
    g: &GroupContext,
) -> Result<NilpotentOrbit, DomainError> {
    let ctype = g.dual_partition_type();
    let label = is_very_even(&partition, ctype).then_some(VeryEvenLabel::I);
    NilpotentOrbit::new(partition, ctype, label)
}

/// The nilpotent orbit of `p(phi)` on the dual side of `g`.
pub fn parameter_orbit(
    phi: &LParameter,
    g: &GroupContext,
) -> Result<NilpotentOrbit, DomainError> {
    dual_side_orbit(phi.partition(), g)
}

/// The nilpotent orbit `O^A` of `p^A(psi)` on the dual side of `g`.
pub fn arthur_orbit(
    psi: &ArthurParameter,
    g: &GroupContext,
) -> Result<NilpotentOrbit, DomainError> {
    dual_side_orbit(psi.partition_a(), g)
}

/// The unique open (dominance-maximal partition) and closed (minimal)
/// members of the L-parameter family at `lambda`.
///
/// Errors when the family is empty, and when either extremum fails to be
/// attained by exactly one parameter — either because the extremal
/// partition is not comparable to all others or because two parameters
/// share it. When the open parameter is tempered, the closed one is the
/// fully split (all blocks of size 1) parameter.
pub fn open_closed(
    lambda: &InfinitesimalParameter,
    g: &GroupContext,
) -> Result<(LParameter, LParameter), DomainError> {
    let phis = enumerate_lparams(lambda, g)?;
    if phis.is_empty() {
        return Err(DomainError::EmptyParameterFamily {
            group: g.to_string(),
        });
    }
    let open = unique_extremum(&phis, true)?.clone();
    let closed = unique_extremum(&phis, false)?.clone();
    Ok((open, closed))
}

fn unique_extremum(phis: &[LParameter], maximal: bool) -> Result<&LParameter, DomainError> {
    let partitions: Vec<_> = phis.iter().map(LParameter::partition).collect();
    let mut found: Option<&LParameter> = None;
    'outer: for (i, phi) in phis.iter().enumerate() {
        for (j, q) in partitions.iter().enumerate() {
            if i == j {
                continue;
            }
            let rel = partitions[i].dominance(q)?;
            let ok = match rel {
                OrderRelation::Equal => false,
                OrderRelation::Greater => maximal,
                OrderRelation::Less => !maximal,
                OrderRelation::Incomparable => false,
            };
            if !ok {
                continue 'outer;
            }
        }
        if found.is_some() {
            // Unreachable with strict comparison against every other
            // member, but kept as a guard for the uniqueness contract.
            found = None;
            break;
        }
        found = Some(phi);
    }
    found.ok_or(DomainError::NonUniqueExtremum {
        which: if maximal { "maximum" } else { "minimum" },
    })
}

/// The L-parameters at `lambda` whose orbit maps to `oprime` under
/// Barbasch–Vogan duality. Empty when `oprime` is not such an image (in
/// particular over non-special orbits).
pub fn lpar_fiber(
    lambda: &InfinitesimalParameter,
    g: &GroupContext,
    oprime: &NilpotentOrbit,
) -> Result<Vec<LParameter>, DomainError> {
    let mut out = Vec::new();
    for phi in enumerate_lparams(lambda, g)? {
        if dbv_orbit(&parameter_orbit(&phi, g)?)? == *oprime {
            out.push(phi);
        }
    }
    Ok(out)
}

/// The Arthur parameters at `lambda` whose orbit `O^A` maps to `oprime`
/// under Barbasch–Vogan duality.
pub fn apar_fiber(
    lambda: &InfinitesimalParameter,
    g: &GroupContext,
    oprime: &NilpotentOrbit,
) -> Result<Vec<ArthurParameter>, DomainError> {
    let mut out = Vec::new();
    for psi in enumerate_apars(lambda, g)? {
        if dbv_orbit(&arthur_orbit(&psi, g)?)? == *oprime {
            out.push(psi);
        }
    }
    Ok(out)
}

/// The L-parameters at `lambda` whose dualized orbit lies in the closure
/// of `oprime` — the parameter index set of the weak packet attached to
/// `oprime`.
pub fn lpar_leq(
    lambda: &InfinitesimalParameter,
    g: &GroupContext,
    oprime: &NilpotentOrbit,
) -> Result<Vec<LParameter>, DomainError> {
    let mut out = Vec::new();
    for phi in enumerate_lparams(lambda, g)? {
        let image = dbv_orbit(&parameter_orbit(&phi, g)?)?;
        if oprime.closure_geq(&image)? {
            out.push(phi);
        }
    }
    Ok(out)
}

/// The weak packet report of an anti-tempered Arthur parameter `psi0`:
/// `lambda = lambda(psi0)`, target orbit `O' = d_BV(O^A)`, the two fibers
/// and the closure index set over `O'`, and the Arthur-type verdict for
/// the whole L-parameter fiber.
///
/// When the open parameter at `lambda` is tempered, order reversal forces
/// `leq_set == lpar_fiber`; the report carries both so the collapse is
/// observable.
pub fn weak_packet(
    psi0: &ArthurParameter,
    g: &GroupContext,
) -> Result<WeakPacketReport, DomainError> {
    if !psi0.classify().anti_tempered {
        return Err(DomainError::NotAntiTempered);
    }
    if let Some(reason) = psi0.validity_error(g) {
        return Err(DomainError::InvalidForGroup {
            group: g.to_string(),
            reason,
        });
    }
    let lambda = psi0.lambda();
    let target_orbit = dbv_orbit(&arthur_orbit(psi0, g)?)?;
    let lpar = lpar_fiber(&lambda, g, &target_orbit)?;
    let apar = apar_fiber(&lambda, g, &target_orbit)?;
    let leq = lpar_leq(&lambda, g, &target_orbit)?;
    let mut all_arthur = true;
    for phi in &lpar {
        if !arthur_witness(phi, g)?.is_arthur_type() {
            all_arthur = false;
            break;
        }
    }
    #[cfg(debug_assertions)]
    if let Ok((open, _)) = open_closed(&lambda, g) {
        if open.classify().tempered {
            debug_assert_eq!(leq, lpar, "order reversal must collapse <= to equality");
        }
    }
    Ok(WeakPacketReport {
        lambda,
        target_orbit,
        lpar_fiber: lpar,
        apar_fiber: apar,
        leq_set: leq,
        all_arthur,
    })
}

/// The Arthur parameters at `lambda` whose dualized orbit `d_BV(O^A)` lies
/// in the closure of `oprime` — the index set of the generalized weak
/// packet of `(oprime, lambda)`.
pub fn generalized_weak_packet(
    oprime: &NilpotentOrbit,
    lambda: &InfinitesimalParameter,
    g: &GroupContext,
) -> Result<Vec<ArthurParameter>, DomainError> {
    let mut out = Vec::new();
    for psi in enumerate_apars(lambda, g)? {
        let image = dbv_orbit(&arthur_orbit(&psi, g)?)?;
        if oprime.closure_geq(&image)? {
            out.push(psi);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parameters::{ASummand, GroupFamily, HalfInt, LSummand, Rho};
    use crate::partitions::{ClassicalType, Partition};

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

    fn orbit_b(parts: &[u32]) -> NilpotentOrbit {
        NilpotentOrbit::new(Partition::new(parts.to_vec()), ClassicalType::B, None).unwrap()
    }

    /// The running half-integral family of SO11: {±3/2 x2, ±1/2 x3}.
    fn lambda_star() -> InfinitesimalParameter {
        ap(&[(2, 3), (4, 1)]).lambda()
    }

    #[test]
    fn open_closed_examples() {
        // Open: the unique tempered member; closed: the fully split one.
        let (open, closed) = open_closed(&lambda_star(), &so(11)).unwrap();
        assert_eq!(open, lp(&[(0, 4), (0, 4), (0, 2)]));
        assert_eq!(open.partition(), Partition::new([4, 4, 2]));
        assert_eq!(
            closed,
            lp(&[(3, 1), (3, 1), (1, 1), (1, 1), (1, 1), (-1, 1), (-1, 1), (-1, 1), (-3, 1), (-3, 1)])
        );
        assert_eq!(closed.partition(), Partition::new([1; 10]));
        // Prop-style identity: closed = phi of the hatted tempered witness.
        let psi0 = arthur_witness(&open, &so(11)).unwrap().witness().unwrap().clone();
        assert_eq!(closed, psi0.hat().phi());

        let lam = ap(&[(1, 2)]).lambda();
        let (open, closed) = open_closed(&lam, &so(3)).unwrap();
        assert_eq!(open, lp(&[(0, 2)]));
        assert_eq!(closed, lp(&[(1, 1), (-1, 1)]));

        // {0} admits no parameter of SO3 at all.
        let lam = InfinitesimalParameter::new(vec![(triv(), HalfInt::ZERO)]);
        assert!(matches!(
            open_closed(&lam, &so(3)),
            Err(DomainError::EmptyParameterFamily { .. })
        ));
    }

    #[test]
    fn lpar_fiber_running_example() {
        let fiber = lpar_fiber(&lambda_star(), &so(11), &orbit_b(&[5, 3, 1, 1, 1])).unwrap();
        let phi_psi = ap(&[(2, 3), (4, 1)]).phi();
        let phi1 = lp(&[(0, 4), (0, 2), (0, 2), (3, 1), (-3, 1)]);
        let phi2 = lp(&[(0, 4), (2, 2), (-2, 2), (1, 1), (-1, 1)]);
        assert_eq!(fiber.len(), 3);
        for phi in [&phi_psi, &phi1, &phi2] {
            assert!(fiber.contains(phi), "missing {phi}");
        }
        // Over a non-special orbit the fiber is empty.
        let nonspecial = orbit_b(&[2, 2, 1, 1, 1, 1, 1, 1, 1]);
        assert!(!nonspecial.partition().is_special(ClassicalType::B).unwrap());
        assert!(lpar_fiber(&lambda_star(), &so(11), &nonspecial).unwrap().is_empty());
        // The hatted witness of the [3,3,1^4] member lands over [7,2,2].
        let fiber = lpar_fiber(&lambda_star(), &so(11), &orbit_b(&[7, 2, 2])).unwrap();
        let phi_hat1 = ap(&[(3, 2), (1, 4)]).phi();
        assert!(fiber.contains(&phi_hat1));
    }

    #[test]
    fn weak_packet_basic_so11() {
        // psi0 = 1:S1:S4 + three copies of 1:S1:S2 (basic, anti-tempered).
        let psi0 = ap(&[(1, 4), (1, 2), (1, 2), (1, 2)]);
        let report = weak_packet(&psi0, &so(11)).unwrap();
        assert_eq!(report.lambda, psi0.lambda());
        assert_eq!(report.target_orbit, orbit_b(&[5, 3, 1, 1, 1]));
        // The fiber at this lambda: the tempered parameter on [4,2,2,2] and
        // the one on [4,2,2,1,1]; both of Arthur type.
        let phi_a = lp(&[(0, 4), (0, 2), (0, 2), (0, 2)]);
        let phi_b = lp(&[(0, 4), (0, 2), (0, 2), (1, 1), (-1, 1)]);
        assert_eq!(report.lpar_fiber, vec![phi_a.clone(), phi_b.clone()]);
        assert!(report.all_arthur);
        // Order reversal: the closure condition collapses to equality.
        assert_eq!(report.leq_set, report.lpar_fiber);
        // The Arthur-side fiber, matched to the L-side by psi -> phi(hat psi).
        let psi_b = ap(&[(1, 4), (1, 2), (1, 2), (2, 1)]);
        assert_eq!(report.apar_fiber, vec![psi_b.clone(), psi0.clone()]);
        assert_eq!(psi0.hat().phi(), phi_a);
        assert_eq!(psi_b.hat().phi(), phi_b);
    }

    #[test]
    fn weak_packet_rank_one() {
        let psi0 = ap(&[(1, 2)]);
        let report = weak_packet(&psi0, &so(3)).unwrap();
        assert_eq!(report.target_orbit, orbit_b(&[1, 1, 1]));
        assert_eq!(report.lpar_fiber, vec![lp(&[(0, 2)])]);
        assert_eq!(report.apar_fiber, vec![ap(&[(1, 2)])]);
        assert_eq!(report.leq_set, report.lpar_fiber);
        assert!(report.all_arthur);
    }

    #[test]
    fn weak_packet_rejects_bad_seeds() {
        assert!(matches!(
            weak_packet(&ap(&[(2, 1)]), &so(3)),
            Err(DomainError::NotAntiTempered)
        ));
        assert!(matches!(
            weak_packet(&ap(&[(1, 2)]), &so(5)),
            Err(DomainError::InvalidForGroup { .. })
        ));
    }

    #[test]
    fn generalized_packet_example() {
        let lam = lambda_star();
        let g = so(11);
        let packet = generalized_weak_packet(&orbit_b(&[5, 3, 1, 1, 1]), &lam, &g).unwrap();
        // Contains the parameter dualizing exactly onto the orbit...
        assert!(packet.contains(&ap(&[(3, 2), (1, 4)])));
        // ...but neither of the Example parameters landing above it.
        let psi1 = ap(&[(2, 3), (4, 1)]);
        let psi2 = ap(&[(1, 2), (1, 4), (4, 1)]);
        assert!(!packet.contains(&psi1));
        assert!(!packet.contains(&psi2));
        assert_eq!(
            dbv_orbit(&arthur_orbit(&psi1, &g).unwrap()).unwrap(),
            orbit_b(&[7, 2, 2])
        );
        assert_eq!(
            dbv_orbit(&arthur_orbit(&psi2, &g).unwrap()).unwrap(),
            orbit_b(&[7, 1, 1, 1, 1])
        );

        // Against the maximal special orbit everything qualifies.
        let regular = orbit_b(&[11]);
        let all = generalized_weak_packet(&regular, &lam, &g).unwrap();
        assert_eq!(all, enumerate_apars(&lam, &g).unwrap());

        // Against the zero orbit nothing at this lambda does.
        let zero = orbit_b(&[1; 11]);
        assert!(generalized_weak_packet(&zero, &lam, &g).unwrap().is_empty());
    }

    #[test]
    fn closed_dual_covers_everything() {
        // With the target taken as the dual of the closed parameter's
        // orbit, the closure index set is the entire family.
        let lam = lambda_star();
        let g = so(11);
        let (_, closed) = open_closed(&lam, &g).unwrap();
        let target = dbv_orbit(&parameter_orbit(&closed, &g).unwrap()).unwrap();
        assert_eq!(target, orbit_b(&[11]));
        let leq = lpar_leq(&lam, &g, &target).unwrap();
        assert_eq!(leq, enumerate_lparams(&lam, &g).unwrap());
    }

    #[test]
    fn fibers_respect_orbit_context() {
        // A target of the wrong type or size never matches anything for
        // equality fibers, and closure comparison reports the mismatch.
        let lam = ap(&[(1, 2)]).lambda();
        let wrong = NilpotentOrbit::new(Partition::new([2]), ClassicalType::C, None).unwrap();
        assert!(lpar_fiber(&lam, &so(3), &wrong).unwrap().is_empty());
        assert!(matches!(
            lpar_leq(&lam, &so(3), &wrong),
            Err(DomainError::OrbitContextMismatch { .. })
        ));
    }
}
