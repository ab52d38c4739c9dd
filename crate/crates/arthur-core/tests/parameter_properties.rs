//! Property-based invariants: text round-trips for every printable value,
//! algebraic laws of the parameter calculus, and duality laws on random
//! partitions larger than the exhaustive sweeps reach.

use proptest::prelude::*;

use arthur_core::arthur::arthur_witness;
use arthur_core::orbits::{is_very_even, NilpotentOrbit, VeryEvenLabel};
use arthur_core::parameters::{
    ASummand, ArthurParameter, GroupContext, GroupFamily, HalfInt, LParameter, LSummand, Rho,
    SelfDuality,
};
use arthur_core::partitions::{ClassicalType, Partition};
use arthur_core::text::{
    parse_aparameter, parse_halfint, parse_lambda, parse_lparameter, parse_orbit,
    parse_partition, LabelRegistry,
};

/// A fixed pool of labels covering every duality kind and small dimensions.
fn label_pool() -> Vec<Rho> {
    vec![
        Rho::trivial(),
        Rho::new("eta", 1, SelfDuality::Orthogonal, true).unwrap(),
        Rho::new("w", 3, SelfDuality::Orthogonal, true).unwrap(),
        Rho::new("sig", 2, SelfDuality::Symplectic, true).unwrap(),
        Rho::new("tau", 2, SelfDuality::NotSelfDual("tau^".into()), false).unwrap(),
        Rho::new("tau^", 2, SelfDuality::NotSelfDual("tau".into()), false).unwrap(),
    ]
}

fn registry() -> LabelRegistry {
    let mut reg = LabelRegistry::default();
    for rho in label_pool() {
        reg.register(&rho);
    }
    reg
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1u32..=12, 0..=10).prop_map(Partition::new)
}

fn arb_halfint() -> impl Strategy<Value = HalfInt> {
    (-9i64..=9).prop_map(HalfInt::from_twice)
}

fn arb_rho() -> impl Strategy<Value = Rho> {
    (0..label_pool().len()).prop_map(|i| label_pool()[i].clone())
}

fn arb_lsummand() -> impl Strategy<Value = LSummand> {
    (arb_rho(), arb_halfint(), 1u32..=5).prop_map(|(rho, twist, a)| LSummand::new(rho, twist, a))
}

fn arb_asummand() -> impl Strategy<Value = ASummand> {
    (arb_rho(), 1u32..=4, 1u32..=4).prop_map(|(rho, a, b)| ASummand::new(rho, a, b))
}

fn arb_lparameter() -> impl Strategy<Value = LParameter> {
    proptest::collection::vec(arb_lsummand(), 0..=6).prop_map(LParameter::new)
}

fn arb_aparameter() -> impl Strategy<Value = ArthurParameter> {
    proptest::collection::vec(arb_asummand(), 0..=5).prop_map(ArthurParameter::new)
}

/// An orbit with an admissible type and, when forced, a very-even label.
fn arb_orbit() -> impl Strategy<Value = NilpotentOrbit> {
    (arb_partition(), 0usize..3, proptest::bool::ANY).prop_filter_map(
        "partition must admit the type",
        |(p, i, second)| {
            let x = [ClassicalType::B, ClassicalType::C, ClassicalType::D][i];
            if !p.is_type(x) {
                return None;
            }
            let label = is_very_even(&p, x).then_some(if second {
                VeryEvenLabel::II
            } else {
                VeryEvenLabel::I
            });
            Some(NilpotentOrbit::new(p, x, label).unwrap())
        },
    )
}

proptest! {
    #[test]
    fn partition_text_round_trips(p in arb_partition()) {
        prop_assert_eq!(parse_partition(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn halfint_text_round_trips(x in arb_halfint()) {
        prop_assert_eq!(parse_halfint(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn orbit_text_round_trips(o in arb_orbit()) {
        prop_assert_eq!(parse_orbit(&o.to_string()).unwrap(), o);
    }

    #[test]
    fn lparameter_text_round_trips(phi in arb_lparameter()) {
        prop_assert_eq!(parse_lparameter(&phi.to_string(), &registry()).unwrap(), phi);
    }

    #[test]
    fn aparameter_text_round_trips(psi in arb_aparameter()) {
        prop_assert_eq!(parse_aparameter(&psi.to_string(), &registry()).unwrap(), psi);
    }

    #[test]
    fn lambda_text_round_trips(phi in arb_lparameter()) {
        let lambda = phi.lambda();
        prop_assert_eq!(parse_lambda(&lambda.to_string(), &registry()).unwrap(), lambda);
    }

    #[test]
    fn hat_is_an_involution(psi in arb_aparameter()) {
        prop_assert_eq!(psi.hat().hat(), psi);
    }

    #[test]
    fn phi_of_psi_preserves_dimension_and_lambda(psi in arb_aparameter()) {
        let phi = psi.phi();
        prop_assert_eq!(phi.dim(), psi.dim());
        prop_assert_eq!(phi.lambda(), psi.lambda());
        // The dual-side partition of psi is the partition of its L-parameter.
        prop_assert_eq!(phi.partition(), psi.partition_d());
        // The Arthur-side partition is the dual-side partition of the hat.
        prop_assert_eq!(psi.partition_a(), psi.hat().partition_d());
    }

    #[test]
    fn self_duality_of_phi_matches_psi(psi in arb_aparameter()) {
        prop_assert_eq!(psi.phi().is_self_dual(), psi.is_self_dual());
    }

    #[test]
    fn witnesses_reproduce_their_parameter(psi in arb_aparameter()) {
        // Make the parameter self-dual by adding the dual summands, then
        // pick the group of matching parity and full dimension.
        let mut summands = psi.summands().to_vec();
        summands.extend(psi.summands().iter().map(|s| s.dual()));
        let psi = ArthurParameter::new(summands);
        let phi = psi.phi();
        let g = match phi.dim() {
            0 => return Ok(()),
            n if n % 2 == 1 => GroupContext::new(GroupFamily::Sp, (n - 1) / 2),
            n => GroupContext::new(GroupFamily::SOOdd, n / 2),
        };
        if !phi.is_valid_for(&g) {
            return Ok(());
        }
        let outcome = arthur_witness(&phi, &g).unwrap();
        if let Some(witness) = outcome.witness() {
            prop_assert_eq!(&witness.phi(), &phi);
            prop_assert!(witness.is_valid_for(&g));
            prop_assert_eq!(&witness.lambda(), &phi.lambda());
        }
        // Whatever the outcome, phi certainly came from an Arthur parameter
        // of GL_N, so the decision may only fail on the group-validity side.
        prop_assert!(!matches!(
            outcome,
            arthur_core::arthur::ArthurTypeOutcome::NotArthurType
        ));
    }

    #[test]
    fn duality_laws_on_random_partitions(p in arb_partition(), i in 0usize..3) {
        let x = [ClassicalType::B, ClassicalType::C, ClassicalType::D][i];
        prop_assume!(x.admits_size(p.size()));
        let q = p.collapse(x).unwrap();
        prop_assert!(q.is_type(x));
        prop_assert!(p.dominates(&q).unwrap());
        let (d, y) = q.dbv(x).unwrap();
        prop_assert!(d.is_special(y).unwrap());
        let (dd, _) = d.dbv(y).unwrap();
        prop_assert!(dd.dominates(&q).unwrap());
        prop_assert_eq!(dd.dbv(x).unwrap().0, d);
    }
}
