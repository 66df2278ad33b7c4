use proptest::prelude::*;

use triality_core::clifford::{random_unit_vector, CliffordElement};
use triality_core::endoscopy;
use triality_core::octonion::Octonion;
use triality_core::parameters::{self, Component, FixedKind, ParameterShape};
use triality_core::sample::Sampler;
use triality_core::so8;
use triality_core::suites::{report_json, Suite};
use triality_core::triality::{self, SpinorTriality, TrialityMap};
use triality_core::{CycloNum, ExactMatrix};

fn spin_product(seed: u64, factors: usize) -> CliffordElement {
    let sp = so8::space();
    let mut s = Sampler::new(seed);
    (0..factors).fold(CliffordElement::one(&sp), |acc, _| &acc * &random_unit_vector(&sp, &mut s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn spin_triples_are_triality_automorphisms(seed in any::<u64>()) {
        let a = spin_product(seed, 2);
        let t = triality::spin_to_triple(&a).unwrap();
        let data = SpinorTriality::get().data();
        prop_assert!(t.validate(data));
        prop_assert!(t.intertwines_t3(data));
    }

    #[test]
    fn adjoint_action_commutes_with_bracket(seed in any::<u64>(), i in 0usize..28, j in 0usize..28) {
        let ad = so8::ad_matrix(&spin_product(seed, 2));
        let e = |k: usize| {
            let mut v = vec![CycloNum::zero(); so8::DIM];
            v[k] = CycloNum::one();
            v
        };
        let lhs = ad.mul_vec(&so8::bracket(&e(i), &e(j))).unwrap();
        let rhs = so8::bracket(&ad.mul_vec(&e(i)).unwrap(), &ad.mul_vec(&e(j)).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn octonion_json_round_trip(seed in any::<u64>()) {
        let x = Octonion::random(&mut Sampler::new(seed));
        prop_assert_eq!(Octonion::from_json(&x.to_json()).unwrap(), x);
    }

    #[test]
    fn canonical_shape_ignores_order(n in 1u32..=4, m in 1u32..=4) {
        let a = ParameterShape::new(vec![
            Component::fixed(n, 1, FixedKind::G2Type),
            Component::fixed(m, 2, FixedKind::G2Type),
        ]);
        let b = ParameterShape::new(a.components.iter().rev().cloned().collect());
        prop_assert_eq!(a.canonical(), b.canonical());
    }
}

#[test]
fn dtheta_json_round_trip() {
    let d = triality::standard_dtheta();
    assert_eq!(&ExactMatrix::from_json(&d.to_json()).unwrap(), d);
}

#[test]
fn conjugating_dtheta_by_spin_keeps_order_three() {
    let d = triality::standard_dtheta();
    let ad = so8::ad_matrix(&endoscopy::build_s0());
    let inv = ad.inverse().unwrap();
    let conj = &(&ad * d) * &inv;
    assert!(conj.pow(3).is_identity());
    assert_eq!(triality::fixed_points(&conj).dim, 14);
}

#[test]
fn theta_prime_cycles_the_slots() {
    let t = triality::theta_prime(&triality::UnitChoice::standard()).unwrap();
    assert!(t.perm_is_three_cycle());
    assert!(TrialityMap::compose(&t, &t.pow(2)).is_identity());
}

#[test]
fn every_enumerated_shape_classifies() {
    for s in parameters::enumerate_shapes(parameters::TOTAL) {
        let c = parameters::classify(&s).unwrap();
        assert!(c.theta_stable);
        assert_eq!(s.total(), parameters::TOTAL);
    }
}

#[test]
fn reports_are_reproducible() {
    let a = report_json(&[Suite::Octonion], 1, 5);
    let b = report_json(&[Suite::Octonion], 1, 5);
    assert_eq!(a, b);
    let summary: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(summary["suites"][0]["name"], "octonion");
}
