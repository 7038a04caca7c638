//! Property-based and sweep invariants.

mod common;

use common::{angle, limb, limbs_up_to_period};
use proptest::prelude::*;
use s1_limbs::{
    build_graph, limb_condition, m2_rotation_set, preperiodic_loop_criterion, Angle, Arc, Chord,
    ChordSystem, LimbKind, RayClassGraph, Side,
};

fn arb_angle() -> impl Strategy<Value = Angle> {
    (1u64..4000, any::<u64>()).prop_map(|(den, num)| Angle::new(num % den, den))
}

proptest! {
    /// Every preimage maps back under the power map.
    #[test]
    fn preimages_round_trip(a in arb_angle(), d in 2u32..5) {
        let pre = a.preimages(d);
        prop_assert_eq!(pre.len(), d as usize);
        for p in pre {
            prop_assert_eq!(p.times(d), a.clone());
        }
    }

    /// Complementary arcs have lengths summing to one.
    #[test]
    fn arc_lengths_complement(a in arb_angle(), b in arb_angle()) {
        prop_assume!(a != b);
        let (n1, d1) = Arc::new(a.clone(), b.clone()).length();
        let (n2, d2) = Arc::new(b, a).length();
        prop_assert_eq!(&n1 * &d2 + &n2 * &d1, d1 * d2);
    }

    /// Chord linkage is symmetric.
    #[test]
    fn linkage_symmetric(a in arb_angle(), b in arb_angle(), c in arb_angle(), d in arb_angle()) {
        let distinct = [&a, &b, &c, &d];
        for i in 0..4 {
            for j in (i + 1)..4 {
                prop_assume!(distinct[i] != distinct[j]);
            }
        }
        let c1 = Chord::new(a, b);
        let c2 = Chord::new(c, d);
        prop_assert_eq!(c1.linked(&c2), c2.linked(&c1));
    }

    /// Text form round-trips through the parser.
    #[test]
    fn parse_display_round_trip(a in arb_angle()) {
        let printed = a.to_string();
        prop_assert_eq!(printed.parse::<Angle>().unwrap(), a);
    }

    /// A periodic angle of period q has denominator dividing d^q - 1.
    #[test]
    fn periodic_denominator_divides(a in arb_angle(), d in 2u32..4) {
        let orbit = a.orbit(d);
        let cycle_rep = &orbit.points[orbit.preperiod];
        let modulus = num_bigint::BigUint::from(d).pow(orbit.period as u32)
            - num_bigint::BigUint::from(1u32);
        prop_assert!((&modulus % cycle_rep.denom()).bits() == 0);
    }

    /// The loop criterion for preperiodic descriptors holds exactly for
    /// negated parameter angles, whatever the inputs.
    #[test]
    fn loop_criterion_only_for_conjugates(a in arb_angle(), b in arb_angle()) {
        prop_assert_eq!(preperiodic_loop_criterion(&a, &b), b == a.neg_mod1());
    }
}

/// Conjugation and complementation are involutions; the conjugate limb's
/// landing angles are the negated ones; sign swap shifts them by a half turn.
#[test]
fn limb_symmetries_sweep() {
    for l in limbs_up_to_period(6) {
        assert_eq!(l.conjugate().conjugate(), l, "{l}");
        assert_eq!(l.swap_sign().swap_sign(), l, "{l}");

        let theta = l.theta().unwrap();
        let conj_theta = l.conjugate().theta().unwrap();
        assert_eq!(
            conj_theta.angles(),
            theta.negated_angles().as_slice(),
            "{l}"
        );
        assert!(limb_condition(&l, &l.conjugate()).unwrap(), "{l}");

        let half = Angle::half();
        let mut shifted: Vec<Angle> = theta.angles().iter().map(|t| t.add(&half)).collect();
        shifted.sort();
        assert_eq!(l.swap_sign().theta().unwrap().angles(), shifted, "{l}");

        match l.classify() {
            LimbKind::Rotation(data) => {
                let comp = l.complementary().expect("rotation limbs have complements");
                assert_eq!(comp.complementary(), Some(l.clone()), "{l}");
                assert!(limb_condition(&l, &comp).unwrap(), "{l}");
                if !data.rho.is_zero() {
                    assert_ne!(comp, l.conjugate(), "{l}");
                }
                // Conjugate data transform away from zero: (p/q, k, s) ->
                // (-p/q, q+1-k, s).
                if !l.internal_angle().is_zero() {
                    match l.conjugate().classify() {
                        LimbKind::Rotation(cdata) => {
                            assert_eq!(cdata.rho, data.rho.neg_mod1(), "{l}");
                            assert_eq!(cdata.position, data.period() + 1 - data.position, "{l}");
                            assert_eq!(cdata.sign, data.sign, "{l}");
                        }
                        other => panic!("conjugate of rotation limb must rotate: {other:?}"),
                    }
                }
            }
            _ => assert_eq!(l.complementary(), None, "{l}"),
        }
    }
}

/// Balance at odd periods corresponds exactly to the mirrored limb being the
/// complementary limb.
#[test]
fn balanced_angles_characterise_mirror_complements() {
    for q in [3u64, 5, 7] {
        for rho in common::reduced_fractions(q) {
            for t0 in m2_rotation_set(&rho).unwrap().points() {
                let plus = s1_limbs::LimbId::new(t0.clone(), s1_limbs::Sign::Plus);
                let mirror = s1_limbs::LimbId::new(t0.neg_mod1(), s1_limbs::Sign::Minus);
                let is_balanced = s1_limbs::balanced(t0).unwrap();
                assert_eq!(plus.complementary() == Some(mirror), is_balanced, "t0={t0}");
            }
        }
    }
}

/// Gap bookkeeping: multiplicities of the major gaps of a rotation set sum
/// to d - 1. The one exception is the singleton {0} under doubling, whose
/// single gap is the full circle and wraps twice.
#[test]
fn major_gap_multiplicities_sum() {
    for q in 1..=7u64 {
        for rho in common::reduced_fractions(q) {
            let x2 = m2_rotation_set(&rho).unwrap();
            let expected = if q == 1 { 2 } else { 1 };
            assert_eq!(
                x2.major_gaps().map(|g| g.multiplicity).sum::<u32>(),
                expected
            );
            for s1 in (1..2 * q as u32).step_by(2) {
                let x3 = s1_limbs::m3_two_cycle_rotation_set(&rho, s1).unwrap();
                assert_eq!(x3.major_gaps().map(|g| g.multiplicity).sum::<u32>(), 2);
            }
        }
    }
}

/// A rotation set is determined by its major gaps (within the enumerated
/// family).
#[test]
fn major_gaps_determine_rotation_set() {
    for q in 1..=6u64 {
        let mut seen: Vec<(Vec<String>, Vec<Angle>)> = Vec::new();
        for rho in common::reduced_fractions(q) {
            for s1 in (1..2 * q as u32).step_by(2) {
                let set = s1_limbs::m3_two_cycle_rotation_set(&rho, s1).unwrap();
                let majors: Vec<String> = set
                    .major_gaps()
                    .map(|g| format!("{}x{}", g.arc, g.multiplicity))
                    .collect();
                for (other_majors, other_points) in &seen {
                    assert_eq!(
                        other_majors == &majors,
                        other_points == set.points(),
                        "identical major gaps must pin identical sets"
                    );
                }
                seen.push((majors, set.points().to_vec()));
            }
        }
    }
}

fn component_shapes(graph: &RayClassGraph) -> Vec<(usize, usize)> {
    let mut shapes: Vec<(usize, usize)> = graph
        .components()
        .iter()
        .map(|c| (c.vertices.len(), c.edges.len()))
        .collect();
    shapes.sort_unstable();
    shapes
}

/// Swapping the two polynomials gives an isomorphic graph (the gluing is an
/// involution), and every component satisfies edges >= vertices - 1.
#[test]
fn graph_symmetry_and_bookkeeping() {
    let pairs = [
        ("4/7+", "3/7+"),
        ("4/7+", "6/7-"),
        ("2/3+", "2/3+"),
        ("18/31+", "22/31-"),
        ("2/3+", "5/7+"),
        ("1/5+", "1/5-"),
        ("0+", "0-"),
    ];
    for (a, b) in pairs {
        let sys = |id: &str, side| ChordSystem::from_alpha(&limb(id).theta().unwrap(), side);
        let forward = build_graph(&sys(a, Side::A).unwrap(), &sys(b, Side::B).unwrap()).unwrap();
        let backward = build_graph(&sys(b, Side::A).unwrap(), &sys(a, Side::B).unwrap()).unwrap();
        assert_eq!(
            component_shapes(&forward),
            component_shapes(&backward),
            "{a} vs {b}"
        );
        assert_eq!(
            forward.loop_components().len(),
            backward.loop_components().len(),
            "{a} vs {b}"
        );
        for comp in forward.components() {
            assert!(comp.edges.len() + 1 >= comp.vertices.len(), "{a} vs {b}");
        }
    }
}

/// Soundness of the limb condition at small periods: whenever it holds, the
/// boundary-cycle graph contains a loop, the partner is the conjugate or the
/// complementary limb, and the verdict is obstructed accordingly.
#[test]
fn limb_condition_implies_loop() {
    use s1_limbs::{mate_verdict, MateDescriptor, ObstructionReason, Verdict};
    let limbs = limbs_up_to_period(5);
    for l1 in &limbs {
        for l2 in &limbs {
            if !limb_condition(l1, l2).unwrap() {
                continue;
            }
            let graph = build_graph(
                &ChordSystem::from_alpha(&l1.theta().unwrap(), Side::A).unwrap(),
                &ChordSystem::from_alpha(&l2.theta().unwrap(), Side::B).unwrap(),
            )
            .unwrap();
            assert!(
                !graph.loop_components().is_empty(),
                "{l1} vs {l2} satisfies the limb condition but has no loop"
            );
            let report = mate_verdict(
                &MateDescriptor::Limb(l1.clone()),
                &MateDescriptor::Limb(l2.clone()),
            )
            .unwrap();
            let expected = if *l2 == l1.conjugate() {
                ObstructionReason::ConjugateLimbs
            } else {
                assert_eq!(l1.complementary().as_ref(), Some(l2), "{l1} vs {l2}");
                ObstructionReason::ComplementaryLimbs
            };
            assert_eq!(
                report.verdict,
                Verdict::Obstructed { reason: expected },
                "{l1} vs {l2}"
            );
        }
    }
}

/// Conjugate periodic pairs split into q parallel-edge loops of two classes.
#[test]
fn conjugate_pairs_form_parallel_loops() {
    for l in limbs_up_to_period(5) {
        if l.internal_angle().is_zero() {
            continue;
        }
        let q = l.period().unwrap();
        let graph = build_graph(
            &ChordSystem::from_alpha(&l.theta().unwrap(), Side::A).unwrap(),
            &ChordSystem::from_alpha(&l.conjugate().theta().unwrap(), Side::B).unwrap(),
        )
        .unwrap();
        let shapes = component_shapes(&graph);
        assert_eq!(shapes, vec![(2, 2); q], "{l}");
    }
}

/// Preperiodic necessity over all strictly preperiodic angles with
/// denominator up to 200: only the negated angle closes a loop.
#[test]
fn preperiodic_necessity_small_denominators() {
    let third = Angle::third();
    for den in 2u64..=200 {
        if den % 3 != 0 {
            // Tripling is invertible mod such denominators: all periodic.
            continue;
        }
        for num in (1..den).filter(|n| gcd(*n, den) == 1) {
            let theta = angle(num, den);
            let candidates = [
                theta.neg_mod1(),
                theta.sub(&third).neg_mod1(),
                theta.add(&third).neg_mod1(),
            ];
            for candidate in candidates {
                assert_eq!(
                    preperiodic_loop_criterion(&theta, &candidate),
                    candidate == theta.neg_mod1(),
                    "theta={theta} candidate={candidate}"
                );
            }
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
