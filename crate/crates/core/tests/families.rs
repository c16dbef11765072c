use std::f64::consts::{FRAC_1_SQRT_2, PI};

use entangle_core::families::{
    cnot_class_expression, concurrence_cu_closed, concurrence_swap1m_closed, cu_gate, cu_invariants_closed,
    ep_cu_closed, ep_swap_alpha_closed, is_cnot_class, max_output_concurrence, swap1m_invariants_closed, swap_alpha,
    swap_root, CUParams,
};
use entangle_core::power::EP_MAX;
use entangle_core::sampling::{haar_product_sample, seeded_rng};
use entangle_core::states::evolve;
use entangle_core::weyl::BOUNDARY_TOL;
use entangle_core::{ep_exact, is_perfect_entangler_coords, is_perfect_entangler_hull, local_invariants, weyl_coordinates};
use rand::Rng;

fn angle(rng: &mut impl Rng) -> f64 {
    rng.random::<f64>() * 2.0 * PI
}

#[test]
fn swap_alpha_closed_form_on_a_grid() {
    for i in 0..50 {
        let alpha = 2.0 * i as f64 / 49.0;
        let e = ep_exact(&swap_alpha(alpha)).value;
        assert!((e - ep_swap_alpha_closed(alpha)).abs() < 1e-12, "alpha = {alpha}");
    }
}

#[test]
fn swap_root_family() {
    for m in 1..=12 {
        let m = m as f64;
        let g = swap_root(m).unwrap();
        let inv = local_invariants(&g).unwrap();
        let closed = swap1m_invariants_closed(m).unwrap();
        assert!(inv.approx_eq_up_to_conjugation(&closed, 1e-10), "m = {m}");
        let c = weyl_coordinates(&g).unwrap().coords();
        for x in c {
            assert!((x - PI / (2.0 * m)).abs() < 1e-9, "m = {m}: {c:?}");
        }
        let pe = is_perfect_entangler_hull(&g, BOUNDARY_TOL).unwrap();
        assert_eq!(pe, m == 2.0, "m = {m}");
        assert_eq!(is_perfect_entangler_coords(&weyl_coordinates(&g).unwrap()), m == 2.0);
    }
}

#[test]
fn cu_ep_is_delta_independent_and_matches_invariants() {
    let mut rng = seeded_rng(21);
    for _ in 0..100 {
        let (a, b, t, d) = (angle(&mut rng), angle(&mut rng), angle(&mut rng), angle(&mut rng));
        let e = ep_exact(&cu_gate(CUParams::new(a, b, t, d))).value;
        let e0 = ep_exact(&cu_gate(CUParams::new(a, b, t, 0.0))).value;
        assert!((e - e0).abs() < 1e-12);
        assert!((e - ep_cu_closed(a, b, t)).abs() < 1e-12);
        let inv = cu_invariants_closed(a, b, t);
        assert!((e - EP_MAX * (1.0 - inv.g1.re)).abs() < 1e-12);
        let numeric = local_invariants(&cu_gate(CUParams::new(a, b, t, d))).unwrap();
        assert!(numeric.approx_eq_up_to_conjugation(&inv, 1e-10));
    }
}

#[test]
fn maximal_ep_condition_equals_cnot_invariants_condition() {
    let mut rng = seeded_rng(22);
    let mut hits = 0;
    for i in 0..200 {
        let (mut a, mut b, mut t) = (angle(&mut rng), angle(&mut rng), angle(&mut rng));
        match i % 4 {
            0 => t = PI,
            1 => b = PI - a,
            _ => {}
        }
        if i % 8 == 3 {
            a = 0.0;
            b = 0.0;
        }
        let maximal = (ep_cu_closed(a, b, t) - EP_MAX).abs() < 1e-12;
        let inv = cu_invariants_closed(a, b, t);
        let cnot_like = inv.g1.norm() < 1e-12 && (inv.g2 - 1.0).abs() < 1e-12;
        assert_eq!(maximal, cnot_like, "({a}, {b}, {t})");
        assert_eq!(maximal, is_cnot_class(a, b, t, 1e-12));
        assert_eq!(maximal, cnot_class_expression(a, b, t) < 1e-12);
        hits += maximal as usize;
    }
    assert!(hits >= 100);
}

#[test]
fn theta_pi_cu_gates_are_perfect_entanglers() {
    let mut rng = seeded_rng(23);
    for _ in 0..20 {
        let g = cu_gate(CUParams::new(angle(&mut rng), angle(&mut rng), PI, angle(&mut rng)));
        assert!(is_perfect_entangler_hull(&g, BOUNDARY_TOL).unwrap());
        assert!(is_perfect_entangler_coords(&weyl_coordinates(&g).unwrap()));
    }
}

#[test]
fn swap_root_concurrence_closed_form() {
    let mut rng = seeded_rng(24);
    for _ in 0..200 {
        let m = 1.0 + 11.0 * rng.random::<f64>();
        let p = haar_product_sample::<f64, _>(&mut rng);
        let direct = evolve(swap_root(m).unwrap().matrix(), &p.product_state()).concurrence();
        assert!((concurrence_swap1m_closed(m, &p).unwrap() - direct).abs() < 1e-12);
    }
}

#[test]
fn cu_concurrence_closed_forms_match_direct_evaluation() {
    let mut rng = seeded_rng(25);
    for i in 0..300 {
        let (a, mut b, mut t, d) = (angle(&mut rng), angle(&mut rng), angle(&mut rng), angle(&mut rng));
        match i % 3 {
            0 => t = PI,
            1 => b = PI - a,
            _ => {}
        }
        let p = CUParams::new(a, b, t, d);
        let sp = haar_product_sample::<f64, _>(&mut rng);
        let direct = evolve(cu_gate(p).matrix(), &sp.product_state()).concurrence();
        assert!((concurrence_cu_closed(&p, &sp) - direct).abs() < 1e-12, "case {}", i % 3);
    }
    let h = FRAC_1_SQRT_2;
    let sp = entangle_core::ProductPair::from_real(h, -h, 1.0, 0.0).unwrap();
    assert!((concurrence_cu_closed(&CUParams::new(1.0, 2.0, PI, 0.5), &sp) - 1.0).abs() < 1e-12);
}

#[test]
fn max_concurrence_of_swap_roots() {
    for m in 2..=8 {
        let m = m as f64;
        let r = max_output_concurrence(&swap_root(m).unwrap(), 16, 5).unwrap();
        assert!((r.value - (PI / m).sin()).abs() < 1e-4, "m = {m}: {}", r.value);
        assert!(r.value <= 1.0 + 1e-9);
    }
}
