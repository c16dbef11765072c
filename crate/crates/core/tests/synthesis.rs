use std::f64::consts::PI;

use entangle_core::families::{cnot, identity, swap, swap_root};
use entangle_core::linalg::Kron;
use entangle_core::sampling::{haar_unitary2, seeded_rng};
use entangle_core::synthesis::{
    align_locals, composed_circuit, search_two_gate_cnot, synthesize_cnot, Verdict, DEFAULT_TOL,
};
use entangle_core::Gate;

fn phase_free_error(a: &entangle_core::Mat4, b: &entangle_core::Mat4) -> f64 {
    let z = b.hs_inner(a);
    a.max_abs_diff(&b.scale(z / z.norm()))
}

#[test]
fn search_is_deterministic() {
    let base = swap_root(3.0).unwrap();
    let a = search_two_gate_cnot(&base, 24, 9, DEFAULT_TOL).unwrap();
    let b = search_two_gate_cnot(&base, 24, 9, DEFAULT_TOL).unwrap();
    assert_eq!(a, b);
}

#[test]
fn more_restarts_never_hurt() {
    let base = swap_root(3.0).unwrap();
    let mut last = f64::INFINITY;
    for r in [1, 4, 16, 32] {
        let res = search_two_gate_cnot(&base, r, 3, DEFAULT_TOL).unwrap().residual;
        assert!(res <= last, "{r} restarts: {res} > {last}");
        last = res;
    }
}

#[test]
fn sqrt_swap_pair_builds_cnot() {
    let base = swap_root(2.0).unwrap();
    let r = synthesize_cnot(&base, 64, 7, DEFAULT_TOL).unwrap();
    assert_eq!(r.verdict, Verdict::ConstructionExists);
    assert!(r.residual < 1e-8);
    let circuit = composed_circuit(&base, &r).unwrap();
    assert!(phase_free_error(&circuit, cnot::<f64>().matrix()) < 1e-5);
}

#[test]
fn swap_pair_is_obstructed() {
    let r = search_two_gate_cnot(&swap(), 64, 7, DEFAULT_TOL).unwrap();
    assert!(r.residual >= 4.0);
    assert_eq!(r.verdict, Verdict::Obstructed);
}

#[test]
fn alignment_recovers_dressing() {
    let mut rng = seeded_rng(40);
    let k1 = haar_unitary2::<f64, _>(&mut rng).kron(&haar_unitary2(&mut rng));
    let k2 = haar_unitary2::<f64, _>(&mut rng).kron(&haar_unitary2(&mut rng));
    let v = Gate::new("dressed", k1 * *cnot::<f64>().matrix() * k2).unwrap();
    let al = align_locals(&v, &cnot(), 16, 1).unwrap();
    assert!(al.infidelity < 1e-6, "{}", al.infidelity);
    let far = align_locals(&identity::<f64>(), &cnot(), 16, 1).unwrap();
    assert!(far.infidelity >= 0.1, "{}", far.infidelity);
    assert!(far.infidelity < 1.0 - (PI / 4.0).cos() + 1e-6);
}
