//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI};
use std::process::Command;
use std::time::{Duration, Instant};

use entangle_core::families::{
    cnot, cnot_gate_count, concurrence_cu_closed, concurrence_swap1m_closed, cu_gate, ep_cu_closed, identity,
    max_output_concurrence, swap, swap1m_invariants_closed, swap_root, CUParams, GateCount,
};
use entangle_core::linalg::{transposition_t13, Kron, Matrix4};
use entangle_core::power::{r_operator, EP_MAX};
use entangle_core::sampling::{haar_product_sample, haar_state, haar_unitary2, haar_unitary4, seeded_rng, SampleRng};
use entangle_core::states::evolve;
use entangle_core::synthesis::{search_two_gate_cnot, DEFAULT_TOL};
use entangle_core::weyl::{hull_margin, BOUNDARY_TOL};
use entangle_core::{
    ep_exact, ep_monte_carlo, ep_r_form, is_perfect_entangler_coords, is_perfect_entangler_hull, local_invariants,
    weyl_coordinates, Gate, ProductPair, C64,
};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within_time(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    check(t < limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn angle(rng: &mut SampleRng) -> f64 {
    rng.random::<f64>() * 2.0 * PI
}

fn local(rng: &mut SampleRng) -> Matrix4<f64> {
    haar_unitary2::<f64, _>(rng).kron(&haar_unitary2(rng))
}

fn random_gate(rng: &mut SampleRng) -> Gate {
    Gate::new("haar", haar_unitary4(rng)).unwrap()
}

fn entangle() -> Command {
    Command::new(env!("CARGO_BIN_EXE_entangle"))
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = entangle().args(args).output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?} exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    Ok(out.stdout)
}

fn c1_constants() -> Outcome {
    let t = Instant::now();
    let cases = [
        ("CNOT", ep_exact(&cnot::<f64>()).value, 2.0 / 9.0),
        ("SWAP^(1/2)", ep_exact(&swap_root(2.0).unwrap()).value, 1.0 / 6.0),
        ("SWAP", ep_exact(&swap::<f64>()).value, 0.0),
        ("I", ep_exact(&identity::<f64>()).value, 0.0),
    ];
    for (name, got, want) in cases {
        check((got - want).abs() < 1e-12, || format!("EP({name}) = {got}, want {want}"))?;
    }
    within_time(t, Duration::from_secs(1))?;
    Ok("EP(CNOT)=2/9, EP(SWAP^(1/2))=1/6, EP(SWAP)=EP(I)=0".into())
}

fn c2_table() -> Outcome {
    let t = Instant::now();
    for (m, n) in [(2, 2), (3, 2), (4, 3), (5, 4), (6, 6), (7, 8)] {
        let got = cnot_gate_count(m as f64).map_err(|e| e.to_string())?.count;
        check(got == GateCount::Feasible(n), || format!("m = {m}: {got:?}, want {n}"))?;
    }
    within_time(t, Duration::from_secs(1))?;
    Ok("n = 2,2,3,4,6,8 for m = 2..7".into())
}

fn c3_invariants() -> Outcome {
    let g = local_invariants(&cnot::<f64>()).map_err(|e| e.to_string())?;
    check(g.g1.norm() < 1e-12 && (g.g2 - 1.0).abs() < 1e-12, || format!("CNOT: {g:?}"))?;
    let g = local_invariants(&swap_root(3.0f64).unwrap()).map_err(|e| e.to_string())?;
    check(
        (g.g1.re - 0.4063).abs() <= 5e-5 && (g.g1.im.abs() - 0.1624).abs() <= 5e-5 && (g.g2 - 1.5).abs() <= 1e-10,
        || format!("SWAP^(1/3): {g:?}"),
    )?;
    for m in 1..=12 {
        let m = m as f64;
        let numeric = local_invariants(&swap_root(m).unwrap()).map_err(|e| e.to_string())?;
        let closed = swap1m_invariants_closed(m).unwrap();
        check(numeric.approx_eq_up_to_conjugation(&closed, 1e-10), || {
            format!("m = {m}: {numeric:?} vs {closed:?}")
        })?;
    }
    Ok(format!("SWAP^(1/3): G1 = {:.6}{:+.6}i, G2 = {:.12}", g.g1.re, g.g1.im, g.g2))
}

fn c4_weyl() -> Outcome {
    let close = |g: &Gate, want: [f64; 3]| -> Result<(), String> {
        let c = weyl_coordinates(g).map_err(|e| e.to_string())?.coords();
        check((0..3).all(|i| (c[i] - want[i]).abs() < 1e-9), || format!("{}: {c:?}, want {want:?}", g.name()))
    };
    for m in 1..=12 {
        close(&swap_root(m as f64).unwrap(), [PI / (2.0 * m as f64); 3])?;
    }
    close(&cnot(), [FRAC_PI_2, 0.0, 0.0])?;
    close(&swap_root(2.0).unwrap(), [FRAC_PI_4; 3])?;
    Ok("SWAP^(1/m) at [pi/2m]^3 for m = 1..12, CNOT at [pi/2,0,0]".into())
}

fn both_pe(g: &Gate) -> Result<(bool, bool), String> {
    let hull = is_perfect_entangler_hull(g, BOUNDARY_TOL).map_err(|e| e.to_string())?;
    let coords = is_perfect_entangler_coords(&weyl_coordinates(g).map_err(|e| e.to_string())?);
    Ok((hull, coords))
}

fn c5_perfect_entanglers() -> Outcome {
    let mut passing = Vec::new();
    for m in 1..=12 {
        if both_pe(&swap_root(m as f64).unwrap())? == (true, true) {
            passing.push(m);
        }
    }
    check(passing == [2], || format!("SWAP^(1/m) perfect entanglers at m = {passing:?}"))?;
    check(both_pe(&cnot())? == (true, true), || "CNOT is not classified as perfect entangler".into())?;
    let mut rng = seeded_rng(5);
    for _ in 0..20 {
        let p = CUParams::new(angle(&mut rng), angle(&mut rng), PI, angle(&mut rng));
        check(both_pe(&cu_gate(p))? == (true, true), || format!("{p:?} fails"))?;
    }
    Ok("only m = 2 among 1..12; CNOT and 20 CU(theta = pi) pass both".into())
}

fn c6_cross_validation() -> Outcome {
    let t = Instant::now();
    let mut rng = seeded_rng(6);
    let mut excluded = Vec::new();
    for i in 0..1000 {
        let u = random_gate(&mut rng);
        let point = weyl_coordinates(&u).map_err(|e| e.to_string())?;
        let (hm, cm) = (hull_margin(&u).map_err(|e| e.to_string())?, point.perfect_entangler_margin());
        if hm.abs() < 1e-6 || cm.abs() < 1e-6 {
            println!("    excluded draw {i}: hull margin {hm:e}, coordinate margin {cm:e}");
            excluded.push(i);
            continue;
        }
        let hull = is_perfect_entangler_hull(&u, BOUNDARY_TOL).map_err(|e| e.to_string())?;
        check(hull == is_perfect_entangler_coords(&point), || {
            format!("draw {i} disagrees at {:?}", point.coords())
        })?;
    }
    check(excluded.len() < 10, || format!("{} draws near the boundary", excluded.len()))?;
    within_time(t, Duration::from_secs(30))?;
    Ok(format!("1000 Haar draws agree, {} excluded near the boundary", excluded.len()))
}

fn c7_identities() -> Outcome {
    let mut rng = seeded_rng(7);
    for _ in 0..100 {
        let u = random_gate(&mut rng);
        let (a, b) = (ep_exact(&u).value, ep_r_form(&u).value);
        check((a - b).abs() < 1e-12, || format!("exact {a} vs R-form {b}"))?;
    }
    let trace = (*r_operator() * transposition_t13()).trace();
    check(trace == 20, || format!("tr(RT) = {trace}"))?;
    for _ in 0..100 {
        let (a, b, t, d) = (angle(&mut rng), angle(&mut rng), angle(&mut rng), angle(&mut rng));
        let e = ep_exact(&cu_gate(CUParams::new(a, b, t, d))).value;
        check((e - ep_cu_closed(a, b, t)).abs() < 1e-12, || format!("CU({a}, {b}, {t}, {d}): {e}"))?;
    }
    for i in 0..200 {
        let (a, mut b, mut t) = (angle(&mut rng), angle(&mut rng), angle(&mut rng));
        match i % 4 {
            0 => t = PI,
            1 => b = PI - a,
            _ => {}
        }
        let max_ep = (ep_cu_closed(a, b, t) - EP_MAX).abs() < 1e-12;
        let g = local_invariants(&cu_gate(CUParams::new(a, b, t, 0.0))).map_err(|e| e.to_string())?;
        let cnot_like = g.g1.norm() < 1e-10 && (g.g2 - 1.0).abs() < 1e-10;
        check(max_ep == cnot_like, || format!("({a}, {b}, {t}): max EP {max_ep}, CNOT invariants {cnot_like}"))?;
    }
    Ok("R-form on 100 draws, tr(RT) = 20, CU closed form on 100 draws, maximal-EP and CNOT-invariant conditions agree on 200".into())
}

fn c8_monte_carlo() -> Outcome {
    let t = Instant::now();
    let mut gates = vec![cnot::<f64>(), swap_root(2.0).unwrap()];
    let mut rng = seeded_rng(8);
    for _ in 0..5 {
        gates.push(cu_gate(CUParams::new(angle(&mut rng), angle(&mut rng), angle(&mut rng), angle(&mut rng))));
    }
    let mut worst: f64 = 0.0;
    for g in &gates {
        let mc = ep_monte_carlo(g, 100_000, 2024).map_err(|e| e.to_string())?;
        let exact = ep_exact(g).value;
        let band = (3.0 * mc.std_error.unwrap_or(0.0)).max(5e-3);
        let dev = (mc.value - exact).abs();
        worst = worst.max(dev / band);
        check(dev <= band, || format!("{}: MC {} vs exact {exact}, band {band}", g.name(), mc.value))?;
    }
    within_time(t, Duration::from_secs(60))?;
    Ok(format!("7 gates with 1e5 samples, worst deviation {worst:.3} of band"))
}

fn c9_concurrence() -> Outcome {
    let mut rng = seeded_rng(9);
    for _ in 0..200 {
        let m = 1.0 + 11.0 * rng.random::<f64>();
        let p = haar_product_sample::<f64, _>(&mut rng);
        let direct = evolve(swap_root(m).unwrap().matrix(), &p.product_state()).concurrence();
        let closed = concurrence_swap1m_closed(m, &p).map_err(|e| e.to_string())?;
        check((closed - direct).abs() < 1e-12, || format!("m = {m}: closed {closed} vs direct {direct}"))?;
    }
    let h = FRAC_1_SQRT_2;
    for b in [h, -h] {
        let sp = ProductPair::from_real(h, b, 1.0, 0.0).unwrap();
        for _ in 0..5 {
            let p = CUParams::new(angle(&mut rng), angle(&mut rng), PI, angle(&mut rng));
            let c = concurrence_cu_closed(&p, &sp);
            check((c - 1.0).abs() < 1e-12, || format!("case theta = pi: {c}"))?;
        }
    }
    for f in [h, -h] {
        let sp = ProductPair::from_real(h, h, h, f).unwrap();
        for _ in 0..5 {
            let a = angle(&mut rng);
            let p = CUParams::new(a, PI - a, 0.0, angle(&mut rng));
            let c = concurrence_cu_closed(&p, &sp);
            check((c - 1.0).abs() < 1e-12, || format!("case alpha + beta = pi: {c}"))?;
        }
    }
    let mut worst: f64 = 0.0;
    for m in 2..=8 {
        let r = max_output_concurrence(&swap_root(m as f64).unwrap(), 16, 9).map_err(|e| e.to_string())?;
        let dev = (r.value - (PI / m as f64).sin()).abs();
        worst = worst.max(dev);
        check(dev < 1e-4, || format!("m = {m}: max concurrence {}", r.value))?;
    }
    Ok(format!("closed forms on 200 draws, test vectors give C = 1, max concurrence off by {worst:.1e}"))
}

fn c10_synthesis() -> Outcome {
    let t = Instant::now();
    let half = search_two_gate_cnot(&swap_root(2.0).unwrap(), 64, 7, DEFAULT_TOL).map_err(|e| e.to_string())?;
    check(half.residual < 1e-8, || format!("SWAP^(1/2) residual {}", half.residual))?;
    let full = search_two_gate_cnot(&swap::<f64>(), 64, 7, DEFAULT_TOL).map_err(|e| e.to_string())?;
    check(full.residual >= 4.0, || format!("SWAP residual {}", full.residual))?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let findings = dir.path().join("findings.jsonl");
    let f = findings.to_str().unwrap();
    let args = ["--seed", "7", "synthesize", "--base", "swap-root:3", "--restarts", "256", "--findings", f];
    let first = run_cli(&args)?;
    let second = run_cli(&args)?;
    check(first == second, || "SWAP^(1/3) run is not reproducible".into())?;
    let log = std::fs::read_to_string(&findings).map_err(|e| e.to_string())?;
    let records: Vec<serde_json::Value> =
        log.lines().map(serde_json::from_str).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    check(records.len() == 2, || format!("{} findings records", records.len()))?;
    check(records[0]["residual"] == records[1]["residual"], || "findings residuals differ".into())?;
    within_time(t, Duration::from_secs(180))?;
    Ok(format!(
        "SWAP^(1/2) residual {:.1e}, SWAP residual {:.3}, SWAP^(1/3) residual {} ({})",
        half.residual, full.residual, records[0]["residual"], records[0]["verdict"].as_str().unwrap_or("?")
    ))
}

fn c11_properties() -> Outcome {
    let mut rng = seeded_rng(11);
    for _ in 0..1000 {
        let s = haar_state::<f64, _>(&mut rng);
        let c = s.concurrence();
        check((s.linear_entropy() - c * c / 2.0).abs() < 1e-12, || "E != C^2/2".into())?;
    }
    for _ in 0..200 {
        let u = random_gate(&mut rng);
        let v = Gate::new("dressed", (local(&mut rng) * *u.matrix() * local(&mut rng)).scale(C64::from_polar(1.0, 0.7)))
            .unwrap();
        let (gu, gv) = (local_invariants(&u).unwrap(), local_invariants(&v).unwrap());
        check(gu.approx_eq(&gv, 1e-10), || format!("invariants {gu:?} vs {gv:?}"))?;
        let (cu, cv) = (weyl_coordinates(&u).unwrap().coords(), weyl_coordinates(&v).unwrap().coords());
        check((0..3).all(|i| (cu[i] - cv[i]).abs() < 1e-10), || format!("Weyl {cu:?} vs {cv:?}"))?;
        let s = haar_state::<f64, _>(&mut rng);
        let c = (s.concurrence() - evolve(&local(&mut rng), &s).concurrence()).abs();
        check(c < 1e-10, || format!("concurrence moved by {c}"))?;
    }
    for _ in 0..1000 {
        let e = ep_exact(&random_gate(&mut rng)).value;
        check((-1e-12..=EP_MAX + 1e-12).contains(&e), || format!("EP {e} outside [0, 2/9]"))?;
    }
    let args = ["--seed", "3", "characterize", "--swap-root", "3", "--monte-carlo", "2000", "--max-concurrence", "4"];
    check(run_cli(&args)? == run_cli(&args)?, || "characterize output differs between runs".into())?;
    Ok("E = C^2/2, local invariance, EP envelope, byte-identical CLI reports".into())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("entangling power constants", c1_constants),
        ("gate-count table", c2_table),
        ("local invariants", c3_invariants),
        ("Weyl points", c4_weyl),
        ("perfect-entangler classification", c5_perfect_entanglers),
        ("criterion cross-validation", c6_cross_validation),
        ("algebraic identities", c7_identities),
        ("Monte Carlo oracle", c8_monte_carlo),
        ("concurrence closed forms", c9_concurrence),
        ("two-gate synthesis", c10_synthesis),
        ("property suite", c11_properties),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2} s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2} s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
