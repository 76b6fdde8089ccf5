//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
//! status if any criterion fails.

mod common;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::random_tensor;
use num_rational::BigRational;
use num_traits::{One, Zero};
use qblocks::blocks::{
    asymptotic_grid, residual_grid, uasy_coefficient, GRID_KAPPAS, GRID_LAMBDAS, GRID_Z, ODE_STEP, SHAPES,
};
use qblocks::dyck::{catalan, enumerate_paths, DyckPath, LocalShape};
use qblocks::qfield::{eval_at_kappa, ratq_from_json, QNumeric, RatQ};
use qblocks::qmatrix::{
    build_m, build_m_recursive, build_m_with, build_minv_tilings, build_minv_tilings_with, invert_by_elimination,
    tile_weight_at_one,
};
use qblocks::uqsl2::{act, basis_rank, build_u, homogeneous_kernel, verify_projections, Generator, ProjectionCase};
use qblocks::Exec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;
type Golden = (Vec<DyckPath>, Vec<Vec<RatQ>>, Vec<Vec<RatQ>>);
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalan_counts() -> Outcome {
    let expected = [1usize, 1, 2, 5, 14, 42, 132];
    for (n, &c) in expected.iter().enumerate() {
        let got = enumerate_paths(n).map_err(|e| e.to_string())?.len();
        ensure(got == c, || format!("N = {n}: {got} paths, expected {c}"))?;
    }
    Ok("sizes 1,1,2,5,14,42,132 for N = 0..6".into())
}

fn inversion() -> Outcome {
    let exec = Exec::default();
    for n in 0..=4 {
        let m = build_m(n, exec).map_err(|e| e.to_string())?;
        let minv = build_minv_tilings(n, exec).map_err(|e| e.to_string())?;
        ensure(m.mul(&minv, exec).entries().is_identity(), || format!("M * Minv != I at N = {n}"))?;
        if n == 4 {
            let elim = invert_by_elimination(&m).map_err(|e| e.to_string())?;
            ensure(elim == minv, || "elimination inverse differs from tiling sum at N = 4".into())?;
        }
    }
    Ok("M * Minv = I for N <= 4; tiling sum = elimination inverse at N = 4".into())
}

fn recursion() -> Outcome {
    for n in 0..=5 {
        let r = build_m_recursive(n, Exec::default()).map_err(|e| e.to_string())?;
        let m = build_m(n, Exec::default()).map_err(|e| e.to_string())?;
        ensure(r == m, || format!("recursion differs at N = {n}"))?;
    }
    Ok("recursive matrices equal tiling matrices for N <= 5, all wedge columns consistent".into())
}

fn read_golden(n: usize) -> Result<Golden, String> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/matrices_n{n}.json"));
    let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let order = doc["order"]
        .as_array()
        .ok_or("missing order")?
        .iter()
        .map(|s| DyckPath::from_steps(s.as_str().unwrap_or("?")).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    let rows = |v: &Value| -> Result<Vec<Vec<RatQ>>, String> {
        v.as_array()
            .ok_or("missing matrix")?
            .iter()
            .map(|r| {
                r.as_array().ok_or("bad row")?.iter().map(|x| ratq_from_json(x).map_err(|e| e.to_string())).collect()
            })
            .collect()
    };
    Ok((order, rows(&doc["m"])?, rows(&doc["minv"])?))
}

fn golden_entries() -> Outcome {
    let qr = |a, b| RatQ::q_ratio(a, b).unwrap();
    for n in [2, 3] {
        let (order, m, minv) = read_golden(n)?;
        let built = build_m(n, Exec::default()).map_err(|e| e.to_string())?;
        let built_inv = build_minv_tilings(n, Exec::default()).map_err(|e| e.to_string())?;
        ensure(built.order() == order.as_slice(), || format!("order differs at N = {n}"))?;
        ensure(built.entries().to_rows() == m, || format!("M differs from golden file at N = {n}"))?;
        ensure(built_inv.entries().to_rows() == minv, || format!("Minv differs from golden file at N = {n}"))?;
    }
    let (_, m, minv) = read_golden(2)?;
    ensure(m == vec![vec![RatQ::one(), -qr(1, 2)], vec![RatQ::zero(), RatQ::one()]], || "N = 2 M".into())?;
    ensure(minv == vec![vec![RatQ::one(), qr(1, 2)], vec![RatQ::zero(), RatQ::one()]], || "N = 2 Minv".into())?;
    let (order, _, minv) = read_golden(3)?;
    let idx = |s: &str| order.iter().position(|a| a.steps() == s).unwrap();
    let top = idx("UUUDDD");
    ensure(minv[idx("UDUDUD")][top] == qr(2, 3), || "Minv(lowest, highest) != [2]/[3]".into())?;
    ensure(minv[idx("UDUUDD")][top] == qr(1, 3), || "Minv((0,1,0,1,2,1,0), highest) != 1/[3]".into())?;
    Ok("golden N = 2, 3 files match the build and the known entries".into())
}

fn relations() -> Outcome {
    use Generator::{KInv, E, F, K};
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let denom = (&RatQ::q_pow(1) - &RatQ::q_pow(-1)).inv().map_err(|e| e.to_string())?;
    let mut count = 0;
    for n in 2..=6 {
        for _ in 0..100 {
            let v = random_tensor(&mut rng, n);
            ensure(act(K, &act(KInv, &v)) == v, || format!("K K^-1 != 1 on {v:?}"))?;
            ensure(act(K, &act(E, &v)) == act(E, &act(K, &v)).scale(&RatQ::q_pow(2)), || format!("KE on {v:?}"))?;
            ensure(act(K, &act(F, &v)) == act(F, &act(K, &v)).scale(&RatQ::q_pow(-2)), || format!("KF on {v:?}"))?;
            let comm = act(E, &act(F, &v)).sub(&act(F, &act(E, &v)));
            let rhs = act(K, &v).sub(&act(KInv, &v)).scale(&denom);
            ensure(comm == rhs, || format!("[E, F] on {v:?}"))?;
            count += 1;
        }
    }
    Ok(format!("four relations exact on {count} random vectors, n = 2..6"))
}

fn highest_weight_and_projections() -> Outcome {
    let mut columns = 0;
    for n in 0..=5 {
        for a in enumerate_paths(n).map_err(|e| e.to_string())? {
            let u = build_u(&a).map_err(|e| e.to_string())?;
            ensure(u.prefixes_are_highest_weight(), || format!("prefix of {a} not highest weight"))?;
            let report = verify_projections(&a).map_err(|e| e.to_string())?;
            ensure(report.all_ok(), || format!("{a}: failing columns {:?}", report.failures().collect::<Vec<_>>()))?;
            columns += report.checks.len();
        }
    }
    Ok(format!("all prefixes highest weight, {columns} projection columns verified for N <= 5"))
}

fn basis_property() -> Outcome {
    for n in 0..=4 {
        let r = basis_rank(n, Exec::default()).map_err(|e| e.to_string())?;
        ensure(r as u64 == catalan(n), || format!("rank {r} at N = {n}"))?;
    }
    for n in 1..=3 {
        let k = homogeneous_kernel(n).map_err(|e| e.to_string())?;
        ensure(k.is_trivial(), || format!("nonzero joint kernel at N = {n}: {k:?}"))?;
    }
    Ok("rank = Catalan for N <= 4; joint projection kernel trivial for N = 1..3".into())
}

fn cross_module() -> Outcome {
    let mut worst = 0f64;
    for kappa in [2.5, 3.7, 5.3] {
        let ctx = QNumeric::new(kappa).map_err(|e| e.to_string())?;
        for n in 1..=3 {
            for a in enumerate_paths(n).map_err(|e| e.to_string())? {
                for check in verify_projections(&a).map_err(|e| e.to_string())?.checks {
                    let numeric = uasy_coefficient(&a, check.j, kappa).map_err(|e| e.to_string())?;
                    let exact = match check.case {
                        ProjectionCase::DownWedge(f) => eval_at_kappa(&f, &ctx).map_err(|e| e.to_string())?.re,
                        ProjectionCase::UpWedge => 1.0,
                        ProjectionCase::Slope => 0.0,
                    };
                    worst = worst.max((numeric - exact).abs());
                }
            }
        }
    }
    ensure(worst < 1e-10, || format!("max deviation {worst:.3e}"))?;
    Ok(format!("max deviation {worst:.3e} < 1e-10"))
}

fn analytics() -> Outcome {
    let rows = residual_grid(&GRID_KAPPAS, &GRID_LAMBDAS, &SHAPES, &GRID_Z, ODE_STEP, Exec::default())
        .map_err(|e| e.to_string())?;
    let worst = rows.iter().map(|r| r.ode1.abs().max(r.ode2.abs())).fold(0.0, f64::max);
    ensure(worst < 1e-6, || format!("max ODE residual {worst:.3e}"))?;
    let asy = asymptotic_grid(&GRID_KAPPAS, &GRID_LAMBDAS, Exec::default()).map_err(|e| e.to_string())?;
    let worst_asy = asy.iter().map(|r| r.error()).fold(0.0, f64::max);
    ensure(worst_asy < 1e-6, || format!("max asymptotic error {worst_asy:.3e}"))?;
    ensure(asy.iter().filter(|r| r.shape == LocalShape::UpWedge).all(|r| r.expected == 1.0), || {
        "up-wedge limit is not 1".into()
    })?;
    Ok(format!("{} residual points, max {worst:.3e}; {} limits, max error {worst_asy:.3e}", rows.len(), asy.len()))
}

fn q_to_one() -> Outcome {
    for n in 0..=3 {
        let exec = Exec::default();
        let plain = build_m_with::<BigRational>(n, tile_weight_at_one, exec).map_err(|e| e.to_string())?;
        let special = build_m(n, exec).and_then(|m| m.at_one()).map_err(|e| e.to_string())?;
        ensure(plain == special, || format!("M at q = 1 differs at N = {n}"))?;
        let plain = build_minv_tilings_with::<BigRational>(n, tile_weight_at_one, exec).map_err(|e| e.to_string())?;
        let special = build_minv_tilings(n, exec).and_then(|m| m.at_one()).map_err(|e| e.to_string())?;
        ensure(plain == special, || format!("Minv at q = 1 differs at N = {n}"))?;
    }
    Ok("weights h/(h+1) over Q reproduce the q = 1 specialization for N <= 3".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("catalan counts", 1, catalan_counts),
        ("inversion", 60, inversion),
        ("recursion equivalence", 60, recursion),
        ("golden entries", 60, golden_entries),
        ("quantum-group relations", 30, relations),
        ("highest weight and projections", 120, highest_weight_and_projections),
        ("basis property", 60, basis_property),
        ("cross-module consistency", 60, cross_module),
        ("analytics", 30, analytics),
        ("q -> 1 degeneration", 10, q_to_one),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > Duration::from_secs(*budget) => {
                Err(format!("{msg}, but took longer than the {budget} s budget"))
            }
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {:2} {name}: PASS ({:.2} s) {msg}", i + 1, elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {:2} {name}: FAIL ({:.2} s) {msg}", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
