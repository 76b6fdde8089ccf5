//! Invariant suites behind `qblocks verify`.

use num_rational::BigRational;
use qblocks::blocks::{
    asymptotic_grid, residual_grid, uasy_coefficient, GRID_KAPPAS, GRID_LAMBDAS, GRID_Z, ODE_STEP, SHAPES,
};
use qblocks::dyck::{catalan, enumerate_paths, DyckPath};
use qblocks::qfield::{eval_at_kappa, LaurentPoly, QNumeric, RatQ};
use qblocks::qmatrix::{
    build_m, build_m_recursive, build_m_with, build_minv_tilings, build_minv_tilings_with, invert_by_elimination,
    tile_weight_at_one, COVER_INCLUSIVE_CAP, MATRIX_CAP,
};
use qblocks::tilings::Tiling;
use qblocks::uqsl2::{
    act, basis_rank, build_u, homogeneous_kernel, verify_projections, Generator, ProjectionCase, TensorVec, BLOCK_CAP,
};
use qblocks::Exec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SUITE_NAMES: [&str; 12] = [
    "catalan",
    "paths",
    "inverse",
    "recursion",
    "elimination",
    "q-one",
    "relations",
    "highest-weight",
    "projections",
    "basis",
    "cross-module",
    "blocks",
];

pub struct SuiteReport {
    pub name: &'static str,
    pub ok: bool,
    pub detail: String,
}

type Outcome = qblocks::Result<(bool, String)>;

/// Runs the named suites, possibly in parallel; reports come back in the
/// order given.
pub fn run_suites(names: &[&str], n_max: usize, seed: u64) -> Vec<SuiteReport> {
    let jobs: Vec<&'static str> =
        names.iter().map(|n| *SUITE_NAMES.iter().find(|s| *s == n).expect("validated by the parser")).collect();
    Exec::default().map(jobs, |name| {
        let outcome = run_one(name, n_max, seed);
        match outcome {
            Ok((ok, detail)) => SuiteReport { name, ok, detail },
            Err(e) => SuiteReport { name, ok: false, detail: format!("error: {e}") },
        }
    })
}

fn run_one(name: &str, n_max: usize, seed: u64) -> Outcome {
    match name {
        "catalan" => catalan_counts(n_max),
        "paths" => path_round_trips(n_max.min(5)),
        "inverse" => inverse(n_max.min(COVER_INCLUSIVE_CAP)),
        "recursion" => recursion(n_max.min(MATRIX_CAP)),
        "elimination" => elimination(n_max.min(COVER_INCLUSIVE_CAP)),
        "q-one" => q_one(n_max.min(COVER_INCLUSIVE_CAP)),
        "relations" => relations(n_max, seed),
        "highest-weight" => highest_weight(n_max.min(BLOCK_CAP)),
        "projections" => projections(n_max.min(BLOCK_CAP)),
        "basis" => basis(n_max.min(BLOCK_CAP)),
        "cross-module" => cross_module(n_max.min(BLOCK_CAP)),
        "blocks" => blocks(),
        _ => unreachable!("unknown suite {name}"),
    }
}

fn catalan_counts(n_max: usize) -> Outcome {
    let ok = (0..=n_max).all(|n| enumerate_paths(n).map(|p| p.len() as u64 == catalan(n)).unwrap_or(false));
    Ok((ok, format!("N = 0..={n_max}")))
}

fn path_round_trips(n_max: usize) -> Outcome {
    let mut ok = true;
    for n in 0..=n_max {
        for a in enumerate_paths(n)? {
            ok &= a.steps().parse::<DyckPath>().ok().as_ref() == Some(&a);
            let heights = serde_json::to_string(&a).expect("serializable");
            ok &= serde_json::from_str::<DyckPath>(&heights).ok().as_ref() == Some(&a);
            if n <= 3 {
                for b in enumerate_paths(n)? {
                    if let Some(t) = qblocks::tilings::nested_tiling(&a, &b)? {
                        ok &= Tiling::from_json(&t.to_json()).ok().as_ref() == Some(&t);
                    }
                }
            }
        }
    }
    Ok((ok, format!("step strings and JSON round trip, N <= {n_max}")))
}

fn inverse(n_max: usize) -> Outcome {
    let exec = Exec::default();
    for n in 0..=n_max {
        let m = build_m(n, exec)?;
        let minv = build_minv_tilings(n, exec)?;
        if !m.is_unit_upper_triangular() || !m.mul(&minv, exec).entries().is_identity() {
            return Ok((false, format!("M * Minv != I at N = {n}")));
        }
    }
    Ok((true, format!("M * Minv = I, N <= {n_max}")))
}

fn recursion(n_max: usize) -> Outcome {
    for n in 0..=n_max {
        if build_m_recursive(n, Exec::default())? != build_m(n, Exec::default())? {
            return Ok((false, format!("recursion differs at N = {n}")));
        }
    }
    Ok((true, format!("recursion = tiling matrix, N <= {n_max}")))
}

fn elimination(n_max: usize) -> Outcome {
    for n in 0..=n_max {
        if invert_by_elimination(&build_m(n, Exec::default())?)? != build_minv_tilings(n, Exec::default())? {
            return Ok((false, format!("elimination differs at N = {n}")));
        }
    }
    Ok((true, format!("elimination = tiling sum, N <= {n_max}")))
}

fn q_one(n_max: usize) -> Outcome {
    let exec = Exec::default();
    for n in 0..=n_max {
        let plain = build_m_with::<BigRational>(n, tile_weight_at_one, exec)?;
        let plain_inv = build_minv_tilings_with::<BigRational>(n, tile_weight_at_one, exec)?;
        if plain != build_m(n, exec)?.at_one()? || plain_inv != build_minv_tilings(n, exec)?.at_one()? {
            return Ok((false, format!("q = 1 specialization differs at N = {n}")));
        }
    }
    Ok((true, format!("weights h/(h+1) match q = 1, N <= {n_max}")))
}

fn random_ratq(rng: &mut ChaCha8Rng) -> RatQ {
    let terms: Vec<(i64, BigRational)> = (0..rng.random_range(1..=3))
        .map(|_| (rng.random_range(-3..=3), BigRational::from_integer(rng.random_range(-4i64..=4).into())))
        .collect();
    RatQ::from_poly(LaurentPoly::from_terms(terms))
}

fn relations(n_max: usize, seed: u64) -> Outcome {
    use Generator::{KInv, E, F, K};
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let denom = (&RatQ::q_pow(1) - &RatQ::q_pow(-1)).inv()?;
    let factors = (2 * n_max).clamp(2, 8);
    let mut count = 0;
    for n in 2..=factors {
        for _ in 0..100 {
            let mut v = TensorVec::zero(n);
            for _ in 0..rng.random_range(1..=4) {
                v.add_term(rng.random_range(0..1u64 << n), random_ratq(&mut rng));
            }
            let ok = act(K, &act(KInv, &v)) == v
                && act(K, &act(E, &v)) == act(E, &act(K, &v)).scale(&RatQ::q_pow(2))
                && act(K, &act(F, &v)) == act(F, &act(K, &v)).scale(&RatQ::q_pow(-2))
                && act(E, &act(F, &v)).sub(&act(F, &act(E, &v))) == act(K, &v).sub(&act(KInv, &v)).scale(&denom);
            if !ok {
                return Ok((false, format!("relation fails on {v:?}")));
            }
            count += 1;
        }
    }
    Ok((true, format!("{count} random vectors, 2..={factors} factors")))
}

fn highest_weight(n_max: usize) -> Outcome {
    for n in 0..=n_max {
        for a in enumerate_paths(n)? {
            if !build_u(&a)?.prefixes_are_highest_weight() {
                return Ok((false, format!("prefix of {} not highest weight", a.steps())));
            }
        }
    }
    Ok((true, format!("all prefixes, N <= {n_max}")))
}

fn projections(n_max: usize) -> Outcome {
    let mut columns = 0;
    for n in 0..=n_max {
        for a in enumerate_paths(n)? {
            let report = verify_projections(&a)?;
            if let Some(bad) = report.failures().next() {
                return Ok((false, format!("{} fails at column {}", a.steps(), bad.j)));
            }
            columns += report.checks.len();
        }
    }
    Ok((true, format!("{columns} columns, N <= {n_max}")))
}

fn basis(n_max: usize) -> Outcome {
    let rank_max = n_max.min(4);
    for n in 0..=rank_max {
        let r = basis_rank(n, Exec::default())?;
        if r as u64 != catalan(n) {
            return Ok((false, format!("rank {r} at N = {n}")));
        }
    }
    let kernel_max = n_max.min(3);
    for n in 1..=kernel_max {
        if !homogeneous_kernel(n)?.is_trivial() {
            return Ok((false, format!("joint projection kernel nonzero at N = {n}")));
        }
    }
    Ok((true, format!("rank = Catalan for N <= {rank_max}, trivial kernel for N <= {kernel_max}")))
}

fn cross_module(n_max: usize) -> Outcome {
    let n_max = n_max.min(3);
    let mut worst = 0f64;
    for kappa in [2.5, 3.7, 5.3] {
        let ctx = QNumeric::new(kappa)?;
        for n in 1..=n_max {
            for a in enumerate_paths(n)? {
                for check in verify_projections(&a)?.checks {
                    let exact = match check.case {
                        ProjectionCase::DownWedge(f) => eval_at_kappa(&f, &ctx)?.re,
                        ProjectionCase::UpWedge => 1.0,
                        ProjectionCase::Slope => 0.0,
                    };
                    worst = worst.max((uasy_coefficient(&a, check.j, kappa)? - exact).abs());
                }
            }
        }
    }
    Ok((worst < 1e-10, format!("max deviation {worst:.3e}, N <= {n_max}")))
}

fn blocks() -> Outcome {
    let exec = Exec::default();
    let res = residual_grid(&GRID_KAPPAS, &GRID_LAMBDAS, &SHAPES, &GRID_Z, ODE_STEP, exec)?;
    let asy = asymptotic_grid(&GRID_KAPPAS, &GRID_LAMBDAS, exec)?;
    let worst_res = res.iter().map(|r| r.ode1.abs().max(r.ode2.abs())).fold(0.0, f64::max);
    let worst_asy = asy.iter().map(|r| r.error()).fold(0.0, f64::max);
    Ok((worst_res < 1e-6 && worst_asy < 1e-6, format!("max residual {worst_res:.3e}, max limit error {worst_asy:.3e}")))
}
