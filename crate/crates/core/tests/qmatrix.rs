mod common;

use std::path::PathBuf;

use common::{oracle_matrices, random_ratq};
use num_rational::BigRational;
use num_traits::{One, Zero};
use qblocks::dyck::DyckPath;
use qblocks::qfield::{ratq_from_json, ratq_to_json, RatQ};
use qblocks::qmatrix::{
    build_m, build_m_recursive, build_m_with, build_minv_tilings, build_minv_tilings_with, change_basis,
    change_basis_with, invert_by_elimination, tile_weight_at_one, CoeffVector, Direction, QMatrix,
};
use qblocks::Exec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

fn golden_path(n: usize) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/matrices_n{n}.json"))
}

fn dense(m: &QMatrix) -> Vec<Vec<RatQ>> {
    m.entries().to_rows()
}

fn p(s: &str) -> DyckPath {
    DyckPath::from_steps(s).unwrap()
}

fn qr(a: i64, b: i64) -> RatQ {
    RatQ::q_ratio(a, b).unwrap()
}

/// Writes the oracle matrices for N = 2, 3 to `tests/golden/`. Run with
/// `cargo test -p qblocks --test qmatrix -- --ignored` after changing the oracle.
#[test]
#[ignore]
fn regenerate_golden_files() {
    for n in [2, 3] {
        let (order, m, minv) = oracle_matrices(n);
        let to_json = |rows: &[Vec<RatQ>]| -> Value {
            rows.iter().map(|r| r.iter().map(ratq_to_json).collect::<Vec<_>>()).collect()
        };
        let doc = json!({
            "n": n,
            "order": order.iter().map(|a| a.steps()).collect::<Vec<_>>(),
            "m": to_json(&m),
            "minv": to_json(&minv),
        });
        let path = golden_path(n);
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap() + "\n").unwrap();
    }
}

fn read_golden(n: usize) -> (Vec<DyckPath>, Vec<Vec<RatQ>>, Vec<Vec<RatQ>>) {
    let text = std::fs::read_to_string(golden_path(n)).expect("golden file present");
    let doc: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["n"], n);
    let order = doc["order"].as_array().unwrap().iter().map(|s| p(s.as_str().unwrap())).collect();
    let rows = |v: &Value| -> Vec<Vec<RatQ>> {
        v.as_array()
            .unwrap()
            .iter()
            .map(|r| r.as_array().unwrap().iter().map(|x| ratq_from_json(x).unwrap()).collect())
            .collect()
    };
    (order, rows(&doc["m"]), rows(&doc["minv"]))
}

#[test]
fn golden_files_match_library() {
    for n in [2, 3] {
        let (order, m, minv) = read_golden(n);
        let built = build_m(n, Exec::default()).unwrap();
        let built_inv = build_minv_tilings(n, Exec::default()).unwrap();
        assert_eq!(built.order(), order.as_slice());
        assert_eq!(dense(&built), m);
        assert_eq!(dense(&built_inv), minv);
    }
}

#[test]
fn golden_files_hold_known_entries() {
    let (order, m, minv) = read_golden(2);
    assert_eq!(order, vec![p("UDUD"), p("UUDD")]);
    assert_eq!(m, vec![vec![RatQ::one(), -qr(1, 2)], vec![RatQ::zero(), RatQ::one()]]);
    assert_eq!(minv, vec![vec![RatQ::one(), qr(1, 2)], vec![RatQ::zero(), RatQ::one()]]);

    let (order, _, minv) = read_golden(3);
    let idx = |s: &str| order.iter().position(|a| *a == p(s)).unwrap();
    let highest = idx("UUUDDD");
    assert_eq!(minv[idx("UDUDUD")][highest], qr(2, 3));
    assert_eq!(minv[idx("UDUUDD")][highest], qr(1, 3));
}

#[test]
fn library_matches_oracle() {
    for n in 0..=4 {
        let (order, m, minv) = oracle_matrices(n);
        let built = build_m(n, Exec::default()).unwrap();
        assert_eq!(built.order(), order.as_slice());
        assert_eq!(dense(&built), m, "N = {n}");
        assert_eq!(dense(&build_minv_tilings(n, Exec::default()).unwrap()), minv, "N = {n}");
    }
}

#[test]
fn unit_upper_triangular() {
    for n in 0..=5 {
        assert!(build_m(n, Exec::default()).unwrap().is_unit_upper_triangular());
        assert!(build_minv_tilings(n, Exec::default()).unwrap().is_unit_upper_triangular());
    }
}

#[test]
fn inverse_on_both_sides() {
    for n in 0..=5 {
        let m = build_m(n, Exec::default()).unwrap();
        let minv = build_minv_tilings(n, Exec::default()).unwrap();
        assert!(m.mul(&minv, Exec::default()).entries().is_identity(), "N = {n}");
        assert!(minv.mul(&m, Exec::default()).entries().is_identity(), "N = {n}");
    }
}

#[test]
fn recursion_reproduces_tiling_matrix() {
    for n in 0..=5 {
        let a = build_m_recursive(n, Exec::default()).unwrap();
        let b = build_m(n, Exec::default()).unwrap();
        assert_eq!(dense(&a), dense(&b), "N = {n}");
    }
}

#[test]
fn elimination_reproduces_tiling_inverse() {
    for n in 0..=4 {
        let inv = invert_by_elimination(&build_m(n, Exec::default()).unwrap()).unwrap();
        assert_eq!(dense(&inv), dense(&build_minv_tilings(n, Exec::default()).unwrap()), "N = {n}");
    }
}

#[test]
fn sequential_and_parallel_agree() {
    let a = build_minv_tilings(4, Exec::Sequential).unwrap();
    let b = build_minv_tilings(4, Exec::Parallel).unwrap();
    assert_eq!(dense(&a), dense(&b));
}

#[test]
fn plain_rational_weights_match_specialization() {
    for n in 0..=3 {
        let m1 = build_m_with::<BigRational>(n, tile_weight_at_one, Exec::default()).unwrap();
        let at_one = build_m(n, Exec::default()).unwrap().at_one().unwrap();
        assert_eq!(m1.entries().to_rows(), at_one.entries().to_rows(), "N = {n}");
        let i1 = build_minv_tilings_with::<BigRational>(n, tile_weight_at_one, Exec::default()).unwrap();
        let ispec = build_minv_tilings(n, Exec::default()).unwrap().at_one().unwrap();
        assert_eq!(i1.entries().to_rows(), ispec.entries().to_rows(), "N = {n}");
    }
}

#[test]
fn change_of_basis_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=4 {
        let m = build_m(n, Exec::default()).unwrap();
        let minv = build_minv_tilings(n, Exec::default()).unwrap();
        for _ in 0..10 {
            let values = m.order().iter().map(|_| random_ratq(&mut rng)).collect();
            let v = CoeffVector::from_dense(n, m.order(), values);
            let u = change_basis_with(&v, &m).unwrap();
            let back = change_basis_with(&u, &minv).unwrap();
            assert_eq!(back.to_dense(m.order()), v.to_dense(m.order()));
        }
    }
    let v = CoeffVector::unit(p("UUDD"));
    let u = change_basis(&v, Direction::UFromZ, Exec::default()).unwrap();
    assert_eq!(change_basis(&u, Direction::ZFromU, Exec::default()).unwrap(), v);
}
