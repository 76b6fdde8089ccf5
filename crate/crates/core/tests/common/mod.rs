//! Test-side oracles that share no code with the library's enumeration, plus
//! seeded random generators.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};
use qblocks::dyck::{enumerate_paths, DyckPath};
use qblocks::qfield::{LaurentPoly, RatQ};
use qblocks::uqsl2::TensorVec;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// `(x, x', h, profile)`.
pub type RawTile = (usize, usize, i32, Vec<i32>);

fn cells_of(t: &RawTile) -> Vec<(usize, i32)> {
    t.3.iter().enumerate().map(|(i, &l)| (t.0 + i, l)).collect()
}

pub fn shape_cells(low: &DyckPath, high: &DyckPath) -> BTreeSet<(usize, i32)> {
    let mut out = BTreeSet::new();
    for j in 0..low.heights().len() {
        for m in 0..=high.n() as i32 {
            if low.height(j) < m && m < high.height(j) && (m - j as i32 - 1).rem_euclid(2) == 0 {
                out.insert((j, m));
            }
        }
    }
    out
}

/// Every ribbon inside the shape: brute force over all step sequences.
fn all_tiles(cells: &BTreeSet<(usize, i32)>) -> Vec<RawTile> {
    let mut out = Vec::new();
    for &(x, h) in cells {
        let max_len = cells.iter().map(|c| c.0).max().unwrap() - x;
        for len in 0..=max_len {
            for mask in 0u32..(1 << len) {
                let mut profile = vec![h];
                for s in 0..len {
                    let last = *profile.last().unwrap();
                    profile.push(if mask >> s & 1 == 1 { last + 1 } else { last - 1 });
                }
                let t = (x, x + len, h, profile);
                if *t.3.last().unwrap() == h
                    && t.3.iter().all(|&l| l >= h)
                    && cells_of(&t).iter().all(|c| cells.contains(c))
                {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Every tiling of `low/high`, by include/exclude over all candidate tiles.
pub fn all_tilings(low: &DyckPath, high: &DyckPath) -> Vec<Vec<RawTile>> {
    let cells = shape_cells(low, high);
    let tiles = all_tiles(&cells);
    let mut out = Vec::new();
    fn rec(
        i: usize,
        tiles: &[RawTile],
        used: &mut BTreeSet<(usize, i32)>,
        chosen: &mut Vec<RawTile>,
        target: usize,
        out: &mut Vec<Vec<RawTile>>,
    ) {
        if used.len() == target {
            out.push(chosen.clone());
            return;
        }
        if i == tiles.len() {
            return;
        }
        let cs = cells_of(&tiles[i]);
        if cs.iter().all(|c| !used.contains(c)) {
            used.extend(cs.iter().copied());
            chosen.push(tiles[i].clone());
            rec(i + 1, tiles, used, chosen, target, out);
            chosen.pop();
            for c in &cs {
                used.remove(c);
            }
        }
        rec(i + 1, tiles, used, chosen, target, out);
    }
    rec(0, &tiles, &mut BTreeSet::new(), &mut Vec::new(), cells.len(), &mut out);
    out
}

fn covers(upper: &RawTile, lower: &RawTile) -> bool {
    cells_of(upper).iter().any(|&(c, l)| cells_of(lower).iter().any(|&(c2, l2)| c == c2 && l > l2))
}

pub fn is_nested(tiling: &[RawTile]) -> bool {
    for (i, a) in tiling.iter().enumerate() {
        for b in &tiling[i + 1..] {
            let (a0, a1) = (a.0 as f64 - 1.0, a.1 as f64 + 1.0);
            let (b0, b1) = (b.0 as f64 - 1.0, b.1 as f64 + 1.0);
            let overlap = a0.max(b0) < a1.min(b1);
            if !overlap {
                continue;
            }
            let a_in_b = b0 <= a0 && a1 <= b1;
            let b_in_a = a0 <= b0 && b1 <= a1;
            let ok = (b_in_a && covers(a, b)) || (a_in_b && covers(b, a));
            if !ok {
                return false;
            }
        }
    }
    true
}

pub fn is_cover_inclusive(tiling: &[RawTile]) -> bool {
    for a in tiling {
        for b in tiling {
            if a == b || a.1 < b.0 || b.1 < a.0 {
                continue;
            }
            if covers(a, b) && !(b.0 <= a.0 && a.1 <= b.1) {
                return false;
            }
        }
    }
    true
}

fn c(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

pub fn weight(h: i32) -> RatQ {
    let n = LaurentPoly::from_terms((0..h as i64).map(|k| (h as i64 - 1 - 2 * k, c(1))));
    let d = LaurentPoly::from_terms((0..=h as i64).map(|k| (h as i64 - 2 * k, c(1))));
    RatQ::new(n, d).unwrap()
}

/// Dense `(M, M^-1)` of size N from the oracle.
pub fn oracle_matrices(n: usize) -> (Vec<DyckPath>, Vec<Vec<RatQ>>, Vec<Vec<RatQ>>) {
    let order = enumerate_paths(n).unwrap();
    let d = order.len();
    let mut m = vec![vec![RatQ::zero(); d]; d];
    let mut minv = vec![vec![RatQ::zero(); d]; d];
    for (i, a) in order.iter().enumerate() {
        for (j, b) in order.iter().enumerate() {
            if !a.heights().iter().zip(b.heights()).all(|(x, y)| x <= y) {
                continue;
            }
            let tilings = all_tilings(a, b);
            let nested: Vec<_> = tilings.iter().filter(|t| is_nested(t)).collect();
            assert!(nested.len() <= 1);
            if let Some(t) = nested.first() {
                m[i][j] = t.iter().fold(RatQ::one(), |acc, tile| acc * -weight(tile.2));
            }
            for t in tilings.iter().filter(|t| is_cover_inclusive(t)) {
                minv[i][j] = &minv[i][j] + &t.iter().fold(RatQ::one(), |acc, tile| acc * weight(tile.2));
            }
        }
    }
    (order, m, minv)
}

pub fn random_ratq(rng: &mut ChaCha8Rng) -> RatQ {
    let terms = rng.random_range(1..=3);
    let num = LaurentPoly::from_terms((0..terms).map(|_| (rng.random_range(-3..=3), c(rng.random_range(-4i64..=4)))));
    if rng.random_bool(0.3) {
        let den = LaurentPoly::from_terms([(0, c(1)), (rng.random_range(1..=3), c(rng.random_range(1i64..=3)))]);
        RatQ::new(num, den).unwrap()
    } else {
        RatQ::from_poly(num)
    }
}

pub fn random_tensor(rng: &mut ChaCha8Rng, n: usize) -> TensorVec {
    let mut v = TensorVec::zero(n);
    for _ in 0..rng.random_range(1..=4) {
        let bits = rng.random_range(0..1u64 << n);
        v.add_term(bits, random_ratq(rng));
    }
    v
}
