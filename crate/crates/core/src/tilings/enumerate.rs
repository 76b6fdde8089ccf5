use super::{Cell, DyckTile, SkewShape, Tiling};
use crate::dyck::{path_leq, DyckPath};
use crate::error::{Error, Result};

/// Which tilings an enumeration keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TilingKind {
    All,
    /// Shadows of any two tiles are disjoint or nested, and the tile with the
    /// larger shadow covers the other.
    Nested,
    /// Extents of any two tiles are disjoint, or the covering tile's extent
    /// lies inside the covered tile's extent.
    CoverInclusive,
}

impl TilingKind {
    /// The pairwise condition on two distinct tiles of one tiling.
    pub fn compatible(self, a: &DyckTile, b: &DyckTile) -> bool {
        match self {
            TilingKind::All => true,
            TilingKind::Nested => nested_pair(a, b),
            TilingKind::CoverInclusive => cover_inclusive_pair(a, b),
        }
    }
}

fn nested_pair(a: &DyckTile, b: &DyckTile) -> bool {
    let (sa, sb) = (a.shadow(), b.shadow());
    if sa.1 <= sb.0 || sb.1 <= sa.0 {
        return true;
    }
    let a_holds_b = sa.0 <= sb.0 && sb.1 <= sa.1;
    let b_holds_a = sb.0 <= sa.0 && sa.1 <= sb.1;
    match (a_holds_b, b_holds_a) {
        (true, true) => a.covers(b) || b.covers(a),
        (true, false) => a.covers(b),
        (false, true) => b.covers(a),
        (false, false) => false,
    }
}

fn cover_inclusive_pair(a: &DyckTile, b: &DyckTile) -> bool {
    if a.x_prime < b.x || b.x_prime < a.x {
        return true;
    }
    let inside = |s: &DyckTile, t: &DyckTile| t.x <= s.x && s.x_prime <= t.x_prime;
    (!a.covers(b) || inside(a, b)) && (!b.covers(a) || inside(b, a))
}

struct Search<'a> {
    shape: &'a SkewShape,
    kind: TilingKind,
    covered: Vec<bool>,
    placed: Vec<DyckTile>,
    out: Vec<Tiling>,
}

impl Search<'_> {
    fn index(&self, c: Cell) -> Option<usize> {
        self.shape.cells.binary_search(&c).ok()
    }

    fn free(&self, c: Cell) -> bool {
        self.index(c).is_some_and(|i| !self.covered[i])
    }

    fn run(&mut self) {
        let Some(first) = self.covered.iter().position(|&c| !c) else {
            self.out.push(Tiling::from_parts_unchecked(self.shape.clone(), self.placed.clone()));
            return;
        };
        let start = self.shape.cells[first];
        for tile in self.candidates(start) {
            if !self.placed.iter().all(|p| self.kind.compatible(p, &tile)) {
                continue;
            }
            let idx: Vec<usize> = tile.cells().map(|c| self.index(c).unwrap()).collect();
            for &i in &idx {
                self.covered[i] = true;
            }
            self.placed.push(tile);
            self.run();
            self.placed.pop();
            for &i in &idx {
                self.covered[i] = false;
            }
        }
    }

    /// Every tile whose leftmost cell is `start` and whose cells are free.
    fn candidates(&self, start: Cell) -> Vec<DyckTile> {
        let mut out = Vec::new();
        let mut profile = vec![start.level];
        self.grow(start, &mut profile, &mut out);
        out
    }

    fn grow(&self, start: Cell, profile: &mut Vec<i32>, out: &mut Vec<DyckTile>) {
        let level = *profile.last().unwrap();
        if level == start.level {
            let x_prime = start.col + profile.len() - 1;
            out.push(DyckTile { x: start.col, x_prime, h: start.level, profile: profile.clone() });
        }
        let col = start.col + profile.len();
        for next in [level - 1, level + 1] {
            if next >= start.level && self.free(Cell { col, level: next }) {
                profile.push(next);
                self.grow(start, profile, out);
                profile.pop();
            }
        }
    }
}

/// All tilings of `shape` of the given kind. The leftmost uncovered cell
/// (smallest column, then lowest level) is always the leftmost cell of the
/// next tile, so every tiling is produced exactly once.
pub fn enumerate_tilings(shape: &SkewShape, kind: TilingKind) -> Vec<Tiling> {
    let mut s = Search { shape, kind, covered: vec![false; shape.cells.len()], placed: Vec::new(), out: Vec::new() };
    s.run();
    s.out
}

/// The unique nested tiling of `low/high`, or `None` when there is none
/// (in particular when `low` is not below `high`).
pub fn nested_tiling(low: &DyckPath, high: &DyckPath) -> Result<Option<Tiling>> {
    if !path_leq(low, high)? {
        return Ok(None);
    }
    let shape = SkewShape::new(low.clone(), high.clone())?;
    let mut found = enumerate_tilings(&shape, TilingKind::Nested);
    match found.len() {
        0 => Ok(None),
        1 => Ok(found.pop()),
        _ => Err(Error::NestedNotUnique { alpha: low.to_string(), beta: high.to_string() }),
    }
}

/// All cover-inclusive tilings of `low/high`; empty when `low` is not below
/// `high`.
pub fn enumerate_cover_inclusive(low: &DyckPath, high: &DyckPath) -> Result<Vec<Tiling>> {
    if !path_leq(low, high)? {
        return Ok(Vec::new());
    }
    let shape = SkewShape::new(low.clone(), high.clone())?;
    Ok(enumerate_tilings(&shape, TilingKind::CoverInclusive))
}
