//! Dyck tiles and Dyck tilings of skew shapes between two Dyck paths.
//!
//! Cells of the skew shape `low/high` are unit diamonds addressed by their
//! center `(col, level)` with `low(col) < level < high(col)` and
//! `level = col + 1 (mod 2)`. A tile is a ribbon with one cell per column of
//! its horizontal extent; the cell levels form its profile, which starts and
//! ends at the tile height `h` and never goes below it.

mod enumerate;
mod render;

use serde::{Deserialize, Serialize};

use crate::dyck::{path_leq, DyckPath};
use crate::error::{Error, Result};

pub use enumerate::{enumerate_cover_inclusive, enumerate_tilings, nested_tiling, TilingKind};
pub use render::render_ascii;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub col: usize,
    pub level: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DyckTile {
    x: usize,
    #[serde(rename = "xp")]
    x_prime: usize,
    h: i32,
    profile: Vec<i32>,
}

impl DyckTile {
    pub fn new(x: usize, x_prime: usize, h: i32, profile: Vec<i32>) -> Result<Self> {
        if h < 1 {
            return Err(Error::InvalidTileHeight(h as i64));
        }
        let bad = |why: &str| Err(Error::InvalidPath(format!("tile ({x},{x_prime},{h}): {why}")));
        if x == 0 || x_prime < x || profile.len() != x_prime - x + 1 {
            return bad("extent and profile length disagree");
        }
        if profile[0] != h || *profile.last().unwrap() != h {
            return bad("profile must start and end at the tile height");
        }
        if profile.iter().any(|&l| l < h) {
            return bad("profile dips below the tile height");
        }
        if profile.windows(2).any(|w| (w[1] - w[0]).abs() != 1) {
            return bad("profile steps must be +-1");
        }
        Ok(Self { x, x_prime, h, profile })
    }

    /// A single-cell tile at column `x`.
    pub fn single(x: usize, h: i32) -> Result<Self> {
        Self::new(x, x, h, vec![h])
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn x_prime(&self) -> usize {
        self.x_prime
    }

    pub fn height(&self) -> i32 {
        self.h
    }

    pub fn profile(&self) -> &[i32] {
        &self.profile
    }

    /// Horizontal extent `[x, x']`, closed.
    pub fn extent(&self) -> (usize, usize) {
        (self.x, self.x_prime)
    }

    /// Shadow `(x - 1, x' + 1)`, an open interval.
    pub fn shadow(&self) -> (i64, i64) {
        (self.x as i64 - 1, self.x_prime as i64 + 1)
    }

    pub fn level_at(&self, col: usize) -> Option<i32> {
        (self.x..=self.x_prime).contains(&col).then(|| self.profile[col - self.x])
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.profile.iter().enumerate().map(move |(i, &level)| Cell { col: self.x + i, level })
    }

    /// True when `self` covers `other`: at some column in both extents, the
    /// cell of `self` lies strictly above the cell of `other`.
    pub fn covers(&self, other: &DyckTile) -> bool {
        let lo = self.x.max(other.x);
        let hi = self.x_prime.min(other.x_prime);
        (lo..=hi).any(|j| self.profile[j - self.x] > other.profile[j - other.x])
    }
}

/// True when `upper` covers `lower`.
pub fn tile_covers(lower: &DyckTile, upper: &DyckTile) -> bool {
    upper.covers(lower)
}

/// The region between two comparable Dyck paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewShape {
    low: DyckPath,
    high: DyckPath,
    cells: Vec<Cell>,
}

impl SkewShape {
    pub fn new(low: DyckPath, high: DyckPath) -> Result<Self> {
        if !path_leq(&low, &high)? {
            return Err(Error::InvalidPath(format!("{low} is not below {high}")));
        }
        let mut cells = Vec::new();
        for col in 0..low.heights().len() {
            let (a, b) = (low.height(col), high.height(col));
            let mut level = a + 1;
            while level < b {
                cells.push(Cell { col, level });
                level += 2;
            }
        }
        Ok(Self { low, high, cells })
    }

    pub fn low(&self) -> &DyckPath {
        &self.low
    }

    pub fn high(&self) -> &DyckPath {
        &self.high
    }

    /// Cells in ascending `(col, level)` order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// A set of tiles covering a skew shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    shape: SkewShape,
    tiles: Vec<DyckTile>,
}

#[derive(Serialize, Deserialize)]
struct TilingJson {
    low: DyckPath,
    high: DyckPath,
    tiles: Vec<DyckTile>,
}

impl Tiling {
    /// Validates that `tiles` are pairwise cell-disjoint and exactly cover
    /// the shape.
    pub fn new(shape: SkewShape, mut tiles: Vec<DyckTile>) -> Result<Self> {
        let mut cells: Vec<Cell> = tiles.iter().flat_map(|t| t.cells()).collect();
        cells.sort();
        if cells.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPath("tiles overlap".into()));
        }
        if cells != shape.cells {
            return Err(Error::InvalidPath("tiles do not cover the skew shape exactly".into()));
        }
        tiles.sort();
        Ok(Self { shape, tiles })
    }

    pub(crate) fn from_parts_unchecked(shape: SkewShape, mut tiles: Vec<DyckTile>) -> Self {
        tiles.sort();
        Self { shape, tiles }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Tiles sorted by `(x, x', h, profile)`.
    pub fn tiles(&self) -> &[DyckTile] {
        &self.tiles
    }

    /// Every pair of distinct tiles satisfies the predicate of `kind`.
    pub fn satisfies(&self, kind: TilingKind) -> bool {
        self.tiles.iter().enumerate().all(|(i, a)| self.tiles[i + 1..].iter().all(|b| kind.compatible(a, b)))
    }

    pub fn is_nested(&self) -> bool {
        self.satisfies(TilingKind::Nested)
    }

    pub fn is_cover_inclusive(&self) -> bool {
        self.satisfies(TilingKind::CoverInclusive)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TilingJson {
            low: self.shape.low.clone(),
            high: self.shape.high.clone(),
            tiles: self.tiles.clone(),
        })
        .expect("tiling serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let t: TilingJson = serde_json::from_value(v.clone()).map_err(|e| Error::Json(e.to_string()))?;
        let tiles =
            t.tiles.into_iter().map(|d| DyckTile::new(d.x, d.x_prime, d.h, d.profile)).collect::<Result<Vec<_>>>()?;
        Tiling::new(SkewShape::new(t.low, t.high)?, tiles)
    }
}
