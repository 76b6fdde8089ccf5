//! Dyck paths stored as height sequences.
//!
//! The derived `Ord` on [`DyckPath`] is ascending lexicographic order on the
//! height sequence. It refines the pointwise partial order and is the
//! canonical row/column order of every matrix in the crate.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest N accepted by [`enumerate_paths`] (C_12 = 208012 paths).
pub const MAX_PATH_N: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct DyckPath(Vec<i32>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocalShape {
    UpWedge,
    DownWedge,
    UpSlope,
    DownSlope,
}

impl LocalShape {
    pub fn is_wedge(self) -> bool {
        matches!(self, LocalShape::UpWedge | LocalShape::DownWedge)
    }

    pub fn is_slope(self) -> bool {
        !self.is_wedge()
    }
}

impl DyckPath {
    pub fn new(heights: Vec<i32>) -> Result<Self> {
        if heights.len().is_multiple_of(2) {
            return Err(Error::InvalidPath(format!("length {} is not odd", heights.len())));
        }
        if heights[0] != 0 || *heights.last().unwrap() != 0 {
            return Err(Error::InvalidPath("path must start and end at height 0".into()));
        }
        for (j, w) in heights.windows(2).enumerate() {
            if (w[1] - w[0]).abs() != 1 {
                return Err(Error::InvalidPath(format!("step {} is not +-1", j + 1)));
            }
            if w[1] < 0 {
                return Err(Error::InvalidPath(format!("negative height at {}", j + 1)));
            }
        }
        Ok(Self(heights))
    }

    /// The empty path `(0)` of DP_0.
    pub fn empty() -> Self {
        Self(vec![0])
    }

    /// Parses a step string over `{U, D}`, e.g. `"UDUD"`.
    pub fn from_steps(s: &str) -> Result<Self> {
        let mut heights = vec![0];
        let mut h = 0;
        for (i, ch) in s.chars().enumerate() {
            h += match ch {
                'U' | 'u' => 1,
                'D' | 'd' => -1,
                other => return Err(Error::Parse { index: i, reason: format!("unexpected character {other:?}") }),
            };
            if h < 0 {
                return Err(Error::Parse { index: i, reason: "height goes negative".into() });
            }
            heights.push(h);
        }
        if h != 0 {
            return Err(Error::Parse { index: s.len(), reason: format!("path ends at height {h}, not 0") });
        }
        Ok(Self(heights))
    }

    pub fn steps(&self) -> String {
        self.0.windows(2).map(|w| if w[1] > w[0] { 'U' } else { 'D' }).collect()
    }

    pub fn heights(&self) -> &[i32] {
        &self.0
    }

    /// `alpha(j)`.
    pub fn height(&self, j: usize) -> i32 {
        self.0[j]
    }

    /// Half the number of steps.
    pub fn n(&self) -> usize {
        self.0.len() / 2
    }

    pub fn len_steps(&self) -> usize {
        self.0.len() - 1
    }

    fn check_column(&self, j: usize) -> Result<()> {
        let max = self.len_steps().saturating_sub(1);
        if j == 0 || j > max {
            return Err(Error::ColumnOutOfRange { j, max });
        }
        Ok(())
    }

    /// Wedge or slope at the interior column `j`, `1 <= j <= 2N - 1`.
    pub fn local_shape(&self, j: usize) -> Result<LocalShape> {
        self.check_column(j)?;
        let (a, b, c) = (self.0[j - 1], self.0[j], self.0[j + 1]);
        Ok(match (a == c, b > a) {
            (true, true) => LocalShape::UpWedge,
            (true, false) => LocalShape::DownWedge,
            (false, true) => LocalShape::UpSlope,
            (false, false) => LocalShape::DownSlope,
        })
    }

    /// Interior columns carrying a wedge of the given kind.
    pub fn wedges(&self, kind: LocalShape) -> Vec<usize> {
        (1..self.len_steps()).filter(|&j| self.local_shape(j).ok() == Some(kind)).collect()
    }

    /// Drops `alpha(j)` and `alpha(j+1)`; requires a wedge at `j`.
    pub fn remove_wedge(&self, j: usize) -> Result<Self> {
        if !self.local_shape(j)?.is_wedge() {
            return Err(Error::NotAWedge(j));
        }
        let mut h = Vec::with_capacity(self.0.len() - 2);
        h.extend_from_slice(&self.0[..j]);
        h.extend_from_slice(&self.0[j + 2..]);
        Ok(Self(h))
    }

    /// Inverse of [`remove_wedge`](Self::remove_wedge): inserts a wedge of the
    /// given kind so that it sits at column `j` of the result.
    pub fn insert_wedge(&self, j: usize, kind: LocalShape) -> Result<Self> {
        if j == 0 || j > self.0.len() {
            return Err(Error::ColumnOutOfRange { j, max: self.0.len() });
        }
        let base = self.0[j - 1];
        let tip = match kind {
            LocalShape::UpWedge => base + 1,
            LocalShape::DownWedge => base - 1,
            _ => return Err(Error::NotAWedge(j)),
        };
        let mut h = Vec::with_capacity(self.0.len() + 2);
        h.extend_from_slice(&self.0[..j]);
        h.push(tip);
        h.push(base);
        h.extend_from_slice(&self.0[j..]);
        Self::new(h)
    }
}

/// Pointwise order `alpha(j) <= beta(j)` for all `j`.
pub fn path_leq(alpha: &DyckPath, beta: &DyckPath) -> Result<bool> {
    if alpha.0.len() != beta.0.len() {
        return Err(Error::LengthMismatch(alpha.0.len(), beta.0.len()));
    }
    Ok(alpha.0.iter().zip(&beta.0).all(|(a, b)| a <= b))
}

/// All Dyck paths with `2n` steps in canonical (ascending lexicographic) order.
pub fn enumerate_paths(n: usize) -> Result<Vec<DyckPath>> {
    if n > MAX_PATH_N {
        return Err(Error::CapExceeded { n, cap: MAX_PATH_N });
    }
    let len = 2 * n;
    let mut out = Vec::new();
    let mut heights = vec![0i32; len + 1];
    fn rec(pos: usize, len: usize, heights: &mut [i32], out: &mut Vec<DyckPath>) {
        if pos == len {
            out.push(DyckPath(heights.to_vec()));
            return;
        }
        let h = heights[pos];
        let remaining = (len - pos - 1) as i32;
        // lower successor first keeps the output sorted
        for next in [h - 1, h + 1] {
            if next >= 0 && next <= remaining {
                heights[pos + 1] = next;
                rec(pos + 1, len, heights, out);
            }
        }
    }
    rec(0, len, &mut heights, &mut out);
    Ok(out)
}

/// The n-th Catalan number.
pub fn catalan(n: usize) -> u64 {
    (0..n as u64).fold(1u64, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, h) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath{self}")
    }
}

impl FromStr for DyckPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::from_steps(s.trim())
    }
}

impl TryFrom<Vec<i32>> for DyckPath {
    type Error = Error;
    fn try_from(v: Vec<i32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<DyckPath> for Vec<i32> {
    fn from(p: DyckPath) -> Self {
        p.0
    }
}
