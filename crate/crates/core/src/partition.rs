//! Integer partitions, skew shapes and the corner combinatorics built on them.
//!
//! Diagrams are drawn in French notation: row 0 is the bottom (longest) row and
//! a [`Cell`] counts rows upwards from it.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is by size first, then reverse-lexicographic within a size, so a
/// sorted collection lists `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)` for size 4.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a diagram. `row` counts from the bottom, `col` from the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(join(&parts)));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// Sorts arbitrary parts into a partition (multiset union uses this).
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_sorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), reading missing parts as zero.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// `true` iff `inner ⊆ self` as diagrams.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.col < self.part(cell.row)
    }

    /// Removable boxes, listed from the top row down.
    pub fn corners(&self) -> Vec<Cell> {
        (0..self.len())
            .rev()
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| Cell::new(r, self.parts[r] - 1))
            .collect()
    }

    /// Number of corners.
    pub fn noc(&self) -> usize {
        self.corners().len()
    }

    /// Addable boxes ("outside corners"), listed from the top row down.
    pub fn outer_corners(&self) -> Vec<Cell> {
        (0..=self.len())
            .rev()
            .filter(|&r| r == 0 || self.part(r - 1) > self.part(r))
            .map(|r| Cell::new(r, self.part(r)))
            .collect()
    }

    /// The partition with `cell` removed. `cell` must be a corner.
    pub fn without(&self, cell: Cell) -> Option<Partition> {
        if cell.row >= self.len() || self.parts[cell.row] != cell.col + 1 || self.part(cell.row + 1) > cell.col {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[cell.row] -= 1;
        Some(Self::from_sorted(parts))
    }

    /// The partition with `cell` added. `cell` must be an outer corner.
    pub fn with(&self, cell: Cell) -> Option<Partition> {
        if self.part(cell.row) != cell.col || (cell.row > 0 && self.part(cell.row - 1) <= cell.col) {
            return None;
        }
        let mut parts = self.parts.clone();
        if cell.row == parts.len() {
            parts.push(1);
        } else {
            parts[cell.row] += 1;
        }
        Some(Partition { parts })
    }

    /// Partitions obtained by removing one corner.
    pub fn remove_set(&self) -> Vec<Partition> {
        let mut out: Vec<_> = self.corners().into_iter().filter_map(|c| self.without(c)).collect();
        out.sort();
        out
    }

    /// Partitions obtained by adding one box.
    pub fn add_set(&self) -> Vec<Partition> {
        let mut out: Vec<_> = self.outer_corners().into_iter().filter_map(|c| self.with(c)).collect();
        out.sort();
        out
    }

    /// Partitions other than `self` reachable by removing a corner and adding a box.
    pub fn addremove_set(&self) -> Vec<Partition> {
        let mut out: Vec<Partition> = self
            .remove_set()
            .iter()
            .flat_map(|mu| mu.add_set())
            .filter(|p| p != self)
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// All partitions `mu ⊆ self`, in canonical order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &[usize], i: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            for v in 0..=outer[i].min(bound) {
                cur.push(v);
                rec(outer, i + 1, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.parts, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z_factor(&self) -> BigUint {
        let mut z = BigUint::one();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let m = self.parts[i..].iter().take_while(|&&q| q == p).count();
            for k in 1..=m {
                z *= BigUint::from(p) * BigUint::from(k);
            }
            i += m;
        }
        z
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::from_multiset(parts)
    }

    /// Smallest partition containing both (the shape union).
    pub fn union_max(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Self::from_sorted((0..n).map(|i| self.part(i).max(other.part(i))).collect())
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| Cell::new(r, c)))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

fn join(parts: &[usize]) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .or_else(|| s.strip_prefix('[').and_then(|s| s.strip_suffix(']')))
            .unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::InvalidPartition(s.to_string()))
    }
}

/// A pair `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { inner, outer });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Column range `[start, end)` of row `r`.
    pub fn row_range(&self, r: usize) -> std::ops::Range<usize> {
        self.inner.part(r)..self.outer.part(r)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.rows()).flat_map(move |r| self.row_range(r).map(move |c| Cell::new(r, c)))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (outer, inner) = match s.split_once('/') {
            Some((o, i)) => (o.parse()?, i.parse()?),
            None => (s.parse()?, Partition::empty()),
        };
        SkewShape::new(outer, inner).map_err(|_| Error::InvalidSkewShape(s.trim().to_string()))
    }
}

/// Free-function form of [`Partition::contains`].
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    outer.contains(inner)
}

/// All partitions of `n`, in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, in canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}
