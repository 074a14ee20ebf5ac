//! Semistandard and anti-semistandard tableaux on skew shapes, reading words,
//! lattice conditions, the ψ bijection, jeu de taquin, and the skew Pieri and
//! skew Littlewood–Richardson rules.
//!
//! All tableaux use French notation: row 0 is the bottom row.

mod corners;
mod jdt;
mod pieri;
pub(crate) mod search;
mod skewlr;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition, SkewShape};
use search::{Plan, Search};

pub use corners::{add_restrict, classify_jdt, skew_corners_rhs, verify_jdt_bijection, JdtBijectionReport, JdtCase, JdtInstance};
pub use jdt::{jdt_slide, Slide, SlideDirection};
pub use pieri::{collapse, horizontal_strips, skew_pieri, skew_pieri_terms, vertical_strip_removals, SignedSkew};
pub use skewlr::{skew_lr_pairs, skew_lr_pairs_with_shapes, skew_lr_product, skew_lr_terms, PairTerm};

pub type Word = Vec<usize>;

/// A filling of a skew shape by positive integers, stored row by row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Filling {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Filling {
    /// `rows[r]` lists the entries of row `r` (from the bottom), left to right.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut rows = rows;
        while rows.len() > shape.rows() && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        rows.resize(shape.rows(), Vec::new());
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.row_range(r).len() {
                return Err(Error::InvalidTableau(format!("row {r} has {} entries, shape {shape} needs {}", row.len(), shape.row_range(r).len())));
            }
            if row.contains(&0) {
                return Err(Error::InvalidTableau("entries must be positive".into()));
            }
        }
        Ok(Filling { shape, rows })
    }

    /// Builds a filling of `shape` from a map covering exactly its cells.
    pub fn from_cell_map(shape: SkewShape, cells: &BTreeMap<Cell, usize>) -> Result<Self> {
        if shape.size() != cells.len() || !cells.keys().all(|&c| shape.contains_cell(c)) {
            return Err(Error::InvalidTableau(format!("cells do not cover {shape}")));
        }
        let rows = (0..shape.rows())
            .map(|r| shape.row_range(r).map(|c| cells[&Cell::new(r, c)]).collect())
            .collect();
        Filling::new(shape, rows)
    }

    pub(crate) fn from_plan(shape: &SkewShape, cells: &[Cell], word: &[usize]) -> Self {
        let mut rows: Vec<Vec<usize>> = (0..shape.rows()).map(|r| vec![0; shape.row_range(r).len()]).collect();
        for (cell, &v) in cells.iter().zip(word) {
            let start = shape.inner().part(cell.row);
            rows[cell.row][cell.col - start] = v;
        }
        Filling { shape: shape.clone(), rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        if !self.shape.contains_cell(cell) {
            return None;
        }
        Some(self.rows[cell.row][cell.col - self.shape.inner().part(cell.row)])
    }

    pub fn entries(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.shape.cells().map(|c| (c, self.get(c).unwrap()))
    }

    pub fn cell_map(&self) -> BTreeMap<Cell, usize> {
        self.entries().collect()
    }

    /// `content[i]` is the number of entries equal to `i + 1`.
    pub fn content(&self) -> Vec<usize> {
        let mut content = Vec::new();
        for row in &self.rows {
            for &v in row {
                if content.len() < v {
                    content.resize(v, 0);
                }
                content[v - 1] += 1;
            }
        }
        content
    }

    fn is_semistandard(&self) -> bool {
        self.entries().all(|(c, v)| {
            let right_ok = self.get(Cell::new(c.row, c.col + 1)).map_or(true, |w| v <= w);
            let up_ok = self.get(Cell::new(c.row + 1, c.col)).map_or(true, |w| v < w);
            right_ok && up_ok
        })
    }

    fn is_anti_semistandard(&self) -> bool {
        self.entries().all(|(c, v)| {
            let right_ok = self.get(Cell::new(c.row, c.col + 1)).map_or(true, |w| v > w);
            let up_ok = self.get(Cell::new(c.row + 1, c.col)).map_or(true, |w| v >= w);
            right_ok && up_ok
        })
    }
}

impl fmt::Display for Filling {
    /// Rows printed top to bottom, inner cells shown as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in (0..self.shape.rows()).rev() {
            let dots = ". ".repeat(self.shape.inner().part(r));
            let vals: Vec<String> = self.rows[r].iter().map(|v| v.to_string()).collect();
            writeln!(f, "{dots}{}", vals.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Filling({}: {:?})", self.shape, self.rows)
    }
}

/// Semistandard Young tableau: rows weakly increase, columns strictly increase upwards.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Debug)]
#[serde(transparent)]
pub struct Ssyt(Filling);

/// Anti-semistandard tableau: rows strictly decrease, columns weakly decrease upwards.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Debug)]
#[serde(transparent)]
pub struct Assyt(Filling);

impl Ssyt {
    pub fn new(filling: Filling) -> Result<Self> {
        if !filling.is_semistandard() {
            return Err(Error::InvalidTableau(format!("not semistandard: {filling:?}")));
        }
        Ok(Ssyt(filling))
    }

    pub fn from_rows(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        Ssyt::new(Filling::new(shape, rows)?)
    }

    pub fn filling(&self) -> &Filling {
        &self.0
    }

    pub fn shape(&self) -> &SkewShape {
        self.0.shape()
    }

    /// Rows read right to left, bottom row first.
    pub fn reverse_reading_word(&self) -> Word {
        self.0.rows.iter().flat_map(|row| row.iter().rev().copied()).collect()
    }
}

impl Assyt {
    pub fn new(filling: Filling) -> Result<Self> {
        if !filling.is_anti_semistandard() {
            return Err(Error::InvalidTableau(format!("not anti-semistandard: {filling:?}")));
        }
        Ok(Assyt(filling))
    }

    pub fn from_rows(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        Assyt::new(Filling::new(shape, rows)?)
    }

    pub fn filling(&self) -> &Filling {
        &self.0
    }

    pub fn shape(&self) -> &SkewShape {
        self.0.shape()
    }

    /// Columns read bottom to top, rightmost column first.
    pub fn reverse_reading_word(&self) -> Word {
        let plan = Plan::assyt(self.shape());
        plan.cells.iter().map(|&c| self.0.get(c).unwrap()).collect()
    }

    /// Transpose, then rotate by 180°. The image is an SSYT with the same
    /// reverse reading word.
    pub fn transpose_rotate(&self) -> Ssyt {
        let shape = self.shape();
        // bounding box of the transposed diagram
        let height = shape.outer().part(0);
        let width = shape.rows();
        let cells: BTreeMap<Cell, usize> = self
            .0
            .entries()
            .map(|(c, v)| (Cell::new(height - 1 - c.col, width - 1 - c.row), v))
            .collect();
        let outer_t = shape.outer().conjugate();
        let inner_t = shape.inner().conjugate();
        let outer = Partition::new((0..height).map(|r| width - inner_t.part(height - 1 - r)).collect()).unwrap();
        let inner = Partition::new((0..height).map(|r| width - outer_t.part(height - 1 - r)).collect()).unwrap();
        let rot = SkewShape::new(outer, inner).unwrap();
        let rows = (0..rot.rows())
            .map(|r| rot.row_range(r).map(|c| cells[&Cell::new(r, c)]).collect())
            .collect();
        Ssyt(Filling { shape: rot, rows })
    }
}

impl fmt::Display for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for Assyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All SSYT of `shape` with exactly `content[i]` entries equal to `i + 1`.
pub fn enumerate_ssyt(shape: &SkewShape, content: &[usize]) -> Vec<Ssyt> {
    collect(shape, &Search::with_content(content))
}

/// All SSYT of `shape` with entries in `1..=max_entry`.
pub fn enumerate_ssyt_bounded(shape: &SkewShape, max_entry: usize) -> Vec<Ssyt> {
    collect(shape, &Search::bounded(max_entry))
}

/// Littlewood–Richardson fillings: SSYT of the given content whose reverse
/// reading word is a lattice permutation.
pub fn lr_fillings(shape: &SkewShape, content: &[usize]) -> Vec<Ssyt> {
    collect(shape, &Search::with_content(content).lattice(&[]))
}

pub fn count_lr_fillings(shape: &SkewShape, content: &[usize]) -> u64 {
    Search::with_content(content).lattice(&[]).count(&Plan::ssyt(shape))
}

fn collect(shape: &SkewShape, search: &Search) -> Vec<Ssyt> {
    let plan = Plan::ssyt(shape);
    let mut out = Vec::new();
    search.run(&plan, |w| out.push(Ssyt(Filling::from_plan(shape, &plan.cells, w))));
    out
}

pub fn is_lattice(word: &[usize]) -> bool {
    is_delta_lattice(word, &Partition::empty())
}

/// Lattice test after prefixing `δ_1` ones, `δ_2` twos, and so on.
pub fn is_delta_lattice(word: &[usize], delta: &Partition) -> bool {
    let top = word.iter().copied().max().unwrap_or(0).max(delta.len());
    let mut counts = vec![0usize; top + 2];
    for (i, &m) in delta.parts().iter().enumerate() {
        counts[i + 1] = m;
    }
    for &v in word {
        if v == 0 {
            return false;
        }
        counts[v] += 1;
        if v > 1 && counts[v] > counts[v - 1] {
            return false;
        }
    }
    true
}

/// Relabels an LR filling: the `i`-th occurrence (in reading order) of any
/// value becomes `i`. Produces a lattice ASSYT with conjugate content.
pub fn psi(t: &Ssyt) -> Result<Assyt> {
    let word = t.reverse_reading_word();
    if !is_lattice(&word) {
        return Err(Error::NotLattice);
    }
    let plan = Plan::ssyt(t.shape());
    let mut seen = BTreeMap::<usize, usize>::new();
    let relabelled: Vec<usize> = word
        .iter()
        .map(|&v| {
            let k = seen.entry(v).or_insert(0);
            *k += 1;
            *k
        })
        .collect();
    Assyt::new(Filling::from_plan(t.shape(), &plan.cells, &relabelled))
}

/// Inverse of [`psi`]: the `j`-th occurrence (in ASSYT reading order) of any
/// value becomes `j`.
pub fn psi_inverse(t: &Assyt) -> Result<Ssyt> {
    let word = t.reverse_reading_word();
    if !is_lattice(&word) {
        return Err(Error::NotLattice);
    }
    let plan = Plan::assyt(t.shape());
    let mut seen = BTreeMap::<usize, usize>::new();
    let relabelled: Vec<usize> = word
        .iter()
        .map(|&v| {
            let k = seen.entry(v).or_insert(0);
            *k += 1;
            *k
        })
        .collect();
    Ssyt::new(Filling::from_plan(t.shape(), &plan.cells, &relabelled))
}
