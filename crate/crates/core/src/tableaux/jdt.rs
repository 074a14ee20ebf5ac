//! Single jeu de taquin slides on skew SSYT.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{Filling, Ssyt};
use crate::error::{Error, Result};
use crate::partition::{Cell, SkewShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SlideDirection {
    /// into an inner corner; entries move down and left
    Forward,
    /// into an outer corner; entries move up and right
    Reverse,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Slide {
    pub direction: SlideDirection,
    pub tableau: Ssyt,
    /// Cell left empty at the end of the slide; `None` when nothing could
    /// move into the hole and the tableau is unchanged.
    pub vacated: Option<Cell>,
    /// Successive hole positions, starting at the original hole.
    pub path: Vec<Cell>,
}

/// Slides `t` into `hole`, which must be a corner of the inner shape
/// (forward slide) or an addable cell of the outer shape (reverse slide).
///
/// Ties favour the column neighbour in both directions, so forward and
/// reverse slides invert each other.
pub fn jdt_slide(t: &Ssyt, hole: Cell) -> Result<Slide> {
    let shape = t.shape();
    if shape.inner().contains_cell(hole) && shape.inner().without(hole).is_some() {
        forward(t, hole)
    } else if shape.outer().with(hole).is_some() {
        reverse(t, hole)
    } else {
        Err(Error::IllegalSlide(hole))
    }
}

fn unchanged(t: &Ssyt, direction: SlideDirection, hole: Cell) -> Slide {
    Slide { direction, tableau: t.clone(), vacated: None, path: vec![hole] }
}

fn forward(t: &Ssyt, hole: Cell) -> Result<Slide> {
    let mut cells: BTreeMap<Cell, usize> = t.filling().cell_map();
    let mut h = hole;
    let mut path = vec![h];
    loop {
        let right = cells.get(&Cell::new(h.row, h.col + 1)).copied();
        let above = cells.get(&Cell::new(h.row + 1, h.col)).copied();
        let next = match (right, above) {
            (None, None) => break,
            (Some(_), None) => Cell::new(h.row, h.col + 1),
            (None, Some(_)) => Cell::new(h.row + 1, h.col),
            (Some(r), Some(a)) if a <= r => Cell::new(h.row + 1, h.col),
            (Some(_), Some(_)) => Cell::new(h.row, h.col + 1),
        };
        let v = cells.remove(&next).expect("neighbour present");
        cells.insert(h, v);
        h = next;
        path.push(h);
    }
    if h == hole {
        return Ok(unchanged(t, SlideDirection::Forward, hole));
    }
    let shape = t.shape();
    let inner = shape.inner().without(hole).expect("hole is an inner corner");
    let outer = shape.outer().without(h).expect("slide ends at an outer corner");
    let new_shape = SkewShape::new(outer, inner)?;
    let tableau = Ssyt::new(Filling::from_cell_map(new_shape, &cells)?)?;
    Ok(Slide { direction: SlideDirection::Forward, tableau, vacated: Some(h), path })
}

fn reverse(t: &Ssyt, hole: Cell) -> Result<Slide> {
    let mut cells: BTreeMap<Cell, usize> = t.filling().cell_map();
    let mut h = hole;
    let mut path = vec![h];
    loop {
        let left = if h.col > 0 { cells.get(&Cell::new(h.row, h.col - 1)).copied() } else { None };
        let below = if h.row > 0 { cells.get(&Cell::new(h.row - 1, h.col)).copied() } else { None };
        let next = match (left, below) {
            (None, None) => break,
            (Some(_), None) => Cell::new(h.row, h.col - 1),
            (None, Some(_)) => Cell::new(h.row - 1, h.col),
            (Some(l), Some(b)) if b >= l => Cell::new(h.row - 1, h.col),
            (Some(_), Some(_)) => Cell::new(h.row, h.col - 1),
        };
        let v = cells.remove(&next).expect("neighbour present");
        cells.insert(h, v);
        h = next;
        path.push(h);
    }
    if h == hole {
        return Ok(unchanged(t, SlideDirection::Reverse, hole));
    }
    let shape = t.shape();
    let outer = shape.outer().with(hole).expect("hole is an outer corner");
    let inner = shape.inner().with(h).expect("slide ends at an addable inner cell");
    let new_shape = SkewShape::new(outer, inner)?;
    let tableau = Ssyt::new(Filling::from_cell_map(new_shape, &cells)?)?;
    Ok(Slide { direction: SlideDirection::Reverse, tableau, vacated: Some(h), path })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;
    use crate::tableaux::enumerate_ssyt_bounded;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn forward_slide_moves_smaller_neighbour() {
        // rows bottom to top: . 1 2 / 3
        let t = Ssyt::from_rows(shape("3,1/1"), vec![vec![1, 2], vec![3]]).unwrap();
        let s = jdt_slide(&t, Cell::new(0, 0)).unwrap();
        assert_eq!(s.tableau.filling().rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(s.tableau.shape(), &shape("2,1/0"));
        assert_eq!(s.vacated, Some(Cell::new(0, 2)));
    }

    #[test]
    fn tie_moves_column_neighbour() {
        let t = Ssyt::from_rows(shape("2,2/1"), vec![vec![2], vec![2, 3]]).unwrap();
        let s = jdt_slide(&t, Cell::new(0, 0)).unwrap();
        assert_eq!(s.path[1], Cell::new(1, 0));
        assert_eq!(s.tableau.filling().rows(), &[vec![2, 2], vec![3]]);
    }

    #[test]
    fn no_neighbour_leaves_tableau_unchanged() {
        let t = Ssyt::from_rows(shape("2,1/1"), vec![vec![1], vec![2]]).unwrap();
        let t2 = Ssyt::from_rows(shape("2,1/1,1"), vec![vec![1]]).unwrap();
        let s = jdt_slide(&t2, Cell::new(1, 0)).unwrap();
        assert_eq!(s.vacated, None);
        assert_eq!(s.tableau, t2);
        assert!(jdt_slide(&t, Cell::new(0, 0)).unwrap().vacated.is_some());
    }

    #[test]
    fn illegal_holes_are_rejected() {
        let t = Ssyt::from_rows(shape("3,2/2"), vec![vec![1], vec![1, 2]]).unwrap();
        assert!(matches!(jdt_slide(&t, Cell::new(0, 0)), Err(Error::IllegalSlide(_))));
        assert!(matches!(jdt_slide(&t, Cell::new(0, 2)), Err(Error::IllegalSlide(_))));
    }

    #[test]
    fn forward_then_reverse_is_identity() {
        for outer in partitions_up_to(5) {
            for inner in outer.subpartitions() {
                let sh = SkewShape::new(outer.clone(), inner.clone()).unwrap();
                for t in enumerate_ssyt_bounded(&sh, 3) {
                    for hole in inner.corners() {
                        let f = jdt_slide(&t, hole).unwrap();
                        let Some(v) = f.vacated else { continue };
                        let back = jdt_slide(&f.tableau, v).unwrap();
                        assert_eq!(back.tableau, t);
                        assert_eq!(back.vacated, Some(hole));
                    }
                }
            }
        }
    }
}
