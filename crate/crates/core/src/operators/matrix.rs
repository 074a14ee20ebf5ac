//! Truncated matrices of operators in the Schur basis and exact rank.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::OperatorExpr;
use crate::partition::{partitions_up_to, Partition};
use crate::symfunc::{Rational, SymFunc};

/// Columns are `expr(s_λ)` for `|λ| ≤ dom_max`, in Schur coordinates over
/// all `s_μ` with `|μ| ≤ cod_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedMatrix {
    pub dom_max: usize,
    pub cod_max: usize,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    /// `columns[j][i]` is the entry in row `i`, column `j`
    columns: Vec<Vec<Rational>>,
}

impl TruncatedMatrix {
    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.columns[col][row]
    }

    pub fn column(&self, col: usize) -> &[Rational] {
        &self.columns[col]
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().flatten().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.cols.iter().enumerate().all(|(j, c)| {
            self.rows.iter().enumerate().all(|(i, r)| {
                let e = self.entry(i, j);
                if r == c {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    /// Entry at `(s_row, s_col)`, zero outside the truncation.
    pub fn get(&self, row: &Partition, col: &Partition) -> Rational {
        match (self.rows.iter().position(|r| r == row), self.cols.iter().position(|c| c == col)) {
            (Some(i), Some(j)) => self.entry(i, j).clone(),
            _ => Rational::zero(),
        }
    }

    /// Row-major entries rendered as strings, with partition labels.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Dump {
            dom_max: usize,
            cod_max: usize,
            rows: Vec<String>,
            cols: Vec<String>,
            entries: Vec<Vec<String>>,
        }
        let entries = (0..self.rows.len())
            .map(|i| (0..self.cols.len()).map(|j| self.entry(i, j).to_string()).collect())
            .collect();
        serde_json::to_value(Dump {
            dom_max: self.dom_max,
            cod_max: self.cod_max,
            rows: self.rows.iter().map(Partition::to_string).collect(),
            cols: self.cols.iter().map(Partition::to_string).collect(),
            entries,
        })
        .expect("plain data serializes")
    }
}

impl std::fmt::Display for TruncatedMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows.len())
            .map(|i| (0..self.cols.len()).map(|j| self.entry(i, j).to_string()).collect())
            .collect();
        let label = |p: &Partition| format!("[{p}]");
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .chain(self.cols.iter().map(|c| label(c).len()))
            .max()
            .unwrap_or(1);
        let lw = self.rows.iter().map(|r| label(r).len()).max().unwrap_or(0);
        write!(f, "{:lw$}", "")?;
        for c in &self.cols {
            write!(f, " {:>width$}", label(c))?;
        }
        writeln!(f)?;
        for (r, row) in self.rows.iter().zip(&cells) {
            write!(f, "{:lw$}", label(r))?;
            for x in row {
                write!(f, " {x:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn codomain_bound(expr: &OperatorExpr, dom_max: usize) -> usize {
    (dom_max as i64 + expr.max_degree_shift()).max(0) as usize
}

fn columns(expr: &OperatorExpr, cols: &[Partition], rows: &[Partition]) -> Vec<Vec<Rational>> {
    cols.par_iter()
        .map(|lambda| expr.apply(&SymFunc::schur(lambda.clone())).coordinates(rows))
        .collect()
}

/// The matrix of `expr` on Schur functions of degree at most `dom_max`.
pub fn matrix_of(expr: &OperatorExpr, dom_max: usize) -> TruncatedMatrix {
    let cod_max = codomain_bound(expr, dom_max);
    let cols = partitions_up_to(dom_max);
    let rows = partitions_up_to(cod_max);
    let columns = columns(expr, &cols, &rows);
    TruncatedMatrix { dom_max, cod_max, rows, cols, columns }
}

/// Rank of the expressions as vectors: each one flattened from its truncated
/// matrix over a common codomain.
pub fn rank(exprs: &[OperatorExpr], dom_max: usize) -> usize {
    let cod_max = exprs.iter().map(|e| codomain_bound(e, dom_max)).max().unwrap_or(dom_max);
    let cols = partitions_up_to(dom_max);
    let rows = partitions_up_to(cod_max);
    let vectors: Vec<Vec<BigInt>> = exprs
        .iter()
        .map(|e| integral(columns(e, &cols, &rows).into_iter().flatten().collect()))
        .collect();
    bareiss_rank(vectors)
}

/// True iff the expressions act independently on degrees `≤ dom_max`. This
/// certifies linear independence; `false` only means dependent at this truncation.
pub fn independent(exprs: &[OperatorExpr], dom_max: usize) -> bool {
    rank(exprs, dom_max) == exprs.len()
}

/// Clears denominators.
fn integral(v: Vec<Rational>) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.into_iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect()
}

/// Fraction-free Gaussian elimination; every intermediate entry is a minor.
pub(crate) fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..nrows {
            for j in col + 1..ncols {
                let v = (&a[i][j] * &a[r][col] - &a[i][col] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[r][col].clone();
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}
