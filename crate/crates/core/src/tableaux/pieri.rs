//! Horizontal and vertical strips, and the skew Pieri rule.

use std::fmt;

use serde::Serialize;

use crate::partition::{Partition, SkewShape};
use crate::symfunc::{rational, skew_schur, SymFunc};

/// `±s_{outer/inner}` as an unexpanded term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignedSkew {
    pub sign: i8,
    pub shape: SkewShape,
}

impl SignedSkew {
    pub fn to_symfunc(&self) -> SymFunc {
        skew_schur(&self.shape).scale_int(self.sign.into())
    }
}

impl fmt::Display for SignedSkew {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "+" };
        write!(f, "{sign}s[{}]", self.shape)
    }
}

/// Sums a signed term list into a Schur expansion.
pub fn collapse(terms: &[SignedSkew]) -> SymFunc {
    let mut counts = std::collections::BTreeMap::<&SkewShape, i64>::new();
    for t in terms {
        *counts.entry(&t.shape).or_default() += i64::from(t.sign);
    }
    counts.into_iter().filter(|(_, c)| *c != 0).map(|(s, c)| skew_schur(s).scale(&rational(c))).sum()
}

/// All `γ⁺ ⊇ γ` such that `γ⁺/γ` is a horizontal strip of `k` boxes.
pub fn horizontal_strips(gamma: &Partition, k: usize) -> Vec<Partition> {
    fn rec(gamma: &Partition, row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row > gamma.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("interlacing rows"));
            }
            return;
        }
        let base = gamma.part(row);
        // at most one box per column: γ⁺_row ≤ γ_{row−1}
        let cap = if row == 0 { base + left } else { gamma.part(row - 1).min(base + left) };
        for v in base..=cap {
            cur.push(v);
            rec(gamma, row + 1, left - (v - base), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(gamma, 0, k, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All `β⁻ ⊆ β` such that `β/β⁻` is a vertical strip of `i` boxes.
pub fn vertical_strip_removals(beta: &Partition, i: usize) -> Vec<Partition> {
    horizontal_strip_removals(&beta.conjugate(), i).iter().map(Partition::conjugate).collect::<std::collections::BTreeSet<_>>().into_iter().collect()
}

fn horizontal_strip_removals(lambda: &Partition, k: usize) -> Vec<Partition> {
    // μ ⊆ λ with λ/μ a horizontal strip: λ_{r+1} ≤ μ_r ≤ λ_r
    fn rec(lambda: &Partition, row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == lambda.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("interlacing rows"));
            }
            return;
        }
        let top = lambda.part(row);
        let floor = lambda.part(row + 1).max(top.saturating_sub(left));
        for v in floor..=top {
            cur.push(v);
            rec(lambda, row + 1, left - (top - v), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, k, &mut Vec::new(), &mut out);
    out
}

/// Signed terms of `s_{(k)} · s_{γ/β}`: for each `i`, `(−1)^i s_{γ⁺/β⁻}` over
/// `(k−i)`-horizontal strips `γ⁺/γ` and `i`-vertical strips `β/β⁻`.
pub fn skew_pieri_terms(k: usize, shape: &SkewShape) -> Vec<SignedSkew> {
    let mut out = Vec::new();
    for i in 0..=k {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let minus = vertical_strip_removals(shape.inner(), i);
        if minus.is_empty() {
            continue;
        }
        for plus in horizontal_strips(shape.outer(), k - i) {
            for bm in &minus {
                let shape = SkewShape::new(plus.clone(), bm.clone()).expect("β⁻ ⊆ β ⊆ γ ⊆ γ⁺");
                out.push(SignedSkew { sign, shape });
            }
        }
    }
    out
}

/// `s_{(k)} · s_{shape}` via the skew Pieri rule, Schur-expanded.
pub fn skew_pieri(k: usize, shape: &SkewShape) -> SymFunc {
    collapse(&skew_pieri_terms(k, shape))
}
