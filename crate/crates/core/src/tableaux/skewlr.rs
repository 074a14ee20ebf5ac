//! The skew Littlewood–Richardson rule: `s_{α/δ} s_{γ/β}` as a signed sum of
//! skew Schur functions indexed by ASSYT/SSYT pairs.

use std::collections::BTreeMap;

use serde::Serialize;

use super::pieri::SignedSkew;
use super::search::{Plan, Search};
use super::{Assyt, Filling, Ssyt, Word};
use crate::partition::{partitions_of, Partition, SkewShape};
use crate::symfunc::{rational, skew_schur, SymFunc};

/// One pair `(T₁, T₂)` and the term `(−1)^{|β/β⁻|} s_{γ⁺/β⁻}` it contributes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairTerm {
    pub assyt: Assyt,
    pub ssyt: Ssyt,
    pub term: SignedSkew,
}

impl PairTerm {
    /// ASSYT word followed by SSYT word.
    pub fn reverse_reading_word(&self) -> Word {
        let mut w = self.assyt.reverse_reading_word();
        w.extend(self.ssyt.reverse_reading_word());
        w
    }
}

/// `α − δ`, or `None` when some component is negative.
fn content_difference(a: &SkewShape) -> Option<Vec<usize>> {
    let (alpha, delta) = (a.outer(), a.inner());
    (0..alpha.len().max(delta.len()))
        .map(|i| alpha.part(i).checked_sub(delta.part(i)))
        .collect()
}

/// Candidate `(β⁻, γ⁺)` with `|β/β⁻| + |γ⁺/γ| = |α/δ|`.
fn shape_pairs(a: &SkewShape, b: &SkewShape) -> Vec<(Partition, Partition)> {
    let (gamma, beta) = (b.outer(), b.inner());
    let total = a.size();
    let minus_by_size: BTreeMap<usize, Vec<Partition>> = beta.subpartitions().into_iter().fold(BTreeMap::new(), |mut m, p| {
        m.entry(beta.size() - p.size()).or_insert_with(Vec::new).push(p);
        m
    });
    let mut out = Vec::new();
    for (&removed, minus) in &minus_by_size {
        if removed > total {
            continue;
        }
        let added = total - removed;
        for plus in partitions_of(gamma.size() + added).into_iter().filter(|p| p.contains(gamma) && p.len() <= gamma.len() + added) {
            for bm in minus {
                out.push((bm.clone(), plus.clone()));
            }
        }
    }
    out
}

fn pair_plan(assyt_shape: &SkewShape, ssyt_shape: &SkewShape) -> Plan {
    let mut plan = Plan::assyt(assyt_shape);
    plan.append_ssyt(ssyt_shape);
    plan
}

fn visit_pairs(a: &SkewShape, beta_shape: &SkewShape, gamma_shape: &SkewShape, mut visit: impl FnMut(&Plan, &[usize])) {
    let Some(content) = content_difference(a) else { return };
    let plan = pair_plan(beta_shape, gamma_shape);
    Search::with_content(&content).lattice(a.inner().parts()).run(&plan, |w| visit(&plan, w));
}

fn sign_of(beta_shape: &SkewShape) -> i8 {
    if beta_shape.size() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All pairs whose shapes are `β/β⁻` and `γ⁺/γ` for the given `β⁻`, `γ⁺`.
pub fn skew_lr_pairs_with_shapes(a: &SkewShape, b: &SkewShape, beta_minus: &Partition, gamma_plus: &Partition) -> Vec<PairTerm> {
    let (Ok(beta_shape), Ok(gamma_shape)) = (
        SkewShape::new(b.inner().clone(), beta_minus.clone()),
        SkewShape::new(gamma_plus.clone(), b.outer().clone()),
    ) else {
        return Vec::new();
    };
    let term = SignedSkew {
        sign: sign_of(&beta_shape),
        shape: SkewShape::new(gamma_plus.clone(), beta_minus.clone()).expect("β⁻ ⊆ β ⊆ γ ⊆ γ⁺"),
    };
    let split = beta_shape.size();
    let mut out = Vec::new();
    visit_pairs(a, &beta_shape, &gamma_shape, |plan, w| {
        let assyt = Assyt(Filling::from_plan(&beta_shape, &plan.cells[..split], &w[..split]));
        let ssyt = Ssyt(Filling::from_plan(&gamma_shape, &plan.cells[split..], &w[split..]));
        out.push(PairTerm { assyt, ssyt, term: term.clone() });
    });
    out
}

/// Every contributing pair for `s_a · s_b`.
pub fn skew_lr_pairs(a: &SkewShape, b: &SkewShape) -> Vec<PairTerm> {
    shape_pairs(a, b)
        .iter()
        .flat_map(|(bm, gp)| skew_lr_pairs_with_shapes(a, b, bm, gp))
        .collect()
}

/// Signed skew terms, one per contributing pair.
pub fn skew_lr_terms(a: &SkewShape, b: &SkewShape) -> Vec<SignedSkew> {
    skew_lr_pairs(a, b).into_iter().map(|p| p.term).collect()
}

/// `s_a · s_b` by the skew LR rule, Schur-expanded. Pairs are counted, not stored.
pub fn skew_lr_product(a: &SkewShape, b: &SkewShape) -> SymFunc {
    let mut out = SymFunc::zero();
    for (bm, gp) in shape_pairs(a, b) {
        let beta_shape = SkewShape::new(b.inner().clone(), bm.clone()).expect("subpartition");
        let gamma_shape = SkewShape::new(gp.clone(), b.outer().clone()).expect("superpartition");
        let mut n = 0i64;
        visit_pairs(a, &beta_shape, &gamma_shape, |_, _| n += 1);
        if n != 0 {
            let shape = SkewShape::new(gp, bm).expect("β⁻ ⊆ γ⁺");
            out = out + skew_schur(&shape).scale(&rational(n * i64::from(sign_of(&beta_shape))));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::collapse;

    fn sh(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn s(parts: &[usize]) -> SymFunc {
        SymFunc::schur(Partition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn classical_case() {
        assert_eq!(skew_lr_product(&sh("1/0"), &sh("1/0")), s(&[2]) + s(&[1, 1]));
    }

    #[test]
    fn one_box_times_skew() {
        let expect = s(&[3]) + s(&[2, 1]).scale_int(2) + s(&[1, 1, 1]);
        assert_eq!(skew_lr_product(&sh("1/0"), &sh("2,1/1")), expect);
        assert_eq!(collapse(&skew_lr_terms(&sh("1/0"), &sh("2,1/1"))), expect);
    }

    #[test]
    fn pair_words_concatenate() {
        for p in skew_lr_pairs(&sh("2,1/1"), &sh("2/1")) {
            assert!(super::super::is_delta_lattice(&p.reverse_reading_word(), &Partition::new(vec![1]).unwrap()));
        }
    }
}
