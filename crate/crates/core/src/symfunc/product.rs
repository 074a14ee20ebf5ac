//! Products and skews of Schur functions via Littlewood–Richardson coefficients.

use std::sync::Arc;

use num_bigint::BigInt;

use super::{Basis, Rational, SymFunc};
use crate::cache::Memo;
use crate::coeffs::lr_coeff;
use crate::partition::{partitions_of, Partition};

type Expansion = Vec<(Partition, u64)>;

static PRODUCTS: Memo<(Partition, Partition), Expansion> = Memo::new();
static SKEWS: Memo<(Partition, Partition), Expansion> = Memo::new();

/// `s_λ s_μ = Σ_ν c^ν_{λμ} s_ν`
pub(crate) fn schur_product(lambda: &Partition, mu: &Partition) -> Arc<Expansion> {
    let (a, b) = if lambda <= mu { (lambda, mu) } else { (mu, lambda) };
    PRODUCTS.get_or_compute(&(a.clone(), b.clone()), || {
        let hull = a.union_max(b);
        partitions_of(a.size() + b.size())
            .into_iter()
            .filter(|nu| nu.contains(&hull) && nu.len() <= a.len() + b.len())
            .filter_map(|nu| {
                let c = lr_coeff(&nu, a, b);
                (c > 0).then_some((nu, c))
            })
            .collect()
    })
}

/// `s_{λ/μ} = Σ_ν c^λ_{μν} s_ν`, empty unless `μ ⊆ λ`.
pub(crate) fn skew_expansion(lambda: &Partition, mu: &Partition) -> Arc<Expansion> {
    SKEWS.get_or_compute(&(lambda.clone(), mu.clone()), || {
        if !lambda.contains(mu) {
            return Vec::new();
        }
        partitions_of(lambda.size() - mu.size())
            .into_iter()
            .filter(|nu| lambda.contains(nu))
            .filter_map(|nu| {
                let c = lr_coeff(lambda, mu, &nu);
                (c > 0).then_some((nu, c))
            })
            .collect()
    })
}

fn from_expansion(e: &Expansion, scale: &Rational, out: &mut SymFunc) {
    for (nu, c) in e {
        out.add_term(nu.clone(), scale * Rational::from_integer(BigInt::from(*c)));
    }
}

pub(super) fn schur_mul(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero_in(Basis::Schur);
    for (a, x) in f.terms() {
        for (b, y) in g.terms() {
            from_expansion(&schur_product(a, b), &(x * y), &mut out);
        }
    }
    out
}

pub(super) fn skew(f: &SymFunc, by: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero_in(Basis::Schur);
    for (a, x) in f.terms() {
        for (b, y) in by.terms() {
            from_expansion(&skew_expansion(a, b), &(x * y), &mut out);
        }
    }
    out
}

pub(super) fn skew_schur(outer: &Partition, inner: &Partition) -> SymFunc {
    let mut out = SymFunc::zero_in(Basis::Schur);
    from_expansion(&skew_expansion(outer, inner), &super::rational(1), &mut out);
    out
}
