//! The alphabet shift `f[X−1]` and truncations of `Γ₁ f = σ[X] f[X−1]`.

use super::{rational, Basis, SymFunc};
use crate::partition::Partition;

pub(super) fn shift_minus_one(f: &SymFunc) -> SymFunc {
    let fp = f.to_basis(Basis::Power);
    let mut out = SymFunc::zero_in(Basis::Power);
    for (rho, c) in fp.terms() {
        // Π (p_{ρ_i} − 1), one term per subset of the parts
        let parts = rho.parts();
        for mask in 0u32..(1 << parts.len()) {
            let kept: Vec<usize> = (0..parts.len()).filter(|i| mask & (1 << i) != 0).map(|i| parts[i]).collect();
            let dropped = parts.len() - kept.len();
            let sign = if dropped % 2 == 0 { 1 } else { -1 };
            out.add_term(Partition::from_multiset(kept), c * rational(sign));
        }
    }
    if f.basis() == Basis::Power {
        out
    } else {
        out.to_schur()
    }
}

pub(super) fn gamma1_component(f: &SymFunc, n: usize) -> SymFunc {
    let shifted = shift_minus_one(&f.to_schur());
    let mut out = SymFunc::zero();
    for (m, comp) in shifted.components() {
        if m <= n {
            out = out.add(&SymFunc::schur(Partition::row(n - m)).mul(&comp));
        }
    }
    out
}
