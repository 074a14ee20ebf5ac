//! Changes of basis and the Kronecker product.

use num_bigint::BigInt;

use super::jacobi_trudi::jacobi_trudi_h_expansion;
use super::{product, Basis, Rational, SymFunc};
use crate::cache::Memo;
use crate::coeffs::character_table;
use crate::partition::Partition;

/// Schur expansions of `h_μ` and `e_μ`.
static MULTIPLICATIVE: Memo<(Basis, Partition), SymFunc> = Memo::new();

pub(super) fn to_basis(f: &SymFunc, target: Basis) -> SymFunc {
    if f.basis == target || f.is_zero() {
        let mut g = f.clone();
        g.basis = target;
        return g;
    }
    let s = to_schur(f);
    match target {
        Basis::Schur => s,
        Basis::Power => schur_to_power(&s),
        Basis::Complete => schur_to_jt(&s, Basis::Complete),
        Basis::Elementary => schur_to_jt(&s, Basis::Elementary),
    }
}

fn to_schur(f: &SymFunc) -> SymFunc {
    match f.basis {
        Basis::Schur => f.clone(),
        Basis::Power => power_to_schur(f),
        b => {
            let mut out = SymFunc::zero();
            for (mu, c) in f.terms() {
                let e = multiplicative_in_schur(b, mu);
                out = out.add(&e.scale(c));
            }
            out
        }
    }
}

fn multiplicative_in_schur(basis: Basis, mu: &Partition) -> SymFunc {
    let v = MULTIPLICATIVE.get_or_compute(&(basis, mu.clone()), || {
        let factor = |k: usize| match basis {
            Basis::Complete => SymFunc::schur(Partition::row(k)),
            _ => SymFunc::schur(Partition::column(k)),
        };
        mu.parts().iter().fold(SymFunc::one(), |acc, &k| product::schur_mul(&acc, &factor(k)))
    });
    (*v).clone()
}

/// `p_ρ = Σ_λ χ^λ(ρ) s_λ`
fn power_to_schur(f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (n, comp) in f.components() {
        let table = character_table(n);
        let coords: Vec<(usize, &Rational)> = comp.terms().map(|(rho, c)| (table.index_of(rho).unwrap(), c)).collect();
        for (l, lambda) in table.partitions.iter().enumerate() {
            let mut x = Rational::from_integer(BigInt::from(0));
            for &(r, c) in &coords {
                x += c * Rational::from_integer(table.values[l][r].clone());
            }
            out.add_term(lambda.clone(), x);
        }
    }
    out
}

/// `s_λ = Σ_ρ χ^λ(ρ) p_ρ / z_ρ`
fn schur_to_power(f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero_in(Basis::Power);
    for (n, comp) in f.components() {
        let table = character_table(n);
        let coords: Vec<(usize, &Rational)> = comp.terms().map(|(l, c)| (table.index_of(l).unwrap(), c)).collect();
        for (r, rho) in table.partitions.iter().enumerate() {
            let mut x = Rational::from_integer(BigInt::from(0));
            for &(l, c) in &coords {
                x += c * Rational::from_integer(table.values[l][r].clone());
            }
            out.add_term(rho.clone(), x / Rational::from_integer(table.z[r].clone()));
        }
    }
    out
}

/// `s_λ = det(h_{λ_i+j−i}) = det(e_{λ'_i+j−i})`
fn schur_to_jt(f: &SymFunc, target: Basis) -> SymFunc {
    let mut out = SymFunc::zero_in(target);
    for (lambda, c) in f.terms() {
        let index = match target {
            Basis::Elementary => lambda.conjugate(),
            _ => lambda.clone(),
        };
        let seq: Vec<i64> = index.parts().iter().map(|&x| x as i64).collect();
        for (mu, d) in jacobi_trudi_h_expansion(&seq).terms() {
            out.add_term(mu.clone(), c * d);
        }
    }
    out
}

/// Diagonal on power sums: `p_λ ∗ p_μ = δ_{λμ} z_λ p_λ`.
pub(super) fn kronecker(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let both_power = f.basis == Basis::Power && g.basis == Basis::Power;
    let (fp, gp) = (f.to_basis(Basis::Power), g.to_basis(Basis::Power));
    let mut out = SymFunc::zero_in(Basis::Power);
    for (rho, c) in fp.terms() {
        let d = gp.coeff(rho);
        if d != Rational::from_integer(BigInt::from(0)) {
            out.add_term(rho.clone(), c * d * Rational::from_integer(BigInt::from(rho.z_factor())));
        }
    }
    if both_power {
        out
    } else {
        power_to_schur(&out)
    }
}
