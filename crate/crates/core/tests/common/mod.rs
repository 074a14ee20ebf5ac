//! Oracles written independently of the library's own algorithms.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use symop_core::{mn_character, partitions_of, Basis, Partition, Rational, SymFunc};

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn s(part: &Partition) -> SymFunc {
    SymFunc::schur(part.clone())
}

/// `s_{outer/inner}(x_1, …, x_n)` by brute-force enumeration of fillings.
pub fn eval_skew_schur(outer: &Partition, inner: &Partition, xs: &[i64]) -> BigInt {
    if !outer.contains(inner) {
        return BigInt::zero();
    }
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|r| (inner.part(r)..outer.part(r)).map(move |c| (r, c)))
        .collect();
    let mut fill: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut total = BigInt::zero();
    fn go(i: usize, cells: &[(usize, usize)], fill: &mut BTreeMap<(usize, usize), usize>, xs: &[i64], total: &mut BigInt) {
        if i == cells.len() {
            let mut m = BigInt::one();
            for v in fill.values() {
                m *= xs[*v - 1];
            }
            *total += m;
            return;
        }
        let (r, c) = cells[i];
        // French: rows weak left to right, columns strict bottom to top
        let lo_row = if c > 0 { fill.get(&(r, c - 1)).copied().unwrap_or(1) } else { 1 };
        let lo_col = if r > 0 { fill.get(&(r - 1, c)).map_or(1, |v| v + 1) } else { 1 };
        for v in lo_row.max(lo_col)..=xs.len() {
            fill.insert((r, c), v);
            go(i + 1, cells, fill, xs, total);
            fill.remove(&(r, c));
        }
    }
    go(0, &cells, &mut fill, xs, &mut total);
    total
}

/// Evaluation of any symmetric function at a point, through its Schur expansion.
pub fn eval(f: &SymFunc, xs: &[i64]) -> Rational {
    f.to_schur()
        .terms()
        .map(|(l, c)| c * Rational::from_integer(eval_skew_schur(l, &Partition::empty(), xs)))
        .fold(Rational::zero(), |a, b| a + b)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn parity(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `det(h_{α_i − i + j})` expanded over permutations, in the h basis.
pub fn jt_determinant(alpha: &[i64]) -> SymFunc {
    let n = alpha.len();
    let mut out = SymFunc::zero_in(Basis::Complete);
    for perm in permutations(n) {
        let mut parts = Vec::new();
        let mut zero = false;
        for (i, &j) in perm.iter().enumerate() {
            let k = alpha[i] - i as i64 + j as i64;
            if k < 0 {
                zero = true;
                break;
            }
            parts.push(k as usize);
        }
        if zero {
            continue;
        }
        let term = SymFunc::complete(Partition::from_multiset(parts)).scale_int(parity(&perm));
        out = out + term;
    }
    out
}

/// `g_{λμν} = Σ_ρ χ^λ(ρ) χ^μ(ρ) χ^ν(ρ) / z_ρ`
pub fn kron_by_characters(lambda: &Partition, mu: &Partition, nu: &Partition) -> Rational {
    partitions_of(lambda.size())
        .iter()
        .map(|rho| {
            let x = mn_character(lambda, rho).unwrap() * mn_character(mu, rho).unwrap() * mn_character(nu, rho).unwrap();
            Rational::new(x, BigInt::from(rho.z_factor()))
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// `s_λ ∗ s_μ` assembled from [`kron_by_characters`].
pub fn kronecker_by_characters(lambda: &Partition, mu: &Partition) -> SymFunc {
    if lambda.size() != mu.size() {
        return SymFunc::zero();
    }
    partitions_of(lambda.size())
        .into_iter()
        .map(|nu| {
            let c = kron_by_characters(lambda, mu, &nu);
            SymFunc::schur(nu).scale(&c)
        })
        .sum()
}

/// All skew shapes `outer/inner` with `|outer| ≤ max_outer`, `|inner| ≤ max_inner`.
pub fn skew_shapes(max_outer: usize, max_inner: usize) -> Vec<symop_core::SkewShape> {
    let mut out = Vec::new();
    for outer in symop_core::partitions_up_to(max_outer) {
        for inner in outer.subpartitions() {
            if inner.size() <= max_inner {
                out.push(symop_core::SkewShape::new(outer.clone(), inner).unwrap());
            }
        }
    }
    out
}

pub const POINTS: [&[i64]; 3] = [&[1, 2, 3, 5, 7, 11], &[2, -1, 4, 3, 1, 6], &[1, 1, 2, 3, 5, 8]];
