//! Jacobi–Trudi determinants `det(h_{α_i+j−i})` for arbitrary integer sequences.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use super::{rational, Basis, SymFunc};
use crate::partition::Partition;

/// `±s_shape`, or zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SignedSchur {
    sign: i8,
    shape: Option<Partition>,
}

impl SignedSchur {
    pub fn zero() -> Self {
        SignedSchur { sign: 0, shape: None }
    }

    pub fn new(sign: i8, shape: Partition) -> Self {
        match sign {
            0 => SignedSchur::zero(),
            s => SignedSchur { sign: s.signum(), shape: Some(shape) },
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn shape(&self) -> Option<&Partition> {
        self.shape.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn to_symfunc(&self) -> SymFunc {
        match &self.shape {
            Some(p) => SymFunc::term(Basis::Schur, p.clone(), rational(self.sign.into())),
            None => SymFunc::zero(),
        }
    }
}

impl fmt::Display for SignedSchur {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.shape, self.sign) {
            (Some(p), 1) => write!(f, "s[{p}]"),
            (Some(p), _) => write!(f, "-s[{p}]"),
            (None, _) => f.write_str("0"),
        }
    }
}

/// Straightens `s_α` into `0` or `±s_λ`.
pub fn jacobi_trudi(alpha: &[i64]) -> SignedSchur {
    let mut beta: Vec<i64> = alpha.iter().enumerate().map(|(i, &a)| a - i as i64).collect();
    let mut inversions = 0usize;
    // insertion sort into decreasing order, counting transpositions
    for i in 1..beta.len() {
        let mut j = i;
        while j > 0 && beta[j - 1] < beta[j] {
            beta.swap(j - 1, j);
            inversions += 1;
            j -= 1;
        }
    }
    if beta.windows(2).any(|w| w[0] == w[1]) {
        return SignedSchur::zero();
    }
    let parts: Vec<i64> = beta.iter().enumerate().map(|(i, &b)| b + i as i64).collect();
    if parts.last().is_some_and(|&x| x < 0) {
        return SignedSchur::zero();
    }
    let shape = Partition::new(parts.into_iter().map(|x| x as usize).collect()).expect("straightened sequence is a partition");
    SignedSchur::new(if inversions % 2 == 0 { 1 } else { -1 }, shape)
}

/// Literal Laplace expansion of `det(h_{α_i+j−i})` as an h-basis combination,
/// with `h_0 = 1` and `h_k = 0` for `k < 0`.
pub fn jacobi_trudi_h_expansion(alpha: &[i64]) -> SymFunc {
    let mut acc: BTreeMap<Partition, BigInt> = BTreeMap::new();
    let mut used = vec![false; alpha.len()];
    let mut factors = Vec::new();
    expand(alpha, 0, &mut used, &mut factors, 1, &mut acc);
    SymFunc::from_integer_terms(Basis::Complete, acc)
}

fn expand(
    alpha: &[i64],
    row: usize,
    used: &mut [bool],
    factors: &mut Vec<usize>,
    sign: i64,
    acc: &mut BTreeMap<Partition, BigInt>,
) {
    if row == alpha.len() {
        let index = Partition::from_multiset(factors.clone());
        *acc.entry(index).or_default() += sign;
        return;
    }
    let mut free_before = 0;
    for col in 0..alpha.len() {
        if used[col] {
            continue;
        }
        let k = alpha[row] + col as i64 - row as i64;
        if k >= 0 {
            used[col] = true;
            if k > 0 {
                factors.push(k as usize);
            }
            let s = if free_before % 2 == 0 { sign } else { -sign };
            expand(alpha, row + 1, used, factors, s, acc);
            if k > 0 {
                factors.pop();
            }
            used[col] = false;
        }
        free_before += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn straightening_examples() {
        assert_eq!(jacobi_trudi(&[2, 1]), SignedSchur::new(1, p(&[2, 1])));
        assert_eq!(jacobi_trudi(&[0, 2]), SignedSchur::new(-1, p(&[1, 1])));
        assert!(jacobi_trudi(&[0, 1]).is_zero());
        assert_eq!(jacobi_trudi(&[-1, 2]), SignedSchur::new(-1, p(&[1])));
        assert_eq!(jacobi_trudi(&[-1, 1]), SignedSchur::new(-1, Partition::empty()));
        assert!(jacobi_trudi(&[-1]).is_zero());
        assert_eq!(jacobi_trudi(&[]), SignedSchur::new(1, Partition::empty()));
    }

    #[test]
    fn determinant_of_small_matrix() {
        // det[[h0, h1], [h1, h2]] = h2 − h1²
        let d = jacobi_trudi_h_expansion(&[0, 2]);
        let expect = SymFunc::h(2) - SymFunc::complete(p(&[1, 1]));
        assert_eq!(d, expect);
        assert_eq!(d.to_schur(), jacobi_trudi(&[0, 2]).to_symfunc());
    }
}
