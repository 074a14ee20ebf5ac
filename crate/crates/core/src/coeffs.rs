//! Structure constants: symmetric-group characters, Littlewood–Richardson
//! coefficients and Kronecker coefficients.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cache::Memo;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition, SkewShape};
use crate::tableaux::count_lr_fillings;

static CHARACTERS: Memo<(Partition, Partition), BigInt> = Memo::new();
static TABLES: Memo<usize, CharacterTable> = Memo::new();
static LR: Memo<(Partition, Partition, Partition), u64> = Memo::new();

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch(format!("χ^{lambda:?}({rho:?})")));
    }
    Ok(character(lambda, rho))
}

fn character(lambda: &Partition, rho: &Partition) -> BigInt {
    let key = (lambda.clone(), rho.clone());
    let v = CHARACTERS.get_or_compute(&key, || border_strip_recursion(lambda, rho));
    (*v).clone()
}

/// Removes border strips of length `ρ_1` via bead moves on the beta-set of λ.
fn border_strip_recursion(lambda: &Partition, rho: &Partition) -> BigInt {
    let Some((&k, rest)) = rho.parts().split_first() else {
        return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    let rest = Partition::from_sorted(rest.to_vec());
    let len = lambda.len();
    let betas: Vec<usize> = (0..len).map(|i| lambda.part(i) + (len - 1 - i)).collect();
    let mut total = BigInt::zero();
    for (j, &b) in betas.iter().enumerate() {
        if b < k || betas.contains(&(b - k)) {
            continue;
        }
        let between = betas.iter().filter(|&&x| x > b - k && x < b).count();
        let mut moved = betas.clone();
        moved[j] = b - k;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = moved.iter().enumerate().map(|(i, &x)| x - (len - 1 - i)).collect();
        let sub = character(&Partition::from_sorted(parts), &rest);
        if between % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    total
}

/// The character table of `S_n`, rows and columns both indexed by
/// [`partitions_of`]`(n)`.
#[derive(Debug)]
pub struct CharacterTable {
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `values[λ][ρ] = χ^λ(ρ)`
    pub values: Vec<Vec<BigInt>>,
    /// `z_ρ` for each column
    pub z: Vec<BigInt>,
}

impl CharacterTable {
    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }
}

pub fn character_table(n: usize) -> Arc<CharacterTable> {
    TABLES.get_or_compute(&n, || {
        let partitions = partitions_of(n);
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let values = partitions
            .iter()
            .map(|l| partitions.iter().map(|r| character(l, r)).collect())
            .collect();
        let z = partitions.iter().map(|r| BigInt::from(r.z_factor())).collect();
        CharacterTable { partitions, index, values, z }
    })
}

/// `c^ν_{λμ}`: the number of LR fillings of `ν/λ` with content `μ`.
pub fn lr_coeff(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    let key = (nu.clone(), lambda.clone(), mu.clone());
    *LR.get_or_compute(&key, || {
        let shape = SkewShape::new(nu.clone(), lambda.clone()).expect("containment checked");
        count_lr_fillings(&shape, mu.parts())
    })
}

/// `g_{λμν} = Σ_ρ χ^λ(ρ) χ^μ(ρ) χ^ν(ρ) / z_ρ`.
pub fn kron_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(Error::SizeMismatch(format!("g({lambda:?}, {mu:?}, {nu:?})")));
    }
    let table = character_table(n);
    let (l, m, k) = (
        table.index_of(lambda).unwrap(),
        table.index_of(mu).unwrap(),
        table.index_of(nu).unwrap(),
    );
    let mut sum = BigRational::zero();
    for r in 0..table.partitions.len() {
        let num = &table.values[l][r] * &table.values[m][r] * &table.values[k][r];
        sum += BigRational::new(num, table.z[r].clone());
    }
    if !sum.is_integer() || sum.is_negative() {
        return Err(Error::NonIntegral(format!("({lambda:?}, {mu:?}, {nu:?}) = {sum}")));
    }
    sum.to_integer()
        .to_u64()
        .ok_or_else(|| Error::NonIntegral(format!("({lambda:?}, {mu:?}, {nu:?}) overflows")))
}
