//! The ring of symmetric functions over ℚ.
//!
//! A [`SymFunc`] is a sparse combination of basis elements indexed by
//! partitions. Schur is the canonical basis: most operations convert to it and
//! return Schur expansions. The exceptions are operations that are natural in
//! the input basis (sums and scalings within one basis, products in the
//! multiplicative bases h/e/p, Kronecker products and the `X → X−1` shift in p).

mod convert;
mod jacobi_trudi;
mod product;
mod vertex;

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::{Partition, SkewShape};

pub use jacobi_trudi::{jacobi_trudi, jacobi_trudi_h_expansion, SignedSchur};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Schur,
    /// complete homogeneous `h`
    Complete,
    /// elementary `e`
    Elementary,
    /// power sums `p`
    Power,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::Schur, Basis::Complete, Basis::Elementary, Basis::Power];

    pub fn tag(self) -> &'static str {
        match self {
            Basis::Schur => "s",
            Basis::Complete => "h",
            Basis::Elementary => "e",
            Basis::Power => "p",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Basis> {
        Some(match tag {
            "s" => Basis::Schur,
            "h" => Basis::Complete,
            "e" => Basis::Elementary,
            "p" => Basis::Power,
            _ => return None,
        })
    }

    fn is_multiplicative(self) -> bool {
        self != Basis::Schur
    }
}

/// A finite linear combination of basis functions with rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::zero_in(Basis::Schur)
    }

    pub fn zero_in(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        SymFunc::schur(Partition::empty())
    }

    pub fn constant(c: Rational) -> Self {
        SymFunc::term(Basis::Schur, Partition::empty(), c)
    }

    pub fn term(basis: Basis, index: Partition, coeff: Rational) -> Self {
        let mut f = SymFunc::zero_in(basis);
        f.add_term(index, coeff);
        f
    }

    pub fn basis_element(basis: Basis, index: Partition) -> Self {
        SymFunc::term(basis, index, Rational::one())
    }

    /// `s_λ`
    pub fn schur(index: Partition) -> Self {
        SymFunc::basis_element(Basis::Schur, index)
    }

    /// `h_λ`
    pub fn complete(index: Partition) -> Self {
        SymFunc::basis_element(Basis::Complete, index)
    }

    /// `e_λ`
    pub fn elementary(index: Partition) -> Self {
        SymFunc::basis_element(Basis::Elementary, index)
    }

    /// `p_λ`
    pub fn power(index: Partition) -> Self {
        SymFunc::basis_element(Basis::Power, index)
    }

    /// `h_n`, which is `1` for `n = 0`.
    pub fn h(n: usize) -> Self {
        SymFunc::complete(Partition::row(n))
    }

    /// `e_n`
    pub fn e(n: usize) -> Self {
        SymFunc::elementary(Partition::row(n))
    }

    /// `p_n`
    pub fn p(n: usize) -> Self {
        SymFunc::power(Partition::row(n))
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut f = SymFunc::zero_in(basis);
        for (index, c) in terms {
            f.add_term(index, c);
        }
        f
    }

    pub(crate) fn from_integer_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, BigInt)>) -> Self {
        SymFunc::from_terms(basis, terms.into_iter().map(|(p, c)| (p, Rational::from_integer(c))))
    }

    /// Adds `coeff · b_index` in place, pruning a zero result.
    pub fn add_term(&mut self, index: Partition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Terms in canonical order: by degree, then reverse-lexicographic.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, index: &Partition) -> Rational {
        self.terms.get(index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest degree present; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    /// The degree-`n` component.
    pub fn component(&self, n: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().filter(|(p, _)| p.size() == n).map(|(p, c)| (p.clone(), c.clone())).collect(),
        }
    }

    /// Nonzero homogeneous components keyed by degree.
    pub fn components(&self) -> BTreeMap<usize, SymFunc> {
        let mut out: BTreeMap<usize, SymFunc> = BTreeMap::new();
        for (p, c) in &self.terms {
            out.entry(p.size())
                .or_insert_with(|| SymFunc::zero_in(self.basis))
                .terms
                .insert(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero_in(self.basis);
        }
        SymFunc { basis: self.basis, terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect() }
    }

    pub fn scale_int(&self, c: i64) -> SymFunc {
        self.scale(&rational(c))
    }

    /// Sum; if the bases differ the result is in the Schur basis.
    pub fn add(&self, other: &SymFunc) -> SymFunc {
        if self.basis == other.basis || other.is_zero() || self.is_zero() {
            let (mut acc, rhs) = if self.is_zero() { (other.clone(), self) } else { (self.clone(), other) };
            for (p, c) in &rhs.terms {
                acc.add_term(p.clone(), c.clone());
            }
            return acc;
        }
        self.to_schur().add(&other.to_schur())
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale_int(-1))
    }

    /// Ordinary product.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        if self.basis == other.basis && self.basis.is_multiplicative() {
            let mut out = SymFunc::zero_in(self.basis);
            for (a, x) in &self.terms {
                for (b, y) in &other.terms {
                    out.add_term(a.union(b), x * y);
                }
            }
            return out;
        }
        product::schur_mul(&self.to_schur(), &other.to_schur())
    }

    /// Kronecker (internal) product. Components of different degrees annihilate.
    pub fn kronecker(&self, other: &SymFunc) -> SymFunc {
        convert::kronecker(self, other)
    }

    /// Hall inner product, making the Schur functions orthonormal.
    pub fn hall_inner(&self, other: &SymFunc) -> Rational {
        if self.basis == Basis::Power && other.basis == Basis::Power {
            return self
                .terms
                .iter()
                .filter_map(|(p, c)| other.terms.get(p).map(|d| c * d * Rational::from_integer(BigInt::from(p.z_factor()))))
                .fold(Rational::zero(), |a, b| a + b);
        }
        let (f, g) = (self.to_schur(), other.to_schur());
        f.terms
            .iter()
            .filter_map(|(p, c)| g.terms.get(p).map(|d| c * d))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// The skewing operator `D_by`: adjoint of multiplication by `by`.
    pub fn skew(&self, by: &SymFunc) -> SymFunc {
        product::skew(&self.to_schur(), &by.to_schur())
    }

    pub fn to_basis(&self, target: Basis) -> SymFunc {
        convert::to_basis(self, target)
    }

    pub fn to_schur(&self) -> SymFunc {
        self.to_basis(Basis::Schur)
    }

    /// `f[X − 1]`, expanded in the p basis if `self` is in p, else in Schur.
    pub fn shift_minus_one(&self) -> SymFunc {
        vertex::shift_minus_one(self)
    }

    /// Degree-`n` component of `σ[X] · f[X − 1]`.
    pub fn gamma1_component(&self, n: usize) -> SymFunc {
        vertex::gamma1_component(self, n)
    }

    /// Coefficients as a dense vector over `indices`.
    pub fn coordinates(&self, indices: &[Partition]) -> Vec<Rational> {
        indices.iter().map(|p| self.coeff(p)).collect()
    }
}

impl Default for SymFunc {
    fn default() -> Self {
        SymFunc::zero()
    }
}

impl PartialEq for SymFunc {
    /// Structural equality; all zeros are equal regardless of basis.
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.basis == other.basis || self.terms.is_empty())
    }
}

impl Eq for SymFunc {}

impl Hash for SymFunc {
    fn hash<H: Hasher>(&self, state: &mut H) {
        if !self.terms.is_empty() {
            self.basis.hash(state);
        }
        self.terms.hash(state);
    }
}

/// Schur expansion of `s_{outer/inner}`.
pub fn skew_schur(shape: &SkewShape) -> SymFunc {
    product::skew_schur(shape.outer(), shape.inner())
}

/// `s_{outer/inner}`, which is zero unless `inner ⊆ outer`.
pub fn skew_schur_of(outer: &Partition, inner: &Partition) -> SymFunc {
    product::skew_schur(outer, inner)
}

pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> Rational {
    f.hall_inner(g)
}

pub fn kronecker(f: &SymFunc, g: &SymFunc) -> SymFunc {
    f.kronecker(g)
}

pub fn to_basis(f: &SymFunc, target: Basis) -> SymFunc {
    f.to_basis(target)
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&SymFunc> for &SymFunc {
            type Output = SymFunc;
            fn $method(self, rhs: &SymFunc) -> SymFunc {
                SymFunc::$inner(self, rhs)
            }
        }
        impl $tr<SymFunc> for SymFunc {
            type Output = SymFunc;
            fn $method(self, rhs: SymFunc) -> SymFunc {
                SymFunc::$inner(&self, &rhs)
            }
        }
        impl $tr<&SymFunc> for SymFunc {
            type Output = SymFunc;
            fn $method(self, rhs: &SymFunc) -> SymFunc {
                SymFunc::$inner(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.scale_int(-1)
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.scale_int(-1)
    }
}

impl std::iter::Sum for SymFunc {
    fn sum<I: Iterator<Item = SymFunc>>(iter: I) -> SymFunc {
        iter.fold(SymFunc::zero(), |a, b| a + b)
    }
}

impl fmt::Display for SymFunc {
    /// `2*s[2,1] - 1/2*s[1,1,1] + s[0]`; zero renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let tag = self.basis.tag();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "{tag}[{p}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    part: Vec<usize>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct SymFuncRepr {
    basis: String,
    terms: Vec<TermRepr>,
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SymFuncRepr {
            basis: self.basis.tag().to_string(),
            terms: self
                .terms
                .iter()
                .map(|(p, c)| TermRepr { part: p.parts().to_vec(), coef: c.to_string() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SymFuncRepr::deserialize(deserializer)?;
        let basis = Basis::from_tag(&repr.basis).ok_or_else(|| D::Error::custom(format!("unknown basis `{}`", repr.basis)))?;
        let mut f = SymFunc::zero_in(basis);
        for t in repr.terms {
            let p = Partition::new(t.part).map_err(D::Error::custom)?;
            let c: Rational = t.coef.parse().map_err(|_| D::Error::custom(format!("bad coefficient `{}`", t.coef)))?;
            f.add_term(p, c);
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(parts: &[usize]) -> SymFunc {
        SymFunc::schur(p(parts))
    }

    #[test]
    fn addition_examples() {
        assert_eq!(s(&[2, 1]) + SymFunc::zero(), s(&[2, 1]));
        assert_eq!(s(&[2]) + s(&[2]), s(&[2]).scale_int(2));
        assert!((s(&[2]) - s(&[2])).is_zero());
    }

    #[test]
    fn product_examples() {
        assert_eq!(s(&[1]) * s(&[1]), s(&[2]) + s(&[1, 1]));
        assert_eq!(s(&[2, 1]) * s(&[1]), s(&[3, 1]) + s(&[2, 2]) + s(&[2, 1, 1]));
        let expect = s(&[4, 2])
            + s(&[4, 1, 1])
            + s(&[3, 3])
            + s(&[3, 2, 1]).scale_int(2)
            + s(&[3, 1, 1, 1])
            + s(&[2, 2, 2])
            + s(&[2, 2, 1, 1]);
        assert_eq!(s(&[2, 1]) * s(&[2, 1]), expect);
        // p basis multiplies by multiset union
        assert_eq!(SymFunc::p(2) * SymFunc::p(1), SymFunc::power(p(&[2, 1])));
    }

    #[test]
    fn hall_inner_examples() {
        assert_eq!(s(&[2, 1]).hall_inner(&s(&[2, 1])), rational(1));
        assert_eq!(s(&[2, 1]).hall_inner(&s(&[3])), rational(0));
        let p21 = SymFunc::power(p(&[2, 1]));
        assert_eq!(p21.hall_inner(&p21), rational(2));
        assert_eq!(p21.to_schur().hall_inner(&p21.to_schur()), rational(2));
    }

    #[test]
    fn basis_change_examples() {
        let half = Rational::new(1.into(), 2.into());
        let expect = SymFunc::from_terms(Basis::Power, [(p(&[1, 1]), half.clone()), (p(&[2]), -half)]);
        assert_eq!(s(&[1, 1]).to_basis(Basis::Power), expect);
        assert_eq!(SymFunc::h(2).to_schur(), s(&[2]));
        assert_eq!(SymFunc::p(1).to_schur(), s(&[1]));
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(s(&[3]).kronecker(&s(&[2, 1])), s(&[2, 1]));
        assert_eq!(s(&[1, 1]).kronecker(&s(&[1, 1])), s(&[2]));
        assert_eq!(s(&[2, 1]).kronecker(&s(&[2, 1])), s(&[3]) + s(&[2, 1]) + s(&[1, 1, 1]));
        assert!(SymFunc::p(2).kronecker(&SymFunc::power(p(&[1, 1]))).is_zero());
        // different degrees annihilate
        assert!(s(&[2]).kronecker(&s(&[1])).is_zero());
    }

    #[test]
    fn skew_examples() {
        let f = s(&[2, 1]) + s(&[3]).scale_int(4);
        assert_eq!(f.skew(&SymFunc::one()), f);
        assert_eq!(s(&[2, 1]).skew(&s(&[1])), s(&[2]) + s(&[1, 1]));
        let by_one = skew_schur(&"2,1/1".parse().unwrap()).skew(&s(&[1]));
        let expect = skew_schur_of(&p(&[2, 1]), &p(&[2])) + skew_schur_of(&p(&[2, 1]), &p(&[1, 1]));
        assert_eq!(by_one, expect);
        assert_eq!(by_one, s(&[1]).scale_int(2));
    }

    #[test]
    fn skew_schur_examples() {
        assert_eq!(skew_schur(&"2,1/0".parse().unwrap()), s(&[2, 1]));
        assert_eq!(skew_schur(&"2,1/1".parse().unwrap()), s(&[2]) + s(&[1, 1]));
        assert_eq!(skew_schur(&"3,1/1".parse().unwrap()), s(&[3]) + s(&[2, 1]));
        assert!(skew_schur_of(&p(&[2]), &p(&[1, 1])).is_zero());
    }

    #[test]
    fn display_and_json() {
        let f = s(&[2, 1]).scale(&Rational::new((-1).into(), 2.into())) + s(&[3]).scale_int(2) + SymFunc::one();
        assert_eq!(f.to_string(), "s[0] + 2*s[3] - 1/2*s[2,1]");
        assert_eq!(SymFunc::zero().to_string(), "0");
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"basis":"s","terms":[{"part":[],"coef":"1"},{"part":[3],"coef":"2"},{"part":[2,1],"coef":"-1/2"}]}"#
        );
        let back: SymFunc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }
}
