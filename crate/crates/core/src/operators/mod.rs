//! Linear operators on symmetric functions built from `U_f` (multiplication),
//! `D_f` (skewing), `K_f` (Kronecker product) and `K̄_f`.
//!
//! An [`OperatorExpr`] is a formal rational combination of words. Words act
//! right to left: `D(s[1]) * U(s[1])` applies `U` first. Expressions are never
//! normalized; compare them by their action ([`matrix_of`], [`OperatorExpr::apply`]).

mod matrix;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::partition::Partition;
use crate::symfunc::{jacobi_trudi, rational, Rational, SymFunc};

pub use matrix::{independent, matrix_of, rank, TruncatedMatrix};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Generator {
    U(SymFunc),
    D(SymFunc),
    K(SymFunc),
    KB(SymFunc),
    Id,
}

impl Generator {
    pub fn apply(&self, g: &SymFunc) -> SymFunc {
        match self {
            Generator::U(f) => f.mul(g),
            Generator::D(f) => g.skew(f),
            Generator::K(f) => f.kronecker(g),
            Generator::KB(f) => apply_kb(f, g),
            Generator::Id => g.clone(),
        }
    }

    /// Largest possible change in degree.
    fn max_shift(&self) -> i64 {
        match self {
            Generator::U(f) => f.degree().unwrap_or(0) as i64,
            Generator::D(f) => -(f.min_degree().unwrap_or(0) as i64),
            _ => 0,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, arg) = match self {
            Generator::U(a) => ("U", a),
            Generator::D(a) => ("D", a),
            Generator::K(a) => ("K", a),
            Generator::KB(a) => ("KB", a),
            Generator::Id => return f.write_str("Id"),
        };
        write!(f, "{name}({arg})")
    }
}

/// `Σ c_i · w_i` with each word `w_i` a product of generators.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct OperatorExpr {
    terms: Vec<(Rational, Vec<Generator>)>,
}

impl OperatorExpr {
    pub fn zero() -> Self {
        OperatorExpr { terms: Vec::new() }
    }

    pub fn identity() -> Self {
        OperatorExpr::scalar(Rational::one())
    }

    /// `c · Id`
    pub fn scalar(c: Rational) -> Self {
        OperatorExpr::word(c, Vec::new())
    }

    pub fn word(c: Rational, word: Vec<Generator>) -> Self {
        if c.is_zero() {
            return OperatorExpr::zero();
        }
        OperatorExpr { terms: vec![(c, word)] }
    }

    pub fn generator(g: Generator) -> Self {
        match g {
            Generator::Id => OperatorExpr::identity(),
            g => OperatorExpr::word(Rational::one(), vec![g]),
        }
    }

    pub fn u(f: SymFunc) -> Self {
        OperatorExpr::generator(Generator::U(f))
    }

    pub fn d(f: SymFunc) -> Self {
        OperatorExpr::generator(Generator::D(f))
    }

    pub fn k(f: SymFunc) -> Self {
        OperatorExpr::generator(Generator::K(f))
    }

    pub fn kb(f: SymFunc) -> Self {
        OperatorExpr::generator(Generator::KB(f))
    }

    /// `U_{s_λ}`, and likewise for the other families.
    pub fn u_s(lambda: &Partition) -> Self {
        OperatorExpr::u(SymFunc::schur(lambda.clone()))
    }

    pub fn d_s(lambda: &Partition) -> Self {
        OperatorExpr::d(SymFunc::schur(lambda.clone()))
    }

    pub fn k_s(lambda: &Partition) -> Self {
        OperatorExpr::k(SymFunc::schur(lambda.clone()))
    }

    pub fn kb_s(lambda: &Partition) -> Self {
        OperatorExpr::kb(SymFunc::schur(lambda.clone()))
    }

    pub fn terms(&self) -> &[(Rational, Vec<Generator>)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return OperatorExpr::zero();
        }
        OperatorExpr { terms: self.terms.iter().map(|(x, w)| (x * c, w.clone())).collect() }
    }

    /// Formal sum; terms are concatenated, not merged.
    pub fn plus(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        OperatorExpr { terms }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let mut terms = Vec::new();
        for (a, v) in &self.terms {
            for (b, w) in &other.terms {
                let mut word = v.clone();
                word.extend(w.iter().cloned());
                terms.push((a * b, word));
            }
        }
        OperatorExpr { terms }
    }

    pub fn apply(&self, g: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (c, word) in &self.terms {
            let mut v = g.to_schur();
            for gen in word.iter().rev() {
                if v.is_zero() {
                    break;
                }
                v = gen.apply(&v);
            }
            out = out + v.scale(c);
        }
        out
    }

    /// Upper bound on the raise in degree over all words.
    pub fn max_degree_shift(&self) -> i64 {
        self.terms
            .iter()
            .map(|(_, w)| w.iter().map(Generator::max_shift).sum::<i64>())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, word)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let body: Vec<String> = word.iter().map(Generator::to_string).collect();
            match (a.is_one(), body.is_empty()) {
                (true, true) => f.write_str("Id")?,
                (true, false) => f.write_str(&body.join("*"))?,
                (false, true) => write!(f, "{a}*Id")?,
                (false, false) => write!(f, "{a}*{}", body.join("*"))?,
            }
        }
        Ok(())
    }
}

impl Add for OperatorExpr {
    type Output = OperatorExpr;
    fn add(self, rhs: OperatorExpr) -> OperatorExpr {
        self.plus(&rhs)
    }
}

impl Sub for OperatorExpr {
    type Output = OperatorExpr;
    fn sub(self, rhs: OperatorExpr) -> OperatorExpr {
        self.plus(&rhs.scale(&rational(-1)))
    }
}

impl Mul for OperatorExpr {
    type Output = OperatorExpr;
    fn mul(self, rhs: OperatorExpr) -> OperatorExpr {
        self.compose(&rhs)
    }
}

impl Neg for OperatorExpr {
    type Output = OperatorExpr;
    fn neg(self) -> OperatorExpr {
        self.scale(&rational(-1))
    }
}

impl std::iter::Sum for OperatorExpr {
    fn sum<I: Iterator<Item = OperatorExpr>>(iter: I) -> OperatorExpr {
        iter.fold(OperatorExpr::zero(), |a, b| a + b)
    }
}

/// `K̄_f(g)`: on `f = s_λ` and `g` of degree `n`, `s_{(n−|λ|, λ)} ∗ g` with the
/// index straightened by Jacobi–Trudi. Extended linearly in `f` and over the
/// homogeneous components of `g`.
pub fn apply_kb(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let f = f.to_schur();
    let mut out = SymFunc::zero();
    for (n, gn) in g.to_schur().components() {
        for (lambda, c) in f.terms() {
            let mut seq = vec![n as i64 - lambda.size() as i64];
            seq.extend(lambda.parts().iter().map(|&x| x as i64));
            let js = jacobi_trudi(&seq);
            if let Some(shape) = js.shape() {
                let k = SymFunc::schur(shape.clone()).kronecker(&gn);
                out = out + k.scale(&(c * rational(js.sign().into())));
            }
        }
    }
    out
}

/// `K̄_f(g)` computed as `(Γ₁ f)_n ∗ g_n` on each component.
pub fn kb_via_gamma(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (n, gn) in g.to_schur().components() {
        out = out + f.gamma1_component(n).kronecker(&gn);
    }
    out
}

/// `Σ_{|λ| ≤ max_deg} U(f[X−1] ∗ s_λ) D(s_λ)`, which agrees with `K̄_f` on
/// inputs of degree at most `max_deg`. The `λ = ∅` term is written as a
/// multiple of `Id`.
pub fn kb_as_ud(f: &SymFunc, max_deg: usize) -> OperatorExpr {
    let shifted = f.shift_minus_one();
    let mut out = OperatorExpr::zero();
    for lambda in crate::partition::partitions_up_to(max_deg) {
        let s = SymFunc::schur(lambda.clone());
        let coeff = shifted.kronecker(&s);
        if coeff.is_zero() {
            continue;
        }
        if lambda.is_empty() {
            out = out + OperatorExpr::scalar(coeff.coeff(&Partition::empty()));
        } else {
            out = out + OperatorExpr::u(coeff) * OperatorExpr::d(s);
        }
    }
    out
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
    fn apply_examples() {
        let ud = OperatorExpr::u(s(&[1])) * OperatorExpr::d(s(&[1]));
        let du = OperatorExpr::d(s(&[1])) * OperatorExpr::u(s(&[1]));
        let g = s(&[2, 1]);
        assert_eq!(ud.apply(&g), g.scale_int(2) + s(&[3]) + s(&[1, 1, 1]));
        assert_eq!(du.apply(&g), ud.apply(&g) + g.clone());
        assert_eq!(OperatorExpr::identity().apply(&g), g);
    }

    #[test]
    fn kb_examples() {
        let g = s(&[2, 1]) + s(&[3]);
        assert_eq!(apply_kb(&SymFunc::one(), &g), g);
        assert_eq!(apply_kb(&s(&[1]), &s(&[2])), s(&[1, 1]));
        assert_eq!(apply_kb(&s(&[2]), &s(&[1])), -s(&[1]));
        assert_eq!(apply_kb(&s(&[1]), &SymFunc::one()), -SymFunc::one());
        assert_eq!(kb_via_gamma(&s(&[1]), &s(&[2, 1])), apply_kb(&s(&[1]), &s(&[2, 1])));
        assert_eq!(apply_kb(&s(&[1]), &s(&[2, 1])), s(&[3]) + s(&[2, 1]) + s(&[1, 1, 1]));
        assert_eq!(kb_via_gamma(&s(&[2]), &s(&[1])), -s(&[1]));
    }

    #[test]
    fn kb_as_ud_small() {
        let e = kb_as_ud(&s(&[1]), 4);
        assert_eq!(e.to_string(), "-Id + U(s[1])*D(s[1])");
        assert_eq!(kb_as_ud(&SymFunc::one(), 4), OperatorExpr::identity());
        for g in crate::partition::partitions_up_to(4) {
            let g = SymFunc::schur(g);
            assert_eq!(e.apply(&g), apply_kb(&s(&[1]), &g));
        }
    }

    #[test]
    fn display() {
        let e = OperatorExpr::u(s(&[1])) * OperatorExpr::kb(s(&[2])) - OperatorExpr::scalar(rational(2));
        assert_eq!(e.to_string(), "U(s[1])*KB(s[2]) - 2*Id");
    }
}
