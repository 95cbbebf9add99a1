//! Exact Laurent polynomials in `q` and bivariate polynomials in `(q, w)`
//! with arbitrary-precision integer coefficients.
//!
//! Both types keep a sparse canonical form: a sorted map from exponent to
//! coefficient with no stored zeros, so structural equality is mathematical
//! equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Ring operation selector for [`poly_arith`] and [`bipoly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

fn add_exp(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("q-exponent overflow")
}

/// A Laurent polynomial `sum c_e q^e` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Adds `c * q^exp` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The constant value, if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (add_exp(*e, k), c.clone())).collect(),
        }
    }

    /// Substitutes `q -> q^k` (for `k = 2` this turns `f(q)` into `f(q^2)`).
    pub fn subs_pow(&self, k: i64) -> Self {
        assert!(k != 0, "q -> q^0 is not an injective substitution");
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.checked_mul(k).expect("q-exponent overflow"), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn invert_var(&self) -> Self {
        self.subs_pow(-1)
    }

    /// Exact value at the integer `x`.
    pub fn eval(&self, x: i64) -> Result<BigInt> {
        let has_negative = self.min_exp().is_some_and(|e| e < 0);
        if has_negative {
            if x == 0 {
                return Err(Error::EvalAtZero);
            }
            if x != 1 && x != -1 {
                return Err(Error::NonIntegralValue { x });
            }
        }
        let base = BigInt::from(x);
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let v = if *e >= 0 {
                num_traits::pow(base.clone(), *e as usize)
            } else {
                // x is +-1 here, so x^e = x^|e|.
                num_traits::pow(base.clone(), e.unsigned_abs() as usize)
            };
            total += c * v;
        }
        Ok(total)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| json!({ "exp": e, "coeff": c.to_string() }))
                .collect(),
        )
    }
}

/// Exact ring arithmetic on Laurent polynomials.
pub fn poly_arith(a: &LaurentPoly, b: &LaurentPoly, op: ArithOp) -> LaurentPoly {
    match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(add_exp(*ea, *eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_ops {
    ($ty:ty) => {
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
    };
}

forward_owned_ops!(LaurentPoly);
forward_owned_ops!(BiPoly);

fn write_coeff_prefix(f: &mut fmt::Formatter<'_>, c: &BigInt, first: bool, bare: bool) -> fmt::Result {
    let abs = c.abs();
    match (first, c.is_negative()) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    if bare {
        write!(f, "{abs}")
    } else if abs.is_one() {
        Ok(())
    } else {
        write!(f, "{abs}*")
    }
}

fn var_pow(var: char, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            write_coeff_prefix(f, c, i == 0, *e == 0)?;
            write!(f, "{}", var_pow('q', *e))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Which variable of a [`BiPoly`] a univariate polynomial is embedded as.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Q,
    W,
}

/// A polynomial `sum c_{i,j} q^i w^j` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: impl Into<BigInt>, q_exp: i64, w_exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(q_exp, w_exp, c.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c.into());
        }
        p
    }

    /// Maps the `q`-exponents of `p` onto `var`.
    pub fn embed(p: &LaurentPoly, var: Var) -> Self {
        let mut out = Self::zero();
        for (e, c) in p.terms() {
            match var {
                Var::Q => out.add_term(e, 0, c.clone()),
                Var::W => out.add_term(0, e, c.clone()),
            }
        }
        out
    }

    /// `q_part(q) * w_part(w)`.
    pub fn product(q_part: &LaurentPoly, w_part: &LaurentPoly) -> Self {
        &Self::embed(q_part, Var::Q) * &Self::embed(w_part, Var::W)
    }

    pub fn add_term(&mut self, q_exp: i64, w_exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (q_exp, w_exp);
        let slot = self.terms.entry(key).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Iterates `((q_exp, w_exp), coefficient)` in ascending lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, q_exp: i64, w_exp: i64) -> BigInt {
        self.terms.get(&(q_exp, w_exp)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|((i, j), c)| json!({ "exp": [i, j], "coeff": c.to_string() }))
                .collect(),
        )
    }
}

/// Exact ring arithmetic on bivariate polynomials.
pub fn bipoly_arith(a: &BiPoly, b: &BiPoly, op: ArithOp) -> BiPoly {
    match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((i, j), c) in &rhs.terms {
            out.add_term(*i, *j, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((i, j), c) in &rhs.terms {
            out.add_term(*i, *j, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((ia, ja), ca) in &self.terms {
            for ((ib, jb), cb) in &rhs.terms {
                out.add_term(add_exp(*ia, *ib), add_exp(*ja, *jb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, ((i, j), c)) in self.terms.iter().enumerate() {
            let bare = *i == 0 && *j == 0;
            write_coeff_prefix(f, c, n == 0, bare)?;
            let parts: Vec<String> = [var_pow('q', *i), var_pow('w', *j)]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect();
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn monomial_multiplication() {
        let a = p(&[(0, 1), (1, 1)]);
        let b = LaurentPoly::q_pow(1);
        assert_eq!(poly_arith(&a, &b, ArithOp::Mul), p(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn additive_identity() {
        let a = p(&[(-2, 3), (0, -1), (5, 7)]);
        assert_eq!(poly_arith(&a, &LaurentPoly::zero(), ArithOp::Add), a);
    }

    #[test]
    fn product_expanded_term_by_term() {
        let a = p(&[(0, 1), (2, 1)]);
        let b = p(&[(0, 1), (2, 1), (4, 1)]);
        // (1+q^2)(1+q^2+q^4): each pair of terms contributes q^(i+j).
        let mut oracle = BTreeMap::new();
        for i in [0, 2] {
            for j in [0, 2, 4] {
                *oracle.entry(i + j).or_insert(0) += 1;
            }
        }
        assert_eq!(oracle, BTreeMap::from([(0, 1), (2, 2), (4, 2), (6, 1)]));
        assert_eq!(&a * &b, LaurentPoly::from_terms(oracle));
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = p(&[(1, 2), (3, 1)]);
        let b = p(&[(1, 2)]);
        let d = &a - &b;
        assert_eq!(d.len(), 1);
        assert_eq!(d.coeff(1), BigInt::zero());
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[(0, 1), (1, 1), (2, 1)]).eval(-1).unwrap(), BigInt::from(1));
        assert_eq!(LaurentPoly::q_pow(3).eval(-1).unwrap(), BigInt::from(-1));
        assert_eq!(p(&[(-1, 1), (1, 1)]).eval(-1).unwrap(), BigInt::from(-2));
        assert_eq!(LaurentPoly::q_pow(-1).eval(0), Err(Error::EvalAtZero));
        assert_eq!(LaurentPoly::q_pow(-1).eval(2), Err(Error::NonIntegralValue { x: 2 }));
        assert_eq!(p(&[(0, 1), (3, 2)]).eval(0).unwrap(), BigInt::from(1));
        assert_eq!(p(&[(0, 1), (3, 2)]).eval(2).unwrap(), BigInt::from(17));
    }

    #[test]
    fn inversion() {
        assert_eq!(p(&[(0, 1), (1, 1)]).invert_var(), p(&[(0, 1), (-1, 1)]));
        assert_eq!(LaurentPoly::constant(5).invert_var(), LaurentPoly::constant(5));
    }

    #[test]
    fn text_rendering() {
        assert_eq!(p(&[(0, 1), (2, 2), (4, 1)]).to_string(), "1 + 2*q^2 + q^4");
        assert_eq!(p(&[(-1, -3), (1, 1)]).to_string(), "-3*q^-1 + q");
        assert_eq!(p(&[(0, -1), (2, -1)]).to_string(), "-1 - q^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let b = BiPoly::from_terms([((0, 3), 1), ((2, 4), 1), ((4, 4), 1)]);
        assert_eq!(b.to_string(), "w^3 + q^2*w^4 + q^4*w^4");
        assert_eq!(BiPoly::monomial(-2, 0, 0).to_string(), "-2");
    }

    #[test]
    fn json_rendering() {
        let j = p(&[(0, 1), (2, -3)]).to_json();
        assert_eq!(j, json!([{"exp": 0, "coeff": "1"}, {"exp": 2, "coeff": "-3"}]));
        let b = BiPoly::monomial(7, 1, 2).to_json();
        assert_eq!(b, json!([{"exp": [1, 2], "coeff": "7"}]));
    }

    #[test]
    fn bipoly_embed_and_add() {
        assert_eq!(BiPoly::embed(&LaurentPoly::q_pow(2), Var::W), BiPoly::monomial(1, 0, 2));
        let s = bipoly_arith(
            &BiPoly::monomial(1, 0, 3),
            &BiPoly::monomial(1, 2, 4),
            ArithOp::Add,
        );
        assert_eq!(s, BiPoly::from_terms([((0, 3), 1), ((2, 4), 1)]));
    }

    #[test]
    fn bipoly_assembles_lyubeznik_3x2() {
        // w^3 * 1 + q^2 (1 + q^2) * w^4 as a sum of q-part times w-part products.
        let s0 = BiPoly::product(&LaurentPoly::one(), &LaurentPoly::q_pow(3));
        let s1 = BiPoly::product(&p(&[(2, 1), (4, 1)]), &LaurentPoly::q_pow(4));
        let l = bipoly_arith(&s0, &s1, ArithOp::Add);
        assert_eq!(l, BiPoly::from_terms([((0, 3), 1), ((2, 4), 1), ((4, 4), 1)]));
    }

    #[test]
    fn big_coefficients_stay_exact() {
        let mut x = p(&[(0, 1), (1, 1)]);
        for _ in 0..7 {
            x = &x * &x;
        }
        // (1+q)^128, middle coefficient C(128, 64).
        let c = x.coeff(64);
        assert_eq!(c.to_string(), "23951146041928082866135587776380551750");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..7, -20i64..21), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn invert_is_involution(a in arb_poly()) {
            prop_assert_eq!(a.invert_var().invert_var(), a);
        }

        #[test]
        fn eval_is_multiplicative(a in arb_poly(), b in arb_poly(), x in -1i64..2) {
            let ab = (&a * &b).eval(x);
            if let (Ok(va), Ok(vb)) = (a.eval(x), b.eval(x)) {
                prop_assert_eq!(ab.unwrap(), va * vb);
            }
        }

        #[test]
        fn no_stored_zeros(a in arb_poly(), b in arb_poly()) {
            for (_, c) in (&a * &b).terms() {
                prop_assert!(!c.is_zero());
            }
        }
    }
}
