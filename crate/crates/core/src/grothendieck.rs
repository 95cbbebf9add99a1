//! The graded Grothendieck group `Γ_D[q]` of equivariant D-modules on
//! `m x n` matrices, in the basis of simples `[D_s]` or (square case only)
//! the basis `[Q_s]`, together with genuine direct-sum decompositions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde_json::{json, Value};

use crate::error::{range, Error, Result};
use crate::exactpoly::LaurentPoly;

/// Which family of indecomposables a class or module is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// The simple modules `D_0, ..., D_n`.
    D,
    /// The square-matrix indecomposables `Q_0, ..., Q_n`.
    Q,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::D => "D",
            Basis::Q => "Q",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

fn check_context(m: usize, n: usize, basis: Basis) -> Result<()> {
    if n == 0 || m < n {
        return Err(range(format!("need m >= n >= 1, got m = {m}, n = {n}")));
    }
    if basis == Basis::Q && m != n {
        return Err(Error::NotSquare { m, n });
    }
    Ok(())
}

/// An element `sum_s [X_s] * c_s(q)` of `Γ_D[q]`, `X` being `D` or `Q`.
#[derive(Clone, PartialEq, Eq)]
pub struct GammaElem {
    m: usize,
    n: usize,
    basis: Basis,
    coeffs: Vec<LaurentPoly>,
}

impl GammaElem {
    pub fn new(m: usize, n: usize, basis: Basis, coeffs: Vec<LaurentPoly>) -> Result<Self> {
        check_context(m, n, basis)?;
        if coeffs.len() != n + 1 {
            return Err(Error::Dimension(format!(
                "expected {} coefficients, got {}",
                n + 1,
                coeffs.len()
            )));
        }
        Ok(Self { m, n, basis, coeffs })
    }

    pub fn zero(m: usize, n: usize, basis: Basis) -> Result<Self> {
        Self::new(m, n, basis, vec![LaurentPoly::zero(); n + 1])
    }

    /// `[X_s] * c`.
    pub fn term(m: usize, n: usize, basis: Basis, s: usize, c: LaurentPoly) -> Result<Self> {
        let mut g = Self::zero(m, n, basis)?;
        if s > n {
            return Err(range(format!("index {s} exceeds n = {n}")));
        }
        g.coeffs[s] = c;
        Ok(g)
    }

    /// The class `[X_s]` in degree 0.
    pub fn basis_elem(m: usize, n: usize, basis: Basis, s: usize) -> Result<Self> {
        Self::term(m, n, basis, s, LaurentPoly::one())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// The coefficient polynomial of `[X_s]`.
    pub fn coeff(&self, s: usize) -> &LaurentPoly {
        &self.coeffs[s]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    fn check_compatible(&self, other: &GammaElem) -> Result<()> {
        if (self.m, self.n) != (other.m, other.n) {
            return Err(Error::Dimension(format!(
                "({}, {}) vs ({}, {})",
                self.m, self.n, other.m, other.n
            )));
        }
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(format!("{} vs {}", self.basis, other.basis)));
        }
        Ok(())
    }

    fn zip_with(
        &self,
        other: &GammaElem,
        f: impl Fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly,
    ) -> Result<GammaElem> {
        self.check_compatible(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
        Ok(GammaElem { coeffs, ..self.clone() })
    }

    pub fn add(&self, other: &GammaElem) -> Result<GammaElem> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &GammaElem) -> Result<GammaElem> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, p: &LaurentPoly) -> GammaElem {
        GammaElem {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
            ..self.clone()
        }
    }

    /// Rewrites the element in the other basis using `[Q_p] = sum_{s<=p} [D_s]`.
    pub fn change_basis(&self, to: Basis) -> Result<GammaElem> {
        if to == self.basis {
            return Ok(self.clone());
        }
        check_context(self.m, self.n, Basis::Q)?;
        let n = self.n;
        let mut coeffs = vec![LaurentPoly::zero(); n + 1];
        match to {
            // [Q_p] contributes to every [D_s] with s <= p.
            Basis::D => {
                for (p, c) in self.coeffs.iter().enumerate() {
                    for slot in coeffs.iter_mut().take(p + 1) {
                        *slot = &*slot + c;
                    }
                }
            }
            // [D_s] = [Q_s] - [Q_{s-1}].
            Basis::Q => {
                for (s, c) in self.coeffs.iter().enumerate() {
                    coeffs[s] = &coeffs[s] + c;
                    if s > 0 {
                        coeffs[s - 1] = &coeffs[s - 1] - c;
                    }
                }
            }
        }
        Ok(GammaElem { coeffs, basis: to, ..self.clone() })
    }

    /// The D-basis form of this element.
    pub fn in_d_basis(&self) -> Result<GammaElem> {
        self.change_basis(Basis::D)
    }

    /// The constant class formed by the coefficients of `q^j`.
    pub fn degree_slice(&self, j: i64) -> GammaElem {
        GammaElem {
            coeffs: self.coeffs.iter().map(|c| LaurentPoly::constant(c.coeff(j))).collect(),
            ..self.clone()
        }
    }

    /// Sorted list of exponents carrying a nonzero coefficient in any slot.
    pub fn degrees(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.coeffs.iter().flat_map(|c| c.terms().map(|(e, _)| e)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "n": self.n,
            "basis": self.basis.symbol(),
            "coeffs": self.coeffs.iter().map(LaurentPoly::to_json).collect::<Vec<_>>(),
        })
    }
}

/// `<a, b>_D = sum_s a_s(q) b_s(q)`, both operands taken in the D-basis.
pub fn pairing_d(a: &GammaElem, b: &GammaElem) -> Result<LaurentPoly> {
    let a = a.in_d_basis_if_needed()?;
    let b = b.in_d_basis_if_needed()?;
    a.check_compatible(&b)?;
    Ok(a.coeffs
        .iter()
        .zip(&b.coeffs)
        .fold(LaurentPoly::zero(), |acc, (x, y)| &acc + &(x * y)))
}

impl GammaElem {
    fn in_d_basis_if_needed(&self) -> Result<GammaElem> {
        match self.basis {
            Basis::D => Ok(self.clone()),
            Basis::Q => self.change_basis(Basis::D),
        }
    }
}

/// `chi_s(g) = g_s(-1)`, computed in the D-basis.
pub fn euler_chi(g: &GammaElem, s: usize) -> Result<BigInt> {
    if g.basis != Basis::D {
        return Err(Error::BasisMismatch("Euler characteristics are taken in the D-basis".into()));
    }
    if s > g.n {
        return Err(range(format!("index {s} exceeds n = {}", g.n)));
    }
    g.coeffs[s].eval(-1)
}

/// All `chi_s(g)` for `s = 0..=n`.
pub fn euler_chi_all(g: &GammaElem) -> Result<Vec<BigInt>> {
    (0..=g.n).map(|s| euler_chi(g, s)).collect()
}

impl fmt::Display for GammaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(i64, usize, &BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .flat_map(|(s, c)| c.terms().map(move |(e, k)| (e, s, k)))
            .collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        terms.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        for (i, (e, s, c)) in terms.into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.abs();
            if abs != BigInt::from(1) {
                write!(f, "{abs}*")?;
            }
            match e {
                0 => {}
                1 => write!(f, "q*")?,
                _ => write!(f, "q^{e}*")?,
            }
            write!(f, "[{}{s}]", self.basis.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for GammaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GammaElem(m={}, n={}: {self})", self.m, self.n)
    }
}

/// A genuine module `⊕_s X_s^{mult_s}`, `X` being `D` or `Q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleExpr {
    m: usize,
    n: usize,
    family: Basis,
    mult: Vec<u64>,
}

impl ModuleExpr {
    pub fn new(m: usize, n: usize, family: Basis, mult: Vec<u64>) -> Result<Self> {
        check_context(m, n, family)?;
        if mult.len() != n + 1 {
            return Err(Error::Dimension(format!(
                "expected {} multiplicities, got {}",
                n + 1,
                mult.len()
            )));
        }
        Ok(Self { m, n, family, mult })
    }

    pub fn zero(m: usize, n: usize, family: Basis) -> Result<Self> {
        Self::new(m, n, family, vec![0; n + 1])
    }

    /// A single copy of `X_s`.
    pub fn single(m: usize, n: usize, family: Basis, s: usize) -> Result<Self> {
        let mut e = Self::zero(m, n, family)?;
        if s > n {
            return Err(range(format!("index {s} exceeds n = {n}")));
        }
        e.mult[s] = 1;
        Ok(e)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> Basis {
        self.family
    }

    pub fn mult(&self) -> &[u64] {
        &self.mult
    }

    pub fn is_zero(&self) -> bool {
        self.mult.iter().all(|&k| k == 0)
    }

    /// Largest index with nonzero multiplicity: the orbit closure supporting the module.
    pub fn support(&self) -> Option<usize> {
        self.mult.iter().rposition(|&k| k > 0)
    }

    /// Adds `k` copies of `X_s` in place.
    pub fn add_copies(&mut self, s: usize, k: u64) {
        self.mult[s] += k;
    }

    pub fn direct_sum(&self, other: &ModuleExpr) -> Result<ModuleExpr> {
        if (self.m, self.n, self.family) != (other.m, other.n, other.family) {
            return Err(Error::BasisMismatch("direct sum of incompatible expressions".into()));
        }
        let mult = self.mult.iter().zip(&other.mult).map(|(a, b)| a + b).collect();
        Ok(ModuleExpr { mult, ..self.clone() })
    }

    pub fn to_json(&self) -> Value {
        json!({ "family": self.family.symbol(), "mult": self.mult })
    }
}

impl fmt::Display for ModuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .mult
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(s, &k)| {
                if k == 1 {
                    format!("{}{s}", self.family)
                } else {
                    format!("{}{s}^{k}", self.family)
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for ModuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleExpr({self})")
    }
}

/// The class of a module: multiplicities as constant coefficients.
pub fn expr_to_class(e: &ModuleExpr) -> GammaElem {
    GammaElem {
        m: e.m,
        n: e.n,
        basis: e.family,
        coeffs: e.mult.iter().map(|&k| LaurentPoly::constant(k)).collect(),
    }
}

/// Reads a constant, nonnegative class as an actual module in its own basis.
pub fn class_to_expr(g: &GammaElem) -> Result<ModuleExpr> {
    let mut mult = Vec::with_capacity(g.n + 1);
    for (s, c) in g.coeffs.iter().enumerate() {
        let k = c
            .as_constant()
            .ok_or_else(|| Error::NotEffective(format!("coefficient of [{}{s}] is {c}", g.basis)))?;
        let k = k
            .to_u64()
            .filter(|_| !k.is_negative())
            .ok_or_else(|| Error::NotEffective(format!("multiplicity {k} of [{}{s}]", g.basis)))?;
        mult.push(k);
    }
    Ok(ModuleExpr { m: g.m, n: g.n, family: g.basis, mult })
}
