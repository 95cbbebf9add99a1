//! Local cohomology with support in the orbit closures `O_t` of rank `<= t`
//! matrices: closed-form graded classes, their genuine direct-sum
//! decompositions, and the engine that iterates them along a chain of
//! orbit closures.
//!
//! For `m > n` the category of equivariant D-modules is semisimple, so a
//! class in the D-basis is already a module. For `m = n` everything that
//! arises lives in `add(Q)`, and the Q-basis class determines the module.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{range, Error, Result};
use crate::exactpoly::LaurentPoly;
use crate::exec::Execution;
use crate::grothendieck::{class_to_expr, euler_chi, Basis, GammaElem, ModuleExpr};
use crate::shapes::{binom, qbinom, qbinom_sq};

fn check_mn(m: usize, n: usize) -> Result<()> {
    if n == 0 || m < n {
        return Err(range(format!("need m >= n >= 1, got m = {m}, n = {n}")));
    }
    Ok(())
}

fn check_index(name: &str, v: usize, n: usize) -> Result<()> {
    if v > n {
        return Err(range(format!("{name} = {v} exceeds n = {n}")));
    }
    Ok(())
}

fn sq(x: i64) -> i64 {
    x * x
}

/// Graded class of `H^•_{O_t}(S)`:
/// `sum_{s<=t} [D_s] q^{(n-t)^2 + (n-s)(m-n)} {n-1-s choose t-s}_{q^2}`.
pub fn h_class_s(m: usize, n: usize, t: usize) -> Result<GammaElem> {
    check_mn(m, n)?;
    check_index("t", t, n)?;
    if t == n {
        return GammaElem::basis_elem(m, n, Basis::D, n);
    }
    let (m_, n_, t_) = (m as i64, n as i64, t as i64);
    let mut coeffs = vec![LaurentPoly::zero(); n + 1];
    for (s, slot) in coeffs.iter_mut().enumerate().take(t + 1) {
        let s_ = s as i64;
        let shift = sq(n_ - t_) + (n_ - s_) * (m_ - n_);
        *slot = qbinom_sq(n_ - 1 - s_, t_ - s_).shift(shift);
    }
    GammaElem::new(m, n, Basis::D, coeffs)
}

/// Graded class of `H^•_{O_t}(D_p)`:
/// `sum_{s<=t} [D_s] q^{(p-t)^2 + (p-s)(m-n)} {n-s choose p-s}_{q^2} {p-1-s choose t-s}_{q^2}`
/// for `t < p`, and `[D_p]` in degree 0 when `t >= p`.
pub fn h_class_d(m: usize, n: usize, t: usize, p: usize) -> Result<GammaElem> {
    check_mn(m, n)?;
    check_index("t", t, n)?;
    check_index("p", p, n)?;
    if t >= p {
        return GammaElem::basis_elem(m, n, Basis::D, p);
    }
    let (m_, n_, t_, p_) = (m as i64, n as i64, t as i64, p as i64);
    let mut coeffs = vec![LaurentPoly::zero(); n + 1];
    for (s, slot) in coeffs.iter_mut().enumerate().take(t + 1) {
        let s_ = s as i64;
        let shift = sq(p_ - t_) + (p_ - s_) * (m_ - n_);
        *slot = (&qbinom_sq(n_ - s_, p_ - s_) * &qbinom_sq(p_ - 1 - s_, t_ - s_)).shift(shift);
    }
    GammaElem::new(m, n, Basis::D, coeffs)
}

/// Graded class of `H^•_{O_t}(Q_p)` for square `n x n` matrices, in the Q-basis:
/// `sum_{s<=t} [Q_s] q^{(p-t)^2 + 2(p-s)} {n-s-1 choose p-s}_{q^2} {p-s-1 choose p-t-1}_{q^2}`
/// for `t < p`, and `[Q_p]` in degree 0 when `t >= p`.
pub fn h_class_q(n: usize, t: usize, p: usize) -> Result<GammaElem> {
    check_mn(n, n)?;
    check_index("t", t, n)?;
    check_index("p", p, n)?;
    if t >= p {
        return GammaElem::basis_elem(n, n, Basis::Q, p);
    }
    let (n_, t_, p_) = (n as i64, t as i64, p as i64);
    let mut coeffs = vec![LaurentPoly::zero(); n + 1];
    for (s, slot) in coeffs.iter_mut().enumerate().take(t + 1) {
        let s_ = s as i64;
        let shift = sq(p_ - t_) + 2 * (p_ - s_);
        *slot = (&qbinom_sq(n_ - s_ - 1, p_ - s_) * &qbinom_sq(p_ - s_ - 1, p_ - t_ - 1)).shift(shift);
    }
    GammaElem::new(n, n, Basis::Q, coeffs)
}

/// The polynomials `m_s(q)`, `s = 0..=n`, with
/// `H^•_{O_t}(D_p) = sum_s Q_s^{⊕} q^{(p-t)^2} m_s(q^2)` for square matrices
/// and `t < p`; entries with `s > t` are zero.
pub fn addq_multiplicities_d(n: usize, t: usize, p: usize) -> Result<Vec<LaurentPoly>> {
    check_mn(n, n)?;
    check_index("p", p, n)?;
    if t >= p {
        return Err(range(format!("need t < p, got t = {t}, p = {p}")));
    }
    let (n_, t_, p_) = (n as i64, t as i64, p as i64);
    let mut out = vec![LaurentPoly::zero(); n + 1];
    out[t] = qbinom(n_ - t_, p_ - t_);
    for (s, slot) in out.iter_mut().enumerate().take(t) {
        let s_ = s as i64;
        let plus = &qbinom(n_ - s_, p_ - s_) * &qbinom(p_ - 1 - s_, t_ - s_);
        let minus = &qbinom(n_ - s_ - 1, p_ - s_ - 1) * &qbinom(p_ - 2 - s_, t_ - 1 - s_);
        *slot = &plus - &minus;
    }
    Ok(out)
}

/// `sum_s [Q_s] q^{(p-t)^2} m_s(q^2)`: the Q-basis class of `H^•_{O_t}(D_p)`,
/// square case, `t < p`.
pub fn addq_class_d(n: usize, t: usize, p: usize) -> Result<GammaElem> {
    let shift = sq(p as i64 - t as i64);
    let coeffs = addq_multiplicities_d(n, t, p)?
        .into_iter()
        .map(|ms| ms.subs_pow(2).shift(shift))
        .collect();
    GammaElem::new(n, n, Basis::Q, coeffs)
}

/// Local cohomology modules indexed by cohomological degree.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GradedExpr {
    degrees: BTreeMap<i64, ModuleExpr>,
}

impl GradedExpr {
    pub fn single(j: i64, e: ModuleExpr) -> Self {
        let mut g = Self::default();
        g.insert(j, e);
        g
    }

    fn insert(&mut self, j: i64, e: ModuleExpr) {
        if e.is_zero() {
            return;
        }
        match self.degrees.get_mut(&j) {
            Some(existing) => {
                *existing = existing.direct_sum(&e).expect("graded pieces share one context")
            }
            None => {
                self.degrees.insert(j, e);
            }
        }
    }

    /// Reads each degree of a graded class as an actual module; fails if
    /// some degree is not effective.
    pub fn from_class(g: &GammaElem) -> Result<Self> {
        let mut out = Self::default();
        for j in g.degrees() {
            if j < 0 {
                return Err(Error::NotEffective(format!("negative cohomological degree {j} in {g}")));
            }
            let e = class_to_expr(&g.degree_slice(j))
                .map_err(|e| Error::NotEffective(format!("degree {j} of {g}: {e}")))?;
            out.insert(j, e);
        }
        Ok(out)
    }

    pub fn get(&self, j: i64) -> Option<&ModuleExpr> {
        self.degrees.get(&j)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &ModuleExpr)> {
        self.degrees.iter().map(|(j, e)| (*j, e))
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }
}

impl fmt::Display for GradedExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            return write!(f, "0");
        }
        for (i, (j, e)) in self.degrees.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "H^{j}: {e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GradedExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.degrees.iter()).finish()
    }
}

fn check_regime(e: &ModuleExpr) -> Result<()> {
    let square = e.m() == e.n();
    match (e.family(), square) {
        (Basis::D, false) | (Basis::Q, true) => Ok(()),
        (Basis::D, true) => Err(Error::Regime(
            "square matrices: local cohomology is computed on add(Q) expressions".into(),
        )),
        (Basis::Q, false) => Err(Error::Regime("Q-family modules exist only for m = n".into())),
    }
}

/// `H^•_{O_t}(e)`, extended linearly over the indecomposable summands of `e`.
pub fn apply_loccoh(e: &ModuleExpr, t: usize) -> Result<GradedExpr> {
    check_regime(e)?;
    let (m, n) = (e.m(), e.n());
    check_index("t", t, n)?;
    let mut out = GradedExpr::default();
    for (s, &k) in e.mult().iter().enumerate() {
        if k == 0 {
            continue;
        }
        let class = match e.family() {
            Basis::D => h_class_d(m, n, t, s)?,
            Basis::Q => h_class_q(n, t, s)?,
        };
        for (j, piece) in GradedExpr::from_class(&class)?.degrees {
            let scaled = ModuleExpr::new(m, n, piece.family(), piece.mult().iter().map(|x| x * k).collect())?;
            out.insert(j, scaled);
        }
    }
    Ok(out)
}

/// The module local cohomology is first applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Start {
    /// The polynomial ring `S = D_n`.
    S,
    /// The simple module `D_p`.
    D,
    /// The indecomposable `Q_p` (square matrices only).
    Q,
}

impl Start {
    fn module_index(self, p: usize, n: usize) -> usize {
        match self {
            Start::S => n,
            Start::D | Start::Q => p,
        }
    }
}

/// The first local cohomology functor applied to `S`, `D_p` or `Q_p`, with
/// every degree resolved into a module.
pub fn start_expr(kind: Start, p: usize, m: usize, n: usize, t: usize) -> Result<GradedExpr> {
    check_mn(m, n)?;
    check_index("p", p, n)?;
    check_index("t", t, n)?;
    let p = kind.module_index(p, n);
    let square = m == n;
    match kind {
        Start::Q if !square => Err(Error::NotSquare { m, n }),
        Start::Q => GradedExpr::from_class(&h_class_q(n, t, p)?),
        Start::S | Start::D if t >= p => Ok(GradedExpr::single(
            0,
            ModuleExpr::single(m, n, Basis::D, p)?,
        )),
        Start::S | Start::D if square => GradedExpr::from_class(&addq_class_d(n, t, p)?),
        Start::S | Start::D => GradedExpr::from_class(&h_class_d(m, n, t, p)?),
    }
}

/// Iterated local cohomology `H_{O_{i_1}}(H_{O_{i_2}}( ... H_{O_{i_r}}(M)))`
/// with every multidegree resolved into a module.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiGradedTable {
    chain: Vec<usize>,
    dropped: Vec<usize>,
    entries: BTreeMap<Vec<i64>, ModuleExpr>,
}

impl MultiGradedTable {
    /// The orbit indices actually applied, outermost first, strictly increasing.
    pub fn chain(&self) -> &[usize] {
        &self.chain
    }

    /// Chain entries that were dropped because the module they would act on
    /// was already supported inside that orbit closure.
    pub fn dropped(&self) -> &[usize] {
        &self.dropped
    }

    /// Nonzero entries keyed by `(j_1, ..., j_r)`, outermost degree first.
    pub fn entries(&self) -> &BTreeMap<Vec<i64>, ModuleExpr> {
        &self.entries
    }

    pub fn get(&self, degrees: &[i64]) -> Option<&ModuleExpr> {
        self.entries.get(degrees)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "chain": self.chain,
            "entries": self.entries.iter().map(|(d, e)| json!({
                "degrees": d,
                "module": e.to_json(),
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for MultiGradedTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let chain: Vec<String> = self.chain.iter().map(|t| format!("O{t}")).collect();
        write!(f, "chain: {}", chain.join(" <- "))?;
        if !self.dropped.is_empty() {
            write!(f, " (dropped {:?})", self.dropped)?;
        }
        for (d, e) in &self.entries {
            let d: Vec<String> = d.iter().map(i64::to_string).collect();
            write!(f, "\n({}): {e}", d.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiGradedTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// [`iterate_loccoh_with`] on the default execution mode.
pub fn iterate_loccoh(kind: Start, p: usize, m: usize, n: usize, chain: &[usize]) -> Result<MultiGradedTable> {
    iterate_loccoh_with(Execution::default(), kind, p, m, n, chain)
}

/// Applies the functors of `chain` (outermost first, so applied right to
/// left) to `S`, `D_p` or `Q_p`.
///
/// An entry `t` is dropped when every module it would act on is already
/// supported in `O_t`: there it only returns its input in degree 0. After
/// dropping, the applied chain is strictly increasing.
pub fn iterate_loccoh_with(
    exec: Execution,
    kind: Start,
    p: usize,
    m: usize,
    n: usize,
    chain: &[usize],
) -> Result<MultiGradedTable> {
    check_mn(m, n)?;
    check_index("p", p, n)?;
    if kind == Start::Q && m != n {
        return Err(Error::NotSquare { m, n });
    }
    for &t in chain {
        check_index("chain entry", t, n)?;
    }
    let p = kind.module_index(p, n);
    let family = if kind == Start::Q { Basis::Q } else { Basis::D };
    let mut entries: BTreeMap<Vec<i64>, ModuleExpr> =
        BTreeMap::from([(Vec::new(), ModuleExpr::single(m, n, family, p)?)]);
    let mut support = Some(p);
    let mut applied = Vec::new();
    let mut dropped = Vec::new();

    for &t in chain.iter().rev() {
        if support.is_none_or(|s| t >= s) {
            log::info!("dropping O{t} from the chain: module already supported there");
            dropped.push(t);
            continue;
        }
        entries = if applied.is_empty() {
            start_expr(kind, p, m, n, t)?
                .iter()
                .map(|(j, e)| (vec![j], e.clone()))
                .collect()
        } else {
            let items: Vec<(Vec<i64>, ModuleExpr)> = entries.into_iter().collect();
            let pieces = exec.map(items, |(degrees, e)| {
                apply_loccoh(&e, t).map(|g| {
                    g.iter()
                        .map(|(j, piece)| {
                            let mut key = Vec::with_capacity(degrees.len() + 1);
                            key.push(j);
                            key.extend_from_slice(&degrees);
                            (key, piece.clone())
                        })
                        .collect::<Vec<_>>()
                })
            });
            let mut next = BTreeMap::new();
            for piece in pieces {
                next.extend(piece?);
            }
            next
        };
        applied.push(t);
        support = entries.values().filter_map(ModuleExpr::support).max();
    }
    applied.reverse();
    dropped.reverse();
    Ok(MultiGradedTable { chain: applied, dropped, entries })
}

/// Checks the Euler characteristic recurrence
/// `sum_{s=t+1}^p chi_0(H_t(D_s)) (-1)^{s(m-n)} binom(n-1-s, p-s)
///  = (-1)^{p-t} binom(n-1, t) - binom(n-1, p)` for `t < p <= n <= m`.
pub fn chi_recurrence_check(m: usize, n: usize, t: usize, p: usize) -> Result<bool> {
    check_mn(m, n)?;
    check_index("p", p, n)?;
    if t >= p {
        return Err(range(format!("need t < p, got t = {t}, p = {p}")));
    }
    let (m_, n_, t_, p_) = (m as i64, n as i64, t as i64, p as i64);
    let mut lhs = BigInt::from(0);
    for s in t + 1..=p {
        let s_ = s as i64;
        let chi0 = euler_chi(&h_class_d(m, n, t, s)?, 0)?;
        let sign = if (s_ * (m_ - n_)) % 2 == 0 { 1 } else { -1 };
        lhs += chi0 * sign * binom(n_ - 1 - s_, p_ - s_);
    }
    let sign = if (p_ - t_) % 2 == 0 { 1 } else { -1 };
    let rhs = binom(n_ - 1, t_) * sign - binom(n_ - 1, p_);
    Ok(lhs == rhs)
}
