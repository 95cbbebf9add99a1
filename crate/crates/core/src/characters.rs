//! Characters of admissible `GL_m x GL_n` representations, recorded as
//! q-graded multiplicities of the irreducibles `S_λ C^m ⊗ S_μ C^n`.
//!
//! Infinite characters (the D-modules, the ring, ideals) are only ever
//! materialized inside a window `|entry| <= B`. The pairing refuses
//! combinations whose overlap the window cannot certify.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{range, Error, Result};
use crate::exactpoly::LaurentPoly;
use crate::shapes::{conjugate, partitions_in_rectangle, qbinom_sq, Partition, Weight};

/// An irreducible `S_λ C^m ⊗ S_μ C^n`, with `λ` of length `m` and `μ` of
/// length `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightPair {
    lambda: Weight,
    mu: Weight,
}

impl WeightPair {
    pub fn new(lambda: Weight, mu: Weight) -> Result<Self> {
        if !lambda.is_dominant() || !mu.is_dominant() {
            return Err(range(format!("weights {lambda} and {mu} must be dominant")));
        }
        Ok(Self { lambda, mu })
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn mu(&self) -> &Weight {
        &self.mu
    }

    pub fn max_abs(&self) -> i64 {
        self.lambda.max_abs().max(self.mu.max_abs())
    }

    /// Tensoring with `S_{(a^m)} C^m ⊗ S_{(b^n)} C^n`.
    pub fn shifted(&self, a: i64, b: i64) -> Self {
        Self { lambda: self.lambda.shifted(a), mu: self.mu.shifted(b) }
    }
}

impl fmt::Display for WeightPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S[{}]⊗S[{}]", self.lambda, self.mu)
    }
}

impl fmt::Debug for WeightPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A q-graded character: finitely many weight pairs with polynomial
/// multiplicities. When `bound` is set, the series is the restriction of a
/// possibly infinite character to weights with all entries in `[-B, B]`.
#[derive(Clone, PartialEq, Eq)]
pub struct CharacterSeries {
    m: usize,
    n: usize,
    terms: BTreeMap<WeightPair, LaurentPoly>,
    bound: Option<i64>,
}

impl CharacterSeries {
    pub fn exact(m: usize, n: usize) -> Self {
        Self { m, n, terms: BTreeMap::new(), bound: None }
    }

    fn truncated(m: usize, n: usize, bound: i64) -> Self {
        Self { m, n, terms: BTreeMap::new(), bound: Some(bound) }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> Option<i64> {
        self.bound
    }

    pub fn is_exact(&self) -> bool {
        self.bound.is_none()
    }

    pub fn terms(&self) -> &BTreeMap<WeightPair, LaurentPoly> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, pair: &WeightPair) -> LaurentPoly {
        self.terms.get(pair).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, pair: WeightPair, c: LaurentPoly) {
        assert_eq!(
            (pair.lambda.len(), pair.mu.len()),
            (self.m, self.n),
            "weight pair has the wrong shape"
        );
        if let Some(b) = self.bound {
            if pair.max_abs() > b {
                return;
            }
        }
        let entry = self.terms.entry(pair).or_default();
        *entry = &*entry + &c;
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self { terms: BTreeMap::new(), ..self.clone() };
        for (pair, a) in &self.terms {
            out.add_term(pair.clone(), a * c);
        }
        out
    }

    pub fn add(&self, other: &CharacterSeries) -> Result<Self> {
        if (self.m, self.n, self.bound) != (other.m, other.n, other.bound) {
            return Err(Error::Dimension("characters live in different contexts".into()));
        }
        let mut out = self.clone();
        for (pair, c) in &other.terms {
            out.add_term(pair.clone(), c.clone());
        }
        Ok(out)
    }

    /// Tensoring with `S_{(a^m)} C^m ⊗ S_{(b^n)} C^n`. Only exact series can
    /// be shifted; a shifted window is no longer of the form `[-B, B]`.
    pub fn shifted(&self, a: i64, b: i64) -> Result<Self> {
        if !self.is_exact() {
            return Err(Error::PairingUndefined("cannot shift a truncated character".into()));
        }
        let terms = self.terms.iter().map(|(p, c)| (p.shifted(a, b), c.clone())).collect();
        Ok(Self { terms, ..self.clone() })
    }

    /// Every monomial `c q^k S[λ]⊗S[μ]`, sorted by `k` and then by weight.
    pub fn monomials(&self) -> Vec<(i64, &WeightPair, BigInt)> {
        let mut out: Vec<(i64, &WeightPair, BigInt)> = self
            .terms
            .iter()
            .flat_map(|(pair, c)| c.terms().map(move |(k, a)| (k, pair, a.clone())))
            .collect();
        out.sort_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)));
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "n": self.n,
            "bound": self.bound,
            "terms": self.monomials().into_iter().map(|(k, pair, c)| json!({
                "q": k,
                "lambda": pair.lambda.entries(),
                "mu": pair.mu.entries(),
                "mult": c.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for CharacterSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let monomials = self.monomials();
        if monomials.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, pair, c)) in monomials.into_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "q^{k} * {pair} (mult {c})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CharacterSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharacterSeries(m={}, n={}, bound={:?}) {{", self.m, self.n, self.bound)?;
        for (pair, c) in &self.terms {
            write!(f, " {pair}: {c};")?;
        }
        write!(f, " }}")
    }
}

/// Which character [`char_of`] should produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharKind {
    S,
    D(usize),
    Q(usize),
    /// The ideal `I_{(d^a)}` generated by an `a x d` rectangle.
    Irect { a: usize, d: i64 },
    Ix(Partition),
}

/// `λ(p) = (μ_1..μ_p, (p-n)^{m-n}, μ_{p+1}+(m-n), .., μ_n+(m-n))`.
pub fn lambda_p(m: usize, n: usize, p: usize, mu: &Weight) -> Weight {
    let e = mu.entries();
    let gap = (m - n) as i64;
    let mut out = e[..p].to_vec();
    out.extend(std::iter::repeat_n(p as i64 - n as i64, m - n));
    out.extend(e[p..].iter().map(|x| x + gap));
    Weight::new(out)
}

/// The range condition `μ_p >= p - n`, `μ_{p+1} <= p - m` on dominant `μ`.
fn dp_mu_ok(m: usize, n: usize, p: usize, mu: &Weight) -> bool {
    let (p_, n_, m_) = (p as i64, n as i64, m as i64);
    !(p >= 1 && mu.get(p) < p_ - n_) && !(p < n && mu.get(p + 1) > p_ - m_)
}

/// Whether `S_λ C^m ⊗ S_μ C^n` is one of the summands of `D_p`.
pub fn in_dp_range(m: usize, n: usize, p: usize, pair: &WeightPair) -> bool {
    dp_mu_ok(m, n, p, pair.mu()) && pair.lambda() == &lambda_p(m, n, p, pair.mu())
}

/// Dominant weights of length `len` with entries in `[lo, hi]`, in
/// lexicographic order.
pub fn dominant_weights(len: usize, lo: i64, hi: i64) -> Vec<Weight> {
    fn rec(len: usize, lo: i64, hi: i64, prefix: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if prefix.len() == len {
            out.push(Weight::new(prefix.clone()));
            return;
        }
        for x in lo..=hi {
            prefix.push(x);
            rec(len, lo, x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, lo, hi, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn diagonal_pair(m: usize, n: usize, x: &Partition) -> Result<WeightPair> {
    WeightPair::new(Weight::from_partition(x, m)?, Weight::from_partition(x, n)?)
}

/// The character of `S`, `D_p`, `Q_p` or an ideal, restricted to the window
/// `|entry| <= bound`. Every one of these is infinite, so a bound is required.
pub fn char_of(kind: &CharKind, m: usize, n: usize, bound: Option<i64>) -> Result<CharacterSeries> {
    if n == 0 || m < n {
        return Err(range(format!("need m >= n >= 1, got m = {m}, n = {n}")));
    }
    let b = bound.ok_or_else(|| range("infinite characters need a truncation bound"))?;
    if b < 0 {
        return Err(range(format!("bound must be nonnegative, got {b}")));
    }
    let mut out = CharacterSeries::truncated(m, n, b);
    let one = LaurentPoly::one();
    match kind {
        CharKind::S => {
            for x in partitions_in_rectangle(n, b as usize) {
                out.add_term(diagonal_pair(m, n, &x)?, one.clone());
            }
        }
        CharKind::D(p) => {
            let p = *p;
            if p > n {
                return Err(range(format!("p = {p} exceeds n = {n}")));
            }
            for mu in dominant_weights(n, -b, b) {
                if dp_mu_ok(m, n, p, &mu) {
                    out.add_term(WeightPair::new(lambda_p(m, n, p, &mu), mu)?, one.clone());
                }
            }
        }
        CharKind::Q(p) => {
            let p = *p;
            if m != n {
                return Err(Error::NotSquare { m, n });
            }
            if p > n {
                return Err(range(format!("p = {p} exceeds n = {n}")));
            }
            for lambda in dominant_weights(n, -b, b) {
                if p == n || lambda.get(p + 1) <= p as i64 - n as i64 {
                    out.add_term(WeightPair::new(lambda.clone(), lambda)?, one.clone());
                }
            }
        }
        CharKind::Irect { a, d } => {
            if *a > n || *d < 0 {
                return Err(range(format!("rectangle {a} x {d} does not fit")));
            }
            return char_of(&CharKind::Ix(Partition::rectangle(*a, *d)), m, n, bound);
        }
        CharKind::Ix(x) => {
            if x.len() > n {
                return Err(range(format!("partition {x} has more than n = {n} parts")));
            }
            for y in partitions_in_rectangle(n, b as usize) {
                if y.contains(x) {
                    out.add_term(diagonal_pair(m, n, &y)?, one.clone());
                }
            }
        }
    }
    Ok(out)
}

fn check_axd(m: usize, n: usize, a: usize, d: i64) -> Result<()> {
    if n == 0 || m < n {
        return Err(range(format!("need m >= n >= 1, got m = {m}, n = {n}")));
    }
    if a == 0 || a > n || d < 1 {
        return Err(range(format!("need 1 <= a <= n and d >= 1, got a = {a}, d = {d}")));
    }
    Ok(())
}

/// `h_{a x d}(q)`: the pairs `(λ(a,d;α,β), λ(a,d;β',α'))` weighted by
/// `q^{|α|+|β|}`, with `α` in a `min(a,d) x (n-a)` box and `β` in an
/// `(m-a) x min(a,d)` box.
pub fn h_axd(m: usize, n: usize, a: usize, d: i64) -> Result<CharacterSeries> {
    check_axd(m, n, a, d)?;
    let k = (a as i64).min(d) as usize;
    let mut out = CharacterSeries::exact(m, n);
    for alpha in partitions_in_rectangle(k, n - a) {
        let alpha_c = conjugate(&alpha);
        for beta in partitions_in_rectangle(m - a, k) {
            let beta_c = conjugate(&beta);
            let first = Weight::new(alpha.padded(a).iter().map(|x| x + d).collect())
                .concat(&Weight::new(beta.padded(m - a)));
            let second = Weight::new(beta_c.padded(a).iter().map(|x| x + d).collect())
                .concat(&Weight::new(alpha_c.padded(n - a)));
            let pair = WeightPair::new(first, second)?;
            out.add_term(pair, LaurentPoly::q_pow(alpha.size() + beta.size()));
        }
    }
    Ok(out)
}

/// The equivariant Betti series of `I_{a x d}`:
/// `sum_{r=0}^{n-a} h_{(a+r) x (d+r)}(q) q^{r^2+2r} {r+min(a,d)-1 choose r}_{q^2}`.
pub fn syzygy_gf(m: usize, n: usize, a: usize, d: i64) -> Result<CharacterSeries> {
    check_axd(m, n, a, d)?;
    let k = (a as i64).min(d);
    let mut out = CharacterSeries::exact(m, n);
    for r in 0..=(n - a) {
        let ri = r as i64;
        let factor = qbinom_sq(ri + k - 1, ri).shift(ri * ri + 2 * ri);
        out = out.add(&h_axd(m, n, a + r, d + ri)?.scale(&factor))?;
    }
    Ok(out)
}

/// `<A, B> = sum a_{λ,μ}(q) b_{λ,μ}(q)`, defined when at least one side is
/// exact and its support lies inside the other side's window.
pub fn pairing_gl(a: &CharacterSeries, b: &CharacterSeries) -> Result<LaurentPoly> {
    if (a.m, a.n) != (b.m, b.n) {
        return Err(Error::Dimension(format!(
            "characters for {}x{} and {}x{} matrices",
            a.m, a.n, b.m, b.n
        )));
    }
    let (exact, other) = match (a.bound, b.bound) {
        (Some(_), Some(_)) => {
            return Err(Error::PairingUndefined("both characters are truncated".into()))
        }
        (None, _) => (a, b),
        (Some(_), None) => (b, a),
    };
    if let Some(bound) = other.bound {
        if let Some(pair) = exact.terms.keys().find(|p| p.max_abs() > bound) {
            return Err(Error::PairingUndefined(format!("{pair} lies outside the window |entry| <= {bound}")));
        }
    }
    let mut acc = LaurentPoly::zero();
    for (pair, c) in &exact.terms {
        if let Some(d) = other.terms.get(pair) {
            acc = &acc + &(c * d);
        }
    }
    Ok(acc)
}

/// `<V ⊗ D_p, h_{a x d}(q)>` with `V = det(C^m ⊗ C^n)`, by testing each term
/// of `h_{a x d}` for membership in the range of `D_p` after untwisting by `V`.
pub fn witness_pairing(m: usize, n: usize, p: usize, a: usize, d: i64) -> Result<LaurentPoly> {
    check_axd(m, n, a, d)?;
    if p > n {
        return Err(range(format!("p = {p} exceeds n = {n}")));
    }
    if d < (m + n) as i64 {
        return Err(range(format!("need d >= m + n = {}, got d = {d}", m + n)));
    }
    let mut acc = LaurentPoly::zero();
    for (pair, c) in h_axd(m, n, a, d)?.terms() {
        if in_dp_range(m, n, p, &pair.shifted(-(n as i64), -(m as i64))) {
            acc = &acc + c;
        }
    }
    Ok(acc)
}

/// A solution of the condition system for `Ext^{n^2-1}(J_{ν,l}, S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1mWitness {
    pub s: usize,
    pub t: Vec<usize>,
    pub alpha: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum H1mOutcome {
    Vanishes,
    NonVanishing(H1mWitness),
}

impl H1mOutcome {
    pub fn vanishes(&self) -> bool {
        matches!(self, H1mOutcome::Vanishes)
    }
}

/// Nondecreasing sequences of length `len` with entries in `[lo, hi]`.
fn nondecreasing(len: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in lo..=hi {
        for mut rest in nondecreasing(len - 1, first, hi) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Finds a dominant `α` with `lower[i] <= α_i <= upper[i]`, if one exists.
fn dominant_between(lower: &[Option<i64>], upper: &[Option<i64>]) -> Option<Vec<i64>> {
    let n = lower.len();
    // Dominance pushes lower bounds left and upper bounds right.
    let mut lo = lower.to_vec();
    for i in (0..n.saturating_sub(1)).rev() {
        lo[i] = lo[i].max(lo[i + 1]);
    }
    let mut hi = upper.to_vec();
    for i in 1..n {
        hi[i] = match (hi[i], hi[i - 1]) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
    if (0..n).any(|i| matches!((lo[i], hi[i]), (Some(l), Some(h)) if l > h)) {
        return None;
    }
    let top = lo.iter().chain(hi.iter()).flatten().copied().max().unwrap_or(0);
    Some((0..n).map(|i| lo[i].or(hi[i]).unwrap_or(top)).collect())
}

/// Decides `H^1_m(J_{ν,l}) = 0` by exhaustive search over `s`, `t_1..t_{n-l}`
/// and dominant `α` in the condition system coming from local duality.
///
/// `ν` is first normalized to a partition by subtracting `ν_n` from every
/// entry; the answer does not depend on this twist.
pub fn j_h1m_vanishes(n: usize, nu: &Weight, l: usize) -> Result<H1mOutcome> {
    if nu.len() != n || !nu.is_dominant() {
        return Err(range(format!("ν = {nu} must be a dominant weight of length {n}")));
    }
    if l > n {
        return Err(range(format!("need 0 <= l <= n, got l = {l}")));
    }
    if n == 0 {
        return Ok(H1mOutcome::Vanishes);
    }
    if l >= 2 && (1..l).any(|i| nu.get(i) != nu.get(i + 1)) {
        return Err(range(format!("ν = {nu} must have ν_1 = .. = ν_{l}")));
    }
    let nu = nu.shifted(-nu.get(n));
    let (n_, l_) = (n as i64, l as i64);
    for s in 0..=l {
        for t in nondecreasing(n - l, s, l) {
            if l_ * l_ + 2 * t.iter().sum::<usize>() as i64 != 1 {
                continue;
            }
            let mut lower: Vec<Option<i64>> = vec![None; n];
            let mut upper: Vec<Option<i64>> = vec![None; n];
            let mut tighten = |i: usize, lo: Option<i64>, hi: Option<i64>| {
                lower[i - 1] = lower[i - 1].max(lo);
                upper[i - 1] = match (upper[i - 1], hi) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                };
            };
            if l >= 1 {
                tighten(n, Some(l_ - nu.get(l) - n_), None);
            }
            for (j, &tj) in t.iter().enumerate() {
                let j = j + 1;
                let v = tj as i64 - nu.get(n + 1 - j) - n_;
                tighten(tj + j, Some(v), Some(v));
            }
            if s >= 1 {
                tighten(s, Some(s as i64 - n_), None);
            }
            if s < n {
                tighten(s + 1, None, Some(s as i64 - n_));
            }
            if let Some(alpha) = dominant_between(&lower, &upper) {
                return Ok(H1mOutcome::NonVanishing(H1mWitness { s, t, alpha: Weight::new(alpha) }));
            }
        }
    }
    Ok(H1mOutcome::Vanishes)
}

/// The closed criterion: non-vanishing exactly when `l = 1` and `ν_1 > ν_2`,
/// reading `ν_2 = -∞` when `n = 1`.
pub fn j_h1m_closed(n: usize, nu: &Weight, l: usize) -> bool {
    !(l == 1 && (n == 1 || nu.get(1) > nu.get(2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{binom, qbinom};
    use proptest::prelude::*;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    fn pair(l: &[i64], m: &[i64]) -> WeightPair {
        WeightPair::new(w(l), w(m)).unwrap()
    }

    #[test]
    fn char_of_s_and_ideals() {
        let s = char_of(&CharKind::S, 3, 2, Some(2)).unwrap();
        assert_eq!(s.coeff(&pair(&[0, 0, 0], &[0, 0])), LaurentPoly::one());
        assert_eq!(s.len(), 6);
        assert!(!s.is_exact());
        let i = char_of(&CharKind::Irect { a: 1, d: 1 }, 3, 2, Some(2)).unwrap();
        assert_eq!(i.len(), 5);
        assert!(char_of(&CharKind::S, 3, 2, None).is_err());
        assert!(matches!(char_of(&CharKind::Q(1), 3, 2, Some(1)), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn char_of_d0_contains_witness_dual() {
        for (m, n) in [(2, 2), (3, 2), (4, 3)] {
            let d0 = char_of(&CharKind::D(0), m, n, Some(m as i64)).unwrap();
            let target = pair(&vec![-(n as i64); m], &vec![-(m as i64); n]);
            assert_eq!(d0.coeff(&target), LaurentPoly::one(), "m={m} n={n}");
        }
    }

    #[test]
    fn d_characters_are_disjoint_and_consistent() {
        for (m, n) in [(2, 2), (3, 2), (4, 2), (3, 3)] {
            let chars: Vec<CharacterSeries> =
                (0..=n).map(|p| char_of(&CharKind::D(p), m, n, Some(4)).unwrap()).collect();
            for (p, c) in chars.iter().enumerate() {
                assert!(!c.is_empty());
                for (wp, mult) in c.terms() {
                    assert_eq!(mult, &LaurentPoly::one());
                    assert_eq!(wp.lambda(), &lambda_p(m, n, p, wp.mu()));
                    for (p2, c2) in chars.iter().enumerate() {
                        if p2 != p {
                            assert!(!c2.terms().contains_key(wp));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn d_n_is_s_and_q_sums_d() {
        let s = char_of(&CharKind::S, 3, 2, Some(3)).unwrap();
        assert_eq!(char_of(&CharKind::D(2), 3, 2, Some(3)).unwrap(), s);
        // As characters, Q_p = D_0 + .. + D_p for square matrices.
        for p in 0..=3 {
            let q = char_of(&CharKind::Q(p), 3, 3, Some(3)).unwrap();
            let mut sum = CharacterSeries::truncated(3, 3, 3);
            for s in 0..=p {
                sum = sum.add(&char_of(&CharKind::D(s), 3, 3, Some(3)).unwrap()).unwrap();
            }
            assert_eq!(q, sum, "p={p}");
        }
    }

    #[test]
    fn h_axd_examples() {
        let h = h_axd(3, 3, 3, 2).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h.coeff(&pair(&[2, 2, 2], &[2, 2, 2])), LaurentPoly::one());

        let h = h_axd(1, 1, 1, 1).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h.coeff(&pair(&[1], &[1])), LaurentPoly::one());

        for d in 1..=4 {
            let h = h_axd(2, 2, 1, d).unwrap();
            assert_eq!(h.len(), 4);
            assert_eq!(h.coeff(&pair(&[d, 0], &[d, 0])), LaurentPoly::one());
            assert_eq!(h.coeff(&pair(&[d + 1, 0], &[d, 1])), LaurentPoly::q_pow(1));
            assert_eq!(h.coeff(&pair(&[d, 1], &[d + 1, 0])), LaurentPoly::q_pow(1));
            assert_eq!(h.coeff(&pair(&[d + 1, 1], &[d + 1, 1])), LaurentPoly::q_pow(2));
        }
    }

    #[test]
    fn h_axd_term_count() {
        for m in 1..=5 {
            for n in 1..=m {
                for a in 1..=n {
                    for d in 1..=4i64 {
                        let k = (a as i64).min(d);
                        let expected = binom(k + (n - a) as i64, (n - a) as i64)
                            * binom((m - a) as i64 + k, (m - a) as i64);
                        assert_eq!(BigInt::from(h_axd(m, n, a, d).unwrap().len()), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn syzygy_properties() {
        for (m, n) in [(2, 2), (3, 2), (4, 3)] {
            for a in 1..=n {
                for d in 1..=3i64 {
                    let syz = syzygy_gf(m, n, a, d).unwrap();
                    let gen = pair(
                        Weight::from_partition(&Partition::rectangle(a, d), m).unwrap().entries(),
                        Weight::from_partition(&Partition::rectangle(a, d), n).unwrap().entries(),
                    );
                    let degree_zero: Vec<&WeightPair> =
                        syz.monomials().into_iter().filter(|(k, _, _)| *k == 0).map(|(_, p, _)| p).collect();
                    assert_eq!(degree_zero, vec![&gen]);
                    assert!(syz.terms().values().all(LaurentPoly::has_nonnegative_coeffs));
                    if a == n {
                        assert_eq!(syz, h_axd(m, n, n, d).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_basics() {
        let h = h_axd(2, 2, 1, 1).unwrap();
        assert!(pairing_gl(&h, &CharacterSeries::exact(2, 2)).unwrap().is_zero());
        let mut single = CharacterSeries::exact(2, 2);
        single.add_term(pair(&[1, 0], &[1, 0]), LaurentPoly::one());
        assert_eq!(pairing_gl(&single, &single).unwrap(), LaurentPoly::one());

        let s = char_of(&CharKind::S, 2, 2, Some(2)).unwrap();
        assert!(matches!(pairing_gl(&s, &s), Err(Error::PairingUndefined(_))));
        let far = h_axd(2, 2, 1, 5).unwrap();
        assert!(matches!(pairing_gl(&s, &far), Err(Error::PairingUndefined(_))));
        // Only the two diagonal terms of h_{1x1} occur in S.
        assert_eq!(pairing_gl(&s, &h).unwrap(), LaurentPoly::from_terms([(0, 1), (2, 1)]));
    }

    #[test]
    fn witness_examples() {
        assert_eq!(witness_pairing(3, 2, 1, 1, 6).unwrap(), LaurentPoly::from_terms([(1, 1), (3, 1)]));
        assert!(witness_pairing(3, 2, 1, 2, 6).unwrap().is_zero());
        assert!(witness_pairing(3, 2, 0, 1, 6).unwrap().is_zero());
        assert!(witness_pairing(3, 2, 1, 1, 4).is_err());
    }

    #[test]
    fn witness_matches_pairing_with_truncated_dp() {
        for (m, n) in [(2, 2), (3, 2), (3, 3)] {
            let d = (m + n) as i64;
            for a in 1..=n {
                let h = h_axd(m, n, a, d).unwrap().shifted(-(n as i64), -(m as i64)).unwrap();
                for p in 0..=n {
                    let dp = char_of(&CharKind::D(p), m, n, Some(d + m as i64)).unwrap();
                    assert_eq!(pairing_gl(&dp, &h).unwrap(), witness_pairing(m, n, p, a, d).unwrap());
                }
            }
        }
    }

    #[test]
    fn witness_pairing_small() {
        for m in 1..=3 {
            for n in 1..=m {
                for p in 0..=n {
                    for a in 1..=n {
                        let expected = if a == p {
                            qbinom_sq(n as i64, p as i64).shift((p * (m - n)) as i64)
                        } else {
                            LaurentPoly::zero()
                        };
                        assert_eq!(witness_pairing(m, n, p, a, (m + n) as i64).unwrap(), expected);
                    }
                }
            }
        }
        assert_eq!(qbinom(2, 1), LaurentPoly::from_terms([(0, 1), (1, 1)]));
    }

    #[test]
    fn h1m_examples() {
        for l in [0, 2, 3] {
            assert!(j_h1m_vanishes(3, &w(&[1, 1, 1]), l).unwrap().vanishes());
        }
        assert!(j_h1m_vanishes(3, &w(&[2, 2, 0]), 1).unwrap().vanishes());
        match j_h1m_vanishes(3, &w(&[2, 1, 0]), 1).unwrap() {
            H1mOutcome::NonVanishing(wit) => {
                assert_eq!((wit.s, wit.t.clone()), (0, vec![0, 0]));
                // α_j = -ν_{n+1-j} - n for j < n, α_n = 1 - ν_1 - n.
                assert_eq!(wit.alpha, w(&[-3, -4, -4]));
            }
            H1mOutcome::Vanishes => panic!("expected a witness"),
        }
        // The twist by ν_n does not matter.
        assert_eq!(
            j_h1m_vanishes(3, &w(&[5, 4, 3]), 1).unwrap(),
            j_h1m_vanishes(3, &w(&[2, 1, 0]), 1).unwrap()
        );
        assert!(!j_h1m_vanishes(1, &w(&[-2]), 1).unwrap().vanishes());
        assert!(j_h1m_vanishes(3, &w(&[2, 1, 0]), 2).is_err());
    }

    #[test]
    fn dominant_between_basics() {
        assert_eq!(dominant_between(&[None, Some(0)], &[None, None]), Some(vec![0, 0]));
        assert_eq!(dominant_between(&[Some(1), None], &[None, Some(-1)]), Some(vec![1, -1]));
        assert_eq!(dominant_between(&[None, Some(2)], &[Some(1), None]), None);
    }

    proptest! {
        #[test]
        fn h1m_search_matches_closed_form(
            n in 1usize..=5,
            raw in proptest::collection::vec(-3i64..=3, 5),
            l in 0usize..=5,
        ) {
            let mut v = raw[..n].to_vec();
            v.sort_unstable_by(|a, b| b.cmp(a));
            let l = l.min(n);
            for i in 1..l {
                v[i] = v[0];
            }
            let nu = Weight::new(v);
            let out = j_h1m_vanishes(n, &nu, l).unwrap();
            prop_assert_eq!(out.vanishes(), j_h1m_closed(n, &nu, l));
        }

        #[test]
        fn h_axd_has_monomial_weights(m in 1usize..=4, dn in 0usize..=3, a in 1usize..=4, d in 1i64..=4) {
            let n = m.saturating_sub(dn).max(1);
            let a = a.min(n);
            let h = h_axd(m, n, a, d).unwrap();
            for (p, c) in h.terms() {
                prop_assert_eq!(c.len(), 1);
                let deg = c.min_exp().unwrap();
                prop_assert_eq!(deg, p.lambda().size() - (a as i64) * d);
                prop_assert_eq!(p.lambda().size(), p.mu().size());
            }
        }
    }
}
