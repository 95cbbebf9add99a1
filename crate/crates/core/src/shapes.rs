//! Partitions, dominant weights, Gaussian binomial coefficients and the
//! Borel–Weil–Bott weight calculus for type A.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{range, Error, Result};
use crate::exactpoly::LaurentPoly;

/// A partition: weakly decreasing nonnegative parts, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition, trimming trailing zeros.
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&x| x < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(range(format!("{parts:?} is not a partition")));
        }
        Ok(Self { parts })
    }

    /// `(b^a)`: the part `b` repeated `a` times.
    pub fn rectangle(a: usize, b: i64) -> Self {
        Self::new(vec![b; a]).expect("rectangles are partitions")
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (1-based), zero past the end.
    pub fn part(&self, i: usize) -> i64 {
        if i == 0 {
            return i64::MAX;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Parts padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Vec<i64> {
        let mut v = self.parts.clone();
        v.resize(len.max(v.len()), 0);
        v
    }

    pub fn conjugate(&self) -> Self {
        conjugate(self)
    }

    /// Componentwise containment `self >= other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| s >= o)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, v: &[i64]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// `x'_i = #{j : x_j >= i}`.
pub fn conjugate(x: &Partition) -> Partition {
    let width = x.part(1).max(0) as usize;
    let parts = (1..=width as i64)
        .map(|i| x.parts.iter().filter(|&&p| p >= i).count() as i64)
        .collect();
    Partition { parts }
}

/// All partitions with at most `rows` parts, each at most `cols`, in
/// ascending lexicographic order of their part vectors.
pub fn partitions_in_rectangle(rows: usize, cols: usize) -> Vec<Partition> {
    fn rec(rows: usize, max_part: i64, prefix: &mut Vec<i64>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: prefix.clone() });
        if prefix.len() == rows {
            return;
        }
        for x in 1..=max_part {
            prefix.push(x);
            rec(rows, x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols as i64, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn qbinom_cache() -> &'static RwLock<HashMap<(i64, i64), LaurentPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<(i64, i64), LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The Gaussian binomial `{a choose b}_q`, by the Pascal recurrence
/// `{a choose b} = q^b {a-1 choose b} + {a-1 choose b-1}` with a shared memo.
///
/// Returns the zero polynomial unless `a >= b >= 0`.
pub fn qbinom(a: i64, b: i64) -> LaurentPoly {
    if b < 0 || a < 0 || b > a {
        return LaurentPoly::zero();
    }
    if b == 0 || b == a {
        return LaurentPoly::one();
    }
    if let Some(p) = qbinom_cache().read().expect("qbinom cache poisoned").get(&(a, b)) {
        return p.clone();
    }
    let value = &qbinom(a - 1, b).shift(b) + &qbinom(a - 1, b - 1);
    qbinom_cache()
        .write()
        .expect("qbinom cache poisoned")
        .insert((a, b), value.clone());
    value
}

/// `{a choose b}_{q^2}`.
pub fn qbinom_sq(a: i64, b: i64) -> LaurentPoly {
    qbinom(a, b).subs_pow(2)
}

/// Independent route to `{a choose b}_q`: the size generating function of
/// partitions inside the `(a-b) x b` rectangle.
pub fn qbinom_oracle(a: usize, b: usize) -> LaurentPoly {
    if b > a {
        return LaurentPoly::zero();
    }
    let mut out = LaurentPoly::zero();
    for x in partitions_in_rectangle(a - b, b) {
        out.add_term(x.size(), BigInt::one());
    }
    out
}

/// Integer binomial coefficient with the generalized convention for a
/// negative upper index: `binom(a, 0) = 1` for every `a`, `binom(a, b) = 0`
/// for `b < 0`, and `binom(a, b) = (-1)^b binom(b - a - 1, b)` for `a < 0`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if a < 0 {
        let v = binom(b - a - 1, b);
        return if b % 2 == 0 { v } else { -v };
    }
    if b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// A weight in `Z^n`; dominant when weakly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight {
    entries: Vec<i64>,
}

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Self { entries }
    }

    /// A weight that must be dominant.
    pub fn dominant(entries: Vec<i64>) -> Result<Self> {
        let w = Self { entries };
        if !w.is_dominant() {
            return Err(range(format!("weight {w} is not dominant")));
        }
        Ok(w)
    }

    /// `(b^a)` as a weight of length `a`.
    pub fn constant(a: usize, b: i64) -> Self {
        Self { entries: vec![b; a] }
    }

    pub fn from_partition(x: &Partition, len: usize) -> Result<Self> {
        if x.len() > len {
            return Err(range(format!("partition {x} has more than {len} parts")));
        }
        Ok(Self { entries: x.padded(len) })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The i-th entry (1-based).
    pub fn get(&self, i: usize) -> i64 {
        self.entries[i - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn size(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn concat(&self, other: &Weight) -> Weight {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Weight { entries }
    }

    /// Adds `c` to every entry.
    pub fn shifted(&self, c: i64) -> Weight {
        Weight { entries: self.entries.iter().map(|x| x + c).collect() }
    }

    pub fn max_abs(&self) -> i64 {
        self.entries.iter().map(|x| x.abs()).max().unwrap_or(0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{self}")
    }
}

/// `delta^(m) = (m-1, m-2, ..., 0)`.
pub fn delta(m: usize) -> Vec<i64> {
    (0..m as i64).rev().collect()
}

/// Outcome of Bott's algorithm on a weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BottResult {
    Vanishes,
    NonVanishing { degree: usize, weight: Weight },
}

impl BottResult {
    pub fn degree(&self) -> Option<usize> {
        match self {
            BottResult::Vanishes => None,
            BottResult::NonVanishing { degree, .. } => Some(*degree),
        }
    }
}

impl fmt::Display for BottResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BottResult::Vanishes => write!(f, "vanishes"),
            BottResult::NonVanishing { degree, weight } => {
                write!(f, "degree {degree}, weight {weight}")
            }
        }
    }
}

/// Shift by `delta`, test for repeats, count inversions, sort, shift back.
pub fn bott_tilde(gamma: &Weight) -> BottResult {
    let m = gamma.len();
    let shifted: Vec<i64> = gamma.entries.iter().zip(delta(m)).map(|(g, d)| g + d).collect();
    let mut sorted = shifted.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return BottResult::Vanishes;
    }
    let mut inversions = 0;
    for i in 0..m {
        for j in i + 1..m {
            if shifted[i] < shifted[j] {
                inversions += 1;
            }
        }
    }
    let weight = Weight {
        entries: sorted.iter().zip(delta(m)).map(|(s, d)| s - d).collect(),
    };
    BottResult::NonVanishing { degree: inversions, weight }
}

/// Which statement of Bott's theorem on `Flag([p, n]; V)` to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BottPart {
    /// Higher direct images along the map to the Grassmannian.
    Fiberwise,
    /// Global sections cohomology of the flag variety.
    Global,
}

fn check_split(lambda: &Weight, mu: &Weight, n: usize) -> Result<()> {
    if lambda.len() + mu.len() != n {
        return Err(Error::Dimension(format!(
            "len(lambda) + len(mu) = {} + {} != n = {n}",
            lambda.len(),
            mu.len()
        )));
    }
    if !lambda.is_dominant() {
        return Err(range(format!("lambda = {lambda} must be dominant")));
    }
    Ok(())
}

/// Cohomology of `S_lambda Q_p ⊗ L^mu` on `Flag([p, n]; V)`.
///
/// `Fiberwise` returns the degree and the weight `mu~` of the relative
/// sub-bundle factor; `Global` returns the degree and `(lambda|mu)~`.
pub fn bott_flag_cohomology(
    lambda: &Weight,
    mu: &Weight,
    n: usize,
    part: BottPart,
) -> Result<BottResult> {
    check_split(lambda, mu, n)?;
    Ok(match part {
        BottPart::Fiberwise => bott_tilde(mu),
        BottPart::Global => bott_tilde(&lambda.concat(mu)),
    })
}

/// Pushforward along the projective bundle `Flag([p, n]) -> Flag([p+1, n])`
/// when `lambda_p >= mu_1`: `(lambda | mu_1)` and `(mu_2, ..., mu_{n-p})`.
pub fn bott_pushforward_c(lambda: &Weight, mu: &Weight) -> Result<(Weight, Weight)> {
    if !lambda.is_dominant() {
        return Err(range(format!("lambda = {lambda} must be dominant")));
    }
    let Some(&mu_first) = mu.entries.first() else {
        return Err(range("mu must be nonempty"));
    };
    if let Some(&lambda_last) = lambda.entries.last() {
        if lambda_last < mu_first {
            return Err(Error::PushforwardPrecondition { lambda_last, mu_first });
        }
    }
    let mut plus = lambda.entries.clone();
    plus.push(mu_first);
    Ok((Weight { entries: plus }, Weight { entries: mu.entries[1..].to_vec() }))
}

/// Cohomology of `S_nu Q F ⊗ L^mu(F) ⊗ S_nu Q G ⊗ L^mu(G)` on the product of
/// two copies of `Flag([p, n])`: the Künneth square of the global Bott
/// answer, so the degree doubles.
pub fn product_space_cohomology(nu: &Weight, mu: &Weight, n: usize) -> Result<BottResult> {
    check_split(nu, mu, n)?;
    Ok(match bott_tilde(&nu.concat(mu)) {
        BottResult::Vanishes => BottResult::Vanishes,
        BottResult::NonVanishing { degree, weight } => {
            BottResult::NonVanishing { degree: 2 * degree, weight }
        }
    })
}
