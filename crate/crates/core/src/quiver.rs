//! Representations of the doubled type-A quiver on vertices `0..=n`, with
//! arrows `α_i: (i-1) -> (i)` and `β_i: (i) -> (i-1)` and every 2-cycle
//! set to zero. `D^(p)` and `Q^(p)` model the D-modules `D_p` and `Q_p`
//! of square matrices.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{range, Error, Result};
use crate::linalg::Mat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepKind {
    D,
    Q,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Arrow {
    Alpha(usize),
    Beta(usize),
}

impl Arrow {
    fn source(self) -> usize {
        match self {
            Arrow::Alpha(i) => i - 1,
            Arrow::Beta(i) => i,
        }
    }

    fn target(self) -> usize {
        match self {
            Arrow::Alpha(i) => i,
            Arrow::Beta(i) => i - 1,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct QuiverRep {
    n: usize,
    dims: Vec<usize>,
    alpha: Vec<Mat>,
    beta: Vec<Mat>,
}

fn int_matrix(rows: usize, cols: usize, entries: &[Vec<i64>], what: &str) -> Result<Mat> {
    if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
        return Err(Error::Dimension(format!("{what} must be {rows}x{cols}")));
    }
    Ok(Mat::from_ints(rows, cols, &entries.concat()))
}

impl QuiverRep {
    /// The zero representation on vertices `0..=n`.
    pub fn zero(n: usize) -> Self {
        Self::with_dims(n, vec![0; n + 1])
    }

    fn with_dims(n: usize, dims: Vec<usize>) -> Self {
        let alpha = (1..=n).map(|i| Mat::zeros(dims[i], dims[i - 1])).collect();
        let beta = (1..=n).map(|i| Mat::zeros(dims[i - 1], dims[i])).collect();
        Self { n, dims, alpha, beta }
    }

    /// A representation from integer matrices given as row lists:
    /// `alpha[i-1]` is `α_i` (`dims[i] x dims[i-1]`), `beta[i-1]` is `β_i`.
    /// Relations are not checked.
    pub fn from_int_maps(dims: Vec<usize>, alpha: &[Vec<Vec<i64>>], beta: &[Vec<Vec<i64>>]) -> Result<Self> {
        let n = dims.len().checked_sub(1).ok_or_else(|| range("need at least one vertex"))?;
        if alpha.len() != n || beta.len() != n {
            return Err(Error::Dimension(format!("need {n} alpha and {n} beta maps")));
        }
        let mut rep = Self::with_dims(n, dims);
        for i in 1..=n {
            rep.alpha[i - 1] = int_matrix(rep.dims[i], rep.dims[i - 1], &alpha[i - 1], &format!("alpha_{i}"))?;
            rep.beta[i - 1] = int_matrix(rep.dims[i - 1], rep.dims[i], &beta[i - 1], &format!("beta_{i}"))?;
        }
        Ok(rep)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    fn arrows(&self) -> Vec<Arrow> {
        (1..=self.n).flat_map(|i| [Arrow::Alpha(i), Arrow::Beta(i)]).collect()
    }

    fn map(&self, a: Arrow) -> &Mat {
        match a {
            Arrow::Alpha(i) => &self.alpha[i - 1],
            Arrow::Beta(i) => &self.beta[i - 1],
        }
    }

    fn map_mut(&mut self, a: Arrow) -> &mut Mat {
        match a {
            Arrow::Alpha(i) => &mut self.alpha[i - 1],
            Arrow::Beta(i) => &mut self.beta[i - 1],
        }
    }

    /// Whether every `β_i` vanishes.
    pub fn beta_is_zero(&self) -> bool {
        self.beta.iter().all(Mat::is_zero)
    }

    /// `g_v^{-1}`-conjugated maps for invertible integer matrices `g_v`, one
    /// per vertex: the same representation in another basis.
    pub fn change_basis(&self, g: &[Vec<Vec<i64>>]) -> Result<Self> {
        if g.len() != self.n + 1 {
            return Err(Error::Dimension(format!("need {} base changes", self.n + 1)));
        }
        let mut gs = Vec::new();
        let mut inv = Vec::new();
        for (v, rows) in g.iter().enumerate() {
            let m = int_matrix(self.dims[v], self.dims[v], rows, &format!("g_{v}"))?;
            inv.push(m.inverse().ok_or_else(|| range(format!("g_{v} is not invertible")))?);
            gs.push(m);
        }
        let mut out = self.clone();
        for a in self.arrows() {
            *out.map_mut(a) = gs[a.target()].mul(self.map(a)).mul(&inv[a.source()]);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let mat = |m: &Mat| -> Value {
            (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>()
                .into()
        };
        json!({
            "n": self.n,
            "dims": self.dims,
            "alpha": self.alpha.iter().map(mat).collect::<Vec<_>>(),
            "beta": self.beta.iter().map(mat).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for QuiverRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dims: {:?}", self.dims)?;
        for i in 1..=self.n {
            for (name, m) in [("alpha", &self.alpha[i - 1]), ("beta", &self.beta[i - 1])] {
                if !m.is_zero() {
                    write!(f, "\n{name}_{i}: {m}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QuiverRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuiverRep(n={}) {self}", self.n)
    }
}

/// `D^(p)`: `C` at vertex `p`. `Q^(p)`: `C` at vertices `0..=p` joined by
/// identity `α` maps, with `β = 0`.
pub fn build_rep(kind: RepKind, p: usize, n: usize) -> Result<QuiverRep> {
    if p > n {
        return Err(range(format!("p = {p} exceeds n = {n}")));
    }
    let dims = (0..=n)
        .map(|v| match kind {
            RepKind::D => usize::from(v == p),
            RepKind::Q => usize::from(v <= p),
        })
        .collect();
    let mut rep = QuiverRep::with_dims(n, dims);
    if kind == RepKind::Q {
        for i in 1..=p {
            rep.alpha[i - 1] = Mat::identity(1);
        }
    }
    Ok(rep)
}

/// Whether `α_i β_i = 0` and `β_i α_i = 0` for every `i`.
pub fn check_relations(r: &QuiverRep) -> bool {
    (0..r.n).all(|k| r.alpha[k].mul(&r.beta[k]).is_zero() && r.beta[k].mul(&r.alpha[k]).is_zero())
}

pub fn direct_sum(a: &QuiverRep, b: &QuiverRep) -> Result<QuiverRep> {
    if a.n != b.n {
        return Err(Error::Dimension(format!("quivers of size {} and {}", a.n, b.n)));
    }
    let dims = a.dims.iter().zip(&b.dims).map(|(x, y)| x + y).collect();
    let mut out = QuiverRep::with_dims(a.n, dims);
    for arrow in a.arrows() {
        *out.map_mut(arrow) = a.map(arrow).block_diag(b.map(arrow));
    }
    Ok(out)
}

/// `⊕_s (Q^(s))^{mult[s]}` on vertices `0..=n`.
pub fn q_sum(mult: &[u64], n: usize) -> Result<QuiverRep> {
    if mult.len() != n + 1 {
        return Err(Error::Dimension(format!("need {} multiplicities", n + 1)));
    }
    let mut out = QuiverRep::zero(n);
    for (s, &k) in mult.iter().enumerate() {
        let q = build_rep(RepKind::Q, s, n)?;
        for _ in 0..k {
            out = direct_sum(&out, &q)?;
        }
    }
    Ok(out)
}

/// Nonzero `(vertex, multiplicity)` pairs of the socle: at vertex `i`, the
/// common kernel of the arrows leaving `i`.
pub fn simple_socle(r: &QuiverRep) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 0..=r.n {
        let mut stacked = Mat::zeros(0, r.dims[v]);
        for a in r.arrows() {
            if a.source() == v {
                stacked = stacked.vcat(r.map(a));
            }
        }
        let k = r.dims[v] - stacked.rank();
        if k > 0 {
            out.push((v, k));
        }
    }
    out
}

/// A subspace at each vertex, spanned by the given rational vectors.
pub type Subspaces = Vec<Vec<Vec<BigRational>>>;

/// Integer spanning vectors per vertex, as [`Subspaces`].
pub fn int_subspaces(spans: &[Vec<Vec<i64>>]) -> Subspaces {
    spans
        .iter()
        .map(|vs| {
            vs.iter()
                .map(|v| v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
                .collect()
        })
        .collect()
}

fn span_matrix(dim: usize, vectors: &[Vec<BigRational>]) -> Result<Mat> {
    let mut m = Mat::zeros(dim, vectors.len());
    for (j, v) in vectors.iter().enumerate() {
        if v.len() != dim {
            return Err(Error::Dimension(format!("vector of length {} in a space of dimension {dim}", v.len())));
        }
        for (i, x) in v.iter().enumerate() {
            m.set(i, j, x.clone());
        }
    }
    Ok(m)
}

/// `r / sub`, where `sub[v]` spans an arrow-stable subspace at vertex `v`.
pub fn quotient(r: &QuiverRep, sub: &Subspaces) -> Result<QuiverRep> {
    if sub.len() != r.n + 1 {
        return Err(Error::Dimension(format!("need subspaces at {} vertices", r.n + 1)));
    }
    let spans: Vec<Mat> = (0..=r.n).map(|v| span_matrix(r.dims[v], &sub[v])).collect::<Result<_>>()?;
    for a in r.arrows() {
        let (s, t) = (a.source(), a.target());
        let image = r.map(a).mul(&spans[s]);
        if spans[t].hcat(&image).rank() > spans[t].rank() {
            let name = match a {
                Arrow::Alpha(i) => format!("alpha_{i}"),
                Arrow::Beta(i) => format!("beta_{i}"),
            };
            return Err(Error::NotStable(format!("{name} leaves the subspace at vertex {t}")));
        }
    }
    // Complete each subspace to a basis by unit vectors; the quotient has
    // those unit vectors as its basis.
    let mut complements = Vec::new();
    let mut to_quotient = Vec::new();
    for (span, &dim) in spans.iter().zip(&r.dims) {
        let idx = span.complement_indices();
        let basis = span.hcat(&Mat::unit_columns(dim, &idx));
        let inv = basis.inverse().unwrap_or_else(|| {
            // Dependent spanning vectors: keep a maximal independent subset.
            let pivots = span.rref().1;
            span.columns(&pivots).hcat(&Mat::unit_columns(dim, &idx)).inverse().expect("completed basis")
        });
        let k = inv.rows() - idx.len();
        to_quotient.push(inv.rows_range(k, inv.rows()));
        complements.push(Mat::unit_columns(dim, &idx));
    }
    let dims = complements.iter().map(Mat::cols).collect();
    let mut out = QuiverRep::with_dims(r.n, dims);
    for a in r.arrows() {
        *out.map_mut(a) = to_quotient[a.target()].mul(r.map(a)).mul(&complements[a.source()]);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AddQDecomposition {
    /// Multiplicities of `Q^(0)..Q^(n)`.
    Sum(Vec<u64>),
    /// Not a direct sum of `Q`s; `vertex` is where the check fails.
    NotInAddQ { vertex: usize, reason: String },
}

/// Splits `r` into copies of `Q^(s)`, or reports why it cannot be done.
///
/// With `β = 0` the representation lives on the linear quiver `0 -> .. -> n`
/// and is a sum of interval modules. It lies in `add(Q)` exactly when each
/// vertex space is the image of vertex 0, and `Q^(p)` then occurs
/// `r(p) - r(p+1)` times, where `r(p)` is the rank of `α_p ∘ .. ∘ α_1`.
pub fn decompose_addq(r: &QuiverRep) -> AddQDecomposition {
    if let Some(i) = (1..=r.n).find(|&i| !r.beta[i - 1].is_zero()) {
        return AddQDecomposition::NotInAddQ { vertex: i, reason: format!("beta_{i} is nonzero") };
    }
    let mut ranks = Vec::with_capacity(r.n + 2);
    let mut path = Mat::identity(r.dims[0]);
    for v in 0..=r.n {
        if v > 0 {
            path = r.alpha[v - 1].mul(&path);
        }
        let rank = path.rank();
        if rank != r.dims[v] {
            return AddQDecomposition::NotInAddQ {
                vertex: v,
                reason: format!("vertex {v} has dimension {} but only {rank} comes from vertex 0", r.dims[v]),
            };
        }
        ranks.push(rank);
    }
    ranks.push(0);
    AddQDecomposition::Sum(ranks.windows(2).map(|w| (w[0] - w[1]) as u64).collect())
}

/// `dim Ext^1(V, W)`: extensions `0 -> W -> E -> V -> 0`.
///
/// An extension is given by blocks `X_a: V_s -> W_t`, one per arrow
/// `a: s -> t`, subject to `W_b X_a + X_b V_a = 0` for each zero relation
/// `b ∘ a`. Coboundaries are `X_a = W_a h_s - h_t V_a` for vertex maps
/// `h_v: V_v -> W_v`.
pub fn ext1_dim(v: &QuiverRep, w: &QuiverRep) -> Result<usize> {
    if v.n != w.n {
        return Err(Error::Dimension(format!("quivers of size {} and {}", v.n, w.n)));
    }
    let arrows = v.arrows();
    // Offsets of each X_a in the flattened vector of unknowns.
    let mut x_offset = Vec::new();
    let mut x_len = 0;
    for &a in &arrows {
        x_offset.push(x_len);
        x_len += w.dims[a.target()] * v.dims[a.source()];
    }
    let x_index = |k: usize, i: usize, j: usize| x_offset[k] + i * v.dims[arrows[k].source()] + j;
    let x_block = |x: &[BigRational], k: usize| -> Mat {
        let (rows, cols) = (w.dims[arrows[k].target()], v.dims[arrows[k].source()]);
        let mut m = Mat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, x[x_index(k, i, j)].clone());
            }
        }
        m
    };
    let pos = |a: Arrow| arrows.iter().position(|&b| b == a).expect("arrow exists");
    let relations: Vec<(Arrow, Arrow)> = (1..=v.n)
        .flat_map(|i| [(Arrow::Beta(i), Arrow::Alpha(i)), (Arrow::Alpha(i), Arrow::Beta(i))])
        .collect();

    let unit = |len: usize, idx: usize| -> Vec<BigRational> {
        let mut e = vec![BigRational::from_integer(BigInt::from(0)); len];
        e[idx] = BigRational::from_integer(BigInt::from(1));
        e
    };
    let flatten = |blocks: Vec<Mat>| -> Vec<BigRational> {
        blocks
            .iter()
            .flat_map(|m| (0..m.rows()).flat_map(move |i| (0..m.cols()).map(move |j| m.get(i, j).clone())))
            .collect()
    };

    // Relation constraints, one column per unknown.
    let constraint = |x: &[BigRational]| -> Vec<BigRational> {
        flatten(
            relations
                .iter()
                .map(|&(a, b)| {
                    // b after a, with a: s -> t and b: t -> s.
                    let (ka, kb) = (pos(a), pos(b));
                    w.map(b).mul(&x_block(x, ka)).add(&x_block(x, kb).mul(v.map(a)))
                })
                .collect(),
        )
    };
    let columns: Vec<Vec<BigRational>> = (0..x_len).map(|idx| constraint(&unit(x_len, idx))).collect();
    let rows = columns.first().map_or(0, Vec::len);
    let mut cmat = Mat::zeros(rows, x_len);
    for (j, col) in columns.iter().enumerate() {
        for (i, c) in col.iter().enumerate() {
            cmat.set(i, j, c.clone());
        }
    }
    let cocycles = x_len - cmat.rank();

    // Coboundaries, one column per entry of some h_v.
    let mut h_offset = Vec::new();
    let mut h_len = 0;
    for (wd, vd) in w.dims.iter().zip(&v.dims) {
        h_offset.push(h_len);
        h_len += wd * vd;
    }
    let mut bmat = Mat::zeros(x_len, h_len);
    for (vert, &offset) in h_offset.iter().enumerate() {
        for i in 0..w.dims[vert] {
            for j in 0..v.dims[vert] {
                let mut h = Mat::zeros(w.dims[vert], v.dims[vert]);
                h.set(i, j, BigRational::from_integer(BigInt::from(1)));
                let col = offset + i * v.dims[vert] + j;
                let blocks = arrows
                    .iter()
                    .map(|&a| {
                        let (s, t) = (a.source(), a.target());
                        let mut out = Mat::zeros(w.dims[t], v.dims[s]);
                        if s == vert {
                            out = out.add(&w.map(a).mul(&h));
                        }
                        if t == vert {
                            out = out.add(&h.mul(v.map(a)).neg());
                        }
                        out
                    })
                    .collect();
                for (row, val) in flatten(blocks).into_iter().enumerate() {
                    bmat.set(row, col, val);
                }
            }
        }
    }
    Ok(cocycles - bmat.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(p: usize, n: usize) -> QuiverRep {
        build_rep(RepKind::Q, p, n).unwrap()
    }

    fn d(p: usize, n: usize) -> QuiverRep {
        build_rep(RepKind::D, p, n).unwrap()
    }

    /// The subrepresentation of `Q^(p)` supported on the vertices in `set`.
    fn q_sub(p: usize, n: usize, set: &[usize]) -> Subspaces {
        int_subspaces(
            &(0..=n)
                .map(|v| if v <= p && set.contains(&v) { vec![vec![1]] } else { vec![] })
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn build_examples() {
        for n in 0..=4 {
            for p in 0..=n {
                let dp = d(p, n);
                let mut expected = vec![0; n + 1];
                expected[p] = 1;
                assert_eq!(dp.dims(), expected.as_slice());
                assert!(check_relations(&q(p, n)));
                assert!(check_relations(&dp));
            }
            assert_eq!(q(0, n), d(0, n));
        }
        assert!(build_rep(RepKind::Q, 3, 2).is_err());
    }

    #[test]
    fn relations_detect_two_cycles() {
        let bad = QuiverRep::from_int_maps(vec![1, 1, 0], &[vec![vec![1]], vec![]], &[vec![vec![1]], vec![vec![]]])
            .unwrap();
        assert!(!check_relations(&bad));
        let sum = direct_sum(&q(2, 3), &d(1, 3)).unwrap();
        assert!(check_relations(&sum));
    }

    #[test]
    fn socle_examples() {
        for n in 0..=8 {
            for p in 0..=n {
                assert_eq!(simple_socle(&q(p, n)), vec![(p, 1)]);
                assert_eq!(simple_socle(&d(p, n)), vec![(p, 1)]);
            }
        }
        let sum = direct_sum(&q(2, 3), &q(0, 3)).unwrap();
        assert_eq!(simple_socle(&sum), vec![(0, 1), (2, 1)]);
    }

    #[test]
    fn quotient_examples() {
        for n in 1..=5 {
            for p in 1..=n {
                let quot = quotient(&q(p, n), &q_sub(p, n, &[p])).unwrap();
                assert_eq!(quot.dims(), q(p - 1, n).dims());
                assert!(quot.beta_is_zero());
                let mut expected = vec![0; n + 1];
                expected[p - 1] = 1;
                assert_eq!(decompose_addq(&quot), AddQDecomposition::Sum(expected));
            }
        }
        let r = direct_sum(&q(2, 3), &q(1, 3)).unwrap();
        let none = int_subspaces(&vec![vec![]; 4]);
        assert_eq!(quotient(&r, &none).unwrap(), r);
        let all = int_subspaces(&[
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![1]],
            vec![],
        ]);
        assert_eq!(quotient(&r, &all).unwrap(), QuiverRep::zero(3));
        // Vertex 0 alone is not closed under α_1.
        assert!(matches!(quotient(&q(2, 3), &q_sub(2, 3, &[0])), Err(Error::NotStable(_))));
    }

    #[test]
    fn quotients_of_q_are_q() {
        for n in 0..=6 {
            for p in 0..=n {
                let mut stable = Vec::new();
                for mask in 0u32..(1 << (p + 1)) {
                    let set: Vec<usize> = (0..=p).filter(|v| mask & (1 << v) != 0).collect();
                    let Ok(quot) = quotient(&q(p, n), &q_sub(p, n, &set)) else {
                        continue;
                    };
                    stable.push(set.clone());
                    let k = (0..=p).find(|v| set.contains(v)).unwrap_or(p + 1);
                    let mut expected = vec![0; n + 1];
                    if k > 0 {
                        expected[k - 1] = 1;
                    }
                    assert_eq!(decompose_addq(&quot), AddQDecomposition::Sum(expected), "p={p} set={set:?}");
                }
                // The subrepresentations are exactly the tails {k..p}.
                assert_eq!(stable.len(), p + 2);
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let r = direct_sum(&q(2, 3), &q(0, 3)).unwrap();
        assert_eq!(decompose_addq(&r), AddQDecomposition::Sum(vec![1, 0, 1, 0]));
        assert!(matches!(decompose_addq(&d(1, 2)), AddQDecomposition::NotInAddQ { vertex: 1, .. }));
        let r = direct_sum(&q(1, 2), &q(1, 2)).unwrap();
        assert_eq!(decompose_addq(&r), AddQDecomposition::Sum(vec![0, 2, 0]));
        let with_beta = QuiverRep::from_int_maps(vec![1, 1], &[vec![vec![0]]], &[vec![vec![1]]]).unwrap();
        assert!(matches!(decompose_addq(&with_beta), AddQDecomposition::NotInAddQ { vertex: 1, .. }));
    }

    #[test]
    fn ext_examples() {
        for n in 0..=5 {
            for i in 0..=n {
                for j in 0..=n {
                    assert_eq!(ext1_dim(&q(i, n), &q(j, n)).unwrap(), 0, "n={n} i={i} j={j}");
                }
                assert_eq!(ext1_dim(&d(i, n), &d(i, n)).unwrap(), 0);
            }
        }
        assert_eq!(ext1_dim(&d(0, 1), &d(1, 1)).unwrap(), 1);
        assert_eq!(ext1_dim(&d(1, 1), &d(0, 1)).unwrap(), 1);
        assert_eq!(ext1_dim(&d(0, 3), &d(2, 3)).unwrap(), 0);
        // Ext is additive in each argument.
        let sum = direct_sum(&d(0, 2), &d(0, 2)).unwrap();
        assert_eq!(ext1_dim(&sum, &d(1, 2)).unwrap(), 2);
    }

    #[test]
    fn dump_format() {
        assert_eq!(q(2, 3).to_string(), "dims: [1, 1, 1, 0]\nalpha_1: [1]\nalpha_2: [1]");
        assert_eq!(d(1, 2).to_string(), "dims: [0, 1, 0]");
    }

    fn unitriangular(k: usize, seed: &[i64]) -> Vec<Vec<i64>> {
        // Lower unitriangular times upper unitriangular: always invertible.
        let mut lower = vec![vec![0i64; k]; k];
        let mut upper = vec![vec![0i64; k]; k];
        let mut it = seed.iter().cycle();
        for i in 0..k {
            lower[i][i] = 1;
            upper[i][i] = 1;
            for j in 0..i {
                lower[i][j] = *it.next().unwrap();
                upper[j][i] = *it.next().unwrap();
            }
        }
        (0..k)
            .map(|i| (0..k).map(|j| (0..k).map(|t| lower[i][t] * upper[t][j]).sum()).collect())
            .collect()
    }

    proptest! {
        #[test]
        fn decompose_recovers_sums(
            n in 0usize..=4,
            mult in proptest::collection::vec(0u64..=2, 5),
            seed in proptest::collection::vec(-2i64..=2, 8),
        ) {
            let mult = mult[..=n].to_vec();
            let r = q_sum(&mult, n).unwrap();
            let g: Vec<Vec<Vec<i64>>> = r.dims().iter().map(|&k| unitriangular(k, &seed)).collect();
            let twisted = r.change_basis(&g).unwrap();
            prop_assert!(check_relations(&twisted));
            prop_assert_eq!(decompose_addq(&twisted), AddQDecomposition::Sum(mult));
        }
    }
}
