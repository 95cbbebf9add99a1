//! Lyubeznik numbers of the determinantal rings `R^(p) = S / I_{p+1}`, packed
//! into the generating function `L_p(q, w) = sum λ_{i,j} q^i w^j`.
//!
//! [`lyub_gf`] evaluates the closed forms. [`lyub_gf_via_iteration`] gets
//! the same numbers by composing two local cohomology functors, which makes
//! it an independent check.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{range, Error, Result};
use crate::exactpoly::BiPoly;
use crate::grothendieck::ModuleExpr;
use crate::loccoh::{apply_loccoh, start_expr, Start};
use crate::shapes::qbinom_sq;

fn check_params(m: usize, n: usize, p: usize) -> Result<()> {
    if n == 0 || m < n {
        return Err(range(format!("need m >= n >= 1, got m = {m}, n = {n}")));
    }
    if p >= n {
        return Err(range(format!("Lyubeznik numbers need p < n, got p = {p}, n = {n}")));
    }
    Ok(())
}

/// Adds `q^qs * a(q^2) * w^ws * b(w^2)` to `acc`, where `a` and `b` are the
/// given Gaussian binomials.
fn add_summand(acc: &mut BiPoly, qs: i64, qb: (i64, i64), ws: i64, wb: (i64, i64)) {
    let qpart = qbinom_sq(qb.0, qb.1);
    let wpart = qbinom_sq(wb.0, wb.1);
    for (i, a) in qpart.terms() {
        for (j, b) in wpart.terms() {
            acc.add_term(qs + i, ws + j, a * b);
        }
    }
}

/// The non-square closed form evaluated at any `m >= n`, including `m = n`
/// where it does not give the Lyubeznik numbers.
pub fn lyub_gf_nonsquare_formula(m: usize, n: usize, p: usize) -> Result<BiPoly> {
    check_params(m, n, p)?;
    let (m, n, p) = (m as i64, n as i64, p as i64);
    let mut acc = BiPoly::zero();
    for s in 0..=p {
        add_summand(
            &mut acc,
            s * s + s * (m - n),
            (n, s),
            p * p + 2 * p + s * (m + n - 2 * p - 2),
            (n - 1 - s, p - s),
        );
    }
    Ok(acc)
}

/// `L_p(q, w)` for `0 <= p < n <= m`.
pub fn lyub_gf(m: usize, n: usize, p: usize) -> Result<BiPoly> {
    check_params(m, n, p)?;
    if m > n {
        return lyub_gf_nonsquare_formula(m, n, p);
    }
    let (n, p) = (n as i64, p as i64);
    if p == n - 1 {
        let e = n * n - 1;
        return Ok(BiPoly::monomial(1, e, e));
    }
    let mut acc = BiPoly::zero();
    for s in 0..=p {
        add_summand(
            &mut acc,
            s * s + 2 * s,
            (n - 1, s),
            p * p + 2 * p + s * (2 * n - 2 * p - 2),
            (n - 2 - s, p - s),
        );
    }
    Ok(acc)
}

/// `L_p(q, w)` read off `H^i_{O_0}(H^{mn-j}_{O_p}(S))`: the multiplicity of
/// the simple supported at the origin in bidegree `(i, mn - j)`.
pub fn lyub_gf_via_iteration(m: usize, n: usize, p: usize) -> Result<BiPoly> {
    check_params(m, n, p)?;
    let mn = (m * n) as i64;
    let mut acc = BiPoly::zero();
    for (k, inner) in start_expr(Start::S, n, m, n, p)?.iter() {
        for (i, outer) in apply_loccoh(inner, 0)?.iter() {
            let c = zero_multiplicity(outer);
            if c != 0 {
                acc.add_term(i, mn - k, BigInt::from(c));
            }
        }
    }
    Ok(acc)
}

fn zero_multiplicity(e: &ModuleExpr) -> u64 {
    e.mult()[0]
}

/// `dim R^(p) = p(m + n - p)`.
pub fn ring_dim(m: usize, n: usize, p: usize) -> usize {
    p * (m + n - p)
}

/// The Lyubeznik table `Λ = (λ_{i,j})_{0 <= i, j <= d}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LyubeznikTable {
    dim: usize,
    entries: Vec<Vec<BigInt>>,
}

impl LyubeznikTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    /// Nonzero entries `(i, j, λ_{i,j})` in row-major order.
    pub fn nonzero(&self) -> Vec<(usize, usize, BigInt)> {
        let mut out = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|row| row.iter().map(BigInt::to_string).collect::<Vec<_>>().join(" & "))
            .collect();
        format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}", rows.join(" \\\\\n"))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "entries": self.entries.iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for LyubeznikTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .flatten()
            .map(|c| c.to_string().len())
            .max()
            .unwrap_or(1);
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Lays the coefficients of `f` out as a Lyubeznik table for `R^(p)`.
pub fn lyub_table(f: &BiPoly, m: usize, n: usize, p: usize) -> Result<LyubeznikTable> {
    check_params(m, n, p)?;
    let dim = ring_dim(m, n, p);
    let mut entries = vec![vec![BigInt::zero(); dim + 1]; dim + 1];
    for ((i, j), c) in f.terms() {
        if i < 0 || j < i || j > dim as i64 || c.is_negative() {
            return Err(Error::TableSupport { i, j, dim });
        }
        entries[i as usize][j as usize] = c.clone();
    }
    Ok(LyubeznikTable { dim, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::Var;

    fn bp(terms: &[(i64, i64, i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(i, j, c)| ((i, j), c)))
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(lyub_gf(3, 2, 1).unwrap(), bp(&[(0, 3, 1), (2, 4, 1), (4, 4, 1)]));
        assert_eq!(
            lyub_gf(4, 4, 2).unwrap(),
            bp(&[(0, 8, 1), (3, 10, 1), (5, 10, 1), (7, 10, 1), (8, 12, 1), (10, 12, 1), (12, 12, 1)])
        );
        assert_eq!(lyub_gf(2, 2, 1).unwrap(), bp(&[(3, 3, 1)]));
        assert!(lyub_gf(3, 2, 2).is_err());
        assert!(lyub_gf(2, 3, 1).is_err());
    }

    #[test]
    fn iteration_examples() {
        assert_eq!(lyub_gf_via_iteration(3, 2, 1).unwrap(), lyub_gf(3, 2, 1).unwrap());
        assert_eq!(lyub_gf_via_iteration(4, 4, 2).unwrap(), lyub_gf(4, 4, 2).unwrap());
        for n in 1..=5 {
            let e = (n * n - 1) as i64;
            assert_eq!(lyub_gf_via_iteration(n, n, n - 1).unwrap(), BiPoly::monomial(1, e, e));
        }
    }

    #[test]
    fn naive_substitution_fails_for_square() {
        assert_ne!(lyub_gf_nonsquare_formula(2, 2, 1).unwrap(), lyub_gf(2, 2, 1).unwrap());
        assert_ne!(lyub_gf_nonsquare_formula(4, 4, 2).unwrap(), lyub_gf(4, 4, 2).unwrap());
    }

    #[test]
    fn nonsquare_summands_factor() {
        for m in 2..=6 {
            for n in 1..m {
                for p in 0..n {
                    let (mi, ni, pi) = (m as i64, n as i64, p as i64);
                    let mut acc = BiPoly::zero();
                    for s in 0..=pi {
                        let qpart = qbinom_sq(ni, s).shift(s * s + s * (mi - ni));
                        let wpart = qbinom_sq(ni - 1 - s, pi - s).shift(pi * pi + 2 * pi + s * (mi + ni - 2 * pi - 2));
                        acc = &acc + &BiPoly::product(&qpart, &wpart);
                    }
                    assert_eq!(acc, lyub_gf(m, n, p).unwrap());
                }
            }
        }
    }

    #[test]
    fn highest_corner_is_one() {
        for m in 1..=7 {
            for n in 1..=m {
                for p in 0..n {
                    let d = ring_dim(m, n, p) as i64;
                    assert_eq!(lyub_gf(m, n, p).unwrap().coeff(d, d), BigInt::from(1), "({m},{n},{p})");
                }
            }
        }
    }

    #[test]
    fn table_of_3x2() {
        let t = lyub_table(&lyub_gf(3, 2, 1).unwrap(), 3, 2, 1).unwrap();
        assert_eq!(t.dim(), 4);
        let ones: Vec<(usize, usize)> = t.nonzero().into_iter().map(|(i, j, _)| (i, j)).collect();
        assert_eq!(ones, vec![(0, 3), (2, 4), (4, 4)]);
        assert_eq!(
            t.to_latex(),
            "\\begin{pmatrix}\n0 & 0 & 0 & 1 & 0 \\\\\n0 & 0 & 0 & 0 & 0 \\\\\n0 & 0 & 0 & 0 & 1 \\\\\n0 & 0 & 0 & 0 & 0 \\\\\n0 & 0 & 0 & 0 & 1\n\\end{pmatrix}"
        );
        assert_eq!(t.to_string().lines().next(), Some("0 0 0 1 0"));
    }

    #[test]
    fn table_edge_cases() {
        let z = lyub_table(&BiPoly::zero(), 3, 2, 1).unwrap();
        assert!(z.nonzero().is_empty());
        assert_eq!(z.rows().len(), 5);

        let t = lyub_table(&lyub_gf(2, 2, 1).unwrap(), 2, 2, 1).unwrap();
        assert_eq!(t.dim(), 3);
        assert_eq!(t.nonzero(), vec![(3, 3, BigInt::from(1))]);

        let bad = BiPoly::embed(&crate::exactpoly::LaurentPoly::q_pow(2), Var::Q);
        assert!(matches!(lyub_table(&bad, 3, 2, 1), Err(Error::TableSupport { i: 2, j: 0, .. })));
    }

    #[test]
    fn cross_check_small() {
        for m in 1..=5 {
            for n in 1..=m {
                for p in 0..n {
                    assert_eq!(lyub_gf(m, n, p).unwrap(), lyub_gf_via_iteration(m, n, p).unwrap(), "({m},{n},{p})");
                }
            }
        }
    }
}
