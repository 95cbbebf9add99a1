//! Named property sweeps over the whole crate.
//!
//! Every check takes a size knob `max` and scales its parameter ranges from
//! it; at `max = 6` the cross-checks cover `n <= m <= 6`, the Euler and parity
//! sweeps `m <= 8`, and the pure binomial identities `n <= 12`. Random inputs
//! come from a fixed seed, so reports are reproducible.

use std::fmt;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::characters::{h_axd, in_dp_range, j_h1m_closed, j_h1m_vanishes, lambda_p, char_of, witness_pairing, CharKind};
use crate::error::Result;
use crate::exactpoly::{BiPoly, LaurentPoly};
use crate::exec::Execution;
use crate::grothendieck::{class_to_expr, euler_chi, expr_to_class, pairing_d, Basis, GammaElem, ModuleExpr};
use crate::loccoh::{
    addq_class_d, addq_multiplicities_d, chi_recurrence_check, h_class_d, h_class_q, h_class_s, iterate_loccoh_with,
    start_expr, GradedExpr, Start,
};
use crate::lyubeznik::{lyub_gf, lyub_gf_nonsquare_formula, lyub_gf_via_iteration, ring_dim};
use crate::quiver::{
    build_rep, check_relations, decompose_addq, ext1_dim, int_subspaces, q_sum, quotient, simple_socle,
    AddQDecomposition, RepKind,
};
use crate::shapes::{
    binom, bott_tilde, partitions_in_rectangle, product_space_cohomology, qbinom, qbinom_oracle, BottResult, Weight,
};

const SEED: u64 = 0x5eed_d37e;

/// The outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} ({} cases)", self.name, self.cases)
        } else {
            write!(f, "FAIL {} ({} of {} cases failed; first: {})", self.name, self.failures.len(), self.cases, self.failures[0])
        }
    }
}

type CheckFn = fn(usize, Execution) -> CheckReport;

/// `(name, module, what it checks, runner)`.
const CHECKS: &[(&str, &str, &str, CheckFn)] = &[
    ("poly-ring-laws", "exactpoly", "commutativity, associativity, distributivity on random polynomials", poly_ring_laws),
    ("poly-invert-involution", "exactpoly", "q -> 1/q applied twice is the identity", poly_invert_involution),
    ("poly-eval-multiplicative", "exactpoly", "eval(ab) = eval(a) eval(b)", poly_eval_multiplicative),
    ("qbinom-oracle", "shapes", "Pascal recurrence agrees with the partition-count oracle", qbinom_oracle_check),
    ("qbinom-pascal", "shapes", "both q-Pascal identities", qbinom_pascal),
    ("qbinom-symmetry", "shapes", "{a,b} = {a,a-b} and q = 1 gives binom(a,b)", qbinom_symmetry),
    ("qbinom-inversion", "shapes", "{a,b}(1/q) = q^{-b(a-b)} {a,b}(q)", qbinom_inversion),
    ("bott-tilde", "shapes", "dominant output, degree 0 iff dominant, vanishing iff repeat", bott_tilde_check),
    ("product-space-even", "shapes", "cohomological degrees on the product space are even", product_space_even),
    ("basis-round-trip", "grothendieck", "D -> Q -> D is the identity", basis_round_trip),
    ("pairing-bilinear-symmetric", "grothendieck", "the D-pairing is bilinear and symmetric", pairing_bilinear),
    ("expr-round-trip", "grothendieck", "module expression -> class -> module expression", expr_round_trip),
    ("parity", "loccoh", "each D_s component of H_t(D_p) has exponents of one parity; H_t(Q_p) too", parity),
    ("specialization", "loccoh", "H_t(D_n) = H_t(S)", specialization),
    ("shift-invariance", "loccoh", "<H_t(D_p), D_s> is invariant under (m,n,t,p,s) -> (m-1,n-1,t-1,p-1,s-1)", shift_invariance),
    ("square-consistency", "loccoh", "add(Q) classes convert to the D-basis classes; Q_p recursion", square_consistency),
    ("id-msq-bins", "loccoh", "the boundary identity for m_s(q)", id_msq_bins),
    ("qpdp", "loccoh", "H^0_{O_{p-1}}(D_p) = 0 and H^1 = Q_{p-1}", qpdp),
    ("addq-nonnegative", "loccoh", "m_s(q) has nonnegative coefficients", addq_nonnegative),
    ("euler-closed-form", "loccoh", "chi_0(H_t(D_p)) closed form", euler_closed_form),
    ("euler-recurrence", "loccoh", "Euler characteristic recurrence", euler_recurrence),
    ("binomial-identity", "loccoh", "alternating binomial identity behind the recurrence", binomial_identity),
    ("iterate-deterministic", "loccoh", "sequential and parallel iteration agree", iterate_deterministic),
    ("lyub-cross-check", "lyubeznik", "closed form = composition of local cohomology functors", lyub_cross_check),
    ("lyub-highest", "lyubeznik", "lambda_{d,d} = 1", lyub_highest),
    ("lyub-factorization", "lyubeznik", "non-square summands are q-part times w-part", lyub_factorization),
    ("lyub-square-substitution", "lyubeznik", "the non-square formula is wrong for square matrices", lyub_square_substitution),
    ("witness-pairing", "characters", "<V ⊗ D_p, h_axd> = [a = p] q^{p(m-n)} {n,p}_{q^2}", witness_pairing_values),
    ("witness-stabilization", "characters", "the witness pairing is constant for d in [m+n, m+n+3]", witness_stabilization),
    ("h1m-criterion", "characters", "condition-system search = closed criterion", h1m_criterion),
    ("h-axd-count", "characters", "term count of h_axd = product of box counts", h_axd_count),
    ("dp-self-consistency", "characters", "each D_p weight pair is (lambda(p), mu)", dp_self_consistency),
    ("quiver-socle", "quiver", "soc Q^(p) = D^(p)", quiver_socle),
    ("quiver-quotients", "quiver", "every quotient of Q^(p) is some Q^(q) or zero", quiver_quotients),
    ("quiver-indecomposable", "quiver", "Q^(p) is indecomposable with simple socle", quiver_indecomposable),
    ("quiver-addq-round-trip", "quiver", "decompose_addq recovers random sums in random bases", quiver_addq_round_trip),
    ("quiver-ext", "quiver", "Ext^1(Q^(i), Q^(j)) = 0", quiver_ext),
];

/// `(name, module, description)` for every check, in run order.
pub fn checks() -> Vec<(&'static str, &'static str, &'static str)> {
    CHECKS.iter().map(|&(n, m, d, _)| (n, m, d)).collect()
}

/// Runs `suite`: `all`, a module name, or a single check name.
pub fn run_suite(suite: &str, max: usize, exec: Execution) -> Option<Vec<CheckReport>> {
    let selected: Vec<&(&str, &str, &str, CheckFn)> =
        CHECKS.iter().filter(|(name, module, _, _)| suite == "all" || suite == *name || suite == *module).collect();
    if selected.is_empty() {
        return None;
    }
    Some(selected.into_iter().map(|(_, _, _, f)| f(max, exec)).collect())
}

fn sweep<T, F>(name: &'static str, exec: Execution, cases: Vec<T>, f: F) -> CheckReport
where
    T: Send + fmt::Debug,
    F: Fn(&T) -> Result<bool> + Sync + Send,
{
    let count = cases.len();
    let failures = exec
        .map(cases, |case| match f(&case) {
            Ok(true) => None,
            Ok(false) => Some(format!("{case:?}")),
            Err(e) => Some(format!("{case:?}: {e}")),
        })
        .into_iter()
        .flatten()
        .collect();
    CheckReport { name, cases: count, failures }
}

fn random_poly(rng: &mut StdRng) -> LaurentPoly {
    let len = rng.gen_range(0..6);
    LaurentPoly::from_terms((0..len).map(|_| (rng.gen_range(-4..=6), rng.gen_range(-5..=5))))
}

fn random_polys(max: usize, k: usize) -> Vec<Vec<LaurentPoly>> {
    let mut rng = StdRng::seed_from_u64(SEED);
    (0..40 * max).map(|_| (0..k).map(|_| random_poly(&mut rng)).collect()).collect()
}

/// `(m, n)` with `1 <= n <= m <= top`.
fn shapes_up_to(top: usize) -> Vec<(usize, usize)> {
    (1..=top).flat_map(|m| (1..=m).map(move |n| (m, n))).collect()
}

/// `(m, n, t, p)` with `t < p <= n <= m <= top`.
fn t_below_p(top: usize) -> Vec<(usize, usize, usize, usize)> {
    shapes_up_to(top)
        .into_iter()
        .flat_map(|(m, n)| (1..=n).flat_map(move |p| (0..p).map(move |t| (m, n, t, p))))
        .collect()
}

fn poly_ring_laws(max: usize, exec: Execution) -> CheckReport {
    sweep("poly-ring-laws", exec, random_polys(max, 3), |v| {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        Ok(a + b == b + a
            && a * b == b * a
            && &(a + b) + c == a + &(b + c)
            && &(a * b) * c == a * &(b * c)
            && a * &(b + c) == &(a * b) + &(a * c))
    })
}

fn poly_invert_involution(max: usize, exec: Execution) -> CheckReport {
    sweep("poly-invert-involution", exec, random_polys(max, 1), |v| Ok(v[0].invert_var().invert_var() == v[0]))
}

fn poly_eval_multiplicative(max: usize, exec: Execution) -> CheckReport {
    let cases: Vec<(Vec<LaurentPoly>, i64)> =
        random_polys(max, 2).into_iter().flat_map(|v| [-1, 1, 2, 3].map(|x| (v.clone(), x))).collect();
    sweep("poly-eval-multiplicative", exec, cases, |(v, x)| {
        let (a, b) = (&v[0], &v[1]);
        match (a.eval(*x), b.eval(*x), (a * b).eval(*x)) {
            (Ok(ea), Ok(eb), Ok(eab)) => Ok(ea * eb == eab),
            _ => Ok(true),
        }
    })
}

fn ab_pairs(top: i64) -> Vec<(i64, i64)> {
    (0..=top).flat_map(|a| (0..=a).map(move |b| (a, b))).collect()
}

fn qbinom_oracle_check(max: usize, exec: Execution) -> CheckReport {
    sweep("qbinom-oracle", exec, ab_pairs(2 * max as i64), |&(a, b)| {
        Ok(qbinom(a, b) == qbinom_oracle(a as usize, b as usize))
    })
}

fn qbinom_pascal(max: usize, exec: Execution) -> CheckReport {
    let cases: Vec<(i64, i64)> = ab_pairs(2 * max as i64).into_iter().filter(|&(a, _)| a >= 1).collect();
    sweep("qbinom-pascal", exec, cases, |&(a, b)| {
        let first = &qbinom(a - 1, b).shift(b) + &qbinom(a - 1, b - 1);
        let second = &qbinom(a - 1, b) + &qbinom(a - 1, b - 1).shift(a - b);
        Ok(qbinom(a, b) == first && qbinom(a, b) == second)
    })
}

fn qbinom_symmetry(max: usize, exec: Execution) -> CheckReport {
    sweep("qbinom-symmetry", exec, ab_pairs(2 * max as i64), |&(a, b)| {
        Ok(qbinom(a, b) == qbinom(a, a - b) && qbinom(a, b).eval(1)? == binom(a, b))
    })
}

fn qbinom_inversion(max: usize, exec: Execution) -> CheckReport {
    sweep("qbinom-inversion", exec, ab_pairs(2 * max as i64), |&(a, b)| {
        Ok(qbinom(a, b).invert_var() == qbinom(a, b).shift(-b * (a - b)))
    })
}

/// All weights of length `len` with entries in `[lo, hi]`.
fn all_weights(len: usize, lo: i64, hi: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|v: Vec<i64>| (lo..=hi).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out.into_iter().map(Weight::new).collect()
}

fn bott_tilde_check(max: usize, exec: Execution) -> CheckReport {
    let cases: Vec<Weight> = (1..=max.min(4)).flat_map(|len| all_weights(len, -3, 3)).collect();
    sweep("bott-tilde", exec, cases, |g| {
        let shifted: Vec<i64> = g.entries().iter().enumerate().map(|(i, x)| x + (g.len() - 1 - i) as i64).collect();
        let mut sorted = shifted.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let repeat = sorted.len() < shifted.len();
        Ok(match bott_tilde(g) {
            BottResult::Vanishes => repeat,
            BottResult::NonVanishing { degree, weight } => {
                !repeat && weight.is_dominant() && (degree == 0) == g.is_dominant()
            }
        })
    })
}

fn product_space_even(max: usize, exec: Execution) -> CheckReport {
    let top = max.min(4);
    let cases: Vec<(Weight, Weight)> = (0..=top)
        .flat_map(|k| {
            let nus: Vec<Weight> = all_weights(k, -2, 2).into_iter().filter(Weight::is_dominant).collect();
            let mus = all_weights(top - k, -2, 2);
            nus.into_iter().flat_map(move |nu| mus.clone().into_iter().map(move |mu| (nu.clone(), mu)))
        })
        .collect();
    sweep("product-space-even", exec, cases, |(nu, mu)| {
        Ok(product_space_cohomology(nu, mu, nu.len() + mu.len())?.degree().is_none_or(|d| d % 2 == 0))
    })
}

fn random_elems(max: usize) -> Vec<(GammaElem, GammaElem, LaurentPoly)> {
    let mut rng = StdRng::seed_from_u64(SEED ^ 1);
    (0..20 * max)
        .map(|_| {
            let n = rng.gen_range(1..=max + 2);
            let mut elem = || {
                GammaElem::new(n, n, Basis::D, (0..=n).map(|_| random_poly(&mut rng)).collect()).expect("valid shape")
            };
            let (a, b) = (elem(), elem());
            (a, b, random_poly(&mut rng))
        })
        .collect()
}

fn basis_round_trip(max: usize, exec: Execution) -> CheckReport {
    sweep("basis-round-trip", exec, random_elems(max), |(a, _, _)| {
        Ok(a.change_basis(Basis::Q)?.change_basis(Basis::D)? == *a)
    })
}

fn pairing_bilinear(max: usize, exec: Execution) -> CheckReport {
    sweep("pairing-bilinear-symmetric", exec, random_elems(max), |(a, b, c)| {
        let n = a.n();
        let ds: Vec<GammaElem> = (0..=n).map(|s| GammaElem::basis_elem(n, n, Basis::D, s)).collect::<Result<_>>()?;
        let mut ok = pairing_d(a, b)? == pairing_d(b, a)?;
        ok &= pairing_d(&a.add(b)?, &ds[0])? == &pairing_d(a, &ds[0])? + &pairing_d(b, &ds[0])?;
        ok &= pairing_d(&a.scale(c), b)? == c * &pairing_d(a, b)?;
        ok &= pairing_d(&a.change_basis(Basis::Q)?, b)? == pairing_d(a, b)?;
        Ok(ok)
    })
}

fn expr_round_trip(max: usize, exec: Execution) -> CheckReport {
    let mut rng = StdRng::seed_from_u64(SEED ^ 2);
    let cases: Vec<ModuleExpr> = (0..20 * max)
        .map(|_| {
            let n = rng.gen_range(1..=max + 2);
            let m = n + rng.gen_range(0..=2);
            let family = if m == n && rng.gen_bool(0.5) { Basis::Q } else { Basis::D };
            ModuleExpr::new(m, n, family, (0..=n).map(|_| rng.gen_range(0..4)).collect()).expect("valid shape")
        })
        .collect();
    sweep("expr-round-trip", exec, cases, |e| Ok(class_to_expr(&expr_to_class(e))? == *e))
}

fn exponents_have_parity(c: &LaurentPoly, parity: i64) -> bool {
    c.terms().all(|(k, _)| (k - parity).rem_euclid(2) == 0)
}

/// The `D_s` component of `H_t(D_p)` lives in degrees `≡ (p-t) + (p-s)(m-n)`;
/// for `m = n` this is the uniform `p - t`, which also governs `H_t(Q_p)`.
fn parity(max: usize, exec: Execution) -> CheckReport {
    sweep("parity", exec, t_below_p(max + 2), |&(m, n, t, p)| {
        let (mi, ni, ti, pi) = (m as i64, n as i64, t as i64, p as i64);
        let d = h_class_d(m, n, t, p)?;
        let mut ok = (0..=n).all(|s| exponents_have_parity(d.coeff(s), (pi - ti) + (pi - s as i64) * (mi - ni)));
        if m == n {
            ok &= h_class_q(n, t, p)?.coeffs().iter().all(|c| exponents_have_parity(c, pi - ti));
        }
        Ok(ok)
    })
}

fn specialization(max: usize, exec: Execution) -> CheckReport {
    let cases: Vec<(usize, usize, usize)> =
        shapes_up_to(max + 2).into_iter().flat_map(|(m, n)| (0..=n).map(move |t| (m, n, t))).collect();
    sweep("specialization", exec, cases, |&(m, n, t)| Ok(h_class_d(m, n, t, n)? == h_class_s(m, n, t)?))
}

fn shift_invariance(max: usize, exec: Execution) -> CheckReport {
    let cases: Vec<(usize, usize, usize, usize)> =
        t_below_p(max + 2).into_iter().filter(|&(m, n, t, _)| t >= 1 && n >= 2 && m >= 2).collect();
    sweep("shift-invariance", exec, cases, |&(m, n, t, p)| {
        let big = h_class_d(m, n, t, p)?;
        let small = h_class_d(m - 1, n - 1, t - 1, p - 1)?;
        for s in 1..=n {
            let lhs = pairing_d(&big, &GammaElem::basis_elem(m, n, Basis::D, s)?)?;
            let rhs = pairing_d(&small, &GammaElem::basis_elem(m - 1, n - 1, Basis::D, s - 1)?)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

fn square_cases(max: usize) -> Vec<(usize, usize, usize)> {
    t_below_p(max + 2).into_iter().filter(|&(m, n, _, _)| m == n).map(|(_, n, t, p)| (n, t, p)).collect()
}

fn square_consistency(max: usize, exec: Execution) -> CheckReport {
    sweep("square-consistency", exec, square_cases(max), |&(n, t, p)| {
        let mut ok = addq_class_d(n, t, p)?.change_basis(Basis::D)? == h_class_d(n, n, t, p)?;
        if p == n {
            let start: GammaElem = graded_to_class(&start_expr(Start::S, n, n, n, t)?, n)?;
            ok &= start.change_basis(Basis::D)? == h_class_s(n, n, t)?;
        }
        // 0 -> D_p -> Q_p -> Q_{p-1} -> 0 splits degreewise into
        // H(Q_p) = H(D_p) - q H(Q_{p-1}).
        let rhs = addq_class_d(n, t, p)?.sub(&h_class_q(n, t, p - 1)?.scale(&LaurentPoly::q_pow(1)))?;
        ok &= h_class_q(n, t, p)? == rhs;
        Ok(ok)
    })
}

fn graded_to_class(g: &GradedExpr, n: usize) -> Result<GammaElem> {
    let mut acc = GammaElem::zero(n, n, Basis::Q)?;
    for (j, e) in g.iter() {
        acc = acc.add(&expr_to_class(e).scale(&LaurentPoly::q_pow(j)))?;
    }
    Ok(acc)
}

fn id_msq_bins(max: usize, exec: Execution) -> CheckReport {
    let cases: Vec<(usize, usize, usize, usize)> = square_cases(max)
        .into_iter()
        .filter(|&(_, t, p)| p >= t + 2)
        .flat_map(|(n, t, p)| (0..=t).map(move |s| (n, s, t, p)))
        .collect();
    sweep("id-msq-bins", exec, cases, |&(n, s, t, p)| {
        let ms = &addq_multiplicities_d(n, t, p)?[s];
        let (n, s, t, p) = (n as i64, s as i64, t as i64, p as i64);
        let lhs = ms - &(&qbinom(n - s - 1, p - s - 1) * &qbinom(p - s - 2, p - t - 2)).shift(t - s);
        let rhs = (&qbinom(n - s - 1, p - s) * &qbinom(p - s - 1, p - t - 1)).shift(p - s);
        Ok(lhs == rhs)
    })
}

fn qpdp(max: usize, exec: Execution) -> CheckReport {
    let cases: Vec<(usize, usize)> =
        (1..=max + 2).flat_map(|n| (1..=n).map(move |p| (n, p))).collect();
    sweep("qpdp", exec, cases, |&(n, p)| {
        let g = GradedExpr::from_class(&addq_class_d(n, p - 1, p)?)?;
        Ok(g.get(0).is_none() && g.get(1) == Some(&ModuleExpr::single(n, n, Basis::Q, p - 1)?))
    })
}

fn addq_nonnegative(max: usize, exec: Execution) -> CheckReport {
    sweep("addq-nonnegative", exec, square_cases(max), |&(n, t, p)| {
        Ok(addq_multiplicities_d(n, t, p)?.iter().all(LaurentPoly::has_nonnegative_coeffs))
    })
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn euler_closed_form(max: usize, exec: Execution) -> CheckReport {
    sweep("euler-closed-form", exec, t_below_p(max + 2), |&(m, n, t, p)| {
        let chi = euler_chi(&h_class_d(m, n, t, p)?, 0)?;
        let (m, n, t, p) = (m as i64, n as i64, t as i64, p as i64);
        Ok(chi == binom(n, p) * binom(p - 1, t) * sign((p - t) + p * (m - n)))
    })
}

fn euler_recurrence(max: usize, exec: Execution) -> CheckReport {
    sweep("euler-recurrence", exec, t_below_p(max + 2), |&(m, n, t, p)| chi_recurrence_check(m, n, t, p))
}

fn binomial_identity(max: usize, exec: Execution) -> CheckReport {
    let cases: Vec<(i64, i64, i64)> = (1..=2 * max as i64)
        .flat_map(|n| (1..=n).flat_map(move |p| (0..p).map(move |t| (n, t, p))))
        .collect();
    sweep("binomial-identity", exec, cases, |&(n, t, p)| {
        let mut lhs = BigInt::from(0);
        for s in t + 1..=p {
            lhs += binom(n, s) * binom(s - 1, t) * binom(n - 1 - s, p - s) * sign(s - t);
        }
        Ok(lhs == binom(n - 1, t) * sign(p - t) - binom(n - 1, p))
    })
}

fn iterate_deterministic(max: usize, exec: Execution) -> CheckReport {
    let cases: Vec<(usize, usize)> = shapes_up_to(max.min(5));
    sweep("iterate-deterministic", exec, cases, |&(m, n)| {
        let chain: Vec<usize> = (0..n).collect();
        let a = iterate_loccoh_with(Execution::Sequential, Start::S, n, m, n, &chain)?;
        let b = iterate_loccoh_with(Execution::Parallel, Start::S, n, m, n, &chain)?;
        Ok(a == b && a.to_string() == b.to_string())
    })
}

fn lyub_cases(top: usize) -> Vec<(usize, usize, usize)> {
    shapes_up_to(top).into_iter().flat_map(|(m, n)| (0..n).map(move |p| (m, n, p))).collect()
}

fn lyub_cross_check(max: usize, exec: Execution) -> CheckReport {
    sweep("lyub-cross-check", exec, lyub_cases(max), |&(m, n, p)| {
        Ok(lyub_gf(m, n, p)? == lyub_gf_via_iteration(m, n, p)?)
    })
}

fn lyub_highest(max: usize, exec: Execution) -> CheckReport {
    sweep("lyub-highest", exec, lyub_cases(max + 2), |&(m, n, p)| {
        let d = ring_dim(m, n, p) as i64;
        Ok(lyub_gf(m, n, p)?.coeff(d, d) == BigInt::from(1))
    })
}

fn lyub_factorization(max: usize, exec: Execution) -> CheckReport {
    let cases: Vec<(usize, usize, usize)> = lyub_cases(max + 2).into_iter().filter(|&(m, n, _)| m > n).collect();
    sweep("lyub-factorization", exec, cases, |&(m, n, p)| {
        let (m, n, p) = (m as i64, n as i64, p as i64);
        let mut acc = BiPoly::zero();
        for s in 0..=p {
            let q_part = crate::shapes::qbinom_sq(n, s).shift(s * s + s * (m - n));
            let w_part = crate::shapes::qbinom_sq(n - 1 - s, p - s).shift(p * p + 2 * p + s * (m + n - 2 * p - 2));
            acc = &acc + &BiPoly::product(&q_part, &w_part);
        }
        Ok(acc == lyub_gf(m as usize, n as usize, p as usize)?)
    })
}

fn lyub_square_substitution(_max: usize, exec: Execution) -> CheckReport {
    sweep("lyub-square-substitution", exec, vec![(2usize, 1usize), (4, 2)], |&(n, p)| {
        Ok(lyub_gf_nonsquare_formula(n, n, p)? != lyub_gf(n, n, p)?)
    })
}

fn witness_cases(max: usize) -> Vec<(usize, usize, usize, usize)> {
    shapes_up_to(max.min(4))
        .into_iter()
        .flat_map(|(m, n)| (0..=n).flat_map(move |p| (1..=n).map(move |a| (m, n, p, a))))
        .collect()
}

fn witness_pairing_values(max: usize, exec: Execution) -> CheckReport {
    sweep("witness-pairing", exec, witness_cases(max), |&(m, n, p, a)| {
        let got = witness_pairing(m, n, p, a, (m + n) as i64)?;
        let expected = if a == p {
            crate::shapes::qbinom_sq(n as i64, p as i64).shift((p * (m - n)) as i64)
        } else {
            LaurentPoly::zero()
        };
        Ok(got == expected)
    })
}

fn witness_stabilization(max: usize, exec: Execution) -> CheckReport {
    sweep("witness-stabilization", exec, witness_cases(max), |&(m, n, p, a)| {
        let base = (m + n) as i64;
        let first = witness_pairing(m, n, p, a, base)?;
        for d in base + 1..=base + 3 {
            if witness_pairing(m, n, p, a, d)? != first {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

fn h1m_criterion(max: usize, exec: Execution) -> CheckReport {
    let mut cases = Vec::new();
    for n in 1..=max {
        for nu in crate::characters::dominant_weights(n, -3, 3) {
            for l in 0..=n {
                if (1..l).all(|i| nu.get(i) == nu.get(i + 1)) {
                    cases.push((n, nu.clone(), l));
                }
            }
        }
    }
    sweep("h1m-criterion", exec, cases, |(n, nu, l)| {
        let out = j_h1m_vanishes(*n, nu, *l)?;
        if out.vanishes() != j_h1m_closed(*n, nu, *l) {
            return Ok(false);
        }
        // A claimed witness must satisfy dominance.
        Ok(match out {
            crate::characters::H1mOutcome::NonVanishing(w) => w.alpha.is_dominant() && w.alpha.len() == *n,
            crate::characters::H1mOutcome::Vanishes => true,
        })
    })
}

fn h_axd_count(max: usize, exec: Execution) -> CheckReport {
    let cases: Vec<(usize, usize, usize, i64)> = shapes_up_to(max.min(5))
        .into_iter()
        .flat_map(|(m, n)| (1..=n).flat_map(move |a| (1..=4i64).map(move |d| (m, n, a, d))))
        .collect();
    sweep("h-axd-count", exec, cases, |&(m, n, a, d)| {
        let k = (a as i64).min(d) as usize;
        let count = partitions_in_rectangle(k, n - a).len() * partitions_in_rectangle(m - a, k).len();
        let closed = binom((k + n - a) as i64, (n - a) as i64) * binom((m - a + k) as i64, (m - a) as i64);
        Ok(h_axd(m, n, a, d)?.len() == count && BigInt::from(count) == closed)
    })
}

fn dp_self_consistency(max: usize, exec: Execution) -> CheckReport {
    let cases: Vec<(usize, usize, usize)> =
        shapes_up_to(max.min(4)).into_iter().flat_map(|(m, n)| (0..=n).map(move |p| (m, n, p))).collect();
    sweep("dp-self-consistency", exec, cases, |&(m, n, p)| {
        let c = char_of(&CharKind::D(p), m, n, Some(3))?;
        Ok(c.terms().iter().all(|(pair, mult)| {
            pair.lambda() == &lambda_p(m, n, p, pair.mu()) && in_dp_range(m, n, p, pair) && mult == &LaurentPoly::one()
        }))
    })
}

fn quiver_socle(max: usize, exec: Execution) -> CheckReport {
    let cases: Vec<(usize, usize)> = (0..=max + 2).flat_map(|n| (0..=n).map(move |p| (p, n))).collect();
    sweep("quiver-socle", exec, cases, |&(p, n)| {
        let q = build_rep(RepKind::Q, p, n)?;
        Ok(check_relations(&q) && simple_socle(&q) == vec![(p, 1)])
    })
}

fn quiver_quotients(max: usize, exec: Execution) -> CheckReport {
    let cases: Vec<(usize, usize, u32)> = (0..=max)
        .flat_map(|n| (0..=n).flat_map(move |p| (0..1u32 << (p + 1)).map(move |mask| (p, n, mask))))
        .collect();
    sweep("quiver-quotients", exec, cases, |&(p, n, mask)| {
        let q = build_rep(RepKind::Q, p, n)?;
        let spans: Vec<Vec<Vec<i64>>> =
            (0..=n).map(|v| if v <= p && mask & (1 << v) != 0 { vec![vec![1]] } else { vec![] }).collect();
        let lowest = (0..=p).find(|v| mask & (1 << v) != 0);
        let is_tail = lowest.is_none_or(|k| (k..=p).all(|v| mask & (1 << v) != 0));
        match quotient(&q, &int_subspaces(&spans)) {
            Err(_) => Ok(!is_tail),
            Ok(quot) => {
                let mut expected = vec![0; n + 1];
                let k = lowest.unwrap_or(p + 1);
                if k > 0 {
                    expected[k - 1] = 1;
                }
                Ok(is_tail && decompose_addq(&quot) == AddQDecomposition::Sum(expected))
            }
        }
    })
}

fn quiver_indecomposable(max: usize, exec: Execution) -> CheckReport {
    let cases: Vec<(usize, usize)> = (0..=max).flat_map(|n| (0..=n).map(move |p| (p, n))).collect();
    sweep("quiver-indecomposable", exec, cases, |&(p, n)| {
        let q = build_rep(RepKind::Q, p, n)?;
        let mut expected = vec![0; n + 1];
        expected[p] = 1;
        Ok(simple_socle(&q).len() == 1 && decompose_addq(&q) == AddQDecomposition::Sum(expected))
    })
}

fn invertible(k: usize, rng: &mut StdRng) -> Vec<Vec<i64>> {
    let mut lower = vec![vec![0i64; k]; k];
    let mut upper = vec![vec![0i64; k]; k];
    for i in 0..k {
        lower[i][i] = 1;
        upper[i][i] = 1;
        for j in 0..i {
            lower[i][j] = rng.gen_range(-2..=2);
            upper[j][i] = rng.gen_range(-2..=2);
        }
    }
    (0..k).map(|i| (0..k).map(|j| (0..k).map(|t| lower[i][t] * upper[t][j]).sum()).collect()).collect()
}

fn quiver_addq_round_trip(max: usize, exec: Execution) -> CheckReport {
    let mut rng = StdRng::seed_from_u64(SEED ^ 3);
    // (n, multiplicities, per-vertex change of basis)
    type Case = (usize, Vec<u64>, Vec<Vec<Vec<i64>>>);
    let cases: Vec<Case> = (0..10 * max)
        .map(|_| {
            let n = rng.gen_range(0..=max);
            let mult: Vec<u64> = (0..=n).map(|_| rng.gen_range(0..=2)).collect();
            let dims: Vec<usize> = (0..=n).map(|v| mult[v..].iter().sum::<u64>() as usize).collect();
            let g = dims.iter().map(|&k| invertible(k, &mut rng)).collect();
            (n, mult, g)
        })
        .collect();
    sweep("quiver-addq-round-trip", exec, cases, |(n, mult, g)| {
        let r = q_sum(mult, *n)?.change_basis(g)?;
        Ok(check_relations(&r) && decompose_addq(&r) == AddQDecomposition::Sum(mult.clone()))
    })
}

fn quiver_ext(max: usize, exec: Execution) -> CheckReport {
    let cases: Vec<(usize, usize, usize)> = (0..=max.min(5))
        .flat_map(|n| (0..=n).flat_map(move |i| (0..=n).map(move |j| (n, i, j))))
        .collect();
    sweep("quiver-ext", exec, cases, |&(n, i, j)| {
        Ok(ext1_dim(&build_rep(RepKind::Q, i, n)?, &build_rep(RepKind::Q, j, n)?)? == 0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut names: Vec<&str> = checks().into_iter().map(|(n, _, _)| n).collect();
        let total = names.len();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), total);
    }

    #[test]
    fn small_suite_passes() {
        let reports = run_suite("all", 3, Execution::default()).unwrap();
        assert_eq!(reports.len(), checks().len());
        for r in &reports {
            assert!(r.passed(), "{r}");
            assert!(r.cases > 0, "{} ran no cases", r.name);
        }
    }

    #[test]
    fn selection_by_module_and_name() {
        assert_eq!(run_suite("quiver", 2, Execution::Sequential).unwrap().len(), 5);
        assert_eq!(run_suite("parity", 2, Execution::Sequential).unwrap().len(), 1);
        assert!(run_suite("nonsense", 2, Execution::Sequential).is_none());
    }

    #[test]
    fn report_rendering() {
        let pass = CheckReport { name: "x", cases: 3, failures: vec![] };
        assert_eq!(pass.to_string(), "PASS x (3 cases)");
        let fail = CheckReport { name: "y", cases: 3, failures: vec!["(1, 2)".into()] };
        assert_eq!(fail.to_string(), "FAIL y (1 of 3 cases failed; first: (1, 2))");
    }
}
