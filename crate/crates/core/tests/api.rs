use detloc::characters::{char_of, pairing_gl, CharKind};
use detloc::grothendieck::{class_to_expr, expr_to_class, pairing_d, Basis, GammaElem};
use detloc::loccoh::{h_class_d, h_class_s, iterate_loccoh, iterate_loccoh_with, start_expr, Start};
use detloc::lyubeznik::{lyub_gf, lyub_gf_via_iteration, lyub_table, ring_dim};
use detloc::quiver::{build_rep, decompose_addq, direct_sum, AddQDecomposition, RepKind};
use detloc::shapes::qbinom;
use detloc::{Execution, LaurentPoly};
use proptest::prelude::*;

#[test]
fn lyubeznik_tables_are_upper_triangular_with_unit_corner() {
    for (m, n) in [(3, 2), (4, 3), (4, 4), (5, 5), (6, 3)] {
        for p in 0..n {
            let table = lyub_table(&lyub_gf(m, n, p).unwrap(), m, n, p).unwrap();
            let d = ring_dim(m, n, p);
            assert_eq!(table.dim(), d);
            assert_eq!(table.entry(d, d), &1.into());
            assert!(table.nonzero().iter().all(|&(i, j, _)| i <= j));
        }
    }
}

#[test]
fn iterated_degree_zero_groups_match_lyubeznik_numbers() {
    // The O_0 part of the O_0 <- O_p chain is exactly the generating function.
    for (m, n, p) in [(3, 2, 1), (4, 4, 2), (5, 3, 1)] {
        let tab = iterate_loccoh(Start::S, n, m, n, &[0, p]).unwrap();
        let mn = (m * n) as i64;
        let mut total = detloc::BiPoly::zero();
        for (degrees, module) in tab.entries() {
            total.add_term(degrees[0], mn - degrees[1], module.mult()[0].into());
        }
        assert_eq!(total, lyub_gf(m, n, p).unwrap(), "({m},{n},{p})");
        assert_eq!(total, lyub_gf_via_iteration(m, n, p).unwrap());
    }
}

#[test]
fn square_start_expressions_round_trip_through_classes() {
    for n in 1..=5 {
        for t in 0..n {
            let graded = start_expr(Start::S, n, n, n, t).unwrap();
            let mut class = GammaElem::zero(n, n, Basis::Q).unwrap();
            for (j, e) in graded.iter() {
                assert_eq!(class_to_expr(&expr_to_class(e)).unwrap(), *e);
                class = class.add(&expr_to_class(e).scale(&LaurentPoly::q_pow(j))).unwrap();
            }
            assert_eq!(class.change_basis(Basis::D).unwrap(), h_class_s(n, n, t).unwrap());
        }
    }
}

#[test]
fn truncated_characters_do_not_pair_with_each_other() {
    let s = char_of(&CharKind::S, 2, 2, Some(1)).unwrap();
    let d = char_of(&CharKind::D(1), 2, 2, Some(1)).unwrap();
    assert!(pairing_gl(&s, &d).is_err());
    assert!(!s.is_empty() && s.terms().keys().all(|pair| pair.lambda() == pair.mu()));
}

#[test]
fn quiver_sums_decompose() {
    let a = build_rep(RepKind::Q, 1, 3).unwrap();
    let b = build_rep(RepKind::Q, 3, 3).unwrap();
    let sum = direct_sum(&a, &b).unwrap();
    assert_eq!(decompose_addq(&sum), AddQDecomposition::Sum(vec![0, 1, 0, 1]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d_pairing_reads_off_components(m in 1usize..=6, dn in 0usize..=2, tp in 0usize..=5) {
        let n = m.saturating_sub(dn).max(1);
        let p = 1 + tp % n;
        let t = tp % p;
        let h = h_class_d(m, n, t, p).unwrap();
        for s in 0..=n {
            let ds = GammaElem::basis_elem(m, n, Basis::D, s).unwrap();
            prop_assert_eq!(&pairing_d(&h, &ds).unwrap(), h.coeff(s));
        }
        // Nothing above the orbit of the support.
        prop_assert!((t + 1..=n).all(|s| h.coeff(s).is_zero()));
    }

    #[test]
    fn iteration_is_mode_independent(m in 2usize..=5, dn in 0usize..=2, mask in 0u8..16) {
        let n = m.saturating_sub(dn).max(1);
        let chain: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let a = iterate_loccoh_with(Execution::Sequential, Start::S, n, m, n, &chain).unwrap();
        let b = iterate_loccoh_with(Execution::Parallel, Start::S, n, m, n, &chain).unwrap();
        prop_assert_eq!(a.to_json().to_string(), b.to_json().to_string());
    }

    #[test]
    fn qbinom_counts_subsets(a in 0i64..=14, b in 0i64..=14) {
        let expected = detloc::shapes::binom(a, b);
        prop_assert_eq!(qbinom(a, b).eval(1).unwrap(), expected);
    }
}
