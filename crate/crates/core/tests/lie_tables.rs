//! Lie algebras against the tabulated rows, for every signature with at most
//! six generators, plus the consistency of the dimension formulas.

use ga_core::dims::{dim_a_comb, dim_a_trig, dim_b_comb, dim_b_trig, dim_q_comb, dim_q_trig, dim_qt_comb, dim_qt_trig};
use ga_core::groups::GroupId;
use ga_core::lie::{check_lie, exp_nilpotent_check, known_table_erratum, lie_algebra, to_multivector};
use ga_core::{GaError, Rational, Signature};

fn signatures(max_n: usize) -> impl Iterator<Item = Signature> {
    (1..=max_n).flat_map(Signature::all_with_n)
}

#[test]
fn computed_algebras_match_rows_except_known_errata() {
    let mut checked = 0;
    for sig in signatures(6) {
        for g in GroupId::GENERALIZED {
            let c = check_lie(g, &sig).unwrap();
            assert!(c.linearizations_agree, "{g} in {sig}");
            assert!(c.closed, "{g} in {sig}");
            let passed = c.passed().unwrap_or_else(|| panic!("{g} in {sig} has no row"));
            assert_eq!(!passed, known_table_erratum(g, &sig).is_some(), "{g} in {sig}");
            checked += 1;
        }
    }
    assert_eq!(checked, 12 * 83);
}

#[test]
fn classical_and_auxiliary_groups_have_no_row() {
    for sig in signatures(4) {
        for g in [GroupId::Gamma, GroupId::GammaPM, GroupId::AuxAc, GroupId::AuxBc] {
            let c = check_lie(g, &sig).unwrap();
            assert!(matches!(c.expected, Err(GaError::NoTableRow(_))), "{g} in {sig}");
            assert!(c.closed && c.linearizations_agree, "{g} in {sig}");
        }
    }
}

#[test]
fn erratum_rows_differ_by_one_pseudoscalar() {
    for sig in signatures(6) {
        for g in [GroupId::A23, GroupId::Qt23] {
            if known_table_erratum(g, &sig).is_none() {
                continue;
            }
            let c = check_lie(g, &sig).unwrap();
            let expected = c.expected.as_ref().unwrap();
            let table = expected.span.to_linear();
            let (small, large) = if g == GroupId::A23 { (&table, &c.computed) } else { (&c.computed, &table) };
            assert!(small.is_subspace_of(large), "{g} in {sig}");
            assert_eq!(small.dim() + 1, large.dim(), "{g} in {sig}");
            assert!(!small.contains(&ga_core::SparseVec::unit(sig.full_mask() as usize)), "{g} in {sig}");
        }
    }
}

#[test]
fn printed_dimension_for_seven_generators_undercounts() {
    for (p, q) in [(1, 0), (0, 1)] {
        let sig = Signature::with_limit(p, q, 6, 7).unwrap();
        let c = check_lie(GroupId::Qt01, &sig).unwrap();
        let expected = c.expected.as_ref().unwrap();
        assert_eq!(c.span_matches(), Some(true));
        assert_eq!((c.computed.dim(), expected.dim), (91, 86));
        assert!(known_table_erratum(GroupId::Qt01, &sig).is_some());
    }
}

#[test]
fn exponentials_of_nilpotent_directions_are_members() {
    for sig in signatures(4).filter(|s| s.r() >= 1) {
        for g in GroupId::GENERALIZED {
            let algebra = lie_algebra(g, &sig).unwrap();
            for v in algebra.basis() {
                let u = to_multivector(v);
                if u.terms().iter().all(|(b, _)| sig.in_radical(*b)) {
                    assert!(exp_nilpotent_check(g, &sig, &u).unwrap(), "{g} in {sig}: exp({u})");
                }
            }
        }
    }
}

#[test]
fn dimension_closed_forms_match_binomial_sums() {
    let int = |x: u64| Rational::from_integer(x as i64);
    for n in 1..=12 {
        for k in 0..4 {
            assert_eq!(dim_qt_trig(n, k), int(dim_qt_comb(n, k)), "C^{k} with n = {n}");
        }
        for r in 0..=n {
            assert_eq!(dim_a_trig(n, r), int(dim_a_comb(n, r)), "dim_A({n}, {r})");
            assert_eq!(dim_b_trig(n, r), int(dim_b_comb(n, r)), "dim_B({n}, {r})");
            assert_eq!(dim_q_trig(n, r), int(dim_q_comb(n, r)), "dim_Q({n}, {r})");
        }
    }
}
