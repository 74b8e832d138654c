//! Closed-form centralizers against brute-force kernels for every signature
//! with at most six generators.

use ga_core::centralizers::{check_closed_form, printed_z2z3_misses_top, CentralizerTarget};
use ga_core::centralizers::{centralizer_closed_form, CentralizerKind};
use ga_core::subspaces::SubspaceName;
use ga_core::{centralizer_bruteforce, Signature};

fn signatures(max_n: usize) -> impl Iterator<Item = Signature> {
    (1..=max_n).flat_map(Signature::all_with_n)
}

#[test]
fn closed_forms_equal_brute_force_except_the_printed_intersection() {
    let mut misses = Vec::new();
    for sig in signatures(6) {
        for target in CentralizerTarget::closed_form_targets() {
            let check = check_closed_form(&sig, target).unwrap();
            if !check.equal {
                assert!(printed_z2z3_misses_top(&sig, target), "{target} in {sig}");
                assert_eq!(check.closed_form_dim + 1, check.bruteforce_dim, "{target} in {sig}");
                misses.push(sig);
            } else {
                assert!(!printed_z2z3_misses_top(&sig, target), "{target} in {sig}");
            }
        }
    }
    assert_eq!(misses.len(), 15);
}

#[test]
fn printed_intersection_only_lacks_the_pseudoscalar() {
    for sig in signatures(6).filter(|s| printed_z2z3_misses_top(s, CentralizerTarget::Z2capZ3)) {
        let printed = centralizer_closed_form(&sig, CentralizerTarget::Z2capZ3).unwrap();
        let corrected = printed.union(&SubspaceName::Top.instantiate(&sig));
        assert_eq!(corrected.to_linear(), CentralizerTarget::Z2capZ3.bruteforce(&sig), "{sig}");
    }
}

#[test]
fn centralizer_of_everything_is_the_center() {
    for sig in signatures(6) {
        let full = SubspaceName::Full.instantiate(&sig);
        let z = centralizer_bruteforce(&sig, &full, CentralizerKind::Plain);
        assert_eq!(z, SubspaceName::Center.instantiate(&sig).to_linear(), "{sig}");
    }
}
