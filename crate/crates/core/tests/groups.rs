//! Group-level properties: agreement of the two membership forms, the
//! inclusions between the groups, closure, kernel identities, the reduction
//! of the tilde-family norm sets without null generators, and factorization.

use ga_core::groups::{
    factor, kernel_of_rep, known_relation_erratum, member, sample_group_member, sample_invertible, GroupId, MemberContext, MembershipMode,
    NormForm, Representation,
};
use ga_core::subspaces::SubspaceName;
use ga_core::{BladeSubspace, Multivector, Rational, Signature};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use MembershipMode::{Norm, Stabilizer};

fn signatures(max_n: usize) -> impl Iterator<Item = Signature> {
    (1..=max_n).flat_map(Signature::all_with_n)
}

fn both_modes(sig: &Signature, g: GroupId, t: &Multivector) -> (bool, bool) {
    let ctx = MemberContext::new(sig, t);
    (ctx.member(g, Stabilizer).unwrap(), ctx.member(g, Norm).unwrap())
}

#[test]
fn sampled_members_satisfy_both_forms() {
    for sig in signatures(4) {
        for g in GroupId::TWO_FORMS {
            for seed in 0..8 {
                let t = sample_group_member(g, &sig, seed).unwrap();
                assert_eq!(both_modes(&sig, g, &t), (true, true), "{g} in {sig}, seed {seed}: {t}");
            }
        }
    }
}

#[test]
fn forms_agree_on_random_invertibles() {
    for sig in signatures(3) {
        for seed in 0..25 {
            let s = sample_invertible(&sig, seed, 3).unwrap();
            let ctx = MemberContext::with_inverse(&sig, &s.value, s.inverse.clone());
            for g in GroupId::TWO_FORMS {
                let stab = ctx.member(g, Stabilizer).unwrap();
                let norm = ctx.member(g, Norm).unwrap();
                assert_eq!(stab, norm, "{g} in {sig}, seed {seed}");
            }
        }
    }
}

const INCLUSIONS: [(GroupId, GroupId); 6] = [
    (GroupId::Ac12, GroupId::A23),
    (GroupId::Bc01, GroupId::B12),
    (GroupId::A01, GroupId::A23),
    (GroupId::B12, GroupId::B03),
    (GroupId::Bc01, GroupId::Bc23),
    (GroupId::Qt12, GroupId::Qt03),
];

#[test]
fn inclusions_hold_on_members_of_the_smaller_group() {
    for sig in signatures(5) {
        for (small, big) in INCLUSIONS {
            for seed in 0..6 {
                let t = sample_group_member(small, &sig, seed).unwrap();
                assert!(member(&sig, big, &t, Norm).unwrap(), "{small} not inside {big} in {sig}: {t}");
                assert!(member(&sig, big, &t, Stabilizer).unwrap(), "{small} not inside {big} in {sig}: {t}");
            }
        }
    }
}

#[test]
fn inclusions_hold_on_random_invertibles() {
    for sig in signatures(4) {
        for seed in 100..120 {
            let s = sample_invertible(&sig, seed, 3).unwrap();
            let ctx = MemberContext::with_inverse(&sig, &s.value, s.inverse.clone());
            for (small, big) in INCLUSIONS {
                if ctx.member(small, Norm).unwrap() {
                    assert!(ctx.member(big, Norm).unwrap(), "{small} not inside {big} in {sig}, seed {seed}");
                }
            }
        }
    }
}

#[test]
fn pairs_coincide_for_even_n() {
    let pairs = [(GroupId::Ac12, GroupId::A23), (GroupId::Bc01, GroupId::B12)];
    for sig in signatures(5).filter(|s| s.n() % 2 == 0) {
        for (a, b) in pairs {
            let mut disagreements = 0;
            for seed in 0..10 {
                for g in [a, b] {
                    let t = sample_group_member(g, &sig, seed).unwrap();
                    let (x, y) = (member(&sig, a, &t, Norm).unwrap(), member(&sig, b, &t, Norm).unwrap());
                    if x != y {
                        assert!(y && !x, "{a} exceeds {b} in {sig}: {t}");
                        disagreements += 1;
                    }
                }
            }
            let erratum = known_relation_erratum(a, b, &sig).is_some();
            assert_eq!(disagreements > 0, erratum, "{a} vs {b} in {sig}");
        }
    }
}

#[test]
fn pseudoscalar_shift_separates_the_pair_when_every_cubic_blade_is_null() {
    for (p, q, r) in [(2, 0, 2), (1, 1, 2), (0, 2, 2), (1, 0, 3), (0, 1, 3)] {
        let sig = Signature::new(p, q, r).unwrap();
        let t = &Multivector::one() + &Multivector::blade(sig.full_mask());
        assert_eq!(both_modes(&sig, GroupId::A23, &t), (true, true), "{sig}");
        assert_eq!(both_modes(&sig, GroupId::Ac12, &t), (false, false), "{sig}");
    }
}

/// Norm set intersected with the type the norm function always lands in.
fn effective(sig: &Signature, set: BladeSubspace, conjugate: bool) -> Vec<u32> {
    let codomain = SubspaceName::Qt(if conjugate { 0b1001 } else { 0b0011 }).instantiate(sig);
    set.intersect(&codomain).blades().to_vec()
}

#[test]
fn tilde_norm_sets_reduce_without_null_generators() {
    for n in 4..=8 {
        for sig in Signature::all_with_n(n).filter(|s| s.r() == 0) {
            let scalar = vec![0u32];
            let scalar_top = effective(&sig, BladeSubspace::new(n, [0, sig.full_mask()]), false);
            let scalar_top_chi = effective(&sig, BladeSubspace::new(n, [0, sig.full_mask()]), true);
            for g in [GroupId::Qt01, GroupId::Qt23, GroupId::Qt12, GroupId::Qt03] {
                let NormForm::Conditions { psi: Some(psi), chi: Some(chi) } = g.norm_form() else {
                    panic!("{g} has two norm conditions");
                };
                let psi = effective(&sig, psi.instantiate(&sig).unwrap(), false);
                let chi = effective(&sig, chi.instantiate(&sig).unwrap(), true);
                let (want_psi, want_chi) = match g {
                    GroupId::Qt01 | GroupId::Qt23 => (&scalar_top, &scalar),
                    _ => (&scalar, &scalar_top_chi),
                };
                assert_eq!((&psi, &chi), (want_psi, want_chi), "{g} in {sig}");
            }
        }
    }
}

#[test]
fn tilde_groups_match_the_classical_pairs() {
    for n in [5usize, 6, 7] {
        for sig in Signature::all_with_n(n).filter(|s| s.r() == 0) {
            let center = SubspaceName::Center.instantiate(&sig);
            let q = (effective(&sig, center.clone(), false), effective(&sig, center, true));
            let q_pm = (vec![0u32], vec![0u32]);
            let sets = |g: GroupId| {
                let NormForm::Conditions { psi: Some(a), chi: Some(b) } = g.norm_form() else { unreachable!() };
                (effective(&sig, a.instantiate(&sig).unwrap(), false), effective(&sig, b.instantiate(&sig).unwrap(), true))
            };
            let expected: [&(Vec<u32>, Vec<u32>); 4] = match n % 4 {
                1 => [&q, &q, &q_pm, &q_pm],
                2 => [&q_pm; 4],
                _ => [&q_pm, &q_pm, &q, &q],
            };
            for (g, want) in [GroupId::Qt01, GroupId::Qt23, GroupId::Qt12, GroupId::Qt03].into_iter().zip(expected) {
                assert_eq!(&sets(g), want, "{g} in {sig}");
            }
        }
    }
}

#[test]
fn products_and_inverses_of_members_stay_members() {
    for sig in signatures(4) {
        for g in GroupId::GENERALIZED.into_iter().chain([GroupId::AuxAc, GroupId::AuxBc]) {
            for seed in 0..4 {
                let a = sample_group_member(g, &sig, seed).unwrap();
                let b = sample_group_member(g, &sig, seed + 1000).unwrap();
                let ab = sig.gp(&a, &b);
                let a_inv = sig.inverse(&a).unwrap();
                for t in [&ab, &a_inv] {
                    assert!(member(&sig, g, t, Norm).unwrap(), "{g} in {sig}: {t}");
                    if g != GroupId::AuxAc {
                        assert!(member(&sig, g, t, Stabilizer).unwrap(), "{g} in {sig}: {t}");
                    }
                }
            }
        }
    }
}

fn random_in(s: &BladeSubspace, rng: &mut ChaCha8Rng) -> Multivector {
    Multivector::from_terms(s.blades().iter().map(|&b| (b, Rational::from_integer(rng.random_range(-3..=3)))))
}

#[test]
fn trivial_action_matches_the_kernel() {
    let reps = [Representation::Ad, Representation::AdCheck, Representation::AdTilde];
    for sig in signatures(4) {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for rep in reps {
            let kernel = kernel_of_rep(rep, &sig);
            for seed in 0..20 {
                let t = if seed % 2 == 0 {
                    random_in(&kernel, &mut rng)
                } else {
                    sample_invertible(&sig, seed, 3).unwrap().value
                };
                if !sig.is_invertible(&t) {
                    continue;
                }
                let trivial = MemberContext::new(&sig, &t).acts_trivially(rep);
                assert_eq!(trivial, kernel.contains_mv(&t), "{rep} in {sig}: {t}");
            }
        }
    }
}

#[test]
fn factorizations_reconstruct_their_input() {
    for sig in signatures(4).filter(|s| s.r() >= 1) {
        for g in GroupId::FACTORABLE {
            for seed in 0..6 {
                let t = sample_group_member(g, &sig, seed).unwrap();
                let f = factor(&sig, g, &t).unwrap();
                assert_eq!(sig.gp(&f.t0, &f.y), t);
                assert!(member(&sig, f.base, &f.t0, Norm).unwrap());
                assert!(sig.is_invertible(&f.y));
            }
        }
    }
}

#[test]
fn non_invertible_elements_are_never_members() {
    let sig = Signature::new(1, 0, 2).unwrap();
    let t = &Multivector::blade(0b010) + &Multivector::blade(0b100);
    for g in GroupId::ALL {
        assert!(!member(&sig, g, &t, Norm).unwrap(), "{g}");
    }
}
