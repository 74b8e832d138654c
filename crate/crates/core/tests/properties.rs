//! Property suite for the algebra kernel: the geometric product against an
//! independent word-reduction oracle, the involutions, grading, inverses,
//! the nilpotent structure of the Grassmann part, and the norm codomains.

use ga_core::centralizers::CentralizerTarget;
use ga_core::groups::sample_invertible;
use ga_core::signature::grade;
use ga_core::subspaces::SubspaceName;
use ga_core::{BladeSubspace, Multivector, Rational, Signature};
use proptest::prelude::*;

const CASES: u32 = 256;

fn sig_strategy(min_n: usize, max_n: usize, min_r: usize) -> impl Strategy<Value = Signature> {
    (min_n..=max_n)
        .prop_flat_map(move |n| (Just(n), min_r.min(n)..=n))
        .prop_flat_map(|(n, r)| (Just(n), Just(r), 0..=n - r))
        .prop_map(|(n, r, p)| Signature::new(p, n - r - p, r).unwrap())
}

/// Coefficients in [-3, 3] with roughly half of them zero.
fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![Just(0i64), -3i64..=3], 64)
}

fn mv_on(sig: &Signature, c: &[i64], keep: impl Fn(u32) -> bool) -> Multivector {
    Multivector::from_terms(
        (0..sig.dim() as u32).filter(|&b| keep(b)).map(|b| (b, Rational::from_integer(c[b as usize]))),
    )
}

fn mv(sig: &Signature, c: &[i64]) -> Multivector {
    mv_on(sig, c, |_| true)
}

fn in_span(s: &BladeSubspace, x: &Multivector) -> bool {
    x.terms().iter().all(|(b, _)| s.contains(*b))
}

/// Blade product by reducing the concatenated generator word: adjacent
/// swaps of distinct generators flip the sign, equal neighbours contract to
/// their square.
fn oracle_blade_product(sig: &Signature, a: u32, b: u32) -> (i64, u32) {
    let gens = |m: u32| (0..sig.n()).filter(move |i| m >> i & 1 == 1);
    let mut word: Vec<usize> = gens(a).chain(gens(b)).collect();
    let mut sign = 1i64;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < word.len() {
            if word[i] > word[i + 1] {
                word.swap(i, i + 1);
                sign = -sign;
                changed = true;
            } else if word[i] == word[i + 1] {
                sign *= i64::from(sig.eta(word[i] + 1));
                word.drain(i..i + 2);
                changed = true;
                continue;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    (sign, word.iter().fold(0, |m, &g| m | 1 << g))
}

fn oracle_gp(sig: &Signature, x: &Multivector, y: &Multivector) -> Multivector {
    let mut acc = Multivector::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            let (s, m) = oracle_blade_product(sig, *a, *b);
            if s != 0 {
                let c = &(ca * cb) * &Rational::from_integer(s);
                acc = acc.add_scaled(&Multivector::blade(m), &c);
            }
        }
    }
    acc
}

fn lambda_grade(sig: &Signature, k: usize) -> BladeSubspace {
    SubspaceName::Lambda(k).instantiate(sig)
}

fn bruteforce_set(sig: &Signature, t: CentralizerTarget) -> BladeSubspace {
    BladeSubspace::from_linear(sig.n(), &t.bruteforce(sig)).expect("centralizers are coordinate subspaces")
}

proptest! {
    #![proptest_config(ProptestConfig { cases: CASES, ..ProptestConfig::default() })]

    #[test]
    fn product_matches_word_reduction(sig in sig_strategy(1, 6, 0), a in coeffs(), b in coeffs()) {
        let (x, y) = (mv(&sig, &a), mv(&sig, &b));
        prop_assert_eq!(sig.gp(&x, &y), oracle_gp(&sig, &x, &y));
    }

    #[test]
    fn product_is_associative(sig in sig_strategy(1, 6, 0), a in coeffs(), b in coeffs(), c in coeffs()) {
        let (x, y, z) = (mv(&sig, &a), mv(&sig, &b), mv(&sig, &c));
        prop_assert_eq!(sig.gp(&sig.gp(&x, &y), &z), sig.gp(&x, &sig.gp(&y, &z)));
    }

    #[test]
    fn product_is_bilinear(sig in sig_strategy(1, 6, 0), a in coeffs(), b in coeffs(), c in coeffs(), k in -3i64..=3) {
        let (x, y, z) = (mv(&sig, &a), mv(&sig, &b), mv(&sig, &c));
        let k = Rational::from_integer(k);
        let lhs = sig.gp(&x.add_scaled(&y, &k), &z);
        let rhs = sig.gp(&x, &z).add_scaled(&sig.gp(&y, &z), &k);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn involutions_respect_products(sig in sig_strategy(1, 6, 0), a in coeffs(), b in coeffs()) {
        let (x, y) = (mv(&sig, &a), mv(&sig, &b));
        let xy = sig.gp(&x, &y);
        prop_assert_eq!(xy.grade_involution(), sig.gp(&x.grade_involution(), &y.grade_involution()));
        prop_assert_eq!(xy.reversion(), sig.gp(&y.reversion(), &x.reversion()));
        prop_assert_eq!(xy.clifford_conjugate(), sig.gp(&y.clifford_conjugate(), &x.clifford_conjugate()));
        prop_assert_eq!(x.reversion().reversion(), x.clone());
        prop_assert_eq!(x.grade_involution().reversion(), x.clifford_conjugate());
    }

    #[test]
    fn grade_products_stay_within_bounds(sig in sig_strategy(1, 6, 0), a in coeffs(), b in coeffs(), j in 0usize..=6, k in 0usize..=6) {
        let x = mv(&sig, &a).grade_part(j);
        let y = mv(&sig, &b).grade_part(k);
        let lo = j.abs_diff(k);
        for (blade, _) in sig.gp(&x, &y).terms() {
            let g = grade(*blade);
            prop_assert!(g >= lo && g <= j + k && (g - lo).is_multiple_of(2), "grade {} from {} x {}", g, j, k);
        }
    }

    #[test]
    fn quaternion_types_are_joint_eigenspaces(sig in sig_strategy(1, 6, 0), a in coeffs(), k in 0u8..4) {
        let mask = 1u8 << k;
        let s = SubspaceName::Qt(mask).instantiate(&sig);
        let x = mv_on(&sig, &a, |b| s.contains(b));
        let (inv_sign, rev_sign) = [(1, 1), (-1, 1), (1, -1), (-1, -1)][k as usize];
        prop_assert_eq!(x.grade_involution(), x.scale(&Rational::from_integer(inv_sign)));
        prop_assert_eq!(x.reversion(), x.scale(&Rational::from_integer(rev_sign)));
        let y = mv(&sig, &a);
        let joint = |z: &Multivector| {
            z.grade_involution() == z.scale(&Rational::from_integer(inv_sign))
                && z.reversion() == z.scale(&Rational::from_integer(rev_sign))
        };
        prop_assert_eq!(joint(&y), in_span(&s, &y));
    }

    #[test]
    fn grade_and_type_decompositions_are_complete(sig in sig_strategy(1, 6, 0), a in coeffs()) {
        let x = mv(&sig, &a);
        let by_grade = (0..=sig.n()).fold(Multivector::zero(), |acc, k| &acc + &x.grade_part(k));
        prop_assert_eq!(&by_grade, &x);
        let types: Vec<BladeSubspace> = (0..4).map(|k| SubspaceName::Qt(1 << k).instantiate(&sig)).collect();
        let total = types.iter().try_fold(BladeSubspace::empty(sig.n()), |acc, s| acc.direct_sum(s));
        prop_assert_eq!(total.unwrap().dim(), sig.dim());
        let by_type = types.iter().fold(Multivector::zero(), |acc, s| &acc + &s.project(&x));
        prop_assert_eq!(by_type, x);
        prop_assert!(types[0].direct_sum(&types[0]).is_err() || types[0].dim() == 0);
    }

    #[test]
    fn inverses_round_trip(sig in sig_strategy(1, 6, 0), seed in any::<u64>()) {
        let s = sample_invertible(&sig, seed, 3).unwrap();
        prop_assert_eq!(sig.gp(&s.value, &s.inverse), Multivector::one());
        prop_assert_eq!(sig.gp(&s.inverse, &s.value), Multivector::one());
        prop_assert_eq!(sig.inverse(&s.value).unwrap(), s.inverse);
    }

    #[test]
    fn radical_elements_are_not_invertible(sig in sig_strategy(1, 6, 1), a in coeffs()) {
        let rad = SubspaceName::Radical.instantiate(&sig);
        let x = mv_on(&sig, &a, |b| rad.contains(b));
        prop_assert!(!sig.is_invertible(&x));
        prop_assert!(sig.inverse(&x).is_err());
    }

    #[test]
    fn radical_is_a_two_sided_ideal(sig in sig_strategy(1, 6, 1), a in coeffs(), b in coeffs()) {
        let rad = SubspaceName::Radical.instantiate(&sig);
        let x = mv_on(&sig, &a, |m| rad.contains(m));
        let y = mv(&sig, &b);
        prop_assert!(in_span(&rad, &sig.gp(&x, &y)));
        prop_assert!(in_span(&rad, &sig.gp(&y, &x)));
    }

    #[test]
    fn grassmann_grades_add(sig in sig_strategy(1, 6, 1), a in coeffs(), b in coeffs(), j in 0usize..=6, k in 0usize..=6) {
        let x = mv_on(&sig, &a, |m| lambda_grade(&sig, j).contains(m));
        let y = mv_on(&sig, &b, |m| lambda_grade(&sig, k).contains(m));
        let xy = sig.gp(&x, &y);
        prop_assert!(in_span(&lambda_grade(&sig, j + k), &xy));
        prop_assert_eq!(xy, oracle_gp(&sig, &x, &y));
    }

    #[test]
    fn high_grassmann_grades_square_to_zero(sig in sig_strategy(1, 6, 1), a in coeffs(), extra in 0usize..=3) {
        let n = sig.n();
        let k0 = if n % 4 >= 2 { n / 2 } else { n / 2 + 1 };
        let k = k0 + extra;
        let x = mv_on(&sig, &a, |m| lambda_grade(&sig, k).contains(m));
        prop_assert!(sig.gp(&x, &x).is_zero(), "Lambda^{} in {}", k, sig);
    }

    #[test]
    fn norms_land_in_their_types(sig in sig_strategy(1, 6, 0), a in coeffs()) {
        let x = mv(&sig, &a);
        let psi = sig.psi(&x);
        let chi = sig.chi(&x);
        prop_assert_eq!(&psi, &oracle_gp(&sig, &x.reversion(), &x));
        prop_assert_eq!(&chi, &oracle_gp(&sig, &x.clifford_conjugate(), &x));
        prop_assert!(SubspaceName::Qt(0b0011).instantiate(&sig).residual(&psi).is_zero());
        prop_assert!(SubspaceName::Qt(0b1001).instantiate(&sig).residual(&chi).is_zero());
    }
}

/// Sets in which every element without a Λ^(0) component squares to zero,
/// together with the smallest n at which the claim applies.
fn nilpotent_complements(sig: &Signature) -> Vec<(&'static str, BladeSubspace)> {
    use CentralizerTarget as T;
    let n = sig.n();
    let mut sets = Vec::new();
    if n % 2 == 1 {
        sets.push(("Z", SubspaceName::Center.instantiate(sig)));
    }
    if n == 4 || n >= 6 {
        sets.push(("Z3", bruteforce_set(sig, T::Z(3))));
    }
    if n >= 3 {
        sets.push(("Zc2capZc3", bruteforce_set(sig, T::Zc(2)).intersect(&bruteforce_set(sig, T::Zc(3)))));
        sets.push(("Zc1capZc2", bruteforce_set(sig, T::Zc(1)).intersect(&bruteforce_set(sig, T::Zc(2)))));
    }
    if n >= 4 {
        sets.push(("Z2capZ3", bruteforce_set(sig, T::Z(2)).intersect(&bruteforce_set(sig, T::Z(3)))));
        sets.push(("Z3capEven", bruteforce_set(sig, T::Z(3)).even_part()));
    }
    let head = SubspaceName::LambdaEven.instantiate(sig);
    sets.into_iter().map(|(name, s)| (name, s.difference(&head))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: CASES, ..ProptestConfig::default() })]

    #[test]
    fn centralizer_tails_square_to_zero(sig in sig_strategy(1, 6, 1), a in coeffs()) {
        for (name, tail) in nilpotent_complements(&sig) {
            let x = mv_on(&sig, &a, |m| tail.contains(m));
            prop_assert!(sig.gp(&x, &x).is_zero(), "{} in {}: {}", name, sig, x);
        }
    }
}

#[test]
fn vector_squares_follow_the_metric() {
    let sig = Signature::new(1, 1, 1).unwrap();
    let e = |b: u32| Multivector::blade(b);
    assert_eq!(sig.gp(&e(0b001), &e(0b001)), Multivector::one());
    assert_eq!(sig.gp(&e(0b010), &e(0b010)), Multivector::scalar(Rational::from_integer(-1)));
    assert!(sig.gp(&e(0b100), &e(0b100)).is_zero());
    assert_eq!(sig.gp(&e(0b001), &e(0b010)), -&sig.gp(&e(0b010), &e(0b001)));
}

#[test]
fn tails_are_nonempty_somewhere() {
    let sig = Signature::new(1, 0, 5).unwrap();
    for (name, tail) in nilpotent_complements(&sig) {
        assert!(tail.dim() > 0, "{name}");
    }
}
