//! Worked examples in three generators: polynomial membership conditions for
//! `B̌^{0̄1̄}` and `Ǎ` when one generator is null, and the identifications of
//! the groups of small Grassmann algebras with explicit unit sets.
//!
//! An element is written `u e + u1 e1 + u2 e2 + u3 e3 + u12 e12 + u13 e13 +
//! u23 e23 + u123 e123` with `e3` null (all three null in `Cl(0,0,3)`).

use ga_core::groups::{member, GroupId, MemberContext, MembershipMode};
use ga_core::signature::Blade;
use ga_core::{BladeSubspace, Multivector, Rational, Signature};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Blade of each coefficient, in the order `u, u1, u2, u3, u12, u13, u23, u123`.
pub const BLADES: [Blade; 8] = [0, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];

/// Coefficients `u, u1, u2, u3, u12, u13, u23, u123`.
pub type Coeffs = [Rational; 8];

/// The element with the given coefficients.
pub fn element(c: &Coeffs) -> Multivector {
    Multivector::from_terms(BLADES.iter().copied().zip(c.iter().cloned()))
}

fn eta(sig: &Signature, a: usize) -> Rational {
    Rational::from_integer(i64::from(sig.eta(a)))
}

fn prod(xs: &[&Rational]) -> Rational {
    xs.iter().fold(Rational::one(), |acc, x| &acc * *x)
}

/// `u u123 + u2 u13 - u1 u23 - u3 u12`, which must vanish on `B̌^{0̄1̄}`.
pub fn bc01_equation(c: &Coeffs) -> Rational {
    let [u, u1, u2, u3, u12, u13, u23, u123] = c;
    &(&(&prod(&[u, u123]) + &prod(&[u2, u13])) - &prod(&[u1, u23])) - &prod(&[u3, u12])
}

/// `u^2 - u1^2 η11 - u2^2 η22 + u12^k η11 η22` with `k = 2`, or `k = 1` when
/// `printed_exponent` is set.
pub fn bc01_norm(sig: &Signature, c: &Coeffs, printed_exponent: bool) -> Rational {
    let [u, u1, u2, _, u12, ..] = c;
    let (e1, e2) = (eta(sig, 1), eta(sig, 2));
    let last = if printed_exponent { u12.clone() } else { prod(&[u12, u12]) };
    &(&(&prod(&[u, u]) - &prod(&[u1, u1, &e1])) - &prod(&[u2, u2, &e2])) + &prod(&[&last, &e1, &e2])
}

/// The three equations that must vanish on `Ǎ`: the `e1`, `e2` and `e3`
/// coefficients of `psi` divided by two. With `printed` set, the third one
/// leaves out its `u12 u123 η11 η22` term.
pub fn ac_equations(sig: &Signature, c: &Coeffs, printed: bool) -> [Rational; 3] {
    let [u, u1, u2, u3, u12, u13, u23, u123] = c;
    let (e1, e2) = (eta(sig, 1), eta(sig, 2));
    let third = &(&prod(&[u, u3]) + &prod(&[u1, u13, &e1])) + &prod(&[u2, u23, &e2]);
    let top = if printed { Rational::zero() } else { prod(&[u12, u123, &e1, &e2]) };
    [
        &prod(&[u, u1]) - &prod(&[u2, u12, &e2]),
        &prod(&[u, u2]) + &prod(&[u1, u12, &e1]),
        &third + &top,
    ]
}

/// `u^2 + u1^2 η11 + u2^2 η22 + u12^2 η11 η22`, non-zero on `Ǎ`.
pub fn ac_norm(sig: &Signature, c: &Coeffs) -> Rational {
    let [u, u1, u2, _, u12, ..] = c;
    let (e1, e2) = (eta(sig, 1), eta(sig, 2));
    &(&(&prod(&[u, u]) + &prod(&[u1, u1, &e1])) + &prod(&[u2, u2, &e2])) + &prod(&[u12, u12, &e1, &e2])
}

/// Invertibility decided by the rank of the left multiplication operator.
pub fn rank_invertible(sig: &Signature, t: &Multivector) -> bool {
    sig.left_mul_matrix(t).rank() == sig.dim()
}

/// The polynomial description of a group's membership.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PolyGroup {
    /// `B̌^{0̄1̄}`: one equation and the Clifford-conjugate norm.
    Bc01,
    /// `Ǎ`: three equations and the reversion norm.
    AuxAc,
}

impl PolyGroup {
    /// The group being described.
    pub fn group(self) -> GroupId {
        match self {
            PolyGroup::Bc01 => GroupId::Bc01,
            PolyGroup::AuxAc => GroupId::AuxAc,
        }
    }

    /// Whether the equations hold, in corrected or printed form.
    pub fn equations_hold(self, sig: &Signature, c: &Coeffs, printed: bool) -> bool {
        match self {
            PolyGroup::Bc01 => bc01_equation(c).is_zero(),
            PolyGroup::AuxAc => ac_equations(sig, c, printed).iter().all(Rational::is_zero),
        }
    }

    /// The norm polynomial, with the corrected exponent.
    pub fn norm(self, sig: &Signature, c: &Coeffs) -> Rational {
        match self {
            PolyGroup::Bc01 => bc01_norm(sig, c, false),
            PolyGroup::AuxAc => ac_norm(sig, c),
        }
    }

    /// Membership according to the polynomial conditions, with the printed
    /// or the corrected equations and the corrected norm.
    pub fn predicate(self, sig: &Signature, c: &Coeffs, printed: bool) -> bool {
        self.equations_hold(sig, c, printed) && !self.norm(sig, c).is_zero()
    }
}

fn small(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    Rational::from_integer(rng.random_range(-bound..=bound))
}

fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    let m = rng.random_range(1..=bound);
    Rational::from_integer(if rng.random_bool(0.5) { m } else { -m })
}

/// A coefficient tuple of one of four kinds, chosen by `index % 4`: fully
/// random; satisfying the equations; satisfying the equations with the norm
/// pushed to zero where the signature allows it; satisfying the equations
/// with a large `u12` so that `u12` and `u12^2` differ.
pub fn sample_tuple(kind: PolyGroup, sig: &Signature, seed: u64, index: usize, bound: i64) -> Coeffs {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c: Coeffs = core::array::from_fn(|_| small(&mut rng, bound));
    let mode = index % 4;
    if mode == 0 {
        return c;
    }
    c[0] = nonzero(&mut rng, bound);
    if mode == 3 {
        c[4] = Rational::from_integer(rng.random_range(2..=bound.max(2) + 2));
    }
    let (e1, e2) = (eta(sig, 1), eta(sig, 2));
    if mode == 2 {
        match kind {
            PolyGroup::Bc01 => {
                // u^2 = u1^2 η11 when the first generator squares to +1.
                if e1.is_one() {
                    c[1] = c[0].clone();
                    c[2] = Rational::zero();
                    c[4] = Rational::zero();
                } else if (&e1 * &e2).is_negative() {
                    c[4] = Rational::zero();
                    c[1] = Rational::zero();
                    c[2] = c[0].clone();
                }
            }
            PolyGroup::AuxAc => {
                // The 2x2 system in (u1, u2) is singular when u^2 + η11 η22 u12^2 = 0.
                if (&e1 * &e2).is_negative() && !c[4].is_zero() {
                    c[4] = c[0].clone();
                    c[2] = &(&c[0] * &c[1]) / &(&c[4] * &e2);
                }
            }
        }
    }
    let inv_u = c[0].recip();
    match kind {
        PolyGroup::Bc01 => {
            let rest = &(&(&c[1] * &c[6]) + &(&c[3] * &c[4])) - &(&c[2] * &c[5]);
            c[7] = &rest * &inv_u;
        }
        PolyGroup::AuxAc => {
            let det = &(&c[0] * &c[0]) + &(&(&e1 * &e2) * &(&c[4] * &c[4]));
            if !det.is_zero() {
                c[1] = Rational::zero();
                c[2] = Rational::zero();
            }
            let rest = &(&(&(&c[1] * &c[5]) * &e1) + &(&(&c[2] * &c[6]) * &e2)) + &(&(&c[4] * &c[7]) * &(&e1 * &e2));
            c[3] = &(-&rest) * &inv_u;
        }
    }
    c
}

/// Tally of one polynomial fixture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyOutcome {
    /// Tuples checked.
    pub samples: usize,
    /// Tuples that are members.
    pub members: usize,
    /// Tuples where membership and the polynomial conditions disagree.
    pub disagreements: usize,
    /// Tuples where membership and the printed equations disagree.
    pub printed_equation_wrong: usize,
    /// Tuples satisfying the equations where the rank test and the corrected
    /// norm disagree.
    pub rank_vs_norm: usize,
    /// Tuples satisfying the equations where the norm with the printed
    /// exponent on `u12` gets invertibility wrong (only meaningful for `B̌^{0̄1̄}`).
    pub printed_exponent_wrong: usize,
    /// First disagreement as multivector text.
    pub first_counterexample: Option<String>,
}

impl PolyOutcome {
    /// Whether membership matched the corrected polynomial conditions and
    /// invertibility matched the corrected norm on every tuple.
    pub fn passed(&self) -> bool {
        self.disagreements == 0 && self.rank_vs_norm == 0 && self.members > 0 && self.members < self.samples
    }
}

/// Compares membership with the polynomial conditions on `samples` tuples.
pub fn check_polynomial(kind: PolyGroup, sig: &Signature, seed: u64, samples: usize, bound: i64) -> PolyOutcome {
    let mut out = PolyOutcome {
        samples,
        members: 0,
        disagreements: 0,
        printed_equation_wrong: 0,
        rank_vs_norm: 0,
        printed_exponent_wrong: 0,
        first_counterexample: None,
    };
    let g = kind.group();
    for i in 0..samples {
        let c = sample_tuple(kind, sig, crate::seeds::sample_seed(seed, i), i, bound);
        let t = element(&c);
        let invertible = rank_invertible(sig, &t);
        if kind.equations_hold(sig, &c, false) {
            out.rank_vs_norm += usize::from(invertible == kind.norm(sig, &c).is_zero());
            out.printed_exponent_wrong +=
                usize::from(kind == PolyGroup::Bc01 && invertible == bc01_norm(sig, &c, true).is_zero());
        }
        let ctx = MemberContext::new(sig, &t);
        let norm = ctx.member(g, MembershipMode::Norm).expect("norm form exists");
        let stab = g.stabilizer_form().map(|_| ctx.member(g, MembershipMode::Stabilizer).expect("stabilizer form exists"));
        out.members += usize::from(norm);
        out.printed_equation_wrong += usize::from(norm != kind.predicate(sig, &c, true));
        let predicate = kind.predicate(sig, &c, false);
        if norm != predicate || stab.is_some_and(|s| s != norm) {
            out.disagreements += 1;
            out.first_counterexample.get_or_insert_with(|| t.to_string());
        }
    }
    out
}

/// One identification of groups with an explicit unit set.
#[derive(Clone, Debug)]
pub struct Identification {
    /// The algebra.
    pub sig: Signature,
    /// Groups claimed equal to the unit set.
    pub groups: Vec<GroupId>,
    /// Span whose invertible elements form the set.
    pub span: BladeSubspace,
    /// Printed name of the set.
    pub name: &'static str,
}

/// The identifications for `Cl(0,0,n)` with `n <= max_n <= 3`.
pub fn grassmann_identifications(max_n: usize) -> Vec<Identification> {
    use GroupId::*;
    let qt = [Qt01, Qt23, Qt12, Qt03];
    let mut out = Vec::new();
    for n in 1..=max_n.min(3) {
        let sig = Signature::new(0, 0, n).expect("n <= 3");
        let all = BladeSubspace::from_predicate(&sig, |_| true);
        let mut push = |groups: Vec<GroupId>, span: BladeSubspace, name| {
            out.push(Identification { sig, groups, span, name });
        };
        match n {
            1 => {
                push(vec![AuxAc, Ac03], BladeSubspace::new(1, [0]), "C^0");
                push([vec![Bc01, Bc23, B12, B03, Ac12, A01, A23], qt.to_vec()].concat(), all, "Lambda_1");
            }
            2 => {
                push(vec![AuxAc, Ac03, A01], BladeSubspace::new(2, [0, 0b11]), "Lambda^(0)_2");
                push([vec![Bc01, Bc23, B12, B03, Ac12, A23], qt.to_vec()].concat(), all, "Lambda_2");
            }
            _ => {
                push(vec![AuxAc, Ac03, Ac12, A01], BladeSubspace::from_predicate(&sig, |b| b.count_ones() != 1), "Lambda^023_3");
                push([vec![A23, B03], qt.to_vec()].concat(), all, "Lambda_3");
            }
        }
    }
    out
}

/// Tally of one identification for one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentificationOutcome {
    /// Elements checked.
    pub samples: usize,
    /// Elements inside the unit set.
    pub inside: usize,
    /// Elements where membership and set membership disagree.
    pub disagreements: usize,
    /// First disagreement as multivector text.
    pub first_counterexample: Option<String>,
}

/// Checks `g = span^×` on `samples` invertible elements, alternating dense
/// samples and samples drawn from the span.
pub fn check_identification(id: &Identification, g: GroupId, seed: u64, samples: usize, bound: i64) -> IdentificationOutcome {
    let sig = &id.sig;
    let mut out = IdentificationOutcome { samples, inside: 0, disagreements: 0, first_counterexample: None };
    for i in 0..samples {
        let s = crate::seeds::sample_seed(seed, i);
        let t = if i % 2 == 0 {
            ga_core::groups::sample_invertible(sig, s, bound).expect("invertible samples exist").value
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            loop {
                let t = Multivector::from_terms(id.span.blades().iter().map(|&b| (b, small(&mut rng, bound))));
                if sig.is_invertible(&t) {
                    break t;
                }
            }
        };
        let inside = id.span.contains_mv(&t);
        out.inside += usize::from(inside);
        let norm = member(sig, g, &t, MembershipMode::Norm).expect("norm form exists");
        let stab = g
            .stabilizer_form()
            .map(|_| member(sig, g, &t, MembershipMode::Stabilizer).expect("stabilizer form exists"));
        if norm != inside || stab.is_some_and(|x| x != inside) {
            out.disagreements += 1;
            out.first_counterexample.get_or_insert_with(|| t.to_string());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(xs: [i64; 8]) -> Coeffs {
        xs.map(Rational::from_integer)
    }

    #[test]
    fn bc01_conditions_on_a_known_member() {
        let sig = Signature::new(2, 0, 1).unwrap();
        let c = q([1, 0, 0, 0, 2, 0, 0, 0]);
        assert!(PolyGroup::Bc01.predicate(&sig, &c, false));
        assert!(member(&sig, GroupId::Bc01, &element(&c), MembershipMode::Norm).unwrap());
        assert_eq!(bc01_norm(&sig, &c, false), Rational::from_integer(5));
        assert_eq!(bc01_norm(&sig, &c, true), Rational::from_integer(3));
    }

    #[test]
    fn printed_exponent_misjudges_invertibility() {
        let sig = Signature::new(1, 1, 1).unwrap();
        // u = 1, u12 = 1: (1 + e12)(1 - e12) = 1 - e12 e12 = 1 + η11 η22 = 0.
        let c = q([1, 0, 0, 0, 1, 0, 0, 0]);
        assert!(!rank_invertible(&sig, &element(&c)));
        assert!(bc01_norm(&sig, &c, false).is_zero());
        // u = 2, u12 = 2: the square gives 4 - 4 = 0, the printed exponent 4 - 2.
        let c = q([2, 0, 0, 0, 2, 0, 0, 0]);
        assert!(!rank_invertible(&sig, &element(&c)));
        assert!(bc01_norm(&sig, &c, false).is_zero());
        assert!(!bc01_norm(&sig, &c, true).is_zero());
    }

    #[test]
    fn printed_third_equation_lacks_the_top_term() {
        let sig = Signature::new(2, 0, 1).unwrap();
        // u = 1, u12 = 1, u123 = 1: psi has e3 coefficient 2 u12 u123 η11 η22 = 2.
        let c = q([1, 0, 0, 0, 1, 0, 0, 1]);
        let t = element(&c);
        assert_eq!(sig.psi(&t).to_string(), "2 + 2*e3");
        assert!(!member(&sig, GroupId::AuxAc, &t, MembershipMode::Norm).unwrap());
        assert!(PolyGroup::AuxAc.predicate(&sig, &c, true));
        assert!(!PolyGroup::AuxAc.predicate(&sig, &c, false));
    }

    #[test]
    fn sampled_tuples_hit_both_outcomes() {
        for (p, q, r) in [(2, 0, 1), (1, 1, 1), (0, 2, 1)] {
            let sig = Signature::new(p, q, r).unwrap();
            for kind in [PolyGroup::Bc01, PolyGroup::AuxAc] {
                let out = check_polynomial(kind, &sig, 9, 40, 3);
                assert!(out.passed(), "{kind:?} in {sig}: {out:?}");
            }
        }
    }

    #[test]
    fn grassmann_sets() {
        let ids = grassmann_identifications(3);
        assert_eq!(ids.len(), 6);
        assert_eq!(ids[4].span.blades(), &[0, 0b011, 0b101, 0b110, 0b111]);
        for id in &ids {
            for &g in &id.groups {
                let out = check_identification(id, g, 3, 10, 3);
                assert_eq!(out.disagreements, 0, "{g} in {}: {out:?}", id.sig);
            }
        }
    }
}
