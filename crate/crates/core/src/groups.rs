//! Adjoint representations, the generalized Clifford and Lipschitz groups,
//! their membership predicates in stabilizer and norm form, seeded sampling of
//! invertible elements and group members, and the constructive factorizations
//! over the auxiliary groups `Ǎ` and `B̌`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cell::OnceCell;
use core::fmt;
use core::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::centralizers::{centralizer_closed_form, CentralizerTarget};
use crate::error::{GaError, Result};
use crate::linalg::Matrix;
use crate::multivector::Multivector;
use crate::rational::Rational;
use crate::signature::{grade, Blade, Signature};
use crate::subspaces::{BladeSubspace, QtMask, SubspaceName};

/// The three adjoint representations of the invertible elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Representation {
    /// `U -> T U T^{-1}`.
    Ad,
    /// `U -> T̂ U T^{-1}`.
    AdCheck,
    /// `U -> T <U>_(0) T^{-1} + T̂ <U>_(1) T^{-1}`.
    AdTilde,
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Representation::Ad => "ad",
            Representation::AdCheck => "adcheck",
            Representation::AdTilde => "adtilde",
        })
    }
}

impl FromStr for Representation {
    type Err = GaError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "ad" => Ok(Representation::Ad),
            "adcheck" | "ǎd" | "check" => Ok(Representation::AdCheck),
            "adtilde" | "ãd" | "tilde" => Ok(Representation::AdTilde),
            other => Err(GaError::UnknownName(other.to_string())),
        }
    }
}

/// Which characterization of a group to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MembershipMode {
    /// Setwise stabilizer of a subspace under one of the representations.
    Stabilizer,
    /// Conditions on the norm functions `psi` and `chi`.
    Norm,
}

impl fmt::Display for MembershipMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MembershipMode::Stabilizer => "stab",
            MembershipMode::Norm => "norm",
        })
    }
}

impl FromStr for MembershipMode {
    type Err = GaError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "stab" | "stabilizer" => Ok(MembershipMode::Stabilizer),
            "norm" => Ok(MembershipMode::Norm),
            other => Err(GaError::UnknownName(other.to_string())),
        }
    }
}

/// The groups that can be tested for membership.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupId {
    /// `A^{0̄1̄}`.
    A01,
    /// `A^{2̄3̄}`.
    A23,
    /// `B^{1̄2̄}`.
    B12,
    /// `B^{0̄3̄}`.
    B03,
    /// `Ǎ^{1̄2̄}`.
    Ac12,
    /// `Ǎ^{0̄3̄}`.
    Ac03,
    /// `B̌^{0̄1̄}`.
    Bc01,
    /// `B̌^{2̄3̄}`.
    Bc23,
    /// `Q̃^{0̄1̄}`.
    Qt01,
    /// `Q̃^{2̄3̄}`.
    Qt23,
    /// `Q̃^{1̄2̄}`.
    Qt12,
    /// `Q̃^{0̄3̄}`.
    Qt03,
    /// The auxiliary group `Ǎ`.
    AuxAc,
    /// The auxiliary group `B̌`.
    AuxBc,
    /// The classical Lipschitz group `Γ`.
    Gamma,
    /// The twisted classical Lipschitz group `Γ^±`.
    GammaPM,
}

impl GroupId {
    /// Every group, in declaration order.
    pub const ALL: [GroupId; 16] = [
        GroupId::A01,
        GroupId::A23,
        GroupId::B12,
        GroupId::B03,
        GroupId::Ac12,
        GroupId::Ac03,
        GroupId::Bc01,
        GroupId::Bc23,
        GroupId::Qt01,
        GroupId::Qt23,
        GroupId::Qt12,
        GroupId::Qt03,
        GroupId::AuxAc,
        GroupId::AuxBc,
        GroupId::Gamma,
        GroupId::GammaPM,
    ];

    /// The twelve generalized groups.
    pub const GENERALIZED: [GroupId; 12] = [
        GroupId::A01,
        GroupId::A23,
        GroupId::B12,
        GroupId::B03,
        GroupId::Ac12,
        GroupId::Ac03,
        GroupId::Bc01,
        GroupId::Bc23,
        GroupId::Qt01,
        GroupId::Qt23,
        GroupId::Qt12,
        GroupId::Qt03,
    ];

    /// Groups with both a stabilizer and a norm form (the generalized groups and `Γ`, `Γ^±`).
    pub const TWO_FORMS: [GroupId; 14] = [
        GroupId::A01,
        GroupId::A23,
        GroupId::B12,
        GroupId::B03,
        GroupId::Ac12,
        GroupId::Ac03,
        GroupId::Bc01,
        GroupId::Bc23,
        GroupId::Qt01,
        GroupId::Qt23,
        GroupId::Qt12,
        GroupId::Qt03,
        GroupId::Gamma,
        GroupId::GammaPM,
    ];

    /// Groups that [`factor`] decomposes.
    pub const FACTORABLE: [GroupId; 7] =
        [GroupId::A01, GroupId::A23, GroupId::Ac12, GroupId::Ac03, GroupId::B12, GroupId::B03, GroupId::Bc23];

    /// The stabilizer characterization, or `None` for `Ǎ`.
    pub fn stabilizer_form(self) -> Option<StabilizerForm> {
        use Representation::*;
        let qt = |rep, mask: QtMask| Some(StabilizerForm { rep, target: SubspaceName::Qt(mask) });
        match self {
            GroupId::A01 => qt(Ad, 0b0011),
            GroupId::A23 => qt(Ad, 0b1100),
            GroupId::B12 => qt(Ad, 0b0110),
            GroupId::B03 => qt(Ad, 0b1001),
            GroupId::Ac12 => qt(AdCheck, 0b0110),
            GroupId::Ac03 => qt(AdCheck, 0b1001),
            GroupId::Bc01 | GroupId::AuxBc => qt(AdCheck, 0b0011),
            GroupId::Bc23 => qt(AdCheck, 0b1100),
            GroupId::Qt01 => qt(AdTilde, 0b0011),
            GroupId::Qt23 => qt(AdTilde, 0b1100),
            GroupId::Qt12 => qt(AdTilde, 0b0110),
            GroupId::Qt03 => qt(AdTilde, 0b1001),
            GroupId::AuxAc => None,
            GroupId::Gamma => Some(StabilizerForm { rep: Ad, target: SubspaceName::Grade(1) }),
            GroupId::GammaPM => Some(StabilizerForm { rep: AdCheck, target: SubspaceName::Grade(1) }),
        }
    }

    /// The norm characterization.
    pub fn norm_form(self) -> NormForm {
        use CentralizerTarget as T;
        let c = NormSet::Centralizer;
        let lambda_even = NormSet::Named(SubspaceName::LambdaEven);
        let psi = |s| NormForm::Conditions { psi: Some(s), chi: None };
        let chi = |s| NormForm::Conditions { psi: None, chi: Some(s) };
        let both = |a, b| NormForm::Conditions { psi: Some(a), chi: Some(b) };
        match self {
            GroupId::A01 => psi(c(T::Z(1))),
            GroupId::A23 => psi(c(T::ZQt(0b1100))),
            GroupId::B12 => chi(c(T::Z(1))),
            GroupId::B03 => chi(c(T::Z(3))),
            GroupId::Ac12 => psi(c(T::Zc1capZc2)),
            GroupId::Ac03 => psi(c(T::Z3capEven)),
            GroupId::Bc01 => chi(lambda_even),
            GroupId::Bc23 => chi(c(T::Zc2capZc3)),
            GroupId::Qt01 => both(c(T::Z(4)), c(T::Zc(1))),
            GroupId::Qt23 => both(c(T::Z(2)), c(T::Zc(3))),
            GroupId::Qt12 => both(c(T::Zc(1)), c(T::Z(2))),
            GroupId::Qt03 => both(c(T::Zc(3)), c(T::Z(4))),
            GroupId::AuxAc => psi(lambda_even),
            GroupId::AuxBc => chi(lambda_even),
            GroupId::Gamma => NormForm::Intertwining(Representation::Ad),
            GroupId::GammaPM => NormForm::Intertwining(Representation::AdCheck),
        }
    }

    /// The set `H` with `G = Ǎ H^×` (or `B̌ H^×`) and whether the base is `B̌`.
    pub fn factor_set(self) -> Option<(CentralizerTarget, bool)> {
        use CentralizerTarget as T;
        match self {
            GroupId::A01 => Some((T::Z(1), false)),
            GroupId::A23 => Some((T::ZQt(0b1100), false)),
            GroupId::Ac12 => Some((T::Zc1capZc2, false)),
            GroupId::Ac03 => Some((T::Z3capEven, false)),
            GroupId::B12 => Some((T::Z(1), true)),
            GroupId::B03 => Some((T::Z(3), true)),
            GroupId::Bc23 => Some((T::Zc2capZc3, true)),
            _ => None,
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for GroupId {
    type Err = GaError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        GroupId::ALL
            .into_iter()
            .find(|g| g.to_string().eq_ignore_ascii_case(t))
            .ok_or_else(|| GaError::UnknownName(t.to_string()))
    }
}

/// A representation together with the subspace it must preserve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilizerForm {
    /// Acting representation.
    pub rep: Representation,
    /// Subspace to preserve.
    pub target: SubspaceName,
}

/// A set that a norm function must land in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormSet {
    /// A centralizer-type set, through its closed form.
    Centralizer(CentralizerTarget),
    /// A named blade span.
    Named(SubspaceName),
}

impl NormSet {
    /// The blade span of this set in `sig`.
    pub fn instantiate(&self, sig: &Signature) -> Result<BladeSubspace> {
        match self {
            NormSet::Centralizer(t) => centralizer_closed_form(sig, *t),
            NormSet::Named(name) => Ok(name.instantiate(sig)),
        }
    }
}

impl fmt::Display for NormSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormSet::Centralizer(t) => write!(f, "{t}"),
            NormSet::Named(n) => write!(f, "{n}"),
        }
    }
}

/// The norm characterization of a group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormForm {
    /// `psi(T)` and/or `chi(T)` must lie in the given sets.
    Conditions {
        /// Condition on `psi(T) = T̃ T`.
        psi: Option<NormSet>,
        /// Condition on `chi(T) = T̄ T`.
        chi: Option<NormSet>,
    },
    /// For every generator `e_a` there is a vector `w` with `T e_a = w T`
    /// (`T̂ e_a = w T` for the twisted representation).
    Intertwining(Representation),
}

/// `psi(t)` and `chi(t)`.
pub fn norms(sig: &Signature, t: &Multivector) -> (Multivector, Multivector) {
    (sig.psi(t), sig.chi(t))
}

/// `rep_t(u)`, or [`GaError::NotInvertible`].
pub fn apply_rep(sig: &Signature, rep: Representation, t: &Multivector, u: &Multivector) -> Result<Multivector> {
    let inv = sig.inverse(t)?;
    Ok(apply_rep_with_inverse(sig, rep, t, &inv, u))
}

fn apply_rep_with_inverse(sig: &Signature, rep: Representation, t: &Multivector, inv: &Multivector, u: &Multivector) -> Multivector {
    match rep {
        Representation::Ad => sig.gp_all(&[t, u, inv]),
        Representation::AdCheck => sig.gp_all(&[&t.grade_involution(), u, inv]),
        Representation::AdTilde => {
            let even = sig.gp_all(&[t, &u.even_part(), inv]);
            let odd = sig.gp_all(&[&t.grade_involution(), &u.odd_part(), inv]);
            &even + &odd
        }
    }
}

/// Whether `rep_t` maps every blade of `s` into `span(s)`.
pub fn preserves(sig: &Signature, t: &Multivector, s: &BladeSubspace, rep: Representation) -> Result<bool> {
    let ctx = MemberContext::new(sig, t);
    if !ctx.is_invertible() {
        return Err(GaError::NotInvertible);
    }
    Ok(ctx.preserves(s, rep))
}

/// The blade span whose invertible elements form the kernel of `rep`.
pub fn kernel_of_rep(rep: Representation, sig: &Signature) -> BladeSubspace {
    match rep {
        Representation::Ad => SubspaceName::Center.instantiate(sig),
        Representation::AdCheck => SubspaceName::LambdaEven.instantiate(sig),
        Representation::AdTilde => SubspaceName::LambdaAll.instantiate(sig),
    }
}

/// Per-element cache for repeated membership queries on one `t`.
///
/// The inverse is computed once; for each basis blade `b` the products
/// `t_(0) b t^{-1}` and `t_(1) b t^{-1}` are computed on first use, which
/// gives the images of `b` under all three representations.
pub struct MemberContext<'a> {
    sig: &'a Signature,
    t: &'a Multivector,
    inv: Option<Multivector>,
    t_even: Multivector,
    t_odd: Multivector,
    parts: Vec<OnceCell<(Multivector, Multivector)>>,
    psi: OnceCell<Multivector>,
    chi: OnceCell<Multivector>,
}

impl<'a> MemberContext<'a> {
    /// Prepares the cache, computing the inverse of `t` if it exists.
    pub fn new(sig: &'a Signature, t: &'a Multivector) -> Self {
        let inv = if sig.check(t).is_ok() { sig.inverse(t).ok() } else { None };
        Self::build(sig, t, inv)
    }

    /// Prepares the cache with a known inverse.
    pub fn with_inverse(sig: &'a Signature, t: &'a Multivector, inv: Multivector) -> Self {
        Self::build(sig, t, Some(inv))
    }

    fn build(sig: &'a Signature, t: &'a Multivector, inv: Option<Multivector>) -> Self {
        MemberContext {
            sig,
            t,
            inv,
            t_even: t.even_part(),
            t_odd: t.odd_part(),
            parts: (0..sig.dim()).map(|_| OnceCell::new()).collect(),
            psi: OnceCell::new(),
            chi: OnceCell::new(),
        }
    }

    /// Whether `t` is invertible.
    pub fn is_invertible(&self) -> bool {
        self.inv.is_some()
    }

    /// The inverse of `t`, if any.
    pub fn inverse(&self) -> Option<&Multivector> {
        self.inv.as_ref()
    }

    /// `psi(t)`, cached.
    pub fn psi(&self) -> &Multivector {
        self.psi.get_or_init(|| self.sig.psi(self.t))
    }

    /// `chi(t)`, cached.
    pub fn chi(&self) -> &Multivector {
        self.chi.get_or_init(|| self.sig.chi(self.t))
    }

    fn parts(&self, b: Blade) -> &(Multivector, Multivector) {
        self.parts[b as usize].get_or_init(|| {
            let inv = self.inv.as_ref().expect("representations need an invertible element");
            let right = self.sig.gp_blade_left(b, inv);
            (self.sig.gp(&self.t_even, &right), self.sig.gp(&self.t_odd, &right))
        })
    }

    /// Image of blade `b` under `rep_t`. Panics if `t` is not invertible.
    pub fn image(&self, rep: Representation, b: Blade) -> Multivector {
        let (even, odd) = self.parts(b);
        let twisted = match rep {
            Representation::Ad => false,
            Representation::AdCheck => true,
            Representation::AdTilde => grade(b) % 2 == 1,
        };
        if twisted {
            even - odd
        } else {
            even + odd
        }
    }

    /// Whether `rep_t` maps `span(s)` into itself. Panics if `t` is not invertible.
    pub fn preserves(&self, s: &BladeSubspace, rep: Representation) -> bool {
        s.blades().iter().all(|&b| s.contains_mv(&self.image(rep, b)))
    }

    /// Whether `rep_t` is the identity. Panics if `t` is not invertible.
    pub fn acts_trivially(&self, rep: Representation) -> bool {
        (0..self.sig.dim() as Blade).all(|b| self.image(rep, b) == Multivector::blade(b))
    }

    /// Whether every `e_a` has a vector `w` with `T' e_a = w T`, where `T'` is
    /// `T` for `ad` and `T̂` for `ǎd`. Decided by an exact linear solve.
    fn intertwines(&self, rep: Representation) -> bool {
        let sig = self.sig;
        let left = match rep {
            Representation::AdCheck => self.t.grade_involution(),
            _ => self.t.clone(),
        };
        let n = sig.n();
        let dim = sig.dim();
        let columns: Vec<Vec<Rational>> = (0..n).map(|a| sig.gp_blade_left(1 << a, self.t).to_dense(dim)).collect();
        let m = Matrix::from_fn(dim, n, |i, j| columns[j][i].clone());
        (0..n).all(|a| m.solve(&sig.gp_blade_right(&left, 1 << a).to_dense(dim)).is_some())
    }

    /// Membership of `t` in `g` evaluated in `mode`.
    pub fn member(&self, g: GroupId, mode: MembershipMode) -> Result<bool> {
        match mode {
            MembershipMode::Stabilizer => {
                let form = g
                    .stabilizer_form()
                    .ok_or_else(|| GaError::Unsupported(format!("{g} has no stabilizer form")))?;
                if !self.is_invertible() {
                    return Ok(false);
                }
                Ok(self.preserves(&form.target.instantiate(self.sig), form.rep))
            }
            MembershipMode::Norm => {
                if !self.is_invertible() {
                    return Ok(false);
                }
                match g.norm_form() {
                    NormForm::Conditions { psi, chi } => {
                        if let Some(set) = psi {
                            if !set.instantiate(self.sig)?.contains_mv(self.psi()) {
                                return Ok(false);
                            }
                        }
                        if let Some(set) = chi {
                            if !set.instantiate(self.sig)?.contains_mv(self.chi()) {
                                return Ok(false);
                            }
                        }
                        Ok(true)
                    }
                    NormForm::Intertwining(rep) => Ok(self.intertwines(rep)),
                }
            }
        }
    }
}

/// Membership of `t` in `g`; a non-invertible `t` is never a member.
pub fn member(sig: &Signature, g: GroupId, t: &Multivector, mode: MembershipMode) -> Result<bool> {
    sig.check(t)?;
    MemberContext::new(sig, t).member(g, mode)
}

/// Inverse of `alpha e + N` with `alpha != 0` and `N` nilpotent, by the
/// finite geometric series `alpha^{-1} sum_k (-N/alpha)^k`.
pub fn unit_inverse(sig: &Signature, u: &Multivector) -> Result<Multivector> {
    let alpha = u.scalar_part();
    if alpha.is_zero() {
        return Err(GaError::NotInvertible);
    }
    let a_inv = alpha.recip();
    let step = (u - &Multivector::scalar(alpha)).scale(&-&a_inv);
    let mut term = Multivector::scalar(a_inv);
    let mut sum = Multivector::zero();
    for _ in 0..=sig.n() + 1 {
        if term.is_zero() {
            return Ok(sum);
        }
        sum = &sum + &term;
        term = sig.gp(&term, &step);
    }
    Err(GaError::Unsupported("unit_inverse needs a nilpotent part".into()))
}

/// A seeded sample together with what is needed to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    /// The sampled element.
    pub value: Multivector,
    /// Its inverse.
    pub inverse: Multivector,
    /// Seed used.
    pub seed: u64,
    /// Number of non-invertible draws discarded before this one.
    pub rejections: usize,
}

const RETRY_BUDGET: usize = 1000;

fn random_coeff(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    Rational::from_integer(rng.random_range(-bound..=bound))
}

fn random_nonzero(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    let m = rng.random_range(1..=bound);
    Rational::from_integer(if rng.random_bool(0.5) { m } else { -m })
}

/// Random dense multivector with integer coefficients in `[-bound, bound]`,
/// redrawn until invertible.
pub fn sample_invertible(sig: &Signature, seed: u64, coeff_bound: i64) -> Result<Sample> {
    if coeff_bound < 1 {
        return Err(GaError::Unsupported("coeff_bound must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for rejections in 0..RETRY_BUDGET {
        let value = Multivector::from_terms((0..sig.dim() as Blade).map(|b| (b, random_coeff(&mut rng, coeff_bound))));
        if let Ok(inverse) = sig.inverse(&value) {
            return Ok(Sample { value, inverse, seed, rejections });
        }
    }
    Err(GaError::Postcondition(format!("no invertible sample within {RETRY_BUDGET} draws (seed {seed})")))
}

/// Random vector with non-zero square.
fn random_nonnull_vector(sig: &Signature, rng: &mut ChaCha8Rng) -> Multivector {
    loop {
        let v = Multivector::from_terms((0..sig.n()).map(|a| (1 << a, random_coeff(rng, 3))));
        if !sig.gp(&v, &v).is_zero() {
            return v;
        }
    }
}

/// The blade span from which the nilpotent part of a sampled unit is drawn.
fn unit_span(sig: &Signature, g: GroupId) -> Result<BladeSubspace> {
    let radical = SubspaceName::Radical.instantiate(sig);
    let span = match g.norm_form() {
        NormForm::Conditions { psi, chi } => {
            let mut s = SubspaceName::Full.instantiate(sig);
            for set in [psi, chi].into_iter().flatten() {
                s = s.intersect(&set.instantiate(sig)?);
            }
            s
        }
        NormForm::Intertwining(_) => BladeSubspace::empty(sig.n()),
    };
    Ok(span.intersect(&radical))
}

/// A certified member of `g`: a product of one to three non-null vectors
/// (when `p + q >= 1`) and a unit `alpha e + N` with `N` in the radical part
/// of the group's norm set. Membership is verified before returning.
pub fn sample_group_member(g: GroupId, sig: &Signature, seed: u64) -> Result<Multivector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Multivector::one();
    if sig.p() + sig.q() >= 1 {
        let k = rng.random_range(1..=3);
        for _ in 0..k {
            t = sig.gp(&t, &random_nonnull_vector(sig, &mut rng));
        }
    }
    let span = unit_span(sig, g)?;
    let mut unit = Multivector::scalar(random_nonzero(&mut rng, 3));
    for &b in span.blades() {
        unit = unit.add_scaled(&Multivector::blade(b), &random_coeff(&mut rng, 3));
    }
    let unit_inv = unit_inverse(sig, &unit)?;
    if sig.gp(&unit, &unit_inv) != Multivector::one() {
        return Err(GaError::Postcondition(format!("series inverse of {unit} failed")));
    }
    let t = sig.gp(&t, &unit);
    if !member(sig, g, &t, MembershipMode::Norm)? {
        return Err(GaError::Postcondition(format!("sampled {t} is not in {g} (seed {seed})")));
    }
    Ok(t)
}

/// Result of [`factor`]: `t = t0 y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// Factor in `Ǎ` or `B̌`.
    pub t0: Multivector,
    /// Invertible factor in the group's set `H`.
    pub y: Multivector,
    /// Auxiliary group containing `t0`.
    pub base: GroupId,
    /// Set containing `y`.
    pub h: CentralizerTarget,
}

/// One step `t = t0 y` with `y = e + (alpha e + X)^{-1} W / 2`, where
/// `nu = alpha e + X + W` is split along `Λ^(0)_r`.
fn factor_step(sig: &Signature, t: &Multivector, chi_based: bool) -> Result<(Multivector, Multivector)> {
    let nu = if chi_based { sig.chi(t) } else { sig.psi(t) };
    let lambda_even = SubspaceName::LambdaEven.instantiate(sig);
    let head = lambda_even.project(&nu);
    let w = lambda_even.residual(&nu);
    let head_inv = unit_inverse(sig, &head).map_err(|_| GaError::Postcondition(format!("norm {nu} has zero scalar part")))?;
    let half = Rational::new(1, 2);
    let k = sig.gp(&head_inv, &w).scale(&half);
    let y = &Multivector::one() + &k;
    let y_inv = &Multivector::one() - &k;
    if sig.gp(&y, &y_inv) != Multivector::one() {
        return Err(GaError::Postcondition(format!("W part of {nu} does not square to zero")));
    }
    Ok((sig.gp(t, &y_inv), y))
}

/// Decomposes a member `t` of `g` as `t0 y` with `t0` in `Ǎ` (A-types) or
/// `B̌` (B-types) and `y` invertible in the group's set `H`. Every claim is
/// checked before returning.
pub fn factor(sig: &Signature, g: GroupId, t: &Multivector) -> Result<Factorization> {
    let (h, chi_based) = g.factor_set().ok_or_else(|| GaError::Unsupported(format!("{g} has no factorization")))?;
    if sig.r() == 0 {
        return Err(GaError::RequiresDegenerate);
    }
    sig.check(t)?;
    if !member(sig, g, t, MembershipMode::Norm)? {
        return Err(GaError::NotAMember(g.to_string()));
    }
    let base = if chi_based { GroupId::AuxBc } else { GroupId::AuxAc };
    let (t0, y) = match (g, sig.n()) {
        (GroupId::B03, 3) => (Multivector::one(), t.clone()),
        (GroupId::B03, 5) => {
            let nu = sig.chi(t);
            let alpha = nu.scalar_part();
            if alpha.is_zero() {
                return Err(GaError::Postcondition(format!("norm {nu} has zero scalar part")));
            }
            let w = SubspaceName::LambdaEven.instantiate(sig).residual(&nu);
            let k = w.scale(&(&Rational::from_integer(2) * &alpha).recip());
            let y1 = &Multivector::one() + &k;
            let y1_inv = &(&Multivector::one() - &k) + &sig.gp(&k, &k);
            if sig.gp(&y1, &y1_inv) != Multivector::one() {
                return Err(GaError::Postcondition(format!("W part of {nu} is not cube-nilpotent")));
            }
            let t1 = sig.gp(t, &y1_inv);
            if !member(sig, GroupId::B12, &t1, MembershipMode::Norm)? {
                return Err(GaError::Postcondition("first step did not land in B12".into()));
            }
            let (t0, y2) = factor_step(sig, &t1, true)?;
            (t0, sig.gp(&y2, &y1))
        }
        _ => factor_step(sig, t, chi_based)?,
    };
    if !member(sig, base, &t0, MembershipMode::Norm)? {
        return Err(GaError::Postcondition(format!("t0 = {t0} is not in {base}")));
    }
    if !centralizer_closed_form(sig, h)?.contains_mv(&y) || !sig.is_invertible(&y) {
        return Err(GaError::Postcondition(format!("y = {y} is not a unit of {h}")));
    }
    if &sig.gp(&t0, &y) != t {
        return Err(GaError::Postcondition("t0 y differs from t".into()));
    }
    Ok(Factorization { t0, y, base, h })
}

/// Signatures where the coincidence `Ǎ^{1̄2̄} = A^{2̄3̄}` for even `n` fails:
/// `n ≡ 0 (mod 4)` with `p + q` equal to 1 or 2, where the pseudoscalar lies
/// in `Z^2 ∩ Z^3` but not in `Ž^1 ∩ Ž^2`, so `A^{2̄3̄}` gains elements such as
/// `e + e_{1..n}`. Describes the gap, or `None` where the coincidence holds.
pub fn known_relation_erratum(a: GroupId, b: GroupId, sig: &Signature) -> Option<&'static str> {
    let pair = matches!((a, b), (GroupId::Ac12, GroupId::A23) | (GroupId::A23, GroupId::Ac12));
    (pair && sig.n().is_multiple_of(4) && matches!(sig.p() + sig.q(), 1 | 2))
        .then_some("A23 contains elements with a pseudoscalar component that Ac12 excludes")
}

/// Names of the groups, for listings.
pub fn group_names() -> Vec<String> {
    GroupId::ALL.iter().map(|g| g.to_string()).collect()
}
