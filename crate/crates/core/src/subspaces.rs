//! Named blade-spanned subspaces and piecewise span descriptions.
//!
//! Every subspace appearing in the centralizer formulas and in the Lie-algebra
//! tables is spanned by basis blades, so it is represented by the sorted list
//! of those blades ([`BladeSubspace`]). Span descriptions whose indices depend
//! on `n` (such as `Λ^{n-2}_r` or `{C^1_{p,q,0} Λ^{n-3}_r}`) are encoded as
//! [`SpanPiece`] values and instantiated against a signature.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{GaError, Result};
use crate::linalg::LinearSubspace;
use crate::multivector::Multivector;
use crate::signature::{grade, Blade, Signature};

/// A subspace spanned by a set of basis blades of an algebra with `n` generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BladeSubspace {
    n: usize,
    blades: Vec<Blade>,
}

impl BladeSubspace {
    /// Span of the given blades (duplicates ignored).
    pub fn new<I: IntoIterator<Item = Blade>>(n: usize, blades: I) -> Self {
        let mut b: Vec<Blade> = blades.into_iter().collect();
        b.sort_unstable();
        b.dedup();
        debug_assert!(b.iter().all(|&x| (x as u64) < (1u64 << n)));
        BladeSubspace { n, blades: b }
    }

    /// Blades of `sig` satisfying a predicate.
    pub fn from_predicate<F: Fn(Blade) -> bool>(sig: &Signature, keep: F) -> Self {
        BladeSubspace { n: sig.n(), blades: (0..sig.dim() as Blade).filter(|&b| keep(b)).collect() }
    }

    /// The zero subspace.
    pub fn empty(n: usize) -> Self {
        BladeSubspace { n, blades: Vec::new() }
    }

    /// Number of generators of the ambient algebra.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.blades.len()
    }

    /// Spanning blades in ascending order.
    pub fn blades(&self) -> &[Blade] {
        &self.blades
    }

    /// Whether blade `b` is in the span.
    pub fn contains(&self, b: Blade) -> bool {
        self.blades.binary_search(&b).is_ok()
    }

    /// Whether every term of `x` lies in the span.
    pub fn contains_mv(&self, x: &Multivector) -> bool {
        x.terms().iter().all(|(b, _)| self.contains(*b))
    }

    /// Component of `x` in the span (orthogonal projection in the blade basis).
    pub fn project(&self, x: &Multivector) -> Multivector {
        x.filter(|b| self.contains(b))
    }

    /// Component of `x` outside the span.
    pub fn residual(&self, x: &Multivector) -> Multivector {
        x.filter(|b| !self.contains(b))
    }

    /// Set union.
    pub fn union(&self, other: &BladeSubspace) -> BladeSubspace {
        BladeSubspace::new(self.n, self.blades.iter().chain(&other.blades).copied())
    }

    /// Union that fails if the two spans share a blade.
    pub fn direct_sum(&self, other: &BladeSubspace) -> Result<BladeSubspace> {
        if let Some(b) = self.blades.iter().find(|b| other.contains(**b)) {
            let mut s = String::new();
            crate::multivector::write_blade(&mut s, *b).ok();
            return Err(GaError::Overlap(format!("blade {s} appears in two summands")));
        }
        Ok(self.union(other))
    }

    /// Set intersection.
    pub fn intersect(&self, other: &BladeSubspace) -> BladeSubspace {
        BladeSubspace { n: self.n, blades: self.blades.iter().copied().filter(|b| other.contains(*b)).collect() }
    }

    /// Blades of `self` not in `other`.
    pub fn difference(&self, other: &BladeSubspace) -> BladeSubspace {
        BladeSubspace { n: self.n, blades: self.blades.iter().copied().filter(|b| !other.contains(*b)).collect() }
    }

    /// Even-grade part `<H>_(0)`.
    pub fn even_part(&self) -> BladeSubspace {
        BladeSubspace { n: self.n, blades: self.blades.iter().copied().filter(|b| grade(*b).is_multiple_of(2)).collect() }
    }

    /// Blades of `h` outside `self`, so that `h = self ⊕ complement`; fails unless `self ⊆ h`.
    pub fn orth_complement(&self, h: &BladeSubspace) -> Result<BladeSubspace> {
        if !self.is_subset_of(h) {
            return Err(GaError::Unsupported(format!("{self} is not contained in {h}")));
        }
        Ok(h.difference(self))
    }

    /// Inclusion test.
    pub fn is_subset_of(&self, other: &BladeSubspace) -> bool {
        self.blades.iter().all(|b| other.contains(*b))
    }

    /// The same span as a general linear subspace of `Q^{2^n}`.
    pub fn to_linear(&self) -> LinearSubspace {
        LinearSubspace::coordinate(1 << self.n, self.blades.iter().map(|&b| b as usize))
    }

    /// Recognises a linear subspace that happens to be blade-spanned.
    pub fn from_linear(n: usize, s: &LinearSubspace) -> Option<BladeSubspace> {
        s.coordinate_indices().map(|idx| BladeSubspace::new(n, idx.into_iter().map(|i| i as Blade)))
    }
}

impl fmt::Display for BladeSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("span{")?;
        for (k, b) in self.blades.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            if *b == 0 {
                f.write_str("e")?;
            } else {
                crate::multivector::write_blade(f, *b)?;
            }
        }
        f.write_str("}")
    }
}

/// Residue classes mod 4 as a 4-bit mask: bit `k` stands for grades `≡ k (mod 4)`.
pub type QtMask = u8;

/// Formats a quaternion-type mask as its residue digits, e.g. `0b1100` as `23`.
pub fn qt_digits(mask: QtMask) -> String {
    (0..4).filter(|k| mask >> k & 1 == 1).map(|k| char::from(b'0' + k)).collect()
}

fn parse_qt_digits(s: &str) -> Option<QtMask> {
    if s.is_empty() {
        return None;
    }
    let mut m = 0;
    for c in s.chars() {
        let d = c.to_digit(10)?;
        if d > 3 {
            return None;
        }
        m |= 1 << d;
    }
    Some(m)
}

/// The subspaces addressable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubspaceName {
    /// `{0}`.
    Zero,
    /// The whole algebra.
    Full,
    /// `C^k`.
    Grade(usize),
    /// `C^{>=k}`.
    GradeGeq(usize),
    /// `C^{<=k}`.
    GradeLeq(usize),
    /// `C^(0)` (0) or `C^(1)` (1).
    Parity(u8),
    /// Direct sum of quaternion-type subspaces `C^{k̄}` selected by a residue mask.
    Qt(QtMask),
    /// `Λ^k_r`.
    Lambda(usize),
    /// `Λ_r`.
    LambdaAll,
    /// `Λ^{(0)}_r`, the even part of `Λ_r`.
    LambdaEven,
    /// Quaternion-type parts of `Λ_r` selected by a residue mask.
    LambdaQt(QtMask),
    /// `{C^k_{p,q,0} Λ^l_r}`: blades with exactly `k` non-null and `l` null generators.
    Mixed(usize, usize),
    /// `C^n`, spanned by the pseudoscalar.
    Top,
    /// The center `Z`.
    Center,
    /// The radical: blades containing a null generator.
    Radical,
}

impl SubspaceName {
    /// The blade span of this subspace in `sig`.
    pub fn instantiate(&self, sig: &Signature) -> BladeSubspace {
        let n = sig.n();
        let nd = sig.nondegenerate_mask();
        let dg = sig.degenerate_mask();
        match *self {
            SubspaceName::Zero => BladeSubspace::empty(n),
            SubspaceName::Full => BladeSubspace::from_predicate(sig, |_| true),
            SubspaceName::Grade(k) => BladeSubspace::from_predicate(sig, |b| grade(b) == k),
            SubspaceName::GradeGeq(k) => BladeSubspace::from_predicate(sig, |b| grade(b) >= k),
            SubspaceName::GradeLeq(k) => BladeSubspace::from_predicate(sig, |b| grade(b) <= k),
            SubspaceName::Parity(p) => BladeSubspace::from_predicate(sig, |b| grade(b) % 2 == p as usize),
            SubspaceName::Qt(m) => BladeSubspace::from_predicate(sig, |b| m >> (grade(b) % 4) & 1 == 1),
            SubspaceName::Lambda(k) => BladeSubspace::from_predicate(sig, |b| b & nd == 0 && grade(b) == k),
            SubspaceName::LambdaAll => BladeSubspace::from_predicate(sig, |b| b & nd == 0),
            SubspaceName::LambdaEven => BladeSubspace::from_predicate(sig, |b| b & nd == 0 && grade(b).is_multiple_of(2)),
            SubspaceName::LambdaQt(m) => {
                BladeSubspace::from_predicate(sig, |b| b & nd == 0 && m >> (grade(b) % 4) & 1 == 1)
            }
            SubspaceName::Mixed(k, l) => {
                BladeSubspace::from_predicate(sig, |b| grade(b & nd) == k && grade(b & dg) == l)
            }
            SubspaceName::Top => BladeSubspace::new(n, [sig.full_mask()]),
            SubspaceName::Center => {
                let even = SubspaceName::LambdaEven.instantiate(sig);
                if n % 2 == 1 {
                    even.union(&SubspaceName::Top.instantiate(sig))
                } else {
                    even
                }
            }
            SubspaceName::Radical => BladeSubspace::from_predicate(sig, |b| b & dg != 0),
        }
    }
}

impl fmt::Display for SubspaceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubspaceName::Zero => f.write_str("zero"),
            SubspaceName::Full => f.write_str("full"),
            SubspaceName::Grade(k) => write!(f, "grade:{k}"),
            SubspaceName::GradeGeq(k) => write!(f, "grade:>={k}"),
            SubspaceName::GradeLeq(k) => write!(f, "grade:<={k}"),
            SubspaceName::Parity(p) => write!(f, "parity:{p}"),
            SubspaceName::Qt(m) => write!(f, "qt:{}", qt_digits(*m)),
            SubspaceName::Lambda(k) => write!(f, "lambda:{k}"),
            SubspaceName::LambdaAll => f.write_str("lambda"),
            SubspaceName::LambdaEven => f.write_str("lambda:even"),
            SubspaceName::LambdaQt(m) => write!(f, "lambda:qt:{}", qt_digits(*m)),
            SubspaceName::Mixed(k, l) => write!(f, "mixed:{k},{l}"),
            SubspaceName::Top => f.write_str("top"),
            SubspaceName::Center => f.write_str("center"),
            SubspaceName::Radical => f.write_str("radical"),
        }
    }
}

impl FromStr for SubspaceName {
    type Err = GaError;

    /// Accepts `zero`, `full`, `grade:k`, `grade:>=k`, `grade:<=k`, `parity:0|1`, `qt:k` / `qt:kl…`,
    /// `lambda`, `lambda:k`, `lambda:even`, `lambda:qt:…`, `mixed:k,l`, `top`,
    /// `center` and `radical`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || GaError::UnknownName(s.to_string());
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let name = match s.trim() {
            "zero" => SubspaceName::Zero,
            "full" => SubspaceName::Full,
            "lambda" => SubspaceName::LambdaAll,
            "lambda:even" => SubspaceName::LambdaEven,
            "top" => SubspaceName::Top,
            "center" => SubspaceName::Center,
            "radical" => SubspaceName::Radical,
            t => {
                if let Some(k) = t.strip_prefix("grade:>=") {
                    SubspaceName::GradeGeq(num(k)?)
                } else if let Some(k) = t.strip_prefix("grade:<=") {
                    SubspaceName::GradeLeq(num(k)?)
                } else if let Some(k) = t.strip_prefix("grade:") {
                    SubspaceName::Grade(num(k)?)
                } else if let Some(p) = t.strip_prefix("parity:") {
                    match p {
                        "0" => SubspaceName::Parity(0),
                        "1" => SubspaceName::Parity(1),
                        _ => return Err(bad()),
                    }
                } else if let Some(m) = t.strip_prefix("lambda:qt:") {
                    SubspaceName::LambdaQt(parse_qt_digits(m).ok_or_else(bad)?)
                } else if let Some(m) = t.strip_prefix("qt:") {
                    SubspaceName::Qt(parse_qt_digits(m).ok_or_else(bad)?)
                } else if let Some(k) = t.strip_prefix("lambda:") {
                    SubspaceName::Lambda(num(k)?)
                } else if let Some(kl) = t.strip_prefix("mixed:") {
                    let (k, l) = kl.split_once(',').ok_or_else(bad)?;
                    SubspaceName::Mixed(num(k.trim())?, num(l.trim())?)
                } else {
                    return Err(bad());
                }
            }
        };
        Ok(name)
    }
}

/// An index that is either absolute or measured down from `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Idx {
    /// The value `k`.
    Abs(i64),
    /// The value `n - k`.
    NMinus(i64),
}

impl Idx {
    /// Evaluates against the number of generators.
    pub fn eval(self, n: usize) -> i64 {
        match self {
            Idx::Abs(k) => k,
            Idx::NMinus(k) => n as i64 - k,
        }
    }
}

impl fmt::Display for Idx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Idx::Abs(k) => write!(f, "{k}"),
            Idx::NMinus(0) => f.write_str("n"),
            Idx::NMinus(k) if k > 0 => write!(f, "n-{k}"),
            Idx::NMinus(k) => write!(f, "n+{}", -k),
        }
    }
}

/// One summand of a piecewise span description.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpanPiece {
    /// `Λ_r`.
    LambdaAll,
    /// `Λ^{(0)}_r`.
    LambdaEven,
    /// Quaternion-type parts of `Λ_r`, e.g. `Λ^{0̄}_r` or `Λ^{0̄1̄3̄}_r`.
    LambdaQt(QtMask),
    /// `Λ^k_r`, empty when `k < 0` or `k > r`.
    Lambda(Idx),
    /// `Λ^{≥k}_r`.
    LambdaGeq(Idx),
    /// `{C^k_{p,q,0} Λ^l_r}`, empty when `l < 0`.
    Mixed(usize, Idx),
    /// `{C^k_{p,q,0} Λ^{≥l}_r}`.
    MixedGeq(usize, Idx),
    /// `C^n`.
    Top,
    /// Quaternion-type subspaces of the whole algebra, e.g. `C^{2̄3̄}`.
    Qt(QtMask),
}

impl SpanPiece {
    /// The blade span of this piece in `sig`.
    pub fn instantiate(&self, sig: &Signature) -> BladeSubspace {
        let n = sig.n();
        let nd = sig.nondegenerate_mask();
        let dg = sig.degenerate_mask();
        match *self {
            SpanPiece::LambdaAll => SubspaceName::LambdaAll.instantiate(sig),
            SpanPiece::LambdaEven => SubspaceName::LambdaEven.instantiate(sig),
            SpanPiece::LambdaQt(m) => SubspaceName::LambdaQt(m).instantiate(sig),
            SpanPiece::Lambda(k) => match usize::try_from(k.eval(n)) {
                Ok(k) => SubspaceName::Lambda(k).instantiate(sig),
                Err(_) => BladeSubspace::empty(n),
            },
            SpanPiece::LambdaGeq(k) => {
                let k = k.eval(n).max(0) as usize;
                BladeSubspace::from_predicate(sig, |b| b & nd == 0 && grade(b) >= k)
            }
            SpanPiece::Mixed(k, l) => match usize::try_from(l.eval(n)) {
                Ok(l) => SubspaceName::Mixed(k, l).instantiate(sig),
                Err(_) => BladeSubspace::empty(n),
            },
            SpanPiece::MixedGeq(k, l) => {
                let l = l.eval(n).max(0) as usize;
                BladeSubspace::from_predicate(sig, |b| grade(b & nd) == k && grade(b & dg) >= l)
            }
            SpanPiece::Top => SubspaceName::Top.instantiate(sig),
            SpanPiece::Qt(m) => SubspaceName::Qt(m).instantiate(sig),
        }
    }
}

impl fmt::Display for SpanPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpanPiece::LambdaAll => f.write_str("Λ_r"),
            SpanPiece::LambdaEven => f.write_str("Λ^(0)_r"),
            SpanPiece::LambdaQt(m) => write!(f, "Λ^[{}]_r", qt_digits(*m)),
            SpanPiece::Lambda(k) => write!(f, "Λ^{k}_r"),
            SpanPiece::LambdaGeq(k) => write!(f, "Λ^(>={k})_r"),
            SpanPiece::Mixed(k, l) => write!(f, "{{C^{k} Λ^{l}}}"),
            SpanPiece::MixedGeq(k, l) => write!(f, "{{C^{k} Λ^(>={l})}}"),
            SpanPiece::Top => f.write_str("C^n"),
            SpanPiece::Qt(m) => write!(f, "C^[{}]", qt_digits(*m)),
        }
    }
}

/// Direct sum of pieces; fails if two pieces share a blade.
pub fn direct_sum(sig: &Signature, pieces: &[SpanPiece]) -> Result<BladeSubspace> {
    pieces.iter().try_fold(BladeSubspace::empty(sig.n()), |acc, p| {
        acc.direct_sum(&p.instantiate(sig)).map_err(|e| match e {
            GaError::Overlap(m) => GaError::Overlap(format!("{m} while adding {p} in {sig}")),
            other => other,
        })
    })
}

/// Human-readable rendering of a direct sum, e.g. `Λ^(0)_r ⊕ C^n`.
pub fn describe_pieces(pieces: &[SpanPiece]) -> String {
    let parts: Vec<String> = pieces.iter().map(|p| p.to_string()).collect();
    parts.join(" ⊕ ")
}

/// Condition on `r` relative to `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RCond {
    /// Every `r`.
    Any,
    /// `r = k`.
    Eq(Idx),
    /// `r ≠ k`.
    Ne(Idx),
    /// `r ≤ k`.
    Le(Idx),
    /// `r ≥ k`.
    Ge(Idx),
}

impl RCond {
    /// Evaluates the condition.
    pub fn holds(self, n: usize, r: usize) -> bool {
        let r = r as i64;
        match self {
            RCond::Any => true,
            RCond::Eq(k) => r == k.eval(n),
            RCond::Ne(k) => r != k.eval(n),
            RCond::Le(k) => r <= k.eval(n),
            RCond::Ge(k) => r >= k.eval(n),
        }
    }
}

impl fmt::Display for RCond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RCond::Any => f.write_str("any r"),
            RCond::Eq(k) => write!(f, "r={k}"),
            RCond::Ne(k) => write!(f, "r!={k}"),
            RCond::Le(k) => write!(f, "r<={k}"),
            RCond::Ge(k) => write!(f, "r>={k}"),
        }
    }
}

/// A guard: `n mod 4` in a residue mask and at least one of several `r` conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Guard {
    /// Bit `k` set means `n ≡ k (mod 4)` is accepted.
    pub n_mod4: QtMask,
    /// Alternatives for `r`; the guard holds if any of them does.
    pub r_any_of: &'static [RCond],
}

/// Accepts odd `n`.
pub const N_ODD: QtMask = 0b1010;
/// Accepts even `n`.
pub const N_EVEN: QtMask = 0b0101;
/// Accepts every `n`.
pub const N_ANY: QtMask = 0b1111;

impl Guard {
    /// Evaluates the guard.
    pub fn holds(&self, n: usize, r: usize) -> bool {
        self.n_mod4 >> (n % 4) & 1 == 1 && self.r_any_of.iter().any(|c| c.holds(n, r))
    }
}

impl fmt::Display for Guard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.n_mod4 {
            N_ANY => f.write_str("any n")?,
            N_ODD => f.write_str("n odd")?,
            N_EVEN => f.write_str("n even")?,
            m => write!(f, "n mod 4 in {{{}}}", qt_digits(m).chars().map(String::from).collect::<Vec<_>>().join(","))?,
        }
        let conds: Vec<String> = self.r_any_of.iter().map(|c| c.to_string()).collect();
        write!(f, ", {}", conds.join(" or "))
    }
}

/// Binomial coefficient with `C(a, b) = 0` outside `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> u64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1))
}
