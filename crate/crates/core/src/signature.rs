//! Signatures `(p, q, r)` and the product of basis blades.
//!
//! Generators are numbered `1..=n`. The first `p` square to `+1`, the next `q`
//! square to `-1` and the last `r` square to `0`. A basis blade is a bitmask in
//! which bit `a - 1` marks the presence of generator `e_a`; the blade is the
//! product of its generators in increasing order.

use alloc::format;

use crate::error::{GaError, Result};

/// Bitmask identifying a basis blade.
pub type Blade = u32;

/// Default upper bound on `n = p + q + r`.
pub const DEFAULT_N_MAX: usize = 8;

/// Absolute upper bound on `n`, whatever the configured limit.
pub const HARD_N_MAX: usize = 12;

/// Number of generators contained in a blade.
#[inline]
pub fn grade(b: Blade) -> usize {
    b.count_ones() as usize
}

/// Sign of the grade involution on a blade of grade `k`.
#[inline]
pub fn grade_involution_sign(k: usize) -> bool {
    k % 2 == 1
}

/// Sign of the reversion on a blade of grade `k` (`true` means negated).
#[inline]
pub fn reversion_sign(k: usize) -> bool {
    (k * k.saturating_sub(1) / 2) % 2 == 1
}

/// Sign of the Clifford conjugation on a blade of grade `k`.
#[inline]
pub fn conjugation_sign(k: usize) -> bool {
    grade_involution_sign(k) ^ reversion_sign(k)
}

/// Parity of the number of transpositions needed to sort the concatenated
/// generator lists of `a` and `b` into increasing order.
#[inline]
pub fn reorder_parity(a: Blade, b: Blade) -> bool {
    let mut swaps = 0u32;
    let mut x = a >> 1;
    while x != 0 {
        swaps += (x & b).count_ones();
        x >>= 1;
    }
    swaps % 2 == 1
}

/// The metric signature of a (possibly degenerate) real geometric algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    p: usize,
    q: usize,
    r: usize,
}

impl Signature {
    /// Builds a signature with `1 <= p + q + r <= DEFAULT_N_MAX`.
    pub fn new(p: usize, q: usize, r: usize) -> Result<Self> {
        Self::with_limit(p, q, r, DEFAULT_N_MAX)
    }

    /// Builds a signature with `1 <= p + q + r <= limit`; `limit` itself may
    /// not exceed [`HARD_N_MAX`].
    pub fn with_limit(p: usize, q: usize, r: usize, limit: usize) -> Result<Self> {
        let n = p + q + r;
        let bad = |reason| GaError::InvalidSignature { p, q, r, reason };
        if limit > HARD_N_MAX {
            return Err(bad(format!("configured limit {limit} exceeds hard cap {HARD_N_MAX}")));
        }
        if n == 0 {
            return Err(bad("n = p + q + r must be at least 1".into()));
        }
        if n > limit {
            return Err(bad(format!("n = {n} exceeds limit {limit}")));
        }
        Ok(Signature { p, q, r })
    }

    /// Number of positive generators.
    pub fn p(&self) -> usize {
        self.p
    }

    /// Number of negative generators.
    pub fn q(&self) -> usize {
        self.q
    }

    /// Number of null generators.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Total number of generators.
    pub fn n(&self) -> usize {
        self.p + self.q + self.r
    }

    /// Dimension `2^n` of the algebra.
    pub fn dim(&self) -> usize {
        1 << self.n()
    }

    /// Mask of every generator, i.e. the pseudoscalar blade.
    pub fn full_mask(&self) -> Blade {
        ((1u64 << self.n()) - 1) as Blade
    }

    /// Mask of the null generators `e_{p+q+1}, ..., e_n`.
    pub fn degenerate_mask(&self) -> Blade {
        self.full_mask() & !(((1u64 << (self.p + self.q)) - 1) as Blade)
    }

    /// Mask of the non-null generators `e_1, ..., e_{p+q}`.
    pub fn nondegenerate_mask(&self) -> Blade {
        ((1u64 << (self.p + self.q)) - 1) as Blade
    }

    /// Mask of the generators squaring to `-1`.
    pub fn negative_mask(&self) -> Blade {
        (((1u64 << self.q) - 1) << self.p) as Blade
    }

    /// Square of generator `e_a` for `a` in `1..=n`.
    pub fn eta(&self, a: usize) -> i8 {
        debug_assert!((1..=self.n()).contains(&a));
        if a <= self.p {
            1
        } else if a <= self.p + self.q {
            -1
        } else {
            0
        }
    }

    /// Checks that a mask denotes a blade of this algebra.
    pub fn check_blade(&self, b: Blade) -> Result<()> {
        if b & !self.full_mask() != 0 {
            Err(GaError::BladeOutOfRange { mask: b, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// Product of two basis blades: `None` when it vanishes, otherwise the
    /// result blade and whether it carries a minus sign.
    #[inline]
    pub fn blade_product(&self, a: Blade, b: Blade) -> Option<(bool, Blade)> {
        let common = a & b;
        if common & self.degenerate_mask() != 0 {
            return None;
        }
        let neg = reorder_parity(a, b) ^ ((common & self.negative_mask()).count_ones() % 2 == 1);
        Some((neg, a ^ b))
    }

    /// Whether a blade contains at least one null generator.
    pub fn in_radical(&self, b: Blade) -> bool {
        b & self.degenerate_mask() != 0
    }

    /// Whether a blade is made of null generators only (the identity blade included).
    pub fn in_lambda(&self, b: Blade) -> bool {
        b & self.nondegenerate_mask() == 0
    }

    /// Every signature with `n` generators, ordered by `(p, q, r)` descending in `p`.
    pub fn all_with_n(n: usize) -> impl Iterator<Item = Signature> {
        (0..=n).rev().flat_map(move |p| (0..=n - p).rev().map(move |q| Signature { p, q, r: n - p - q }))
    }
}

impl core::fmt::Display for Signature {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({},{},{})", self.p, self.q, self.r)
    }
}
