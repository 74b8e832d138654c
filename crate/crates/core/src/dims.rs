//! Dimension formulas for quaternion-type subspaces and for the Lie algebras.
//!
//! The trigonometric closed forms only ever involve `2^{m/2} cos(πm/4)` and
//! `2^{m/2} sin(πm/4)`, which are integers with a period-8 sign pattern; they
//! are evaluated exactly through that pattern. Every closed form has a
//! combinatorial counterpart (a sum of binomial coefficients over grades in a
//! residue class) used as the independent check.

use crate::rational::Rational;
use crate::subspaces::{binomial, QtMask};

const COS_SIGN: [i64; 8] = [1, 1, 0, -1, -1, -1, 0, 1];
const SIN_SIGN: [i64; 8] = [0, 1, 1, 1, 0, -1, -1, -1];

fn magnitude(m: usize) -> i64 {
    1i64 << (m / 2)
}

/// The integer `2^{m/2} cos(πm/4)`.
pub fn two_pow_half_cos(m: usize) -> i64 {
    COS_SIGN[m % 8] * magnitude(m)
}

/// The integer `2^{m/2} sin(πm/4)`.
pub fn two_pow_half_sin(m: usize) -> i64 {
    SIN_SIGN[m % 8] * magnitude(m)
}

/// `2^{n-2}` as an exact rational (it is `1/2` for `n = 1`).
fn two_pow_minus_two(n: usize) -> Rational {
    if n >= 2 {
        Rational::from_integer(1i64 << (n - 2))
    } else {
        Rational::new(1, 4 >> n)
    }
}

fn half(x: i64) -> Rational {
    Rational::new(x, 2)
}

/// `dim C^{k̄}` for `n` generators by the trigonometric closed form.
pub fn dim_qt_trig(n: usize, k: usize) -> Rational {
    let base = two_pow_minus_two(n);
    let c = half(two_pow_half_cos(n));
    let s = half(two_pow_half_sin(n));
    match k % 4 {
        0 => &base + &c,
        1 => &base + &s,
        2 => &base - &c,
        _ => &base - &s,
    }
}

/// Number of grades `j ≡ k (mod 4)` counted with multiplicity `C(m, j)`.
pub fn grade_sum(m: usize, mask: QtMask) -> u64 {
    (0..=m).filter(|j| mask >> (j % 4) & 1 == 1).map(|j| binomial(m as i64, j as i64)).sum()
}

/// `dim C^{k̄}` for `n` generators by summing binomials.
pub fn dim_qt_comb(n: usize, k: usize) -> u64 {
    grade_sum(n, 1 << (k % 4))
}

/// `dim Λ^{0̄}_r`: `2^{r-2} + 2^{r/2-1} cos(πr/4)` for `r >= 1`, and `1` for `r = 0`.
fn lambda_qt0_trig(r: usize) -> Rational {
    if r == 0 {
        Rational::one()
    } else {
        &two_pow_minus_two(r) + &half(two_pow_half_cos(r))
    }
}

/// `dim_A = dim C^{2̄3̄} + dim Λ^{0̄}_r` by the trigonometric form.
pub fn dim_a_trig(n: usize, r: usize) -> Rational {
    let head = &Rational::from_integer(1i64 << (n - 1)) - &half(two_pow_half_cos(n) + two_pow_half_sin(n));
    &head + &lambda_qt0_trig(r)
}

/// `dim_B = dim C^{1̄2̄} + dim Λ^{0̄}_r` by the trigonometric form.
pub fn dim_b_trig(n: usize, r: usize) -> Rational {
    let head = &Rational::from_integer(1i64 << (n - 1)) + &half(two_pow_half_sin(n) - two_pow_half_cos(n));
    &head + &lambda_qt0_trig(r)
}

/// `dim_Q = dim C^{2̄} + dim Λ^{0̄1̄3̄}_r` with the `r`-term
/// `3·2^{r-2} + 2^{r/2-1} cos(πr/4)` for `r >= 1` and `1` for `r = 0`.
pub fn dim_q_trig(n: usize, r: usize) -> Rational {
    let head = dim_qt_trig(n, 2);
    let tail = if r == 0 {
        Rational::one()
    } else {
        &(&two_pow_minus_two(r) * &Rational::from_integer(3)) + &half(two_pow_half_cos(r))
    };
    &head + &tail
}

/// The `dim_Q` expression with `(sin + cos)` in the `r`-term, as it is printed
/// in the source tables. It is not an integer for `r = 1` and disagrees with
/// `dim Λ^{0̄1̄3̄}_r` in general; kept only to document that discrepancy.
pub fn dim_q_printed(n: usize, r: usize) -> Rational {
    let head = dim_qt_trig(n, 2);
    let tail = if r == 0 {
        Rational::one()
    } else {
        &(&two_pow_minus_two(r) * &Rational::from_integer(3)) + &half(two_pow_half_sin(r) + two_pow_half_cos(r))
    };
    &head + &tail
}

/// `dim_A` by binomial sums.
pub fn dim_a_comb(n: usize, r: usize) -> u64 {
    grade_sum(n, 0b1100) + grade_sum(r, 0b0001)
}

/// `dim_B` by binomial sums.
pub fn dim_b_comb(n: usize, r: usize) -> u64 {
    grade_sum(n, 0b0110) + grade_sum(r, 0b0001)
}

/// `dim_Q` by binomial sums.
pub fn dim_q_comb(n: usize, r: usize) -> u64 {
    grade_sum(n, 0b0100) + grade_sum(r, 0b1011)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn period_eight_pattern_matches_floats() {
        for m in 0..=24usize {
            let angle = core::f64::consts::FRAC_PI_4 * m as f64;
            let scale = 2f64.powf(m as f64 / 2.0);
            let c = libm_round(scale * cos(angle));
            let s = libm_round(scale * sin(angle));
            assert_eq!(two_pow_half_cos(m), c, "cos m={m}");
            assert_eq!(two_pow_half_sin(m), s, "sin m={m}");
        }
    }

    // Taylor series are enough at these arguments; no std in this crate.
    fn cos(x: f64) -> f64 {
        let x = x % (2.0 * core::f64::consts::PI);
        let (mut term, mut sum) = (1.0, 1.0);
        for k in 1..40 {
            term *= -x * x / ((2 * k - 1) as f64 * (2 * k) as f64);
            sum += term;
        }
        sum
    }

    fn sin(x: f64) -> f64 {
        let x = x % (2.0 * core::f64::consts::PI);
        let (mut term, mut sum) = (x, x);
        for k in 1..40 {
            term *= -x * x / ((2 * k) as f64 * (2 * k + 1) as f64);
            sum += term;
        }
        sum
    }

    fn libm_round(x: f64) -> i64 {
        if x >= 0.0 {
            (x + 0.5) as i64
        } else {
            -((-x + 0.5) as i64)
        }
    }

    #[test]
    fn qt_forms_agree_with_binomial_sums() {
        for n in 1..=12 {
            for k in 0..4 {
                assert_eq!(dim_qt_trig(n, k), Rational::from_integer(dim_qt_comb(n, k) as i64), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn group_dimension_forms_agree() {
        for n in 1..=12 {
            for r in 0..=n {
                assert_eq!(dim_a_trig(n, r), Rational::from_integer(dim_a_comb(n, r) as i64));
                assert_eq!(dim_b_trig(n, r), Rational::from_integer(dim_b_comb(n, r) as i64));
                assert_eq!(dim_q_trig(n, r), Rational::from_integer(dim_q_comb(n, r) as i64));
            }
        }
    }

    #[test]
    fn printed_q_term_is_not_an_integer_at_r1() {
        let printed = dim_q_printed(3, 1);
        assert!(!printed.is_integer());
        assert_eq!(&printed - &dim_q_trig(3, 1), Rational::new(1, 2));
    }
}
