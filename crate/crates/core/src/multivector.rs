//! Sparse multivectors with exact rational coefficients.
//!
//! A [`Multivector`] stores its nonzero coefficients in ascending blade order.
//! It carries no signature: the geometric product and everything built on it
//! live on [`Signature`](crate::Signature) in the `algebra` module, while the
//! linear structure and the three involutions are signature independent.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::rational::Rational;
use crate::signature::{conjugation_sign, grade, grade_involution_sign, reversion_sign, Blade};

/// An element of a geometric algebra, as a sparse map from blades to coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Multivector {
    terms: Vec<(Blade, Rational)>,
}

impl Multivector {
    /// The zero element.
    pub fn zero() -> Self {
        Multivector { terms: Vec::new() }
    }

    /// The identity element `e`.
    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    /// A multiple of the identity.
    pub fn scalar(c: Rational) -> Self {
        Self::term(0, c)
    }

    /// A basis blade with unit coefficient.
    pub fn blade(b: Blade) -> Self {
        Self::term(b, Rational::one())
    }

    /// A single term `c * e_b`.
    pub fn term(b: Blade, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Multivector { terms: alloc::vec![(b, c)] }
        }
    }

    /// Sums arbitrary terms, merging repeated blades and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Blade, Rational)>>(iter: I) -> Self {
        let mut map: BTreeMap<Blade, Rational> = BTreeMap::new();
        for (b, c) in iter {
            *map.entry(b).or_insert_with(Rational::zero) += &c;
        }
        Multivector { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Builds from a dense coefficient vector indexed by blade.
    pub fn from_dense(coeffs: &[Rational]) -> Self {
        Multivector {
            terms: coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(b, c)| (b as Blade, c.clone()))
                .collect(),
        }
    }

    /// Dense coefficient vector of length `dim`.
    pub fn to_dense(&self, dim: usize) -> Vec<Rational> {
        let mut out = alloc::vec![Rational::zero(); dim];
        for (b, c) in &self.terms {
            out[*b as usize] = c.clone();
        }
        out
    }

    /// Nonzero terms in ascending blade order.
    pub fn terms(&self) -> &[(Blade, Rational)] {
        &self.terms
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as [`Multivector::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether every coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of blade `b`.
    pub fn coeff(&self, b: Blade) -> Rational {
        match self.terms.binary_search_by_key(&b, |(k, _)| *k) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Coefficient of the identity blade.
    pub fn scalar_part(&self) -> Rational {
        self.coeff(0)
    }

    /// Union of all blades with a nonzero coefficient, as a bitmask.
    pub fn support_mask(&self) -> Blade {
        self.terms.iter().fold(0, |m, (b, _)| m | b)
    }

    /// Keeps the terms whose blade satisfies `keep`.
    pub fn filter<F: Fn(Blade) -> bool>(&self, keep: F) -> Self {
        Multivector { terms: self.terms.iter().filter(|(b, _)| keep(*b)).cloned().collect() }
    }

    /// Grade-`k` part.
    pub fn grade_part(&self, k: usize) -> Self {
        self.filter(|b| grade(b) == k)
    }

    /// Even part `<x>_(0)`.
    pub fn even_part(&self) -> Self {
        self.filter(|b| grade(b).is_multiple_of(2))
    }

    /// Odd part `<x>_(1)`.
    pub fn odd_part(&self) -> Self {
        self.filter(|b| grade(b) % 2 == 1)
    }

    /// Whether every term has even grade.
    pub fn is_even(&self) -> bool {
        self.terms.iter().all(|(b, _)| grade(*b).is_multiple_of(2))
    }

    /// Whether every term has odd grade.
    pub fn is_odd(&self) -> bool {
        self.terms.iter().all(|(b, _)| grade(*b) % 2 == 1)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Multivector { terms: self.terms.iter().map(|(b, x)| (*b, x * c)).collect() }
    }

    fn flip_signs<F: Fn(Blade) -> bool>(&self, negate: F) -> Self {
        Multivector {
            terms: self.terms.iter().map(|(b, c)| (*b, if negate(*b) { -c } else { c.clone() })).collect(),
        }
    }

    /// Grade involution: a grade-`k` part is multiplied by `(-1)^k`.
    pub fn grade_involution(&self) -> Self {
        self.flip_signs(|b| grade_involution_sign(grade(b)))
    }

    /// Reversion: a grade-`k` part is multiplied by `(-1)^{k(k-1)/2}`.
    pub fn reversion(&self) -> Self {
        self.flip_signs(|b| reversion_sign(grade(b)))
    }

    /// Clifford conjugation, the composition of grade involution and reversion.
    pub fn clifford_conjugate(&self) -> Self {
        self.flip_signs(|b| conjugation_sign(grade(b)))
    }

    /// Linear combination `self + c * other`.
    pub fn add_scaled(&self, other: &Multivector, c: &Rational) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = j >= other.terms.len() || (i < self.terms.len() && self.terms[i].0 < other.terms[j].0);
            let take_right = i >= self.terms.len() || (j < other.terms.len() && other.terms[j].0 < self.terms[i].0);
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                out.push((other.terms[j].0, &other.terms[j].1 * c));
                j += 1;
            } else {
                let v = &self.terms[i].1 + &(&other.terms[j].1 * c);
                if !v.is_zero() {
                    out.push((self.terms[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        Multivector { terms: out }
    }
}

impl core::ops::Add<&Multivector> for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.add_scaled(rhs, &Rational::one())
    }
}

impl core::ops::Sub<&Multivector> for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.add_scaled(rhs, &-Rational::one())
    }
}

impl core::ops::Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.flip_signs(|_| true)
    }
}

/// Writes a blade as `e12` when every index is a single digit, else `e{1,2,13}`.
pub fn write_blade(f: &mut impl fmt::Write, b: Blade) -> fmt::Result {
    let idx: Vec<u32> = (0..32).filter(|i| b >> i & 1 == 1).map(|i| i + 1).collect();
    if idx.iter().all(|&i| i <= 9) {
        f.write_char('e')?;
        for i in idx {
            write!(f, "{i}")?;
        }
        Ok(())
    } else {
        f.write_str("e{")?;
        for (k, i) in idx.iter().enumerate() {
            if k > 0 {
                f.write_char(',')?;
            }
            write!(f, "{i}")?;
        }
        f.write_char('}')
    }
}

impl fmt::Display for Multivector {
    /// Canonical text form: terms in ascending blade order, e.g.
    /// `2 - e1 + 3/2*e12 + e{3,10}`; the zero element prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            let mag = if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                c.abs()
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
                c.abs()
            };
            if *b == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_blade(f, *b)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector({self})")
    }
}
