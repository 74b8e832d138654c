//! Geometric product and the operations derived from it.

use alloc::vec::Vec;

use crate::error::{GaError, Result};
use crate::linalg::Matrix;
use crate::multivector::Multivector;
use crate::rational::Rational;
use crate::signature::{Blade, Signature};

impl Signature {
    /// Verifies that every blade of `x` belongs to this algebra.
    pub fn check(&self, x: &Multivector) -> Result<()> {
        match x.terms().iter().find(|(b, _)| b & !self.full_mask() != 0) {
            Some((b, _)) => Err(GaError::BladeOutOfRange { mask: *b, n: self.n() }),
            None => Ok(()),
        }
    }

    /// Geometric product `a b`.
    pub fn gp(&self, a: &Multivector, b: &Multivector) -> Multivector {
        if a.is_zero() || b.is_zero() {
            return Multivector::zero();
        }
        let work = a.len() * b.len();
        if work * 4 < self.dim() {
            let mut terms = Vec::with_capacity(work);
            for (x, cx) in a.terms() {
                for (y, cy) in b.terms() {
                    if let Some((neg, z)) = self.blade_product(*x, *y) {
                        let c = cx * cy;
                        terms.push((z, if neg { -c } else { c }));
                    }
                }
            }
            return Multivector::from_terms(terms);
        }
        let mut acc = alloc::vec![Rational::zero(); self.dim()];
        for (x, cx) in a.terms() {
            for (y, cy) in b.terms() {
                if let Some((neg, z)) = self.blade_product(*x, *y) {
                    let c = cx * cy;
                    let slot = &mut acc[z as usize];
                    if neg {
                        *slot -= &c;
                    } else {
                        *slot += &c;
                    }
                }
            }
        }
        Multivector::from_dense(&acc)
    }

    /// Product of a multivector with a basis blade on the right.
    pub fn gp_blade_right(&self, a: &Multivector, b: Blade) -> Multivector {
        let terms = a.terms().iter().filter_map(|(x, c)| {
            self.blade_product(*x, b).map(|(neg, z)| (z, if neg { -c } else { c.clone() }))
        });
        Multivector::from_terms(terms)
    }

    /// Product of a basis blade with a multivector on the left.
    pub fn gp_blade_left(&self, b: Blade, a: &Multivector) -> Multivector {
        let terms = a.terms().iter().filter_map(|(x, c)| {
            self.blade_product(b, *x).map(|(neg, z)| (z, if neg { -c } else { c.clone() }))
        });
        Multivector::from_terms(terms)
    }

    /// Product of several factors, left to right.
    pub fn gp_all(&self, factors: &[&Multivector]) -> Multivector {
        factors.iter().fold(Multivector::one(), |acc, f| self.gp(&acc, f))
    }

    /// Commutator `a b - b a`.
    pub fn commutator(&self, a: &Multivector, b: &Multivector) -> Multivector {
        &self.gp(a, b) - &self.gp(b, a)
    }

    /// Non-negative integer power.
    pub fn pow(&self, x: &Multivector, k: usize) -> Multivector {
        (0..k).fold(Multivector::one(), |acc, _| self.gp(&acc, x))
    }

    /// Matrix of left multiplication `X -> t X` in the blade basis.
    pub fn left_mul_matrix(&self, t: &Multivector) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for j in 0..d as Blade {
            for (a, c) in t.terms() {
                if let Some((neg, z)) = self.blade_product(*a, j) {
                    let slot = m.get_mut(z as usize, j as usize);
                    if neg {
                        *slot -= c;
                    } else {
                        *slot += c;
                    }
                }
            }
        }
        m
    }

    /// Two-sided inverse, or [`GaError::NotInvertible`].
    ///
    /// Solves `t x = e` exactly; in a finite-dimensional associative algebra a
    /// right inverse is automatically a left inverse.
    pub fn inverse(&self, t: &Multivector) -> Result<Multivector> {
        if t.is_zero() {
            return Err(GaError::NotInvertible);
        }
        if t.len() == 1 && t.terms()[0].0 == 0 {
            return Ok(Multivector::scalar(t.terms()[0].1.recip()));
        }
        let m = self.left_mul_matrix(t);
        let mut rhs = alloc::vec![Rational::zero(); self.dim()];
        rhs[0] = Rational::one();
        let x = m.solve(&rhs).ok_or(GaError::NotInvertible)?;
        let inv = Multivector::from_dense(&x);
        debug_assert_eq!(self.gp(&inv, t), Multivector::one());
        Ok(inv)
    }

    /// Whether `t` has a two-sided inverse.
    pub fn is_invertible(&self, t: &Multivector) -> bool {
        !t.is_zero() && self.left_mul_matrix(t).rank() == self.dim()
    }

    /// The norm function `psi(T) = reverse(T) T`.
    pub fn psi(&self, t: &Multivector) -> Multivector {
        self.gp(&t.reversion(), t)
    }

    /// The norm function `chi(T) = conjugate(T) T`.
    pub fn chi(&self, t: &Multivector) -> Multivector {
        self.gp(&t.clifford_conjugate(), t)
    }

    /// Smallest `k >= 1` with `x^k = 0`, or `None` if `x` is not nilpotent.
    pub fn nilpotency_index(&self, x: &Multivector) -> Option<usize> {
        let mut power = x.clone();
        for k in 1..=self.dim() + 1 {
            if power.is_zero() {
                return Some(k);
            }
            power = self.gp(&power, x);
        }
        None
    }

    /// Exponential `sum_k u^k / k!` of a nilpotent element (a finite sum).
    pub fn exp_nilpotent(&self, u: &Multivector) -> Result<Multivector> {
        let index = self
            .nilpotency_index(u)
            .ok_or_else(|| GaError::Unsupported("exponential of a non-nilpotent element".into()))?;
        let mut term = Multivector::one();
        let mut sum = Multivector::one();
        for k in 1..index {
            term = self.gp(&term, u).scale(&Rational::new(1, k as i64));
            sum = &sum + &term;
        }
        Ok(sum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn generator_squares() {
        let s = Signature::new(1, 1, 1).unwrap();
        let sq = |b| s.gp(&Multivector::blade(b), &Multivector::blade(b));
        assert_eq!(sq(1), Multivector::one());
        assert_eq!(sq(2), Multivector::scalar(q(-1)));
        assert!(sq(4).is_zero());
        // e12 e12 = -e1 e1 e2 e2 = -(1)(-1) = 1
        assert_eq!(sq(3), Multivector::one());
    }

    #[test]
    fn inverse_of_vector_and_null_perturbation() {
        let s = Signature::new(2, 0, 1).unwrap();
        let v = Multivector::from_terms([(1, q(3)), (2, q(4))]);
        let vi = s.inverse(&v).unwrap();
        assert_eq!(vi, v.scale(&Rational::new(1, 25)));
        let t = Multivector::from_terms([(0, q(2)), (0b101, q(1))]);
        let ti = s.inverse(&t).unwrap();
        assert_eq!(s.gp(&t, &ti), Multivector::one());
        assert!(s.inverse(&Multivector::blade(4)).is_err());
        assert!(!s.is_invertible(&Multivector::from_terms([(0, q(1)), (1, q(1))])));
    }

    #[test]
    fn exp_of_null_bivector() {
        let s = Signature::new(2, 0, 1).unwrap();
        let u = Multivector::blade(0b101);
        let ex = s.exp_nilpotent(&u).unwrap();
        assert_eq!(ex, Multivector::from_terms([(0, q(1)), (0b101, q(1))]));
        assert!(s.exp_nilpotent(&Multivector::blade(1)).is_err());
    }
}
