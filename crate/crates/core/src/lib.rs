//! Exact computations in degenerate geometric algebras `Cl(p,q,r)`.
//!
//! The crate provides exact rational multivectors and the geometric product,
//! blade-spanned subspaces, brute-force and closed-form (twisted)
//! centralizers, membership predicates for the generalized Clifford and
//! Lipschitz groups in stabilizer and norm form, their constructive
//! factorizations, and the Lie algebras of those groups together with the
//! tabulated closed forms they are compared against.
//!
//! Everything is `no_std` with `alloc`; there is no floating point and no
//! tolerance anywhere.

#![no_std]
#![warn(missing_docs)]

extern crate alloc;

pub mod algebra;
pub mod centralizers;
pub mod dims;
pub mod error;
pub mod groups;
pub mod lie;
pub mod linalg;
pub mod multivector;
pub mod rational;
pub mod signature;
pub mod subspaces;

pub use centralizers::{centralizer_bruteforce, centralizer_closed_form, CentralizerKind, CentralizerTarget};
pub use error::{GaError, Result};
pub use groups::{GroupId, MembershipMode, Representation};
pub use linalg::{LinearSubspace, Matrix, SparseVec};
pub use multivector::Multivector;
pub use rational::Rational;
pub use signature::{Blade, Signature};
pub use subspaces::{BladeSubspace, SubspaceName};
