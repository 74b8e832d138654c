//! Lie algebras of the groups: linearizations of the stabilizer and norm
//! conditions at the identity, the tabulated closed forms they are compared
//! against, and the consistency checks between the two.
//!
//! Each table row is stored as data: the extra summands beyond the family's
//! base span, the extra dimension as printed, and the `(n mod 4, r)` guards
//! under which each group uses the row. A lookup matching more than one row is
//! reported as an overlap; a lookup matching none as [`GaError::NoTableRow`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::dims::{dim_a_comb, dim_b_comb, dim_q_comb};
use crate::error::{GaError, Result};
use crate::groups::{member, GroupId, MembershipMode, NormForm, Representation};
use crate::linalg::{LinearSubspace, SparseVec};
use crate::multivector::Multivector;
use crate::rational::Rational;
use crate::signature::{conjugation_sign, grade, reversion_sign, Blade, Signature};
use crate::subspaces::{binomial, describe_pieces, direct_sum, BladeSubspace, Guard, Idx, QtMask, RCond, SpanPiece, N_ANY};

/// Converts a coordinate vector to a multivector.
pub fn to_multivector(v: &SparseVec) -> Multivector {
    Multivector::from_terms(v.entries().iter().map(|(i, c)| (*i as Blade, c.clone())))
}

/// Converts a multivector to a coordinate vector.
pub fn to_sparse(x: &Multivector) -> SparseVec {
    SparseVec::from_entries(x.terms().iter().map(|(b, c)| (*b as usize, c.clone())))
}

fn sign_of(p: Option<(bool, Blade)>) -> i64 {
    match p {
        Some((true, _)) => -1,
        Some((false, _)) => 1,
        None => 0,
    }
}

/// Tangent space at `e` of the stabilizer of `target` under `rep`: all `u`
/// with `H(u) v - v u` in `span(target)` for every blade `v` of `target`,
/// where `H` is the identity, the grade involution, or the grade involution
/// on odd `v` only.
pub fn linearized_stabilizer(sig: &Signature, rep: Representation, target: &BladeSubspace) -> LinearSubspace {
    let dim = sig.dim() as Blade;
    let mut rows = Vec::new();
    for &v in target.blades() {
        let twist_v = match rep {
            Representation::Ad => false,
            Representation::AdCheck => true,
            Representation::AdTilde => grade(v) % 2 == 1,
        };
        for x in 0..dim {
            if target.contains(x ^ v) {
                continue;
            }
            let twist = if twist_v && grade(x) % 2 == 1 { -1 } else { 1 };
            let c = twist * sign_of(sig.blade_product(x, v)) - sign_of(sig.blade_product(v, x));
            if c != 0 {
                rows.push(SparseVec::from_entries([(x as usize, Rational::from_integer(c))]));
            }
        }
    }
    LinearSubspace::kernel_of_rows(sig.dim(), rows)
}

/// All `u` with `inv(u) + u` in `span(s)`, where `inv` is reversion
/// (`conjugate = false`) or Clifford conjugation (`conjugate = true`).
pub fn linearized_norm(sig: &Signature, s: &BladeSubspace, conjugate: bool) -> LinearSubspace {
    let rows = (0..sig.dim() as Blade).filter_map(|x| {
        let flips = if conjugate { conjugation_sign(grade(x)) } else { reversion_sign(grade(x)) };
        let c = if flips { 0 } else { 2 };
        (c != 0 && !s.contains(x)).then(|| SparseVec::from_entries([(x as usize, Rational::from_integer(c))]))
    });
    LinearSubspace::kernel_of_rows(sig.dim(), rows)
}

/// Lie algebra of `g` from its stabilizer form.
pub fn lie_algebra(g: GroupId, sig: &Signature) -> Result<LinearSubspace> {
    let form = g.stabilizer_form().ok_or_else(|| GaError::Unsupported(format!("{g} has no stabilizer form")))?;
    Ok(linearized_stabilizer(sig, form.rep, &form.target.instantiate(sig)))
}

/// Lie algebra of `g` from its norm form (both conditions intersected when
/// there are two).
pub fn lie_algebra_norm(g: GroupId, sig: &Signature) -> Result<LinearSubspace> {
    match g.norm_form() {
        NormForm::Conditions { psi, chi } => {
            let mut acc = LinearSubspace::full(sig.dim());
            if let Some(s) = psi {
                acc = acc.intersect(&linearized_norm(sig, &s.instantiate(sig)?, false));
            }
            if let Some(s) = chi {
                acc = acc.intersect(&linearized_norm(sig, &s.instantiate(sig)?, true));
            }
            Ok(acc)
        }
        NormForm::Intertwining(_) => Err(GaError::Unsupported(format!("{g} has no norm-function form"))),
    }
}

/// Whether `[u, v]` lies in `s` for every pair of basis vectors of `s`.
pub fn bracket_closure_check(sig: &Signature, s: &LinearSubspace) -> bool {
    let basis: Vec<Multivector> = s.basis().iter().map(to_multivector).collect();
    basis
        .iter()
        .enumerate()
        .all(|(i, u)| basis[i + 1..].iter().all(|v| s.contains(&to_sparse(&sig.commutator(u, v)))))
}

/// Whether `exp(u)` of a nilpotent `u` belongs to `g`, in every available mode.
pub fn exp_nilpotent_check(g: GroupId, sig: &Signature, u: &Multivector) -> Result<bool> {
    let x = sig.exp_nilpotent(u)?;
    let norm_ok = member(sig, g, &x, MembershipMode::Norm)?;
    let stab_ok = match g.stabilizer_form() {
        Some(_) => member(sig, g, &x, MembershipMode::Stabilizer)?,
        None => true,
    };
    Ok(norm_ok && stab_ok)
}

/// The three table families, each with its own base span and dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `Λ^{0̄}_r ⊕ C^{2̄3̄}`, dimension `dim_A`.
    A,
    /// `Λ^{0̄}_r ⊕ C^{1̄2̄}`, dimension `dim_B`.
    B,
    /// `Λ^{0̄1̄3̄}_r ⊕ C^{2̄}`, dimension `dim_Q`.
    Q,
}

impl Family {
    /// Summands common to every row of the family.
    pub fn base(self) -> &'static [SpanPiece] {
        const A: [SpanPiece; 2] = [SpanPiece::LambdaQt(0b0001), SpanPiece::Qt(0b1100)];
        const B: [SpanPiece; 2] = [SpanPiece::LambdaQt(0b0001), SpanPiece::Qt(0b0110)];
        const Q: [SpanPiece; 2] = [SpanPiece::LambdaQt(0b1011), SpanPiece::Qt(0b0100)];
        match self {
            Family::A => &A,
            Family::B => &B,
            Family::Q => &Q,
        }
    }

    /// `dim_A`, `dim_B` or `dim_Q`.
    pub fn base_dim(self, n: usize, r: usize) -> u64 {
        match self {
            Family::A => dim_a_comb(n, r),
            Family::B => dim_b_comb(n, r),
            Family::Q => dim_q_comb(n, r),
        }
    }
}

/// One row of the Lie algebra tables.
pub struct LieRow {
    /// Short identifier, e.g. `A3`.
    pub id: &'static str,
    /// Family, fixing the base span and base dimension.
    pub family: Family,
    /// Summands beyond the base.
    pub extra: &'static [SpanPiece],
    /// Extra dimension as printed, as a function of `(n, p + q, r)`.
    pub extra_dim: fn(i64, i64, i64) -> i64,
    /// The printed extra dimension, for reports.
    pub extra_dim_text: &'static str,
    /// Groups using this row and the conditions under which they do.
    pub uses: &'static [(GroupId, Guard)],
}

impl fmt::Debug for LieRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LieRow").field("id", &self.id).finish()
    }
}

const fn gd(n_mod4: QtMask, r_any_of: &'static [RCond]) -> Guard {
    Guard { n_mod4, r_any_of }
}

const ANY: &[RCond] = &[RCond::Any];
const fn nm(k: i64) -> Idx {
    Idx::NMinus(k)
}
const R_N: &[RCond] = &[RCond::Eq(nm(0))];
const R_NOT_N: &[RCond] = &[RCond::Ne(nm(0))];
const R_N1: &[RCond] = &[RCond::Eq(nm(1))];
const R_N2: &[RCond] = &[RCond::Eq(nm(2))];
const R_N3: &[RCond] = &[RCond::Eq(nm(3))];
const R_N4: &[RCond] = &[RCond::Eq(nm(4))];
const R_N1_N: &[RCond] = &[RCond::Eq(nm(1)), RCond::Eq(nm(0))];
const R_N2_N1: &[RCond] = &[RCond::Eq(nm(2)), RCond::Eq(nm(1))];
const R_N3_N2: &[RCond] = &[RCond::Eq(nm(3)), RCond::Eq(nm(2))];
const R_LE2: &[RCond] = &[RCond::Le(nm(2))];
const R_LE3: &[RCond] = &[RCond::Le(nm(3))];
const R_LE4: &[RCond] = &[RCond::Le(nm(4))];
const R_GE2: &[RCond] = &[RCond::Ge(nm(2))];
const R_LE3_N: &[RCond] = &[RCond::Le(nm(3)), RCond::Eq(nm(0))];
const R_LE4_N: &[RCond] = &[RCond::Le(nm(4)), RCond::Eq(nm(0))];
const R_LE5_N: &[RCond] = &[RCond::Le(nm(5)), RCond::Eq(nm(0))];

const M0: QtMask = 0b0001;
const M1: QtMask = 0b0010;
const M2: QtMask = 0b0100;
const M3: QtMask = 0b1000;

use GroupId::*;
use SpanPiece::{Lambda, Mixed, Top};

fn c(a: i64, b: i64) -> i64 {
    binomial(a, b) as i64
}

/// Every row of the A, B and Q tables.
pub static LIE_ROWS: &[LieRow] = &[
    LieRow {
        id: "A1",
        family: Family::A,
        extra: &[],
        extra_dim: |_, _, _| 0,
        extra_dim_text: "0",
        uses: &[
            (A01, gd(0b1101, ANY)),
            (A23, gd(M0, ANY)),
            (A23, gd(M2, R_LE2)),
            (A23, gd(M3, R_LE3)),
            (Ac12, gd(0b1001, ANY)),
            (Ac12, gd(M1, R_NOT_N)),
            (Ac12, gd(M2, R_LE2)),
            (Ac03, gd(0b1100, ANY)),
            (Ac03, gd(M0, R_LE3_N)),
            (Ac03, gd(M1, R_LE4_N)),
        ],
    },
    LieRow {
        id: "A2",
        family: Family::A,
        extra: &[Top],
        extra_dim: |_, _, _| 1,
        extra_dim_text: "1",
        uses: &[(A01, gd(M1, ANY)), (A23, gd(M1, ANY)), (Ac12, gd(M1, R_N)), (Ac03, gd(M0, R_N2_N1))],
    },
    LieRow {
        id: "A3",
        family: Family::A,
        extra: &[Lambda(nm(1))],
        extra_dim: |n, _, r| c(r, n - 1),
        extra_dim_text: "C(r, n-1)",
        uses: &[(A23, gd(M2, R_N1_N)), (Ac12, gd(M2, R_N1_N))],
    },
    LieRow {
        id: "A4",
        family: Family::A,
        extra: &[Lambda(nm(2))],
        extra_dim: |n, _, r| c(r, n - 2),
        extra_dim_text: "C(r, n-2)",
        uses: &[(A23, gd(M3, R_GE2))],
    },
    LieRow {
        id: "A5",
        family: Family::A,
        extra: &[Mixed(1, nm(2))],
        extra_dim: |n, _, _| n - 1,
        extra_dim_text: "n-1",
        uses: &[(Ac03, gd(M1, R_N1))],
    },
    LieRow {
        id: "A6",
        family: Family::A,
        extra: &[Mixed(2, nm(3))],
        extra_dim: |_, _, _| 3,
        extra_dim_text: "3",
        uses: &[(Ac03, gd(M1, R_N3))],
    },
    LieRow {
        id: "A7",
        family: Family::A,
        extra: &[Mixed(1, nm(2)), Mixed(2, nm(3))],
        extra_dim: |n, _, _| n,
        extra_dim_text: "n",
        uses: &[(Ac03, gd(M1, R_N2))],
    },
    LieRow {
        id: "B1",
        family: Family::B,
        extra: &[],
        extra_dim: |_, _, _| 0,
        extra_dim_text: "0",
        uses: &[
            (Bc01, gd(N_ANY, ANY)),
            (B12, gd(0b0111, ANY)),
            (B03, gd(M0, R_LE3)),
            (B03, gd(M1, R_LE4)),
            (B03, gd(M2, ANY)),
            (Bc23, gd(0b0110, ANY)),
            (Bc23, gd(M0, R_LE3)),
            (Bc23, gd(M3, R_LE2)),
        ],
    },
    LieRow {
        id: "B2",
        family: Family::B,
        extra: &[Top],
        extra_dim: |_, _, _| 1,
        extra_dim_text: "1",
        uses: &[(B03, gd(M3, ANY)), (B12, gd(M3, ANY)), (Bc23, gd(M3, R_N1_N))],
    },
    LieRow {
        id: "B3",
        family: Family::B,
        extra: &[Lambda(nm(1))],
        extra_dim: |n, _, _| n,
        extra_dim_text: "n",
        uses: &[(B03, gd(M0, R_N)), (Bc23, gd(M0, R_N))],
    },
    LieRow {
        id: "B4",
        family: Family::B,
        extra: &[Lambda(nm(2))],
        extra_dim: |n, _, _| n * (n - 1) / 2,
        extra_dim_text: "n(n-1)/2",
        uses: &[(B03, gd(M1, R_N))],
    },
    LieRow {
        id: "B5",
        family: Family::B,
        extra: &[Mixed(1, nm(2)), Mixed(2, nm(2))],
        extra_dim: |_, _, _| 3,
        extra_dim_text: "3",
        uses: &[(B03, gd(M0, R_N2)), (Bc23, gd(M0, R_N2))],
    },
    LieRow {
        id: "B6",
        family: Family::B,
        extra: &[Mixed(1, nm(3)), Mixed(2, nm(3))],
        extra_dim: |_, _, _| 6,
        extra_dim_text: "6",
        uses: &[(B03, gd(M1, R_N3))],
    },
    LieRow {
        id: "B7",
        family: Family::B,
        extra: &[Lambda(nm(1)), Mixed(1, nm(2)), Mixed(1, nm(1))],
        extra_dim: |n, _, _| n + 1,
        extra_dim_text: "n+1",
        uses: &[(B03, gd(M0, R_N1)), (Bc23, gd(M0, R_N1))],
    },
    LieRow {
        id: "B8",
        family: Family::B,
        extra: &[Lambda(nm(2)), Mixed(1, nm(3)), Mixed(1, nm(2))],
        extra_dim: |n, _, _| (n - 1) * (n + 2) / 2,
        extra_dim_text: "(n-1)(n+2)/2",
        uses: &[(B03, gd(M1, R_N1))],
    },
    LieRow {
        id: "B9",
        family: Family::B,
        extra: &[Lambda(nm(2)), Mixed(1, nm(3)), Mixed(1, nm(2)), Mixed(2, nm(3))],
        extra_dim: |n, _, _| 3 * n - 3,
        extra_dim_text: "3n-3",
        uses: &[(B03, gd(M1, R_N2))],
    },
    LieRow {
        id: "Q1",
        family: Family::Q,
        extra: &[],
        extra_dim: |_, _, _| 0,
        extra_dim_text: "0",
        uses: &[
            (Qt01, gd(M0, ANY)),
            (Qt01, gd(M1, R_N)),
            (Qt01, gd(M2, R_LE4_N)),
            (Qt01, gd(M3, R_LE5_N)),
            (Qt23, gd(M0, R_LE4_N)),
            (Qt23, gd(M1, R_N)),
            (Qt23, gd(M2, ANY)),
            (Qt23, gd(M3, R_LE3_N)),
            (Qt12, gd(0b0111, ANY)),
            (Qt12, gd(M3, R_N)),
            (Qt03, gd(M0, R_LE4_N)),
            (Qt03, gd(M1, R_LE5_N)),
            (Qt03, gd(M2, R_LE4_N)),
            (Qt03, gd(M3, R_N)),
        ],
    },
    LieRow {
        id: "Q2",
        family: Family::Q,
        extra: &[Top],
        extra_dim: |_, _, _| 1,
        extra_dim_text: "1",
        uses: &[
            (Qt01, gd(M1, R_NOT_N)),
            (Qt23, gd(M1, R_NOT_N)),
            (Qt23, gd(M3, R_N2_N1)),
            (Qt12, gd(M3, R_NOT_N)),
            (Qt03, gd(M3, R_NOT_N)),
        ],
    },
    LieRow {
        id: "Q3",
        family: Family::Q,
        extra: &[Mixed(1, nm(2))],
        extra_dim: |n, _, _| n - 1,
        extra_dim_text: "n-1",
        uses: &[(Qt01, gd(M2, R_N1)), (Qt03, gd(M2, R_N1))],
    },
    LieRow {
        id: "Q4",
        family: Family::Q,
        extra: &[Mixed(1, nm(2)), Top],
        extra_dim: |n, _, _| n,
        extra_dim_text: "n",
        uses: &[(Qt23, gd(M0, R_N1)), (Qt03, gd(M0, R_N1))],
    },
    LieRow {
        id: "Q5",
        family: Family::Q,
        extra: &[Mixed(1, nm(3))],
        extra_dim: |n, _, _| if n == 3 { 1 } else { (n - 3) * (n - 2) / 2 },
        extra_dim_text: "(n-3)(n-2)/2 for n >= 7; 1 for n = 3",
        uses: &[(Qt01, gd(M3, R_N1))],
    },
    LieRow {
        id: "Q6",
        family: Family::Q,
        extra: &[Mixed(2, nm(3))],
        extra_dim: |_, _, _| 3,
        extra_dim_text: "3",
        uses: &[(Qt01, gd(M2, R_N3)), (Qt03, gd(M2, R_N3)), (Qt03, gd(M0, R_N3))],
    },
    LieRow {
        id: "Q7",
        family: Family::Q,
        extra: &[Mixed(2, nm(3)), Top],
        extra_dim: |_, _, _| 4,
        extra_dim_text: "4",
        uses: &[(Qt23, gd(M0, R_N3))],
    },
    LieRow {
        id: "Q8",
        family: Family::Q,
        extra: &[Mixed(2, nm(4))],
        extra_dim: |_, _, _| 6,
        extra_dim_text: "6",
        uses: &[(Qt01, gd(M3, R_N4)), (Qt03, gd(M1, R_N4))],
    },
    LieRow {
        id: "Q9",
        family: Family::Q,
        extra: &[Mixed(1, nm(2)), Mixed(2, nm(3))],
        extra_dim: |n, _, _| n,
        extra_dim_text: "n",
        uses: &[(Qt01, gd(M2, R_N2)), (Qt03, gd(M2, R_N2))],
    },
    LieRow {
        id: "Q10",
        family: Family::Q,
        extra: &[Mixed(1, nm(2)), Mixed(2, nm(3)), Top],
        extra_dim: |n, _, _| n + 1,
        extra_dim_text: "n+1",
        uses: &[(Qt23, gd(M0, R_N2)), (Qt03, gd(M0, R_N2))],
    },
    LieRow {
        id: "Q11",
        family: Family::Q,
        extra: &[Mixed(1, nm(3)), Mixed(2, nm(4))],
        extra_dim: |n, pq, r| if n == 3 { pq } else { pq * c(r, n - 3) + c(pq, 2) * c(r, n - 4) },
        extra_dim_text: "(p+q)C(r,n-3) + C(p+q,2)C(r,n-4) for n >= 7; p+q for n = 3",
        uses: &[(Qt01, gd(M3, R_N3_N2))],
    },
    LieRow {
        id: "Q12",
        family: Family::Q,
        extra: &[Mixed(1, nm(3)), Mixed(2, nm(4)), Mixed(2, nm(3))],
        extra_dim: |n, _, _| 3 * n - 3,
        extra_dim_text: "3n-3",
        uses: &[(Qt03, gd(M1, R_N3))],
    },
    LieRow {
        id: "Q13",
        family: Family::Q,
        extra: &[Mixed(1, nm(2)), Mixed(1, nm(3)), Top],
        extra_dim: |n, _, _| n + (n - 1) * (n - 2) / 2,
        extra_dim_text: "n+(n-1)(n-2)/2",
        uses: &[(Qt03, gd(M1, R_N1))],
    },
    LieRow {
        id: "Q14",
        family: Family::Q,
        extra: &[Mixed(1, nm(2)), Mixed(1, nm(3)), Mixed(2, nm(3)), Mixed(2, nm(4)), Top],
        extra_dim: |n, _, _| n * (n + 1) / 2,
        extra_dim_text: "n(n+1)/2",
        uses: &[(Qt03, gd(M1, R_N2))],
    },
];

/// The unique row used by `g` at `(n, r)`.
pub fn table_row(g: GroupId, n: usize, r: usize) -> Result<&'static LieRow> {
    let mut hits = LIE_ROWS.iter().filter(|row| row.uses.iter().any(|(h, guard)| *h == g && guard.holds(n, r)));
    let first = hits.next().ok_or_else(|| GaError::NoTableRow(format!("{g} at n = {n}, r = {r}")))?;
    if let Some(second) = hits.next() {
        return Err(GaError::Overlap(format!("{g} at n = {n}, r = {r} matches rows {} and {}", first.id, second.id)));
    }
    Ok(first)
}

/// Rejects any `(group, n, r)` with `n <= max_n` matched by two rows.
pub fn validate_tables(max_n: usize) -> Result<()> {
    for n in 1..=max_n {
        for r in 0..=n {
            for g in GroupId::ALL {
                match table_row(g, n, r) {
                    Err(GaError::Overlap(m)) => return Err(GaError::Overlap(m)),
                    _ => continue,
                }
            }
        }
    }
    Ok(())
}

/// Describes the cases where the printed table row disagrees with the
/// computed Lie algebra, or `None` where the row is expected to hold.
pub fn known_table_erratum(g: GroupId, sig: &Signature) -> Option<&'static str> {
    let (n, r, pq) = (sig.n(), sig.r(), sig.p() + sig.q());
    match g {
        A23 if n % 4 == 0 && matches!(pq, 1 | 2) => Some("row omits C^n, which commutes with C^[23] when every grade-3 blade is null"),
        Qt23 if n % 4 == 0 && r + 3 == n => Some("row lists C^n, which the twisted action moves out of C^[23]"),
        Qt01 if n % 4 == 3 && n >= 7 && r + 1 == n => Some("printed dimension (n-3)(n-2)/2; the span has (n-1)(n-2)/2 elements"),
        _ => None,
    }
}

/// A table row instantiated for one signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedLie {
    /// Row identifier.
    pub row: &'static str,
    /// The row's Lie algebra column as a blade span.
    pub span: BladeSubspace,
    /// The row's dimension column, evaluated.
    pub dim: i64,
    /// Printed form of the span.
    pub description: String,
}

/// The tabulated Lie algebra of `g` in `sig`.
pub fn expected_lie(g: GroupId, sig: &Signature) -> Result<ExpectedLie> {
    let (n, r) = (sig.n(), sig.r());
    let row = table_row(g, n, r)?;
    let pieces: Vec<SpanPiece> = row.family.base().iter().chain(row.extra).copied().collect();
    let span = direct_sum(sig, &pieces)?;
    let dim = row.family.base_dim(n, r) as i64 + (row.extra_dim)(n as i64, (sig.p() + sig.q()) as i64, r as i64);
    Ok(ExpectedLie { row: row.id, span, dim, description: describe_pieces(&pieces) })
}

/// Outcome of comparing the computed Lie algebra of one group with its table row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieCheck {
    /// Group checked.
    pub group: GroupId,
    /// The Lie algebra from the stabilizer form (or the norm form for `Ǎ`).
    pub computed: LinearSubspace,
    /// Dimension of the norm-form linearization, if the group has one.
    pub norm_dim: Option<usize>,
    /// Whether both linearizations agree (true when only one exists).
    pub linearizations_agree: bool,
    /// Whether the computed algebra is closed under the commutator.
    pub closed: bool,
    /// Table row, or the reason there is none.
    pub expected: core::result::Result<ExpectedLie, GaError>,
}

impl LieCheck {
    /// Whether the computed algebra equals the tabulated span.
    pub fn span_matches(&self) -> Option<bool> {
        self.expected.as_ref().ok().map(|e| e.span.to_linear() == self.computed)
    }

    /// Whether the computed dimension equals the tabulated dimension.
    pub fn dim_matches(&self) -> Option<bool> {
        self.expected.as_ref().ok().map(|e| e.dim == self.computed.dim() as i64)
    }

    /// Whether every applicable check passed; `None` when there is no table row.
    pub fn passed(&self) -> Option<bool> {
        let table = self.span_matches()? && self.dim_matches()?;
        Some(table && self.linearizations_agree && self.closed)
    }
}

/// Computes and compares the Lie algebra of `g` in `sig`.
pub fn check_lie(g: GroupId, sig: &Signature) -> Result<LieCheck> {
    let stab = lie_algebra(g, sig).ok();
    let norm = lie_algebra_norm(g, sig).ok();
    let (computed, linearizations_agree) = match (stab, &norm) {
        (Some(s), Some(n)) => {
            let agree = &s == n;
            (s, agree)
        }
        (Some(s), None) => (s, true),
        (None, Some(n)) => (n.clone(), true),
        (None, None) => return Err(GaError::Unsupported(format!("{g} has no linearization"))),
    };
    let closed = bracket_closure_check(sig, &computed);
    let expected = match expected_lie(g, sig) {
        Err(e @ GaError::NoTableRow(_)) => Err(e),
        other => Ok(other?),
    };
    Ok(LieCheck { group: g, norm_dim: norm.map(|n| n.dim()), computed, linearizations_agree, closed, expected })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize, r: usize) -> Signature {
        Signature::new(p, q, r).unwrap()
    }

    fn blades(s: &LinearSubspace, n: usize) -> Vec<Blade> {
        BladeSubspace::from_linear(n, s).unwrap().blades().to_vec()
    }

    #[test]
    fn a01_in_two_null_generators() {
        let s = sig(0, 0, 2);
        let l = lie_algebra(A01, &s).unwrap();
        assert_eq!(blades(&l, 2), [0, 0b11]);
        assert_eq!(l.dim() as u64, dim_a_comb(2, 2));
    }

    #[test]
    fn bc01_has_dim_b() {
        for (p, q, r) in [(1, 0, 0), (2, 1, 0), (1, 1, 1), (0, 0, 3), (2, 0, 2)] {
            let s = sig(p, q, r);
            assert_eq!(lie_algebra(Bc01, &s).unwrap().dim() as u64, dim_b_comb(s.n(), r));
        }
    }

    #[test]
    fn qt12_matches_row() {
        let s = sig(1, 0, 1);
        let e = expected_lie(Qt12, &s).unwrap();
        assert_eq!(e.row, "Q1");
        assert_eq!(e.span.to_linear(), lie_algebra(Qt12, &s).unwrap());
        assert_eq!(e.dim as u64, dim_q_comb(2, 1));
    }

    #[test]
    fn expected_rows_for_examples() {
        let e = expected_lie(A23, &sig(1, 0, 2)).unwrap();
        assert_eq!((e.row, e.dim), ("A4", dim_a_comb(3, 2) as i64 + 2));
        let e = expected_lie(B03, &sig(0, 0, 5)).unwrap();
        assert_eq!((e.row, e.dim), ("B4", dim_b_comb(5, 5) as i64 + 10));
        assert_eq!(expected_lie(Qt01, &sig(2, 1, 1)).unwrap().row, "Q1");
        assert!(matches!(expected_lie(Gamma, &sig(1, 0, 0)), Err(GaError::NoTableRow(_))));
    }

    #[test]
    fn guards_never_overlap() {
        validate_tables(16).unwrap();
    }

    #[test]
    fn every_generalized_group_is_covered() {
        for n in 1..=16 {
            for r in 0..=n {
                for g in GroupId::GENERALIZED {
                    assert!(table_row(g, n, r).is_ok(), "{g} n={n} r={r}");
                }
            }
        }
    }

    #[test]
    fn known_errata_locations() {
        assert!(known_table_erratum(A23, &sig(2, 0, 2)).is_some());
        assert!(known_table_erratum(A23, &sig(4, 0, 0)).is_none());
        assert!(known_table_erratum(Qt23, &sig(3, 0, 1)).is_some());
        assert!(known_table_erratum(Qt01, &sig(1, 0, 2)).is_none());
        assert!(known_table_erratum(Qt01, &sig(1, 0, 6)).is_some());
    }

    #[test]
    fn closure_trivial_cases() {
        let s = sig(1, 1, 1);
        assert!(bracket_closure_check(&s, &LinearSubspace::full(8)));
        assert!(bracket_closure_check(&s, &LinearSubspace::coordinate(8, [0])));
        // span{e1, e2} is not closed: [e1, e2] = 2 e12.
        assert!(!bracket_closure_check(&s, &LinearSubspace::coordinate(8, [1, 2])));
    }

    #[test]
    fn exp_examples() {
        let s = sig(1, 0, 2);
        assert!(exp_nilpotent_check(A01, &s, &Multivector::zero()).unwrap());
        let u = Multivector::blade(0b111);
        assert_eq!(s.exp_nilpotent(&u).unwrap(), &Multivector::one() + &u);
        assert!(exp_nilpotent_check(A01, &s, &u).unwrap());
        assert!(exp_nilpotent_check(A01, &s, &Multivector::blade(1)).is_err());
    }
}
