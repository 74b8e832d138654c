//! The subcommands of the `ga` tool as plain functions returning
//! serializable outputs. Every output struct here is part of the documented
//! JSON schema.

use std::fmt::Write as _;

use ga_core::centralizers::{centralizer_closed_form, describe_closed_form, CentralizerTarget};
use ga_core::dims::{dim_a_comb, dim_a_trig, dim_b_comb, dim_b_trig, dim_q_comb, dim_q_printed, dim_q_trig};
use ga_core::groups::{factor, member, GroupId, MemberContext, MembershipMode, NormForm};
use ga_core::lie::{check_lie, to_multivector};
use ga_core::signature::{DEFAULT_N_MAX, HARD_N_MAX};
use ga_core::subspaces::SubspaceName;
use ga_core::{BladeSubspace, GaError, LinearSubspace, Multivector, Rational, Signature};
use serde::Serialize;
use thiserror::Error;

use crate::parse::{parse_multivector, ParseError};

/// Anything that stops a subcommand before it produces output.
#[derive(Debug, Error)]
pub enum CommandError {
    /// Malformed multivector text.
    #[error("cannot parse multivector: {0}")]
    Parse(#[from] ParseError),
    /// An error from the algebra layer.
    #[error("{0}")]
    Algebra(#[from] GaError),
    /// A malformed or out-of-range argument.
    #[error("{0}")]
    Usage(String),
}

/// The generator cap: `GA_N_MAX` if set (at most the hard cap), else the default.
pub fn n_limit(env: Option<&str>) -> Result<usize, CommandError> {
    match env {
        None => Ok(DEFAULT_N_MAX),
        Some(v) => match v.trim().parse::<usize>() {
            Ok(n) if (1..=HARD_N_MAX).contains(&n) => Ok(n),
            _ => Err(CommandError::Usage(format!("GA_N_MAX must be an integer in 1..={HARD_N_MAX}, got {v:?}"))),
        },
    }
}

/// Parses `p,q,r` under the generator cap `limit`.
pub fn parse_signature(text: &str, limit: usize) -> Result<Signature, CommandError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let bad = || CommandError::Usage(format!("signature must be p,q,r with non-negative integers, got {text:?}"));
    let [p, q, r] = parts.as_slice() else { return Err(bad()) };
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    Ok(Signature::with_limit(num(p)?, num(q)?, num(r)?, limit)?)
}

fn blade_names(s: &BladeSubspace) -> Vec<String> {
    s.blades().iter().map(|&b| if b == 0 { "e".to_string() } else { Multivector::blade(b).to_string() }).collect()
}

/// A subspace as blade names when it is blade-spanned, else as RREF rows.
fn basis_strings(n: usize, s: &LinearSubspace) -> (bool, Vec<String>) {
    match BladeSubspace::from_linear(n, s) {
        Some(b) => (true, blade_names(&b)),
        None => (false, s.basis().iter().map(|v| to_multivector(v).to_string()).collect()),
    }
}

/// Output of `ga centralizer`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerOutput {
    /// Signature `(p,q,r)`.
    pub signature: String,
    /// Target name.
    pub target: String,
    /// `"closed_form"` or `"bruteforce"`.
    pub method: String,
    /// Closed form as a direct sum of named pieces, when one exists.
    pub closed_form: Option<String>,
    /// Whether `basis` lists blades (`true`) or RREF rows (`false`).
    pub blade_spanned: bool,
    /// Basis of the reported subspace.
    pub basis: Vec<String>,
    /// Its dimension.
    pub dim: usize,
    /// Whether closed form and brute force agree, when both exist.
    pub closed_form_matches: Option<bool>,
}

/// `ga centralizer`.
pub fn centralizer(sig: &Signature, target: CentralizerTarget, bruteforce: bool) -> Result<CentralizerOutput, CommandError> {
    let closed = centralizer_closed_form(sig, target).ok();
    let brute = target.bruteforce(sig);
    let (method, (blade_spanned, basis), dim) = match (&closed, bruteforce) {
        (Some(c), false) => ("closed_form", (true, blade_names(c)), c.dim()),
        _ => ("bruteforce", basis_strings(sig.n(), &brute), brute.dim()),
    };
    Ok(CentralizerOutput {
        signature: sig.to_string(),
        target: target.to_string(),
        method: method.into(),
        closed_form: describe_closed_form(sig, target).ok(),
        blade_spanned,
        basis,
        dim,
        closed_form_matches: closed.map(|c| c.to_linear() == brute),
    })
}

/// Which membership forms `ga member` evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeChoice {
    /// Both forms, reporting whether they agree.
    Both,
    /// Stabilizer form only.
    Stab,
    /// Norm form only.
    Norm,
}

/// Output of `ga member`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MemberOutput {
    /// Signature `(p,q,r)`.
    pub signature: String,
    /// Group name.
    pub group: String,
    /// The element, in canonical text form.
    pub mv: String,
    /// Whether the element is invertible.
    pub invertible: bool,
    /// Membership; under `both`, the norm-form answer.
    pub member: bool,
    /// Stabilizer-form answer, when evaluated and the group has that form.
    pub stabilizer: Option<bool>,
    /// Norm-form answer, when evaluated.
    pub norm: Option<bool>,
    /// `psi(t) = reversion(t) t`.
    pub psi: String,
    /// `chi(t) = conjugate(t) t`.
    pub chi: String,
    /// Whether both forms agree; `null` unless both were evaluated.
    pub mode_agreement: Option<bool>,
}

/// `ga member`.
pub fn member_cmd(sig: &Signature, g: GroupId, text: &str, mode: ModeChoice) -> Result<MemberOutput, CommandError> {
    let t = parse_multivector(text, sig)?;
    let ctx = MemberContext::new(sig, &t);
    let stab = match mode {
        ModeChoice::Norm => None,
        _ => g.stabilizer_form().map(|_| ctx.member(g, MembershipMode::Stabilizer)).transpose()?,
    };
    let norm = match mode {
        ModeChoice::Stab if g.stabilizer_form().is_some() => None,
        _ => Some(ctx.member(g, MembershipMode::Norm)?),
    };
    let member = norm.or(stab).expect("at least one form is evaluated");
    Ok(MemberOutput {
        signature: sig.to_string(),
        group: g.to_string(),
        mv: t.to_string(),
        invertible: ctx.is_invertible(),
        member,
        stabilizer: stab,
        norm,
        psi: ctx.psi().to_string(),
        chi: ctx.chi().to_string(),
        mode_agreement: stab.zip(norm).map(|(a, b)| a == b),
    })
}

/// Independently recomputed postconditions of a factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorChecks {
    /// `t0` is in the auxiliary group.
    pub t0_member: bool,
    /// `y` lies in the closed form of the group's set.
    pub y_in_set: bool,
    /// `y` is invertible.
    pub y_invertible: bool,
    /// `t0 y = t` exactly.
    pub product: bool,
}

/// Output of `ga factor`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorOutput {
    /// Signature `(p,q,r)`.
    pub signature: String,
    /// Group name.
    pub group: String,
    /// The input element.
    pub mv: String,
    /// Factor in the auxiliary group.
    pub t0: String,
    /// Unit factor.
    pub y: String,
    /// Auxiliary group containing `t0`.
    pub base: String,
    /// Set containing `y`.
    pub h: String,
    /// Postconditions.
    pub checks: FactorChecks,
}

/// `ga factor`.
pub fn factor_cmd(sig: &Signature, g: GroupId, text: &str) -> Result<FactorOutput, CommandError> {
    let t = parse_multivector(text, sig)?;
    let f = factor(sig, g, &t)?;
    let checks = FactorChecks {
        t0_member: member(sig, f.base, &f.t0, MembershipMode::Norm)?,
        y_in_set: centralizer_closed_form(sig, f.h)?.contains_mv(&f.y),
        y_invertible: sig.is_invertible(&f.y),
        product: sig.gp(&f.t0, &f.y) == t,
    };
    Ok(FactorOutput {
        signature: sig.to_string(),
        group: g.to_string(),
        mv: t.to_string(),
        t0: f.t0.to_string(),
        y: f.y.to_string(),
        base: f.base.to_string(),
        h: f.h.to_string(),
        checks,
    })
}

/// Output of `ga liealg`, and one row of `ga table --lie-dims`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LieOutput {
    /// Group name.
    pub group: String,
    /// Signature `(p,q,r)`.
    pub signature: String,
    /// `p`.
    pub p: usize,
    /// `q`.
    pub q: usize,
    /// `r`.
    pub r: usize,
    /// Whether `basis` lists blades (`true`) or RREF rows (`false`).
    pub blade_spanned: bool,
    /// Basis of the computed Lie algebra.
    pub basis: Vec<String>,
    /// Its dimension.
    pub dim: usize,
    /// Dimension of the norm-form linearization, when the group has one.
    pub norm_dim: Option<usize>,
    /// Whether both linearizations agree.
    pub linearizations_agree: bool,
    /// Whether the computed algebra is closed under the commutator.
    pub closed: bool,
    /// Table row identifier, or `null` when no row covers this case.
    pub row: Option<String>,
    /// The row's span.
    pub table_span: Option<String>,
    /// Dimension of the row's span.
    pub table_dim: Option<usize>,
    /// The row's dimension formula, evaluated.
    pub expected_dim: Option<i64>,
    /// Computed span equals the row's span.
    pub span_match: Option<bool>,
    /// Computed dimension equals the formula.
    pub dim_match: Option<bool>,
    /// Every comparison held; `null` when there is no row.
    #[serde(rename = "match")]
    pub matches: Option<bool>,
    /// Documented source erratum covering a mismatch here.
    pub known_erratum: Option<String>,
}

/// `ga liealg`.
pub fn liealg(sig: &Signature, g: GroupId, with_basis: bool) -> Result<LieOutput, CommandError> {
    let c = check_lie(g, sig)?;
    let (blade_spanned, basis) = basis_strings(sig.n(), &c.computed);
    let exp = c.expected.as_ref().ok();
    Ok(LieOutput {
        group: g.to_string(),
        signature: sig.to_string(),
        p: sig.p(),
        q: sig.q(),
        r: sig.r(),
        blade_spanned,
        basis: if with_basis { basis } else { Vec::new() },
        dim: c.computed.dim(),
        norm_dim: c.norm_dim,
        linearizations_agree: c.linearizations_agree,
        closed: c.closed,
        row: exp.map(|e| e.row.to_string()),
        table_span: exp.map(|e| e.description.clone()),
        table_dim: exp.map(|e| e.span.dim()),
        expected_dim: exp.map(|e| e.dim),
        span_match: c.span_matches(),
        dim_match: c.dim_matches(),
        matches: c.passed(),
        known_erratum: ga_core::lie::known_table_erratum(g, sig).map(str::to_string),
    })
}

/// Every group over every signature with `n <= max_n`, without bases.
pub fn lie_table(max_n: usize, limit: usize) -> Result<Vec<LieOutput>, CommandError> {
    use rayon::prelude::*;
    let sigs = crate::verify::signatures(max_n, limit);
    let rows: Vec<Vec<LieOutput>> = sigs
        .par_iter()
        .map(|s| GroupId::ALL.into_iter().map(|g| liealg(s, g, false)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<_, _>>()?;
    Ok(rows.into_iter().flatten().collect())
}

fn csv_opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or(String::new(), T::to_string)
}

/// CSV form of [`lie_table`].
pub fn lie_table_csv(rows: &[LieOutput]) -> String {
    let mut s = String::from("group,p,q,r,computed_dim,table_dim,formula_dim,span_match,dim_match,match,row\n");
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.group,
            r.p,
            r.q,
            r.r,
            r.dim,
            csv_opt(&r.table_dim),
            csv_opt(&r.expected_dim),
            csv_opt(&r.span_match),
            csv_opt(&r.dim_match),
            csv_opt(&r.matches),
            r.row.as_deref().unwrap_or("no_table_row"),
        );
    }
    s
}

/// One row of `ga table --dims`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimsRow {
    /// Number of generators.
    pub n: usize,
    /// Number of null generators.
    pub r: usize,
    /// `dim_A` from the closed form.
    pub dim_a: String,
    /// `dim_A` as a binomial sum.
    pub dim_a_sum: u64,
    /// `dim_B` from the closed form.
    pub dim_b: String,
    /// `dim_B` as a binomial sum.
    pub dim_b_sum: u64,
    /// `dim_Q` from the corrected closed form.
    pub dim_q: String,
    /// `dim_Q` from the closed form as printed.
    pub dim_q_printed: String,
    /// `dim_Q` as a binomial sum.
    pub dim_q_sum: u64,
    /// Closed forms and sums agree.
    #[serde(rename = "match")]
    pub matches: bool,
}

/// `ga table --dims`.
pub fn dims_table(max_n: usize) -> Vec<DimsRow> {
    let int = |x: u64| Rational::from_integer(x as i64);
    (1..=max_n)
        .flat_map(|n| (0..=n).map(move |r| (n, r)))
        .map(|(n, r)| {
            let (a, b, q) = (dim_a_trig(n, r), dim_b_trig(n, r), dim_q_trig(n, r));
            let (sa, sb, sq) = (dim_a_comb(n, r), dim_b_comb(n, r), dim_q_comb(n, r));
            DimsRow {
                n,
                r,
                matches: a == int(sa) && b == int(sb) && q == int(sq),
                dim_a: a.to_string(),
                dim_a_sum: sa,
                dim_b: b.to_string(),
                dim_b_sum: sb,
                dim_q: q.to_string(),
                dim_q_printed: dim_q_printed(n, r).to_string(),
                dim_q_sum: sq,
            }
        })
        .collect()
}

/// CSV form of [`dims_table`].
pub fn dims_table_csv(rows: &[DimsRow]) -> String {
    let mut s = String::from("n,r,dim_a,dim_a_sum,dim_b,dim_b_sum,dim_q,dim_q_printed,dim_q_sum,match\n");
    for d in rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{},{}",
            d.n, d.r, d.dim_a, d.dim_a_sum, d.dim_b, d.dim_b_sum, d.dim_q, d.dim_q_printed, d.dim_q_sum, d.matches
        );
    }
    s
}

/// Output of `ga norms`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormsOutput {
    /// Signature `(p,q,r)`.
    pub signature: String,
    /// The element.
    pub mv: String,
    /// `psi(t) = reversion(t) t`.
    pub psi: String,
    /// `chi(t) = conjugate(t) t`.
    pub chi: String,
    /// `psi(t)` lies in grades `0, 1 (mod 4)`.
    pub psi_in_qt01: bool,
    /// `chi(t)` lies in grades `0, 3 (mod 4)`.
    pub chi_in_qt03: bool,
    /// Norm-form membership of every group.
    pub groups: Vec<GroupNorm>,
}

/// One group's norm conditions evaluated on an element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupNorm {
    /// Group name.
    pub group: String,
    /// The condition, e.g. `psi in Z3`.
    pub condition: String,
    /// Whether the element is a member.
    pub member: bool,
}

fn describe_norm_form(g: GroupId) -> String {
    match g.norm_form() {
        NormForm::Conditions { psi, chi } => {
            let parts: Vec<String> = [("psi", psi), ("chi", chi)]
                .into_iter()
                .filter_map(|(f, s)| s.map(|s| format!("{f} in {s}")))
                .collect();
            parts.join(" and ")
        }
        NormForm::Intertwining(rep) => format!("{rep}(t) maps each generator to a vector"),
    }
}

/// `ga norms`.
pub fn norms_cmd(sig: &Signature, text: &str) -> Result<NormsOutput, CommandError> {
    let t = parse_multivector(text, sig)?;
    let ctx = MemberContext::new(sig, &t);
    let qt01 = SubspaceName::Qt(0b0011).instantiate(sig);
    let qt03 = SubspaceName::Qt(0b1001).instantiate(sig);
    let groups = GroupId::ALL
        .into_iter()
        .map(|g| {
            Ok(GroupNorm { group: g.to_string(), condition: describe_norm_form(g), member: ctx.member(g, MembershipMode::Norm)? })
        })
        .collect::<Result<_, GaError>>()?;
    Ok(NormsOutput {
        signature: sig.to_string(),
        mv: t.to_string(),
        psi: ctx.psi().to_string(),
        chi: ctx.chi().to_string(),
        psi_in_qt01: qt01.contains_mv(ctx.psi()),
        chi_in_qt03: qt03.contains_mv(ctx.chi()),
        groups,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_text() {
        assert_eq!(parse_signature("2, 0,1", 8).unwrap().to_string(), "(2,0,1)");
        assert!(parse_signature("2,0", 8).is_err());
        assert!(parse_signature("5,5,0", 8).is_err());
        assert!(parse_signature("5,5,0", 10).is_ok());
        assert!(parse_signature("a,0,0", 8).is_err());
    }

    #[test]
    fn limits() {
        assert_eq!(n_limit(None).unwrap(), DEFAULT_N_MAX);
        assert_eq!(n_limit(Some("12")).unwrap(), 12);
        assert!(n_limit(Some("13")).is_err());
        assert!(n_limit(Some("x")).is_err());
    }

    #[test]
    fn member_reports_both_modes() {
        let sig = Signature::new(2, 0, 1).unwrap();
        let out = member_cmd(&sig, GroupId::AuxAc, "e1", ModeChoice::Both).unwrap();
        assert!(out.member);
        assert_eq!(out.psi, "1");
        assert_eq!(out.mode_agreement, None);
        let out = member_cmd(&sig, GroupId::A01, "e1 + e13", ModeChoice::Both).unwrap();
        assert_eq!(out.mode_agreement, Some(true));
    }

    #[test]
    fn centralizer_center_of_a_vector_algebra() {
        let sig = Signature::new(0, 0, 1).unwrap();
        let out = centralizer(&sig, "Z1".parse().unwrap(), false).unwrap();
        assert_eq!(out.basis, ["e", "e1"]);
        assert_eq!(out.closed_form_matches, Some(true));
    }

    #[test]
    fn dims_rows_cover_all_r() {
        let rows = dims_table(3);
        assert_eq!(rows.len(), 2 + 3 + 4);
        assert!(rows.iter().all(|d| d.matches));
    }
}
