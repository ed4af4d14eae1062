//! The closed list of checkable identities and the driver that evaluates both
//! sides and counts the residual.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use super::det::{
    adjugate, cdet, cofactor_col, cofactor_row, laplace_col, laplace_row, per_q, rdet, MinorSide,
};
use super::matrix::{build_B, build_Bprime, GenMatrix};
use super::maya::{maya_residuals, MayaSign};
use super::perm::{complement, subsets};
use super::pfaff::{hf_full, hf_matching, hf_recursive, pf_full, pf_matching, pf_recursive};
use crate::error::{Error, Result};
use crate::ncalg::{coproduct, embed, Algebra, AlgebraSpec, NCPoly, Regime, Side};
use crate::qexterior::{manin_check, phi_check};
use crate::ratfunc::RatFunc;
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    DetRcEq,
    DetCommutation,
    Cramer,
    PfRdet,
    PfCdet,
    PfPf,
    HfPer,
    Grouplike,
    MinorRc,
    Laplace,
    Maya,
    MayaNeg,
    PfSimplified,
    HfSimplified,
    PfRecursion,
    HfRecursion,
    Phi,
    Manin,
}

/// Determinant identities take the matrix size `n`; Pfaffian identities the
/// even size `2n` of `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Determinant,
    Pfaffian,
}

pub const DET_SIZE_CAP: usize = 4;
pub const PF_SIZE_CAP: usize = 6;

impl Identity {
    pub const ALL: [Identity; 18] = [
        Identity::DetRcEq,
        Identity::DetCommutation,
        Identity::Cramer,
        Identity::PfRdet,
        Identity::PfCdet,
        Identity::PfPf,
        Identity::HfPer,
        Identity::Grouplike,
        Identity::MinorRc,
        Identity::Laplace,
        Identity::Maya,
        Identity::MayaNeg,
        Identity::PfSimplified,
        Identity::HfSimplified,
        Identity::PfRecursion,
        Identity::HfRecursion,
        Identity::Phi,
        Identity::Manin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::DetRcEq => "det_rc_eq",
            Identity::DetCommutation => "det_commutation",
            Identity::Cramer => "cramer",
            Identity::PfRdet => "pf_rdet",
            Identity::PfCdet => "pf_cdet",
            Identity::PfPf => "pf_pf",
            Identity::HfPer => "hf_per",
            Identity::Grouplike => "grouplike",
            Identity::MinorRc => "minor_rc",
            Identity::Laplace => "laplace",
            Identity::Maya => "maya",
            Identity::MayaNeg => "maya_neg",
            Identity::PfSimplified => "pf_simplified",
            Identity::HfSimplified => "hf_simplified",
            Identity::PfRecursion => "pf_recursion",
            Identity::HfRecursion => "hf_recursion",
            Identity::Phi => "phi",
            Identity::Manin => "manin",
        }
    }

    pub fn family(self) -> Family {
        match self {
            Identity::PfRdet
            | Identity::PfCdet
            | Identity::PfPf
            | Identity::HfPer
            | Identity::Maya
            | Identity::MayaNeg
            | Identity::PfSimplified
            | Identity::HfSimplified
            | Identity::PfRecursion
            | Identity::HfRecursion => Family::Pfaffian,
            _ => Family::Determinant,
        }
    }

    pub fn size_cap(self) -> usize {
        match self.family() {
            Family::Determinant => DET_SIZE_CAP,
            Family::Pfaffian => PF_SIZE_CAP,
        }
    }

    /// Regimes in which the identity is stated. `None` means any.
    pub fn required_regimes(self) -> Option<&'static [Regime]> {
        const Q_BOTH: &[Regime] = &[Regime::QInverse, Regime::QNegative];
        const Q_NEG: &[Regime] = &[Regime::QNegative];
        match self {
            Identity::PfSimplified | Identity::PfRecursion => Some(Q_BOTH),
            Identity::HfPer | Identity::HfSimplified | Identity::HfRecursion => Some(Q_NEG),
            _ => None,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Identity> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Allow sizes beyond the desk-scale caps.
    pub no_size_cap: bool,
    /// Build the algebra with a perturbed rewrite coefficient (harness self-test).
    #[doc(hidden)]
    pub corrupted: bool,
}

/// Check `name` at `size` in `regime` with the default size caps.
pub fn verify_identity(name: &str, size: usize, regime: &Regime) -> Result<Report> {
    verify_identity_with(name.parse()?, size, regime, &VerifyOptions::default())
}

pub fn verify_identity_with(
    id: Identity,
    size: usize,
    regime: &Regime,
    opts: &VerifyOptions,
) -> Result<Report> {
    let cap = id.size_cap();
    let bad_size = size == 0 || (id.family() == Family::Pfaffian && !size.is_multiple_of(2));
    if bad_size || (!opts.no_size_cap && size > cap) {
        return Err(Error::UnsupportedSize {
            identity: id.name().into(),
            size,
            cap,
        });
    }
    if let Some(allowed) = id.required_regimes() {
        if !allowed.contains(regime) {
            return Err(Error::UnsupportedRegime {
                identity: id.name().into(),
                regime: regime.label(),
            });
        }
    }
    let mut spec = AlgebraSpec::single(size, regime)?;
    if opts.corrupted {
        spec = spec.corrupted();
    }
    let alg = Algebra::new(spec);
    let start = Instant::now();
    let residual = match id {
        Identity::Phi => return phi_check(&alg),
        Identity::Manin => return manin_check(&alg),
        _ => residual_terms(id, &alg, regime)?,
    };
    Ok(Report::new(
        id.name(),
        size,
        &regime.label(),
        residual,
        start.elapsed(),
    ))
}

fn diff(a: &NCPoly, b: &NCPoly) -> usize {
    (a - b).nterms()
}

/// The `q` used by Maya-type checks: the regime's own `q`, or `r` otherwise.
fn maya_q(alg: &Algebra, regime: &Regime) -> RatFunc {
    regime.q().unwrap_or_else(|| alg.r().clone())
}

fn residual_terms(id: Identity, alg: &Arc<Algebra>, regime: &Regime) -> Result<usize> {
    let n = alg.n();
    let a = GenMatrix::generic(alg);
    let r = alg.r().clone();
    let s = alg.s().clone();
    let s_inv = s.rf_inv()?;
    Ok(match id {
        Identity::DetRcEq => diff(&rdet(&a)?, &cdet(&a)?),
        Identity::DetCommutation => {
            let d = rdet(&a)?;
            let rs = &r * &s;
            let mut total = 0;
            for i in 1..=n {
                for j in 1..=n {
                    let x = a.get(i, j);
                    let rhs = (x * &d).scale(&rs.pow(j as i64 - i as i64)?);
                    total += diff(&(&d * x), &rhs);
                }
            }
            total
        }
        Identity::Cramer => {
            let d = rdet(&a)?;
            let di = GenMatrix::scalar_identity(alg, n, &d);
            let adj = adjugate(&a)?;
            let products = [
                a.tau(&r)?.mul(&adj)?,
                adj.mul(&a.tau(&s_inv)?)?,
                a.mul(&adj.tau(&r.rf_inv()?)?)?,
                adj.tau(&s)?.mul(&a)?,
            ];
            let mut total = 0;
            for p in &products {
                total += p.sub(&di)?.term_count();
            }
            total
        }
        Identity::PfRdet => diff(&pf_full(&build_B(alg)?, &r)?, &rdet(&a)?),
        Identity::PfCdet => diff(&pf_full(&build_Bprime(alg)?, &s_inv)?, &cdet(&a)?),
        Identity::PfPf => diff(
            &pf_full(&build_B(alg)?, &r)?,
            &pf_full(&build_Bprime(alg)?, &s_inv)?,
        ),
        Identity::HfPer => {
            let q = maya_q(alg, regime);
            diff(&hf_full(&build_Bprime(alg)?, &q)?, &per_q(&a)?)
        }
        Identity::Grouplike => {
            let mut total = 0;
            for d in [rdet(&a)?, cdet(&a)?] {
                let lhs = coproduct(&d)?;
                let rhs = &embed(&d, Side::Left)? * &embed(&d, Side::Right)?;
                total += diff(&lhs, &rhs);
            }
            total
        }
        Identity::MinorRc => {
            let mut total = 0;
            for t in 1..=n {
                for rows in subsets(n, t) {
                    for cols in subsets(n, t) {
                        let m = a.minor(&rows, &cols)?;
                        total += diff(&rdet(&m)?, &cdet(&m)?);
                    }
                }
            }
            total
        }
        Identity::Laplace => {
            let d = rdet(&a)?;
            let mut total = 0;
            for t in 1..n {
                for first in subsets(n, t) {
                    let second = complement(n, &first);
                    total += diff(&laplace_row(&a, &first, &second)?, &d);
                    total += diff(&laplace_col(&a, &first, &second)?, &d);
                }
            }
            for i in 1..=n {
                for k in 1..=n {
                    let expect = if i == k { d.clone() } else { alg.zero() };
                    for side in [MinorSide::Right, MinorSide::Left] {
                        total += diff(&cofactor_row(&a, i, k, side)?, &expect);
                        total += diff(&cofactor_col(&a, i, k, side)?, &expect);
                    }
                }
            }
            total
        }
        Identity::Maya => count(maya_residuals(
            &build_B(alg)?,
            &maya_q(alg, regime),
            MayaSign::Plus,
        )?),
        Identity::MayaNeg => count(maya_residuals(
            &build_Bprime(alg)?,
            &maya_q(alg, regime),
            MayaSign::Minus,
        )?),
        Identity::PfSimplified => {
            let (b, q) = (build_B(alg)?, maya_q(alg, regime));
            diff(&pf_full(&b, &q)?, &pf_matching(&b, &q)?)
        }
        Identity::PfRecursion => {
            let (b, q) = (build_B(alg)?, maya_q(alg, regime));
            let rec = pf_recursive(&b, &q)?;
            diff(&rec, &pf_matching(&b, &q)?) + diff(&rec, &pf_full(&b, &q)?)
        }
        Identity::HfSimplified => {
            let (b, q) = (build_Bprime(alg)?, maya_q(alg, regime));
            diff(&hf_full(&b, &q)?, &hf_matching(&b, &q)?)
        }
        Identity::HfRecursion => {
            let (b, q) = (build_Bprime(alg)?, maya_q(alg, regime));
            let rec = hf_recursive(&b, &q)?;
            diff(&rec, &hf_matching(&b, &q)?) + diff(&rec, &hf_full(&b, &q)?)
        }
        Identity::Phi | Identity::Manin => unreachable!("handled by the exterior checks"),
    })
}

fn count(residuals: Vec<NCPoly>) -> usize {
    residuals.iter().map(NCPoly::nterms).sum()
}
