//! Single-instance decision: is `f(x)` a unit of `Z[X]/(X^n - a)`?
//!
//! `f(x)` is invertible there iff its norm, the determinant of multiplication
//! by `f`, is `±1`. That norm equals `Res(X^n - a, f)`, which is what the
//! primary path computes. The multiplication-matrix determinant is an
//! independent route to the same number and can be switched on as a check.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Limits, Result};
use crate::poly::{self, BezoutCertificate, IntPoly, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitVerdict {
    pub f: IntPoly,
    pub n: u64,
    pub a: i64,
    pub is_unit: bool,
    /// `Res(X^n - a, f)`, the norm of `f(x)`.
    pub resultant: BigInt,
    pub certificate: Option<BezoutCertificate>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckOptions {
    pub certificate: bool,
    /// Recompute the norm as a determinant and fail on disagreement.
    pub cross_check: bool,
    pub limits: Limits,
}

pub(crate) fn validate(f: &IntPoly, n: u64, a: i64, limits: &Limits) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::invalid("f must be nonzero"));
    }
    if n < 1 {
        return Err(Error::invalid("n must be at least 1"));
    }
    if a == 0 {
        return Err(Error::invalid("a must be nonzero"));
    }
    let nn = usize::try_from(n).unwrap_or(usize::MAX);
    if nn > limits.degree_budget {
        return Err(Error::DegreeLimit {
            degree: nn,
            budget: limits.degree_budget,
        });
    }
    Ok(nn)
}

pub fn defines_units_on_roots(
    f: &IntPoly,
    n: u64,
    a: i64,
    want_certificate: bool,
) -> Result<UnitVerdict> {
    check_units(
        f,
        n,
        a,
        &CheckOptions {
            certificate: want_certificate,
            ..CheckOptions::default()
        },
    )
}

/// Units on `n`-th roots of 1, i.e. on a cyclic group of order `n`.
pub fn defines_unit_on_order(f: &IntPoly, n: u64) -> Result<UnitVerdict> {
    defines_units_on_roots(f, n, 1, false)
}

/// Norm of `f(x)` in `Z[X]/(X^n - a)` without building a verdict.
pub(crate) fn norm(f: &IntPoly, n: u64, a: i64, limits: &Limits) -> Result<BigInt> {
    let nn = validate(f, n, a, limits)?;
    poly::resultant(&IntPoly::binomial(nn, &BigInt::from(a)), f)
}

pub fn check_units(f: &IntPoly, n: u64, a: i64, opts: &CheckOptions) -> Result<UnitVerdict> {
    let resultant = norm(f, n, a, &opts.limits)?;
    if opts.cross_check {
        let det = poly::mult_matrix_det(f, n, a)?;
        if det != resultant {
            return Err(Error::OracleMismatch {
                resultant: resultant.to_string(),
                determinant: det.to_string(),
            });
        }
    }
    let is_unit = resultant.abs().is_one();
    let certificate = if opts.certificate && is_unit {
        match poly::bezout_witness(f, n, a)? {
            Witness::Certificate(c) => {
                debug_assert!(poly::verify_certificate(f, &c));
                Some(c)
            }
            Witness::NotAUnit { .. } => unreachable!("resultant is ±1"),
        }
    } else {
        None
    };
    Ok(UnitVerdict {
        f: f.clone(),
        n,
        a,
        is_unit,
        resultant,
        certificate,
    })
}

pub fn verify_certificate(f: &IntPoly, cert: &BezoutCertificate) -> bool {
    poly::verify_certificate(f, cert)
}
