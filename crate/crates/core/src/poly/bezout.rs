use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{mult_matrix, resultant, solve_fraction_free, IntPoly};
use crate::error::{Error, Result};

/// Integer polynomials `p`, `q` with `p*f + q*(X^n - a) = 1`,
/// `deg p < n` and `deg q < deg f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub p: IntPoly,
    pub q: IntPoly,
    pub n: u64,
    pub a: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Certificate(BezoutCertificate),
    NotAUnit { resultant: BigInt },
}

impl Witness {
    pub fn certificate(&self) -> Option<&BezoutCertificate> {
        match self {
            Witness::Certificate(c) => Some(c),
            Witness::NotAUnit { .. } => None,
        }
    }
}

fn check_args(n: u64, a: i64) -> Result<usize> {
    if n < 1 {
        return Err(Error::invalid("n must be at least 1"));
    }
    if a == 0 {
        return Err(Error::invalid("a must be nonzero"));
    }
    usize::try_from(n).map_err(|_| Error::size("n does not fit in memory"))
}

/// Finds the certificate that `f(x)` is invertible in `Z[X]/(X^n - a)`.
///
/// `p` is the inverse of `f` in the quotient ring, found by solving the
/// multiplication-matrix system `M p = e_0`; that system is unimodular
/// exactly when `|Res(X^n - a, f)| = 1`. `q` then follows by exact division.
pub fn bezout_witness(f: &IntPoly, n: u64, a: i64) -> Result<Witness> {
    let nn = check_args(n, a)?;
    if f.is_zero() {
        return Err(Error::invalid("f must be nonzero"));
    }
    let a_big = BigInt::from(a);
    let modulus = IntPoly::binomial(nn, &a_big);
    let res = resultant(&modulus, f)?;
    if !res.abs().is_one() {
        return Ok(Witness::NotAUnit { resultant: res });
    }

    let matrix = mult_matrix(f, nn, &a_big);
    let mut e0 = vec![BigInt::zero(); nn];
    e0[0] = BigInt::one();
    let (det, y) = solve_fraction_free(&matrix, &e0)
        .expect("unimodular multiplication matrix must be invertible");
    debug_assert_eq!(det, res);
    let p = IntPoly::new(y.into_iter().map(|v| v * &det).collect());

    let residual = &IntPoly::one() - &(&p * f);
    let q = residual
        .divide_exact(&modulus)?
        .expect("p is an inverse modulo X^n - a");
    let cert = BezoutCertificate { p, q, n, a };
    debug_assert!(verify_certificate(f, &cert));
    Ok(Witness::Certificate(cert))
}

/// Checks `p*f + q*(X^n - a) = 1` exactly together with the degree contract.
pub fn verify_certificate(f: &IntPoly, cert: &BezoutCertificate) -> bool {
    if cert.n < 1 || cert.a == 0 || f.is_zero() {
        return false;
    }
    let Ok(n) = usize::try_from(cert.n) else {
        return false;
    };
    if cert.p.degree().is_some_and(|d| d >= n) {
        return false;
    }
    let df = f.degree().unwrap();
    if cert.q.degree().is_some_and(|d| d >= df) {
        return false;
    }
    let modulus = IntPoly::binomial(n, &BigInt::from(cert.a));
    &(&cert.p * f) + &(&cert.q * &modulus) == IntPoly::one()
}
