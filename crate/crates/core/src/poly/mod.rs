//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored in ascending order (`coeffs[i]` multiplies `X^i`)
//! with no trailing zeros, so the zero polynomial is the empty vector and
//! structural equality coincides with polynomial equality.

mod bareiss;
mod bezout;
mod resultant;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use bareiss::{determinant, mult_matrix, mult_matrix_det, solve_fraction_free};
pub use bezout::{bezout_witness, verify_certificate, BezoutCertificate, Witness};
pub use resultant::resultant;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * X^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// `X^n - a`.
    pub fn binomial(n: usize, a: &BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] += 1;
        coeffs[0] -= a;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `X^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn trailing_index(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub(crate) fn div_scalar_exact(&self, c: &BigInt) -> Self {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|x| {
                    debug_assert!((x % c).is_zero());
                    x / c
                })
                .collect(),
        }
    }

    /// Multiplies by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// `f(X^k)` for `k >= 1`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1, "compose_power needs k >= 1");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn evaluate(&self, a: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * a + c)
    }

    pub fn evaluate_i64(&self, a: i64) -> BigInt {
        self.evaluate(&BigInt::from(a))
    }

    /// Exact division over `Z[X]`: `Ok(Some(h))` with `g * h == self`,
    /// `Ok(None)` when `g` does not divide `self` in `Z[X]`.
    pub fn divide_exact(&self, g: &IntPoly) -> Result<Option<IntPoly>> {
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        let Some(df) = self.degree() else {
            return Ok(Some(Self::zero()));
        };
        if df < dg {
            return Ok(None);
        }
        let lg = &g.coeffs[dg];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); df - dg + 1];
        for i in (0..=df - dg).rev() {
            let top = &rem[i + dg];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lg);
            if !r.is_zero() {
                return Ok(None);
            }
            for (j, gc) in g.coeffs.iter().enumerate() {
                rem[i + j] -= &q * gc;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        Ok(Some(Self::new(quot)))
    }

    /// Pseudo-remainder: `lc(g)^(deg f - deg g + 1) * f mod g`.
    pub(crate) fn pseudo_rem(&self, g: &IntPoly) -> IntPoly {
        let dg = g.degree().expect("pseudo_rem by zero");
        let Some(df) = self.degree() else {
            return Self::zero();
        };
        if df < dg {
            return self.clone();
        }
        let lg = &g.coeffs[dg];
        let mut rem = self.coeffs.clone();
        let mut unused = df - dg + 1;
        for top in (dg..=df).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let c = rem[top].clone();
            if !lg.is_one() {
                for r in rem.iter_mut().take(top + 1) {
                    *r *= lg;
                }
            }
            for (j, gc) in g.coeffs.iter().enumerate() {
                rem[top - dg + j] -= &c * gc;
            }
            unused -= 1;
        }
        let mut r = Self::new(rem);
        if unused > 0 && !lg.is_one() {
            r = r.scale(&num_traits::pow(lg.clone(), unused));
        }
        r
    }
}

impl From<Vec<BigInt>> for IntPoly {
    fn from(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs)
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::new(coeffs)
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        IntPoly::new(coeffs)
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Canonical ascending-term form without spaces, e.g. `1-x+x^2`, `-2+3*x^4`.
/// The output is accepted back by the expression parser.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => f.write_str("x")?,
                (_, false) => write!(f, "{mag}*x")?,
            }
            if i > 1 {
                write!(f, "^{i}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
        assert_eq!(p(&[3]).degree(), Some(0));
    }

    #[test]
    fn add_examples() {
        assert_eq!(p(&[-1, 1]) + p(&[1, 1]), p(&[0, 2]));
        let f = p(&[4, -3, 7]);
        assert_eq!(&f + &IntPoly::zero(), f);
        assert_eq!(p(&[1, -1, 1]) + p(&[-1, 1]), p(&[0, 0, 1]));
    }

    #[test]
    fn add_example_matches_pointwise_evaluation() {
        let (f, g) = (p(&[1, -1, 1]), p(&[-1, 1]));
        let sum = &f + &g;
        for x in [-7i64, 3, 11] {
            assert_eq!(sum.evaluate_i64(x), f.evaluate_i64(x) + g.evaluate_i64(x));
        }
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(&[1, 1]) * p(&[-1, 1]), p(&[-1, 0, 1]));
        assert_eq!(p(&[1, -1, 1]) * p(&[1, 1]), p(&[1, 0, 0, 1]));
        let f = p(&[5, 0, -2]);
        assert_eq!(&f * &IntPoly::one(), f);
        assert!((&f * &IntPoly::zero()).is_zero());
    }

    #[test]
    fn divide_exact_examples() {
        assert_eq!(
            p(&[1, 0, 0, 1]).divide_exact(&p(&[1, 1])).unwrap(),
            Some(p(&[1, -1, 1]))
        );
        assert_eq!(p(&[-1, 0, 1]).divide_exact(&p(&[-2, 1])).unwrap(), None);
        let f = p(&[9, 8, 7]);
        assert_eq!(f.divide_exact(&IntPoly::one()).unwrap(), Some(f.clone()));
        assert_eq!(f.divide_exact(&IntPoly::zero()), Err(Error::DivisionByZero));
        // divisible over Q but not over Z
        assert_eq!(p(&[1, 1]).divide_exact(&p(&[2, 2])).unwrap(), None);
        assert_eq!(p(&[2, 2]).divide_exact(&p(&[1, 1])).unwrap(), Some(p(&[2])));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(p(&[1, -1, 1]).evaluate_i64(2), BigInt::from(3));
        assert_eq!(p(&[-1, 1]).evaluate_i64(0), BigInt::from(-1));
        // Φ9 = X^6 + X^3 + 1
        assert_eq!(p(&[1, 0, 0, 1, 0, 0, 1]).evaluate_i64(1), BigInt::from(3));
    }

    #[test]
    fn content_examples() {
        assert_eq!(p(&[2, 2]).content(), BigInt::from(2));
        assert_eq!(p(&[-1, -1, 1]).content(), BigInt::from(1));
        assert_eq!(IntPoly::zero().content(), BigInt::from(0));
        assert_eq!(p(&[-6, 0, -9]).content(), BigInt::from(3));
    }

    #[test]
    fn pseudo_remainder_identity() {
        // lc(g)^(δ+1) f = q g + r with deg r < deg g
        let f = p(&[3, -1, 4, 1, -5]);
        let g = p(&[2, 0, 3]);
        let r = f.pseudo_rem(&g);
        assert!(r.degree().unwrap_or(0) < 2);
        let lhs = f.scale(&BigInt::from(27)) - r;
        assert!(lhs.divide_exact(&g).unwrap().is_some());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p(&[1, -1, 1]).to_string(), "1-x+x^2");
        assert_eq!(p(&[-1, 0, 1]).to_string(), "-1+x^2");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(p(&[0, 0, 0, 2]).to_string(), "2*x^3");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[-7]).to_string(), "-7");
    }

    #[test]
    fn compose_and_pow() {
        assert_eq!(p(&[1, 1]).compose_power(3), p(&[1, 0, 0, 1]));
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[5, 1]).pow(0), IntPoly::one());
        assert_eq!(IntPoly::binomial(3, &BigInt::from(-2)), p(&[2, 0, 0, 1]));
    }
}
