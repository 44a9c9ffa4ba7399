//! Whole-family questions about a polynomial `f`: which `n` make `f(x)` a
//! unit of `Z[X]/(X^n - a)`, and is that set infinite?
//!
//! Everything hinges on the decomposition `f = c · ±1 · X^k · prod Φ_{m_i}^{e_i} · r`.
//! When `c = 1` and `r = 1` the unit set is periodic: `Φ_m` is a unit on
//! `n`-th roots of `a` iff `Φ_d(a) = ±1` for `d = m / gcd(n, m)`, and `d`
//! depends on `n` only through `n mod m`. Otherwise the set is finite and
//! only a count bound is known, so the scan reported alongside it is never
//! claimed to be complete.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;

use crate::cyclo::{self, lcm_all};
use crate::error::{Error, Limits, Result};
use crate::poly::IntPoly;
use crate::unitcheck;

pub const DEFAULT_SCAN_LIMIT: u64 = 1000;

/// `f = content · sign · X^x_power · prod Φ_m^e · remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloShape {
    /// Positive gcd of the coefficients.
    pub content: BigInt,
    /// `1` or `-1`.
    pub sign: i8,
    pub x_power: usize,
    /// `(m, multiplicity)` ascending by `m`.
    pub factors: Vec<(u64, u32)>,
    /// Positive leading coefficient, nonzero constant term, no cyclotomic factor.
    pub remainder: IntPoly,
}

impl CycloShape {
    pub fn is_pure_cyclotomic(&self) -> bool {
        self.content.is_one() && self.remainder == IntPoly::one()
    }

    /// Multiplies the pieces back together.
    pub fn reconstruct(&self) -> Result<IntPoly> {
        let mut acc = self
            .remainder
            .scale(&(&self.content * BigInt::from(self.sign)))
            .shift(self.x_power);
        for &(m, e) in &self.factors {
            acc = &acc * &cyclo::cyclotomic(m)?.pow(e);
        }
        Ok(acc)
    }
}

pub fn factor_shape(f: &IntPoly) -> Result<CycloShape> {
    factor_shape_with(f, &Limits::default())
}

/// Largest `m` the candidate sweep will visit before refusing.
const CANDIDATE_CEILING: u64 = 100_000_000;

fn phi_sieve(limit: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=limit as u64).collect();
    for i in 2..=limit {
        if phi[i] == i as u64 {
            for j in (i..=limit).step_by(i) {
                phi[j] -= phi[j] / i as u64;
            }
        }
    }
    phi
}

/// Strips content, sign and the power of `X`, then trial-divides by every
/// `Φ_m` that could still fit. `φ(m) >= sqrt(m / 2)`, so no cyclotomic
/// factor of a degree-`D` polynomial has `m > 2 D^2`.
pub fn factor_shape_with(f: &IntPoly, limits: &Limits) -> Result<CycloShape> {
    if f.is_zero() {
        return Err(Error::invalid("f must be nonzero"));
    }
    let content = f.content();
    let mut rest = f.div_scalar_exact(&content);
    let sign: i8 = if rest.leading().unwrap().is_negative() { -1 } else { 1 };
    if sign < 0 {
        rest = -rest;
    }
    let x_power = rest.trailing_index().unwrap();
    rest = IntPoly::new(rest.coeffs()[x_power..].to_vec());

    let mut factors = Vec::new();
    let deg = rest.degree().unwrap() as u64;
    if deg > 0 {
        let bound = 2 * deg * deg;
        if bound > CANDIDATE_CEILING {
            return Err(Error::size(format!(
                "cyclotomic candidate sweep up to {bound} is too large"
            )));
        }
        let phi = phi_sieve(bound as usize);
        let mut m = 1u64;
        loop {
            let d = rest.degree().unwrap() as u64;
            if d == 0 || m > 2 * d * d {
                break;
            }
            if phi[m as usize] <= d {
                let cyc = cyclo::cyclotomic_with_budget(m, limits.degree_budget)?;
                let mut mult = 0u32;
                while let Some(q) = rest.divide_exact(&cyc)? {
                    rest = q;
                    mult += 1;
                }
                if mult > 0 {
                    factors.push((m, mult));
                }
            }
            m += 1;
        }
    }

    Ok(CycloShape {
        content,
        sign,
        x_power,
        factors,
        remainder: rest,
    })
}

/// Why a polynomial fails to define generic units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Offender {
    Content(BigInt),
    /// `Φ_m` with `m` equal to 1 or a prime power.
    Cyclotomic(u64),
    Remainder(IntPoly),
}

impl fmt::Display for Offender {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Offender::Content(c) => write!(f, "content:{c}"),
            Offender::Cyclotomic(m) => write!(f, "{m}"),
            Offender::Remainder(r) => write!(f, "remainder:{r}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericVerdict {
    pub generic: bool,
    /// `D` such that `f` is a unit on every order coprime to `D`.
    pub modulus: Option<u64>,
    pub offenders: Vec<Offender>,
}

/// `f` defines generic units iff `f = ±X^k prod Φ_{m_i}` with every `m_i`
/// neither 1 nor a prime power.
pub fn is_generic(f: &IntPoly) -> Result<GenericVerdict> {
    let shape = factor_shape(f)?;
    let mut offenders = Vec::new();
    if !shape.content.is_one() {
        offenders.push(Offender::Content(shape.content.clone()));
    }
    for &(m, _) in &shape.factors {
        if cyclo::is_one_or_prime_power(m)? {
            offenders.push(Offender::Cyclotomic(m));
        }
    }
    if shape.remainder != IntPoly::one() {
        offenders.push(Offender::Remainder(shape.remainder.clone()));
    }
    if offenders.is_empty() {
        let d = lcm_all(shape.factors.iter().map(|&(m, _)| m));
        Ok(GenericVerdict {
            generic: true,
            modulus: Some(d),
            offenders,
        })
    } else {
        Ok(GenericVerdict {
            generic: false,
            modulus: None,
            offenders,
        })
    }
}

/// Union of residue classes modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicSet {
    pub modulus: u64,
    /// Ascending subset of `0..modulus`.
    pub residues: Vec<u64>,
}

impl PeriodicSet {
    pub fn contains(&self, n: u64) -> bool {
        self.residues.binary_search(&(n % self.modulus)).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    /// Members in `1..=limit`, ascending.
    pub fn members_up_to(&self, limit: u64) -> Vec<u64> {
        (1..=limit).filter(|&n| self.contains(n)).collect()
    }
}

/// Exact unit set of a pure cyclotomic shape on roots of `a`.
pub fn unit_residues(shape: &CycloShape, a: i64) -> Result<PeriodicSet> {
    unit_residues_with(shape, a, &Limits::default())
}

pub fn unit_residues_with(shape: &CycloShape, a: i64, limits: &Limits) -> Result<PeriodicSet> {
    if a == 0 {
        return Err(Error::invalid("a must be nonzero"));
    }
    if !shape.is_pure_cyclotomic() {
        return Err(Error::ShapeNotCyclotomic);
    }
    let modulus = shape
        .factors
        .iter()
        .try_fold(1u64, |acc, &(m, _)| acc.checked_mul(m / acc.gcd(&m)))
        .filter(|&l| l <= limits.residue_ceiling)
        .ok_or_else(|| Error::size("residue modulus exceeds the configured ceiling"))?;

    // X is invertible modulo X^n - a exactly when a = ±1
    if shape.x_power > 0 && a.abs() != 1 {
        return Ok(PeriodicSet {
            modulus,
            residues: Vec::new(),
        });
    }

    // good[i][r] for r in 0..m_i: Φ_{m_i} is a unit whenever n ≡ r (mod m_i)
    let mut good = Vec::with_capacity(shape.factors.len());
    for &(m, _) in &shape.factors {
        let mut row = Vec::with_capacity(m as usize);
        for r in 0..m {
            let d = m / r.gcd(&m);
            row.push(cyclo::phi_is_pm1(d, a)?.is_pm1());
        }
        good.push(row);
    }
    let residues = (0..modulus)
        .filter(|&r| {
            shape
                .factors
                .iter()
                .zip(&good)
                .all(|(&(m, _), row)| row[(r % m) as usize])
        })
        .collect();
    Ok(PeriodicSet { modulus, residues })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// Every `n` works (`f = ±1`).
    All,
    /// No `n` works.
    Empty,
    /// Infinitely many `n`, exactly described.
    Infinite(PeriodicSet),
    /// Finitely many `n`: at most `bound` of them, `members` found by scanning
    /// `1..=scan_limit`. The scan is never certified complete.
    Finite {
        bound: BigInt,
        members: Vec<u64>,
        scan_limit: u64,
        exhaustive: bool,
    },
}

pub fn classify_roots(f: &IntPoly, a: i64, scan_limit: u64) -> Result<Classification> {
    classify_roots_with(f, a, scan_limit, &Limits::default())
}

pub fn classify_roots_with(
    f: &IntPoly,
    a: i64,
    scan_limit: u64,
    limits: &Limits,
) -> Result<Classification> {
    if a == 0 {
        return Err(Error::invalid("a must be nonzero"));
    }
    if f.is_zero() {
        return Ok(Classification::Empty);
    }
    if f.degree() == Some(0) && f.coeffs()[0].abs().is_one() {
        return Ok(Classification::All);
    }
    let shape = factor_shape_with(f, limits)?;
    if !shape.content.is_one() {
        return Ok(Classification::Empty);
    }
    if shape.is_pure_cyclotomic() {
        let set = unit_residues_with(&shape, a, limits)?;
        return Ok(if set.is_empty() {
            Classification::Empty
        } else {
            Classification::Infinite(set)
        });
    }
    let bound = compute_bound_with(f, a, limits)?;
    let members = scan_orders(f, a, scan_limit, limits)?;
    Ok(Classification::Finite {
        bound,
        members,
        scan_limit,
        exhaustive: false,
    })
}

pub fn compute_bound(f: &IntPoly, a: i64) -> Result<BigInt> {
    compute_bound_with(f, a, &Limits::default())
}

/// `3 · 7^((deg f - ord f)(1 + 2k))`, where `k` counts the distinct primes
/// dividing `a · c_ord · c_deg` (lowest and highest nonzero coefficients).
pub fn compute_bound_with(f: &IntPoly, a: i64, limits: &Limits) -> Result<BigInt> {
    if f.is_zero() {
        return Err(Error::invalid("f must be nonzero"));
    }
    if a == 0 {
        return Err(Error::invalid("a must be nonzero"));
    }
    let top = f.degree().unwrap();
    let low = f.trailing_index().unwrap();
    let mut primes = Vec::new();
    for v in [BigInt::from(a), f.coeffs()[low].clone(), f.coeffs()[top].clone()] {
        let v = v
            .abs()
            .to_u64()
            .ok_or_else(|| Error::size(format!("{v} is too large to factor")))?;
        primes.extend(cyclo::factorize_with(v, limits.factor_ceiling)?.primes());
    }
    primes.sort_unstable();
    primes.dedup();
    let k = primes.len() as u64;
    let exponent = ((top - low) as u64)
        .checked_mul(1 + 2 * k)
        .and_then(|e| u32::try_from(e).ok())
        .ok_or_else(|| Error::size("bound exponent overflow"))?;
    Ok(BigInt::from(3) * num_traits::pow(BigInt::from(7), exponent as usize))
}

/// `n` in `1..=scan_limit` making `f` a unit, by one resultant per `n`.
pub fn scan_orders(f: &IntPoly, a: i64, scan_limit: u64, limits: &Limits) -> Result<Vec<u64>> {
    unitcheck::validate(f, 1, a, limits)?;
    let flags = (1..=scan_limit)
        .into_par_iter()
        .map(|n| unitcheck::norm(f, n, a, limits).map(|r| r.abs().is_one()))
        .collect::<Result<Vec<bool>>>()?;
    Ok(flags
        .into_iter()
        .zip(1..)
        .filter_map(|(unit, n)| unit.then_some(n))
        .collect())
}

pub fn enumerate_orders(f: &IntPoly, a: i64, scan_limit: u64) -> Result<Vec<u64>> {
    enumerate_orders_with(f, a, scan_limit, &Limits::default())
}

/// Ascending unit orders up to `scan_limit`, read off the residue set for
/// pure cyclotomic shapes and scanned otherwise.
pub fn enumerate_orders_with(
    f: &IntPoly,
    a: i64,
    scan_limit: u64,
    limits: &Limits,
) -> Result<Vec<u64>> {
    unitcheck::validate(f, 1, a, limits)?;
    let shape = factor_shape_with(f, limits)?;
    if shape.is_pure_cyclotomic() {
        return Ok(unit_residues_with(&shape, a, limits)?.members_up_to(scan_limit));
    }
    if !shape.content.is_one() {
        return Ok(Vec::new());
    }
    scan_orders(f, a, scan_limit, limits)
}
