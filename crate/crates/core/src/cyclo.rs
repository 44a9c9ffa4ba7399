//! Elementary number theory and cyclotomic polynomials.
//!
//! Besides the usual arithmetic functions this module carries the table
//! deciding when `Φ_m(a) = ±1`. That table is purely combinatorial: it looks
//! at the prime-power structure of `m` and never evaluates `Φ_m`, so it can be
//! checked against [`cyclotomic`] + [`IntPoly::evaluate`].

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Limits, Result};
use crate::poly::IntPoly;

/// Prime factorization as `(p, α)` pairs, ascending by `p`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrimeFactorization {
    factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of distinct primes.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// Product of the distinct primes.
    pub fn radical(&self) -> u64 {
        self.primes().product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }
}

pub fn factorize(n: u64) -> Result<PrimeFactorization> {
    factorize_with(n, Limits::default().factor_ceiling)
}

/// Trial division, refusing inputs above `ceiling`.
pub fn factorize_with(mut n: u64, ceiling: u64) -> Result<PrimeFactorization> {
    if n < 1 {
        return Err(Error::invalid("cannot factor 0"));
    }
    if n > ceiling {
        return Err(Error::size(format!(
            "{n} exceeds the trial-division ceiling {ceiling}"
        )));
    }
    let mut factors = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0;
        while n.is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut n);
    let mut p = 3;
    while p * p <= n {
        push(p, &mut n);
        p += 2;
    }
    if n > 1 {
        factors.push((n, 1));
    }
    Ok(PrimeFactorization { factors })
}

pub fn mobius(n: u64) -> Result<i8> {
    let f = factorize(n)?;
    Ok(if !f.is_squarefree() {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    })
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f
        .factors
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product())
}

/// All positive divisors, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let f = factorize(n)?;
    let mut divs = vec![1u64];
    for &(p, e) in f.factors() {
        let current = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..current {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

/// Where `m` sits relative to the exclusion classes of the unit criteria.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimePowerClass {
    One,
    Two,
    /// `m = p^α`, `α >= 1`, `m != 2`.
    PrimePower { p: u64, alpha: u32 },
    /// `m = 2 p^α` with `p` odd.
    TwicePrimePower { p: u64, alpha: u32 },
    Other,
}

pub fn prime_power_class(m: u64) -> Result<PrimePowerClass> {
    let f = factorize(m)?;
    Ok(match f.factors() {
        [] => PrimePowerClass::One,
        [(2, 1)] => PrimePowerClass::Two,
        &[(p, alpha)] => PrimePowerClass::PrimePower { p, alpha },
        &[(2, 1), (p, alpha)] => PrimePowerClass::TwicePrimePower { p, alpha },
        _ => PrimePowerClass::Other,
    })
}

/// `m = 1` or `m = p^α` (2 included).
pub fn is_one_or_prime_power(m: u64) -> Result<bool> {
    Ok(matches!(
        prime_power_class(m)?,
        PrimePowerClass::One | PrimePowerClass::Two | PrimePowerClass::PrimePower { .. }
    ))
}

/// `m` is `2 q` for a prime power `q` (this includes `4, 8, 16, ...`).
fn is_twice_prime_power(m: u64) -> Result<bool> {
    if !m.is_multiple_of(2) || m < 4 {
        return Ok(false);
    }
    Ok(matches!(
        prime_power_class(m / 2)?,
        PrimePowerClass::PrimePower { .. } | PrimePowerClass::Two
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PhiClass {
    pub m: u64,
    pub a: i64,
    pub value_is_plus_one: bool,
    pub value_is_minus_one: bool,
}

impl PhiClass {
    pub fn is_pm1(&self) -> bool {
        self.value_is_plus_one || self.value_is_minus_one
    }
}

/// Decides `Φ_m(a) = 1` and `Φ_m(a) = -1` from the structure of `m` alone.
///
/// `+1`: `a = 0, m != 1`; `a = 1`, `m` neither 1 nor a prime power;
/// `a = -1`, `m` neither 1, 2 nor twice a prime power; `a = 2, m = 1`.
/// `-1`: `a = 0, m = 1`; `a = -2, m = 2`.
pub fn phi_is_pm1(m: u64, a: i64) -> Result<PhiClass> {
    if m < 1 {
        return Err(Error::invalid("m must be at least 1"));
    }
    let plus = match a {
        0 => m != 1,
        1 => !is_one_or_prime_power(m)?,
        -1 => m > 2 && !is_twice_prime_power(m)?,
        2 => m == 1,
        _ => false,
    };
    let minus = (a == 0 && m == 1) || (a == -2 && m == 2);
    Ok(PhiClass {
        m,
        a,
        value_is_plus_one: plus,
        value_is_minus_one: minus,
    })
}

type Cache = RwLock<HashMap<u64, Arc<IntPoly>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached(m: u64) -> Option<Arc<IntPoly>> {
    cache().read().unwrap_or_else(|e| e.into_inner()).get(&m).cloned()
}

pub fn cyclotomic(m: u64) -> Result<IntPoly> {
    cyclotomic_with_budget(m, Limits::default().degree_budget)
}

/// `Φ_m` by the division chain `Φ_m = (X^m - 1) / prod_{d | m, d < m} Φ_d`,
/// memoized across calls.
pub fn cyclotomic_with_budget(m: u64, budget: usize) -> Result<IntPoly> {
    if m < 1 {
        return Err(Error::invalid("m must be at least 1"));
    }
    let phi = euler_phi(m)?;
    if phi > budget as u64 {
        return Err(Error::DegreeLimit {
            degree: usize::try_from(phi).unwrap_or(usize::MAX),
            budget,
        });
    }
    if let Some(p) = cached(m) {
        return Ok((*p).clone());
    }
    let divs = divisors(m)?;
    // Every divisor of a divisor of m is itself in `divs`, so filling in
    // ascending order only ever divides by polynomials already cached.
    for (idx, &d) in divs.iter().enumerate() {
        if cached(d).is_some() {
            continue;
        }
        let du = usize::try_from(d).map_err(|_| Error::size("index too large"))?;
        let mut acc = IntPoly::binomial(du, &BigInt::from(1));
        for &e in &divs[..idx] {
            if d % e == 0 {
                let phi_e = cached(e).expect("smaller divisors are filled first");
                acc = acc
                    .divide_exact(&phi_e)?
                    .expect("cyclotomic factors divide X^d - 1");
            }
        }
        cache()
            .write()
            .unwrap_or_else(|e| e.into_inner())
            .entry(d)
            .or_insert_with(|| Arc::new(acc));
    }
    Ok((*cached(m).unwrap()).clone())
}

/// `Φ_m = prod_{d | m} (X^d - 1)^μ(m/d)`, computed by multiplying the
/// positive-exponent factors and dividing out the negative ones. Uncached;
/// exists as an independent route to the same polynomial.
pub fn cyclotomic_mobius(m: u64) -> Result<IntPoly> {
    if m < 1 {
        return Err(Error::invalid("m must be at least 1"));
    }
    let one = BigInt::from(1);
    let mut numerator = IntPoly::one();
    let mut denominators = Vec::new();
    for d in divisors(m)? {
        let term = IntPoly::binomial(d as usize, &one);
        match mobius(m / d)? {
            1 => numerator = &numerator * &term,
            -1 => denominators.push(term),
            _ => {}
        }
    }
    for den in denominators {
        numerator = numerator
            .divide_exact(&den)?
            .ok_or_else(|| Error::invalid("Möbius product did not divide exactly"))?;
    }
    Ok(numerator)
}

/// Least common multiple of a list of indices, 1 for the empty list.
pub fn lcm_all(items: impl IntoIterator<Item = u64>) -> u64 {
    items.into_iter().fold(1, |acc, m| acc.lcm(&m))
}
