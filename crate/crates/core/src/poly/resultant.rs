use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

fn ipow(base: &BigInt, e: usize) -> BigInt {
    num_traits::pow(base.clone(), e)
}

/// Resultant `Res(f, g) = lc(f)^deg(g) * prod g(α)` over the roots α of `f`.
///
/// Computed with the subresultant pseudo-remainder sequence, so every
/// intermediate division is exact over the integers. A zero argument gives 0
/// unless both are zero, which is rejected.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        if f.is_zero() && g.is_zero() {
            return Err(Error::BothZero);
        }
        return Ok(BigInt::zero());
    };
    if df == 0 {
        return Ok(ipow(&f.coeffs[0], dg));
    }
    if dg == 0 {
        return Ok(ipow(&g.coeffs[0], df));
    }

    let cf = f.content();
    let cg = g.content();
    let mut a = f.div_scalar_exact(&cf);
    let mut b = g.div_scalar_exact(&cg);
    let t = ipow(&cf, dg) * ipow(&cg, df);

    let mut negate = false;
    if df < dg {
        std::mem::swap(&mut a, &mut b);
        if df % 2 == 1 && dg % 2 == 1 {
            negate = true;
        }
    }

    let mut sg = BigInt::one();
    let mut sh = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        let divisor = &sg * ipow(&sh, delta);
        b = r.div_scalar_exact(&divisor);
        sg = a.leading().unwrap().clone();
        if delta > 0 {
            sh = ipow(&sg, delta) / ipow(&sh, delta - 1);
        }
        if b.degree() == Some(0) {
            break;
        }
    }

    let da = a.degree().unwrap();
    let lb = b.leading().unwrap();
    let h = ipow(lb, da) / ipow(&sh, da - 1);
    let res = t * h;
    Ok(if negate { -res } else { res })
}
