use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

fn checked_pow(p: u32, e: u32) -> Result<u128> {
    (p as u128).checked_pow(e).ok_or_else(|| Error::Usage(format!("{p}^{e} overflows")))
}

/// gcd(p^t + 1, p^n - 1) by the closed forms: (2^{gcd(2t,n)} - 1)/(2^{gcd(t,n)} - 1)
/// for p = 2, and 2 or p^{gcd(t,n)} + 1 for odd p as n/gcd(t,n) is odd or even.
pub fn gcd_closed_form(p: u32, t: u32, n: u32) -> Result<u128> {
    if t == 0 || n == 0 {
        return Err(Error::Usage("t and n must be at least 1".into()));
    }
    let d = t.gcd(&n);
    if p == 2 {
        Ok((checked_pow(2, (2 * t).gcd(&n))? - 1) / (checked_pow(2, d)? - 1))
    } else if (n / d) % 2 == 1 {
        Ok(2)
    } else {
        Ok(checked_pow(p, d)? + 1)
    }
}

pub fn gcd_direct(p: u32, t: u32, n: u32) -> Result<u128> {
    Ok((checked_pow(p, t)? + 1).gcd(&(checked_pow(p, n)? - 1)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GcdCheck {
    pub p: u32,
    pub t: u32,
    pub n: u32,
    pub closed_form: u128,
    pub direct: u128,
}

impl GcdCheck {
    pub fn holds(&self) -> bool {
        self.closed_form == self.direct
    }
}

/// Closed form against the integer gcd over every t, n ≤ `max`.
pub fn gcd_grid(primes: &[u32], max: u32) -> Result<Vec<GcdCheck>> {
    let mut out = Vec::new();
    for &p in primes {
        for t in 1..=max {
            for n in 1..=max {
                out.push(GcdCheck {
                    p,
                    t,
                    n,
                    closed_form: gcd_closed_form(p, t, n)?,
                    direct: gcd_direct(p, t, n)?,
                });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BluherCensus {
    pub p: u32,
    pub t: u32,
    pub n: u32,
    /// Q = p^{gcd(t,n)}
    pub big_q: u64,
    /// m = n / gcd(t,n)
    pub m: u32,
    /// B in the field for which x^{p^t+1} - Bx + B has exactly Q+1 roots
    pub brute_force: u64,
    /// None when Q^2 - 1 does not divide the numerator
    pub formula: Option<u64>,
}

impl BluherCensus {
    pub fn holds(&self) -> bool {
        self.formula == Some(self.brute_force)
    }
}

/// Largest field order the census enumerates (every B against every x).
pub const BLUHER_MAX_ORDER: u32 = 1 << 12;

pub fn bluher_formula(big_q: u64, m: u32) -> Option<u64> {
    let qm1 = (big_q as i128).pow(m - 1);
    let num = if m.is_multiple_of(2) { qm1 - big_q as i128 } else { qm1 - 1 };
    let den = (big_q as i128).pow(2) - 1;
    (num % den == 0).then(|| (num / den) as u64)
}

pub fn bluher_census(field: &Field, t: u32) -> Result<BluherCensus> {
    let (p, n) = (field.p(), field.n());
    if t == 0 {
        return Err(Error::Usage("t must be at least 1".into()));
    }
    if field.order() > BLUHER_MAX_ORDER {
        return Err(Error::Usage(format!("census is limited to fields of order ≤ {BLUHER_MAX_ORDER}")));
    }
    let d = t.gcd(&n);
    let big_q = (p as u64).pow(d);
    let m = n / d;
    let k = (p as u64).pow(t) + 1;
    let powers: Vec<Elem> = field.elements().map(|x| field.pow(x, k)).collect();
    let target = big_q as usize + 1;
    let brute_force = field
        .elements()
        .collect::<Vec<_>>()
        .par_iter()
        .filter(|&&b| {
            let roots = field
                .elements()
                .filter(|&x| field.add(field.sub(powers[x.index()], field.mul(b, x)), b).is_zero())
                .count();
            roots == target
        })
        .count() as u64;
    Ok(BluherCensus { p, t, n, big_q, m, brute_force, formula: bluher_formula(big_q, m) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RootCountCheck {
    pub p: u32,
    pub n: u32,
    pub t: u32,
    /// #{x : x^{p^t+1} + 1 = 0}
    pub roots: u64,
    pub gcd: u128,
}

impl RootCountCheck {
    pub fn holds(&self) -> bool {
        self.roots as u128 == self.gcd
    }
}

/// Roots of x^{p^t+1} + 1 against gcd(p^t+1, p^n-1); t = 0 is allowed.
pub fn minus_one_root_count(field: &Field, t: u32) -> RootCountCheck {
    let (p, n) = (field.p(), field.n());
    let k = (p as u64).pow(t) + 1;
    let minus_one = field.neg(Elem::ONE);
    let roots = field.elements().filter(|&x| field.pow(x, k) == minus_one).count() as u64;
    let gcd = (k as u128).gcd(&((field.order() - 1) as u128));
    RootCountCheck { p, n, t, roots, gcd }
}
