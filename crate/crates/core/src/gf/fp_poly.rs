//! Dense polynomials over the prime field F_p, used to validate moduli and to
//! bootstrap the exp/log tables before any table exists.

pub(crate) type FpPoly = Vec<u32>;

pub(crate) fn trim(mut a: FpPoly) -> FpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime and a != 0
    let mut r = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    r as u32
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn rem(a: &[u32], m: &[u32], p: u32) -> FpPoly {
    let m = trim(m.to_vec());
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p) as u64;
    while r.len() > dm {
        let dr = r.len() - 1;
        let f = r[dr] as u64 * lead_inv % p as u64;
        for (i, &mc) in m.iter().enumerate() {
            let idx = dr - dm + i;
            let t = (f * mc as u64 % p as u64) as u32;
            r[idx] = (r[idx] + p - t) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let prod: FpPoly = prod.into_iter().map(|v| v as u32).collect();
    rem(&prod, m, p)
}

pub(crate) fn pow_mod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> FpPoly {
    let mut result = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(&result, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        e >>= 1;
    }
    result
}

pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// x^(p^k) mod m, by k successive p-th powers.
fn frobenius_x(k: u32, m: &[u32], p: u32) -> FpPoly {
    let mut r = rem(&[0, 1], m, p);
    for _ in 0..k {
        r = pow_mod(&r, p as u64, m, p);
    }
    r
}

/// Rabin's irreducibility test for a monic polynomial of degree n.
pub(crate) fn is_irreducible(m: &[u32], p: u32) -> bool {
    let m = trim(m.to_vec());
    if m.len() < 2 {
        return false;
    }
    let n = (m.len() - 1) as u32;
    let x = [0u32, 1];
    if !sub(&frobenius_x(n, &m, p), &rem(&x, &m, p), p).is_empty() {
        return false;
    }
    for l in prime_factors(n as u64) {
        let h = sub(&frobenius_x(n / l as u32, &m, p), &rem(&x, &m, p), p);
        if gcd(&h, &m, p).len() != 1 {
            return false;
        }
    }
    true
}

pub fn is_prime(v: u64) -> bool {
    if v < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= v {
        if v.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= v {
        if v.is_multiple_of(d) {
            out.push(d);
            while v.is_multiple_of(d) {
                v /= d;
            }
        }
        d += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}
