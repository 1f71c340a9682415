use serde::{Deserialize, Serialize};

use super::fp_poly;
use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// Parameters of GF(p^n): characteristic, degree, monic irreducible modulus
/// (coefficients in increasing-degree order) and a primitive element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub n: u32,
    pub modulus: Vec<u32>,
    pub generator: u32,
}

/// x^8 + x^4 + x^3 + x + 1
pub const AES_MODULUS: u64 = 0x11b;

impl FieldSpec {
    /// GF(p^n) with the lexicographically smallest monic irreducible modulus
    /// and the smallest primitive element.
    pub fn new(p: u32, n: u32) -> Result<Self> {
        let order = check_size(p, n)?;
        let modulus = smallest_irreducible(p, n, order);
        Self::with_modulus(p, modulus)
    }

    /// The AES field: GF(2^8) modulo x^8 + x^4 + x^3 + x + 1.
    pub fn aes() -> Self {
        Self::from_modulus_value(2, AES_MODULUS).expect("AES modulus is irreducible")
    }

    /// Builds a spec from explicit modulus coefficients `[c0, .., cn]`.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        let modulus = fp_poly::trim(modulus);
        if modulus.len() < 2 {
            return Err(Error::InvalidModulus("degree must be at least 1".into()));
        }
        let n = (modulus.len() - 1) as u32;
        check_size(p, n)?;
        validate_modulus(p, &modulus)?;
        let generator = smallest_generator(p, &modulus);
        Ok(Self { p, n, modulus, generator })
    }

    /// Builds a spec from a modulus given as the integer whose base-p digits
    /// are its coefficients (so `0x11b` for the AES modulus when p = 2).
    pub fn from_modulus_value(p: u32, value: u64) -> Result<Self> {
        if !fp_poly::is_prime(p as u64) {
            return Err(Error::NotPrime(p));
        }
        let mut coeffs = Vec::new();
        let mut v = value;
        while v > 0 {
            coeffs.push((v % p as u64) as u32);
            v /= p as u64;
        }
        Self::with_modulus(p, coeffs)
    }

    pub fn order(&self) -> u32 {
        self.p.pow(self.n)
    }

    /// The modulus as an integer in base p.
    pub fn modulus_value(&self) -> u64 {
        self.modulus.iter().rev().fold(0u64, |acc, &c| acc * self.p as u64 + c as u64)
    }

    /// Checks every invariant: prime characteristic, supported size, monic
    /// irreducible modulus of degree n, primitive generator.
    pub fn validate(&self) -> Result<()> {
        check_size(self.p, self.n)?;
        if self.modulus.len() != self.n as usize + 1 {
            return Err(Error::InvalidModulus(format!(
                "expected {} coefficients, got {}",
                self.n + 1,
                self.modulus.len()
            )));
        }
        validate_modulus(self.p, &self.modulus)?;
        let q = self.order() as u64;
        if self.generator as u64 >= q {
            return Err(Error::OutOfRange { value: self.generator as u64, q: q as u32 });
        }
        if !is_primitive(self.p, &self.modulus, self.generator) {
            return Err(Error::NotAGenerator(self.generator));
        }
        Ok(())
    }
}

fn check_size(p: u32, n: u32) -> Result<u64> {
    if !fp_poly::is_prime(p as u64) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::InvalidModulus("degree must be at least 1".into()));
    }
    let order = (p as u64).checked_pow(n).filter(|&q| q <= MAX_ORDER);
    order.ok_or(Error::FieldTooLarge { p, n })
}

fn validate_modulus(p: u32, modulus: &[u32]) -> Result<()> {
    if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
        return Err(Error::InvalidModulus(format!("coefficient {c} is not reduced mod {p}")));
    }
    if modulus.last() != Some(&1) {
        return Err(Error::InvalidModulus("modulus must be monic".into()));
    }
    if !fp_poly::is_irreducible(modulus, p) {
        return Err(Error::ReducibleModulus(p));
    }
    Ok(())
}

fn smallest_irreducible(p: u32, n: u32, order: u64) -> Vec<u32> {
    (0..order)
        .map(|r| {
            let mut m = digits(r, p, n);
            m.push(1);
            m
        })
        .find(|m| fp_poly::is_irreducible(m, p))
        .expect("an irreducible polynomial of every degree exists")
}

pub(crate) fn digits(mut v: u64, p: u32, n: u32) -> Vec<u32> {
    (0..n)
        .map(|_| {
            let d = (v % p as u64) as u32;
            v /= p as u64;
            d
        })
        .collect()
}

fn is_primitive(p: u32, modulus: &[u32], g: u32) -> bool {
    let n = (modulus.len() - 1) as u32;
    let q1 = (p as u64).pow(n) - 1;
    let gp = fp_poly::trim(digits(g as u64, p, n));
    if gp.is_empty() {
        return false;
    }
    let one = vec![1u32];
    if fp_poly::pow_mod(&gp, q1, modulus, p) != one {
        return false;
    }
    fp_poly::prime_factors(q1).into_iter().all(|l| fp_poly::pow_mod(&gp, q1 / l, modulus, p) != one)
}

fn smallest_generator(p: u32, modulus: &[u32]) -> u32 {
    let n = (modulus.len() - 1) as u32;
    let q = p.pow(n);
    (1..q)
        .find(|&g| is_primitive(p, modulus, g))
        .expect("the multiplicative group of a finite field is cyclic")
}
