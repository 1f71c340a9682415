use super::field::{Elem, Field};
use crate::error::{Error, Result};

/// Element `re + im·z` of a quadratic extension.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtElem {
    pub re: Elem,
    pub im: Elem,
}

/// GF(p^{2n}) realised as GF(p^n)[z] / (z^2 - αz - β) with an irreducible
/// defining polynomial: z^2 + z + e with Tr(e) = 1 in characteristic 2,
/// z^2 - β with β a non-square otherwise.
#[derive(Debug)]
pub struct QuadraticExtension<'a> {
    base: &'a Field,
    alpha: Elem,
    beta: Elem,
}

impl<'a> QuadraticExtension<'a> {
    pub fn new(base: &'a Field) -> Self {
        let (alpha, beta) = if base.p() == 2 {
            let e = base.elements().find(|&e| base.trace(e) == 1).expect("trace is onto F_2");
            (Elem::ONE, e)
        } else {
            let b = base
                .elements()
                .skip(1)
                .find(|&b| !base.is_kth_power(b, 2).unwrap())
                .expect("odd-order field has non-squares");
            (Elem::ZERO, b)
        };
        Self { base, alpha, beta }
    }

    pub fn base(&self) -> &Field {
        self.base
    }

    /// The element e (char 2) or β (odd p) in the defining polynomial.
    pub fn defining_constant(&self) -> Elem {
        self.beta
    }

    pub fn order(&self) -> u64 {
        let q = self.base.order() as u64;
        q * q
    }

    pub fn embed(&self, x: Elem) -> ExtElem {
        ExtElem { re: x, im: Elem::ZERO }
    }

    /// The generator z of the extension over the base.
    pub fn z(&self) -> ExtElem {
        ExtElem { re: Elem::ZERO, im: Elem::ONE }
    }

    pub fn restrict(&self, x: ExtElem) -> Option<Elem> {
        x.im.is_zero().then_some(x.re)
    }

    pub fn add(&self, x: ExtElem, y: ExtElem) -> ExtElem {
        let f = self.base;
        ExtElem { re: f.add(x.re, y.re), im: f.add(x.im, y.im) }
    }

    pub fn mul(&self, x: ExtElem, y: ExtElem) -> ExtElem {
        let f = self.base;
        // (u1 + v1 z)(u2 + v2 z) with z^2 = αz + β
        let vv = f.mul(x.im, y.im);
        let re = f.add(f.mul(x.re, y.re), f.mul(vv, self.beta));
        let im = f.add(f.add(f.mul(x.re, y.im), f.mul(x.im, y.re)), f.mul(vv, self.alpha));
        ExtElem { re, im }
    }

    pub fn scale(&self, k: Elem, x: ExtElem) -> ExtElem {
        self.mul(self.embed(k), x)
    }

    pub fn pow(&self, x: ExtElem, mut e: u64) -> ExtElem {
        let mut result = self.embed(Elem::ONE);
        let mut b = x;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        result
    }

    pub fn is_zero(&self, x: ExtElem) -> bool {
        x.re.is_zero() && x.im.is_zero()
    }

    /// Whether x is a k-th power in the multiplicative group of the extension.
    pub fn is_kth_power(&self, x: ExtElem, k: u64) -> Result<bool> {
        if self.is_zero(x) {
            return Err(Error::Domain("k-th power test of zero"));
        }
        let order = self.order() - 1;
        let g = num_integer::gcd(k, order);
        Ok(self.pow(x, order / g) == self.embed(Elem::ONE))
    }
}
