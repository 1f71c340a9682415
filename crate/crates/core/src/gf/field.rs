use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::spec::{digits, FieldSpec};
use crate::error::{Error, Result};

/// A field element in its canonical integer encoding: the base-p digits are the
/// polynomial-basis coordinates, least significant digit = constant term.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
#[repr(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline(always)]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline(always)]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline(always)]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Elem({:#x})", self.0)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

const NONE: u32 = u32::MAX;

/// Table-driven arithmetic in GF(p^n). Immutable after construction.
pub struct Field {
    spec: FieldSpec,
    q: u32,
    /// exp[i] = g^i for i in [0, 2(q-1))
    exp: Vec<u32>,
    /// log[x] = i with g^i = x; log[0] is unused
    log: Vec<u32>,
    /// Zech logarithms for odd p: zech[k] = log(1 + g^k), NONE when 1 + g^k = 0
    zech: Vec<u32>,
    neg: Vec<u32>,
    trace: Vec<u32>,
    /// p^i mod (q - 1)
    frob_exp: Vec<u64>,
    /// p = 2: artin_schreier[d] = u with u^2 + u = d, NONE if Tr(d) = 1
    artin_schreier: OnceLock<Vec<u32>>,
    /// sqrt[y] = some x with x^2 = y, NONE for non-squares
    sqrt: OnceLock<Vec<u32>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field").field("spec", &self.spec).finish()
    }
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Self> {
        spec.validate()?;
        let p = spec.p;
        let n = spec.n;
        let q = spec.order();
        let qm1 = q - 1;

        // bootstrap: multiplication by g via polynomial arithmetic on digits
        let mut exp = Vec::with_capacity(2 * qm1 as usize);
        let mut cur = 1u32;
        let g = digits(spec.generator as u64, p, n);
        for _ in 0..qm1 {
            exp.push(cur);
            cur = slow_mul(cur, &g, &spec);
        }
        debug_assert_eq!(cur, 1);
        let head: Vec<u32> = exp.clone();
        exp.extend_from_slice(&head);

        let mut log = vec![NONE; q as usize];
        for (i, &v) in head.iter().enumerate() {
            log[v as usize] = i as u32;
        }

        let neg: Vec<u32> = (0..q)
            .map(|x| {
                let ds = digits(x as u64, p, n);
                from_digits(ds.into_iter().map(|d| (p - d) % p), p)
            })
            .collect();

        let zech = if p == 2 {
            Vec::new()
        } else {
            head.iter()
                .map(|&v| {
                    let s = add_digits(1, v, p, n);
                    if s == 0 {
                        NONE
                    } else {
                        log[s as usize]
                    }
                })
                .collect()
        };

        let mut frob_exp = Vec::with_capacity(n as usize);
        let mut e = 1u64 % qm1.max(1) as u64;
        for _ in 0..n {
            frob_exp.push(e);
            e = e * p as u64 % qm1.max(1) as u64;
        }

        let mut field = Field {
            spec,
            q,
            exp,
            log,
            zech,
            neg,
            trace: Vec::new(),
            frob_exp,
            artin_schreier: OnceLock::new(),
            sqrt: OnceLock::new(),
        };
        let trace: Vec<u32> = (0..q)
            .map(|x| {
                let x = Elem(x);
                (0..n).fold(Elem::ZERO, |acc, i| field.add(acc, field.frobenius(x, i))).0
            })
            .collect();
        debug_assert!(trace.iter().all(|&t| t < p));
        field.trace = trace;
        Ok(field)
    }

    /// Convenience constructor with the default modulus.
    pub fn with_params(p: u32, n: u32) -> Result<Self> {
        Self::new(FieldSpec::new(p, n)?)
    }

    pub fn aes() -> Self {
        Self::new(FieldSpec::aes()).expect("AES field spec is valid")
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    #[inline(always)]
    pub fn p(&self) -> u32 {
        self.spec.p
    }

    #[inline(always)]
    pub fn n(&self) -> u32 {
        self.spec.n
    }

    #[inline(always)]
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn generator(&self) -> Elem {
        Elem(self.spec.generator)
    }

    /// Validated constructor.
    pub fn elem(&self, value: u64) -> Result<Elem> {
        if value < self.q as u64 {
            Ok(Elem(value as u32))
        } else {
            Err(Error::OutOfRange { value, q: self.q })
        }
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Elem> + ExactSizeIterator {
        (0..self.q).map(Elem)
    }

    /// The element of the prime field with residue `r`.
    pub fn from_residue(&self, r: u32) -> Elem {
        Elem(r % self.spec.p)
    }

    #[inline(always)]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        if self.spec.p == 2 {
            return Elem(x.0 ^ y.0);
        }
        if x.0 == 0 {
            return y;
        }
        if y.0 == 0 {
            return x;
        }
        let lx = self.log[x.index()];
        let ly = self.log[y.index()];
        let k = if ly >= lx { ly - lx } else { ly + (self.q - 1) - lx };
        let z = self.zech[k as usize];
        if z == NONE {
            Elem::ZERO
        } else {
            Elem(self.exp[(lx + z) as usize])
        }
    }

    #[inline(always)]
    pub fn neg(&self, x: Elem) -> Elem {
        Elem(self.neg[x.index()])
    }

    #[inline(always)]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    #[inline(always)]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        if x.0 == 0 || y.0 == 0 {
            return Elem::ZERO;
        }
        Elem(self.exp[(self.log[x.index()] + self.log[y.index()]) as usize])
    }

    pub fn inv(&self, x: Elem) -> Result<Elem> {
        if x.is_zero() {
            return Err(Error::Domain("zero has no multiplicative inverse"));
        }
        let l = self.log[x.index()];
        Ok(Elem(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize]))
    }

    pub fn div(&self, x: Elem, y: Elem) -> Result<Elem> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// x^e with 0^0 = 1.
    pub fn pow(&self, x: Elem, e: u64) -> Elem {
        if x.is_zero() {
            return if e == 0 { Elem::ONE } else { Elem::ZERO };
        }
        let qm1 = (self.q - 1) as u64;
        let l = self.log[x.index()] as u64 * (e % qm1) % qm1;
        Elem(self.exp[l as usize])
    }

    /// x^(p^i); `i` is taken mod n.
    pub fn frobenius(&self, x: Elem, i: u32) -> Elem {
        if x.is_zero() {
            return x;
        }
        let e = self.frob_exp[(i % self.spec.n) as usize];
        let qm1 = (self.q - 1) as u64;
        let l = self.log[x.index()] as u64 * e % qm1.max(1);
        Elem(self.exp[l as usize])
    }

    /// Absolute trace, as a residue mod p.
    #[inline]
    pub fn trace(&self, x: Elem) -> u32 {
        self.trace[x.index()]
    }

    pub fn dlog(&self, x: Elem) -> Result<u32> {
        if x.is_zero() {
            return Err(Error::Domain("discrete logarithm of zero"));
        }
        Ok(self.log[x.index()])
    }

    /// g^k for the stored generator.
    pub fn exp(&self, k: u64) -> Elem {
        Elem(self.exp[(k % (self.q - 1) as u64) as usize])
    }

    /// Whether x is a k-th power in the multiplicative group.
    pub fn is_kth_power(&self, x: Elem, k: u64) -> Result<bool> {
        let l = self.dlog(x)? as u64;
        let g = num_integer::gcd(k, (self.q - 1) as u64);
        Ok(l.is_multiple_of(g))
    }

    pub(crate) fn artin_schreier_table(&self) -> &[u32] {
        self.artin_schreier.get_or_init(|| {
            let mut t = vec![NONE; self.q as usize];
            for u in self.elements() {
                let d = self.add(self.mul(u, u), u);
                if t[d.index()] == NONE {
                    t[d.index()] = u.0;
                }
            }
            t
        })
    }

    /// Some u with u^2 + u = d (characteristic 2 only).
    pub(crate) fn solve_artin_schreier(&self, d: Elem) -> Option<Elem> {
        debug_assert_eq!(self.spec.p, 2);
        let u = self.artin_schreier_table()[d.index()];
        (u != NONE).then_some(Elem(u))
    }

    /// Some x with x^2 = y, if y is a square.
    pub fn sqrt(&self, y: Elem) -> Option<Elem> {
        let t = self.sqrt.get_or_init(|| {
            let mut t = vec![NONE; self.q as usize];
            for x in self.elements() {
                let s = self.mul(x, x);
                if t[s.index()] == NONE {
                    t[s.index()] = x.0;
                }
            }
            t
        });
        let r = t[y.index()];
        (r != NONE).then_some(Elem(r))
    }

    /// Base-p digits of an element (polynomial-basis coordinates).
    pub fn coordinates(&self, x: Elem) -> Vec<u32> {
        digits(x.0 as u64, self.spec.p, self.spec.n)
    }

    pub fn from_coordinates(&self, coords: &[u32]) -> Elem {
        Elem(from_digits(coords.iter().map(|&d| d % self.spec.p), self.spec.p))
    }

    /// Roots of a polynomial given by an evaluation closure, by enumeration.
    pub fn enumerate_roots(&self, f: impl Fn(Elem) -> Elem) -> Vec<Elem> {
        self.elements().filter(|&x| f(x).is_zero()).collect()
    }
}

fn from_digits(ds: impl DoubleEndedIterator<Item = u32>, p: u32) -> u32 {
    ds.rev().fold(0u32, |acc, d| acc * p + d)
}

fn add_digits(x: u32, y: u32, p: u32, n: u32) -> u32 {
    let a = digits(x as u64, p, n);
    let b = digits(y as u64, p, n);
    from_digits(a.iter().zip(&b).map(|(u, v)| (u + v) % p), p)
}

fn slow_mul(x: u32, g: &[u32], spec: &FieldSpec) -> u32 {
    let xd = digits(x as u64, spec.p, spec.n);
    let prod = super::fp_poly::mul_mod(
        &super::fp_poly::trim(xd),
        &super::fp_poly::trim(g.to_vec()),
        &spec.modulus,
        spec.p,
    );
    let mut full = prod;
    full.resize(spec.n as usize, 0);
    from_digits(full.into_iter(), spec.p)
}
