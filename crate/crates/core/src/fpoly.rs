//! Univariate polynomials over GF(p^n): evaluation, interpolation of full
//! lookup tables, algebraic degree, and linearized polynomials.

use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub e: u32,
    pub c: Elem,
}

/// Sparse polynomial with exponents below the field order, i.e. the reduced
/// representative of the function it induces. Terms are kept sorted by
/// exponent and never carry a zero coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPoly")]
pub struct UniPoly {
    terms: Vec<Term>,
}

#[derive(Deserialize)]
struct RawPoly {
    terms: Vec<Term>,
}

impl TryFrom<RawPoly> for UniPoly {
    type Error = Error;

    fn try_from(raw: RawPoly) -> Result<Self> {
        let mut seen = BTreeMap::new();
        for t in raw.terms {
            if seen.insert(t.e, t.c).is_some() {
                return Err(Error::Format(format!("duplicate exponent {}", t.e)));
            }
        }
        Ok(Self::from_terms(seen))
    }
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(e: u32, c: Elem) -> Self {
        Self::from_terms([(e, c)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, Elem)>) -> Self {
        let map: BTreeMap<u32, Elem> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self { terms: map.into_iter().map(|(e, c)| Term { e, c }).collect() }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|t| t.e)
    }

    pub fn coeff(&self, e: u32) -> Elem {
        self.terms.binary_search_by_key(&e, |t| t.e).map(|i| self.terms[i].c).unwrap_or(Elem::ZERO)
    }

    /// Checks that every exponent and coefficient is valid for `field`.
    pub fn validate(&self, field: &Field) -> Result<()> {
        for t in &self.terms {
            if t.e >= field.order() {
                return Err(Error::Usage(format!(
                    "exponent {} is not reduced below q = {}",
                    t.e,
                    field.order()
                )));
            }
            field.elem(t.c.0 as u64)?;
        }
        Ok(())
    }

    pub fn add(&self, other: &UniPoly, field: &Field) -> UniPoly {
        let mut map: BTreeMap<u32, Elem> = self.terms.iter().map(|t| (t.e, t.c)).collect();
        for t in &other.terms {
            let entry = map.entry(t.e).or_insert(Elem::ZERO);
            *entry = field.add(*entry, t.c);
        }
        Self::from_terms(map)
    }

    pub fn eval(&self, field: &Field, x: Elem) -> Elem {
        self.terms.iter().fold(Elem::ZERO, |acc, t| field.add(acc, field.mul(t.c, field.pow(x, t.e as u64))))
    }

    /// Values at every field element, indexed by element encoding.
    pub fn tabulate(&self, field: &Field) -> Vec<Elem> {
        field.elements().map(|x| self.eval(field, x)).collect()
    }

    /// Largest base-p digit sum among exponents with a nonzero coefficient.
    pub fn algebraic_degree(&self, p: u32) -> u32 {
        self.terms.iter().map(|t| digit_sum(t.e, p)).max().unwrap_or(0)
    }
}

fn digit_sum(mut e: u32, p: u32) -> u32 {
    let mut s = 0;
    while e > 0 {
        s += e % p;
        e /= p;
    }
    s
}

/// The unique polynomial of degree < q agreeing with `values` on every element.
///
/// Uses the Lagrange basis 1 - (x - y)^{q-1} of the full field, which expands to
/// F(x) = F(0) - Σ_{j=1}^{q-1} x^j Σ_y F(y) y^{q-1-j} (with 0^0 = 1), so each
/// coefficient is one O(q) sum over the multiplicative group.
pub fn interpolate(field: &Field, values: &[Elem]) -> Result<UniPoly> {
    let q = field.order() as usize;
    if values.len() != q {
        return Err(Error::Usage(format!("table has {} entries, expected {q}", values.len())));
    }
    let qm1 = (q - 1) as u64;
    // values along the generator's orbit: orbit[k] = F(g^k)
    let orbit: Vec<Elem> = (0..qm1).map(|k| values[field.exp(k).index()]).collect();
    let total = values.iter().fold(Elem::ZERO, |acc, &v| field.add(acc, v));

    let mut coeffs: Vec<(u32, Elem)> = (1..q.saturating_sub(1))
        .into_par_iter()
        .map(|j| {
            // Σ_k F(g^k) g^{-kj}
            let step = (qm1 - j as u64 % qm1) % qm1;
            let mut idx = 0u64;
            let mut acc = Elem::ZERO;
            for &v in &orbit {
                if !v.is_zero() {
                    acc = field.add(acc, field.mul(v, field.exp(idx)));
                }
                idx += step;
                if idx >= qm1 {
                    idx -= qm1;
                }
            }
            (j as u32, field.neg(acc))
        })
        .collect();
    coeffs.push((0, values[0]));
    coeffs.push(((q - 1) as u32, field.neg(total)));
    Ok(UniPoly::from_terms(coeffs))
}

/// L(x) = Σ_{i<n} a_i x^{p^i}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearizedPoly {
    pub a: Vec<Elem>,
}

/// Nonzero-coefficient indices of a linearized polynomial and the gcds built
/// from them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Support {
    pub indices: Vec<u32>,
    /// gcd(s_1, .., s_k, n), a zero index contributing nothing
    pub delta: u32,
    /// gcd(s_1, .., s_k) alone; 0 when the only index is 0
    pub delta_without_n: u32,
}

impl LinearizedPoly {
    pub fn new(field: &Field, a: Vec<Elem>) -> Result<Self> {
        let poly = Self { a };
        poly.validate(field)?;
        Ok(poly)
    }

    pub fn zero(n: u32) -> Self {
        Self { a: vec![Elem::ZERO; n as usize] }
    }

    /// a·x^{p^i}
    pub fn monomial(n: u32, i: u32, a: Elem) -> Self {
        let mut poly = Self::zero(n);
        poly.a[i as usize] = a;
        poly
    }

    pub fn identity(n: u32) -> Self {
        Self::monomial(n, 0, Elem::ONE)
    }

    pub fn validate(&self, field: &Field) -> Result<()> {
        if self.a.len() != field.n() as usize {
            return Err(Error::Usage(format!(
                "linearized polynomial needs {} coefficients, got {}",
                field.n(),
                self.a.len()
            )));
        }
        for c in &self.a {
            field.elem(c.0 as u64)?;
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, field: &Field, x: Elem) -> Elem {
        self.a.iter().enumerate().fold(Elem::ZERO, |acc, (i, &c)| {
            if c.is_zero() {
                acc
            } else {
                field.add(acc, field.mul(c, field.frobenius(x, i as u32)))
            }
        })
    }

    pub fn tabulate(&self, field: &Field) -> Vec<Elem> {
        field.elements().map(|x| self.eval(field, x)).collect()
    }

    pub fn to_unipoly(&self, field: &Field) -> UniPoly {
        let p = field.p();
        UniPoly::from_terms(self.a.iter().enumerate().map(|(i, &c)| (p.pow(i as u32), c)))
    }

    pub fn support(&self) -> Result<Support> {
        let indices: Vec<u32> =
            self.a.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i as u32).collect();
        if indices.is_empty() {
            return Err(Error::Domain("support of the zero linearized polynomial"));
        }
        let delta_without_n = indices.iter().fold(0u32, |g, &s| g.gcd(&s));
        let delta = delta_without_n.gcd(&(self.a.len() as u32));
        Ok(Support { indices, delta, delta_without_n })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_mul(field: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(x, y));
            }
        }
        out
    }

    // textbook Lagrange: Σ_i F(x_i) Π_{j≠i} (x - x_j) / (x_i - x_j)
    fn naive_lagrange(field: &Field, values: &[Elem]) -> Vec<Elem> {
        let q = field.order() as usize;
        let mut acc = vec![Elem::ZERO; q];
        for xi in field.elements() {
            let mut basis = vec![Elem::ONE];
            let mut denom = Elem::ONE;
            for xj in field.elements().filter(|&xj| xj != xi) {
                basis = poly_mul(field, &basis, &[field.neg(xj), Elem::ONE]);
                denom = field.mul(denom, field.sub(xi, xj));
            }
            let scale = field.div(values[xi.index()], denom).unwrap();
            for (k, c) in basis.into_iter().enumerate() {
                acc[k] = field.add(acc[k], field.mul(scale, c));
            }
        }
        acc
    }

    #[test]
    fn interpolation_matches_textbook_lagrange() {
        for (p, n) in [(2, 1), (2, 3), (2, 4), (3, 2), (5, 1), (3, 3)] {
            let field = Field::with_params(p, n).unwrap();
            let q = field.order();
            for seed in 0..4u32 {
                let values: Vec<Elem> = (0..q).map(|x| Elem((x * 7 + seed * 3 + x * x * seed) % q)).collect();
                let fast = interpolate(&field, &values).unwrap();
                let slow = naive_lagrange(&field, &values);
                for (e, &c) in slow.iter().enumerate() {
                    assert_eq!(fast.coeff(e as u32), c, "p={p} n={n} e={e}");
                }
            }
        }
    }

    #[test]
    fn interpolation_examples() {
        let field = Field::with_params(2, 5).unwrap();
        let q = field.order();
        let id: Vec<Elem> = field.elements().collect();
        assert_eq!(interpolate(&field, &id).unwrap(), UniPoly::monomial(1, Elem::ONE));
        let inv: Vec<Elem> = field.elements().map(|x| field.pow(x, q as u64 - 2)).collect();
        assert_eq!(interpolate(&field, &inv).unwrap(), UniPoly::monomial(q - 2, Elem::ONE));
        assert!(interpolate(&field, &id[1..]).is_err());
    }

    #[test]
    fn eval_examples() {
        let field = Field::with_params(2, 4).unwrap();
        let x = UniPoly::monomial(1, Elem::ONE);
        let inv = UniPoly::monomial(14, Elem::ONE);
        for v in field.elements() {
            assert_eq!(x.eval(&field, v), v);
        }
        assert_eq!(inv.eval(&field, Elem::ZERO), Elem::ZERO);
        // constant term with 0^0 = 1
        let c = UniPoly::monomial(0, Elem(5));
        assert_eq!(c.eval(&field, Elem::ZERO), Elem(5));
    }

    #[test]
    fn algebraic_degree_examples() {
        assert_eq!(UniPoly::monomial(1, Elem::ONE).algebraic_degree(2), 1);
        for n in 2..12u32 {
            assert_eq!(UniPoly::monomial((1 << n) - 2, Elem::ONE).algebraic_degree(2), n - 1);
        }
        assert_eq!(UniPoly::monomial(1 << 5, Elem::ONE).algebraic_degree(2), 1);
        assert_eq!(UniPoly::monomial(0, Elem::ONE).algebraic_degree(2), 0);
        assert_eq!(UniPoly::zero().algebraic_degree(2), 0);
        // 3^2 + 2 = 11 = (102)_3
        assert_eq!(UniPoly::monomial(11, Elem::ONE).algebraic_degree(3), 3);
    }

    #[test]
    fn affine_maps_have_degree_at_most_one() {
        let field = Field::with_params(2, 6).unwrap();
        let l =
            LinearizedPoly::new(&field, vec![Elem(3), Elem(0), Elem(9), Elem(1), Elem(0), Elem(7)]).unwrap();
        let values: Vec<Elem> = field.elements().map(|x| field.add(l.eval(&field, x), Elem(13))).collect();
        let poly = interpolate(&field, &values).unwrap();
        assert!(poly.algebraic_degree(2) <= 1);
        assert_eq!(poly.add(&UniPoly::monomial(0, Elem(13)), &field), l.to_unipoly(&field));
    }

    #[test]
    fn linearized_examples() {
        let field = Field::with_params(2, 5).unwrap();
        let id = LinearizedPoly::identity(5);
        let sq = LinearizedPoly::monomial(5, 1, Elem::ONE);
        for x in field.elements() {
            assert_eq!(id.eval(&field, x), x);
            assert_eq!(sq.eval(&field, x), field.mul(x, x));
        }
        assert!(LinearizedPoly::new(&field, vec![Elem::ONE; 4]).is_err());
    }

    #[test]
    fn support_examples() {
        let s = LinearizedPoly::monomial(4, 2, Elem::ONE).support().unwrap();
        assert_eq!((s.indices, s.delta), (vec![2], 2));
        let mut l = LinearizedPoly::monomial(4, 2, Elem::ONE);
        l.a[0] = Elem::ONE;
        let s = l.support().unwrap();
        assert_eq!((s.indices, s.delta, s.delta_without_n), (vec![0, 2], 2, 2));
        let mut l = LinearizedPoly::monomial(6, 1, Elem::ONE);
        l.a[3] = Elem::ONE;
        let s = l.support().unwrap();
        assert_eq!((s.indices, s.delta), (vec![1, 3], 1));
        assert!(LinearizedPoly::zero(4).support().is_err());
        let s = LinearizedPoly::identity(4).support().unwrap();
        assert_eq!((s.delta, s.delta_without_n), (4, 0));
    }

    #[test]
    fn unipoly_json() {
        let p = UniPoly::from_terms([(3, Elem(2)), (0, Elem(1))]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"terms":[{"e":0,"c":1},{"e":3,"c":2}]}"#);
        assert_eq!(serde_json::from_str::<UniPoly>(&json).unwrap(), p);
        assert!(serde_json::from_str::<UniPoly>(r#"{"terms":[{"e":1,"c":1},{"e":1,"c":2}]}"#).is_err());
        let l = LinearizedPoly { a: vec![Elem(1), Elem(0)] };
        assert_eq!(serde_json::to_string(&l).unwrap(), r#"{"a":[1,0]}"#);
    }
}
