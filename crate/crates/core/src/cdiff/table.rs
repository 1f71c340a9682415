use std::fmt;
use std::io::Write;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fpoly::{self, LinearizedPoly, UniPoly};
use crate::gf::{Elem, Field};

/// Full lookup table of a function GF(p^n) → GF(p^n).
#[derive(Clone)]
pub struct FunctionTable {
    field: Arc<Field>,
    values: Vec<Elem>,
}

impl fmt::Debug for FunctionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FunctionTable")
            .field("p", &self.field.p())
            .field("n", &self.field.n())
            .field("values", &self.values.len())
            .finish()
    }
}

impl FunctionTable {
    pub fn new(field: Arc<Field>, values: Vec<Elem>) -> Result<Self> {
        let q = field.order() as usize;
        if values.len() != q {
            return Err(Error::Usage(format!("table has {} entries, expected {q}", values.len())));
        }
        if let Some((i, v)) = values.iter().enumerate().find(|(_, v)| v.0 >= q as u32) {
            return Err(Error::Format(format!("entry {i} = {} is not a field element", v.0)));
        }
        Ok(Self { field, values })
    }

    pub fn from_fn(field: Arc<Field>, f: impl Fn(&Field, Elem) -> Elem) -> Self {
        let values = field.elements().map(|x| f(&field, x)).collect();
        Self { field, values }
    }

    /// x ↦ x^{q-2}, which sends 0 to 0.
    pub fn inverse(field: Arc<Field>) -> Self {
        let e = field.order() as u64 - 2;
        Self::from_fn(field, |f, x| f.pow(x, e))
    }

    pub fn monomial(field: Arc<Field>, e: u64) -> Self {
        Self::from_fn(field, |f, x| f.pow(x, e))
    }

    pub fn identity(field: Arc<Field>) -> Self {
        Self::from_fn(field, |_, x| x)
    }

    pub fn from_poly(field: Arc<Field>, poly: &UniPoly) -> Result<Self> {
        poly.validate(&field)?;
        Ok(Self::from_fn(field, |f, x| poly.eval(f, x)))
    }

    pub fn from_linearized(field: Arc<Field>, l: &LinearizedPoly) -> Result<Self> {
        l.validate(&field)?;
        Ok(Self::from_fn(field, |f, x| l.eval(f, x)))
    }

    /// x^{q-2} + x^{p^t}
    pub fn inverse_plus_frobenius(field: Arc<Field>, t: u32) -> Self {
        let e = field.order() as u64 - 2;
        Self::from_fn(field, |f, x| f.add(f.pow(x, e), f.frobenius(x, t)))
    }

    /// x^{q-2} + L(x)
    pub fn inverse_plus_linearized(field: Arc<Field>, l: &LinearizedPoly) -> Result<Self> {
        l.validate(&field)?;
        let e = field.order() as u64 - 2;
        Ok(Self::from_fn(field, |f, x| f.add(f.pow(x, e), l.eval(f, x))))
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    #[inline(always)]
    pub fn get(&self, x: Elem) -> Elem {
        self.values[x.index()]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Pointwise sum F + G over the same field.
    pub fn add(&self, other: &FunctionTable) -> Result<Self> {
        if !Arc::ptr_eq(&self.field, &other.field) && self.field.spec() != other.field.spec() {
            return Err(Error::Usage("functions are defined over different fields".into()));
        }
        let f = &self.field;
        let values = self.values.iter().zip(&other.values).map(|(&x, &y)| f.add(x, y)).collect();
        Ok(Self { field: self.field.clone(), values })
    }

    /// F + x^{p^i}
    pub fn plus_frobenius(&self, i: u32) -> Self {
        let f = &self.field;
        let values = f.elements().map(|x| f.add(self.get(x), f.frobenius(x, i))).collect();
        Self { field: self.field.clone(), values }
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.values.len()];
        self.values.iter().all(|v| !std::mem::replace(&mut seen[v.index()], true))
    }

    pub fn interpolate(&self) -> UniPoly {
        fpoly::interpolate(&self.field, &self.values).expect("table length matches the field")
    }
}

/// The full c-difference distribution table, counts[a][b] = #{x : F(x+a) - cF(x) = b}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cddt {
    pub c: Elem,
    q: usize,
    counts: Vec<u32>,
}

impl Cddt {
    pub(crate) fn from_rows(c: Elem, q: usize, counts: Vec<u32>) -> Self {
        debug_assert_eq!(counts.len(), q * q);
        Self { c, q, counts }
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn get(&self, a: Elem, b: Elem) -> u32 {
        self.counts[a.index() * self.q + b.index()]
    }

    pub fn row(&self, a: Elem) -> &[u32] {
        let start = a.index() * self.q;
        &self.counts[start..start + self.q]
    }

    /// Largest entry, skipping the row a = 0 when c = 1.
    pub fn max_entry(&self) -> u32 {
        let skip = if self.c == Elem::ONE { 1 } else { 0 };
        self.counts[skip * self.q..].iter().copied().max().unwrap_or(0)
    }

    /// CSV: header row `a,b0,b1,..`, then one row per a.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        write!(w, "a")?;
        for b in 0..self.q {
            write!(w, ",{b}")?;
        }
        writeln!(w)?;
        for a in 0..self.q {
            write!(w, "{a}")?;
            for v in &self.counts[a * self.q..(a + 1) * self.q] {
                write!(w, ",{v}")?;
            }
            writeln!(w)?;
        }
        Ok(())
    }
}
