use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::gf::{Elem, Field};

/// Criterion-decided root counts against exhaustive counts over one field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriteriaSweep {
    pub p: u32,
    pub n: u32,
    pub quadratic_tuples: u64,
    pub quadratic_mismatches: u64,
    pub cubic_tuples: u64,
    pub cubic_mismatches: u64,
    /// cubics where exactly one of t1, t2 was a cube
    pub cubic_mixed: u64,
    pub first_mismatch: Option<String>,
}

impl CriteriaSweep {
    pub fn holds(&self) -> bool {
        self.quadratic_mismatches == 0 && self.cubic_mismatches == 0
    }
}

// counts[v] = #{x : f(x) = v}
fn value_counts(field: &Field, f: impl Fn(Elem) -> Elem) -> Vec<u32> {
    let mut counts = vec![0u32; field.order() as usize];
    for x in field.elements() {
        counts[f(x).index()] += 1;
    }
    counts
}

#[derive(Default)]
struct Tally {
    tuples: u64,
    mismatches: u64,
    mixed: u64,
    first: Option<String>,
}

impl Tally {
    fn miss(&mut self, what: String) {
        self.mismatches += 1;
        self.first.get_or_insert(what);
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.tuples += other.tuples;
        self.mismatches += other.mismatches;
        self.mixed += other.mixed;
        if self.first.is_none() {
            self.first = other.first;
        }
        self
    }
}

/// Every a·x^2 + b·x + c with a ≠ 0, and for p = 2 every x^3 + a·x + b with
/// b ≠ 0; the criterion's count and roots are compared with enumeration.
pub fn criteria_sweep(field: &Field) -> Result<CriteriaSweep> {
    let (p, n) = (field.p(), field.n());
    let elems: Vec<Elem> = field.elements().collect();

    let quad = elems[1..]
        .par_iter()
        .map(|&a| -> Result<Tally> {
            let mut tally = Tally::default();
            for &b in &elems {
                let counts =
                    value_counts(field, |x| field.add(field.mul(a, field.mul(x, x)), field.mul(b, x)));
                for &c in &elems {
                    tally.tuples += 1;
                    let rs = field.solve_quadratic(a, b, c)?;
                    let expected = counts[field.neg(c).index()] as usize;
                    let genuine = rs.roots.iter().all(|&x| {
                        field.add(field.add(field.mul(a, field.mul(x, x)), field.mul(b, x)), c).is_zero()
                    });
                    if rs.count != expected || !genuine {
                        tally.miss(format!(
                            "quadratic a={a} b={b} c={c}: criterion {} vs {expected}",
                            rs.count
                        ));
                    }
                }
            }
            Ok(tally)
        })
        .try_reduce(Tally::default, |x, y| Ok(x.merge(y)))?;

    let cubic = if p == 2 {
        elems
            .par_iter()
            .map(|&a| -> Result<Tally> {
                let mut tally = Tally::default();
                let counts = value_counts(field, |x| field.add(field.pow(x, 3), field.mul(a, x)));
                for &b in &elems[1..] {
                    tally.tuples += 1;
                    let cr = field.solve_depressed_cubic(a, b)?;
                    if cr.is_mixed() {
                        tally.mixed += 1;
                    }
                    let expected = counts[b.index()] as usize;
                    if cr.count != expected {
                        tally.miss(format!("cubic a={a} b={b}: criterion {} vs {expected}", cr.count));
                    }
                }
                Ok(tally)
            })
            .try_reduce(Tally::default, |x, y| Ok(x.merge(y)))?
    } else {
        Tally::default()
    };

    Ok(CriteriaSweep {
        p,
        n,
        quadratic_tuples: quad.tuples,
        quadratic_mismatches: quad.mismatches,
        cubic_tuples: cubic.tuples,
        cubic_mismatches: cubic.mismatches,
        cubic_mixed: cubic.mixed,
        first_mismatch: quad.first.or(cubic.first),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields_agree() {
        for (p, n) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (7, 1)] {
            let f = Field::with_params(p, n).unwrap();
            let s = criteria_sweep(&f).unwrap();
            assert!(s.holds(), "{s:?}");
            let q = f.order() as u64;
            assert_eq!(s.quadratic_tuples, (q - 1) * q * q);
            assert_eq!(s.cubic_tuples, if p == 2 { q * (q - 1) } else { 0 });
        }
    }
}
