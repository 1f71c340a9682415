//! Root counts of quadratics (any characteristic) and depressed cubics over
//! binary fields, decided by trace and power-residue criteria rather than by
//! search.

use serde::Serialize;

use super::ext::QuadraticExtension;
use super::field::{Elem, Field};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSet {
    pub count: usize,
    pub roots: Vec<Elem>,
}

/// Result of the cubic criterion. `count` is decided by the criterion;
/// `roots` are located by search over the base field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubicRoots {
    pub count: usize,
    pub roots: Vec<Elem>,
    /// Cube status of the roots t1, t2 of t^2 + bt + a^3, when the criterion
    /// needed them.
    pub t_cubes: Option<[bool; 2]>,
}

impl CubicRoots {
    /// t1 and t2 disagree on being cubes.
    pub fn is_mixed(&self) -> bool {
        matches!(self.t_cubes, Some([x, y]) if x != y)
    }
}

impl Field {
    /// Roots of a·x^2 + b·x + c = 0, a ≠ 0.
    pub fn solve_quadratic(&self, a: Elem, b: Elem, c: Elem) -> Result<RootSet> {
        if a.is_zero() {
            return Err(Error::Degenerate("leading coefficient is zero"));
        }
        let roots = if self.p() == 2 {
            if b.is_zero() {
                // x^2 = c/a has exactly one root since squaring is bijective
                vec![self.sqrt(self.div(c, a)?).expect("squaring is onto in characteristic 2")]
            } else {
                // x = (b/a)·u with u^2 + u = ac/b^2
                let d = self.div(self.mul(a, c), self.mul(b, b))?;
                if self.trace(d) != 0 {
                    Vec::new()
                } else {
                    let u = self.solve_artin_schreier(d).expect("trace-zero element");
                    let s = self.div(b, a)?;
                    let mut r = vec![self.mul(s, u), self.mul(s, self.add(u, Elem::ONE))];
                    r.sort();
                    r
                }
            }
        } else {
            let two = self.from_residue(2);
            let four = self.from_residue(4);
            let disc = self.sub(self.mul(b, b), self.mul(four, self.mul(a, c)));
            let denom = self.inv(self.mul(two, a))?;
            if disc.is_zero() {
                vec![self.mul(self.neg(b), denom)]
            } else if self.is_kth_power(disc, 2)? {
                let s = self.sqrt(disc).expect("nonzero square");
                let mut r = vec![
                    self.mul(self.add(self.neg(b), s), denom),
                    self.mul(self.sub(self.neg(b), s), denom),
                ];
                r.sort();
                r
            } else {
                Vec::new()
            }
        };
        Ok(RootSet { count: roots.len(), roots })
    }

    /// Number of roots of x^3 + a·x + b = 0 over GF(2^n), b ≠ 0.
    ///
    /// One root iff Tr(a^3/b^2) ≠ Tr(1). Otherwise three roots iff both roots
    /// t1, t2 of t^2 + bt + a^3 are cubes, tested in GF(2^n) for even n and in
    /// the quadratic extension GF(2^{2n}) for odd n; none otherwise.
    pub fn solve_depressed_cubic(&self, a: Elem, b: Elem) -> Result<CubicRoots> {
        if self.p() != 2 {
            return Err(Error::Usage("cubic criterion requires characteristic 2".into()));
        }
        if b.is_zero() {
            return Err(Error::Degenerate("constant term is zero"));
        }
        let a3 = self.pow(a, 3);
        let d = self.div(a3, self.mul(b, b))?;
        let tr_one = self.trace(Elem::ONE);
        let (count, t_cubes) = if self.trace(d) != tr_one {
            (1, None)
        } else if self.n().is_multiple_of(2) {
            // Tr(d) = Tr(1) = 0: t = b·w with w^2 + w = d, both t in the base
            let w = self.solve_artin_schreier(d).expect("trace-zero element");
            let t1 = self.mul(b, w);
            let t2 = self.add(t1, b);
            let cube = |t: Elem| t.is_zero() || self.is_kth_power(t, 3).unwrap();
            let flags = [cube(t1), cube(t2)];
            (if flags[0] && flags[1] { 3 } else { 0 }, Some(flags))
        } else {
            // Tr(d) = 1: t lives in GF(2^{2n}); w = z + s where z^2 + z = e
            let ext = QuadraticExtension::new(self);
            let e = ext.defining_constant();
            let s = self.solve_artin_schreier(self.add(d, e)).expect("Tr(d + e) = 0");
            let w = ext.add(ext.z(), ext.embed(s));
            let t1 = ext.scale(b, w);
            let t2 = ext.add(t1, ext.embed(b));
            let flags = [ext.is_kth_power(t1, 3)?, ext.is_kth_power(t2, 3)?];
            (if flags[0] && flags[1] { 3 } else { 0 }, Some(flags))
        };
        let roots =
            self.enumerate_roots(|x| self.add(self.mul(self.pow(x, 2), x), self.add(self.mul(a, x), b)));
        Ok(CubicRoots { count, roots, t_cubes })
    }

    /// Whether x is a cube in the quadratic extension GF(p^{2n}).
    pub fn is_cube_in_quadratic_extension(&self, x: Elem) -> Result<bool> {
        let ext = QuadraticExtension::new(self);
        ext.is_kth_power(ext.embed(x), 3)
    }
}
