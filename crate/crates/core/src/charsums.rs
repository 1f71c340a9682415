//! Additive and multiplicative characters, Gauss sums, and Weil sums of the
//! quadratic forms x ↦ α·x·L(x) for linearized L over fields of odd
//! characteristic.
//!
//! The modulus of such a Weil sum is governed by the kernel of an F_p-linear
//! map T_n on the field: |S_α|^2 = q·N_α with N_α = |ker T_n|. Two forms of T_n
//! are available through [`TnVariant`]; [`verify_weil_identity`] tests either
//! one against the directly summed S_α.

use std::f64::consts::TAU;
use std::sync::Arc;

use num_complex::Complex64;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::cdiff::{cdu_spectrum, CRange, FunctionTable};
use crate::error::{Error, Result};
use crate::fpoly::{LinearizedPoly, Support};
use crate::gf::{Elem, Field};

/// Relative gate for floating-point identities.
pub const REL_TOL: f64 = 1e-6;

const KAHAN_THRESHOLD: usize = 10_000;

/// Serialized form of a complex value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

/// Neumaier-compensated accumulator for complex terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: Complex64,
    comp: Complex64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: Complex64) {
        self.sum.re = neumaier(self.sum.re, x.re, &mut self.comp.re);
        self.sum.im = neumaier(self.sum.im, x.im, &mut self.comp.im);
    }

    pub fn value(&self) -> Complex64 {
        self.sum + self.comp
    }
}

fn neumaier(sum: f64, x: f64, comp: &mut f64) -> f64 {
    let t = sum + x;
    if sum.abs() >= x.abs() {
        *comp += (sum - t) + x;
    } else {
        *comp += (x - t) + sum;
    }
    t
}

fn sum_terms(len: usize, terms: impl Iterator<Item = Complex64>) -> Complex64 {
    if len > KAHAN_THRESHOLD {
        let mut acc = CompensatedSum::default();
        terms.for_each(|z| acc.add(z));
        acc.value()
    } else {
        terms.sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharKind {
    /// χ_1(x) = e^{2πi·Tr(x)/p}
    Additive,
    /// ψ_k(g^l) = e^{2πi·k·l/(q-1)}
    Multiplicative(u32),
}

/// Characters of one field, with cached roots of unity.
#[derive(Debug, Clone)]
pub struct CharacterContext {
    field: Arc<Field>,
    /// e^{2πik/p}
    additive_roots: Vec<Complex64>,
    /// e^{2πik/(q-1)}
    multiplicative_roots: Vec<Complex64>,
}

fn roots_of_unity(m: u32) -> Vec<Complex64> {
    (0..m).map(|k| Complex64::from_polar(1.0, TAU * k as f64 / m as f64)).collect()
}

impl CharacterContext {
    pub fn new(field: Arc<Field>) -> Self {
        let additive_roots = roots_of_unity(field.p());
        let multiplicative_roots = roots_of_unity(field.order() - 1);
        Self { field, additive_roots, multiplicative_roots }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    #[inline]
    pub fn additive(&self, x: Elem) -> Complex64 {
        self.additive_roots[self.field.trace(x) as usize]
    }

    pub fn multiplicative(&self, k: u32, x: Elem) -> Result<Complex64> {
        let l = self.field.dlog(x)? as u64;
        let qm1 = self.multiplicative_roots.len() as u64;
        Ok(self.multiplicative_roots[(k as u64 * l % qm1) as usize])
    }

    pub fn eval(&self, kind: CharKind, x: Elem) -> Result<Complex64> {
        match kind {
            CharKind::Additive => Ok(self.additive(x)),
            CharKind::Multiplicative(k) => self.multiplicative(k, x),
        }
    }

    /// G(ψ_k, χ_1) = Σ_{z ≠ 0} ψ_k(z) χ_1(z).
    pub fn gauss_sum(&self, k: u32) -> Result<Complex64> {
        let q = self.field.order();
        if k > q - 2 {
            return Err(Error::Usage(format!("character index {k} exceeds q - 2 = {}", q - 2)));
        }
        let terms = self
            .field
            .elements()
            .skip(1)
            .map(|z| self.multiplicative(k, z).expect("nonzero") * self.additive(z));
        Ok(sum_terms(q as usize, terms))
    }

    /// S_α = Σ_x χ_1(α·x·L(x)).
    pub fn weil_sum(&self, l: &LinearizedPoly, alpha: Elem) -> Result<Complex64> {
        let f = &self.field;
        l.validate(f)?;
        let terms = f.elements().map(|x| self.additive(f.mul(alpha, f.mul(x, l.eval(f, x)))));
        Ok(sum_terms(f.order() as usize, terms))
    }

    /// (1/q) Σ_α Σ_x χ_1(α(f(x) - target)) for f given by its values.
    pub fn count_by_characters(&self, values: &[Elem], target: Elem) -> Result<f64> {
        let f = &self.field;
        if values.len() != f.order() as usize {
            return Err(Error::Usage("value table does not match the field".into()));
        }
        let shifted: Vec<Elem> = values.iter().map(|&v| f.sub(v, target)).collect();
        let total: Complex64 = f
            .elements()
            .map(|alpha| sum_terms(shifted.len(), shifted.iter().map(|&v| self.additive(f.mul(alpha, v)))))
            .sum();
        Ok(total.re / f.order() as f64)
    }
}

fn require_odd(field: &Field) -> Result<()> {
    if field.p() == 2 {
        Err(Error::Usage("requires odd characteristic".into()))
    } else {
        Ok(())
    }
}

/// Which form of the kernel map T_n to build, with c_i = α·a_i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TnVariant {
    /// 2A_0 w + Σ_{i≥1} (A_i w^{p^i} + (A_i w)^{p^{n-i}}), A_i = c_i^{p^{n-i}}
    Restated,
    /// 2c_0 w + Σ_{i≥1} (c_i w^{p^i} + (c_i w)^{p^{n-i}}), the radical of the
    /// bilinear form (x, w) ↦ Tr(α(x L(w) + w L(x)))
    #[default]
    Radical,
}

/// T_n(w) for the chosen variant.
pub fn tn_eval(field: &Field, l: &LinearizedPoly, alpha: Elem, variant: TnVariant, w: Elem) -> Elem {
    let n = field.n();
    let two = field.from_residue(2);
    let mut acc = Elem::ZERO;
    for (i, &a) in l.a.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let i = i as u32;
        let c = field.mul(alpha, a);
        if i == 0 {
            acc = field.add(acc, field.mul(two, field.mul(c, w)));
            continue;
        }
        let coeff = match variant {
            TnVariant::Restated => field.frobenius(c, n - i),
            TnVariant::Radical => c,
        };
        let fwd = field.mul(coeff, field.frobenius(w, i));
        let back = field.frobenius(field.mul(coeff, w), n - i);
        acc = field.add(acc, field.add(fwd, back));
    }
    acc
}

/// Rank over F_p of a matrix given as rows of residues.
fn rank_mod_p(mut rows: Vec<Vec<u32>>, p: u32) -> u32 {
    let cols = rows.first().map_or(0, Vec::len);
    let p64 = p as u64;
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_inverse(rows[rank][col], p);
        for v in rows[rank].iter_mut() {
            *v = (*v as u64 * inv as u64 % p64) as u32;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col] as u64;
                for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                    let sub = factor * pv as u64 % p64;
                    *v = ((*v as u64 + p64 - sub) % p64) as u32;
                }
            }
        }
        rank += 1;
    }
    rank as u32
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    let (mut r, mut base, mut e) = (1u64, a as u64, p as u64 - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    r as u32
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KernelCount {
    /// N_α = p^dim
    pub n_alpha: u64,
    pub dim: u32,
    /// γ with N_α = p^{δγ}, when δ divides dim
    pub gamma: Option<u32>,
}

/// |ker T_n| from the rank of T_n as an F_p-linear map on F_p^n.
pub fn tn_kernel_count(
    field: &Field,
    l: &LinearizedPoly,
    alpha: Elem,
    variant: TnVariant,
) -> Result<KernelCount> {
    require_odd(field)?;
    l.validate(field)?;
    let (p, n) = (field.p(), field.n());
    // column j of the matrix is T_n(x^j); rank is the same for the transpose
    let rows: Vec<Vec<u32>> =
        (0..n).map(|j| field.coordinates(tn_eval(field, l, alpha, variant, Elem(p.pow(j))))).collect();
    let dim = n - rank_mod_p(rows, p);
    let delta = l.support().map(|s| s.delta).unwrap_or(n);
    Ok(KernelCount {
        n_alpha: (p as u64).pow(dim),
        dim,
        gamma: dim.is_multiple_of(delta).then_some(dim / delta),
    })
}

/// |ker T_n| by evaluating T_n at every element.
pub fn tn_kernel_count_exhaustive(field: &Field, l: &LinearizedPoly, alpha: Elem, variant: TnVariant) -> u64 {
    field.elements().filter(|&w| tn_eval(field, l, alpha, variant, w).is_zero()).count() as u64
}

#[derive(Debug, Clone, Serialize)]
pub struct WeilReport {
    pub alpha: Elem,
    #[serde(rename = "S_alpha")]
    pub s_alpha: ComplexValue,
    #[serde(rename = "N_alpha")]
    pub n_alpha: u64,
    pub gamma_alpha: Option<u32>,
    /// sign of S_α when it is real
    pub mu_alpha: Option<i8>,
    /// | |S_α|^2 - q N_α | / (q N_α)
    pub rel_error: f64,
}

impl WeilReport {
    pub fn holds(&self) -> bool {
        self.rel_error <= REL_TOL
    }
}

fn sign_if_real(z: Complex64) -> Option<i8> {
    let scale = z.norm().max(1.0);
    if z.im.abs() > REL_TOL * scale || z.re.abs() <= REL_TOL * scale {
        None
    } else if z.re > 0.0 {
        Some(1)
    } else {
        Some(-1)
    }
}

pub fn weil_report(
    ctx: &CharacterContext,
    l: &LinearizedPoly,
    alpha: Elem,
    variant: TnVariant,
) -> Result<WeilReport> {
    let field = ctx.field();
    let s = ctx.weil_sum(l, alpha)?;
    let k = tn_kernel_count(field, l, alpha, variant)?;
    let expected = field.order() as f64 * k.n_alpha as f64;
    Ok(WeilReport {
        alpha,
        s_alpha: s.into(),
        n_alpha: k.n_alpha,
        gamma_alpha: k.gamma,
        mu_alpha: sign_if_real(s),
        rel_error: (s.norm_sqr() - expected).abs() / expected,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct WeilIdentityReport {
    pub variant: TnVariant,
    pub reports: Vec<WeilReport>,
    pub max_rel_error: f64,
    /// α ≠ 0 where |S_α|^2 = q N_α fails
    pub failures: Vec<Elem>,
}

impl WeilIdentityReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// |S_α|^2 against q·N_α for every α ≠ 0.
pub fn verify_weil_identity(
    ctx: &CharacterContext,
    l: &LinearizedPoly,
    variant: TnVariant,
) -> Result<WeilIdentityReport> {
    require_odd(ctx.field())?;
    let alphas: Vec<Elem> = ctx.field().elements().skip(1).collect();
    let reports = alphas.par_iter().map(|&a| weil_report(ctx, l, a, variant)).collect::<Result<Vec<_>>>()?;
    let failures = reports.iter().filter(|r| !r.holds()).map(|r| r.alpha).collect();
    let max_rel_error = reports.iter().map(|r| r.rel_error).fold(0.0, f64::max);
    Ok(WeilIdentityReport { variant, reports, max_rel_error, failures })
}

/// The support condition under which the Weil sums are real with known sign:
/// n = 2m, n/δ even, 2δ | s_i - s_j, and 4 < p^δ + 1 dividing every p^{s_i} + 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportCondition {
    pub support: Vec<u32>,
    pub delta: u32,
    /// gcd of 2s_0, s_0 + s_i, s_0 + n - s_i and n over the support
    pub epsilon: u32,
    pub n_even: bool,
    pub n_over_delta_even: bool,
    pub differences_divisible: bool,
    pub divides_all: bool,
    pub satisfied: bool,
}

pub fn support_condition(p: u32, n: u32, support: &Support) -> SupportCondition {
    let s = &support.indices;
    let delta = support.delta;
    let s0 = s[0];
    let epsilon = s[1..].iter().fold((2 * s0).gcd(&n), |g, &si| g.gcd(&(s0 + si)).gcd(&(s0 + n - si)));
    let n_even = n.is_multiple_of(2);
    let n_over_delta_even = (n / delta).is_multiple_of(2);
    let differences_divisible = s.iter().all(|&si| s.iter().all(|&sj| si.abs_diff(sj) % (2 * delta) == 0));
    let modulus = (p as u128).pow(delta) + 1;
    let divides_all = modulus > 4 && s.iter().all(|&si| ((p as u128).pow(si) + 1) % modulus == 0);
    SupportCondition {
        support: s.clone(),
        delta,
        epsilon,
        n_even,
        n_over_delta_even,
        differences_divisible,
        divides_all,
        satisfied: n_even && n_over_delta_even && differences_divisible && divides_all,
    }
}

/// Upper and lower estimates for max_c δ_{G,c}, G = x^{q-2} + L(x), set
/// against the exhaustive value.
#[derive(Debug, Clone, Serialize)]
pub struct PerturbationBounds {
    pub variant: TnVariant,
    /// max over α ≠ 0 of N_α
    pub n_max: u64,
    /// (p N)^{n/2}
    pub upper: f64,
    pub upper_holds: bool,
    pub condition: Option<SupportCondition>,
    /// the signed character-sum estimate, when the support condition holds
    pub lower: Option<f64>,
    pub lower_imag: Option<f64>,
    pub lower_holds: Option<bool>,
    /// (1/q) Σ_α χ_1(α) S_α with S_α summed directly
    pub exact_character_sum: f64,
    /// #{x : x L(x) = -1}
    pub direct_count: u64,
    /// max over c ≠ 1 of δ_{G,c}
    pub observed: u32,
    /// L = 0, where every N_α = q
    pub degenerate: bool,
    pub notes: Vec<String>,
}

pub fn perturbation_bounds(
    ctx: &CharacterContext,
    l: &LinearizedPoly,
    variant: TnVariant,
) -> Result<PerturbationBounds> {
    let field = ctx.field().clone();
    require_odd(&field)?;
    l.validate(&field)?;
    let (p, n, q) = (field.p(), field.n(), field.order());
    let degenerate = l.is_zero();
    let alphas: Vec<Elem> = field.elements().collect();

    let sums: Vec<(Complex64, KernelCount)> = alphas
        .par_iter()
        .map(|&a| -> Result<_> {
            let s = ctx.weil_sum(l, a)?;
            let k = if a.is_zero() {
                KernelCount { n_alpha: q as u64, dim: n, gamma: None }
            } else {
                tn_kernel_count(&field, l, a, variant)?
            };
            Ok((s, k))
        })
        .collect::<Result<_>>()?;

    let n_max = sums.iter().skip(1).map(|(_, k)| k.n_alpha).max().unwrap_or(1);
    // observed^2 ≤ (pN)^n decides the upper bound without rounding
    let upper_sq = (p as u128 * n_max as u128).checked_pow(n);
    let upper = ((p as f64) * n_max as f64).powf(n as f64 / 2.0);

    let g = FunctionTable::inverse_plus_linearized(field.clone(), l)?;
    let observed = cdu_spectrum(&g, &CRange::ExcludeOne).max_c_ne_1.unwrap_or(0);
    let upper_holds = upper_sq.is_none_or(|u| (observed as u128).pow(2) <= u);

    let exact: Complex64 =
        alphas.iter().zip(&sums).map(|(&a, (s, _))| ctx.additive(a) * s).sum::<Complex64>() / q as f64;
    let minus_one = field.neg(Elem::ONE);
    let direct_count =
        field.elements().filter(|&x| field.mul(x, l.eval(&field, x)) == minus_one).count() as u64;

    let mut notes = Vec::new();
    let condition = l.support().ok().map(|s| support_condition(p, n, &s));
    let (mut lower, mut lower_imag, mut lower_holds) = (None, None, None);
    if let Some(cond) = condition.as_ref().filter(|c| c.satisfied) {
        let m = n / 2;
        let delta = cond.delta;
        let outer = if (m / delta) % 2 == 0 { 1.0 } else { -1.0 } / (p as f64).powi(m as i32);
        let mut acc = Complex64::new(1.0, 0.0);
        let mut usable = true;
        for (&a, (_, k)) in alphas.iter().zip(&sums).skip(1) {
            let weight = if k.n_alpha == 1 {
                1.0
            } else if let Some(gamma) = k.gamma.filter(|g| g % 2 == 0) {
                let sign = if (gamma / 2) % 2 == 0 { 1.0 } else { -1.0 };
                sign * (p as f64).powf((delta * gamma) as f64 / 2.0)
            } else {
                usable = false;
                notes.push(format!("N_α = {} at α = {a} is not an even power of p^δ", k.n_alpha));
                break;
            };
            acc += ctx.additive(a) * (outer * weight);
        }
        if usable {
            lower = Some(acc.re);
            lower_imag = Some(acc.im);
            lower_holds = Some(acc.re <= observed as f64 + REL_TOL);
        }
    }
    if degenerate {
        notes.push("L = 0: every N_α equals q".into());
    }
    Ok(PerturbationBounds {
        variant,
        n_max,
        upper,
        upper_holds,
        condition,
        lower,
        lower_imag,
        lower_holds,
        exact_character_sum: exact.re,
        direct_count,
        observed,
        degenerate,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u32, n: u32) -> CharacterContext {
        CharacterContext::new(Arc::new(Field::with_params(p, n).unwrap()))
    }

    #[test]
    fn cached_roots_are_unimodular() {
        let c = ctx(5, 2);
        for z in c.additive_roots.iter().chain(&c.multiplicative_roots) {
            assert!((z.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn character_values() {
        let c = ctx(3, 2);
        assert_eq!(c.additive(Elem::ZERO), Complex64::new(1.0, 0.0));
        let total: Complex64 = c.field().elements().map(|x| c.additive(x)).sum();
        assert!(total.norm() < 1e-9);
        for x in c.field().elements().skip(1) {
            assert_eq!(c.eval(CharKind::Multiplicative(0), x).unwrap(), Complex64::new(1.0, 0.0));
        }
        assert!(c.eval(CharKind::Multiplicative(1), Elem::ZERO).is_err());
    }

    #[test]
    fn characters_are_homomorphisms() {
        let c = ctx(3, 3);
        let f = c.field().clone();
        for x in f.elements() {
            for y in f.elements() {
                let lhs = c.additive(f.add(x, y));
                assert!((lhs - c.additive(x) * c.additive(y)).norm() < 1e-9);
                if !x.is_zero() && !y.is_zero() {
                    for k in [1, 5, 13] {
                        let lhs = c.multiplicative(k, f.mul(x, y)).unwrap();
                        let rhs = c.multiplicative(k, x).unwrap() * c.multiplicative(k, y).unwrap();
                        assert!((lhs - rhs).norm() < 1e-9);
                    }
                }
            }
        }
    }

    #[test]
    fn gauss_sum_examples() {
        let g0 = ctx(3, 2).gauss_sum(0).unwrap();
        assert!((g0 - Complex64::new(-1.0, 0.0)).norm() < 1e-9);
        // quadratic character of F_3: 1 ↦ 1, 2 ↦ -1; χ_1(1) - χ_1(2) = i√3
        let c3 = ctx(3, 1);
        let g = c3.gauss_sum(1).unwrap();
        assert!((g - Complex64::new(0.0, 3f64.sqrt())).norm() < 1e-9);
        let c25 = ctx(5, 2);
        for k in 1..24 {
            assert!((c25.gauss_sum(k).unwrap().norm() - 5.0).abs() < 5e-6);
        }
        assert!(c25.gauss_sum(24).is_err());
    }

    #[test]
    fn weil_sum_trivial_cases() {
        let c = ctx(3, 2);
        let f = c.field().clone();
        let id = LinearizedPoly::identity(2);
        assert!((c.weil_sum(&id, Elem::ZERO).unwrap() - Complex64::new(9.0, 0.0)).norm() < 1e-9);
        assert!((c.weil_sum(&id, Elem::ONE).unwrap().norm() - 3.0).abs() < 1e-9);
        let zero = LinearizedPoly::zero(2);
        for a in f.elements() {
            assert!((c.weil_sum(&zero, a).unwrap() - Complex64::new(9.0, 0.0)).norm() < 1e-9);
        }
    }

    #[test]
    fn kernel_trivial_cases() {
        let c = ctx(3, 4);
        let f = c.field();
        let id = LinearizedPoly::identity(4);
        for a in f.elements().skip(1).take(10) {
            let k = tn_kernel_count(f, &id, a, TnVariant::Restated).unwrap();
            assert_eq!((k.n_alpha, k.gamma), (1, Some(0)));
        }
        let zero = LinearizedPoly::zero(4);
        assert_eq!(tn_kernel_count(f, &zero, Elem::ONE, TnVariant::Radical).unwrap().n_alpha, 81);
        assert!(
            tn_kernel_count(&Field::with_params(2, 4).unwrap(), &id, Elem::ONE, TnVariant::Radical).is_err()
        );
    }

    #[test]
    fn rank_matches_enumeration() {
        let c = ctx(3, 4);
        let f = c.field();
        let l = LinearizedPoly::monomial(4, 2, Elem::ONE);
        for variant in [TnVariant::Restated, TnVariant::Radical] {
            for a in f.elements().skip(1) {
                let k = tn_kernel_count(f, &l, a, variant).unwrap();
                assert_eq!(k.n_alpha, tn_kernel_count_exhaustive(f, &l, a, variant));
            }
        }
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut acc = CompensatedSum::default();
        acc.add(Complex64::new(1e16, 0.0));
        for _ in 0..1000 {
            acc.add(Complex64::new(1.0, 1.0));
        }
        acc.add(Complex64::new(-1e16, 0.0));
        assert_eq!(acc.value(), Complex64::new(1000.0, 1000.0));
    }

    #[test]
    fn support_condition_examples() {
        let l = LinearizedPoly::monomial(4, 2, Elem::ONE);
        let c = support_condition(3, 4, &l.support().unwrap());
        assert!(c.satisfied);
        assert_eq!(c.delta, 2);
        let id = LinearizedPoly::identity(4);
        assert!(!support_condition(3, 4, &id.support().unwrap()).satisfied);
    }

    #[test]
    fn report_json_layout() {
        let c = ctx(3, 2);
        let r = weil_report(&c, &LinearizedPoly::identity(2), Elem::ONE, TnVariant::Restated).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert!(v["S_alpha"]["re"].is_number());
        assert!(v["S_alpha"]["im"].is_number());
        assert_eq!(v["N_alpha"], 1);
    }
}
