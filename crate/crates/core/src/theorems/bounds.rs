use std::sync::Arc;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::cdiff::{cdu, cdu_spectrum, CRange, CduReport, FunctionTable};
use crate::error::Result;
use crate::gf::{Elem, Field};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Params {
    pub p: u32,
    pub n: u32,
    pub t: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "status", content = "reason")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(String),
}

impl Verdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail)
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// One checked claim about δ_{G,c} for G = x^{p^n-2} + x^{p^t}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub claim: &'static str,
    pub params: Params,
    pub lower: Option<u32>,
    pub upper: Option<u32>,
    /// max of δ_{G,c} over the scanned c
    pub observed: Option<u32>,
    /// min of δ_{G,c} over the scanned c
    pub min_observed: Option<u32>,
    /// a c with δ_{G,c} at least the lower bound, if any
    pub witness: Option<Elem>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl BoundCheck {
    fn skipped(claim: &'static str, params: Params, reason: impl Into<String>) -> Self {
        Self {
            claim,
            params,
            lower: None,
            upper: None,
            observed: None,
            min_observed: None,
            witness: None,
            verdict: Verdict::Skipped(reason.into()),
            notes: Vec::new(),
        }
    }

    fn judged(
        claim: &'static str,
        params: Params,
        lower: Option<u32>,
        upper: Option<u32>,
        report: &CduReport,
    ) -> Self {
        let observed = report.entries.iter().map(|e| e.delta).max();
        let min_observed = report.entries.iter().map(|e| e.delta).min();
        let witness = report
            .entries
            .iter()
            .find(|e| lower.map_or(Some(e.delta) == observed, |l| e.delta >= l))
            .map(|e| e.c);
        let ok = observed.is_some_and(|o| lower.is_none_or(|l| o >= l) && upper.is_none_or(|u| o <= u));
        Self {
            claim,
            params,
            lower,
            upper,
            observed,
            min_observed,
            witness,
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            notes: Vec::new(),
        }
    }
}

/// A named collection of checks; it fails iff any check fails.
#[derive(Debug, Clone, Serialize)]
pub struct Suite {
    pub suite: String,
    pub grid: Vec<BoundCheck>,
}

impl Suite {
    pub fn passed(&self) -> bool {
        self.grid.iter().all(|c| !c.verdict.is_fail())
    }
}

/// Precondition and c range for the main bound check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MainThmOptions {
    /// enforce n ≥ 3·gcd(n, t)
    pub require_n_ge_3d: bool,
    /// scan c ∉ {0, 1} instead of c ≠ 1
    pub exclude_zero: bool,
}

impl Default for MainThmOptions {
    fn default() -> Self {
        Self { require_n_ge_3d: true, exclude_zero: false }
    }
}

fn c_range(exclude_zero: bool) -> CRange {
    if exclude_zero {
        CRange::ExcludeZeroOne
    } else {
        CRange::ExcludeOne
    }
}

fn field_for(p: u32, n: u32) -> Result<Arc<Field>> {
    Ok(Arc::new(Field::with_params(p, n)?))
}

/// Bounds on max_c δ_{G,c} for G = x^{p^n-2} + x^{p^t}:
/// [p^{gcd(n,t)} + 2, p^t + 4] when p = 2 or n/gcd(n,t) is even, [4, p^t + 4] otherwise.
pub fn main_thm_bounds(p: u32, n: u32, t: u32) -> (u32, u32) {
    let d = t.gcd(&n);
    let upper = p.pow(t) + 4;
    let lower = if p == 2 || (n / d).is_multiple_of(2) { p.pow(d) + 2 } else { 4 };
    (lower, upper)
}

pub fn verify_main_thm(p: u32, n: u32, t: u32, opts: MainThmOptions) -> Result<BoundCheck> {
    const CLAIM: &str = "main-thm";
    let params = Params { p, n, t };
    if n < 4 {
        return Ok(BoundCheck::skipped(CLAIM, params, "n < 4"));
    }
    if t == 0 || t >= n {
        return Ok(BoundCheck::skipped(CLAIM, params, "t outside [1, n)"));
    }
    let d = t.gcd(&n);
    if opts.require_n_ge_3d && n < 3 * d {
        return Ok(BoundCheck::skipped(CLAIM, params, format!("n < 3·gcd(n,t) = {}", 3 * d)));
    }
    let field = field_for(p, n)?;
    if p > 2 && (n / d) % 2 == 1 {
        let k = (p as u64).pow(t) + 1;
        let minus_one = field.neg(Elem::ONE);
        if !field.elements().any(|a| field.pow(a, k) == minus_one) {
            return Ok(BoundCheck::skipped(CLAIM, params, "a^{p^t+1} = -1 has no root"));
        }
    }
    let (lower, upper) = main_thm_bounds(p, n, t);
    let g = FunctionTable::inverse_plus_frobenius(field, t);
    let report = cdu_spectrum(&g, &c_range(opts.exclude_zero));
    let mut check = BoundCheck::judged(CLAIM, params, Some(lower), Some(upper), &report);
    if !opts.require_n_ge_3d && n < 3 * d {
        check.notes.push(format!("n ≥ 3·gcd(n,t) relaxed (n = {n}, gcd = {d})"));
    }
    Ok(check)
}

/// Every t in [1, n) for each n in `ns`, checked in parallel.
pub fn main_thm_grid(p: u32, ns: &[u32], opts: MainThmOptions) -> Result<Suite> {
    let points: Vec<(u32, u32)> = ns.iter().flat_map(|&n| (1..n).map(move |t| (n, t))).collect();
    let grid = points.par_iter().map(|&(n, t)| verify_main_thm(p, n, t, opts)).collect::<Result<Vec<_>>>()?;
    Ok(Suite { suite: "main-thm".into(), grid })
}

/// Largest divisor t of n with n/t even, if any.
pub fn corollary_t(n: u32) -> Option<u32> {
    (1..n).rev().find(|&t| n.is_multiple_of(t) && (n / t).is_multiple_of(2))
}

/// Some c ≠ 1 with δ_{G,c} ≥ p^t + 2, t the largest divisor of n with n/t even.
pub fn verify_corollary(p: u32, n: u32) -> Result<BoundCheck> {
    const CLAIM: &str = "corollary";
    let Some(t) = corollary_t(n) else {
        return Ok(BoundCheck::skipped(CLAIM, Params { p, n, t: 0 }, "no divisor t of n with n/t even"));
    };
    let params = Params { p, n, t };
    if n < 4 {
        return Ok(BoundCheck::skipped(CLAIM, params, "n < 4"));
    }
    let field = field_for(p, n)?;
    let g = FunctionTable::inverse_plus_frobenius(field.clone(), t);
    let report = cdu_spectrum(&g, &CRange::ExcludeOne);
    let threshold = p.pow(t) + 2;
    let mut check = BoundCheck::judged(CLAIM, params, Some(threshold), None, &report);
    if p == 2 {
        let cubes: Vec<Elem> = cubes_other_than_zero_one(&field);
        let failing = cubes.iter().filter(|&&c| report.delta(c).is_some_and(|d| d < threshold)).count();
        check.notes.push(format!(
            "{} of {} cubes c ∉ {{0,1}} reach the threshold",
            cubes.len() - failing,
            cubes.len()
        ));
    }
    Ok(check)
}

fn cubes_other_than_zero_one(field: &Field) -> Vec<Elem> {
    field.elements().filter(|&c| c.0 > 1 && field.is_kth_power(c, 3).unwrap_or(false)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SecondVariant {
    /// G = x^{2^n-2} + x
    T0,
    /// G = x^{2^n-2} + x^2
    T1,
}

impl SecondVariant {
    pub fn t(self) -> u32 {
        match self {
            SecondVariant::T0 => 0,
            SecondVariant::T1 => 1,
        }
    }
}

/// The n odd, G = x^{2^n-2} + x^2 search: a ∉ {0,1} with
/// Tr(a^2/(a^2+a+1)) = Tr(a^4/(a+1)^5) = 0, and c = 1 + (a^3+a^2+1)^{-1/2}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddT1Search {
    pub qualifying: Vec<OddT1Candidate>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OddT1Candidate {
    pub a: Elem,
    pub c: Elem,
    pub delta: u32,
}

impl OddT1Search {
    pub fn attaining(&self, target: u32) -> usize {
        self.qualifying.iter().filter(|c| c.delta == target).count()
    }
}

pub fn odd_t1_search(field: &Arc<Field>) -> OddT1Search {
    let f = field.as_ref();
    let g = FunctionTable::inverse_plus_frobenius(field.clone(), 1);
    let one = Elem::ONE;
    let candidates: Vec<(Elem, Elem)> = f
        .elements()
        .filter(|a| a.0 > 1)
        .filter_map(|a| {
            let a2 = f.mul(a, a);
            let a3 = f.mul(a2, a);
            let a4 = f.mul(a2, a2);
            let s = f.add(f.add(a2, a), one);
            let a1 = f.add(a, one);
            let tr1 = f.trace(f.div(a2, s).ok()?);
            let tr2 = f.trace(f.div(a4, f.pow(a1, 5)).ok()?);
            if tr1 != 0 || tr2 != 0 {
                return None;
            }
            let r = f.add(f.add(a3, a2), one);
            let root = f.sqrt(r)?;
            let c = f.add(one, f.inv(root).ok()?);
            Some((a, c))
        })
        .collect();
    let qualifying =
        candidates.par_iter().map(|&(a, c)| OddT1Candidate { a, c, delta: cdu(&g, c) }).collect();
    OddT1Search { qualifying }
}

/// The characteristic-2 claims about G = x^{2^n-2} + x^{2^t}, t ∈ {0, 1}:
/// t = 0 reaches 5 for n even and 4 (never 5) for n odd; t = 1 reaches 5 for
/// some c, through the trace search when n is odd.
pub fn verify_second_thm(n: u32, variant: SecondVariant) -> Result<BoundCheck> {
    const CLAIM: &str = "second-thm";
    let t = variant.t();
    let params = Params { p: 2, n, t };
    if n < 4 {
        return Ok(BoundCheck::skipped(CLAIM, params, "n < 4"));
    }
    let field = field_for(2, n)?;
    match (variant, n.is_multiple_of(2)) {
        (SecondVariant::T0, even) => {
            let g = FunctionTable::inverse_plus_frobenius(field, 0);
            let report = cdu_spectrum(&g, &CRange::ExcludeOne);
            let target = if even { 5 } else { 4 };
            Ok(BoundCheck::judged(CLAIM, params, Some(target), Some(target), &report))
        }
        (SecondVariant::T1, true) => {
            let g = FunctionTable::inverse_plus_frobenius(field, 1);
            let report = cdu_spectrum(&g, &CRange::ExcludeOne);
            let mut check = BoundCheck::judged(CLAIM, params, Some(5), None, &report);
            check.witness = report.entries.iter().find(|e| e.delta == 5).map(|e| e.c);
            if check.witness.is_none() {
                check.verdict = Verdict::Fail;
            }
            Ok(check)
        }
        (SecondVariant::T1, false) => {
            let search = odd_t1_search(&field);
            let hit = search.qualifying.iter().find(|c| c.delta == 5);
            let first = hit.or(search.qualifying.first());
            let mut check = BoundCheck {
                claim: CLAIM,
                params,
                lower: Some(5),
                upper: Some(5),
                observed: first.map(|c| c.delta),
                min_observed: search.qualifying.iter().map(|c| c.delta).min(),
                witness: first.map(|c| c.c),
                verdict: if hit.is_some() { Verdict::Pass } else { Verdict::Fail },
                notes: vec![format!(
                    "{} qualifying a, {} with δ = 5 at the prescribed c",
                    search.qualifying.len(),
                    search.attaining(5)
                )],
            };
            if search.qualifying.is_empty() {
                check.verdict = Verdict::Skipped("no a satisfies both trace conditions".into());
            }
            Ok(check)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubeCheck {
    pub cubes: usize,
    pub attaining: usize,
    /// cubes c ∉ {0,1} whose δ_{G,c} differs from the target
    pub failures: Vec<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessSearch {
    pub params: Params,
    pub target: u32,
    pub witness: Option<Elem>,
    pub delta: Option<u32>,
    /// p = 2, n even, t ∈ {0, 1}: every cube c ∉ {0,1} should reach the target
    pub cube_check: Option<CubeCheck>,
}

impl WitnessSearch {
    pub fn holds(&self) -> bool {
        self.witness.is_some() && self.cube_check.as_ref().is_none_or(|c| c.failures.is_empty())
    }
}

/// Smallest c ≠ 1 with δ_{G,c} ≥ target for G = x^{p^n-2} + x^{p^t}.
pub fn find_witness_c(p: u32, n: u32, t: u32, target: u32) -> Result<WitnessSearch> {
    let field = field_for(p, n)?;
    let g = FunctionTable::inverse_plus_frobenius(field.clone(), t);
    let report = cdu_spectrum(&g, &CRange::ExcludeOne);
    let hit = report.entries.iter().find(|e| e.delta >= target);
    let cube_check = (p == 2 && n.is_multiple_of(2) && t <= 1).then(|| {
        let cubes = cubes_other_than_zero_one(&field);
        let failures: Vec<Elem> =
            cubes.iter().copied().filter(|&c| report.delta(c) != Some(target)).collect();
        CubeCheck { cubes: cubes.len(), attaining: cubes.len() - failures.len(), failures }
    });
    Ok(WitnessSearch {
        params: Params { p, n, t },
        target,
        witness: hit.map(|e| e.c),
        delta: hit.map(|e| e.delta),
        cube_check,
    })
}
