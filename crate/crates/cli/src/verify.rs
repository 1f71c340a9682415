use std::sync::Arc;
use std::time::Instant;

use anyhow::bail;
use cdelta_core::charsums::verify_weil_identity;
use cdelta_core::gf::is_prime;
use cdelta_core::theorems::{
    bluher_census, gcd_grid, main_thm_grid, minus_one_root_count, verify_main_thm, verify_second_thm,
    MainThmOptions, SecondVariant, BLUHER_MAX_ORDER,
};
use cdelta_core::{CharacterContext, Elem, Field, LinearizedPoly, TnVariant, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Kernel, Suite, Variant, VerifyCmd};

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub grid: Vec<Value>,
}

impl SuiteReport {
    fn new(suite: &str, grid: Vec<Value>) -> Self {
        let passed = grid.iter().all(|v| v["verdict"]["status"] != "fail");
        Self { suite: suite.into(), passed, grid }
    }
}

#[derive(Debug, Serialize)]
pub struct AllReport {
    pub suite: String,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn with_verdict<T: Serialize>(record: &T, v: Verdict) -> anyhow::Result<Value> {
    let mut value = serde_json::to_value(record)?;
    value["verdict"] = serde_json::to_value(v)?;
    Ok(value)
}

impl Kernel {
    pub fn variant(self) -> TnVariant {
        match self {
            Kernel::Radical => TnVariant::Radical,
            Kernel::Restated => TnVariant::Restated,
        }
    }
}

fn keep(filter: Option<u32>, v: u32) -> bool {
    filter.is_none_or(|f| f == v)
}

fn gcd_suite(cmd: &VerifyCmd) -> anyhow::Result<SuiteReport> {
    let primes: Vec<u32> = match cmd.p {
        Some(p) => vec![p],
        None => vec![2, 3, 5],
    };
    let max = cmd.n.unwrap_or(12).max(cmd.t.unwrap_or(12));
    let grid = gcd_grid(&primes, max)?
        .into_iter()
        .filter(|c| keep(cmd.n, c.n) && keep(cmd.t, c.t))
        .map(|c| with_verdict(&c, verdict(c.holds())))
        .collect::<anyhow::Result<_>>()?;
    Ok(SuiteReport::new("gcd", grid))
}

fn bluher_suite(cmd: &VerifyCmd) -> anyhow::Result<SuiteReport> {
    let primes: Vec<u32> = match cmd.p {
        Some(p) => vec![p],
        None => vec![2, 3],
    };
    let mut points = Vec::new();
    for &p in &primes {
        let ns: Vec<u32> = match cmd.n {
            Some(n) => vec![n],
            None => (1..).take_while(|&n| (p as u64).pow(n) <= 1 << 10).collect(),
        };
        for n in ns {
            if (p as u64).pow(n) > BLUHER_MAX_ORDER as u64 {
                bail!("bluher census is limited to fields of order ≤ {BLUHER_MAX_ORDER}");
            }
            let field = Field::with_params(p, n)?;
            for t in (1..=n).filter(|&t| keep(cmd.t, t)) {
                let census = bluher_census(&field, t)?;
                points.push(with_verdict(&census, verdict(census.holds()))?);
            }
        }
    }
    Ok(SuiteReport::new("bluher", points))
}

fn lemma_roots_suite(cmd: &VerifyCmd) -> anyhow::Result<SuiteReport> {
    let mut grid = Vec::new();
    for p in (2..=256u32).filter(|&p| is_prime(p as u64) && keep(cmd.p, p)) {
        for n in (1..).take_while(|&n| p.pow(n) <= 256).filter(|&n| keep(cmd.n, n)) {
            let field = Field::with_params(p, n)?;
            for t in (0..n).filter(|&t| keep(cmd.t, t)) {
                let check = minus_one_root_count(&field, t);
                grid.push(with_verdict(&check, verdict(check.holds()))?);
            }
        }
    }
    Ok(SuiteReport::new("lemma-roots", grid))
}

fn main_thm_suite(cmd: &VerifyCmd) -> anyhow::Result<SuiteReport> {
    let opts = MainThmOptions { require_n_ge_3d: !cmd.relax, exclude_zero: cmd.exclude_zero };
    let checks = match (cmd.p, cmd.n, cmd.t) {
        // a single named point is evaluated even where n < 3·gcd(n, t)
        (p, Some(n), Some(t)) => {
            let single = MainThmOptions { require_n_ge_3d: false, ..opts };
            vec![verify_main_thm(p.unwrap_or(2), n, t, single)?]
        }
        (p, Some(n), None) => main_thm_grid(p.unwrap_or(2), &[n], opts)?.grid,
        (Some(p), None, t) => {
            let ns: Vec<u32> = (4..).take_while(|&n| (p as u64).pow(n) <= 1 << 10).collect();
            main_thm_grid(p, &ns, opts)?.grid.into_iter().filter(|c| keep(t, c.params.t)).collect()
        }
        (None, None, t) => {
            let mut grid = main_thm_grid(2, &(4..=10).collect::<Vec<_>>(), opts)?.grid;
            grid.extend(main_thm_grid(3, &[4], opts)?.grid);
            grid.into_iter().filter(|c| keep(t, c.params.t)).collect()
        }
    };
    let grid = checks.iter().map(serde_json::to_value).collect::<Result<_, _>>()?;
    Ok(SuiteReport::new("main-thm", grid))
}

fn second_thm_suite(cmd: &VerifyCmd) -> anyhow::Result<SuiteReport> {
    if cmd.p.is_some_and(|p| p != 2) {
        bail!("second-thm is a characteristic-2 suite");
    }
    let variants = match cmd.variant {
        Some(Variant::T0) => vec![SecondVariant::T0],
        Some(Variant::T1) => vec![SecondVariant::T1],
        None => vec![SecondVariant::T0, SecondVariant::T1],
    };
    let ns: Vec<u32> = match cmd.n {
        Some(n) => vec![n],
        None => (4..=10).collect(),
    };
    let points: Vec<(u32, SecondVariant)> =
        ns.iter().flat_map(|&n| variants.iter().map(move |&v| (n, v))).collect();
    let grid = points
        .par_iter()
        .map(|&(n, v)| -> anyhow::Result<Value> { Ok(serde_json::to_value(verify_second_thm(n, v)?)?) })
        .collect::<anyhow::Result<_>>()?;
    Ok(SuiteReport::new("second-thm", grid))
}

/// The zero polynomial, the identity, each single Frobenius term and
/// `samples` uniformly random polynomials.
pub fn weil_cases(field: &Field, samples: usize, rng: &mut ChaCha8Rng) -> Vec<(String, LinearizedPoly)> {
    let n = field.n();
    let q = field.order();
    let mut cases = vec![("zero".to_string(), LinearizedPoly::zero(n))];
    for i in 0..n {
        cases.push((format!("x^(p^{i})"), LinearizedPoly::monomial(n, i, Elem::ONE)));
    }
    for s in 0..samples {
        let a = (0..n).map(|_| Elem(rng.gen_range(0..q))).collect();
        cases.push((format!("random-{s}"), LinearizedPoly { a }));
    }
    cases
}

fn weil_suite(cmd: &VerifyCmd) -> anyhow::Result<SuiteReport> {
    let primes: Vec<u32> = match cmd.p {
        Some(2) => bail!("the weil suite needs odd p"),
        Some(p) => vec![p],
        None => vec![3, 5],
    };
    let ns: Vec<u32> = match cmd.n {
        Some(n) => vec![n],
        None => vec![2, 3, 4],
    };
    let variant = cmd.kernel.variant();
    let mut rng = ChaCha8Rng::seed_from_u64(cmd.seed);
    let mut grid = Vec::new();
    for &p in &primes {
        for &n in &ns {
            let ctx = CharacterContext::new(Arc::new(Field::with_params(p, n)?));
            for (case, l) in weil_cases(ctx.field(), cmd.samples, &mut rng) {
                let r = verify_weil_identity(&ctx, &l, variant)?;
                let record = json!({
                    "params": {"p": p, "n": n},
                    "case": case,
                    "l": l,
                    "kernel": variant,
                    "max_rel_error": r.max_rel_error,
                    "failures": r.failures,
                });
                grid.push(with_verdict(&record, verdict(r.holds()))?);
            }
        }
    }
    Ok(SuiteReport::new("weil", grid))
}

fn run_one(suite: Suite, cmd: &VerifyCmd) -> anyhow::Result<SuiteReport> {
    let start = Instant::now();
    let report = match suite {
        Suite::Gcd => gcd_suite(cmd),
        Suite::Bluher => bluher_suite(cmd),
        Suite::LemmaRoots => lemma_roots_suite(cmd),
        Suite::MainThm => main_thm_suite(cmd),
        Suite::SecondThm => second_thm_suite(cmd),
        Suite::Weil => weil_suite(cmd),
        Suite::All => unreachable!("expanded by the caller"),
    }?;
    eprintln!(
        "{}: {} points, {} ({:.1}s)",
        report.suite,
        report.grid.len(),
        if report.passed { "passed" } else { "FAILED" },
        start.elapsed().as_secs_f64()
    );
    Ok(report)
}

/// Runs the requested suite; the flag says whether every point passed.
pub fn run(cmd: &VerifyCmd) -> anyhow::Result<bool> {
    if cmd.output.csv {
        bail!("verify emits JSON only");
    }
    if cmd.suite == Suite::All {
        let suites =
            [Suite::Gcd, Suite::Bluher, Suite::LemmaRoots, Suite::MainThm, Suite::SecondThm, Suite::Weil]
                .into_iter()
                .map(|s| run_one(s, cmd))
                .collect::<anyhow::Result<Vec<_>>>()?;
        let passed = suites.iter().all(|s| s.passed);
        cmd.output.json(&AllReport { suite: "all".into(), passed, suites })?;
        Ok(passed)
    } else {
        let report = run_one(cmd.suite, cmd)?;
        cmd.output.json(&report)?;
        Ok(report.passed)
    }
}
