//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so every line is printed; exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use cdelta_core::cdiff::{cddt_table, perturb_scan_monomials, CEntry};
use cdelta_core::charsums::{perturbation_bounds, verify_weil_identity, REL_TOL};
use cdelta_core::gf::is_prime;
use cdelta_core::sbox::{builtin_corpus, sbox_report};
use cdelta_core::theorems::{
    bluher_census, criteria_sweep, find_witness_c, gcd_grid, main_thm_grid, verify_main_thm,
    verify_second_thm, MainThmOptions, SecondVariant, Verdict,
};
use cdelta_core::{
    cdu_spectrum, CRange, CharacterContext, Elem, Field, FieldSpec, FunctionTable, LinearizedPoly, TnVariant,
    UniPoly,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GAUSS_TOL: f64 = 1e-6;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn list(items: &[String]) -> String {
    if items.is_empty() {
        String::new()
    } else {
        format!(": {}", items.join(", "))
    }
}

fn field(p: u32, n: u32) -> Arc<Field> {
    Arc::new(Field::with_params(p, n).unwrap())
}

fn prime_powers(max: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for p in (2..=max).filter(|&p| is_prime(p as u64)) {
        let mut n = 1;
        while p.pow(n) <= max {
            out.push((p, n));
            n += 1;
        }
    }
    out
}

fn aes_headline() -> Outcome {
    let g = FunctionTable::inverse_plus_frobenius(Arc::new(Field::aes()), 4);
    let report = cdu_spectrum(&g, &CRange::ExcludeOne);
    let max = report.max_c_ne_1.unwrap();
    outcome(
        max == 18,
        format!("x^254 + x^16 over GF(2^8)/0x11b: max over c != 1 of delta = {max}, expected 18"),
    )
}

fn sbox_table() -> Outcome {
    let hard =
        [("AES", (4, 9, 9)), ("Skipjack", (12, 8, 9)), ("Rectangle", (4, 5, 7)), ("Serpent-3", (4, 6, 5))];
    let soft = [("APN", (2, 6, 9)), ("Fides", (2, 7, 7))];
    let corpus = builtin_corpus();
    let measured = |name: &str| {
        let record = corpus.iter().find(|r| r.name == name).unwrap();
        sbox_report(record).unwrap().triple()
    };
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, expected) in hard {
        let got = measured(name);
        pass &= got == expected;
        parts.push(format!("{name} {got:?}{}", if got == expected { "" } else { " != expected" }));
    }
    for (name, expected) in soft {
        let got = measured(name);
        // DU must match for any genuine representative
        pass &= got.0 == expected.0;
        let note = if got == expected { "" } else { " soft mismatch vs" };
        parts.push(format!(
            "{name} {got:?}{note}{}",
            if note.is_empty() { String::new() } else { format!(" {expected:?}") }
        ));
    }
    outcome(pass, parts.join("; "))
}

fn main_bounds() -> Outcome {
    let strict = MainThmOptions::default();
    let suite = main_thm_grid(2, &(4..=10).collect::<Vec<_>>(), strict).unwrap();
    let named = verify_main_thm(3, 4, 2, MainThmOptions { require_n_ge_3d: false, ..strict }).unwrap();
    let checked = suite.grid.iter().filter(|c| c.verdict.is_pass() || c.verdict.is_fail()).count();
    let skipped = suite.grid.iter().filter(|c| matches!(c.verdict, Verdict::Skipped(_))).count();
    let failures: Vec<String> = suite
        .grid
        .iter()
        .chain([&named])
        .filter(|c| !c.verdict.is_pass() && !matches!(c.verdict, Verdict::Skipped(_)))
        .map(|c| {
            format!(
                "({},{},{}) observed {} not in [{}, {}]",
                c.params.p,
                c.params.n,
                c.params.t,
                c.observed.unwrap(),
                c.lower.unwrap(),
                c.upper.unwrap()
            )
        })
        .collect();
    let named_ok = named.verdict.is_pass();
    let mut detail = format!(
        "p=2: {checked} admissible points checked, {skipped} skipped; (3,4,2): observed {} against [11, 13]",
        named.observed.unwrap()
    );
    if !failures.is_empty() {
        detail.push_str(&format!("; failing: {}", failures.join(", ")));
    }
    outcome(failures.is_empty() && named_ok, detail)
}

fn second_theorem() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for n in [4, 6, 8] {
        let check = verify_second_thm(n, SecondVariant::T0).unwrap();
        let cubes = find_witness_c(2, n, 0, 5).unwrap();
        let cube = cubes.cube_check.as_ref().unwrap();
        let ok = check.verdict.is_pass() && cubes.holds();
        pass &= ok;
        parts.push(format!(
            "n={n} max {}, cubes at 5: {}/{}",
            check.observed.unwrap(),
            cube.attaining,
            cube.cubes
        ));
    }
    for n in [5, 7, 9] {
        let check = verify_second_thm(n, SecondVariant::T0).unwrap();
        pass &= check.verdict.is_pass();
        parts.push(format!("n={n} max {}", check.observed.unwrap()));
    }
    outcome(pass, parts.join("; "))
}

fn bluher() -> Outcome {
    let mut total = 0;
    let mut bad = Vec::new();
    for p in [2u32, 3] {
        for n in (1..).take_while(|&n| p.pow(n) <= 1 << 10) {
            let f = Field::with_params(p, n).unwrap();
            for t in 1..=n {
                let c = bluher_census(&f, t).unwrap();
                total += 1;
                if !c.holds() {
                    bad.push(format!("(p={p},t={t},n={n}) brute {} formula {:?}", c.brute_force, c.formula));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{total} (p,t,n) points, {} mismatches{}", bad.len(), list(&bad)))
}

fn root_criteria() -> Outcome {
    let mut fields = 0;
    let (mut quad, mut cubic) = (0, 0);
    let mut bad = Vec::new();
    for (p, n) in prime_powers(256) {
        let sweep = criteria_sweep(&Field::with_params(p, n).unwrap()).unwrap();
        fields += 1;
        quad += sweep.quadratic_tuples;
        cubic += sweep.cubic_tuples;
        if !sweep.holds() {
            bad.push(format!("GF({p}^{n}): {:?}", sweep.first_mismatch));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{fields} fields, {quad} quadratics, {cubic} cubics, {} mismatching fields{}",
            bad.len(),
            list(&bad)
        ),
    )
}

fn gcd_forms() -> Outcome {
    let grid = gcd_grid(&[2, 3, 5], 12).unwrap();
    let bad = grid.iter().filter(|c| !c.holds()).count();
    outcome(bad == 0, format!("{} (p,t,n) points, {bad} mismatches", grid.len()))
}

fn random_linearized(field: &Field, rng: &mut ChaCha8Rng) -> LinearizedPoly {
    LinearizedPoly { a: (0..field.n()).map(|_| Elem(rng.gen_range(0..field.order()))).collect() }
}

fn weil_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut cases = 0;
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    for p in [3u32, 5] {
        for n in [2u32, 3, 4] {
            let ctx = CharacterContext::new(field(p, n));
            let mut ls = vec![LinearizedPoly::zero(n), LinearizedPoly::identity(n)];
            ls.extend((1..n).map(|i| LinearizedPoly::monomial(n, i, Elem::ONE)));
            ls.extend((0..50).map(|_| random_linearized(ctx.field(), &mut rng)));
            for l in ls {
                let r = verify_weil_identity(&ctx, &l, TnVariant::Radical).unwrap();
                cases += 1;
                worst = worst.max(r.max_rel_error);
                if !r.holds() {
                    bad.push(format!("p={p} n={n} L={:?}", l.a.iter().map(|e| e.0).collect::<Vec<_>>()));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{cases} polynomials, max relative error {worst:.1e} (tolerance {REL_TOL:.0e}), {} failing{}",
            bad.len(),
            list(&bad)
        ),
    )
}

fn upper_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut parts = Vec::new();
    let mut pass = true;
    for n in [2u32, 4] {
        let ctx = CharacterContext::new(field(3, n));
        let mut violations = Vec::new();
        for _ in 0..20 {
            let l = random_linearized(ctx.field(), &mut rng);
            let b = perturbation_bounds(&ctx, &l, TnVariant::Radical).unwrap();
            if !b.upper_holds {
                violations.push(format!(
                    "L={:?} observed {} > (3*{})^({n}/2) = {}",
                    l.a.iter().map(|e| e.0).collect::<Vec<_>>(),
                    b.observed,
                    b.n_max,
                    b.upper
                ));
            }
        }
        pass &= violations.is_empty();
        parts.push(format!("n={n}: {} of 20 violate{}", violations.len(), list(&violations)));
    }
    outcome(pass, parts.join("; "))
}

fn gauss_sums() -> Outcome {
    let mut worst = 0.0f64;
    let mut count = 0;
    for (p, n) in [(3, 2), (5, 2), (3, 3)] {
        let ctx = CharacterContext::new(field(p, n));
        let q = ctx.field().order();
        let root = (q as f64).sqrt();
        for k in 1..=q - 2 {
            let g = ctx.gauss_sum(k).unwrap();
            worst = worst.max((g.norm() - root).abs() / root);
            count += 1;
        }
    }
    outcome(worst <= GAUSS_TOL, format!("{count} sums over q in {{9, 25, 27}}, max relative error {worst:.1e} (tolerance {GAUSS_TOL:.0e})"))
}

fn irreducible_moduli(p: u32, n: u32, limit: usize) -> Vec<FieldSpec> {
    let q = (p as u64).pow(n);
    (q..2 * q).filter_map(|v| FieldSpec::from_modulus_value(p, v).ok()).take(limit).collect()
}

fn delta_multiset(g: &FunctionTable) -> Vec<u32> {
    let mut d: Vec<u32> = cdu_spectrum(g, &CRange::All).entries.iter().map(|e| e.delta).collect();
    d.sort_unstable();
    d
}

fn properties() -> Outcome {
    let mut parts = Vec::new();

    // row sums through the full table and agreement with the row-max scan
    let mut rows = 0u64;
    let mut row_ok = true;
    for (p, n) in [(2, 4), (3, 2), (5, 2), (2, 5)] {
        let f = field(p, n);
        let q = f.order();
        for g in [
            FunctionTable::inverse(f.clone()),
            FunctionTable::inverse_plus_frobenius(f.clone(), 1),
            FunctionTable::monomial(f.clone(), 3),
        ] {
            let spectrum = cdu_spectrum(&g, &CRange::All);
            for c in f.elements() {
                let table = cddt_table(&g, c);
                for a in f.elements() {
                    row_ok &= table.row(a).iter().sum::<u32>() == q;
                    rows += 1;
                }
                let max = f
                    .elements()
                    .filter(|&a| c != Elem::ONE || !a.is_zero())
                    .flat_map(|a| table.row(a).to_vec())
                    .max();
                row_ok &= max == spectrum.delta(c);
            }
        }
    }
    parts.push(format!("{rows} rows sum to q: {row_ok}"));

    // thread-count independence
    let mut same = true;
    for (p, n, t) in [(2, 6, 2), (3, 4, 1), (2, 8, 3)] {
        let g = FunctionTable::inverse_plus_frobenius(field(p, n), t);
        let runs: Vec<(Vec<CEntry>, Vec<u32>)> = [1, 4, 8]
            .iter()
            .map(|&threads| {
                let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
                pool.install(|| {
                    let s = cdu_spectrum(&g, &CRange::All);
                    let scan = perturb_scan_monomials(&g);
                    (s.entries, scan.per_i.iter().map(|e| e.max_c_ne_1).collect())
                })
            })
            .collect();
        same &= runs.windows(2).all(|w| w[0] == w[1]);
    }
    parts.push(format!("spectra identical at 1/4/8 threads: {same}"));

    // δ multiset is a field invariant for polynomials over the prime field
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut invariant = true;
    let mut comparisons = 0;
    for (p, n) in prime_powers(256).into_iter().filter(|&(_, n)| n >= 2) {
        let q = p.pow(n);
        let moduli = irreducible_moduli(p, n, 3);
        let mut polys = vec![
            UniPoly::from_terms([(q - 2, Elem::ONE), (p, Elem::ONE)]),
            UniPoly::from_terms([(3, Elem::ONE), (1, Elem(p - 1))]),
        ];
        for _ in 0..2 {
            let terms: Vec<(u32, Elem)> =
                (0..4).map(|_| (rng.gen_range(1..q), Elem(rng.gen_range(1..p)))).collect();
            polys.push(UniPoly::from_terms(terms));
        }
        for poly in &polys {
            let sets: Vec<Vec<u32>> = moduli
                .iter()
                .map(|spec| {
                    delta_multiset(
                        &FunctionTable::from_poly(Arc::new(Field::new(spec.clone()).unwrap()), poly).unwrap(),
                    )
                })
                .collect();
            comparisons += sets.len() - 1;
            invariant &= sets.windows(2).all(|w| w[0] == w[1]);
        }
    }
    parts.push(format!("delta multisets agree across moduli ({comparisons} comparisons): {invariant}"));

    outcome(row_ok && same && invariant, parts.join("; "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("AES headline", aes_headline),
        ("S-box table", sbox_table),
        ("main bounds grid", main_bounds),
        ("t = 0 exact values", second_theorem),
        ("Bluher census", bluher),
        ("root-count criteria", root_criteria),
        ("gcd closed forms", gcd_forms),
        ("Weil identity", weil_identity),
        ("perturbation upper bound", upper_bound),
        ("Gauss sums", gauss_sums),
        ("property suite", properties),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str()) || f == &id.to_string()) {
            continue;
        }
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            outcome(false, format!("panicked: {}", msg.unwrap_or_default()))
        });
        if !result.pass {
            failed += 1;
        }
        println!(
            "criterion {id:>2} {} {name} [{:.1}s]: {}",
            if result.pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            result.detail
        );
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
