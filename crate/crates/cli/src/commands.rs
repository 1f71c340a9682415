use std::sync::Arc;

use anyhow::{bail, Context};
use cdelta_core::cdiff::{c_entry, cddt_table, classify, perturb_scan_monomials};
use cdelta_core::charsums::{perturbation_bounds, verify_weil_identity, weil_report, ComplexValue, REL_TOL};
use cdelta_core::sbox::{builtin_corpus, corpus_report, load_sbox, write_report_csv};
use cdelta_core::{
    cdu_spectrum, CRange, CduReport, CharacterContext, Field, FunctionTable, LinearizedPoly, UniPoly,
};
use serde::Serialize;

use crate::args::{CharsumCmd, CharsumKind, FieldCmd, FnCmd, ReportCmd};
use crate::input::{build_field, parse_elem, read_linearized, FnSpec};
use crate::output::{write_json, Format};

fn modulus_string(field: &Field) -> String {
    let spec = field.spec();
    let terms: Vec<String> = spec
        .modulus
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let coeff = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            match i {
                0 => coeff,
                1 => format!("{coeff}x"),
                _ => format!("{coeff}x^{i}"),
            }
        })
        .collect();
    terms.join(" + ")
}

pub fn poly_string(poly: &UniPoly) -> String {
    if poly.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = poly
        .terms()
        .iter()
        .rev()
        .map(|t| {
            let coeff = if t.c.0 == 1 && t.e > 0 { String::new() } else { format!("{}", t.c.0) };
            let sep = if coeff.is_empty() || t.e == 0 { "" } else { "*" };
            match t.e {
                0 => coeff,
                1 => format!("{coeff}{sep}x"),
                e => format!("{coeff}{sep}x^{e}"),
            }
        })
        .collect();
    terms.join(" + ")
}

#[derive(Serialize)]
struct FieldInfo {
    p: u32,
    n: u32,
    q: u32,
    modulus: Vec<u32>,
    modulus_value: u64,
    generator: u32,
}

pub fn field(cmd: &FieldCmd) -> anyhow::Result<()> {
    let field = build_field(&cmd.field, None)?;
    let spec = field.spec();
    let info = FieldInfo {
        p: spec.p,
        n: spec.n,
        q: field.order(),
        modulus: spec.modulus.clone(),
        modulus_value: spec.modulus_value(),
        generator: spec.generator,
    };
    match cmd.output.format(Format::Text) {
        Format::Json => cmd.output.json(&info),
        Format::Csv => bail!("field has no CSV form"),
        Format::Text => cmd.output.write(|w| {
            writeln!(w, "GF({}^{})  q = {}", info.p, info.n, info.q)?;
            writeln!(w, "modulus    {} ({:#x})", modulus_string(&field), info.modulus_value)?;
            writeln!(w, "generator  {}", info.generator)?;
            Ok(())
        }),
    }
}

fn function(cmd: &FnCmd) -> anyhow::Result<FunctionTable> {
    let spec = match &cmd.sbox {
        Some(path) => FnSpec::Table(path.display().to_string()),
        None => FnSpec::parse(&cmd.function)?,
    };
    spec.build(&cmd.field)
}

fn c_range(cmd: &FnCmd, field: &Field, default: CRange) -> anyhow::Result<CRange> {
    Ok(match (&cmd.c, cmd.all_c, cmd.exclude_zero) {
        (Some(c), _, _) => CRange::List(vec![parse_elem(field, c)?]),
        (None, _, true) => CRange::ExcludeZeroOne,
        (None, true, false) => CRange::ExcludeOne,
        (None, false, false) => default,
    })
}

#[derive(Serialize)]
struct CddtJson {
    c: u32,
    q: usize,
    max: u32,
    rows: Vec<Vec<u32>>,
}

pub fn cddt(cmd: &FnCmd) -> anyhow::Result<()> {
    let g = function(cmd)?;
    let Some(c) = &cmd.c else {
        bail!("cddt needs --c");
    };
    let c = parse_elem(g.field(), c)?;
    let table = cddt_table(&g, c);
    match cmd.output.format(Format::Csv) {
        Format::Json => {
            let rows = g.field().elements().map(|a| table.row(a).to_vec()).collect();
            cmd.output.json(&CddtJson { c: c.0, q: table.order(), max: table.max_entry(), rows })
        }
        _ => cmd.output.write(|w| Ok(table.write_csv(w)?)),
    }
}

pub fn cdu(cmd: &FnCmd) -> anyhow::Result<()> {
    let g = function(cmd)?;
    if let Some(c) = &cmd.c {
        let c = parse_elem(g.field(), c)?;
        let entry = c_entry(&g, c);
        let class = classify(&g, c);
        return match cmd.output.format(Format::Text) {
            Format::Json => cmd.output.json(&serde_json::json!({ "entry": entry, "classification": class })),
            Format::Csv => cmd.output.write(|w| {
                writeln!(w, "c,delta,a,b")?;
                writeln!(w, "{},{},{},{}", entry.c.0, entry.delta, entry.a.0, entry.b.0)?;
                Ok(())
            }),
            Format::Text => cmd.output.write(|w| {
                writeln!(
                    w,
                    "δ(c = {}) = {}  at a = {}, b = {}  ({class:?})",
                    c.0, entry.delta, entry.a.0, entry.b.0
                )?;
                Ok(())
            }),
        };
    }
    let range = c_range(cmd, g.field(), CRange::ExcludeOne)?;
    let report = cdu_spectrum(&g, &range);
    match cmd.output.format(Format::Text) {
        Format::Json => cmd.output.json(&report),
        Format::Csv => spectrum_csv(cmd, &report),
        Format::Text => cmd.output.write(|w| {
            if let (Some(m), Some(wit)) = (report.max_c_ne_1, report.witness) {
                writeln!(
                    w,
                    "max over c ≠ 1:      {m}  at c = {}, a = {}, b = {}",
                    wit.c.0, wit.a.0, wit.b.0
                )?;
            }
            if let (Some(m), Some(wit)) = (report.max_c_ne_01, report.witness_c_ne_01) {
                writeln!(
                    w,
                    "max over c ∉ {{0,1}}:  {m}  at c = {}, a = {}, b = {}",
                    wit.c.0, wit.a.0, wit.b.0
                )?;
            }
            Ok(())
        }),
    }
}

fn spectrum_csv(cmd: &FnCmd, report: &CduReport) -> anyhow::Result<()> {
    cmd.output.write(|w| {
        writeln!(w, "c,delta,a,b")?;
        for e in &report.entries {
            writeln!(w, "{},{},{},{}", e.c.0, e.delta, e.a.0, e.b.0)?;
        }
        Ok(())
    })
}

pub fn spectrum(cmd: &FnCmd) -> anyhow::Result<()> {
    let g = function(cmd)?;
    let range = c_range(cmd, g.field(), CRange::All)?;
    let report = cdu_spectrum(&g, &range);
    match cmd.output.format(Format::Csv) {
        Format::Json => cmd.output.json(&report),
        _ => spectrum_csv(cmd, &report),
    }
}

pub fn scan_monomials(cmd: &FnCmd) -> anyhow::Result<()> {
    let g = function(cmd)?;
    let scan = perturb_scan_monomials(&g);
    match cmd.output.format(Format::Text) {
        Format::Json => cmd.output.json(&scan),
        Format::Csv => cmd.output.write(|w| {
            writeln!(w, "i,max_c_ne_1,c,a,b")?;
            for e in &scan.per_i {
                writeln!(
                    w,
                    "{},{},{},{},{}",
                    e.i, e.max_c_ne_1, e.witness.c.0, e.witness.a.0, e.witness.b.0
                )?;
            }
            Ok(())
        }),
        Format::Text => cmd.output.write(|w| {
            for e in &scan.per_i {
                writeln!(w, "i = {:<2} max δ = {:<3} at c = {}", e.i, e.max_c_ne_1, e.witness.c.0)?;
            }
            writeln!(w, "max = {} at i = {}", scan.max, scan.argmax_i)?;
            Ok(())
        }),
    }
}

pub fn interpolate(cmd: &FnCmd) -> anyhow::Result<()> {
    let g = function(cmd)?;
    let poly = g.interpolate();
    let degree = poly.algebraic_degree(g.field().p());
    match cmd.output.format(Format::Text) {
        Format::Json => cmd.output.json(&serde_json::json!({
            "terms": poly.terms(),
            "degree": poly.degree(),
            "algebraic_degree": degree,
        })),
        Format::Csv => cmd.output.write(|w| {
            writeln!(w, "e,c")?;
            for t in poly.terms() {
                writeln!(w, "{},{}", t.e, t.c.0)?;
            }
            Ok(())
        }),
        Format::Text => cmd.output.write(|w| {
            writeln!(w, "{}", poly_string(&poly))?;
            writeln!(w, "algebraic degree {degree}")?;
            Ok(())
        }),
    }
}

/// The built-in corpus and any --sbox files as one table.
pub fn report(cmd: &ReportCmd) -> anyhow::Result<()> {
    let mut records = Vec::new();
    if cmd.corpus || cmd.sbox.is_empty() {
        records.extend(builtin_corpus());
    }
    for path in &cmd.sbox {
        records.push(load_sbox(path).with_context(|| path.display().to_string())?);
    }
    eprintln!("computing {} S-box reports", records.len());
    let reports = corpus_report(&records)?;
    match cmd.output.format(Format::Csv) {
        Format::Json => cmd.output.json(&reports),
        _ => cmd.output.write(|w| Ok(write_report_csv(&reports, w)?)),
    }
}

#[derive(Serialize)]
struct GaussEntry {
    k: u32,
    value: ComplexValue,
    abs: f64,
    sqrt_q: f64,
    rel_error: f64,
}

/// Returns whether every reported quantity satisfied its identity or bound.
pub fn charsum(cmd: &CharsumCmd) -> anyhow::Result<bool> {
    if cmd.output.csv {
        bail!("charsum emits JSON only");
    }
    let field = Arc::new(build_field(&cmd.field, None)?);
    let ctx = CharacterContext::new(field.clone());
    let variant = cmd.kernel.variant();
    let lin = |f: &Field| -> anyhow::Result<LinearizedPoly> {
        match &cmd.lin {
            Some(path) => read_linearized(path, f),
            None => Ok(LinearizedPoly::identity(f.n())),
        }
    };
    match cmd.kind {
        CharsumKind::Gauss => {
            let q = field.order();
            let ks: Vec<u32> = match cmd.k {
                Some(k) => vec![k],
                None => (1..q - 1).collect(),
            };
            let sqrt_q = (q as f64).sqrt();
            let entries = ks
                .into_iter()
                .map(|k| {
                    let g = ctx.gauss_sum(k)?;
                    let abs = g.norm();
                    Ok(GaussEntry {
                        k,
                        value: g.into(),
                        abs,
                        sqrt_q,
                        rel_error: (abs - sqrt_q).abs() / sqrt_q,
                    })
                })
                .collect::<anyhow::Result<Vec<_>>>()?;
            cmd.output.json(&entries)?;
            // the trivial character has |G| = 1
            Ok(entries.iter().all(|e| e.k == 0 || e.rel_error <= REL_TOL))
        }
        CharsumKind::Weil => {
            let l = lin(&field)?;
            let reports = match &cmd.alpha {
                Some(a) => {
                    let alpha = parse_elem(&field, a)?;
                    if alpha.is_zero() {
                        bail!("--alpha must be nonzero");
                    }
                    vec![weil_report(&ctx, &l, alpha, variant)?]
                }
                None => verify_weil_identity(&ctx, &l, variant)?.reports,
            };
            cmd.output.json(&reports)?;
            Ok(reports.iter().all(|r| r.holds()))
        }
        CharsumKind::Bounds => {
            let l = lin(&field)?;
            eprintln!("scanning δ over {} multipliers", field.order() - 1);
            let bounds = perturbation_bounds(&ctx, &l, variant)?;
            cmd.output.write(|w| write_json(w, &bounds))?;
            Ok(bounds.upper_holds && bounds.lower_holds != Some(false))
        }
    }
}
