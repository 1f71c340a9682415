use std::path::Path;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context};
use cdelta_core::sbox::{parse_sbox, SboxRecord};
use cdelta_core::{Elem, Field, FieldSpec, FunctionTable, LinearizedPoly, UniPoly};

use crate::args::FieldArgs;

/// Decimal or 0x-prefixed hexadecimal.
pub fn parse_int(s: &str) -> anyhow::Result<u64> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|_| anyhow!("invalid integer {s:?}"))
}

pub fn parse_elem(field: &Field, s: &str) -> anyhow::Result<Elem> {
    Ok(field.elem(parse_int(s)?)?)
}

fn parse_modulus(p: u32, s: &str) -> anyhow::Result<FieldSpec> {
    if s.contains(',') {
        let coeffs = s
            .split(',')
            .map(|c| {
                parse_int(c).and_then(|v| u32::try_from(v).map_err(|_| anyhow!("coefficient {v} too large")))
            })
            .collect::<anyhow::Result<Vec<u32>>>()?;
        Ok(FieldSpec::with_modulus(p, coeffs)?)
    } else {
        Ok(FieldSpec::from_modulus_value(p, parse_int(s)?)?)
    }
}

/// The field named by the flags; `fallback_n` fills in a missing --n.
pub fn build_field(args: &FieldArgs, fallback_n: Option<u32>) -> anyhow::Result<Field> {
    if args.aes_field {
        if args.p != 2 || args.n.is_some_and(|n| n != 8) || args.modulus.is_some() {
            bail!("--aes-field fixes p = 2, n = 8 and the modulus");
        }
        return Ok(Field::aes());
    }
    let spec = match &args.modulus {
        Some(m) => {
            let spec = parse_modulus(args.p, m)?;
            if let Some(n) = args.n.filter(|&n| n != spec.n) {
                bail!("--n {n} disagrees with a modulus of degree {}", spec.n);
            }
            spec
        }
        None => {
            let n = args.n.or(fallback_n).ok_or_else(|| anyhow!("--n is required"))?;
            FieldSpec::new(args.p, n)?
        }
    };
    Ok(Field::new(spec)?)
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn read_linearized(path: &Path, field: &Field) -> anyhow::Result<LinearizedPoly> {
    let l: LinearizedPoly = serde_json::from_str(&read(path)?)
        .with_context(|| format!("{}: expected {{\"a\": [...]}}", path.display()))?;
    l.validate(field)?;
    Ok(l)
}

/// A table file is either an S-box record or a bare JSON array.
pub fn read_table(path: &Path) -> anyhow::Result<Vec<u32>> {
    let text = read(path)?;
    if text.trim_start().starts_with('[') {
        let values: Vec<u32> = serde_json::from_str(&text)
            .with_context(|| format!("{}: expected an integer array", path.display()))?;
        Ok(values)
    } else {
        let record: SboxRecord = parse_sbox(&text).with_context(|| path.display().to_string())?;
        Ok(record.table)
    }
}

/// The --fn mini-language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FnSpec {
    Inverse,
    Monomial(u64),
    InversePlusFrobenius(u32),
    InversePlusLinearized(String),
    Table(String),
    Poly(String),
}

impl FnSpec {
    pub fn parse(s: &str) -> anyhow::Result<Self> {
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        fn need<'a>(head: &str, a: Option<&'a str>) -> anyhow::Result<&'a str> {
            a.filter(|a| !a.is_empty()).ok_or_else(|| anyhow!("--fn {head} needs an argument"))
        }
        Ok(match head {
            "inv" if arg.is_none() => FnSpec::Inverse,
            "mono" => FnSpec::Monomial(parse_int(need(head, arg)?)?),
            "inv+mono" => FnSpec::InversePlusFrobenius(
                u32::try_from(parse_int(need(head, arg)?)?).map_err(|_| anyhow!("exponent index too large"))?,
            ),
            "inv+lin" => FnSpec::InversePlusLinearized(need(head, arg)?.to_string()),
            "table" => FnSpec::Table(need(head, arg)?.to_string()),
            "poly" => FnSpec::Poly(need(head, arg)?.to_string()),
            _ => bail!("unknown function {s:?}; expected inv, mono:<e>, inv+mono:<t>, inv+lin:<file>, table:<file> or poly:<file>"),
        })
    }

    /// Table length from a table file, used to infer n.
    fn table_values(&self) -> anyhow::Result<Option<Vec<u32>>> {
        match self {
            FnSpec::Table(path) => Ok(Some(read_table(Path::new(path))?)),
            _ => Ok(None),
        }
    }

    pub fn build(&self, args: &FieldArgs) -> anyhow::Result<FunctionTable> {
        let values = self.table_values()?;
        let inferred_n = match (&values, args.p) {
            (Some(v), 2) if v.len().is_power_of_two() => Some(v.len().trailing_zeros()),
            _ => None,
        };
        let field = Arc::new(build_field(args, inferred_n)?);
        Ok(match self {
            FnSpec::Inverse => FunctionTable::inverse(field),
            FnSpec::Monomial(e) => FunctionTable::monomial(field, *e),
            FnSpec::InversePlusFrobenius(t) => FunctionTable::inverse_plus_frobenius(field, *t),
            FnSpec::InversePlusLinearized(path) => {
                let l = read_linearized(Path::new(path), &field)?;
                FunctionTable::inverse_plus_linearized(field, &l)?
            }
            FnSpec::Table(_) => {
                let values = values.expect("table values were read");
                FunctionTable::new(field, values.into_iter().map(Elem).collect())?
            }
            FnSpec::Poly(path) => {
                let poly: UniPoly = serde_json::from_str(&read(Path::new(path))?)
                    .with_context(|| format!("{path}: expected {{\"terms\": [{{\"e\", \"c\"}}, ...]}}"))?;
                FunctionTable::from_poly(field, &poly)?
            }
        })
    }
}
