//! Built-in cipher S-boxes and their c-differential profile under linearized
//! monomial perturbations.

mod tables;

use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cdiff::{cdu_spectrum, du, perturb_scan_monomials, CRange, FunctionTable};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldSpec};

/// An n-bit S-box as a table of 2^n integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SboxRecord {
    pub name: String,
    pub n: u32,
    pub table: Vec<u32>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub provenance: String,
}

impl SboxRecord {
    pub fn new(name: impl Into<String>, n: u32, table: Vec<u32>) -> Result<Self> {
        let record = Self { name: name.into(), n, table, provenance: String::new() };
        record.validate()?;
        Ok(record)
    }

    fn builtin(name: &str, n: u32, table: &[u16], provenance: &str) -> Self {
        Self {
            name: name.into(),
            n,
            table: table.iter().map(|&v| v as u32).collect(),
            provenance: provenance.into(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > 16 {
            return Err(Error::Format(format!("bit width {} outside 1..=16", self.n)));
        }
        let size = 1usize << self.n;
        if self.table.len() != size {
            return Err(Error::Format(format!(
                "table has {} entries, expected {size} for n = {}",
                self.table.len(),
                self.n
            )));
        }
        if let Some((i, v)) = self.table.iter().enumerate().find(|(_, &v)| v as usize >= size) {
            return Err(Error::Format(format!("entry {i} = {v} is out of range for n = {}", self.n)));
        }
        Ok(())
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.table.len()];
        self.table.iter().all(|&v| !std::mem::replace(&mut seen[v as usize], true))
    }

    /// The S-box as a function on the given field of order 2^n.
    pub fn to_function(&self, field: Arc<Field>) -> Result<FunctionTable> {
        self.validate()?;
        if field.p() != 2 || field.n() != self.n {
            return Err(Error::Usage(format!("S-box of width {} needs GF(2^{})", self.n, self.n)));
        }
        FunctionTable::new(field, self.table.iter().map(|&v| Elem(v)).collect())
    }
}

pub fn parse_sbox(json: &str) -> Result<SboxRecord> {
    let record: SboxRecord =
        serde_json::from_str(json).map_err(|e| Error::Format(format!("S-box JSON: {e}")))?;
    record.validate()?;
    Ok(record)
}

pub fn load_sbox(path: impl AsRef<Path>) -> Result<SboxRecord> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_sbox(&text)
}

/// The six reference S-boxes.
pub fn builtin_corpus() -> Vec<SboxRecord> {
    vec![
        SboxRecord::builtin("Rectangle", 4, &tables::RECTANGLE, "RECTANGLE block cipher S-box"),
        SboxRecord::builtin(
            "Serpent-3",
            4,
            &tables::SERPENT_S2,
            "Serpent S-box S2 (third S-box, zero-based numbering)",
        ),
        SboxRecord::builtin(
            "APN",
            6,
            &tables::APN6_DILLON,
            "Browning-Dillon-McQuistan-Wolfe 6-bit APN permutation",
        ),
        SboxRecord::builtin("Fides", 6, &tables::FIDES6, "Fides 6-bit APN S-box"),
        SboxRecord::builtin("AES", 8, &tables::AES, "AES (Rijndael) S-box, FIPS-197"),
        SboxRecord::builtin("Skipjack", 8, &tables::SKIPJACK_F, "Skipjack F-table"),
    ]
}

pub fn builtin(name: &str) -> Option<SboxRecord> {
    builtin_corpus().into_iter().find(|r| r.name.eq_ignore_ascii_case(name))
}

/// The field an n-bit table is read in: the AES modulus for n = 8, otherwise
/// the smallest irreducible of degree n.
pub fn pinned_field(n: u32) -> Result<Field> {
    if n == 8 {
        Ok(Field::aes())
    } else {
        Field::new(FieldSpec::new(2, n)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SboxReport {
    pub name: String,
    pub n: u32,
    pub modulus: u64,
    pub bijective: bool,
    pub du: u32,
    /// max over c ≠ 1 of δ_{S,c}
    pub cdu_max: u32,
    /// max over i < n and c ≠ 1 of δ_{S + x^{2^i},c}
    pub cdu_with_monomial_max: u32,
    pub argmax_i: u32,
    pub per_i: Vec<u32>,
}

impl SboxReport {
    pub fn triple(&self) -> (u32, u32, u32) {
        (self.du, self.cdu_max, self.cdu_with_monomial_max)
    }
}

pub fn sbox_report(record: &SboxRecord) -> Result<SboxReport> {
    let field = Arc::new(pinned_field(record.n)?);
    sbox_report_in(record, field)
}

/// Report computed over a caller-chosen field.
pub fn sbox_report_in(record: &SboxRecord, field: Arc<Field>) -> Result<SboxReport> {
    let modulus = field.spec().modulus_value();
    let s = record.to_function(field)?;
    let spectrum = cdu_spectrum(&s, &CRange::ExcludeOne);
    let scan = perturb_scan_monomials(&s);
    Ok(SboxReport {
        name: record.name.clone(),
        n: record.n,
        modulus,
        bijective: record.is_bijective(),
        du: du(&s),
        cdu_max: spectrum.max_c_ne_1.unwrap_or(0),
        cdu_with_monomial_max: scan.max,
        argmax_i: scan.argmax_i,
        per_i: scan.per_i.iter().map(|e| e.max_c_ne_1).collect(),
    })
}

pub fn corpus_report(records: &[SboxRecord]) -> Result<Vec<SboxReport>> {
    records.par_iter().map(sbox_report).collect()
}

pub const REPORT_HEADER: [&str; 4] = ["name", "DU", "cDU", "cDU_w_linearized_monomial"];

pub fn write_report_csv<W: Write>(reports: &[SboxReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Format(format!("CSV output: {e}"));
    w.write_record(REPORT_HEADER).map_err(io)?;
    for r in reports {
        w.write_record([
            r.name.clone(),
            r.du.to_string(),
            r.cdu_max.to_string(),
            r.cdu_with_monomial_max.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Format(format!("CSV output: {e}")))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    // inverse in GF(2^8) followed by the affine map with constant 0x63
    fn aes_by_construction() -> Vec<u32> {
        let f = Field::aes();
        f.elements()
            .map(|x| {
                let b = f.pow(x, 254).0;
                let rot = |k: u32| ((b << k) | (b >> (8 - k))) & 0xff;
                b ^ rot(1) ^ rot(2) ^ rot(3) ^ rot(4) ^ 0x63
            })
            .collect()
    }

    #[test]
    fn aes_table_matches_construction() {
        let aes = builtin("aes").unwrap();
        assert_eq!(aes.table, aes_by_construction());
        assert_eq!(aes.table[0x53], 0xed);
    }

    #[test]
    fn corpus_is_well_formed() {
        let corpus = builtin_corpus();
        assert_eq!(corpus.len(), 6);
        for r in &corpus {
            r.validate().unwrap();
            assert!(r.is_bijective(), "{}", r.name);
            assert!(!r.provenance.is_empty());
        }
    }

    #[test]
    fn classical_uniformity_of_corpus() {
        let expected =
            [("Rectangle", 4), ("Serpent-3", 4), ("APN", 2), ("Fides", 2), ("AES", 4), ("Skipjack", 12)];
        for (name, d) in expected {
            let r = builtin(name).unwrap();
            let f = Arc::new(pinned_field(r.n).unwrap());
            assert_eq!(du(&r.to_function(f).unwrap()), d, "{name}");
        }
    }

    #[test]
    fn parse_errors_name_the_problem() {
        let ok =
            parse_sbox(r#"{"name":"id","n":4,"table":[0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15]}"#).unwrap();
        assert!(ok.is_bijective());
        let short = parse_sbox(r#"{"name":"s","n":4,"table":[0,1,2,3,4,5,6,7,8,9,10,11,12,13,14]}"#);
        assert!(matches!(short, Err(Error::Format(m)) if m.contains("15 entries")));
        let big = parse_sbox(r#"{"name":"s","n":2,"table":[0,1,2,9]}"#);
        assert!(matches!(big, Err(Error::Format(m)) if m.contains("entry 3")));
        assert!(parse_sbox("{").is_err());
    }

    #[test]
    fn report_csv_layout() {
        let r = sbox_report(&builtin("Rectangle").unwrap()).unwrap();
        assert_eq!(r.modulus, 0x13);
        let mut out = Vec::new();
        write_report_csv(&[r], &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text.lines().next().unwrap(), "name,DU,cDU,cDU_w_linearized_monomial");
        assert_eq!(text.lines().nth(1).unwrap(), "Rectangle,4,5,7");
    }
}
