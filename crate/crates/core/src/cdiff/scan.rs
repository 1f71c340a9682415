use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::table::{Cddt, FunctionTable};
use crate::gf::Elem;

/// Which multipliers c a spectrum covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CRange {
    All,
    ExcludeOne,
    ExcludeZeroOne,
    List(Vec<Elem>),
}

impl CRange {
    pub fn values(&self, q: u32) -> Vec<Elem> {
        match self {
            CRange::All => (0..q).map(Elem).collect(),
            CRange::ExcludeOne => (0..q).filter(|&c| c != 1).map(Elem).collect(),
            CRange::ExcludeZeroOne => (2..q).map(Elem).collect(),
            CRange::List(cs) => {
                let mut cs: Vec<Elem> = cs.clone();
                cs.sort();
                cs.dedup();
                cs
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub c: Elem,
    pub a: Elem,
    pub b: Elem,
}

/// δ_{F,c} together with the lexicographically smallest (a, b) attaining it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CEntry {
    pub c: Elem,
    pub delta: u32,
    pub a: Elem,
    pub b: Elem,
}

impl CEntry {
    pub fn witness(&self) -> Witness {
        Witness { c: self.c, a: self.a, b: self.b }
    }
}

#[derive(Debug, Clone, Copy)]
struct Best {
    delta: u32,
    a: u32,
    b: u32,
}

impl Best {
    const NONE: Best = Best { delta: 0, a: u32::MAX, b: u32::MAX };

    // larger count wins; ties go to the smaller (a, b)
    fn merge(self, other: Best) -> Best {
        if other.delta > self.delta || (other.delta == self.delta && (other.a, other.b) < (self.a, self.b)) {
            other
        } else {
            self
        }
    }
}

struct Prepared<'t> {
    table: &'t FunctionTable,
    // -c·F(x)
    neg_cf: Vec<u32>,
    binary: bool,
}

impl<'t> Prepared<'t> {
    fn new(table: &'t FunctionTable, c: Elem) -> Self {
        let f = table.field();
        let neg_cf = table.values().iter().map(|&v| f.neg(f.mul(c, v)).0).collect();
        Self { table, neg_cf, binary: f.p() == 2 }
    }

    /// Histogram of F(x+a) - cF(x) over all x into `hist`.
    #[inline]
    fn fill(&self, a: u32, hist: &mut [u32]) {
        let vals = self.table.values();
        if self.binary {
            for (x, &ncf) in self.neg_cf.iter().enumerate() {
                let d = vals[x ^ a as usize].0 ^ ncf;
                hist[d as usize] += 1;
            }
        } else {
            let f = self.table.field();
            let a = Elem(a);
            for (x, &ncf) in self.neg_cf.iter().enumerate() {
                let xa = f.add(Elem(x as u32), a);
                let d = f.add(vals[xa.index()], Elem(ncf));
                hist[d.index()] += 1;
            }
        }
    }

    fn row_best(&self, a: u32, hist: &mut [u32]) -> Best {
        self.fill(a, hist);
        let mut best = Best { delta: 0, a, b: 0 };
        for (b, h) in hist.iter_mut().enumerate() {
            if *h > best.delta {
                best.delta = *h;
                best.b = b as u32;
            }
            *h = 0;
        }
        best
    }
}

fn first_a(c: Elem) -> u32 {
    if c == Elem::ONE {
        1
    } else {
        0
    }
}

fn entry(c: Elem, best: Best) -> CEntry {
    CEntry { c, delta: best.delta, a: Elem(best.a), b: Elem(best.b) }
}

/// δ_{F,c}, scanning rows sequentially.
pub(crate) fn c_entry_sequential(table: &FunctionTable, c: Elem) -> CEntry {
    let q = table.len();
    let prep = Prepared::new(table, c);
    let mut hist = vec![0u32; q];
    let best = (first_a(c)..q as u32).map(|a| prep.row_best(a, &mut hist)).fold(Best::NONE, Best::merge);
    entry(c, best)
}

/// δ_{F,c} with rows spread over the rayon pool.
pub fn c_entry(table: &FunctionTable, c: Elem) -> CEntry {
    let q = table.len();
    let prep = Prepared::new(table, c);
    let best = (first_a(c)..q as u32)
        .into_par_iter()
        .with_min_len(64)
        .map_init(|| vec![0u32; q], |hist, a| prep.row_best(a, hist))
        .reduce(|| Best::NONE, Best::merge);
    entry(c, best)
}

/// c-differential uniformity δ_{F,c}; a ≠ 0 is required exactly when c = 1.
pub fn cdu(table: &FunctionTable, c: Elem) -> u32 {
    c_entry(table, c).delta
}

/// Classical differential uniformity.
pub fn du(table: &FunctionTable) -> u32 {
    cdu(table, Elem::ONE)
}

/// One c-DDT entry by direct counting.
pub fn cddt_entry(table: &FunctionTable, c: Elem, a: Elem, b: Elem) -> u32 {
    let f = table.field();
    f.elements().filter(|&x| f.sub(table.get(f.add(x, a)), f.mul(c, table.get(x))) == b).count() as u32
}

/// The full q×q c-DDT, one histogram pass per row.
pub fn cddt_table(table: &FunctionTable, c: Elem) -> Cddt {
    let q = table.len();
    let prep = Prepared::new(table, c);
    let mut counts = vec![0u32; q * q];
    counts.par_chunks_mut(q).enumerate().for_each(|(a, row)| prep.fill(a as u32, row));
    Cddt::from_rows(c, q, counts)
}

/// Per-c maxima of the c-DDT and their aggregates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CduReport {
    #[serde(rename = "per_c", serialize_with = "per_c_map")]
    pub entries: Vec<CEntry>,
    pub max_c_ne_1: Option<u32>,
    pub max_c_ne_01: Option<u32>,
    /// Smallest (c, a, b) attaining `max_c_ne_1`.
    pub witness: Option<Witness>,
    /// Smallest (c, a, b) attaining `max_c_ne_01`.
    pub witness_c_ne_01: Option<Witness>,
}

fn per_c_map<S: Serializer>(entries: &[CEntry], s: S) -> Result<S::Ok, S::Error> {
    let map: BTreeMap<u32, u32> = entries.iter().map(|e| (e.c.0, e.delta)).collect();
    map.serialize(s)
}

impl CduReport {
    fn from_entries(entries: Vec<CEntry>) -> Self {
        let pick = |keep: &dyn Fn(Elem) -> bool| -> Option<CEntry> {
            entries.iter().filter(|e| keep(e.c)).fold(None, |acc: Option<CEntry>, &e| match acc {
                Some(b) if b.delta >= e.delta => Some(b),
                _ => Some(e),
            })
        };
        let ne1 = pick(&|c| c != Elem::ONE);
        let ne01 = pick(&|c| c != Elem::ONE && c != Elem::ZERO);
        Self {
            max_c_ne_1: ne1.map(|e| e.delta),
            max_c_ne_01: ne01.map(|e| e.delta),
            witness: ne1.map(|e| e.witness()),
            witness_c_ne_01: ne01.map(|e| e.witness()),
            entries,
        }
    }

    pub fn delta(&self, c: Elem) -> Option<u32> {
        self.entries.binary_search_by_key(&c, |e| e.c).ok().map(|i| self.entries[i].delta)
    }

    pub fn get(&self, c: Elem) -> Option<&CEntry> {
        self.entries.binary_search_by_key(&c, |e| e.c).ok().map(|i| &self.entries[i])
    }

    /// Overall maximum over every scanned c.
    pub fn max(&self) -> u32 {
        self.entries.iter().map(|e| e.delta).max().unwrap_or(0)
    }
}

/// δ_{F,c} for every c in `range`, in ascending c order. The result does not
/// depend on the size of the thread pool.
pub fn cdu_spectrum(table: &FunctionTable, range: &CRange) -> CduReport {
    let cs = range.values(table.field().order());
    let entries: Vec<CEntry> = cs.par_iter().map(|&c| c_entry_sequential(table, c)).collect();
    CduReport::from_entries(entries)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialEntry {
    pub i: u32,
    pub max_c_ne_1: u32,
    pub max_c_ne_01: Option<u32>,
    pub witness: Witness,
}

/// Spectrum maxima of F + x^{p^i} for each 0 ≤ i < n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialScan {
    pub per_i: Vec<MonomialEntry>,
    pub max: u32,
    pub argmax_i: u32,
}

pub fn perturb_scan_monomials(table: &FunctionTable) -> MonomialScan {
    let n = table.field().n();
    let per_i: Vec<MonomialEntry> = (0..n)
        .map(|i| {
            let g = table.plus_frobenius(i);
            let report = cdu_spectrum(&g, &CRange::ExcludeOne);
            MonomialEntry {
                i,
                max_c_ne_1: report.max_c_ne_1.expect("q ≥ 2 leaves c = 0"),
                max_c_ne_01: report.max_c_ne_01,
                witness: report.witness.expect("nonempty range"),
            }
        })
        .collect();
    let best = per_i
        .iter()
        .fold(None::<&MonomialEntry>, |acc, e| match acc {
            Some(b) if b.max_c_ne_1 >= e.max_c_ne_1 => Some(b),
            _ => Some(e),
        })
        .expect("n ≥ 1");
    MonomialScan { max: best.max_c_ne_1, argmax_i: best.i, per_i: per_i.clone() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "class", content = "delta")]
pub enum Classification {
    PcN,
    APcN,
    Uniform(u32),
}

impl Classification {
    pub fn from_delta(delta: u32) -> Self {
        match delta {
            1 => Classification::PcN,
            2 => Classification::APcN,
            d => Classification::Uniform(d),
        }
    }
}

pub fn classify(table: &FunctionTable, c: Elem) -> Classification {
    Classification::from_delta(cdu(table, c))
}

/// Whether x ↦ F(x+a) - cF(x) is a permutation for every admissible a.
pub fn is_pcn_by_permutation(table: &FunctionTable, c: Elem) -> bool {
    let f = table.field();
    let q = table.len();
    let start = first_a(c);
    (start..q as u32).into_par_iter().all(|a| {
        let a = Elem(a);
        let mut seen = vec![false; q];
        f.elements().all(|x| {
            let d = f.sub(table.get(f.add(x, a)), f.mul(c, table.get(x)));
            !std::mem::replace(&mut seen[d.index()], true)
        })
    })
}
