//! The c-differential scan engine.
//!
//! For a function F and multiplier c, the c-derivative in direction a is
//! x ↦ F(x+a) - cF(x). Each (c, a) row is reduced to a histogram over the
//! output b; the maximum over rows (skipping a = 0 when c = 1) is δ_{F,c}.
//! Rows are independent, so scans split over c and then a, and partial
//! results merge by (max count, smallest witness), making every report
//! independent of the thread count.

mod scan;
mod table;

pub use scan::{
    c_entry, cddt_entry, cddt_table, cdu, cdu_spectrum, classify, du, is_pcn_by_permutation,
    perturb_scan_monomials, CEntry, CRange, CduReport, Classification, MonomialEntry, MonomialScan, Witness,
};
pub use table::{Cddt, FunctionTable};
