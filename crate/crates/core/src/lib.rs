//! c-differential uniformity of functions over small finite fields, with a
//! focus on the inverse function perturbed by linearized polynomials.
//!
//! ```
//! use std::sync::Arc;
//! use cdelta_core::{cdu, Elem, Field, FunctionTable};
//!
//! let field = Arc::new(Field::with_params(2, 4).unwrap());
//! let inv = FunctionTable::inverse(field);
//! assert_eq!(cdu(&inv, Elem::ZERO), 1);
//! ```

pub mod cdiff;
pub mod charsums;
pub mod error;
pub mod fpoly;
pub mod gf;
pub mod sbox;
pub mod theorems;

pub use cdiff::{cdu, cdu_spectrum, du, CRange, CduReport, Classification, FunctionTable};
pub use charsums::{CharacterContext, TnVariant, WeilReport};
pub use error::{Error, Result};
pub use fpoly::{LinearizedPoly, UniPoly};
pub use gf::{Elem, Field, FieldSpec};
pub use sbox::{SboxRecord, SboxReport};
pub use theorems::{BoundCheck, Suite, Verdict};
