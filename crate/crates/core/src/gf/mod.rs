//! Exact arithmetic in GF(p^n) for p^n ≤ 2^16.

mod ext;
mod field;
pub(crate) mod fp_poly;
mod roots;
mod spec;

pub use ext::{ExtElem, QuadraticExtension};
pub use field::{Elem, Field};
pub use roots::{CubicRoots, RootSet};
pub use spec::{FieldSpec, AES_MODULUS, MAX_ORDER};

pub use fp_poly::is_prime;
