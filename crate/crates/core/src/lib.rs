//! Secondary multiplication on the Tate cohomology of generalized quaternion
//! groups Q₄ₜ in characteristic 2, and the Massey-product test for
//! realizability of modules over it.

pub mod error;
pub mod field;
pub mod group_algebra;
pub mod linalg;
pub mod massey;
pub mod resolution;
pub mod secondary;
pub mod tate_ring;

pub use error::{Error, Result};
pub use field::{FieldKind, Gf4};
pub use group_algebra::{AlgebraElement, GroupConfig, GroupElement};
pub use tate_ring::{parse_element, Bm, BasisMonomial, RingElement, Variant};
