//! Finite-dimensional algebras over small finite fields, their modules,
//! injective envelopes and projective covers, and decision procedures for
//! automorphism-invariance and quasi-injectivity (and the dual notions).

pub mod algebra;
mod bitmat;
pub mod envelopes;
pub mod error;
pub mod field;
pub mod invariance;
pub mod mat;
pub mod modrep;
pub mod oracle;
pub mod par;
pub mod subspace;
pub mod workbench;

pub use algebra::{Algebra, Elem};
pub use error::{Error, Result};
pub use field::{FiniteField, Kernel, Scalar};
pub use mat::Mat;
pub use modrep::{ModuleRep, Submodule};
pub use subspace::Subspace;
