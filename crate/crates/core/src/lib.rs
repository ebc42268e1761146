#![no_std]
extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod bv;
pub mod catalog;
pub mod error;
pub mod graded;
pub mod hopf;
pub mod linalg;
pub mod quotient;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
pub use graded::{Element, ElementDegree, FreeAlgebra, GeneratorKind, GeneratorSpec, Monomial};
pub use scalar::{Ring, Scalar};
pub use quotient::{PresentedAlgebra, RewriteRule, TorsionRule};
pub use tensor::{LoopElement, Tensor, TensorAlgebra, TensorSquareElement};
pub use hopf::{Derivation, HopfStructure, Primitive, PrimitiveBasis, SuspensionMap};
pub use bv::{CheckReport, LoopModel, LoopModelParts, PartialSource, PrimitiveAction};
pub use catalog::{build, golden_delta_table, ModelId};
