//! Exact combinatorics of cyclic quiver varieties for Dynkin quivers.

pub mod cyclic;
pub mod derived;
pub mod dominant;
pub mod error;
pub mod forms;
pub mod laurent;
pub mod linalg;
pub mod literal;
pub mod quiver;
pub mod vectors;
pub mod verify;

pub use derived::{DerivedModel, DerivedObject, IndModule, ModuleId};
pub use error::{Error, Result};
pub use quiver::{DimVec, DynkinQuiver, DynkinType, HeightFunction, Orientation};
pub use cyclic::CycIndex;
pub use vectors::{CycVec, CycVertex, VVector, VWPair, WVector};
pub use laurent::formal::FormalSum;
pub use laurent::{HalfInt, HalfLaurent};
pub use verify::{Check, VerificationReport};
