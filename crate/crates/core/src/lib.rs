//! Complexified octonions `C⊗O` and the Lorentz/gauge machinery of a
//! spinor formalism built on them.
//!
//! * [`octonion`]: the algebra itself (product, conjugations, inner
//!   product, associator, norm, exponential on `C⊗A`).
//! * [`grading`]: the `C⊗A ⊕ C⊗B` split, the `(C⊗A)^±` spaces, seeded
//!   sampling and the composition-algebra identity residuals.
//! * [`lorentz`]: spinor and vector generators, their exponentials and the
//!   double-cover relation.
//! * [`fields`]: polynomial spacetime fields and the Lorentz-invariant
//!   kinetic bilinears.
//! * [`gauge`]: the SU(2)×U(1) connection, covariant derivatives and their
//!   covariance residuals.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod error;
pub mod fields;
pub mod gauge;
pub mod grading;
pub mod lorentz;
pub mod octonion;
pub mod table;

pub use error::{Error, Result};
pub use fields::{Point, PolyField};
pub use grading::SubspaceTag;
pub use lorentz::{Mat4C, Theta};
pub use octonion::{ComplexScalar, CplxOcton};
pub use table::{StructureTable, STRUCTURE_TABLE};
