//! Double Poisson tensors on path algebras of quivers.
//!
//! Polyvector fields on a path algebra are written as necklaces: cyclic
//! words in the arrows of the doubled quiver, where a starred arrow stands
//! for the double derivation dual to it. The necklace bracket makes these a
//! graded Lie algebra, a degree-2 element `P` with `{P, P} = 0` is a double
//! Poisson tensor, and `d_P = {P, -}` is the differential whose cohomology
//! this crate computes.
//!
//! ```
//! use std::sync::Arc;
//! use double_poisson::{Quiver, PolyField, bracket};
//!
//! let q = Arc::new(Quiver::plane());
//! let p = PolyField::from_names(&q, &["x", "*x", "*x"]).unwrap();
//! assert!(bracket::kontsevich_bracket(&p, &p).unwrap().is_zero());
//! ```

pub mod bracket;
pub mod classical;
pub mod cli;
pub mod coeff;
pub mod cohomology;
pub mod error;
pub mod finalg;
pub mod linalg;
pub mod ncalg;
pub mod necklace;
pub mod quiver;
pub mod syntax;

pub use coeff::Coeff;
pub use error::{Error, Result};
pub use ncalg::{NCPoly, Path, TensorElem};
pub use necklace::{Necklace, PolyField, Reduced};
pub use quiver::{Bead, BeadKind, Quiver};
