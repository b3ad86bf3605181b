//! Hopf monoids of ordered simplicial complexes and ordered extended
//! generalized permutohedra.
//!
//! Everything is exact: coefficients are integers, polyhedra have integer
//! vertices, and every closed-form antipode is checked against a brute-force
//! Takeuchi expansion.
//!
//! Ground sets are sets of small integer labels (`0..32`), stored as bitmasks.

pub mod cli;
pub mod complexes;
pub mod compositions;
pub mod error;
pub mod hopf;
pub mod orders;
pub mod polyhedra;
pub mod scrope;
pub mod set;

pub use complexes::OrderedComplex;
pub use compositions::{Album, Preposet, SetComposition};
pub use error::{Error, Result};
pub use hopf::FormalSum;
pub use orders::LinearOrder;
pub use polyhedra::{Face, LatticePolyhedron};
pub use scrope::ScropeComplex;
pub use set::{Elem, Set};
