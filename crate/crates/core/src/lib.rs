//! Exact computer algebra for Com-PreLie algebras and bialgebras.

pub mod algebra;
pub mod axioms;
pub mod dual;
pub mod error;
pub mod linear;
pub mod oudom_guin;
pub mod ptree;
pub mod rigidity;
pub mod shuffle;
pub mod ucp;

pub use error::{Error, Result};
