//! Exact linear algebra over the rationals.

pub mod linalg;
pub mod lincomb;
pub mod rational;
pub mod tensor;

pub use lincomb::{bilinear, parse_lincomb, BasisKey, LinComb};
pub use rational::{int, parse_rational, rat, Rational};
pub use tensor::{Tensor2, Tensor3, T2, T3};
