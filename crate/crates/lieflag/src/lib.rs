//! Exact-arithmetic engine for root systems, highest-weight modules and
//! compatible multiplications on Levi modules of parabolic subgroups.

pub mod classify;
pub mod error;
pub mod linalg;
pub mod matrix_reps;
pub mod mult_lab;
pub mod obstruction;
pub mod rational;
pub mod roots;
pub mod tensor;
pub mod weights;

pub use error::{Error, Result};
pub use rational::Q;
pub use roots::{Family, LieType, RootDatum, RootStatus, RootVector, WeightVector};
