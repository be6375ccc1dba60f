pub mod cli;
pub mod error;
pub mod fuzzyset;
pub mod geometry;
pub mod linalg;
pub mod oracle;
pub mod pairing;
pub mod polar;
pub mod rational;
pub mod topology;

pub use error::{Error, Result};
pub use fuzzyset::StepFuzzySet;
pub use geometry::{Halfspace, Region};
pub use linalg::{Matrix, Vector};
pub use pairing::DualPair;
pub use rational::Rational;
