//! Exact arithmetic over ℚ and cyclotomic fields ℚ(ζ_N).

mod cyclotomic;
mod rational;

pub use cyclotomic::{cyclo_root, cyclotomic_polynomial, euler_phi, merge_conductors, Cyclotomic, MAX_CONDUCTOR};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {0} exceeds the configured cap")]
    ConductorCap(u64),
    #[error("exponent {k} is not coprime to conductor {conductor}")]
    NotCoprime { k: i64, conductor: u32 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("domain error: {0}")]
    Domain(String),
}
