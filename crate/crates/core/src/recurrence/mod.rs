//! Bilinear polynomial recurrences and Somos-k sequences over exact rationals.

mod hirota;
mod somos;

use thiserror::Error;

use crate::polyring::Poly;

pub use hirota::{
    certificate, h_at, hirota_generate, hirota_rhs, hirota_step, Certificate, HCoeffs, HirotaSpec,
    SequenceReport, StepCheck, StepFailure, StepOutcome,
};
pub use somos::{somos_first_noninteger, somos_generate, SomosSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecurrenceError {
    #[error("f, g and h are all zero")]
    AllZeroCoefficients,
    #[error("seeds must be nonzero")]
    ZeroSeed,
    #[error("f, g and h share the factor {0}")]
    CommonFactor(Poly),
    #[error("P_{n} is the zero polynomial and cannot divide the next step")]
    ZeroTerm { n: u64 },
    #[error("horizon must be at least {min}, got {got}")]
    HorizonTooShort { min: u64, got: u64 },
    #[error("Somos order must be at least 4, got {0}")]
    SomosOrder(usize),
    #[error("Somos-{k} needs {k} seeds, got {got}")]
    SomosSeedCount { k: usize, got: usize },
    #[error("division by zero term a_{index}")]
    SomosZeroDivisor { index: usize },
}
