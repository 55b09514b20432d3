//! Bijections between families of cores and integer vectors.

mod compact;
mod gks;
mod pair;

pub use compact::*;
pub use gks::*;
pub use pair::*;

use thiserror::Error;

use crate::partition::{Partition, PartitionError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BijectionError {
    #[error("{partition} is not a {t}-core")]
    NotCore { partition: Partition, t: usize },
    #[error("{0} is not self-conjugate")]
    NotSelfConjugate(Partition),
    #[error("{0} is not doubled distinct")]
    NotDoubledDistinct(Partition),
    #[error("charge vector must sum to zero, got {0}")]
    NonZeroSum(i64),
    #[error("expected a vector of length {expected}, got {got}")]
    Length { expected: usize, got: usize },
    #[error("modulus must be at least {min}, got {t}")]
    Modulus { t: usize, min: usize },
    #[error("invalid set of maxima: {0}")]
    Maxima(String),
    #[error("principal hook set must be nonempty")]
    EmptyDelta,
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

fn check_modulus(t: usize, min: usize) -> Result<(), BijectionError> {
    if t < min {
        Err(BijectionError::Modulus { t, min })
    } else {
        Ok(())
    }
}

fn check_core(p: &Partition, t: usize) -> Result<(), BijectionError> {
    if p.is_t_core(t) {
        Ok(())
    } else {
        Err(BijectionError::NotCore { partition: p.clone(), t })
    }
}
