use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Size limits for the exhaustive procedures.
///
/// Every limit is a configuration value; exceeding one is reported as an
/// error instead of running unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest group any constructor will materialize as a table.
    pub group_order: usize,
    /// Largest group whose subgroup lattice may be enumerated.
    pub enumeration: usize,
    /// Largest order accepted by the isomorphism test.
    pub isomorphism: usize,
    /// Largest order accepted by the minimal generating set search.
    pub generation: usize,
    /// Budget of table lookups for exhaustive word/formula evaluation.
    pub evaluation: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            group_order: 5040,
            enumeration: 256,
            isomorphism: 2000,
            generation: 512,
            evaluation: 100_000_000,
        }
    }
}

impl Caps {
    pub(crate) fn check_enumeration(&self, order: usize) -> Result<()> {
        if order > self.enumeration {
            return Err(Error::EnumerationExceedsCap { order, cap: self.enumeration });
        }
        Ok(())
    }

    pub(crate) fn check_isomorphism(&self, order: usize) -> Result<()> {
        if order > self.isomorphism {
            return Err(Error::OrderExceedsCap { order, cap: self.isomorphism });
        }
        Ok(())
    }

    pub(crate) fn check_generation(&self, order: usize) -> Result<()> {
        if order > self.generation {
            return Err(Error::OrderExceedsCap { order, cap: self.generation });
        }
        Ok(())
    }

    pub(crate) fn check_group_order(&self, order: u128) -> Result<()> {
        if order > self.group_order as u128 {
            return Err(Error::CapExceeded(format!(
                "group of order {order} exceeds group_order cap {}",
                self.group_order
            )));
        }
        Ok(())
    }

    pub(crate) fn check_evaluation(&self, needed: u128) -> Result<()> {
        if needed > self.evaluation as u128 {
            return Err(Error::EvaluationExceedsCap { needed, cap: self.evaluation });
        }
        Ok(())
    }
}
