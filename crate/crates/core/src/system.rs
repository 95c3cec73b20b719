//! A polynomial system of either supported shape, behind one interface.

use crate::error::Result;
use crate::greedy::predicted_size_zonotope;
use crate::model::{MultiHomoSystem, ZonotopeSystem};
use crate::multihomo::{multihomo_subdivision, predicted_size_multihomo};
use crate::oracles::mixed_volume::{mixed_volume_permanent, multihomo_mixed_volume};
use crate::subdivision::Subdivision;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum System {
    Zonotope(ZonotopeSystem),
    MultiHomogeneous(MultiHomoSystem),
}

impl System {
    /// Number of variables.
    pub fn n(&self) -> usize {
        match self {
            System::Zonotope(s) => s.n(),
            System::MultiHomogeneous(s) => s.n(),
        }
    }

    pub fn subdivision(&self) -> Result<Subdivision> {
        match self {
            System::Zonotope(s) => Ok(Subdivision::canonical(s.clone())),
            System::MultiHomogeneous(s) => multihomo_subdivision(s),
        }
    }

    /// Expected number of greedy rows, from the type functions alone.
    pub fn predicted_size(&self) -> u128 {
        match self {
            System::Zonotope(s) => predicted_size_zonotope(s),
            System::MultiHomogeneous(s) => predicted_size_multihomo(s),
        }
    }

    /// Degree of the resultant in the coefficients of each polynomial.
    pub fn mixed_volumes(&self) -> Result<Vec<u128>> {
        (0..=self.n())
            .map(|i| match self {
                System::Zonotope(s) => mixed_volume_permanent(s.bounds(), i),
                System::MultiHomogeneous(s) => multihomo_mixed_volume(s, i),
            })
            .collect()
    }
}

impl From<ZonotopeSystem> for System {
    fn from(s: ZonotopeSystem) -> Self {
        System::Zonotope(s)
    }
}

impl From<MultiHomoSystem> for System {
    fn from(s: MultiHomoSystem) -> Self {
        System::MultiHomogeneous(s)
    }
}
