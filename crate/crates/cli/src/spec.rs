//! Spec files: TOML documents describing one polynomial system.
//!
//! ```toml
//! kind = "zonotope"
//! bounds = [[1, 1], [1, 1], [1, 1]]     # (n + 1) rows of n positive entries
//! generators = [[1, 0], [0, 1]]         # optional, segment directions as columns
//! ```
//!
//! ```toml
//! kind = "multihomogeneous"
//! groups = [2]                          # group sizes n_1..n_s
//! degrees = [[2], [2], [1]]             # (n + 1) rows of s multidegrees
//! ```

use std::path::Path;

use serde::Deserialize;
use sparseres::model::normalize_zonotope;
use sparseres::{validate_zonotope, GeneratorMatrix, MultiHomoSystem, System};

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum SpecFile {
    Zonotope {
        bounds: Vec<Vec<i64>>,
        #[serde(default)]
        generators: Option<Vec<Vec<i64>>>,
    },
    Multihomogeneous {
        groups: Vec<usize>,
        degrees: Vec<Vec<i64>>,
    },
}

/// A parsed and validated spec.
pub struct Spec {
    pub system: System,
    /// `|det V|` when generators were given: the box resultant is raised to this power.
    pub lattice_index: Option<u64>,
}

pub const POINT_LIMIT: u128 = 10_000_000;

pub fn parse(text: &str) -> Result<Spec, CliError> {
    let file: SpecFile = toml::from_str(text).map_err(|e| CliError::Spec(e.to_string()))?;
    let spec = match file {
        SpecFile::Zonotope { bounds, generators: None } => {
            Spec { system: validate_zonotope(bounds)?.into(), lattice_index: None }
        }
        SpecFile::Zonotope { bounds, generators: Some(cols) } => {
            let gen = GeneratorMatrix::from_columns(cols)?;
            let (sys, index) = normalize_zonotope(&gen, bounds)?;
            Spec { system: sys.into(), lattice_index: Some(index) }
        }
        SpecFile::Multihomogeneous { groups, degrees } => {
            Spec { system: MultiHomoSystem::new(groups, degrees)?.into(), lattice_index: None }
        }
    };
    Ok(spec)
}

/// Reads, parses and size-checks a spec file.
pub fn load(path: &Path, force: bool) -> Result<Spec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let spec = parse(&text)?;
    let points = spec.system.subdivision()?.num_points();
    if points > POINT_LIMIT && !force {
        return Err(CliError::Spec(format!(
            "{points} lattice points exceed the limit of {POINT_LIMIT}; pass --force to proceed"
        )));
    }
    Ok(spec)
}
