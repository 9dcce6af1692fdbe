//! System configuration files and preset lookup.
//!
//! A configuration file is JSON:
//! `{"name": "B2", "coxeter_matrix": [[1,4],[4,1]], "cartan_matrix": [[2,-1],[-2,2]]}`,
//! with 0 standing for `m = ∞` and the Cartan matrix optional when every
//! `m` is 2 or 3.

use std::path::Path;

use lightleaf_core::coxeter::{preset, PRESET_NAMES};
use lightleaf_core::CoxeterSystem;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemConfig {
    pub name: String,
    pub coxeter_matrix: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan_matrix: Option<Vec<Vec<i64>>>,
}

impl SystemConfig {
    pub fn from_system(system: &CoxeterSystem) -> Self {
        SystemConfig {
            name: system.name().to_string(),
            coxeter_matrix: system.coxeter_matrix(),
            cartan_matrix: Some(system.cartan_matrix()),
        }
    }

    pub fn build(&self) -> Result<CoxeterSystem, CliError> {
        CoxeterSystem::new(self.name.clone(), &self.coxeter_matrix, self.cartan_matrix.as_deref())
            .map_err(|e| CliError::Config(format!("system {:?}: {e}", self.name)))
    }
}

/// A preset name (case-insensitive) or the path of a configuration file.
pub fn load_system(source: &str) -> Result<CoxeterSystem, CliError> {
    if let Some(name) = PRESET_NAMES.iter().find(|n| n.eq_ignore_ascii_case(source)) {
        return Ok(preset(name).expect("listed presets exist"));
    }
    let path = Path::new(source);
    if !path.exists() {
        return Err(CliError::Config(format!(
            "{source:?} is neither a preset ({}) nor an existing file",
            PRESET_NAMES.join(", ")
        )));
    }
    let text = std::fs::read_to_string(path)?;
    let config: SystemConfig =
        serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    config.build()
}
