use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;

/// Provenance block embedded in every JSON artifact.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: &'static str,
    pub params: Value,
    pub seed: Option<u64>,
    pub inputs: Vec<String>,
    pub outputs: Vec<String>,
    pub versions: Versions,
    /// Only set for commands whose output is timing-dependent anyway.
    pub wall_ms: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Versions {
    pub lgrank: &'static str,
    pub cli: &'static str,
}

impl RunManifest {
    pub fn new(command: &'static str, params: Value, seed: Option<u64>) -> RunManifest {
        RunManifest {
            command,
            params,
            seed,
            inputs: Vec::new(),
            outputs: Vec::new(),
            versions: Versions { lgrank: lgrank::VERSION, cli: env!("CARGO_PKG_VERSION") },
            wall_ms: None,
        }
    }

    pub fn input(mut self, p: &Path) -> Self {
        self.inputs.push(p.display().to_string());
        self
    }

    pub fn inputs<'a>(mut self, ps: impl IntoIterator<Item = &'a PathBuf>) -> Self {
        self.inputs.extend(ps.into_iter().map(|p| p.display().to_string()));
        self
    }

    pub fn outputs<'a>(mut self, ps: impl IntoIterator<Item = &'a PathBuf>) -> Self {
        self.outputs.extend(ps.into_iter().map(|p| p.display().to_string()));
        self
    }

    pub fn value(&self) -> Value {
        serde_json::to_value(self).expect("manifest serializes")
    }
}
