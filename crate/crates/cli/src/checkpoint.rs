use std::fs;
use std::io::Write;
use std::path::Path;

use flt_lab_core::claims::{ClaimId, ClaimParams};
use flt_lab_core::diophantine::{Partial, SolutionRecord};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const FORMAT_VERSION: u32 = 1;

/// State of a partially completed claim run.
///
/// `completed_prefix` counts the work units (outer-loop values, numbered
/// across the claim's stages) whose results are already merged in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub format_version: u32,
    pub claim: ClaimId,
    pub params: Vec<(String, String)>,
    pub unit_count: u64,
    pub completed_prefix: u64,
    pub partial_solutions: Vec<SolutionRecord>,
    pub candidates: u64,
    pub filtered: u64,
    pub elapsed_seconds: f64,
}

impl Checkpoint {
    pub fn new(params: &ClaimParams, unit_count: u64, completed_prefix: u64, acc: &Partial, elapsed: f64) -> Self {
        Checkpoint {
            format_version: FORMAT_VERSION,
            claim: params.id(),
            params: params.render(),
            unit_count,
            completed_prefix,
            partial_solutions: acc.records.clone(),
            candidates: acc.candidates,
            filtered: acc.filtered,
            elapsed_seconds: elapsed,
        }
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Runtime(format!("reading checkpoint {}: {e}", path.display())))?;
        let cp: Checkpoint = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("checkpoint {} is not valid: {e}", path.display())))?;
        if cp.format_version != FORMAT_VERSION {
            return Err(CliError::Usage(format!(
                "checkpoint {} has format version {}, expected {FORMAT_VERSION}",
                path.display(),
                cp.format_version
            )));
        }
        Ok(cp)
    }

    /// Rejects a checkpoint written for a different claim, parameter set or
    /// unit layout.
    pub fn check_matches(&self, params: &ClaimParams, unit_count: u64, path: &Path) -> Result<(), CliError> {
        let same = self.claim == params.id()
            && self.params == params.render()
            && self.unit_count == unit_count
            && self.completed_prefix <= unit_count;
        if same {
            Ok(())
        } else {
            Err(CliError::Usage(format!(
                "checkpoint {} was written for a different run ({} with {:?})",
                path.display(),
                self.claim,
                self.params
            )))
        }
    }

    /// Writes to a sibling temporary file and renames it over `path`.
    pub fn store(&self, path: &Path) -> Result<(), CliError> {
        let io = |e: std::io::Error| CliError::Runtime(format!("writing checkpoint {}: {e}", path.display()));
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        let tmp = Path::new(&tmp);
        let mut f = fs::File::create(tmp).map_err(io)?;
        let body = serde_json::to_string(self).expect("checkpoint serializes");
        f.write_all(body.as_bytes()).map_err(io)?;
        f.write_all(b"\n").map_err(io)?;
        f.sync_all().map_err(io)?;
        fs::rename(tmp, path).map_err(io)
    }
}
