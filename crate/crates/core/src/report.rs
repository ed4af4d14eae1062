use serde::{Deserialize, Serialize};

/// Outcome of one identity check. `holds` iff `residual_terms == 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub identity: String,
    pub size: usize,
    pub regime: String,
    pub holds: bool,
    pub residual_terms: usize,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(
        identity: &str,
        size: usize,
        regime: &str,
        residual_terms: usize,
        elapsed: std::time::Duration,
    ) -> Report {
        Report {
            identity: identity.to_string(),
            size,
            regime: regime.to_string(),
            holds: residual_terms == 0,
            residual_terms,
            elapsed_ms: elapsed.as_millis() as u64,
        }
    }
}
