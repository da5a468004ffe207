use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::format::U;

/// Provenance record attached to every artifact.
///
/// `payload_sha256` covers the data payload only, so two runs with equal
/// `command` and `parameters` agree on it even though `timestamp` differs.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub versions: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<U>,
    pub timestamp: String,
    pub payload_sha256: String,
}

impl RunManifest {
    pub fn new(command: &str, parameters: BTreeMap<String, Value>, seed: Option<u64>, payload: &[u8]) -> Self {
        RunManifest {
            command: command.to_string(),
            parameters,
            versions: format!("limag {}", env!("CARGO_PKG_VERSION")),
            seed: seed.map(|s| U(s as u128)),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            payload_sha256: sha256_hex(payload),
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}
