//! Machine-readable reports. Exact quantities are serialized as exact
//! strings; the few genuinely numeric fields always carry a `tol` sibling.

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub version: String,
    pub command: String,
    pub input_digest: String,
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: String,
    pub data: serde_json::Value,
    pub paper_anchor: String,
}

impl CheckRecord {
    pub fn new(
        name: impl Into<String>,
        status: &str,
        data: serde_json::Value,
        anchor: impl Into<String>,
    ) -> Self {
        CheckRecord {
            name: name.into(),
            status: status.to_string(),
            data,
            paper_anchor: anchor.into(),
        }
    }
}

pub fn digest_bytes(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("sha256:{}", hex::encode(hasher.finalize()))
}

/// Digest of several named inputs, order-independent in content but fixed
/// by the sorted names.
pub fn digest_many(named: &[(String, Vec<u8>)]) -> String {
    let mut hasher = Sha256::new();
    for (name, bytes) in named {
        hasher.update(name.as_bytes());
        hasher.update([0u8]);
        hasher.update(bytes);
        hasher.update([0u8]);
    }
    format!("sha256:{}", hex::encode(hasher.finalize()))
}
