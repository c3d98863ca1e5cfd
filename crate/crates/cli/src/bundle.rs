//! Bundle files: a monodromy, an optional cached complex and a content hash.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fs;
use std::path::Path;
use thiserror::Error;
use veerlat::veering::{MonodromySpec, VeeringComplex};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum BundleError {
    #[error("content hash mismatch: file says {stored}, content hashes to {computed}")]
    HashMismatch { stored: String, computed: String },
    #[error("unsupported bundle format version {0}")]
    Version(u32),
    #[error("malformed bundle: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BundleFile {
    pub format_version: u32,
    pub monodromy: MonodromySpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex: Option<VeeringComplex>,
    pub content_hash: String,
}

#[derive(Serialize)]
struct Hashed<'a> {
    format_version: u32,
    monodromy: &'a MonodromySpec,
    complex: &'a Option<VeeringComplex>,
}

fn content_hash(version: u32, monodromy: &MonodromySpec, complex: &Option<VeeringComplex>) -> String {
    let bytes = serde_json::to_vec(&Hashed { format_version: version, monodromy, complex }).expect("bundle content serializes");
    hex::encode(Sha256::digest(bytes))
}

impl BundleFile {
    /// Builds and validates the complex; `cache` keeps it in the file.
    pub fn build(monodromy: MonodromySpec, cache: bool) -> veerlat::Result<(BundleFile, VeeringComplex)> {
        let c = VeeringComplex::build(&monodromy)?;
        let complex = cache.then(|| c.clone());
        let content_hash = content_hash(FORMAT_VERSION, &monodromy, &complex);
        Ok((BundleFile { format_version: FORMAT_VERSION, monodromy, complex, content_hash }, c))
    }

    pub fn verify_hash(&self) -> Result<(), BundleError> {
        if self.format_version != FORMAT_VERSION {
            return Err(BundleError::Version(self.format_version));
        }
        let computed = content_hash(self.format_version, &self.monodromy, &self.complex);
        if computed != self.content_hash {
            return Err(BundleError::HashMismatch { stored: self.content_hash.clone(), computed });
        }
        Ok(())
    }

    /// The cached complex, or a fresh build.
    pub fn complex(&self) -> veerlat::Result<VeeringComplex> {
        match &self.complex {
            Some(c) => Ok(c.clone()),
            None => VeeringComplex::build(&self.monodromy),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("bundle serializes")
    }

    pub fn from_json(s: &str) -> Result<BundleFile, BundleError> {
        let b: BundleFile = serde_json::from_str(s)?;
        b.verify_hash()?;
        Ok(b)
    }

    pub fn save(&self, path: &Path) -> Result<(), BundleError> {
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir)?;
        }
        fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<BundleFile, BundleError> {
        BundleFile::from_json(&fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let (b, c) = BundleFile::build(MonodromySpec::word("RRL"), true).unwrap();
        let back = BundleFile::from_json(&b.to_json()).unwrap();
        assert_eq!(back, b);
        assert_eq!(back.complex().unwrap(), c);
    }

    #[test]
    fn tampering_is_detected() {
        let (b, _) = BundleFile::build(MonodromySpec::word("RL"), false).unwrap();
        let s = b.to_json().replace("\"RL\"", "\"RRL\"");
        assert!(matches!(BundleFile::from_json(&s), Err(BundleError::HashMismatch { .. })));
    }
}
