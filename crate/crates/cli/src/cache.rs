//! On-disk result cache: one JSON file per key hash.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CacheEntry {
    pub key: String,
    /// Seconds since the Unix epoch.
    pub created_at: u64,
    pub value: String,
}

pub struct Cache {
    dir: PathBuf,
}

/// The key covers the command, its canonical arguments and the crate version.
pub fn cache_key(command: &str, canonical_args: &serde_json::Value) -> String {
    format!("{command} {canonical_args} v{}", env!("CARGO_PKG_VERSION"))
}

impl Cache {
    pub fn new(dir: &Path) -> Cache {
        Cache { dir: dir.to_path_buf() }
    }

    fn path(&self, key: &str) -> PathBuf {
        let digest = Sha256::digest(key.as_bytes());
        self.dir.join(format!("{}.json", hex::encode(digest)))
    }

    /// A stored value for `key`, ignoring unreadable or mismatched files.
    pub fn get(&self, key: &str) -> Option<String> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        (entry.key == key).then_some(entry.value)
    }

    /// Writes through a temporary file in the same directory and renames it
    /// into place.
    pub fn put(&self, key: &str, value: &str) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let created_at = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let entry = CacheEntry {
            key: key.to_string(),
            created_at,
            value: value.to_string(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(serde_json::to_string(&entry)?.as_bytes())?;
        tmp.flush()?;
        tmp.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let key = cache_key("zonal", &serde_json::json!({"lambda": [2, 1]}));
        assert_eq!(cache.get(&key), None);
        cache.put(&key, "p[1]").unwrap();
        assert_eq!(cache.get(&key).as_deref(), Some("p[1]"));
        assert_eq!(cache.get("other"), None);
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    }

    #[test]
    fn corrupt_file_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        fs::write(cache.path("k"), "not json").unwrap();
        assert_eq!(cache.get("k"), None);
    }
}
