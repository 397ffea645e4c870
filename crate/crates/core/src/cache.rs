//! Content-addressed store for computed results.
//!
//! Each entry is one JSON file named by the SHA-256 of the engine version,
//! the run flags and the canonical input text. Writes go through a temporary
//! file and an atomic rename, so concurrent readers never see partial data.

use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::Result;

pub const ENGINE_VERSION: &str = concat!("mgcm-", env!("CARGO_PKG_VERSION"), "/cache-1");

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "MGCM_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub engine: String,
    pub flags: String,
    pub inputs: String,
    pub result: Value,
    /// Seconds since the Unix epoch.
    pub created: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lookup {
    Hit,
    Miss,
    /// The key matched but the stored inputs did not; recomputed.
    Collision,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

pub fn cache_key(flags: &str, inputs: &str) -> String {
    let mut h = Sha256::new();
    for part in [ENGINE_VERSION, flags, inputs] {
        h.update((part.len() as u64).to_le_bytes());
        h.update(part.as_bytes());
    }
    hex::encode(h.finalize())
}

static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        std::fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    /// The explicit directory if given, else the environment variable; no
    /// cache when neither is set.
    pub fn resolve(explicit: Option<&Path>) -> Result<Option<Self>> {
        match explicit.map(Path::to_path_buf).or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from)) {
            Some(d) => Ok(Some(Cache::new(d)?)),
            None => Ok(None),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn load(&self, key: &str) -> Option<CacheEntry> {
        let text = std::fs::read_to_string(self.path(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn store(&self, entry: &CacheEntry) -> Result<()> {
        let n = TMP_COUNTER.fetch_add(1, Ordering::Relaxed);
        let tmp = self.dir.join(format!(".{}.{}.{n}.tmp", entry.key, std::process::id()));
        let text = serde_json::to_string(entry).map_err(|e| crate::Error::Io(e.to_string()))?;
        std::fs::write(&tmp, text)?;
        std::fs::rename(&tmp, self.path(&entry.key))?;
        Ok(())
    }

    /// Returns the stored result for `(flags, inputs)` or computes and stores
    /// it. A stored entry whose inputs differ is treated as a miss; the fresh
    /// result replaces it.
    pub fn get_or_compute(&self, flags: &str, inputs: &str, compute: impl FnOnce() -> Value) -> Result<(Value, Lookup)> {
        let key = cache_key(flags, inputs);
        let mut lookup = Lookup::Miss;
        if let Some(e) = self.load(&key) {
            if e.engine == ENGINE_VERSION && e.flags == flags && e.inputs == inputs {
                return Ok((e.result, Lookup::Hit));
            }
            lookup = Lookup::Collision;
        }
        let result = compute();
        let created = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
        self.store(&CacheEntry {
            key,
            engine: ENGINE_VERSION.into(),
            flags: flags.into(),
            inputs: inputs.into(),
            result: result.clone(),
            created,
        })?;
        Ok((result, lookup))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn miss_then_hit() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::new(dir.path()).unwrap();
        let (v, l) = c.get_or_compute("f", "x", || json!({"a": 1})).unwrap();
        assert_eq!((v.clone(), l), (json!({"a": 1}), Lookup::Miss));
        let (w, l) = c.get_or_compute("f", "x", || panic!("recomputed")).unwrap();
        assert_eq!((w, l), (v, Lookup::Hit));
        assert_ne!(cache_key("f", "x"), cache_key("g", "x"));
        assert_ne!(cache_key("fx", ""), cache_key("f", "x"));
    }

    #[test]
    fn collision_recomputes() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::new(dir.path()).unwrap();
        let key = cache_key("f", "x");
        let forged = CacheEntry {
            key: key.clone(),
            engine: ENGINE_VERSION.into(),
            flags: "f".into(),
            inputs: "other".into(),
            result: json!(0),
            created: 0,
        };
        c.store(&forged).unwrap();
        let (v, l) = c.get_or_compute("f", "x", || json!(7)).unwrap();
        assert_eq!((v, l), (json!(7), Lookup::Collision));
        assert_eq!(c.load(&key).unwrap().inputs, "x");
    }
}
