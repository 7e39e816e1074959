//! Optional on-disk memo store: one small text file per entry, named by the
//! SHA-256 of a namespaced key.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "CHORDWEAVE_CACHE";

#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
    namespace: String,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>, namespace: &str) -> Self {
        DiskCache { dir: dir.into(), namespace: namespace.to_string() }
    }

    /// A cache under `$CHORDWEAVE_CACHE`, if the variable is set and non-empty.
    pub fn from_env(namespace: &str) -> Option<Self> {
        std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(|dir| Self::new(dir, namespace))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, key: &str) -> PathBuf {
        let digest = Sha256::digest(format!("{}\n{}", self.namespace, key).as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.dir.join(&hex[..2]).join(&hex[2..])
    }

    /// Stored value for `key`. Entries carry their key so a digest collision
    /// reads as a miss.
    pub fn get(&self, key: &str) -> Option<String> {
        let text = fs::read_to_string(self.path_for(key)).ok()?;
        let (stored_key, value) = text.split_once('\n')?;
        (stored_key == key).then(|| value.to_string())
    }

    /// Best-effort write; a failure only costs a future recomputation.
    pub fn put(&self, key: &str, value: &str) {
        let path = self.path_for(key);
        let Some(parent) = path.parent() else { return };
        if fs::create_dir_all(parent).is_err() {
            return;
        }
        // write-then-rename keeps concurrent readers from seeing partial files
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        if fs::write(&tmp, format!("{key}\n{value}")).is_ok() && fs::rename(&tmp, &path).is_err() {
            let _ = fs::remove_file(&tmp);
        }
    }
}
