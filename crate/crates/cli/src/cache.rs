//! On-disk subspace cache: one file per key, named by the SHA-256 of the
//! key text, holding the payload and its checksum.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use bmw_core::schur_weyl::{CacheKey, SubspaceCache};
use sha2::{Digest, Sha256};

const MAGIC: &str = "bmw-cache 1";

pub struct FileCache {
    dir: PathBuf,
    warnings: Mutex<Vec<String>>,
}

fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl FileCache {
    pub fn open(dir: &Path) -> std::io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Self { dir: dir.to_path_buf(), warnings: Mutex::new(Vec::new()) })
    }

    pub fn path_for(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(format!("{}.subspace", sha256_hex(&key.to_string())))
    }

    /// Warnings raised so far (corrupt entries, failed writes).
    pub fn warnings(&self) -> Vec<String> {
        self.warnings.lock().expect("warning list poisoned").clone()
    }

    fn warn(&self, msg: String) {
        eprintln!("warning: {msg}");
        self.warnings.lock().expect("warning list poisoned").push(msg);
    }

    fn parse_entry<'t>(key: &CacheKey, text: &'t str) -> Result<&'t str, &'static str> {
        let mut lines = text.splitn(4, '\n');
        if lines.next() != Some(MAGIC) {
            return Err("bad header");
        }
        let stored_key = lines.next().and_then(|l| l.strip_prefix("key ")).ok_or("missing key")?;
        if stored_key != key.to_string() {
            return Err("key mismatch");
        }
        let sum = lines.next().and_then(|l| l.strip_prefix("sha256 ")).ok_or("missing checksum")?;
        let payload = lines.next().ok_or("missing payload")?;
        if sha256_hex(payload) != sum {
            return Err("checksum mismatch");
        }
        Ok(payload)
    }

    fn write_entry(&self, path: &Path, key: &CacheKey, payload: &str) -> std::io::Result<()> {
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        write!(tmp, "{MAGIC}\nkey {key}\nsha256 {}\n{payload}", sha256_hex(payload))?;
        tmp.persist(path).map_err(|e| e.error)?;
        Ok(())
    }
}

impl SubspaceCache for FileCache {
    fn load(&self, key: &CacheKey) -> Option<String> {
        let path = self.path_for(key);
        let text = fs::read_to_string(&path).ok()?;
        match Self::parse_entry(key, &text) {
            Ok(payload) => Some(payload.to_string()),
            Err(why) => {
                self.warn(format!("cache entry {} for {key} is unusable ({why}); recomputing", path.display()));
                None
            }
        }
    }

    fn store(&self, key: &CacheKey, payload: &str) {
        let path = self.path_for(key);
        if let Err(e) = self.write_entry(&path, key, payload) {
            self.warn(format!("could not write cache entry {}: {e}", path.display()));
        }
    }

    fn rejected(&self, key: &CacheKey, reason: &str) {
        self.warn(format!("cache entry for {key} does not decode ({reason}); recomputing"));
    }
}
