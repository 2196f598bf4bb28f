//! Append-only JSON-lines store of computed `C'_x`.

use std::collections::HashMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use parking_lot::Mutex;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::coxeter::{CoxeterMatrix, Element};
use crate::hecke::Hecke;

pub const CACHE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub v: u32,
    pub key: String,
    pub x: String,
    pub cprime: Vec<(String, String)>,
}

pub struct KlCache {
    path: PathBuf,
    records: HashMap<String, CacheRecord>,
    writer: Mutex<()>,
}

/// `$SOERGEL_CACHE`, else `$XDG_DATA_HOME/soergel/kl-cache.jsonl`, else
/// `~/.local/share/soergel/kl-cache.jsonl`.
pub fn default_path() -> Option<PathBuf> {
    if let Some(p) = std::env::var_os("SOERGEL_CACHE").filter(|p| !p.is_empty()) {
        return Some(PathBuf::from(p));
    }
    let data = std::env::var_os("XDG_DATA_HOME")
        .filter(|p| !p.is_empty())
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".local/share")))?;
    Some(data.join("soergel").join("kl-cache.jsonl"))
}

pub fn cache_key(matrix: &CoxeterMatrix, word: &str) -> String {
    let mut h = Sha256::new();
    h.update(matrix.to_canonical_json().as_bytes());
    h.update(b"\n");
    h.update(word.as_bytes());
    hex::encode(h.finalize())
}

impl KlCache {
    /// Loads every readable record; malformed, truncated or foreign-version
    /// lines are skipped.
    pub fn open(path: impl Into<PathBuf>) -> Self {
        let path = path.into();
        let mut records = HashMap::new();
        if let Ok(text) = fs::read_to_string(&path) {
            for line in text.lines() {
                if let Ok(rec) = serde_json::from_str::<CacheRecord>(line) {
                    if rec.v == CACHE_VERSION {
                        records.insert(rec.key.clone(), rec);
                    }
                }
            }
        }
        Self { path, records, writer: Mutex::new(()) }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, key: &str) -> Option<&CacheRecord> {
        self.records.get(key)
    }

    /// Installs a cached `C'_x` into `hecke`; returns whether it was found.
    pub fn load_into(&self, hecke: &Hecke, x: Element) -> bool {
        let sys = hecke.system();
        let word = sys.word_string(x);
        let Some(rec) = self.get(&cache_key(sys.matrix(), &word)) else {
            return false;
        };
        if rec.x != word {
            return false;
        }
        match hecke.from_word_pairs(&rec.cprime) {
            Ok(h) => {
                hecke.insert_kl(x, h);
                true
            }
            Err(_) => false,
        }
    }

    /// Computes `C'_x` if needed and appends it as one line.
    pub fn store(&mut self, hecke: &Hecke, x: Element) -> std::io::Result<()> {
        let sys = hecke.system();
        let word = sys.word_string(x);
        let key = cache_key(sys.matrix(), &word);
        if self.records.contains_key(&key) {
            return Ok(());
        }
        let rec = CacheRecord { v: CACHE_VERSION, key: key.clone(), x: word, cprime: hecke.to_word_pairs(&hecke.kl_basis(x)) };
        let mut line = serde_json::to_string(&rec).expect("record serializes");
        line.push('\n');
        {
            let _guard = self.writer.lock();
            if let Some(dir) = self.path.parent() {
                fs::create_dir_all(dir)?;
            }
            let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
            f.write_all(line.as_bytes())?;
        }
        self.records.insert(key, rec);
        Ok(())
    }
}
