use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use indexword::IndexWord;
use rug::Float;
use serde::{Deserialize, Serialize};

use crate::mzv::MzvValue;
use crate::{Error, Result};

/// One line of the cache file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub index: Vec<u32>,
    pub star: bool,
    pub value: String,
    pub err: String,
    pub prec_bits: u32,
}

impl Record {
    fn from_value(v: &MzvValue, prec_bits: u32) -> Self {
        Record {
            index: v.index.parts().to_vec(),
            star: v.regularized && !v.index.is_admissible(),
            value: v.value.to_string_radix(10, None),
            err: format!("{:e}", v.err),
            prec_bits,
        }
    }

    fn to_value(&self) -> Option<MzvValue> {
        let index = IndexWord::new(self.index.clone()).ok()?;
        let parsed = Float::parse(&self.value).ok()?;
        let value = Float::with_val(self.value_prec(), parsed);
        Some(MzvValue {
            regularized: self.star || index.is_admissible(),
            index,
            value,
            err: self.err.parse().ok()?,
        })
    }

    fn value_prec(&self) -> u32 {
        self.prec_bits + 32
    }
}

/// Append-only JSON Lines store of computed values. Readers share the
/// in-memory map; writes go through one lock.
pub struct MzvCache {
    path: Option<PathBuf>,
    entries: Mutex<HashMap<(Vec<u32>, bool), Record>>,
    file: Mutex<Option<File>>,
    /// Lines skipped while loading.
    pub corrupt_lines: usize,
}

impl MzvCache {
    pub fn in_memory() -> Self {
        MzvCache {
            path: None,
            entries: Mutex::new(HashMap::new()),
            file: Mutex::new(None),
            corrupt_lines: 0,
        }
    }

    /// Loads `path`; a missing file gives an empty cache and unreadable
    /// lines are skipped, so their values get recomputed.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut entries = HashMap::new();
        let mut corrupt = 0;
        if path.exists() {
            let f = File::open(&path).map_err(|e| Error::Io(e.to_string()))?;
            for line in BufReader::new(f).lines() {
                let line = line.map_err(|e| Error::Io(e.to_string()))?;
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<Record>(&line) {
                    Ok(r) if r.to_value().is_some() => {
                        let key = (r.index.clone(), r.star);
                        let better = entries
                            .get(&key)
                            .map_or(true, |old: &Record| old.prec_bits < r.prec_bits);
                        if better {
                            entries.insert(key, r);
                        }
                    }
                    _ => corrupt += 1,
                }
            }
        }
        Ok(MzvCache {
            path: Some(path),
            entries: Mutex::new(entries),
            file: Mutex::new(None),
            corrupt_lines: corrupt,
        })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.entries.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// A stored value good to `target_err` at `prec_bits`, if any.
    pub fn get(&self, index: &[u32], star: bool, target_err: f64, prec_bits: u32) -> Option<MzvValue> {
        let entries = self.entries.lock().expect("cache lock");
        let r = entries.get(&(index.to_vec(), star))?;
        let v = r.to_value()?;
        (r.prec_bits >= prec_bits && v.err <= target_err).then_some(v)
    }

    pub fn put(&self, v: &MzvValue, prec_bits: u32) -> Result<()> {
        let r = Record::from_value(v, prec_bits);
        if let Some(path) = &self.path {
            let mut file = self.file.lock().expect("file lock");
            if file.is_none() {
                *file = Some(
                    OpenOptions::new()
                        .create(true)
                        .append(true)
                        .open(path)
                        .map_err(|e| Error::Io(e.to_string()))?,
                );
            }
            let line = serde_json::to_string(&r).map_err(|e| Error::Io(e.to_string()))?;
            let f = file.as_mut().expect("opened above");
            writeln!(f, "{line}").map_err(|e| Error::Io(e.to_string()))?;
            f.flush().map_err(|e| Error::Io(e.to_string()))?;
        }
        self.entries
            .lock()
            .expect("cache lock")
            .insert((r.index.clone(), r.star), r);
        Ok(())
    }
}
