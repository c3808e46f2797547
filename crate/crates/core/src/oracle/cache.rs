//! Optional on-disk memo of oracle results, enabled by `LSB_CACHE_DIR`.
//!
//! Records are appended as JSON lines to `oracle.jsonl`; a key is the
//! SHA-256 of the canonical JSON of the job description.

use std::collections::HashMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::PathBuf;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::verma::ShapovalovReport;
use crate::characters::FormalCharacter;
use crate::rootdata::{Algebra, Base, Weight};

pub struct Key(String);

impl Key {
    fn new(v: Value) -> Key {
        Key(hex::encode(Sha256::digest(v.to_string())))
    }

    pub fn rank(alg: &Algebra, base: &Base, lam: &Weight, mu: &Weight) -> Key {
        Key::new(json!({
            "kind": "rank",
            "algebra": alg.spec().to_string(),
            "convention": alg.convention().to_string(),
            "base": alg.fmt_base(base),
            "lam": lam,
            "mu": mu,
        }))
    }

    pub fn character(alg: &Algebra, base: &Base, lam: &Weight, depth: usize) -> Key {
        Key::new(json!({
            "kind": "character",
            "algebra": alg.spec().to_string(),
            "convention": alg.convention().to_string(),
            "base": alg.fmt_base(base),
            "lam": lam,
            "depth": depth,
        }))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum Record {
    Rank {
        key: String,
        report: ShapovalovReport,
    },
    Character {
        key: String,
        character: FormalCharacter,
    },
}

fn path() -> Option<PathBuf> {
    let dir = std::env::var_os("LSB_CACHE_DIR")?;
    if dir.is_empty() {
        return None;
    }
    Some(PathBuf::from(dir).join("oracle.jsonl"))
}

static LOADED: Mutex<Option<(PathBuf, HashMap<String, Record>)>> = Mutex::new(None);

fn with_records<T>(f: impl FnOnce(&mut HashMap<String, Record>) -> T) -> Option<T> {
    let p = path()?;
    let mut guard = LOADED.lock().ok()?;
    if guard.as_ref().is_none_or(|(q, _)| *q != p) {
        let mut map = HashMap::new();
        if let Ok(text) = fs::read_to_string(&p) {
            for line in text.lines() {
                // skip lines from interrupted writes
                if let Ok(r) = serde_json::from_str::<Record>(line) {
                    let k = match &r {
                        Record::Rank { key, .. } | Record::Character { key, .. } => key.clone(),
                    };
                    map.insert(k, r);
                }
            }
        }
        *guard = Some((p, map));
    }
    guard.as_mut().map(|(_, m)| f(m))
}

fn append(r: &Record) {
    let Some(p) = path() else { return };
    if let Some(dir) = p.parent() {
        let _ = fs::create_dir_all(dir);
    }
    if let (Ok(mut file), Ok(line)) = (
        OpenOptions::new().create(true).append(true).open(&p),
        serde_json::to_string(r),
    ) {
        let _ = writeln!(file, "{line}");
    }
}

pub fn get_rank(key: &Key) -> Option<ShapovalovReport> {
    with_records(|m| match m.get(&key.0) {
        Some(Record::Rank { report, .. }) => Some(report.clone()),
        _ => None,
    })
    .flatten()
}

pub fn get_character(key: &Key) -> Option<FormalCharacter> {
    with_records(|m| match m.get(&key.0) {
        Some(Record::Character { character, .. }) => Some(character.clone()),
        _ => None,
    })
    .flatten()
}

pub fn put_rank(key: &Key, report: &ShapovalovReport) {
    let r = Record::Rank {
        key: key.0.clone(),
        report: report.clone(),
    };
    append(&r);
    with_records(|m| m.insert(key.0.clone(), r));
}

pub fn put_character(key: &Key, character: &FormalCharacter) {
    let r = Record::Character {
        key: key.0.clone(),
        character: character.clone(),
    };
    append(&r);
    with_records(|m| m.insert(key.0.clone(), r));
}
