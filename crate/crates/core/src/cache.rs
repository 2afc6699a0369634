//! Persistent cache of exact values: UTF-8 text, one `key<TAB>num/den`
//! entry per line, sorted by key on write.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::rational::{parse_num_den, to_num_den};
use crate::{Error, Rational, Result};

pub type CacheEntries = BTreeMap<String, Rational>;

pub fn parse(text: &str) -> Result<CacheEntries> {
    let mut entries = CacheEntries::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let err = |reason: String| Error::CacheParse {
            line: line_no,
            reason,
        };
        let (key, value) = line
            .split_once('\t')
            .ok_or_else(|| err("expected key<TAB>num/den".into()))?;
        if key.is_empty() {
            return Err(err("empty key".into()));
        }
        let value = parse_num_den(value).map_err(err)?;
        if entries.insert(key.to_string(), value).is_some() {
            return Err(err(format!("duplicate key {key:?}")));
        }
    }
    Ok(entries)
}

pub fn render(entries: &CacheEntries) -> String {
    let mut out = String::new();
    for (key, value) in entries {
        out.push_str(key);
        out.push('\t');
        out.push_str(&to_num_den(value));
        out.push('\n');
    }
    out
}

/// Loads a cache file; a missing file is an empty cache.
pub fn load(path: &Path) -> Result<CacheEntries> {
    match fs::read_to_string(path) {
        Ok(text) => parse(&text),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(CacheEntries::new()),
        Err(e) => Err(e.into()),
    }
}

pub fn store(path: &Path, entries: &CacheEntries) -> Result<()> {
    fs::write(path, render(entries))?;
    Ok(())
}
