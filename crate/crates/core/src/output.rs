//! Serialized tables: JSON documents, CSV and plain text rendering, and the
//! on-disk cache.
//!
//! Every coefficient is written as a decimal string; values pass 64 bits
//! around `k = 15`.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::{parse_decimal, ExactInteger};
use crate::engine::CoeffTableND;
use crate::error::{Error, Result};
use crate::stirling::stirling2;

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "FACTOPROD_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub method: String,
    /// True when every method was run and found to agree.
    pub cross_checked: bool,
    /// Seconds since the Unix epoch.
    pub generated_at: u64,
}

impl Provenance {
    pub fn now(method: &str, cross_checked: bool) -> Self {
        let generated_at = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Provenance {
            method: method.to_string(),
            cross_checked,
            generated_at,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputDocument {
    pub schema_version: u32,
    pub method: String,
    pub table: CoeffTableND,
    pub provenance: Option<Provenance>,
}

#[derive(Serialize, Deserialize)]
struct RawDocument {
    schema_version: u32,
    k: usize,
    n: usize,
    method: String,
    entries: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<Provenance>,
}

impl OutputDocument {
    pub fn new(method: &str, table: CoeffTableND, provenance: Option<Provenance>) -> Self {
        OutputDocument {
            schema_version: SCHEMA_VERSION,
            method: method.to_string(),
            table,
            provenance,
        }
    }

    pub fn to_json(&self) -> String {
        let raw = RawDocument {
            schema_version: self.schema_version,
            k: self.table.k(),
            n: self.table.n(),
            method: self.method.clone(),
            entries: self.table.to_nested_json(|v| Value::String(v.to_string())),
            provenance: self.provenance.clone(),
        };
        let mut s = serde_json::to_string_pretty(&raw).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawDocument = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        if raw.k == 0 || raw.n == 0 {
            return Err(Error::Document("k and n must be positive".into()));
        }
        let mut flat = Vec::with_capacity(raw.k.pow(raw.n as u32));
        flatten(&raw.entries, raw.k, raw.n, &mut flat)?;
        let table = CoeffTableND::from_entries(raw.k, raw.n, flat);
        Ok(OutputDocument {
            schema_version: raw.schema_version,
            method: raw.method,
            table,
            provenance: raw.provenance,
        })
    }
}

fn flatten(v: &Value, k: usize, depth: usize, out: &mut Vec<ExactInteger>) -> Result<()> {
    if depth == 0 {
        let s = v
            .as_str()
            .ok_or_else(|| Error::Document(format!("expected a decimal string, found {v}")))?;
        let n = parse_decimal(s).ok_or_else(|| Error::Document(format!("bad integer {s:?}")))?;
        out.push(n);
        return Ok(());
    }
    let arr = v
        .as_array()
        .filter(|a| a.len() == k)
        .ok_or_else(|| Error::Document(format!("expected an array of length {k}")))?;
    for item in arr {
        flatten(item, k, depth - 1, out)?;
    }
    Ok(())
}

/// CSV: for two variables, row `l` on line `l` with columns `m = 1..k`;
/// otherwise one `l_1,...,l_n,value` line per entry.
pub fn to_csv(table: &CoeffTableND, header: bool) -> String {
    let mut out = String::new();
    if let Some(t) = table.to_2d() {
        if header {
            let cols: Vec<String> = (1..=t.k()).map(|m| format!("m={m}")).collect();
            writeln!(out, "{}", cols.join(",")).unwrap();
        }
        for row in t.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(out, "{}", cells.join(",")).unwrap();
        }
    } else {
        if header {
            let cols: Vec<String> = (1..=table.n()).map(|i| format!("l{i}")).collect();
            writeln!(out, "{},c", cols.join(",")).unwrap();
        }
        for (idx, v) in table.iter() {
            let cols: Vec<String> = idx.components().iter().map(ToString::to_string).collect();
            writeln!(out, "{},{v}", cols.join(",")).unwrap();
        }
    }
    out
}

/// Right-aligned columns for two variables; `(l_1, ..., l_n) value` lines
/// otherwise.
pub fn to_text(table: &CoeffTableND) -> String {
    let mut out = String::new();
    if let Some(t) = table.to_2d() {
        let strings: Vec<Vec<String>> = t.rows().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        let width = strings.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in strings {
            let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(out, "{}", cells.join(" ")).unwrap();
        }
    } else {
        for (idx, v) in table.iter() {
            writeln!(out, "{:?} {v}", idx.components()).unwrap();
        }
    }
    out
}

/// Directory of cached tables, one `c_k{k}_n{n}.json` per table.
#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, k: usize, n: usize) -> PathBuf {
        self.dir.join(format!("c_k{k}_n{n}.json"))
    }

    /// Cached table, or `None` when absent or failing validation.
    pub fn load(&self, k: usize, n: usize) -> Option<CoeffTableND> {
        let text = fs::read_to_string(self.path_for(k, n)).ok()?;
        let doc = OutputDocument::from_json(&text).ok()?;
        let t = doc.table;
        (t.k() == k && t.n() == n && last_row_is_stirling(&t)).then_some(t)
    }

    /// Write-then-rename so readers never see a partial file.
    pub fn store(&self, table: &CoeffTableND) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let doc = OutputDocument::new("cache", table.clone(), None);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(doc.to_json().as_bytes())?;
        tmp.persist(self.path_for(table.k(), table.n()))
            .map_err(|e| Error::Io(e.to_string()))?;
        Ok(())
    }
}

/// `c(k; k, ..., k, m) = S2(k, m)` for every `m`.
pub fn last_row_is_stirling(table: &CoeffTableND) -> bool {
    let (k, n) = (table.k(), table.n());
    (1..=k).all(|m| {
        let mut idx = vec![k; n];
        idx[n - 1] = m;
        let expect = if n == 1 {
            // x^(k) = x^(k): only the l = k term survives
            ExactInteger::from((m == k) as u8)
        } else {
            stirling2(k, m as i64)
        };
        table.get(&idx) == &expect
    })
}
