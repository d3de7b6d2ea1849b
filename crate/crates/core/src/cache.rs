//! Append-only, line-oriented store of computed central values.
//!
//! One tab-separated record per line:
//! `family a b re im err balance truncation engine_version`.
//! Floats are written in shortest round-trip form, so a value read back is
//! bit-identical to the value stored.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::family::Family;
use crate::field::QuadInt;
use crate::gauss::ComplexVal;

/// Bumped whenever truncation policy, balance default or kernels change.
pub const ENGINE_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CacheEntry {
    pub family: Family,
    pub a: i64,
    pub b: i64,
    pub value: ComplexVal,
    pub balance: f64,
    pub truncation: u64,
    pub engine_version: u32,
}

impl CacheEntry {
    pub fn to_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{:?}\t{:?}\t{:?}\t{:?}\t{}\t{}\n",
            self.family,
            self.a,
            self.b,
            self.value.re,
            self.value.im,
            self.value.err,
            self.balance,
            self.truncation,
            self.engine_version
        )
    }

    pub fn parse_line(line: &str) -> Result<Self> {
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() != 9 {
            return Err(Error::Parse(format!("expected 9 fields, found {}", f.len())));
        }
        let num = |s: &str| s.parse::<f64>().map_err(|e| Error::Parse(format!("{s:?}: {e}")));
        let int = |s: &str| s.parse::<i64>().map_err(|e| Error::Parse(format!("{s:?}: {e}")));
        Ok(CacheEntry {
            family: f[0].parse()?,
            a: int(f[1])?,
            b: int(f[2])?,
            value: ComplexVal::new(num(f[3])?, num(f[4])?, num(f[5])?),
            balance: num(f[6])?,
            truncation: f[7].parse().map_err(|e| Error::Parse(format!("{:?}: {e}", f[7])))?,
            engine_version: f[8].parse().map_err(|e| Error::Parse(format!("{:?}: {e}", f[8])))?,
        })
    }
}

/// In-memory view of a cache file, with lookup by (family, a, b).
#[derive(Debug, Default)]
pub struct LCache {
    path: Option<PathBuf>,
    map: HashMap<(Family, i64, i64), CacheEntry>,
    /// Lines that failed to parse, including an unterminated final line.
    pub corrupt_lines: usize,
    /// Well-formed lines written by a different engine version.
    pub stale_lines: usize,
    computations: AtomicU64,
}

impl LCache {
    /// A cache that is never persisted.
    pub fn in_memory() -> Self {
        LCache::default()
    }

    /// Load `path`; a missing file yields an empty cache bound to that path.
    pub fn load(path: &Path) -> Result<Self> {
        let mut cache = LCache { path: Some(path.to_path_buf()), ..Default::default() };
        let mut text = String::new();
        match File::open(path) {
            Ok(mut f) => {
                f.read_to_string(&mut text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(Error::Io(format!("{}: {e}", path.display()))),
        }
        let mut pieces: Vec<&str> = text.split('\n').collect();
        if let Some(last) = pieces.pop() {
            if !last.is_empty() {
                cache.corrupt_lines += 1;
            }
        }
        for line in pieces {
            if line.is_empty() {
                continue;
            }
            match CacheEntry::parse_line(line) {
                Ok(e) if e.engine_version == ENGINE_VERSION => {
                    cache.map.insert((e.family, e.a, e.b), e);
                }
                Ok(_) => cache.stale_lines += 1,
                Err(_) => cache.corrupt_lines += 1,
            }
        }
        Ok(cache)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, family: Family, pi: &QuadInt) -> Option<&CacheEntry> {
        self.map.get(&(family, pi.a, pi.b))
    }

    pub fn entries(&self) -> impl Iterator<Item = &CacheEntry> {
        self.map.values()
    }

    /// Number of values computed (rather than found) through this handle.
    pub fn computations(&self) -> u64 {
        self.computations.load(Ordering::Relaxed)
    }

    pub(crate) fn note_computed(&self, k: u64) {
        self.computations.fetch_add(k, Ordering::Relaxed);
    }

    /// Insert entries and append them to the backing file, if any.
    pub fn store(&mut self, entries: &[CacheEntry]) -> Result<()> {
        if let Some(path) = &self.path {
            if !entries.is_empty() {
                let io = |e: std::io::Error| Error::Io(format!("{}: {e}", path.display()));
                let mut f = OpenOptions::new().create(true).read(true).append(true).open(path).map_err(io)?;
                // keep records line-aligned after an interrupted write
                let len = f.metadata().map_err(io)?.len();
                if len > 0 {
                    let mut last = [0u8; 1];
                    f.seek(SeekFrom::Start(len - 1)).map_err(io)?;
                    f.read_exact(&mut last).map_err(io)?;
                    if last[0] != b'\n' {
                        f.write_all(b"\n").map_err(io)?;
                    }
                }
                let mut buf = String::new();
                for e in entries {
                    buf.push_str(&e.to_line());
                }
                f.write_all(buf.as_bytes()).map_err(io)?;
            }
        }
        for e in entries {
            self.map.insert((e.family, e.a, e.b), *e);
        }
        Ok(())
    }
}
