//! On-disk KL tables.
//!
//! One flat file per rank: a fixed-width little-endian header followed by
//! one record per nonzero `P_{x,y}`, sorted by `(l(y), y, x)`:
//!
//! | bytes | field |
//! |-------|-------|
//! | 4  | magic `KLCK` |
//! | 4  | format version |
//! | 4  | rank `n` |
//! | 4  | element count `n!` |
//! | 32 | SHA-256 of the dense index ordering (one-line images, in order) |
//! | 8  | record count |
//! | 32 | SHA-256 of the record bytes |
//!
//! A record is `x: u32, y: u32, k: u16` then `k` coefficients `i64` of
//! `P_{x,y}` in increasing powers of `q`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::seq::index::sample;
use rand::SeedableRng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::coxeter::SymmetricGroup;
use crate::error::{Error, Result};
use crate::kl::KLTable;

pub const CACHE_VERSION: u32 = 1;
pub const HEADER_LEN: usize = 88;
const MAGIC: &[u8; 4] = b"KLCK";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CacheHeader {
    pub version: u32,
    pub rank: usize,
    pub count: usize,
    pub ordering_checksum: String,
    pub records: u64,
    pub payload_checksum: String,
}

/// `dir/kl-s{n}.bin`.
pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("kl-s{n}.bin"))
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// SHA-256 of the dense element ordering of `S_n`.
pub fn ordering_checksum(group: &SymmetricGroup) -> [u8; 32] {
    let mut h = Sha256::new();
    for w in group.elements() {
        h.update(w.raw());
    }
    h.finalize().into()
}

fn encode_records(table: &KLTable) -> (Vec<u8>, u64) {
    let mut out = Vec::new();
    let mut count = 0u64;
    for (x, y, coeffs) in table.records() {
        out.extend_from_slice(&(x as u32).to_le_bytes());
        out.extend_from_slice(&(y as u32).to_le_bytes());
        out.extend_from_slice(&(coeffs.len() as u16).to_le_bytes());
        for c in coeffs {
            out.extend_from_slice(&c.to_le_bytes());
        }
        count += 1;
    }
    (out, count)
}

/// Serializes `table` to bytes.
pub fn encode(table: &KLTable) -> (CacheHeader, Vec<u8>) {
    let group = table.group();
    let ordering = ordering_checksum(group);
    let (payload, records) = encode_records(table);
    let payload_sum: [u8; 32] = Sha256::digest(&payload).into();
    let mut bytes = Vec::with_capacity(HEADER_LEN + payload.len());
    bytes.extend_from_slice(MAGIC);
    bytes.extend_from_slice(&CACHE_VERSION.to_le_bytes());
    bytes.extend_from_slice(&(group.rank() as u32).to_le_bytes());
    bytes.extend_from_slice(&(group.order() as u32).to_le_bytes());
    bytes.extend_from_slice(&ordering);
    bytes.extend_from_slice(&records.to_le_bytes());
    bytes.extend_from_slice(&payload_sum);
    bytes.extend_from_slice(&payload);
    let header = CacheHeader {
        version: CACHE_VERSION,
        rank: group.rank(),
        count: group.order(),
        ordering_checksum: hex(&ordering),
        records,
        payload_checksum: hex(&payload_sum),
    };
    (header, bytes)
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, len: usize) -> Result<&'a [u8]> {
        let end = self.pos.checked_add(len).filter(|&e| e <= self.bytes.len());
        let end = end.ok_or_else(|| Error::CacheFormat(format!("record overruns payload at byte {}", self.pos)))?;
        let out = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(out)
    }

    fn u16(&mut self) -> Result<u16> {
        Ok(u16::from_le_bytes(self.take(2)?.try_into().expect("length 2")))
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().expect("length 4")))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().expect("length 8")))
    }
}

/// Parses and validates a cache file image for `S_n`.
pub fn decode(bytes: &[u8], n: usize) -> Result<(CacheHeader, KLTable)> {
    if bytes.len() < HEADER_LEN {
        return Err(Error::CacheChecksum(format!(
            "file truncated: {} bytes, header needs {HEADER_LEN}",
            bytes.len()
        )));
    }
    let mut r = Reader {
        bytes: &bytes[..HEADER_LEN],
        pos: 0,
    };
    if r.take(4)? != MAGIC {
        return Err(Error::CacheFormat("bad magic".into()));
    }
    let version = r.u32()?;
    if version != CACHE_VERSION {
        return Err(Error::CacheVersion {
            found: version,
            expected: CACHE_VERSION,
        });
    }
    let rank = r.u32()? as usize;
    if rank != n {
        return Err(Error::CacheFormat(format!("file holds rank {rank}, requested {n}")));
    }
    let count = r.u32()? as usize;
    let ordering: [u8; 32] = r.take(32)?.try_into().expect("length 32");
    let records = r.u64()?;
    let payload_sum: [u8; 32] = r.take(32)?.try_into().expect("length 32");

    let group = SymmetricGroup::new(n)?;
    if count != group.order() || ordering != ordering_checksum(&group) {
        return Err(Error::CacheChecksum("element ordering differs from this build".into()));
    }
    let payload = &bytes[HEADER_LEN..];
    let actual: [u8; 32] = Sha256::digest(payload).into();
    if actual != payload_sum {
        return Err(Error::CacheChecksum(format!(
            "payload checksum {} does not match header {}",
            hex(&actual),
            hex(&payload_sum)
        )));
    }
    let mut r = Reader { bytes: payload, pos: 0 };
    let mut parsed = Vec::with_capacity(records as usize);
    for _ in 0..records {
        let x = r.u32()? as usize;
        let y = r.u32()? as usize;
        let k = r.u16()? as usize;
        if x >= count || y >= count {
            return Err(Error::CacheFormat(format!("index out of range in record ({x}, {y})")));
        }
        let coeffs = (0..k).map(|_| r.u64().map(|c| c as i64)).collect::<Result<Vec<_>>>()?;
        parsed.push((x, y, coeffs));
    }
    if r.pos != payload.len() {
        return Err(Error::CacheFormat("trailing bytes after records".into()));
    }
    let header = CacheHeader {
        version,
        rank,
        count,
        ordering_checksum: hex(&ordering),
        records,
        payload_checksum: hex(&payload_sum),
    };
    Ok((header, KLTable::from_records(group, parsed)))
}

/// Writes `table` atomically: a temporary sibling file is renamed over the
/// target.
pub fn write_table(table: &KLTable, dir: &Path) -> Result<CacheHeader> {
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, table.rank());
    let (header, bytes) = encode(table);
    let tmp = dir.join(format!(".kl-s{}.{}.tmp", table.rank(), std::process::id()));
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(&bytes)?;
        f.sync_all()?;
        fs::rename(&tmp, &path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result?;
    Ok(header)
}

pub fn read_table(dir: &Path, n: usize) -> Result<(CacheHeader, KLTable)> {
    let bytes = fs::read(cache_path(dir, n))?;
    decode(&bytes, n)
}

/// Builds the table for `S_n` and writes it to `dir`.
pub fn cache_build(n: usize, dir: &Path) -> Result<(CacheHeader, KLTable)> {
    let table = KLTable::new(n)?;
    let header = write_table(&table, dir)?;
    Ok((header, table))
}

pub fn cache_load(n: usize, dir: &Path) -> Result<KLTable> {
    read_table(dir, n).map(|(_, t)| t)
}

/// Loads the cached table, building and writing it when the file is absent.
pub fn load_or_build(n: usize, dir: &Path) -> Result<Arc<KLTable>> {
    match read_table(dir, n) {
        Ok((_, t)) => Ok(Arc::new(t)),
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::NotFound => Ok(Arc::new(cache_build(n, dir)?.1)),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub rank: usize,
    pub pairs: usize,
    pub sampled: usize,
    pub mismatches: Vec<(String, String)>,
}

/// Recomputes the table from scratch and compares a seeded random sample
/// of `fraction` of all `(x, y)` pairs.
pub fn verify_sample(table: &KLTable, fraction: f64, seed: u64) -> VerifyReport {
    let fresh = KLTable::build(table.group().clone());
    let g = table.group();
    let order = g.order();
    let pairs = order * order;
    let amount = ((pairs as f64 * fraction).ceil() as usize).clamp(1, pairs);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut picks: Vec<usize> = sample(&mut rng, pairs, amount).into_vec();
    picks.sort_unstable();
    let mismatches = picks
        .into_iter()
        .map(|i| (i % order, i / order))
        .filter(|&(x, y)| table.coeffs(x, y) != fresh.coeffs(x, y))
        .map(|(x, y)| (g.element(x).word_string(), g.element(y).word_string()))
        .collect();
    VerifyReport {
        rank: g.rank(),
        pairs,
        sampled: amount,
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_s4() {
        let dir = tempfile::tempdir().unwrap();
        let (header, table) = cache_build(4, dir.path()).unwrap();
        assert_eq!(header.rank, 4);
        assert_eq!(header.count, 24);
        let back = cache_load(4, dir.path()).unwrap();
        assert_eq!(back, table);
        for y in 0..24 {
            assert_eq!(
                back.mu_below(y).collect::<Vec<_>>(),
                table.mu_below(y).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn records_sorted_by_length_then_index() {
        let table = KLTable::new(4).unwrap();
        let g = table.group().clone();
        let keys: Vec<_> = table.records().map(|(x, y, _)| (g.length(y), y, x)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn error_paths_are_distinct() {
        let table = KLTable::new(3).unwrap();
        let (_, bytes) = encode(&table);
        assert!(matches!(
            decode(&bytes[..bytes.len() - 3], 3),
            Err(Error::CacheChecksum(_))
        ));
        assert!(matches!(decode(&bytes[..10], 3), Err(Error::CacheChecksum(_))));
        let mut bad = bytes.clone();
        bad[4] = 9;
        assert!(matches!(
            decode(&bad, 3),
            Err(Error::CacheVersion {
                found: 9,
                expected: CACHE_VERSION
            })
        ));
        let mut bad = bytes.clone();
        bad[20] ^= 1;
        assert!(matches!(decode(&bad, 3), Err(Error::CacheChecksum(_))));
        let mut bad = bytes.clone();
        *bad.last_mut().unwrap() ^= 1;
        assert!(matches!(decode(&bad, 3), Err(Error::CacheChecksum(_))));
        assert!(matches!(decode(&bytes, 4), Err(Error::CacheFormat(_))));
        let dir = tempfile::tempdir().unwrap();
        assert!(matches!(cache_load(3, dir.path()), Err(Error::Io(_))));
    }

    #[test]
    fn verify_detects_nothing_on_fresh_table() {
        let table = KLTable::new(4).unwrap();
        let report = verify_sample(&table, 0.01, 7);
        assert_eq!(report.sampled, 6);
        assert!(report.mismatches.is_empty());
    }
}
