//! On-disk catalog: one directory `n{N}_f{F}` per level holding
//!
//! - `members.bin`: canonical codes of the whole level (the checkpoint used
//!   as parent for the next level; codes keep multigraph embeddings exact),
//! - `graphs.pc`: the hypohamiltonian members as planar_code,
//! - `witnesses.txt`: their vertex-deleted cycles,
//! - `manifest.json`: counts and sequence statistics, written last.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{Filtered, Level, LevelKey, PipelineError, Rejections};
use crate::io::{read_planar_code, write_planar_code, write_witnesses};
use crate::plane::{CanonicalCode, PlaneGraph};
use crate::sequence::SizeCounts;

const CODES_MAGIC: &[u8; 8] = b"HHCODES1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub n: usize,
    pub f: usize,
    /// Size of the whole level.
    pub members: usize,
    pub hypohamiltonian: usize,
    /// False when some search ran out of budget.
    pub exhaustive: bool,
    pub rejected: Rejections,
    pub seconds: f64,
    /// Face sequence -> count, over the hypohamiltonian members.
    pub face_sequences: BTreeMap<String, usize>,
    pub degree_sequences: BTreeMap<String, usize>,
    pub grinbergian: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct StatsRow {
    pub degree_sequence: SizeCounts,
    pub face_sequence: SizeCounts,
    pub count: usize,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    root: PathBuf,
}

fn encode_codes<'a>(codes: impl Iterator<Item = &'a CanonicalCode>) -> Vec<u8> {
    let mut out = CODES_MAGIC.to_vec();
    for c in codes {
        out.extend((c.as_slice().len() as u32).to_le_bytes());
        out.extend(c.to_bytes());
    }
    out
}

fn decode_codes(bytes: &[u8]) -> Option<Vec<CanonicalCode>> {
    let mut rest = bytes.strip_prefix(CODES_MAGIC)?;
    let mut out = Vec::new();
    while !rest.is_empty() {
        let len = u32::from_le_bytes(rest.get(..4)?.try_into().ok()?) as usize;
        let body = rest.get(4..4 + 2 * len)?;
        out.push(CanonicalCode::from_bytes(body)?);
        rest = &rest[4 + 2 * len..];
    }
    Some(out)
}

/// Writes via a temporary file so a crash never leaves a torn file behind.
fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, bytes)?;
    fs::rename(tmp, path)
}

impl Catalog {
    pub fn open(root: impl Into<PathBuf>) -> Result<Catalog, PipelineError> {
        let root = root.into();
        fs::create_dir_all(&root)?;
        Ok(Catalog { root })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn level_dir(&self, key: LevelKey) -> PathBuf {
        self.root.join(key.dir_name())
    }

    /// Levels with a manifest, in key order.
    pub fn levels(&self) -> Result<Vec<LevelKey>, PipelineError> {
        let mut out = Vec::new();
        for entry in fs::read_dir(&self.root)? {
            let entry = entry?;
            if let Some(key) = entry.file_name().to_str().and_then(LevelKey::parse_dir_name) {
                if entry.path().join("manifest.json").exists() {
                    out.push(key);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn manifest(&self, key: LevelKey) -> Result<Option<Manifest>, PipelineError> {
        let path = self.level_dir(key).join("manifest.json");
        if !path.exists() {
            return Ok(None);
        }
        let text = fs::read_to_string(path)?;
        serde_json::from_str(&text)
            .map(Some)
            .map_err(|e| PipelineError::Catalog(format!("{}: {e}", key.dir_name())))
    }

    pub fn write_level(&self, level: &Level, filtered: &Filtered, seconds: f64) -> Result<Manifest, PipelineError> {
        let dir = self.level_dir(level.key);
        fs::create_dir_all(&dir)?;
        // drop a stale manifest first so a crash mid-write reads as missing
        let _ = fs::remove_file(dir.join("manifest.json"));
        write_atomic(&dir.join("members.bin"), &encode_codes(level.codes.iter()))?;
        let graphs: Vec<PlaneGraph> = filtered.members.iter().map(|m| m.graph.clone()).collect();
        write_atomic(&dir.join("graphs.pc"), &write_planar_code(&graphs, true)?)?;
        let mut witnesses = String::new();
        for (i, m) in filtered.members.iter().enumerate() {
            let _ = writeln!(witnesses, "# graph {i}");
            witnesses.push_str(&write_witnesses(&m.report));
        }
        write_atomic(&dir.join("witnesses.txt"), witnesses.as_bytes())?;

        let mut manifest = Manifest {
            n: level.key.n,
            f: level.key.f,
            members: level.len(),
            hypohamiltonian: filtered.members.len(),
            exhaustive: filtered.exhaustive(),
            rejected: filtered.rejected,
            seconds,
            face_sequences: BTreeMap::new(),
            degree_sequences: BTreeMap::new(),
            grinbergian: BTreeMap::new(),
        };
        for m in &filtered.members {
            *manifest.face_sequences.entry(m.graph.face_sequence().to_string()).or_insert(0) += 1;
            *manifest.degree_sequences.entry(m.graph.degree_sequence().to_string()).or_insert(0) += 1;
            *manifest.grinbergian.entry(format!("{:?}", m.grinberg)).or_insert(0) += 1;
        }
        let json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
        write_atomic(&dir.join("manifest.json"), json.as_bytes())?;
        Ok(manifest)
    }

    /// The full level, rebuilt from its canonical codes.
    pub fn load_members(&self, key: LevelKey) -> Result<Level, PipelineError> {
        let bytes = fs::read(self.level_dir(key).join("members.bin")).map_err(|e| match e.kind() {
            std::io::ErrorKind::NotFound => PipelineError::UnknownLevel(key),
            _ => e.into(),
        })?;
        let bad = || PipelineError::Catalog(format!("{}: corrupt members.bin", key.dir_name()));
        let codes = decode_codes(&bytes).ok_or_else(bad)?;
        if codes.iter().any(|c| PlaneGraph::from_canonical_code(c).is_err()) {
            return Err(bad());
        }
        Ok(Level { key, codes })
    }

    /// The hypohamiltonian members of a level.
    pub fn load_hypo(&self, key: LevelKey) -> Result<Vec<PlaneGraph>, PipelineError> {
        if self.manifest(key)?.is_none() {
            return Err(PipelineError::UnknownLevel(key));
        }
        Ok(read_planar_code(&fs::read(self.level_dir(key).join("graphs.pc"))?)?)
    }

    /// Counts of hypohamiltonian members grouped by face and degree
    /// sequence, sorted by degree sequence.
    pub fn stats(&self, key: LevelKey) -> Result<Vec<StatsRow>, PipelineError> {
        Ok(stats_rows(&self.load_hypo(key)?))
    }
}

pub(crate) fn stats_rows(graphs: &[PlaneGraph]) -> Vec<StatsRow> {
    let mut groups: BTreeMap<(SizeCounts, SizeCounts), usize> = BTreeMap::new();
    for g in graphs {
        *groups.entry((g.degree_sequence(), g.face_sequence())).or_insert(0) += 1;
    }
    groups
        .into_iter()
        .map(|((degree_sequence, face_sequence), count)| StatsRow {
            degree_sequence,
            face_sequence,
            count,
        })
        .collect()
}

/// Aligned text table with a total line.
pub fn format_stats_table(rows: &[StatsRow]) -> String {
    let header = ["Face Sequence", "Degree Sequence", "Count"];
    let cells: Vec<[String; 3]> = rows
        .iter()
        .map(|r| [r.face_sequence.to_string(), r.degree_sequence.to_string(), r.count.to_string()])
        .collect();
    let width = |i: usize| {
        cells
            .iter()
            .map(|c| c[i].chars().count())
            .chain([header[i].len()])
            .max()
            .unwrap()
    };
    let (w0, w1, w2) = (width(0), width(1), width(2));
    let mut out = String::new();
    let _ = writeln!(out, "{:<w0$} | {:<w1$} | {:>w2$}", header[0], header[1], header[2]);
    let _ = writeln!(out, "{}", "-".repeat(w0 + w1 + w2 + 6));
    for c in &cells {
        let _ = writeln!(out, "{:<w0$} | {:<w1$} | {:>w2$}", c[0], c[1], c[2]);
    }
    let total: usize = rows.iter().map(|r| r.count).sum();
    let _ = writeln!(out, "total: {total}");
    out
}

pub fn format_stats_csv(rows: &[StatsRow]) -> String {
    let mut out = String::from("face_sequence,degree_sequence,count\n");
    for r in rows {
        let _ = writeln!(out, "\"{}\",\"{}\",{}", r.face_sequence, r.degree_sequence, r.count);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hamilton::SearchConfig;
    use crate::pipeline::{filter_hypo, next_level, seed_level};

    #[test]
    fn codes_round_trip() {
        let codes: Vec<CanonicalCode> = fixtures::plane_fixtures().iter().map(|g| g.canonical_code()).collect();
        assert_eq!(decode_codes(&encode_codes(codes.iter())), Some(codes));
        assert_eq!(decode_codes(b"HHCODES1\x05\x00"), None);
    }

    #[test]
    fn write_and_reload() {
        let dir = tempfile::tempdir().unwrap();
        let cat = Catalog::open(dir.path()).unwrap();
        let l0 = seed_level(20, [fixtures::icosahedron()]).unwrap();
        let l1 = next_level(&l0);
        let f1 = filter_hypo(&l1, SearchConfig::default());
        let m = cat.write_level(&l1, &f1, 0.0).unwrap();
        assert_eq!(cat.manifest(l1.key).unwrap(), Some(m.clone()));
        assert_eq!((m.members, m.hypohamiltonian, m.exhaustive), (l1.len(), 0, true));
        let back = cat.load_members(l1.key).unwrap();
        assert_eq!(back.codes, l1.codes);
        assert_eq!(cat.levels().unwrap(), vec![l1.key]);
        assert!(cat.stats(l1.key).unwrap().is_empty());
        assert!(matches!(
            cat.stats(LevelKey { n: 30, f: 2 }),
            Err(PipelineError::UnknownLevel(_))
        ));
    }

    #[test]
    fn table_layout() {
        let rows = vec![
            StatsRow {
                degree_sequence: "30×3, 10×4".parse().unwrap(),
                face_sequence: "5×4, 22×5".parse().unwrap(),
                count: 4,
            },
            StatsRow {
                degree_sequence: "31×3, 8×4, 1×5".parse().unwrap(),
                face_sequence: "5×4, 22×5".parse().unwrap(),
                count: 10,
            },
        ];
        let t = format_stats_table(&rows);
        assert!(t.contains("5×4, 22×5     | 30×3, 10×4      |     4"));
        assert!(t.ends_with("total: 14\n"));
        assert!(format_stats_csv(&rows).contains("\"5×4, 22×5\",\"31×3, 8×4, 1×5\",10"));
        assert_eq!(format_stats_table(&[]).lines().last(), Some("total: 0"));
    }
}
