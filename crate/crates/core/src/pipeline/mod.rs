//! Level-by-level generation of plane graphs with all faces of size at
//! least 5 except `f` 4-faces, and the hypohamiltonian members of each level.
//!
//! Level `(n, 0)` is the set of duals of the seed graphs with `n` faces and
//! minimum degree 5. Level `(n, f)` is every 2-path inflation of every member
//! of level `(n - 1, f - 1)`, deduplicated by canonical code.

mod catalog;

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use dashmap::DashSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::connectivity::{plane_connectivity, ConnectivityReport};
use crate::grinberg::{classify_grinbergian, grinberg_sum, GrinbergianKind};
use crate::hamilton::{is_hypohamiltonian_with, HypoReport, HypoVerdict, SearchConfig};
use crate::io::{read_planar_code, IoError};
use crate::plane::{CanonicalCode, PlaneGraph};
use crate::transforms::{enumerate_inflations, inflate_2path};

pub use catalog::{format_stats_csv, format_stats_table, Catalog, Manifest, StatsRow};

/// Smallest order of a plane graph whose faces all have size at least 5.
pub const MIN_ORDER: usize = 20;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("invalid level n={n} f={f}: need n >= 20 and f <= n - 20")]
    InvalidLevel { n: usize, f: usize },
    #[error("seed {index}: {reason}")]
    SeedValidationFailure { index: usize, reason: String },
    #[error("no seed file for {0} faces")]
    MissingSeeds(usize),
    #[error("level n={} f={} is not in the catalog", .0.n, .0.f)]
    UnknownLevel(LevelKey),
    #[error("catalog: {0}")]
    Catalog(String),
    #[error(transparent)]
    Format(#[from] IoError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LevelKey {
    pub n: usize,
    pub f: usize,
}

impl LevelKey {
    pub fn new(n: usize, f: usize) -> Result<Self, PipelineError> {
        if n < MIN_ORDER || f > n - MIN_ORDER {
            return Err(PipelineError::InvalidLevel { n, f });
        }
        Ok(LevelKey { n, f })
    }

    /// The key one inflation step further.
    pub fn next(self) -> LevelKey {
        LevelKey { n: self.n + 1, f: self.f + 1 }
    }

    pub fn dir_name(&self) -> String {
        format!("n{}_f{}", self.n, self.f)
    }

    pub fn parse_dir_name(s: &str) -> Option<LevelKey> {
        let (n, f) = s.strip_prefix('n')?.split_once("_f")?;
        LevelKey::new(n.parse().ok()?, f.parse().ok()?).ok()
    }
}

impl fmt::Display for LevelKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} f={}", self.n, self.f)
    }
}

/// One materialized level: sorted canonical codes. Graphs are decoded on
/// demand, which keeps large levels compact in memory.
#[derive(Clone, Debug)]
pub struct Level {
    pub key: LevelKey,
    pub codes: Vec<CanonicalCode>,
}

impl Level {
    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn graph(&self, i: usize) -> PlaneGraph {
        decode(&self.codes[i])
    }

    pub fn graphs(&self) -> impl Iterator<Item = PlaneGraph> + '_ {
        self.codes.iter().map(decode)
    }

    fn from_set(key: LevelKey, set: DashSet<CanonicalCode>) -> Level {
        let mut codes: Vec<_> = set.into_iter().collect();
        codes.sort_unstable();
        Level { key, codes }
    }
}

fn decode(code: &CanonicalCode) -> PlaneGraph {
    PlaneGraph::from_canonical_code(code).expect("level codes come from plane graphs")
}

/// Dualizes seed graphs with `n` faces and minimum degree at least 5.
pub fn seed_level(n: usize, seeds: impl IntoIterator<Item = PlaneGraph>) -> Result<Level, PipelineError> {
    let key = LevelKey::new(n, 0)?;
    let set = DashSet::new();
    for (index, g) in seeds.into_iter().enumerate() {
        let fail = |reason: String| PipelineError::SeedValidationFailure { index, reason };
        if g.min_degree() < 5 {
            return Err(fail(format!("minimum degree {} < 5", g.min_degree())));
        }
        if g.num_faces() != n {
            return Err(fail(format!("{} faces, expected {n}", g.num_faces())));
        }
        set.insert(g.dual().canonical_code());
    }
    Ok(Level::from_set(key, set))
}

fn four_faces(g: &PlaneGraph) -> usize {
    g.count_faces_of_size(4)
}

/// All inflations of all members of `prev`, deduplicated.
pub fn next_level(prev: &Level) -> Level {
    let key = prev.key.next();
    let set = DashSet::new();
    prev.codes.par_iter().for_each(|code| {
        let g = decode(code);
        let f = four_faces(&g);
        for site in enumerate_inflations(&g) {
            let h = inflate_2path(&g, site).expect("enumerated sites are valid");
            assert_eq!((h.n(), four_faces(&h)), (g.n() + 1, f + 1), "inflation changes n and f by one");
            set.insert(h.canonical_code());
        }
    });
    Level::from_set(key, set)
}

/// Why a level member is not in the hypohamiltonian subset.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rejections {
    pub not_simple: usize,
    pub not_three_connected: usize,
    pub hamiltonian: usize,
    /// Non-Hamiltonian, but some `G - v` is not Hamiltonian either.
    pub not_hypohamiltonian: usize,
    /// A budgeted search gave up.
    pub undecided: usize,
}

#[derive(Clone, Debug)]
pub struct HypoMember {
    pub code: CanonicalCode,
    pub graph: PlaneGraph,
    pub report: HypoReport,
    pub connectivity: ConnectivityReport,
    pub grinberg: GrinbergianKind,
}

#[derive(Clone, Debug)]
pub struct Filtered {
    pub key: LevelKey,
    pub members: Vec<HypoMember>,
    pub rejected: Rejections,
    /// Hamiltonian cycles found and checked against Grinberg's equation.
    pub grinberg_checked: usize,
}

impl Filtered {
    /// Whether every member was decided.
    pub fn exhaustive(&self) -> bool {
        self.rejected.undecided == 0
    }
}

enum Verdict {
    NotSimple,
    NotThreeConnected,
    Hamiltonian,
    NotHypo,
    Undecided,
    Hypo(Box<HypoMember>),
}

fn classify(code: &CanonicalCode, search: SearchConfig) -> Verdict {
    let g = &decode(code);
    if !g.is_simple() {
        return Verdict::NotSimple;
    }
    if g.min_degree() < 3 {
        return Verdict::NotThreeConnected;
    }
    let conn = match plane_connectivity(g) {
        Ok(c) if c.kappa >= 3 => c,
        _ => return Verdict::NotThreeConnected,
    };
    let report = is_hypohamiltonian_with(g, search);
    match report.verdict {
        HypoVerdict::Hamiltonian => {
            let cycle = report.witness.as_ref().expect("Hamiltonian verdict carries a cycle");
            let sum = grinberg_sum(g, cycle).expect("witness is a Hamiltonian cycle");
            assert_eq!(sum.sum, 0, "Grinberg's equation fails on a Hamiltonian cycle");
            Verdict::Hamiltonian
        }
        HypoVerdict::Hypohamiltonian => {
            let grinberg = classify_grinbergian(g).map(|v| v.kind).expect("simple and 3-connected");
            assert_eq!(
                (conn.kappa, conn.lambda, conn.delta),
                (3, 3, 3),
                "planar hypohamiltonian graphs have connectivity 3"
            );
            Verdict::Hypo(Box::new(HypoMember {
                code: code.clone(),
                graph: g.clone(),
                report,
                connectivity: conn,
                grinberg,
            }))
        }
        HypoVerdict::Inconclusive => Verdict::Undecided,
        _ => Verdict::NotHypo,
    }
}

/// The hypohamiltonian members of a level. Cheap tests run first:
/// simplicity, 3-connectivity, then the Hamiltonicity searches.
pub fn filter_hypo(level: &Level, search: SearchConfig) -> Filtered {
    let verdicts: Vec<Verdict> = level.codes.par_iter().map(|c| classify(c, search)).collect();
    let mut rejected = Rejections::default();
    let mut members = Vec::new();
    for v in verdicts {
        match v {
            Verdict::NotSimple => rejected.not_simple += 1,
            Verdict::NotThreeConnected => rejected.not_three_connected += 1,
            Verdict::Hamiltonian => rejected.hamiltonian += 1,
            Verdict::NotHypo => rejected.not_hypohamiltonian += 1,
            Verdict::Undecided => rejected.undecided += 1,
            Verdict::Hypo(m) => members.push(*m),
        }
    }
    Filtered {
        key: level.key,
        members,
        rejected,
        grinberg_checked: rejected.hamiltonian,
    }
}

/// Reads seed files keyed by face count. A file named `d5_{f}.pc` declares
/// the complete set for `f` faces, even when empty; graphs in other files
/// are grouped by their face count. Directories contribute their `.pc`
/// files.
pub fn load_seeds(paths: &[PathBuf]) -> Result<BTreeMap<usize, Vec<PlaneGraph>>, PipelineError> {
    let mut files = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut inner: Vec<PathBuf> = std::fs::read_dir(p)?
                .map(|e| e.map(|e| e.path()))
                .collect::<Result<_, _>>()?;
            inner.retain(|f| f.extension().is_some_and(|x| x == "pc"));
            inner.sort();
            files.extend(inner);
        } else {
            files.push(p.clone());
        }
    }
    let mut out: BTreeMap<usize, Vec<PlaneGraph>> = BTreeMap::new();
    for path in files {
        let graphs = read_planar_code(&std::fs::read(&path)?)?;
        let declared = path
            .file_name()
            .and_then(|s| s.to_str())
            .and_then(|s| s.strip_prefix("d5_")?.strip_suffix(".pc")?.parse::<usize>().ok());
        if let Some(f) = declared {
            out.entry(f).or_default().extend(graphs);
        } else {
            for g in graphs {
                out.entry(g.num_faces()).or_default().push(g);
            }
        }
    }
    Ok(out)
}

/// Seeds from every `.pc` file in `dir`.
pub fn load_seed_dir(dir: &Path) -> Result<BTreeMap<usize, Vec<PlaneGraph>>, PipelineError> {
    load_seeds(&[dir.to_path_buf()])
}

#[derive(Clone, Debug)]
pub struct PipelineConfig {
    /// Largest order generated.
    pub n_target: usize,
    /// Largest 4-face count; `None` means `n - 20` for each order.
    pub f_max: Option<usize>,
    /// Seed graphs keyed by face count.
    pub seeds: BTreeMap<usize, Vec<PlaneGraph>>,
    pub search: SearchConfig,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelSummary {
    pub key: LevelKey,
    pub members: usize,
    pub hypohamiltonian: usize,
    pub exhaustive: bool,
    /// Taken from an earlier run's checkpoint.
    pub resumed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunSummary {
    pub levels: Vec<LevelSummary>,
}

impl RunSummary {
    pub fn exhaustive(&self) -> bool {
        self.levels.iter().all(|l| l.exhaustive)
    }

    /// Size of the union over all 4-face counts at order `n`.
    pub fn hypohamiltonian_of_order(&self, n: usize) -> usize {
        self.levels.iter().filter(|l| l.key.n == n).map(|l| l.hypohamiltonian).sum()
    }
}

/// Generates and filters every level `(m, f)` with `20 <= m <= n_target`
/// and `f <= f_max`, chain by chain. With a catalog, each finished level is
/// persisted and levels already on disk are reused.
pub fn run_pipeline(
    config: &PipelineConfig,
    catalog: Option<&Catalog>,
    mut progress: impl FnMut(&LevelSummary),
) -> Result<RunSummary, PipelineError> {
    LevelKey::new(config.n_target, 0)?;
    let mut summary = RunSummary::default();
    for base in MIN_ORDER..=config.n_target {
        let depth = (config.n_target - base).min(config.f_max.unwrap_or(usize::MAX));
        let mut level: Option<Level> = None;
        for f in 0..=depth {
            let key = LevelKey::new(base + f, f)?;
            let started = Instant::now();
            if let Some(cat) = catalog {
                if let Some(m) = cat.manifest(key)? {
                    if m.exhaustive {
                        let loaded = cat.load_members(key)?;
                        let s = LevelSummary {
                            key,
                            members: loaded.len(),
                            hypohamiltonian: m.hypohamiltonian,
                            exhaustive: true,
                            resumed: true,
                        };
                        progress(&s);
                        summary.levels.push(s);
                        level = Some(loaded);
                        continue;
                    }
                }
            }
            let current = match level.take() {
                None => {
                    let seeds = config.seeds.get(&base).ok_or(PipelineError::MissingSeeds(base))?;
                    seed_level(base, seeds.iter().cloned())?
                }
                Some(prev) => next_level(&prev),
            };
            let filtered = filter_hypo(&current, config.search);
            if let Some(cat) = catalog {
                cat.write_level(&current, &filtered, started.elapsed().as_secs_f64())?;
            }
            let s = LevelSummary {
                key,
                members: current.len(),
                hypohamiltonian: filtered.members.len(),
                exhaustive: filtered.exhaustive(),
                resumed: false,
            };
            progress(&s);
            summary.levels.push(s);
            level = Some(current);
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn level_keys() {
        assert!(LevelKey::new(19, 0).is_err());
        assert!(LevelKey::new(25, 6).is_err());
        let k = LevelKey::new(25, 5).unwrap();
        assert_eq!(LevelKey::parse_dir_name(&k.dir_name()), Some(k));
    }

    #[test]
    fn icosahedron_seeds_the_dodecahedron() {
        let level = seed_level(20, [fixtures::icosahedron()]).unwrap();
        assert_eq!(level.len(), 1);
        assert_eq!(level.codes[0], fixtures::dodecahedron().canonical_code());
        let h = filter_hypo(&level, SearchConfig::default());
        assert!(h.members.is_empty());
        assert_eq!(h.rejected.hamiltonian, 1);
    }

    #[test]
    fn seed_validation() {
        assert!(seed_level(20, std::iter::empty()).unwrap().is_empty());
        assert!(matches!(
            seed_level(8, [fixtures::octahedron()]),
            Err(PipelineError::InvalidLevel { .. })
        ));
        assert!(matches!(
            seed_level(20, [fixtures::dodecahedron()]),
            Err(PipelineError::SeedValidationFailure { index: 0, .. })
        ));
    }

    #[test]
    fn next_level_of_empty_is_empty() {
        let empty = seed_level(21, std::iter::empty()).unwrap();
        assert!(next_level(&empty).is_empty());
    }

    #[test]
    fn first_inflation_level() {
        let l0 = seed_level(20, [fixtures::icosahedron()]).unwrap();
        let l1 = next_level(&l0);
        assert_eq!(l1.key, LevelKey { n: 21, f: 1 });
        // the dodecahedron is edge- and vertex-transitive, but a site also
        // fixes which 2-path is split: all 60 sites are equivalent
        assert_eq!(l1.len(), 1);
        for g in l1.graphs() {
            assert_eq!((g.n(), g.count_faces_of_size(4)), (21, 1));
        }
        assert!(filter_hypo(&l1, SearchConfig::default()).members.is_empty());
    }
}
