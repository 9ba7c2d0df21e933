//! Hamiltonian cycles and paths by pruned depth-first search, the
//! hypohamiltonian and hypotraceable certificates built on it, and
//! exhaustive oracles for small graphs.
//!
//! The search keeps, for every vertex, the number of neighbors that are not
//! on the partial path. An off-path vertex whose count of such neighbors plus
//! adjacency to a path endpoint drops below two can no longer be passed
//! through, so the branch is cut.

mod oracle;

use std::borrow::Cow;
use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::plane::PlaneGraph;
use crate::simple::SimpleGraph;

pub use oracle::{
    longest_cycle, longest_path, oracle_hamiltonian_cycle, oracle_hamiltonian_path, OracleError,
    ORACLE_MAX_N,
};

/// Graphs the searches accept. Plane graphs are searched on their
/// underlying simple graph.
pub trait AsSimpleGraph {
    fn as_simple(&self) -> Cow<'_, SimpleGraph>;
}

impl AsSimpleGraph for SimpleGraph {
    fn as_simple(&self) -> Cow<'_, SimpleGraph> {
        Cow::Borrowed(self)
    }
}

impl AsSimpleGraph for PlaneGraph {
    fn as_simple(&self) -> Cow<'_, SimpleGraph> {
        Cow::Owned(self.underlying())
    }
}

/// Result of a possibly budgeted search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Found(T),
    /// The search space was exhausted.
    Absent,
    /// The node budget ran out first.
    Inconclusive,
}

impl<T> Outcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(x) => Some(x),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of search nodes per search; `None` is unlimited.
    pub budget: Option<u64>,
    /// Apply the degree pruning rule. Disabling it never changes a verdict.
    pub prune: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: None,
            prune: true,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
}

/// A Hamiltonicity query on a graph, optionally with one vertex masked out.
///
/// Returned vertex sequences use the ids of the full graph.
pub struct HamiltonSearch<'g> {
    g: Cow<'g, SimpleGraph>,
    removed: Option<usize>,
    config: SearchConfig,
}

impl<'g> HamiltonSearch<'g> {
    pub fn new<G: AsSimpleGraph + ?Sized>(g: &'g G) -> Self {
        HamiltonSearch {
            g: g.as_simple(),
            removed: None,
            config: SearchConfig::default(),
        }
    }

    /// Searches `G - v` instead of `G`.
    pub fn without(mut self, v: usize) -> Self {
        assert!(v < self.g.n());
        self.removed = Some(v);
        self
    }

    pub fn config(mut self, config: SearchConfig) -> Self {
        self.config = config;
        self
    }

    pub fn budget(mut self, nodes: u64) -> Self {
        self.config.budget = Some(nodes);
        self
    }

    pub fn cycle(&self) -> (Outcome<Vec<usize>>, SearchStats) {
        let mut e = Engine::new(&self.g, self.removed, self.config);
        let out = e.search_cycle();
        if let Outcome::Found(c) = &out {
            assert!(self.g.is_hamiltonian_cycle(c, self.removed), "invalid cycle witness");
        }
        (out, SearchStats { nodes: e.nodes })
    }

    pub fn path(&self) -> (Outcome<Vec<usize>>, SearchStats) {
        let mut e = Engine::new(&self.g, self.removed, self.config);
        let out = e.search_path();
        if let Outcome::Found(p) = &out {
            assert!(self.g.is_hamiltonian_path(p, self.removed), "invalid path witness");
        }
        (out, SearchStats { nodes: e.nodes })
    }

    /// Hamiltonian path from `u` to `v`.
    pub fn path_between(&self, u: usize, v: usize) -> (Outcome<Vec<usize>>, SearchStats) {
        let mut e = Engine::new(&self.g, self.removed, self.config);
        let out = e.search_path_between(u, v);
        if let Outcome::Found(p) = &out {
            assert!(self.g.is_hamiltonian_path(p, self.removed), "invalid path witness");
            assert!(p[0] == u && p[p.len() - 1] == v);
        }
        (out, SearchStats { nodes: e.nodes })
    }
}

pub fn find_hamiltonian_cycle<G: AsSimpleGraph + ?Sized>(g: &G) -> Option<Vec<usize>> {
    HamiltonSearch::new(g).cycle().0.found()
}

pub fn find_hamiltonian_path<G: AsSimpleGraph + ?Sized>(g: &G) -> Option<Vec<usize>> {
    HamiltonSearch::new(g).path().0.found()
}

pub fn find_hamiltonian_path_between<G: AsSimpleGraph + ?Sized>(
    g: &G,
    u: usize,
    v: usize,
) -> Option<Vec<usize>> {
    HamiltonSearch::new(g).path_between(u, v).0.found()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HypoVerdict {
    Hypohamiltonian,
    Hypotraceable,
    Hamiltonian,
    Traceable,
    /// Not Hamiltonian (traceable), and some vertex-deleted subgraph is not
    /// either.
    Neither,
    /// A budgeted search gave up before deciding.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypoReport {
    pub verdict: HypoVerdict,
    /// Hamiltonian cycle (path) of the whole graph, when one exists.
    pub witness: Option<Vec<usize>>,
    /// Hamiltonian cycle (path) of `G - v`, keyed by `v`.
    pub witnesses: BTreeMap<usize, Vec<usize>>,
    /// Vertices `v` for which `G - v` was shown to have none.
    pub failures: Vec<usize>,
    /// Whether non-Hamiltonicity (non-traceability) of `G` itself was
    /// established by a completed search.
    pub exhausted: bool,
}

impl HypoReport {
    pub fn is_hypohamiltonian(&self) -> bool {
        self.verdict == HypoVerdict::Hypohamiltonian
    }

    pub fn is_hypotraceable(&self) -> bool {
        self.verdict == HypoVerdict::Hypotraceable
    }
}

pub fn is_hypohamiltonian<G: AsSimpleGraph + ?Sized>(g: &G) -> HypoReport {
    is_hypohamiltonian_with(g, SearchConfig::default())
}

pub fn is_hypotraceable<G: AsSimpleGraph + ?Sized>(g: &G) -> HypoReport {
    is_hypotraceable_with(g, SearchConfig::default())
}

pub fn is_hypohamiltonian_with<G: AsSimpleGraph + ?Sized>(g: &G, config: SearchConfig) -> HypoReport {
    let g = g.as_simple();
    hypo(&g, config, true)
}

pub fn is_hypotraceable_with<G: AsSimpleGraph + ?Sized>(g: &G, config: SearchConfig) -> HypoReport {
    let g = g.as_simple();
    hypo(&g, config, false)
}

fn hypo(g: &SimpleGraph, config: SearchConfig, cycles: bool) -> HypoReport {
    let run = |removed: Option<usize>| {
        let mut s = HamiltonSearch::new(g).config(config);
        if let Some(v) = removed {
            s = s.without(v);
        }
        if cycles {
            s.cycle().0
        } else {
            s.path().0
        }
    };
    let (yes, hypo_kind) = if cycles {
        (HypoVerdict::Hamiltonian, HypoVerdict::Hypohamiltonian)
    } else {
        (HypoVerdict::Traceable, HypoVerdict::Hypotraceable)
    };
    let mut report = HypoReport {
        verdict: HypoVerdict::Inconclusive,
        witness: None,
        witnesses: BTreeMap::new(),
        failures: Vec::new(),
        exhausted: false,
    };
    match run(None) {
        Outcome::Found(w) => {
            report.verdict = yes;
            report.witness = Some(w);
            return report;
        }
        Outcome::Inconclusive => return report,
        Outcome::Absent => report.exhausted = true,
    }
    let results: Vec<(usize, Outcome<Vec<usize>>)> =
        (0..g.n()).into_par_iter().map(|v| (v, run(Some(v)))).collect();
    let mut undecided = false;
    for (v, out) in results {
        match out {
            Outcome::Found(w) => {
                report.witnesses.insert(v, w);
            }
            Outcome::Absent => report.failures.push(v),
            Outcome::Inconclusive => undecided = true,
        }
    }
    report.verdict = if !report.failures.is_empty() {
        HypoVerdict::Neither
    } else if undecided {
        HypoVerdict::Inconclusive
    } else {
        hypo_kind
    };
    report
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    /// Close back to the start through a vertex flagged in `bonus`.
    Cycle,
    /// Any final vertex allowed by `can_end`.
    Path,
    /// End exactly at the given vertex.
    PathTo(usize),
}

/// Shortfall counters over off-path vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
struct Shortfall {
    /// Below their requirement but allowed to become the final vertex.
    soft: u32,
    /// Below their requirement and not allowed to end the path.
    hard: u32,
    /// With no way in at all.
    zero: u32,
}

struct Engine<'g> {
    g: &'g SimpleGraph,
    adj: Vec<bool>,
    alive: Vec<bool>,
    alive_n: usize,
    on_path: Vec<bool>,
    path: Vec<usize>,
    /// Alive off-path neighbors.
    free: Vec<u32>,
    /// Static extra way in (a permitted closing edge to the start).
    bonus: Vec<u8>,
    /// Ways in an off-path vertex needs.
    need: Vec<u8>,
    can_end: Vec<bool>,
    slack: u32,
    short: Shortfall,
    goal: Goal,
    config: SearchConfig,
    nodes: u64,
    aborted: bool,
    touched: Vec<usize>,
    stamp: Vec<u32>,
    epoch: u32,
}

impl<'g> Engine<'g> {
    fn new(g: &'g SimpleGraph, removed: Option<usize>, config: SearchConfig) -> Self {
        let n = g.n();
        let mut adj = vec![false; n * n];
        for (u, v) in g.edges() {
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        let mut alive = vec![true; n];
        if let Some(r) = removed {
            alive[r] = false;
        }
        Engine {
            g,
            adj,
            alive,
            alive_n: n - usize::from(removed.is_some()),
            on_path: vec![false; n],
            path: Vec::with_capacity(n),
            free: vec![0; n],
            bonus: vec![0; n],
            need: vec![2; n],
            can_end: vec![false; n],
            slack: 0,
            short: Shortfall::default(),
            goal: Goal::Path,
            config,
            nodes: 0,
            aborted: false,
            touched: Vec::new(),
            stamp: vec![0; n],
            epoch: 0,
        }
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.g.n() + v]
    }

    fn alive_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.g.neighbors(v).iter().copied().filter(move |&w| self.alive[w])
    }

    fn alive_connected(&self) -> bool {
        let removed: Vec<usize> = (0..self.g.n()).filter(|&v| !self.alive[v]).collect();
        self.g.is_connected_without(&removed)
    }

    fn avail(&self, w: usize) -> u32 {
        let end = *self.path.last().unwrap();
        self.free[w] + u32::from(self.bonus[w]) + u32::from(self.adjacent(w, end))
    }

    fn status(&self, w: usize) -> Shortfall {
        let a = self.avail(w);
        let mut s = Shortfall::default();
        if a == 0 {
            s.zero = 1;
        }
        if a < u32::from(self.need[w]) {
            if self.can_end[w] {
                s.soft = 1;
            } else {
                s.hard = 1;
            }
        }
        s
    }

    fn violated(&self) -> bool {
        self.short.hard > 0 || self.short.zero > 0 || self.short.soft > self.slack
    }

    /// Counters recomputed from scratch for the current path.
    fn recount(&self) -> (Vec<u32>, Shortfall) {
        let n = self.g.n();
        let mut free = vec![0; n];
        let mut short = Shortfall::default();
        for v in (0..n).filter(|&v| self.alive[v]) {
            free[v] = self.alive_neighbors(v).filter(|&w| !self.on_path[w]).count() as u32;
        }
        for w in (0..n).filter(|&w| self.alive[w] && !self.on_path[w]) {
            let end = *self.path.last().unwrap();
            let a = free[w] + u32::from(self.bonus[w]) + u32::from(self.adjacent(w, end));
            if a == 0 {
                short.zero += 1;
            }
            if a < u32::from(self.need[w]) {
                if self.can_end[w] {
                    short.soft += 1;
                } else {
                    short.hard += 1;
                }
            }
        }
        (free, short)
    }

    /// Resets the path to `prefix` and recomputes all counters.
    fn reset(&mut self, prefix: &[usize]) {
        self.on_path.iter_mut().for_each(|x| *x = false);
        self.path.clear();
        for &v in prefix {
            self.on_path[v] = true;
            self.path.push(v);
        }
        let (free, short) = self.recount();
        self.free = free;
        self.short = short;
    }

    fn push(&mut self, x: usize) {
        let old_end = *self.path.last().unwrap();
        self.epoch += 1;
        self.touched.clear();
        let candidates = self.g.neighbors(old_end).iter().chain(self.g.neighbors(x)).chain([&x]);
        for &y in candidates {
            if self.alive[y] && !self.on_path[y] && self.stamp[y] != self.epoch {
                self.stamp[y] = self.epoch;
                self.touched.push(y);
            }
        }
        for i in 0..self.touched.len() {
            let s = self.status(self.touched[i]);
            self.short.soft -= s.soft;
            self.short.hard -= s.hard;
            self.short.zero -= s.zero;
        }
        self.on_path[x] = true;
        self.path.push(x);
        for &y in self.g.neighbors(x) {
            if self.alive[y] {
                self.free[y] -= 1;
            }
        }
        for i in 0..self.touched.len() {
            let y = self.touched[i];
            if !self.on_path[y] {
                let s = self.status(y);
                self.short.soft += s.soft;
                self.short.hard += s.hard;
                self.short.zero += s.zero;
            }
        }
    }

    fn pop(&mut self, saved: Shortfall) {
        let x = self.path.pop().unwrap();
        self.on_path[x] = false;
        for &y in self.g.neighbors(x) {
            if self.alive[y] {
                self.free[y] += 1;
            }
        }
        self.short = saved;
    }

    fn finished(&self) -> bool {
        let end = *self.path.last().unwrap();
        match self.goal {
            Goal::Cycle => self.bonus[end] == 1,
            Goal::Path => self.can_end[end],
            Goal::PathTo(t) => end == t,
        }
    }

    fn extend(&mut self) -> bool {
        self.nodes += 1;
        if let Some(b) = self.config.budget {
            if self.nodes > b {
                self.aborted = true;
                return false;
            }
        }
        #[cfg(debug_assertions)]
        {
            let (free, short) = self.recount();
            let alive_free: Vec<u32> = (0..self.g.n()).map(|v| if self.alive[v] { self.free[v] } else { 0 }).collect();
            debug_assert_eq!(alive_free, free, "free-neighbor counters drifted");
            debug_assert_eq!(self.short, short, "shortfall counters drifted");
        }
        if self.path.len() == self.alive_n {
            return self.finished();
        }
        let end = *self.path.last().unwrap();
        let last_step = self.path.len() + 1 == self.alive_n;
        let mut next: Vec<usize> = self
            .alive_neighbors(end)
            .filter(|&y| !self.on_path[y])
            .filter(|&y| match self.goal {
                Goal::PathTo(t) => y != t || last_step,
                _ => true,
            })
            .collect();
        next.sort_by_key(|&y| (self.free[y], y));
        for y in next {
            let saved = self.short;
            self.push(y);
            if !(self.config.prune && self.violated()) && self.extend() {
                return true;
            }
            self.pop(saved);
            if self.aborted {
                return false;
            }
        }
        false
    }

    fn run(&mut self, prefix: &[usize]) -> bool {
        self.reset(prefix);
        if self.config.prune && self.violated() {
            return false;
        }
        self.extend()
    }

    fn outcome(&self, found: bool) -> Outcome<Vec<usize>> {
        if found {
            Outcome::Found(self.path.clone())
        } else if self.aborted {
            Outcome::Inconclusive
        } else {
            Outcome::Absent
        }
    }

    fn search_cycle(&mut self) -> Outcome<Vec<usize>> {
        if self.alive_n < 3 || !self.alive_connected() {
            return Outcome::Absent;
        }
        self.goal = Goal::Cycle;
        let n = self.g.n();
        let s = (0..n)
            .filter(|&v| self.alive[v])
            .min_by_key(|&v| (self.alive_neighbors(v).count(), v))
            .unwrap();
        let first: Vec<usize> = self.alive_neighbors(s).collect();
        // branch on the first cycle edge s-n_i; the closing edge is then some
        // s-n_j with j > i, and the reversed cycle is never revisited
        for i in 0..first.len().saturating_sub(1) {
            self.bonus.iter_mut().for_each(|b| *b = 0);
            for &w in &first[i + 1..] {
                self.bonus[w] = 1;
            }
            if self.run(&[s, first[i]]) {
                return self.outcome(true);
            }
            if self.aborted {
                break;
            }
        }
        self.outcome(false)
    }

    fn search_path(&mut self) -> Outcome<Vec<usize>> {
        let n = self.g.n();
        if self.alive_n == 0 || !self.alive_connected() {
            return Outcome::Absent;
        }
        self.goal = Goal::Path;
        self.slack = 1;
        let deg: Vec<usize> = (0..n).map(|v| self.alive_neighbors(v).count()).collect();
        let live: Vec<usize> = (0..n).filter(|&v| self.alive[v]).collect();
        if live.len() == 1 {
            self.reset(&live);
            return self.outcome(true);
        }
        let leaves: Vec<usize> = live.iter().copied().filter(|&v| deg[v] == 1).collect();
        let starts = match leaves.len() {
            0 => {
                let mut s = live.clone();
                s.sort_by_key(|&v| (deg[v], v));
                s
            }
            1 | 2 => vec![leaves[0]],
            _ => return Outcome::Absent,
        };
        self.can_end.iter_mut().for_each(|c| *c = true);
        for &s in &starts {
            if self.run(&[s]) {
                return self.outcome(true);
            }
            if self.aborted {
                break;
            }
            // paths ending at an earlier start were covered from that start
            self.can_end[s] = false;
        }
        self.outcome(false)
    }

    fn search_path_between(&mut self, u: usize, v: usize) -> Outcome<Vec<usize>> {
        assert!(u < self.g.n() && v < self.g.n());
        if !self.alive[u] || !self.alive[v] || !self.alive_connected() {
            return Outcome::Absent;
        }
        if u == v {
            if self.alive_n == 1 {
                self.reset(&[u]);
                return self.outcome(true);
            }
            return Outcome::Absent;
        }
        self.goal = Goal::PathTo(v);
        self.need[v] = 1;
        let found = self.run(&[u]);
        self.outcome(found)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn cycles_on_classics() {
        assert!(find_hamiltonian_cycle(&fixtures::complete(4)).is_some());
        assert!(find_hamiltonian_cycle(&fixtures::petersen()).is_none());
        assert!(find_hamiltonian_cycle(&fixtures::dodecahedron()).is_some());
        assert!(find_hamiltonian_cycle(&fixtures::cycle(3)).is_some());
        assert!(find_hamiltonian_cycle(&fixtures::path(3)).is_none());
        assert!(find_hamiltonian_cycle(&SimpleGraph::new(1)).is_none());
    }

    #[test]
    fn paths_on_classics() {
        assert!(find_hamiltonian_path(&fixtures::path(5)).is_some());
        assert!(find_hamiltonian_path(&fixtures::petersen()).is_some());
        assert!(find_hamiltonian_path(&fixtures::star(3)).is_none());
        assert_eq!(find_hamiltonian_path(&SimpleGraph::new(1)), Some(vec![0]));
        assert!(find_hamiltonian_path(&SimpleGraph::new(2)).is_none());
        let p = find_hamiltonian_path_between(&fixtures::path(5), 4, 0).unwrap();
        assert_eq!(p, vec![4, 3, 2, 1, 0]);
        assert!(find_hamiltonian_path_between(&fixtures::path(5), 1, 0).is_none());
        // the cube is bipartite with equal sides: ends must have opposite colours
        let cube = fixtures::cube().underlying();
        let far = (1..8).find(|&v| !cube.has_edge(0, v) && cube.neighbors(v).iter().all(|&w| !cube.has_edge(0, w))).unwrap();
        assert!(find_hamiltonian_path_between(&cube, 0, far).is_some());
        let same_side = cube.neighbors(cube.neighbors(0)[0]).iter().copied().find(|&w| w != 0).unwrap();
        assert!(find_hamiltonian_path_between(&cube, 0, same_side).is_none());
    }

    #[test]
    fn masked_vertex() {
        let p = fixtures::petersen();
        for v in 0..10 {
            let (out, _) = HamiltonSearch::new(&p).without(v).cycle();
            let c = out.found().unwrap();
            assert_eq!(c.len(), 9);
            assert!(!c.contains(&v));
        }
    }

    #[test]
    fn petersen_is_hypohamiltonian_not_hypotraceable() {
        let r = is_hypohamiltonian(&fixtures::petersen());
        assert_eq!(r.verdict, HypoVerdict::Hypohamiltonian);
        assert_eq!(r.witnesses.len(), 10);
        assert!(r.exhausted);
        let t = is_hypotraceable(&fixtures::petersen());
        assert_eq!(t.verdict, HypoVerdict::Traceable);
        assert_eq!(is_hypohamiltonian(&fixtures::complete(4)).verdict, HypoVerdict::Hamiltonian);
        assert_eq!(is_hypotraceable(&fixtures::complete(4)).verdict, HypoVerdict::Traceable);
        assert_eq!(is_hypohamiltonian(&fixtures::dodecahedron()).verdict, HypoVerdict::Hamiltonian);
        // K_{2,3}: no Hamiltonian cycle, and deleting a degree-3 vertex leaves a path
        let k23 = SimpleGraph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert_eq!(is_hypohamiltonian(&k23).verdict, HypoVerdict::Neither);
    }

    #[test]
    fn budget_gives_inconclusive() {
        let (out, stats) = HamiltonSearch::new(&fixtures::petersen()).budget(3).cycle();
        assert_eq!(out, Outcome::Inconclusive);
        assert!(stats.nodes <= 4);
        let r = is_hypohamiltonian_with(&fixtures::petersen(), SearchConfig { budget: Some(2), prune: true });
        assert_eq!(r.verdict, HypoVerdict::Inconclusive);
    }

    #[test]
    fn pruning_only_changes_node_counts() {
        let unpruned = SearchConfig { budget: None, prune: false };
        let mut graphs: Vec<SimpleGraph> = fixtures::plane_fixtures().iter().map(PlaneGraph::underlying).collect();
        graphs.extend([fixtures::petersen(), fixtures::star(3), fixtures::complete(5)]);
        for g in &graphs {
            let (a, sa) = HamiltonSearch::new(g).cycle();
            let (b, sb) = HamiltonSearch::new(g).config(unpruned).cycle();
            assert_eq!(a.is_found(), b.is_found());
            assert!(sa.nodes <= sb.nodes);
            let (a, _) = HamiltonSearch::new(g).path();
            let (b, _) = HamiltonSearch::new(g).config(unpruned).path();
            assert_eq!(a.is_found(), b.is_found());
        }
    }
}
