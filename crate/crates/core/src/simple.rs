//! Abstract undirected simple graphs.

use std::collections::VecDeque;

use crate::sequence::DegreeSequence;

/// An undirected simple graph on vertices `0..n`.
///
/// Neighbor lists keep insertion order, which several constructions use as
/// their deterministic "port" order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Loops and repeated edges are dropped.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = SimpleGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Builds a graph from neighbor lists, ignoring loops and duplicates.
    pub fn from_adjacency(lists: &[Vec<usize>]) -> Self {
        let mut g = SimpleGraph::new(lists.len());
        for (u, list) in lists.iter().enumerate() {
            for &v in list {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Adds `uv` unless it is a loop or already present. Returns whether an
    /// edge was added.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n() && v < self.n(), "vertex out of range");
        if u == v || self.adj[u].contains(&v) {
            return false;
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.m += 1;
        true
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let Some(i) = self.adj[u].iter().position(|&w| w == v) else {
            return false;
        };
        self.adj[u].remove(i);
        let j = self.adj[v].iter().position(|&w| w == u).unwrap();
        self.adj[v].remove(j);
        self.m -= 1;
        true
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&[])
    }

    /// Connectivity of the graph with the given vertices removed.
    pub fn is_connected_without(&self, removed: &[usize]) -> bool {
        let n = self.n();
        let mut dead = vec![false; n];
        for &r in removed {
            dead[r] = true;
        }
        let Some(start) = (0..n).find(|&v| !dead[v]) else {
            return true;
        };
        let mut seen = dead;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached + removed.len() == n
    }

    /// Shortest cycle length, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// `G - v` with vertices renumbered densely; returns the map from new to
    /// old vertex ids.
    pub fn without_vertex(&self, v: usize) -> (SimpleGraph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        (self.induced(&keep), keep)
    }

    /// Subgraph induced by `keep`, vertex `i` of the result being `keep[i]`.
    pub fn induced(&self, keep: &[usize]) -> SimpleGraph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &u) in keep.iter().enumerate() {
            index[u] = i;
        }
        let mut g = SimpleGraph::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for &w in &self.adj[u] {
                if index[w] != usize::MAX && i < index[w] {
                    g.add_edge(i, index[w]);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![Vec::new(); self.n()];
        for (u, list) in self.adj.iter().enumerate() {
            adj[perm[u]] = list.iter().map(|&w| perm[w]).collect();
        }
        SimpleGraph { adj, m: self.m }
    }

    /// Two-colorability test.
    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Checks that `cycle` is a Hamiltonian cycle of the subgraph induced by
    /// the vertices not in `removed`.
    pub fn is_hamiltonian_cycle(&self, cycle: &[usize], removed: Option<usize>) -> bool {
        let alive = self.n() - usize::from(removed.is_some());
        if alive < 3 || cycle.len() != alive || !self.covers_once(cycle, removed) {
            return false;
        }
        cycle
            .iter()
            .zip(cycle.iter().cycle().skip(1))
            .all(|(&a, &b)| self.has_edge(a, b))
    }

    /// Checks that `path` is a Hamiltonian path of the graph minus `removed`.
    pub fn is_hamiltonian_path(&self, path: &[usize], removed: Option<usize>) -> bool {
        let alive = self.n() - usize::from(removed.is_some());
        if alive == 0 || path.len() != alive || !self.covers_once(path, removed) {
            return false;
        }
        path.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    fn covers_once(&self, seq: &[usize], removed: Option<usize>) -> bool {
        let mut seen = vec![false; self.n()];
        if let Some(r) = removed {
            seen[r] = true;
        }
        seq.iter().all(|&v| v < self.n() && !std::mem::replace(&mut seen[v], true))
    }
}
