//! Exact vertex and edge connectivity via unit-capacity max-flow.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plane::PlaneGraph;
use crate::simple::SimpleGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConnectivityReport {
    /// Vertex connectivity.
    pub kappa: usize,
    /// Edge connectivity.
    pub lambda: usize,
    /// Minimum degree.
    pub delta: usize,
}

impl ConnectivityReport {
    pub fn is_three_connected(&self) -> bool {
        self.kappa >= 3
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConnectivityError {
    #[error("graph is disconnected")]
    Disconnected,
}

/// Connectivity of a simple graph. `K_n` has `kappa = n - 1`.
pub fn connectivity(g: &SimpleGraph) -> Result<ConnectivityReport, ConnectivityError> {
    if !g.is_connected() {
        return Err(ConnectivityError::Disconnected);
    }
    Ok(ConnectivityReport {
        kappa: vertex_connectivity(g),
        lambda: edge_connectivity(g),
        delta: g.min_degree(),
    })
}

/// Connectivity of the simple graph underlying a plane graph.
pub fn plane_connectivity(g: &PlaneGraph) -> Result<ConnectivityReport, ConnectivityError> {
    connectivity(&g.underlying())
}

/// Residual network with unit capacities, rebuilt per query.
struct Flow {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl Flow {
    fn new(nodes: usize) -> Self {
        Flow {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn arc(&mut self, u: usize, v: usize, c: u32) {
        self.adj[u].push(self.head.len());
        self.head.push(v);
        self.cap.push(c);
        self.adj[v].push(self.head.len());
        self.head.push(u);
        self.cap.push(0);
    }

    /// Augments along shortest paths until `limit` units flow or none remain.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut via = vec![usize::MAX; self.adj.len()];
        while flow < limit {
            via.iter_mut().for_each(|x| *x = usize::MAX);
            via[s] = usize::MAX - 1;
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &self.adj[u] {
                    let w = self.head[a];
                    if self.cap[a] > 0 && via[w] == usize::MAX {
                        via[w] = a;
                        if w == t {
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if via[t] == usize::MAX {
                break;
            }
            let mut v = t;
            while v != s {
                let a = via[v];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                v = self.head[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Number of internally disjoint `s`-`t` paths for non-adjacent `s`, `t`,
/// capped at `limit`. Vertex `v` splits into `2v -> 2v + 1`.
fn local_vertex_connectivity(g: &SimpleGraph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.n();
    let big = n as u32;
    let mut net = Flow::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        net.arc(2 * v, 2 * v + 1, c);
        for &w in g.neighbors(v) {
            net.arc(2 * v + 1, 2 * w, 1);
        }
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Exact vertex connectivity (Even's scheme): some vertex among the first
/// `kappa + 1` lies outside a minimum separator and is separated by it from a
/// later vertex.
pub fn vertex_connectivity(g: &SimpleGraph) -> usize {
    let n = g.n();
    let mut best = n.saturating_sub(1);
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_vertex_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

/// Exact edge connectivity: minimum over `t` of the 0-`t` edge flow.
pub fn edge_connectivity(g: &SimpleGraph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    let mut best = g.min_degree();
    for t in 1..n {
        let mut net = Flow::new(n);
        for (u, v) in g.edges() {
            net.arc(u, v, 1);
            net.arc(v, u, 1);
        }
        best = best.min(net.max_flow(0, t, best));
    }
    best
}
