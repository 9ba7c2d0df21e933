//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use std::collections::HashSet;

use hypoham::SimpleGraph;
use rand::Rng;

/// Canonical form of a small graph by individualization and refinement:
/// the minimum upper-triangle bit string over all refined leaf orderings.
pub fn canonical_bits(adj: &[u16]) -> u64 {
    let n = adj.len();
    assert!(n <= 11);
    let mut best = u64::MAX;
    search(adj, vec![0; n], &mut best);
    best
}

fn refine(adj: &[u16], mut color: Vec<u32>) -> Vec<u32> {
    let n = adj.len();
    loop {
        let mut sig: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nc: Vec<u32> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| color[w]).collect();
                nc.sort_unstable();
                (color[v], nc, v)
            })
            .collect();
        sig.sort();
        let mut next = vec![0; n];
        let mut c = 0;
        for i in 0..n {
            if i > 0 && (sig[i].0 != sig[i - 1].0 || sig[i].1 != sig[i - 1].1) {
                c = i as u32;
            }
            next[sig[i].2] = c;
        }
        let cells = |col: &[u32]| col.iter().collect::<HashSet<_>>().len();
        if cells(&next) == cells(&color) {
            return next;
        }
        color = next;
    }
}

fn search(adj: &[u16], color: Vec<u32>, best: &mut u64) {
    let n = adj.len();
    let color = refine(adj, color);
    let mut count = vec![0; n];
    for &c in &color {
        count[c as usize] += 1;
    }
    match (0..n).find(|&c| count[c] > 1) {
        None => {
            // color[v] is the position of v
            let mut inv = vec![0; n];
            for v in 0..n {
                inv[color[v] as usize] = v;
            }
            let mut code = 0u64;
            for i in 0..n {
                for j in i + 1..n {
                    code = code << 1 | u64::from(adj[inv[i]] >> inv[j] & 1);
                }
            }
            *best = (*best).min(code);
        }
        Some(cell) => {
            for v in (0..n).filter(|&v| color[v] as usize == cell) {
                let mut c: Vec<u32> = color.iter().map(|&x| 2 * x + 1).collect();
                c[v] = 2 * color[v];
                search(adj, c, best);
            }
        }
    }
}

fn to_graph(adj: &[u16]) -> SimpleGraph {
    let n = adj.len();
    SimpleGraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v))))
}

/// All connected graphs on `n` vertices up to isomorphism, for
/// `1 <= n <= 8`. Every connected graph arises from a connected graph on one
/// vertex fewer by adding a vertex with a nonempty neighborhood.
pub fn connected_graphs(n: usize) -> Vec<SimpleGraph> {
    assert!((1..=8).contains(&n));
    let mut level: Vec<Vec<u16>> = vec![vec![0]];
    for k in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nbrs in 1u16..1 << k {
                let mut h = g.clone();
                for w in 0..k {
                    if nbrs >> w & 1 == 1 {
                        h[w] |= 1 << k;
                    }
                }
                h.push(nbrs);
                if seen.insert(canonical_bits(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level.iter().map(|a| to_graph(a)).collect()
}

/// A connected graph on `n` vertices: a random spanning tree plus each
/// remaining pair with probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v);
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}
