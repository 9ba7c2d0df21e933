//! Plain exhaustive backtracking, without pruning or ordering heuristics.
//! Used as an independent reference for the pruned searcher.

use thiserror::Error;

use crate::simple::SimpleGraph;

/// Largest order the oracles accept.
pub const ORACLE_MAX_N: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {0} vertices; exhaustive search is limited to {ORACLE_MAX_N}")]
    TooLarge(usize),
}

fn masks(g: &SimpleGraph) -> Result<Vec<u32>, OracleError> {
    if g.n() > ORACLE_MAX_N {
        return Err(OracleError::TooLarge(g.n()));
    }
    Ok((0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect())
}

/// Extends `path` through unvisited vertices until `done` accepts it.
fn dfs(adj: &[u32], path: &mut Vec<usize>, seen: u32, done: &dyn Fn(&[usize]) -> bool) -> bool {
    if done(path) {
        return true;
    }
    let v = *path.last().unwrap();
    let mut cand = adj[v] & !seen;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(w);
        if dfs(adj, path, seen | 1 << w, done) {
            return true;
        }
        path.pop();
    }
    false
}

pub fn oracle_hamiltonian_cycle(g: &SimpleGraph) -> Result<Option<Vec<usize>>, OracleError> {
    let adj = masks(g)?;
    let n = g.n();
    if n < 3 {
        return Ok(None);
    }
    let mut path = vec![0];
    let done = |p: &[usize]| p.len() == n && adj[p[n - 1]] & 1 == 1;
    Ok(dfs(&adj, &mut path, 1, &done).then_some(path))
}

pub fn oracle_hamiltonian_path(g: &SimpleGraph) -> Result<Option<Vec<usize>>, OracleError> {
    let adj = masks(g)?;
    let n = g.n();
    let done = |p: &[usize]| p.len() == n;
    for s in 0..n {
        let mut path = vec![s];
        if dfs(&adj, &mut path, 1 << s, &done) {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

/// Length of a longest cycle, `None` for forests.
pub fn longest_cycle(g: &SimpleGraph) -> Result<Option<usize>, OracleError> {
    let adj = masks(g)?;
    fn go(adj: &[u32], s: usize, v: usize, seen: u32, len: usize, best: &mut usize) {
        if len >= 3 && adj[v] >> s & 1 == 1 {
            *best = (*best).max(len);
        }
        // only vertices above the start, so each cycle is rooted at its minimum
        let mut cand = adj[v] & !seen & !((2u32 << s) - 1);
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            go(adj, s, w, seen | 1 << w, len + 1, best);
        }
    }
    let mut best = 0;
    for s in 0..g.n() {
        go(&adj, s, s, 1 << s, 1, &mut best);
    }
    Ok((best >= 3).then_some(best))
}

/// Number of vertices on a longest path.
pub fn longest_path(g: &SimpleGraph) -> Result<usize, OracleError> {
    let adj = masks(g)?;
    fn go(adj: &[u32], v: usize, seen: u32, len: usize, best: &mut usize) {
        *best = (*best).max(len);
        let mut cand = adj[v] & !seen;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            go(adj, w, seen | 1 << w, len + 1, best);
        }
    }
    let mut best = 0;
    for s in 0..g.n() {
        go(&adj, s, 1 << s, 1, &mut best);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn classics() {
        assert_eq!(oracle_hamiltonian_cycle(&fixtures::petersen()), Ok(None));
        assert!(oracle_hamiltonian_cycle(&fixtures::cycle(6)).unwrap().is_some());
        assert!(oracle_hamiltonian_path(&fixtures::petersen()).unwrap().is_some());
        assert_eq!(oracle_hamiltonian_path(&fixtures::star(3)), Ok(None));
        assert_eq!(
            oracle_hamiltonian_cycle(&fixtures::cycle(25)),
            Err(OracleError::TooLarge(25))
        );
    }

    #[test]
    fn longest() {
        assert_eq!(longest_cycle(&fixtures::petersen()), Ok(Some(9)));
        assert_eq!(longest_cycle(&fixtures::cycle(5)), Ok(Some(5)));
        assert_eq!(longest_cycle(&fixtures::star(3)), Ok(None));
        assert_eq!(longest_path(&fixtures::star(3)), Ok(3));
        assert_eq!(longest_path(&fixtures::petersen()), Ok(10));
        assert_eq!(longest_cycle(&fixtures::complete(6)), Ok(Some(6)));
    }
}
