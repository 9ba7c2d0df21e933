//! Writes `D5(f)` seed files: plane graphs with minimum degree at least 5
//! and exactly `f` faces, as planar_code.
//!
//! usage: gen_d5 <out_dir> [f_min] [f_max]
//!
//! Every such graph with `f <= 26` is a triangulation with at most two
//! edges removed, on `v <= 16` vertices. Triangulations with minimum degree
//! 5 are built by winding up vertex spirals over all degree sequences; the
//! counts per order are checked against the known values.

use std::collections::BTreeMap;
use std::collections::VecDeque;

use hypoham::io::write_planar_code;
use hypoham::{build_plane_graph, CanonicalCode, PlaneGraph};

/// Known numbers of triangulations with minimum degree 5, by order 12..=16.
const KNOWN: [usize; 5] = [1, 0, 1, 1, 3];

/// Builds the triangulation whose vertex spiral has degrees `deg`.
fn windup(deg: &[usize]) -> Option<PlaneGraph> {
    let n = deg.len();
    let mut rot: Vec<VecDeque<usize>> = vec![VecDeque::new(); n];
    let mut open: Vec<i64> = deg.iter().map(|&d| d as i64).collect();
    let connect = |open: &mut Vec<i64>, u: usize, v: usize| {
        open[u] -= 1;
        open[v] -= 1;
    };
    // rotations run clockwise from the boundary predecessor, through the
    // interior, to the boundary successor
    rot[0] = VecDeque::from([2, 1]);
    rot[1] = VecDeque::from([0, 2]);
    rot[2] = VecDeque::from([1, 0]);
    for (u, v) in [(0, 1), (1, 2), (2, 0)] {
        connect(&mut open, u, v);
    }
    let mut cyc: VecDeque<usize> = VecDeque::from([0, 1, 2]);
    for k in 3..n {
        let (front, back) = (*cyc.front()?, *cyc.back()?);
        connect(&mut open, k, back);
        connect(&mut open, k, front);
        rot[back].push_back(k);
        rot[front].push_front(k);
        rot[k] = VecDeque::from([back, front]);
        loop {
            let f = *cyc.front()?;
            if open[f] != 0 || cyc.len() < 2 {
                break;
            }
            cyc.pop_front();
            if cyc.len() < 2 {
                break;
            }
            let nf = *cyc.front()?;
            connect(&mut open, k, nf);
            rot[nf].push_front(k);
            rot[k].push_back(nf);
        }
        loop {
            let b = *cyc.back()?;
            if open[b] != 0 || cyc.len() < 2 {
                break;
            }
            cyc.pop_back();
            if cyc.len() < 2 {
                break;
            }
            let nb = *cyc.back()?;
            connect(&mut open, k, nb);
            rot[nb].push_back(k);
            rot[k].push_front(nb);
        }
        cyc.push_back(k);
        if open.iter().any(|&x| x < 0) {
            return None;
        }
    }
    if open.iter().any(|&x| x != 0) {
        return None;
    }
    let lists: Vec<Vec<usize>> = rot.into_iter().map(Vec::from).collect();
    let g = build_plane_graph(&lists).ok()?;
    (g.is_simple() && (0..n).all(|v| g.degree(v) == deg[v])).then_some(g)
}

/// All degree sequences of length `n`, entries at least 5, summing to `6n - 12`.
fn sequences(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i + 1 == cur.len() {
            cur[i] = 5 + left;
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = 5 + e;
            go(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    go(0, n - 12, &mut vec![0; n], &mut out);
    out
}

fn triangulations(n: usize) -> BTreeMap<CanonicalCode, PlaneGraph> {
    let mut found = BTreeMap::new();
    for seq in sequences(n) {
        if let Some(g) = windup(&seq) {
            found.entry(g.canonical_code()).or_insert(g);
        }
    }
    found
}

/// All ways to delete `k` edges from `t` keeping minimum degree 5.
fn deletions(t: &PlaneGraph, k: usize, out: &mut BTreeMap<CanonicalCode, PlaneGraph>) {
    let edges: Vec<(usize, usize)> = t.underlying().edges().collect();
    let mut pick = Vec::new();
    type Found = BTreeMap<CanonicalCode, PlaneGraph>;
    fn rec(t: &PlaneGraph, edges: &[(usize, usize)], from: usize, k: usize, pick: &mut Vec<(usize, usize)>, out: &mut Found) {
        if pick.len() == k {
            let mut lists = t.rotation_lists();
            for &(u, v) in pick.iter() {
                lists[u].retain(|&x| x != v);
                lists[v].retain(|&x| x != u);
            }
            if let Ok(g) = build_plane_graph(&lists) {
                if g.min_degree() >= 5 {
                    out.entry(g.canonical_code()).or_insert(g);
                }
            }
            return;
        }
        for i in from..edges.len() {
            pick.push(edges[i]);
            rec(t, edges, i + 1, k, pick, out);
            pick.pop();
        }
    }
    rec(t, &edges, 0, k, &mut pick, out);
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let out_dir = args.get(1).map(String::as_str).unwrap_or("fixtures/d5");
    let f_min: usize = args.get(2).map_or(20, |s| s.parse().expect("f_min"));
    let f_max: usize = args.get(3).map_or(26, |s| s.parse().expect("f_max"));
    assert!(f_max <= 26, "the triangulation-minus-two-edges argument only covers f <= 26");
    let mut tri = BTreeMap::new();
    for n in 12..=16 {
        let t = triangulations(n);
        assert_eq!(t.len(), KNOWN[n - 12], "triangulations of order {n}");
        tri.insert(n, t);
    }
    std::fs::create_dir_all(out_dir).expect("create output directory");
    for f in f_min..=f_max {
        let mut d5 = BTreeMap::new();
        // v - e + f = 2 with e = 3v - 6 - k
        for (&v, ts) in &tri {
            let e = (v + f) as i64 - 2;
            let k = 3 * v as i64 - 6 - e;
            if !(0..=2).contains(&k) {
                continue;
            }
            for t in ts.values() {
                deletions(t, k as usize, &mut d5);
            }
        }
        let graphs: Vec<PlaneGraph> = d5.into_values().filter(|g| g.num_faces() == f).collect();
        let bytes = write_planar_code(&graphs, true).expect("orders fit in one byte");
        let path = format!("{out_dir}/d5_{f}.pc");
        std::fs::write(&path, bytes).expect("write seed file");
        println!("{path}: {} graphs", graphs.len());
    }
}
