//! Surgeries that combine several graphs: the four-graph join and vertex
//! insertion, plus edge contraction.

use super::TransformError;
use crate::plane::{PlaneGraph, Surgery};
use crate::simple::SimpleGraph;

fn cubic_ports(g: &SimpleGraph, w: usize) -> Result<[usize; 3], TransformError> {
    if w >= g.n() || g.degree(w) != 3 {
        return Err(TransformError::NotCubic(w));
    }
    let nb = g.neighbors(w);
    Ok([nb[0], nb[1], nb[2]])
}

/// Joins four graphs at cubic vertices `w_i` with neighbors `a_i, b_i, c_i`
/// (neighbor-list order): deletes every `w_i`, identifies `a1 = a2` and
/// `a3 = a4`, and adds the edges `b1b3, c1c3, b2b4, c2c4`. When the four
/// graphs are hypohamiltonian the result is hypotraceable.
///
/// Vertices of `gs[i] - w_i` keep their relative order, blocks follow in
/// input order; `a2` and `a4` disappear into `a1` and `a3`.
pub fn join4_hypotraceable(gs: [&SimpleGraph; 4], ws: [usize; 4]) -> Result<SimpleGraph, TransformError> {
    let mut ports = [[0; 3]; 4];
    for i in 0..4 {
        ports[i] = cubic_ports(gs[i], ws[i])?;
    }
    let mut offset = [0; 4];
    for i in 1..4 {
        offset[i] = offset[i - 1] + gs[i - 1].n();
    }
    let total = offset[3] + gs[3].n();
    // global id -> compact id
    let mut rep: Vec<usize> = (0..total).collect();
    rep[offset[1] + ports[1][0]] = offset[0] + ports[0][0];
    rep[offset[3] + ports[3][0]] = offset[2] + ports[2][0];
    let mut dead = vec![false; total];
    for i in 0..4 {
        dead[offset[i] + ws[i]] = true;
    }
    dead[offset[1] + ports[1][0]] = true;
    dead[offset[3] + ports[3][0]] = true;
    let mut id = vec![usize::MAX; total];
    let mut n = 0;
    for v in 0..total {
        if !dead[v] {
            id[v] = n;
            n += 1;
        }
    }
    let map = |v: usize| id[rep[v]];
    let mut out = SimpleGraph::new(n);
    for i in 0..4 {
        for (u, v) in gs[i].edges() {
            if u != ws[i] && v != ws[i] {
                out.add_edge(map(offset[i] + u), map(offset[i] + v));
            }
        }
    }
    let port = |i: usize, k: usize| map(offset[i] + ports[i][k]);
    for (i, j) in [(0, 2), (1, 3)] {
        for k in 1..3 {
            if !out.add_edge(port(i, k), port(j, k)) {
                return Err(TransformError::ConstructionFailure(format!(
                    "link between blocks {i} and {j} already present"
                )));
            }
        }
    }
    Ok(out)
}

/// Owner vertex of a placed dart.
fn owner(s: &Surgery, d: usize) -> usize {
    s.rot.iter().position(|l| l.contains(&d)).expect("dart is placed")
}

/// Splices the rotation of `b` into that of `a`: the darts of `b` following
/// `db` take the place of `da`. Afterwards `b` is dropped.
fn merge_at(s: &mut Surgery, da: usize, db: usize) {
    let b = owner(s, db);
    let lb = std::mem::take(&mut s.rot[b]);
    let j = lb.iter().position(|&x| x == db).unwrap();
    let spliced: Vec<usize> = lb[j + 1..].iter().chain(&lb[..j]).copied().collect();
    s.replace_in_rotation(da, &spliced);
    s.kill_vertex(b);
}

/// Darts at the neighbors of a cubic `w` pointing back at `w`, in the
/// rotation order of `w`.
fn plane_ports(s: &Surgery, w: usize) -> Result<[usize; 3], TransformError> {
    let rot = &s.rot[w];
    if rot.len() != 3 {
        return Err(TransformError::NotCubic(w));
    }
    Ok([s.twin[rot[0]], s.twin[rot[1]], s.twin[rot[2]]])
}

/// Plane version of [`join4_hypotraceable`]. Ports follow the rotation at
/// each `w_i`. Copies may be reflected and the roles of `b_i, c_i` swapped
/// until the result is plane.
pub fn join4_plane(gs: [&PlaneGraph; 4], ws: [usize; 4]) -> Result<PlaneGraph, TransformError> {
    for i in 0..4 {
        if ws[i] >= gs[i].n() || gs[i].degree(ws[i]) != 3 {
            return Err(TransformError::NotCubic(ws[i]));
        }
        let t: Vec<usize> = gs[i].darts_at(ws[i]).map(|d| gs[i].target(d)).collect();
        if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] || t.contains(&ws[i]) {
            return Err(TransformError::NotCubic(ws[i]));
        }
    }
    let mirrored: Vec<PlaneGraph> = gs.iter().map(|g| g.mirror()).collect();
    for mirror in 0..16u32 {
        for swap in 0..16u32 {
            let mut s = Surgery::empty();
            let mut ports = [[0; 3]; 4];
            let mut wv = [0; 4];
            for i in 0..4 {
                let g = if mirror >> i & 1 == 1 { &mirrored[i] } else { gs[i] };
                let (voff, _) = s.append(g);
                wv[i] = voff + ws[i];
                ports[i] = plane_ports(&s, wv[i])?;
                if swap >> i & 1 == 1 {
                    ports[i].swap(1, 2);
                }
            }
            for (i, j) in [(0, 2), (1, 3)] {
                for k in 1..3 {
                    s.link(ports[i][k], ports[j][k]);
                }
            }
            for w in wv {
                s.kill_vertex(w);
            }
            merge_at(&mut s, ports[0][0], ports[1][0]);
            merge_at(&mut s, ports[2][0], ports[3][0]);
            if let Ok(g) = s.build() {
                return Ok(g);
            }
        }
    }
    Err(TransformError::ConstructionFailure("no plane wiring of the four-graph join".into()))
}

/// Result of inserting `G` into `H`: copy `h` of `G - w` occupies vertices
/// `h * block .. (h + 1) * block` in the order of `G - w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Insertion {
    pub graph: SimpleGraph,
    /// The edges coming from `H`.
    pub h_edges: Vec<(usize, usize)>,
    pub block: usize,
}

/// Replaces every vertex of the cubic graph `H` by a copy of `G - w` and
/// joins the copies along the edges of `H`. At vertex `h`, the edge to the
/// `k`-th neighbor of `h` attaches to the `k`-th neighbor of `w`.
pub fn insert_into(g: &SimpleGraph, w: usize, h: &SimpleGraph) -> Result<Insertion, TransformError> {
    let ports = cubic_ports(g, w)?;
    if let Some(v) = (0..h.n()).find(|&v| h.degree(v) != 3) {
        return Err(TransformError::NotCubic(v));
    }
    let block = g.n() - 1;
    let local = |v: usize| if v > w { v - 1 } else { v };
    let mut out = SimpleGraph::new(h.n() * block);
    for c in 0..h.n() {
        for (u, v) in g.edges() {
            if u != w && v != w {
                out.add_edge(c * block + local(u), c * block + local(v));
            }
        }
    }
    let mut h_edges = Vec::with_capacity(h.m());
    for (x, y) in h.edges() {
        let kx = h.neighbors(x).iter().position(|&z| z == y).unwrap();
        let ky = h.neighbors(y).iter().position(|&z| z == x).unwrap();
        let e = (x * block + local(ports[kx]), y * block + local(ports[ky]));
        out.add_edge(e.0, e.1);
        h_edges.push(e);
    }
    Ok(Insertion { graph: out, h_edges, block })
}

/// Plane insertion. At `h`, the H-edges in clockwise order attach to the
/// neighbors of `w` in counterclockwise order, which keeps the embedding
/// plane; the copy of `G` is reflected if that fails.
pub fn insert_into_plane(g: &PlaneGraph, w: usize, h: &PlaneGraph) -> Result<PlaneGraph, TransformError> {
    if w >= g.n() || g.degree(w) != 3 {
        return Err(TransformError::NotCubic(w));
    }
    if let Some(v) = (0..h.n()).find(|&v| h.degree(v) != 3) {
        return Err(TransformError::NotCubic(v));
    }
    let mirrored = g.mirror();
    for copy in [g, &mirrored] {
        for reverse in [true, false] {
            let mut s = Surgery::empty();
            let mut ports = Vec::with_capacity(h.n());
            for _ in 0..h.n() {
                let (voff, _) = s.append(copy);
                let mut p = plane_ports(&s, voff + w)?;
                if reverse {
                    p.swap(1, 2);
                }
                ports.push((voff + w, p));
            }
            for d in 0..h.num_darts() {
                let t = h.twin(d);
                if d < t {
                    let (x, y) = (h.origin(d), h.origin(t));
                    let kx = d - h.first_dart(x);
                    let ky = t - h.first_dart(y);
                    s.link(ports[x].1[kx], ports[y].1[ky]);
                }
            }
            for &(wv, _) in &ports {
                s.kill_vertex(wv);
            }
            if let Ok(out) = s.build() {
                return Ok(out);
            }
        }
    }
    Err(TransformError::ConstructionFailure("no plane wiring of the insertion".into()))
}

/// Contracts the given edges, dropping loops and merging parallel edges.
/// Contracted classes are numbered by their smallest vertex.
pub fn contract_edges(g: &SimpleGraph, edges: &[(usize, usize)]) -> SimpleGraph {
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut parent: Vec<usize> = (0..g.n()).collect();
    for &(u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        parent[ru.max(rv)] = ru.min(rv);
    }
    let mut id = vec![usize::MAX; g.n()];
    let mut n = 0;
    for v in 0..g.n() {
        let r = find(&mut parent, v);
        if id[r] == usize::MAX {
            id[r] = n;
            n += 1;
        }
        id[v] = id[r];
    }
    SimpleGraph::from_edges(n, g.edges().map(|(u, v)| (id[u], id[v])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hamilton::{is_hypotraceable, HypoVerdict};
    use crate::transforms::thomassen;

    fn euler(g: &PlaneGraph) -> i64 {
        g.n() as i64 - g.m() as i64 + g.num_faces() as i64
    }

    #[test]
    fn petersen_join_is_hypotraceable() {
        let p = fixtures::petersen();
        let j = join4_hypotraceable([&p, &p, &p, &p], [0; 4]).unwrap();
        assert_eq!(j.n(), 34);
        let report = is_hypotraceable(&j);
        assert_eq!(report.verdict, HypoVerdict::Hypotraceable);
        assert_eq!(report.witnesses.len(), 34);
    }

    #[test]
    fn join_rejects_non_cubic() {
        let p = fixtures::petersen();
        let k = fixtures::complete(5);
        assert_eq!(join4_hypotraceable([&p, &p, &k, &p], [0; 4]), Err(TransformError::NotCubic(0)));
    }

    fn order_40() -> PlaneGraph {
        let mut g = fixtures::cube();
        let mut face = 0;
        for _ in 0..8 {
            let r = thomassen(&g, face).unwrap();
            g = r.graph;
            face = r.face;
        }
        g
    }

    #[test]
    fn plane_join_sizes() {
        let g = order_40();
        let j = join4_plane([&g, &g, &g, &g], [0; 4]).unwrap();
        assert_eq!(j.n(), 154);
        assert_eq!(euler(&j), 2);
        let c = fixtures::cube();
        let j = join4_plane([&c, &c, &c, &c], [0, 3, 5, 7]).unwrap();
        assert_eq!(j.n(), 26);
        assert!(j.is_simple());
    }

    #[test]
    fn insertion_sizes() {
        let k4 = fixtures::complete(4);
        let p = fixtures::petersen();
        assert_eq!(insert_into(&p, 0, &k4).unwrap().graph.n(), 36);
        let ins = insert_into(&k4, 0, &k4).unwrap();
        assert_eq!(ins.graph.n(), 12);
        assert!((0..12).all(|v| ins.graph.degree(v) == 3));
        let oct = contract_edges(&ins.graph, &ins.h_edges);
        assert_eq!((oct.n(), oct.m()), (6, 12));
        assert!((0..6).all(|v| oct.degree(v) == 4));
        assert_eq!(insert_into(&k4, 0, &fixtures::complete(5)), Err(TransformError::NotCubic(0)));
    }

    #[test]
    fn plane_insertion() {
        let g = order_40();
        let tetra = fixtures::tetrahedron();
        let out = insert_into_plane(&g, 0, &tetra).unwrap();
        assert_eq!(out.n(), 156);
        assert_eq!(euler(&out), 2);
        let out = insert_into_plane(&tetra, 0, &fixtures::cube()).unwrap();
        assert_eq!((out.n(), out.m()), (24, 36));
    }

    #[test]
    fn contraction() {
        let k4 = fixtures::complete(4);
        let k3 = contract_edges(&k4, &[(0, 1)]);
        assert_eq!((k3.n(), k3.m()), (3, 3));
        assert_eq!(contract_edges(&k4, &[]), k4);
        // a contracted cycle collapses to one vertex
        let c = fixtures::cycle(5);
        let all: Vec<_> = c.edges().collect();
        assert_eq!(contract_edges(&c, &all).n(), 1);
    }
}
