//! Face-level surgeries on rotation systems.
//!
//! Naming follows one face walk `a, b, c, d` with `a: v1 -> v2`,
//! `b: v2 -> v3`, `c: v3 -> v4`, `d: v4 -> v1`. Since faces are traced by
//! `d -> next_at_vertex(twin(d))`, the reverse of each walk dart is directly
//! followed by the next walk dart in the rotation of their common vertex.

use serde::{Deserialize, Serialize};

use super::TransformError;
use crate::plane::{PlaneGraph, Surgery};

/// Which opposite pair of corners of a 4-face is merged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MergePair {
    /// Corners at walk positions 1 and 3.
    SecondFourth,
    /// Corners at walk positions 0 and 2.
    FirstThird,
}

fn edge_id(g: &PlaneGraph, d: usize) -> usize {
    d.min(g.twin(d))
}

/// Darts after `from` up to, not including, `to`, clockwise around their
/// common vertex.
fn arc(g: &PlaneGraph, from: usize, to: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = g.next_at_vertex(from);
    while d != to {
        out.push(d);
        d = g.next_at_vertex(d);
    }
    out
}

/// The four walk darts of a 4-face bounded by four distinct edges.
fn four_face(g: &PlaneGraph, face: usize) -> Result<[usize; 4], TransformError> {
    if face >= g.num_faces() || g.face_size(face) != 4 {
        return Err(TransformError::NotAFourFace(face));
    }
    let w = g.face(face);
    let mut edges: Vec<usize> = w.iter().map(|&d| edge_id(g, d)).collect();
    edges.sort_unstable();
    edges.dedup();
    if edges.len() != 4 {
        return Err(TransformError::DegenerateFace(face));
    }
    Ok([w[0], w[1], w[2], w[3]])
}

/// Squeezes a 4-face into a path of length two by merging one pair of
/// opposite corners. The merged vertex takes the lower of the two ids and
/// higher ids shift down by one.
pub fn deflate_4face(g: &PlaneGraph, face: usize, pair: MergePair) -> Result<PlaneGraph, TransformError> {
    let w = four_face(g, face)?;
    let off = match pair {
        MergePair::SecondFourth => 0,
        MergePair::FirstThird => 1,
    };
    let [a, b, c, d] = [w[off], w[(off + 1) % 4], w[(off + 2) % 4], w[(off + 3) % 4]];
    let (v2, v4) = (g.origin(b), g.origin(d));
    if v2 == v4 || g.find_dart(v2, v4).is_some() {
        return Err(TransformError::MergeCreatesLoop(v2, v4));
    }
    // v2 = [ta, b, X2], v4 = [tc, d, X4]; the merged vertex is [ta, X4, b, X2]
    let (ta, tc) = (g.twin(a), g.twin(c));
    let x2 = arc(g, b, ta);
    let x4 = arc(g, d, tc);
    let mut merged = vec![ta];
    merged.extend(x4);
    merged.push(b);
    merged.extend(x2);

    let (keep, gone) = (v2.min(v4), v2.max(v4));
    let mut s = Surgery::from_graph(g);
    s.remove_edge(c);
    s.remove_edge(d);
    s.rot[keep] = merged;
    s.kill_vertex(gone);
    Ok(s.build()?)
}

/// Deflates with the first merge pair that is legal.
pub fn deflate_any(g: &PlaneGraph, face: usize) -> Result<PlaneGraph, TransformError> {
    deflate_4face(g, face, MergePair::SecondFourth).or_else(|e| match e {
        TransformError::MergeCreatesLoop(..) => deflate_4face(g, face, MergePair::FirstThird),
        other => Err(other),
    })
}

/// A 2-path `v1 - center - v3` to be inflated into a 4-face. The darts of
/// the center strictly between `d1` and `d3` (clockwise) stay with the
/// center; the others move to the new vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InflationSite {
    pub center: usize,
    /// Dart from the center to `v1`.
    pub d1: usize,
    /// Dart from the center to `v3`.
    pub d3: usize,
}

impl InflationSite {
    fn validate(&self, g: &PlaneGraph) -> Result<(), TransformError> {
        let bad = |why: &str| Err(TransformError::InvalidSite(why.to_string()));
        if self.center >= g.n() || self.d1 >= g.num_darts() || self.d3 >= g.num_darts() {
            return bad("out of range");
        }
        if g.origin(self.d1) != self.center || g.origin(self.d3) != self.center {
            return bad("darts do not leave the center");
        }
        if self.d1 == self.d3 {
            return bad("identical darts");
        }
        let (v1, v3) = (g.target(self.d1), g.target(self.d3));
        if v1 == self.center || v3 == self.center {
            return bad("loop dart");
        }
        if v1 == v3 {
            return bad("both darts reach the same vertex");
        }
        Ok(())
    }
}

/// All inflation sites: every center and every unordered pair of its darts
/// reaching two distinct other vertices. Swapping `d1` and `d3` yields the
/// same graph, so each pair is listed once.
pub fn enumerate_inflations(g: &PlaneGraph) -> Vec<InflationSite> {
    let mut out = Vec::new();
    for v in 0..g.n() {
        let darts: Vec<usize> = g.darts_at(v).collect();
        for (i, &d1) in darts.iter().enumerate() {
            for &d3 in &darts[i + 1..] {
                let site = InflationSite { center: v, d1, d3 };
                if site.validate(g).is_ok() {
                    out.push(site);
                }
            }
        }
    }
    out
}

/// Splits the center of a 2-path into two vertices, creating a 4-face.
///
/// The new vertex gets id `g.n()`; its first two darts lead to `v1` and
/// `v3`, and the second one lies on the new 4-face.
pub fn inflate_2path(g: &PlaneGraph, site: InflationSite) -> Result<PlaneGraph, TransformError> {
    site.validate(g)?;
    let InflationSite { center, d1, d3 } = site;
    let arc_a = arc(g, d1, d3);
    let arc_b = arc(g, d3, d1);
    let mut s = Surgery::from_graph(g);
    let q = s.add_vertex();
    let (q1, t1) = s.new_edge();
    let (q3, t3) = s.new_edge();
    let mut p_rot = vec![d1];
    p_rot.extend(arc_a);
    p_rot.push(d3);
    let mut q_rot = vec![q1, q3];
    q_rot.extend(arc_b);
    s.rot[center] = p_rot;
    s.rot[q] = q_rot;
    s.replace_in_rotation(g.twin(d1), &[g.twin(d1), t1]);
    s.replace_in_rotation(g.twin(d3), &[t3, g.twin(d3)]);
    Ok(s.build()?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThomassenResult {
    pub graph: PlaneGraph,
    /// The new 4-cycle `v1' v2' v3' v4'`.
    pub square: [usize; 4],
    /// The face it bounds.
    pub face: usize,
}

/// The Thomassen operation on a 4-face `v1 v2 v3 v4` with cubic corners:
/// deletes `v1v2` and `v3v4`, adds a 4-cycle `v1'v2'v3'v4'` inside the face
/// and the spokes `vi vi'`. New vertices get ids `n..n + 4`.
pub fn thomassen(g: &PlaneGraph, face: usize) -> Result<ThomassenResult, TransformError> {
    let [a, _, c, _] = four_face(g, face).map_err(|e| match e {
        TransformError::DegenerateFace(f) => TransformError::NotCubicFace(f),
        other => other,
    })?;
    let corners = g.face_vertices(face);
    let distinct = (0..4).all(|i| (i + 1..4).all(|j| corners[i] != corners[j]));
    if !distinct || corners.iter().any(|&v| g.degree(v) != 3) {
        return Err(TransformError::NotCubicFace(face));
    }
    let mut s = Surgery::from_graph(g);
    let p: Vec<usize> = (0..4).map(|_| s.add_vertex()).collect();
    // spokes reuse the positions of the deleted darts
    let mut inner = [0; 4];
    for (i, old) in [a, g.twin(a), c, g.twin(c)].into_iter().enumerate() {
        let (x, y) = s.new_edge();
        s.replace_in_rotation(old, &[x]);
        inner[i] = y;
    }
    let mut sq = [[0; 2]; 4];
    for i in 0..4 {
        let (x, y) = s.new_edge();
        sq[i] = [x, y];
    }
    // sq[i] joins p[i] (dart 0) and p[i + 1] (dart 1)
    let [s12, s21] = sq[0];
    let [s23, s32] = sq[1];
    let [s34, s43] = sq[2];
    let [s41, s14] = sq[3];
    s.rot[p[0]] = vec![s14, s12, inner[0]];
    s.rot[p[1]] = vec![s23, inner[1], s21];
    s.rot[p[2]] = vec![inner[2], s32, s34];
    s.rot[p[3]] = vec![s43, s41, inner[3]];
    let graph = s.build()?;
    let n = g.n();
    let square = [n, n + 1, n + 2, n + 3];
    let face = graph
        .faces()
        .iter()
        .position(|w| {
            let mut vs: Vec<usize> = w.iter().map(|&d| graph.origin(d)).collect();
            vs.sort_unstable();
            vs == square
        })
        .ok_or_else(|| TransformError::ConstructionFailure("new 4-cycle bounds no face".into()))?;
    Ok(ThomassenResult { graph, square, face })
}
