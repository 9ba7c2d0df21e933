//! Plane-embedded multigraphs stored as rotation systems.
//!
//! Every edge is split into two darts. `next_at_vertex` walks clockwise
//! around the origin of a dart, and faces are the orbits of
//! `d -> next_at_vertex(twin(d))`. A rotation system is accepted only if it is
//! connected and satisfies `n - m + f = 2`, i.e. it describes a sphere.

mod canonical;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::sequence::{DegreeSequence, FaceSequence};
use crate::simple::SimpleGraph;

pub use canonical::{canonical_code, CanonicalCode};

/// Upper bound on the number of edge pairings tried when neighbor lists with
/// parallel edges or loops leave the embedding ambiguous.
const MAX_PAIRING_CANDIDATES: usize = 1 << 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlaneError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} lists out-of-range neighbor {neighbor}")]
    VertexOutOfRange { vertex: usize, neighbor: usize },
    #[error("inconsistent rotation: incidences between {u} and {v} do not match")]
    InconsistentRotation { u: usize, v: usize },
    #[error("rotation system is not planar (n - m + f = {euler})")]
    NotPlanar { euler: i64 },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("malformed canonical code")]
    MalformedCode,
}

/// A read-only view of one dart.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dart {
    pub id: usize,
    pub origin: usize,
    pub twin: usize,
    pub next_at_vertex: usize,
}

/// A connected plane multigraph given by its rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    origin: Vec<usize>,
    twin: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
    /// Position of each dart in its vertex rotation, counted from `first`.
    pos: Vec<usize>,
    first: Vec<usize>,
    degree: Vec<usize>,
    face_of: Vec<usize>,
    faces: Vec<Vec<usize>>,
    simple: bool,
}

/// Builds a plane graph from clockwise neighbor lists.
///
/// With loops or parallel edges the lists do not say which occurrences form
/// an edge; the first pairing (in a fixed order) that yields a sphere is used.
pub fn build_plane_graph(rotations: &[Vec<usize>]) -> Result<PlaneGraph, PlaneError> {
    PlaneGraph::from_rotations(rotations)
}

impl PlaneGraph {
    pub fn from_rotations(rotations: &[Vec<usize>]) -> Result<Self, PlaneError> {
        let n = rotations.len();
        if n == 0 {
            return Err(PlaneError::Empty);
        }
        for (v, list) in rotations.iter().enumerate() {
            if let Some(&w) = list.iter().find(|&&w| w >= n) {
                return Err(PlaneError::VertexOutOfRange { vertex: v, neighbor: w });
            }
        }
        if !SimpleGraph::from_adjacency(rotations).is_connected() {
            return Err(PlaneError::Disconnected);
        }

        let mut offset = Vec::with_capacity(n + 1);
        offset.push(0);
        for list in rotations {
            offset.push(offset.last().unwrap() + list.len());
        }
        let num_darts = offset[n];
        if num_darts % 2 == 1 {
            // some incidence is unmatched; locate it for the error
            return Err(first_mismatch(rotations));
        }

        // occurrences per unordered vertex pair, in rotation order at each end
        let mut classes: BTreeMap<(usize, usize), (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for (u, list) in rotations.iter().enumerate() {
            for (k, &w) in list.iter().enumerate() {
                let dart = offset[u] + k;
                let key = (u.min(w), u.max(w));
                let entry = classes.entry(key).or_default();
                if u <= w {
                    entry.0.push(dart);
                } else {
                    entry.1.push(dart);
                }
            }
        }

        let mut twin = vec![usize::MAX; num_darts];
        let mut choices: Vec<Vec<Vec<(usize, usize)>>> = Vec::new();
        for (&(u, v), (at_u, at_v)) in &classes {
            if u == v {
                if at_u.len() % 2 == 1 {
                    return Err(PlaneError::InconsistentRotation { u, v });
                }
                if at_u.len() == 2 {
                    set_pair(&mut twin, at_u[0], at_u[1]);
                } else {
                    choices.push(noncrossing_matchings(at_u));
                }
            } else {
                if at_u.len() != at_v.len() {
                    return Err(PlaneError::InconsistentRotation { u, v });
                }
                let k = at_u.len();
                if k == 1 {
                    set_pair(&mut twin, at_u[0], at_v[0]);
                } else {
                    // reversed cyclic order at the other end, any rotation
                    choices.push(
                        (0..k)
                            .map(|s| (0..k).map(|i| (at_u[i], at_v[(s + k - i) % k])).collect())
                            .collect(),
                    );
                }
            }
        }

        let rot: Vec<Vec<usize>> = (0..n).map(|v| (offset[v]..offset[v + 1]).collect()).collect();
        let mut counter = vec![0usize; choices.len()];
        let mut last_err = PlaneError::NotPlanar { euler: 0 };
        for _ in 0..MAX_PAIRING_CANDIDATES {
            let mut t = twin.clone();
            for (c, &i) in choices.iter().zip(&counter) {
                for &(a, b) in &c[i] {
                    set_pair(&mut t, a, b);
                }
            }
            match PlaneGraph::from_parts(rot.clone(), t) {
                Ok(g) => return Ok(g),
                Err(e) => last_err = e,
            }
            // mixed-radix increment
            let mut i = 0;
            loop {
                if i == counter.len() {
                    return Err(last_err);
                }
                counter[i] += 1;
                if counter[i] < choices[i].len() {
                    break;
                }
                counter[i] = 0;
                i += 1;
            }
        }
        Err(last_err)
    }

    /// Assembles a graph from per-vertex dart lists (clockwise) and a twin
    /// table. Dart ids in `rot` must be exactly `0..twin.len()`.
    pub(crate) fn from_parts(rot: Vec<Vec<usize>>, twin: Vec<usize>) -> Result<Self, PlaneError> {
        let n = rot.len();
        if n == 0 {
            return Err(PlaneError::Empty);
        }
        let num_darts = twin.len();
        // renumber darts in vertex order
        let mut new_id = vec![usize::MAX; num_darts];
        let mut origin = Vec::with_capacity(num_darts);
        let mut pos = Vec::with_capacity(num_darts);
        let mut first = Vec::with_capacity(n);
        let mut degree = Vec::with_capacity(n);
        for (v, list) in rot.iter().enumerate() {
            first.push(origin.len());
            degree.push(list.len());
            for (k, &d) in list.iter().enumerate() {
                assert!(new_id[d] == usize::MAX, "dart {d} listed twice");
                new_id[d] = origin.len();
                origin.push(v);
                pos.push(k);
            }
        }
        assert_eq!(origin.len(), num_darts, "dart lists do not cover the twin table");
        let mut new_twin = vec![0; num_darts];
        for (d, &t) in twin.iter().enumerate() {
            assert!(t < num_darts && t != d && twin[t] == d, "twin is not a fixed-point-free involution");
            new_twin[new_id[d]] = new_id[t];
        }
        let mut next = vec![0; num_darts];
        let mut prev = vec![0; num_darts];
        for v in 0..n {
            let (f, k) = (first[v], degree[v]);
            for i in 0..k {
                next[f + i] = f + (i + 1) % k;
                prev[f + (i + 1) % k] = f + i;
            }
        }

        let mut g = PlaneGraph {
            origin,
            twin: new_twin,
            next,
            prev,
            pos,
            first,
            degree,
            face_of: vec![usize::MAX; num_darts],
            faces: Vec::new(),
            simple: true,
        };
        if !g.darts_connected() {
            return Err(PlaneError::Disconnected);
        }
        g.trace_faces();
        let euler = g.n() as i64 - g.m() as i64 + g.num_faces() as i64;
        if euler != 2 {
            return Err(PlaneError::NotPlanar { euler });
        }
        g.simple = g.compute_simple();
        Ok(g)
    }

    fn darts_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for d in self.darts_at(v) {
                let w = self.target(d);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    fn trace_faces(&mut self) {
        let mut faces = Vec::new();
        for start in 0..self.num_darts() {
            if self.face_of[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                self.face_of[d] = id;
                walk.push(d);
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            faces.push(walk);
        }
        if faces.is_empty() {
            // a lone vertex still bounds one face
            faces.push(Vec::new());
        }
        self.faces = faces;
    }

    fn compute_simple(&self) -> bool {
        let mut mark = vec![usize::MAX; self.n()];
        for v in 0..self.n() {
            for d in self.darts_at(v) {
                let w = self.target(d);
                if w == v || mark[w] == v {
                    return false;
                }
                mark[w] = v;
            }
        }
        true
    }

    pub fn n(&self) -> usize {
        self.first.len()
    }

    pub fn m(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn num_darts(&self) -> usize {
        self.origin.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn dart(&self, d: usize) -> Dart {
        Dart {
            id: d,
            origin: self.origin[d],
            twin: self.twin[d],
            next_at_vertex: self.next[d],
        }
    }

    pub fn origin(&self, d: usize) -> usize {
        self.origin[d]
    }

    pub fn target(&self, d: usize) -> usize {
        self.origin[self.twin[d]]
    }

    pub fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }

    /// Clockwise successor of `d` around its origin.
    pub fn next_at_vertex(&self, d: usize) -> usize {
        self.next[d]
    }

    pub fn prev_at_vertex(&self, d: usize) -> usize {
        self.prev[d]
    }

    /// Successor of `d` along its face.
    pub fn face_next(&self, d: usize) -> usize {
        self.next[self.twin[d]]
    }

    pub fn first_dart(&self, v: usize) -> usize {
        self.first[v]
    }

    pub(crate) fn rotation_position(&self, d: usize) -> usize {
        self.pos[d]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    pub fn min_degree(&self) -> usize {
        self.degree.iter().copied().min().unwrap_or(0)
    }

    /// Darts leaving `v`, clockwise from its first dart.
    pub fn darts_at(&self, v: usize) -> std::ops::Range<usize> {
        self.first[v]..self.first[v] + self.degree[v]
    }

    /// Dart walks of all faces.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    pub fn face_of(&self, d: usize) -> usize {
        self.face_of[d]
    }

    pub fn face_size(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    /// Corner vertices of face `f` in walk order.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.faces[f].iter().map(|&d| self.origin[d]).collect()
    }

    /// Neighbor lists in clockwise order (with repetitions for parallel
    /// edges and loops).
    pub fn rotation_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n())
            .map(|v| self.darts_at(v).map(|d| self.target(d)).collect())
            .collect()
    }

    /// Dart from `u` to `v`, if any.
    pub fn find_dart(&self, u: usize, v: usize) -> Option<usize> {
        self.darts_at(u).find(|&d| self.target(d) == v)
    }

    /// The abstract simple graph underneath (loops and repeats dropped).
    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph::from_adjacency(&self.rotation_lists())
    }

    pub fn face_sequence(&self) -> FaceSequence {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        self.degree.iter().copied().collect()
    }

    /// Number of faces of the given size.
    pub fn count_faces_of_size(&self, size: usize) -> usize {
        self.faces.iter().filter(|f| f.len() == size).count()
    }

    /// Shortest cycle length; loops count 1, parallel pairs 2.
    pub fn girth(&self) -> Option<usize> {
        if (0..self.num_darts()).any(|d| self.origin(d) == self.target(d)) {
            return Some(1);
        }
        if !self.simple {
            return Some(2);
        }
        self.underlying().girth()
    }

    /// The dual plane graph. Vertex `i` of the dual is face `i`, and dart `d`
    /// of the dual crosses dart `d` of `self`.
    pub fn dual(&self) -> PlaneGraph {
        if self.num_darts() == 0 {
            return self.clone();
        }
        PlaneGraph::from_parts(self.faces.clone(), self.twin.clone())
            .expect("dual of a plane graph is plane")
    }

    /// The reflected embedding.
    pub fn mirror(&self) -> PlaneGraph {
        let rot = (0..self.n())
            .map(|v| {
                let mut l: Vec<usize> = self.darts_at(v).collect();
                l.reverse();
                l
            })
            .collect();
        PlaneGraph::from_parts(rot, self.twin.clone()).expect("mirror is plane")
    }

    /// The same embedding with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> PlaneGraph {
        assert_eq!(perm.len(), self.n());
        let mut rot = vec![Vec::new(); self.n()];
        for v in 0..self.n() {
            rot[perm[v]] = self.darts_at(v).collect();
        }
        PlaneGraph::from_parts(rot, self.twin.clone()).expect("relabeling keeps planarity")
    }

    /// The same embedding with each vertex rotation starting at a different
    /// dart: vertex `v` starts `shift[v]` steps later.
    pub fn rotated_starts(&self, shift: &[usize]) -> PlaneGraph {
        let rot = (0..self.n())
            .map(|v| {
                let mut l: Vec<usize> = self.darts_at(v).collect();
                if !l.is_empty() {
                    let k = shift[v] % l.len();
                    l.rotate_left(k);
                }
                l
            })
            .collect();
        PlaneGraph::from_parts(rot, self.twin.clone()).expect("rotation shift keeps planarity")
    }

    /// `G - v`. Vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<PlaneGraph, PlaneError> {
        let mut s = Surgery::from_graph(self);
        s.remove_vertex(v);
        s.build()
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        canonical_code(self)
    }

    /// Inverse of [`canonical_code`]: rebuilds a representative embedding.
    pub fn from_canonical_code(code: &CanonicalCode) -> Result<PlaneGraph, PlaneError> {
        canonical::decode(code)
    }

    /// Plane isomorphism, reflections included.
    pub fn is_isomorphic(&self, other: &PlaneGraph) -> bool {
        self.n() == other.n()
            && self.m() == other.m()
            && self.face_sequence() == other.face_sequence()
            && self.canonical_code() == other.canonical_code()
    }
}

fn set_pair(twin: &mut [usize], a: usize, b: usize) {
    twin[a] = b;
    twin[b] = a;
}

fn first_mismatch(rotations: &[Vec<usize>]) -> PlaneError {
    for (u, list) in rotations.iter().enumerate() {
        for &v in list {
            let here = list.iter().filter(|&&w| w == v).count();
            let there = rotations[v].iter().filter(|&&w| w == u).count();
            if here != there || (u == v && here % 2 == 1) {
                return PlaneError::InconsistentRotation { u, v };
            }
        }
    }
    PlaneError::InconsistentRotation { u: 0, v: 0 }
}

/// All perfect matchings of `items` (in cyclic order) without crossing pairs.
fn noncrossing_matchings(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for j in (1..items.len()).step_by(2) {
        for inner in noncrossing_matchings(&items[1..j]) {
            for outer in noncrossing_matchings(&items[j + 1..]) {
                let mut m = vec![(items[0], items[j])];
                m.extend(inner.iter().copied());
                m.extend(outer);
                out.push(m);
            }
        }
    }
    out
}

/// Mutable dart-level editing space used by the graph surgeries.
///
/// Dart ids are stable while editing; `build` compacts them and drops removed
/// vertices (renumbering the rest in order).
#[derive(Clone, Debug)]
pub(crate) struct Surgery {
    pub rot: Vec<Vec<usize>>,
    pub twin: Vec<usize>,
    pub alive: Vec<bool>,
}

impl Surgery {
    pub fn from_graph(g: &PlaneGraph) -> Self {
        Surgery {
            rot: (0..g.n()).map(|v| g.darts_at(v).collect()).collect(),
            twin: g.twin.clone(),
            alive: vec![true; g.n()],
        }
    }

    pub fn empty() -> Self {
        Surgery {
            rot: Vec::new(),
            twin: Vec::new(),
            alive: Vec::new(),
        }
    }

    /// Appends a disjoint copy of `g`, returning the vertex and dart offsets.
    pub fn append(&mut self, g: &PlaneGraph) -> (usize, usize) {
        let voff = self.rot.len();
        let doff = self.twin.len();
        for v in 0..g.n() {
            self.rot.push(g.darts_at(v).map(|d| d + doff).collect());
            self.alive.push(true);
        }
        self.twin.extend(g.twin.iter().map(|&t| t + doff));
        (voff, doff)
    }

    pub fn add_vertex(&mut self) -> usize {
        self.rot.push(Vec::new());
        self.alive.push(true);
        self.rot.len() - 1
    }

    /// Allocates a new edge; returns its two darts (not yet placed).
    pub fn new_edge(&mut self) -> (usize, usize) {
        let a = self.twin.len();
        self.twin.push(a + 1);
        self.twin.push(a);
        (a, a + 1)
    }

    /// Removes a dart and its twin from whichever rotations hold them.
    pub fn remove_edge(&mut self, d: usize) {
        let t = self.twin[d];
        for list in &mut self.rot {
            list.retain(|&x| x != d && x != t);
        }
    }

    /// Deletes `v` with all incident edges.
    pub fn remove_vertex(&mut self, v: usize) {
        let gone: Vec<usize> = self.rot[v].iter().map(|&d| self.twin[d]).collect();
        for list in &mut self.rot {
            list.retain(|x| !gone.contains(x));
        }
        self.rot[v].clear();
        self.alive[v] = false;
    }

    /// Drops `v` and its own darts only; the caller has already re-paired
    /// the twins of those darts.
    pub fn kill_vertex(&mut self, v: usize) {
        self.rot[v].clear();
        self.alive[v] = false;
    }

    /// Pairs darts `a` and `b` as one edge.
    pub fn link(&mut self, a: usize, b: usize) {
        self.twin[a] = b;
        self.twin[b] = a;
    }

    /// Replaces dart `old` in its rotation by the sequence `new`.
    pub fn replace_in_rotation(&mut self, old: usize, new: &[usize]) {
        for list in &mut self.rot {
            if let Some(i) = list.iter().position(|&x| x == old) {
                list.splice(i..=i, new.iter().copied());
                return;
            }
        }
        panic!("dart {old} is not placed");
    }

    pub fn build(self) -> Result<PlaneGraph, PlaneError> {
        let mut id = vec![usize::MAX; self.twin.len()];
        let mut count = 0;
        let mut rot = Vec::new();
        for (v, list) in self.rot.iter().enumerate() {
            if !self.alive[v] {
                continue;
            }
            for &d in list {
                id[d] = count;
                count += 1;
            }
            rot.push(list.clone());
        }
        let mut twin = vec![0; count];
        for (d, &new) in id.iter().enumerate() {
            if new != usize::MAX {
                let t = id[self.twin[d]];
                assert!(t != usize::MAX, "dart {d} placed without its twin");
                twin[new] = t;
            }
        }
        let rot = rot
            .into_iter()
            .map(|l| l.into_iter().map(|d| id[d]).collect())
            .collect();
        PlaneGraph::from_parts(rot, twin)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn k4_rotations() -> Vec<Vec<usize>> {
        // {1:[2,3,4], 2:[1,4,3], 3:[1,2,4], 4:[1,3,2]}, zero-based
        vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]
    }

    #[test]
    fn tetrahedron_counts() {
        let g = build_plane_graph(&k4_rotations()).unwrap();
        assert_eq!((g.n(), g.m(), g.num_faces()), (4, 6, 4));
        assert!(g.faces().iter().all(|f| f.len() == 3));
        assert!(g.is_simple());
    }

    #[test]
    fn single_edge_and_single_vertex() {
        let g = build_plane_graph(&[vec![1], vec![0]]).unwrap();
        assert_eq!((g.n(), g.m(), g.num_faces()), (2, 1, 1));
        let v = build_plane_graph(&[vec![]]).unwrap();
        assert_eq!((v.n(), v.m(), v.num_faces()), (1, 0, 1));
    }

    #[test]
    fn k5_is_rejected() {
        let rot: Vec<Vec<usize>> = (0..5)
            .map(|v| (1..5).map(|k| (v + k) % 5).collect())
            .collect();
        assert!(matches!(
            build_plane_graph(&rot),
            Err(PlaneError::NotPlanar { .. })
        ));
    }

    #[test]
    fn non_planar_rotation_of_k4_is_rejected() {
        // swap the order at one vertex only: genus 1 rotation of K4
        let mut rot = k4_rotations();
        rot[0] = vec![1, 3, 2];
        assert!(matches!(
            build_plane_graph(&rot),
            Err(PlaneError::NotPlanar { .. })
        ));
    }

    #[test]
    fn inconsistent_and_disconnected_inputs() {
        assert!(matches!(
            build_plane_graph(&[vec![1, 1], vec![0]]),
            Err(PlaneError::InconsistentRotation { .. })
        ));
        assert!(matches!(
            build_plane_graph(&[vec![1], vec![0], vec![3], vec![2]]),
            Err(PlaneError::Disconnected)
        ));
        assert!(matches!(
            build_plane_graph(&[vec![5]]),
            Err(PlaneError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn multigraphs_are_paired_onto_the_sphere() {
        // digon with a pendant vertex inside one of the two faces
        let g = build_plane_graph(&[vec![1, 1], vec![0, 2, 0], vec![1]]).unwrap();
        assert_eq!((g.n(), g.m(), g.num_faces()), (3, 3, 2));
        assert!(!g.is_simple());
        assert_eq!(g.girth(), Some(2));
        // vertex with two loops, nested or side by side
        let h = build_plane_graph(&[vec![0, 0, 0, 0, 1], vec![0]]).unwrap();
        assert_eq!((h.n(), h.m(), h.num_faces()), (2, 3, 3));
        assert_eq!(h.girth(), Some(1));
    }

    #[test]
    fn platonic_faces() {
        assert_eq!(fixtures::dodecahedron().face_sequence().to_string(), "12×5");
        assert_eq!(fixtures::dodecahedron().degree_sequence().to_string(), "20×3");
        assert_eq!(fixtures::cube().face_sequence().to_string(), "6×4");
        assert_eq!(fixtures::icosahedron().face_sequence().to_string(), "20×3");
        assert_eq!(fixtures::octahedron().face_sequence().to_string(), "8×3");
    }

    #[test]
    fn face_walks_partition_the_darts() {
        for g in fixtures::plane_fixtures() {
            let total: usize = g.faces().iter().map(Vec::len).sum();
            assert_eq!(total, 2 * g.m());
            let deg: usize = (0..g.n()).map(|v| g.degree(v)).sum();
            assert_eq!(deg, 2 * g.m());
            for (f, walk) in g.faces().iter().enumerate() {
                for (i, &d) in walk.iter().enumerate() {
                    assert_eq!(g.face_of(d), f);
                    let nxt = walk[(i + 1) % walk.len()];
                    assert_eq!(g.target(d), g.origin(nxt), "face walk is closed");
                }
            }
        }
    }

    #[test]
    fn duals_of_platonic_solids() {
        let d = fixtures::icosahedron().dual();
        assert_eq!(d.n(), 20);
        assert!((0..20).all(|v| d.degree(v) == 3));
        assert!(d.is_simple());
        assert!(d.is_isomorphic(&fixtures::dodecahedron()));
        assert!(fixtures::tetrahedron().dual().is_isomorphic(&fixtures::tetrahedron()));
        let oct = fixtures::cube().dual();
        assert_eq!(oct.n(), 6);
        assert!((0..6).all(|v| oct.degree(v) == 4));
        assert!(oct.is_isomorphic(&fixtures::octahedron()));
    }

    #[test]
    fn dual_of_dual_is_the_original() {
        for g in fixtures::plane_fixtures() {
            assert!(g.dual().dual().is_isomorphic(&g));
        }
    }

    #[test]
    fn dual_simplicity_flag() {
        // a path has one face, touching itself along every edge
        let p = build_plane_graph(&[vec![1], vec![0, 2], vec![1]]).unwrap();
        assert!(!p.dual().is_simple());
        assert!(fixtures::cube().dual().is_simple());
    }

    #[test]
    fn vertex_deletion() {
        let g = fixtures::cube().delete_vertex(0).unwrap();
        assert_eq!((g.n(), g.m()), (7, 9));
        assert_eq!(g.n() as i64 - g.m() as i64 + g.num_faces() as i64, 2);
        let star = build_plane_graph(&[vec![1, 2, 3], vec![0], vec![0], vec![0]]).unwrap();
        assert_eq!(star.delete_vertex(0), Err(PlaneError::Disconnected));
    }
}
