//! Canonical codes for connected plane graphs.
//!
//! A code is produced by a breadth-first dart labelling from a start dart in
//! one of the two orientations. Each vertex contributes its degree and, per
//! dart in rotation order, the label of the neighbor plus the position of the
//! returning dart in the neighbor's rotation. This determines the embedding
//! completely, multigraphs included, so the lexicographically smallest code
//! over all admissible starts identifies the graph up to orientation
//! preserving and reversing isomorphism.

use std::cmp::Ordering;
use std::collections::VecDeque;

use super::{PlaneError, PlaneGraph};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Box<[u16]>);

impl CanonicalCode {
    pub fn as_slice(&self) -> &[u16] {
        &self.0
    }

    pub fn from_words(words: Vec<u16>) -> Self {
        CanonicalCode(words.into_boxed_slice())
    }

    /// Little-endian byte serialization.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|w| w.to_le_bytes()).collect()
    }

    pub fn from_bytes(bytes: &[u8]) -> Option<Self> {
        if !bytes.len().is_multiple_of(2) {
            return None;
        }
        Some(CanonicalCode(
            bytes
                .chunks_exact(2)
                .map(|c| u16::from_le_bytes([c[0], c[1]]))
                .collect(),
        ))
    }
}

/// Canonical code of a connected plane graph (reflections identified).
pub fn canonical_code(g: &PlaneGraph) -> CanonicalCode {
    assert!(g.n() < u16::MAX as usize, "graph too large for a canonical code");
    let header = [g.n() as u16, g.m() as u16];
    if g.num_darts() == 0 {
        return CanonicalCode::from_words(vec![header[0], header[1], 0]);
    }

    // only start at darts with the smallest (degree, target degree) pair
    let key = |d: usize| (g.degree(g.origin(d)), g.degree(g.target(d)));
    let best_key = (0..g.num_darts()).map(key).min().unwrap();

    let mut best: Vec<u16> = Vec::new();
    let mut scratch = Labeller::new(g);
    for start in (0..g.num_darts()).filter(|&d| key(d) == best_key) {
        for mirror in [false, true] {
            if best.is_empty() {
                scratch.run(start, mirror, &mut best, None);
            } else {
                let mut cand = Vec::with_capacity(best.len());
                if scratch.run(start, mirror, &mut cand, Some(&best)) == Ordering::Less {
                    best = cand;
                }
            }
        }
    }
    let mut words = Vec::with_capacity(best.len() + 2);
    words.extend_from_slice(&header);
    words.extend(best);
    CanonicalCode::from_words(words)
}

struct Labeller<'g> {
    g: &'g PlaneGraph,
    label: Vec<u16>,
    first: Vec<usize>,
    queue: VecDeque<usize>,
}

impl<'g> Labeller<'g> {
    fn new(g: &'g PlaneGraph) -> Self {
        Labeller {
            g,
            label: vec![u16::MAX; g.n()],
            first: vec![0; g.n()],
            queue: VecDeque::new(),
        }
    }

    /// Writes the code body for one start into `out`. With `bound`, stops as
    /// soon as the partial code exceeds it and reports the comparison.
    fn run(&mut self, start: usize, mirror: bool, out: &mut Vec<u16>, bound: Option<&[u16]>) -> Ordering {
        let g = self.g;
        self.label.iter_mut().for_each(|l| *l = u16::MAX);
        self.queue.clear();
        let mut next_label = 0u16;
        let v0 = g.origin(start);
        self.label[v0] = next_label;
        next_label += 1;
        self.first[v0] = start;
        self.queue.push_back(v0);

        let mut order = Ordering::Equal;
        let mut emit = |out: &mut Vec<u16>, x: u16| -> bool {
            if order == Ordering::Equal {
                if let Some(b) = bound {
                    order = x.cmp(&b[out.len()]);
                    if order == Ordering::Greater {
                        return false;
                    }
                }
            }
            out.push(x);
            true
        };

        while let Some(v) = self.queue.pop_front() {
            let deg = g.degree(v);
            if !emit(out, deg as u16) {
                return Ordering::Greater;
            }
            let mut d = self.first[v];
            for _ in 0..deg {
                let t = g.twin(d);
                let w = g.origin(t);
                if self.label[w] == u16::MAX {
                    self.label[w] = next_label;
                    next_label += 1;
                    self.first[w] = t;
                    self.queue.push_back(w);
                }
                let dw = g.degree(w);
                let (pt, pf) = (g.rotation_position(t), g.rotation_position(self.first[w]));
                let offset = if mirror {
                    (pf + dw - pt) % dw
                } else {
                    (pt + dw - pf) % dw
                };
                if !emit(out, self.label[w]) || !emit(out, offset as u16) {
                    return Ordering::Greater;
                }
                d = if mirror {
                    g.prev_at_vertex(d)
                } else {
                    g.next_at_vertex(d)
                };
            }
        }
        order
    }
}

pub(super) fn decode(code: &CanonicalCode) -> Result<PlaneGraph, PlaneError> {
    let w = code.as_slice();
    let bad = || PlaneError::MalformedCode;
    let (&n, rest) = w.split_first().ok_or_else(bad)?;
    let (&m, body) = rest.split_first().ok_or_else(bad)?;
    let (n, m) = (n as usize, m as usize);
    if n == 0 {
        return Err(bad());
    }
    if m == 0 {
        return PlaneGraph::from_rotations(&vec![Vec::new(); n]);
    }
    // first pass: degrees and dart offsets
    let mut offset = Vec::with_capacity(n + 1);
    let mut entries = Vec::with_capacity(n);
    let mut i = 0;
    offset.push(0);
    for _ in 0..n {
        let deg = *body.get(i).ok_or_else(bad)? as usize;
        let pairs = body.get(i + 1..i + 1 + 2 * deg).ok_or_else(bad)?;
        entries.push(pairs);
        offset.push(offset.last().unwrap() + deg);
        i += 1 + 2 * deg;
    }
    if i != body.len() || offset[n] != 2 * m {
        return Err(bad());
    }
    let mut twin = vec![usize::MAX; 2 * m];
    for (v, pairs) in entries.iter().enumerate() {
        for (k, p) in pairs.chunks_exact(2).enumerate() {
            let (w, off) = (p[0] as usize, p[1] as usize);
            if w >= n || off >= offset[w + 1] - offset[w] {
                return Err(bad());
            }
            twin[offset[v] + k] = offset[w] + off;
        }
    }
    for (d, &t) in twin.iter().enumerate() {
        if t == d || twin[t] != d {
            return Err(bad());
        }
    }
    let rot = (0..n).map(|v| (offset[v]..offset[v + 1]).collect()).collect();
    PlaneGraph::from_parts(rot, twin)
}

#[cfg(test)]
mod tests {
    use crate::fixtures;
    use crate::plane::{build_plane_graph, PlaneGraph};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn invariant_under_relabeling_reflection_and_start_shifts() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in fixtures::plane_fixtures() {
            let code = g.canonical_code();
            for _ in 0..100 {
                let mut perm: Vec<usize> = (0..g.n()).collect();
                perm.shuffle(&mut rng);
                let shifts: Vec<usize> = (0..g.n()).map(|_| rng.gen_range(0..8)).collect();
                let mut h = g.relabeled(&perm).rotated_starts(&shifts);
                if rng.gen_bool(0.5) {
                    h = h.mirror();
                }
                assert_eq!(h.canonical_code(), code);
            }
        }
    }

    #[test]
    fn distinguishes_cube_and_octahedron() {
        assert_ne!(
            fixtures::cube().canonical_code(),
            fixtures::octahedron().canonical_code()
        );
        assert_ne!(
            fixtures::cube().canonical_code(),
            fixtures::cube().dual().canonical_code()
        );
    }

    #[test]
    fn decode_round_trip() {
        for g in fixtures::plane_fixtures() {
            let code = g.canonical_code();
            let back = PlaneGraph::from_canonical_code(&code).unwrap();
            assert_eq!(back.canonical_code(), code);
            assert_eq!(back.face_sequence(), g.face_sequence());
        }
        let multi = build_plane_graph(&[vec![1, 1, 2], vec![0, 0], vec![0]]).unwrap();
        let back = PlaneGraph::from_canonical_code(&multi.canonical_code()).unwrap();
        assert_eq!(back.canonical_code(), multi.canonical_code());
    }

    #[test]
    fn separates_embeddings_of_one_abstract_graph() {
        // two embeddings of the same multigraph: a pendant edge inside the
        // digon face vs. next to a loop
        let a = build_plane_graph(&[vec![1, 2, 1], vec![0, 0], vec![0]]).unwrap();
        let b = build_plane_graph(&[vec![1, 1, 2], vec![0, 0], vec![0]]).unwrap();
        assert_eq!(a.canonical_code(), b.canonical_code());
        let c = build_plane_graph(&[vec![0, 1, 0, 2], vec![0], vec![0]]).unwrap();
        let d = build_plane_graph(&[vec![0, 0, 1, 2], vec![0], vec![0]]).unwrap();
        assert_ne!(c.canonical_code(), d.canonical_code());
    }

    #[test]
    fn bytes_round_trip() {
        let code = fixtures::cube().canonical_code();
        let back = super::CanonicalCode::from_bytes(&code.to_bytes()).unwrap();
        assert_eq!(back, code);
    }
}
