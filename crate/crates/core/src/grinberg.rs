//! Grinberg's condition: sums over the faces on either side of a Hamiltonian
//! cycle, feasibility of face sequences, and the Grinbergian classification.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::connectivity::plane_connectivity;
use crate::hamilton::is_hypohamiltonian;
use crate::plane::PlaneGraph;
use crate::sequence::FaceSequence;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrinbergError {
    #[error("vertex sequence is not a Hamiltonian cycle of the graph")]
    NotHamiltonian,
    #[error("face size {0} is below 3")]
    InvalidFaceSize(usize),
    #[error("graph is not simple")]
    NotSimple,
    #[error("graph is not 3-connected")]
    NotThreeConnected,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
}

/// Faces inside (`f_i`) and outside (`f'_i`) a cycle, by size.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrinbergSplit {
    pub inside: FaceSequence,
    pub outside: FaceSequence,
}

impl GrinbergSplit {
    /// `sum_i (i - 2)(f_i - f'_i)`.
    pub fn sum(&self) -> i64 {
        let side = |s: &FaceSequence| s.iter().map(|(i, c)| (i as i64 - 2) * c as i64).sum::<i64>();
        side(&self.inside) - side(&self.outside)
    }

    pub fn total(&self) -> FaceSequence {
        let mut t = self.inside.clone();
        for (i, c) in self.outside.iter() {
            t.add(i, c);
        }
        t
    }
}

impl fmt::Display for GrinbergSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "inside [{}] / outside [{}]", self.inside, self.outside)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrinbergSum {
    pub sum: i64,
    pub split: GrinbergSplit,
}

/// Evaluates Grinberg's sum for a Hamiltonian cycle given as a vertex
/// sequence. Faces reachable from face 0 without crossing the cycle count as
/// outside.
pub fn grinberg_sum(g: &PlaneGraph, cycle: &[usize]) -> Result<GrinbergSum, GrinbergError> {
    if !g.underlying().is_hamiltonian_cycle(cycle, None) {
        return Err(GrinbergError::NotHamiltonian);
    }
    let mut on_cycle = vec![false; g.num_darts()];
    for (i, &a) in cycle.iter().enumerate() {
        let b = cycle[(i + 1) % cycle.len()];
        let d = g.find_dart(a, b).ok_or(GrinbergError::NotHamiltonian)?;
        on_cycle[d] = true;
        on_cycle[g.twin(d)] = true;
    }
    let mut outside = vec![false; g.num_faces()];
    outside[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(f) = queue.pop_front() {
        for &d in g.face(f) {
            if !on_cycle[d] {
                let h = g.face_of(g.twin(d));
                if !outside[h] {
                    outside[h] = true;
                    queue.push_back(h);
                }
            }
        }
    }
    let mut split = GrinbergSplit::default();
    for (f, &out) in outside.iter().enumerate() {
        let side = if out { &mut split.outside } else { &mut split.inside };
        side.add(g.face_size(f), 1);
    }
    Ok(GrinbergSum {
        sum: split.sum(),
        split,
    })
}

/// A split of `fs` satisfying Grinberg's equation, if any.
///
/// With `T = sum_i (i - 2) F_i` the equation asks for outside counts with
/// `sum_i (i - 2) f'_i = T / 2`, a bounded subset-sum solved by dynamic
/// programming.
pub fn grinberg_feasible(fs: &FaceSequence) -> Result<Option<GrinbergSplit>, GrinbergError> {
    if let Some(s) = fs.min_size().filter(|&s| s < 3) {
        return Err(GrinbergError::InvalidFaceSize(s));
    }
    let total: usize = fs.iter().map(|(i, c)| (i - 2) * c).sum();
    if total % 2 == 1 {
        return Ok(None);
    }
    let target = total / 2;
    let items: Vec<(usize, usize)> = fs.iter().collect();
    // choice[k][s]: copies of item k used to first reach s, or NONE
    const NONE: u32 = u32::MAX;
    let mut reach = vec![false; target + 1];
    reach[0] = true;
    let mut choice = Vec::with_capacity(items.len());
    for &(size, count) in &items {
        let w = size - 2;
        let mut row = vec![NONE; target + 1];
        let mut next = vec![false; target + 1];
        for s in 0..=target {
            if !reach[s] {
                continue;
            }
            for c in 0..=count {
                let t = s + c * w;
                if t > target {
                    break;
                }
                if !next[t] {
                    next[t] = true;
                    row[t] = c as u32;
                }
            }
        }
        choice.push(row);
        reach = next;
    }
    if !reach[target] {
        return Ok(None);
    }
    let mut split = GrinbergSplit::default();
    let mut s = target;
    for (k, &(size, count)) in items.iter().enumerate().rev() {
        let c = choice[k][s] as usize;
        split.outside.add(size, c);
        split.inside.add(size, count - c);
        s -= c * (size - 2);
    }
    debug_assert_eq!(s, 0);
    debug_assert_eq!(split.sum(), 0);
    Ok(Some(split))
}

/// Feasibility only, as a bitset subset-sum.
fn feasible_counts(counts: &[(usize, usize)]) -> bool {
    let total: usize = counts.iter().map(|&(i, c)| (i - 2) * c).sum();
    if total % 2 == 1 {
        return false;
    }
    let target = total / 2;
    let words = target / 64 + 1;
    let mut reach = vec![0u64; words];
    reach[0] = 1;
    for &(size, count) in counts {
        let w = size - 2;
        for _ in 0..count.min(target / w) {
            let before = reach.clone();
            shift_or(&mut reach, &before, w);
            if reach == before {
                break;
            }
        }
    }
    reach[target / 64] >> (target % 64) & 1 == 1
}

fn shift_or(dst: &mut [u64], src: &[u64], by: usize) {
    let (wq, br) = (by / 64, by % 64);
    for i in (wq..dst.len()).rev() {
        let mut x = src[i - wq] << br;
        if br > 0 && i > wq {
            x |= src[i - wq - 1] >> (64 - br);
        }
        dst[i] |= x;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GrinbergianKind {
    Type1,
    Type2,
    NotGrinbergian,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrinbergianVerdict {
    pub kind: GrinbergianKind,
    /// The face outside residue class 2 (Type 1 only).
    pub exceptional_face: Option<usize>,
    /// A split satisfying Grinberg's equation (not Grinbergian only).
    pub witness_split: Option<GrinbergSplit>,
}

/// Whether a face sequence of a graph of order `n` has one of the two
/// Grinbergian shapes: all faces but exactly one of size 2 mod 3, or all
/// faces even with `n` odd.
pub fn is_grinbergian_form(fs: &FaceSequence, n: usize) -> bool {
    let off_class: usize = fs.iter().filter(|&(i, _)| i % 3 != 2).map(|(_, c)| c).sum();
    off_class == 1 || (n % 2 == 1 && fs.iter().all(|(i, _)| i % 2 == 0))
}

pub fn classify_grinbergian(g: &PlaneGraph) -> Result<GrinbergianVerdict, GrinbergError> {
    if !g.is_simple() {
        return Err(GrinbergError::NotSimple);
    }
    match plane_connectivity(g) {
        Ok(r) if r.kappa >= 3 => {}
        _ => return Err(GrinbergError::NotThreeConnected),
    }
    let off: Vec<usize> = (0..g.num_faces()).filter(|&f| g.face_size(f) % 3 != 2).collect();
    if off.len() == 1 {
        return Ok(GrinbergianVerdict {
            kind: GrinbergianKind::Type1,
            exceptional_face: Some(off[0]),
            witness_split: None,
        });
    }
    let fs = g.face_sequence();
    if g.n() % 2 == 1 && fs.iter().all(|(i, _)| i % 2 == 0) {
        return Ok(GrinbergianVerdict {
            kind: GrinbergianKind::Type2,
            exceptional_face: None,
            witness_split: None,
        });
    }
    Ok(GrinbergianVerdict {
        kind: GrinbergianKind::NotGrinbergian,
        exceptional_face: None,
        witness_split: grinberg_feasible(&fs)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Type1Report {
    pub exceptional_face: usize,
    pub exceptional_size: usize,
    /// Exceptional face size is 1 mod 3.
    pub exceptional_in_class_1: bool,
    /// Order is a multiple of 3.
    pub order_multiple_of_3: bool,
    /// Every vertex of the exceptional face has degree at least 4.
    pub exceptional_degrees_at_least_4: bool,
}

impl Type1Report {
    pub fn violations(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if !self.exceptional_in_class_1 {
            v.push("exceptional face size is not 1 mod 3");
        }
        if !self.order_multiple_of_3 {
            v.push("order is not a multiple of 3");
        }
        if !self.exceptional_degrees_at_least_4 {
            v.push("exceptional face has a vertex of degree below 4");
        }
        v
    }
}

/// Checks the structural consequences for a Type 1 Grinbergian
/// hypohamiltonian graph. Both preconditions are verified here.
pub fn check_type1_properties(g: &PlaneGraph) -> Result<Type1Report, GrinbergError> {
    let verdict = classify_grinbergian(g)?;
    let Some(face) = verdict.exceptional_face.filter(|_| verdict.kind == GrinbergianKind::Type1) else {
        return Err(GrinbergError::PreconditionFailed("graph is not Type 1 Grinbergian".into()));
    };
    if !is_hypohamiltonian(g).is_hypohamiltonian() {
        return Err(GrinbergError::PreconditionFailed("graph is not hypohamiltonian".into()));
    }
    let size = g.face_size(face);
    Ok(Type1Report {
        exceptional_face: face,
        exceptional_size: size,
        exceptional_in_class_1: size % 3 == 1,
        order_multiple_of_3: g.n().is_multiple_of(3),
        exceptional_degrees_at_least_4: g.face_vertices(face).iter().all(|&v| g.degree(v) >= 4),
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletenessReport {
    /// Sequences examined per order `n`.
    pub examined: BTreeMap<usize, u64>,
    /// Infeasible sequences that are not of Grinbergian form.
    pub counterexamples: Vec<(usize, FaceSequence)>,
    /// Feasible sequences of Grinbergian form (the converse direction).
    pub feasible_grinbergian: Vec<(usize, FaceSequence)>,
}

impl CompletenessReport {
    pub fn total_examined(&self) -> u64 {
        self.examined.values().sum()
    }

    /// Newline-delimited `n examined` lines.
    pub fn examined_lines(&self) -> String {
        self.examined.iter().map(|(n, c)| format!("{n} {c}\n")).collect()
    }
}

/// Enumerates, for every `4 <= n <= n_max` and every edge count
/// `3n/2 <= m <= 3n - 6`, all multisets of `f = m - n + 2` face sizes in
/// `3..=n` summing to `2m`, and compares knapsack feasibility with the
/// Grinbergian shape. The lower bound on `m` is the average face size bound
/// `2m <= 6f - 12` rewritten through Euler's formula.
pub fn verify_completeness(n_max: usize) -> CompletenessReport {
    let jobs: Vec<(usize, usize)> = (4..=n_max)
        .flat_map(|n| ((3 * n).div_ceil(2)..=3 * n - 6).map(move |m| (n, m)))
        .collect();
    let parts: Vec<(usize, u64, Vec<(usize, FaceSequence)>, Vec<(usize, FaceSequence)>)> = jobs
        .into_par_iter()
        .map(|(n, m)| {
            let f = m + 2 - n;
            let mut examined = 0u64;
            let mut bad = Vec::new();
            let mut converse = Vec::new();
            let mut counts = Vec::new();
            each_sequence(n, f, 2 * m, &mut counts, &mut |counts| {
                examined += 1;
                let form = counts_form(counts, n);
                let feasible = feasible_counts(counts);
                if !feasible && !form {
                    bad.push((n, to_sequence(counts)));
                }
                if feasible && form {
                    converse.push((n, to_sequence(counts)));
                }
            });
            (n, examined, bad, converse)
        })
        .collect();
    let mut report = CompletenessReport::default();
    for (n, examined, bad, converse) in parts {
        *report.examined.entry(n).or_insert(0) += examined;
        report.counterexamples.extend(bad);
        report.feasible_grinbergian.extend(converse);
    }
    report.counterexamples.sort();
    report.feasible_grinbergian.sort();
    report
}

fn to_sequence(counts: &[(usize, usize)]) -> FaceSequence {
    FaceSequence::from_pairs(counts.iter().map(|&(i, c)| (c, i)))
}

fn counts_form(counts: &[(usize, usize)], n: usize) -> bool {
    let off: usize = counts.iter().filter(|&&(i, _)| i % 3 != 2).map(|&(_, c)| c).sum();
    off == 1 || (n % 2 == 1 && counts.iter().all(|&(i, _)| i % 2 == 0))
}

/// Calls `visit` with every multiset of `faces` sizes in `3..=max` summing to
/// `sum`, as `(size, count)` pairs with positive counts.
fn each_sequence(
    max: usize,
    faces: usize,
    sum: usize,
    counts: &mut Vec<(usize, usize)>,
    visit: &mut dyn FnMut(&[(usize, usize)]),
) {
    if faces == 0 {
        if sum == 0 {
            visit(counts);
        }
        return;
    }
    if max == 3 {
        if sum == 3 * faces {
            counts.push((3, faces));
            visit(counts);
            counts.pop();
        }
        return;
    }
    if sum < 3 * faces || sum > max * faces {
        return;
    }
    // c faces of size `max`, the rest smaller
    for c in 0..=faces.min(sum / max) {
        let (rest_faces, rest_sum) = (faces - c, sum - c * max);
        if rest_sum > (max - 1) * rest_faces || rest_sum < 3 * rest_faces {
            continue;
        }
        if c > 0 {
            counts.push((max, c));
        }
        each_sequence(max - 1, rest_faces, rest_sum, counts, visit);
        if c > 0 {
            counts.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hamilton::find_hamiltonian_cycle;

    fn seq(s: &str) -> FaceSequence {
        s.parse().unwrap()
    }

    #[test]
    fn sums_on_platonic_cycles() {
        let d = fixtures::dodecahedron();
        let c = find_hamiltonian_cycle(&d).unwrap();
        let r = grinberg_sum(&d, &c).unwrap();
        assert_eq!(r.sum, 0);
        assert_eq!((r.split.inside.count(5), r.split.outside.count(5)), (6, 6));

        let t = fixtures::tetrahedron();
        let r = grinberg_sum(&t, &find_hamiltonian_cycle(&t).unwrap()).unwrap();
        assert_eq!((r.sum, r.split.inside.count(3), r.split.outside.count(3)), (0, 2, 2));

        let cube = fixtures::cube();
        let r = grinberg_sum(&cube, &find_hamiltonian_cycle(&cube).unwrap()).unwrap();
        assert_eq!((r.sum, r.split.inside.count(4), r.split.outside.count(4)), (0, 3, 3));

        assert_eq!(grinberg_sum(&cube, &[0, 1, 2]), Err(GrinbergError::NotHamiltonian));
    }

    #[test]
    fn knapsack_verdicts() {
        assert_eq!(grinberg_feasible(&seq("1×4, 26×5")), Ok(None));
        let s = grinberg_feasible(&seq("5×4, 22×5")).unwrap().unwrap();
        assert_eq!(s.sum(), 0);
        assert_eq!(s.total(), seq("5×4, 22×5"));
        let t = grinberg_feasible(&seq("4×3")).unwrap().unwrap();
        assert_eq!((t.inside.count(3), t.outside.count(3)), (2, 2));
        assert_eq!(grinberg_feasible(&seq("1×2, 3×3")), Err(GrinbergError::InvalidFaceSize(2)));
        assert!(!feasible_counts(&[(4, 1), (5, 26)]));
        assert!(feasible_counts(&[(4, 5), (5, 22)]));
    }

    #[test]
    fn classification() {
        let cube = classify_grinbergian(&fixtures::cube()).unwrap();
        assert_eq!(cube.kind, GrinbergianKind::NotGrinbergian);
        assert!(cube.witness_split.is_some());
        let dodeca = classify_grinbergian(&fixtures::dodecahedron()).unwrap();
        assert_eq!(dodeca.kind, GrinbergianKind::NotGrinbergian);
        assert_eq!(
            classify_grinbergian(&fixtures::wheel(3).delete_vertex(0).unwrap()),
            Err(GrinbergError::NotThreeConnected)
        );
        let digon = crate::plane::build_plane_graph(&[vec![1, 1], vec![0, 0]]).unwrap();
        assert_eq!(classify_grinbergian(&digon), Err(GrinbergError::NotSimple));
    }

    #[test]
    fn type1_preconditions() {
        assert!(matches!(
            check_type1_properties(&fixtures::cube()),
            Err(GrinbergError::PreconditionFailed(_))
        ));
        assert!(matches!(
            check_type1_properties(&fixtures::dodecahedron()),
            Err(GrinbergError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn sequence_enumeration_matches_partition_counts() {
        // multisets of 4 sizes in 3..=6 summing to 16: {3,3,4,6} {3,3,5,5}
        // {3,4,4,5} {4,4,4,4}
        let mut seen = Vec::new();
        each_sequence(6, 4, 16, &mut Vec::new(), &mut |c| seen.push(to_sequence(c).to_string()));
        seen.sort();
        assert_eq!(seen, ["1×3, 2×4, 1×5", "2×3, 1×4, 1×6", "2×3, 2×5", "4×4"]);
    }

    #[test]
    fn completeness_small() {
        let r = verify_completeness(12);
        assert!(r.counterexamples.is_empty(), "{:?}", r.counterexamples);
        assert!(r.feasible_grinbergian.is_empty());
        assert_eq!(r.examined[&4], 1);
    }
}
