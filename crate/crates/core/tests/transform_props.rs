use hypoham::fixtures;
use hypoham::pipeline::{next_level, seed_level};
use hypoham::transforms::{deflate_4face, enumerate_inflations, inflate_2path, thomassen, MergePair};
use hypoham::PlaneGraph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn euler(g: &PlaneGraph) -> i64 {
    g.n() as i64 - g.m() as i64 + g.num_faces() as i64
}

/// Inflates at `site`, checks the counts, deflates the new face back and
/// compares canonical codes.
fn round_trip(g: &PlaneGraph, site_index: usize) {
    let site = enumerate_inflations(g)[site_index];
    let h = inflate_2path(g, site).unwrap();
    assert_eq!(h.n(), g.n() + 1);
    assert_eq!(h.count_faces_of_size(4), g.count_faces_of_size(4) + 1);
    assert_eq!(euler(&h), 2);
    let q = g.n();
    let face = h.face_of(h.first_dart(q) + 1);
    let corners = h.face_vertices(face);
    let pair = if corners[1] == q || corners[3] == q {
        MergePair::SecondFourth
    } else {
        MergePair::FirstThird
    };
    let back = deflate_4face(&h, face, pair).unwrap();
    assert_eq!(back.canonical_code(), g.canonical_code());
}

fn intermediates() -> Vec<PlaneGraph> {
    let mut level = seed_level(20, [fixtures::icosahedron()]).unwrap();
    let mut out = Vec::new();
    for _ in 0..4 {
        level = next_level(&level);
        out.extend(level.graphs());
    }
    out
}

#[test]
fn inflate_deflate_round_trip_on_fixtures() {
    for g in fixtures::plane_fixtures() {
        for k in 0..enumerate_inflations(&g).len() {
            round_trip(&g, k);
        }
    }
}

#[test]
fn inflate_deflate_round_trip_on_random_intermediates() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let pool = intermediates();
    for _ in 0..1000 {
        let g = pool.choose(&mut rng).unwrap();
        let k = rng.gen_range(0..enumerate_inflations(g).len());
        round_trip(g, k);
    }
}

fn check_thomassen(g: &PlaneGraph, f: usize) -> Option<PlaneGraph> {
    let r = thomassen(g, f).ok()?;
    let h = &r.graph;
    assert_eq!((h.n(), h.m(), euler(h)), (g.n() + 4, g.m() + 6, 2));
    assert!(r.square.iter().all(|&v| h.degree(v) == 3));
    assert_eq!(h.face_size(r.face), 4);
    Some(r.graph)
}

/// Random chains of Thomassen steps from the cube; every new square face
/// has cubic corners, so chains never get stuck.
#[test]
fn thomassen_chains_from_the_cube() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let mut g = fixtures::cube();
        for _ in 0..6 {
            let faces: Vec<usize> = (0..g.num_faces()).filter(|&f| thomassen(&g, f).is_ok()).collect();
            let f = *faces.choose(&mut rng).unwrap();
            g = check_thomassen(&g, f).unwrap();
        }
        assert_eq!(g.n(), 8 + 24);
    }
}

/// Level members mostly have 4-faces with a non-cubic corner; wherever the
/// operation applies the counts still hold.
#[test]
fn thomassen_on_intermediates() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for g in intermediates().choose_multiple(&mut rng, 2000) {
        for f in 0..g.num_faces() {
            check_thomassen(g, f);
        }
    }
}
