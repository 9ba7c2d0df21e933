//! Standard small graphs used by tests, benchmarks and the CLI.
//!
//! Plane fixtures get their rotation systems from straight-line coordinates:
//! neighbors are sorted by angle around each vertex, which is clockwise and
//! consistent for convex polyhedra and plane drawings alike.

use crate::plane::PlaneGraph;
use crate::simple::SimpleGraph;

const PHI: f64 = 1.618_033_988_749_895;

type Point3 = [f64; 3];

fn sub(a: Point3, b: Point3) -> Point3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot(a: Point3, b: Point3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: Point3, b: Point3) -> Point3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Rotation system of a convex polyhedron centred at the origin whose edges
/// join vertex pairs at minimum distance.
fn convex_polyhedron(points: &[Point3]) -> PlaneGraph {
    let n = points.len();
    let dist = |i: usize, j: usize| dot(sub(points[i], points[j]), sub(points[i], points[j]));
    let min = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| dist(i, j))
        .fold(f64::INFINITY, f64::min);
    let rot: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let normal = points[v];
            let seed = if normal[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
            let e1 = cross(normal, seed);
            let e2 = cross(normal, e1);
            let mut nbrs: Vec<(f64, usize)> = (0..n)
                .filter(|&w| w != v && (dist(v, w) - min).abs() < 1e-6)
                .map(|w| {
                    let d = sub(points[w], points[v]);
                    (dot(d, e2).atan2(dot(d, e1)), w)
                })
                .collect();
            nbrs.sort_by(|a, b| b.0.total_cmp(&a.0));
            nbrs.into_iter().map(|(_, w)| w).collect()
        })
        .collect();
    PlaneGraph::from_rotations(&rot).expect("convex polyhedron is plane")
}

/// Rotation system of a straight-line plane drawing.
pub fn from_drawing(points: &[[f64; 2]], edges: &[(usize, usize)]) -> PlaneGraph {
    let n = points.len();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let rot: Vec<Vec<usize>> = adj
        .into_iter()
        .enumerate()
        .map(|(v, list)| {
            let mut nbrs: Vec<(f64, usize)> = list
                .into_iter()
                .map(|w| {
                    let (dx, dy) = (points[w][0] - points[v][0], points[w][1] - points[v][1]);
                    (dy.atan2(dx), w)
                })
                .collect();
            nbrs.sort_by(|a, b| b.0.total_cmp(&a.0));
            nbrs.into_iter().map(|(_, w)| w).collect()
        })
        .collect();
    PlaneGraph::from_rotations(&rot).expect("straight-line drawing is plane")
}

pub fn tetrahedron() -> PlaneGraph {
    convex_polyhedron(&[[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]])
}

pub fn cube() -> PlaneGraph {
    let mut pts = Vec::new();
    for x in [-1.0, 1.0] {
        for y in [-1.0, 1.0] {
            for z in [-1.0, 1.0] {
                pts.push([x, y, z]);
            }
        }
    }
    convex_polyhedron(&pts)
}

pub fn octahedron() -> PlaneGraph {
    convex_polyhedron(&[
        [1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, -1.0, 0.0],
        [0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0],
    ])
}

pub fn icosahedron() -> PlaneGraph {
    let mut pts = Vec::new();
    for a in [-1.0, 1.0] {
        for b in [-PHI, PHI] {
            pts.push([0.0, a, b]);
            pts.push([a, b, 0.0]);
            pts.push([b, 0.0, a]);
        }
    }
    convex_polyhedron(&pts)
}

pub fn dodecahedron() -> PlaneGraph {
    let mut pts = Vec::new();
    for x in [-1.0, 1.0] {
        for y in [-1.0, 1.0] {
            for z in [-1.0, 1.0] {
                pts.push([x, y, z]);
            }
        }
    }
    for a in [-1.0 / PHI, 1.0 / PHI] {
        for b in [-PHI, PHI] {
            pts.push([0.0, a, b]);
            pts.push([a, b, 0.0]);
            pts.push([b, 0.0, a]);
        }
    }
    convex_polyhedron(&pts)
}

/// The `k`-sided prism.
pub fn prism(k: usize) -> PlaneGraph {
    assert!(k >= 3);
    let mut pts = Vec::new();
    for r in [2.0, 1.0] {
        for i in 0..k {
            let t = std::f64::consts::TAU * i as f64 / k as f64;
            pts.push([r * t.cos(), r * t.sin()]);
        }
    }
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, k + (i + 1) % k));
        edges.push((i, k + i));
    }
    from_drawing(&pts, &edges)
}

/// The wheel with `k` rim vertices; the hub is vertex 0.
pub fn wheel(k: usize) -> PlaneGraph {
    assert!(k >= 3);
    let mut pts = vec![[0.0, 0.0]];
    let mut edges = Vec::new();
    for i in 0..k {
        let t = std::f64::consts::TAU * i as f64 / k as f64;
        pts.push([t.cos(), t.sin()]);
        edges.push((0, i + 1));
        edges.push((i + 1, (i + 1) % k + 1));
    }
    from_drawing(&pts, &edges)
}

/// The cycle `C_k` drawn as a polygon.
pub fn plane_cycle(k: usize) -> PlaneGraph {
    assert!(k >= 3);
    let pts: Vec<[f64; 2]> = (0..k)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / k as f64;
            [t.cos(), t.sin()]
        })
        .collect();
    let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    from_drawing(&pts, &edges)
}

/// Plane fixtures used across the test suites.
pub fn plane_fixtures() -> Vec<PlaneGraph> {
    vec![
        tetrahedron(),
        cube(),
        octahedron(),
        dodecahedron(),
        icosahedron(),
        prism(5),
        wheel(6),
        plane_cycle(5),
    ]
}

/// The Petersen graph: outer 5-cycle `0..5`, spokes, inner pentagram `5..10`.
pub fn petersen() -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    SimpleGraph::from_edges(10, edges)
}

pub fn complete(n: usize) -> SimpleGraph {
    SimpleGraph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

pub fn cycle(n: usize) -> SimpleGraph {
    SimpleGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> SimpleGraph {
    SimpleGraph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{1,k}` with centre 0.
pub fn star(k: usize) -> SimpleGraph {
    SimpleGraph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
}
