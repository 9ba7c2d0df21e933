//! Writes the built-in fixture graphs as planar_code files.
//!
//! usage: export_fixtures <out_dir>

use hypoham::fixtures;
use hypoham::io::{write_planar_code, write_planar_code_lists};

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "fixtures/graphs".into());
    std::fs::create_dir_all(&dir).expect("create output directory");
    let plane = [
        ("k4", fixtures::tetrahedron()),
        ("cube", fixtures::cube()),
        ("octahedron", fixtures::octahedron()),
        ("dodecahedron", fixtures::dodecahedron()),
        ("icosahedron", fixtures::icosahedron()),
    ];
    for (name, g) in plane {
        let bytes = write_planar_code(&[g], true).expect("small order");
        std::fs::write(format!("{dir}/{name}.pc"), bytes).expect("write fixture");
    }
    // not planar: the lists carry no embedding
    let p = fixtures::petersen();
    let lists: Vec<Vec<usize>> = (0..p.n()).map(|v| p.neighbors(v).to_vec()).collect();
    let bytes = write_planar_code_lists(&[lists], true).expect("small order");
    std::fs::write(format!("{dir}/petersen.pc"), bytes).expect("write fixture");
}
