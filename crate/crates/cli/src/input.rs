//! Reading graph files and the `transform` command.

use std::path::{Path, PathBuf};

use hypoham::io::{
    read_planar_code_lists, read_rotation_text_lists, write_lists_text, write_planar_code,
    write_planar_code_lists, write_rotation_text,
};
use hypoham::transforms::{
    deflate_4face, deflate_any, enumerate_inflations, inflate_2path, insert_into, insert_into_plane,
    join4_hypotraceable, join4_plane, thomassen, MergePair,
};
use hypoham::{build_plane_graph, PlaneGraph, SimpleGraph};

use crate::{Failure, Format, Op, Pair};

/// One input graph, with its embedding when the neighbor lists describe a
/// plane graph.
pub struct InputGraph {
    pub plane: Option<PlaneGraph>,
    pub simple: SimpleGraph,
}

/// planar_code records always contain zero bytes; text never does.
fn looks_binary(bytes: &[u8]) -> bool {
    bytes.starts_with(b">>planar_code<<") || bytes.contains(&0)
}

pub fn read_graphs(path: &Path, format: Format) -> Result<Vec<InputGraph>, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let binary = match format {
        Format::Pc => true,
        Format::Text => false,
        Format::Auto => looks_binary(&bytes),
    };
    let all = if binary {
        read_planar_code_lists(&bytes)?
    } else {
        let text = std::str::from_utf8(&bytes).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        read_rotation_text_lists(text)?
    };
    Ok(all
        .into_iter()
        .map(|lists| InputGraph {
            plane: build_plane_graph(&lists).ok(),
            simple: SimpleGraph::from_adjacency(&lists),
        })
        .collect())
}

fn read_one(path: &Path, format: Format) -> Result<InputGraph, Failure> {
    let mut gs = read_graphs(path, format)?;
    if gs.len() != 1 {
        return Err(Failure::Usage(format!("{}: expected one graph, found {}", path.display(), gs.len())));
    }
    Ok(gs.remove(0))
}

fn plane(g: &InputGraph, path: &Path) -> Result<PlaneGraph, Failure> {
    g.plane
        .clone()
        .ok_or_else(|| Failure::Usage(format!("{}: not a plane embedding", path.display())))
}

pub struct TransformArgs {
    pub op: Op,
    pub files: Vec<PathBuf>,
    pub format: Format,
    pub face: Option<usize>,
    pub pair: Option<Pair>,
    pub site: Option<usize>,
    pub vertex: Vec<usize>,
    pub host: Option<PathBuf>,
    pub out: Option<PathBuf>,
}

enum Output {
    Plane(PlaneGraph),
    Abstract(SimpleGraph),
}

fn need<T>(x: Option<T>, flag: &str) -> Result<T, Failure> {
    x.ok_or_else(|| Failure::Usage(format!("this operation needs --{flag}")))
}

pub fn transform(a: TransformArgs) -> Result<(), Failure> {
    let first = &a.files[0];
    let output = match a.op {
        Op::Deflate | Op::Inflate | Op::Thomassen | Op::Insert if a.files.len() != 1 => {
            return Err(Failure::Usage("this operation takes one input file".into()));
        }
        Op::Deflate => {
            let g = plane(&read_one(first, a.format)?, first)?;
            let face = need(a.face, "face")?;
            Output::Plane(match a.pair {
                None => deflate_any(&g, face)?,
                Some(Pair::FirstThird) => deflate_4face(&g, face, MergePair::FirstThird)?,
                Some(Pair::SecondFourth) => deflate_4face(&g, face, MergePair::SecondFourth)?,
            })
        }
        Op::Inflate => {
            let g = plane(&read_one(first, a.format)?, first)?;
            let sites = enumerate_inflations(&g);
            let k = need(a.site, "site")?;
            let site = *sites
                .get(k)
                .ok_or_else(|| Failure::Usage(format!("site {k} out of range ({} sites)", sites.len())))?;
            Output::Plane(inflate_2path(&g, site)?)
        }
        Op::Thomassen => {
            let g = plane(&read_one(first, a.format)?, first)?;
            Output::Plane(thomassen(&g, need(a.face, "face")?)?.graph)
        }
        Op::Insert => {
            let g = read_one(first, a.format)?;
            let host_path = need(a.host.clone(), "host")?;
            let h = read_one(&host_path, a.format)?;
            let w = need(a.vertex.first().copied(), "vertex")?;
            match (&g.plane, &h.plane) {
                (Some(gp), Some(hp)) => Output::Plane(insert_into_plane(gp, w, hp)?),
                _ => Output::Abstract(insert_into(&g.simple, w, &h.simple)?.graph),
            }
        }
        Op::Join4 => {
            if a.files.len() != 4 {
                return Err(Failure::Usage("join4 takes four input files".into()));
            }
            let gs = a
                .files
                .iter()
                .map(|p| read_one(p, a.format))
                .collect::<Result<Vec<_>, _>>()?;
            let ws: [usize; 4] = match a.vertex.len() {
                0 => [0; 4],
                1 => [a.vertex[0]; 4],
                4 => [a.vertex[0], a.vertex[1], a.vertex[2], a.vertex[3]],
                _ => return Err(Failure::Usage("--vertex takes one or four values".into())),
            };
            let planes: Option<Vec<&PlaneGraph>> = gs.iter().map(|g| g.plane.as_ref()).collect();
            match planes {
                Some(p) => Output::Plane(join4_plane([p[0], p[1], p[2], p[3]], ws)?),
                None => Output::Abstract(join4_hypotraceable(
                    [&gs[0].simple, &gs[1].simple, &gs[2].simple, &gs[3].simple],
                    ws,
                )?),
            }
        }
    };
    let (n, m, lists) = match &output {
        Output::Plane(g) => (g.n(), g.m(), g.rotation_lists()),
        Output::Abstract(g) => (g.n(), g.m(), (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect()),
    };
    eprintln!("result: n={n} m={m}");
    let binary = a.out.as_ref().is_some_and(|p| p.extension().is_some_and(|x| x == "pc"));
    let bytes = match (&output, binary) {
        (Output::Plane(g), true) => write_planar_code(std::slice::from_ref(g), true)?,
        (Output::Abstract(_), true) => write_planar_code_lists(&[lists], true)?,
        (Output::Plane(g), false) => write_rotation_text(std::slice::from_ref(g)).into_bytes(),
        (Output::Abstract(_), false) => write_lists_text(&[lists], &[format!("n={n} m={m} (abstract)")]).into_bytes(),
    };
    match &a.out {
        Some(p) => std::fs::write(p, bytes).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        None => print!("{}", String::from_utf8_lossy(&bytes)),
    }
    Ok(())
}
