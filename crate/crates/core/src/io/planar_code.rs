use super::{lists_to_graphs, IoError, RotationLists};
use crate::plane::PlaneGraph;

/// Optional stream header.
pub const PLANAR_CODE_HEADER: &[u8; 15] = b">>planar_code<<";

/// Splits a stream into neighbor lists without checking the embedding.
/// Non-planar graphs (such as the Petersen graph) can be carried this way.
pub fn read_planar_code_lists(bytes: &[u8]) -> Result<Vec<RotationLists>, IoError> {
    let mut i = if bytes.starts_with(PLANAR_CODE_HEADER) { PLANAR_CODE_HEADER.len() } else { 0 };
    let mut out = Vec::new();
    while i < bytes.len() {
        let start = i;
        let bad = |offset: usize, reason: &str| IoError::MalformedRecord {
            offset,
            reason: reason.to_string(),
        };
        let n = bytes[i] as usize;
        if n == 0 {
            return Err(bad(start, "order 0 (multi-byte variant is not supported)"));
        }
        i += 1;
        let mut lists = Vec::with_capacity(n);
        for _ in 0..n {
            let mut list = Vec::new();
            loop {
                let Some(&b) = bytes.get(i) else {
                    return Err(bad(i, "truncated record"));
                };
                i += 1;
                if b == 0 {
                    break;
                }
                if b as usize > n {
                    return Err(bad(i - 1, "neighbor index exceeds order"));
                }
                list.push(b as usize - 1);
            }
            lists.push(list);
        }
        validate_incidences(&lists).map_err(|reason| bad(start, &reason))?;
        out.push(lists);
    }
    Ok(out)
}

/// Every `u -> v` occurrence must be matched by a `v -> u` occurrence.
fn validate_incidences(lists: &RotationLists) -> Result<(), String> {
    for (u, list) in lists.iter().enumerate() {
        for &v in list {
            let fwd = list.iter().filter(|&&x| x == v).count();
            let back = lists[v].iter().filter(|&&x| x == u).count();
            // a loop appears twice in its own list
            if fwd != back || (u == v && fwd % 2 == 1) {
                return Err(format!("unmatched incidence {} -> {}", u + 1, v + 1));
            }
        }
    }
    Ok(())
}

/// Reads a stream and checks that every record is a plane embedding.
pub fn read_planar_code(bytes: &[u8]) -> Result<Vec<PlaneGraph>, IoError> {
    lists_to_graphs(read_planar_code_lists(bytes)?)
}

pub fn encode_record(lists: &RotationLists, out: &mut Vec<u8>) -> Result<(), IoError> {
    let n = lists.len();
    if n == 0 || n > 255 {
        return Err(IoError::UnsupportedOrder(n));
    }
    out.push(n as u8);
    for list in lists {
        out.extend(list.iter().map(|&v| (v + 1) as u8));
        out.push(0);
    }
    Ok(())
}

pub fn write_planar_code_lists(lists: &[RotationLists], header: bool) -> Result<Vec<u8>, IoError> {
    let mut out = Vec::new();
    if header {
        out.extend_from_slice(PLANAR_CODE_HEADER);
    }
    for l in lists {
        encode_record(l, &mut out)?;
    }
    Ok(out)
}

pub fn write_planar_code(graphs: &[PlaneGraph], header: bool) -> Result<Vec<u8>, IoError> {
    let lists: Vec<RotationLists> = graphs.iter().map(PlaneGraph::rotation_lists).collect();
    write_planar_code_lists(&lists, header)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k4_record() {
        let bytes = [4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0];
        let g = read_planar_code(&bytes).unwrap();
        assert_eq!((g[0].n(), g[0].num_faces()), (4, 4));
        assert_eq!(write_planar_code(&g, false).unwrap(), bytes);
    }

    #[test]
    fn round_trip_is_byte_exact() {
        let gs = fixtures::plane_fixtures();
        for header in [false, true] {
            let bytes = write_planar_code(&gs, header).unwrap();
            let back = read_planar_code(&bytes).unwrap();
            assert_eq!(write_planar_code(&back, header).unwrap(), bytes);
            for (a, b) in gs.iter().zip(&back) {
                assert_eq!(a.canonical_code(), b.canonical_code());
            }
        }
    }

    #[test]
    fn dodecahedron_record_length() {
        let bytes = write_planar_code(&[fixtures::dodecahedron()], false).unwrap();
        assert_eq!(bytes.len(), 81);
    }

    #[test]
    fn errors() {
        let bytes = write_planar_code(&[fixtures::cube()], false).unwrap();
        assert!(matches!(read_planar_code(&bytes[..bytes.len() - 1]), Err(IoError::MalformedRecord { .. })));
        let mut bad = bytes.clone();
        bad[1] = 9;
        assert!(matches!(read_planar_code(&bad), Err(IoError::MalformedRecord { .. })));
        let big = vec![vec![]; 300];
        assert_eq!(write_planar_code_lists(&[big], false), Err(IoError::UnsupportedOrder(300)));
        // the Petersen graph passes the lenient reader only
        let p = fixtures::petersen();
        let lists: RotationLists = (0..10).map(|v| p.neighbors(v).to_vec()).collect();
        let bytes = write_planar_code_lists(&[lists.clone()], true).unwrap();
        assert_eq!(read_planar_code_lists(&bytes).unwrap(), vec![lists]);
        assert!(matches!(read_planar_code(&bytes), Err(IoError::Plane { index: 0, .. })));
    }
}
