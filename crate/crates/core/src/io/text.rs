//! Rotation text: one vertex per line as `v: n1 n2 ... nk` (0-based,
//! clockwise), `#` starts a comment, blank lines separate graphs.

use std::fmt::Write;

use super::{lists_to_graphs, IoError, RotationLists};
use crate::hamilton::HypoReport;
use crate::plane::PlaneGraph;

pub fn write_rotation_text(graphs: &[PlaneGraph]) -> String {
    let headers: Vec<String> = graphs
        .iter()
        .map(|g| format!("n={} m={} f={}", g.n(), g.m(), g.num_faces()))
        .collect();
    let lists: Vec<RotationLists> = graphs.iter().map(PlaneGraph::rotation_lists).collect();
    write_lists_text(&lists, &headers)
}

/// Neighbor lists in the rotation text layout, each graph preceded by its
/// header as a comment. Also used for graphs without an embedding.
pub fn write_lists_text(graphs: &[RotationLists], headers: &[String]) -> String {
    let mut out = String::new();
    for (i, lists) in graphs.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        if let Some(h) = headers.get(i) {
            let _ = writeln!(out, "# {h}");
        }
        for (v, list) in lists.iter().enumerate() {
            let _ = write!(out, "{v}:");
            for w in list {
                let _ = write!(out, " {w}");
            }
            out.push('\n');
        }
    }
    out
}

pub fn read_rotation_text_lists(text: &str) -> Result<Vec<RotationLists>, IoError> {
    let mut out = Vec::new();
    let mut cur: RotationLists = Vec::new();
    let flush = |cur: &mut RotationLists, out: &mut Vec<RotationLists>| {
        if !cur.is_empty() {
            out.push(std::mem::take(cur));
        }
    };
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            // comment-only lines do not end a graph
            if raw.trim().is_empty() {
                flush(&mut cur, &mut out);
            }
            continue;
        }
        let bad = |reason: String| IoError::MalformedText { line, reason };
        let (head, rest) = content.split_once(':').ok_or_else(|| bad("missing `:`".into()))?;
        let v: usize = head.trim().parse().map_err(|_| bad(format!("bad vertex `{}`", head.trim())))?;
        if v != cur.len() {
            return Err(bad(format!("expected vertex {}, found {v}", cur.len())));
        }
        let list = rest
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| bad(format!("bad neighbor `{t}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        cur.push(list);
    }
    flush(&mut cur, &mut out);
    for (index, lists) in out.iter().enumerate() {
        let n = lists.len();
        if let Some(&w) = lists.iter().flatten().find(|&&w| w >= n) {
            return Err(IoError::MalformedText {
                line: 0,
                reason: format!("graph {index}: neighbor {w} out of range"),
            });
        }
    }
    Ok(out)
}

pub fn read_rotation_text(text: &str) -> Result<Vec<PlaneGraph>, IoError> {
    lists_to_graphs(read_rotation_text_lists(text)?)
}

/// Witness listing: the verdict, the cycle (path) of the whole graph if any,
/// then one line `-v: ...` per deleted vertex.
pub fn write_witnesses(report: &HypoReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# verdict: {:?}", report.verdict);
    let join = |p: &[usize]| p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    if let Some(w) = &report.witness {
        let _ = writeln!(out, "G: {}", join(w));
    }
    for (v, w) in &report.witnesses {
        let _ = writeln!(out, "-{v}: {}", join(w));
    }
    for v in &report.failures {
        let _ = writeln!(out, "-{v}: none");
    }
    out
}
