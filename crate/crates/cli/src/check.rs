//! The `check` command.

use std::path::Path;

use hypoham::connectivity::connectivity;
use hypoham::grinberg::{classify_grinbergian, grinberg_sum, GrinbergianKind};
use hypoham::hamilton::{is_hypohamiltonian_with, is_hypotraceable_with, HamiltonSearch, HypoVerdict, Outcome};
use hypoham::io::write_witnesses;
use hypoham::SearchConfig;

use crate::input::read_graphs;
use crate::{Failure, Format, Property};

fn tri<T>(o: &Outcome<T>) -> Option<bool> {
    match o {
        Outcome::Found(_) => Some(true),
        Outcome::Absent => Some(false),
        Outcome::Inconclusive => None,
    }
}

fn verdict_flag(v: HypoVerdict, yes: HypoVerdict) -> Option<bool> {
    match v {
        HypoVerdict::Inconclusive => None,
        v => Some(v == yes),
    }
}

fn show(x: Option<bool>) -> &'static str {
    match x {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    }
}

pub fn run(path: &Path, format: Format, asserts: &[Property], witnesses: bool, search: SearchConfig) -> Result<(), Failure> {
    let graphs = read_graphs(path, format)?;
    let mut failed = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let s = &g.simple;
        println!("graph {i}: n={} m={}", s.n(), s.m());
        let cycle = HamiltonSearch::new(s).config(search).cycle().0;
        let path_ = HamiltonSearch::new(s).config(search).path().0;
        let hypo = is_hypohamiltonian_with(s, search);
        let hypot = is_hypotraceable_with(s, search);
        let conn = connectivity(s).ok();
        let grin = g.plane.as_ref().map(classify_grinbergian);

        let value = |p: Property| -> Option<bool> {
            match p {
                Property::Hamiltonian => tri(&cycle),
                Property::Traceable => tri(&path_),
                Property::Hypohamiltonian => verdict_flag(hypo.verdict, HypoVerdict::Hypohamiltonian),
                Property::Hypotraceable => verdict_flag(hypot.verdict, HypoVerdict::Hypotraceable),
                Property::Planar => Some(g.plane.is_some()),
                Property::ThreeConnected => Some(conn.is_some_and(|c| c.is_three_connected())),
                Property::Grinbergian => Some(matches!(
                    &grin,
                    Some(Ok(v)) if v.kind != GrinbergianKind::NotGrinbergian
                )),
            }
        };
        for (label, p) in [
            ("hamiltonian", Property::Hamiltonian),
            ("traceable", Property::Traceable),
            ("hypohamiltonian", Property::Hypohamiltonian),
            ("hypotraceable", Property::Hypotraceable),
            ("plane embedding", Property::Planar),
        ] {
            println!("  {label}: {}", show(value(p)));
        }
        match s.girth() {
            Some(girth) => println!("  girth: {girth}"),
            None => println!("  girth: none"),
        }
        match conn {
            Some(c) => println!("  connectivity: kappa={} lambda={} delta={}", c.kappa, c.lambda, c.delta),
            None => println!("  connectivity: disconnected"),
        }
        println!("  degree sequence: {}", s.degree_sequence());
        if let Some(p) = &g.plane {
            println!("  faces: {}", p.num_faces());
            println!("  face sequence: {}", p.face_sequence());
            if let Outcome::Found(c) = &cycle {
                let sum = grinberg_sum(p, c).map_err(|e| Failure::Usage(e.to_string()))?;
                println!("  grinberg sum on the cycle: {}", sum.sum);
            }
        }
        match &grin {
            Some(Ok(v)) => println!("  grinbergian: {:?}", v.kind),
            Some(Err(e)) => println!("  grinbergian: n/a ({e})"),
            None => println!("  grinbergian: n/a (no plane embedding)"),
        }
        if witnesses {
            for r in [&hypo, &hypot] {
                if r.verdict == HypoVerdict::Hypohamiltonian || r.verdict == HypoVerdict::Hypotraceable {
                    for line in write_witnesses(r).lines() {
                        println!("  {line}");
                    }
                }
            }
        }
        for &p in asserts {
            if value(p) != Some(true) {
                failed.push(format!("graph {i}: {p:?}"));
            }
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Assertion(failed.join(", ")))
    }
}
