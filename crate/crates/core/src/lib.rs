//! Plane graphs, Hamiltonian searches and the constructions used to build
//! hypohamiltonian and hypotraceable planar graphs.

pub mod connectivity;
pub mod fixtures;
pub mod grinberg;
pub mod hamilton;
pub mod io;
pub mod pipeline;
pub mod plane;
pub mod sequence;
pub mod simple;
pub mod transforms;

pub use connectivity::{connectivity, plane_connectivity, ConnectivityError, ConnectivityReport};
pub use grinberg::{
    classify_grinbergian, grinberg_feasible, grinberg_sum, verify_completeness, GrinbergSplit, GrinbergianKind,
    GrinbergianVerdict,
};
pub use hamilton::{
    find_hamiltonian_cycle, find_hamiltonian_path, find_hamiltonian_path_between, is_hypohamiltonian,
    is_hypotraceable, HamiltonSearch, HypoReport, HypoVerdict, Outcome, SearchConfig,
};
pub use plane::{build_plane_graph, CanonicalCode, Dart, PlaneError, PlaneGraph};
pub use sequence::{DegreeSequence, FaceSequence, SizeCounts};
pub use simple::SimpleGraph;
pub use transforms::{
    contract_edges, deflate_4face, deflate_any, enumerate_inflations, inflate_2path, insert_into, insert_into_plane,
    join4_hypotraceable, join4_plane, thomassen, InflationSite, Insertion, MergePair, ThomassenResult, TransformError,
};
pub use io::IoError;
pub use pipeline::{
    filter_hypo, next_level, run_pipeline, seed_level, Catalog, Level, LevelKey, PipelineConfig, PipelineError,
    RunSummary,
};
