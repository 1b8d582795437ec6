//! Truncated finite simplicial sets: standard simplices and their
//! sub-objects, nerves, the Segal condition, lifting problems and `π0`.

pub mod lifting;
pub mod map;
pub mod segal;
pub mod simplicial;
pub mod standard;


pub use lifting::{
    classify_fibration, lifting_failure, simplicial_maps, solve_lift, FibrationReport, LiftFailure, LiftProblem,
};
pub use map::{empty, sub_object, SimpMap};
pub use segal::{category_from_segal, path_count, segal_check, spine_of, SegalLevel, SegalReport};
pub use simplicial::{simplicial_violations, SimpSetBuilder, Simplex, TruncSimpSet};
pub use standard::{
    boundary, boundary_inclusion, delta, delta_map, discrete, horn, horn_inclusion, monotone_maps, nerve, nerve_map, pi0,
    product, pullback, spine, spine_inclusion, vertex_name, Components, Cone,
};
