//! Initial and final objects, cocones and colimits with a brute-force
//! universal-property oracle, and adjunctions via comma categories and
//! collages.

pub mod adjunction;
pub mod universal;

#[cfg(test)]
mod tests;

pub use adjunction::{
    adjunction_consistency, certify_adjunction, collage, comma_category, delta_adjoint_check, diagonal,
    left_adjoint_via_comma, right_adjoint_via_comma, AdjointSearch, AdjunctionCertificate, Collage, Comma,
    ConsistencyReport, DeltaReport, DeltaRoute,
};
pub use universal::{
    cocone_category, colimit, colimit_oracle, final_objects, initial_objects, limit, Cocone, CoconeCategory,
    CoconeSummary,
};
