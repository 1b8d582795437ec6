//! Discrete fibrations: functors cofibered in sets, the Grothendieck
//! construction, left fibrations of simplicial sets, under-objects and
//! coCartesian lifts.

pub mod cocartesian;
pub mod cofibered;
pub mod left;

#[cfg(test)]
mod tests;

pub use cocartesian::{
    cocartesian_witness, is_cartesian_fibration, is_cartesian_morphism, is_cocartesian_fibration,
    is_cocartesian_morphism, CoCartStructure, CoCartVerdict, LiftSet, MissingLift,
};
pub use cofibered::{
    cofibered_yoneda_check, grothendieck, is_cofibered_in_sets, under_category, FiberFailure, FiberedReport,
};
pub use left::{
    fiber_decomposition_over_f1, is_left_fibration, is_right_fibration, left_fibration_comparison,
    left_yoneda_check, under_css, under_projection, Comparison, FiberDecomposition,
};
