//! Validated finite categories, functors, natural transformations,
//! relative categories and set-valued functors.

pub mod category;
pub mod constructions;
pub mod functor;
pub mod nattrans;
pub mod relative;
pub mod setfunctor;
pub mod yoneda;


pub use category::{
    validate_category, AxiomViolation, CategoryBuilder, FinCategory, MorId, ObId, StructuralError,
    ValidationReport,
};
pub use constructions::{
    core, discrete_category, group_category, iso_category, opposite, poset_category, preorder_category,
    product, subcategory,
};
pub use functor::{enumerate_functors, find_isomorphism, Functor, FunctorSearch};
pub use nattrans::{enumerate_nat_trans, functor_category, we_functor_category, FunctorCategory, NatTrans};
pub use relative::RelativeCategory;
pub use setfunctor::SetFunctor;
pub use yoneda::{yoneda_check, BijectionWitness};
