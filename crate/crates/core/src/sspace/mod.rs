//! Truncated bisimplicial sets (simplicial spaces): Segal spaces, mapping
//! spaces, composition witnesses, homotopy equivalences, completeness and
//! classification diagrams.
//!
//! Rows `X_{n,•}` are the spaces; homotopical questions are decided only when
//! each row is discrete or the nerve of a groupoid.

pub mod bisimplicial;
pub mod classification;
pub mod homotopy;
pub mod regime;
pub mod segal;
pub mod standard;


pub use bisimplicial::{
    commutation_violations, embed_horizontal, embed_vertical, embed_vertical_map, BiSimpMap, BiSimpSetBuilder,
    TruncBiSimpSet,
};
pub use classification::{classification_diagram, classifying_diagram};
pub use homotopy::{
    completeness_check, composition_witnesses, hoeqchoice_space, hoequiv_space, homotopically_constant,
    homotopy_category, is_hoequiv, is_segal_groupoid, mapping_space, CompletenessReport, Composition, HoEqChoice,
    HoEquiv, HoEquivData, SegalView,
};
pub use regime::{decide_equivalence, vertical_regime, EquivalenceCheck, Regime, Strategy};
pub use segal::{segal_map, segal_space_check, spine_fiber_product, SegalSpaceLevel, SegalVerdict};
pub use standard::{e1, f_n, spine_space};
