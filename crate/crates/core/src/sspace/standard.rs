use crate::fincat::iso_category;
use crate::simpset::{delta, nerve, spine_inclusion};
use crate::sspace::bisimplicial::{embed_vertical, embed_vertical_map, BiSimpMap, TruncBiSimpSet};

/// `F(n)`: the vertically constant `Δ[n]`.
pub fn f_n(n: usize, htrunc: usize, vtrunc: usize) -> TruncBiSimpSet {
    embed_vertical(&delta(n, htrunc), vtrunc)
}

/// The spine inclusion `G(n) → F(n)`.
pub fn spine_space(n: usize, htrunc: usize, vtrunc: usize) -> BiSimpMap {
    embed_vertical_map(&spine_inclusion(n, htrunc), vtrunc)
}

/// `E(1)`: the vertically constant nerve of the free-living isomorphism.
pub fn e1(htrunc: usize, vtrunc: usize) -> TruncBiSimpSet {
    embed_vertical(&nerve(&iso_category(1), htrunc), vtrunc)
}
