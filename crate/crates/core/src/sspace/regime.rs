use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::FinCategory;
use crate::simpset::segal::category_of_low_levels;
use crate::simpset::{pi0, segal_check, Components, SimpMap, Simplex, TruncSimpSet};

/// The two kinds of vertical simplicial set on which equivalence is decided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regime {
    /// Every level is the degenerate copy of level 0.
    Discrete,
    /// The truncated nerve of a groupoid.
    GroupoidNerve(FinCategory),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Bijection,
    GroupoidEquivalence,
}

/// Recognizes a vertical simplicial set as discrete or as a groupoid nerve.
/// Anything else is outside the decidable regime.
pub fn vertical_regime(x: &TruncSimpSet) -> Result<Regime> {
    let top = x.truncation();
    let discrete = (1..=top).all(|l| {
        x.level_size(l) == x.level_size(0) && {
            let ops = vec![0; l];
            let mut hit = vec![false; x.level_size(l)];
            x.simplices(0).all(|v| !std::mem::replace(&mut hit[x.degen_iter(0, v, &ops)], true))
        }
    });
    if discrete {
        return Ok(Regime::Discrete);
    }
    if top < 2 {
        return Err(Error::Undecidable(format!(
            "vertical truncation {top} is too small to recognize a groupoid nerve"
        )));
    }
    if !segal_check(x)?.passes() {
        return Err(Error::Undecidable("vertical simplicial set is neither discrete nor a nerve".into()));
    }
    let c = category_of_low_levels(x)
        .map_err(|_| Error::Undecidable("vertical simplicial set is neither discrete nor a nerve".into()))?;
    if !c.is_groupoid() {
        return Err(Error::Undecidable("vertical simplicial set is the nerve of a non-groupoid".into()));
    }
    Ok(Regime::GroupoidNerve(c))
}

/// Path components, treating truncation 0 as discrete.
pub(crate) fn components(x: &TruncSimpSet) -> Components {
    if x.truncation() == 0 {
        return crate::simpset::standard::components_from(x.level_size(0), |v| v);
    }
    pi0(x).expect("truncation at least 1")
}

/// Outcome of comparing two vertical simplicial sets along a map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceCheck {
    pub strategy: Strategy,
    pub equivalence: bool,
    pub components: (usize, usize),
    pub vertices: (usize, usize),
}

/// Decides whether `f` is an equivalence. Discrete on both sides: levelwise
/// bijection. Otherwise both sides must be groupoid nerves, and `f` is an
/// equivalence iff it is a bijection on `π0` and on every automorphism group.
pub fn decide_equivalence(f: &SimpMap) -> Result<EquivalenceCheck> {
    let (a, b) = (f.domain(), f.codomain());
    let (ra, rb) = (vertical_regime(a)?, vertical_regime(b)?);
    let (ca, cb) = (components(a), components(b));
    let counts = (ca.count(), cb.count());
    let vertices = (a.level_size(0), b.level_size(0));
    if ra == Regime::Discrete && rb == Regime::Discrete {
        return Ok(EquivalenceCheck {
            strategy: Strategy::Bijection,
            equivalence: f.is_isomorphism(),
            components: counts,
            vertices,
        });
    }
    let mut equivalence = counts.0 == counts.1;
    let mut hit = vec![false; counts.1];
    for class in &ca.classes {
        let label = cb.labels[f.at(0, class[0])];
        equivalence &= !std::mem::replace(&mut hit[label], true);
    }
    if equivalence {
        for class in &ca.classes {
            equivalence &= loops_bijective(f, class[0]);
        }
    }
    Ok(EquivalenceCheck {
        strategy: Strategy::GroupoidEquivalence,
        equivalence,
        components: counts,
        vertices,
    })
}

/// Loops at a vertex are its automorphisms in a groupoid nerve and just
/// the degenerate edge in a discrete set.
fn loops(x: &TruncSimpSet, v: Simplex) -> Vec<Simplex> {
    if x.truncation() == 0 {
        return Vec::new();
    }
    x.simplices(1)
        .filter(|&e| x.face(1, 0, e) == v && x.face(1, 1, e) == v)
        .collect()
}

fn loops_bijective(f: &SimpMap, v: Simplex) -> bool {
    let (a, b) = (f.domain(), f.codomain());
    let source = loops(a, v);
    let target = loops(b, f.at(0, v));
    let mut image: Vec<Simplex> = source.iter().map(|&e| f.at(1, e)).collect();
    image.sort_unstable();
    image.dedup();
    image.len() == source.len() && image == target
}
