use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::simpset::simplicial::tabulate;
use crate::simpset::{path_count, spine_of, SimpMap, Simplex, TruncSimpSet};
use crate::sspace::bisimplicial::TruncBiSimpSet;
use crate::sspace::regime::decide_equivalence;

/// Segal comparison `X_{n,•} → X_{1,•} ×_{X_{0,•}} … ×_{X_{0,•}} X_{1,•}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegalSpaceLevel {
    pub level: usize,
    /// `|X_{n,0}|`.
    pub simplices: usize,
    /// Size of the fiber product at vertical level 0.
    pub fiber_product: u128,
    /// `(|X_{n,l}|, fiber product size)` for every vertical level.
    pub per_vertical: Vec<(usize, u128)>,
    /// The Segal map is a bijection at every vertical level.
    pub bijective: bool,
    /// Set only when the map is not bijective: whether it is still an
    /// equivalence of vertical groupoids. `None` when undecidable.
    pub equivalence: Option<bool>,
}

impl SegalSpaceLevel {
    pub fn passes(&self) -> bool {
        self.bijective || self.equivalence == Some(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegalVerdict {
    pub levels: Vec<SegalSpaceLevel>,
}

impl SegalVerdict {
    pub fn passes(&self) -> bool {
        self.levels.iter().all(SegalSpaceLevel::passes)
    }

    /// True when some level passed only as an equivalence.
    pub fn equivalence_only(&self) -> bool {
        self.levels.iter().any(|l| !l.bijective && l.equivalence == Some(true))
    }

    pub fn level(&self, n: usize) -> Option<&SegalSpaceLevel> {
        self.levels.iter().find(|l| l.level == n)
    }
}

pub fn segal_space_check(t: &TruncBiSimpSet) -> Result<SegalVerdict> {
    if t.htrunc() < 2 {
        return Err(Error::TruncationTooSmall {
            need: 2,
            got: t.htrunc(),
        });
    }
    let mut levels = Vec::new();
    for n in 2..=t.htrunc() {
        let mut per_vertical = Vec::new();
        let mut bijective = true;
        for l in 0..=t.vtrunc() {
            let col = t.column(l);
            let count = path_count(col, n);
            let mut seen = HashMap::new();
            let mut injective = true;
            for s in col.simplices(n) {
                if seen.insert(spine_of(col, n, s), ()).is_some() {
                    injective = false;
                }
            }
            bijective &= injective && seen.len() as u128 == count;
            per_vertical.push((col.level_size(n), count));
        }
        let equivalence = if bijective {
            None
        } else {
            match decide_equivalence(&segal_map(t, n)?) {
                Ok(check) => Some(check.equivalence),
                Err(Error::Undecidable(_)) => None,
                Err(e) => return Err(e),
            }
        };
        levels.push(SegalSpaceLevel {
            level: n,
            simplices: per_vertical[0].0,
            fiber_product: per_vertical[0].1,
            per_vertical,
            bijective,
            equivalence,
        });
    }
    Ok(SegalVerdict { levels })
}

/// The fiber product `X_{1,•} ×_{X_{0,•}} … ×_{X_{0,•}} X_{1,•}` of `n`
/// factors as a vertical simplicial set.
pub fn spine_fiber_product(t: &TruncBiSimpSet, n: usize) -> Result<TruncSimpSet> {
    Ok(indexed_fiber_product(t, n)?.0)
}

type PathIndex = Vec<HashMap<Vec<Simplex>, Simplex>>;

fn indexed_fiber_product(t: &TruncBiSimpSet, n: usize) -> Result<(TruncSimpSet, PathIndex)> {
    let row1 = t.row(1);
    let levels: Vec<Vec<Vec<Simplex>>> = (0..=t.vtrunc())
        .map(|l| {
            let col = t.column(l);
            let mut paths: Vec<Vec<Simplex>> = col.simplices(1).map(|e| vec![e]).collect();
            for _ in 1..n {
                let mut next = Vec::new();
                for p in &paths {
                    let end = col.face(1, 0, *p.last().expect("non-empty path"));
                    for e in col.simplices(1) {
                        if col.face(1, 1, e) == end {
                            let mut q = p.clone();
                            q.push(e);
                            next.push(q);
                        }
                    }
                }
                paths = next;
            }
            paths
        })
        .collect();
    let index = levels
        .iter()
        .map(|l| l.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect())
        .collect();
    let fp = tabulate(
        levels,
        |l, p| p.iter().map(|&e| row1.name(l, e)).collect::<Vec<_>>().join("|"),
        |l, i, p| p.iter().map(|&e| row1.face(l, i, e)).collect(),
        |l, i, p| p.iter().map(|&e| row1.degen(l, i, e)).collect(),
    )
    .map_err(|e| Error::InvalidBisimplicial(format!("spine fiber product: {e}")))?;
    Ok((fp, index))
}

/// The Segal map from row `n` to the spine fiber product.
pub fn segal_map(t: &TruncBiSimpSet, n: usize) -> Result<SimpMap> {
    let (fp, index) = indexed_fiber_product(t, n)?;
    let levels = (0..=t.vtrunc())
        .map(|l| {
            let col = t.column(l);
            col.simplices(n).map(|s| index[l][&spine_of(col, n, s)]).collect()
        })
        .collect();
    SimpMap::new(t.row(n).clone(), fp, levels)
}
