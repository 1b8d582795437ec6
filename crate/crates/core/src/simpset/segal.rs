use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{CategoryBuilder, FinCategory};
use crate::simpset::simplicial::{Simplex, TruncSimpSet};

/// Segal comparison at one level: `X_n` against the `n`-fold fiber product
/// `X_1 ×_{X_0} … ×_{X_0} X_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegalLevel {
    pub level: usize,
    pub simplices: usize,
    pub fiber_product: u128,
    pub injective: bool,
    pub surjective: bool,
}

impl SegalLevel {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegalReport {
    pub levels: Vec<SegalLevel>,
}

impl SegalReport {
    pub fn passes(&self) -> bool {
        self.levels.iter().all(SegalLevel::bijective)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.levels.iter().find(|l| !l.bijective()).map(|l| l.level)
    }
}

/// The spine of an `n`-simplex: its edges `k → k+1`.
pub fn spine_of(x: &TruncSimpSet, n: usize, s: Simplex) -> Vec<Simplex> {
    (0..n).map(|k| x.restrict(n, s, &[k, k + 1])).collect()
}

/// Number of `n`-paths in the graph with vertices `X_0` and edges `X_1`
/// (source `d_1`, target `d_0`).
pub fn path_count(x: &TruncSimpSet, n: usize) -> u128 {
    let mut ends: Vec<u128> = vec![1; x.level_size(0)];
    for _ in 0..n {
        let mut next = vec![0u128; x.level_size(0)];
        for e in x.simplices(1) {
            next[x.face(1, 0, e)] += ends[x.face(1, 1, e)];
        }
        ends = next;
    }
    ends.iter().sum()
}

pub fn segal_check(x: &TruncSimpSet) -> Result<SegalReport> {
    if x.truncation() < 2 {
        return Err(Error::TruncationTooSmall {
            need: 2,
            got: x.truncation(),
        });
    }
    let levels = (2..=x.truncation())
        .map(|n| {
            let mut seen: HashMap<Vec<Simplex>, ()> = HashMap::new();
            let mut injective = true;
            for s in x.simplices(n) {
                if seen.insert(spine_of(x, n, s), ()).is_some() {
                    injective = false;
                }
            }
            let fiber_product = path_count(x, n);
            SegalLevel {
                level: n,
                simplices: x.level_size(n),
                fiber_product,
                injective,
                surjective: seen.len() as u128 == fiber_product,
            }
        })
        .collect();
    Ok(SegalReport { levels })
}

/// The category whose nerve a Segal simplicial set is: objects `X_0`,
/// morphisms `X_1`, composition through the inverse of the Segal map at
/// level 2 followed by `d_1`.
pub fn category_from_segal(x: &TruncSimpSet) -> Result<FinCategory> {
    if x.truncation() < 3 {
        return Err(Error::TruncationTooSmall {
            need: 3,
            got: x.truncation(),
        });
    }
    let report = segal_check(x)?;
    if let Some(level) = report.first_failure() {
        return Err(Error::SegalFailure { level });
    }
    category_of_low_levels(x)
        .map_err(|e| Error::InvariantViolation(format!("Segal data did not yield a category: {e}")))
}

/// The category read off levels 0 to 2, when those tables form one:
/// objects `X_0`, morphisms `X_1`, identities `s_0`, and `d_1 σ` as the
/// composite of `d_0 σ` after `d_2 σ`.
pub(crate) fn category_of_low_levels(x: &TruncSimpSet) -> Result<FinCategory> {
    if x.truncation() < 2 {
        return Err(Error::TruncationTooSmall {
            need: 2,
            got: x.truncation(),
        });
    }
    let mut b = CategoryBuilder::new();
    for v in x.simplices(0) {
        b.add_object(x.name(0, v));
    }
    for e in x.simplices(1) {
        b.add_morphism(x.name(1, e), x.face(1, 1, e), x.face(1, 0, e));
    }
    for v in x.simplices(0) {
        b.set_identity(v, x.degen(0, 0, v));
    }
    for s in x.simplices(2) {
        let (f, g) = (x.face(2, 2, s), x.face(2, 0, s));
        b.set_comp(g, f, x.face(2, 1, s));
    }
    b.build()
}
