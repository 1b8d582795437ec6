use crate::error::{Error, Result};
use crate::simpset::simplicial::{SimpSetBuilder, Simplex, TruncSimpSet};

/// A simplicial map, one function per level.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpMap {
    dom: TruncSimpSet,
    cod: TruncSimpSet,
    levels: Vec<Vec<Simplex>>,
}

impl SimpMap {
    pub fn new(dom: TruncSimpSet, cod: TruncSimpSet, levels: Vec<Vec<Simplex>>) -> Result<Self> {
        let m = SimpMap { dom, cod, levels };
        match m.first_violation() {
            None => Ok(m),
            Some(msg) => Err(Error::InvalidSimplicialMap(msg)),
        }
    }

    pub(crate) fn new_unchecked(dom: TruncSimpSet, cod: TruncSimpSet, levels: Vec<Vec<Simplex>>) -> Self {
        SimpMap { dom, cod, levels }
    }

    /// Builds a map from simplex names, level by level.
    pub fn from_names(dom: &TruncSimpSet, cod: &TruncSimpSet, levels: &[Vec<(&str, &str)>]) -> Result<Self> {
        let mut out: Vec<Vec<Simplex>> = dom.sizes().iter().map(|&k| vec![usize::MAX; k]).collect();
        if levels.len() != out.len() {
            return Err(Error::TruncationMismatch(levels.len().saturating_sub(1), dom.truncation()));
        }
        for (n, pairs) in levels.iter().enumerate() {
            for &(a, b) in pairs {
                out[n][dom.simplex(n, a)?] = cod.simplex(n, b)?;
            }
        }
        for (n, level) in out.iter().enumerate() {
            if let Some(x) = level.iter().position(|&y| y == usize::MAX) {
                return Err(Error::InvalidSimplicialMap(format!(
                    "no image for `{}` at level {n}",
                    dom.name(n, x)
                )));
            }
        }
        SimpMap::new(dom.clone(), cod.clone(), out)
    }

    pub fn identity(x: &TruncSimpSet) -> Self {
        SimpMap {
            dom: x.clone(),
            cod: x.clone(),
            levels: x.sizes().iter().map(|&k| (0..k).collect()).collect(),
        }
    }

    /// The unique map to the terminal simplicial set `t`.
    pub fn to_terminal(x: &TruncSimpSet, t: &TruncSimpSet) -> Result<Self> {
        if t.sizes().iter().any(|&k| k != 1) {
            return Err(Error::Precondition("codomain is not terminal".into()));
        }
        SimpMap::new(x.clone(), t.clone(), x.sizes().iter().map(|&k| vec![0; k]).collect())
    }

    pub fn domain(&self) -> &TruncSimpSet {
        &self.dom
    }

    pub fn codomain(&self) -> &TruncSimpSet {
        &self.cod
    }

    pub fn at(&self, n: usize, x: Simplex) -> Simplex {
        self.levels[n][x]
    }

    pub fn level(&self, n: usize) -> &[Simplex] {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[Vec<Simplex>] {
        &self.levels
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimpMap) -> Result<SimpMap> {
        if self.cod != other.dom {
            return Err(Error::InvalidSimplicialMap("composite of non-adjacent maps".into()));
        }
        let levels = self
            .levels
            .iter()
            .enumerate()
            .map(|(n, l)| l.iter().map(|&x| other.levels[n][x]).collect())
            .collect();
        Ok(SimpMap {
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            levels,
        })
    }

    pub fn is_injective(&self) -> bool {
        self.levels.iter().enumerate().all(|(n, l)| {
            let mut seen = vec![false; self.cod.level_size(n)];
            l.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        })
    }

    pub fn is_surjective(&self) -> bool {
        self.levels.iter().enumerate().all(|(n, l)| {
            let mut seen = vec![false; self.cod.level_size(n)];
            for &y in l {
                seen[y] = true;
            }
            seen.into_iter().all(|b| b)
        })
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    fn first_violation(&self) -> Option<String> {
        let (x, y) = (&self.dom, &self.cod);
        if x.truncation() != y.truncation() {
            return Some(format!("truncations differ: {} vs {}", x.truncation(), y.truncation()));
        }
        if self.levels.len() != x.truncation() + 1 {
            return Some("wrong number of levels".into());
        }
        for (n, l) in self.levels.iter().enumerate() {
            if l.len() != x.level_size(n) || l.iter().any(|&v| v >= y.level_size(n)) {
                return Some(format!("level {n} is not a total function"));
            }
        }
        for n in 1..=x.truncation() {
            for i in 0..=n {
                for s in x.simplices(n) {
                    if self.levels[n - 1][x.face(n, i, s)] != y.face(n, i, self.levels[n][s]) {
                        return Some(format!("does not commute with d{i} on `{}` at level {n}", x.name(n, s)));
                    }
                }
            }
        }
        for n in 0..x.truncation() {
            for i in 0..=n {
                for s in x.simplices(n) {
                    if self.levels[n + 1][x.degen(n, i, s)] != y.degen(n, i, self.levels[n][s]) {
                        return Some(format!("does not commute with s{i} on `{}` at level {n}", x.name(n, s)));
                    }
                }
            }
        }
        None
    }
}

/// The sub-object on the simplices selected by `keep`, with its inclusion.
/// Fails if the selection is not closed under faces and degeneracies.
pub fn sub_object(x: &TruncSimpSet, keep: impl Fn(usize, Simplex) -> bool) -> Result<SimpMap> {
    let n_max = x.truncation();
    let kept: Vec<Vec<Simplex>> = (0..=n_max)
        .map(|n| x.simplices(n).filter(|&s| keep(n, s)).collect())
        .collect();
    let mut position: Vec<Vec<Option<Simplex>>> = x.sizes().iter().map(|&k| vec![None; k]).collect();
    let mut b = SimpSetBuilder::new(n_max);
    for (n, level) in kept.iter().enumerate() {
        for &s in level {
            position[n][s] = Some(b.add_simplex(n, x.name(n, s)));
        }
    }
    let find = |n: usize, s: Simplex| {
        position[n][s].ok_or_else(|| {
            Error::InvalidSimplicial(format!("selection not closed: `{}` at level {n} is missing", x.name(n, s)))
        })
    };
    for (n, level) in kept.iter().enumerate() {
        for (k, &s) in level.iter().enumerate() {
            if n > 0 {
                for i in 0..=n {
                    b.set_face(n, i, k, find(n - 1, x.face(n, i, s))?);
                }
            }
            if n < n_max {
                for i in 0..=n {
                    b.set_degen(n, i, k, find(n + 1, x.degen(n, i, s))?);
                }
            }
        }
    }
    let sub = b.build()?;
    Ok(SimpMap::new_unchecked(sub, x.clone(), kept))
}

/// The empty simplicial set.
pub fn empty(truncation: usize) -> TruncSimpSet {
    SimpSetBuilder::new(truncation).build().expect("empty simplicial set")
}
