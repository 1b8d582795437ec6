use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::names::UniqueNames;

/// Index of a simplex within its level.
pub type Simplex = usize;

/// A simplicial set truncated at level `N`: finite levels `X_0..X_N` with
/// explicit face and degeneracy tables.
///
/// `face(n, i, x)` is `d_i: X_n → X_{n-1}` and `degen(n, i, x)` is
/// `s_i: X_n → X_{n+1}`. Faces follow the operator convention, so at level 1
/// `d_0` is the target and `d_1` the source.
#[derive(Clone)]
pub struct TruncSimpSet {
    inner: Arc<SimpData>,
}

#[derive(PartialEq, Eq)]
struct SimpData {
    names: Vec<Vec<String>>,
    index: Vec<HashMap<String, Simplex>>,
    // faces[n][i][x] for 1 ≤ n ≤ N
    faces: Vec<Vec<Vec<Simplex>>>,
    // degens[n][i][x] for n < N
    degens: Vec<Vec<Vec<Simplex>>>,
    // one (i, y) with x = s_i y, if x is degenerate
    degenerate: Vec<Vec<Option<(usize, Simplex)>>>,
}

impl PartialEq for TruncSimpSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for TruncSimpSet {}

impl fmt::Debug for TruncSimpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<usize> = self.inner.names.iter().map(Vec::len).collect();
        f.debug_struct("TruncSimpSet").field("sizes", &sizes).finish()
    }
}

impl TruncSimpSet {
    pub fn truncation(&self) -> usize {
        self.inner.names.len() - 1
    }

    pub fn level_size(&self, n: usize) -> usize {
        self.inner.names[n].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.inner.names.iter().map(Vec::len).collect()
    }

    pub fn simplices(&self, n: usize) -> std::ops::Range<Simplex> {
        0..self.level_size(n)
    }

    pub fn name(&self, n: usize, x: Simplex) -> &str {
        &self.inner.names[n][x]
    }

    pub fn names(&self, n: usize) -> &[String] {
        &self.inner.names[n]
    }

    pub fn simplex(&self, n: usize, name: &str) -> Result<Simplex> {
        self.inner
            .index
            .get(n)
            .and_then(|m| m.get(name))
            .copied()
            .ok_or_else(|| Error::UnknownSimplex {
                level: n,
                name: name.to_string(),
            })
    }

    /// `d_i: X_n → X_{n-1}`.
    pub fn face(&self, n: usize, i: usize, x: Simplex) -> Simplex {
        self.inner.faces[n][i][x]
    }

    /// `s_i: X_n → X_{n+1}`, for `n < N`.
    pub fn degen(&self, n: usize, i: usize, x: Simplex) -> Simplex {
        self.inner.degens[n][i][x]
    }

    pub fn face_table(&self, n: usize, i: usize) -> &[Simplex] {
        &self.inner.faces[n][i]
    }

    pub fn degen_table(&self, n: usize, i: usize) -> &[Simplex] {
        &self.inner.degens[n][i]
    }

    /// Some `(i, y)` with `x = s_i(y)`, or `None` when `x` is nondegenerate.
    pub fn degenerate_from(&self, n: usize, x: Simplex) -> Option<(usize, Simplex)> {
        self.inner.degenerate[n][x]
    }

    pub fn is_degenerate(&self, n: usize, x: Simplex) -> bool {
        self.inner.degenerate[n][x].is_some()
    }

    pub fn nondegenerate(&self, n: usize) -> Vec<Simplex> {
        self.simplices(n).filter(|&x| !self.is_degenerate(n, x)).collect()
    }

    /// All faces of `x`, `d_0 x .. d_n x`.
    pub fn faces_of(&self, n: usize, x: Simplex) -> Vec<Simplex> {
        (0..=n).map(|i| self.face(n, i, x)).collect()
    }

    /// Restricts an `n`-simplex to the face spanned by the increasing vertex
    /// list `keep`.
    pub fn restrict(&self, n: usize, x: Simplex, keep: &[usize]) -> Simplex {
        let (mut level, mut s) = (n, x);
        for v in (0..=n).rev() {
            if !keep.contains(&v) {
                s = self.face(level, v, s);
                level -= 1;
            }
        }
        s
    }

    /// The `k`-th vertex of an `n`-simplex.
    pub fn vertex(&self, n: usize, x: Simplex, k: usize) -> Simplex {
        self.restrict(n, x, &[k])
    }

    /// Applies `s_{i_1}` first, then `s_{i_2}`, and so on.
    pub fn degen_iter(&self, n: usize, x: Simplex, ops: &[usize]) -> Simplex {
        let (mut level, mut s) = (n, x);
        for &i in ops {
            s = self.degen(level, i, s);
            level += 1;
        }
        s
    }

    /// The same data with levels above `m` forgotten.
    pub fn truncate(&self, m: usize) -> Result<TruncSimpSet> {
        if m > self.truncation() {
            return Err(Error::TruncationTooSmall {
                need: m,
                got: self.truncation(),
            });
        }
        let d = &*self.inner;
        Ok(TruncSimpSet {
            inner: Arc::new(SimpData {
                names: d.names[..=m].to_vec(),
                index: d.index[..=m].to_vec(),
                faces: d.faces[..=m].to_vec(),
                degens: d.degens[..m].to_vec(),
                degenerate: d.degenerate[..=m].to_vec(),
            }),
        })
    }

    pub fn total_size(&self) -> usize {
        self.inner.names.iter().map(Vec::len).sum()
    }
}

/// Builder for simplicial sets given as explicit tables. `build` validates
/// the simplicial identities.
#[derive(Debug, Clone)]
pub struct SimpSetBuilder {
    names: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<Option<Simplex>>>>,
    degens: Vec<Vec<Vec<Option<Simplex>>>>,
}

impl SimpSetBuilder {
    pub fn new(truncation: usize) -> Self {
        SimpSetBuilder {
            names: vec![Vec::new(); truncation + 1],
            faces: (0..=truncation)
                .map(|n| if n == 0 { Vec::new() } else { vec![Vec::new(); n + 1] })
                .collect(),
            degens: (0..truncation).map(|n| vec![Vec::new(); n + 1]).collect(),
        }
    }

    pub fn truncation(&self) -> usize {
        self.names.len() - 1
    }

    pub fn add_simplex(&mut self, n: usize, name: impl Into<String>) -> Simplex {
        self.names[n].push(name.into());
        for table in self.faces[n].iter_mut() {
            table.push(None);
        }
        if n < self.truncation() {
            for table in self.degens[n].iter_mut() {
                table.push(None);
            }
        }
        self.names[n].len() - 1
    }

    pub fn set_face(&mut self, n: usize, i: usize, x: Simplex, y: Simplex) {
        self.faces[n][i][x] = Some(y);
    }

    pub fn set_degen(&mut self, n: usize, i: usize, x: Simplex, y: Simplex) {
        self.degens[n][i][x] = Some(y);
    }

    pub fn level_size(&self, n: usize) -> usize {
        self.names[n].len()
    }

    pub fn build(self) -> Result<TruncSimpSet> {
        let n_max = self.truncation();
        let mut index = Vec::new();
        for (n, level) in self.names.iter().enumerate() {
            let mut m = HashMap::new();
            for (x, name) in level.iter().enumerate() {
                if m.insert(name.clone(), x).is_some() {
                    return Err(Error::InvalidSimplicial(format!("duplicate simplex `{name}` at level {n}")));
                }
            }
            index.push(m);
        }
        let total = |tables: Vec<Vec<Vec<Option<Simplex>>>>, what: &str, shift: isize| -> Result<Vec<Vec<Vec<Simplex>>>> {
            tables
                .into_iter()
                .enumerate()
                .map(|(n, per_i)| {
                    per_i
                        .into_iter()
                        .enumerate()
                        .map(|(i, table)| {
                            let target = (n as isize + shift) as usize;
                            table
                                .into_iter()
                                .enumerate()
                                .map(|(x, y)| match y {
                                    Some(y) if y < self.names[target].len() => Ok(y),
                                    Some(_) => Err(Error::InvalidSimplicial(format!(
                                        "{what}_{i} of `{}` at level {n} is out of range",
                                        self.names[n][x]
                                    ))),
                                    None => Err(Error::InvalidSimplicial(format!(
                                        "{what}_{i} of `{}` at level {n} is undefined",
                                        self.names[n][x]
                                    ))),
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect()
        };
        let faces = total(self.faces, "d", -1)?;
        let degens = total(self.degens, "s", 1)?;
        let mut degenerate: Vec<Vec<Option<(usize, Simplex)>>> =
            self.names.iter().map(|l| vec![None; l.len()]).collect();
        for n in 0..n_max {
            for i in (0..=n).rev() {
                for (y, &x) in degens[n][i].iter().enumerate() {
                    degenerate[n + 1][x] = Some((i, y));
                }
            }
        }
        let s = TruncSimpSet {
            inner: Arc::new(SimpData {
                names: self.names,
                index,
                faces,
                degens,
                degenerate,
            }),
        };
        let violations = simplicial_violations(&s);
        match violations.first() {
            None => Ok(s),
            Some(v) => Err(Error::InvalidSimplicial(v.clone())),
        }
    }
}

/// Every failure of the simplicial identities, as readable witnesses.
pub fn simplicial_violations(s: &TruncSimpSet) -> Vec<String> {
    let mut out = Vec::new();
    let n_max = s.truncation();
    // d_i d_j = d_{j-1} d_i for i < j
    for n in 2..=n_max {
        for j in 1..=n {
            for i in 0..j {
                for x in s.simplices(n) {
                    let l = s.face(n - 1, i, s.face(n, j, x));
                    let r = s.face(n - 1, j - 1, s.face(n, i, x));
                    if l != r {
                        out.push(format!("d{i} d{j} != d{} d{i} on `{}` at level {n}", j - 1, s.name(n, x)));
                    }
                }
            }
        }
    }
    for n in 0..n_max {
        for j in 0..=n {
            for x in s.simplices(n) {
                let y = s.degen(n, j, x);
                for i in 0..=n + 1 {
                    let l = s.face(n + 1, i, y);
                    let r = if i == j || i == j + 1 {
                        Some(x)
                    } else if n == 0 {
                        None
                    } else if i < j {
                        Some(s.degen(n - 1, j - 1, s.face(n, i, x)))
                    } else {
                        Some(s.degen(n - 1, j, s.face(n, i - 1, x)))
                    };
                    if let Some(r) = r {
                        if l != r {
                            out.push(format!("d{i} s{j} identity fails on `{}` at level {n}", s.name(n, x)));
                        }
                    }
                }
            }
        }
    }
    // s_i s_j = s_{j+1} s_i for i ≤ j
    for n in 0..n_max.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                for x in s.simplices(n) {
                    let l = s.degen(n + 1, i, s.degen(n, j, x));
                    let r = s.degen(n + 1, j + 1, s.degen(n, i, x));
                    if l != r {
                        out.push(format!("s{i} s{j} != s{} s{i} on `{}` at level {n}", j + 1, s.name(n, x)));
                    }
                }
            }
        }
    }
    out
}

/// Builds a simplicial set from levels of structured simplices and the
/// operators acting on them. Face and degeneracy images are looked up by
/// value.
pub(crate) fn tabulate<T: Clone + Eq + Hash>(
    levels: Vec<Vec<T>>,
    name: impl Fn(usize, &T) -> String,
    face: impl Fn(usize, usize, &T) -> T,
    degen: impl Fn(usize, usize, &T) -> T,
) -> Result<TruncSimpSet> {
    let n_max = levels.len() - 1;
    let index: Vec<HashMap<&T, Simplex>> = levels
        .iter()
        .map(|l| l.iter().enumerate().map(|(k, t)| (t, k)).collect())
        .collect();
    let mut b = SimpSetBuilder::new(n_max);
    for (n, level) in levels.iter().enumerate() {
        let mut unique = UniqueNames::default();
        for t in level {
            b.add_simplex(n, unique.take(name(n, t)));
        }
    }
    let lookup = |n: usize, t: &T, what: &str| -> Result<Simplex> {
        index[n]
            .get(t)
            .copied()
            .ok_or_else(|| Error::InvalidSimplicial(format!("{what} image missing at level {n}")))
    };
    for (n, level) in levels.iter().enumerate() {
        for (x, t) in level.iter().enumerate() {
            if n > 0 {
                for i in 0..=n {
                    let y = lookup(n - 1, &face(n, i, t), "face")?;
                    b.set_face(n, i, x, y);
                }
            }
            if n < n_max {
                for i in 0..=n {
                    let y = lookup(n + 1, &degen(n, i, t), "degeneracy")?;
                    b.set_degen(n, i, x, y);
                }
            }
        }
    }
    b.build()
}
