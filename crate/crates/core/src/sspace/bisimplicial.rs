use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::names::UniqueNames;
use crate::simpset::{SimpMap, SimpSetBuilder, Simplex, TruncSimpSet};

/// A bisimplicial set truncated at horizontal level `N` and vertical level
/// `L`: finite sets `X_{n,l}` with horizontal operators acting on `n` and
/// vertical operators acting on `l`.
///
/// Row `n` is the vertical simplicial set `X_{n,•}` (the "space" of
/// `n`-simplices); column `l` is the horizontal simplicial set `X_{•,l}`.
#[derive(Clone)]
pub struct TruncBiSimpSet {
    inner: Arc<BiData>,
}

struct BiData {
    names: Vec<Vec<Vec<String>>>,
    rows: Vec<TruncSimpSet>,
    columns: Vec<TruncSimpSet>,
}

impl PartialEq for TruncBiSimpSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || (self.inner.rows == other.inner.rows && self.inner.columns == other.inner.columns)
    }
}

impl Eq for TruncBiSimpSet {}

impl fmt::Debug for TruncBiSimpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<Vec<usize>> = self.inner.names.iter().map(|r| r.iter().map(Vec::len).collect()).collect();
        f.debug_struct("TruncBiSimpSet").field("sizes", &sizes).finish()
    }
}

impl TruncBiSimpSet {
    pub fn htrunc(&self) -> usize {
        self.inner.names.len() - 1
    }

    pub fn vtrunc(&self) -> usize {
        self.inner.names[0].len() - 1
    }

    pub fn size(&self, n: usize, l: usize) -> usize {
        self.inner.names[n][l].len()
    }

    pub fn sizes(&self) -> Vec<Vec<usize>> {
        self.inner.names.iter().map(|r| r.iter().map(Vec::len).collect()).collect()
    }

    pub fn simplices(&self, n: usize, l: usize) -> std::ops::Range<Simplex> {
        0..self.size(n, l)
    }

    pub fn name(&self, n: usize, l: usize, x: Simplex) -> &str {
        &self.inner.names[n][l][x]
    }

    pub fn simplex(&self, n: usize, l: usize, name: &str) -> Result<Simplex> {
        self.inner.rows[n].simplex(l, name)
    }

    /// The vertical simplicial set `X_{n,•}`.
    pub fn row(&self, n: usize) -> &TruncSimpSet {
        &self.inner.rows[n]
    }

    /// The horizontal simplicial set `X_{•,l}`.
    pub fn column(&self, l: usize) -> &TruncSimpSet {
        &self.inner.columns[l]
    }

    /// Horizontal `d_i: X_{n,l} → X_{n-1,l}`.
    pub fn hface(&self, n: usize, l: usize, i: usize, x: Simplex) -> Simplex {
        self.inner.columns[l].face(n, i, x)
    }

    /// Horizontal `s_i: X_{n,l} → X_{n+1,l}`.
    pub fn hdegen(&self, n: usize, l: usize, i: usize, x: Simplex) -> Simplex {
        self.inner.columns[l].degen(n, i, x)
    }

    /// Vertical `d_i: X_{n,l} → X_{n,l-1}`.
    pub fn vface(&self, n: usize, l: usize, i: usize, x: Simplex) -> Simplex {
        self.inner.rows[n].face(l, i, x)
    }

    /// Vertical `s_i: X_{n,l} → X_{n,l+1}`.
    pub fn vdegen(&self, n: usize, l: usize, i: usize, x: Simplex) -> Simplex {
        self.inner.rows[n].degen(l, i, x)
    }

    /// Horizontal `d_i` as a map of rows `X_{n,•} → X_{n-1,•}`.
    pub fn hface_map(&self, n: usize, i: usize) -> SimpMap {
        let levels = (0..=self.vtrunc())
            .map(|l| self.column(l).face_table(n, i).to_vec())
            .collect();
        SimpMap::new(self.row(n).clone(), self.row(n - 1).clone(), levels).expect("horizontal face commutes with vertical operators")
    }

    /// Horizontal `s_i` as a map of rows `X_{n,•} → X_{n+1,•}`.
    pub fn hdegen_map(&self, n: usize, i: usize) -> SimpMap {
        let levels = (0..=self.vtrunc())
            .map(|l| self.column(l).degen_table(n, i).to_vec())
            .collect();
        SimpMap::new(self.row(n).clone(), self.row(n + 1).clone(), levels)
            .expect("horizontal degeneracy commutes with vertical operators")
    }

    /// The same data with fewer levels.
    pub fn truncate(&self, n: usize, l: usize) -> Result<TruncBiSimpSet> {
        if n > self.htrunc() || l > self.vtrunc() {
            return Err(Error::TruncationTooSmall {
                need: n.max(l),
                got: self.htrunc().min(self.vtrunc()),
            });
        }
        let rows: Vec<TruncSimpSet> = (0..=n).map(|k| self.row(k).truncate(l)).collect::<Result<_>>()?;
        let columns: Vec<TruncSimpSet> = (0..=l).map(|k| self.column(k).truncate(n)).collect::<Result<_>>()?;
        let names = rows.iter().map(|r| (0..=l).map(|k| r.names(k).to_vec()).collect()).collect();
        Ok(TruncBiSimpSet {
            inner: Arc::new(BiData { names, rows, columns }),
        })
    }
}

/// Builder for bisimplicial sets from explicit tables.
#[derive(Debug, Clone)]
pub struct BiSimpSetBuilder {
    names: Vec<Vec<Vec<String>>>,
    // [n][l][i][x]
    hfaces: Vec<Vec<Vec<Vec<Option<Simplex>>>>>,
    hdegens: Vec<Vec<Vec<Vec<Option<Simplex>>>>>,
    vfaces: Vec<Vec<Vec<Vec<Option<Simplex>>>>>,
    vdegens: Vec<Vec<Vec<Vec<Option<Simplex>>>>>,
}

impl BiSimpSetBuilder {
    pub fn new(htrunc: usize, vtrunc: usize) -> Self {
        let grid = |ops: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<Vec<Vec<Option<Simplex>>>>> {
            (0..=htrunc)
                .map(|n| (0..=vtrunc).map(|l| vec![Vec::new(); ops(n, l)]).collect())
                .collect()
        };
        BiSimpSetBuilder {
            names: vec![vec![Vec::new(); vtrunc + 1]; htrunc + 1],
            hfaces: grid(&|n, _| if n == 0 { 0 } else { n + 1 }),
            hdegens: grid(&|n, _| if n < htrunc { n + 1 } else { 0 }),
            vfaces: grid(&|_, l| if l == 0 { 0 } else { l + 1 }),
            vdegens: grid(&|_, l| if l < vtrunc { l + 1 } else { 0 }),
        }
    }

    pub fn htrunc(&self) -> usize {
        self.names.len() - 1
    }

    pub fn vtrunc(&self) -> usize {
        self.names[0].len() - 1
    }

    pub fn add_simplex(&mut self, n: usize, l: usize, name: impl Into<String>) -> Simplex {
        self.names[n][l].push(name.into());
        for tables in [&mut self.hfaces, &mut self.hdegens, &mut self.vfaces, &mut self.vdegens] {
            for t in tables[n][l].iter_mut() {
                t.push(None);
            }
        }
        self.names[n][l].len() - 1
    }

    pub fn size(&self, n: usize, l: usize) -> usize {
        self.names[n][l].len()
    }

    pub fn set_hface(&mut self, n: usize, l: usize, i: usize, x: Simplex, y: Simplex) {
        self.hfaces[n][l][i][x] = Some(y);
    }

    pub fn set_hdegen(&mut self, n: usize, l: usize, i: usize, x: Simplex, y: Simplex) {
        self.hdegens[n][l][i][x] = Some(y);
    }

    pub fn set_vface(&mut self, n: usize, l: usize, i: usize, x: Simplex, y: Simplex) {
        self.vfaces[n][l][i][x] = Some(y);
    }

    pub fn set_vdegen(&mut self, n: usize, l: usize, i: usize, x: Simplex, y: Simplex) {
        self.vdegens[n][l][i][x] = Some(y);
    }

    pub fn build(self) -> Result<TruncBiSimpSet> {
        let (nn, ll) = (self.htrunc(), self.vtrunc());
        let wrap = |e: Error| match e {
            Error::InvalidSimplicial(m) => Error::InvalidBisimplicial(m),
            other => other,
        };
        let mut rows = Vec::new();
        for n in 0..=nn {
            let mut b = SimpSetBuilder::new(ll);
            for l in 0..=ll {
                for name in &self.names[n][l] {
                    b.add_simplex(l, name.clone());
                }
                for (i, t) in self.vfaces[n][l].iter().enumerate() {
                    for (x, y) in t.iter().enumerate() {
                        let y = y.ok_or_else(|| missing("vertical d", i, n, l, &self.names[n][l][x]))?;
                        check_range(y, self.names[n][l - 1].len(), "vertical d", n, l)?;
                        b.set_face(l, i, x, y);
                    }
                }
                for (i, t) in self.vdegens[n][l].iter().enumerate() {
                    for (x, y) in t.iter().enumerate() {
                        let y = y.ok_or_else(|| missing("vertical s", i, n, l, &self.names[n][l][x]))?;
                        check_range(y, self.names[n][l + 1].len(), "vertical s", n, l)?;
                        b.set_degen(l, i, x, y);
                    }
                }
            }
            rows.push(b.build().map_err(|e| wrap(e).context(&format!("row {n}")))?);
        }
        let mut columns = Vec::new();
        for l in 0..=ll {
            let mut b = SimpSetBuilder::new(nn);
            for n in 0..=nn {
                for name in &self.names[n][l] {
                    b.add_simplex(n, name.clone());
                }
                for (i, t) in self.hfaces[n][l].iter().enumerate() {
                    for (x, y) in t.iter().enumerate() {
                        let y = y.ok_or_else(|| missing("horizontal d", i, n, l, &self.names[n][l][x]))?;
                        check_range(y, self.names[n - 1][l].len(), "horizontal d", n, l)?;
                        b.set_face(n, i, x, y);
                    }
                }
                for (i, t) in self.hdegens[n][l].iter().enumerate() {
                    for (x, y) in t.iter().enumerate() {
                        let y = y.ok_or_else(|| missing("horizontal s", i, n, l, &self.names[n][l][x]))?;
                        check_range(y, self.names[n + 1][l].len(), "horizontal s", n, l)?;
                        b.set_degen(n, i, x, y);
                    }
                }
            }
            columns.push(b.build().map_err(|e| wrap(e).context(&format!("column {l}")))?);
        }
        let t = TruncBiSimpSet {
            inner: Arc::new(BiData {
                names: self.names,
                rows,
                columns,
            }),
        };
        match commutation_violations(&t).into_iter().next() {
            None => Ok(t),
            Some(v) => Err(Error::InvalidBisimplicial(v)),
        }
    }
}

impl Error {
    fn context(self, what: &str) -> Error {
        match self {
            Error::InvalidBisimplicial(m) => Error::InvalidBisimplicial(format!("{what}: {m}")),
            other => other,
        }
    }
}

fn missing(op: &str, i: usize, n: usize, l: usize, name: &str) -> Error {
    Error::InvalidBisimplicial(format!("{op}_{i} of `{name}` at ({n},{l}) is undefined"))
}

fn check_range(y: Simplex, size: usize, op: &str, n: usize, l: usize) -> Result<()> {
    if y < size {
        Ok(())
    } else {
        Err(Error::InvalidBisimplicial(format!("{op} image out of range at ({n},{l})")))
    }
}

/// Failures of horizontal/vertical commutation.
pub fn commutation_violations(t: &TruncBiSimpSet) -> Vec<String> {
    let mut out = Vec::new();
    let (nn, ll) = (t.htrunc(), t.vtrunc());
    for n in 0..=nn {
        for l in 0..=ll {
            for x in t.simplices(n, l) {
                let h_ops = hops(n, nn);
                let v_ops = hops(l, ll);
                for &(hf, i) in &h_ops {
                    for &(vf, j) in &v_ops {
                        let hx = |x| if hf { t.hface(n, l, i, x) } else { t.hdegen(n, l, i, x) };
                        let n2 = if hf { n - 1 } else { n + 1 };
                        let l2 = if vf { l - 1 } else { l + 1 };
                        let a = {
                            let y = hx(x);
                            if vf {
                                t.vface(n2, l, j, y)
                            } else {
                                t.vdegen(n2, l, j, y)
                            }
                        };
                        let b = {
                            let y = if vf { t.vface(n, l, j, x) } else { t.vdegen(n, l, j, x) };
                            if hf {
                                t.hface(n, l2, i, y)
                            } else {
                                t.hdegen(n, l2, i, y)
                            }
                        };
                        if a != b {
                            out.push(format!(
                                "horizontal {}{i} and vertical {}{j} do not commute on `{}` at ({n},{l})",
                                if hf { "d" } else { "s" },
                                if vf { "d" } else { "s" },
                                t.name(n, l, x)
                            ));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Operators out of level `k` in a direction truncated at `top`:
/// `(is_face, index)`.
fn hops(k: usize, top: usize) -> Vec<(bool, usize)> {
    let mut v = Vec::new();
    if k > 0 {
        v.extend((0..=k).map(|i| (true, i)));
    }
    if k < top {
        v.extend((0..=k).map(|i| (false, i)));
    }
    v
}

/// Operators acting on one direction of a structured simplex.
pub(crate) struct Ops<'a, T> {
    pub face: Box<dyn Fn(usize, usize, usize, &T) -> T + 'a>,
    pub degen: Box<dyn Fn(usize, usize, usize, &T) -> T + 'a>,
}

/// Builds a bisimplicial set from structured simplices `levels[n][l]` and
/// the operators on them; images are looked up by value. Operators receive
/// `(n, l, i, simplex)`.
pub(crate) fn tabulate2<T: Clone + Eq + Hash>(
    levels: Vec<Vec<Vec<T>>>,
    name: impl Fn(usize, usize, &T) -> String,
    horizontal: Ops<'_, T>,
    vertical: Ops<'_, T>,
) -> Result<TruncBiSimpSet> {
    let (nn, ll) = (levels.len() - 1, levels[0].len() - 1);
    let index: Vec<Vec<HashMap<&T, Simplex>>> = levels
        .iter()
        .map(|r| r.iter().map(|c| c.iter().enumerate().map(|(k, t)| (t, k)).collect()).collect())
        .collect();
    let mut b = BiSimpSetBuilder::new(nn, ll);
    for (n, row) in levels.iter().enumerate() {
        for (l, cell) in row.iter().enumerate() {
            let mut unique = UniqueNames::default();
            for t in cell {
                b.add_simplex(n, l, unique.take(name(n, l, t)));
            }
        }
    }
    let lookup = |n: usize, l: usize, t: &T| -> Result<Simplex> {
        index[n][l]
            .get(t)
            .copied()
            .ok_or_else(|| Error::InvalidBisimplicial(format!("operator image missing at ({n},{l})")))
    };
    for (n, row) in levels.iter().enumerate() {
        for (l, cell) in row.iter().enumerate() {
            for (x, t) in cell.iter().enumerate() {
                if n > 0 {
                    for i in 0..=n {
                        b.set_hface(n, l, i, x, lookup(n - 1, l, &(horizontal.face)(n, l, i, t))?);
                    }
                }
                if n < nn {
                    for i in 0..=n {
                        b.set_hdegen(n, l, i, x, lookup(n + 1, l, &(horizontal.degen)(n, l, i, t))?);
                    }
                }
                if l > 0 {
                    for i in 0..=l {
                        b.set_vface(n, l, i, x, lookup(n, l - 1, &(vertical.face)(n, l, i, t))?);
                    }
                }
                if l < ll {
                    for i in 0..=l {
                        b.set_vdegen(n, l, i, x, lookup(n, l + 1, &(vertical.degen)(n, l, i, t))?);
                    }
                }
            }
        }
    }
    b.build()
}

/// A map of bisimplicial sets, one function per `(n, l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSimpMap {
    dom: TruncBiSimpSet,
    cod: TruncBiSimpSet,
    levels: Vec<Vec<Vec<Simplex>>>,
}

impl BiSimpMap {
    pub fn new(dom: TruncBiSimpSet, cod: TruncBiSimpSet, levels: Vec<Vec<Vec<Simplex>>>) -> Result<Self> {
        if (dom.htrunc(), dom.vtrunc()) != (cod.htrunc(), cod.vtrunc()) {
            return Err(Error::InvalidSimplicialMap("truncations differ".into()));
        }
        if levels.len() != dom.htrunc() + 1 {
            return Err(Error::InvalidSimplicialMap("wrong number of rows".into()));
        }
        for (n, row) in levels.iter().enumerate() {
            SimpMap::new(dom.row(n).clone(), cod.row(n).clone(), row.clone())?;
        }
        for l in 0..=dom.vtrunc() {
            let col = levels.iter().map(|r| r[l].clone()).collect();
            SimpMap::new(dom.column(l).clone(), cod.column(l).clone(), col)?;
        }
        Ok(BiSimpMap { dom, cod, levels })
    }

    pub fn domain(&self) -> &TruncBiSimpSet {
        &self.dom
    }

    pub fn codomain(&self) -> &TruncBiSimpSet {
        &self.cod
    }

    pub fn at(&self, n: usize, l: usize, x: Simplex) -> Simplex {
        self.levels[n][l][x]
    }

    pub fn levels(&self) -> &[Vec<Vec<Simplex>>] {
        &self.levels
    }

    pub fn is_injective(&self) -> bool {
        (0..self.levels.len()).all(|n| self.row_map(n).is_injective())
    }

    /// The map on row `n`.
    pub fn row_map(&self, n: usize) -> SimpMap {
        SimpMap::new(self.dom.row(n).clone(), self.cod.row(n).clone(), self.levels[n].clone())
            .expect("validated at construction")
    }
}

/// `i_F^*(S)`: `X_{n,l} = S_n`, constant in the vertical direction.
pub fn embed_vertical(s: &TruncSimpSet, vtrunc: usize) -> TruncBiSimpSet {
    let levels = (0..=s.truncation())
        .map(|n| (0..=vtrunc).map(|_| s.simplices(n).collect()).collect())
        .collect();
    tabulate2(
        levels,
        |n, _, &x| s.name(n, x).to_string(),
        Ops {
            face: Box::new(|n, _, i, &x| s.face(n, i, x)),
            degen: Box::new(|n, _, i, &x| s.degen(n, i, x)),
        },
        Ops {
            face: Box::new(|_, _, _, &x| x),
            degen: Box::new(|_, _, _, &x| x),
        },
    )
    .expect("vertical embedding")
}

/// `X_{n,l} = S_l`, constant in the horizontal direction.
pub fn embed_horizontal(s: &TruncSimpSet, htrunc: usize) -> TruncBiSimpSet {
    let levels = (0..=htrunc)
        .map(|_| (0..=s.truncation()).map(|l| s.simplices(l).collect()).collect())
        .collect();
    tabulate2(
        levels,
        |_, l, &x| s.name(l, x).to_string(),
        Ops {
            face: Box::new(|_, _, _, &x| x),
            degen: Box::new(|_, _, _, &x| x),
        },
        Ops {
            face: Box::new(|_, l, i, &x| s.face(l, i, x)),
            degen: Box::new(|_, l, i, &x| s.degen(l, i, x)),
        },
    )
    .expect("horizontal embedding")
}

/// The vertically constant map induced by a simplicial map.
pub fn embed_vertical_map(f: &SimpMap, vtrunc: usize) -> BiSimpMap {
    let dom = embed_vertical(f.domain(), vtrunc);
    let cod = embed_vertical(f.codomain(), vtrunc);
    let levels = f.levels().iter().map(|l| vec![l.clone(); vtrunc + 1]).collect();
    BiSimpMap::new(dom, cod, levels).expect("vertical embedding of a map")
}
