use std::collections::HashMap;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Functor, MorId, ObId};
use crate::simpset::map::{sub_object, SimpMap};
use crate::simpset::simplicial::{tabulate, Simplex, TruncSimpSet};

/// Monotone maps `[m] → [n]`, lexicographically ordered.
pub fn monotone_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, lo: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=n {
            cur.push(v);
            go(len, v, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m + 1, 0, n, &mut Vec::new(), &mut out);
    out
}

/// Name of a simplex of `Δ[n]` given by its vertex sequence: `"012"`, or
/// comma separated when `n ≥ 10`.
pub fn vertex_name(n: usize, vs: &[usize]) -> String {
    if n < 10 {
        vs.iter().map(|v| v.to_string()).collect()
    } else {
        vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// The standard simplex `Δ[n]` truncated at `trunc`.
pub fn delta(n: usize, trunc: usize) -> TruncSimpSet {
    tabulate(
        (0..=trunc).map(|m| monotone_maps(m, n)).collect(),
        |_, vs| vertex_name(n, vs),
        |_, i, vs| {
            let mut v = vs.clone();
            v.remove(i);
            v
        },
        |_, i, vs| {
            let mut v = vs.clone();
            v.insert(i, vs[i]);
            v
        },
    )
    .expect("standard simplex")
}

fn vertex_sets(n: usize, trunc: usize) -> (TruncSimpSet, Vec<Vec<Vec<usize>>>) {
    let d = delta(n, trunc);
    let maps = (0..=trunc).map(|m| monotone_maps(m, n)).collect();
    (d, maps)
}

fn sub_delta(n: usize, trunc: usize, keep: impl Fn(&[bool]) -> bool) -> SimpMap {
    let (d, maps) = vertex_sets(n, trunc);
    sub_object(&d, |m, s| {
        let mut hit = vec![false; n + 1];
        for &v in &maps[m][s] {
            hit[v] = true;
        }
        keep(&hit)
    })
    .expect("sub-object of a standard simplex")
}

/// `∂Δ[n] → Δ[n]`: the non-surjective maps.
pub fn boundary_inclusion(n: usize, trunc: usize) -> SimpMap {
    sub_delta(n, trunc, |hit| hit.iter().any(|&h| !h))
}

pub fn boundary(n: usize, trunc: usize) -> TruncSimpSet {
    boundary_inclusion(n, trunc).domain().clone()
}

/// `Λ[n]_i → Δ[n]`: maps whose image misses some vertex other than `i`.
pub fn horn_inclusion(n: usize, i: usize, trunc: usize) -> Result<SimpMap> {
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok(sub_delta(n, trunc, |hit| (0..=n).any(|j| j != i && !hit[j])))
}

pub fn horn(n: usize, i: usize, trunc: usize) -> Result<TruncSimpSet> {
    Ok(horn_inclusion(n, i, trunc)?.domain().clone())
}

/// The spine of `Δ[n]`: maps whose image lies in some `{k, k+1}`.
pub fn spine_inclusion(n: usize, trunc: usize) -> SimpMap {
    sub_delta(n, trunc, |hit| {
        let vs: Vec<usize> = (0..=n).filter(|&v| hit[v]).collect();
        vs.len() == 1 || (vs.len() == 2 && vs[1] == vs[0] + 1)
    })
}

pub fn spine(n: usize, trunc: usize) -> TruncSimpSet {
    spine_inclusion(n, trunc).domain().clone()
}

/// A constant simplicial set: the given points at every level.
pub fn discrete(points: &[String], trunc: usize) -> TruncSimpSet {
    tabulate(
        (0..=trunc).map(|_| (0..points.len()).collect()).collect(),
        |_, &p| points[p].clone(),
        |_, _, &p| p,
        |_, _, &p| p,
    )
    .expect("discrete simplicial set")
}

/// A composable chain `x_0 → x_1 → … → x_n`, stored as its first object and
/// its morphisms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Chain {
    pub start: ObId,
    pub arrows: Vec<MorId>,
}

impl Chain {
    pub(crate) fn vertex(&self, c: &FinCategory, k: usize) -> ObId {
        if k == 0 {
            self.start
        } else {
            c.tgt(self.arrows[k - 1])
        }
    }
}

pub(crate) fn chains(c: &FinCategory, trunc: usize) -> Vec<Vec<Chain>> {
    let mut levels: Vec<Vec<Chain>> = vec![c
        .objects()
        .map(|x| Chain {
            start: x,
            arrows: Vec::new(),
        })
        .collect()];
    for n in 1..=trunc {
        let mut next = Vec::new();
        for ch in &levels[n - 1] {
            let end = ch.vertex(c, n - 1);
            for &f in c.out_of(end) {
                let mut arrows = ch.arrows.clone();
                arrows.push(f);
                next.push(Chain {
                    start: ch.start,
                    arrows,
                });
            }
        }
        levels.push(next);
    }
    levels
}

pub(crate) fn chain_face(c: &FinCategory, n: usize, i: usize, ch: &Chain) -> Chain {
    let mut arrows = ch.arrows.clone();
    let mut start = ch.start;
    if i == 0 {
        start = c.tgt(arrows[0]);
        arrows.remove(0);
    } else if i == n {
        arrows.pop();
    } else {
        let g = arrows.remove(i);
        arrows[i - 1] = c.compose(g, arrows[i - 1]);
    }
    Chain { start, arrows }
}

pub(crate) fn chain_degen(c: &FinCategory, i: usize, ch: &Chain) -> Chain {
    let mut arrows = ch.arrows.clone();
    arrows.insert(i, c.ident(ch.vertex(c, i)));
    Chain {
        start: ch.start,
        arrows,
    }
}

/// The nerve of a category truncated at `trunc`: level `n` holds the
/// composable chains of length `n`. `d_0` drops the first arrow, `d_n` the
/// last, inner faces compose; `s_i` inserts an identity at vertex `i`.
pub fn nerve(c: &FinCategory, trunc: usize) -> TruncSimpSet {
    tabulate(
        chains(c, trunc),
        |n, ch| {
            if n == 0 {
                c.object_name(ch.start).to_string()
            } else {
                ch.arrows
                    .iter()
                    .map(|&f| c.morphism_name(f))
                    .collect::<Vec<_>>()
                    .join(",")
            }
        },
        |n, i, ch| chain_face(c, n, i, ch),
        |_, i, ch| chain_degen(c, i, ch),
    )
    .expect("nerve of a valid category")
}

/// `N(f)`: the simplicial map induced by a functor, applied chainwise.
pub fn nerve_map(f: &Functor, trunc: usize) -> SimpMap {
    let (c, d) = (f.domain(), f.codomain());
    let target = chains(d, trunc);
    let levels = chains(c, trunc)
        .iter()
        .zip(&target)
        .map(|(level, tl)| {
            let index: HashMap<&Chain, Simplex> = tl.iter().enumerate().map(|(k, ch)| (ch, k)).collect();
            level
                .iter()
                .map(|ch| {
                    let image = Chain {
                        start: f.ob(ch.start),
                        arrows: ch.arrows.iter().map(|&a| f.mor(a)).collect(),
                    };
                    index[&image]
                })
                .collect()
        })
        .collect();
    SimpMap::new_unchecked(nerve(c, trunc), nerve(d, trunc), levels)
}

/// A limit cone with two legs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub object: TruncSimpSet,
    pub first: SimpMap,
    pub second: SimpMap,
}

/// Levelwise product with its projections.
pub fn product(x: &TruncSimpSet, y: &TruncSimpSet) -> Result<Cone> {
    fiber_product(x, y, |_, _, _| true)
}

/// Levelwise fiber product of the cospan `f: X → Z ← Y: g`.
pub fn pullback(f: &SimpMap, g: &SimpMap) -> Result<Cone> {
    if f.codomain() != g.codomain() {
        return Err(Error::Precondition("pullback of maps with different codomains".into()));
    }
    fiber_product(f.domain(), g.domain(), |n, a, b| f.at(n, a) == g.at(n, b))
}

fn fiber_product(x: &TruncSimpSet, y: &TruncSimpSet, keep: impl Fn(usize, Simplex, Simplex) -> bool) -> Result<Cone> {
    if x.truncation() != y.truncation() {
        return Err(Error::TruncationMismatch(x.truncation(), y.truncation()));
    }
    let levels: Vec<Vec<(Simplex, Simplex)>> = (0..=x.truncation())
        .map(|n| {
            x.simplices(n)
                .flat_map(|a| y.simplices(n).map(move |b| (a, b)))
                .filter(|&(a, b)| keep(n, a, b))
                .collect()
        })
        .collect();
    let object = tabulate(
        levels.clone(),
        |n, &(a, b)| format!("({},{})", x.name(n, a), y.name(n, b)),
        |n, i, &(a, b)| (x.face(n, i, a), y.face(n, i, b)),
        |n, i, &(a, b)| (x.degen(n, i, a), y.degen(n, i, b)),
    )?;
    let first = SimpMap::new(
        object.clone(),
        x.clone(),
        levels.iter().map(|l| l.iter().map(|p| p.0).collect()).collect(),
    )?;
    let second = SimpMap::new(
        object.clone(),
        y.clone(),
        levels.iter().map(|l| l.iter().map(|p| p.1).collect()).collect(),
    )?;
    Ok(Cone { object, first, second })
}

/// Path components of `X_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    /// Component of each vertex.
    pub labels: Vec<usize>,
    /// Vertices of each component, ordered by least member.
    pub classes: Vec<Vec<Simplex>>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn same(&self, a: Simplex, b: Simplex) -> bool {
        self.labels[a] == self.labels[b]
    }
}

/// The finest partition of `X_0` identifying the two endpoints of every edge.
pub fn pi0(x: &TruncSimpSet) -> Result<Components> {
    if x.truncation() < 1 {
        return Err(Error::TruncationTooSmall {
            need: 1,
            got: x.truncation(),
        });
    }
    let mut uf = UnionFind::<usize>::new(x.level_size(0));
    for e in x.simplices(1) {
        uf.union(x.face(1, 0, e), x.face(1, 1, e));
    }
    Ok(components_from(x.level_size(0), |v| uf.find(v)))
}

pub(crate) fn components_from(n: usize, root: impl Fn(usize) -> usize) -> Components {
    let mut label_of_root = std::collections::HashMap::new();
    let mut labels = Vec::with_capacity(n);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let r = root(v);
        let next = label_of_root.len();
        let l = *label_of_root.entry(r).or_insert(next);
        if l == classes.len() {
            classes.push(Vec::new());
        }
        classes[l].push(v);
        labels.push(l);
    }
    Components { labels, classes }
}

/// The map `Δ[m] → Δ[n]` induced by a monotone vertex map `[m] → [n]`.
pub fn delta_map(m: usize, n: usize, vertices: &[usize], trunc: usize) -> Result<SimpMap> {
    if vertices.len() != m + 1 || vertices.windows(2).any(|w| w[0] > w[1]) || vertices.iter().any(|&v| v > n) {
        return Err(Error::Precondition(format!("{vertices:?} is not a monotone map [{m}] → [{n}]")));
    }
    let (dm, dn) = (delta(m, trunc), delta(n, trunc));
    let levels = (0..=trunc)
        .map(|k| {
            monotone_maps(k, m)
                .iter()
                .map(|vs| {
                    let image: Vec<usize> = vs.iter().map(|&v| vertices[v]).collect();
                    dn.simplex(k, &vertex_name(n, &image))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SimpMap::new(dm, dn, levels)
}
