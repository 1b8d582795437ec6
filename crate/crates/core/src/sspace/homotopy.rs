use std::collections::HashMap;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{CategoryBuilder, FinCategory};
use crate::simpset::standard::components_from;
use crate::simpset::{sub_object, Components, SimpMap, Simplex, TruncSimpSet};
use crate::sspace::bisimplicial::TruncBiSimpSet;
use crate::sspace::regime::{components, decide_equivalence, Strategy};
use crate::sspace::segal::segal_space_check;

/// Objects, arrows and composition witnesses of a Segal space at vertical
/// level 0, with the `π0` classes of all mapping spaces.
pub struct SegalView<'a> {
    t: &'a TruncBiSimpSet,
    classes: Components,
    witnesses: HashMap<(Simplex, Simplex), Vec<Simplex>>,
}

impl<'a> SegalView<'a> {
    pub fn new(t: &'a TruncBiSimpSet) -> Result<Self> {
        if t.htrunc() < 2 {
            return Err(Error::TruncationTooSmall {
                need: 2,
                got: t.htrunc(),
            });
        }
        let arrows = t.size(1, 0);
        let classes = if t.vtrunc() == 0 {
            components_from(arrows, |f| f)
        } else {
            let point_edges: Vec<bool> = {
                let mut v = vec![false; t.size(0, 1)];
                for x in t.simplices(0, 0) {
                    v[t.vdegen(0, 0, 0, x)] = true;
                }
                v
            };
            let mut uf = UnionFind::<usize>::new(arrows);
            for e in t.simplices(1, 1) {
                if point_edges[t.hface(1, 1, 0, e)] && point_edges[t.hface(1, 1, 1, e)] {
                    uf.union(t.vface(1, 1, 0, e), t.vface(1, 1, 1, e));
                }
            }
            components_from(arrows, |f| uf.find(f))
        };
        let mut witnesses: HashMap<(Simplex, Simplex), Vec<Simplex>> = HashMap::new();
        for s in t.simplices(2, 0) {
            witnesses
                .entry((t.hface(2, 0, 2, s), t.hface(2, 0, 0, s)))
                .or_default()
                .push(s);
        }
        Ok(SegalView { t, classes, witnesses })
    }

    pub fn bisimplicial(&self) -> &TruncBiSimpSet {
        self.t
    }

    pub fn src(&self, f: Simplex) -> Simplex {
        self.t.hface(1, 0, 1, f)
    }

    pub fn tgt(&self, f: Simplex) -> Simplex {
        self.t.hface(1, 0, 0, f)
    }

    pub fn identity(&self, x: Simplex) -> Simplex {
        self.t.hdegen(0, 0, 0, x)
    }

    pub fn arrows(&self, x: Simplex, y: Simplex) -> Vec<Simplex> {
        self.t
            .simplices(1, 0)
            .filter(|&f| self.src(f) == x && self.tgt(f) == y)
            .collect()
    }

    /// `f ~ g` in `π0 map(x, y)`.
    pub fn homotopic(&self, f: Simplex, g: Simplex) -> bool {
        self.classes.same(f, g)
    }

    pub fn class_of(&self, f: Simplex) -> usize {
        self.classes.labels[f]
    }

    pub fn class_members(&self, f: Simplex) -> &[Simplex] {
        &self.classes.classes[self.classes.labels[f]]
    }

    /// 2-simplices with spine `(f, g)`.
    pub fn witnesses(&self, f: Simplex, g: Simplex) -> &[Simplex] {
        self.witnesses.get(&(f, g)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All witnesses for `g ∘ f` with their composites. Fails when there is
    /// none or when composites are not all homotopic.
    pub fn compose(&self, f: Simplex, g: Simplex) -> Result<Composition> {
        let t = self.t;
        if self.tgt(f) != self.src(g) {
            return Err(Error::Precondition(format!(
                "`{}` and `{}` are not composable",
                t.name(1, 0, f),
                t.name(1, 0, g)
            )));
        }
        let ws = self.witnesses(f, g);
        if ws.is_empty() {
            return Err(Error::NoWitness {
                f: t.name(1, 0, f).to_string(),
                g: t.name(1, 0, g).to_string(),
            });
        }
        let pairs: Vec<(Simplex, Simplex)> = ws.iter().map(|&s| (s, t.hface(2, 0, 1, s))).collect();
        let &(chosen, composite) = pairs
            .iter()
            .min_by(|a, b| t.name(2, 0, a.0).cmp(t.name(2, 0, b.0)))
            .expect("non-empty witnesses");
        if let Some(&(s, _)) = pairs.iter().find(|p| !self.homotopic(p.1, composite)) {
            return Err(Error::InvariantViolation(format!(
                "witnesses `{}` and `{}` give non-homotopic composites",
                t.name(2, 0, chosen),
                t.name(2, 0, s)
            )));
        }
        Ok(Composition {
            witnesses: pairs,
            chosen,
            composite,
        })
    }

    /// `g ∘ f` via the chosen witness.
    pub fn composite(&self, f: Simplex, g: Simplex) -> Result<Simplex> {
        Ok(self.compose(f, g)?.composite)
    }

    pub fn is_hoequiv(&self, f: Simplex) -> Result<HoEquiv> {
        let t = self.t;
        let (x, y) = (self.src(f), self.tgt(f));
        let back = self.arrows(y, x);
        let mut left = None;
        let mut right = None;
        for &g in &back {
            if left.is_none() && self.homotopic(self.composite(f, g)?, self.identity(x)) {
                left = Some(g);
            }
            if right.is_none() && self.homotopic(self.composite(g, f)?, self.identity(y)) {
                right = Some(g);
            }
        }
        let tetra = if t.htrunc() >= 3 {
            let col = t.column(0);
            let found = t.simplices(3, 0).find(|&h| {
                col.restrict(3, h, &[1, 2]) == f
                    && self.homotopic(col.restrict(3, h, &[0, 2]), self.identity(y))
                    && self.homotopic(col.restrict(3, h, &[1, 3]), self.identity(x))
            });
            Some(found)
        } else {
            None
        };
        Ok(HoEquiv {
            by_inverses: left.is_some() && right.is_some(),
            by_tetra_lift: tetra.map(|h| h.is_some()),
            left_inverse: left,
            right_inverse: right,
            tetrahedron: tetra.flatten(),
        })
    }

    /// Arrows at vertical level 0 that are homotopy equivalences.
    pub fn hoequivs(&self) -> Result<Vec<bool>> {
        self.t
            .simplices(1, 0)
            .map(|f| Ok(self.is_hoequiv(f)?.by_inverses))
            .collect()
    }
}

/// Composition witnesses for one composable pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Composition {
    /// `(σ, d_1 σ)` for every `σ ∈ X_{2,0}` with spine `(f, g)`.
    pub witnesses: Vec<(Simplex, Simplex)>,
    /// The witness with the least name.
    pub chosen: Simplex,
    pub composite: Simplex,
}

/// Both characterizations of a homotopy equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoEquiv {
    /// There are `g, h` with `g ∘ f ~ id` and `f ∘ h ~ id`.
    pub by_inverses: bool,
    /// Some `H ∈ X_{3,0}` has edge `12` equal to `f` and edges `02`, `13`
    /// homotopic to identities; `None` when `N < 3`.
    pub by_tetra_lift: Option<bool>,
    pub left_inverse: Option<Simplex>,
    pub right_inverse: Option<Simplex>,
    pub tetrahedron: Option<Simplex>,
}

impl HoEquiv {
    pub fn agree(&self) -> bool {
        self.by_tetra_lift.is_none_or(|b| b == self.by_inverses)
    }
}

/// `map(x, y)`: the vertical simplicial set of arrows from `x` to `y`, with
/// its inclusion into `X_{1,•}`.
pub fn mapping_space(t: &TruncBiSimpSet, x: Simplex, y: Simplex) -> Result<SimpMap> {
    if x >= t.size(0, 0) || y >= t.size(0, 0) {
        return Err(Error::UnknownObject(format!("{}", x.max(y))));
    }
    let row0 = t.row(0);
    let point = |v: Simplex, l: usize| row0.degen_iter(0, v, &vec![0; l]);
    sub_object(t.row(1), |l, s| {
        t.hface(1, l, 1, s) == point(x, l) && t.hface(1, l, 0, s) == point(y, l)
    })
}

pub fn composition_witnesses(t: &TruncBiSimpSet, f: Simplex, g: Simplex) -> Result<Composition> {
    SegalView::new(t)?.compose(f, g)
}

pub fn is_hoequiv(t: &TruncBiSimpSet, f: Simplex) -> Result<HoEquiv> {
    SegalView::new(t)?.is_hoequiv(f)
}

/// The homotopy equivalences as a vertical sub-object of `X_{1,•}`: a
/// simplex belongs when all its vertical vertices are equivalences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoEquivData {
    pub inclusion: SimpMap,
}

impl HoEquivData {
    pub fn space(&self) -> &TruncSimpSet {
        self.inclusion.domain()
    }

    /// Equivalences at vertical level 0, as simplices of `X_{1,0}`.
    pub fn level0(&self) -> &[Simplex] {
        self.inclusion.level(0)
    }

    /// `hoequiv(x, y)` at vertical level 0.
    pub fn pair(&self, t: &TruncBiSimpSet, x: Simplex, y: Simplex) -> Vec<Simplex> {
        self.level0()
            .iter()
            .copied()
            .filter(|&f| t.hface(1, 0, 1, f) == x && t.hface(1, 0, 0, f) == y)
            .collect()
    }
}

pub fn hoequiv_space(t: &TruncBiSimpSet) -> Result<HoEquivData> {
    let view = SegalView::new(t)?;
    let equiv = view.hoequivs()?;
    let row1 = t.row(1);
    let inclusion = sub_object(row1, |l, s| (0..=l).all(|k| equiv[row1.vertex(l, s, k)]))?;
    for x in t.simplices(0, 0) {
        if !equiv[view.identity(x)] {
            return Err(Error::InvariantViolation(format!(
                "identity of `{}` is not an equivalence",
                t.name(0, 0, x)
            )));
        }
    }
    Ok(HoEquivData { inclusion })
}

/// Tetrahedra whose edges `02` and `13` are degenerate, with the map to
/// `hoequiv` taking edge `12`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoEqChoice {
    pub inclusion: SimpMap,
    pub forgetful: SimpMap,
    pub surjective_on_pi0: bool,
}

pub fn hoeqchoice_space(t: &TruncBiSimpSet) -> Result<HoEqChoice> {
    if t.htrunc() < 3 {
        return Err(Error::TruncationTooSmall {
            need: 3,
            got: t.htrunc(),
        });
    }
    let hoequiv = hoequiv_space(t)?;
    let degenerate: Vec<Vec<bool>> = (0..=t.vtrunc())
        .map(|l| {
            let mut v = vec![false; t.size(1, l)];
            for x in t.simplices(0, l) {
                v[t.hdegen(0, l, 0, x)] = true;
            }
            v
        })
        .collect();
    let inclusion = sub_object(t.row(3), |l, h| {
        let col = t.column(l);
        degenerate[l][col.restrict(3, h, &[0, 2])] && degenerate[l][col.restrict(3, h, &[1, 3])]
    })?;
    let position: Vec<HashMap<Simplex, Simplex>> = hoequiv
        .inclusion
        .levels()
        .iter()
        .map(|l| l.iter().enumerate().map(|(k, &s)| (s, k)).collect())
        .collect();
    let levels = inclusion
        .levels()
        .iter()
        .enumerate()
        .map(|(l, hs)| {
            hs.iter()
                .map(|&h| {
                    let e = t.column(l).restrict(3, h, &[1, 2]);
                    position[l].get(&e).copied().ok_or_else(|| {
                        Error::InvariantViolation(format!("edge 12 of `{}` is not an equivalence", t.name(3, l, h)))
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let forgetful = SimpMap::new(inclusion.domain().clone(), hoequiv.space().clone(), levels)?;
    let target = components(hoequiv.space());
    let mut hit = vec![false; target.count()];
    for &e in forgetful.level(0) {
        hit[target.labels[e]] = true;
    }
    Ok(HoEqChoice {
        inclusion,
        forgetful,
        surjective_on_pi0: hit.into_iter().all(|b| b),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletenessReport {
    pub strategy: Strategy,
    pub complete: bool,
    /// `|W_{0,0}|`.
    pub objects: usize,
    /// Homotopy equivalences at vertical level 0.
    pub hoequivs: usize,
    /// `π0` sizes of `W_{0,•}` and of the space of equivalences.
    pub components: (usize, usize),
}

/// Whether `s_0: W_{0,•} → W_hoequiv` is an equivalence.
pub fn completeness_check(w: &TruncBiSimpSet) -> Result<CompletenessReport> {
    let verdict = segal_space_check(w)?;
    if let Some(l) = verdict.levels.iter().find(|l| !l.passes()) {
        return Err(Error::SegalFailure { level: l.level });
    }
    let hoequiv = hoequiv_space(w)?;
    let position: Vec<HashMap<Simplex, Simplex>> = hoequiv
        .inclusion
        .levels()
        .iter()
        .map(|l| l.iter().enumerate().map(|(k, &s)| (s, k)).collect())
        .collect();
    let s0 = w.hdegen_map(0, 0);
    let levels = s0
        .levels()
        .iter()
        .enumerate()
        .map(|(l, m)| m.iter().map(|s| position[l][s]).collect())
        .collect();
    let map = SimpMap::new(w.row(0).clone(), hoequiv.space().clone(), levels)?;
    let check = decide_equivalence(&map)?;
    Ok(CompletenessReport {
        strategy: check.strategy,
        complete: check.equivalence,
        objects: check.vertices.0,
        hoequivs: check.vertices.1,
        components: check.components,
    })
}

/// Objects `X_{0,0}`, morphisms the `π0` classes of mapping spaces,
/// composition through witnesses. Every representative and witness is
/// checked to give the same class.
pub fn homotopy_category(t: &TruncBiSimpSet) -> Result<FinCategory> {
    let view = SegalView::new(t)?;
    let mut b = CategoryBuilder::new();
    for x in t.simplices(0, 0) {
        b.add_object(t.name(0, 0, x));
    }
    let mut class_mor: HashMap<usize, usize> = HashMap::new();
    let mut reps = Vec::new();
    for f in t.simplices(1, 0) {
        let c = view.class_of(f);
        if class_mor.contains_key(&c) {
            continue;
        }
        let rep = *view
            .class_members(f)
            .iter()
            .min_by(|a, b| t.name(1, 0, **a).cmp(t.name(1, 0, **b)))
            .expect("non-empty class");
        let id = b.add_morphism(t.name(1, 0, rep), view.src(rep), view.tgt(rep));
        class_mor.insert(c, id);
        reps.push(rep);
    }
    for x in t.simplices(0, 0) {
        b.set_identity(x, class_mor[&view.class_of(view.identity(x))]);
    }
    for (fi, &f) in reps.iter().enumerate() {
        for (gi, &g) in reps.iter().enumerate() {
            if view.tgt(f) != view.src(g) {
                continue;
            }
            let composite = view.composite(f, g)?;
            for &f2 in view.class_members(f) {
                for &g2 in view.class_members(g) {
                    if !view.homotopic(view.composite(f2, g2)?, composite) {
                        return Err(Error::InvariantViolation(format!(
                            "composition is not well defined on classes of `{}` and `{}`",
                            t.name(1, 0, f),
                            t.name(1, 0, g)
                        )));
                    }
                }
            }
            b.set_comp(gi, fi, class_mor[&view.class_of(composite)]);
        }
    }
    b.build()
        .map_err(|e| Error::InvariantViolation(format!("homotopy category is not a category: {e}")))
}

/// Every arrow is a homotopy equivalence.
pub fn is_segal_groupoid(t: &TruncBiSimpSet) -> Result<bool> {
    Ok(SegalView::new(t)?.hoequivs()?.into_iter().all(|b| b))
}

/// Every map `X_{0,•} → X_{n,•}` built from horizontal degeneracies is an
/// equivalence.
pub fn homotopically_constant(t: &TruncBiSimpSet) -> Result<bool> {
    let mut map = SimpMap::identity(t.row(0));
    for n in 0..t.htrunc() {
        map = map.then(&t.hdegen_map(n, 0))?;
        if !decide_equivalence(&map)?.equivalence {
            return Ok(false);
        }
    }
    Ok(true)
}
