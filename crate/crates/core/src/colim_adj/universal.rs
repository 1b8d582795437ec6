use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{opposite, CategoryBuilder, FinCategory, Functor, MorId, ObId};
use crate::limits::Limits;

/// Objects `i` with exactly one morphism `i → y` for every `y`. Any two of
/// them must be related by a unique isomorphism; a violation is an error.
pub fn initial_objects(c: &FinCategory) -> Result<Vec<ObId>> {
    let found: Vec<ObId> = c
        .objects()
        .filter(|&i| c.objects().all(|y| c.hom(i, y).len() == 1))
        .collect();
    for &a in &found {
        for &b in &found {
            let h = c.hom(a, b);
            if h.len() != 1 || !c.is_iso(h[0]) {
                return Err(Error::InvariantViolation(format!(
                    "initial objects `{}` and `{}` are not uniquely isomorphic",
                    c.object_name(a),
                    c.object_name(b)
                )));
            }
        }
    }
    Ok(found)
}

/// Objects `t` with exactly one morphism `y → t` for every `y`.
pub fn final_objects(c: &FinCategory) -> Result<Vec<ObId>> {
    initial_objects(&opposite(c))
}

/// A cocone over `diagram: I → C` with the given vertex; `legs[i]` is a
/// morphism `F(i) → vertex`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocone {
    pub diagram: Functor,
    pub vertex: ObId,
    pub legs: Vec<MorId>,
}

impl Cocone {
    /// Checked: every leg ends at the vertex and `leg_j ∘ F(u) = leg_i` for
    /// every `u: i → j`.
    pub fn new(diagram: Functor, vertex: ObId, legs: Vec<MorId>) -> Result<Self> {
        let (i, c) = (diagram.domain(), diagram.codomain());
        let bad = |msg: String| Err(Error::Precondition(format!("not a cocone: {msg}")));
        if legs.len() != i.num_objects() {
            return bad("one leg per object required".into());
        }
        for x in i.objects() {
            let l = legs[x];
            if l >= c.num_morphisms() || c.src(l) != diagram.ob(x) || c.tgt(l) != vertex {
                return bad(format!("leg at `{}` has the wrong endpoints", i.object_name(x)));
            }
        }
        for u in i.morphisms() {
            if c.compose(legs[i.tgt(u)], diagram.mor(u)) != legs[i.src(u)] {
                return bad(format!("leg triangle over `{}` does not commute", i.morphism_name(u)));
            }
        }
        Ok(Cocone { diagram, vertex, legs })
    }

    /// `vertex<leg,…>`.
    pub fn name(&self) -> String {
        let c = self.diagram.codomain();
        let legs: Vec<&str> = self.legs.iter().map(|&l| c.morphism_name(l)).collect();
        format!("{}<{}>", c.object_name(self.vertex), legs.join(","))
    }
}

/// JSON view of a cocone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoconeSummary {
    pub vertex: String,
    pub legs: Vec<(String, String)>,
}

impl From<&Cocone> for CoconeSummary {
    fn from(k: &Cocone) -> Self {
        let (i, c) = (k.diagram.domain(), k.diagram.codomain());
        CoconeSummary {
            vertex: c.object_name(k.vertex).to_string(),
            legs: i
                .objects()
                .map(|x| (i.object_name(x).to_string(), c.morphism_name(k.legs[x]).to_string()))
                .collect(),
        }
    }
}

/// Leg families over `f` with vertex `v`, by backtracking over the objects
/// of `I` in order.
pub(crate) fn leg_families(f: &Functor, v: ObId, limits: &Limits) -> Result<Vec<Vec<MorId>>> {
    let (i, c) = (f.domain(), f.codomain());
    let n = i.num_objects();
    let mut out = Vec::new();
    let mut legs: Vec<MorId> = vec![usize::MAX; n];
    let mut budget = limits.budget();
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    while let Some((x, k)) = stack.pop() {
        if x == n {
            out.push(legs.clone());
            continue;
        }
        let cands = c.hom(f.ob(x), v);
        if k == cands.len() {
            continue;
        }
        stack.push((x, k + 1));
        budget.spend(1)?;
        legs[x] = cands[k];
        let ok = i.morphisms().all(|u| {
            let (s, t) = (i.src(u), i.tgt(u));
            s.max(t) != x || c.compose(legs[t], f.mor(u)) == legs[s]
        });
        if ok {
            stack.push((x + 1, 0));
        }
    }
    Ok(out)
}

/// The category of cocones over `f` with its cocones in object order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoconeCategory {
    pub category: FinCategory,
    pub cocones: Vec<Cocone>,
}

/// Objects are cocones `vertex<legs>`; a morphism `u@k` is a vertex
/// morphism `u` out of the cocone `k` with the induced target.
pub fn cocone_category(f: &Functor, limits: &Limits) -> Result<CoconeCategory> {
    let c = f.codomain();
    let mut cocones = Vec::new();
    for v in c.objects() {
        for legs in leg_families(f, v, limits)? {
            cocones.push(Cocone {
                diagram: f.clone(),
                vertex: v,
                legs,
            });
        }
    }
    let index: std::collections::HashMap<(ObId, Vec<MorId>), usize> = cocones
        .iter()
        .enumerate()
        .map(|(k, q)| ((q.vertex, q.legs.clone()), k))
        .collect();
    let edges: u128 = cocones.iter().map(|q| c.out_of(q.vertex).len() as u128).sum();
    limits.guard(cocones.len() as u128 + edges)?;
    let mut b = CategoryBuilder::new();
    for q in &cocones {
        b.add_object(q.name());
    }
    // out[k][pos in out_of(vertex)] = morphism id
    let mut out: Vec<Vec<MorId>> = Vec::new();
    for (k, q) in cocones.iter().enumerate() {
        let mut row = Vec::new();
        for &u in c.out_of(q.vertex) {
            let legs: Vec<MorId> = q.legs.iter().map(|&l| c.compose(u, l)).collect();
            let t = index[&(c.tgt(u), legs)];
            row.push(b.add_morphism(format!("{}@{}", c.morphism_name(u), q.name()), k, t));
        }
        out.push(row);
    }
    let pos = |k: usize, u: MorId| c.out_of(cocones[k].vertex).iter().position(|&w| w == u).expect("out morphism");
    for (k, q) in cocones.iter().enumerate() {
        b.set_identity(k, out[k][pos(k, c.ident(q.vertex))]);
        for &u in c.out_of(q.vertex) {
            let mid = index[&(c.tgt(u), q.legs.iter().map(|&l| c.compose(u, l)).collect())];
            for &w in c.out_of(c.tgt(u)) {
                b.set_comp(out[mid][pos(mid, w)], out[k][pos(k, u)], out[k][pos(k, c.compose(w, u))]);
            }
        }
    }
    let category = b.build()?;
    Ok(CoconeCategory { category, cocones })
}

/// An initial cocone, if one exists; the first in object order when several
/// do. Cross-checked against [`colimit_oracle`].
pub fn colimit(f: &Functor, limits: &Limits) -> Result<Option<Cocone>> {
    let cc = cocone_category(f, limits)?;
    let Some(&k) = initial_objects(&cc.category)?.first() else {
        return Ok(None);
    };
    let q = cc.cocones[k].clone();
    if !colimit_oracle(f, &q, limits)? {
        return Err(Error::InvariantViolation(format!("initial cocone `{}` is not universal", q.name())));
    }
    Ok(Some(q))
}

/// Universal property straight from the definition: for every `y`, the map
/// `Hom(vertex, y) → cocones with vertex y`, `u ↦ u ∘ legs`, is a bijection.
pub fn colimit_oracle(f: &Functor, cand: &Cocone, limits: &Limits) -> Result<bool> {
    let c = f.codomain();
    for y in c.objects() {
        let families = leg_families(f, y, limits)?;
        let mut hit = vec![false; families.len()];
        for &u in c.hom(cand.vertex, y) {
            let legs: Vec<MorId> = cand.legs.iter().map(|&l| c.compose(u, l)).collect();
            match families.iter().position(|fam| *fam == legs) {
                Some(k) if !hit[k] => hit[k] = true,
                _ => return Ok(false),
            }
        }
        if hit.iter().any(|&h| !h) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A limit of `f`, computed as a colimit in the opposite category. The legs
/// point from the vertex into the diagram.
pub fn limit(f: &Functor, limits: &Limits) -> Result<Option<(ObId, Vec<MorId>)>> {
    let (iop, cop) = (opposite(f.domain()), opposite(f.codomain()));
    Ok(colimit(&f.opposite(&iop, &cop), limits)?.map(|q| (q.vertex, q.legs)))
}
