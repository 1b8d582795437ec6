use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::fincat::category::{FinCategory, MorId, ObId};
use crate::limits::{Budget, Limits};

/// A functor between finite categories, stored as object and morphism maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Functor {
    dom: FinCategory,
    cod: FinCategory,
    ob_map: Vec<ObId>,
    mor_map: Vec<MorId>,
}

impl Functor {
    /// Checked constructor: the maps must preserve source, target,
    /// identities and composition.
    pub fn new(
        dom: FinCategory,
        cod: FinCategory,
        ob_map: Vec<ObId>,
        mor_map: Vec<MorId>,
    ) -> Result<Self> {
        let f = Functor {
            dom,
            cod,
            ob_map,
            mor_map,
        };
        let problems = f.violations();
        if problems.is_empty() {
            Ok(f)
        } else {
            Err(Error::InvalidFunctor(problems.join("; ")))
        }
    }

    pub(crate) fn new_unchecked(
        dom: FinCategory,
        cod: FinCategory,
        ob_map: Vec<ObId>,
        mor_map: Vec<MorId>,
    ) -> Self {
        Functor {
            dom,
            cod,
            ob_map,
            mor_map,
        }
    }

    /// Builds a functor from names, as read from a document.
    pub fn from_names<'a>(
        dom: FinCategory,
        cod: FinCategory,
        ob_map: impl IntoIterator<Item = (&'a str, &'a str)>,
        mor_map: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let mut obs = vec![None; dom.num_objects()];
        for (a, b) in ob_map {
            obs[dom.object(a)?] = Some(cod.object(b)?);
        }
        let mut mors = vec![None; dom.num_morphisms()];
        for (a, b) in mor_map {
            mors[dom.morphism(a)?] = Some(cod.morphism(b)?);
        }
        // identities may be left implicit
        for x in dom.objects() {
            if let (None, Some(y)) = (mors[dom.ident(x)], obs[x]) {
                mors[dom.ident(x)] = Some(cod.ident(y));
            }
        }
        let ob_map = obs
            .into_iter()
            .enumerate()
            .map(|(x, o)| o.ok_or_else(|| Error::InvalidFunctor(format!("object `{}` unmapped", dom.object_name(x)))))
            .collect::<Result<Vec<_>>>()?;
        let mor_map = mors
            .into_iter()
            .enumerate()
            .map(|(f, m)| m.ok_or_else(|| Error::InvalidFunctor(format!("morphism `{}` unmapped", dom.morphism_name(f)))))
            .collect::<Result<Vec<_>>>()?;
        Functor::new(dom, cod, ob_map, mor_map)
    }

    pub fn identity(c: &FinCategory) -> Self {
        Functor {
            dom: c.clone(),
            cod: c.clone(),
            ob_map: c.objects().collect(),
            mor_map: c.morphisms().collect(),
        }
    }

    /// The functor sending everything to `x` and its identity.
    pub fn constant(dom: &FinCategory, cod: &FinCategory, x: ObId) -> Self {
        Functor {
            dom: dom.clone(),
            cod: cod.clone(),
            ob_map: vec![x; dom.num_objects()],
            mor_map: vec![cod.ident(x); dom.num_morphisms()],
        }
    }

    pub fn domain(&self) -> &FinCategory {
        &self.dom
    }

    pub fn codomain(&self) -> &FinCategory {
        &self.cod
    }

    pub fn ob(&self, x: ObId) -> ObId {
        self.ob_map[x]
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.mor_map[f]
    }

    pub fn ob_map(&self) -> &[ObId] {
        &self.ob_map
    }

    pub fn mor_map(&self) -> &[MorId] {
        &self.mor_map
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Functor) -> Result<Functor> {
        if self.cod != other.dom {
            return Err(Error::InvalidFunctor("composing functors with mismatched categories".into()));
        }
        Ok(Functor {
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            ob_map: self.ob_map.iter().map(|&y| other.ob_map[y]).collect(),
            mor_map: self.mor_map.iter().map(|&g| other.mor_map[g]).collect(),
        })
    }

    /// The same tables read between opposite categories.
    pub fn opposite(&self, dom_op: &FinCategory, cod_op: &FinCategory) -> Functor {
        Functor {
            dom: dom_op.clone(),
            cod: cod_op.clone(),
            ob_map: self.ob_map.clone(),
            mor_map: self.mor_map.clone(),
        }
    }

    pub fn is_isomorphism(&self) -> bool {
        let obs: HashSet<_> = self.ob_map.iter().collect();
        let mors: HashSet<_> = self.mor_map.iter().collect();
        obs.len() == self.cod.num_objects()
            && self.ob_map.len() == self.cod.num_objects()
            && mors.len() == self.cod.num_morphisms()
            && self.mor_map.len() == self.cod.num_morphisms()
    }

    /// Every violated functor law, described by name.
    pub fn violations(&self) -> Vec<String> {
        let (c, d) = (&self.dom, &self.cod);
        let mut out = Vec::new();
        if self.ob_map.len() != c.num_objects() || self.mor_map.len() != c.num_morphisms() {
            out.push("maps are not total".to_string());
            return out;
        }
        if self.ob_map.iter().any(|&y| y >= d.num_objects())
            || self.mor_map.iter().any(|&g| g >= d.num_morphisms())
        {
            out.push("image out of range".to_string());
            return out;
        }
        for f in c.morphisms() {
            let g = self.mor_map[f];
            if d.src(g) != self.ob_map[c.src(f)] || d.tgt(g) != self.ob_map[c.tgt(f)] {
                out.push(format!("`{}` does not respect source/target", c.morphism_name(f)));
            }
        }
        for x in c.objects() {
            if self.mor_map[c.ident(x)] != d.ident(self.ob_map[x]) {
                out.push(format!("identity of `{}` not preserved", c.object_name(x)));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for (g, f, gf) in c.composition_triples() {
            if d.comp(self.mor_map[g], self.mor_map[f]) != Some(self.mor_map[gf]) {
                out.push(format!(
                    "composite `{}` after `{}` not preserved",
                    c.morphism_name(g),
                    c.morphism_name(f)
                ));
            }
        }
        out
    }

    /// Canonical name: object images, then images of non-identity morphisms.
    pub fn canonical_name(&self) -> String {
        let obs: Vec<&str> = self.ob_map.iter().map(|&y| self.cod.object_name(y)).collect();
        let mors: Vec<&str> = self
            .dom
            .morphisms()
            .filter(|&f| !self.dom.is_identity(f))
            .map(|f| self.cod.morphism_name(self.mor_map[f]))
            .collect();
        if mors.is_empty() {
            format!("<{}>", obs.join(","))
        } else {
            format!("<{}|{}>", obs.join(","), mors.join(","))
        }
    }
}

/// Backtracking search for functors `dom → cod`, optionally restricted by
/// per-object and per-morphism candidate filters.
pub struct FunctorSearch<'a> {
    dom: &'a FinCategory,
    cod: &'a FinCategory,
    ob_ok: Option<Box<dyn Fn(ObId, ObId) -> bool + 'a>>,
    mor_ok: Option<Box<dyn Fn(MorId, MorId) -> bool + 'a>>,
    injective_objects: bool,
}

impl<'a> FunctorSearch<'a> {
    pub fn new(dom: &'a FinCategory, cod: &'a FinCategory) -> Self {
        FunctorSearch {
            dom,
            cod,
            ob_ok: None,
            mor_ok: None,
            injective_objects: false,
        }
    }

    /// Only allow `x ↦ y` when `pred(x, y)`.
    pub fn objects_where(mut self, pred: impl Fn(ObId, ObId) -> bool + 'a) -> Self {
        self.ob_ok = Some(Box::new(pred));
        self
    }

    /// Only allow `f ↦ g` when `pred(f, g)`.
    pub fn morphisms_where(mut self, pred: impl Fn(MorId, MorId) -> bool + 'a) -> Self {
        self.mor_ok = Some(Box::new(pred));
        self
    }

    pub fn injective_on_objects(mut self) -> Self {
        self.injective_objects = true;
        self
    }

    pub fn run(&self, limits: &Limits) -> Result<Vec<Functor>> {
        let mut out = Vec::new();
        self.for_each(limits, |f| {
            out.push(f);
            true
        })?;
        Ok(out)
    }

    pub fn first(&self, limits: &Limits) -> Result<Option<Functor>> {
        let mut found = None;
        self.for_each(limits, |f| {
            found = Some(f);
            false
        })?;
        Ok(found)
    }

    /// Calls `visit` on each functor in deterministic order; stops early when
    /// `visit` returns false.
    pub fn for_each(&self, limits: &Limits, mut visit: impl FnMut(Functor) -> bool) -> Result<()> {
        let c = self.dom;
        // identities are forced by objects; the rest are searched in order
        let free: Vec<MorId> = c.morphisms().filter(|&f| !c.is_identity(f)).collect();
        let mut position = vec![usize::MAX; c.num_morphisms()];
        for (k, &f) in free.iter().enumerate() {
            position[f] = k;
        }
        // composition checks fire when the last free member is assigned
        let mut checks: Vec<Vec<(MorId, MorId, MorId)>> = vec![Vec::new(); free.len()];
        for (g, f, h) in c.composition_triples() {
            // triples made of identities only are preserved automatically
            if let Some(k) = [g, f, h]
                .iter()
                .filter(|&&m| position[m] != usize::MAX)
                .map(|&m| position[m])
                .max()
            {
                checks[k].push((g, f, h));
            }
        }
        let mut state = SearchState {
            search: self,
            budget: limits.budget(),
            ob_map: vec![usize::MAX; c.num_objects()],
            mor_map: vec![usize::MAX; c.num_morphisms()],
            free,
            checks,
            used: vec![false; self.cod.num_objects()],
            stop: false,
        };
        state.assign_object(0, &mut visit)
    }
}

struct SearchState<'s, 'a> {
    search: &'s FunctorSearch<'a>,
    budget: Budget,
    ob_map: Vec<ObId>,
    mor_map: Vec<MorId>,
    free: Vec<MorId>,
    checks: Vec<Vec<(MorId, MorId, MorId)>>,
    used: Vec<bool>,
    stop: bool,
}

impl SearchState<'_, '_> {
    fn assign_object(&mut self, x: ObId, visit: &mut dyn FnMut(Functor) -> bool) -> Result<()> {
        let (c, d) = (self.search.dom, self.search.cod);
        if x == c.num_objects() {
            for y in c.objects() {
                self.mor_map[c.ident(y)] = d.ident(self.ob_map[y]);
            }
            return self.assign_morphism(0, visit);
        }
        for y in d.objects() {
            if self.stop {
                return Ok(());
            }
            self.budget.spend(1)?;
            if self.search.injective_objects && self.used[y] {
                continue;
            }
            if let Some(ok) = &self.search.ob_ok {
                if !ok(x, y) {
                    continue;
                }
            }
            if let Some(ok) = &self.search.mor_ok {
                if !ok(c.ident(x), d.ident(y)) {
                    continue;
                }
            }
            self.ob_map[x] = y;
            self.used[y] = true;
            self.assign_object(x + 1, visit)?;
            self.used[y] = false;
        }
        Ok(())
    }

    fn assign_morphism(&mut self, k: usize, visit: &mut dyn FnMut(Functor) -> bool) -> Result<()> {
        let (c, d) = (self.search.dom, self.search.cod);
        if k == self.free.len() {
            let f = Functor::new_unchecked(c.clone(), d.clone(), self.ob_map.clone(), self.mor_map.clone());
            if !visit(f) {
                self.stop = true;
            }
            return Ok(());
        }
        let f = self.free[k];
        let (a, b) = (self.ob_map[c.src(f)], self.ob_map[c.tgt(f)]);
        for &g in d.hom(a, b) {
            if self.stop {
                return Ok(());
            }
            self.budget.spend(1)?;
            if let Some(ok) = &self.search.mor_ok {
                if !ok(f, g) {
                    continue;
                }
            }
            self.mor_map[f] = g;
            let consistent = self.checks[k]
                .iter()
                .all(|&(g1, f1, h1)| d.comp(self.mor_map[g1], self.mor_map[f1]) == Some(self.mor_map[h1]));
            if consistent {
                self.assign_morphism(k + 1, visit)?;
            }
        }
        self.mor_map[f] = usize::MAX;
        Ok(())
    }
}

/// All functors `c → d`, in deterministic order.
pub fn enumerate_functors(c: &FinCategory, d: &FinCategory, limits: &Limits) -> Result<Vec<Functor>> {
    FunctorSearch::new(c, d).run(limits)
}

/// An isomorphism of categories `c → d`, if one exists.
pub fn find_isomorphism(c: &FinCategory, d: &FinCategory, limits: &Limits) -> Result<Option<Functor>> {
    if c.num_objects() != d.num_objects() || c.num_morphisms() != d.num_morphisms() {
        return Ok(None);
    }
    let mut found = None;
    FunctorSearch::new(c, d)
        .injective_on_objects()
        .for_each(limits, |f| {
            if f.is_isomorphism() {
                found = Some(f);
                false
            } else {
                true
            }
        })?;
    Ok(found)
}
