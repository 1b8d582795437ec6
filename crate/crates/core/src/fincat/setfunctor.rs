use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fincat::category::{FinCategory, MorId, ObId};

/// A functor from a finite category to finite sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFunctor {
    domain: FinCategory,
    sets: Vec<Vec<String>>,
    actions: Vec<Vec<usize>>,
}

impl SetFunctor {
    /// `sets[x]` names the elements of `F(x)`; `actions[f][i]` is the index
    /// of `F(f)(sets[src f][i])` in `sets[tgt f]`.
    pub fn new(domain: FinCategory, sets: Vec<Vec<String>>, actions: Vec<Vec<usize>>) -> Result<Self> {
        let c = &domain;
        let bad = |msg: String| Err(Error::InvalidSetFunctor(msg));
        if sets.len() != c.num_objects() || actions.len() != c.num_morphisms() {
            return bad("assignments are not total".into());
        }
        for f in c.morphisms() {
            let (x, y) = (c.src(f), c.tgt(f));
            if actions[f].len() != sets[x].len() || actions[f].iter().any(|&v| v >= sets[y].len()) {
                return bad(format!("action of `{}` is not a function F(src) → F(tgt)", c.morphism_name(f)));
            }
        }
        for x in c.objects() {
            let i = c.ident(x);
            if actions[i].iter().enumerate().any(|(k, &v)| k != v) {
                return bad(format!("identity of `{}` does not act trivially", c.object_name(x)));
            }
        }
        for (g, f, gf) in c.composition_triples() {
            let ok = (0..sets[c.src(f)].len()).all(|a| actions[g][actions[f][a]] == actions[gf][a]);
            if !ok {
                return bad(format!(
                    "action not functorial on `{}` after `{}`",
                    c.morphism_name(g),
                    c.morphism_name(f)
                ));
            }
        }
        Ok(SetFunctor { domain, sets, actions })
    }

    /// The covariant representable `Hom(x, -)`.
    pub fn representable(c: &FinCategory, x: ObId) -> Self {
        let sets: Vec<Vec<String>> = c
            .objects()
            .map(|y| c.hom(x, y).iter().map(|&h| c.morphism_name(h).to_string()).collect())
            .collect();
        let position: HashMap<MorId, usize> = c
            .objects()
            .flat_map(|y| c.hom(x, y).iter().enumerate().map(|(k, &h)| (h, k)))
            .collect();
        let actions = c
            .morphisms()
            .map(|f| {
                c.hom(x, c.src(f))
                    .iter()
                    .map(|&h| position[&c.compose(f, h)])
                    .collect()
            })
            .collect();
        SetFunctor {
            domain: c.clone(),
            sets,
            actions,
        }
    }

    /// Every object sent to the same set, every morphism to the identity.
    pub fn constant(c: &FinCategory, elements: &[String]) -> Self {
        SetFunctor {
            domain: c.clone(),
            sets: vec![elements.to_vec(); c.num_objects()],
            actions: vec![(0..elements.len()).collect(); c.num_morphisms()],
        }
    }

    pub fn domain(&self) -> &FinCategory {
        &self.domain
    }

    pub fn set(&self, x: ObId) -> &[String] {
        &self.sets[x]
    }

    pub fn size(&self, x: ObId) -> usize {
        self.sets[x].len()
    }

    /// `F(f)` applied to the element with index `a`.
    pub fn act(&self, f: MorId, a: usize) -> usize {
        self.actions[f][a]
    }

    pub fn element(&self, x: ObId, name: &str) -> Result<usize> {
        self.sets[x]
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| Error::InvalidSetFunctor(format!("`{name}` is not an element of F({})", self.domain.object_name(x))))
    }
}
