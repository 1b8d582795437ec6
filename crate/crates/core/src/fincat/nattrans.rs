use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fincat::category::{CategoryBuilder, FinCategory, MorId, ObId};
use crate::fincat::functor::{FunctorSearch, Functor};
use crate::fincat::relative::RelativeCategory;
use crate::limits::{pow_size, Limits};
use crate::names::UniqueNames;

/// A natural transformation `source ⇒ target`, one component per object.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NatTrans {
    source: Functor,
    target: Functor,
    components: Vec<MorId>,
}

impl NatTrans {
    pub fn new(source: Functor, target: Functor, components: Vec<MorId>) -> Result<Self> {
        let t = NatTrans {
            source,
            target,
            components,
        };
        match t.first_violation() {
            None => Ok(t),
            Some(msg) => Err(Error::InvalidNatTrans(msg)),
        }
    }

    pub fn identity(f: &Functor) -> Self {
        let d = f.codomain();
        NatTrans {
            source: f.clone(),
            target: f.clone(),
            components: f.domain().objects().map(|x| d.ident(f.ob(x))).collect(),
        }
    }

    pub fn source(&self) -> &Functor {
        &self.source
    }

    pub fn target(&self) -> &Functor {
        &self.target
    }

    pub fn component(&self, x: ObId) -> MorId {
        self.components[x]
    }

    pub fn components(&self) -> &[MorId] {
        &self.components
    }

    /// Vertical composite `other · self`.
    pub fn then(&self, other: &NatTrans) -> Result<NatTrans> {
        if self.target != other.source {
            return Err(Error::InvalidNatTrans("vertical composite of non-adjacent transformations".into()));
        }
        let d = self.source.codomain();
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(&a, &b)| d.compose(b, a))
            .collect();
        Ok(NatTrans {
            source: self.source.clone(),
            target: other.target.clone(),
            components,
        })
    }

    fn first_violation(&self) -> Option<String> {
        let (f, g) = (&self.source, &self.target);
        if f.domain() != g.domain() || f.codomain() != g.codomain() {
            return Some("functors have different domain or codomain".into());
        }
        let (c, d) = (f.domain(), f.codomain());
        if self.components.len() != c.num_objects() {
            return Some("components are not total".into());
        }
        for x in c.objects() {
            let a = self.components[x];
            if a >= d.num_morphisms() || d.src(a) != f.ob(x) || d.tgt(a) != g.ob(x) {
                return Some(format!("component at `{}` has wrong endpoints", c.object_name(x)));
            }
        }
        for m in c.morphisms() {
            let (x, y) = (c.src(m), c.tgt(m));
            if d.comp(g.mor(m), self.components[x]) != d.comp(self.components[y], f.mor(m)) {
                return Some(format!("naturality square for `{}` does not commute", c.morphism_name(m)));
            }
        }
        None
    }
}

/// All natural transformations `f ⇒ g` whose components satisfy `allowed`.
pub fn enumerate_nat_trans(
    f: &Functor,
    g: &Functor,
    allowed: &dyn Fn(MorId) -> bool,
    limits: &Limits,
) -> Result<Vec<NatTrans>> {
    let (c, d) = (f.domain(), f.codomain());
    // naturality squares checked once both endpoints have components
    let mut squares: Vec<Vec<MorId>> = vec![Vec::new(); c.num_objects()];
    for m in c.morphisms() {
        squares[c.src(m).max(c.tgt(m))].push(m);
    }
    let mut budget = limits.budget();
    let mut out = Vec::new();
    let mut comps = vec![usize::MAX; c.num_objects()];

    #[allow(clippy::too_many_arguments)]
    fn go(
        x: ObId,
        c: &FinCategory,
        d: &FinCategory,
        f: &Functor,
        g: &Functor,
        allowed: &dyn Fn(MorId) -> bool,
        squares: &[Vec<MorId>],
        comps: &mut Vec<MorId>,
        budget: &mut crate::limits::Budget,
        out: &mut Vec<NatTrans>,
    ) -> Result<()> {
        if x == c.num_objects() {
            out.push(NatTrans {
                source: f.clone(),
                target: g.clone(),
                components: comps.clone(),
            });
            return Ok(());
        }
        for &a in d.hom(f.ob(x), g.ob(x)) {
            budget.spend(1)?;
            if !allowed(a) {
                continue;
            }
            comps[x] = a;
            let natural = squares[x].iter().all(|&m| {
                let (s, t) = (c.src(m), c.tgt(m));
                d.comp(g.mor(m), comps[s]) == d.comp(comps[t], f.mor(m))
            });
            if natural {
                go(x + 1, c, d, f, g, allowed, squares, comps, budget, out)?;
            }
        }
        comps[x] = usize::MAX;
        Ok(())
    }

    go(0, c, d, f, g, allowed, &squares, &mut comps, &mut budget, &mut out)?;
    Ok(out)
}

/// A functor category together with the functors and transformations that
/// its objects and morphisms stand for.
#[derive(Clone, Debug)]
pub struct FunctorCategory {
    pub category: FinCategory,
    pub functors: Vec<Functor>,
    pub transformations: Vec<NatTrans>,
    functor_index: HashMap<(Vec<ObId>, Vec<MorId>), ObId>,
    trans_index: HashMap<(ObId, ObId, Vec<MorId>), MorId>,
}

impl FunctorCategory {
    pub fn object_of(&self, f: &Functor) -> Option<ObId> {
        self.functor_index
            .get(&(f.ob_map().to_vec(), f.mor_map().to_vec()))
            .copied()
    }

    pub fn morphism_of(&self, t: &NatTrans) -> Option<MorId> {
        let s = self.object_of(t.source())?;
        let g = self.object_of(t.target())?;
        self.trans_index
            .get(&(s, g, t.components().to_vec()))
            .copied()
    }

    /// Looks up a transformation by endpoints and components.
    pub fn morphism_with(&self, s: ObId, t: ObId, components: &[MorId]) -> Option<MorId> {
        self.trans_index.get(&(s, t, components.to_vec())).copied()
    }
}

/// The category `Fun(c, d)`: all functors, all natural transformations,
/// componentwise composition.
pub fn functor_category(c: &FinCategory, d: &FinCategory, limits: &Limits) -> Result<FunctorCategory> {
    build_functor_category(c, d, &|_| true, limits)
}

/// `we(C^D)`: all functors `d → rc.cat`, only componentwise-weak
/// transformations.
pub fn we_functor_category(rc: &RelativeCategory, d: &FinCategory, limits: &Limits) -> Result<FunctorCategory> {
    build_functor_category(d, rc.category(), &|m| rc.is_weak(m), limits)
}

fn build_functor_category(
    c: &FinCategory,
    d: &FinCategory,
    allowed: &dyn Fn(MorId) -> bool,
    limits: &Limits,
) -> Result<FunctorCategory> {
    limits.guard(pow_size(d.num_objects(), c.num_objects()))?;
    let functors = FunctorSearch::new(c, d).run(limits)?;
    let mut builder = CategoryBuilder::new();
    let mut ob_names = UniqueNames::default();
    let mut functor_index = HashMap::new();
    for (i, f) in functors.iter().enumerate() {
        builder.add_object(ob_names.take(f.canonical_name()));
        functor_index.insert((f.ob_map().to_vec(), f.mor_map().to_vec()), i);
    }
    let mut transformations = Vec::new();
    let mut trans_index = HashMap::new();
    let mut mor_names = UniqueNames::default();
    let mut total: u128 = 0;
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            for t in enumerate_nat_trans(f, g, allowed, limits)? {
                total += 1;
                limits.guard(total)?;
                let comps: Vec<&str> = t.components().iter().map(|&a| d.morphism_name(a)).collect();
                let name = mor_names.take(format!(
                    "{}=>{}:[{}]",
                    f.canonical_name(),
                    g.canonical_name(),
                    comps.join(",")
                ));
                let id = builder.add_morphism(name, i, j);
                trans_index.insert((i, j, t.components().to_vec()), id);
                transformations.push(t);
            }
        }
    }
    for (i, f) in functors.iter().enumerate() {
        let id = trans_index[&(i, i, NatTrans::identity(f).components().to_vec())];
        builder.set_identity(i, id);
    }
    let mut leaving: Vec<Vec<MorId>> = vec![Vec::new(); functors.len()];
    for a in 0..transformations.len() {
        leaving[builder.morphism_src(a)].push(a);
    }
    for (a, s) in transformations.iter().enumerate() {
        let (i, j) = (builder.morphism_src(a), builder.morphism_tgt(a));
        for &b in &leaving[j] {
            let t = &transformations[b];
            let k = builder.morphism_tgt(b);
            let comps: Vec<MorId> = s
                .components()
                .iter()
                .zip(t.components())
                .map(|(&x, &y)| d.compose(y, x))
                .collect();
            let ba = *trans_index
                .get(&(i, k, comps))
                .ok_or_else(|| Error::InvariantViolation("weak transformations not closed under composition".into()))?;
            builder.set_comp(b, a, ba);
        }
    }
    let category = builder.build_unchecked();
    Ok(FunctorCategory {
        category,
        functors,
        transformations,
        functor_index,
        trans_index,
    })
}
