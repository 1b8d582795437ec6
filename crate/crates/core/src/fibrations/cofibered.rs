use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{BijectionWitness, CategoryBuilder, FinCategory, Functor, FunctorSearch, MorId, ObId, SetFunctor};
use crate::limits::Limits;
use crate::names::UniqueNames;

/// A `(morphism, source lift)` pair without a unique lift.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberFailure {
    pub morphism: String,
    pub source: String,
    pub lifts: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberedReport {
    pub verdict: bool,
    pub failures: Vec<FiberFailure>,
}

/// Lifts of `f` starting at `x`: morphisms `x → ?` over `f`.
pub(crate) fn lifts_from(p: &Functor, f: MorId, x: ObId) -> Vec<MorId> {
    p.domain().out_of(x).iter().copied().filter(|&g| p.mor(g) == f).collect()
}

/// Checks that every `f: c → d` and every `x` over `c` admit exactly one lift
/// `x → y` over `f`.
pub fn is_cofibered_in_sets(p: &Functor) -> FiberedReport {
    let (d, c) = (p.domain(), p.codomain());
    let mut failures = Vec::new();
    for f in c.morphisms() {
        for x in d.objects().filter(|&x| p.ob(x) == c.src(f)) {
            let lifts = lifts_from(p, f, x).len();
            if lifts != 1 {
                failures.push(FiberFailure {
                    morphism: c.morphism_name(f).to_string(),
                    source: d.object_name(x).to_string(),
                    lifts,
                });
            }
        }
    }
    FiberedReport {
        verdict: failures.is_empty(),
        failures,
    }
}

/// Category of elements with caller-chosen names: objects `(c, a)` with
/// `a ∈ F(c)`, morphisms `(f, a): (c, a) → (d, F(f)(a))`.
fn elements(
    f: &SetFunctor,
    ob_name: impl Fn(ObId, usize) -> String,
    mor_name: impl Fn(MorId, usize) -> String,
) -> (FinCategory, Functor) {
    let c = f.domain();
    let mut b = CategoryBuilder::new();
    let mut obs = UniqueNames::default();
    let mut first = vec![0; c.num_objects()];
    let mut ob_map = Vec::new();
    for x in c.objects() {
        first[x] = ob_map.len();
        for a in 0..f.size(x) {
            b.add_object(obs.take(ob_name(x, a)));
            ob_map.push(x);
        }
    }
    let mut mors = UniqueNames::default();
    let mut id_of = vec![vec![0; 0]; c.num_morphisms()];
    let mut mor_map = Vec::new();
    for m in c.morphisms() {
        let x = c.src(m);
        for a in 0..f.size(x) {
            let g = b.add_morphism(mors.take(mor_name(m, a)), first[x] + a, first[c.tgt(m)] + f.act(m, a));
            id_of[m].push(g);
            mor_map.push(m);
        }
    }
    for x in c.objects() {
        for a in 0..f.size(x) {
            b.set_identity(first[x] + a, id_of[c.ident(x)][a]);
        }
    }
    for (g, m, gm) in c.composition_triples() {
        for a in 0..f.size(c.src(m)) {
            b.set_comp(id_of[g][f.act(m, a)], id_of[m][a], id_of[gm][a]);
        }
    }
    let total = b.build().expect("category of elements");
    let proj = Functor::new_unchecked(total.clone(), c.clone(), ob_map, mor_map);
    (total, proj)
}

/// `∫_C F` with its projection to `C`. Objects are named `(c,a)`, morphisms
/// `(f,a)`.
pub fn grothendieck(f: &SetFunctor) -> (FinCategory, Functor) {
    let c = f.domain();
    elements(
        f,
        |x, a| format!("({},{})", c.object_name(x), f.set(x)[a]),
        |m, a| format!("({},{})", c.morphism_name(m), f.set(c.src(m))[a]),
    )
}

/// `C_{x/}` with its projection. Objects are the morphisms out of `x`, named
/// as in `C`; a morphism `h: f → h∘f` is named `(h,f)`.
pub fn under_category(c: &FinCategory, x: ObId) -> Result<(FinCategory, Functor)> {
    if x >= c.num_objects() {
        return Err(Error::UnknownObject(format!("#{x}")));
    }
    let rep = SetFunctor::representable(c, x);
    Ok(elements(
        &rep,
        |y, a| rep.set(y)[a].clone(),
        |m, a| format!("({},{})", c.morphism_name(m), rep.set(c.src(m))[a]),
    ))
}

/// Functors `C_{c/} → D` over `C` against objects of `D` over `c`, compared
/// along evaluation at `id_c`.
pub fn cofibered_yoneda_check(p: &Functor, c: ObId, limits: &Limits) -> Result<BijectionWitness> {
    if !is_cofibered_in_sets(p).verdict {
        return Err(Error::Precondition("functor is not cofibered in sets".into()));
    }
    let (d, base) = (p.domain(), p.codomain());
    let (under, proj) = under_category(base, c)?;
    let functors = FunctorSearch::new(&under, d)
        .objects_where(|u, y| p.ob(y) == proj.ob(u))
        .morphisms_where(|m, g| p.mor(g) == proj.mor(m))
        .run(limits)?;
    let fiber: Vec<ObId> = d.objects().filter(|&y| p.ob(y) == c).collect();
    let start = under.object(base.morphism_name(base.ident(c)))?;
    let forward: Vec<ObId> = functors.iter().map(|g| g.ob(start)).collect();
    let mut hit = vec![false; d.num_objects()];
    for &y in &forward {
        if std::mem::replace(&mut hit[y], true) {
            return Err(Error::InvariantViolation("evaluation at the identity is not injective".into()));
        }
    }
    if forward.len() != fiber.len() {
        return Err(Error::InvariantViolation(format!(
            "{} functors over C but {} objects in the fiber",
            forward.len(),
            fiber.len()
        )));
    }
    Ok(BijectionWitness {
        domain_size: functors.len(),
        codomain_size: fiber.len(),
        pairs: functors
            .iter()
            .zip(&forward)
            .map(|(g, &y)| (g.canonical_name(), d.object_name(y).to_string()))
            .collect(),
    })
}
