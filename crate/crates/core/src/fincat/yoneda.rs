use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::category::{FinCategory, ObId};
use crate::fincat::setfunctor::SetFunctor;
use crate::limits::Limits;

/// An explicit bijection between two enumerated finite sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionWitness {
    pub domain_size: usize,
    pub codomain_size: usize,
    /// `(element, image)` pairs of the forward map, in domain order.
    pub pairs: Vec<(String, String)>,
}

/// A natural transformation `Hom(x, -) ⇒ F` as one function per object.
type RepTrans = Vec<Vec<usize>>;

/// Enumerates `Nat(Hom(x,-), F)` by brute force and exhibits the bijection
/// `α ↦ α_x(id_x)` together with its inverse `a ↦ (h ↦ F(h)(a))`.
pub fn yoneda_check(c: &FinCategory, x: ObId, f: &SetFunctor, limits: &Limits) -> Result<BijectionWitness> {
    let transformations = enumerate_from_representable(c, x, f, limits)?;
    let id_pos = c.hom(x, x).iter().position(|&h| h == c.ident(x)).expect("identity in Hom(x,x)");
    let forward: Vec<usize> = transformations.iter().map(|alpha| alpha[x][id_pos]).collect();

    let inverse = |a: usize| -> RepTrans {
        c.objects()
            .map(|y| c.hom(x, y).iter().map(|&h| f.act(h, a)).collect())
            .collect()
    };
    let n = f.size(x);
    let fail = |msg: &str| Error::InvariantViolation(format!("Yoneda bijection failed: {msg}"));
    if transformations.len() != n {
        return Err(fail(&format!("|Nat| = {} but |F(x)| = {n}", transformations.len())));
    }
    for a in 0..n {
        let alpha = inverse(a);
        let Some(k) = transformations.iter().position(|t| *t == alpha) else {
            return Err(fail("inverse image is not natural"));
        };
        if forward[k] != a {
            return Err(fail("forward after inverse is not the identity"));
        }
    }
    for (k, alpha) in transformations.iter().enumerate() {
        if inverse(forward[k]) != *alpha {
            return Err(fail("inverse after forward is not the identity"));
        }
    }
    let pairs = transformations
        .iter()
        .zip(&forward)
        .map(|(alpha, &a)| (describe(c, x, f, alpha), f.set(x)[a].clone()))
        .collect();
    Ok(BijectionWitness {
        domain_size: transformations.len(),
        codomain_size: n,
        pairs,
    })
}

fn describe(c: &FinCategory, x: ObId, f: &SetFunctor, alpha: &RepTrans) -> String {
    let parts: Vec<String> = c
        .objects()
        .flat_map(|y| {
            c.hom(x, y)
                .iter()
                .zip(&alpha[y])
                .map(move |(&h, &v)| format!("{}↦{}", c.morphism_name(h), f.set(y)[v]))
        })
        .collect();
    format!("[{}]", parts.join(","))
}

/// All natural transformations `Hom(x, -) ⇒ F`, by backtracking over
/// `(object, morphism)` slots with naturality checked as soon as both sides
/// are assigned.
pub fn enumerate_from_representable(
    c: &FinCategory,
    x: ObId,
    f: &SetFunctor,
    limits: &Limits,
) -> Result<Vec<RepTrans>> {
    let slots: Vec<(ObId, usize)> = c
        .objects()
        .flat_map(|y| (0..c.hom(x, y).len()).map(move |k| (y, k)))
        .collect();
    let mut slot_of = std::collections::HashMap::new();
    for (s, &(y, k)) in slots.iter().enumerate() {
        slot_of.insert(c.hom(x, y)[k], s);
    }
    // constraint: value at slot of (m ∘ h) = F(m)(value at slot of h)
    let mut constraints: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); slots.len()];
    for (s, &(y, k)) in slots.iter().enumerate() {
        let h = c.hom(x, y)[k];
        for &m in c.out_of(y) {
            let t = slot_of[&c.compose(m, h)];
            constraints[s.max(t)].push((s, m, t));
        }
    }
    let mut budget = limits.budget();
    let mut values = vec![usize::MAX; slots.len()];
    let mut out = Vec::new();
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    // iterative DFS: (slot, next candidate)
    while let Some((s, cand)) = stack.pop() {
        if s == slots.len() {
            let mut alpha: RepTrans = c.objects().map(|y| vec![0; c.hom(x, y).len()]).collect();
            for (t, &(y, k)) in slots.iter().enumerate() {
                alpha[y][k] = values[t];
            }
            out.push(alpha);
            continue;
        }
        let y = slots[s].0;
        if cand >= f.size(y) {
            values[s] = usize::MAX;
            continue;
        }
        stack.push((s, cand + 1));
        budget.spend(1)?;
        values[s] = cand;
        let ok = constraints[s]
            .iter()
            .all(|&(a, m, b)| values[b] == f.act(m, values[a]));
        if ok {
            stack.push((s + 1, 0));
        }
    }
    Ok(out)
}
