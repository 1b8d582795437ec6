use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fibrations::cofibered::lifts_from;
use crate::fincat::{opposite, Functor, MorId, ObId};

/// An object `z` at which the comparison
/// `Hom(y, z) → Hom(x, z) ×_{Hom(px, pz)} Hom(py, pz)` is not a bijection,
/// for `f: x → y`.
pub fn cocartesian_witness(p: &Functor, f: MorId) -> Option<ObId> {
    let d = p.domain();
    let (x, y) = (d.src(f), d.tgt(f));
    d.objects().find(|&z| {
        let mut seen: HashMap<(MorId, MorId), usize> = HashMap::new();
        for &h in d.hom(y, z) {
            *seen.entry((d.compose(h, f), p.mor(h))).or_default() += 1;
        }
        let c = p.codomain();
        let pf = p.mor(f);
        let pairs = d.hom(x, z).iter().map(|&g| {
            c.hom(p.ob(y), p.ob(z))
                .iter()
                .filter(|&&hb| c.compose(hb, pf) == p.mor(g))
                .count()
        });
        let expected: usize = pairs.sum();
        seen.len() != expected || seen.values().any(|&k| k != 1)
    })
}

pub fn is_cocartesian_morphism(p: &Functor, f: MorId) -> bool {
    cocartesian_witness(p, f).is_none()
}

/// Dual: `Hom(z, x) → Hom(z, y) ×_{Hom(pz, py)} Hom(pz, px)` bijective for
/// every `z`.
pub fn is_cartesian_morphism(p: &Functor, f: MorId) -> bool {
    let (dop, cop) = (opposite(p.domain()), opposite(p.codomain()));
    is_cocartesian_morphism(&p.opposite(&dop, &cop), f)
}

/// All coCartesian lifts of one base morphism at one source.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftSet {
    pub morphism: MorId,
    pub source: ObId,
    pub lifts: Vec<MorId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoCartStructure {
    pub base: Functor,
    pub lifts: Vec<LiftSet>,
}

/// A base morphism and a source lift with no coCartesian lift.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MissingLift {
    pub morphism: MorId,
    pub source: ObId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoCartVerdict {
    Fibration(CoCartStructure),
    Missing(MissingLift),
}

impl CoCartVerdict {
    pub fn is_fibration(&self) -> bool {
        matches!(self, CoCartVerdict::Fibration(_))
    }

    pub fn structure(&self) -> Option<&CoCartStructure> {
        match self {
            CoCartVerdict::Fibration(s) => Some(s),
            CoCartVerdict::Missing(_) => None,
        }
    }

    pub fn missing(&self) -> Option<MissingLift> {
        match self {
            CoCartVerdict::Fibration(_) => None,
            CoCartVerdict::Missing(m) => Some(*m),
        }
    }
}

/// Searches a coCartesian lift for every base morphism and every source over
/// its source. Any two coCartesian lifts of the same pair must be related by
/// exactly one isomorphism over the identity; a violation is an error.
pub fn is_cocartesian_fibration(p: &Functor) -> Result<CoCartVerdict> {
    let (d, c) = (p.domain(), p.codomain());
    let mut out = Vec::new();
    for f in c.morphisms() {
        for x in d.objects().filter(|&x| p.ob(x) == c.src(f)) {
            let lifts: Vec<MorId> = lifts_from(p, f, x)
                .into_iter()
                .filter(|&g| is_cocartesian_morphism(p, g))
                .collect();
            if lifts.is_empty() {
                return Ok(CoCartVerdict::Missing(MissingLift { morphism: f, source: x }));
            }
            for &a in &lifts {
                for &b in &lifts {
                    let over_id: Vec<MorId> = d
                        .hom(d.tgt(a), d.tgt(b))
                        .iter()
                        .copied()
                        .filter(|&u| d.compose(u, a) == b && c.is_identity(p.mor(u)))
                        .collect();
                    if over_id.len() != 1 || !d.is_iso(over_id[0]) {
                        return Err(Error::InvariantViolation(format!(
                            "coCartesian lifts `{}` and `{}` are not uniquely isomorphic",
                            d.morphism_name(a),
                            d.morphism_name(b)
                        )));
                    }
                }
            }
            out.push(LiftSet {
                morphism: f,
                source: x,
                lifts,
            });
        }
    }
    Ok(CoCartVerdict::Fibration(CoCartStructure {
        base: p.clone(),
        lifts: out,
    }))
}

/// Dual, computed on opposites. Lifts end at the given object: `source` is
/// then the target of the base morphism's lift.
pub fn is_cartesian_fibration(p: &Functor) -> Result<CoCartVerdict> {
    let (dop, cop) = (opposite(p.domain()), opposite(p.codomain()));
    Ok(match is_cocartesian_fibration(&p.opposite(&dop, &cop))? {
        CoCartVerdict::Fibration(s) => CoCartVerdict::Fibration(CoCartStructure {
            base: p.clone(),
            lifts: s.lifts,
        }),
        m => m,
    })
}
