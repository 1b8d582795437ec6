use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::simpset::map::SimpMap;
use crate::simpset::simplicial::{Simplex, TruncSimpSet};
use crate::simpset::standard::{boundary_inclusion, horn_inclusion};

/// Every simplex of `x`, each preceded by all of its faces.
fn face_first_order(x: &TruncSimpSet) -> Vec<(usize, Simplex)> {
    let mut placed: Vec<Vec<bool>> = x.sizes().iter().map(|&k| vec![false; k]).collect();
    let mut order = Vec::new();
    let mut stack = Vec::new();
    for n in (0..=x.truncation()).rev() {
        for s in x.simplices(n) {
            stack.push((n, s, false));
            while let Some((m, t, expanded)) = stack.pop() {
                if placed[m][t] {
                    continue;
                }
                if expanded || m == 0 {
                    placed[m][t] = true;
                    order.push((m, t));
                } else {
                    stack.push((m, t, true));
                    for j in (0..=m).rev() {
                        stack.push((m - 1, x.face(m, j, t), false));
                    }
                }
            }
        }
    }
    order
}

/// Backtracking search for simplicial maps `x → y`.
///
/// Simplices are visited faces first, so vertex choices are checked against
/// edges as soon as both ends are placed. Degenerate simplices are forced by
/// their lower-level face; each nondegenerate simplex ranges over the
/// simplices of `y` with the already chosen faces. Optional constraints fix
/// some values and require the map to lie over a given map along `p`.
pub(crate) struct MapSearch<'a> {
    x: &'a TruncSimpSet,
    y: &'a TruncSimpSet,
    fixed: Option<Vec<Vec<Option<Simplex>>>>,
    over: Option<(&'a SimpMap, &'a SimpMap)>,
}

impl<'a> MapSearch<'a> {
    pub(crate) fn new(x: &'a TruncSimpSet, y: &'a TruncSimpSet) -> Self {
        MapSearch {
            x,
            y,
            fixed: None,
            over: None,
        }
    }

    /// Prescribes values on some simplices.
    pub(crate) fn fixed(mut self, fixed: Vec<Vec<Option<Simplex>>>) -> Self {
        self.fixed = Some(fixed);
        self
    }

    /// Only maps `l` with `p ∘ l = bottom`.
    pub(crate) fn over(mut self, p: &'a SimpMap, bottom: &'a SimpMap) -> Self {
        self.over = Some((p, bottom));
        self
    }

    pub(crate) fn run(&self, limits: &Limits, mut visit: impl FnMut(SimpMap) -> bool) -> Result<()> {
        let (x, y) = (self.x, self.y);
        if x.truncation() != y.truncation() {
            return Err(Error::TruncationMismatch(x.truncation(), y.truncation()));
        }
        let by_faces: Vec<HashMap<Vec<Simplex>, Vec<Simplex>>> = (0..=y.truncation())
            .map(|n| {
                let mut m: HashMap<Vec<Simplex>, Vec<Simplex>> = HashMap::new();
                if n > 0 {
                    for t in y.simplices(n) {
                        m.entry(y.faces_of(n, t)).or_default().push(t);
                    }
                }
                m
            })
            .collect();
        let slots = face_first_order(x);
        let mut assign: Vec<Vec<Simplex>> = x.sizes().iter().map(|&k| vec![usize::MAX; k]).collect();
        let mut budget = limits.budget();
        let finish = |assign: &Vec<Vec<Simplex>>| {
            SimpMap::new(x.clone(), y.clone(), assign.clone())
                .map_err(|e| Error::InvariantViolation(format!("map search produced a non-simplicial map: {e}")))
        };
        if slots.is_empty() {
            visit(finish(&assign)?);
            return Ok(());
        }
        let candidates = |k: usize, assign: &Vec<Vec<Simplex>>| -> Vec<Simplex> {
            let (n, s) = slots[k];
            let mut cands: Vec<Simplex> = if let Some((i, t)) = x.degenerate_from(n, s) {
                let v = y.degen(n - 1, i, assign[n - 1][t]);
                let faces: Vec<Simplex> = (0..=n).map(|j| assign[n - 1][x.face(n, j, s)]).collect();
                if y.faces_of(n, v) == faces {
                    vec![v]
                } else {
                    Vec::new()
                }
            } else if n == 0 {
                y.simplices(0).collect()
            } else {
                let faces: Vec<Simplex> = (0..=n).map(|j| assign[n - 1][x.face(n, j, s)]).collect();
                by_faces[n].get(&faces).cloned().unwrap_or_default()
            };
            if let Some(fixed) = &self.fixed {
                if let Some(v) = fixed[n][s] {
                    cands.retain(|&c| c == v);
                }
            }
            if let Some((p, bottom)) = self.over {
                let want = bottom.at(n, s);
                cands.retain(|&c| p.at(n, c) == want);
            }
            cands
        };
        let mut frames: Vec<(Vec<Simplex>, usize)> = vec![(candidates(0, &assign), 0)];
        while !frames.is_empty() {
            let depth = frames.len() - 1;
            let frame = &mut frames[depth];
            if frame.1 == frame.0.len() {
                frames.pop();
                continue;
            }
            let c = frame.0[frame.1];
            frame.1 += 1;
            budget.spend(1)?;
            let (n, s) = slots[depth];
            assign[n][s] = c;
            if depth + 1 == slots.len() {
                if !visit(finish(&assign)?) {
                    return Ok(());
                }
            } else {
                let next = candidates(depth + 1, &assign);
                frames.push((next, 0));
            }
        }
        Ok(())
    }

    pub(crate) fn all(&self, limits: &Limits) -> Result<Vec<SimpMap>> {
        let mut out = Vec::new();
        self.run(limits, |m| {
            out.push(m);
            true
        })?;
        Ok(out)
    }

    pub(crate) fn first(&self, limits: &Limits) -> Result<Option<SimpMap>> {
        let mut out = None;
        self.run(limits, |m| {
            out = Some(m);
            false
        })?;
        Ok(out)
    }
}

/// Every simplicial map `x → y`.
pub fn simplicial_maps(x: &TruncSimpSet, y: &TruncSimpSet, limits: &Limits) -> Result<Vec<SimpMap>> {
    MapSearch::new(x, y).all(limits)
}

/// A commutative square
///
/// ```text
///   A --top--> Y
///   |          |
///   i          p
///   v          v
///   B -bottom> X
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftProblem {
    pub i: SimpMap,
    pub p: SimpMap,
    pub top: SimpMap,
    pub bottom: SimpMap,
}

impl LiftProblem {
    pub fn new(i: SimpMap, p: SimpMap, top: SimpMap, bottom: SimpMap) -> Result<Self> {
        if top.domain() != i.domain() || top.codomain() != p.domain() {
            return Err(Error::InvalidLiftProblem("top map has the wrong endpoints".into()));
        }
        if bottom.domain() != i.codomain() || bottom.codomain() != p.codomain() {
            return Err(Error::InvalidLiftProblem("bottom map has the wrong endpoints".into()));
        }
        if top.then(&p)? != i.then(&bottom)? {
            return Err(Error::InvalidLiftProblem("square does not commute".into()));
        }
        Ok(LiftProblem { i, p, top, bottom })
    }
}

/// Prescribed values `i(a) ↦ top(a)`, or `None` if `top` does not factor
/// through `i` on simplices.
fn prescribed(i: &SimpMap, top: &SimpMap) -> Option<Vec<Vec<Option<Simplex>>>> {
    let b = i.codomain();
    let mut fixed: Vec<Vec<Option<Simplex>>> = b.sizes().iter().map(|&k| vec![None; k]).collect();
    for (n, level) in i.levels().iter().enumerate() {
        for (a, &t) in level.iter().enumerate() {
            let v = top.at(n, a);
            match fixed[n][t] {
                Some(w) if w != v => return None,
                _ => fixed[n][t] = Some(v),
            }
        }
    }
    Some(fixed)
}

/// All diagonal maps `B → Y` making both triangles commute.
pub fn solve_lift(lp: &LiftProblem, limits: &Limits) -> Result<Vec<SimpMap>> {
    let Some(fixed) = prescribed(&lp.i, &lp.top) else {
        return Ok(Vec::new());
    };
    MapSearch::new(lp.i.codomain(), lp.p.domain())
        .fixed(fixed)
        .over(&lp.p, &lp.bottom)
        .all(limits)
}

fn has_lift(lp: &LiftProblem, limits: &Limits) -> Result<bool> {
    let Some(fixed) = prescribed(&lp.i, &lp.top) else {
        return Ok(false);
    };
    Ok(MapSearch::new(lp.i.codomain(), lp.p.domain())
        .fixed(fixed)
        .over(&lp.p, &lp.bottom)
        .first(limits)?
        .is_some())
}

/// A square without a lift, labelled by the left map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftFailure {
    pub shape: String,
    pub problem: LiftProblem,
}

/// Right lifting properties of `p`, checked up to dimension `up_to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationReport {
    pub up_to: usize,
    pub kan_fibration: bool,
    pub trivial_fibration: bool,
    pub kan_failure: Option<LiftFailure>,
    pub trivial_failure: Option<LiftFailure>,
}

/// First square `i ⇒ p` without a lift, if any.
pub fn lifting_failure(i: &SimpMap, p: &SimpMap, limits: &Limits) -> Result<Option<LiftProblem>> {
    let (a, b) = (i.domain(), i.codomain());
    for top in MapSearch::new(a, p.domain()).all(limits)? {
        let below = top.then(p)?;
        let Some(fixed) = prescribed(i, &below) else {
            continue;
        };
        for bottom in MapSearch::new(b, p.codomain()).fixed(fixed).all(limits)? {
            let lp = LiftProblem {
                i: i.clone(),
                p: p.clone(),
                top: top.clone(),
                bottom,
            };
            if !has_lift(&lp, limits)? {
                return Ok(Some(lp));
            }
        }
    }
    Ok(None)
}

/// Kan fibration: lifts against every horn `Λ[n]_k → Δ[n]`, `1 ≤ n ≤ up_to`.
/// Trivial fibration: lifts against every `∂Δ[n] → Δ[n]`, `0 ≤ n ≤ up_to`.
pub fn classify_fibration(p: &SimpMap, up_to: usize, limits: &Limits) -> Result<FibrationReport> {
    let trunc = p.domain().truncation();
    if up_to > trunc {
        return Err(Error::TruncationTooSmall { need: up_to, got: trunc });
    }
    let mut kan_failure = None;
    'kan: for n in 1..=up_to {
        for k in 0..=n {
            let i = horn_inclusion(n, k, trunc)?;
            if let Some(problem) = lifting_failure(&i, p, limits)? {
                kan_failure = Some(LiftFailure {
                    shape: format!("horn({n},{k})"),
                    problem,
                });
                break 'kan;
            }
        }
    }
    let mut trivial_failure = None;
    for n in 0..=up_to {
        let i = boundary_inclusion(n, trunc);
        if let Some(problem) = lifting_failure(&i, p, limits)? {
            trivial_failure = Some(LiftFailure {
                shape: format!("boundary({n})"),
                problem,
            });
            break;
        }
    }
    Ok(FibrationReport {
        up_to,
        kan_fibration: kan_failure.is_none(),
        trivial_fibration: trivial_failure.is_none(),
        kan_failure,
        trivial_failure,
    })
}
