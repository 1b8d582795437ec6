use crate::error::{Error, Result};
use crate::fincat::{poset_category, we_functor_category, FinCategory, Functor, FunctorCategory, MorId, ObId, RelativeCategory};
use crate::limits::Limits;
use crate::simpset::standard::{chain_degen, chain_face, chains, Chain};
use crate::sspace::bisimplicial::{tabulate2, Ops, TruncBiSimpSet};

/// The functor `we(C^[n]) → we(C^[m])` given by precomposition with a
/// monotone map `θ: [m] → [n]`, as object and morphism tables.
struct Reindex {
    ob: Vec<ObId>,
    mor: Vec<MorId>,
}

fn reindex(from: &FunctorCategory, to: &FunctorCategory, m: usize, n: usize, theta: &[usize]) -> Result<Reindex> {
    let (pm, pn) = (poset_category(m), poset_category(n));
    let arrow = |p: &FinCategory, i: usize, j: usize| p.hom(i, j)[0];
    let restrict = |f: &Functor| -> Result<ObId> {
        let ob_map: Vec<ObId> = (0..=m).map(|k| f.ob(theta[k])).collect();
        let mor_map: Vec<MorId> = pm
            .morphisms()
            .map(|a| f.mor(arrow(&pn, theta[pm.src(a)], theta[pm.tgt(a)])))
            .collect();
        let g = Functor::new(pm.clone(), f.codomain().clone(), ob_map, mor_map)?;
        to.object_of(&g)
            .ok_or_else(|| Error::InvariantViolation("restricted functor missing from functor category".into()))
    };
    let ob = from.functors.iter().map(restrict).collect::<Result<Vec<_>>>()?;
    let mor = from
        .transformations
        .iter()
        .enumerate()
        .map(|(a, t)| {
            let comps: Vec<MorId> = (0..=m).map(|k| t.component(theta[k])).collect();
            let (s, u) = (ob[from.category.src(a)], ob[from.category.tgt(a)]);
            to.morphism_with(s, u, &comps)
                .ok_or_else(|| Error::InvariantViolation("restricted transformation missing".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Reindex { ob, mor })
}

/// The classification diagram: `(n, l)`-simplices are `l`-chains of weak
/// transformations between functors `[n] → C`, i.e. the nerve of
/// `we(C^[n])` at level `l`. Horizontal operators reindex along cofaces and
/// codegeneracies of `Δ`.
pub fn classification_diagram(rc: &RelativeCategory, htrunc: usize, vtrunc: usize, limits: &Limits) -> Result<TruncBiSimpSet> {
    let cats: Vec<FunctorCategory> = (0..=htrunc)
        .map(|n| we_functor_category(rc, &poset_category(n), limits))
        .collect::<Result<_>>()?;
    let mut total: u128 = 0;
    let levels: Vec<Vec<Vec<Chain>>> = cats
        .iter()
        .map(|fc| {
            let ch = chains(&fc.category, vtrunc);
            total += ch.iter().map(|l| l.len() as u128).sum::<u128>();
            ch
        })
        .collect();
    limits.guard(total)?;
    // faces[n][i]: θ = δ_i: [n-1] → [n]; degens[n][i]: θ = σ_i: [n+1] → [n]
    let mut faces: Vec<Vec<Reindex>> = Vec::new();
    let mut degens: Vec<Vec<Reindex>> = Vec::new();
    for n in 0..=htrunc {
        let mut fs = Vec::new();
        if n > 0 {
            for i in 0..=n {
                let theta: Vec<usize> = (0..n).map(|k| if k < i { k } else { k + 1 }).collect();
                fs.push(reindex(&cats[n], &cats[n - 1], n - 1, n, &theta)?);
            }
        }
        faces.push(fs);
        let mut ds = Vec::new();
        if n < htrunc {
            for i in 0..=n {
                let theta: Vec<usize> = (0..n + 2).map(|k| if k <= i { k } else { k - 1 }).collect();
                ds.push(reindex(&cats[n], &cats[n + 1], n + 1, n, &theta)?);
            }
        }
        degens.push(ds);
    }
    let apply = |r: &Reindex, ch: &Chain| Chain {
        start: r.ob[ch.start],
        arrows: ch.arrows.iter().map(|&a| r.mor[a]).collect(),
    };
    tabulate2(
        levels,
        |n, l, ch| {
            let c = &cats[n].category;
            if l == 0 {
                c.object_name(ch.start).to_string()
            } else {
                ch.arrows.iter().map(|&a| c.morphism_name(a)).collect::<Vec<_>>().join(";")
            }
        },
        Ops {
            face: Box::new(|n, _, i, ch| apply(&faces[n][i], ch)),
            degen: Box::new(|n, _, i, ch| apply(&degens[n][i], ch)),
        },
        Ops {
            face: Box::new(|n, l, i, ch| chain_face(&cats[n].category, l, i, ch)),
            degen: Box::new(|n, _, i, ch| chain_degen(&cats[n].category, i, ch)),
        },
    )
}

/// `N(C)`: the classification diagram of `C` with the isomorphisms as weak
/// equivalences.
pub fn classifying_diagram(c: &FinCategory, htrunc: usize, vtrunc: usize, limits: &Limits) -> Result<TruncBiSimpSet> {
    classification_diagram(&RelativeCategory::isomorphisms(c), htrunc, vtrunc, limits)
}
