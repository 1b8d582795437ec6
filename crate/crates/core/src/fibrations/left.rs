use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{poset_category, BijectionWitness};
use crate::limits::Limits;
use crate::simpset::lifting::MapSearch;
use crate::simpset::{delta, delta_map, nerve, product, sub_object, vertex_name, SimpMap, Simplex, TruncSimpSet};
use crate::simpset::simplicial::tabulate;
use crate::sspace::{embed_vertical, embed_vertical_map, vertical_regime, BiSimpMap, Regime, TruncBiSimpSet};

/// The comparison `L_1 → L_0 ×_{W_0} W_1` along one leg.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub edges: usize,
    pub fiber_product: usize,
    pub injective: bool,
    pub surjective: bool,
}

impl Comparison {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

/// `leg` is the face index: 1 for the source, 0 for the target.
fn comparison(p: &SimpMap, leg: usize) -> Result<Comparison> {
    let (l, w) = (p.domain(), p.codomain());
    if l.truncation() < 1 {
        return Err(Error::TruncationTooSmall { need: 1, got: l.truncation() });
    }
    let fiber_product = l
        .simplices(0)
        .map(|v| w.simplices(1).filter(|&e| w.face(1, leg, e) == p.at(0, v)).count())
        .sum();
    let image: HashSet<(Simplex, Simplex)> = l.simplices(1).map(|e| (l.face(1, leg, e), p.at(1, e))).collect();
    let edges = l.level_size(1);
    Ok(Comparison {
        edges,
        fiber_product,
        injective: image.len() == edges,
        surjective: image.len() == fiber_product,
    })
}

pub fn left_fibration_comparison(p: &SimpMap) -> Result<Comparison> {
    comparison(p, 1)
}

/// Discrete left fibration: every edge of `W` has exactly one lift at each
/// point over its source.
pub fn is_left_fibration(p: &SimpMap) -> Result<bool> {
    Ok(comparison(p, 1)?.bijective())
}

/// Dual along the target leg.
pub fn is_right_fibration(p: &SimpMap) -> Result<bool> {
    Ok(comparison(p, 0)?.bijective())
}

/// A left fibration over `N([1])` cut into its fibers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberDecomposition {
    /// Inclusion of the fiber over `0`.
    pub over_0: SimpMap,
    pub over_1: SimpMap,
    /// Edges over the arrow `0 → 1`.
    pub over_01: Vec<Simplex>,
    /// `(source, target)` of each edge in `over_01`, as vertices of `L`.
    pub zigzag: Vec<(Simplex, Simplex)>,
    /// Each vertex over `0` paired with the target of its unique lift.
    pub transport: Vec<(Simplex, Simplex)>,
}

pub fn fiber_decomposition_over_f1(p: &SimpMap) -> Result<FiberDecomposition> {
    let (l, w) = (p.domain(), p.codomain());
    if *w != nerve(&poset_category(1), w.truncation()) {
        return Err(Error::Precondition("codomain is not the nerve of [1]".into()));
    }
    if !is_left_fibration(p)? {
        return Err(Error::Precondition("not a left fibration".into()));
    }
    let (v0, v1) = (w.simplex(0, "0")?, w.simplex(0, "1")?);
    let arrow = w.simplex(1, "0-1")?;
    let over = |v: Simplex| {
        sub_object(l, |n, x| p.at(n, x) == w.degen_iter(0, v, &vec![0; n]))
    };
    let over_01: Vec<Simplex> = l.simplices(1).filter(|&e| p.at(1, e) == arrow).collect();
    let zigzag: Vec<(Simplex, Simplex)> = over_01.iter().map(|&e| (l.face(1, 1, e), l.face(1, 0, e))).collect();
    let mut transport = zigzag.clone();
    transport.sort();
    Ok(FiberDecomposition {
        over_0: over(v0)?,
        over_1: over(v1)?,
        over_01,
        zigzag,
        transport,
    })
}

/// Simplices of `Δ[n] × Δ[1]` paired with their two components.
struct Cylinder {
    space: TruncSimpSet,
    first: SimpMap,
    second: SimpMap,
    by_parts: Vec<HashMap<(Simplex, Simplex), Simplex>>,
}

fn cylinder(n: usize, trunc: usize) -> Result<Cylinder> {
    let cone = product(&delta(n, trunc), &delta(1, trunc))?;
    let by_parts = (0..=trunc)
        .map(|k| {
            cone.object
                .simplices(k)
                .map(|s| ((cone.first.at(k, s), cone.second.at(k, s)), s))
                .collect()
        })
        .collect();
    Ok(Cylinder {
        space: cone.object,
        first: cone.first,
        second: cone.second,
        by_parts,
    })
}

/// The under-object of a simplicial set at `x`: level `n` holds the maps
/// `Δ[n] × Δ[1] → S` that are constant at `x` on `Δ[n] × {0}`. Returns it
/// with the projection evaluating at `Δ[n] × {1}`.
struct Under {
    projection: SimpMap,
    /// The edge of `S` picked out by each vertex.
    edge: Vec<Simplex>,
}

fn under_simplicial(s: &TruncSimpSet, x: Simplex, limits: &Limits) -> Result<Under> {
    let trunc = s.truncation();
    if trunc < 1 {
        return Err(Error::TruncationTooSmall { need: 1, got: trunc });
    }
    let m = trunc - 1;
    let d1 = delta(1, trunc);
    let cyls: Vec<Cylinder> = (0..=m).map(|n| cylinder(n, trunc)).collect::<Result<_>>()?;
    let mut levels: Vec<Vec<Vec<Vec<Simplex>>>> = Vec::new();
    for cyl in &cyls {
        let zero = d1.simplex(0, "0")?;
        let fixed = (0..=trunc)
            .map(|k| {
                let base = d1.degen_iter(0, zero, &vec![0; k]);
                let at_x = s.degen_iter(0, x, &vec![0; k]);
                cyl.space
                    .simplices(k)
                    .map(|c| (cyl.second.at(k, c) == base).then_some(at_x))
                    .collect()
            })
            .collect();
        let maps = MapSearch::new(&cyl.space, s).fixed(fixed).all(limits)?;
        levels.push(maps.into_iter().map(|f| f.levels().to_vec()).collect());
    }
    // θ × id on cylinders, as level tables
    let reindex = |n: usize, k: usize, theta: &[usize]| -> Result<Vec<Vec<Simplex>>> {
        let along = delta_map(k, n, theta, trunc)?;
        let (from, to) = (&cyls[k], &cyls[n]);
        Ok((0..=trunc)
            .map(|j| {
                from.space
                    .simplices(j)
                    .map(|c| to.by_parts[j][&(along.at(j, from.first.at(j, c)), from.second.at(j, c))])
                    .collect()
            })
            .collect())
    };
    let mut faces: Vec<Vec<Vec<Vec<Simplex>>>> = vec![Vec::new()];
    let mut degens: Vec<Vec<Vec<Vec<Simplex>>>> = Vec::new();
    for n in 0..=m {
        if n > 0 {
            faces.push(
                (0..=n)
                    .map(|i| reindex(n, n - 1, &(0..n).map(|k| if k < i { k } else { k + 1 }).collect::<Vec<_>>()))
                    .collect::<Result<_>>()?,
            );
        }
        degens.push(if n < m {
            (0..=n)
                .map(|i| reindex(n, n + 1, &(0..n + 2).map(|k| if k <= i { k } else { k - 1 }).collect::<Vec<_>>()))
                .collect::<Result<_>>()?
        } else {
            Vec::new()
        });
    }
    let pull = |table: &Vec<Vec<Simplex>>, phi: &Vec<Vec<Simplex>>| -> Vec<Vec<Simplex>> {
        table.iter().enumerate().map(|(j, t)| t.iter().map(|&c| phi[j][c]).collect()).collect()
    };
    // name by the path (0,0) → (0,1) → (1,1) → … → (n,1)
    let path_edges: Vec<Vec<Simplex>> = cyls
        .iter()
        .enumerate()
        .map(|(n, cyl)| {
            let dn = delta(n, trunc);
            let mut out = vec![cyl.by_parts[1][&(dn.simplex(1, &vertex_name(n, &[0, 0])).unwrap(), d1.simplex(1, "01").unwrap())]];
            for k in 1..=n {
                let e = dn.simplex(1, &vertex_name(n, &[k - 1, k])).unwrap();
                out.push(cyl.by_parts[1][&(e, d1.simplex(1, "11").unwrap())]);
            }
            out
        })
        .collect();
    // the top simplex of Δ[n] paired with the constant at 1
    let tops: Vec<Vec<Simplex>> = (0..=m)
        .map(|n| {
            let dn = delta(n, trunc);
            let top = dn.simplex(n, &vertex_name(n, &(0..=n).collect::<Vec<_>>())).unwrap();
            let one = d1.degen_iter(0, d1.simplex(0, "1").unwrap(), &vec![0; n]);
            vec![cyls[n].by_parts[n][&(top, one)]]
        })
        .collect();
    let projection: Vec<Vec<Simplex>> = levels
        .iter()
        .enumerate()
        .map(|(n, l)| l.iter().map(|phi| phi[n][tops[n][0]]).collect())
        .collect();
    let edge = levels[0].iter().map(|phi| phi[1][path_edges[0][0]]).collect();
    let under = tabulate(
        levels,
        |n, phi| path_edges[n].iter().map(|&e| s.name(1, phi[1][e])).collect::<Vec<_>>().join(","),
        |n, i, phi| pull(&faces[n][i], phi),
        |n, i, phi| pull(&degens[n][i], phi),
    )?;
    Ok(Under {
        projection: SimpMap::new(under, s.truncate(m)?, projection)?,
        edge,
    })
}

fn discrete_column(w: &TruncBiSimpSet) -> Result<&TruncSimpSet> {
    for n in 0..=w.htrunc() {
        if !matches!(vertical_regime(w.row(n)), Ok(Regime::Discrete)) {
            return Err(Error::Undecidable("under-CSS needs a vertically discrete input".into()));
        }
    }
    Ok(w.column(0))
}

/// `W_{x/}` for vertically discrete `W`, one horizontal level lower than `W`.
pub fn under_css(w: &TruncBiSimpSet, x: Simplex, limits: &Limits) -> Result<TruncBiSimpSet> {
    let s = discrete_column(w)?;
    Ok(embed_vertical(under_simplicial(s, x, limits)?.projection.domain(), w.vtrunc()))
}

/// The projection `W_{x/} → W` (into `W` truncated one level lower).
pub fn under_projection(w: &TruncBiSimpSet, x: Simplex, limits: &Limits) -> Result<BiSimpMap> {
    let s = discrete_column(w)?;
    let under = under_simplicial(s, x, limits)?;
    Ok(embed_vertical_map(&under.projection, w.vtrunc()))
}

/// Maps `W_{x/} → L` over `W` against vertices of `L` over `x`, compared along
/// evaluation at `id_x`.
pub fn left_yoneda_check(p: &SimpMap, x: Simplex, limits: &Limits) -> Result<BijectionWitness> {
    if !is_left_fibration(p)? {
        return Err(Error::Precondition("not a left fibration".into()));
    }
    let (l, w) = (p.domain(), p.codomain());
    let under = under_simplicial(w, x, limits)?;
    let px = &under.projection;
    let m = px.domain().truncation();
    let lm = l.truncate(m)?;
    let pm = SimpMap::new(lm.clone(), w.truncate(m)?, p.levels()[..=m].to_vec())?;
    let maps = MapSearch::new(px.domain(), &lm).over(&pm, px).all(limits)?;
    let u = px.domain();
    let ident = (0..u.level_size(0))
        .find(|&v| under.edge[v] == w.degen(0, 0, x))
        .ok_or_else(|| Error::InvariantViolation("identity missing from the under-object".into()))?;
    let fiber: Vec<Simplex> = l.simplices(0).filter(|&v| p.at(0, v) == x).collect();
    let forward: Vec<Simplex> = maps.iter().map(|g| g.at(0, ident)).collect();
    let distinct: HashSet<&Simplex> = forward.iter().collect();
    if distinct.len() != forward.len() || forward.len() != fiber.len() {
        return Err(Error::InvariantViolation(format!(
            "{} maps over W but {} vertices in the fiber",
            forward.len(),
            fiber.len()
        )));
    }
    Ok(BijectionWitness {
        domain_size: maps.len(),
        codomain_size: fiber.len(),
        pairs: maps
            .iter()
            .zip(&forward)
            .map(|(g, &v)| {
                let top: Vec<&str> = u.simplices(0).map(|s| l.name(0, g.at(0, s))).collect();
                (format!("[{}]", top.join(",")), l.name(0, v).to_string())
            })
            .collect(),
    })
}
