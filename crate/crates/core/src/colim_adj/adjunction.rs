use std::collections::HashMap;

use serde::Serialize;

use crate::colim_adj::universal::{colimit, final_objects, limit};
use crate::error::{Error, Result};
use crate::fibrations::{is_cartesian_fibration, is_cocartesian_fibration};
use crate::fincat::{functor_category, opposite, poset_category, CategoryBuilder, FinCategory, Functor, MorId, ObId};
use crate::limits::Limits;

/// `(f ↓ d)`: objects `(c, h: Fc → d)`, morphisms `u: c → c'` with
/// `h' ∘ F(u) = h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comma {
    pub category: FinCategory,
    /// `(c, h)` for each object.
    pub objects: Vec<(ObId, MorId)>,
    /// The `C`-morphism underlying each morphism.
    pub underlying: Vec<MorId>,
}

pub fn comma_category(f: &Functor, d: ObId, limits: &Limits) -> Result<Comma> {
    let (c, dd) = (f.domain(), f.codomain());
    let objects: Vec<(ObId, MorId)> = c
        .objects()
        .flat_map(|x| dd.hom(f.ob(x), d).iter().map(move |&h| (x, h)))
        .collect();
    limits.guard((objects.len() as u128).pow(2).saturating_mul(c.num_morphisms().max(1) as u128))?;
    let names: Vec<String> = objects
        .iter()
        .map(|&(x, h)| format!("({},{})", c.object_name(x), dd.morphism_name(h)))
        .collect();
    let mut b = CategoryBuilder::new();
    for n in &names {
        b.add_object(n.clone());
    }
    let mut mors: HashMap<(usize, MorId, usize), MorId> = HashMap::new();
    let mut underlying = Vec::new();
    for (k, &(x, h)) in objects.iter().enumerate() {
        for (t, &(y, h2)) in objects.iter().enumerate() {
            for &u in c.hom(x, y) {
                if dd.compose(h2, f.mor(u)) == h {
                    let m = b.add_morphism(format!("{}:{}>{}", c.morphism_name(u), names[k], names[t]), k, t);
                    mors.insert((k, u, t), m);
                    underlying.push(u);
                }
            }
        }
    }
    for (k, &(x, _)) in objects.iter().enumerate() {
        b.set_identity(k, mors[&(k, c.ident(x), k)]);
    }
    for (&(k, u, t), &m) in &mors {
        for (&(t2, w, s), &m2) in &mors {
            if t2 == t {
                b.set_comp(m2, m, mors[&(k, c.compose(w, u), s)]);
            }
        }
    }
    Ok(Comma {
        category: b.build()?,
        objects,
        underlying,
    })
}

/// Exhaustively verified data of an adjunction `left ⊣ right` with
/// `left: A → B`, `right: B → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjunctionCertificate {
    pub left: Functor,
    pub right: Functor,
    /// `η_a: a → G F a`.
    pub unit: Vec<MorId>,
    /// `ε_b: F G b → b`.
    pub counit: Vec<MorId>,
    /// `(a, b, [(h, φ(h))])` with `φ: Hom_B(Fa, b) → Hom_A(a, Gb)`.
    pub hom_bijections: Vec<(ObId, ObId, Vec<(MorId, MorId)>)>,
    /// Number of naturality squares checked.
    pub naturality_checks: usize,
}

/// Checks that `φ(h) = G(h) ∘ η_a` is a bijection natural in both variables.
/// `None` when it is not.
pub fn certify_adjunction(left: &Functor, right: &Functor, unit: &[MorId]) -> Result<Option<AdjunctionCertificate>> {
    let (a, bb) = (left.domain(), left.codomain());
    if right.domain() != bb || right.codomain() != a || unit.len() != a.num_objects() {
        return Err(Error::Precondition("functors are not composable both ways".into()));
    }
    for x in a.objects() {
        let e = unit[x];
        if e >= a.num_morphisms() || a.src(e) != x || a.tgt(e) != right.ob(left.ob(x)) {
            return Ok(None);
        }
    }
    let phi = |x: ObId, h: MorId| a.compose(right.mor(h), unit[x]);
    let mut table: HashMap<(ObId, MorId), MorId> = HashMap::new();
    let mut hom_bijections = Vec::new();
    let mut counit = vec![usize::MAX; bb.num_objects()];
    for x in a.objects() {
        for y in bb.objects() {
            let pairs: Vec<(MorId, MorId)> = bb.hom(left.ob(x), y).iter().map(|&h| (h, phi(x, h))).collect();
            let mut image: Vec<MorId> = pairs.iter().map(|p| p.1).collect();
            image.sort_unstable();
            image.dedup();
            if image.len() != pairs.len() || image.len() != a.hom(x, right.ob(y)).len() {
                return Ok(None);
            }
            for &(h, u) in &pairs {
                table.insert((x, h), u);
                if x == right.ob(y) && u == a.ident(x) {
                    counit[y] = h;
                }
            }
            hom_bijections.push((x, y, pairs));
        }
    }
    let mut checks = 0;
    // φ(k ∘ h ∘ F(g)) = G(k) ∘ φ(h) ∘ g
    for g in a.morphisms() {
        let (x2, x) = (a.src(g), a.tgt(g));
        for y in bb.objects() {
            for &h in bb.hom(left.ob(x), y) {
                for &k in bb.out_of(y) {
                    let lhs = table[&(x2, bb.compose(k, bb.compose(h, left.mor(g))))];
                    let rhs = a.compose(right.mor(k), a.compose(table[&(x, h)], g));
                    checks += 1;
                    if lhs != rhs {
                        return Ok(None);
                    }
                }
            }
        }
    }
    if counit.contains(&usize::MAX) {
        return Err(Error::InvariantViolation("counit missing from a bijective hom table".into()));
    }
    Ok(Some(AdjunctionCertificate {
        left: left.clone(),
        right: right.clone(),
        unit: unit.to_vec(),
        counit,
        hom_bijections,
        naturality_checks: checks,
    }))
}

/// Result of searching an adjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdjointSearch {
    Found(AdjunctionCertificate),
    /// An object whose comma category has no universal object.
    Missing(ObId),
}

impl AdjointSearch {
    pub fn is_found(&self) -> bool {
        matches!(self, AdjointSearch::Found(_))
    }

    pub fn certificate(&self) -> Option<&AdjunctionCertificate> {
        match self {
            AdjointSearch::Found(c) => Some(c),
            AdjointSearch::Missing(_) => None,
        }
    }
}

/// Decides whether `f: C → D` is a left adjoint: every `(f ↓ d)` needs a
/// final object `(Gd, ε_d)`. `G` on morphisms and the unit follow from
/// finality; the result is certified exhaustively.
pub fn left_adjoint_via_comma(f: &Functor, limits: &Limits) -> Result<AdjointSearch> {
    left_adjoint_with(f, limits, |finals| finals[0])
}

pub(crate) fn left_adjoint_with(
    f: &Functor,
    limits: &Limits,
    pick: impl Fn(&[ObId]) -> ObId,
) -> Result<AdjointSearch> {
    let (c, d) = (f.domain(), f.codomain());
    let mut commas = Vec::new();
    let mut chosen = Vec::new();
    for y in d.objects() {
        let comma = comma_category(f, y, limits)?;
        let finals = final_objects(&comma.category)?;
        if finals.is_empty() {
            return Ok(AdjointSearch::Missing(y));
        }
        chosen.push(comma.objects[pick(&finals)]);
        commas.push(comma);
    }
    let ob_map: Vec<ObId> = chosen.iter().map(|&(x, _)| x).collect();
    // the unique u: G y → G y' with ε_{y'} ∘ F(u) = k ∘ ε_y
    let factor = |y: ObId, x: ObId, h: MorId| -> Result<MorId> {
        let (gy, eps) = chosen[y];
        let found: Vec<MorId> = c.hom(x, gy).iter().copied().filter(|&u| d.compose(eps, f.mor(u)) == h).collect();
        match found[..] {
            [u] => Ok(u),
            _ => Err(Error::InvariantViolation(format!(
                "final object of the comma over `{}` is not universal",
                d.object_name(y)
            ))),
        }
    };
    let mor_map = d
        .morphisms()
        .map(|k| factor(d.tgt(k), ob_map[d.src(k)], d.compose(k, chosen[d.src(k)].1)))
        .collect::<Result<Vec<_>>>()?;
    let right = Functor::new(d.clone(), c.clone(), ob_map, mor_map)?;
    let unit = c
        .objects()
        .map(|x| factor(f.ob(x), x, d.ident(f.ob(x))))
        .collect::<Result<Vec<_>>>()?;
    match certify_adjunction(f, &right, &unit)? {
        Some(cert) => Ok(AdjointSearch::Found(cert)),
        None => Err(Error::InvariantViolation("comma-category adjoint fails its certificate".into())),
    }
}

/// Decides whether `g: D → C` is a right adjoint, by running the comma
/// search on opposite categories. The certificate has `left` the found
/// adjoint and `right = g`.
pub fn right_adjoint_via_comma(g: &Functor, limits: &Limits) -> Result<AdjointSearch> {
    let (dop, cop) = (opposite(g.domain()), opposite(g.codomain()));
    let gop = g.opposite(&dop, &cop);
    let cert = match left_adjoint_via_comma(&gop, limits)? {
        AdjointSearch::Missing(y) => return Ok(AdjointSearch::Missing(y)),
        AdjointSearch::Found(cert) => cert,
    };
    let left = cert.right.opposite(g.codomain(), g.domain());
    let left = Functor::new(left.domain().clone(), left.codomain().clone(), left.ob_map().to_vec(), left.mor_map().to_vec())?;
    // the opposite counit is the unit of left ⊣ g
    match certify_adjunction(&left, g, &cert.counit)? {
        Some(c) => Ok(AdjointSearch::Found(c)),
        None => Err(Error::InvariantViolation("dual adjoint fails its certificate".into())),
    }
}

/// The collage of `f: C → D` over `[1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collage {
    pub category: FinCategory,
    pub projection: Functor,
}

/// Objects `(0,c)` and `(1,d)`; besides the morphisms of `C` and `D`, each
/// `h: Fc → d` gives a morphism `(0,c) → (1,d)` named `c|h`. Nothing runs
/// from `D` back to `C`. The projection is asserted to be a coCartesian
/// fibration.
pub fn collage(f: &Functor, limits: &Limits) -> Result<Collage> {
    let (c, d) = (f.domain(), f.codomain());
    let hetero: Vec<(ObId, MorId)> = c
        .objects()
        .flat_map(|x| d.objects().flat_map(move |y| d.hom(f.ob(x), y).iter().map(move |&h| (x, h))))
        .collect();
    limits.guard((c.num_morphisms() + d.num_morphisms() + hetero.len()) as u128)?;
    let nc = c.num_objects();
    let mut b = CategoryBuilder::new();
    for x in c.objects() {
        b.add_object(format!("(0,{})", c.object_name(x)));
    }
    for y in d.objects() {
        b.add_object(format!("(1,{})", d.object_name(y)));
    }
    for g in c.morphisms() {
        b.add_morphism(format!("(0,{})", c.morphism_name(g)), c.src(g), c.tgt(g));
    }
    let dm = c.num_morphisms();
    for g in d.morphisms() {
        b.add_morphism(format!("(1,{})", d.morphism_name(g)), nc + d.src(g), nc + d.tgt(g));
    }
    let hm = dm + d.num_morphisms();
    let hetero_id: HashMap<(ObId, MorId), MorId> = hetero
        .iter()
        .map(|&(x, h)| {
            let m = b.add_morphism(format!("{}|{}", c.object_name(x), d.morphism_name(h)), x, nc + d.tgt(h));
            ((x, h), m)
        })
        .collect();
    for x in c.objects() {
        b.set_identity(x, c.ident(x));
    }
    for y in d.objects() {
        b.set_identity(nc + y, dm + d.ident(y));
    }
    for (g, u, gu) in c.composition_triples() {
        b.set_comp(g, u, gu);
    }
    for (g, u, gu) in d.composition_triples() {
        b.set_comp(dm + g, dm + u, dm + gu);
    }
    for &(x, h) in &hetero {
        let m = hetero_id[&(x, h)];
        // h ∘ u for u: x' → x in C
        for u in c.morphisms().filter(|&u| c.tgt(u) == x) {
            b.set_comp(m, u, hetero_id[&(c.src(u), d.compose(h, f.mor(u)))]);
        }
        // k ∘ h for k out of the target in D
        for &k in d.out_of(d.tgt(h)) {
            b.set_comp(dm + k, m, hetero_id[&(x, d.compose(k, h))]);
        }
    }
    let category = b.build()?;
    let base = poset_category(1);
    let (id0, id1, arrow) = (base.ident(0), base.ident(1), base.hom(0, 1)[0]);
    let ob_map = (0..nc + d.num_objects()).map(|o| usize::from(o >= nc)).collect();
    let mor_map = (0..hm + hetero.len())
        .map(|m| if m < dm { id0 } else if m < hm { id1 } else { arrow })
        .collect();
    let projection = Functor::new(category.clone(), base, ob_map, mor_map)?;
    if !is_cocartesian_fibration(&projection)?.is_fibration() {
        return Err(Error::InvariantViolation("collage projection is not coCartesian".into()));
    }
    Ok(Collage { category, projection })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    /// The collage projection is a Cartesian fibration.
    pub cartesian: bool,
    /// Every comma category has a final object.
    pub comma: bool,
    pub agree: bool,
    /// An object of the codomain without a universal arrow, if any.
    pub missing: Option<String>,
}

/// Compares the two characterizations of `f` being a left adjoint.
pub fn adjunction_consistency(f: &Functor, limits: &Limits) -> Result<ConsistencyReport> {
    let col = collage(f, limits)?;
    let cartesian = is_cartesian_fibration(&col.projection)?.is_fibration();
    let search = left_adjoint_via_comma(f, limits)?;
    let missing = match search {
        AdjointSearch::Missing(y) => Some(f.codomain().object_name(y).to_string()),
        AdjointSearch::Found(_) => None,
    };
    let comma = missing.is_none();
    Ok(ConsistencyReport {
        cartesian,
        comma,
        agree: cartesian == comma,
        missing,
    })
}

/// One side of the diagonal check: an adjoint of `Δ` against (co)limits of
/// every diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaRoute {
    pub adjoint: bool,
    pub every_diagram: bool,
    /// A diagram without a (co)limit.
    pub witness: Option<String>,
}

impl DeltaRoute {
    pub fn agree(&self) -> bool {
        self.adjoint == self.every_diagram
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaReport {
    pub diagrams: usize,
    pub colimits: DeltaRoute,
    pub limits: DeltaRoute,
}

impl DeltaReport {
    pub fn agree(&self) -> bool {
        self.colimits.agree() && self.limits.agree()
    }
}

/// `Δ: W → Fun(I, W)`, as a functor into the enumerated functor category.
pub fn diagonal(w: &FinCategory, i: &FinCategory, limits: &Limits) -> Result<Functor> {
    let fc = functor_category(i, w, limits)?;
    let ob_map = w
        .objects()
        .map(|x| {
            fc.object_of(&Functor::constant(i, w, x))
                .ok_or_else(|| Error::InvariantViolation("constant functor missing".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mor_map = w
        .morphisms()
        .map(|u| {
            fc.morphism_with(ob_map[w.src(u)], ob_map[w.tgt(u)], &vec![u; i.num_objects()])
                .ok_or_else(|| Error::InvariantViolation("constant transformation missing".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Functor::new(w.clone(), fc.category, ob_map, mor_map)
}

/// `Δ` has a left adjoint iff every `I`-diagram in `W` has a colimit, and a
/// right adjoint iff every diagram has a limit. Both sides of each
/// equivalence are computed independently.
pub fn delta_adjoint_check(w: &FinCategory, i: &FinCategory, limits: &Limits) -> Result<DeltaReport> {
    let delta = diagonal(w, i, limits)?;
    let fc = functor_category(i, w, limits)?;
    let left = right_adjoint_via_comma(&delta, limits)?.is_found();
    let right = left_adjoint_via_comma(&delta, limits)?.is_found();
    let mut no_colimit = None;
    let mut no_limit = None;
    for f in &fc.functors {
        if no_colimit.is_none() && colimit(f, limits)?.is_none() {
            no_colimit = Some(f.canonical_name());
        }
        if no_limit.is_none() && limit(f, limits)?.is_none() {
            no_limit = Some(f.canonical_name());
        }
    }
    Ok(DeltaReport {
        diagrams: fc.functors.len(),
        colimits: DeltaRoute {
            adjoint: left,
            every_diagram: no_colimit.is_none(),
            witness: no_colimit,
        },
        limits: DeltaRoute {
            adjoint: right,
            every_diagram: no_limit.is_none(),
            witness: no_limit,
        },
    })
}
