//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sscat_core::colim_adj::{
    certify_adjunction, collage, colimit, colimit_oracle, left_adjoint_via_comma, AdjointSearch, Cocone,
};
use sscat_core::fibrations::{grothendieck, is_cartesian_fibration, is_cofibered_in_sets, is_left_fibration, under_category};
use sscat_core::fincat::{
    enumerate_functors, find_isomorphism, iso_category, poset_category, validate_category, FinCategory, Functor,
    FunctorSearch, SetFunctor,
};
use sscat_core::fixtures::{self, CATEGORIES};
use sscat_core::generators::{random_category, random_functor, random_poset, random_set_functor, CategoryShape};
use sscat_core::simpset::{
    category_from_segal, delta, delta_map, horn_inclusion, nerve, nerve_map, pi0, pullback, segal_check,
    simplicial_maps, solve_lift, spine, spine_inclusion, LiftProblem, SimpMap,
};
use sscat_core::sspace::{
    classifying_diagram, completeness_check, e1, embed_vertical, f_n, homotopy_category, segal_space_check,
    spine_space, SegalView, TruncBiSimpSet,
};
use sscat_core::Limits;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rng(criterion: u64, k: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(criterion * 1_000_003 + k)
}

fn fixture_categories() -> Vec<(String, FinCategory)> {
    CATEGORIES
        .iter()
        .map(|n| (n.to_string(), fixtures::category(n).expect("shipped category")))
        .collect()
}

fn random_categories(criterion: u64, count: u64, shape: CategoryShape) -> Vec<FinCategory> {
    (0..count).map(|k| random_category(&mut rng(criterion, k), shape)).collect()
}

fn c1_segal_failure_of_the_spine() -> Outcome {
    let r = segal_check(&spine(2, 3)).map_err(|e| e.to_string())?;
    let l2 = &r.levels[0];
    ensure(l2.level == 2 && l2.simplices == 7 && l2.fiber_product == 8, || format!("{l2:?}"))?;
    ensure(!r.passes(), || "spine passed".into())?;
    let g2 = spine_space(2, 3, 1).domain().clone();
    let v = segal_space_check(&g2).map_err(|e| e.to_string())?;
    let l = v.level(2).expect("level 2");
    ensure(l.simplices == 7 && l.fiber_product == 8 && !v.passes(), || format!("{l:?}"))?;
    Ok("G(2) level 2: 7 vs 8, verdict fail (simplicial set and space)".into())
}

/// Nondecreasing sequences of length `m + 1` in `0..=n`, by brute force.
fn monotone_oracle(m: usize, n: usize) -> usize {
    let total = (n + 1).pow(m as u32 + 1);
    (0..total)
        .filter(|&code| {
            let mut c = code;
            let mut digits = Vec::new();
            for _ in 0..=m {
                digits.push(c % (n + 1));
                c /= n + 1;
            }
            digits.windows(2).all(|w| w[0] <= w[1])
        })
        .count()
}

fn c2_nerve_matches_representable() -> Outcome {
    for n in 0..=4 {
        let x = nerve(&poset_category(n), 4);
        for m in 0..=4 {
            let (got, want) = (x.level_size(m), monotone_oracle(m, n));
            ensure(got == want, || format!("|N([{n}])_{m}| = {got}, oracle {want}"))?;
        }
    }
    Ok("25 (n, m) pairs".into())
}

fn c3_nerve_fully_faithful() -> Outcome {
    let limits = Limits::new(50_000_000);
    let cats = random_categories(3, 120, CategoryShape::default());
    let mut total = 0;
    for k in 0..60 {
        let (c, d) = (&cats[2 * k], &cats[2 * k + 1]);
        let maps = simplicial_maps(&nerve(c, 2), &nerve(d, 2), &limits).map_err(|e| e.to_string())?;
        let functors = enumerate_functors(c, d, &limits).map_err(|e| e.to_string())?;
        ensure(maps.len() == functors.len(), || {
            format!("pair {k}: {} simplicial maps, {} functors", maps.len(), functors.len())
        })?;
        total += functors.len();
    }
    Ok(format!("60 pairs, {total} functors in total"))
}

fn c4_round_trip() -> Outcome {
    let limits = Limits::default();
    let mut cats: Vec<FinCategory> = fixture_categories().into_iter().map(|(_, c)| c).collect();
    cats.extend(random_categories(4, 60, CategoryShape::default()));
    for (k, c) in cats.iter().enumerate() {
        let back = category_from_segal(&nerve(c, 3)).map_err(|e| e.to_string())?;
        let iso = find_isomorphism(&back, c, &limits).map_err(|e| e.to_string())?;
        ensure(iso.is_some(), || format!("category {k} not recovered"))?;
    }
    Ok(format!("{} categories ({} fixtures)", cats.len(), CATEGORIES.len()))
}

fn c5_completeness_split() -> Outcome {
    let limits = Limits::default();
    let r = completeness_check(&e1(2, 2)).map_err(|e| e.to_string())?;
    ensure(!r.complete && r.objects == 2 && r.hoequivs == 4, || format!("E(1): {r:?}"))?;
    for (name, c) in fixture_categories() {
        let cd = classifying_diagram(&c, 2, 2, &limits).map_err(|e| format!("{name}: {e}"))?;
        let r = completeness_check(&cd).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.complete, || format!("classifying diagram of {name} not complete: {r:?}"))?;
    }
    Ok(format!("E(1) fails with (2, 4); {} classifying diagrams complete", CATEGORIES.len()))
}

/// Segal fixtures with horizontal truncation 3.
fn segal_fixtures() -> Result<Vec<(String, TruncBiSimpSet)>, String> {
    let limits = Limits::default();
    let mut out = Vec::new();
    for (name, c) in fixture_categories() {
        out.push((format!("nerve-{name}"), embed_vertical(&nerve(&c, 3), 1)));
    }
    for name in ["point", "poset1", "I1", "Z2", "parallel", "isoarrow"] {
        let c = fixtures::category(name).map_err(|e| e.to_string())?;
        let cd = classifying_diagram(&c, 3, 1, &limits).map_err(|e| format!("{name}: {e}"))?;
        out.push((format!("classifying-{name}"), cd));
    }
    out.push(("E1".into(), e1(3, 1)));
    for n in 0..=2 {
        out.push((format!("F{n}"), f_n(n, 3, 1)));
    }
    Ok(out)
}

fn c6_hoequiv_agreement() -> Outcome {
    let mut edges = 0;
    for (name, t) in segal_fixtures()? {
        let view = SegalView::new(&t).map_err(|e| format!("{name}: {e}"))?;
        for f in t.simplices(1, 0) {
            let h = view.is_hoequiv(f).map_err(|e| format!("{name}: {e}"))?;
            ensure(h.by_tetra_lift.is_some() && h.agree(), || {
                format!("{name}: `{}` {h:?}", t.name(1, 0, f))
            })?;
            edges += 1;
        }
    }
    Ok(format!("{edges} edges, 100% agreement"))
}

fn c7_witness_independence() -> Outcome {
    let mut pairs = 0;
    for (name, t) in segal_fixtures()? {
        let view = SegalView::new(&t).map_err(|e| format!("{name}: {e}"))?;
        let classes = pi0(t.row(1)).map_err(|e| e.to_string())?;
        for f in t.simplices(1, 0) {
            for g in view.arrows(view.tgt(f), 0).into_iter().chain(
                (0..t.size(0, 0)).flat_map(|y| view.arrows(view.tgt(f), y)),
            ) {
                let ws = view.witnesses(f, g);
                ensure(!ws.is_empty(), || format!("{name}: no witness"))?;
                let first = t.hface(2, 0, 1, ws[0]);
                for &w in ws {
                    let d1 = t.hface(2, 0, 1, w);
                    ensure(classes.same(first, d1), || {
                        format!("{name}: witnesses give composites in different components")
                    })?;
                }
                pairs += 1;
            }
        }
        let ho = homotopy_category(&t).map_err(|e| format!("{name}: {e}"))?;
        let report = validate_category(&ho);
        ensure(report.is_valid(), || format!("{name}: {}", report.summary()))?;
    }
    Ok(format!("{pairs} composable pairs; every homotopy category validates"))
}

fn c8_grothendieck_laws() -> Outcome {
    let limits = Limits::default();
    let shape = CategoryShape {
        max_objects: 3,
        max_morphisms: 8,
        ..CategoryShape::default()
    };
    for k in 0..120 {
        let f = random_set_functor(&mut rng(8, k), shape);
        let (_, p) = grothendieck(&f);
        let r = is_cofibered_in_sets(&p);
        ensure(r.verdict, || format!("set functor {k}: {:?}", r.failures))?;
    }
    let mut checked = 0;
    for (name, c) in fixture_categories() {
        for x in c.objects() {
            let (elements, _) = grothendieck(&SetFunctor::representable(&c, x));
            let (under, _) = under_category(&c, x).map_err(|e| e.to_string())?;
            let iso = find_isomorphism(&elements, &under, &limits).map_err(|e| e.to_string())?;
            ensure(iso.is_some(), || format!("{name}, object {}", c.object_name(x)))?;
            checked += 1;
        }
    }
    Ok(format!("120 projections cofibered; ∫Y_x ≅ C_x/ at {checked} fixture objects"))
}

fn random_functors(criterion: u64, count: u64, shape: CategoryShape) -> Vec<Functor> {
    let limits = Limits::default();
    let mut out = Vec::new();
    let mut k = 0;
    while out.len() < count as usize {
        let mut r = rng(criterion, k);
        let d = random_category(&mut r, shape);
        let c = random_category(&mut r, shape);
        if let Some(p) = random_functor(&mut r, &d, &c, &limits) {
            out.push(p);
        }
        k += 1;
    }
    out
}

fn c9_fibration_bridge() -> Outcome {
    let shape = CategoryShape {
        max_objects: 3,
        max_morphisms: 8,
        ..CategoryShape::default()
    };
    let mut positive = 0;
    let functors = random_functors(9, 80, shape);
    // a batch that is cofibered by construction
    let mut projections: Vec<Functor> =
        (0..20).map(|k| grothendieck(&random_set_functor(&mut rng(90, k), shape)).1).collect();
    projections.extend(functors);
    for (k, p) in projections.iter().enumerate() {
        let left = is_left_fibration(&nerve_map(p, 2)).map_err(|e| e.to_string())?;
        let cofibered = is_cofibered_in_sets(p).verdict;
        ensure(left == cofibered, || format!("functor {k}: left fibration {left}, cofibered {cofibered}"))?;
        positive += left as usize;
    }
    Ok(format!("{} functors, {positive} positive, 100% agreement", projections.len()))
}

fn c10_adjunction_agreement() -> Outcome {
    let limits = Limits::default();
    let mut maps = vec![fixtures::galois()];
    let mut k = 0;
    while maps.len() < 61 {
        let mut r = rng(10, k);
        let (n, m) = (r.gen_range(1..=5), r.gen_range(1..=5));
        let a = random_poset(&mut r, n, 0.4);
        let b = random_poset(&mut r, m, 0.4);
        if let Some(f) = random_functor(&mut r, &a, &b, &limits) {
            maps.push(f);
        }
        k += 1;
    }
    let mut adjoints = 0;
    for (k, f) in maps.iter().enumerate() {
        let col = collage(f, &limits).map_err(|e| e.to_string())?;
        let cartesian = is_cartesian_fibration(&col.projection).map_err(|e| e.to_string())?.is_fibration();
        let search = left_adjoint_via_comma(f, &limits).map_err(|e| e.to_string())?;
        ensure(cartesian == search.is_found(), || {
            format!("map {k}: cartesian {cartesian}, comma {}", search.is_found())
        })?;
        if let AdjointSearch::Found(cert) = search {
            let again = certify_adjunction(&cert.left, &cert.right, &cert.unit).map_err(|e| e.to_string())?;
            ensure(again.as_ref() == Some(&cert) && cert.naturality_checks > 0, || {
                format!("map {k}: certificate does not re-verify")
            })?;
            adjoints += 1;
        }
    }
    ensure(maps[0].codomain().num_objects() == 2 && adjoints > 0, || "galois fixture missing".into())?;
    Ok(format!("{} monotone maps (incl. Galois connection), {adjoints} left adjoints", maps.len()))
}

/// Every cocone over `f`, by exhaustive search over all leg tuples.
fn all_cocones(f: &Functor) -> Vec<Cocone> {
    let (i, c) = (f.domain(), f.codomain());
    let mut out = Vec::new();
    for v in c.objects() {
        let choices: Vec<&[usize]> = i.objects().map(|x| c.hom(f.ob(x), v)).collect();
        let total: usize = choices.iter().map(|h| h.len()).product();
        for mut code in 0..total {
            let legs: Vec<usize> = choices
                .iter()
                .map(|h| {
                    let l = h[code % h.len()];
                    code /= h.len();
                    l
                })
                .collect();
            if let Ok(k) = Cocone::new(f.clone(), v, legs) {
                out.push(k);
            }
        }
    }
    out
}

fn c11_colimit_oracle() -> Outcome {
    let limits = Limits::default();
    let b2 = fixtures::b2();
    let span = fixtures::span();
    let pushout = FunctorSearch::new(&span, &b2)
        .objects_where(|x, y| [0, 1, 2][x] == y)
        .first(&limits)
        .map_err(|e| e.to_string())?
        .ok_or("no span diagram in B2")?;
    let k = colimit(&pushout, &limits).map_err(|e| e.to_string())?.ok_or("B2 pushout missing")?;
    ensure(b2.object_name(k.vertex) == "{a,b}", || format!("pushout vertex {}", k.name()))?;

    let shape = CategoryShape {
        max_objects: 3,
        max_morphisms: 6,
        ..CategoryShape::default()
    };
    let mut diagrams = vec![pushout];
    diagrams.extend(random_functors(11, 80, shape));
    let (mut found, mut none) = (0, 0);
    for (k, f) in diagrams.iter().enumerate() {
        match colimit(f, &limits).map_err(|e| e.to_string())? {
            Some(q) => {
                ensure(colimit_oracle(f, &q, &limits).map_err(|e| e.to_string())?, || format!("diagram {k}"))?;
                found += 1;
            }
            None => {
                for q in all_cocones(f) {
                    let universal = colimit_oracle(f, &q, &limits).map_err(|e| e.to_string())?;
                    ensure(!universal, || format!("diagram {k}: missed colimit {}", q.name()))?;
                }
                none += 1;
            }
        }
    }
    Ok(format!("{} diagrams: {found} colimits verified, {none} confirmed absent", diagrams.len()))
}

fn c12_strict_pullback() -> Outcome {
    let trunc = 3;
    let long_edge = delta_map(1, 2, &[0, 2], trunc).map_err(|e| e.to_string())?;
    let cone = pullback(&long_edge, &spine_inclusion(2, trunc)).map_err(|e| e.to_string())?;
    let p = &cone.object;
    ensure(p.level_size(0) == 2, || format!("{} vertices", p.level_size(0)))?;
    for n in 1..=trunc {
        ensure(p.nondegenerate(n).is_empty(), || format!("nondegenerate {n}-simplices present"))?;
    }
    let components = pi0(p).map_err(|e| e.to_string())?.count();
    ensure(components == 2, || format!("{components} components"))?;
    Ok("Δ[1] ×_Δ[2] G(2) is two isolated points".into())
}

fn c13_kan_witness() -> Outcome {
    let limits = Limits::default();
    let trunc = 3;
    let i = horn_inclusion(2, 0, trunc).map_err(|e| e.to_string())?;
    let target = delta(2, trunc);
    let point = delta(0, trunc);
    let vertices = |m: &SimpMap| -> Vec<usize> {
        m.domain().simplices(0).map(|v| m.codomain().name(0, m.at(0, v)).parse().unwrap()).collect()
    };
    let top = simplicial_maps(i.domain(), &target, &limits)
        .map_err(|e| e.to_string())?
        .into_iter()
        .find(|m| vertices(m) == [0, 2, 1])
        .ok_or("no horn map 0↦0, 1↦2, 2↦1")?;
    let p = SimpMap::to_terminal(&target, &point).map_err(|e| e.to_string())?;
    let bottom = SimpMap::to_terminal(&delta(2, trunc), &point).map_err(|e| e.to_string())?;
    let lp = LiftProblem::new(i, p, top, bottom).map_err(|e| e.to_string())?;
    ensure(solve_lift(&lp, &limits).map_err(|e| e.to_string())?.is_empty(), || "Δ[2] lifted the square".into())?;

    let y = nerve(&iso_category(1), trunc);
    let q = SimpMap::to_terminal(&y, &point).map_err(|e| e.to_string())?;
    let mut squares = 0;
    for n in 1..=trunc {
        for k in 0..=n {
            let i = horn_inclusion(n, k, trunc).map_err(|e| e.to_string())?;
            let bottom = SimpMap::to_terminal(i.codomain(), &point).map_err(|e| e.to_string())?;
            for top in simplicial_maps(i.domain(), &y, &limits).map_err(|e| e.to_string())? {
                let lp = LiftProblem::new(i.clone(), q.clone(), top, bottom.clone()).map_err(|e| e.to_string())?;
                let lifts = solve_lift(&lp, &limits).map_err(|e| e.to_string())?;
                ensure(!lifts.is_empty(), || format!("horn({n},{k}) into N(I(1)) without a lift"))?;
                squares += 1;
            }
        }
    }
    Ok(format!("Λ[2]_0 square has no lift; {squares} horns into N(I(1)) all lift"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("segal failure of the spine", c1_segal_failure_of_the_spine),
        ("nerve/representable agreement", c2_nerve_matches_representable),
        ("nerve full faithfulness", c3_nerve_fully_faithful),
        ("segal round trip", c4_round_trip),
        ("completeness split", c5_completeness_split),
        ("homotopy-equivalence agreement", c6_hoequiv_agreement),
        ("witness independence", c7_witness_independence),
        ("grothendieck laws", c8_grothendieck_laws),
        ("fibration bridge", c9_fibration_bridge),
        ("adjunction agreement", c10_adjunction_agreement),
        ("colimit oracle", c11_colimit_oracle),
        ("strict pullback counterexample", c12_strict_pullback),
        ("kan negative witness", c13_kan_witness),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", k + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.1}s)", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
