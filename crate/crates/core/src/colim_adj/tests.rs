use super::*;
use crate::fibrations::under_category;
use crate::fincat::{
    discrete_category, enumerate_nat_trans, find_isomorphism, iso_category, poset_category, preorder_category,
    CategoryBuilder, FinCategory, Functor, MorId, ObId,
};
use crate::Limits;

fn parallel() -> FinCategory {
    let mut b = CategoryBuilder::new();
    let x = b.add_object_with_identity("x", "id_x");
    let y = b.add_object_with_identity("y", "id_y");
    b.add_morphism("u", x, y);
    b.add_morphism("v", x, y);
    b.fill_unit_laws();
    b.build().unwrap()
}

/// Subsets of `{a, b}` under inclusion.
fn b2() -> FinCategory {
    let names: Vec<String> = ["{}", "{a}", "{b}", "{a,b}"].iter().map(|s| s.to_string()).collect();
    preorder_category(&names, |i, j| i & j == i)
}

fn names(k: usize) -> Vec<String> {
    (0..k).map(|i| format!("i{i}")).collect()
}

/// The first diagram `i → c` with the given objects.
fn diagram(i: &FinCategory, c: &FinCategory, obs: &[&str]) -> Functor {
    let targets: Vec<ObId> = obs.iter().map(|o| c.object(o).unwrap()).collect();
    crate::fincat::FunctorSearch::new(i, c)
        .objects_where(move |x, y| targets[x] == y)
        .first(&Limits::default())
        .unwrap()
        .expect("diagram exists")
}

/// All cocones by plain product enumeration, and universality by definition.
fn naive_colimit_vertices(f: &Functor) -> Vec<(ObId, Vec<MorId>)> {
    let (i, c) = (f.domain(), f.codomain());
    let mut all: Vec<(ObId, Vec<MorId>)> = Vec::new();
    for v in c.objects() {
        let mut tuples: Vec<Vec<MorId>> = vec![Vec::new()];
        for x in i.objects() {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    c.hom(f.ob(x), v).iter().map(move |&l| {
                        let mut t = t.clone();
                        t.push(l);
                        t
                    })
                })
                .collect();
        }
        for t in tuples {
            if i.morphisms().all(|u| c.compose(t[i.tgt(u)], f.mor(u)) == t[i.src(u)]) {
                all.push((v, t));
            }
        }
    }
    all.iter()
        .filter(|(v, legs)| {
            all.iter().all(|(y, other)| {
                c.hom(*v, *y)
                    .iter()
                    .filter(|&&u| legs.iter().zip(other).all(|(&l, &o)| c.compose(u, l) == o))
                    .count()
                    == 1
            })
        })
        .cloned()
        .collect()
}

#[test]
fn initial_and_final() {
    for n in 0..4 {
        assert_eq!(initial_objects(&poset_category(n)).unwrap(), vec![0]);
        assert_eq!(final_objects(&poset_category(n)).unwrap(), vec![n]);
    }
    assert_eq!(initial_objects(&iso_category(1)).unwrap(), vec![0, 1]);
    assert!(initial_objects(&parallel()).unwrap().is_empty());
    assert!(final_objects(&parallel()).unwrap().is_empty());
    assert_eq!(initial_objects(&b2()).unwrap(), vec![0]);
    assert_eq!(final_objects(&b2()).unwrap(), vec![3]);
}

#[test]
fn cocone_categories() {
    let limits = Limits::default();
    let empty = discrete_category(&[]);
    for c in [b2(), parallel(), iso_category(1)] {
        let e = Functor::new(empty.clone(), c.clone(), vec![], vec![]).unwrap();
        let cc = cocone_category(&e, &limits).unwrap();
        assert!(find_isomorphism(&cc.category, &c, &limits).unwrap().is_some());
        for x in c.objects() {
            let k = Functor::constant(&poset_category(0), &c, x);
            let cc = cocone_category(&k, &limits).unwrap();
            let (u, _) = under_category(&c, x).unwrap();
            assert!(find_isomorphism(&cc.category, &u, &limits).unwrap().is_some());
        }
    }
    let two = discrete_category(&names(2));
    let f = diagram(&two, &b2(), &["{a}", "{b}"]);
    let cc = cocone_category(&f, &limits).unwrap();
    assert_eq!(cc.cocones.len(), 1);
    assert_eq!(cc.cocones[0].name(), "{a,b}<{a}-{a,b},{b}-{a,b}>");
    let f = diagram(&two, &b2(), &["{}", "{}"]);
    assert_eq!(cocone_category(&f, &limits).unwrap().cocones.len(), 4);
}

#[test]
fn colimit_examples() {
    let limits = Limits::default();
    let c = b2();
    let span = preorder_category(&names(3), |i, j| i == 0 || i == j);
    let f = diagram(&span, &c, &["{}", "{a}", "{b}"]);
    let q = colimit(&f, &limits).unwrap().unwrap();
    assert_eq!(c.object_name(q.vertex), "{a,b}");

    let p = preorder_category(&names(4), |i, j| i == j || j == 3 || (i == 0 && j == 2) || (i == 1 && j == 2));
    let two = discrete_category(&names(2));
    let f = diagram(&two, &p, &["i0", "i1"]);
    let q = colimit(&f, &limits).unwrap().unwrap();
    assert_eq!(p.object_name(q.vertex), "i2");
    // i3 is an upper bound but not the least one
    let top = Cocone::new(f.clone(), 3, vec![p.hom(0, 3)[0], p.hom(1, 3)[0]]).unwrap();
    assert!(!colimit_oracle(&f, &top, &limits).unwrap());

    for n in 0..3 {
        let c = poset_category(n);
        let e = Functor::new(discrete_category(&[]), c.clone(), vec![], vec![]).unwrap();
        assert_eq!(colimit(&e, &limits).unwrap().unwrap().vertex, 0);
        let x = Functor::constant(&poset_category(0), &c, n);
        let q = Cocone::new(x.clone(), n, vec![c.ident(n)]).unwrap();
        assert!(colimit_oracle(&x, &q, &limits).unwrap());
    }

    // no cocone over the parallel pair itself
    let par = parallel();
    let id = Functor::identity(&par);
    assert!(cocone_category(&id, &limits).unwrap().cocones.is_empty());
    assert!(colimit(&id, &limits).unwrap().is_none());
    assert!(Cocone::new(id.clone(), 1, vec![par.morphism("u").unwrap(), par.ident(1)]).is_err());
}

#[test]
fn colimits_match_naive_search() {
    let limits = Limits::default();
    let shapes = [discrete_category(&names(2)), poset_category(1), preorder_category(&names(3), |i, j| i == 0 || i == j)];
    for c in [b2(), parallel(), iso_category(1), poset_category(2)] {
        for i in &shapes {
            for f in crate::fincat::enumerate_functors(i, &c, &limits).unwrap() {
                let naive = naive_colimit_vertices(&f);
                match colimit(&f, &limits).unwrap() {
                    Some(q) => assert!(naive.contains(&(q.vertex, q.legs.clone()))),
                    None => assert!(naive.is_empty()),
                }
                for v in c.objects() {
                    for legs in universal::leg_families(&f, v, &limits).unwrap() {
                        let q = Cocone::new(f.clone(), v, legs.clone()).unwrap();
                        assert_eq!(colimit_oracle(&f, &q, &limits).unwrap(), naive.contains(&(v, legs)));
                    }
                }
            }
        }
    }
}

fn galois() -> Functor {
    Functor::from_names(
        poset_category(2),
        poset_category(1),
        [("0", "0"), ("1", "1"), ("2", "1")],
        [("0-1", "0-1"), ("0-2", "0-1"), ("1-2", "1-1")],
    )
    .unwrap()
}

#[test]
fn comma_adjoints() {
    let limits = Limits::default();
    let search = left_adjoint_via_comma(&galois(), &limits).unwrap();
    let cert = search.certificate().unwrap();
    assert_eq!(cert.right.ob_map(), &[0, 2]);
    assert!(cert.naturality_checks > 0);

    for c in [b2(), parallel(), iso_category(1)] {
        let id = Functor::identity(&c);
        let right = cert_right(&id);
        if c.is_groupoid() {
            // ties among final objects: equal only up to isomorphism
            let isos = enumerate_nat_trans(&right, &id, &|m| c.is_iso(m), &limits).unwrap();
            assert!(!isos.is_empty());
        } else {
            assert_eq!(right, id);
        }
    }

    let at0 = Functor::constant(&poset_category(0), &poset_category(1), 0);
    let cert = left_adjoint_via_comma(&at0, &limits).unwrap();
    assert_eq!(cert.certificate().unwrap().right.ob_map(), &[0, 0]);
    let at1 = Functor::constant(&poset_category(0), &poset_category(1), 1);
    assert_eq!(left_adjoint_via_comma(&at1, &limits).unwrap(), AdjointSearch::Missing(0));
    let comma = comma_category(&at1, 0, &limits).unwrap();
    assert_eq!(comma.category.num_objects(), 0);

    // dual route recovers the Galois connection from its upper adjoint
    let g = cert_right(&galois());
    let back = right_adjoint_via_comma(&g, &limits).unwrap();
    assert_eq!(back.certificate().unwrap().left, galois());
}

fn cert_right(f: &Functor) -> Functor {
    left_adjoint_via_comma(f, &Limits::default())
        .unwrap()
        .certificate()
        .unwrap()
        .right
        .clone()
}

#[test]
fn final_object_ties() {
    let limits = Limits::default();
    let f = Functor::constant(&iso_category(1), &poset_category(0), 0);
    let first = adjunction::left_adjoint_with(&f, &limits, |v| v[0]).unwrap();
    let last = adjunction::left_adjoint_with(&f, &limits, |v| *v.last().unwrap()).unwrap();
    let (a, b) = (first.certificate().unwrap(), last.certificate().unwrap());
    assert_ne!(a.right, b.right);
    let c = a.right.codomain().clone();
    let isos = enumerate_nat_trans(&a.right, &b.right, &|m| c.is_iso(m), &limits).unwrap();
    assert_eq!(isos.len(), 1);
    assert_eq!(a.hom_bijections.len(), b.hom_bijections.len());
}

#[test]
fn collages() {
    let limits = Limits::default();
    let id0 = Functor::identity(&poset_category(0));
    let col = collage(&id0, &limits).unwrap();
    assert!(find_isomorphism(&col.category, &poset_category(1), &limits).unwrap().is_some());

    let at1 = Functor::constant(&poset_category(0), &poset_category(1), 1);
    let col = collage(&at1, &limits).unwrap();
    assert!(!crate::fibrations::is_cartesian_fibration(&col.projection).unwrap().is_fibration());
    let r = adjunction_consistency(&at1, &limits).unwrap();
    assert_eq!((r.cartesian, r.comma, r.agree), (false, false, true));
    assert_eq!(r.missing.as_deref(), Some("0"));

    for f in [galois(), Functor::identity(&b2()), Functor::constant(&parallel(), &poset_category(0), 0)] {
        let r = adjunction_consistency(&f, &limits).unwrap();
        assert!(r.agree);
    }
    let r = adjunction_consistency(&galois(), &limits).unwrap();
    assert!(r.cartesian && r.comma);
    let r = adjunction_consistency(&Functor::constant(&parallel(), &poset_category(0), 0), &limits).unwrap();
    assert!(!r.cartesian && !r.comma);
}

#[test]
fn diagonal_adjoints() {
    let limits = Limits::default();
    let two = discrete_category(&names(2));
    let empty = discrete_category(&[]);
    let r = delta_adjoint_check(&b2(), &two, &limits).unwrap();
    assert!(r.agree() && r.colimits.adjoint && r.limits.adjoint);
    assert_eq!(r.diagrams, 16);
    let r = delta_adjoint_check(&poset_category(1), &two, &limits).unwrap();
    assert!(r.agree() && r.colimits.adjoint);
    for w in [poset_category(1), parallel(), iso_category(1), discrete_category(&names(2))] {
        let r = delta_adjoint_check(&w, &empty, &limits).unwrap();
        assert!(r.agree());
        assert_eq!(r.colimits.adjoint, !initial_objects(&w).unwrap().is_empty());
        assert_eq!(r.limits.adjoint, !final_objects(&w).unwrap().is_empty());
    }
    let r = delta_adjoint_check(&parallel(), &two, &limits).unwrap();
    assert!(r.agree() && !r.colimits.adjoint);
    assert!(r.colimits.witness.is_some());
}

mod props {
    use super::*;
    use crate::generators::{random_category, random_functor, CategoryShape};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn small() -> CategoryShape {
        CategoryShape {
            max_objects: 3,
            max_morphisms: 6,
            ..CategoryShape::default()
        }
    }

    fn arb_functor() -> impl proptest::strategy::Strategy<Value = Functor> {
        any::<u64>().prop_map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            loop {
                let c = random_category(&mut rng, small());
                let d = random_category(&mut rng, small());
                if let Some(f) = random_functor(&mut rng, &c, &d, &Limits::default()) {
                    return f;
                }
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn adjunction_routes_agree(f in arb_functor()) {
            let limits = Limits::default();
            let r = adjunction_consistency(&f, &limits).unwrap();
            prop_assert!(r.agree);
            if let Some(cert) = left_adjoint_via_comma(&f, &limits).unwrap().certificate() {
                // independent recheck of the certificate from its unit
                let again = certify_adjunction(&cert.left, &cert.right, &cert.unit).unwrap();
                prop_assert_eq!(again.as_ref(), Some(cert));
                let back = right_adjoint_via_comma(&cert.right, &limits).unwrap();
                prop_assert!(back.is_found());
            }
        }

        #[test]
        fn initial_objects_match_definition(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let c = random_category(&mut rng, small());
            let naive: Vec<ObId> = c.objects().filter(|&i| c.objects().all(|y| c.hom(i, y).len() == 1)).collect();
            prop_assert_eq!(initial_objects(&c).unwrap(), naive);
            let limits = Limits::default();
            let empty = discrete_category(&[]);
            let e = Functor::new(empty, c.clone(), vec![], vec![]).unwrap();
            prop_assert_eq!(colimit(&e, &limits).unwrap().map(|q| q.vertex), initial_objects(&c).unwrap().first().copied());
        }
    }
}
