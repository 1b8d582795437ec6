use super::*;
use crate::fincat::{
    find_isomorphism, functor_category, iso_category, opposite, poset_category, product, CategoryBuilder, FinCategory,
    Functor, MorId, SetFunctor,
};
use crate::simpset::{category_from_segal, delta, discrete, nerve, nerve_map, SimpMap};
use crate::sspace::{embed_vertical, f_n};
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

/// `F(0) = {a}`, `F(1) = {b, c}`, `F(0-1)(a) = b` on `[1]`.
fn small_set_functor() -> SetFunctor {
    let c = poset_category(1);
    let sets = vec![vec!["a".to_string()], vec!["b".to_string(), "c".to_string()]];
    let mut actions = vec![Vec::new(); c.num_morphisms()];
    for f in c.morphisms() {
        actions[f] = if c.is_identity(f) { (0..sets[c.src(f)].len()).collect() } else { vec![0] };
    }
    SetFunctor::new(c, sets, actions).unwrap()
}

fn first_projection(c: &FinCategory, d: &FinCategory) -> Functor {
    let cd = product(c, d);
    let ob = cd.objects().map(|o| o / d.num_objects()).collect();
    let mor = cd.morphisms().map(|m| m / d.num_morphisms()).collect();
    Functor::new(cd, c.clone(), ob, mor).unwrap()
}

/// Evaluation at `k` on the arrow category of `c`.
fn evaluation(c: &FinCategory, k: usize) -> Functor {
    let fc = functor_category(&poset_category(1), c, &Limits::default()).unwrap();
    let ob = fc.functors.iter().map(|f| f.ob(k)).collect();
    let mor = fc.transformations.iter().map(|t| t.component(k)).collect();
    Functor::new(fc.category, c.clone(), ob, mor).unwrap()
}

fn to_point(c: &FinCategory) -> Functor {
    Functor::constant(c, &poset_category(0), 0)
}

/// Brute-force unique-lift oracle.
fn naive_cofibered(p: &Functor) -> bool {
    let (d, c) = (p.domain(), p.codomain());
    c.morphisms().all(|f| {
        d.objects().filter(|&x| p.ob(x) == c.src(f)).all(|x| {
            d.morphisms().filter(|&g| d.src(g) == x && p.mor(g) == f).count() == 1
        })
    })
}

/// Cartesian morphisms straight from the definition.
fn naive_cartesian(p: &Functor, f: MorId) -> bool {
    let (d, c) = (p.domain(), p.codomain());
    let (x, y) = (d.src(f), d.tgt(f));
    d.objects().all(|z| {
        c.hom(p.ob(z), p.ob(x)).iter().all(|&hb| {
            d.hom(z, y).iter().all(|&g| {
                if c.compose(p.mor(f), hb) != p.mor(g) {
                    return true;
                }
                d.hom(z, x).iter().filter(|&&h| d.compose(f, h) == g && p.mor(h) == hb).count() == 1
            })
        })
    })
}

#[test]
fn grothendieck_examples() {
    let (total, proj) = grothendieck(&small_set_functor());
    assert_eq!((total.num_objects(), total.num_morphisms()), (3, 4));
    assert!(total.morphism("(0-1,a)").is_ok());
    assert!(is_cofibered_in_sets(&proj).verdict);

    let c = parallel();
    let (_, proj) = grothendieck(&SetFunctor::constant(&c, &["*".into()]));
    assert!(proj.is_isomorphism());

    for c in [poset_category(2), iso_category(1), parallel()] {
        for x in c.objects() {
            let (g, _) = grothendieck(&SetFunctor::representable(&c, x));
            let (u, _) = under_category(&c, x).unwrap();
            assert!(find_isomorphism(&g, &u, &Limits::default()).unwrap().is_some());
        }
    }
}

#[test]
fn cofibered_examples() {
    let c = parallel();
    assert!(is_cofibered_in_sets(&Functor::identity(&c)).verdict);
    let p = first_projection(&poset_category(1), &poset_category(1));
    let report = is_cofibered_in_sets(&p);
    assert!(!report.verdict);
    assert_eq!(report.verdict, naive_cofibered(&p));
    assert!(report.failures.iter().all(|f| f.lifts != 1));
    assert!(report
        .failures
        .iter()
        .any(|f| f.morphism == "0-0" && f.source == "(0,0)" && f.lifts == 2));
}

#[test]
fn under_category_examples() {
    let (u, p) = under_category(&poset_category(0), 0).unwrap();
    assert_eq!((u.num_objects(), u.num_morphisms()), (1, 1));
    assert!(p.is_isomorphism());
    let c = poset_category(2);
    let (u, _) = under_category(&c, 0).unwrap();
    assert!(find_isomorphism(&u, &c, &Limits::default()).unwrap().is_some());
    let (u, _) = under_category(&iso_category(1), 0).unwrap();
    assert_eq!(u.num_objects(), 2);
    assert!(under_category(&c, 7).is_err());
}

#[test]
fn cofibered_yoneda_examples() {
    let limits = Limits::default();
    for c in [poset_category(2), iso_category(1), parallel()] {
        for x in c.objects() {
            let (_, proj) = under_category(&c, x).unwrap();
            for y in c.objects() {
                let w = cofibered_yoneda_check(&proj, y, &limits).unwrap();
                assert_eq!(w.codomain_size, c.hom(x, y).len());
                assert_eq!(w.domain_size, w.codomain_size);
            }
            let w = cofibered_yoneda_check(&Functor::identity(&c), x, &limits).unwrap();
            assert_eq!((w.domain_size, w.codomain_size), (1, 1));
        }
    }
    let f = small_set_functor();
    let (_, proj) = grothendieck(&f);
    for x in f.domain().objects() {
        assert_eq!(cofibered_yoneda_check(&proj, x, &limits).unwrap().domain_size, f.size(x));
    }
    let p = first_projection(&poset_category(1), &poset_category(1));
    assert!(matches!(cofibered_yoneda_check(&p, 0, &limits), Err(crate::Error::Precondition(_))));
}

#[test]
fn left_fibration_examples() {
    let pts = discrete(&["a".into(), "b".into()], 2);
    let to_pt = SimpMap::to_terminal(&pts, &delta(0, 2)).unwrap();
    assert!(is_left_fibration(&to_pt).unwrap());
    assert!(is_right_fibration(&to_pt).unwrap());
    for c in [poset_category(2), iso_category(1), parallel()] {
        for x in c.objects() {
            let (_, proj) = under_category(&c, x).unwrap();
            assert!(is_left_fibration(&nerve_map(&proj, 2)).unwrap());
        }
    }
    let target = evaluation(&poset_category(1), 1);
    let cmp = left_fibration_comparison(&nerve_map(&target, 2)).unwrap();
    // 00 has two lifts of 0-1, to 01 and to 11
    assert!(cmp.surjective && !cmp.injective);
    assert!(!is_left_fibration(&nerve_map(&target, 2)).unwrap());
    assert!(!naive_cofibered(&target));

    let edge = SimpMap::to_terminal(&delta(1, 2), &delta(0, 2)).unwrap();
    assert!(!is_left_fibration(&edge).unwrap());
    assert!(is_left_fibration(&SimpMap::to_terminal(&delta(0, 0), &delta(0, 0)).unwrap()).is_err());
}

#[test]
fn fiber_decompositions() {
    let n1 = nerve(&poset_category(1), 2);
    let d = fiber_decomposition_over_f1(&SimpMap::identity(&n1)).unwrap();
    assert_eq!(d.transport, vec![(0, 1)]);
    assert_eq!(d.over_0.domain().sizes(), vec![1, 1, 1]);

    let (u, proj) = under_category(&poset_category(1), 0).unwrap();
    let p = nerve_map(&proj, 2);
    let d = fiber_decomposition_over_f1(&p).unwrap();
    let names: Vec<(&str, &str)> = d.transport.iter().map(|&(a, b)| (u.object_name(a), u.object_name(b))).collect();
    assert_eq!(names, [("0-0", "0-1")]);
    assert_eq!(d.over_01.len(), 1);

    // fibers over 0 and 1, nothing over the arrow
    let l = discrete(&["a".into(), "b".into()], 2);
    let levels = (0..=2).map(|n| vec![n1.degen_iter(0, 0, &vec![0; n]), n1.degen_iter(0, 1, &vec![0; n])]).collect();
    let split = SimpMap::new(l, n1.clone(), levels).unwrap();
    assert!(!left_fibration_comparison(&split).unwrap().surjective);
    assert!(matches!(fiber_decomposition_over_f1(&split), Err(crate::Error::Precondition(_))));
    assert!(fiber_decomposition_over_f1(&SimpMap::identity(&delta(2, 2))).is_err());
}

#[test]
fn under_css_examples() {
    let limits = Limits::default();
    for c in [poset_category(2), iso_category(1), parallel()] {
        let w = embed_vertical(&nerve(&c, 4), 1);
        for x in c.objects() {
            let u = under_css(&w, x, &limits).unwrap();
            assert_eq!(u.htrunc(), 3);
            assert_eq!(u.size(0, 0), c.out_of(x).len());
            let (uc, _) = under_category(&c, x).unwrap();
            let expected = nerve(&uc, 3);
            for n in 0..=3 {
                assert_eq!(u.size(n, 1), expected.level_size(n));
            }
            let recovered = category_from_segal(u.column(0)).unwrap();
            assert!(find_isomorphism(&recovered, &uc, &limits).unwrap().is_some());
            let proj = under_projection(&w, x, &limits).unwrap();
            assert_eq!(proj.codomain().htrunc(), 3);
        }
    }
    let pt = under_css(&f_n(0, 2, 1), 0, &limits).unwrap();
    assert!(pt.sizes().iter().flatten().all(|&k| k == 1));
    let e = crate::sspace::classifying_diagram(&iso_category(1), 2, 2, &limits).unwrap();
    assert!(matches!(under_css(&e, 0, &limits), Err(crate::Error::Undecidable(_))));
}

#[test]
fn left_yoneda_examples() {
    let limits = Limits::default();
    let f = small_set_functor();
    let (_, proj) = grothendieck(&f);
    let p = nerve_map(&proj, 3);
    for x in f.domain().objects() {
        let w = left_yoneda_check(&p, x, &limits).unwrap();
        assert_eq!((w.domain_size, w.codomain_size), (f.size(x), f.size(x)));
    }
    let c = parallel();
    let (_, proj) = under_category(&c, 0).unwrap();
    let p = nerve_map(&proj, 3);
    for y in c.objects() {
        assert_eq!(left_yoneda_check(&p, y, &limits).unwrap().domain_size, c.hom(0, y).len());
    }
}

#[test]
fn cocartesian_morphisms() {
    let c = parallel();
    let p = first_projection(&c, &poset_category(1));
    for x in p.domain().objects() {
        assert!(is_cocartesian_morphism(&p, p.domain().ident(x)));
    }
    let f = small_set_functor();
    let (total, proj) = grothendieck(&f);
    assert!(total.morphisms().all(|m| is_cocartesian_morphism(&proj, m)));

    // two lifts of the identity at 0; the non-initial one fails at z = 0
    let q = to_point(&poset_category(1));
    let arrow = q.domain().morphism("0-1").unwrap();
    assert_eq!(cocartesian_witness(&q, arrow), Some(0));
    assert!(is_cocartesian_morphism(&q, q.domain().morphism("0-0").unwrap()));
    assert!(is_cartesian_morphism(&q, q.domain().morphism("1-1").unwrap()));
    assert!(!is_cartesian_morphism(&q, arrow));
}

#[test]
fn cocartesian_fibrations() {
    let f = small_set_functor();
    let (_, proj) = grothendieck(&f);
    let v = is_cocartesian_fibration(&proj).unwrap();
    assert!(v.is_fibration());
    assert!(v.structure().unwrap().lifts.iter().all(|s| s.lifts.len() == 1));

    for d in [poset_category(2), iso_category(1), parallel()] {
        let p = to_point(&d);
        assert!(is_cocartesian_fibration(&p).unwrap().is_fibration());
        assert!(is_cartesian_fibration(&p).unwrap().is_fibration());
    }
    // isomorphic coCartesian lifts are allowed
    let p = to_point(&iso_category(1));
    let v = is_cocartesian_fibration(&p).unwrap();
    assert!(v.structure().unwrap().lifts.iter().all(|s| s.lifts.len() == 2));

    // 0 ↦ 0, 1 ↦ 2 has no coCartesian lift of 1-2 at 1... nor any lift at all
    let c = poset_category(2);
    let inc = Functor::from_names(poset_category(1), c.clone(), [("0", "0"), ("1", "2")], [("0-1", "0-2")]).unwrap();
    let missing = is_cocartesian_fibration(&inc).unwrap().missing().unwrap();
    assert_eq!(c.morphism_name(missing.morphism), "0-1");
    assert!(!is_cartesian_fibration(&inc).unwrap().is_fibration());

    let src = evaluation(&poset_category(1), 0);
    for g in src.domain().morphisms() {
        assert_eq!(is_cartesian_morphism(&src, g), naive_cartesian(&src, g));
    }
}

mod props {
    use super::*;
    use crate::generators::{random_category, random_functor, random_set_functor, CategoryShape};
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

    /// A random functor between small categories, or a Grothendieck
    /// projection so that both verdicts occur.
    fn arb_functor() -> impl proptest::strategy::Strategy<Value = Functor> {
        any::<u64>().prop_map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            if seed % 2 == 0 {
                return grothendieck(&random_set_functor(&mut rng, small())).1;
            }
            loop {
                let c = random_category(&mut rng, small());
                let d = random_category(&mut rng, small());
                if let Some(f) = random_functor(&mut rng, &d, &c, &Limits::default()) {
                    return f;
                }
            }
        })
    }

    fn fibers_discrete(p: &Functor) -> bool {
        let (d, c) = (p.domain(), p.codomain());
        d.morphisms().all(|g| !c.is_identity(p.mor(g)) || d.is_identity(g))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn grothendieck_is_cofibered(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = random_set_functor(&mut rng, small());
            let (total, proj) = grothendieck(&f);
            prop_assert!(total.validate().is_valid());
            prop_assert!(is_cofibered_in_sets(&proj).verdict);
            prop_assert!(is_cocartesian_fibration(&proj).unwrap().is_fibration());
        }

        #[test]
        fn cofibered_checks_agree(p in arb_functor()) {
            let cofibered = is_cofibered_in_sets(&p).verdict;
            prop_assert_eq!(cofibered, naive_cofibered(&p));
            let cocart = is_cocartesian_fibration(&p).unwrap().is_fibration();
            prop_assert_eq!(cofibered, cocart && fibers_discrete(&p));
            prop_assert_eq!(cofibered, is_left_fibration(&nerve_map(&p, 2)).unwrap());
            let (dop, cop) = (opposite(p.domain()), opposite(p.codomain()));
            let pop = p.opposite(&dop, &cop);
            prop_assert_eq!(is_right_fibration(&nerve_map(&p, 2)).unwrap(), is_cofibered_in_sets(&pop).verdict);
        }

        #[test]
        fn cartesian_matches_definition(p in arb_functor()) {
            for g in p.domain().morphisms() {
                prop_assert_eq!(is_cartesian_morphism(&p, g), naive_cartesian(&p, g));
            }
        }

        #[test]
        fn cocartesian_lifts_are_cocartesian(p in arb_functor()) {
            if let Some(s) = is_cocartesian_fibration(&p).unwrap().structure() {
                for set in &s.lifts {
                    for &g in &set.lifts {
                        prop_assert!(is_cocartesian_morphism(&p, g));
                        prop_assert_eq!(p.domain().src(g), set.source);
                        prop_assert_eq!(p.mor(g), set.morphism);
                    }
                }
            }
        }
    }
}
