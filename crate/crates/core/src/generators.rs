//! Random finite instances for property tests and the acceptance suite.
//!
//! Categories are generated as concrete categories: objects are small finite
//! sets, morphisms are the closure of a few random functions under
//! composition. This produces thin and non-thin categories, parallel arrows,
//! non-trivial endomorphisms and isomorphisms.

use std::collections::{HashMap, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::fincat::{
    preorder_category, CategoryBuilder, FinCategory, Functor, FunctorSearch, SetFunctor,
};
use crate::limits::Limits;

/// Size bounds for generated categories.
#[derive(Debug, Clone, Copy)]
pub struct CategoryShape {
    pub max_objects: usize,
    pub max_morphisms: usize,
    pub max_set_size: usize,
    pub max_generators: usize,
}

impl Default for CategoryShape {
    fn default() -> Self {
        CategoryShape {
            max_objects: 4,
            max_morphisms: 12,
            max_set_size: 3,
            max_generators: 4,
        }
    }
}

/// A generated concrete category with the function each morphism denotes.
#[derive(Debug, Clone)]
pub struct ConcreteCategory {
    pub category: FinCategory,
    pub carriers: Vec<usize>,
    pub functions: Vec<Vec<usize>>,
}

impl ConcreteCategory {
    /// The forgetful functor to finite sets.
    pub fn forgetful(&self) -> SetFunctor {
        let sets = self
            .carriers
            .iter()
            .map(|&n| (0..n).map(|k| k.to_string()).collect())
            .collect();
        SetFunctor::new(self.category.clone(), sets, self.functions.clone())
            .expect("forgetful functor of a concrete category")
    }
}

pub fn random_category<R: Rng>(rng: &mut R, shape: CategoryShape) -> FinCategory {
    random_concrete_category(rng, shape).category
}

pub fn random_concrete_category<R: Rng>(rng: &mut R, shape: CategoryShape) -> ConcreteCategory {
    loop {
        let n = rng.gen_range(1..=shape.max_objects);
        let carriers: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=shape.max_set_size)).collect();
        let gens = rng.gen_range(0..=shape.max_generators);
        let mut generators = Vec::new();
        for _ in 0..gens {
            let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let f: Vec<usize> = (0..carriers[a]).map(|_| rng.gen_range(0..carriers[b])).collect();
            generators.push((a, b, f));
        }
        if let Some(c) = close_under_composition(&carriers, &generators, shape.max_morphisms) {
            return c;
        }
    }
}

fn close_under_composition(
    carriers: &[usize],
    generators: &[(usize, usize, Vec<usize>)],
    max_morphisms: usize,
) -> Option<ConcreteCategory> {
    let n = carriers.len();
    let mut arrows: Vec<(usize, usize, Vec<usize>)> = (0..n)
        .map(|x| (x, x, (0..carriers[x]).collect()))
        .collect();
    let mut index: HashMap<(usize, usize, Vec<usize>), usize> = arrows
        .iter()
        .enumerate()
        .map(|(i, a)| (a.clone(), i))
        .collect();
    let mut queue: VecDeque<usize> = VecDeque::new();
    for g in generators {
        if !index.contains_key(g) {
            index.insert(g.clone(), arrows.len());
            queue.push_back(arrows.len());
            arrows.push(g.clone());
        }
    }
    while let Some(a) = queue.pop_front() {
        if arrows.len() > max_morphisms {
            return None;
        }
        for b in 0..arrows.len() {
            let mut new = Vec::new();
            for (first, second) in [(a, b), (b, a)] {
                let (s1, t1, f1) = &arrows[first];
                let (s2, t2, f2) = &arrows[second];
                if t1 == s2 {
                    let h: Vec<usize> = f1.iter().map(|&v| f2[v]).collect();
                    new.push((*s1, *t2, h));
                }
            }
            for key in new {
                if !index.contains_key(&key) {
                    index.insert(key.clone(), arrows.len());
                    queue.push_back(arrows.len());
                    arrows.push(key);
                }
            }
        }
    }
    if arrows.len() > max_morphisms {
        return None;
    }
    let mut b = CategoryBuilder::new();
    for x in 0..n {
        b.add_object(format!("o{x}"));
    }
    for (i, (s, t, _)) in arrows.iter().enumerate() {
        let name = if i < n { format!("id_o{i}") } else { format!("m{}", i - n) };
        b.add_morphism(name, *s, *t);
    }
    for x in 0..n {
        b.set_identity(x, x);
    }
    for (i, (s1, t1, f1)) in arrows.iter().enumerate() {
        for (j, (s2, t2, f2)) in arrows.iter().enumerate() {
            if t1 == s2 {
                let h: Vec<usize> = f1.iter().map(|&v| f2[v]).collect();
                b.set_comp(j, i, index[&(*s1, *t2, h)]);
            }
        }
    }
    let category = b.build().expect("closure of functions is a category");
    Some(ConcreteCategory {
        category,
        carriers: carriers.to_vec(),
        functions: arrows.into_iter().map(|(_, _, f)| f).collect(),
    })
}

/// A random poset on `n` elements, as a thin category.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, density: f64) -> FinCategory {
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        leq[i][i] = true;
        for j in i + 1..n {
            leq[i][j] = rng.gen_bool(density);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    preorder_category(&names, |i, j| leq[i][j])
}

/// A uniformly chosen functor `c → d`, if any exists within `limits`.
pub fn random_functor<R: Rng>(rng: &mut R, c: &FinCategory, d: &FinCategory, limits: &Limits) -> Option<Functor> {
    let all = FunctorSearch::new(c, d).run(limits).ok()?;
    all.choose(rng).cloned()
}

/// A random set-valued functor: a forgetful functor, a representable, a
/// constant functor, or a coproduct of two of those.
pub fn random_set_functor<R: Rng>(rng: &mut R, shape: CategoryShape) -> SetFunctor {
    let concrete = random_concrete_category(rng, shape);
    let c = concrete.category.clone();
    let base = |rng: &mut R| -> SetFunctor {
        match rng.gen_range(0..3) {
            0 => concrete.forgetful(),
            1 => SetFunctor::representable(&c, rng.gen_range(0..c.num_objects())),
            _ => {
                let k = rng.gen_range(0..=2);
                let elems: Vec<String> = (0..k).map(|i| format!("e{i}")).collect();
                SetFunctor::constant(&c, &elems)
            }
        }
    };
    let first = base(rng);
    if rng.gen_bool(0.3) {
        let second = base(rng);
        coproduct(&first, &second)
    } else {
        first
    }
}

/// Objectwise disjoint union of two set-valued functors on one category.
pub fn coproduct(f: &SetFunctor, g: &SetFunctor) -> SetFunctor {
    let c = f.domain().clone();
    let sets = c
        .objects()
        .map(|x| {
            f.set(x)
                .iter()
                .map(|e| format!("l.{e}"))
                .chain(g.set(x).iter().map(|e| format!("r.{e}")))
                .collect()
        })
        .collect();
    let actions = c
        .morphisms()
        .map(|m| {
            let shift = f.size(c.tgt(m));
            (0..f.size(c.src(m)))
                .map(|a| f.act(m, a))
                .chain((0..g.size(c.src(m))).map(|a| shift + g.act(m, a)))
                .collect()
        })
        .collect();
    SetFunctor::new(c, sets, actions).expect("coproduct of functors")
}
