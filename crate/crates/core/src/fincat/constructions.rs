use crate::error::Result;
use crate::fincat::category::{CategoryBuilder, FinCategory, MorId};

/// `[n]`: objects `0..=n`, one morphism `i-j` for each `i ≤ j`.
pub fn poset_category(n: usize) -> FinCategory {
    preorder_category(
        &(0..=n).map(|i| i.to_string()).collect::<Vec<_>>(),
        |i, j| i <= j,
    )
}

/// `I(n)`: `n + 1` objects with exactly one morphism between any ordered pair.
pub fn iso_category(n: usize) -> FinCategory {
    preorder_category(
        &(0..=n).map(|i| i.to_string()).collect::<Vec<_>>(),
        |_, _| true,
    )
}

/// The thin category of a reflexive, transitive relation on named objects.
/// Morphisms are named `a-b`.
pub fn preorder_category(names: &[String], leq: impl Fn(usize, usize) -> bool) -> FinCategory {
    let n = names.len();
    let mut b = CategoryBuilder::new();
    for name in names {
        b.add_object(name.clone());
    }
    let mut arrow = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j || leq(i, j) {
                arrow[i][j] = Some(b.add_morphism(format!("{}-{}", names[i], names[j]), i, j));
            }
        }
    }
    for i in 0..n {
        b.set_identity(i, arrow[i][i].expect("reflexive"));
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if let (Some(f), Some(g)) = (arrow[i][j], arrow[j][k]) {
                    let h = arrow[i][k].expect("preorder relation must be transitive");
                    b.set_comp(g, f, h);
                }
            }
        }
    }
    b.build_unchecked()
}

/// Only identities.
pub fn discrete_category(names: &[String]) -> FinCategory {
    let mut b = CategoryBuilder::new();
    for name in names {
        b.add_object_with_identity(name.clone(), format!("id_{name}"));
    }
    b.build_unchecked()
}

/// The one-object category of a finite group given by its multiplication
/// table; element 0 must be the unit.
pub fn group_category(elements: &[String], mul: impl Fn(usize, usize) -> usize) -> Result<FinCategory> {
    let mut b = CategoryBuilder::new();
    let x = b.add_object("*");
    for e in elements {
        b.add_morphism(e.clone(), x, x);
    }
    b.set_identity(x, 0);
    for g in 0..elements.len() {
        for f in 0..elements.len() {
            b.set_comp(g, f, mul(g, f));
        }
    }
    b.build()
}

/// The maximal subgroupoid: same objects, exactly the invertible morphisms.
pub fn core(c: &FinCategory) -> FinCategory {
    let keep: Vec<MorId> = c.morphisms().filter(|&f| c.is_iso(f)).collect();
    subcategory(c, &keep)
}

/// The wide subcategory on the listed morphisms, which must contain every
/// identity and be closed under composition.
pub fn subcategory(c: &FinCategory, keep: &[MorId]) -> FinCategory {
    let mut b = CategoryBuilder::new();
    for x in c.objects() {
        b.add_object(c.object_name(x));
    }
    let mut new_id = vec![None; c.num_morphisms()];
    for &f in keep {
        new_id[f] = Some(b.add_morphism(c.morphism_name(f), c.src(f), c.tgt(f)));
    }
    for x in c.objects() {
        if let Some(i) = new_id[c.ident(x)] {
            b.set_identity(x, i);
        }
    }
    for (g, f, gf) in c.composition_triples() {
        if let (Some(g2), Some(f2), Some(h2)) = (new_id[g], new_id[f], new_id[gf]) {
            b.set_comp(g2, f2, h2);
        }
    }
    b.build_unchecked()
}

/// Same names, arrows reversed: `comp_op(f, g) = comp(g, f)`.
pub fn opposite(c: &FinCategory) -> FinCategory {
    let mut b = CategoryBuilder::new();
    for x in c.objects() {
        b.add_object(c.object_name(x));
    }
    for f in c.morphisms() {
        b.add_morphism(c.morphism_name(f), c.tgt(f), c.src(f));
    }
    for x in c.objects() {
        b.set_identity(x, c.ident(x));
    }
    for (g, f, gf) in c.composition_triples() {
        b.set_comp(f, g, gf);
    }
    b.build_unchecked()
}

/// Cartesian product; objects and morphisms named `(a,b)`.
pub fn product(c: &FinCategory, d: &FinCategory) -> FinCategory {
    let mut b = CategoryBuilder::new();
    let no = d.num_objects();
    let nm = d.num_morphisms();
    for x in c.objects() {
        for y in d.objects() {
            b.add_object(format!("({},{})", c.object_name(x), d.object_name(y)));
        }
    }
    for f in c.morphisms() {
        for g in d.morphisms() {
            b.add_morphism(
                format!("({},{})", c.morphism_name(f), d.morphism_name(g)),
                c.src(f) * no + d.src(g),
                c.tgt(f) * no + d.tgt(g),
            );
        }
    }
    for x in c.objects() {
        for y in d.objects() {
            b.set_identity(x * no + y, c.ident(x) * nm + d.ident(y));
        }
    }
    for (g1, f1, h1) in c.composition_triples() {
        for (g2, f2, h2) in d.composition_triples() {
            b.set_comp(g1 * nm + g2, f1 * nm + f2, h1 * nm + h2);
        }
    }
    b.build_unchecked()
}
