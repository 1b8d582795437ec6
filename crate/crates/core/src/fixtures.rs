//! Named fixtures: the standard simplices and their sub-objects, the
//! simplicial spaces `F(n)`, `G(n)` and `E(1)`, a handful of small
//! categories, and objects derived from them by prefix.
//!
//! Names are a constructor followed by its numeric arguments, with `_`
//! between arguments: `delta2`, `horn2_0`, `poset3`. Derived names take a
//! category name after a prefix: `nerve-B2`, `classifying-Z2`,
//! `rep-poset2-0` (the representable at object `0`).

use crate::error::{Error, Result};
use crate::fincat::{
    group_category, iso_category, poset_category, preorder_category, CategoryBuilder, FinCategory, Functor,
    SetFunctor,
};
use crate::io::Document;
use crate::limits::Limits;
use crate::simpset::{boundary, delta, horn, nerve, spine};
use crate::sspace::{classifying_diagram, e1, f_n, spine_space};

/// Truncations used when building a fixture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixtureOptions {
    /// Simplicial truncation, also the horizontal one for simplicial spaces.
    pub trunc: usize,
    pub vtrunc: usize,
}

impl Default for FixtureOptions {
    fn default() -> Self {
        FixtureOptions { trunc: 3, vtrunc: 2 }
    }
}

/// Shipped category names.
pub const CATEGORIES: &[&str] = &[
    "point", "poset1", "poset2", "poset3", "I1", "I2", "Z2", "parallel", "B2", "span", "isoarrow",
];

/// Every fixture covered by the golden hashes, at default truncations.
pub fn catalog() -> Vec<String> {
    let mut names: Vec<String> = CATEGORIES.iter().map(|s| s.to_string()).collect();
    for n in 0..=3 {
        names.push(format!("delta{n}"));
    }
    for n in 1..=3 {
        names.push(format!("boundary{n}"));
        names.push(format!("spine{n}"));
        for i in 0..=n {
            names.push(format!("horn{n}_{i}"));
        }
    }
    for n in 0..=2 {
        names.push(format!("F{n}"));
        names.push(format!("G{n}"));
    }
    names.push("E1".into());
    names.push("galois".into());
    for c in CATEGORIES {
        names.push(format!("nerve-{c}"));
    }
    for c in ["point", "poset1", "poset2", "I1", "Z2", "parallel", "isoarrow"] {
        names.push(format!("classifying-{c}"));
    }
    names.push("rep-poset2-0".into());
    names
}

fn strings(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Two parallel arrows `u, v: x → y`.
pub fn parallel() -> FinCategory {
    let mut b = CategoryBuilder::new();
    let x = b.add_object_with_identity("x", "id_x");
    let y = b.add_object_with_identity("y", "id_y");
    b.add_morphism("u", x, y);
    b.add_morphism("v", x, y);
    b.fill_unit_laws();
    b.build().expect("parallel arrows form a category")
}

/// Subsets of `{a, b}` under inclusion.
pub fn b2() -> FinCategory {
    preorder_category(&strings(&["{}", "{a}", "{b}", "{a,b}"]), |i, j| i & j == i)
}

/// The pushout shape `a ← o → b`.
pub fn span() -> FinCategory {
    preorder_category(&strings(&["o", "a", "b"]), |i, j| i == j || i == 0)
}

/// `a ≅ b → c`.
pub fn iso_then_arrow() -> FinCategory {
    let mut b = CategoryBuilder::new();
    let a = b.add_object_with_identity("a", "id_a");
    let bb = b.add_object_with_identity("b", "id_b");
    let c = b.add_object_with_identity("c", "id_c");
    let (id_a, id_b) = (0, 1);
    let f = b.add_morphism("f", a, bb);
    let g = b.add_morphism("g", bb, a);
    let h = b.add_morphism("h", bb, c);
    let hf = b.add_morphism("hf", a, c);
    b.fill_unit_laws();
    b.set_comp(g, f, id_a);
    b.set_comp(f, g, id_b);
    b.set_comp(h, f, hf);
    b.set_comp(hf, g, h);
    b.build().expect("a ≅ b → c is a category")
}

/// `Z/2` as a one-object groupoid.
pub fn z2() -> FinCategory {
    group_category(&strings(&["e", "t"]), |a, b| a ^ b).expect("Z/2 is a group")
}

/// The Galois connection `[2] → [1]`, `0 ↦ 0`, `1, 2 ↦ 1`.
pub fn galois() -> Functor {
    Functor::from_names(
        poset_category(2),
        poset_category(1),
        [("0", "0"), ("1", "1"), ("2", "1")],
        [("0-1", "0-1"), ("0-2", "0-1"), ("1-2", "1-1")],
    )
    .expect("monotone map")
}

fn unknown(name: &str) -> Error {
    Error::Precondition(format!("unknown fixture `{name}`"))
}

/// `prefix` followed by numbers separated by `_`.
fn numeric(name: &str, prefix: &str) -> Option<Vec<usize>> {
    let rest = name.strip_prefix(prefix)?;
    if rest.is_empty() {
        return None;
    }
    rest.split('_').map(|p| p.parse().ok()).collect()
}

fn one(name: &str, prefix: &str) -> Option<usize> {
    match numeric(name, prefix)?[..] {
        [n] => Some(n),
        _ => None,
    }
}

/// A shipped category by name.
pub fn category(name: &str) -> Result<FinCategory> {
    let c = match name {
        "point" => poset_category(0),
        "Z2" => z2(),
        "parallel" => parallel(),
        "B2" => b2(),
        "span" => span(),
        "isoarrow" => iso_then_arrow(),
        _ => {
            if let Some(n) = one(name, "poset") {
                poset_category(n)
            } else if let Some(n) = one(name, "I") {
                iso_category(n)
            } else {
                return Err(unknown(name));
            }
        }
    };
    Ok(c)
}

/// Builds a fixture by name.
pub fn build(name: &str, opts: FixtureOptions, limits: &Limits) -> Result<Document> {
    let (t, v) = (opts.trunc, opts.vtrunc);
    if let Ok(c) = category(name) {
        return Ok(Document::Category(c));
    }
    if let Some((prefix, rest)) = name.split_once('-') {
        return match prefix {
            "nerve" => Ok(Document::SimpSet(nerve(&category(rest)?, t))),
            "classifying" => Ok(Document::BiSimpSet(classifying_diagram(&category(rest)?, t, v, limits)?)),
            "rep" => {
                let (cat, ob) = rest.split_once('-').ok_or_else(|| unknown(name))?;
                let c = category(cat)?;
                let x = c.object(ob)?;
                Ok(Document::SetFunctor(SetFunctor::representable(&c, x)))
            }
            _ => Err(unknown(name)),
        };
    }
    let doc = match name {
        "E1" => Document::BiSimpSet(e1(t, v)),
        "galois" => Document::Functor(galois()),
        _ => {
            if let Some(n) = one(name, "delta") {
                Document::SimpSet(delta(n, t))
            } else if let Some(n) = one(name, "boundary") {
                Document::SimpSet(boundary(n, t))
            } else if let Some(n) = one(name, "spine") {
                Document::SimpSet(spine(n, t))
            } else if let Some(&[n, i]) = numeric(name, "horn").as_deref() {
                Document::SimpSet(horn(n, i, t)?)
            } else if let Some(n) = one(name, "F") {
                Document::BiSimpSet(f_n(n, t, v))
            } else if let Some(n) = one(name, "G") {
                Document::BiSimpSet(spine_space(n, t, v).domain().clone())
            } else {
                return Err(unknown(name));
            }
        }
    };
    Ok(doc)
}
