//! JSON documents for categories, functors, set-valued functors and
//! truncated (bi)simplicial sets.
//!
//! Output is canonical: tables are keyed maps with sorted keys, so writing,
//! reading and writing again is byte-identical.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::fincat::{CategoryBuilder, FinCategory, Functor, SetFunctor};
use crate::simpset::{SimpSetBuilder, TruncSimpSet};
use crate::sspace::{BiSimpSetBuilder, TruncBiSimpSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub identities: BTreeMap<String, String>,
    /// `[g, f, g∘f]`. Unit laws may be omitted on input.
    #[serde(default)]
    pub comp: Vec<[String; 3]>,
}

/// A category given inline or by a name the caller resolves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CategoryRef {
    Inline(CategoryDoc),
    Named(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub domain: CategoryRef,
    pub codomain: CategoryRef,
    #[serde(rename = "obMap")]
    pub ob_map: BTreeMap<String, String>,
    /// Identities may be omitted on input.
    #[serde(rename = "morMap", default)]
    pub mor_map: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetFunctorDoc {
    pub domain: CategoryRef,
    pub sets: BTreeMap<String, Vec<String>>,
    /// `actions[f][a] = F(f)(a)`; identities may be omitted on input.
    #[serde(default)]
    pub actions: BTreeMap<String, BTreeMap<String, String>>,
}

pub type OpTable = BTreeMap<String, BTreeMap<String, String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimpSetDoc {
    pub truncation: usize,
    pub levels: Vec<Vec<String>>,
    /// Keyed `"n,i"`.
    pub faces: OpTable,
    pub degens: OpTable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BiSimpSetDoc {
    pub htrunc: usize,
    pub vtrunc: usize,
    /// `levels[n][l]`.
    pub levels: Vec<Vec<Vec<String>>>,
    /// Keyed `"n,l,i"`.
    pub hfaces: OpTable,
    pub vfaces: OpTable,
    pub hdegens: OpTable,
    pub vdegens: OpTable,
}

/// Any document this module reads, recognised by its keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Category(FinCategory),
    Functor(Functor),
    SetFunctor(SetFunctor),
    SimpSet(TruncSimpSet),
    BiSimpSet(TruncBiSimpSet),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Category(_) => "category",
            Document::Functor(_) => "functor",
            Document::SetFunctor(_) => "setfunctor",
            Document::SimpSet(_) => "sset",
            Document::BiSimpSet(_) => "bisset",
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Document::Category(c) => category_to_json(c),
            Document::Functor(f) => functor_to_json(f),
            Document::SetFunctor(f) => setfunctor_to_json(f),
            Document::SimpSet(s) => sset_to_json(s),
            Document::BiSimpSet(t) => bisset_to_json(t),
        }
    }
}

fn pretty<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn bad_ref(what: &str, name: &str) -> Error {
    Error::Json(format!("{what} `{name}` is not declared"))
}

pub fn category_doc(c: &FinCategory) -> CategoryDoc {
    let mut comp: Vec<(usize, usize, [String; 3])> = c
        .composition_triples()
        .into_iter()
        .map(|(g, f, gf)| {
            let n = |m| c.morphism_name(m).to_string();
            (f, g, [n(g), n(f), n(gf)])
        })
        .collect();
    comp.sort_by_key(|&(f, g, _)| (f, g));
    CategoryDoc {
        objects: c.object_names().to_vec(),
        morphisms: c
            .morphisms()
            .map(|f| MorphismDoc {
                id: c.morphism_name(f).to_string(),
                src: c.object_name(c.src(f)).to_string(),
                tgt: c.object_name(c.tgt(f)).to_string(),
            })
            .collect(),
        identities: c
            .objects()
            .map(|x| (c.object_name(x).to_string(), c.morphism_name(c.ident(x)).to_string()))
            .collect(),
        comp: comp.into_iter().map(|(_, _, t)| t).collect(),
    }
}

/// Builds and validates; violations are reported with witnesses.
pub fn category_from_doc(doc: &CategoryDoc) -> Result<FinCategory> {
    builder_from_doc(doc)?.build()
}

/// Resolves names only; the axioms are left to
/// [`validate_category`](crate::fincat::validate_category).
pub fn category_from_doc_unchecked(doc: &CategoryDoc) -> Result<FinCategory> {
    Ok(builder_from_doc(doc)?.build_unchecked())
}

fn builder_from_doc(doc: &CategoryDoc) -> Result<CategoryBuilder> {
    let mut b = CategoryBuilder::new();
    let mut obs = HashMap::new();
    for o in &doc.objects {
        obs.insert(o.as_str(), b.add_object(o.clone()));
    }
    let ob = |name: &str| obs.get(name).copied().ok_or_else(|| bad_ref("object", name));
    let mut mors = HashMap::new();
    for m in &doc.morphisms {
        let id = b.add_morphism(m.id.clone(), ob(&m.src)?, ob(&m.tgt)?);
        mors.insert(m.id.as_str(), id);
    }
    let mor = |name: &str| mors.get(name).copied().ok_or_else(|| bad_ref("morphism", name));
    for (x, i) in &doc.identities {
        b.set_identity(ob(x)?, mor(i)?);
    }
    b.fill_unit_laws();
    for [g, f, gf] in &doc.comp {
        b.set_comp(mor(g)?, mor(f)?, mor(gf)?);
    }
    Ok(b)
}

pub fn category_to_json(c: &FinCategory) -> String {
    pretty(&category_doc(c))
}

pub fn category_from_json(s: &str) -> Result<FinCategory> {
    category_from_doc(&serde_json::from_str(s)?)
}

/// Resolves a [`CategoryRef`]; named references go through `resolve`.
pub fn resolve_category(r: &CategoryRef, resolve: &dyn Fn(&str) -> Result<FinCategory>) -> Result<FinCategory> {
    match r {
        CategoryRef::Inline(doc) => category_from_doc(doc),
        CategoryRef::Named(name) => resolve(name),
    }
}

fn no_names(name: &str) -> Result<FinCategory> {
    Err(Error::Json(format!("category reference `{name}` cannot be resolved here")))
}

pub fn functor_doc(f: &Functor) -> FunctorDoc {
    let (c, d) = (f.domain(), f.codomain());
    FunctorDoc {
        domain: CategoryRef::Inline(category_doc(c)),
        codomain: CategoryRef::Inline(category_doc(d)),
        ob_map: c
            .objects()
            .map(|x| (c.object_name(x).to_string(), d.object_name(f.ob(x)).to_string()))
            .collect(),
        mor_map: c
            .morphisms()
            .map(|m| (c.morphism_name(m).to_string(), d.morphism_name(f.mor(m)).to_string()))
            .collect(),
    }
}

pub fn functor_from_doc(doc: &FunctorDoc, resolve: &dyn Fn(&str) -> Result<FinCategory>) -> Result<Functor> {
    let dom = resolve_category(&doc.domain, resolve)?;
    let cod = resolve_category(&doc.codomain, resolve)?;
    Functor::from_names(
        dom,
        cod,
        doc.ob_map.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        doc.mor_map.iter().map(|(a, b)| (a.as_str(), b.as_str())),
    )
}

pub fn functor_to_json(f: &Functor) -> String {
    pretty(&functor_doc(f))
}

pub fn functor_from_json(s: &str) -> Result<Functor> {
    functor_from_doc(&serde_json::from_str(s)?, &no_names)
}

pub fn setfunctor_doc(f: &SetFunctor) -> SetFunctorDoc {
    let c = f.domain();
    SetFunctorDoc {
        domain: CategoryRef::Inline(category_doc(c)),
        sets: c.objects().map(|x| (c.object_name(x).to_string(), f.set(x).to_vec())).collect(),
        actions: c
            .morphisms()
            .map(|m| {
                let (x, y) = (c.src(m), c.tgt(m));
                let table = (0..f.size(x))
                    .map(|a| (f.set(x)[a].clone(), f.set(y)[f.act(m, a)].clone()))
                    .collect();
                (c.morphism_name(m).to_string(), table)
            })
            .collect(),
    }
}

pub fn setfunctor_from_doc(doc: &SetFunctorDoc, resolve: &dyn Fn(&str) -> Result<FinCategory>) -> Result<SetFunctor> {
    let c = resolve_category(&doc.domain, resolve)?;
    let mut sets = vec![None; c.num_objects()];
    for (x, elems) in &doc.sets {
        sets[c.object(x)?] = Some(elems.clone());
    }
    let sets: Vec<Vec<String>> = sets
        .into_iter()
        .enumerate()
        .map(|(x, s)| s.ok_or_else(|| Error::InvalidSetFunctor(format!("no set for `{}`", c.object_name(x)))))
        .collect::<Result<_>>()?;
    let position = |x: usize, a: &str| {
        sets[x]
            .iter()
            .position(|e| e == a)
            .ok_or_else(|| Error::InvalidSetFunctor(format!("`{a}` is not an element over `{}`", c.object_name(x))))
    };
    let mut actions: Vec<Option<Vec<usize>>> = vec![None; c.num_morphisms()];
    for x in c.objects() {
        actions[c.ident(x)] = Some((0..sets[x].len()).collect());
    }
    for (m, table) in &doc.actions {
        let m = c.morphism(m)?;
        let (x, y) = (c.src(m), c.tgt(m));
        let mut row = vec![usize::MAX; sets[x].len()];
        for (a, b) in table {
            row[position(x, a)?] = position(y, b)?;
        }
        if row.contains(&usize::MAX) {
            return Err(Error::InvalidSetFunctor(format!(
                "action of `{}` is not total",
                c.morphism_name(m)
            )));
        }
        actions[m] = Some(row);
    }
    let actions = actions
        .into_iter()
        .enumerate()
        .map(|(m, a)| a.ok_or_else(|| Error::InvalidSetFunctor(format!("no action for `{}`", c.morphism_name(m)))))
        .collect::<Result<_>>()?;
    SetFunctor::new(c, sets, actions)
}

pub fn setfunctor_to_json(f: &SetFunctor) -> String {
    pretty(&setfunctor_doc(f))
}

pub fn setfunctor_from_json(s: &str) -> Result<SetFunctor> {
    setfunctor_from_doc(&serde_json::from_str(s)?, &no_names)
}

fn op_table(entries: impl Iterator<Item = (String, String, String)>) -> OpTable {
    let mut t = OpTable::new();
    for (key, x, y) in entries {
        t.entry(key).or_default().insert(x, y);
    }
    t
}

fn parse_key(key: &str, parts: usize) -> Result<Vec<usize>> {
    let v: Vec<usize> = key
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Json(format!("bad operator key `{key}`")))?;
    if v.len() != parts {
        return Err(Error::Json(format!("operator key `{key}` needs {parts} indices")));
    }
    Ok(v)
}

pub fn sset_doc(s: &TruncSimpSet) -> SimpSetDoc {
    let t = s.truncation();
    let faces = (1..=t).flat_map(|n| {
        (0..=n).flat_map(move |i| {
            s.simplices(n)
                .map(move |x| (format!("{n},{i}"), s.name(n, x).to_string(), s.name(n - 1, s.face(n, i, x)).to_string()))
        })
    });
    let degens = (0..t).flat_map(|n| {
        (0..=n).flat_map(move |i| {
            s.simplices(n)
                .map(move |x| (format!("{n},{i}"), s.name(n, x).to_string(), s.name(n + 1, s.degen(n, i, x)).to_string()))
        })
    });
    SimpSetDoc {
        truncation: t,
        levels: (0..=t).map(|n| s.names(n).to_vec()).collect(),
        faces: op_table(faces),
        degens: op_table(degens),
    }
}

pub fn sset_from_doc(doc: &SimpSetDoc) -> Result<TruncSimpSet> {
    let t = doc.truncation;
    if doc.levels.len() != t + 1 {
        return Err(Error::InvalidSimplicial(format!("expected {} levels, found {}", t + 1, doc.levels.len())));
    }
    let mut b = SimpSetBuilder::new(t);
    let mut index: Vec<HashMap<&str, usize>> = Vec::new();
    for (n, level) in doc.levels.iter().enumerate() {
        index.push(level.iter().map(|name| (name.as_str(), b.add_simplex(n, name.clone()))).collect());
    }
    let look = |n: usize, name: &str| {
        index
            .get(n)
            .and_then(|m| m.get(name).copied())
            .ok_or_else(|| Error::UnknownSimplex { level: n, name: name.to_string() })
    };
    for (key, table) in &doc.faces {
        let [n, i] = parse_key(key, 2)?[..] else { unreachable!() };
        if n == 0 || n > t || i > n {
            return Err(Error::Json(format!("face key `{key}` out of range")));
        }
        for (x, y) in table {
            b.set_face(n, i, look(n, x)?, look(n - 1, y)?);
        }
    }
    for (key, table) in &doc.degens {
        let [n, i] = parse_key(key, 2)?[..] else { unreachable!() };
        if n >= t || i > n {
            return Err(Error::Json(format!("degeneracy key `{key}` out of range")));
        }
        for (x, y) in table {
            b.set_degen(n, i, look(n, x)?, look(n + 1, y)?);
        }
    }
    b.build()
}

pub fn sset_to_json(s: &TruncSimpSet) -> String {
    pretty(&sset_doc(s))
}

pub fn sset_from_json(s: &str) -> Result<TruncSimpSet> {
    sset_from_doc(&serde_json::from_str(s)?)
}

pub fn bisset_doc(t: &TruncBiSimpSet) -> BiSimpSetDoc {
    let (h, v) = (t.htrunc(), t.vtrunc());
    let cells = |n_range: std::ops::Range<usize>, l_range: std::ops::Range<usize>| {
        n_range.flat_map(move |n| l_range.clone().map(move |l| (n, l)))
    };
    let table = |cells: Vec<(usize, usize)>, count: &dyn Fn(usize, usize) -> usize, op: &dyn Fn(usize, usize, usize, usize) -> (usize, usize, usize)| {
        op_table(cells.into_iter().flat_map(|(n, l)| {
            (0..count(n, l)).flat_map(move |i| {
                t.simplices(n, l).map(move |x| {
                    let (m, k, y) = op(n, l, i, x);
                    (format!("{n},{l},{i}"), t.name(n, l, x).to_string(), t.name(m, k, y).to_string())
                })
            })
        }))
    };
    BiSimpSetDoc {
        htrunc: h,
        vtrunc: v,
        levels: (0..=h)
            .map(|n| (0..=v).map(|l| t.simplices(n, l).map(|x| t.name(n, l, x).to_string()).collect()).collect())
            .collect(),
        hfaces: table(cells(1..h + 1, 0..v + 1).collect(), &|n, _| n + 1, &|n, l, i, x| {
            (n - 1, l, t.hface(n, l, i, x))
        }),
        vfaces: table(cells(0..h + 1, 1..v + 1).collect(), &|_, l| l + 1, &|n, l, i, x| {
            (n, l - 1, t.vface(n, l, i, x))
        }),
        hdegens: table(cells(0..h, 0..v + 1).collect(), &|n, _| n + 1, &|n, l, i, x| {
            (n + 1, l, t.hdegen(n, l, i, x))
        }),
        vdegens: table(cells(0..h + 1, 0..v).collect(), &|_, l| l + 1, &|n, l, i, x| {
            (n, l + 1, t.vdegen(n, l, i, x))
        }),
    }
}

pub fn bisset_from_doc(doc: &BiSimpSetDoc) -> Result<TruncBiSimpSet> {
    let (h, v) = (doc.htrunc, doc.vtrunc);
    if doc.levels.len() != h + 1 || doc.levels.iter().any(|row| row.len() != v + 1) {
        return Err(Error::InvalidBisimplicial(format!("expected a {}×{} grid of levels", h + 1, v + 1)));
    }
    let mut b = BiSimpSetBuilder::new(h, v);
    let mut index: HashMap<(usize, usize), HashMap<&str, usize>> = HashMap::new();
    for (n, row) in doc.levels.iter().enumerate() {
        for (l, level) in row.iter().enumerate() {
            index.insert(
                (n, l),
                level.iter().map(|name| (name.as_str(), b.add_simplex(n, l, name.clone()))).collect(),
            );
        }
    }
    let look = |n: usize, l: usize, name: &str| {
        index
            .get(&(n, l))
            .and_then(|m| m.get(name).copied())
            .ok_or_else(|| Error::UnknownSimplex { level: n, name: format!("{name} (vertical level {l})") })
    };
    type Setter = fn(&mut BiSimpSetBuilder, usize, usize, usize, usize, usize);
    let ops: [(&OpTable, &str, Setter, (isize, isize)); 4] = [
        (&doc.hfaces, "hface", BiSimpSetBuilder::set_hface, (-1, 0)),
        (&doc.vfaces, "vface", BiSimpSetBuilder::set_vface, (0, -1)),
        (&doc.hdegens, "hdegen", BiSimpSetBuilder::set_hdegen, (1, 0)),
        (&doc.vdegens, "vdegen", BiSimpSetBuilder::set_vdegen, (0, 1)),
    ];
    for (tables, what, set, (dn, dl)) in ops {
        for (key, table) in tables {
            let [n, l, i] = parse_key(key, 3)?[..] else { unreachable!() };
            let (m, k) = (n as isize + dn, l as isize + dl);
            let along = if dn != 0 { n } else { l };
            if m < 0 || k < 0 || m as usize > h || k as usize > v || n > h || l > v || i > along {
                return Err(Error::Json(format!("{what} key `{key}` out of range")));
            }
            for (x, y) in table {
                set(&mut b, n, l, i, look(n, l, x)?, look(m as usize, k as usize, y)?);
            }
        }
    }
    b.build()
}

pub fn bisset_to_json(t: &TruncBiSimpSet) -> String {
    pretty(&bisset_doc(t))
}

pub fn bisset_from_json(s: &str) -> Result<TruncBiSimpSet> {
    bisset_from_doc(&serde_json::from_str(s)?)
}

/// Reads any document, telling kinds apart by their keys. Named category
/// references inside functors go through `resolve`.
pub fn parse_document(s: &str, resolve: &dyn Fn(&str) -> Result<FinCategory>) -> Result<Document> {
    let value: Value = serde_json::from_str(s)?;
    let Some(obj) = value.as_object() else {
        return Err(Error::Json("document must be a JSON object".into()));
    };
    let has = |k: &str| obj.contains_key(k);
    let doc = if has("obMap") {
        Document::Functor(functor_from_doc(&serde_json::from_value(value)?, resolve)?)
    } else if has("sets") {
        Document::SetFunctor(setfunctor_from_doc(&serde_json::from_value(value)?, resolve)?)
    } else if has("hfaces") {
        Document::BiSimpSet(bisset_from_doc(&serde_json::from_value(value)?)?)
    } else if has("faces") {
        Document::SimpSet(sset_from_doc(&serde_json::from_value(value)?)?)
    } else if has("objects") {
        Document::Category(category_from_doc(&serde_json::from_value(value)?)?)
    } else {
        return Err(Error::Json("unrecognised document: expected a category, functor, set functor, simplicial or bisimplicial set".into()));
    };
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{find_isomorphism, iso_category, poset_category, product};
    use crate::simpset::{horn, nerve};
    use crate::sspace::{classifying_diagram, e1};
    use crate::Limits;

    #[test]
    fn category_round_trip() {
        for c in [poset_category(2), iso_category(1), product(&poset_category(1), &iso_category(1))] {
            let s = category_to_json(&c);
            let back = category_from_json(&s).unwrap();
            assert_eq!(back, c);
            assert_eq!(category_to_json(&back), s);
        }
    }

    #[test]
    fn hand_written_category_needs_no_unit_laws() {
        let s = r#"{"objects":["a","b"],
            "morphisms":[{"id":"1a","src":"a","tgt":"a"},{"id":"1b","src":"b","tgt":"b"},{"id":"f","src":"a","tgt":"b"}],
            "identities":{"a":"1a","b":"1b"}}"#;
        let c = category_from_json(s).unwrap();
        let f = c.morphism("f").unwrap();
        assert_eq!(c.compose(c.morphism("1b").unwrap(), f), f);
        assert!(find_isomorphism(&c, &poset_category(1), &Limits::default()).unwrap().is_some());
    }

    #[test]
    fn category_errors_carry_witnesses() {
        let missing = r#"{"objects":["a"],"morphisms":[{"id":"1a","src":"a","tgt":"a"},{"id":"e","src":"a","tgt":"a"}],
            "identities":{"a":"1a"}}"#;
        let err = category_from_json(missing).unwrap_err().to_string();
        assert!(err.contains("MissingComposite"), "{err}");
        let syntax = "{\"objects\": [\"a\",]}";
        let err = category_from_json(syntax).unwrap_err().to_string();
        assert!(err.contains("line 1"), "{err}");
        let dangling = r#"{"objects":["a"],"morphisms":[{"id":"1a","src":"a","tgt":"z"}],"identities":{"a":"1a"}}"#;
        assert!(category_from_json(dangling).unwrap_err().to_string().contains("`z`"));
    }

    #[test]
    fn functor_and_setfunctor_round_trip() {
        let c = poset_category(2);
        let f = Functor::constant(&poset_category(1), &c, 2);
        let s = functor_to_json(&f);
        assert_eq!(functor_from_json(&s).unwrap(), f);
        let y = SetFunctor::representable(&c, 0);
        let s = setfunctor_to_json(&y);
        let back = setfunctor_from_json(&s).unwrap();
        assert_eq!(back, y);
        assert_eq!(setfunctor_to_json(&back), s);
    }

    #[test]
    fn named_references_resolve() {
        let s = r#"{"domain":"p0","codomain":"p1","obMap":{"0":"1"}}"#;
        let resolve = |name: &str| match name {
            "p0" => Ok(poset_category(0)),
            "p1" => Ok(poset_category(1)),
            _ => Err(Error::UnknownObject(name.into())),
        };
        let Document::Functor(f) = parse_document(s, &resolve).unwrap() else { panic!() };
        assert_eq!(f.ob(0), 1);
        assert!(functor_from_json(s).is_err());
    }

    #[test]
    fn simplicial_round_trip() {
        for s in [nerve(&iso_category(1), 3), horn(2, 0, 2).unwrap()] {
            let j = sset_to_json(&s);
            let back = sset_from_json(&j).unwrap();
            assert_eq!(back, s);
            assert_eq!(sset_to_json(&back), j);
        }
    }

    #[test]
    fn bisimplicial_round_trip() {
        let cd = classifying_diagram(&iso_category(1), 2, 2, &Limits::default()).unwrap();
        for t in [e1(2, 2), cd] {
            let j = bisset_to_json(&t);
            let back = bisset_from_json(&j).unwrap();
            assert_eq!(back, t);
            assert_eq!(bisset_to_json(&back), j);
        }
    }

    #[test]
    fn documents_are_recognised() {
        let none = |n: &str| no_names(n);
        let c = poset_category(1);
        let kinds = [
            (category_to_json(&c), "category"),
            (functor_to_json(&Functor::identity(&c)), "functor"),
            (setfunctor_to_json(&SetFunctor::representable(&c, 0)), "setfunctor"),
            (sset_to_json(&nerve(&c, 2)), "sset"),
            (bisset_to_json(&e1(1, 1)), "bisset"),
        ];
        for (s, kind) in kinds {
            let d = parse_document(&s, &none).unwrap();
            assert_eq!(d.kind(), kind);
            assert_eq!(d.to_json(), s);
        }
        assert!(parse_document("[]", &none).is_err());
        assert!(parse_document("{\"x\":1}", &none).is_err());
    }

    #[test]
    fn broken_simplicial_tables_are_rejected() {
        let mut doc = sset_doc(&nerve(&poset_category(1), 1));
        doc.faces.get_mut("1,0").unwrap().remove("0-1");
        assert!(sset_from_doc(&doc).is_err());
        let mut doc = sset_doc(&nerve(&poset_category(1), 1));
        doc.faces.insert("2,0".into(), BTreeMap::new());
        assert!(sset_from_doc(&doc).is_err());
    }
}
