use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

pub type ObId = usize;
pub type MorId = usize;

/// A finite category given by explicit tables.
///
/// `comp(g, f)` is "g after f" and is defined exactly when `tgt(f) == src(g)`.
/// The value is cheap to clone; the tables are shared.
#[derive(Clone)]
pub struct FinCategory {
    inner: Arc<CatData>,
}

struct CatData {
    objects: Vec<String>,
    morphisms: Vec<String>,
    src: Vec<ObId>,
    tgt: Vec<ObId>,
    ident: Vec<Option<MorId>>,
    comp: HashMap<(MorId, MorId), MorId>,
    ob_index: HashMap<String, ObId>,
    mor_index: HashMap<String, MorId>,
    hom: HashMap<(ObId, ObId), Vec<MorId>>,
    out: Vec<Vec<MorId>>,
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return true;
        }
        let (a, b) = (&*self.inner, &*other.inner);
        a.objects == b.objects
            && a.morphisms == b.morphisms
            && a.src == b.src
            && a.tgt == b.tgt
            && a.ident == b.ident
            && a.comp == b.comp
    }
}

impl Eq for FinCategory {}

impl fmt::Debug for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinCategory")
            .field("objects", &self.inner.objects)
            .field("morphisms", &self.inner.morphisms.len())
            .finish()
    }
}

impl FinCategory {
    pub fn num_objects(&self) -> usize {
        self.inner.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.inner.morphisms.len()
    }

    pub fn objects(&self) -> std::ops::Range<ObId> {
        0..self.num_objects()
    }

    pub fn morphisms(&self) -> std::ops::Range<MorId> {
        0..self.num_morphisms()
    }

    pub fn object_name(&self, x: ObId) -> &str {
        &self.inner.objects[x]
    }

    pub fn morphism_name(&self, f: MorId) -> &str {
        &self.inner.morphisms[f]
    }

    pub fn object_names(&self) -> &[String] {
        &self.inner.objects
    }

    pub fn morphism_names(&self) -> &[String] {
        &self.inner.morphisms
    }

    pub fn object(&self, name: &str) -> Result<ObId> {
        self.inner
            .ob_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn morphism(&self, name: &str) -> Result<MorId> {
        self.inner
            .mor_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownMorphism(name.to_string()))
    }

    pub fn src(&self, f: MorId) -> ObId {
        self.inner.src[f]
    }

    pub fn tgt(&self, f: MorId) -> ObId {
        self.inner.tgt[f]
    }

    /// Identity of `x`. Panics only on tables that failed structural
    /// validation, which the checked constructors never produce.
    pub fn ident(&self, x: ObId) -> MorId {
        self.inner.ident[x].expect("identity table is total")
    }

    pub fn try_ident(&self, x: ObId) -> Option<MorId> {
        self.inner.ident[x]
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.inner.ident[self.src(f)] == Some(f)
    }

    /// `g ∘ f`, when defined in the table.
    pub fn comp(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.inner.comp.get(&(g, f)).copied()
    }

    /// `g ∘ f` for a composable pair of a valid category.
    pub fn compose(&self, g: MorId, f: MorId) -> MorId {
        self.comp(g, f)
            .unwrap_or_else(|| panic!("composite of {} after {} undefined", self.morphism_name(g), self.morphism_name(f)))
    }

    pub fn hom(&self, x: ObId, y: ObId) -> &[MorId] {
        self.inner.hom.get(&(x, y)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn out_of(&self, x: ObId) -> &[MorId] {
        &self.inner.out[x]
    }

    pub(crate) fn comp_table(&self) -> &HashMap<(MorId, MorId), MorId> {
        &self.inner.comp
    }

    /// Two-sided inverse of `f`, if any.
    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        let (x, y) = (self.src(f), self.tgt(f));
        self.hom(y, x).iter().copied().find(|&g| {
            self.comp(g, f) == self.try_ident(x) && self.comp(f, g) == self.try_ident(y)
        })
    }

    pub fn is_iso(&self, f: MorId) -> bool {
        self.inverse(f).is_some()
    }

    pub fn is_groupoid(&self) -> bool {
        self.morphisms().all(|f| self.is_iso(f))
    }

    /// Only identity morphisms.
    pub fn is_discrete(&self) -> bool {
        self.morphisms().all(|f| self.is_identity(f))
    }

    /// Composable triples `(g, f, g∘f)` in a deterministic order.
    pub fn composition_triples(&self) -> Vec<(MorId, MorId, MorId)> {
        let mut triples: Vec<_> = self
            .inner
            .comp
            .iter()
            .map(|(&(g, f), &h)| (g, f, h))
            .collect();
        triples.sort_unstable();
        triples
    }

    pub fn validate(&self) -> ValidationReport {
        validate_category(self)
    }
}

/// Incremental constructor for [`FinCategory`].
#[derive(Default, Clone)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<String>,
    src: Vec<ObId>,
    tgt: Vec<ObId>,
    ident: Vec<Option<MorId>>,
    comp: HashMap<(MorId, MorId), MorId>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_object(&mut self, name: impl Into<String>) -> ObId {
        self.objects.push(name.into());
        self.ident.push(None);
        self.objects.len() - 1
    }

    pub fn add_morphism(&mut self, name: impl Into<String>, src: ObId, tgt: ObId) -> MorId {
        self.morphisms.push(name.into());
        self.src.push(src);
        self.tgt.push(tgt);
        self.morphisms.len() - 1
    }

    /// Adds an object together with its identity morphism and `id ∘ id = id`.
    pub fn add_object_with_identity(
        &mut self,
        name: impl Into<String>,
        ident: impl Into<String>,
    ) -> ObId {
        let x = self.add_object(name);
        let i = self.add_morphism(ident, x, x);
        self.set_identity(x, i);
        x
    }

    pub fn set_identity(&mut self, x: ObId, f: MorId) {
        self.ident[x] = Some(f);
        self.comp.insert((f, f), f);
    }

    pub fn set_comp(&mut self, g: MorId, f: MorId, gf: MorId) {
        self.comp.insert((g, f), gf);
    }

    /// Fills `id ∘ f = f = f ∘ id` for every morphism whose endpoints have
    /// identities.
    pub fn fill_unit_laws(&mut self) {
        for f in 0..self.morphisms.len() {
            if let Some(i) = self.ident[self.tgt[f]] {
                self.comp.insert((i, f), f);
            }
            if let Some(i) = self.ident[self.src[f]] {
                self.comp.insert((f, i), f);
            }
        }
    }

    pub fn morphism_src(&self, f: MorId) -> ObId {
        self.src[f]
    }

    pub fn morphism_tgt(&self, f: MorId) -> ObId {
        self.tgt[f]
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    /// Builds without checking the axioms; use [`validate_category`] on the
    /// result. Tables are still indexed, so only in-range ids are allowed.
    pub fn build_unchecked(self) -> FinCategory {
        let ob_index = self
            .objects
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let mor_index = self
            .morphisms
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let mut hom: HashMap<(ObId, ObId), Vec<MorId>> = HashMap::new();
        let mut out = vec![Vec::new(); self.objects.len()];
        for f in 0..self.morphisms.len() {
            hom.entry((self.src[f], self.tgt[f])).or_default().push(f);
            out[self.src[f]].push(f);
        }
        FinCategory {
            inner: Arc::new(CatData {
                objects: self.objects,
                morphisms: self.morphisms,
                src: self.src,
                tgt: self.tgt,
                ident: self.ident,
                comp: self.comp,
                ob_index,
                mor_index,
                hom,
                out,
            }),
        }
    }

    /// Builds and validates every category axiom.
    pub fn build(self) -> Result<FinCategory> {
        let c = self.build_unchecked();
        let report = validate_category(&c);
        if report.is_valid() {
            Ok(c)
        } else {
            Err(Error::InvalidCategory(report.summary()))
        }
    }
}

/// Problems that prevent axiom checking altogether.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StructuralError {
    DuplicateObject { name: String },
    DuplicateMorphism { name: String },
    DanglingObject { morphism: String, object: String },
    DanglingMorphism { context: String, morphism: String },
    MissingIdentity { object: String },
}

/// A violated category axiom together with the witnessing tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    /// `src(id x) = tgt(id x) = x` fails.
    IdentityEndpoints { object: String, identity: String },
    /// `g ∘ f` is composable but absent from the table.
    MissingComposite { g: String, f: String },
    /// The table defines `g ∘ f` although `tgt f ≠ src g`.
    SpuriousComposite { g: String, f: String },
    /// `src(g∘f) = src f` or `tgt(g∘f) = tgt g` fails.
    SourceTarget { g: String, f: String, composite: String },
    LeftUnit { f: String },
    RightUnit { f: String },
    Associativity { h: String, g: String, f: String },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub structural: Vec<StructuralError>,
    pub violations: Vec<AxiomViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.structural.is_empty() && self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        let mut parts: Vec<String> = self
            .structural
            .iter()
            .map(|e| format!("{e:?}"))
            .collect();
        parts.extend(self.violations.iter().map(|v| format!("{v:?}")));
        parts.join("; ")
    }
}

/// Checks identity endpoints, composite endpoints, unit laws and
/// associativity by enumeration. The report lists every violation with a
/// witness; it is empty iff `c` is a category.
pub fn validate_category(c: &FinCategory) -> ValidationReport {
    let mut report = ValidationReport::default();
    for x in c.objects() {
        match c.try_ident(x) {
            None => report.structural.push(StructuralError::MissingIdentity {
                object: c.object_name(x).to_string(),
            }),
            Some(i) if c.src(i) != x || c.tgt(i) != x => {
                report.violations.push(AxiomViolation::IdentityEndpoints {
                    object: c.object_name(x).to_string(),
                    identity: c.morphism_name(i).to_string(),
                })
            }
            _ => {}
        }
    }
    if !report.structural.is_empty() {
        return report;
    }
    let name = |f: MorId| c.morphism_name(f).to_string();

    // composite table: totality, spurious entries, endpoints
    let mut well_typed: HashMap<(MorId, MorId), MorId> = HashMap::new();
    for f in c.morphisms() {
        for &g in c.out_of(c.tgt(f)) {
            match c.comp(g, f) {
                None => report.violations.push(AxiomViolation::MissingComposite {
                    g: name(g),
                    f: name(f),
                }),
                Some(h) => {
                    if c.src(h) != c.src(f) || c.tgt(h) != c.tgt(g) {
                        report.violations.push(AxiomViolation::SourceTarget {
                            g: name(g),
                            f: name(f),
                            composite: name(h),
                        });
                    } else {
                        well_typed.insert((g, f), h);
                    }
                }
            }
        }
    }
    let mut spurious: Vec<_> = c
        .comp_table()
        .keys()
        .filter(|&&(g, f)| c.tgt(f) != c.src(g))
        .copied()
        .collect();
    spurious.sort_unstable();
    for (g, f) in spurious {
        report.violations.push(AxiomViolation::SpuriousComposite {
            g: name(g),
            f: name(f),
        });
    }

    for f in c.morphisms() {
        let (x, y) = (c.src(f), c.tgt(f));
        let (ix, iy) = (c.ident(x), c.ident(y));
        if let Some(&h) = well_typed.get(&(iy, f)) {
            if h != f {
                report.violations.push(AxiomViolation::LeftUnit { f: name(f) });
            }
        }
        if let Some(&h) = well_typed.get(&(f, ix)) {
            if h != f {
                report.violations.push(AxiomViolation::RightUnit { f: name(f) });
            }
        }
    }

    // associativity over composable triples; composites that are missing
    // or ill-typed were already reported above
    for f in c.morphisms() {
        for &g in c.out_of(c.tgt(f)) {
            let Some(&gf) = well_typed.get(&(g, f)) else {
                continue;
            };
            for &h in c.out_of(c.tgt(g)) {
                let Some(&hg) = well_typed.get(&(h, g)) else {
                    continue;
                };
                let (Some(&l), Some(&r)) = (well_typed.get(&(h, gf)), well_typed.get(&(hg, f)))
                else {
                    continue;
                };
                if l != r {
                    report.violations.push(AxiomViolation::Associativity {
                        h: name(h),
                        g: name(g),
                        f: name(f),
                    });
                }
            }
        }
    }
    report
}
