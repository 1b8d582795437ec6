use crate::error::{Error, Result};
use crate::fincat::category::{FinCategory, MorId};

/// A category with a wide subcategory of weak equivalences that contains
/// every isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeCategory {
    cat: FinCategory,
    weak: Vec<bool>,
}

impl RelativeCategory {
    pub fn new(cat: FinCategory, weak: Vec<bool>) -> Result<Self> {
        if weak.len() != cat.num_morphisms() {
            return Err(Error::InvalidRelativeCategory("weak-equivalence mask has wrong length".into()));
        }
        for f in cat.morphisms() {
            if !weak[f] && cat.is_iso(f) {
                return Err(Error::InvalidRelativeCategory(format!(
                    "isomorphism `{}` is not weak",
                    cat.morphism_name(f)
                )));
            }
        }
        for (g, f, gf) in cat.composition_triples() {
            if weak[g] && weak[f] && !weak[gf] {
                return Err(Error::InvalidRelativeCategory(format!(
                    "weak maps not closed under composition: `{}` after `{}`",
                    cat.morphism_name(g),
                    cat.morphism_name(f)
                )));
            }
        }
        Ok(RelativeCategory { cat, weak })
    }

    /// `(C, C^core)`: the isomorphisms as weak equivalences.
    pub fn isomorphisms(cat: &FinCategory) -> Self {
        let weak = cat.morphisms().map(|f| cat.is_iso(f)).collect();
        RelativeCategory {
            cat: cat.clone(),
            weak,
        }
    }

    /// Every morphism weak.
    pub fn maximal(cat: &FinCategory) -> Self {
        RelativeCategory {
            cat: cat.clone(),
            weak: vec![true; cat.num_morphisms()],
        }
    }

    /// Weak maps given by name; identities and isomorphisms are added.
    pub fn generated_by(cat: &FinCategory, names: &[&str]) -> Result<Self> {
        let mut weak: Vec<bool> = cat.morphisms().map(|f| cat.is_iso(f)).collect();
        for n in names {
            weak[cat.morphism(n)?] = true;
        }
        RelativeCategory::new(cat.clone(), weak)
    }

    pub fn category(&self) -> &FinCategory {
        &self.cat
    }

    pub fn is_weak(&self, f: MorId) -> bool {
        self.weak[f]
    }

    pub fn weak_mask(&self) -> &[bool] {
        &self.weak
    }
}
