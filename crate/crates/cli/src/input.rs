use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use sscat_core::fincat::FinCategory;
use sscat_core::fixtures::{self, FixtureOptions};
use sscat_core::io::{self, CategoryDoc, Document};
use sscat_core::Limits;

/// Where a document comes from: stdin (`-` or no argument), a file, or a
/// fixture name.
pub fn read_source(arg: Option<&str>) -> Result<Option<(String, String)>> {
    match arg {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(Some(("<stdin>".into(), s)))
        }
        Some(p) if Path::new(p).is_file() => {
            let s = std::fs::read_to_string(p).with_context(|| format!("reading {p}"))?;
            Ok(Some((p.to_string(), s)))
        }
        Some(_) => Ok(None),
    }
}

fn resolve(name: &str) -> sscat_core::Result<FinCategory> {
    fixtures::category(name)
}

pub fn load(arg: Option<&str>, opts: FixtureOptions, limits: &Limits) -> Result<Document> {
    match read_source(arg)? {
        Some((origin, text)) => io::parse_document(&text, &resolve).with_context(|| format!("loading {origin}")),
        None => {
            let name = arg.expect("named input");
            fixtures::build(name, opts, limits).map_err(anyhow::Error::from)
        }
    }
}

/// A category without running the axiom checks, for `check category`.
pub fn load_category_unchecked(arg: Option<&str>, opts: FixtureOptions, limits: &Limits) -> Result<FinCategory> {
    match read_source(arg)? {
        Some((origin, text)) => {
            let doc: CategoryDoc =
                serde_json::from_str(&text).map_err(sscat_core::Error::from).with_context(|| format!("loading {origin}"))?;
            Ok(io::category_from_doc_unchecked(&doc)?)
        }
        None => match load(arg, opts, limits)? {
            Document::Category(c) => Ok(c),
            d => bail!("expected a category, found a {}", d.kind()),
        },
    }
}
