//! `sscat`: build, validate, check and export finite categories, simplicial
//! sets and simplicial spaces.
//!
//! Exit codes: 0 positive verdict, 1 negative verdict, 2 invalid input or
//! usage, 3 enumeration bound exceeded, 4 outside the decidable regime.

mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use sscat_core::colim_adj::{
    colimit, final_objects, initial_objects, left_adjoint_via_comma, right_adjoint_via_comma, AdjointSearch,
};
use sscat_core::dot::category_to_dot;
use sscat_core::fibrations::{grothendieck, is_cocartesian_fibration, is_cofibered_in_sets, left_fibration_comparison};
use sscat_core::fincat::{validate_category, FinCategory};
use sscat_core::fixtures::{self, FixtureOptions};
use sscat_core::io::Document;
use sscat_core::limits::DEFAULT_MAX_ENUMERATION;
use sscat_core::simpset::{category_from_segal, classify_fibration, delta, nerve, nerve_map, segal_check, SimpMap};
use sscat_core::sspace::{classifying_diagram, completeness_check, homotopy_category, segal_space_check};
use sscat_core::{Error, Limits};

use crate::report::Report;

#[derive(Parser)]
#[command(name = "sscat")]
#[command(about = "Finite categories, simplicial sets and simplicial spaces: build, check, compute, export")]
#[command(version)]
struct Cli {
    /// Simplicial truncation (horizontal for simplicial spaces)
    #[arg(long, global = true, default_value_t = 3)]
    trunc: usize,

    /// Vertical truncation for simplicial spaces
    #[arg(long, global = true, default_value_t = 2)]
    vtrunc: usize,

    /// Highest horn dimension checked by `check kan`
    #[arg(long, global = true)]
    upto: Option<usize>,

    /// Bound on candidates examined by one exhaustive search
    #[arg(long, global = true, env = "SSCAT_MAX_ENUM", default_value_t = DEFAULT_MAX_ENUMERATION)]
    max_enum: u64,

    /// Write the output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a document
    Validate {
        /// File, fixture name, or `-` for stdin (the default)
        input: Option<String>,
    },
    /// Build a fixture and print its canonical JSON
    Build {
        /// delta, boundary, horn, spine, poset, I, F, G, E1, Z2, B2, ...
        constructor: String,
        /// Numeric arguments, e.g. `horn 2 0`
        args: Vec<String>,
    },
    /// Decide a property; exit code 0 iff it holds
    Check {
        kind: CheckKind,
        input: Option<String>,
    },
    /// Compute a derived object or a universal construction
    Compute {
        kind: ComputeKind,
        input: Option<String>,
        /// For `adjoint`: which adjoint of the input to search for
        #[arg(long, value_enum, default_value_t = Side::Right)]
        side: Side,
    },
    /// Export a document
    Export {
        format: Format,
        input: Option<String>,
        /// DOT only: drop composites of two non-invertible morphisms
        #[arg(long)]
        generators: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Category,
    Segal,
    Kan,
    Complete,
    Leftfib,
    Cocart,
    Cofibered,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComputeKind {
    Nerve,
    Classify,
    Ho,
    Grothendieck,
    Colimit,
    Adjoint,
    Initial,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

/// What a command prints, and its verdict if it has one.
enum Output {
    Report(Report),
    Text(String),
}

struct Ctx {
    opts: FixtureOptions,
    limits: Limits,
    upto: Option<usize>,
}

impl Ctx {
    fn load(&self, input: Option<&str>) -> Result<Document> {
        input::load(input, self.opts, &self.limits)
    }

    fn category(&self, input: Option<&str>) -> Result<FinCategory> {
        match self.load(input)? {
            Document::Category(c) => Ok(c),
            d => bail!("expected a category, found a {}", d.kind()),
        }
    }

    fn functor(&self, input: Option<&str>) -> Result<sscat_core::fincat::Functor> {
        match self.load(input)? {
            Document::Functor(f) => Ok(f),
            d => bail!("expected a functor, found a {}", d.kind()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        opts: FixtureOptions {
            trunc: cli.trunc,
            vtrunc: cli.vtrunc,
        },
        limits: Limits::new(cli.max_enum),
        upto: cli.upto,
    };
    let result = run(&cli.command, &ctx).and_then(|out| {
        let (text, code) = match out {
            Output::Report(r) => (r.render(), if r.verdict { 0 } else { 1 }),
            Output::Text(t) => (t, 0),
        };
        match &cli.out {
            Some(path) => std::fs::write(path, text)?,
            None => print!("{text}"),
        }
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let (code, kind) = classify(&e);
            eprintln!("error: {e:#}");
            let body = json!({
                "schema_version": report::SCHEMA_VERSION,
                "error": { "kind": kind, "message": format!("{e:#}") },
            });
            println!("{}", serde_json::to_string_pretty(&body).expect("reports serialize"));
            ExitCode::from(code)
        }
    }
}

fn classify(e: &anyhow::Error) -> (u8, &'static str) {
    match e.chain().find_map(|c| c.downcast_ref::<Error>()) {
        Some(Error::EnumerationBound { .. }) => (3, "enumeration_bound"),
        Some(Error::Undecidable(_)) => (4, "undecidable"),
        Some(Error::TruncationTooSmall { .. }) => (4, "truncation_too_small"),
        _ => (2, "invalid_input"),
    }
}

fn run(cmd: &Command, ctx: &Ctx) -> Result<Output> {
    match cmd {
        Command::Validate { input } => validate(ctx, input.as_deref()),
        Command::Build { constructor, args } => {
            let name = if args.is_empty() {
                constructor.clone()
            } else {
                format!("{constructor}{}", args.join("_"))
            };
            Ok(Output::Text(fixtures::build(&name, ctx.opts, &ctx.limits)?.to_json()))
        }
        Command::Check { kind, input } => check(ctx, *kind, input.as_deref()).map(Output::Report),
        Command::Compute { kind, input, side } => compute(ctx, *kind, input.as_deref(), *side),
        Command::Export {
            format,
            input,
            generators,
        } => export(ctx, *format, input.as_deref(), *generators),
    }
}

fn validate(ctx: &Ctx, input: Option<&str>) -> Result<Output> {
    let doc = match ctx.load(input) {
        Ok(doc) => doc,
        Err(e) if classify(&e).0 == 2 => {
            let r = Report::new("validate", false, json!({ "errors": [format!("{e:#}")] }));
            return Ok(Output::Report(r));
        }
        Err(e) => return Err(e),
    };
    let sizes = match &doc {
        Document::Category(c) => json!({ "objects": c.num_objects(), "morphisms": c.num_morphisms() }),
        Document::Functor(f) => json!({
            "domain": [f.domain().num_objects(), f.domain().num_morphisms()],
            "codomain": [f.codomain().num_objects(), f.codomain().num_morphisms()],
        }),
        Document::SetFunctor(f) => {
            json!({ "sets": f.domain().objects().map(|x| f.size(x)).collect::<Vec<_>>() })
        }
        Document::SimpSet(s) => json!({ "levels": s.sizes() }),
        Document::BiSimpSet(t) => json!({ "levels": t.sizes() }),
    };
    Ok(Output::Report(Report::new("validate", true, json!({ "kind": doc.kind(), "sizes": sizes }))))
}

fn check(ctx: &Ctx, kind: CheckKind, input: Option<&str>) -> Result<Report> {
    let limits = &ctx.limits;
    let report = match kind {
        CheckKind::Category => {
            let c = input::load_category_unchecked(input, ctx.opts, limits)?;
            let r = validate_category(&c);
            Report::new("check category", r.is_valid(), json!({ "report": r }))
        }
        CheckKind::Segal => match ctx.load(input)? {
            Document::SimpSet(s) => {
                let r = segal_check(&s)?;
                Report::new("check segal", r.passes(), report::segal(&r))
            }
            Document::Category(c) => {
                let r = segal_check(&nerve(&c, ctx.opts.trunc))?;
                Report::new("check segal", r.passes(), report::segal(&r))
            }
            Document::BiSimpSet(t) => {
                let v = segal_space_check(&t)?;
                Report::new("check segal", v.passes(), report::segal_space(&v))
            }
            d => bail!("cannot check the Segal condition on a {}", d.kind()),
        },
        CheckKind::Kan => {
            let x = match ctx.load(input)? {
                Document::SimpSet(s) => s,
                Document::Category(c) => nerve(&c, ctx.opts.trunc),
                d => bail!("cannot check the Kan condition on a {}", d.kind()),
            };
            let upto = ctx.upto.unwrap_or(2).min(x.truncation());
            let point = delta(0, x.truncation());
            let p = SimpMap::to_terminal(&x, &point)?;
            let r = classify_fibration(&p, upto, limits)?;
            Report::new("check kan", r.kan_fibration, report::fibration(&r))
        }
        CheckKind::Complete => {
            let w = match ctx.load(input)? {
                Document::BiSimpSet(t) => t,
                Document::Category(c) => classifying_diagram(&c, ctx.opts.trunc, ctx.opts.vtrunc, limits)?,
                d => bail!("cannot check completeness of a {}", d.kind()),
            };
            let r = completeness_check(&w)?;
            Report::new("check complete", r.complete, report::completeness(&r))
        }
        CheckKind::Leftfib => {
            let p = ctx.functor(input)?;
            let cmp = left_fibration_comparison(&nerve_map(&p, 1))?;
            Report::new("check leftfib", cmp.bijective(), json!({ "comparison": cmp }))
        }
        CheckKind::Cocart => {
            let p = ctx.functor(input)?;
            let (d, c) = (p.domain(), p.codomain());
            let v = is_cocartesian_fibration(&p)?;
            let detail = match (v.structure(), v.missing()) {
                (Some(s), _) => {
                    let lifts: Vec<_> = s
                        .lifts
                        .iter()
                        .map(|l| {
                            json!({
                                "morphism": c.morphism_name(l.morphism),
                                "source": d.object_name(l.source),
                                "lifts": l.lifts.iter().map(|&g| d.morphism_name(g)).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    json!({ "lifts": lifts })
                }
                (None, Some(m)) => json!({
                    "missing": { "morphism": c.morphism_name(m.morphism), "source": d.object_name(m.source) },
                }),
                (None, None) => unreachable!("a verdict is a structure or a missing lift"),
            };
            Report::new("check cocart", v.is_fibration(), detail)
        }
        CheckKind::Cofibered => {
            let p = match ctx.load(input)? {
                Document::Functor(p) => p,
                Document::SetFunctor(f) => grothendieck(&f).1,
                d => bail!("cannot check a {} for being cofibered", d.kind()),
            };
            let r = is_cofibered_in_sets(&p);
            Report::new("check cofibered", r.verdict, json!({ "failures": r.failures }))
        }
    };
    Ok(report)
}

fn compute(ctx: &Ctx, kind: ComputeKind, input: Option<&str>, side: Side) -> Result<Output> {
    let limits = &ctx.limits;
    let out = match kind {
        ComputeKind::Nerve => Output::Text(Document::SimpSet(nerve(&ctx.category(input)?, ctx.opts.trunc)).to_json()),
        ComputeKind::Classify => {
            let c = ctx.category(input)?;
            let t = classifying_diagram(&c, ctx.opts.trunc, ctx.opts.vtrunc, limits)?;
            Output::Text(Document::BiSimpSet(t).to_json())
        }
        ComputeKind::Ho => Output::Text(Document::Category(homotopy(ctx.load(input)?)?).to_json()),
        ComputeKind::Grothendieck => match ctx.load(input)? {
            Document::SetFunctor(f) => Output::Text(Document::Functor(grothendieck(&f).1).to_json()),
            d => bail!("the Grothendieck construction needs a set functor, found a {}", d.kind()),
        },
        ComputeKind::Colimit => {
            let f = ctx.functor(input)?;
            let r = match colimit(&f, limits)? {
                Some(k) => Report::new("compute colimit", true, json!({ "colimit": report::cocone(&k) })),
                None => Report::new("compute colimit", false, json!({ "colimit": null })),
            };
            Output::Report(r)
        }
        ComputeKind::Adjoint => {
            let f = ctx.functor(input)?;
            let (search, found, cat) = match side {
                Side::Right => (left_adjoint_via_comma(&f, limits)?, "right", f.codomain().clone()),
                Side::Left => (right_adjoint_via_comma(&f, limits)?, "left", f.domain().clone()),
            };
            let r = match search {
                AdjointSearch::Found(cert) => Report::new("compute adjoint", true, report::adjunction(&cert, found)),
                AdjointSearch::Missing(y) => Report::new(
                    "compute adjoint",
                    false,
                    json!({ "found": null, "no_universal_arrow_at": cat.object_name(y) }),
                ),
            };
            Output::Report(r)
        }
        ComputeKind::Initial => {
            let c = ctx.category(input)?;
            let names = |v: Vec<usize>| v.into_iter().map(|x| c.object_name(x).to_string()).collect::<Vec<_>>();
            let initial = names(initial_objects(&c)?);
            let terminal = names(final_objects(&c)?);
            let r = Report::new(
                "compute initial",
                !initial.is_empty(),
                json!({ "initial": initial, "final": terminal }),
            );
            Output::Report(r)
        }
    };
    Ok(out)
}

/// The homotopy category of a Segal space, or of a Segal simplicial set.
fn homotopy(doc: Document) -> Result<FinCategory> {
    Ok(match doc {
        Document::Category(c) => c,
        Document::SimpSet(s) => category_from_segal(&s)?,
        Document::BiSimpSet(t) => homotopy_category(&t)?,
        d => bail!("no homotopy category for a {}", d.kind()),
    })
}

fn export(ctx: &Ctx, format: Format, input: Option<&str>, generators: bool) -> Result<Output> {
    let doc = ctx.load(input)?;
    Ok(Output::Text(match format {
        Format::Json => doc.to_json(),
        Format::Dot => {
            let name = input.unwrap_or("stdin").to_string();
            category_to_dot(&homotopy(doc)?, &name, generators)
        }
    }))
}
