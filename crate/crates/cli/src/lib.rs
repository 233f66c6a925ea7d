//! Command-line front end: catalog of groups, input documents, reports.

pub mod catalog;
pub mod document;
pub mod error;
pub mod examples;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::document::{Document, Format, Loaded};
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "sullivan",
    version,
    about = "Rational homotopy of group actions: models, cohomology, Borel maps"
)]
pub struct Cli {
    /// Highest degree in which cohomology is computed; overrides the document.
    #[arg(long, global = true)]
    pub cutoff: Option<u32>,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    /// Pretty JSON.
    Structured,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Groups, embeddings and examples shipped with the tool.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Sullivan models of the input.
    Model {
        #[command(subcommand)]
        action: ModelAction,
    },
    /// Betti numbers and representatives.
    Cohomology { input: String },
    /// Rank criterion against direct computation.
    Check {
        #[command(subcommand)]
        context: CheckContext,
    },
    /// Rational K-theory, from a document or from Betti numbers.
    Ktheory(KtheoryArgs),
    /// Everything, for any document kind.
    Report { input: String },
    /// The resolved, self-contained form of a document.
    Normalize { input: String },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    /// A group's rational data.
    Show {
        name: String,
    },
    /// The text of a named example.
    Example {
        name: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum ModelAction {
    Build { input: String },
}

#[derive(Debug, Subcommand)]
pub enum CheckContext {
    /// `G/H`, from a document or from catalog names.
    Homogeneous(HomogeneousArgs),
    Biquotient {
        input: String,
    },
    Coho1 {
        input: String,
    },
    AlmostFree {
        input: String,
    },
}

#[derive(Debug, Args)]
pub struct HomogeneousArgs {
    #[arg(required_unless_present_all = ["group", "subgroup", "embedding"])]
    pub input: Option<String>,
    #[arg(long, requires_all = ["subgroup", "embedding"], conflicts_with = "input")]
    pub group: Option<String>,
    #[arg(long)]
    pub subgroup: Option<String>,
    #[arg(long)]
    pub embedding: Option<String>,
}

#[derive(Debug, Args)]
pub struct KtheoryArgs {
    #[arg(required_unless_present = "betti")]
    pub input: Option<String>,
    /// Comma-separated Betti numbers from degree 0.
    #[arg(long, value_delimiter = ',', conflicts_with = "input")]
    pub betti: Option<Vec<usize>>,
}

fn emit<T: Serialize>(
    value: &T,
    format: OutputFormat,
    text: impl FnOnce(&T) -> String,
) -> Result<String, CliError> {
    match format {
        OutputFormat::Text => Ok(text(value)),
        OutputFormat::Structured => {
            let mut s = serde_json::to_string_pretty(value)
                .map_err(|e| CliError::Computation(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
    }
}

fn expect_kind(l: &Loaded, kind: &str) -> Result<(), CliError> {
    if l.document.kind() == kind {
        Ok(())
    } else {
        Err(CliError::Validation(format!(
            "expected a `{kind}` document, found `{}`",
            l.document.kind()
        )))
    }
}

fn homogeneous_text(group: &str, subgroup: &str, embedding: &str) -> String {
    format!(
        "kind = \"homogeneous\"\nG = \"{group}\"\nH = \"{subgroup}\"\n\n[embeddings.G_H]\nsource = \"G\"\ntarget = \"H\"\nkind = \"{embedding}\"\n"
    )
}

fn report_for(l: &Loaded, format: OutputFormat) -> Result<String, CliError> {
    let r = report::analyze(l)?;
    emit(&r, format, report::render_report)
}

/// Runs a parsed command line, returning what should be printed.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let cutoff = cli.cutoff;
    let fmt = cli.format;
    let load = |input: &str| document::load_source(input, cutoff);
    match &cli.command {
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                #[derive(Serialize)]
                struct Listing {
                    groups: Vec<(String, String)>,
                    embeddings: Vec<(String, String)>,
                    examples: Vec<(String, String)>,
                }
                let pairs = |xs: &[(&str, &str)]| {
                    xs.iter()
                        .map(|(a, b)| (a.to_string(), b.to_string()))
                        .collect()
                };
                let listing = Listing {
                    groups: catalog::list(),
                    embeddings: pairs(catalog::EMBEDDINGS),
                    examples: pairs(examples::NAMES),
                };
                emit(&listing, fmt, |l| {
                    let mut out = String::new();
                    for (title, xs) in [
                        ("groups", &l.groups),
                        ("embeddings", &l.embeddings),
                        ("examples", &l.examples),
                    ] {
                        out += &format!("{title}:\n");
                        for (n, about) in xs {
                            out += &format!("  {n:<20} {about}\n");
                        }
                    }
                    out
                })
            }
            CatalogAction::Show { name } => {
                let g = catalog::group(name)?;
                emit(&g, fmt, |g| {
                    format!(
                        "{}: rank {}, dimension {}\n  H*(G) exterior in degrees {:?}\n  H*(BG) = Q[{}] in degrees {:?}\n  connected {}, pi1 torsion-free {}, steinberg {}\n",
                        g.name,
                        g.rank,
                        g.dimension,
                        g.exterior_degrees,
                        g.generators.join(", "),
                        g.classifying_degrees(),
                        g.flags.connected,
                        g.flags.pi1_torsion_free,
                        g.flags.steinberg
                    )
                })
            }
            CatalogAction::Example { name } => examples::text(name)
                .ok_or_else(|| CliError::UnknownCatalogName(format!("example `{name}`"))),
        },
        Command::Model {
            action: ModelAction::Build { input },
        } => {
            let m = report::build_models(&load(input)?)?;
            emit(&m, fmt, report::render_models)
        }
        Command::Cohomology { input } => {
            let c = report::cohomology(&load(input)?)?;
            emit(&c, fmt, report::render_cohomology)
        }
        Command::Check { context } => {
            let (l, kind) = match context {
                CheckContext::Homogeneous(a) => {
                    let l = match (&a.input, &a.group, &a.subgroup, &a.embedding) {
                        (Some(input), _, _, _) => load(input)?,
                        (None, Some(g), Some(h), Some(e)) => {
                            document::load(&homogeneous_text(g, h, e), Format::Toml, cutoff)?
                        }
                        _ => {
                            return Err(CliError::Validation(
                                "give a document or --group, --subgroup and --embedding".into(),
                            ))
                        }
                    };
                    (l, "homogeneous")
                }
                CheckContext::Biquotient { input } => (load(input)?, "biquotient"),
                CheckContext::Coho1 { input } => (load(input)?, "coho1"),
                CheckContext::AlmostFree { input } => (load(input)?, "almost_free"),
            };
            expect_kind(&l, kind)?;
            report_for(&l, fmt)
        }
        Command::Ktheory(a) => {
            let k = match (&a.input, &a.betti) {
                (_, Some(b)) => report::ktheory_from_betti(b),
                (Some(input), None) => report::ktheory(&load(input)?)?,
                (None, None) => {
                    return Err(CliError::Validation("give a document or --betti".into()))
                }
            };
            emit(&k, fmt, report::render_k)
        }
        Command::Report { input } => report_for(&load(input)?, fmt),
        Command::Normalize { input } => {
            let l = load(input)?;
            let out = match fmt {
                OutputFormat::Text => Format::Toml,
                OutputFormat::Structured => Format::Json,
            };
            let mut s = document::serialize(&l.document, out)?;
            if !s.ends_with('\n') {
                s.push('\n');
            }
            Ok(s)
        }
    }
}

/// The normalized document of an input, for callers that only need it.
pub fn normalized(input: &str, cutoff: Option<u32>) -> Result<Document, CliError> {
    Ok(document::load_source(input, cutoff)?.document)
}
