use std::io::IsTerminal;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use bsemi_core::census::run_census_with_progress;
use bsemi_core::nerve::{nerve_fits, DEFAULT_CELL_CAP};
use bsemi_core::table::{cyclic_group, join, rectangular_band, rees_matrix, trivial};
use bsemi_core::{
    abelianization, fixtures, get_homology_with_caps, group_completion, min_ideal, nerve_homology,
    Error, FinAbGroup, ResolutionCaps, SemigroupTable,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "bsemi", version, about = "Homology and structure of finite semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a table file is a well-formed associative table.
    Validate { file: PathBuf },
    /// Summarize the table and its minimal ideal.
    Info {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Group completion and its abelianization.
    Gs {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Integral homology H_1..H_m of the classifying space.
    Homology {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_dim: usize,
        #[arg(long, value_enum, default_value_t = Method::Resolution)]
        method: Method,
        #[arg(long)]
        json: bool,
        /// Upper bound on resolution nodes.
        #[arg(long)]
        max_nodes: Option<usize>,
    },
    /// Print a table built from a recipe.
    Construct {
        #[command(subcommand)]
        recipe: Recipe,
    },
    /// Homology signatures of every semigroup of a small order.
    Census {
        #[arg(long)]
        order: usize,
        /// Allow order 4.
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Resolution,
    Nerve,
    /// Resolution, cross-checked against the nerve when it is small enough.
    Auto,
}

#[derive(Subcommand)]
enum Recipe {
    /// The one-element semigroup.
    Trivial,
    /// Rectangular band with a rows and b columns.
    Rect { a: usize, b: usize },
    /// Cyclic group of order k.
    Cyclic { k: usize },
    /// J^Y(S) for a monoid S and |Y| = y.
    Join { file: PathBuf, y: usize },
    /// Direct product.
    Product { first: PathBuf, second: PathBuf },
    /// Adjoin a new identity.
    AdjoinUnit { file: PathBuf },
    /// Adjoin a new zero.
    AdjoinZero { file: PathBuf },
    /// Reverse the multiplication.
    Opposite { file: PathBuf },
    /// Rees matrix semigroup over a group table; the sandwich matrix has b
    /// rows of a entries, rows separated by ';' and entries by ','.
    Rees {
        group: PathBuf,
        a: usize,
        b: usize,
        sandwich: String,
    },
    /// A named example table; `list` prints the names.
    Fixture { name: String },
}

/// Malformed input text, as opposed to a well-formed but unusable table.
fn is_parse_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. } | Error::EmptyTable | Error::NotSquare { .. } | Error::EntryOutOfRange { .. }
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            let parse = err
                .chain()
                .find_map(|c| c.downcast_ref::<Error>())
                .is_some_and(is_parse_error)
                || err.chain().any(|c| c.is::<ArgumentError>());
            ExitCode::from(if parse { 2 } else { 1 })
        }
    }
}

/// A bad command-line value that clap cannot catch on its own.
#[derive(Debug)]
struct ArgumentError(String);

impl std::fmt::Display for ArgumentError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ArgumentError {}

fn load(path: &Path) -> Result<SemigroupTable> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    SemigroupTable::parse(&text).with_context(|| format!("in {}", path.display()))
}

fn group_json(g: &FinAbGroup) -> Value {
    json!({
        "text": g.to_string(),
        "rank": g.rank().to_string(),
        "torsion": g
            .torsion()
            .iter()
            .map(|(d, m)| json!({ "order": d.to_string(), "multiplicity": m.to_string() }))
            .collect::<Vec<_>>(),
    })
}

fn homology_text(groups: &[FinAbGroup]) -> String {
    groups.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Validate { file } => {
            let s = load(&file)?;
            println!("ok: order {}", s.order());
        }
        Command::Info { file, json } => {
            let s = load(&file)?;
            let rees = min_ideal(&s)?;
            let info = json!({
                "order": s.order(),
                "monoid": s.is_monoid(),
                "identity": s.identity(),
                "commutative": s.is_commutative(),
                "idempotents": s.idempotents(),
                "minimal_ideal": {
                    "size": rees.ideal_size(),
                    "left": rees.i_set().len(),
                    "right": rees.j_set().len(),
                    "group_order": rees.h_set().len(),
                    "group_identity": rees.e_h(),
                },
                "k_thin": rees.is_k_thin(),
            });
            if json {
                println!("{}", serde_json::to_string_pretty(&info)?);
            } else {
                println!("order: {}", s.order());
                match s.identity() {
                    Some(e) => println!("monoid: yes (identity {e})"),
                    None => println!("monoid: no"),
                }
                println!("commutative: {}", if s.is_commutative() { "yes" } else { "no" });
                println!("idempotents: {:?}", s.idempotents());
                println!(
                    "minimal ideal: {} elements, {} x {} blocks over a group of order {}",
                    rees.ideal_size(),
                    rees.i_set().len(),
                    rees.j_set().len(),
                    rees.h_set().len()
                );
                println!("K-thin: {}", if rees.is_k_thin() { "yes" } else { "no" });
            }
        }
        Command::Gs { file, json } => {
            let s = load(&file)?;
            let g = group_completion(&s)?;
            let ab = abelianization(&s, &g);
            if json {
                let value = json!({
                    "order": g.len(),
                    "representatives": g.representatives(),
                    "class_of": g.rho_map(),
                    "abelianization": group_json(&ab),
                });
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                println!("order: {}", g.len());
                println!("representatives: {:?}", g.representatives());
                println!("abelianization: {ab}");
            }
        }
        Command::Homology {
            file,
            max_dim,
            method,
            json,
            max_nodes,
        } => {
            if max_dim == 0 {
                return Err(ArgumentError("--max-dim must be at least 1".into()).into());
            }
            let s = load(&file)?;
            let mut caps = ResolutionCaps::default();
            if let Some(n) = max_nodes {
                caps.max_nodes = n;
            }
            let groups = match method {
                Method::Resolution => get_homology_with_caps(&s, max_dim, caps)?,
                Method::Nerve => nerve_homology(&s, max_dim)?,
                Method::Auto => {
                    let h = get_homology_with_caps(&s, max_dim, caps)?;
                    if nerve_fits(s.order(), max_dim, DEFAULT_CELL_CAP) {
                        let check = nerve_homology(&s, max_dim)?;
                        if check != h {
                            bail!(
                                "resolution gave [{}] but the nerve gave [{}]",
                                homology_text(&h),
                                homology_text(&check)
                            );
                        }
                    }
                    h
                }
            };
            if json {
                let value: Vec<Value> = groups
                    .iter()
                    .enumerate()
                    .map(|(i, g)| {
                        let mut v = group_json(g);
                        v["dimension"] = json!(i + 1);
                        v
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                println!("{}", homology_text(&groups));
            }
        }
        Command::Construct { recipe } => {
            let table = construct(recipe)?;
            if let Some(t) = table {
                print!("{}", t.to_text());
            }
        }
        Command::Census {
            order,
            extended,
            json,
        } => {
            let show = extended && std::io::stderr().is_terminal();
            let report = run_census_with_progress(order, extended, |done, total| {
                if show {
                    eprint!("\rclasses {done}/{total}");
                }
            })?;
            if show {
                eprintln!();
            }
            if json {
                let value = json!({
                    "order": report.order,
                    "tables": report.tables,
                    "classes": report.classes,
                    "non_k_thin": report.non_k_thin,
                    "signatures": report.signatures.iter().map(|s| json!({
                        "count": s.count,
                        "homology": s.signature.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                println!(
                    "order {}: {} tables, {} classes, {} not K-thin",
                    report.order, report.tables, report.classes, report.non_k_thin
                );
                for s in &report.signatures {
                    println!("{:>6}  {}", s.count, homology_text(&s.signature));
                }
            }
        }
    }
    Ok(())
}

fn parse_sandwich(text: &str) -> Result<Vec<Vec<usize>>> {
    text.split(';')
        .map(|row| {
            row.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| ArgumentError(format!("bad sandwich entry {x:?}")).into())
                })
                .collect()
        })
        .collect()
}

fn construct(recipe: Recipe) -> Result<Option<SemigroupTable>> {
    let positive = |name: &str, v: usize| -> Result<()> {
        if v == 0 {
            return Err(ArgumentError(format!("{name} must be positive")).into());
        }
        Ok(())
    };
    Ok(Some(match recipe {
        Recipe::Trivial => trivial(),
        Recipe::Rect { a, b } => {
            positive("a", a)?;
            positive("b", b)?;
            rectangular_band(a, b)
        }
        Recipe::Cyclic { k } => {
            positive("k", k)?;
            cyclic_group(k)
        }
        Recipe::Join { file, y } => join(&load(&file)?, y)?,
        Recipe::Product { first, second } => load(&first)?.direct_product(&load(&second)?),
        Recipe::AdjoinUnit { file } => load(&file)?.adjoin_unit(),
        Recipe::AdjoinZero { file } => bsemi_core::table::adjoin_zero(&load(&file)?),
        Recipe::Opposite { file } => load(&file)?.opposite(),
        Recipe::Rees {
            group,
            a,
            b,
            sandwich,
        } => rees_matrix(&load(&group)?, a, b, &parse_sandwich(&sandwich)?)?,
        Recipe::Fixture { name } => {
            let all = fixtures::all();
            if name == "list" {
                for (n, _) in &all {
                    println!("{n}");
                }
                return Ok(None);
            }
            match all.into_iter().find(|(n, _)| *n == name) {
                Some((_, t)) => t,
                None => return Err(ArgumentError(format!("unknown fixture {name:?}")).into()),
            }
        }
    }))
}
