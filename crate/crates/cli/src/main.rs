//! `klcellkit`: command-line access to KL polynomials, cells, graded
//! characters of projective functors and the reduction pipeline.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use klcellkit::cache::{self, cache_path};
use klcellkit::cells::CellData;
use klcellkit::characters::CategoryO;
use klcellkit::pipeline::report::PipelineReport;
use klcellkit::pipeline::Pipeline;
use klcellkit::{Error, GeneratorWord, KLTable, SymmetricGroup};
use serde_json::json;

const CACHE_ENV: &str = "KLCELLKIT_CACHE";
const VERIFY_FRACTION: f64 = 0.01;
const VERIFY_SEED: u64 = 0x6b6c_6365_6c6c;

#[derive(Parser, Debug)]
#[command(
    name = "klcellkit",
    version,
    about = "Kazhdan-Lusztig combinatorics for symmetric groups"
)]
struct Cli {
    /// Directory holding cached KL tables (default: $KLCELLKIT_CACHE, then the user data directory).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Export {
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// KL polynomial P_{x,y} and mu(x, y).
    Kl {
        #[arg(long)]
        n: usize,
        x: String,
        y: String,
    },
    /// Left, right and two-sided cells.
    Cells {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        export: Option<Export>,
    },
    /// Graded character of theta_x L(y).
    Theta {
        #[arg(long)]
        n: usize,
        x: String,
        y: String,
    },
    /// Checks whether b_{s_i1} ... b_{s_ik} is a single KL basis element.
    Factor {
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// Runs the reduction pipeline over all normalized pairs.
    Scan {
        #[arg(long)]
        n: usize,
        /// Compare the residual sets with the embedded expectations; exit 2 on mismatch.
        #[arg(long)]
        golden: bool,
        /// Include the per-pair traces.
        #[arg(long)]
        traces: bool,
    },
    /// Builds or verifies the on-disk KL table.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand, Debug)]
enum CacheAction {
    /// Computes the table and writes it atomically.
    Build {
        #[arg(long)]
        n: usize,
    },
    /// Loads the table and recomputes a 1% random sample from scratch.
    Verify {
        #[arg(long)]
        n: usize,
    },
}

struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn cache_dir(cli: &Cli) -> Result<PathBuf, Error> {
    if let Some(dir) = &cli.cache_dir {
        return Ok(dir.clone());
    }
    if let Some(dir) = std::env::var_os(CACHE_ENV).filter(|d| !d.is_empty()) {
        return Ok(PathBuf::from(dir));
    }
    dirs::data_dir()
        .map(|d| d.join("klcellkit"))
        .ok_or_else(|| Error::Precondition(format!("no user data directory; pass --cache-dir or set {CACHE_ENV}")))
}

fn table(cli: &Cli, n: usize) -> Result<Arc<KLTable>, Error> {
    SymmetricGroup::new(n)?;
    cache::load_or_build(n, &cache_dir(cli)?)
}

fn json_text(value: &impl serde::Serialize) -> Result<String, Error> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Kl { n, x, y } => {
            let kl = table(cli, *n)?;
            let g = kl.group();
            let (xi, yi) = (g.parse(x)?, g.parse(y)?);
            let p = kl.kl_polynomial(xi, yi).display_in("q");
            let mu = kl.mu(xi, yi);
            let (xw, yw) = (g.element(xi).word_string(), g.element(yi).word_string());
            Ok(Output::ok(match cli.format {
                Format::Text => format!("P = {p}, mu = {mu}\n"),
                Format::Tsv => format!("x\ty\tP\tmu\n{xw}\t{yw}\t{p}\t{mu}\n"),
                Format::Json => json_text(&json!({ "n": n, "x": xw, "y": yw, "P": p, "mu": mu }))?,
            }))
        }
        Command::Cells { n, export } => {
            let cells = CellData::build(table(cli, *n)?)?;
            let report = cells.report();
            let text = match (export, cli.format) {
                (Some(Export::Dot), _) => (0..report.two_sided.len())
                    .map(|i| cells.mu_graph_dot(i))
                    .collect::<String>(),
                (Some(Export::Json), _) | (None, Format::Json) => json_text(&report)?,
                (None, Format::Tsv) => {
                    let mut out = String::from("kind\tindex\tshape\ta\tsize\tduflo\tmembers\n");
                    for (kind, entries) in [
                        ("left", &report.left),
                        ("right", &report.right),
                        ("two_sided", &report.two_sided),
                    ] {
                        for e in entries {
                            let members: Vec<&str> = e.members.iter().map(|m| m.word.as_str()).collect();
                            let duflo = e.duflo.as_ref().map_or("-", |d| d.word.as_str());
                            let _ = writeln!(
                                out,
                                "{kind}\t{}\t{}\t{}\t{}\t{duflo}\t{}",
                                e.index,
                                e.shape,
                                e.a_value,
                                e.members.len(),
                                members.join(",")
                            );
                        }
                    }
                    out
                }
                (None, Format::Text) => {
                    let mut out = format!(
                        "S{n}: {} two-sided, {} left, {} right cells\n",
                        report.two_sided.len(),
                        report.left.len(),
                        report.right.len()
                    );
                    let _ = writeln!(out, "  {:<14}{:>4}{:>8}{:>8}", "shape", "a", "size", "right");
                    for e in &report.two_sided {
                        let rights = report.right.iter().filter(|r| r.shape == e.shape).count();
                        let _ = writeln!(
                            out,
                            "  {:<14}{:>4}{:>8}{:>8}",
                            e.shape,
                            e.a_value,
                            e.members.len(),
                            rights
                        );
                    }
                    out
                }
            };
            Ok(Output::ok(text))
        }
        Command::Theta { n, x, y } => {
            let category = CategoryO::new(Arc::new(CellData::build(table(cli, *n)?)?));
            let g = category.group().clone();
            let (xi, yi) = (g.parse(x)?, g.parse(y)?);
            let character = category.theta_on_simple(xi, yi)?;
            Ok(Output::ok(match cli.format {
                Format::Tsv => character.to_tsv(&g),
                Format::Json => json_text(&character.to_report(&g))?,
                Format::Text => {
                    let mut out = format!(
                        "theta_{} L({})\n",
                        g.element(xi).word_string(),
                        g.element(yi).word_string()
                    );
                    if character.is_empty() {
                        out.push_str("  0\n");
                    }
                    for row in character.to_report(&g).rows {
                        let simples: Vec<String> = row
                            .simples
                            .iter()
                            .map(|s| match s.multiplicity {
                                1 => format!("L({})", s.word),
                                m => format!("{m}L({})", s.word),
                            })
                            .collect();
                        let _ = writeln!(out, "  {:>4}  {}", row.degree, simples.join(" + "));
                    }
                    out
                }
            }))
        }
        Command::Factor { n, word } => {
            let kl = table(cli, *n)?;
            let g = kl.group().clone();
            let letters: GeneratorWord = word.parse()?;
            let w = g.multiply_word(&letters.letters);
            let hecke = klcellkit::HeckeAlgebra::new(kl);
            let product = hecke.word_product_kl(&letters.letters)?;
            let terms: Vec<(String, String)> = (0..g.order())
                .filter(|&z| !product.coeff(z).is_zero())
                .map(|z| (g.element(z).word_string(), product.coeff(z).to_string()))
                .collect();
            let single = terms.len() == 1 && terms[0].0 == g.element(w).word_string() && terms[0].1 == "1";
            let reduced = letters.is_reduced(*n)?;
            let target = g.element(w).word_string();
            Ok(Output::ok(match cli.format {
                Format::Json => json_text(&json!({
                    "n": n,
                    "word": letters.letters,
                    "element": target,
                    "reduced": reduced,
                    "is_kl_basis_element": single,
                    "expansion": terms.iter().map(|(z, c)| json!({ "element": z, "coefficient": c })).collect::<Vec<_>>(),
                }))?,
                Format::Tsv => {
                    let mut out = String::from("element\tcoefficient\n");
                    for (z, c) in &terms {
                        let _ = writeln!(out, "{z}\t{c}");
                    }
                    out
                }
                Format::Text => {
                    let factors: Vec<String> = letters.letters.iter().map(|s| format!("b{s}")).collect();
                    let lhs = if factors.is_empty() {
                        "1".to_string()
                    } else {
                        factors.join("*")
                    };
                    if single {
                        format!("{lhs} = b_{target}: factorization holds\n")
                    } else {
                        let rhs: Vec<String> = terms.iter().map(|(z, c)| format!("({c}) b_{z}")).collect();
                        format!(
                            "{lhs} = {}\nnot a single KL basis element (b_{target} expected)\n",
                            rhs.join(" + ")
                        )
                    }
                }
            }))
        }
        Command::Scan { n, golden, traces } => {
            let dir = cache_dir(cli)?;
            let pipeline = Pipeline::with_tables(*n, |k| cache::load_or_build(k, &dir))?;
            let scanned = pipeline.scan();
            let report = PipelineReport::new(&pipeline, &scanned, *traces);
            let text = match cli.format {
                Format::Json => report.to_json()? + "\n",
                Format::Tsv => report.to_tsv(),
                Format::Text => report.to_text(),
            };
            let code = if *golden && !report.golden_diff.is_empty() {
                2
            } else {
                0
            };
            Ok(Output { text, code })
        }
        Command::Cache { action } => {
            let dir = cache_dir(cli)?;
            match action {
                CacheAction::Build { n } => {
                    SymmetricGroup::new(*n)?;
                    let (header, _) = cache::cache_build(*n, &dir)?;
                    let path = cache_path(&dir, *n);
                    Ok(Output::ok(match cli.format {
                        Format::Json => json_text(&json!({ "path": path, "header": header }))?,
                        _ => format!(
                            "wrote {}\nrank {}, {} elements, {} records\nordering sha256 {}\npayload sha256 {}\n",
                            path.display(),
                            header.rank,
                            header.count,
                            header.records,
                            header.ordering_checksum,
                            header.payload_checksum
                        ),
                    }))
                }
                CacheAction::Verify { n } => {
                    let loaded = cache::cache_load(*n, &dir)?;
                    let report = cache::verify_sample(&loaded, VERIFY_FRACTION, VERIFY_SEED);
                    let code = if report.mismatches.is_empty() { 0 } else { 1 };
                    let text = match cli.format {
                        Format::Json => json_text(&report)?,
                        _ => {
                            let mut out = format!(
                                "verified {} of {} pairs: {} mismatches\n",
                                report.sampled,
                                report.pairs,
                                report.mismatches.len()
                            );
                            for (x, y) in &report.mismatches {
                                let _ = writeln!(out, "  mismatch at ({x}, {y})");
                            }
                            out
                        }
                    };
                    Ok(Output { text, code })
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
