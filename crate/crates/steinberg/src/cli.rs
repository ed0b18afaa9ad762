//! Argument parsing and command dispatch.

use std::collections::BTreeMap;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use steinberg_core::insertion::rs_pair;
use steinberg_core::maps::{fiber_count_formula, phi, triangle, triple, triple_inverse, xi_k_generic, xi_s_generic};
use steinberg_core::orbit::{canonicalize_grassmann_point, enumerate_orbit_reps, image_analysis};
use steinberg_core::perm::{canonicalize_matrix, decompose, enumerate_partial_permutations};
use steinberg_core::{OracleConfig, Partition, DEFAULT_PRIME};

use crate::json::{self as js, InputError};
use crate::table;
use crate::verify::{verify, What};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyWhat {
    Phi,
    Xi,
    All,
}

#[derive(Debug, Parser)]
#[command(name = "steinberg", version, about = "Robinson-Schensted and Steinberg maps for partial permutations")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Prime modulus for the oracle.
    #[arg(long, env = "STEINBERG_PRIME", default_value_t = DEFAULT_PRIME, global = true)]
    pub prime: u64,
    /// Random samples per oracle evaluation.
    #[arg(long, env = "STEINBERG_TRIALS", default_value_t = OracleConfig::default().trials, global = true)]
    pub trials: usize,
    /// Base seed for oracle sampling.
    #[arg(long, env = "STEINBERG_SEED", default_value_t = OracleConfig::default().seed, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Robinson-Schensted pair of the nondegenerate part of a word.
    Rs { word: String },
    /// Generalized Steinberg map.
    Phi { word: String },
    /// The triple (T1, T2, nu).
    Triple { word: String },
    /// Inverse of `triple`; input `{"T1", "T2", "nu"}`.
    Untriple { json: String },
    /// Ξ_k on the orbit of (τ; 1_n).
    XiK { word: String },
    /// Ξ_s on the orbit of (τ; 1_n).
    XiS { word: String },
    /// Triangle operation; input `{"T1", "T2", "ells", "ms", "n"}`.
    Triangle { json: String },
    /// Partial permutation in the B×B double coset of a square matrix.
    CanonMatrix { json: String },
    /// Orbit representative of the column span of a 2n×n matrix.
    CanonGrass { json: String },
    /// One representative per orbit of the double flag variety.
    Orbits {
        #[arg(long)]
        n: usize,
    },
    /// Fiber sizes of Φ against the counting formula.
    CountFibers {
        #[arg(long)]
        n: usize,
        #[arg(long, requires = "mu")]
        lambda: Option<String>,
        #[arg(long, requires = "lambda")]
        mu: Option<String>,
    },
    /// Oracle sweep over all partial permutations of size n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        what: VerifyWhat,
    },
    /// Image of the exotic moment map and its maximal elements.
    ImageComponents {
        #[arg(long)]
        n: usize,
    },
    /// The full correspondence table.
    Table {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn error(message: String) -> Self {
        Outcome { code: 1, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

enum Failure {
    Input(InputError),
    Core(steinberg_core::Error),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<steinberg_core::Error> for Failure {
    fn from(e: steinberg_core::Error) -> Self {
        Failure::Core(e)
    }
}

/// A rendered result: JSON plus its human-readable forms.
struct Rendered {
    json: Value,
    text: String,
    markdown: Option<String>,
    code: i32,
}

impl Rendered {
    fn new(json: Value, text: impl Into<String>) -> Self {
        Rendered { json, text: text.into(), markdown: None, code: 0 }
    }

    fn with_markdown(mut self, md: String) -> Self {
        self.markdown = Some(md);
        self
    }

    fn emit(self, format: Format) -> Outcome {
        let mut stdout = match format {
            Format::Json => self.json.to_string(),
            Format::Text => self.text,
            Format::Markdown => self.markdown.unwrap_or_else(|| format!("```\n{}\n```", self.text.trim_end())),
        };
        if !stdout.ends_with('\n') {
            stdout.push('\n');
        }
        Outcome { code: self.code, stdout, stderr: String::new() }
    }
}

fn read_input(arg: &str) -> Result<String, InputError> {
    match arg.strip_prefix('@') {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| InputError { field: "json".into(), message: format!("cannot read {path}: {e}") })
        }
        None => Ok(arg.to_string()),
    }
}

fn md_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("| {} |\n|{}\n", headers.join(" | "), "---|".repeat(headers.len()));
    for r in rows {
        out.push_str(&format!("| {} |\n", r.join(" | ")));
    }
    out
}

fn dispatch(cli: &Cli) -> Result<Rendered, Failure> {
    let cfg = OracleConfig { prime: cli.prime, trials: cli.trials, seed: cli.seed, ..OracleConfig::default() };
    Ok(match &cli.command {
        Command::Rs { word } => {
            let tau = js::parse_word_arg(word)?;
            let d = decompose(&tau);
            let (p, q) = rs_pair(&d.sigma);
            Rendered::new(
                json!({ "sigma": js::bijection(&d.sigma), "P": js::tableau(&p), "Q": js::tableau(&q) }),
                format!("sigma: {}\nRS1: {p}\nRS2: {q}", d.sigma),
            )
        }
        Command::Phi { word } | Command::XiK { word } => {
            let tau = js::parse_word_arg(word)?;
            let pair = if matches!(cli.command, Command::Phi { .. }) { phi(&tau) } else { xi_k_generic(&tau) };
            Rendered::new(js::partition_pair(&pair), format!("{}, {}", pair.0, pair.1))
        }
        Command::Triple { word } => {
            let t = triple(&js::parse_word_arg(word)?);
            Rendered::new(js::triple(&t), t.to_string())
        }
        Command::Untriple { json } => {
            let t = js::parse_triple(&js::parse(&read_input(json)?, "json")?)?;
            let tau = triple_inverse(&t)?;
            Rendered::new(js::word(&tau), tau.to_string())
        }
        Command::XiS { word } => {
            let xi = xi_s_generic(&js::parse_word_arg(word)?)?;
            Rendered::new(js::signed(&xi), xi.to_string())
        }
        Command::Triangle { json } => {
            let input = js::parse_triangle(&js::parse(&read_input(json)?, "json")?)?;
            let s = triangle(&input.t1, &input.t2, &input.ells, &input.ms, input.n)?;
            Rendered::new(js::skew(&s), format!("{s}  (outer {}, inner {})", s.outer(), s.inner()))
        }
        Command::CanonMatrix { json } => {
            let m = js::parse_matrix(&js::parse(&read_input(json)?, "json")?, cli.prime, "json")?;
            let tau = canonicalize_matrix(&m)?;
            Rendered::new(js::word(&tau), tau.to_string())
        }
        Command::CanonGrass { json } => {
            let m = js::parse_matrix(&js::parse(&read_input(json)?, "json")?, cli.prime, "json")?;
            let omega = canonicalize_grassmann_point(&m)?;
            Rendered::new(js::orbit_rep(&omega), omega.to_string())
        }
        Command::Orbits { n } => {
            let reps = enumerate_orbit_reps(*n)?;
            let lines: Vec<String> = reps.iter().map(ToString::to_string).collect();
            let rows: Vec<Vec<String>> = reps
                .iter()
                .map(|r| vec![r.tau1().to_string(), r.tau2().to_string(), r.as_tau_form().map_or(String::new(), |t| t.to_string())])
                .collect();
            Rendered::new(
                json!({ "n": n, "count": reps.len(), "orbits": reps.iter().map(js::orbit_rep).collect::<Vec<_>>() }),
                format!("{} orbits for n = {n}\n{}", reps.len(), lines.join("\n")),
            )
            .with_markdown(format!(
                "{} orbits for n = {n}\n\n{}",
                reps.len(),
                md_table(&["tau1", "tau2", "(tau; 1_n) form"], &rows)
            ))
        }
        Command::CountFibers { n, lambda, mu } => count_fibers(*n, lambda.as_deref(), mu.as_deref())?,
        Command::Verify { n, what } => {
            let what = match what {
                VerifyWhat::Phi => What::Phi,
                VerifyWhat::Xi => What::Xi,
                VerifyWhat::All => What::All,
            };
            let report = verify(*n, what, &cfg)?;
            let mut text = String::new();
            for c in &report.checks {
                text.push_str(&format!("{}: {} checked, {} mismatches\n", c.name, c.checked, c.mismatches.len()));
                for m in &c.mismatches {
                    text.push_str(&format!("  {m}\n"));
                }
            }
            text.push_str(if report.passed() { "verification passed" } else { "verification FAILED" });
            let rows: Vec<Vec<String>> =
                report.checks.iter().map(|c| vec![c.name.to_string(), c.checked.to_string(), c.mismatches.len().to_string()]).collect();
            let mut r = Rendered::new(report.to_json(), text.clone()).with_markdown(md_table(&["check", "checked", "mismatches"], &rows));
            r.code = if report.passed() { 0 } else { 2 };
            r
        }
        Command::ImageComponents { n } => {
            let report = image_analysis(*n, &cfg)?;
            let c = &report.checks;
            let mut text = format!("n = {n}: {} orbit classes\nmaximal images:\n", report.classes.len());
            for m in &report.maximal {
                text.push_str(&format!("  {m}\n"));
            }
            for (name, ok) in [
                ("maximal set matches the three components", c.maximal_matches_components),
                ("square-zero condition", c.square_zero),
                ("column bound", c.column_bound),
                ("closed under sign swap", c.swap_closed),
                ("regular pair attained by xi_k", c.regular_xi_k_attained),
            ] {
                text.push_str(&format!("{name}: {}\n", if ok { "yes" } else { "no" }));
            }
            text.push_str(&format!("flagged classes: {}", c.flagged));
            let rows: Vec<Vec<String>> = report
                .classes
                .iter()
                .map(|cl| {
                    vec![
                        cl.omega.to_string(),
                        cl.xi_s.as_ref().map_or("undecided".into(), ToString::to_string),
                        cl.xi_k.as_ref().map_or("undecided".into(), |(a, b)| format!("{a}, {b}")),
                        cl.method.as_str().to_string(),
                    ]
                })
                .collect();
            let md = format!("```\n{text}\n```\n\n{}", md_table(&["omega", "Xi_s", "Xi_k", "method"], &rows));
            Rendered::new(js::image_report(&report), text).with_markdown(md)
        }
        Command::Table { n } => {
            let rows = table::build(*n)?;
            Rendered::new(table::to_json(&rows), table::to_text(&rows)).with_markdown(table::to_markdown(&rows))
        }
    })
}

fn count_fibers(n: usize, lambda: Option<&str>, mu: Option<&str>) -> Result<Rendered, Failure> {
    let mut sweep: BTreeMap<(Partition, Partition), usize> = BTreeMap::new();
    let taus = enumerate_partial_permutations(n)?;
    for tau in &taus {
        *sweep.entry(phi(tau)).or_default() += 1;
    }
    let pairs: Vec<(Partition, Partition)> = match (lambda, mu) {
        (Some(l), Some(m)) => {
            let l = js::parse_partition_arg(l, "lambda")?;
            let m = js::parse_partition_arg(m, "mu")?;
            for (p, field) in [(&l, "lambda"), (&m, "mu")] {
                if p.size() != n {
                    return Err(InputError { field: field.into(), message: format!("{p} is not a partition of {n}") }.into());
                }
            }
            vec![(l, m)]
        }
        _ => {
            let all = Partition::all_of(n);
            all.iter().flat_map(|l| all.iter().map(move |m| (l.clone(), m.clone()))).collect()
        }
    };
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    let mut total = 0;
    let mut consistent = true;
    for (l, m) in &pairs {
        let swept = sweep.get(&(l.clone(), m.clone())).copied().unwrap_or(0);
        let formula = fiber_count_formula(l, m)?;
        consistent &= swept == formula;
        total += swept;
        entries.push(json!({ "lambda": js::partition(l), "mu": js::partition(m), "sweep": swept, "formula": formula }));
        rows.push(vec![l.to_string(), m.to_string(), swept.to_string(), formula.to_string()]);
    }
    let mut text: Vec<String> = rows.iter().map(|r| format!("{} {}: {} (formula {})", r[0], r[1], r[2], r[3])).collect();
    text.push(format!("total {total} of {} partial permutations; formula {}", taus.len(), if consistent { "agrees" } else { "DISAGREES" }));
    let md = format!("{}\ntotal {total} of {}", md_table(&["lambda", "mu", "sweep", "formula"], &rows), taus.len());
    Ok(Rendered::new(
        json!({ "n": n, "fibers": entries, "total": total, "partial_permutations": taus.len(), "consistent": consistent }),
        text.join("\n"),
    )
    .with_markdown(md))
}

/// Parses `argv` (including the program name) and runs the command.
///
/// Exit codes: 0 success, 1 usage or domain error, 2 verification mismatch.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(rendered),
                _ => Outcome { code: 1, stdout: String::new(), stderr: rendered },
            };
        }
    };
    match dispatch(&cli) {
        Ok(r) => r.emit(cli.format),
        Err(Failure::Input(e)) => Outcome::error(e.to_string()),
        Err(Failure::Core(e)) => Outcome::error(e.to_string()),
    }
}
