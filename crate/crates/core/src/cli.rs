//! The `oddcover` command-line front end.
//!
//! Graphs are read from edge-list files and covers from JSON files (or `-`
//! for stdin). Exit codes: 0 success, valid or found; 1 invalid or refuted;
//! 2 timeout or truncated output; 3 usage or input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::constructions::{self as cons, SignedPairsMatrix};
use crate::cover::{lower_bound_with_cap, OddCover};
use crate::error::Error;
use crate::gf::GfContext;
use crate::graph::{Graph, DEFAULT_EVEN_CORE_CAP};
use crate::properties::{self, DEFAULT_SAMPLES};
use crate::search::{self, PairsSearch, SearchOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_TIMEOUT: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "oddcover",
    version,
    about = "Odd covers of graphs by bicliques"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named cover family and print it as JSON.
    ///
    /// Names and parameters: double <edges>, odd-clique <k>,
    /// odd-clique-union <m1> [m2 ...], even-cycle <m>,
    /// cycle-union <n1,n2,...> [m1,m2,...], pairs-18mod24 <n>,
    /// pairs-6mod24 <n>, tomon <k>, field-lift <p> <m> <k> <base.json>.
    Construct {
        name: String,
        params: Vec<String>,
        /// Write the cover here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the covered graph as an edge list.
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
    /// Print a named graph as an edge list: complete <n>, cycle <n>, empty <n>.
    Graph { kind: String, n: usize },
    /// Check a cover against a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// Cover JSON file, or `-` for stdin.
        #[arg(long, default_value = "-")]
        cover: PathBuf,
        /// Also require the cover to meet the rank bound.
        #[arg(long)]
        perfect: bool,
    },
    /// F₂ rank and the resulting lower bound on b₂.
    Rank {
        #[arg(long)]
        graph: PathBuf,
        /// Also compute the rank by adjacent-twin reduction.
        #[arg(long)]
        twins: bool,
    },
    /// List the even cores (nonzero kernel vectors) of the adjacency matrix.
    EvenCores {
        #[arg(long)]
        graph: PathBuf,
        /// Kernel dimension above which only a basis is printed.
        #[arg(long, default_value_t = DEFAULT_EVEN_CORE_CAP)]
        cap: usize,
    },
    /// Compute b₂ exactly by label search.
    Search {
        #[arg(long)]
        graph: PathBuf,
        /// Stop after refuting this size.
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long)]
        budget_seconds: Option<f64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Write the witness cover JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the witness labels here, one per vertex.
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Search for a pairs-construction matrix of K_n.
    PairsSearch {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        budget_seconds: Option<f64>,
    },
    /// Run the structural checkers on a cover.
    Props {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "-")]
        cover: PathBuf,
        #[arg(long, env = "ODDCOVER_SEED", default_value_t = 0)]
        seed: u64,
        /// Random subsets per residue class (and random trials for row independence).
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
}

/// A failure that maps to an exit code with a message on stderr.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Timeout { .. } => EXIT_TIMEOUT,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CliResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("oddcover: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CliResult {
    match cmd {
        Command::Construct {
            name,
            params,
            out: path,
            graph_out,
        } => construct(&name, &params, path.as_deref(), graph_out.as_deref(), out),
        Command::Graph { kind, n } => {
            let g = match kind.as_str() {
                "complete" => Graph::complete(n)?,
                "cycle" => Graph::cycle(n)?,
                "empty" => Graph::empty(n)?,
                other => return Err(usage(format!("unknown graph kind {other:?}"))),
            };
            emit(out, &g.to_edge_list())?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            graph,
            cover,
            perfect,
        } => verify(&graph, &cover, perfect, out),
        Command::Rank { graph, twins } => {
            let g = read_graph(&graph)?;
            let lb = lower_bound_with_cap(&g, DEFAULT_EVEN_CORE_CAP);
            let mut text = format!("rank {}\n", lb.rank);
            if twins {
                let _ = writeln!(text, "rank_via_twins {}", g.rank_via_twins());
            }
            let _ = writeln!(text, "lower_bound {}", lb.value);
            let _ = writeln!(text, "odd_even_core {}", lb.odd_core);
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::EvenCores { graph, cap } => {
            let g = read_graph(&graph)?;
            let cores = g.even_cores(cap);
            let mut text = format!("dimension {}\n", cores.dimension);
            if cores.truncated {
                let _ = writeln!(text, "truncated: printing a kernel basis");
            }
            for set in &cores.sets {
                let _ = writeln!(text, "{}", join(&set.to_indices()));
            }
            emit(out, &text)?;
            Ok(if cores.truncated {
                EXIT_TIMEOUT
            } else {
                EXIT_OK
            })
        }
        Command::Search {
            graph,
            max_k,
            budget_seconds,
            threads,
            out: cover_path,
            labels,
        } => {
            let g = read_graph(&graph)?;
            let opts = SearchOptions {
                budget: budget_seconds.map(seconds).transpose()?,
                threads: threads.max(1),
            };
            match search::b2_bounded(&g, max_k.unwrap_or(usize::MAX), &opts) {
                Ok(Some(exact)) => {
                    let mut text = format!("b2 {}\n", exact.value);
                    let table: String = exact
                        .labels
                        .iter()
                        .enumerate()
                        .map(|(v, l)| format!("{v} {l}\n"))
                        .collect();
                    text.push_str(&table);
                    emit(out, &text)?;
                    if let Some(p) = cover_path {
                        write_file(&p, &exact.witness.to_json_pretty())?;
                    }
                    if let Some(p) = labels {
                        let plain: String = exact.labels.iter().map(|l| format!("{l}\n")).collect();
                        write_file(&p, &plain)?;
                    }
                    Ok(EXIT_OK)
                }
                Ok(None) => {
                    emit(out, &format!("b2 > {}\n", max_k.unwrap_or(0)))?;
                    Ok(EXIT_INVALID)
                }
                Err(Error::Timeout {
                    elapsed,
                    lower,
                    upper,
                }) => {
                    emit(
                        out,
                        &format!(
                            "timeout after {:.1}s: {lower} <= b2 <= {upper}\n",
                            elapsed.as_secs_f64()
                        ),
                    )?;
                    Ok(EXIT_TIMEOUT)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::PairsSearch { n, budget_seconds } => {
            let budget = budget_seconds.map(seconds).transpose()?;
            match search::pairs_search(n, budget)? {
                PairsSearch::Found(m) => {
                    emit(out, &format_matrix(&m))?;
                    Ok(EXIT_OK)
                }
                PairsSearch::Refuted => {
                    emit(out, &format!("no pairs construction for n = {n}\n"))?;
                    Ok(EXIT_INVALID)
                }
                PairsSearch::Timeout => {
                    emit(out, "timeout\n")?;
                    Ok(EXIT_TIMEOUT)
                }
            }
        }
        Command::Props {
            graph,
            cover,
            seed,
            samples,
            json,
        } => props(&graph, &cover, seed, samples, json, out),
    }
}

fn seconds(s: f64) -> std::result::Result<Duration, Failure> {
    Duration::try_from_secs_f64(s).map_err(|_| usage(format!("invalid budget {s}")))
}

fn emit(out: &mut dyn Write, text: &str) -> std::result::Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| usage(format!("cannot write output: {e}")))
}

fn write_file(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_text(path: &Path) -> std::result::Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
    }
}

fn read_graph(path: &Path) -> std::result::Result<Graph, Failure> {
    Graph::parse_edge_list(&read_text(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_cover(path: &Path) -> std::result::Result<OddCover, Failure> {
    OddCover::from_json(&read_text(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn join(items: &[usize]) -> String {
    items
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn format_matrix(m: &SignedPairsMatrix) -> String {
    (0..m.size())
        .map(|i| {
            let row: Vec<&str> = m
                .row(i)
                .iter()
                .map(|&e| match e {
                    1 => "+",
                    -1 => "-",
                    _ => "0",
                })
                .collect();
            row.join(" ") + "\n"
        })
        .collect()
}

fn number(params: &[String], i: usize, what: &str) -> std::result::Result<usize, Failure> {
    let raw = params
        .get(i)
        .ok_or_else(|| usage(format!("missing parameter <{what}>")))?;
    raw.parse().map_err(|_| {
        usage(format!(
            "<{what}> must be a nonnegative integer, got {raw:?}"
        ))
    })
}

fn list(raw: Option<&String>) -> std::result::Result<Vec<usize>, Failure> {
    match raw.map(String::as_str) {
        None | Some("") | Some("-") => Ok(Vec::new()),
        Some(s) => s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| usage(format!("bad list entry {t:?}")))
            })
            .collect(),
    }
}

fn construct(
    name: &str,
    params: &[String],
    path: Option<&Path>,
    graph_out: Option<&Path>,
    out: &mut dyn Write,
) -> CliResult {
    let (cover, graph) = match name {
        "double" => {
            let p = params
                .first()
                .ok_or_else(|| usage("missing parameter <edges>"))?;
            let h = read_graph(Path::new(p))?;
            (
                cons::double_cover(&h)?,
                Graph::disjoint_union(&[h.clone(), h])?,
            )
        }
        "odd-clique" => {
            let k = number(params, 0, "k")?;
            (cons::odd_clique_cover(k)?, Graph::complete(2 * k + 1)?)
        }
        "odd-clique-union" => {
            let ms = params
                .iter()
                .enumerate()
                .map(|(i, _)| number(params, i, "m"))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            if ms.is_empty() {
                return Err(usage("odd-clique-union needs at least one <m>"));
            }
            let parts = ms
                .iter()
                .map(|&m| Graph::complete(2 * m + 1))
                .collect::<crate::Result<Vec<_>>>()?;
            (
                cons::odd_clique_union_cover(&ms)?,
                Graph::disjoint_union(&parts)?,
            )
        }
        "even-cycle" => {
            let m = number(params, 0, "m")?;
            (cons::even_cycle_cover(m)?, Graph::cycle(2 * m)?)
        }
        "cycle-union" => {
            let odd = list(params.first())?;
            let even = list(params.get(1))?;
            (
                cons::cycle_union_cover(&odd, &even)?,
                cons::cycle_union_graph(&odd, &even)?,
            )
        }
        "pairs-18mod24" => {
            let n = number(params, 0, "n")?;
            (
                cons::pairs_to_cover(&cons::pairs_18mod24(n)?)?,
                Graph::complete(n)?,
            )
        }
        "pairs-6mod24" => {
            let n = number(params, 0, "n")?;
            (
                cons::pairs_to_cover(&cons::pairs_6mod24(n)?)?,
                cons::three_cliques(n)?,
            )
        }
        "tomon" => {
            let k = number(params, 0, "k")?;
            let c = cons::tomon_cover(k)?;
            let n = c.n();
            (c, Graph::complete(n)?)
        }
        "field-lift" => {
            let p = number(params, 0, "p")?;
            let m = number(params, 1, "m")?;
            let k = number(params, 2, "k")?;
            let base = read_cover(Path::new(
                params
                    .get(3)
                    .ok_or_else(|| usage("missing parameter <base.json>"))?,
            ))?;
            let (p, m) = (
                u32::try_from(p).map_err(|_| usage("p too large"))?,
                u32::try_from(m).map_err(|_| usage("m too large"))?,
            );
            let ctx = GfContext::shared(p, m)?;
            let c = cons::field_lift_cover(&ctx, k, &base)?;
            let n = c.n();
            (c, Graph::complete(n)?)
        }
        other => return Err(usage(format!("unknown construction {other:?}"))),
    };
    let json = cover.to_json_pretty();
    match path {
        Some(p) => write_file(p, &json)?,
        None => emit(out, &json)?,
    }
    if let Some(p) = graph_out {
        write_file(p, &graph.to_edge_list())?;
    }
    Ok(EXIT_OK)
}

fn verify(graph: &Path, cover: &Path, perfect: bool, out: &mut dyn Write) -> CliResult {
    let g = read_graph(graph)?;
    let c = read_cover(cover)?;
    let report = c.verify(&g)?;
    let mut text = String::new();
    if report.valid {
        let _ = writeln!(text, "valid: {} bicliques on {} vertices", c.len(), c.n());
    } else {
        let _ = writeln!(text, "invalid: {} violations", report.violations.len());
        for v in &report.violations {
            let kind = if v.is_edge { "edge" } else { "nonedge" };
            let _ = writeln!(
                text,
                "  {kind} {} {} covered {} times",
                v.u, v.v, v.coverage
            );
        }
    }
    let mut ok = report.valid;
    if perfect {
        let bound = g.rank() / 2;
        let is_perfect = report.valid && c.len() == bound && g.rank() % 2 == 0;
        let _ = writeln!(
            text,
            "{}: size {} vs rank bound {bound}",
            if is_perfect { "perfect" } else { "not perfect" },
            c.len()
        );
        ok &= is_perfect;
    }
    emit(out, &text)?;
    Ok(if ok { EXIT_OK } else { EXIT_INVALID })
}

#[derive(Serialize)]
struct PropsReport {
    n: usize,
    bicliques: usize,
    valid: bool,
    perfect: bool,
    thm21: Option<properties::Thm21Report>,
    sdr: Option<bool>,
    even_clique: Option<properties::EvenCliqueReport>,
    same_type_canonical_pairing: Option<bool>,
}

impl PropsReport {
    fn passed(&self) -> bool {
        self.valid
            && self.thm21.as_ref().map_or(true, |r| r.passed)
            && self.sdr.unwrap_or(true)
            && self.even_clique.as_ref().map_or(true, |r| r.passed())
    }

    fn to_text(&self) -> String {
        let mut t = format!(
            "cover: {} bicliques on {} vertices\nvalid {}\nperfect {}\n",
            self.bicliques, self.n, self.valid, self.perfect
        );
        if let Some(r) = &self.thm21 {
            let _ = writeln!(
                t,
                "row independence: {} ({} subsets){}",
                pass(r.passed),
                r.subsets_checked,
                r.counterexample
                    .as_ref()
                    .map_or(String::new(), |s| format!(", counterexample {s:?}"))
            );
        }
        if let Some(s) = self.sdr {
            let _ = writeln!(t, "distinct representatives: {}", pass(s));
        }
        if let Some(r) = &self.even_clique {
            for item in &r.items {
                let _ = writeln!(
                    t,
                    "even clique item ({}): {} ({} checks, {}){}",
                    item.item,
                    pass(item.passed),
                    item.checked,
                    if item.exhaustive {
                        "exhaustive"
                    } else {
                        "sampled"
                    },
                    item.counterexample
                        .as_ref()
                        .map_or(String::new(), |c| format!(", counterexample {c}"))
                );
            }
        }
        if let Some(s) = self.same_type_canonical_pairing {
            let _ = writeln!(t, "same type under pairing (2i, 2i+1): {s}");
        }
        t
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn props(
    graph: &Path,
    cover: &Path,
    seed: u64,
    samples: usize,
    json: bool,
    out: &mut dyn Write,
) -> CliResult {
    let g = read_graph(graph)?;
    let c = read_cover(cover)?;
    let valid = c.verify(&g)?.valid;
    let perfect = valid && 2 * c.len() == g.rank();
    let mut report = PropsReport {
        n: c.n(),
        bicliques: c.len(),
        valid,
        perfect,
        thm21: None,
        sdr: None,
        even_clique: None,
        same_type_canonical_pairing: None,
    };
    if perfect {
        report.thm21 = Some(properties::thm21_check(
            &g,
            &c.incidence_matrix(),
            samples.min(1000),
            seed,
        )?);
        report.sdr = Some(properties::sdr_check(&g, &c, &g.adjacency().row_basis())?);
        let n = g.n();
        if n % 2 == 0 && g.edge_count() == n * (n - 1) / 2 {
            report.even_clique = Some(properties::even_clique_props(&c, n, samples, seed)?);
            let pairing: Vec<(usize, usize)> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
            report.same_type_canonical_pairing = Some(properties::same_type_check(&c, &pairing)?);
        }
    }
    let text = if json {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    } else {
        report.to_text()
    };
    emit(out, &text)?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_INVALID
    })
}
