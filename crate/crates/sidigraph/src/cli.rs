//! The `sidigraph` command.
//!
//! Exit codes: 0 on success, 1 when a check fails or a computation does not
//! converge, 2 on usage, input or parse errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sidigraph_core::charpoly::charpoly_exact;
use sidigraph_core::constructions::{cartesian_product, family_chord, power_family, FamilySpec};
use sidigraph_core::coulson::{quasi_order_compare, QuasiOrderRelation};
use sidigraph_core::cycles::classify;
use sidigraph_core::search::{
    search_by_charpoly, SearchConstraints, SearchMode, DEFAULT_SEARCH_BUDGET,
};
use sidigraph_core::spectra::{cospectral, energy};
use sidigraph_core::{Error as CoreError, Sidigraph};

use crate::checks::{chord_expected, run_suite, CheckConfig, CheckRow, Suite};
use crate::fixtures::{default_fixture_dir, load_fixture, FixtureError};
use crate::format::{
    coefficient_strings, parse_polynomial, parse_sidigraph, render_sidigraph, ParseError,
};
use crate::report::{analyze, sig12, Sig12};

/// Energy agreement required of a chord-family pair.
pub const FAMILY_ENERGY_TOL: f64 = 1e-9;

#[derive(Parser, Debug)]
#[command(
    name = "sidigraph",
    version,
    about = "Spectral analysis of signed digraphs"
)]
struct Cli {
    /// Tolerance for integral, real and Gaussian spectrum classes.
    #[arg(long, global = true, default_value_t = 1e-6)]
    tol_class: f64,
    /// Tolerance for energy comparisons in the check suites.
    #[arg(long, global = true, default_value_t = 1e-4)]
    tol_energy: f64,
    /// Absolute tolerance of the energy integrals.
    #[arg(long, global = true, default_value_t = 1e-6)]
    tol_quad: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Characteristic polynomial, spectrum, energy and structure of a graph.
    Analyze {
        /// A sidigraph file, or `fixture:<name>` for a built-in fixture.
        input: String,
        /// Write JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Build a cospectral or equienergetic family and verify it.
    Family(FamilyArgs),
    /// Run a verification suite.
    Check {
        /// oracle, delta-forms, coulson, chord-families, products or reference-values
        #[arg(value_parser = suite_name)]
        suite: Suite,
        /// Use a tenth of the default sample counts.
        #[arg(long)]
        quick: bool,
        /// Write JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Find sidigraphs with a given characteristic polynomial.
    Search(SearchArgs),
    /// Cartesian product of two graphs.
    Product {
        first: String,
        second: String,
        /// Write the product here instead of standard output.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Compare two first-alternating-class members in the coefficient order.
    Compare {
        first: String,
        second: String,
        /// Write JSON instead of text
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyKindArg {
    ChordEven,
    ChordOdd,
    Power,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    kind: FamilyKindArg,
    /// Order for chord families, exponent for power families.
    #[arg(long)]
    n: usize,
    /// Chord length for chord families.
    #[arg(long)]
    j: Option<usize>,
    /// First factor of a power family (default `fixture:thm211_s1`).
    #[arg(long)]
    first: Option<String>,
    /// Second factor of a power family (default `fixture:thm211_s2`).
    #[arg(long)]
    second: Option<String>,
    /// Directory for the member files; members go to standard output
    /// otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Number of vertices
    n: usize,
    /// Leading-first coefficients, e.g. "1 0 -3 2 0".
    polynomial: String,
    /// Keep only strongly connected graphs
    #[arg(long)]
    strongly_connected: bool,
    /// Keep only graphs that are not cycle balanced
    #[arg(long)]
    non_balanced: bool,
    /// Keep only bipartite graphs
    #[arg(long)]
    bipartite: bool,
    /// Skip graphs with more arcs than this
    #[arg(long)]
    max_arcs: Option<usize>,
    /// Largest number of candidates an exhaustive search may visit.
    #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
    budget: u64,
    /// Sample this many random graphs instead of searching exhaustively.
    #[arg(long)]
    random: Option<u64>,
    /// Seed of the random search
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Stop a random search after this many matches.
    #[arg(long, default_value_t = 10)]
    wanted: usize,
    /// Write JSON instead of text
    #[arg(long)]
    json: bool,
}

fn suite_name(s: &str) -> Result<Suite, String> {
    Suite::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite `{s}`; expected one of {}", names.join(", "))
    })
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Fixture(#[from] FixtureError),
    #[error(transparent)]
    Core(#[from] CoreError),
    /// A check failed; the details were already printed.
    #[error("checks failed")]
    Failed,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed => 1,
            CliError::Core(e) => match e {
                CoreError::ConvergenceFailure { .. }
                | CoreError::QuadratureFailure { .. }
                | CoreError::CycleBudgetExceeded { .. }
                | CoreError::SearchBudgetExceeded { .. }
                | CoreError::FixtureValidationFailure { .. } => 1,
                _ => 2,
            },
            _ => 2,
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(CliError::Failed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Analyze { input, json } => {
            let s = read_input(input)?;
            let report = analyze(input, &s, cli.tol_class)?;
            let text = if *json {
                report.to_json() + "\n"
            } else {
                report.to_table()
            };
            emit(out, &text)
        }
        Command::Family(args) => family(args, out),
        Command::Check { suite, quick, json } => {
            let mut cfg = if *quick {
                CheckConfig::quick()
            } else {
                CheckConfig::default()
            };
            cfg.tol_class = cli.tol_class;
            cfg.tol_energy = cli.tol_energy;
            cfg.quad.abs_tol = cli.tol_quad;
            let rows = run_suite(*suite, &cfg);
            let passed = rows.iter().all(|r| r.passed);
            if *json {
                let doc = CheckJson {
                    suite: suite.name(),
                    passed,
                    rows: &rows,
                };
                emit(
                    out,
                    &(serde_json::to_string_pretty(&doc).expect("serializes") + "\n"),
                )?;
            } else {
                for r in &rows {
                    emit(out, &format!("{r}\n"))?;
                }
                let failed = rows.iter().filter(|r| !r.passed).count();
                emit(
                    out,
                    &format!(
                        "{}: {} of {} passed\n",
                        suite.name(),
                        rows.len() - failed,
                        rows.len()
                    ),
                )?;
            }
            if passed {
                Ok(())
            } else {
                Err(CliError::Failed)
            }
        }
        Command::Search(args) => search(args, out),
        Command::Product {
            first,
            second,
            out: path,
        } => {
            let (a, b) = (read_input(first)?, read_input(second)?);
            let p = cartesian_product(&a, &b)?;
            let text = render_sidigraph(&p, Some(&format!("product of {first} and {second}")));
            match path {
                Some(path) => write_file(path, &text),
                None => emit(out, &text),
            }
        }
        Command::Compare {
            first,
            second,
            json,
        } => {
            let (a, b) = (read_input(first)?, read_input(second)?);
            let cmp = quasi_order_compare(&a, &b)?;
            let (e1, e2) = (energy(&a)?, energy(&b)?);
            let relation = match cmp.relation {
                QuasiOrderRelation::PrecedesStrictly => "precedes_strictly",
                QuasiOrderRelation::Equal => "equal",
                QuasiOrderRelation::SucceedsStrictly => "succeeds_strictly",
                QuasiOrderRelation::Incomparable => "incomparable",
            };
            if *json {
                let doc = CompareJson {
                    relation,
                    c1: cmp.c1.iter().map(ToString::to_string).collect(),
                    c2: cmp.c2.iter().map(ToString::to_string).collect(),
                    energy1: Sig12(e1),
                    energy2: Sig12(e2),
                };
                emit(
                    out,
                    &(serde_json::to_string_pretty(&doc).expect("serializes") + "\n"),
                )
            } else {
                let op = match cmp.relation {
                    QuasiOrderRelation::PrecedesStrictly => "<",
                    QuasiOrderRelation::SucceedsStrictly => ">",
                    QuasiOrderRelation::Equal => "=",
                    QuasiOrderRelation::Incomparable => "?",
                };
                emit(out, &format!("{relation}; E: {e1:.4} {op} {e2:.4}\n"))
            }
        }
    }
}

#[derive(Serialize)]
struct CheckJson<'a> {
    suite: &'a str,
    passed: bool,
    rows: &'a [CheckRow],
}

#[derive(Serialize)]
struct CompareJson {
    relation: &'static str,
    c1: Vec<String>,
    c2: Vec<String>,
    energy1: Sig12,
    energy2: Sig12,
}

#[derive(Serialize)]
struct MemberJson {
    file: Option<String>,
    charpoly: Vec<String>,
    expected: Option<Vec<String>>,
    energy: Sig12,
    strongly_connected: bool,
    cycle_balanced: bool,
}

#[derive(Serialize)]
struct FamilyJson {
    kind: String,
    n: usize,
    j: Option<usize>,
    members: Vec<MemberJson>,
    cospectral: bool,
    energy_gap: Sig12,
    passed: bool,
}

#[derive(Serialize)]
struct SearchHit {
    n: usize,
    arcs: Vec<(usize, usize, String)>,
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Reads a graph file, or a built-in fixture for `fixture:<name>`.
fn read_input(input: &str) -> Result<Sidigraph, CliError> {
    if let Some(name) = input.strip_prefix("fixture:") {
        return Ok(load_fixture(&default_fixture_dir(), name)?);
    }
    let text = std::fs::read_to_string(input).map_err(|source| CliError::Io {
        path: input.to_string(),
        source,
    })?;
    parse_sidigraph(&text).map_err(|source| CliError::Parse {
        path: input.to_string(),
        source,
    })
}

fn member(
    s: &Sidigraph,
    file: Option<String>,
    expected: Option<Vec<String>>,
) -> Result<MemberJson, CliError> {
    Ok(MemberJson {
        file,
        charpoly: coefficient_strings(&charpoly_exact(s)?),
        expected,
        energy: Sig12(energy(s)?),
        strongly_connected: s.is_strongly_connected(),
        cycle_balanced: classify(s)?.is_cycle_balanced,
    })
}

fn family(args: &FamilyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let kind_name = args
        .kind
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let (graphs, expected, j) = match args.kind {
        FamilyKindArg::ChordEven | FamilyKindArg::ChordOdd => {
            let j = args
                .j
                .ok_or_else(|| CliError::Usage("chord families need --j".into()))?;
            let spec = if args.kind == FamilyKindArg::ChordEven {
                FamilySpec::chord_even(args.n, j)
            } else {
                FamilySpec::chord_odd(args.n, j)
            };
            let (s1, s2) = family_chord(spec)?;
            let (p1, p2) = chord_expected(spec);
            (vec![s1, s2], Some(vec![p1, p2]), Some(j))
        }
        FamilyKindArg::Power => {
            let first = read_input(args.first.as_deref().unwrap_or("fixture:thm211_s1"))?;
            let second = read_input(args.second.as_deref().unwrap_or("fixture:thm211_s2"))?;
            (power_family(&first, &second, args.n)?, None, None)
        }
    };

    let mut members = Vec::new();
    for (i, s) in graphs.iter().enumerate() {
        let label = match j {
            Some(j) => format!("{kind_name}-n{}-j{j}-{}", args.n, i + 1),
            None => format!("{kind_name}-n{}-k{}", args.n, i + 1),
        };
        let text = render_sidigraph(s, Some(&label));
        let file = match &args.out {
            Some(dir) => {
                let path = dir.join(format!("{label}.sdg"));
                write_file(&path, &text)?;
                Some(path.display().to_string())
            }
            None => {
                if !args.json {
                    emit(out, &text)?;
                    emit(out, "\n")?;
                }
                None
            }
        };
        let want = expected.as_ref().map(|e| coefficient_strings(&e[i]));
        members.push(member(s, file, want)?);
    }

    let energies: Vec<f64> = members.iter().map(|m| m.energy.0).collect();
    let gap = energies.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
        - energies.iter().cloned().fold(f64::INFINITY, f64::min);
    let all_cospectral = graphs
        .windows(2)
        .map(|w| cospectral(&w[0], &w[1]))
        .collect::<Result<Vec<bool>, _>>()?
        .into_iter()
        .all(|c| c);
    let strongly_connected = members.iter().all(|m| m.strongly_connected);
    let mut rows: Vec<(String, bool)> = Vec::new();
    match &expected {
        Some(_) => {
            for (i, m) in members.iter().enumerate() {
                let ok = m.expected.as_ref() == Some(&m.charpoly);
                rows.push((
                    format!("member {} polynomial [{}]", i + 1, m.charpoly.join(" ")),
                    ok,
                ));
            }
            rows.push((
                format!("equienergetic: |E1 - E2| = {gap:.3e} <= {FAMILY_ENERGY_TOL:e}"),
                gap <= FAMILY_ENERGY_TOL,
            ));
            rows.push(("noncospectral".into(), !all_cospectral));
            rows.push((
                "neither member cycle balanced".into(),
                members.iter().all(|m| !m.cycle_balanced),
            ));
        }
        None => rows.push(("members pairwise cospectral".into(), all_cospectral)),
    }
    rows.push(("all members strongly connected".into(), strongly_connected));
    let passed = rows.iter().all(|(_, ok)| *ok);

    if args.json {
        let doc = FamilyJson {
            kind: kind_name,
            n: args.n,
            j,
            members,
            cospectral: all_cospectral,
            energy_gap: Sig12(gap),
            passed,
        };
        emit(
            out,
            &(serde_json::to_string_pretty(&doc).expect("serializes") + "\n"),
        )?;
    } else {
        for (i, m) in members.iter().enumerate() {
            emit(out, &format!("E{} = {}\n", i + 1, sig12(m.energy.0)))?;
        }
        for (label, ok) in &rows {
            emit(
                out,
                &format!("{}  {label}\n", if *ok { "PASS" } else { "FAIL" }),
            )?;
        }
    }
    if passed {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn search(args: &SearchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let target = parse_polynomial(&args.polynomial)
        .map_err(|e| CliError::Usage(format!("polynomial: {e}")))?;
    let constraints = SearchConstraints {
        strongly_connected: args.strongly_connected,
        non_cycle_balanced: args.non_balanced,
        bipartite: args.bipartite,
        max_arcs: args.max_arcs,
    };
    let mode = match args.random {
        Some(samples) => SearchMode::Random {
            samples,
            seed: args.seed,
            wanted: args.wanted,
        },
        None => SearchMode::Exhaustive {
            budget: args.budget,
        },
    };
    let hits = search_by_charpoly(args.n, &target, constraints, mode)?;
    if args.json {
        let doc: Vec<SearchHit> = hits
            .iter()
            .map(|s| SearchHit {
                n: s.order(),
                arcs: s
                    .arcs()
                    .iter()
                    .map(|a| (a.tail + 1, a.head + 1, a.sign.symbol().to_string()))
                    .collect(),
            })
            .collect();
        return emit(
            out,
            &(serde_json::to_string_pretty(&doc).expect("serializes") + "\n"),
        );
    }
    emit(out, &format!("# {} results\n", hits.len()))?;
    for (i, s) in hits.iter().enumerate() {
        emit(out, "\n")?;
        emit(
            out,
            &render_sidigraph(s, Some(&format!("result {}", i + 1))),
        )?;
    }
    Ok(())
}
