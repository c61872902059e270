//! `qlogic`: run the simulated algorithms and print reports.
//!
//! Exit status: 0 for a conclusive run (or a passing `reproduce`), 2 for an
//! inconclusive run, 1 for invalid input or a failing `reproduce`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qlogic::algorithms::deutsch::{deutsch_measurement_planes, deutsch_planes};
use qlogic::algorithms::shor::{default_input_dimension, shor_geometry, ShorOptions};
use qlogic::algorithms::simon::{default_max_trials, simon_period_subspace};
use qlogic::algorithms::{
    bit_string, deutsch_cleve, deutsch_jozsa, deutsch_xor, shor_factor, simon, OutputRegister,
    RunReport, Verdict, SCHEMA_VERSION,
};
use qlogic::oracles::{make_simon_instance, NamedOracle, TruthTable};
use qlogic::reproduce::reproduce;
use qlogic::statevector::qubit_count;
use qlogic::subspace::{commutes_within, meet, Subspace};
use qlogic::SimRng;

#[derive(Debug, Parser)]
#[command(
    name = "qlogic",
    version,
    about = "Statevector simulation of Deutsch, Simon and Shor with subspace geometry"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Seed for every random choice and measurement.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Tolerance for reproduce checks and geometry containment.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Deutsch's XOR algorithm on a one-bit function.
    Deutsch(OracleArgs),
    /// Cleve's deterministic variant on a one-bit function.
    Cleve(OracleArgs),
    /// Deutsch-Jozsa on an n-bit Boolean function.
    Dj(OracleArgs),
    /// Simon's algorithm on a 2-to-1 function with an XOR period.
    Simon(SimonArgs),
    /// Shor's factoring algorithm.
    Shor(ShorArgs),
    /// Print the subspaces and their relations for an algorithm family.
    Geometry(GeometryArgs),
    /// Run every worked-example check and print a pass/fail table.
    Reproduce,
}

#[derive(Debug, Args)]
struct OracleArgs {
    /// Built-in one-bit function: constant0, constant1, identity, not.
    #[arg(long, conflicts_with = "oracle_file")]
    oracle: Option<String>,
    /// Truth table JSON: {"domain_size", "codomain_size", "values"}.
    #[arg(long)]
    oracle_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SimonArgs {
    /// Number of input bits.
    #[arg(long)]
    n: Option<u32>,
    /// Hidden period, as an integer (`5`) or bit string (`0b101`).
    #[arg(long, value_parser = parse_int, conflicts_with = "oracle_file")]
    r: Option<u64>,
    #[arg(long)]
    oracle_file: Option<PathBuf>,
    /// Defaults to 10 n.
    #[arg(long)]
    max_trials: Option<usize>,
}

#[derive(Debug, Args)]
struct ShorArgs {
    /// Number to factor.
    #[arg(long = "N")]
    modulus: u64,
    /// Force this base in every round.
    #[arg(long)]
    a: Option<u64>,
    /// Input register dimension (default: smallest power of two >= N^2).
    #[arg(long)]
    s: Option<usize>,
    #[arg(long, default_value_t = 20)]
    max_rounds: usize,
    /// Use an output register of exactly N levels instead of a power of two.
    #[arg(long)]
    exact_output: bool,
}

#[derive(Debug, Args)]
struct GeometryArgs {
    #[arg(value_enum)]
    family: Family,
    /// Simon: number of input bits.
    #[arg(long, default_value_t = 2)]
    n: u32,
    /// Shor: modulus.
    #[arg(long = "N", default_value_t = 15)]
    modulus: u64,
    /// Shor: base.
    #[arg(long, default_value_t = 7)]
    a: u64,
    /// Shor: input register dimension.
    #[arg(long, default_value_t = 64)]
    s: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Deutsch,
    Simon,
    Shor,
}

fn parse_int(text: &str) -> Result<u64, String> {
    let parsed = match text.strip_prefix("0b") {
        Some(bits) => u64::from_str_radix(bits, 2),
        None => text.parse(),
    };
    parsed.map_err(|e| format!("`{text}` is not an integer or 0b-prefixed bit string: {e}"))
}

/// A failure that maps to exit status 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    let g = &cli.global;
    if !(g.tolerance.is_finite() && g.tolerance > 0.0) {
        return Err(Failure(format!(
            "--tolerance must be positive, got {}",
            g.tolerance
        )));
    }
    let mut rng = SimRng::new(g.seed);
    let report = match &cli.command {
        Command::Deutsch(o) => deutsch_xor(&one_bit_oracle(o)?, &mut rng)?,
        Command::Cleve(o) => deutsch_cleve(&one_bit_oracle(o)?, &mut rng)?,
        Command::Dj(o) => {
            let f = load_oracle(o)?;
            let n = qubit_count(f.domain_size())
                .filter(|&n| n >= 1)
                .ok_or_else(|| {
                    Failure(format!(
                        "domain_size must be a power of two >= 2, got {}",
                        f.domain_size()
                    ))
                })?;
            deutsch_jozsa(&f, n, &mut rng)?
        }
        Command::Simon(args) => run_simon(args, g.seed, &mut rng)?,
        Command::Shor(args) => {
            let opts = ShorOptions {
                s: args.s,
                a: args.a,
                max_rounds: args.max_rounds,
                output: if args.exact_output {
                    OutputRegister::Exact
                } else {
                    OutputRegister::PowerOfTwo
                },
            };
            if let Some(s) = opts.s {
                if s < 2 {
                    return Err(Failure(format!("--s must be at least 2, got {s}")));
                }
            } else if args.modulus >= 2 && default_input_dimension(args.modulus) > 1 << 17 {
                return Err(Failure(format!(
                    "N = {} is too large for the default s; pass --s",
                    args.modulus
                )));
            }
            shor_factor(args.modulus, &mut rng, opts)?
        }
        Command::Geometry(args) => {
            let geometry = geometry(args, g.tolerance)?;
            return Ok((render(&geometry, g.format, render_geometry), 0));
        }
        Command::Reproduce => {
            let rep = reproduce(g.tolerance, g.seed);
            let text = match g.format {
                Format::Json => format!("{}\n", rep.to_json()),
                Format::Text => rep.table(),
            };
            return Ok((text, if rep.all_passed() { 0 } else { 1 }));
        }
    };
    let code = if report.conclusive { 0 } else { 2 };
    Ok((render(&report, g.format, render_report), code))
}

fn render<T: Serialize>(value: &T, format: Format, text: fn(&T) -> String) -> String {
    match format {
        Format::Json => {
            format!(
                "{}\n",
                serde_json::to_string_pretty(value).expect("serializable")
            )
        }
        Format::Text => text(value),
    }
}

fn load_oracle_file(path: &Path) -> Result<TruthTable, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let field = e.path().to_string();
        if field == "." {
            Failure(format!("{}: {}", path.display(), e.inner()))
        } else {
            Failure(format!(
                "{}: field `{field}`: {}",
                path.display(),
                e.inner()
            ))
        }
    })
}

fn load_oracle(o: &OracleArgs) -> Result<TruthTable, Failure> {
    match (&o.oracle, &o.oracle_file) {
        (Some(name), None) => NamedOracle::parse(name)
            .map(NamedOracle::table)
            .ok_or_else(|| {
                Failure(format!(
                "unknown --oracle `{name}`; expected one of constant0, constant1, identity, not"
            ))
            }),
        (None, Some(path)) => load_oracle_file(path),
        _ => Err(Failure(
            "pass exactly one of --oracle or --oracle-file".into(),
        )),
    }
}

fn one_bit_oracle(o: &OracleArgs) -> Result<TruthTable, Failure> {
    let f = load_oracle(o)?;
    if f.domain_size() != 2 || f.codomain_size() != 2 {
        return Err(Failure(format!(
            "domain_size and codomain_size must both be 2 for a one-bit function, got {} and {}",
            f.domain_size(),
            f.codomain_size()
        )));
    }
    Ok(f)
}

fn run_simon(args: &SimonArgs, seed: u64, rng: &mut SimRng) -> Result<RunReport, Failure> {
    let (f, n) = match (&args.oracle_file, args.r) {
        (Some(path), None) => {
            let f = load_oracle_file(path)?;
            let n = qubit_count(f.domain_size()).ok_or_else(|| {
                Failure(format!(
                    "domain_size must be a power of two, got {}",
                    f.domain_size()
                ))
            })?;
            if let Some(given) = args.n {
                if given != n {
                    return Err(Failure(format!(
                        "--n {given} does not match domain_size {}",
                        f.domain_size()
                    )));
                }
            }
            (f, n)
        }
        (None, Some(r)) => {
            let n = args.n.ok_or_else(|| Failure("--r needs --n".into()))?;
            if n == 0 || n > 8 {
                return Err(Failure(format!("--n must be between 1 and 8, got {n}")));
            }
            if r == 0 || r >= 1 << n {
                return Err(Failure(format!(
                    "--r must satisfy 0 < r < 2^n = {}, got {r}",
                    1u64 << n
                )));
            }
            // instance labels come from a separate stream so they do not
            // perturb the measurement sequence
            let f = make_simon_instance(n, r as usize, &mut SimRng::stream(seed, 1))?;
            (f, n)
        }
        _ => return Err(Failure("pass either --n with --r, or --oracle-file".into())),
    };
    let trials = args.max_trials.unwrap_or_else(|| default_max_trials(n));
    Ok(simon(&f, n, rng, trials)?)
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Constant => "constant".into(),
        Verdict::Balanced => "balanced".into(),
        Verdict::Inconclusive => "inconclusive".into(),
        Verdict::Period { r, bits } => format!("period r = {bits} ({r})"),
        Verdict::Factors { factors, a, period } => {
            let mut s = format!("factors {} x {} (a = {a}", factors[0], factors[1]);
            if let Some(r) = period {
                let _ = write!(s, ", r = {r}");
            }
            s + ")"
        }
    }
}

fn render_report(r: &RunReport) -> String {
    let mut out = String::new();
    let algorithm = serde_json::to_value(r.algorithm).expect("serializable");
    let _ = writeln!(
        out,
        "algorithm:  {}",
        algorithm.as_str().unwrap_or_default()
    );
    let _ = writeln!(out, "verdict:    {}", verdict_text(&r.verdict));
    let _ = writeln!(out, "conclusive: {}", r.conclusive);
    let _ = writeln!(out, "seed:       {}", r.seed);
    let _ = writeln!(out, "trials:     {}", r.trials_used);
    if !r.trace.is_empty() {
        let _ = writeln!(out, "measurements:");
        for t in &r.trace {
            let trial = t.trial.map(|k| format!("#{k} ")).unwrap_or_default();
            let _ = writeln!(
                out,
                "  {trial}register {} -> {} (p = {:.6})",
                t.register, t.outcome, t.probability
            );
        }
    }
    if !r.rounds.is_empty() {
        let _ = writeln!(out, "rounds:");
        for round in &r.rounds {
            let outcome = serde_json::to_value(round.outcome).expect("serializable");
            let mut line = format!("  #{} a = {}", round.round, round.a);
            if let Some(c) = round.c {
                let _ = write!(line, ", c = {c}");
            }
            if let Some(cr) = round.candidate_r {
                let _ = write!(line, ", r = {cr}");
            }
            if let Some(h) = round.half_power {
                let _ = write!(line, ", a^(r/2) = {h}");
            }
            let _ = writeln!(out, "{line}: {}", outcome.as_str().unwrap_or_default());
        }
    }
    if !r.geometry.is_empty() {
        let _ = writeln!(out, "geometry:");
        for g in &r.geometry {
            let support = g
                .support
                .as_ref()
                .map(|s| format!(" span{s:?}"))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "  {} (dim {}){support}: contains final state = {}",
                g.name, g.dimension, g.contains_final
            );
        }
    }
    out
}

#[derive(Debug, Serialize)]
struct GeometryReport {
    schema_version: u32,
    family: String,
    subspaces: Vec<NamedSubspace>,
    relations: Vec<Relation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    notes: Vec<String>,
}

#[derive(Debug, Serialize)]
struct NamedSubspace {
    name: String,
    dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    support: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    contains_final: Option<bool>,
}

impl NamedSubspace {
    fn new(name: impl Into<String>, s: &Subspace, contains_final: Option<bool>) -> Self {
        Self {
            name: name.into(),
            dimension: s.dimension(),
            support: s.coordinate_support(),
            contains_final,
        }
    }
}

#[derive(Debug, Serialize)]
struct Relation {
    left: String,
    right: String,
    commute: bool,
    meet_dimension: usize,
    left_within_right: bool,
}

fn relations(named: &[(String, Subspace)], tol: f64) -> Result<Vec<Relation>, Failure> {
    let mut out = Vec::new();
    for (i, (ln, l)) in named.iter().enumerate() {
        for (rn, r) in &named[i + 1..] {
            out.push(Relation {
                left: ln.clone(),
                right: rn.clone(),
                commute: commutes_within(l, r, tol)?,
                meet_dimension: meet(l, r)?.dimension(),
                left_within_right: l.basis().iter().all(|b| r.contains_within(b, tol)),
            });
        }
    }
    Ok(out)
}

fn geometry(args: &GeometryArgs, tol: f64) -> Result<GeometryReport, Failure> {
    let mut notes = Vec::new();
    let mut finals = Vec::new();
    let named: Vec<(String, Subspace)> = match args.family {
        Family::Deutsch => {
            let (pc, pb) = deutsch_planes()?;
            let (mc, mb) = deutsch_measurement_planes()?;
            notes.push("constant/balanced planes are spanned by the states after U_f; the measured planes follow the final Hadamards".into());
            vec![
                ("constant_plane".into(), pc),
                ("balanced_plane".into(), pb),
                ("constant_measured".into(), mc),
                ("balanced_measured".into(), mb),
            ]
        }
        Family::Simon => {
            if args.n == 0 || args.n > 4 {
                return Err(Failure(format!(
                    "--n must be between 1 and 4, got {}",
                    args.n
                )));
            }
            (1..1usize << args.n)
                .map(|r| {
                    Ok((
                        format!("period_{}", bit_string(r as u64, args.n)),
                        simon_period_subspace(args.n, r)?,
                    ))
                })
                .collect::<Result<_, Failure>>()?
        }
        Family::Shor => {
            let g = shor_geometry(args.a, args.modulus, args.s)?;
            notes.push(format!("order of {} mod {} is {}", g.a, g.modulus, g.order));
            for (r, why) in &g.excluded {
                notes.push(format!("r = {r} excluded: {why}"));
            }
            finals = g.subspaces.iter().map(|p| Some(p.contains_final)).collect();
            g.subspaces
                .into_iter()
                .map(|p| (format!("period_subspace_r{}", p.r), p.subspace))
                .collect()
        }
    };
    let subspaces = named
        .iter()
        .enumerate()
        .map(|(i, (name, s))| NamedSubspace::new(name.clone(), s, finals.get(i).copied().flatten()))
        .collect();
    let family = format!("{:?}", args.family).to_lowercase();
    Ok(GeometryReport {
        schema_version: SCHEMA_VERSION,
        family,
        subspaces,
        relations: relations(&named, tol)?,
        notes,
    })
}

fn render_geometry(g: &GeometryReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} geometry", g.family);
    for s in &g.subspaces {
        let support = s
            .support
            .as_ref()
            .map(|v| format!(" span{v:?}"))
            .unwrap_or_default();
        let fin = s
            .contains_final
            .map(|b| format!(", contains final state = {b}"))
            .unwrap_or_default();
        let _ = writeln!(out, "  {} (dim {}){support}{fin}", s.name, s.dimension);
    }
    for r in &g.relations {
        let _ = writeln!(
            out,
            "  {} ^ {}: meet dim {}, commute {}, nested {}",
            r.left, r.right, r.meet_dimension, r.commute, r.left_within_right
        );
    }
    for n in &g.notes {
        let _ = writeln!(out, "  note: {n}");
    }
    out
}
