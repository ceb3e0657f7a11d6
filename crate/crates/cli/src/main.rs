use std::fs;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use numsemi::closedsets::{f_omega_table, rho_theorem_table};
use numsemi::explore::oeis::{compare, BFile};
use numsemi::verify::{
    check_even_members, check_gap_bound, check_kinship, check_max_q, check_sumset_lemma,
    VerificationReport,
};
use numsemi::{
    ordinarization_number, qo_chain, qo_number, CountTable, Error, Explorer, ForestGraph,
    Semigroup,
};

/// Numerical semigroups: profiles, transforms, counting tables, forests and
/// lemma verification.
#[derive(Parser)]
#[command(name = "numsemi", version)]
struct Cli {
    /// Worker threads; 1 selects the single-threaded engines.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,

    /// Largest genus any command may explore (at most 62).
    #[arg(long, global = true, default_value_t = numsemi::DEFAULT_GENUS_BOUND)]
    genus_bound: u32,

    /// Report timing and throughput on standard error.
    #[arg(long, global = true)]
    progress: bool,

    /// Output format; `dot` applies to forest and tree only, `csv` to
    /// tables, forests and trees.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Profile of one semigroup given as `gaps: a,b,...` or `gens: a,b,...`.
    Info { semigroup: String },
    /// Number of semigroups of each genus up to the given one.
    Count {
        #[arg(long)]
        max_genus: u32,
    },
    /// Counting tables.
    Table {
        #[arg(value_enum)]
        kind: TableArg,
        /// Largest genus (or ω for `f`).
        #[arg(long)]
        max: u32,
    },
    /// The quasi-ordinarization forest of one genus.
    Forest {
        #[arg(long)]
        genus: u32,
    },
    /// The semigroup tree (`T`, cut at the genus) or the ordinarization tree
    /// of one genus (`Tg`).
    Tree {
        #[arg(value_enum)]
        kind: TreeArg,
        #[arg(long)]
        genus: u32,
    },
    /// Run verification suites; exits 1 if any violation is found.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// `HI` or `LO..=HI`: genus range, or set sizes for `sumset`.
        #[arg(long)]
        range: Option<String>,
        /// Largest element considered by the `sumset` suite.
        #[arg(long, default_value_t = 14)]
        value_bound: u32,
    },
    /// Compare a computed sequence against an OEIS b-file; exits 1 on the
    /// first mismatch.
    Oeis {
        #[arg(long, value_enum)]
        sequence: Sequence,
        #[arg(long)]
        bfile: PathBuf,
        /// Largest index to compute (default: the b-file's last index, capped
        /// at 30 for A007323 and 15 for A210581).
        #[arg(long)]
        max: Option<u32>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    Rho,
    O,
    F,
    RhoTheorem,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeArg {
    #[value(name = "T")]
    T,
    #[value(name = "Tg")]
    Tg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Sumset,
    EvenMembers,
    GapBound,
    MaxQ,
    Kinship,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sequence {
    #[value(name = "A007323")]
    A007323,
    #[value(name = "A210581")]
    A210581,
}

/// A failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GenusBoundExceeded { .. } | Error::CountOverflow { .. } | Error::GenusLimit { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// What a command produced: its standard output and whether it passed.
struct Outcome {
    stdout: String,
    passed: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    check_format(cli)?;
    let mut explorer = Explorer::new().with_bound(cli.genus_bound)?;
    match cli.threads {
        Some(1) => explorer = explorer.sequential(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
            .map_err(|e| Failure::usage(e.to_string()))?,
        None => {}
    }
    let started = Instant::now();
    let outcome = dispatch(cli, &explorer)?;
    if cli.progress {
        eprintln!("done in {:.3?}", started.elapsed());
    }
    Ok(outcome)
}

fn check_format(cli: &Cli) -> Result<(), Failure> {
    let allowed: &[Format] = match cli.command {
        Command::Info { .. } | Command::Verify { .. } | Command::Oeis { .. } => &[Format::Text, Format::Json],
        Command::Count { .. } | Command::Table { .. } => &[Format::Text, Format::Csv, Format::Json],
        Command::Forest { .. } | Command::Tree { .. } => &[Format::Text, Format::Csv, Format::Json, Format::Dot],
    };
    if allowed.contains(&cli.format) {
        Ok(())
    } else {
        let name = cli.format.to_possible_value().unwrap().get_name().to_string();
        Err(Failure::usage(format!("format `{name}` is not available for this command")))
    }
}

fn dispatch(cli: &Cli, explorer: &Explorer) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Info { semigroup } => info(cli, semigroup),
        Command::Count { max_genus } => {
            let t = explorer.count_by_genus(*max_genus)?;
            progress(cli, "count", (0..=*max_genus).map(|g| t.row_sum(g)).sum());
            Ok(Outcome::ok(render_table(cli, &t)))
        }
        Command::Table { kind, max } => {
            let t = match kind {
                TableArg::Rho => explorer.rho_table(*max)?,
                TableArg::O => explorer.o_table(*max)?,
                TableArg::F => f_omega_table(explorer, *max)?,
                TableArg::RhoTheorem => rho_theorem_table(explorer, *max)?,
            };
            Ok(Outcome::ok(render_table(cli, &t)))
        }
        Command::Forest { genus } => Ok(Outcome::ok(render_graph(cli, &explorer.forest(*genus)?))),
        Command::Tree { kind, genus } => {
            let graph = match kind {
                TreeArg::T => explorer.tree_t(*genus)?,
                TreeArg::Tg => explorer.tree_tg(*genus)?,
            };
            Ok(Outcome::ok(render_graph(cli, &graph)))
        }
        Command::Verify {
            suite,
            range,
            value_bound,
        } => verify(cli, explorer, *suite, range.as_deref(), *value_bound),
        Command::Oeis { sequence, bfile, max } => oeis(cli, explorer, *sequence, bfile, *max),
    }
}

fn progress(cli: &Cli, what: &str, nodes: u64) {
    if cli.progress {
        eprintln!("{what}: visited {nodes} semigroups");
    }
}

fn to_json_text(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("values serialize"))
}

fn render_table(cli: &Cli, t: &CountTable) -> String {
    match cli.format {
        Format::Csv => t.to_csv(),
        Format::Json => to_json_text(&t.to_json()),
        _ => t.to_text(),
    }
}

fn render_graph(cli: &Cli, g: &ForestGraph) -> String {
    match cli.format {
        Format::Dot => g.to_dot(),
        Format::Csv => g.to_csv(),
        Format::Json => to_json_text(&g.to_json()),
        Format::Text => g.to_text(),
    }
}

fn join(values: &[u32]) -> String {
    values.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn opt(value: Option<u32>) -> String {
    value.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn info(cli: &Cli, spec: &str) -> Result<Outcome, Failure> {
    let s: Semigroup = spec.parse()?;
    let p = s.profile();
    let chain = qo_chain(&s);
    let candidates = s.candidates();
    let q = qo_number(&s);
    let r = ordinarization_number(&s);
    if cli.format == Format::Json {
        let v = json!({
            "semigroup": s.to_string(),
            "profile": p,
            "candidates": candidates,
            "qo_number": q,
            "qo_chain_end": chain.end().to_string(),
            "ordinarization_number": r,
            "dotted": s.dotted(),
        });
        return Ok(Outcome::ok(to_json_text(&v)));
    }
    let lines = [
        format!("semigroup: {s}"),
        format!("dotted: {}", s.dotted()),
        format!("genus: {}", p.genus),
        format!("multiplicity: {}", p.multiplicity),
        format!("frobenius: {}", opt(p.frobenius)),
        format!("conductor: {}", p.conductor),
        format!("sub_frobenius: {}", opt(p.sub_frobenius)),
        format!("subconductor: {}", opt(p.subconductor)),
        format!("generators: {}", join(&p.generators)),
        format!("enumeration: {}", join(&p.enumeration)),
        format!("candidates: {}", join(&candidates)),
        format!("qo_number: {q}"),
        format!("qo_chain_end: {}", chain.end()),
        format!("ordinarization_number: {r}"),
    ];
    Ok(Outcome::ok(lines.join("\n") + "\n"))
}

fn parse_range(text: &str) -> Result<RangeInclusive<u32>, Failure> {
    let bad = || Failure::usage(format!("invalid range `{text}`: expected `HI` or `LO..=HI`"));
    let (lo, hi) = match text.split_once("..=") {
        Some((lo, hi)) => (lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?),
        None => (0, text.trim().parse().map_err(|_| bad())?),
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn verify(
    cli: &Cli,
    explorer: &Explorer,
    suite: Suite,
    range: Option<&str>,
    value_bound: u32,
) -> Result<Outcome, Failure> {
    if suite == Suite::All && range.is_some() {
        return Err(Failure::usage("--range needs a single --suite"));
    }
    let range = range.map(parse_range).transpose()?;
    let genera = |default: RangeInclusive<u32>| -> Result<RangeInclusive<u32>, Failure> {
        let r = range.clone().unwrap_or(default);
        explorer.check_genus(*r.end())?;
        Ok(r)
    };
    let mut reports: Vec<VerificationReport> = Vec::new();
    let wants = |s: Suite| suite == Suite::All || suite == s;
    if wants(Suite::Sumset) {
        let sizes = range.clone().unwrap_or(1..=6);
        if *sizes.end() > 8 || value_bound > 24 {
            return Err(Failure::usage("sumset bounds are limited to n <= 8 and values <= 24"));
        }
        reports.push(check_sumset_lemma(*sizes.start() as usize..=*sizes.end() as usize, value_bound));
    }
    if wants(Suite::EvenMembers) {
        reports.push(check_even_members(genera(0..=16)?));
    }
    if wants(Suite::GapBound) {
        reports.push(check_gap_bound(genera(0..=12)?));
    }
    if wants(Suite::MaxQ) {
        reports.push(check_max_q(genera(0..=16)?));
    }
    if wants(Suite::Kinship) {
        reports.push(check_kinship(genera(0..=9)?));
    }
    if cli.progress {
        for r in &reports {
            eprintln!("{}: {} checks in {:.3?}", r.suite, r.checked, r.elapsed);
        }
    }
    let passed = reports.iter().all(VerificationReport::passed);
    let stdout = if cli.format == Format::Json {
        let all: Vec<Value> = reports.iter().map(VerificationReport::to_json).collect();
        to_json_text(&Value::Array(all))
    } else {
        reports.iter().map(VerificationReport::to_text).collect()
    };
    Ok(Outcome { stdout, passed })
}

fn oeis(
    cli: &Cli,
    explorer: &Explorer,
    sequence: Sequence,
    path: &PathBuf,
    max: Option<u32>,
) -> Result<Outcome, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let bfile = BFile::parse(&text)?;
    let (name, cap) = match sequence {
        Sequence::A007323 => ("A007323", 30),
        Sequence::A210581 => ("A210581", 15),
    };
    let last = bfile.terms.iter().map(|&(n, _)| n).max().unwrap_or(0);
    let max = max.unwrap_or_else(|| last.min(cap) as u32);
    let table = match sequence {
        Sequence::A007323 => explorer.count_by_genus(max)?,
        Sequence::A210581 => f_omega_table(explorer, max)?,
    };
    let computed: Vec<u128> = (0..=max).map(|i| table.get(i, 0) as u128).collect();
    let result = compare(&bfile, 0, &computed);
    let passed = result.agrees() && result.compared > 0;
    let stdout = if cli.format == Format::Json {
        to_json_text(&json!({ "sequence": name, "max": max, "comparison": result, "agrees": passed }))
    } else {
        match &result.first_divergence {
            Some(d) => format!(
                "{name}: mismatch at n={}: b-file {} computed {}\n",
                d.index, d.expected, d.computed
            ),
            None if result.compared == 0 => format!("{name}: no overlapping terms up to n={max}\n"),
            None => format!("{name}: {} terms agree (n <= {max})\n", result.compared),
        }
    };
    Ok(Outcome { stdout, passed })
}
