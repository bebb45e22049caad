//! Command line driver for the homdet verification library.
//!
//! Four subcommands wrap the library checks: `check` validates the Hecke
//! axioms and reports the quantum rank, `poincare` reconstructs the Poincare
//! series and detects the birank, `koszul` builds the homology table and
//! verifies concentration plus the scalar identity, and `lr` counts the
//! Littlewood-Richardson hom spaces. Every number is an exact rational;
//! `--json` emits a schema-stable report with rationals as "num/den" strings.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use homdet::error::Error;
use homdet::koszul::{KoszulComplex, KoszulTable, SuperMatrixPoint};
use homdet::partitions::verify_theorem1_homs;
use homdet::qspaces::poincare_profiles;
use homdet::rat::{parse_rat, qint, rat_int, rat_str, Rat};
use homdet::{zoo, HeckeSym, Limits};

#[derive(Parser)]
#[command(
    name = "homdet",
    version,
    about = "Exact verification of Hecke symmetries and their Koszul homology"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the Hecke axioms and report the quantum rank.
    Check(SourceArgs),
    /// Compute graded dimensions and reconstruct the Poincare series.
    Poincare {
        #[command(flatten)]
        source: SourceArgs,
        /// Highest exterior degree fed to the reconstruction.
        #[arg(long = "max-k", default_value_t = 9)]
        max_k: usize,
        /// Highest symmetric degree used for the duality check.
        #[arg(long = "max-sym", default_value_t = 6)]
        max_sym: usize,
    },
    /// Build the Koszul bicomplex and verify homology concentration.
    Koszul {
        #[command(flatten)]
        source: SourceArgs,
        /// Bound on both homological degrees of the table.
        #[arg(long, default_value_t = 4)]
        max: usize,
        /// Comma-separated q values; the tables must agree across all of them.
        #[arg(
            long = "scan-q",
            value_name = "LIST",
            conflicts_with = "q",
            allow_hyphen_values = true
        )]
        scan_q: Option<String>,
        /// Compare the generator action with the classical Berezinian.
        #[arg(long)]
        berezinian: bool,
        /// Seed for the random block-diagonal point.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Count the hom spaces controlling non-vanishing at birank (m,n).
    Lr {
        /// Number of even generators (at least 1).
        #[arg(long)]
        m: usize,
        /// Number of odd generators (at least 1).
        #[arg(long)]
        n: usize,
        /// Emit the machine-readable report.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct SourceArgs {
    /// Built-in family: dj, superflip, odd, or sum:dj1+odd style sums.
    #[arg(long, value_name = "NAME", conflicts_with = "file")]
    zoo: Option<String>,
    /// TOML R-matrix file.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    /// Evaluation point as an exact rational, e.g. 2 or 7/3.
    #[arg(long, value_name = "RAT", allow_hyphen_values = true)]
    q: Option<String>,
    /// Dimension for the dj family.
    #[arg(long)]
    dim: Option<usize>,
    /// Even generators for superflip.
    #[arg(long)]
    m: Option<usize>,
    /// Odd generators for superflip.
    #[arg(long)]
    n: Option<usize>,
    /// Emit the machine-readable report.
    #[arg(long)]
    json: bool,
    /// Largest ambient tensor power dimension to materialize.
    #[arg(long = "max-ambient-dim", default_value_t = 200_000)]
    max_ambient_dim: usize,
}

impl SourceArgs {
    fn limits(&self) -> Limits {
        Limits {
            max_ambient_dim: self.max_ambient_dim,
        }
    }

    /// Short label for reports, e.g. "zoo:dj(3)" or "file:r.rm".
    fn label(&self) -> String {
        match (&self.zoo, &self.file) {
            (Some(name), _) => match name.as_str() {
                "dj" => format!("zoo:dj({})", self.dim.unwrap_or(0)),
                "superflip" => {
                    format!("zoo:superflip({}|{})", self.m.unwrap_or(0), self.n.unwrap_or(0))
                }
                other => format!("zoo:{other}"),
            },
            (None, Some(path)) => format!("file:{}", path.display()),
            (None, None) => "unspecified".into(),
        }
    }

    fn inputs_json(&self) -> Value {
        json!({
            "zoo": self.zoo,
            "file": self.file.as_ref().map(|p| p.display().to_string()),
            "q": self.q,
            "dim": self.dim,
            "m": self.m,
            "n": self.n,
            "max_ambient_dim": self.max_ambient_dim,
        })
    }

    fn is_superflip(&self) -> bool {
        self.zoo.as_deref() == Some("superflip")
    }

    /// The evaluation point; the super flip forces q = 1.
    fn resolve_q(&self) -> Result<Rat, Error> {
        if self.is_superflip() {
            return match &self.q {
                None => Ok(rat_int(1)),
                Some(text) if parse_rat(text)? == rat_int(1) => Ok(rat_int(1)),
                Some(text) => Err(Error::Parse(format!(
                    "the super flip requires q = 1, got {text}"
                ))),
            };
        }
        match &self.q {
            Some(text) => {
                let q = parse_rat(text)?;
                if q == rat_int(0) {
                    return Err(Error::Parse("q must be nonzero".into()));
                }
                Ok(q)
            }
            None => Err(Error::Parse("this source requires --q".into())),
        }
    }

    /// Builds the symmetry at the given evaluation point.
    fn build(&self, q: &Rat) -> Result<HeckeSym, Error> {
        match (&self.zoo, &self.file) {
            (Some(name), _) => build_zoo(name, self, q),
            (None, Some(path)) => zoo::load_rmatrix(path, q),
            (None, None) => Err(Error::Parse("provide --zoo NAME or --file PATH".into())),
        }
    }
}

fn build_zoo(name: &str, src: &SourceArgs, q: &Rat) -> Result<HeckeSym, Error> {
    match name {
        "dj" => {
            let dim = src
                .dim
                .ok_or_else(|| Error::Parse("--zoo dj requires --dim".into()))?;
            zoo::drinfeld_jimbo(dim, q)
        }
        "superflip" => {
            let m = src
                .m
                .ok_or_else(|| Error::Parse("--zoo superflip requires --m".into()))?;
            let n = src
                .n
                .ok_or_else(|| Error::Parse("--zoo superflip requires --n".into()))?;
            zoo::super_flip(m, n)
        }
        "odd" => zoo::odd_point(q),
        other => match other.strip_prefix("sum:") {
            Some(spec) => build_sum(spec, q),
            None => Err(Error::Parse(format!("unknown zoo member: {other}"))),
        },
    }
}

/// Parses a sum specification like "dj1+odd" into an iterated Hecke sum.
fn build_sum(spec: &str, q: &Rat) -> Result<HeckeSym, Error> {
    let mut acc: Option<HeckeSym> = None;
    for part in spec.split('+') {
        let hs = match part.trim() {
            "odd" => zoo::odd_point(q)?,
            p => match p.strip_prefix("dj").and_then(|s| s.parse::<usize>().ok()) {
                Some(n) => zoo::drinfeld_jimbo(n, q)?,
                None => {
                    return Err(Error::Parse(format!("unknown sum component: {p}")));
                }
            },
        };
        acc = Some(match acc {
            None => hs,
            Some(prev) => zoo::hecke_sum(&prev, &hs)?,
        });
    }
    acc.ok_or_else(|| Error::Parse("empty sum specification".into()))
}

/// Rejects evaluation points where a needed q-integer vanishes.
fn root_of_unity_precheck(q: &Rat, bound: usize) -> Result<(), Error> {
    for k in 1..=bound {
        if qint(k as i64, q) == rat_int(0) {
            return Err(Error::RootOfUnity { k, q: q.clone() });
        }
    }
    Ok(())
}

/// Serializes a rational as a schema-stable "num/den" string.
fn json_rat(x: &Rat) -> Value {
    Value::String(format!("{}/{}", x.numer(), x.denom()))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    Undetermined,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Undetermined => "undetermined",
        }
    }

    fn exit(self) -> ExitCode {
        match self {
            Status::Pass => ExitCode::SUCCESS,
            _ => ExitCode::from(1),
        }
    }
}

fn error_exit(e: &Error) -> ExitCode {
    match e {
        Error::Parse(_)
        | Error::RootOfUnity { .. }
        | Error::PoleAtQ { .. }
        | Error::Index { .. }
        | Error::MismatchedQ { .. }
        | Error::Dimension(_) => ExitCode::from(2),
        Error::ResourceCap { .. } => ExitCode::from(3),
        _ => ExitCode::from(1),
    }
}

/// Prints the final report and converts the outcome into an exit code.
fn emit(
    json_mode: bool,
    command: &str,
    inputs: Value,
    outcome: Result<(Value, Status), Error>,
    t0: Instant,
) -> ExitCode {
    let (results, status, exit) = match outcome {
        Ok((results, status)) => (results, status, status.exit()),
        Err(ref e) => {
            eprintln!("error: {e}");
            (json!({ "error": e.to_string() }), Status::Fail, error_exit(e))
        }
    };
    if json_mode {
        let report = json!({
            "command": command,
            "inputs": inputs,
            "results": results,
            "status": status.as_str(),
            "timings": { "total_ms": t0.elapsed().as_millis() as u64 },
        });
        println!("{}", serde_json::to_string_pretty(&report).expect("report is valid json"));
    } else {
        println!("status: {}", status.as_str());
    }
    exit
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let t0 = Instant::now();
    match cli.command {
        Command::Check(src) => {
            let inputs = src.inputs_json();
            let json_mode = src.json;
            emit(json_mode, "check", inputs, cmd_check(&src), t0)
        }
        Command::Poincare {
            source,
            max_k,
            max_sym,
        } => {
            let mut inputs = source.inputs_json();
            inputs["max_k"] = json!(max_k);
            inputs["max_sym"] = json!(max_sym);
            let json_mode = source.json;
            emit(
                json_mode,
                "poincare",
                inputs,
                cmd_poincare(&source, max_k, max_sym),
                t0,
            )
        }
        Command::Koszul {
            source,
            max,
            scan_q,
            berezinian,
            seed,
        } => {
            let mut inputs = source.inputs_json();
            inputs["max"] = json!(max);
            inputs["scan_q"] = json!(scan_q);
            inputs["berezinian"] = json!(berezinian);
            inputs["seed"] = json!(seed);
            let json_mode = source.json;
            emit(
                json_mode,
                "koszul",
                inputs,
                cmd_koszul(&source, max, scan_q.as_deref(), berezinian, seed),
                t0,
            )
        }
        Command::Lr { m, n, json } => emit(
            json,
            "lr",
            json!({ "m": m, "n": n }),
            cmd_lr(m, n, json),
            t0,
        ),
    }
}

fn cmd_check(src: &SourceArgs) -> Result<(Value, Status), Error> {
    let q = src.resolve_q()?;
    root_of_unity_precheck(&q, 3)?;
    let hs = src.build(&q)?;
    // construction validated the axioms; rerun for the detailed report
    let report = homdet::check_hecke(hs.matrix(), &q)?;
    let rank = hs.rank_q();
    if !src.json {
        println!("source: {}, q = {}", src.label(), rat_str(&q));
        println!("{report}");
        println!("rank_q = {}", rat_str(&rank));
    }
    let status = if report.all_pass() {
        Status::Pass
    } else {
        Status::Fail
    };
    let results = json!({
        "dim": hs.dim(),
        "q": json_rat(&q),
        "braid": report.braid,
        "quadratic": report.quadratic,
        "half_adjoint": report.half_adjoint,
        "rank_q": json_rat(&rank),
    });
    Ok((results, status))
}

fn cmd_poincare(src: &SourceArgs, max_k: usize, max_sym: usize) -> Result<(Value, Status), Error> {
    let q = src.resolve_q()?;
    root_of_unity_precheck(&q, max_k + 1)?;
    let hs = src.build(&q)?;
    let report = poincare_profiles(&hs, max_k, max_sym, &src.limits())?;
    if !src.json {
        println!("source: {}, q = {}", src.label(), rat_str(&q));
        println!("lambda dims: {:?}", report.lambda_dims);
        println!("sym dims:    {:?}", report.sym_dims);
        match report.birank {
            Some((m, n)) => {
                println!("series: ({}) / ({})", report.numer, report.denom);
                println!("birank: ({m}, {n})");
            }
            None => println!("series: undetermined on the computed window"),
        }
        println!(
            "duality to degree {}: {}",
            report.duality_degree,
            if report.duality_ok { "ok" } else { "violated" }
        );
        if let Some(note) = &report.root_note {
            println!("root signs: {note}");
        }
    }
    let status = match report.birank {
        None => Status::Undetermined,
        Some(_) if report.roots_ok && report.duality_ok => Status::Pass,
        Some(_) => Status::Fail,
    };
    let results = json!({
        "lambda_dims": report.lambda_dims,
        "sym_dims": report.sym_dims,
        "numer": report.numer.to_string(),
        "denom": report.denom.to_string(),
        "birank": report.birank.map(|(m, n)| json!([m, n])),
        "roots_ok": report.roots_ok,
        "duality_ok": report.duality_ok,
        "duality_degree": report.duality_degree,
        "root_note": report.root_note,
    });
    Ok((results, status))
}

/// Outcome of one koszul run at a fixed evaluation point.
struct KoszulRun {
    q: Rat,
    table: KoszulTable,
    concentration: Option<(usize, usize)>,
    gurevich_ok: bool,
    rank_q: Rat,
    rank_relation_ok: bool,
    generator: Option<Vec<Rat>>,
}

fn koszul_run(src: &SourceArgs, q: &Rat, max: usize) -> Result<KoszulRun, Error> {
    let hs = src.build(q)?;
    let mut complex = KoszulComplex::new(&hs, src.limits());
    let table = complex.homology_table(max, max)?;
    let mut gurevich_ok = true;
    for k in 0..=max {
        for l in 0..=max {
            if !complex.gurevich_identity(k, l)?.matches {
                gurevich_ok = false;
            }
        }
    }
    let concentration = table.concentrated_at();
    let rank_q = hs.rank_q();
    let (rank_relation_ok, generator) = match concentration {
        Some((m, n)) => {
            let expected = -qint(n as i64 - m as i64, &q.clone());
            let generator = complex.homology_generator(m, n)?;
            (rank_q == expected, Some(generator))
        }
        None => (false, None),
    };
    Ok(KoszulRun {
        q: q.clone(),
        table,
        concentration,
        gurevich_ok,
        rank_q,
        rank_relation_ok,
        generator,
    })
}

fn run_json(run: &KoszulRun, max: usize) -> Value {
    let table: Vec<Vec<usize>> = (0..=max)
        .map(|k| (0..=max).map(|l| run.table.homology(k, l)).collect())
        .collect();
    json!({
        "q": json_rat(&run.q),
        "homology": table,
        "concentration": run.concentration.map(|(m, n)| json!([m, n])),
        "gurevich_ok": run.gurevich_ok,
        "rank_q": json_rat(&run.rank_q),
        "rank_relation_ok": run.rank_relation_ok,
        "generator": run
            .generator
            .as_ref()
            .map(|g| g.iter().map(json_rat).collect::<Vec<_>>()),
    })
}

fn print_run(run: &KoszulRun) {
    println!("q = {}", rat_str(&run.q));
    print!("{}", run.table);
    match run.concentration {
        Some((m, n)) => println!("concentration: single line at ({m}, {n})"),
        None => println!("concentration: homology is not a single line"),
    }
    println!(
        "gurevich identity: {}",
        if run.gurevich_ok { "ok" } else { "violated" }
    );
    println!(
        "rank_q = {} {} -[n-m]_q",
        rat_str(&run.rank_q),
        if run.rank_relation_ok { "matches" } else { "differs from" }
    );
    if let Some(g) = &run.generator {
        let support: Vec<String> = g
            .iter()
            .enumerate()
            .filter(|(_, v)| *v != &rat_int(0))
            .map(|(i, v)| format!("[{i}] = {}", rat_str(v)))
            .collect();
        println!("generator ({} ambient coords): {}", g.len(), support.join(", "));
    }
}

fn cmd_koszul(
    src: &SourceArgs,
    max: usize,
    scan_q: Option<&str>,
    berezinian: bool,
    seed: u64,
) -> Result<(Value, Status), Error> {
    let qs: Vec<Rat> = match scan_q {
        Some(list) => list
            .split(',')
            .map(|s| {
                let q = parse_rat(s.trim())?;
                if src.is_superflip() && q != rat_int(1) {
                    return Err(Error::Parse(format!(
                        "the super flip requires q = 1, got {s}"
                    )));
                }
                Ok(q)
            })
            .collect::<Result<_, _>>()?,
        None => vec![src.resolve_q()?],
    };
    if qs.is_empty() {
        return Err(Error::Parse("empty --scan-q list".into()));
    }
    for q in &qs {
        root_of_unity_precheck(q, max + 2)?;
    }

    let mut runs = Vec::new();
    for q in &qs {
        let run = koszul_run(src, q, max)?;
        if !src.json {
            if runs.is_empty() {
                println!("source: {}", src.label());
            }
            print_run(&run);
        }
        runs.push(run);
    }
    let tables_identical = runs.windows(2).all(|w| w[0].table == w[1].table);
    if !src.json && runs.len() > 1 {
        println!(
            "tables across {} values of q: {}",
            runs.len(),
            if tables_identical { "identical" } else { "differ" }
        );
    }

    let mut ok = tables_identical
        && runs
            .iter()
            .all(|r| r.concentration.is_some() && r.gurevich_ok && r.rank_relation_ok);

    let ber_json = if berezinian {
        let (m, n) = runs[0]
            .concentration
            .ok_or_else(|| Error::Parse("no concentration point for the Berezinian".into()))?;
        let hs = src.build(&qs[0])?;
        let mut complex = KoszulComplex::new(&hs, src.limits());
        let point = SuperMatrixPoint::random(m, n, seed);
        let report = complex.berezinian_check(m, n, &point)?;
        if !src.json {
            println!(
                "berezinian (seed {seed}): action {} vs det(A)/det(D) = {} ({})",
                rat_str(&report.scalar_action),
                rat_str(&report.berezinian),
                if report.equal { "equal" } else { "different" }
            );
        }
        ok = ok && report.equal;
        Some(json!({
            "seed": seed,
            "scalar_action": json_rat(&report.scalar_action),
            "berezinian": json_rat(&report.berezinian),
            "equal": report.equal,
        }))
    } else {
        None
    };

    let results = json!({
        "runs": runs.iter().map(|r| run_json(r, max)).collect::<Vec<_>>(),
        "tables_identical": tables_identical,
        "berezinian": ber_json,
    });
    let status = if ok { Status::Pass } else { Status::Fail };
    Ok((results, status))
}

fn cmd_lr(m: usize, n: usize, json_mode: bool) -> Result<(Value, Status), Error> {
    if m == 0 || n == 0 {
        return Err(Error::Parse("lr requires m >= 1 and n >= 1".into()));
    }
    let homs = verify_theorem1_homs(m, n);
    if !json_mode {
        println!("m = {m}, n = {n}");
        println!(
            "homs: critical {} / below {} / above {} (expected 1 / 0 / 0)",
            homs.0, homs.1, homs.2
        );
    }
    let status = if homs == (1, 0, 0) {
        Status::Pass
    } else {
        Status::Fail
    };
    let results = json!({
        "m": m,
        "n": n,
        "homs": [homs.0, homs.1, homs.2],
        "expected": [1, 0, 0],
    });
    Ok((results, status))
}
