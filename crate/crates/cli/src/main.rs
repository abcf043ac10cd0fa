//! `modlat`: generate posets and lattices, compute h-vectors, check
//! Stanley's inequalities and search for non-integral modular lattices.
//!
//! Results go to standard output as JSON (or DOT with `export --dot`);
//! diagnostics go to standard error. Exit codes: 0 when the property holds,
//! 1 when it fails, 2 for usage or input errors.

mod selftest;

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use modlat::constructions::{
    divisor_lattice_bounded, experimental_threshold, find_minimal_n, grid_lattice_bounded,
    SearchOptions, DEFAULT_DIVISOR_LIMIT,
};
use modlat::io::{self as mio, kind, ToJson};
use modlat::lattice::DEFAULT_PENTAGON_LIMIT;
use modlat::order_complex::{f_vector_bounded, h_from_f};
use modlat::poset::DEFAULT_CHAIN_LIMIT;
use modlat::random::{GenConfig, Generator};
use modlat::{duplicate, stanley_check, LatticeView, Poset, Verdict};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "modlat", version, about = "Poset and lattice combinatorics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a poset document.
    #[command(subcommand)]
    Gen(Gen),
    /// Run predicates on a poset.
    Check(CheckArgs),
    /// f-vector and h-vector of the order complex.
    Hvec(HvecArgs),
    /// Check Stanley's inequalities.
    Stanley(StanleyArgs),
    /// Duplicate an element.
    Duplicate(DuplicateArgs),
    /// Find the least number of duplications breaking Stanley's inequalities.
    Counterexample(CounterexampleArgs),
    /// Re-emit a poset, optionally as Graphviz DOT.
    Export(ExportArgs),
}

#[derive(Subcommand)]
enum Gen {
    /// Divisors of m under divisibility.
    Divisor {
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = DEFAULT_DIVISOR_LIMIT)]
        limit: usize,
    },
    /// Divisors of 2^s·3^t, labelled by their factorization.
    Grid {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = DEFAULT_DIVISOR_LIMIT)]
        limit: usize,
    },
    /// A seeded random poset.
    Random {
        #[command(flatten)]
        seed: SeedArg,
        #[arg(long = "max", default_value_t = 8)]
        max_elements: usize,
        /// All maximal chains of equal cardinality.
        #[arg(long)]
        pure: bool,
        #[arg(long)]
        lattice: bool,
        /// A modular lattice (implies --lattice).
        #[arg(long)]
        modular: bool,
    },
}

#[derive(Args)]
struct SeedArg {
    /// Generator seed; falls back to the SEED environment variable.
    #[arg(long, env = "SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("predicate").required(true).multiple(true))]
struct CheckArgs {
    /// Poset document, or `-` for standard input.
    #[arg(default_value = "-")]
    file: String,
    /// Modular law, by the identity and by pentagon search.
    #[arg(long, group = "predicate")]
    modular: bool,
    #[arg(long, group = "predicate")]
    distributive: bool,
    #[arg(long, group = "predicate")]
    lattice: bool,
    #[arg(long, group = "predicate")]
    pure: bool,
    /// Run the seeded property suite instead of reading a file.
    #[arg(long, group = "predicate")]
    selftest: bool,
    #[command(flatten)]
    seed: SeedArg,
    /// Instances per property in --selftest.
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = DEFAULT_PENTAGON_LIMIT)]
    pentagon_limit: usize,
}

#[derive(Args)]
struct HvecArgs {
    #[arg(default_value = "-")]
    file: String,
    #[arg(long, default_value_t = DEFAULT_CHAIN_LIMIT)]
    chain_limit: usize,
}

#[derive(Args)]
struct StanleyArgs {
    /// h-vector, hvec report or poset document.
    #[arg(conflicts_with = "h")]
    file: Option<String>,
    /// Comma-separated integers, no spaces.
    #[arg(long)]
    h: Option<String>,
    #[arg(long, default_value_t = DEFAULT_CHAIN_LIMIT)]
    chain_limit: usize,
}

#[derive(Args)]
struct DuplicateArgs {
    #[arg(default_value = "-")]
    file: String,
    #[arg(long)]
    at: String,
    #[arg(long, default_value_t = 1)]
    times: usize,
}

#[derive(Args)]
struct CounterexampleArgs {
    #[arg(long)]
    s: u32,
    #[arg(long)]
    t: u32,
    #[arg(long, default_value_t = 1000)]
    max_n: usize,
    /// Allow s = 2; reports the threshold without a certificate.
    #[arg(long)]
    experimental: bool,
    #[arg(long, default_value_t = DEFAULT_CHAIN_LIMIT)]
    chain_limit: usize,
    #[arg(long, default_value_t = DEFAULT_PENTAGON_LIMIT)]
    pentagon_limit: usize,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(default_value = "-")]
    file: String,
    #[arg(long)]
    dot: bool,
}

/// What a command printed and whether the checked property held.
struct Outcome {
    output: String,
    holds: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            holds: true,
        }
    }

    fn json(doc: Value, holds: bool) -> Self {
        Outcome {
            output: doc.to_string(),
            holds,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            let written =
                writeln!(stdout, "{}", out.output.trim_end()).and_then(|_| stdout.flush());
            if let Err(e) = written {
                if e.kind() != io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            if out.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<Outcome> {
    match command {
        Command::Gen(g) => generate(g),
        Command::Check(a) => check(a),
        Command::Hvec(a) => hvec(a),
        Command::Stanley(a) => stanley(a),
        Command::Duplicate(a) => duplicate_cmd(a),
        Command::Counterexample(a) => counterexample(a),
        Command::Export(a) => export(a),
    }
}

fn read_input(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn read_document(path: &str) -> anyhow::Result<Value> {
    Ok(mio::parse_value(&read_input(path)?)?)
}

fn read_poset(path: &str) -> anyhow::Result<Poset> {
    Ok(mio::poset_from_value(&read_document(path)?)?)
}

fn generate(g: Gen) -> anyhow::Result<Outcome> {
    let poset = match g {
        Gen::Divisor { m, limit } => divisor_lattice_bounded(m, limit)?.into_poset(),
        Gen::Grid { s, t, limit } => grid_lattice_bounded(s, t, limit)?.into_poset(),
        Gen::Random {
            seed,
            max_elements,
            pure,
            lattice,
            modular,
        } => {
            if max_elements == 0 {
                bail!("--max must be at least 1");
            }
            let mut cfg = GenConfig::new(seed.seed, max_elements);
            if pure || modular {
                cfg = cfg.pure();
            }
            if lattice || modular {
                cfg = cfg.lattice();
            }
            let mut g = Generator::new(cfg);
            if modular {
                g.modular_lattice()?.into_poset()
            } else {
                g.poset()?
            }
        }
    };
    Ok(Outcome::ok(poset.to_json()))
}

fn verdict_json<const K: usize>(l: &LatticeView, v: &Verdict<[usize; K]>) -> Value {
    match v.witness() {
        None => json!({ "holds": true }),
        Some(w) => json!({ "holds": false, "witness": l.labels_of(w).to_vec() }),
    }
}

fn check(a: CheckArgs) -> anyhow::Result<Outcome> {
    let mut report = serde_json::Map::new();
    report.insert("format_version".into(), json!(mio::FORMAT_VERSION));
    report.insert("kind".into(), json!("check_report"));
    let mut holds = true;

    if a.selftest {
        let summary = selftest::run(a.seed.seed, a.count)?;
        holds &= summary.failures() == 0;
        report.insert("selftest".into(), summary.to_json());
        if !(a.modular || a.distributive || a.lattice || a.pure) {
            return Ok(Outcome::json(Value::Object(report), holds));
        }
    }

    let poset = read_poset(&a.file)?;
    if a.pure {
        let pure = poset.is_pure();
        holds &= pure;
        report.insert("pure".into(), json!(pure));
    }
    if a.lattice || a.modular || a.distributive {
        match LatticeView::new(poset) {
            Err(e @ modlat::Error::NotALattice { .. }) => {
                holds = false;
                report.insert("lattice".into(), json!(false));
                report.insert("reason".into(), json!(e.to_string()));
                for (flag, name) in [(a.modular, "modular"), (a.distributive, "distributive")] {
                    if flag {
                        report.insert(name.into(), Value::Null);
                    }
                }
            }
            Err(e) => return Err(e.into()),
            Ok(l) => {
                report.insert("lattice".into(), json!(true));
                if a.modular {
                    let identity = l.is_modular_by_identity();
                    let pentagon = l.is_modular_by_pentagon_bounded(a.pentagon_limit)?;
                    let agree = identity.holds() == pentagon.holds();
                    if !agree {
                        bail!("modularity methods disagree; this is a bug");
                    }
                    holds &= identity.holds();
                    report.insert("modular".into(), json!(identity.holds()));
                    report.insert("modular_by_identity".into(), verdict_json(&l, &identity));
                    report.insert("modular_by_pentagon".into(), verdict_json(&l, &pentagon));
                    report.insert("methods_agree".into(), json!(agree));
                }
                if a.distributive {
                    let d = l.is_distributive();
                    holds &= d.holds();
                    report.insert("distributive".into(), json!(d.holds()));
                    report.insert("distributive_witness".into(), verdict_json(&l, &d));
                }
            }
        }
    }
    Ok(Outcome::json(Value::Object(report), holds))
}

fn hvec(a: HvecArgs) -> anyhow::Result<Outcome> {
    let poset = read_poset(&a.file)?;
    let f = f_vector_bounded(&poset, a.chain_limit)?;
    let h = h_from_f(&f);
    Ok(Outcome::json(mio::hvec_report(&f, &h)?, true))
}

fn parse_h(text: &str) -> anyhow::Result<Vec<BigInt>> {
    text.split(',')
        .map(|part| {
            part.parse::<BigInt>()
                .with_context(|| format!("--h: `{part}` is not an integer"))
        })
        .collect()
}

fn stanley(a: StanleyArgs) -> anyhow::Result<Outcome> {
    let h = match (&a.h, &a.file) {
        (Some(text), _) => parse_h(text)?,
        (None, file) => {
            let doc = read_document(file.as_deref().unwrap_or("-"))?;
            if doc
                .get("kind")
                .and_then(Value::as_str)
                .unwrap_or(kind::POSET)
                == kind::POSET
            {
                let poset = mio::poset_from_value(&doc)?;
                h_from_f(&f_vector_bounded(&poset, a.chain_limit)?).truncate()?
            } else {
                mio::h_vector_from_value(&doc)?
            }
        }
    };
    let report = stanley_check(&h)?;
    let mut doc = report.to_json_value();
    doc["h"] = mio::big_array(&h);
    Ok(Outcome::json(doc, report.passed))
}

fn duplicate_cmd(a: DuplicateArgs) -> anyhow::Result<Outcome> {
    if a.times == 0 {
        bail!("--times must be at least 1");
    }
    let mut poset = read_poset(&a.file)?;
    let mut certificates = Vec::with_capacity(a.times);
    for _ in 0..a.times {
        let (next, cert) = duplicate(&poset, &a.at)?;
        certificates.push(cert.to_json_value());
        poset = next;
    }
    let doc = mio::poset_document(&poset, Some(json!({ "certificates": certificates })));
    Ok(Outcome::json(doc, true))
}

fn counterexample(a: CounterexampleArgs) -> anyhow::Result<Outcome> {
    let opts = SearchOptions {
        max_n: a.max_n,
        chain_limit: a.chain_limit,
        pentagon_limit: a.pentagon_limit,
    };
    if a.experimental && a.s < 3 {
        let n = experimental_threshold(a.s, a.t, &opts)?;
        let doc = json!({
            "format_version": mio::FORMAT_VERSION,
            "kind": "experimental_threshold",
            "s": a.s,
            "t": a.t,
            "n": n,
            "certified": false,
        });
        return Ok(Outcome::json(doc, n.is_some()));
    }
    match find_minimal_n(a.s, a.t, &opts)? {
        Some(cert) => Ok(Outcome::json(cert.to_json_value(), true)),
        None => {
            eprintln!("no violation within {} duplications", a.max_n);
            let doc = json!({
                "format_version": mio::FORMAT_VERSION,
                "kind": "counterexample_search",
                "s": a.s,
                "t": a.t,
                "max_n": a.max_n,
                "found": false,
            });
            Ok(Outcome::json(doc, false))
        }
    }
}

fn export(a: ExportArgs) -> anyhow::Result<Outcome> {
    let poset = read_poset(&a.file)?;
    if a.dot {
        Ok(Outcome::ok(mio::to_dot(&poset)))
    } else {
        Ok(Outcome::ok(poset.to_json()))
    }
}
