//! Command-line front door.
//!
//! Three subcommands: `population` evaluates the population index,
//! `estimate` runs the sample estimator on a data file (one non-negative
//! decimal per line, `#` comments and blank lines ignored), and `simulate`
//! reproduces the Monte Carlo bias/MSE study as CSV.
//!
//! Exit codes: 0 success, 1 usage or parameter errors, 2 data errors,
//! 3 numerical non-convergence. Reports go to stdout, diagnostics to stderr.

use std::fs;

use crate::error::{Error, Result};
use crate::estimator::{ig_hat_fast, Sample};
use crate::expectation::{expected_estimator_exponential, expected_estimator_gamma};
use crate::population::{
    gini_gamma_closed, ig_exponential_closed, ig_gamma_quadrature, ig_generic, Distribution,
    GiniOrder,
};
use crate::quadrature::QuadratureConfig;
use crate::simulate::{run_simulation, SimulationConfig, SimulationRecord};

/// Fixed default seed so repeated default runs are byte-identical.
pub const DEFAULT_SEED: u64 = 42;

const USAGE: &str = "mgini - m-th Gini inequality index for exponential and gamma populations

USAGE:
    mgini population <DIST> -m <M> [--rel-tol <TOL>] [--verify-unbiased <N>]
    mgini estimate <FILE> -m <M>
    mgini simulate [--dist <DIST>] [-m <M>] [--sizes <N,N,..>] [--nsim <K>]
                   [--seed <S>] [--out <FILE>]

DIST:
    exp:LAMBDA           exponential with rate LAMBDA, e.g. exp:1
    gamma:ALPHA,LAMBDA   gamma with shape ALPHA and rate LAMBDA, e.g. gamma:2,1

COMMANDS:
    population  print the population index IG_m (closed form where one
                exists, adaptive quadrature otherwise); --verify-unbiased N
                also prints the expected value of the sample estimator at
                sample size N and the absolute gap
    estimate    print the sample index of a data file: one non-negative
                decimal per line, blank lines and '#' comments ignored
    simulate    Monte Carlo bias/MSE study as CSV; without --dist both
                study populations exp:1 and gamma:2,1 are run; defaults are
                -m 3, --sizes 5,10,30,50,100, --nsim 1000, --seed 42

Exit codes: 1 usage, 2 data, 3 numerical non-convergence.
";

/// A header plus rows, rendered as CSV. Every row has the header's width.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputTable {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl OutputTable {
    pub fn new(header: &[&str]) -> Self {
        OutputTable {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.header.len(), "table row width mismatch");
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Shortest decimal that round-trips, capped at 10 significant digits.
pub fn format_number(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let capped: f64 = format!("{v:.9e}")
        .parse()
        .expect("formatted float parses back");
    format!("{capped}")
}

/// Runs the CLI on pre-split arguments (without the program name) and
/// returns the process exit code.
pub fn run(args: &[String]) -> i32 {
    match dispatch(args) {
        Ok(output) => {
            print!("{output}");
            0
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Usage(_) | Error::Domain(_) | Error::Config(_) => 1,
                Error::Sample(_) | Error::Data(_) => 2,
                Error::Convergence(_) => 3,
            }
        }
    }
}

fn dispatch(args: &[String]) -> Result<String> {
    match args.first().map(String::as_str) {
        Some("population") => Ok(cmd_population(&args[1..])?.to_csv()),
        Some("estimate") => Ok(cmd_estimate(&args[1..])?.to_csv()),
        Some("simulate") => cmd_simulate(&args[1..]),
        Some("help") | Some("--help") | Some("-h") => Ok(USAGE.to_string()),
        Some(other) => Err(Error::Usage(format!(
            "unknown command '{other}'; expected population, estimate, or simulate"
        ))),
        None => Err(Error::Usage("no command given; try --help".into())),
    }
}

// ---------------------------------------------------------------------------
// Argument scanning
// ---------------------------------------------------------------------------

fn canonical_flag(arg: &str) -> Option<&'static str> {
    match arg {
        "-m" | "--m" | "--order" => Some("-m"),
        "--dist" => Some("--dist"),
        "--sizes" => Some("--sizes"),
        "--nsim" => Some("--nsim"),
        "--seed" => Some("--seed"),
        "--out" => Some("--out"),
        "--rel-tol" => Some("--rel-tol"),
        "--verify-unbiased" => Some("--verify-unbiased"),
        _ => None,
    }
}

struct ParsedArgs<'a> {
    positional: Vec<&'a str>,
    flags: Vec<(&'static str, &'a str)>,
}

impl<'a> ParsedArgs<'a> {
    fn scan(args: &'a [String], allowed: &[&str]) -> Result<Self> {
        let mut positional = Vec::new();
        let mut flags: Vec<(&'static str, &'a str)> = Vec::new();
        let mut i = 0;
        while i < args.len() {
            let arg = args[i].as_str();
            if arg.starts_with('-') && arg.len() > 1 {
                let name = canonical_flag(arg)
                    .ok_or_else(|| Error::Usage(format!("unknown flag '{arg}'")))?;
                if !allowed.contains(&name) {
                    return Err(Error::Usage(format!(
                        "flag '{arg}' is not valid for this command"
                    )));
                }
                if flags.iter().any(|(n, _)| *n == name) {
                    return Err(Error::Usage(format!("flag '{name}' given more than once")));
                }
                let value = args
                    .get(i + 1)
                    .ok_or_else(|| Error::Usage(format!("flag '{arg}' needs a value")))?;
                flags.push((name, value.as_str()));
                i += 2;
            } else {
                positional.push(arg);
                i += 1;
            }
        }
        Ok(ParsedArgs { positional, flags })
    }

    fn flag(&self, name: &str) -> Option<&'a str> {
        self.flags.iter().find(|(n, _)| *n == name).map(|(_, v)| *v)
    }

    fn one_positional(&self, what: &str) -> Result<&'a str> {
        match self.positional.as_slice() {
            [single] => Ok(single),
            [] => Err(Error::Usage(format!("missing {what}"))),
            more => Err(Error::Usage(format!(
                "expected exactly one {what}, got {}",
                more.len()
            ))),
        }
    }
}

fn parse_f64(value: &str, flag: &str) -> Result<f64> {
    value
        .parse::<f64>()
        .map_err(|_| Error::Usage(format!("{flag}: '{value}' is not a number")))
}

fn parse_u32(value: &str, flag: &str) -> Result<u32> {
    value
        .parse::<u32>()
        .map_err(|_| Error::Usage(format!("{flag}: '{value}' is not a non-negative integer")))
}

fn parse_u64(value: &str, flag: &str) -> Result<u64> {
    value
        .parse::<u64>()
        .map_err(|_| Error::Usage(format!("{flag}: '{value}' is not a non-negative integer")))
}

fn parse_order(value: &str, flag: &str) -> Result<GiniOrder> {
    let m = parse_u32(value, flag)?;
    GiniOrder::new(m)
        .map_err(|_| Error::Usage(format!("{flag}: order must be at least 2, got {m}")))
}

fn parse_sizes(value: &str, flag: &str) -> Result<Vec<u32>> {
    value
        .split(',')
        .map(|part| {
            let n = parse_u32(part.trim(), flag)?;
            if n == 0 {
                return Err(Error::Usage(format!(
                    "{flag}: sample sizes must be positive"
                )));
            }
            Ok(n)
        })
        .collect()
}

fn parse_dist(spec: &str, what: &str) -> Result<Distribution> {
    let invalid = || {
        Error::Usage(format!(
            "{what}: expected exp:LAMBDA or gamma:ALPHA,LAMBDA, got '{spec}'"
        ))
    };
    let (name, params) = spec.split_once(':').ok_or_else(invalid)?;
    match name {
        "exp" => {
            let rate = parse_f64(params, what)?;
            Distribution::exponential(rate).map_err(|e| Error::Usage(format!("{what}: {e}")))
        }
        "gamma" => {
            let (shape, rate) = params.split_once(',').ok_or_else(invalid)?;
            let shape = parse_f64(shape, what)?;
            let rate = parse_f64(rate, what)?;
            Distribution::gamma(shape, rate).map_err(|e| Error::Usage(format!("{what}: {e}")))
        }
        _ => Err(invalid()),
    }
}

fn quadrature_config(rel_tol: Option<&str>) -> Result<QuadratureConfig> {
    let mut config = QuadratureConfig::default();
    if let Some(value) = rel_tol {
        let tol = parse_f64(value, "--rel-tol")?;
        let tol_ok = tol.is_finite() && tol > 0.0;
        if !tol_ok {
            return Err(Error::Usage(format!(
                "--rel-tol: tolerance must be positive, got {value}"
            )));
        }
        config.rel_tol = tol;
    }
    Ok(config)
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

/// `population <DIST> -m <M>`: the population index through the best
/// available path, optionally with the Laplace-transform expectation of the
/// sample estimator beside it.
pub fn cmd_population(args: &[String]) -> Result<OutputTable> {
    let parsed = ParsedArgs::scan(args, &["-m", "--rel-tol", "--verify-unbiased"])?;
    let spec = parsed.one_positional("distribution spec (exp:LAMBDA or gamma:ALPHA,LAMBDA)")?;
    let m = parse_order(
        parsed
            .flag("-m")
            .ok_or_else(|| Error::Usage("-m <M> is required".into()))?,
        "-m",
    )?;
    let config = quadrature_config(parsed.flag("--rel-tol"))?;
    let dist = parse_dist(spec, "distribution spec")?;

    let (value, method) = match dist {
        Distribution::Exponential { .. } => {
            if m.get() <= 64 {
                (ig_exponential_closed(m)?, "closed-form")
            } else {
                (ig_generic(dist, m, &config)?, "quadrature")
            }
        }
        Distribution::Gamma { shape, .. } => {
            if m.get() == 2 {
                (gini_gamma_closed(shape)?, "closed-form")
            } else {
                (ig_gamma_quadrature(shape, m, &config)?, "quadrature")
            }
        }
    };

    if let Some(n_value) = parsed.flag("--verify-unbiased") {
        let n = parse_u32(n_value, "--verify-unbiased")?;
        let expected = match dist {
            Distribution::Exponential { .. } => expected_estimator_exponential(n, m, &config),
            Distribution::Gamma { shape, .. } => expected_estimator_gamma(shape, n, m, &config),
        }
        .map_err(|e| match e {
            Error::Domain(msg) => Error::Domain(format!("--verify-unbiased: {msg}")),
            other => other,
        })?;
        let mut table = OutputTable::new(&[
            "distribution",
            "m",
            "method",
            "ig_m",
            "n",
            "expected_estimator",
            "abs_gap",
        ]);
        table.push_row(vec![
            dist.label(),
            m.to_string(),
            method.to_string(),
            format_number(value),
            n.to_string(),
            format_number(expected),
            format_number((expected - value).abs()),
        ]);
        Ok(table)
    } else {
        let mut table = OutputTable::new(&["distribution", "m", "method", "ig_m"]);
        table.push_row(vec![
            dist.label(),
            m.to_string(),
            method.to_string(),
            format_number(value),
        ]);
        Ok(table)
    }
}

/// `estimate <FILE> -m <M>`: sample index of a column of decimals.
pub fn cmd_estimate(args: &[String]) -> Result<OutputTable> {
    let parsed = ParsedArgs::scan(args, &["-m"])?;
    let path = parsed.one_positional("data file path")?;
    let m = parse_order(
        parsed
            .flag("-m")
            .ok_or_else(|| Error::Usage("-m <M> is required".into()))?,
        "-m",
    )?;

    let text =
        fs::read_to_string(path).map_err(|e| Error::Data(format!("cannot read '{path}': {e}")))?;
    let mut values = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let value: f64 = trimmed.parse().map_err(|_| {
            Error::Data(format!("{path}:{}: '{trimmed}' is not a number", index + 1))
        })?;
        if !value.is_finite() {
            return Err(Error::Data(format!(
                "{path}:{}: value must be finite, got {value}",
                index + 1
            )));
        }
        if value < 0.0 {
            return Err(Error::Data(format!(
                "{path}:{}: negative value {value}",
                index + 1
            )));
        }
        values.push(value);
    }

    let sample = Sample::new(values)?;
    let estimate = ig_hat_fast(&sample, m)?;

    let mut table = OutputTable::new(&["n", "m", "ig_hat"]);
    table.push_row(vec![
        sample.len().to_string(),
        m.to_string(),
        format_number(estimate),
    ]);
    Ok(table)
}

/// Renders simulation records with the study's CSV schema.
pub fn records_to_csv(records: &[SimulationRecord]) -> String {
    let mut table = OutputTable::new(&[
        "distribution",
        "n",
        "m",
        "bias",
        "mse",
        "se_bias",
        "n_sim",
        "seed",
    ]);
    for rec in records {
        table.push_row(vec![
            rec.dist_label.clone(),
            rec.n.to_string(),
            rec.m.to_string(),
            format_number(rec.bias),
            format_number(rec.mse),
            format_number(rec.se_bias),
            rec.n_sim.to_string(),
            rec.seed.to_string(),
        ]);
    }
    table.to_csv()
}

/// `simulate`: the Monte Carlo study, printed as CSV and optionally written
/// to `--out`. Without `--dist` both study populations are run.
pub fn cmd_simulate(args: &[String]) -> Result<String> {
    let parsed = ParsedArgs::scan(
        args,
        &["--dist", "-m", "--sizes", "--nsim", "--seed", "--out"],
    )?;
    if let Some(extra) = parsed.positional.first() {
        return Err(Error::Usage(format!("unexpected argument '{extra}'")));
    }

    let m = match parsed.flag("-m") {
        Some(value) => parse_order(value, "-m")?,
        None => GiniOrder::new(3).expect("3 is a valid order"),
    };
    let sizes = match parsed.flag("--sizes") {
        Some(value) => parse_sizes(value, "--sizes")?,
        None => vec![5, 10, 30, 50, 100],
    };
    let n_sim = match parsed.flag("--nsim") {
        Some(value) => parse_u32(value, "--nsim")?,
        None => 1000,
    };
    let seed = match parsed.flag("--seed") {
        Some(value) => parse_u64(value, "--seed")?,
        None => DEFAULT_SEED,
    };
    let dists = match parsed.flag("--dist") {
        Some(spec) => vec![parse_dist(spec, "--dist")?],
        None => vec![
            Distribution::exponential(1.0).expect("unit rate is valid"),
            Distribution::gamma(2.0, 1.0).expect("study parameters are valid"),
        ],
    };

    let mut records = Vec::new();
    let mut rejected = 0u64;
    for dist in dists {
        let config = SimulationConfig {
            dist,
            sizes: sizes.clone(),
            m,
            n_sim,
            seed,
        };
        let run = run_simulation(&config)?;
        records.extend(run.records);
        rejected += run.rejected_replicates;
    }

    let csv = records_to_csv(&records);
    if let Some(path) = parsed.flag("--out") {
        // The CSV is fully materialized first; a failed run writes nothing.
        fs::write(path, &csv).map_err(|e| Error::Data(format!("cannot write '{path}': {e}")))?;
    }
    if rejected > 0 {
        eprintln!("note: {rejected} replicate(s) rejected as degenerate all-zero samples");
    }
    Ok(csv)
}
