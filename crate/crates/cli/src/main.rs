use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{bail, Context};
use clap::error::ErrorKind;
use clap::{ArgGroup, CommandFactory, Parser, Subcommand, ValueEnum};
use cyclotope::statistics::{enumerate_statistics_capped, DEFAULT_ENUMERATION_CAP};
use cyclotope::timing::median_duration;
use cyclotope::verify::{self, VerifyOptions};
use cyclotope::{
    cycle_matrix, equal_size_criterion, equal_size_criterion_with_oracle, formula_table,
    gram_matrix, inverse_rows, omega_matrix, spectrum_dense_with, spectrum_fast,
    spectrum_intervals, CountTable, GroundSubset, Spectrum, SymmetricCycle, Tope,
};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Decompositions of hypercube vertices along the symmetric cycle.
#[derive(Parser, Debug)]
#[command(name = "cyclotope", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose a tope into cycle vertices.
    Decompose {
        #[arg(long, value_parser = dimension)]
        t: usize,
        /// Sign string over '+' and '-', of length t.
        #[arg(long, allow_hyphen_values = true)]
        tope: String,
        #[arg(long, value_enum, default_value_t = Method::Fast)]
        method: Method,
        #[arg(long, value_enum, default_value_t = RecordFormat::Json)]
        format: RecordFormat,
    },
    /// Table of tope counts by negative-part size j and decomposition size l.
    Stats {
        #[arg(long, value_parser = dimension)]
        t: usize,
        /// Also count by enumerating all 2^t topes.
        #[arg(long)]
        enumerate: bool,
        /// Largest t accepted by --enumerate.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP, value_parser = positive)]
        enumeration_cap: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Write the table here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the invariant suite at dimension t.
    Verify {
        #[arg(long, value_parser = dimension)]
        t: usize,
        /// Run the brute-force oracle for t up to this value.
        #[arg(long, default_value_t = 7, value_parser = positive)]
        oracle_max: usize,
        /// Largest t enumerated exhaustively; larger t is sampled.
        #[arg(long, default_value_t = 16, value_parser = positive)]
        exhaustive_max: usize,
        /// Random topes per check in sampled mode.
        #[arg(long, default_value_t = 2048, value_parser = positive)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Decide whether flipping A preserves the decomposition size.
    Equinum {
        #[arg(long, value_parser = dimension)]
        t: usize,
        #[arg(long, allow_hyphen_values = true)]
        tope: String,
        /// Comma-separated 1-based indices, or "none".
        #[arg(long)]
        subset: String,
        /// Also compare both decomposition sizes directly.
        #[arg(long)]
        oracle: bool,
    },
    /// Print the symmetric cycle or one of its matrices.
    #[command(group(ArgGroup::new("object").args(["matrix", "inverse", "omega", "gram"])))]
    Cycle {
        #[arg(long, value_parser = dimension)]
        t: usize,
        /// The matrix M with rows R^0..R^{t-1}.
        #[arg(long)]
        matrix: bool,
        /// M⁻¹.
        #[arg(long)]
        inverse: bool,
        /// M⁻¹·(M⁻¹)ᵀ.
        #[arg(long)]
        omega: bool,
        /// M·Mᵀ.
        #[arg(long)]
        gram: bool,
    },
    /// Time the dense and fast spectrum computations.
    Bench {
        #[arg(long, value_parser = dimension)]
        t: usize,
        #[arg(long, default_value_t = 9, value_parser = positive)]
        reps: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Dense,
    Fast,
    Intervals,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RecordFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

fn dimension(s: &str) -> Result<usize, String> {
    let t = usize::from_str(s).map_err(|e| e.to_string())?;
    if t < cyclotope::MIN_DIMENSION {
        return Err(format!("t must be at least {}", cyclotope::MIN_DIMENSION));
    }
    Ok(t)
}

fn positive(s: &str) -> Result<usize, String> {
    match usize::from_str(s).map_err(|e| e.to_string())? {
        0 => Err("must be positive".into()),
        n => Ok(n),
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::ValueValidation, msg).exit()
}

fn parse_tope(t: usize, text: &str) -> Tope {
    let len = text.chars().count();
    if len != t {
        usage_error(format!("--tope has length {len}, expected {t}"));
    }
    text.parse()
        .unwrap_or_else(|e| usage_error(format!("invalid --tope: {e}")))
}

#[derive(Serialize)]
struct TermRecord {
    sign: i8,
    index: usize,
}

#[derive(Serialize)]
struct DecompositionRecord {
    x: Vec<i8>,
    terms: Vec<TermRecord>,
    size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    agreement: Option<bool>,
}

fn decompose(tope: &Tope, method: Method, format: RecordFormat) -> anyhow::Result<ExitCode> {
    let dense = || spectrum_dense_with(tope, &inverse_rows(tope.dim()).expect("t >= 3"));
    let (x, agreement): (Spectrum, Option<bool>) = match method {
        Method::Dense => (dense()?, None),
        Method::Fast => (spectrum_fast(tope), None),
        Method::Intervals => (spectrum_intervals(tope), None),
        Method::All => {
            let fast = spectrum_fast(tope);
            let agree = dense()? == fast && spectrum_intervals(tope) == fast;
            (fast, Some(agree))
        }
    };
    let decomposition = x.decomposition();
    let record = DecompositionRecord {
        x: x.coords().to_vec(),
        terms: decomposition
            .terms()
            .iter()
            .map(|term| TermRecord {
                sign: term.sign,
                index: term.index,
            })
            .collect(),
        size: decomposition.size(),
        agreement,
    };
    let mut out = io::stdout().lock();
    match format {
        RecordFormat::Json => writeln!(out, "{}", serde_json::to_string(&record)?)?,
        RecordFormat::Text => {
            writeln!(out, "x: {x}")?;
            let terms: Vec<String> = record
                .terms
                .iter()
                .map(|term| format!("{}R^{}", if term.sign > 0 { '+' } else { '-' }, term.index))
                .collect();
            writeln!(out, "terms: {}", terms.join(" "))?;
            writeln!(out, "size: {}", record.size)?;
            if let Some(agree) = agreement {
                writeln!(out, "agreement: {agree}")?;
            }
        }
    }
    Ok(if agreement == Some(false) {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

#[derive(Serialize)]
struct CountRecord {
    t: usize,
    j: usize,
    l: usize,
    count_formula: serde_json::Number,
    #[serde(skip_serializing_if = "Option::is_none")]
    count_enum: Option<serde_json::Number>,
}

fn big_number(n: &num_bigint::BigUint) -> serde_json::Number {
    serde_json::Number::from_str(&n.to_string()).expect("decimal integer")
}

fn stats(
    t: usize,
    enumerated: Option<&CountTable>,
    format: TableFormat,
    sink: Box<dyn Write>,
) -> anyhow::Result<bool> {
    let formula = formula_table(t)?;
    let mut mismatch = false;
    let records: Vec<CountRecord> = formula
        .rows()
        .iter()
        .map(|row| {
            let count_enum = enumerated.map(|table| {
                let n = table.get(row.j, row.l).expect("same shape");
                mismatch |= n != &row.count;
                big_number(n)
            });
            CountRecord {
                t,
                j: row.j,
                l: row.l,
                count_formula: big_number(&row.count),
                count_enum,
            }
        })
        .collect();
    match format {
        TableFormat::Csv => {
            let mut writer = csv::Writer::from_writer(sink);
            let mut header = vec!["t", "j", "l", "count_formula"];
            if enumerated.is_some() {
                header.push("count_enum");
            }
            writer.write_record(&header)?;
            for r in &records {
                let mut fields = vec![
                    r.t.to_string(),
                    r.j.to_string(),
                    r.l.to_string(),
                    r.count_formula.to_string(),
                ];
                if let Some(n) = &r.count_enum {
                    fields.push(n.to_string());
                }
                writer.write_record(&fields)?;
            }
            writer.flush()?;
        }
        TableFormat::Json => {
            let mut sink = sink;
            serde_json::to_writer_pretty(&mut sink, &records)?;
            writeln!(sink)?;
            sink.flush()?;
        }
    }
    Ok(!mismatch)
}

fn cycle(t: usize, matrix: bool, inverse: bool, omega: bool, gram: bool) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    let object = if matrix {
        cycle_matrix(t)?
    } else if inverse {
        inverse_rows(t)?
    } else if omega {
        omega_matrix(t)?
    } else if gram {
        gram_matrix(t)?
    } else {
        for (k, vertex) in SymmetricCycle::build(t)?.vertices().iter().enumerate() {
            writeln!(out, "{k} {vertex}")?;
        }
        return Ok(());
    };
    write!(out, "{object}")?;
    Ok(())
}

fn bench(t: usize, reps: usize, seed: u64) -> anyhow::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tope = verify::random_tope(&mut rng, t);
    let inverse = inverse_rows(t)?;
    let dense = median_duration(reps, || {
        spectrum_dense_with(&tope, &inverse).expect("same t")
    });
    let fast = median_duration(reps, || spectrum_fast(&tope));
    let speedup = dense.as_secs_f64() / fast.as_secs_f64().max(1e-9);
    let mut out = io::stdout().lock();
    writeln!(out, "t: {t}")?;
    writeln!(out, "reps: {reps}")?;
    writeln!(out, "dense_median_ns: {}", dense.as_nanos())?;
    writeln!(out, "fast_median_ns: {}", fast.as_nanos())?;
    writeln!(out, "speedup: {speedup:.1}")?;
    Ok(())
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(value) = std::env::var("CYCLOTOPE_THREADS") else {
        return Ok(());
    };
    let threads: usize = value.parse().ok().filter(|&n| n > 0).unwrap_or_else(|| {
        usage_error(format!(
            "CYCLOTOPE_THREADS={value:?} is not a positive integer"
        ))
    });
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .context("configuring the worker pool")
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    configure_threads()?;
    match cli.command {
        Command::Decompose {
            t,
            tope,
            method,
            format,
        } => decompose(&parse_tope(t, &tope), method, format),
        Command::Stats {
            t,
            enumerate,
            enumeration_cap,
            format,
            output,
        } => {
            let enumerated = if enumerate {
                if t > enumeration_cap {
                    usage_error(format!(
                        "--enumerate at t={t} exceeds --enumeration-cap {enumeration_cap}"
                    ));
                }
                Some(enumerate_statistics_capped(t, enumeration_cap)?)
            } else {
                None
            };
            let sink: Box<dyn Write> = match &output {
                Some(path) => Box::new(BufWriter::new(
                    File::create(path).with_context(|| format!("creating {}", path.display()))?,
                )),
                None => Box::new(io::stdout().lock()),
            };
            let agree = stats(t, enumerated.as_ref(), format, sink)?;
            if !agree {
                eprintln!("formula and enumeration disagree at t={t}");
                return Ok(ExitCode::FAILURE);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            t,
            oracle_max,
            exhaustive_max,
            samples,
            seed,
        } => {
            let options = VerifyOptions {
                oracle_max,
                exhaustive_max,
                samples,
                seed,
                ..VerifyOptions::default()
            };
            let report = verify::run(t, &options)?;
            print!("{report}");
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Equinum {
            t,
            tope,
            subset,
            oracle,
        } => {
            let tope = parse_tope(t, &tope);
            let a = GroundSubset::parse(t, &subset)
                .unwrap_or_else(|e| usage_error(format!("invalid --subset: {e}")));
            if a.is_full() {
                usage_error("--subset must be a proper subset of 1..t");
            }
            let report = if oracle {
                equal_size_criterion_with_oracle(&tope, &a)?
            } else {
                equal_size_criterion(&tope, &a)?
            };
            print!("{report}");
            if !report.is_consistent() {
                bail!("criterion and direct comparison disagree");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cycle {
            t,
            matrix,
            inverse,
            omega,
            gram,
        } => cycle(t, matrix, inverse, omega, gram).map(|()| ExitCode::SUCCESS),
        Command::Bench { t, reps, seed } => bench(t, reps, seed).map(|()| ExitCode::SUCCESS),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
