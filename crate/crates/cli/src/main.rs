//! `pdens`: compute, compare and plot density functions of periodic
//! sequences of intervals.
//!
//! Exit codes: 0 success or equal fingerprints, 1 fingerprints differ,
//! 2 unreadable input or bad arguments, 3 invalid sequence, 4 output
//! could not be written.

mod svg;

use std::fmt;
use std::fs;
use std::io::Write as _;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use pdens_core::densities::{default_fingerprint, densigram, fingerprint, trapezoid_k};
use pdens_core::{
    coverage, fingerprints_equal, fixtures, format_rational, parse_rational, parse_sequence, psi,
    pwl_to_csv, trapezoid1, write_sequence, ParseError, PeriodicSequence, Rational,
};

use svg::{Curve, Plot};

#[derive(Parser)]
#[command(name = "pdens", version, about = "Exact density functions of periodic sequences of intervals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Corner lists of psi_k for every k in a range
    Compute {
        #[command(flatten)]
        source: Source,
        /// Inclusive range such as `0..9`, or a single k; defaults to 0..m
        #[arg(long)]
        k: Option<KRange>,
        #[command(flatten)]
        plot: PlotArgs,
        /// Also emit the trapezoid of every interval (k >= 1)
        #[arg(long)]
        trapezoids: bool,
    },
    /// Compare the fingerprints psi_0..psi_m of two sequences
    Compare {
        s: String,
        q: String,
        #[arg(long)]
        neighbor_radii: bool,
        /// Print the report as CSV
        #[arg(long)]
        csv: bool,
    },
    /// Coverage lengths from the brute-force sweep next to the closed form
    Oracle {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_parser = rational_arg)]
        t: Rational,
        /// Defaults to every k with nonzero coverage
        #[arg(long)]
        k: Option<KRange>,
    },
    /// Local maxima of psi_k
    Maxima {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        k: usize,
    },
    /// Write a built-in sequence; lists the names when none is given
    Demo {
        name: Option<String>,
        /// Also write psi_0..psi_m as CSV next to the sequence file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cumulative sums psi_1 + ... + psi_k
    Densigram {
        #[command(flatten)]
        source: Source,
        /// Largest k; defaults to m
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        plot: PlotArgs,
    },
}

#[derive(Args)]
struct Source {
    /// Sequence file, or the name of a built-in sequence
    input: String,
    /// Replace every radius by half the distance to the nearest neighbour
    #[arg(long)]
    neighbor_radii: bool,
}

#[derive(Args)]
struct PlotArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Right end of the plotted window
    #[arg(long, value_parser = positive_rational_arg, default_value = "1")]
    tmax: Rational,
    /// Write one file per function into this directory instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Svg,
}

#[derive(Clone)]
struct KRange(RangeInclusive<usize>);

impl FromStr for KRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("expected `a..b`, `a..=b` or `a`, got {s:?}");
        let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(KRange(lo..=hi))
    }
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("not an exact rational: {s:?}"))
}

fn positive_rational_arg(s: &str) -> Result<Rational, String> {
    let x = rational_arg(s)?;
    if x.is_positive() {
        Ok(x)
    } else {
        Err(format!("must be positive: {s}"))
    }
}

enum Failure {
    Input(String),
    Invalid(String),
    Output(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Invalid(_) => 3,
            Failure::Output(_) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) | Failure::Invalid(m) | Failure::Output(m) => f.write_str(m),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

fn load(input: &str, neighbor_radii: bool) -> Result<PeriodicSequence, Failure> {
    let path = Path::new(input);
    let seq = if path.exists() {
        let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{input}: {e}")))?;
        parse_sequence(&text).map_err(|e| match e {
            ParseError::Syntax { .. } => Failure::Input(format!("{input}: {e}")),
            ParseError::Invalid(_) => Failure::Invalid(format!("{input}: {e}")),
        })?
    } else {
        fixtures::by_name(input).ok_or_else(|| {
            Failure::Input(format!("{input}: no such file or built-in sequence ({})", fixtures::NAMES.join(", ")))
        })?
    };
    Ok(if neighbor_radii { seq.neighbor_radii() } else { seq })
}

fn load_source(src: &Source) -> Result<PeriodicSequence, Failure> {
    load(&src.input, src.neighbor_radii)
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| Failure::Output(format!("{}: {e}", dir.display())))?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| Failure::Output(format!("{}: {e}", path.display())))?;
    log::info!("wrote {}", path.display());
    Ok(())
}

fn print(text: &str) -> Result<(), Failure> {
    std::io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Output(format!("stdout: {e}")))
}

fn trapezoid_csv(seq: &PeriodicSequence, k: usize) -> String {
    let mut out = String::from("index,onset,rise_end,fall_start,end,height\n");
    for i in 0..seq.len() {
        let tr = if k == 1 { trapezoid1(seq, i) } else { trapezoid_k(seq, k, i) }.expect("index in range");
        let cells = [tr.onset(), tr.rise_end(), tr.fall_start(), tr.end(), tr.height().clone()];
        let cells: Vec<String> = cells.iter().map(format_rational).collect();
        out.push_str(&format!("{i},{}\n", cells.join(",")));
    }
    out
}

fn compute(seq: &PeriodicSequence, ks: RangeInclusive<usize>, plot: &PlotArgs, trapezoids: bool) -> Outcome {
    let functions: Vec<(usize, _)> = ks.map(|k| (k, psi(seq, k))).collect();
    let parts = |k: usize| {
        if trapezoids && k >= 1 {
            (0..seq.len())
                .map(|i| if k == 1 { trapezoid1(seq, i) } else { trapezoid_k(seq, k, i) }.expect("index in range").to_pwl())
                .collect()
        } else {
            Vec::new()
        }
    };
    match (plot.format, &plot.out) {
        (Format::Csv, Some(dir)) => {
            for (k, f) in &functions {
                write_file(dir, &format!("psi_{k}.csv"), &pwl_to_csv(f, false))?;
                if trapezoids && *k >= 1 {
                    write_file(dir, &format!("trapezoids_{k}.csv"), &trapezoid_csv(seq, *k))?;
                }
            }
        }
        (Format::Csv, None) => {
            let mut out = String::new();
            for (k, f) in &functions {
                out.push_str(&format!("# psi_{k}\n{}", pwl_to_csv(f, false)));
                if trapezoids && *k >= 1 {
                    out.push_str(&format!("# trapezoids_{k}\n{}", trapezoid_csv(seq, *k)));
                }
            }
            print(&out)?;
        }
        (Format::Svg, Some(dir)) => {
            for (k, f) in &functions {
                let pieces = parts(*k);
                let mut curves = vec![Curve { label: format!("psi_{k}"), f, dashed: false }];
                curves.extend(pieces.iter().enumerate().map(|(i, p)| Curve { label: format!("interval {i}"), f: p, dashed: true }));
                let svg = Plot { title: format!("psi_{k} of {seq}"), tmax: plot.tmax.clone(), curves, label_corners: true }.render();
                write_file(dir, &format!("psi_{k}.svg"), &svg)?;
            }
        }
        (Format::Svg, None) => {
            let curves = functions.iter().map(|(k, f)| Curve { label: format!("psi_{k}"), f, dashed: false }).collect();
            print(&Plot { title: format!("{seq}"), tmax: plot.tmax.clone(), curves, label_corners: functions.len() == 1 }.render())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn densigram_cmd(seq: &PeriodicSequence, depth: usize, plot: &PlotArgs) -> Outcome {
    let layers = densigram(&fingerprint(seq, depth));
    match plot.format {
        Format::Csv => {
            for (n, f) in layers.iter().enumerate() {
                let k = n + 1;
                match &plot.out {
                    Some(dir) => write_file(dir, &format!("densigram_{k}.csv"), &pwl_to_csv(f, false))?,
                    None => print(&format!("# psi_1 + ... + psi_{k}\n{}", pwl_to_csv(f, false)))?,
                }
            }
        }
        Format::Svg => {
            let curves = layers
                .iter()
                .enumerate()
                .map(|(n, f)| Curve { label: format!("sum to psi_{}", n + 1), f, dashed: false })
                .collect();
            let svg = Plot { title: format!("densigram of {seq}"), tmax: plot.tmax.clone(), curves, label_corners: false }.render();
            match &plot.out {
                Some(dir) => write_file(dir, "densigram.svg", &svg)?,
                None => print(&svg)?,
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn oracle_cmd(seq: &PeriodicSequence, t: &Rational, ks: Option<KRange>) -> Outcome {
    let profile = coverage(seq, t).map_err(|e| Failure::Input(e.to_string()))?;
    let ks = ks.map(|r| r.0).unwrap_or(0..=profile.max_fold());
    let mut out = String::from("k,coverage,psi\n");
    let mut disagree = Vec::new();
    for k in ks {
        let swept = profile.length(k);
        let closed = psi(seq, k).evaluate(t).expect("t >= 0");
        if swept != closed {
            disagree.push(k);
        }
        out.push_str(&format!("{k},{},{}\n", format_rational(&swept), format_rational(&closed)));
    }
    print(&out)?;
    if !disagree.is_empty() {
        log::error!("closed form disagrees with the sweep at k = {disagree:?}");
    }
    Ok(ExitCode::SUCCESS)
}

fn maxima_cmd(seq: &PeriodicSequence, k: usize) -> Outcome {
    let mut out = String::from("t_start,t_end,value\n");
    for m in psi(seq, k).local_maxima() {
        out.push_str(&format!("{},{},{}\n", format_rational(&m.t_start), format_rational(&m.t_end), format_rational(&m.value)));
    }
    print(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn demo(name: Option<String>, out: Option<PathBuf>) -> Outcome {
    let Some(name) = name else {
        print(&format!("{}\n", fixtures::NAMES.join("\n")))?;
        return Ok(ExitCode::SUCCESS);
    };
    let seq = load(&name, false)?;
    let text = format!("# built-in sequence {name}\n{}", write_sequence(&seq));
    match out {
        None => print(&text)?,
        Some(dir) => {
            write_file(&dir, &format!("{name}.txt"), &text)?;
            let fp = default_fingerprint(&seq);
            for (k, f) in fp.functions().iter().enumerate() {
                write_file(&dir, &format!("{name}_psi_{k}.csv"), &pwl_to_csv(f, false))?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Compute { source, k, plot, trapezoids } => {
            let seq = load_source(&source)?;
            let ks = k.map(|r| r.0).unwrap_or(0..=seq.len());
            compute(&seq, ks, &plot, trapezoids)
        }
        Command::Compare { s, q, neighbor_radii, csv } => {
            let a = load(&s, neighbor_radii)?;
            let b = load(&q, neighbor_radii)?;
            let report = fingerprints_equal(&a, &b);
            if csv {
                print(&report.to_csv())?;
            } else {
                print(&format!("{report}\n"))?;
            }
            Ok(if report.equal { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Oracle { source, t, k } => oracle_cmd(&load_source(&source)?, &t, k),
        Command::Maxima { source, k } => maxima_cmd(&load_source(&source)?, k),
        Command::Demo { name, out } => demo(name, out),
        Command::Densigram { source, k, plot } => {
            let seq = load_source(&source)?;
            let depth = k.unwrap_or(seq.len());
            densigram_cmd(&seq, depth, &plot)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("pdens: {f}");
            ExitCode::from(f.code())
        }
    }
}
