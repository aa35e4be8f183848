//! Thin command-line front end over the zipfian library.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use zipfian::corpus::{tokenize_bytes, TokenizerConfig};
use zipfian::experiments::{
    analyze_text, compare_halves, mixing_experiment, random_split_control, AnalysisOptions,
    HalfComparison, MixingReport, RandomSplitSummary, TextReport,
};
use zipfian::fit::KsSampleSize;
use zipfian::ranks::TieBreak;
use zipfian::report::{self, Precision};

#[derive(Parser)]
#[command(
    name = "zipfian",
    version,
    about = "Rank-frequency analysis of plain texts: power-law validity ranges, half comparisons, mixing"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one or more UTF-8 plain-text files.
    Analyze(AnalyzeArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input files (UTF-8 plain text).
    #[arg(required = true)]
    files: Vec<PathBuf>,

    /// Also split each text at its midpoint and compare the halves.
    #[arg(long)]
    halves: bool,

    /// Also run the seeded random-split control on each text.
    #[arg(long)]
    random_split: bool,

    /// Number of seeds for the random-split control.
    #[arg(long, default_value_t = 30)]
    seeds: usize,

    /// Base seed; the control uses seed, seed+1, …
    #[arg(long, default_value_t = 1)]
    seed: u64,

    /// Also run the mixing experiment over all inputs (needs at least two).
    #[arg(long)]
    mix: bool,

    /// A word is rare when it occurs at most this many times.
    #[arg(long, default_value_t = 3)]
    rare_threshold: u64,

    /// How words with equal counts are ordered.
    #[arg(long, value_enum, default_value_t = TieBreakArg::First)]
    tie_break: TieBreakArg,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,

    /// Output directory for report files.
    #[arg(long, default_value = ".")]
    out: PathBuf,

    /// Byte range `A:B` to keep from each file before tokenization (either
    /// side may be omitted); useful for trimming boilerplate headers.
    #[arg(long, value_parser = parse_trim)]
    trim_bytes: Option<TrimRange>,

    /// Exit with code 2 when any input has no detectable validity range.
    #[arg(long)]
    strict: bool,

    /// Tokenizer configuration file (key = value lines).
    #[arg(long)]
    tokenizer_config: Option<PathBuf>,

    /// Emit floats at full precision instead of four significant digits.
    #[arg(long)]
    full_precision: bool,

    /// Sample size driving the Kolmogorov-Smirnov p-value.
    #[arg(long, value_enum, default_value_t = KsArg::Ranks)]
    ks_sample_size: KsArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum TieBreakArg {
    /// Ties keep first-occurrence order.
    First,
    /// Ties are ordered alphabetically.
    Alpha,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum KsArg {
    Ranks,
    Tokens,
}

#[derive(Clone, Copy, Debug)]
struct TrimRange {
    start: usize,
    end: Option<usize>,
}

fn parse_trim(value: &str) -> Result<TrimRange, String> {
    let (a, b) = value
        .split_once(':')
        .ok_or_else(|| format!("expected A:B, got {value:?}"))?;
    let start = if a.is_empty() {
        0
    } else {
        a.parse().map_err(|e| format!("bad start byte: {e}"))?
    };
    let end = if b.is_empty() {
        None
    } else {
        Some(b.parse().map_err(|e| format!("bad end byte: {e}"))?)
    };
    if let Some(end) = end {
        if end < start {
            return Err(format!("empty byte range {start}:{end}"));
        }
    }
    Ok(TrimRange { start, end })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze(args) => match run_analyze(&args) {
            Ok(all_ranges_found) => {
                if args.strict && !all_ranges_found {
                    ExitCode::from(2)
                } else {
                    ExitCode::SUCCESS
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::FAILURE
            }
        },
    }
}

fn label_of(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn run_analyze(args: &AnalyzeArgs) -> zipfian::Result<bool> {
    let config = match &args.tokenizer_config {
        Some(path) => TokenizerConfig::from_file(path)?,
        None => TokenizerConfig::default(),
    };
    let options = AnalysisOptions {
        rare_threshold: args.rare_threshold,
        tie_break: match args.tie_break {
            TieBreakArg::First => TieBreak::FirstOccurrence,
            TieBreakArg::Alpha => TieBreak::Alphabetical,
        },
        ks_sample_size: match args.ks_sample_size {
            KsArg::Ranks => KsSampleSize::Ranks,
            KsArg::Tokens => KsSampleSize::Tokens,
        },
    };
    let precision = if args.full_precision {
        Precision::Full
    } else {
        Precision::Significant
    };

    let mut texts = Vec::new();
    for path in &args.files {
        let mut bytes = std::fs::read(path)?;
        if let Some(trim) = args.trim_bytes {
            let end = trim.end.unwrap_or(bytes.len()).min(bytes.len());
            let start = trim.start.min(end);
            bytes = bytes[start..end].to_vec();
        }
        let text = tokenize_bytes(&bytes, &config)?;
        texts.push((label_of(path), text));
    }

    std::fs::create_dir_all(&args.out)?;

    let mut reports: Vec<TextReport> = Vec::new();
    for (label, text) in &texts {
        let report = analyze_text(label.clone(), text, &options)?;
        print_summary(&report);
        reports.push(report);
    }
    write_output(args, "reports", &reports, |r| {
        report::text_reports_csv(r, precision)
    })?;

    if args.halves {
        let mut comparisons: Vec<HalfComparison> = Vec::new();
        for (label, text) in &texts {
            let cmp = compare_halves(label.clone(), text, &options)?;
            println!(
                "{label}: halves r_min {} / {}, diagnosis {:?}",
                cmp.first.r_min.map_or("-".into(), |v| v.to_string()),
                cmp.second.r_min.map_or("-".into(), |v| v.to_string()),
                cmp.diagnosis
            );
            comparisons.push(cmp);
        }
        write_output(args, "halves", &comparisons, |c| {
            report::half_comparisons_csv(c, precision)
        })?;
        if matches!(args.format, FormatArg::Csv) {
            for cmp in &comparisons {
                let path = args.out.join(format!("features_{}.csv", cmp.label));
                std::fs::write(path, report::half_features_csv(cmp, precision)?)?;
            }
        }
    }

    if args.random_split {
        let seeds: Vec<u64> = (0..args.seeds as u64).map(|i| args.seed + i).collect();
        let mut summaries: Vec<RandomSplitSummary> = Vec::new();
        for (label, text) in &texts {
            let summary = random_split_control(label.clone(), text, &seeds, &options)?;
            println!(
                "{label}: random splits +{} -{} ={} (n/a {}), natural |Δr_min| {:?}",
                summary.positive,
                summary.negative,
                summary.zero,
                summary.unavailable,
                summary.natural_abs_diff
            );
            summaries.push(summary);
        }
        match args.format {
            FormatArg::Json => {
                let path = args.out.join("random_split.json");
                std::fs::write(path, report::to_json("random-split-control", &summaries)?)?;
            }
            FormatArg::Csv => {
                for summary in &summaries {
                    let path = args.out.join(format!("random_split_{}.csv", summary.label));
                    std::fs::write(path, report::random_split_csv(summary)?)?;
                }
            }
        }
    }

    if args.mix {
        let refs: Vec<(String, &zipfian::TokenizedText)> = texts
            .iter()
            .map(|(label, text)| (label.clone(), text))
            .collect();
        let mixing: MixingReport = mixing_experiment(&refs, &options)?;
        for entry in mixing.pairs.iter().chain(mixing.full.iter()) {
            println!(
                "{}: range {:?}..{:?} widens={:?} raises_ceiling={:?} raises_floor={:?}",
                entry.report.label,
                entry.report.r_min,
                entry.report.r_max,
                entry.widens,
                entry.raises_ceiling,
                entry.raises_floor
            );
        }
        match args.format {
            FormatArg::Json => {
                let path = args.out.join("mixing.json");
                std::fs::write(path, report::to_json("mixing-experiment", &mixing)?)?;
            }
            FormatArg::Csv => {
                let path = args.out.join("mixing.csv");
                std::fs::write(path, report::mixing_csv(&mixing, precision)?)?;
            }
        }
    }

    Ok(reports.iter().all(|r| r.range_found))
}

fn print_summary(report: &TextReport) {
    let range = match (report.r_min, report.r_max) {
        (Some(lo), Some(hi)) => format!("[{lo}, {hi}]"),
        _ => "none".to_string(),
    };
    println!(
        "{}: N={} n={} range={} gamma={} c={}",
        report.label,
        report.token_count,
        report.distinct_count,
        range,
        report
            .exponent
            .map_or("-".into(), |g| report::significant(g, 4)),
        report
            .prefactor
            .map_or("-".into(), |c| report::significant(c, 4)),
    );
}

fn write_output<T: serde::Serialize>(
    args: &AnalyzeArgs,
    stem: &str,
    data: &T,
    to_csv: impl FnOnce(&T) -> zipfian::Result<String>,
) -> zipfian::Result<()> {
    match args.format {
        FormatArg::Json => {
            let path = args.out.join(format!("{stem}.json"));
            std::fs::write(path, report::to_json(stem, data)?)?;
        }
        FormatArg::Csv => {
            let path = args.out.join(format!("{stem}.csv"));
            std::fs::write(path, to_csv(data)?)?;
        }
    }
    Ok(())
}
