//! Deterministic CSV and JSON serialization of analysis results.
//!
//! CSV columns follow a fixed order; floating-point cells carry four
//! significant digits unless full precision is requested. JSON is always
//! full precision so that a report round-trips to an identical object, and
//! every JSON document is wrapped in a versioned envelope.

use serde::Serialize;

use crate::error::Result;
use crate::experiments::{HalfComparison, MixingReport, RandomSplitSummary, TextReport};
use crate::ranks::{OccupancySpectrum, RankTable};
use crate::sentences::SentenceLengthDistribution;
use crate::spatial::SpatialProfile;

/// Version stamped into every JSON envelope and documented in the README.
pub const SCHEMA_VERSION: u32 = 1;

/// Float formatting for CSV cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Precision {
    /// Four significant digits.
    #[default]
    Significant,
    /// Shortest round-trip representation.
    Full,
}

/// Format with four significant digits ("0.0003300", "1.005", "23220").
pub fn significant(value: f64, digits: i32) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (digits - 1 - magnitude).max(0);
    format!("{value:.*}", decimals as usize)
}

fn float_cell(value: f64, precision: Precision) -> String {
    match precision {
        Precision::Significant => significant(value, 4),
        Precision::Full => value.to_string(),
    }
}

fn opt_float(value: Option<f64>, precision: Precision) -> String {
    value.map(|v| float_cell(v, precision)).unwrap_or_default()
}

fn opt_u64(value: Option<u64>) -> String {
    value.map(|v| v.to_string()).unwrap_or_default()
}

fn opt_bool(value: Option<bool>) -> String {
    value.map(|v| v.to_string()).unwrap_or_default()
}

fn csv_to_string(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> Result<()>) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    write(&mut writer)?;
    let bytes = writer.into_inner().expect("csv flush into Vec");
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// Column order of the per-text CSV.
pub const TEXT_REPORT_COLUMNS: [&str; 28] = [
    "label",
    "token_count",
    "distinct_count",
    "r_min",
    "r_max",
    "prefactor",
    "exponent",
    "deviation_abs",
    "punct_count",
    "letter_count",
    "rare_threshold",
    "hapax_count",
    "hapax_ratio",
    "yule_k",
    "occupancy_entropy",
    "mu",
    "paragraph_count",
    "sentence_count",
    "byte_size",
    "mean_sentence_len",
    "sentence_dispersion",
    "sentence_entropy",
    "ks_d",
    "ks_p",
    "c_lower",
    "c_upper",
    "c_consistent",
    "regime_ok",
];

fn text_report_row(report: &TextReport, precision: Precision) -> Vec<String> {
    vec![
        report.label.clone(),
        report.token_count.to_string(),
        report.distinct_count.to_string(),
        opt_u64(report.r_min),
        opt_u64(report.r_max),
        opt_float(report.prefactor, precision),
        opt_float(report.exponent, precision),
        opt_float(report.deviation_abs, precision),
        report.punct_count.to_string(),
        report.letter_count.to_string(),
        report.rare_threshold.to_string(),
        report.hapax_count.to_string(),
        float_cell(report.hapax_ratio, precision),
        opt_float(report.yule_k, precision),
        float_cell(report.occupancy_entropy, precision),
        opt_float(report.mu, precision),
        report.paragraph_count.to_string(),
        report.sentence_count.to_string(),
        report.byte_size.to_string(),
        opt_float(report.mean_sentence_len, precision),
        opt_float(report.sentence_dispersion, precision),
        opt_float(report.sentence_entropy, precision),
        opt_float(report.ks_d, precision),
        opt_float(report.ks_p, precision),
        opt_float(report.c_lower, precision),
        opt_float(report.c_upper, precision),
        opt_bool(report.c_consistent),
        report.regime_ok.to_string(),
    ]
}

/// One CSV row per analyzed text.
pub fn text_reports_csv(reports: &[TextReport], precision: Precision) -> Result<String> {
    csv_to_string(|w| {
        w.write_record(TEXT_REPORT_COLUMNS)?;
        for report in reports {
            w.write_record(text_report_row(report, precision))?;
        }
        Ok(())
    })
}

/// One CSV row per half comparison: paired per-half columns plus the
/// asymmetry diagnostics and the verdict.
pub fn half_comparisons_csv(
    comparisons: &[HalfComparison],
    precision: Precision,
) -> Result<String> {
    csv_to_string(|w| {
        let mut header = vec!["label".to_string(), "token_count_per_half".to_string()];
        for column in [
            "distinct_count",
            "r_min",
            "r_max",
            "prefactor",
            "exponent",
            "punct_count",
            "letter_count",
            "hapax_count",
            "yule_k",
            "mu",
            "paragraph_count",
            "sentence_count",
            "byte_size",
            "mean_sentence_len",
            "sentence_dispersion",
            "sentence_entropy",
        ] {
            header.push(format!("{column}_1"));
            header.push(format!("{column}_2"));
        }
        header.extend(["delta".into(), "delta_tilde".into(), "diagnosis".into()]);
        w.write_record(&header)?;
        for cmp in comparisons {
            let (a, b) = (&cmp.first, &cmp.second);
            let mut row = vec![cmp.label.clone(), a.token_count.to_string()];
            let pairs: [(String, String); 16] = [
                (a.distinct_count.to_string(), b.distinct_count.to_string()),
                (opt_u64(a.r_min), opt_u64(b.r_min)),
                (opt_u64(a.r_max), opt_u64(b.r_max)),
                (
                    opt_float(a.prefactor, precision),
                    opt_float(b.prefactor, precision),
                ),
                (
                    opt_float(a.exponent, precision),
                    opt_float(b.exponent, precision),
                ),
                (a.punct_count.to_string(), b.punct_count.to_string()),
                (a.letter_count.to_string(), b.letter_count.to_string()),
                (a.hapax_count.to_string(), b.hapax_count.to_string()),
                (opt_float(a.yule_k, precision), opt_float(b.yule_k, precision)),
                (opt_float(a.mu, precision), opt_float(b.mu, precision)),
                (
                    a.paragraph_count.to_string(),
                    b.paragraph_count.to_string(),
                ),
                (a.sentence_count.to_string(), b.sentence_count.to_string()),
                (a.byte_size.to_string(), b.byte_size.to_string()),
                (
                    opt_float(a.mean_sentence_len, precision),
                    opt_float(b.mean_sentence_len, precision),
                ),
                (
                    opt_float(a.sentence_dispersion, precision),
                    opt_float(b.sentence_dispersion, precision),
                ),
                (
                    opt_float(a.sentence_entropy, precision),
                    opt_float(b.sentence_entropy, precision),
                ),
            ];
            for (first, second) in pairs {
                row.push(first);
                row.push(second);
            }
            row.push(opt_float(cmp.delta, precision));
            row.push(opt_float(cmp.delta_tilde, precision));
            row.push(format!("{:?}", cmp.diagnosis));
            w.write_record(&row)?;
        }
        Ok(())
    })
}

/// The feature-by-feature verdict vector of one half comparison.
pub fn half_features_csv(cmp: &HalfComparison, precision: Precision) -> Result<String> {
    csv_to_string(|w| {
        w.write_record([
            "feature",
            "group",
            "starred",
            "first",
            "second",
            "direction",
            "expected",
            "matches_expected",
        ])?;
        for f in &cmp.features {
            w.write_record([
                f.feature.to_string(),
                format!("{:?}", f.group),
                f.starred.to_string(),
                opt_float(f.first, precision),
                opt_float(f.second, precision),
                f.direction.to_string(),
                f.expected.map(|e| e.to_string()).unwrap_or_default(),
                f.matches_expected
                    .map(|m| m.to_string())
                    .unwrap_or_default(),
            ])?;
        }
        Ok(())
    })
}

/// One CSV row per mixture (pairs first, then the full mixture).
pub fn mixing_csv(report: &MixingReport, precision: Precision) -> Result<String> {
    csv_to_string(|w| {
        w.write_record([
            "label",
            "components",
            "distinct_count",
            "r_min",
            "r_max",
            "width",
            "deviation_abs",
            "widens",
            "raises_ceiling",
            "raises_floor",
        ])?;
        for entry in report.pairs.iter().chain(report.full.iter()) {
            let width = match (entry.report.r_min, entry.report.r_max) {
                (Some(lo), Some(hi)) => (hi - lo).to_string(),
                _ => String::new(),
            };
            w.write_record([
                entry.report.label.clone(),
                entry.components.join("|"),
                entry.report.distinct_count.to_string(),
                opt_u64(entry.report.r_min),
                opt_u64(entry.report.r_max),
                width,
                opt_float(entry.report.deviation_abs, precision),
                opt_bool(entry.widens),
                opt_bool(entry.raises_ceiling),
                opt_bool(entry.raises_floor),
            ])?;
        }
        Ok(())
    })
}

/// Per-seed rows of the random-split control.
pub fn random_split_csv(summary: &RandomSplitSummary) -> Result<String> {
    csv_to_string(|w| {
        w.write_record(["seed", "r_min_first", "r_min_second", "diff"])?;
        for trial in &summary.trials {
            w.write_record([
                trial.seed.to_string(),
                opt_u64(trial.r_min_first),
                opt_u64(trial.r_min_second),
                trial.diff.map(|d| d.to_string()).unwrap_or_default(),
            ])?;
        }
        Ok(())
    })
}

/// Occupancy spectrum as `(m, v_m)` rows.
pub fn spectrum_csv(spectrum: &OccupancySpectrum) -> Result<String> {
    csv_to_string(|w| {
        w.write_record(["m", "v_m"])?;
        for (m, v) in spectrum.iter() {
            w.write_record([m.to_string(), v.to_string()])?;
        }
        Ok(())
    })
}

/// Sentence-length distribution as `(length, fraction)` rows.
pub fn sentence_csv(
    distribution: &SentenceLengthDistribution,
    precision: Precision,
) -> Result<String> {
    csv_to_string(|w| {
        w.write_record(["length", "kappa"])?;
        for (alpha, kappa) in distribution.iter() {
            w.write_record([alpha.to_string(), float_cell(kappa, precision)])?;
        }
        Ok(())
    })
}

/// Word-level spacing export for the top `max_rank` ranks: word, rank,
/// ordinary frequency, space-frequency, and mean period.
pub fn spatial_csv(
    table: &RankTable,
    profile: &SpatialProfile,
    max_rank: usize,
    precision: Precision,
) -> Result<String> {
    csv_to_string(|w| {
        w.write_record(["word", "rank", "frequency", "space_frequency", "mean_period"])?;
        for rank in 1..=max_rank.min(table.distinct_count()) {
            let entry = table.entry(rank).expect("rank in table");
            let spacing = profile.spacing(&entry.word);
            w.write_record([
                entry.word.clone(),
                rank.to_string(),
                float_cell(table.frequency(rank).expect("rank in table"), precision),
                spacing
                    .map(|s| float_cell(s.space_frequency, precision))
                    .unwrap_or_default(),
                spacing
                    .map(|s| float_cell(s.mean_period, precision))
                    .unwrap_or_default(),
            ])?;
        }
        Ok(())
    })
}

#[derive(Debug, Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    kind: &'a str,
    data: &'a T,
}

/// Serialize a result into the versioned JSON envelope (full precision).
pub fn to_json<T: Serialize>(kind: &str, data: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(&Envelope {
        schema_version: SCHEMA_VERSION,
        kind,
        data,
    })?)
}
