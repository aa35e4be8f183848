//! Whole-text analysis and the three comparative experiments: natural-half
//! comparison, seeded random-split control, and text mixing.
//!
//! Sub-analyses fail soft: a report field that cannot be computed (say, no
//! rank interval satisfies the power-law criteria) is left empty and noted,
//! so degenerate corpus members still produce partial rows.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::corpus::{mix_texts, split_halves, SplitMode, TokenizedText};
use crate::error::{Error, Result};
use crate::fit::{c_bounds, find_zipf_range, ks_test, KsSampleSize, ZipfRange};
use crate::model::{half_asymmetry, regime_for, HalfFit, ModelParams};
use crate::ranks::{
    build_rank_table, hapax_count, occupancy_entropy, occupancy_spectrum, yule_k, TieBreak,
};
use crate::sentences::sentence_stats;
use crate::spatial::{space_frequency_profile, zipfian_mu};

/// Knobs shared by all analyses.
#[derive(Debug, Clone, Copy)]
pub struct AnalysisOptions {
    /// A word is rare when it occurs at most this many times.
    pub rare_threshold: u64,
    pub tie_break: TieBreak,
    pub ks_sample_size: KsSampleSize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            rare_threshold: 3,
            tie_break: TieBreak::default(),
            ks_sample_size: KsSampleSize::default(),
        }
    }
}

/// Everything measured on one text. Fields that depend on a detected
/// validity range are `None` when detection fails.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TextReport {
    pub label: String,
    /// Token count `N`.
    pub token_count: u64,
    /// Distinct words `n`.
    pub distinct_count: u64,
    pub r_min: Option<u64>,
    pub r_max: Option<u64>,
    /// Fitted prefactor `c`.
    pub prefactor: Option<f64>,
    /// Fitted exponent `γ`.
    pub exponent: Option<f64>,
    /// `|d|`, the absolute summed deviation of the law over the range.
    pub deviation_abs: Option<f64>,
    /// Punctuation signs `S`.
    pub punct_count: u64,
    /// Letters `L`.
    pub letter_count: u64,
    /// Words occurring at most `rare_threshold` times.
    pub rare_threshold: u64,
    pub hapax_count: u64,
    pub hapax_ratio: f64,
    pub yule_k: Option<f64>,
    pub occupancy_entropy: f64,
    /// Variational distance between ordinary and space frequencies over the
    /// range.
    pub mu: Option<f64>,
    /// Paragraphs `ρ`.
    pub paragraph_count: u64,
    /// Sentences `σ`.
    pub sentence_count: u64,
    /// Raw size in bytes `B`.
    pub byte_size: u64,
    pub mean_sentence_len: Option<f64>,
    pub sentence_dispersion: Option<f64>,
    pub sentence_entropy: Option<f64>,
    pub ks_d: Option<f64>,
    pub ks_p: Option<f64>,
    pub c_lower: Option<f64>,
    pub c_upper: Option<f64>,
    pub c_consistent: Option<bool>,
    /// Whether `n³ ≫ N ≫ n ≫ 1` holds at the documented thresholds.
    pub regime_ok: bool,
    pub range_found: bool,
    /// Human-readable reasons for any missing fields.
    pub notes: Vec<String>,
}

impl TextReport {
    /// Zipfian range reconstructed from the report, when detection
    /// succeeded.
    pub fn model_params(&self) -> Option<ModelParams> {
        let c = self.prefactor?;
        ModelParams::new(self.token_count, self.distinct_count, c).ok()
    }
}

/// Analyze a single text. Only an empty text is a hard error; every other
/// sub-analysis failure degrades to an absent field plus a note.
pub fn analyze_text(
    label: impl Into<String>,
    text: &TokenizedText,
    options: &AnalysisOptions,
) -> Result<TextReport> {
    let table = build_rank_table(text, options.tie_break)?;
    let spectrum = occupancy_spectrum(&table);
    let (hapax, hapax_ratio) = hapax_count(&table, options.rare_threshold);
    let mut notes = Vec::new();

    let yule = match yule_k(&table) {
        Ok(k) => Some(k),
        Err(e) => {
            notes.push(format!("yule_k unavailable: {e}"));
            None
        }
    };

    let freqs = table.frequencies();
    let range: Option<ZipfRange> = match find_zipf_range(&freqs) {
        Ok(r) => Some(r),
        Err(e) => {
            notes.push(format!("no zipfian range: {e}"));
            None
        }
    };

    let bounds = range.map(|r| c_bounds(&r, table.distinct_count()));

    let mu = match range {
        Some(r) => match space_frequency_profile(text)
            .and_then(|profile| zipfian_mu(&table, &profile, &r))
        {
            Ok(mu) => Some(mu),
            Err(e) => {
                notes.push(format!("mu unavailable: {e}"));
                None
            }
        },
        None => None,
    };

    let ks = range.map(|r| {
        let effective = match options.ks_sample_size {
            KsSampleSize::Ranks => r.width(),
            KsSampleSize::Tokens => {
                let covered: u64 = table.entries()[r.r_min - 1..r.r_max]
                    .iter()
                    .map(|e| e.count)
                    .sum();
                covered as usize
            }
        };
        ks_test(&freqs, &r, effective)
    });

    let sentence = match sentence_stats(text.sentence_lengths()) {
        Ok(d) => Some(d),
        Err(e) => {
            notes.push(format!("sentence statistics unavailable: {e}"));
            None
        }
    };

    Ok(TextReport {
        label: label.into(),
        token_count: table.token_count(),
        distinct_count: table.distinct_count() as u64,
        r_min: range.map(|r| r.r_min as u64),
        r_max: range.map(|r| r.r_max as u64),
        prefactor: range.map(|r| r.fit.prefactor),
        exponent: range.map(|r| r.fit.exponent),
        deviation_abs: range.map(|r| r.deviation.abs()),
        punct_count: text.punct_count(),
        letter_count: text.letter_count(),
        rare_threshold: options.rare_threshold,
        hapax_count: hapax,
        hapax_ratio,
        yule_k: yule,
        occupancy_entropy: occupancy_entropy(&spectrum),
        mu,
        paragraph_count: text.paragraph_count(),
        sentence_count: text.sentence_count() as u64,
        byte_size: text.byte_size(),
        mean_sentence_len: sentence.as_ref().map(|d| d.mean),
        sentence_dispersion: sentence.as_ref().map(|d| d.dispersion),
        sentence_entropy: sentence.as_ref().map(|d| d.entropy),
        ks_d: ks.map(|k| k.d),
        ks_p: ks.map(|k| k.p_value),
        c_lower: bounds.map(|b| b.lower),
        c_upper: bounds.map(|b| b.upper),
        c_consistent: bounds.map(|b| b.consistent),
        regime_ok: regime_for(table.token_count(), table.distinct_count() as u64).passes,
        range_found: range.is_some(),
        notes,
    })
}

/// Which half carries the larger value of a feature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    FirstLarger,
    SecondLarger,
    Equal,
    /// At least one side could not be computed.
    Unavailable,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::FirstLarger => "+",
            Direction::SecondLarger => "-",
            Direction::Equal => "0",
            Direction::Unavailable => "∅",
        })
    }
}

/// Feature families of the half-comparison table: word-level features need
/// nothing beyond token separation, structural ones need letters, sentences
/// or paragraphs, and the last group is expected to show no signal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FeatureGroup {
    WordLevel,
    Structural,
    NoSignal,
}

/// One row of the half-comparison verdict vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureComparison {
    pub feature: String,
    pub group: FeatureGroup,
    /// Starred features are the strict ones: a meaningful text is expected
    /// to match them without exception.
    pub starred: bool,
    pub first: Option<f64>,
    pub second: Option<f64>,
    pub direction: Direction,
    pub expected: Option<Direction>,
    pub matches_expected: Option<bool>,
}

/// Verdict of the meaningful-text rule: all starred features matching their
/// expected direction reads as text-like.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TextDiagnosis {
    TextLike,
    Inconclusive,
}

/// Side-by-side analysis of the natural halves of a text.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HalfComparison {
    pub label: String,
    pub first: TextReport,
    pub second: TextReport,
    /// `10⁶·(c₂/n₂ − c₁/n₁)`, predicted positive.
    pub delta: Option<f64>,
    /// `10³·(c₁/r_min,1 − c₂/r_min,2)`, predicted positive.
    pub delta_tilde: Option<f64>,
    pub features: Vec<FeatureComparison>,
    pub diagnosis: TextDiagnosis,
}

fn compare_feature(
    feature: &'static str,
    group: FeatureGroup,
    starred: bool,
    expected: Option<Direction>,
    first: Option<f64>,
    second: Option<f64>,
) -> FeatureComparison {
    let direction = match (first, second) {
        (Some(a), Some(b)) if a > b => Direction::FirstLarger,
        (Some(a), Some(b)) if a < b => Direction::SecondLarger,
        (Some(_), Some(_)) => Direction::Equal,
        _ => Direction::Unavailable,
    };
    let matches_expected = match (expected, direction) {
        (_, Direction::Unavailable) | (None, _) => None,
        (Some(e), d) => Some(e == d),
    };
    FeatureComparison {
        feature: feature.to_string(),
        group,
        starred,
        first,
        second,
        direction,
        expected,
        matches_expected,
    }
}

fn feature_rows(first: &TextReport, second: &TextReport) -> Vec<FeatureComparison> {
    use Direction::{FirstLarger, SecondLarger};
    use FeatureGroup::{NoSignal, Structural, WordLevel};
    let count = |v: u64| Some(v as f64);
    let ratio = |c: Option<f64>, n: u64| c.map(|c| c / n as f64);
    let over_rmin = |c: Option<f64>, r: Option<u64>| match (c, r) {
        (Some(c), Some(r)) => Some(c / r as f64),
        _ => None,
    };
    vec![
        compare_feature(
            "min_rank",
            WordLevel,
            true,
            Some(SecondLarger),
            first.r_min.map(|r| r as f64),
            second.r_min.map(|r| r as f64),
        ),
        compare_feature(
            "max_law_frequency",
            WordLevel,
            false,
            Some(FirstLarger),
            over_rmin(first.prefactor, first.r_min),
            over_rmin(second.prefactor, second.r_min),
        ),
        compare_feature(
            "zipfian_spacing_distance",
            WordLevel,
            true,
            Some(SecondLarger),
            first.mu,
            second.mu,
        ),
        compare_feature(
            "distinct_words",
            WordLevel,
            false,
            Some(FirstLarger),
            count(first.distinct_count),
            count(second.distinct_count),
        ),
        compare_feature(
            "rare_words",
            WordLevel,
            true,
            Some(FirstLarger),
            count(first.hapax_count),
            count(second.hapax_count),
        ),
        compare_feature(
            "rare_word_ratio",
            WordLevel,
            true,
            Some(FirstLarger),
            Some(first.hapax_ratio),
            Some(second.hapax_ratio),
        ),
        compare_feature(
            "normalized_prefactor",
            WordLevel,
            true,
            Some(SecondLarger),
            ratio(first.prefactor, first.distinct_count),
            ratio(second.prefactor, second.distinct_count),
        ),
        compare_feature(
            "yule_k",
            WordLevel,
            false,
            Some(SecondLarger),
            first.yule_k,
            second.yule_k,
        ),
        compare_feature(
            "punct_count",
            Structural,
            false,
            Some(FirstLarger),
            count(first.punct_count),
            count(second.punct_count),
        ),
        compare_feature(
            "letter_count",
            Structural,
            false,
            Some(FirstLarger),
            count(first.letter_count),
            count(second.letter_count),
        ),
        compare_feature(
            "mean_word_length",
            Structural,
            false,
            Some(FirstLarger),
            Some(first.letter_count as f64 / first.token_count as f64),
            Some(second.letter_count as f64 / second.token_count as f64),
        ),
        compare_feature(
            "sentence_count",
            Structural,
            false,
            Some(FirstLarger),
            count(first.sentence_count),
            count(second.sentence_count),
        ),
        compare_feature(
            "mean_sentence_length",
            Structural,
            false,
            Some(SecondLarger),
            first.mean_sentence_len,
            second.mean_sentence_len,
        ),
        compare_feature(
            "sentence_dispersion",
            Structural,
            false,
            Some(SecondLarger),
            first.sentence_dispersion,
            second.sentence_dispersion,
        ),
        compare_feature(
            "sentence_entropy",
            Structural,
            false,
            Some(SecondLarger),
            first.sentence_entropy,
            second.sentence_entropy,
        ),
        compare_feature(
            "paragraph_count",
            Structural,
            false,
            Some(FirstLarger),
            count(first.paragraph_count),
            count(second.paragraph_count),
        ),
        compare_feature(
            "byte_size",
            Structural,
            false,
            Some(FirstLarger),
            count(first.byte_size),
            count(second.byte_size),
        ),
        compare_feature(
            "exponent",
            NoSignal,
            false,
            None,
            first.exponent,
            second.exponent,
        ),
        compare_feature(
            "max_rank",
            NoSignal,
            false,
            None,
            first.r_max.map(|r| r as f64),
            second.r_max.map(|r| r as f64),
        ),
    ]
}

/// Split a text at its midpoint and compare the halves feature by feature.
pub fn compare_halves(
    label: impl Into<String>,
    text: &TokenizedText,
    options: &AnalysisOptions,
) -> Result<HalfComparison> {
    let label = label.into();
    let split = split_halves(text, SplitMode::Natural)?;
    let first = analyze_text(format!("{label}/1"), &split.first, options)?;
    let second = analyze_text(format!("{label}/2"), &split.second, options)?;

    let half_fit = |report: &TextReport| -> Option<HalfFit> {
        Some(HalfFit {
            params: report.model_params()?,
            r_min: report.r_min? as usize,
        })
    };
    let asymmetry = match (half_fit(&first), half_fit(&second)) {
        (Some(a), Some(b)) => Some(half_asymmetry(&a, &b)),
        _ => None,
    };

    let features = feature_rows(&first, &second);
    let starred_all_match = features
        .iter()
        .filter(|f| f.starred)
        .all(|f| f.matches_expected == Some(true));
    let diagnosis = if starred_all_match {
        TextDiagnosis::TextLike
    } else {
        TextDiagnosis::Inconclusive
    };

    Ok(HalfComparison {
        label,
        first,
        second,
        delta: asymmetry.map(|a| a.delta),
        delta_tilde: asymmetry.map(|a| a.delta_tilde),
        features,
        diagnosis,
    })
}

/// One seeded random split: the lower range ends of the two halves.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitTrial {
    pub seed: u64,
    pub r_min_first: Option<u64>,
    pub r_min_second: Option<u64>,
    /// `r_min,1 − r_min,2` when both are available.
    pub diff: Option<i64>,
}

/// Summary of the random-split control.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomSplitSummary {
    pub label: String,
    pub trials: Vec<SplitTrial>,
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    pub unavailable: usize,
    /// Fraction of decided trials with positive sign (ties split evenly).
    pub sign_balance: Option<f64>,
    pub mean_abs_diff: Option<f64>,
    /// `|r_min,1 − r_min,2|` of the natural split, for contrast.
    pub natural_abs_diff: Option<u64>,
}

fn r_min_of(text: &TokenizedText, tie: TieBreak) -> Option<u64> {
    let table = build_rank_table(text, tie).ok()?;
    find_zipf_range(&table.frequencies())
        .ok()
        .map(|r| r.r_min as u64)
}

/// Re-split a text at random under each seed and track how the sign of
/// `r_min,1 − r_min,2` behaves; the natural split is reported alongside.
/// Needs at least 10 seeds.
pub fn random_split_control(
    label: impl Into<String>,
    text: &TokenizedText,
    seeds: &[u64],
    options: &AnalysisOptions,
) -> Result<RandomSplitSummary> {
    if seeds.len() < 10 {
        return Err(Error::TooFewSeeds {
            needed: 10,
            got: seeds.len(),
        });
    }
    let mut trials = Vec::with_capacity(seeds.len());
    let (mut positive, mut negative, mut zero, mut unavailable) = (0, 0, 0, 0);
    let mut abs_sum = 0u64;
    for &seed in seeds {
        let split = split_halves(text, SplitMode::Random { seed })?;
        let a = r_min_of(&split.first, options.tie_break);
        let b = r_min_of(&split.second, options.tie_break);
        let diff = match (a, b) {
            (Some(a), Some(b)) => Some(a as i64 - b as i64),
            _ => None,
        };
        match diff {
            Some(d) if d > 0 => positive += 1,
            Some(d) if d < 0 => negative += 1,
            Some(_) => zero += 1,
            None => unavailable += 1,
        }
        if let Some(d) = diff {
            abs_sum += d.unsigned_abs();
        }
        trials.push(SplitTrial {
            seed,
            r_min_first: a,
            r_min_second: b,
            diff,
        });
    }
    let decided = positive + negative + zero;
    let natural = split_halves(text, SplitMode::Natural)?;
    let natural_abs_diff = match (
        r_min_of(&natural.first, options.tie_break),
        r_min_of(&natural.second, options.tie_break),
    ) {
        (Some(a), Some(b)) => Some(a.abs_diff(b)),
        _ => None,
    };
    Ok(RandomSplitSummary {
        label: label.into(),
        trials,
        positive,
        negative,
        zero,
        unavailable,
        sign_balance: (decided > 0).then(|| (positive as f64 + zero as f64 / 2.0) / decided as f64),
        mean_abs_diff: (decided > 0).then(|| abs_sum as f64 / decided as f64),
        natural_abs_diff,
    })
}

/// A mixture of texts with the range-behaviour verdicts against its
/// components.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MixtureEntry {
    pub report: TextReport,
    pub components: Vec<String>,
    /// Range width of the mixture at least the widest component's.
    pub widens: Option<bool>,
    /// `r_max` of the mixture at least the largest component's.
    pub raises_ceiling: Option<bool>,
    /// `r_min` of the mixture at least the smallest component's (reported,
    /// not expected to always hold).
    pub raises_floor: Option<bool>,
}

/// Mixing experiment over a set of texts: every pair, plus the full mixture
/// when more than two texts are supplied.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MixingReport {
    pub components: Vec<TextReport>,
    pub pairs: Vec<MixtureEntry>,
    pub full: Option<MixtureEntry>,
}

fn range_triple(report: &TextReport) -> Option<(u64, u64, u64)> {
    match (report.r_min, report.r_max) {
        (Some(lo), Some(hi)) => Some((lo, hi, hi - lo)),
        _ => None,
    }
}

fn mixture_entry(
    label: String,
    components: Vec<String>,
    mixed: &TokenizedText,
    parts: &[&TextReport],
    options: &AnalysisOptions,
) -> Result<MixtureEntry> {
    let report = analyze_text(label, mixed, options)?;
    let own = range_triple(&report);
    let part_ranges: Option<Vec<(u64, u64, u64)>> =
        parts.iter().map(|p| range_triple(p)).collect();
    let (widens, raises_ceiling, raises_floor) = match (own, part_ranges) {
        (Some((lo, hi, width)), Some(ranges)) => {
            let min_floor = ranges.iter().map(|&(l, _, _)| l).min().unwrap_or(1);
            (
                Some(ranges.iter().all(|&(_, _, w)| width >= w)),
                Some(ranges.iter().all(|&(_, h, _)| hi >= h)),
                Some(lo >= min_floor),
            )
        }
        _ => (None, None, None),
    };
    Ok(MixtureEntry {
        report,
        components,
        widens,
        raises_ceiling,
        raises_floor,
    })
}

/// Run the mixing experiment. Needs at least two texts.
pub fn mixing_experiment(
    texts: &[(String, &TokenizedText)],
    options: &AnalysisOptions,
) -> Result<MixingReport> {
    if texts.len() < 2 {
        return Err(Error::TooFewTexts {
            needed: 2,
            got: texts.len(),
        });
    }
    let components: Vec<TextReport> = texts
        .iter()
        .map(|(label, text)| analyze_text(label.clone(), text, options))
        .collect::<Result<_>>()?;
    let mut pairs = Vec::new();
    for i in 0..texts.len() {
        for j in i + 1..texts.len() {
            let mixed = mix_texts(texts[i].1, texts[j].1);
            let label = format!("{}+{}", texts[i].0, texts[j].0);
            pairs.push(mixture_entry(
                label,
                vec![texts[i].0.clone(), texts[j].0.clone()],
                &mixed,
                &[&components[i], &components[j]],
                options,
            )?);
        }
    }
    let full = if texts.len() > 2 {
        let mut mixed = mix_texts(texts[0].1, texts[1].1);
        for (_, text) in &texts[2..] {
            mixed = mix_texts(&mixed, text);
        }
        let label = texts
            .iter()
            .map(|(l, _)| l.as_str())
            .collect::<Vec<_>>()
            .join("+");
        let part_refs: Vec<&TextReport> = components.iter().collect();
        Some(mixture_entry(
            label,
            texts.iter().map(|(l, _)| l.clone()).collect(),
            &mixed,
            &part_refs,
            options,
        )?)
    } else {
        None
    };
    Ok(MixingReport {
        components,
        pairs,
        full,
    })
}
