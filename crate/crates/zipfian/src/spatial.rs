//! Spatial distribution of words along the text: average periods,
//! space-frequencies, and the variational distance between ordinary and
//! spatial frequencies over the Zipfian range.
//!
//! For a word occurring at 1-based positions `p_1 < … < p_ℓ` (ℓ ≥ 2), the
//! average period is `t(w) = (1/(ℓ−1))·Σ (ζ_i + 1)` where `ζ_i` counts the
//! tokens strictly between consecutive occurrences; the space-frequency is
//! `g(w) = 1/t(w)`. A word spread homogeneously has `g(w) ≈ f(w)`.

use std::collections::HashMap;

use crate::corpus::TokenizedText;
use crate::error::{Error, Result};
use crate::fit::ZipfRange;
use crate::ranks::RankTable;

/// Spacing statistics of one word with at least two occurrences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WordSpacing {
    /// Number of occurrences `ℓ`.
    pub occurrences: usize,
    /// Average period `t(w)` in tokens; at least 1.
    pub mean_period: f64,
    /// Space-frequency `g(w) = 1/t(w)`; at most 1.
    pub space_frequency: f64,
}

/// Per-word spacing statistics of a text. Words occurring once have no
/// period and are tallied separately.
#[derive(Debug, Clone)]
pub struct SpatialProfile {
    spacings: HashMap<String, WordSpacing>,
    singleton_count: usize,
}

impl SpatialProfile {
    pub fn spacing(&self, word: &str) -> Option<&WordSpacing> {
        self.spacings.get(word)
    }

    /// Number of words with a defined period (ℓ ≥ 2).
    pub fn len(&self) -> usize {
        self.spacings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spacings.is_empty()
    }

    /// Words excluded because they occur exactly once.
    pub fn singleton_count(&self) -> usize {
        self.singleton_count
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &WordSpacing)> {
        self.spacings.iter().map(|(w, s)| (w.as_str(), s))
    }
}

/// Compute spacing statistics for every word of the text.
pub fn space_frequency_profile(text: &TokenizedText) -> Result<SpatialProfile> {
    if text.token_count() == 0 {
        return Err(Error::EmptyText);
    }
    let mut positions: HashMap<&str, (usize, usize, usize)> = HashMap::new(); // first, last, count
    for (index, word) in text.words().enumerate() {
        let position = index + 1;
        positions
            .entry(word)
            .and_modify(|(_, last, count)| {
                *last = position;
                *count += 1;
            })
            .or_insert((position, position, 1));
    }
    let mut spacings = HashMap::new();
    let mut singleton_count = 0;
    for (word, (first, last, count)) in positions {
        if count < 2 {
            singleton_count += 1;
            continue;
        }
        // Consecutive gaps telescope: the mean of (ζ_i + 1) is the position
        // span divided by the number of gaps.
        let mean_period = (last - first) as f64 / (count - 1) as f64;
        spacings.insert(
            word.to_owned(),
            WordSpacing {
                occurrences: count,
                mean_period,
                space_frequency: 1.0 / mean_period,
            },
        );
    }
    Ok(SpatialProfile {
        spacings,
        singleton_count,
    })
}

/// Variational distance `μ = Σ |f̃(w_r) − g̃(w_r)|` over ranks
/// `[lo, hi]`, with both frequency vectors renormalized on that window.
/// No 1/2 factor is applied, so `0 ≤ μ ≤ 2`.
pub fn variational_mu(
    table: &RankTable,
    profile: &SpatialProfile,
    lo: usize,
    hi: usize,
) -> Result<f64> {
    debug_assert!(lo >= 1 && lo <= hi && hi <= table.distinct_count());
    let mut ordinary = Vec::with_capacity(hi - lo + 1);
    let mut spatial = Vec::with_capacity(hi - lo + 1);
    for rank in lo..=hi {
        let entry = table.entry(rank).expect("rank within table");
        let spacing = profile
            .spacing(&entry.word)
            .ok_or_else(|| Error::UndefinedPeriod {
                word: entry.word.clone(),
            })?;
        ordinary.push(table.frequency(rank).expect("rank within table"));
        spatial.push(spacing.space_frequency);
    }
    let f_total: f64 = ordinary.iter().sum();
    let g_total: f64 = spatial.iter().sum();
    Ok(ordinary
        .iter()
        .zip(&spatial)
        .map(|(f, g)| (f / f_total - g / g_total).abs())
        .sum())
}

/// Variational distance over the detected Zipfian range (the production
/// statistic). Restricting the window to `[r_min, r_max]` matters: the sign
/// structure across half-texts washes out when the window is widened, so the
/// wide variant [`variational_mu`] with `lo = 1` is a diagnostic only.
pub fn zipfian_mu(table: &RankTable, profile: &SpatialProfile, range: &ZipfRange) -> Result<f64> {
    variational_mu(table, profile, range.r_min, range.r_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{tokenize, TokenizerConfig};
    use crate::fit::FitResult;
    use crate::ranks::{build_rank_table, TieBreak};
    use proptest::prelude::*;

    fn profile_of(text: &str) -> SpatialProfile {
        let t = tokenize(text, &TokenizerConfig::default());
        space_frequency_profile(&t).unwrap()
    }

    #[test]
    fn perfectly_periodic_word() {
        let p = profile_of("a b a b a b");
        let a = p.spacing("a").unwrap();
        assert_eq!(a.occurrences, 3);
        assert!((a.mean_period - 2.0).abs() < 1e-15);
        assert!((a.space_frequency - 0.5).abs() < 1e-15);
    }

    #[test]
    fn gap_sum_hand_example() {
        // a at positions 1, 3, 6: periods 2 and 3, mean 2.5.
        let p = profile_of("a x a y y a");
        let a = p.spacing("a").unwrap();
        assert!((a.mean_period - 2.5).abs() < 1e-15);
        assert!((a.space_frequency - 0.4).abs() < 1e-15);
    }

    #[test]
    fn word_at_every_position_has_unit_period() {
        let p = profile_of("w w w w");
        let w = p.spacing("w").unwrap();
        assert_eq!(w.mean_period, 1.0);
        assert_eq!(w.space_frequency, 1.0);
    }

    #[test]
    fn singletons_are_excluded_but_counted() {
        let p = profile_of("a b a c");
        assert!(p.spacing("a").is_some());
        assert!(p.spacing("b").is_none());
        assert_eq!(p.singleton_count(), 2);
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn empty_text_is_an_error() {
        let t = tokenize("", &TokenizerConfig::default());
        assert!(space_frequency_profile(&t).is_err());
    }

    fn dummy_range(r_min: usize, r_max: usize) -> ZipfRange {
        ZipfRange {
            r_min,
            r_max,
            fit: FitResult {
                prefactor: 0.3,
                exponent: 1.0,
                s_err: 0.0,
                r_squared: 1.0,
            },
            deviation: 0.0,
        }
    }

    #[test]
    fn mu_is_zero_when_spatial_matches_ordinary() {
        // Perfectly alternating words: g == f for both.
        let t = tokenize("a b a b a b a b", &TokenizerConfig::default());
        let rt = build_rank_table(&t, TieBreak::FirstOccurrence).unwrap();
        let p = space_frequency_profile(&t).unwrap();
        let mu = zipfian_mu(&rt, &p, &dummy_range(1, 2)).unwrap();
        assert!(mu.abs() < 1e-12, "mu = {mu}");
    }

    #[test]
    fn mu_two_word_hand_example() {
        // "a b x a b x a": counts a=3, b=2, so over the window [1, 2] the
        // normalized ordinary frequencies are f̃ = (0.6, 0.4); both words
        // have constant period 3, so g̃ = (0.5, 0.5) and μ = 0.2.
        let t = tokenize("a b x a b x a", &TokenizerConfig::default());
        let rt = build_rank_table(&t, TieBreak::FirstOccurrence).unwrap();
        let p = space_frequency_profile(&t).unwrap();
        assert_eq!(rt.entry(1).unwrap().word, "a");
        assert_eq!(rt.entry(2).unwrap().word, "b");
        let mu = zipfian_mu(&rt, &p, &dummy_range(1, 2)).unwrap();
        assert!((mu - 0.2).abs() < 1e-12, "mu = {mu}");
    }

    #[test]
    fn mu_errors_on_singleton_in_range() {
        let t = tokenize("a a b c a", &TokenizerConfig::default());
        let rt = build_rank_table(&t, TieBreak::FirstOccurrence).unwrap();
        let p = space_frequency_profile(&t).unwrap();
        assert!(matches!(
            zipfian_mu(&rt, &p, &dummy_range(1, 2)),
            Err(Error::UndefinedPeriod { .. })
        ));
    }

    proptest! {
        #[test]
        fn mu_respects_variational_bounds(words in prop::collection::vec("[a-d]{1}", 8..200)) {
            let joined = words.join(" ");
            let t = tokenize(&joined, &TokenizerConfig::default());
            let rt = build_rank_table(&t, TieBreak::FirstOccurrence).unwrap();
            let p = space_frequency_profile(&t).unwrap();
            // restrict to ranks whose words all repeat
            let hi = rt
                .entries()
                .iter()
                .take_while(|e| e.count >= 2)
                .count();
            if hi >= 2 {
                let mu = variational_mu(&rt, &p, 1, hi).unwrap();
                prop_assert!((0.0..=2.0 + 1e-12).contains(&mu));
            }
        }

        #[test]
        fn constant_period_word_recovers_period_exactly(period in 2usize..9, repeats in 3usize..20) {
            // One word every `period` positions in an otherwise distinct stream.
            let mut tokens: Vec<String> = Vec::new();
            let mut filler = 0usize;
            for _ in 0..repeats {
                tokens.push("mark".into());
                for _ in 0..period - 1 {
                    tokens.push(format!("f{filler}"));
                    filler += 1;
                }
            }
            tokens.push("mark".into());
            let t = tokenize(&tokens.join(" "), &TokenizerConfig::default());
            let p = space_frequency_profile(&t).unwrap();
            let m = p.spacing("mark").unwrap();
            prop_assert!((m.mean_period - period as f64).abs() < 1e-12);
        }
    }
}
