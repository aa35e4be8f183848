//! Rank-frequency tables, the occupancy spectrum, and the lexical repetition
//! measures built on them (rare-word counts, Yule's constant, occupancy
//! entropy).

use std::collections::{BTreeMap, HashMap};

use crate::corpus::TokenizedText;
use crate::error::{Error, Result};

/// Deterministic ordering for words with equal counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Ties keep the order of first appearance in the text.
    #[default]
    FirstOccurrence,
    /// Ties are ordered alphabetically.
    Alphabetical,
}

/// One row of a rank table: a word and its occurrence count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankEntry {
    pub word: String,
    pub count: u64,
}

/// Words ordered by decreasing frequency, ranks starting at 1.
#[derive(Debug, Clone)]
pub struct RankTable {
    entries: Vec<RankEntry>,
    token_count: u64,
}

impl RankTable {
    /// Build a table from `(word, count)` pairs. Ties keep iteration order.
    pub fn from_counts(pairs: impl IntoIterator<Item = (String, u64)>) -> Result<Self> {
        let entries: Vec<RankEntry> = pairs
            .into_iter()
            .filter(|(_, count)| *count > 0)
            .map(|(word, count)| RankEntry { word, count })
            .collect();
        if entries.is_empty() {
            return Err(Error::EmptyText);
        }
        let token_count = entries.iter().map(|e| e.count).sum();
        let mut table = Self {
            entries,
            token_count,
        };
        table.entries.sort_by_key(|e| std::cmp::Reverse(e.count)); // stable
        Ok(table)
    }

    /// Number of distinct words `n`.
    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    /// Total number of tokens `N`.
    pub fn token_count(&self) -> u64 {
        self.token_count
    }

    pub fn entries(&self) -> &[RankEntry] {
        &self.entries
    }

    /// Entry at 1-based `rank`.
    pub fn entry(&self, rank: usize) -> Option<&RankEntry> {
        self.entries.get(rank.checked_sub(1)?)
    }

    /// Relative frequency `f_r = count / N` at 1-based `rank`.
    pub fn frequency(&self, rank: usize) -> Option<f64> {
        self.entry(rank)
            .map(|e| e.count as f64 / self.token_count as f64)
    }

    /// All frequencies in rank order; non-increasing and summing to one.
    pub fn frequencies(&self) -> Vec<f64> {
        let n = self.token_count as f64;
        self.entries.iter().map(|e| e.count as f64 / n).collect()
    }
}

/// Build the rank table of a text. Empty texts are an error.
pub fn build_rank_table(text: &TokenizedText, tie: TieBreak) -> Result<RankTable> {
    if text.token_count() == 0 {
        return Err(Error::EmptyText);
    }
    let mut counts: HashMap<&str, (u64, usize)> = HashMap::new();
    for (position, word) in text.words().enumerate() {
        let slot = counts.entry(word).or_insert((0, position));
        slot.0 += 1;
    }
    let mut rows: Vec<(&str, u64, usize)> = counts
        .into_iter()
        .map(|(word, (count, first))| (word, count, first))
        .collect();
    match tie {
        TieBreak::FirstOccurrence => {
            rows.sort_by_key(|&(_, count, first)| (std::cmp::Reverse(count), first))
        }
        TieBreak::Alphabetical => {
            rows.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)))
        }
    }
    Ok(RankTable {
        token_count: text.token_count() as u64,
        entries: rows
            .into_iter()
            .map(|(word, count, _)| RankEntry {
                word: word.to_owned(),
                count,
            })
            .collect(),
    })
}

/// `V_m`: how many distinct words occur exactly `m` times. Stored sparsely;
/// the identities `Σ V_m = n` and `Σ m·V_m = N` hold exactly in integers.
#[derive(Debug, Clone)]
pub struct OccupancySpectrum {
    occupancy: BTreeMap<u64, u64>,
    distinct_count: u64,
    token_count: u64,
}

impl OccupancySpectrum {
    /// Number of words appearing exactly `m` times.
    pub fn v(&self, m: u64) -> u64 {
        self.occupancy.get(&m).copied().unwrap_or(0)
    }

    /// Occurrence count of the most frequent word (`f_1 · N`).
    pub fn max_count(&self) -> u64 {
        self.occupancy.keys().next_back().copied().unwrap_or(0)
    }

    /// `(m, V_m)` pairs with `V_m > 0`, in increasing `m`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.occupancy.iter().map(|(&m, &v)| (m, v))
    }

    pub fn distinct_count(&self) -> u64 {
        self.distinct_count
    }

    pub fn token_count(&self) -> u64 {
        self.token_count
    }
}

/// Group a rank table into its occupancy spectrum.
pub fn occupancy_spectrum(table: &RankTable) -> OccupancySpectrum {
    let mut occupancy: BTreeMap<u64, u64> = BTreeMap::new();
    for entry in table.entries() {
        *occupancy.entry(entry.count).or_insert(0) += 1;
    }
    OccupancySpectrum {
        occupancy,
        distinct_count: table.distinct_count() as u64,
        token_count: table.token_count(),
    }
}

/// Count words occurring at most `threshold` times (rare words), together
/// with their fraction of the vocabulary. The conventional threshold is 3.
pub fn hapax_count(table: &RankTable, threshold: u64) -> (u64, f64) {
    let h = table
        .entries()
        .iter()
        .filter(|e| e.count <= threshold)
        .count() as u64;
    (h, h as f64 / table.distinct_count() as f64)
}

/// Yule's constant `K = 100·(−1/N + Σ_m V_m·m²/N²)`, a repetition measure.
/// Zero when every word occurs once.
pub fn yule_k(table: &RankTable) -> Result<f64> {
    let n_tokens = table.token_count();
    if n_tokens < 2 {
        return Err(Error::TooFewTokens {
            needed: 2,
            got: n_tokens as usize,
        });
    }
    let n = n_tokens as f64;
    let sum_sq: f64 = table
        .entries()
        .iter()
        .map(|e| (e.count as f64) * (e.count as f64))
        .sum();
    Ok(100.0 * (sum_sq / (n * n) - 1.0 / n))
}

/// Entropy of the occupancy distribution `−Σ_m (V_m/n)·ln(V_m/n)`; zero
/// exactly when all words share one occurrence count.
pub fn occupancy_entropy(spectrum: &OccupancySpectrum) -> f64 {
    let n = spectrum.distinct_count() as f64;
    spectrum
        .iter()
        .map(|(_, v)| {
            let p = v as f64 / n;
            -p * p.ln()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{tokenize, TokenizerConfig};
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn table(text: &str) -> RankTable {
        let t = tokenize(text, &TokenizerConfig::default());
        build_rank_table(&t, TieBreak::FirstOccurrence).unwrap()
    }

    #[test]
    fn two_word_text() {
        let rt = table("a a b");
        assert_eq!(rt.distinct_count(), 2);
        assert_eq!(rt.token_count(), 3);
        assert_eq!(rt.entry(1).unwrap().word, "a");
        assert_eq!(rt.entry(1).unwrap().count, 2);
        assert!((rt.frequency(1).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert!((rt.frequency(2).unwrap() - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn ties_break_by_first_occurrence() {
        let rt = table("b a");
        assert_eq!(rt.entry(1).unwrap().word, "b");
        assert_eq!(rt.entry(2).unwrap().word, "a");
    }

    #[test]
    fn ties_break_alphabetically_when_asked() {
        let t = tokenize("b a", &TokenizerConfig::default());
        let rt = build_rank_table(&t, TieBreak::Alphabetical).unwrap();
        assert_eq!(rt.entry(1).unwrap().word, "a");
    }

    #[test]
    fn empty_text_is_an_error() {
        let t = tokenize("", &TokenizerConfig::default());
        assert!(build_rank_table(&t, TieBreak::FirstOccurrence).is_err());
    }

    #[test]
    fn spectrum_hand_example() {
        let rt = table("a a b");
        let os = occupancy_spectrum(&rt);
        assert_eq!(os.v(1), 1);
        assert_eq!(os.v(2), 1);
        assert_eq!(os.v(3), 0);
        assert_eq!(os.max_count(), 2);
        assert_eq!(os.distinct_count(), 2);
        assert_eq!(os.token_count(), 3);
    }

    #[test]
    fn all_distinct_spectrum() {
        let rt = table("q w e r t y");
        let os = occupancy_spectrum(&rt);
        assert_eq!(os.v(1), 6);
        assert_eq!(os.iter().count(), 1);
    }

    #[test]
    fn hapax_hand_example() {
        let rt = table("a a a a b b c");
        let (h, ratio) = hapax_count(&rt, 3);
        assert_eq!(h, 2);
        assert!((ratio - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn hapax_zero_when_everything_is_frequent() {
        let rt = table("a a a a b b b b");
        assert_eq!(hapax_count(&rt, 3).0, 0);
    }

    #[test]
    fn yule_hand_example() {
        // V_1 = V_2 = 1 over N = 3 tokens: K = 100·(−1/3 + 5/9) = 200/9.
        let rt = table("a a b");
        assert!((yule_k(&rt).unwrap() - 200.0 / 9.0).abs() < 1e-9);
    }

    #[test]
    fn yule_zero_for_all_distinct() {
        let rt = table("a b c d e");
        assert!(yule_k(&rt).unwrap().abs() < 1e-12);
    }

    #[test]
    fn yule_needs_two_tokens() {
        assert!(yule_k(&table("a")).is_err());
    }

    #[test]
    fn occupancy_entropy_hand_examples() {
        let rt = table("q w e r t y");
        assert_eq!(occupancy_entropy(&occupancy_spectrum(&rt)), 0.0);

        let rt = table("a a b");
        let e = occupancy_entropy(&occupancy_spectrum(&rt));
        assert!((e - 2f64.ln()).abs() < 1e-12);

        let rt = table("a a a b b c");
        let e = occupancy_entropy(&occupancy_spectrum(&rt));
        assert!((e - 3f64.ln()).abs() < 1e-12);
    }

    prop_compose! {
        fn word_stream()(words in prop::collection::vec("[a-e]{1,3}", 1..400)) -> Vec<String> {
            words
        }
    }

    proptest! {
        #[test]
        fn frequencies_match_brute_force_recount(words in word_stream()) {
            let text = tokenize(&words.join(" "), &TokenizerConfig::default());
            let rt = build_rank_table(&text, TieBreak::FirstOccurrence).unwrap();
            let mut oracle: BTreeMap<&str, u64> = BTreeMap::new();
            for w in &words {
                *oracle.entry(w.as_str()).or_insert(0) += 1;
            }
            prop_assert_eq!(rt.distinct_count(), oracle.len());
            for entry in rt.entries() {
                prop_assert_eq!(oracle[entry.word.as_str()], entry.count);
            }
            // non-increasing, gap-free ranks, frequencies sum to one
            let freqs = rt.frequencies();
            for pair in freqs.windows(2) {
                prop_assert!(pair[0] >= pair[1]);
            }
            prop_assert!((freqs.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }

        #[test]
        fn occupancy_identities_hold_exactly(words in word_stream()) {
            let text = tokenize(&words.join(" "), &TokenizerConfig::default());
            let rt = build_rank_table(&text, TieBreak::FirstOccurrence).unwrap();
            let os = occupancy_spectrum(&rt);
            let v_sum: u64 = os.iter().map(|(_, v)| v).sum();
            let mv_sum: u64 = os.iter().map(|(m, v)| m * v).sum();
            prop_assert_eq!(v_sum, rt.distinct_count() as u64);
            prop_assert_eq!(mv_sum, rt.token_count());
        }

        #[test]
        fn yule_is_permutation_invariant(words in word_stream(), seed in 0u64..100) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            if words.len() < 2 {
                return Ok(());
            }
            let text = tokenize(&words.join(" "), &TokenizerConfig::default());
            let k = yule_k(&build_rank_table(&text, TieBreak::FirstOccurrence).unwrap()).unwrap();
            let mut shuffled = words.clone();
            shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let text2 = tokenize(&shuffled.join(" "), &TokenizerConfig::default());
            let k2 = yule_k(&build_rank_table(&text2, TieBreak::FirstOccurrence).unwrap()).unwrap();
            prop_assert_eq!(k, k2);
        }

        #[test]
        fn hapax_is_monotone_in_threshold(words in word_stream()) {
            let text = tokenize(&words.join(" "), &TokenizerConfig::default());
            let rt = build_rank_table(&text, TieBreak::FirstOccurrence).unwrap();
            let mut last = 0;
            for threshold in 1..=8 {
                let (h, ratio) = hapax_count(&rt, threshold);
                prop_assert!(h >= last);
                prop_assert!((0.0..=1.0).contains(&ratio));
                last = h;
            }
        }
    }
}
