//! Seeded generators of synthetic token streams and documents.
//!
//! Used by the examples and the statistical test suites: streams sampled
//! i.i.d. from a rank-weight vector (power law, or the latent model's
//! `φ_r = c/r − c/n`, optionally with a flattened top emulating function
//! words), and plain-text documents with sentence/paragraph structure so the
//! whole ingestion pipeline can run without external files.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Walker alias table for O(1) sampling from a fixed discrete distribution.
pub struct AliasSampler {
    threshold: Vec<f64>,
    alias: Vec<usize>,
}

impl AliasSampler {
    /// Build the table from non-negative weights (not necessarily
    /// normalized). Panics on an empty or all-zero weight vector.
    pub fn new(weights: &[f64]) -> Self {
        assert!(!weights.is_empty(), "weights must be non-empty");
        let total: f64 = weights.iter().sum();
        assert!(total > 0.0, "weights must have positive mass");
        let n = weights.len();
        let mut scaled: Vec<f64> = weights.iter().map(|w| w * n as f64 / total).collect();
        let mut threshold = vec![0.0; n];
        let mut alias = vec![0usize; n];
        let mut small: Vec<usize> = Vec::new();
        let mut large: Vec<usize> = Vec::new();
        for (i, &s) in scaled.iter().enumerate() {
            if s < 1.0 {
                small.push(i);
            } else {
                large.push(i);
            }
        }
        while let (Some(&s), Some(&l)) = (small.last(), large.last()) {
            small.pop();
            threshold[s] = scaled[s];
            alias[s] = l;
            scaled[l] -= 1.0 - scaled[s];
            if scaled[l] < 1.0 {
                large.pop();
                small.push(l);
            }
        }
        for &i in small.iter().chain(large.iter()) {
            threshold[i] = 1.0;
            alias[i] = i;
        }
        Self { threshold, alias }
    }

    /// Draw one index.
    pub fn sample(&self, rng: &mut impl Rng) -> usize {
        let i = rng.gen_range(0..self.threshold.len());
        if rng.gen::<f64>() < self.threshold[i] {
            i
        } else {
            self.alias[i]
        }
    }
}

/// Pure power-law weights `r^(−γ)` for ranks `1..=n`.
pub fn zipf_weights(n: usize, gamma: f64) -> Vec<f64> {
    (1..=n).map(|r| (r as f64).powf(-gamma)).collect()
}

/// Latent-model weights `φ_r = c/r − c/n` for ranks `1..=n`. The last entry
/// is zero, so rank `n` never occurs in a sample.
pub fn latent_weights(n: usize, c: f64) -> Vec<f64> {
    (1..=n)
        .map(|r| c / r as f64 - c / n as f64)
        .collect()
}

/// Slope of the softened region left of the cap in [`flatten_top`]; shallow
/// but strictly decreasing so counts stay distinct at the top.
const FLATTENED_SLOPE: f64 = 0.15;

/// Soften the top of a weight vector: ranks below `cap_rank` decay with a
/// shallow slope from the cap weight instead of following the law. This
/// emulates the high-frequency region of real texts, where the most frequent
/// words fall below the law and the fitted range only starts near
/// `cap_rank`.
pub fn flatten_top(mut weights: Vec<f64>, cap_rank: usize) -> Vec<f64> {
    if cap_rank >= 1 && cap_rank <= weights.len() {
        let cap = weights[cap_rank - 1];
        for (i, w) in weights[..cap_rank - 1].iter_mut().enumerate() {
            *w = cap * (cap_rank as f64 / (i + 1) as f64).powf(FLATTENED_SLOPE);
        }
    }
    weights
}

const SYLLABLES: [&str; 20] = [
    "ba", "re", "ki", "mo", "tu", "la", "pe", "so", "ni", "da", "ve", "ru", "ta", "li", "go",
    "fe", "nu", "sa", "mi", "ho",
];

/// Deterministic pronounceable pseudo-word for a vocabulary index; distinct
/// indices give distinct words of at least two syllables.
pub fn pseudo_word(index: usize) -> String {
    let mut value = index + SYLLABLES.len(); // force >= 2 syllables
    let mut word = String::new();
    while value > 0 {
        word.insert_str(0, SYLLABLES[value % SYLLABLES.len()]);
        value /= SYLLABLES.len();
    }
    word
}

/// Sample per-rank occurrence counts for `tokens` i.i.d. draws from the
/// weight vector. `counts[r - 1]` is the number of times rank `r` occurred.
pub fn sample_counts(weights: &[f64], tokens: usize, seed: u64) -> Vec<u64> {
    let sampler = AliasSampler::new(weights);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = vec![0u64; weights.len()];
    for _ in 0..tokens {
        counts[sampler.sample(&mut rng)] += 1;
    }
    counts
}

/// Deterministic per-rank counts: each weight rounded to its expected share
/// of `tokens`, with the top rank absorbing the rounding remainder so the
/// total is exact. The resulting spectrum follows the weight curve with no
/// sampling noise, the way real texts hug their rank-frequency law.
pub fn expected_counts(weights: &[f64], tokens: usize) -> Vec<u64> {
    let total: f64 = weights.iter().sum();
    let mut counts: Vec<u64> = weights
        .iter()
        .map(|w| (w / total * tokens as f64).round() as u64)
        .collect();
    let assigned: u64 = counts.iter().sum();
    let target = tokens as u64;
    if assigned < target {
        counts[0] += target - assigned;
    } else {
        let mut overflow = assigned - target;
        for c in counts.iter_mut() {
            let take = overflow.min(c.saturating_sub(1));
            *c -= take;
            overflow -= take;
            if overflow == 0 {
                break;
            }
        }
    }
    counts
}

/// Sample a token stream of pseudo-words from the weight vector.
pub fn generate_tokens(weights: &[f64], tokens: usize, seed: u64) -> Vec<String> {
    let sampler = AliasSampler::new(weights);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..tokens)
        .map(|_| pseudo_word(sampler.sample(&mut rng)))
        .collect()
}

/// Token stream with expected per-rank counts at seeded positions: the
/// word-level analogue of [`generate_document`] in expected-count mode.
pub fn expected_tokens(weights: &[f64], tokens: usize, seed: u64) -> Vec<String> {
    let counts = expected_counts(weights, tokens);
    let mut stream: Vec<String> = counts
        .iter()
        .enumerate()
        .flat_map(|(rank, &c)| std::iter::repeat_with(move || pseudo_word(rank)).take(c as usize))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in (1..stream.len()).rev() {
        let j = rng.gen_range(0..=i);
        stream.swap(i, j);
    }
    stream
}

/// How a document's word counts are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    /// I.i.d. draws from the weight vector (multinomial noise included).
    Sampled,
    /// Expected counts, shuffled over positions; the spectrum follows the
    /// law the way real texts do.
    Expected,
}

/// Parameters of a generated plain-text document.
#[derive(Debug, Clone)]
pub struct DocumentSpec {
    /// Vocabulary size `n` of the sampling distribution.
    pub vocabulary: usize,
    /// Prefactor `c` of the latent weights.
    pub prefactor: f64,
    /// Flatten weights above this rank (None: pure latent weights). Real
    /// texts deviate below the law at the top ranks; the cap emulates that
    /// and pushes the detected `r_min` up.
    pub flatten_top: Option<usize>,
    /// Token count of the document.
    pub tokens: usize,
    pub seed: u64,
    /// First vocabulary index; lets several documents use disjoint words.
    pub word_offset: usize,
    pub count_mode: CountMode,
}

impl Default for DocumentSpec {
    fn default() -> Self {
        Self {
            vocabulary: 2500,
            prefactor: 0.14,
            flatten_top: Some(6),
            tokens: 20_000,
            seed: 1,
            word_offset: 0,
            count_mode: CountMode::Expected,
        }
    }
}

fn rank_stream(spec: &DocumentSpec, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut weights = latent_weights(spec.vocabulary, spec.prefactor);
    if let Some(cap) = spec.flatten_top {
        weights = flatten_top(weights, cap);
    }
    match spec.count_mode {
        CountMode::Sampled => {
            let sampler = AliasSampler::new(&weights);
            (0..spec.tokens).map(|_| sampler.sample(rng)).collect()
        }
        CountMode::Expected => {
            let counts = expected_counts(&weights, spec.tokens);
            let mut stream: Vec<usize> = counts
                .iter()
                .enumerate()
                .flat_map(|(rank, &c)| std::iter::repeat_n(rank, c as usize))
                .collect();
            // Fisher-Yates over positions
            for i in (1..stream.len()).rev() {
                let j = rng.gen_range(0..=i);
                stream.swap(i, j);
            }
            stream
        }
    }
}

/// Generate a document with sentences, commas, and paragraphs whose word
/// stream follows the spec's weight vector. Deterministic in the seed.
pub fn generate_document(spec: &DocumentSpec) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let ranks = rank_stream(spec, &mut rng);
    let mut out = String::new();
    let mut next = ranks.into_iter();
    let mut emitted = 0usize;
    let mut sentences_in_paragraph = 0usize;
    let mut paragraph_budget = rng.gen_range(3..=7);
    while emitted < spec.tokens {
        let sentence_len = rng.gen_range(4..=16).min(spec.tokens - emitted);
        let comma_at = if sentence_len >= 8 {
            Some(rng.gen_range(3..sentence_len - 2))
        } else {
            None
        };
        for i in 0..sentence_len {
            let word = pseudo_word(spec.word_offset + next.next().expect("stream length"));
            if i == 0 {
                let mut chars = word.chars();
                let head = chars.next().unwrap().to_uppercase().to_string();
                out.push_str(&head);
                out.push_str(chars.as_str());
            } else {
                out.push(' ');
                out.push_str(&word);
            }
            if comma_at == Some(i) {
                out.push(',');
            }
        }
        emitted += sentence_len;
        out.push_str(match rng.gen_range(0..10) {
            0 => "?",
            1 => "!",
            _ => ".",
        });
        sentences_in_paragraph += 1;
        if sentences_in_paragraph >= paragraph_budget {
            out.push_str("\n\n");
            sentences_in_paragraph = 0;
            paragraph_budget = rng.gen_range(3..=7);
        } else {
            out.push(' ');
        }
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alias_sampler_matches_weights() {
        let weights = [0.5, 0.25, 0.125, 0.125];
        let sampler = AliasSampler::new(&weights);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut counts = [0u64; 4];
        let draws = 200_000;
        for _ in 0..draws {
            counts[sampler.sample(&mut rng)] += 1;
        }
        for (i, &w) in weights.iter().enumerate() {
            let observed = counts[i] as f64 / draws as f64;
            assert!(
                (observed - w).abs() < 0.01,
                "index {i}: observed {observed}, want {w}"
            );
        }
    }

    #[test]
    fn pseudo_words_are_distinct_and_alphabetic() {
        let mut seen = std::collections::HashSet::new();
        for i in 0..5000 {
            let w = pseudo_word(i);
            assert!(w.chars().all(|c| c.is_ascii_lowercase()));
            assert!(w.len() >= 4);
            assert!(seen.insert(w), "collision at {i}");
        }
    }

    #[test]
    fn sampling_is_seed_deterministic() {
        let weights = zipf_weights(100, 1.0);
        assert_eq!(
            sample_counts(&weights, 5000, 42),
            sample_counts(&weights, 5000, 42)
        );
        assert_ne!(
            sample_counts(&weights, 5000, 42),
            sample_counts(&weights, 5000, 43)
        );
    }

    #[test]
    fn flatten_top_softens_leading_weights() {
        let w = flatten_top(zipf_weights(10, 1.0), 4);
        // still decreasing, but far flatter than 1/r above the cap
        assert!(w[0] > w[1] && w[1] > w[2] && w[2] > w[3]);
        assert!(w[0] < 0.5, "cap should pull rank 1 well below 1.0");
        assert_eq!(w[3], 0.25);
        assert!((w[0] - 0.25 * 4f64.powf(0.15)).abs() < 1e-12);
        assert!(w[4] < 0.25);
    }

    #[test]
    fn generated_document_tokenizes_to_requested_length() {
        use crate::corpus::{tokenize, TokenizerConfig};
        let spec = DocumentSpec {
            tokens: 500,
            ..Default::default()
        };
        let doc = generate_document(&spec);
        let t = tokenize(&doc, &TokenizerConfig::default());
        assert_eq!(t.token_count(), 500);
        assert!(t.sentence_count() > 20);
        assert!(t.paragraph_count() > 2);
        assert!(t.punct_count() >= t.sentence_count() as u64);
        // deterministic
        assert_eq!(doc, generate_document(&spec));
    }
}
