//! Sentence-length distribution and its summary statistics: mean length,
//! dispersion, and entropy (natural log).

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Empirical distribution `κ_α` of sentence lengths (in words).
#[derive(Debug, Clone)]
pub struct SentenceLengthDistribution {
    kappa: BTreeMap<usize, f64>,
    sentence_count: usize,
    /// Mean length `ᾱ = Σ κ_α·α`.
    pub mean: f64,
    /// Dispersion `Σ κ_α·(α − ᾱ)²`.
    pub dispersion: f64,
    /// Entropy `−Σ κ_α·ln κ_α`; zero exactly when all sentences share one
    /// length.
    pub entropy: f64,
}

impl SentenceLengthDistribution {
    /// Fraction of sentences with length `alpha`.
    pub fn kappa(&self, alpha: usize) -> f64 {
        self.kappa.get(&alpha).copied().unwrap_or(0.0)
    }

    /// `(α, κ_α)` pairs in increasing length.
    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.kappa.iter().map(|(&a, &k)| (a, k))
    }

    pub fn sentence_count(&self) -> usize {
        self.sentence_count
    }

    pub fn distinct_lengths(&self) -> usize {
        self.kappa.len()
    }
}

/// Compute the length distribution of a list of per-sentence word counts.
/// Zero-length entries are dropped; an effectively empty list is an error.
pub fn sentence_stats(lengths: &[usize]) -> Result<SentenceLengthDistribution> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    let mut total = 0usize;
    for &len in lengths {
        if len == 0 {
            continue;
        }
        *counts.entry(len).or_insert(0) += 1;
        total += 1;
    }
    if total == 0 {
        return Err(Error::NoSentences);
    }
    let kappa: BTreeMap<usize, f64> = counts
        .into_iter()
        .map(|(len, count)| (len, count as f64 / total as f64))
        .collect();
    let mean: f64 = kappa.iter().map(|(&a, &k)| k * a as f64).sum();
    let dispersion: f64 = kappa
        .iter()
        .map(|(&a, &k)| k * (a as f64 - mean) * (a as f64 - mean))
        .sum();
    let entropy: f64 = kappa.values().map(|&k| -k * k.ln()).sum();
    Ok(SentenceLengthDistribution {
        kappa,
        sentence_count: total,
        mean,
        dispersion,
        entropy,
    })
}
