//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the analysis pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// Input bytes are not valid UTF-8.
    #[error("input is not valid UTF-8: {0}")]
    Encoding(#[from] std::str::Utf8Error),

    /// An operation that needs at least one token was given an empty text.
    #[error("text contains no tokens")]
    EmptyText,

    /// A text is too small for the requested operation.
    #[error("text has {got} tokens but the operation needs at least {needed}")]
    TooFewTokens { needed: usize, got: usize },

    /// Fewer data points than a fit requires.
    #[error("fit needs at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    /// A rank or frequency fed to the fitter was zero or negative.
    #[error("ranks and frequencies must be strictly positive")]
    NonPositiveData,

    /// Frequencies handed to the range detector must be sorted non-increasing.
    #[error("frequencies must be sorted in non-increasing order")]
    UnsortedFrequencies,

    /// All abscissas coincide; the slope is undefined.
    #[error("degenerate fit: no variance in ln(rank)")]
    DegenerateFit,

    /// No frequency plateau large enough to pin the upper end of the range.
    #[error("no frequency is shared by {limit} or more words; text too small for range detection")]
    NoRankCeiling { limit: usize },

    /// No starting rank satisfies the range criteria.
    #[error("no rank interval satisfies the power-law criteria")]
    NoZipfianRange,

    /// A rank outside `[1, n]` was passed to a model formula.
    #[error("rank {rank} outside the domain [1, {distinct}]")]
    RankOutOfDomain { rank: usize, distinct: usize },

    /// A word with a single occurrence has no average period.
    #[error("word {word:?} occurs once; its period is undefined")]
    UndefinedPeriod { word: String },

    /// Sentence statistics need at least one non-empty sentence.
    #[error("no sentences to analyze")]
    NoSentences,

    /// The random-split control needs a minimum number of seeds.
    #[error("random-split control needs at least {needed} seeds, got {got}")]
    TooFewSeeds { needed: usize, got: usize },

    /// The mixing experiment needs at least two texts.
    #[error("mixing needs at least {needed} texts, got {got}")]
    TooFewTexts { needed: usize, got: usize },

    /// A model parameter is outside its admissible domain.
    #[error("invalid model parameter: {0}")]
    InvalidParameter(&'static str),

    /// Malformed tokenizer configuration file.
    #[error("tokenizer config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
