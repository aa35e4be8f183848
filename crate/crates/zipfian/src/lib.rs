//! Quantitative rank-frequency analysis of single texts.
//!
//! The library ingests plain text and measures how well, and over which
//! ranks, the ranked word frequencies follow a power law `f_r = c·r^(−γ)`:
//!
//! - [`corpus`]: tokenization, sentence/paragraph segmentation, structural
//!   counts, half splits and text mixing;
//! - [`ranks`]: rank-frequency tables, occupancy spectra, rare-word counts,
//!   Yule's constant;
//! - [`fit`]: least-squares power-law fitting, validity-range detection,
//!   prefactor bounds, Kolmogorov-Smirnov check;
//! - [`spatial`]: word spacing statistics and the ordinary-vs-spatial
//!   frequency distance over the detected range;
//! - [`sentences`]: sentence-length distribution moments;
//! - [`model`]: closed-form occurrence predictions driven by `(N, n, c)`;
//! - [`experiments`]: half comparison, random-split control, mixing;
//! - [`report`]: deterministic CSV/JSON export;
//! - [`synth`]: seeded generators used by the examples and test suites.
//!
//! ```
//! use zipfian::corpus::{tokenize, TokenizerConfig};
//! use zipfian::experiments::{analyze_text, AnalysisOptions};
//! use zipfian::synth::{generate_document, DocumentSpec};
//!
//! let doc = generate_document(&DocumentSpec::default());
//! let text = tokenize(&doc, &TokenizerConfig::default());
//! let report = analyze_text("demo", &text, &AnalysisOptions::default()).unwrap();
//! assert!(report.range_found);
//! ```

pub mod corpus;
pub mod error;
pub mod experiments;
pub mod fit;
pub mod model;
pub mod ranks;
pub mod report;
pub mod sentences;
pub mod spatial;
pub mod synth;

pub use corpus::{tokenize, TokenizedText, TokenizerConfig};
pub use error::{Error, Result};
pub use experiments::{analyze_text, compare_halves, AnalysisOptions, TextReport};
pub use fit::{find_zipf_range, loglog_fit, FitResult, ZipfRange};
pub use ranks::{build_rank_table, RankTable, TieBreak};
