//! Text ingestion: tokenization, sentence/paragraph segmentation, structural
//! counts, and the half-split / mixing operations that downstream analyses
//! build on.
//!
//! A word is a maximal run of Unicode alphabetic characters, optionally with
//! one internal apostrophe ("don't" is a single token); hyphens split words.
//! Tokens are lowercased. Sentences end at `.`, `?` or `!`; trailing text
//! without a terminator counts as one sentence. Paragraphs are blocks
//! separated by blank lines.

use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Sentence terminators are fixed; the configurable punctuation set only
/// affects the punctuation count.
const SENTENCE_TERMINATORS: [char; 3] = ['.', '?', '!'];

/// Characters accepted as an apostrophe inside a word.
const APOSTROPHES: [char; 2] = ['\'', '\u{2019}'];

/// How apostrophes are treated during tokenization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApostrophePolicy {
    /// Allow one internal apostrophe per word ("don't" stays one token).
    InternalSingle,
    /// Apostrophes always split words.
    Split,
}

/// What separates paragraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParagraphBreak {
    /// One or more blank lines (the plain-text e-book convention).
    BlankLine,
    /// Every non-blank line is its own paragraph.
    EveryNewline,
}

/// Tokenizer rules. The defaults implement the conventions documented at the
/// module level; alternative word definitions can be loaded from a small
/// key-value file via [`TokenizerConfig::from_file`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenizerConfig {
    punctuation: HashSet<char>,
    apostrophes: ApostrophePolicy,
    paragraph_break: ParagraphBreak,
}

impl Default for TokenizerConfig {
    fn default() -> Self {
        Self {
            punctuation: ['.', ',', ':', ';', '?', '!'].into_iter().collect(),
            apostrophes: ApostrophePolicy::InternalSingle,
            paragraph_break: ParagraphBreak::BlankLine,
        }
    }
}

impl TokenizerConfig {
    /// Replace the punctuation set counted by `S`.
    pub fn with_punctuation(mut self, chars: impl IntoIterator<Item = char>) -> Self {
        self.punctuation = chars.into_iter().collect();
        self
    }

    pub fn with_apostrophes(mut self, policy: ApostrophePolicy) -> Self {
        self.apostrophes = policy;
        self
    }

    pub fn with_paragraph_break(mut self, brk: ParagraphBreak) -> Self {
        self.paragraph_break = brk;
        self
    }

    pub fn punctuation(&self) -> impl Iterator<Item = char> + '_ {
        self.punctuation.iter().copied()
    }

    /// Parse a `key = value` configuration. Recognized keys:
    ///
    /// ```text
    /// punctuation     = .,:;?!
    /// apostrophes     = internal-single | split
    /// paragraph_break = blank-line | every-newline
    /// ```
    ///
    /// Blank lines and `#` comments are ignored; unknown keys are errors.
    pub fn from_key_values(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "punctuation" => {
                    if value.is_empty() {
                        return Err(Error::Config("punctuation set is empty".into()));
                    }
                    cfg.punctuation = value.chars().collect();
                }
                "apostrophes" => {
                    cfg.apostrophes = match value {
                        "internal-single" => ApostrophePolicy::InternalSingle,
                        "split" => ApostrophePolicy::Split,
                        other => {
                            return Err(Error::Config(format!(
                                "unknown apostrophe policy {other:?} (expected internal-single or split)"
                            )))
                        }
                    };
                }
                "paragraph_break" => {
                    cfg.paragraph_break = match value {
                        "blank-line" => ParagraphBreak::BlankLine,
                        "every-newline" => ParagraphBreak::EveryNewline,
                        other => {
                            return Err(Error::Config(format!(
                                "unknown paragraph break {other:?} (expected blank-line or every-newline)"
                            )))
                        }
                    };
                }
                other => return Err(Error::Config(format!("unknown key {other:?}"))),
            }
        }
        Ok(cfg)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_key_values(&std::fs::read_to_string(path)?)
    }

    fn is_punctuation(&self, ch: char) -> bool {
        self.punctuation.contains(&ch)
    }

    fn joins_words(&self, ch: char) -> bool {
        self.apostrophes == ApostrophePolicy::InternalSingle
            && APOSTROPHES.contains(&ch)
            && !self.is_punctuation(ch)
    }
}

/// Origin of a tokenized text, kept so natural halves can be re-segmented
/// from the source bytes.
#[derive(Debug, Clone)]
struct Source {
    raw: String,
    /// Byte offset where each token starts.
    token_starts: Vec<usize>,
    config: TokenizerConfig,
}

/// A tokenized text plus its structural counts.
///
/// Invariants: the token count equals the sum of sentence lengths, tokens are
/// non-empty and never contain punctuation characters.
#[derive(Debug, Clone)]
pub struct TokenizedText {
    tokens: Vec<String>,
    letter_count: u64,
    punct_count: u64,
    sentence_lengths: Vec<usize>,
    paragraph_count: u64,
    byte_size: u64,
    source: Option<Source>,
}

impl TokenizedText {
    /// Build a text from bare tokens, with no sentence/paragraph structure.
    ///
    /// The stream is treated as one unterminated sentence in a single
    /// paragraph; punctuation count is zero and the byte size is that of the
    /// space-joined stream. Random-split halves and similar word-level-only
    /// derivations use this representation.
    pub fn from_tokens(tokens: Vec<String>) -> Self {
        let letter_count = tokens
            .iter()
            .flat_map(|t| t.chars())
            .filter(|c| c.is_alphabetic())
            .count() as u64;
        let byte_size = tokens.iter().map(|t| t.len() as u64).sum::<u64>()
            + tokens.len().saturating_sub(1) as u64;
        let n = tokens.len();
        Self {
            tokens,
            letter_count,
            punct_count: 0,
            sentence_lengths: if n > 0 { vec![n] } else { Vec::new() },
            paragraph_count: u64::from(n > 0),
            byte_size,
            source: None,
        }
    }

    /// Number of tokens `N`.
    pub fn token_count(&self) -> usize {
        self.tokens.len()
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.tokens.iter().map(String::as_str)
    }

    /// Total letters over all tokens (`L`).
    pub fn letter_count(&self) -> u64 {
        self.letter_count
    }

    /// Punctuation signs in the source (`S`).
    pub fn punct_count(&self) -> u64 {
        self.punct_count
    }

    /// Per-sentence word counts; their number is `σ`.
    pub fn sentence_lengths(&self) -> &[usize] {
        &self.sentence_lengths
    }

    pub fn sentence_count(&self) -> usize {
        self.sentence_lengths.len()
    }

    /// Paragraph count `ρ`.
    pub fn paragraph_count(&self) -> u64 {
        self.paragraph_count
    }

    /// Size of the raw input in bytes (`B`).
    pub fn byte_size(&self) -> u64 {
        self.byte_size
    }

    /// Whether the text still knows its source bytes (false for mixtures and
    /// token-level constructions).
    pub fn has_source(&self) -> bool {
        self.source.is_some()
    }
}

impl fmt::Display for TokenizedText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "N={} L={} S={} sentences={} paragraphs={} bytes={}",
            self.token_count(),
            self.letter_count,
            self.punct_count,
            self.sentence_count(),
            self.paragraph_count,
            self.byte_size
        )
    }
}

struct Scan {
    tokens: Vec<String>,
    token_starts: Vec<usize>,
    letter_count: u64,
    punct_count: u64,
    sentence_lengths: Vec<usize>,
}

fn scan(raw: &str, config: &TokenizerConfig) -> Scan {
    let mut out = Scan {
        tokens: Vec::new(),
        token_starts: Vec::new(),
        letter_count: 0,
        punct_count: 0,
        sentence_lengths: Vec::new(),
    };
    let mut chars = raw.char_indices().peekable();
    let mut current = String::new();
    let mut current_start = 0usize;
    let mut current_has_apostrophe = false;
    let mut words_in_sentence = 0usize;

    macro_rules! close_token {
        () => {
            if !current.is_empty() {
                out.tokens.push(std::mem::take(&mut current));
                out.token_starts.push(current_start);
                words_in_sentence += 1;
            }
        };
    }

    while let Some((idx, ch)) = chars.next() {
        if ch.is_alphabetic() {
            if current.is_empty() {
                current_start = idx;
                current_has_apostrophe = false;
            }
            current.extend(ch.to_lowercase());
            out.letter_count += 1;
        } else if !current.is_empty()
            && !current_has_apostrophe
            && config.joins_words(ch)
            && chars.peek().is_some_and(|&(_, next)| next.is_alphabetic())
        {
            current.push(ch);
            current_has_apostrophe = true;
        } else {
            close_token!();
            if config.is_punctuation(ch) {
                out.punct_count += 1;
            }
            if SENTENCE_TERMINATORS.contains(&ch) && words_in_sentence > 0 {
                out.sentence_lengths.push(words_in_sentence);
                words_in_sentence = 0;
            }
        }
    }
    close_token!();
    if words_in_sentence > 0 {
        out.sentence_lengths.push(words_in_sentence);
    }
    out
}

fn count_paragraphs(raw: &str, brk: ParagraphBreak) -> u64 {
    let mut count = 0u64;
    let mut in_block = false;
    for line in raw.lines() {
        let blank = line.trim().is_empty();
        match brk {
            ParagraphBreak::BlankLine => {
                if !blank && !in_block {
                    count += 1;
                }
                in_block = !blank;
            }
            ParagraphBreak::EveryNewline => {
                if !blank {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Tokenize a UTF-8 text and compute its structural counts.
///
/// Empty input yields an empty text (`N = 0`), not an error.
pub fn tokenize(raw: &str, config: &TokenizerConfig) -> TokenizedText {
    let scanned = scan(raw, config);
    let n = scanned.tokens.len();
    debug_assert_eq!(n, scanned.sentence_lengths.iter().sum::<usize>());
    TokenizedText {
        tokens: scanned.tokens,
        letter_count: scanned.letter_count,
        punct_count: scanned.punct_count,
        sentence_lengths: scanned.sentence_lengths,
        paragraph_count: count_paragraphs(raw, config.paragraph_break),
        byte_size: raw.len() as u64,
        source: Some(Source {
            raw: raw.to_owned(),
            token_starts: scanned.token_starts,
            config: config.clone(),
        }),
    }
}

/// Tokenize raw bytes, rejecting invalid UTF-8.
pub fn tokenize_bytes(raw: &[u8], config: &TokenizerConfig) -> Result<TokenizedText> {
    let text = std::str::from_utf8(raw)?;
    Ok(tokenize(text, config))
}

/// Sentence lengths (in words) and paragraph count of a raw text.
pub fn segment(raw: &str, config: &TokenizerConfig) -> (Vec<usize>, u64) {
    let scanned = scan(raw, config);
    (
        scanned.sentence_lengths,
        count_paragraphs(raw, config.paragraph_break),
    )
}

/// How a text is divided into two equal halves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitMode {
    /// Cut at the midpoint of the token stream, preserving order.
    Natural,
    /// Partition token positions uniformly at random (seeded); each half
    /// keeps the original relative order and carries word-level statistics
    /// only.
    Random { seed: u64 },
}

/// Two equal halves of a text. With an odd token count the final token is
/// dropped so that both halves hold exactly `floor(N / 2)` tokens.
#[derive(Debug, Clone)]
pub struct SplitResult {
    pub first: TokenizedText,
    pub second: TokenizedText,
    pub mode: SplitMode,
}

/// Split a text into two equal halves.
pub fn split_halves(text: &TokenizedText, mode: SplitMode) -> Result<SplitResult> {
    let n = text.token_count();
    if n < 2 {
        return Err(Error::TooFewTokens { needed: 2, got: n });
    }
    let half = n / 2;
    let (first, second) = match mode {
        SplitMode::Natural => match &text.source {
            Some(source) => {
                let mid = source.token_starts[half];
                let end = if n.is_multiple_of(2) {
                    source.raw.len()
                } else {
                    source.token_starts[2 * half]
                };
                let first = tokenize(&source.raw[..mid], &source.config);
                let second = tokenize(&source.raw[mid..end], &source.config);
                debug_assert_eq!(first.tokens, text.tokens[..half]);
                debug_assert_eq!(second.tokens, text.tokens[half..2 * half]);
                (first, second)
            }
            None => (
                TokenizedText::from_tokens(text.tokens[..half].to_vec()),
                TokenizedText::from_tokens(text.tokens[half..2 * half].to_vec()),
            ),
        },
        SplitMode::Random { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut order: Vec<usize> = (0..2 * half).collect();
            // Partial Fisher-Yates: the first `half` entries are the
            // positions assigned to the first half.
            for i in 0..half {
                let j = rng.gen_range(i..2 * half);
                order.swap(i, j);
            }
            let mut in_first = vec![false; 2 * half];
            for &pos in &order[..half] {
                in_first[pos] = true;
            }
            let (mut first, mut second) = (Vec::with_capacity(half), Vec::with_capacity(half));
            for (pos, token) in text.tokens[..2 * half].iter().enumerate() {
                if in_first[pos] {
                    first.push(token.clone());
                } else {
                    second.push(token.clone());
                }
            }
            (
                TokenizedText::from_tokens(first),
                TokenizedText::from_tokens(second),
            )
        }
    };
    Ok(SplitResult {
        first,
        second,
        mode,
    })
}

/// Join two texts; every count is additive.
pub fn mix_texts(a: &TokenizedText, b: &TokenizedText) -> TokenizedText {
    let mut tokens = Vec::with_capacity(a.tokens.len() + b.tokens.len());
    tokens.extend_from_slice(&a.tokens);
    tokens.extend_from_slice(&b.tokens);
    let mut sentence_lengths =
        Vec::with_capacity(a.sentence_lengths.len() + b.sentence_lengths.len());
    sentence_lengths.extend_from_slice(&a.sentence_lengths);
    sentence_lengths.extend_from_slice(&b.sentence_lengths);
    TokenizedText {
        tokens,
        letter_count: a.letter_count + b.letter_count,
        punct_count: a.punct_count + b.punct_count,
        sentence_lengths,
        paragraph_count: a.paragraph_count + b.paragraph_count,
        byte_size: a.byte_size + b.byte_size,
        source: None,
    }
}
