//! Structural counts of a text: tokens, letters, punctuation, sentences,
//! paragraphs, bytes.
//!
//! Usage: `cargo run --example tokenize_stats [FILE]`
//! Without a file a deterministic demo document is generated.

use zipfian::corpus::{tokenize, TokenizerConfig};
use zipfian::synth::{generate_document, DocumentSpec};

fn main() {
    let raw = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable UTF-8 file"),
        None => generate_document(&DocumentSpec::default()),
    };
    let text = tokenize(&raw, &TokenizerConfig::default());
    println!("tokens (N)      {}", text.token_count());
    println!("letters (L)     {}", text.letter_count());
    println!("punctuation (S) {}", text.punct_count());
    println!("sentences       {}", text.sentence_count());
    println!("paragraphs      {}", text.paragraph_count());
    println!("bytes (B)       {}", text.byte_size());
    let lengths = text.sentence_lengths();
    if !lengths.is_empty() {
        let mean = lengths.iter().sum::<usize>() as f64 / lengths.len() as f64;
        println!("mean sentence length {mean:.2} words");
    }
    println!("first tokens: {:?}", &text.tokens()[..text.token_count().min(12)]);
}
