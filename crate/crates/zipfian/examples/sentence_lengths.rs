//! Sentence-length distribution of a text: mean, dispersion, entropy, and a
//! CSV of the full distribution.
//!
//! Usage: `cargo run --example sentence_lengths [FILE] [OUT.csv]`

use zipfian::corpus::{tokenize, TokenizerConfig};
use zipfian::report::{sentence_csv, Precision};
use zipfian::sentences::sentence_stats;
use zipfian::synth::{generate_document, DocumentSpec};

fn main() {
    let mut args = std::env::args().skip(1);
    let raw = match args.next() {
        Some(path) => std::fs::read_to_string(path).expect("readable UTF-8 file"),
        None => generate_document(&DocumentSpec::default()),
    };
    let out = args.next();

    let text = tokenize(&raw, &TokenizerConfig::default());
    let dist = sentence_stats(text.sentence_lengths()).expect("at least one sentence");

    println!("sentences        {}", dist.sentence_count());
    println!("distinct lengths {}", dist.distinct_lengths());
    println!("mean length      {:.3} words", dist.mean);
    println!("dispersion       {:.3}", dist.dispersion);
    println!("entropy          {:.3}", dist.entropy);
    println!("\nlength  fraction");
    for (alpha, kappa) in dist.iter().take(20) {
        println!("{alpha:>6}  {kappa:.4}");
    }
    if let Some(path) = out {
        std::fs::write(&path, sentence_csv(&dist, Precision::Significant).unwrap())
            .expect("writable output path");
        println!("\nfull distribution written to {path}");
    }
}
