//! Rank-frequency table, occupancy spectrum, rare-word counts, and Yule's
//! constant for a text.
//!
//! Usage: `cargo run --example rank_frequency [FILE]`

use zipfian::corpus::{tokenize, TokenizerConfig};
use zipfian::ranks::{
    build_rank_table, hapax_count, occupancy_entropy, occupancy_spectrum, yule_k, TieBreak,
};
use zipfian::synth::{generate_document, DocumentSpec};

fn main() {
    let raw = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable UTF-8 file"),
        None => generate_document(&DocumentSpec::default()),
    };
    let text = tokenize(&raw, &TokenizerConfig::default());
    let table = build_rank_table(&text, TieBreak::FirstOccurrence).expect("non-empty text");

    println!("N = {}, n = {}", table.token_count(), table.distinct_count());
    println!("top of the table:");
    for rank in 1..=15.min(table.distinct_count()) {
        let entry = table.entry(rank).unwrap();
        println!(
            "  r={rank:3}  {:<14} count={:<6} f={:.5}",
            entry.word,
            entry.count,
            table.frequency(rank).unwrap()
        );
    }

    let spectrum = occupancy_spectrum(&table);
    println!("\noccupancy spectrum (lowest occurrence counts):");
    for (m, v) in spectrum.iter().take(8) {
        println!("  V_{m} = {v}");
    }
    println!("  max count = {}", spectrum.max_count());
    println!("  occupancy entropy = {:.4}", occupancy_entropy(&spectrum));

    let (h, ratio) = hapax_count(&table, 3);
    println!("\nrare words (≤3 occurrences): h = {h} ({:.1}% of vocabulary)", 100.0 * ratio);
    println!("Yule's K = {:.4}", yule_k(&table).expect("N ≥ 2"));
}
