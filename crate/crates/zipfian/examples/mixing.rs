//! Mixing experiment: joining different texts widens the validity range and
//! raises its upper end; the lower end may move either way.
//!
//! Usage: `cargo run --example mixing [FILE...]` (two or more files, or no
//! arguments for four generated texts with distinct vocabularies).

use zipfian::corpus::{tokenize, TokenizedText, TokenizerConfig};
use zipfian::experiments::{mixing_experiment, AnalysisOptions};
use zipfian::synth::{generate_document, DocumentSpec};

fn main() {
    let config = TokenizerConfig::default();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let texts: Vec<(String, TokenizedText)> = if args.is_empty() {
        (0..4u64)
            .map(|i| {
                let doc = generate_document(&DocumentSpec {
                    tokens: 25_000,
                    seed: 100 + i,
                    vocabulary: 2200 + 300 * i as usize,
                    flatten_top: Some(5 + 3 * i as usize),
                    word_offset: 1800 * i as usize,
                    ..Default::default()
                });
                (format!("t{i}"), tokenize(&doc, &config))
            })
            .collect()
    } else {
        args.iter()
            .map(|path| {
                let raw = std::fs::read_to_string(path).expect("readable UTF-8 file");
                (path.clone(), tokenize(&raw, &config))
            })
            .collect()
    };

    let refs: Vec<(String, &TokenizedText)> =
        texts.iter().map(|(l, t)| (l.clone(), t)).collect();
    let report = mixing_experiment(&refs, &AnalysisOptions::default()).expect("at least 2 texts");

    println!("components:");
    for c in &report.components {
        println!(
            "  {:<12} n={:<6} range {:?}..{:?}",
            c.label, c.distinct_count, c.r_min, c.r_max
        );
    }
    println!("\nmixtures:");
    for entry in report.pairs.iter().chain(report.full.iter()) {
        println!(
            "  {:<12} n={:<6} range {:?}..{:?}  widens={:?} raises_ceiling={:?} raises_floor={:?}",
            entry.report.label,
            entry.report.distinct_count,
            entry.report.r_min,
            entry.report.r_max,
            entry.widens,
            entry.raises_ceiling,
            entry.raises_floor
        );
    }
}
