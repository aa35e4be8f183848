//! Compare the first and second halves of a text across the full feature
//! vector: range limits, lexical richness, spacing homogeneity, sentence and
//! paragraph structure.
//!
//! Usage: `cargo run --example half_comparison [FILE]`
//! The generated demo text deliberately carries more early-rank structure in
//! its first half, the asymmetry the comparison is built to surface.

use zipfian::corpus::{tokenize, TokenizerConfig};
use zipfian::experiments::{compare_halves, AnalysisOptions};
use zipfian::synth::{generate_document, DocumentSpec};

fn demo_text() -> String {
    let first = generate_document(&DocumentSpec {
        tokens: 40_000,
        seed: 41,
        flatten_top: Some(6),
        vocabulary: 3000,
        ..Default::default()
    });
    let second = generate_document(&DocumentSpec {
        tokens: 40_000,
        seed: 42,
        flatten_top: Some(60),
        vocabulary: 3000,
        ..Default::default()
    });
    format!("{first}\n{second}")
}

fn main() {
    let raw = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable UTF-8 file"),
        None => demo_text(),
    };
    let text = tokenize(&raw, &TokenizerConfig::default());
    let cmp = compare_halves("text", &text, &AnalysisOptions::default()).expect("splittable text");

    println!(
        "{:<26} {:>12} {:>12}  {:^4} {:^8} ok",
        "feature", "first", "second", "dir", "expect"
    );
    for f in &cmp.features {
        let fmt = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x:.4}"));
        println!(
            "{:<26} {:>12} {:>12}  {:^4} {:^8} {}{}",
            f.feature,
            fmt(f.first),
            fmt(f.second),
            f.direction.to_string(),
            f.expected.map_or("-".to_string(), |e| e.to_string()),
            f.matches_expected
                .map_or("-".to_string(), |m| m.to_string()),
            if f.starred { "  *" } else { "" },
        );
    }
    println!("\ndelta = {:?}, delta_tilde = {:?}", cmp.delta, cmp.delta_tilde);
    println!("diagnosis: {:?}", cmp.diagnosis);
}
