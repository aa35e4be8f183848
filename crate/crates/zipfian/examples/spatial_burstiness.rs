//! Word spacing along the text: average periods, space-frequencies, and the
//! distance μ between ordinary and spatial frequencies over the validity
//! range. Writes a per-word CSV suitable for plotting f and g against rank.
//!
//! Usage: `cargo run --example spatial_burstiness [FILE] [OUT.csv]`

use zipfian::corpus::{tokenize, TokenizerConfig};
use zipfian::fit::find_zipf_range;
use zipfian::ranks::{build_rank_table, TieBreak};
use zipfian::report::{spatial_csv, Precision};
use zipfian::spatial::{space_frequency_profile, variational_mu, zipfian_mu};
use zipfian::synth::{generate_document, DocumentSpec};

fn main() {
    let mut args = std::env::args().skip(1);
    let raw = match args.next() {
        Some(path) => std::fs::read_to_string(path).expect("readable UTF-8 file"),
        None => generate_document(&DocumentSpec {
            tokens: 30_000,
            ..Default::default()
        }),
    };
    let out = args.next().unwrap_or_else(|| "spatial.csv".to_string());

    let text = tokenize(&raw, &TokenizerConfig::default());
    let table = build_rank_table(&text, TieBreak::FirstOccurrence).expect("non-empty text");
    let profile = space_frequency_profile(&text).expect("non-empty text");

    println!(
        "{} words with ℓ ≥ 2, {} singletons",
        profile.len(),
        profile.singleton_count()
    );
    for rank in [1usize, 5, 20, 100] {
        if let Some(entry) = table.entry(rank) {
            if let Some(s) = profile.spacing(&entry.word) {
                println!(
                    "  r={rank:4} {:<14} f={:.5} g={:.5} t={:.1}",
                    entry.word,
                    table.frequency(rank).unwrap(),
                    s.space_frequency,
                    s.mean_period
                );
            }
        }
    }

    match find_zipf_range(&table.frequencies()) {
        Ok(range) => {
            let mu = zipfian_mu(&table, &profile, &range).expect("range words repeat");
            println!(
                "\nμ over the range [{}, {}] = {:.4}",
                range.r_min, range.r_max, mu
            );
            let wide = variational_mu(&table, &profile, 1, range.r_max).unwrap();
            println!("diagnostic μ over [1, {}] = {:.4}", range.r_max, wide);
            let csv = spatial_csv(&table, &profile, range.r_max, Precision::Significant).unwrap();
            std::fs::write(&out, csv).expect("writable output path");
            println!("per-word table written to {out}");
        }
        Err(e) => println!("no validity range ({e}); μ undefined"),
    }
}
