//! Power-law fit with validity-range detection: where Zipf's law holds, how
//! well, and the consistency checks around it.
//!
//! Usage: `cargo run --example fit_range [FILE]`

use zipfian::corpus::{tokenize, TokenizerConfig};
use zipfian::fit::{c_bounds, deviation_d, find_zipf_range, ks_test};
use zipfian::ranks::{build_rank_table, TieBreak};
use zipfian::synth::{generate_document, DocumentSpec};

fn main() {
    let raw = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable UTF-8 file"),
        None => generate_document(&DocumentSpec {
            tokens: 30_000,
            ..Default::default()
        }),
    };
    let text = tokenize(&raw, &TokenizerConfig::default());
    let table = build_rank_table(&text, TieBreak::FirstOccurrence).expect("non-empty text");
    let freqs = table.frequencies();

    match find_zipf_range(&freqs) {
        Ok(range) => {
            println!(
                "validity range: ranks [{}, {}] ({} ranks of {})",
                range.r_min,
                range.r_max,
                range.width(),
                table.distinct_count()
            );
            println!(
                "fit: f_r = {:.4} · r^(-{:.4})   S_err = {:.2e}   1-R² = {:.2e}",
                range.fit.prefactor,
                range.fit.exponent,
                range.fit.s_err,
                1.0 - range.fit.r_squared
            );
            println!("summed deviation d = {:+.2e}", deviation_d(&freqs, &range));

            let bounds = c_bounds(&range, table.distinct_count());
            println!(
                "prefactor bounds: {:.4} < c < {:.4}  (consistent: {})",
                bounds.lower, bounds.upper, bounds.consistent
            );

            let ks = ks_test(&freqs, &range, range.width());
            println!("KS over the range: D = {:.4}, p = {:.3}", ks.d, ks.p_value);
        }
        Err(e) => println!("no validity range: {e}"),
    }
}
