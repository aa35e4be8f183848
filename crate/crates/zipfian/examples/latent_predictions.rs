//! Closed-form predictions from three observables (N, n, c): effective
//! per-rank probabilities, rank steps, predicted occupancy spectrum, and the
//! predicted rare-word count.
//!
//! Usage: `cargo run --example latent_predictions [N n c]`
//! Defaults to N=23224, n=3021, c=0.139.

use zipfian::model::{
    occurrence_pmf, phi_r, predicted_hapax, predicted_occupancy, rank_steps, regime_check,
    ModelParams,
};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (n_tokens, distinct, c) = if args.len() == 3 {
        (
            args[0].parse().expect("N"),
            args[1].parse().expect("n"),
            args[2].parse().expect("c"),
        )
    } else {
        (23_224u64, 3_021u64, 0.139f64)
    };
    let params = ModelParams::new(n_tokens, distinct, c).expect("positive parameters");

    let regime = regime_check(&params);
    println!(
        "regime: n³/N = {:.3e}, N/n = {:.2}, n = {} → {}",
        regime.cube_ratio,
        regime.token_ratio,
        regime.distinct_count,
        if regime.passes { "inside" } else { "outside" }
    );

    println!("\neffective probabilities:");
    for r in [1usize, 10, 100, distinct as usize] {
        println!("  φ_{r} = {:.6}", phi_r(&params, r).unwrap());
    }

    println!("\nrank steps (occurrence count jumps past k at rank r̂_k):");
    for k in [0u64, 1, 2, 3, 10] {
        println!("  r̂_{k} = {:.1}", rank_steps(&params, k));
    }

    println!("\npredicted occupancy:");
    for m in [1u64, 2, 3, 10, 100] {
        println!("  V̂_{m} = {:.1}", predicted_occupancy(&params, m));
    }
    println!("predicted rare words ĥ = {:.1}", predicted_hapax(&params));

    let r = 50;
    let phi = phi_r(&params, r).unwrap();
    let around = (phi * n_tokens as f64).round() as u64;
    println!("\noccurrence pmf near its mode for rank {r}:");
    for nu in around.saturating_sub(2)..=around + 2 {
        println!(
            "  P(ν = {nu}) = {:.5}",
            occurrence_pmf(&params, r, nu).unwrap()
        );
    }
}
