//! Generate a small deterministic corpus of plain-text documents, useful for
//! trying the CLI without external files.
//!
//! Usage: `cargo run --example synthetic_corpus [DIR]` (default: ./corpus)

use zipfian::synth::{generate_document, DocumentSpec};

fn main() {
    let dir = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "corpus".to_string());
    std::fs::create_dir_all(&dir).expect("writable directory");
    for (name, seed, vocabulary, cap, offset) in [
        ("alpha", 201u64, 2400usize, 5usize, 0usize),
        ("beta", 202, 2800, 8, 1500),
        ("gamma", 203, 3200, 12, 3000),
        ("delta", 204, 2000, 6, 4500),
    ] {
        let doc = generate_document(&DocumentSpec {
            tokens: 25_000,
            seed,
            vocabulary,
            flatten_top: Some(cap),
            word_offset: offset,
            ..Default::default()
        });
        let path = format!("{dir}/{name}.txt");
        std::fs::write(&path, doc).expect("writable file");
        println!("wrote {path}");
    }
    println!("\ntry: cargo run -- analyze {dir}/*.txt --halves --mix --out {dir}/out");
}
