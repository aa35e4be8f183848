//! Shared helpers for the integration suites: an independent grid-search
//! minimizer (oracle for the closed-form fit), reference statistics for ten
//! public-domain English texts, and discovery of an optional user-supplied
//! corpus directory.

#![allow(dead_code)]

use std::path::PathBuf;

/// Sum of squared log-residuals of `f = c·r^(−γ)` over the points.
pub fn s_err_of(points: &[(f64, f64)], ln_c: f64, gamma: f64) -> f64 {
    points
        .iter()
        .map(|&(r, f)| {
            let resid = f.ln() - (ln_c - gamma * r.ln());
            resid * resid
        })
        .sum()
}

/// Dense grid search for the minimizer of `S_err` in `(ln c, γ)`, refined by
/// halving the window around the best cell. Independent of the closed-form
/// normal equations: it only ever evaluates `S_err`.
pub fn grid_search_fit(points: &[(f64, f64)]) -> (f64, f64) {
    let y_mean = points.iter().map(|&(_, f)| f.ln()).sum::<f64>() / points.len() as f64;
    let mut ln_c_center = y_mean;
    let mut gamma_center = 1.0;
    let mut ln_c_span = 16.0;
    let mut gamma_span = 16.0;
    let cells = 40usize;
    for _ in 0..24 {
        let mut best = (f64::INFINITY, ln_c_center, gamma_center);
        for i in 0..=cells {
            let ln_c = ln_c_center - ln_c_span / 2.0 + ln_c_span * i as f64 / cells as f64;
            for j in 0..=cells {
                let gamma =
                    gamma_center - gamma_span / 2.0 + gamma_span * j as f64 / cells as f64;
                let err = s_err_of(points, ln_c, gamma);
                if err < best.0 {
                    best = (err, ln_c, gamma);
                }
            }
        }
        ln_c_center = best.1;
        gamma_center = best.2;
        ln_c_span /= 2.0;
        gamma_span /= 2.0;
    }
    (ln_c_center.exp(), gamma_center)
}

/// Half-level reference statistics of ten public-domain English texts
/// (novel-length prose from several epochs and genres). `token_count` is the
/// size of each half; counts and prefactors were measured per half.
#[derive(Debug, Clone, Copy)]
pub struct ReferenceText {
    pub name: &'static str,
    pub token_count: u64,
    pub distinct_1: u64,
    pub distinct_2: u64,
    pub prefactor_1: f64,
    pub prefactor_2: f64,
    pub r_min_1: usize,
    pub r_min_2: usize,
}

pub const REFERENCE_TEXTS: [ReferenceText; 10] = [
    ReferenceText { name: "AR", token_count: 11612, distinct_1: 2012, distinct_2: 1958, prefactor_1: 0.135, prefactor_2: 0.135, r_min_1: 18, r_min_2: 33 },
    ReferenceText { name: "DL", token_count: 14061, distinct_1: 2461, distinct_2: 2421, prefactor_1: 0.138, prefactor_2: 0.148, r_min_1: 13, r_min_2: 22 },
    ReferenceText { name: "TF", token_count: 13723, distinct_1: 2445, distinct_2: 2725, prefactor_1: 0.148, prefactor_2: 0.186, r_min_1: 14, r_min_2: 30 },
    ReferenceText { name: "TM", token_count: 16387, distinct_1: 3222, distinct_2: 3111, prefactor_1: 0.107, prefactor_2: 0.105, r_min_1: 17, r_min_2: 44 },
    ReferenceText { name: "DA", token_count: 12411, distinct_1: 2490, distinct_2: 2300, prefactor_1: 0.129, prefactor_2: 0.135, r_min_1: 11, r_min_2: 23 },
    ReferenceText { name: "DM", token_count: 11511, distinct_1: 1972, distinct_2: 1878, prefactor_1: 0.148, prefactor_2: 0.151, r_min_1: 17, r_min_2: 23 },
    ReferenceText { name: "OC", token_count: 12756, distinct_1: 1987, distinct_2: 1683, prefactor_1: 0.087, prefactor_2: 0.135, r_min_1: 24, r_min_2: 33 },
    ReferenceText { name: "TO", token_count: 12003, distinct_1: 2214, distinct_2: 2183, prefactor_1: 0.135, prefactor_2: 0.145, r_min_1: 22, r_min_2: 34 },
    ReferenceText { name: "TS", token_count: 18069, distinct_1: 2970, distinct_2: 2744, prefactor_1: 0.182, prefactor_2: 0.169, r_min_1: 32, r_min_2: 40 },
    ReferenceText { name: "WW", token_count: 12217, distinct_1: 2868, distinct_2: 2674, prefactor_1: 0.117, prefactor_2: 0.110, r_min_1: 14, r_min_2: 24 },
];

/// Directory with user-supplied editions of the reference texts
/// (`AR.txt` … `WW.txt`), taken from the `ZIPFIAN_CORPUS` environment
/// variable. Corpus-dependent checks are skipped when unset.
pub fn corpus_dir() -> Option<PathBuf> {
    let dir = PathBuf::from(std::env::var_os("ZIPFIAN_CORPUS")?);
    dir.is_dir().then_some(dir)
}

/// Load one reference text from the corpus directory.
pub fn corpus_text(dir: &std::path::Path, name: &str) -> Option<String> {
    std::fs::read_to_string(dir.join(format!("{name}.txt"))).ok()
}
