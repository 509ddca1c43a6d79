//! The `search-min` command: exploratory random-restart search with
//! coordinate perturbation, minimizing the crossing count. Results are
//! best-effort; nothing here asserts minimality.

use crate::CliResult;
use hypercross::configs::{
    default_coordinate_bound, is_general_position, random_general_config, PointConfig,
};
use hypercross::crossing::{count_crossing_pairs, CrossingReport};
use hypercross::exact::{rat_int, Rational};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct SearchResult {
    pub dim: usize,
    pub n: usize,
    pub trials_used: usize,
    pub best_crossing_count: usize,
    pub config: PointConfig,
    pub report: CrossingReport,
}

/// Alternates fresh random configurations with single-coordinate
/// perturbations of the incumbent; deterministic per seed. Stops early
/// when a zero-crossing configuration appears.
pub fn search_min(
    dim: usize,
    n: usize,
    trials: usize,
    seed: u64,
    witnesses: bool,
) -> CliResult<SearchResult> {
    let bound = default_coordinate_bound(dim, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(PointConfig, usize)> = None;
    let mut used = 0;

    for trial in 0..trials {
        used = trial + 1;
        let candidate = match &best {
            Some((incumbent, _)) if trial % 2 == 1 => {
                match perturb(incumbent, &mut rng) {
                    Some(c) => c,
                    None => continue, // perturbation broke general position
                }
            }
            _ => random_general_config(dim, n, rng.gen::<u64>(), bound)?,
        };
        let count = count_crossing_pairs(&candidate, dim, false)?.crossing_count;
        if best.as_ref().is_none_or(|(_, c)| count < *c) {
            best = Some((candidate, count));
        }
        if count == 0 {
            break;
        }
    }

    let (config, best_crossing_count) = best.expect("trials >= 1 yields a candidate");
    let report = count_crossing_pairs(&config, dim, witnesses)?;
    Ok(SearchResult {
        dim,
        n,
        trials_used: used,
        best_crossing_count,
        config,
        report,
    })
}

/// Moves one coordinate of one point by a small nonzero integer delta;
/// None when the result loses general position.
fn perturb(config: &PointConfig, rng: &mut ChaCha8Rng) -> Option<PointConfig> {
    let point = rng.gen_range(0..config.len());
    let coord = rng.gen_range(0..config.dim());
    let magnitude = rng.gen_range(1..=3i64);
    let delta = if rng.gen_range(0..2) == 0 {
        magnitude
    } else {
        -magnitude
    };
    let mut points: Vec<Vec<Rational>> = config.points().to_vec();
    points[point][coord] += rat_int(delta);
    let candidate = PointConfig::new(config.dim(), points).ok()?;
    match is_general_position(&candidate) {
        Ok(true) => Some(candidate),
        _ => None,
    }
}
