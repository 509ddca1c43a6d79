//! The `verify` command: runs the cross-route invariant suite and reports
//! one named result per check.

use crate::{CliError, CliResult};
use hypercross::configs::{
    default_coordinate_bound, is_convex_position, is_general_position, moment_config,
    random_convex_config_3d, random_general_config, MomentParams, PointConfig,
};
use hypercross::crossing::{count_crossing_pairs, simplices_cross, Bipartition};
use hypercross::gale::{gale_convexity_check, gale_transform, spans_check};
use hypercross::moment::{binomial, closed_form_cdm, count_moment_crossings_enum, BoundRow};
use hypercross::separations::{count_proper_separations, enumerate_separations};
use num::bigint::BigUint;
use serde::Serialize;

pub struct VerifyOpts {
    pub d_lo: usize,
    pub d_hi: usize,
    pub trials: usize,
    pub seed: u64,
    pub input: Option<PointConfig>,
}

#[derive(Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl CheckResult {
    fn pass(name: &str, details: String) -> Self {
        Self {
            name: name.into(),
            passed: true,
            details,
        }
    }

    fn fail(name: &str, details: String) -> Self {
        Self {
            name: name.into(),
            passed: false,
            details,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub d_range: [usize; 2],
    pub trials: usize,
    pub seed: u64,
    pub cdm: Vec<String>,
    pub checks: Vec<CheckResult>,
    pub all_passed: bool,
}

pub type CdmFn<'a> = &'a dyn Fn(usize) -> hypercross::Result<BigUint>;

pub fn run_verify(opts: &VerifyOpts) -> CliResult<VerifyReport> {
    run_verify_with(opts, &closed_form_cdm)
}

/// The suite with the closed-form evaluator injectable, so tests can
/// confirm that a wrong formula trips exactly the agreement check.
pub fn run_verify_with(opts: &VerifyOpts, cdm: CdmFn) -> CliResult<VerifyReport> {
    if opts.d_hi > 14 {
        return Err(CliError::usage(
            "verify supports d up to 14 (combinatorial enumeration limit)",
        ));
    }
    let mut checks = Vec::new();
    let cdm_values: Vec<BigUint> = (opts.d_lo..=opts.d_hi).map(cdm).collect::<Result<_, _>>()?;

    checks.push(three_way_agreement(opts, cdm)?);
    checks.push(gale_bridges(opts)?);
    checks.push(convex_k63_count(opts)?);
    checks.push(separation_crossing_bijection(opts)?);
    checks.push(bound_chain(cdm)?);
    if let Some(config) = &opts.input {
        checks.extend(input_checks(config)?);
    }

    let all_passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport {
        d_range: [opts.d_lo, opts.d_hi],
        trials: opts.trials,
        seed: opts.seed,
        cdm: cdm_values.iter().map(BigUint::to_string).collect(),
        checks,
        all_passed,
    })
}

/// Enumeration, closed form, and (for d <= 5) the geometric LP count must
/// coincide on the moment curve.
fn three_way_agreement(opts: &VerifyOpts, cdm: CdmFn) -> CliResult<CheckResult> {
    const NAME: &str = "cdm_three_way_agreement";
    let mut details = Vec::new();
    for d in opts.d_lo..=opts.d_hi {
        let formula = cdm(d)?;
        let enumerated = BigUint::from(count_moment_crossings_enum(d)?);
        if enumerated != formula {
            return Ok(CheckResult::fail(
                NAME,
                format!("d={d}: enumeration {enumerated} != closed form {formula}"),
            ));
        }
        if d <= 5 {
            let c = moment_config(&MomentParams::integer_range(d, 2 * d)?);
            let geometric = count_crossing_pairs(&c, d, false)?.crossing_count;
            if BigUint::from(geometric as u64) != formula {
                return Ok(CheckResult::fail(
                    NAME,
                    format!("d={d}: geometric count {geometric} != closed form {formula}"),
                ));
            }
        }
        details.push(format!("d={d}:{formula}"));
    }
    Ok(CheckResult::pass(NAME, details.join(" ")))
}

/// Every random general-position transform passes the span check, and
/// the diagram-side convexity test matches the point-side predicate.
fn gale_bridges(opts: &VerifyOpts) -> CliResult<CheckResult> {
    const NAME: &str = "gale_bridges";
    let shapes = [(2usize, 4usize), (2, 5), (3, 5), (3, 6)];
    for trial in 0..opts.trials {
        let (d, m) = shapes[trial % shapes.len()];
        let seed = opts.seed.wrapping_add(trial as u64);
        let c = random_general_config(d, m, seed, default_coordinate_bound(d, m))?;
        let g = gale_transform(&c)?;
        if !spans_check(&g)? {
            return Ok(CheckResult::fail(
                NAME,
                format!("span check failed: d={d} m={m} seed={seed}"),
            ));
        }
        let expected = is_convex_position(&c)?;
        if gale_convexity_check(&g)? != expected {
            return Ok(CheckResult::fail(
                NAME,
                format!("convexity bridge mismatch: d={d} m={m} seed={seed}"),
            ));
        }
    }
    Ok(CheckResult::pass(NAME, format!("{} trials", opts.trials)))
}

/// Every convex general-position placement of 6 points in R^3 yields
/// exactly 3 crossing pairs and 3 proper separations.
fn convex_k63_count(opts: &VerifyOpts) -> CliResult<CheckResult> {
    const NAME: &str = "convex_k63_count";
    for trial in 0..opts.trials {
        let seed = opts.seed.wrapping_add(trial as u64);
        let c = random_convex_config_3d(6, seed)?;
        let count = count_crossing_pairs(&c, 3, false)?.crossing_count;
        if count != 3 {
            return Ok(CheckResult::fail(
                NAME,
                format!("seed={seed}: crossing count {count} != 3"),
            ));
        }
        let proper = count_proper_separations(&gale_transform(&c)?)?;
        if proper != 3 {
            return Ok(CheckResult::fail(
                NAME,
                format!("seed={seed}: proper separations {proper} != 3"),
            ));
        }
    }
    Ok(CheckResult::pass(NAME, format!("{} trials", opts.trials)))
}

/// Separation counts per size split equal crossing-pair counts per
/// simplex-size split on d+3 points.
fn separation_crossing_bijection(opts: &VerifyOpts) -> CliResult<CheckResult> {
    const NAME: &str = "separation_crossing_bijection";
    let per_d = opts.trials.clamp(1, 8);
    for d in [2usize, 3] {
        let m = d + 3;
        for trial in 0..per_d {
            let seed = opts.seed.wrapping_add(1000 + trial as u64);
            let c = random_general_config(d, m, seed, default_coordinate_bound(d, m))?;
            let seps = enumerate_separations(&gale_transform(&c)?)?;
            for a in 2..=m / 2 {
                let sep_count = seps
                    .iter()
                    .filter(|s| s.min_side_size() == a.min(m - a))
                    .count();
                let mut crossing_count = 0;
                for (left, right) in splits(m, a) {
                    let b = Bipartition::new(left, right)?;
                    if simplices_cross(&c, &b)? {
                        crossing_count += 1;
                    }
                }
                if sep_count != crossing_count {
                    return Ok(CheckResult::fail(
                        NAME,
                        format!(
                            "d={d} seed={seed} split ({a},{}): {sep_count} separations vs {crossing_count} crossings",
                            m - a
                        ),
                    ));
                }
            }
        }
    }
    Ok(CheckResult::pass(NAME, format!("{per_d} trials per d")))
}

/// Lower bounds stay below the exact moment-curve value, which stays
/// below the trivial binomial upper bound.
fn bound_chain(cdm: CdmFn) -> CliResult<CheckResult> {
    const NAME: &str = "bound_chain";
    for d in 4..=10usize {
        let row = BoundRow::compute(d)?;
        let value = cdm(d)?;
        let upper = binomial(2 * d as u64, d as u64);
        if row.thm1.value > value || row.lemma8.value > value || value > upper {
            return Ok(CheckResult::fail(
                NAME,
                format!(
                    "d={d}: chain {} <= {} <= {} / {} <= {} violated",
                    row.thm1.value, value, upper, row.lemma8.value, value
                ),
            ));
        }
    }
    Ok(CheckResult::pass(NAME, "d=4..10".into()))
}

fn input_checks(config: &PointConfig) -> CliResult<Vec<CheckResult>> {
    let mut out = Vec::new();
    let general = is_general_position(config)?;
    if !general {
        out.push(CheckResult::fail(
            "input_general_position",
            "input configuration is not in general position".into(),
        ));
        return Ok(out);
    }
    out.push(CheckResult::pass(
        "input_general_position",
        format!("n={} dim={}", config.len(), config.dim()),
    ));
    if config.len() >= config.dim() + 2 {
        let g = gale_transform(config)?;
        let bridge_ok =
            spans_check(&g)? && gale_convexity_check(&g)? == is_convex_position(config)?;
        out.push(if bridge_ok {
            CheckResult::pass("input_gale_bridge", format!("k={}", g.k()))
        } else {
            CheckResult::fail("input_gale_bridge", "bridge mismatch on input".into())
        });
    }
    Ok(out)
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k > items.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut stack = vec![(0usize, Vec::new())];
    while let Some((start, chosen)) = stack.pop() {
        if chosen.len() == k {
            out.push(chosen);
            continue;
        }
        for i in (start..items.len()).rev() {
            let mut next = chosen.clone();
            next.push(items[i]);
            stack.push((i + 1, next));
        }
    }
    out
}

fn splits(m: usize, a: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let all: Vec<usize> = (0..m).collect();
    let mut out = Vec::new();
    for left in combinations(&all, a) {
        if 2 * a == m && !left.contains(&0) {
            continue;
        }
        let right: Vec<usize> = all.iter().copied().filter(|i| !left.contains(i)).collect();
        out.push((left, right));
    }
    out
}
