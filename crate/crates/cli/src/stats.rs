//! Class-size statistics over random generic configurations.
//!
//! Trial `t` draws from ChaCha8 seeded with `seed` on stream `t`, so the
//! histogram depends only on the seed, whatever the thread schedule.

use std::fmt::Write;

use orchard_core::geometry::sample::{minimum_box, sample_generic};
use orchard_core::{orchard_coloring, Error};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatsParams {
    pub n: usize,
    pub d: usize,
    pub trials: u64,
    pub seed: u64,
    pub box_max: i64,
    /// Draws allowed per trial before giving up.
    pub max_attempts: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SplitCount {
    /// Unordered class sizes, smaller first.
    pub classes: [usize; 2],
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatsReport {
    pub n: usize,
    pub d: usize,
    pub trials: u64,
    pub seed: u64,
    pub box_max: i64,
    /// One entry per possible split, including those never seen.
    pub splits: Vec<SplitCount>,
    /// Non-generic draws discarded across all trials.
    pub rejected: u64,
}

impl StatsReport {
    pub fn count(&self, smaller: usize) -> u64 {
        self.splits.iter().find(|s| s.classes[0] == smaller).map_or(0, |s| s.count)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "n = {}, d = {}, trials = {}, seed = {}, box = [0, {}]",
            self.n, self.d, self.trials, self.seed, self.box_max
        )
        .unwrap();
        writeln!(out, "split count").unwrap();
        for s in &self.splits {
            writeln!(out, "{}+{} {}", s.classes[0], s.classes[1], s.count).unwrap();
        }
        writeln!(out, "rejected draws {}", self.rejected).unwrap();
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("serializable");
        s.push('\n');
        s
    }
}

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Smaller class size of one sampled coloring, plus rejected draws.
fn run_trial(p: &StatsParams, trial: u64) -> Result<(usize, usize), Error> {
    let mut rng = trial_rng(p.seed, trial);
    let (config, rejected) = sample_generic(&mut rng, p.n, p.d, p.box_max, p.max_attempts)?;
    let split = orchard_coloring(&config)?.partition.split();
    Ok((split.0, rejected))
}

pub fn run(p: &StatsParams) -> Result<StatsReport, Error> {
    if p.d == 0 {
        return Err(Error::Invalid("dimension must be at least 1".into()));
    }
    if p.n < p.d + 1 {
        return Err(Error::Invalid(format!(
            "need at least d + 1 = {} points, got {}",
            p.d + 1,
            p.n
        )));
    }
    if p.trials == 0 {
        return Err(Error::Invalid("trials must be at least 1".into()));
    }
    if p.box_max < minimum_box(p.n) {
        return Err(Error::Budget(format!(
            "box [0, {}] can never hold {} generic points (minimum {})",
            p.box_max,
            p.n,
            minimum_box(p.n)
        )));
    }
    let outcomes: Vec<Result<(usize, usize), Error>> =
        (0..p.trials).into_par_iter().map(|t| run_trial(p, t)).collect();
    let mut counts = vec![0u64; p.n / 2 + 1];
    let mut rejected = 0u64;
    for o in outcomes {
        let (small, r) = o?;
        counts[small] += 1;
        rejected += r as u64;
    }
    Ok(StatsReport {
        n: p.n,
        d: p.d,
        trials: p.trials,
        seed: p.seed,
        box_max: p.box_max,
        splits: counts
            .iter()
            .enumerate()
            .map(|(c, &count)| SplitCount {
                classes: [c, p.n - c],
                count,
            })
            .collect(),
        rejected,
    })
}
