//! Random generic configurations with integer coordinates.

use rand::Rng;

use super::Configuration;
use crate::error::{Error, Result};

/// Default coordinate range `[0, 10·n²]` for `n` points.
pub fn default_box(n: usize) -> i64 {
    10 * (n as i64) * (n as i64)
}

/// Smallest usable `box_max`: below `n - 1` there are not even `n`
/// distinct values per axis, so a line cannot hold `n` distinct points.
pub fn minimum_box(n: usize) -> i64 {
    (n as i64 - 1).max(1)
}

/// Draws integer configurations with coordinates uniform in `[0, box_max]`
/// until one is generic. Returns it with the number of rejected draws.
pub fn sample_generic<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    dimension: usize,
    box_max: i64,
    max_attempts: usize,
) -> Result<(Configuration, usize)> {
    if box_max < minimum_box(n) {
        return Err(Error::Invalid(format!(
            "coordinate box [0, {box_max}] is too small for {n} points (need at least {})",
            minimum_box(n)
        )));
    }
    for attempt in 0..max_attempts {
        let points: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..dimension).map(|_| rng.random_range(0..=box_max)).collect())
            .collect();
        let config = Configuration::from_integers(dimension, &points)?;
        if config.is_generic() {
            return Ok((config, attempt));
        }
    }
    Err(Error::Budget(format!(
        "no generic configuration of {n} points in [0, {box_max}]^{dimension} after {max_attempts} draws"
    )))
}
