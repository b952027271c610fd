//! Wall-clock helpers for the `bench` subcommand and the timing criteria.

use std::time::{Duration, Instant};

/// Median wall time of `reps` runs of `f`, measured with a monotonic clock.
///
/// Panics if `reps` is zero.
pub fn median_duration<T>(reps: usize, mut f: impl FnMut() -> T) -> Duration {
    assert!(reps > 0, "at least one repetition is required");
    let mut samples: Vec<Duration> = (0..reps)
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(f());
            start.elapsed()
        })
        .collect();
    samples.sort_unstable();
    samples[reps / 2]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_sorted_samples() {
        let mut calls = 0;
        let d = median_duration(5, || calls += 1);
        assert_eq!(calls, 5);
        assert!(d < Duration::from_secs(1));
    }
}
