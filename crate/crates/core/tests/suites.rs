//! Larger seeded suites run through the experiment runner, with every
//! record's certificate rechecked here.

mod common;

use hamcolour::experiment::{run_experiment, ExperimentConfig};

/// Fraction of critical runs that must reach bias `d - q`.
const CRITICAL_MIN_FRACTION: f64 = 0.90;

#[test]
fn critical_bias_tracks_matching() {
    let config = ExperimentConfig::parse("mode = critical\nn = 400\nm = 40\nt = 4\ntrials = 10\nseed = 3").unwrap();
    let records = run_experiment(&config, 4).unwrap();
    assert!(records.iter().all(|r| r.verified), "{records:?}");
    let reached = records
        .iter()
        .filter(|r| match (r.bias, r.d, r.q) {
            (Some(b), Some(d), Some(q)) => b.bias_numerator >= (d as i64 - q as i64) * b.bias_denominator,
            (Some(b), None, None) => b.bias_numerator > 0,
            _ => false,
        })
        .count();
    assert!(
        reached as f64 >= CRITICAL_MIN_FRACTION * records.len() as f64,
        "bias >= d - q on {reached}/{}",
        records.len()
    );
}

#[test]
fn pipeline_against_partitioned_adversary() {
    let config =
        ExperimentConfig::parse("mode = pipeline\nn = 300\nadversary = partitioned\ntrials = 8\nseed = 5").unwrap();
    let records = run_experiment(&config, 4).unwrap();
    // failures are data; every success must carry a valid cycle
    for r in &records {
        if r.outcome == "success" {
            assert!(r.verified, "{r:?}");
        }
    }
    assert!(records.iter().any(|r| r.outcome == "success"));
}
