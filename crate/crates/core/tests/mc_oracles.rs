//! Monte Carlo agreement between the sampling path and the closed forms.

use weakmeas::spin::{Outcome, QubitState, SpinObservable};
use weakmeas::stats::derive_stream;
use weakmeas::weak::{conditional_mean, disturbance, sample_weak_reading, PointerConfig};

use std::f64::consts::FRAC_1_SQRT_2;

fn probe_observable() -> SpinObservable {
    SpinObservable::new([FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0]).unwrap()
}

/// Binned conditional means and post-selection frequencies match the
/// closed forms for y, z, and the probe's own axis at three widths.
#[test]
fn conditional_means_and_frequencies_match_closed_forms() {
    let pre = QubitState::x_plus();
    let obs = probe_observable();
    let n = 100_000usize;
    let axes: [(&str, SpinObservable); 3] = [
        ("y", SpinObservable::sigma_y()),
        ("z", SpinObservable::sigma_z()),
        ("a", probe_observable()),
    ];
    for (stream, &delta_p) in [2.0, 5.0, 10.0].iter().enumerate() {
        let cfg = PointerConfig::new(delta_p).unwrap();
        for (name, post_axis) in &axes {
            let mut rng = derive_stream(7_000 + stream as u64, hash_axis(name));
            let mut plus_readings = Vec::new();
            let mut minus_readings = Vec::new();
            for _ in 0..n {
                let r = sample_weak_reading(&pre, &obs, &cfg, &mut rng);
                let (outcome, _) = post_axis.measure(&r.post_state, &mut rng);
                match outcome {
                    Outcome::Plus => plus_readings.push(r.p),
                    Outcome::Minus => minus_readings.push(r.p),
                }
            }
            for (outcome, readings) in [
                (Outcome::Plus, &plus_readings),
                (Outcome::Minus, &minus_readings),
            ] {
                let post = post_axis.eigenstate(outcome);
                let report = conditional_mean(&obs, &pre, &post, &cfg).unwrap();
                let n_bin = readings.len();
                let mc_mean = readings.iter().sum::<f64>() / n_bin as f64;
                let tol = 4.0 * delta_p / (n_bin as f64).sqrt();
                assert!(
                    (mc_mean - report.cond_mean).abs() < tol,
                    "axis {name} dp {delta_p} outcome {outcome:?}: mc {mc_mean} vs oracle {} (tol {tol})",
                    report.cond_mean
                );
                let freq = n_bin as f64 / n as f64;
                let p = report.prob_perturbed;
                let freq_tol = 4.0 * (p * (1.0 - p) / n as f64).sqrt();
                assert!(
                    (freq - p).abs() < freq_tol,
                    "axis {name} dp {delta_p} outcome {outcome:?}: freq {freq} vs P' {p}"
                );
            }
        }
    }
}

fn hash_axis(name: &str) -> u64 {
    name.bytes().fold(0u64, |acc, b| acc * 31 + b as u64)
}

/// The unconditional sample mean sits at the expectation value and the
/// mean overlap loss reproduces the disturbance exactly in expectation.
#[test]
fn unconditional_mean_and_back_action() {
    let pre = QubitState::x_plus();
    let obs = probe_observable();
    let cfg = PointerConfig::new(5.0).unwrap();
    let n = 100_000usize;
    let mut rng = derive_stream(7100, 0);
    let mut sum_p = 0.0;
    let mut sum_flip = 0.0;
    for _ in 0..n {
        let r = sample_weak_reading(&pre, &obs, &cfg, &mut rng);
        sum_p += r.p;
        sum_flip += 1.0 - pre.overlap(&r.post_state).norm_sqr();
    }
    let mean_p = sum_p / n as f64;
    assert!(
        (mean_p - FRAC_1_SQRT_2).abs() < 4.0 * 5.0 / (n as f64).sqrt(),
        "unconditional mean {mean_p}"
    );
    let flip_rate = sum_flip / n as f64;
    let d = disturbance(5.0, 0.5).unwrap();
    assert!(
        (flip_rate - d).abs() < 5e-4,
        "flip rate {flip_rate} vs disturbance {d}"
    );
}

/// Readings from a second, independent width reproduce the two-component
/// mixture's moments: mean <A>, variance delta_p^2 + Var A.
#[test]
fn marginal_mixture_moments() {
    let pre = QubitState::x_plus();
    let obs = probe_observable();
    let cfg = PointerConfig::new(5.0).unwrap();
    let n = 100_000usize;
    let mut rng = derive_stream(7200, 0);
    let readings: Vec<f64> = (0..n)
        .map(|_| sample_weak_reading(&pre, &obs, &cfg, &mut rng).p)
        .collect();
    let mean = readings.iter().sum::<f64>() / n as f64;
    let var = readings.iter().map(|p| (p - mean).powi(2)).sum::<f64>() / (n as f64 - 1.0);
    let true_var = 25.0 + 0.5;
    assert!((mean - FRAC_1_SQRT_2).abs() < 4.0 * (true_var / n as f64).sqrt());
    assert!((var - true_var).abs() < 0.01 * true_var, "variance {var}");
}
