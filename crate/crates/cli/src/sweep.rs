//! Grid experiments over (D, N) and the scaling-law driver.

use rayon::prelude::*;
use std::fmt::Write;

use weakmeas::adversary::{eve_frequency_attack, ScalingReport};
use weakmeas::protocol::{
    p1_alice_decode, p1_alice_encode, p1_bob_respond, p2_alice_encode, p2_bob_decode, Message,
};
use weakmeas::stats::{derive_seed, RandomStream};
use weakmeas::weak::{delta_p_for_disturbance, PointerConfig};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub d: f64,
    pub delta_p: f64,
    pub n: usize,
    /// Protocol 1 decode accuracy over the cell's trials.
    pub alice_accuracy: f64,
    /// Key-frequency attack accuracy on the same runs.
    pub eve_accuracy: f64,
    /// Honest Protocol 2 false-alarm rate at the same (D, N).
    pub alarm_rate: f64,
}

/// One cell: `trials` seeded Protocol 1 cycles (messages balanced) scored
/// for Alice and for the key-frequency attack, plus `trials` honest
/// Protocol 2 cycles scored for false alarms. Row order follows the input
/// grids; trial seeds derive from (base_seed, d index, n index, trial).
pub fn sweep(
    d_grid: &[f64],
    n_grid: &[usize],
    trials: usize,
    base_seed: u64,
) -> Result<Vec<SweepRow>, CliError> {
    if d_grid.is_empty() || n_grid.is_empty() {
        return Err(CliError::Config("sweep: empty grid".into()));
    }
    if trials == 0 {
        return Err(CliError::Config("sweep: trials must be at least 1".into()));
    }
    let mut rows = Vec::with_capacity(d_grid.len() * n_grid.len());
    for (i, &d) in d_grid.iter().enumerate() {
        let delta_p = delta_p_for_disturbance(d, 0.5).map_err(CliError::from)?;
        let cfg = PointerConfig::new(delta_p).map_err(CliError::from)?;
        for (j, &n) in n_grid.iter().enumerate() {
            let cell_seed = derive_seed(derive_seed(base_seed, i as u64), j as u64);
            let (alice_hits, eve_hits, alarms) = (0..trials)
                .into_par_iter()
                .map(|t| {
                    let message = if t % 2 == 0 { Message::Yes } else { Message::No };
                    let seed = derive_seed(cell_seed, t as u64);

                    let mut alice = RandomStream::new(seed, 0);
                    let mut bob = RandomStream::new(seed, 1);
                    let (mut reg, code) = p1_alice_encode(n, &cfg, &mut alice);
                    let key = p1_bob_respond(&mut reg, message, &mut bob).expect("fresh register");
                    let report = p1_alice_decode(&code, &key, &cfg).expect("aligned lengths");
                    let alice_ok = report.decision.matches(message);
                    let eve_ok = eve_frequency_attack(&key, d).guess == Some(message);

                    let mut alice2 = RandomStream::new(seed, 10);
                    let mut bob2 = RandomStream::new(seed, 11);
                    let (mut reg2, code2) = p2_alice_encode(n, &cfg, message, &mut alice2);
                    let (_, security, _) =
                        p2_bob_decode(&mut reg2, &code2, &cfg, &mut bob2).expect("aligned");

                    (alice_ok as usize, eve_ok as usize, security.alarm as usize)
                })
                .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
            rows.push(SweepRow {
                d,
                delta_p,
                n,
                alice_accuracy: alice_hits as f64 / trials as f64,
                eve_accuracy: eve_hits as f64 / trials as f64,
                alarm_rate: alarms as f64 / trials as f64,
            });
        }
    }
    Ok(rows)
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("d,delta_p,n,alice_accuracy,eve_accuracy,alarm_rate\n");
    for r in rows {
        writeln!(
            out,
            "{},{:.12},{},{:.6},{:.6},{:.6}",
            r.d, r.delta_p, r.n, r.alice_accuracy, r.eve_accuracy, r.alarm_rate
        )
        .expect("string write");
    }
    out
}

pub fn scaling_csv(report: &ScalingReport) -> String {
    let mut out = String::from("d,delta_p,n_alice,alice_saturated,n_eve,eve_saturated,ratio\n");
    for e in &report.entries {
        writeln!(
            out,
            "{},{:.12},{},{},{},{},{:.6}",
            e.d, e.delta_p, e.n_alice, e.alice_saturated, e.n_eve, e.eve_saturated, e.ratio
        )
        .expect("string write");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_rows_are_deterministic_and_ordered() {
        let rows = sweep(&[0.02, 0.005], &[200, 400], 8, 77).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!((rows[0].d, rows[0].n), (0.02, 200));
        assert_eq!((rows[3].d, rows[3].n), (0.005, 400));
        let again = sweep(&[0.02, 0.005], &[200, 400], 8, 77).unwrap();
        assert_eq!(rows, again);
        let csv = sweep_csv(&rows);
        assert!(csv.starts_with("d,delta_p,n,"));
        assert_eq!(csv.lines().count(), 5);
    }

    #[test]
    fn sweep_validates_inputs() {
        assert!(sweep(&[], &[100], 4, 1).is_err());
        assert!(sweep(&[0.01], &[100], 0, 1).is_err());
        assert!(sweep(&[0.3], &[100], 4, 1).is_err());
    }

    #[test]
    fn scaling_csv_has_one_row_per_entry() {
        let report = ScalingReport {
            target_accuracy: 0.95,
            trials: 200,
            entries: vec![weakmeas::adversary::ScalingEntry {
                d: 0.005,
                delta_p: 4.974852583369137,
                n_alice: 686,
                alice_saturated: false,
                n_eve: 111_603,
                eve_saturated: false,
                ratio: 162.7,
            }],
        };
        let csv = scaling_csv(&report);
        assert!(csv.starts_with("d,delta_p,n_alice,"));
        assert_eq!(csv.lines().count(), 2);
        assert!(csv.contains("0.005,4.974852583369,686,false,111603,false,162.7"));
    }
}
