//! The desk-check subcommand: closed-form quantities for a given
//! pre-selection, post-selection, observable, and pointer width.

use std::fmt::Write;

use weakmeas::spin::{Outcome, QubitState, SpinObservable};
use weakmeas::weak::{conditional_mean, fidelity, sum_rule_residual, weak_value, PointerConfig};

use crate::CliError;

use std::f64::consts::FRAC_1_SQRT_2;

/// Parse a direction token: `x`, `y`, `z`, `a` (= (x+y)/sqrt2),
/// `b` (= (x-y)/sqrt2), or a comma triple `nx,ny,nz`.
fn parse_direction(token: &str) -> Result<[f64; 3], CliError> {
    match token {
        "x" => Ok([1.0, 0.0, 0.0]),
        "y" => Ok([0.0, 1.0, 0.0]),
        "z" => Ok([0.0, 0.0, 1.0]),
        "a" => Ok([FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0]),
        "b" => Ok([FRAC_1_SQRT_2, -FRAC_1_SQRT_2, 0.0]),
        other => {
            let parts: Vec<&str> = other.split(',').collect();
            if parts.len() != 3 {
                return Err(CliError::Config(format!(
                    "direction must be x|y|z|a|b or nx,ny,nz, got {other}"
                )));
            }
            let mut v = [0.0; 3];
            for (slot, part) in v.iter_mut().zip(&parts) {
                *slot = part.trim().parse::<f64>().map_err(|e| {
                    CliError::Config(format!("bad direction component {part}: {e}"))
                })?;
            }
            let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            if norm < 1e-12 {
                return Err(CliError::Config("direction must be non-zero".into()));
            }
            Ok([v[0] / norm, v[1] / norm, v[2] / norm])
        }
    }
}

/// Parse a state token: a direction with an optional `+`/`-` suffix
/// selecting the eigenstate, e.g. `x+`, `y-`, `a+`, `0.6,0,0.8-`.
pub fn parse_state(token: &str) -> Result<QubitState, CliError> {
    let (dir_part, outcome) = match token.strip_suffix('+') {
        Some(rest) => (rest, Outcome::Plus),
        None => match token.strip_suffix('-') {
            Some(rest) => (rest, Outcome::Minus),
            None => (token, Outcome::Plus),
        },
    };
    let dir = parse_direction(dir_part)?;
    let obs = SpinObservable::new(dir).map_err(CliError::from)?;
    Ok(obs.eigenstate(outcome))
}

pub fn parse_observable(token: &str) -> Result<SpinObservable, CliError> {
    SpinObservable::new(parse_direction(token)?).map_err(CliError::from)
}

/// Render the closed-form report for (pre, post, obs, delta_p).
pub fn oracle_report(
    pre_token: &str,
    post_token: &str,
    obs_token: &str,
    delta_p: f64,
) -> Result<String, CliError> {
    let pre = parse_state(pre_token)?;
    let post = parse_state(post_token)?;
    let obs = parse_observable(obs_token)?;
    let cfg = PointerConfig::new(delta_p).map_err(CliError::from)?;

    let a_w = weak_value(&obs, &pre, &post).map_err(CliError::from)?;
    let report = conditional_mean(&obs, &pre, &post, &cfg).map_err(CliError::from)?;
    let f = fidelity(&pre, &obs, &cfg);

    let mut out = String::new();
    writeln!(out, "delta_p          = {delta_p:.12}").unwrap();
    writeln!(out, "kernel_overlap   = {:.12}", cfg.kernel_overlap()).unwrap();
    writeln!(out, "expectation      = {:.12}", obs.expectation(&pre)).unwrap();
    writeln!(out, "variance         = {:.12}", obs.variance(&pre)).unwrap();
    writeln!(out, "fidelity         = {f:.12}").unwrap();
    writeln!(out, "disturbance      = {:.12}", 1.0 - f).unwrap();
    writeln!(out, "weak_value_re    = {:.12}", a_w.re).unwrap();
    writeln!(out, "weak_value_im    = {:.12}", a_w.im).unwrap();
    writeln!(out, "prob_unperturbed = {:.12}", report.prob_unperturbed).unwrap();
    writeln!(out, "prob_perturbed   = {:.12}", report.prob_perturbed).unwrap();
    writeln!(out, "rel_shift        = {:.12}", report.rel_shift).unwrap();
    writeln!(out, "cond_mean        = {:.12}", report.cond_mean).unwrap();
    if let Ok(residual) = sum_rule_residual(&obs, &pre, &SpinObservable::new(pre_axis_of(&post)).map_err(CliError::from)?) {
        writeln!(out, "sum_rule_residual = {residual:.3e}").unwrap();
    }
    Ok(out)
}

fn pre_axis_of(state: &QubitState) -> [f64; 3] {
    state.bloch_vector()
}
