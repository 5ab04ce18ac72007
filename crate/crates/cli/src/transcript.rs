//! The canonical run record and its serialization.
//!
//! A transcript is one JSON document with a fixed key order and every
//! float printed as a 17-significant-digit decimal (`{:.16e}`), which
//! round-trips bit-exactly through any conforming parser. Identical
//! `(seed, config)` pairs therefore produce byte-identical documents.
//! Wall-clock timing is process metadata, not part of the record; the CLI
//! reports it on stderr.

use serde::Deserialize;
use std::fmt::Write;

use crate::config::RunConfig;

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct Transcript {
    pub config: RunConfig,
    /// Flip probability D for the run's pointer width at variance 1/2.
    pub disturbance: f64,
    pub kernel_overlap: f64,
    pub code: Vec<f64>,
    pub key: KeyRecord,
    pub decode: DecodeRecord,
    pub security: Option<SecurityRecord>,
    pub attack: Option<AttackRecord>,
}

/// Key bits as a '0'/'1' string, with per-entry axes ('x'/'y') when the
/// measuring party mixed axes.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct KeyRecord {
    pub bits: String,
    pub axes: Option<String>,
}

/// Bin means are absent when the corresponding bin is empty.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct DecodeRecord {
    pub mean_bin1: Option<f64>,
    pub mean_bin0: Option<f64>,
    pub stderr_bin1: Option<f64>,
    pub stderr_bin0: Option<f64>,
    pub n_bin1: usize,
    pub n_bin0: usize,
    pub decision: String,
    pub score_yes: Option<f64>,
    pub score_no: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct SecurityRecord {
    pub n_x_checked: usize,
    pub n_x_flipped: usize,
    pub expected_flip_rate: f64,
    pub alarm: bool,
    pub alarm_threshold: usize,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct AttackRecord {
    pub kind: String,
    pub guess: Option<String>,
    pub detected: bool,
    /// Frequency attack: fraction of 1-bits. Intercept: fraction of +1
    /// outcomes.
    pub ones_fraction: Option<f64>,
    pub threshold: Option<f64>,
    pub eve_mean: Option<f64>,
    pub eve_n: Option<u64>,
    pub eve_decision: Option<String>,
}

fn push_f64(out: &mut String, x: f64) {
    if x.is_finite() {
        write!(out, "{x:.16e}").expect("string write");
    } else {
        out.push_str("null");
    }
}

fn push_opt_f64(out: &mut String, x: Option<f64>) {
    match x {
        Some(v) if v.is_finite() => push_f64(out, v),
        _ => out.push_str("null"),
    }
}

fn push_str(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => {
                write!(out, "\\u{:04x}", c as u32).expect("string write")
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

fn push_opt_str(out: &mut String, s: &Option<String>) {
    match s {
        Some(v) => push_str(out, v),
        None => out.push_str("null"),
    }
}

impl Transcript {
    pub fn to_json(&self) -> String {
        let mut o = String::with_capacity(64 + 26 * self.code.len());
        o.push_str("{\"config\":{");
        let c = &self.config;
        write!(o, "\"protocol\":{},\"n\":{},\"delta_p\":", c.protocol, c.n).unwrap();
        push_f64(&mut o, c.delta_p);
        write!(o, ",\"message\":\"{}\",\"seed\":{},\"eve\":\"{}\"", c.message.as_str(), c.seed, c.eve.as_str()).unwrap();
        o.push_str(",\"eve_axis\":");
        match c.eve_axis {
            Some(a) => push_str(&mut o, a.as_str()),
            None => o.push_str("null"),
        }
        o.push_str(",\"eve_delta_p\":");
        push_opt_f64(&mut o, c.eve_delta_p);
        write!(o, ",\"trials\":{},\"timerev\":{}}}", c.trials, c.timerev).unwrap();

        o.push_str(",\"disturbance\":");
        push_f64(&mut o, self.disturbance);
        o.push_str(",\"kernel_overlap\":");
        push_f64(&mut o, self.kernel_overlap);

        o.push_str(",\"code\":[");
        for (i, p) in self.code.iter().enumerate() {
            if i > 0 {
                o.push(',');
            }
            push_f64(&mut o, *p);
        }
        o.push(']');

        o.push_str(",\"key\":{\"bits\":");
        push_str(&mut o, &self.key.bits);
        o.push_str(",\"axes\":");
        push_opt_str(&mut o, &self.key.axes);
        o.push('}');

        let d = &self.decode;
        o.push_str(",\"decode\":{\"mean_bin1\":");
        push_opt_f64(&mut o, d.mean_bin1);
        o.push_str(",\"mean_bin0\":");
        push_opt_f64(&mut o, d.mean_bin0);
        o.push_str(",\"stderr_bin1\":");
        push_opt_f64(&mut o, d.stderr_bin1);
        o.push_str(",\"stderr_bin0\":");
        push_opt_f64(&mut o, d.stderr_bin0);
        write!(o, ",\"n_bin1\":{},\"n_bin0\":{},\"decision\":", d.n_bin1, d.n_bin0).unwrap();
        push_str(&mut o, &d.decision);
        o.push_str(",\"score_yes\":");
        push_opt_f64(&mut o, d.score_yes);
        o.push_str(",\"score_no\":");
        push_opt_f64(&mut o, d.score_no);
        o.push('}');

        o.push_str(",\"security\":");
        match &self.security {
            None => o.push_str("null"),
            Some(s) => {
                write!(
                    o,
                    "{{\"n_x_checked\":{},\"n_x_flipped\":{},\"expected_flip_rate\":",
                    s.n_x_checked, s.n_x_flipped
                )
                .unwrap();
                push_f64(&mut o, s.expected_flip_rate);
                write!(o, ",\"alarm\":{},\"alarm_threshold\":{}}}", s.alarm, s.alarm_threshold)
                    .unwrap();
            }
        }

        o.push_str(",\"attack\":");
        match &self.attack {
            None => o.push_str("null"),
            Some(a) => {
                o.push_str("{\"kind\":");
                push_str(&mut o, &a.kind);
                o.push_str(",\"guess\":");
                push_opt_str(&mut o, &a.guess);
                write!(o, ",\"detected\":{}", a.detected).unwrap();
                o.push_str(",\"ones_fraction\":");
                push_opt_f64(&mut o, a.ones_fraction);
                o.push_str(",\"threshold\":");
                push_opt_f64(&mut o, a.threshold);
                o.push_str(",\"eve_mean\":");
                push_opt_f64(&mut o, a.eve_mean);
                o.push_str(",\"eve_n\":");
                match a.eve_n {
                    Some(n) => write!(o, "{n}").unwrap(),
                    None => o.push_str("null"),
                }
                o.push_str(",\"eve_decision\":");
                push_opt_str(&mut o, &a.eve_decision);
                o.push('}');
            }
        }

        o.push('}');
        o
    }

    pub fn from_json(text: &str) -> Result<Self, crate::CliError> {
        serde_json::from_str(text)
            .map_err(|e| crate::CliError::Config(format!("transcript parse: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip_through_the_decimal_form() {
        for x in [
            0.1,
            std::f64::consts::FRAC_1_SQRT_2,
            -1.4003491766077816,
            4.950331673311174e-3,
            1.0,
            0.0,
            -0.0,
            1e-300,
        ] {
            let s = format!("{x:.16e}");
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{x} -> {s}");
        }
    }

    #[test]
    fn strings_are_escaped() {
        let mut s = String::new();
        push_str(&mut s, "a\"b\\c\n");
        assert_eq!(s, "\"a\\\"b\\\\c\\u000a\"");
    }
}
