//! Single-cycle orchestration in protocol order.
//!
//! Stream layout: Alice samples from stream 0 of the run seed, Bob from
//! stream 1, Eve from stream 2. Protocol 1 runs encode, optional transit
//! tampering, Bob's response, key broadcast (the frequency attack reads
//! it), then Alice's decode. Protocol 2 runs encode, transit (the
//! intercept and weak hooks see only the register), Bob's measurements and
//! decode, and only then counts the code as public for Eve's guess.

use weakmeas::adversary::{
    eve_frequency_attack, eve_intercept_guess, eve_intercept_resend, eve_weak_guess,
    eve_weak_transit, intercept_plus_fraction, EveRecord,
};
use weakmeas::protocol::{
    p1_alice_decode, p1_alice_encode, p1_bob_respond, p2_alice_encode, p2_bob_decode,
    protocol_disturbance, Code, Decision, DecodeReport, Key, Message, SecurityReport,
};
use weakmeas::spin::Axis;
use weakmeas::stats::RandomStream;
use weakmeas::weak::PointerConfig;

use crate::config::{EveAxis, EveKind, RunConfig};
use crate::transcript::{AttackRecord, DecodeRecord, KeyRecord, SecurityRecord, Transcript};
use crate::CliError;

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

fn decision_str(d: Decision) -> &'static str {
    match d {
        Decision::Yes => "yes",
        Decision::No => "no",
        Decision::Inconclusive => "inconclusive",
    }
}

fn message_str(m: Message) -> &'static str {
    match m {
        Message::Yes => "yes",
        Message::No => "no",
    }
}

fn decode_record(r: &DecodeReport) -> DecodeRecord {
    DecodeRecord {
        mean_bin1: finite(r.mean_bin1),
        mean_bin0: finite(r.mean_bin0),
        stderr_bin1: finite(r.stderr_bin1),
        stderr_bin0: finite(r.stderr_bin0),
        n_bin1: r.n_bin1,
        n_bin0: r.n_bin0,
        decision: decision_str(r.decision).to_string(),
        score_yes: finite(r.score_yes),
        score_no: finite(r.score_no),
    }
}

fn security_record(s: &SecurityReport) -> SecurityRecord {
    SecurityRecord {
        n_x_checked: s.n_x_checked,
        n_x_flipped: s.n_x_flipped,
        expected_flip_rate: s.expected_flip_rate,
        alarm: s.alarm,
        alarm_threshold: s.alarm_threshold,
    }
}

fn key_record(key: &Key) -> KeyRecord {
    let bits: String = key.bits().iter().map(|&b| if b == 1 { '1' } else { '0' }).collect();
    let axes = key.axes().map(|axes| {
        axes.iter()
            .map(|a| match a {
                Axis::X => 'x',
                Axis::Y => 'y',
                Axis::Z => 'z',
            })
            .collect()
    });
    KeyRecord { bits, axes }
}

fn frequency_record(key: &Key, d: f64) -> AttackRecord {
    let out = eve_frequency_attack(key, d);
    let (ones_fraction, threshold, n) = match out.record {
        EveRecord::Frequency { ones_fraction, threshold, n } => (ones_fraction, threshold, n),
        _ => unreachable!(),
    };
    AttackRecord {
        kind: "frequency".into(),
        guess: out.guess.map(|m| message_str(m).to_string()),
        detected: false,
        ones_fraction: finite(ones_fraction),
        threshold: Some(threshold),
        eve_mean: None,
        eve_n: Some(n as u64),
        eve_decision: None,
    }
}

/// Execute one full cycle and assemble the transcript.
pub fn run(config: &RunConfig) -> Result<Transcript, CliError> {
    config.validate()?;
    let cfg = PointerConfig::new(config.delta_p).map_err(CliError::from)?;
    let d = protocol_disturbance(&cfg);
    let message = config.message.to_core();
    let mut alice = RandomStream::new(config.seed, 0);
    let mut bob = RandomStream::new(config.seed, 1);
    let mut eve = RandomStream::new(config.seed, 2);

    let eve_cfg = || -> Result<PointerConfig, CliError> {
        PointerConfig::new(config.eve_delta_p.unwrap_or(config.delta_p)).map_err(CliError::from)
    };

    match config.protocol {
        1 => {
            let (reg, code) = p1_alice_encode(config.n, &cfg, &mut alice);
            let mut reg = reg;
            let mut eve_transit: Option<(Code, PointerConfig)> = None;
            if config.eve == EveKind::Weak {
                let cfg_eve = eve_cfg()?;
                let (forwarded, eve_code) = eve_weak_transit(reg, &cfg_eve, &mut eve);
                reg = forwarded;
                eve_transit = Some((eve_code, cfg_eve));
            }
            let key = p1_bob_respond(&mut reg, message, &mut bob).map_err(CliError::from)?;
            let decode = p1_alice_decode(&code, &key, &cfg).map_err(CliError::from)?;

            let attack = match config.eve {
                EveKind::None => None,
                EveKind::Frequency => Some(frequency_record(&key, d)),
                EveKind::Weak => {
                    let (eve_code, cfg_eve) = eve_transit.expect("set during transit");
                    let report =
                        p1_alice_decode(&eve_code, &key, &cfg_eve).map_err(CliError::from)?;
                    // Eve always commits to the lower score; the band that
                    // makes honest parties abstain is not her concern.
                    let guess = if report.score_yes.is_finite() && report.score_no.is_finite() {
                        Some(if report.score_yes < report.score_no {
                            Message::Yes
                        } else {
                            Message::No
                        })
                    } else {
                        None
                    };
                    let mean = eve_code.readings.iter().sum::<f64>() / eve_code.len().max(1) as f64;
                    Some(AttackRecord {
                        kind: "weak".into(),
                        guess: guess.map(|m| message_str(m).to_string()),
                        detected: false,
                        ones_fraction: None,
                        threshold: None,
                        eve_mean: finite(mean),
                        eve_n: Some(eve_code.len() as u64),
                        eve_decision: Some(decision_str(report.decision).to_string()),
                    })
                }
                EveKind::Intercept => unreachable!("rejected by validation"),
            };

            Ok(Transcript {
                config: config.clone(),
                disturbance: d,
                kernel_overlap: cfg.kernel_overlap(),
                code: code.readings,
                key: key_record(&key),
                decode: decode_record(&decode),
                security: None,
                attack,
            })
        }
        2 => {
            let (reg, code) = p2_alice_encode(config.n, &cfg, message, &mut alice);
            let mut reg = reg;
            enum Transit {
                None,
                Intercept(Vec<weakmeas::spin::Outcome>),
                Weak(Code),
            }
            let transit = match config.eve {
                EveKind::None => Transit::None,
                EveKind::Intercept => {
                    let axis = config.eve_axis.unwrap_or(EveAxis::Y).observable();
                    let (forwarded, outcomes) = eve_intercept_resend(reg, &axis, &mut eve);
                    reg = forwarded;
                    Transit::Intercept(outcomes)
                }
                EveKind::Weak => {
                    let cfg_eve = eve_cfg()?;
                    let (forwarded, eve_code) = eve_weak_transit(reg, &cfg_eve, &mut eve);
                    reg = forwarded;
                    Transit::Weak(eve_code)
                }
                EveKind::Frequency => unreachable!("rejected by validation"),
            };

            // Bob takes possession of the register before the code counts
            // as public; Eve's guess is only formed afterwards.
            let (decode, security, key) =
                p2_bob_decode(&mut reg, &code, &cfg, &mut bob).map_err(CliError::from)?;

            let attack = match transit {
                Transit::None => None,
                Transit::Intercept(outcomes) => Some(AttackRecord {
                    kind: "intercept".into(),
                    guess: eve_intercept_guess(&outcomes).map(|m| message_str(m).to_string()),
                    detected: security.alarm,
                    ones_fraction: finite(intercept_plus_fraction(&outcomes)),
                    threshold: Some(0.5),
                    eve_mean: None,
                    eve_n: Some(outcomes.len() as u64),
                    eve_decision: None,
                }),
                Transit::Weak(eve_code) => {
                    let (guess, mean, threshold) = eve_weak_guess(&eve_code, d);
                    Some(AttackRecord {
                        kind: "weak".into(),
                        guess: guess.map(|m| message_str(m).to_string()),
                        detected: security.alarm,
                        ones_fraction: None,
                        threshold: finite(threshold),
                        eve_mean: finite(mean),
                        eve_n: Some(eve_code.len() as u64),
                        eve_decision: None,
                    })
                }
            };

            Ok(Transcript {
                config: config.clone(),
                disturbance: d,
                kernel_overlap: cfg.kernel_overlap(),
                code: code.readings,
                key: key_record(&key),
                decode: decode_record(&decode),
                security: Some(security_record(&security)),
                attack,
            })
        }
        _ => unreachable!("rejected by validation"),
    }
}
