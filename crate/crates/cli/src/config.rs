//! Run configuration: defaults, config-file overlay, CLI overrides, and
//! validation.
//!
//! Precedence is defaults < config file < command-line flags; the resolved
//! configuration is echoed verbatim into the transcript.

use serde::Deserialize;

use weakmeas::protocol::Message;
use weakmeas::spin::SpinObservable;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MessageArg {
    Yes,
    No,
}

impl MessageArg {
    pub fn to_core(self) -> Message {
        match self {
            MessageArg::Yes => Message::Yes,
            MessageArg::No => Message::No,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MessageArg::Yes => "yes",
            MessageArg::No => "no",
        }
    }

    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "yes" => Ok(MessageArg::Yes),
            "no" => Ok(MessageArg::No),
            other => Err(CliError::Config(format!("message must be yes|no, got {other}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EveKind {
    #[default]
    None,
    Frequency,
    Intercept,
    Weak,
}

impl EveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EveKind::None => "none",
            EveKind::Frequency => "frequency",
            EveKind::Intercept => "intercept",
            EveKind::Weak => "weak",
        }
    }

    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "none" => Ok(EveKind::None),
            "frequency" => Ok(EveKind::Frequency),
            "intercept" => Ok(EveKind::Intercept),
            "weak" => Ok(EveKind::Weak),
            other => Err(CliError::Config(format!(
                "eve must be none|frequency|intercept|weak, got {other}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EveAxis {
    X,
    Y,
    Z,
}

impl EveAxis {
    pub fn observable(self) -> SpinObservable {
        match self {
            EveAxis::X => SpinObservable::sigma_x(),
            EveAxis::Y => SpinObservable::sigma_y(),
            EveAxis::Z => SpinObservable::sigma_z(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EveAxis::X => "x",
            EveAxis::Y => "y",
            EveAxis::Z => "z",
        }
    }

    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "x" => Ok(EveAxis::X),
            "y" => Ok(EveAxis::Y),
            "z" => Ok(EveAxis::Z),
            other => Err(CliError::Config(format!("eve-axis must be x|y|z, got {other}"))),
        }
    }
}

/// The resolved configuration of a single run.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub protocol: u8,
    pub n: usize,
    pub delta_p: f64,
    pub message: MessageArg,
    pub seed: u64,
    #[serde(default)]
    pub eve: EveKind,
    #[serde(default)]
    pub eve_axis: Option<EveAxis>,
    #[serde(default)]
    pub eve_delta_p: Option<f64>,
    #[serde(default = "default_trials")]
    pub trials: u64,
    #[serde(default)]
    pub timerev: bool,
}

fn default_trials() -> u64 {
    1
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            protocol: 1,
            n: 2000,
            delta_p: 5.0,
            message: MessageArg::Yes,
            seed: 1,
            eve: EveKind::None,
            eve_axis: None,
            eve_delta_p: None,
            trials: 1,
            timerev: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let err = |msg: String| Err(CliError::Config(msg));
        if self.protocol != 1 && self.protocol != 2 {
            return err(format!("protocol must be 1 or 2, got {}", self.protocol));
        }
        if self.n < 2 {
            return err(format!("n must be at least 2, got {}", self.n));
        }
        if !(self.delta_p.is_finite() && self.delta_p > 0.0) {
            return err(format!("delta_p must be > 0, got {}", self.delta_p));
        }
        if self.trials < 1 {
            return err("trials must be at least 1".into());
        }
        if let Some(dp) = self.eve_delta_p {
            if !(dp.is_finite() && dp > 0.0) {
                return err(format!("eve_delta_p must be > 0, got {dp}"));
            }
        }
        match self.eve {
            EveKind::None => {}
            EveKind::Frequency => {
                if self.protocol != 1 {
                    return err("the frequency attack reads a broadcast key; protocol 1 only".into());
                }
            }
            EveKind::Intercept => {
                if self.protocol != 2 {
                    return err("intercept-resend needs transit access; protocol 2 only".into());
                }
            }
            EveKind::Weak => {
                if self.protocol == 1 && !self.timerev {
                    return err(
                        "the weak attack on protocol 1 requires the timerev variant flag".into(),
                    );
                }
            }
        }
        if self.eve_axis.is_some() && self.eve != EveKind::Intercept {
            return err("eve_axis only applies to the intercept attack".into());
        }
        if self.eve_delta_p.is_some() && self.eve != EveKind::Weak {
            return err("eve_delta_p only applies to the weak attack".into());
        }
        Ok(())
    }
}

/// Partial configuration, used for both config files and flag overrides.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigOverlay {
    pub protocol: Option<u8>,
    pub n: Option<usize>,
    pub delta_p: Option<f64>,
    pub message: Option<MessageArg>,
    pub seed: Option<u64>,
    pub eve: Option<EveKind>,
    pub eve_axis: Option<EveAxis>,
    pub eve_delta_p: Option<f64>,
    pub trials: Option<u64>,
    pub timerev: Option<bool>,
}

impl ConfigOverlay {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Config(format!("config file: {e}")))
    }

    pub fn apply(&self, mut base: RunConfig) -> RunConfig {
        if let Some(v) = self.protocol {
            base.protocol = v;
        }
        if let Some(v) = self.n {
            base.n = v;
        }
        if let Some(v) = self.delta_p {
            base.delta_p = v;
        }
        if let Some(v) = self.message {
            base.message = v;
        }
        if let Some(v) = self.seed {
            base.seed = v;
        }
        if let Some(v) = self.eve {
            base.eve = v;
        }
        if let Some(v) = self.eve_axis {
            base.eve_axis = Some(v);
        }
        if let Some(v) = self.eve_delta_p {
            base.eve_delta_p = Some(v);
        }
        if let Some(v) = self.trials {
            base.trials = v;
        }
        if let Some(v) = self.timerev {
            base.timerev = v;
        }
        base
    }
}
