//! Experiment harness for the weak-measurement signaling simulator:
//! configuration, single-run transcripts, grid sweeps, the scaling
//! analysis, and a closed-form desk-check tool.

pub mod config;
pub mod oracle;
pub mod run;
pub mod sweep;
pub mod transcript;

pub use config::{ConfigOverlay, EveAxis, EveKind, MessageArg, RunConfig};
pub use run::run;
pub use sweep::{scaling_csv, sweep, sweep_csv, SweepRow};
pub use transcript::Transcript;

/// Harness errors, mapped onto process exit codes: configuration problems
/// exit 2, protocol violations exit 3, I/O failures exit 1.
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Protocol(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Protocol(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "configuration error: {msg}"),
            CliError::Protocol(msg) => write!(f, "protocol violation: {msg}"),
            CliError::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<weakmeas::Error> for CliError {
    fn from(e: weakmeas::Error) -> Self {
        match e {
            weakmeas::Error::ProtocolViolation(msg) => CliError::Protocol(msg),
            other => CliError::Config(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
