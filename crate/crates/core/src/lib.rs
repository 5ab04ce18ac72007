//! Single-qubit weak-measurement engine and the pointer-signaling
//! protocols built on it.
//!
//! The crate is organized bottom-up:
//! - [`spin`]: exact qubit states, spin observables, Born rule, projective
//!   measurement;
//! - [`weak`]: Gaussian-pointer weak coupling with closed forms for
//!   disturbance, weak values, conditional means, and the sum rule, plus
//!   the stochastic sampler with exact back-action;
//! - [`protocol`]: the two Alice/Bob signaling protocols (code, key,
//!   binning, decisions, tamper check);
//! - [`adversary`]: eavesdropping strategies and the sample-size scaling
//!   analysis;
//! - [`stats`]: splittable deterministic randomness, estimators, and the
//!   Gaussian sample-size calculus.

pub mod adversary;
pub mod error;
pub mod protocol;
pub mod spin;
pub mod stats;
pub mod weak;

pub use error::{Error, Result};
pub use protocol::{Code, Decision, DecodeReport, Key, Message, SecurityReport, SpinRegister};
pub use spin::{Axis, Outcome, QubitState, SpinObservable};
pub use stats::{derive_seed, derive_stream, RandomStream};
pub use weak::{PointerConfig, WeakReading, WeakValueReport};
