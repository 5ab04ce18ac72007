//! The two pointer-signaling protocols.
//!
//! Protocol 1: Alice weakly probes every spin of an |x+> sample along
//! (x+y)/sqrt2 and records the readings as her *code*. Bob later answers a
//! single-bit question by strong-measuring every spin along y ("yes") or z
//! ("no") and broadcasts the outcome bits as the *key*. Binning the code by
//! the key exposes the conditional means (sqrt2/(1+2D), 0) for "yes" and
//! (1/sqrt2, 1/sqrt2) for "no", which is Alice's decision problem.
//!
//! Protocol 2: Alice signals by her choice of weak observable,
//! (x+y)/sqrt2 for "yes" or (x-y)/sqrt2 for "no", then releases spins first
//! and code second. Bob strong-measures each spin along x or y with a fair
//! coin: the x outcomes form a tamper check (a flip probability above the
//! honest value D raises an alarm), the y outcomes bin the code, and the
//! two bin means appear in one order for "yes" and the reverse for "no".
//!
//! Decisions use a nearest-hypothesis score on the standardized bin means
//! with an inconclusive band; see [`DecodeReport`].

use crate::error::{invalid, Error, Result};
use crate::spin::{Axis, Outcome, QubitState, SpinObservable};
use crate::stats::RandomStream;
use crate::weak::{disturbance, sample_weak_reading, PointerConfig};

use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};

/// Bins with fewer entries than this cannot support a decision.
pub const MIN_BIN_SIZE: usize = 10;
/// A score gap below this is reported as inconclusive.
pub const INCONCLUSIVE_BAND: f64 = 1.0;

/// The single-bit message either party signals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Message {
    Yes,
    No,
}

/// Outcome of a decode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Yes,
    No,
    Inconclusive,
}

impl Decision {
    pub fn matches(self, message: Message) -> bool {
        matches!(
            (self, message),
            (Decision::Yes, Message::Yes) | (Decision::No, Message::No)
        )
    }
}

/// The weak observable both protocols probe for a "yes": (x+y)/sqrt2.
pub fn weak_probe_observable() -> SpinObservable {
    SpinObservable::new([FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0]).expect("unit by construction")
}

/// Bob's strong response axis in Protocol 1: y signals "yes", z "no".
pub fn bob_response_axis(message: Message) -> SpinObservable {
    match message {
        Message::Yes => SpinObservable::sigma_y(),
        Message::No => SpinObservable::sigma_z(),
    }
}

/// Alice's weak observable in Protocol 2: (x+y)/sqrt2 for "yes",
/// (x-y)/sqrt2 for "no".
pub fn alice_signal_observable(message: Message) -> SpinObservable {
    match message {
        Message::Yes => weak_probe_observable(),
        Message::No => {
            SpinObservable::new([FRAC_1_SQRT_2, -FRAC_1_SQRT_2, 0.0]).expect("unit by construction")
        }
    }
}

/// Flip probability of the protocols' standard configuration: the |x+>
/// sample has variance 1/2 along every signal observable.
pub fn protocol_disturbance(cfg: &PointerConfig) -> f64 {
    disturbance(cfg.delta_p(), 0.5).expect("delta_p validated by PointerConfig")
}

/// Alice's ordered pointer readings.
#[derive(Debug, Clone, PartialEq)]
pub struct Code {
    pub readings: Vec<f64>,
}

impl Code {
    pub fn len(&self) -> usize {
        self.readings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.readings.is_empty()
    }
}

/// An ordered list of outcome bits, with the measured axis recorded per
/// entry when the measuring party mixes axes (Protocol 2).
#[derive(Debug, Clone, PartialEq)]
pub struct Key {
    bits: Vec<u8>,
    axes: Option<Vec<Axis>>,
}

impl Key {
    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(invalid("key bits must be 0 or 1"));
        }
        Ok(Key { bits, axes: None })
    }

    pub fn with_axes(bits: Vec<u8>, axes: Vec<Axis>) -> Result<Self> {
        if bits.len() != axes.len() {
            return Err(invalid("key bits and axes must have equal length"));
        }
        let mut key = Key::from_bits(bits)?;
        key.axes = Some(axes);
        Ok(key)
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn axes(&self) -> Option<&[Axis]> {
        self.axes.as_deref()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Fraction of 1-bits; NaN for an empty key.
    pub fn ones_fraction(&self) -> f64 {
        if self.bits.is_empty() {
            return f64::NAN;
        }
        self.bits.iter().map(|&b| b as usize).sum::<usize>() as f64 / self.bits.len() as f64
    }
}

/// An ordered sample of spins with a consumed flag enforcing that honest
/// parties strong-measure each spin at most once.
#[derive(Debug, Clone)]
pub struct SpinRegister {
    spins: Vec<QubitState>,
    consumed: Vec<bool>,
}

impl SpinRegister {
    pub fn new(spins: Vec<QubitState>) -> Self {
        let consumed = vec![false; spins.len()];
        SpinRegister { spins, consumed }
    }

    pub fn len(&self) -> usize {
        self.spins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spins.is_empty()
    }

    pub fn states(&self) -> &[QubitState] {
        &self.spins
    }

    pub fn is_consumed(&self, index: usize) -> bool {
        self.consumed[index]
    }

    /// Strong-measure one spin, collapsing it in place.
    pub fn measure_one(
        &mut self,
        index: usize,
        obs: &SpinObservable,
        rng: &mut RandomStream,
    ) -> Result<Outcome> {
        if index >= self.spins.len() {
            return Err(invalid(format!("spin index {index} out of range")));
        }
        if self.consumed[index] {
            return Err(Error::ProtocolViolation(format!(
                "spin {index} was already strongly measured"
            )));
        }
        let (outcome, collapsed) = obs.measure(&self.spins[index], rng);
        self.spins[index] = collapsed;
        self.consumed[index] = true;
        Ok(outcome)
    }

    /// Strong-measure every spin along one axis, in label order. Fails
    /// before touching anything if any spin was already consumed.
    pub fn measure_all(
        &mut self,
        obs: &SpinObservable,
        rng: &mut RandomStream,
    ) -> Result<Vec<Outcome>> {
        if self.consumed.iter().any(|&c| c) {
            return Err(Error::ProtocolViolation(
                "register contains already-measured spins".into(),
            ));
        }
        (0..self.spins.len())
            .map(|i| self.measure_one(i, obs, rng))
            .collect()
    }

    pub(crate) fn into_states(self) -> Vec<QubitState> {
        self.spins
    }
}

/// Result of binning a code by a key and picking the nearest hypothesis.
///
/// Bin 1 collects readings whose key bit is 1 (outcome "up"). `stderr` is
/// the pointer convention `delta_p / sqrt(n_bin)`. The per-hypothesis score
/// is `S(h) = ((mean1 - mu1)/se1)^2 + ((mean0 - mu0)/se0)^2`; the decision
/// is the smaller score unless the gap is inside [`INCONCLUSIVE_BAND`] or a
/// bin is thinner than [`MIN_BIN_SIZE`]. Means of empty bins are NaN.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecodeReport {
    pub mean_bin1: f64,
    pub mean_bin0: f64,
    pub stderr_bin1: f64,
    pub stderr_bin0: f64,
    pub n_bin1: usize,
    pub n_bin0: usize,
    pub decision: Decision,
    pub score_yes: f64,
    pub score_no: f64,
}

/// Protocol 2 tamper check summary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecurityReport {
    pub n_x_checked: usize,
    pub n_x_flipped: usize,
    /// Honest flip probability D for the run's pointer width.
    pub expected_flip_rate: f64,
    pub alarm: bool,
    pub alarm_threshold: usize,
}

fn bin_summary(values: &[f64], delta_p: f64) -> (usize, f64, f64) {
    let n = values.len();
    if n == 0 {
        return (0, f64::NAN, f64::NAN);
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    (n, mean, delta_p / (n as f64).sqrt())
}

fn decide(
    bin1: &[f64],
    bin0: &[f64],
    cfg: &PointerConfig,
    yes_centers: (f64, f64),
    no_centers: (f64, f64),
) -> DecodeReport {
    let (n1, mean1, se1) = bin_summary(bin1, cfg.delta_p());
    let (n0, mean0, se0) = bin_summary(bin0, cfg.delta_p());
    let score = |centers: (f64, f64)| -> f64 {
        ((mean1 - centers.0) / se1).powi(2) + ((mean0 - centers.1) / se0).powi(2)
    };
    let (score_yes, score_no) = if n1 > 0 && n0 > 0 {
        (score(yes_centers), score(no_centers))
    } else {
        (f64::NAN, f64::NAN)
    };
    let decision = if n1 < MIN_BIN_SIZE
        || n0 < MIN_BIN_SIZE
        || (score_yes - score_no).abs() < INCONCLUSIVE_BAND
    {
        Decision::Inconclusive
    } else if score_yes < score_no {
        Decision::Yes
    } else {
        Decision::No
    };
    DecodeReport {
        mean_bin1: mean1,
        mean_bin0: mean0,
        stderr_bin1: se1,
        stderr_bin0: se0,
        n_bin1: n1,
        n_bin0: n0,
        decision,
        score_yes,
        score_no,
    }
}

fn split_by_bits(code: &Code, bits: &[u8]) -> (Vec<f64>, Vec<f64>) {
    let mut bin1 = Vec::new();
    let mut bin0 = Vec::new();
    for (&p, &bit) in code.readings.iter().zip(bits) {
        if bit == 1 {
            bin1.push(p);
        } else {
            bin0.push(p);
        }
    }
    (bin1, bin0)
}

/// Protocol 1, Alice's turn: prepare n spins in |x+>, weakly probe each
/// along (x+y)/sqrt2, and record the readings as the code.
pub fn p1_alice_encode(
    n: usize,
    cfg: &PointerConfig,
    rng: &mut RandomStream,
) -> (SpinRegister, Code) {
    encode_with(n, &weak_probe_observable(), cfg, rng)
}

fn encode_with(
    n: usize,
    obs: &SpinObservable,
    cfg: &PointerConfig,
    rng: &mut RandomStream,
) -> (SpinRegister, Code) {
    let pre = QubitState::x_plus();
    let mut spins = Vec::with_capacity(n);
    let mut readings = Vec::with_capacity(n);
    for _ in 0..n {
        let r = sample_weak_reading(&pre, obs, cfg, rng);
        readings.push(r.p);
        spins.push(r.post_state);
    }
    (SpinRegister::new(spins), Code { readings })
}

/// Protocol 1, Bob's turn: strong-measure every spin along y ("yes") or z
/// ("no") and publish the outcome bits, 1 for "up".
pub fn p1_bob_respond(
    reg: &mut SpinRegister,
    message: Message,
    rng: &mut RandomStream,
) -> Result<Key> {
    let axis = bob_response_axis(message);
    let outcomes = reg.measure_all(&axis, rng)?;
    Key::from_bits(outcomes.iter().map(|o| o.bit()).collect())
}

/// Protocol 1, Alice's decode: bin the code by the key and pick the
/// nearest hypothesis, "yes" = (sqrt2/(1+2D), 0) vs "no" =
/// (1/sqrt2, 1/sqrt2).
pub fn p1_alice_decode(code: &Code, key: &Key, cfg: &PointerConfig) -> Result<DecodeReport> {
    if code.len() != key.len() {
        return Err(invalid(format!(
            "code length {} does not match key length {}",
            code.len(),
            key.len()
        )));
    }
    let (bin1, bin0) = split_by_bits(code, key.bits());
    let d = protocol_disturbance(cfg);
    let eccentric = SQRT_2 / (1.0 + 2.0 * d);
    Ok(decide(
        &bin1,
        &bin0,
        cfg,
        (eccentric, 0.0),
        (FRAC_1_SQRT_2, FRAC_1_SQRT_2),
    ))
}

/// Protocol 2, Alice's turn: as [`p1_alice_encode`] but the probed
/// observable carries the message.
pub fn p2_alice_encode(
    n: usize,
    cfg: &PointerConfig,
    message: Message,
    rng: &mut RandomStream,
) -> (SpinRegister, Code) {
    encode_with(n, &alice_signal_observable(message), cfg, rng)
}

/// Protocol 2, Bob's turn: per spin, a fair coin picks x (tamper check) or
/// y (decode); one uniform for the coin, then one for the measurement.
///
/// The x outcomes feed the [`SecurityReport`] with alarm threshold
/// `ceil(D n_x + 5 max(sqrt(D n_x), 1))`. The y outcomes bin the code;
/// "yes" puts the eccentric mean in bin 1, "no" in bin 0. Bob must take
/// possession of the register before the code circulates further, so this
/// consumes the spins and the caller only releases the code afterwards.
pub fn p2_bob_decode(
    reg: &mut SpinRegister,
    code: &Code,
    cfg: &PointerConfig,
    rng: &mut RandomStream,
) -> Result<(DecodeReport, SecurityReport, Key)> {
    if reg.len() != code.len() {
        return Err(invalid(format!(
            "register length {} does not match code length {}",
            reg.len(),
            code.len()
        )));
    }
    let n = reg.len();
    let mut bits = Vec::with_capacity(n);
    let mut axes = Vec::with_capacity(n);
    let mut bin1 = Vec::new();
    let mut bin0 = Vec::new();
    let mut n_x = 0usize;
    let mut flipped = 0usize;
    for i in 0..n {
        let axis = if rng.uniform() < 0.5 { Axis::X } else { Axis::Y };
        let outcome = reg.measure_one(i, &axis.observable(), rng)?;
        bits.push(outcome.bit());
        axes.push(axis);
        match axis {
            Axis::X => {
                n_x += 1;
                if outcome == Outcome::Minus {
                    flipped += 1;
                }
            }
            Axis::Y => {
                if outcome == Outcome::Plus {
                    bin1.push(code.readings[i]);
                } else {
                    bin0.push(code.readings[i]);
                }
            }
            Axis::Z => unreachable!(),
        }
    }

    let d = protocol_disturbance(cfg);
    let expected = d * n_x as f64;
    let alarm_threshold = (expected + 5.0 * expected.sqrt().max(1.0)).ceil() as usize;
    let security = SecurityReport {
        n_x_checked: n_x,
        n_x_flipped: flipped,
        expected_flip_rate: d,
        alarm: flipped > alarm_threshold,
        alarm_threshold,
    };

    let eccentric = SQRT_2 / (1.0 + 2.0 * d);
    let decode = decide(&bin1, &bin0, cfg, (eccentric, 0.0), (0.0, eccentric));
    let key = Key::with_axes(bits, axes)?;
    Ok((decode, security, key))
}
