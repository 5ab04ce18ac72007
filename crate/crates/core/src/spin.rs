//! Exact single-qubit linear algebra: states, spin observables, Born
//! probabilities, and strong projective measurement.
//!
//! States are stored as complex amplitude pairs so that complex weak values
//! fall straight out of overlap ratios; the Bloch vector is a derived view.
//! Equality is physical, i.e. up to a global phase.

use num_complex::Complex64;

use crate::error::{invalid, Result};
use crate::stats::RandomStream;

const NORM_TOL: f64 = 1e-12;
const DIRECTION_TOL: f64 = 1e-9;
/// Overlap magnitudes below this are treated as orthogonality.
pub(crate) const ORTHOGONAL_TOL: f64 = 1e-12;

/// Outcome of a projective spin measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Plus,
    Minus,
}

impl Outcome {
    pub fn value(self) -> f64 {
        match self {
            Outcome::Plus => 1.0,
            Outcome::Minus => -1.0,
        }
    }

    /// Key-bit convention: 1 for "up", 0 for "down".
    pub fn bit(self) -> u8 {
        match self {
            Outcome::Plus => 1,
            Outcome::Minus => 0,
        }
    }

    pub fn flip(self) -> Outcome {
        match self {
            Outcome::Plus => Outcome::Minus,
            Outcome::Minus => Outcome::Plus,
        }
    }
}

/// A Cartesian measurement axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub fn direction(self) -> [f64; 3] {
        match self {
            Axis::X => [1.0, 0.0, 0.0],
            Axis::Y => [0.0, 1.0, 0.0],
            Axis::Z => [0.0, 0.0, 1.0],
        }
    }

    pub fn observable(self) -> SpinObservable {
        SpinObservable { direction: self.direction() }
    }
}

/// A normalized pure state of one spin-1/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState {
    up: Complex64,
    down: Complex64,
}

impl QubitState {
    /// Build from amplitudes; rejects vectors whose norm is off by more
    /// than 1e-6 and renormalizes the rest to machine precision.
    pub fn new(up: Complex64, down: Complex64) -> Result<Self> {
        let norm_sq = up.norm_sqr() + down.norm_sqr();
        if !(norm_sq.is_finite()) || (norm_sq - 1.0).abs() > 1e-6 {
            return Err(invalid(format!(
                "qubit amplitudes must be normalized, |psi|^2 = {norm_sq}"
            )));
        }
        let norm = norm_sq.sqrt();
        Ok(QubitState { up: up / norm, down: down / norm })
    }

    pub(crate) fn from_unnormalized(up: Complex64, down: Complex64) -> Result<Self> {
        let norm = (up.norm_sqr() + down.norm_sqr()).sqrt();
        if !(norm.is_finite() && norm > 1e-150) {
            return Err(invalid("cannot normalize a null state vector"));
        }
        Ok(QubitState { up: up / norm, down: down / norm })
    }

    /// The +1 eigenstate of `direction . sigma` (unit direction required).
    pub fn from_bloch(direction: [f64; 3]) -> Result<Self> {
        let obs = SpinObservable::new(direction)?;
        Ok(obs.eigenstate(Outcome::Plus))
    }

    /// The +x eigenstate, the protocols' standard preparation.
    pub fn x_plus() -> Self {
        let a = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        QubitState { up: a, down: a }
    }

    pub fn amplitude_up(&self) -> Complex64 {
        self.up
    }

    pub fn amplitude_down(&self) -> Complex64 {
        self.down
    }

    /// `<self|ket>`.
    pub fn overlap(&self, ket: &QubitState) -> Complex64 {
        self.up.conj() * ket.up + self.down.conj() * ket.down
    }

    /// The Bloch vector (unit length for a normalized state).
    pub fn bloch_vector(&self) -> [f64; 3] {
        let cross = self.up.conj() * self.down;
        [
            2.0 * cross.re,
            2.0 * cross.im,
            self.up.norm_sqr() - self.down.norm_sqr(),
        ]
    }

    /// Physical equality: `| |<a|b>| - 1 | < 1e-9`, i.e. equality up to a
    /// global phase.
    pub fn equiv(&self, other: &QubitState) -> bool {
        (self.overlap(other).norm() - 1.0).abs() < 1e-9
    }

    pub(crate) fn norm_sqr(&self) -> f64 {
        self.up.norm_sqr() + self.down.norm_sqr()
    }
}

/// A spin observable `n . sigma` for a unit Bloch direction `n`; its
/// eigenvalues are exactly +-1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinObservable {
    direction: [f64; 3],
}

impl SpinObservable {
    /// Build from a direction; must be unit length within 1e-9.
    pub fn new(direction: [f64; 3]) -> Result<Self> {
        let norm = (direction[0].powi(2) + direction[1].powi(2) + direction[2].powi(2)).sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > DIRECTION_TOL {
            return Err(invalid(format!(
                "observable direction must be a unit vector, |n| = {norm}"
            )));
        }
        Ok(SpinObservable {
            direction: [
                direction[0] / norm,
                direction[1] / norm,
                direction[2] / norm,
            ],
        })
    }

    pub fn sigma_x() -> Self {
        Axis::X.observable()
    }

    pub fn sigma_y() -> Self {
        Axis::Y.observable()
    }

    pub fn sigma_z() -> Self {
        Axis::Z.observable()
    }

    pub fn bloch_direction(&self) -> [f64; 3] {
        self.direction
    }

    /// The eigenstate for the given outcome, in a fixed phase convention:
    /// the +1 eigenvector has non-negative real up amplitude, with the tie
    /// (zero up amplitude) resolved to non-negative real down amplitude.
    /// The -1 eigenvector is the +1 eigenvector of the reversed direction.
    pub fn eigenstate(&self, outcome: Outcome) -> QubitState {
        let [mut nx, mut ny, mut nz] = self.direction;
        if outcome == Outcome::Minus {
            nx = -nx;
            ny = -ny;
            nz = -nz;
        }
        if 1.0 + nz <= 1e-15 {
            return QubitState {
                up: Complex64::new(0.0, 0.0),
                down: Complex64::new(1.0, 0.0),
            };
        }
        let up = ((1.0 + nz) / 2.0).sqrt();
        let down = Complex64::new(nx, ny) / (2.0 * (1.0 + nz)).sqrt();
        QubitState { up: Complex64::new(up, 0.0), down }
    }

    /// Apply `n . sigma` to a state, returning raw (unnormalized) amplitudes.
    pub fn apply(&self, state: &QubitState) -> (Complex64, Complex64) {
        let [nx, ny, nz] = self.direction;
        let off = Complex64::new(nx, -ny);
        (
            nz * state.up + off * state.down,
            off.conj() * state.up - nz * state.down,
        )
    }

    /// `<state| n.sigma |state>`, computed as the Bloch dot product.
    pub fn expectation(&self, state: &QubitState) -> f64 {
        let b = state.bloch_vector();
        b[0] * self.direction[0] + b[1] * self.direction[1] + b[2] * self.direction[2]
    }

    /// `1 - <n.sigma>^2`, in [0, 1].
    pub fn variance(&self, state: &QubitState) -> f64 {
        (1.0 - self.expectation(state).powi(2)).clamp(0.0, 1.0)
    }

    /// Born probability of the given outcome. `P(+1) + P(-1) = 1` exactly.
    pub fn born_probability(&self, state: &QubitState, outcome: Outcome) -> f64 {
        let p_plus = (0.5 * (1.0 + self.expectation(state))).clamp(0.0, 1.0);
        match outcome {
            Outcome::Plus => p_plus,
            Outcome::Minus => 1.0 - p_plus,
        }
    }

    /// Strong projective measurement. Consumes one uniform draw; the
    /// collapsed state is the eigenstate matching the outcome.
    pub fn measure(&self, state: &QubitState, rng: &mut RandomStream) -> (Outcome, QubitState) {
        let p_plus = self.born_probability(state, Outcome::Plus);
        let outcome = if rng.uniform() < p_plus {
            Outcome::Plus
        } else {
            Outcome::Minus
        };
        (outcome, self.eigenstate(outcome))
    }
}

/// Sanity check used by constructors in other modules.
pub(crate) fn check_normalized(state: &QubitState) -> Result<()> {
    if (state.norm_sqr() - 1.0).abs() > NORM_TOL {
        return Err(invalid("state drifted out of normalization"));
    }
    Ok(())
}
