//! Seeded projective measurement of ±1 observables.
//!
//! Two protocols are implemented for the GHZ observables. A product-revealing
//! measurement projects with (I ± A)/2, exposing only the product of the three
//! spins: the GHZ state is a joint eigenstate of all four observables, so
//! repeated product measurements are pinned. A spin-revealing measurement
//! performs the three constituent single-particle measurements instead; the
//! individual outcomes collapse the state to a product state, after which a
//! different observable's product is no longer pinned. This is the ordering
//! effect the statistics operations demonstrate.
//!
//! Randomness contract: every trial draws from a `ChaCha8Rng` seeded with the
//! 64-bit master seed, with the ChaCha stream id set to
//! `(run_index << 32) | trial_index`. Identical seeds reproduce identical
//! records bit-for-bit on any platform.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ghz::{ghz_observable, ghz_state, ObservableLabel};
use crate::linalg::{Complex64, ComplexMatrix, ComplexVector};
use crate::pauli::{embed, pauli};

/// Name of the generator and stream-splitting scheme, echoed in reports.
pub const RNG_ALGORITHM: &str = "chacha8(seed = master, stream = run<<32 | trial)";

/// Probabilities closer to 0 than this are treated as exactly 0, so sampling
/// never lands on a numerically null branch.
pub const PROB_FLOOR: f64 = 1e-15;

/// Deterministic per-trial generator; trials are independent streams.
pub fn trial_rng(master_seed: u64, run_index: u32, trial_index: u64) -> ChaCha8Rng {
    assert!(trial_index < (1 << 32), "trial index must fit in 32 bits");
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(((run_index as u64) << 32) | trial_index);
    rng
}

#[derive(Debug, Error, PartialEq)]
pub enum MeasureError {
    /// A branch with probability below [`PROB_FLOOR`] was selected; this
    /// signals an internal sampling bug, not bad input.
    #[error(
        "selected measurement branch has probability {probability:.3e}, below {PROB_FLOOR:.0e}"
    )]
    DegenerateBranch { probability: f64 },
}

fn clamp_pair(expectation: f64) -> (f64, f64) {
    let clamp = |p: f64| {
        if p < PROB_FLOOR {
            0.0
        } else if p > 1.0 - PROB_FLOOR {
            1.0
        } else {
            p
        }
    };
    (
        clamp((1.0 + expectation) / 2.0),
        clamp((1.0 - expectation) / 2.0),
    )
}

/// Branch probabilities (p₊, p₋) for a ±1 observable via ⟨(I ± A)/2⟩,
/// floored at [`PROB_FLOOR`].
pub fn branch_probabilities(state: &ComplexVector, observable: &ComplexMatrix) -> (f64, f64) {
    clamp_pair(state.inner(&(observable * state)).re)
}

/// Picks +1 or −1 from one uniform draw against cumulative probabilities.
/// The +1 branch is indexed first; a draw equal to the boundary goes to the
/// lower-indexed outcome. Branches floored to 0 are never selected.
fn sample_sign(p_plus: f64, p_minus: f64, rng: &mut impl Rng) -> i8 {
    let u: f64 = rng.random();
    if p_plus > 0.0 && u <= p_plus {
        1
    } else if p_minus > 0.0 {
        -1
    } else {
        1
    }
}

/// Projects onto the ±1 eigenspace of `observable` and renormalizes.
/// Returns the branch probability alongside the collapsed state.
pub fn project_branch(
    state: &ComplexVector,
    observable: &ComplexMatrix,
    sign: i8,
) -> Result<(f64, ComplexVector), MeasureError> {
    let (p_plus, p_minus) = branch_probabilities(state, observable);
    let probability = if sign >= 0 { p_plus } else { p_minus };
    if probability < PROB_FLOOR {
        return Err(MeasureError::DegenerateBranch { probability });
    }
    let signed = (observable * state).scale(Complex64::new(sign as f64, 0.0));
    let projected = (state + &signed).scale(Complex64::new(0.5, 0.0));
    Ok((probability, projected.normalized()))
}

/// Born-rule measurement of a ±1 observable. Works for the joint GHZ
/// observables and for embedded single-particle operators alike.
pub fn measure_observable(
    state: &ComplexVector,
    observable: &ComplexMatrix,
    rng: &mut impl Rng,
) -> Result<(i8, ComplexVector), MeasureError> {
    let applied = observable * state;
    let (p_plus, p_minus) = clamp_pair(state.inner(&applied).re);
    let sign = sample_sign(p_plus, p_minus, rng);
    let probability = if sign >= 0 { p_plus } else { p_minus };
    if probability < PROB_FLOOR {
        return Err(MeasureError::DegenerateBranch { probability });
    }
    let signed = applied.scale(Complex64::new(sign as f64, 0.0));
    let collapsed = (state + &signed)
        .scale(Complex64::new(0.5, 0.0))
        .normalized();
    Ok((sign, collapsed))
}

/// Projective measurement of a single particle's 2×2 operator inside an
/// `n`-particle state.
pub fn measure_single(
    state: &ComplexVector,
    particle: usize,
    op: &ComplexMatrix,
    rng: &mut impl Rng,
) -> Result<(i8, ComplexVector), MeasureError> {
    let n = state.dim().trailing_zeros() as usize;
    measure_observable(state, &embed(op, particle, n), rng)
}

/// How an observable's value is extracted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Protocol {
    /// Joint measurement exposing only the spin product.
    ProductRevealing,
    /// Sequential per-particle spin measurements in the declared order.
    /// Operators on different particles commute, so the order only fixes the
    /// record layout, not the distribution.
    SpinRevealing { order: [usize; 3] },
}

impl std::fmt::Display for Protocol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Protocol::ProductRevealing => write!(f, "product"),
            Protocol::SpinRevealing { order } => {
                write!(f, "spin({},{},{})", order[0], order[1], order[2])
            }
        }
    }
}

impl Protocol {
    /// Spin-revealing with the default particle order 1, 2, 3.
    pub fn spin_revealing() -> Self {
        Protocol::SpinRevealing { order: [1, 2, 3] }
    }

    pub fn is_spin_revealing(&self) -> bool {
        matches!(self, Protocol::SpinRevealing { .. })
    }

    fn validate(&self) {
        if let Protocol::SpinRevealing { order } = self {
            let mut seen = [false; 3];
            for &p in order {
                assert!((1..=3).contains(&p), "particle order must cover 1..=3");
                assert!(!seen[p - 1], "particle order must be a permutation");
                seen[p - 1] = true;
            }
        }
    }
}

/// One executed measurement step.
#[derive(Debug, Clone)]
pub struct MeasurementRecord {
    pub label: ObservableLabel,
    pub protocol: Protocol,
    /// The observable's value: the joint outcome, or the product of the
    /// individual spins under spin revelation.
    pub product: i8,
    /// Individual outcomes by particle (spin-revealing only).
    pub spins: Option<[i8; 3]>,
    pub post_state: ComplexVector,
}

/// Executes the steps left to right, threading the collapsed state through.
pub fn run_protocol(
    state: &ComplexVector,
    steps: &[(ObservableLabel, Protocol)],
    rng: &mut impl Rng,
) -> Result<Vec<MeasurementRecord>, MeasureError> {
    let mut current = state.clone();
    let mut records = Vec::with_capacity(steps.len());
    for &(label, protocol) in steps {
        protocol.validate();
        let record = match protocol {
            Protocol::ProductRevealing => {
                let obs = ghz_observable(label);
                let (product, next) = measure_observable(&current, &obs.matrix, rng)?;
                current = next;
                MeasurementRecord {
                    label,
                    protocol,
                    product,
                    spins: None,
                    post_state: current.clone(),
                }
            }
            Protocol::SpinRevealing { order } => {
                let axes = label.axes();
                let mut spins = [0i8; 3];
                for &particle in &order {
                    let op = pauli(axes[particle - 1]);
                    let (spin, next) = measure_single(&current, particle, &op, rng)?;
                    spins[particle - 1] = spin;
                    current = next;
                }
                MeasurementRecord {
                    label,
                    protocol,
                    product: spins.iter().product(),
                    spins: Some(spins),
                    post_state: current.clone(),
                }
            }
        };
        records.push(record);
    }
    Ok(records)
}

/// A repeated-trials experiment over a fixed step sequence.
#[derive(Debug, Clone)]
pub struct ProtocolSpec {
    pub steps: Vec<(ObservableLabel, Protocol)>,
    pub trials: u64,
    pub seed: u64,
}

/// Per-step outcome frequencies plus joint product-tuple counts.
#[derive(Debug, Clone)]
pub struct OutcomeStatistics {
    pub trials: u64,
    /// (label, protocol, count of +1 products) per step.
    pub steps: Vec<StepStatistics>,
    /// Counts of full product tuples across the sequence.
    pub joint_counts: BTreeMap<Vec<i8>, u64>,
}

#[derive(Debug, Clone)]
pub struct StepStatistics {
    pub label: ObservableLabel,
    pub protocol: Protocol,
    pub plus_count: u64,
}

impl OutcomeStatistics {
    pub fn plus_frequency(&self, step: usize) -> f64 {
        self.steps[step].plus_count as f64 / self.trials as f64
    }

    pub fn joint_frequency(&self, products: &[i8]) -> f64 {
        *self.joint_counts.get(products).unwrap_or(&0) as f64 / self.trials as f64
    }
}

/// Runs `trials` independent repetitions of the step sequence on fresh GHZ
/// states; trial i draws from `trial_rng(seed, 0, i)`, so the statistics are
/// a pure function of the [`ProtocolSpec`].
pub fn outcome_statistics(spec: &ProtocolSpec) -> Result<OutcomeStatistics, MeasureError> {
    assert!(spec.trials >= 1, "at least one trial required");
    let psi = ghz_state();
    let mut steps: Vec<StepStatistics> = spec
        .steps
        .iter()
        .map(|&(label, protocol)| StepStatistics {
            label,
            protocol,
            plus_count: 0,
        })
        .collect();
    let mut joint_counts: BTreeMap<Vec<i8>, u64> = BTreeMap::new();

    for trial in 0..spec.trials {
        let mut rng = trial_rng(spec.seed, 0, trial);
        let records = run_protocol(&psi, &spec.steps, &mut rng)?;
        let tuple: Vec<i8> = records.iter().map(|r| r.product).collect();
        for (stat, record) in steps.iter_mut().zip(&records) {
            if record.product == 1 {
                stat.plus_count += 1;
            }
        }
        *joint_counts.entry(tuple).or_insert(0) += 1;
    }

    Ok(OutcomeStatistics {
        trials: spec.trials,
        steps,
        joint_counts,
    })
}
