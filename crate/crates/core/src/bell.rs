//! Cross-correlations of ±1 datasets, the dataset inequalities they satisfy
//! identically, and the Monte Carlo experiments that probe them.
//!
//! The two inequality forms are pure arithmetic over common-index data:
//! for any three equal-length ±1 sequences, aₖbₖ − aₖcₖ = aₖbₖ(1 − bₖcₖ)
//! holds per index because bₖ² = 1, so |⟨ab⟩ − ⟨ac⟩| ≤ 1 − ⟨bc⟩ always; the
//! four-dataset combination is bounded by 2 the same way. No assumption about
//! where the data came from enters.
//!
//! The experiments contrast two ways of producing the correlations:
//!
//! * [`independent_runs_bell3`] / [`independent_runs_chsh`] estimate each
//!   correlation from a separate singlet run with disjoint RNG streams, then
//!   plug the estimates into the inequality form. Nothing forces the result
//!   to satisfy the bound, and at the stock angles it does not.
//! * [`lhv_common_run`] draws one hidden direction per trial, evaluates every
//!   analyzer on it, and feeds genuinely common-index datasets to the same
//!   form. The bound then holds by arithmetic, while the pairwise correlation
//!   function is linear in the analyzer separation instead of cosinusoidal —
//!   [`form_compare`] classifies the two shapes.
//!
//! Dataset-label convention: a singlet pair measured at equal analyzer angles
//! is perfectly anticorrelated, so the independent-runs experiments identify
//! "the dataset for angle θ" across runs via A(θ) = −B(θ), negating the
//! second particle's outcomes when labeling. Correlation tables always report
//! the raw particle-1 × particle-2 product mean.

use std::f64::consts::{PI, TAU};

use rand::Rng;
use thiserror::Error;

use crate::linalg::{Complex64, ComplexVector};
use crate::measurement::{measure_observable, trial_rng, MeasureError};
use crate::pauli::{embed, pauli_in_plane};

#[derive(Debug, Error, PartialEq)]
pub enum BellError {
    #[error("datasets '{a}' ({len_a}) and '{b}' ({len_b}) differ in length; cross-correlation needs a common index")]
    LengthMismatch {
        a: String,
        b: String,
        len_a: usize,
        len_b: usize,
    },
    #[error("dataset '{label}' is empty")]
    EmptyDataset { label: String },
    #[error("dataset '{label}' has value {value} at index {index}; entries must be +1 or -1")]
    InvalidValue {
        label: String,
        index: usize,
        value: i8,
    },
    #[error("expected {expected} analyzer angles, got {got}")]
    AngleCount { expected: usize, got: usize },
    #[error("analyzer angles must be finite")]
    NonFiniteAngle,
    #[error("trial count must be at least 1")]
    NoTrials,
    #[error("form comparison needs at least 3 distinct angle separations, got {got}")]
    FewDeltas { got: usize },
    #[error(transparent)]
    Measure(#[from] MeasureError),
}

/// A labeled sequence of ±1 outcomes.
#[derive(Debug, Clone, PartialEq)]
pub struct OutcomeDataset {
    label: String,
    values: Vec<i8>,
}

impl OutcomeDataset {
    pub fn new(label: impl Into<String>, values: Vec<i8>) -> Result<Self, BellError> {
        let label = label.into();
        if values.is_empty() {
            return Err(BellError::EmptyDataset { label });
        }
        for (index, &value) in values.iter().enumerate() {
            if value != 1 && value != -1 {
                return Err(BellError::InvalidValue {
                    label,
                    index,
                    value,
                });
            }
        }
        Ok(Self { label, values })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // rejected at construction
    }

    /// Same values with every sign flipped.
    pub fn negated(&self, label: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            values: self.values.iter().map(|v| -v).collect(),
        }
    }
}

/// An estimated cross-correlation ⟨ab⟩ = (1/N)Σ aₖbₖ.
#[derive(Debug, Clone)]
pub struct CorrelationEstimate {
    pub labels: (String, String),
    pub value: f64,
    pub samples: usize,
    /// Nominal standard error 1/√N.
    pub std_error: f64,
}

fn require_common_index(a: &OutcomeDataset, b: &OutcomeDataset) -> Result<(), BellError> {
    if a.len() != b.len() {
        return Err(BellError::LengthMismatch {
            a: a.label.clone(),
            b: b.label.clone(),
            len_a: a.len(),
            len_b: b.len(),
        });
    }
    Ok(())
}

fn product_sum(a: &OutcomeDataset, b: &OutcomeDataset) -> i64 {
    a.values
        .iter()
        .zip(&b.values)
        .map(|(&x, &y)| (x as i64) * (y as i64))
        .sum()
}

/// Mean per-index product of two common-index datasets.
pub fn cross_correlation(
    a: &OutcomeDataset,
    b: &OutcomeDataset,
) -> Result<CorrelationEstimate, BellError> {
    require_common_index(a, b)?;
    let n = a.len();
    Ok(CorrelationEstimate {
        labels: (a.label.clone(), b.label.clone()),
        value: product_sum(a, b) as f64 / n as f64,
        samples: n,
        std_error: 1.0 / (n as f64).sqrt(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InequalityForm {
    Bell3,
    Chsh4,
}

impl std::fmt::Display for InequalityForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InequalityForm::Bell3 => write!(f, "bell3"),
            InequalityForm::Chsh4 => write!(f, "chsh"),
        }
    }
}

/// An evaluated inequality: satisfied ⇔ lhs ≤ rhs + tolerance.
#[derive(Debug, Clone)]
pub struct InequalityReport {
    pub form: InequalityForm,
    pub lhs: f64,
    pub rhs: f64,
    pub tolerance: f64,
    pub satisfied: bool,
    pub inputs: Vec<CorrelationEstimate>,
}

/// Nominal tolerance attached to inequality verdicts; the common-index
/// evaluations are decided in exact integer arithmetic regardless.
pub const INEQUALITY_TOL: f64 = 1e-12;

/// Three-dataset form |⟨ab⟩ − ⟨ac⟩| ≤ 1 − ⟨bc⟩ on common-index data.
/// The verdict is computed on integer sums, so it is exact.
pub fn bell3_evaluate(
    a: &OutcomeDataset,
    b: &OutcomeDataset,
    c: &OutcomeDataset,
) -> Result<InequalityReport, BellError> {
    require_common_index(a, b)?;
    require_common_index(a, c)?;
    let n = a.len() as i64;
    let sab = product_sum(a, b);
    let sac = product_sum(a, c);
    let sbc = product_sum(b, c);
    let satisfied = (sab - sac).abs() <= n - sbc;
    Ok(InequalityReport {
        form: InequalityForm::Bell3,
        lhs: (sab - sac).abs() as f64 / n as f64,
        rhs: (n - sbc) as f64 / n as f64,
        tolerance: INEQUALITY_TOL,
        satisfied,
        inputs: vec![
            cross_correlation(a, b)?,
            cross_correlation(a, c)?,
            cross_correlation(b, c)?,
        ],
    })
}

/// Largest per-index residual of aₖbₖ − aₖcₖ = aₖbₖ(1 − bₖcₖ), in exact
/// integer arithmetic. Zero for every common-index triple.
pub fn bell3_index_identity_residual(
    a: &OutcomeDataset,
    b: &OutcomeDataset,
    c: &OutcomeDataset,
) -> Result<i64, BellError> {
    require_common_index(a, b)?;
    require_common_index(a, c)?;
    Ok(a.values
        .iter()
        .zip(b.values.iter().zip(&c.values))
        .map(|(&ak, (&bk, &ck))| {
            let (ak, bk, ck) = (ak as i64, bk as i64, ck as i64);
            (ak * bk - ak * ck - ak * bk * (1 - bk * ck)).abs()
        })
        .max()
        .unwrap_or(0))
}

/// Four-dataset form |⟨ab⟩ + ⟨ab₂⟩ + ⟨a₂b⟩ − ⟨a₂b₂⟩| ≤ 2 on common-index
/// data; per index a(b + b₂) + a₂(b − b₂) = ±2. Verdict exact via integers.
pub fn chsh_evaluate(
    a: &OutcomeDataset,
    a2: &OutcomeDataset,
    b: &OutcomeDataset,
    b2: &OutcomeDataset,
) -> Result<InequalityReport, BellError> {
    require_common_index(a, a2)?;
    require_common_index(a, b)?;
    require_common_index(a, b2)?;
    let n = a.len() as i64;
    let s = product_sum(a, b) + product_sum(a, b2) + product_sum(a2, b) - product_sum(a2, b2);
    let satisfied = s.abs() <= 2 * n;
    Ok(InequalityReport {
        form: InequalityForm::Chsh4,
        lhs: s.abs() as f64 / n as f64,
        rhs: 2.0,
        tolerance: INEQUALITY_TOL,
        satisfied,
        inputs: vec![
            cross_correlation(a, b)?,
            cross_correlation(a, b2)?,
            cross_correlation(a2, b)?,
            cross_correlation(a2, b2)?,
        ],
    })
}

/// The two-particle singlet (|αβ⟩ − |βα⟩)/√2.
pub fn singlet_state() -> ComplexVector {
    let amp = 1.0 / 2f64.sqrt();
    let mut entries = vec![Complex64::new(0.0, 0.0); 4];
    entries[1] = Complex64::new(amp, 0.0);
    entries[2] = Complex64::new(-amp, 0.0);
    ComplexVector::new(entries)
}

/// Samples `pairs` independent singlet pairs, measuring the in-plane spin
/// component at `theta1_deg` on particle 1 and `theta2_deg` on particle 2.
/// Pair k draws from `trial_rng(seed, run_index, k)`, so distinct run indices
/// give disjoint streams. The expected raw correlation is −cos(θ₁ − θ₂);
/// equal angles anticorrelate exactly.
pub fn singlet_sample(
    theta1_deg: f64,
    theta2_deg: f64,
    pairs: u64,
    seed: u64,
    run_index: u32,
) -> Result<(OutcomeDataset, OutcomeDataset), BellError> {
    if !theta1_deg.is_finite() || !theta2_deg.is_finite() {
        return Err(BellError::NonFiniteAngle);
    }
    if pairs == 0 {
        return Err(BellError::NoTrials);
    }
    let psi = singlet_state();
    let op1 = embed(&pauli_in_plane(theta1_deg.to_radians()), 1, 2);
    let op2 = embed(&pauli_in_plane(theta2_deg.to_radians()), 2, 2);
    let mut first = Vec::with_capacity(pairs as usize);
    let mut second = Vec::with_capacity(pairs as usize);
    for k in 0..pairs {
        let mut rng = trial_rng(seed, run_index, k);
        let (s1, collapsed) = measure_observable(&psi, &op1, &mut rng)?;
        let (s2, _) = measure_observable(&collapsed, &op2, &mut rng)?;
        first.push(s1);
        second.push(s2);
    }
    Ok((
        OutcomeDataset::new(format!("p1@{theta1_deg}"), first)?,
        OutcomeDataset::new(format!("p2@{theta2_deg}"), second)?,
    ))
}

/// Analyzer angles (degrees), trial count per run, and master seed for an
/// inequality experiment. The pairing scheme is fixed by the experiment
/// function the config is handed to.
#[derive(Debug, Clone)]
pub struct AngleConfig {
    pub angles_deg: Vec<f64>,
    pub trials: u64,
    pub seed: u64,
}

impl AngleConfig {
    fn validate(&self, expected_angles: usize) -> Result<(), BellError> {
        if self.angles_deg.len() != expected_angles {
            return Err(BellError::AngleCount {
                expected: expected_angles,
                got: self.angles_deg.len(),
            });
        }
        if self.angles_deg.iter().any(|a| !a.is_finite()) {
            return Err(BellError::NonFiniteAngle);
        }
        if self.trials == 0 {
            return Err(BellError::NoTrials);
        }
        Ok(())
    }
}

/// Angle separation reduced to [0°, 180°].
pub fn reduce_delta_deg(theta1_deg: f64, theta2_deg: f64) -> f64 {
    let d = (theta1_deg - theta2_deg).abs().rem_euclid(360.0);
    if d > 180.0 {
        360.0 - d
    } else {
        d
    }
}

/// One row of a correlation table: the raw particle-1 × particle-2
/// correlation observed for an analyzer pair.
#[derive(Debug, Clone)]
pub struct CorrelationRow {
    pub pair: (String, String),
    pub delta_deg: f64,
    pub value: f64,
    pub samples: usize,
    pub std_error: f64,
}

/// Result of an inequality experiment: the evaluated form, the physical
/// correlation table, and the labeled datasets that produced it (suitable
/// for dumping and re-auditing).
#[derive(Debug, Clone)]
pub struct ExperimentOutcome {
    pub inequality: InequalityReport,
    pub table: Vec<CorrelationRow>,
    pub datasets: Vec<OutcomeDataset>,
    /// True when the experiment is expected to violate the bound.
    pub expect_violation: bool,
}

fn raw_row(
    pair: (&str, &str),
    delta_deg: f64,
    p1: &OutcomeDataset,
    p2: &OutcomeDataset,
) -> Result<CorrelationRow, BellError> {
    let est = cross_correlation(p1, p2)?;
    Ok(CorrelationRow {
        pair: (pair.0.to_string(), pair.1.to_string()),
        delta_deg,
        value: est.value,
        samples: est.samples,
        std_error: est.std_error,
    })
}

/// Three separate singlet runs estimate C(a,b), C(a,c) and C(b,c); the
/// estimates are plugged into the three-dataset form. Because no common
/// index ties the runs together, the form may be (and at the stock angles
/// 0°, 60°, 120° is) violated.
pub fn independent_runs_bell3(config: &AngleConfig) -> Result<ExperimentOutcome, BellError> {
    config.validate(3)?;
    let (ta, tb, tc) = (
        config.angles_deg[0],
        config.angles_deg[1],
        config.angles_deg[2],
    );

    let (ab_p1, ab_p2) = singlet_sample(ta, tb, config.trials, config.seed, 0)?;
    let (ac_p1, ac_p2) = singlet_sample(ta, tc, config.trials, config.seed, 1)?;
    let (bc_p1, bc_p2) = singlet_sample(tb, tc, config.trials, config.seed, 2)?;

    // Same-symbol identification across runs: A(θ) = −B(θ).
    let ab_a = OutcomeDataset::new("ab_a", ab_p1.values.clone())?;
    let ab_b = ab_p2.negated("ab_b");
    let ac_a = OutcomeDataset::new("ac_a", ac_p1.values.clone())?;
    let ac_c = ac_p2.negated("ac_c");
    let bc_b = OutcomeDataset::new("bc_b", bc_p1.values.clone())?;
    let bc_c = bc_p2.negated("bc_c");

    let cab = cross_correlation(&ab_a, &ab_b)?;
    let cac = cross_correlation(&ac_a, &ac_c)?;
    let cbc = cross_correlation(&bc_b, &bc_c)?;

    let lhs = (cab.value - cac.value).abs();
    let rhs = 1.0 - cbc.value;
    let inequality = InequalityReport {
        form: InequalityForm::Bell3,
        lhs,
        rhs,
        tolerance: INEQUALITY_TOL,
        satisfied: lhs <= rhs + INEQUALITY_TOL,
        inputs: vec![cab, cac, cbc],
    };

    let table = vec![
        raw_row(("a", "b"), reduce_delta_deg(ta, tb), &ab_p1, &ab_p2)?,
        raw_row(("a", "c"), reduce_delta_deg(ta, tc), &ac_p1, &ac_p2)?,
        raw_row(("b", "c"), reduce_delta_deg(tb, tc), &bc_p1, &bc_p2)?,
    ];

    Ok(ExperimentOutcome {
        inequality,
        table,
        datasets: vec![ab_a, ab_b, ac_a, ac_c, bc_b, bc_c],
        expect_violation: true,
    })
}

/// Four separate singlet runs estimate the CHSH combination
/// S = C(a,b) − C(a,b₂) + C(a₂,b) + C(a₂,b₂), with Alice angles (a, a₂)
/// taken from the first two entries of the config and Bob angles (b, b₂)
/// from the last two.
///
/// CHSH analyzer angles are conventionally quoted for polarization analyzers;
/// the spin sampler realizes a polarization angle θ as the in-plane direction
/// 2θ, so the stock quartet 0°, 45°, 22.5°, 67.5° reaches |S| = 2√2.
pub fn independent_runs_chsh(config: &AngleConfig) -> Result<ExperimentOutcome, BellError> {
    config.validate(4)?;
    let alice = [config.angles_deg[0], config.angles_deg[1]];
    let bob = [config.angles_deg[2], config.angles_deg[3]];

    let mut datasets = Vec::new();
    let mut estimates = Vec::new();
    let mut table = Vec::new();
    for (i, &x) in alice.iter().enumerate() {
        for (j, &y) in bob.iter().enumerate() {
            let run_index = (2 * i + j) as u32;
            let (p1, p2) = singlet_sample(2.0 * x, 2.0 * y, config.trials, config.seed, run_index)?;
            let tag = format!("a{}b{}", i + 1, j + 1);
            let da = OutcomeDataset::new(format!("{tag}_a{}", i + 1), p1.values.clone())?;
            let db = p2.negated(format!("{tag}_b{}", j + 1));
            estimates.push(cross_correlation(&da, &db)?);
            table.push(raw_row(
                (&format!("a{}", i + 1), &format!("b{}", j + 1)),
                reduce_delta_deg(2.0 * x, 2.0 * y),
                &p1,
                &p2,
            )?);
            datasets.push(da);
            datasets.push(db);
        }
    }

    // estimates[k]: k = 2i + j → [C(a,b), C(a,b2), C(a2,b), C(a2,b2)]
    let s = estimates[0].value - estimates[1].value + estimates[2].value + estimates[3].value;
    let inequality = InequalityReport {
        form: InequalityForm::Chsh4,
        lhs: s.abs(),
        rhs: 2.0,
        tolerance: INEQUALITY_TOL,
        satisfied: s.abs() <= 2.0 + INEQUALITY_TOL,
        inputs: estimates,
    };

    Ok(ExperimentOutcome {
        inequality,
        table,
        datasets,
        expect_violation: true,
    })
}

/// The bundled hidden-direction model: a trial carries a planar unit vector
/// at angle λ; a particle-1 analyzer at θ reads sign(cos(θ − λ)) and the
/// particle-2 analyzer reads the negative. The pairwise correlation is
/// 2Δ/π − 1 for separation Δ.
fn lhv_outcome(theta_rad: f64, lambda_rad: f64) -> i8 {
    if (theta_rad - lambda_rad).cos() >= 0.0 {
        1
    } else {
        -1
    }
}

/// One common run of the hidden-direction model over three analyzer angles.
///
/// Every trial evaluates all three analyzers on the same hidden direction,
/// producing genuinely common-index datasets: particle 1 at angle a, and
/// particle 2 at angles b and c. The three-dataset form on that triple is
/// satisfied identically. Note the third input ⟨bc⟩ correlates two same-side
/// datasets and is functionally different from the analyzer-pair correlations
/// in the table.
pub fn lhv_common_run(config: &AngleConfig) -> Result<ExperimentOutcome, BellError> {
    config.validate(3)?;
    let thetas_rad: Vec<f64> = config.angles_deg.iter().map(|d| d.to_radians()).collect();
    let n = config.trials as usize;

    let mut side1: Vec<Vec<i8>> = (0..3).map(|_| Vec::with_capacity(n)).collect();
    let mut side2: Vec<Vec<i8>> = (0..3).map(|_| Vec::with_capacity(n)).collect();
    for trial in 0..config.trials {
        let mut rng = trial_rng(config.seed, 0, trial);
        let lambda = rng.random::<f64>() * TAU;
        for (k, &theta) in thetas_rad.iter().enumerate() {
            let v = lhv_outcome(theta, lambda);
            side1[k].push(v);
            side2[k].push(-v);
        }
    }

    let a = OutcomeDataset::new("a", side1[0].clone())?;
    let b = OutcomeDataset::new("b", side2[1].clone())?;
    let c = OutcomeDataset::new("c", side2[2].clone())?;
    let inequality = bell3_evaluate(&a, &b, &c)?;

    let p1 = |k: usize| OutcomeDataset::new(format!("p1@{k}"), side1[k].clone());
    let p2 = |k: usize| OutcomeDataset::new(format!("p2@{k}"), side2[k].clone());
    let (ta, tb, tc) = (
        config.angles_deg[0],
        config.angles_deg[1],
        config.angles_deg[2],
    );
    let table = vec![
        raw_row(("a", "b"), reduce_delta_deg(ta, tb), &p1(0)?, &p2(1)?)?,
        raw_row(("a", "c"), reduce_delta_deg(ta, tc), &p1(0)?, &p2(2)?)?,
        raw_row(("b", "c"), reduce_delta_deg(tb, tc), &p1(1)?, &p2(2)?)?,
    ];

    Ok(ExperimentOutcome {
        inequality,
        table,
        datasets: vec![a, b, c],
        expect_violation: false,
    })
}

/// Functional forms a correlation table can be compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    /// −cos(Δ): the singlet correlation.
    Cosine,
    /// 2Δ/π − 1: the hidden-direction model correlation.
    Linear,
}

impl std::fmt::Display for FormKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FormKind::Cosine => write!(f, "cosine(-cos delta)"),
            FormKind::Linear => write!(f, "linear(2*delta/pi - 1)"),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FormComparison {
    pub cosine_max_dev: f64,
    pub linear_max_dev: f64,
    pub closest: FormKind,
}

/// Compares a correlation table against the two candidate functional forms.
/// Requires at least three distinct angle separations; classification only,
/// no stationarity claim.
pub fn form_compare(table: &[CorrelationRow]) -> Result<FormComparison, BellError> {
    let mut deltas: Vec<f64> = table.iter().map(|r| r.delta_deg).collect();
    deltas.sort_by(|x, y| x.partial_cmp(y).expect("finite deltas"));
    deltas.dedup();
    if deltas.len() < 3 {
        return Err(BellError::FewDeltas { got: deltas.len() });
    }
    let mut cosine_max_dev = 0.0f64;
    let mut linear_max_dev = 0.0f64;
    for row in table {
        let delta_rad = row.delta_deg.to_radians();
        cosine_max_dev = cosine_max_dev.max((row.value - (-delta_rad.cos())).abs());
        linear_max_dev = linear_max_dev.max((row.value - (2.0 * delta_rad / PI - 1.0)).abs());
    }
    let closest = if cosine_max_dev <= linear_max_dev {
        FormKind::Cosine
    } else {
        FormKind::Linear
    };
    Ok(FormComparison {
        cosine_max_dev,
        linear_max_dev,
        closest,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(label: &str, values: &[i8]) -> OutcomeDataset {
        OutcomeDataset::new(label, values.to_vec()).unwrap()
    }

    #[test]
    fn dataset_rejects_bad_values() {
        assert_eq!(
            OutcomeDataset::new("a", vec![]).unwrap_err(),
            BellError::EmptyDataset { label: "a".into() }
        );
        assert_eq!(
            OutcomeDataset::new("a", vec![1, 0, -1]).unwrap_err(),
            BellError::InvalidValue {
                label: "a".into(),
                index: 1,
                value: 0
            }
        );
    }

    #[test]
    fn self_correlation_is_one() {
        let a = ds("a", &[1, -1, 1, 1]);
        assert_eq!(cross_correlation(&a, &a).unwrap().value, 1.0);
        assert_eq!(cross_correlation(&a, &a.negated("na")).unwrap().value, -1.0);
    }

    #[test]
    fn hand_computed_zero_correlation() {
        let a = ds("a", &[1, 1, -1, -1]);
        let b = ds("b", &[1, -1, 1, -1]);
        assert_eq!(cross_correlation(&a, &b).unwrap().value, 0.0);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let a = ds("a", &[1, 1]);
        let b = ds("b", &[1]);
        assert!(matches!(
            cross_correlation(&a, &b),
            Err(BellError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn bell3_equality_edge_case() {
        let a = ds("a", &[1, 1]);
        let b = ds("b", &[1, -1]);
        let c = ds("c", &[-1, -1]);
        let report = bell3_evaluate(&a, &b, &c).unwrap();
        assert_eq!(report.lhs, 1.0);
        assert_eq!(report.rhs, 1.0);
        assert!(report.satisfied);
    }

    #[test]
    fn bell3_with_identical_b_and_c() {
        let a = ds("a", &[1, -1, 1]);
        let b = ds("b", &[-1, -1, 1]);
        let report = bell3_evaluate(&a, &b, &b.clone()).unwrap();
        assert_eq!(report.lhs, 0.0);
        assert_eq!(report.rhs, 0.0);
        assert!(report.satisfied);
    }

    #[test]
    fn chsh_all_equal_saturates() {
        let a = ds("a", &[1, -1, 1, -1, 1]);
        let report = chsh_evaluate(&a, &a.clone(), &a.clone(), &a.clone()).unwrap();
        assert_eq!(report.lhs, 2.0);
        assert!(report.satisfied);
    }

    #[test]
    fn chsh_reduces_when_bob_sides_match() {
        let a = ds("a", &[1, 1, -1, 1]);
        let a2 = ds("a2", &[-1, 1, 1, 1]);
        let b = ds("b", &[1, -1, -1, 1]);
        let report = chsh_evaluate(&a, &a2, &b, &b.clone()).unwrap();
        let cab = cross_correlation(&a, &b).unwrap().value;
        assert!((report.lhs - (2.0 * cab).abs()).abs() <= 1e-15);
        assert!(report.satisfied);
    }

    #[test]
    fn index_identity_residual_is_zero() {
        let a = ds("a", &[1, -1, -1, 1, 1]);
        let b = ds("b", &[-1, -1, 1, 1, -1]);
        let c = ds("c", &[1, 1, 1, -1, -1]);
        assert_eq!(bell3_index_identity_residual(&a, &b, &c).unwrap(), 0);
    }

    #[test]
    fn singlet_equal_angles_anticorrelate_exactly() {
        for theta in [0.0, 33.0, 90.0, 217.5] {
            let (p1, p2) = singlet_sample(theta, theta, 200, 7, 0).unwrap();
            let c = cross_correlation(&p1, &p2).unwrap();
            assert_eq!(c.value, -1.0, "theta={theta}");
        }
    }

    #[test]
    fn singlet_correlation_tracks_minus_cosine() {
        let (p1, p2) = singlet_sample(0.0, 60.0, 20_000, 11, 0).unwrap();
        let c = cross_correlation(&p1, &p2).unwrap();
        assert!((c.value + 0.5).abs() < 0.03, "got {}", c.value);

        let (p1, p2) = singlet_sample(0.0, 90.0, 20_000, 11, 1).unwrap();
        let c = cross_correlation(&p1, &p2).unwrap();
        assert!(c.value.abs() < 0.03, "got {}", c.value);
    }

    #[test]
    fn singlet_sampling_is_seed_deterministic() {
        let (a1, b1) = singlet_sample(10.0, 70.0, 500, 3, 2).unwrap();
        let (a2, b2) = singlet_sample(10.0, 70.0, 500, 3, 2).unwrap();
        assert_eq!(a1.values(), a2.values());
        assert_eq!(b1.values(), b2.values());
        let (a3, _) = singlet_sample(10.0, 70.0, 500, 4, 2).unwrap();
        assert_ne!(a1.values(), a3.values());
    }

    #[test]
    fn independent_bell3_violates_at_stock_angles() {
        let config = AngleConfig {
            angles_deg: vec![0.0, 60.0, 120.0],
            trials: 20_000,
            seed: 5,
        };
        let outcome = independent_runs_bell3(&config).unwrap();
        assert!(!outcome.inequality.satisfied);
        let gap = outcome.inequality.lhs - outcome.inequality.rhs;
        assert!((gap - 0.5).abs() < 0.05, "gap {gap}");
        assert!(outcome.expect_violation);
    }

    #[test]
    fn independent_bell3_with_equal_angles_is_satisfied() {
        let config = AngleConfig {
            angles_deg: vec![0.0, 0.0, 0.0],
            trials: 500,
            seed: 5,
        };
        let outcome = independent_runs_bell3(&config).unwrap();
        assert!(outcome.inequality.satisfied);
        assert_eq!(outcome.inequality.lhs, 0.0);
    }

    #[test]
    fn independent_chsh_reaches_tsirelson_at_stock_angles() {
        let config = AngleConfig {
            angles_deg: vec![0.0, 45.0, 22.5, 67.5],
            trials: 20_000,
            seed: 5,
        };
        let outcome = independent_runs_chsh(&config).unwrap();
        assert!(!outcome.inequality.satisfied);
        assert!(
            (outcome.inequality.lhs - 2.828).abs() < 0.05,
            "S {}",
            outcome.inequality.lhs
        );
    }

    #[test]
    fn lhv_common_run_is_always_satisfied() {
        for (angles, seed) in [
            (vec![0.0, 60.0, 120.0], 1u64),
            (vec![0.0, 30.0, 90.0], 2),
            (vec![11.0, 47.0, 203.0], 3),
        ] {
            let config = AngleConfig {
                angles_deg: angles,
                trials: 3000,
                seed,
            };
            let outcome = lhv_common_run(&config).unwrap();
            assert!(outcome.inequality.satisfied);
            assert!(!outcome.expect_violation);
        }
    }

    #[test]
    fn lhv_zero_separation_anticorrelates_exactly() {
        let config = AngleConfig {
            angles_deg: vec![40.0, 40.0, 130.0],
            trials: 1000,
            seed: 9,
        };
        let outcome = lhv_common_run(&config).unwrap();
        assert_eq!(outcome.table[0].value, -1.0);
    }

    #[test]
    fn lhv_correlation_is_linear_in_separation() {
        let config = AngleConfig {
            angles_deg: vec![0.0, 30.0, 90.0],
            trials: 50_000,
            seed: 13,
        };
        let outcome = lhv_common_run(&config).unwrap();
        for row in &outcome.table {
            let expected = 2.0 * row.delta_deg.to_radians() / PI - 1.0;
            assert!(
                (row.value - expected).abs() < 0.02,
                "delta {} value {}",
                row.delta_deg,
                row.value
            );
        }
    }

    #[test]
    fn form_compare_requires_three_distinct_deltas() {
        let row = |d: f64, v: f64| CorrelationRow {
            pair: ("x".into(), "y".into()),
            delta_deg: d,
            value: v,
            samples: 10,
            std_error: 0.3,
        };
        assert!(matches!(
            form_compare(&[row(60.0, -0.5), row(60.0, -0.5), row(60.0, -0.4)]),
            Err(BellError::FewDeltas { got: 1 })
        ));
        let cmp = form_compare(&[row(30.0, -0.866), row(60.0, -0.5), row(90.0, 0.0)]).unwrap();
        assert_eq!(cmp.closest, FormKind::Cosine);
        let cmp =
            form_compare(&[row(30.0, -2.0 / 3.0), row(60.0, -1.0 / 3.0), row(90.0, 0.0)]).unwrap();
        assert_eq!(cmp.closest, FormKind::Linear);
    }

    #[test]
    fn delta_reduction_wraps_into_half_turn() {
        assert_eq!(reduce_delta_deg(0.0, 60.0), 60.0);
        assert_eq!(reduce_delta_deg(0.0, 270.0), 90.0);
        assert_eq!(reduce_delta_deg(350.0, 10.0), 20.0);
        assert_eq!(reduce_delta_deg(-30.0, 30.0), 60.0);
    }
}
