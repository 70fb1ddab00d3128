//! Mechanical verification of the GHZ operator algebra and of Bell-type
//! inequality behavior on ±1 datasets.
//!
//! The library covers five areas:
//!
//! - [`linalg`] and [`mod@pauli`]: dense complex algebra on dimensions 2/4/8,
//!   Pauli operators, and tensor embedding.
//! - [`ghz`]: the three-particle GHZ state, its four product observables,
//!   the commutator and product identities among them, and product-basis
//!   expansions.
//! - [`measurement`]: seeded projective measurement in product-revealing and
//!   spin-revealing protocols, with reproducible per-trial RNG streams.
//! - [`counterfactual`]: exhaustive enumeration of the 64 local hidden-value
//!   assignments against the GHZ parity constraints.
//! - [`bell`]: cross-correlations of common-index ±1 datasets, the
//!   three-dataset and CHSH forms they satisfy identically, singlet sampling,
//!   and the independent-runs vs common-run experiments; [`demos`] holds the
//!   classical non-commutation examples.
//!
//! The `ghzbell` binary (see [`cli`]) drives everything and emits
//! deterministic reports; [`dataset`] defines the CSV exchange format.

pub mod bell;
pub mod cli;
pub mod counterfactual;
pub mod dataset;
pub mod demos;
pub mod ghz;
pub mod linalg;
pub mod measurement;
pub mod pauli;
pub mod report;

pub use bell::{
    bell3_evaluate, chsh_evaluate, cross_correlation, form_compare, independent_runs_bell3,
    independent_runs_chsh, lhv_common_run, singlet_sample, AngleConfig, BellError,
    CorrelationEstimate, InequalityForm, InequalityReport, OutcomeDataset,
};
pub use counterfactual::{check_constraints, enumerate_assignments, scan_summary, Assignment};
pub use ghz::{
    basis_expand, eigen_relations, ghz_observable, ghz_state, verify_operator_identities,
    GhzObservable, ObservableLabel,
};
pub use linalg::{Complex64, ComplexMatrix, ComplexVector, IDENTITY_TOL};
pub use measurement::{
    measure_observable, measure_single, outcome_statistics, run_protocol, trial_rng, MeasureError,
    MeasurementRecord, Protocol, ProtocolSpec, RNG_ALGORITHM,
};
pub use pauli::{embed, pauli, pauli_in_plane, Axis};
pub use report::{Check, CheckKind, Report, ReportTable};
