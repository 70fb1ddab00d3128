//! The three-particle GHZ state and its product observables.
//!
//! The four observables are the three-particle Pauli products
//!
//! ```text
//! A1 = σ_x¹ σ_y² σ_y³    A2 = σ_y¹ σ_x² σ_y³
//! A3 = σ_y¹ σ_y² σ_x³    A4 = σ_x¹ σ_x² σ_x³
//! ```
//!
//! All four commute pairwise, and the GHZ state (|ααα⟩ − |βββ⟩)/√2 is a joint
//! eigenstate with eigenvalues (+1, +1, +1, −1). Single-particle
//! anti-commutation forces A1·A2·A3 = −A4 and A1·A2·A3·A4 = −I, which is the
//! algebraic core everything else in this crate exercises.

use std::fmt;
use std::str::FromStr;

use crate::linalg::{Complex64, ComplexMatrix, ComplexVector};
use crate::pauli::{embed, pauli, Axis};

/// Labels for the four GHZ product observables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObservableLabel {
    A1,
    A2,
    A3,
    A4,
}

impl ObservableLabel {
    pub const ALL: [ObservableLabel; 4] = [
        ObservableLabel::A1,
        ObservableLabel::A2,
        ObservableLabel::A3,
        ObservableLabel::A4,
    ];

    /// Per-particle axes of the defining Pauli product, particle 1 first.
    pub fn axes(self) -> [Axis; 3] {
        match self {
            ObservableLabel::A1 => [Axis::X, Axis::Y, Axis::Y],
            ObservableLabel::A2 => [Axis::Y, Axis::X, Axis::Y],
            ObservableLabel::A3 => [Axis::Y, Axis::Y, Axis::X],
            ObservableLabel::A4 => [Axis::X, Axis::X, Axis::X],
        }
    }

    /// Eigenvalue on the GHZ state.
    pub fn ghz_eigenvalue(self) -> f64 {
        match self {
            ObservableLabel::A4 => -1.0,
            _ => 1.0,
        }
    }
}

impl fmt::Display for ObservableLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObservableLabel::A1 => write!(f, "A1"),
            ObservableLabel::A2 => write!(f, "A2"),
            ObservableLabel::A3 => write!(f, "A3"),
            ObservableLabel::A4 => write!(f, "A4"),
        }
    }
}

impl FromStr for ObservableLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A1" | "a1" => Ok(ObservableLabel::A1),
            "A2" | "a2" => Ok(ObservableLabel::A2),
            "A3" | "a3" => Ok(ObservableLabel::A3),
            "A4" | "a4" => Ok(ObservableLabel::A4),
            other => Err(format!(
                "unknown observable label '{other}' (expected A1..A4)"
            )),
        }
    }
}

/// One of the four observables together with its 8×8 matrix realization.
#[derive(Debug, Clone)]
pub struct GhzObservable {
    pub label: ObservableLabel,
    pub matrix: ComplexMatrix,
}

/// The entangled state (|α₁α₂α₃⟩ − |β₁β₂β₃⟩)/√2, with the composite index
/// 4b₁ + 2b₂ + b₃ (α → 0, β → 1) so particle 1 is the leftmost factor.
pub fn ghz_state() -> ComplexVector {
    let amp = 1.0 / 2f64.sqrt();
    let mut entries = vec![Complex64::new(0.0, 0.0); 8];
    entries[0] = Complex64::new(amp, 0.0);
    entries[7] = Complex64::new(-amp, 0.0);
    ComplexVector::new(entries)
}

/// Builds the labeled observable by embedding its per-particle Pauli factors.
pub fn ghz_observable(label: ObservableLabel) -> GhzObservable {
    let axes = label.axes();
    let mut matrix = ComplexMatrix::identity(8);
    for (particle, axis) in axes.iter().enumerate() {
        matrix = &matrix * &embed(&pauli(*axis), particle + 1, 3);
    }
    GhzObservable { label, matrix }
}

/// Eigenkets of σ_x and σ_y, derived from the action relations:
/// |x,±⟩ = (|α⟩ ± |β⟩)/√2 and |y,±⟩ = (|α⟩ ± i|β⟩)/√2.
pub fn basis_ket(axis: Axis, sign: i8) -> ComplexVector {
    assert!(sign == 1 || sign == -1, "sign must be ±1");
    let amp = 1.0 / 2f64.sqrt();
    let s = sign as f64;
    match axis {
        Axis::X => ComplexVector::new(vec![Complex64::new(amp, 0.0), Complex64::new(s * amp, 0.0)]),
        Axis::Y => ComplexVector::new(vec![Complex64::new(amp, 0.0), Complex64::new(0.0, s * amp)]),
        Axis::Z => {
            if sign == 1 {
                ComplexVector::basis_state(2, 0)
            } else {
                ComplexVector::basis_state(2, 1)
            }
        }
    }
}

/// A named residual from one operator identity.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: String,
    pub residual: f64,
    pub pass: bool,
}

/// Verifies the pairwise commutators and the two product identities,
/// reporting the max-entry residual of each.
pub fn verify_operator_identities(tol: f64) -> Vec<IdentityCheck> {
    assert!(tol > 0.0, "tolerance must be positive");
    let obs: Vec<GhzObservable> = ObservableLabel::ALL
        .iter()
        .map(|&l| ghz_observable(l))
        .collect();
    let mut checks = Vec::new();

    for i in 0..4 {
        for j in (i + 1)..4 {
            let residual = obs[i].matrix.commutator(&obs[j].matrix).max_abs();
            checks.push(IdentityCheck {
                name: format!("[{},{}] = 0", obs[i].label, obs[j].label),
                residual,
                pass: residual <= tol,
            });
        }
    }

    let a123 = &(&obs[0].matrix * &obs[1].matrix) * &obs[2].matrix;
    let residual = (&a123 + &obs[3].matrix).max_abs();
    checks.push(IdentityCheck {
        name: "A1*A2*A3 = -A4".to_string(),
        residual,
        pass: residual <= tol,
    });

    let a1234 = &a123 * &obs[3].matrix;
    let residual = (&a1234 + &ComplexMatrix::identity(8)).max_abs();
    checks.push(IdentityCheck {
        name: "A1*A2*A3*A4 = -I".to_string(),
        residual,
        pass: residual <= tol,
    });

    checks
}

/// The measured eigenvalue relation of one observable on the GHZ state.
#[derive(Debug, Clone)]
pub struct EigenRelation {
    pub label: ObservableLabel,
    /// ⟨ψ|A|ψ⟩, which equals the eigenvalue when |ψ⟩ is an eigenstate.
    pub lambda: f64,
    /// ‖A|ψ⟩ − λ|ψ⟩‖.
    pub residual: f64,
    pub pass: bool,
}

/// Reports λ and the eigen-equation residual for each observable on |ψ⟩.
pub fn eigen_relations(tol: f64) -> Vec<EigenRelation> {
    assert!(tol > 0.0, "tolerance must be positive");
    let psi = ghz_state();
    ObservableLabel::ALL
        .iter()
        .map(|&label| {
            let a = ghz_observable(label);
            let applied = &a.matrix * &psi;
            let lambda = psi.inner(&applied).re;
            let residual = (&applied - &psi.scale(Complex64::new(lambda, 0.0))).norm();
            EigenRelation {
                label,
                lambda,
                residual,
                pass: residual <= tol && (lambda - label.ghz_eigenvalue()).abs() <= tol,
            }
        })
        .collect()
}

/// One amplitude of a product-basis expansion: the sign triple names the
/// per-particle eigenvalues of the chosen axes.
#[derive(Debug, Clone)]
pub struct BasisAmplitude {
    pub signs: [i8; 3],
    pub amplitude: Complex64,
}

impl BasisAmplitude {
    pub fn sign_product(&self) -> i8 {
        self.signs.iter().product()
    }
}

/// Expands `state` in the product eigenbasis selected by per-particle axes,
/// returning all 8 amplitudes ⟨s₁s₂s₃|state⟩ ordered with +1 before −1.
pub fn basis_expand(state: &ComplexVector, axes: [Axis; 3]) -> Vec<BasisAmplitude> {
    assert_eq!(
        state.dim(),
        8,
        "expansion is defined on three-particle states"
    );
    let mut out = Vec::with_capacity(8);
    for idx in 0..8u32 {
        let signs = [
            if idx & 4 == 0 { 1i8 } else { -1 },
            if idx & 2 == 0 { 1 } else { -1 },
            if idx & 1 == 0 { 1 } else { -1 },
        ];
        let ket = basis_ket(axes[0], signs[0])
            .tensor(&basis_ket(axes[1], signs[1]))
            .tensor(&basis_ket(axes[2], signs[2]));
        out.push(BasisAmplitude {
            signs,
            amplitude: ket.inner(state),
        });
    }
    out
}
