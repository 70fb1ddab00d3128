//! Pauli spin operators and their embedding into multi-particle spaces.
//!
//! Matrices are expressed in the σ_z eigenbasis with |α⟩ (eigenvalue +1) at
//! index 0 and |β⟩ (eigenvalue −1) at index 1, so the defining actions are
//! σ_x|α⟩ = |β⟩, σ_x|β⟩ = |α⟩, σ_y|α⟩ = i|β⟩, σ_y|β⟩ = −i|α⟩.

use std::fmt;

use crate::linalg::{Complex64, ComplexMatrix};

/// A measurement axis for a single spin-1/2 particle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub fn matrix(self) -> ComplexMatrix {
        pauli(self)
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::X => write!(f, "x"),
            Axis::Y => write!(f, "y"),
            Axis::Z => write!(f, "z"),
        }
    }
}

/// The 2×2 Pauli matrix for the given axis.
pub fn pauli(axis: Axis) -> ComplexMatrix {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    match axis {
        Axis::X => ComplexMatrix::from_rows_2([[zero, one], [one, zero]]),
        Axis::Y => ComplexMatrix::from_rows_2([[zero, -i], [i, zero]]),
        Axis::Z => ComplexMatrix::from_rows_2([[one, zero], [zero, -one]]),
    }
}

/// Spin component in the x–z plane: σ(θ) = cosθ·σ_z + sinθ·σ_x.
///
/// Hermitian with eigenvalues ±1 for any θ; θ = 0 recovers σ_z and θ = π/2
/// recovers σ_x. This is the analyzer operator used by the singlet sampler.
pub fn pauli_in_plane(theta_rad: f64) -> ComplexMatrix {
    assert!(theta_rad.is_finite(), "analyzer angle must be finite");
    let c = Complex64::new(theta_rad.cos(), 0.0);
    let s = Complex64::new(theta_rad.sin(), 0.0);
    ComplexMatrix::from_rows_2([[c, s], [s, -c]])
}

/// Embeds a single-particle operator as I ⊗ … ⊗ op ⊗ … ⊗ I on `n` particles,
/// with particle 1 the leftmost (most significant) tensor factor.
pub fn embed(op: &ComplexMatrix, particle: usize, n: usize) -> ComplexMatrix {
    assert_eq!(op.dim(), 2, "embed takes a single-particle (2×2) operator");
    assert!(
        (1..=n).contains(&particle),
        "particle index {particle} out of range 1..={n}"
    );
    let left = 1usize << (particle - 1);
    let right = 1usize << (n - particle);
    ComplexMatrix::identity(left)
        .kron(op)
        .kron(&ComplexMatrix::identity(right))
}
