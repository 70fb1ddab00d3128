//! Exhaustive scan over local hidden-value assignments.
//!
//! An assignment fixes six pre-existing outcomes m_x^i, m_y^i ∈ {±1} for
//! particles i = 1..3 — one value per axis per particle, independent of what
//! is measured elsewhere. The scan checks which of the 64 assignments satisfy
//! the three product constraints matching the GHZ eigenvalues
//! (m_x¹m_y²m_y³ = m_y¹m_x²m_y³ = m_y¹m_y²m_x³ = +1), and shows that none of
//! them can also satisfy m_x¹m_x²m_x³ = −1: multiplying the three constraints
//! squares every m_y factor away and forces m_x¹m_x²m_x³ = +1.

use crate::pauli::Axis;

/// Six counterfactual outcomes, indexed by particle (0-based internally).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Assignment {
    pub m_x: [i8; 3],
    pub m_y: [i8; 3],
}

impl Assignment {
    /// Outcome for the given axis and particle (1-based).
    pub fn value(&self, axis: Axis, particle: usize) -> i8 {
        assert!((1..=3).contains(&particle), "particle index out of range");
        match axis {
            Axis::X => self.m_x[particle - 1],
            Axis::Y => self.m_y[particle - 1],
            Axis::Z => panic!("assignments carry x and y values only"),
        }
    }

    /// Product of the assignment values over a factor list.
    pub fn product(&self, factors: &[(Axis, usize)]) -> i8 {
        factors
            .iter()
            .map(|&(axis, p)| self.value(axis, p))
            .product()
    }
}

/// A parity constraint: the product over `factors` must equal `required`.
///
/// Factors are stored as explicit (axis, particle) lists rather than baked-in
/// expressions so variant constraint sets can be assembled and audited.
#[derive(Debug, Clone)]
pub struct Constraint {
    pub name: &'static str,
    pub factors: Vec<(Axis, usize)>,
    pub required: i8,
}

impl Constraint {
    pub fn holds(&self, a: &Assignment) -> bool {
        a.product(&self.factors) == self.required
    }
}

/// The three spin-product constraints, in particle order of their x factor.
pub fn ghz_product_constraints() -> Vec<Constraint> {
    vec![
        Constraint {
            name: "m_x1*m_y2*m_y3 = +1",
            factors: vec![(Axis::X, 1), (Axis::Y, 2), (Axis::Y, 3)],
            required: 1,
        },
        Constraint {
            name: "m_y1*m_x2*m_y3 = +1",
            factors: vec![(Axis::Y, 1), (Axis::X, 2), (Axis::Y, 3)],
            required: 1,
        },
        Constraint {
            name: "m_y1*m_y2*m_x3 = +1",
            factors: vec![(Axis::Y, 1), (Axis::Y, 2), (Axis::X, 3)],
            required: 1,
        },
    ]
}

/// The all-x quantum prediction, which contradicts the forced parity.
pub fn all_x_constraint() -> Constraint {
    Constraint {
        name: "m_x1*m_x2*m_x3 = -1",
        factors: vec![(Axis::X, 1), (Axis::X, 2), (Axis::X, 3)],
        required: -1,
    }
}

/// All 64 assignments in lexicographic order over
/// (m_x¹, m_y¹, m_x², m_y², m_x³, m_y³) with +1 before −1.
pub fn enumerate_assignments() -> Vec<Assignment> {
    let mut out = Vec::with_capacity(64);
    for code in 0u32..64 {
        let bit = |k: u32| -> i8 {
            if code & (1 << (5 - k)) == 0 {
                1
            } else {
                -1
            }
        };
        out.push(Assignment {
            m_x: [bit(0), bit(2), bit(4)],
            m_y: [bit(1), bit(3), bit(5)],
        });
    }
    out
}

/// True iff every constraint in the set holds for the assignment.
pub fn check_constraints(a: &Assignment, constraints: &[Constraint]) -> bool {
    assert!(!constraints.is_empty(), "constraint set must be non-empty");
    constraints.iter().all(|c| c.holds(a))
}

/// Results of the exhaustive scan.
#[derive(Debug, Clone, Copy)]
pub struct ScanSummary {
    /// Assignments satisfying the three product constraints.
    pub satisfying_products: usize,
    /// Assignments satisfying the three constraints plus the all-x prediction.
    pub satisfying_with_all_x: usize,
    /// Every product-satisfying assignment has m_x¹m_x²m_x³ = +1.
    pub forced_all_x_positive: bool,
    /// The product of the three constraint parities equals m_x¹m_x²m_x³
    /// for all 64 assignments (each m_y appears squared).
    pub product_identity_holds: bool,
}

/// Runs the full 64-case scan; brute force is the oracle here.
pub fn scan_summary() -> ScanSummary {
    let products = ghz_product_constraints();
    let all_x = all_x_constraint();

    let mut satisfying_products = 0;
    let mut satisfying_with_all_x = 0;
    let mut forced_all_x_positive = true;
    let mut product_identity_holds = true;

    for a in enumerate_assignments() {
        let triple_product: i8 = products.iter().map(|c| a.product(&c.factors)).product();
        if triple_product != a.product(&all_x.factors) {
            product_identity_holds = false;
        }
        if check_constraints(&a, &products) {
            satisfying_products += 1;
            if a.product(&all_x.factors) != 1 {
                forced_all_x_positive = false;
            }
            if all_x.holds(&a) {
                satisfying_with_all_x += 1;
            }
        }
    }

    ScanSummary {
        satisfying_products,
        satisfying_with_all_x,
        forced_all_x_positive,
        product_identity_holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_is_complete_and_distinct() {
        let all = enumerate_assignments();
        assert_eq!(all.len(), 64);
        for i in 0..all.len() {
            for j in (i + 1)..all.len() {
                assert_ne!(all[i], all[j]);
            }
        }
        assert_eq!(all[0].m_x, [1, 1, 1]);
        assert_eq!(all[0].m_y, [1, 1, 1]);
        // last element is all −1
        assert_eq!(all[63].m_x, [-1, -1, -1]);
        assert_eq!(all[63].m_y, [-1, -1, -1]);
    }

    #[test]
    fn all_plus_satisfies_products_but_not_all_x() {
        let all_plus = enumerate_assignments()[0];
        assert!(check_constraints(&all_plus, &ghz_product_constraints()));
        assert!(!all_x_constraint().holds(&all_plus));
    }

    #[test]
    fn single_flip_breaks_first_constraint() {
        let mut a = enumerate_assignments()[0];
        a.m_x[0] = -1;
        let first = &ghz_product_constraints()[0];
        assert!(!first.holds(&a));
    }

    #[test]
    fn satisfying_count_halves_per_independent_constraint() {
        let constraints = ghz_product_constraints();
        let all = enumerate_assignments();
        for k in 1..=3 {
            let count = all
                .iter()
                .filter(|a| check_constraints(a, &constraints[..k]))
                .count();
            assert_eq!(count, 64 >> k, "k={k}");
        }
    }

    #[test]
    fn scan_matches_brute_force_expectations() {
        let summary = scan_summary();
        assert_eq!(summary.satisfying_products, 8);
        assert_eq!(summary.satisfying_with_all_x, 0);
        assert!(summary.forced_all_x_positive);
        assert!(summary.product_identity_holds);
    }
}
