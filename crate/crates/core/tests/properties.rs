//! Property tests over randomized datasets and operator inputs.

use proptest::prelude::*;

use ghzbell::bell::{
    bell3_evaluate, bell3_index_identity_residual, chsh_evaluate, cross_correlation,
    reduce_delta_deg, OutcomeDataset,
};
use ghzbell::dataset::{parse_datasets, render_datasets};
use ghzbell::ghz::{basis_expand, ghz_state};
use ghzbell::linalg::{Complex64, ComplexMatrix, IDENTITY_TOL};
use ghzbell::pauli::{embed, pauli, pauli_in_plane, Axis};

fn pm1() -> impl Strategy<Value = i8> {
    prop_oneof![Just(1i8), Just(-1i8)]
}

fn common_index_triple() -> impl Strategy<Value = (Vec<i8>, Vec<i8>, Vec<i8>)> {
    (1usize..200).prop_flat_map(|n| {
        (
            prop::collection::vec(pm1(), n),
            prop::collection::vec(pm1(), n),
            prop::collection::vec(pm1(), n),
        )
    })
}

fn axis() -> impl Strategy<Value = Axis> {
    prop_oneof![Just(Axis::X), Just(Axis::Y), Just(Axis::Z)]
}

proptest! {
    #[test]
    fn bell3_is_universally_satisfied((a, b, c) in common_index_triple()) {
        let a = OutcomeDataset::new("a", a).unwrap();
        let b = OutcomeDataset::new("b", b).unwrap();
        let c = OutcomeDataset::new("c", c).unwrap();
        let eval = bell3_evaluate(&a, &b, &c).unwrap();
        prop_assert!(eval.satisfied);
        prop_assert_eq!(bell3_index_identity_residual(&a, &b, &c).unwrap(), 0);
    }

    #[test]
    fn chsh_is_universally_satisfied(
        (a, b, c) in common_index_triple(),
        d_seed in prop::collection::vec(pm1(), 200),
    ) {
        let n = a.len();
        let d = d_seed[..n].to_vec();
        let a = OutcomeDataset::new("a", a).unwrap();
        let a2 = OutcomeDataset::new("a2", b).unwrap();
        let b = OutcomeDataset::new("b", c).unwrap();
        let b2 = OutcomeDataset::new("b2", d).unwrap();
        let eval = chsh_evaluate(&a, &a2, &b, &b2).unwrap();
        prop_assert!(eval.satisfied);
        prop_assert!(eval.lhs <= 2.0 + 1e-12);
    }

    #[test]
    fn correlations_stay_in_the_unit_interval((a, b, _) in common_index_triple()) {
        let a = OutcomeDataset::new("a", a).unwrap();
        let b = OutcomeDataset::new("b", b).unwrap();
        let est = cross_correlation(&a, &b).unwrap();
        prop_assert!(est.value.abs() <= 1.0);
        prop_assert_eq!(cross_correlation(&a, &a).unwrap().value, 1.0);
    }

    #[test]
    fn csv_round_trip_preserves_columns((a, b, c) in common_index_triple()) {
        let datasets = vec![
            OutcomeDataset::new("left", a).unwrap(),
            OutcomeDataset::new("mid", b).unwrap(),
            OutcomeDataset::new("right", c).unwrap(),
        ];
        let text = render_datasets(&datasets);
        let parsed = parse_datasets(&text).unwrap();
        prop_assert_eq!(parsed, datasets);
    }

    #[test]
    fn embedded_operators_commute_across_particles(
        a in axis(),
        b in axis(),
        pa in 1usize..=3,
        pb in 1usize..=3,
    ) {
        prop_assume!(pa != pb);
        let left = embed(&pauli(a), pa, 3);
        let right = embed(&pauli(b), pb, 3);
        prop_assert!(left.commutator(&right).max_abs() <= IDENTITY_TOL);
    }

    #[test]
    fn in_plane_operators_are_hermitian_involutions(theta in -720.0f64..720.0) {
        let p = pauli_in_plane(theta.to_radians());
        prop_assert!(p.is_hermitian(IDENTITY_TOL));
        prop_assert!((&p * &p).approx_eq(&ComplexMatrix::identity(2), IDENTITY_TOL));
    }

    #[test]
    fn matrix_products_are_associative_on_unit_entries(
        entries in prop::collection::vec(0u8..4, 12),
    ) {
        // matrices with entries drawn from {1, -1, i, -i}
        let unit = |k: u8| match k {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(-1.0, 0.0),
            2 => Complex64::new(0.0, 1.0),
            _ => Complex64::new(0.0, -1.0),
        };
        let m = |slice: &[u8]| ComplexMatrix::new(2, slice.iter().map(|&k| unit(k)).collect());
        let (a, b, c) = (m(&entries[0..4]), m(&entries[4..8]), m(&entries[8..12]));
        let left = &(&a * &b) * &c;
        let right = &a * &(&b * &c);
        prop_assert!(left.approx_eq(&right, IDENTITY_TOL));
    }

    #[test]
    fn ghz_expansions_are_normalized_with_even_parity_weight(
        a1 in prop_oneof![Just(Axis::X), Just(Axis::Y)],
        a2 in prop_oneof![Just(Axis::X), Just(Axis::Y)],
        a3 in prop_oneof![Just(Axis::X), Just(Axis::Y)],
    ) {
        let terms = basis_expand(&ghz_state(), [a1, a2, a3]);
        let total: f64 = terms.iter().map(|t| t.amplitude.norm_sqr()).sum();
        prop_assert!((total - 1.0).abs() <= IDENTITY_TOL);
        // parity-weighted sum is the expectation of the matching observable,
        // which is ±1 for the four x/y-count patterns and 0 otherwise
        let weighted: f64 =
            terms.iter().map(|t| t.sign_product() as f64 * t.amplitude.norm_sqr()).sum();
        prop_assert!(weighted.abs() <= 1.0 + IDENTITY_TOL);
    }

    #[test]
    fn delta_reduction_lands_in_half_turn(x in -1000.0f64..1000.0, y in -1000.0f64..1000.0) {
        let d = reduce_delta_deg(x, y);
        prop_assert!((0.0..=180.0).contains(&d));
        prop_assert!((reduce_delta_deg(y, x) - d).abs() <= 1e-9);
    }
}
