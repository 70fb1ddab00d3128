//! Classical non-commutation demos: 3D rotation sequences and polarizer
//! cascades.
//!
//! Rotations are active, right-handed, acting on column vectors. Trigonometry
//! on degree inputs goes through [`cos_deg`]/[`sin_deg`], which return exact
//! values at multiples of 90° so the cardinal-angle demos are bit-exact.

/// Cosine of an angle in degrees, exact at multiples of 90°.
pub fn cos_deg(deg: f64) -> f64 {
    let r = deg.rem_euclid(360.0);
    if r == 0.0 {
        1.0
    } else if r == 90.0 || r == 270.0 {
        0.0
    } else if r == 180.0 {
        -1.0
    } else {
        r.to_radians().cos()
    }
}

/// Sine of an angle in degrees, exact at multiples of 90°.
pub fn sin_deg(deg: f64) -> f64 {
    cos_deg(deg - 90.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotationAxis {
    X,
    Y,
    Z,
}

/// A rotation about a coordinate axis by an angle in degrees.
#[derive(Debug, Clone, Copy)]
pub struct Rotation3 {
    pub axis: RotationAxis,
    pub angle_deg: f64,
}

impl Rotation3 {
    pub fn new(axis: RotationAxis, angle_deg: f64) -> Self {
        assert!(angle_deg.is_finite(), "rotation angle must be finite");
        Self { axis, angle_deg }
    }

    pub fn matrix(&self) -> [[f64; 3]; 3] {
        let c = cos_deg(self.angle_deg);
        let s = sin_deg(self.angle_deg);
        match self.axis {
            RotationAxis::X => [[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]],
            RotationAxis::Y => [[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]],
            RotationAxis::Z => [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]],
        }
    }
}

pub type Vec3 = [f64; 3];

fn mat_apply(m: &[[f64; 3]; 3], v: Vec3) -> Vec3 {
    [
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    ]
}

/// Applies the rotations to `v` in listed order (first element acts first).
pub fn rotate_sequence(rotations: &[Rotation3], v: Vec3) -> Vec3 {
    assert!(
        v.iter().all(|x| x.is_finite()),
        "input vector must be finite"
    );
    rotations
        .iter()
        .fold(v, |acc, r| mat_apply(&r.matrix(), acc))
}

/// An ideal polarizer cascade: a beam polarized at `initial_deg` passes a
/// sequence of polarizers in order.
#[derive(Debug, Clone)]
pub struct PolarizerStack {
    pub initial_deg: f64,
    pub stages_deg: Vec<f64>,
}

impl PolarizerStack {
    pub fn new(initial_deg: f64, stages_deg: Vec<f64>) -> Self {
        assert!(!stages_deg.is_empty(), "polarizer stack must be non-empty");
        Self {
            initial_deg,
            stages_deg,
        }
    }
}

/// Transmitted intensity fraction of the cascade.
///
/// Each stage transmits cos² of the angle between the incoming polarization
/// and its pass axis (Malus), and the polarization snaps to the pass axis.
/// cos² is computed through the half-angle identity so cardinal angles stay
/// exact: 45° stages give exactly 1/2, crossed stages exactly 0.
pub fn polarizer_cascade(stack: &PolarizerStack) -> f64 {
    let mut polarization = stack.initial_deg;
    let mut intensity = 1.0;
    for &stage in &stack.stages_deg {
        let delta = stage - polarization;
        intensity *= 0.5 * (1.0 + cos_deg(2.0 * delta));
        polarization = stage;
    }
    intensity
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    fn assert_vec3_eq(a: Vec3, b: Vec3) {
        for k in 0..3 {
            assert!((a[k] - b[k]).abs() <= TOL, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn rotation_order_changes_the_result() {
        let rx = Rotation3::new(RotationAxis::X, 90.0);
        let ry = Rotation3::new(RotationAxis::Y, 90.0);
        let z_hat = [0.0, 0.0, 1.0];
        assert_vec3_eq(rotate_sequence(&[rx, ry], z_hat), [0.0, -1.0, 0.0]);
        assert_vec3_eq(rotate_sequence(&[ry, rx], z_hat), [1.0, 0.0, 0.0]);
    }

    #[test]
    fn inverse_pair_restores_input() {
        let fwd = Rotation3::new(RotationAxis::X, 90.0);
        let back = Rotation3::new(RotationAxis::X, -90.0);
        let v = [0.3, -1.2, 2.5];
        assert_vec3_eq(rotate_sequence(&[fwd, back], v), v);
    }

    #[test]
    fn same_axis_rotations_commute() {
        let a = Rotation3::new(RotationAxis::Z, 37.0);
        let b = Rotation3::new(RotationAxis::Z, 111.0);
        let v = [1.0, 2.0, -0.5];
        assert_vec3_eq(rotate_sequence(&[a, b], v), rotate_sequence(&[b, a], v));
    }

    #[test]
    fn rotations_preserve_length() {
        let v = [0.4, -2.0, 1.1];
        let norm = |u: Vec3| (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]).sqrt();
        let seq = [
            Rotation3::new(RotationAxis::X, 33.0),
            Rotation3::new(RotationAxis::Y, -140.0),
            Rotation3::new(RotationAxis::Z, 77.5),
        ];
        assert!((norm(rotate_sequence(&seq, v)) - norm(v)).abs() <= TOL);
    }

    #[test]
    fn polarizer_order_changes_transmission() {
        let diagonal_first = PolarizerStack::new(0.0, vec![45.0, 90.0]);
        let crossed_first = PolarizerStack::new(0.0, vec![90.0, 45.0]);
        assert_eq!(polarizer_cascade(&diagonal_first), 0.25);
        assert_eq!(polarizer_cascade(&crossed_first), 0.0);
    }

    #[test]
    fn aligned_polarizer_transmits_everything() {
        let stack = PolarizerStack::new(0.0, vec![0.0]);
        assert_eq!(polarizer_cascade(&stack), 1.0);
    }

    #[test]
    fn transmission_stays_in_unit_interval() {
        for k in 0..40 {
            let stack =
                PolarizerStack::new(13.0 * k as f64, vec![7.3 * k as f64, -29.0, 161.0, 45.5]);
            let t = polarizer_cascade(&stack);
            assert!((0.0..=1.0).contains(&t), "t={t}");
        }
    }

    #[test]
    fn cardinal_trig_is_exact() {
        assert_eq!(cos_deg(90.0), 0.0);
        assert_eq!(cos_deg(-90.0), 0.0);
        assert_eq!(cos_deg(180.0), -1.0);
        assert_eq!(cos_deg(720.0), 1.0);
        assert_eq!(sin_deg(0.0), 0.0);
        assert_eq!(sin_deg(90.0), 1.0);
        assert_eq!(sin_deg(-90.0), -1.0);
    }
}
