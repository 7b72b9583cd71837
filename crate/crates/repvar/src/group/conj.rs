//! Conjugacy-class coordinates and explicit conjugacy transport.

use super::{inverse, multiply, wrap_angle, GroupElement, GroupError, Value};
use crate::linalg::{eig_unitary, normalize_determinant, CMat};

pub const CLASS_TOL: f64 = 1e-9;

/// Conjugacy-class coordinate.
///
/// SU(2): the single angle θ ∈ [0, π] of the eigenvalue pair e^{±iθ}.
/// SU(3): the eigen-angles sorted in descending order (the first two
/// determine the third). Torus: the angle tuple itself. Products: the
/// concatenation.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassCoordinate {
    pub spec_family: super::Family,
    pub angles: Vec<f64>,
}

impl ClassCoordinate {
    pub fn distance(&self, other: &ClassCoordinate) -> f64 {
        assert_eq!(self.spec_family, other.spec_family, "spec mismatch");
        self.angles
            .iter()
            .zip(&other.angles)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Class coordinate of an element.
pub fn class_coordinate(g: &GroupElement) -> ClassCoordinate {
    let angles = match &g.value {
        Value::M2(m) => {
            let half_tr = 0.5 * m.trace().re;
            vec![half_tr.clamp(-1.0, 1.0).acos()]
        }
        Value::M3(m) => {
            let (angles, _) = eig_unitary(m);
            // eig_unitary already sorts descending.
            angles.to_vec()
        }
        Value::Angles(a) => a.iter().map(|&t| wrap_angle(t)).collect(),
        Value::Product(parts) => parts
            .iter()
            .flat_map(|p| class_coordinate(p).angles)
            .collect(),
    };
    ClassCoordinate {
        spec_family: g.spec().family().clone(),
        angles,
    }
}

/// Distance between the class coordinates of two elements.
pub fn class_distance(a: &GroupElement, b: &GroupElement) -> f64 {
    class_coordinate(a).distance(&class_coordinate(b))
}

fn transport_matrix<const N: usize>(
    a: &CMat<N>,
    b: &CMat<N>,
) -> CMat<N> {
    // Matched eigen-decompositions give h = V_b V_a†: h a h⁻¹ = b. The
    // deterministic eigenvector phases in eig_unitary make h itself
    // deterministic; degenerate eigenspaces do not matter because both
    // matrices act there as the same scalar.
    let (_, va) = eig_unitary(a);
    let (_, vb) = eig_unitary(b);
    normalize_determinant(&(vb * va.adjoint()))
}

/// Find h with h a h⁻¹ = b, given that a and b are conjugate
/// (equal class coordinates to `CLASS_TOL`).
pub fn conjugacy_transport(
    a: &GroupElement,
    b: &GroupElement,
) -> Result<GroupElement, GroupError> {
    assert_eq!(a.spec(), b.spec(), "spec mismatch");
    let dist = class_distance(a, b);
    if dist > CLASS_TOL {
        return Err(GroupError::NotConjugate {
            distance: dist,
            tol: CLASS_TOL,
        });
    }
    let spec = a.spec().clone();
    let h = match (&a.value, &b.value) {
        (Value::M2(ma), Value::M2(mb)) => GroupElement::from_m2(spec, transport_matrix(ma, mb)),
        (Value::M3(ma), Value::M3(mb)) => GroupElement::from_m3(spec, transport_matrix(ma, mb)),
        (Value::Angles(_), Value::Angles(_)) => super::identity(&spec),
        (Value::Product(pa), Value::Product(pb)) => {
            let mut parts = Vec::with_capacity(pa.len());
            for (x, y) in pa.iter().zip(pb) {
                parts.push(conjugacy_transport(x, y)?);
            }
            GroupElement {
                spec,
                value: Value::Product(parts),
            }
        }
        _ => unreachable!(),
    };
    Ok(h)
}

/// Residual ‖h a h⁻¹ − b‖ of a transport candidate.
pub fn transport_residual(h: &GroupElement, a: &GroupElement, b: &GroupElement) -> f64 {
    multiply(&multiply(h, a), &inverse(h)).distance(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{conjugate, haar_sample, GroupSpec};
    use crate::linalg::C64;
    use crate::rng::seeded_stream;

    #[test]
    fn class_coordinate_is_conjugation_invariant() {
        let mut rng = seeded_stream(41, 0);
        for spec in [GroupSpec::su2(), GroupSpec::su3()] {
            for _ in 0..100 {
                let g = haar_sample(&spec, &mut rng);
                let u = haar_sample(&spec, &mut rng);
                assert!(class_distance(&g, &conjugate(&u, &g)) < 1e-9);
            }
        }
    }

    #[test]
    fn transport_of_equal_elements_is_identity() {
        let mut rng = seeded_stream(43, 0);
        for spec in [GroupSpec::su2(), GroupSpec::su3(), GroupSpec::torus(2)] {
            let a = haar_sample(&spec, &mut rng);
            let h = conjugacy_transport(&a, &a).unwrap();
            assert!(h.is_identity(1e-9));
        }
    }

    #[test]
    fn su2_axis_flip_is_transported_by_j_up_to_phase() {
        // diag(i, -i) and diag(-i, i) are conjugate by the quaternion j.
        let spec = GroupSpec::su2();
        let a = spec.torus_point(&[std::f64::consts::FRAC_PI_2]);
        let b = spec.torus_point(&[-std::f64::consts::FRAC_PI_2]);
        let h = conjugacy_transport(&a, &b).unwrap();
        assert!(transport_residual(&h, &a, &b) < 1e-12);
        // Anti-diagonal shape: both diagonal entries vanish.
        assert!(h.m2()[(0, 0)].norm() < 1e-12);
        assert!(h.m2()[(1, 1)].norm() < 1e-12);
    }

    #[test]
    fn random_conjugate_pairs_transport_with_small_residual() {
        let mut rng = seeded_stream(47, 0);
        for spec in [GroupSpec::su2(), GroupSpec::su3()] {
            for _ in 0..100 {
                let a = haar_sample(&spec, &mut rng);
                let u = haar_sample(&spec, &mut rng);
                let b = conjugate(&u, &a);
                let h = conjugacy_transport(&a, &b).unwrap();
                assert!(transport_residual(&h, &a, &b) < 1e-10);
                assert!((h.determinant() - C64::new(1.0, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn non_conjugate_pairs_error() {
        let spec = GroupSpec::su2();
        let a = spec.torus_point(&[0.5]);
        let b = spec.torus_point(&[0.9]);
        assert!(matches!(
            conjugacy_transport(&a, &b),
            Err(GroupError::NotConjugate { .. })
        ));
    }
}
