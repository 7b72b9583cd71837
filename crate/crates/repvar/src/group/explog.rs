//! Exponential and principal logarithm.

use super::{wrap_angle, AlgebraVector, Family, GroupElement, GroupError, Value};
use crate::linalg::{eig_unitary, C64, CMat};

const CUT_MARGIN: f64 = 1e-9;

fn exp_matrix<const N: usize>(x: &CMat<N>) -> CMat<N> {
    // x is anti-Hermitian, so -i x is Hermitian: diagonalize and exponentiate
    // the angles.
    let h = nalgebra::DMatrix::from_fn(N, N, |i, j| x[(i, j)] * C64::new(0.0, -1.0));
    let eig = h.symmetric_eigen();
    let mut d = nalgebra::DMatrix::<C64>::zeros(N, N);
    for i in 0..N {
        d[(i, i)] = C64::from_polar(1.0, eig.eigenvalues[i]);
    }
    let out = &eig.eigenvectors * d * eig.eigenvectors.adjoint();
    CMat::<N>::from_fn(|i, j| out[(i, j)])
}

/// exp: 𝔨 → K.
pub fn exp_alg(x: &AlgebraVector) -> GroupElement {
    match x.spec().family() {
        Family::Su2 => GroupElement::from_m2(x.spec().clone(), exp_matrix(&x.to_m2())),
        Family::Su3 => GroupElement::from_m3(x.spec().clone(), exp_matrix(&x.to_m3())),
        Family::Torus { .. } => GroupElement {
            spec: x.spec().clone(),
            value: Value::Angles(x.coords.iter().map(|&t| wrap_angle(t)).collect()),
        },
        Family::Product(_) => {
            let parts = x.split().iter().map(exp_alg).collect();
            GroupElement {
                spec: x.spec().clone(),
                value: Value::Product(parts),
            }
        }
    }
}

/// Principal eigen-angles of an SU(n) element, adjusted so they sum to zero
/// (the raw principal angles can sum to ±2π). Errors when the branch choice
/// is ambiguous, i.e. an adjusted angle sits within `CUT_MARGIN` of ±π.
fn su_log_angles<const N: usize>(u: &CMat<N>) -> Result<([f64; N], CMat<N>), GroupError> {
    let (mut angles, vectors) = eig_unitary(u);
    let sum: f64 = angles.iter().sum();
    let wraps = (sum / (2.0 * std::f64::consts::PI)).round();
    if wraps != 0.0 {
        // Shift the single angle that minimizes the resulting norm: the
        // largest angle when the sum is +2π, the smallest when it is -2π.
        let target = if wraps > 0.0 {
            (0..N).max_by(|&i, &j| angles[i].partial_cmp(&angles[j]).unwrap())
        } else {
            (0..N).min_by(|&i, &j| angles[i].partial_cmp(&angles[j]).unwrap())
        }
        .unwrap();
        angles[target] -= wraps * 2.0 * std::f64::consts::PI;
    }
    for &a in &angles {
        if a.abs() >= std::f64::consts::PI - CUT_MARGIN {
            return Err(GroupError::CutLocus { margin: CUT_MARGIN });
        }
    }
    Ok((angles, vectors))
}

/// Principal logarithm log: K → 𝔨.
///
/// Errors with `CutLocus` when the element has an eigen-angle at the ±π
/// boundary (eigenvalue -1 for SU(2)), where the principal branch is
/// ambiguous.
pub fn log_group(g: &GroupElement) -> Result<AlgebraVector, GroupError> {
    match &g.value {
        Value::M2(m) => {
            let (angles, v) = su_log_angles(m)?;
            let mut d = CMat::<2>::zeros();
            for i in 0..2 {
                d[(i, i)] = C64::new(0.0, angles[i]);
            }
            let x = v * d * v.adjoint();
            Ok(AlgebraVector::from_m2(g.spec(), &x))
        }
        Value::M3(m) => {
            let (angles, v) = su_log_angles(m)?;
            let mut d = CMat::<3>::zeros();
            for i in 0..3 {
                d[(i, i)] = C64::new(0.0, angles[i]);
            }
            let x = v * d * v.adjoint();
            Ok(AlgebraVector::from_m3(g.spec(), &x))
        }
        Value::Angles(a) => {
            for &t in a {
                if wrap_angle(t).abs() >= std::f64::consts::PI - CUT_MARGIN {
                    return Err(GroupError::CutLocus { margin: CUT_MARGIN });
                }
            }
            Ok(AlgebraVector::new(
                g.spec().clone(),
                a.iter().map(|&t| wrap_angle(t)).collect(),
            ))
        }
        Value::Product(parts) => {
            let mut coords = Vec::with_capacity(g.spec().dim());
            for p in parts {
                coords.extend(log_group(p)?.coords);
            }
            Ok(AlgebraVector::new(g.spec().clone(), coords))
        }
    }
}

/// g · exp(x): the exponential chart at g, used by the Newton solvers.
pub fn exp_chart(g: &GroupElement, x: &AlgebraVector) -> GroupElement {
    super::multiply(g, &exp_alg(x))
}
