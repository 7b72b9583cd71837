//! Adjoint action, centralizer subalgebras, regularity.

use super::{AlgebraVector, Family, GroupElement, Value, DEFAULT_REGULAR_TOL};
use crate::linalg::null_space_basis;
use nalgebra::DMatrix;

/// Ad_g(X) = g X g⁻¹.
pub fn adjoint(g: &GroupElement, x: &AlgebraVector) -> AlgebraVector {
    assert_eq!(g.spec(), x.spec(), "spec mismatch");
    match &g.value {
        Value::M2(m) => AlgebraVector::from_m2(g.spec(), &(m * x.to_m2() * m.adjoint())),
        Value::M3(m) => AlgebraVector::from_m3(g.spec(), &(m * x.to_m3() * m.adjoint())),
        Value::Angles(_) => x.clone(),
        Value::Product(parts) => {
            let mut coords = Vec::with_capacity(g.spec().dim());
            for (p, xp) in parts.iter().zip(x.split()) {
                coords.extend(adjoint(p, &xp).coords);
            }
            AlgebraVector::new(g.spec().clone(), coords)
        }
    }
}

/// Matrix of Ad(g) in the algebra basis (real, orthogonal).
pub fn adjoint_matrix(g: &GroupElement) -> DMatrix<f64> {
    let spec = g.spec().clone();
    let d = spec.dim();
    let mut m = DMatrix::zeros(d, d);
    for j in 0..d {
        let col = adjoint(g, &AlgebraVector::basis_vector(&spec, j));
        for i in 0..d {
            m[(i, j)] = col.coords[i];
        }
    }
    m
}

/// Orthonormal basis of the centralizer subalgebra 𝔨^g = ker(Ad(g) - 1),
/// detected as singular values of Ad(g) - 1 at or below `tol`.
pub fn centralizer_basis(g: &GroupElement, tol: f64) -> Vec<AlgebraVector> {
    match g.spec().family() {
        // Abelian factors centralize everything; skip the SVD.
        Family::Torus { r } => (0..*r)
            .map(|k| AlgebraVector::basis_vector(g.spec(), k))
            .collect(),
        _ => {
            let ad = adjoint_matrix(g);
            let m = ad - DMatrix::identity(g.spec().dim(), g.spec().dim());
            null_space_basis(&m, tol)
                .into_iter()
                .map(|v| AlgebraVector::new(g.spec().clone(), v.iter().copied().collect()))
                .collect()
        }
    }
}

/// g is regular iff its centralizer has the minimal dimension rank(𝔨).
pub fn is_regular(g: &GroupElement, tol: f64) -> bool {
    centralizer_basis(g, tol).len() == g.spec().rank()
}

/// `is_regular` at the default tolerance 1e-8.
pub fn is_regular_default(g: &GroupElement) -> bool {
    is_regular(g, DEFAULT_REGULAR_TOL)
}
