//! Desk-scale check of the Peter-Weyl multiplication-operator lemma.
//!
//! Model the function F(g, h) = tr(L · π_μ(h⁻¹)) on K × K. The twist
//! T₂(g, h) = (g, hg⁻¹) acts on functions by pre-composition with T₂
//! (the pinned orientation), and on the μ-th Fourier coefficient it acts
//! as the multiplication operator L ↦ L · π_μ(g)^{+1}:
//!
//!   F(T₂(g, h)) = tr(L π_μ(g h⁻¹)) = tr((L π_μ(g)) π_μ(h⁻¹)).
//!
//! The exponent +1 is recorded as `T2_ORIENTATION_EXPONENT` and pinned by
//! the trivial-μ and d = 2 tests below.

use super::{rep_matrix, IrrepLabel};
use crate::group::{inverse, multiply, GroupElement};
use crate::linalg::C64;
use nalgebra::DMatrix;

/// Which power of π_μ(g) multiplies the Fourier coefficient under the
/// pinned pre-composition-with-T₂ orientation.
pub const T2_ORIENTATION_EXPONENT: i32 = 1;

#[derive(Clone, Debug)]
pub struct PeterWeylCheck {
    pub lhs: C64,
    pub rhs: C64,
    pub residual: f64,
}

/// Compare F(T₂(g, h)) against the multiplication-operator prediction.
pub fn peter_weyl_t2_check(
    label: &IrrepLabel,
    coefficient: &DMatrix<C64>,
    g: &GroupElement,
    h: &GroupElement,
) -> PeterWeylCheck {
    let dim = rep_matrix(label, g).nrows();
    assert_eq!(
        coefficient.nrows(),
        dim,
        "coefficient must act on the {dim}-dimensional representation space"
    );
    // lhs: evaluate F at T₂(g, h) = (g, h g⁻¹).
    let twisted_h = multiply(h, &inverse(g));
    let lhs = (coefficient * rep_matrix(label, &inverse(&twisted_h))).trace();
    // rhs: multiplication-operator side.
    let pg = rep_matrix(label, g);
    let mult = match T2_ORIENTATION_EXPONENT {
        1 => coefficient * &pg,
        -1 => coefficient * pg.adjoint(),
        _ => unreachable!(),
    };
    let rhs = (mult * rep_matrix(label, &inverse(h))).trace();
    PeterWeylCheck {
        lhs,
        rhs,
        residual: (lhs - rhs).norm(),
    }
}
