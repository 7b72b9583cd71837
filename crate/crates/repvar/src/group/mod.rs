//! Compact groups: SU(2), SU(3), torus factors U(1)^r and finite products.
//!
//! Elements of the special unitary families are stored as small unitary
//! matrices in the defining representation; torus factors are stored as
//! angle tuples (exactness of the abelian case). Lie algebra vectors are
//! real coordinate tuples in a fixed orthonormal basis for the Ad-invariant
//! inner product `<X, Y> = -tr(XY)`.

mod adjoint;
mod conj;
mod explog;
mod haar;

pub use adjoint::{adjoint, adjoint_matrix, centralizer_basis, is_regular, is_regular_default};
pub use conj::{
    class_coordinate, class_distance, conjugacy_transport, transport_residual, ClassCoordinate,
    CLASS_TOL,
};
pub use explog::{exp_alg, exp_chart, log_group};
pub use haar::haar_sample;

use crate::linalg::{self, C64, CMat};
use nalgebra::DMatrix;
use std::fmt;
use std::sync::Arc;

pub const DEFAULT_REGULAR_TOL: f64 = 1e-8;
const UNITARITY_DRIFT_TOL: f64 = 1e-12;

/// Group family descriptor.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Su2,
    Su3,
    /// U(1)^r represented by angle tuples.
    Torus { r: usize },
    Product(Vec<Family>),
}

#[derive(Debug)]
struct SpecInner {
    family: Family,
    rank: usize,
    dim: usize,
    factors: Vec<GroupSpec>,
    basis2: Vec<CMat<2>>,
    basis3: Vec<CMat<3>>,
}

/// A supported compact group: family plus its Lie algebra data.
#[derive(Clone)]
pub struct GroupSpec {
    inner: Arc<SpecInner>,
}

impl PartialEq for GroupSpec {
    fn eq(&self, other: &Self) -> bool {
        self.inner.family == other.inner.family
    }
}

impl fmt::Debug for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupSpec({:?})", self.inner.family)
    }
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Pauli matrices scaled into the orthonormal su(2) basis e_a = i σ_a / √2.
fn su2_basis() -> Vec<CMat<2>> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    vec![
        CMat::<2>::new(c(0.0, 0.0), c(0.0, s), c(0.0, s), c(0.0, 0.0)),
        CMat::<2>::new(c(0.0, 0.0), c(s, 0.0), c(-s, 0.0), c(0.0, 0.0)),
        CMat::<2>::new(c(0.0, s), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -s)),
    ]
}

/// Gell-Mann matrices scaled into the orthonormal su(3) basis e_a = i λ_a / √2.
fn su3_basis() -> Vec<CMat<3>> {
    let mut lambdas: Vec<CMat<3>> = Vec::with_capacity(8);
    let mut m = CMat::<3>::zeros();
    m[(0, 1)] = c(1.0, 0.0);
    m[(1, 0)] = c(1.0, 0.0);
    lambdas.push(m);
    let mut m = CMat::<3>::zeros();
    m[(0, 1)] = c(0.0, -1.0);
    m[(1, 0)] = c(0.0, 1.0);
    lambdas.push(m);
    let mut m = CMat::<3>::zeros();
    m[(0, 0)] = c(1.0, 0.0);
    m[(1, 1)] = c(-1.0, 0.0);
    lambdas.push(m);
    let mut m = CMat::<3>::zeros();
    m[(0, 2)] = c(1.0, 0.0);
    m[(2, 0)] = c(1.0, 0.0);
    lambdas.push(m);
    let mut m = CMat::<3>::zeros();
    m[(0, 2)] = c(0.0, -1.0);
    m[(2, 0)] = c(0.0, 1.0);
    lambdas.push(m);
    let mut m = CMat::<3>::zeros();
    m[(1, 2)] = c(1.0, 0.0);
    m[(2, 1)] = c(1.0, 0.0);
    lambdas.push(m);
    let mut m = CMat::<3>::zeros();
    m[(1, 2)] = c(0.0, -1.0);
    m[(2, 1)] = c(0.0, 1.0);
    lambdas.push(m);
    let s3 = 1.0 / 3.0_f64.sqrt();
    let mut m = CMat::<3>::zeros();
    m[(0, 0)] = c(s3, 0.0);
    m[(1, 1)] = c(s3, 0.0);
    m[(2, 2)] = c(-2.0 * s3, 0.0);
    lambdas.push(m);

    let s = std::f64::consts::FRAC_1_SQRT_2;
    lambdas
        .into_iter()
        .map(|l| l * c(0.0, s))
        .collect()
}

impl GroupSpec {
    pub fn su2() -> Self {
        GroupSpec {
            inner: Arc::new(SpecInner {
                family: Family::Su2,
                rank: 1,
                dim: 3,
                factors: Vec::new(),
                basis2: su2_basis(),
                basis3: Vec::new(),
            }),
        }
    }

    pub fn su3() -> Self {
        GroupSpec {
            inner: Arc::new(SpecInner {
                family: Family::Su3,
                rank: 2,
                dim: 8,
                factors: Vec::new(),
                basis2: Vec::new(),
                basis3: su3_basis(),
            }),
        }
    }

    pub fn torus(r: usize) -> Self {
        assert!(r > 0, "torus rank must be positive");
        GroupSpec {
            inner: Arc::new(SpecInner {
                family: Family::Torus { r },
                rank: r,
                dim: r,
                factors: Vec::new(),
                basis2: Vec::new(),
                basis3: Vec::new(),
            }),
        }
    }

    pub fn product(factors: Vec<GroupSpec>) -> Self {
        assert!(!factors.is_empty(), "product needs at least one factor");
        let family = Family::Product(factors.iter().map(|f| f.family().clone()).collect());
        let rank = factors.iter().map(|f| f.rank()).sum();
        let dim = factors.iter().map(|f| f.dim()).sum();
        GroupSpec {
            inner: Arc::new(SpecInner {
                family,
                rank,
                dim,
                factors,
                basis2: Vec::new(),
                basis3: Vec::new(),
            }),
        }
    }

    pub fn family(&self) -> &Family {
        &self.inner.family
    }

    /// Rank of the group (dimension of a maximal torus).
    pub fn rank(&self) -> usize {
        self.inner.rank
    }

    /// Dimension of the Lie algebra.
    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn factors(&self) -> &[GroupSpec] {
        &self.inner.factors
    }

    pub fn is_abelian(&self) -> bool {
        match self.family() {
            Family::Su2 | Family::Su3 => false,
            Family::Torus { .. } => true,
            Family::Product(_) => self.factors().iter().all(|f| f.is_abelian()),
        }
    }

    pub(crate) fn basis2(&self) -> &[CMat<2>] {
        &self.inner.basis2
    }

    pub(crate) fn basis3(&self) -> &[CMat<3>] {
        &self.inner.basis3
    }

    /// The orthonormal algebra basis as dense matrices, for inspection and
    /// invariant checks. Torus factors use the diagonal picture diag(i e_j).
    pub fn algebra_basis(&self) -> Vec<DMatrix<C64>> {
        match self.family() {
            Family::Su2 => self
                .basis2()
                .iter()
                .map(|m| DMatrix::from_fn(2, 2, |i, j| m[(i, j)]))
                .collect(),
            Family::Su3 => self
                .basis3()
                .iter()
                .map(|m| DMatrix::from_fn(3, 3, |i, j| m[(i, j)]))
                .collect(),
            Family::Torus { r } => (0..*r)
                .map(|k| {
                    DMatrix::from_fn(*r, *r, |i, j| {
                        if i == j && i == k {
                            c(0.0, 1.0)
                        } else {
                            c(0.0, 0.0)
                        }
                    })
                })
                .collect(),
            Family::Product(_) => panic!("algebra_basis of a product: query the factors"),
        }
    }

    /// Coordinates (in the algebra basis) of the standard maximal torus
    /// subalgebra: the diagonal anti-Hermitian matrices. For torus groups
    /// this is the whole algebra.
    pub fn torus_subalgebra(&self) -> Vec<AlgebraVector> {
        let coords: Vec<Vec<f64>> = match self.family() {
            Family::Su2 => vec![vec![0.0, 0.0, 1.0]],
            Family::Su3 => {
                let mut a = vec![0.0; 8];
                a[2] = 1.0;
                let mut b = vec![0.0; 8];
                b[7] = 1.0;
                vec![a, b]
            }
            Family::Torus { r } => (0..*r)
                .map(|k| {
                    let mut v = vec![0.0; *r];
                    v[k] = 1.0;
                    v
                })
                .collect(),
            Family::Product(_) => {
                let mut out = Vec::new();
                let mut offset = 0;
                for f in self.factors() {
                    for v in f.torus_subalgebra() {
                        let mut coords = vec![0.0; self.dim()];
                        coords[offset..offset + f.dim()].copy_from_slice(&v.coords);
                        out.push(AlgebraVector::new(self.clone(), coords));
                    }
                    offset += f.dim();
                }
                return out;
            }
        };
        coords
            .into_iter()
            .map(|v| AlgebraVector::new(self.clone(), v))
            .collect()
    }

    /// Point of the standard maximal torus with the given angles
    /// (length = rank). For SU(n) this is diag(e^{iθ_1}, ..) with the last
    /// angle forced by det = 1.
    pub fn torus_point(&self, angles: &[f64]) -> GroupElement {
        assert_eq!(angles.len(), self.rank(), "angle count must equal rank");
        match self.family() {
            Family::Su2 => {
                let mut m = CMat::<2>::zeros();
                m[(0, 0)] = C64::from_polar(1.0, angles[0]);
                m[(1, 1)] = C64::from_polar(1.0, -angles[0]);
                GroupElement::from_m2(self.clone(), m)
            }
            Family::Su3 => {
                let mut m = CMat::<3>::zeros();
                m[(0, 0)] = C64::from_polar(1.0, angles[0]);
                m[(1, 1)] = C64::from_polar(1.0, angles[1]);
                m[(2, 2)] = C64::from_polar(1.0, -angles[0] - angles[1]);
                GroupElement::from_m3(self.clone(), m)
            }
            Family::Torus { .. } => GroupElement {
                spec: self.clone(),
                value: Value::Angles(angles.to_vec()),
            },
            Family::Product(_) => {
                let mut parts = Vec::new();
                let mut off = 0;
                for f in self.factors() {
                    parts.push(f.torus_point(&angles[off..off + f.rank()]));
                    off += f.rank();
                }
                GroupElement {
                    spec: self.clone(),
                    value: Value::Product(parts),
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) enum Value {
    M2(CMat<2>),
    M3(CMat<3>),
    Angles(Vec<f64>),
    Product(Vec<GroupElement>),
}

/// A group element: a unitary matrix of the defining representation, or an
/// angle tuple for torus factors.
#[derive(Clone, Debug)]
pub struct GroupElement {
    spec: GroupSpec,
    pub(crate) value: Value,
}

#[derive(Debug, thiserror::Error)]
pub enum GroupError {
    #[error("element lies on the exponential cut locus (eigen-angle within {margin:e} of π)")]
    CutLocus { margin: f64 },
    #[error("elements are not conjugate (class distance {distance:e} exceeds {tol:e})")]
    NotConjugate { distance: f64, tol: f64 },
}

impl GroupElement {
    pub(crate) fn from_m2(spec: GroupSpec, m: CMat<2>) -> Self {
        debug_assert_eq!(spec.family(), &Family::Su2);
        GroupElement {
            spec,
            value: Value::M2(m),
        }
    }

    pub(crate) fn from_m3(spec: GroupSpec, m: CMat<3>) -> Self {
        debug_assert_eq!(spec.family(), &Family::Su3);
        GroupElement {
            spec,
            value: Value::M3(m),
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub(crate) fn m2(&self) -> &CMat<2> {
        match &self.value {
            Value::M2(m) => m,
            _ => panic!("not an SU(2) element"),
        }
    }

    pub(crate) fn m3(&self) -> &CMat<3> {
        match &self.value {
            Value::M3(m) => m,
            _ => panic!("not an SU(3) element"),
        }
    }

    pub(crate) fn angles(&self) -> &[f64] {
        match &self.value {
            Value::Angles(a) => a,
            _ => panic!("not a torus element"),
        }
    }

    pub(crate) fn parts(&self) -> &[GroupElement] {
        match &self.value {
            Value::Product(p) => p,
            _ => panic!("not a product element"),
        }
    }

    /// The defining-representation matrix (diagonal phases for torus
    /// factors; block diagonal over product factors).
    pub fn matrix(&self) -> DMatrix<C64> {
        match &self.value {
            Value::M2(m) => DMatrix::from_fn(2, 2, |i, j| m[(i, j)]),
            Value::M3(m) => DMatrix::from_fn(3, 3, |i, j| m[(i, j)]),
            Value::Angles(a) => DMatrix::from_fn(a.len(), a.len(), |i, j| {
                if i == j {
                    C64::from_polar(1.0, a[i])
                } else {
                    c(0.0, 0.0)
                }
            }),
            Value::Product(parts) => {
                let blocks: Vec<DMatrix<C64>> = parts.iter().map(|p| p.matrix()).collect();
                let n: usize = blocks.iter().map(|b| b.nrows()).sum();
                let mut out = DMatrix::zeros(n, n);
                let mut off = 0;
                for b in blocks {
                    out.view_mut((off, off), (b.nrows(), b.ncols())).copy_from(&b);
                    off += b.nrows();
                }
                out
            }
        }
    }

    /// Trace of the defining representation.
    pub fn trace(&self) -> C64 {
        match &self.value {
            Value::M2(m) => m.trace(),
            Value::M3(m) => m.trace(),
            Value::Angles(a) => a.iter().map(|&t| C64::from_polar(1.0, t)).sum(),
            Value::Product(parts) => parts.iter().map(|p| p.trace()).sum(),
        }
    }

    pub fn re_trace(&self) -> f64 {
        self.trace().re
    }

    /// Frobenius distance to another element of the same spec.
    pub fn distance(&self, other: &GroupElement) -> f64 {
        assert_eq!(self.spec, other.spec, "spec mismatch");
        match (&self.value, &other.value) {
            (Value::M2(a), Value::M2(b)) => (a - b).norm(),
            (Value::M3(a), Value::M3(b)) => (a - b).norm(),
            (Value::Angles(a), Value::Angles(b)) => a
                .iter()
                .zip(b)
                .map(|(&x, &y)| {
                    let d = C64::from_polar(1.0, x) - C64::from_polar(1.0, y);
                    d.norm_sqr()
                })
                .sum::<f64>()
                .sqrt(),
            (Value::Product(a), Value::Product(b)) => a
                .iter()
                .zip(b)
                .map(|(x, y)| x.distance(y).powi(2))
                .sum::<f64>()
                .sqrt(),
            _ => unreachable!("matching specs imply matching representations"),
        }
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.distance(&identity(&self.spec)) <= tol
    }

    /// ‖g g† − 1‖ for matrix families; exact 0 for torus factors.
    pub fn unitarity_defect(&self) -> f64 {
        match &self.value {
            Value::M2(m) => linalg::unitarity_defect(m),
            Value::M3(m) => linalg::unitarity_defect(m),
            Value::Angles(_) => 0.0,
            Value::Product(parts) => parts
                .iter()
                .map(|p| p.unitarity_defect().powi(2))
                .sum::<f64>()
                .sqrt(),
        }
    }

    pub fn determinant(&self) -> C64 {
        match &self.value {
            Value::M2(m) => m.determinant(),
            Value::M3(m) => m.determinant(),
            Value::Angles(a) => C64::from_polar(1.0, a.iter().sum()),
            Value::Product(parts) => parts.iter().map(|p| p.determinant()).product(),
        }
    }
}

/// Identity element of a spec.
pub fn identity(spec: &GroupSpec) -> GroupElement {
    match spec.family() {
        Family::Su2 => GroupElement::from_m2(spec.clone(), CMat::<2>::identity()),
        Family::Su3 => GroupElement::from_m3(spec.clone(), CMat::<3>::identity()),
        Family::Torus { r } => GroupElement {
            spec: spec.clone(),
            value: Value::Angles(vec![0.0; *r]),
        },
        Family::Product(_) => GroupElement {
            spec: spec.clone(),
            value: Value::Product(spec.factors().iter().map(identity).collect()),
        },
    }
}

fn reproject<const N: usize>(m: CMat<N>) -> CMat<N> {
    if linalg::unitarity_defect(&m) > UNITARITY_DRIFT_TOL {
        linalg::polar_project_su(&m)
    } else {
        m
    }
}

/// Group multiplication. Results are re-unitarized by polar projection
/// whenever accumulated drift exceeds 1e-12, so long operation chains stay
/// on the group.
pub fn multiply(a: &GroupElement, b: &GroupElement) -> GroupElement {
    assert_eq!(a.spec, b.spec, "spec mismatch");
    let value = match (&a.value, &b.value) {
        (Value::M2(x), Value::M2(y)) => Value::M2(reproject(x * y)),
        (Value::M3(x), Value::M3(y)) => Value::M3(reproject(x * y)),
        (Value::Angles(x), Value::Angles(y)) => Value::Angles(
            x.iter()
                .zip(y)
                .map(|(&p, &q)| wrap_angle(p + q))
                .collect(),
        ),
        (Value::Product(x), Value::Product(y)) => {
            Value::Product(x.iter().zip(y).map(|(p, q)| multiply(p, q)).collect())
        }
        _ => unreachable!(),
    };
    GroupElement {
        spec: a.spec.clone(),
        value,
    }
}

/// Group inverse (conjugate transpose for the unitary families).
pub fn inverse(a: &GroupElement) -> GroupElement {
    let value = match &a.value {
        Value::M2(m) => Value::M2(m.adjoint()),
        Value::M3(m) => Value::M3(m.adjoint()),
        Value::Angles(t) => Value::Angles(t.iter().map(|&x| wrap_angle(-x)).collect()),
        Value::Product(parts) => Value::Product(parts.iter().map(inverse).collect()),
    };
    GroupElement {
        spec: a.spec.clone(),
        value,
    }
}

/// The commutator map p(g, h) = g h g⁻¹ h⁻¹.
pub fn commutator(g: &GroupElement, h: &GroupElement) -> GroupElement {
    multiply(&multiply(g, h), &multiply(&inverse(g), &inverse(h)))
}

/// Conjugation u g u⁻¹.
pub fn conjugate(u: &GroupElement, g: &GroupElement) -> GroupElement {
    multiply(&multiply(u, g), &inverse(u))
}

pub(crate) fn wrap_angle(t: f64) -> f64 {
    // Principal representative in (-π, π].
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut x = t % two_pi;
    if x <= -std::f64::consts::PI {
        x += two_pi;
    } else if x > std::f64::consts::PI {
        x -= two_pi;
    }
    x
}

/// Tangent vector in algebra-basis coordinates.
#[derive(Clone, Debug)]
pub struct AlgebraVector {
    spec: GroupSpec,
    pub coords: Vec<f64>,
}

impl AlgebraVector {
    pub fn new(spec: GroupSpec, coords: Vec<f64>) -> Self {
        assert_eq!(coords.len(), spec.dim(), "coordinate length must equal dim");
        AlgebraVector { spec, coords }
    }

    pub fn zero(spec: &GroupSpec) -> Self {
        AlgebraVector {
            spec: spec.clone(),
            coords: vec![0.0; spec.dim()],
        }
    }

    pub fn basis_vector(spec: &GroupSpec, k: usize) -> Self {
        let mut coords = vec![0.0; spec.dim()];
        coords[k] = 1.0;
        AlgebraVector {
            spec: spec.clone(),
            coords,
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn dot(&self, other: &AlgebraVector) -> f64 {
        assert_eq!(self.spec, other.spec, "spec mismatch");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn scale(&self, s: f64) -> AlgebraVector {
        AlgebraVector {
            spec: self.spec.clone(),
            coords: self.coords.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &AlgebraVector) -> AlgebraVector {
        assert_eq!(self.spec, other.spec, "spec mismatch");
        AlgebraVector {
            spec: self.spec.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &AlgebraVector) -> AlgebraVector {
        self.add(&other.scale(-1.0))
    }

    /// Matrix of the vector in the defining representation (anti-Hermitian).
    pub fn to_matrix(&self) -> DMatrix<C64> {
        match self.spec.family() {
            Family::Su2 => {
                let m = self.to_m2();
                DMatrix::from_fn(2, 2, |i, j| m[(i, j)])
            }
            Family::Su3 => {
                let m = self.to_m3();
                DMatrix::from_fn(3, 3, |i, j| m[(i, j)])
            }
            Family::Torus { r } => DMatrix::from_fn(*r, *r, |i, j| {
                if i == j {
                    c(0.0, self.coords[i])
                } else {
                    c(0.0, 0.0)
                }
            }),
            Family::Product(_) => panic!("to_matrix of a product vector: split first"),
        }
    }

    pub(crate) fn to_m2(&self) -> CMat<2> {
        let b = self.spec.basis2();
        let mut m = CMat::<2>::zeros();
        for (ck, bk) in self.coords.iter().zip(b) {
            m += bk * c(*ck, 0.0);
        }
        m
    }

    pub(crate) fn to_m3(&self) -> CMat<3> {
        let b = self.spec.basis3();
        let mut m = CMat::<3>::zeros();
        for (ck, bk) in self.coords.iter().zip(b) {
            m += bk * c(*ck, 0.0);
        }
        m
    }

    pub(crate) fn from_m2(spec: &GroupSpec, m: &CMat<2>) -> Self {
        let coords = spec
            .basis2()
            .iter()
            .map(|e| -(e * m).trace().re)
            .collect();
        AlgebraVector {
            spec: spec.clone(),
            coords,
        }
    }

    pub(crate) fn from_m3(spec: &GroupSpec, m: &CMat<3>) -> Self {
        let coords = spec
            .basis3()
            .iter()
            .map(|e| -(e * m).trace().re)
            .collect();
        AlgebraVector {
            spec: spec.clone(),
            coords,
        }
    }

    /// Split a product-spec vector into per-factor vectors.
    pub fn split(&self) -> Vec<AlgebraVector> {
        let mut out = Vec::new();
        let mut off = 0;
        for f in self.spec.factors() {
            out.push(AlgebraVector::new(
                f.clone(),
                self.coords[off..off + f.dim()].to_vec(),
            ));
            off += f.dim();
        }
        out
    }
}

/// Pointwise algebra bracket [X, Y] = XY - YX in coordinates.
pub fn algebra_bracket(x: &AlgebraVector, y: &AlgebraVector) -> AlgebraVector {
    assert_eq!(x.spec(), y.spec(), "spec mismatch");
    match x.spec().family() {
        Family::Su2 => {
            let a = x.to_m2();
            let b = y.to_m2();
            AlgebraVector::from_m2(x.spec(), &(a * b - b * a))
        }
        Family::Su3 => {
            let a = x.to_m3();
            let b = y.to_m3();
            AlgebraVector::from_m3(x.spec(), &(a * b - b * a))
        }
        Family::Torus { .. } => AlgebraVector::zero(x.spec()),
        Family::Product(_) => {
            let parts: Vec<AlgebraVector> = x
                .split()
                .iter()
                .zip(y.split().iter())
                .map(|(a, b)| algebra_bracket(a, b))
                .collect();
            let coords = parts.iter().flat_map(|p| p.coords.clone()).collect();
            AlgebraVector::new(x.spec().clone(), coords)
        }
    }
}
