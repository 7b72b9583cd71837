//! Characters, Weyl dimensions, and the commutator-pushforward density.
//!
//! Irreducible representations are labelled by the dimension d for SU(2)
//! and by fundamental-weight coordinates (n₁, n₂) for SU(3). Characters are
//! evaluated on eigen-angles: SU(2) through the sine ratio
//! sin(dθ)/sin(θ) (with a Chebyshev recurrence near the singular classes),
//! SU(3) through Schur polynomials computed by the
//! h_k = e₁h_{k-1} − e₂h_{k-2} + e₃h_{k-3} recurrence, which stays finite
//! at coincident eigenvalues where the Weyl-denominator form degenerates.

mod density;
mod integration;
mod peter_weyl;
mod reps;
mod sums;

pub use density::{
    density_series, density_su2_closed, mc_class_histogram, su2_exact_binned_law,
    su2_weyl_weight, su3_weyl_weight, DensityProfile, ProfilePoint, Provenance, Smoothing,
};
pub use integration::{integration_identity_check, IntegrationIdentity};
pub use peter_weyl::{peter_weyl_t2_check, PeterWeylCheck, T2_ORIENTATION_EXPONENT};
pub use reps::rep_matrix;
pub use sums::{inverse_dim_sum, su3_inverse_dim_tail, TailEstimate};

use crate::group::{class_coordinate, Family, GroupElement, GroupSpec};
use crate::linalg::C64;

/// Label of an irreducible representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum IrrepLabel {
    /// SU(2) irrep of dimension d ≥ 1.
    Su2 { d: u32 },
    /// SU(3) irrep with fundamental-weight coordinates (n₁, n₂).
    Su3 { n1: u32, n2: u32 },
}

impl IrrepLabel {
    pub fn trivial(spec: &GroupSpec) -> Self {
        match spec.family() {
            Family::Su2 => IrrepLabel::Su2 { d: 1 },
            Family::Su3 => IrrepLabel::Su3 { n1: 0, n2: 0 },
            _ => panic!("irrep labels are defined for SU(2) and SU(3)"),
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(
            self,
            IrrepLabel::Su2 { d: 1 } | IrrepLabel::Su3 { n1: 0, n2: 0 }
        )
    }
}

/// Weyl dimension of an irrep: d for SU(2), (n₁+1)(n₂+1)(n₁+n₂+2)/2 for
/// SU(3).
pub fn dim_irrep(label: &IrrepLabel) -> u64 {
    match *label {
        IrrepLabel::Su2 { d } => {
            assert!(d >= 1, "SU(2) label is the dimension, d >= 1");
            u64::from(d)
        }
        IrrepLabel::Su3 { n1, n2 } => {
            let (a, b) = (u64::from(n1), u64::from(n2));
            (a + 1) * (b + 1) * (a + b + 2) / 2
        }
    }
}

/// SU(2) character at class angle θ: sin(dθ)/sin(θ).
pub fn char_su2_angle(d: u32, theta: f64) -> f64 {
    let s = theta.sin();
    if s.abs() > 1e-8 {
        (d as f64 * theta).sin() / s
    } else {
        // Chebyshev recurrence U_{d-1}(cos θ); exact at the endpoints.
        let x = theta.cos();
        let mut prev = 1.0; // U_0
        if d == 1 {
            return prev;
        }
        let mut cur = 2.0 * x; // U_1
        for _ in 2..d {
            let next = 2.0 * x * cur - prev;
            prev = cur;
            cur = next;
        }
        cur
    }
}

/// SU(3) character from the three eigen-angles (summing to 0 mod 2π).
pub fn char_su3_angles(n1: u32, n2: u32, angles: &[f64; 3]) -> C64 {
    let x: Vec<C64> = angles.iter().map(|&t| C64::from_polar(1.0, t)).collect();
    let e1 = x[0] + x[1] + x[2];
    let e2 = x[0] * x[1] + x[0] * x[2] + x[1] * x[2];
    let e3 = x[0] * x[1] * x[2];
    // s_{(a,b,0)} = h_a h_b − h_{a+1} h_{b-1} with a = n1+n2, b = n2.
    let a = (n1 + n2) as usize;
    let b = n2 as usize;
    let top = a + 1;
    let mut h = vec![C64::new(0.0, 0.0); top + 1];
    h[0] = C64::new(1.0, 0.0);
    for k in 1..=top {
        let mut v = e1 * h[k - 1];
        if k >= 2 {
            v -= e2 * h[k - 2];
        }
        if k >= 3 {
            v += e3 * h[k - 3];
        }
        h[k] = v;
    }
    let hb1 = if b == 0 { C64::new(0.0, 0.0) } else { h[b - 1] };
    h[a] * h[b] - h[a + 1] * hb1
}

/// Character χ_μ(g), evaluated through the eigen-angles of g. Conjugation
/// invariant by construction.
pub fn character(label: &IrrepLabel, g: &GroupElement) -> C64 {
    match (*label, g.spec().family()) {
        (IrrepLabel::Su2 { d }, Family::Su2) => {
            let theta = class_coordinate(g).angles[0];
            C64::new(char_su2_angle(d, theta), 0.0)
        }
        (IrrepLabel::Su3 { n1, n2 }, Family::Su3) => {
            // Fundamental characters come straight from traces; the generic
            // path would also work but costs an eigen-decomposition.
            match (n1, n2) {
                (0, 0) => C64::new(1.0, 0.0),
                (1, 0) => g.trace(),
                (0, 1) => g.trace().conj(),
                (1, 1) => {
                    let t = g.trace();
                    C64::new(t.norm_sqr() - 1.0, 0.0)
                }
                _ => {
                    let cc = class_coordinate(g);
                    let angles = [cc.angles[0], cc.angles[1], cc.angles[2]];
                    char_su3_angles(n1, n2, &angles)
                }
            }
        }
        _ => panic!("label/spec mismatch"),
    }
}

/// Labels with dimension ≤ cutoff, ordered by dimension then
/// lexicographically — the pinned series-truncation order.
pub fn labels_by_dimension(spec: &GroupSpec, cutoff: u64) -> Vec<IrrepLabel> {
    let mut out = Vec::new();
    match spec.family() {
        Family::Su2 => {
            for d in 1..=cutoff.min(u32::MAX as u64) as u32 {
                out.push(IrrepLabel::Su2 { d });
            }
        }
        Family::Su3 => {
            let mut n1 = 0u32;
            loop {
                let first = IrrepLabel::Su3 { n1, n2: 0 };
                if dim_irrep(&first) > cutoff {
                    break;
                }
                let mut n2 = 0u32;
                loop {
                    let l = IrrepLabel::Su3 { n1, n2 };
                    if dim_irrep(&l) > cutoff {
                        break;
                    }
                    out.push(l);
                    n2 += 1;
                }
                n1 += 1;
            }
            out.sort_by_key(|l| (dim_irrep(l), *l));
        }
        _ => panic!("irrep enumeration is defined for SU(2) and SU(3)"),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{conjugate, haar_sample, identity};
    use crate::rng::seeded_stream;

    #[test]
    fn dimensions_of_small_irreps() {
        assert_eq!(dim_irrep(&IrrepLabel::Su2 { d: 2 }), 2);
        assert_eq!(dim_irrep(&IrrepLabel::Su3 { n1: 1, n2: 0 }), 3);
        assert_eq!(dim_irrep(&IrrepLabel::Su3 { n1: 0, n2: 1 }), 3);
        // Adjoint representation, by the Weyl formula arithmetic.
        assert_eq!(dim_irrep(&IrrepLabel::Su3 { n1: 1, n2: 1 }), 8);
        assert_eq!(dim_irrep(&IrrepLabel::Su3 { n1: 2, n2: 0 }), 6);
        assert_eq!(dim_irrep(&IrrepLabel::Su3 { n1: 2, n2: 1 }), 15);
    }

    #[test]
    fn character_at_identity_is_the_dimension() {
        let su2 = GroupSpec::su2();
        let su3 = GroupSpec::su3();
        for d in 1..12 {
            let v = character(&IrrepLabel::Su2 { d }, &identity(&su2));
            assert!((v.re - d as f64).abs() < 1e-9 && v.im.abs() < 1e-12);
        }
        for (n1, n2) in [(0, 0), (1, 0), (1, 1), (3, 2), (4, 0)] {
            let l = IrrepLabel::Su3 { n1, n2 };
            let v = character(&l, &identity(&su3));
            assert!(
                (v.re - dim_irrep(&l) as f64).abs() < 1e-8,
                "{l:?}: {v} vs {}",
                dim_irrep(&l)
            );
        }
    }

    #[test]
    fn su2_defining_character_is_twice_cosine() {
        let su2 = GroupSpec::su2();
        for theta in [0.1, 0.9, 2.7] {
            let g = su2.torus_point(&[theta]);
            let v = character(&IrrepLabel::Su2 { d: 2 }, &g);
            assert!((v.re - 2.0 * theta.cos()).abs() < 1e-12);
        }
    }

    #[test]
    fn characters_are_conjugation_invariant() {
        let mut rng = seeded_stream(51, 0);
        let su3 = GroupSpec::su3();
        for _ in 0..50 {
            let g = haar_sample(&su3, &mut rng);
            let u = haar_sample(&su3, &mut rng);
            for l in [
                IrrepLabel::Su3 { n1: 1, n2: 0 },
                IrrepLabel::Su3 { n1: 1, n2: 1 },
                IrrepLabel::Su3 { n1: 2, n2: 1 },
            ] {
                let a = character(&l, &g);
                let b = character(&l, &conjugate(&u, &g));
                assert!((a - b).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn desk_scale_character_orthogonality() {
        // |(1/n)Σ χ_μ(g)conj(χ_ν(g)) − δ_{μν}| ≤ 4/√n.
        let n = 40_000;
        let su2 = GroupSpec::su2();
        let mut rng = seeded_stream(53, 0);
        let labels = [IrrepLabel::Su2 { d: 2 }, IrrepLabel::Su2 { d: 3 }];
        let mut acc = [[C64::new(0.0, 0.0); 2]; 2];
        for _ in 0..n {
            let g = haar_sample(&su2, &mut rng);
            let vals: Vec<C64> = labels.iter().map(|l| character(l, &g)).collect();
            for i in 0..2 {
                for j in 0..2 {
                    acc[i][j] += vals[i] * vals[j].conj();
                }
            }
        }
        let bound = 4.0 / (n as f64).sqrt();
        for i in 0..2 {
            for j in 0..2 {
                let mean = acc[i][j] / C64::new(n as f64, 0.0);
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!(
                    (mean - C64::new(expect, 0.0)).norm() < bound,
                    "({i},{j}): {mean}"
                );
            }
        }
    }

    #[test]
    fn label_enumeration_is_sorted() {
        let su3 = GroupSpec::su3();
        let labels = labels_by_dimension(&su3, 50);
        for w in labels.windows(2) {
            assert!(dim_irrep(&w[0]) <= dim_irrep(&w[1]));
        }
        assert_eq!(labels[0], IrrepLabel::Su3 { n1: 0, n2: 0 });
        // Count cross-checked against direct enumeration of
        // (n1+1)(n2+1)(n1+n2+2)/2 ≤ 50.
        assert_eq!(labels.len(), 29);
    }
}
