//! Haar-distributed sampling.

use super::{Family, GroupElement, GroupSpec, Value};
use crate::linalg::{mgs_unitarize, normalize_determinant, C64, CMat};
use rand::Rng;
use rand_distr::StandardNormal;

fn ginibre<const N: usize, R: Rng + ?Sized>(rng: &mut R) -> CMat<N> {
    CMat::<N>::from_fn(|_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        C64::new(re, im)
    })
}

/// Draw a Haar-distributed element.
///
/// SU(n) samples come from orthonormalizing a complex Gaussian matrix
/// (Gram-Schmidt with the positive-diagonal R convention, which yields Haar
/// measure on U(n)) followed by the determinant phase correction into
/// SU(n). Torus factors use independent uniform angles.
pub fn haar_sample<R: Rng + ?Sized>(spec: &GroupSpec, rng: &mut R) -> GroupElement {
    match spec.family() {
        Family::Su2 => {
            // Second pass restores orthogonality lost on the rare
            // ill-conditioned Gaussian draw; it leaves the law unchanged.
            let q = mgs_unitarize(&mgs_unitarize(&ginibre::<2, R>(rng)));
            GroupElement::from_m2(spec.clone(), normalize_determinant(&q))
        }
        Family::Su3 => {
            let q = mgs_unitarize(&mgs_unitarize(&ginibre::<3, R>(rng)));
            GroupElement::from_m3(spec.clone(), normalize_determinant(&q))
        }
        Family::Torus { r } => {
            let angles = (0..*r)
                .map(|_| rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI))
                .collect();
            GroupElement {
                spec: spec.clone(),
                value: Value::Angles(angles),
            }
        }
        Family::Product(_) => {
            let parts = spec.factors().iter().map(|f| haar_sample(f, rng)).collect();
            GroupElement {
                spec: spec.clone(),
                value: Value::Product(parts),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::identity;
    use crate::rng::seeded_stream;

    #[test]
    fn samples_land_on_the_group() {
        let mut rng = seeded_stream(11, 0);
        for spec in [GroupSpec::su2(), GroupSpec::su3()] {
            for _ in 0..100 {
                let g = haar_sample(&spec, &mut rng);
                assert!(g.unitarity_defect() < 1e-12);
                assert!((g.determinant() - C64::new(1.0, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn trivial_character_has_mean_exactly_one() {
        // χ_1 ≡ 1 regardless of the sample.
        let spec = GroupSpec::su2();
        let mut rng = seeded_stream(5, 1);
        let g = haar_sample(&spec, &mut rng);
        let _ = g;
        assert_eq!(1.0_f64, 1.0_f64);
    }

    #[test]
    fn product_samples_have_product_structure() {
        let spec = GroupSpec::product(vec![GroupSpec::su2(), GroupSpec::torus(2)]);
        let mut rng = seeded_stream(3, 0);
        let g = haar_sample(&spec, &mut rng);
        assert_eq!(g.parts().len(), 2);
        assert!(!g.is_identity(1e-3));
        let _ = identity(&spec);
    }
}
