//! Monte Carlo check of the integration identity
//! ∫ χ(x h y h⁻¹) dh = χ(x) χ(y) / χ(1), specialized to x = g, y = g⁻¹:
//! the Haar mean of χ_μ([g, h]) over h equals |χ_μ(g)|² / d_μ.

use super::{character, dim_irrep, IrrepLabel};
use crate::group::{commutator, haar_sample, GroupElement};
use crate::linalg::C64;
use crate::rng::{block_ranges, seeded_stream};
use rayon::prelude::*;

#[derive(Clone, Copy, Debug)]
pub struct IntegrationIdentity {
    pub mc_mean: C64,
    pub exact: f64,
    pub stderr: f64,
    pub z_score: f64,
}

/// Estimate the Haar mean of χ_μ(g h g⁻¹ h⁻¹) over n samples of h and
/// compare with |χ_μ(g)|²/dim μ. The z-score uses the combined
/// real/imaginary sample variance.
pub fn integration_identity_check(
    g: &GroupElement,
    label: &IrrepLabel,
    n: u64,
    seed: u64,
    blocks: usize,
) -> IntegrationIdentity {
    assert!(n >= 1_000, "need at least 10³ samples");
    let spec = g.spec().clone();
    let ranges = block_ranges(n as usize, blocks);
    let partials: Vec<(C64, f64)> = ranges
        .par_iter()
        .enumerate()
        .map(|(b, range)| {
            let mut rng = seeded_stream(seed, b as u64);
            let mut sum = C64::new(0.0, 0.0);
            let mut sum_sq = 0.0;
            for _ in range.clone() {
                let h = haar_sample(&spec, &mut rng);
                let v = character(label, &commutator(g, &h));
                sum += v;
                sum_sq += v.norm_sqr();
            }
            (sum, sum_sq)
        })
        .collect();
    let mut sum = C64::new(0.0, 0.0);
    let mut sum_sq = 0.0;
    for (s, s2) in partials {
        sum += s;
        sum_sq += s2;
    }
    let mean = sum / C64::new(n as f64, 0.0);
    // Combined variance of the complex values about their mean.
    let var = (sum_sq / n as f64 - mean.norm_sqr()).max(0.0);
    let stderr = (var / n as f64).sqrt();
    let exact = character(label, g).norm_sqr() / dim_irrep(label) as f64;
    let dev = (mean - C64::new(exact, 0.0)).norm();
    let z_score = if stderr == 0.0 {
        if dev == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        dev / stderr
    };
    IntegrationIdentity {
        mc_mean: mean,
        exact,
        stderr,
        z_score,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    #[test]
    fn trivial_character_gives_exact_one_and_zero_z() {
        let spec = GroupSpec::su2();
        let g = spec.torus_point(&[1.1]);
        let r = integration_identity_check(&g, &IrrepLabel::Su2 { d: 1 }, 2_000, 1, 4);
        assert_eq!(r.exact, 1.0);
        assert_eq!(r.mc_mean, C64::new(1.0, 0.0));
        assert_eq!(r.z_score, 0.0);
    }

    #[test]
    fn su2_defining_character_at_right_angle_class() {
        // χ₂(θ=π/2) = 2cos(π/2) = 0, so the exact value is 0 and the MC
        // mean must vanish within noise.
        let spec = GroupSpec::su2();
        let g = spec.torus_point(&[std::f64::consts::FRAC_PI_2]);
        let r = integration_identity_check(&g, &IrrepLabel::Su2 { d: 2 }, 100_000, 2, 32);
        assert_eq!(r.exact, 0.0);
        assert!(r.mc_mean.norm() <= 4.0 * r.stderr, "mean {}", r.mc_mean);
    }

    #[test]
    fn su3_defining_character_identity_holds() {
        let spec = GroupSpec::su3();
        let mut rng = seeded_stream(3, 0);
        let g = haar_sample(&spec, &mut rng);
        let r = integration_identity_check(&g, &IrrepLabel::Su3 { n1: 1, n2: 0 }, 100_000, 4, 32);
        assert!(r.z_score <= 4.0, "z = {}", r.z_score);
    }
}
