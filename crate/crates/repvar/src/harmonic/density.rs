//! The commutator-pushforward density dρ by character series, closed form,
//! and Monte Carlo.
//!
//! The law of p(g, h) = ghg⁻¹h⁻¹ under independent Haar pairs has density
//! Σ_μ d_μ⁻¹ χ_μ(k) with respect to Haar measure. For SU(2) on the class
//! angle θ the series resums in closed form:
//!
//!   Σ_{d≥1} d⁻¹ sin(dθ)/sin(θ) = (π − θ) / (2 sin θ),
//!
//! using Σ d⁻¹ sin(dθ) = (π − θ)/2 on (0, 2π). The resummed form is
//! positive and integrates to 1 against the Weyl radial weight
//! (2/π)sin²θ, and it is what the series and the Monte Carlo histogram are
//! checked against.

use super::{character, dim_irrep, labels_by_dimension, IrrepLabel};
use crate::group::{class_coordinate, commutator, haar_sample, Family, GroupSpec};
use crate::linalg::C64;
use crate::rng::{block_ranges, seeded_stream};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Series smoothing for near-singular classes.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Smoothing {
    None,
    /// Abel factor q^{dim μ}.
    Abel { q: f64 },
    /// Cesàro average of the partial sums.
    Cesaro,
}

/// Where a density value came from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Provenance {
    Series { cutoff: u64, smoothing: Smoothing },
    ClosedForm,
    MonteCarlo { samples: u64 },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProfilePoint {
    /// Class coordinate (one angle for SU(2), the angle tuple otherwise).
    pub coordinate: Vec<f64>,
    /// Density per unit Haar measure.
    pub density: f64,
    /// Standard error where statistical, 0 for exact methods.
    pub stderr: f64,
}

/// A tabulated density over conjugacy-class coordinates.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DensityProfile {
    pub family: String,
    pub points: Vec<ProfilePoint>,
    pub provenance: Provenance,
    /// Declared truncation/statistical error bound on the tabulated values.
    pub declared_error: f64,
}

impl DensityProfile {
    /// ∫ density · (Weyl radial weight) over the SU(2) class domain [0, π],
    /// treating the tabulated points as midpoint values of equal bins.
    pub fn su2_normalization(&self) -> f64 {
        let n = self.points.len();
        let w = PI / n as f64;
        self.points
            .iter()
            .map(|p| p.density * su2_weyl_weight(p.coordinate[0]) * w)
            .sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("coordinate,density,stderr,provenance\n");
        let prov = match &self.provenance {
            Provenance::Series { cutoff, smoothing } => format!("series-{cutoff}-{smoothing:?}"),
            Provenance::ClosedForm => "closed-form".to_string(),
            Provenance::MonteCarlo { samples } => format!("monte-carlo-{samples}"),
        };
        for p in &self.points {
            let coord = p
                .coordinate
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(";");
            out.push_str(&format!("{},{},{},{}\n", coord, p.density, p.stderr, prov));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("profile serializes")
    }
}

/// SU(2) Weyl radial weight: the density of the class angle of a Haar
/// sample, (2/π) sin²θ on [0, π].
pub fn su2_weyl_weight(theta: f64) -> f64 {
    (2.0 / PI) * theta.sin().powi(2)
}

/// SU(3) Weyl radial weight on the torus angles (θ₁, θ₂) ∈ [-π, π)²:
/// |Δ|² / (6 (2π)²) with Δ the Vandermonde of the three eigenvalues.
/// Integrates to 1 over the square.
pub fn su3_weyl_weight(theta1: f64, theta2: f64) -> f64 {
    let theta3 = -theta1 - theta2;
    let x = [
        C64::from_polar(1.0, theta1),
        C64::from_polar(1.0, theta2),
        C64::from_polar(1.0, theta3),
    ];
    let mut v = 1.0;
    for i in 0..3 {
        for j in (i + 1)..3 {
            v *= (x[i] - x[j]).norm_sqr();
        }
    }
    v / (6.0 * (2.0 * PI) * (2.0 * PI))
}

/// Resummed SU(2) density (π − θ)/(2 sin θ) on (0, π).
///
/// Implemented as the resummation of the character series rather than the
/// printed log/arg expression, which does not match the series numerically;
/// the series partial sums and the Monte Carlo histogram are the arbiters.
pub fn density_su2_closed(theta: f64) -> f64 {
    assert!(
        theta > 0.0 && theta < PI,
        "class angle must lie strictly inside (0, π)"
    );
    (PI - theta) / (2.0 * theta.sin())
}

/// Partial sum Σ_{dim ≤ N} d_μ⁻¹ χ_μ(k), optionally smoothed. Returns the
/// real part; the imaginary part must vanish (ρ is real) and is asserted
/// below 1e-9.
pub fn density_series(
    spec: &GroupSpec,
    point: &crate::group::GroupElement,
    cutoff: u64,
    smoothing: Smoothing,
) -> f64 {
    match spec.family() {
        Family::Su2 => {
            // Same ordering as the generic path (dimension order) with the
            // O(1) closed-form character per term.
            let theta = class_coordinate(point).angles[0];
            let mut acc = 0.0;
            let mut cesaro_acc = 0.0;
            for d in 1..=cutoff {
                let term = super::char_su2_angle(d as u32, theta) / d as f64;
                let weight = match smoothing {
                    Smoothing::None | Smoothing::Cesaro => 1.0,
                    Smoothing::Abel { q } => q.powi(d as i32),
                };
                acc += weight * term;
                cesaro_acc += acc;
            }
            if smoothing == Smoothing::Cesaro {
                cesaro_acc / cutoff as f64
            } else {
                acc
            }
        }
        Family::Su3 => {
            let labels = labels_by_dimension(spec, cutoff);
            let mut acc = C64::new(0.0, 0.0);
            let mut cesaro_acc = C64::new(0.0, 0.0);
            for l in &labels {
                let d = dim_irrep(l);
                let weight = match smoothing {
                    Smoothing::None | Smoothing::Cesaro => 1.0,
                    Smoothing::Abel { q } => q.powi(d as i32),
                };
                acc += character(l, point) * C64::new(weight / d as f64, 0.0);
                cesaro_acc += acc;
            }
            let v = if smoothing == Smoothing::Cesaro {
                cesaro_acc / C64::new(labels.len() as f64, 0.0)
            } else {
                acc
            };
            assert!(
                v.im.abs() <= 1e-9,
                "density series must be real, got imaginary part {}",
                v.im
            );
            v.re
        }
        _ => panic!("density series is defined for SU(2) and SU(3)"),
    }
}

/// Exact SU(2) binned law of the class angle of a Haar commutator:
/// bin mass ∫ (π − θ) sin θ / π dθ, from the closed antiderivative
/// F(θ) = (-(π − θ) cos θ − sin θ)/π.
pub fn su2_exact_binned_law(bins: usize) -> Vec<f64> {
    let f = |t: f64| (-(PI - t) * t.cos() - t.sin()) / PI;
    (0..bins)
        .map(|i| {
            let a = PI * i as f64 / bins as f64;
            let b = PI * (i + 1) as f64 / bins as f64;
            f(b) - f(a)
        })
        .collect()
}

/// Histogram of ClassCoordinate(p(g, h)) over Haar pairs, as a
/// DensityProfile (density per unit Haar, i.e. bin mass divided by the
/// binned Weyl weight). Torus specs degenerate to a point mass at the
/// identity class, reported as a single profile point.
///
/// Samples are split into indexed blocks with one RNG stream per block;
/// the result is reproducible for fixed (seed, block count) and
/// independent of the rayon worker count.
pub fn mc_class_histogram(
    spec: &GroupSpec,
    n: u64,
    bins: usize,
    seed: u64,
    blocks: usize,
) -> DensityProfile {
    match spec.family() {
        Family::Su2 => {
            let ranges = block_ranges(n as usize, blocks);
            let counts: Vec<Vec<u64>> = ranges
                .par_iter()
                .enumerate()
                .map(|(b, range)| {
                    let mut rng = seeded_stream(seed, b as u64);
                    let mut c = vec![0u64; bins];
                    for _ in range.clone() {
                        let g = haar_sample(spec, &mut rng);
                        let h = haar_sample(spec, &mut rng);
                        let theta = class_coordinate(&commutator(&g, &h)).angles[0];
                        let idx = ((theta / PI * bins as f64).floor() as i64)
                            .clamp(0, bins as i64 - 1) as usize;
                        c[idx] += 1;
                    }
                    c
                })
                .collect();
            let mut total = vec![0u64; bins];
            for c in counts {
                for (t, v) in total.iter_mut().zip(c) {
                    *t += v;
                }
            }
            // Bin mass over Weyl-weight mass gives density per unit Haar.
            let weight_mass: Vec<f64> = {
                let f = |t: f64| t / PI - (2.0 * t).sin() / (2.0 * PI); // ∫ (2/π)sin²
                (0..bins)
                    .map(|i| {
                        let a = PI * i as f64 / bins as f64;
                        let b = PI * (i + 1) as f64 / bins as f64;
                        f(b) - f(a)
                    })
                    .collect()
            };
            let points = total
                .iter()
                .enumerate()
                .map(|(i, &cnt)| {
                    let p = cnt as f64 / n as f64;
                    let se_p = (p * (1.0 - p) / n as f64).sqrt();
                    ProfilePoint {
                        coordinate: vec![PI * (i as f64 + 0.5) / bins as f64],
                        density: p / weight_mass[i],
                        stderr: se_p / weight_mass[i],
                    }
                })
                .collect();
            DensityProfile {
                family: format!("{:?}", spec.family()),
                points,
                provenance: Provenance::MonteCarlo { samples: n },
                declared_error: 4.0 / (n as f64).sqrt(),
            }
        }
        Family::Torus { .. } => {
            // Commutators are identically trivial: all mass at the identity
            // class.
            DensityProfile {
                family: format!("{:?}", spec.family()),
                points: vec![ProfilePoint {
                    coordinate: vec![0.0; spec.rank()],
                    density: f64::INFINITY,
                    stderr: 0.0,
                }],
                provenance: Provenance::MonteCarlo { samples: n },
                declared_error: 0.0,
            }
        }
        _ => panic!("class histogram supports SU(2) and torus specs"),
    }
}

/// Raw binned probabilities of the SU(2) commutator class angle; the
/// companion of `su2_exact_binned_law` for total-variation comparisons.
pub fn su2_mc_binned_law(n: u64, bins: usize, seed: u64, blocks: usize) -> Vec<f64> {
    let spec = GroupSpec::su2();
    let profile = mc_class_histogram(&spec, n, bins, seed, blocks);
    let weight_mass: Vec<f64> = {
        let f = |t: f64| t / PI - (2.0 * t).sin() / (2.0 * PI);
        (0..bins)
            .map(|i| {
                let a = PI * i as f64 / bins as f64;
                let b = PI * (i + 1) as f64 / bins as f64;
                f(b) - f(a)
            })
            .collect()
    };
    profile
        .points
        .iter()
        .zip(weight_mass)
        .map(|(p, w)| p.density * w)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::{simpson, total_variation};

    #[test]
    fn closed_form_values() {
        assert!((density_su2_closed(PI / 2.0) - PI / 4.0).abs() < 1e-14);
        // θ → π limit is 1/2 by l'Hôpital; probe just inside.
        assert!((density_su2_closed(3.141) - 0.5).abs() < 1e-3);
        // Symmetry: the 2π−θ continuation reproduces the same value
        // because sin(2π−θ) = −sin θ and (π−(2π−θ)) = −(π−θ).
        let theta = 1.234;
        let continued = (PI - (2.0 * PI - theta)) / (2.0 * (2.0 * PI - theta).sin());
        assert!((density_su2_closed(theta) - continued).abs() < 1e-12);
    }

    #[test]
    fn closed_form_normalizes_against_weyl_weight() {
        let v = simpson(
            |t| density_su2_closed(t.clamp(1e-9, PI - 1e-9)) * su2_weyl_weight(t),
            1e-9,
            PI - 1e-9,
            20_000,
        );
        assert!((v - 1.0).abs() < 1e-6, "normalization {v}");
    }

    #[test]
    fn su2_series_approaches_closed_form() {
        let spec = GroupSpec::su2();
        for (theta, cutoff, tol) in [
            (PI / 2.0, 100_000u64, 1e-4),
            (2.0, 100_000, 1e-3),
            (1.0, 100_000, 1e-3),
        ] {
            let g = spec.torus_point(&[theta]);
            let s = density_series(&spec, &g, cutoff, Smoothing::None);
            let c = density_su2_closed(theta);
            assert!((s - c).abs() < tol, "theta={theta}: {s} vs {c}");
        }
    }

    #[test]
    fn su2_series_error_decays_like_one_over_n() {
        // |S_N − closed| = O(1/(N sin(θ/2))): N·error stays bounded.
        let spec = GroupSpec::su2();
        let theta = 2.0;
        let g = spec.torus_point(&[theta]);
        let c = density_su2_closed(theta);
        let mut bound: f64 = 0.0;
        for n in [1_000u64, 10_000, 100_000] {
            let err = (density_series(&spec, &g, n, Smoothing::None) - c).abs();
            bound = bound.max(err * n as f64 * (theta / 2.0).sin());
        }
        assert!(bound < 2.0, "scaled error bound {bound}");
    }

    #[test]
    fn series_limit_near_pi_matches_half() {
        let spec = GroupSpec::su2();
        let g = spec.torus_point(&[3.1]);
        let s = density_series(&spec, &g, 100_000, Smoothing::None);
        assert!((s - density_su2_closed(3.1)).abs() < 1e-3);
        assert!((density_su2_closed(3.1) - 0.5).abs() < 0.02);
    }

    #[test]
    fn abel_smoothing_tames_near_singular_classes() {
        let spec = GroupSpec::su2();
        let theta = 0.05;
        let g = spec.torus_point(&[theta]);
        let n = 20_000u64;
        let abel = density_series(
            &spec,
            &g,
            n,
            Smoothing::Abel {
                q: 1.0 - 1.0 / n as f64,
            },
        );
        let c = density_su2_closed(theta);
        assert!((abel - c).abs() / c < 0.05, "abel {abel} vs closed {c}");
    }

    #[test]
    fn su3_series_is_cauchy_at_regular_classes() {
        let spec = GroupSpec::su3();
        let g = spec.torus_point(&[1.1, -0.4]);
        let a = density_series(&spec, &g, 60, Smoothing::None);
        let b = density_series(&spec, &g, 120, Smoothing::None);
        // Tail bound |Σ_{N<dim≤2N}| ≤ (6/|Δ|) Σ d⁻¹ over the ring; at this
        // well-separated class the observed difference is far smaller.
        assert!((a - b).abs() < 0.1, "|S(60)-S(120)| = {}", (a - b).abs());
    }

    #[test]
    fn su3_weyl_weight_normalizes() {
        // 2-d midpoint rule over the full square; the integrand is a trig
        // polynomial of low bandwidth so a modest grid is exact.
        let m = 48;
        let mut acc = 0.0;
        for i in 0..m {
            for j in 0..m {
                let t1 = -PI + 2.0 * PI * (i as f64 + 0.5) / m as f64;
                let t2 = -PI + 2.0 * PI * (j as f64 + 0.5) / m as f64;
                acc += su3_weyl_weight(t1, t2);
            }
        }
        acc *= (2.0 * PI / m as f64).powi(2);
        assert!((acc - 1.0).abs() < 1e-10, "weight mass {acc}");
    }

    #[test]
    fn mc_histogram_matches_exact_binned_law() {
        let n = 200_000u64;
        let bins = 100;
        let mc = su2_mc_binned_law(n, bins, 77, 64);
        let exact = su2_exact_binned_law(bins);
        let tv = total_variation(&mc, &exact);
        assert!(tv < 0.02, "tv {tv}");
        // Normalization of the profile against the Weyl weight.
        let profile = mc_class_histogram(&GroupSpec::su2(), n, bins, 77, 64);
        assert!((profile.su2_normalization() - 1.0).abs() < 0.005);
    }

    #[test]
    fn first_bin_mass_is_small_but_nonzero() {
        // Exact integral of (π−θ)sinθ/π over [0, π/100] ≈ 4.9e-4: the
        // weighted law vanishes at 0 even though the density diverges.
        let exact = su2_exact_binned_law(100)[0];
        let quad = simpson(|t| (PI - t) * t.sin() / PI, 0.0, PI / 100.0, 2000);
        assert!((exact - quad).abs() < 1e-12);
        assert!((exact - 4.9e-4).abs() < 2e-5, "first bin {exact}");
        let mc = su2_mc_binned_law(1_000_000, 100, 9, 64);
        // Poisson fluctuation band around the expected ~490 counts.
        assert!((mc[0] - exact).abs() < 5.0 * (exact / 1e6).sqrt());
    }

    #[test]
    fn torus_histogram_is_a_point_mass() {
        let spec = GroupSpec::torus(2);
        let profile = mc_class_histogram(&spec, 1000, 10, 5, 4);
        assert_eq!(profile.points.len(), 1);
        assert_eq!(profile.points[0].coordinate, vec![0.0, 0.0]);
    }

    #[test]
    fn profile_serialization_roundtrip() {
        let profile = mc_class_histogram(&GroupSpec::su2(), 10_000, 20, 3, 8);
        let json = profile.to_json();
        let back: DensityProfile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.points.len(), profile.points.len());
        let csv = profile.to_csv();
        assert!(csv.starts_with("coordinate,density,stderr,provenance\n"));
        assert_eq!(csv.lines().count(), 21);
    }
}
