//! Statistical utilities: running means, batch-means error bars,
//! two-sample Kolmogorov-Smirnov, histogram comparisons.

/// Mean and standard error of a sample.
pub fn mean_se(xs: &[f64]) -> (f64, f64) {
    let n = xs.len();
    assert!(n > 1, "need at least two observations");
    let mean = xs.iter().sum::<f64>() / n as f64;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n as f64 - 1.0);
    (mean, (var / n as f64).sqrt())
}

/// Time-average and batch-means standard error of an autocorrelated series.
///
/// The series is split into `batches` contiguous batches; the SE is the
/// sample SE of the batch means, which stays honest under autocorrelation
/// shorter than a batch.
pub fn batch_means(series: &[f64], batches: usize) -> (f64, f64) {
    assert!(batches >= 2, "need at least two batches");
    assert!(series.len() >= batches, "series shorter than batch count");
    let ranges = crate::rng::block_ranges(series.len(), batches);
    let means: Vec<f64> = ranges
        .iter()
        .map(|r| series[r.clone()].iter().sum::<f64>() / r.len() as f64)
        .collect();
    let (m, se) = mean_se(&means);
    (m, se)
}

/// Two-sided z-score of the difference of two means with independent
/// standard errors.
pub fn combined_z(mean_a: f64, se_a: f64, mean_b: f64, se_b: f64) -> f64 {
    let denom = (se_a * se_a + se_b * se_b).sqrt();
    if denom == 0.0 {
        if (mean_a - mean_b).abs() == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        (mean_a - mean_b).abs() / denom
    }
}

/// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> f64 {
    let mut xa = a.to_vec();
    let mut xb = b.to_vec();
    xa.sort_by(|p, q| p.partial_cmp(q).unwrap());
    xb.sort_by(|p, q| p.partial_cmp(q).unwrap());
    let (mut i, mut j) = (0usize, 0usize);
    let (na, nb) = (xa.len() as f64, xb.len() as f64);
    let mut d: f64 = 0.0;
    while i < xa.len() && j < xb.len() {
        let x = xa[i].min(xb[j]);
        while i < xa.len() && xa[i] <= x {
            i += 1;
        }
        while j < xb.len() && xb[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

/// Critical value of the two-sample KS statistic at level `alpha` for
/// equal sample sizes n: c(α)·sqrt(2/n), c(α) = sqrt(-ln(α/2)/2).
pub fn ks_critical(alpha: f64, n: usize) -> f64 {
    let c = (-(alpha / 2.0).ln() / 2.0).sqrt();
    c * (2.0 / n as f64).sqrt()
}

/// Total-variation distance (1/2)Σ|p_i - q_i| between two discrete laws.
pub fn total_variation(p: &[f64], q: &[f64]) -> f64 {
    assert_eq!(p.len(), q.len(), "bin count mismatch");
    0.5 * p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum::<f64>()
}

/// Count samples into `bins` equal-width bins over [lo, hi]; out-of-range
/// samples clamp into the end bins. Returns bin probabilities.
pub fn histogram(samples: &[f64], lo: f64, hi: f64, bins: usize) -> Vec<f64> {
    let mut counts = vec![0u64; bins];
    let w = (hi - lo) / bins as f64;
    for &x in samples {
        let idx = (((x - lo) / w).floor() as i64).clamp(0, bins as i64 - 1) as usize;
        counts[idx] += 1;
    }
    counts
        .into_iter()
        .map(|c| c as f64 / samples.len() as f64)
        .collect()
}

/// Composite Simpson quadrature on [a, b] with n (even) panels.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    let n = if n % 2 == 0 { n } else { n + 1 };
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for k in 1..n {
        let x = a + k as f64 * h;
        s += f(x) * if k % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn batch_means_flags_constant_series() {
        let xs = vec![2.5; 1000];
        let (m, se) = batch_means(&xs, 100);
        assert_eq!(m, 2.5);
        assert_eq!(se, 0.0);
    }

    #[test]
    fn ks_statistic_on_identical_samples_is_zero() {
        let xs: Vec<f64> = (0..100).map(|i| i as f64).collect();
        assert_eq!(ks_two_sample(&xs, &xs), 0.0);
    }

    #[test]
    fn ks_detects_shifted_distributions() {
        let mut r = crate::rng::seeded_stream(1, 0);
        let a: Vec<f64> = (0..2000).map(|_| r.gen::<f64>()).collect();
        let b: Vec<f64> = (0..2000).map(|_| r.gen::<f64>() + 0.3).collect();
        assert!(ks_two_sample(&a, &b) > ks_critical(0.01, 2000));
        let c: Vec<f64> = (0..2000).map(|_| r.gen::<f64>()).collect();
        assert!(ks_two_sample(&a, &c) < ks_critical(0.01, 2000));
    }

    #[test]
    fn simpson_integrates_sine() {
        let v = simpson(f64::sin, 0.0, std::f64::consts::PI, 200);
        assert!((v - 2.0).abs() < 1e-9);
    }
}
