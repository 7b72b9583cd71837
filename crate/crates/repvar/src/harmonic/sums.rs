//! Partial sums of Σ d_μ⁻¹ and tail estimates.
//!
//! For SU(2) the partial sum over dimensions ≤ N is the harmonic number
//! H_N ~ ln N + γ (the sum diverges: the su(2) factor obstruction). For
//! SU(3) the sum converges; with a = n₁+1, b = n₂+1 the terms are
//! 2/(ab(a+b)) and the full sum is 4ζ(3). Convergence is slow: the tail
//! beyond dimension cutoff C decays like C^{-1/3}.

use super::{dim_irrep, labels_by_dimension};
use crate::group::{Family, GroupSpec};

/// Partial sum of Σ d_μ⁻¹ over labels with dim ≤ cutoff.
pub fn inverse_dim_sum(spec: &GroupSpec, cutoff: u64) -> f64 {
    labels_by_dimension(spec, cutoff)
        .iter()
        .map(|l| 1.0 / dim_irrep(l) as f64)
        .sum()
}

/// A computed tail with a rigorous remainder bound.
#[derive(Clone, Copy, Debug)]
pub struct TailEstimate {
    /// Computed portion of the tail.
    pub value: f64,
    /// Bound on what the computation itself leaves out.
    pub remainder_bound: f64,
}

/// Tail Σ_{dim > cutoff} d_μ⁻¹ for SU(3), computed row by row.
///
/// For each a = n₁+1, the tail over b is the exact telescoping sum
/// Σ_{b > B} 2/(ab(a+b)) = (2/a²) Σ_{j=B+1}^{B+a} 1/j. Rows with a beyond
/// `row_cap` are bounded by the integral test and reported in
/// `remainder_bound`.
pub fn su3_inverse_dim_tail(cutoff: u64, row_cap: u64) -> TailEstimate {
    let mut value = 0.0;
    // H_a maintained incrementally: full rows (b_max = 0) have row tail
    // H_a, and there are O(row_cap) of them.
    let mut harmonic_a = 0.0;
    for a in 1..=row_cap {
        harmonic_a += 1.0 / a as f64;
        // Largest b with a·b·(a+b) ≤ 2·cutoff.
        let mut b_max = 0u64;
        let mut b = 1u64;
        while a * b * (a + b) <= 2 * cutoff {
            b_max = b;
            b += 1;
        }
        let row_tail: f64 = if b_max == 0 {
            harmonic_a
        } else {
            (b_max + 1..=b_max + a).map(|j| 1.0 / j as f64).sum()
        };
        value += 2.0 / (a * a) as f64 * row_tail;
    }
    // Rows a > row_cap contribute Σ (2/a²) H_a ≤ ∫ 2(ln x + 1)/x² dx.
    let a = row_cap as f64;
    let remainder_bound = 2.0 * (a.ln() + 2.0) / a;
    TailEstimate {
        value,
        remainder_bound,
    }
}

/// 4ζ(3), the exact limit of the SU(3) inverse-dimension sum.
pub const SU3_INVERSE_DIM_LIMIT: f64 = 4.0 * 1.202_056_903_159_594_3;
