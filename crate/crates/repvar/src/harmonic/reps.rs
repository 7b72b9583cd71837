//! Explicit matrices of small irreducible representations.
//!
//! SU(2) irreps are symmetric powers of the defining representation; for
//! SU(3) the supported labels are (n,0) and (0,n) (symmetric powers of the
//! defining/conjugate representation) and (1,1) (the adjoint). That covers
//! every label of dimension ≤ 10, the advertised desk scale.

use super::IrrepLabel;
use crate::group::{adjoint_matrix, Family, GroupElement};
use crate::linalg::C64;
use nalgebra::DMatrix;

fn binomial(n: usize, k: usize) -> f64 {
    let mut v = 1.0;
    for i in 0..k {
        v = v * (n - i) as f64 / (i + 1) as f64;
    }
    v
}

/// Sym^k of a 2x2 matrix in the orthonormal weighted-monomial basis
/// u_m = e1^{k-m} e2^m · sqrt(C(k,m)). Unitary input gives unitary output,
/// and the trace is the character of the (k+1)-dimensional irrep.
fn sym_power_2(m: &DMatrix<C64>, k: usize) -> DMatrix<C64> {
    let (a, c) = (m[(0, 0)], m[(1, 0)]); // image of e1
    let (b, d) = (m[(0, 1)], m[(1, 1)]); // image of e2
    let dim = k + 1;
    let mut out = DMatrix::<C64>::zeros(dim, dim);
    for col in 0..dim {
        // (a e1 + c e2)^{k-col} (b e1 + d e2)^{col}, coefficients indexed by
        // the number of e2 factors.
        let mut poly = vec![C64::new(0.0, 0.0); dim];
        poly[0] = C64::new(1.0, 0.0);
        let mut deg = 0usize;
        for _ in 0..(k - col) {
            let mut next = vec![C64::new(0.0, 0.0); dim];
            for t in 0..=deg {
                next[t] += poly[t] * a;
                next[t + 1] += poly[t] * c;
            }
            poly = next;
            deg += 1;
        }
        for _ in 0..col {
            let mut next = vec![C64::new(0.0, 0.0); dim];
            for t in 0..=deg {
                next[t] += poly[t] * b;
                next[t + 1] += poly[t] * d;
            }
            poly = next;
            deg += 1;
        }
        let wc = binomial(k, col).sqrt();
        for row in 0..dim {
            out[(row, col)] = poly[row] * C64::new(wc / binomial(k, row).sqrt(), 0.0);
        }
    }
    out
}

/// Sym^k of a 3x3 matrix in the orthonormal weighted-monomial basis
/// indexed by exponent triples (k-b-c, b, c).
fn sym_power_3(m: &DMatrix<C64>, k: usize) -> DMatrix<C64> {
    let mut monomials = Vec::new();
    for b in 0..=k {
        for c in 0..=(k - b) {
            monomials.push((b, c));
        }
    }
    let dim = monomials.len();
    let index = |b: usize, c: usize| -> usize {
        // positions grouped by b, then c.
        let mut idx = 0;
        for bb in 0..b {
            idx += k + 1 - bb;
        }
        idx + c
    };
    let multinomial = |b: usize, c: usize| -> f64 {
        binomial(k, b) * binomial(k - b, c)
    };

    let mut out = DMatrix::<C64>::zeros(dim, dim);
    for (col, &(b, c)) in monomials.iter().enumerate() {
        let a = k - b - c;
        // Expand (m e1)^a (m e2)^b (m e3)^c as a polynomial in e1,e2,e3,
        // coefficients indexed by (e2-degree, e3-degree).
        let mut poly = vec![C64::new(0.0, 0.0); dim];
        poly[index(0, 0)] = C64::new(1.0, 0.0);
        for (count, src) in [(a, 0usize), (b, 1), (c, 2)] {
            for _ in 0..count {
                let mut next = vec![C64::new(0.0, 0.0); dim];
                for (t, &(tb, tc)) in monomials.iter().enumerate() {
                    let v = poly[t];
                    if v.norm_sqr() == 0.0 {
                        continue;
                    }
                    // multiply by column `src` of m: m[0][src] e1 + ...
                    next[index(tb, tc)] += v * m[(0, src)];
                    next[index(tb + 1, tc)] += v * m[(1, src)];
                    next[index(tb, tc + 1)] += v * m[(2, src)];
                }
                poly = next;
            }
        }
        let wc = multinomial(b, c).sqrt();
        for (row, &(rb, rc)) in monomials.iter().enumerate() {
            out[(row, col)] = poly[row] * C64::new(wc / multinomial(rb, rc).sqrt(), 0.0);
        }
    }
    out
}

/// Matrix of π_μ(g) for the supported small labels.
///
/// Panics for SU(3) labels outside {(n,0), (0,n), (1,1)}; those are the
/// ones needed at desk scale (dim ≤ 10).
pub fn rep_matrix(label: &IrrepLabel, g: &GroupElement) -> DMatrix<C64> {
    match (*label, g.spec().family()) {
        (IrrepLabel::Su2 { d }, Family::Su2) => sym_power_2(&g.matrix(), d as usize - 1),
        (IrrepLabel::Su3 { n1, n2: 0 }, Family::Su3) => sym_power_3(&g.matrix(), n1 as usize),
        (IrrepLabel::Su3 { n1: 0, n2 }, Family::Su3) => {
            sym_power_3(&g.matrix().map(|z| z.conj()), n2 as usize)
        }
        (IrrepLabel::Su3 { n1: 1, n2: 1 }, Family::Su3) => {
            adjoint_matrix(g).map(|x| C64::new(x, 0.0))
        }
        _ => panic!("rep_matrix: unsupported label {label:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{haar_sample, multiply, GroupSpec};
    use crate::harmonic::{character, dim_irrep};
    use crate::rng::seeded_stream;

    #[test]
    fn symmetric_powers_are_unitary_homomorphisms() {
        let mut rng = seeded_stream(61, 0);
        let su2 = GroupSpec::su2();
        for d in [2u32, 3, 5, 8] {
            let l = IrrepLabel::Su2 { d };
            let g = haar_sample(&su2, &mut rng);
            let h = haar_sample(&su2, &mut rng);
            let pg = rep_matrix(&l, &g);
            let n = pg.nrows();
            assert_eq!(n as u64, dim_irrep(&l));
            assert!((pg.adjoint() * &pg - DMatrix::identity(n, n)).norm() < 1e-12);
            let hom = rep_matrix(&l, &multiply(&g, &h)) - &pg * rep_matrix(&l, &h);
            assert!(hom.norm() < 1e-12);
        }
    }

    /// The symmetric-power trace is an independent route to the character:
    /// the character side goes through eigen-angles, this side through
    /// tensor expansion of matrix entries.
    #[test]
    fn su2_character_matches_symmetric_power_trace() {
        let mut rng = seeded_stream(63, 0);
        let su2 = GroupSpec::su2();
        for _ in 0..20 {
            let g = haar_sample(&su2, &mut rng);
            for d in [2u32, 3, 4, 7, 10] {
                let l = IrrepLabel::Su2 { d };
                let tr = rep_matrix(&l, &g).trace();
                assert!((tr - character(&l, &g)).norm() < 1e-10, "d={d}");
            }
        }
    }

    #[test]
    fn su3_characters_match_rep_traces() {
        let mut rng = seeded_stream(67, 0);
        let su3 = GroupSpec::su3();
        for _ in 0..10 {
            let g = haar_sample(&su3, &mut rng);
            for l in [
                IrrepLabel::Su3 { n1: 2, n2: 0 },
                IrrepLabel::Su3 { n1: 3, n2: 0 },
                IrrepLabel::Su3 { n1: 0, n2: 2 },
                IrrepLabel::Su3 { n1: 1, n2: 1 },
            ] {
                let tr = rep_matrix(&l, &g).trace();
                assert!(
                    (tr - character(&l, &g)).norm() < 1e-9,
                    "{l:?}: {tr} vs {}",
                    character(&l, &g)
                );
            }
        }
    }
}
