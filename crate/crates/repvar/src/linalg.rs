//! Small dense complex/real matrix helpers shared across the crate.

use nalgebra::{Complex, DMatrix, DVector, SMatrix};

pub type C64 = Complex<f64>;
pub type CMat<const N: usize> = SMatrix<C64, N, N>;

/// Modified Gram-Schmidt orthonormalization of the columns.
///
/// The implicit R factor has a positive real diagonal, which is the
/// convention that makes QR of a complex Ginibre matrix Haar-distributed
/// on U(n).
pub fn mgs_unitarize<const N: usize>(a: &CMat<N>) -> CMat<N> {
    let mut q = *a;
    for j in 0..N {
        for k in 0..j {
            let mut dot = C64::new(0.0, 0.0);
            for i in 0..N {
                dot += q[(i, k)].conj() * q[(i, j)];
            }
            for i in 0..N {
                let c = q[(i, k)];
                q[(i, j)] -= dot * c;
            }
        }
        let mut nrm = 0.0;
        for i in 0..N {
            nrm += q[(i, j)].norm_sqr();
        }
        let nrm = nrm.sqrt();
        for i in 0..N {
            q[(i, j)] /= nrm;
        }
    }
    q
}

/// Determinant by cofactor expansion (N = 1, 2, 3).
pub fn det_small<const N: usize>(m: &CMat<N>) -> C64 {
    match N {
        1 => m[(0, 0)],
        2 => m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)],
        3 => {
            m[(0, 0)] * (m[(1, 1)] * m[(2, 2)] - m[(1, 2)] * m[(2, 1)])
                - m[(0, 1)] * (m[(1, 0)] * m[(2, 2)] - m[(1, 2)] * m[(2, 0)])
                + m[(0, 2)] * (m[(1, 0)] * m[(2, 1)] - m[(1, 1)] * m[(2, 0)])
        }
        _ => panic!("det_small supports N <= 3"),
    }
}

/// Scale a unitary matrix into SU(n) by dividing out the principal n-th
/// root of its determinant.
pub fn normalize_determinant<const N: usize>(u: &CMat<N>) -> CMat<N> {
    let det = det_small(u);
    let (r, theta) = det.to_polar();
    let root = C64::from_polar(r.powf(1.0 / N as f64), theta / N as f64);
    u / root
}

/// Frobenius distance of `u * u^†` from the identity.
pub fn unitarity_defect<const N: usize>(u: &CMat<N>) -> f64 {
    (u * u.adjoint() - CMat::<N>::identity()).norm()
}

fn to_dyn<const N: usize>(a: &CMat<N>) -> DMatrix<C64> {
    DMatrix::from_fn(N, N, |i, j| a[(i, j)])
}

fn to_static<const N: usize>(a: &DMatrix<C64>) -> CMat<N> {
    CMat::<N>::from_fn(|i, j| a[(i, j)])
}

/// Polar projection onto SU(n): nearest unitary via SVD, then determinant
/// normalization. Used to pull long operation chains back onto the group.
pub fn polar_project_su<const N: usize>(a: &CMat<N>) -> CMat<N> {
    let svd = to_dyn(a).svd(true, true);
    let u = svd.u.expect("svd u");
    let vt = svd.v_t.expect("svd v_t");
    normalize_determinant(&to_static::<N>(&(u * vt)))
}

/// Eigen-decomposition of a unitary matrix.
///
/// Returns `(angles, vectors)` with `u = V diag(exp(i angles)) V^†`, angles
/// in (-π, π]. Works through a Hermitian auxiliary `H_τ = (e^{-iτ}u + e^{iτ}u^†)/2`
/// whose eigenvectors are those of `u`; τ is chosen from a fixed candidate
/// list to maximize the eigenvalue gap of `H_τ`, which keeps the
/// decomposition stable when distinct unitary eigenvalues collide under a
/// single cosine. Eigenvector phases are made deterministic: the
/// largest-magnitude component of each vector is rotated to be real
/// positive.
pub fn eig_unitary<const N: usize>(u: &CMat<N>) -> ([f64; N], CMat<N>) {
    const TAUS: [f64; 4] = [0.0, 0.831_966_011, 1.721_233_961_3, 2.399_887_55];
    let ud = to_dyn(u);
    let mut best: Option<(f64, DMatrix<C64>)> = None;
    for &tau in &TAUS {
        let phase = C64::from_polar(1.0, -tau);
        let scaled = &ud * phase;
        let h = (&scaled + scaled.adjoint()) * C64::new(0.5, 0.0);
        let eig = h.symmetric_eigen();
        let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let gap = vals
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min);
        if best.as_ref().map_or(true, |(g, _)| gap > *g) {
            best = Some((gap, eig.eigenvectors));
        }
    }
    let mut vectors = to_static::<N>(&best.unwrap().1);

    // Rayleigh quotients recover the unitary eigenvalues exactly on each
    // (possibly degenerate) eigenspace, since u acts there as a scalar.
    let mut angles = [0.0_f64; N];
    for j in 0..N {
        let col = vectors.column(j).into_owned();
        let lam = col.adjoint() * u * &col;
        angles[j] = lam[(0, 0)].arg();
    }

    // Sort by descending angle so conjugate elements decompose identically.
    let mut order: Vec<usize> = (0..N).collect();
    order.sort_by(|&i, &j| angles[j].partial_cmp(&angles[i]).unwrap());
    let mut sorted = CMat::<N>::zeros();
    let mut sorted_angles = [0.0_f64; N];
    for (dst, &src) in order.iter().enumerate() {
        sorted_angles[dst] = angles[src];
        sorted.set_column(dst, &vectors.column(src));
    }
    vectors = sorted;

    for j in 0..N {
        let mut imax = 0;
        let mut vmax = 0.0;
        for i in 0..N {
            let m = vectors[(i, j)].norm();
            if m > vmax {
                vmax = m;
                imax = i;
            }
        }
        let phase = vectors[(imax, j)] / C64::new(vmax, 0.0);
        for i in 0..N {
            vectors[(i, j)] /= phase;
        }
    }
    (sorted_angles, vectors)
}

/// Orthonormal basis (columns) of the span of `cols`, via SVD with a
/// relative singular-value threshold.
pub fn span_orthonormal_basis(cols: &DMatrix<f64>, rel_tol: f64) -> DMatrix<f64> {
    if cols.ncols() == 0 {
        return DMatrix::zeros(cols.nrows(), 0);
    }
    let svd = cols.clone().svd(true, false);
    let u = svd.u.expect("svd u");
    let smax = svd.singular_values.max();
    let rank = svd
        .singular_values
        .iter()
        .filter(|&&s| s > rel_tol * smax.max(f64::MIN_POSITIVE))
        .count();
    u.columns(0, rank).into_owned()
}

/// Numerical rank via SVD with a relative threshold.
pub fn svd_rank(m: &DMatrix<f64>, rel_tol: f64) -> usize {
    if m.ncols() == 0 || m.nrows() == 0 {
        return 0;
    }
    let sv = m.clone().singular_values();
    let smax = sv.max();
    if smax == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * smax).count()
}

/// Orthonormal basis of the null space of `m`: right singular vectors whose
/// singular values fall at or below `tol` (absolute).
pub fn null_space_basis(m: &DMatrix<f64>, tol: f64) -> Vec<DVector<f64>> {
    let n = m.ncols();
    let svd = m.clone().svd(false, true);
    let vt = svd.v_t.expect("svd v_t");
    let mut out = Vec::new();
    // nalgebra only returns min(nrows, ncols) singular triplets; columns of V
    // beyond that count always belong to the null space but are not computed,
    // so pad the matrix with zero rows to make it square first.
    debug_assert!(m.nrows() >= n || m.nrows() < n, "unreachable");
    if m.nrows() < n {
        let mut sq = DMatrix::zeros(n, n);
        sq.rows_mut(0, m.nrows()).copy_from(m);
        return null_space_basis(&sq, tol);
    }
    for j in 0..svd.singular_values.len() {
        if svd.singular_values[j] <= tol {
            out.push(vt.row(j).transpose());
        }
    }
    out
}

/// Largest principal angle (radians) between span(q_sub) and span(q_big):
/// how far `q_sub` sticks out of `q_big`. Both inputs must have orthonormal
/// columns. Returns 0 for an empty `q_sub`.
pub fn largest_principal_angle(q_sub: &DMatrix<f64>, q_big: &DMatrix<f64>) -> f64 {
    if q_sub.ncols() == 0 {
        return 0.0;
    }
    if q_big.ncols() == 0 {
        return std::f64::consts::FRAC_PI_2;
    }
    let overlap = q_big.transpose() * q_sub;
    let sv = overlap.svd(false, false);
    let cos_min = sv.singular_values.min().clamp(-1.0, 1.0);
    cos_min.acos()
}
