//! Eigenvalues of a symmetric tridiagonal quadratic form restricted to the
//! orthogonal complement of a single constraint vector.
//!
//! The second-variation form assembles to a tridiagonal matrix `B` (after a
//! diagonal mass scaling), and admissible variations are mean-zero, i.e.
//! orthogonal to a fixed vector `v`. Eigenvalue counts of the constrained
//! operator are read off the inertia of the bordered matrix
//!
//! ```text
//!     [ B - s I   v ]
//!     [   v^T     0 ]
//! ```
//!
//! via an LDL^T sweep (Sturm sequence plus one bordered pivot): the number of
//! constrained eigenvalues below `s` equals `n_-(bordered) - 1`. Bisection on
//! that count is immune to clustering and to `v` being (near-)parallel to an
//! eigenvector. Eigenvectors come from bordered inverse iteration.

/// Symmetric tridiagonal matrix: `diag` has length n, `off` length n-1.
#[derive(Debug, Clone)]
pub struct SymTridiag {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl SymTridiag {
    pub fn n(&self) -> usize {
        self.diag.len()
    }

    /// Gershgorin bounds on the unconstrained spectrum (constrained
    /// eigenvalues interlace, so they are bounded too).
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.n();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let mut r = 0.0;
            if i > 0 {
                r += self.off[i - 1].abs();
            }
            if i + 1 < n {
                r += self.off[i].abs();
            }
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }
}

fn pivmin(t: &SymTridiag) -> f64 {
    let scale = t
        .diag
        .iter()
        .chain(t.off.iter())
        .fold(0.0f64, |m, &x| m.max(x.abs()))
        .max(1.0);
    scale * 1e-305
}

/// Number of eigenvalues of `B` restricted to `v`-orthogonal space that lie
/// strictly below `s`.
pub fn count_below(t: &SymTridiag, v: &[f64], s: f64) -> usize {
    let n = t.n();
    debug_assert_eq!(v.len(), n);
    let tiny = pivmin(t);
    // LDL^T Sturm sweep on (B - sI); z = L^{-1} v accumulated alongside, so
    // that v^T (B - sI)^{-1} v = sum z_i^2 / d_i.
    let mut negatives = 0usize;
    let mut d_prev = 1.0f64;
    let mut z_prev = 0.0f64;
    let mut f = 0.0f64;
    for i in 0..n {
        let b = if i > 0 { t.off[i - 1] } else { 0.0 };
        let l = if i > 0 { b / d_prev } else { 0.0 };
        let mut d = t.diag[i] - s - l * b;
        let z = v[i] - l * z_prev;
        if d.abs() < tiny {
            d = -tiny;
        }
        if d < 0.0 {
            negatives += 1;
        }
        f += z * z / d;
        d_prev = d;
        z_prev = z;
    }
    // Bordered (Schur) pivot is -f; inertia of the bordered matrix minus one
    // counts the constrained eigenvalues below s.
    let bordered_negatives = negatives + usize::from(f > 0.0);
    bordered_negatives.saturating_sub(1)
}

/// The `k` smallest constrained eigenvalues, ascending, by bisection on
/// [`count_below`]. Each bracket is bisected to f64 exhaustion.
pub fn smallest_eigenvalues(t: &SymTridiag, v: &[f64], k: usize) -> Vec<f64> {
    let n = t.n();
    let k = k.min(n.saturating_sub(1));
    let (mut glo, mut ghi) = t.gershgorin();
    glo -= 1e-8 * (ghi - glo).abs().max(1.0);
    ghi += 1e-8 * (ghi - glo).abs().max(1.0);
    let mut out = Vec::with_capacity(k);
    for j in 1..=k {
        let mut lo = if let Some(&prev) = out.last() { prev } else { glo };
        let mut hi = ghi;
        for _ in 0..220 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if count_below(t, v, mid) >= j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    out
}

/// Eigenvector of the constrained operator for the eigenvalue `theta`
/// (assumed accurate), by bordered inverse iteration. Returns a unit vector
/// orthogonal to `v`.
pub fn constrained_eigenvector(t: &SymTridiag, v: &[f64], theta: f64) -> Vec<f64> {
    let n = t.n();
    // Small relative offset keeps the shifted solve bounded.
    let scale = t.gershgorin().1.abs().max(1.0);
    let shift = theta + 1e-11 * scale;
    let mut x: Vec<f64> = (0..n)
        .map(|i| ((i * 2654435761usize) % 1000) as f64 / 999.0 - 0.5)
        .collect();
    orthogonalize(&mut x, v);
    normalize(&mut x);
    for _ in 0..4 {
        let y = solve_shifted(t, shift, &x);
        let z = solve_shifted(t, shift, v);
        let vz = dot(v, &z);
        let mu = if vz.abs() > 0.0 { dot(v, &y) / vz } else { 0.0 };
        let mut next: Vec<f64> = y.iter().zip(&z).map(|(a, b)| a - mu * b).collect();
        orthogonalize(&mut next, v);
        if !normalize(&mut next) {
            break;
        }
        x = next;
    }
    x
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn orthogonalize(x: &mut [f64], v: &[f64]) {
    let vv = dot(v, v);
    if vv > 0.0 {
        let c = dot(x, v) / vv;
        for (xi, vi) in x.iter_mut().zip(v) {
            *xi -= c * vi;
        }
    }
}

fn normalize(x: &mut [f64]) -> bool {
    let norm = dot(x, x).sqrt();
    if norm > 0.0 && norm.is_finite() {
        for xi in x.iter_mut() {
            *xi /= norm;
        }
        true
    } else {
        false
    }
}

/// LDL^T solve of (B - shift I) x = rhs with tiny-pivot clamping.
fn solve_shifted(t: &SymTridiag, shift: f64, rhs: &[f64]) -> Vec<f64> {
    let n = t.n();
    let tiny = pivmin(t).max(1e-300);
    let mut d = vec![0.0f64; n];
    let mut z = vec![0.0f64; n];
    let mut d_prev = 1.0;
    for i in 0..n {
        let b = if i > 0 { t.off[i - 1] } else { 0.0 };
        let l = if i > 0 { b / d_prev } else { 0.0 };
        let mut di = t.diag[i] - shift - l * b;
        if di.abs() < tiny {
            di = if di < 0.0 { -tiny } else { tiny };
        }
        z[i] = rhs[i] - l * if i > 0 { z[i - 1] } else { 0.0 };
        d[i] = di;
        d_prev = di;
    }
    let mut x = vec![0.0f64; n];
    x[n - 1] = z[n - 1] / d[n - 1];
    for i in (0..n - 1).rev() {
        let l = t.off[i] / d[i];
        x[i] = z[i] / d[i] - l * x[i + 1];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Dense-free oracle: constrained eigenvalues of a small problem by
    /// scanning the secular count against a brute-force characteristic scan.
    fn brute_constrained_eigs(t: &SymTridiag, v: &[f64], k: usize) -> Vec<f64> {
        // Project B onto an explicit orthonormal basis of v-perp and solve
        // with Jacobi iteration on the dense matrix.
        let n = t.n();
        let mut basis: Vec<Vec<f64>> = Vec::new();
        for i in 0..n {
            let mut e = vec![0.0; n];
            e[i] = 1.0;
            orthogonalize(&mut e, v);
            for b in &basis {
                let c = dot(&e, b);
                for (ei, bi) in e.iter_mut().zip(b) {
                    *ei -= c * bi;
                }
            }
            if normalize(&mut e) && dot(&e, &e) > 0.5 {
                basis.push(e);
            }
            if basis.len() == n - 1 {
                break;
            }
        }
        let m = basis.len();
        let apply = |x: &[f64]| -> Vec<f64> {
            let mut y = vec![0.0; n];
            for i in 0..n {
                y[i] = t.diag[i] * x[i];
                if i > 0 {
                    y[i] += t.off[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    y[i] += t.off[i] * x[i + 1];
                }
            }
            y
        };
        let mut dense = vec![vec![0.0; m]; m];
        for (j, bj) in basis.iter().enumerate() {
            let abj = apply(bj);
            for (i, bi) in basis.iter().enumerate() {
                dense[i][j] = dot(bi, &abj);
            }
        }
        // Jacobi eigenvalue iteration.
        let mut a = dense;
        for _ in 0..200 {
            let mut p = 0;
            let mut q = 1;
            let mut big = 0.0;
            for i in 0..m {
                for j in i + 1..m {
                    if a[i][j].abs() > big {
                        big = a[i][j].abs();
                        p = i;
                        q = j;
                    }
                }
            }
            if big < 1e-13 {
                break;
            }
            let theta = 0.5 * (a[q][q] - a[p][p]) / a[p][q];
            let tsign = if theta >= 0.0 { 1.0 } else { -1.0 };
            let tval = tsign / (theta.abs() + (theta * theta + 1.0).sqrt());
            let c = 1.0 / (tval * tval + 1.0).sqrt();
            let s = tval * c;
            for i in 0..m {
                let aip = a[i][p];
                let aiq = a[i][q];
                a[i][p] = c * aip - s * aiq;
                a[i][q] = s * aip + c * aiq;
            }
            for j in 0..m {
                let apj = a[p][j];
                let aqj = a[q][j];
                a[p][j] = c * apj - s * aqj;
                a[q][j] = s * apj + c * aqj;
            }
        }
        let mut eigs: Vec<f64> = (0..m).map(|i| a[i][i]).collect();
        eigs.sort_by(f64::total_cmp);
        eigs.truncate(k);
        eigs
    }

    fn laplacian(n: usize) -> SymTridiag {
        let h = 1.0 / (n - 1) as f64;
        let mut diag = vec![2.0 / h; n];
        diag[0] = 1.0 / h;
        diag[n - 1] = 1.0 / h;
        let off = vec![-1.0 / h; n - 1];
        SymTridiag { diag, off }
    }

    #[test]
    fn matches_dense_oracle_on_random_problem() {
        let n = 14;
        let mut t = laplacian(n);
        for (i, d) in t.diag.iter_mut().enumerate() {
            *d += (i as f64 * 0.37).sin();
        }
        let v: Vec<f64> = (0..n).map(|i| 1.0 + 0.1 * (i as f64)).collect();
        let got = smallest_eigenvalues(&t, &v, 5);
        let want = brute_constrained_eigs(&t, &v, 5);
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).abs() < 1e-8 * w.abs().max(1.0), "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn neumann_laplacian_constrained_spectrum() {
        // Mass-scaled Neumann Laplacian with trapezoid weights: constrained
        // (mean-zero) eigenvalues are 4 sin^2(j pi h / 2) / h^2, j = 1, 2...
        let n = 51;
        let h = 1.0 / (n - 1) as f64;
        let mut w = vec![h; n];
        w[0] = 0.5 * h;
        w[n - 1] = 0.5 * h;
        let t0 = laplacian(n);
        let diag: Vec<f64> = (0..n).map(|i| t0.diag[i] / w[i]).collect();
        let off: Vec<f64> = (0..n - 1).map(|i| t0.off[i] / (w[i] * w[i + 1]).sqrt()).collect();
        let t = SymTridiag { diag, off };
        let v: Vec<f64> = w.iter().map(|wi| wi.sqrt()).collect();
        let eigs = smallest_eigenvalues(&t, &v, 3);
        for (j, ev) in eigs.iter().enumerate() {
            let jj = (j + 1) as f64;
            let exact = 4.0 * (jj * std::f64::consts::PI * h / 2.0).sin().powi(2) / (h * h);
            assert!((ev - exact).abs() < 1e-9 * exact.max(1.0), "mode {jj}: {ev} vs {exact}");
        }
    }

    #[test]
    fn eigenvector_residual_small() {
        let n = 40;
        let t = laplacian(n);
        let v = vec![1.0; n];
        let eigs = smallest_eigenvalues(&t, &v, 2);
        let x = constrained_eigenvector(&t, &v, eigs[0]);
        // Residual of (B - theta) x orthogonal to v.
        let mut r = vec![0.0; n];
        for i in 0..n {
            r[i] = (t.diag[i] - eigs[0]) * x[i];
            if i > 0 {
                r[i] += t.off[i - 1] * x[i - 1];
            }
            if i + 1 < n {
                r[i] += t.off[i] * x[i + 1];
            }
        }
        orthogonalize(&mut r, &v);
        let rn = dot(&r, &r).sqrt();
        assert!(rn < 1e-6 * t.gershgorin().1.abs(), "residual {rn}");
        assert!(dot(&x, &v).abs() < 1e-10);
    }
}
