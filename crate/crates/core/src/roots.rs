//! Scalar root finding: bracket growth and a safeguarded bisection/secant
//! iteration.
//!
//! Everything here works on plain closures; callers are responsible for
//! domain restrictions.

use crate::error::Error;
use crate::Result;

/// Absolute tolerance used for structural-constant roots.
pub const ROOT_ATOL: f64 = 1e-12;

/// Expand a bracket from `lo` by doubling the window width until `f` changes
/// sign or `hi_cap` is exceeded.
///
/// Returns the bracketing pair `(a, b)` with `f(a) * f(b) <= 0`.
pub fn bracket_doubling<F: FnMut(f64) -> f64>(
    mut f: F,
    lo: f64,
    hi_cap: f64,
    what: &str,
) -> Result<(f64, f64)> {
    let fa = f(lo);
    if fa == 0.0 {
        return Ok((lo, lo));
    }
    let mut a = lo;
    let mut fa = fa;
    let mut step = (hi_cap - lo).abs().min(1.0) * 1e-6 + 1e-12;
    loop {
        let b = (a + step).min(hi_cap);
        let fb = f(b);
        if fa.is_nan() || fb.is_nan() {
            return Err(Error::RootNotFound(format!(
                "{what}: NaN encountered while bracketing near {b:.6e}"
            )));
        }
        if fa * fb <= 0.0 {
            return Ok((a, b));
        }
        if b >= hi_cap {
            return Err(Error::RootNotFound(format!(
                "{what}: no sign change in ({lo:.6e}, {hi_cap:.6e})"
            )));
        }
        a = b;
        fa = fb;
        step *= 2.0;
    }
}

/// Safeguarded root refinement on a bracket: secant steps accepted only while
/// they stay inside the current bracket and shrink it; otherwise bisection.
///
/// Converges for merely sign-changing functions (jump discontinuities
/// included), with the secant giving superlinear convergence on smooth roots.
pub fn bisect_secant<F: FnMut(f64) -> f64>(
    mut f: F,
    a0: f64,
    b0: f64,
    atol: f64,
) -> Result<f64> {
    let (mut a, mut b) = (a0, b0);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa * fb > 0.0 {
        return Err(Error::RootNotFound(format!(
            "bisect_secant: endpoints do not bracket a root ({a:.6e}, {b:.6e})"
        )));
    }
    for _ in 0..200 {
        if (b - a).abs() <= atol {
            break;
        }
        // Secant candidate, rejected in favor of bisection whenever it falls
        // too close to (or outside) the bracket ends.
        let mut x = if fb != fa {
            b - fb * (b - a) / (fb - fa)
        } else {
            0.5 * (a + b)
        };
        let margin = 0.01 * (b - a).abs();
        let inside = x > a.min(b) + margin && x < a.max(b) - margin;
        if !inside || !x.is_finite() {
            x = 0.5 * (a + b);
        }
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fa * fx < 0.0 {
            b = x;
            fb = fx;
        } else {
            a = x;
            fa = fx;
        }
    }
    Ok(0.5 * (a + b))
}

/// Plain bisection to an absolute tolerance on the abscissa.
pub fn bisect<F: FnMut(f64) -> f64>(mut f: F, a0: f64, b0: f64, atol: f64) -> Result<f64> {
    let (mut a, mut b) = (a0, b0);
    let fa = f(a);
    if fa == 0.0 {
        return Ok(a);
    }
    let fb = f(b);
    if fb == 0.0 {
        return Ok(b);
    }
    if fa * fb > 0.0 {
        return Err(Error::RootNotFound(format!(
            "bisect: endpoints do not bracket a root ({a:.6e}, {b:.6e})"
        )));
    }
    let mut fa = fa;
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if (b - a).abs() <= atol || m == a || m == b {
            return Ok(m);
        }
        let fm = f(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if fa * fm < 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    Ok(0.5 * (a + b))
}
