//! Bessel functions of the first kind and the torsional frequency equation.
//!
//! Only orders 0, 1 and 2 are needed. Small arguments near the imaginary
//! axis are summed from the ascending series; everything else uses Miller's
//! backward recurrence normalised against the generating function.

use num_complex::Complex64;

use crate::{Error, Result};

/// Largest supported `|z|`.
pub const MAX_ARGUMENT: f64 = 50.0;

/// Step of the uniform sign-change scan used by [`find_mode_roots`].
pub const SCAN_STEP: f64 = 0.1;

/// Bisection stops once the bracket is narrower than this.
pub const BRACKET_WIDTH: f64 = 1e-12;

const SERIES_RADIUS: f64 = 12.0;
// Beyond this, oscillating series terms cancel badly enough to cost digits.
const SERIES_CANCELLATION: f64 = 2.0;
const RESCALE_ABOVE: f64 = 1e200;

/// A positive root of the frequency equation `xi J1'(xi) - J1(xi) = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeRoot {
    /// 1-based mode number; the trivial root at zero is not counted.
    pub index: usize,
    pub xi: f64,
}

/// `J_order(z)` for `order` in `{0, 1, 2}` and `|z| <= 50`.
pub fn bessel_j(order: u32, z: Complex64) -> Result<Complex64> {
    if order > 2 {
        return Err(Error::UnsupportedOrder(order));
    }
    let [j0, j1, j2] = bessel_j012(z)?;
    Ok(match order {
        0 => j0,
        1 => j1,
        _ => j2,
    })
}

/// Real-argument convenience wrapper around [`bessel_j`].
pub fn bessel_j_real(order: u32, x: f64) -> Result<f64> {
    bessel_j(order, Complex64::new(x, 0.0)).map(|v| v.re)
}

/// `J0(z)`, `J1(z)` and `J2(z)` from one evaluation.
pub fn bessel_j012(z: Complex64) -> Result<[Complex64; 3]> {
    let modulus = z.norm();
    if !modulus.is_finite() || modulus > MAX_ARGUMENT {
        return Err(Error::Domain {
            quantity: "|z| for Bessel J",
            value: modulus,
            supported: "[0, 50]",
        });
    }
    if modulus <= SERIES_RADIUS && modulus - z.im.abs() <= SERIES_CANCELLATION {
        Ok([0, 1, 2].map(|n| ascending_series(n, z)))
    } else {
        Ok(miller_recurrence(z))
    }
}

/// `J1'(z) = J0(z) - J1(z)/z`, with the removable point `J1'(0) = 1/2`.
pub fn bessel_j1_prime(z: Complex64) -> Result<Complex64> {
    let [j0, j1, _] = bessel_j012(z)?;
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(0.5, 0.0));
    }
    Ok(j0 - j1 / z)
}

/// Left-hand side of the stress-free boundary condition,
/// `f(xi) = xi J1'(xi) - J1(xi)`. Equal to `-xi J2(xi)`.
pub fn frequency_equation(xi: f64) -> Result<f64> {
    if xi < 0.0 || xi.is_nan() {
        return Err(Error::Domain {
            quantity: "xi",
            value: xi,
            supported: "[0, 50]",
        });
    }
    if xi == 0.0 {
        return Ok(0.0);
    }
    let z = Complex64::new(xi, 0.0);
    let [_, j1, _] = bessel_j012(z)?;
    Ok((z * bessel_j1_prime(z)? - j1).re)
}

/// First `count` positive roots of [`frequency_equation`] in `(0, scan_max]`.
pub fn find_mode_roots(count: usize, scan_max: f64) -> Result<Vec<ModeRoot>> {
    if scan_max > MAX_ARGUMENT {
        return Err(Error::Domain {
            quantity: "scan_max",
            value: scan_max,
            supported: "(0, 50]",
        });
    }
    let mut failure = None;
    let roots = find_roots_of(
        |xi| match frequency_equation(xi) {
            Ok(v) => v,
            Err(e) => {
                failure.get_or_insert(e);
                f64::NAN
            }
        },
        count,
        scan_max,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    roots
}

/// Scan-and-bisect root finder used for the frequency equation.
///
/// `f` is sampled on `SCAN_STEP, 2*SCAN_STEP, ...` up to `scan_max`; every
/// sign change is bisected to [`BRACKET_WIDTH`]. The origin itself is never
/// reported.
pub fn find_roots_of<F>(mut f: F, count: usize, scan_max: f64) -> Result<Vec<ModeRoot>>
where
    F: FnMut(f64) -> f64,
{
    if count == 0 {
        return Err(Error::InvalidParameter {
            name: "count",
            reason: "must be at least 1".into(),
        });
    }
    if !(scan_max.is_finite() && scan_max > 0.0) {
        return Err(Error::InvalidParameter {
            name: "scan_max",
            reason: format!("must be positive and finite, got {scan_max}"),
        });
    }

    let mut roots = Vec::with_capacity(count);
    let steps = (scan_max / SCAN_STEP).ceil() as usize;
    let mut lo = SCAN_STEP.min(scan_max);
    let mut f_lo = f(lo);
    if f_lo == 0.0 {
        roots.push(lo);
    }
    for i in 2..=steps.max(1) {
        if roots.len() == count {
            break;
        }
        let hi = (i as f64 * SCAN_STEP).min(scan_max);
        let f_hi = f(hi);
        if f_hi == 0.0 {
            roots.push(hi);
        } else if f_lo != 0.0 && f_lo.signum() != f_hi.signum() {
            roots.push(bisect(&mut f, lo, hi, f_lo));
        }
        lo = hi;
        f_lo = f_hi;
    }

    if roots.len() < count {
        return Err(Error::InsufficientScanRange {
            requested: count,
            found: roots.len(),
            scan_max,
        });
    }
    Ok(roots
        .into_iter()
        .take(count)
        .enumerate()
        .map(|(i, xi)| ModeRoot { index: i + 1, xi })
        .collect())
}

fn bisect<F: FnMut(f64) -> f64>(f: &mut F, mut lo: f64, mut hi: f64, mut f_lo: f64) -> f64 {
    while hi - lo > BRACKET_WIDTH {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

// J_n(z) = (z/2)^n sum_k (-z^2/4)^k / (k! (n+k)!)
fn ascending_series(n: u32, z: Complex64) -> Complex64 {
    let half = z * 0.5;
    let q = -(half * half);
    let mut term = Complex64::new(1.0, 0.0);
    for k in 1..=n {
        term = term * half / k as f64;
    }
    let mut sum = term;
    for k in 1..200u32 {
        term = term * q / (k as f64 * (k + n) as f64);
        sum += term;
        if term.norm() <= f64::EPSILON * 0.25 * sum.norm() {
            break;
        }
    }
    sum
}

fn miller_start(modulus: f64) -> u32 {
    let n = (modulus + 20.0 + 6.0 * modulus.cbrt()).ceil() as u32;
    n + n % 2
}

// Backward recurrence J_{n-1} = (2n/z) J_n - J_{n+1}, seeded at an even
// order well above |z|, normalised with exp(-iz) = J0 + 2 sum (-i)^n J_n
// when Im z >= 0 and the conjugate identity otherwise, so the normalising
// sum never cancels.
fn miller_recurrence(z: Complex64) -> [Complex64; 3] {
    let start = miller_start(z.norm());
    let rotation = if z.im >= 0.0 {
        Complex64::new(0.0, -1.0)
    } else {
        Complex64::new(0.0, 1.0)
    };
    let target = (rotation * z).exp();
    // rotation^n for n = start, tracked downward.
    let mut phase = rotation.powu(start);
    let rotation_inv = rotation.inv();

    let mut next = Complex64::new(0.0, 0.0);
    let mut current = Complex64::new(1e-30, 0.0);
    let mut sum = 2.0 * phase * current;
    let mut j1 = Complex64::new(0.0, 0.0);
    let mut j2 = Complex64::new(0.0, 0.0);

    for n in (1..=start).rev() {
        let prev = current * (2.0 * n as f64) / z - next;
        next = current;
        current = prev;
        phase *= rotation_inv;
        let order = n - 1;
        sum += if order == 0 {
            current
        } else {
            2.0 * phase * current
        };
        match order {
            2 => j2 = current,
            1 => j1 = current,
            _ => {}
        }
        if current.norm() > RESCALE_ABOVE {
            let s = 1.0 / RESCALE_ABOVE;
            current *= s;
            next *= s;
            sum *= s;
            j1 *= s;
            j2 *= s;
        }
    }
    let scale = target / sum;
    [current * scale, j1 * scale, j2 * scale]
}
