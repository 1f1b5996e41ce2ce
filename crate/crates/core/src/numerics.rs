//! Shared numerical kernels: bracketed root finding, winding numbers,
//! truncated power series, Gauss-Legendre quadrature and a few scalar helpers.
//!
//! Everything here is a pure function of its inputs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Complex number used throughout the crate.
pub type Complex = num_complex::Complex64;

/// Default absolute tolerance for root finding.
pub const ROOT_TOL: f64 = 1e-12;
/// Iteration cap shared by every bisection loop.
pub const MAX_ITER: usize = 200;
/// Hard cap on retained power-series terms.
pub const SERIES_CAP: usize = 64;
/// Relative size below which a series term is dropped.
pub const SERIES_REL_CUTOFF: f64 = 1e-18;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {flo}, f(hi) = {fhi}")]
    NoSignChange { lo: f64, hi: f64, flo: f64, fhi: f64 },
    #[error("root finder did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("point lies within {distance:e} of the curve")]
    PointOnBoundary { distance: f64 },
    #[error("series constant term is {c0}, expected 1")]
    NotNormalized { c0: Complex },
    #[error("invalid bracket [{lo}, {hi}]")]
    InvalidBracket { lo: f64, hi: f64 },
    #[error("non-finite value encountered at {at}")]
    NonFinite { at: f64 },
}

/// Closed interval `[lo, hi]` with `0 <= lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64) -> Result<Self, NumericsError> {
        if !(lo.is_finite() && hi.is_finite() && lo >= 0.0 && lo < hi) {
            return Err(NumericsError::InvalidBracket { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

/// Outcome of a bracketed root search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootReport {
    pub root: f64,
    pub bracket: Bracket,
    pub iterations: usize,
}

/// Bisection on a sign-changing bracket. Returns the midpoint of the final
/// bracket once its width is at most `tol`.
pub fn find_root<F: Fn(f64) -> f64>(f: F, bracket: Bracket, tol: f64) -> Result<f64, NumericsError> {
    find_root_report(f, bracket, tol).map(|r| r.root)
}

/// Bisection returning the final bracket and iteration count as well.
pub fn find_root_report<F: Fn(f64) -> f64>(
    f: F,
    bracket: Bracket,
    tol: f64,
) -> Result<RootReport, NumericsError> {
    let (mut lo, mut hi) = (bracket.lo, bracket.hi);
    let (flo, fhi) = (f(lo), f(hi));
    if !flo.is_finite() {
        return Err(NumericsError::NonFinite { at: lo });
    }
    if !fhi.is_finite() {
        return Err(NumericsError::NonFinite { at: hi });
    }
    if flo == 0.0 {
        return Ok(RootReport { root: lo, bracket, iterations: 0 });
    }
    if fhi == 0.0 {
        return Ok(RootReport { root: hi, bracket, iterations: 0 });
    }
    if flo.signum() == fhi.signum() {
        return Err(NumericsError::NoSignChange { lo, hi, flo, fhi });
    }
    let lo_negative = flo < 0.0;
    let mut iterations = 0;
    while hi - lo > tol {
        if iterations == MAX_ITER {
            return Err(NumericsError::NoConvergence { iterations });
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if !fm.is_finite() {
            return Err(NumericsError::NonFinite { at: mid });
        }
        if fm == 0.0 {
            lo = mid;
            hi = mid;
            iterations += 1;
            break;
        }
        if (fm < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok(RootReport {
        root: 0.5 * (lo + hi),
        bracket: Bracket { lo, hi: hi.max(lo) },
        iterations,
    })
}

/// Bisection followed by a Newton polish that is kept only if it stays in
/// the final bracket and does not increase `|f|`.
pub fn find_root_newton<F, D>(f: F, df: D, bracket: Bracket, tol: f64) -> Result<RootReport, NumericsError>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let mut report = find_root_report(&f, bracket, tol)?;
    let (lo, hi) = (report.bracket.lo - tol, report.bracket.hi + tol);
    let mut x = report.root;
    for _ in 0..3 {
        let d = df(x);
        if d == 0.0 || !d.is_finite() {
            break;
        }
        let next = x - f(x) / d;
        if !(next >= lo && next <= hi) || f(next).abs() > f(x).abs() {
            break;
        }
        x = next;
    }
    report.root = x;
    Ok(report)
}

/// Distance from `w` to the segment `[a, b]`.
pub fn segment_distance(a: Complex, b: Complex, w: Complex) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (w - a).norm();
    }
    let t = ((w - a) * ab.conj()).re / len2;
    let t = t.clamp(0.0, 1.0);
    (w - (a + ab * t)).norm()
}

/// Minimum distance from `w` to a polyline.
pub fn polyline_distance(curve: &[Complex], w: Complex) -> f64 {
    curve
        .windows(2)
        .map(|s| segment_distance(s[0], s[1], w))
        .fold(f64::INFINITY, f64::min)
}

/// Winding contribution of one directed segment about `w` (crossing rule).
#[inline]
pub(crate) fn segment_winding(a: Complex, b: Complex, w: Complex) -> i32 {
    let is_left = (b.re - a.re) * (w.im - a.im) - (w.re - a.re) * (b.im - a.im);
    if a.im <= w.im {
        if b.im > w.im && is_left > 0.0 {
            return 1;
        }
    } else if b.im <= w.im && is_left < 0.0 {
        return -1;
    }
    0
}

/// Winding number of a closed polyline about `w`, without the boundary check.
pub fn winding_number_unchecked(curve: &[Complex], w: Complex) -> i32 {
    let mut wn: i32 = curve.windows(2).map(|s| segment_winding(s[0], s[1], w)).sum();
    if let (Some(&first), Some(&last)) = (curve.first(), curve.last()) {
        if first != last {
            wn += segment_winding(last, first, w);
        }
    }
    wn
}

/// Winding number of a closed polyline about `w`. Fails when `w` is within
/// `tol` of the polyline.
pub fn winding_number(curve: &[Complex], w: Complex, tol: f64) -> Result<i32, NumericsError> {
    let mut distance = polyline_distance(curve, w);
    if let (Some(&first), Some(&last)) = (curve.first(), curve.last()) {
        distance = distance.min(segment_distance(last, first, w));
    }
    if distance <= tol {
        return Err(NumericsError::PointOnBoundary { distance });
    }
    Ok(winding_number_unchecked(curve, w))
}

/// Truncated power series `c0 + c1 z + c2 z^2 + ...`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerSeries {
    pub coefficients: Vec<Complex>,
}

impl PowerSeries {
    pub fn new(coefficients: Vec<Complex>) -> Self {
        Self { coefficients }
    }

    pub fn from_real(coefficients: &[f64]) -> Self {
        Self::new(coefficients.iter().map(|&c| Complex::new(c, 0.0)).collect())
    }

    /// Index of the last retained coefficient.
    pub fn truncation_order(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Complex {
        self.coefficients.get(k).copied().unwrap_or_default()
    }

    /// Horner evaluation of every retained term.
    pub fn eval(&self, z: Complex) -> Complex {
        self.coefficients.iter().rev().fold(Complex::default(), |acc, &c| acc * z + c)
    }

    /// Forward summation that stops once a term falls below
    /// `1e-18` of the partial sum, and never uses more than 64 terms.
    pub fn eval_truncated(&self, z: Complex) -> Complex {
        let mut sum = Complex::default();
        let mut power = Complex::new(1.0, 0.0);
        let mut small_run = 0;
        for &c in self.coefficients.iter().take(SERIES_CAP) {
            let term = c * power;
            sum += term;
            power *= z;
            if term.norm() < SERIES_REL_CUTOFF * sum.norm() {
                small_run += 1;
                // Two consecutive tiny terms guard against isolated zero coefficients.
                if small_run >= 2 {
                    break;
                }
            } else {
                small_run = 0;
            }
        }
        sum
    }

    /// Estimate of the truncation error at `|z| = r` from the last retained term.
    pub fn tail_bound(&self, r: f64) -> f64 {
        let n = self.truncation_order();
        self.coeff(n).norm() * r.powi(n as i32)
    }

    pub fn derivative(&self) -> PowerSeries {
        PowerSeries::new(
            self.coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    /// Multiplies by `z`, shifting every coefficient up one place.
    pub fn shift_up(&self) -> PowerSeries {
        let mut c = Vec::with_capacity(self.coefficients.len() + 1);
        c.push(Complex::default());
        c.extend_from_slice(&self.coefficients);
        PowerSeries::new(c)
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.coefficients.len().max(other.coefficients.len());
        PowerSeries::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn scale(&self, s: Complex) -> PowerSeries {
        PowerSeries::new(self.coefficients.iter().map(|&c| c * s).collect())
    }

    /// Cauchy product truncated to the shorter operand's order.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.coefficients.len().min(other.coefficients.len());
        let c = (0..n)
            .map(|k| (0..=k).map(|j| self.coeff(j) * other.coeff(k - j)).sum())
            .collect();
        PowerSeries::new(c)
    }

    /// Series quotient `self / other`; `other` must have a nonzero constant term.
    pub fn div(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.coefficients.len().min(other.coefficients.len());
        let b0 = other.coeff(0);
        let mut q: Vec<Complex> = Vec::with_capacity(n);
        for k in 0..n {
            let s: Complex = (1..=k).map(|j| other.coeff(j) * q[k - j]).sum();
            q.push((self.coeff(k) - s) / b0);
        }
        PowerSeries::new(q)
    }

    /// `exp` of a series with zero constant term, via `g' = f' g`.
    pub fn exp(&self) -> PowerSeries {
        let n = self.coefficients.len();
        let mut g = vec![Complex::default(); n];
        if n == 0 {
            return PowerSeries::new(g);
        }
        g[0] = self.coeff(0).exp();
        for m in 1..n {
            let s: Complex = (1..=m).map(|k| self.coeff(k) * k as f64 * g[m - k]).sum();
            g[m] = s / m as f64;
        }
        PowerSeries::new(g)
    }
}

/// Termwise `F(z) = ∫_0^z (h(t) - 1)/t dt`, i.e. `d_k = c_k / k`, `d_0 = 0`.
pub fn series_integrate_ratio(h: &PowerSeries) -> Result<PowerSeries, NumericsError> {
    let c0 = h.coeff(0);
    if (c0 - Complex::new(1.0, 0.0)).norm() > 1e-14 {
        return Err(NumericsError::NotNormalized { c0 });
    }
    let mut d = Vec::with_capacity(h.coefficients.len());
    d.push(Complex::default());
    d.extend(h.coefficients.iter().enumerate().skip(1).map(|(k, &c)| c / k as f64));
    Ok(PowerSeries::new(d))
}

/// Legendre polynomial `P_n(x)` and its derivative by the three-term recurrence.
/// Generic over real or complex arguments.
pub fn legendre_p<T>(n: usize, x: T) -> (T, T)
where
    T: Copy
        + std::ops::Add<Output = T>
        + std::ops::Sub<Output = T>
        + std::ops::Mul<Output = T>
        + std::ops::Mul<f64, Output = T>
        + std::ops::Div<f64, Output = T>
        + From<f64>,
{
    let one = T::from(1.0);
    let zero = T::from(0.0);
    if n == 0 {
        return (one, zero);
    }
    let (mut p_prev, mut p) = (one, x);
    let (mut d_prev, mut d) = (zero, one);
    for m in 1..n {
        let mf = m as f64;
        let p_next = (x * p * (2.0 * mf + 1.0) - p_prev * mf) / (mf + 1.0);
        let d_next = d_prev + p * (2.0 * mf + 1.0);
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
    }
    (p, d)
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_p(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_p(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Golden-section search for a minimum of a unimodal function on `[a, b]`.
pub fn golden_section_min<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..MAX_ITER {
        if (b - a).abs() <= tol {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    if fc < fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Digamma function for `Re z > 0`, by upward recurrence and the
/// asymptotic expansion.
pub fn digamma(mut z: Complex) -> Complex {
    let mut shift = Complex::default();
    while z.norm() < 12.0 {
        shift -= z.inv();
        z += 1.0;
    }
    let zi = z.inv();
    let zi2 = zi * zi;
    // Bernoulli terms B_2k / (2k z^2k).
    let series = zi2
        * (1.0 / 12.0
            - zi2 * (1.0 / 120.0 - zi2 * (1.0 / 252.0 - zi2 * (1.0 / 240.0 - zi2 * (1.0 / 132.0)))));
    shift + z.ln() - 0.5 * zi - series
}

/// Uniform grid `θ_k = 2πk/n` for `k = 0..n` (closed, `n + 1` points).
pub fn theta_grid(n: usize) -> Vec<f64> {
    (0..=n).map(|k| std::f64::consts::TAU * k as f64 / n as f64).collect()
}
