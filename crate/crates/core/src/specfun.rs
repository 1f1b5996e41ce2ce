//! Bessel, Struve, Lommel and odd Legendre functions: values, derivatives,
//! positive zeros and the starlikeness quotients `zf'/f` of their normalized
//! forms.
//!
//! Each base function except Legendre is written as `C x^p E(x²)` with `E`
//! entire and `E(0) = 1`. The normalized quotients then only need the
//! logarithmic derivative of `E`:
//!
//! * `F`: `1 + (2/p) w E'(w)/E(w)` at `w = z²`
//! * `G`: `1 + 2 w E'(w)/E(w)` at `w = z²`
//! * `H`: `1 + w E'(w)/E(w)` at `w = z`
//!
//! On the positive axis the series is used up to [`SERIES_LIMIT`]. Beyond it
//! Bessel uses backward recurrence, Struve the Laplace integral of
//! `H_ν - Y_ν`, and Lommel a contour integral for the tail of its
//! variation-of-parameters representation.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};
use statrs::function::gamma::gamma;
use thiserror::Error;

use crate::numerics::{digamma, find_root, gauss_legendre, legendre_p, Bracket, Complex, NumericsError, ROOT_TOL};

/// Largest `x` evaluated by the power series on the real axis.
pub const SERIES_LIMIT: f64 = 12.0;
/// Step of the sign-change scan for zeros.
pub const SCAN_STEP: f64 = 0.1;
/// Distance to a zero under which quotients are refused.
pub const POLE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecfunError {
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("found {found} of {requested} zeros in (0, {window}]")]
    ScanExhausted { found: usize, requested: usize, window: f64 },
    #[error("z lies within {distance:e} of the zero {zero}")]
    NearPole { zero: f64, distance: f64 },
    #[error("|z| = {modulus} is not below the first zero bound {limit}")]
    OutsideDomain { modulus: f64, limit: f64 },
    #[error("x must be positive, got {0}")]
    NonPositiveArgument(f64),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// Special-function family with its parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// `J_β`, `β > 0`.
    BesselJ { beta: f64 },
    /// `H_β`, `|β| ≤ 1/2`.
    StruveH { beta: f64 },
    /// `L_{u-1/2, 1/2}`, `u ∈ (-1, 1) \ {0}`.
    LommelHalf { u: f64 },
    /// `P_{2n-1}/P'_{2n-1}(0)`, `n ≥ 1`.
    LegendreOddNorm { n: usize },
}

/// Normalization of the base function: the `1/p`-th power (`F`), the
/// `z^{1-p}` rescaling (`G`) or the square-root substitution (`H`).
/// Legendre has a single normalization and ignores this field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Normalization {
    F,
    G,
    H,
}

impl std::str::FromStr for Normalization {
    type Err = SpecfunError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "f" | "u" => Ok(Normalization::F),
            "g" | "v" => Ok(Normalization::G),
            "h" | "w" => Ok(Normalization::H),
            _ => Err(SpecfunError::ParameterOutOfRange(format!("unknown normalization '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpecialFunctionDesc {
    #[serde(flatten)]
    pub family: Family,
    pub normalization: Normalization,
}

impl SpecialFunctionDesc {
    pub fn new(family: Family, normalization: Normalization) -> Result<Self, SpecfunError> {
        let d = Self { family, normalization };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<(), SpecfunError> {
        let bad = |s: String| Err(SpecfunError::ParameterOutOfRange(s));
        match self.family {
            Family::BesselJ { beta } if !(beta > 0.0 && beta.is_finite()) => bad(format!("Bessel needs beta > 0, got {beta}")),
            Family::StruveH { beta } if !(beta.abs() <= 0.5) => bad(format!("Struve needs |beta| <= 1/2, got {beta}")),
            Family::LommelHalf { u } if !(u > -1.0 && u < 1.0 && u != 0.0) => {
                bad(format!("Lommel needs u in (-1, 1) without 0, got {u}"))
            }
            Family::LommelHalf { u } if u == -0.5 && self.normalization == Normalization::F => {
                bad("Lommel F normalization is undefined at u = -1/2".into())
            }
            Family::LegendreOddNorm { n: 0 } => bad("Legendre needs n >= 1".into()),
            _ => Ok(()),
        }
    }

    /// True for the square-root normalization, whose radius lives in
    /// `(0, z₁²)`.
    pub fn uses_square_root(&self) -> bool {
        self.normalization == Normalization::H && !matches!(self.family, Family::LegendreOddNorm { .. })
    }

    /// Exponent `p` of the leading power `x^p` of the base function.
    pub fn leading_power(&self) -> f64 {
        match self.family {
            Family::BesselJ { beta } => beta,
            Family::StruveH { beta } => beta + 1.0,
            Family::LommelHalf { u } => u + 0.5,
            Family::LegendreOddNorm { .. } => 1.0,
        }
    }
}

impl std::fmt::Display for SpecialFunctionDesc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.family {
            Family::BesselJ { beta } => write!(f, "bessel(beta={beta})/{:?}", self.normalization),
            Family::StruveH { beta } => write!(f, "struve(beta={beta})/{:?}", self.normalization),
            Family::LommelHalf { u } => write!(f, "lommel(u={u})/{:?}", self.normalization),
            Family::LegendreOddNorm { n } => write!(f, "legendre(n={n})"),
        }
    }
}

/// Coefficients `a_k` of `E(w) = Σ a_k w^k` up to where terms at `|w| = wmax`
/// fall below double precision.
fn entire_coefficients(family: Family, wmax: f64) -> Vec<f64> {
    let ratio: Box<dyn Fn(f64) -> f64> = match family {
        Family::BesselJ { beta } => Box::new(move |k| -1.0 / (4.0 * k * (k + beta))),
        Family::StruveH { beta } => Box::new(move |k| -1.0 / (4.0 * (k + 0.5) * (k + beta + 0.5))),
        Family::LommelHalf { u } => {
            let (a, b) = ((u + 2.0) / 2.0, (u + 3.0) / 2.0);
            Box::new(move |k| -0.25 / ((a + k - 1.0) * (b + k - 1.0)))
        }
        Family::LegendreOddNorm { .. } => unreachable!("Legendre is evaluated by recurrence"),
    };
    let mut coeffs = vec![1.0];
    let mut peak = 1.0f64;
    for k in 1..400 {
        let a = coeffs[k - 1] * ratio(k as f64);
        coeffs.push(a);
        let term = a.abs() * wmax.max(1.0).powi(k as i32);
        peak = peak.max(term);
        if term < 1e-18 * peak && k as f64 > wmax.sqrt() {
            break;
        }
    }
    coeffs
}

/// `(E(w), E'(w))` by Horner's rule.
fn entire_eval<T>(coeffs: &[f64], w: T) -> (T, T)
where
    T: Copy + std::ops::Mul<Output = T> + std::ops::Add<f64, Output = T> + std::ops::Mul<f64, Output = T> + From<f64>,
{
    let mut e = T::from(0.0);
    let mut d = T::from(0.0);
    for (k, &a) in coeffs.iter().enumerate().rev() {
        e = e * w + a;
        if k > 0 {
            d = d * w + a * k as f64;
        }
    }
    (e, d)
}

/// Constant `C` in `base = C x^p E(x²)`.
fn leading_constant(family: Family) -> f64 {
    match family {
        Family::BesselJ { beta } => 2f64.powf(-beta) / gamma(beta + 1.0),
        Family::StruveH { beta } => 2f64.powf(-(beta + 1.0)) / (gamma(1.5) * gamma(beta + 1.5)),
        Family::LommelHalf { u } => 1.0 / (u * (u + 1.0)),
        Family::LegendreOddNorm { .. } => 1.0,
    }
}

/// Value and derivative of the base function at real `x > 0`.
pub fn eval_special(desc: &SpecialFunctionDesc, x: f64) -> Result<(f64, f64), SpecfunError> {
    desc.validate()?;
    if !(x > 0.0 && x.is_finite()) {
        return Err(SpecfunError::NonPositiveArgument(x));
    }
    Ok(eval_base(desc.family, x))
}

fn eval_base(family: Family, x: f64) -> (f64, f64) {
    if let Family::LegendreOddNorm { n } = family {
        let m = 2 * n - 1;
        let (_, d0) = legendre_p(m, 0.0);
        let (p, dp) = legendre_p(m, x);
        return (p / d0, dp / d0);
    }
    if x <= SERIES_LIMIT {
        return series_base(family, x);
    }
    match family {
        Family::BesselJ { beta } => bessel_j_miller(beta, x),
        Family::StruveH { beta } => struve_large(beta, x),
        Family::LommelHalf { u } => lommel_large(u, x),
        Family::LegendreOddNorm { .. } => unreachable!(),
    }
}

fn series_base(family: Family, x: f64) -> (f64, f64) {
    let p = SpecialFunctionDesc { family, normalization: Normalization::G }.leading_power();
    let coeffs = entire_coefficients(family, x * x);
    let (e, de) = entire_eval(&coeffs, x * x);
    let c = leading_constant(family);
    let xp = x.powf(p);
    (c * xp * e, c * (p * xp / x * e + 2.0 * xp * x * de))
}

/// `J_ν` and `J_ν'` by Miller's backward recurrence, normalized with
/// `(x/2)^ν = Σ_k (ν+2k) Γ(ν+k)/k! J_{ν+2k}(x)`.
fn bessel_j_miller(nu: f64, x: f64) -> (f64, f64) {
    let start = (x + 40.0 + 10.0 * x.sqrt()).ceil() as usize;
    let start = start + start % 2;
    // c_k = (ν+2k) Γ(ν+k)/k!, built upward from Γ(ν).
    let mut g = gamma(nu);
    let mut weights = Vec::with_capacity(start / 2 + 1);
    for k in 0..=start / 2 {
        if k > 0 {
            g *= (nu + k as f64 - 1.0) / k as f64;
        }
        weights.push((nu + 2.0 * k as f64) * g);
    }
    let (mut f_next, mut f) = (0.0f64, 1e-30f64);
    let mut sum = if start % 2 == 0 { weights[start / 2] * f } else { 0.0 };
    for k in (0..start).rev() {
        let f_prev = 2.0 * (nu + (k + 1) as f64) / x * f - f_next;
        f_next = f;
        f = f_prev;
        if k % 2 == 0 {
            sum += weights[k / 2] * f;
        }
        if f.abs() > 1e250 {
            f /= 1e250;
            f_next /= 1e250;
            sum /= 1e250;
        }
    }
    let (f0, f1) = (f, f_next);
    let scale = (x / 2.0).powf(nu) / sum;
    let (j, j1) = (f0 * scale, f1 * scale);
    (j, nu / x * j - j1)
}

/// `(J_ν, Y_ν)` by the Hankel asymptotic expansion, truncated at its
/// smallest term.
fn hankel_jy(nu: f64, x: f64) -> (f64, f64) {
    let mu = 4.0 * nu * nu;
    let (mut p, mut q) = (1.0, 0.0);
    let mut a = 1.0f64;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        a *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        if a.abs() >= last || a == 0.0 {
            break;
        }
        last = a.abs();
        match k % 4 {
            1 => q += a,
            2 => p -= a,
            3 => q -= a,
            _ => p += a,
        }
    }
    let chi = x - (nu / 2.0 + 0.25) * PI;
    let amp = (2.0 / (PI * x)).sqrt();
    (amp * (p * chi.cos() - q * chi.sin()), amp * (p * chi.sin() + q * chi.cos()))
}

/// Composite 16-point Gauss-Legendre over `[0, 64]`, enough for integrands
/// damped by `e^{-s}`.
fn laplace_quadrature<F: Fn(f64) -> f64>(f: F) -> f64 {
    use std::sync::OnceLock;
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    let (x, w) = RULE.get_or_init(|| gauss_legendre(16));
    let panels = 32;
    let width = 2.0;
    let mut total = 0.0;
    for p in 0..panels {
        let mid = (p as f64 + 0.5) * width;
        for (xi, wi) in x.iter().zip(w) {
            total += wi * f(mid + 0.5 * width * xi);
        }
    }
    0.5 * width * total
}

fn recip_gamma(x: f64) -> f64 {
    if x <= 0.0 && x.fract() == 0.0 {
        0.0
    } else {
        1.0 / gamma(x)
    }
}

/// `H_ν = Y_ν + K_ν` with
/// `K_ν(x) = 2^{1-ν}/(√π Γ(ν+½)) x^{ν-1} ∫_0^∞ e^{-s} (1 + s²/x²)^{ν-½} ds`.
fn struve_large(nu: f64, x: f64) -> (f64, f64) {
    let (_, y) = hankel_jy(nu, x);
    let (_, y1) = hankel_jy(nu + 1.0, x);
    let dy = nu / x * y - y1;
    let a = 2f64.powf(1.0 - nu) * recip_gamma(nu + 0.5) / PI.sqrt();
    if a == 0.0 {
        return (y, dy);
    }
    let i0 = laplace_quadrature(|s| (-s).exp() * (1.0 + s * s / (x * x)).powf(nu - 0.5));
    let i1 = laplace_quadrature(|s| {
        (-s).exp() * (nu - 0.5) * (1.0 + s * s / (x * x)).powf(nu - 1.5) * (-2.0 * s * s / (x * x * x))
    });
    let k = a * x.powf(nu - 1.0) * i0;
    let dk = a * ((nu - 1.0) * x.powf(nu - 2.0) * i0 + x.powf(nu - 1.0) * i1);
    (y + k, dy + dk)
}

/// `L_u(x) = x^{-1/2} [Γ(u) sin(x - πu/2) + Re ∫_0^∞ e^{-s} (x - is)^{u-1} ds]`.
fn lommel_large(u: f64, x: f64) -> (f64, f64) {
    let r0 = laplace_quadrature(|s| ((-s).exp() * Complex::new(x, -s).powf(u - 1.0)).re);
    let r1 = laplace_quadrature(|s| ((-s).exp() * (u - 1.0) * Complex::new(x, -s).powf(u - 2.0)).re);
    let g = gamma(u);
    let phase = x - FRAC_PI_2 * u;
    let bracket = g * phase.sin() + r0;
    let dbracket = g * phase.cos() + r1;
    let sq = x.sqrt();
    (bracket / sq, dbracket / sq - 0.5 * bracket / (sq * x))
}

/// Positive zeros of the base function, with multiplicities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroTable {
    pub desc: SpecialFunctionDesc,
    pub zeros: Vec<f64>,
    pub multiplicities: Vec<u32>,
}

impl ZeroTable {
    pub fn first(&self) -> f64 {
        self.zeros[0]
    }

    /// Bound on `|z|` for quotients: the first zero, or its square for the
    /// square-root normalization.
    pub fn domain_limit(&self) -> f64 {
        if self.desc.uses_square_root() {
            self.first() * self.first()
        } else {
            self.first()
        }
    }
}

/// First `count` distinct positive zeros by a sign-change scan and bisection.
/// Double zeros (no sign change) are caught as roots of the derivative
/// where the function itself vanishes.
pub fn positive_zeros(desc: &SpecialFunctionDesc, count: usize) -> Result<ZeroTable, SpecfunError> {
    desc.validate()?;
    if count == 0 {
        return Err(SpecfunError::ParameterOutOfRange("count must be at least 1".into()));
    }
    let family = desc.family;
    let (window, step) = match family {
        Family::LegendreOddNorm { n } => (1.0, SCAN_STEP / (2 * n - 1) as f64),
        _ => (50.0 + 4.0 * count as f64, SCAN_STEP),
    };
    let f = |x: f64| eval_base(family, x);
    let mut zeros = Vec::with_capacity(count);
    let mut mult = Vec::with_capacity(count);
    let mut a = step;
    let (mut fa, mut da) = f(a);
    while zeros.len() < count && a < window {
        let b = (a + step).min(window);
        let (fb, db) = f(b);
        if fa == 0.0 {
            zeros.push(a);
            mult.push(1);
        } else if fa.signum() != fb.signum() && fb != 0.0 {
            let z = find_root(|x| f(x).0, Bracket::new(a, b)?, ROOT_TOL)?;
            zeros.push(z);
            mult.push(1);
        } else if da.signum() != db.signum() {
            let z = find_root(|x| f(x).1, Bracket::new(a, b)?, ROOT_TOL)?;
            let scale = fa.abs().max(fb.abs());
            if f(z).0.abs() <= 1e-6 * scale {
                zeros.push(z);
                mult.push(2);
            }
        }
        a = b;
        fa = fb;
        da = db;
    }
    if zeros.len() < count {
        return Err(SpecfunError::ScanExhausted { found: zeros.len(), requested: count, window });
    }
    Ok(ZeroTable { desc: *desc, zeros, multiplicities: mult })
}

/// `w E'(w)/E(w)` at complex `w`.
fn log_derivative_entire(family: Family, w: Complex) -> Complex {
    let coeffs = entire_coefficients(family, w.norm());
    let (e, de) = entire_eval(&coeffs, w);
    w * de / e
}

/// `zf'(z)/f(z)` of the normalized function, from the base function's
/// logarithmic derivative.
pub fn starlike_quotient(desc: &SpecialFunctionDesc, z: Complex, table: &ZeroTable) -> Result<Complex, SpecfunError> {
    desc.validate()?;
    let limit = table.domain_limit();
    if z.norm() >= limit {
        return Err(SpecfunError::OutsideDomain { modulus: z.norm(), limit });
    }
    let probe = if desc.uses_square_root() { z.sqrt() } else { z };
    for &zero in &table.zeros {
        let distance = (probe - zero).norm().min((probe + zero).norm());
        if distance < POLE_TOL {
            return Err(SpecfunError::NearPole { zero, distance });
        }
    }
    Ok(quotient_unchecked(desc, z))
}

/// Quotient without domain checks; `NaN` or infinities at poles.
pub fn quotient_unchecked(desc: &SpecialFunctionDesc, z: Complex) -> Complex {
    if z == Complex::default() {
        return Complex::new(1.0, 0.0);
    }
    match desc.family {
        Family::LegendreOddNorm { n } => {
            let (p, dp) = legendre_p(2 * n - 1, z);
            z * dp / p
        }
        family => {
            let p = desc.leading_power();
            match desc.normalization {
                Normalization::F => 1.0 + 2.0 / p * log_derivative_entire(family, z * z),
                Normalization::G => 1.0 + 2.0 * log_derivative_entire(family, z * z),
                Normalization::H => 1.0 + log_derivative_entire(family, z),
            }
        }
    }
}

/// Zero-sum form of the `G`-type quotient, `1 - Σ m_n 2w/(z_n² - w)` with
/// `w = z²` (or `1 - Σ m_n w/(z_n² - w)` with `w = z` for `H`), scaled by
/// `1/p` for `F`. The zeros past the table are approximated as equally
/// spaced and summed in closed form with the digamma function.
pub fn mittag_leffler_quotient(desc: &SpecialFunctionDesc, z: Complex, table: &ZeroTable) -> Complex {
    let (w, factor) = match (desc.family, desc.normalization) {
        (Family::LegendreOddNorm { .. }, _) => (z * z, 2.0),
        (_, Normalization::H) => (z, 1.0),
        _ => (z * z, 2.0),
    };
    let mut s = Complex::default();
    for (&zn, &m) in table.zeros.iter().zip(&table.multiplicities) {
        s += m as f64 * w / (zn * zn - w);
    }
    let len = table.zeros.len();
    let has_tail = !matches!(desc.family, Family::LegendreOddNorm { .. }) && len >= 2;
    if has_tail && w != Complex::default() {
        let last = table.zeros[len - 1];
        let delta = last - table.zeros[len - 2];
        let zeta = w.sqrt();
        let m = table.multiplicities[len - 1] as f64;
        let sum = (digamma(1.0 + (last + zeta) / delta) - digamma(1.0 + (last - zeta) / delta)) / (2.0 * zeta * delta);
        s += m * w * sum;
    }
    let scale = match (desc.family, desc.normalization) {
        (Family::LegendreOddNorm { .. }, _) => 1.0,
        (_, Normalization::F) => 1.0 / desc.leading_power(),
        _ => 1.0,
    };
    1.0 - factor * scale * s
}

/// Real quotient on the positive axis as a function of the radius variable
/// (`r`, or `r` in place of `z` for the square-root normalization).
pub fn radial_quotient(desc: &SpecialFunctionDesc, r: f64) -> f64 {
    quotient_unchecked(desc, Complex::new(r, 0.0)).re
}

/// Constant `κ` and multiplier `m` of the radius equation
/// `m (x B'(x) - κ B(x)) = 0`, where `B` is the base function and `x = r` or
/// `√r`. `r1` is the inradius at 1 of the target.
pub fn radius_equation_coefficients(desc: &SpecialFunctionDesc, r1: f64) -> (f64, f64) {
    let p = desc.leading_power();
    let lommel = matches!(desc.family, Family::LommelHalf { .. });
    let mult = if lommel { 2.0 } else { 1.0 };
    let kappa = match (desc.family, desc.normalization) {
        (Family::LegendreOddNorm { .. }, _) => 1.0 - r1,
        (Family::LommelHalf { u }, Normalization::F) if u < -0.5 => p * (1.0 + r1),
        (_, Normalization::F) => p * (1.0 - r1),
        (_, Normalization::G) => p - r1,
        (_, Normalization::H) => p - 2.0 * r1,
    };
    (kappa, mult)
}

/// Left side of the radius equation at `r`.
pub fn radius_equation(desc: &SpecialFunctionDesc, r: f64, r1: f64) -> f64 {
    let x = if desc.uses_square_root() { r.sqrt() } else { r };
    let (b, db) = eval_base(desc.family, x);
    let (kappa, mult) = radius_equation_coefficients(desc, r1);
    mult * (x * db - kappa * b)
}

/// Bessel `J_ν` at real `x > 0`, exposed for tests and cross-checks.
pub fn bessel_j(nu: f64, x: f64) -> (f64, f64) {
    eval_base(Family::BesselJ { beta: nu }, x)
}
