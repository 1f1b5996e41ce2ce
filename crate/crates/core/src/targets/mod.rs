//! Catalog of Ma-Minda target functions `ψ` and the geometry of their images:
//! evaluation, boundary curves, maximal disks, inradius at 1, convexity radius
//! and membership.

mod domain;

use std::f64::consts::{E, PI, SQRT_2, TAU};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numerics::{
    find_root, gauss_legendre, golden_section_min, series_integrate_ratio, Bracket, Complex, PowerSeries,
    ROOT_TOL,
};

pub use domain::{Margin, Region, SampledDomain, BOUNDARY_SAMPLES, REFINE_CHORD};

/// `k = 1 + √2`, the parameter of the RK target.
pub const RK_K: f64 = 1.0 + SQRT_2;
/// Terms kept in catalog Taylor series.
pub const TAYLOR_ORDER: usize = 64;
/// Tolerance under which a point counts as lying on a boundary.
pub const CONTAINS_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TargetError {
    #[error("|z| = {modulus} lies outside the closed unit disk")]
    OutsideClosedDisk { modulus: f64 },
    #[error("invalid parameters for {target}: {reason}")]
    InvalidParameters { target: String, reason: String },
    #[error("cannot parse target id '{0}'")]
    Parse(String),
    #[error("center {a} outside the admissible range ({lo}, {hi})")]
    CenterOutOfRange { a: f64, lo: f64, hi: f64 },
    #[error("point lies within {distance:e} of the boundary")]
    Indeterminate { distance: f64 },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("target is singular at z = {0}")]
    Singular(Complex),
}

/// A Ma-Minda function from the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum TargetId {
    /// `1 + z e^z`
    Cardioid,
    /// `√(1 + z)`
    Sqrt,
    /// `e^z`
    Exp,
    /// `(1 + A z)/(1 + B z)` with `-1 ≤ B < A ≤ 1`
    Janowski { a: f64, b: f64 },
    /// `1 + sin z`
    Sine,
    /// `z + √(1 + z²)`
    Crescent,
    /// `2/(1 + e^{-z})`
    Sigmoid,
    /// `1 + 4z/3 + 2z²/3`
    CardioidC,
    /// `e^{e^z - 1}`
    Bell,
    /// `1 + (z/k)(k + z)/(k - z)` with `k = 1 + √2`
    Rk,
    /// `1 + z/(1 - α z²)` with `0 < α < 1`
    Alpha { alpha: f64 },
    /// Strip map onto `α < Re w < β` with `α < 1 < β`
    KurokiOwa { alpha: f64, beta: f64 },
}

impl fmt::Display for TargetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetId::Cardioid => write!(f, "cardioid"),
            TargetId::Sqrt => write!(f, "sqrt"),
            TargetId::Exp => write!(f, "exp"),
            TargetId::Janowski { a, b } => write!(f, "janowski:{a},{b}"),
            TargetId::Sine => write!(f, "sine"),
            TargetId::Crescent => write!(f, "crescent"),
            TargetId::Sigmoid => write!(f, "sigmoid"),
            TargetId::CardioidC => write!(f, "cardioid-c"),
            TargetId::Bell => write!(f, "bell"),
            TargetId::Rk => write!(f, "rk"),
            TargetId::Alpha { alpha } => write!(f, "alpha:{alpha}"),
            TargetId::KurokiOwa { alpha, beta } => write!(f, "kuroki-owa:{alpha},{beta}"),
        }
    }
}

impl FromStr for TargetId {
    type Err = TargetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        let (name, args) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s.as_str(), None),
        };
        let nums = |expected: usize| -> Result<Vec<f64>, TargetError> {
            let raw = args.ok_or_else(|| TargetError::Parse(s.clone()))?;
            let v: Result<Vec<f64>, _> = raw.split(',').map(|x| x.trim().parse::<f64>()).collect();
            let v = v.map_err(|_| TargetError::Parse(s.clone()))?;
            if v.len() != expected {
                return Err(TargetError::Parse(s.clone()));
            }
            Ok(v)
        };
        let no_args = |id: TargetId| if args.is_some() { Err(TargetError::Parse(s.clone())) } else { Ok(id) };
        let id = match name {
            "cardioid" => no_args(TargetId::Cardioid)?,
            "sqrt" => no_args(TargetId::Sqrt)?,
            "exp" => no_args(TargetId::Exp)?,
            "sine" => no_args(TargetId::Sine)?,
            "crescent" => no_args(TargetId::Crescent)?,
            "sigmoid" => no_args(TargetId::Sigmoid)?,
            "cardioid-c" => no_args(TargetId::CardioidC)?,
            "bell" => no_args(TargetId::Bell)?,
            "rk" => no_args(TargetId::Rk)?,
            "janowski" => {
                let v = nums(2)?;
                TargetId::Janowski { a: v[0], b: v[1] }
            }
            "alpha" => TargetId::Alpha { alpha: nums(1)?[0] },
            "kuroki-owa" => {
                let v = nums(2)?;
                TargetId::KurokiOwa { alpha: v[0], beta: v[1] }
            }
            _ => return Err(TargetError::Parse(s.clone())),
        };
        id.validate()?;
        Ok(id)
    }
}

impl TryFrom<String> for TargetId {
    type Error = TargetError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<TargetId> for String {
    fn from(id: TargetId) -> String {
        id.to_string()
    }
}

fn c(re: f64) -> Complex {
    Complex::new(re, 0.0)
}

const I: Complex = Complex { re: 0.0, im: 1.0 };

impl TargetId {
    /// Every catalog entry with the default parameters used in examples.
    pub fn catalog() -> Vec<TargetId> {
        vec![
            TargetId::Cardioid,
            TargetId::Sqrt,
            TargetId::Exp,
            TargetId::Janowski { a: 0.5, b: 0.2 },
            TargetId::Sine,
            TargetId::Crescent,
            TargetId::Sigmoid,
            TargetId::CardioidC,
            TargetId::Bell,
            TargetId::Rk,
            TargetId::Alpha { alpha: 0.5 },
            TargetId::KurokiOwa { alpha: 0.25, beta: 1.75 },
        ]
    }

    pub fn validate(&self) -> Result<(), TargetError> {
        let bad = |reason: &str| Err(TargetError::InvalidParameters { target: self.to_string(), reason: reason.into() });
        match *self {
            TargetId::Janowski { a, b } if !(a.is_finite() && b.is_finite() && -1.0 <= b && b < a && a <= 1.0) => {
                bad("requires -1 <= B < A <= 1")
            }
            TargetId::Alpha { alpha } if !(alpha > 0.0 && alpha < 1.0) => bad("requires 0 < alpha < 1"),
            TargetId::KurokiOwa { alpha, beta } if !(alpha < 1.0 && 1.0 < beta && beta.is_finite() && alpha.is_finite()) => {
                bad("requires alpha < 1 < beta")
            }
            _ => Ok(()),
        }
    }

    /// True when `ψ(z̄) = conj ψ(z)`.
    pub fn is_real(&self) -> bool {
        !matches!(self, TargetId::KurokiOwa { .. })
    }

    fn kuroki_owa_c(alpha: f64, beta: f64) -> Complex {
        Complex::from_polar(1.0, TAU * (1.0 - alpha) / (beta - alpha))
    }

    /// `ψ(z)` without domain checks.
    pub fn eval(&self, z: Complex) -> Complex {
        match *self {
            TargetId::Cardioid => 1.0 + z * z.exp(),
            TargetId::Sqrt => (1.0 + z).sqrt(),
            TargetId::Exp => z.exp(),
            TargetId::Janowski { a, b } => (1.0 + a * z) / (1.0 + b * z),
            TargetId::Sine => 1.0 + z.sin(),
            TargetId::Crescent => z + (1.0 + z * z).sqrt(),
            TargetId::Sigmoid => 2.0 / (1.0 + (-z).exp()),
            TargetId::CardioidC => 1.0 + z * (4.0 / 3.0) + z * z * (2.0 / 3.0),
            TargetId::Bell => (z.exp() - 1.0).exp(),
            TargetId::Rk => 1.0 + (z / RK_K) * (RK_K + z) / (RK_K - z),
            TargetId::Alpha { alpha } => 1.0 + z / (1.0 - alpha * z * z),
            TargetId::KurokiOwa { alpha, beta } => {
                let cc = Self::kuroki_owa_c(alpha, beta);
                1.0 + I * ((beta - alpha) / PI) * ((1.0 - cc * z).ln() - (1.0 - z).ln())
            }
        }
    }

    /// `ψ'(z)`.
    pub fn d1(&self, z: Complex) -> Complex {
        match *self {
            TargetId::Cardioid => z.exp() * (1.0 + z),
            TargetId::Sqrt => 0.5 / (1.0 + z).sqrt(),
            TargetId::Exp => z.exp(),
            TargetId::Janowski { a, b } => c(a - b) / ((1.0 + b * z) * (1.0 + b * z)),
            TargetId::Sine => z.cos(),
            TargetId::Crescent => 1.0 + z / (1.0 + z * z).sqrt(),
            TargetId::Sigmoid => {
                let s = 1.0 / (1.0 + (-z).exp());
                2.0 * s * (1.0 - s)
            }
            TargetId::CardioidC => 4.0 / 3.0 + z * (4.0 / 3.0),
            TargetId::Bell => (z.exp() - 1.0).exp() * z.exp(),
            TargetId::Rk => {
                let d = RK_K - z;
                (2.0 * RK_K * RK_K / (d * d) - 1.0) / RK_K
            }
            TargetId::Alpha { alpha } => {
                let d = 1.0 - alpha * z * z;
                (1.0 + alpha * z * z) / (d * d)
            }
            TargetId::KurokiOwa { alpha, beta } => {
                let cc = Self::kuroki_owa_c(alpha, beta);
                I * ((beta - alpha) / PI) * (1.0 / (1.0 - z) - cc / (1.0 - cc * z))
            }
        }
    }

    /// `ψ''(z)`.
    pub fn d2(&self, z: Complex) -> Complex {
        match *self {
            TargetId::Cardioid => z.exp() * (2.0 + z),
            TargetId::Sqrt => {
                let s = (1.0 + z).sqrt();
                -0.25 / (s * s * s)
            }
            TargetId::Exp => z.exp(),
            TargetId::Janowski { a, b } => {
                let d = 1.0 + b * z;
                -2.0 * b * (a - b) / (d * d * d)
            }
            TargetId::Sine => -z.sin(),
            TargetId::Crescent => {
                let s = (1.0 + z * z).sqrt();
                1.0 / (s * s * s)
            }
            TargetId::Sigmoid => {
                let s = 1.0 / (1.0 + (-z).exp());
                2.0 * s * (1.0 - s) * (1.0 - 2.0 * s)
            }
            TargetId::CardioidC => c(4.0 / 3.0),
            TargetId::Bell => {
                let ez = z.exp();
                (ez - 1.0).exp() * ez * (ez + 1.0)
            }
            TargetId::Rk => {
                let d = RK_K - z;
                4.0 * RK_K / (d * d * d)
            }
            TargetId::Alpha { alpha } => {
                let d = 1.0 - alpha * z * z;
                2.0 * alpha * z * (3.0 + alpha * z * z) / (d * d * d)
            }
            TargetId::KurokiOwa { alpha, beta } => {
                let cc = Self::kuroki_owa_c(alpha, beta);
                let (d0, d1) = (1.0 - z, 1.0 - cc * z);
                I * ((beta - alpha) / PI) * (1.0 / (d0 * d0) - cc * cc / (d1 * d1))
            }
        }
    }

    /// Taylor coefficients `c_0 .. c_{order-1}` of `ψ` at 0.
    pub fn taylor(&self, order: usize) -> PowerSeries {
        let n = order.max(2);
        let mut cs = vec![Complex::default(); n];
        let binom_half = |k: usize| -> f64 {
            (0..k).fold(1.0, |acc, j| acc * (0.5 - j as f64) / (j as f64 + 1.0))
        };
        match *self {
            TargetId::Cardioid => {
                cs[0] = c(1.0);
                let mut f = 1.0;
                for (k, ck) in cs.iter_mut().enumerate().skip(1) {
                    if k > 1 {
                        f /= (k - 1) as f64;
                    }
                    *ck = c(f);
                }
            }
            TargetId::Sqrt => cs.iter_mut().enumerate().for_each(|(k, ck)| *ck = c(binom_half(k))),
            TargetId::Exp => {
                let mut f = 1.0;
                for (k, ck) in cs.iter_mut().enumerate() {
                    if k > 0 {
                        f /= k as f64;
                    }
                    *ck = c(f);
                }
            }
            TargetId::Janowski { a, b } => {
                cs[0] = c(1.0);
                for (k, ck) in cs.iter_mut().enumerate().skip(1) {
                    *ck = c((a - b) * (-b).powi(k as i32 - 1));
                }
            }
            TargetId::Sine => {
                cs[0] = c(1.0);
                let mut f = 1.0;
                for k in 1..n {
                    f /= k as f64;
                    if k % 2 == 1 {
                        cs[k] = c(if (k / 2) % 2 == 0 { f } else { -f });
                    }
                }
            }
            TargetId::Crescent => {
                for j in 0..n.div_ceil(2) {
                    if 2 * j < n {
                        cs[2 * j] = c(binom_half(j));
                    }
                }
                cs[1] += 1.0;
            }
            TargetId::Sigmoid => {
                let minus_z = PowerSeries::new((0..n).map(|k| c(if k == 1 { -1.0 } else { 0.0 })).collect());
                let den = minus_z.exp().add(&PowerSeries::from_real(&[1.0]));
                let two = PowerSeries::new((0..n).map(|k| c(if k == 0 { 2.0 } else { 0.0 })).collect());
                cs = two.div(&den).coefficients;
            }
            TargetId::CardioidC => {
                cs[0] = c(1.0);
                cs[1] = c(4.0 / 3.0);
                cs[2.min(n - 1)] += 2.0 / 3.0;
            }
            TargetId::Bell => {
                let exp_m1 = TargetId::Exp.taylor(n);
                let mut g = exp_m1.coefficients;
                g[0] = c(0.0);
                cs = PowerSeries::new(g).exp().coefficients;
            }
            TargetId::Rk => {
                cs[0] = c(1.0);
                cs[1] = c(1.0 / RK_K);
                for (k, ck) in cs.iter_mut().enumerate().skip(2) {
                    *ck = c(2.0 / RK_K.powi(k as i32));
                }
            }
            TargetId::Alpha { alpha } => {
                cs[0] = c(1.0);
                for j in 0.. {
                    if 2 * j + 1 >= n {
                        break;
                    }
                    cs[2 * j + 1] = c(alpha.powi(j as i32));
                }
            }
            TargetId::KurokiOwa { alpha, beta } => {
                let cc = Self::kuroki_owa_c(alpha, beta);
                cs[0] = c(1.0);
                for (k, ck) in cs.iter_mut().enumerate().skip(1) {
                    *ck = I * ((beta - alpha) / PI) * (1.0 - cc.powi(k as i32)) / k as f64;
                }
            }
        }
        cs.truncate(n);
        PowerSeries::new(cs)
    }

    /// `F(z) = ∫_0^z (ψ(t) - 1)/t dt`, the logarithm of the extremal function
    /// divided by `z`. Closed forms where they exist, the integrated Taylor
    /// series for entire targets, quadrature otherwise.
    pub fn log_integral(&self, z: Complex) -> Complex {
        match *self {
            TargetId::Cardioid => z.exp() - 1.0,
            TargetId::Sqrt => {
                let s = (1.0 + z).sqrt();
                2.0 * (s - 1.0) - 2.0 * ((1.0 + s) / 2.0).ln()
            }
            TargetId::Janowski { a, b } => {
                if b == 0.0 {
                    a * z
                } else {
                    ((a - b) / b) * (1.0 + b * z).ln()
                }
            }
            TargetId::Crescent => {
                let s = (1.0 + z * z).sqrt();
                z + s - 1.0 - ((1.0 + s) / 2.0).ln()
            }
            TargetId::CardioidC => z * (4.0 / 3.0) + z * z / 3.0,
            TargetId::Rk => -(z + 2.0 * RK_K * (1.0 - z / RK_K).ln()) / RK_K,
            TargetId::Alpha { alpha } => {
                let s = alpha.sqrt();
                (s * z).atanh() / s
            }
            TargetId::Exp | TargetId::Sine | TargetId::Sigmoid | TargetId::Bell => {
                let f = series_integrate_ratio(&self.taylor(TAYLOR_ORDER)).expect("catalog series are normalized");
                f.eval_truncated(z)
            }
            TargetId::KurokiOwa { .. } => self.log_integral_quadrature(z, 8),
        }
    }

    /// Composite Gauss-Legendre quadrature of `∫_0^1 (ψ(sz) - 1)/s ds`.
    pub fn log_integral_quadrature(&self, z: Complex, panels: usize) -> Complex {
        let (x, w) = gauss_legendre(16);
        let mut total = Complex::default();
        for p in 0..panels {
            let (a, b) = (p as f64 / panels as f64, (p + 1) as f64 / panels as f64);
            let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
            for (xi, wi) in x.iter().zip(&w) {
                let s = mid + half * xi;
                total += (self.eval(z * s) - 1.0) / s * (wi * half);
            }
        }
        total
    }

    /// Closed-form inradius at 1 where one is known.
    pub fn closed_form_inradius(&self) -> Option<f64> {
        match *self {
            TargetId::Cardioid => Some(1.0 / E),
            TargetId::Sqrt => Some(SQRT_2 - 1.0),
            TargetId::Exp => Some(1.0 - 1.0 / E),
            TargetId::Janowski { a, b } => Some((a - b) / (1.0 + b.abs())),
            TargetId::Sine => Some(1f64.sin()),
            TargetId::Crescent => Some(2.0 - SQRT_2),
            TargetId::Sigmoid => Some((E - 1.0) / (E + 1.0)),
            TargetId::CardioidC => Some(2.0 / 3.0),
            TargetId::Rk => Some((SQRT_2 - 1.0).powi(2)),
            TargetId::Alpha { alpha } => Some(1.0 / (1.0 + alpha)),
            TargetId::KurokiOwa { alpha, beta } => Some((1.0 - alpha).min(beta - 1.0)),
            TargetId::Bell => None,
        }
    }

    /// Inradius at 1 as printed in the literature, where it differs from the
    /// computed value.
    pub fn printed_inradius(&self) -> Option<f64> {
        match self {
            TargetId::Exp => Some(E - 1.0),
            _ => None,
        }
    }

    /// Region `ψ(𝔻)` for membership and distance queries.
    pub fn region(&self) -> Region {
        match *self {
            TargetId::Janowski { a, b: -1.0 } => Region::HalfPlane { re_min: (1.0 - a) / 2.0 },
            TargetId::Janowski { a, b } => {
                let d = 1.0 - b * b;
                Region::Disk { center: c((1.0 - a * b) / d), radius: (a - b) / d }
            }
            TargetId::KurokiOwa { alpha, beta } => Region::Strip { re_min: alpha, re_max: beta },
            id => {
                let curve: Arc<dyn Fn(f64) -> Complex + Send + Sync> =
                    Arc::new(move |t: f64| id.eval(Complex::from_polar(1.0, t)));
                Region::Sampled(SampledDomain::from_arc(curve, BOUNDARY_SAMPLES))
            }
        }
    }
}

/// Checked evaluation of `ψ(z)` on the closed unit disk.
pub fn eval_target(id: TargetId, z: Complex) -> Result<Complex, TargetError> {
    id.validate()?;
    let modulus = z.norm();
    if modulus > 1.0 + 1e-12 {
        return Err(TargetError::OutsideClosedDisk { modulus });
    }
    let w = id.eval(z);
    if !(w.re.is_finite() && w.im.is_finite()) {
        return Err(TargetError::Singular(z));
    }
    Ok(w)
}

/// Parameters on the unit circle at which the target is singular.
fn singular_thetas(id: TargetId) -> Vec<f64> {
    match id {
        TargetId::Janowski { b: -1.0, .. } => vec![0.0],
        TargetId::KurokiOwa { alpha, beta } => {
            let cc = TargetId::kuroki_owa_c(alpha, beta);
            vec![0.0, (-cc.arg()).rem_euclid(TAU)]
        }
        _ => vec![],
    }
}

/// Offset from a singular parameter at which unbounded boundaries are clamped.
const CLAMP: f64 = 1e-8;

/// Closed boundary polyline `ψ(e^{iθ_k})`, `θ_k = 2πk/n`, `k = 0..n`.
/// Samples within `1e-8` of a boundary singularity are clamped to the
/// nearest admissible parameter.
pub fn boundary_curve(id: TargetId, n: usize) -> Result<Vec<Complex>, TargetError> {
    id.validate()?;
    if n < 64 {
        return Err(TargetError::NotApplicable(format!("boundary needs at least 64 samples, got {n}")));
    }
    let sing = singular_thetas(id);
    let pts = (0..=n)
        .map(|k| {
            let mut t = TAU * k as f64 / n as f64;
            for &s in &sing {
                let delta = (t - s + PI).rem_euclid(TAU) - PI;
                if delta.abs() < CLAMP {
                    t = s + if delta < 0.0 { -CLAMP } else { CLAMP };
                }
            }
            id.eval(Complex::from_polar(1.0, t))
        })
        .collect();
    Ok(pts)
}

/// Radius of the largest disk centered at real `a` inside the cardioid image.
pub fn maximal_disk_radius_cardioid(a: f64) -> Result<f64, TargetError> {
    let (lo, hi) = (1.0 - 1.0 / E, 1.0 + E);
    if !(a > lo && a < hi) {
        return Err(TargetError::CenterOutOfRange { a, lo, hi });
    }
    if a <= 1.0 + (E - 1.0 / E) / 2.0 {
        Ok(a - 1.0 + 1.0 / E)
    } else {
        Ok(E - (a - 1.0))
    }
}

/// Disk `|w - center| < radius` contained in a target image.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskSpec {
    pub center: f64,
    pub radius: f64,
}

/// Range of real centers admitting a disk inside `ψ(𝔻)`: `(ψ(-1), ψ(1))`
/// for real targets.
pub fn center_range(id: TargetId) -> (f64, f64) {
    match id {
        TargetId::Janowski { a, b } => {
            let hi = if b == -1.0 { f64::INFINITY } else { (1.0 + a) / (1.0 + b) };
            ((1.0 - a) / (1.0 - b), hi)
        }
        TargetId::KurokiOwa { alpha, beta } => (alpha, beta),
        // RK takes its minimum over the circle at -1 and maximum at 1 like the
        // others; the cardioid image also spans exactly (ψ(-1), ψ(1)) on the axis.
        id => (id.eval(c(-1.0)).re, id.eval(c(1.0)).re),
    }
}

/// Maximal disk centered at real `a`: closed form for the cardioid,
/// boundary distance otherwise.
pub fn maximal_disk(id: TargetId, a: f64) -> Result<DiskSpec, TargetError> {
    id.validate()?;
    if id == TargetId::Cardioid {
        return Ok(DiskSpec { center: a, radius: maximal_disk_radius_cardioid(a)? });
    }
    let (lo, hi) = center_range(id);
    if !(a > lo && a < hi) {
        return Err(TargetError::CenterOutOfRange { a, lo, hi });
    }
    let radius = id.region().signed_distance(c(a));
    if radius <= 0.0 {
        return Err(TargetError::CenterOutOfRange { a, lo, hi });
    }
    Ok(DiskSpec { center: a, radius })
}

/// Distance from 1 to the boundary of `ψ(𝔻)`, computed from the boundary and
/// cross-checked against the closed form when one is known.
pub fn inradius_at_one(id: TargetId) -> Result<f64, TargetError> {
    let report = inradius_report(id)?;
    Ok(report.value)
}

/// Inradius with its numeric and closed-form values side by side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InradiusReport {
    pub value: f64,
    pub numeric: f64,
    pub closed_form: Option<f64>,
    pub printed: Option<f64>,
}

pub fn inradius_report(id: TargetId) -> Result<InradiusReport, TargetError> {
    id.validate()?;
    let numeric = id.region().signed_distance(c(1.0));
    let closed_form = id.closed_form_inradius();
    if let Some(cf) = closed_form {
        if (cf - numeric).abs() > 1e-6 {
            log::warn!("inradius of {id}: closed form {cf} differs from boundary distance {numeric}");
        }
    }
    let printed = id.printed_inradius();
    if let Some(p) = printed {
        log::warn!("inradius of {id}: printed value {p} disagrees with boundary distance {numeric}");
    }
    Ok(InradiusReport { value: closed_form.unwrap_or(numeric), numeric, closed_form, printed })
}

/// Membership of `w` in `ψ(𝔻)`.
pub fn contains(id: TargetId, w: Complex) -> Result<bool, TargetError> {
    id.validate()?;
    contains_in(&id.region(), w)
}

/// Membership in a prebuilt region, failing when `w` is on the boundary.
pub fn contains_in(region: &Region, w: Complex) -> Result<bool, TargetError> {
    let m = region.signed_distance(w);
    if m.abs() <= CONTAINS_TOL {
        return Err(TargetError::Indeterminate { distance: m.abs() });
    }
    Ok(m > 0.0)
}

/// Smallest signed margin of `curve(θ_k)`, `θ_k = 2πk/samples`, against a
/// region, with the parameter where it occurs.
pub fn curve_min_margin<F: Fn(f64) -> Complex>(region: &Region, samples: usize, curve: F) -> (f64, f64) {
    let mut best = (f64::INFINITY, 0.0);
    for k in 0..samples {
        let t = TAU * k as f64 / samples as f64;
        let m = region.signed_distance(curve(t));
        if m < best.0 {
            best = (m, t);
        }
    }
    best
}

/// `min_θ Re(1 + zψ''/ψ')` on `|z| = r`.
fn convexity_margin(id: TargetId, r: f64) -> Result<f64, TargetError> {
    const N: usize = 720;
    let f = |t: f64| {
        let z = Complex::from_polar(r, t);
        let d1 = id.d1(z);
        (1.0 + z * id.d2(z) / d1).re
    };
    let mut best = (0.0, f64::INFINITY);
    for k in 0..N {
        let t = TAU * k as f64 / N as f64;
        let z = Complex::from_polar(r, t);
        if id.d1(z).norm() < 1e-14 {
            return Err(TargetError::NotApplicable(format!("ψ' vanishes at {z} for {id}")));
        }
        let v = f(t);
        if v < best.1 {
            best = (t, v);
        }
    }
    let h = TAU / N as f64;
    let (_, refined) = golden_section_min(f, best.0 - h, best.0 + h, 1e-12);
    Ok(best.1.min(refined))
}

/// Largest `r ≤ 1` with `Re(1 + zψ''/ψ') ≥ 0` on `|z| = r`.
pub fn convexity_radius(id: TargetId) -> Result<f64, TargetError> {
    id.validate()?;
    let top = 1.0 - 1e-9;
    let step = 0.005;
    let mut prev = 0.0;
    let mut r: f64 = step;
    loop {
        let r_eval = r.min(top);
        if convexity_margin(id, r_eval)? < 0.0 {
            let g = |x: f64| convexity_margin(id, x).unwrap_or(f64::NEG_INFINITY);
            let br = Bracket::new(prev, r_eval).expect("scan bracket is ordered");
            return find_root(g, br, ROOT_TOL).map_err(|e| TargetError::NotApplicable(e.to_string()));
        }
        if r_eval >= top {
            return Ok(1.0);
        }
        prev = r_eval;
        r += step;
    }
}
