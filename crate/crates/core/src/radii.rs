//! Radius problems: special-function starlikeness radii, class-to-class radii,
//! convolution radii and the majorization radius.
//!
//! Each solved radius carries an oracle: the minimum containment margin of the
//! relevant image just below and just above the radius, measured against the
//! target region rather than the disk bound used to derive it.

use std::f64::consts::{E, PI};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numerics::{find_root, find_root_newton, find_root_report, Bracket, Complex, NumericsError, ROOT_TOL};
use crate::specfun::{
    positive_zeros, quotient_unchecked, radial_quotient, radius_equation, Family, Normalization, SpecfunError,
    SpecialFunctionDesc,
};
use crate::targets::{convexity_radius, curve_min_margin, inradius_at_one, TargetError, TargetId};

/// Lower end of every radius bracket.
pub const BRACKET_FLOOR: f64 = 1e-8;
/// Relative offset of the oracle circles from the radius.
pub const ORACLE_OFFSET: f64 = 1e-3;
/// Circle samples for the special-function oracle.
pub const SPECIAL_SAMPLES: usize = 1024;
/// Circle samples for disk containment checks.
pub const DISK_SAMPLES: usize = 720;
/// Step of the scans that locate the first sign change.
const SCAN_STEP: f64 = 0.005;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RadiiError {
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
    #[error(transparent)]
    Target(#[from] TargetError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error("unsupported target {0}")]
    UnsupportedTarget(TargetId),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no root: {0}")]
    NoRoot(String),
}

/// A solved radius with its root-finding trace and containment oracle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusResult {
    pub problem: String,
    pub target: TargetId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub desc: Option<SpecialFunctionDesc>,
    pub radius: f64,
    pub residual: f64,
    pub bracket: Bracket,
    pub iterations: usize,
    pub oracle_margin_below: f64,
    pub oracle_margin_above: f64,
    /// Margin non-negative below and negative above.
    pub sharp: bool,
    /// The radius hit a cap (1, or the convexity radius) instead of a root.
    pub capped: bool,
}

impl RadiusResult {
    fn with_margins(mut self, below: f64, above: f64) -> Self {
        self.oracle_margin_below = below;
        self.oracle_margin_above = above;
        self.sharp = below >= 0.0 && above < 0.0;
        self
    }
}

/// Threshold the real quotient crosses at the radius.
fn quotient_threshold(desc: &SpecialFunctionDesc, r1: f64) -> f64 {
    match (desc.family, desc.normalization) {
        (Family::LommelHalf { u }, Normalization::F) if u < -0.5 => 1.0 + r1,
        _ => 1.0 - r1,
    }
}

/// Minimum margin of the quotient image of `|z| = rho` inside the target.
pub fn special_oracle_margin(desc: &SpecialFunctionDesc, target: TargetId, rho: f64, samples: usize) -> f64 {
    let region = target.region();
    curve_min_margin(&region, samples, |t| quotient_unchecked(desc, Complex::from_polar(rho, t))).0
}

/// Radius of `S*(ψ)` for a normalized special function: the smallest root of
/// the radius equation with `r₁ = inradius_at_one(target)`.
pub fn special_radius(desc: &SpecialFunctionDesc, target: TargetId) -> Result<RadiusResult, RadiiError> {
    desc.validate()?;
    let r1 = inradius_at_one(target)?;
    let table = positive_zeros(desc, 1).map_err(|e| match e {
        SpecfunError::ScanExhausted { .. } => RadiiError::NoRoot(format!("{desc} has no positive zero")),
        e => e.into(),
    })?;
    let limit = table.domain_limit();
    let threshold = quotient_threshold(desc, r1);
    let g = |r: f64| radial_quotient(desc, r) - threshold;
    let bracket = first_drop(g, limit).ok_or_else(|| RadiiError::NoRoot(format!("{desc}: quotient stays above threshold")))?;
    let report = find_root_report(g, bracket, ROOT_TOL)?;
    let radius = report.root;
    let residual = radius_equation(desc, radius, r1);
    let below = special_oracle_margin(desc, target, radius * (1.0 - ORACLE_OFFSET), SPECIAL_SAMPLES);
    let above = special_oracle_margin(desc, target, radius * (1.0 + ORACLE_OFFSET), SPECIAL_SAMPLES);
    Ok(RadiusResult {
        problem: "special".into(),
        target,
        desc: Some(*desc),
        radius,
        residual,
        bracket: report.bracket,
        iterations: report.iterations,
        oracle_margin_below: 0.0,
        oracle_margin_above: 0.0,
        sharp: false,
        capped: false,
    }
    .with_margins(below, above))
}

/// Bracket around the first point where `g` turns non-positive on
/// `(0, limit)`, scanning uniformly and then geometrically toward `limit`.
/// Non-finite values end the scan: near a double zero the quotient is lost
/// to cancellation before it reaches the pole.
fn first_drop<F: Fn(f64) -> f64>(g: F, limit: f64) -> Option<Bracket> {
    const UNIFORM: usize = 400;
    let uniform = (1..UNIFORM).map(|k| limit * k as f64 / UNIFORM as f64);
    let approach = (3..=10).map(|j| limit * (1.0 - 10f64.powi(-j)));
    let mut prev = BRACKET_FLOOR;
    for x in uniform.chain(approach) {
        let v = g(x);
        if !v.is_finite() {
            return None;
        }
        if v <= 0.0 {
            return Bracket::new(prev, x).ok();
        }
        prev = x;
    }
    None
}

/// `c = exp(2πi(1-α)/(β-α))` of the strip function.
fn strip_c(alpha: f64, beta: f64) -> Complex {
    Complex::from_polar(1.0, 2.0 * PI * (1.0 - alpha) / (beta - alpha))
}

/// Left side of the `S(α, β)` radius equation.
pub fn s_alpha_beta_bound(alpha: f64, beta: f64, r: f64) -> f64 {
    let c = strip_c(alpha, beta);
    let m = (1.0 + c).norm();
    (beta - alpha) / PI * (((1.0 + m * r + r * r) / (1.0 - r * r)).ln() + 2.0 * (r / (1.0 - r)).atan())
}

/// `(α, β)` for which `S(α, β)` is the class `V(δ)`, `π/2 ≤ δ < π`.
pub fn v_delta_params(delta: f64) -> Result<(f64, f64), RadiiError> {
    if !(PI / 2.0..PI).contains(&delta) {
        return Err(RadiiError::InvalidParameter(format!("delta must lie in [pi/2, pi), got {delta}")));
    }
    let s = 2.0 * delta.sin();
    Ok((1.0 + (delta - PI) / s, 1.0 + delta / s))
}

/// Radius of `S*(ψ)` for the class `S(α, β)`.
pub fn s_alpha_beta_radius(alpha: f64, beta: f64, target: TargetId) -> Result<RadiusResult, RadiiError> {
    let strip = TargetId::KurokiOwa { alpha, beta };
    strip.validate()?;
    let r1 = inradius_at_one(target)?;
    let g = |r: f64| s_alpha_beta_bound(alpha, beta, r) - r1;
    let hi = 1.0 - 1e-12;
    let mut result = RadiusResult {
        problem: "s_alpha_beta".into(),
        target,
        desc: None,
        radius: 1.0,
        residual: 0.0,
        bracket: Bracket::new(BRACKET_FLOOR, hi)?,
        iterations: 0,
        oracle_margin_below: 0.0,
        oracle_margin_above: 0.0,
        sharp: false,
        capped: false,
    };
    if g(hi) < 0.0 {
        result.capped = true;
        let below = strip_oracle(strip, target, 1.0 - ORACLE_OFFSET);
        return Ok(result.with_margins(below, f64::NAN));
    }
    let report = find_root_report(g, result.bracket, ROOT_TOL)?;
    result.radius = report.root;
    result.residual = g(report.root);
    result.bracket = report.bracket;
    result.iterations = report.iterations;
    let below = strip_oracle(strip, target, report.root * (1.0 - ORACLE_OFFSET));
    let above = strip_oracle(strip, target, (report.root * (1.0 + ORACLE_OFFSET)).min(1.0 - 1e-12));
    Ok(result.with_margins(below, above))
}

fn strip_oracle(strip: TargetId, target: TargetId, rho: f64) -> f64 {
    curve_min_margin(&target.region(), SPECIAL_SAMPLES, |t| strip.eval(Complex::from_polar(rho, t))).0
}

/// Parameter `λ ∈ [-π/2, π/2]` of the tilted Carathéodory class.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TiltedParams {
    pub lambda: f64,
}

impl TiltedParams {
    pub fn new(lambda: f64) -> Result<Self, RadiiError> {
        if !(lambda.abs() <= PI / 2.0) {
            return Err(RadiiError::InvalidParameter(format!("lambda must lie in [-pi/2, pi/2], got {lambda}")));
        }
        Ok(Self { lambda })
    }
}

/// Bound `M(λ, r)` on `|zp'/p|` over the tilted class.
pub fn tilted_bound(lambda: f64, r: f64) -> f64 {
    let t = (lambda / 2.0).tan().abs();
    if r < t {
        2.0 * r * lambda.cos() / (r * r - 2.0 * r * lambda.sin().abs() + 1.0)
    } else {
        2.0 * r / (1.0 - r * r)
    }
}

/// Radius where `2M(λ, r) = r₁` for products `f g / z` of two members of the
/// tilted class. On the branch `r < |tan(λ/2)|` the smaller root of
/// `r² - 2(|sin λ| + 2cos λ/r₁) r + 1 = 0` is taken.
pub fn tilted_product_radius(params: TiltedParams, target: TargetId) -> Result<f64, RadiiError> {
    let r1 = inradius_at_one(target)?;
    Ok(tilted_radius_for_inradius(params.lambda, r1))
}

pub fn tilted_radius_for_inradius(lambda: f64, r1: f64) -> f64 {
    if lambda.cos() < 1e-12 {
        return 1.0;
    }
    let t = (lambda / 2.0).tan().abs();
    let k = lambda.sin().abs() + 2.0 * lambda.cos() / r1;
    if k >= 1.0 {
        let small = k - (k * k - 1.0).sqrt();
        if small < t {
            return small.min(1.0);
        }
    }
    let outer = ((4.0 + r1 * r1).sqrt() - 2.0) / r1;
    outer.max(t).min(1.0)
}

/// `k(r) = (1 - r²)(1 - r e^r) - r`.
pub fn majorization_function(r: f64) -> f64 {
    (1.0 - r * r) * (1.0 - r * r.exp()) - r
}

/// Radius where `|f'| ≤ |g'|` for `f` majorized by `g ∈ S*_℘`.
pub fn majorization_radius(target: TargetId) -> Result<RadiusResult, RadiiError> {
    if target != TargetId::Cardioid {
        return Err(RadiiError::UnsupportedTarget(target));
    }
    let bracket = Bracket::new(0.0, 1.0)?;
    let dk = |r: f64| -2.0 * r * (1.0 - r * r.exp()) - (1.0 - r * r) * (1.0 + r) * r.exp() - 1.0;
    let report = find_root_newton(majorization_function, dk, bracket, ROOT_TOL)?;
    let r = report.root;
    Ok(RadiusResult {
        problem: "majorization".into(),
        target,
        desc: None,
        radius: r,
        residual: majorization_function(r),
        bracket: report.bracket,
        iterations: report.iterations,
        oracle_margin_below: 0.0,
        oracle_margin_above: 0.0,
        sharp: false,
        capped: false,
    }
    .with_margins(
        majorization_function(r * (1.0 - ORACLE_OFFSET)),
        majorization_function(r * (1.0 + ORACLE_OFFSET)),
    ))
}

/// Radius for `f * g`, `g` convex: `min(convexity radius of ψ, 1)`.
pub fn convolution_convex_radius(target: TargetId) -> Result<f64, RadiiError> {
    Ok(convexity_radius(target)?.min(1.0))
}

/// Convolution operators `f ↦ f * g_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Operator {
    /// `z f'(z)`, kernel `z/(1-z)²`.
    Alexander,
    /// `(f + z f')/2`, kernel `(z - z²/2)/(1-z)²`.
    Livingston,
    /// `((k+1)/z^k) ∫_0^z t^{k-1} f(t) dt`, convex kernel.
    Bernardi,
}

impl Operator {
    pub const ALL: [Operator; 3] = [Operator::Alexander, Operator::Livingston, Operator::Bernardi];

    /// Convexity radius of the kernel.
    pub fn kernel_radius(self) -> f64 {
        match self {
            Operator::Alexander => 2.0 - 3f64.sqrt(),
            Operator::Livingston => 0.5,
            Operator::Bernardi => 1.0,
        }
    }
}

impl std::str::FromStr for Operator {
    type Err = RadiiError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "alexander" => Ok(Operator::Alexander),
            "livingston" => Ok(Operator::Livingston),
            "bernardi" => Ok(Operator::Bernardi),
            _ => Err(RadiiError::InvalidParameter(format!("unknown operator '{s}'"))),
        }
    }
}

/// Radius for `F_i(f) ∈ S*(ψ)` when `f ∈ S*(ψ)`.
pub fn operator_radius(op: Operator, target: TargetId) -> Result<f64, RadiiError> {
    Ok(op.kernel_radius().min(convolution_convex_radius(target)?))
}

/// Disk `|w - (1+ρ²)/(1-ρ²)| ≤ 4ρ/(1-ρ²)` that contains `zH'/H` on `|z| = ρ`
/// for `H = z(1+z)/(1-z)³`.
pub fn convolution_disk(rho: f64) -> (f64, f64) {
    let d = 1.0 - rho * rho;
    ((1.0 + rho * rho) / d, 4.0 * rho / d)
}

fn disk_margin(region: &crate::targets::Region, rho: f64) -> f64 {
    let (c, r) = convolution_disk(rho);
    curve_min_margin(region, DISK_SAMPLES, |t| Complex::new(c, 0.0) + Complex::from_polar(r, t)).0
}

/// Largest `ρ` with `f * g (ρz)/ρ ∈ S*(ψ)` for starlike `f, g`: the first `ρ`
/// at which the convolution disk leaves `ψ(𝔻)`, capped at the convexity
/// radius of `ψ`.
pub fn starlike_convolution_radius(target: TargetId) -> Result<RadiusResult, RadiiError> {
    let region = target.region();
    let cap = convexity_radius(target)?.min(1.0);
    let g = |rho: f64| {
        let (c, r) = convolution_disk(rho);
        region.signed_distance(Complex::new(c, 0.0)) - r
    };
    let mut lo = 0.0;
    let mut found = None;
    let mut rho = SCAN_STEP;
    while lo < cap {
        let hi = rho.min(cap);
        if g(hi) < 0.0 {
            found = Some(Bracket::new(lo, hi)?);
            break;
        }
        lo = hi;
        rho += SCAN_STEP;
    }
    let mut result = RadiusResult {
        problem: "starlike_convolution".into(),
        target,
        desc: None,
        radius: cap,
        residual: 0.0,
        bracket: Bracket::new(0.0, cap)?,
        iterations: 0,
        oracle_margin_below: 0.0,
        oracle_margin_above: 0.0,
        sharp: false,
        capped: true,
    };
    if let Some(bracket) = found {
        let report = find_root_report(g, bracket, ROOT_TOL)?;
        result.radius = report.root;
        result.residual = g(report.root);
        result.bracket = report.bracket;
        result.iterations = report.iterations;
        result.capped = false;
    }
    let r = result.radius;
    let below = disk_margin(&region, r * (1.0 - ORACLE_OFFSET));
    let above = disk_margin(&region, (r * (1.0 + ORACLE_OFFSET)).min(1.0 - 1e-9));
    Ok(result.with_margins(below, above))
}

/// Closed forms printed for the starlike convolution radius.
pub fn printed_convolution_radius(target: TargetId) -> Option<f64> {
    let s = 1f64.sin();
    match target {
        TargetId::Cardioid => Some((2.0 * E - (4.0 * E * E - 2.0 * E + 1.0).sqrt()) / (2.0 * E - 1.0)),
        TargetId::CardioidC => Some((3.0 - 7f64.sqrt()) / 2.0),
        TargetId::Sine => Some(((s * s + 2.0 * s + 4.0).sqrt() - 2.0) / (2.0 + s)),
        TargetId::Bell => Some((2.0 * E - (3.0 * E * E + E.powf(2.0 / E)).sqrt()) / (E + E.powf(1.0 / E))),
        TargetId::Sigmoid => Some(((7.0 * E * E + 6.0 * E + 3.0).sqrt() - 2.0 * (1.0 + E)) / (3.0 * E + 1.0)),
        TargetId::Janowski { a, b } if b > -1.0 => janowski_convolution_radius(a, b).ok(),
        _ => None,
    }
}

/// Janowski convolution radius: the smallest positive root of
/// `(A-B)r² + 4(1-B²)r - (A-B) = 0`, bounded by `√((A-B)/(2+A+B))`.
pub fn janowski_convolution_radius(a: f64, b: f64) -> Result<f64, RadiiError> {
    if !(-1.0 < b && b < a && a <= 1.0) {
        return Err(RadiiError::InvalidParameter(format!("requires -1 < B < A <= 1, got A={a}, B={b}")));
    }
    let d = a - b;
    let q = 1.0 - b * b;
    let root = (-2.0 * q + (4.0 * q * q + d * d).sqrt()) / d;
    let other = (d / (2.0 + a + b)).sqrt();
    if root > other {
        log::warn!("janowski convolution: quadratic root {root} exceeds {other}");
    }
    Ok(root.min(other))
}

/// Bisection for the first sign change of `f` on a uniform scan of
/// `(0, hi]`; `None` if there is none.
pub fn first_crossing<F: Fn(f64) -> f64>(f: F, hi: f64, step: f64) -> Result<Option<f64>, RadiiError> {
    let mut lo = BRACKET_FLOOR;
    let f_lo = f(lo);
    let mut x = step;
    while lo < hi {
        let b = x.min(hi);
        if f(b).signum() != f_lo.signum() {
            return Ok(Some(find_root(&f, Bracket::new(lo, b)?, ROOT_TOL)?));
        }
        lo = b;
        x += step;
    }
    Ok(None)
}
