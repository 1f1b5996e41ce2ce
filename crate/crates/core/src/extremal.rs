//! Extremal functions `z exp F(ζz)` of `S*(ψ)` and the bound
//! `|Φ(log f(z)/z)| ≤ max_θ |Φ(F(|z| e^{iθ}))|` over class members.
//!
//! Class members are generated from Schwarz functions that are Blaschke
//! products of degree at most three, drawn from a seeded generator.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numerics::{gauss_legendre, golden_section_min, Complex, PowerSeries};
use crate::targets::{TargetError, TargetId};

/// Gauss-Legendre nodes per panel of the ray quadrature.
const PANEL_NODES: usize = 16;
/// Panels of the primary rule (64 nodes) and of the check rule (128 nodes).
const PANELS: usize = 4;
const CHECK_PANELS: usize = 8;
/// Relative agreement required between the two rules.
pub const QUADRATURE_TOL: f64 = 1e-10;
/// Slack allowed above the bound.
pub const BOUND_SLACK: f64 = 1e-9;
/// Samples of the bound maximization.
const BOUND_SAMPLES: usize = 4096;
/// Largest modulus of a Blaschke zero.
const MAX_ZERO: f64 = 0.95;
/// Default seed of the trial generator.
pub const DEFAULT_SEED: u64 = 20_240_101;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExtremalError {
    #[error("|zeta| must be 1, got {0}")]
    NotUnimodular(f64),
    #[error("|z| must be below 1, got {0}")]
    OutsideDisk(f64),
    #[error("z0 must satisfy 0 < |z0| < 1, got {0}")]
    InvalidPoint(f64),
    #[error("functional is constant")]
    ConstantFunctional,
    #[error("quadrature rules disagree by {0}")]
    QuadratureFailure(f64),
    #[error(transparent)]
    Target(#[from] TargetError),
}

/// `Φ(w) = c_0 + c_n w^n + ...`, non-constant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntireFunctional {
    pub phi_coefficients: PowerSeries,
}

impl EntireFunctional {
    pub fn new(phi_coefficients: PowerSeries) -> Result<Self, ExtremalError> {
        let f = Self { phi_coefficients };
        f.validate()?;
        Ok(f)
    }

    /// `Φ(w) = w`.
    pub fn identity() -> Self {
        Self { phi_coefficients: PowerSeries::from_real(&[0.0, 1.0]) }
    }

    pub fn validate(&self) -> Result<(), ExtremalError> {
        let n = self.phi_coefficients.truncation_order();
        if (1..=n).all(|k| self.phi_coefficients.coeff(k).norm() == 0.0) {
            return Err(ExtremalError::ConstantFunctional);
        }
        Ok(())
    }

    pub fn eval(&self, w: Complex) -> Complex {
        self.phi_coefficients.eval_truncated(w)
    }
}

/// `z exp F(ζz)`, `F(z) = ∫_0^z (ψ(t) - 1)/t dt`.
pub fn extremal_function(psi: TargetId, zeta: Complex, z: Complex) -> Result<Complex, ExtremalError> {
    psi.validate()?;
    if (zeta.norm() - 1.0).abs() > 1e-12 {
        return Err(ExtremalError::NotUnimodular(zeta.norm()));
    }
    if z.norm() >= 1.0 {
        return Err(ExtremalError::OutsideDisk(z.norm()));
    }
    Ok(z * psi.log_integral(zeta * z).exp())
}

/// Finite Blaschke product `w(t) = u t Π (t - a_j)/(1 - ā_j t)`, a Schwarz
/// function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Blaschke {
    pub rotation: Complex,
    pub zeros: Vec<Complex>,
}

impl Blaschke {
    /// `w(t) = ζ t`.
    pub fn rotation(zeta: Complex) -> Self {
        Self { rotation: zeta, zeros: Vec::new() }
    }

    /// Degree `1..=3` with uniform rotation and zeros of modulus below 0.95.
    pub fn random<R: Rng>(rng: &mut R) -> Self {
        let degree = rng.random_range(1..=3usize);
        let rotation = Complex::from_polar(1.0, rng.random_range(0.0..TAU));
        let zeros = (1..degree)
            .map(|_| Complex::from_polar(MAX_ZERO * rng.random::<f64>().sqrt(), rng.random_range(0.0..TAU)))
            .collect();
        Self { rotation, zeros }
    }

    pub fn degree(&self) -> usize {
        self.zeros.len() + 1
    }

    pub fn eval(&self, t: Complex) -> Complex {
        self.zeros
            .iter()
            .fold(self.rotation * t, |acc, a| acc * (t - a) / (1.0 - a.conj() * t))
    }
}

fn ray_integral(psi: TargetId, w: &dyn Fn(Complex) -> Complex, z: Complex, panels: usize) -> Complex {
    let (x, wt) = gauss_legendre(PANEL_NODES);
    let mut total = Complex::default();
    for p in 0..panels {
        let (a, b) = (p as f64 / panels as f64, (p + 1) as f64 / panels as f64);
        let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
        for (xi, wi) in x.iter().zip(&wt) {
            let s = mid + half * xi;
            total += (psi.eval(w(z * s)) - 1.0) / s * (wi * half);
        }
    }
    total
}

/// `log(f_w(z)/z) = ∫_0^1 (ψ(w(sz)) - 1)/s ds`, checked against a rule with
/// twice the nodes.
pub fn member_log(psi: TargetId, w: &dyn Fn(Complex) -> Complex, z: Complex) -> Result<Complex, ExtremalError> {
    let coarse = ray_integral(psi, w, z, PANELS);
    let fine = ray_integral(psi, w, z, CHECK_PANELS);
    let diff = (coarse - fine).norm();
    if !(diff <= QUADRATURE_TOL * fine.norm().max(1.0)) {
        return Err(ExtremalError::QuadratureFailure(diff));
    }
    Ok(fine)
}

/// `max_θ |Φ(F(r e^{iθ}))|` and the maximizing θ.
pub fn functional_bound(psi: TargetId, phi: &EntireFunctional, r: f64) -> (f64, f64) {
    let g = |t: f64| -phi.eval(psi.log_integral(Complex::from_polar(r, t))).norm();
    let mut best = (f64::INFINITY, 0.0);
    for k in 0..BOUND_SAMPLES {
        let t = TAU * k as f64 / BOUND_SAMPLES as f64;
        let v = g(t);
        if v < best.0 {
            best = (v, t);
        }
    }
    let h = TAU / BOUND_SAMPLES as f64;
    let (t, v) = golden_section_min(g, best.1 - h, best.1 + h, 1e-12);
    if v < best.0 {
        best = (v, t);
    }
    (-best.0, best.1.rem_euclid(TAU))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionalReport {
    pub psi: TargetId,
    pub phi: Vec<Complex>,
    pub z0: Complex,
    pub bound: f64,
    /// Rotation `θ` of `z0` where the extremal function attains the bound.
    pub max_attained_at_theta: f64,
    /// `|Φ(log f_w(z0)/z0)|` for `w(t) = e^{i(θ - arg z0)} t`.
    pub extremal_value: f64,
    pub worst_trial_value: f64,
    pub trials: usize,
    pub violations: usize,
    pub seed: u64,
}

/// Samples `trials` members `f_w` and compares `|Φ(log f_w(z0)/z0)|` with
/// the extremal bound.
pub fn functional_bound_check(
    psi: TargetId,
    phi: &EntireFunctional,
    z0: Complex,
    trials: usize,
    seed: u64,
) -> Result<FunctionalReport, ExtremalError> {
    psi.validate()?;
    phi.validate()?;
    let r = z0.norm();
    if !(r > 0.0 && r < 1.0) {
        return Err(ExtremalError::InvalidPoint(r));
    }
    let (bound, theta) = functional_bound(psi, phi, r);
    let zeta = Complex::from_polar(1.0, theta - z0.arg());
    let ext = Blaschke::rotation(zeta);
    let extremal_value = phi.eval(member_log(psi, &|t| ext.eval(t), z0)?).norm();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut violations = 0;
    for _ in 0..trials {
        let w = Blaschke::random(&mut rng);
        let v = phi.eval(member_log(psi, &|t| w.eval(t), z0)?).norm();
        if v > bound + BOUND_SLACK {
            violations += 1;
        }
        worst = worst.max(v);
    }
    Ok(FunctionalReport {
        psi,
        phi: (0..=phi.phi_coefficients.truncation_order()).map(|k| phi.phi_coefficients.coeff(k)).collect(),
        z0,
        bound,
        max_attained_at_theta: theta,
        extremal_value,
        worst_trial_value: worst,
        trials,
        violations,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::targets::SampledDomain;

    #[test]
    fn cardioid_extremal_closed_form() {
        let z = Complex::new(0.3, -0.2);
        let f = extremal_function(TargetId::Cardioid, Complex::new(1.0, 0.0), z).unwrap();
        assert!((f - z * (z.exp() - 1.0).exp()).norm() < 1e-14);
    }

    #[test]
    fn order_alpha_extremal_closed_form() {
        let alpha = 0.3;
        let psi = TargetId::Janowski { a: 1.0 - 2.0 * alpha, b: -1.0 };
        let z = Complex::new(-0.4, 0.5);
        let zeta = Complex::from_polar(1.0, 0.7);
        let f = extremal_function(psi, zeta, z).unwrap();
        let expect = z / (1.0 - zeta * z).powf(2.0 - 2.0 * alpha);
        assert!((f - expect).norm() < 1e-13);
    }

    #[test]
    fn normalization_at_zero() {
        for psi in TargetId::catalog() {
            let h = 1e-6;
            let f = |z: Complex| extremal_function(psi, Complex::new(1.0, 0.0), z).unwrap();
            assert_eq!(f(Complex::default()), Complex::default());
            let d = (f(Complex::new(h, 0.0)) - f(Complex::new(-h, 0.0))) / (2.0 * h);
            assert!((d - 1.0).norm() < 1e-9, "{psi}");
        }
    }

    #[test]
    fn rotation_covariance() {
        let zeta = Complex::from_polar(1.0, 2.1);
        let z = Complex::new(0.35, 0.25);
        for psi in TargetId::catalog() {
            let lhs = extremal_function(psi, zeta, z).unwrap();
            let rhs = extremal_function(psi, Complex::new(1.0, 0.0), zeta * z).unwrap() * (z / (zeta * z));
            assert!((lhs - rhs).norm() < 1e-12, "{psi}");
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        let one = Complex::new(1.0, 0.0);
        assert!(extremal_function(TargetId::Cardioid, Complex::new(0.5, 0.0), one * 0.2).is_err());
        assert!(extremal_function(TargetId::Cardioid, one, one).is_err());
        assert!(EntireFunctional::new(PowerSeries::from_real(&[3.0])).is_err());
        let phi = EntireFunctional::identity();
        assert!(functional_bound_check(TargetId::Cardioid, &phi, Complex::default(), 1, 1).is_err());
    }

    #[test]
    fn ray_quadrature_matches_closed_form() {
        let z = Complex::new(0.5, 0.3);
        let v = member_log(TargetId::Cardioid, &|t| t, z).unwrap();
        assert!((v - (z.exp() - 1.0)).norm() < 1e-13);
    }

    #[test]
    fn cardioid_identity_bound() {
        let phi = EntireFunctional::identity();
        let z0 = Complex::new(0.5, 0.0);
        let rep = functional_bound_check(TargetId::Cardioid, &phi, z0, 50, DEFAULT_SEED).unwrap();
        assert!((rep.bound - (0.5f64.exp() - 1.0)).abs() < 1e-12);
        assert!(rep.max_attained_at_theta.min(TAU - rep.max_attained_at_theta) < 1e-6);
        assert!((rep.extremal_value - rep.bound).abs() < 1e-9);
        assert_eq!(rep.violations, 0);
    }

    #[test]
    fn squared_schwarz_function_is_strict() {
        let phi = EntireFunctional::identity();
        let z0 = Complex::new(0.5, 0.0);
        let v = phi.eval(member_log(TargetId::Cardioid, &|t| t * t, z0).unwrap()).norm();
        assert!(v < 0.5f64.exp() - 1.0 - 1e-3);
    }

    #[test]
    fn nonlinear_functional() {
        let phi = EntireFunctional::new(PowerSeries::from_real(&[1.0, 0.0, 2.0, -0.5])).unwrap();
        let rep = functional_bound_check(TargetId::Sine, &phi, Complex::from_polar(0.7, 1.0), 100, 9).unwrap();
        assert_eq!(rep.violations, 0);
        assert!(rep.worst_trial_value <= rep.bound + BOUND_SLACK);
        assert!((rep.extremal_value - rep.bound).abs() < 1e-8);
    }

    #[test]
    fn member_logs_lie_in_extremal_image() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let psi = TargetId::Cardioid;
        for r in [0.3, 0.6, 0.9] {
            let domain = SampledDomain::new(move |t| psi.log_integral(Complex::from_polar(r, t)), 2048);
            for _ in 0..4 {
                let w = Blaschke::random(&mut rng);
                for k in 0..2048 {
                    let z = Complex::from_polar(r, TAU * k as f64 / 2048.0);
                    let v = member_log(psi, &|t| w.eval(t), z).unwrap();
                    assert!(domain.margin(v).signed > -1e-9, "r={r} w={w:?}");
                }
            }
        }
    }
}
