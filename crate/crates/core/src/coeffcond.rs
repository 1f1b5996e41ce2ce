//! Coefficient conditions sufficient for membership in `S*(ψ)`, built on the
//! maximal disk `|w - a| < R_a` inside `ψ(𝔻)`.
//!
//! Series inputs are truncated by the caller; the tail beyond the last
//! coefficient is taken to be zero.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numerics::Complex;
use crate::targets::{center_range, maximal_disk, DiskSpec, Region, TargetError, TargetId};

/// Points of the center grid used by the search mode.
pub const CENTER_GRID: usize = 1000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoeffError {
    #[error(transparent)]
    Target(#[from] TargetError),
    #[error("sum of |a_k| is {0}; f must be analytic and nonvanishing on the disk")]
    SeriesTooLarge(f64),
    #[error("disk at a = {a} (radius {radius}) does not contain 1")]
    CenterExcludesOne { a: f64, radius: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Coefficients `a_1, a_2, ...` of `f(z) = z / (1 + Σ a_k z^k)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReciprocalSeries {
    pub a: Vec<Complex>,
}

impl ReciprocalSeries {
    pub fn new(a: Vec<Complex>) -> Result<Self, CoeffError> {
        let s = Self { a };
        s.validate()?;
        Ok(s)
    }

    pub fn from_real(a: &[f64]) -> Result<Self, CoeffError> {
        Self::new(a.iter().map(|&x| Complex::new(x, 0.0)).collect())
    }

    pub fn validate(&self) -> Result<(), CoeffError> {
        let total: f64 = self.a.iter().map(|c| c.norm()).sum();
        if !(total < 1.0) {
            return Err(CoeffError::SeriesTooLarge(total));
        }
        Ok(())
    }

    /// `(f(z), f'(z))`.
    pub fn eval(&self, z: Complex) -> (Complex, Complex) {
        let mut d = Complex::new(1.0, 0.0);
        let mut dd = Complex::default();
        let mut zk = Complex::new(1.0, 0.0);
        for (i, ak) in self.a.iter().enumerate() {
            let k = (i + 1) as f64;
            dd += ak * k * zk;
            zk *= z;
            d += ak * zk;
        }
        (z / d, (d - z * dd) / (d * d))
    }

    /// `zf'(z)/f(z) = 1 - zD'(z)/D(z)` with `D = 1 + Σ a_k z^k`.
    pub fn log_derivative(&self, z: Complex) -> Complex {
        let mut d = Complex::new(1.0, 0.0);
        let mut zd = Complex::default();
        let mut zk = Complex::new(1.0, 0.0);
        for (i, ak) in self.a.iter().enumerate() {
            zk *= z;
            d += ak * zk;
            zd += ak * zk * (i + 1) as f64;
        }
        1.0 - zd / d
    }
}

/// Disk spec whose disk contains 1.
fn disk_around_one(target: TargetId, a: f64) -> Result<DiskSpec, CoeffError> {
    let disk = maximal_disk(target, a)?;
    if disk.radius <= (1.0 - a).abs() {
        return Err(CoeffError::CenterExcludesOne { a, radius: disk.radius });
    }
    Ok(disk)
}

/// Left and right sides of `|1-a| + Σ (R_a + |1-a-k|)|a_k| ≤ R_a`.
pub fn reciprocal_series_sides(s: &ReciprocalSeries, disk: DiskSpec) -> (f64, f64) {
    let a = disk.center;
    let lhs = (1.0 - a).abs()
        + s.a
            .iter()
            .enumerate()
            .map(|(i, ak)| (disk.radius + (1.0 - a - (i + 1) as f64).abs()) * ak.norm())
            .sum::<f64>();
    (lhs, disk.radius)
}

/// Whether the coefficient inequality certifies `f ∈ S*(ψ)`. `false` means
/// the sufficient condition is inconclusive.
pub fn reciprocal_series_member(s: &ReciprocalSeries, target: TargetId, a: f64) -> Result<bool, CoeffError> {
    s.validate()?;
    let disk = maximal_disk(target, a)?;
    let (lhs, rhs) = reciprocal_series_sides(s, disk);
    Ok(lhs <= rhs)
}

/// `((R_a - |1-a|) / (R_a + |1-a-kn|))^(1/k)`, the radius certified for
/// `f(z) = z/(1 + z^k)^n`.
pub fn power_reciprocal_radius(n: u32, k: u32, target: TargetId, a: f64) -> Result<f64, CoeffError> {
    if n == 0 || k == 0 {
        return Err(CoeffError::InvalidParameter("n and k must be at least 1".into()));
    }
    let disk = disk_around_one(target, a)?;
    Ok(power_reciprocal_formula(n, k, disk))
}

fn power_reciprocal_formula(n: u32, k: u32, disk: DiskSpec) -> f64 {
    let gap = disk.radius - (1.0 - disk.center).abs();
    let kn = (k * n) as f64;
    (gap / (disk.radius + (1.0 - disk.center - kn).abs())).powf(1.0 / k as f64)
}

/// `R(R_a - |1-a|) / (|β| + R_a - |1-a|)`, capped at 1.
pub fn polynomial_power_radius(r: f64, beta: Complex, target: TargetId, a: f64) -> Result<f64, CoeffError> {
    if !(r > 0.0) {
        return Err(CoeffError::InvalidParameter(format!("R must be positive, got {r}")));
    }
    let disk = disk_around_one(target, a)?;
    Ok(polynomial_power_formula(r, beta, disk))
}

fn polynomial_power_formula(r: f64, beta: Complex, disk: DiskSpec) -> f64 {
    let gap = disk.radius - (1.0 - disk.center).abs();
    (r * gap / (beta.norm() + gap)).min(1.0)
}

/// Best center on a uniform grid of the open center range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CenterSearch {
    pub a: f64,
    pub radius: f64,
}

/// Disks for the center grid, skipping centers whose disk misses 1.
fn center_grid(target: TargetId) -> Result<Vec<DiskSpec>, CoeffError> {
    target.validate()?;
    let (lo, hi) = center_range(target);
    let hi = if hi.is_finite() { hi } else { lo + 10.0 };
    let region = target.region();
    let mut out = Vec::with_capacity(CENTER_GRID);
    for i in 1..=CENTER_GRID {
        let a = lo + (hi - lo) * i as f64 / (CENTER_GRID + 1) as f64;
        let radius = if target == TargetId::Cardioid {
            maximal_disk(target, a)?.radius
        } else {
            region_radius(&region, a)
        };
        if radius > (1.0 - a).abs() {
            out.push(DiskSpec { center: a, radius });
        }
    }
    Ok(out)
}

fn region_radius(region: &Region, a: f64) -> f64 {
    region.signed_distance(Complex::new(a, 0.0))
}

fn best_over_grid<F: Fn(DiskSpec) -> f64>(target: TargetId, f: F) -> Result<CenterSearch, CoeffError> {
    let mut best = CenterSearch { a: 1.0, radius: f64::NEG_INFINITY };
    for disk in center_grid(target)? {
        let r = f(disk);
        if r > best.radius {
            best = CenterSearch { a: disk.center, radius: r };
        }
    }
    Ok(best)
}

/// [`power_reciprocal_radius`] maximized over the center grid.
pub fn power_reciprocal_search(n: u32, k: u32, target: TargetId) -> Result<CenterSearch, CoeffError> {
    if n == 0 || k == 0 {
        return Err(CoeffError::InvalidParameter("n and k must be at least 1".into()));
    }
    best_over_grid(target, |d| power_reciprocal_formula(n, k, d))
}

/// [`polynomial_power_radius`] maximized over the center grid.
pub fn polynomial_power_search(r: f64, beta: Complex, target: TargetId) -> Result<CenterSearch, CoeffError> {
    if !(r > 0.0) {
        return Err(CoeffError::InvalidParameter(format!("R must be positive, got {r}")));
    }
    best_over_grid(target, |d| polynomial_power_formula(r, beta, d))
}

/// Minimum containment margin of `zf'/f` on `|z| = rho` in `ψ(𝔻)`.
pub fn log_derivative_margin(s: &ReciprocalSeries, target: TargetId, rho: f64, samples: usize) -> f64 {
    let region = target.region();
    (0..samples)
        .map(|k| {
            let z = Complex::from_polar(rho, TAU * k as f64 / samples as f64);
            region.signed_distance(s.log_derivative(z))
        })
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::E;

    #[test]
    fn reciprocal_examples() {
        let id = ReciprocalSeries::from_real(&[]).unwrap();
        assert!(reciprocal_series_member(&id, TargetId::Cardioid, 1.0).unwrap());
        let small = ReciprocalSeries::from_real(&[0.2]).unwrap();
        let (lhs, _) = reciprocal_series_sides(&small, maximal_disk(TargetId::Cardioid, 1.0).unwrap());
        assert!((lhs - 0.2 * (1.0 / E + 1.0)).abs() < 1e-15);
        assert!(reciprocal_series_member(&small, TargetId::Cardioid, 1.0).unwrap());
        let big = ReciprocalSeries::from_real(&[0.5]).unwrap();
        assert!(!reciprocal_series_member(&big, TargetId::Cardioid, 1.0).unwrap());
        assert!(ReciprocalSeries::from_real(&[0.6, 0.5]).is_err());
        assert!(matches!(
            reciprocal_series_member(&small, TargetId::Cardioid, 5.0),
            Err(CoeffError::Target(TargetError::CenterOutOfRange { .. }))
        ));
    }

    #[test]
    fn series_evaluation_is_consistent() {
        let s = ReciprocalSeries::new(vec![Complex::new(0.1, 0.05), Complex::new(-0.07, 0.0)]).unwrap();
        let z = Complex::new(0.3, -0.4);
        let (f, d) = s.eval(z);
        assert!((z * d / f - s.log_derivative(z)).norm() < 1e-14);
    }

    #[test]
    fn power_reciprocal_examples() {
        let r = power_reciprocal_radius(1, 1, TargetId::Cardioid, 1.0).unwrap();
        assert!((r - 1.0 / (1.0 + E)).abs() < 1e-15);
        let r22 = power_reciprocal_radius(2, 2, TargetId::Cardioid, 1.0).unwrap();
        assert!((r22 - ((1.0 / E) / (1.0 / E + 4.0)).sqrt()).abs() < 1e-15);
        let far = power_reciprocal_radius(1, 5000, TargetId::Cardioid, 1.0).unwrap();
        assert!(far > 0.99 && far < 1.0);
        assert!(power_reciprocal_radius(0, 1, TargetId::Cardioid, 1.0).is_err());
    }

    #[test]
    fn power_reciprocal_radius_is_sound() {
        for (n, k) in [(1, 1), (2, 1), (1, 3), (2, 2)] {
            let r = power_reciprocal_radius(n, k, TargetId::Cardioid, 1.0).unwrap();
            let region = TargetId::Cardioid.region();
            for j in 0..512 {
                let z = Complex::from_polar(r * (1.0 - 1e-9), TAU * j as f64 / 512.0);
                let w = z.powu(k);
                let q = 1.0 - (k * n) as f64 * w / (1.0 + w);
                assert!(region.signed_distance(q) > -1e-12, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn polynomial_power_examples() {
        assert_eq!(polynomial_power_radius(0.7, Complex::default(), TargetId::Cardioid, 1.0).unwrap(), 0.7);
        assert_eq!(polynomial_power_radius(3.0, Complex::default(), TargetId::Cardioid, 1.0).unwrap(), 1.0);
        let r = polynomial_power_radius(1.0, Complex::new(0.0, 1.0), TargetId::Cardioid, 1.0).unwrap();
        assert!((r - 1.0 / (E + 1.0)).abs() < 1e-15);
        assert!(polynomial_power_radius(1e-9, Complex::new(1.0, 0.0), TargetId::Cardioid, 1.0).unwrap() < 1e-9);
    }

    #[test]
    fn center_search_improves_on_one() {
        let at_one = power_reciprocal_radius(1, 1, TargetId::Cardioid, 1.0).unwrap();
        let best = power_reciprocal_search(1, 1, TargetId::Cardioid).unwrap();
        assert!(best.radius >= at_one - 1e-3);
        let p = polynomial_power_search(1.0, Complex::new(1.0, 0.0), TargetId::Sine).unwrap();
        assert!(p.radius > 0.0 && p.radius <= 1.0);
    }

    #[test]
    fn formulas_monotone_in_gap() {
        let mut prev: Option<(f64, f64, f64)> = None;
        let mut disks = center_grid(TargetId::Cardioid).unwrap();
        disks.sort_by(|x, y| (x.radius - (1.0 - x.center).abs()).total_cmp(&(y.radius - (1.0 - y.center).abs())));
        for d in disks.into_iter().filter(|d| d.center <= 1.0) {
            let gap = d.radius - (1.0 - d.center).abs();
            let p = polynomial_power_formula(1.0, Complex::new(0.5, 0.0), d);
            if let Some((g0, p0, _)) = prev {
                assert!(gap >= g0 && p >= p0 - 1e-15);
            }
            prev = Some((gap, p, 0.0));
        }
    }

    #[test]
    fn sufficient_condition_is_sound() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut accepted = 0;
        for _ in 0..200 {
            let len = rng.random_range(1..5);
            let a: Vec<Complex> = (0..len)
                .map(|_| Complex::from_polar(rng.random_range(0.0..0.15), rng.random_range(0.0..TAU)))
                .collect();
            let Ok(s) = ReciprocalSeries::new(a) else { continue };
            if reciprocal_series_member(&s, TargetId::Cardioid, 1.0).unwrap() {
                accepted += 1;
                assert!(log_derivative_margin(&s, TargetId::Cardioid, 0.999, 512) > 0.0, "{s:?}");
            }
        }
        assert!(accepted > 10);
    }
}
