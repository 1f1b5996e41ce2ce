//! Regions bounded by sampled Jordan curves, and exact regions for the
//! catalog entries whose images are disks, half-planes or strips.
//!
//! The signed margin of a point is its distance to the boundary, positive
//! inside. Distances come from refining the nearest sampled segment against
//! the true parametrization, so chord sag does not leak into the sign.

use std::f64::consts::TAU;
use std::sync::Arc;

use crate::numerics::{golden_section_min, segment_distance, segment_winding, Complex};

/// Number of uniform samples before refinement.
pub const BOUNDARY_SAMPLES: usize = 4096;
/// Segments longer than this receive a midpoint in the refinement pass.
pub const REFINE_CHORD: f64 = 1e-3;

type Curve = Arc<dyn Fn(f64) -> Complex + Send + Sync>;

/// Closed curve sampled at increasing parameters in `[0, 2π]`.
#[derive(Clone)]
pub struct SampledDomain {
    thetas: Vec<f64>,
    points: Vec<Complex>,
    curve: Curve,
}

impl std::fmt::Debug for SampledDomain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SampledDomain").field("samples", &self.points.len()).finish()
    }
}

/// Signed distance of a point to a region boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Margin {
    /// Distance to the boundary, positive inside.
    pub signed: f64,
    /// Boundary parameter of the nearest point, when the region is sampled.
    pub theta: Option<f64>,
}

impl SampledDomain {
    /// Samples `curve` at `base` uniform parameters, then inserts midpoints
    /// where a chord exceeds [`REFINE_CHORD`]. The curve must be
    /// `2π`-periodic and positively oriented.
    pub fn new<F>(curve: F, base: usize) -> Self
    where
        F: Fn(f64) -> Complex + Send + Sync + 'static,
    {
        Self::from_arc(Arc::new(curve), base)
    }

    pub(crate) fn from_arc(curve: Curve, base: usize) -> Self {
        let base = base.max(8);
        let coarse: Vec<f64> = (0..=base).map(|k| TAU * k as f64 / base as f64).collect();
        let coarse_pts: Vec<Complex> = coarse.iter().map(|&t| curve(t)).collect();
        let mut thetas = Vec::with_capacity(2 * base + 1);
        let mut points = Vec::with_capacity(2 * base + 1);
        for k in 0..base {
            thetas.push(coarse[k]);
            points.push(coarse_pts[k]);
            if (coarse_pts[k + 1] - coarse_pts[k]).norm() > REFINE_CHORD {
                let t = 0.5 * (coarse[k] + coarse[k + 1]);
                thetas.push(t);
                points.push(curve(t));
            }
        }
        thetas.push(TAU);
        points.push(coarse_pts[0]);
        Self { thetas, points, curve }
    }

    /// Closed polyline (first point repeated at the end).
    pub fn points(&self) -> &[Complex] {
        &self.points
    }

    pub fn eval(&self, theta: f64) -> Complex {
        (self.curve)(theta)
    }

    fn segments(&self) -> usize {
        self.points.len() - 1
    }

    /// Parameter interval of segment `k`, allowing indices outside
    /// `0..segments` by wrapping with a `2π` shift.
    fn seg_params(&self, k: isize) -> (f64, f64) {
        let n = self.segments() as isize;
        let wraps = k.div_euclid(n);
        let j = k.rem_euclid(n) as usize;
        let shift = TAU * wraps as f64;
        (self.thetas[j] + shift, self.thetas[j + 1] + shift)
    }

    /// Signed distance to the boundary, positive inside.
    pub fn margin(&self, w: Complex) -> Margin {
        let n = self.segments();
        let mut best = (0usize, f64::INFINITY);
        let mut winding = 0i32;
        for k in 0..n {
            let (a, b) = (self.points[k], self.points[k + 1]);
            let d = segment_distance(a, b, w);
            if d < best.1 {
                best = (k, d);
            }
            winding += segment_winding(a, b, w);
        }
        let (k, chord_dist) = best;
        let k = k as isize;

        let (lo, _) = self.seg_params(k - 1);
        let (_, hi) = self.seg_params(k + 1);
        let dist2 = |t: f64| ((self.curve)(t) - w).norm_sqr();
        let (t_star, d2) = golden_section_min(dist2, lo, hi, 1e-13 * (1.0 + hi.abs()));
        let mut dist = d2.sqrt();
        let mut theta = t_star;
        for j in (k - 1)..=(k + 2) {
            let (t, _) = self.seg_params(j);
            let d = ((self.curve)(t) - w).norm();
            if d < dist {
                dist = d;
                theta = t;
            }
        }

        // The polyline can misplace points that sit within the chord sag of
        // the curve; recount those against a locally subdivided curve.
        let window = 3isize;
        let sag = ((k - window)..=(k + window))
            .map(|j| {
                let (t0, t1) = self.seg_params(j);
                let mid = (self.curve)(0.5 * (t0 + t1));
                let (a, b) = (self.point_at(j), self.point_at(j + 1));
                (mid - 0.5 * (a + b)).norm()
            })
            .fold(0.0, f64::max);
        if chord_dist <= 2.0 * sag + 1e-14 {
            let mut local = 0i32;
            let mut refined = 0i32;
            let target = (0.25 * dist).max(1e-15);
            let mut m = 16usize;
            while m < 4096 && sag / (m * m) as f64 > target {
                m *= 2;
            }
            for j in (k - window)..(k + window + 1) {
                let (a, b) = (self.point_at(j), self.point_at(j + 1));
                local += segment_winding(a, b, w);
                let (t0, t1) = self.seg_params(j);
                let mut prev = a;
                for i in 1..=m {
                    let p = if i == m { b } else { (self.curve)(t0 + (t1 - t0) * i as f64 / m as f64) };
                    refined += segment_winding(prev, p, w);
                    prev = p;
                }
            }
            winding += refined - local;
        }

        let signed = if winding != 0 { dist } else { -dist };
        Margin { signed, theta: Some(theta.rem_euclid(TAU)) }
    }

    fn point_at(&self, k: isize) -> Complex {
        let n = self.segments() as isize;
        self.points[k.rem_euclid(n) as usize]
    }
}

/// A target image, either sampled or known in closed form.
#[derive(Debug, Clone)]
pub enum Region {
    Sampled(SampledDomain),
    Disk { center: Complex, radius: f64 },
    HalfPlane { re_min: f64 },
    Strip { re_min: f64, re_max: f64 },
}

impl Region {
    pub fn margin(&self, w: Complex) -> Margin {
        match self {
            Region::Sampled(d) => d.margin(w),
            Region::Disk { center, radius } => Margin { signed: radius - (w - center).norm(), theta: None },
            Region::HalfPlane { re_min } => Margin { signed: w.re - re_min, theta: None },
            Region::Strip { re_min, re_max } => {
                Margin { signed: (w.re - re_min).min(re_max - w.re), theta: None }
            }
        }
    }

    pub fn signed_distance(&self, w: Complex) -> f64 {
        self.margin(w).signed
    }
}
