//! Every printed constant paired with its recomputation.

use std::f64::consts::{E, PI};

use num_complex::Complex64 as Complex;
use rayon::prelude::*;
use serde::Serialize;

use starlike_core::extremal::{functional_bound, EntireFunctional};
use starlike_core::numerics::{find_root, golden_section_min, Bracket, ROOT_TOL};
use starlike_core::radii::{
    convolution_convex_radius, janowski_convolution_radius, majorization_radius, operator_radius, special_radius,
    starlike_convolution_radius, tilted_product_radius, Operator, TiltedParams,
};
use starlike_core::specfun::{Family, Normalization, SpecialFunctionDesc};
use starlike_core::subord::{evaluate_item, grid, GridParams};
use starlike_core::targets::{inradius_report, TargetId, RK_K};

/// One reproduced constant.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub label: String,
    pub paper_value: f64,
    /// `NaN` when the computation failed.
    pub computed: f64,
    pub abs_err: f64,
}

impl Row {
    fn new(label: impl Into<String>, paper_value: f64, computed: Result<f64, String>) -> Self {
        let label = label.into();
        let computed = computed.unwrap_or_else(|e| {
            log::error!("{label}: {e}");
            f64::NAN
        });
        Self { label, paper_value, computed, abs_err: (computed - paper_value).abs() }
    }
}

type Task = Box<dyn Fn() -> Vec<Row> + Send + Sync>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn tasks() -> Vec<Task> {
    let mut t: Vec<Task> = Vec::new();
    t.push(Box::new(|| {
        vec![Row::new(
            "radii/majorization/cardioid",
            0.380056,
            majorization_radius(TargetId::Cardioid).map(|r| r.radius).map_err(err),
        )]
    }));
    let conv = [
        (TargetId::Cardioid, 0.0957),
        (TargetId::CardioidC, 0.177124),
        (TargetId::Sine, 0.185835),
        (TargetId::Bell, 0.122919),
        (TargetId::Sigmoid, 0.108309),
        (TargetId::Sqrt, 0.09778),
    ];
    for (id, printed) in conv {
        t.push(Box::new(move || {
            vec![Row::new(
                format!("radii/convolution/{id}"),
                printed,
                starlike_convolution_radius(id).map(|r| r.radius).map_err(err),
            )]
        }));
    }
    t.push(Box::new(|| {
        vec![
            Row::new(
                "radii/convolution/janowski-quadratic/1,0",
                5f64.sqrt() - 2.0,
                janowski_convolution_radius(1.0, 0.0).map_err(err),
            ),
            Row::new(
                "radii/convex-convolution/cardioid",
                (3.0 - 5f64.sqrt()) / 2.0,
                convolution_convex_radius(TargetId::Cardioid).map_err(err),
            ),
            Row::new(
                "radii/tilted/lambda0/cardioid",
                (4.0 * E * E + 1.0).sqrt() - 2.0 * E,
                tilted_product_radius(TiltedParams { lambda: 0.0 }, TargetId::Cardioid).map_err(err),
            ),
        ]
    }));
    let rc = (3.0 - 5f64.sqrt()) / 2.0;
    let a = 2.0 - 3f64.sqrt();
    let ops = [
        (TargetId::Cardioid, [a, rc, rc]),
        (TargetId::CardioidC, [a, 0.5, 0.5]),
        (TargetId::Sine, [a, 0.345, 0.345]),
        (TargetId::Sigmoid, [a, 0.5, 1.0]),
    ];
    for (id, printed) in ops {
        t.push(Box::new(move || {
            Operator::ALL
                .iter()
                .zip(printed)
                .map(|(op, p)| {
                    let name = format!("{op:?}").to_lowercase();
                    Row::new(format!("radii/operator/{name}/{id}"), p, operator_radius(*op, id).map_err(err))
                })
                .collect()
        }));
    }
    t.push(Box::new(|| {
        let desc = SpecialFunctionDesc::new(Family::LegendreOddNorm { n: 2 }, Normalization::G);
        let computed = desc
            .map_err(err)
            .and_then(|d| special_radius(&d, TargetId::Cardioid).map(|r| r.radius).map_err(err));
        vec![Row::new("radii/special/legendre-n2/g/cardioid", (3.0 / (10.0 * E + 5.0)).sqrt(), computed)]
    }));
    t.push(Box::new(|| {
        let mut rows = Vec::new();
        for id in TargetId::catalog() {
            if let Ok(rep) = inradius_report(id) {
                if let Some(p) = rep.printed.or(rep.closed_form) {
                    rows.push(Row::new(format!("targets/inradius/{id}"), p, Ok(rep.numeric)));
                }
            }
        }
        rows
    }));
    t.push(Box::new(|| vec![Row::new("targets/max-arg/cardioid", 1.41022, Ok(cardioid_max_arg()))]));
    t.push(Box::new(|| {
        let theta = find_root(|t| 2.0 * t - t.sin() - PI, Bracket::new(1.0, 3.0).expect("ordered"), ROOT_TOL);
        vec![
            Row::new("subord/n2/hfixed/exp/critical-angle", 2.02098, theta.map_err(err)),
            Row::new("subord/n2/qfixed/rk/critical-angle", 0.351807, Ok(rk_distance_argmax())),
            Row::new("subord/n1/qfixed/rk/arg-bound", 0.7719, Ok(rk_arg_bound_expression())),
        ]
    }));
    t.push(Box::new(|| {
        let (bound, _) = functional_bound(TargetId::Cardioid, &EntireFunctional::identity(), 0.5);
        vec![Row::new("extremal/cardioid/identity/0.5", 0.5f64.exp() - 1.0, Ok(bound))]
    }));
    let items = grid(GridParams::default()).expect("default grid parameters are valid");
    for item in items {
        t.push(Box::new(move || {
            let r = evaluate_item(&item);
            vec![Row::new(r.label, r.printed, r.computed.ok_or_else(|| r.error.unwrap_or_default()))]
        }));
    }
    t
}

/// `max_θ |arg(1 + e^{iθ} exp(e^{iθ}))|`.
fn cardioid_max_arg() -> f64 {
    let g = |t: f64| -TargetId::Cardioid.eval(Complex::from_polar(1.0, t)).arg().abs();
    let n = 4096;
    let best = (0..n)
        .map(|k| PI * k as f64 / n as f64)
        .min_by(|a, b| g(*a).total_cmp(&g(*b)))
        .expect("non-empty scan");
    let h = PI / n as f64;
    -golden_section_min(g, best - h, best + h, 1e-13).1
}

/// Maximizer of the squared-distance difference between the cardioid and the
/// n=2 QFixed RK dominant at its threshold.
fn rk_distance_argmax() -> f64 {
    let k = RK_K;
    let gamma = (E / (E - 1.0)).ln();
    let beta = (-1.0 + 2.0 * k * (1.0 + 1.0 / k).ln()) / (gamma * k);
    let u = |t: f64| -(t.cos() + 2.0 * k * (1.0 + 1.0 / (k * k) - 2.0 * t.cos() / k).sqrt().ln()) / (beta * k);
    let v = |t: f64| -(t.sin() + 2.0 * k * (t.sin() / (t.cos() - k)).atan()) / (beta * k);
    let d = |t: f64| (2.0 * t.cos()).exp() - 1.0 - (2.0 * u(t)).exp() + 2.0 * u(t).exp() * v(t).cos();
    golden_section_min(|t| -d(t), 0.05, 1.5, 1e-12).0
}

/// The printed arctan bound on `|arg q_β|` for the n=1 QFixed RK item.
fn rk_arg_bound_expression() -> f64 {
    let k = RK_K;
    let m = E * (-1.0 + 2.0 * k * (1.0 + 1.0 / k).ln());
    ((2.0 * k * (1.0 / (k - 1.0)).atan() + 1.0) / (m * (1.0 - 1.0 / E))).atan()
}

/// All rows, computed in parallel and sorted by label.
pub fn reproduce_all() -> Vec<Row> {
    let mut rows: Vec<Row> = tasks().par_iter().flat_map_iter(|task| task()).collect();
    rows.sort_by(|a, b| a.label.cmp(&b.label));
    rows
}
