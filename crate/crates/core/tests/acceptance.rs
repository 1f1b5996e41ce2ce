//! Acceptance suite: one PASS/FAIL line per criterion, with the measured
//! value, its tolerance and the wall time. Membership is decided by winding
//! numbers against dense boundary polylines, independently of the region
//! distances the solvers use.
//!
//! Failing criteria are reported, not gated; set STARLIKE_ACCEPTANCE_STRICT=1
//! to exit nonzero when any line is FAIL.

use std::f64::consts::{E, TAU};
use std::time::{Duration, Instant};

use num_complex::Complex64 as Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use starlike_core::extremal::{extremal_function, functional_bound_check, EntireFunctional, DEFAULT_SEED};
use starlike_core::numerics::{series_integrate_ratio, winding_number_unchecked, PowerSeries};
use starlike_core::radii::{
    convolution_disk, janowski_convolution_radius, majorization_radius, operator_radius, special_radius,
    starlike_convolution_radius, tilted_product_radius, Operator, TiltedParams,
};
use starlike_core::specfun::{positive_zeros, quotient_unchecked, Family, Normalization, SpecialFunctionDesc};
use starlike_core::subord::{candidate_q, evaluate_item, grid, GridParams};
use starlike_core::targets::{
    boundary_curve, center_range, convexity_radius, inradius_at_one, maximal_disk, TargetId,
};

const MAJORIZATION_TOL: f64 = 1e-5;
const MAJORIZATION_BUDGET: Duration = Duration::from_millis(10);
const CONVOLUTION_TOL: f64 = 1e-4;
const CONVOLUTION_BUDGET: Duration = Duration::from_secs(2);
const THRESHOLD_REL_TOL: f64 = 1e-4;
const CERT_TOL: f64 = 1e-6;
const GRID_BUDGET: Duration = Duration::from_secs(30);
const DISK_CENTERS: usize = 50;
const DISK_SAMPLES: usize = 720;
const DISK_INNER: f64 = 1.0 - 1e-6;
const DISK_OUTER: f64 = 1.001;
const SPECIAL_SAMPLES: usize = 1024;
const SPECIAL_OFFSET: f64 = 1e-3;
const RESIDUAL_TOL: f64 = 1e-9;
const LEGENDRE_TOL: f64 = 1e-10;
const TILTED_TOL: f64 = 1e-12;
const CONVEXITY_TOL: f64 = 1e-8;
const OPERATOR_TOL: f64 = 1e-3;
const JANOWSKI_TOL: f64 = 1e-12;
const EXTREMAL_TRIALS: usize = 200;
const EXTREMAL_SLACK: f64 = 1e-9;
const EXTREMAL_EQUALITY: f64 = 1e-6;
const EXTREMAL_BUDGET: Duration = Duration::from_secs(20);
const POLYLINE: usize = 16384;
const INVARIANT_CASES: usize = 500;

struct Outcome {
    pass: bool,
    summary: String,
    details: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, summary: String) -> Self {
        Self { pass, summary, details: Vec::new() }
    }
}

fn report(id: usize, name: &str, run: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = run();
    let status = if o.pass { "PASS" } else { "FAIL" };
    println!("{status} {id} {name}: {} [{:.2?}]", o.summary, start.elapsed());
    for d in &o.details {
        println!("       {d}");
    }
    o.pass
}

fn inside(curve: &[Complex], w: Complex) -> bool {
    winding_number_unchecked(curve, w) != 0
}

/// `(all inside at inner, some point outside at outer)` for circle samples.
fn circle_straddles(curve: &[Complex], center: Complex, inner: f64, outer: f64, samples: usize) -> (bool, bool) {
    let pt = |r: f64, k: usize| center + Complex::from_polar(r, TAU * k as f64 / samples as f64);
    let all_in = (0..samples).all(|k| inside(curve, pt(inner, k)));
    let some_out = (0..samples).any(|k| !inside(curve, pt(outer, k)));
    (all_in, some_out)
}

fn majorization() -> Outcome {
    let start = Instant::now();
    let res = majorization_radius(TargetId::Cardioid);
    let elapsed = start.elapsed();
    let Ok(r) = res else { return Outcome::new(false, format!("{res:?}")) };
    // Independent root of (1 - r²)(1 - r e^r) - r by plain bisection.
    let f = |x: f64| (1.0 - x * x) * (1.0 - x * E.powf(x)) - x;
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let err = (r.radius - 0.380056).abs();
    let oracle = (r.radius - lo).abs();
    let pass = err < MAJORIZATION_TOL && oracle < 1e-10 && elapsed < MAJORIZATION_BUDGET;
    Outcome::new(
        pass,
        format!("r={:.9} |r-0.380056|={err:.1e} |r-bisection|={oracle:.1e} time={elapsed:.2?} (< {MAJORIZATION_BUDGET:?})", r.radius),
    )
}

fn convolution() -> Outcome {
    let cases = [
        (TargetId::Cardioid, 0.0957),
        (TargetId::CardioidC, 0.177124),
        (TargetId::Sine, 0.185835),
        (TargetId::Bell, 0.122919),
        (TargetId::Sigmoid, 0.108309),
    ];
    let mut pass = true;
    let mut details = Vec::new();
    let mut solve_time = Duration::ZERO;
    for (id, printed) in cases {
        let start = Instant::now();
        let res = starlike_convolution_radius(id);
        solve_time += start.elapsed();
        let Ok(r) = res else {
            pass = false;
            details.push(format!("{id}: {res:?}"));
            continue;
        };
        let err = (r.radius - printed).abs();
        let curve = boundary_curve(id, POLYLINE).expect("catalog target");
        let disk = |rho: f64| convolution_disk(rho);
        let (c_in, r_in) = disk(r.radius * (1.0 - 1e-3));
        let (c_out, r_out) = disk(r.radius * (1.0 + 1e-3));
        let (all_in, _) = circle_straddles(&curve, Complex::new(c_in, 0.0), r_in, r_in, DISK_SAMPLES);
        let (_, some_out) = circle_straddles(&curve, Complex::new(c_out, 0.0), r_out, r_out, DISK_SAMPLES);
        let ok = err < CONVOLUTION_TOL && all_in && some_out;
        pass &= ok;
        details.push(format!(
            "{id}: rho={:.6} printed={printed} err={err:.1e} inside below={all_in} outside above={some_out}",
            r.radius
        ));
    }
    pass &= solve_time < CONVOLUTION_BUDGET;
    let mut o = Outcome::new(pass, format!("5 targets within {CONVOLUTION_TOL:e}, solve time {solve_time:.2?} (< {CONVOLUTION_BUDGET:?})"));
    o.details = details;
    o
}

fn thresholds() -> Outcome {
    let start = Instant::now();
    let items = grid(GridParams::default()).expect("default grid");
    let results: Vec<_> = items.iter().map(evaluate_item).collect();
    let elapsed = start.elapsed();
    let mut details = Vec::new();
    let mut matched = 0;
    let mut certified = 0;
    for (item, r) in items.iter().zip(&results) {
        let Some(cert) = &r.certificate else {
            details.push(format!("{}: {}", r.label, r.error.clone().unwrap_or_default()));
            continue;
        };
        let beta = cert.beta_min;
        let agrees = (beta - r.printed).abs() <= THRESHOLD_REL_TOL * beta.max(1.0);
        // Independent failure check below the threshold: an axis endpoint of
        // q at 0.999 β leaves the real interval spanned by the conclusion.
        let lower = beta * 0.999;
        let p = &item.problem;
        let t = p.conclusion();
        let q = |z: f64| candidate_q(p, lower, Complex::new(z, 0.0)).map(|w| w.re).unwrap_or(f64::NAN);
        let (lo, hi) = center_range(t);
        let endpoint_fails = !(q(-1.0) >= lo && q(1.0) <= hi);
        let holds = cert.sufficiency_margin >= -CERT_TOL;
        let fails = cert.failure_margin < 0.0 && endpoint_fails;
        matched += agrees as usize;
        certified += (holds && fails) as usize;
        if !(agrees && holds && fails) {
            details.push(format!(
                "{}: computed {beta:.6} printed {:.6} agrees={agrees} holds={holds} fails below={fails}",
                r.label, r.printed
            ));
        }
    }
    let n = items.len();
    let pass = matched == n && certified == n && elapsed < GRID_BUDGET;
    let mut o = Outcome::new(
        pass,
        format!("{matched}/{n} agree with printed values, {certified}/{n} certificates hold and fail at 0.999 beta, time {elapsed:.2?} (< {GRID_BUDGET:?})"),
    );
    o.details = details;
    o
}

fn maximal_disks() -> Outcome {
    let mut details = Vec::new();
    let cardioid = boundary_curve(TargetId::Cardioid, POLYLINE).expect("cardioid boundary");
    let (lo, hi) = (1.0 - 1.0 / E, 1.0 + E);
    let mut good = 0;
    for k in 0..DISK_CENTERS {
        let a = lo + (hi - lo) * (k as f64 + 0.5) / DISK_CENTERS as f64;
        let r = maximal_disk(TargetId::Cardioid, a).expect("center in range").radius;
        let (all_in, some_out) =
            circle_straddles(&cardioid, Complex::new(a, 0.0), r * DISK_INNER, r * DISK_OUTER, DISK_SAMPLES);
        if all_in && some_out {
            good += 1;
        } else {
            details.push(format!("cardioid a={a:.4} R={r:.6}: inside={all_in} outside above={some_out}"));
        }
    }
    let catalog = TargetId::catalog();
    let mut good_catalog = 0;
    for &id in &catalog {
        let r = inradius_at_one(id).expect("catalog target");
        let curve = boundary_curve(id, POLYLINE).expect("catalog target");
        let (all_in, some_out) = circle_straddles(&curve, Complex::new(1.0, 0.0), r * DISK_INNER, r * DISK_OUTER, DISK_SAMPLES);
        if all_in && some_out {
            good_catalog += 1;
        } else {
            details.push(format!("{id} r1={r:.6}: inside={all_in} outside above={some_out}"));
        }
    }
    let pass = good == DISK_CENTERS && good_catalog == catalog.len();
    let mut o = Outcome::new(
        pass,
        format!("cardioid {good}/{DISK_CENTERS} centers, catalog {good_catalog}/{} targets at center 1", catalog.len()),
    );
    o.details = details;
    o
}

fn special_radii() -> Outcome {
    // Normalization of each family's radius equation as stated: f-type for
    // Bessel and Struve, g-type for Lommel, the single one for Legendre.
    let mut cases: Vec<(Family, Normalization)> = Vec::new();
    cases.extend([0.5, 1.0, 2.0].map(|beta| (Family::BesselJ { beta }, Normalization::F)));
    cases.extend([-0.5, 0.0, 0.5].map(|beta| (Family::StruveH { beta }, Normalization::F)));
    cases.extend([-0.75, -0.25, 0.25, 0.75].map(|u| (Family::LommelHalf { u }, Normalization::G)));
    cases.extend([2, 3, 5].map(|n| (Family::LegendreOddNorm { n }, Normalization::G)));
    let cardioid = boundary_curve(TargetId::Cardioid, POLYLINE).expect("cardioid boundary");
    let mut details = Vec::new();
    let mut good = 0;
    let mut legendre_err = f64::NAN;
    for (family, norm) in &cases {
        let desc = SpecialFunctionDesc::new(*family, *norm).expect("valid parameters");
        let res = special_radius(&desc, TargetId::Cardioid);
        let Ok(r) = res else {
            details.push(format!("{desc}: {res:?}"));
            continue;
        };
        let limit = positive_zeros(&desc, 1).expect("has a zero").domain_limit();
        let quotient_in = |rho: f64| {
            (0..SPECIAL_SAMPLES).all(|k| {
                let z = Complex::from_polar(rho.min(limit), TAU * k as f64 / SPECIAL_SAMPLES as f64);
                inside(&cardioid, quotient_unchecked(&desc, z))
            })
        };
        let below = quotient_in(r.radius * (1.0 - SPECIAL_OFFSET));
        let above = quotient_in(r.radius * (1.0 + SPECIAL_OFFSET));
        let ok = below && !above && r.residual.abs() < RESIDUAL_TOL;
        good += ok as usize;
        if matches!(family, Family::LegendreOddNorm { n: 2 }) {
            legendre_err = (r.radius - (3.0 / (10.0 * E + 5.0)).sqrt()).abs();
        }
        if !ok {
            details.push(format!(
                "{desc}: r={:.9} inside below={below} outside above={} residual={:.1e}",
                r.radius, !above, r.residual
            ));
        }
    }
    let pass = good == cases.len() && legendre_err < LEGENDRE_TOL;
    let mut o = Outcome::new(
        pass,
        format!("{good}/{} sharp with residual < {RESIDUAL_TOL:e}; legendre n=2 closed form err {legendre_err:.1e}", cases.len()),
    );
    o.details = details;
    o
}

fn tilted_and_operators() -> Outcome {
    let mut details = Vec::new();
    let tilted = tilted_product_radius(TiltedParams::new(0.0).expect("lambda 0"), TargetId::Cardioid).expect("solvable");
    let tilted_err = (tilted - ((4.0 * E * E + 1.0).sqrt() - 2.0 * E)).abs();
    let convex = convexity_radius(TargetId::Cardioid).expect("convexity radius");
    let convex_err = (convex - (3.0 - 5f64.sqrt()) / 2.0).abs();
    let rc = (3.0 - 5f64.sqrt()) / 2.0;
    let a = 2.0 - 3f64.sqrt();
    let printed = [
        (TargetId::Cardioid, [a, rc, rc]),
        (TargetId::CardioidC, [a, 0.5, 0.5]),
        (TargetId::Sine, [a, 0.345, 0.345]),
        (TargetId::Sigmoid, [a, 0.5, 1.0]),
    ];
    let mut ops_good = 0;
    let mut ops_total = 0;
    for (id, values) in printed {
        for (op, p) in Operator::ALL.iter().zip(values) {
            ops_total += 1;
            match operator_radius(*op, id) {
                Ok(r) if (r - p).abs() < OPERATOR_TOL => ops_good += 1,
                Ok(r) => details.push(format!("{op:?} on {id}: computed {r:.6} printed {p}")),
                Err(e) => details.push(format!("{op:?} on {id}: {e}")),
            }
        }
    }
    let pass = tilted_err < TILTED_TOL && convex_err < CONVEXITY_TOL && ops_good == ops_total;
    let mut o = Outcome::new(
        pass,
        format!("tilted err {tilted_err:.1e}, convexity err {convex_err:.1e}, operators {ops_good}/{ops_total} within {OPERATOR_TOL:e}"),
    );
    o.details = details;
    o
}

fn janowski() -> Outcome {
    match janowski_convolution_radius(1.0, 0.0) {
        Ok(r) => {
            let err = (r - (5f64.sqrt() - 2.0)).abs();
            Outcome::new(err < JANOWSKI_TOL, format!("r={r:.15} err={err:.1e}"))
        }
        Err(e) => Outcome::new(false, e.to_string()),
    }
}

fn extremal_bound() -> Outcome {
    let start = Instant::now();
    let res = functional_bound_check(
        TargetId::Cardioid,
        &EntireFunctional::identity(),
        Complex::new(0.5, 0.0),
        EXTREMAL_TRIALS,
        DEFAULT_SEED,
    );
    let elapsed = start.elapsed();
    let Ok(rep) = res else { return Outcome::new(false, format!("{res:?}")) };
    let exact = 0.5f64.exp() - 1.0;
    let within = rep.worst_trial_value <= exact + EXTREMAL_SLACK;
    let equality = (rep.extremal_value - exact).abs() < EXTREMAL_EQUALITY;
    let pass = within && equality && rep.trials == EXTREMAL_TRIALS && elapsed < EXTREMAL_BUDGET;
    Outcome::new(
        pass,
        format!(
            "{} trials, worst {:.12} <= {exact:.12}+{EXTREMAL_SLACK:e}: {within}; extremal {:.12} (|diff| < {EXTREMAL_EQUALITY:e}: {equality}); time {elapsed:.2?}",
            rep.trials, rep.worst_trial_value, rep.extremal_value
        ),
    )
}

fn random_disk_point(rng: &mut ChaCha8Rng, r: f64) -> Complex {
    Complex::from_polar(r * rng.random::<f64>().sqrt(), TAU * rng.random::<f64>())
}

fn invariants() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut failures: Vec<String> = Vec::new();
    let mut checks = 0usize;
    let mut check = |ok: bool, what: String| {
        checks += 1;
        if !ok && failures.len() < 10 {
            failures.push(what);
        }
    };

    // Series: z F' recovers h - 1 after termwise integration.
    for _ in 0..INVARIANT_CASES {
        let len = rng.random_range(1..40);
        let mut c: Vec<Complex> = (0..len).map(|_| Complex::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0))).collect();
        c[0] = Complex::new(1.0, 0.0);
        let h = PowerSeries::new(c);
        let f = series_integrate_ratio(&h).expect("normalized");
        let back = f.derivative().shift_up();
        let err = (1..h.coefficients.len()).map(|k| (back.coeff(k) - h.coeff(k)).norm()).fold(0.0, f64::max);
        check(err < 1e-12 && back.coeff(0).norm() == 0.0, format!("series round trip err {err:e}"));
    }

    // Conjugate symmetry of real targets, their extremal functions and dominants.
    let items = grid(GridParams::default()).expect("default grid");
    for _ in 0..INVARIANT_CASES {
        let z = random_disk_point(&mut rng, 0.95);
        for id in TargetId::catalog().into_iter().filter(TargetId::is_real) {
            let d = (id.eval(z.conj()) - id.eval(z).conj()).norm();
            check(d <= 1e-12 * id.eval(z).norm().max(1.0), format!("{id} conjugate symmetry at {z}: {d:e}"));
            let f = |w| extremal_function(id, Complex::new(1.0, 0.0), w).expect("in disk");
            let d = (f(z.conj()) - f(z).conj()).norm();
            check(d <= 1e-12 * f(z).norm().max(1.0), format!("{id} extremal conjugate symmetry at {z}: {d:e}"));
        }
        let item = &items[rng.random_range(0..items.len())];
        let beta = rng.random_range(0.5..5.0);
        if let (Ok(a), Ok(b)) = (candidate_q(&item.problem, beta, z.conj()), candidate_q(&item.problem, beta, z)) {
            let d = (a - b.conj()).norm();
            check(d <= 1e-12 * b.norm().max(1.0), format!("{} dominant conjugate symmetry at {z}: {d:e}", item.label));
        }
    }

    // q_β(0) = 1 for every grid problem.
    for item in &items {
        for _ in 0..20 {
            let beta = 10f64.powf(rng.random_range(-1.0..2.0));
            match candidate_q(&item.problem, beta, Complex::default()) {
                Ok(q0) => check((q0 - 1.0).norm() < 1e-15, format!("{} q(0)={q0} at beta={beta}", item.label)),
                Err(e) => check(false, format!("{} q(0): {e}", item.label)),
            }
        }
    }

    // Winding numbers agree between a boundary polyline and its 2x resampling
    // for points clear of the boundary.
    for id in TargetId::catalog() {
        let coarse = boundary_curve(id, 2048).expect("catalog target");
        let fine = boundary_curve(id, 4096).expect("catalog target");
        for _ in 0..INVARIANT_CASES / 5 {
            let w = Complex::new(1.0, 0.0) + random_disk_point(&mut rng, 3.0);
            let clear = starlike_core::numerics::polyline_distance(&fine, w) > 1e-3;
            if clear {
                let (a, b) = (winding_number_unchecked(&coarse, w), winding_number_unchecked(&fine, w));
                check(a == b, format!("{id} winding at {w}: {a} vs {b}"));
            }
        }
    }

    // Rotation covariance of the extremal function.
    for _ in 0..INVARIANT_CASES / 5 {
        let z = random_disk_point(&mut rng, 0.9);
        let zeta = Complex::from_polar(1.0, TAU * rng.random::<f64>());
        let lhs = extremal_function(TargetId::Cardioid, zeta, z).expect("in disk");
        let rhs = extremal_function(TargetId::Cardioid, Complex::new(1.0, 0.0), zeta * z).expect("in disk") / zeta;
        check((lhs - rhs).norm() < 1e-12, format!("rotation covariance at {z}, zeta={zeta}"));
    }

    let mut o = Outcome::new(failures.is_empty(), format!("{checks} checks, {} failures", failures.len()));
    o.details = failures;
    o
}

fn main() {
    let results = [
        report(1, "majorization radius", majorization),
        report(2, "convolution radii", convolution),
        report(3, "subordination thresholds", thresholds),
        report(4, "maximal disks", maximal_disks),
        report(5, "special-function radii", special_radii),
        report(6, "tilted product, convexity and operator radii", tilted_and_operators),
        report(7, "janowski convolution quadratic", janowski),
        report(8, "extremal functional bound", extremal_bound),
        report(9, "round-trip and symmetry invariants", invariants),
    ];
    let failed = results.iter().filter(|p| !**p).count();
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 && std::env::var("STARLIKE_ACCEPTANCE_STRICT").is_ok_and(|v| v == "1") {
        std::process::exit(1);
    }
}
