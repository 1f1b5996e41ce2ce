//! Randomized invariants across modules.

use std::f64::consts::TAU;

use num_complex::Complex64 as Complex;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use starlike_core::coeffcond::{log_derivative_margin, reciprocal_series_member, ReciprocalSeries};
use starlike_core::extremal::{extremal_function, Blaschke};
use starlike_core::specfun::{positive_zeros, starlike_quotient, Family, Normalization, SpecialFunctionDesc};
use starlike_core::subord::{candidate_q, SubordinationProblem};
use starlike_core::targets::{center_range, contains, maximal_disk, TargetId};

fn point(r: f64, t: f64) -> Complex {
    Complex::from_polar(r, t)
}

fn real_target() -> impl Strategy<Value = TargetId> {
    prop::sample::select(TargetId::catalog().into_iter().filter(TargetId::is_real).collect::<Vec<_>>())
}

fn grid_target() -> impl Strategy<Value = TargetId> {
    prop::sample::select(vec![
        TargetId::Cardioid,
        TargetId::Exp,
        TargetId::Sine,
        TargetId::Crescent,
        TargetId::Sigmoid,
        TargetId::Rk,
        TargetId::Sqrt,
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn targets_conjugate_symmetric(id in real_target(), r in 0.0f64..1.0, t in 0.0f64..TAU) {
        let z = point(r, t);
        let w = id.eval(z);
        prop_assert!((id.eval(z.conj()) - w.conj()).norm() <= 1e-12 * w.norm().max(1.0));
    }

    #[test]
    fn cardioid_disks_inside(s in 0.01f64..0.99, t in 0.0f64..TAU) {
        let (lo, hi) = center_range(TargetId::Cardioid);
        let a = lo + (hi - lo) * s;
        let r = maximal_disk(TargetId::Cardioid, a).unwrap().radius;
        let w = Complex::new(a, 0.0) + point(r * 0.999, t);
        prop_assert!(contains(TargetId::Cardioid, w).unwrap());
    }

    #[test]
    fn extremal_rotation_covariance(id in real_target(), r in 0.0f64..0.95, t in 0.0f64..TAU, s in 0.0f64..TAU) {
        let z = point(r, t);
        let zeta = point(1.0, s);
        let lhs = extremal_function(id, zeta, z).unwrap();
        let rhs = extremal_function(id, Complex::new(1.0, 0.0), zeta * z).unwrap() / zeta;
        prop_assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm().max(1.0));
    }

    #[test]
    fn schwarz_trials_are_self_maps(seed in any::<u64>(), r in 0.0f64..0.999, t in 0.0f64..TAU) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = Blaschke::random(&mut rng);
        prop_assert!(w.degree() <= 3);
        prop_assert!(w.eval(Complex::default()).norm() < 1e-15);
        prop_assert!(w.eval(point(r, t)).norm() <= r + 1e-12);
    }

    #[test]
    fn dominants_start_at_one(id in grid_target(), n in 1u32..4, beta in 0.1f64..50.0) {
        let p = SubordinationProblem::h_fixed(n, id).unwrap();
        prop_assert_eq!(candidate_q(&p, beta, Complex::default()).unwrap(), Complex::new(1.0, 0.0));
        let p = SubordinationProblem::q_fixed(n, id).unwrap();
        prop_assert_eq!(candidate_q(&p, beta, Complex::default()).unwrap(), Complex::new(1.0, 0.0));
    }

    #[test]
    fn dominants_conjugate_symmetric(id in grid_target(), n in 1u32..4, beta in 1.0f64..20.0, r in 0.0f64..0.95, t in 0.0f64..TAU) {
        let p = SubordinationProblem::q_fixed(n, id).unwrap();
        let z = point(r, t);
        if let (Ok(a), Ok(b)) = (candidate_q(&p, beta, z.conj()), candidate_q(&p, beta, z)) {
            prop_assert!((a - b.conj()).norm() <= 1e-12 * b.norm().max(1.0));
        }
    }

    #[test]
    fn quotient_is_one_at_origin(beta in 0.1f64..3.0, norm in prop::sample::select(vec![Normalization::F, Normalization::G, Normalization::H])) {
        let desc = SpecialFunctionDesc::new(Family::BesselJ { beta }, norm).unwrap();
        let table = positive_zeros(&desc, 1).unwrap();
        prop_assert_eq!(starlike_quotient(&desc, Complex::default(), &table).unwrap(), Complex::new(1.0, 0.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coefficient_condition_never_lies(a in prop::collection::vec(-0.3f64..0.3, 1..6), id in real_target()) {
        let Ok(s) = ReciprocalSeries::from_real(&a) else { return Ok(()) };
        if let Ok(true) = reciprocal_series_member(&s, id, 1.0) {
            prop_assert!(log_derivative_margin(&s, id, 0.999, 512) > 0.0);
        }
    }
}
