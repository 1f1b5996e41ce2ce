//! Fixture sets shared by the benchmarks.

use starlike_core::specfun::{Family, Normalization, SpecialFunctionDesc};
use starlike_core::subord::SubordinationProblem;
use starlike_core::targets::TargetId;

/// Targets with printed convolution radii.
pub const CONVOLUTION_TARGETS: [TargetId; 5] =
    [TargetId::Cardioid, TargetId::CardioidC, TargetId::Sine, TargetId::Bell, TargetId::Sigmoid];

/// One representative per special-function family.
pub fn special_fixtures() -> Vec<(&'static str, SpecialFunctionDesc)> {
    [
        ("bessel-1", Family::BesselJ { beta: 1.0 }),
        ("struve-0", Family::StruveH { beta: 0.0 }),
        ("lommel-0.25", Family::LommelHalf { u: 0.25 }),
        ("legendre-3", Family::LegendreOddNorm { n: 3 }),
    ]
    .into_iter()
    .map(|(name, fam)| (name, SpecialFunctionDesc::new(fam, Normalization::G).expect("valid fixture")))
    .collect()
}

/// A cheap and an expensive threshold problem.
pub fn subord_fixtures() -> Vec<(&'static str, SubordinationProblem)> {
    vec![
        ("n1/hfixed/exp", SubordinationProblem::h_fixed(1, TargetId::Exp).expect("valid fixture")),
        ("n2/qfixed/sine", SubordinationProblem::q_fixed(2, TargetId::Sine).expect("valid fixture")),
    ]
}
