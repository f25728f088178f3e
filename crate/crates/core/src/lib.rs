//! Exact vector measures with vector density on atomic measure spaces.
//!
//! The library builds the measure `nu_F(B) = integral over B of F dmu` for a
//! density `F` into a finite-dimensional normed space or the diagonal family
//! of c0, over a locally determined atomic measure on the naturals. Every
//! quantity is computed in exact rational arithmetic (with a symbolic square
//! root where the euclidean norm demands it): measures, variation,
//! semivariation, the Dunford, Pettis and Bochner integrals and their local
//! variants, multiplier norms, and the multiplication isometries between the
//! L1 spaces of `nu_F` and the spaces of integrable densities.
//!
//! Identities come with two computation routes wherever a theorem asserts an
//! equality: variation has a partition-enumeration oracle, semivariation a
//! sign-pattern maximizer checked against sampled dual functionals, and each
//! isometry a measure side and a function side. The `checks` module packages
//! those comparisons as scenario-driven verdicts; `gallery` holds the named
//! counterexamples; `fuzz` drives the whole suite over seeded random
//! scenarios.

pub mod approx;
pub mod banach;
pub mod checks;
pub mod corpus;
pub mod density;
pub mod error;
pub mod extended;
pub mod functions;
pub mod fuzz;
pub mod gallery;
pub mod integration;
pub mod multipliers;
pub mod partitions;
pub mod rational;
pub mod scenario;
pub mod sequence;
pub mod sets;
pub mod space;

pub use banach::{
    dual_ball_abs_max, C0DiagonalVector, DualMaxValue, DualMaxWitness, FiniteDimSpace,
    FiniteDimVector, NormExponent, NormValue,
};
pub use checks::{run_scenario, RunOptions};
pub use density::{DensityMeasure, PartitionWitness, ScalarComponentMeasure};
pub use error::Error;
pub use extended::ExtendedRational;
pub use functions::{
    weakly_equal_ae, DiagonalFunction, EquivalenceTag, RankDecomposedFunction, VectorFunction,
};
pub use fuzz::fuzz;
pub use gallery::{gallery, run_gallery, GalleryEntry};
pub use integration::{
    bochner_integral, bochner_norm, dunford_norm, locally_integrable, pettis_decide,
    pettis_integral, DualFunctional, IntegrabilityVerdict, IntegralValue, LocalIntegrability,
};
pub use multipliers::{
    integrate, mf_isometry_check, multiplier_verdict, nu_norm, simple_function_approximation,
    variation_norm, MultiplierVerdict,
};
pub use rational::Rational;
pub use scenario::{BuiltScenario, CheckName, CheckRecord, Report, Scenario, Verdict};
pub use sequence::GeometricSequence;
pub use sets::RepresentableSet;
pub use space::AtomicMeasureSpace;
