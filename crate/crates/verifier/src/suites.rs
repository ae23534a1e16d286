//! The registered verification suites.
//!
//! Each suite draws from its own RNG stream, seeded from
//! `(config seed, suite id)`, so suites can run in any order or in parallel
//! without changing their numbers.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use octoweak_core::fields::lorentz_invariance_residual;
use octoweak_core::gauge::{
    covariance_residual_alpha, covariance_residual_beta, general_coupling_residual,
    general_coupling_witness, global_alpha_invariance_residual, global_alpha_witness,
    scal_der_u_residual, scal_ww_residual, ConnectionField, CouplingR, GaugeParamField,
};
use octoweak_core::grading::{
    off_subspace, residual_aab, residual_ab, residual_abb, residual_abba, residual_baa,
    residual_bba, residual_ipmove, residual_zvengrowski, sample_with, Grade, IpMove, SubspaceTag,
};
use octoweak_core::lorentz::{
    double_cover_residual, gamma5_analogue, infinitesimal_dc_residual, lambda_s,
    lorentz_algebra_residual, Theta,
};
use octoweak_core::octonion::{associator, modulus};
use octoweak_core::{CplxOcton, Point, PolyField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Serialize, Serializer};

use crate::config::SuiteConfig;
use crate::error::HarnessError;
use crate::report::{RunReport, SuiteReport};

/// Negative-control witnesses must exceed this to count as a failure of the
/// identity they probe.
pub const WITNESS_FLOOR: f64 = 1e-3;

pub const GAMMA5_TOL: f64 = 1e-14;
pub const DOUBLE_COVER_TOL: f64 = 1e-9;
pub const UNITARITY_TOL: f64 = 1e-10;
pub const INVARIANCE_TOL: f64 = 1e-9;
pub const COUPLING_TOL: f64 = 1e-10;

/// Bound on `|θ^{μν}|` for the Lorentz invariance suites, capped below the
/// configured bound.
pub const INVARIANCE_THETA_CAP: f64 = 1.5;
/// Gauge parameters: coefficient bound and the cap on `‖u(p)‖`.
pub const GAUGE_COEFF_BOUND: f64 = 0.5;
pub const GAUGE_VALUE_CAP: f64 = 1.0;

macro_rules! suites {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum SuiteId { $($variant),* }

        impl SuiteId {
            /// Registration order; reports follow it.
            pub const ALL: &'static [SuiteId] = &[$(SuiteId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self { $(SuiteId::$variant => $name),* }
            }
        }

        impl FromStr for SuiteId {
            type Err = HarnessError;

            fn from_str(s: &str) -> Result<Self, HarnessError> {
                match s {
                    $($name => Ok(SuiteId::$variant),)*
                    other => Err(HarnessError::UnknownSuite(other.to_owned())),
                }
            }
        }
    };
}

suites! {
    IpMoves => "ip-moves",
    Zvengrowski => "zvengrowski",
    AbIdentities => "ab-identities",
    GradingClosure => "grading-closure",
    LorentzAlgebra => "lorentz-algebra",
    InfinitesimalDc => "infinitesimal-dc",
    DoubleCover => "double-cover",
    RotationUnitarity => "rotation-unitarity",
    BoostSelfconj => "boost-selfconj",
    Gamma5 => "gamma5",
    Prop1A => "prop1-A",
    Prop1B => "prop1-B",
    Prop2 => "prop2",
    Prop3 => "prop3",
    Prop4Dichotomy => "prop4-dichotomy",
    Prop5 => "prop5",
    Lemma3 => "lemma3",
    Lemma4 => "lemma4",
    CompositionLaw => "composition-law",
    Alternativity => "alternativity",
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for SuiteId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Where a suite takes its pass threshold from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tolerance {
    /// `tol_exact` from the config
    Exact,
    /// `tol_series` from the config
    Series,
    Fixed(f64),
}

impl Tolerance {
    pub fn resolve(self, cfg: &SuiteConfig) -> f64 {
        match self {
            Tolerance::Exact => cfg.tol_exact,
            Tolerance::Series => cfg.tol_series,
            Tolerance::Fixed(t) => t,
        }
    }
}

impl SuiteId {
    pub fn tolerance(self) -> Tolerance {
        use SuiteId::*;
        match self {
            IpMoves | Zvengrowski | AbIdentities | GradingClosure | LorentzAlgebra
            | InfinitesimalDc | CompositionLaw | Alternativity => Tolerance::Exact,
            Prop2 | Prop3 | Prop5 | Lemma3 | Lemma4 => Tolerance::Series,
            DoubleCover => Tolerance::Fixed(DOUBLE_COVER_TOL),
            Prop1A | Prop1B => Tolerance::Fixed(INVARIANCE_TOL),
            RotationUnitarity | BoostSelfconj => Tolerance::Fixed(UNITARITY_TOL),
            Gamma5 => Tolerance::Fixed(GAMMA5_TOL),
            Prop4Dichotomy => Tolerance::Fixed(COUPLING_TOL),
        }
    }

    /// Draw count when the config does not override it. Exhaustive suites
    /// ignore the override.
    pub fn default_samples(self) -> usize {
        use SuiteId::*;
        match self {
            IpMoves | Zvengrowski | AbIdentities | GradingClosure | CompositionLaw
            | Alternativity => 1000,
            DoubleCover | RotationUnitarity | BoostSelfconj => 500,
            Prop1A | Prop1B => 200,
            Prop2 | Prop3 | Prop5 | Lemma3 | Lemma4 => 300,
            Prop4Dichotomy => 100,
            LorentzAlgebra => 256,
            InfinitesimalDc => 64,
            Gamma5 => 1,
        }
    }

    pub fn is_exhaustive(self) -> bool {
        matches!(
            self,
            SuiteId::LorentzAlgebra | SuiteId::InfinitesimalDc | SuiteId::Gamma5
        )
    }

    pub fn description(self) -> &'static str {
        use SuiteId::*;
        match self {
            IpMoves => "moving factors across <.,.>: <xy,z> = <y,x̄z> and its three mirrors",
            Zvengrowski => "x(ȳz) + y(x̄z) = 2<x,y>z",
            AbIdentities => "ab = bā, (aa')b = a'(ab), b(a'a) = (ba)a', (bb')a = (ab)b', a(b'b) = b'(ba), (ab)(b'a') = a'(bb')a",
            GradingClosure => "A·A = A, A·B = B·A = B, B·B = A",
            LorentzAlgebra => "spinor generators close into the Lorentz algebra (all 256 index tuples)",
            InfinitesimalDc => "S*ē + ēS = V ē (all 64 index tuples)",
            DoubleCover => "Λ̄*_S ē^ρ Λ_S = (Λ_V)^ρ_σ ē^σ for random θ",
            RotationUnitarity => "Λ̄*_S Λ_S = 1 for rotations",
            BoostSelfconj => "Λ̄*_S = Λ_S for a pure boost",
            Gamma5 => "−i e⁰ ē¹ e² ē³ = 1",
            Prop1A => "<α*, ē^ρ ∂_ρ α> is Lorentz invariant (α ∈ C⊗A)",
            Prop1B => "<β*, ē^ρ ∂_ρ β> is Lorentz invariant with β' = Λ̄*β (β ∈ C⊗B)",
            Prop2 => "global α U⁻¹ invariance for u ∈ (C⊗A)⁻, broken outside it",
            Prop3 => "(D_ρ α)' = (D_ρ α) U⁻¹ under local gauge transformations",
            Prop4Dichotomy => "r₁Wβ + r₂βW is Lorentz covariant iff r₁ = r₂",
            Prop5 => "(D_ρ β)' = (D_ρ β) exp(r Scal u) under local gauge transformations",
            Lemma3 => "<1, (∂U)U⁻¹> = <1, ∂u>",
            Lemma4 => "Scal(W' − W) = −Scal(∂u)",
            CompositionLaw => "N(xy) = N(x) N(y)",
            Alternativity => "[x,x,y] = [x,y,y] = 0",
        }
    }
}

/// Raw residuals of one suite, before tolerances are applied.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub residuals: Vec<f64>,
    /// Residual of the fixed negative-control input, if the suite has one.
    pub witness: Option<f64>,
}

/// 64-bit FNV-1a; mixes the suite name into the RNG seed.
fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

pub fn suite_rng(seed: u64, id: SuiteId) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed ^ fnv1a(id.as_str()))
}

/// Runs a suite by name.
pub fn run_suite(id: &str, cfg: &SuiteConfig) -> Result<SuiteReport, HarnessError> {
    run_suite_id(SuiteId::from_str(id)?, cfg)
}

pub fn run_suite_id(id: SuiteId, cfg: &SuiteConfig) -> Result<SuiteReport, HarnessError> {
    let start = Instant::now();
    let outcome = evaluate(id, cfg).map_err(|source| HarnessError::Algebra {
        suite: id.as_str(),
        source,
    })?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(SuiteReport::from_outcome(
        id,
        &outcome,
        id.tolerance().resolve(cfg),
        elapsed_ms,
    ))
}

/// Runs every configured suite, in parallel, and returns the reports in
/// registration order.
pub fn run_all(cfg: &SuiteConfig) -> Result<RunReport, HarnessError> {
    let selected: Vec<SuiteId> = SuiteId::ALL
        .iter()
        .copied()
        .filter(|id| cfg.suites.contains(id))
        .collect();
    let results: Vec<Result<SuiteReport, HarnessError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = selected
            .iter()
            .map(|&id| scope.spawn(move || run_suite_id(id, cfg)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    });
    let suites = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(RunReport::new(cfg.clone(), suites))
}

type Eval = octoweak_core::Result<Outcome>;

fn sampled(n: usize, mut f: impl FnMut() -> octoweak_core::Result<f64>) -> Eval {
    let residuals = (0..n)
        .map(|_| f())
        .collect::<octoweak_core::Result<Vec<_>>>()?;
    Ok(Outcome {
        residuals,
        witness: None,
    })
}

fn max4(f: impl Fn(usize) -> octoweak_core::Result<f64>) -> octoweak_core::Result<f64> {
    (0..4).try_fold(0.0f64, |acc, k| Ok(acc.max(f(k)?)))
}

fn evaluate(id: SuiteId, cfg: &SuiteConfig) -> Eval {
    let mut rng = suite_rng(cfg.seed, id);
    let n = cfg.samples_or(id.default_samples());
    let full = |rng: &mut ChaCha20Rng| sample_with(rng, SubspaceTag::FullCO, 1.0);
    let a = |rng: &mut ChaCha20Rng| sample_with(rng, SubspaceTag::A, 1.0);
    let b = |rng: &mut ChaCha20Rng| sample_with(rng, SubspaceTag::B, 1.0);
    let degree = cfg.field_degree;

    match id {
        SuiteId::IpMoves => sampled(n, || {
            let (x, y, z) = (full(&mut rng), full(&mut rng), full(&mut rng));
            Ok(IpMove::ALL
                .iter()
                .map(|&form| modulus(residual_ipmove(form, &x, &y, &z)))
                .fold(0.0, f64::max))
        }),
        SuiteId::Zvengrowski => sampled(n, || {
            let (x, y, z) = (full(&mut rng), full(&mut rng), full(&mut rng));
            Ok(residual_zvengrowski(&x, &y, &z).magnitude())
        }),
        SuiteId::AbIdentities => sampled(n, || {
            let (a1, a2, b1, b2) = (a(&mut rng), a(&mut rng), b(&mut rng), b(&mut rng));
            let all = [
                residual_ab(&a1, &b1)?,
                residual_aab(&a1, &a2, &b1)?,
                residual_baa(&a1, &a2, &b1)?,
                residual_bba(&a1, &b1, &b2)?,
                residual_abb(&a1, &b1, &b2)?,
                residual_abba(&a1, &a2, &b1, &b2)?,
            ];
            Ok(all.iter().map(CplxOcton::magnitude).fold(0.0, f64::max))
        }),
        SuiteId::GradingClosure => sampled(n, || {
            let mut worst = 0.0f64;
            for gx in [Grade::A, Grade::B] {
                for gy in [Grade::A, Grade::B] {
                    let x = sample_with(&mut rng, gx.tag(), 1.0);
                    let y = sample_with(&mut rng, gy.tag(), 1.0);
                    let xy = x * y;
                    let off = off_subspace(&xy, gx.product(gy).tag());
                    worst = worst.max(off / xy.magnitude().max(1.0));
                }
            }
            Ok(worst)
        }),
        SuiteId::CompositionLaw => sampled(n, || {
            let (x, y) = (full(&mut rng), full(&mut rng));
            Ok(modulus((x * y).norm() - x.norm() * y.norm()))
        }),
        SuiteId::Alternativity => sampled(n, || {
            let (x, y) = (full(&mut rng), full(&mut rng));
            Ok(associator(&x, &x, &y)
                .magnitude()
                .max(associator(&x, &y, &y).magnitude()))
        }),
        SuiteId::LorentzAlgebra => Ok(Outcome {
            residuals: (0..256)
                .map(|t| {
                    lorentz_algebra_residual(t / 64, (t / 16) % 4, (t / 4) % 4, t % 4).magnitude()
                })
                .collect(),
            witness: None,
        }),
        SuiteId::InfinitesimalDc => Ok(Outcome {
            residuals: (0..64)
                .map(|t| infinitesimal_dc_residual(t / 16, (t / 4) % 4, t % 4).magnitude())
                .collect(),
            witness: None,
        }),
        SuiteId::DoubleCover => sampled(n, || {
            Ok(double_cover_residual(&Theta::random(
                &mut rng,
                cfg.theta_bound,
            )))
        }),
        SuiteId::RotationUnitarity => sampled(n, || {
            let ls = lambda_s(&Theta::random_rotation(&mut rng, cfg.theta_bound));
            Ok((ls.conj_both() * ls - CplxOcton::ONE).magnitude())
        }),
        SuiteId::BoostSelfconj => sampled(n, || {
            let chi = rng.gen_range(-cfg.theta_bound..=cfg.theta_bound);
            let ls = lambda_s(&Theta::single(0, 1, chi));
            Ok((ls.conj_both() - ls).magnitude())
        }),
        SuiteId::Gamma5 => Ok(Outcome {
            residuals: vec![(gamma5_analogue() - CplxOcton::ONE).magnitude()],
            witness: None,
        }),
        SuiteId::Prop1A | SuiteId::Prop1B => {
            let tag = if id == SuiteId::Prop1A {
                SubspaceTag::A
            } else {
                SubspaceTag::B
            };
            let bound = cfg.theta_bound.min(INVARIANCE_THETA_CAP);
            sampled(n, || {
                let f = PolyField::random(&mut rng, degree, tag, 1.0);
                let theta = Theta::random(&mut rng, bound);
                let p = Point::random(&mut rng, 1.0);
                lorentz_invariance_residual(&f, &theta, &p)
            })
        }
        SuiteId::Prop2 => {
            let mut out = sampled(n, || {
                let alpha = PolyField::random(&mut rng, degree, SubspaceTag::A, 1.0);
                let u = sample_with(&mut rng, SubspaceTag::AMinus, 1.0);
                let p = Point::random(&mut rng, 1.0);
                global_alpha_invariance_residual(&alpha, &u, &p)
            })?;
            let (alpha, u, p) = global_alpha_witness();
            out.witness = Some(global_alpha_invariance_residual(&alpha, &u, &p)?);
            Ok(out)
        }
        SuiteId::Prop3 | SuiteId::Prop5 | SuiteId::Lemma3 | SuiteId::Lemma4 => {
            sampled(n, || gauge_residual(id, &mut rng, degree))
        }
        SuiteId::Prop4Dichotomy => {
            let mut out = sampled(n, || {
                let theta = Theta::random(&mut rng, cfg.theta_bound);
                let w = sample_with(&mut rng, SubspaceTag::AMinus, 1.0);
                let beta = b(&mut rng);
                let r = rng.gen_range(-2.0..2.0);
                general_coupling_residual(r, r, &theta, &w, &beta)
            })?;
            let (theta, w, beta) = general_coupling_witness();
            out.witness = Some(general_coupling_residual(1.0, 0.0, &theta, &w, &beta)?);
            Ok(out)
        }
    }
}

fn gauge_residual(id: SuiteId, rng: &mut ChaCha20Rng, degree: u32) -> octoweak_core::Result<f64> {
    let p = Point::random(rng, 1.0);
    let u = GaugeParamField::random(rng, degree, GAUGE_COEFF_BOUND).limited_at(&p, GAUGE_VALUE_CAP);
    let w = ConnectionField::random(rng, degree, 1.0);
    match id {
        SuiteId::Prop3 => {
            let alpha = PolyField::random(rng, degree, SubspaceTag::A, 1.0);
            max4(|rho| covariance_residual_alpha(&alpha, &w, &u, rho, &p))
        }
        SuiteId::Prop5 => {
            let beta = PolyField::random(rng, degree, SubspaceTag::B, 1.0);
            let r = CouplingR(rng.gen_range(-2.0..2.0));
            max4(|rho| covariance_residual_beta(&beta, &w, &u, rho, &p, r))
        }
        SuiteId::Lemma3 => max4(|mu| Ok(modulus(scal_der_u_residual(&u, mu, &p)))),
        SuiteId::Lemma4 => max4(|rho| Ok(modulus(scal_ww_residual(&w, &u, rho, &p)))),
        _ => unreachable!("not a gauge suite"),
    }
}
