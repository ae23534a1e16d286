//! The SU(2)×U(1) gauge sector.
//!
//! Gauge parameters `u` and connection components `W_ρ` take values in
//! `(C⊗A)⁻ = span_R{i, e1, e2, e3}`. The `A`-spinor `α` transforms as
//! `α U⁻¹` with `U = exp(u)`; the `B`-spinor `β` only sees the U(1) phase
//! `exp(r Scal(u))`.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::fields::{dexp_series, dirac_scalar_unchecked, Point, PolyField};
use crate::grading::{self, Grade, SubspaceTag};
use crate::lorentz::{lambda_s, Idx, Theta};
use crate::octonion::{associator, modulus, scalar_exp, ComplexScalar, CplxOcton};

/// A local gauge parameter `u(x)` with values in `(C⊗A)⁻`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeParamField(PolyField);

impl GaugeParamField {
    pub fn new(u: PolyField) -> Result<Self> {
        u.with_tag(SubspaceTag::AMinus).map(GaugeParamField)
    }

    pub fn zero() -> Self {
        GaugeParamField(PolyField::zero(0).with_tag(SubspaceTag::AMinus).unwrap())
    }

    pub fn constant(u: CplxOcton) -> Result<Self> {
        Self::new(PolyField::constant(u))
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R, degree: u32, bound: f64) -> Self {
        GaugeParamField(PolyField::random(rng, degree, SubspaceTag::AMinus, bound))
    }

    /// Rescales so that `‖u(p)‖ ≤ limit`; leaves the field alone otherwise.
    pub fn limited_at(self, p: &Point, limit: f64) -> Self {
        let size = self.0.eval(p).magnitude();
        if size > limit {
            GaugeParamField(self.0.scaled(limit / size))
        } else {
            self
        }
    }

    pub fn field(&self) -> &PolyField {
        &self.0
    }

    fn value_and_partial(&self, rho: Idx, p: &Point) -> (CplxOcton, CplxOcton) {
        (self.0.eval(p), self.0.partial(rho).eval(p))
    }
}

/// Connection components `W_0 … W_3`, each `(C⊗A)⁻`-valued.
#[derive(Debug, Clone, PartialEq)]
pub struct ConnectionField {
    w: [PolyField; 4],
}

impl ConnectionField {
    pub fn new(w: [PolyField; 4]) -> Result<Self> {
        let [a, b, c, d] = w;
        Ok(ConnectionField {
            w: [
                a.with_tag(SubspaceTag::AMinus)?,
                b.with_tag(SubspaceTag::AMinus)?,
                c.with_tag(SubspaceTag::AMinus)?,
                d.with_tag(SubspaceTag::AMinus)?,
            ],
        })
    }

    pub fn zero() -> Self {
        Self::constant([CplxOcton::ZERO; 4]).unwrap()
    }

    pub fn constant(values: [CplxOcton; 4]) -> Result<Self> {
        Self::new(values.map(PolyField::constant))
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R, degree: u32, bound: f64) -> Self {
        ConnectionField {
            w: core::array::from_fn(|_| PolyField::random(rng, degree, SubspaceTag::AMinus, bound)),
        }
    }

    pub fn component(&self, rho: Idx) -> &PolyField {
        &self.w[rho]
    }

    pub fn at(&self, rho: Idx, p: &Point) -> CplxOcton {
        self.w[rho].eval(p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingR(pub f64);

fn require_field(f: &PolyField, grade: Grade, argument: &'static str) -> Result<()> {
    if f.tag().and_then(SubspaceTag::grade) == Some(grade) {
        Ok(())
    } else {
        Err(Error::DomainViolation {
            argument,
            expected: grade.tag(),
        })
    }
}

/// `W′_ρ = U W_ρ U⁻¹ − (∂_ρ U) U⁻¹` at `p`.
pub fn transform_w_at(w: &ConnectionField, u: &GaugeParamField, rho: Idx, p: &Point) -> CplxOcton {
    let (value, du) = u.value_and_partial(rho, p);
    let gauge = exp_a(&value);
    let gauge_inv = exp_a(&-value);
    let d_gauge = dexp_series(&value, &du);
    gauge * w.at(rho, p) * gauge_inv - d_gauge * gauge_inv
}

// the argument is A-valued by construction of the callers' types
fn exp_a(x: &CplxOcton) -> CplxOcton {
    x.exp_assoc().expect("gauge parameters are C⊗A-valued")
}

/// `D_ρ α = ∂_ρ α − α W_ρ` at `p`.
pub fn cov_der_alpha_at(
    alpha: &PolyField,
    w: &ConnectionField,
    rho: Idx,
    p: &Point,
) -> Result<CplxOcton> {
    require_field(alpha, Grade::A, "alpha")?;
    Ok(alpha.partial(rho).eval(p) - alpha.eval(p) * w.at(rho, p))
}

/// `D_ρ β = ∂_ρ β + r β Scal(W_ρ)` at `p`.
pub fn cov_der_beta_at(
    beta: &PolyField,
    w: &ConnectionField,
    rho: Idx,
    p: &Point,
    r: CouplingR,
) -> Result<CplxOcton> {
    require_field(beta, Grade::B, "beta")?;
    let scal = w.at(rho, p).scal();
    Ok(beta.partial(rho).eval(p) + beta.eval(p) * (scal * r.0))
}

/// The three equivalent writings of `D_ρ β`:
/// `∂β + (r/2)(βW + Wβ)`, `∂β + (r/2)(βW + βW̄)` and `∂β + rβ Scal(W)`.
pub fn cov_der_beta_forms_at(
    beta: &PolyField,
    w: &ConnectionField,
    rho: Idx,
    p: &Point,
    r: CouplingR,
) -> Result<[CplxOcton; 3]> {
    let scalar_form = cov_der_beta_at(beta, w, rho, p, r)?;
    let d = beta.partial(rho).eval(p);
    let b = beta.eval(p);
    let wv = w.at(rho, p);
    let half = 0.5 * r.0;
    let two_sided = d + (b * wv + wv * b) * half;
    let conjugate = d + (b * wv + b * wv.conj_oct()) * half;
    Ok([two_sided, conjugate, scalar_form])
}

/// `α(p) U⁻¹(p)`
pub fn transform_alpha_gauge_at(
    alpha: &PolyField,
    u: &GaugeParamField,
    p: &Point,
) -> Result<CplxOcton> {
    require_field(alpha, Grade::A, "alpha")?;
    Ok(alpha.eval(p) * exp_a(&-u.field().eval(p)))
}

/// `exp(r Scal(u(p)))`, a unit-modulus phase since `Scal(u)` is imaginary.
pub fn u1_phase(u: &GaugeParamField, p: &Point, r: CouplingR) -> ComplexScalar {
    scalar_exp(u.field().eval(p).scal() * r.0)
}

/// `β(p) exp(r Scal(u(p)))`
pub fn transform_beta_gauge_at(
    beta: &PolyField,
    u: &GaugeParamField,
    p: &Point,
    r: CouplingR,
) -> Result<CplxOcton> {
    require_field(beta, Grade::B, "beta")?;
    Ok(beta.eval(p) * u1_phase(u, p, r))
}

/// `|⟨α′*, ē^ρ ∂_ρ α′⟩ − ⟨α*, ē^ρ ∂_ρ α⟩|` at `p` for the global
/// transformation `α′ = α exp(−u)`.
///
/// `u` only has to lie in `C⊗A`; it is invariant exactly when `u ∈ (C⊗A)⁻`.
pub fn global_alpha_invariance_residual(
    alpha: &PolyField,
    u: &CplxOcton,
    p: &Point,
) -> Result<f64> {
    require_field(alpha, Grade::A, "alpha")?;
    grading::require(u, SubspaceTag::A, "u")?;
    let gauge_inv = exp_a(&-*u);
    let primed = alpha.map_coefficients(|c| *c * gauge_inv);
    let before = dirac_scalar_unchecked(alpha, p);
    let after = dirac_scalar_unchecked(&primed, p);
    Ok(modulus(after - before))
}

/// `‖D′_ρ α′ − (D_ρ α) U⁻¹‖` at `p` for a local transformation.
pub fn covariance_residual_alpha(
    alpha: &PolyField,
    w: &ConnectionField,
    u: &GaugeParamField,
    rho: Idx,
    p: &Point,
) -> Result<f64> {
    let unprimed = cov_der_alpha_at(alpha, w, rho, p)?;
    let (value, du) = u.value_and_partial(rho, p);
    let gauge_inv = exp_a(&-value);
    let d_gauge_inv = dexp_series(&-value, &-du);

    let a = alpha.eval(p);
    let da = alpha.partial(rho).eval(p);
    let a_primed = a * gauge_inv;
    let da_primed = da * gauge_inv + a * d_gauge_inv;
    let w_primed = transform_w_at(w, u, rho, p);

    let primed = da_primed - a_primed * w_primed;
    Ok((primed - unprimed * gauge_inv).magnitude())
}

/// `‖D′_ρ β′ − (D_ρ β) exp(r Scal(u))‖` at `p` for a local transformation.
pub fn covariance_residual_beta(
    beta: &PolyField,
    w: &ConnectionField,
    u: &GaugeParamField,
    rho: Idx,
    p: &Point,
    r: CouplingR,
) -> Result<f64> {
    let unprimed = cov_der_beta_at(beta, w, rho, p, r)?;
    let (value, du) = u.value_and_partial(rho, p);
    let phase = scalar_exp(value.scal() * r.0);
    let d_phase = phase * du.scal() * r.0;

    let b = beta.eval(p);
    let db = beta.partial(rho).eval(p);
    let b_primed = b * phase;
    let db_primed = db * phase + b * d_phase;
    let w_primed = transform_w_at(w, u, rho, p);

    let primed = db_primed + b_primed * (w_primed.scal() * r.0);
    Ok((primed - unprimed * phase).magnitude())
}

/// `⟨1, (∂_μ U) U⁻¹⟩ − ⟨1, ∂_μ u⟩`
pub fn scal_der_u_residual(u: &GaugeParamField, mu: Idx, p: &Point) -> ComplexScalar {
    let (value, du) = u.value_and_partial(mu, p);
    let lhs = CplxOcton::ONE.inner(&(dexp_series(&value, &du) * exp_a(&-value)));
    lhs - CplxOcton::ONE.inner(&du)
}

/// `Scal(W′_ρ − W_ρ) + Scal(∂_ρ u)`
pub fn scal_ww_residual(
    w: &ConnectionField,
    u: &GaugeParamField,
    rho: Idx,
    p: &Point,
) -> ComplexScalar {
    let shift = transform_w_at(w, u, rho, p) - w.at(rho, p);
    shift.scal() + u.field().partial(rho).eval(p).scal()
}

/// `‖[Λ̄*_S, r₁W + r₂W̄, β]‖`: the obstruction to Lorentz covariance of the
/// general coupling `r₁ Wβ + r₂ βW`. It vanishes for every `θ` and `β` only
/// when `r₁ = r₂`.
pub fn general_coupling_residual(
    r1: f64,
    r2: f64,
    theta: &Theta,
    w: &CplxOcton,
    beta: &CplxOcton,
) -> Result<f64> {
    grading::require(w, SubspaceTag::AMinus, "w")?;
    grading::require(beta, SubspaceTag::B, "beta")?;
    let lambda_bar_star = lambda_s(theta).conj_both();
    let mixed = *w * r1 + w.conj_oct() * r2;
    Ok(associator(&lambda_bar_star, &mixed, beta).magnitude())
}

/// Fixed inputs for which unequal couplings visibly break associativity.
pub fn general_coupling_witness() -> (Theta, CplxOcton, CplxOcton) {
    let theta = Theta::single(1, 2, 0.9).with(0, 3, 0.4).with(2, 3, -0.6);
    (theta, CplxOcton::basis(1), CplxOcton::basis(4))
}

/// A gauge parameter outside `(C⊗A)⁻` (`e1` plus a real scalar) and a spinor
/// field for which the global α bilinear is visibly not invariant.
pub fn global_alpha_witness() -> (PolyField, CplxOcton, Point) {
    let alpha = PolyField::from_terms([
        (
            [0, 0, 0, 0],
            CplxOcton::basis(2) + CplxOcton::scalar(Complex64::new(0.3, 0.2)),
        ),
        (
            [1, 0, 0, 0],
            CplxOcton::basis(1) * Complex64::new(0.5, -0.4),
        ),
        (
            [0, 1, 0, 0],
            CplxOcton::basis(3) * 0.7 + CplxOcton::real(0.1),
        ),
        (
            [0, 0, 1, 1],
            CplxOcton::basis(2) * Complex64::new(-0.2, 0.6),
        ),
    ])
    .with_tag(SubspaceTag::A)
    .expect("witness coefficients lie in C⊗A");
    let u = CplxOcton::basis(1) + CplxOcton::ONE;
    (alpha, u, Point::new([0.4, -0.3, 0.8, 0.5]))
}
