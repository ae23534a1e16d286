//! Spacetime-dependent quantities modelled as polynomials in `x⁰…x³` with
//! `C⊗O` coefficients.
//!
//! Polynomials keep differentiation and linear changes of coordinates exact,
//! so any residual left over in an invariance check is floating error in the
//! algebra rather than discretisation error.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::f64::consts::SQRT_2;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::grading::{self, Grade, SubspaceTag};
use crate::lorentz::{lambda_s, lambda_v, Idx, LorentzBasis, Theta};
use crate::octonion::{modulus, ComplexScalar, CplxOcton};

/// Exponents `(d₀, d₁, d₂, d₃)` of a monomial `Π (x^μ)^{d_μ}`.
pub type Monomial = [u32; 4];

/// Truncation threshold for the series behind [`dexp_at`].
pub const DEXP_TAIL: f64 = 1e-14;
const DEXP_MAX_TERMS: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: [f64; 4],
}

impl Point {
    pub const ORIGIN: Point = Point { x: [0.0; 4] };

    pub const fn new(x: [f64; 4]) -> Self {
        Point { x }
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R, bound: f64) -> Self {
        let mut x = [0.0; 4];
        for v in x.iter_mut() {
            *v = rng.gen_range(-bound..=bound);
        }
        Point { x }
    }
}

fn total_degree(m: &Monomial) -> u32 {
    m.iter().sum()
}

/// All monomials of total degree `≤ degree`, in lexicographic order.
pub fn monomials_up_to(degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d0 in 0..=degree {
        for d1 in 0..=degree - d0 {
            for d2 in 0..=degree - d0 - d1 {
                for d3 in 0..=degree - d0 - d1 - d2 {
                    out.push([d0, d1, d2, d3]);
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolyField {
    terms: BTreeMap<Monomial, CplxOcton>,
    max_total_degree: u32,
    tag: Option<SubspaceTag>,
}

impl PolyField {
    pub fn zero(max_total_degree: u32) -> Self {
        PolyField {
            terms: BTreeMap::new(),
            max_total_degree,
            tag: None,
        }
    }

    pub fn constant(c: CplxOcton) -> Self {
        Self::zero(0).plus_term([0; 4], c)
    }

    pub fn monomial(exponents: Monomial, c: CplxOcton) -> Self {
        Self::zero(total_degree(&exponents)).plus_term(exponents, c)
    }

    /// Builds a field from `(exponents, coefficient)` pairs; repeated
    /// monomials are summed. The degree bound is the largest degree seen.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, CplxOcton)>,
    {
        terms
            .into_iter()
            .fold(Self::zero(0), |f, (m, c)| f.plus_term(m, c))
    }

    fn plus_term(mut self, m: Monomial, c: CplxOcton) -> Self {
        self.max_total_degree = self.max_total_degree.max(total_degree(&m));
        *self.terms.entry(m).or_insert(CplxOcton::ZERO) += c;
        self
    }

    /// Random field with every monomial of degree `≤ degree`, coefficients
    /// drawn from the tagged subspace. The result carries the tag.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, degree: u32, tag: SubspaceTag, bound: f64) -> Self {
        let terms = monomials_up_to(degree)
            .into_iter()
            .map(|m| (m, grading::sample_with(rng, tag, bound)))
            .collect();
        PolyField {
            terms,
            max_total_degree: degree,
            tag: Some(tag),
        }
    }

    /// Attaches a subspace tag after checking every coefficient against it.
    pub fn with_tag(mut self, tag: SubspaceTag) -> Result<Self> {
        for c in self.terms.values() {
            grading::require(c, tag, "field coefficient")?;
        }
        self.tag = Some(tag);
        Ok(self)
    }

    pub fn tag(&self) -> Option<SubspaceTag> {
        self.tag
    }

    pub fn max_total_degree(&self) -> u32 {
        self.max_total_degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CplxOcton)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> CplxOcton {
        self.terms.get(m).copied().unwrap_or(CplxOcton::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|c| *c == CplxOcton::ZERO)
    }

    /// Applies `f` to every coefficient. The tag is dropped, since `f` need
    /// not preserve the subspace; re-attach it with [`PolyField::with_tag`].
    pub fn map_coefficients(&self, f: impl Fn(&CplxOcton) -> CplxOcton) -> Self {
        PolyField {
            terms: self.terms.iter().map(|(m, c)| (*m, f(c))).collect(),
            max_total_degree: self.max_total_degree,
            tag: None,
        }
    }

    pub fn scaled(&self, s: f64) -> Self {
        let mut out = self.map_coefficients(|c| *c * s);
        out.tag = self.tag;
        out
    }

    pub fn eval(&self, p: &Point) -> CplxOcton {
        let d = self.max_total_degree as usize;
        let mut table: Vec<[f64; 4]> = Vec::with_capacity(d + 1);
        table.push([1.0; 4]);
        for k in 1..=d {
            let prev = table[k - 1];
            table.push([
                prev[0] * p.x[0],
                prev[1] * p.x[1],
                prev[2] * p.x[2],
                prev[3] * p.x[3],
            ]);
        }
        self.terms.iter().fold(CplxOcton::ZERO, |acc, (m, c)| {
            let w = table[m[0] as usize][0]
                * table[m[1] as usize][1]
                * table[m[2] as usize][2]
                * table[m[3] as usize][3];
            acc + *c * w
        })
    }

    /// Exact `∂_μ f`. The tag is kept: differentiation is linear.
    pub fn partial(&self, mu: Idx) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m[mu] == 0 {
                continue;
            }
            let mut lowered = *m;
            lowered[mu] -= 1;
            terms.insert(lowered, *c * f64::from(m[mu]));
        }
        PolyField {
            terms,
            max_total_degree: self.max_total_degree.saturating_sub(1),
            tag: self.tag,
        }
    }

    /// `x ↦ f(M x)` for a real matrix `M`, expanded exactly.
    pub fn pullback_linear(&self, m: &[[f64; 4]; 4]) -> Self {
        // (Mx)^μ as a real linear polynomial, and its powers on demand
        let linear: [RealPoly; 4] = core::array::from_fn(|mu| {
            let mut p = RealPoly::new();
            for nu in 0..4 {
                if m[mu][nu] != 0.0 {
                    let mut e = [0u32; 4];
                    e[nu] = 1;
                    p.insert(e, m[mu][nu]);
                }
            }
            p
        });
        let d = self.max_total_degree as usize;
        let powers: [Vec<RealPoly>; 4] = core::array::from_fn(|mu| {
            let mut list = Vec::with_capacity(d + 1);
            list.push(RealPoly::from([([0u32; 4], 1.0)]));
            for k in 1..=d {
                let next = real_poly_mul(&list[k - 1], &linear[mu]);
                list.push(next);
            }
            list
        });

        let mut terms: BTreeMap<Monomial, CplxOcton> = BTreeMap::new();
        for (mono, c) in &self.terms {
            let mut expanded = powers[0][mono[0] as usize].clone();
            for mu in 1..4 {
                expanded = real_poly_mul(&expanded, &powers[mu][mono[mu] as usize]);
            }
            for (e, w) in expanded {
                *terms.entry(e).or_insert(CplxOcton::ZERO) += *c * w;
            }
        }
        PolyField {
            terms,
            max_total_degree: self.max_total_degree,
            tag: self.tag,
        }
    }
}

type RealPoly = BTreeMap<Monomial, f64>;

fn real_poly_mul(a: &RealPoly, b: &RealPoly) -> RealPoly {
    let mut out = RealPoly::new();
    for (ea, wa) in a {
        for (eb, wb) in b {
            let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
            *out.entry(e).or_insert(0.0) += wa * wb;
        }
    }
    out
}

fn require_graded(f: &PolyField) -> Result<Grade> {
    f.tag
        .and_then(SubspaceTag::grade)
        .ok_or(Error::UntaggedField { expected: "A or B" })
}

/// `Σ_ρ ⟨f(p)*, ē^ρ ∂_ρ f(p)⟩`, the kinetic bilinear of a spinor field.
pub fn dirac_scalar(f: &PolyField, p: &Point) -> Result<ComplexScalar> {
    require_graded(f)?;
    Ok(dirac_scalar_unchecked(f, p))
}

pub(crate) fn dirac_scalar_unchecked(f: &PolyField, p: &Point) -> ComplexScalar {
    let basis = LorentzBasis::new();
    let value_star = f.eval(p).conj_complex();
    (0..4).fold(Complex64::new(0.0, 0.0), |acc, rho| {
        let d = f.partial(rho).eval(p);
        acc + value_star.inner(&(basis.bar_upper(rho) * d))
    })
}

/// Applies the Lorentz transformation `θ` to the spinor field `f` and returns
/// `|dirac_scalar(f′, Λ_V p) − dirac_scalar(f, p)|`.
///
/// An `A`-tagged field transforms as `Λ_S f(Λ_V⁻¹ x)`, a `B`-tagged one as
/// `Λ̄*_S f(Λ_V⁻¹ x)`.
pub fn lorentz_invariance_residual(f: &PolyField, theta: &Theta, p: &Point) -> Result<f64> {
    let grade = require_graded(f)?;
    let transformed = lorentz_transform_field(f, theta, grade);
    let moved = Point::new(lambda_v(theta).apply(p.x));
    let before = dirac_scalar_unchecked(f, p);
    let after = dirac_scalar_unchecked(&transformed, &moved);
    Ok(modulus(after - before))
}

/// The primed field of a Lorentz transformation; see [`lorentz_invariance_residual`].
pub fn lorentz_transform(f: &PolyField, theta: &Theta) -> Result<PolyField> {
    let grade = require_graded(f)?;
    Ok(lorentz_transform_field(f, theta, grade))
}

fn lorentz_transform_field(f: &PolyField, theta: &Theta, grade: Grade) -> PolyField {
    let ls = lambda_s(theta);
    let left = match grade {
        Grade::A => ls,
        Grade::B => ls.conj_both(),
    };
    let inverse = lambda_v(&theta.negated()).real_part();
    let mut out = f.pullback_linear(&inverse).map_coefficients(|c| left * *c);
    out.tag = f.tag;
    out
}

fn require_a_valued(u: &PolyField) -> Result<()> {
    match u.tag.and_then(SubspaceTag::grade) {
        Some(Grade::A) => Ok(()),
        _ => Err(Error::DomainViolation {
            argument: "u",
            expected: SubspaceTag::A,
        }),
    }
}

/// `exp(u(p))` for an `A`-valued field.
pub fn exp_field_at(u: &PolyField, p: &Point) -> Result<CplxOcton> {
    require_a_valued(u)?;
    u.eval(p).exp_assoc()
}

/// `∂_μ exp(u)` at `p`, from the series
/// `Σ_{m≥1} (1/m!) Σ_{l<m} u^l (∂_μ u) u^{m−l−1}`.
///
/// The inner sums obey `P_{m+1} = u P_m + (∂u) u^m`, which is exact because
/// everything lives in the associative `C⊗A`. Summation stops once the term
/// bound `(√2‖u‖)^{m−1} √2‖∂u‖ / (m−1)!` drops below [`DEXP_TAIL`]; the `√2`
/// per factor is the submultiplicativity constant of the coefficient norm on
/// `C⊗A ≅ M₂(C)`.
pub fn dexp_at(u: &PolyField, mu: Idx, p: &Point) -> Result<CplxOcton> {
    require_a_valued(u)?;
    let value = u.eval(p);
    let du = u.partial(mu).eval(p);
    Ok(dexp_series(&value, &du))
}

pub(crate) fn dexp_series(value: &CplxOcton, du: &CplxOcton) -> CplxOcton {
    let nu = SQRT_2 * value.magnitude();
    let nd = SQRT_2 * du.magnitude();
    let mut inner_sum = *du;
    let mut power = *value;
    let mut inv_factorial = 1.0;
    let mut bound = nd;
    let mut acc = CplxOcton::ZERO;
    for m in 1..=DEXP_MAX_TERMS {
        if m > 1 {
            bound *= nu / (m - 1) as f64;
        }
        if bound < DEXP_TAIL {
            break;
        }
        inv_factorial /= m as f64;
        acc += inner_sum * inv_factorial;
        inner_sum = *value * inner_sum + *du * power;
        power = power * *value;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::I;

    fn e(k: usize) -> CplxOcton {
        CplxOcton::basis(k)
    }

    #[test]
    fn constant_and_linear_eval() {
        let c = e(3) * Complex64::new(0.2, 1.0);
        let f = PolyField::constant(c);
        assert_eq!(f.eval(&Point::new([0.3, -2.0, 5.0, 1.0])), c);
        let g = PolyField::monomial([0, 1, 0, 0], e(2));
        assert_eq!(g.eval(&Point::new([0.0, 2.0, 0.0, 0.0])), e(2) * 2.0);
    }

    #[test]
    fn partial_of_constant_and_monomial() {
        assert!(PolyField::constant(e(1)).partial(2).is_zero());
        let g = PolyField::monomial([0, 1, 0, 0], e(2));
        let d = g.partial(1);
        assert_eq!(d.coefficient(&[0; 4]), e(2));
        assert_eq!(d.max_total_degree(), 0);
    }

    #[test]
    fn identity_pullback() {
        let mut id = [[0.0; 4]; 4];
        for k in 0..4 {
            id[k][k] = 1.0;
        }
        let f = PolyField::from_terms([([1, 0, 2, 0], e(1)), ([0, 0, 0, 1], e(5)), ([0; 4], e(0))]);
        assert_eq!(f.pullback_linear(&id), f);
    }

    #[test]
    fn rotation_pullback_of_linear_field() {
        let phi = 0.4f64;
        let mut m = [[0.0; 4]; 4];
        m[0][0] = 1.0;
        m[3][3] = 1.0;
        m[1][1] = phi.cos();
        m[1][2] = phi.sin();
        m[2][1] = -phi.sin();
        m[2][2] = phi.cos();
        let c = e(6) * I;
        let f = PolyField::monomial([0, 1, 0, 0], c);
        let g = f.pullback_linear(&m);
        assert!(g
            .coefficient(&[0, 1, 0, 0])
            .approx_eq(&(c * phi.cos()), 1e-16));
        assert!(g
            .coefficient(&[0, 0, 1, 0])
            .approx_eq(&(c * phi.sin()), 1e-16));
    }

    #[test]
    fn with_tag_validates() {
        let f = PolyField::from_terms([([0; 4], e(1)), ([1, 0, 0, 0], e(4))]);
        assert!(f.clone().with_tag(SubspaceTag::A).is_err());
        assert!(f.with_tag(SubspaceTag::FullCO).is_ok());
    }

    #[test]
    fn dirac_scalar_cases() {
        let constant = PolyField::constant(e(2)).with_tag(SubspaceTag::A).unwrap();
        assert_eq!(
            dirac_scalar(&constant, &Point::new([1.0, 2.0, 3.0, 4.0])).unwrap(),
            0.0.into()
        );

        // f = x⁰ e1 at p: ⟨(p⁰ e1)*, ē⁰ e1⟩ = p⁰ ⟨e1, −i e1⟩ = −i p⁰
        let f = PolyField::monomial([1, 0, 0, 0], e(1))
            .with_tag(SubspaceTag::A)
            .unwrap();
        let p = Point::new([0.6, 0.0, 0.0, 0.0]);
        let v = dirac_scalar(&f, &p).unwrap();
        assert!((v - Complex64::new(0.0, -0.6)).norm() < 1e-16);

        let untagged = PolyField::constant(e(2));
        assert!(matches!(
            dirac_scalar(&untagged, &p),
            Err(Error::UntaggedField { .. })
        ));
    }

    #[test]
    fn exp_of_imaginary_scalar_field() {
        // u = x⁰ i: ∂₀ exp(u) = i exp(i x⁰)
        let u = PolyField::monomial([1, 0, 0, 0], CplxOcton::I)
            .with_tag(SubspaceTag::AMinus)
            .unwrap();
        let p = Point::new([0.7, 0.1, -0.2, 0.3]);
        let d = dexp_at(&u, 0, &p).unwrap();
        let expected = CplxOcton::scalar(I * (I * 0.7).exp());
        assert!(d.approx_eq(&expected, 1e-14));
        let c = PolyField::constant(e(1)).with_tag(SubspaceTag::A).unwrap();
        assert_eq!(dexp_at(&c, 2, &p).unwrap(), CplxOcton::ZERO);
    }

    #[test]
    fn dexp_requires_a_values() {
        let b = PolyField::constant(e(5)).with_tag(SubspaceTag::B).unwrap();
        assert!(dexp_at(&b, 0, &Point::ORIGIN).is_err());
        assert!(exp_field_at(&PolyField::constant(e(1)), &Point::ORIGIN).is_err());
    }

    #[test]
    fn monomial_count() {
        assert_eq!(monomials_up_to(0).len(), 1);
        assert_eq!(monomials_up_to(2).len(), 15);
        assert_eq!(monomials_up_to(3).len(), 35);
    }
}
