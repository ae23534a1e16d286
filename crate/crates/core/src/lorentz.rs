//! Lorentz generators in the spinor (`C⊗A`) and vector (`M₄`) pictures.
//!
//! The Lorentz-invariant basis of `C⊗A` is `e_μ = (i, e1, e2, e3)`, with
//! `⟨e_μ, e_ν⟩ = η_μν` for `η = diag(−1, 1, 1, 1)`. Indices are raised with
//! `η`, so `e⁰ = −e₀ = −i`.

use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
use rand::Rng;

use crate::error::Result;
use crate::grading::{require, SubspaceTag};
use crate::octonion::{modulus, ComplexScalar, CplxOcton, I};

/// Spacetime index `0..=3`.
pub type Idx = usize;

pub const METRIC: [f64; 4] = [-1.0, 1.0, 1.0, 1.0];

/// `η_μν` (numerically equal to `η^μν`).
#[inline]
pub fn eta(mu: Idx, nu: Idx) -> f64 {
    if mu == nu {
        METRIC[mu]
    } else {
        0.0
    }
}

#[inline]
fn delta(mu: Idx, nu: Idx) -> f64 {
    if mu == nu {
        1.0
    } else {
        0.0
    }
}

/// The basis `e_μ` together with its raised and conjugated variants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzBasis {
    pub lower: [CplxOcton; 4],
    pub upper: [CplxOcton; 4],
}

impl LorentzBasis {
    pub fn new() -> Self {
        let lower = [
            CplxOcton::I,
            CplxOcton::basis(1),
            CplxOcton::basis(2),
            CplxOcton::basis(3),
        ];
        let mut upper = lower;
        for (mu, e) in upper.iter_mut().enumerate() {
            *e = *e * METRIC[mu];
        }
        LorentzBasis { lower, upper }
    }

    /// `ē^ρ`
    pub fn bar_upper(&self, rho: Idx) -> CplxOcton {
        self.upper[rho].conj_oct()
    }

    pub fn bar_lower(&self, rho: Idx) -> CplxOcton {
        self.lower[rho].conj_oct()
    }
}

impl Default for LorentzBasis {
    fn default() -> Self {
        Self::new()
    }
}

/// Complex 4×4 matrix, indexed `[row][col]` as `(M)^ρ_σ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4C(pub [[ComplexScalar; 4]; 4]);

impl Mat4C {
    pub const ZERO: Mat4C = Mat4C([[Complex64::new(0.0, 0.0); 4]; 4]);

    pub fn identity() -> Self {
        let mut m = Self::ZERO;
        for k in 0..4 {
            m.0[k][k] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_real(r: [[f64; 4]; 4]) -> Self {
        let mut m = Self::ZERO;
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = Complex64::new(r[i][j], 0.0);
            }
        }
        m
    }

    pub fn metric() -> Self {
        let mut m = Self::ZERO;
        for k in 0..4 {
            m.0[k][k] = Complex64::new(METRIC[k], 0.0);
        }
        m
    }

    pub fn scale(mut self, s: ComplexScalar) -> Self {
        for row in self.0.iter_mut() {
            for z in row.iter_mut() {
                *z *= s;
            }
        }
        self
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::ZERO;
        for i in 0..4 {
            for j in 0..4 {
                t.0[i][j] = self.0[j][i];
            }
        }
        t
    }

    /// Maximum absolute column sum.
    pub fn norm_1(&self) -> f64 {
        (0..4)
            .map(|j| (0..4).map(|i| modulus(self.0[i][j])).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|row| row.iter())
            .map(|z| modulus(*z))
            .fold(0.0, f64::max)
    }

    pub fn real_part(&self) -> [[f64; 4]; 4] {
        let mut r = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                r[i][j] = self.0[i][j].re;
            }
        }
        r
    }

    /// Largest imaginary part over all entries.
    pub fn max_imag(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|row| row.iter())
            .map(|z| z.im.abs())
            .fold(0.0, f64::max)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn apply(&self, v: [f64; 4]) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|j| self.0[i][j].re * v[j]).sum();
        }
        out
    }
}

impl Index<(usize, usize)> for Mat4C {
    type Output = ComplexScalar;

    fn index(&self, (i, j): (usize, usize)) -> &ComplexScalar {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat4C {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ComplexScalar {
        &mut self.0[i][j]
    }
}

impl Mul for Mat4C {
    type Output = Mat4C;

    fn mul(self, rhs: Mat4C) -> Mat4C {
        let mut out = Mat4C::ZERO;
        for i in 0..4 {
            for k in 0..4 {
                let a = self.0[i][k];
                for j in 0..4 {
                    out.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        out
    }
}

impl Add for Mat4C {
    type Output = Mat4C;

    fn add(mut self, rhs: Mat4C) -> Mat4C {
        for i in 0..4 {
            for j in 0..4 {
                self.0[i][j] += rhs.0[i][j];
            }
        }
        self
    }
}

impl Sub for Mat4C {
    type Output = Mat4C;

    fn sub(self, rhs: Mat4C) -> Mat4C {
        self + (-rhs)
    }
}

impl Neg for Mat4C {
    type Output = Mat4C;

    fn neg(self) -> Mat4C {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

const SQUARING_THRESHOLD: f64 = 0.5;
const TAYLOR_TERMS: usize = 18;

/// Matrix exponential by scaling and squaring around a truncated Taylor series.
pub fn mat_exp(m: &Mat4C) -> Mat4C {
    let mut squarings = 0u32;
    let mut factor = 1.0;
    let mut norm = m.norm_1();
    while norm > SQUARING_THRESHOLD {
        norm *= 0.5;
        factor *= 0.5;
        squarings += 1;
    }
    let scaled = m.scale(Complex64::new(factor, 0.0));

    // Horner evaluation of Σ_{k ≤ N} A^k / k!
    let mut acc = Mat4C::identity();
    for k in (1..=TAYLOR_TERMS).rev() {
        acc = Mat4C::identity() + (scaled * acc).scale(Complex64::new(1.0 / k as f64, 0.0));
    }
    for _ in 0..squarings {
        acc = acc * acc;
    }
    acc
}

/// Antisymmetric real parameters `θ^{μν}` of a Lorentz transformation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theta([[f64; 4]; 4]);

impl Theta {
    pub const ZERO: Theta = Theta([[0.0; 4]; 4]);

    /// Accepts a matrix only if it is exactly antisymmetric.
    pub fn from_matrix(m: [[f64; 4]; 4]) -> Option<Self> {
        for i in 0..4 {
            for j in 0..4 {
                if m[i][j] != -m[j][i] || !m[i][j].is_finite() {
                    return None;
                }
            }
        }
        Some(Theta(m))
    }

    /// Sets `θ^{μν} = value` and `θ^{νμ} = −value`.
    ///
    /// Panics if `mu == nu` and `value != 0`.
    pub fn with(mut self, mu: Idx, nu: Idx, value: f64) -> Self {
        assert!(mu != nu || value == 0.0, "θ has zero diagonal");
        if mu != nu {
            self.0[mu][nu] = value;
            self.0[nu][mu] = -value;
        }
        self
    }

    pub fn single(mu: Idx, nu: Idx, value: f64) -> Self {
        Self::ZERO.with(mu, nu, value)
    }

    /// Six independent components uniform in `[−bound, bound]`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, bound: f64) -> Self {
        let mut t = Self::ZERO;
        for mu in 0..4 {
            for nu in mu + 1..4 {
                t = t.with(mu, nu, rng.gen_range(-bound..=bound));
            }
        }
        t
    }

    /// Rotation-only draw: `θ^{0i} = 0`.
    pub fn random_rotation<R: Rng + ?Sized>(rng: &mut R, bound: f64) -> Self {
        let mut t = Self::ZERO;
        for mu in 1..4 {
            for nu in mu + 1..4 {
                t = t.with(mu, nu, rng.gen_range(-bound..=bound));
            }
        }
        t
    }

    pub fn get(&self, mu: Idx, nu: Idx) -> f64 {
        self.0[mu][nu]
    }

    pub fn as_matrix(&self) -> &[[f64; 4]; 4] {
        &self.0
    }

    pub fn negated(&self) -> Self {
        let mut t = *self;
        for row in t.0.iter_mut() {
            for v in row.iter_mut() {
                *v = -*v;
            }
        }
        t
    }
}

/// Spinor generator `S_μν`, defined by `4i S_μν = e_μ ē_ν − e_ν ē_μ`.
pub fn s_gen(mu: Idx, nu: Idx) -> CplxOcton {
    let b = LorentzBasis::new();
    let two_sided = b.lower[mu] * b.bar_lower(nu) - b.lower[nu] * b.bar_lower(mu);
    two_sided * Complex64::new(0.0, -0.25)
}

/// Vector generator with `i (V_μν)^ρ_σ = δ^ρ_μ η_νσ − δ^ρ_ν η_μσ`.
pub fn v_gen(mu: Idx, nu: Idx) -> Mat4C {
    let mut m = Mat4C::ZERO;
    for rho in 0..4 {
        for sigma in 0..4 {
            let real = delta(rho, mu) * eta(nu, sigma) - delta(rho, nu) * eta(mu, sigma);
            m.0[rho][sigma] = Complex64::new(0.0, -real);
        }
    }
    m
}

/// `−(i/2) θ^{μν} S_μν`, summed over all ordered index pairs.
pub fn spinor_generator(theta: &Theta) -> CplxOcton {
    let mut acc = CplxOcton::ZERO;
    for mu in 0..4 {
        for nu in 0..4 {
            let t = theta.get(mu, nu);
            if t != 0.0 {
                acc += s_gen(mu, nu) * t;
            }
        }
    }
    acc * Complex64::new(0.0, -0.5)
}

/// `−(i/2) θ^{μν} V_μν`
pub fn vector_generator(theta: &Theta) -> Mat4C {
    let mut acc = Mat4C::ZERO;
    for mu in 0..4 {
        for nu in 0..4 {
            let t = theta.get(mu, nu);
            if t != 0.0 {
                acc = acc + v_gen(mu, nu).scale(Complex64::new(t, 0.0));
            }
        }
    }
    acc.scale(Complex64::new(0.0, -0.5))
}

/// `Λ_S = exp(−(i/2) θ^{μν} S_μν) ∈ C⊗A`.
pub fn lambda_s(theta: &Theta) -> CplxOcton {
    spinor_generator(theta)
        .exp_assoc()
        .expect("spinor generators lie in C⊗A")
}

/// `Λ_V = exp(−(i/2) θ^{μν} V_μν)`, real up to rounding.
pub fn lambda_v(theta: &Theta) -> Mat4C {
    mat_exp(&vector_generator(theta))
}

/// Largest entry of `Λᵀ η Λ − η`.
pub fn metric_residual(lambda: &Mat4C) -> f64 {
    (lambda.transpose() * Mat4C::metric() * *lambda - Mat4C::metric()).max_abs()
}

/// `max_ρ ‖Λ̄*_S ē^ρ Λ_S − (Λ_V)^ρ_σ ē^σ‖`
pub fn double_cover_residual(theta: &Theta) -> f64 {
    let basis = LorentzBasis::new();
    let ls = lambda_s(theta);
    let ls_bar_star = ls.conj_both();
    let lv = lambda_v(theta);
    (0..4)
        .map(|rho| {
            let lhs = (ls_bar_star * basis.bar_upper(rho)) * ls;
            let rhs = (0..4).fold(CplxOcton::ZERO, |acc, sigma| {
                acc + basis.bar_upper(sigma) * lv[(rho, sigma)]
            });
            (lhs - rhs).magnitude()
        })
        .fold(0.0, f64::max)
}

/// `−i[S_μν, S_ρσ] − (η_μρ S_νσ − η_μσ S_νρ − η_νρ S_μσ + η_νσ S_μρ)`
pub fn lorentz_algebra_residual(mu: Idx, nu: Idx, rho: Idx, sigma: Idx) -> CplxOcton {
    let lhs = s_gen(mu, nu).commutator(&s_gen(rho, sigma)) * (-I);
    let rhs = s_gen(nu, sigma) * eta(mu, rho)
        - s_gen(nu, rho) * eta(mu, sigma)
        - s_gen(mu, sigma) * eta(nu, rho)
        + s_gen(mu, rho) * eta(nu, sigma);
    lhs - rhs
}

/// Same structure constants, for the matrix generators.
pub fn vector_algebra_residual(mu: Idx, nu: Idx, rho: Idx, sigma: Idx) -> Mat4C {
    let lhs = v_gen(mu, nu).commutator(&v_gen(rho, sigma)).scale(-I);
    let rhs = v_gen(nu, sigma).scale(eta(mu, rho).into())
        - v_gen(nu, rho).scale(eta(mu, sigma).into())
        - v_gen(mu, sigma).scale(eta(nu, rho).into())
        + v_gen(mu, rho).scale(eta(nu, sigma).into());
    lhs - rhs
}

/// `S*_μν ē^ρ + ē^ρ S_μν − (V_μν)^ρ_σ ē^σ`
pub fn infinitesimal_dc_residual(mu: Idx, nu: Idx, rho: Idx) -> CplxOcton {
    let basis = LorentzBasis::new();
    let s = s_gen(mu, nu);
    let e_bar = basis.bar_upper(rho);
    let lhs = s.conj_complex() * e_bar + e_bar * s;
    let v = v_gen(mu, nu);
    let rhs = (0..4).fold(CplxOcton::ZERO, |acc, sigma| {
        acc + basis.bar_upper(sigma) * v[(rho, sigma)]
    });
    lhs - rhs
}

/// `α′ = Λ α`
pub fn transform_alpha(lambda: &CplxOcton, alpha: &CplxOcton) -> Result<CplxOcton> {
    require(lambda, SubspaceTag::A, "lambda")?;
    require(alpha, SubspaceTag::A, "alpha")?;
    Ok(*lambda * *alpha)
}

/// `β′ = Λ̄* β`, which equals `β Λ*` because `ab = b ā` across the grading.
pub fn transform_beta(lambda: &CplxOcton, beta: &CplxOcton) -> Result<CplxOcton> {
    require(lambda, SubspaceTag::A, "lambda")?;
    require(beta, SubspaceTag::B, "beta")?;
    let out = lambda.conj_both() * *beta;
    debug_assert!({
        let right = *beta * lambda.conj_complex();
        (out - right).magnitude() <= 1e-12 * f64::max(1.0, out.magnitude())
    });
    Ok(out)
}

/// `−i e⁰ ē¹ e² ē³`, associated left to right. Equals 1.
pub fn gamma5_analogue() -> CplxOcton {
    let b = LorentzBasis::new();
    gamma5_chain(&b.upper) * (-I)
}

/// The lowered-index chain `−i e₀ ē₁ e₂ ē₃`, which picks up `η₀₀ = −1`.
pub fn gamma5_lowered() -> CplxOcton {
    let b = LorentzBasis::new();
    gamma5_chain(&b.lower) * (-I)
}

/// `e⁰ ē¹ e² ē³` without the prefactor.
pub fn gamma5_chain(e: &[CplxOcton; 4]) -> CplxOcton {
    ((e[0] * e[1].conj_oct()) * e[2]) * e[3].conj_oct()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::associator;
    use core::f64::consts::{FRAC_PI_2, PI};

    fn e(k: usize) -> CplxOcton {
        CplxOcton::basis(k)
    }

    #[test]
    fn basis_is_minus_self_conjugate_and_orthonormal() {
        let b = LorentzBasis::new();
        for mu in 0..4 {
            assert_eq!(b.lower[mu].conj_both(), -b.lower[mu]);
            for nu in 0..4 {
                assert_eq!(b.lower[mu].inner(&b.lower[nu]), eta(mu, nu).into());
            }
        }
        assert_eq!(b.upper[0], -CplxOcton::I);
    }

    #[test]
    fn spinor_generators() {
        assert!(s_gen(1, 2).approx_eq(&(e(3) * (I * 0.5)), 1e-16));
        assert!(s_gen(0, 1).approx_eq(&(e(1) * -0.5), 1e-16));
        for mu in 0..4 {
            assert_eq!(s_gen(mu, mu), CplxOcton::ZERO);
            for nu in 0..4 {
                assert_eq!(s_gen(mu, nu), -s_gen(nu, mu));
                assert_eq!(s_gen(mu, nu).scal(), Complex64::new(0.0, 0.0));
            }
        }
    }

    #[test]
    fn vector_generators() {
        assert_eq!(v_gen(0, 1)[(0, 1)], Complex64::new(0.0, -1.0));
        for mu in 0..4 {
            assert_eq!(v_gen(mu, mu), Mat4C::ZERO);
            for nu in 0..4 {
                let v = v_gen(mu, nu);
                assert!(v.0.iter().flatten().all(|z| z.re == 0.0));
                assert_eq!(v, -v_gen(nu, mu));
            }
        }
    }

    #[test]
    fn vector_generators_share_structure_constants() {
        for t in 0..256 {
            let (mu, nu, rho, sigma) = (t / 64, (t / 16) % 4, (t / 4) % 4, t % 4);
            assert!(vector_algebra_residual(mu, nu, rho, sigma).max_abs() < 1e-15);
        }
    }

    #[test]
    fn mat_exp_basics() {
        assert_eq!(mat_exp(&Mat4C::ZERO), Mat4C::identity());
        let phi = 0.83;
        let mut g = Mat4C::ZERO;
        g[(1, 2)] = Complex64::new(phi, 0.0);
        g[(2, 1)] = Complex64::new(-phi, 0.0);
        let r = mat_exp(&g);
        assert!((r[(1, 1)].re - phi.cos()).abs() < 1e-15);
        assert!((r[(1, 2)].re - phi.sin()).abs() < 1e-15);
        assert!((r[(2, 1)].re + phi.sin()).abs() < 1e-15);
        assert!((r[(2, 2)].re - phi.cos()).abs() < 1e-15);
        let big = vector_generator(&Theta::single(0, 2, 3.0).with(1, 3, -2.0));
        let prod = mat_exp(&big) * mat_exp(&-big);
        assert!((prod - Mat4C::identity()).max_abs() < 1e-10);
    }

    #[test]
    fn theta_rejects_non_antisymmetric() {
        let mut m = [[0.0; 4]; 4];
        m[0][1] = 1.0;
        assert!(Theta::from_matrix(m).is_none());
        m[1][0] = -1.0;
        assert!(Theta::from_matrix(m).is_some());
    }

    #[test]
    fn identity_transformations() {
        assert_eq!(lambda_s(&Theta::ZERO), CplxOcton::ONE);
        assert_eq!(lambda_v(&Theta::ZERO), Mat4C::identity());
        assert_eq!(double_cover_residual(&Theta::ZERO), 0.0);
    }

    #[test]
    fn rotation_in_the_12_plane() {
        let phi = 0.9;
        let theta = Theta::single(1, 2, phi);
        let ls = lambda_s(&theta);
        let expected = CplxOcton::real((phi / 2.0).cos()) + e(3) * (phi / 2.0).sin();
        assert!(ls.approx_eq(&expected, 1e-15));
        let lv = lambda_v(&theta);
        assert!((lv[(1, 1)].re - phi.cos()).abs() < 1e-14);
        assert!((lv[(2, 2)].re - phi.cos()).abs() < 1e-14);
        assert!((lv[(1, 2)].re + phi.sin()).abs() < 1e-14);
        assert!((lv[(2, 1)].re - phi.sin()).abs() < 1e-14);
        assert!((lv[(0, 0)].re - 1.0).abs() < 1e-14);
        assert!(lv.max_imag() < 1e-15);
    }

    #[test]
    fn boost_along_x() {
        let chi = 0.7;
        let theta = Theta::single(0, 1, chi);
        let lv = lambda_v(&theta);
        assert!((lv[(0, 0)].re - chi.cosh()).abs() < 1e-14);
        assert!((lv[(1, 1)].re - chi.cosh()).abs() < 1e-14);
        assert!((lv[(0, 1)].re.abs() - chi.sinh()).abs() < 1e-14);
        assert!((lv[(1, 0)].re - lv[(0, 1)].re).abs() < 1e-14);
        let ls = lambda_s(&theta);
        assert!((ls.norm() - 1.0).norm() < 1e-14);
        assert!(ls.conj_both().approx_eq(&ls, 1e-15));
        assert!(metric_residual(&lv) < 1e-14);
    }

    #[test]
    fn double_cover_quarter_turn() {
        assert!(double_cover_residual(&Theta::single(1, 2, FRAC_PI_2)) < 1e-10);
    }

    #[test]
    fn lorentz_algebra_spot_checks() {
        assert!(lorentz_algebra_residual(1, 2, 2, 3).magnitude() < 1e-15);
        assert!(lorentz_algebra_residual(0, 1, 0, 1).magnitude() < 1e-15);
        assert_eq!(s_gen(0, 1).commutator(&s_gen(0, 1)), CplxOcton::ZERO);
        assert!(infinitesimal_dc_residual(1, 2, 3).magnitude() < 1e-15);
        for mu in 0..4 {
            for rho in 0..4 {
                assert_eq!(infinitesimal_dc_residual(mu, mu, rho), CplxOcton::ZERO);
            }
        }
    }

    #[test]
    fn full_turn_flips_spinor_sign() {
        let ls = lambda_s(&Theta::single(1, 2, 2.0 * PI));
        assert!(ls.approx_eq(&-CplxOcton::ONE, 1e-15));
        let alpha = e(1) * 0.3 + CplxOcton::scalar(Complex64::new(0.2, -0.5));
        let out = transform_alpha(&ls, &alpha).unwrap();
        assert!(out.approx_eq(&-alpha, 1e-15));
    }

    #[test]
    fn transform_identity_and_domain() {
        let beta = e(5) + e(7) * I;
        assert_eq!(transform_beta(&CplxOcton::ONE, &beta).unwrap(), beta);
        assert_eq!(transform_alpha(&CplxOcton::ONE, &e(2)).unwrap(), e(2));
        assert!(transform_beta(&CplxOcton::ONE, &e(1)).is_err());
        assert!(transform_alpha(&e(4), &e(1)).is_err());
    }

    #[test]
    fn beta_law_composes() {
        let l1 = lambda_s(&Theta::single(0, 2, 0.4).with(1, 3, -0.8));
        let l2 = lambda_s(&Theta::single(2, 3, 1.1).with(0, 1, 0.3));
        let beta = e(4) * Complex64::new(0.3, 0.1) + e(6) * -0.7;
        let twice = transform_beta(&l2, &transform_beta(&l1, &beta).unwrap()).unwrap();
        let once = transform_beta(&(l2 * l1), &beta).unwrap();
        assert!(twice.approx_eq(&once, 1e-14));
    }

    #[test]
    fn gamma5() {
        assert!(gamma5_analogue().approx_eq(&CplxOcton::ONE, 1e-14));
        let b = LorentzBasis::new();
        assert!(gamma5_chain(&b.upper).approx_eq(&CplxOcton::I, 1e-14));
        assert!(gamma5_lowered().approx_eq(&-CplxOcton::ONE, 1e-14));
        // bracketing is immaterial: all factors sit in C⊗A
        let (x, y, z) = (b.upper[0] * b.bar_upper(1), b.upper[2], b.bar_upper(3));
        assert_eq!(associator(&x, &y, &z), CplxOcton::ZERO);
    }
}
