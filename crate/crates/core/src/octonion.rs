//! Arithmetic of the complexified octonions `C⊗O`.
//!
//! An element is stored as eight complex coefficients over the basis
//! `(1, e1, …, e7)`. Complex scalars commute and associate with everything;
//! the octonion product is the bilinear extension of [`STRUCTURE_TABLE`].
//! Octonionic conjugation (`conj_oct`) negates `e1…e7` and leaves the
//! complex coefficients alone, complex conjugation (`conj_complex`) does the
//! opposite.

use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grading::{self, SubspaceTag};
use crate::table::STRUCTURE_TABLE;

/// Elements of `C`: values of the inner product and the composition norm.
pub type ComplexScalar = Complex64;

pub const I: ComplexScalar = Complex64::new(0.0, 1.0);

/// Below this `|ω|` the exponential switches to truncated Taylor series for
/// `cos ω` and `sin ω / ω`.
pub const SMALL_ANGLE: f64 = 1e-6;

/// Relative threshold on `|N(x)|` below which `x` is treated as a zero divisor.
pub const ZERO_DIVISOR_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CplxOcton {
    pub c: [ComplexScalar; 8],
}

impl CplxOcton {
    pub const ZERO: CplxOcton = CplxOcton {
        c: [Complex64::new(0.0, 0.0); 8],
    };

    pub const ONE: CplxOcton = CplxOcton::scalar(Complex64::new(1.0, 0.0));

    /// `i·1`, the complex imaginary unit sitting in the scalar slot.
    pub const I: CplxOcton = CplxOcton::scalar(I);

    pub const fn new(c: [ComplexScalar; 8]) -> Self {
        CplxOcton { c }
    }

    pub const fn scalar(s: ComplexScalar) -> Self {
        let mut c = [Complex64::new(0.0, 0.0); 8];
        c[0] = s;
        CplxOcton { c }
    }

    pub const fn real(r: f64) -> Self {
        Self::scalar(Complex64::new(r, 0.0))
    }

    /// Basis element `b_k`, with `b_0 = 1` and `b_k = e_k` otherwise.
    ///
    /// Panics if `k > 7`.
    pub const fn basis(k: usize) -> Self {
        let mut c = [Complex64::new(0.0, 0.0); 8];
        c[k] = Complex64::new(1.0, 0.0);
        CplxOcton { c }
    }

    /// Builds an element from real and imaginary coefficient arrays.
    pub fn from_parts(re: [f64; 8], im: [f64; 8]) -> Self {
        let mut c = [Complex64::new(0.0, 0.0); 8];
        for k in 0..8 {
            c[k] = Complex64::new(re[k], im[k]);
        }
        CplxOcton { c }
    }

    pub fn conj_oct(&self) -> Self {
        let mut out = *self;
        for k in 1..8 {
            out.c[k] = -out.c[k];
        }
        out
    }

    pub fn conj_complex(&self) -> Self {
        let mut out = *self;
        for z in out.c.iter_mut() {
            *z = z.conj();
        }
        out
    }

    /// Both conjugations at once, `x̄*`. Its ±1 eigenspaces are the `(C⊗S)^±`.
    pub fn conj_both(&self) -> Self {
        let mut out = self.conj_complex();
        for k in 1..8 {
            out.c[k] = -out.c[k];
        }
        out
    }

    /// Scalar part `(x + x̄)/2`.
    pub fn scal(&self) -> ComplexScalar {
        self.c[0]
    }

    /// Vector part `(x − x̄)/2`.
    pub fn vec(&self) -> Self {
        let mut out = *self;
        out.c[0] = Complex64::new(0.0, 0.0);
        out
    }

    /// Complex-bilinear symmetric form with `2⟨x,y⟩ = x ȳ + y x̄`.
    ///
    /// The basis is orthonormal for this form, so it reduces to
    /// `Σ_k x_k y_k` (no complex conjugation).
    pub fn inner(&self, other: &Self) -> ComplexScalar {
        self.c
            .iter()
            .zip(other.c.iter())
            .fold(Complex64::new(0.0, 0.0), |acc, (a, b)| acc + a * b)
    }

    /// Composition norm `N(x) = x x̄`, a complex quadratic form.
    pub fn norm(&self) -> ComplexScalar {
        self.inner(self)
    }

    /// Euclidean length over the sixteen real components. Used only for
    /// tolerances and magnitudes, never as an algebraic norm.
    pub fn magnitude(&self) -> f64 {
        libm::sqrt(self.c.iter().map(|z| z.norm_sqr()).sum::<f64>())
    }

    pub fn is_finite(&self) -> bool {
        self.c.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// `x̄ / N(x)`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        let scale = self.magnitude();
        let eps = ZERO_DIVISOR_EPS * f64::max(1.0, scale * scale);
        if modulus(n) < eps {
            return Err(Error::ZeroDivisor {
                norm_modulus: modulus(n),
            });
        }
        Ok(self.conj_oct() * n.inv())
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    /// Closed-form exponential on `C⊗A = span_C{1, e1, e2, e3}`.
    ///
    /// With `u = s + v` (scalar plus vector part) and `ω² = ⟨v,v⟩`,
    /// `v² = −ω²`, so `exp(u) = e^s (cos ω + (sin ω / ω) v)`.
    pub fn exp_assoc(&self) -> Result<Self> {
        let off = grading::project(self, SubspaceTag::B).magnitude();
        if off >= grading::MEMBERSHIP_TOL * f64::max(1.0, self.magnitude()) {
            return Err(Error::NotInAssociativeSubalgebra { off_subspace: off });
        }
        let u = grading::project(self, SubspaceTag::A);
        let v = u.vec();
        let omega = principal_sqrt(v.inner(&v));
        let (cos, sinc) = cos_sinc(omega);
        Ok((CplxOcton::scalar(cos) + v * sinc) * scalar_exp(u.scal()))
    }

    /// Componentwise comparison of the sixteen real parts.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.c
            .iter()
            .zip(other.c.iter())
            .all(|(a, b)| (a.re - b.re).abs() <= tol && (a.im - b.im).abs() <= tol)
    }
}

/// Principal square root with the cut placed so that the negative real axis
/// maps to the positive imaginary axis regardless of the sign of zero.
pub fn principal_sqrt(z: ComplexScalar) -> ComplexScalar {
    if z.im == 0.0 {
        return if z.re < 0.0 {
            Complex64::new(0.0, libm::sqrt(-z.re))
        } else {
            Complex64::new(libm::sqrt(z.re), 0.0)
        };
    }
    let r = modulus(z);
    if z.re >= 0.0 {
        let t = libm::sqrt((r + z.re) / 2.0);
        Complex64::new(t, z.im / (2.0 * t))
    } else {
        let t = libm::sqrt((r - z.re) / 2.0);
        Complex64::new(z.im.abs() / (2.0 * t), libm::copysign(t, z.im))
    }
}

// Scalar transcendental functions go through `libm` directly, so results do
// not depend on whether `num-traits/std` happens to be enabled in the build.

/// `|z|`
pub fn modulus(z: ComplexScalar) -> f64 {
    libm::hypot(z.re, z.im)
}

pub fn scalar_exp(z: ComplexScalar) -> ComplexScalar {
    let r = libm::exp(z.re);
    Complex64::new(r * libm::cos(z.im), r * libm::sin(z.im))
}

fn scalar_cos(z: ComplexScalar) -> ComplexScalar {
    Complex64::new(
        libm::cos(z.re) * libm::cosh(z.im),
        -libm::sin(z.re) * libm::sinh(z.im),
    )
}

fn scalar_sin(z: ComplexScalar) -> ComplexScalar {
    Complex64::new(
        libm::sin(z.re) * libm::cosh(z.im),
        libm::cos(z.re) * libm::sinh(z.im),
    )
}

fn cos_sinc(omega: ComplexScalar) -> (ComplexScalar, ComplexScalar) {
    if modulus(omega) < SMALL_ANGLE {
        let w2 = omega * omega;
        let w4 = w2 * w2;
        let w6 = w4 * w2;
        let cos = 1.0 - w2 / 2.0 + w4 / 24.0 - w6 / 720.0;
        let sinc = 1.0 - w2 / 6.0 + w4 / 120.0 - w6 / 5040.0;
        (cos, sinc)
    } else {
        (scalar_cos(omega), scalar_sin(omega) / omega)
    }
}

pub fn associator(x: &CplxOcton, y: &CplxOcton, z: &CplxOcton) -> CplxOcton {
    (*x * *y) * *z - *x * (*y * *z)
}

pub fn commutator(x: &CplxOcton, y: &CplxOcton) -> CplxOcton {
    x.commutator(y)
}

pub fn inner(x: &CplxOcton, y: &CplxOcton) -> ComplexScalar {
    x.inner(y)
}

impl Mul for CplxOcton {
    type Output = CplxOcton;

    fn mul(self, rhs: CplxOcton) -> CplxOcton {
        let mut out = CplxOcton::ZERO;
        for a in 0..8 {
            let xa = self.c[a];
            if xa.re == 0.0 && xa.im == 0.0 {
                continue;
            }
            for b in 0..8 {
                let (sign, k) = STRUCTURE_TABLE.product(a, b);
                let term = xa * rhs.c[b];
                if sign > 0 {
                    out.c[k] += term;
                } else {
                    out.c[k] -= term;
                }
            }
        }
        out
    }
}

impl Mul<ComplexScalar> for CplxOcton {
    type Output = CplxOcton;

    fn mul(mut self, rhs: ComplexScalar) -> CplxOcton {
        for z in self.c.iter_mut() {
            *z *= rhs;
        }
        self
    }
}

impl Mul<f64> for CplxOcton {
    type Output = CplxOcton;

    fn mul(mut self, rhs: f64) -> CplxOcton {
        for z in self.c.iter_mut() {
            *z *= rhs;
        }
        self
    }
}

impl Mul<CplxOcton> for f64 {
    type Output = CplxOcton;

    fn mul(self, rhs: CplxOcton) -> CplxOcton {
        rhs * self
    }
}

impl Mul<CplxOcton> for ComplexScalar {
    type Output = CplxOcton;

    fn mul(self, rhs: CplxOcton) -> CplxOcton {
        rhs * self
    }
}

impl Div<f64> for CplxOcton {
    type Output = CplxOcton;

    fn div(self, rhs: f64) -> CplxOcton {
        self * (1.0 / rhs)
    }
}

impl Add for CplxOcton {
    type Output = CplxOcton;

    fn add(mut self, rhs: CplxOcton) -> CplxOcton {
        self += rhs;
        self
    }
}

impl AddAssign for CplxOcton {
    fn add_assign(&mut self, rhs: CplxOcton) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            *a += b;
        }
    }
}

impl Sub for CplxOcton {
    type Output = CplxOcton;

    fn sub(mut self, rhs: CplxOcton) -> CplxOcton {
        self -= rhs;
        self
    }
}

impl SubAssign for CplxOcton {
    fn sub_assign(&mut self, rhs: CplxOcton) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            *a -= b;
        }
    }
}

impl Neg for CplxOcton {
    type Output = CplxOcton;

    fn neg(mut self) -> CplxOcton {
        for z in self.c.iter_mut() {
            *z = -*z;
        }
        self
    }
}

impl From<ComplexScalar> for CplxOcton {
    fn from(s: ComplexScalar) -> Self {
        CplxOcton::scalar(s)
    }
}

impl From<f64> for CplxOcton {
    fn from(r: f64) -> Self {
        CplxOcton::real(r)
    }
}
