//! The Z₂-grading `C⊗O = C⊗A ⊕ C⊗B` and the ± eigenspaces of `x ↦ x̄*`.
//!
//! `C⊗A` is the quaternionic subalgebra `span_C{1, e1, e2, e3}` and `C⊗B`
//! its orthogonal complement `span_C{e4, …, e7}`. The residual evaluators
//! return left-hand side minus right-hand side of the composition-algebra
//! identities that make the nonassociative spinor `β ∈ C⊗B` work.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};
use crate::octonion::{ComplexScalar, CplxOcton};

/// Relative tolerance for subspace membership: `x ∈ S` when the component of
/// `x` outside `S` has length below `MEMBERSHIP_TOL · max(1, ‖x‖)`.
pub const MEMBERSHIP_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubspaceTag {
    FullCO,
    /// `span_C{1, e1, e2, e3}`
    A,
    /// `span_C{e4, e5, e6, e7}`
    B,
    /// `{x ∈ C⊗A : x̄* = −x}`, the real span of `{i, e1, e2, e3}` (≅ u(1) ⊕ su(2)).
    AMinus,
    /// `{x ∈ C⊗A : x̄* = +x}`, the real span of `{1, i e1, i e2, i e3}`.
    APlus,
}

/// Which half of the grading a tag lives in, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grade {
    A,
    B,
}

impl Grade {
    /// The grade of a product, following `A·A = A`, `A·B = B·A = B`, `B·B = A`.
    pub fn product(self, other: Grade) -> Grade {
        if self == other {
            Grade::A
        } else {
            Grade::B
        }
    }

    pub fn tag(self) -> SubspaceTag {
        match self {
            Grade::A => SubspaceTag::A,
            Grade::B => SubspaceTag::B,
        }
    }
}

impl SubspaceTag {
    pub fn grade(self) -> Option<Grade> {
        match self {
            SubspaceTag::FullCO => None,
            SubspaceTag::A | SubspaceTag::AMinus | SubspaceTag::APlus => Some(Grade::A),
            SubspaceTag::B => Some(Grade::B),
        }
    }

    /// Number of real parameters spanning the subspace.
    pub fn real_dim(self) -> usize {
        match self {
            SubspaceTag::FullCO => 16,
            SubspaceTag::A | SubspaceTag::B => 8,
            SubspaceTag::AMinus | SubspaceTag::APlus => 4,
        }
    }
}

/// Projection onto the tagged subspace.
///
/// For `A`/`B` this is the orthogonal coordinate projection; for the ±
/// spaces it is `(x ± x̄*)/2` followed by the projection onto `C⊗A`.
pub fn project(x: &CplxOcton, tag: SubspaceTag) -> CplxOcton {
    let keep = |lo: usize, hi: usize| {
        let mut out = CplxOcton::ZERO;
        out.c[lo..hi].copy_from_slice(&x.c[lo..hi]);
        out
    };
    match tag {
        SubspaceTag::FullCO => *x,
        SubspaceTag::A => keep(0, 4),
        SubspaceTag::B => keep(4, 8),
        SubspaceTag::AMinus => project(&((*x - x.conj_both()) * 0.5), SubspaceTag::A),
        SubspaceTag::APlus => project(&((*x + x.conj_both()) * 0.5), SubspaceTag::A),
    }
}

/// Length of the part of `x` lying outside the tagged subspace.
pub fn off_subspace(x: &CplxOcton, tag: SubspaceTag) -> f64 {
    (*x - project(x, tag)).magnitude()
}

pub fn contains(x: &CplxOcton, tag: SubspaceTag) -> bool {
    off_subspace(x, tag) < MEMBERSHIP_TOL * f64::max(1.0, x.magnitude())
}

pub(crate) fn require(x: &CplxOcton, tag: SubspaceTag, argument: &'static str) -> Result<()> {
    if contains(x, tag) {
        Ok(())
    } else {
        Err(Error::DomainViolation {
            argument,
            expected: tag,
        })
    }
}

/// Deterministic draw from the tagged subspace, uniform in `[−bound, bound]`
/// on each of its real coordinates.
pub fn sample(tag: SubspaceTag, seed: u64, bound: f64) -> CplxOcton {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    sample_with(&mut rng, tag, bound)
}

pub fn sample_with<R: Rng + ?Sized>(rng: &mut R, tag: SubspaceTag, bound: f64) -> CplxOcton {
    let mut draw = || rng.gen_range(-bound..=bound);
    let mut x = CplxOcton::ZERO;
    match tag {
        SubspaceTag::FullCO => {
            for z in x.c.iter_mut() {
                *z = Complex64::new(draw(), draw());
            }
        }
        SubspaceTag::A => {
            for z in x.c[..4].iter_mut() {
                *z = Complex64::new(draw(), draw());
            }
        }
        SubspaceTag::B => {
            for z in x.c[4..].iter_mut() {
                *z = Complex64::new(draw(), draw());
            }
        }
        SubspaceTag::AMinus => {
            x.c[0] = Complex64::new(0.0, draw());
            for z in x.c[1..4].iter_mut() {
                *z = Complex64::new(draw(), 0.0);
            }
        }
        SubspaceTag::APlus => {
            x.c[0] = Complex64::new(draw(), 0.0);
            for z in x.c[1..4].iter_mut() {
                *z = Complex64::new(0.0, draw());
            }
        }
    }
    x
}

/// `ab − b ā` for `a ∈ C⊗A`, `b ∈ C⊗B`.
pub fn residual_ab(a: &CplxOcton, b: &CplxOcton) -> Result<CplxOcton> {
    require(a, SubspaceTag::A, "a")?;
    require(b, SubspaceTag::B, "b")?;
    Ok(*a * *b - *b * a.conj_oct())
}

/// `(a a′) b − a′ (a b)`; note the reversed order of `a`, `a′`.
pub fn residual_aab(a: &CplxOcton, a2: &CplxOcton, b: &CplxOcton) -> Result<CplxOcton> {
    require(a, SubspaceTag::A, "a")?;
    require(a2, SubspaceTag::A, "a'")?;
    require(b, SubspaceTag::B, "b")?;
    Ok((*a * *a2) * *b - *a2 * (*a * *b))
}

/// `b (a′ a) − (b a) a′`
pub fn residual_baa(a: &CplxOcton, a2: &CplxOcton, b: &CplxOcton) -> Result<CplxOcton> {
    require(a, SubspaceTag::A, "a")?;
    require(a2, SubspaceTag::A, "a'")?;
    require(b, SubspaceTag::B, "b")?;
    Ok(*b * (*a2 * *a) - (*b * *a) * *a2)
}

/// `(b b′) a − (a b) b′`; `b`, `b′` keep their order.
pub fn residual_bba(a: &CplxOcton, b: &CplxOcton, b2: &CplxOcton) -> Result<CplxOcton> {
    require(a, SubspaceTag::A, "a")?;
    require(b, SubspaceTag::B, "b")?;
    require(b2, SubspaceTag::B, "b'")?;
    Ok((*b * *b2) * *a - (*a * *b) * *b2)
}

/// `a (b′ b) − b′ (b a)`
pub fn residual_abb(a: &CplxOcton, b: &CplxOcton, b2: &CplxOcton) -> Result<CplxOcton> {
    require(a, SubspaceTag::A, "a")?;
    require(b, SubspaceTag::B, "b")?;
    require(b2, SubspaceTag::B, "b'")?;
    Ok(*a * (*b2 * *b) - *b2 * (*b * *a))
}

/// `(a b)(b′ a′) − a′ (b b′) a`. The right side lives in the associative
/// `C⊗A`, so its bracketing is immaterial.
pub fn residual_abba(
    a: &CplxOcton,
    a2: &CplxOcton,
    b: &CplxOcton,
    b2: &CplxOcton,
) -> Result<CplxOcton> {
    require(a, SubspaceTag::A, "a")?;
    require(a2, SubspaceTag::A, "a'")?;
    require(b, SubspaceTag::B, "b")?;
    require(b2, SubspaceTag::B, "b'")?;
    Ok((*a * *b) * (*b2 * *a2) - (*a2 * (*b * *b2)) * *a)
}

/// `x(ȳz) + y(x̄z) − 2⟨x,y⟩z`, valid on all of `C⊗O`.
pub fn residual_zvengrowski(x: &CplxOcton, y: &CplxOcton, z: &CplxOcton) -> CplxOcton {
    *x * (y.conj_oct() * *z) + *y * (x.conj_oct() * *z) - *z * (x.inner(y) * 2.0)
}

/// The four ways of moving a factor across the inner product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IpMove {
    /// `⟨xy, z⟩ = ⟨y, x̄z⟩`
    LL,
    /// `⟨xy, z⟩ = ⟨x, zȳ⟩`
    LR,
    /// `⟨z, xy⟩ = ⟨x̄z, y⟩`
    RL,
    /// `⟨z, xy⟩ = ⟨zȳ, x⟩`
    RR,
}

impl IpMove {
    pub const ALL: [IpMove; 4] = [IpMove::LL, IpMove::LR, IpMove::RL, IpMove::RR];
}

pub fn residual_ipmove(form: IpMove, x: &CplxOcton, y: &CplxOcton, z: &CplxOcton) -> ComplexScalar {
    let xy = *x * *y;
    match form {
        IpMove::LL => xy.inner(z) - y.inner(&(x.conj_oct() * *z)),
        IpMove::LR => xy.inner(z) - x.inner(&(*z * y.conj_oct())),
        IpMove::RL => z.inner(&xy) - (x.conj_oct() * *z).inner(y),
        IpMove::RR => z.inner(&xy) - (*z * y.conj_oct()).inner(x),
    }
}

/// Samples `samples` pairs from the two tagged subspaces and checks that each
/// product lands in the half of the grading the A–B table predicts.
pub fn ab_lemma_closure_check(
    tag_x: SubspaceTag,
    tag_y: SubspaceTag,
    samples: usize,
    seed: u64,
) -> Result<bool> {
    let gx = tag_x.grade().ok_or(Error::DomainViolation {
        argument: "tag_x",
        expected: SubspaceTag::A,
    })?;
    let gy = tag_y.grade().ok_or(Error::DomainViolation {
        argument: "tag_y",
        expected: SubspaceTag::A,
    })?;
    let target = gx.product(gy).tag();
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    Ok((0..samples).all(|_| {
        let x = sample_with(&mut rng, tag_x, 1.0);
        let y = sample_with(&mut rng, tag_y, 1.0);
        contains(&(x * y), target)
    }))
}
