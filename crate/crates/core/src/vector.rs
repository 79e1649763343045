use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::complex::ComplexRational;
use crate::context::AlgebraContext;
use crate::scalar::{Axis, MoyalScalar};

/// Spatial 3-vector of Moyal polynomials, components along x1, x2, x3.
///
/// Products are taken in an explicit [`AlgebraContext`], so the vector itself
/// carries no context.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VectorField3(pub [MoyalScalar; 3]);

impl VectorField3 {
    pub fn new(c1: MoyalScalar, c2: MoyalScalar, c3: MoyalScalar) -> Self {
        VectorField3([c1, c2, c3])
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(MoyalScalar::is_zero)
    }

    pub fn map(&self, f: impl Fn(&MoyalScalar) -> MoyalScalar) -> Self {
        VectorField3([f(&self.0[0]), f(&self.0[1]), f(&self.0[2])])
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(&MoyalScalar, &MoyalScalar) -> MoyalScalar) -> Self {
        VectorField3([f(&self.0[0], &other.0[0]), f(&self.0[1], &other.0[1]), f(&self.0[2], &other.0[2])])
    }

    pub fn conj(&self) -> Self {
        self.map(MoyalScalar::conj)
    }

    pub fn mul_i(&self) -> Self {
        self.map(MoyalScalar::mul_i)
    }

    pub fn scale(&self, c: &ComplexRational) -> Self {
        self.map(|f| f.scale(c))
    }

    pub fn partial(&self, axis: Axis) -> Self {
        self.map(|f| f.partial(axis))
    }

    pub fn iter(&self) -> impl Iterator<Item = &MoyalScalar> {
        self.0.iter()
    }
}

impl Index<usize> for VectorField3 {
    type Output = MoyalScalar;
    /// Zero-based: index 0 is the x1 component.
    fn index(&self, i: usize) -> &MoyalScalar {
        &self.0[i]
    }
}

impl Add for &VectorField3 {
    type Output = VectorField3;
    fn add(self, rhs: &VectorField3) -> VectorField3 {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Add for VectorField3 {
    type Output = VectorField3;
    fn add(self, rhs: VectorField3) -> VectorField3 {
        &self + &rhs
    }
}

impl Sub for &VectorField3 {
    type Output = VectorField3;
    fn sub(self, rhs: &VectorField3) -> VectorField3 {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Sub for VectorField3 {
    type Output = VectorField3;
    fn sub(self, rhs: VectorField3) -> VectorField3 {
        &self - &rhs
    }
}

impl Neg for &VectorField3 {
    type Output = VectorField3;
    fn neg(self) -> VectorField3 {
        self.map(|f| -f)
    }
}

impl Neg for VectorField3 {
    type Output = VectorField3;
    fn neg(self) -> VectorField3 {
        -&self
    }
}

impl fmt::Display for VectorField3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for VectorField3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VectorField3{self}")
    }
}

pub fn grad(f: &MoyalScalar) -> VectorField3 {
    VectorField3(Axis::SPATIAL.map(|a| f.partial(a)))
}

pub fn div(x: &VectorField3) -> MoyalScalar {
    Axis::SPATIAL.into_iter().enumerate().map(|(i, a)| x.0[i].partial(a)).sum()
}

pub fn curl(x: &VectorField3) -> VectorField3 {
    let d = |i: usize, a: Axis| x.0[i].partial(a);
    VectorField3::new(
        d(2, Axis::X2) - d(1, Axis::X3),
        d(0, Axis::X3) - d(2, Axis::X1),
        d(1, Axis::X1) - d(0, Axis::X2),
    )
}

/// Cross product with star-ordered factors: `(X×Y)_1 = X_2·Y_3 − X_3·Y_2`, cyclic.
pub fn cross_star(ctx: &AlgebraContext, x: &VectorField3, y: &VectorField3) -> VectorField3 {
    let c = |i: usize, j: usize| ctx.star(&x.0[i], &y.0[j]) - ctx.star(&x.0[j], &y.0[i]);
    VectorField3::new(c(1, 2), c(2, 0), c(0, 1))
}

/// `Σ_j [X_j, Y_j]`
pub fn dot_commutator(ctx: &AlgebraContext, x: &VectorField3, y: &VectorField3) -> MoyalScalar {
    (0..3).map(|j| ctx.commutator(&x.0[j], &y.0[j])).sum()
}

/// Componentwise `[f, X_j]`.
pub fn scalar_commutator(ctx: &AlgebraContext, f: &MoyalScalar, x: &VectorField3) -> VectorField3 {
    x.map(|c| ctx.commutator(f, c))
}

/// Componentwise `[X_j, f]`.
pub fn commutator_scalar(ctx: &AlgebraContext, x: &VectorField3, f: &MoyalScalar) -> VectorField3 {
    x.map(|c| ctx.commutator(c, f))
}

/// `X×Y + Y×X`, the symmetrised star cross product.
pub fn cross_anticommutator(ctx: &AlgebraContext, x: &VectorField3, y: &VectorField3) -> VectorField3 {
    cross_star(ctx, x, y) + cross_star(ctx, y, x)
}
