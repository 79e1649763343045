//! Seeded generators for property tests and fuzzing.

use num_rational::BigRational;
use rand::Rng;

use crate::complex::ComplexRational;
use crate::context::{AlgebraContext, ThetaMatrix};
use crate::dual::GaugePotential2;
use crate::forms::{BasisIndex, DifferentialForm};
use crate::scalar::{Monomial, MoyalScalar};
use crate::single::GaugePotential1;
use crate::vector::VectorField3;

/// Numerator in `[-3, 3]`, denominator in `[1, 3]`.
pub fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    BigRational::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(1i64..=3).into())
}

/// Real with probability 1/2, otherwise a general complex rational.
pub fn random_complex<R: Rng>(rng: &mut R) -> ComplexRational {
    let re = random_rational(rng);
    if rng.gen_bool(0.5) {
        ComplexRational::real(re)
    } else {
        ComplexRational::new(re, random_rational(rng))
    }
}

pub fn random_monomial<R: Rng>(rng: &mut R, max_degree: u32) -> Monomial {
    let degree = rng.gen_range(0..=max_degree);
    let mut exps = [0u32; 4];
    for _ in 0..degree {
        exps[rng.gen_range(0..4)] += 1;
    }
    Monomial(exps)
}

/// Up to `max_terms` random terms of total degree at most `max_degree`.
pub fn random_scalar<R: Rng>(rng: &mut R, max_degree: u32, max_terms: usize) -> MoyalScalar {
    let n = rng.gen_range(0..=max_terms);
    MoyalScalar::from_terms((0..n).map(|_| (random_monomial(rng, max_degree), random_complex(rng))))
}

pub fn random_vector<R: Rng>(rng: &mut R, max_degree: u32, max_terms: usize) -> VectorField3 {
    VectorField3::new(
        random_scalar(rng, max_degree, max_terms),
        random_scalar(rng, max_degree, max_terms),
        random_scalar(rng, max_degree, max_terms),
    )
}

/// Independent random entries above the diagonal.
pub fn random_theta<R: Rng>(rng: &mut R) -> ThetaMatrix {
    ThetaMatrix::from_upper(std::array::from_fn(|_| random_rational(rng)))
}

pub fn random_context<R: Rng>(rng: &mut R) -> AlgebraContext {
    AlgebraContext::new(random_theta(rng))
}

pub fn random_potential1<R: Rng>(rng: &mut R, ctx: &AlgebraContext, max_degree: u32) -> GaugePotential1 {
    GaugePotential1::new(ctx, random_scalar(rng, max_degree, 2), random_vector(rng, max_degree, 2))
}

pub fn random_potential2<R: Rng>(rng: &mut R, ctx: &AlgebraContext, max_degree: u32) -> GaugePotential2 {
    GaugePotential2::from_parts(random_potential1(rng, ctx, max_degree), random_potential1(rng, ctx, max_degree))
        .expect("shared context")
}

/// Homogeneous form of the given grade.
pub fn random_form<R: Rng>(rng: &mut R, ctx: &AlgebraContext, grade: usize, max_degree: u32) -> DifferentialForm {
    DifferentialForm::from_components(
        ctx,
        BasisIndex::of_grade(grade).into_iter().map(|b| (b, random_scalar(rng, max_degree, 2))).collect::<Vec<_>>(),
    )
}

/// Arbitrary mixture of grades.
pub fn random_mixed_form<R: Rng>(rng: &mut R, ctx: &AlgebraContext, max_degree: u32) -> DifferentialForm {
    let mut comps = Vec::new();
    for b in BasisIndex::all() {
        if rng.gen_bool(0.4) {
            comps.push((b, random_scalar(rng, max_degree, 2)));
        }
    }
    DifferentialForm::from_components(ctx, comps)
}
