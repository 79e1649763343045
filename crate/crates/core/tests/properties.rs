use num_rational::BigRational;
use proptest::prelude::*;

use ncmaxwell::dual::{duality_swap, GaugePotential2};
use ncmaxwell::expr::{expr_of_scalar, parse_polynomial};
use ncmaxwell::forms::hodge_left;
use ncmaxwell::{
    AlgebraContext, BasisIndex, ComplexRational, DifferentialForm, MetricSignature, Monomial, MoyalScalar,
    ThetaMatrix, VectorField3,
};

fn rational() -> impl Strategy<Value = BigRational> {
    (-4i64..=4, 1i64..=4).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn complex() -> impl Strategy<Value = ComplexRational> {
    (rational(), rational()).prop_map(|(re, im)| ComplexRational::new(re, im))
}

fn scalar(max_degree: u32) -> impl Strategy<Value = MoyalScalar> {
    let exps = prop::array::uniform4(0..=max_degree).prop_filter("degree", move |e| e.iter().sum::<u32>() <= max_degree);
    prop::collection::vec((exps, complex()), 0..4)
        .prop_map(|terms| MoyalScalar::from_terms(terms.into_iter().map(|(e, c)| (Monomial(e), c))))
}

fn theta() -> impl Strategy<Value = ThetaMatrix> {
    prop::array::uniform6(rational()).prop_map(ThetaMatrix::from_upper)
}

fn vector(max_degree: u32) -> impl Strategy<Value = VectorField3> {
    prop::array::uniform3(scalar(max_degree)).prop_map(|[a, b, c]| VectorField3::new(a, b, c))
}

fn one_form(ctx: &AlgebraContext, c: [MoyalScalar; 4]) -> DifferentialForm {
    DifferentialForm::one_form(ctx, c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn star_is_associative(t in theta(), f in scalar(2), g in scalar(2), h in scalar(2)) {
        let ctx = AlgebraContext::new(t);
        prop_assert_eq!(ctx.star(&ctx.star(&f, &g), &h), ctx.star(&f, &ctx.star(&g, &h)));
    }

    #[test]
    fn star_distributes(t in theta(), f in scalar(3), g in scalar(3), h in scalar(3)) {
        let ctx = AlgebraContext::new(t);
        prop_assert_eq!(ctx.star(&f, &(g.clone() + h.clone())), ctx.star(&f, &g) + ctx.star(&f, &h));
    }

    #[test]
    fn conjugation_reverses_products(t in theta(), f in scalar(3), g in scalar(3)) {
        let ctx = AlgebraContext::new(t);
        prop_assert_eq!(ctx.star(&f, &g).conj(), ctx.star(&g.conj(), &f.conj()));
    }

    #[test]
    fn zero_theta_is_pointwise(f in scalar(3), g in scalar(3)) {
        prop_assert_eq!(AlgebraContext::commutative().star(&f, &g), f.mul_commutative(&g));
    }

    #[test]
    fn leibniz_rule(t in theta(), f in scalar(3), g in scalar(3), axis in 0usize..4) {
        let ctx = AlgebraContext::new(t);
        let ax = ncmaxwell::Axis::new(axis).unwrap();
        let lhs = ctx.star(&f, &g).partial(ax);
        let rhs = ctx.star(&f.partial(ax), &g) + ctx.star(&f, &g.partial(ax));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn d_squared_vanishes(t in theta(), c in prop::array::uniform4(scalar(3))) {
        let ctx = AlgebraContext::new(t);
        prop_assert!(one_form(&ctx, c).exterior_d().exterior_d().is_zero());
    }

    #[test]
    fn involution_is_an_involution(t in theta(), c in prop::array::uniform4(scalar(2))) {
        let ctx = AlgebraContext::new(t);
        let a = one_form(&ctx, c);
        prop_assert_eq!(a.involution().involution(), a);
    }

    #[test]
    fn hodge_square_is_a_sign(c in prop::collection::vec(scalar(2), 16), minkowski in any::<bool>()) {
        let sig = if minkowski { MetricSignature::Minkowski } else { MetricSignature::Euclidean };
        let ctx = AlgebraContext::commutative();
        let mut w = DifferentialForm::zero(&ctx);
        for (b, f) in BasisIndex::all().into_iter().zip(c) {
            w = w + DifferentialForm::basis(&ctx, b, f);
        }
        for k in 0..=4 {
            let wk = w.project(k);
            let sign = if sig == MetricSignature::Minkowski { -1 } else { 1 } * if k % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(hodge_left(&hodge_left(&wk, sig), sig), wk.scale_int(sign));
        }
    }

    #[test]
    fn swap_is_an_involution(t in theta(), pe in scalar(2), ae in vector(2), pm in scalar(2), am in vector(2)) {
        let ctx = AlgebraContext::new(t);
        let a = GaugePotential2::new(&ctx, pe, ae, pm, am);
        prop_assert_eq!(duality_swap(&duality_swap(&a)), a);
    }

    #[test]
    fn rendering_parses_back(f in scalar(3)) {
        let parsed = parse_polynomial(&f.to_string()).expect("rendered polynomial parses");
        prop_assert_eq!(parsed.evaluate_commutative(), f.clone());
        let expr = expr_of_scalar(&f);
        let again = parse_polynomial(&expr.to_string()).expect("rendered expression parses");
        prop_assert_eq!(again.evaluate_commutative(), f);
    }
}
