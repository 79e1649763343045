//! Single-field U(1) model on Minkowski space.

use crate::context::AlgebraContext;
use crate::error::FormError;
use crate::forms::{
    codifferential_left, graded_commutator, hodge_left, hodge_left_inverse, metric_pointwise, BasisIndex,
    DifferentialForm, MetricSignature,
};
use crate::scalar::{Axis, MoyalScalar};
use crate::tensor::{dual, raise_both, zero_tensor, Tensor2};
use crate::vector::{cross_anticommutator, cross_star, curl, div, dot_commutator, grad, scalar_commutator, VectorField3};

const MINKOWSKI: MetricSignature = MetricSignature::Minkowski;

/// Gauge potential `φ dx0 − A1 dx1 − A2 dx2 − A3 dx3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugePotential1 {
    ctx: AlgebraContext,
    pub phi: MoyalScalar,
    pub a: VectorField3,
}

impl GaugePotential1 {
    pub fn new(ctx: &AlgebraContext, phi: MoyalScalar, a: VectorField3) -> Self {
        Self { ctx: ctx.clone(), phi, a }
    }

    pub fn zero(ctx: &AlgebraContext) -> Self {
        Self::new(ctx, MoyalScalar::zero(), VectorField3::zero())
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    /// Covariant components `a_μ = (φ, −A)`.
    pub fn lower(&self) -> [MoyalScalar; 4] {
        [self.phi.clone(), -&self.a[0], -&self.a[1], -&self.a[2]]
    }

    /// Contravariant components `a^μ = (φ, A)`.
    pub fn upper(&self) -> [MoyalScalar; 4] {
        [self.phi.clone(), self.a[0].clone(), self.a[1].clone(), self.a[2].clone()]
    }

    pub fn to_form(&self) -> DifferentialForm {
        DifferentialForm::one_form(&self.ctx, self.lower())
    }

    pub fn from_form(form: &DifferentialForm) -> Result<Self, FormError> {
        match form.homogeneous_grade()? {
            None | Some(1) => {}
            Some(k) => return Err(FormError::NotOneForm(k)),
        }
        let c = |a: Axis| form.component(BasisIndex::dx(a));
        Ok(Self::new(
            form.ctx(),
            c(Axis::X0),
            VectorField3::new(-c(Axis::X1), -c(Axis::X2), -c(Axis::X3)),
        ))
    }

    pub fn conj(&self) -> Self {
        Self::new(&self.ctx, self.phi.conj(), self.a.conj())
    }
}

/// Classical and corrected fields of a single potential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldDecomposition {
    pub e: VectorField3,
    pub b: VectorField3,
    pub d: VectorField3,
    pub h: VectorField3,
    pub f: DifferentialForm,
}

fn b2(i: usize, j: usize) -> BasisIndex {
    BasisIndex::from_axes(&[i, j]).expect("valid pair")
}

fn b3(i: usize, j: usize, k: usize) -> BasisIndex {
    BasisIndex::from_axes(&[i, j, k]).expect("valid triple")
}

/// Assembles a 2-form with `F_{0i} = X_i`, `F_12 = −Y_3`, `F_13 = Y_2`, `F_23 = −Y_1`.
pub fn field_form_from_pair(ctx: &AlgebraContext, x: &VectorField3, y: &VectorField3) -> DifferentialForm {
    DifferentialForm::from_components(
        ctx,
        [
            (b2(0, 1), x[0].clone()),
            (b2(0, 2), x[1].clone()),
            (b2(0, 3), x[2].clone()),
            (b2(1, 2), -&y[2]),
            (b2(1, 3), y[1].clone()),
            (b2(2, 3), -&y[0]),
        ],
    )
}

/// Inverse of [`field_form_from_pair`].
pub fn pair_from_field_form(f: &DifferentialForm) -> (VectorField3, VectorField3) {
    let c = |i, j| f.component(b2(i, j));
    (
        VectorField3::new(c(0, 1), c(0, 2), c(0, 3)),
        VectorField3::new(-c(2, 3), c(1, 3), -c(1, 2)),
    )
}

/// `F = dA − i A∧A`
pub fn field_strength(a: &GaugePotential1) -> DifferentialForm {
    let form = a.to_form();
    form.exterior_d() - form.wedge_same_ctx(&form).mul_i()
}

/// `E = −∂0 A − ∇φ`
pub fn classical_electric(a: &GaugePotential1) -> VectorField3 {
    -a.a.partial(Axis::X0) - grad(&a.phi)
}

pub fn decompose(a: &GaugePotential1) -> FieldDecomposition {
    let ctx = a.ctx();
    let e = classical_electric(a);
    let b = curl(&a.a);
    let d = &e + &scalar_commutator(ctx, &a.phi, &a.a).mul_i();
    let h = &b + &cross_star(ctx, &a.a, &a.a).mul_i();
    FieldDecomposition { e, b, d, h, f: field_strength(a) }
}

/// `d^S T = i[A, T]^∂`
pub fn ds_apply(a: &GaugePotential1, t: &DifferentialForm) -> Result<DifferentialForm, FormError> {
    Ok(graded_commutator(&a.to_form(), t)?.mul_i())
}

/// `(−1)^k i ⋆^{-1}([A, ⋆T]^∂)` for a (k+1)-form T, in the given signature.
pub fn ds_star_with(a: &GaugePotential1, t: &DifferentialForm, sig: MetricSignature) -> Result<DifferentialForm, FormError> {
    let Some(grade) = t.homogeneous_grade()? else {
        return Ok(t.clone());
    };
    if grade == 0 {
        return Err(FormError::GradeZero);
    }
    let bracket = graded_commutator(&a.to_form(), &hodge_left(t, sig))?;
    let out = hodge_left_inverse(&bracket, sig).mul_i();
    Ok(if (grade - 1) % 2 == 1 { -out } else { out })
}

/// Adjoint of [`ds_apply`] in Minkowski signature.
pub fn ds_star_apply(a: &GaugePotential1, t: &DifferentialForm) -> Result<DifferentialForm, FormError> {
    ds_star_with(a, t, MINKOWSKI)
}

/// `(−1)^{k+1} ⋆^{-1} ∘ d^S ∘ ⋆` for a (k+1)-form T.
pub fn ds_star_composed(a: &GaugePotential1, t: &DifferentialForm, sig: MetricSignature) -> Result<DifferentialForm, FormError> {
    let Some(grade) = t.homogeneous_grade()? else {
        return Ok(t.clone());
    };
    if grade == 0 {
        return Err(FormError::GradeZero);
    }
    let out = hodge_left_inverse(&ds_apply(a, &hodge_left(t, sig))?, sig);
    Ok(if grade % 2 == 1 { -out } else { out })
}

/// `dF − d^S F`; zero for every potential.
pub fn geometric_residual(a: &GaugePotential1) -> DifferentialForm {
    let f = field_strength(a);
    f.exterior_d() - ds_apply(a, &f).expect("field strength is a 2-form")
}

/// `dF − i[A, dA]^∂`; zero for every potential.
pub fn geometric_residual_via_da(a: &GaugePotential1) -> DifferentialForm {
    let form = a.to_form();
    let da = form.exterior_d();
    field_strength(a).exterior_d() - ds_apply(a, &da).expect("dA is a 2-form")
}

/// `d^⋆F − d^{S⋆}F`; zero exactly for Yang–Mills potentials.
pub fn dynamical_residual(a: &GaugePotential1) -> DifferentialForm {
    dynamical_residual_with(a, MINKOWSKI)
}

pub fn dynamical_residual_with(a: &GaugePotential1, sig: MetricSignature) -> DifferentialForm {
    let f = field_strength(a);
    codifferential_left(&f, sig).expect("2-form") - ds_star_with(a, &f, sig).expect("2-form")
}

/// Residuals, charges and currents of the vector-calculus Maxwell system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxwellReport1 {
    /// `∇·H − ρ^m`
    pub gauss_magnetic_residual: MoyalScalar,
    /// `∇×D + ∂0 H + j^m`
    pub faraday_residual: VectorField3,
    /// `∇·D − ρ^e`
    pub gauss_electric_residual: MoyalScalar,
    /// `∇×H − ∂0 D − j^e`
    pub ampere_residual: VectorField3,
    pub rho_m: MoyalScalar,
    pub rho_e: MoyalScalar,
    pub j_m: VectorField3,
    pub j_e: VectorField3,
    /// `∇·j^m + ∂0 ρ^m`
    pub magnetic_conservation: MoyalScalar,
    /// `∇·j^e + ∂0 ρ^e`
    pub electric_conservation: MoyalScalar,
}

impl MaxwellReport1 {
    pub fn bianchi_holds(&self) -> bool {
        self.gauss_magnetic_residual.is_zero() && self.faraday_residual.is_zero()
    }

    pub fn dynamical_holds(&self) -> bool {
        self.gauss_electric_residual.is_zero() && self.ampere_residual.is_zero()
    }
}

/// Magnetic charge `i[B, A]` and current `j^m` with `−j^m = i[φ,B] − i(E×A + A×E)`.
pub fn magnetic_sources(ctx: &AlgebraContext, phi: &MoyalScalar, a: &VectorField3, e: &VectorField3, b: &VectorField3) -> (MoyalScalar, VectorField3) {
    let rho = dot_commutator(ctx, b, a).mul_i();
    let minus_j = scalar_commutator(ctx, phi, b).mul_i() - cross_anticommutator(ctx, e, a).mul_i();
    (rho, -minus_j)
}

/// Electric charge `i[D, A*]` and current `j^e = i[D, φ*] − i(H×A* + A*×H)`.
pub fn electric_sources(ctx: &AlgebraContext, phi: &MoyalScalar, a: &VectorField3, d: &VectorField3, h: &VectorField3) -> (MoyalScalar, VectorField3) {
    let a_star = a.conj();
    let phi_star = phi.conj();
    let rho = dot_commutator(ctx, d, &a_star).mul_i();
    let j = d.map(|di| ctx.commutator(di, &phi_star)).mul_i() - cross_anticommutator(ctx, h, &a_star).mul_i();
    (rho, j)
}

pub fn continuity(rho: &MoyalScalar, j: &VectorField3) -> MoyalScalar {
    div(j) + rho.partial(Axis::X0)
}

pub fn charges_currents(a: &GaugePotential1) -> MaxwellReport1 {
    let ctx = a.ctx();
    let fields = decompose(a);
    let (rho_m, j_m) = magnetic_sources(ctx, &a.phi, &a.a, &fields.e, &fields.b);
    let (rho_e, j_e) = electric_sources(ctx, &a.phi, &a.a, &fields.d, &fields.h);
    MaxwellReport1 {
        gauss_magnetic_residual: div(&fields.h) - rho_m.clone(),
        faraday_residual: curl(&fields.d) + fields.h.partial(Axis::X0) + j_m.clone(),
        gauss_electric_residual: div(&fields.d) - rho_e.clone(),
        ampere_residual: curl(&fields.h) - fields.d.partial(Axis::X0) - j_e.clone(),
        magnetic_conservation: continuity(&rho_m, &j_m),
        electric_conservation: continuity(&rho_e, &j_e),
        rho_m,
        rho_e,
        j_m,
        j_e,
    }
}

/// Agreement between form components and vector-calculus quantities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProofMapCheck {
    /// `dF = −∇·H dx123 − (∇×D + ∂0H)_1 dx023 + (…)_2 dx013 − (…)_3 dx012`
    pub exterior_derivative: bool,
    /// `d^S F = −ρ^m dx123 + j^m_1 dx023 − j^m_2 dx013 + j^m_3 dx012`
    pub ds_term: bool,
    /// `d^⋆F = −∇·D dx0 + (∇×H − ∂0D)_i dx^i`
    pub codifferential: bool,
    /// `d^{S⋆}F = −ρ^e dx0 + j^e_i dx^i`
    pub ds_star_term: bool,
}

impl ProofMapCheck {
    pub fn all(&self) -> bool {
        self.exterior_derivative && self.ds_term && self.codifferential && self.ds_star_term
    }
}

/// Encodes `−s dx123 − v_1 dx023 + v_2 dx013 − v_3 dx012`.
pub(crate) fn three_form(ctx: &AlgebraContext, s: &MoyalScalar, v: &VectorField3) -> DifferentialForm {
    DifferentialForm::from_components(
        ctx,
        [
            (b3(1, 2, 3), -s),
            (b3(0, 2, 3), -&v[0]),
            (b3(0, 1, 3), v[1].clone()),
            (b3(0, 1, 2), -&v[2]),
        ],
    )
}

/// Encodes `s dx0 + v_i dx^i`.
pub(crate) fn one_form_sv(ctx: &AlgebraContext, s: &MoyalScalar, v: &VectorField3) -> DifferentialForm {
    DifferentialForm::one_form(ctx, [s.clone(), v[0].clone(), v[1].clone(), v[2].clone()])
}

pub fn proof_map_check(a: &GaugePotential1) -> ProofMapCheck {
    let ctx = a.ctx();
    let fields = decompose(a);
    let report = charges_currents(a);
    let f = &fields.f;
    let faraday_lhs = curl(&fields.d) + fields.h.partial(Axis::X0);
    let ampere_lhs = curl(&fields.h) - fields.d.partial(Axis::X0);
    ProofMapCheck {
        exterior_derivative: f.exterior_d() == three_form(ctx, &div(&fields.h), &faraday_lhs),
        ds_term: ds_apply(a, f).expect("2-form") == three_form(ctx, &report.rho_m, &-&report.j_m),
        codifferential: codifferential_left(f, MINKOWSKI).expect("2-form")
            == one_form_sv(ctx, &-div(&fields.d), &ampere_lhs),
        ds_star_term: ds_star_apply(a, f).expect("2-form") == one_form_sv(ctx, &-&report.rho_e, &report.j_e),
    }
}

/// `F_{μν} = ∂_μ a_ν − ∂_ν a_μ − i[a_μ, a_ν]` and its classical part.
pub fn field_tensor(a: &GaugePotential1) -> (Tensor2, Tensor2) {
    let ctx = a.ctx();
    let low = a.lower();
    let mut full = zero_tensor();
    let mut classical = zero_tensor();
    for mu in 0..4 {
        for nu in 0..4 {
            let cl = low[nu].partial(Axis::ALL[mu]) - low[mu].partial(Axis::ALL[nu]);
            full[mu][nu] = &cl - &ctx.i_commutator(&low[mu], &low[nu]);
            classical[mu][nu] = cl;
        }
    }
    (full, classical)
}

/// Outcome of the index-notation cross-check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorCheck {
    /// Tensor components equal the form components of F.
    pub field_tensor_matches: bool,
    /// `∂_μ F̃^{μν} = i[a_μ, F̃^{μν}]`
    pub dual_divergence_matches: bool,
    /// `i[a_μ, F̃^{μν}] = i[a_μ, F̃^{μν}_classical]`
    pub classical_restriction_matches: bool,
    /// `i[a_μ, F̃^{μν}] = (ρ^m, j^m)`
    pub magnetic_current_matches: bool,
    /// `∂_μF^{μν} − i[a*_μ, F^{μν}]` reproduces the 1-form dynamical residual.
    pub dynamical_components_match: bool,
    /// The magnetic four-current `i[a_μ, F̃^{μν}]`.
    pub magnetic_current: [MoyalScalar; 4],
    /// `∂_μF^{μν} − i[a*_μ, F^{μν}]`
    pub electric_equation: [MoyalScalar; 4],
}

impl TensorCheck {
    pub fn all(&self) -> bool {
        self.field_tensor_matches
            && self.dual_divergence_matches
            && self.classical_restriction_matches
            && self.magnetic_current_matches
            && self.dynamical_components_match
    }
}

pub fn tensor_cross_check(a: &GaugePotential1) -> TensorCheck {
    let ctx = a.ctx();
    let low = a.lower();
    let low_star: Vec<MoyalScalar> = low.iter().map(MoyalScalar::conj).collect();
    let (f_low, f_cl) = field_tensor(a);
    let form = field_strength(a);
    let mut field_tensor_matches = true;
    for mu in 0..4 {
        for nu in 0..4 {
            let expected = if mu < nu {
                form.component(b2(mu, nu))
            } else if mu > nu {
                -form.component(b2(nu, mu))
            } else {
                MoyalScalar::zero()
            };
            field_tensor_matches &= f_low[mu][nu] == expected;
        }
    }
    let f_up = raise_both(&f_low, MINKOWSKI);
    let dual_full = dual(&f_low);
    let dual_cl = dual(&f_cl);
    let report = charges_currents(a);
    let expected_current = [report.rho_m.clone(), report.j_m[0].clone(), report.j_m[1].clone(), report.j_m[2].clone()];
    let dynamical = dynamical_residual(a);
    let mut magnetic_current: [MoyalScalar; 4] = Default::default();
    let mut electric_equation: [MoyalScalar; 4] = Default::default();
    let (mut dual_ok, mut restriction_ok, mut current_ok, mut dyn_ok) = (true, true, true, true);
    for nu in 0..4 {
        let div_dual: MoyalScalar = (0..4).map(|mu| dual_full[mu][nu].partial(Axis::ALL[mu])).sum();
        let current: MoyalScalar = (0..4).map(|mu| ctx.i_commutator(&low[mu], &dual_full[mu][nu])).sum();
        let current_cl: MoyalScalar = (0..4).map(|mu| ctx.i_commutator(&low[mu], &dual_cl[mu][nu])).sum();
        dual_ok &= div_dual == current;
        restriction_ok &= current == current_cl;
        current_ok &= current == expected_current[nu];
        let div_f: MoyalScalar = (0..4).map(|mu| f_up[mu][nu].partial(Axis::ALL[mu])).sum();
        let bracket: MoyalScalar = (0..4).map(|mu| ctx.i_commutator(&low_star[mu], &f_up[mu][nu])).sum();
        let t = div_f - bracket;
        let component = dynamical.component(BasisIndex::dx(Axis::ALL[nu]));
        dyn_ok &= component == t.scale_int(-MINKOWSKI.eta(nu));
        magnetic_current[nu] = current;
        electric_equation[nu] = t;
    }
    TensorCheck {
        field_tensor_matches,
        dual_divergence_matches: dual_ok,
        classical_restriction_matches: restriction_ok,
        magnetic_current_matches: current_ok,
        dynamical_components_match: dyn_ok,
        magnetic_current,
        electric_equation,
    }
}

/// Lorenz-gauge residual `∂_μ a^μ` and the residual of the wave equation
/// `∂_μ∂^μ a^ν = i[a_μ, F^{μν}] + i[a^μ, ∂_μ a^ν]`.
///
/// The wave equation is only expected to hold for Yang–Mills potentials in
/// Lorenz gauge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LorenzReport {
    pub gauge_residual: MoyalScalar,
    pub wave_residual: [MoyalScalar; 4],
}

pub fn lorenz_gauge_report(a: &GaugePotential1) -> LorenzReport {
    let ctx = a.ctx();
    let up = a.upper();
    let low = a.lower();
    let (f_low, _) = field_tensor(a);
    let f_up = raise_both(&f_low, MINKOWSKI);
    let gauge_residual = (0..4).map(|mu| up[mu].partial(Axis::ALL[mu])).sum();
    let wave_residual = std::array::from_fn(|nu| {
        let wave: MoyalScalar = (0..4)
            .map(|mu| {
                let ax = Axis::ALL[mu];
                up[nu].partial(ax).partial(ax).scale_int(MINKOWSKI.eta(mu))
            })
            .sum();
        let field_term: MoyalScalar = (0..4).map(|mu| ctx.i_commutator(&low[mu], &f_up[mu][nu])).sum();
        let self_term: MoyalScalar =
            (0..4).map(|mu| ctx.i_commutator(&up[mu], &up[nu].partial(Axis::ALL[mu]))).sum();
        wave - field_term - self_term
    });
    LorenzReport { gauge_residual, wave_residual }
}

/// `Σ_{μν} F^{μν}·F*_{μν}` for a 2-form given by components.
pub fn tensor_action_density(ctx: &AlgebraContext, f: &DifferentialForm, sig: MetricSignature) -> MoyalScalar {
    let mut low = zero_tensor();
    for mu in 0..4 {
        for nu in (mu + 1)..4 {
            let c = f.component(b2(mu, nu));
            low[nu][mu] = -&c;
            low[mu][nu] = c;
        }
    }
    let up = raise_both(&low, sig);
    let mut terms = Vec::new();
    for mu in 0..4 {
        for nu in 0..4 {
            terms.push(ctx.star(&up[mu][nu], &low[mu][nu].conj()));
        }
    }
    terms.into_iter().sum()
}

/// Lagrangian density `Σ F^{μν}·F*_{μν}`, equal to `2⟨F, F⟩`.
pub fn lagrangian_density(a: &GaugePotential1) -> MoyalScalar {
    tensor_action_density(a.ctx(), &field_strength(a), MINKOWSKI)
}

/// `2⟨F, F⟩` from the pointwise form metric.
pub fn lagrangian_via_metric(a: &GaugePotential1) -> MoyalScalar {
    let f = field_strength(a);
    metric_pointwise(&f, &f, MINKOWSKI).expect("same context").scale_int(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ComplexRational;
    use crate::context::ThetaMatrix;
    use crate::scalar::x;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn c(v: BigRational) -> MoyalScalar {
        MoyalScalar::constant(ComplexRational::real(v))
    }

    fn zero() -> MoyalScalar {
        MoyalScalar::zero()
    }

    fn solution1(t: BigRational) -> GaugePotential1 {
        let ctx = AlgebraContext::new(ThetaMatrix::single(2, 3, t));
        GaugePotential1::new(&ctx, zero(), VectorField3::new(zero(), -x(3), -x(1).mul_commutative(&x(2))))
    }

    fn solution2(qv: BigRational) -> GaugePotential1 {
        let ctx = AlgebraContext::new(ThetaMatrix::single(0, 1, q(1, 1)).with(0, 2, qv));
        GaugePotential1::new(&ctx, x(1).mul_commutative(&x(2)), VectorField3::new(x(0), zero(), zero()))
    }

    #[test]
    fn form_view_round_trips() {
        let a = solution2(q(2, 5));
        assert_eq!(GaugePotential1::from_form(&a.to_form()).unwrap(), a);
        let two = a.to_form().exterior_d();
        assert_eq!(GaugePotential1::from_form(&two), Err(FormError::NotOneForm(2)));
    }

    #[test]
    fn first_solution_fields() {
        let t = q(3, 7);
        let a = solution1(t.clone());
        let fields = decompose(&a);
        assert!(fields.e.is_zero() && fields.d.is_zero());
        assert_eq!(fields.b, VectorField3::new(MoyalScalar::one() - x(1), x(2), zero()));
        let h1 = MoyalScalar::one() - x(1).scale(&ComplexRational::real(q(1, 1) - t));
        assert_eq!(fields.h, VectorField3::new(h1, x(2), zero()));
        assert_eq!(field_form_from_pair(a.ctx(), &fields.d, &fields.h), fields.f);
    }

    #[test]
    fn first_solution_is_yang_mills_with_magnetic_charge() {
        let t = q(3, 7);
        let a = solution1(t.clone());
        let report = charges_currents(&a);
        assert_eq!(report.rho_m, c(t.clone()));
        assert!(report.j_m.is_zero() && report.rho_e.is_zero() && report.j_e.is_zero());
        assert!(report.bianchi_holds() && report.dynamical_holds());
        assert!(geometric_residual(&a).is_zero());
        assert!(dynamical_residual(&a).is_zero());
        // dF itself does not vanish.
        let df = field_strength(&a).exterior_d();
        assert_eq!(df, DifferentialForm::basis(a.ctx(), b3(1, 2, 3), -c(t)));
    }

    #[test]
    fn second_solution_is_yang_mills_with_electric_charge() {
        let qv = q(2, 5);
        let a = solution2(qv.clone());
        let fields = decompose(&a);
        let d1 = x(1).scale(&ComplexRational::real(qv.clone())) - MoyalScalar::one();
        assert_eq!(fields.d, VectorField3::new(d1, -x(1), zero()));
        assert_eq!(fields.e, VectorField3::new(-MoyalScalar::one() - x(2), -x(1), zero()));
        assert!(fields.b.is_zero() && fields.h.is_zero());
        let report = charges_currents(&a);
        assert_eq!(report.rho_e, c(qv));
        assert_eq!(report.j_m, VectorField3::new(zero(), zero(), MoyalScalar::one()));
        assert!(report.bianchi_holds() && report.dynamical_holds());
        assert!(dynamical_residual(&a).is_zero());
    }

    #[test]
    fn generic_potential_is_not_yang_mills() {
        let ctx = AlgebraContext::new(ThetaMatrix::single(0, 1, q(1, 1)));
        let a = GaugePotential1::new(&ctx, zero(), VectorField3::new(x(0).mul_commutative(&x(0)).mul_commutative(&x(1)), zero(), zero()));
        assert!(!dynamical_residual(&a).is_zero());
        assert!(geometric_residual(&a).is_zero());
    }

    #[test]
    fn proof_maps_and_tensor_checks_on_solutions() {
        for a in [solution1(q(1, 1)), solution1(q(-2, 5)), solution2(q(2, 5))] {
            assert!(proof_map_check(&a).all());
            assert!(tensor_cross_check(&a).all());
            let lorenz = lorenz_gauge_report(&a);
            assert!(lorenz.gauge_residual.is_zero());
            assert!(lorenz.wave_residual.iter().all(MoyalScalar::is_zero));
        }
    }

    #[test]
    fn adjoint_formulas_agree_on_solutions() {
        for a in [solution1(q(3, 7)), solution2(q(2, 5))] {
            let f = field_strength(&a);
            assert_eq!(ds_star_apply(&a, &f).unwrap(), ds_star_composed(&a, &f, MINKOWSKI).unwrap());
        }
        let a = solution1(q(3, 7));
        let scalar = DifferentialForm::scalar(a.ctx(), x(1));
        assert_eq!(ds_star_apply(&a, &scalar), Err(FormError::GradeZero));
    }

    #[test]
    fn lagrangian_values() {
        // θ = 0: 2(B1² + B2²) with B = (1 − x1, x2, 0).
        let a = solution1(q(0, 1));
        let b1 = MoyalScalar::one() - x(1);
        let want = (b1.mul_commutative(&b1) + x(2).mul_commutative(&x(2))).scale_int(2);
        assert_eq!(lagrangian_density(&a), want);
        assert_eq!(lagrangian_via_metric(&a), want);
        let a = solution2(q(2, 5));
        let want = c(q(-2, 1)) + x(1).scale(&ComplexRational::from_ratio(8, 5))
            - x(1).mul_commutative(&x(1)).scale(&ComplexRational::from_ratio(58, 25));
        assert_eq!(lagrangian_density(&a), want);
        assert!(lagrangian_density(&a).is_real());
    }
}
