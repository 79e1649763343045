//! Randomized exact checks of the algebraic identities, deterministic per seed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::context::AlgebraContext;
use crate::dual::{self, adjoint_composition_gap, dual_maxwell_report, dual_proof_map_check, swap_equivariant, FormPair, GaugePotential2};
use crate::forms::{graded_commutator, hodge_left, metric_pointwise, BasisIndex, DifferentialForm, MetricSignature};
use crate::random::{random_context, random_form, random_mixed_form, random_potential1, random_potential2, random_scalar};
use crate::scalar::MoyalScalar;
use crate::scenario::{Model, SCHEMA_VERSION};
use crate::single::{self, GaugePotential1};

const SIGNATURES: [MetricSignature; 2] = [MetricSignature::Minkowski, MetricSignature::Euclidean];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantifier {
    /// Must hold on every trial.
    ForAll,
    /// Passes once a single trial exhibits the property.
    Exists,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityOutcome {
    pub name: String,
    pub quantifier: Quantifier,
    /// Trials actually run; existence searches stop at the first hit.
    pub trials: usize,
    pub failures: usize,
    pub passed: bool,
    /// First counterexample for `ForAll`, the witness for `Exists`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub example: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub schema_version: String,
    pub model: Model,
    pub seed: u64,
    pub trials: usize,
    pub max_degree: u32,
    pub identities: Vec<IdentityOutcome>,
    pub all_passed: bool,
}

impl FuzzReport {
    pub fn identity(&self, name: &str) -> Option<&IdentityOutcome> {
        self.identities.iter().find(|i| i.name == name)
    }
}

/// One trial: `Ok(None)` means nothing to report, `Ok(Some(text))` a hit
/// for an existence search, `Err(text)` a counterexample.
type Trial = fn(&mut ChaCha8Rng, u32) -> Result<Option<String>, String>;

fn fail(what: &str, ctx: &AlgebraContext, detail: String) -> Result<Option<String>, String> {
    Err(format!("{what}; theta: {}; {detail}", ctx.theta()))
}

fn describe1(a: &GaugePotential1) -> String {
    format!("phi = {}, a = {}", a.phi, a.a)
}

fn describe2(a: &GaugePotential2) -> String {
    format!("e: {}; m: {}", describe1(&a.e_part), describe1(&a.m_part))
}

fn star_associativity(rng: &mut ChaCha8Rng, deg: u32) -> Result<Option<String>, String> {
    let ctx = random_context(rng);
    let [f, g, h] = std::array::from_fn(|_| random_scalar(rng, deg, 3));
    let left = ctx.star(&ctx.star(&f, &g), &h);
    let right = ctx.star(&f, &ctx.star(&g, &h));
    if left == right {
        Ok(None)
    } else {
        fail("(f*g)*h != f*(g*h)", &ctx, format!("f = {f}, g = {g}, h = {h}"))
    }
}

fn coordinate_commutators(rng: &mut ChaCha8Rng, _deg: u32) -> Result<Option<String>, String> {
    let ctx = random_context(rng);
    for mu in 0..4 {
        for nu in 0..4 {
            let c = ctx.commutator(&crate::scalar::x(mu), &crate::scalar::x(nu));
            let want = MoyalScalar::constant(crate::ComplexRational::new(num_traits::Zero::zero(), ctx.theta().get(mu, nu).clone()));
            if c != want {
                return fail("[x^mu, x^nu] != i theta^{mu nu}", &ctx, format!("pair ({mu}, {nu}): {c}"));
            }
        }
    }
    Ok(None)
}

fn d_squared(rng: &mut ChaCha8Rng, deg: u32) -> Result<Option<String>, String> {
    let ctx = random_context(rng);
    let alpha = random_mixed_form(rng, &ctx, deg + 1);
    let dd = alpha.exterior_d().exterior_d();
    if dd.is_zero() {
        Ok(None)
    } else {
        fail("d(d alpha) != 0", &ctx, format!("alpha = {alpha}"))
    }
}

/// `⋆⋆ = s(k)` on grade k.
pub fn hodge_square_sign(sig: MetricSignature, k: usize) -> i64 {
    let base = if (k * (4 - k)) % 2 == 0 { 1 } else { -1 };
    match sig {
        MetricSignature::Euclidean => base,
        MetricSignature::Minkowski => -base,
    }
}

fn hodge_square(rng: &mut ChaCha8Rng, deg: u32) -> Result<Option<String>, String> {
    let ctx = random_context(rng);
    for sig in SIGNATURES {
        for k in 0..=4 {
            let alpha = random_form(rng, &ctx, k, deg);
            let twice = hodge_left(&hodge_left(&alpha, sig), sig);
            if twice != alpha.scale_int(hodge_square_sign(sig, k)) {
                return fail("star star sign law", &ctx, format!("{sig:?}, grade {k}, alpha = {alpha}"));
            }
        }
    }
    Ok(None)
}

fn hodge_defining_relation(rng: &mut ChaCha8Rng, deg: u32) -> Result<Option<String>, String> {
    let ctx = random_context(rng);
    for sig in SIGNATURES {
        for k in 0..=4 {
            let hat = random_form(rng, &ctx, k, deg);
            let alpha = random_form(rng, &ctx, k, deg);
            let lhs = hat.wedge_same_ctx(&hodge_left(&alpha, sig));
            let rhs = DifferentialForm::basis(&ctx, BasisIndex::DVOL, metric_pointwise(&hat, &alpha, sig).expect("same context"));
            if lhs != rhs {
                return fail("hat ^ star alpha != <hat, alpha> dvol", &ctx, format!("{sig:?}, hat = {hat}, alpha = {alpha}"));
            }
        }
    }
    Ok(None)
}

fn graded_involution(rng: &mut ChaCha8Rng, deg: u32) -> Result<Option<String>, String> {
    let ctx = random_context(rng);
    let (j, k) = (rng.gen_range(0..=4), rng.gen_range(0..=4));
    let alpha = random_form(rng, &ctx, j, deg);
    let beta = random_form(rng, &ctx, k, deg);
    let lhs = alpha.wedge_same_ctx(&beta).involution();
    let rhs = beta.involution().wedge_same_ctx(&alpha.involution()).scale_int(if (j * k) % 2 == 0 { 1 } else { -1 });
    if lhs == rhs {
        Ok(None)
    } else {
        fail("*(alpha ^ beta) != (-1)^{jk} *beta ^ *alpha", &ctx, format!("alpha = {alpha}, beta = {beta}"))
    }
}

fn bianchi(rng: &mut ChaCha8Rng, deg: u32) -> Result<Option<String>, String> {
    let ctx = random_context(rng);
    let a = random_potential1(rng, &ctx, deg);
    let report = single::charges_currents(&a);
    if single::geometric_residual(&a).is_zero() && single::geometric_residual_via_da(&a).is_zero() && report.bianchi_holds() {
        Ok(None)
    } else {
        fail("dF != d^S F", &ctx, describe1(&a))
    }
}

fn df_nonzero(rng: &mut ChaCha8Rng, deg: u32) -> Result<Option<String>, String> {
    let ctx = random_context(rng);
    let a = random_potential1(rng, &ctx, deg);
    let df = single::field_strength(&a).exterior_d();
    Ok((!df.is_zero()).then(|| format!("theta: {}; {}; dF = {df}", ctx.theta(), describe1(&a))))
}

fn single_adjoint_composition(rng: &mut ChaCha8Rng, deg: u32) -> Result<Option<String>, String> {
    let ctx = random_context(rng);
    let a = random_potential1(rng, &ctx, deg);
    let grade = rng.gen_range(1..=4);
    let t = random_form(rng, &ctx, grade, deg);
    for sig in SIGNATURES {
        let direct = single::ds_star_with(&a, &t, sig).expect("grade >= 1");
        let composed = single::ds_star_composed(&a, &t, sig).expect("grade >= 1");
        if direct != composed {
            return fail("adjoint differs from composed form", &ctx, format!("{sig:?}; {}; T = {t}", describe1(&a)));
        }
    }
    Ok(None)
}

fn tensor_forms(rng: &mut ChaCha8Rng, deg: u32) -> Result<Option<String>, String> {
    let ctx = random_context(rng);
    let a = random_potential1(rng, &ctx, deg);
    let check = single::tensor_cross_check(&a);
    if check.field_tensor_matches && check.dynamical_components_match && check.dual_divergence_matches && check.magnetic_current_matches {
        Ok(None)
    } else {
        fail("index form disagrees with forms", &ctx, format!("{}; {check:?}", describe1(&a)))
    }
}

fn single_proof_maps(rng: &mut ChaCha8Rng, deg: u32) -> Result<Option<String>, String> {
    let ctx = random_context(rng);
    let a = random_potential1(rng, &ctx, deg);
    let check = single::proof_map_check(&a);
    if check.all() {
        Ok(None)
    } else {
        fail("form components disagree with fields", &ctx, format!("{}; {check:?}", describe1(&a)))
    }
}

fn dual_bianchi(rng: &mut ChaCha8Rng, deg: u32) -> Result<Option<String>, String> {
    let ctx = random_context(rng);
    let a = random_potential2(rng, &ctx, deg);
    let report = dual_maxwell_report(&a);
    if report.bianchi_holds() {
        Ok(None)
    } else {
        fail("dual Bianchi identity fails", &ctx, format!("{}; violated {:?}", describe2(&a), report.residuals.violated()))
    }
}

fn dual_swap(rng: &mut ChaCha8Rng, deg: u32) -> Result<Option<String>, String> {
    let ctx = random_context(rng);
    let a = random_potential2(rng, &ctx, deg);
    let swapped = dual::duality_swap(&a);
    if swap_equivariant(&a) && dual::duality_swap(&swapped) == a && dual::dual_action_density(&swapped) == dual::dual_action_density(&a) {
        Ok(None)
    } else {
        fail("swap symmetry broken", &ctx, describe2(&a))
    }
}

fn dual_proof_maps(rng: &mut ChaCha8Rng, deg: u32) -> Result<Option<String>, String> {
    let ctx = random_context(rng);
    let a = random_potential2(rng, &ctx, deg);
    let check = dual_proof_map_check(&a);
    if check.all() {
        Ok(None)
    } else {
        fail("form components disagree with fields", &ctx, format!("{}; {check:?}", describe2(&a)))
    }
}

fn dual_adjoint_gap(rng: &mut ChaCha8Rng, deg: u32) -> Result<Option<String>, String> {
    let ctx = random_context(rng);
    let a = random_potential2(rng, &ctx, deg);
    let grade = rng.gen_range(1..=4);
    let t = FormPair::new(random_form(rng, &ctx, grade, deg), random_form(rng, &ctx, grade, deg));
    let gap = adjoint_composition_gap(&a, &t).expect("grade >= 1");
    Ok((!gap.is_zero()).then(|| {
        format!("theta: {}; {}; T_e = {}; T_m = {}; gap e = {}; gap m = {}", ctx.theta(), describe2(&a), t.e, t.m, gap.e, gap.m)
    }))
}

fn graded_commutator_additive(rng: &mut ChaCha8Rng, deg: u32) -> Result<Option<String>, String> {
    let ctx = random_context(rng);
    let alpha = random_form(rng, &ctx, 1, deg);
    let k = rng.gen_range(0..=3);
    let t1 = random_form(rng, &ctx, k, deg);
    let t2 = random_form(rng, &ctx, k, deg);
    let lhs = graded_commutator(&alpha, &(t1.clone() + t2.clone())).expect("1-form");
    let rhs = graded_commutator(&alpha, &t1).expect("1-form") + graded_commutator(&alpha, &t2).expect("1-form");
    if lhs == rhs {
        Ok(None)
    } else {
        fail("graded commutator not additive", &ctx, format!("alpha = {alpha}, T1 = {t1}, T2 = {t2}"))
    }
}

fn suite(model: Model) -> Vec<(&'static str, Quantifier, Trial)> {
    use Quantifier::{Exists, ForAll};
    let mut out: Vec<(&'static str, Quantifier, Trial)> = vec![
        ("star_associativity", ForAll, star_associativity),
        ("coordinate_commutators", ForAll, coordinate_commutators),
        ("d_squared", ForAll, d_squared),
        ("hodge_square", ForAll, hodge_square),
        ("hodge_defining_relation", ForAll, hodge_defining_relation),
        ("graded_involution", ForAll, graded_involution),
        ("graded_commutator_additive", ForAll, graded_commutator_additive),
    ];
    match model {
        Model::Single => out.extend([
            ("bianchi", ForAll, bianchi as Trial),
            ("df_nonzero", Exists, df_nonzero),
            ("adjoint_composition", ForAll, single_adjoint_composition),
            ("tensor_forms", ForAll, tensor_forms),
            ("proof_maps", ForAll, single_proof_maps),
        ]),
        Model::Dual => out.extend([
            ("dual_bianchi", ForAll, dual_bianchi as Trial),
            ("swap_equivariance", ForAll, dual_swap),
            ("proof_maps", ForAll, dual_proof_maps),
            ("adjoint_composition_gap", Exists, dual_adjoint_gap),
        ]),
    }
    out
}

/// Names of the identities run for `model`, in report order.
pub fn identity_names(model: Model) -> Vec<&'static str> {
    suite(model).into_iter().map(|(n, _, _)| n).collect()
}

fn run_identity(name: &str, quantifier: Quantifier, trial: Trial, seed: u64, stream: u64, trials: usize, max_degree: u32) -> IdentityOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut outcome = IdentityOutcome { name: name.to_string(), quantifier, trials: 0, failures: 0, passed: false, example: None };
    for _ in 0..trials {
        outcome.trials += 1;
        match trial(&mut rng, max_degree) {
            Ok(None) => {}
            Ok(Some(hit)) => {
                outcome.example = Some(hit);
                if quantifier == Quantifier::Exists {
                    break;
                }
            }
            Err(counterexample) => {
                outcome.failures += 1;
                outcome.example.get_or_insert(counterexample);
            }
        }
    }
    outcome.passed = match quantifier {
        Quantifier::ForAll => outcome.failures == 0,
        Quantifier::Exists => outcome.example.is_some(),
    };
    outcome
}

/// Runs the identity suite of `model`; each identity draws from its own stream.
pub fn identity_fuzz(model: Model, seed: u64, trials: usize, max_degree: u32) -> FuzzReport {
    let identities: Vec<IdentityOutcome> = suite(model)
        .into_iter()
        .enumerate()
        .map(|(i, (name, q, trial))| run_identity(name, q, trial, seed, i as u64, trials.max(1), max_degree))
        .collect();
    FuzzReport {
        schema_version: SCHEMA_VERSION.to_string(),
        model,
        seed,
        trials: trials.max(1),
        max_degree,
        all_passed: identities.iter().all(|i| i.passed),
        identities,
    }
}

/// Runs a single identity by name.
pub fn run_named(model: Model, name: &str, seed: u64, trials: usize, max_degree: u32) -> Option<IdentityOutcome> {
    suite(model)
        .into_iter()
        .enumerate()
        .find(|(_, (n, _, _))| *n == name)
        .map(|(i, (n, q, trial))| run_identity(n, q, trial, seed, i as u64, trials.max(1), max_degree))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_sign_table() {
        let m: Vec<i64> = (0..=4).map(|k| hodge_square_sign(MetricSignature::Minkowski, k)).collect();
        let e: Vec<i64> = (0..=4).map(|k| hodge_square_sign(MetricSignature::Euclidean, k)).collect();
        assert_eq!(m, vec![-1, 1, -1, 1, -1]);
        assert_eq!(e, vec![1, -1, 1, -1, 1]);
    }

    #[test]
    fn small_runs_pass_and_are_deterministic() {
        let a = identity_fuzz(Model::Single, 3, 4, 2);
        assert!(a.all_passed, "{a:#?}");
        assert_eq!(a, identity_fuzz(Model::Single, 3, 4, 2));
        let d = identity_fuzz(Model::Dual, 3, 4, 2);
        assert!(d.identities.iter().filter(|i| i.quantifier == Quantifier::ForAll).all(|i| i.passed), "{d:#?}");
    }

    #[test]
    fn constant_potentials() {
        let r = identity_fuzz(Model::Single, 0, 5, 0);
        let df = r.identity("df_nonzero").unwrap();
        assert!(!df.passed && df.trials == 5);
        assert!(r.identities.iter().filter(|i| i.quantifier == Quantifier::ForAll).all(|i| i.passed));
    }
}
