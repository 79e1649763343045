//! Scenario files, verification runs and JSON reports.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::classical::classical_maxwell;
use crate::complex::parse_rational;
use crate::context::{AlgebraContext, ThetaMatrix, THETA_PAIRS};
use crate::dual::{self, dual_decompose, dual_maxwell_report, dual_proof_map_check, swap_equivariant, GaugePotential2};
use crate::error::ScenarioError;
use crate::expr::parse_polynomial;
use crate::forms::{DifferentialForm, MetricSignature};
use crate::scalar::MoyalScalar;
use crate::single::{self, charges_currents, decompose, GaugePotential1};
use crate::vector::VectorField3;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Single,
    Dual,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::Single => "single",
            Model::Dual => "dual",
        }
    }

    pub fn signature(self) -> Signature {
        match self {
            Model::Single => Signature::Minkowski,
            Model::Dual => Signature::Euclidean,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Signature {
    Minkowski,
    Euclidean,
}

impl Signature {
    pub fn name(self) -> &'static str {
        match self {
            Signature::Minkowski => "minkowski",
            Signature::Euclidean => "euclidean",
        }
    }

    pub fn metric(self) -> MetricSignature {
        match self {
            Signature::Minkowski => MetricSignature::Minkowski,
            Signature::Euclidean => MetricSignature::Euclidean,
        }
    }
}

/// Expression strings for the potential; which keys are required depends on the model.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PotentialSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi_e: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_e: Option<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi_m: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_m: Option<[String; 3]>,
}

/// A scalar or a 3-vector, either as expression text or rendered output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Rendered {
    Scalar(String),
    Vector([String; 3]),
}

/// Scenario file as written on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub schema_version: Option<String>,
    #[serde(default)]
    pub name: Option<String>,
    pub model: Option<Model>,
    pub signature: Option<Signature>,
    pub theta: Option<BTreeMap<String, String>>,
    pub potential: Option<PotentialSpec>,
    #[serde(default)]
    pub checks: Vec<String>,
    /// Expected quantities, compared after commutative evaluation.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expect: BTreeMap<String, Rendered>,
    /// Expected names of the violated component equations.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violated: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Bianchi,
    YangMills,
    NotYangMills,
    Instanton,
    NotInstanton,
    Conservation,
    Tensor,
    ProofMaps,
    LorenzGauge,
    ClassicalLimit,
    AdjointComposition,
    SwapEquivariance,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::Bianchi,
        Check::YangMills,
        Check::NotYangMills,
        Check::Instanton,
        Check::NotInstanton,
        Check::Conservation,
        Check::Tensor,
        Check::ProofMaps,
        Check::LorenzGauge,
        Check::ClassicalLimit,
        Check::AdjointComposition,
        Check::SwapEquivariance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Bianchi => "bianchi",
            Check::YangMills => "yang_mills",
            Check::NotYangMills => "not_yang_mills",
            Check::Instanton => "instanton",
            Check::NotInstanton => "not_instanton",
            Check::Conservation => "conservation",
            Check::Tensor => "tensor",
            Check::ProofMaps => "proof_maps",
            Check::LorenzGauge => "lorenz_gauge",
            Check::ClassicalLimit => "classical_limit",
            Check::AdjointComposition => "adjoint_composition",
            Check::SwapEquivariance => "swap_equivariance",
        }
    }

    pub fn from_name(name: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == name)
    }

    fn applies_to(self, model: Model) -> bool {
        match self {
            Check::Tensor | Check::LorenzGauge => model == Model::Single,
            Check::Instanton | Check::NotInstanton | Check::SwapEquivariance => model == Model::Dual,
            _ => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Potential {
    Single(GaugePotential1),
    Dual(GaugePotential2),
}

/// Validated scenario.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub file: ScenarioFile,
    pub name: String,
    pub model: Model,
    pub theta: ThetaMatrix,
    pub checks: Vec<Check>,
}

fn theta_key(mu: usize, nu: usize) -> String {
    format!("{mu}{nu}")
}

fn parse_expr(field: &str, text: &str, ctx: &AlgebraContext) -> Result<MoyalScalar, ScenarioError> {
    parse_polynomial(text)
        .map(|e| e.evaluate(ctx))
        .map_err(|source| ScenarioError::Expression { field: field.to_string(), source })
}

fn parse_vector(field: &str, texts: &[String; 3], ctx: &AlgebraContext) -> Result<VectorField3, ScenarioError> {
    Ok(VectorField3::new(
        parse_expr(&format!("{field}[0]"), &texts[0], ctx)?,
        parse_expr(&format!("{field}[1]"), &texts[1], ctx)?,
        parse_expr(&format!("{field}[2]"), &texts[2], ctx)?,
    ))
}

fn required<'a, T>(value: &'a Option<T>, field: &str) -> Result<&'a T, ScenarioError> {
    value.as_ref().ok_or_else(|| ScenarioError::MissingField(field.to_string()))
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self, ScenarioError> {
        Self::from_file(serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, ScenarioError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|source| ScenarioError::Io { path: path.display().to_string(), source })?;
        Self::from_json(&text)
    }

    pub fn from_file(file: ScenarioFile) -> Result<Self, ScenarioError> {
        let version = required(&file.schema_version, "schema_version")?;
        if version != SCHEMA_VERSION {
            return Err(ScenarioError::SchemaVersion(version.clone()));
        }
        let model = *required(&file.model, "model")?;
        let signature = *required(&file.signature, "signature")?;
        if signature != model.signature() {
            return Err(ScenarioError::SignatureMismatch {
                model: model.name().to_string(),
                expected: model.signature().name().to_string(),
                found: signature.name().to_string(),
            });
        }
        let theta_map = required(&file.theta, "theta")?;
        let known: Vec<String> = THETA_PAIRS.iter().map(|&(m, n)| theta_key(m, n)).collect();
        if let Some(extra) = theta_map.keys().find(|k| !known.contains(k)) {
            return Err(ScenarioError::Invalid {
                field: "theta".into(),
                message: format!("unknown entry {extra:?}; expected one of {}", known.join(", ")),
            });
        }
        let mut upper = Vec::with_capacity(6);
        for key in &known {
            let text = theta_map.get(key).ok_or_else(|| ScenarioError::MissingField(format!("theta.{key}")))?;
            upper.push(parse_rational(text).map_err(|source| ScenarioError::Theta { entry: key.clone(), source })?);
        }
        let theta = ThetaMatrix::from_upper(upper.try_into().expect("six entries"));
        required(&file.potential, "potential")?;
        let mut checks = Vec::new();
        for name in &file.checks {
            let check = Check::from_name(name).ok_or_else(|| ScenarioError::UnknownCheck(name.clone()))?;
            if !check.applies_to(model) {
                return Err(ScenarioError::NotApplicable { check: name.clone(), model: model.name().to_string() });
            }
            checks.push(check);
        }
        let scenario = Scenario { name: file.name.clone().unwrap_or_default(), model, theta, checks, file };
        scenario.potential()?;
        Ok(scenario)
    }

    pub fn context(&self) -> AlgebraContext {
        AlgebraContext::new(self.theta.clone())
    }

    /// Evaluates the potential strings in the scenario's context.
    pub fn potential(&self) -> Result<Potential, ScenarioError> {
        self.potential_in(&self.context())
    }

    pub fn potential_in(&self, ctx: &AlgebraContext) -> Result<Potential, ScenarioError> {
        let spec = required(&self.file.potential, "potential")?;
        let unused: &[(&str, bool)] = match self.model {
            Model::Single => &[
                ("phi_e", spec.phi_e.is_some()),
                ("a_e", spec.a_e.is_some()),
                ("phi_m", spec.phi_m.is_some()),
                ("a_m", spec.a_m.is_some()),
            ],
            Model::Dual => &[("phi", spec.phi.is_some()), ("a", spec.a.is_some())],
        };
        if let Some((name, _)) = unused.iter().find(|(_, present)| *present) {
            return Err(ScenarioError::Invalid {
                field: format!("potential.{name}"),
                message: format!("not used by the {} model", self.model.name()),
            });
        }
        match self.model {
            Model::Single => {
                let phi = parse_expr("potential.phi", required(&spec.phi, "potential.phi")?, ctx)?;
                let a = parse_vector("potential.a", required(&spec.a, "potential.a")?, ctx)?;
                Ok(Potential::Single(GaugePotential1::new(ctx, phi, a)))
            }
            Model::Dual => {
                Ok(Potential::Dual(GaugePotential2::new(
                    ctx,
                    parse_expr("potential.phi_e", required(&spec.phi_e, "potential.phi_e")?, ctx)?,
                    parse_vector("potential.a_e", required(&spec.a_e, "potential.a_e")?, ctx)?,
                    parse_expr("potential.phi_m", required(&spec.phi_m, "potential.phi_m")?, ctx)?,
                    parse_vector("potential.a_m", required(&spec.a_m, "potential.a_m")?, ctx)?,
                )))
            }
        }
    }

    /// Expected values, evaluated commutatively.
    fn expectations(&self) -> Result<Vec<(String, Quantity)>, ScenarioError> {
        let ctx = AlgebraContext::commutative();
        self.file
            .expect
            .iter()
            .map(|(name, value)| {
                let field = format!("expect.{name}");
                Ok((
                    name.clone(),
                    match value {
                        Rendered::Scalar(s) => Quantity::Scalar(parse_expr(&field, s, &ctx)?),
                        Rendered::Vector(v) => Quantity::Vector(parse_vector(&field, v, &ctx)?),
                    },
                ))
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Quantity {
    Scalar(MoyalScalar),
    Vector(VectorField3),
}

impl Quantity {
    pub fn is_zero(&self) -> bool {
        match self {
            Quantity::Scalar(s) => s.is_zero(),
            Quantity::Vector(v) => v.is_zero(),
        }
    }

    pub fn render(&self) -> Rendered {
        match self {
            Quantity::Scalar(s) => Rendered::Scalar(s.to_string()),
            Quantity::Vector(v) => Rendered::Vector([v[0].to_string(), v[1].to_string(), v[2].to_string()]),
        }
    }
}

impl From<MoyalScalar> for Quantity {
    fn from(s: MoyalScalar) -> Self {
        Quantity::Scalar(s)
    }
}

impl From<VectorField3> for Quantity {
    fn from(v: VectorField3) -> Self {
        Quantity::Vector(v)
    }
}

impl From<dual::ResidualValue> for Quantity {
    fn from(v: dual::ResidualValue) -> Self {
        match v {
            dual::ResidualValue::Scalar(s) => Quantity::Scalar(s),
            dual::ResidualValue::Vector(v) => Quantity::Vector(v),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value: Rendered,
    pub zero: bool,
}

impl NamedValue {
    fn new(name: &str, q: &Quantity) -> Self {
        Self { name: name.to_string(), value: q.render(), zero: q.is_zero() }
    }

    fn form(name: &str, f: &DifferentialForm) -> Self {
        Self { name: name.to_string(), value: Rendered::Scalar(f.to_string()), zero: f.is_zero() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstantonSummary {
    pub anti_self_dual: bool,
    pub fields_equal: bool,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: String,
    pub scenario: ScenarioFile,
    pub fields: BTreeMap<String, Rendered>,
    pub form_residuals: Vec<NamedValue>,
    pub residuals: Vec<NamedValue>,
    pub charges: BTreeMap<String, Rendered>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator_charges: Option<BTreeMap<String, Rendered>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub charges_agree: Option<bool>,
    pub conservation: Vec<NamedValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instanton: Option<InstantonSummary>,
    pub yang_mills: bool,
    pub violated_equations: Vec<String>,
    pub checks: Vec<CheckResult>,
    pub all_passed: bool,
}

fn render_map(items: &[(&str, Quantity)]) -> BTreeMap<String, Rendered> {
    items.iter().map(|(n, q)| (n.to_string(), q.render())).collect()
}

fn pass(name: &str, passed: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult { name: name.to_string(), passed, detail: detail.into() }
}

/// Vector equations that follow from the Bianchi identity, in either model.
const BIANCHI_SIDE: [&str; 6] = ["gauss_magnetic", "faraday", "gauss_h_e", "faraday_e", "gauss_d_m", "ampere_m"];

fn nonzero_names(values: &[NamedValue]) -> String {
    let names: Vec<&str> = values.iter().filter(|v| !v.zero).map(|v| v.name.as_str()).collect();
    if names.is_empty() {
        "all zero".to_string()
    } else {
        format!("nonzero: {}", names.join(", "))
    }
}

/// Side-by-side comparison of the θ = 0 run with commutative Maxwell theory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitEntry {
    pub name: String,
    pub deformed: Rendered,
    pub classical: Rendered,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitReport {
    pub schema_version: String,
    pub name: String,
    pub model: Model,
    /// Curvature equals the exterior derivative of the potential.
    pub field_strength_is_da: bool,
    pub charges_zero: bool,
    pub residuals: Vec<LimitEntry>,
    pub passed: bool,
}

fn limit_entry(name: &str, deformed: Quantity, classical: Quantity) -> LimitEntry {
    LimitEntry { name: name.to_string(), equal: deformed == classical, deformed: deformed.render(), classical: classical.render() }
}

fn arr(v: [MoyalScalar; 3]) -> VectorField3 {
    let [a, b, c] = v;
    VectorField3::new(a, b, c)
}

/// Re-runs the scenario with θ = 0 and compares against commutative Maxwell residuals.
pub fn classical_limit(s: &Scenario) -> Result<LimitReport, ScenarioError> {
    let ctx = AlgebraContext::commutative();
    let sig = s.model.signature().metric();
    let (field_strength_is_da, charges_zero, residuals) = match s.potential_in(&ctx)? {
        Potential::Single(a) => {
            let report = charges_currents(&a);
            let cl = classical_maxwell(&a.phi, &a.a.0, sig);
            let charges_zero =
                report.rho_m.is_zero() && report.rho_e.is_zero() && report.j_m.is_zero() && report.j_e.is_zero();
            let entries = vec![
                limit_entry("gauss_magnetic", report.gauss_magnetic_residual.into(), cl.gauss_magnetic.into()),
                limit_entry("faraday", report.faraday_residual.into(), arr(cl.faraday).into()),
                limit_entry("gauss_electric", report.gauss_electric_residual.into(), cl.gauss_electric.into()),
                limit_entry("ampere", report.ampere_residual.into(), arr(cl.ampere).into()),
            ];
            (single::field_strength(&a) == a.to_form().exterior_d(), charges_zero, entries)
        }
        Potential::Dual(a) => {
            let report = dual_maxwell_report(&a);
            let ce = classical_maxwell(&a.e_part.phi, &a.e_part.a.0, sig);
            let cm = classical_maxwell(&a.m_part.phi, &a.m_part.a.0, sig);
            let r = report.residuals;
            // The m curvature carries the classical magnetic field in the
            // electric slot, so its equations pair up crosswise.
            let entries = vec![
                limit_entry("gauss_h_e", r.gauss_h_e.into(), ce.gauss_magnetic.into()),
                limit_entry("faraday_e", r.faraday_e.into(), arr(ce.faraday).into()),
                limit_entry("gauss_d_e", r.gauss_d_e.into(), ce.gauss_electric.into()),
                limit_entry("ampere_e", r.ampere_e.into(), arr(ce.ampere).into()),
                limit_entry("gauss_d_m", r.gauss_d_m.into(), cm.gauss_magnetic.into()),
                limit_entry("ampere_m", r.ampere_m.into(), arr(cm.faraday).into()),
                limit_entry("gauss_h_m", r.gauss_h_m.into(), cm.gauss_electric.into()),
                limit_entry("faraday_m", r.faraday_m.into(), arr(cm.ampere).into()),
            ];
            let f = dual::dual_field_strength(&a);
            let is_da = f.e == a.e_part.to_form().exterior_d() && f.m == a.m_part.to_form().exterior_d();
            (is_da, report.charges.is_zero(), entries)
        }
    };
    let passed = field_strength_is_da && charges_zero && residuals.iter().all(|e| e.equal);
    Ok(LimitReport {
        schema_version: SCHEMA_VERSION.to_string(),
        name: s.name.clone(),
        model: s.model,
        field_strength_is_da,
        charges_zero,
        residuals,
        passed,
    })
}

struct Computed {
    quantities: Vec<(&'static str, Quantity)>,
    charge_names: &'static [&'static str],
    form_residuals: Vec<NamedValue>,
    residuals: Vec<NamedValue>,
    conservation: Vec<NamedValue>,
    operator_charges: Option<BTreeMap<String, Rendered>>,
    charges_agree: Option<bool>,
    instanton: Option<InstantonSummary>,
    yang_mills: bool,
    bianchi: bool,
}

fn compute_single(a: &GaugePotential1) -> Computed {
    let fields = decompose(a);
    let report = charges_currents(a);
    let geometric = single::geometric_residual(a);
    let dynamical = single::dynamical_residual(a);
    let residuals = vec![
        NamedValue::new("gauss_magnetic", &report.gauss_magnetic_residual.clone().into()),
        NamedValue::new("faraday", &report.faraday_residual.clone().into()),
        NamedValue::new("gauss_electric", &report.gauss_electric_residual.clone().into()),
        NamedValue::new("ampere", &report.ampere_residual.clone().into()),
    ];
    Computed {
        quantities: vec![
            ("e", fields.e.into()),
            ("b", fields.b.into()),
            ("d", fields.d.into()),
            ("h", fields.h.into()),
            ("lagrangian", single::lagrangian_density(a).into()),
            ("rho_m", report.rho_m.clone().into()),
            ("j_m", report.j_m.clone().into()),
            ("rho_e", report.rho_e.clone().into()),
            ("j_e", report.j_e.clone().into()),
        ],
        charge_names: &["rho_m", "j_m", "rho_e", "j_e"],
        form_residuals: vec![NamedValue::form("geometric", &geometric), NamedValue::form("dynamical", &dynamical)],
        conservation: vec![
            NamedValue::new("magnetic", &report.magnetic_conservation.clone().into()),
            NamedValue::new("electric", &report.electric_conservation.clone().into()),
        ],
        operator_charges: None,
        charges_agree: None,
        instanton: None,
        yang_mills: dynamical.is_zero() && report.dynamical_holds(),
        bianchi: geometric.is_zero() && report.bianchi_holds(),
        residuals,
    }
}

fn compute_dual(a: &GaugePotential2) -> Computed {
    let fields = dual_decompose(a);
    let report = dual_maxwell_report(a);
    let (op_rho_e, op_j_e, op_rho_m, op_j_m) = report.operator_charges.clone();
    let c = &report.charges;
    let operator = [
        ("rho_e", Quantity::from(op_rho_e)),
        ("j_e", op_j_e.into()),
        ("rho_m", op_rho_m.into()),
        ("j_m", op_j_m.into()),
    ];
    Computed {
        quantities: vec![
            ("e_e", fields.e_e.into()),
            ("b_e", fields.b_e.into()),
            ("d_e", fields.d_e.into()),
            ("h_e", fields.h_e.into()),
            ("e_m", fields.e_m.into()),
            ("b_m", fields.b_m.into()),
            ("d_m", fields.d_m.into()),
            ("h_m", fields.h_m.into()),
            ("action", dual::dual_action_density(a).into()),
            ("rho", c.rho.clone().into()),
            ("j", c.j.clone().into()),
            ("rho_e", c.rho_e.clone().into()),
            ("j_e", c.j_e.clone().into()),
            ("rho_m", c.rho_m.clone().into()),
            ("j_m", c.j_m.clone().into()),
        ],
        charge_names: &["rho", "j", "rho_e", "j_e", "rho_m", "j_m"],
        form_residuals: vec![
            NamedValue::form("bianchi_rhs", &report.bianchi_rhs),
            NamedValue::form("bianchi_e", &report.bianchi_residual.e),
            NamedValue::form("bianchi_m", &report.bianchi_residual.m),
            NamedValue::form("dynamical_e", &report.dynamical_residual.e),
            NamedValue::form("dynamical_m", &report.dynamical_residual.m),
        ],
        residuals: report.residuals.entries().into_iter().map(|(n, v)| NamedValue::new(n, &v.into())).collect(),
        conservation: ["shared", "electric", "magnetic"]
            .iter()
            .zip(&report.conservation)
            .map(|(n, v)| NamedValue::new(n, &v.clone().into()))
            .collect(),
        operator_charges: Some(render_map(&operator)),
        charges_agree: Some(report.charges_agree),
        instanton: Some(InstantonSummary {
            anti_self_dual: report.instanton.anti_self_dual,
            fields_equal: report.instanton.fields_equal,
            agree: report.instanton.agree(),
        }),
        yang_mills: report.yang_mills(),
        bianchi: report.bianchi_holds(),
    }
}

/// Runs every requested check; deterministic for a given scenario.
pub fn run_verification(s: &Scenario) -> Result<VerificationReport, ScenarioError> {
    let potential = s.potential()?;
    let computed = match &potential {
        Potential::Single(a) => compute_single(a),
        Potential::Dual(a) => compute_dual(a),
    };
    let violated_equations: Vec<String> =
        computed.residuals.iter().filter(|r| !r.zero).map(|r| r.name.clone()).collect();
    let mut checks = Vec::new();
    for &check in &s.checks {
        let name = check.name();
        let result = match (check, &potential) {
            (Check::Bianchi, _) => {
                let side: Vec<NamedValue> =
                    computed.residuals.iter().filter(|r| BIANCHI_SIDE.contains(&r.name.as_str())).cloned().collect();
                pass(name, computed.bianchi, nonzero_names(&side))
            }
            (Check::YangMills, _) => pass(name, computed.yang_mills, nonzero_names(&computed.form_residuals)),
            (Check::NotYangMills, _) => pass(name, !computed.yang_mills, nonzero_names(&computed.form_residuals)),
            (Check::Instanton | Check::NotInstanton, _) => {
                let inst = computed.instanton.as_ref().expect("dual model");
                let verdict = inst.anti_self_dual && inst.agree;
                let want = check == Check::Instanton;
                pass(
                    name,
                    inst.agree && verdict == want,
                    format!("anti_self_dual={}, fields_equal={}", inst.anti_self_dual, inst.fields_equal),
                )
            }
            (Check::Conservation, _) => {
                pass(name, computed.conservation.iter().all(|c| c.zero), nonzero_names(&computed.conservation))
            }
            (Check::Tensor, Potential::Single(a)) => {
                let t = single::tensor_cross_check(a);
                let detail = format!(
                    "field_tensor={}, dual_divergence={}, classical_restriction={}, magnetic_current={}, dynamical_components={}",
                    t.field_tensor_matches,
                    t.dual_divergence_matches,
                    t.classical_restriction_matches,
                    t.magnetic_current_matches,
                    t.dynamical_components_match
                );
                pass(name, t.all(), detail)
            }
            (Check::ProofMaps, Potential::Single(a)) => {
                let p = single::proof_map_check(a);
                pass(name, p.all(), format!("{p:?}"))
            }
            (Check::ProofMaps, Potential::Dual(a)) => {
                let p = dual_proof_map_check(a);
                pass(name, p.all(), format!("{p:?}"))
            }
            (Check::LorenzGauge, Potential::Single(a)) => {
                let l = single::lorenz_gauge_report(a);
                let ok = l.gauge_residual.is_zero() && l.wave_residual.iter().all(MoyalScalar::is_zero);
                pass(name, ok, format!("gauge residual {}", l.gauge_residual))
            }
            (Check::ClassicalLimit, _) => {
                let l = classical_limit(s)?;
                let bad: Vec<&str> = l.residuals.iter().filter(|e| !e.equal).map(|e| e.name.as_str()).collect();
                pass(
                    name,
                    l.passed,
                    format!("field_strength_is_da={}, charges_zero={}, mismatched=[{}]", l.field_strength_is_da, l.charges_zero, bad.join(", ")),
                )
            }
            (Check::AdjointComposition, Potential::Single(a)) => {
                let f = single::field_strength(a);
                let sig = s.model.signature().metric();
                let ok = single::ds_star_with(a, &f, sig).ok() == single::ds_star_composed(a, &f, sig).ok();
                pass(name, ok, "direct adjoint against the composed form on F")
            }
            (Check::AdjointComposition, Potential::Dual(a)) => {
                let gap = dual::adjoint_composition_gap(a, &dual::dual_field_strength(a)).expect("2-forms");
                pass(name, gap.is_zero(), format!("gap e: {}, gap m: {}", gap.e, gap.m))
            }
            (Check::SwapEquivariance, Potential::Dual(a)) => pass(name, swap_equivariant(a), "fields, charges and residuals"),
            (c, _) => unreachable!("check {} validated against the model", c.name()),
        };
        checks.push(result);
    }
    let expectations = s.expectations()?;
    if !expectations.is_empty() {
        let mut mismatched = Vec::new();
        for (name, want) in &expectations {
            match computed.quantities.iter().find(|(n, _)| n == name) {
                Some((_, got)) if got == want => {}
                Some((_, got)) => mismatched.push(format!("{name}: got {:?}", got.render())),
                None => mismatched.push(format!("{name}: unknown quantity")),
            }
        }
        let detail = if mismatched.is_empty() { format!("{} values match", expectations.len()) } else { mismatched.join("; ") };
        checks.push(pass("expectations", mismatched.is_empty(), detail));
    }
    if let Some(want) = &s.file.violated {
        checks.push(pass("violated_equations", want == &violated_equations, format!("violated: [{}]", violated_equations.join(", "))));
    }
    let (charges, fields): (Vec<_>, Vec<_>) =
        computed.quantities.iter().cloned().partition(|(n, _)| computed.charge_names.contains(n));
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION.to_string(),
        scenario: s.file.clone(),
        fields: render_map(&fields),
        form_residuals: computed.form_residuals,
        residuals: computed.residuals,
        charges: render_map(&charges),
        operator_charges: computed.operator_charges,
        charges_agree: computed.charges_agree,
        conservation: computed.conservation,
        instanton: computed.instanton,
        yang_mills: computed.yang_mills,
        violated_equations,
        all_passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SOLUTION1: &str = r#"{
        "schema_version": "1", "name": "s1", "model": "single", "signature": "minkowski",
        "theta": {"01": "0", "02": "0", "03": "0", "12": "0", "13": "0", "23": "3/7"},
        "potential": {"phi": "0", "a": ["0", "-x3", "-x1*x2"]},
        "checks": ["bianchi", "yang_mills", "conservation", "tensor", "proof_maps", "lorenz_gauge"],
        "expect": {"rho_m": "3/7", "h": ["1 - 4/7*x1", "x2", "0"]}
    }"#;

    #[test]
    fn solution_one_passes() {
        let s = Scenario::from_json(SOLUTION1).unwrap();
        let r = run_verification(&s).unwrap();
        assert!(r.all_passed, "{:#?}", r.checks);
        assert_eq!(r.charges["rho_m"], Rendered::Scalar("3/7".into()));
        assert!(r.violated_equations.is_empty());
        assert_eq!(r.checks.len(), 7);
    }

    #[test]
    fn validation_errors() {
        let swap = |from: &str, to: &str| Scenario::from_json(&SOLUTION1.replace(from, to)).unwrap_err();
        assert!(matches!(swap(r#""signature": "minkowski""#, r#""signature": "euclidean""#), ScenarioError::SignatureMismatch { .. }));
        assert!(matches!(swap(r#""12": "0""#, r#""12": "1/0""#), ScenarioError::Theta { .. }));
        assert!(matches!(swap(r#""12": "0", "#, ""), ScenarioError::MissingField(f) if f == "theta.12"));
        assert!(matches!(swap(r#""bianchi""#, r#""bianchy""#), ScenarioError::UnknownCheck(_)));
        assert!(matches!(swap(r#""tensor""#, r#""instanton""#), ScenarioError::NotApplicable { .. }));
        assert!(matches!(swap(r#""-x3""#, r#""-x3^-1""#), ScenarioError::Expression { .. }));
        assert!(matches!(swap(r#""schema_version": "1""#, r#""schema_version": "2""#), ScenarioError::SchemaVersion(_)));
        assert!(matches!(swap(r#""model": "single""#, r#""model": "dual""#), ScenarioError::SignatureMismatch { .. }));
    }

    #[test]
    fn failing_expectation_reported() {
        let s = Scenario::from_json(&SOLUTION1.replace(r#""rho_m": "3/7""#, r#""rho_m": "1/7""#)).unwrap();
        let r = run_verification(&s).unwrap();
        assert!(!r.all_passed);
        let failed: Vec<_> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        assert_eq!(failed, vec!["expectations"]);
    }

    #[test]
    fn classical_limit_of_first_solution() {
        let s = Scenario::from_json(SOLUTION1).unwrap();
        let l = classical_limit(&s).unwrap();
        assert!(l.passed && l.field_strength_is_da && l.charges_zero);
    }
}
