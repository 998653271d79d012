//! Machine-readable report formats. Rationals are strings (`"3"`, `"-1/2"`)
//! and polynomials use the plain text format, so every emitted value parses
//! back exactly.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use omega_forge_core::invariantize::{DegreeReport, InvariantReport};
use omega_forge_core::omega::CayleyConstants;
use omega_forge_core::weightlattice::{
    CoefficientStatus, OmegaCoefficientFamily, PolynomialWeights, Violation, ViolationKind, WeightReport,
};
use omega_forge_core::reps::PolynomialComodule;
use omega_forge_core::{Error, Polynomial, Rational, Result, Ring};

pub fn rational_text(q: &Rational) -> String {
    q.to_string()
}

/// Constants table: `alphas` and `cs` as `[s, "p/q"]` pairs, `alphas_rs` as
/// `[r, s, "p/q"]` triples.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ConstantsJson {
    pub n: usize,
    pub s_max: u32,
    pub alphas: Vec<(u32, String)>,
    pub cs: Vec<(u32, String)>,
    pub alphas_rs: Vec<(u32, u32, String)>,
    pub proper: bool,
}

impl ConstantsJson {
    pub fn new(n: usize, s_max: u32, constants: &CayleyConstants) -> Self {
        let indexed = |map: &BTreeMap<u32, Rational>| map.iter().map(|(&s, v)| (s, rational_text(v))).collect();
        ConstantsJson {
            n,
            s_max,
            alphas: indexed(&constants.alphas),
            cs: indexed(&constants.cs),
            alphas_rs: constants.alphas_rs.iter().map(|(&(r, s), v)| (r, s, rational_text(v))).collect(),
            proper: constants.is_proper(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("constants for n = {}\n", self.n);
        for ((s, alpha), (_, c)) in self.alphas.iter().zip(&self.cs) {
            writeln!(out, "s = {s:>2}  alpha = {alpha:>12}  c = {c:>16}").unwrap();
        }
        writeln!(out, "proper: {}", self.proper).unwrap();
        out
    }
}

/// A polynomial module: its coefficient matrix as sparse `[row, col, text]`
/// entries over `k[x11..xnn]`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ModuleDescriptor {
    pub n: usize,
    pub dim: usize,
    pub labels: Vec<String>,
    pub entries: Vec<(usize, usize, String)>,
    pub twist: i64,
}

impl From<&PolynomialComodule> for ModuleDescriptor {
    fn from(m: &PolynomialComodule) -> Self {
        let mut entries = Vec::new();
        for (i, row) in m.matrix().iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                if !p.is_zero() {
                    entries.push((i, j, p.to_string()));
                }
            }
        }
        ModuleDescriptor { n: m.n(), dim: m.dim(), labels: m.labels().to_vec(), entries, twist: m.twist_exponent() }
    }
}

impl ModuleDescriptor {
    /// Rebuilds the module; the result is verified to be a comodule.
    pub fn to_module(&self) -> Result<PolynomialComodule> {
        if self.labels.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: self.labels.len() });
        }
        let ring = Ring::matrix(self.n);
        let mut matrix = vec![vec![Polynomial::zero(&ring); self.dim]; self.dim];
        for (i, j, text) in &self.entries {
            let slot = matrix
                .get_mut(*i)
                .and_then(|row| row.get_mut(*j))
                .ok_or_else(|| Error::InvalidArgument(format!("entry ({i}, {j}) outside a {0}x{0} matrix", self.dim)))?;
            *slot = Polynomial::parse(text, &ring)?;
        }
        PolynomialComodule::new(self.n, self.labels.clone(), matrix, self.twist)
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ApplyJson {
    pub n: usize,
    pub input: String,
    pub power: u32,
    pub result: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct DegreeJson {
    pub degree: u32,
    pub module_dim: usize,
    pub target_weight: Option<u32>,
    pub exponents: Option<[u32; 2]>,
    pub process_dim: usize,
    pub oracle_dim: usize,
    pub decomposable_dim: usize,
    pub generators: Vec<String>,
    pub agreement: bool,
}

impl From<&DegreeReport> for DegreeJson {
    fn from(d: &DegreeReport) -> Self {
        DegreeJson {
            degree: d.degree,
            module_dim: d.module_dim,
            target_weight: d.target_weight,
            exponents: d.exponents.map(|(r, s)| [r, s]),
            process_dim: d.process_dim,
            oracle_dim: d.oracle_dim,
            decomposable_dim: d.decomposable_dim,
            generators: d.generators.iter().map(Polynomial::to_string).collect(),
            agreement: d.agreement,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GeneratorJson {
    pub degree: u32,
    pub polynomial: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct InvariantReportJson {
    pub form_degree: u32,
    pub degree_bound: u32,
    pub coefficients: Vec<String>,
    pub agreement: bool,
    pub generators: Vec<GeneratorJson>,
    pub degrees: Vec<DegreeJson>,
}

impl From<&InvariantReport> for InvariantReportJson {
    fn from(r: &InvariantReport) -> Self {
        InvariantReportJson {
            form_degree: r.form_degree,
            degree_bound: r.degree_bound,
            coefficients: r.coefficient_ring.vars().iter().map(ToString::to_string).collect(),
            agreement: r.agreement(),
            generators: r
                .generators()
                .map(|(degree, g)| GeneratorJson { degree, polynomial: g.to_string() })
                .collect(),
            degrees: r.degrees.iter().map(DegreeJson::from).collect(),
        }
    }
}

impl InvariantReportJson {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "binary forms of degree {} (coefficients {}), degrees 1..={}\n",
            self.form_degree,
            self.coefficients.join(", "),
            self.degree_bound
        );
        for d in &self.degrees {
            let weight = d.target_weight.map_or_else(|| "-".to_string(), |k| k.to_string());
            writeln!(
                out,
                "degree {:>2}: dim {:>4}  weight {:>2}  invariants {:>3} (oracle {:>3})  decomposable {:>3}  {}",
                d.degree,
                d.module_dim,
                weight,
                d.process_dim,
                d.oracle_dim,
                d.decomposable_dim,
                if d.agreement { "ok" } else { "MISMATCH" }
            )
            .unwrap();
            for g in &d.generators {
                writeln!(out, "    generator: {g}").unwrap();
            }
        }
        writeln!(out, "agreement: {}", self.agreement).unwrap();
        out
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ViolationJson {
    pub kind: String,
    pub weight: Vec<i64>,
    pub witness: Vec<i64>,
}

impl From<&Violation> for ViolationJson {
    fn from(v: &Violation) -> Self {
        let kind = match v.kind {
            ViolationKind::MultipleWithoutBase => "multiple-without-base",
            ViolationKind::BaseWithoutMultiple => "base-without-multiple",
            ViolationKind::NotAnIdeal => "not-an-ideal",
        };
        ViolationJson { kind: kind.into(), weight: v.weight.0.clone(), witness: v.witness.0.clone() }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckJson {
    pub checked: usize,
    pub passed: bool,
    pub violations: Vec<ViolationJson>,
}

impl From<&WeightReport> for CheckJson {
    fn from(r: &WeightReport) -> Self {
        CheckJson { checked: r.checked, passed: r.passed(), violations: r.violations.iter().map(Into::into).collect() }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FamilyEntryJson {
    pub weight: Vec<i64>,
    pub status: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FamilyJson {
    pub character: Vec<i64>,
    pub admits_proper: bool,
    pub entries: Vec<FamilyEntryJson>,
}

impl From<&OmegaCoefficientFamily> for FamilyJson {
    fn from(f: &OmegaCoefficientFamily) -> Self {
        FamilyJson {
            character: f.lambda.0.clone(),
            admits_proper: f.admits_proper(),
            entries: f
                .entries
                .iter()
                .map(|(w, s)| FamilyEntryJson {
                    weight: w.0.clone(),
                    status: match s {
                        CoefficientStatus::Free => "free",
                        CoefficientStatus::ForcedZero => "forced-zero",
                    }
                    .into(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct WeightsJson {
    pub n: usize,
    pub bounds: [i64; 2],
    pub dual_cone: Vec<Vec<String>>,
    pub polynomial_dominant: Vec<Vec<i64>>,
    pub saturation: CheckJson,
    pub ideal: CheckJson,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<FamilyJson>,
}

impl WeightsJson {
    pub fn new(
        n: usize,
        weights: &PolynomialWeights,
        saturation: &WeightReport,
        ideal: &WeightReport,
        family: Option<&OmegaCoefficientFamily>,
    ) -> Self {
        WeightsJson {
            n,
            bounds: [weights.bounds.lo, weights.bounds.hi],
            dual_cone: weights
                .cone
                .dual()
                .generators()
                .iter()
                .map(|g| g.iter().map(rational_text).collect())
                .collect(),
            polynomial_dominant: weights.weights.iter().map(|w| w.0.clone()).collect(),
            saturation: saturation.into(),
            ideal: ideal.into(),
            family: family.map(Into::into),
        }
    }

    pub fn passed(&self) -> bool {
        self.saturation.passed && self.ideal.passed
    }

    pub fn to_text(&self) -> String {
        let tuple = |w: &[i64]| format!("({})", w.iter().map(i64::to_string).collect::<Vec<_>>().join(", "));
        let mut out = format!(
            "polynomial dominant weights of M_{} in [{}, {}]^{}: {}\n",
            self.n,
            self.bounds[0],
            self.bounds[1],
            self.n,
            self.polynomial_dominant.len()
        );
        let listed: Vec<String> = self.polynomial_dominant.iter().map(|w| tuple(w)).collect();
        writeln!(out, "  {}", listed.join(" ")).unwrap();
        for (name, check) in [("saturation", &self.saturation), ("ideal", &self.ideal)] {
            writeln!(out, "{name}: {} checked, {} violations", check.checked, check.violations.len()).unwrap();
            for v in &check.violations {
                writeln!(out, "  {} at {} (witness {})", v.kind, tuple(&v.weight), tuple(&v.witness)).unwrap();
            }
        }
        if let Some(f) = &self.family {
            writeln!(out, "coefficient family for {} (admits proper: {})", tuple(&f.character), f.admits_proper)
                .unwrap();
            for e in &f.entries {
                writeln!(out, "  {:<16} {}", tuple(&e.weight), e.status).unwrap();
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FailureJson {
    pub case: usize,
    pub input: String,
    pub detail: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PropertyJson {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_failure: Option<FailureJson>,
}

impl PropertyJson {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SuiteJson {
    pub n: usize,
    pub seed: u64,
    pub max_degree: u32,
    pub fault: Option<String>,
    pub passed: bool,
    pub properties: Vec<PropertyJson>,
}

impl SuiteJson {
    pub fn to_text(&self) -> String {
        let mut out = format!("property suite: n = {}, seed = {}, max degree = {}", self.n, self.seed, self.max_degree);
        if let Some(f) = &self.fault {
            write!(out, ", injected fault: {f}").unwrap();
        }
        out.push('\n');
        for p in &self.properties {
            let verdict = if p.passed() { "PASS" } else { "FAIL" };
            writeln!(out, "{verdict} {:<20} {}/{} cases", p.name, p.cases - p.failures, p.cases).unwrap();
            if let Some(f) = &p.first_failure {
                writeln!(out, "     first failure: case {} [{}]: {}", f.case, f.input, f.detail).unwrap();
            }
        }
        writeln!(out, "{}", if self.passed { "all properties pass" } else { "some properties FAILED" }).unwrap();
        out
    }
}
