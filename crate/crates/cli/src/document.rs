//! The report document. The body is a pure function of the input and the
//! settings; wall-clock timings live outside it.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Serialize)]
pub struct Document {
    pub body: Body,
    /// Milliseconds per stage.
    pub timings: BTreeMap<String, f64>,
}

impl Document {
    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }

    /// The comparable part alone.
    pub fn body_json(&self) -> String {
        let value = serde_json::to_value(&self.body).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Body {
    pub tool: Tool,
    pub command: String,
    pub input: Input,
    pub settings: SettingsEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub smoothness: Option<SmoothnessSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eckardt: Option<EckardtSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triple_lines: Option<TripleSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chart_triple_lines: Option<TripleSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triple_lines_through: Option<TripleSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elliptic_curves: Option<Vec<EllipticSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub main_component: Option<MainSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated: Option<GeneratedSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paper_expectations: Option<Expectations>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

impl Default for Tool {
    fn default() -> Self {
        Tool { name: env!("CARGO_PKG_NAME"), version: env!("CARGO_PKG_VERSION") }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Input {
    /// Canonical text of the cubic form.
    pub polynomial: String,
    /// Name of the matching built-in cubic.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SettingsEcho {
    pub primes: Vec<u32>,
    pub trials: usize,
    pub max_basis: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SmoothnessSection {
    pub smooth: bool,
    /// Primes of smooth reduction.
    pub certified: Vec<u32>,
    pub bad_reduction: Vec<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Agreement {
    pub primes_used: Vec<u32>,
    pub agreeing: Vec<u32>,
    pub unanimous: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EckardtSection {
    pub total: usize,
    /// Indexed by the leading coordinate.
    pub strata: Vec<usize>,
    pub multiplicities: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rational_points: Option<Vec<String>>,
    pub consensus: Agreement,
}

#[derive(Debug, Clone, Serialize)]
pub struct CellRow {
    pub cell: String,
    pub dim: usize,
    /// Triple lines by `alpha` stratum.
    pub alpha_strata: [usize; 3],
    pub total: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct TripleSection {
    pub total: usize,
    pub per_cell: Vec<CellRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub through: Option<String>,
    pub consensus: Agreement,
}

#[derive(Debug, Clone, Serialize)]
pub struct InflectionSection {
    pub with_multiplicity: usize,
    pub distinct: usize,
    pub primes_used: Vec<u32>,
    pub unanimous: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EllipticSection {
    pub point: String,
    /// Plane cubic in `x2, x3, x4`.
    pub curve: String,
    pub inflection: InflectionSection,
    pub triple_lines_through: usize,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Intersection {
    pub distinct: usize,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CurveRow {
    pub orbit_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rational_point: Option<String>,
    pub meets_main: Intersection,
    pub triple_lines_on_intersection: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitRow {
    pub size: usize,
    pub meets_main: Intersection,
}

#[derive(Debug, Clone, Serialize)]
pub struct MainSection {
    pub chart_triple_lines: usize,
    pub extension_degree: usize,
    pub elliptic_curves: Vec<CurveRow>,
    /// One row per curve over `Q`.
    pub orbits: Vec<OrbitRow>,
    pub pairwise: Vec<Intersection>,
    pub pairwise_orbits: Vec<Intersection>,
    pub consensus: Agreement,
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratedSection {
    pub polynomial: String,
    pub q0: String,
    pub q1: String,
    pub k: String,
    pub seed: u64,
    pub coeff_bound: u32,
    pub attempts: usize,
    pub witness_line: String,
    pub witness_is_triple: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Expectations {
    pub cubic: String,
    pub checks: Vec<Check>,
    pub all_match: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub quantity: String,
    pub expected: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observed: Option<Value>,
    /// `match`, `mismatch` or `not computed`.
    pub status: String,
    /// Intersection conventions under which the values agree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conventions: Option<Vec<String>>,
}
