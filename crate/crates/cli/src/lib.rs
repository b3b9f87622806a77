//! Command-line driver for the cubic threefold pipeline: each subcommand runs
//! one stage, `report` runs them all, and every run yields a [`Document`].

pub mod args;
pub mod document;
pub mod expectations;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use eckardt_core::consensus::Settings;
use eckardt_core::cubic::{
    builtin, eckardt_count, eckardt_geometric, elliptic_curve_at, inflection_analysis, sample_no_eckardt, smoothness_check,
    standard_ring, CubicThreefold, EckardtReport, ProjPoint, Smoothness, BUILTIN_NAMES,
};
use eckardt_core::fano::{
    is_triple_line, main_component_model, triple_line_count, triple_lines_in_chart01, triple_lines_through, MainComponentModel,
    TripleLineReport,
};
use eckardt_core::field::{rational_to_string, Rationals};
use eckardt_core::groebner::Caps;
use eckardt_core::Error;
use num_rational::BigRational;

pub use args::{Cli, Command, Common};
use document::*;

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    InputError = 1,
    NoConsensus = 2,
    Inconsistent = 3,
}

/// A failed stage.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub stage: &'static str,
    pub kind: FailureKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum FailureKind {
    Core(Error),
    Input(String),
    /// The assembled report contradicts itself.
    Inconsistent(String),
}

impl Failure {
    pub fn status(&self) -> Status {
        match &self.kind {
            FailureKind::Core(Error::NoConsensus(_)) => Status::NoConsensus,
            FailureKind::Core(Error::Internal(_)) | FailureKind::Inconsistent(_) => Status::Inconsistent,
            _ => Status::InputError,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FailureKind::Core(e @ (Error::BasisCap { .. } | Error::DegreeCap { .. } | Error::QuotientCap { .. })) => {
                write!(f, "{} stage: {e} (raise --max-basis or simplify the input)", self.stage)
            }
            FailureKind::Core(e) => write!(f, "{} stage: {e}", self.stage),
            FailureKind::Input(msg) => write!(f, "{} stage: {msg}", self.stage),
            FailureKind::Inconsistent(msg) => write!(f, "{} stage: internal inconsistency: {msg}", self.stage),
        }
    }
}

type Staged<T> = Result<T, Failure>;

fn at<T>(stage: &'static str, r: eckardt_core::Result<T>) -> Staged<T> {
    r.map_err(|e| Failure { stage, kind: FailureKind::Core(e) })
}

fn input_error<T>(msg: impl Into<String>) -> Staged<T> {
    Err(Failure { stage: "input", kind: FailureKind::Input(msg.into()) })
}

fn inconsistent(stage: &'static str, msg: String) -> Failure {
    Failure { stage, kind: FailureKind::Inconsistent(msg) }
}

/// Parses `(a:b:c:d:e)`, `a:b:c:d:e` or `a,b,c,d,e` with rational entries.
pub fn parse_point(text: &str) -> Result<ProjPoint<BigRational>, String> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let coords: Vec<BigRational> = inner
        .split([':', ','])
        .map(|s| BigRational::from_str(s.trim()).map_err(|_| format!("bad coordinate `{}` in point `{text}`", s.trim())))
        .collect::<Result<_, _>>()?;
    if coords.len() != 5 {
        return Err(format!("point `{text}` needs 5 coordinates"));
    }
    ProjPoint::new(&Rationals, coords).map_err(|e| e.to_string())
}

fn settings(common: &Common) -> Settings {
    Settings {
        primes: common.primes.clone(),
        trials: common.trials,
        caps: Caps { max_basis: common.max_basis, ..Caps::default() },
        seed: common.seed,
    }
}

/// The cubic named by exactly one of the input options, with the built-in
/// name it matches, if any.
fn load_cubic(common: &Common) -> Staged<(CubicThreefold, Option<String>)> {
    let cubic = match (&common.polynomial, &common.input, &common.builtin) {
        (Some(text), None, None) => at("input", CubicThreefold::parse(text))?,
        (None, Some(path), None) => match std::fs::read_to_string(path) {
            Ok(text) => at("input", CubicThreefold::parse(text.trim()))?,
            Err(e) => return input_error(format!("cannot read {}: {e}", path.display())),
        },
        (None, None, Some(name)) => match builtin(name) {
            Some(c) => c,
            None => return input_error(format!("unknown builtin `{name}`; expected one of {}", BUILTIN_NAMES.join(", "))),
        },
        (None, None, None) => return input_error("give a polynomial, --input or --builtin"),
        _ => return input_error("give only one of a polynomial, --input and --builtin"),
    };
    let name = BUILTIN_NAMES.iter().find(|n| builtin(n).is_some_and(|b| b.form() == cubic.form())).map(|n| n.to_string());
    Ok((cubic, name))
}

fn agreement(primes_used: &[u32], agreeing: &[u32], unanimous: bool) -> Agreement {
    Agreement { primes_used: primes_used.to_vec(), agreeing: agreeing.to_vec(), unanimous }
}

fn eckardt_section(r: &EckardtReport, with_rational: bool) -> Staged<EckardtSection> {
    if r.strata.iter().sum::<usize>() != r.total {
        return Err(inconsistent("eckardt", format!("strata {:?} do not sum to {}", r.strata, r.total)));
    }
    if r.multiplicities.iter().zip(&r.strata).any(|(m, s)| m < s) {
        return Err(inconsistent("eckardt", "a stratum has fewer points with multiplicity than distinct".into()));
    }
    if r.rational_points.len() > r.total {
        return Err(inconsistent("eckardt", "more rational than geometric Eckardt points".into()));
    }
    Ok(EckardtSection {
        total: r.total,
        strata: r.strata.clone(),
        multiplicities: r.multiplicities.clone(),
        rational_points: with_rational.then(|| r.rational_points.iter().map(ProjPoint::display).collect()),
        consensus: agreement(&r.primes_used, &r.agreeing, r.unanimous),
    })
}

fn triple_section(r: &TripleLineReport, through: Option<String>) -> Staged<TripleSection> {
    let per_cell: Vec<CellRow> = r
        .per_cell
        .iter()
        .map(|c| CellRow { cell: c.cell.label(), dim: c.cell.dim(), alpha_strata: c.alpha_strata, total: c.total() })
        .collect();
    let sum: usize = per_cell.iter().map(|c| c.total).sum();
    if sum != r.total {
        return Err(inconsistent("triple-lines", format!("cells sum to {sum}, total is {}", r.total)));
    }
    Ok(TripleSection { total: r.total, per_cell, through, consensus: agreement(&r.primes_used, &r.agreeing, r.unanimous) })
}

fn elliptic_section(cubic: &CubicThreefold, p: &ProjPoint<BigRational>, s: &Settings) -> Staged<EllipticSection> {
    let model = at("elliptic", elliptic_curve_at(cubic, p, &s.caps))?;
    let infl = at("elliptic", inflection_analysis(&model, s))?;
    let through = at("triple-lines", triple_lines_through(cubic, p, s))?;
    Ok(EllipticSection {
        point: p.display(),
        curve: model.plane.display(&model.curve),
        inflection: InflectionSection {
            with_multiplicity: infl.with_multiplicity,
            distinct: infl.distinct,
            primes_used: infl.primes_used,
            unanimous: infl.unanimous,
        },
        triple_lines_through: through.total,
    })
}

fn main_section(m: &MainComponentModel) -> Staged<MainSection> {
    let d = &m.data;
    let inter = |i: &eckardt_core::fano::IntersectionCount| Intersection { distinct: i.distinct, multiplicity: i.multiplicity };
    let orbit_total: usize = d.orbits.iter().map(|o| o.size).sum();
    if orbit_total != d.elliptic_curves.len() {
        return Err(inconsistent("fano-main", format!("orbits cover {orbit_total} of {} curves", d.elliptic_curves.len())));
    }
    Ok(MainSection {
        chart_triple_lines: d.chart_triple_lines,
        extension_degree: d.extension_degree,
        elliptic_curves: d
            .elliptic_curves
            .iter()
            .map(|c| CurveRow {
                orbit_size: c.orbit_size,
                rational_point: c.rational_point.clone(),
                meets_main: inter(&c.meets_main),
                triple_lines_on_intersection: c.triple_lines_on_intersection,
            })
            .collect(),
        orbits: d.orbits.iter().map(|o| OrbitRow { size: o.size, meets_main: inter(&o.meets_main) }).collect(),
        pairwise: d.pairwise.iter().map(inter).collect(),
        pairwise_orbits: d.pairwise_orbits.iter().map(inter).collect(),
        consensus: agreement(&m.primes_used, &m.agreeing, m.unanimous),
    })
}

fn smoothness_section(s: &Smoothness) -> SmoothnessSection {
    match s {
        Smoothness::Smooth { certified, bad_reduction } => {
            SmoothnessSection { smooth: true, certified: certified.clone(), bad_reduction: bad_reduction.clone() }
        }
        Smoothness::Singular { primes } => SmoothnessSection { smooth: false, certified: vec![], bad_reduction: primes.clone() },
    }
}

struct Timer(BTreeMap<String, f64>);

impl Timer {
    fn time<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        let ms = start.elapsed().as_secs_f64() * 1e3;
        self.0.insert(stage.to_string(), (ms * 1e3).round() / 1e3);
        out
    }
}

fn require_smooth(body: &mut Body, cubic: &CubicThreefold, s: &Settings, timer: &mut Timer) -> Staged<()> {
    let smooth = at("smoothness", timer.time("smoothness", || smoothness_check(cubic, s)))?;
    let section = smoothness_section(&smooth);
    let ok = section.smooth;
    body.smoothness = Some(section);
    if ok {
        Ok(())
    } else {
        Err(Failure { stage: "smoothness", kind: FailureKind::Input("the cubic is singular".into()) })
    }
}

/// Runs one invocation.
pub fn run(cli: &Cli) -> Result<Document, Failure> {
    let common = &cli.common;
    let s = settings(common);
    if let Err(e) = s.validate() {
        return Err(Failure { stage: "input", kind: FailureKind::Core(e) });
    }
    let mut timer = Timer(BTreeMap::new());
    let mut body = Body {
        command: cli.command.name().to_string(),
        settings: SettingsEcho { primes: s.primes.clone(), trials: s.trials, max_basis: s.caps.max_basis, seed: s.seed },
        ..Default::default()
    };
    if let Command::Generate { coeff_bound } = cli.command {
        let sample = at("generate", timer.time("generate", || sample_no_eckardt(common.seed, coeff_bound, &s)))?;
        let ring = standard_ring();
        let unit = |i: usize| -> Vec<BigRational> { (0..5).map(|j| BigRational::from_integer(((i == j) as i64).into())).collect() };
        let triple = at("generate", is_triple_line(sample.cubic.ring(), sample.cubic.form(), &unit(0), &unit(1), &s.caps))?;
        if !triple {
            return Err(inconsistent("generate", "the witness line is not a triple line".into()));
        }
        body.input.polynomial = sample.cubic.display();
        body.smoothness = Some(smoothness_section(&at("smoothness", smoothness_check(&sample.cubic, &s))?));
        body.eckardt = Some(eckardt_section(&sample.eckardt, false)?);
        body.generated = Some(GeneratedSection {
            polynomial: sample.cubic.display(),
            q0: ring.display(&sample.params.q0),
            q1: ring.display(&sample.params.q1),
            k: rational_to_string(&sample.params.k),
            seed: common.seed,
            coeff_bound,
            attempts: sample.attempts,
            witness_line: "x2 = x3 = x4 = 0".into(),
            witness_is_triple: triple,
        });
        return Ok(Document { body, timings: timer.0 });
    }

    let (cubic, name) = load_cubic(common)?;
    body.input = Input { polynomial: cubic.display(), builtin: name.clone() };
    match &cli.command {
        Command::Check => {
            let smooth = at("smoothness", timer.time("smoothness", || smoothness_check(&cubic, &s)))?;
            body.smoothness = Some(smoothness_section(&smooth));
        }
        Command::Eckardt { list_rational } => {
            require_smooth(&mut body, &cubic, &s, &mut timer)?;
            let r = if *list_rational {
                at("eckardt", timer.time("eckardt", || eckardt_count(&cubic, &s)))?
            } else {
                at("eckardt", timer.time("eckardt", || eckardt_geometric(&cubic, &s)))?
            };
            body.eckardt = Some(eckardt_section(&r, *list_rational)?);
        }
        Command::TripleLines { chart_only, through } => {
            require_smooth(&mut body, &cubic, &s, &mut timer)?;
            match through {
                Some(text) => {
                    let p = match parse_point(text) {
                        Ok(p) => p,
                        Err(msg) => return input_error(msg),
                    };
                    let r = at("triple-lines", timer.time("triple-lines", || triple_lines_through(&cubic, &p, &s)))?;
                    body.triple_lines_through = Some(triple_section(&r, Some(p.display()))?);
                }
                None if *chart_only => {
                    let r = at("triple-lines", timer.time("chart-triple-lines", || triple_lines_in_chart01(&cubic, &s)))?;
                    body.chart_triple_lines = Some(triple_section(&r, None)?);
                }
                None => {
                    let r = at("triple-lines", timer.time("triple-lines", || triple_line_count(&cubic, &s)))?;
                    body.triple_lines = Some(triple_section(&r, None)?);
                }
            }
        }
        Command::Elliptic { point } => {
            require_smooth(&mut body, &cubic, &s, &mut timer)?;
            let points = match point {
                Some(text) => match parse_point(text) {
                    Ok(p) => vec![p],
                    Err(msg) => return input_error(msg),
                },
                None => {
                    let r = at("eckardt", timer.time("eckardt", || eckardt_count(&cubic, &s)))?;
                    let points = r.rational_points.clone();
                    body.eckardt = Some(eckardt_section(&r, true)?);
                    points
                }
            };
            let sections: Staged<Vec<EllipticSection>> = timer.time("elliptic", || points.iter().map(|p| elliptic_section(&cubic, p, &s)).collect());
            body.elliptic_curves = Some(sections?);
        }
        Command::FanoMain => {
            require_smooth(&mut body, &cubic, &s, &mut timer)?;
            let m = at("fano-main", timer.time("fano-main", || main_component_model(&cubic, &s)))?;
            body.main_component = Some(main_section(&m)?);
        }
        Command::Report { main_component } => {
            require_smooth(&mut body, &cubic, &s, &mut timer)?;
            let r = at("eckardt", timer.time("eckardt", || eckardt_count(&cubic, &s)))?;
            body.eckardt = Some(eckardt_section(&r, true)?);
            let t = at("triple-lines", timer.time("triple-lines", || triple_line_count(&cubic, &s)))?;
            body.triple_lines = Some(triple_section(&t, None)?);
            let c = at("triple-lines", timer.time("chart-triple-lines", || triple_lines_in_chart01(&cubic, &s)))?;
            let chart = triple_section(&c, None)?;
            if chart.total > t.total {
                return Err(inconsistent("triple-lines", "the chart holds more triple lines than the threefold".into()));
            }
            body.chart_triple_lines = Some(chart);
            let sections: Staged<Vec<EllipticSection>> = timer.time("elliptic", || r.rational_points.iter().map(|p| elliptic_section(&cubic, p, &s)).collect());
            body.elliptic_curves = Some(sections?);
            if *main_component {
                let m = at("fano-main", timer.time("fano-main", || main_component_model(&cubic, &s)))?;
                body.main_component = Some(main_section(&m)?);
            }
        }
        Command::Generate { .. } => unreachable!("handled above"),
    }
    if let Some(name) = &name {
        body.paper_expectations = expectations::compare(name, &body);
    }
    Ok(Document { body, timings: timer.0 })
}

/// Human-readable summary of a document.
pub fn summary(doc: &Document) -> String {
    let b = &doc.body;
    let mut out = Vec::new();
    out.push(format!("cubic: {}", b.input.polynomial));
    if let Some(name) = &b.input.builtin {
        out.push(format!("builtin: {name}"));
    }
    if let Some(s) = &b.smoothness {
        out.push(format!("smooth: {} (certified mod {:?})", s.smooth, s.certified));
    }
    if let Some(e) = &b.eckardt {
        out.push(format!("Eckardt points: {} (strata {:?})", e.total, e.strata));
        if let Some(points) = &e.rational_points {
            out.push(format!("rational Eckardt points: {}", if points.is_empty() { "none".into() } else { points.join(" ") }));
        }
    }
    let tables = [("triple lines", &b.triple_lines), ("triple lines in chart (0,1)", &b.chart_triple_lines), ("triple lines", &b.triple_lines_through)];
    for (label, t) in tables {
        if let Some(t) = t {
            let through = t.through.as_ref().map(|p| format!(" through {p}")).unwrap_or_default();
            out.push(format!("{label}{through}: {}", t.total));
            for c in t.per_cell.iter().filter(|c| c.total > 0) {
                out.push(format!("  cell {} (dim {}): {} {:?}", c.cell, c.dim, c.total, c.alpha_strata));
            }
        }
    }
    for e in b.elliptic_curves.iter().flatten() {
        out.push(format!("E_p at {}: {} = 0", e.point, e.curve));
        out.push(format!(
            "  inflection points: {} distinct, {} with multiplicity; triple lines through p: {}",
            e.inflection.distinct, e.inflection.with_multiplicity, e.triple_lines_through
        ));
    }
    if let Some(m) = &b.main_component {
        out.push(format!(
            "main component: {} chart triple lines, {} elliptic curves over Q ({} geometric, field degree {})",
            m.chart_triple_lines,
            m.orbits.len(),
            m.elliptic_curves.len(),
            m.extension_degree
        ));
        for o in &m.orbits {
            out.push(format!(
                "  orbit of size {}: E.P = {} distinct, {} with multiplicity",
                o.size, o.meets_main.distinct, o.meets_main.multiplicity
            ));
        }
        let pairs: Vec<String> = m.pairwise_orbits.iter().map(|i| format!("{}/{}", i.distinct, i.multiplicity)).collect();
        out.push(format!("  pairwise over Q (distinct/multiplicity): [{}]", pairs.join(", ")));
    }
    if let Some(g) = &b.generated {
        out.push(format!("q0 = {}, q1 = {}, k = {}; accepted after {} draws", g.q0, g.q1, g.k, g.attempts));
        out.push(format!("witness line {} is a triple line: {}", g.witness_line, g.witness_is_triple));
    }
    if let Some(x) = &b.paper_expectations {
        for c in x.checks.iter().filter(|c| c.observed.is_some()) {
            let obs = c.observed.as_ref().map(|v| v.to_string()).unwrap_or_else(|| "-".into());
            out.push(format!("expected {} = {}: {} (observed {obs})", c.quantity, c.expected, c.status));
        }
    }
    out.push(String::new());
    out.join("\n")
}
