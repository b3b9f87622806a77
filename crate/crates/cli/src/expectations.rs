//! Published values for the ten built-in cubics, compared against a body.

use serde_json::{json, Value};

use crate::document::{Body, Check, Expectations, Intersection};

/// Known values of one cubic. Intersection lists are sorted.
#[derive(Debug, Clone, Default)]
pub struct Expected {
    pub eckardt: usize,
    pub strata: Option<[usize; 5]>,
    pub rational_points: Option<&'static [&'static str]>,
    pub triple_lines: usize,
    pub chart_triple_lines: Option<usize>,
    /// Triple lines through, and flexes of the curve at, each rational
    /// Eckardt point.
    pub nine_lines: bool,
    pub elliptic_curves: Option<usize>,
    pub meets_main: Option<&'static [usize]>,
    pub pairwise: Option<&'static [usize]>,
}

pub fn expected(name: &str) -> Option<Expected> {
    let base = |eckardt, triple_lines| Expected { eckardt, triple_lines, ..Default::default() };
    let table3 = |e, t, chart, curves, meets, pairwise| Expected {
        chart_triple_lines: Some(chart),
        nine_lines: true,
        elliptic_curves: Some(curves),
        meets_main: Some(meets),
        pairwise: Some(pairwise),
        ..base(e, t)
    };
    Some(match name {
        "x1" => table3(1, 9, 9, 1, &[9], &[]),
        "x2" => table3(1, 33, 33, 1, &[9], &[]),
        "x3" => Expected {
            rational_points: Some(&["(0:1:0:0:0)", "(1:0:0:0:0)"]),
            ..table3(2, 39, 33, 2, &[8, 8], &[1])
        },
        "x4" => table3(12, 81, 54, 6, &[6, 6, 6, 12, 12, 12], &[0; 15]),
        "x5" => base(0, 27),
        "x6" => base(0, 9),
        "x7" => base(0, 2),
        "x8" => base(0, 1),
        "fermat" => Expected { strata: Some([12, 9, 6, 3, 0]), nine_lines: true, ..base(30, 135) },
        "klein" => base(0, 0),
        _ => return None,
    })
}

fn check(quantity: &str, expected: Value, observed: Option<Value>) -> Check {
    let status = match &observed {
        None => "not computed",
        Some(v) if *v == expected => "match",
        Some(_) => "mismatch",
    };
    Check { quantity: quantity.into(), expected, observed, status: status.into(), conventions: None }
}

/// Compares sorted intersection numbers under both conventions.
fn intersection_check(quantity: &str, expected: &[usize], observed: Option<&[Intersection]>) -> Check {
    let Some(obs) = observed else {
        return check(quantity, json!(expected), None);
    };
    let sorted = |f: fn(&Intersection) -> usize| {
        let mut v: Vec<usize> = obs.iter().map(f).collect();
        v.sort_unstable();
        v
    };
    let distinct = sorted(|i| i.distinct);
    let multiplicity = sorted(|i| i.multiplicity);
    let mut conventions = Vec::new();
    if distinct == expected {
        conventions.push("geometric distinct".to_string());
    }
    if multiplicity == expected {
        conventions.push("with multiplicity".to_string());
    }
    let observed = json!({ "geometric_distinct": distinct, "with_multiplicity": multiplicity });
    Check {
        quantity: quantity.into(),
        expected: json!(expected),
        observed: Some(observed),
        status: if conventions.is_empty() { "mismatch" } else { "match" }.into(),
        conventions: Some(conventions),
    }
}

/// Every check that applies to `name`; quantities the run did not compute
/// are reported as such.
pub fn compare(name: &str, body: &Body) -> Option<Expectations> {
    let e = expected(name)?;
    let eck = body.eckardt.as_ref();
    let mut checks = vec![
        check("eckardt_points", json!(e.eckardt), eck.map(|s| json!(s.total))),
        check("triple_lines", json!(e.triple_lines), body.triple_lines.as_ref().map(|s| json!(s.total))),
    ];
    if let Some(strata) = e.strata {
        checks.push(check("eckardt_strata", json!(strata), eck.map(|s| json!(s.strata))));
    }
    if let Some(points) = e.rational_points {
        let observed = eck.and_then(|s| s.rational_points.as_ref()).map(|p| {
            let mut p = p.clone();
            p.sort();
            json!(p)
        });
        checks.push(check("rational_eckardt_points", json!(points), observed));
    }
    if let Some(chart) = e.chart_triple_lines {
        checks.push(check("chart_triple_lines", json!(chart), body.chart_triple_lines.as_ref().map(|s| json!(s.total))));
    }
    if e.nine_lines {
        let curves = body.elliptic_curves.as_ref().filter(|c| !c.is_empty());
        let through: Option<Vec<usize>> = curves.map(|c| c.iter().map(|s| s.triple_lines_through).collect());
        let flexes: Option<Vec<usize>> = curves.map(|c| c.iter().map(|s| s.inflection.distinct).collect());
        let all_nine = |v: Vec<usize>| json!(v.iter().all(|&n| n == 9));
        checks.push(check("nine_triple_lines_through_each_rational_eckardt_point", json!(true), through.map(all_nine)));
        checks.push(check("nine_inflection_points_on_each_rational_elliptic_curve", json!(true), flexes.map(all_nine)));
    }
    let main = body.main_component.as_ref();
    if let Some(curves) = e.elliptic_curves {
        checks.push(check("chart_elliptic_curves_over_q", json!(curves), main.map(|m| json!(m.orbits.len()))));
    }
    if let Some(meets) = e.meets_main {
        let obs: Option<Vec<Intersection>> = main.map(|m| m.orbits.iter().map(|o| o.meets_main).collect());
        checks.push(intersection_check("elliptic_curves_meet_main_component", meets, obs.as_deref()));
    }
    if let Some(pairwise) = e.pairwise {
        checks.push(intersection_check("elliptic_curves_pairwise", pairwise, main.map(|m| m.pairwise_orbits.as_slice())));
    }
    let all_match = checks.iter().all(|c| c.status != "mismatch");
    Some(Expectations { cubic: name.into(), checks, all_match })
}
