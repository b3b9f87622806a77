use super::CubicThreefold;

/// Names accepted by [`builtin`], in table order.
pub const BUILTIN_NAMES: [&str; 10] = ["x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "fermat", "klein"];

const FORMS: [(&str, &str); 10] = [
    ("x1", "x0^2*x2 + x2^2*x4 + x1^2*x3 + x3^2*x0 + x4^3"),
    ("x2", "2*x0*x2^2 + 2*x2*x1^2 + x1^2*x3 + x3*x0^2 + 3*x3^3 + x4^3"),
    // Canonero's example
    ("x3", "x0^2*x4 + x1^2*x3 + x3^3 + x3^2*x4 + x3*x4^2 - x4^3 + x2^3"),
    ("x4", "x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + 3*x0*x1*x2"),
    ("x5", "x0^2*x2 + x1^2*x3 + x1*x2^2 + x0*x3^2 + x1*x3^2 + x4^3"),
    ("x6", "x0^2*x2 + x1^2*x3 + x0*x2^2 + x1*x2^2 + x0*x3^2 + 2*x1*x2*x4 + 2*x0*x3*x4 + x4^3"),
    ("x7", "x0^2*x2 + x1^2*x3 + x1*x2^2 + x0*x3^2 + 2*x0*x3*x4 + x4^3"),
    ("x8", "x0^2*x2 + x1^2*x3 + x1*x2^2 + x1*x3^2 + x0*x3^2 + x0*x4^2 + x1*x4^2 + x4^3"),
    ("fermat", "x0^3 + x1^3 + x2^3 + x3^3 + x4^3"),
    ("klein", "x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x0"),
];

/// A named example cubic. `canonero` aliases `x3`.
pub fn builtin(name: &str) -> Option<CubicThreefold> {
    let key = match name.to_ascii_lowercase().as_str() {
        "canonero" => "x3",
        other => FORMS.iter().find(|(n, _)| *n == other).map(|(n, _)| *n)?,
    };
    let text = FORMS.iter().find(|(n, _)| *n == key)?.1;
    Some(CubicThreefold::parse(text).expect("builtin forms are valid"))
}
