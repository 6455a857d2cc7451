//! Deterministic number rendering shared by every command.

/// Largest denominator tried when rendering a value as a fraction.
pub const MAX_DENOMINATOR: i64 = 16;
const FRACTION_TOL: f64 = 1e-12;

/// Round to 12 significant digits, folding `-0` into `0`.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Fixed 12-decimal rendering used in text reports.
pub fn num(x: f64) -> String {
    let r = round12(x);
    let s = format!("{r:.12}");
    if s.starts_with('-') && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
        s[1..].to_string()
    } else {
        s
    }
}

/// Smallest-denominator fraction within `1e-12` of `x`, if one exists with
/// denominator at most [`MAX_DENOMINATOR`].
pub fn as_fraction(x: f64) -> Option<(i64, i64)> {
    (1..=MAX_DENOMINATOR).find_map(|q| {
        let p = (x * q as f64).round();
        ((x - p / q as f64).abs() <= FRACTION_TOL).then_some((p as i64, q))
    })
}

/// Exact-looking rendering: `0`, `1`, `3/8`, falling back to 12 significant
/// digits.
pub fn exact(x: f64) -> String {
    match as_fraction(x) {
        Some((p, 1)) => p.to_string(),
        Some((p, q)) => format!("{p}/{q}"),
        None => format!("{}", round12(x)),
    }
}
