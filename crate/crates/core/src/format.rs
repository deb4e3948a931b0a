//! Number formatting for CSV and text output.

/// Rounds to six decimals (ties to even on the binary value) and trims
/// trailing zeros, keeping at least one digit after the point.
pub fn fmt_num(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let mut s = format!("{x:.6}");
    while s.ends_with('0') && !s.ends_with(".0") {
        s.pop();
    }
    if s == "-0.0" {
        s = "0.0".into();
    }
    s
}
