//! Number rendering for reports and CSV files.

use std::f64::consts::PI;

const SYMBOLIC_TOL: f64 = 1e-12;

/// Seventeen significant digits, enough to round-trip any `f64`.
pub fn decimal(x: f64) -> String {
    format!("{x:.16e}")
}

/// `x` as a small rational multiple of π (`"0"`, `"pi/4"`, `"-3pi/2"`), if it is one.
pub fn symbolic_angle(x: f64) -> Option<String> {
    for q in 1..=24i64 {
        let p = (x * q as f64 / PI).round();
        if p.abs() > 8.0 * q as f64 {
            continue;
        }
        if (x - p * PI / q as f64).abs() > SYMBOLIC_TOL {
            continue;
        }
        let p = p as i64;
        let g = gcd(p.unsigned_abs() as i64, q);
        let (p, q) = (p / g, q / g);
        let num = match p {
            0 => return Some("0".into()),
            1 => "pi".to_string(),
            -1 => "-pi".to_string(),
            _ => format!("{p}pi"),
        };
        return Some(if q == 1 { num } else { format!("{num}/{q}") });
    }
    None
}

/// `x` as a rational `p/q` with small denominator, if it is one.
pub fn symbolic_rational(x: f64) -> Option<String> {
    for q in 1..=72i64 {
        let p = (x * q as f64).round();
        if (x - p / q as f64).abs() > SYMBOLIC_TOL {
            continue;
        }
        let p = p as i64;
        if p == 0 {
            return Some("0".into());
        }
        let g = gcd(p.unsigned_abs() as i64, q);
        let (p, q) = (p / g, q / g);
        return Some(if q == 1 { p.to_string() } else { format!("{p}/{q}") });
    }
    None
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// Parses `"0.25"`, `"1/3"`, `"pi"`, `"-pi/4"`, `"3pi/2"`, `"0.5pi"`, `"2*pi"`.
pub fn parse_real(s: &str) -> Result<f64, String> {
    let t = s.trim().to_ascii_lowercase().replace(['*', ' '], "").replace('π', "pi");
    if t.is_empty() {
        return Err("empty number".into());
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.to_string(), Some(d.to_string())),
        None => (t.clone(), None),
    };
    let numerator = if let Some(coef) = num.strip_suffix("pi") {
        let k = match coef {
            "" | "+" => 1.0,
            "-" => -1.0,
            c => c.parse::<f64>().map_err(|e| format!("bad coefficient {c:?}: {e}"))?,
        };
        k * PI
    } else {
        num.parse::<f64>().map_err(|e| format!("bad number {s:?}: {e}"))?
    };
    let value = match den {
        Some(d) => {
            let d: f64 = d.parse().map_err(|e| format!("bad denominator in {s:?}: {e}"))?;
            if d == 0.0 {
                return Err(format!("zero denominator in {s:?}"));
            }
            numerator / d
        }
        None => numerator,
    };
    if !value.is_finite() {
        return Err(format!("non-finite number {s:?}"));
    }
    Ok(value)
}

/// Parses `"a..b"` into its endpoints.
pub fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a range like 1..12, got {s:?}"))?;
    Ok((parse_real(a)?, parse_real(b)?))
}
