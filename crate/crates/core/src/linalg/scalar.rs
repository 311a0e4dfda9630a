//! Rational scalars and dense coordinate vectors.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::LinalgError;

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Scalar = BigRational;

/// Coordinates with respect to a fixed basis.
pub type Vector = Vec<Scalar>;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num / den`, reduced.
///
/// Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p/q` or `p` (optional leading sign). Decimal and exponent forms are rejected.
pub fn parse_scalar(text: &str) -> Result<Scalar, LinalgError> {
    let bad = || LinalgError::BadRational(text.to_string());
    let t = text.trim();
    if t.is_empty() {
        return Err(bad());
    }
    let digits_ok = |s: &str| {
        let s = s.strip_prefix(['-', '+']).unwrap_or(s);
        !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
    };
    match t.split_once('/') {
        Some((n, d)) => {
            if !digits_ok(n) || d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let n = BigInt::from_str(n.trim_start_matches('+')).map_err(|_| bad())?;
            let d = BigInt::from_str(d).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(n, d))
        }
        None => {
            if !digits_ok(t) {
                return Err(bad());
            }
            let n = BigInt::from_str(t.trim_start_matches('+')).map_err(|_| bad())?;
            Ok(Scalar::from_integer(n))
        }
    }
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_scalar(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

pub fn zeros(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = zeros(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[Scalar]) -> Vector {
    a.iter().map(|x| -x).collect()
}

pub fn scale(c: &Scalar, a: &[Scalar]) -> Vector {
    if c.is_zero() {
        return zeros(a.len());
    }
    a.iter().map(|x| c * x).collect()
}

/// `acc += c * x`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// Renders `sum c_i label_i`, e.g. `1/2 e3 - e1`. Zero renders as `0`.
pub fn format_combination(v: &[Scalar], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, label) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format_scalar(&mag));
            out.push(' ');
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Labels `prefix1 .. prefixN`.
pub fn indexed_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}
