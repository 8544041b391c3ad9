//! Exact rational helpers: decimal conversion, bounded square roots and the
//! irrational constants that show up in the density statements.

use alloc::format;
use alloc::string::{String, ToString};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// Number of decimal digits used for reported irrational quantities.
pub const REPORT_DIGITS: usize = 50;

/// Digits kept in the internal square-root brackets (well past
/// [`REPORT_DIGITS`], so truncation never shows up in a report).
pub const SQRT_DIGITS: usize = 60;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_u128(v: u128) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn pow10(d: usize) -> BigInt {
    num_traits::pow(BigInt::from(10u32), d)
}

/// Exact value of a finite `f64`.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Lossy conversion for display or heuristics only.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `floor(sqrt(r) * 10^digits) / 10^digits`, exact.
pub fn sqrt_floor(r: &Rational, digits: usize) -> Rational {
    assert!(!r.is_negative(), "square root of a negative rational");
    let scale = pow10(digits);
    let scaled = (r * Rational::from_integer(&scale * &scale)).floor().to_integer();
    let root = scaled.magnitude().sqrt();
    Rational::new(BigInt::from_biguint(Sign::Plus, root), scale)
}

/// Smallest multiple of `10^-digits` that is `>= sqrt(r)`.
pub fn sqrt_ceil(r: &Rational, digits: usize) -> Rational {
    let lo = sqrt_floor(r, digits);
    if &lo * &lo == *r {
        lo
    } else {
        lo + Rational::new(BigInt::one(), pow10(digits))
    }
}

/// Bracket `lo <= sqrt(3) <= hi` with `hi - lo = 10^-SQRT_DIGITS`.
pub fn sqrt3_bounds() -> (Rational, Rational) {
    let three = int(3);
    (sqrt_floor(&three, SQRT_DIGITS), sqrt_ceil(&three, SQRT_DIGITS))
}

/// Lower bracket of `2*sqrt(3) - 3`, accurate to `2 * 10^-60`.
pub fn two_sqrt3_minus_3() -> Rational {
    let (lo, _) = sqrt3_bounds();
    int(2) * lo - int(3)
}

/// Lower bracket of `(3 - sqrt(3)) / 2`.
pub fn brec_split_ratio() -> Rational {
    let (_, hi) = sqrt3_bounds();
    (int(3) - hi) / int(2)
}

/// Decimal expansion truncated toward negative infinity.
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    let scale = pow10(digits);
    let scaled = (r * Rational::from_integer(scale.clone())).floor().to_integer();
    let negative = scaled.is_negative();
    let (whole, frac) = scaled.abs().div_rem(&scale);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&whole.to_string());
    if digits > 0 {
        let frac = frac.to_string();
        out.push('.');
        for _ in frac.len()..digits {
            out.push('0');
        }
        out.push_str(&frac);
    }
    out
}

/// Parses `p/q`, integers and decimals with an optional exponent
/// (`-1.25e-3`). Decimals are converted exactly.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(at) => (&s[..at], s[at + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first()? {
        b'-' => (true, &mantissa[1..]),
        b'+' => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let joined = format!("{whole}{frac}");
    let mut value = Rational::new(
        BigInt::from_biguint(Sign::Plus, joined.parse::<BigUint>().ok()?),
        pow10(frac.len()),
    );
    let shift = pow10(exponent.unsigned_abs() as usize);
    if exponent >= 0 {
        value *= Rational::from_integer(shift);
    } else {
        value /= Rational::from_integer(shift);
    }
    Some(if negative { -value } else { value })
}

/// `p/q` with `p` alone when the denominator is one.
pub fn fmt_rational(r: &Rational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_round_trip() {
        assert_eq!(parse_rational("0.25"), Some(ratio(1, 4)));
        assert_eq!(parse_rational("-3/6"), Some(ratio(-1, 2)));
        assert_eq!(parse_rational("1e-3"), Some(ratio(1, 1000)));
        assert_eq!(parse_rational("12"), Some(int(12)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(to_decimal(&ratio(1, 3), 5), "0.33333");
        assert_eq!(to_decimal(&ratio(-1, 4), 3), "-0.250");
        assert_eq!(to_decimal(&ratio(-1, 3), 2), "-0.34");
    }

    #[test]
    fn sqrt_brackets() {
        let (lo, hi) = sqrt3_bounds();
        assert!(&lo * &lo < int(3) && &hi * &hi > int(3));
        assert_eq!(sqrt_floor(&ratio(9, 4), 10), ratio(3, 2));
        assert_eq!(sqrt_ceil(&ratio(9, 4), 10), ratio(3, 2));
        assert_eq!(
            to_decimal(&two_sqrt3_minus_3(), 50),
            "0.46410161513775458705489268301174473388561050762076"
        );
    }
}
