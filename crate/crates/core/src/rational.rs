//! Exact rational helpers for thresholds.
//!
//! Thresholds are kept as [`BigRational`]. Quantities of the form
//! `r^(a/2)` (half-integer powers) are carried by their square, which is
//! rational, and compared after squaring.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_int(v: u64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn pow(r: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= r;
    }
    acc
}

/// `ceil(r * n)` for nonnegative `r`.
pub fn ceil_mul(r: &Rational, n: u64) -> BigUint {
    let v = r * from_int(n);
    v.ceil().to_integer().to_biguint().unwrap_or_default()
}

/// `ceil(r * n)` clamped into `u64`.
pub fn ceil_mul_u64(r: &Rational, n: u64) -> u64 {
    ceil_mul(r, n).to_u64().unwrap_or(u64::MAX)
}

/// `count >= r * n`, exactly.
pub fn at_least(count: u64, r: &Rational, n: u64) -> bool {
    from_int(count) >= r * from_int(n)
}

/// `a / b < r` for `b > 0`, exactly.
pub fn fraction_below(a: u64, b: u64, r: &Rational) -> bool {
    debug_assert!(b > 0);
    BigInt::from(a) * r.denom() < r.numer() * BigInt::from(b)
}

/// Smallest integer `m` with `m >= sqrt(sq) * n`, i.e. `m^2 >= sq * n^2`.
pub fn ceil_sqrt_mul(sq: &Rational, n: u64) -> u64 {
    let target = (sq * from_int(n) * from_int(n)).ceil().to_integer();
    if target.is_negative() || target.is_zero() {
        return 0;
    }
    let t = target.to_biguint().expect("positive");
    let r = t.sqrt();
    let m = if &r * &r == t { r } else { r + 1u32 };
    m.to_u64().unwrap_or(u64::MAX)
}

/// `count >= sqrt(sq) * n`, exactly.
pub fn at_least_sqrt(count: u64, sq: &Rational, n: u64) -> bool {
    from_int(count) * from_int(count) >= sq * from_int(n) * from_int(n)
}

pub fn to_f64(r: &Rational) -> f64 {
    // ratio of big integers can overflow f64 separately; scale by bit length
    let (n, d) = (r.numer(), r.denom());
    let nb = n.bits() as i64;
    let db = d.bits() as i64;
    // q = floor(n * 2^e / d) carries ~60 significant bits
    let e = 60 - (nb - db);
    let nn = if e >= 0 { n << e as usize } else { n >> (-e) as usize };
    let q = nn.div_floor(d);
    q.to_f64().unwrap_or(0.0) * libm::exp2(-e as f64)
}

/// Parses `p/q`, an integer, or a finite decimal like `0.3`.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().ok()?;
        let b: BigInt = b.trim().parse().ok()?;
        if b.is_zero() {
            return None;
        }
        return Some(Rational::new(a, b));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let neg = int.starts_with('-');
        let int_digits = int.trim_start_matches('-');
        let whole: BigInt = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            int_digits.parse().ok()?
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let f: BigInt = frac.parse().ok()?;
        let v = Rational::new(whole * &scale + f, scale);
        return Some(if neg { -v } else { v });
    }
    let a: BigInt = s.parse().ok()?;
    Some(Rational::from_integer(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(parse("3/10"), Some(ratio(3, 10)));
        assert_eq!(parse("0.3"), Some(ratio(3, 10)));
        assert_eq!(parse(".5"), Some(ratio(1, 2)));
        assert_eq!(parse("2"), Some(ratio(2, 1)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }

    #[test]
    fn ceilings() {
        assert_eq!(ceil_mul_u64(&ratio(1, 4), 4), 1);
        assert_eq!(ceil_mul_u64(&ratio(1, 4), 5), 2);
        // sqrt(1/2) * 10 = 7.07.. -> 8
        assert_eq!(ceil_sqrt_mul(&ratio(1, 2), 10), 8);
        // sqrt(1/4) * 10 = 5 exactly
        assert_eq!(ceil_sqrt_mul(&ratio(1, 4), 10), 5);
        assert!(at_least_sqrt(5, &ratio(1, 4), 10));
        assert!(!at_least_sqrt(4, &ratio(1, 4), 10));
        assert!(fraction_below(1, 4, &ratio(3, 10)));
        assert!(!fraction_below(3, 10, &ratio(3, 10)));
    }

    #[test]
    fn float_conversion() {
        assert!((to_f64(&ratio(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
        let tiny = pow(&ratio(1, 2), 200);
        assert!((to_f64(&tiny) / libm::exp2(-200.0) - 1.0).abs() < 1e-12);
    }
}
