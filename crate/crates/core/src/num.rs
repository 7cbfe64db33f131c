//! Exact rational scalars used by every geometric predicate.
//!
//! All decision paths in this crate run on arbitrary-precision rationals;
//! floating point only ever appears in the SVG renderer, which is display
//! only. `Q` is canonical by construction (reduced, positive denominator),
//! which is what the `num-rational` crate guarantees.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

pub type Q = BigRational;

/// Rational from an integer.
pub fn qi(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational n/d.
pub fn q(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn q_zero() -> Q {
    Q::zero()
}

pub fn q_one() -> Q {
    Q::one()
}

/// Power of two, exact; `exp` may be negative.
pub fn q_pow2(exp: i32) -> Q {
    let base = BigInt::from(1u8) << exp.unsigned_abs() as usize;
    if exp >= 0 {
        BigRational::from_integer(base)
    } else {
        BigRational::new(BigInt::one(), base)
    }
}

/// Parse `p/q` or a plain integer. Decimal notation is intentionally not
/// accepted: instance files must stay exact.
pub fn parse_q(s: &str) -> Result<Q, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".to_string());
    }
    match s.split_once('/') {
        None => BigInt::from_str(s)
            .map(BigRational::from_integer)
            .map_err(|e| format!("bad integer `{s}`: {e}")),
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).map_err(|e| format!("bad numerator `{num}`: {e}"))?;
            let d = BigInt::from_str(den.trim()).map_err(|e| format!("bad denominator `{den}`: {e}"))?;
            if d.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Render as `p/q`, or `p` when the denominator is one. Inverse of `parse_q`.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Lossy conversion for the SVG layer.
pub fn q_to_f64(x: &Q) -> f64 {
    let n = x.numer();
    let d = x.denom();
    // Scale down big operands so the i128 path below stays in range.
    let bits = n.bits().max(d.bits());
    if bits > 100 {
        let shift = (bits - 100) as usize;
        let n2 = n >> shift;
        let d2 = d >> shift;
        return to_f64_small(&n2, &d2);
    }
    to_f64_small(n, d)
}

fn to_f64_small(n: &BigInt, d: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    let nf = n.to_f64().unwrap_or(f64::NAN);
    let df = d.to_f64().unwrap_or(f64::NAN);
    nf / df
}

/// min/max over rationals (Ord is total on `Q`).
pub fn q_min(a: Q, b: Q) -> Q {
    if a <= b {
        a
    } else {
        b
    }
}

pub fn q_max(a: Q, b: Q) -> Q {
    if a >= b {
        a
    } else {
        b
    }
}

pub fn q_abs(a: &Q) -> Q {
    a.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["345/34", "-13/4", "0", "7", "51405/3842"] {
            let v = parse_q(s).unwrap();
            assert_eq!(fmt_q(&v), s);
        }
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(fmt_q(&parse_q("6/4").unwrap()), "3/2");
        assert_eq!(fmt_q(&parse_q("-6/-4").unwrap()), "3/2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_q("1.5").is_err());
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("").is_err());
    }

    #[test]
    fn pow2() {
        assert_eq!(q_pow2(5), qi(32));
        assert_eq!(q_pow2(-5), q(1, 32));
    }
}
