use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Field of coefficients. The exact rational implementation is the default
/// everywhere; floats are opt-in and only meaningful for ops that document a
/// tolerance (Newton projection, benchmarks).
pub trait Scalar:
    Clone + fmt::Debug + fmt::Display + PartialEq + PartialOrd + Num + Signed + 'static
{
    /// True when arithmetic is error-free and equality is decidable.
    const EXACT: bool;

    fn from_i64(n: i64) -> Self;

    fn from_f64(x: f64) -> Option<Self>;

    /// Lossy conversion used by benchmarks and float-mode printing.
    fn to_f64(&self) -> f64;

    /// Accepts integers ("-3"), fractions ("5/8"), and finite decimals
    /// ("1.25"); decimals parse exactly in exact mode.
    fn parse_literal(s: &str) -> Result<Self>;

    /// Square root when representable: floats return the usual sqrt for
    /// non-negative inputs; rationals return Some only for perfect squares.
    fn approx_sqrt(&self) -> Option<Self>;

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn parse_literal(s: &str) -> Result<Self> {
        parse_rational(s.trim())
    }

    fn approx_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let (num, den) = (self.numer(), self.denom());
        let rn = num.sqrt();
        let rd = den.sqrt();
        if &(&rn * &rn) == num && &(&rd * &rd) == den {
            Some(BigRational::new(rn, rd))
        } else {
            None
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d == BigInt::from(0) {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let int = if int.is_empty() || int == "-" || int == "+" {
            BigInt::from(0)
        } else {
            int.parse().map_err(|_| bad())?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let num: BigInt = frac.parse().map_err(|_| bad())?;
        let den = BigInt::from(10).pow(frac.len() as u32);
        let frac_part = BigRational::new(num, den);
        let int_part = BigRational::from_integer(int);
        return Ok(if neg { int_part - frac_part } else { int_part + frac_part });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

macro_rules! impl_float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_i64(n: i64) -> Self {
                n as $t
            }

            fn from_f64(x: f64) -> Option<Self> {
                Some(x as $t)
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn parse_literal(s: &str) -> Result<Self> {
                let s = s.trim();
                let bad = || Error::Parse(format!("invalid numeric literal {s:?}"));
                let v = if let Some((n, d)) = s.split_once('/') {
                    let n: $t = n.trim().parse().map_err(|_| bad())?;
                    let d: $t = d.trim().parse().map_err(|_| bad())?;
                    if d == 0.0 {
                        return Err(Error::Parse(format!("zero denominator in {s:?}")));
                    }
                    n / d
                } else {
                    s.parse().map_err(|_| bad())?
                };
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(bad())
                }
            }

            fn approx_sqrt(&self) -> Option<Self> {
                (*self >= 0.0).then(|| self.sqrt())
            }
        }
    };
}

impl_float_scalar!(f64);
impl_float_scalar!(f32);

/// Parses a comma-separated coefficient list, enforcing an expected length.
pub fn parse_csv<S: Scalar>(s: &str, expected: std::ops::RangeInclusive<usize>) -> Result<Vec<S>> {
    let parts: Vec<S> = s
        .split(',')
        .map(|p| S::parse_literal(p))
        .collect::<Result<_>>()?;
    if expected.contains(&parts.len()) {
        Ok(parts)
    } else {
        let want = if expected.start() == expected.end() {
            format!("{}", expected.start())
        } else {
            format!("{} to {}", expected.start(), expected.end())
        };
        Err(Error::Parse(format!(
            "expected {want} components, got {}",
            parts.len()
        )))
    }
}

/// Renders a coefficient list back to the comma-separated form accepted by
/// `parse_csv`; exact values round-trip losslessly.
pub fn format_csv<S: Scalar>(items: &[S]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_literals() {
        let r = <BigRational as Scalar>::parse_literal("-3/6").unwrap();
        assert_eq!(r, BigRational::ratio(-1, 2));
        let d = <BigRational as Scalar>::parse_literal("1.25").unwrap();
        assert_eq!(d, BigRational::ratio(5, 4));
        let n = <BigRational as Scalar>::parse_literal("-2.5").unwrap();
        assert_eq!(n, BigRational::ratio(-5, 2));
        assert!(<BigRational as Scalar>::parse_literal("1/0").is_err());
        assert!(<BigRational as Scalar>::parse_literal("").is_err());
        assert!(<BigRational as Scalar>::parse_literal("x").is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "7", "-7", "3/4", "-22/7"] {
            let v = <BigRational as Scalar>::parse_literal(s).unwrap();
            assert_eq!(v.to_string(), s);
        }
    }

    #[test]
    fn exact_sqrt_only_for_perfect_squares() {
        let q = BigRational::ratio(9, 4);
        assert_eq!(q.approx_sqrt(), Some(BigRational::ratio(3, 2)));
        assert_eq!(BigRational::ratio(2, 1).approx_sqrt(), None);
        assert_eq!(BigRational::ratio(-1, 1).approx_sqrt(), None);
    }

    #[test]
    fn float_literals() {
        assert_eq!(<f64 as Scalar>::parse_literal("3/4").unwrap(), 0.75);
        assert_eq!(<f64 as Scalar>::parse_literal("-1.5").unwrap(), -1.5);
        assert!(<f64 as Scalar>::parse_literal("nan").is_err());
    }
}
