//! Scalar abstraction shared by every kernel in the crate.
//!
//! Everything in the valuation stack is simple interest, so the kernels only
//! need field arithmetic. That lets the same code run on `f32`, `f64` and on
//! an exact rational type, which the identity tests use to check algebraic
//! equalities without any rounding.

use std::fmt::{Debug, Display};

use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// Exact rational scalar. Used where identities must hold without rounding.
pub type Rational = Ratio<i128>;

/// Numeric type the pricing kernels are generic over.
pub trait Scalar:
    Copy + Num + Signed + PartialOrd + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Exact conversion of a whole number of days (or any small integer).
    fn from_int(value: i64) -> Self;

    /// Lossy conversion from a decimal input such as a configured rate.
    fn from_decimal(value: f64) -> Option<Self>;

    fn to_f64(self) -> f64;

    fn is_finite(self) -> bool;

    fn max_of(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }
}

macro_rules! impl_float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            #[inline]
            fn from_int(value: i64) -> Self {
                value as $t
            }

            #[inline]
            fn from_decimal(value: f64) -> Option<Self> {
                let v = value as $t;
                v.is_finite().then_some(v)
            }

            #[inline]
            fn to_f64(self) -> f64 {
                self as f64
            }

            #[inline]
            fn is_finite(self) -> bool {
                <$t>::is_finite(self)
            }
        }
    };
}

impl_float_scalar!(f32);
impl_float_scalar!(f64);

impl Scalar for Rational {
    #[inline]
    fn from_int(value: i64) -> Self {
        Ratio::from_integer(value as i128)
    }

    fn from_decimal(value: f64) -> Option<Self> {
        if !value.is_finite() {
            return None;
        }
        // Decimal inputs (rates, notionals) are recovered through their
        // shortest round-trip representation so 0.05 becomes exactly 1/20.
        let text = format!("{value}");
        parse_decimal(&text)
    }

    fn to_f64(self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }

    #[inline]
    fn is_finite(self) -> bool {
        true
    }
}

fn parse_decimal(text: &str) -> Option<Rational> {
    let (mantissa, exponent) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (text, 0),
    };
    let negative = mantissa.starts_with('-');
    let digits = mantissa.trim_start_matches(['-', '+']);
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    let mut numer: i128 = 0;
    for c in int_part.chars().chain(frac_part.chars()) {
        numer = numer
            .checked_mul(10)?
            .checked_add(c.to_digit(10)? as i128)?;
    }
    let scale = exponent - frac_part.len() as i32;
    let pow = 10i128.checked_pow(scale.unsigned_abs())?;
    let value = if scale >= 0 {
        Ratio::from_integer(numer.checked_mul(pow)?)
    } else {
        Ratio::new(numer, pow)
    };
    Some(if negative { -value } else { value })
}
