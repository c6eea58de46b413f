//! Binary fixed-point numbers over `BigInt`: just enough arithmetic for one
//! square root and one exponential at a few hundred bits.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::Rational;

/// Extra bits carried through intermediate steps.
const GUARD_BITS: u32 = 32;

/// The value `mant · 2^(-bits)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigFloat {
    mant: BigInt,
    bits: u32,
}

impl BigFloat {
    pub fn from_int(n: &BigInt, bits: u32) -> Self {
        BigFloat {
            mant: n << bits,
            bits,
        }
    }

    /// Nearest fixed-point value to `r`.
    pub fn from_rational(r: &Rational, bits: u32) -> Self {
        let num: BigInt = r.numer() << (bits + 1);
        let den = r.denom();
        let mant = (num + den).div_floor(&(den * 2));
        BigFloat { mant, bits }
    }

    /// `⌊√n⌋` to `bits` fractional bits, for `n >= 0`.
    pub fn sqrt_int(n: &BigInt, bits: u32) -> Self {
        assert!(!n.is_negative(), "sqrt of a negative integer");
        let scaled: BigInt = n << (2 * bits);
        BigFloat {
            mant: scaled.sqrt(),
            bits,
        }
    }

    /// `exp(r)` to `bits` fractional bits.
    pub fn exp_rational(r: &Rational, bits: u32) -> Self {
        // Halve the argument until it is below 2^-8, sum the Taylor series,
        // then square back up.
        let magnitude = (r.abs().ceil().to_integer()).bits() as u32;
        let halvings = magnitude + 8;
        let w = bits + GUARD_BITS + halvings;
        let reduced = r / Rational::from_integer(BigInt::one() << halvings);
        let y = BigFloat::from_rational(&reduced, w).mant;

        let one: BigInt = BigInt::one() << w;
        let mut sum = one.clone();
        let mut term = one;
        let mut i = 1u32;
        loop {
            term = ((&term * &y) >> w) / i;
            if term.is_zero() {
                break;
            }
            sum += &term;
            i += 1;
        }
        for _ in 0..halvings {
            sum = (&sum * &sum) >> w;
        }
        BigFloat { mant: sum, bits: w }.with_bits(bits)
    }

    /// Rounds to `bits` fractional bits (ties upward).
    pub fn with_bits(&self, bits: u32) -> Self {
        let mant = match bits.cmp(&self.bits) {
            Ordering::Equal => self.mant.clone(),
            Ordering::Greater => &self.mant << (bits - self.bits),
            Ordering::Less => {
                let shift = self.bits - bits;
                (&self.mant + (BigInt::one() << (shift - 1))) >> shift
            }
        };
        BigFloat { mant, bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn mul(&self, other: &BigFloat) -> BigFloat {
        let bits = self.bits.max(other.bits);
        let mant = (&self.mant * &other.mant) >> (self.bits + other.bits - bits);
        BigFloat { mant, bits }
    }

    pub fn sub(&self, other: &BigFloat) -> BigFloat {
        let bits = self.bits.max(other.bits);
        let a = self.with_bits(bits);
        let b = other.with_bits(bits);
        BigFloat {
            mant: a.mant - b.mant,
            bits,
        }
    }

    pub fn abs(&self) -> BigFloat {
        BigFloat {
            mant: self.mant.abs(),
            bits: self.bits,
        }
    }

    /// `⌊self + 1/2⌋`.
    pub fn round_half_up(&self) -> BigInt {
        if self.bits == 0 {
            return self.mant.clone();
        }
        (&self.mant + (BigInt::one() << (self.bits - 1))) >> self.bits
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mant.clone(), BigInt::one() << self.bits)
    }

    pub fn to_f64(&self) -> f64 {
        let keep = 64u32;
        if self.bits > keep {
            let m = (&self.mant >> (self.bits - keep))
                .to_f64()
                .unwrap_or(f64::NAN);
            m / 2f64.powi(keep as i32)
        } else {
            self.mant.to_f64().unwrap_or(f64::NAN) / 2f64.powi(self.bits as i32)
        }
    }

    /// Decimal expansion truncated (not rounded) to `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        let neg = self.mant.sign() == Sign::Minus;
        let m = self.mant.abs();
        let int = &m >> self.bits;
        let frac_bits = &m - (&int << self.bits);
        let frac = (frac_bits * BigInt::from(10u32).pow(digits as u32)) >> self.bits;
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac:0>digits$}")
        }
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(f.precision().unwrap_or(10)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn sqrt_and_decimal() {
        let s = BigFloat::sqrt_int(&2.into(), 100);
        assert_eq!(s.to_decimal(20), "1.41421356237309504880");
        assert_eq!(BigFloat::sqrt_int(&49.into(), 10).to_decimal(3), "7.000");
        assert_eq!(
            format!("{:.4}", BigFloat::from_rational(&r(-1, 3), 40)),
            "-0.3333"
        );
    }

    #[test]
    fn exp_values() {
        let e = BigFloat::exp_rational(&r(1, 1), 128);
        assert_eq!(e.to_decimal(30), "2.718281828459045235360287471352");
        let e = BigFloat::exp_rational(&r(-134, 405), 80);
        assert!((e.to_f64() - (-134f64 / 405.0).exp()).abs() < 1e-15);
        let e = BigFloat::exp_rational(&r(-10, 1), 100);
        assert!((e.to_f64() - (-10f64).exp()).abs() < 1e-18);
        assert_eq!(
            BigFloat::exp_rational(&r(0, 1), 30),
            BigFloat::from_int(&1.into(), 30)
        );
    }

    #[test]
    fn rounding() {
        assert_eq!(
            BigFloat::from_rational(&r(5, 2), 8).round_half_up(),
            3.into()
        );
        assert_eq!(
            BigFloat::from_rational(&r(-5, 2), 8).round_half_up(),
            (-2).into()
        );
        assert_eq!(
            BigFloat::from_rational(&r(49, 10), 8).round_half_up(),
            5.into()
        );
        let x = BigFloat::from_rational(&r(3, 4), 4);
        assert_eq!(x.with_bits(1).to_rational(), r(1, 1));
        assert_eq!(x.with_bits(8).to_rational(), r(3, 4));
    }

    #[test]
    fn arithmetic() {
        let a = BigFloat::from_rational(&r(3, 2), 20);
        let b = BigFloat::from_rational(&r(1, 4), 30);
        assert_eq!(a.mul(&b).to_rational(), r(3, 8));
        assert_eq!(b.sub(&a).to_rational(), r(-5, 4));
        assert_eq!(b.sub(&a).abs().to_rational(), r(5, 4));
    }
}
