//! Dense polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Polynomial over `Z`, coefficients in ascending order of power.
///
/// The stored vector never ends in a zero; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// How a coefficient sequence compares with its own reversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    Palindromic,
    Antipalindromic,
    Neither,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Build from coefficients listed highest power first.
    pub fn from_descending(coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        let mut v: Vec<BigInt> = coeffs.into_iter().collect();
        v.reverse();
        Self::new(v)
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x^k - 1`.
    pub fn x_pow_minus_one(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[k] += 1;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Coefficients highest power first.
    pub fn descending(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient `self / divisor`, failing unless the division is exact over `Z`.
    pub fn exact_div(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok(IntPolynomial::zero());
        };
        if nd < dd {
            return Err(Error::InexactDivision {
                remainder_degree: nd,
            });
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision {
                    remainder_degree: i + dd,
                });
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        if let Some(pos) = rem.iter().rposition(|c| !c.is_zero()) {
            return Err(Error::InexactDivision {
                remainder_degree: pos,
            });
        }
        Ok(IntPolynomial::new(quot))
    }

    /// `P(x^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1, "compose_power: k must be positive");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// `P(-x)`.
    pub fn negate_arg(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rat(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| {
            acc * x + Rational::from_integer(c.clone())
        })
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + bigint_to_f64(c))
    }

    /// `b^deg · P(a/b)`, the homogenized value.
    pub fn eval_homogeneous(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut b_pow = BigInt::one();
        // Horner from the top: the k-th coefficient from the top picks up b^k.
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &b_pow;
            b_pow *= b;
        }
        acc
    }

    pub fn symmetry_class(&self) -> Symmetry {
        let n = self.coeffs.len();
        let pairs = || (0..n).map(|k| (&self.coeffs[k], &self.coeffs[n - 1 - k]));
        if pairs().all(|(a, b)| a == b) {
            Symmetry::Palindromic
        } else if pairs().all(|(a, b)| *a == -b) {
            Symmetry::Antipalindromic
        } else {
            Symmetry::Neither
        }
    }

    /// Largest absolute coefficient.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_default()
    }
}

pub(crate) fn bigint_to_f64(c: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN)
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}

/// Renders highest power first: `x^4 + 8*x^3 + 13*x^2 + 8*x + 1`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (_, false) => write!(f, "{mag}*")?,
                (_, true) => {}
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    order: String,
    coeffs: Vec<String>,
}

/// JSON form: `{"order":"ascending","coeffs":["1","-1"]}`.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            order: "ascending".into(),
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(deserializer)?;
        if raw.order != "ascending" {
            return Err(D::Error::custom(format!(
                "unsupported order {:?}",
                raw.order
            )));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn ring_basics() {
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
        assert_eq!(&p(&[3, 0, 2]) + &IntPolynomial::zero(), p(&[3, 0, 2]));
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), IntPolynomial::zero());
    }

    #[test]
    fn gauss_identity_for_15() {
        let a = IntPolynomial::from_descending([2, -1, -4, -1, 2].map(BigInt::from));
        let b = IntPolynomial::from_descending([1, 0, -1, 0].map(BigInt::from));
        let phi15 =
            IntPolynomial::from_descending([1, -1, 0, 1, -1, 1, 0, -1, 1].map(BigInt::from));
        // s = -1, so the identity reads A^2 + 15 B^2.
        let lhs = &(&a * &a) + &b.scale(&BigInt::from(15)).mul(&b);
        assert_eq!(lhs, phi15.scale(&BigInt::from(4)));
    }

    #[test]
    fn exact_division_examples() {
        let num = &IntPolynomial::x_pow_minus_one(15) * &IntPolynomial::x_pow_minus_one(1);
        let den = &IntPolynomial::x_pow_minus_one(5) * &IntPolynomial::x_pow_minus_one(3);
        assert_eq!(
            num.exact_div(&den).unwrap(),
            p(&[1, -1, 0, 1, -1, 1, 0, -1, 1])
        );

        let x14p1 = IntPolynomial::new({
            let mut v = vec![BigInt::zero(); 15];
            v[0] = 1.into();
            v[14] = 1.into();
            v
        });
        assert_eq!(
            x14p1.exact_div(&p(&[1, 0, 1])).unwrap(),
            p(&[1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1])
        );
        let q = p(&[5, -3, 7]);
        assert_eq!(q.exact_div(&IntPolynomial::one()).unwrap(), q);
    }

    #[test]
    fn exact_division_errors() {
        assert!(matches!(
            p(&[1, 0, 1]).exact_div(&p(&[1, 1])),
            Err(Error::InexactDivision { .. })
        ));
        assert!(matches!(
            p(&[1, 1]).exact_div(&p(&[0, 2])),
            Err(Error::InexactDivision { .. })
        ));
        assert!(matches!(
            p(&[1]).exact_div(&p(&[1, 1])),
            Err(Error::InexactDivision { .. })
        ));
        assert_eq!(
            p(&[1]).exact_div(&IntPolynomial::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn substitutions() {
        let phi7 = p(&[1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(
            phi7.negate_arg().compose_power(2),
            p(&[1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1])
        );
        assert_eq!(p(&[1, 1]).compose_power(3), p(&[1, 0, 0, 1]));
        assert_eq!(
            p(&[1, -1, 0, 1, -1, 1, 0, -1, 1]).negate_arg(),
            p(&[1, 1, 0, -1, -1, -1, 0, 1, 1])
        );
    }

    #[test]
    fn evaluation() {
        let c7 = p(&[1, 3, 3, 1]);
        let d7 = p(&[1, 1, 1]);
        let x = rat(28, 25);
        assert_eq!(c7.eval_rat(&x), rat(148877, 5i64.pow(6)));
        assert_eq!(d7.eval_rat(&x), rat(2109, 5i64.pow(4)));

        let c15 = p(&[1, 8, 13, 8, 1]);
        let d15 = p(&[1, 3, 3, 1]);
        assert_eq!(c15.eval_int(&15.into()), 80671.into());
        assert_eq!(d15.eval_int(&15.into()), 4096.into());
    }

    #[test]
    fn homogeneous_evaluation() {
        // 28^2 - 28*25 + 25^2 for x^2 - x + 1
        let q = p(&[1, -1, 1]);
        assert_eq!(
            q.eval_homogeneous(&28.into(), &25.into()),
            BigInt::from(28 * 28 - 28 * 25 + 25 * 25)
        );
        assert_eq!(p(&[7]).eval_homogeneous(&3.into(), &5.into()), 7.into());
    }

    #[test]
    fn symmetry() {
        assert_eq!(p(&[1, 8, 13, 8, 1]).symmetry_class(), Symmetry::Palindromic);
        assert_eq!(p(&[-1, 0, 1]).symmetry_class(), Symmetry::Antipalindromic);
        assert_eq!(p(&[0, 1, 1]).symmetry_class(), Symmetry::Neither);
    }

    #[test]
    fn display() {
        assert_eq!(
            p(&[1, 8, 13, 8, 1]).to_string(),
            "x^4 + 8*x^3 + 13*x^2 + 8*x + 1"
        );
        assert_eq!(p(&[-1, 1]).to_string(), "x - 1");
        assert_eq!(
            p(&[2, -1, -4, -1, 2]).to_string(),
            "2*x^4 - x^3 - 4*x^2 - x + 2"
        );
        assert_eq!(p(&[1, 0, -1]).to_string(), "-x^2 + 1");
        assert_eq!(p(&[-7]).to_string(), "-7");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&p(&[-1, 1])).unwrap();
        assert_eq!(s, r#"{"order":"ascending","coeffs":["-1","1"]}"#);
        let back: IntPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p(&[-1, 1]));
        assert!(
            serde_json::from_str::<IntPolynomial>(r#"{"order":"descending","coeffs":[]}"#).is_err()
        );
    }
}
