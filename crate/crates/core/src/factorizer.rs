//! Integer factorizations from the Aurifeuillian identity.
//!
//! At `x = m²n` the value `F_n(x)` splits as `F_n⁻(x)·F_n⁺(x)`. For integer
//! `m` the smaller factor is the integer nearest to
//! `√F_n(x)·exp(-(1/m)·Σ_{j<λ} (n|2j+1)/((2j+1)·x^j))`; for any rational `m`
//! both factors come from evaluating `C_n` and `D_n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bigfloat::BigFloat;
use crate::cyclotomic::{f_poly, phi_moebius};
use crate::error::{Error, Result};
use crate::lucas::aurifeuillian_polys_eval;
use crate::numthy::{divisors, kronecker, make_context};
use crate::poly::Rational;

pub const DEFAULT_TRIAL_LIMIT: u64 = 1_000_000;

/// Both Aurifeuillian factors of `F_n(x)` at `x = m²n`, `m = m_num/m_den`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AurifeuilleResult {
    pub n: u64,
    pub m_num: BigInt,
    pub m_den: BigInt,
    pub x: Rational,
    pub f_value: Rational,
    pub f_minus: Rational,
    pub f_plus: Rational,
    /// Present only when the factors were found by rounding.
    pub hat_f: Option<BigFloat>,
    /// `|hat_f - f_minus|`.
    pub residual: Option<BigFloat>,
}

impl AurifeuilleResult {
    fn lambda(&self) -> u32 {
        make_context(self.n).expect("validated").lambda as u32
    }

    /// `(q^{2λ}·F⁻, q^{2λ}·F⁺)` with `λ = φ(2n)/2`: integers whose product is
    /// the homogeneous value `q^{4λ}·F_n(p²n/q²)`.
    pub fn integer_factors(&self) -> (BigInt, BigInt) {
        let scale = Rational::from_integer(self.m_den.pow(2 * self.lambda()));
        let as_int = |r: &Rational| {
            let v = r * &scale;
            debug_assert!(v.is_integer());
            v.to_integer()
        };
        (as_int(&self.f_minus), as_int(&self.f_plus))
    }
}

/// Prime (or probable prime) factors with multiplicity, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorList {
    pub target: BigInt,
    pub factors: Vec<(BigInt, u32)>,
    /// False when some reported factor is known to be composite.
    pub complete: bool,
}

impl FactorList {
    pub fn product(&self) -> BigInt {
        self.factors
            .iter()
            .fold(BigInt::one(), |acc, (p, e)| acc * p.pow(*e))
    }
}

fn check_point(n: u64, m: u64) -> Result<BigInt> {
    make_context(n)?;
    if m == 0 {
        return Err(Error::InvalidArgument(
            "m must be a positive integer".into(),
        ));
    }
    Ok(BigInt::from(m) * m * n)
}

/// `F_n(m²n)` exactly.
fn f_value_int(n: u64, m: u64) -> Result<BigInt> {
    let x = check_point(n, m)?;
    Ok(f_poly(n)?.eval_int(&x))
}

/// Smallest precision accepted by [`hat_f`]: half the bit length of
/// `F_n(m²n)` plus 64.
pub fn default_precision(n: u64, m: u64) -> Result<u64> {
    let f = f_value_int(n, m)?;
    Ok(f.bits().div_ceil(2) + 64)
}

/// The exponent `(1/m)·Σ_{j<λ} (n|2j+1)/((2j+1)·x^j)` as an exact rational.
fn rounding_exponent(n: u64, m: u64) -> Result<Rational> {
    let ctx = make_context(n)?;
    let x = Rational::from_integer(check_point(n, m)?);
    let mut sum = Rational::zero();
    let mut x_pow = Rational::one();
    for j in 0..ctx.lambda {
        let k = 2 * j + 1;
        let chi = kronecker(n as i64, k)?;
        if chi != 0 {
            sum += Rational::from_integer(chi.into()) / (Rational::from_integer(k.into()) * &x_pow);
        }
        x_pow *= &x;
    }
    Ok(sum / Rational::from_integer(m.into()))
}

/// Estimate of the smaller Aurifeuillian factor of `F_n(m²n)` carried to
/// `precision_bits` significant bits.
pub fn hat_f(n: u64, m: u64, precision_bits: u64) -> Result<BigFloat> {
    let f = f_value_int(n, m)?;
    let int_bits = f.bits().div_ceil(2);
    let required = int_bits + 64;
    if precision_bits < required {
        return Err(Error::PrecisionTooLow {
            given: precision_bits,
            required,
        });
    }
    let frac_bits = u32::try_from(precision_bits - int_bits)
        .map_err(|_| Error::InvalidArgument(format!("precision {precision_bits} is too large")))?;
    let exponent = -rounding_exponent(n, m)?;
    let root = BigFloat::sqrt_int(&f, frac_bits + 8);
    // The root has `int_bits` integer bits, so the exponential needs that many
    // more fractional bits to keep the product's absolute error small.
    let e = BigFloat::exp_rational(&exponent, frac_bits + int_bits as u32 + 8);
    Ok(root.mul(&e).with_bits(frac_bits))
}

/// `F⁻ = ⌊F̂ + 1/2⌋` and `F⁺ = F_n(x)/F⁻` at the default precision.
pub fn factor_by_rounding(n: u64, m: u64) -> Result<AurifeuilleResult> {
    factor_by_rounding_with(n, m, default_precision(n, m)?)
}

pub fn factor_by_rounding_with(n: u64, m: u64, precision_bits: u64) -> Result<AurifeuilleResult> {
    let x = check_point(n, m)?;
    let f = f_value_int(n, m)?;
    let estimate = hat_f(n, m, precision_bits)?;
    let candidate = estimate.round_half_up();
    if candidate <= BigInt::zero() {
        return Err(Error::RoundingFailed {
            candidate,
            value: f,
        });
    }
    let (plus, rem) = f.div_rem(&candidate);
    if !rem.is_zero() {
        return Err(Error::RoundingFailed {
            candidate,
            value: f,
        });
    }
    let residual = estimate
        .sub(&BigFloat::from_int(&candidate, estimate.bits()))
        .abs();
    Ok(AurifeuilleResult {
        n,
        m_num: m.into(),
        m_den: BigInt::one(),
        x: Rational::from_integer(x),
        f_value: Rational::from_integer(f),
        f_minus: Rational::from_integer(candidate),
        f_plus: Rational::from_integer(plus),
        hat_f: Some(estimate),
        residual: Some(residual),
    })
}

fn check_rational_m(m: &Rational) -> Result<()> {
    if m.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("m = {m} must be positive")))
    }
}

/// Both factors by evaluating `C_n ∓ √(nx)·D_n` at `x = m²n`.
pub fn factor_by_polynomials(n: u64, m: &Rational) -> Result<AurifeuilleResult> {
    make_context(n)?;
    check_rational_m(m)?;
    let x = m * m * Rational::from_integer(n.into());
    let (f_minus, f_plus) = aurifeuillian_polys_eval(n, &x)?;
    let f_value = f_poly(n)?.eval_rat(&x);
    if &f_minus * &f_plus != f_value {
        return Err(Error::InternalInconsistency(format!(
            "F_{n}^- * F_{n}^+ != F_{n}({x})"
        )));
    }
    Ok(AurifeuilleResult {
        n,
        m_num: m.numer().clone(),
        m_den: m.denom().clone(),
        x,
        f_value,
        f_minus,
        f_plus,
        hat_f: None,
        residual: None,
    })
}

/// `(F⁺/F⁻, e^{2/m})`.
pub fn ratio_estimate(n: u64, m: &Rational) -> Result<(f64, f64)> {
    let r = factor_by_polynomials(n, m)?;
    let observed = (&r.f_plus / &r.f_minus).to_f64().unwrap_or(f64::NAN);
    let predicted = (2.0 / m.to_f64().unwrap_or(f64::NAN)).exp();
    Ok((observed, predicted))
}

/// Which cyclotomic indices make up the target: `x^n - 1 = Π_{d|n} Φ_d(x)`
/// when `n ≡ 1 (mod 4)`, otherwise `x^n + 1 = Π Φ_e(x)` over `e | 2n`, `e ∤ n`.
fn target_indices(n: u64) -> (Vec<u64>, bool) {
    if n % 4 == 1 {
        (divisors(n), false)
    } else {
        let idx = divisors(2 * n).into_iter().filter(|e| n % e != 0).collect();
        (idx, true)
    }
}

/// Factors `(p²n)^n ∓ (q²)^n` for `m = p/q`, which for integer `m` is
/// `x^n ∓ 1` at `x = m²n`; the sign is `-` exactly when `n ≡ 1 (mod 4)`.
///
/// The target is split into homogeneous cyclotomic values, the Aurifeuillian
/// one further into its two factors, and every piece is trial-divided up to
/// `trial_limit`. A cofactor left over is kept as a single factor: prime if
/// below `trial_limit²`, otherwise tested with Miller-Rabin.
pub fn full_factorization(n: u64, m: &Rational, trial_limit: u64) -> Result<FactorList> {
    let ctx = make_context(n)?;
    check_rational_m(m)?;
    if trial_limit < 2 {
        return Err(Error::InvalidArgument(
            "trial limit must be at least 2".into(),
        ));
    }
    let a = m.numer() * m.numer() * n;
    let b = m.denom() * m.denom();
    let (indices, plus) = target_indices(n);
    let a_n = a.pow(n as u32);
    let b_n = b.pow(n as u32);
    let target = if plus { &a_n + &b_n } else { &a_n - &b_n };
    if !target.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "x = {}/{} gives a target {target} that is not positive",
            a, b
        )));
    }

    let mut pieces = Vec::new();
    for e in indices {
        if e == ctx.n_prime {
            let (lo, hi) = factor_by_polynomials(n, m)?.integer_factors();
            pieces.push(lo);
            pieces.push(hi);
        } else {
            pieces.push(phi_moebius(e).eval_homogeneous(&a, &b));
        }
    }
    let check = pieces.iter().fold(BigInt::one(), |acc, p| acc * p);
    if check != target {
        return Err(Error::InternalInconsistency(format!(
            "cyclotomic pieces multiply to {check}, not {target}"
        )));
    }

    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut complete = true;
    for piece in pieces {
        let (found, ok) = trial_factor(piece, trial_limit);
        complete &= ok;
        for (p, e) in found {
            match factors.iter_mut().find(|(q, _)| *q == p) {
                Some(entry) => entry.1 += e,
                None => factors.push((p, e)),
            }
        }
    }
    factors.sort();
    Ok(FactorList {
        target,
        factors,
        complete,
    })
}

/// Trial division up to `limit`; the flag is false when the cofactor is composite.
fn trial_factor(mut n: BigInt, limit: u64) -> (Vec<(BigInt, u32)>, bool) {
    let mut out = Vec::new();
    if n <= BigInt::one() {
        return (out, true);
    }
    let mut p = 2u64;
    while p <= limit {
        let pb = BigInt::from(p);
        if &pb * &pb > n {
            break;
        }
        if (&n % p).is_zero() {
            let mut e = 0;
            while (&n % p).is_zero() {
                n /= p;
                e += 1;
            }
            out.push((pb, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        return (out, true);
    }
    let bound = BigInt::from(p) * p;
    let prime = n < bound || is_probable_prime(&n);
    out.push((n, 1));
    (out, prime)
}

/// Miller-Rabin with the first 20 prime bases; deterministic below `3.3·10^24`.
pub fn is_probable_prime(n: &BigInt) -> bool {
    const BASES: [u32; 20] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    ];
    let two = BigInt::from(2);
    if *n < two {
        return false;
    }
    for &b in &BASES {
        if *n == BigInt::from(b) {
            return true;
        }
        if (n % b).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().expect("n > 1");
    let d = &n_minus_1 >> s;
    'bases: for &b in &BASES {
        let mut y = BigInt::from(b).modpow(&d, n);
        if y.is_one() || y == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            y = y.modpow(&two, n);
            if y == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}
