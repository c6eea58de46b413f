//! Truncated power series over `Q`, and the closed-form generating functions
//! for `A_n … D_n` built on them.
//!
//! This is a second, independent derivation of the Gauss and Lucas pairs: the
//! recurrences in [`crate::gauss`] and [`crate::lucas`] never touch it.
//!
//! Square roots of the scalar `s·n` (or `n`) never appear. `cosh(√t·f)` and
//! `sinh(√t·f)/√t` only involve even powers of `√t`, so both are computed
//! with `t` itself and stay rational; for negative `t` they are the cosine
//! and sine forms.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::cyclotomic::{f_poly, phi_moebius};
use crate::error::{Error, Result};
use crate::gauss::GaussPair;
use crate::lucas::{algorithm_l, LucasPair};
use crate::numthy::{euler_phi, is_squarefree, kronecker, make_context};
use crate::poly::{IntPolynomial, Rational};

/// `c_0 + c_1 x + … + c_K x^K + O(x^{K+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<Rational>,
}

/// Which half of the exponential [`series_exp_like`] produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpMode {
    /// `cosh(√t·f)`
    Cosh,
    /// `sinh(√t·f)/√t`
    SinhOverRoot,
}

impl RationalSeries {
    /// Pads or truncates `coeffs` to exactly `order + 1` terms.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        RationalSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    pub fn from_poly(p: &IntPolynomial, order: usize) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .take(order + 1)
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    /// Index of the first nonzero coefficient, `None` if all vanish.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Square root of a series with constant term 1, constant term of the root 1.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm(self.coeffs[0].to_string()));
        }
        let k_max = self.order();
        let half = Rational::new(1.into(), 2.into());
        let mut b: Vec<Rational> = Vec::with_capacity(k_max + 1);
        b.push(Rational::one());
        for k in 1..=k_max {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                acc -= &b[j] * &b[k - j];
            }
            b.push(acc * &half);
        }
        Ok(RationalSeries { coeffs: b })
    }

    /// `exp` of a series with zero constant term, from `k·e_k = Σ j·f_j·e_{k-j}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument(format!(
                "exp needs a zero constant term, got {}",
                self.coeffs[0]
            )));
        }
        let mut e: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        e.push(Rational::one());
        for k in 1..=self.order() {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * Rational::from_integer(j.into()) * &e[k - j];
                }
            }
            e.push(acc / Rational::from_integer(k.into()));
        }
        Ok(RationalSeries { coeffs: e })
    }

    /// `self / x`, for a series with zero constant term; the order drops by one.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order() == 0 {
            return Err(Error::InvalidArgument(
                "series is not divisible by x".into(),
            ));
        }
        Ok(RationalSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Series in `x = y²` from a series in `y` whose odd coefficients vanish.
    pub fn even_part_in_square(&self) -> Result<Self> {
        if let Some((i, c)) = self
            .coeffs
            .iter()
            .enumerate()
            .find(|(i, c)| i % 2 == 1 && !c.is_zero())
        {
            return Err(Error::InternalInconsistency(format!(
                "odd coefficient {i} of an even series is {c}"
            )));
        }
        Ok(RationalSeries {
            coeffs: self.coeffs.iter().step_by(2).cloned().collect(),
        })
    }

    /// Coefficients as integers, failing on the first one that is not.
    fn to_integers(&self, n: u64) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegralOracle {
                        n,
                        index,
                        value: c.to_string(),
                    })
                }
            })
            .collect()
    }

    /// Sums the series at `x` in floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl Add for &RationalSeries {
    type Output = RationalSeries;

    fn add(self, rhs: &RationalSeries) -> RationalSeries {
        let order = self.order().min(rhs.order());
        RationalSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Sub for &RationalSeries {
    type Output = RationalSeries;

    fn sub(self, rhs: &RationalSeries) -> RationalSeries {
        let order = self.order().min(rhs.order());
        RationalSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        }
    }
}

/// Product truncated at the smaller of the two orders.
impl Mul for &RationalSeries {
    type Output = RationalSeries;

    fn mul(self, rhs: &RationalSeries) -> RationalSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        RationalSeries { coeffs: out }
    }
}

/// `Σ_{j≥1} (j|n)·x^j/j` through `x^order`, for odd square-free `n > 1`.
pub fn f_series(n: u64, order: usize) -> Result<RationalSeries> {
    if n < 3 || n % 2 == 0 || !is_squarefree(n) {
        return Err(Error::NotOddSquareFree(n));
    }
    let coeffs = (0..=order)
        .map(|j| {
            if j == 0 {
                return Ok(Rational::zero());
            }
            let chi = kronecker(j as i64, n)?;
            Ok(Rational::new(chi.into(), j.into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalSeries::new(coeffs, order))
}

/// `Σ_{j≥0} (n|2j+1)·x^{2j+1}/(2j+1)` through `x^order`, for square-free `n > 1`.
pub fn g_series(n: u64, order: usize) -> Result<RationalSeries> {
    make_context(n)?;
    let coeffs = (0..=order)
        .map(|j| {
            if j % 2 == 0 {
                return Ok(Rational::zero());
            }
            let chi = kronecker(n as i64, j as u64)?;
            Ok(Rational::new(chi.into(), j.into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalSeries::new(coeffs, order))
}

/// Square root of a series with constant term 1.
pub fn series_sqrt(p: &RationalSeries) -> Result<RationalSeries> {
    p.sqrt()
}

/// `cosh(√t·f)` or `sinh(√t·f)/√t` for a series `f` with zero constant term,
/// where `root2 = t` may be negative.
pub fn series_exp_like(
    f: &RationalSeries,
    mode: ExpMode,
    root2: &Rational,
) -> Result<RationalSeries> {
    if !f.coeff(0).is_zero() {
        return Err(Error::InvalidArgument(
            "argument series must vanish at 0".into(),
        ));
    }
    let order = f.order();
    let f2 = f * f;
    // term_k = t^k f^{2k} / (2k)!   or   t^k f^{2k+1} / (2k+1)!
    let (mut term, mut next_index) = match mode {
        ExpMode::Cosh => (RationalSeries::one(order), 1u64),
        ExpMode::SinhOverRoot => (f.clone(), 2u64),
    };
    let mut sum = term.clone();
    while term.valuation().is_some() {
        let denom = Rational::from_integer((next_index * (next_index + 1)).into());
        term = (&term * &f2).scale(&(root2 / denom));
        sum = &sum + &term;
        next_index += 2;
    }
    Ok(sum)
}

/// `A_n = 2√Φ_n·cosh(√(sn)/2·f_n)` and `B_n = 2s·√Φ_n·sinh(√(sn)/2·f_n)/√(sn)`,
/// expanded one term past the degree for odd square-free `n > 3`.
pub fn gauss_via_series(n: u64) -> Result<GaussPair> {
    if n == 3 {
        return Err(Error::InvalidArgument(
            "n = 3 is the exceptional case; use algorithm_d".into(),
        ));
    }
    if n < 3 || n % 2 == 0 || !is_squarefree(n) {
        return Err(Error::NotOddSquareFree(n));
    }
    let d = (euler_phi(n) / 2) as usize;
    let order = d + 1;
    let s: i8 = if n % 4 == 3 { -1 } else { 1 };
    let t = Rational::new(BigInt::from(s as i64 * n as i64), 4.into());

    let root_phi = RationalSeries::from_poly(&phi_moebius(n), order).sqrt()?;
    let f = f_series(n, order)?;
    let two = Rational::from_integer(2.into());
    let sign = Rational::from_integer(s.into());

    let a = (&root_phi * &series_exp_like(&f, ExpMode::Cosh, &t)?).scale(&two);
    // 2·sinh(√(sn)·f/2)/√(sn) = sinh(√t·f)/√t with t = sn/4.
    let b = (&root_phi * &series_exp_like(&f, ExpMode::SinhOverRoot, &t)?).scale(&sign);

    let a = a.to_integers(n)?;
    let b = b.to_integers(n)?;
    for (which, v) in [("A", &a), ("B", &b)] {
        if !v[order].is_zero() {
            return Err(Error::InternalInconsistency(format!(
                "{which}_{n} series has a nonzero term past degree {d}"
            )));
        }
    }
    // The expansion fixes A_n(0) = 2; the recurrence fixes the leading
    // coefficient instead, and the two differ by (-1)^d.
    let flip = if d % 2 == 1 { -1 } else { 1 };
    Ok(GaussPair {
        n,
        s,
        d,
        alpha: (0..=d).map(|j| &a[d - j] * flip).collect(),
        beta: (0..=d).map(|j| &b[d - j] * flip).collect(),
    })
}

/// `C_n = √F_n·cosh(√n·g_n(√x))` and `D_n = √(F_n/(nx))·sinh(√n·g_n(√x))`.
///
/// The `√x` substitution is handled by working in `y = √x` and keeping only
/// even powers, which must be the only nonzero ones.
pub fn lucas_via_series(n: u64) -> Result<LucasPair> {
    let ctx = make_context(n)?;
    let d = ctx.d_lucas as usize;
    let order = d + 1;
    let y_order = 2 * order + 1;
    let t = Rational::from_integer(n.into());

    let g = g_series(n, y_order)?;
    let ch = series_exp_like(&g, ExpMode::Cosh, &t)?;
    let ch =
        RationalSeries::new(ch.coeffs[..=2 * order].to_vec(), 2 * order).even_part_in_square()?;
    let sh = series_exp_like(&g, ExpMode::SinhOverRoot, &t)?
        .shift_down()?
        .even_part_in_square()?;

    let root_f = RationalSeries::from_poly(&f_poly(n)?, order).sqrt()?;
    let c = (&root_f * &ch).to_integers(n)?;
    let dd = (&root_f * &sh).to_integers(n)?;

    if !c[order].is_zero() || !dd[d].is_zero() || !dd[order].is_zero() {
        return Err(Error::InternalInconsistency(format!(
            "C_{n}/D_{n} series has nonzero terms past the degree"
        )));
    }
    Ok(LucasPair {
        n,
        n_prime: ctx.n_prime,
        s_prime: ctx.s_prime,
        d,
        gamma: (0..=d).map(|j| c[d - j].clone()).collect(),
        delta: (0..d).map(|j| dd[d - 1 - j].clone()).collect(),
    })
}

/// Compares `L̃_n(x)/L_n(x)` built from `C_n`, `D_n` with `exp(2s'√n·g_n(x))`
/// summed through `x^terms`, at a real point `|x0| < 1`.
///
/// `L_n(x) = C_n(x²) - s'·x·√n·D_n(x²)` and `L̃_n(x) = L_n(-x)`.
pub fn check_ratio_identity(n: u64, x0: &Rational, terms: usize, tol: f64) -> Result<bool> {
    let x = x0.to_f64().unwrap_or(f64::NAN);
    if !(x.abs() < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "|x0| = |{x0}| must be below 1"
        )));
    }
    let pair = algorithm_l(n)?;
    let (c, d) = (pair.c_poly(), pair.d_poly());
    let root_n = (n as f64).sqrt();
    let sp = pair.s_prime as f64;
    let cx = c.eval_f64(x * x);
    let dx = d.eval_f64(x * x);
    let l = cx - sp * x * root_n * dx;
    let l_tilde = cx + sp * x * root_n * dx;
    let lhs = l_tilde / l;
    let rhs = (2.0 * sp * root_n * g_series(n, terms)?.eval_f64(x)).exp();
    Ok((lhs - rhs).abs() <= tol * rhs.abs().max(1.0))
}
