//! The polynomials `A_n`, `B_n` of Gauss's identity
//! `4Φ_n(x) = A_n(x)² - s·n·B_n(x)²` for odd square-free `n > 1`.
//!
//! Coefficients are produced by Dirichlet's integer recurrence: the power
//! sums of the roots of `G_n = (A_n - √(sn)·B_n)/2` are split into integer
//! parts `2p_k = q_k + r_k·√(sn)` and pushed through Newton's identities.
//! Every step divides by `2k`; a nonzero remainder means something upstream
//! is wrong.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::cyclotomic::phi_moebius;
use crate::error::{Error, Result};
use crate::numthy::{euler_phi, is_prime, is_squarefree, kronecker, moebius};
use crate::poly::IntPolynomial;

/// Coefficients of `A_n` and `B_n`, indexed from the top: `A_n = Σ α_j x^{d-j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussPair {
    pub n: u64,
    pub s: i8,
    /// `φ(n)/2`.
    pub d: usize,
    pub alpha: Vec<BigInt>,
    /// `β_0 = 0`, so `B_n` has degree `d - 1`.
    pub beta: Vec<BigInt>,
}

impl GaussPair {
    pub fn a_poly(&self) -> IntPolynomial {
        IntPolynomial::from_descending(self.alpha.iter().cloned())
    }

    pub fn b_poly(&self) -> IntPolynomial {
        IntPolynomial::from_descending(self.beta.iter().cloned())
    }
}

fn require_odd_squarefree(n: u64) -> Result<()> {
    if n > 1 && n % 2 == 1 && is_squarefree(n) {
        Ok(())
    } else {
        Err(Error::NotOddSquareFree(n))
    }
}

/// `(q_k, r_k)` with `q_k = μ(n/g)·φ(g)`, `g = gcd(k, n)`, and `r_k = (k|n)`.
pub fn gauss_power_parts(n: u64, k: u64) -> (i64, i64) {
    let g = k.gcd(&n);
    let q = moebius(n / g) as i64 * euler_phi(g) as i64;
    let r = kronecker(k as i64, n).expect("odd modulus") as i64;
    (q, r)
}

/// `A_n`, `B_n` using the palindromic shortcut when it applies.
pub fn algorithm_d(n: u64) -> Result<GaussPair> {
    algorithm_d_with(n, true)
}

/// `A_n`, `B_n`; with `use_symmetry` the recurrence stops at
/// `max(1, ⌊d/2⌋)` and the rest is read off the coefficient symmetries.
pub fn algorithm_d_with(n: u64, use_symmetry: bool) -> Result<GaussPair> {
    require_odd_squarefree(n)?;
    let d = (euler_phi(n) / 2) as usize;
    let s: i8 = if n % 4 == 3 { -1 } else { 1 };
    let sn = BigInt::from(s as i64 * n as i64);

    let shortcut = use_symmetry && n > 3;
    let limit = if shortcut { (d / 2).max(1) } else { d };

    let parts: Vec<(i64, i64)> = (1..=limit as u64)
        .map(|k| gauss_power_parts(n, k))
        .collect();

    let mut alpha: Vec<BigInt> = vec![BigInt::zero(); d + 1];
    let mut beta: Vec<BigInt> = vec![BigInt::zero(); d + 1];
    alpha[0] = 2.into();

    for k in 1..=limit {
        let mut sa = BigInt::zero();
        let mut sb = BigInt::zero();
        for j in 0..k {
            let (q, r) = parts[k - j - 1];
            if r != 0 {
                sa += &sn * r * &beta[j];
                sb += &alpha[j] * r;
            }
            if q != 0 {
                sa -= &alpha[j] * q;
                sb -= &beta[j] * q;
            }
        }
        alpha[k] = exact_step(n, k, sa, 2 * k as u64)?;
        beta[k] = exact_step(n, k, sb, 2 * k as u64)?;
    }

    if shortcut {
        let a_sign = if d % 2 == 1 { -1 } else { 1 };
        let b_sign = if !is_prime(n) && n % 4 == 3 { -1 } else { 1 };
        for k in limit + 1..=d {
            alpha[k] = &alpha[d - k] * a_sign;
            beta[k] = &beta[d - k] * b_sign;
        }
    }

    Ok(GaussPair {
        n,
        s,
        d,
        alpha,
        beta,
    })
}

pub(crate) fn exact_step(n: u64, k: usize, sum: BigInt, divisor: u64) -> Result<BigInt> {
    let (q, r) = sum.div_rem(&BigInt::from(divisor));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonIntegerStep { n, k, sum, divisor })
    }
}

/// Checks `4Φ_n = A_n² - s·n·B_n²` exactly.
pub fn verify_gauss(n: u64) -> Result<bool> {
    let pair = algorithm_d(n)?;
    Ok(gauss_identity_holds(&pair))
}

pub fn gauss_identity_holds(pair: &GaussPair) -> bool {
    let a = pair.a_poly();
    let b = pair.b_poly();
    let sn = BigInt::from(pair.s as i64 * pair.n as i64);
    let rhs = &(&a * &a) - &(&b * &b).scale(&sn);
    rhs == phi_moebius(pair.n).scale(&BigInt::from(4))
}
