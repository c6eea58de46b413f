//! The polynomials `C_n`, `D_n` of the Aurifeuillian identity
//! `F_n(x) = C_n(x)² - n·x·D_n(x)²` for square-free `n > 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::cyclotomic::f_poly;
use crate::error::{Error, Result};
use crate::gauss::exact_step;
use crate::numthy::{euler_phi, kronecker, make_context, moebius};
use crate::poly::{IntPolynomial, Rational};

/// Coefficients of `C_n` and `D_n`, indexed from the top:
/// `C_n = Σ γ_j x^{d-j}`, `D_n = Σ δ_j x^{d-1-j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LucasPair {
    pub n: u64,
    pub n_prime: u64,
    pub s_prime: i8,
    /// `φ(n')/2`.
    pub d: usize,
    pub gamma: Vec<BigInt>,
    pub delta: Vec<BigInt>,
}

impl LucasPair {
    pub fn c_poly(&self) -> IntPolynomial {
        IntPolynomial::from_descending(self.gamma.iter().cloned())
    }

    pub fn d_poly(&self) -> IntPolynomial {
        IntPolynomial::from_descending(self.delta.iter().cloned())
    }

    /// `(C(x) - √(nx)·D(x), C(x) + √(nx)·D(x))` at a point where `n·x` is a
    /// rational square.
    pub fn eval_factors(&self, x: &Rational) -> Result<(Rational, Rational)> {
        let root = aurifeuillian_root(self.n, x)?;
        let c = self.c_poly().eval_rat(x);
        let d = self.d_poly().eval_rat(x);
        let shift = root * d;
        Ok((&c - &shift, c + shift))
    }
}

/// `√(n·x)` when `x = m²n` for a positive rational `m`.
pub fn aurifeuillian_root(n: u64, x: &Rational) -> Result<Rational> {
    let nx = x * Rational::from_integer(n.into());
    let bad = || Error::NotAurifeuillianPoint(nx.to_string());
    if !nx.is_positive() {
        return Err(bad());
    }
    let (num, den) = (nx.numer(), nx.denom());
    let (rn, rd) = (num.sqrt(), den.sqrt());
    if &(&rn * &rn) != num || &(&rd * &rd) != den {
        return Err(bad());
    }
    Ok(Rational::new(rn, rd))
}

/// The integer power-sum parts used by the recurrence:
/// `(n|k)` for odd `k`, `μ(n'/g)·φ(g)·cos((n-1)kπ/4)` for even `k`, `g = gcd(k, n')`.
pub fn lucas_q(n: u64, k: u64) -> i64 {
    if k % 2 == 1 {
        return kronecker(n as i64, k).expect("odd modulus") as i64;
    }
    let n_prime = if n % 4 == 1 { n } else { 2 * n };
    // cos of a multiple of π/2, indexed by the multiple mod 4.
    let cos = match ((n - 1) % 4) * ((k / 2) % 4) % 4 {
        0 => 1,
        2 => -1,
        _ => 0,
    };
    if cos == 0 {
        return 0;
    }
    let g = k.gcd(&n_prime);
    moebius(n_prime / g) as i64 * euler_phi(g) as i64 * cos
}

/// `C_n`, `D_n` with the palindromic shortcut.
pub fn algorithm_l(n: u64) -> Result<LucasPair> {
    algorithm_l_with(n, true)
}

/// `C_n`, `D_n`; with `use_symmetry` only the lower halves come from the
/// recurrence and the rest is mirrored.
pub fn algorithm_l_with(n: u64, use_symmetry: bool) -> Result<LucasPair> {
    let ctx = make_context(n)?;
    let d = ctx.d_lucas as usize;
    let (c_limit, d_limit) = if use_symmetry {
        (d / 2, (d.saturating_sub(1)) / 2)
    } else {
        (d, d.saturating_sub(1))
    };
    let q_count = (2 * c_limit).max(2 * d_limit + 1);
    // q[k] for k = 0..=q_count; index 0 unused.
    let q: Vec<i64> = (0..=q_count as u64)
        .map(|k| if k == 0 { 0 } else { lucas_q(n, k) })
        .collect();
    let nn = BigInt::from(n);

    let mut gamma = vec![BigInt::zero(); d + 1];
    let mut delta = vec![BigInt::zero(); d];
    gamma[0] = 1.into();
    delta[0] = 1.into();

    for k in 1..=c_limit.max(d_limit) {
        if k <= c_limit {
            let mut sum = BigInt::zero();
            for j in 0..k {
                let qo = q[2 * k - 2 * j - 1];
                let qe = q[2 * k - 2 * j];
                if qo != 0 {
                    sum += &nn * qo * &delta[j];
                }
                if qe != 0 {
                    sum -= &gamma[j] * qe;
                }
            }
            gamma[k] = exact_step(n, k, sum, 2 * k as u64)?;
        }
        if k <= d_limit {
            let mut sum = gamma[k].clone();
            for j in 0..k {
                let qo = q[2 * k + 1 - 2 * j];
                let qe = q[2 * k - 2 * j];
                if qo != 0 {
                    sum += &gamma[j] * qo;
                }
                if qe != 0 {
                    sum -= &delta[j] * qe;
                }
            }
            delta[k] = exact_step(n, k, sum, 2 * k as u64 + 1)?;
        }
    }

    if use_symmetry {
        for k in c_limit + 1..=d {
            gamma[k] = gamma[d - k].clone();
        }
        for k in d_limit + 1..d {
            delta[k] = delta[d - 1 - k].clone();
        }
    }

    Ok(LucasPair {
        n,
        n_prime: ctx.n_prime,
        s_prime: ctx.s_prime,
        d,
        gamma,
        delta,
    })
}

/// Checks `F_n = C_n² - n·x·D_n²` exactly.
pub fn verify_lucas(n: u64) -> Result<bool> {
    let pair = algorithm_l(n)?;
    lucas_identity_holds(&pair)
}

pub fn lucas_identity_holds(pair: &LucasPair) -> Result<bool> {
    let c = pair.c_poly();
    let d = pair.d_poly();
    let nx = IntPolynomial::new(vec![BigInt::zero(), BigInt::from(pair.n)]);
    let rhs = &(&c * &c) - &(&nx * &(&d * &d));
    Ok(rhs == f_poly(pair.n)?)
}

/// Aurifeuillian factors `F_n^∓(x) = C_n(x) ∓ √(nx)·D_n(x)` at `x = m²n`,
/// the `-` factor first.
pub fn aurifeuillian_polys_eval(n: u64, x: &Rational) -> Result<(Rational, Rational)> {
    aurifeuillian_root(n, x)?;
    algorithm_l(n)?.eval_factors(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numthy::is_squarefree;
    use crate::poly::Symmetry;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn squarefree(max: u64) -> impl Iterator<Item = u64> {
        (2..=max).filter(|&n| is_squarefree(n))
    }

    #[test]
    fn q_values_for_15() {
        assert_eq!(lucas_q(15, 1), 1);
        assert_eq!(lucas_q(15, 2), -1);
        assert_eq!(lucas_q(15, 3), 0);
        assert_eq!(lucas_q(15, 4), 1);
    }

    #[test]
    fn worked_example_15() {
        let l = algorithm_l(15).unwrap();
        assert_eq!(l.d, 4);
        assert_eq!(l.gamma[1], 8.into());
        assert_eq!(l.delta[1], 3.into());
        assert_eq!(l.gamma[2], 13.into());
        assert_eq!(l.c_poly(), p(&[1, 8, 13, 8, 1]));
        assert_eq!(l.d_poly(), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn listed_examples() {
        let l = algorithm_l(14).unwrap();
        assert_eq!(l.c_poly(), p(&[1, 7, 3, -7, 3, 7, 1]));
        assert_eq!(l.d_poly(), p(&[1, 2, -1, -1, 2, 1]));
        let l = algorithm_l(2).unwrap();
        assert_eq!(l.c_poly(), p(&[1, 1]));
        assert_eq!(l.d_poly(), p(&[1]));
        let l = algorithm_l(7).unwrap();
        assert_eq!(l.c_poly(), p(&[1, 3, 3, 1]));
        assert_eq!(l.d_poly(), p(&[1, 1, 1]));
        let l = algorithm_l(5).unwrap();
        assert_eq!(l.c_poly(), p(&[1, 3, 1]));
        assert_eq!(l.d_poly(), p(&[1, 1]));
    }

    #[test]
    fn rejects_bad_n() {
        assert_eq!(algorithm_l(12), Err(Error::NotSquareFree(12)));
        assert_eq!(algorithm_l(1), Err(Error::NTooSmall { n: 1, min: 2 }));
    }

    #[test]
    fn identity_examples() {
        assert!(verify_lucas(15).unwrap());
        assert!(verify_lucas(2).unwrap());
        assert!(verify_lucas(179).unwrap());
    }

    #[test]
    fn shortcut_matches_full_recurrence() {
        for n in squarefree(301) {
            assert_eq!(
                algorithm_l_with(n, true).unwrap(),
                algorithm_l_with(n, false).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn palindromic_and_monic() {
        for n in squarefree(301) {
            let l = algorithm_l(n).unwrap();
            let (c, d) = (l.c_poly(), l.d_poly());
            assert_eq!(c.degree(), Some(l.d));
            assert_eq!(d.degree(), Some(l.d - 1));
            assert!(c.is_monic() && d.is_monic());
            assert_eq!(c.symmetry_class(), Symmetry::Palindromic, "C_{n}");
            assert_eq!(d.symmetry_class(), Symmetry::Palindromic, "D_{n}");
        }
    }

    #[test]
    fn factor_pairs() {
        assert_eq!(
            aurifeuillian_polys_eval(15, &rat(15, 1)).unwrap(),
            (rat(19231, 1), rat(142111, 1))
        );
        assert_eq!(
            aurifeuillian_polys_eval(2, &rat(8, 1)).unwrap(),
            (rat(5, 1), rat(13, 1))
        );
        assert_eq!(
            aurifeuillian_polys_eval(7, &rat(28, 25)).unwrap(),
            (rat(1247, 15625), rat(296507, 15625))
        );
        assert_eq!(
            aurifeuillian_polys_eval(2, &rat(2, 1)).unwrap(),
            (rat(1, 1), rat(5, 1))
        );
    }

    #[test]
    fn rejects_non_square_points() {
        for x in [rat(3, 1), rat(0, 1), rat(-15, 1), rat(15, 2)] {
            assert!(matches!(
                aurifeuillian_polys_eval(15, &x),
                Err(Error::NotAurifeuillianPoint(_))
            ));
        }
    }

    #[test]
    fn factor_product_is_f_value() {
        for n in squarefree(60) {
            let l = algorithm_l(n).unwrap();
            let f = f_poly(n).unwrap();
            for (mp, mq) in [(1, 1), (2, 1), (3, 2), (1, 3), (5, 7)] {
                let m = rat(mp, mq);
                let x = &m * &m * Rational::from_integer(n.into());
                let (lo, hi) = l.eval_factors(&x).unwrap();
                assert_eq!(&lo * &hi, f.eval_rat(&x), "n = {n}, m = {m}");
                assert!(lo.is_positive() && lo <= hi, "n = {n}, m = {m}");
            }
        }
    }
}
