//! Cyclotomic polynomials `Φ_n` and the modified polynomials `F_n`.
//!
//! `Φ_n` can be built three independent ways: the Möbius product over
//! divisors, the prime recursion for square-free `n`, and Newton's identities
//! fed with Ramanujan sums. All three stay in `Z[x]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numthy::{divisors, euler_phi, factorize, is_squarefree, make_context, moebius};
use crate::poly::IntPolynomial;

/// Power sums `p_1, p_2, …, p_K` of the roots of some polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PowerSums(Vec<BigInt>);

impl PowerSums {
    /// `values[0]` is `p_1`.
    pub fn new(values: Vec<BigInt>) -> Self {
        PowerSums(values)
    }

    pub fn from_i64s(values: &[i64]) -> Self {
        PowerSums(values.iter().map(|&v| v.into()).collect())
    }

    /// `p_k` for `k >= 1`.
    pub fn get(&self, k: usize) -> Option<&BigInt> {
        k.checked_sub(1).and_then(|i| self.0.get(i))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[BigInt] {
        &self.0
    }
}

/// `Φ_n = ∏_{d|n} (x^d - 1)^{μ(n/d)}`, with one exact division at the end.
pub fn phi_moebius(n: u64) -> IntPolynomial {
    assert!(n >= 1, "phi_moebius: n must be positive");
    let mut num = IntPolynomial::one();
    let mut den = IntPolynomial::one();
    for d in divisors(n) {
        match moebius(n / d) {
            1 => num = &num * &IntPolynomial::x_pow_minus_one(d as usize),
            -1 => den = &den * &IntPolynomial::x_pow_minus_one(d as usize),
            _ => {}
        }
    }
    num.exact_div(&den)
        .expect("cyclotomic product is always divisible by its denominator")
}

/// `Φ_n` for square-free `n` via `Φ_n(x) = Φ_{n/p}(x^p) / Φ_{n/p}(x)`.
pub fn phi_recursive(n: u64) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::NTooSmall { n, min: 1 });
    }
    if !is_squarefree(n) {
        return Err(Error::NotSquareFree(n));
    }
    let mut phi = IntPolynomial::from_i64s(&[-1, 1]);
    for (p, _) in factorize(n) {
        let lifted = phi.compose_power(p as usize);
        phi = lifted.exact_div(&phi)?;
    }
    Ok(phi)
}

/// Sum of the `k`-th powers of the primitive `n`-th roots of unity,
/// `μ(n/g)·φ(n)/φ(n/g)` with `g = gcd(k, n)`.
pub fn ramanujan_sum(n: u64, k: u64) -> i64 {
    assert!(
        n >= 1 && k >= 1,
        "ramanujan_sum: arguments must be positive"
    );
    let g = k.gcd(&n);
    let m = n / g;
    moebius(m) as i64 * (euler_phi(n) / euler_phi(m)) as i64
}

/// Ramanujan's `c_n(k)`; same value as [`ramanujan_sum`].
pub fn c_n(n: u64, k: u64) -> i64 {
    ramanujan_sum(n, k)
}

/// Power sums of the roots of `Φ_n`, `p_1..=p_count`.
pub fn cyclotomic_power_sums(n: u64, count: usize) -> PowerSums {
    PowerSums(
        (1..=count as u64)
            .map(|k| ramanujan_sum(n, k).into())
            .collect(),
    )
}

/// Monic degree-`d` polynomial whose roots have the given power sums.
///
/// Runs `k·a_k = -Σ_{j<k} p_{k-j}·a_j` and insists every division by `k` is exact.
pub fn newton_from_power_sums(p: &PowerSums, d: usize) -> Result<IntPolynomial> {
    if p.len() < d {
        return Err(Error::MissingPowerSums {
            needed: d,
            available: p.len(),
        });
    }
    let mut a: Vec<BigInt> = Vec::with_capacity(d + 1);
    a.push(1.into());
    for k in 1..=d {
        let sum: BigInt = (0..k).map(|j| &p.0[k - j - 1] * &a[j]).sum();
        let (q, r) = (-sum.clone()).div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(Error::NonIntegerCoefficient { k, sum: -sum });
        }
        a.push(q);
    }
    Ok(IntPolynomial::from_descending(a))
}

/// `Φ_n` by Newton's identities from Ramanujan sums.
pub fn phi_newton(n: u64) -> Result<IntPolynomial> {
    let d = euler_phi(n) as usize;
    newton_from_power_sums(&cyclotomic_power_sums(n, d), d)
}

/// `F_n(x)`: `Φ_n(s·x)` for odd `n`, `(-1)^{φ(n/2)}·Φ_{n/2}(-x²)` for even `n`.
pub fn f_poly(n: u64) -> Result<IntPolynomial> {
    let ctx = make_context(n)?;
    if ctx.is_odd() {
        let phi = phi_moebius(n);
        Ok(if ctx.s < 0 { phi.negate_arg() } else { phi })
    } else {
        let half = n / 2;
        let f = phi_moebius(half).negate_arg().compose_power(2);
        Ok(if euler_phi(half) % 2 == 1 { -f } else { f })
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r > 1.0 {
        Ok(())
    } else {
        Err(Error::BadRadius(r))
    }
}

/// `R^{φ(n)}·exp(1/(R-1))`, the bound on `|Φ_n(x)|` on the circle `|x| = R`.
pub fn phi_bound(n: u64, r: f64) -> Result<f64> {
    check_radius(r)?;
    Ok(r.powf(euler_phi(n) as f64) * (1.0 / (r - 1.0)).exp())
}

/// `R^{φ(2n)}·exp(1/(R-1))`, the bound on `|F_n(x)|` on the circle `|x| = R`.
pub fn fn_bound(n: u64, r: f64) -> Result<f64> {
    check_radius(r)?;
    Ok(r.powf(euler_phi(2 * n) as f64) * (1.0 / (r - 1.0)).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numthy::make_context;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    /// Sum of `cos(2πjk/n)` over `j` coprime to `n`; the imaginary parts cancel.
    fn ramanujan_oracle(n: u64, k: u64) -> i64 {
        let s: f64 = (1..=n)
            .filter(|j| j.gcd(&n) == 1)
            .map(|j| (2.0 * std::f64::consts::PI * (j * k) as f64 / n as f64).cos())
            .sum();
        s.round() as i64
    }

    #[test]
    fn moebius_route_examples() {
        assert_eq!(phi_moebius(15), p(&[1, -1, 0, 1, -1, 1, 0, -1, 1]));
        assert_eq!(phi_moebius(1), p(&[-1, 1]));
        assert_eq!(phi_moebius(2), p(&[1, 1]));
        assert_eq!(phi_moebius(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn recursive_route_examples() {
        assert_eq!(phi_recursive(15).unwrap(), phi_moebius(15));
        assert_eq!(phi_recursive(7).unwrap(), p(&[1; 7]));
        assert_eq!(phi_recursive(6).unwrap(), p(&[1, -1, 1]));
        assert_eq!(phi_recursive(1).unwrap(), p(&[-1, 1]));
        assert_eq!(phi_recursive(12), Err(Error::NotSquareFree(12)));
    }

    #[test]
    fn ramanujan_values() {
        assert_eq!(ramanujan_sum(15, 1), 1);
        assert_eq!(ramanujan_sum(7, 3), -1);
        assert_eq!(ramanujan_sum(15, 3), -2);
        assert_eq!(c_n(15, 3), -2);
        for n in 2..=40 {
            for k in 1..=2 * n {
                assert_eq!(ramanujan_sum(n, k), ramanujan_oracle(n, k), "c_{n}({k})");
            }
        }
    }

    #[test]
    fn newton_examples() {
        assert_eq!(phi_newton(15).unwrap(), phi_moebius(15));
        let five = newton_from_power_sums(&PowerSums::from_i64s(&[-1, -1, -1, -1]), 4).unwrap();
        assert_eq!(five, p(&[1, 1, 1, 1, 1]));
        let lin = newton_from_power_sums(&PowerSums::from_i64s(&[2]), 1).unwrap();
        assert_eq!(lin, p(&[-2, 1]));
    }

    #[test]
    fn newton_errors() {
        // p_1 = 0, p_2 = 1 gives 2·a_2 = -1.
        assert!(matches!(
            newton_from_power_sums(&PowerSums::from_i64s(&[0, 1]), 2),
            Err(Error::NonIntegerCoefficient { k: 2, .. })
        ));
        assert!(matches!(
            newton_from_power_sums(&PowerSums::from_i64s(&[1]), 3),
            Err(Error::MissingPowerSums {
                needed: 3,
                available: 1
            })
        ));
    }

    #[test]
    fn power_sums_bounded() {
        for n in 2..=120u64 {
            let ps = cyclotomic_power_sums(n, 3 * n as usize);
            for (i, v) in ps.values().iter().enumerate() {
                let k = i as u64 + 1;
                assert!(v.magnitude() <= &k.min(n).into(), "p_{k} for n = {n}");
            }
        }
    }

    #[test]
    fn f_poly_examples() {
        assert_eq!(
            f_poly(14).unwrap(),
            p(&[1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1])
        );
        assert_eq!(f_poly(2).unwrap(), p(&[1, 0, 1]));
        assert_eq!(f_poly(15).unwrap(), p(&[1, 1, 0, -1, -1, -1, 0, 1, 1]));
        assert_eq!(f_poly(5).unwrap(), phi_moebius(5));
        assert_eq!(f_poly(9), Err(Error::NotSquareFree(9)));
    }

    #[test]
    fn route_equivalence() {
        for n in (2..=300u64).filter(|&n| is_squarefree(n)) {
            let m = phi_moebius(n);
            assert_eq!(phi_recursive(n).unwrap(), m, "recursive, n = {n}");
            assert_eq!(phi_newton(n).unwrap(), m, "newton, n = {n}");
        }
    }

    #[test]
    fn product_over_divisors() {
        for n in 1..=100u64 {
            let prod = divisors(n)
                .into_iter()
                .fold(IntPolynomial::one(), |acc, d| &acc * &phi_moebius(d));
            assert_eq!(prod, IntPolynomial::x_pow_minus_one(n as usize), "n = {n}");
        }
    }

    #[test]
    fn f_poly_is_phi_of_n_prime() {
        for n in (2..=300u64).filter(|&n| is_squarefree(n)) {
            let ctx = make_context(n).unwrap();
            let f = f_poly(n).unwrap();
            assert_eq!(f, phi_moebius(ctx.n_prime), "n = {n}");
            assert_eq!(f.degree(), Some(euler_phi(2 * n) as usize));
            assert!(f.is_monic());
        }
    }

    #[test]
    fn degrees() {
        for n in 1..=200u64 {
            let phi = phi_moebius(n);
            assert_eq!(phi.degree(), Some(euler_phi(n) as usize));
            assert!(phi.is_monic());
        }
    }

    #[test]
    fn bounds() {
        assert!((phi_bound(2, 5.0).unwrap() - 5.0 * 0.25f64.exp()).abs() < 1e-12);
        assert!((phi_bound(2, 5.0).unwrap() - 6.420).abs() < 1e-3);
        assert!((phi_bound(15, 2.0).unwrap() - 695.88).abs() < 0.01);
        assert!((fn_bound(2, 5.0).unwrap() - 32.10).abs() < 0.01);
        assert_eq!(phi_bound(3, 1.0), Err(Error::BadRadius(1.0)));
        assert!(fn_bound(3, 0.5).is_err());
    }
}
