//! Elementary arithmetic functions and the per-`n` context shared by the
//! Gauss and Lucas constructions.
//!
//! Everything here works on machine integers with trial-division
//! factorization; the values of `n` involved are small.

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Default bound on `v` for [`fundamental_unit_search`].
pub const DEFAULT_PELL_CAP: u64 = 1_000_000;

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    matches!(factorize(n).as_slice(), [(_, 1)])
}

/// Möbius function.
pub fn moebius(n: u64) -> i8 {
    assert!(n >= 1, "moebius: n must be positive");
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi: n must be positive");
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn is_squarefree(n: u64) -> bool {
    assert!(n >= 1, "is_squarefree: n must be positive");
    factorize(n).iter().all(|&(_, e)| e == 1)
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Jacobi symbol `(m|k)` for odd `k >= 1`; zero whenever `gcd(m, k) > 1`.
fn jacobi(m: i64, k: u64) -> i8 {
    debug_assert!(k % 2 == 1);
    let mut a = (m as i128).rem_euclid(k as i128) as u64;
    let mut n = k;
    let mut result = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// The symbol `(m|k)`: the Jacobi symbol, zero when `gcd(m, k) > 1`, and
/// extended to even `k` by the Kronecker rule `(m|2) = (2|m)` for odd `m`.
///
/// Pairs with `k = 0` or with both arguments even are rejected.
pub fn kronecker(m: i64, k: u64) -> Result<i8> {
    if k == 0 || (k % 2 == 0 && m % 2 == 0) {
        return Err(Error::InvalidSymbolArguments { m, k });
    }
    let twos = k.trailing_zeros();
    let odd = k >> twos;
    let mut value = jacobi(m, odd);
    if twos % 2 == 1 {
        let r = m.rem_euclid(8);
        if r == 3 || r == 5 {
            value = -value;
        }
    }
    Ok(value)
}

fn require_squarefree(n: u64, min: u64) -> Result<()> {
    if n < min {
        return Err(Error::NTooSmall { n, min });
    }
    if !is_squarefree(n) {
        return Err(Error::NotSquareFree(n));
    }
    Ok(())
}

/// Quantities derived from a square-free `n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NumTheoryContext {
    pub n: u64,
    /// `n` if `n ≡ 1 (mod 4)`, otherwise `2n`.
    pub n_prime: u64,
    /// `-1` iff `n ≡ 3 (mod 4)`.
    pub s: i8,
    /// `-1` iff `n ≡ 5 (mod 8)`.
    pub s_prime: i8,
    /// `φ(n)/2`, the degree of `A_n`; only meaningful for odd `n`.
    pub d_gauss: Option<u64>,
    /// `φ(n')/2`, the degree of `C_n`.
    pub d_lucas: u64,
    /// `φ(2n)/2`, the truncation length of the rounding estimate.
    pub lambda: u64,
    /// `s·n` for odd `n`.
    pub discriminant: Option<i64>,
    pub squarefree: bool,
}

impl NumTheoryContext {
    pub fn is_odd(&self) -> bool {
        self.n % 2 == 1
    }
}

pub fn make_context(n: u64) -> Result<NumTheoryContext> {
    require_squarefree(n, 2)?;
    let n_prime = if n % 4 == 1 { n } else { 2 * n };
    let s = if n % 4 == 3 { -1 } else { 1 };
    let s_prime = if n % 8 == 5 { -1 } else { 1 };
    let odd = n % 2 == 1;
    Ok(NumTheoryContext {
        n,
        n_prime,
        s,
        s_prime,
        d_gauss: odd.then(|| euler_phi(n) / 2),
        d_lucas: euler_phi(n_prime) / 2,
        lambda: euler_phi(2 * n) / 2,
        discriminant: odd.then(|| s as i64 * n as i64),
        squarefree: true,
    })
}

/// Class number data for the imaginary quadratic field of discriminant `-n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassNumberData {
    pub n: u64,
    /// `Σ_{j=1}^{n-1} (j|n)·j`.
    pub sigma: i64,
    pub h: u64,
    /// Number of roots of unity in the field.
    pub w: u64,
}

/// `h(-n)` for square-free `n ≡ 3 (mod 4)` from the character sum
/// `σ = Σ (j|n) j`, using `σ = -n·h·2/w`.
///
/// `n = 3` is the one case with `w = 6`; there `σ = -1` is not a multiple of `n`.
pub fn class_number_neg(n: u64) -> Result<ClassNumberData> {
    require_squarefree(n, 3)?;
    if n % 4 != 3 {
        return Err(Error::BadResidueClass { n, expected: 3 });
    }
    let sigma: i64 = (1..n).map(|j| jacobi(j as i64, n) as i64 * j as i64).sum();
    if n == 3 {
        return Ok(ClassNumberData {
            n,
            sigma,
            h: 1,
            w: 6,
        });
    }
    let n_signed = n as i64;
    if sigma % n_signed != 0 || sigma >= 0 {
        return Err(Error::InternalInconsistency(format!(
            "character sum {sigma} is not a negative multiple of {n}"
        )));
    }
    Ok(ClassNumberData {
        n,
        sigma,
        h: (-sigma / n_signed) as u64,
        w: 2,
    })
}

/// Minimal solution of `u² - n·v² = 4`, giving the fundamental unit `(u + v√n)/2`
/// of norm +1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellUnit {
    pub n: u64,
    pub u: BigUint,
    pub v: BigUint,
}

fn check_pell_input(n: u64) -> Result<()> {
    require_squarefree(n, 2)?;
    if n % 4 != 1 {
        return Err(Error::BadResidueClass { n, expected: 1 });
    }
    Ok(())
}

/// Smallest `v >= 1` with `4 + n·v²` a perfect square, read off the continued
/// fraction of `(1 + √n)/2`.
///
/// The first convergent `p/q` with `p² - pq + q²(1-n)/4 = ±1` gives the
/// smallest unit `((2p - q) + q√n)/2`; a unit of norm -1 is squared.
pub fn fundamental_unit(n: u64) -> Result<PellUnit> {
    check_pell_input(n)?;
    let nn = BigInt::from(n);
    let root = nn.sqrt();
    let (mut p_num, mut q_den) = (BigInt::one(), BigInt::from(2));
    let (mut p_prev, mut p_cur) = (BigInt::zero(), BigInt::one());
    let (mut q_prev, mut q_cur) = (BigInt::one(), BigInt::zero());
    let quarter = (&nn - 1u32) / 4u32;
    loop {
        let a = (&p_num + &root) / &q_den;
        let p_next = &a * &p_cur + &p_prev;
        let q_next = &a * &q_cur + &q_prev;
        p_prev = std::mem::replace(&mut p_cur, p_next);
        q_prev = std::mem::replace(&mut q_cur, q_next);

        let norm = &p_cur * &p_cur - &p_cur * &q_cur - &q_cur * &q_cur * &quarter;
        if norm.abs().is_one() {
            let mut u = BigInt::from(2) * &p_cur - &q_cur;
            let mut v = q_cur.clone();
            if norm.is_negative() {
                let u2 = (&u * &u + &nn * &v * &v) / 2u32;
                v = &u * &v;
                u = u2;
            }
            return Ok(PellUnit {
                n,
                u: u.to_biguint().expect("positive"),
                v: v.to_biguint().expect("positive"),
            });
        }
        p_num = &a * &q_den - &p_num;
        q_den = (&nn - &p_num * &p_num) / &q_den;
    }
}

/// The same solution by trying `v = 1, 2, …, cap` in turn.
pub fn fundamental_unit_search(n: u64, cap: u64) -> Result<PellUnit> {
    check_pell_input(n)?;
    let nn = n as u128;
    for v in 1..=cap as u128 {
        let target = 4 + nn * v * v;
        let u = target.sqrt();
        if u * u == target {
            return Ok(PellUnit {
                n,
                u: u.into(),
                v: v.into(),
            });
        }
    }
    Err(Error::SearchCapExceeded { n, cap })
}
