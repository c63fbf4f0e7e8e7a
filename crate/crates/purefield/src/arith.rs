//! Exact big-integer utilities: p-adic valuations, factorization,
//! perfect-power tests and the Capelli irreducibility criterion.

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{pow, One, Signed, Zero};

/// Canonical factorization of a positive integer: `(prime, exponent)`
/// pairs in strictly increasing prime order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    factors: Vec<(BigUint, u64)>,
}

impl PrimeFactorization {
    pub fn factors(&self) -> &[(BigUint, u64)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Exponent of `p` in the factored value, zero when `p` is absent.
    pub fn exponent_of(&self, p: &BigUint) -> u64 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// Recompose the factored value.
    pub fn value(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (p, e) in &self.factors {
            acc *= pow(p.clone(), *e as usize);
        }
        acc
    }
}

/// Fixed Miller-Rabin witness set. The first twelve primes decide
/// primality exactly for all candidates below 3.3 * 10^24 (in particular
/// for everything that fits in 64 bits); beyond that bound the same set
/// acts as a strong probable-prime test.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Miller-Rabin primality test with the documented witness set.
pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for w in MR_WITNESSES {
        let wb = BigUint::from(w);
        if *n == wb {
            return true;
        }
        if (n % &wb).is_zero() {
            return false;
        }
    }
    // n - 1 = d * 2^r with d odd
    let n_minus_1 = n - 1u32;
    let r = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> r;
    'witness: for w in MR_WITNESSES {
        let mut x = BigUint::from(w).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..r {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    is_prime(&BigUint::from(n))
}

/// p-adic valuation of a nonzero integer: the largest `k` with `p^k | x`.
pub fn padic_valuation(x: &BigInt, p: &BigUint) -> Result<u64> {
    if x.is_zero() {
        return Err(Error::ZeroValuation);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    Ok(valuation_unchecked(x, p))
}

/// Same as [`padic_valuation`] but trusting the caller's primality check.
pub(crate) fn valuation_unchecked(x: &BigInt, p: &BigUint) -> u64 {
    debug_assert!(!x.is_zero());
    let mut m = x.magnitude().clone();
    let mut v = 0u64;
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        m = q;
    }
}

pub(crate) fn valuation_u64(mut x: u64, p: u64) -> u64 {
    debug_assert!(x != 0);
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

/// Valuation of `m!` at `p` by the finite sum of floor(m / p^j).
pub fn factorial_valuation(m: u64, p: u64) -> Result<u64> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(BigUint::from(p)));
    }
    let mut acc = 0u64;
    let mut pk = p;
    while pk <= m {
        acc += m / pk;
        match pk.checked_mul(p) {
            Some(next) => pk = next,
            None => break,
        }
    }
    Ok(acc)
}

/// Valuation of the binomial coefficient `C(p^s, u)` at `p`, namely
/// `s - v_p(u)`, for `1 <= u <= p^s`.
pub fn binomial_valuation(p: u64, s: u32, u: u64) -> Result<u64> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(BigUint::from(p)));
    }
    let ps = (p as u128).checked_pow(s);
    let in_range = u >= 1 && ps.is_none_or(|ps| (u as u128) <= ps);
    if !in_range {
        return Err(Error::BinomialOutOfRange { s, u });
    }
    Ok(s as u64 - valuation_u64(u, p))
}

/// Factor a positive integer: trial division up to 10^6, then Pollard rho
/// splitting with Miller-Rabin certificates. `factorize(1)` is the empty
/// factorization.
pub fn factorize(m: &BigUint) -> Result<PrimeFactorization> {
    if m.is_zero() {
        return Err(Error::NonPositive);
    }
    let mut factors: Vec<(BigUint, u64)> = Vec::new();
    let mut push = |p: BigUint, e: u64| {
        factors.push((p, e));
    };
    let mut rest = m.clone();
    let mut d = 2u64;
    while d <= 1_000_000 {
        if rest.is_one() {
            break;
        }
        let db = BigUint::from(d);
        if &db * &db > rest {
            break;
        }
        let mut e = 0u64;
        loop {
            let (q, r) = rest.div_rem(&db);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            push(db, e);
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    if !rest.is_one() {
        // Whatever remains has no factor below 10^6; split it with rho.
        let mut large: Vec<(BigUint, u64)> = Vec::new();
        let mut stack = vec![rest];
        while let Some(x) = stack.pop() {
            if x.is_one() {
                continue;
            }
            if is_prime(&x) {
                match large.iter_mut().find(|(p, _)| *p == x) {
                    Some((_, e)) => *e += 1,
                    None => large.push((x, 1)),
                }
                continue;
            }
            let f = pollard_rho(&x);
            let q = &x / &f;
            stack.push(f);
            stack.push(q);
        }
        large.sort_by(|a, b| a.0.cmp(&b.0));
        for (p, e) in large {
            push(p, e);
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(PrimeFactorization { factors })
}

/// Find one nontrivial factor of an odd composite with no small factors.
fn pollard_rho(n: &BigUint) -> BigUint {
    let mut c = 1u64;
    loop {
        let cb = BigUint::from(c);
        let step = |x: &BigUint| (x * x + &cb) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        loop {
            x = step(&x);
            y = step(&step(&y));
            if x == y {
                break; // cycle without a factor; retry with a new constant
            }
            let diff = if x > y { &x - &y } else { &y - &x };
            let g = diff.gcd(n);
            if !g.is_one() {
                if g != *n {
                    return g;
                }
                break;
            }
        }
        c += 1;
    }
}

/// Largest `k` with `a^(p-1) = 1 (mod p^k)` for `p` not dividing `a`,
/// computed against growing prime-power moduli so `a^(p-1)` is never
/// expanded in full.
pub fn unit_power_valuation(a: &BigInt, p: &BigUint) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    let p_int = BigInt::from(p.clone());
    if a.mod_floor(&p_int).is_zero() {
        return Err(Error::PrimeDividesBase(p.clone()));
    }
    if a.is_one() {
        return Err(Error::InfiniteValuation);
    }
    if *a == BigInt::from(-1) {
        // (-1)^(p-1) is 1 for odd p; for p = 2 we get v_2(-2) = 1.
        return if *p == BigUint::from(2u32) {
            Ok(1)
        } else {
            Err(Error::InfiniteValuation)
        };
    }
    let exponent = p - 1u32;
    let congruent_to_one = |k: u64| -> bool {
        let modulus = pow(p.clone(), k as usize);
        let base = a
            .mod_floor(&BigInt::from(modulus.clone()))
            .to_biguint()
            .expect("floor residue is non-negative");
        base.modpow(&exponent, &modulus).is_one()
    };
    debug_assert!(congruent_to_one(1)); // Fermat
    let mut good = 1u64;
    let mut k = 2u64;
    while congruent_to_one(k) {
        good = k;
        k *= 2;
    }
    let (mut lo, mut hi) = (good, k - 1);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if congruent_to_one(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Ok(lo)
}

/// Floor of the k-th root of `m`, by binary search.
pub fn integer_kth_root(m: &BigUint, k: u64) -> BigUint {
    assert!(k >= 1);
    if m.is_zero() || k == 1 {
        return m.clone();
    }
    let k = k.min(m.bits()) as usize; // beyond this the root is 1
    let mut lo = BigUint::zero();
    let mut hi = BigUint::one() << (m.bits() / k as u64 + 1);
    while lo < hi {
        let mid: BigUint = (&lo + &hi + 1u32) >> 1;
        if pow(mid.clone(), k) <= *m {
            lo = mid;
        } else {
            hi = mid - 1u32;
        }
    }
    lo
}

fn is_perfect_kth_power(a: &BigInt, k: u64) -> bool {
    if k == 1 {
        return true;
    }
    if a.is_negative() && k.is_multiple_of(2) {
        return false;
    }
    let m = a.magnitude();
    if m.is_one() {
        return true;
    }
    let root = integer_kth_root(m, k);
    pow(root, k as usize) == *m
}

fn is_minus_four_times_fourth_power(a: &BigInt) -> bool {
    if !a.is_negative() {
        return false;
    }
    let m = a.magnitude();
    let four = BigUint::from(4u32);
    let (q, r) = m.div_rem(&four);
    if !r.is_zero() {
        return false;
    }
    let root = integer_kth_root(&q, 4);
    pow(root, 4) == q
}

/// Capelli's criterion: `x^n - a` is irreducible over the rationals iff
/// `a` is not a perfect p-th power for any prime `p | n`, and additionally
/// `a` is not of the form `-4c^4` when `4 | n`.
pub fn capelli_irreducible(n: u64, a: &BigInt) -> bool {
    if n == 0 || a.is_zero() {
        return false;
    }
    if n == 1 {
        return true;
    }
    let nf = factorize(&BigUint::from(n)).expect("n >= 2");
    for (p, _) in nf.factors() {
        let k = u64::try_from(p).expect("prime divisor of a u64 fits in u64");
        if is_perfect_kth_power(a, k) {
            return false;
        }
    }
    if n.is_multiple_of(4) && is_minus_four_times_fourth_power(a) {
        return false;
    }
    true
}
