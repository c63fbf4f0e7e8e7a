//! Closed-form evaluation for pure fields Q(n-th root of a): validation of
//! the defining data, the field discriminant, the index of the power
//! generator, and the monogenicity test.

use crate::arith::{
    capelli_irreducible, factorize, unit_power_valuation, PrimeFactorization,
};
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{pow, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A signed integer kept in factored form: a sign and a map from primes to
/// positive exponents. Rendering the decimal value is on demand only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    sign: i8,
    factors: BTreeMap<BigUint, u64>,
}

impl FactoredInteger {
    pub fn one() -> Self {
        FactoredInteger {
            sign: 1,
            factors: BTreeMap::new(),
        }
    }

    pub fn from_parts<I>(sign: i8, factors: I) -> Self
    where
        I: IntoIterator<Item = (BigUint, u64)>,
    {
        assert!(sign == 1 || sign == -1);
        let mut out = FactoredInteger {
            sign,
            factors: BTreeMap::new(),
        };
        for (p, e) in factors {
            out.multiply_in(p, e);
        }
        out
    }

    fn multiply_in(&mut self, p: BigUint, e: u64) {
        if e > 0 {
            *self.factors.entry(p).or_insert(0) += e;
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// `(prime, exponent)` pairs in increasing prime order.
    pub fn factors(&self) -> impl Iterator<Item = (&BigUint, u64)> {
        self.factors.iter().map(|(p, e)| (p, *e))
    }

    pub fn exponent_of(&self, p: &BigUint) -> u64 {
        self.factors.get(p).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.sign == 1 && self.factors.is_empty()
    }

    /// Exact signed value.
    pub fn to_bigint(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (p, e) in &self.factors {
            acc *= pow(BigInt::from(p.clone()), *e as usize);
        }
        if self.sign < 0 {
            acc = -acc;
        }
        acc
    }

    pub fn magnitude(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (p, e) in &self.factors {
            acc *= pow(p.clone(), *e as usize);
        }
        acc
    }

    /// Factor string without the sign, e.g. `2^2 * 3^3`, or `1` when empty.
    pub fn unsigned_string(&self) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|(p, e)| format!("{}^{}", p, e))
            .collect::<Vec<_>>()
            .join(" * ")
    }

    /// Compact form suitable for CSV cells, e.g. `-2^24*3^7`.
    pub fn compact_string(&self) -> String {
        let body = if self.factors.is_empty() {
            "1".to_string()
        } else {
            self.factors
                .iter()
                .map(|(p, e)| format!("{}^{}", p, e))
                .collect::<Vec<_>>()
                .join("*")
        };
        if self.sign < 0 {
            format!("-{}", body)
        } else {
            body
        }
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}",
            if self.sign < 0 { "-" } else { "+" },
            self.unsigned_string()
        )
    }
}

/// Per-prime data for a prime dividing the degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreePrimeData {
    pub prime: u64,
    /// Exponent of the prime in the degree.
    pub exponent: u32,
    /// Degree divided by the full prime power.
    pub cofactor: u64,
    /// `v_p(a^(p-1) - 1) - 1`, i.e. the valuation of the Fermat quotient
    /// of `a` at `p`; fixed at -1 when `p` divides `a`.
    pub fermat_quotient_valuation: i64,
}

/// Per-prime data for a prime dividing the radicand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicandPrimeData {
    pub prime: BigUint,
    /// Exponent of the prime in `|a|`.
    pub multiplicity: u64,
    /// `gcd(degree, multiplicity)`.
    pub degree_gcd: u64,
}

/// A pair `(n, a)` that passed irreducibility and the per-prime hypothesis
/// checks, with all derived per-prime data cached. Construction is the only
/// way to obtain one, so every formula below may assume the hypotheses.
#[derive(Debug, Clone)]
pub struct ValidatedPureField {
    degree: u64,
    radicand: BigInt,
    degree_factors: PrimeFactorization,
    radicand_factors: PrimeFactorization,
    degree_primes: Vec<DegreePrimeData>,
    radicand_primes: Vec<RadicandPrimeData>,
}

impl ValidatedPureField {
    /// Validate `(n, a)`: `x^n - a` must be irreducible and for every prime
    /// `p | n` either `p` does not divide `a` or `v_p(a)` is coprime to `p`.
    pub fn new(degree: u64, radicand: BigInt) -> Result<Self> {
        if degree < 2 {
            return Err(Error::InvalidDegree(degree));
        }
        if degree > u32::MAX as u64 {
            return Err(Error::DegreeTooLarge(degree));
        }
        if radicand.is_zero() {
            return Err(Error::ZeroRadicand);
        }
        if !capelli_irreducible(degree, &radicand) {
            return Err(Error::Reducible);
        }
        let degree_factors = factorize(&BigUint::from(degree))?;
        let radicand_factors = factorize(radicand.magnitude())?;

        let mut degree_primes = Vec::with_capacity(degree_factors.factors().len());
        for (p, s) in degree_factors.factors() {
            let p64 = u64::try_from(p).expect("degree prime fits in u64");
            let s = u32::try_from(*s).expect("degree exponent fits in u32");
            let multiplicity = radicand_factors.exponent_of(p);
            if multiplicity > 0 && multiplicity.is_multiple_of(p64) {
                return Err(Error::HypothesisViolation { prime: p64 });
            }
            let cofactor = degree / p64.pow(s);
            let fermat_quotient_valuation = if multiplicity > 0 {
                -1
            } else {
                unit_power_valuation(&radicand, p)? as i64 - 1
            };
            degree_primes.push(DegreePrimeData {
                prime: p64,
                exponent: s,
                cofactor,
                fermat_quotient_valuation,
            });
        }

        let mut radicand_primes = Vec::with_capacity(radicand_factors.factors().len());
        for (q, t) in radicand_factors.factors() {
            let degree_gcd = gcd_u64_big(degree, *t);
            // Hypothesis consequence: q never divides gcd(n, t).
            debug_assert!(!(BigUint::from(degree_gcd) % q).is_zero());
            radicand_primes.push(RadicandPrimeData {
                prime: q.clone(),
                multiplicity: *t,
                degree_gcd,
            });
        }

        Ok(ValidatedPureField {
            degree,
            radicand,
            degree_factors,
            radicand_factors,
            degree_primes,
            radicand_primes,
        })
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn degree_factors(&self) -> &PrimeFactorization {
        &self.degree_factors
    }

    pub fn radicand_factors(&self) -> &PrimeFactorization {
        &self.radicand_factors
    }

    pub fn degree_primes(&self) -> &[DegreePrimeData] {
        &self.degree_primes
    }

    pub fn radicand_primes(&self) -> &[RadicandPrimeData] {
        &self.radicand_primes
    }

    /// Sign of the discriminant: `(-1)^((n-1)(n-2)/2) * sgn(a^(n-1))`.
    pub fn discriminant_sign(&self) -> i8 {
        let mut sign = half_shifted_parity_sign(self.degree);
        if self.radicand.is_negative() && self.degree.is_multiple_of(2) {
            sign = -sign;
        }
        sign
    }

    /// Field discriminant in factored form. Primes dividing the degree
    /// contribute `n*s - 2*cofactor*sum(p^(s-j))` (or `n*s` when the Fermat
    /// quotient valuation is not positive); primes dividing the radicand
    /// add `n - gcd(n, t)`; shared primes accumulate both.
    pub fn discriminant(&self) -> FactoredInteger {
        let n = self.degree;
        let mut out = FactoredInteger {
            sign: self.discriminant_sign(),
            factors: BTreeMap::new(),
        };
        for dp in &self.degree_primes {
            let base = n
                .checked_mul(dp.exponent as u64)
                .expect("n*s fits in u64 for degrees below 2^32");
            let v = if dp.fermat_quotient_valuation > 0 {
                let capped = (dp.fermat_quotient_valuation as u64).min(dp.exponent as u64) as u32;
                base - 2 * dp.cofactor * truncated_power_sum(dp.prime, dp.exponent, capped)
            } else {
                base
            };
            out.multiply_in(BigUint::from(dp.prime), v);
        }
        for rp in &self.radicand_primes {
            out.multiply_in(rp.prime.clone(), n - rp.degree_gcd);
        }
        out
    }

    /// Index of the power basis `1, theta, ..., theta^(n-1)` inside the
    /// ring of integers, in factored form.
    pub fn power_basis_index(&self) -> FactoredInteger {
        let mut out = FactoredInteger::one();
        for dp in &self.degree_primes {
            if dp.fermat_quotient_valuation >= 0 {
                let u = degree_index_valuation(
                    dp.prime,
                    dp.exponent,
                    dp.cofactor,
                    dp.fermat_quotient_valuation,
                );
                out.multiply_in(BigUint::from(dp.prime), u);
            }
        }
        for rp in &self.radicand_primes {
            let w = radicand_index_valuation(self.degree, rp.multiplicity, rp.degree_gcd)
                .expect("gcd argument is exact, so the count is integral");
            out.multiply_in(rp.prime.clone(), w);
        }
        out
    }

    /// Monogenicity: the power basis is an integral basis iff the radicand
    /// is squarefree and no prime `p | n` has `p^2 | a^(p-1) - 1`. On
    /// failure the witness names an offending prime.
    pub fn is_monogenic(&self) -> (bool, Option<MonogenicObstruction>) {
        for rp in &self.radicand_primes {
            if rp.multiplicity >= 2 {
                return (
                    false,
                    Some(MonogenicObstruction::NotSquarefree {
                        prime: rp.prime.clone(),
                    }),
                );
            }
        }
        for dp in &self.degree_primes {
            if dp.fermat_quotient_valuation > 0 {
                return (
                    false,
                    Some(MonogenicObstruction::FermatQuotient { prime: dp.prime }),
                );
            }
        }
        (true, None)
    }
}

/// Why a field fails to be monogenic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonogenicObstruction {
    /// The radicand has a repeated prime factor.
    NotSquarefree { prime: BigUint },
    /// `p^2` divides `a^(p-1) - 1` for a prime `p` dividing the degree.
    FermatQuotient { prime: u64 },
}

impl fmt::Display for MonogenicObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonogenicObstruction::NotSquarefree { prime } => {
                write!(f, "a not squarefree (q = {})", prime)
            }
            MonogenicObstruction::FermatQuotient { prime } => write!(f, "p = {}", prime),
        }
    }
}

/// Decide monogenicity of `Q(n-th root of a)` for any irreducible
/// `x^n - a`. Unlike the discriminant formulas this needs no per-prime
/// hypothesis: a hypothesis violation already implies the radicand is not
/// squarefree, which settles the answer.
pub fn monogenicity(degree: u64, radicand: &BigInt) -> Result<(bool, Option<MonogenicObstruction>)> {
    match ValidatedPureField::new(degree, radicand.clone()) {
        Ok(field) => Ok(field.is_monogenic()),
        Err(Error::HypothesisViolation { prime }) => Ok((
            false,
            Some(MonogenicObstruction::NotSquarefree {
                prime: BigUint::from(prime),
            }),
        )),
        Err(e) => Err(e),
    }
}

/// `sum_{j=1..=cap} p^(s-j)` for `cap <= s`.
fn truncated_power_sum(p: u64, s: u32, cap: u32) -> u64 {
    let mut acc: u128 = 0;
    for j in 1..=cap {
        acc += (p as u128).pow(s - j);
    }
    u64::try_from(acc).expect("power sum bounded by p^s")
}

fn gcd_u64_big(n: u64, t: u64) -> u64 {
    n.gcd(&t)
}

/// Parity sign `(-1)^((n-1)(n-2)/2)`.
fn half_shifted_parity_sign(n: u64) -> i8 {
    let product = (n as u128 - 1) * (n as u128 - 2) / 2;
    if product.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Index valuation at a prime `q` dividing the radicand with multiplicity
/// `t`: `[(n-1)(t-1) + m - 1] / 2` where `m = gcd(n, t)`.
pub fn radicand_index_valuation(degree: u64, multiplicity: u64, degree_gcd: u64) -> Result<u64> {
    let numerator =
        (degree as u128 - 1) * (multiplicity as u128 - 1) + degree_gcd as u128 - 1;
    if !numerator.is_multiple_of(2) {
        return Err(Error::NonIntegralIndex {
            degree,
            multiplicity,
            gcd: degree_gcd,
        });
    }
    Ok(u64::try_from(numerator / 2).expect("index valuation fits in u64"))
}

/// Index valuation at a prime `p` dividing the degree with `p` not
/// dividing the radicand: `cofactor * sum_{j=1..=min(r,s)} p^(s-j)` when
/// the Fermat quotient valuation `r` is positive, else zero.
pub fn degree_index_valuation(
    prime: u64,
    exponent: u32,
    cofactor: u64,
    fermat_quotient_valuation: i64,
) -> u64 {
    if fermat_quotient_valuation <= 0 {
        return 0;
    }
    let capped = (fermat_quotient_valuation as u64).min(exponent as u64) as u32;
    cofactor
        .checked_mul(truncated_power_sum(prime, exponent, capped))
        .expect("bounded by the degree")
}

/// Discriminant of `Q(p^s-th root of a)` for squarefree `a` other than
/// 0, 1, -1: `(-1)^((n-1)(n-2)/2) * p^nu * a^(n-1)` with `n = p^s` and
/// `nu = s*p^s - 2*sum(p^(s-j))` (or `s*p^s` when the Fermat quotient
/// valuation is not positive).
pub fn discriminant_prime_power(prime: u64, exponent: u32, radicand: &BigInt) -> Result<FactoredInteger> {
    if !crate::arith::is_prime(&BigUint::from(prime)) {
        return Err(Error::NotPrime(BigUint::from(prime)));
    }
    if exponent == 0 {
        return Err(Error::InvalidDegree(1));
    }
    if radicand.is_zero() {
        return Err(Error::ZeroRadicand);
    }
    if radicand.magnitude().is_one() {
        return Err(Error::UnitRadicand);
    }
    let n = (prime as u128)
        .checked_pow(exponent)
        .filter(|&n| n <= u32::MAX as u128)
        .ok_or(Error::DegreeTooLarge(u64::MAX))? as u64;
    if !capelli_irreducible(n, radicand) {
        return Err(Error::Reducible);
    }
    let radicand_factors = factorize(radicand.magnitude())?;
    if let Some((q, _)) = radicand_factors.factors().iter().find(|(_, t)| *t >= 2) {
        return Err(Error::NotSquarefree { prime: q.clone() });
    }
    // r = v_p(a^(p-1) - 1) - 1; for p | a the valuation is 0, so r = -1.
    let p_big = BigUint::from(prime);
    let r: i64 = if radicand_factors.exponent_of(&p_big) > 0 {
        -1
    } else {
        unit_power_valuation(radicand, &p_big)? as i64 - 1
    };
    let nu = if r > 0 {
        let capped = (r as u64).min(exponent as u64) as u32;
        n * exponent as u64 - 2 * truncated_power_sum(prime, exponent, capped)
    } else {
        n * exponent as u64
    };
    let mut sign = half_shifted_parity_sign(n);
    if radicand.is_negative() && n.is_multiple_of(2) {
        sign = -sign;
    }
    let mut out = FactoredInteger {
        sign,
        factors: BTreeMap::new(),
    };
    out.multiply_in(p_big, nu);
    for (q, _) in radicand_factors.factors() {
        out.multiply_in(q.clone(), n - 1);
    }
    Ok(out)
}

/// Discriminant of the octic field `Q(8th root of a)` for squarefree `a`
/// other than 0, 1, -1, read off the residue class of `a`:
/// `-2^24 a^7` for `a = 2, 3 (mod 4)`, `-2^16 a^7` for `a = 5, 13 (mod 16)`,
/// `-2^12 a^7` for `a = 9 (mod 16)` and `-2^10 a^7` for `a = 1 (mod 16)`.
/// Negative radicands reduce to their least non-negative residue.
pub fn octic_discriminant(radicand: &BigInt) -> Result<FactoredInteger> {
    if radicand.is_zero() {
        return Err(Error::ZeroRadicand);
    }
    if radicand.magnitude().is_one() {
        return Err(Error::UnitRadicand);
    }
    if !capelli_irreducible(8, radicand) {
        return Err(Error::Reducible);
    }
    let radicand_factors = factorize(radicand.magnitude())?;
    if let Some((q, _)) = radicand_factors.factors().iter().find(|(_, t)| *t >= 2) {
        return Err(Error::NotSquarefree { prime: q.clone() });
    }
    let residue = octic_residue(radicand);
    let two_exponent = match octic_branch(residue) {
        Some(v) => v,
        // a = 0 (mod 4) cannot be squarefree.
        None => unreachable!("squarefree radicand cannot be 0 mod 4"),
    };
    let sign = if radicand.is_negative() { 1 } else { -1 };
    let mut out = FactoredInteger {
        sign,
        factors: BTreeMap::new(),
    };
    out.multiply_in(BigUint::from(2u32), two_exponent);
    for (q, _) in radicand_factors.factors() {
        out.multiply_in(q.clone(), 7);
    }
    Ok(out)
}

/// Least non-negative residue of the radicand modulo 16.
pub fn octic_residue(radicand: &BigInt) -> u64 {
    let m = radicand.mod_floor(&BigInt::from(16));
    u64::try_from(m.magnitude()).expect("residue below 16")
}

fn octic_branch(residue: u64) -> Option<u64> {
    match residue % 4 {
        2 | 3 => Some(24),
        1 => Some(match residue {
            5 | 13 => 16,
            9 => 12,
            1 => 10,
            _ => unreachable!("residue is 1 mod 4"),
        }),
        _ => None,
    }
}

/// Human-readable congruence-class label for the octic table.
pub fn octic_class_label(residue: u64) -> Option<&'static str> {
    match residue % 4 {
        2 | 3 => Some("2,3 (mod 4)"),
        1 => Some(match residue {
            5 | 13 => "5,13 (mod 16)",
            9 => "9 (mod 16)",
            1 => "1 (mod 16)",
            _ => unreachable!(),
        }),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn ubig(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn field(n: u64, a: i64) -> ValidatedPureField {
        ValidatedPureField::new(n, big(a)).unwrap()
    }

    fn factored(sign: i8, pairs: &[(u64, u64)]) -> FactoredInteger {
        FactoredInteger::from_parts(sign, pairs.iter().map(|&(p, e)| (ubig(p), e)))
    }

    #[test]
    fn validate_caches_prime_data() {
        let f = field(2, 5);
        assert_eq!(f.degree_factors().factors(), &[(ubig(2), 1)]);
        assert_eq!(f.radicand_factors().factors(), &[(ubig(5), 1)]);
        let dp = &f.degree_primes()[0];
        assert_eq!((dp.prime, dp.exponent, dp.cofactor), (2, 1, 1));
        assert_eq!(dp.fermat_quotient_valuation, 1); // v_2(4) - 1
        let rp = &f.radicand_primes()[0];
        assert_eq!((rp.multiplicity, rp.degree_gcd), (1, 1));
    }

    #[test]
    fn validate_rejects_bad_pairs() {
        assert_eq!(
            ValidatedPureField::new(6, big(12)).unwrap_err(),
            Error::HypothesisViolation { prime: 2 }
        );
        // x^6 - 4 = (x^3 - 2)(x^3 + 2): reducibility trumps the
        // per-prime hypothesis check.
        assert_eq!(
            ValidatedPureField::new(6, big(4)).unwrap_err(),
            Error::Reducible
        );
        assert_eq!(
            ValidatedPureField::new(4, big(16)).unwrap_err(),
            Error::Reducible
        );
        assert_eq!(
            ValidatedPureField::new(1, big(5)).unwrap_err(),
            Error::InvalidDegree(1)
        );
        assert_eq!(
            ValidatedPureField::new(3, big(0)).unwrap_err(),
            Error::ZeroRadicand
        );
    }

    #[test]
    fn quadratic_discriminants_match_the_classical_formula() {
        // d(Q(sqrt(m))) = m for m = 1 (mod 4), else 4m, with m the signed
        // squarefree kernel of a. Validation allows non-squarefree a at
        // odd primes, so the formula must see through to the field, e.g.
        // Q(sqrt(18)) = Q(sqrt(2)) with d = 8.
        let mut checked = 0u32;
        for magnitude in 2i64..=200 {
            for a in [magnitude, -magnitude] {
                let f = match ValidatedPureField::new(2, big(a)) {
                    Ok(f) => f,
                    Err(_) => continue,
                };
                let mut kernel = big(a.signum());
                for rp in f.radicand_primes() {
                    if rp.multiplicity % 2 == 1 {
                        kernel *= BigInt::from(rp.prime.clone());
                    }
                }
                let classical = if kernel.mod_floor(&big(4)) == big(1) {
                    kernel.clone()
                } else {
                    big(4) * &kernel
                };
                assert_eq!(f.discriminant().to_bigint(), classical, "a={a}");
                checked += 1;
            }
        }
        assert!(checked > 300);
    }

    #[test]
    fn cubic_discriminants_match_the_classical_formula() {
        // For cubefree a = h*k^2 with h, k coprime and squarefree,
        // d(Q(cbrt(a))) = -3(hk)^2 when a = +-1 (mod 9), else -27(hk)^2.
        let mut checked = 0u32;
        for magnitude in 2i64..=120 {
            for a in [magnitude, -magnitude] {
                let f = match ValidatedPureField::new(3, big(a)) {
                    Ok(f) => f,
                    Err(_) => continue,
                };
                if f.radicand_primes().iter().any(|rp| rp.multiplicity > 2) {
                    continue; // classical form stated for cubefree a
                }
                let mut hk = BigInt::one();
                for rp in f.radicand_primes() {
                    hk *= BigInt::from(rp.prime.clone());
                }
                let nine_residue = big(a).mod_floor(&big(9));
                let scale = if nine_residue == big(1) || nine_residue == big(8) {
                    big(-3)
                } else {
                    big(-27)
                };
                assert_eq!(f.discriminant().to_bigint(), scale * &hk * &hk, "a={a}");
                checked += 1;
            }
        }
        assert!(checked > 150);
    }

    #[test]
    fn validate_marks_shared_primes() {
        let f = field(8, 2);
        assert_eq!(f.degree_primes()[0].fermat_quotient_valuation, -1);
        assert_eq!(f.radicand_primes()[0].degree_gcd, 1);
    }

    #[test]
    fn radicand_index_valuation_examples() {
        assert_eq!(radicand_index_valuation(8, 1, 1).unwrap(), 0);
        assert_eq!(radicand_index_valuation(4, 2, 2).unwrap(), 2);
        assert_eq!(radicand_index_valuation(9, 6, 3).unwrap(), 21);
        assert!(matches!(
            radicand_index_valuation(4, 2, 1),
            Err(Error::NonIntegralIndex { .. })
        ));
    }

    #[test]
    fn degree_index_valuation_examples() {
        assert_eq!(degree_index_valuation(2, 3, 1, 4), 7);
        assert_eq!(degree_index_valuation(3, 2, 1, 0), 0);
        assert_eq!(degree_index_valuation(2, 1, 3, 1), 3);
        assert_eq!(degree_index_valuation(5, 2, 1, -1), 0);
    }

    #[test]
    fn power_basis_index_examples() {
        assert_eq!(field(2, 5).power_basis_index(), factored(1, &[(2, 1)]));
        assert!(field(2, 2).power_basis_index().is_one());
        assert_eq!(field(8, 33).power_basis_index(), factored(1, &[(2, 7)]));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(field(2, 5).discriminant(), factored(1, &[(5, 1)]));
        assert_eq!(field(2, -1).discriminant(), factored(-1, &[(2, 2)]));
        assert_eq!(field(8, 2).discriminant(), factored(-1, &[(2, 31)]));
        assert_eq!(
            field(3, 2).discriminant(),
            factored(-1, &[(2, 2), (3, 3)])
        );
        assert_eq!(field(3, 2).discriminant().to_bigint(), big(-108));
        // Q(zeta_16) via x^8 + 1.
        assert_eq!(field(8, -1).discriminant(), factored(1, &[(2, 24)]));
        // Shared prime with cofactor: Q(6th root of 5^?) style pair.
        assert_eq!(
            field(6, 5).discriminant(),
            factored(1, &[(3, 6), (5, 5)])
        );
    }

    #[test]
    fn discriminant_prime_power_examples() {
        assert_eq!(
            discriminant_prime_power(2, 3, &big(2)).unwrap(),
            factored(-1, &[(2, 31)])
        );
        // v_2(17 - 1) - 1 = 3 = s, so nu = 24 - 2*(4 + 2 + 1) = 10;
        // consistent with the a = 1 (mod 16) row of the octic table.
        assert_eq!(
            discriminant_prime_power(2, 3, &big(17)).unwrap(),
            factored(-1, &[(2, 10), (17, 7)])
        );
        assert_eq!(
            discriminant_prime_power(3, 1, &big(2)).unwrap(),
            factored(-1, &[(2, 2), (3, 3)])
        );
        assert_eq!(
            discriminant_prime_power(2, 2, &big(12)).unwrap_err(),
            Error::NotSquarefree { prime: ubig(2) }
        );
        assert_eq!(
            discriminant_prime_power(2, 2, &big(-1)).unwrap_err(),
            Error::UnitRadicand
        );
    }

    #[test]
    fn discriminant_prime_power_agrees_with_general_formula() {
        for (p, s) in [(2u64, 1u32), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)] {
            let n = p.pow(s);
            for a in -30i64..=30 {
                let special = discriminant_prime_power(p, s, &big(a));
                if let Ok(d) = special {
                    assert_eq!(
                        d,
                        ValidatedPureField::new(n, big(a)).unwrap().discriminant(),
                        "p={p} s={s} a={a}"
                    );
                }
            }
        }
    }

    #[test]
    fn octic_examples() {
        assert_eq!(octic_discriminant(&big(2)).unwrap(), factored(-1, &[(2, 31)]));
        assert_eq!(
            octic_discriminant(&big(5)).unwrap(),
            factored(-1, &[(2, 16), (5, 7)])
        );
        assert_eq!(
            octic_discriminant(&big(17)).unwrap(),
            factored(-1, &[(2, 10), (17, 7)])
        );
        assert_eq!(
            octic_discriminant(&big(41)).unwrap(),
            factored(-1, &[(2, 12), (41, 7)])
        );
        // Negative radicand flips the overall sign through a^7.
        assert_eq!(
            octic_discriminant(&big(-2)).unwrap(),
            factored(1, &[(2, 31)])
        );
    }

    #[test]
    fn octic_matches_general_formula_up_to_500() {
        let mut checked = 0u32;
        for mag in 2i64..=500 {
            for a in [mag, -mag] {
                match octic_discriminant(&big(a)) {
                    Ok(d) => {
                        let f = ValidatedPureField::new(8, big(a)).unwrap();
                        assert_eq!(d, f.discriminant(), "a={a}");
                        checked += 1;
                    }
                    Err(_) => continue,
                }
            }
        }
        assert!(checked > 500);
    }

    #[test]
    fn monogenic_examples() {
        assert!(!field(2, 5).is_monogenic().0);
        assert_eq!(
            field(2, 5).is_monogenic().1,
            Some(MonogenicObstruction::FermatQuotient { prime: 2 })
        );
        assert_eq!(field(2, 2).is_monogenic(), (true, None));
        assert_eq!(field(3, 2).is_monogenic(), (true, None));
        assert_eq!(
            field(3, 4).is_monogenic().1,
            Some(MonogenicObstruction::NotSquarefree { prime: ubig(2) })
        );
    }

    #[test]
    fn monogenicity_handles_hypothesis_violations() {
        // v_2(12) = 2 fails the formula hypothesis, but non-squarefree
        // radicands are never monogenic.
        assert_eq!(
            monogenicity(4, &big(12)).unwrap(),
            (
                false,
                Some(MonogenicObstruction::NotSquarefree { prime: ubig(2) })
            )
        );
        assert_eq!(monogenicity(4, &big(16)).unwrap_err(), Error::Reducible);
    }

    #[test]
    fn factored_integer_rendering() {
        let d = factored(-1, &[(2, 31)]);
        assert_eq!(d.to_string(), "- 2^31");
        assert_eq!(d.unsigned_string(), "2^31");
        assert_eq!(d.compact_string(), "-2^31");
        assert_eq!(d.to_bigint(), big(-2147483648));
        assert_eq!(FactoredInteger::one().to_string(), "+ 1");
        assert_eq!(FactoredInteger::one().compact_string(), "1");
        let merged = FactoredInteger::from_parts(
            1,
            vec![(ubig(3), 2), (ubig(2), 1), (ubig(3), 1), (ubig(7), 0)],
        );
        assert_eq!(merged.unsigned_string(), "2^1 * 3^3");
        assert_eq!(merged.exponent_of(&ubig(3)), 3);
        assert_eq!(merged.exponent_of(&ubig(7)), 0);
    }
}
