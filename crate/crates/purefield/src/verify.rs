//! Independent brute-force and structural checks: the polygon route is
//! re-derived from first principles and compared against every closed form
//! at desk scale.

use crate::arith::{is_prime_u64, unit_power_valuation};
use crate::error::{Error, Result};
use crate::field::{
    degree_index_valuation, radicand_index_valuation, ValidatedPureField,
};
use crate::polygon::{
    lattice_count, IntPolynomial, NewtonPolygon, ResidualPolynomial,
};
use num_bigint::{BigInt, BigUint};
use num_traits::{pow, One, Zero};
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// Exact expansion of `(x + a)^(p^s) - a` via binomial coefficients.
/// Requires `p` prime and `p` not dividing `a`.
pub fn shifted_polynomial(p: u64, s: u32, a: &BigInt) -> Result<IntPolynomial> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(BigUint::from(p)));
    }
    if (a % BigInt::from(p)).is_zero() {
        return Err(Error::PrimeDividesBase(BigUint::from(p)));
    }
    let n = (p as u128)
        .checked_pow(s)
        .filter(|&n| n <= u32::MAX as u128)
        .ok_or(Error::DegreeTooLarge(u64::MAX))? as u64;
    let n_usize = n as usize;
    let mut coefficients = vec![BigInt::zero(); n_usize + 1];
    // coefficient of x^(n-k) is C(n, k) a^k
    let mut binom = BigUint::one();
    let mut a_power = BigInt::one();
    for k in 0..=n {
        if k > 0 {
            binom = binom * (n - k + 1) / k;
            a_power *= a;
        }
        coefficients[(n - k) as usize] = BigInt::from(binom.clone()) * &a_power;
    }
    coefficients[0] -= a;
    IntPolynomial::new(coefficients)
}

/// Case-wise predicted vertex sets of the p-Newton polygon of
/// `(x + a)^(p^s) - a`, parameterized by the Fermat quotient valuation
/// `r >= 1` (the `r = 0` polygon is the Eisenstein pair
/// `(0,0), (p^s, 1)` and is handled by the caller).
pub fn predicted_vertices(p: u64, s: u32, r: u64) -> Result<Vec<(u64, u64)>> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(BigUint::from(p)));
    }
    if r < 1 {
        return Err(Error::VertexPredictionRange);
    }
    let ps = (p as u128)
        .checked_pow(s)
        .filter(|&n| n <= u32::MAX as u128)
        .ok_or(Error::DegreeTooLarge(u64::MAX))? as u64;
    let middle_top = if r > s as u64 {
        s as u64
    } else if p == 2 {
        r - 1
    } else {
        r
    };
    let mut vertices = vec![(0, 0)];
    for i in 1..=middle_top {
        vertices.push((ps - p.pow(s - i as u32), i));
    }
    vertices.push((ps, r + 1));
    Ok(vertices)
}

/// Outcome of comparing a computed polygon against the predicted vertex
/// set; both lists are kept for failure reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPrediction {
    pub agrees: bool,
    pub computed: Vec<(u64, u64)>,
    pub predicted: Vec<(u64, u64)>,
}

/// Build the p-Newton polygon of `(x + a)^(p^s) - a` and compare its
/// vertices with the prediction derived from the Fermat quotient
/// valuation of `a` at `p`.
pub fn check_vertex_prediction(p: u64, s: u32, a: &BigInt) -> Result<VertexPrediction> {
    let g = shifted_polynomial(p, s, a)?;
    let p_big = BigUint::from(p);
    let polygon = NewtonPolygon::build(&g, &p_big)?;
    let r = unit_power_valuation(a, &p_big)? - 1;
    let predicted = if r == 0 {
        vec![(0, 0), (g.degree(), 1)]
    } else {
        predicted_vertices(p, s, r)?
    };
    Ok(VertexPrediction {
        agrees: polygon.vertices() == predicted.as_slice(),
        computed: polygon.vertices().to_vec(),
        predicted,
    })
}

/// Exact big-integer check of
/// `disc * index^2 = (-1)^((n-1)(n-2)/2) n^n a^(n-1)`.
pub fn check_global_relation(degree: u64, radicand: &BigInt) -> Result<bool> {
    let field = ValidatedPureField::new(degree, radicand.clone())?;
    Ok(global_relation_holds(&field))
}

fn global_relation_holds(field: &ValidatedPureField) -> bool {
    let n = field.degree();
    let index = field.power_basis_index().to_bigint();
    let lhs = field.discriminant().to_bigint() * &index * &index;
    let mut rhs = pow(BigInt::from(n), n as usize)
        * pow(field.radicand().clone(), (n - 1) as usize);
    if ((n as u128 - 1) * (n as u128 - 2) / 2) % 2 == 1 {
        rhs = -rhs;
    }
    lhs == rhs
}

/// Lattice-point oracle: a literal double loop over `1 <= x < n`,
/// `1 <= y <= height`, testing path-height at `x` against `y` with exact
/// rational arithmetic.
pub fn brute_lattice_count(polygon: &NewtonPolygon) -> Result<u64> {
    if polygon.vertices()[0] != (0, 0) {
        return Err(Error::FirstVertexNotOrigin);
    }
    let n = polygon.degree();
    let max_y = polygon.height();
    let mut count = 0u64;
    for x in 1..n {
        for y in 1..=max_y {
            if path_reaches(polygon, x, y) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// True iff the polygon path height at abscissa `x` is at least `y`.
fn path_reaches(polygon: &NewtonPolygon, x: u64, y: u64) -> bool {
    for e in polygon.edges() {
        if x < e.start.0 || x > e.end.0 {
            continue;
        }
        // height(x) = y0 + (x - x0) * rise / run  >=  y
        let dy = y as i128 - e.start.1 as i128;
        if dy <= 0 {
            return true;
        }
        return (x - e.start.0) as i128 * e.rise() as i128 >= dy * e.length as i128;
    }
    false
}

/// One failed comparison, with full reproduction data.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepFailure {
    pub degree: u64,
    pub radicand: String,
    pub prime: Option<String>,
    pub check: String,
    pub expected: String,
    pub actual: String,
}

/// Aggregate result of a verification sweep.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepReport {
    pub degree_max: u64,
    pub radicand_magnitude_max: u64,
    pub pairs_considered: u64,
    pub validated: u64,
    pub rejected_reducible: u64,
    pub rejected_hypothesis: u64,
    pub checks_passed: u64,
    pub failures: Vec<SweepFailure>,
    pub wall_time_ms: u64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Per-item check outcome; merging outcomes is associative and
/// commutative, so items may run in any order (or concurrently).
#[derive(Debug, Default)]
struct ItemOutcome {
    checks_passed: u64,
    failures: Vec<SweepFailure>,
}

impl ItemOutcome {
    fn pass(&mut self) {
        self.checks_passed += 1;
    }

    fn check<T: PartialEq + std::fmt::Debug>(
        &mut self,
        degree: u64,
        radicand: &BigInt,
        prime: Option<&BigUint>,
        name: &str,
        expected: T,
        actual: T,
    ) {
        if expected == actual {
            self.pass();
        } else {
            self.failures.push(SweepFailure {
                degree,
                radicand: radicand.to_string(),
                prime: prime.map(|p| p.to_string()),
                check: name.to_string(),
                expected: format!("{:?}", expected),
                actual: format!("{:?}", actual),
            });
        }
    }

    fn error(&mut self, degree: u64, radicand: &BigInt, prime: Option<&BigUint>, name: &str, e: Error) {
        self.failures.push(SweepFailure {
            degree,
            radicand: radicand.to_string(),
            prime: prime.map(|p| p.to_string()),
            check: name.to_string(),
            expected: "ok".to_string(),
            actual: e.to_string(),
        });
    }

    fn merge(&mut self, other: ItemOutcome) {
        self.checks_passed += other.checks_passed;
        self.failures.extend(other.failures);
    }
}

/// Sweep all pairs `2 <= n <= n_max`, `2 <= |a| <= a_max`, skipping pairs
/// that fail validation, and run every cross-check on the rest: the
/// global discriminant-index identity, closed-form versus Ore index
/// valuations at every prime, the brute-force lattice count on every
/// polygon, and (for prime-power degrees) the predicted vertex sets.
pub fn sweep(degree_max: u64, radicand_magnitude_max: u64) -> Result<SweepReport> {
    if degree_max < 2 || radicand_magnitude_max < 2 {
        return Err(Error::InvalidSweepRange);
    }
    let start = Instant::now();
    let mut pairs = 0u64;
    let mut validated = 0u64;
    let mut reducible = 0u64;
    let mut hypothesis = 0u64;
    let mut total = ItemOutcome::default();
    for degree in 2..=degree_max {
        for magnitude in 2..=radicand_magnitude_max {
            for radicand in [BigInt::from(magnitude), -BigInt::from(magnitude)] {
                pairs += 1;
                match ValidatedPureField::new(degree, radicand.clone()) {
                    Ok(field) => {
                        validated += 1;
                        total.merge(check_field(&field));
                    }
                    Err(Error::Reducible) => reducible += 1,
                    Err(Error::HypothesisViolation { .. }) => hypothesis += 1,
                    Err(e) => total.error(degree, &radicand, None, "validate", e),
                }
            }
        }
    }
    Ok(SweepReport {
        degree_max,
        radicand_magnitude_max,
        pairs_considered: pairs,
        validated,
        rejected_reducible: reducible,
        rejected_hypothesis: hypothesis,
        checks_passed: total.checks_passed,
        failures: total.failures,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

fn check_field(field: &ValidatedPureField) -> ItemOutcome {
    let mut out = ItemOutcome::default();
    let n = field.degree();
    let a = field.radicand();

    out.check(n, a, None, "global_relation", true, global_relation_holds(field));

    // Degree primes not dividing the radicand: closed-form valuation
    // against the Ore count of the shifted prime-power polynomial.
    for dp in field.degree_primes() {
        if dp.fermat_quotient_valuation < 0 {
            continue;
        }
        let p_big = BigUint::from(dp.prime);
        let closed = degree_index_valuation(
            dp.prime,
            dp.exponent,
            dp.cofactor,
            dp.fermat_quotient_valuation,
        );
        match shifted_polynomial(dp.prime, dp.exponent, a) {
            Ok(g) => {
                out.merge(check_polygon_routes(
                    n,
                    a,
                    &p_big,
                    &g,
                    "degree_prime_route",
                    closed,
                    dp.cofactor,
                ));
            }
            Err(e) => out.error(n, a, Some(&p_big), "shifted_polynomial", e),
        }
        // Prime-power degree: the vertex set itself is predicted.
        if dp.cofactor == 1 {
            match check_vertex_prediction(dp.prime, dp.exponent, a) {
                Ok(v) if v.agrees => out.pass(),
                Ok(v) => out.check(
                    n,
                    a,
                    Some(&p_big),
                    "vertex_prediction",
                    v.predicted,
                    v.computed,
                ),
                Err(e) => out.error(n, a, Some(&p_big), "vertex_prediction", e),
            }
        }
    }

    // Radicand primes: closed-form valuation against the Ore count of
    // x^n - a itself.
    for rp in field.radicand_primes() {
        let closed = match radicand_index_valuation(n, rp.multiplicity, rp.degree_gcd) {
            Ok(v) => v,
            Err(e) => {
                out.error(n, a, Some(&rp.prime), "radicand_index_valuation", e);
                continue;
            }
        };
        match IntPolynomial::xn_minus_a(n, a) {
            Ok(g) => {
                out.merge(check_polygon_routes(
                    n,
                    a,
                    &rp.prime,
                    &g,
                    "radicand_prime_route",
                    closed,
                    1,
                ));
            }
            Err(e) => out.error(n, a, Some(&rp.prime), "xn_minus_a", e),
        }
    }
    out
}

/// Shared polygon checks for one `(polynomial, prime)` route: Ore
/// regularity, closed-form count versus brute count, and the scaled
/// agreement with the closed-form index valuation.
fn check_polygon_routes(
    n: u64,
    a: &BigInt,
    p: &BigUint,
    g: &IntPolynomial,
    name: &str,
    closed_valuation: u64,
    scale: u64,
) -> ItemOutcome {
    let mut out = ItemOutcome::default();
    let polygon = match NewtonPolygon::build(g, p) {
        Ok(poly) => poly,
        Err(e) => {
            out.error(n, a, Some(p), name, e);
            return out;
        }
    };
    for (i, edge) in polygon.edges().iter().enumerate() {
        match ResidualPolynomial::for_edge(g, p, edge) {
            Ok(res) if res.is_separable() => {}
            Ok(_) => {
                out.error(n, a, Some(p), name, Error::OreRegularityFailure { edge: i });
                return out;
            }
            Err(e) => {
                out.error(n, a, Some(p), name, e);
                return out;
            }
        }
    }
    let fast = match lattice_count(&polygon) {
        Ok(v) => v,
        Err(e) => {
            out.error(n, a, Some(p), name, e);
            return out;
        }
    };
    let brute = match brute_lattice_count(&polygon) {
        Ok(v) => v,
        Err(e) => {
            out.error(n, a, Some(p), name, e);
            return out;
        }
    };
    out.check(n, a, Some(p), &format!("{name}:lattice_oracle"), brute, fast);
    out.check(
        n,
        a,
        Some(p),
        &format!("{name}:index_valuation"),
        closed_valuation,
        scale * fast,
    );
    out
}
