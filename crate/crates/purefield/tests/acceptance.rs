//! Acceptance suite: one test per criterion, each printing a PASS line
//! once every assertion in it has held. Run with
//! `cargo test -p purefield --test acceptance -- --nocapture` to see the
//! lines on success.

use num_bigint::{BigInt, BigUint};
use num_traits::pow;
use purefield::arith::{binomial_valuation, padic_valuation};
use purefield::field::{octic_discriminant, FactoredInteger, ValidatedPureField};
use purefield::polygon::{triangle_count, NewtonPolygon, ResidualPolynomial};
use purefield::verify::{check_vertex_prediction, shifted_polynomial, sweep};
use std::time::Instant;

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn ubig(x: u64) -> BigUint {
    BigUint::from(x)
}

fn factored(sign: i8, pairs: &[(u64, u64)]) -> FactoredInteger {
    FactoredInteger::from_parts(sign, pairs.iter().map(|&(p, e)| (ubig(p), e)))
}

/// Criterion 1: the computed octic discriminants reproduce the four
/// piecewise rows -2^24 a^7 / -2^16 a^7 / -2^12 a^7 / -2^10 a^7 exactly,
/// in under a second.
#[test]
fn criterion_1_octic_table_reproduction() {
    let start = Instant::now();
    let cases: &[(i64, u64)] = &[
        (2, 24),  // 2 (mod 4)
        (3, 24),  // 3 (mod 4)
        (5, 16),  // 5 (mod 16)
        (13, 16), // 13 (mod 16)
        (41, 12), // 9 (mod 16)
        (17, 10), // 1 (mod 16)
    ];
    for &(a, two_exponent) in cases {
        let mut expected = factored(-1, &[(2, two_exponent)]);
        expected = FactoredInteger::from_parts(
            expected.sign(),
            expected
                .factors()
                .map(|(p, e)| (p.clone(), e))
                .chain(std::iter::once((ubig(a as u64), 7))),
        );
        let table = octic_discriminant(&big(a)).unwrap();
        assert_eq!(table, expected, "octic table row for a = {a}");
        let general = ValidatedPureField::new(8, big(a)).unwrap().discriminant();
        assert_eq!(general, expected, "general formula for a = {a}");
    }
    // Decimal spot check on the first row.
    assert_eq!(
        octic_discriminant(&big(2)).unwrap().to_bigint(),
        big(-2147483648)
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 1, "took {elapsed:?}");
    println!("criterion 1 (octic table reproduction): PASS");
}

/// Criterion 2: the 2-Newton polygon of (x+5)^4 - 5 is one edge of slope
/// 1/2 with e = 2, t = 2 and residual Y^2 + Y + 1 over F_2.
#[test]
fn criterion_2_worked_example() {
    let g = shifted_polynomial(2, 2, &big(5)).unwrap();
    let polygon = NewtonPolygon::build(&g, &ubig(2)).unwrap();
    assert_eq!(polygon.vertices(), &[(0, 0), (4, 2)]);
    assert_eq!(polygon.edges().len(), 1);
    let edge = &polygon.edges()[0];
    assert_eq!((edge.slope_num, edge.slope_den), (1, 2));
    assert_eq!(edge.ramification(), 2);
    assert_eq!(edge.length / edge.ramification(), 2);
    let residual = ResidualPolynomial::for_edge(&g, &ubig(2), edge).unwrap();
    assert_eq!(residual.degree(), 2);
    assert_eq!(residual.coefficients(), &[ubig(1), ubig(1), ubig(1)]);
    assert!(residual.is_separable());
    println!("criterion 2 (worked example polygon): PASS");
}

/// Criteria 3 and 4: the full desk-scale sweep holds the global identity
/// disc * index^2 = +-n^n a^(n-1) exactly and every closed-form index
/// valuation agrees with the Ore route, with zero failures in under 60 s.
/// (The sweep also re-counts every polygon by brute force, which is
/// criterion 6's first half.)
#[test]
fn criterion_3_and_4_global_identity_and_route_agreement() {
    let start = Instant::now();
    let report = sweep(24, 60).unwrap();
    assert_eq!(report.pairs_considered, 23 * 59 * 2);
    assert!(report.validated > 1000, "validated {}", report.validated);
    assert!(
        report.passed(),
        "sweep failures: {:#?}",
        report.failures
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
    println!(
        "criterion 3 (global identity sweep, {} fields): PASS",
        report.validated
    );
    println!(
        "criterion 4 (route agreement, {} checks): PASS",
        report.checks_passed
    );
}

/// Criterion 5: computed polygon vertices of (x+a)^(p^s) - a equal the
/// case-wise predicted sets for p in {2,3,5}, p^s <= 125, |a| <= 60,
/// including the r = 0 Eisenstein degenerate.
#[test]
fn criterion_5_vertex_predictions() {
    let mut checked = 0u32;
    for p in [2u64, 3, 5] {
        for s in 1..=6u32 {
            let ps = (p as u128).pow(s);
            if ps > 125 {
                break;
            }
            for magnitude in 2i64..=60 {
                for a in [magnitude, -magnitude] {
                    if a.unsigned_abs() % p == 0 {
                        continue;
                    }
                    if ValidatedPureField::new(ps as u64, big(a)).is_err() {
                        continue;
                    }
                    let v = check_vertex_prediction(p, s, &big(a)).unwrap();
                    assert!(
                        v.agrees,
                        "p={p} s={s} a={a}: computed {:?}, predicted {:?}",
                        v.computed, v.predicted
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 500, "only {checked} predictions checked");
    println!("criterion 5 (vertex predictions, {checked} polygons): PASS");
}

/// Criterion 6: triangle_count equals exhaustive lattice-point
/// enumeration for all 1 <= n, t <= 200. (Agreement of the per-edge
/// closed-form count with the brute scan on every sweep polygon is
/// asserted inside criteria 3/4's sweep.)
#[test]
fn criterion_6_lattice_count_oracle() {
    for n in 1..=200u64 {
        for t in 1..=200u64 {
            let mut enumerated = 0u64;
            for x in 1..n {
                for y in 1..=t {
                    // on or below the segment (0,0)-(n,t), off the line x = n
                    if x * t >= y * n {
                        enumerated += 1;
                    }
                }
            }
            assert_eq!(triangle_count(n, t), enumerated, "n={n} t={t}");
            let floor_sum: u64 = (1..n).map(|i| i * t / n).sum();
            assert_eq!(triangle_count(n, t), floor_sum, "n={n} t={t}");
        }
    }
    println!("criterion 6 (lattice-count oracle, 200x200 exhaustive): PASS");
}

/// Criterion 7: binomial_valuation agrees with the valuation of the
/// exactly computed binomial coefficient for all u <= p^s, p in {2,3,5},
/// s <= 6.
#[test]
fn criterion_7_binomial_valuation() {
    let mut checked = 0u64;
    for p in [2u64, 3, 5] {
        for s in 1..=6u32 {
            let ps = p.pow(s);
            let mut binom = num_bigint::BigUint::from(1u32);
            for u in 1..=ps {
                binom = binom * (ps - u + 1) / u;
                let exact = padic_valuation(&BigInt::from(binom.clone()), &ubig(p)).unwrap();
                assert_eq!(
                    binomial_valuation(p, s, u).unwrap(),
                    exact,
                    "p={p} s={s} u={u}"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 19_000);
    println!("criterion 7 (binomial valuation, {checked} coefficients): PASS");
}

/// Criterion 8: the monogenicity criterion on its pinned examples, and
/// the sweep-wide equivalence: monogenic iff the index is 1 iff
/// |disc| = n^n |a|^(n-1).
#[test]
fn criterion_8_monogenicity() {
    assert!(ValidatedPureField::new(2, big(2)).unwrap().is_monogenic().0);
    assert!(!ValidatedPureField::new(2, big(5)).unwrap().is_monogenic().0);
    assert!(ValidatedPureField::new(3, big(2)).unwrap().is_monogenic().0);

    let mut monogenic = 0u64;
    let mut total = 0u64;
    for n in 2..=24u64 {
        for magnitude in 2i64..=60 {
            for a in [magnitude, -magnitude] {
                let field = match ValidatedPureField::new(n, big(a)) {
                    Ok(f) => f,
                    Err(_) => continue,
                };
                total += 1;
                let (is_mono, witness) = field.is_monogenic();
                let index = field.power_basis_index();
                assert_eq!(is_mono, index.is_one(), "n={n} a={a}");
                assert_eq!(is_mono, witness.is_none(), "n={n} a={a}");
                let disc_magnitude = field.discriminant().magnitude();
                let bound = pow(BigUint::from(n), n as usize)
                    * pow(big(a).magnitude().clone(), (n - 1) as usize);
                assert_eq!(is_mono, disc_magnitude == bound, "n={n} a={a}");
                if is_mono {
                    monogenic += 1;
                }
            }
        }
    }
    assert!(monogenic > 0 && monogenic < total);
    println!(
        "criterion 8 (monogenicity, {monogenic}/{total} fields monogenic): PASS"
    );
}
