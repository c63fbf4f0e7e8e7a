//! Command-line front end: exact discriminants, power-basis indices,
//! monogenicity tests, Newton polygon dumps and the verification sweep
//! for pure number fields `Q(n-th root of a)`.
//!
//! All integer arguments are decimal strings of unbounded length. Exit
//! codes: 0 on success, 1 on invalid or rejected input, 2 on an internal
//! verification failure.

mod record;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use purefield::arith::is_prime;
use purefield::error::Error;
use purefield::field::{
    degree_index_valuation, monogenicity, octic_class_label, octic_residue,
    radicand_index_valuation, FactoredInteger, ValidatedPureField,
};
use purefield::polygon::{
    lattice_count, ore_index_valuation, IntPolynomial, NewtonPolygon, ResidualPolynomial,
};
use purefield::verify::{check_global_relation, shifted_polynomial, sweep};
use record::{OutputRecord, ResultRepr, Status};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "purefield",
    version,
    about = "Exact discriminants, indices and Newton polygons of pure number fields Q(n-th root of a)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Field discriminant of Q(n-th root of a), in factored form
    Disc {
        n: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        /// Also print the exact decimal expansion
        #[arg(long)]
        decimal: bool,
        /// Emit a JSON record instead of text
        #[arg(long)]
        json: bool,
        /// Re-derive every index valuation through the Newton polygon
        /// route and fail (exit 2) on any disagreement
        #[arg(long)]
        check: bool,
    },
    /// Index of the power basis 1, t, ..., t^(n-1) in the ring of integers
    Index {
        n: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        decimal: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        check: bool,
    },
    /// Is the power basis an integral basis? Prints yes/no plus a witness
    Monogenic {
        n: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        json: bool,
    },
    /// p-Newton polygon of a polynomial: vertices, edges, residual
    /// polynomials, separability and the lattice-point count.
    ///
    /// SPEC is `xn-a:<n>:<a>`, `shifted:<p>:<s>:<a>` for (x+a)^(p^s) - a,
    /// or an explicit comma-separated coefficient list c_0,...,c_n.
    Polygon {
        p: String,
        #[arg(allow_hyphen_values = true)]
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check closed forms against brute force over all valid
    /// (n, a) with 2 <= n <= N_MAX, 2 <= |a| <= A_MAX
    Verify {
        n_max: u64,
        a_max: u64,
        #[arg(long)]
        json: bool,
    },
    /// Discriminant table for one degree over a radicand range
    Table {
        degree: u64,
        #[arg(allow_hyphen_values = true)]
        a_min: String,
        #[arg(allow_hyphen_values = true)]
        a_max: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Disc {
            n,
            a,
            decimal,
            json,
            check,
        } => cmd_factored(FactoredKind::Disc, &n, &a, decimal, json, check),
        Command::Index {
            n,
            a,
            decimal,
            json,
            check,
        } => cmd_factored(FactoredKind::Index, &n, &a, decimal, json, check),
        Command::Monogenic { n, a, json } => cmd_monogenic(&n, &a, json),
        Command::Polygon { p, spec, json } => cmd_polygon(&p, &spec, json),
        Command::Verify { n_max, a_max, json } => cmd_verify(n_max, a_max, json),
        Command::Table {
            degree,
            a_min,
            a_max,
            format,
        } => cmd_table(degree, &a_min, &a_max, format),
    }
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {}", msg);
    1
}

fn parse_bigint(s: &str, what: &str) -> Result<BigInt, String> {
    s.parse::<BigInt>()
        .map_err(|_| format!("{} must be a decimal integer, got {:?}", what, s))
}

fn parse_degree(s: &str) -> Result<u64, String> {
    let n = parse_bigint(s, "n")?;
    u64::try_from(&n)
        .ok()
        .filter(|&n| n <= u32::MAX as u64)
        .ok_or_else(|| format!("degree {} exceeds the supported bound 2^32", n))
}

/// Statuses representable in the record schema; anything else is a plain
/// usage error reported on stderr.
fn record_status(e: &Error) -> Option<(Status, Option<String>)> {
    match e {
        Error::Reducible => Some((Status::Reducible, None)),
        Error::HypothesisViolation { prime } => {
            Some((Status::HypothesisViolation, Some(prime.to_string())))
        }
        Error::OreRegularityFailure { .. } => Some((Status::OreRegularityFailure, None)),
        _ => None,
    }
}

#[derive(Clone, Copy, PartialEq)]
enum FactoredKind {
    Disc,
    Index,
}

impl FactoredKind {
    fn name(self) -> &'static str {
        match self {
            FactoredKind::Disc => "disc",
            FactoredKind::Index => "index",
        }
    }
}

fn cmd_factored(
    kind: FactoredKind,
    n_str: &str,
    a_str: &str,
    decimal: bool,
    json: bool,
    check: bool,
) -> i32 {
    let (n, a) = match (parse_degree(n_str), parse_bigint(a_str, "a")) {
        (Ok(n), Ok(a)) => (n, a),
        (Err(e), _) | (_, Err(e)) => return usage_error(&e),
    };
    let record = |status, result, witness| OutputRecord {
        command: kind.name().to_string(),
        n: n.to_string(),
        a: a.to_string(),
        status,
        result,
        witness,
    };
    let field = match ValidatedPureField::new(n, a.clone()) {
        Ok(f) => f,
        Err(e) => return reject(json, &e, &record),
    };
    if check {
        match cross_check(&field) {
            Ok(()) => {}
            Err(CheckFailure::OreRegularity(e)) => {
                if json {
                    println!("{}", record(Status::OreRegularityFailure, None, None).to_json());
                } else {
                    eprintln!("error: {}", e);
                }
                return 2;
            }
            Err(CheckFailure::Mismatch(msg)) => {
                eprintln!("error: internal cross-check failure: {}", msg);
                return 2;
            }
        }
    }
    let value = match kind {
        FactoredKind::Disc => field.discriminant(),
        FactoredKind::Index => field.power_basis_index(),
    };
    if json {
        println!(
            "{}",
            record(Status::Ok, Some(ResultRepr::new(&value, decimal)), None).to_json()
        );
    } else {
        let body = match kind {
            FactoredKind::Disc => value.to_string(),
            FactoredKind::Index => value.unsigned_string(),
        };
        if decimal {
            println!("{} = {}", body, value.to_bigint());
        } else {
            println!("{}", body);
        }
    }
    0
}

fn reject(
    json: bool,
    e: &Error,
    record: &dyn Fn(Status, Option<ResultRepr>, Option<String>) -> OutputRecord,
) -> i32 {
    match record_status(e) {
        Some((status, witness)) => {
            if json {
                println!("{}", record(status, None, witness).to_json());
            } else {
                eprintln!("error: {}", e);
            }
            1
        }
        None => usage_error(&e.to_string()),
    }
}

enum CheckFailure {
    OreRegularity(Error),
    Mismatch(String),
}

/// Re-derive every index valuation through the polygon route and verify
/// the global discriminant-index identity.
fn cross_check(field: &ValidatedPureField) -> Result<(), CheckFailure> {
    let n = field.degree();
    let a = field.radicand();
    match check_global_relation(n, a) {
        Ok(true) => {}
        Ok(false) => {
            return Err(CheckFailure::Mismatch(
                "disc * index^2 differs from (-1)^((n-1)(n-2)/2) n^n a^(n-1)".to_string(),
            ))
        }
        Err(e) => return Err(CheckFailure::Mismatch(e.to_string())),
    }
    for dp in field.degree_primes() {
        if dp.fermat_quotient_valuation < 0 {
            continue;
        }
        let closed = degree_index_valuation(
            dp.prime,
            dp.exponent,
            dp.cofactor,
            dp.fermat_quotient_valuation,
        );
        let ore = shifted_polynomial(dp.prime, dp.exponent, a)
            .and_then(|g| ore_index_valuation(&g, &BigUint::from(dp.prime)));
        match ore {
            Ok(count) if dp.cofactor * count == closed => {}
            Ok(count) => {
                return Err(CheckFailure::Mismatch(format!(
                    "index valuation at {}: closed form {} vs polygon route {}",
                    dp.prime,
                    closed,
                    dp.cofactor * count
                )))
            }
            Err(e @ Error::OreRegularityFailure { .. }) => {
                return Err(CheckFailure::OreRegularity(e))
            }
            Err(e) => return Err(CheckFailure::Mismatch(e.to_string())),
        }
    }
    for rp in field.radicand_primes() {
        let closed = radicand_index_valuation(n, rp.multiplicity, rp.degree_gcd)
            .map_err(|e| CheckFailure::Mismatch(e.to_string()))?;
        let ore = IntPolynomial::xn_minus_a(n, a)
            .and_then(|g| ore_index_valuation(&g, &rp.prime));
        match ore {
            Ok(count) if count == closed => {}
            Ok(count) => {
                return Err(CheckFailure::Mismatch(format!(
                    "index valuation at {}: closed form {} vs polygon route {}",
                    rp.prime, closed, count
                )))
            }
            Err(e @ Error::OreRegularityFailure { .. }) => {
                return Err(CheckFailure::OreRegularity(e))
            }
            Err(e) => return Err(CheckFailure::Mismatch(e.to_string())),
        }
    }
    Ok(())
}

fn cmd_monogenic(n_str: &str, a_str: &str, json: bool) -> i32 {
    let (n, a) = match (parse_degree(n_str), parse_bigint(a_str, "a")) {
        (Ok(n), Ok(a)) => (n, a),
        (Err(e), _) | (_, Err(e)) => return usage_error(&e),
    };
    let record = |status, witness| OutputRecord {
        command: "monogenic".to_string(),
        n: n.to_string(),
        a: a.to_string(),
        status,
        result: None,
        witness,
    };
    match monogenicity(n, &a) {
        Ok((true, _)) => {
            if json {
                println!("{}", record(Status::Ok, None).to_json());
            } else {
                println!("yes");
            }
            0
        }
        Ok((false, witness)) => {
            let witness = witness.expect("non-monogenic fields carry a witness");
            if json {
                println!("{}", record(Status::Ok, Some(witness.to_string())).to_json());
            } else {
                println!("no, {}", witness);
            }
            0
        }
        Err(e) => reject(json, &e, &|status, result, witness| OutputRecord {
            command: "monogenic".to_string(),
            n: n.to_string(),
            a: a.to_string(),
            status,
            result,
            witness,
        }),
    }
}

fn parse_polynomial_spec(spec: &str) -> Result<IntPolynomial, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["xn-a", n, a] => {
            let n = parse_degree(n)?;
            let a = parse_bigint(a, "a")?;
            IntPolynomial::xn_minus_a(n, &a).map_err(|e| e.to_string())
        }
        ["shifted", p, s, a] => {
            let p = p
                .parse::<u64>()
                .map_err(|_| format!("shifted prime must fit in u64, got {:?}", p))?;
            let s = s
                .parse::<u32>()
                .map_err(|_| format!("shifted exponent must fit in u32, got {:?}", s))?;
            let a = parse_bigint(a, "a")?;
            shifted_polynomial(p, s, &a).map_err(|e| e.to_string())
        }
        _ => {
            let coefficients = spec
                .split(',')
                .map(|c| parse_bigint(c.trim(), "coefficient"))
                .collect::<Result<Vec<_>, _>>()?;
            IntPolynomial::new(coefficients).map_err(|e| e.to_string())
        }
    }
}

fn cmd_polygon(p_str: &str, spec: &str, json: bool) -> i32 {
    let p = match p_str.parse::<BigUint>() {
        Ok(p) if is_prime(&p) => p,
        Ok(p) => return usage_error(&format!("{} is not prime", p)),
        Err(_) => return usage_error(&format!("p must be a decimal integer, got {:?}", p_str)),
    };
    let g = match parse_polynomial_spec(spec) {
        Ok(g) => g,
        Err(e) => return usage_error(&e),
    };
    let polygon = match NewtonPolygon::build(&g, &p) {
        Ok(polygon) => polygon,
        Err(e) => return usage_error(&e.to_string()),
    };
    // Residuals are defined edge-by-edge; slope-zero edges have none.
    let residuals: Vec<Option<ResidualPolynomial>> = polygon
        .edges()
        .iter()
        .map(|edge| ResidualPolynomial::for_edge(&g, &p, edge).ok())
        .collect();
    let count = lattice_count(&polygon).expect("monic polygons start at the origin");
    if json {
        let edges: Vec<serde_json::Value> = polygon
            .edges()
            .iter()
            .zip(&residuals)
            .map(|(edge, residual)| {
                json!({
                    "start": [edge.start.0, edge.start.1],
                    "end": [edge.end.0, edge.end.1],
                    "slope": edge.slope_string(),
                    "length": edge.length,
                    "e": edge.ramification(),
                    "residual": residual.as_ref().map(|r| r.to_string()),
                    "separable": residual.as_ref().map(|r| r.is_separable()),
                })
            })
            .collect();
        let out = json!({
            "command": "polygon",
            "prime": p.to_string(),
            "status": "ok",
            "degree": g.degree(),
            "vertices": polygon.vertices().iter().map(|&(x, y)| [x, y]).collect::<Vec<_>>(),
            "edges": edges,
            "lattice_count": count,
        });
        println!("{}", out);
    } else {
        println!("prime: {}", p);
        println!("degree: {}", g.degree());
        let vertices = polygon
            .vertices()
            .iter()
            .map(|&(x, y)| format!("({},{})", x, y))
            .collect::<Vec<_>>()
            .join(" ");
        println!("vertices: {}", vertices);
        for (i, (edge, residual)) in polygon.edges().iter().zip(&residuals).enumerate() {
            let desc = match residual {
                Some(r) => format!(
                    "residual {}  separable {}",
                    r,
                    if r.is_separable() { "yes" } else { "no" }
                ),
                None => "residual -".to_string(),
            };
            println!(
                "edge {}: ({},{}) -> ({},{})  slope {}  length {}  e {}  {}",
                i + 1,
                edge.start.0,
                edge.start.1,
                edge.end.0,
                edge.end.1,
                edge.slope_string(),
                edge.length,
                edge.ramification(),
                desc
            );
        }
        println!("lattice count: {}", count);
    }
    0
}

fn cmd_verify(n_max: u64, a_max: u64, json: bool) -> i32 {
    let report = match sweep(n_max, a_max) {
        Ok(report) => report,
        Err(e) => return usage_error(&e.to_string()),
    };
    if json {
        println!(
            "{}",
            serde_json::to_string(&report).expect("report serialization cannot fail")
        );
    } else {
        println!(
            "sweep: degrees 2..={}, radicand magnitudes 2..={}",
            report.degree_max, report.radicand_magnitude_max
        );
        println!("pairs considered: {}", report.pairs_considered);
        println!(
            "validated: {}  reducible: {}  hypothesis-rejected: {}",
            report.validated, report.rejected_reducible, report.rejected_hypothesis
        );
        println!("checks passed: {}", report.checks_passed);
        println!("failures: {}", report.failures.len());
        for f in &report.failures {
            println!(
                "FAIL n={} a={} prime={} check={} expected={} actual={}",
                f.degree,
                f.radicand,
                f.prime.as_deref().unwrap_or("-"),
                f.check,
                f.expected,
                f.actual
            );
        }
        println!("wall time: {} ms", report.wall_time_ms);
    }
    if report.passed() {
        0
    } else {
        2
    }
}

struct TableRow {
    a: BigInt,
    class: String,
    discriminant: FactoredInteger,
}

fn cmd_table(degree: u64, a_min_str: &str, a_max_str: &str, format: Format) -> i32 {
    let (a_min, a_max) = match (
        parse_bigint(a_min_str, "a_min"),
        parse_bigint(a_max_str, "a_max"),
    ) {
        (Ok(lo), Ok(hi)) => (lo, hi),
        (Err(e), _) | (_, Err(e)) => return usage_error(&e),
    };
    if degree < 2 {
        return usage_error(&Error::InvalidDegree(degree).to_string());
    }
    let mut rows = Vec::new();
    let mut a = a_min;
    while a <= a_max {
        if let Ok(field) = ValidatedPureField::new(degree, a.clone()) {
            match check_global_relation(degree, &a) {
                Ok(true) => {}
                _ => {
                    eprintln!(
                        "error: internal cross-check failure at a = {} (global identity)",
                        a
                    );
                    return 2;
                }
            }
            let residue = octic_residue(&a);
            let squarefree = field
                .radicand_primes()
                .iter()
                .all(|rp| rp.multiplicity == 1);
            let class = match octic_class_label(residue) {
                Some(label) if degree == 8 && squarefree => label.to_string(),
                _ => format!("{} (mod 16)", residue),
            };
            rows.push(TableRow {
                a: a.clone(),
                class,
                discriminant: field.discriminant(),
            });
        }
        a += 1;
    }
    match format {
        Format::Text => {
            let a_width = rows
                .iter()
                .map(|r| r.a.to_string().len())
                .chain(std::iter::once(1))
                .max()
                .unwrap();
            let class_width = rows
                .iter()
                .map(|r| r.class.len())
                .chain(std::iter::once(5))
                .max()
                .unwrap();
            println!("{:>a_width$}  {:<class_width$}  d_K", "a", "class");
            for r in rows {
                println!(
                    "{:>a_width$}  {:<class_width$}  {}",
                    r.a.to_string(),
                    r.class,
                    r.discriminant
                );
            }
        }
        Format::Csv => {
            println!("a,class,discriminant");
            for r in rows {
                println!("{},\"{}\",{}", r.a, r.class, r.discriminant.compact_string());
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "a": r.a.to_string(),
                        "class": r.class,
                        "discriminant": serde_json::to_value(ResultRepr::new(&r.discriminant, false))
                            .expect("result serialization cannot fail"),
                    })
                })
                .collect();
            let out = json!({
                "command": "table",
                "degree": degree,
                "rows": rows,
            });
            println!("{}", out);
        }
    }
    0
}
