use num_bigint::BigUint;
use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the crate, from bad arguments to
/// violated mathematical preconditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `v_p(0)` is undefined.
    ZeroValuation,
    /// A prime-typed argument failed the primality test.
    NotPrime(BigUint),
    /// Argument must be a positive integer.
    NonPositive,
    /// Binomial argument outside `1 ..= p^s`.
    BinomialOutOfRange { s: u32, u: u64 },
    /// `a^(p-1) = 1` exactly, so every power of `p` divides `a^(p-1) - 1`.
    InfiniteValuation,
    /// The prime divides the base where the operation requires otherwise.
    PrimeDividesBase(BigUint),
    /// Polynomial constant term is zero.
    ZeroConstantTerm,
    /// Polynomial is not monic.
    NotMonic,
    /// Residual polynomials are only defined for edges of positive slope.
    NonPositiveSlope,
    /// A coefficient point lies strictly below its polygon edge; the hull
    /// construction guarantees this never happens.
    HullViolation { abscissa: u64 },
    /// A residual polynomial has a repeated irreducible factor, so the
    /// lattice-point count does not equal the index valuation.
    OreRegularityFailure { edge: usize },
    /// Lattice counting requires the polygon to start at the origin.
    FirstVertexNotOrigin,
    /// Vertex lists must have strictly increasing abscissas and strictly
    /// increasing, non-negative slopes.
    InvalidVertices(String),
    /// Field degree must be at least 2.
    InvalidDegree(u64),
    /// Degrees beyond 2^32 are not supported.
    DegreeTooLarge(u64),
    /// The radicand must be nonzero.
    ZeroRadicand,
    /// The radicand must differ from 0, 1 and -1.
    UnitRadicand,
    /// `x^n - a` is reducible over the rationals.
    Reducible,
    /// `v_p(a)` is positive and divisible by `p` for a prime `p` dividing
    /// the degree; the closed forms do not apply.
    HypothesisViolation { prime: u64 },
    /// The closed-form index valuation came out non-integral, which means
    /// the arguments were not of the shape `(n, v_q(a), gcd(n, v_q(a)))`.
    NonIntegralIndex { degree: u64, multiplicity: u64, gcd: u64 },
    /// Vertex prediction is defined only for `r >= 1`.
    VertexPredictionRange,
    /// A squarefree radicand is required.
    NotSquarefree { prime: BigUint },
    /// Sweep bounds must both be at least 2.
    InvalidSweepRange,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroValuation => write!(f, "valuation of zero undefined"),
            Error::NotPrime(p) => write!(f, "{} is not prime", p),
            Error::NonPositive => write!(f, "argument must be a positive integer"),
            Error::BinomialOutOfRange { s, u } => {
                write!(f, "binomial argument {} outside 1..=p^{}", u, s)
            }
            Error::InfiniteValuation => write!(f, "infinite valuation: a^(p-1) equals 1"),
            Error::PrimeDividesBase(p) => write!(f, "prime {} divides the base", p),
            Error::ZeroConstantTerm => write!(f, "polynomial constant term is zero"),
            Error::NotMonic => write!(f, "polynomial is not monic"),
            Error::NonPositiveSlope => write!(f, "edge slope must be positive"),
            Error::HullViolation { abscissa } => {
                write!(f, "internal: coefficient at abscissa {} lies below the polygon", abscissa)
            }
            Error::OreRegularityFailure { edge } => {
                write!(f, "Ore regularity fails: residual polynomial of edge {} is not separable", edge)
            }
            Error::FirstVertexNotOrigin => write!(f, "polygon does not start at the origin"),
            Error::InvalidVertices(msg) => write!(f, "invalid vertex list: {}", msg),
            Error::InvalidDegree(n) => write!(f, "degree must be at least 2 (got {})", n),
            Error::DegreeTooLarge(n) => write!(f, "degree {} exceeds the supported bound 2^32", n),
            Error::ZeroRadicand => write!(f, "radicand must be nonzero"),
            Error::UnitRadicand => write!(f, "radicand must differ from 0, 1 and -1"),
            Error::Reducible => write!(f, "x^n - a is reducible over Q"),
            Error::HypothesisViolation { prime } => {
                write!(f, "hypothesis violation at p = {}: v_p(a) is divisible by p", prime)
            }
            Error::NonIntegralIndex { degree, multiplicity, gcd } => write!(
                f,
                "internal: non-integral index valuation for (n, t, m) = ({}, {}, {})",
                degree, multiplicity, gcd
            ),
            Error::VertexPredictionRange => write!(f, "vertex prediction defined only for r >= 1"),
            Error::NotSquarefree { prime } => {
                write!(f, "radicand is not squarefree at {}", prime)
            }
            Error::InvalidSweepRange => write!(f, "sweep bounds must both be at least 2"),
        }
    }
}

impl std::error::Error for Error {}
