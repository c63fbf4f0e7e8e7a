//! p-adic Newton polygons of monic integer polynomials: hull construction,
//! residual polynomials over F_p, separability, and the Ore lattice-point
//! count.

use crate::arith::{self, valuation_unchecked};
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{pow, One, Zero};
use std::fmt;

/// Monic polynomial over Z with nonzero constant term. `coefficients[i]`
/// holds the coefficient of `x^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coefficients: Vec<BigInt>) -> Result<Self> {
        if coefficients.len() < 2 || !coefficients.last().unwrap().is_one() {
            return Err(Error::NotMonic);
        }
        if coefficients[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(IntPolynomial { coefficients })
    }

    /// The polynomial `x^n - a`.
    pub fn xn_minus_a(n: u64, a: &BigInt) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotMonic);
        }
        let n = usize::try_from(n).map_err(|_| Error::DegreeTooLarge(u64::MAX))?;
        let mut coefficients = vec![BigInt::zero(); n + 1];
        coefficients[0] = -a.clone();
        coefficients[n] = BigInt::one();
        Self::new(coefficients)
    }

    pub fn degree(&self) -> u64 {
        (self.coefficients.len() - 1) as u64
    }

    pub fn coefficient(&self, i: u64) -> &BigInt {
        &self.coefficients[i as usize]
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }
}

/// One edge of a Newton polygon. The slope is the exact reduced fraction
/// `slope_num / slope_den`; `slope_den` is the least positive `e` with
/// `e * slope` integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolygonEdge {
    pub start: (u64, u64),
    pub end: (u64, u64),
    pub slope_num: u64,
    pub slope_den: u64,
    pub length: u64,
}

impl PolygonEdge {
    fn between(start: (u64, u64), end: (u64, u64)) -> Self {
        let run = end.0 - start.0;
        let rise = end.1 - start.1;
        let g = rise.gcd(&run).max(1);
        PolygonEdge {
            start,
            end,
            slope_num: rise / g,
            slope_den: if rise == 0 { 1 } else { run / g },
            length: run,
        }
    }

    pub fn rise(&self) -> u64 {
        self.end.1 - self.start.1
    }

    /// Ramification index of the edge.
    pub fn ramification(&self) -> u64 {
        self.slope_den
    }

    pub fn slope_string(&self) -> String {
        format!("{}/{}", self.slope_num, self.slope_den)
    }
}

/// Newton polygon of a polynomial with respect to a prime: the lower convex
/// hull of the points `(j, v_p(c_{n-j}))`, with collinear interior points
/// dropped from the vertex list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    prime: BigUint,
    vertices: Vec<(u64, u64)>,
    edges: Vec<PolygonEdge>,
}

impl NewtonPolygon {
    /// Build the p-Newton polygon of a monic polynomial with nonzero
    /// constant term. Zero coefficients contribute no point.
    pub fn build(g: &IntPolynomial, p: &BigUint) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p.clone()));
        }
        let n = g.degree();
        let mut points = Vec::with_capacity(g.coefficients().len());
        for j in 0..=n {
            let c = g.coefficient(n - j);
            if !c.is_zero() {
                points.push((j, valuation_unchecked(c, p)));
            }
        }
        Self::from_vertex_points(p.clone(), lower_hull(&points))
    }

    /// Assemble a polygon directly from its vertex list.
    pub fn from_vertices(prime: BigUint, vertices: Vec<(u64, u64)>) -> Result<Self> {
        if !arith::is_prime(&prime) {
            return Err(Error::NotPrime(prime));
        }
        Self::from_vertex_points(prime, vertices)
    }

    fn from_vertex_points(prime: BigUint, vertices: Vec<(u64, u64)>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidVertices("need at least two vertices".into()));
        }
        let mut edges = Vec::with_capacity(vertices.len() - 1);
        for w in vertices.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(Error::InvalidVertices(
                    "abscissas must strictly increase".into(),
                ));
            }
            if w[1].1 < w[0].1 {
                return Err(Error::InvalidVertices(
                    "ordinates must not decrease".into(),
                ));
            }
            edges.push(PolygonEdge::between(w[0], w[1]));
        }
        for pair in edges.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            // a.num/a.den < b.num/b.den, cross-multiplied
            if (a.slope_num as u128) * (b.slope_den as u128)
                >= (b.slope_num as u128) * (a.slope_den as u128)
            {
                return Err(Error::InvalidVertices(
                    "slopes must strictly increase".into(),
                ));
            }
        }
        Ok(NewtonPolygon {
            prime,
            vertices,
            edges,
        })
    }

    pub fn prime(&self) -> &BigUint {
        &self.prime
    }

    pub fn vertices(&self) -> &[(u64, u64)] {
        &self.vertices
    }

    pub fn edges(&self) -> &[PolygonEdge] {
        &self.edges
    }

    /// Abscissa of the last vertex.
    pub fn degree(&self) -> u64 {
        self.vertices.last().unwrap().0
    }

    /// Ordinate of the last vertex.
    pub fn height(&self) -> u64 {
        self.vertices.last().unwrap().1
    }
}

/// Lower convex hull of points sorted by strictly increasing abscissa.
/// Collinear interior points are dropped.
fn lower_hull(points: &[(u64, u64)]) -> Vec<(u64, u64)> {
    let mut hull: Vec<(u64, u64)> = Vec::with_capacity(points.len());
    for &q in points {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b.0 - a.0) as i128 * (q.1 as i128 - a.1 as i128)
                - (b.1 as i128 - a.1 as i128) * (q.0 - a.0) as i128;
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(q);
    }
    hull
}

/// Residual polynomial of a polygon edge, reduced and normalized monic
/// over F_p. `coefficients[k]` holds the coefficient of `Y^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualPolynomial {
    prime: BigUint,
    coefficients: Vec<BigUint>,
}

impl ResidualPolynomial {
    /// Residual polynomial of `edge` within the p-Newton polygon of `g`:
    /// the edge is translated to the origin and the coefficients of `g`
    /// sitting on it are divided by the exact power of `p` the edge
    /// prescribes. Requires a positive slope.
    pub fn for_edge(g: &IntPolynomial, p: &BigUint, edge: &PolygonEdge) -> Result<Self> {
        if edge.slope_num == 0 {
            return Err(Error::NonPositiveSlope);
        }
        let e = edge.slope_den;
        let h = edge.slope_num; // rise per e columns
        let t = edge.length / e;
        let n = g.degree();
        let (x0, y0) = edge.start;
        let mut coefficients = vec![BigUint::zero(); (t + 1) as usize];
        for j in 0..=t {
            let x = x0 + e * j;
            let line = y0 + h * j;
            let c = g.coefficient(n - x);
            if c.is_zero() {
                continue;
            }
            let v = valuation_unchecked(c, p);
            if v < line {
                return Err(Error::HullViolation { abscissa: x });
            }
            if v > line {
                continue;
            }
            let reduced = c / BigInt::from(pow(p.clone(), line as usize));
            coefficients[(t - j) as usize] = residue(&reduced, p);
        }
        // Both endpoints are hull vertices, so leading and constant
        // residues are units.
        debug_assert!(!coefficients[t as usize].is_zero());
        debug_assert!(!coefficients[0].is_zero());
        let lead = coefficients[t as usize].clone();
        if !lead.is_one() {
            let inv = mod_inverse(&lead, p);
            for c in &mut coefficients {
                *c = &*c * &inv % p;
            }
        }
        Ok(ResidualPolynomial {
            prime: p.clone(),
            coefficients,
        })
    }

    pub fn prime(&self) -> &BigUint {
        &self.prime
    }

    pub fn degree(&self) -> u64 {
        (self.coefficients.len() - 1) as u64
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    /// True iff gcd(T, T') is constant over F_p, i.e. T has no repeated
    /// irreducible factor.
    pub fn is_separable(&self) -> bool {
        let p = &self.prime;
        let d = poly_derivative(&self.coefficients, p);
        let g = poly_gcd(self.coefficients.clone(), d, p);
        g.len() == 1
    }
}

impl fmt::Display for ResidualPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in (0..self.coefficients.len()).rev() {
            let c = &self.coefficients[k];
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c.is_one()) {
                (0, _) => write!(f, "{}", c)?,
                (1, true) => write!(f, "Y")?,
                (1, false) => write!(f, "{}*Y", c)?,
                (_, true) => write!(f, "Y^{}", k)?,
                (_, false) => write!(f, "{}*Y^{}", c, k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn residue(x: &BigInt, p: &BigUint) -> BigUint {
    x.mod_floor(&BigInt::from(p.clone()))
        .to_biguint()
        .expect("floor residue is non-negative")
}

fn mod_inverse(a: &BigUint, p: &BigUint) -> BigUint {
    // Fermat inverse; p is prime and a is a unit.
    a.modpow(&(p - 2u32), p)
}

fn poly_trim(mut v: Vec<BigUint>) -> Vec<BigUint> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_derivative(c: &[BigUint], p: &BigUint) -> Vec<BigUint> {
    let d = c
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, coeff)| BigUint::from(k) * coeff % p)
        .collect();
    poly_trim(d)
}

/// Remainder of `a` modulo `b` over F_p; `b` must be nonzero.
fn poly_rem(a: Vec<BigUint>, b: &[BigUint], p: &BigUint) -> Vec<BigUint> {
    debug_assert!(!b.is_empty());
    let mut r = poly_trim(a);
    let lead_inv = mod_inverse(b.last().unwrap(), p);
    while r.len() >= b.len() {
        let factor = r.last().unwrap() * &lead_inv % p;
        let shift = r.len() - b.len();
        if !factor.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                let sub = &factor * bc % p;
                let idx = shift + i;
                r[idx] = (&r[idx] + p - sub) % p;
            }
        }
        r.pop();
        r = poly_trim(r);
    }
    r
}

fn poly_gcd(mut a: Vec<BigUint>, mut b: Vec<BigUint>, p: &BigUint) -> Vec<BigUint> {
    a = poly_trim(a);
    b = poly_trim(b);
    while !b.is_empty() {
        let r = poly_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Lattice points with positive integer coordinates inside or on the
/// triangle `(0,0), (n,0), (n,t)` but not on the line `x = n`:
/// `[(n-1)(t-1) + gcd(n,t) - 1] / 2`.
pub fn triangle_count(n: u64, t: u64) -> u64 {
    if n == 0 || t == 0 {
        return 0;
    }
    let g = n.gcd(&t) as u128;
    let count = ((n as u128 - 1) * (t as u128 - 1) + g - 1) / 2;
    u64::try_from(count).expect("triangle count fits in u64")
}

/// Number of lattice points `(x, y)` with `x >= 1`, `y >= 1`, `x < n`
/// lying on or below the polygon path. Assembled per edge from
/// [`triangle_count`]; the brute-force oracle lives in the verify module.
pub fn lattice_count(polygon: &NewtonPolygon) -> Result<u64> {
    if polygon.vertices()[0] != (0, 0) {
        return Err(Error::FirstVertexNotOrigin);
    }
    let mut total: u128 = 0;
    for edge in polygon.edges() {
        // Columns x0+1 ..= x1: floor heights sum to
        // l*y0 + triangle_count(l, rise) + rise.
        total += edge.length as u128 * edge.start.1 as u128;
        let rise = edge.rise();
        if rise > 0 {
            total += triangle_count(edge.length, rise) as u128 + rise as u128;
        }
    }
    // The last column x = n is excluded.
    total -= polygon.height() as u128;
    Ok(u64::try_from(total).expect("lattice count fits in u64"))
}

/// Exact power of `p` dividing the index `[A_K : Z[beta]]` for a root
/// `beta` of `g`, by Ore's theorem: every edge's residual polynomial must
/// be separable, and then the count of positive lattice points on or
/// below the polygon (excluding the final column) is the valuation.
///
/// The caller guarantees `g` irreducible and `g = x^n (mod p)`.
pub fn ore_index_valuation(g: &IntPolynomial, p: &BigUint) -> Result<u64> {
    let polygon = NewtonPolygon::build(g, p)?;
    for (i, edge) in polygon.edges().iter().enumerate() {
        let residual = ResidualPolynomial::for_edge(g, p, edge)?;
        if !residual.is_separable() {
            return Err(Error::OreRegularityFailure { edge: i });
        }
    }
    lattice_count(&polygon)
}
