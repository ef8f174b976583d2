//! Chern-class arithmetic of complete intersections in `ℙⁿ`.
//!
//! Everything lives in the truncated ring `ℚ[h]/(h^{m+1})` where `h` is the
//! hyperplane class restricted to `V` and `m = n - k` is the dimension.
//! Integration over `V` reads the coefficient of `h^m` and multiplies by the
//! degree `d_1⋯d_k`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::symfun::{binomial, wronski_table, IntVector};
use crate::{Error, Result};

/// Ambient dimension `n` and multidegree `(d_1, …, d_k)` of a smooth
/// complete intersection `V ⊂ ℙⁿ` of positive dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompleteIntersectionSpec {
    n: u32,
    degrees: Vec<u32>,
}

impl CompleteIntersectionSpec {
    pub fn new(n: u32, degrees: Vec<u32>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec(format!("ambient dimension {n} < 2")));
        }
        let k = degrees.len();
        if k == 0 || k as u32 > n - 1 {
            return Err(Error::InvalidSpec(format!(
                "need 1 <= k <= n - 1 equations, got k = {k} for n = {n}"
            )));
        }
        if let Some(pos) = degrees.iter().position(|&d| d == 0) {
            return Err(Error::ZeroDegree(pos));
        }
        Ok(Self { n, degrees })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn codim(&self) -> u32 {
        self.degrees.len() as u32
    }

    pub fn dim(&self) -> u32 {
        self.n - self.codim()
    }

    /// `d⁰(V) = d_1⋯d_k`.
    pub fn total_degree(&self) -> BigInt {
        total_degree(&self.degrees)
    }

    pub fn degree_vector(&self) -> IntVector {
        IntVector::new(self.degrees.iter().map(|&d| BigInt::from(d)).collect())
            .expect("validated degrees")
    }

    /// `(d_1 - 1, …, d_k - 1)`.
    pub fn shifted_degree_vector(&self) -> IntVector {
        self.degree_vector()
            .shifted_down()
            .expect("degrees are >= 1")
    }

    pub fn is_linear(&self) -> bool {
        self.degrees.iter().all(|&d| d == 1)
    }
}

impl fmt::Display for CompleteIntersectionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
        write!(f, "V({}) ⊂ P^{}", ds.join(","), self.n)
    }
}

/// Degree `d ≥ 2` of a one-dimensional foliation of `ℙⁿ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FoliationDegree(u32);

impl FoliationDegree {
    pub fn new(d: i64) -> Result<Self> {
        if d < 2 || d > u32::MAX as i64 {
            return Err(Error::FoliationDegreeTooSmall(d));
        }
        Ok(Self(d as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// A polynomial in `h` with rational coefficients, truncated above `h^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HSeries {
    coeffs: Vec<BigRational>,
}

impl HSeries {
    /// Pads with zeros or drops terms so that exactly `order + 1` coefficients remain.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I, order: usize) -> Self {
        Self::new(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
            order,
        )
    }

    pub fn one(order: usize) -> Self {
        Self::from_integers([1], order)
    }

    /// `1 + a·h`.
    pub fn linear(a: &BigInt, order: usize) -> Self {
        Self::new(
            vec![BigRational::one(), BigRational::from_integer(a.clone())],
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn top(&self) -> &BigRational {
        self.coeffs
            .last()
            .expect("series has order + 1 coefficients")
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let m = self.order();
        let mut out = vec![BigRational::zero(); m + 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs[..=m - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self { coeffs: out })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse up to the truncation order.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let m = self.order();
        let mut inv = vec![BigRational::zero(); m + 1];
        inv[0] = c0.recip();
        for i in 1..=m {
            let mut acc = BigRational::zero();
            for j in 1..=i {
                acc += &self.coeffs[j] * &inv[i - j];
            }
            inv[i] = -acc * &inv[0];
        }
        Ok(Self { coeffs: inv })
    }

    /// Coefficients as integers, or an error naming the first fractional one.
    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral(c.to_string()))
                }
            })
            .collect()
    }
}

impl Add for &HSeries {
    type Output = HSeries;
    fn add(self, rhs: Self) -> HSeries {
        self.try_add(rhs).expect("series orders match")
    }
}

impl Sub for &HSeries {
    type Output = HSeries;
    fn sub(self, rhs: Self) -> HSeries {
        self.try_add(&-rhs).expect("series orders match")
    }
}

impl Neg for &HSeries {
    type Output = HSeries;
    fn neg(self) -> HSeries {
        HSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &HSeries {
    type Output = HSeries;
    fn mul(self, rhs: Self) -> HSeries {
        self.try_mul(rhs).expect("series orders match")
    }
}

pub fn series_invert(s: &HSeries) -> Result<HSeries> {
    s.invert()
}

fn total_degree(degrees: &[u32]) -> BigInt {
    degrees.iter().map(|&d| BigInt::from(d)).product()
}

/// Total Chern class `(1+h)^{n+1} / Π(1 + d_ℓ h)` of the complete
/// intersection of the given degrees in `ℙⁿ`, truncated at its dimension.
/// Accepts the zero-dimensional case so hyperplane sections can be cut all
/// the way down to points.
fn total_chern_raw(n: u32, degrees: &[u32]) -> HSeries {
    let order = (n - degrees.len() as u32) as usize;
    let ambient = HSeries::linear(&BigInt::one(), order).pow(n + 1);
    let denom = degrees.iter().fold(HSeries::one(order), |acc, &d| {
        &acc * &HSeries::linear(&d.into(), order)
    });
    let c = &ambient * &denom.invert().expect("constant term is 1");
    if let Err(e) = c.to_integers() {
        panic!("total Chern class of degrees {degrees:?} in P^{n}: {e}");
    }
    c
}

/// Total Chern class `c(V) = 1 + c_1 h + ⋯ + c_m h^m` by series division.
pub fn total_chern_ci(spec: &CompleteIntersectionSpec) -> HSeries {
    total_chern_raw(spec.n, &spec.degrees)
}

/// The integer Chern numbers `c_0, …, c_m` (coefficients of `h^i`).
pub fn chern_classes(spec: &CompleteIntersectionSpec) -> Vec<BigInt> {
    total_chern_ci(spec)
        .to_integers()
        .expect("integrality checked on construction")
}

/// `c_i = Σ_{δ=0}^{i} (-1)^δ C(n+1, i-δ) W_δ(d_1..d_k)`, the binomial/Wronski
/// expansion of the same quotient; used as a second route to [`chern_classes`].
pub fn chern_classes_closed_form(spec: &CompleteIntersectionSpec) -> Vec<BigInt> {
    let m = spec.dim() as i64;
    let w = wronski_table(m, &spec.degree_vector());
    (0..=m)
        .map(|i| {
            (0..=i)
                .map(|delta| {
                    let t = binomial(spec.n as i64 + 1, i - delta) * &w[delta as usize];
                    if delta % 2 == 0 {
                        t
                    } else {
                        -t
                    }
                })
                .sum()
        })
        .collect()
}

fn euler_char_raw(n: u32, degrees: &[u32]) -> BigInt {
    total_chern_raw(n, degrees).top().to_integer() * total_degree(degrees)
}

/// `χ(V) = ∫_V c_m(V)`.
pub fn euler_char(spec: &CompleteIntersectionSpec) -> BigInt {
    euler_char_raw(spec.n, &spec.degrees)
}

/// `χ(V_{[q]})`: Euler characteristic after cutting by `q` generic
/// hyperplanes, i.e. the same multidegree in `ℙ^{n-q}`.
pub fn chi_section(spec: &CompleteIntersectionSpec, q: u32) -> Result<BigInt> {
    if q > spec.dim() {
        return Err(Error::OutOfRange {
            what: "hyperplane section",
            index: q as i64,
            max: spec.dim() as i64,
        });
    }
    Ok(euler_char_raw(spec.n - q, &spec.degrees))
}

/// `[χ(V_{[0]}), χ(V_{[1]}), …, χ(V_{[m]})]`.
pub fn chi_sections(spec: &CompleteIntersectionSpec) -> Vec<BigInt> {
    (0..=spec.dim())
        .map(|q| chi_section(spec, q).expect("q within range"))
        .collect()
}

/// `∫_V c_m(TV ⊗ O(d-1))`, with `c_m` expanded as
/// `Σ_j [Σ_{i≤j} (-1)^{j-i} C(m-i, j-i) c_i(V) h^{m-i}] d^{m-j}`.
pub fn twisted_top_chern_count(spec: &CompleteIntersectionSpec, d: FoliationDegree) -> BigInt {
    let m = spec.dim() as i64;
    let c = chern_classes(spec);
    let d = BigInt::from(d.get());
    let mut total = BigInt::zero();
    for j in 0..=m {
        let mut bracket = BigInt::zero();
        for i in 0..=j {
            let t = binomial(m - i, j - i) * &c[i as usize];
            if (j - i) % 2 == 0 {
                bracket += t;
            } else {
                bracket -= t;
            }
        }
        total += bracket * d.pow((m - j) as u32);
    }
    total * spec.total_degree()
}
