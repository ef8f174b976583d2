//! Lower bound on the foliation degree for odd-dimensional invariant
//! complete intersections, and the ratio machinery behind it.
//!
//! With `W_j = W_j(d_1 - 1, …, d_k - 1)` and `m = dim V`:
//!
//! - `α = min_{1≤j≤m} W_j / W_{j-1}`, attained at `j = m`, equals `ϱ_m / ϱ_{m-1}`;
//! - `β = min{ W_1, min_{2≤j≤m} (W_j - W_{j-1}) / (W_{j-1} - W_{j-2}) }`;
//! - `α ≥ β > α - 1`, and for odd `m` every integer `d < β` gives `N(d) ≤ 0`.
//!
//! So an invariant `V` with positive count forces `d ≥ ⌈α⌉`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::chern::{CompleteIntersectionSpec, FoliationDegree};
use crate::invariants::sing_count_wronski;
use crate::symfun::wronski_table;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(m: u32) -> Self {
        if m % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

/// Minimum over `2 ≤ δ ≤ m` of the difference ratios, or vacuous when the
/// range is empty (curves) or every term had a zero denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Threshold {
    Vacuous,
    Value(BigRational),
}

/// `β` together with the indices `j` whose ratio had a zero denominator and
/// was therefore treated as `+∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Beta {
    pub value: BigRational,
    pub skipped: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub d: u32,
    pub alpha: BigRational,
    pub beta: BigRational,
    pub beta_skipped: Vec<usize>,
    pub lemma2_threshold: Threshold,
    pub parity: Parity,
    pub applicable: bool,
    /// `⌈α⌉` clamped to 2, when the bound applies.
    pub min_degree: Option<u32>,
    pub passes: Option<bool>,
    pub count: BigInt,
}

fn shifted_table(spec: &CompleteIntersectionSpec) -> Result<Vec<BigInt>> {
    if spec.is_linear() {
        return Err(Error::LinearSubspace);
    }
    Ok(wronski_table(
        spec.dim() as i64,
        &spec.shifted_degree_vector(),
    ))
}

/// `α = W_m / W_{m-1} = ϱ_m / ϱ_{m-1}`.
pub fn alpha(spec: &CompleteIntersectionSpec) -> Result<BigRational> {
    let w = shifted_table(spec)?;
    let m = spec.dim() as usize;
    Ok(BigRational::new(w[m].clone(), w[m - 1].clone()))
}

/// `min_{1≤j≤m} W_j / W_{j-1}` taken literally over every `j`.
pub fn alpha_by_minimum(spec: &CompleteIntersectionSpec) -> Result<BigRational> {
    let w = shifted_table(spec)?;
    Ok((1..w.len())
        .map(|j| BigRational::new(w[j].clone(), w[j - 1].clone()))
        .min()
        .expect("dimension is at least 1"))
}

fn difference_ratios(w: &[BigInt]) -> (Vec<BigRational>, Vec<usize>) {
    let mut ratios = Vec::new();
    let mut skipped = Vec::new();
    for j in 2..w.len() {
        let den = &w[j - 1] - &w[j - 2];
        if den.is_zero() {
            skipped.push(j);
        } else {
            ratios.push(BigRational::new(&w[j] - &w[j - 1], den));
        }
    }
    (ratios, skipped)
}

pub fn beta(spec: &CompleteIntersectionSpec) -> Result<Beta> {
    let w = shifted_table(spec)?;
    let (ratios, skipped) = difference_ratios(&w);
    let value = ratios
        .into_iter()
        .chain(std::iter::once(BigRational::from_integer(w[1].clone())))
        .min()
        .expect("W_1 term always present");
    Ok(Beta { value, skipped })
}

pub fn lemma2_threshold(spec: &CompleteIntersectionSpec) -> Result<Threshold> {
    let w = shifted_table(spec)?;
    let (ratios, _) = difference_ratios(&w);
    Ok(match ratios.into_iter().min() {
        Some(v) => Threshold::Value(v),
        None => Threshold::Vacuous,
    })
}

fn ceil(r: &BigRational) -> BigInt {
    let (q, rem) = r.numer().div_mod_floor(r.denom());
    if rem.is_zero() {
        q
    } else {
        q + 1
    }
}

/// Smallest foliation degree compatible with an invariant odd-dimensional `V`.
pub fn theorem2_min_degree(spec: &CompleteIntersectionSpec) -> Result<u32> {
    if Parity::of(spec.dim()) == Parity::Even {
        return Err(Error::EvenDimension(spec.dim()));
    }
    let a = alpha(spec)?;
    let min = ceil(&a).max(BigInt::from(2));
    u32::try_from(min).map_err(|e| Error::InvalidParameter(e.to_string()))
}

/// `(1 + d/(n-1))^{n-1}`: upper bound on the degree of an invariant complete
/// intersection curve in `ℙⁿ`.
pub fn curve_degree_bound(n: u32, d: FoliationDegree) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n} < 2")));
    }
    let base = BigRational::one() + BigRational::new(d.get().into(), (n - 1).into());
    Ok(num_traits::pow(base, (n - 1) as usize))
}

/// `d + 1`: upper bound on the degree of an invariant odd-dimensional hypersurface.
pub fn hypersurface_degree_bound(d: FoliationDegree) -> BigInt {
    BigInt::from(d.get()) + 1
}

pub fn feasibility_report(
    spec: &CompleteIntersectionSpec,
    d: FoliationDegree,
) -> Result<BoundReport> {
    let alpha = alpha(spec)?;
    let beta = beta(spec)?;
    let parity = Parity::of(spec.dim());
    let applicable = parity == Parity::Odd;
    let min_degree = if applicable {
        Some(theorem2_min_degree(spec)?)
    } else {
        None
    };
    Ok(BoundReport {
        d: d.get(),
        alpha,
        beta: beta.value,
        beta_skipped: beta.skipped,
        lemma2_threshold: lemma2_threshold(spec)?,
        parity,
        applicable,
        min_degree,
        passes: min_degree.map(|m| d.get() >= m),
        count: sing_count_wronski(spec, d),
    })
}

impl BoundReport {
    pub fn count_positive(&self) -> bool {
        self.count.is_positive()
    }
}
