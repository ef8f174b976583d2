//! Exact binomial coefficients and complete homogeneous symmetric functions.
//!
//! `W_δ^{(k)}(x_1, …, x_k)` is the sum of all monomials of total degree `δ`
//! in `k` variables. It is evaluated with the one-variable-at-a-time
//! recurrence `W_j^{(k)} = x_k W_{j-1}^{(k)} + W_j^{(k-1)}`, so a full table
//! `W_0..=W_δ` costs `O(kδ)` big-integer multiplications.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A nonempty vector of nonnegative arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::TooFewVariables { min: 1, got: 0 });
        }
        if let Some(neg) = entries.iter().find(|x| x.is_negative()) {
            return Err(Error::NegativeEntry(neg.to_string()));
        }
        Ok(Self(entries))
    }

    pub fn from_u64s(entries: &[u64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(x_1 - 1, …, x_k - 1)`; fails if some entry is zero.
    pub fn shifted_down(&self) -> Result<Self> {
        if let Some(pos) = self.0.iter().position(|x| x.is_zero()) {
            return Err(Error::ZeroDegree(pos));
        }
        Ok(Self(self.0.iter().map(|x| x - 1).collect()))
    }

    /// The first `len - 1` entries, or `None` for a single entry.
    pub fn without_last(&self) -> Option<Self> {
        (self.0.len() > 1).then(|| Self(self.0[..self.0.len() - 1].to_vec()))
    }

    pub fn last(&self) -> &BigInt {
        self.0.last().expect("IntVector is nonempty")
    }

    pub fn is_all_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

/// `C(n, m)`. Zero whenever `m < 0`, `m > n` or `n < 0`.
pub fn binomial(n: i64, m: i64) -> BigInt {
    if n < 0 || m < 0 || m > n {
        return BigInt::zero();
    }
    let m = m.min(n - m);
    let mut acc = BigInt::one();
    for i in 0..m {
        // acc = C(n, i) here, and C(n, i) * (n - i) is divisible by i + 1
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `[W_0, W_1, …, W_max]` at `xs`. Empty when `max < 0`.
pub fn wronski_table(max: i64, xs: &IntVector) -> Vec<BigInt> {
    if max < 0 {
        return Vec::new();
    }
    let len = max as usize + 1;
    let mut row = vec![BigInt::zero(); len];
    row[0] = BigInt::one();
    // W^{(0)} is 1 in degree 0 and 0 elsewhere; each variable applies the
    // recurrence in increasing degree, reusing the freshly updated entry.
    for x in xs.entries() {
        for j in 1..len {
            let prev = &row[j - 1] * x;
            row[j] += prev;
        }
    }
    row
}

/// `W_δ^{(k)}(xs)`; 1 for `δ = 0` and 0 for `δ < 0`.
pub fn wronski(delta: i64, xs: &IntVector) -> BigInt {
    if delta < 0 {
        return BigInt::zero();
    }
    wronski_table(delta, xs)
        .pop()
        .expect("table has delta + 1 entries")
}

/// `W_p^{(k)}(d_1 - 1, …, d_k - 1)` evaluated through Todd's alternating sum
/// `Σ_{i=0}^{p} (-1)^{p-i} C(k+p-1, p-i) W_i^{(k)}(d_1, …, d_k)`.
pub fn wronski_shifted_via_todd(p: i64, ds: &IntVector) -> Result<BigInt> {
    if let Some(pos) = ds.entries().iter().position(Zero::is_zero) {
        return Err(Error::ZeroDegree(pos));
    }
    if p < 0 {
        return Ok(BigInt::zero());
    }
    let k = ds.len() as i64;
    let table = wronski_table(p, ds);
    let mut sum = BigInt::zero();
    for (i, w) in table.iter().enumerate() {
        let i = i as i64;
        let term = binomial(k + p - 1, p - i) * w;
        if (p - i) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// `Σ_{δ=0}^{j} (-1)^δ W_δ^{(k)}(xs)`; the empty sum for `j < 0`.
pub fn alternating_wronski_sum(j: i64, xs: &IntVector) -> BigInt {
    alternating_partial_sums(j, xs).pop().unwrap_or_default()
}

/// All partial sums `Σ_{δ=0}^{i} (-1)^δ W_δ` for `i = 0..=j`.
pub fn alternating_partial_sums(j: i64, xs: &IntVector) -> Vec<BigInt> {
    let mut acc = BigInt::zero();
    wronski_table(j, xs)
        .into_iter()
        .enumerate()
        .map(|(delta, w)| {
            if delta % 2 == 0 {
                acc += w;
            } else {
                acc -= w;
            }
            acc.clone()
        })
        .collect()
}

/// Checks `W_δ^{(k)}(x_1..x_k) = W_δ^{(k+1)}(x_1..x_{k+1}) - x_{k+1} W_{δ-1}^{(k+1)}(x_1..x_{k+1})`
/// where `xs_plus` carries all `k + 1` variables.
pub fn reduction_identity_check(delta: i64, xs_plus: &IntVector) -> Result<bool> {
    let xs = xs_plus.without_last().ok_or(Error::TooFewVariables {
        min: 2,
        got: xs_plus.len(),
    })?;
    let lhs = wronski(delta, &xs);
    let rhs = wronski(delta, xs_plus) - xs_plus.last() * wronski(delta - 1, xs_plus);
    Ok(lhs == rhs)
}
