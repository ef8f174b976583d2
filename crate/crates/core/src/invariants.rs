//! Polar classes and the singularity-count polynomial.
//!
//! The number of singular points of a foliation of degree `d` that leaves `V`
//! invariant (nondegenerately) is a polynomial in `d` of degree `m = dim V`.
//! It is computed here in two ways: from alternating sums of polar classes
//! (Wronski form) and from Euler characteristics of successive hyperplane
//! sections (Euler form). [`crate::chern::twisted_top_chern_count`] is the
//! third, Chern-class route.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::chern::{self, CompleteIntersectionSpec, FoliationDegree};
use crate::symfun::{alternating_partial_sums, binomial, wronski_table};
use crate::{Error, Result};

/// `(ϱ_0, …, ϱ_m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarClasses {
    rho: Vec<BigInt>,
}

impl PolarClasses {
    pub fn as_slice(&self) -> &[BigInt] {
        &self.rho
    }

    pub fn dim(&self) -> usize {
        self.rho.len() - 1
    }

    pub fn get(&self, j: usize) -> Result<&BigInt> {
        self.rho.get(j).ok_or(Error::OutOfRange {
            what: "polar class",
            index: j as i64,
            max: self.dim() as i64,
        })
    }

    /// `Σ_{i≤j} (-1)^i ϱ_i`.
    pub fn alternating_sum(&self, j: usize) -> Result<BigInt> {
        self.get(j)?;
        Ok(self.rho[..=j]
            .iter()
            .enumerate()
            .map(|(i, r)| if i % 2 == 0 { r.clone() } else { -r })
            .sum())
    }
}

/// `ϱ_j = (d_1⋯d_k) W_j(d_1 - 1, …, d_k - 1)`.
pub fn polar_classes_severi_todd(spec: &CompleteIntersectionSpec) -> PolarClasses {
    let deg = spec.total_degree();
    let rho = wronski_table(spec.dim() as i64, &spec.shifted_degree_vector())
        .into_iter()
        .map(|w| w * &deg)
        .collect();
    PolarClasses { rho }
}

/// `ϱ_j = ∫_V Σ_{i≤j} (-1)^i C(m+1-i, j-i) c_i(V) h^{m-i}`, the degree of
/// the polar locus computed from the Chern classes.
pub fn polar_classes_via_chern(spec: &CompleteIntersectionSpec) -> PolarClasses {
    let m = spec.dim() as i64;
    let c = chern::chern_classes(spec);
    let deg = spec.total_degree();
    let rho = (0..=m)
        .map(|j| {
            let s: BigInt = (0..=j)
                .map(|i| {
                    let t = binomial(m + 1 - i, j - i) * &c[i as usize];
                    if i % 2 == 0 {
                        t
                    } else {
                        -t
                    }
                })
                .sum();
            s * &deg
        })
        .collect();
    PolarClasses { rho }
}

/// The count as a polynomial in the foliation degree. Entry `j` of
/// [`coeffs`](Self::coeffs) is the coefficient of `d^{m-j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingCountPolynomial {
    coeffs: Vec<BigInt>,
}

impl SingCountPolynomial {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation at any integer, including values below 2 that are
    /// not foliation degrees.
    pub fn evaluate(&self, d: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc * d + c)
    }

    pub fn evaluate_at(&self, d: FoliationDegree) -> BigInt {
        self.evaluate(&d.get().into())
    }

    /// Coefficients in increasing powers of `d`.
    pub fn ascending(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn is_positive_at(&self, d: &BigInt) -> bool {
        self.evaluate(d).is_positive()
    }
}

/// `N(d) = (d_1⋯d_k) Σ_j [Σ_{δ≤j} (-1)^δ W_δ(d_1-1, …, d_k-1)] d^{m-j}`.
pub fn sing_count_poly(spec: &CompleteIntersectionSpec) -> SingCountPolynomial {
    let deg = spec.total_degree();
    let coeffs = alternating_partial_sums(spec.dim() as i64, &spec.shifted_degree_vector())
        .into_iter()
        .map(|a| a * &deg)
        .collect();
    SingCountPolynomial { coeffs }
}

pub fn sing_count_wronski(spec: &CompleteIntersectionSpec, d: FoliationDegree) -> BigInt {
    sing_count_poly(spec).evaluate_at(d)
}

/// `N(d) = χ(V_{[m]}) d^m + Σ_{j≥1} [χ(V_{[m-j]}) - χ(V_{[m-j+1]})] d^{m-j}`.
pub fn sing_count_euler(spec: &CompleteIntersectionSpec, d: FoliationDegree) -> BigInt {
    let chi = chern::chi_sections(spec);
    let m = spec.dim() as usize;
    let d = BigInt::from(d.get());
    let mut total = &chi[m] * d.pow(m as u32);
    for j in 1..=m {
        total += (&chi[m - j] - &chi[m - j + 1]) * d.pow((m - j) as u32);
    }
    total
}

/// `Σ_{i≤j} (-1)^i ϱ_i = χ(V_{[m-j]}) - χ(V_{[m-j+1]})` for `1 ≤ j ≤ m`.
pub fn lefschetz_coefficient_check(spec: &CompleteIntersectionSpec, j: u32) -> Result<bool> {
    let m = spec.dim();
    if j < 1 || j > m {
        return Err(Error::OutOfRange {
            what: "Lefschetz coefficient",
            index: j as i64,
            max: m as i64,
        });
    }
    let lhs = polar_classes_severi_todd(spec).alternating_sum(j as usize)?;
    let rhs = chern::chi_section(spec, m - j)? - chern::chi_section(spec, m - j + 1)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: u32, ds: &[u32]) -> CompleteIntersectionSpec {
        CompleteIntersectionSpec::new(n, ds.to_vec()).unwrap()
    }

    fn ints(p: &PolarClasses) -> Vec<i64> {
        p.as_slice().iter().map(|x| x.try_into().unwrap()).collect()
    }

    fn fd(d: i64) -> FoliationDegree {
        FoliationDegree::new(d).unwrap()
    }

    #[test]
    fn polar_examples() {
        assert_eq!(
            ints(&polar_classes_severi_todd(&spec(3, &[2, 2]))),
            vec![4, 8]
        );
        assert_eq!(
            ints(&polar_classes_via_chern(&spec(3, &[2, 2]))),
            vec![4, 8]
        );
        assert_eq!(ints(&polar_classes_severi_todd(&spec(2, &[3]))), vec![3, 6]);
        assert_eq!(ints(&polar_classes_via_chern(&spec(2, &[3]))), vec![3, 6]);
        assert_eq!(
            ints(&polar_classes_severi_todd(&spec(3, &[2]))),
            vec![2, 2, 2]
        );
        assert_eq!(
            ints(&polar_classes_via_chern(&spec(3, &[2]))),
            vec![2, 2, 2]
        );
        assert_eq!(
            ints(&polar_classes_via_chern(&spec(5, &[1, 1]))),
            vec![1, 0, 0, 0]
        );
    }

    #[test]
    fn hypersurface_polar_classes() {
        for n in 2..6u32 {
            for d1 in 1..6i64 {
                let expected: Vec<i64> = (0..n).map(|j| d1 * (d1 - 1).pow(j)).collect();
                assert_eq!(
                    ints(&polar_classes_severi_todd(&spec(n, &[d1 as u32]))),
                    expected
                );
            }
        }
    }

    #[test]
    fn polar_index_out_of_range() {
        let p = polar_classes_severi_todd(&spec(3, &[2, 2]));
        assert!(p.get(1).is_ok());
        assert!(matches!(p.get(2), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn count_examples() {
        for (s, d, n) in [
            (spec(3, &[2, 2]), 2, 4),
            (spec(2, &[3]), 2, 3),
            (spec(3, &[2]), 3, 20),
        ] {
            assert_eq!(sing_count_wronski(&s, fd(d)), n.into(), "{s}");
            assert_eq!(sing_count_euler(&s, fd(d)), n.into(), "{s}");
        }
    }

    #[test]
    fn count_polynomial_shape() {
        let p = sing_count_poly(&spec(3, &[2]));
        let c: Vec<i64> = p.coeffs().iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(c, vec![2, 0, 2]);
        assert_eq!(p.ascending()[0], 2.into());
        assert_eq!(p.evaluate(&1.into()), 4.into());
        // leading coefficient is the degree
        let q = sing_count_poly(&spec(6, &[2, 3, 4]));
        assert_eq!(q.coeffs()[0], 24.into());
    }

    #[test]
    fn lefschetz_examples() {
        assert!(lefschetz_coefficient_check(&spec(3, &[2, 2]), 1).unwrap());
        assert!(lefschetz_coefficient_check(&spec(3, &[2]), 2).unwrap());
        for n in 2..7 {
            assert!(lefschetz_coefficient_check(&spec(n, &[1]), 1).unwrap());
        }
        assert!(lefschetz_coefficient_check(&spec(3, &[2]), 0).is_err());
        assert!(lefschetz_coefficient_check(&spec(3, &[2]), 3).is_err());
    }

    #[test]
    fn even_dimension_counts_positive() {
        for n in 3..8u32 {
            for k in 1..n {
                if (n - k) % 2 == 1 {
                    continue;
                }
                for top in 1..6u32 {
                    let s = spec(n, &vec![top; k as usize]);
                    for d in 2..7 {
                        assert!(sing_count_wronski(&s, fd(d)) > BigInt::zero(), "{s} d={d}");
                    }
                }
            }
        }
    }
}
