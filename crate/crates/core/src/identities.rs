//! Exhaustive grid checks of the symmetric-function identities and of the
//! agreement between the different routes to polar classes and counts.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::bounds;
use crate::chern::{self, CompleteIntersectionSpec, FoliationDegree};
use crate::invariants;
use crate::symfun::{self, binomial, wronski_table, IntVector};

/// Outcome of one family of checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub checked: u64,
    pub violations: Vec<String>,
}

impl IdentityCheck {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            violations: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Bounds for the symmetric-function grid: vectors of length `1..=max_len`
/// with entries in `0..=max_entry`, degrees up to `max_degree`.
#[derive(Debug, Clone, Copy)]
pub struct WronskiGrid {
    pub max_len: usize,
    pub max_entry: u64,
    pub max_degree: i64,
}

impl Default for WronskiGrid {
    fn default() -> Self {
        Self {
            max_len: 4,
            max_entry: 6,
            max_degree: 8,
        }
    }
}

/// Bounds for the complete-intersection grid.
#[derive(Debug, Clone, Copy)]
pub struct CiGrid {
    pub max_n: u32,
    pub min_entry: u32,
    pub max_entry: u32,
    pub min_d: u32,
    pub max_d: u32,
}

impl Default for CiGrid {
    fn default() -> Self {
        Self {
            max_n: 8,
            min_entry: 1,
            max_entry: 5,
            min_d: 2,
            max_d: 6,
        }
    }
}

impl CiGrid {
    /// Every `(n, degrees)` with `2 ≤ n ≤ max_n`, `1 ≤ k ≤ n-1` and degrees a
    /// nondecreasing sequence in `[min_entry, max_entry]`. All quantities are
    /// symmetric in the degrees, so orderings are not repeated.
    pub fn specs(&self) -> Vec<CompleteIntersectionSpec> {
        let mut out = Vec::new();
        for n in 2..=self.max_n {
            for k in 1..n {
                for ds in multisets(k as usize, self.min_entry, self.max_entry) {
                    out.push(CompleteIntersectionSpec::new(n, ds).expect("grid spec valid"));
                }
            }
        }
        out
    }

    pub fn degrees(&self) -> impl Iterator<Item = FoliationDegree> {
        (self.min_d..=self.max_d).map(|d| FoliationDegree::new(d as i64).expect("d >= 2"))
    }
}

/// Nondecreasing sequences of length `len` with entries in `lo..=hi`.
pub fn multisets(len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    fn go(len: usize, lo: u32, hi: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().copied().unwrap_or(lo);
        for v in start..=hi {
            cur.push(v);
            go(len, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, lo, hi, &mut Vec::with_capacity(len), &mut out);
    out
}

/// All tuples of length `len` with entries in `0..=max`.
pub fn tuples(len: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..=max).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

impl WronskiGrid {
    fn vectors(&self, min_len: usize, max_len: usize) -> impl Iterator<Item = Vec<u64>> + '_ {
        (min_len..=max_len).flat_map(move |len| tuples(len, self.max_entry))
    }
}

pub fn check_gap_monotone(grid: &WronskiGrid) -> IdentityCheck {
    let mut c = IdentityCheck::new("gap: W1*W(d-1) - W(d) >= W1*W(d-2) - W(d-1) >= 0");
    for xs in grid.vectors(1, grid.max_len) {
        let w = wronski_table(grid.max_degree, &IntVector::from_u64s(&xs).unwrap());
        for delta in 2..=grid.max_degree as usize {
            let lhs = &w[1] * &w[delta - 1] - &w[delta];
            let rhs = &w[1] * &w[delta - 2] - &w[delta - 1];
            c.record(lhs >= rhs && !rhs.is_negative(), || {
                format!("xs={xs:?} delta={delta}: {lhs} vs {rhs}")
            });
        }
    }
    c
}

pub fn check_log_concavity(grid: &WronskiGrid) -> IdentityCheck {
    let mut c = IdentityCheck::new("log-concavity: W(j)^2 >= W(j-1)*W(j+1)");
    for xs in grid.vectors(1, grid.max_len) {
        let w = wronski_table(grid.max_degree + 1, &IntVector::from_u64s(&xs).unwrap());
        for j in 1..=grid.max_degree as usize {
            c.record(&w[j] * &w[j] >= &w[j - 1] * &w[j + 1], || {
                format!("xs={xs:?} j={j}")
            });
        }
    }
    c
}

/// The minimum of `W_j / W_{j-1}` over `1 ≤ j ≤ m` sits at `j = m`, checked by
/// cross-multiplication for every `m` up to the grid degree.
pub fn check_ratio_minimizer(grid: &WronskiGrid) -> IdentityCheck {
    let mut c = IdentityCheck::new("ratio minimum: min_j W(j)/W(j-1) attained at j = m");
    for xs in grid.vectors(1, grid.max_len) {
        if xs.iter().all(|&x| x == 0) {
            continue;
        }
        let w = wronski_table(grid.max_degree, &IntVector::from_u64s(&xs).unwrap());
        for m in 1..=grid.max_degree as usize {
            for j in 1..=m {
                // W_m / W_{m-1} <= W_j / W_{j-1}
                c.record(&w[m] * &w[j - 1] <= &w[j] * &w[m - 1], || {
                    format!("xs={xs:?} m={m} j={j}")
                });
            }
        }
    }
    c
}

pub fn check_todd(grid: &WronskiGrid) -> IdentityCheck {
    let mut c = IdentityCheck::new("todd: W_p(d-1) = sum (-1)^(p-i) C(k+p-1,p-i) W_i(d)");
    for xs in grid.vectors(1, grid.max_len) {
        let ds: Vec<u64> = xs.iter().map(|x| x + 1).collect();
        let ds = IntVector::from_u64s(&ds).unwrap();
        let shifted = IntVector::from_u64s(&xs).unwrap();
        for p in 0..=grid.max_degree {
            let via = symfun::wronski_shifted_via_todd(p, &ds).expect("entries >= 1");
            c.record(via == symfun::wronski(p, &shifted), || {
                format!("xs={xs:?} p={p}")
            });
        }
    }
    c
}

pub fn check_reduction(grid: &WronskiGrid) -> IdentityCheck {
    let mut c = IdentityCheck::new("reduction: W(k) = W(k+1) - x_(k+1) W(k+1)_(d-1)");
    for xs in grid.vectors(2, grid.max_len + 1) {
        let v = IntVector::from_u64s(&xs).unwrap();
        for delta in 0..=grid.max_degree {
            c.record(symfun::reduction_identity_check(delta, &v).unwrap(), || {
                format!("xs={xs:?} delta={delta}")
            });
        }
    }
    c
}

pub fn check_stifel(max_m: i64) -> IdentityCheck {
    let mut c = IdentityCheck::new("stifel: C(m+1,l) = C(m,l) + C(m,l-1)");
    for m in 0..=max_m {
        for l in -1..=m + 2 {
            c.record(
                binomial(m + 1, l) == binomial(m, l) + binomial(m, l - 1),
                || format!("m={m} l={l}"),
            );
        }
    }
    c
}

pub fn check_lefschetz(grid: &CiGrid) -> IdentityCheck {
    let mut c = IdentityCheck::new("lefschetz: sum (-1)^i rho_i = chi[m-j] - chi[m-j+1]");
    for spec in grid.specs() {
        for j in 1..=spec.dim() {
            c.record(
                invariants::lefschetz_coefficient_check(&spec, j).unwrap(),
                || format!("{spec} j={j}"),
            );
        }
    }
    c
}

pub fn check_polar_paths(grid: &CiGrid) -> IdentityCheck {
    let mut c = IdentityCheck::new("polar classes: Wronski route = Chern route");
    for spec in grid.specs() {
        c.record(
            invariants::polar_classes_severi_todd(&spec)
                == invariants::polar_classes_via_chern(&spec),
            || spec.to_string(),
        );
    }
    c
}

pub fn check_three_forms(grid: &CiGrid) -> IdentityCheck {
    let mut c = IdentityCheck::new("count: Wronski = Euler = Chern forms");
    for spec in grid.specs() {
        for d in grid.degrees() {
            let w = invariants::sing_count_wronski(&spec, d);
            let e = invariants::sing_count_euler(&spec, d);
            let t = chern::twisted_top_chern_count(&spec, d);
            c.record(w == e && e == t, || {
                format!("{spec} d={}: {w} {e} {t}", d.get())
            });
        }
    }
    c
}

/// `α ≥ β > α - 1` on every non-linear grid member.
pub fn check_sandwich(grid: &CiGrid) -> IdentityCheck {
    let mut c = IdentityCheck::new("sandwich: alpha >= beta > alpha - 1");
    for spec in grid.specs().into_iter().filter(|s| !s.is_linear()) {
        let a = bounds::alpha(&spec).unwrap();
        let b = bounds::beta(&spec).unwrap().value;
        let one = num_rational::BigRational::from_integer(1.into());
        c.record(a >= b && b > &a - one, || {
            format!("{spec}: alpha={a} beta={b}")
        });
    }
    c
}

/// Odd `m`, integer `2 ≤ d < β` implies `N(d) ≤ 0`.
pub fn check_small_degree_nonpositive(grid: &CiGrid) -> IdentityCheck {
    let mut c = IdentityCheck::new("small degree: odd dim, d < beta => N <= 0");
    for spec in grid
        .specs()
        .into_iter()
        .filter(|s| !s.is_linear() && s.dim() % 2 == 1)
    {
        let b = bounds::beta(&spec).unwrap().value;
        let poly = invariants::sing_count_poly(&spec);
        for d in grid.degrees() {
            let dv = BigInt::from(d.get());
            if num_rational::BigRational::from_integer(dv.clone()) < b {
                let n = poly.evaluate(&dv);
                c.record(!n.is_positive(), || format!("{spec} d={dv}: N={n}"));
            }
        }
    }
    c
}

/// Grid members with `N(d) ≤ 0`; positivity only holds when a
/// nondegenerate invariant foliation exists, so these are informative.
pub fn nonpositive_counts(grid: &CiGrid) -> Vec<(CompleteIntersectionSpec, u32, BigInt)> {
    let mut out = Vec::new();
    for spec in grid.specs() {
        let poly = invariants::sing_count_poly(&spec);
        for d in grid.degrees() {
            let n = poly.evaluate_at(d);
            if !n.is_positive() {
                out.push((spec.clone(), d.get(), n));
            }
        }
    }
    out
}

/// Odd-dimensional grid members where `d ≥ ⌈α⌉` but `N(d) ≤ 0`.
pub fn bound_without_positivity(grid: &CiGrid) -> Vec<(CompleteIntersectionSpec, u32, BigInt)> {
    let mut out = Vec::new();
    for spec in grid
        .specs()
        .into_iter()
        .filter(|s| !s.is_linear() && s.dim() % 2 == 1)
    {
        let min = bounds::theorem2_min_degree(&spec).unwrap();
        let poly = invariants::sing_count_poly(&spec);
        for d in grid.degrees().filter(|d| d.get() >= min) {
            let n = poly.evaluate_at(d);
            if !n.is_positive() {
                out.push((spec.clone(), d.get(), n));
            }
        }
    }
    out
}

/// Every identity and cross-route check on the default grids.
pub fn run_all() -> Vec<IdentityCheck> {
    let wg = WronskiGrid::default();
    let cg = CiGrid::default();
    let cg2 = CiGrid { min_entry: 2, ..cg };
    vec![
        check_gap_monotone(&wg),
        check_log_concavity(&wg),
        check_ratio_minimizer(&wg),
        check_todd(&wg),
        check_reduction(&wg),
        check_stifel(30),
        check_lefschetz(&cg),
        check_polar_paths(&cg),
        check_three_forms(&cg),
        check_sandwich(&cg2),
        check_small_degree_nonpositive(&cg2),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(2, 1, 5).len(), 15);
        assert_eq!(multisets(3, 1, 5).len(), 35);
        assert_eq!(multisets(1, 2, 2), vec![vec![2]]);
    }

    #[test]
    fn tuple_counts() {
        assert_eq!(tuples(3, 6).len(), 343);
        assert_eq!(tuples(0, 6), vec![Vec::<u64>::new()]);
    }

    #[test]
    fn small_grids_pass() {
        let wg = WronskiGrid {
            max_len: 3,
            max_entry: 3,
            max_degree: 5,
        };
        let cg = CiGrid {
            max_n: 5,
            ..CiGrid::default()
        };
        for check in [
            check_gap_monotone(&wg),
            check_log_concavity(&wg),
            check_ratio_minimizer(&wg),
            check_todd(&wg),
            check_reduction(&wg),
            check_stifel(10),
            check_lefschetz(&cg),
            check_polar_paths(&cg),
            check_three_forms(&cg),
        ] {
            assert!(check.passed(), "{}: {:?}", check.name, check.violations);
            assert!(check.checked > 0);
        }
    }

    #[test]
    fn nonpositive_counts_exist_below_bound() {
        let cg = CiGrid {
            max_n: 2,
            ..CiGrid::default()
        };
        // plane curves of degree 4 and 5 at d = 2
        let np = nonpositive_counts(&cg);
        assert!(np.iter().any(|(s, d, _)| s.degrees() == [5] && *d == 2));
        assert!(np.iter().all(|(_, _, n)| !n.is_positive()));
    }
}
