//! Multistart Gauss–Newton search for the singular points of a homogeneous
//! field on a projective variety, and the nondegeneracy test at each of them.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::field::HomogeneousField;
use super::poly::{CompiledPoly, MultiPoly};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SolveOptions {
    pub starts_per_chart: usize,
    pub seed: u64,
    pub tol_residual: f64,
    pub tol_dedup: f64,
    pub tol_rank: f64,
    pub max_iter: usize,
    /// Starts are drawn uniformly from the polydisk of this radius.
    pub start_radius: f64,
    /// Rounds of [`singular_points_expecting`]; each doubles the starts.
    pub max_rounds: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            starts_per_chart: 200,
            seed: 0,
            tol_residual: 1e-10,
            tol_dedup: 1e-6,
            tol_rank: 1e-8,
            max_iter: 80,
            start_radius: 1.0,
            max_rounds: 4,
        }
    }
}

impl SolveOptions {
    fn validate(&self) -> Result<()> {
        let positive = [
            ("tol_residual", self.tol_residual),
            ("tol_dedup", self.tol_dedup),
            ("tol_rank", self.tol_rank),
            ("start_radius", self.start_radius),
        ];
        for (name, v) in positive {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        if self.starts_per_chart == 0 || self.max_iter == 0 || self.max_rounds == 0 {
            return Err(Error::InvalidParameter(
                "starts_per_chart, max_iter and max_rounds must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// A projective point normalised so that its first coordinate of maximal
/// modulus equals 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularPoint {
    pub coords: Vec<Complex64>,
    /// Largest absolute value among the defining equations at `coords`.
    pub residual: f64,
    pub nondegenerate: bool,
    /// Whether the variety itself is smooth at the point; nondegeneracy is
    /// only meaningful there.
    pub on_smooth_part: bool,
    /// Charts (homogeneous indices) in which some start converged here.
    pub found_in_charts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub points: Vec<SingularPoint>,
    pub warnings: Vec<String>,
    pub starts_per_chart: usize,
}

impl SolveReport {
    pub fn count(&self) -> usize {
        self.points.len()
    }

    pub fn all_nondegenerate(&self) -> bool {
        self.points.iter().all(|p| p.nondegenerate)
    }

    pub fn on_smooth_part(&self) -> impl Iterator<Item = &SingularPoint> {
        self.points.iter().filter(|p| p.on_smooth_part)
    }

    pub fn max_residual(&self) -> f64 {
        self.points.iter().map(|p| p.residual).fold(0.0, f64::max)
    }
}

/// A square-or-tall polynomial system in affine variables with its compiled
/// Jacobian.
struct System {
    eqs: Vec<CompiledPoly>,
    jac: Vec<Vec<CompiledPoly>>,
    vars: usize,
}

impl System {
    fn new(polys: &[MultiPoly]) -> Result<Self> {
        let vars = polys.first().map_or(0, MultiPoly::num_vars);
        let jac = polys
            .iter()
            .map(|p| {
                (0..vars)
                    .map(|i| p.partial_derivative(i).map(|d| d.compile()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            eqs: polys.iter().map(MultiPoly::compile).collect(),
            jac,
            vars,
        })
    }

    fn residual(&self, x: &[Complex64]) -> Vec<Complex64> {
        self.eqs.iter().map(|e| e.eval(x)).collect()
    }

    fn jacobian(&self, x: &[Complex64]) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.eqs.len(), self.vars, |i, j| self.jac[i][j].eval(x))
    }
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn max_abs(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Damped Gauss–Newton with backtracking; returns the final iterate and its
/// residual vector, or `None` when the iterate escapes to infinity.
fn gauss_newton(
    sys: &System,
    mut x: Vec<Complex64>,
    max_iter: usize,
    tol: f64,
) -> Option<(Vec<Complex64>, f64)> {
    let mut r = sys.residual(&x);
    let mut nr = norm(&r);
    for _ in 0..max_iter {
        if max_abs(&r) < tol * 1e-3 {
            break;
        }
        let j = sys.jacobian(&x);
        let rhs = DMatrix::from_iterator(r.len(), 1, r.iter().map(|z| -z));
        let svd = j.svd(true, true);
        let smax = svd.singular_values.max();
        let Ok(step) = svd.solve(&rhs, smax * 1e-13) else {
            return None;
        };
        let mut t = 1.0;
        let mut improved = false;
        while t > 1e-6 {
            let cand: Vec<Complex64> = x.iter().zip(step.iter()).map(|(a, b)| a + b * t).collect();
            let rc = sys.residual(&cand);
            let nc = norm(&rc);
            if nc.is_finite() && nc < nr {
                x = cand;
                r = rc;
                nr = nc;
                improved = true;
                break;
            }
            t *= 0.5;
        }
        if !improved || max_abs(&x) > 1e8 {
            break;
        }
    }
    if !nr.is_finite() || max_abs(&x) > 1e8 {
        return None;
    }
    Some((x, max_abs(&r)))
}

fn to_projective(affine: &[Complex64], chart: usize) -> Vec<Complex64> {
    let mut p = affine.to_vec();
    p.insert(chart, Complex64::new(1.0, 0.0));
    p
}

/// Index of the first coordinate whose modulus is maximal up to a relative
/// `1e-9`, so that ties are broken the same way wherever a point was found.
fn lead_index(p: &[Complex64]) -> usize {
    let m = max_abs(p);
    p.iter()
        .position(|z| z.norm() >= m * (1.0 - 1e-9))
        .unwrap_or(0)
}

fn normalize_at(p: &[Complex64], c: usize) -> Vec<Complex64> {
    let s = p[c];
    p.iter().map(|z| z / s).collect()
}

fn dehomogenize_point(p: &[Complex64], c: usize) -> Vec<Complex64> {
    normalize_at(p, c)
        .into_iter()
        .enumerate()
        .filter_map(|(i, z)| (i != c).then_some(z))
        .collect()
}

/// `|p ∧ q| / (|p| |q|)`, the sine of the angle between the lines.
pub fn chordal_distance(p: &[Complex64], q: &[Complex64]) -> f64 {
    let mut wedge = 0.0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            wedge += (p[i] * q[j] - p[j] * q[i]).norm_sqr();
        }
    }
    (wedge.sqrt() / (norm(p) * norm(q))).min(1.0)
}

/// The singular scheme of `y` on `V(fs)` in the chart `z_c = 1`.
fn chart_system(y: &HomogeneousField, fs: &[MultiPoly], c: usize) -> Result<System> {
    let polys = y
        .minors()
        .iter()
        .chain(fs)
        .map(|p| p.dehomogenize(c))
        .collect::<Result<Vec<_>>>()?;
    System::new(&polys)
}

fn draw_starts(
    opts: &SolveOptions,
    chart: usize,
    count: usize,
    vars: usize,
) -> Vec<Vec<Complex64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(chart as u64);
    let r = opts.start_radius;
    (0..count)
        .map(|_| {
            (0..vars)
                .map(|_| Complex64::new(rng.gen_range(-r..=r), rng.gen_range(-r..=r)))
                .collect()
        })
        .collect()
}

fn sort_key(p: &[Complex64]) -> Vec<i64> {
    p.iter()
        .flat_map(|z| [(z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64])
        .collect()
}

fn check_inputs(y: &HomogeneousField, fs: &[MultiPoly]) -> Result<()> {
    let m = y.dim() + 1;
    if let Some(bad) = fs.iter().find(|f| f.num_vars() != m) {
        return Err(Error::VariableMismatch(m, bad.num_vars()));
    }
    if fs
        .iter()
        .any(|f| f.total_degree().is_none_or(|d| !f.is_homogeneous_of(d)))
    {
        return Err(Error::NotHomogeneous);
    }
    if fs.len() >= y.dim() {
        return Err(Error::InvalidParameter(
            "the variety must have positive dimension".into(),
        ));
    }
    Ok(())
}

/// Singular points of `y` on the variety `fs = 0`, searched for in every
/// affine chart from `opts.starts_per_chart` seeded starts each.
pub fn singular_points_on_variety(
    y: &HomogeneousField,
    fs: &[MultiPoly],
    opts: &SolveOptions,
) -> Result<SolveReport> {
    check_inputs(y, fs)?;
    opts.validate()?;
    let m = y.dim() + 1;
    let systems = (0..m)
        .map(|c| chart_system(y, fs, c))
        .collect::<Result<Vec<_>>>()?;

    let mut warnings = Vec::new();
    let mut candidates: Vec<(usize, Vec<Complex64>)> = Vec::new();
    for (c, sys) in systems.iter().enumerate() {
        let starts = draw_starts(opts, c, opts.starts_per_chart, m - 1);
        let found: Vec<Option<Vec<Complex64>>> = starts
            .into_par_iter()
            .map(|x0| {
                let (x, res) = gauss_newton(sys, x0, opts.max_iter, opts.tol_residual)?;
                (res < opts.tol_residual.sqrt()).then(|| to_projective(&x, c))
            })
            .collect();
        let before = candidates.len();
        candidates.extend(found.into_iter().flatten().map(|p| (c, p)));
        if candidates.len() == before {
            warnings.push(format!("no start converged in chart {}", c + 1));
        }
    }

    let mut points: Vec<SingularPoint> = Vec::new();
    for (c, p) in candidates {
        let lead = lead_index(&p);
        let Some((x, res)) = gauss_newton(
            &systems[lead],
            dehomogenize_point(&p, lead),
            opts.max_iter,
            opts.tol_residual,
        ) else {
            continue;
        };
        if res >= opts.tol_residual {
            continue;
        }
        let q = to_projective(&x, lead);
        if let Some(existing) = points
            .iter_mut()
            .find(|e| chordal_distance(&e.coords, &q) < opts.tol_dedup)
        {
            if !existing.found_in_charts.contains(&c) {
                existing.found_in_charts.push(c);
            }
            continue;
        }
        let q = normalize_at(&q, lead_index(&q));
        let lead = lead_index(&q);
        let residual = max_abs(&systems[lead].residual(&dehomogenize_point(&q, lead)));
        points.push(SingularPoint {
            coords: q,
            residual,
            nondegenerate: false,
            on_smooth_part: true,
            found_in_charts: vec![c],
        });
    }
    for p in &mut points {
        match nondegeneracy_check(&p.coords, y, fs, opts.tol_rank) {
            Ok(b) => p.nondegenerate = b,
            Err(Error::NotSmoothPoint) => p.on_smooth_part = false,
            Err(e) => return Err(e),
        }
        p.found_in_charts.sort_unstable();
    }
    points.sort_by_key(|p| sort_key(&p.coords));
    let singular_v = points.iter().filter(|p| !p.on_smooth_part).count();
    if singular_v > 0 {
        warnings.push(format!(
            "{singular_v} point(s) lie where the variety is not smooth"
        ));
    }
    Ok(SolveReport {
        points,
        warnings,
        starts_per_chart: opts.starts_per_chart,
    })
}

/// Repeats the search with doubled starts, up to `opts.max_rounds` times,
/// while fewer than `expected` points have been found.
pub fn singular_points_expecting(
    y: &HomogeneousField,
    fs: &[MultiPoly],
    opts: &SolveOptions,
    expected: usize,
) -> Result<SolveReport> {
    let mut o = opts.clone();
    let mut report = singular_points_on_variety(y, fs, &o)?;
    for _ in 1..opts.max_rounds {
        if report.count() >= expected {
            break;
        }
        o.starts_per_chart *= 2;
        report = singular_points_on_variety(y, fs, &o)?;
    }
    Ok(report)
}

fn svd_sorted(a: DMatrix<Complex64>) -> (Vec<f64>, DMatrix<Complex64>) {
    let svd = a.svd(false, true);
    let v_t = svd.v_t.expect("requested V^H");
    let mut idx: Vec<usize> = (0..svd.singular_values.len()).collect();
    idx.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
    let values = idx.iter().map(|&i| svd.singular_values[i]).collect();
    let rows = DMatrix::from_fn(idx.len(), v_t.ncols(), |r, c| v_t[(idx[r], c)]);
    (values, rows)
}

/// Whether the linear part of `y` at the singular point `point`, restricted
/// to the tangent space of `V(fs)`, is invertible.
pub fn nondegeneracy_check(
    point: &[Complex64],
    y: &HomogeneousField,
    fs: &[MultiPoly],
    tol_rank: f64,
) -> Result<bool> {
    check_inputs(y, fs)?;
    let m = y.dim() + 1;
    if point.len() != m {
        return Err(Error::VariableMismatch(m, point.len()));
    }
    let c = lead_index(point);
    let x = dehomogenize_point(point, c);
    let n = m - 1;
    let k = fs.len();

    let field = y.affine_in_chart(c)?;
    let comps: Vec<MultiPoly> = field.components().to_vec();
    let jx = System::new(&comps)?.jacobian(&x);
    let fa = fs
        .iter()
        .map(|f| f.dehomogenize(c))
        .collect::<Result<Vec<_>>>()?;
    let df = System::new(&fa)?.jacobian(&x);

    // pad DF to n×n so that V^H is square and its trailing rows span ker DF
    let mut padded = DMatrix::<Complex64>::zeros(n, n);
    padded.view_mut((0, 0), (k, n)).copy_from(&df);
    let (sv, v_t) = svd_sorted(padded);
    let scale = sv[0].max(1.0);
    if sv.iter().take(k).any(|&s| s <= tol_rank * scale) {
        return Err(Error::NotSmoothPoint);
    }
    let q = DMatrix::from_fn(n, n - k, |r, col| v_t[(k + col, r)].conj());
    let b = q.adjoint() * &jx * &q;
    let jmax = jx.clone().svd(false, false).singular_values.max();
    let bmin = b.svd(false, false).singular_values.min();
    Ok(bmin > tol_rank * jmax.max(1.0))
}
