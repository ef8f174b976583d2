//! Polynomial vector fields: affine representatives, their degree
//! decomposition `X = gR + X_0 + ⋯ + X_d`, and homogeneous lifts.

use super::poly::MultiPoly;
use crate::{Error, Result};

/// A polynomial vector field `Σ P_i ∂/∂z_i` on the affine chart where the
/// homogeneous coordinate with index `chart` equals 1. The affine variables
/// are the remaining homogeneous coordinates, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineVectorField {
    components: Vec<MultiPoly>,
    chart: usize,
}

impl AffineVectorField {
    pub fn new(components: Vec<MultiPoly>, chart: usize) -> Result<Self> {
        let n = components.len();
        if n == 0 {
            return Err(Error::ZeroField);
        }
        if let Some(bad) = components.iter().find(|c| c.num_vars() != n) {
            return Err(Error::VariableMismatch(n, bad.num_vars()));
        }
        if chart > n {
            return Err(Error::OutOfRange {
                what: "chart",
                index: chart as i64,
                max: n as i64,
            });
        }
        Ok(Self { components, chart })
    }

    /// The radial field `Σ z_i ∂/∂z_i` on `n` affine variables.
    pub fn radial(n: usize, chart: usize) -> Self {
        Self::new((0..n).map(|i| MultiPoly::var(n, i)).collect(), chart)
            .expect("valid radial field")
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn chart(&self) -> usize {
        self.chart
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(MultiPoly::is_zero)
    }

    /// `f · X`.
    pub fn scaled_by(&self, f: &MultiPoly) -> Result<Self> {
        let comps = self
            .components
            .iter()
            .map(|c| c.try_mul(f))
            .collect::<Result<_>>()?;
        Self::new(comps, self.chart)
    }
}

/// `X(F) = Σ P_i ∂F/∂z_i`.
pub fn apply_field(x: &AffineVectorField, f: &MultiPoly) -> Result<MultiPoly> {
    if f.num_vars() != x.dim() {
        return Err(Error::VariableMismatch(x.dim(), f.num_vars()));
    }
    let mut out = MultiPoly::zero(x.dim());
    for (i, p) in x.components().iter().enumerate() {
        out = &out + &(p * &f.partial_derivative(i)?);
    }
    Ok(out)
}

/// `h` with `parts[i] = h · z_i` for every `i`, if one exists.
fn radial_factor(parts: &[MultiPoly]) -> Option<MultiPoly> {
    let h = parts[0].divide_by_var(0)?;
    if h.is_zero() {
        return None;
    }
    let n = parts.len();
    parts
        .iter()
        .enumerate()
        .all(|(i, p)| *p == &h * &MultiPoly::var(n, i))
        .then_some(h)
}

/// `X = g R + X_0 + ⋯ + X_d` with `g` homogeneous of degree `d` (or zero)
/// and `X_j` homogeneous of degree `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoliationDecomposition {
    pub degree: u32,
    pub g: MultiPoly,
    /// `parts[j]` holds the components of `X_j`.
    pub parts: Vec<Vec<MultiPoly>>,
}

impl FoliationDecomposition {
    /// Validates an explicitly given decomposition: `g` of degree `d` or
    /// zero, each `X_j` homogeneous of degree `j`, and when `g ≡ 0` the top
    /// part `X_d` must not be of the form `h R`.
    pub fn from_parts(g: MultiPoly, parts: Vec<Vec<MultiPoly>>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::ZeroField);
        }
        let degree = (parts.len() - 1) as u32;
        if !g.is_homogeneous_of(degree) {
            return Err(Error::NotHomogeneous);
        }
        let n = parts[0].len();
        for (j, xj) in parts.iter().enumerate() {
            if xj.len() != n {
                return Err(Error::VariableMismatch(n, xj.len()));
            }
            if xj
                .iter()
                .any(|c| c.num_vars() != n || !c.is_homogeneous_of(j as u32))
            {
                return Err(Error::NotHomogeneous);
            }
        }
        if g.is_zero() {
            let top = &parts[degree as usize];
            if top.iter().all(MultiPoly::is_zero) || radial_factor(top).is_some() {
                return Err(Error::NotReduced);
            }
        }
        Ok(Self { degree, g, parts })
    }

    pub fn to_field(&self, chart: usize) -> Result<AffineVectorField> {
        let n = self.parts[0].len();
        let comps = (0..n)
            .map(|i| {
                let mut c = &self.g * &MultiPoly::var(n, i);
                for xj in &self.parts {
                    c = &c + &xj[i];
                }
                c
            })
            .collect();
        AffineVectorField::new(comps, chart)
    }

    /// `X - gR = X_0 + ⋯ + X_d`, componentwise.
    pub fn non_radial(&self) -> Vec<MultiPoly> {
        let n = self.parts[0].len();
        (0..n)
            .map(|i| {
                self.parts
                    .iter()
                    .fold(MultiPoly::zero(n), |acc, xj| &acc + &xj[i])
            })
            .collect()
    }
}

/// Degree `d` of the foliation represented by `x`, with its decomposition.
/// When the top homogeneous part is `h R` it is absorbed into `g = h`.
pub fn foliation_degree(x: &AffineVectorField) -> Result<FoliationDecomposition> {
    let top_deg = x
        .components()
        .iter()
        .filter_map(MultiPoly::total_degree)
        .max()
        .ok_or(Error::ZeroField)?;
    let n = x.dim();
    let top: Vec<MultiPoly> = x
        .components()
        .iter()
        .map(|c| c.homogeneous_part(top_deg))
        .collect();
    let (g, degree) = match radial_factor(&top) {
        Some(h) => (h, top_deg - 1),
        None => (MultiPoly::zero(n), top_deg),
    };
    let rest: Vec<MultiPoly> = x
        .components()
        .iter()
        .enumerate()
        .map(|(i, c)| c - &(&g * &MultiPoly::var(n, i)))
        .collect();
    let parts = (0..=degree)
        .map(|j| rest.iter().map(|c| c.homogeneous_part(j)).collect())
        .collect();
    Ok(FoliationDecomposition { degree, g, parts })
}

/// A vector field on `ℂ^{n+1}` with components homogeneous of a common
/// degree, representing a foliation of `ℙⁿ` up to adding multiples of the
/// radial field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousField {
    components: Vec<MultiPoly>,
    degree: u32,
}

impl HomogeneousField {
    pub fn new(components: Vec<MultiPoly>, degree: u32) -> Result<Self> {
        let m = components.len();
        if m < 2 {
            return Err(Error::InvalidParameter(
                "need at least two homogeneous coordinates".into(),
            ));
        }
        if let Some(bad) = components.iter().find(|c| c.num_vars() != m) {
            return Err(Error::VariableMismatch(m, bad.num_vars()));
        }
        if components.iter().all(MultiPoly::is_zero) {
            return Err(Error::ZeroField);
        }
        if components.iter().any(|c| !c.is_homogeneous_of(degree)) {
            return Err(Error::NotHomogeneous);
        }
        Ok(Self { components, degree })
    }

    /// Lift of an affine field of degree `d`: `Y_c = -g` on the chart
    /// coordinate and `Y_i = z_c^d (X_i - g z_i)(z / z_c)` elsewhere.
    pub fn from_affine(x: &AffineVectorField) -> Result<Self> {
        let dec = foliation_degree(x)?;
        let c = x.chart();
        let d = dec.degree;
        let mut comps: Vec<MultiPoly> = dec
            .non_radial()
            .iter()
            .map(|p| p.homogenize(d, c))
            .collect::<Result<_>>()?;
        comps.insert(c, (-&dec.g).insert_var(c));
        Self::new(comps, d)
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `n` of `ℙⁿ`.
    pub fn dim(&self) -> usize {
        self.components.len() - 1
    }

    /// The 2×2 minors `Y_i z_j - Y_j z_i`, `i < j`; they vanish exactly where
    /// `Y(p)` is parallel to `p`.
    pub fn minors(&self) -> Vec<MultiPoly> {
        let m = self.components.len();
        let mut out = Vec::with_capacity(m * (m - 1) / 2);
        for i in 0..m {
            for j in i + 1..m {
                let zi = MultiPoly::var(m, i);
                let zj = MultiPoly::var(m, j);
                out.push(&(&self.components[i] * &zj) - &(&self.components[j] * &zi));
            }
        }
        out
    }

    /// Affine representative in the chart `z_chart = 1`:
    /// `X_i = (Y_i - z_i Y_chart)|_{z_chart = 1}` for `i ≠ chart`.
    pub fn affine_in_chart(&self, chart: usize) -> Result<AffineVectorField> {
        let m = self.components.len();
        if chart >= m {
            return Err(Error::OutOfRange {
                what: "chart",
                index: chart as i64,
                max: (m - 1) as i64,
            });
        }
        let yc = &self.components[chart];
        let comps = (0..m)
            .filter(|&i| i != chart)
            .map(|i| (&self.components[i] - &(&MultiPoly::var(m, i) * yc)).dehomogenize(chart))
            .collect::<Result<_>>()?;
        AffineVectorField::new(comps, chart)
    }

    /// Directional derivative `Y(F)` of a homogeneous polynomial.
    pub fn apply(&self, f: &MultiPoly) -> Result<MultiPoly> {
        let m = self.components.len();
        if f.num_vars() != m {
            return Err(Error::VariableMismatch(m, f.num_vars()));
        }
        let mut out = MultiPoly::zero(m);
        for (i, y) in self.components.iter().enumerate() {
            out = &out + &(y * &f.partial_derivative(i)?);
        }
        Ok(out)
    }
}

/// Homogenizes the affine equations of a variety in the chart of `x`, each to
/// its own total degree.
pub fn homogenize_equations(x: &AffineVectorField, fs: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
    fs.iter()
        .map(|f| {
            if f.num_vars() != x.dim() {
                return Err(Error::VariableMismatch(x.dim(), f.num_vars()));
            }
            let deg = f
                .total_degree()
                .ok_or(Error::InvalidParameter("zero equation".into()))?;
            f.homogenize(deg, x.chart())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::parse::{parse_poly, AFFINE, HOMOGENEOUS};
    use num_rational::BigRational;

    fn p(s: &str, n: usize) -> MultiPoly {
        parse_poly(s, n, AFFINE).unwrap()
    }

    fn field(comps: &[&str]) -> AffineVectorField {
        let n = comps.len();
        AffineVectorField::new(comps.iter().map(|c| p(c, n)).collect(), n).unwrap()
    }

    #[test]
    fn euler_identity() {
        let f = p("z1^3 + 2*z1*z2^2 - z3^3", 3);
        let r = AffineVectorField::radial(3, 3);
        assert_eq!(
            apply_field(&r, &f).unwrap(),
            f.scale(&BigRational::from_integer(3.into()))
        );
    }

    #[test]
    fn coordinate_field() {
        let x = field(&["1", "0"]);
        assert_eq!(apply_field(&x, &p("z1^2", 2)).unwrap(), p("2*z1", 2));
        assert!(apply_field(&x, &p("z1", 3)).is_err());
    }

    #[test]
    fn fermat_cubic_invariance_by_hand() {
        let x = field(&["z2^2*z1", "z2^3 + 1"]);
        let f = p("z1^3 + z2^3 + 1", 2);
        let xf = apply_field(&x, &f).unwrap();
        assert_eq!(xf, &p("3*z2^2", 2) * &f);
    }

    #[test]
    fn decomposition_of_elliptic_quartic_field() {
        let x = field(&[
            "-z1^2*z2 + z1*z3",
            "-z1*z2^2 + 2*z2*z3 - z1",
            "-z1*z2*z3 - z2^2 + z3^2 + 1",
        ]);
        let dec = foliation_degree(&x).unwrap();
        assert_eq!(dec.degree, 2);
        assert_eq!(dec.g, p("-z1*z2", 3));
        assert_eq!(dec.parts[0], vec![p("0", 3), p("0", 3), p("1", 3)]);
        assert_eq!(dec.parts[1], vec![p("0", 3), p("-z1", 3), p("0", 3)]);
        assert_eq!(dec.to_field(3).unwrap(), x);
    }

    #[test]
    fn radial_field_has_degree_zero() {
        let dec = foliation_degree(&AffineVectorField::radial(2, 2)).unwrap();
        assert_eq!(dec.degree, 0);
        assert_eq!(dec.g, p("1", 2));
    }

    #[test]
    fn non_radial_top_part_keeps_g_zero() {
        let x = field(&["z2^2", "z1^2"]);
        let dec = foliation_degree(&x).unwrap();
        assert_eq!(dec.degree, 2);
        assert!(dec.g.is_zero());
    }

    #[test]
    fn zero_field_rejected() {
        assert_eq!(foliation_degree(&field(&["0", "0"])), Err(Error::ZeroField));
    }

    #[test]
    fn unreduced_parts_rejected() {
        let zero = MultiPoly::zero(2);
        let parts = vec![vec![p("1", 2), zero.clone()], vec![p("z1", 2), p("z2", 2)]];
        assert_eq!(
            FoliationDecomposition::from_parts(zero.clone(), parts),
            Err(Error::NotReduced)
        );
        let ok = vec![vec![p("1", 2), zero.clone()], vec![p("z2", 2), p("z1", 2)]];
        assert!(FoliationDecomposition::from_parts(zero, ok).is_ok());
    }

    #[test]
    fn homogeneous_lift_of_fermat_field() {
        let x = field(&["z2^2*z1", "z2^3 + 1"]);
        let y = HomogeneousField::from_affine(&x).unwrap();
        assert_eq!(y.degree(), 2);
        let h = |s: &str| parse_poly(s, 3, HOMOGENEOUS).unwrap();
        assert_eq!(y.components(), &[h("0"), h("x3^2"), h("-x2^2")]);
        // back to the original chart: same field
        assert_eq!(y.affine_in_chart(2).unwrap(), x);
    }

    #[test]
    fn homogeneous_lift_is_tangent_to_quadrics() {
        let x = field(&[
            "-z1^2*z2 + z1*z3",
            "-z1*z2^2 + 2*z2*z3 - z1",
            "-z1*z2*z3 - z2^2 + z3^2 + 1",
        ]);
        let y = HomogeneousField::from_affine(&x).unwrap();
        let h = |s: &str| parse_poly(s, 4, HOMOGENEOUS).unwrap();
        let q1 = h("x1^2 + x2^2 + x3^2 + x4^2");
        assert_eq!(y.apply(&q1).unwrap(), &h("2*x3") * &q1);
    }

    #[test]
    fn homogeneous_field_validation() {
        let h = |s: &str| parse_poly(s, 2, HOMOGENEOUS).unwrap();
        assert!(HomogeneousField::new(vec![h("x1"), h("x2^2")], 1).is_err());
        assert_eq!(
            HomogeneousField::new(vec![h("0"), h("0")], 1),
            Err(Error::ZeroField)
        );
    }
}
