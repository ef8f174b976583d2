//! The two worked examples: a Fermat hypersurface and the elliptic quartic
//! curve, each with an invariant foliation.

use super::field::AffineVectorField;
use super::poly::MultiPoly;
use crate::chern::CompleteIntersectionSpec;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Example {
    pub field: AffineVectorField,
    /// Affine equations in the chart of `field`.
    pub equations: Vec<MultiPoly>,
    pub spec: CompleteIntersectionSpec,
}

fn term(nv: usize, c: i64, powers: &[(usize, u32)]) -> MultiPoly {
    let mut e = vec![0; nv];
    for &(i, p) in powers {
        e[i] += p;
    }
    MultiPoly::monomial(nv, e, num_rational::BigRational::from_integer(c.into()))
}

fn sum(nv: usize, terms: &[MultiPoly]) -> MultiPoly {
    terms.iter().fold(MultiPoly::zero(nv), |acc, t| &acc + t)
}

/// Fermat hypersurface of degree `ell` in `ℙ^{2n}` in the chart where the
/// last coordinate is 1, with its foliation of degree `ell - 1`.
pub fn example1(n: u32, ell: u32) -> Result<Example> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!(
            "n must be at least 1, got {n}"
        )));
    }
    if ell < 3 {
        return Err(Error::InvalidParameter(format!(
            "ell must be at least 3, got {ell}"
        )));
    }
    let nv = 2 * n as usize;
    let e = ell - 1;
    // zero-based: z_{2i-1} is index 2i-2, z_{2i} is index 2i-1
    let mut comps = vec![
        term(nv, 1, &[(1, e), (0, 1)]),
        sum(nv, &[term(nv, 1, &[(1, ell)]), term(nv, 1, &[])]),
    ];
    for i in 2..=n as usize {
        let (a, b) = (2 * i - 2, 2 * i - 1);
        comps.push(sum(
            nv,
            &[term(nv, 1, &[(1, e), (a, 1)]), term(nv, -1, &[(b, e)])],
        ));
        comps.push(sum(
            nv,
            &[term(nv, 1, &[(1, e), (b, 1)]), term(nv, 1, &[(a, e)])],
        ));
    }
    let mut f: Vec<MultiPoly> = (0..nv).map(|i| term(nv, 1, &[(i, ell)])).collect();
    f.push(term(nv, 1, &[]));
    Ok(Example {
        field: AffineVectorField::new(comps, nv)?,
        equations: vec![sum(nv, &f)],
        spec: CompleteIntersectionSpec::new(2 * n, vec![ell])?,
    })
}

/// The elliptic quartic `Q_1 = Q_2 = 0` in `ℙ³`, chart `X_4 = 1`, with its
/// foliation of degree 2.
pub fn example2() -> Example {
    let t = |c, p: &[(usize, u32)]| term(3, c, p);
    let comps = vec![
        sum(3, &[t(-1, &[(0, 2), (1, 1)]), t(1, &[(0, 1), (2, 1)])]),
        sum(
            3,
            &[
                t(-1, &[(0, 1), (1, 2)]),
                t(2, &[(1, 1), (2, 1)]),
                t(-1, &[(0, 1)]),
            ],
        ),
        sum(
            3,
            &[
                t(-1, &[(0, 1), (1, 1), (2, 1)]),
                t(-1, &[(1, 2)]),
                t(1, &[(2, 2)]),
                t(1, &[]),
            ],
        ),
    ];
    let q1 = sum(
        3,
        &[t(1, &[(0, 2)]), t(1, &[(1, 2)]), t(1, &[(2, 2)]), t(1, &[])],
    );
    let q2 = sum(3, &[t(1, &[(0, 1), (2, 1)]), t(1, &[(1, 1)])]);
    Example {
        field: AffineVectorField::new(comps, 3).expect("three components"),
        equations: vec![q1, q2],
        spec: CompleteIntersectionSpec::new(3, vec![2, 2]).expect("valid spec"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::parse::{parse_poly, AFFINE};

    #[test]
    fn example1_smallest() {
        let ex = example1(1, 3).unwrap();
        let p = |s| parse_poly(s, 2, AFFINE).unwrap();
        assert_eq!(ex.field.components(), &[p("z1*z2^2"), p("z2^3 + 1")]);
        assert_eq!(ex.equations, vec![p("z1^3 + z2^3 + 1")]);
        assert_eq!(ex.field.chart(), 2);
    }

    #[test]
    fn example1_with_pair_terms() {
        let ex = example1(2, 3).unwrap();
        let p = |s| parse_poly(s, 4, AFFINE).unwrap();
        assert_eq!(ex.field.dim(), 4);
        assert_eq!(ex.field.components()[2], p("z2^2*z3 - z4^2"));
        assert_eq!(ex.field.components()[3], p("z2^2*z4 + z3^2"));
        assert_eq!(ex.equations[0], p("z1^3 + z2^3 + z3^3 + z4^3 + 1"));
        assert_eq!(ex.spec.n(), 4);
    }

    #[test]
    fn example1_gates() {
        assert!(example1(0, 3).is_err());
        assert!(example1(1, 2).is_err());
    }

    #[test]
    fn example2_display() {
        let ex = example2();
        let p = |s| parse_poly(s, 3, AFFINE).unwrap();
        assert_eq!(
            ex.field.components(),
            &[
                p("-z1^2*z2 + z1*z3"),
                p("-z1*z2^2 + 2*z2*z3 - z1"),
                p("-z1*z2*z3 - z2^2 + z3^2 + 1"),
            ]
        );
        assert_eq!(
            ex.equations,
            vec![p("z1^2 + z2^2 + z3^2 + 1"), p("z1*z3 + z2")]
        );
    }
}
