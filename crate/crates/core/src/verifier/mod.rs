//! Numerical and exact verification of example foliations on complete
//! intersections.

pub mod certificate;
pub mod examples;
pub mod field;
pub mod linsolve;
pub mod parse;
pub mod poly;
pub mod solve;

pub use certificate::{invariance_certificate, InvarianceCertificate};
pub use examples::{example1, example2, Example};
pub use field::{
    apply_field, foliation_degree, homogenize_equations, AffineVectorField, FoliationDecomposition,
    HomogeneousField,
};
pub use parse::{format_poly, parse_poly, FieldFile, VarStyle, AFFINE, HOMOGENEOUS};
pub use poly::MultiPoly;
pub use solve::{
    nondegeneracy_check, singular_points_expecting, singular_points_on_variety, SingularPoint,
    SolveOptions, SolveReport,
};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::chern::{CompleteIntersectionSpec, FoliationDegree};
use crate::invariants::sing_count_wronski;
use crate::Result;

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub spec: CompleteIntersectionSpec,
    pub decomposition: FoliationDecomposition,
    pub formula_count: BigInt,
    pub certificate: InvarianceCertificate,
    pub solve: SolveReport,
}

impl VerificationReport {
    pub fn degree(&self) -> u32 {
        self.decomposition.degree
    }

    pub fn all_nondegenerate(&self) -> bool {
        self.solve.all_nondegenerate()
    }

    /// Total number of singular points found on the variety.
    pub fn counts_match(&self) -> bool {
        BigInt::from(self.solve.count()) == self.formula_count
    }

    /// Singular points at which the variety is smooth.
    pub fn smooth_count(&self) -> usize {
        self.solve.on_smooth_part().count()
    }

    pub fn passed(&self) -> bool {
        self.counts_match() && self.all_nondegenerate()
    }
}

/// Full check of an affine field against affine equations in its chart:
/// invariance certificate, formula count and numeric singular points.
pub fn verify(
    field: &AffineVectorField,
    equations: &[MultiPoly],
    opts: &SolveOptions,
) -> Result<VerificationReport> {
    let decomposition = foliation_degree(field)?;
    let d = FoliationDegree::new(decomposition.degree as i64)?;
    let degrees = equations
        .iter()
        .map(|f| f.total_degree().unwrap_or(0))
        .collect();
    let spec = CompleteIntersectionSpec::new(field.dim() as u32, degrees)?;
    let certificate = invariance_certificate(field, equations)?;
    let formula_count = sing_count_wronski(&spec, d);
    let y = HomogeneousField::from_affine(field)?;
    let fs = homogenize_equations(field, equations)?;
    let expected = formula_count.to_usize().unwrap_or(0);
    let solve = singular_points_expecting(&y, &fs, opts, expected)?;
    Ok(VerificationReport {
        spec,
        decomposition,
        formula_count,
        certificate,
        solve,
    })
}

pub fn verify_example(ex: &Example, opts: &SolveOptions) -> Result<VerificationReport> {
    verify(&ex.field, &ex.equations, opts)
}
