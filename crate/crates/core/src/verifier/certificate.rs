//! Ideal-membership certificates for invariance of a variety.
//!
//! `V = {F_1 = ⋯ = F_k = 0}` is invariant by `X` when every `X(F_m)` lies in
//! the ideal `(F_1, …, F_k)`. Cofactors `A_{m,ℓ}` of degree at most
//! `deg X(F_m) - deg F_ℓ` are found by solving an exact linear system in their
//! unknown coefficients; no Gröbner basis is computed, so a failure only
//! means no cofactors exist within that degree.

use num_rational::BigRational;

use super::field::{apply_field, AffineVectorField};
use super::linsolve;
use super::poly::MultiPoly;
use crate::{Error, Result};

/// `X(F_m) = Σ_ℓ cofactors[m][ℓ] · F_ℓ` for every `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceCertificate {
    pub cofactors: Vec<Vec<MultiPoly>>,
}

impl InvarianceCertificate {
    /// Re-multiplies the cofactors exactly.
    pub fn verify(&self, x: &AffineVectorField, fs: &[MultiPoly]) -> Result<bool> {
        if self.cofactors.len() != fs.len() {
            return Ok(false);
        }
        for (fm, row) in fs.iter().zip(&self.cofactors) {
            if row.len() != fs.len() {
                return Ok(false);
            }
            let lhs = apply_field(x, fm)?;
            let mut rhs = MultiPoly::zero(x.dim());
            for (a, fl) in row.iter().zip(fs) {
                rhs = &rhs + &a.try_mul(fl)?;
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn invariance_certificate(
    x: &AffineVectorField,
    fs: &[MultiPoly],
) -> Result<InvarianceCertificate> {
    let n = x.dim();
    if let Some(bad) = fs.iter().find(|f| f.num_vars() != n) {
        return Err(Error::VariableMismatch(n, bad.num_vars()));
    }
    let degs: Vec<u32> = fs
        .iter()
        .map(|f| {
            f.total_degree()
                .ok_or(Error::InvalidParameter("zero equation".into()))
        })
        .collect::<Result<_>>()?;
    let mut cofactors = Vec::with_capacity(fs.len());
    for (m, fm) in fs.iter().enumerate() {
        let target = apply_field(x, fm)?;
        let Some(tdeg) = target.total_degree() else {
            cofactors.push(vec![MultiPoly::zero(n); fs.len()]);
            continue;
        };
        // unknowns: (ℓ, monomial of A_{m,ℓ})
        let mut unknowns = Vec::new();
        for (l, &dl) in degs.iter().enumerate() {
            if tdeg >= dl {
                for e in MultiPoly::monomials_up_to(n, tdeg - dl) {
                    unknowns.push((l, e));
                }
            }
        }
        // one equation per monomial of degree ≤ tdeg
        let eq_monos = MultiPoly::monomials_up_to(n, tdeg);
        let index: std::collections::HashMap<&Vec<u32>, usize> =
            eq_monos.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut rows = vec![vec![BigRational::default(); unknowns.len()]; eq_monos.len()];
        for (col, (l, e)) in unknowns.iter().enumerate() {
            for (fe, c) in fs[*l].terms() {
                let prod: Vec<u32> = fe.iter().zip(e).map(|(a, b)| a + b).collect();
                let Some(&row) = index.get(&prod) else {
                    continue;
                };
                rows[row][col] += c;
            }
        }
        let rhs = eq_monos.iter().map(|e| target.coeff(e)).collect();
        let sol = linsolve::solve(rows, rhs, unknowns.len()).ok_or(Error::NotInvariant(m))?;
        let mut row: Vec<MultiPoly> = vec![MultiPoly::zero(n); fs.len()];
        for ((l, e), c) in unknowns.into_iter().zip(sol) {
            row[l] = &row[l] + &MultiPoly::monomial(n, e, c);
        }
        cofactors.push(row);
    }
    Ok(InvarianceCertificate { cofactors })
}
