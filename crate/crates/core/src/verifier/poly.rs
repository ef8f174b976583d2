//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

pub type Exponents = Vec<u32>;

/// Polynomial in `num_vars` variables. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    num_vars: usize,
    terms: BTreeMap<Exponents, BigRational>,
}

impl MultiPoly {
    pub fn zero(num_vars: usize) -> Self {
        Self {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: BigRational) -> Self {
        Self::monomial(num_vars, vec![0; num_vars], c)
    }

    pub fn from_int(num_vars: usize, c: i64) -> Self {
        Self::constant(num_vars, BigRational::from_integer(c.into()))
    }

    /// The variable with index `i` (0-based).
    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self::monomial(num_vars, e, BigRational::one())
    }

    pub fn monomial(num_vars: usize, exps: Exponents, c: BigRational) -> Self {
        assert_eq!(exps.len(), num_vars, "exponent vector length");
        let mut p = Self::zero(num_vars);
        p.add_term(exps, c);
        p
    }

    pub fn from_terms<I>(num_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponents, BigRational)>,
    {
        let mut p = Self::zero(num_vars);
        for (e, c) in terms {
            if e.len() != num_vars {
                return Err(Error::VariableMismatch(num_vars, e.len()));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, exps: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn homogeneous_part(&self, deg: u32) -> Self {
        Self {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == deg)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// True for zero and for polynomials whose terms all have degree `deg`.
    pub fn is_homogeneous_of(&self, deg: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == deg)
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::VariableMismatch(self.num_vars, other.num_vars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_vars);
        }
        Self {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::from_int(self.num_vars, 1), |acc, _| &acc * self)
    }

    pub fn partial_derivative(&self, i: usize) -> Result<Self> {
        if i >= self.num_vars {
            return Err(Error::VariableMismatch(self.num_vars, i + 1));
        }
        let mut out = Self::zero(self.num_vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * BigInt::from(e[i]));
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.num_vars {
            return Err(Error::VariableMismatch(self.num_vars, point.len()));
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.clone(), |acc, (&k, x)| {
                    acc * num_traits::pow(x.clone(), k as usize)
                })
            })
            .sum())
    }

    pub fn eval_complex(&self, point: &[Complex64]) -> Result<Complex64> {
        if point.len() != self.num_vars {
            return Err(Error::VariableMismatch(self.num_vars, point.len()));
        }
        Ok(self.compile().eval(point))
    }

    pub fn compile(&self) -> CompiledPoly {
        CompiledPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (c.to_f64().expect("finite coefficient"), e.clone()))
                .collect(),
        }
    }

    /// Divides by the variable `i` exactly, or returns `None` if some term
    /// does not contain it.
    pub fn divide_by_var(&self, i: usize) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                return None;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            terms.insert(e2, c.clone());
        }
        Some(Self {
            num_vars: self.num_vars,
            terms,
        })
    }

    /// Homogenization to degree `deg` with a new variable inserted at index
    /// `at`. Requires `deg ≥ total_degree`.
    pub fn homogenize(&self, deg: u32, at: usize) -> Result<Self> {
        if let Some(t) = self.total_degree() {
            if t > deg {
                return Err(Error::InvalidParameter(format!(
                    "cannot homogenize degree {t} polynomial to degree {deg}"
                )));
            }
        }
        if at > self.num_vars {
            return Err(Error::VariableMismatch(self.num_vars, at));
        }
        let mut out = Self::zero(self.num_vars + 1);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.insert(at, deg - e.iter().sum::<u32>());
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// Sets variable `at` to 1 and removes it.
    pub fn dehomogenize(&self, at: usize) -> Result<Self> {
        if at >= self.num_vars {
            return Err(Error::VariableMismatch(self.num_vars, at + 1));
        }
        let mut out = Self::zero(self.num_vars - 1);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.remove(at);
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// Same polynomial with a variable (not occurring) inserted at `at`.
    pub fn insert_var(&self, at: usize) -> Self {
        Self {
            num_vars: self.num_vars + 1,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.insert(at, 0);
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// Every exponent vector of total degree `≤ deg` in `num_vars` variables,
    /// in a fixed order.
    pub fn monomials_up_to(num_vars: usize, deg: u32) -> Vec<Exponents> {
        fn go(vars: usize, left: u32, cur: &mut Exponents, out: &mut Vec<Exponents>) {
            if cur.len() == vars {
                out.push(cur.clone());
                return;
            }
            for e in 0..=left {
                cur.push(e);
                go(vars, left - e, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(num_vars, deg, &mut Vec::with_capacity(num_vars), &mut out);
        out
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: Self) -> MultiPoly {
        self.try_add(rhs).expect("variable counts match")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: Self) -> MultiPoly {
        self.try_sub(rhs).expect("variable counts match")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: Self) -> MultiPoly {
        self.try_mul(rhs).expect("variable counts match")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

/// Floating-point copy of a polynomial for repeated complex evaluation.
#[derive(Debug, Clone)]
pub struct CompiledPoly {
    terms: Vec<(f64, Exponents)>,
}

impl CompiledPoly {
    pub fn eval(&self, point: &[Complex64]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (c, e) in &self.terms {
            let mut t = Complex64::new(*c, 0.0);
            for (&k, x) in e.iter().zip(point) {
                if k > 0 {
                    t *= x.powu(k);
                }
            }
            acc += t;
        }
        acc
    }
}
