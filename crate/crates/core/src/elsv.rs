//! Simple-fixed-locus localization for maps to ℙ¹ relative to ∞.
//!
//! The simple fixed locus contributes
//!
//! ```text
//! r! · Π α_i^{α_i} / α_i! · [ (1 - λ_1 + ⋯ ± λ_g) / Π (1 - α_i ψ_i) ]_j
//! ```
//!
//! Evaluated at `j = 3g - 3 + n` this is the ELSV expression for the
//! connected labeled Hurwitz number. The equivariant weights of the edge
//! factors cancel in that top-degree term and are never represented.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::hurwitz::{transposition_count, HurwitzSpec};
use crate::intersection::{Engine, FormalTautClass};
use crate::partitions::weak_compositions;
use crate::rational::{factorial, pow};
use crate::stable_graphs::check_stable;
use crate::{Error, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleLocusSpec {
    pub g: u32,
    pub alpha: Vec<u32>,
    pub j: u32,
}

impl SimpleLocusSpec {
    pub fn new(g: u32, alpha: &[u32], j: u32) -> Result<Self> {
        let spec = SimpleLocusSpec {
            g,
            alpha: alpha.to_vec(),
            j,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn top(g: u32, alpha: &[u32]) -> Result<Self> {
        check_stable(g as i64, alpha.len() as i64)?;
        Self::new(g, alpha, 3 * g + alpha.len() as u32 - 3)
    }

    fn validate(&self) -> Result<()> {
        let n = self.alpha.len();
        check_stable(self.g as i64, n as i64)?;
        if self.alpha.contains(&0) {
            return Err(Error::InvalidInput("partition has a zero part".into()));
        }
        let dim = 3 * self.g + n as u32 - 3;
        if self.j > dim {
            return Err(Error::InvalidInput(format!(
                "dimension {} exceeds dim M̄_{{{},{n}}} = {dim}",
                self.j, self.g
            )));
        }
        Ok(())
    }
}

/// Degree-`j` part of `(Σ_k (-1)^k λ_k) · Π_i Σ_a α_i^a ψ_i^a`.
pub fn simple_locus_class(spec: &SimpleLocusSpec) -> FormalTautClass {
    let n = spec.alpha.len();
    let mut class = FormalTautClass::new(spec.g, n);
    for k in 0..=spec.g.min(spec.j) {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        for a in weak_compositions(spec.j - k, n) {
            let weight: BigInt = spec
                .alpha
                .iter()
                .zip(&a)
                .map(|(&alpha, &e)| pow(alpha, e))
                .product();
            let coeff = Rational::from_integer(weight * sign);
            class
                .add_term(a, k, coeff)
                .expect("exponent vectors have length n and k <= g");
        }
    }
    class
}

/// `r! · Π α_i^{α_i} / α_i!` with `r = d + n + 2g - 2`.
pub fn elsv_prefactor(g: u32, alpha: &[u32]) -> Result<Rational> {
    check_stable(g as i64, alpha.len() as i64)?;
    let r = transposition_count(&HurwitzSpec::single(g as i64, alpha))?;
    let mut value = Rational::from_integer(factorial(r));
    for &a in alpha {
        value *= Rational::new(pow(a, a), factorial(a));
    }
    Ok(value)
}

/// Connected labeled Hurwitz number from the simple-locus Hodge integral.
/// Defined for stable `(g, n)`; only `g <= 1` lies in the supported Hodge
/// domain.
pub fn elsv_number(g: u32, alpha: &[u32]) -> Result<Rational> {
    elsv_number_with(crate::intersection::global(), g, alpha)
}

pub fn elsv_number_with(engine: &Engine, g: u32, alpha: &[u32]) -> Result<Rational> {
    let n = alpha.len();
    if 2 * g as i64 - 2 + n as i64 <= 0 {
        return Err(Error::ElsvUnstable { g, n });
    }
    let spec = SimpleLocusSpec::top(g, alpha)?;
    let integral = engine.integrate_formal(&simple_locus_class(&spec))?;
    Ok(elsv_prefactor(g, alpha)? * integral)
}

/// `elsv_number / elsv_prefactor`, i.e. the top-degree Hodge integral, as a
/// function of the lattice point `α`.
pub fn normalized_elsv(g: u32, alpha: &[u32]) -> Result<Rational> {
    let spec = SimpleLocusSpec::top(g, alpha)?;
    crate::intersection::integrate_formal(&simple_locus_class(&spec))
}

/// Exponent vectors of every monomial of total degree `<= degree` in `n`
/// variables, by increasing degree.
pub fn monomials(n: usize, degree: u32) -> Vec<Vec<u32>> {
    (0..=degree).flat_map(|t| weak_compositions(t, n)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialFit {
    /// Exponent vector → coefficient; zero coefficients omitted.
    pub coefficients: BTreeMap<Vec<u32>, Rational>,
    /// `(point, observed - predicted)` for every held-out point.
    pub residuals: Vec<(Vec<u32>, Rational)>,
}

impl PolynomialFit {
    pub fn evaluate(&self, point: &[u32]) -> Rational {
        self.coefficients
            .iter()
            .map(|(e, c)| c * monomial_value(e, point))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn residuals_vanish(&self) -> bool {
        self.residuals.iter().all(|(_, r)| r.is_zero())
    }
}

fn monomial_value(exponents: &[u32], point: &[u32]) -> Rational {
    Rational::from_integer(
        exponents
            .iter()
            .zip(point)
            .map(|(&e, &x)| pow(x, e))
            .product(),
    )
}

/// Exact interpolation of lattice data by a polynomial of total degree
/// `<= degree_bound` in `n` variables, then evaluation on held-out points.
///
/// The linear system is solved by fraction-free (Bareiss) elimination after
/// clearing row denominators. A rank-deficient system is rejected, as is an
/// overdetermined one whose extra rows disagree.
pub fn fit_polynomial(
    n: usize,
    sample: &BTreeMap<Vec<u32>, Rational>,
    held_out: &BTreeMap<Vec<u32>, Rational>,
    degree_bound: u32,
) -> Result<PolynomialFit> {
    if let Some(p) = sample.keys().chain(held_out.keys()).find(|p| p.len() != n) {
        return Err(Error::InvalidInput(format!(
            "lattice point {p:?} does not have {n} coordinates"
        )));
    }
    let basis = monomials(n, degree_bound);
    let unknowns = basis.len();
    if sample.len() < unknowns {
        return Err(Error::SingularSystem {
            rank: sample.len(),
            unknowns,
        });
    }

    let mut rows: Vec<Vec<BigInt>> = sample
        .iter()
        .map(|(point, value)| {
            let mut row: Vec<Rational> = basis.iter().map(|e| monomial_value(e, point)).collect();
            row.push(value.clone());
            clear_denominators(&row)
        })
        .collect();

    let solution = bareiss_solve(&mut rows, unknowns, degree_bound)?;
    let coefficients: BTreeMap<Vec<u32>, Rational> = basis
        .into_iter()
        .zip(solution)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let mut fit = PolynomialFit {
        coefficients,
        residuals: Vec::new(),
    };
    fit.residuals = held_out
        .iter()
        .map(|(p, v)| (p.clone(), v - fit.evaluate(p)))
        .collect();
    Ok(fit)
}

fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, q| {
        num_integer::lcm(acc, q.denom().clone())
    });
    row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
}

/// Row-reduces the augmented integer matrix in place; returns the unique
/// solution of the first `unknowns` columns.
fn bareiss_solve(rows: &mut [Vec<BigInt>], unknowns: usize, degree: u32) -> Result<Vec<Rational>> {
    let m = rows.len();
    let width = unknowns + 1;
    let mut prev = BigInt::one();
    for col in 0..unknowns {
        let Some(pivot) = (col..m).find(|&i| !rows[i][col].is_zero()) else {
            return Err(Error::SingularSystem {
                rank: col,
                unknowns,
            });
        };
        rows.swap(col, pivot);
        for i in col + 1..m {
            for j in col + 1..width {
                let v = (&rows[col][col] * &rows[i][j] - &rows[i][col] * &rows[col][j]) / &prev;
                rows[i][j] = v;
            }
            rows[i][col] = BigInt::zero();
        }
        prev = rows[col][col].clone();
    }
    if rows[unknowns..].iter().any(|r| !r[unknowns].is_zero()) {
        return Err(Error::InconsistentSystem(degree));
    }
    let mut x = vec![Rational::zero(); unknowns];
    for i in (0..unknowns).rev() {
        let mut acc = Rational::from_integer(rows[i][unknowns].clone());
        for j in i + 1..unknowns {
            acc -= Rational::from_integer(rows[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rational::from_integer(rows[i][i].clone());
    }
    debug_assert!(x.iter().all(|q| q.denom().is_positive()));
    Ok(x)
}
