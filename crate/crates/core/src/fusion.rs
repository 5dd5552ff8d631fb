//! Dempster's rule of combination, classical and generalized.
//!
//! The generalized rule multiplies complex masses of every pair of focal
//! elements, routes products of disjoint pairs into the conflict
//! coefficient `K`, and renormalizes the rest by `1 / (1 - K)`. It is only
//! undefined when `K = 1`; `K` may be complex and its magnitude may exceed
//! one.

use std::collections::BTreeMap;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::mass::{Bba, Cbba};

/// Default bound on `|1 - K|` below which combination is refused.
pub const SINGULARITY_THRESHOLD: f64 = 1e-9;

/// Conflict between two complex mass functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConflictReport {
    pub k: Complex,
    pub k_magnitude: f64,
    /// `|1 - K|` is below the singularity threshold.
    pub singular: bool,
}

/// Generalized combination with a configurable singularity threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Combiner {
    singularity_threshold: f64,
}

impl Default for Combiner {
    fn default() -> Self {
        Combiner {
            singularity_threshold: SINGULARITY_THRESHOLD,
        }
    }
}

impl Combiner {
    pub fn new(singularity_threshold: f64) -> Self {
        Combiner {
            singularity_threshold,
        }
    }

    pub fn singularity_threshold(&self) -> f64 {
        self.singularity_threshold
    }

    pub fn conflict(&self, m1: &Cbba, m2: &Cbba) -> Result<ConflictReport> {
        let (k, _) = conjunctive_products(m1, m2)?;
        Ok(self.report(k))
    }

    /// Orthogonal sum `m1 ⊕ m2`.
    pub fn combine(&self, m1: &Cbba, m2: &Cbba) -> Result<Cbba> {
        let (k, products) = conjunctive_products(m1, m2)?;
        let report = self.report(k);
        if report.singular {
            return Err(Error::ConflictSingularity {
                re: k.re(),
                im: k.im(),
            });
        }
        let denom = Complex::ONE - k;
        let fused = products
            .into_iter()
            .map(|(bits, m)| Ok((bits, m.checked_div(denom)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Cbba::from_parts(m1.frame().clone(), fused))
    }

    /// Left fold `((m₁ ⊕ m₂) ⊕ m₃) ⊕ …`.
    ///
    /// A failure at the fusion of `ms[i]` is reported as step `i`.
    pub fn combine_all(&self, ms: &[Cbba]) -> Result<Cbba> {
        let (first, rest) = ms.split_first().ok_or(Error::NoEvidence)?;
        rest.iter()
            .enumerate()
            .try_fold(first.clone(), |acc, (i, m)| {
                self.combine(&acc, m).map_err(|e| Error::FusionStep {
                    step: i + 1,
                    source: Box::new(e),
                })
            })
    }

    fn report(&self, k: Complex) -> ConflictReport {
        ConflictReport {
            k,
            k_magnitude: k.modulus(),
            singular: (Complex::ONE - k).modulus() < self.singularity_threshold,
        }
    }
}

/// Conflict coefficient and unnormalized conjunctive masses for every
/// non-empty intersection.
fn conjunctive_products(m1: &Cbba, m2: &Cbba) -> Result<(Complex, BTreeMap<u32, Complex>)> {
    m1.frame().check_same(m2.frame())?;
    let mut k = Complex::ZERO;
    let mut products = BTreeMap::new();
    for (&a, &ma) in m1.raw() {
        for (&b, &mb) in m2.raw() {
            let product = ma * mb;
            match a & b {
                0 => k += product,
                c => *products.entry(c).or_insert(Complex::ZERO) += product,
            }
        }
    }
    Ok((k, products))
}

pub fn conflict(m1: &Cbba, m2: &Cbba) -> Result<ConflictReport> {
    Combiner::default().conflict(m1, m2)
}

pub fn combine(m1: &Cbba, m2: &Cbba) -> Result<Cbba> {
    Combiner::default().combine(m1, m2)
}

pub fn combine_all(ms: &[Cbba]) -> Result<Cbba> {
    Combiner::default().combine_all(ms)
}

/// Classical conflict coefficient `K = Σ_{A∩B=∅} m₁(A)·m₂(B)`.
pub fn classical_conflict(b1: &Bba, b2: &Bba) -> Result<f64> {
    b1.frame().check_same(b2.frame())?;
    let mut k = 0.0;
    for (&a, &ma) in b1.raw() {
        for (&b, &mb) in b2.raw() {
            if a & b == 0 {
                k += ma * mb;
            }
        }
    }
    Ok(k)
}

/// Classical Dempster's rule; requires `K < 1`.
pub fn classical_combine(b1: &Bba, b2: &Bba) -> Result<Bba> {
    b1.frame().check_same(b2.frame())?;
    let mut k = 0.0;
    let mut products: BTreeMap<u32, f64> = BTreeMap::new();
    for (&a, &ma) in b1.raw() {
        for (&b, &mb) in b2.raw() {
            match a & b {
                0 => k += ma * mb,
                c => *products.entry(c).or_insert(0.0) += ma * mb,
            }
        }
    }
    if 1.0 - k < SINGULARITY_THRESHOLD {
        return Err(Error::TotalConflict(k));
    }
    let norm = 1.0 - k;
    for m in products.values_mut() {
        *m /= norm;
    }
    Ok(Bba::from_parts(b1.frame().clone(), products))
}
