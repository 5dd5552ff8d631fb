//! Real and complex mass functions with their belief measures.
//!
//! A [`Bba`] is the classical basic belief assignment: real masses in
//! `[0, 1]` summing to one. A [`Cbba`] assigns each proposition a complex
//! mass whose magnitude lies in `[0, 1]` and whose complex sum is exactly
//! `1 + 0i`. Both are sparse: propositions that are not listed carry zero
//! mass.

use std::collections::BTreeMap;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::frame::{Frame, Proposition};

/// Default tolerance on the normalization condition.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

/// Slack allowed above magnitude 1 for an individual mass.
pub const MAGNITUDE_TOLERANCE: f64 = 1e-9;

/// Masses at or below this magnitude are not focal.
pub const FOCAL_THRESHOLD: f64 = 1e-12;

/// Complex basic belief assignment.
#[derive(Debug, Clone, PartialEq)]
pub struct Cbba {
    frame: Frame,
    masses: BTreeMap<u32, Complex>,
}

impl Cbba {
    /// Validates a complex mass assignment at the default tolerance.
    pub fn new<I>(frame: &Frame, masses: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Proposition, Complex)>,
    {
        Self::with_tolerance(frame, masses, NORMALIZATION_TOLERANCE)
    }

    /// Validates a complex mass assignment, accepting a complex sum within
    /// `tolerance` of `1 + 0i` in each component.
    pub fn with_tolerance<I>(frame: &Frame, masses: I, tolerance: f64) -> Result<Self>
    where
        I: IntoIterator<Item = (Proposition, Complex)>,
    {
        let mut map = BTreeMap::new();
        for (prop, mass) in masses {
            frame.check_same(prop.frame())?;
            if !(mass.re().is_finite() && mass.im().is_finite()) {
                return Err(Error::NonFinite(format!("mass of {prop}")));
            }
            if map.contains_key(&prop.bits()) {
                return Err(Error::DuplicateProposition(prop.label()));
            }
            if prop.is_empty() {
                if mass != Complex::ZERO {
                    return Err(Error::EmptySetMass {
                        re: mass.re(),
                        im: mass.im(),
                    });
                }
                continue;
            }
            let magnitude = mass.modulus();
            if magnitude > 1.0 + MAGNITUDE_TOLERANCE {
                return Err(Error::MagnitudeOutOfRange {
                    proposition: prop.label(),
                    magnitude,
                });
            }
            map.insert(prop.bits(), mass);
        }
        let total: Complex = map.values().sum();
        if (total.re() - 1.0).abs() > tolerance || total.im().abs() > tolerance {
            return Err(Error::NotNormalized {
                re: total.re(),
                im: total.im(),
                tolerance,
            });
        }
        map.retain(|_, m| *m != Complex::ZERO);
        Ok(Cbba {
            frame: frame.clone(),
            masses: map,
        })
    }

    /// All mass on the whole frame: complete ignorance.
    pub fn vacuous(frame: &Frame) -> Self {
        Cbba {
            frame: frame.clone(),
            masses: BTreeMap::from([(frame.full_bits(), Complex::ONE)]),
        }
    }

    /// Wraps masses produced by combination without re-validating them.
    pub(crate) fn from_parts(frame: Frame, mut masses: BTreeMap<u32, Complex>) -> Self {
        masses.remove(&0);
        masses.retain(|_, m| *m != Complex::ZERO);
        Cbba { frame, masses }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn mass(&self, prop: &Proposition) -> Result<Complex> {
        self.frame.check_same(prop.frame())?;
        Ok(self.mass_of_bits(prop.bits()))
    }

    pub(crate) fn mass_of_bits(&self, bits: u32) -> Complex {
        self.masses.get(&bits).copied().unwrap_or(Complex::ZERO)
    }

    pub(crate) fn raw(&self) -> &BTreeMap<u32, Complex> {
        &self.masses
    }

    /// Non-zero masses in ascending bitmask order.
    pub fn iter(&self) -> impl Iterator<Item = (Proposition, Complex)> + '_ {
        self.masses
            .iter()
            .map(move |(&bits, &m)| (self.prop(bits), m))
    }

    /// Complex sum of all masses.
    pub fn total(&self) -> Complex {
        self.masses.values().sum()
    }

    /// True when every mass has a zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.masses.values().all(|m| m.is_real())
    }

    /// Propositions whose mass has strictly positive magnitude.
    pub fn focal_elements(&self) -> FocalSet {
        FocalSet(
            self.masses
                .iter()
                .filter(|(_, m)| m.modulus() > FOCAL_THRESHOLD)
                .map(|(&bits, &m)| (self.prop(bits), m))
                .collect(),
        )
    }

    /// Masses whose magnitude exceeds one. Always empty for validated input;
    /// combination results may have some.
    pub fn magnitude_overflow(&self) -> Vec<(Proposition, f64)> {
        self.masses
            .iter()
            .map(|(&bits, m)| (bits, m.modulus()))
            .filter(|&(_, r)| r > 1.0 + MAGNITUDE_TOLERANCE)
            .map(|(bits, r)| (self.prop(bits), r))
            .collect()
    }

    /// Complex belief: sum of `|M(B)|` over `B ⊆ A`.
    pub fn bel_c(&self, a: &Proposition) -> Result<f64> {
        self.frame.check_same(a.frame())?;
        let a = a.bits();
        Ok(self
            .masses
            .iter()
            .filter(|(&b, _)| b & !a == 0)
            .map(|(_, m)| m.modulus())
            .sum())
    }

    /// Complex plausibility: sum of `|M(B)|` over `B ∩ A ≠ ∅`.
    pub fn pl_c(&self, a: &Proposition) -> Result<f64> {
        self.frame.check_same(a.frame())?;
        let a = a.bits();
        Ok(self
            .masses
            .iter()
            .filter(|(&b, _)| b & a != 0)
            .map(|(_, m)| m.modulus())
            .sum())
    }

    fn prop(&self, bits: u32) -> Proposition {
        self.frame
            .proposition_from_bits(bits)
            .expect("stored bitmask fits its frame")
    }
}

impl From<&Bba> for Cbba {
    fn from(b: &Bba) -> Self {
        b.lift()
    }
}

/// Focal elements of a complex mass function, in ascending bitmask order.
#[derive(Debug, Clone, PartialEq)]
pub struct FocalSet(Vec<(Proposition, Complex)>);

impl FocalSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, (Proposition, Complex)> {
        self.0.iter()
    }

    pub fn propositions(&self) -> impl Iterator<Item = &Proposition> {
        self.0.iter().map(|(p, _)| p)
    }
}

impl IntoIterator for FocalSet {
    type Item = (Proposition, Complex);
    type IntoIter = std::vec::IntoIter<(Proposition, Complex)>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

/// Classical real-valued basic belief assignment.
#[derive(Debug, Clone, PartialEq)]
pub struct Bba {
    frame: Frame,
    masses: BTreeMap<u32, f64>,
}

impl Bba {
    pub fn new<I>(frame: &Frame, masses: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Proposition, f64)>,
    {
        Self::with_tolerance(frame, masses, NORMALIZATION_TOLERANCE)
    }

    pub fn with_tolerance<I>(frame: &Frame, masses: I, tolerance: f64) -> Result<Self>
    where
        I: IntoIterator<Item = (Proposition, f64)>,
    {
        let mut map = BTreeMap::new();
        for (prop, mass) in masses {
            frame.check_same(prop.frame())?;
            if !mass.is_finite() {
                return Err(Error::NonFinite(format!("mass of {prop}")));
            }
            if map.contains_key(&prop.bits()) {
                return Err(Error::DuplicateProposition(prop.label()));
            }
            if prop.is_empty() {
                if mass != 0.0 {
                    return Err(Error::EmptySetMass { re: mass, im: 0.0 });
                }
                continue;
            }
            if !(-MAGNITUDE_TOLERANCE..=1.0 + MAGNITUDE_TOLERANCE).contains(&mass) {
                return Err(Error::MagnitudeOutOfRange {
                    proposition: prop.label(),
                    magnitude: mass,
                });
            }
            map.insert(prop.bits(), mass);
        }
        let total: f64 = map.values().sum();
        if (total - 1.0).abs() > tolerance {
            return Err(Error::NotNormalized {
                re: total,
                im: 0.0,
                tolerance,
            });
        }
        map.retain(|_, m| *m != 0.0);
        Ok(Bba {
            frame: frame.clone(),
            masses: map,
        })
    }

    pub fn vacuous(frame: &Frame) -> Self {
        Bba {
            frame: frame.clone(),
            masses: BTreeMap::from([(frame.full_bits(), 1.0)]),
        }
    }

    pub(crate) fn from_parts(frame: Frame, mut masses: BTreeMap<u32, f64>) -> Self {
        masses.remove(&0);
        masses.retain(|_, m| *m != 0.0);
        Bba { frame, masses }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn mass(&self, prop: &Proposition) -> Result<f64> {
        self.frame.check_same(prop.frame())?;
        Ok(self.masses.get(&prop.bits()).copied().unwrap_or(0.0))
    }

    pub(crate) fn raw(&self) -> &BTreeMap<u32, f64> {
        &self.masses
    }

    pub fn iter(&self) -> impl Iterator<Item = (Proposition, f64)> + '_ {
        self.masses.iter().map(move |(&bits, &m)| {
            let p = self
                .frame
                .proposition_from_bits(bits)
                .expect("stored bitmask fits its frame");
            (p, m)
        })
    }

    pub fn bel(&self, a: &Proposition) -> Result<f64> {
        self.frame.check_same(a.frame())?;
        let a = a.bits();
        Ok(self
            .masses
            .iter()
            .filter(|(&b, _)| b & !a == 0)
            .map(|(_, m)| m)
            .sum())
    }

    pub fn pl(&self, a: &Proposition) -> Result<f64> {
        self.frame.check_same(a.frame())?;
        let a = a.bits();
        Ok(self
            .masses
            .iter()
            .filter(|(&b, _)| b & a != 0)
            .map(|(_, m)| m)
            .sum())
    }

    /// Embeds the real masses into the complex plane (`m ↦ m + 0i`).
    pub fn lift(&self) -> Cbba {
        Cbba::from_parts(
            self.frame.clone(),
            self.masses
                .iter()
                .map(|(&b, &m)| (b, Complex::real(m)))
                .collect(),
        )
    }
}
