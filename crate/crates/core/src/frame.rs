//! Frames of discernment and propositions over their power set.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported frame; a proposition is a single `u32` bitmask.
pub const MAX_FRAME_SIZE: usize = 32;

/// An ordered set of mutually exclusive hypotheses.
///
/// Cloning is cheap: the labels are shared.
#[derive(Clone)]
pub struct Frame {
    labels: Arc<[String]>,
}

impl Frame {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidFrame(
                "a frame needs at least one element".into(),
            ));
        }
        if labels.len() > MAX_FRAME_SIZE {
            return Err(Error::InvalidFrame(format!(
                "{} elements exceed the capacity of {MAX_FRAME_SIZE}",
                labels.len()
            )));
        }
        for (i, label) in labels.iter().enumerate() {
            if label.trim().is_empty() {
                return Err(Error::InvalidFrame(format!(
                    "element {i} has an empty label"
                )));
            }
            if labels[..i].contains(label) {
                return Err(Error::InvalidFrame(format!("duplicate label `{label}`")));
            }
        }
        Ok(Frame {
            labels: labels.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Bitmask with every element present.
    pub fn full_bits(&self) -> u32 {
        if self.len() == MAX_FRAME_SIZE {
            u32::MAX
        } else {
            (1u32 << self.len()) - 1
        }
    }

    pub fn empty_set(&self) -> Proposition {
        Proposition {
            frame: self.clone(),
            bits: 0,
        }
    }

    pub fn omega(&self) -> Proposition {
        Proposition {
            frame: self.clone(),
            bits: self.full_bits(),
        }
    }

    pub fn singleton(&self, index: usize) -> Option<Proposition> {
        (index < self.len()).then(|| Proposition {
            frame: self.clone(),
            bits: 1 << index,
        })
    }

    pub fn singletons(&self) -> impl Iterator<Item = Proposition> + '_ {
        (0..self.len()).map(move |i| Proposition {
            frame: self.clone(),
            bits: 1 << i,
        })
    }

    pub fn proposition_from_bits(&self, bits: u32) -> Result<Proposition> {
        if bits & !self.full_bits() != 0 {
            return Err(Error::InvalidFrame(format!(
                "bitmask {bits:#b} is wider than the frame ({} elements)",
                self.len()
            )));
        }
        Ok(Proposition {
            frame: self.clone(),
            bits,
        })
    }

    /// The proposition containing exactly the named elements.
    pub fn proposition<I, S>(&self, labels: I) -> Result<Proposition>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0u32;
        for label in labels {
            let label = label.as_ref();
            let idx = self
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            bits |= 1 << idx;
        }
        Ok(Proposition {
            frame: self.clone(),
            bits,
        })
    }

    /// All `2^N` subsets, empty set first, in ascending bitmask order.
    pub fn powerset(&self) -> Powerset {
        Powerset {
            frame: self.clone(),
            next: 0,
            end: 1u64 << self.len(),
        }
    }

    pub(crate) fn same_as(&self, other: &Frame) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }

    pub(crate) fn check_same(&self, other: &Frame) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::FrameMismatch)
        }
    }

    pub(crate) fn render_bits(&self, bits: u32) -> String {
        if bits == 0 {
            return "∅".to_string();
        }
        let names: Vec<&str> = (0..self.len())
            .filter(|i| bits & (1 << i) != 0)
            .map(|i| self.labels[i].as_str())
            .collect();
        names.join(",")
    }
}

impl PartialEq for Frame {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Frame {}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Frame").field(&self.labels).finish()
    }
}

/// Iterator over the power set of a frame.
pub struct Powerset {
    frame: Frame,
    next: u64,
    end: u64,
}

impl Iterator for Powerset {
    type Item = Proposition;

    fn next(&mut self) -> Option<Proposition> {
        if self.next >= self.end {
            return None;
        }
        let bits = self.next as u32;
        self.next += 1;
        Some(Proposition {
            frame: self.frame.clone(),
            bits,
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.end - self.next).unwrap_or(usize::MAX);
        (n, Some(n))
    }
}

/// A subset of a frame, stored as a bitmask (bit `i` set when element `i`
/// is present).
#[derive(Clone, PartialEq, Eq)]
pub struct Proposition {
    frame: Frame,
    bits: u32,
}

impl Proposition {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    #[inline]
    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn cardinality(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn intersect(&self, other: &Proposition) -> Result<Proposition> {
        self.frame.check_same(&other.frame)?;
        Ok(Proposition {
            frame: self.frame.clone(),
            bits: self.bits & other.bits,
        })
    }

    pub fn union(&self, other: &Proposition) -> Result<Proposition> {
        self.frame.check_same(&other.frame)?;
        Ok(Proposition {
            frame: self.frame.clone(),
            bits: self.bits | other.bits,
        })
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Proposition) -> Result<bool> {
        self.frame.check_same(&other.frame)?;
        Ok(self.bits & !other.bits == 0)
    }

    /// Element labels in frame order, joined by `,`; `∅` for the empty set.
    pub fn label(&self) -> String {
        self.frame.render_bits(self.bits)
    }

    /// Element labels in frame order.
    pub fn elements(&self) -> Vec<&str> {
        (0..self.frame.len())
            .filter(|i| self.bits & (1 << i) != 0)
            .map(|i| self.frame.labels[i].as_str())
            .collect()
    }
}

impl fmt::Debug for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.label())
    }
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(n: usize) -> Frame {
        Frame::new((0..n).map(|i| format!("E{}", i + 1))).unwrap()
    }

    /// Naive set representation used as an oracle.
    fn as_list(p: &Proposition) -> Vec<String> {
        p.elements().into_iter().map(str::to_string).collect()
    }

    #[test]
    fn frame_validation() {
        assert!(Frame::new(Vec::<String>::new()).is_err());
        assert!(Frame::new(["A", "A"]).is_err());
        assert!(Frame::new(["A", ""]).is_err());
        assert!(Frame::new((0..33).map(|i| i.to_string())).is_err());
        let big = Frame::new((0..32).map(|i| i.to_string())).unwrap();
        assert_eq!(big.full_bits(), u32::MAX);
    }

    #[test]
    fn powerset_small_frames() {
        let labels: Vec<String> = frame(1).powerset().map(|p| p.label()).collect();
        assert_eq!(labels, ["∅", "E1"]);

        let ab = Frame::new(["A", "B"]).unwrap();
        let labels: Vec<String> = ab.powerset().map(|p| p.label()).collect();
        assert_eq!(labels, ["∅", "A", "B", "A,B"]);
    }

    #[test]
    fn powerset_three_has_eight_distinct_subsets() {
        let f = frame(3);
        let subsets: Vec<Vec<String>> = f.powerset().map(|p| as_list(&p)).collect();
        assert_eq!(subsets.len(), 8);
        for (i, a) in subsets.iter().enumerate() {
            for b in &subsets[i + 1..] {
                assert_ne!(a, b);
            }
        }
        // every subset of {E1,E2,E3} built by hand appears
        let labels = ["E1", "E2", "E3"];
        for mask in 0..8u32 {
            let expect: Vec<String> = (0..3)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| labels[i].to_string())
                .collect();
            assert!(subsets.contains(&expect));
        }
    }

    #[test]
    fn set_operations() {
        let ab = Frame::new(["A", "B"]).unwrap();
        let a = ab.proposition(["A"]).unwrap();
        let b = ab.proposition(["B"]).unwrap();
        let i = a.intersect(&b).unwrap();
        assert!(i.is_empty());
        assert!(a.is_subset(&ab.omega()).unwrap());
        assert!(!ab.omega().is_subset(&a).unwrap());
        assert_eq!(ab.proposition(["B", "A"]).unwrap().label(), "A,B");
        assert_eq!(ab.proposition(["C"]), Err(Error::UnknownLabel("C".into())));
    }

    #[test]
    fn frame_mismatch_detected() {
        let f1 = Frame::new(["A", "B"]).unwrap();
        let f2 = Frame::new(["A", "C"]).unwrap();
        let a = f1.proposition(["A"]).unwrap();
        let c = f2.proposition(["A"]).unwrap();
        assert_eq!(a.intersect(&c), Err(Error::FrameMismatch));
        assert_eq!(a.is_subset(&c), Err(Error::FrameMismatch));
        // structurally equal frames are interchangeable
        let f3 = Frame::new(["A", "B"]).unwrap();
        assert!(a.is_subset(&f3.omega()).unwrap());
    }

    #[test]
    fn intersect_matches_list_oracle() {
        let f = frame(3);
        for a in f.powerset() {
            for b in f.powerset() {
                let la = as_list(&a);
                let lb = as_list(&b);
                let expect: Vec<String> = la.iter().filter(|x| lb.contains(x)).cloned().collect();
                assert_eq!(as_list(&a.intersect(&b).unwrap()), expect);
                let subset = la.iter().all(|x| lb.contains(x));
                assert_eq!(a.is_subset(&b).unwrap(), subset);
            }
        }
    }

    #[test]
    fn intersection_laws_exhaustive() {
        for n in 1..=4 {
            let f = frame(n);
            let all: Vec<Proposition> = f.powerset().collect();
            let omega = f.omega();
            for a in &all {
                assert_eq!(&a.intersect(a).unwrap(), a);
                assert_eq!(&a.intersect(&omega).unwrap(), a);
                for b in &all {
                    assert_eq!(a.intersect(b).unwrap(), b.intersect(a).unwrap());
                    for c in &all {
                        let left = a.intersect(b).unwrap().intersect(c).unwrap();
                        let right = a.intersect(&b.intersect(c).unwrap()).unwrap();
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }

    #[test]
    fn subset_is_partial_order() {
        for n in 1..=4 {
            let all: Vec<Proposition> = frame(n).powerset().collect();
            for a in &all {
                assert!(a.is_subset(a).unwrap());
                for b in &all {
                    if a.is_subset(b).unwrap() && b.is_subset(a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        if a.is_subset(b).unwrap() && b.is_subset(c).unwrap() {
                            assert!(a.is_subset(c).unwrap());
                        }
                    }
                }
            }
        }
    }
}
