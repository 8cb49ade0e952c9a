//! Finite formal combinations of `L(v, w)` labels.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use serde::{Serialize, Serializer};

use super::HalfLaurent;
use crate::vectors::VWPair;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalSum(BTreeMap<VWPair, HalfLaurent>);

impl FormalSum {
    pub fn zero() -> Self {
        FormalSum::default()
    }

    pub fn term(label: VWPair, coeff: HalfLaurent) -> Self {
        let mut s = FormalSum::zero();
        s.add_term(label, &coeff);
        s
    }

    pub fn add_term(&mut self, label: VWPair, coeff: &HalfLaurent) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.0.entry(label.clone()).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.0.remove(&label);
        }
    }

    pub fn coeff(&self, label: &VWPair) -> HalfLaurent {
        self.0.get(label).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VWPair, &HalfLaurent)> {
        self.0.iter()
    }

    pub fn scale(&self, c: &HalfLaurent) -> Self {
        let mut out = FormalSum::zero();
        for (label, coeff) in &self.0 {
            out.add_term(label.clone(), &(coeff * c));
        }
        out
    }

    /// Renders the sum with a caller-supplied label printer.
    pub fn render(&self, label: impl Fn(&VWPair) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(l, c)| format!("({c}) L{}", label(l)))
            .collect();
        parts.join(" + ")
    }
}

impl Add for &FormalSum {
    type Output = FormalSum;
    fn add(self, rhs: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        for (label, coeff) in &rhs.0 {
            out.add_term(label.clone(), coeff);
        }
        out
    }
}

impl Sub for &FormalSum {
    type Output = FormalSum;
    fn sub(self, rhs: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        for (label, coeff) in &rhs.0 {
            out.add_term(label.clone(), &-coeff);
        }
        out
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(|l| l.to_string()))
    }
}

impl Serialize for FormalSum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_map(self.0.iter().map(|(l, c)| (l.to_string(), c.to_string())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vectors::{CycVec, CycVertex};

    #[test]
    fn cancellation_removes_labels() {
        let l = VWPair::new(CycVec::zero(), CycVec::unit(CycVertex::new(0, 0)));
        let a = FormalSum::term(l.clone(), HalfLaurent::t(1));
        let b = FormalSum::term(l.clone(), HalfLaurent::t(1));
        assert!((&a - &b).is_zero());
        assert_eq!((&a + &b).coeff(&l), HalfLaurent::t(1).scale(2));
        assert_eq!(a.scale(&HalfLaurent::t(-1)).coeff(&l), HalfLaurent::one());
    }
}
