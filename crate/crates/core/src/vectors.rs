//! Finitely supported integer vectors on `I x Z/2h`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Serialize, Serializer};

/// `(i, a)` with `a` a residue mod `2h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CycVertex {
    pub vertex: usize,
    pub height: usize,
}

impl CycVertex {
    pub fn new(vertex: usize, height: usize) -> Self {
        CycVertex { vertex, height }
    }
}

impl fmt::Display for CycVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.vertex + 1, self.height)
    }
}

/// Sparse integer vector; zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycVec(BTreeMap<CycVertex, i64>);

/// Elements of `Z^{σÎ}`.
pub type VVector = CycVec;
/// Elements of `Z^{Î}`.
pub type WVector = CycVec;

impl CycVec {
    pub fn zero() -> Self {
        CycVec(BTreeMap::new())
    }

    pub fn unit(x: CycVertex) -> Self {
        Self::from_entries([(x, 1)])
    }

    pub fn from_entries<I: IntoIterator<Item = (CycVertex, i64)>>(entries: I) -> Self {
        let mut v = CycVec::zero();
        for (x, c) in entries {
            v.add_at(x, c);
        }
        v
    }

    pub fn get(&self, x: CycVertex) -> i64 {
        self.0.get(&x).copied().unwrap_or(0)
    }

    pub fn add_at(&mut self, x: CycVertex, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.0.entry(x).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.0.remove(&x);
        }
    }

    pub fn set(&mut self, x: CycVertex, c: i64) {
        if c == 0 {
            self.0.remove(&x);
        } else {
            self.0.insert(x, c);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (CycVertex, i64)> + '_ {
        self.0.iter().map(|(&x, &c)| (x, c))
    }

    pub fn support(&self) -> impl Iterator<Item = CycVertex> + '_ {
        self.0.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.values().all(|&c| c >= 0)
    }

    /// Sum of all entries.
    pub fn mass(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn dot(&self, other: &CycVec) -> i64 {
        let (small, large) = if self.0.len() <= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.iter().map(|(x, c)| c * large.get(x)).sum()
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &CycVec) -> bool {
        let keys = self.0.keys().chain(other.0.keys());
        keys.into_iter().all(|&x| self.get(x) >= other.get(x))
    }

    /// Pushforward along a map of index sets: `e_x ↦ e_{f(x)}`.
    pub fn map_keys(&self, f: impl Fn(CycVertex) -> CycVertex) -> CycVec {
        CycVec::from_entries(self.iter().map(|(x, c)| (f(x), c)))
    }

    pub fn restrict(&self, keep: impl Fn(CycVertex) -> bool) -> CycVec {
        CycVec(self.0.iter().filter(|(&x, _)| keep(x)).map(|(&x, &c)| (x, c)).collect())
    }
}

impl FromIterator<(CycVertex, i64)> for CycVec {
    fn from_iter<I: IntoIterator<Item = (CycVertex, i64)>>(iter: I) -> Self {
        CycVec::from_entries(iter)
    }
}

impl AddAssign<&CycVec> for CycVec {
    fn add_assign(&mut self, rhs: &CycVec) {
        for (x, c) in rhs.iter() {
            self.add_at(x, c);
        }
    }
}

impl SubAssign<&CycVec> for CycVec {
    fn sub_assign(&mut self, rhs: &CycVec) {
        for (x, c) in rhs.iter() {
            self.add_at(x, -c);
        }
    }
}

impl Add for &CycVec {
    type Output = CycVec;
    fn add(self, rhs: &CycVec) -> CycVec {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &CycVec {
    type Output = CycVec;
    fn sub(self, rhs: &CycVec) -> CycVec {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &CycVec {
    type Output = CycVec;
    fn neg(self) -> CycVec {
        CycVec(self.0.iter().map(|(&x, &c)| (x, -c)).collect())
    }
}

impl Mul<i64> for &CycVec {
    type Output = CycVec;
    fn mul(self, k: i64) -> CycVec {
        if k == 0 {
            return CycVec::zero();
        }
        CycVec(self.0.iter().map(|(&x, &c)| (x, c * k)).collect())
    }
}

impl fmt::Display for CycVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (x, c)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}={c}")?;
        }
        Ok(())
    }
}

impl Serialize for CycVec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_map(self.iter().map(|(x, c)| (x.to_string(), c)))
    }
}

/// A pair `(v, w)` with `v` on `σÎ` and `w` on `Î`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VWPair {
    pub v: VVector,
    pub w: WVector,
}

impl VWPair {
    pub fn new(v: VVector, w: WVector) -> Self {
        VWPair { v, w }
    }

    pub fn zero() -> Self {
        VWPair::default()
    }
}

impl Add for &VWPair {
    type Output = VWPair;
    fn add(self, rhs: &VWPair) -> VWPair {
        VWPair::new(&self.v + &rhs.v, &self.w + &rhs.w)
    }
}

impl fmt::Display for VWPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.v, self.w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, a: usize) -> CycVertex {
        CycVertex::new(i, a)
    }

    #[test]
    #[allow(clippy::erasing_op)]
    fn zero_entries_are_dropped() {
        let mut v = CycVec::unit(x(0, 1));
        v.add_at(x(0, 1), -1);
        assert!(v.is_zero());
        assert_eq!(v, CycVec::zero());
        let w = &CycVec::unit(x(1, 2)) * 0;
        assert!(w.is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = CycVec::from_entries([(x(0, 1), 2), (x(1, 0), 1)]);
        let b = CycVec::from_entries([(x(0, 1), -2), (x(2, 3), 4)]);
        let s = &a + &b;
        assert_eq!(s, CycVec::from_entries([(x(1, 0), 1), (x(2, 3), 4)]));
        assert_eq!(&s - &b, a);
        assert_eq!(a.dot(&b), -4);
        assert_eq!(a.mass(), 3);
        assert!(a.dominates(&CycVec::unit(x(1, 0))));
        assert!(!a.dominates(&b.restrict(|k| k.vertex == 2)));
        assert_eq!(a.to_string(), "1:1=2,2:0=1");
    }
}
