//! Laurent polynomials in `t^{1/2}` with integer coefficients.

pub mod formal;
pub mod poly;
pub mod serre;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Serialize, Serializer};

/// An element of `½Z`, stored as its double.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    /// `n / 2`.
    pub fn halves(n: i64) -> Self {
        HalfInt(n)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn scale(self, k: i64) -> HalfInt {
        HalfInt(self.0 * k)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::from_int(n)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_int() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.0),
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.to_int() {
            Some(n) => serializer.serialize_i64(n),
            None => serializer.serialize_str(&self.to_string()),
        }
    }
}

/// `Σ c_e t^e` with `e ∈ ½Z`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfLaurent(BTreeMap<HalfInt, i64>);

impl HalfLaurent {
    pub fn zero() -> Self {
        HalfLaurent::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, HalfInt::ZERO)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, HalfInt::ZERO)
    }

    pub fn monomial(c: i64, e: HalfInt) -> Self {
        let mut p = HalfLaurent::zero();
        p.add_term(e, c);
        p
    }

    /// `t^k`.
    pub fn t(k: i64) -> Self {
        Self::monomial(1, HalfInt::from_int(k))
    }

    pub fn t_half(e: HalfInt) -> Self {
        Self::monomial(1, e)
    }

    /// `[n]_t = (t^n - t^{-n}) / (t - t^{-1})`.
    pub fn quantum_int(n: i64) -> Self {
        let mut p = HalfLaurent::zero();
        let sign = n.signum();
        for k in 0..n.abs() {
            p.add_term(HalfInt::from_int(n.abs() - 1 - 2 * k), sign);
        }
        p
    }

    pub fn add_term(&mut self, e: HalfInt, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.0.entry(e).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.0.remove(&e);
        }
    }

    pub fn coeff(&self, e: HalfInt) -> i64 {
        self.0.get(&e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (HalfInt, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `t^{1/2} ↦ t^{-1/2}`.
    pub fn bar(&self) -> Self {
        HalfLaurent(self.0.iter().map(|(&e, &c)| (-e, c)).collect())
    }

    /// `t^e` if this is a single monomial with coefficient 1.
    pub fn as_power(&self) -> Option<HalfInt> {
        match self.0.iter().next() {
            Some((&e, &1)) if self.0.len() == 1 => Some(e),
            _ => None,
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return HalfLaurent::zero();
        }
        HalfLaurent(self.0.iter().map(|(&e, &c)| (e, c * k)).collect())
    }

    pub fn shift(&self, by: HalfInt) -> Self {
        HalfLaurent(self.0.iter().map(|(&e, &c)| (e + by, c)).collect())
    }
}

impl AddAssign<&HalfLaurent> for HalfLaurent {
    fn add_assign(&mut self, rhs: &HalfLaurent) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&HalfLaurent> for HalfLaurent {
    fn sub_assign(&mut self, rhs: &HalfLaurent) {
        for (e, c) in rhs.terms() {
            self.add_term(e, -c);
        }
    }
}

impl Add for &HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        self.scale(-1)
    }
}

impl Mul for &HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.0.iter().rev().enumerate() {
            let (sign, abs) = if *c < 0 { ("-", -c) } else { ("+", *c) };
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if *e == HalfInt::ZERO {
                write!(f, "{abs}")?;
                continue;
            }
            if abs != 1 {
                write!(f, "{abs}")?;
            }
            if *e == HalfInt::from_int(1) {
                write!(f, "t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for HalfLaurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_integers() {
        let two = HalfLaurent::quantum_int(2);
        assert_eq!(two, &HalfLaurent::t(1) + &HalfLaurent::t(-1));
        for n in 0..6 {
            let q = HalfLaurent::quantum_int(n);
            assert_eq!(q.bar(), q);
            let lhs = &q * &(&HalfLaurent::t(1) - &HalfLaurent::t(-1));
            assert_eq!(lhs, &HalfLaurent::t(n) - &HalfLaurent::t(-n));
        }
    }

    #[test]
    fn difference_of_squares() {
        let a = &HalfLaurent::t(1) - &HalfLaurent::t(-1);
        let b = &HalfLaurent::t(1) + &HalfLaurent::t(-1);
        assert_eq!(&a * &b, &HalfLaurent::t(2) - &HalfLaurent::t(-2));
    }

    #[test]
    fn display() {
        let p = &(&HalfLaurent::t(2) - &HalfLaurent::constant(3)) + &HalfLaurent::t_half(HalfInt::halves(-1));
        assert_eq!(p.to_string(), "t^2 - 3 + t^-1/2");
        assert_eq!(HalfLaurent::zero().to_string(), "0");
        assert_eq!(HalfLaurent::t(1).as_power(), Some(HalfInt::from_int(1)));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn laurent() -> impl Strategy<Value = HalfLaurent> {
            proptest::collection::vec((-6i64..6, -3i64..4), 0..5).prop_map(|terms| {
                let mut p = HalfLaurent::zero();
                for (e, c) in terms {
                    p.add_term(HalfInt::halves(e), c);
                }
                p
            })
        }

        proptest! {
            #[test]
            fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&(&a + &b) - &b, a.clone());
                prop_assert_eq!(&a * &HalfLaurent::one(), a.clone());
            }

            #[test]
            fn bar_is_an_involutive_automorphism(a in laurent(), b in laurent()) {
                prop_assert_eq!(a.bar().bar(), a.clone());
                prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
                prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
            }
        }
    }
}
