//! Integer polynomials in `t` and fraction-free rank over `Q(t)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Coefficients low degree first, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        let mut p = IntPoly(coeffs.into_iter().map(BigInt::from).collect());
        p.trim();
        p
    }

    /// `t^k`.
    pub fn t_pow(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        IntPoly(c)
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    /// Exact division; panics if `divisor` does not divide `self` in `Z[t]`.
    pub fn div_exact(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = &divisor.0[dd];
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            assert!(self.is_zero(), "inexact polynomial division");
            return IntPoly::zero();
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            assert!(r.is_zero(), "inexact polynomial division");
            for (j, dc) in divisor.0.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
        let mut out = IntPoly(quot);
        out.trim();
        out
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.0.len().max(rhs.0.len());
        let mut c = vec![BigInt::zero(); len];
        for (k, x) in self.0.iter().enumerate() {
            c[k] += x;
        }
        for (k, x) in rhs.0.iter().enumerate() {
            c[k] += x;
        }
        let mut p = IntPoly(c);
        p.trim();
        p
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly(self.0.iter().map(|x| -x).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &-rhs
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            for (j, y) in rhs.0.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        let mut p = IntPoly(c);
        p.trim();
        p
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}t"),
                _ => format!("{c}t^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Dense matrix of integer polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntPolyMatrix {
    rows: Vec<Vec<IntPoly>>,
    cols: usize,
}

impl IntPolyMatrix {
    pub fn new(cols: usize) -> Self {
        IntPolyMatrix {
            rows: Vec::new(),
            cols,
        }
    }

    pub fn push_row(&mut self, row: Vec<IntPoly>) {
        assert_eq!(row.len(), self.cols);
        self.rows.push(row);
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    /// Rank over `Q(t)` by Bareiss elimination with full pivoting.
    pub fn rank(&self) -> usize {
        let mut m = self.rows.clone();
        let (rows, cols) = (m.len(), self.cols);
        let mut prev = IntPoly::constant(1);
        let mut rank = 0;
        while rank < rows.min(cols) {
            let pivot = (rank..rows)
                .flat_map(|i| (rank..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !m[i][j].is_zero());
            let Some((pi, pj)) = pivot else { break };
            m.swap(rank, pi);
            for row in m.iter_mut() {
                row.swap(rank, pj);
            }
            let k = rank;
            for i in k + 1..rows {
                for j in k + 1..cols {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.div_exact(&prev);
                }
                m[i][k] = IntPoly::zero();
            }
            prev = m[k][k].clone();
            rank += 1;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(c.to_vec())
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        assert_eq!(a.div_exact(&b), p(&[-1, 1]));
        assert_eq!(IntPoly::zero().div_exact(&b), IntPoly::zero());
        let c = &p(&[2, 3]) * &p(&[0, 5, 7]);
        assert_eq!(c.div_exact(&p(&[2, 3])), p(&[0, 5, 7]));
    }

    #[test]
    fn rank_detects_dependence_over_function_field() {
        // rows (1, t) and (t, t^2) are dependent over Q(t)
        let mut m = IntPolyMatrix::new(2);
        m.push_row(vec![p(&[1]), p(&[0, 1])]);
        m.push_row(vec![p(&[0, 1]), p(&[0, 0, 1])]);
        assert_eq!(m.rank(), 1);
        m.push_row(vec![p(&[1]), p(&[1])]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rank_of_specialization_can_drop() {
        // (t, 1; 1, t) has rank 2 over Q(t) but rank 1 at t = 1
        let mut m = IntPolyMatrix::new(2);
        m.push_row(vec![p(&[0, 1]), p(&[1])]);
        m.push_row(vec![p(&[1]), p(&[0, 1])]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rank_three_by_three() {
        let mut m = IntPolyMatrix::new(3);
        m.push_row(vec![p(&[1, 1]), p(&[2]), p(&[0, 0, 3])]);
        m.push_row(vec![p(&[0, 1]), p(&[1, 1]), p(&[1])]);
        let sum: Vec<IntPoly> = (0..3).map(|j| &m.rows[0][j] + &m.rows[1][j]).collect();
        m.push_row(sum);
        assert_eq!(m.rank(), 2);
    }
}
