//! Exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type QMatrix = Vec<Vec<BigRational>>;

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn to_q(m: &[Vec<i64>]) -> QMatrix {
    m.iter().map(|row| row.iter().map(|&x| q(x)).collect()).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut QMatrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &QMatrix) -> usize {
    let mut work = m.clone();
    rref(&mut work).len()
}

/// Basis of `{x : m x = 0}` for a matrix with `cols` columns.
pub fn nullspace(m: &QMatrix, cols: usize) -> Vec<Vec<BigRational>> {
    let mut work = m.clone();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -work[r][f].clone();
            }
            v
        })
        .collect()
}

/// Basis of `{y : y m = 0}`.
pub fn left_nullspace(m: &QMatrix, rows: usize) -> Vec<Vec<BigRational>> {
    let cols = m.first().map_or(0, Vec::len);
    let t: QMatrix = (0..cols)
        .map(|c| (0..rows).map(|r| m[r][c].clone()).collect())
        .collect();
    nullspace(&t, rows)
}

/// Scales a rational vector to a primitive integer vector.
pub fn primitive_integer(v: &[BigRational]) -> Vec<i64> {
    let denom = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &denom).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let g = if g.is_zero() { BigInt::one() } else { g };
    ints.iter()
        .map(|x| (x / &g).to_i64().expect("entry fits in i64"))
        .collect()
}

/// Integer basis of the rational kernel, each vector made primitive with a
/// positive leading entry.
pub fn integer_kernel(m: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    nullspace(&to_q(m), cols)
        .iter()
        .map(|v| {
            let mut w = primitive_integer(v);
            if w.iter().find(|x| **x != 0).is_some_and(|x| x.is_negative()) {
                w.iter_mut().for_each(|x| *x = -*x);
            }
            w
        })
        .collect()
}

/// Whether `target` lies in the rational span of `basis`.
pub fn in_span(basis: &[Vec<i64>], target: &[i64]) -> bool {
    let without: QMatrix = to_q(basis);
    let mut with = without.clone();
    with.push(target.iter().map(|&x| q(x)).collect());
    rank(&without) == rank(&with)
}
