//! Graded dimensions of the algebra generated by the `E_i` modulo the
//! quantum Serre relations.

use std::collections::{BTreeMap, BTreeSet};

use super::poly::{IntPoly, IntPolyMatrix};
use crate::error::{Error, Result};
use crate::quiver::{DimVec, DynkinQuiver};

/// Largest total degree accepted by [`serre_quotient_dims`] unless the caller
/// raises it.
pub const DEFAULT_DEGREE_CAP: usize = 7;

type Word = Vec<usize>;

struct Relation {
    degree: DimVec,
    terms: Vec<(Word, IntPoly)>,
}

/// The Serre elements with denominators cleared: for adjacent `i, j`,
/// `t E_i^2 E_j - (t^2 + 1) E_i E_j E_i + t E_j E_i^2`; otherwise
/// `E_i E_j - E_j E_i`.
fn serre_relations(q: &DynkinQuiver) -> Vec<Relation> {
    let n = q.rank();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut degree = DimVec::zeros(n);
            let terms = if q.adjacent(i, j) {
                degree.0[i] = 2;
                degree.0[j] = 1;
                vec![
                    (vec![i, i, j], IntPoly::t_pow(1)),
                    (vec![i, j, i], IntPoly::from_coeffs(vec![-1, 0, -1])),
                    (vec![j, i, i], IntPoly::t_pow(1)),
                ]
            } else {
                degree.0[i] = 1;
                degree.0[j] = 1;
                vec![(vec![i, j], IntPoly::constant(1)), (vec![j, i], IntPoly::constant(-1))]
            };
            out.push(Relation { degree, terms });
        }
    }
    out
}

/// All words with the given multidegree, in lexicographic order.
fn words(beta: &DimVec) -> Vec<Word> {
    let total = beta.total() as usize;
    let mut out = Vec::new();
    let mut rest = beta.0.clone();
    let mut current = Vec::with_capacity(total);
    fn rec(rest: &mut Vec<i64>, current: &mut Word, total: usize, out: &mut Vec<Word>) {
        if current.len() == total {
            out.push(current.clone());
            return;
        }
        for i in 0..rest.len() {
            if rest[i] > 0 {
                rest[i] -= 1;
                current.push(i);
                rec(rest, current, total, out);
                current.pop();
                rest[i] += 1;
            }
        }
    }
    rec(&mut rest, &mut current, total, &mut out);
    out
}

/// Dimension of the degree-`beta` piece of the quotient.
pub fn serre_quotient_dim(q: &DynkinQuiver, beta: &DimVec) -> u64 {
    let basis = words(beta);
    let position: BTreeMap<&Word, usize> = basis.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut slice = IntPolyMatrix::new(basis.len());
    for rel in serre_relations(q) {
        if !beta.dominates(&rel.degree) {
            continue;
        }
        let gamma = beta - &rel.degree;
        for outer in words(&gamma) {
            for cut in 0..=outer.len() {
                let mut row = vec![IntPoly::zero(); basis.len()];
                for (middle, coeff) in &rel.terms {
                    let mut word = outer[..cut].to_vec();
                    word.extend_from_slice(middle);
                    word.extend_from_slice(&outer[cut..]);
                    let k = position[&word];
                    row[k] = &row[k] + coeff;
                }
                slice.push_row(row);
            }
        }
    }
    (basis.len() - slice.rank()) as u64
}

/// Graded dimensions for every multidegree of total degree at most `maxdeg`.
pub fn serre_quotient_dims(
    q: &DynkinQuiver,
    maxdeg: usize,
    cap: usize,
) -> Result<BTreeMap<DimVec, u64>> {
    if maxdeg > cap {
        return Err(Error::DegreeTooLarge {
            requested: maxdeg,
            cap,
        });
    }
    let mut out = BTreeMap::new();
    for beta in multidegrees(q.rank(), maxdeg) {
        let dim = serre_quotient_dim(q, &beta);
        out.insert(beta, dim);
    }
    Ok(out)
}

/// All `beta >= 0` in `N^n` with total at most `maxdeg`.
pub fn multidegrees(n: usize, maxdeg: usize) -> BTreeSet<DimVec> {
    let mut out = BTreeSet::new();
    let mut current = vec![0i64; n];
    fn rec(k: usize, left: i64, current: &mut Vec<i64>, out: &mut BTreeSet<DimVec>) {
        if k == current.len() {
            out.insert(DimVec(current.clone()));
            return;
        }
        for c in 0..=left {
            current[k] = c;
            rec(k + 1, left - c, current, out);
        }
        current[k] = 0;
    }
    rec(0, maxdeg as i64, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{DynkinType, Orientation};

    #[test]
    fn a2_low_degrees() {
        let q = DynkinQuiver::standard(DynkinType::A(2), Orientation::Linear);
        assert_eq!(serre_quotient_dim(&q, &DimVec(vec![1, 0])), 1);
        assert_eq!(serre_quotient_dim(&q, &DimVec(vec![1, 1])), 2);
        assert_eq!(serre_quotient_dim(&q, &DimVec(vec![2, 1])), 2);
        assert_eq!(serre_quotient_dim(&q, &DimVec(vec![0, 0])), 1);
    }

    #[test]
    fn non_adjacent_generators_commute() {
        let q = DynkinQuiver::standard(DynkinType::A(3), Orientation::Linear);
        assert_eq!(serre_quotient_dim(&q, &DimVec(vec![1, 0, 1])), 1);
        assert_eq!(serre_quotient_dim(&q, &DimVec(vec![2, 0, 1])), 1);
    }

    #[test]
    fn degree_cap() {
        let q = DynkinQuiver::standard(DynkinType::A(2), Orientation::Linear);
        assert_eq!(
            serre_quotient_dims(&q, 9, DEFAULT_DEGREE_CAP),
            Err(Error::DegreeTooLarge { requested: 9, cap: DEFAULT_DEGREE_CAP })
        );
        let dims = serre_quotient_dims(&q, 2, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(dims.len(), 6);
    }

    #[test]
    fn multidegree_enumeration() {
        assert_eq!(multidegrees(2, 2).len(), 6);
        assert_eq!(multidegrees(3, 1).len(), 4);
    }
}
