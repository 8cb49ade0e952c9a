//! Oriented simply-laced Dynkin quivers.
//!
//! Vertices are stored 0-based; every user-facing label (spec files, display
//! strings, CLI literals) is 1-based.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Integer vector indexed by the vertices of a quiver (a K0-class).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DimVec(pub Vec<i64>);

impl DimVec {
    pub fn zeros(n: usize) -> Self {
        DimVec(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        DimVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &DimVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn iter(&self) -> impl Iterator<Item = &i64> {
        self.0.iter()
    }
}

impl Index<usize> for DimVec {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &DimVec {
    type Output = DimVec;
    fn add(self, rhs: &DimVec) -> DimVec {
        DimVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DimVec {
    type Output = DimVec;
    fn sub(self, rhs: &DimVec) -> DimVec {
        DimVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &DimVec {
    type Output = DimVec;
    fn neg(self) -> DimVec {
        DimVec(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<i64> for &DimVec {
    type Output = DimVec;
    fn mul(self, k: i64) -> DimVec {
        DimVec(self.0.iter().map(|a| a * k).collect())
    }
}

impl AddAssign<&DimVec> for DimVec {
    fn add_assign(&mut self, rhs: &DimVec) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&DimVec> for DimVec {
    fn sub_assign(&mut self, rhs: &DimVec) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl fmt::Display for DimVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
        }
    }

    pub fn coxeter_number(self) -> usize {
        match self {
            DynkinType::A(n) => n + 1,
            DynkinType::D(n) => 2 * n - 2,
            DynkinType::E(6) => 12,
            DynkinType::E(7) => 18,
            DynkinType::E(8) => 30,
            DynkinType::E(n) => unreachable!("E{n} is not a Dynkin type"),
        }
    }

    /// Undirected edges of the Bourbaki labelling, 0-based, each with `a < b`.
    pub fn standard_edges(self) -> Vec<(usize, usize)> {
        match self {
            DynkinType::A(n) => (1..n).map(|k| (k - 1, k)).collect(),
            DynkinType::D(n) => {
                let mut e: Vec<_> = (1..n - 1).map(|k| (k - 1, k)).collect();
                e.push((n - 3, n - 1));
                e
            }
            DynkinType::E(n) => {
                // 1-3, 3-4, 4-5, ..., (n-1)-n, and 2-4
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|k| (k, k + 1)));
                e.sort();
                e
            }
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unknown Dynkin type `{s}`"));
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rest: String = chars.filter(|c| *c != '_').collect();
        let n: usize = rest.parse().map_err(|_| bad())?;
        match (letter, n) {
            ('A', n) if n >= 1 => Ok(DynkinType::A(n)),
            ('D', n) if n >= 4 => Ok(DynkinType::D(n)),
            ('E', 6..=8) => Ok(DynkinType::E(n)),
            _ => Err(bad()),
        }
    }
}

/// Shortcut orientations for the standard labelling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Every edge points from the larger label to the smaller one.
    Linear,
    /// Vertex 1 is a sink and every vertex is a sink or a source.
    Alternating,
    /// Bit `k` set reverses the `k`-th standard edge relative to `Linear`.
    Mask(u64),
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "linear" => Ok(Orientation::Linear),
            "alternating" => Ok(Orientation::Alternating),
            other => match other.strip_prefix("mask:") {
                Some(bits) => bits
                    .parse()
                    .map(Orientation::Mask)
                    .map_err(|_| Error::Parse(format!("bad orientation mask `{bits}`"))),
                None => Err(Error::Parse(format!("unknown orientation `{other}`"))),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DynkinQuiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
    dynkin: DynkinType,
    coxeter_number: usize,
    #[serde(skip)]
    neighbors: Vec<Vec<usize>>,
}

impl DynkinQuiver {
    /// Validates an arrow list (0-based `(source, target)` pairs) and
    /// classifies its underlying graph.
    pub fn from_arrows(n: usize, mut arrows: Vec<(usize, usize)>) -> Result<Self> {
        arrows.sort_unstable();
        if n == 0 {
            return Err(Error::NotATree("no vertices".into()));
        }
        let mut seen = BTreeSet::new();
        for &(s, t) in &arrows {
            if s >= n || t >= n {
                return Err(Error::Parse(format!(
                    "arrow {} -> {} references a vertex outside 1..={n}",
                    s + 1,
                    t + 1
                )));
            }
            if s == t {
                return Err(Error::NotATree(format!("loop at vertex {}", s + 1)));
            }
            if !seen.insert((s.min(t), s.max(t))) {
                return Err(Error::NotSimplyLaced(format!(
                    "more than one arrow between {} and {}",
                    s + 1,
                    t + 1
                )));
            }
        }
        if arrows.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "{} arrows on {n} vertices (a tree needs {})",
                arrows.len(),
                n - 1
            )));
        }
        let mut neighbors = vec![Vec::new(); n];
        for &(s, t) in &arrows {
            neighbors[s].push(t);
            neighbors[t].push(s);
        }
        for adj in &mut neighbors {
            adj.sort_unstable();
        }
        let mut reached = vec![false; n];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(u) = stack.pop() {
            for &w in &neighbors[u] {
                if !reached[w] {
                    reached[w] = true;
                    stack.push(w);
                }
            }
        }
        if reached.iter().any(|r| !r) {
            return Err(Error::NotATree("graph is disconnected".into()));
        }
        let dynkin = classify(&neighbors)?;
        Ok(DynkinQuiver {
            n,
            arrows,
            dynkin,
            coxeter_number: dynkin.coxeter_number(),
            neighbors,
        })
    }

    pub fn standard(ty: DynkinType, orientation: Orientation) -> Self {
        let edges = ty.standard_edges();
        let arrows = match orientation {
            Orientation::Linear => edges.iter().map(|&(a, b)| (b, a)).collect(),
            Orientation::Mask(mask) => edges
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| if mask >> k & 1 == 1 { (a, b) } else { (b, a) })
                .collect(),
            Orientation::Alternating => {
                let parity = tree_parity(ty.rank(), &edges);
                edges
                    .iter()
                    .map(|&(a, b)| if parity[a] == 0 { (b, a) } else { (a, b) })
                    .collect()
            }
        };
        Self::from_arrows(ty.rank(), arrows).expect("standard Dynkin diagrams are valid")
    }

    /// All `2^(n-1)` orientations of the standard labelling.
    pub fn all_orientations(ty: DynkinType) -> Vec<Self> {
        let edges = ty.rank() - 1;
        (0..1u64 << edges)
            .map(|mask| Self::standard(ty, Orientation::Mask(mask)))
            .collect()
    }

    /// Parses the plain-text spec format: `vertices: n` followed by
    /// `arrow: s t` lines with 1-based labels. `#` starts a comment.
    pub fn parse_spec(text: &str) -> Result<Self> {
        let mut n = None;
        let mut arrows = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = || Error::Parse(format!("line {}: `{}`", lineno + 1, raw.trim()));
            let (key, value) = line.split_once(':').ok_or_else(err)?;
            match key.trim() {
                "vertices" => n = Some(value.trim().parse::<usize>().map_err(|_| err())?),
                "arrow" => {
                    let ends: Vec<usize> = value
                        .split_whitespace()
                        .map(|tok| tok.parse::<usize>().map_err(|_| err()))
                        .collect::<Result<_>>()?;
                    match ends[..] {
                        [s, t] if s >= 1 && t >= 1 => arrows.push((s - 1, t - 1)),
                        _ => return Err(err()),
                    }
                }
                _ => return Err(err()),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing `vertices:` line".into()))?;
        Self::from_arrows(n, arrows)
    }

    pub fn to_spec(&self) -> String {
        let mut out = format!("vertices: {}\n", self.n);
        for &(s, t) in &self.arrows {
            out.push_str(&format!("arrow: {} {}\n", s + 1, t + 1));
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn dynkin_type(&self) -> DynkinType {
        self.dynkin
    }

    pub fn coxeter_number(&self) -> usize {
        self.coxeter_number
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.neighbors[i].binary_search(&j).is_ok()
    }

    pub fn has_arrow(&self, s: usize, t: usize) -> bool {
        self.arrows.contains(&(s, t))
    }

    /// Arrows written as `s->t` with 1-based labels, e.g. `3->2,2->1`.
    pub fn orientation_label(&self) -> String {
        let parts: Vec<String> = self
            .arrows
            .iter()
            .map(|(s, t)| format!("{}->{}", s + 1, t + 1))
            .collect();
        parts.join(",")
    }

    pub fn euler_form(&self, x: &DimVec, y: &DimVec) -> i64 {
        let diag: i64 = x.iter().zip(y.iter()).map(|(a, b)| a * b).sum();
        let arrows: i64 = self.arrows.iter().map(|&(s, t)| x[s] * y[t]).sum();
        diag - arrows
    }

    /// `E[i][j] = <e_i, e_j>`.
    pub fn euler_matrix(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; self.n]; self.n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(s, t) in &self.arrows {
            m[s][t] -= 1;
        }
        m
    }

    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        let (ei, ej) = (DimVec::unit(self.n, i), DimVec::unit(self.n, j));
        self.euler_form(&ei, &ej) + self.euler_form(&ej, &ei)
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.cartan_entry(i, j)).collect())
            .collect()
    }

    /// Integer height function with `xi(0) = 0` and `xi(s) = xi(t) + 1`
    /// along every arrow `s -> t`.
    pub fn height_function(&self) -> HeightFunction {
        let mut xi = vec![None; self.n];
        xi[0] = Some(0i64);
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            let hu = xi[u].unwrap();
            for &(s, t) in &self.arrows {
                let (other, value) = if s == u {
                    (t, hu - 1)
                } else if t == u {
                    (s, hu + 1)
                } else {
                    continue;
                };
                if xi[other].is_none() {
                    xi[other] = Some(value);
                    stack.push(other);
                }
            }
        }
        HeightFunction(xi.into_iter().map(Option::unwrap).collect())
    }

    /// `paths[i][j]` is the number of paths from `i` to `j` (0 or 1 on a
    /// tree), trivial paths included.
    pub fn path_counts(&self) -> Vec<Vec<i64>> {
        let mut paths = vec![vec![0; self.n]; self.n];
        for (start, row) in paths.iter_mut().enumerate() {
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                row[u] += 1;
                for &(s, t) in &self.arrows {
                    if s == u {
                        stack.push(t);
                    }
                }
            }
        }
        paths
    }

    /// Dimension vector of the indecomposable projective at `i`.
    pub fn projective_dim(&self, i: usize) -> DimVec {
        DimVec(self.path_counts()[i].clone())
    }

    /// Dimension vector of the indecomposable injective at `i`.
    pub fn injective_dim(&self, i: usize) -> DimVec {
        DimVec(self.path_counts().iter().map(|row| row[i]).collect())
    }

    /// Vertices ordered so that every arrow goes from an earlier vertex to a
    /// later one; reflecting at sources in this order is admissible.
    pub fn source_order(&self) -> Vec<usize> {
        let mut indeg = vec![0usize; self.n];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(&u) = ready.iter().next() {
            ready.remove(&u);
            order.push(u);
            for &(s, t) in &self.arrows {
                if s == u {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        ready.insert(t);
                    }
                }
            }
        }
        order
    }
}

impl fmt::Display for DynkinQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.dynkin, self.orientation_label())
    }
}

/// Integer lift of a height function `I -> <q>`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HeightFunction(pub Vec<i64>);

impl HeightFunction {
    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn respects(&self, quiver: &DynkinQuiver) -> bool {
        quiver
            .arrows()
            .iter()
            .all(|&(s, t)| self.0[s] == self.0[t] + 1)
    }
}

fn tree_parity(n: usize, edges: &[(usize, usize)]) -> Vec<u8> {
    let mut parity = vec![u8::MAX; n];
    parity[0] = 0;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            let other = if a == u {
                b
            } else if b == u {
                a
            } else {
                continue;
            };
            if parity[other] == u8::MAX {
                parity[other] = 1 - parity[u];
                stack.push(other);
            }
        }
    }
    parity
}

fn classify(neighbors: &[Vec<usize>]) -> Result<DynkinType> {
    let n = neighbors.len();
    if let Some(v) = (0..n).find(|&v| neighbors[v].len() > 3) {
        return Err(Error::NotADE(format!(
            "vertex {} has degree {}",
            v + 1,
            neighbors[v].len()
        )));
    }
    let branch: Vec<usize> = (0..n).filter(|&v| neighbors[v].len() == 3).collect();
    match branch[..] {
        [] => Ok(DynkinType::A(n)),
        [centre] => {
            let mut arms: Vec<usize> = neighbors[centre]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (centre, start, 1);
                    while let Some(&next) = neighbors[cur].iter().find(|&&w| w != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms[..] {
                [1, 1, r] => Ok(DynkinType::D(r + 3)),
                [1, 2, 2] => Ok(DynkinType::E(6)),
                [1, 2, 3] => Ok(DynkinType::E(7)),
                [1, 2, 4] => Ok(DynkinType::E(8)),
                _ => Err(Error::NotADE(format!("branch arms {arms:?}"))),
            }
        }
        _ => Err(Error::NotADE(format!(
            "{} branch vertices",
            branch.len()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> DynkinType {
        DynkinType::A(n)
    }

    /// Order of the Coxeter transformation `s_1 s_2 ... s_n` acting on the
    /// root lattice, by brute-force powering.
    fn coxeter_order(q: &DynkinQuiver) -> usize {
        let n = q.rank();
        let c = q.cartan_matrix();
        let reflect = |k: usize, v: &mut Vec<i64>| {
            let pairing: i64 = (0..n).map(|j| c[k][j] * v[j]).sum();
            v[k] -= pairing;
        };
        let apply = |v: &mut Vec<i64>| {
            for k in (0..n).rev() {
                reflect(k, v);
            }
        };
        let basis: Vec<Vec<i64>> = (0..n).map(|i| DimVec::unit(n, i).0).collect();
        let mut current = basis.clone();
        for order in 1..=64 {
            for v in &mut current {
                apply(v);
            }
            if current == basis {
                return order;
            }
        }
        panic!("no finite order found");
    }

    #[test]
    fn loads_small_quivers() {
        let q = DynkinQuiver::from_arrows(3, vec![(2, 1), (1, 0)]).unwrap();
        assert_eq!(q.dynkin_type(), a(3));
        assert_eq!(q.coxeter_number(), 4);
        let q = DynkinQuiver::from_arrows(1, vec![]).unwrap();
        assert_eq!(q.dynkin_type(), a(1));
        assert_eq!(q.coxeter_number(), 2);
    }

    #[test]
    fn rejects_invalid_graphs() {
        let cyc = DynkinQuiver::from_arrows(3, vec![(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(cyc, Err(Error::NotATree(_))));
        let multi = DynkinQuiver::from_arrows(2, vec![(0, 1), (1, 0)]);
        assert!(matches!(multi, Err(Error::NotSimplyLaced(_))));
        let disconnected = DynkinQuiver::from_arrows(4, vec![(0, 1), (2, 3)]);
        assert!(disconnected.is_err());
        let star = DynkinQuiver::from_arrows(5, vec![(1, 0), (2, 0), (3, 0), (4, 0)]);
        assert!(matches!(star, Err(Error::NotADE(_))));
        // affine D4~ has two branch points... use E-tilde shape: arms (2,2,2)
        let e6_affine = DynkinQuiver::from_arrows(
            7,
            vec![(1, 0), (2, 1), (3, 0), (4, 3), (5, 0), (6, 5)],
        );
        assert!(matches!(e6_affine, Err(Error::NotADE(_))));
    }

    #[test]
    fn classifies_standard_types() {
        for ty in [a(1), a(5), DynkinType::D(4), DynkinType::D(6), DynkinType::E(6), DynkinType::E(7), DynkinType::E(8)] {
            let q = DynkinQuiver::standard(ty, Orientation::Alternating);
            assert_eq!(q.dynkin_type(), ty);
        }
    }

    #[test]
    fn coxeter_number_is_order_of_coxeter_transformation() {
        for ty in [a(1), a(2), a(3), a(4), a(5), DynkinType::D(4), DynkinType::D(5), DynkinType::E(6), DynkinType::E(7), DynkinType::E(8)] {
            let q = DynkinQuiver::standard(ty, Orientation::Linear);
            assert_eq!(coxeter_order(&q), q.coxeter_number(), "{ty}");
        }
    }

    #[test]
    fn euler_form_values() {
        let a2 = DynkinQuiver::standard(a(2), Orientation::Linear);
        assert_eq!(a2.arrows(), &[(1, 0)][..]);
        assert_eq!(a2.euler_form(&DimVec::unit(2, 1), &DimVec::unit(2, 0)), -1);
        assert_eq!(a2.euler_form(&DimVec::unit(2, 0), &DimVec::unit(2, 1)), 0);
        let a3 = DynkinQuiver::standard(a(3), Orientation::Linear);
        let p3 = a3.projective_dim(2);
        assert_eq!(p3, DimVec(vec![1, 1, 1]));
        assert_eq!(a3.euler_form(&p3, &DimVec::unit(3, 1)), 0);
        for i in 0..3 {
            assert_eq!(a3.euler_form(&DimVec::unit(3, i), &DimVec::unit(3, i)), 1);
        }
    }

    #[test]
    fn cartan_entries() {
        let a3 = DynkinQuiver::standard(a(3), Orientation::Linear);
        assert_eq!(a3.cartan_entry(0, 0), 2);
        assert_eq!(a3.cartan_entry(0, 1), -1);
        assert_eq!(a3.cartan_entry(0, 2), 0);
        let d4 = DynkinQuiver::standard(DynkinType::D(4), Orientation::Mask(5));
        let c = d4.cartan_matrix();
        for (i, row) in c.iter().enumerate() {
            for (j, &entry) in row.iter().enumerate() {
                assert_eq!(entry, c[j][i]);
            }
        }
    }

    #[test]
    fn height_functions() {
        let a3 = DynkinQuiver::standard(a(3), Orientation::Linear);
        assert_eq!(a3.height_function().0, vec![0, 1, 2]);
        let a1 = DynkinQuiver::standard(a(1), Orientation::Linear);
        assert_eq!(a1.height_function().0, vec![0]);
        let a2 = DynkinQuiver::standard(a(2), Orientation::Linear);
        assert_eq!(a2.height_function().0, vec![0, 1]);
        for q in DynkinQuiver::all_orientations(DynkinType::E(6)) {
            assert!(q.height_function().respects(&q));
        }
    }

    #[test]
    fn spec_round_trip() {
        let q = DynkinQuiver::standard(DynkinType::D(5), Orientation::Alternating);
        let back = DynkinQuiver::parse_spec(&q.to_spec()).unwrap();
        assert_eq!(q, back);
        let parsed = DynkinQuiver::parse_spec("# a3\nvertices: 3\narrow: 3 2\narrow: 2 1\n").unwrap();
        assert_eq!(parsed, DynkinQuiver::standard(a(3), Orientation::Linear));
        assert!(DynkinQuiver::parse_spec("vertices: 2\narrow: 1\n").is_err());
    }

    #[test]
    fn parses_type_names() {
        assert_eq!("A3".parse::<DynkinType>().unwrap(), a(3));
        assert_eq!("e_8".parse::<DynkinType>().unwrap(), DynkinType::E(8));
        assert!("D3".parse::<DynkinType>().is_err());
        assert!("E9".parse::<DynkinType>().is_err());
    }

    #[test]
    fn source_order_is_admissible() {
        for q in DynkinQuiver::all_orientations(DynkinType::D(5)) {
            let order = q.source_order();
            let pos: Vec<usize> = (0..5).map(|v| order.iter().position(|&u| u == v).unwrap()).collect();
            for &(s, t) in q.arrows() {
                assert!(pos[s] < pos[t]);
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn euler_form_is_bilinear(
                mask in 0u64..8,
                x in proptest::collection::vec(-5i64..5, 4),
                y in proptest::collection::vec(-5i64..5, 4),
                z in proptest::collection::vec(-5i64..5, 4),
                k in -4i64..4,
            ) {
                let q = DynkinQuiver::standard(DynkinType::D(4), Orientation::Mask(mask));
                let (x, y, z) = (DimVec(x), DimVec(y), DimVec(z));
                let lhs = q.euler_form(&(&x + &(&z * k)), &y);
                prop_assert_eq!(lhs, q.euler_form(&x, &y) + k * q.euler_form(&z, &y));
                let rhs = q.euler_form(&x, &(&y + &(&z * k)));
                prop_assert_eq!(rhs, q.euler_form(&x, &y) + k * q.euler_form(&x, &z));
            }
        }
    }
}
