//! Enumeration of l-dominant pairs for `w ∈ W^S ⊕ W^{ΣS}`.
//!
//! The structural generator assembles triples (positive, Cartan, negative)
//! from Kostant partitions; the brute-force search walks `N^{σÎ}` under a
//! weighted mass bound and is used as its oracle.

use std::collections::{BTreeMap, BTreeSet};

use crate::cyclic::CycIndex;
use crate::derived::ModuleId;
use crate::error::{Error, Result};
use crate::quiver::DimVec;
use crate::vectors::{CycVec, VVector, VWPair, WVector};

impl CycIndex {
    /// Sum of all positive roots in simple-root coordinates. Pairing it
    /// against `C_q e_x` gives 2 for every `x`, which bounds `Σ v` by half of
    /// the weighted mass of `w`.
    pub fn two_rho(&self) -> Vec<i64> {
        let mut acc = DimVec::zeros(self.rank());
        for m in self.model().modules() {
            acc += &m.root;
        }
        acc.0
    }

    /// Upper bound on `Σ_x v(x)` over l-dominant `(v, w)`.
    pub fn mass_bound(&self, w: &WVector) -> i64 {
        let rho = self.two_rho();
        w.iter().map(|(y, c)| rho[y.vertex] * c).sum::<i64>() / 2
    }

    /// Number of multisets of positive roots summing to `beta`.
    pub fn kostant_partitions(&self, beta: &DimVec) -> u64 {
        let roots: Vec<&DimVec> = self.model().modules().iter().map(|m| &m.root).collect();
        let mut memo = BTreeMap::new();
        kostant_count(&roots, 0, beta.clone(), &mut memo)
    }

    /// The Kostant partitions of `beta` as multisets of modules.
    pub fn kostant_partition_list(&self, beta: &DimVec) -> Vec<Vec<ModuleId>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.partition_rec(0, beta.clone(), &mut current, &mut out);
        out
    }

    fn partition_rec(
        &self,
        start: ModuleId,
        rest: DimVec,
        current: &mut Vec<ModuleId>,
        out: &mut Vec<Vec<ModuleId>>,
    ) {
        if rest.is_zero() {
            out.push(current.clone());
            return;
        }
        for m in start..self.model().module_count() {
            let root = self.model().root(m);
            if rest.dominates(root) {
                current.push(m);
                self.partition_rec(m, &rest - root, current, out);
                current.pop();
            }
        }
    }

    fn split_ws(&self, w: &WVector) -> Result<(Vec<i64>, Vec<i64>)> {
        if !self.in_w_s_plus_sigma_s(w) {
            return Err(Error::NotSupported(format!("{w} is not in W^S ⊕ W^ΣS")));
        }
        let a = (0..self.rank()).map(|i| w.dot(&self.e_sigma_simple(i))).collect();
        let a_sigma = (0..self.rank()).map(|i| w.dot(&self.e_sigma_shifted_simple(i))).collect();
        Ok((a, a_sigma))
    }

    /// All `c` with `0 <= c_i <= bound_i`.
    fn boxes(bound: &[i64]) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for &b in bound {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=b).map(move |c| {
                        let mut p = prefix.clone();
                        p.push(c);
                        p
                    })
                })
                .collect();
        }
        out
    }

    /// Structural generator: every l-dominant `v` for `w`, via the
    /// triangular decomposition.
    pub fn enumerate_structural(&self, w: &WVector) -> Result<BTreeSet<VVector>> {
        let (a, a_sigma) = self.split_ws(w)?;
        let n = self.rank();
        let cap: Vec<i64> = (0..n).map(|i| a[i].min(a_sigma[i])).collect();
        let mut out = BTreeSet::new();
        for c in Self::boxes(&cap) {
            let beta_plus = DimVec((0..n).map(|i| a[i] - c[i]).collect());
            let beta_minus = DimVec((0..n).map(|i| a_sigma[i] - c[i]).collect());
            let plus: Vec<VVector> = self
                .kostant_partition_list(&beta_plus)
                .iter()
                .map(|p| self.iota_additive(p).v)
                .collect();
            let minus: Vec<VVector> = self
                .kostant_partition_list(&beta_minus)
                .iter()
                .map(|p| self.big_sigma_star(&self.iota_additive(p).v))
                .collect();
            for b in Self::boxes(&c) {
                let mut cartan = CycVec::zero();
                for i in 0..n {
                    cartan += &(&self.v_f(i) * b[i]);
                    cartan += &(&self.v_sigma_f(i) * (c[i] - b[i]));
                }
                for vp in &plus {
                    for vm in &minus {
                        out.insert(&(&cartan + vp) + vm);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Size predicted by the triangular bijection:
    /// `Σ_c Π(c_i + 1) · K(a - c) · K(a' - c)`.
    pub fn triangular_count(&self, w: &WVector) -> Result<u64> {
        let (a, a_sigma) = self.split_ws(w)?;
        let n = self.rank();
        let cap: Vec<i64> = (0..n).map(|i| a[i].min(a_sigma[i])).collect();
        let mut total = 0;
        for c in Self::boxes(&cap) {
            let splits: u64 = c.iter().map(|&ci| ci as u64 + 1).product();
            let plus = self.kostant_partitions(&DimVec((0..n).map(|i| a[i] - c[i]).collect()));
            let minus = self.kostant_partitions(&DimVec((0..n).map(|i| a_sigma[i] - c[i]).collect()));
            total += splits * plus * minus;
        }
        Ok(total)
    }

    /// Per-coordinate cap of the brute-force search.
    pub fn coordinate_cap(&self, w: &WVector) -> i64 {
        w.mass() * self.coxeter_number() as i64
    }

    /// Exhaustive search for `v >= 0` on `σÎ` with `w - C_q v >= 0`.
    pub fn enumerate_bruteforce(&self, w: &WVector) -> BTreeSet<VVector> {
        // rows (i, a) are only raised by variables at height a, so sweeping
        // by height closes rows early
        let mut vars = self.sigma_i_hat().to_vec();
        vars.sort_by_key(|x| (x.height, x.vertex));
        let rows: BTreeMap<_, usize> = self.i_hat().iter().enumerate().map(|(k, &y)| (y, k)).collect();
        let effects: Vec<Vec<(usize, i64)>> = vars
            .iter()
            .map(|&x| {
                self.q_cartan_apply(&CycVec::unit(x))
                    .iter()
                    .map(|(y, c)| (rows[&y], -c))
                    .collect()
            })
            .collect();
        // pending[k][y]: increasers of row y among variables k.. (inclusive)
        let mut pending = vec![vec![0u32; rows.len()]; vars.len() + 1];
        for k in (0..vars.len()).rev() {
            pending[k] = pending[k + 1].clone();
            for &(y, delta) in &effects[k] {
                if delta > 0 {
                    pending[k][y] += 1;
                }
            }
        }
        let mut defect: Vec<i64> = self.i_hat().iter().map(|&y| w.get(y)).collect();
        if defect.iter().any(|&d| d < 0) {
            return BTreeSet::new();
        }
        let search = Search {
            effects: &effects,
            pending: &pending,
            cap: self.coordinate_cap(w),
        };
        let mut values = vec![0i64; vars.len()];
        let mut found = Vec::new();
        search.run(0, self.mass_bound(w), &mut defect, &mut values, &mut found);
        found
            .into_iter()
            .map(|vals| vars.iter().copied().zip(vals).collect())
            .collect()
    }

    /// Structural enumeration cross-checked against the brute-force oracle.
    pub fn enumerate_l_dominant(&self, w: &WVector) -> Result<BTreeSet<VVector>> {
        let structural = self.enumerate_structural(w)?;
        let brute = self.enumerate_bruteforce(w);
        if structural != brute {
            let only_s: Vec<String> = structural.difference(&brute).map(|v| v.to_string()).collect();
            let only_b: Vec<String> = brute.difference(&structural).map(|v| v.to_string()).collect();
            return Err(Error::EnumerationMismatch(format!(
                "w = {w}: structural-only {only_s:?}, brute-force-only {only_b:?}"
            )));
        }
        Ok(structural)
    }

    /// Every l-dominant `(v, w) ∈ V^+ x W^S` with `w - C_q v = w̃`, found by
    /// searching `v` over the non-injective module vertices.
    pub fn bruteforce_lifts(&self, w_tilde: &WVector) -> Vec<VWPair> {
        let vars: Vec<_> = self
            .sigma_i_hat()
            .iter()
            .copied()
            .filter(|&x| self.is_module_vertex(x) && !self.model().is_injective(self.section(x).module))
            .collect();
        let cap = self.coordinate_cap(w_tilde).max(1);
        let mut out = Vec::new();
        let mut values = vec![0i64; vars.len()];
        loop {
            let v: VVector = vars.iter().copied().zip(values.iter().copied()).collect();
            let w = w_tilde + &self.q_cartan_apply(&v);
            let pair = VWPair::new(v, w);
            if self.in_w_s(&pair.w) && self.is_l_dominant(&pair) {
                out.push(pair);
            }
            let mut k = 0;
            while k < values.len() && values[k] == cap {
                values[k] = 0;
                k += 1;
            }
            if k == values.len() {
                break;
            }
            values[k] += 1;
        }
        out
    }
}

struct Search<'a> {
    effects: &'a [Vec<(usize, i64)>],
    pending: &'a [Vec<u32>],
    cap: i64,
}

impl Search<'_> {
    fn feasible(&self, next: usize, defect: &[i64], budget: i64) -> bool {
        defect.iter().enumerate().all(|(y, &d)| {
            d >= 0 || (self.pending[next][y] > 0 && d + budget >= 0)
        })
    }

    fn run(&self, k: usize, budget: i64, defect: &mut [i64], values: &mut [i64], found: &mut Vec<Vec<i64>>) {
        if k == values.len() {
            found.push(values.to_vec());
            return;
        }
        let top = self.cap.min(budget);
        for c in 0..=top {
            if c > 0 {
                for &(y, delta) in &self.effects[k] {
                    defect[y] += delta;
                }
            }
            values[k] = c;
            if self.feasible(k + 1, defect, budget - c) {
                self.run(k + 1, budget - c, defect, values, found);
            }
        }
        for &(y, delta) in &self.effects[k] {
            defect[y] -= delta * top;
        }
        values[k] = 0;
    }
}

fn kostant_count(
    roots: &[&DimVec],
    start: usize,
    rest: DimVec,
    memo: &mut BTreeMap<(usize, DimVec), u64>,
) -> u64 {
    if rest.is_zero() {
        return 1;
    }
    if start == roots.len() {
        return 0;
    }
    if let Some(&c) = memo.get(&(start, rest.clone())) {
        return c;
    }
    // use root `start` some number of times, then move on
    let mut total = 0;
    let mut remaining = rest.clone();
    loop {
        total += kostant_count(roots, start + 1, remaining.clone(), memo);
        if !remaining.dominates(roots[start]) {
            break;
        }
        remaining -= roots[start];
    }
    memo.insert((start, rest), total);
    total
}
