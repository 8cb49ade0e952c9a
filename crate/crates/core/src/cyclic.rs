//! The 2h-periodic index sets `Î` and `σÎ`, the maps σ, τ, Σ on them, the
//! covering by the derived category, and the q-Cartan matrix.

use std::collections::BTreeMap;

use crate::derived::{DerivedModel, DerivedObject, ModuleId};
use crate::error::{Error, Result};
use crate::linalg::integer_kernel;
use crate::quiver::{DynkinQuiver, HeightFunction};
use crate::vectors::{CycVec, CycVertex, VVector, WVector};

#[derive(Clone, Debug)]
pub struct CycIndex {
    model: DerivedModel,
    xi: HeightFunction,
    h: usize,
    i_hat: Vec<CycVertex>,
    sigma_i_hat: Vec<CycVertex>,
    section: BTreeMap<CycVertex, DerivedObject>,
    /// `π` restricted to objects with shift 0 or 1.
    covering: BTreeMap<(ModuleId, i64), CycVertex>,
    big_sigma: BTreeMap<CycVertex, CycVertex>,
}

impl CycIndex {
    /// Index with the canonical height function.
    pub fn new(quiver: &DynkinQuiver) -> Result<Self> {
        Self::build(quiver, &quiver.height_function())
    }

    pub fn build(quiver: &DynkinQuiver, xi: &HeightFunction) -> Result<Self> {
        if !xi.respects(quiver) {
            return Err(Error::NotSupported("height function violates the arrow rule".into()));
        }
        let model = DerivedModel::new(quiver)?;
        let n = quiver.rank();
        let h = quiver.coxeter_number();
        let period = 2 * h as i64;
        let mut i_hat = Vec::with_capacity(n * h);
        let mut sigma_i_hat = Vec::with_capacity(n * h);
        for i in 0..n {
            for a in 0..2 * h {
                let x = CycVertex::new(i, a);
                if (a as i64 - xi.get(i)).rem_euclid(2) == 0 {
                    i_hat.push(x);
                } else {
                    sigma_i_hat.push(x);
                }
            }
        }
        let mut section = BTreeMap::new();
        let mut covering = BTreeMap::new();
        for i in 0..n {
            for d in 0..h {
                let a = (xi.get(i) + 1 + 2 * d as i64).rem_euclid(period) as usize;
                let x = CycVertex::new(i, a);
                let object = model.window_slot(i, d).object;
                section.insert(x, object);
                covering.insert((object.module, object.shift), x);
            }
        }
        let mut index = CycIndex {
            model,
            xi: xi.clone(),
            h,
            i_hat,
            sigma_i_hat,
            section,
            covering,
            big_sigma: BTreeMap::new(),
        };
        let mut big_sigma = BTreeMap::new();
        for &x in &index.sigma_i_hat {
            let shifted = index.section[&x].shifted(1);
            big_sigma.insert(x, index.covering_vertex(shifted));
        }
        for &y in &index.i_hat {
            let x = index.sigma_inv(y);
            big_sigma.insert(y, index.sigma(big_sigma[&x]));
        }
        index.big_sigma = big_sigma;
        Ok(index)
    }

    pub fn model(&self) -> &DerivedModel {
        &self.model
    }

    pub fn quiver(&self) -> &DynkinQuiver {
        self.model.quiver()
    }

    pub fn rank(&self) -> usize {
        self.model.rank()
    }

    pub fn coxeter_number(&self) -> usize {
        self.h
    }

    pub fn period(&self) -> usize {
        2 * self.h
    }

    pub fn height(&self) -> &HeightFunction {
        &self.xi
    }

    pub fn i_hat(&self) -> &[CycVertex] {
        &self.i_hat
    }

    pub fn sigma_i_hat(&self) -> &[CycVertex] {
        &self.sigma_i_hat
    }

    pub fn in_i_hat(&self, x: CycVertex) -> bool {
        x.vertex < self.rank()
            && x.height < self.period()
            && (x.height as i64 - self.xi.get(x.vertex)).rem_euclid(2) == 0
    }

    pub fn in_sigma_i_hat(&self, x: CycVertex) -> bool {
        x.vertex < self.rank() && x.height < self.period() && !self.in_i_hat(x)
    }

    /// `σ(i, a) = (i, a - 1)`.
    pub fn sigma(&self, x: CycVertex) -> CycVertex {
        CycVertex::new(x.vertex, (x.height + self.period() - 1) % self.period())
    }

    pub fn sigma_inv(&self, x: CycVertex) -> CycVertex {
        CycVertex::new(x.vertex, (x.height + 1) % self.period())
    }

    pub fn tau_vertex(&self, x: CycVertex) -> CycVertex {
        self.sigma(self.sigma(x))
    }

    pub fn tau_inv_vertex(&self, x: CycVertex) -> CycVertex {
        self.sigma_inv(self.sigma_inv(x))
    }

    /// The involution Σ on `I x Z/2h`.
    pub fn big_sigma(&self, x: CycVertex) -> CycVertex {
        self.big_sigma[&x]
    }

    /// Canonical representative of a vertex of `σÎ`.
    pub fn section(&self, x: CycVertex) -> DerivedObject {
        self.section[&x]
    }

    /// The covering `π`, which only depends on the shift mod 2.
    pub fn covering_vertex(&self, x: DerivedObject) -> CycVertex {
        self.covering[&(x.module, x.shift.rem_euclid(2))]
    }

    /// `π(M)` for a module `M`.
    pub fn module_vertex(&self, m: ModuleId) -> CycVertex {
        self.covering_vertex(DerivedObject::module(m))
    }

    /// `π(ΣM)` for a module `M`.
    pub fn shifted_vertex(&self, m: ModuleId) -> CycVertex {
        self.covering_vertex(DerivedObject { module: m, shift: 1 })
    }

    /// Integer height `ξ(i) + 1 + 2d` of `τ^{-d} P_i`.
    pub fn module_height(&self, m: ModuleId) -> i64 {
        let (i, d) = self.model.slot(m);
        self.xi.get(i) + 1 + 2 * d as i64
    }

    pub fn vertex_name(&self, x: CycVertex) -> String {
        if self.in_sigma_i_hat(x) {
            self.model.object_name(self.section(x))
        } else {
            format!("σ{}", self.vertex_name(self.sigma_inv(x)))
        }
    }

    /// `C_q e_{(i,a)} = e_{(i,a+1)} + e_{(i,a-1)} - Σ_{j ~ i} e_{(j,a)}`.
    pub fn q_cartan_apply(&self, v: &VVector) -> WVector {
        let mut out = CycVec::zero();
        for (x, c) in v.iter() {
            out.add_at(self.sigma_inv(x), c);
            out.add_at(self.sigma(x), c);
            for &j in self.quiver().neighbors(x.vertex) {
                out.add_at(CycVertex::new(j, x.height), -c);
            }
        }
        out
    }

    /// `C_q` as a matrix with rows indexed by `Î` and columns by `σÎ`.
    pub fn q_cartan_matrix(&self) -> Vec<Vec<i64>> {
        let rows: BTreeMap<CycVertex, usize> =
            self.i_hat.iter().enumerate().map(|(k, &y)| (y, k)).collect();
        let mut m = vec![vec![0; self.sigma_i_hat.len()]; self.i_hat.len()];
        for (col, &x) in self.sigma_i_hat.iter().enumerate() {
            for (y, c) in self.q_cartan_apply(&CycVec::unit(x)).iter() {
                m[rows[&y]][col] += c;
            }
        }
        m
    }

    /// Integer basis of `ker C_q` on `Z^{σÎ}`.
    pub fn q_cartan_kernel(&self) -> Vec<VVector> {
        integer_kernel(&self.q_cartan_matrix(), self.sigma_i_hat.len())
            .into_iter()
            .map(|k| {
                self.sigma_i_hat
                    .iter()
                    .zip(k)
                    .map(|(&x, c)| (x, c))
                    .collect()
            })
            .collect()
    }

    /// Pullback `(σ* u)(y) = u(σ y)`.
    pub fn sigma_pullback(&self, u: &CycVec) -> CycVec {
        u.map_keys(|x| self.sigma_inv(x))
    }

    /// Pushforward `Σ* e_z = e_{Σ z}`.
    pub fn big_sigma_star(&self, u: &CycVec) -> CycVec {
        u.map_keys(|x| self.big_sigma(x))
    }

    /// `w - C_q v`.
    pub fn defect(&self, v: &VVector, w: &WVector) -> WVector {
        w - &self.q_cartan_apply(v)
    }

    /// Vertex of `σÎ` carrying the named object (`S1`, `ΣP2`, ...).
    pub fn object_vertex(&self, name: &str) -> Result<CycVertex> {
        Ok(self.covering_vertex(self.model.parse_object(name)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{DynkinType, Orientation};

    fn index(ty: DynkinType, o: Orientation) -> CycIndex {
        CycIndex::new(&DynkinQuiver::standard(ty, o)).unwrap()
    }

    #[test]
    fn a1_index_sets() {
        let idx = index(DynkinType::A(1), Orientation::Linear);
        assert_eq!(idx.i_hat(), &[CycVertex::new(0, 0), CycVertex::new(0, 2)][..]);
        assert_eq!(idx.sigma_i_hat(), &[CycVertex::new(0, 1), CycVertex::new(0, 3)][..]);
        assert_eq!(idx.big_sigma(CycVertex::new(0, 1)), CycVertex::new(0, 3));
        assert_eq!(idx.vertex_name(CycVertex::new(0, 1)), "S1");
        assert_eq!(idx.vertex_name(CycVertex::new(0, 3)), "ΣS1");
        assert_eq!(idx.vertex_name(CycVertex::new(0, 0)), "σS1");
    }

    #[test]
    fn a3_section_matches_example() {
        let idx = index(DynkinType::A(3), Orientation::Linear);
        for i in 0..3 {
            for d in 0..4 {
                let x = CycVertex::new(i, (i + 1 + 2 * d) % 8);
                assert!(idx.in_sigma_i_hat(x));
                let expected = idx.model().window_slot(i, d).object;
                assert_eq!(idx.section(x), expected);
            }
        }
    }

    #[test]
    fn cardinalities_and_partition() {
        for ty in [DynkinType::A(5), DynkinType::D(5), DynkinType::E(7)] {
            let idx = index(ty, Orientation::Alternating);
            let nh = ty.rank() * ty.coxeter_number();
            assert_eq!(idx.i_hat().len(), nh);
            assert_eq!(idx.sigma_i_hat().len(), nh);
            for &x in idx.i_hat() {
                assert!(!idx.in_sigma_i_hat(x));
                assert!(idx.in_sigma_i_hat(idx.sigma(x)));
            }
        }
    }

    #[test]
    fn covering_is_tau_equivariant_and_inverts_section() {
        for q in DynkinQuiver::all_orientations(DynkinType::D(4)) {
            let idx = CycIndex::new(&q).unwrap();
            for &x in idx.sigma_i_hat() {
                let obj = idx.section(x);
                assert_eq!(idx.covering_vertex(obj), x);
                assert_eq!(idx.covering_vertex(idx.model().tau(obj)), idx.tau_vertex(x));
            }
            for i in 0..4 {
                let p = idx.module_vertex(idx.model().projective(i));
                assert_eq!(p.height as i64, (idx.height().get(i) + 1).rem_euclid(12));
            }
        }
    }

    #[test]
    fn big_sigma_is_an_involution_commuting_with_sigma() {
        for q in DynkinQuiver::all_orientations(DynkinType::A(4)) {
            let idx = CycIndex::new(&q).unwrap();
            let all: Vec<_> = idx.i_hat().iter().chain(idx.sigma_i_hat()).copied().collect();
            for x in all {
                assert_eq!(idx.big_sigma(idx.big_sigma(x)), x);
                assert_eq!(idx.big_sigma(idx.sigma(x)), idx.sigma(idx.big_sigma(x)));
                assert_eq!(idx.in_i_hat(idx.big_sigma(x)), idx.in_i_hat(x));
                assert_eq!(idx.in_i_hat(idx.tau_vertex(x)), idx.in_i_hat(x));
            }
        }
    }

    #[test]
    fn q_cartan_rule() {
        let idx = index(DynkinType::A(3), Orientation::Linear);
        let x = CycVertex::new(0, 1);
        let expected = CycVec::from_entries([
            (CycVertex::new(0, 2), 1),
            (CycVertex::new(0, 0), 1),
            (CycVertex::new(1, 1), -1),
        ]);
        assert_eq!(idx.q_cartan_apply(&CycVec::unit(x)), expected);
        assert!(idx.q_cartan_apply(&CycVec::zero()).is_zero());
        let a1 = index(DynkinType::A(1), Orientation::Linear);
        let img = a1.q_cartan_apply(&CycVec::unit(x));
        assert_eq!(img, CycVec::from_entries([(CycVertex::new(0, 2), 1), (CycVertex::new(0, 0), 1)]));
        for &x in idx.sigma_i_hat() {
            for y in idx.q_cartan_apply(&CycVec::unit(x)).support() {
                assert!(idx.in_i_hat(y));
            }
        }
    }

    #[test]
    fn q_cartan_is_not_injective() {
        for ty in [DynkinType::A(1), DynkinType::A(3), DynkinType::D(4)] {
            let idx = index(ty, Orientation::Linear);
            let kernel = idx.q_cartan_kernel();
            assert!(!kernel.is_empty());
            for k in &kernel {
                assert!(idx.q_cartan_apply(k).is_zero());
            }
        }
    }

    #[test]
    fn q_cartan_commutes_with_big_sigma() {
        let idx = index(DynkinType::D(5), Orientation::Mask(6));
        for &x in idx.sigma_i_hat() {
            let e = CycVec::unit(x);
            assert_eq!(
                idx.big_sigma_star(&idx.q_cartan_apply(&e)),
                idx.q_cartan_apply(&idx.big_sigma_star(&e))
            );
        }
    }
}
