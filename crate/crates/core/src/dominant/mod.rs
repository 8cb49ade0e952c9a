//! l-dominant pairs, the W/V cones, Cartan vectors, the triangular
//! decomposition, and the ι-lift of modules.

pub mod enumerate;

use serde::Serialize;

use crate::cyclic::CycIndex;
use crate::derived::{DerivedObject, ModuleId};
use crate::error::{Error, Result};
use crate::quiver::DimVec;
use crate::vectors::{CycVec, CycVertex, VVector, VWPair, WVector};

/// The three l-dominant components of a pair with `w ∈ W^S ⊕ W^{ΣS}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triangular {
    pub plus: VWPair,
    pub cartan: VWPair,
    pub minus: VWPair,
    /// `b_i = v(I_i)`.
    pub b: Vec<i64>,
    /// `b'_i = v(ΣI_i)`.
    pub b_sigma: Vec<i64>,
}

impl CycIndex {
    pub fn is_l_dominant(&self, p: &VWPair) -> bool {
        p.v.is_nonneg() && p.w.is_nonneg() && self.defect(&p.v, &p.w).is_nonneg()
    }

    /// `v^{f_i} = Σ_x hom(S_i, M_x) e_x` over `x ∈ σÎ`.
    pub fn v_f(&self, i: usize) -> VVector {
        let s = DerivedObject::module(self.model().simple(i));
        self.sigma_i_hat()
            .iter()
            .map(|&x| (x, self.model().hom_dim(s, self.section(x))))
            .collect()
    }

    pub fn v_sigma_f(&self, i: usize) -> VVector {
        self.big_sigma_star(&self.v_f(i))
    }

    /// `w^{f_i} = e_{σS_i} + e_{σΣS_i}`.
    pub fn w_f(&self, i: usize) -> WVector {
        let s = self.model().simple(i);
        CycVec::from_entries([
            (self.sigma(self.module_vertex(s)), 1),
            (self.sigma(self.shifted_vertex(s)), 1),
        ])
    }

    /// `e_{σS_i}`.
    pub fn e_sigma_simple(&self, i: usize) -> WVector {
        CycVec::unit(self.sigma(self.module_vertex(self.model().simple(i))))
    }

    /// `e_{σΣS_i}`.
    pub fn e_sigma_shifted_simple(&self, i: usize) -> WVector {
        CycVec::unit(self.sigma(self.shifted_vertex(self.model().simple(i))))
    }

    pub fn is_module_vertex(&self, x: CycVertex) -> bool {
        self.in_sigma_i_hat(x) && self.section(x).shift == 0
    }

    pub fn is_shifted_module_vertex(&self, x: CycVertex) -> bool {
        self.in_sigma_i_hat(x) && self.section(x).shift == 1
    }

    fn is_non_injective_module_vertex(&self, x: CycVertex) -> bool {
        self.is_module_vertex(x) && !self.model().is_injective(self.section(x).module)
    }

    fn is_non_injective_shifted_vertex(&self, x: CycVertex) -> bool {
        self.is_shifted_module_vertex(x) && !self.model().is_injective(self.section(x).module)
    }

    fn simple_index(&self, x: CycVertex) -> Option<usize> {
        let obj = self.section(x);
        (0..self.rank()).find(|&i| self.model().simple(i) == obj.module)
    }

    /// `W^+`: supported on `σx`, `x` a module.
    pub fn in_w_plus(&self, w: &WVector) -> bool {
        w.is_nonneg()
            && w.support()
                .all(|y| self.in_i_hat(y) && self.is_module_vertex(self.sigma_inv(y)))
    }

    /// `W^-`: supported on `σΣx`, `x` a module.
    pub fn in_w_minus(&self, w: &WVector) -> bool {
        w.is_nonneg()
            && w.support()
                .all(|y| self.in_i_hat(y) && self.is_shifted_module_vertex(self.sigma_inv(y)))
    }

    /// `V^+`: supported on non-injective modules.
    pub fn in_v_plus(&self, v: &VVector) -> bool {
        v.is_nonneg() && v.support().all(|x| self.is_non_injective_module_vertex(x))
    }

    /// `V^-`: supported on shifts of non-injective modules.
    pub fn in_v_minus(&self, v: &VVector) -> bool {
        v.is_nonneg() && v.support().all(|x| self.is_non_injective_shifted_vertex(x))
    }

    /// `W^S`: supported on `σS_i`.
    pub fn in_w_s(&self, w: &WVector) -> bool {
        self.in_w_plus(w) && w.support().all(|y| self.simple_index(self.sigma_inv(y)).is_some())
    }

    /// `W^{ΣS}`: supported on `σΣS_i`.
    pub fn in_w_sigma_s(&self, w: &WVector) -> bool {
        self.in_w_minus(w) && w.support().all(|y| self.simple_index(self.sigma_inv(y)).is_some())
    }

    pub fn in_w_s_plus_sigma_s(&self, w: &WVector) -> bool {
        w.is_nonneg()
            && w.support().all(|y| {
                self.in_i_hat(y) && self.simple_index(self.sigma_inv(y)).is_some()
            })
    }

    /// `W^0 = ⊕ N w^{f_i}`.
    pub fn in_w_zero(&self, w: &WVector) -> bool {
        let coeffs: Vec<i64> = (0..self.rank()).map(|i| w.get(self.sigma(self.module_vertex(self.model().simple(i))))).collect();
        coeffs.iter().all(|&c| c >= 0) && {
            let mut rebuilt = CycVec::zero();
            for (i, &c) in coeffs.iter().enumerate() {
                rebuilt += &(&self.w_f(i) * c);
            }
            &rebuilt == w
        }
    }

    /// `V^0 = ⊕ N v^{f_i} ⊕ N v^{Σf_i}`, detected through the injective
    /// coefficients.
    pub fn in_v_zero(&self, v: &VVector) -> bool {
        let (b, bs) = self.injective_coefficients(v);
        if b.iter().chain(&bs).any(|&c| c < 0) {
            return false;
        }
        &self.cartan_v(&b, &bs) == v
    }

    fn injective_coefficients(&self, v: &VVector) -> (Vec<i64>, Vec<i64>) {
        let m = self.model();
        let b = (0..self.rank()).map(|i| v.get(self.module_vertex(m.injective(i)))).collect();
        let bs = (0..self.rank()).map(|i| v.get(self.shifted_vertex(m.injective(i)))).collect();
        (b, bs)
    }

    fn cartan_v(&self, b: &[i64], b_sigma: &[i64]) -> VVector {
        let mut v = CycVec::zero();
        for i in 0..self.rank() {
            v += &(&self.v_f(i) * b[i]);
            v += &(&self.v_sigma_f(i) * b_sigma[i]);
        }
        v
    }

    pub fn decompose(&self, p: &VWPair) -> Result<Triangular> {
        if !self.is_l_dominant(p) {
            return Err(Error::NotDominant);
        }
        let (b, b_sigma) = self.injective_coefficients(&p.v);
        let v0 = self.cartan_v(&b, &b_sigma);
        let mut w0 = CycVec::zero();
        for i in 0..self.rank() {
            w0 += &(&self.w_f(i) * (b[i] + b_sigma[i]));
        }
        let rest_v = &p.v - &v0;
        let rest_w = &p.w - &w0;
        let v_plus = rest_v.restrict(|x| self.is_non_injective_module_vertex(x));
        let v_minus = rest_v.restrict(|x| self.is_non_injective_shifted_vertex(x));
        if &v_plus + &v_minus != rest_v {
            return Err(Error::DecompositionFailure(format!(
                "v - v0 = {rest_v} has weight outside V+ ⊕ V-"
            )));
        }
        let w_plus = rest_w.restrict(|y| self.is_module_vertex(self.sigma_inv(y)));
        let w_minus = rest_w.restrict(|y| self.is_shifted_module_vertex(self.sigma_inv(y)));
        let parts = Triangular {
            plus: VWPair::new(v_plus, w_plus),
            cartan: VWPair::new(v0, w0),
            minus: VWPair::new(v_minus, w_minus),
            b,
            b_sigma,
        };
        for (label, part) in [("positive", &parts.plus), ("Cartan", &parts.cartan), ("negative", &parts.minus)] {
            if !self.is_l_dominant(part) {
                return Err(Error::DecompositionFailure(format!("{label} part {part} is not l-dominant")));
            }
        }
        if !self.defect(&parts.cartan.v, &parts.cartan.w).is_zero() {
            return Err(Error::DecompositionFailure("Cartan part has nonzero defect".into()));
        }
        Ok(parts)
    }

    /// Inverse of [`CycIndex::decompose`].
    pub fn recompose(&self, t: &Triangular) -> VWPair {
        &(&t.plus + &t.cartan) + &t.minus
    }

    /// `ι(N) = (ι_V(N), ι_W(N))` for an indecomposable module `N`.
    pub fn iota(&self, n: ModuleId) -> VWPair {
        let m = self.model();
        let root = m.root(n).clone();
        let target = DerivedObject::module(n);
        let simples: Vec<DerivedObject> = (0..self.rank()).map(|i| DerivedObject::module(m.simple(i))).collect();
        let v = self
            .sigma_i_hat()
            .iter()
            .map(|&x| {
                let source = m.tau_inv(self.section(x));
                let semisimple: i64 = simples
                    .iter()
                    .enumerate()
                    .map(|(i, &s)| root[i] * m.hom_dim(source, s))
                    .sum();
                (x, semisimple - m.hom_dim(source, target))
            })
            .collect();
        VWPair::new(v, self.w_of_class(&root))
    }

    /// `Σ_i β_i e_{σS_i}`.
    pub fn w_of_class(&self, beta: &DimVec) -> WVector {
        let mut w = CycVec::zero();
        for i in 0..self.rank() {
            w += &(&self.e_sigma_simple(i) * beta[i]);
        }
        w
    }

    pub fn iota_additive(&self, modules: &[ModuleId]) -> VWPair {
        let mut out = VWPair::zero();
        for &n in modules {
            out = &out + &self.iota(n);
        }
        out
    }

    /// The unique l-dominant `(v, w) ∈ V^+ x W^S` with `w - C_q v = w̃`.
    pub fn solve_w_tilde(&self, w_tilde: &WVector) -> Result<VWPair> {
        if !self.in_w_plus(w_tilde) {
            return Err(Error::NotInWPlus(w_tilde.to_string()));
        }
        let mut modules = Vec::new();
        for (y, c) in w_tilde.iter() {
            let module = self.section(self.sigma_inv(y)).module;
            modules.extend(std::iter::repeat_n(module, c as usize));
        }
        let pair = self.iota_additive(&modules);
        assert!(self.in_v_plus(&pair.v) && self.in_w_s(&pair.w), "lift left V+ x W^S");
        assert_eq!(&self.defect(&pair.v, &pair.w), w_tilde, "lift has the wrong defect");
        Ok(pair)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{DynkinQuiver, DynkinType, Orientation};

    fn index(ty: DynkinType, o: Orientation) -> CycIndex {
        CycIndex::new(&DynkinQuiver::standard(ty, o)).unwrap()
    }

    fn e(idx: &CycIndex, name: &str) -> CycVec {
        CycVec::unit(idx.object_vertex(name).unwrap())
    }

    fn es(idx: &CycIndex, name: &str) -> CycVec {
        CycVec::unit(idx.sigma(idx.object_vertex(name).unwrap()))
    }

    #[test]
    fn a1_cartan_vectors() {
        let idx = index(DynkinType::A(1), Orientation::Linear);
        assert_eq!(idx.v_f(0), e(&idx, "S1"));
        assert_eq!(idx.w_f(0), &es(&idx, "S1") + &es(&idx, "ΣS1"));
        assert!(idx.is_l_dominant(&VWPair::new(idx.v_f(0), idx.w_f(0))));
        assert!(!idx.is_l_dominant(&VWPair::new(idx.v_f(0), es(&idx, "S1"))));
        assert!(idx.is_l_dominant(&VWPair::new(CycVec::zero(), es(&idx, "S1"))));
    }

    #[test]
    fn a2_cartan_vectors() {
        let idx = index(DynkinType::A(2), Orientation::Linear);
        assert_eq!(idx.v_f(0), &e(&idx, "S1") + &e(&idx, "P2"));
        assert_eq!(idx.v_f(1), &e(&idx, "S2") + &e(&idx, "ΣS1"));
        assert_eq!(idx.v_sigma_f(0), &e(&idx, "ΣS1") + &e(&idx, "ΣP2"));
        assert_eq!(idx.v_sigma_f(1), &e(&idx, "ΣS2") + &e(&idx, "S1"));
    }

    #[test]
    fn cartan_vectors_have_zero_defect() {
        for q in DynkinQuiver::all_orientations(DynkinType::D(5)) {
            let idx = CycIndex::new(&q).unwrap();
            for i in 0..5 {
                assert!(idx.defect(&idx.v_f(i), &idx.w_f(i)).is_zero());
                assert!(idx.defect(&idx.v_sigma_f(i), &idx.w_f(i)).is_zero());
                for j in 0..5 {
                    let inj = idx.module_vertex(idx.model().injective(j));
                    assert_eq!(idx.v_f(i).get(inj), (i == j) as i64);
                    assert_eq!(idx.v_sigma_f(i).get(idx.big_sigma(inj)), (i == j) as i64);
                }
            }
        }
    }

    #[test]
    fn iota_fixtures() {
        let idx = index(DynkinType::A(2), Orientation::Linear);
        let m = idx.model();
        assert_eq!(idx.iota(m.simple(0)), VWPair::new(CycVec::zero(), es(&idx, "S1")));
        assert_eq!(idx.iota(m.simple(1)), VWPair::new(CycVec::zero(), es(&idx, "S2")));
        assert_eq!(
            idx.iota(m.projective(1)),
            VWPair::new(e(&idx, "S1"), &es(&idx, "S1") + &es(&idx, "S2"))
        );
    }

    #[test]
    fn iota_v_need_not_be_a_unit_vector() {
        let q = DynkinQuiver::from_arrows(3, vec![(0, 1), (2, 1)]).unwrap();
        let idx = CycIndex::new(&q).unwrap();
        let p1 = idx.model().projective(0);
        assert_eq!(idx.iota(p1).v, &e(&idx, "P2") + &e(&idx, "P3"));
    }

    #[test]
    fn iota_defect_is_the_module() {
        for ty in [DynkinType::A(5), DynkinType::D(6), DynkinType::E(6)] {
            let idx = index(ty, Orientation::Alternating);
            for n in 0..idx.model().module_count() {
                let p = idx.iota(n);
                assert!(idx.is_l_dominant(&p));
                assert_eq!(idx.defect(&p.v, &p.w), CycVec::unit(idx.sigma(idx.module_vertex(n))));
            }
        }
    }

    #[test]
    fn solve_w_tilde_examples() {
        let idx = index(DynkinType::A(2), Orientation::Linear);
        let lift = idx.solve_w_tilde(&es(&idx, "P2")).unwrap();
        assert_eq!(lift, VWPair::new(e(&idx, "S1"), &es(&idx, "S1") + &es(&idx, "S2")));
        let both = &es(&idx, "S1") + &es(&idx, "S2");
        assert_eq!(idx.solve_w_tilde(&both).unwrap(), VWPair::new(CycVec::zero(), both));
        assert_eq!(
            idx.solve_w_tilde(&es(&idx, "S2")).unwrap(),
            VWPair::new(CycVec::zero(), es(&idx, "S2"))
        );
        assert!(matches!(idx.solve_w_tilde(&es(&idx, "ΣS1")), Err(Error::NotInWPlus(_))));
    }

    #[test]
    fn decompose_examples() {
        let idx = index(DynkinType::A(1), Orientation::Linear);
        let zero = idx.decompose(&VWPair::zero()).unwrap();
        assert_eq!(zero.plus, VWPair::zero());
        assert_eq!(zero.cartan, VWPair::zero());
        let cartan = VWPair::new(idx.v_f(0), idx.w_f(0));
        let t = idx.decompose(&cartan).unwrap();
        assert_eq!(t.cartan, cartan);
        assert_eq!(t.plus, VWPair::zero());
        assert_eq!(t.minus, VWPair::zero());
        let split = idx.decompose(&VWPair::new(CycVec::zero(), idx.w_f(0))).unwrap();
        assert_eq!(split.plus, VWPair::new(CycVec::zero(), es(&idx, "S1")));
        assert_eq!(split.minus, VWPair::new(CycVec::zero(), es(&idx, "ΣS1")));
        assert_eq!(
            idx.decompose(&VWPair::new(idx.v_f(0), es(&idx, "S1"))),
            Err(Error::NotDominant)
        );
    }

    #[test]
    fn cones() {
        let idx = index(DynkinType::A(2), Orientation::Linear);
        assert!(idx.in_w_s(&es(&idx, "S2")));
        assert!(!idx.in_w_s(&es(&idx, "P2")));
        assert!(idx.in_w_plus(&es(&idx, "P2")));
        assert!(idx.in_w_sigma_s(&es(&idx, "ΣS1")));
        assert!(idx.in_v_plus(&e(&idx, "S1")));
        assert!(!idx.in_v_plus(&e(&idx, "S2")), "S2 is injective");
        assert!(!idx.in_v_minus(&e(&idx, "ΣP2")));
        assert!(idx.in_v_minus(&e(&idx, "ΣS1")));
        assert!(idx.in_w_zero(&(&idx.w_f(0) * 2)));
        assert!(!idx.in_w_zero(&es(&idx, "S1")));
        assert!(idx.in_v_zero(&(&idx.v_f(1) + &idx.v_sigma_f(0))));
        assert!(!idx.in_v_zero(&e(&idx, "S1")));
    }
}
