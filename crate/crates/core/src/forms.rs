//! Bilinear forms and exponents on pairs and on `Î`-vectors.

use std::cmp::Ordering;

use serde::Serialize;

use crate::cyclic::CycIndex;
use crate::derived::ModuleId;
use crate::error::{Error, Result};
use crate::laurent::HalfInt;
use crate::quiver::DimVec;
use crate::vectors::{VWPair, WVector};

/// A class in `K0(Rep Q) ⊕ K0(Σ Rep Q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedClass {
    pub module_part: DimVec,
    pub shifted_part: DimVec,
}

impl GradedClass {
    pub fn zero(n: usize) -> Self {
        GradedClass {
            module_part: DimVec::zeros(n),
            shifted_part: DimVec::zeros(n),
        }
    }

    pub fn degree(&self) -> i64 {
        self.module_part.total() + self.shifted_part.total()
    }
}

impl CycIndex {
    /// `Φ(e_{σx}) = x`, routed by the shift of the section representative.
    pub fn phi(&self, w: &WVector) -> GradedClass {
        let mut out = GradedClass::zero(self.rank());
        for (y, c) in w.iter() {
            let obj = self.section(self.sigma_inv(y));
            let part = self.model().root(obj.module) * c;
            if obj.shift == 0 {
                out.module_part += &part;
            } else {
                out.shifted_part += &part;
            }
        }
        out
    }

    pub fn deg_phi(&self, w: &WVector) -> i64 {
        self.phi(w).degree()
    }

    /// `N(Φ(w)) = (Φ(w), Φ(w)) - deg Φ(w)`.
    pub fn n_phi(&self, w: &WVector) -> i64 {
        let x = self.phi(w);
        self.euler_sym(&x, &x) - x.degree()
    }

    /// Rescaling exponent `½ N(Φ(w))` of the first normalization.
    pub fn exponent_k(&self, w: &WVector) -> HalfInt {
        HalfInt::halves(self.n_phi(w))
    }

    /// Rescaling exponent `½ N(Φ(w)) - deg Φ(w)` of the second normalization.
    pub fn exponent_l(&self, w: &WVector) -> HalfInt {
        self.exponent_k(w) - HalfInt::from_int(self.deg_phi(w))
    }

    pub fn euler_a(&self, x: &GradedClass, y: &GradedClass) -> i64 {
        let q = self.quiver();
        q.euler_form(&x.module_part, &y.module_part) - q.euler_form(&y.module_part, &x.module_part)
            + q.euler_form(&x.shifted_part, &y.shifted_part)
            - q.euler_form(&y.shifted_part, &x.shifted_part)
    }

    pub fn euler_sym(&self, x: &GradedClass, y: &GradedClass) -> i64 {
        let q = self.quiver();
        q.euler_form(&x.module_part, &y.module_part)
            + q.euler_form(&y.module_part, &x.module_part)
            + q.euler_form(&x.shifted_part, &y.shifted_part)
            + q.euler_form(&y.shifted_part, &x.shifted_part)
    }

    /// `d(m1, m2) = (w1 - C_q v1) · σ*v2 + v1 · σ*w2`.
    pub fn d_form(&self, m1: &VWPair, m2: &VWPair) -> i64 {
        let defect = self.defect(&m1.v, &m1.w);
        defect.dot(&self.sigma_pullback(&m2.v)) + m1.v.dot(&self.sigma_pullback(&m2.w))
    }

    /// `-½ <Φ(w1), Φ(w2)>_a`.
    pub fn twist_exponent(&self, w1: &WVector, w2: &WVector) -> HalfInt {
        HalfInt::halves(-self.euler_a(&self.phi(w1), &self.phi(w2)))
    }

    /// `d(m2, m1) - d(m1, m2)`.
    pub fn leading_exponent_tilde(&self, m1: &VWPair, m2: &VWPair) -> i64 {
        self.d_form(m2, m1) - self.d_form(m1, m2)
    }

    /// Leading exponent of the twisted product.
    pub fn leading_exponent(&self, m1: &VWPair, m2: &VWPair) -> HalfInt {
        HalfInt::from_int(self.leading_exponent_tilde(m1, m2)) + self.twist_exponent(&m1.w, &m2.w)
    }

    /// `d(m2, m1) - d(m1, m2) + ½ <Φ(w2), Φ(w1)>_a`.
    pub fn script_n(&self, m1: &VWPair, m2: &VWPair) -> HalfInt {
        HalfInt::from_int(self.leading_exponent_tilde(m1, m2))
            + HalfInt::halves(self.euler_a(&self.phi(&m2.w), &self.phi(&m1.w)))
    }

    /// `(M, N) = <M, N> + <N, M>` on modules.
    pub fn symmetric_module_form(&self, m: ModuleId, n: ModuleId) -> i64 {
        self.model().euler_form(m, n) + self.model().euler_form(n, m)
    }

    pub fn q_degree_compare(&self, m: ModuleId, n: ModuleId) -> Ordering {
        self.module_height(m).cmp(&self.module_height(n))
    }

    /// Comparison form on `e_{σM}, e_{σN}`: `(M, N)` signed by the q-degree
    /// order, zero on the diagonal.
    pub fn hl_form_modules(&self, m: ModuleId, n: ModuleId) -> i64 {
        if m == n {
            return 0;
        }
        let sym = self.symmetric_module_form(m, n);
        match self.q_degree_compare(m, n) {
            Ordering::Greater => -sym,
            _ => sym,
        }
    }

    fn w_plus_modules(&self, w: &WVector) -> Result<Vec<(ModuleId, i64)>> {
        w.iter()
            .map(|(y, c)| {
                let x = self.sigma_inv(y);
                if !self.in_i_hat(y) || !self.is_module_vertex(x) {
                    return Err(Error::NotIndecomposable(self.vertex_name(y)));
                }
                Ok((self.section(x).module, c))
            })
            .collect()
    }

    /// Bilinear extension of [`CycIndex::hl_form_modules`] to `Z^{W^+}`.
    pub fn hl_form(&self, w1: &WVector, w2: &WVector) -> Result<i64> {
        let a = self.w_plus_modules(w1)?;
        let b = self.w_plus_modules(w2)?;
        Ok(a.iter()
            .flat_map(|&(m, c)| b.iter().map(move |&(n, e)| (m, n, c * e)))
            .map(|(m, n, c)| c * self.hl_form_modules(m, n))
            .sum())
    }
}
