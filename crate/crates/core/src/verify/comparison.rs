//! The comparison identities between `d` and the symmetric Euler form.

use super::VerificationReport;
use crate::cyclic::CycIndex;
use crate::laurent::HalfInt;
use crate::quiver::DimVec;
use crate::vectors::{CycVec, VWPair, WVector};

impl CycIndex {
    /// `d(ι(N), ι(M)) - d(ι(M), ι(N)) + ½<N, M>_a = ½(M, N)` for distinct
    /// modules with `η(M) <= η(N)`, and both sides vanish when `M = N`.
    pub fn verify_same_form(&self) -> VerificationReport {
        let mut report = VerificationReport::new(self);
        let count = self.model().module_count();
        let lifts: Vec<VWPair> = (0..count).map(|m| self.iota(m)).collect();
        for m in 0..count {
            for n in 0..count {
                let args = [m, n];
                let (im, in_) = (&lifts[m], &lifts[n]);
                let lhs = HalfInt::from_int(self.leading_exponent_tilde(im, in_))
                    + HalfInt::halves(self.euler_a(&self.phi(&in_.w), &self.phi(&im.w)));
                if m == n {
                    report.check("same-form.diagonal", &args, lhs, HalfInt::ZERO);
                } else if self.module_height(m) <= self.module_height(n) {
                    let rhs = HalfInt::halves(self.symmetric_module_form(m, n));
                    report.check("same-form", &args, lhs, rhs);
                }
            }
        }
        report
    }

    /// `𝒩(m1, m2) = ½ 𝒩_HL(w1 - C_q v1, w2 - C_q v2)` for l-dominant pairs in
    /// `V^+ x W^S` with `|w| <= mass_cap`.
    pub fn verify_same_n(&self, mass_cap: i64) -> VerificationReport {
        let mut report = VerificationReport::new(self);
        let mut pairs = Vec::new();
        for beta in w_s_degrees(self.rank(), mass_cap) {
            let mut w: WVector = CycVec::zero();
            for (i, &c) in beta.iter().enumerate() {
                for y in self.e_sigma_simple(i).support() {
                    w.add_at(y, c);
                }
            }
            match self.enumerate_l_dominant(&w) {
                Ok(vs) => pairs.extend(vs.into_iter().map(|v| VWPair::new(v, w.clone()))),
                Err(e) => report.fail("same-n.enumerate", &[], e),
            }
        }
        for (a, m1) in pairs.iter().enumerate() {
            for (b, m2) in pairs.iter().enumerate() {
                let args = [a, b];
                let d1 = self.defect(&m1.v, &m1.w);
                let d2 = self.defect(&m2.v, &m2.w);
                match self.hl_form(&d1, &d2) {
                    Ok(hl) => {
                        report.check("same-n", &args, self.script_n(m1, m2), HalfInt::halves(hl));
                    }
                    Err(e) => report.fail("same-n", &args, e),
                }
            }
        }
        report
    }
}

/// All `β ∈ N^n` with `0 < |β| <= cap`.
fn w_s_degrees(n: usize, cap: i64) -> Vec<Vec<i64>> {
    crate::laurent::serre::multidegrees(n, cap.max(0) as usize)
        .into_iter()
        .map(|DimVec(b)| b)
        .filter(|b| b.iter().any(|&c| c > 0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{DynkinQuiver, DynkinType, Orientation};

    fn assert_pass(r: &VerificationReport) {
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn same_form_a2_example() {
        let idx = CycIndex::new(&DynkinQuiver::standard(DynkinType::A(2), Orientation::Linear)).unwrap();
        let m = idx.model();
        let (s1, p2) = (m.simple(0), m.projective(1));
        let (is1, ip2) = (idx.iota(s1), idx.iota(p2));
        let lhs = HalfInt::from_int(idx.leading_exponent_tilde(&is1, &ip2))
            + HalfInt::halves(idx.euler_a(&idx.phi(&ip2.w), &idx.phi(&is1.w)));
        // (S_1, P_2) = <S_1, P_2> + <P_2, S_1> = 1 + 0
        assert_eq!(idx.symmetric_module_form(s1, p2), 1);
        assert_eq!(lhs, HalfInt::halves(1));
        assert_pass(&idx.verify_same_form());
    }

    #[test]
    fn same_form_equal_heights_a3() {
        let idx = CycIndex::new(&DynkinQuiver::standard(DynkinType::A(3), Orientation::Linear)).unwrap();
        let r = idx.verify_same_form();
        assert_pass(&r);
        let m = idx.model();
        let (p3, s2) = (m.projective(2), m.simple(1));
        let both: Vec<_> = r
            .checks
            .iter()
            .filter(|c| c.relation == "same-form" && (c.args == [p3 + 1, s2 + 1] || c.args == [s2 + 1, p3 + 1]))
            .collect();
        assert_eq!(both.len(), 2);
        assert!(both.iter().all(|c| c.expected == "0"));
    }

    #[test]
    fn same_n_small() {
        let idx = CycIndex::new(&DynkinQuiver::standard(DynkinType::A(2), Orientation::Linear)).unwrap();
        let r = idx.verify_same_n(2);
        assert_pass(&r);
        assert!(r.checks.len() > 10);
    }
}
