//! The EK, EF, KK and Serre relations among the generator classes.

use std::collections::BTreeSet;

use super::{VSet, VerificationReport};
use crate::cyclic::CycIndex;
use crate::derived::DerivedObject;
use crate::error::{Error, Result};
use crate::laurent::formal::FormalSum;
use crate::laurent::{HalfInt, HalfLaurent};
use crate::quiver::DimVec;
use crate::vectors::{CycVec, VVector, VWPair};

impl CycIndex {
    fn simple_object(&self, i: usize) -> DerivedObject {
        DerivedObject::module(self.model().simple(i))
    }

    /// `hom(S_i, Σ^shift S_j)`.
    fn hom_simple(&self, i: usize, j: usize, shift: i64) -> i64 {
        self.model()
            .hom_dim(self.simple_object(i), self.simple_object(j).shifted(shift))
    }

    /// `<S_i, S_j>`.
    fn euler_simple(&self, i: usize, j: usize) -> i64 {
        let n = self.rank();
        self.quiver().euler_form(&DimVec::unit(n, i), &DimVec::unit(n, j))
    }

    /// Exponent `X` with `L(m1) * L(m2) = t^X L(m2) * L(m1)` on leading terms.
    fn commutation_tilde(&self, m1: &VWPair, m2: &VWPair) -> i64 {
        self.leading_exponent_tilde(m1, m2) - self.leading_exponent_tilde(m2, m1)
    }

    fn commutation_twisted(&self, m1: &VWPair, m2: &VWPair) -> HalfInt {
        self.leading_exponent(m1, m2) - self.leading_exponent(m2, m1)
    }

    fn sigma_star_pair(&self, m: &VWPair) -> VWPair {
        VWPair::new(self.big_sigma_star(&m.v), self.big_sigma_star(&m.w))
    }

    /// The four EK relations between `E_i` or `F_i` and the Cartan classes
    /// of `j`.
    pub fn verify_ek(&self, i: usize, j: usize) -> VerificationReport {
        let mut report = VerificationReport::new(self);
        let args = [i, j];
        let e = VWPair::new(CycVec::zero(), self.e_sigma_simple(i));
        let f = VWPair::new(CycVec::zero(), self.e_sigma_shifted_simple(i));
        let k_prime = VWPair::new(self.v_f(j), self.w_f(j));
        let k = VWPair::new(self.v_sigma_f(j), self.w_f(j));
        let (ij, ji) = (self.euler_simple(i, j), self.euler_simple(j, i));
        let (a_ij, a_ji) = (self.quiver().cartan_entry(i, j), self.quiver().cartan_entry(j, i));
        // (label, left, right, tilde exponent, twisted exponent, d(left, right), d(right, left))
        let cases = [
            ("ek1", &e, &k_prime, 2 * ij, a_ij, self.hom_simple(i, j, 1), self.hom_simple(i, j, 0)),
            ("ek2", &e, &k, -2 * ji, -a_ji, self.hom_simple(i, j, 0), self.hom_simple(j, i, 1)),
            ("ek3", &f, &k_prime, -2 * ji, -a_ji, self.hom_simple(i, j, 0), self.hom_simple(j, i, 1)),
            ("ek4", &f, &k, 2 * ij, a_ij, self.hom_simple(i, j, 1), self.hom_simple(i, j, 0)),
        ];
        for (name, left, right, tilde, twisted, d_lr, d_rl) in cases {
            self.terms_above(&mut report, &format!("{name}.leading"), &args, left, right);
            report.check(format!("{name}.d"), &args, self.d_form(left, right), d_lr);
            report.check(format!("{name}.d-rev"), &args, self.d_form(right, left), d_rl);
            report.check(format!("{name}.tilde"), &args, self.commutation_tilde(left, right), tilde);
            report.check(
                format!("{name}.twisted"),
                &args,
                self.commutation_twisted(left, right),
                HalfInt::from_int(twisted),
            );
        }
        // relations 3 and 4 are the Σ*-images of relations 2 and 1
        for (name, (left, right), target) in [("ek3", (&e, &k), (&f, &k_prime)), ("ek4", (&e, &k_prime), (&f, &k))] {
            let (l, r) = (self.sigma_star_pair(left), self.sigma_star_pair(right));
            let name = format!("{name}.sigma-transport");
            report.check(name.clone(), &args, (&l, &r) == target, true);
            report.check(name, &args, self.commutation_twisted(&l, &r), self.commutation_twisted(left, right));
        }
        report
    }

    /// `[E_i, F_j] = δ_ij (t - t^{-1})(L(v^{f_i}, w^{f_i}) - L(v^{Σf_i}, w^{f_i}))`.
    pub fn verify_ef(&self, i: usize, j: usize) -> VerificationReport {
        let mut report = VerificationReport::new(self);
        let args = [i, j];
        let e = VWPair::new(CycVec::zero(), self.e_sigma_simple(i));
        let f = VWPair::new(CycVec::zero(), self.e_sigma_shifted_simple(j));
        let w = &e.w + &f.w;
        report.check("ef.twist", &args, self.twist_exponent(&e.w, &f.w), HalfInt::ZERO);
        let Some(found) = self.enumerate_into(&mut report, "ef.enumerate", &args, &w) else {
            return report;
        };
        let bottom = VWPair::new(CycVec::zero(), w.clone());
        if i != j {
            report.check("ef.enumerate", &args, VSet(found), VSet(BTreeSet::from([CycVec::zero()])));
            report.check("ef.d", &args, self.d_form(&e, &f), 0);
            report.check("ef.d-rev", &args, self.d_form(&f, &e), 0);
            let ef = FormalSum::term(bottom.clone(), HalfLaurent::t(self.leading_exponent_tilde(&e, &f)));
            let fe = FormalSum::term(bottom, HalfLaurent::t(self.leading_exponent_tilde(&f, &e)));
            report.check("ef.commutator", &args, &ef - &fe, FormalSum::zero());
            return report;
        }
        let (vf, vsf) = (self.v_f(i), self.v_sigma_f(i));
        let expected: BTreeSet<VVector> = [CycVec::zero(), vf.clone(), vsf.clone()].into();
        report.check("ef.enumerate", &args, VSet(found), VSet(expected));

        // shifts of the two non-trivial strata in E_i * F_i
        let top_f = VWPair::new(vf.clone(), e.w.clone());
        let top_sf = VWPair::new(vsf.clone(), e.w.clone());
        let s1 = self.leading_exponent_tilde(&top_f, &f);
        let s2 = self.leading_exponent_tilde(&top_sf, &f);
        report.check("ef.shift", &args, s1, 1);
        report.check("ef.shift", &args, s2, -1);
        // F_i * E_i is the Σ*-transport
        let s1t = self.leading_exponent_tilde(&self.sigma_star_pair(&top_f), &self.sigma_star_pair(&f));
        let s2t = self.leading_exponent_tilde(&self.sigma_star_pair(&top_sf), &self.sigma_star_pair(&f));
        report.check("ef.shift-transport", &args, s1t, 1);
        report.check("ef.shift-transport", &args, s2t, -1);

        let l_f = VWPair::new(vf, w.clone());
        let l_sf = VWPair::new(vsf, w.clone());
        let mut ef = FormalSum::term(bottom.clone(), HalfLaurent::one());
        ef.add_term(l_f.clone(), &HalfLaurent::t(s1));
        ef.add_term(l_sf.clone(), &HalfLaurent::t(s2));
        let mut fe = FormalSum::term(bottom, HalfLaurent::one());
        fe.add_term(l_sf.clone(), &HalfLaurent::t(s1t));
        fe.add_term(l_f.clone(), &HalfLaurent::t(s2t));
        let diff = &HalfLaurent::t(1) - &HalfLaurent::t(-1);
        let mut expected = FormalSum::term(l_f, diff.clone());
        expected.add_term(l_sf, &-&diff);
        report.check("ef.commutator", &args, &ef - &fe, expected);
        report
    }

    /// Products of Cartan classes have a single leading term and commute after
    /// the twist.
    pub fn verify_kk(&self, i: usize, j: usize) -> VerificationReport {
        let mut report = VerificationReport::new(self);
        let args = [i, j];
        let kp_i = VWPair::new(self.v_f(i), self.w_f(i));
        let k_i = VWPair::new(self.v_sigma_f(i), self.w_f(i));
        let kp_j = VWPair::new(self.v_f(j), self.w_f(j));
        let k_j = VWPair::new(self.v_sigma_f(j), self.w_f(j));
        let tilde = self.euler_simple(i, j) - self.euler_simple(j, i);
        report.check(
            "kk.d",
            &args,
            self.d_form(&kp_i, &kp_j),
            self.hom_simple(i, j, 0) + self.hom_simple(i, j, 1),
        );
        for (name, left, right) in [("kk1", &kp_i, &kp_j), ("kk2", &kp_i, &k_j), ("kk3", &k_i, &k_j)] {
            self.terms_above(&mut report, &format!("{name}.leading"), &args, left, right);
            report.check(format!("{name}.tilde"), &args, self.leading_exponent_tilde(left, right), tilde);
            report.check(format!("{name}.twisted"), &args, self.leading_exponent(left, right), HalfInt::ZERO);
            report.check(
                format!("{name}.commute"),
                &args,
                self.commutation_twisted(left, right),
                HalfInt::ZERO,
            );
        }
        report
    }

    /// The quantum Serre relation for `i != j`. Products are assembled from
    /// the six decompositions of the degree-two and degree-three strata.
    pub fn verify_serre(&self, i: usize, j: usize) -> Result<VerificationReport> {
        if i == j || i >= self.rank() || j >= self.rank() {
            return Err(Error::NotAdjacentCaseMismatch(format!("({}, {})", i + 1, j + 1)));
        }
        let mut report = VerificationReport::new(self);
        let args = [i, j];
        let q = self.quiver();
        let (wi, wj) = (self.e_sigma_simple(i), self.e_sigma_simple(j));
        let wp = &wi + &wj;
        let z_i = VWPair::new(CycVec::zero(), wi.clone());
        let z_j = VWPair::new(CycVec::zero(), wj.clone());
        let Some(found) = self.enumerate_into(&mut report, "serre.enumerate", &args, &wp) else {
            return Ok(report);
        };
        if !q.adjacent(i, j) {
            report.check("serre.enumerate", &args, VSet(found), VSet(BTreeSet::from([CycVec::zero()])));
            let label = VWPair::new(CycVec::zero(), wp);
            let ij = FormalSum::term(label.clone(), HalfLaurent::t_half(self.leading_exponent(&z_i, &z_j)));
            let ji = FormalSum::term(label, HalfLaurent::t_half(self.leading_exponent(&z_j, &z_i)));
            report.check("serre.commutator", &args, &ij - &ji, FormalSum::zero());
            return Ok(report);
        }

        let delta = (self.model().tau(self.simple_object(j)) == self.simple_object(i)) as i64;
        let chi = self.euler_simple(i, j) - self.euler_simple(j, i);
        // case (i): Ext^1(S_j, S_i) != 0 forces χ = 1; case (ii) forces (δ, χ) = (0, -1)
        if q.has_arrow(j, i) {
            report.check("serre.case", &args, chi, 1);
        } else {
            report.check("serre.case", &args, (delta, chi) == (0, -1), true);
        }

        let w = &(&wi + &wi) + &wj;
        let nontrivial: Vec<&VVector> = found.iter().filter(|v| !v.is_zero()).collect();
        let [v_mid] = nontrivial[..] else {
            report.fail("serre.enumerate", &args, VSet(found.clone()));
            return Ok(report);
        };
        let v_mid = v_mid.clone();
        let e_si: VVector = CycVec::unit(self.module_vertex(self.model().simple(i)));
        if delta == 1 {
            report.check("serre.label", &args, v_mid.clone(), e_si.clone());
        }
        let expected: BTreeSet<VVector> = [CycVec::zero(), v_mid.clone()].into();
        if let Some(top) = self.enumerate_into(&mut report, "serre.enumerate", &args, &w) {
            report.check("serre.enumerate", &args, VSet(top), VSet(expected));
        }

        // the pairs appearing in the d-value identities
        let p_si = VWPair::new(e_si.clone(), wi.clone());
        let z_wp = VWPair::new(CycVec::zero(), wp.clone());
        let p_wp = VWPair::new(e_si, wp.clone());
        let d_values = [
            (self.d_form(&p_si, &z_j), 0),
            (self.d_form(&z_j, &p_si), delta),
            (self.d_form(&p_si, &z_wp), 1),
            (self.d_form(&z_wp, &p_si), delta),
            (self.d_form(&z_i, &p_wp), 0),
            (self.d_form(&p_wp, &z_i), 1),
        ];
        for (computed, expected) in d_values {
            report.check("serre.d", &args, computed, expected);
        }
        let scalar = HalfInt::halves(-chi);
        for (a, b) in [(&wi, &wj), (&wi, &wp)] {
            report.check("serre.scalar", &args, self.twist_exponent(a, b), scalar);
        }

        let l0p = VWPair::new(CycVec::zero(), wp.clone());
        let l1p = VWPair::new(v_mid.clone(), wp.clone());
        let l0 = VWPair::new(CycVec::zero(), w.clone());
        let l1 = VWPair::new(v_mid, w);
        let two_terms = |c0: HalfInt, l0: &VWPair, c1: HalfInt, l1: &VWPair| {
            let mut s = FormalSum::term(l0.clone(), HalfLaurent::t_half(c0));
            s.add_term(l1.clone(), &HalfLaurent::t_half(c1));
            s
        };
        let tilde = |a: &VWPair, b: &VWPair| HalfInt::from_int(self.leading_exponent_tilde(a, b));
        let p1 = two_terms(
            self.leading_exponent(&z_i, &z_j),
            &l0p,
            self.twist_exponent(&wi, &wj) + tilde(&p_si, &z_j),
            &l1p,
        );
        let p2 = two_terms(
            self.leading_exponent(&z_j, &z_i),
            &l0p,
            self.twist_exponent(&wj, &wi) + tilde(&z_j, &p_si),
            &l1p,
        );
        let p3 = two_terms(
            self.leading_exponent(&z_i, &z_wp),
            &l0,
            self.twist_exponent(&wi, &wp) + tilde(&p_si, &z_wp),
            &l1,
        );
        let p4 = two_terms(
            self.leading_exponent(&z_wp, &z_i),
            &l0,
            self.twist_exponent(&wp, &wi) + tilde(&z_wp, &p_si),
            &l1,
        );
        let p5 = FormalSum::term(
            l1.clone(),
            HalfLaurent::t_half(self.twist_exponent(&wi, &wp) + tilde(&z_i, &p_wp)),
        );
        let p6 = FormalSum::term(
            l1.clone(),
            HalfLaurent::t_half(self.twist_exponent(&wp, &wi) + tilde(&p_wp, &z_i)),
        );

        // the displayed forms, with A = ... = E = t^{-χ/2}
        let x = |k: i64| HalfLaurent::t_half(scalar.scale(k));
        let t = HalfLaurent::t;
        let displayed = [
            (&p1, two_terms(scalar, &l0p, scalar + delta.into(), &l1p)),
            (&p2, two_terms(-scalar, &l0p, -scalar - delta.into(), &l1p)),
            (&p3, two_terms(scalar, &l0, scalar + (delta - 1).into(), &l1)),
            (&p4, two_terms(-scalar, &l0, -scalar + (1 - delta).into(), &l1)),
            (&p5, FormalSum::term(l1.clone(), &x(1) * &t(1))),
            (&p6, FormalSum::term(l1.clone(), &x(-1) * &t(-1))),
        ];
        for (computed, expected) in displayed {
            report.check("serre.product", &args, computed.clone(), expected);
        }

        // E_i * (sum over l0p, l1p) and (sum over l0p, l1p) * E_i
        let left = |s: &FormalSum| {
            let mut out = FormalSum::zero();
            for (label, c) in s.terms() {
                let prod = if *label == l0p { &p3 } else { &p5 };
                out = &out + &prod.scale(c);
            }
            out
        };
        let right = |s: &FormalSum| {
            let mut out = FormalSum::zero();
            for (label, c) in s.terms() {
                let prod = if *label == l0p { &p4 } else { &p6 };
                out = &out + &prod.scale(c);
            }
            out
        };
        let iij = left(&p1);
        let iji = left(&p2);
        let jii = right(&p2);
        let two = HalfLaurent::quantum_int(2);
        let combination = &(&iij - &iji.scale(&two)) + &jii;
        report.check("serre.combination", &args, combination, FormalSum::zero());
        Ok(report)
    }
}
