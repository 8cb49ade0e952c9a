//! Indecomposables of the bounded derived category of a Dynkin quiver.
//!
//! Every indecomposable is `Σ^n M` for an indecomposable module `M`; modules
//! are addressed by their AR slot `(i, d)`, meaning `τ^{-d} P_i`.

pub mod oracle;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::{DimVec, DynkinQuiver, HeightFunction};

pub type ModuleId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndModule {
    pub root: DimVec,
    /// `(i, d)` for `τ^{-d} P_i`.
    pub slot: (usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DerivedObject {
    pub module: ModuleId,
    pub shift: i64,
}

impl DerivedObject {
    pub fn module(module: ModuleId) -> Self {
        DerivedObject { module, shift: 0 }
    }

    pub fn shifted(self, by: i64) -> Self {
        DerivedObject {
            module: self.module,
            shift: self.shift + by,
        }
    }
}

/// One slot `(i, d)`, `0 <= d < h`, of the fundamental window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowSlot {
    pub vertex: usize,
    pub step: usize,
    /// Signed class `Φ^{-d} dim P_i`.
    pub class: DimVec,
    pub object: DerivedObject,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeshEntry {
    pub end: DerivedObject,
    pub start: DerivedObject,
    pub middle: Vec<DerivedObject>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ARQuiver {
    pub window: Vec<WindowSlot>,
    /// Irreducible maps between window slots, as `((i, d), (j, e))`.
    pub irreducible: Vec<((usize, usize), (usize, usize))>,
    pub mesh: Vec<MeshEntry>,
}

#[derive(Clone, Debug)]
pub struct DerivedModel {
    quiver: DynkinQuiver,
    xi: HeightFunction,
    h: usize,
    /// Action of τ on classes.
    coxeter: Vec<Vec<i64>>,
    coxeter_inv: Vec<Vec<i64>>,
    modules: Vec<IndModule>,
    by_slot: BTreeMap<(usize, usize), ModuleId>,
    by_root: BTreeMap<DimVec, ModuleId>,
    last_step: Vec<usize>,
    projective: Vec<ModuleId>,
    injective: Vec<ModuleId>,
    simple: Vec<ModuleId>,
    window: Vec<Vec<WindowSlot>>,
}

fn mat_vec(m: &[Vec<i64>], v: &DimVec) -> DimVec {
    DimVec(
        m.iter()
            .map(|row| row.iter().zip(v.iter()).map(|(a, b)| a * b).sum())
            .collect(),
    )
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum())
                .collect()
        })
        .collect()
}

fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.first().map_or(0, Vec::len);
    (0..n).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}

fn negate(a: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    a.into_iter()
        .map(|row| row.into_iter().map(|x| -x).collect())
        .collect()
}

impl DerivedModel {
    /// Knits the window `{(i, d) : 0 <= d < h}` from the Coxeter action.
    pub fn new(quiver: &DynkinQuiver) -> Result<Self> {
        let n = quiver.rank();
        let h = quiver.coxeter_number();
        let e = quiver.euler_matrix();
        let paths = quiver.path_counts();
        // <x,y> = x^T E y, <x,y> = -<y, τx>  =>  τ = -E^{-1} E^T, τ^{-1} = -E^{-T} E
        let coxeter = negate(mat_mul(&paths, &transpose(&e)));
        let coxeter_inv = negate(mat_mul(&transpose(&paths), &e));

        let mut classes = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(h);
            let mut class = quiver.projective_dim(i);
            for d in 0..h {
                let positive = class.iter().all(|&c| c >= 0) && !class.is_zero();
                let negative = class.iter().all(|&c| c <= 0) && !class.is_zero();
                if !positive && !negative {
                    return Err(Error::MixedSignClass { vertex: i + 1, step: d });
                }
                row.push(class.clone());
                class = mat_vec(&coxeter_inv, &class);
            }
            classes.push(row);
        }

        let mut modules = Vec::new();
        let mut by_slot = BTreeMap::new();
        let mut by_root = BTreeMap::new();
        let mut last_step = vec![0; n];
        for i in 0..n {
            let positive = classes[i].iter().take_while(|c| c.is_nonneg()).count();
            if classes[i][positive..].iter().any(|c| c.is_nonneg()) {
                return Err(Error::MixedSignClass { vertex: i + 1, step: positive });
            }
            last_step[i] = positive - 1;
            for (d, class) in classes[i][..positive].iter().enumerate() {
                let id = modules.len();
                modules.push(IndModule {
                    root: class.clone(),
                    slot: (i, d),
                });
                by_slot.insert((i, d), id);
                if by_root.insert(class.clone(), id).is_some() {
                    return Err(Error::NotSupported(format!("repeated root {class}")));
                }
            }
        }
        let lookup = |root: &DimVec| {
            by_root
                .get(root)
                .copied()
                .ok_or_else(|| Error::NotSupported(format!("{root} is not a knitted root")))
        };
        let projective = (0..n).map(|i| by_slot[&(i, 0)]).collect();
        let injective = (0..n)
            .map(|i| lookup(&quiver.injective_dim(i)))
            .collect::<Result<_>>()?;
        let simple = (0..n)
            .map(|i| lookup(&DimVec::unit(n, i)))
            .collect::<Result<_>>()?;

        let mut window_slots = Vec::with_capacity(n);
        for (i, row) in classes.iter().enumerate() {
            let mut slots = Vec::with_capacity(h);
            for (d, class) in row.iter().enumerate() {
                let object = if d <= last_step[i] {
                    DerivedObject::module(by_slot[&(i, d)])
                } else {
                    DerivedObject {
                        module: lookup(&-class)?,
                        shift: 1,
                    }
                };
                slots.push(WindowSlot {
                    vertex: i,
                    step: d,
                    class: class.clone(),
                    object,
                });
            }
            window_slots.push(slots);
        }

        Ok(DerivedModel {
            quiver: quiver.clone(),
            xi: quiver.height_function(),
            h,
            coxeter,
            coxeter_inv,
            modules,
            by_slot,
            by_root,
            last_step,
            projective,
            injective,
            simple,
            window: window_slots,
        })
    }

    pub fn quiver(&self) -> &DynkinQuiver {
        &self.quiver
    }

    pub fn rank(&self) -> usize {
        self.quiver.rank()
    }

    pub fn coxeter_number(&self) -> usize {
        self.h
    }

    pub fn height(&self) -> &HeightFunction {
        &self.xi
    }

    /// τ acting on K0 classes.
    pub fn coxeter_matrix(&self) -> &[Vec<i64>] {
        &self.coxeter
    }

    pub fn coxeter_inverse(&self) -> &[Vec<i64>] {
        &self.coxeter_inv
    }

    pub fn tau_class(&self, x: &DimVec) -> DimVec {
        mat_vec(&self.coxeter, x)
    }

    pub fn tau_inv_class(&self, x: &DimVec) -> DimVec {
        mat_vec(&self.coxeter_inv, x)
    }

    pub fn modules(&self) -> &[IndModule] {
        &self.modules
    }

    pub fn module_count(&self) -> usize {
        self.modules.len()
    }

    pub fn module_at(&self, vertex: usize, step: usize) -> Option<ModuleId> {
        self.by_slot.get(&(vertex, step)).copied()
    }

    pub fn module_by_root(&self, root: &DimVec) -> Option<ModuleId> {
        self.by_root.get(root).copied()
    }

    pub fn root(&self, m: ModuleId) -> &DimVec {
        &self.modules[m].root
    }

    pub fn slot(&self, m: ModuleId) -> (usize, usize) {
        self.modules[m].slot
    }

    /// `m_i`: the largest `d` with `τ^{-d} P_i` a module.
    pub fn last_step(&self, i: usize) -> usize {
        self.last_step[i]
    }

    pub fn projective(&self, i: usize) -> ModuleId {
        self.projective[i]
    }

    pub fn injective(&self, i: usize) -> ModuleId {
        self.injective[i]
    }

    pub fn simple(&self, i: usize) -> ModuleId {
        self.simple[i]
    }

    pub fn is_injective(&self, m: ModuleId) -> bool {
        let (i, d) = self.slot(m);
        d == self.last_step[i]
    }

    pub fn window_slot(&self, vertex: usize, step: usize) -> &WindowSlot {
        &self.window[vertex][step]
    }

    pub fn window(&self) -> impl Iterator<Item = &WindowSlot> {
        self.window.iter().flatten()
    }

    /// `τ^{-d} P_i` for any integer `d`, using `τ^{-h} = Σ^2`.
    pub fn slot_object(&self, vertex: usize, d: i64) -> DerivedObject {
        let h = self.h as i64;
        let base = self.window[vertex][d.rem_euclid(h) as usize].object;
        base.shifted(2 * d.div_euclid(h))
    }

    pub fn signed_class(&self, x: DerivedObject) -> DimVec {
        let root = self.root(x.module);
        if x.shift.rem_euclid(2) == 0 {
            root.clone()
        } else {
            -root
        }
    }

    pub fn tau_inv(&self, x: DerivedObject) -> DerivedObject {
        let (i, d) = self.slot(x.module);
        if d < self.last_step[i] {
            DerivedObject {
                module: self.by_slot[&(i, d + 1)],
                shift: x.shift,
            }
        } else {
            // τ^{-1} I_k = Σ P_k
            let k = self.injective.iter().position(|&m| m == x.module).unwrap();
            DerivedObject {
                module: self.projective[k],
                shift: x.shift + 1,
            }
        }
    }

    pub fn tau(&self, x: DerivedObject) -> DerivedObject {
        let (i, d) = self.slot(x.module);
        if d > 0 {
            DerivedObject {
                module: self.by_slot[&(i, d - 1)],
                shift: x.shift,
            }
        } else {
            DerivedObject {
                module: self.injective[i],
                shift: x.shift - 1,
            }
        }
    }

    pub fn sigma_shift(&self, x: DerivedObject) -> DerivedObject {
        x.shifted(1)
    }

    pub fn sigma_shift_inv(&self, x: DerivedObject) -> DerivedObject {
        x.shifted(-1)
    }

    /// Serre functor `ν = τ Σ`.
    pub fn nu(&self, x: DerivedObject) -> DerivedObject {
        self.tau(self.sigma_shift(x))
    }

    pub fn euler_form(&self, m: ModuleId, n: ModuleId) -> i64 {
        self.quiver.euler_form(self.root(m), self.root(n))
    }

    pub fn hom_dim(&self, x: DerivedObject, y: DerivedObject) -> i64 {
        let chi = self.euler_form(x.module, y.module);
        match y.shift - x.shift {
            0 => chi.max(0),
            1 => (-chi).max(0),
            _ => 0,
        }
    }

    /// Irreducible maps and meshes of the window.
    pub fn knit(&self) -> ARQuiver {
        let n = self.rank();
        let window: Vec<WindowSlot> = self.window().cloned().collect();
        let mut irreducible = Vec::new();
        for d in 0..self.h {
            for &(s, t) in self.quiver.arrows() {
                irreducible.push(((t, d), (s, d)));
                if d + 1 < self.h {
                    irreducible.push(((s, d), (t, d + 1)));
                }
            }
        }
        irreducible.sort();
        let mut mesh = Vec::new();
        for i in 0..n {
            for d in 0..self.h as i64 {
                mesh.push(MeshEntry {
                    end: self.slot_object(i, d),
                    start: self.slot_object(i, d - 1),
                    middle: self.mesh_middle(i, d),
                });
            }
        }
        ARQuiver {
            window,
            irreducible,
            mesh,
        }
    }

    /// Middle term of the AR triangle ending at `τ^{-d} P_i`.
    pub fn mesh_middle(&self, i: usize, d: i64) -> Vec<DerivedObject> {
        let mut middle = Vec::new();
        for &(s, t) in self.quiver.arrows() {
            if s == i {
                middle.push(self.slot_object(t, d));
            }
            if t == i {
                middle.push(self.slot_object(s, d - 1));
            }
        }
        middle.sort();
        middle
    }

    /// Preferred display name: `S`, then `P`, then `I`, else `M<i>.<d>`.
    pub fn module_name(&self, m: ModuleId) -> String {
        if let Some(i) = self.simple.iter().position(|&x| x == m) {
            return format!("S{}", i + 1);
        }
        if let Some(i) = self.projective.iter().position(|&x| x == m) {
            return format!("P{}", i + 1);
        }
        if let Some(i) = self.injective.iter().position(|&x| x == m) {
            return format!("I{}", i + 1);
        }
        let (i, d) = self.slot(m);
        format!("M{}.{}", i + 1, d)
    }

    pub fn object_name(&self, x: DerivedObject) -> String {
        let base = self.module_name(x.module);
        match x.shift {
            0 => base,
            1 => format!("Σ{base}"),
            s => format!("Σ^{s}{base}"),
        }
    }

    /// Parses `S2`, `P1`, `I3`, `M2.1` (1-based vertex, AR step).
    pub fn parse_module(&self, name: &str) -> Result<ModuleId> {
        let name = name.trim();
        let bad = || Error::Parse(format!("unknown module `{name}`"));
        let mut chars = name.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str().trim();
        let vertex = |s: &str| -> Result<usize> {
            let k: usize = s.trim().parse().map_err(|_| bad())?;
            if k == 0 || k > self.rank() {
                return Err(bad());
            }
            Ok(k - 1)
        };
        match kind {
            'S' => Ok(self.simple[vertex(rest)?]),
            'P' => Ok(self.projective[vertex(rest)?]),
            'I' => Ok(self.injective[vertex(rest)?]),
            'M' => {
                let (v, d) = rest.split_once('.').ok_or_else(bad)?;
                let d: usize = d.parse().map_err(|_| bad())?;
                self.module_at(vertex(v)?, d).ok_or_else(bad)
            }
            _ => Err(bad()),
        }
    }

    /// Parses an object name, optionally prefixed by `Sigma`/`Σ`.
    pub fn parse_object(&self, name: &str) -> Result<DerivedObject> {
        let name = name.trim();
        for prefix in ["Sigma", "Σ"] {
            if let Some(rest) = name.strip_prefix(prefix) {
                return Ok(self.parse_object(rest)?.shifted(1));
            }
        }
        Ok(DerivedObject::module(self.parse_module(name)?))
    }
}

impl fmt::Display for ARQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for slot in &self.window {
            writeln!(f, "({}, {}) {}", slot.vertex + 1, slot.step, slot.class)?;
        }
        Ok(())
    }
}
