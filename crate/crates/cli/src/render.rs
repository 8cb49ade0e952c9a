//! Text, Markdown, DOT and JSON renderings of toolkit values.

use std::collections::BTreeSet;
use std::fmt::Write;

use serde_json::{json, Value};

use cyclotome::derived::ARQuiver;
use cyclotome::forms::GradedClass;
use cyclotome::literal::render_named;
use cyclotome::verify::{chevalley_dictionary, VerificationReport};
use cyclotome::{CycIndex, CycVec, DimVec, VVector, VWPair};

pub const SCHEMA: u32 = 1;

pub fn pair(idx: &CycIndex, p: &VWPair) -> String {
    format!("({}; {})", render_named(idx, &p.v), render_named(idx, &p.w))
}

fn class(c: &GradedClass) -> String {
    format!("{} + Σ{}", c.module_part, c.shifted_part)
}

pub fn describe(idx: &CycIndex) -> String {
    let q = idx.quiver();
    let m = idx.model();
    let mut s = String::new();
    let arrows = q.orientation_label();
    writeln!(s, "type: {}", q.dynkin_type()).unwrap();
    writeln!(s, "arrows: {}", if arrows.is_empty() { "(none)" } else { &arrows }).unwrap();
    writeln!(s, "rank: {}", q.rank()).unwrap();
    writeln!(s, "h={}", idx.coxeter_number()).unwrap();
    writeln!(s, "heights mod {}: ξ = {}", idx.period(), DimVec(idx.height().0.clone())).unwrap();
    writeln!(s, "|Î|={}", idx.i_hat().len()).unwrap();
    writeln!(s, "|σÎ|={}", idx.sigma_i_hat().len()).unwrap();
    writeln!(s, "indecomposable modules: {}", m.module_count()).unwrap();
    writeln!(s, "\nsection σÎ -> window:").unwrap();
    for &x in idx.sigma_i_hat() {
        writeln!(s, "  {x:<6} {}", idx.vertex_name(x)).unwrap();
    }
    writeln!(s, "\ncartan vectors:").unwrap();
    for i in 0..q.rank() {
        writeln!(s, "  v^f{} = {}", i + 1, render_named(idx, &idx.v_f(i))).unwrap();
        writeln!(s, "  v^Σf{} = {}", i + 1, render_named(idx, &idx.v_sigma_f(i))).unwrap();
        writeln!(s, "  w^f{} = {}", i + 1, render_named(idx, &idx.w_f(i))).unwrap();
    }
    writeln!(s, "\ngenerators:").unwrap();
    for e in chevalley_dictionary(idx) {
        writeln!(s, "  {:<5} {:<12} L{}", e.generator, e.scalar, pair(idx, &e.label)).unwrap();
    }
    s
}

pub fn describe_json(idx: &CycIndex) -> Value {
    let q = idx.quiver();
    let generators: Vec<Value> = chevalley_dictionary(idx)
        .into_iter()
        .map(|e| json!({"generator": e.generator, "scalar": e.scalar, "label": pair(idx, &e.label)}))
        .collect();
    json!({
        "schema": SCHEMA,
        "type": q.dynkin_type().to_string(),
        "arrows": q.orientation_label(),
        "rank": q.rank(),
        "coxeter_number": idx.coxeter_number(),
        "i_hat": idx.i_hat().len(),
        "sigma_i_hat": idx.sigma_i_hat().len(),
        "generators": generators,
    })
}

pub fn ar_quiver_text(idx: &CycIndex, ar: &ARQuiver) -> String {
    let m = idx.model();
    let mut s = String::new();
    for slot in &ar.window {
        writeln!(
            s,
            "({}, {})  {:<8} {}",
            slot.vertex + 1,
            slot.step,
            m.object_name(slot.object),
            slot.class
        )
        .unwrap();
    }
    s
}

/// Solid edges are irreducible maps, dashed edges are `τ`.
pub fn ar_quiver_dot(idx: &CycIndex, ar: &ARQuiver) -> String {
    let m = idx.model();
    let node = |i: usize, d: usize| format!("n{}_{}", i + 1, d);
    let mut s = String::from("digraph ar {\n  rankdir=LR;\n  node [shape=plaintext];\n");
    for slot in &ar.window {
        let (i, d) = (slot.vertex, slot.step);
        let y = idx.height().get(i) + 1 + 2 * d as i64;
        writeln!(
            s,
            "  {} [label=\"{}\", pos=\"{},{}!\"];",
            node(i, d),
            m.object_name(slot.object),
            y,
            i
        )
        .unwrap();
    }
    for &((i, d), (j, e)) in &ar.irreducible {
        writeln!(s, "  {} -> {};", node(i, d), node(j, e)).unwrap();
    }
    for slot in &ar.window {
        if slot.step > 0 {
            writeln!(
                s,
                "  {} -> {} [style=dashed];",
                node(slot.vertex, slot.step),
                node(slot.vertex, slot.step - 1)
            )
            .unwrap();
        }
    }
    s.push_str("}\n");
    s
}

/// Ladder diagram of the graded representation space: `V` on `σÎ`, `W` on
/// `Î`, with `α: W(σ^{-1}x) -> V(x)`, `β: V(x) -> W(σx)` and the `B`
/// arrows lowering the height by one.
pub fn rep_space_dot(idx: &CycIndex, v: &VVector, w: &CycVec) -> String {
    let q = idx.quiver();
    let vn = |x: cyclotome::CycVertex| format!("V{}_{}", x.vertex + 1, x.height);
    let wn = |x: cyclotome::CycVertex| format!("W{}_{}", x.vertex + 1, x.height);
    let mut s = String::from("digraph rep {\n  node [shape=box];\n");
    for &x in idx.sigma_i_hat() {
        writeln!(
            s,
            "  {} [label=\"V({}) {}\", pos=\"{},{}!\"];",
            vn(x),
            idx.vertex_name(x),
            v.get(x),
            x.height,
            2 * x.vertex
        )
        .unwrap();
    }
    for &y in idx.i_hat() {
        writeln!(
            s,
            "  {} [label=\"W({}) {}\", shape=ellipse, pos=\"{},{}!\"];",
            wn(y),
            idx.vertex_name(y),
            w.get(y),
            y.height,
            2 * y.vertex + 1
        )
        .unwrap();
    }
    for &x in idx.sigma_i_hat() {
        writeln!(s, "  {} -> {} [label=\"α\"];", wn(idx.sigma_inv(x)), vn(x)).unwrap();
        writeln!(s, "  {} -> {} [label=\"β\"];", vn(x), wn(idx.sigma(x))).unwrap();
        for &j in q.neighbors(x.vertex) {
            let target = idx.sigma(cyclotome::CycVertex::new(j, x.height));
            let label = if q.has_arrow(x.vertex, j) { "B" } else { "B̄" };
            writeln!(s, "  {} -> {} [label=\"{label}\"];", vn(x), vn(target)).unwrap();
        }
    }
    s.push_str("}\n");
    s
}

pub fn rep_space_text(idx: &CycIndex, v: &VVector, w: &CycVec) -> String {
    let mut s = String::new();
    for i in 0..idx.rank() {
        let row: Vec<String> = (0..idx.period())
            .map(|a| {
                let x = cyclotome::CycVertex::new(i, a);
                if idx.in_sigma_i_hat(x) {
                    format!("V{}", v.get(x))
                } else {
                    format!("W{}", w.get(x))
                }
            })
            .collect();
        writeln!(s, "{}: {}", i + 1, row.join(" ")).unwrap();
    }
    s
}

pub fn enumeration(idx: &CycIndex, w: &CycVec, found: &BTreeSet<VVector>) -> String {
    let mut s = String::new();
    writeln!(s, "w = {}", render_named(idx, w)).unwrap();
    writeln!(s, "l-dominant v: {}", found.len()).unwrap();
    for v in found {
        writeln!(s, "  {}", render_named(idx, v)).unwrap();
    }
    s
}

pub fn enumeration_json(idx: &CycIndex, w: &CycVec, found: &BTreeSet<VVector>) -> Value {
    json!({
        "schema": SCHEMA,
        "w": render_named(idx, w),
        "count": found.len(),
        "v": found.iter().map(|v| render_named(idx, v)).collect::<Vec<_>>(),
    })
}

pub fn forms_json(idx: &CycIndex, m1: &VWPair, m2: &VWPair) -> Value {
    let (p1, p2) = (idx.phi(&m1.w), idx.phi(&m2.w));
    json!({
        "schema": SCHEMA,
        "m1": pair(idx, m1),
        "m2": pair(idx, m2),
        "l_dominant": [idx.is_l_dominant(m1), idx.is_l_dominant(m2)],
        "d12": idx.d_form(m1, m2),
        "d21": idx.d_form(m2, m1),
        "leading_exponent_tilde": idx.leading_exponent_tilde(m1, m2),
        "twist_exponent": idx.twist_exponent(&m1.w, &m2.w),
        "leading_exponent": idx.leading_exponent(m1, m2),
        "script_n": idx.script_n(m1, m2),
        "phi": [class(&p1), class(&p2)],
        "euler_a": idx.euler_a(&p1, &p2),
        "euler_sym": idx.euler_sym(&p1, &p2),
        "deg_phi": [idx.deg_phi(&m1.w), idx.deg_phi(&m2.w)],
        "n_phi": [idx.n_phi(&m1.w), idx.n_phi(&m2.w)],
        "exponent_k": [idx.exponent_k(&m1.w), idx.exponent_k(&m2.w)],
        "exponent_l": [idx.exponent_l(&m1.w), idx.exponent_l(&m2.w)],
    })
}

pub fn forms_text(value: &Value) -> String {
    let mut s = String::new();
    if let Value::Object(map) = value {
        for (k, v) in map {
            if k != "schema" {
                writeln!(s, "{k}: {v}").unwrap();
            }
        }
    }
    s
}

pub fn report_text(r: &VerificationReport) -> String {
    let mut s = String::new();
    for c in &r.checks {
        let args: Vec<String> = c.args.iter().map(|a| a.to_string()).collect();
        let status = if c.pass { "PASS" } else { "FAIL" };
        if c.pass {
            writeln!(s, "{status} {}({}) = {}", c.relation, args.join(","), c.computed).unwrap();
        } else {
            writeln!(
                s,
                "{status} {}({}) computed {} expected {}",
                c.relation,
                args.join(","),
                c.computed,
                c.expected
            )
            .unwrap();
        }
    }
    writeln!(
        s,
        "{} {}: {}/{} checks passed",
        r.dynkin_type,
        r.orientation,
        r.pass_count(),
        r.checks.len()
    )
    .unwrap();
    s
}

pub fn report_markdown(r: &VerificationReport) -> String {
    let mut s = String::new();
    writeln!(s, "### {} `{}`\n", r.dynkin_type, r.orientation).unwrap();
    writeln!(s, "| relation | args | computed | expected | pass |").unwrap();
    writeln!(s, "|---|---|---|---|---|").unwrap();
    for c in &r.checks {
        let args: Vec<String> = c.args.iter().map(|a| a.to_string()).collect();
        writeln!(
            s,
            "| {} | {} | `{}` | `{}` | {} |",
            c.relation,
            args.join(","),
            c.computed.replace('|', "\\|"),
            c.expected.replace('|', "\\|"),
            if c.pass { "yes" } else { "no" }
        )
        .unwrap();
    }
    writeln!(s, "\n{}/{} passed", r.pass_count(), r.checks.len()).unwrap();
    s
}

pub fn report_json(r: &VerificationReport) -> Value {
    json!({
        "schema": SCHEMA,
        "type": r.dynkin_type,
        "orientation": r.orientation,
        "pass": r.passed(),
        "checks": r.checks,
    })
}
