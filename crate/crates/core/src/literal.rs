//! Sparse-vector literals.
//!
//! A literal is a comma-separated list of terms, each optionally followed by
//! `=m` (default multiplicity 1):
//!
//! * `i:a` names the vertex `(i, a)` with a 1-based `i` and a height residue `a`;
//! * `NAME` names `π(NAME)` in `σÎ`, e.g. `S1`, `P2`, `ΣS1`, `SigmaI2`, `M2.1`;
//! * `sigma(NAME)` or `σNAME` names `σπ(NAME)` in `Î`.
//!
//! The empty literal and `0` denote the zero vector. A pair is written
//! `<v literal>; <w literal>`.

use crate::cyclic::CycIndex;
use crate::error::{Error, Result};
use crate::vectors::{CycVec, CycVertex, VVector, VWPair, WVector};

fn parse_term(idx: &CycIndex, term: &str) -> Result<(CycVertex, i64)> {
    let (key, mult) = match term.rsplit_once('=') {
        Some((k, m)) => {
            let m: i64 = m
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad multiplicity in `{term}`")))?;
            (k.trim(), m)
        }
        None => (term, 1),
    };
    Ok((parse_key(idx, key)?, mult))
}

fn parse_key(idx: &CycIndex, key: &str) -> Result<CycVertex> {
    if let Some((i, a)) = key.split_once(':') {
        let bad = || Error::Parse(format!("bad vertex `{key}`"));
        let i: usize = i.trim().parse().map_err(|_| bad())?;
        let a: i64 = a.trim().parse().map_err(|_| bad())?;
        if i == 0 || i > idx.rank() {
            return Err(bad());
        }
        return Ok(CycVertex::new(i - 1, a.rem_euclid(idx.period() as i64) as usize));
    }
    if let Some(inner) = key.strip_prefix("sigma(").and_then(|r| r.strip_suffix(')')) {
        return Ok(idx.sigma(idx.object_vertex(inner)?));
    }
    if let Some(inner) = key.strip_prefix('σ') {
        return Ok(idx.sigma(idx.object_vertex(inner)?));
    }
    idx.object_vertex(key)
}

/// Parses a literal without checking which index set it lives on.
pub fn parse_vector(idx: &CycIndex, s: &str) -> Result<CycVec> {
    let s = s.trim();
    let mut out = CycVec::zero();
    if s.is_empty() || s == "0" {
        return Ok(out);
    }
    for term in s.split(',') {
        let (x, m) = parse_term(idx, term.trim())?;
        out.add_at(x, m);
    }
    Ok(out)
}

/// A vector on `Î`.
pub fn parse_w(idx: &CycIndex, s: &str) -> Result<WVector> {
    let w = parse_vector(idx, s)?;
    if let Some(x) = w.support().find(|&x| !idx.in_i_hat(x)) {
        return Err(Error::Parse(format!("{x} is not a vertex of the w index set")));
    }
    Ok(w)
}

/// A vector on `σÎ`.
pub fn parse_v(idx: &CycIndex, s: &str) -> Result<VVector> {
    let v = parse_vector(idx, s)?;
    if let Some(x) = v.support().find(|&x| !idx.in_sigma_i_hat(x)) {
        return Err(Error::Parse(format!("{x} is not a vertex of the v index set")));
    }
    Ok(v)
}

/// `<v>; <w>`.
pub fn parse_pair(idx: &CycIndex, s: &str) -> Result<VWPair> {
    let (v, w) = s
        .split_once(';')
        .ok_or_else(|| Error::Parse(format!("pair `{s}` needs the form `<v>; <w>`")))?;
    Ok(VWPair::new(parse_v(idx, v)?, parse_w(idx, w)?))
}

/// Renders a vector with object names, the inverse of [`parse_vector`] on
/// named terms.
pub fn render_named(idx: &CycIndex, u: &CycVec) -> String {
    if u.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = u
        .iter()
        .map(|(x, c)| {
            let name = idx.vertex_name(x);
            if c == 1 {
                name
            } else {
                format!("{name}={c}")
            }
        })
        .collect();
    parts.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{DynkinQuiver, DynkinType, Orientation};

    fn a2() -> CycIndex {
        CycIndex::new(&DynkinQuiver::standard(DynkinType::A(2), Orientation::Linear)).unwrap()
    }

    #[test]
    fn named_terms() {
        let idx = a2();
        let w = parse_w(&idx, "sigma(P2)=1").unwrap();
        let p2 = idx.module_vertex(idx.model().projective(1));
        assert_eq!(w, CycVec::unit(idx.sigma(p2)));
        assert_eq!(parse_w(&idx, "σS1").unwrap(), idx.e_sigma_simple(0));
        assert_eq!(parse_w(&idx, "σS1, σΣS1").unwrap(), idx.w_f(0));
        assert_eq!(parse_v(&idx, "S1,P2").unwrap(), idx.v_f(0));
        assert_eq!(parse_v(&idx, "SigmaS1, S2").unwrap(), idx.v_f(1));
    }

    #[test]
    fn coordinates_and_multiplicities() {
        let idx = a2();
        let v = parse_vector(&idx, "1:1=2, 2:0").unwrap();
        assert_eq!(v.get(CycVertex::new(0, 1)), 2);
        assert_eq!(v.get(CycVertex::new(1, 0)), 1);
        assert_eq!(parse_vector(&idx, "1:7").unwrap(), CycVec::unit(CycVertex::new(0, 1)));
        assert!(parse_vector(&idx, "0").unwrap().is_zero());
        assert!(parse_vector(&idx, "").unwrap().is_zero());
    }

    #[test]
    fn rejects_bad_input() {
        let idx = a2();
        assert!(parse_vector(&idx, "3:0").is_err());
        assert!(parse_vector(&idx, "Q1").is_err());
        assert!(parse_vector(&idx, "S1=x").is_err());
        assert!(parse_w(&idx, "S1").is_err());
        assert!(parse_v(&idx, "σS1").is_err());
        assert!(parse_pair(&idx, "S1").is_err());
    }

    #[test]
    fn pair_and_round_trip() {
        let idx = a2();
        let p = parse_pair(&idx, "S1; σS1, σS2").unwrap();
        assert_eq!(p, idx.iota(idx.model().projective(1)));
        let w = idx.w_f(1);
        assert_eq!(parse_w(&idx, &render_named(&idx, &w)).unwrap(), w);
        assert_eq!(render_named(&idx, &CycVec::zero()), "0");
    }
}
