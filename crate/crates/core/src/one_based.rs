//! Serde helpers that render 0-based vertex indices as 1-based integers.

use serde::ser::{SerializeSeq, Serializer};

pub fn vertex<S: Serializer>(v: &usize, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(*v as u64 + 1)
}

pub fn vertices<S: Serializer>(vs: &[usize], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(vs.iter().map(|v| v + 1))
}

pub fn pair<S: Serializer>(p: &(usize, usize), s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq([p.0 + 1, p.1 + 1])
}

pub fn blocks<S: Serializer>(bs: &[Vec<usize>], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(bs.len()))?;
    for b in bs {
        seq.serialize_element(&b.iter().map(|v| v + 1).collect::<Vec<_>>())?;
    }
    seq.end()
}

pub fn opt_blocks<S: Serializer>(bs: &Option<Vec<Vec<usize>>>, s: S) -> Result<S::Ok, S::Error> {
    match bs {
        Some(bs) => blocks(bs, s),
        None => s.serialize_none(),
    }
}

pub fn opt_vertices<S: Serializer>(vs: &Option<Vec<usize>>, s: S) -> Result<S::Ok, S::Error> {
    match vs {
        Some(vs) => vertices(vs, s),
        None => s.serialize_none(),
    }
}

pub fn pair_list<S: Serializer>(ps: &[(usize, usize)], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(|p| [p.0 + 1, p.1 + 1]))
}
