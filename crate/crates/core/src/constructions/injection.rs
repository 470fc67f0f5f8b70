//! The gadget `H` and the injection `f: C_r(n) -> M_r(n) \ C_r(n)` for odd `r`.

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::model::{Color, MetricColoring, Params};
use crate::one_based;
use crate::structure::{
    component_decomposition, cr_membership, induced_decomposition, ComponentDecomposition,
};

/// The 4-point coloring `H`: `d(1,2) = d(2,3) = d(3,4) = m(r) - 1`,
/// `d(1,3) = d(2,4) = r - 1`, `d(1,4) = r`.
pub fn gadget_h(r: u32) -> Result<MetricColoring> {
    let params = Params::new(r, 4)?;
    let (m, rc) = (params.m(), params.r());
    MetricColoring::new(params, h_distances(m, rc).to_vec())
}

/// `H` in pair order `(12, 13, 14, 23, 24, 34)`.
fn h_distances(m: Color, r: Color) -> [Color; 6] {
    [m - 1, r - 1, r, m - 1, r - 1, m - 1]
}

fn h_get(m: Color, r: Color, i: usize, j: usize) -> Color {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    h_distances(m, r)[crate::model::pair_index(4, i, j)]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DCase {
    D1,
    D2,
    D3,
}

/// Classify `G ∈ C_r(n)` (odd `r`, `n >= 4`) into `D1`, `D2` or `D3`.
pub fn classify_d_case(g: &MetricColoring) -> Result<DCase> {
    Ok(Setup::new(g)?.case)
}

struct Setup {
    case: DCase,
    cocd: ComponentDecomposition,
    /// `Y`: the first four components (D1) or the components before `ML(G)`.
    y_set: Vec<usize>,
    ys: [usize; 4],
    /// `Y_s' = ML(G) \ {y_1, ..., y_4}` (D2/D3 only).
    rest: Vec<usize>,
    /// Large components of `G[Y_s']` in `<_*` order (D3 only).
    z: Vec<Vec<usize>>,
}

impl Setup {
    fn new(g: &MetricColoring) -> Result<Self> {
        if g.r() % 2 == 0 {
            return domain("the injection is defined for odd r only");
        }
        if g.n() < 4 {
            return domain(format!("the injection needs n >= 4, got {}", g.n()));
        }
        if !cr_membership(g).member {
            return domain("input is not in C_r(n)");
        }
        let cocd = component_decomposition(g);
        let comps = cocd.components();
        if cocd.small_count() >= 4 {
            // small components precede large ones in <_* order
            let ys = [comps[0][0], comps[1][0], comps[2][0], comps[3][0]];
            let y_set = sorted(comps[..4].concat());
            return Ok(Setup {
                case: DCase::D1,
                cocd,
                y_set,
                ys,
                rest: Vec::new(),
                z: Vec::new(),
            });
        }
        let Some(s) = cocd.minimal_large_index() else {
            return Err(Error::Unsupported(format!(
                "no large component and only {} small components; no case applies",
                cocd.small_count()
            )));
        };
        let ml = &comps[s];
        let ys = [ml[0], ml[1], ml[2], ml[3]];
        let rest = ml[4..].to_vec();
        let y_set = sorted(comps[..s].concat());
        let sub = induced_decomposition(g, &rest);
        let z: Vec<Vec<usize>> = (0..sub.components().len())
            .filter(|&i| sub.is_large(i))
            .map(|i| sub.components()[i].clone())
            .collect();
        let case = if z.len() <= 3 { DCase::D2 } else { DCase::D3 };
        Ok(Setup {
            case,
            cocd,
            y_set,
            ys,
            rest,
            z: if case == DCase::D3 { z } else { Vec::new() },
        })
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InjectionTrace {
    pub case: DCase,
    pub cocd: ComponentDecomposition,
    /// `y_1, ..., y_4`, the vertices carrying the planted copy of `H`.
    #[serde(serialize_with = "one_based::vertices")]
    pub selected: Vec<usize>,
    /// `i_1, ..., i_k` (1-based positions inside `Z^1, ..., Z^k`; D3 only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index_sequence: Option<Vec<usize>>,
    /// The chain `z^1_{i_1}, ..., z^k_{i_k}` (D3 only).
    #[serde(serialize_with = "one_based::opt_vertices", skip_serializing_if = "Option::is_none")]
    pub chain: Option<Vec<usize>>,
    pub output: MetricColoring,
}

/// Apply `f` and check that the output lies in `M_r(n) \ C_r(n)` and carries `H`.
pub fn inject_f(g: &MetricColoring) -> Result<InjectionTrace> {
    let st = Setup::new(g)?;
    let (r, m) = (g.r(), g.params().m());
    let mut out = g.clone();
    let ys = st.ys;
    let mut index_sequence = None;
    let mut chain = None;
    match st.case {
        DCase::D1 => {
            for (a, &x) in st.y_set.iter().enumerate() {
                for &y in &st.y_set[a + 1..] {
                    out.set(x, y, r - 1);
                }
            }
        }
        DCase::D2 | DCase::D3 => {
            for (a, &x) in st.y_set.iter().enumerate() {
                for &y in &st.y_set[a + 1..] {
                    out.set(x, y, r);
                }
                for &y in &ys {
                    out.set(x, y, r);
                }
            }
            for &y in &ys {
                for &z in &st.rest {
                    let d = g.get(y, z);
                    if d >= r {
                        return Err(Error::Invariant(format!(
                            "pair ({}, {}) inside ML(G) already has color r",
                            y + 1,
                            z + 1
                        )));
                    }
                    out.set(y, z, d + 1);
                }
            }
            if st.case == DCase::D3 {
                let (idx, path) = index_chain(g, &st.z)?;
                for w in path.windows(2) {
                    out.set(w[0], w[1], m - 1);
                }
                out.set(path[0], path[path.len() - 1], r);
                index_sequence = Some(idx);
                chain = Some(path);
            }
        }
    }
    for a in 0..4 {
        for b in a + 1..4 {
            out.set(ys[a], ys[b], h_get(m, r, a, b));
        }
    }
    if let Some(t) = crate::model::find_violating_triangle(&out) {
        return Err(Error::Invariant(format!(
            "f(G) has a violating triangle at {:?}",
            t.map(|v| v + 1)
        )));
    }
    if cr_membership(&out).member {
        return Err(Error::Invariant("f(G) lies in C_r(n)".into()));
    }
    Ok(InjectionTrace {
        case: st.case,
        cocd: st.cocd,
        selected: ys.to_vec(),
        index_sequence,
        chain,
        output: out,
    })
}

/// The index sequence `i_1, ..., i_k` and the chosen chain vertices.
fn index_chain(g: &MetricColoring, z: &[Vec<usize>]) -> Result<(Vec<usize>, Vec<usize>)> {
    let r = g.r() as usize;
    let k = z.len();
    let at = |j: usize, i: usize| z[j][i - 1];
    let mut idx = vec![1usize, 1];
    idx.push(g.get(at(0, 1), at(1, 1)) as usize + 1);
    while idx.len() < k {
        let j = idx.len() - 1;
        if !(1..=(2 * r).min(z[j].len())).contains(&idx[j]) {
            return Err(Error::Invariant(format!("index i_{} = {} outside [1, 2r]", j + 1, idx[j])));
        }
        let d = g.get(at(j - 1, idx[j - 1]), at(j, idx[j])) as usize;
        let next = if idx[j] <= r { idx[j] + d } else { idx[j] - d };
        idx.push(next);
    }
    idx.truncate(k);
    for (j, &i) in idx.iter().enumerate() {
        if !(1..=2 * r).contains(&i) || i > z[j].len() {
            return Err(Error::Invariant(format!("index i_{} = {i} outside [1, 2r]", j + 1)));
        }
    }
    for j in 1..k - 1 {
        let d = g.get(at(j - 1, idx[j - 1]), at(j, idx[j])) as usize;
        if idx[j].abs_diff(idx[j + 1]) != d || d == 0 || d > r {
            return Err(Error::Invariant(format!(
                "|i_{} - i_{}| differs from the required distance {d}",
                j + 1,
                j + 2
            )));
        }
    }
    let path = idx.iter().enumerate().map(|(j, &i)| at(j, i)).collect();
    Ok((idx, path))
}
