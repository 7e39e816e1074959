//! The chromatic algebra: weighted graphs modulo `G = G/e - G.e`, which is
//! the polynomial ring in the single-vertex classes `s(d)`.

mod canon;
mod coloring;
mod graph;

use std::collections::HashMap;

pub use canon::{canonical_form, canonical_label, CanonicalForm, GraphKey, MAX_CANON_VERTICES};
pub use coloring::{proper_colorings, wbar_rf, wbar_rx, ColorWeightTable};
pub use graph::{GraphFile, VertexEntry, WeightedGraph, MAX_VERTICES};

use crate::cache::DiskCache;
use crate::diagrams::ChordDiagram;
use crate::error::{Error, Result};
use crate::polycore::{power_sum_decompose, MPoly, VarId};

/// Deletion-contraction evaluator memoized on canonical graph keys.
///
/// A reducer is meant to be owned by one worker; results do not depend on
/// what is already cached.
#[derive(Default)]
pub struct ChromaticReducer {
    memo: HashMap<GraphKey, MPoly>,
    disk: Option<DiskCache>,
}

impl ChromaticReducer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Also consults and fills a persistent store.
    pub fn with_disk_cache(disk: DiskCache) -> Self {
        ChromaticReducer { memo: HashMap::new(), disk: Some(disk) }
    }

    /// Uses `$CHORDWEAVE_CACHE` when it is set.
    pub fn from_env() -> Self {
        ChromaticReducer { memo: HashMap::new(), disk: DiskCache::from_env("chromatic-v1") }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Class of `g` in `Q[s1, s2, ...]`.
    pub fn reduce(&mut self, g: &WeightedGraph) -> Result<MPoly> {
        if g.edge_count() == 0 {
            return Ok(g.weights().iter().map(|&w| MPoly::var(VarId::S(w))).product());
        }
        let components = g.components();
        if components.len() > 1 {
            let mut out = MPoly::one();
            for comp in components {
                out = &out * &self.reduce(&induced(g, &comp))?;
            }
            return Ok(out);
        }
        let cf = canonical_form(g)?;
        if let Some(v) = self.memo.get(&cf.key) {
            return Ok(v.clone());
        }
        let disk_key = cf.key.encode();
        if let Some(v) = self.disk.as_ref().and_then(|d| d.get(&disk_key)).and_then(|s| s.parse::<MPoly>().ok()) {
            self.memo.insert(cf.key, v.clone());
            return Ok(v);
        }
        let c = g.permuted(&cf.order);
        let e = c.edges()[0];
        let value = &self.reduce(&c.delete_edge(e)?)? - &self.reduce(&c.contract_edge(e)?)?;
        if let Some(d) = &self.disk {
            d.put(&disk_key, &value.to_string());
        }
        self.memo.insert(cf.key, value.clone());
        Ok(value)
    }
}

fn induced(g: &WeightedGraph, vertices: &[usize]) -> WeightedGraph {
    let mut pos = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in vertices.iter().enumerate() {
        pos[v] = i;
    }
    let weights = vertices.iter().map(|&v| g.weight(v)).collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| pos[a] != usize::MAX && pos[b] != usize::MAX)
        .map(|(a, b)| (pos[a], pos[b]))
        .collect();
    WeightedGraph::new(weights, &edges).expect("induced subgraph is valid")
}

/// Class of `g` in `Q[s1, s2, ...]` with a fresh memo.
pub fn reduce(g: &WeightedGraph) -> Result<MPoly> {
    ChromaticReducer::new().reduce(g)
}

/// The universal chromatic weight system: the class of the intersection graph.
pub fn gamma_bar(d: &ChordDiagram) -> Result<MPoly> {
    reduce(&d.intersection_graph())
}

/// Recovers the chromatic class from the `r = deg d` colouring weight system
/// by passing through power sums.
pub fn chromatic_from_wrx(d: &ChordDiagram) -> Result<MPoly> {
    let r = d.degree();
    if r == 0 {
        return Err(Error::InvalidDiagram("needs at least one chord".into()));
    }
    let sym = crate::stateweights::w_rx(d, r);
    let g = power_sum_decompose(&sym, r)?;
    g.rename(|v| match v {
        VarId::G(k) => VarId::S(k),
        other => other,
    })
}

/// Degree of an `s`-monomial: `s(d)` has degree `d`.
pub fn s_grade(v: VarId) -> i64 {
    match v {
        VarId::S(d) => d as i64,
        _ => 0,
    }
}
