use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph with positive integer vertex weights.
///
/// Vertices are `0..n`; adjacency is a bitmask per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedGraph {
    weights: Vec<u32>,
    adj: Vec<u64>,
}

impl WeightedGraph {
    pub fn empty() -> Self {
        WeightedGraph { weights: Vec::new(), adj: Vec::new() }
    }

    pub fn new(weights: Vec<u32>, edges: &[(usize, usize)]) -> Result<Self> {
        if weights.len() > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!("more than {MAX_VERTICES} vertices")));
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidGraph(format!("vertex {i} has weight 0")));
        }
        let n = weights.len();
        let mut adj = vec![0u64; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge ({a}, {b}) has an endpoint out of range")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if adj[a] >> b & 1 == 1 {
                return Err(Error::InvalidGraph(format!("repeated edge ({a}, {b})")));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(WeightedGraph { weights, adj })
    }

    /// A single vertex of the given weight.
    pub fn vertex(weight: u32) -> Self {
        WeightedGraph::new(vec![weight], &[]).expect("valid vertex")
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v]
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Sum of the vertex weights.
    pub fn degree(&self) -> u32 {
        self.weights.iter().sum()
    }

    pub fn vertex_degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.adj.len() && b < 64 && self.adj[a] >> b & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.adj.len() {
            let mut row = self.adj[a] >> (a + 1) << (a + 1);
            while row != 0 {
                let b = row.trailing_zeros() as usize;
                out.push((a, b));
                row &= row - 1;
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mut row = self.adj[v];
        std::iter::from_fn(move || {
            if row == 0 {
                None
            } else {
                let b = row.trailing_zeros() as usize;
                row &= row - 1;
                Some(b)
            }
        })
    }

    fn check_edge(&self, (a, b): (usize, usize)) -> Result<()> {
        if a < self.vertex_count() && b < self.vertex_count() && self.has_edge(a, b) {
            Ok(())
        } else {
            Err(Error::MissingEdge(a, b))
        }
    }

    /// The graph with edge `e` removed.
    pub fn delete_edge(&self, e: (usize, usize)) -> Result<Self> {
        self.check_edge(e)?;
        let mut g = self.clone();
        g.adj[e.0] &= !(1 << e.1);
        g.adj[e.1] &= !(1 << e.0);
        Ok(g)
    }

    /// Removes `e` and merges its endpoints into one vertex carrying the summed
    /// weight; parallel edges collapse. The merged vertex takes the smaller index.
    pub fn contract_edge(&self, e: (usize, usize)) -> Result<Self> {
        self.check_edge(e)?;
        let (keep, gone) = (e.0.min(e.1), e.0.max(e.1));
        let n = self.vertex_count();
        let squeeze = |row: u64| -> u64 {
            let low = row & ((1u64 << gone) - 1);
            let high = if gone + 1 < 64 { row >> (gone + 1) << gone } else { 0 };
            low | high
        };
        let mut weights = Vec::with_capacity(n - 1);
        let mut adj = Vec::with_capacity(n - 1);
        for v in 0..n {
            if v == gone {
                continue;
            }
            let mut row = self.adj[v];
            if v == keep {
                row |= self.adj[gone];
                row &= !(1 << keep) & !(1 << gone);
            } else if row >> gone & 1 == 1 {
                row = (row & !(1 << gone)) | (1 << keep);
            }
            weights.push(if v == keep { self.weights[keep] + self.weights[gone] } else { self.weights[v] });
            adj.push(squeeze(row));
        }
        Ok(WeightedGraph { weights, adj })
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        let off = self.vertex_count();
        if off + other.vertex_count() > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!("more than {MAX_VERTICES} vertices")));
        }
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&other.weights);
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << off));
        Ok(WeightedGraph { weights, adj })
    }

    /// The graph with vertices reordered: vertex `order[i]` becomes `i`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        let n = self.vertex_count();
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let weights = order.iter().map(|&v| self.weights[v]).collect();
        let adj = order.iter().map(|&v| self.neighbors(v).fold(0u64, |acc, u| acc | 1 << pos[u])).collect();
        WeightedGraph { weights, adj }
    }

    /// Connected components as vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 0u64;
            let mut frontier = 1u64 << s;
            while frontier != 0 {
                comp |= frontier;
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    next |= self.adj[v];
                    f &= f - 1;
                }
                frontier = next & !comp;
            }
            seen |= comp;
            out.push((0..n).filter(|&v| comp >> v & 1 == 1).collect());
        }
        out
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let sv = side[v].expect("assigned");
                for u in self.neighbors(v) {
                    match side[u] {
                        None => {
                            side[u] = Some(!sv);
                            stack.push(u);
                        }
                        Some(su) if su == sv => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text).map_err(|e| Error::InvalidGraph(e.to_string()))?;
        file.to_graph()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphFile::from_graph(self)).expect("serializable")
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexEntry {
    pub id: String,
    pub weight: u32,
}

/// On-disk graph format: `{"vertices":[{"id":"a","weight":1}],"edges":[["a","b"]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<VertexEntry>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
}

impl GraphFile {
    pub fn to_graph(&self) -> Result<WeightedGraph> {
        let mut index = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if index.insert(v.id.as_str(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex id {:?}", v.id)));
            }
        }
        let lookup = |id: &str| index.get(id).copied().ok_or_else(|| Error::InvalidGraph(format!("unknown vertex id {id:?}")));
        let edges = self.edges.iter().map(|(a, b)| Ok((lookup(a)?, lookup(b)?))).collect::<Result<Vec<_>>>()?;
        WeightedGraph::new(self.vertices.iter().map(|v| v.weight).collect(), &edges)
    }

    pub fn from_graph(g: &WeightedGraph) -> Self {
        GraphFile {
            vertices: g.weights().iter().enumerate().map(|(i, &w)| VertexEntry { id: format!("v{i}"), weight: w }).collect(),
            edges: g.edges().into_iter().map(|(a, b)| (format!("v{a}"), format!("v{b}"))).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2(a: u32, b: u32) -> WeightedGraph {
        WeightedGraph::new(vec![a, b], &[(0, 1)]).unwrap()
    }

    fn triangle() -> WeightedGraph {
        WeightedGraph::new(vec![1, 1, 1], &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn delete_examples() {
        assert_eq!(k2(1, 1).delete_edge((0, 1)).unwrap(), WeightedGraph::new(vec![1, 1], &[]).unwrap());
        let p3 = WeightedGraph::new(vec![1, 1, 1], &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(triangle().delete_edge((0, 2)).unwrap(), p3);
        assert_eq!(p3.delete_edge((0, 1)).unwrap(), WeightedGraph::new(vec![1, 1, 1], &[(1, 2)]).unwrap());
        assert_eq!(p3.delete_edge((0, 2)), Err(Error::MissingEdge(0, 2)));
    }

    #[test]
    fn contract_examples() {
        assert_eq!(k2(1, 1).contract_edge((0, 1)).unwrap(), WeightedGraph::vertex(2));
        assert_eq!(triangle().contract_edge((0, 1)).unwrap(), k2(2, 1));
        assert_eq!(k2(3, 4).contract_edge((1, 0)).unwrap(), WeightedGraph::vertex(7));
        assert_eq!(k2(1, 1).contract_edge((0, 0)), Err(Error::MissingEdge(0, 0)));
    }

    #[test]
    fn contraction_reindexes_higher_vertices() {
        // path 0-1-2-3, contract (1,2): 0-1'-2 with weight 2 in the middle
        let p4 = WeightedGraph::new(vec![1, 1, 1, 1], &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = p4.contract_edge((1, 2)).unwrap();
        assert_eq!(c, WeightedGraph::new(vec![1, 2, 1], &[(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn invalid_graphs() {
        assert!(WeightedGraph::new(vec![0], &[]).is_err());
        assert!(WeightedGraph::new(vec![1], &[(0, 0)]).is_err());
        assert!(WeightedGraph::new(vec![1, 1], &[(0, 1), (1, 0)]).is_err());
        assert!(WeightedGraph::new(vec![1], &[(0, 3)]).is_err());
    }

    #[test]
    fn bipartite_and_components() {
        assert!(!triangle().is_bipartite());
        assert!(k2(1, 1).is_bipartite());
        let g = WeightedGraph::new(vec![1, 1, 1], &[(0, 2)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 2], vec![1]]);
        assert!(WeightedGraph::empty().is_bipartite());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"vertices":[{"id":"a","weight":1},{"id":"b","weight":3}],"edges":[["a","b"]]}"#;
        let g = WeightedGraph::from_json(text).unwrap();
        assert_eq!(g, k2(1, 3));
        assert_eq!(WeightedGraph::from_json(&g.to_json()).unwrap(), g);
        assert!(WeightedGraph::from_json(r#"{"vertices":[{"id":"a","weight":1}],"edges":[["a","c"]]}"#).is_err());
    }
}
