//! Canonical forms of weighted graphs: colour refinement on
//! (weight, degree) followed by an exhaustive search over the orderings
//! compatible with the refined partition.

use super::WeightedGraph;
use crate::error::{Error, Result};

pub const MAX_CANON_VERTICES: usize = 12;

/// Equal for two weighted graphs iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphKey {
    weights: Vec<u32>,
    /// Row `i` holds the adjacency of position `i` to positions `< i`.
    lower: Vec<u64>,
}

impl GraphKey {
    /// Stable text form, used as a content address.
    pub fn encode(&self) -> String {
        let w: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        let l: Vec<String> = self.lower.iter().map(|r| format!("{r:x}")).collect();
        format!("w{}|a{}", w.join(","), l.join(","))
    }
}

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub key: GraphKey,
    /// `order[i]` is the original vertex placed at canonical position `i`.
    pub order: Vec<usize>,
}

fn refine(g: &WeightedGraph) -> Vec<u32> {
    let n = g.vertex_count();
    let rank = |sig: &[(u32, Vec<u32>)]| -> Vec<u32> {
        let mut sorted: Vec<&(u32, Vec<u32>)> = sig.iter().collect();
        sorted.sort();
        sorted.dedup();
        sig.iter().map(|s| sorted.binary_search(&s).expect("present") as u32).collect()
    };
    let init: Vec<(u32, Vec<u32>)> = (0..n).map(|v| (g.weight(v), vec![g.vertex_degree(v)])).collect();
    let mut colors = rank(&init);
    loop {
        let sig: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let next = rank(&sig);
        let classes = |c: &[u32]| c.iter().copied().max().map_or(0, |m| m + 1);
        if classes(&next) == classes(&colors) {
            return next;
        }
        colors = next;
    }
}

struct Search<'a> {
    g: &'a WeightedGraph,
    slots: Vec<u32>,
    colors: Vec<u32>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    cur_rows: Vec<u64>,
    cur_order: Vec<usize>,
    used: u64,
}

impl Search<'_> {
    fn row_for(&self, v: usize) -> u64 {
        let adj = self.g.adjacency()[v];
        self.cur_order.iter().enumerate().fold(0u64, |acc, (j, &u)| acc | ((adj >> u & 1) << j))
    }

    fn go(&mut self, pos: usize) {
        let n = self.slots.len();
        if pos == n {
            if self.best.as_ref().is_none_or(|(rows, _)| self.cur_rows < *rows) {
                self.best = Some((self.cur_rows.clone(), self.cur_order.clone()));
            }
            return;
        }
        let want = self.slots[pos];
        for v in 0..n {
            if self.used >> v & 1 == 1 || self.colors[v] != want {
                continue;
            }
            let row = self.row_for(v);
            self.cur_rows.push(row);
            let worse = self.best.as_ref().is_some_and(|(rows, _)| self.cur_rows[..] > rows[..=pos]);
            if !worse {
                self.cur_order.push(v);
                self.used |= 1 << v;
                self.go(pos + 1);
                self.used &= !(1 << v);
                self.cur_order.pop();
            }
            self.cur_rows.pop();
        }
    }
}

/// Canonical key and a canonical vertex order for `g`.
pub fn canonical_form(g: &WeightedGraph) -> Result<CanonicalForm> {
    let n = g.vertex_count();
    if n > MAX_CANON_VERTICES {
        return Err(Error::GraphTooLarge(n, MAX_CANON_VERTICES));
    }
    let colors = refine(g);
    let mut slots = colors.clone();
    slots.sort_unstable();
    let mut s = Search { g, slots, colors, best: None, cur_rows: Vec::new(), cur_order: Vec::new(), used: 0 };
    s.go(0);
    let (lower, order) = s.best.unwrap_or_default();
    let weights = order.iter().map(|&v| g.weight(v)).collect();
    Ok(CanonicalForm { key: GraphKey { weights, lower }, order })
}

/// The isomorphism-class key of `g`.
pub fn canonical_label(g: &WeightedGraph) -> Result<GraphKey> {
    Ok(canonical_form(g)?.key)
}
