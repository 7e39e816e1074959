//! Proper-colouring weight systems on graphs.

use num::{One, Zero};

use super::WeightedGraph;
use crate::error::{Error, Result};
use crate::polycore::{MPoly, Monomial, Rat, VarId};

/// `r` functions `f_i : {0..=max_weight} -> Q`, one per colour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorWeightTable {
    values: Vec<Vec<Rat>>,
}

impl ColorWeightTable {
    /// `values[i][k] = f_i(k)`.
    pub fn new(values: Vec<Vec<Rat>>) -> Self {
        ColorWeightTable { values }
    }

    /// Tabulates `f(i, k)` for colours `0..r` and weights `0..=max_weight`.
    pub fn from_fn(r: usize, max_weight: u32, f: impl Fn(usize, u32) -> Rat) -> Self {
        ColorWeightTable { values: (0..r).map(|i| (0..=max_weight).map(|k| f(i, k)).collect()).collect() }
    }

    /// Every `f_i` identically one.
    pub fn ones(r: usize, max_weight: u32) -> Self {
        Self::from_fn(r, max_weight, |_, _| Rat::one())
    }

    pub fn colors(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, color: usize, weight: u32) -> Result<&Rat> {
        self.values.get(color).and_then(|f| f.get(weight as usize)).ok_or(Error::TableRange { color, weight })
    }
}

/// Visits each proper colouring with colours `0..r` in lexicographic order.
fn for_each_coloring(g: &WeightedGraph, r: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(g: &WeightedGraph, r: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        let v = cur.len();
        if v == g.vertex_count() {
            visit(cur);
            return;
        }
        for c in 0..r {
            if g.neighbors(v).all(|u| u >= v || cur[u] != c) {
                cur.push(c);
                go(g, r, cur, visit);
                cur.pop();
            }
        }
    }
    go(g, r, &mut Vec::with_capacity(g.vertex_count()), visit);
}

/// All proper colourings `vertex -> 0..r`. The empty graph has exactly one.
pub fn proper_colorings(g: &WeightedGraph, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_coloring(g, r, &mut |c| out.push(c.to_vec()));
    out
}

fn class_weights(g: &WeightedGraph, coloring: &[usize], r: usize) -> Vec<u32> {
    let mut w = vec![0u32; r];
    for (v, &c) in coloring.iter().enumerate() {
        w[c] += g.weight(v);
    }
    w
}

/// `sum over proper colourings c of prod_i f_i(total weight of colour i)`.
pub fn wbar_rf(g: &WeightedGraph, tbl: &ColorWeightTable) -> Result<Rat> {
    let r = tbl.colors();
    for i in 0..r {
        tbl.get(i, g.degree())?;
    }
    let mut total = Rat::zero();
    let mut err = None;
    for_each_coloring(g, r, &mut |c| {
        let mut prod = Rat::one();
        for (i, w) in class_weights(g, c, r).into_iter().enumerate() {
            match tbl.get(i, w) {
                Ok(f) => prod *= f,
                Err(e) => err = Some(e),
            }
        }
        total += prod;
    });
    err.map_or(Ok(total), Err)
}

/// [`wbar_rf`] with `f_i(k) = x_i^k`: a symmetric polynomial in `x1..xr`.
pub fn wbar_rx(g: &WeightedGraph, r: usize) -> MPoly {
    let mut out = MPoly::zero();
    for_each_coloring(g, r, &mut |c| {
        let m = Monomial::new(class_weights(g, c, r).into_iter().enumerate().map(|(i, w)| (VarId::X(i as u32 + 1), w as i64)))
            .expect("non-negative exponents");
        out.add_term(m, Rat::one());
    });
    out
}
