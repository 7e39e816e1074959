//! Brute-force Lie-algebra weight systems: place Casimir factors at the chord
//! ends, multiply the operators around the circle and take the trace over
//! `V^{⊗r}`, with summand `i` of `g^{⊕r}` acting on tensor factor `i`.
//!
//! All operators involved are partial monomial maps on the standard basis,
//! so the trace is computed by following each basis vector around the circle.

use num::{BigInt, One, Zero};

use crate::diagrams::ChordDiagram;
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::polycore::{MPoly, Rat, VarId};
pub use crate::stateweights::LieFamily;

pub const COST_LIMIT: u128 = 1_000_000;

/// `g_n^{⊕r}` with summand `i` using the Casimir scaled by `scales[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSpec {
    pub family: LieFamily,
    pub n: usize,
    pub scales: Vec<Rat>,
}

impl LieSpec {
    pub fn new(family: LieFamily, n: usize, scales: Vec<Rat>) -> Self {
        assert!(!scales.is_empty(), "at least one summand");
        assert!(n >= 2, "matrix size must be at least 2");
        LieSpec { family, n, scales }
    }

    /// A single summand with the unscaled Casimir.
    pub fn simple(family: LieFamily, n: usize) -> Self {
        Self::new(family, n, vec![Rat::one()])
    }

    pub fn r(&self) -> usize {
        self.scales.len()
    }

    /// Summand count the evaluation of a degree-`deg` diagram would need.
    pub fn cost(&self, deg: usize) -> u128 {
        ((self.r() * self.n * self.n) as u128).saturating_pow(deg as u32)
    }
}

/// A matrix with at most one nonzero entry per column, acting on one tensor
/// factor: basis index `j` goes to `image[j] = Some((i, c))`, i.e. `c * e_i`.
#[derive(Clone, Debug)]
struct MonomialOp {
    image: Vec<Option<(usize, i64)>>,
}

impl MonomialOp {
    fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut image = vec![None; n];
        image[j] = Some((i, 1));
        MonomialOp { image }
    }

    fn antisym(n: usize, i: usize, j: usize) -> Self {
        let mut image = vec![None; n];
        image[j] = Some((i, 1));
        image[i] = Some((j, -1));
        MonomialOp { image }
    }
}

/// Casimir of one summand as `sum coeff * left ⊗ right`.
struct CasimirTerm {
    left: MonomialOp,
    right: MonomialOp,
    coeff: i64,
}

fn casimir(family: LieFamily, n: usize) -> Vec<CasimirTerm> {
    match family {
        LieFamily::Gl => (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| CasimirTerm { left: MonomialOp::unit(n, i, j), right: MonomialOp::unit(n, j, i), coeff: 1 })
            .collect(),
        // basis e_ij - e_ji, dual basis -(e_ij - e_ji) for (a, b) = tr(ab)/2
        LieFamily::So => (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| CasimirTerm { left: MonomialOp::antisym(n, i, j), right: MonomialOp::antisym(n, i, j), coeff: -1 })
            .collect(),
    }
}

/// Integer trace for one assignment of summands to chords.
fn trace_for_assignment(
    d: &ChordDiagram,
    terms: &[CasimirTerm],
    n: usize,
    r: usize,
    summand: &[usize],
    exec: Execution,
) -> BigInt {
    let chords = d.chords();
    let deg = chords.len();
    let b = terms.len();
    let total = b.checked_pow(deg as u32).expect("within cost guard");
    // at each point: (chord index, is left end)
    let mut at_point = vec![(0usize, true); d.points()];
    for (k, &(a, z)) in chords.iter().enumerate() {
        at_point[a] = (k, true);
        at_point[z] = (k, false);
    }
    let dim = n.pow(r as u32);
    par::sum_range(
        exec,
        total,
        BigInt::zero(),
        |code| {
            let mut choice = vec![0usize; deg];
            let mut c = code;
            let mut coeff = 1i64;
            for slot in choice.iter_mut() {
                *slot = c % b;
                c /= b;
                coeff *= terms[*slot].coeff;
            }
            let mut tr = 0i64;
            let mut digits = vec![0usize; r];
            for start in 0..dim {
                let mut s = start;
                for dgt in digits.iter_mut() {
                    *dgt = s % n;
                    s /= n;
                }
                let orig = digits.clone();
                let mut val = 1i64;
                // operators act right to left; the point order is the reverse
                for p in (0..at_point.len()).rev() {
                    let (k, left) = at_point[p];
                    let t = &terms[choice[k]];
                    let op = if left { &t.left } else { &t.right };
                    let f = summand[k];
                    match op.image[digits[f]] {
                        Some((i, c)) => {
                            digits[f] = i;
                            val *= c;
                        }
                        None => {
                            val = 0;
                            break;
                        }
                    }
                }
                if val != 0 && digits == orig {
                    tr += val;
                }
            }
            BigInt::from(coeff * tr)
        },
        |a, b| a + b,
    )
}

/// The weight of `d` for the Lie algebra and representation in `spec`.
pub fn oracle_eval(spec: &LieSpec, d: &ChordDiagram) -> Result<Rat> {
    oracle_eval_with(spec, d, Execution::default())
}

pub fn oracle_eval_with(spec: &LieSpec, d: &ChordDiagram, exec: Execution) -> Result<Rat> {
    let deg = d.degree();
    let needed = spec.cost(deg);
    if needed > COST_LIMIT {
        return Err(Error::CostGuard { needed, limit: COST_LIMIT });
    }
    let (n, r) = (spec.n, spec.r());
    let terms = casimir(spec.family, n);
    let mut total = Rat::zero();
    for code in 0..r.pow(deg as u32) {
        let mut summand = vec![0usize; deg];
        let mut c = code;
        let mut scale = Rat::one();
        for slot in summand.iter_mut() {
            *slot = c % r;
            c /= r;
            scale *= &spec.scales[*slot];
        }
        let tr = trace_for_assignment(d, &terms, n, r, &summand, exec);
        total += scale * Rat::from_integer(tr);
    }
    Ok(total)
}

/// Whether scaling the Casimir by `a` scales the weight by `a^deg`.
pub fn oracle_scaling_check(spec: &LieSpec, d: &ChordDiagram, a: &Rat) -> Result<bool> {
    assert_eq!(spec.r(), 1, "scaling check needs a single summand");
    let scaled = LieSpec { scales: vec![a * &spec.scales[0]], ..spec.clone() };
    let lhs = oracle_eval(&scaled, d)?;
    let rhs = num::pow(a.clone(), d.degree()) * oracle_eval(spec, d)?;
    Ok(lhs == rhs)
}

/// Whether the direct sum evaluates to the coproduct expansion over single
/// summands.
pub fn oracle_direct_sum_check(family: LieFamily, n: usize, scales: &[Rat], d: &ChordDiagram) -> Result<bool> {
    let spec = LieSpec::new(family, n, scales.to_vec());
    let lhs = oracle_eval(&spec, d)?;
    let mut rhs = Rat::zero();
    for c in d.chord_colorings(scales.len()) {
        let mut prod = Rat::one();
        for (a, part) in scales.iter().zip(&c.parts) {
            prod *= oracle_eval(&LieSpec::new(family, n, vec![a.clone()]), part)?;
        }
        rhs += prod;
    }
    Ok(lhs == rhs)
}

fn lagrange_basis(var: VarId, nodes: &[i64], j: usize) -> MPoly {
    let mut out = MPoly::one();
    for (m, &xm) in nodes.iter().enumerate() {
        if m != j {
            let denom = Rat::from_integer((nodes[j] - xm).into());
            let factor = &MPoly::var(var) - &MPoly::int(xm);
            out = &out * &factor.scale(&denom.recip());
        }
    }
    out
}

/// Reconstructs the direct-sum polynomial in `x1..xr` and `t` from oracle
/// values on the integer grid `{2..=r+deg+2}` of Casimir scales and matrix
/// sizes.
pub fn interpolate_wgr(d: &ChordDiagram, family: LieFamily, r: usize) -> Result<MPoly> {
    let deg = d.degree();
    let nodes: Vec<i64> = (2..=(r + deg + 2) as i64).collect();
    let k = nodes.len();
    let vars: Vec<VarId> = (1..=r as u32).map(VarId::X).chain([VarId::T]).collect();
    let max_n = *nodes.last().expect("nonempty grid") as usize;
    let worst = LieSpec::new(family, max_n, vec![Rat::one(); r]).cost(deg);
    if worst > COST_LIMIT {
        return Err(Error::CostGuard { needed: worst, limit: COST_LIMIT });
    }
    let bases: Vec<Vec<MPoly>> = vars.iter().map(|&v| (0..k).map(|j| lagrange_basis(v, &nodes, j)).collect()).collect();
    let points = k.pow(vars.len() as u32);
    let values: Vec<Result<MPoly>> = par::map_range(Execution::default(), points, |code| {
        let mut idx = vec![0usize; vars.len()];
        let mut c = code;
        for slot in idx.iter_mut() {
            *slot = c % k;
            c /= k;
        }
        let n = nodes[idx[r]] as usize;
        let scales = idx[..r].iter().map(|&i| Rat::from_integer(nodes[i].into())).collect();
        let v = oracle_eval_with(&LieSpec::new(family, n, scales), d, Execution::Sequential)?;
        let v = v / Rat::from_integer(BigInt::from(n).pow(r as u32));
        let mut term = MPoly::constant(v);
        for (axis, &i) in idx.iter().enumerate() {
            term = &term * &bases[axis][i];
        }
        Ok(term)
    });
    let mut out = MPoly::zero();
    for v in values {
        out += &v?;
    }
    Ok(out)
}
