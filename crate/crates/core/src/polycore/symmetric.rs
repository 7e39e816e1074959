//! Symmetric polynomials in `x1..xr` expressed through power sums `G(k) = x1^k + ... + xr^k`.

use std::collections::BTreeMap;

use num::Zero;

use super::{MPoly, Monomial, Rat, VarId};
use crate::error::{Error, Result};

/// All partitions of `d`, parts in non-increasing order.
pub fn partitions(d: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

/// `x1^k + ... + xr^k`.
pub fn power_sum(k: u32, r: usize) -> MPoly {
    (1..=r as u32).map(|i| MPoly::var_pow(VarId::X(i), k as i64)).sum()
}

/// Bindings `G(k) -> x1^k + ... + xr^k` for `k = 1..=max_k`.
pub fn power_sum_bindings(max_k: u32, r: usize, family: fn(u32) -> VarId) -> BTreeMap<VarId, MPoly> {
    (1..=max_k).map(|k| (family(k), power_sum(k, r))).collect()
}

fn solve(mut m: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        b.swap(col, piv);
        let inv = m[col][col].recip();
        for x in &mut m[col][col..] {
            *x = &*x * &inv;
        }
        b[col] = &b[col] * &inv;
        let pivot = m[col].clone();
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for (x, p) in m[r][col..].iter_mut().zip(&pivot[col..]) {
                    *x -= p * &f;
                }
                let v = &b[col] * &f;
                b[r] -= v;
            }
        }
    }
    Some(b)
}

fn decompose_homogeneous(p: &MPoly, d: u32, r: usize) -> Result<MPoly> {
    if d == 0 {
        return Ok(p.clone());
    }
    if d as usize > r {
        return Err(Error::DegreeExceedsR { degree: d, r });
    }
    let parts = partitions(d);
    let basis: Vec<MPoly> = parts.iter().map(|l| l.iter().map(|&k| power_sum(k, r)).product()).collect();
    let monomial_of = |mu: &[u32]| {
        Monomial::new(mu.iter().enumerate().map(|(i, &e)| (VarId::X(i as u32 + 1), e as i64))).expect("non-negative")
    };
    let coeff = |q: &MPoly, m: &Monomial| q.terms().find(|(n, _)| *n == m).map(|(_, c)| c.clone()).unwrap_or_else(Rat::zero);
    let rows: Vec<Monomial> = parts.iter().map(|mu| monomial_of(mu)).collect();
    let matrix: Vec<Vec<Rat>> = rows.iter().map(|m| basis.iter().map(|q| coeff(q, m)).collect()).collect();
    let rhs: Vec<Rat> = rows.iter().map(|m| coeff(p, m)).collect();
    let sol = solve(matrix, rhs).ok_or(Error::Inconsistent("power-sum system is singular".into()))?;
    Ok(parts
        .iter()
        .zip(sol)
        .map(|(l, c)| {
            let m = Monomial::new(l.iter().map(|&k| (VarId::G(k), 1))).expect("non-negative");
            MPoly::term(c, m)
        })
        .sum())
}

/// Writes a symmetric polynomial in `x1..xr` as a polynomial in `G(1)..G(r)`.
///
/// Each homogeneous component must have degree at most `r`; above that the
/// power sums are no longer algebraically independent.
pub fn power_sum_decompose(p: &MPoly, r: usize) -> Result<MPoly> {
    for v in p.variables() {
        match v {
            VarId::X(i) if (i as usize) <= r && i >= 1 => {}
            _ => return Err(Error::NotSymmetric(r)),
        }
    }
    let parts = p.homogeneous_parts(|_| 1);
    let mut out = MPoly::zero();
    for (d, piece) in &parts {
        out += &decompose_homogeneous(piece, *d as u32, r)?;
    }
    let max_k = out.variables().iter().filter_map(|v| if let VarId::G(k) = v { Some(*k) } else { None }).max();
    let back = out.substitute(&power_sum_bindings(max_k.unwrap_or(0), r, VarId::G))?;
    if &back != p {
        return Err(Error::NotSymmetric(r));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;
    use proptest::prelude::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=6).map(|d| partitions(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11]);
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(power_sum_decompose(&p("2*x1*x2"), 2).unwrap(), p("G1^2 - G2"));
        for r in 1..=4 {
            for d in 1..=r as u32 {
                assert_eq!(power_sum_decompose(&power_sum(d, r), r).unwrap(), MPoly::var(VarId::G(d)));
            }
        }
        assert!(power_sum_decompose(&MPoly::zero(), 3).unwrap().is_zero());
        assert_eq!(power_sum_decompose(&MPoly::int(5), 2).unwrap(), MPoly::int(5));
    }

    #[test]
    fn decompose_errors() {
        assert_eq!(power_sum_decompose(&p("x1"), 2), Err(Error::NotSymmetric(2)));
        assert_eq!(power_sum_decompose(&p("x1^2 + x2 + x1"), 2), Err(Error::NotSymmetric(2)));
        assert_eq!(power_sum_decompose(&p("x1*x2*x3"), 2), Err(Error::NotSymmetric(2)));
        assert_eq!(power_sum_decompose(&p("x1^3 + x2^3"), 2), Err(Error::DegreeExceedsR { degree: 3, r: 2 }));
        assert_eq!(power_sum_decompose(&p("t*x1"), 2), Err(Error::NotSymmetric(2)));
    }

    proptest! {
        #[test]
        fn decomposition_round_trips(r in 1usize..=4, coeffs in proptest::collection::vec(-5i64..6, 11)) {
            // random element of the span of power-sum products of degree <= r
            let mut q = MPoly::zero();
            let mut it = coeffs.into_iter();
            'outer: for d in 0..=r as u32 {
                for l in partitions(d) {
                    let Some(c) = it.next() else { break 'outer };
                    let m = Monomial::new(l.iter().map(|&k| (VarId::G(k), 1))).unwrap();
                    q.add_term(m, rat(c, 1));
                }
            }
            let x = q.substitute(&power_sum_bindings(r as u32, r, VarId::G)).unwrap();
            let back = power_sum_decompose(&x, r).unwrap();
            prop_assert_eq!(back.substitute(&power_sum_bindings(r as u32, r, VarId::G)).unwrap(), x);
            prop_assert_eq!(back, q);
        }
    }

    #[test]
    fn constant_passes_through() {
        assert!(power_sum_decompose(&MPoly::one(), 1).unwrap() == MPoly::one());
    }
}
