use std::collections::BTreeMap;

use num::{One, Zero};

use super::diagram::LinkDiagram;
use super::eval::SkeinEvaluator;
use crate::error::{Error, Result};
use crate::polycore::{int, HSeries, MPoly, Rat, VarId};

pub const MAX_DIAGONAL_ORDER: usize = 8;

/// Coefficients `p_ij` with `h^i` coefficient of the rank-`n` specialization
/// equal to `sum_j p_ij n^j`. Only `j <= i` is stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalTable {
    pub order: usize,
    pub entries: Vec<Vec<Rat>>,
}

impl DiagonalTable {
    pub fn get(&self, i: usize, j: usize) -> Rat {
        self.entries.get(i).and_then(|row| row.get(j)).cloned().unwrap_or_else(Rat::zero)
    }

    /// `sum_i p_ii h^i`.
    pub fn diagonal(&self) -> HSeries {
        HSeries::new((0..=self.order).map(|i| self.get(i, i)).collect())
    }
}

/// Which skein polynomial to specialize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkeinFamily {
    Homfly,
    Kauffman,
}

/// Coefficients of the interpolating polynomial through `(k, values[k])`,
/// `k = 0..values.len()`, lowest degree first.
fn interpolate(values: &[Rat]) -> Vec<Rat> {
    let m = values.len();
    // Newton divided differences on nodes 0..m, then expand to monomials
    let mut dd = values.to_vec();
    for level in 1..m {
        for k in (level..m).rev() {
            dd[k] = (&dd[k] - &dd[k - 1]) / int(level as i64);
        }
    }
    let mut coeffs = vec![Rat::zero(); m];
    for k in (0..m).rev() {
        // coeffs <- coeffs * (n - k) + dd[k]
        let mut next = vec![Rat::zero(); m];
        for j in 0..m {
            if coeffs[j].is_zero() {
                continue;
            }
            if j + 1 < m {
                next[j + 1] += &coeffs[j];
            }
            next[j] -= &coeffs[j] * int(k as i64);
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    coeffs
}

/// Table of `p_ij` for a knot, from `N + 1` integer ranks.
pub fn diagonal_table(k: &LinkDiagram, family: SkeinFamily, order: usize) -> Result<DiagonalTable> {
    if order > MAX_DIAGONAL_ORDER {
        return Err(Error::DegreeTooLarge { degree: order, max: MAX_DIAGONAL_ORDER });
    }
    let c = k.component_count();
    if c != 1 {
        return Err(Error::NotAKnot(c));
    }
    let mut ev = SkeinEvaluator::new();
    let value = match family {
        SkeinFamily::Homfly => ev.homfly(k)?,
        SkeinFamily::Kauffman => ev.kauffman(k)?,
    };
    let half = Rat::new(1.into(), 2.into());
    let q = HSeries::exp(&half, order);
    let z = &q - &q.inverse()?;
    let samples: Vec<HSeries> = (0..=order)
        .map(|n| {
            let shift = match family {
                SkeinFamily::Homfly => int(n as i64),
                SkeinFamily::Kauffman => int(n as i64 - 1),
            };
            let rules = BTreeMap::from([(VarId::A, HSeries::exp(&(&shift * &half), order)), (VarId::Z, z.clone())]);
            HSeries::substitute(&value, &rules, order)
        })
        .collect::<Result<_>>()?;
    let mut entries = Vec::with_capacity(order + 1);
    for i in 0..=order {
        let column: Vec<Rat> = samples.iter().map(|s| s.coeff(i)).collect();
        let poly = interpolate(&column);
        if poly[i + 1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotPolynomialInN { order: i });
        }
        entries.push(poly[..=i].to_vec());
    }
    Ok(DiagonalTable { order, entries })
}

/// `sum_i p_ii h^i` from the Homfly specialization `a = e^{nh/2}`.
pub fn homfly_diagonal(k: &LinkDiagram, order: usize) -> Result<HSeries> {
    Ok(diagonal_table(k, SkeinFamily::Homfly, order)?.diagonal())
}

/// `sum_i p_ii h^i` from the Kauffman specialization `a = e^{(n-1)h/2}`.
pub fn kauffman_diagonal(k: &LinkDiagram, order: usize) -> Result<HSeries> {
    Ok(diagonal_table(k, SkeinFamily::Kauffman, order)?.diagonal())
}

/// Υ under `y = e^{h/2}`.
pub fn upsilon_series(upsilon: &MPoly, order: usize) -> Result<HSeries> {
    let rules = BTreeMap::from([(VarId::Y, Rat::new(One::one(), 2.into()))]);
    crate::polycore::expand_exponential(upsilon, &rules, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;

    #[test]
    fn interpolation_recovers_polynomial() {
        // 3 - n + 2n^2 at n = 0..4
        let vals: Vec<Rat> = (0..5).map(|n| int(3 - n + 2 * n * n)).collect();
        let c = interpolate(&vals);
        assert_eq!(c, vec![int(3), int(-1), int(2), int(0), int(0)]);
        assert_eq!(interpolate(&[rat(1, 2)]), vec![rat(1, 2)]);
    }
}
