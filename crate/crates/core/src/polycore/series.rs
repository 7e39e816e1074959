use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::{MPoly, Rat, VarId};
use crate::error::{Error, Result};

/// Power series in `h` truncated after `h^order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HSeries {
    coeffs: Vec<Rat>,
}

impl HSeries {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rat::zero());
        }
        HSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        HSeries { coeffs: vec![Rat::zero(); order + 1] }
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rat::one(), order)
    }

    /// `exp(c*h)` to the given order.
    pub fn exp(c: &Rat, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut cur = Rat::one();
        coeffs.push(cur.clone());
        for k in 1..=order {
            cur = cur * c / Rat::from_integer(k.into());
            coeffs.push(cur.clone());
        }
        HSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        HSeries { coeffs: (0..=order).map(|k| self.coeff(k)).collect() }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        HSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let n = self.order();
        let inv0 = c0.recip();
        let mut out = vec![inv0.clone()];
        for k in 1..=n {
            let mut s = Rat::zero();
            for j in 1..=k {
                s += &self.coeffs[j] * &out[k - j];
            }
            out.push(-s * &inv0);
        }
        Ok(HSeries { coeffs: out })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = HSeries::one(self.order());
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Substitutes series for every variable of `p`.
    pub fn substitute(p: &MPoly, rules: &BTreeMap<VarId, HSeries>, order: usize) -> Result<Self> {
        let mut out = HSeries::zero(order);
        let mut cache: BTreeMap<(VarId, i64), HSeries> = BTreeMap::new();
        for (m, c) in p.terms() {
            let mut acc = HSeries::constant(c.clone(), order);
            for &(v, e) in m.factors() {
                let pw = match cache.get(&(v, e)) {
                    Some(s) => s.clone(),
                    None => {
                        let s = rules.get(&v).ok_or_else(|| Error::UnboundVariable(v.to_string()))?;
                        let pw = s.truncate(order).pow(e)?;
                        cache.insert((v, e), pw.clone());
                        pw
                    }
                };
                acc = &acc * &pw;
            }
            out = &out + &acc;
        }
        Ok(out)
    }
}

/// Expands `p` under `v -> exp(c_v * h)` to the given order.
pub fn expand_exponential(p: &MPoly, rules: &BTreeMap<VarId, Rat>, order: usize) -> Result<HSeries> {
    let mut out = HSeries::zero(order);
    for (m, c) in p.terms() {
        let mut rate = Rat::zero();
        for &(v, e) in m.factors() {
            let cv = rules.get(&v).ok_or_else(|| Error::UnboundVariable(v.to_string()))?;
            rate += cv * Rat::from_integer(e.into());
        }
        out = &out + &HSeries::exp(&rate, order).scale(c);
    }
    Ok(out)
}

impl Add for &HSeries {
    type Output = HSeries;
    fn add(self, rhs: &HSeries) -> HSeries {
        let n = self.order().min(rhs.order());
        HSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect() }
    }
}

impl Sub for &HSeries {
    type Output = HSeries;
    fn sub(self, rhs: &HSeries) -> HSeries {
        let n = self.order().min(rhs.order());
        HSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect() }
    }
}

impl Neg for &HSeries {
    type Output = HSeries;
    fn neg(self) -> HSeries {
        HSeries { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl Mul for &HSeries {
    type Output = HSeries;
    fn mul(self, rhs: &HSeries) -> HSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        HSeries { coeffs: out }
    }
}

impl fmt::Display for HSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: MPoly = self.coeffs.iter().enumerate().map(|(k, c)| MPoly::var_pow(VarId::H, k as i64).scale(c)).sum();
        write!(f, "{p} + O(h^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;
    use proptest::prelude::*;

    fn half_rule() -> BTreeMap<VarId, Rat> {
        BTreeMap::from([(VarId::Y, rat(1, 2))])
    }

    #[test]
    fn trefoil_value_expansion() {
        let p: MPoly = "2*y - y^-1".parse().unwrap();
        let s = expand_exponential(&p, &half_rule(), 2).unwrap();
        assert_eq!(s.coeffs(), &[rat(1, 1), rat(3, 2), rat(1, 8)]);
    }

    #[test]
    fn constants_and_cancellation() {
        let s = expand_exponential(&MPoly::one(), &BTreeMap::new(), 4).unwrap();
        assert_eq!(s, HSeries::one(4));
        let p = &MPoly::var(VarId::Y) * &MPoly::var_pow(VarId::Y, -1);
        assert_eq!(expand_exponential(&p, &half_rule(), 3).unwrap(), HSeries::one(3));
    }

    #[test]
    fn unbound_variable() {
        let p = MPoly::var(VarId::A);
        assert!(matches!(expand_exponential(&p, &half_rule(), 2), Err(Error::UnboundVariable(_))));
    }

    #[test]
    fn truncation_takes_smaller_order() {
        let a = HSeries::exp(&rat(1, 1), 5);
        let b = HSeries::exp(&rat(1, 1), 2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
    }

    #[test]
    fn inverse_of_exp() {
        let a = HSeries::exp(&rat(3, 2), 6);
        let b = HSeries::exp(&rat(-3, 2), 6);
        assert_eq!(a.inverse().unwrap(), b);
        assert!(HSeries::new(vec![rat(0, 1), rat(1, 1)]).inverse().is_err());
    }

    proptest! {
        #[test]
        fn expansion_is_multiplicative(e1 in -4i64..5, e2 in -4i64..5, c1 in -3i64..4, c2 in -3i64..4) {
            let rules = BTreeMap::from([(VarId::Y, rat(1, 2)), (VarId::A, rat(c1, 3))]);
            let p = &MPoly::var_pow(VarId::Y, e1) * &MPoly::var_pow(VarId::A, c2);
            let q = MPoly::var_pow(VarId::Y, e2).scale(&rat(c1, 1));
            let lhs = expand_exponential(&(&p * &q), &rules, 5).unwrap();
            let rhs = &expand_exponential(&p, &rules, 5).unwrap() * &expand_exponential(&q, &rules, 5).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
