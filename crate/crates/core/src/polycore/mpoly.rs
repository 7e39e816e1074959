use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{One, Signed, Zero};

use super::{Rat, VarId};
use crate::error::{Error, Result};

/// A sparse exponent vector, sorted by variable with no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(VarId, i64)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// Builds a monomial from arbitrary `(var, exponent)` pairs, merging repeats.
    pub fn new(factors: impl IntoIterator<Item = (VarId, i64)>) -> Result<Self> {
        let mut map: BTreeMap<VarId, i64> = BTreeMap::new();
        for (v, e) in factors {
            *map.entry(v).or_insert(0) += e;
        }
        let m = Monomial(map.into_iter().filter(|&(_, e)| e != 0).collect());
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<()> {
        for &(v, e) in &self.0 {
            if e < 0 && !v.is_laurent() {
                return Err(Error::LaurentViolation { var: v.to_string(), exp: e });
            }
        }
        Ok(())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: VarId) -> i64 {
        self.0.binary_search_by(|&(w, _)| w.cmp(&v)).map(|i| self.0[i].1).unwrap_or(0)
    }

    pub fn factors(&self) -> &[(VarId, i64)] {
        &self.0
    }

    /// Sum of all exponents.
    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (va, ea) = self.0[i];
            let (vb, eb) = other.0[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    out.push((va, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((vb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    if ea + eb != 0 {
                        out.push((va, ea + eb));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    pub(crate) fn without(&self, v: VarId) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect())
    }
}

/// Terms are ordered lexicographically in the canonical variable order,
/// higher exponents first. This is the display order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            let a = self.0.get(i);
            let b = other.0.get(j);
            let (ea, eb) = match (a, b) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, ea)), None) => {
                    i += 1;
                    (ea, 0)
                }
                (None, Some(&(_, eb))) => {
                    j += 1;
                    (0, eb)
                }
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        i += 1;
                        (ea, 0)
                    }
                    Ordering::Greater => {
                        j += 1;
                        (0, eb)
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (ea, eb)
                    }
                },
            };
            if ea != eb {
                return eb.cmp(&ea);
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rat::from_integer(c.into()))
    }

    pub fn term(c: Rat, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn var(v: VarId) -> Self {
        Self::var_pow(v, 1)
    }

    /// `v^e`. Panics if `e < 0` on a polynomial-only variable.
    pub fn var_pow(v: VarId, e: i64) -> Self {
        Self::try_var_pow(v, e).expect("negative exponent on a polynomial variable")
    }

    pub fn try_var_pow(v: VarId, e: i64) -> Result<Self> {
        Ok(Self::term(Rat::one(), Monomial::new([(v, e)])?))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = MPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Returns the value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rat {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(n, k)| (n.mul(m), k.clone())).collect() }
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse of a single-term polynomial whose variables are all Laurent.
    pub fn monomial_inverse(&self) -> Option<MPoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        let inv = Monomial::new(m.factors().iter().map(|&(v, e)| (v, -e))).ok()?;
        Some(MPoly::term(c.recip(), inv))
    }

    /// Every variable occurring with a nonzero exponent.
    pub fn variables(&self) -> Vec<VarId> {
        let mut vars: Vec<VarId> = self.terms.keys().flat_map(|m| m.factors().iter().map(|&(v, _)| v)).collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn max_degree_in(&self, v: VarId) -> Option<i64> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    pub fn min_degree_in(&self, v: VarId) -> Option<i64> {
        self.terms.keys().map(|m| m.exponent(v)).min()
    }

    /// The coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: VarId, k: i64) -> MPoly {
        MPoly::from_terms(self.terms.iter().filter(|(m, _)| m.exponent(v) == k).map(|(m, c)| (m.without(v), c.clone())))
    }

    /// Simultaneous substitution of the bound variables, fully expanded.
    pub fn substitute(&self, bindings: &BTreeMap<VarId, MPoly>) -> Result<MPoly> {
        let mut powers: HashMap<(VarId, i64), MPoly> = HashMap::new();
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut free = Vec::new();
            let mut acc = MPoly::one();
            for &(v, e) in m.factors() {
                match bindings.get(&v) {
                    None => free.push((v, e)),
                    Some(b) => {
                        let pw = match powers.get(&(v, e)) {
                            Some(p) => p.clone(),
                            None => {
                                let p = if e >= 0 {
                                    b.pow(e as u32)
                                } else {
                                    let inv = b
                                        .monomial_inverse()
                                        .ok_or_else(|| Error::LaurentViolation { var: v.to_string(), exp: e })?;
                                    inv.pow((-e) as u32)
                                };
                                powers.insert((v, e), p.clone());
                                p
                            }
                        };
                        acc = &acc * &pw;
                    }
                }
            }
            let free = Monomial::new(free)?;
            out += &acc.mul_monomial(&free).scale(c);
        }
        Ok(out)
    }

    /// Whether all terms have total degree `d` under the given grading.
    pub fn is_homogeneous_by(&self, grade: impl Fn(VarId) -> i64, d: i64) -> bool {
        self.terms.keys().all(|m| m.factors().iter().map(|&(v, e)| grade(v) * e).sum::<i64>() == d)
    }

    /// Splits into homogeneous pieces under the given grading.
    pub fn homogeneous_parts(&self, grade: impl Fn(VarId) -> i64) -> BTreeMap<i64, MPoly> {
        let mut parts: BTreeMap<i64, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = m.factors().iter().map(|&(v, e)| grade(v) * e).sum::<i64>();
            parts.entry(d).or_default().add_term(m.clone(), c.clone());
        }
        parts
    }

    /// Renames variables through `f`. `f` must be injective on the variables present.
    pub fn rename(&self, f: impl Fn(VarId) -> VarId) -> Result<MPoly> {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(Monomial::new(m.factors().iter().map(|&(v, e)| (f(v), e)))?, c.clone());
        }
        Ok(out)
    }

    pub fn is_negative_leading(&self) -> bool {
        self.terms.values().next().is_some_and(|c| c.is_negative())
    }
}

impl From<Rat> for MPoly {
    fn from(c: Rat) -> Self {
        MPoly::constant(c)
    }
}

impl<'a> AddAssign<&'a MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &'a MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<'a> SubAssign<&'a MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &'a MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<'a> Add<&'a MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: &'a MPoly) -> MPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<MPoly> for &MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                self.$f(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }

    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
}

impl std::iter::Sum for MPoly {
    fn sum<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        let mut acc = MPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for MPoly {
    fn product<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        iter.fold(MPoly::one(), |acc, p| &acc * &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;

    fn x(i: u32) -> MPoly {
        MPoly::var(VarId::X(i))
    }

    #[test]
    fn add_examples() {
        let t = MPoly::var(VarId::T);
        assert!((&t + &(-&t)).is_zero());
        let s = &MPoly::var(VarId::S(1)).pow(2) + &(-MPoly::var(VarId::S(2)));
        assert_eq!(s.len(), 2);
        let y = MPoly::var(VarId::Y);
        let p = &y.scale(&rat(2, 1)) + &(-MPoly::var_pow(VarId::Y, -1));
        assert_eq!(p.coeff_of(VarId::Y, 1), MPoly::int(2));
        assert_eq!(p.coeff_of(VarId::Y, -1), MPoly::int(-1));
    }

    #[test]
    fn mul_examples() {
        let s = &x(1) + &x(2);
        let sq = &s * &s;
        let expect = &(&x(1).pow(2) + &(&x(1) * &x(2)).scale(&rat(2, 1))) + &x(2).pow(2);
        assert_eq!(sq, expect);
        assert_eq!(&MPoly::var(VarId::Y) * &MPoly::var_pow(VarId::Y, -1), MPoly::one());
        let a = MPoly::var(VarId::A);
        let ainv = MPoly::var_pow(VarId::A, -1);
        let zinv = MPoly::var_pow(VarId::Z, -1);
        let lhs = &(&a - &ainv) * &zinv;
        let rhs = &(&a * &zinv) - &(&ainv * &zinv);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn polynomial_variables_reject_negative_exponents() {
        assert!(MPoly::try_var_pow(VarId::T, -1).is_err());
        assert!(MPoly::try_var_pow(VarId::Z, -3).is_ok());
    }

    #[test]
    fn coeff_of_examples() {
        let t = MPoly::var(VarId::T);
        let p = &t.pow(2) + &t.scale(&rat(3, 1));
        assert_eq!(p.coeff_of(VarId::T, 2), MPoly::one());
        let q = &(&x(1) * &t) + &(&x(2) * &t);
        assert_eq!(q.coeff_of(VarId::T, 1), &x(1) + &x(2));
        assert!(t.coeff_of(VarId::T, 5).is_zero());
    }

    #[test]
    fn substitute_examples() {
        let mut b = BTreeMap::new();
        b.insert(VarId::S(2), &x(1).pow(2) + &x(2).pow(2));
        assert_eq!(MPoly::var(VarId::S(2)).substitute(&b).unwrap(), &x(1).pow(2) + &x(2).pow(2));

        let mut b = BTreeMap::new();
        for d in 1..=2 {
            b.insert(VarId::S(d), &x(1).pow(d) + &x(2).pow(d));
        }
        let p = &MPoly::var(VarId::S(1)).pow(2) - &MPoly::var(VarId::S(2));
        assert_eq!(p.substitute(&b).unwrap(), (&x(1) * &x(2)).scale(&rat(2, 1)));

        let mut b = BTreeMap::new();
        b.insert(VarId::T, MPoly::var(VarId::T));
        assert_eq!(MPoly::var(VarId::T).substitute(&b).unwrap(), MPoly::var(VarId::T));
    }

    #[test]
    fn substitute_rejects_non_invertible_laurent_binding() {
        let mut b = BTreeMap::new();
        b.insert(VarId::Y, &MPoly::var(VarId::T) + &MPoly::one());
        let p = MPoly::var_pow(VarId::Y, -1);
        assert!(matches!(p.substitute(&b), Err(Error::LaurentViolation { .. })));
        // y -> t is a monomial, but t^-1 is still not allowed
        let mut b = BTreeMap::new();
        b.insert(VarId::Y, MPoly::var(VarId::T));
        assert!(p.substitute(&b).is_err());
        // y -> 2a is invertible
        let mut b = BTreeMap::new();
        b.insert(VarId::Y, MPoly::var(VarId::A).scale(&rat(2, 1)));
        assert_eq!(p.substitute(&b).unwrap(), MPoly::var_pow(VarId::A, -1).scale(&rat(1, 2)));
    }
}
