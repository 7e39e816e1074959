use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use super::ChordDiagram;
use crate::polycore::Rat;

/// Formal linear combination of canonical chord diagrams.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiagramSum {
    terms: BTreeMap<ChordDiagram, Rat>,
}

impl DiagramSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(d: &ChordDiagram) -> Self {
        let mut s = Self::zero();
        s.add(d, Rat::one());
        s
    }

    /// Adds `c * d`, canonicalizing `d`.
    pub fn add(&mut self, d: &ChordDiagram, c: Rat) {
        if c.is_zero() {
            return;
        }
        let key = d.canonicalize();
        let slot = self.terms.entry(key.clone()).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ChordDiagram, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Applies a linear functional given on diagrams.
    pub fn evaluate<T, F>(&self, mut w: F) -> T
    where
        T: Zero + std::ops::Mul<Rat, Output = T>,
        F: FnMut(&ChordDiagram) -> T,
    {
        self.terms.iter().fold(T::zero(), |acc, (d, c)| acc + w(d) * c.clone())
    }

    /// Coefficient of the bare circle.
    pub fn counit(&self) -> Rat {
        self.terms.get(&ChordDiagram::circle()).cloned().unwrap_or_else(Rat::zero)
    }
}

impl fmt::Display for DiagramSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "[{d}]")?;
            } else {
                write!(f, "{mag}*[{d}]")?;
            }
        }
        Ok(())
    }
}
