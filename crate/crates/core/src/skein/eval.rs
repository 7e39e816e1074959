use std::collections::HashMap;

use super::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::polycore::{MPoly, VarId};

fn y_pow(e: i64) -> MPoly {
    MPoly::var_pow(VarId::Y, e)
}

fn a_pow(e: i64) -> MPoly {
    MPoly::var_pow(VarId::A, e)
}

/// `(a - a^-1) / z`, the value of a two-component unlink.
pub fn homfly_loop_factor() -> MPoly {
    &(&a_pow(1) - &a_pow(-1)) * &MPoly::var_pow(VarId::Z, -1)
}

/// `(a - a^-1) / z + 1`.
pub fn kauffman_loop_factor() -> MPoly {
    &homfly_loop_factor() + &MPoly::one()
}

/// Skein evaluator with one memo table per invariant, keyed by canonical
/// diagram text.
#[derive(Default)]
pub struct SkeinEvaluator {
    upsilon: HashMap<String, MPoly>,
    homfly: HashMap<String, MPoly>,
    kauffman: HashMap<String, MPoly>,
}

impl SkeinEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Υ of a knot diagram, a Laurent polynomial in `y`.
    pub fn upsilon(&mut self, k: &LinkDiagram) -> Result<MPoly> {
        let c = k.component_count();
        if c != 1 {
            return Err(Error::NotAKnot(c));
        }
        let k = k.canonical();
        let key = k.key();
        if let Some(v) = self.upsilon.get(&key) {
            return Ok(v.clone());
        }
        let value = match k.first_ascending_crossing() {
            None => y_pow(k.writhe()),
            Some(i) => {
                let eps = k.crossings()[i].sign as i64;
                let smooth = k.smooth_oriented(i)?;
                let c1 = self.upsilon(&smooth.extract_component(0)?)?;
                let c2 = self.upsilon(&smooth.extract_component(1)?)?;
                let step = &(&y_pow(1) - &y_pow(-1)) * &(&c1 * &c2);
                &self.upsilon(&k.switch_crossing(i)?)? + &(&MPoly::int(eps) * &step)
            }
        };
        self.upsilon.insert(key, value.clone());
        Ok(value)
    }

    /// Framed Homfly polynomial in `a`, `z`.
    pub fn homfly(&mut self, k: &LinkDiagram) -> Result<MPoly> {
        let value = self.homfly_rec(&k.canonical())?;
        if k.component_count() == 1 && value.min_degree_in(VarId::Z).is_some_and(|m| m < 0) {
            return Err(Error::Inconsistent(format!("knot Homfly value has negative z powers: {value}")));
        }
        Ok(value)
    }

    fn homfly_rec(&mut self, k: &LinkDiagram) -> Result<MPoly> {
        let key = k.key();
        if let Some(v) = self.homfly.get(&key) {
            return Ok(v.clone());
        }
        let value = match k.first_ascending_crossing() {
            None => descending_value(k, &homfly_loop_factor()),
            Some(i) => {
                let eps = k.crossings()[i].sign as i64;
                let rest = self.homfly_rec(&k.switch_crossing(i)?)?;
                let smooth = self.homfly_rec(&k.smooth_oriented(i)?)?;
                &rest + &(&MPoly::int(eps) * &(&MPoly::var(VarId::Z) * &smooth))
            }
        };
        self.homfly.insert(key, value.clone());
        Ok(value)
    }

    /// Framed Kauffman polynomial (Dubrovnik normalization) in `a`, `z`.
    pub fn kauffman(&mut self, k: &LinkDiagram) -> Result<MPoly> {
        self.kauffman_rec(&k.canonical())
    }

    fn kauffman_rec(&mut self, k: &LinkDiagram) -> Result<MPoly> {
        let key = k.key();
        if let Some(v) = self.kauffman.get(&key) {
            return Ok(v.clone());
        }
        let value = match k.first_ascending_crossing() {
            None => descending_value(k, &kauffman_loop_factor()),
            Some(i) => {
                let eps = k.crossings()[i].sign as i64;
                let rest = self.kauffman_rec(&k.switch_crossing(i)?)?;
                let parallel = self.kauffman_rec(&k.smooth_oriented(i)?)?;
                let turned = self.kauffman_rec(&k.smooth_unoriented(i)?)?;
                &rest + &(&MPoly::int(eps) * &(&MPoly::var(VarId::Z) * &(&parallel - &turned)))
            }
        };
        self.kauffman.insert(key, value.clone());
        Ok(value)
    }
}

/// A descending diagram is a stack of framed unknots.
fn descending_value(k: &LinkDiagram, loop_factor: &MPoly) -> MPoly {
    let ws = k.self_writhes();
    let framing = a_pow(ws.iter().sum());
    &loop_factor.pow(ws.len().saturating_sub(1) as u32) * &framing
}

pub fn upsilon(k: &LinkDiagram) -> Result<MPoly> {
    SkeinEvaluator::new().upsilon(k)
}

pub fn homfly(k: &LinkDiagram) -> Result<MPoly> {
    SkeinEvaluator::new().homfly(k)
}

pub fn kauffman(k: &LinkDiagram) -> Result<MPoly> {
    SkeinEvaluator::new().kauffman(k)
}
