//! Characters of the Lie superalgebras G(3) and F(4) on the subalgebra of Λ
//! generated by `t = x1/2` and the odd `x(n)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::One;

use crate::error::{Error, Result};
use crate::polycore::{int, MPoly, Rat, VarId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Superalgebra {
    G3,
    F4,
}

impl FromStr for Superalgebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "G3" => Ok(Superalgebra::G3),
            "F4" => Ok(Superalgebra::F4),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown superalgebra {s:?}; expected G3 or F4") }),
        }
    }
}

impl fmt::Display for Superalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Superalgebra::G3 => "G3",
            Superalgebra::F4 => "F4",
        })
    }
}

fn check_odd(n: u32) -> Result<()> {
    if n.is_multiple_of(2) {
        Err(Error::EvenIndex(n))
    } else {
        Ok(())
    }
}

fn rat_pow(base: Rat, e: u32) -> Rat {
    (0..e).fold(Rat::one(), |acc, _| acc * &base)
}

/// Coefficient of `t^n` in the G(3) character of `x(n)`.
pub fn chi_g3_coeff(n: u32) -> Result<Rat> {
    check_odd(n)?;
    let sign = if n % 2 == 1 { 5 } else { -5 };
    Ok((int(3) + rat_pow(int(2), n + 1) + int(sign)) / int(6))
}

/// Coefficient of `t^n` in the F(4) character of `x(n)`.
pub fn chi_f4_coeff(n: u32) -> Result<Rat> {
    check_odd(n)?;
    let ratio = Rat::new((-2).into(), 3.into());
    Ok((int(16) + rat_pow(int(2), n + 1) + int(27) * rat_pow(ratio, n + 1)) / int(16))
}

pub fn chi_coeff(n: u32, which: Superalgebra) -> Result<Rat> {
    match which {
        Superalgebra::G3 => chi_g3_coeff(n),
        Superalgebra::F4 => chi_f4_coeff(n),
    }
}

/// Image of `e` under the graded homomorphism fixing `t` and sending `x(n)` to
/// its character coefficient times `t^n`.
pub fn chi_eval(e: &MPoly, which: Superalgebra) -> Result<MPoly> {
    let mut bindings = BTreeMap::new();
    for v in e.variables() {
        match v {
            VarId::T => {}
            VarId::X(n) => {
                let c = chi_coeff(n, which)?;
                bindings.insert(v, MPoly::var_pow(VarId::T, n as i64).scale(&c));
            }
            other => return Err(Error::UnboundVariable(other.to_string())),
        }
    }
    let out = e.substitute(&bindings)?;
    debug_assert!(out.variables().iter().all(|&v| v == VarId::T));
    Ok(out)
}

/// Grading with `deg t = 1` and `deg x(n) = n`.
pub fn lambda_grade(v: VarId) -> i64 {
    match v {
        VarId::T => 1,
        VarId::X(n) => n as i64,
        _ => 0,
    }
}

/// The two vanishing combinations, `x3 - 4t^3` for G(3) and `3x3 - 7t^3` for F(4).
pub fn vanishing_identities() -> [(Superalgebra, MPoly); 2] {
    [(Superalgebra::G3, "x3 - 4*t^3".parse().expect("valid")), (Superalgebra::F4, "3*x3 - 7*t^3".parse().expect("valid"))]
}
