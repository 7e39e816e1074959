use std::fmt;

/// A named variable. The derived ordering is the canonical variable order
/// `t < y < a < z < h < x1 < x2 < ... < s1 < ... < G1 < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    T,
    Y,
    A,
    Z,
    H,
    X(u32),
    S(u32),
    G(u32),
}

impl VarId {
    /// Whether negative exponents are permitted.
    pub fn is_laurent(self) -> bool {
        matches!(self, VarId::Y | VarId::A | VarId::Z)
    }

    pub(crate) fn from_name(name: &str) -> Option<VarId> {
        match name {
            "t" => return Some(VarId::T),
            "y" => return Some(VarId::Y),
            "a" => return Some(VarId::A),
            "z" => return Some(VarId::Z),
            "h" => return Some(VarId::H),
            _ => {}
        }
        let (family, digits) = name.split_at(1);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
            return None;
        }
        let index: u32 = digits.parse().ok()?;
        match family {
            "x" => Some(VarId::X(index)),
            "s" => Some(VarId::S(index)),
            "G" => Some(VarId::G(index)),
            _ => None,
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::T => f.write_str("t"),
            VarId::Y => f.write_str("y"),
            VarId::A => f.write_str("a"),
            VarId::Z => f.write_str("z"),
            VarId::H => f.write_str("h"),
            VarId::X(i) => write!(f, "x{i}"),
            VarId::S(i) => write!(f, "s{i}"),
            VarId::G(i) => write!(f, "G{i}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        let mut v = vec![VarId::G(1), VarId::S(2), VarId::X(10), VarId::X(2), VarId::H, VarId::Z, VarId::A, VarId::Y, VarId::T];
        v.sort();
        assert_eq!(
            v,
            vec![VarId::T, VarId::Y, VarId::A, VarId::Z, VarId::H, VarId::X(2), VarId::X(10), VarId::S(2), VarId::G(1)]
        );
    }

    #[test]
    fn names_round_trip() {
        for v in [VarId::T, VarId::Y, VarId::A, VarId::Z, VarId::H, VarId::X(3), VarId::S(12), VarId::G(1)] {
            assert_eq!(VarId::from_name(&v.to_string()), Some(v));
        }
        assert_eq!(VarId::from_name("x0"), None);
        assert_eq!(VarId::from_name("q"), None);
        assert_eq!(VarId::from_name("x"), None);
    }
}
