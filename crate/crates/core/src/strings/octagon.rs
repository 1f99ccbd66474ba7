use std::fmt;
use std::str::FromStr;

use super::{CellularString, StringPoset, Symbol};
use crate::Error;

/// The 8-element poset whose order complex is an octagon. Corners are minimal,
/// sides maximal:
///
/// ```text
/// 0X ─ 0 ─ X1
/// │         │
/// 00        11
/// │         │
/// X0 ─ 1 ─ 1X
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Octagon {
    ZeroX,
    X1,
    X0,
    OneX,
    Zero,
    ZeroZero,
    One,
    OneOne,
}

impl Octagon {
    pub const ALL: [Octagon; 8] = [
        Octagon::ZeroX,
        Octagon::X1,
        Octagon::X0,
        Octagon::OneX,
        Octagon::Zero,
        Octagon::ZeroZero,
        Octagon::One,
        Octagon::OneOne,
    ];

    /// `(lower, upper)` pairs; the order has no other strict relations.
    pub const COVERS: [(Octagon, Octagon); 8] = [
        (Octagon::ZeroX, Octagon::Zero),
        (Octagon::ZeroX, Octagon::ZeroZero),
        (Octagon::X1, Octagon::Zero),
        (Octagon::X1, Octagon::OneOne),
        (Octagon::X0, Octagon::ZeroZero),
        (Octagon::X0, Octagon::One),
        (Octagon::OneX, Octagon::One),
        (Octagon::OneX, Octagon::OneOne),
    ];

    pub fn is_minimal(self) -> bool {
        matches!(
            self,
            Octagon::ZeroX | Octagon::X1 | Octagon::X0 | Octagon::OneX
        )
    }

    pub fn leq(self, other: Octagon) -> bool {
        self == other || Self::COVERS.contains(&(self, other))
    }

    pub fn label(self) -> &'static str {
        match self {
            Octagon::ZeroX => "0X",
            Octagon::X1 => "X1",
            Octagon::X0 => "X0",
            Octagon::OneX => "1X",
            Octagon::Zero => "0",
            Octagon::ZeroZero => "00",
            Octagon::One => "1",
            Octagon::OneOne => "11",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Octagon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Octagon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Octagon::ALL
            .into_iter()
            .find(|q| q.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameters(format!("unknown octagon vertex {s:?}")))
    }
}

/// The class of `s` by its end symbols, falling back to its first bit.
pub fn classify_f(s: &CellularString) -> Octagon {
    use Symbol::{One, Zero, X};
    match (s.first(), s.last()) {
        (Zero, X) => Octagon::ZeroX,
        (X, One) => Octagon::X1,
        (X, Zero) => Octagon::X0,
        (One, X) => Octagon::OneX,
        (Zero, Zero) => Octagon::ZeroZero,
        (One, One) => Octagon::OneOne,
        _ if s.first_bit() == Zero => Octagon::Zero,
        _ => Octagon::One,
    }
}

/// `{s : f(s) <= q}`.
pub fn comma_fiber(q: Octagon, poset: &StringPoset) -> StringPoset {
    poset.filter(|s| classify_f(s).leq(q))
}
