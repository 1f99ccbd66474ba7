use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::{circular_rank, CellularString, Symbol};
use crate::homology::FinitePoset;
use crate::{Error, Result};

/// Largest string length [`enumerate_strings`] accepts.
pub const MAX_N: usize = 14;

/// `s' <= s` iff `s` is `s'` with some bits replaced by `X`.
pub fn leq(lower: &CellularString, upper: &CellularString) -> bool {
    lower.len() == upper.len()
        && lower
            .symbols()
            .iter()
            .zip(upper.symbols())
            .all(|(a, b)| a == b || *b == Symbol::X)
}

/// Greatest lower bound: the positionwise meet, if it is a valid string of the
/// common rank.
pub fn glb(strings: &[CellularString]) -> Result<CellularString> {
    let (first, rest) = strings.split_first().ok_or(Error::NoLowerBound)?;
    let mut symbols = first.symbols().to_vec();
    for s in rest {
        if s.len() != symbols.len() || s.rank() != first.rank() {
            return Err(Error::NoLowerBound);
        }
        for (acc, &b) in symbols.iter_mut().zip(s.symbols()) {
            match (*acc, b) {
                (_, Symbol::X) => {}
                (Symbol::X, bit) => *acc = bit,
                (a, bit) if a == bit => {}
                _ => return Err(Error::NoLowerBound),
            }
        }
    }
    match circular_rank(&symbols) {
        Ok(r) if r == first.rank() => Ok(CellularString::new_unchecked(symbols, r)),
        _ => Err(Error::NoLowerBound),
    }
}

/// Least upper bound: `X` wherever the inputs disagree, if that is a valid
/// string of the common rank.
pub fn join(strings: &[CellularString]) -> Result<CellularString> {
    let (first, rest) = strings
        .split_first()
        .ok_or_else(|| Error::InvalidParameters("join of no strings".into()))?;
    let mut symbols = first.symbols().to_vec();
    for s in rest {
        if s.len() != symbols.len() || s.rank() != first.rank() {
            return Err(Error::InvalidParameters(
                "join of mismatched strings".into(),
            ));
        }
        for (acc, &b) in symbols.iter_mut().zip(s.symbols()) {
            if *acc != b {
                *acc = Symbol::X;
            }
        }
    }
    match circular_rank(&symbols) {
        Ok(r) if r == first.rank() => Ok(CellularString::new_unchecked(symbols, r)),
        _ => Err(Error::InvalidParameters(format!(
            "no upper bound: {} is not a cellular string of rank {}",
            symbols.iter().map(|s| s.as_char()).collect::<String>(),
            first.rank()
        ))),
    }
}

/// Named sub-posets of `Str(N, M)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Selector {
    /// First bit 0, and not both end symbols 0.
    Str0,
    /// First bit 1, and not both end symbols 1.
    Str1,
    Str00,
    Str11,
    Str0X,
    StrX0,
    Str1X,
    StrX1,
    /// `Str00 ∪ Str0X ∪ StrX0`.
    Closure00,
    /// `Str11 ∪ Str1X ∪ StrX1`.
    Closure11,
    /// Strings of `Str00` starting with `0` followed by `ℓ - 1` symbols `X`.
    Level(usize),
}

impl Selector {
    /// The ten sub-posets expected to be contractible.
    pub const CONTRACTIBLE: [Selector; 10] = [
        Selector::Str00,
        Selector::Str11,
        Selector::Closure00,
        Selector::Closure11,
        Selector::Str0X,
        Selector::StrX0,
        Selector::Str1X,
        Selector::StrX1,
        Selector::Str0,
        Selector::Str1,
    ];

    pub fn contains(self, s: &CellularString) -> bool {
        use Symbol::{One, Zero, X};
        let ends = (s.first(), s.last());
        match self {
            Selector::Str0 => s.first_bit() == Zero && ends != (Zero, Zero),
            Selector::Str1 => s.first_bit() == One && ends != (One, One),
            Selector::Str00 => ends == (Zero, Zero),
            Selector::Str11 => ends == (One, One),
            Selector::Str0X => ends == (Zero, X),
            Selector::StrX0 => ends == (X, Zero),
            Selector::Str1X => ends == (One, X),
            Selector::StrX1 => ends == (X, One),
            Selector::Closure00 => matches!(ends, (Zero, Zero) | (Zero, X) | (X, Zero)),
            Selector::Closure11 => matches!(ends, (One, One) | (One, X) | (X, One)),
            Selector::Level(l) => {
                l >= 1
                    && ends == (Zero, Zero)
                    && s.len() > l
                    && s.symbols()[1..l].iter().all(|&c| c == X)
            }
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Str0 => f.write_str("Str0"),
            Selector::Str1 => f.write_str("Str1"),
            Selector::Str00 => f.write_str("Str00"),
            Selector::Str11 => f.write_str("Str11"),
            Selector::Str0X => f.write_str("Str0X"),
            Selector::StrX0 => f.write_str("StrX0"),
            Selector::Str1X => f.write_str("Str1X"),
            Selector::StrX1 => f.write_str("StrX1"),
            Selector::Closure00 => f.write_str("closure00"),
            Selector::Closure11 => f.write_str("closure11"),
            Selector::Level(l) => write!(f, "level{l}"),
        }
    }
}

impl FromStr for Selector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let sel = match s {
            "Str0" => Selector::Str0,
            "Str1" => Selector::Str1,
            "Str00" => Selector::Str00,
            "Str11" => Selector::Str11,
            "Str0X" => Selector::Str0X,
            "StrX0" => Selector::StrX0,
            "Str1X" => Selector::Str1X,
            "StrX1" => Selector::StrX1,
            "closure00" => Selector::Closure00,
            "closure11" => Selector::Closure11,
            other => {
                let digits = other
                    .strip_prefix("level")
                    .map(|d| d.trim_start_matches('(').trim_end_matches(')'));
                match digits.and_then(|d| d.parse::<usize>().ok()) {
                    Some(l) if l >= 1 => Selector::Level(l),
                    _ => {
                        return Err(Error::InvalidParameters(format!(
                            "unknown sub-poset selector {other:?}"
                        )))
                    }
                }
            }
        };
        Ok(sel)
    }
}

/// A full sub-poset of `Str(N, M)`: its elements in lexicographic order with
/// the induced order.
#[derive(Debug, Clone)]
pub struct StringPoset {
    n: usize,
    m: usize,
    elements: Vec<CellularString>,
    index: HashMap<CellularString, usize>,
}

/// All of `Str(N, M)`. Requires `1 <= M`, `2M < N <= MAX_N`.
pub fn enumerate_strings(n: usize, m: usize) -> Result<StringPoset> {
    if m == 0 || 2 * m >= n {
        return Err(Error::InvalidParameters(format!(
            "Str(N, M) needs 1 <= M and 2M < N, got N = {n}, M = {m}"
        )));
    }
    if n > MAX_N {
        return Err(Error::InvalidParameters(format!(
            "N = {n} exceeds the enumeration bound {MAX_N}"
        )));
    }
    const ALPHABET: [Symbol; 3] = [Symbol::Zero, Symbol::One, Symbol::X];
    let mut digits = vec![0usize; n];
    let mut symbols = vec![Symbol::Zero; n];
    let mut elements = Vec::new();
    // Odometer with the last position fastest gives lexicographic order.
    loop {
        if circular_rank(&symbols) == Ok(m) {
            elements.push(CellularString::new_unchecked(symbols.clone(), m));
        }
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(StringPoset::from_sorted(n, m, elements));
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < 3 {
                symbols[i] = ALPHABET[digits[i]];
                break;
            }
            digits[i] = 0;
            symbols[i] = Symbol::Zero;
        }
    }
}

impl StringPoset {
    fn from_sorted(n: usize, m: usize, elements: Vec<CellularString>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        StringPoset {
            n,
            m,
            elements,
            index,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[CellularString] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &CellularString {
        &self.elements[i]
    }

    pub fn index_of(&self, s: &CellularString) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn contains(&self, s: &CellularString) -> bool {
        self.index.contains_key(s)
    }

    /// The full sub-poset on elements satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(&CellularString) -> bool) -> StringPoset {
        let elements = self.elements.iter().filter(|s| keep(s)).cloned().collect();
        StringPoset::from_sorted(self.n, self.m, elements)
    }

    pub fn subposet(&self, selector: Selector) -> StringPoset {
        self.filter(|s| selector.contains(s))
    }

    /// Elements above `s` obtained by turning one bit into `X`, as indices.
    pub fn upper_covers_of(&self, s: &CellularString) -> Vec<usize> {
        let mut out = Vec::new();
        let mut symbols = s.symbols().to_vec();
        for i in 0..symbols.len() {
            if symbols[i].is_bit() {
                let bit = symbols[i];
                symbols[i] = Symbol::X;
                if circular_rank(&symbols) == Ok(self.m) {
                    let t = CellularString::new_unchecked(symbols.clone(), self.m);
                    if let Some(j) = self.index_of(&t) {
                        out.push(j);
                    }
                }
                symbols[i] = bit;
            }
        }
        out
    }

    /// Covering pairs `(i, j)`, element `i` below element `j`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.elements
            .iter()
            .enumerate()
            .flat_map(|(i, s)| self.upper_covers_of(s).into_iter().map(move |j| (i, j)))
            .collect()
    }

    /// Maximal elements, as indices.
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.upper_covers_of(&self.elements[i]).is_empty())
            .collect()
    }

    /// The order as a [`FinitePoset`], built from the covers. Labels are the
    /// strings themselves.
    pub fn to_finite_poset(&self) -> FinitePoset {
        let labels = self.elements.iter().map(ToString::to_string).collect();
        FinitePoset::from_covers(labels, &self.covers())
            .expect("covers of a string poset are acyclic")
    }
}
