//! Circular cellular strings over `{0, 1, X}`.
//!
//! A string is valid of rank `M` when, reading its blocks cyclically (the last
//! block merges with the first if they share a symbol), it has more than one
//! block, exactly `M` blocks of `0`, and every `X` block sits between two
//! blocks carrying different bits.

mod moves;
mod octagon;
mod poset;

use std::fmt;
use std::str::FromStr;

pub use moves::{homotopy_bound, move_f1, move_fell, retraction_r, Bound};
pub use octagon::{classify_f, comma_fiber, Octagon};
pub use poset::{enumerate_strings, glb, join, leq, Selector, StringPoset, MAX_N};

use crate::{Error, Result};

/// `0 < 1 < X`, matching the character order used for canonical listing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Zero,
    One,
    X,
}

impl Symbol {
    pub fn is_bit(self) -> bool {
        self != Symbol::X
    }

    pub fn flip(self) -> Symbol {
        match self {
            Symbol::Zero => Symbol::One,
            Symbol::One => Symbol::Zero,
            Symbol::X => Symbol::X,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
            Symbol::X => 'X',
        }
    }

    pub fn from_char(c: char) -> Option<Symbol> {
        match c {
            '0' => Some(Symbol::Zero),
            '1' => Some(Symbol::One),
            'X' | 'x' => Some(Symbol::X),
            _ => None,
        }
    }
}

/// A maximal run of one symbol, read cyclically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Run {
    pub symbol: Symbol,
    pub start: usize,
    pub len: usize,
}

/// Cyclic runs; a run crossing the end of the string starts near the end.
/// A constant string yields one run of full length.
pub(crate) fn circular_runs(symbols: &[Symbol]) -> Vec<Run> {
    let n = symbols.len();
    if n == 0 {
        return Vec::new();
    }
    let Some(first_break) = (0..n).find(|&i| symbols[i] != symbols[(i + n - 1) % n]) else {
        return vec![Run {
            symbol: symbols[0],
            start: 0,
            len: n,
        }];
    };
    let mut runs = Vec::new();
    let mut i = 0;
    while i < n {
        let start = (first_break + i) % n;
        let symbol = symbols[start];
        let mut len = 1;
        while i + len < n && symbols[(start + len) % n] == symbol {
            len += 1;
        }
        runs.push(Run { symbol, start, len });
        i += len;
    }
    runs
}

/// The rank of `symbols` as a circular cellular string, or why it is invalid.
pub fn circular_rank(symbols: &[Symbol]) -> std::result::Result<usize, &'static str> {
    let runs = circular_runs(symbols);
    if runs.len() < 2 {
        return Err("a single block");
    }
    let j = runs.len();
    for (i, r) in runs.iter().enumerate() {
        if r.symbol == Symbol::X && runs[(i + j - 1) % j].symbol == runs[(i + 1) % j].symbol {
            return Err("an X block between equal bits");
        }
    }
    match runs.iter().filter(|r| r.symbol == Symbol::Zero).count() {
        0 => Err("no block of 0"),
        m => Ok(m),
    }
}

/// An element of `Str(N, M)`. Always valid; positions are fixed (no rotation
/// quotient).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellularString {
    symbols: Vec<Symbol>,
    rank: usize,
}

impl CellularString {
    /// Validates `symbols` and checks it has rank `rank`.
    pub fn new(symbols: Vec<Symbol>, rank: usize) -> Result<Self> {
        let s = Self::from_symbols(symbols)?;
        if s.rank != rank {
            return Err(Error::InvalidString {
                string: s.to_string(),
                reason: format!("rank {} instead of {rank}", s.rank),
            });
        }
        Ok(s)
    }

    /// Validates `symbols`, inferring the rank.
    pub fn from_symbols(symbols: Vec<Symbol>) -> Result<Self> {
        match circular_rank(&symbols) {
            Ok(rank) => Ok(CellularString { symbols, rank }),
            Err(reason) => Err(Error::InvalidString {
                string: symbols.iter().map(|s| s.as_char()).collect(),
                reason: reason.to_string(),
            }),
        }
    }

    pub(crate) fn new_unchecked(symbols: Vec<Symbol>, rank: usize) -> Self {
        debug_assert_eq!(circular_rank(&symbols), Ok(rank));
        CellularString { symbols, rank }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of `X` symbols.
    pub fn dim(&self) -> usize {
        self.symbols.iter().filter(|&&s| s == Symbol::X).count()
    }

    pub fn first(&self) -> Symbol {
        self.symbols[0]
    }

    pub fn last(&self) -> Symbol {
        self.symbols[self.symbols.len() - 1]
    }

    /// The first symbol that is a bit. Valid strings always have one.
    pub fn first_bit(&self) -> Symbol {
        *self
            .symbols
            .iter()
            .find(|s| s.is_bit())
            .expect("valid strings contain a bit")
    }

    /// Cyclic shift: position `i` of the result holds position `i + k` of `self`.
    pub fn rotate(&self, k: usize) -> Self {
        let mut symbols = self.symbols.clone();
        let n = symbols.len();
        symbols.rotate_left(k % n);
        Self::new_unchecked(symbols, self.rank)
    }

    /// Front-to-back reversal.
    pub fn reversed(&self) -> Self {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Self::new_unchecked(symbols, self.rank)
    }

    /// Exchanges 0 and 1. The rank may change, hence the `Result`.
    pub fn bit_flipped(&self) -> Result<Self> {
        Self::from_symbols(self.symbols.iter().map(|s| s.flip()).collect())
    }

    pub fn cell_shape(&self) -> CellShape {
        cell_shape(self)
    }
}

impl fmt::Display for CellularString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols
            .iter()
            .try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl FromStr for CellularString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|c| {
                Symbol::from_char(c).ok_or_else(|| Error::InvalidString {
                    string: s.to_string(),
                    reason: format!("unexpected character {c:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_symbols(symbols)
    }
}

/// Lengths of the X blocks in linear reading order.
///
/// `wraps` is set when the string both starts and ends with `X`, in which case
/// the first and last entries of `blocks` form a single cyclic block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellShape {
    pub blocks: Vec<usize>,
    pub wraps: bool,
}

impl CellShape {
    /// Simplex dimensions of the cell after merging a wrapped block.
    pub fn merged(&self) -> Vec<usize> {
        let mut b = self.blocks.clone();
        if self.wraps && b.len() > 1 {
            let last = b.pop().expect("len > 1");
            b[0] += last;
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().sum()
    }
}

pub fn cell_shape(s: &CellularString) -> CellShape {
    let mut blocks = Vec::new();
    let mut run = 0;
    for &sym in s.symbols() {
        if sym == Symbol::X {
            run += 1;
        } else if run > 0 {
            blocks.push(run);
            run = 0;
        }
    }
    if run > 0 {
        blocks.push(run);
    }
    CellShape {
        blocks,
        wraps: s.first() == Symbol::X && s.last() == Symbol::X,
    }
}
