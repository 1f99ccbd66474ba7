//! The retraction `R` and the moves `F₁`, `F_ℓ` on sub-posets of `Str`.

use super::{circular_rank, glb, join, CellularString, Selector, Symbol};
use crate::{Error, Result};

fn outside(op: &'static str, s: &CellularString) -> Error {
    Error::OutsideDomain {
        op,
        string: s.to_string(),
    }
}

/// `R` on `closure00`: identity on `Str00`, `0σX ↦ 0σ0`, `Xσ0 ↦ 0σ0`.
/// On `closure11` the same with the bits exchanged.
pub fn retraction_r(s: &CellularString) -> Result<CellularString> {
    let bit = if Selector::Closure00.contains(s) {
        Symbol::Zero
    } else if Selector::Closure11.contains(s) {
        Symbol::One
    } else {
        return Err(outside("R", s));
    };
    let mut symbols = s.symbols().to_vec();
    let n = symbols.len();
    symbols[0] = bit;
    symbols[n - 1] = bit;
    CellularString::new(symbols, s.rank())
}

/// One application of `F₁` to a raw symbol string starting with `0` whose
/// second symbol is a bit. `None` if no rule applies (the string is `0101…0`).
///
/// With `p` the leftmost `X` (or the length) and `q` the first repeated pair
/// `s[q] == s[q+1]` lying before `p`:
/// * no such pair: swap `s[p-1]` and `s[p]`;
/// * `q == 0`, leading block `0^k`: set `s[k-1] = X`;
/// * `q >= 1`: set `s[q] = s[q-1]`, i.e. `σ₁abbσ₂ ↦ σ₁aabσ₂`.
fn f1_step(symbols: &mut [Symbol]) -> Option<()> {
    let n = symbols.len();
    let p = symbols.iter().position(|&c| c == Symbol::X).unwrap_or(n);
    let q = (0..p.saturating_sub(1)).find(|&i| symbols[i] == symbols[i + 1]);
    match q {
        None if p == n => return None,
        None => symbols.swap(p - 1, p),
        Some(0) => {
            let k = symbols.iter().take_while(|&&c| c == Symbol::Zero).count();
            symbols[k - 1] = Symbol::X;
        }
        Some(q) => symbols[q] = symbols[q - 1],
    }
    Some(())
}

/// `F₁` on `Str00` or `Str0X`, for `N > 2M + 1`. Fixes strings whose second
/// symbol is `X`.
pub fn move_f1(s: &CellularString) -> Result<CellularString> {
    let in_domain = Selector::Str00.contains(s) || Selector::Str0X.contains(s);
    if !in_domain || s.len() <= 2 * s.rank() + 1 {
        return Err(outside("F1", s));
    }
    if s.symbols()[1] == Symbol::X {
        return Ok(s.clone());
    }
    let mut symbols = s.symbols().to_vec();
    f1_step(&mut symbols).ok_or_else(|| outside("F1", s))?;
    CellularString::new(symbols, s.rank())
}

/// `F_ℓ` on `level(ℓ)`: keeps the prefix `0X^{ℓ-1}` and moves the rest by `F₁`.
///
/// The tail is handled by compressing `0X^{ℓ-1}σ` to `0σ`; when `F₁` turns
/// that into `00…` a second step is taken so the prefix can be re-expanded.
/// The last non-empty level (`ℓ = N - 2M`) is a single point and is fixed.
pub fn move_fell(s: &CellularString, l: usize) -> Result<CellularString> {
    if l == 0 || !Selector::Level(l).contains(s) {
        return Err(outside("F_l", s));
    }
    if l == 1 {
        return move_f1(s);
    }
    let symbols = s.symbols();
    if symbols[l] == Symbol::X {
        return Ok(s.clone());
    }
    let mut tail = Vec::with_capacity(symbols.len() - l + 1);
    tail.push(Symbol::Zero);
    tail.extend_from_slice(&symbols[l..]);
    if tail.len() <= 2 * s.rank() + 1 {
        return Ok(s.clone());
    }
    f1_step(&mut tail).ok_or_else(|| outside("F_l", s))?;
    if tail[1] == Symbol::Zero {
        f1_step(&mut tail).ok_or_else(|| outside("F_l", s))?;
    }
    let mut out = vec![Symbol::Zero];
    out.extend(std::iter::repeat(Symbol::X).take(l - 1));
    out.extend_from_slice(&tail[1..]);
    debug_assert_eq!(circular_rank(&out), Ok(s.rank()));
    CellularString::new(out, s.rank())
}

/// The element `h(s)` comparable to both `s` and `F₁(s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    /// `glb(s, F₁(s))`, below both.
    Meet(CellularString),
    /// No meet exists (the move rewrote a bit); the join is above both.
    Join(CellularString),
}

impl Bound {
    pub fn string(&self) -> &CellularString {
        match self {
            Bound::Meet(s) | Bound::Join(s) => s,
        }
    }
}

/// The meet of `s` and `F₁(s)` when it exists, otherwise their join.
pub fn homotopy_bound(s: &CellularString) -> Result<Bound> {
    let f = move_f1(s)?;
    let pair = [s.clone(), f];
    match glb(&pair) {
        Ok(m) => Ok(Bound::Meet(m)),
        Err(_) => join(&pair).map(Bound::Join),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(s: &str) -> CellularString {
        s.parse().unwrap()
    }

    #[test]
    fn r_rules() {
        assert_eq!(retraction_r(&cs("0X10")).unwrap(), cs("0X10"));
        assert_eq!(retraction_r(&cs("01X")).unwrap(), cs("010"));
        assert_eq!(retraction_r(&cs("X10")).unwrap(), cs("010"));
        assert_eq!(retraction_r(&cs("10X")).unwrap(), cs("101"));
        assert!(retraction_r(&cs("011")).is_err());
    }

    #[test]
    fn f1_cases() {
        // Fixed.
        assert_eq!(move_f1(&cs("0X10")).unwrap(), cs("0X10"));
        // Case (i): X moves left past the preceding bit.
        assert_eq!(move_f1(&cs("01X0")).unwrap(), cs("0X10"));
        // Case (ii): σ₁abbσ₂ with σ₁a = 01.
        assert_eq!(move_f1(&cs("011010")).unwrap(), cs("001010"));
        // Leading 00: the last 0 of the block becomes X.
        assert_eq!(move_f1(&cs("001010")).unwrap(), cs("0X1010"));
        // N = 2M + 1 is outside the domain.
        assert!(move_f1(&cs("01010")).is_err());
    }

    #[test]
    fn fell_keeps_prefix() {
        let s = cs("0X1100");
        let t = move_fell(&s, 2).unwrap();
        assert!(t.to_string().starts_with("0X"));
        assert_eq!(move_fell(&cs("0XX100"), 2).unwrap(), cs("0XX100"));
    }

    #[test]
    fn bound_kinds() {
        assert!(matches!(
            homotopy_bound(&cs("01X0")).unwrap(),
            Bound::Meet(_)
        ));
        assert!(matches!(
            homotopy_bound(&cs("011010")).unwrap(),
            Bound::Join(_)
        ));
    }
}
