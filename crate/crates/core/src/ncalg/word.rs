use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Tensor factor a letter lives in. Single-copy algebras only use `Left`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// A generator `a_{row,col}`, 1-based. Field order gives the letter order:
/// side first, then `(row, col)` lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub side: Side,
    pub row: u8,
    pub col: u8,
}

impl Letter {
    pub fn new(row: usize, col: usize) -> Letter {
        Letter {
            side: Side::Left,
            row: row as u8,
            col: col as u8,
        }
    }

    pub fn left(row: usize, col: usize) -> Letter {
        Letter::new(row, col)
    }

    pub fn right(row: usize, col: usize) -> Letter {
        Letter {
            side: Side::Right,
            row: row as u8,
            col: col as u8,
        }
    }

    pub fn row(&self) -> usize {
        self.row as usize
    }

    pub fn col(&self) -> usize {
        self.col as usize
    }

    pub fn on(self, side: Side) -> Letter {
        Letter { side, ..self }
    }

    /// `[copy, row, col]` with `copy` 0 for left and 1 for right.
    pub fn triple(&self) -> [u8; 3] {
        [self.side as u8, self.row, self.col]
    }
}

/// Sequence of letters. Ordered by length, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub(crate) SmallVec<[Letter; 8]>);

impl Word {
    pub fn empty() -> Word {
        Word(SmallVec::new())
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        Word(letters.into_iter().collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Non-decreasing in the letter order, which puts every left letter
    /// before every right letter.
    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub(crate) fn prepend(x: Letter, rest: &[Letter]) -> Word {
        let mut v = SmallVec::with_capacity(rest.len() + 1);
        v.push(x);
        v.extend_from_slice(rest);
        Word(v)
    }

    pub fn triples(&self) -> Vec<[u8; 3]> {
        self.0.iter().map(Letter::triple).collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word::from_letters(iter)
    }
}

/// Render a letter as `a12`, `L12`/`R12` in the tensor square, or `a[10,3]`
/// once indices need more than one digit.
pub(crate) fn render_letter(
    f: &mut impl fmt::Write,
    l: &Letter,
    symbol: char,
    tensor: bool,
    wide: bool,
) -> fmt::Result {
    let sym = if tensor {
        match l.side {
            Side::Left => 'L',
            Side::Right => 'R',
        }
    } else {
        symbol
    };
    if wide {
        write!(f, "{}[{},{}]", sym, l.row, l.col)
    } else {
        write!(f, "{}{}{}", sym, l.row, l.col)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letter_order_is_side_then_row_col() {
        assert!(Letter::left(2, 2) < Letter::right(1, 1));
        assert!(Letter::left(1, 2) < Letter::left(2, 1));
        assert!(Letter::left(1, 1) < Letter::left(1, 2));
    }

    #[test]
    fn word_order_is_length_then_lex() {
        let short = Word::from_letters([Letter::new(2, 2)]);
        let long = Word::from_letters([Letter::new(1, 1), Letter::new(1, 1)]);
        assert!(short < long);
        let a = Word::from_letters([Letter::new(1, 1), Letter::new(2, 2)]);
        let b = Word::from_letters([Letter::new(1, 2), Letter::new(2, 1)]);
        assert!(a < b);
    }

    #[test]
    fn sortedness() {
        assert!(
            Word::from_letters([Letter::new(1, 1), Letter::new(1, 1), Letter::right(1, 1)])
                .is_sorted()
        );
        assert!(!Word::from_letters([Letter::right(1, 1), Letter::left(2, 2)]).is_sorted());
    }
}
