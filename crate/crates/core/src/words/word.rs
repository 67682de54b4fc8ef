//! Words over the two-letter alphabet {x, y}.

use std::fmt;

/// A word of length ≤ 64. Letter `i` (0-based, left to right) is stored at
/// bit `len-1-i`, with x = 0 and y = 1, so for equal lengths the integer
/// order is the lexicographic order with x < y. The derived `Ord` is
/// length-then-lexicographic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: u8,
    bits: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    X,
    Y,
}

impl Word {
    pub const EMPTY: Word = Word { len: 0, bits: 0 };
    pub const X: Word = Word { len: 1, bits: 0 };
    pub const Y: Word = Word { len: 1, bits: 1 };

    pub fn from_bits(len: usize, bits: u64) -> Word {
        assert!(len <= 64, "word too long");
        debug_assert!(len == 64 || bits >> len == 0);
        Word { len: len as u8, bits }
    }

    pub fn from_letters(letters: &[Letter]) -> Word {
        let mut w = Word::EMPTY;
        for &l in letters {
            w = w.push_letter(l);
        }
        w
    }

    /// Parses a string over {x, y}; `None` on any other character.
    pub fn parse(s: &str) -> Option<Word> {
        if s.len() > 64 {
            return None;
        }
        let mut w = Word::EMPTY;
        for c in s.chars() {
            w = w.push_letter(match c {
                'x' => Letter::X,
                'y' => Letter::Y,
                _ => return None,
            });
        }
        Some(w)
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    /// Number of y's.
    pub fn depth(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn weight(self) -> usize {
        self.len as usize
    }

    pub fn letter(self, i: usize) -> Letter {
        assert!(i < self.len());
        if (self.bits >> (self.len() - 1 - i)) & 1 == 1 {
            Letter::Y
        } else {
            Letter::X
        }
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (0..self.len()).map(move |i| self.letter(i))
    }

    pub fn first(self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.letter(0))
    }

    pub fn last(self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.letter(self.len() - 1))
    }

    fn mask(len: usize) -> u64 {
        if len == 64 {
            u64::MAX
        } else {
            (1u64 << len) - 1
        }
    }

    pub fn push_letter(self, l: Letter) -> Word {
        assert!(self.len < 64, "word too long");
        Word { len: self.len + 1, bits: (self.bits << 1) | (l == Letter::Y) as u64 }
    }

    pub fn concat(self, other: Word) -> Word {
        assert!(self.len() + other.len() <= 64, "word too long");
        if other.len == 0 {
            return self;
        }
        Word { len: self.len + other.len, bits: (self.bits << other.len) | other.bits }
    }

    /// Subword of letters `start..end`.
    pub fn slice(self, start: usize, end: usize) -> Word {
        assert!(start <= end && end <= self.len());
        let len = end - start;
        Word { len: len as u8, bits: (self.bits >> (self.len() - end)) & Word::mask(len) }
    }

    /// Drop the first letter.
    pub fn tail(self) -> Word {
        self.slice(1, self.len())
    }

    /// Drop the last letter.
    pub fn init(self) -> Word {
        self.slice(0, self.len() - 1)
    }

    pub fn reverse(self) -> Word {
        let mut w = Word::EMPTY;
        for i in (0..self.len()).rev() {
            w = w.push_letter(self.letter(i));
        }
        w
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate(self, k: usize) -> Word {
        if self.is_empty() {
            return self;
        }
        let k = k % self.len();
        self.slice(k, self.len()).concat(self.slice(0, k))
    }

    /// Lexicographically least rotation (x < y).
    pub fn canonical_rotation(self) -> Word {
        (0..self.len().max(1)).map(|k| self.rotate(k)).min().unwrap()
    }

    /// `x^n`.
    pub fn x_power(n: usize) -> Word {
        Word::from_bits(n, 0)
    }

    /// `y^n`.
    pub fn y_power(n: usize) -> Word {
        Word::from_bits(n, Word::mask(n))
    }

    /// Exponents `(a0, …, ar)` of `x^{a0} y x^{a1} y ⋯ y x^{ar}`.
    pub fn x_blocks(self) -> Vec<usize> {
        let mut blocks = vec![0];
        for l in self.letters() {
            match l {
                Letter::X => *blocks.last_mut().unwrap() += 1,
                Letter::Y => blocks.push(0),
            }
        }
        blocks
    }

    /// Inverse of [`Word::x_blocks`].
    pub fn from_x_blocks(blocks: &[usize]) -> Word {
        let mut w = Word::EMPTY;
        for (i, &a) in blocks.iter().enumerate() {
            if i > 0 {
                w = w.push_letter(Letter::Y);
            }
            w = w.concat(Word::x_power(a));
        }
        w
    }

    /// The word-level push: `x^{a0}y⋯yx^{ar} ↦ x^{ar}yx^{a0}y⋯yx^{a(r−1)}`.
    /// Words without y are fixed.
    pub fn push(self) -> Word {
        let b = self.x_blocks();
        if b.len() == 1 {
            return self;
        }
        let mut nb = Vec::with_capacity(b.len());
        nb.push(b[b.len() - 1]);
        nb.extend_from_slice(&b[..b.len() - 1]);
        Word::from_x_blocks(&nb)
    }

    /// All words of a given length.
    pub fn all(len: usize) -> impl Iterator<Item = Word> {
        assert!(len < 64);
        (0..(1u64 << len)).map(move |b| Word::from_bits(len, b))
    }

    /// All words of a given length with exactly `depth` y's.
    pub fn all_with_depth(len: usize, depth: usize) -> impl Iterator<Item = Word> {
        Word::all(len).filter(move |w| w.depth() == depth)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for l in self.letters() {
            f.write_str(match l {
                Letter::X => "x",
                Letter::Y => "y",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn push_examples() {
        assert_eq!(w("xxy").push(), w("yxx"));
        assert_eq!(w("xyx").push(), w("xyx"));
        assert_eq!(w("xxx").push(), w("xxx"));
        assert_eq!(Word::EMPTY.push(), Word::EMPTY);
    }

    #[test]
    fn push_has_order_depth_plus_one() {
        for len in 0..9 {
            for v in Word::all(len) {
                let mut u = v;
                for _ in 0..=v.depth() {
                    u = u.push();
                }
                assert_eq!(u, v);
            }
        }
    }

    #[test]
    fn slicing_and_rotation() {
        let v = w("xyyxy");
        assert_eq!(v.slice(1, 4), w("yyx"));
        assert_eq!(v.rotate(2), w("yxyxy"));
        assert_eq!(v.reverse(), w("yxyyx"));
        assert_eq!(w("yxx").canonical_rotation(), w("xxy"));
        assert_eq!(v.tail(), w("yyxy"));
        assert_eq!(v.init(), w("xyyx"));
    }

    #[test]
    fn ordering_is_shortlex() {
        assert!(w("y") < w("xx"));
        assert!(w("xxy") < w("xyx"));
        assert!(w("xyx") < w("yxx"));
    }
}
