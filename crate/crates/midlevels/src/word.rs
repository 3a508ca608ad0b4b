use std::fmt;

use crate::MidlevelsError;

/// Longest word that fits the packed representation.
pub const MAX_LEN: usize = 63;

/// A binary word `b_0 b_1 ... b_{n-1}` packed into a machine word, `b_0` in
/// the most significant used bit so that numeric order is lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: u8,
    bits: u64,
}

impl Word {
    pub fn from_raw(bits: u64, len: usize) -> Self {
        assert!(len <= MAX_LEN, "word too long");
        debug_assert!(len == 64 || bits >> len == 0);
        Word { len: len as u8, bits }
    }

    pub fn parse(s: &str) -> Result<Self, MidlevelsError> {
        if s.len() > MAX_LEN {
            return Err(MidlevelsError::WordTooLong(s.len()));
        }
        let mut bits = 0u64;
        for c in s.chars() {
            bits = (bits << 1)
                | match c {
                    '0' => 0,
                    '1' => 1,
                    other => return Err(MidlevelsError::BadBit(other)),
                };
        }
        Ok(Word::from_raw(bits, s.len()))
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        assert!(bits.len() <= MAX_LEN, "word too long");
        let raw = bits.iter().fold(0u64, |acc, &b| (acc << 1) | u64::from(b));
        Word::from_raw(raw, bits.len())
    }

    pub fn raw(self) -> u64 {
        self.bits
    }

    pub fn len(self) -> usize {
        usize::from(self.len)
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    fn mask(self) -> u64 {
        (1u64 << self.len) - 1
    }

    pub fn weight(self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Bit `b_i`.
    pub fn bit(self, i: usize) -> bool {
        (self.bits >> (self.len() - 1 - i)) & 1 == 1
    }

    pub fn flip(self, i: usize) -> Word {
        Word {
            bits: self.bits ^ (1u64 << (self.len() - 1 - i)),
            ..self
        }
    }

    pub fn set(self, i: usize, value: bool) -> Word {
        if self.bit(i) == value {
            self
        } else {
            self.flip(i)
        }
    }

    pub fn bits(self) -> impl Iterator<Item = bool> {
        (0..self.len()).map(move |i| self.bit(i))
    }

    pub fn zeros(self) -> impl Iterator<Item = usize> {
        (0..self.len()).filter(move |&i| !self.bit(i))
    }

    pub fn ones(self) -> impl Iterator<Item = usize> {
        (0..self.len()).filter(move |&i| self.bit(i))
    }

    /// Cyclic shift to the right: `translate(00011, 1) = 10001`.
    pub fn translate(self, i: usize) -> Word {
        let n = self.len();
        if n == 0 {
            return self;
        }
        let i = i % n;
        if i == 0 {
            return self;
        }
        Word {
            bits: ((self.bits >> i) | (self.bits << (n - i))) & self.mask(),
            ..self
        }
    }

    /// The rotation that starts at position `i`, i.e. `b_i b_{i+1} ...`.
    pub fn rotate_to(self, i: usize) -> Word {
        let n = self.len();
        self.translate((n - i % n) % n)
    }

    pub fn reverse(self) -> Word {
        let n = self.len();
        let bits = self.bits.reverse_bits() >> (64 - n);
        Word { bits, ..self }
    }

    pub fn complement(self) -> Word {
        Word {
            bits: !self.bits & self.mask(),
            ..self
        }
    }

    /// Complemented reversal.
    pub fn aleph(self) -> Word {
        self.reverse().complement()
    }

    /// Least rotation together with the start position that produces it
    /// (smallest such position when the word is periodic).
    pub fn min_rotation(self) -> (Word, usize) {
        (0..self.len().max(1))
            .map(|i| (self.rotate_to(i), i))
            .min()
            .expect("at least one rotation")
    }

    pub fn canonical(self) -> Word {
        self.min_rotation().0
    }

    /// Number of distinct rotations.
    pub fn orbit_size(self) -> usize {
        (1..=self.len()).find(|&p| self.rotate_to(p) == self).unwrap_or(1)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Word {
    type Err = MidlevelsError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s)
    }
}

/// All words of length `n` and the given weight, in increasing order.
pub fn words_of_weight(n: usize, weight: usize) -> impl Iterator<Item = Word> {
    assert!(n <= MAX_LEN && weight <= n);
    let limit = 1u64 << n;
    let first = if weight == 0 { 0 } else { (1u64 << weight) - 1 };
    let mut next = Some(first);
    std::iter::from_fn(move || {
        let v = next?;
        next = if v == 0 {
            None
        } else {
            // next integer with the same popcount
            let t = v | (v - 1);
            let w = (t + 1) | (((!t & (!t).wrapping_neg()) - 1) >> (v.trailing_zeros() + 1));
            (w < limit).then_some(w)
        };
        Some(Word::from_raw(v, n))
    })
}

/// A rotation class of words, kept by its least rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NecklaceClass {
    canonical: Word,
}

impl NecklaceClass {
    pub fn of(w: Word) -> Self {
        NecklaceClass {
            canonical: w.canonical(),
        }
    }

    pub fn canonical(self) -> Word {
        self.canonical
    }

    pub fn orbit_size(self) -> usize {
        self.canonical.orbit_size()
    }

    pub fn weight(self) -> usize {
        self.canonical.weight()
    }

    /// Image under complemented reversal; swaps the two middle levels.
    pub fn aleph(self) -> NecklaceClass {
        NecklaceClass::of(self.canonical.aleph())
    }
}

impl fmt::Display for NecklaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.canonical)
    }
}

/// Element `(shift, reflect)` of the dihedral group acting on words of
/// length n: it maps `v` to `translate(aleph^reflect(v), shift)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dihedral {
    pub shift: usize,
    pub reflect: bool,
}

impl Dihedral {
    pub fn act(self, w: Word) -> Word {
        let w = if self.reflect { w.aleph() } else { w };
        w.translate(self.shift)
    }

    /// Product `self * other`, acting as `other` first.
    pub fn compose(self, other: Dihedral, n: usize) -> Dihedral {
        let moved = if self.reflect {
            (n - other.shift % n) % n
        } else {
            other.shift % n
        };
        Dihedral {
            shift: (self.shift + moved) % n,
            reflect: self.reflect != other.reflect,
        }
    }
}
