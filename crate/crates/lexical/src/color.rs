use midlevels::Word;

use crate::LexicalError;

/// An edge color in `0..=k`.
pub type Color = u8;

/// Half-size of a word of odd length `2k+1`.
fn half(w: Word) -> Result<usize, LexicalError> {
    if w.len().is_multiple_of(2) {
        return Err(LexicalError::EvenLength(w.len()));
    }
    Ok(w.len() / 2)
}

fn check_lower(w: Word) -> Result<usize, LexicalError> {
    let k = half(w)?;
    if w.weight() != k {
        return Err(LexicalError::Weight {
            word: w.to_string(),
            expected: k,
        });
    }
    Ok(k)
}

fn check_upper(w: Word) -> Result<usize, LexicalError> {
    let k = half(w)?;
    if w.weight() != k + 1 {
        return Err(LexicalError::Weight {
            word: w.to_string(),
            expected: k + 1,
        });
    }
    Ok(k)
}

/// The staircase path of `b_1 .. b_{2k}` in the `(k+1) x (k+1)` grid: a 0
/// is a step right, a 1 a step up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    /// `true` for an up-step.
    steps: Vec<bool>,
}

impl LatticePath {
    /// Path of a weight-k word starting with 0.
    pub fn of_word(w: Word) -> Result<Self, LexicalError> {
        check_lower(w)?;
        if w.bit(0) {
            return Err(LexicalError::LeadingOne(w.to_string()));
        }
        Ok(LatticePath {
            steps: w.bits().skip(1).collect(),
        })
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    pub fn k(&self) -> usize {
        self.steps.len() / 2
    }

    /// Grid points visited, starting at `(0, 0)`.
    pub fn points(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let start = std::iter::once((0, 0));
        start.chain(self.steps.iter().scan((0, 0), |p, &up| {
            if up {
                p.1 += 1;
            } else {
                p.0 += 1;
            }
            Some(*p)
        }))
    }

    /// Number of horizontal steps lying above the diagonal.
    pub fn color(&self) -> Color {
        let mut count = 0;
        for ((x, y), &up) in self.points().zip(&self.steps) {
            if !up && y > x {
                count += 1;
            }
        }
        count
    }
}

/// Color of the edge that sets `b_0` of a weight-k word with `b_0 = 0`.
pub fn lexical_color(w: Word) -> Result<Color, LexicalError> {
    LatticePath::of_word(w).map(|p| p.color())
}

/// Color of the edge setting bit `x` of a lower-level word.
pub fn color_at(w: Word, x: usize) -> Result<Color, LexicalError> {
    if x >= w.len() || w.bit(x) {
        return Err(LexicalError::NotAZero {
            word: w.to_string(),
            position: x,
        });
    }
    lexical_color(w.rotate_to(x))
}

/// Colors of all zero positions of a lower-level word.
pub fn zero_colors(w: Word) -> Result<Vec<(usize, Color)>, LexicalError> {
    check_lower(w)?;
    w.zeros().map(|x| color_at(w, x).map(|c| (x, c))).collect()
}

/// Counting form of the lexical color: with `S` the support of `w`, the
/// number of zeros `y != x` for which the cyclic interval `[y, x)` holds
/// fewer ones than zeros.
pub fn lexical_color_formula(w: Word, x: usize) -> Result<Color, LexicalError> {
    check_lower(w)?;
    if x >= w.len() || w.bit(x) {
        return Err(LexicalError::NotAZero {
            word: w.to_string(),
            position: x,
        });
    }
    let n = w.len();
    let mut count = 0;
    for y in w.zeros().filter(|&y| y != x) {
        let (mut ones, mut zeros) = (0usize, 0usize);
        let mut t = y;
        while t != x {
            if w.bit(t) {
                ones += 1;
            } else {
                zeros += 1;
            }
            t = (t + 1) % n;
        }
        if ones < zeros {
            count += 1;
        }
    }
    Ok(count)
}

/// Color of the edge clearing bit `x` of an upper-level word, read right to
/// left on the complemented word.
pub fn color_upper(u: Word, x: usize) -> Result<Color, LexicalError> {
    check_upper(u)?;
    if x >= u.len() || !u.bit(x) {
        return Err(LexicalError::NotAOne {
            word: u.to_string(),
            position: x,
        });
    }
    let n = u.len();
    let bits: Vec<bool> = (0..n).map(|j| !u.bit((x + n - j) % n)).collect();
    lexical_color(Word::from_bits(&bits))
}
