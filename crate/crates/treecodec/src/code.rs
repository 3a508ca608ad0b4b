use std::fmt;

use germs::Germ;

use crate::CodecError;

/// One position of a tree code: a node label or an ascent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Color(u8),
    Star,
}

impl Symbol {
    pub fn color(self) -> Option<u8> {
        match self {
            Symbol::Color(c) => Some(c),
            Symbol::Star => None,
        }
    }

    pub fn is_star(self) -> bool {
        self == Symbol::Star
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Symbol::Color(c) => {
                let ch = std::char::from_digit(u32::from(c), 36).unwrap_or('?');
                write!(f, "{ch}")
            }
            Symbol::Star => f.write_str("*"),
        }
    }
}

/// A string of `2k+1` symbols holding each label `0..=k` once and `k` stars:
/// the depth-first encoding of an ordered tree with `k` edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeCode {
    symbols: Vec<Symbol>,
}

impl TreeCode {
    /// Wraps symbols without checking them.
    pub(crate) fn from_symbols_unchecked(symbols: Vec<Symbol>) -> Self {
        TreeCode { symbols }
    }

    /// Builds a code and checks every structural invariant.
    pub fn new(symbols: Vec<Symbol>) -> Result<Self, CodecError> {
        let code = TreeCode { symbols };
        code.validate()?;
        Ok(code)
    }

    pub fn parse(s: &str) -> Result<Self, CodecError> {
        let symbols = s
            .chars()
            .map(|c| match c {
                '*' => Ok(Symbol::Star),
                _ => c
                    .to_digit(36)
                    .map(|d| Symbol::Color(d as u8))
                    .ok_or(CodecError::BadSymbol(c)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        TreeCode::new(symbols)
    }

    /// The code of the null germ: `01...k` followed by `k` stars.
    pub fn base(k: usize) -> Self {
        let mut symbols: Vec<Symbol> = (0..=k as u8).map(Symbol::Color).collect();
        symbols.extend(std::iter::repeat_n(Symbol::Star, k));
        TreeCode { symbols }
    }

    pub fn k(&self) -> usize {
        self.symbols.len() / 2
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

    /// Checks the invariants that every code produced by castling has.
    pub fn validate(&self) -> Result<(), CodecError> {
        let s = &self.symbols;
        if s.len().is_multiple_of(2) || s.len() < 3 {
            return Err(CodecError::Length(s.len()));
        }
        let k = s.len() / 2;
        let mut seen = vec![false; k + 1];
        for &sym in s {
            if let Symbol::Color(c) = sym {
                let c = usize::from(c);
                if c > k {
                    return Err(CodecError::ColorOutOfRange { color: c, k });
                }
                if seen[c] {
                    return Err(CodecError::RepeatedColor(c));
                }
                seen[c] = true;
            }
        }
        if let Some(c) = seen.iter().position(|&b| !b) {
            return Err(CodecError::MissingColor(c));
        }
        if s[0] != Symbol::Color(0) {
            return Err(CodecError::FirstNotZero);
        }
        let top = Symbol::Color(k as u8);
        let pairs = || s.windows(2).map(|w| (w[0], w[1]));
        if !pairs().any(|p| p == (top, Symbol::Star)) {
            return Err(CodecError::TopNotFollowedByStar);
        }
        if pairs().any(|p| p == (Symbol::Star, top)) {
            return Err(CodecError::StarBeforeTop);
        }
        for (position, w) in s.windows(2).enumerate() {
            if let (Symbol::Color(b), Symbol::Color(c)) = (w[0], w[1]) {
                if usize::from(b) < k && c < b {
                    return Err(CodecError::Descent {
                        position: position + 1,
                    });
                }
            }
        }
        let mut balance: isize = 0;
        for (position, &sym) in s.iter().enumerate() {
            balance += if sym.is_star() { -1 } else { 1 };
            if position + 1 < s.len() && balance <= 0 {
                return Err(CodecError::PrefixDiscipline { position });
            }
        }
        Ok(())
    }

    /// Length of the prefix `0 1 2 ...`.
    fn ascending_prefix(&self) -> usize {
        self.symbols
            .iter()
            .enumerate()
            .take_while(|&(j, &sym)| sym == Symbol::Color(j as u8))
            .count()
    }
}

impl fmt::Display for TreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|s| write!(f, "{s}"))
    }
}

impl std::str::FromStr for TreeCode {
    type Err = CodecError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TreeCode::parse(s)
    }
}

/// One castling step at level `i`: the code splits as `W | X | Y | Z` with
/// `|W| = |Z| = i`, `X` starting at the leftmost interior entry `m` and `Y` at
/// the label `m+1`; the result is `W | Y | X | Z`.
pub fn castle_step(code: &TreeCode, i: usize) -> Result<TreeCode, CodecError> {
    let s = code.symbols();
    let n = s.len();
    if i == 0 || 2 * i >= n {
        return Err(CodecError::Level {
            level: i,
            k: code.k(),
        });
    }
    let interior = &s[i..n - i];
    let omega = match interior[0] {
        Symbol::Color(c) if c > 0 => c,
        _ => return Err(CodecError::Interior { level: i }),
    };
    let y = interior
        .iter()
        .position(|&sym| sym == Symbol::Color(omega + 1))
        .ok_or(CodecError::Interior { level: i })?;
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&s[..i]);
    out.extend_from_slice(&interior[y..]);
    out.extend_from_slice(&interior[..y]);
    out.extend_from_slice(&s[n - i..]);
    Ok(TreeCode::from_symbols_unchecked(out))
}

/// The tree code of a germ: castling steps applied along the path from the
/// null germ.
pub fn castle(g: &Germ) -> TreeCode {
    let mut levels = Vec::with_capacity(g.digit_sum());
    let mut cur = g.clone();
    while let Some((p, i)) = cur.parent_step() {
        levels.push(i);
        cur = p;
    }
    levels.iter().rev().fold(TreeCode::base(g.k()), |code, &i| {
        castle_step(&code, i).expect("castling a valid germ never fails")
    })
}

/// Intermediate state of uncastling: the code after one reverse step and the
/// germ it encodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub code: TreeCode,
    pub germ: Germ,
    pub level: usize,
}

/// Reverses one castling step at the level given by the ascending prefix.
fn uncastle_step(code: &TreeCode) -> Result<Option<(TreeCode, usize)>, CodecError> {
    let k = code.k();
    let i = code.ascending_prefix();
    if i == k + 1 {
        return Ok(None);
    }
    let s = code.symbols();
    let n = s.len();
    if i == 0 || i >= k {
        return Err(CodecError::NotInImage);
    }
    let interior = &s[i..n - i];
    let omega = match interior[0] {
        Symbol::Color(c) if c > 0 => c - 1,
        _ => return Err(CodecError::NotInImage),
    };
    let x = interior
        .iter()
        .position(|&sym| sym == Symbol::Color(omega))
        .ok_or(CodecError::NotInImage)?;
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&s[..i]);
    out.extend_from_slice(&interior[x..]);
    out.extend_from_slice(&interior[..x]);
    out.extend_from_slice(&s[n - i..]);
    Ok(Some((TreeCode::from_symbols_unchecked(out), i)))
}

/// Peels castling steps off a code, returning the germ and the intermediate
/// codes (each paired with the germ it encodes).
pub fn uncastle_trace(code: &TreeCode) -> Result<(Germ, Vec<TraceStep>), CodecError> {
    code.validate()?;
    let k = code.k();
    let cap = k * k + 1;
    let mut counts = vec![0u8; k.saturating_sub(1)];
    let mut codes = Vec::new();
    let mut cur = code.clone();
    while let Some((next, i)) = uncastle_step(&cur)? {
        counts[k - 1 - i] += 1;
        codes.push((next.clone(), i));
        if codes.len() > cap {
            return Err(CodecError::NotInImage);
        }
        cur = next;
    }
    let germ = Germ::new(counts).map_err(|_| CodecError::NotInImage)?;
    if castle(&germ) != *code {
        return Err(CodecError::NotInImage);
    }
    let mut digits = germ.digits().to_vec();
    let trace = codes
        .into_iter()
        .map(|(code, level)| {
            digits[k - 1 - level] -= 1;
            TraceStep {
                code,
                germ: Germ::new(digits.clone()).expect("intermediate germs are valid"),
                level,
            }
        })
        .collect();
    Ok((germ, trace))
}

/// Inverse of [`castle`]; rejects codes outside its image.
pub fn uncastle(code: &TreeCode) -> Result<Germ, CodecError> {
    uncastle_trace(code).map(|(g, _)| g)
}
