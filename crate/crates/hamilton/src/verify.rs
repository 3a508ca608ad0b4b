use std::collections::HashSet;
use std::fmt::Write as _;

use midlevels::Word;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("expected {expected} vertices, found {found}")]
    Count { expected: u64, found: usize },
    #[error("step {step}: word {word} has length {len}, expected {expected}")]
    WordLength {
        step: usize,
        word: String,
        len: usize,
        expected: usize,
    },
    #[error("step {step}: word {word} is not in the middle levels")]
    Level { step: usize, word: String },
    #[error("step {step}: word {word} was already visited")]
    Repeat { step: usize, word: String },
    #[error("step {step}: {a} and {b} differ in {distance} bits")]
    NotAdjacent {
        step: usize,
        a: String,
        b: String,
        distance: u32,
    },
    #[error("certificate line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("certificate does not repeat its first word at the end")]
    NotClosed,
}

/// What the verifier accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Certificate {
    pub k: usize,
    pub length: usize,
}

fn binomial(n: u64, r: u64) -> u64 {
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Checks that `cycle` visits every k- and (k+1)-subset of a (2k+1)-set once
/// and that consecutive words (including last and first) differ in one bit.
/// Uses nothing but bit arithmetic.
pub fn verify_hamilton(k: usize, cycle: &[Word]) -> Result<Certificate, VerifyError> {
    if k == 0 {
        return Err(VerifyError::ZeroK);
    }
    let n = 2 * k + 1;
    let expected = 2 * binomial(n as u64, k as u64);
    if cycle.len() as u64 != expected {
        return Err(VerifyError::Count {
            expected,
            found: cycle.len(),
        });
    }
    let mut seen = HashSet::with_capacity(cycle.len());
    for (step, &w) in cycle.iter().enumerate() {
        if w.len() != n {
            return Err(VerifyError::WordLength {
                step,
                word: w.to_string(),
                len: w.len(),
                expected: n,
            });
        }
        let weight = w.raw().count_ones() as usize;
        if weight != k && weight != k + 1 {
            return Err(VerifyError::Level {
                step,
                word: w.to_string(),
            });
        }
        if !seen.insert(w.raw()) {
            return Err(VerifyError::Repeat {
                step,
                word: w.to_string(),
            });
        }
        let next = cycle[(step + 1) % cycle.len()];
        let distance = (w.raw() ^ next.raw()).count_ones();
        if distance != 1 {
            return Err(VerifyError::NotAdjacent {
                step,
                a: w.to_string(),
                b: next.to_string(),
                distance,
            });
        }
    }
    Ok(Certificate {
        k,
        length: cycle.len(),
    })
}

/// One word per line, the first word repeated at the end.
pub fn write_certificate(cycle: &[Word]) -> String {
    let mut out = String::new();
    for w in cycle.iter().chain(cycle.first()) {
        let _ = writeln!(out, "{w}");
    }
    out
}

/// Reads a certificate back into the cycle it lists (without the repeated
/// last line).
pub fn parse_certificate(text: &str) -> Result<Vec<Word>, VerifyError> {
    let mut words = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let w = Word::parse(line).map_err(|e| VerifyError::Parse {
            line: i + 1,
            reason: e.to_string(),
        })?;
        words.push(w);
    }
    if words.len() < 2 || words.first() != words.last() {
        return Err(VerifyError::NotClosed);
    }
    words.pop();
    Ok(words)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(s: &[&str]) -> Vec<Word> {
        s.iter().map(|w| Word::parse(w).unwrap()).collect()
    }

    #[test]
    fn accepts_the_hexagon_of_one() {
        let c = words(&["001", "011", "010", "110", "100", "101"]);
        assert_eq!(verify_hamilton(1, &c).unwrap().length, 6);
        let text = write_certificate(&c);
        assert_eq!(text.lines().count(), 7);
        assert_eq!(parse_certificate(&text).unwrap(), c);
    }

    #[test]
    fn rejects_broken_cycles() {
        let c = words(&["001", "011", "010", "110", "101", "100"]);
        assert!(matches!(
            verify_hamilton(1, &c),
            Err(VerifyError::NotAdjacent { step: 3, .. })
        ));
        let c = words(&["001", "011", "001", "110", "100", "101"]);
        assert!(matches!(
            verify_hamilton(1, &c),
            Err(VerifyError::Repeat { step: 2, .. })
        ));
        assert!(matches!(
            verify_hamilton(1, &c[..4]),
            Err(VerifyError::Count { .. })
        ));
        assert!(matches!(
            parse_certificate("001\n011\n"),
            Err(VerifyError::NotClosed)
        ));
    }
}
