//! k-germs: restricted-growth strings of fixed length `k - 1`.
//!
//! A k-germ is written `a_{k-1} ... a_1` with `a_{k-1} <= 1` and every digit at
//! most one more than the digit to its left. Digits are stored left to right,
//! so the natural order of germs is plain lexicographic order.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GermError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("leading digit {0} is not 0 or 1")]
    LeadingDigit(u8),
    #[error("digit {digit} at position {position} exceeds previous digit {previous} plus one")]
    Growth {
        position: usize,
        digit: u8,
        previous: u8,
    },
    #[error("invalid character {0:?} in germ")]
    BadChar(char),
    #[error("germs of different k compared ({0} vs {1})")]
    KMismatch(usize, usize),
    #[error("the null germ has no parent")]
    Root,
    #[error("rgs of length {len} does not fit a {k}-germ")]
    PadTooShort { len: usize, k: usize },
    #[error("germ rank {rank} out of range for k={k}")]
    RankOutOfRange { rank: usize, k: usize },
}

/// Upper bound on a digit at `position` given the digit before it.
fn digit_limit(digits: &[u8], position: usize) -> u8 {
    if position == 0 {
        1
    } else {
        digits[position - 1] + 1
    }
}

fn check_digits(digits: &[u8]) -> Result<(), GermError> {
    for (position, &digit) in digits.iter().enumerate() {
        if digit > digit_limit(digits, position) {
            return Err(if position == 0 {
                GermError::LeadingDigit(digit)
            } else {
                GermError::Growth {
                    position,
                    digit,
                    previous: digits[position - 1],
                }
            });
        }
    }
    Ok(())
}

fn parse_digits(s: &str) -> Result<Vec<u8>, GermError> {
    s.chars()
        .map(|c| c.to_digit(36).map(|d| d as u8).ok_or(GermError::BadChar(c)))
        .collect()
}

fn write_digits(f: &mut fmt::Formatter<'_>, digits: &[u8]) -> fmt::Result {
    for &d in digits {
        let c = std::char::from_digit(u32::from(d), 36).unwrap_or('?');
        write!(f, "{c}")?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Germ {
    digits: Vec<u8>,
}

impl Germ {
    /// Builds a germ with `k = digits.len() + 1`.
    pub fn new(digits: Vec<u8>) -> Result<Self, GermError> {
        check_digits(&digits)?;
        Ok(Germ { digits })
    }

    pub fn zero(k: usize) -> Self {
        assert!(k >= 1, "k must be at least 1");
        Germ {
            digits: vec![0; k - 1],
        }
    }

    /// Parses a digit string; the empty string is the single 1-germ.
    pub fn parse(s: &str) -> Result<Self, GermError> {
        Germ::new(parse_digits(s)?)
    }

    /// Parses and checks that the string has length `k - 1`.
    pub fn parse_k(s: &str, k: usize) -> Result<Self, GermError> {
        if k == 0 {
            return Err(GermError::ZeroK);
        }
        let g = Germ::parse(s)?;
        if g.k() != k {
            return Err(GermError::KMismatch(g.k(), k));
        }
        Ok(g)
    }

    pub fn k(&self) -> usize {
        self.digits.len() + 1
    }

    /// Digits `a_{k-1} ... a_1`, most significant first.
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Entry `a_i` for `1 <= i < k`.
    pub fn entry(&self, i: usize) -> u8 {
        self.digits[self.k() - 1 - i]
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    pub fn digit_sum(&self) -> usize {
        self.digits.iter().map(|&d| usize::from(d)).sum()
    }

    pub fn max_digit(&self) -> u8 {
        self.digits.iter().copied().max().unwrap_or(0)
    }

    /// Parent in the germ tree together with the level `i` of the entry
    /// `a_i` that was decremented.
    pub fn parent_step(&self) -> Option<(Germ, usize)> {
        let j = self.digits.iter().rposition(|&d| d != 0)?;
        let mut digits = self.digits.clone();
        digits[j] -= 1;
        Some((Germ { digits }, self.k() - 1 - j))
    }

    pub fn parent(&self) -> Result<Germ, GermError> {
        self.parent_step().map(|(g, _)| g).ok_or(GermError::Root)
    }

    /// Order comparison that refuses germs of different k.
    pub fn try_cmp(&self, other: &Germ) -> Result<Ordering, GermError> {
        if self.k() != other.k() {
            return Err(GermError::KMismatch(self.k(), other.k()));
        }
        Ok(self.digits.cmp(&other.digits))
    }

    /// The same germ seen as a (k+1)-germ, i.e. with a zero prefixed.
    pub fn extend(&self) -> Germ {
        let mut digits = Vec::with_capacity(self.digits.len() + 1);
        digits.push(0);
        digits.extend_from_slice(&self.digits);
        Germ { digits }
    }

    pub fn to_rgs(&self) -> Rgs {
        let start = self
            .digits
            .iter()
            .position(|&d| d != 0)
            .unwrap_or(self.digits.len());
        Rgs(self.digits[start..].to_vec())
    }

    /// Next germ in the natural order, if any.
    pub fn successor(&self) -> Option<Germ> {
        let mut digits = self.digits.clone();
        let j = (0..digits.len())
            .rev()
            .find(|&j| digits[j] < digit_limit(&digits, j))?;
        digits[j] += 1;
        digits[j + 1..].iter_mut().for_each(|d| *d = 0);
        Some(Germ { digits })
    }
}

impl fmt::Display for Germ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, &self.digits)
    }
}

impl std::str::FromStr for Germ {
    type Err = GermError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Germ::parse(s)
    }
}

/// A germ with its leading zeros stripped. The null RGS prints as "0".
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rgs(Vec<u8>);

impl Rgs {
    pub fn parse(s: &str) -> Result<Self, GermError> {
        if s == "0" || s.is_empty() {
            return Ok(Rgs(Vec::new()));
        }
        let digits = parse_digits(s)?;
        if digits[0] != 1 {
            return Err(GermError::LeadingDigit(digits[0]));
        }
        check_digits(&digits)?;
        Ok(Rgs(digits))
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    /// Prefixes zeros to obtain a k-germ.
    pub fn pad(&self, k: usize) -> Result<Germ, GermError> {
        if k < self.0.len() + 1 {
            return Err(GermError::PadTooShort { len: self.0.len(), k });
        }
        let mut digits = vec![0; k - 1 - self.0.len()];
        digits.extend_from_slice(&self.0);
        Ok(Germ { digits })
    }
}

impl fmt::Display for Rgs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "0")
        } else {
            write_digits(f, &self.0)
        }
    }
}

/// Catalan number `C_k = (2k)! / (k! (k+1)!)`.
pub fn catalan(k: usize) -> u64 {
    let mut c: u64 = 1;
    for i in 0..k as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// Iterator over all k-germs in natural order.
#[derive(Debug, Clone)]
pub struct Germs {
    next: Option<Germ>,
}

impl Germs {
    pub fn new(k: usize) -> Self {
        Germs {
            next: Some(Germ::zero(k)),
        }
    }
}

impl Iterator for Germs {
    type Item = Germ;
    fn next(&mut self) -> Option<Germ> {
        let current = self.next.take()?;
        self.next = current.successor();
        Some(current)
    }
}

pub fn enumerate(k: usize) -> Vec<Germ> {
    Germs::new(k).collect()
}

/// Germs of one k with rank lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermIndex {
    k: usize,
    germs: Vec<Germ>,
}

impl GermIndex {
    pub fn new(k: usize) -> Self {
        GermIndex {
            k,
            germs: enumerate(k),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.germs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.germs.is_empty()
    }

    pub fn germs(&self) -> &[Germ] {
        &self.germs
    }

    pub fn get(&self, rank: usize) -> Result<&Germ, GermError> {
        self.germs
            .get(rank)
            .ok_or(GermError::RankOutOfRange { rank, k: self.k })
    }

    pub fn rank(&self, g: &Germ) -> Option<usize> {
        if g.k() != self.k {
            return None;
        }
        self.germs.binary_search(g).ok()
    }
}

/// The germ tree of order k written as `root(child,child(...))`, children in
/// natural order.
pub fn germ_tree(k: usize) -> String {
    let index = GermIndex::new(k);
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); index.len()];
    for (rank, g) in index.germs().iter().enumerate().skip(1) {
        let p = g.parent().expect("non-root germ has a parent");
        children[index.rank(&p).expect("parent is a germ")].push(rank);
    }
    let mut out = String::new();
    write_subtree(&index, &children, 0, &mut out);
    out
}

fn write_subtree(index: &GermIndex, children: &[Vec<usize>], node: usize, out: &mut String) {
    out.push_str(&index.germs()[node].to_string());
    if children[node].is_empty() {
        return;
    }
    out.push('(');
    for (j, &c) in children[node].iter().enumerate() {
        if j > 0 {
            out.push(',');
        }
        write_subtree(index, children, c, out);
    }
    out.push(')');
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(k: usize) -> Vec<String> {
        enumerate(k).iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(strings(1), vec![""]);
        assert_eq!(strings(2), vec!["0", "1"]);
        assert_eq!(strings(3), vec!["00", "01", "10", "11", "12"]);
        assert_eq!(enumerate(4).len(), 14);
    }

    #[test]
    fn catalan_values() {
        let expected = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012];
        for (k, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(k), c);
        }
    }

    #[test]
    fn validation() {
        assert_eq!(Germ::parse("2"), Err(GermError::LeadingDigit(2)));
        assert!(matches!(
            Germ::parse("13"),
            Err(GermError::Growth { position: 1, .. })
        ));
        assert_eq!(Germ::parse("0-"), Err(GermError::BadChar('-')));
        assert!(Germ::parse("0123").is_ok());
        assert_eq!(Germ::parse_k("01", 4), Err(GermError::KMismatch(3, 4)));
    }

    #[test]
    fn compare_examples() {
        let g = |s| Germ::parse(s).unwrap();
        assert_eq!(g("011").try_cmp(&g("012")), Ok(Ordering::Less));
        assert_eq!(g("100").try_cmp(&g("012")), Ok(Ordering::Greater));
        assert_eq!(g("100").try_cmp(&g("100")), Ok(Ordering::Equal));
        assert!(g("10").try_cmp(&g("100")).is_err());
    }

    #[test]
    fn parents() {
        let p = |s| Germ::parse(s).unwrap().parent().unwrap().to_string();
        assert_eq!(p("12"), "11");
        assert_eq!(p("100"), "000");
        assert_eq!(p("001"), "000");
        assert_eq!(Germ::zero(4).parent(), Err(GermError::Root));
        assert_eq!(Germ::parse("120").unwrap().parent_step().unwrap().1, 2);
    }

    #[test]
    fn rgs_roundtrip() {
        let g = Germ::parse("0012").unwrap();
        assert_eq!(g.to_rgs().to_string(), "12");
        assert_eq!(Rgs::parse("12").unwrap().pad(5).unwrap(), g);
        assert_eq!(Germ::zero(3).to_rgs().to_string(), "0");
        assert!(Rgs::parse("12").unwrap().pad(2).is_err());
    }

    #[test]
    fn rgs_sequence_over_increasing_k() {
        let mut seen = Vec::new();
        for k in 1..=5 {
            for g in Germs::new(k) {
                let r = g.to_rgs().to_string();
                if !seen.contains(&r) {
                    seen.push(r);
                }
            }
        }
        let expected = "0,1,10,11,12,100,101,110,111,112,120,121,122,123,1000,1001,1010,1011";
        assert_eq!(seen[..18].join(","), expected);
    }

    #[test]
    fn small_germ_trees() {
        assert_eq!(germ_tree(2), "0(1)");
        assert_eq!(germ_tree(3), "00(01,10(11(12)))");
    }
}
