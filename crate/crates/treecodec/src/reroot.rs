use std::fmt;

use germs::Germ;

/// Re-rooting involution on germs.
///
/// The germ `a_{k-1} .. a_1` is read as a Dyck path of semilength `k`: an
/// up-step to height 1, then for every digit `a` an up-step reaching height
/// `a + 1`, with the descents in between forced by the heights. The image is
/// the germ of the reversed (mirrored) path, so ascending runs of the germ turn
/// into descents and descents into ascending runs.
pub fn theta_reroot(g: &Germ) -> Germ {
    let steps = dyck_steps(g);
    let mirrored: Vec<bool> = steps.iter().rev().map(|&up| !up).collect();
    germ_of_steps(&mirrored)
}

/// Up-steps are `true`.
fn dyck_steps(g: &Germ) -> Vec<bool> {
    let heights: Vec<usize> = std::iter::once(1)
        .chain(g.digits().iter().map(|&a| usize::from(a) + 1))
        .collect();
    let mut steps = Vec::with_capacity(2 * heights.len());
    for (j, &h) in heights.iter().enumerate() {
        let next = heights.get(j + 1).copied().unwrap_or(1);
        steps.push(true);
        steps.extend(std::iter::repeat_n(false, h + 1 - next));
    }
    steps
}

fn germ_of_steps(steps: &[bool]) -> Germ {
    let mut height = 0usize;
    let mut digits = Vec::new();
    for &up in steps {
        if up {
            height += 1;
            digits.push((height - 1) as u8);
        } else {
            height -= 1;
        }
    }
    digits.remove(0);
    Germ::new(digits).expect("a Dyck path always reads back as a germ")
}

/// A maximal piece of a germ: part of the base `1 2 .. max` or an atom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub digits: Vec<u8>,
    pub in_base: bool,
    /// Number of base digits to the left of this piece.
    pub gap: usize,
}

/// A germ written as its base string `1 2 .. max` with atoms inserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomDecomposition {
    pieces: Vec<Piece>,
}

impl AtomDecomposition {
    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn base(&self) -> Vec<u8> {
        self.pieces
            .iter()
            .filter(|p| p.in_base)
            .flat_map(|p| p.digits.iter().copied())
            .collect()
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Piece> {
        self.pieces.iter().filter(|p| !p.in_base)
    }

    /// Inserts the atoms back into the base, left to right.
    pub fn reassemble(&self) -> Vec<u8> {
        let base = self.base();
        let mut out = Vec::new();
        let mut placed = 0;
        for atom in self.atoms() {
            out.extend_from_slice(&base[placed..atom.gap]);
            placed = atom.gap;
            out.extend_from_slice(&atom.digits);
        }
        out.extend_from_slice(&base[placed..]);
        out
    }
}

fn digits_str(d: &[u8]) -> String {
    d.iter()
        .map(|&x| std::char::from_digit(u32::from(x), 36).unwrap_or('?'))
        .collect()
}

impl fmt::Display for AtomDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.pieces {
            if p.in_base {
                write!(f, "{}", digits_str(&p.digits))?;
            } else {
                write!(f, "({})", digits_str(&p.digits))?;
            }
        }
        Ok(())
    }
}

/// Runs of a germ: every 0 alone, otherwise maximal `v, v+1, ...` stretches.
fn runs(digits: &[u8]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for j in 1..=digits.len() {
        let breaks =
            j == digits.len() || digits[j] == 0 || digits[j - 1] == 0 || digits[j] != digits[j - 1] + 1;
        if breaks {
            out.push((start, j));
            start = j;
        }
    }
    out
}

/// Splits a germ into its base `1 .. max` and atoms. Base pieces are whole
/// runs taken as far right as possible, ending at the rightmost occurrence of
/// the largest digit; a run is split only when no whole run fits.
pub fn atoms(g: &Germ) -> AtomDecomposition {
    let digits = g.digits();
    let mut runs = runs(digits);
    let mut base_runs: Vec<usize> = Vec::new();
    let mut wanted = g.max_digit();
    let mut limit = runs.len();
    while wanted > 0 {
        let whole = (0..limit)
            .rev()
            .find(|&r| digits[runs[r].1 - 1] == wanted && digits[runs[r].0] > 0);
        let r = match whole {
            Some(r) => r,
            None => {
                let r = (0..limit)
                    .rev()
                    .find(|&r| digits[runs[r].0..runs[r].1].contains(&wanted))
                    .expect("every positive digit is reachable from the left");
                let (s, e) = runs[r];
                let cut = s + digits[s..e].iter().position(|&d| d == wanted).unwrap() + 1;
                runs[r] = (s, cut);
                runs.insert(r + 1, (cut, e));
                base_runs.iter_mut().for_each(|b| *b += 1);
                r
            }
        };
        base_runs.push(r);
        wanted = digits[runs[r].0] - 1;
        limit = r;
    }
    let mut gap = 0;
    let pieces = runs
        .iter()
        .enumerate()
        .map(|(r, &(s, e))| {
            let in_base = base_runs.contains(&r);
            let piece = Piece {
                digits: digits[s..e].to_vec(),
                in_base,
                gap,
            };
            if in_base {
                gap += e - s;
            }
            piece
        })
        .collect();
    AtomDecomposition { pieces }
}
