use germs::Germ;
use midlevels::{NecklaceClass, Word};
use treecodec::{theta, uncastle, Symbol, TreeCode};

use crate::color::{zero_colors, Color};
use crate::LexicalError;

/// A lower-level word with each zero replaced by its color and each one by
/// a star.
pub fn coded_word(w: Word) -> Result<Vec<Symbol>, LexicalError> {
    let mut symbols = vec![Symbol::Star; w.len()];
    for (x, c) in zero_colors(w)? {
        symbols[x] = Symbol::Color(c);
    }
    Ok(symbols)
}

pub fn symbols_to_string(symbols: &[Symbol]) -> String {
    symbols.iter().map(|s| s.to_string()).collect()
}

/// Lower-level representative of a vertex of either level.
fn lower_of(w: Word) -> Word {
    if w.weight() > w.len() / 2 {
        w.aleph()
    } else {
        w
    }
}

/// The code read off a vertex: its lower-level word rotated to start at the
/// zero of color 0, with zeros replaced by their colors and ones by stars.
pub fn delta(w: Word) -> Result<TreeCode, LexicalError> {
    let lower = lower_of(w);
    let start = zero_colors(lower)?
        .into_iter()
        .find(|&(_, c)| c == 0)
        .map(|(x, _)| x)
        .expect("every lower word has a zero of color 0");
    let symbols = coded_word(lower.rotate_to(start))?;
    Ok(TreeCode::new(symbols)?)
}

/// The germ of a vertex of M_k (or of its class).
pub fn germ_of_vertex(w: Word) -> Result<Germ, LexicalError> {
    Ok(uncastle(&delta(w)?)?)
}

pub fn germ_of_class(c: NecklaceClass) -> Result<Germ, LexicalError> {
    germ_of_vertex(c.canonical())
}

/// The upper word reached from the theta word of `g` along color `c`.
fn neighbor_word(g: &Germ, c: Color) -> Result<Word, LexicalError> {
    let k = g.k();
    if usize::from(c) > k {
        return Err(LexicalError::ColorOutOfRange { color: c, k });
    }
    let w = theta(g);
    let x = zero_colors(w)?
        .into_iter()
        .find(|&(_, col)| col == c)
        .map(|(x, _)| x)
        .expect("the zeros of a lower word carry every color once");
    Ok(w.flip(x))
}

/// The germ `g^c` adjacent to `g` in R_k along color `c`.
pub fn neighbor_germ(g: &Germ, c: Color) -> Result<Germ, LexicalError> {
    germ_of_vertex(neighbor_word(g, c)?)
}

/// All neighbors of `g`, indexed by color.
pub fn neighbors(g: &Germ) -> Result<Vec<Germ>, LexicalError> {
    let w = theta(g);
    let mut out = vec![None; g.k() + 1];
    for (x, c) in zero_colors(w)? {
        out[usize::from(c)] = Some(germ_of_vertex(w.flip(x))?);
    }
    Ok(out
        .into_iter()
        .map(|n| n.expect("the zeros of a lower word carry every color once"))
        .collect())
}

/// The neighbor along color `c` written as the coded word of the
/// complemented reversal of the upper endpoint (not rotated).
pub fn neighbor_code(g: &Germ, c: Color) -> Result<String, LexicalError> {
    let u = neighbor_word(g, c)?;
    Ok(symbols_to_string(&coded_word(u.aleph())?))
}

/// Re-rooting read on words: the germ of the reversed theta word.
pub fn theta_reroot_by_reversal(g: &Germ) -> Result<Germ, LexicalError> {
    germ_of_vertex(theta(g).reverse())
}
