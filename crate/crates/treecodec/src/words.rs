use std::fmt;

use germs::Germ;
use midlevels::Word;

use crate::code::{castle, Symbol, TreeCode};
use crate::tree::OrderedTree;
use crate::{uncastle, CodecError};

/// Binary word of a code: labels become 0, stars become 1.
pub fn word_of_code(code: &TreeCode) -> Word {
    let bits: Vec<bool> = code.symbols().iter().map(|s| s.is_star()).collect();
    Word::from_bits(&bits)
}

/// The weight-k word of a germ.
pub fn theta(g: &Germ) -> Word {
    word_of_code(&castle(g))
}

/// Complemented reversal.
pub fn aleph(w: Word) -> Word {
    w.aleph()
}

/// A word whose positions carry the symbols of a tree code, shown as
/// `0_0 0_1 1_* ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedWord {
    pub word: Word,
    pub subscripts: Vec<Symbol>,
}

impl fmt::Display for AnnotatedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (b, s) in self.word.bits().zip(&self.subscripts) {
            write!(f, "{}_{s}", u8::from(b))?;
        }
        Ok(())
    }
}

impl AnnotatedWord {
    /// Complemented reversal; each subscript stays with its bit.
    pub fn aleph(&self) -> AnnotatedWord {
        AnnotatedWord {
            word: self.word.aleph(),
            subscripts: self.subscripts.iter().rev().copied().collect(),
        }
    }
}

pub fn hat_theta(g: &Germ) -> AnnotatedWord {
    let code = castle(g);
    AnnotatedWord {
        word: word_of_code(&code),
        subscripts: code.symbols().to_vec(),
    }
}

pub fn hat_aleph(g: &Germ) -> AnnotatedWord {
    hat_theta(g).aleph()
}

/// Germ of the mirror image of the tree of `g`.
pub fn reflect_phi(g: &Germ) -> Germ {
    let tree = OrderedTree::from_code(&castle(g)).mirror();
    uncastle(&tree.code()).expect("mirrored trees re-encode to valid codes")
}

/// Germ of the tree obtained by moving the root to its leftmost child.
pub fn rotate_germ(g: &Germ) -> Germ {
    let tree = OrderedTree::from_code(&castle(g)).root_rotate();
    uncastle(&tree.code()).expect("rotated trees re-encode to valid codes")
}

/// Germ of an arbitrary ordered tree.
pub fn germ_of_tree(tree: &OrderedTree) -> Result<Germ, CodecError> {
    uncastle(&tree.code())
}
