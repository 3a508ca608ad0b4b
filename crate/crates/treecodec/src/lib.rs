//! Tree codes of k-germs (castling and its inverse), ordered trees, their
//! binary words, reflections and the re-rooting involution.

mod code;
mod reroot;
mod tree;
mod words;

pub use code::{castle, castle_step, uncastle, uncastle_trace, Symbol, TraceStep, TreeCode};
pub use reroot::{atoms, theta_reroot, AtomDecomposition, Piece};
pub use tree::{code_of_tree, tree_of_code, OrderedTree};
pub use words::{
    aleph, germ_of_tree, hat_aleph, hat_theta, reflect_phi, rotate_germ, theta, word_of_code, AnnotatedWord,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodecError {
    #[error("invalid symbol {0:?} in tree code")]
    BadSymbol(char),
    #[error("tree code length {0} is not 2k+1 with k >= 1")]
    Length(usize),
    #[error("label {color} exceeds k={k}")]
    ColorOutOfRange { color: usize, k: usize },
    #[error("label {0} occurs twice")]
    RepeatedColor(usize),
    #[error("label {0} is missing")]
    MissingColor(usize),
    #[error("first symbol is not 0")]
    FirstNotZero,
    #[error("the largest label is never followed by '*'")]
    TopNotFollowedByStar,
    #[error("'*' is followed by the largest label")]
    StarBeforeTop,
    #[error("label at position {position} is smaller than the label before it")]
    Descent { position: usize },
    #[error("prefix discipline violated at position {position}: not more labels than stars")]
    PrefixDiscipline { position: usize },
    #[error("castling level {level} out of range for k={k}")]
    Level { level: usize, k: usize },
    #[error("castling interior malformed at level {level}")]
    Interior { level: usize },
    #[error("code is well formed but is not produced by castling")]
    NotInImage,
}
