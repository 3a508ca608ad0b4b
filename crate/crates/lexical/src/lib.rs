//! Lexical edge colors of the middle-levels graph, the induced
//! 1-factorization, germs of vertices and colored adjacency tables.

mod cat;
mod color;
mod delta;
mod direct;
mod factor;

pub use cat::{
    cat_table, expected_footer, preserved_index, s0_blocks, s0_sequence, s1_blocks, s1_sequence, CatTable,
};
pub use color::{
    color_at, color_upper, lexical_color, lexical_color_formula, zero_colors, Color, LatticePath,
};
pub use delta::{
    coded_word, delta, germ_of_class, germ_of_vertex, neighbor_code, neighbor_germ, neighbors,
    symbols_to_string, theta_reroot_by_reversal,
};
pub use direct::{neighbor_direct, neighbor_direct_suffix};
pub use factor::{colored_mk_pi, colored_rk, one_factorization};

use midlevels::MidlevelsError;
use thiserror::Error;
use treecodec::CodecError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LexicalError {
    #[error("word length {0} is even")]
    EvenLength(usize),
    #[error("word {word} does not have weight {expected}")]
    Weight { word: String, expected: usize },
    #[error("word {0} starts with 1")]
    LeadingOne(String),
    #[error("position {position} of {word} is not a zero")]
    NotAZero { word: String, position: usize },
    #[error("position {position} of {word} is not a one")]
    NotAOne { word: String, position: usize },
    #[error("color {color} out of range for k={k}")]
    ColorOutOfRange { color: Color, k: usize },
    #[error("colored adjacency tables need k >= 2, got {0}")]
    TableK(usize),
    #[error("sequence length must be positive")]
    EmptySequence,
    #[error("direct neighbors need 0 < p <= k, got p={color} for k={k}")]
    DirectColor { color: Color, k: usize },
    #[error("direct route for {germ} and p={color} gives {values:?}, which is not a germ")]
    DirectInfeasible {
        germ: String,
        color: Color,
        values: Vec<i64>,
    },
    #[error("direct route for {germ} and p={color} leaves the left part undetermined")]
    DirectUnderspecified { germ: String, color: Color },
    #[error(transparent)]
    Codec(#[from] CodecError),
    #[error(transparent)]
    Graph(#[from] MidlevelsError),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
