//! The middle-levels graph M_k, its rotation quotient and its dihedral
//! quotient R_k.

mod graph;
mod word;

pub use graph::{
    build_mk, build_mk_pi, build_rk, classify, lower_classes, mk_order, mk_vertices, quotient_edges,
    reflect_quotient_edge, ColoredGraph, Edge, EdgeKind,
};
pub use word::{words_of_weight, Dihedral, NecklaceClass, Word, MAX_LEN};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MidlevelsError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("word of length {0} does not fit in 63 bits")]
    WordTooLong(usize),
    #[error("invalid bit {0:?}")]
    BadBit(char),
    #[error("k={k} exceeds the default bound {bound}; pass --unsafe-large to override")]
    KBound { k: usize, bound: usize },
    #[error("estimated {needed} bytes exceeds the memory budget of {budget} bytes")]
    Memory { needed: u64, budget: u64 },
    #[error("cannot parse memory budget {0:?}")]
    BadBudget(String),
}

/// Resource limits for graph builds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_k: usize,
    pub max_bytes: u64,
    pub unsafe_large: bool,
}

pub const DEFAULT_MAX_K: usize = 9;
pub const DEFAULT_MAX_BYTES: u64 = 8 << 30;

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_k: DEFAULT_MAX_K,
            max_bytes: DEFAULT_MAX_BYTES,
            unsafe_large: false,
        }
    }
}

impl Budget {
    /// Reads `MIDLEVELS_MAX_MEM` (bytes, optional K/M/G suffix) if set.
    pub fn from_env() -> Result<Self, MidlevelsError> {
        let mut b = Budget::default();
        if let Ok(s) = std::env::var("MIDLEVELS_MAX_MEM") {
            b.max_bytes = parse_bytes(&s)?;
        }
        Ok(b)
    }

    pub fn with_max_k(self, max_k: usize) -> Self {
        Budget { max_k, ..self }
    }

    pub fn unsafe_large(self, on: bool) -> Self {
        Budget {
            unsafe_large: on,
            ..self
        }
    }

    pub fn admit(&self, k: usize, needed: u64) -> Result<(), MidlevelsError> {
        if self.unsafe_large {
            return Ok(());
        }
        if k > self.max_k {
            return Err(MidlevelsError::KBound { k, bound: self.max_k });
        }
        if needed > self.max_bytes {
            return Err(MidlevelsError::Memory {
                needed,
                budget: self.max_bytes,
            });
        }
        Ok(())
    }
}

pub fn parse_bytes(s: &str) -> Result<u64, MidlevelsError> {
    let t = s.trim();
    let (digits, shift) = match t.chars().last().map(|c| c.to_ascii_uppercase()) {
        Some('K') => (&t[..t.len() - 1], 10),
        Some('M') => (&t[..t.len() - 1], 20),
        Some('G') => (&t[..t.len() - 1], 30),
        _ => (t, 0),
    };
    digits
        .trim()
        .parse::<u64>()
        .ok()
        .and_then(|v| v.checked_mul(1 << shift))
        .ok_or_else(|| MidlevelsError::BadBudget(s.to_string()))
}
