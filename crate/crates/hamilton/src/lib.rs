//! Hamilton cycles in the middle-levels graph: the 2-factor of colors 0
//! and 1, its cycles and their plane trees, 6-cycles joining them, and an
//! independent verifier.

mod factor;
mod glue;
mod hexagon;
mod verify;

pub use factor::{label_cycles, two_factor_w01, CycleDecomposition, CycleLabel};
pub use glue::{hamilton_cycle, merged_cycle, select_gluing, Gluing, HamiltonRun};
pub use hexagon::{chords, find_six_cycles, CycleDigraph, SixCycle};
pub use verify::{parse_certificate, verify_hamilton, write_certificate, Certificate, VerifyError};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HamiltonError {
    #[error(transparent)]
    Lexical(#[from] lexical::LexicalError),
    #[error(transparent)]
    Graph(#[from] midlevels::MidlevelsError),
    #[error("the cycle digraph is not connected: {reached} of {total} cycles reachable from the root")]
    Disconnected { reached: usize, total: usize },
    #[error("no edge-disjoint gluing set: merged {merged} of {total} cycles after {attempts} attempts")]
    NoGluing {
        merged: usize,
        total: usize,
        attempts: usize,
    },
    #[error("symmetric differences left {0} components")]
    NotSingleCycle(usize),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}
