//! PD-coded framed link diagrams and the skein polynomials Υ, Homfly and
//! Kauffman, with the diagonal extraction that recovers Υ from the latter two.

mod corpus;
mod diagonal;
mod diagram;
mod eval;

pub use corpus::{corpus, corpus_knot, positive_hopf, CORPUS_NAMES};
pub use diagonal::{
    diagonal_table, homfly_diagonal, kauffman_diagonal, upsilon_series, DiagonalTable, SkeinFamily, MAX_DIAGONAL_ORDER,
};
pub use diagram::{ComponentPath, Crossing, LinkDiagram};
pub use eval::{homfly, homfly_loop_factor, kauffman, kauffman_loop_factor, upsilon, SkeinEvaluator};
