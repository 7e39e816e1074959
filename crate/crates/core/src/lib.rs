//! Exact computation of chord-diagram weight systems (Lie-algebraic,
//! chromatic and coloring based), the chromatic algebra, and the framed
//! skein polynomials Υ, Homfly and Kauffman, together with the machinery to
//! cross-check them against each other.

pub mod cache;
pub mod chromatic;
pub mod diagrams;
pub mod error;
pub mod lambda_chi;
pub mod oracle;
pub mod par;
pub mod polycore;
pub mod skein;
pub mod stateweights;
pub mod verify;

pub use error::{Error, Result};
pub use par::Execution;
pub use polycore::{MPoly, Rat, VarId};
