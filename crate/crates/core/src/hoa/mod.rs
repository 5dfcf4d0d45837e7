//! Reading and writing the Hanoi Omega-Automata format, restricted to
//! deterministic automata with explicit or implicit labels, plus a DOT
//! rendering for inspection.

mod dot;
mod emit;
mod lexer;
mod parse;

pub use dot::to_dot;
pub use emit::{to_hoa, to_hoa_with, EmitOptions};
pub use parse::parse_hoa;
