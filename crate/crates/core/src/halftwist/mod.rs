//! Half-twist notation (`Z_{ij}`, `Z̄_{ij}`, chains, doubled indices) compiled
//! to braid words.
//!
//! Conjugation follows `a^b = b⁻¹ a b`. For a conjugator written as a product
//! `a^{b c}` this is `(bc)⁻¹ a (bc)`, so `b` acts outermost. The convention is
//! fixed by matching worked expansions, not derived.

pub mod expr;
pub mod parse;

pub use expr::{compile, compile_chain, compile_z, doubled_strand, z_expansions, DoubledIndex, HalfTwistExpr, Point};
pub use parse::parse_expr;
