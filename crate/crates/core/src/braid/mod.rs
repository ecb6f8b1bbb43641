//! Braid words in `B_n` and the group-level operations on them.

pub mod artin;
pub mod garside;
pub mod markov;
pub mod perm;
pub mod solver;
pub mod text;
pub mod word;

pub use garside::NormalForm;
pub use markov::markov_destabilize;
pub use perm::Permutation;
pub use solver::{solver, solvers, WordProblemSolver};
pub use text::parse_word;
pub use word::{BraidWord, Letter};
