//! Links obtained by closing braids and their invariants.

pub mod bracket;
pub mod closure;
pub mod jones;
pub mod poly;
pub mod summary;

pub use bracket::{engine, engines, kauffman_bracket, BracketEngine};
pub use closure::{closure_components, extract_component, linking_data, linking_matrix, same_up_to_relabeling};
pub use jones::{cable, jones, jones_with, torus_braid, Cable, CableSpec};
pub use poly::LaurentPoly;
pub use summary::{atlas_names, half_key, identify, summarize, summarize_with, LinkSummary};
