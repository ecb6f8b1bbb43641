//! Braid monodromy factorizations of local singularity configurations.

pub mod builders;
pub mod builtin;
pub mod config;
pub mod diagram;

pub use builders::{
    full_twist, generic_line_factorization, node_as_nodes, regenerate_node, regenerate_tangency, NodeDoubling,
    TangencySide,
};
pub use builtin::{builtin, builtins, GenericLines, LocalConfiguration, Tabulated};
pub use config::{ComponentKind, ComponentSpec, Configuration, Factor, Factorization, SingularitySpec, SingularityType};
pub use diagram::{DegenerationDiagram, EdgeKind, LocalCase, VertexClass};
