//! Planar degeneration diagrams: vertices on the integer lattice joined by
//! the lines along which planes meet.
//!
//! JSON layout, with edge endpoints given as 0-based indices into `vertices`:
//!
//! ```json
//! {
//!   "vertices": [[0,0], [1,0], [2,0], [0,1], [1,1], [2,1]],
//!   "edges": [[0, 4, "diag"], [1, 4, "vert"], [1, 5, "diag"]],
//!   "order": [0, 1, 2, 3, 4, 5]
//! }
//! ```
//!
//! Only lines inside the surface are listed. `order` is optional and
//! overrides the lexicographic vertex order (smallest first).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Diag,
    Horiz,
    Vert,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerationDiagram {
    pub vertices: Vec<(i64, i64)>,
    pub edges: Vec<(usize, usize, EdgeKind)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<usize>>,
}

/// Which local picture a vertex regenerates from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LocalCase {
    /// No singular point.
    Smooth,
    TwoPointA,
    TwoPointB,
    TypeOneA,
    TypeOneB,
    TypeOneC,
    TypeTwo,
}

impl LocalCase {
    /// Built-in configuration regenerating this case.
    pub fn configuration_name(self) -> Option<&'static str> {
        match self {
            LocalCase::Smooth => None,
            LocalCase::TwoPointA => Some("2pt-A"),
            LocalCase::TwoPointB => Some("2pt-B"),
            LocalCase::TypeOneA => Some("3pt-type1-A"),
            LocalCase::TypeOneB => Some("3pt-type1-B"),
            LocalCase::TypeOneC => Some("3pt-type1-C"),
            LocalCase::TypeTwo => Some("3pt-type2"),
        }
    }
}

impl fmt::Display for LocalCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LocalCase::Smooth => "smooth",
            LocalCase::TwoPointA => "2-point case A",
            LocalCase::TwoPointB => "2-point case B",
            LocalCase::TypeOneA => "3-point type I case A",
            LocalCase::TypeOneB => "3-point type I case B",
            LocalCase::TypeOneC => "3-point type I case C",
            LocalCase::TypeTwo => "3-point type II",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexClass {
    /// 0-based vertex index.
    pub vertex: usize,
    /// Number of lines through the vertex.
    pub k: usize,
    pub case: LocalCase,
}

impl DegenerationDiagram {
    pub fn new(vertices: Vec<(i64, i64)>, edges: Vec<(usize, usize, EdgeKind)>) -> Result<Self> {
        let d = DegenerationDiagram { vertices, edges, order: None };
        d.validate()?;
        Ok(d)
    }

    pub fn with_order(mut self, order: Vec<usize>) -> Result<Self> {
        self.order = Some(order);
        self.validate()?;
        Ok(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let d: DegenerationDiagram = serde_json::from_str(text)
            .map_err(|e| Error::Config { path: format!("line {} column {}", e.line(), e.column()), msg: e.to_string() })?;
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        let n = self.vertices.len();
        let mut seen = BTreeSet::new();
        for (k, v) in self.vertices.iter().enumerate() {
            if !seen.insert(*v) {
                return Err(Error::InvalidDiagram(format!("vertex {k} repeats position {v:?}")));
            }
        }
        let mut lines = BTreeSet::new();
        for (k, &(a, b, _)) in self.edges.iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::InvalidDiagram(format!("edge {k} uses a vertex outside 0..{n}")));
            }
            if a == b {
                return Err(Error::InvalidDiagram(format!("edge {k} is a loop")));
            }
            if !lines.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidDiagram(format!("edge {k} is listed twice")));
            }
        }
        if let Some(order) = &self.order {
            let set: BTreeSet<usize> = order.iter().copied().collect();
            if order.len() != n || set.len() != n || set.iter().any(|&v| v >= n) {
                return Err(Error::InvalidDiagram("order must list every vertex once".into()));
            }
        }
        Ok(())
    }

    /// Vertex indices from smallest to largest: by `y`, then `x`, unless an
    /// explicit order was given.
    pub fn lex_order_vertices(&self) -> Vec<usize> {
        if let Some(o) = &self.order {
            return o.clone();
        }
        let mut idx: Vec<usize> = (0..self.vertices.len()).collect();
        idx.sort_by_key(|&k| (self.vertices[k].1, self.vertices[k].0));
        idx
    }

    /// Rank of each vertex in the vertex order.
    pub fn vertex_ranks(&self) -> Vec<usize> {
        let mut rank = vec![0; self.vertices.len()];
        for (r, v) in self.lex_order_vertices().into_iter().enumerate() {
            rank[v] = r;
        }
        rank
    }

    fn line_key(&self, rank: &[usize], e: usize) -> (usize, usize) {
        let (a, b, _) = self.edges[e];
        let (ra, rb) = (rank[a], rank[b]);
        (ra.max(rb), ra.min(rb))
    }

    /// Edge indices from smallest to largest: by the larger endpoint, then
    /// the smaller one.
    pub fn lex_order_lines(&self) -> Vec<usize> {
        let rank = self.vertex_ranks();
        let mut idx: Vec<usize> = (0..self.edges.len()).collect();
        idx.sort_by_key(|&e| self.line_key(&rank, e));
        idx
    }

    /// Edges through a vertex.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.edges[e].0 == v || self.edges[e].1 == v).collect()
    }

    /// Classifies one vertex. Vertices on four or more lines are reported as
    /// unsupported.
    pub fn classify_vertex(&self, v: usize) -> Result<VertexClass> {
        if v >= self.vertices.len() {
            return Err(Error::InvalidDiagram(format!("no vertex {v}")));
        }
        let lines = self.incident(v);
        let k = lines.len();
        let rank = self.vertex_ranks();
        let case = match k {
            0 | 1 => LocalCase::Smooth,
            2 => {
                let diag = lines.iter().filter(|&&e| self.edges[e].2 == EdgeKind::Diag).count();
                if diag != 1 {
                    return Err(Error::InvalidDiagram(format!("2-point at vertex {v} needs exactly one diagonal")));
                }
                // the diagonal's plane carries the conic
                let (conic, other) =
                    if self.edges[lines[0]].2 == EdgeKind::Diag { (lines[0], lines[1]) } else { (lines[1], lines[0]) };
                if self.line_key(&rank, conic) < self.line_key(&rank, other) {
                    LocalCase::TwoPointA
                } else {
                    LocalCase::TwoPointB
                }
            }
            3 => {
                let diags: Vec<usize> = lines.iter().copied().filter(|&e| self.edges[e].2 == EdgeKind::Diag).collect();
                match diags.len() {
                    1 => {
                        let mut sorted = lines.clone();
                        sorted.sort_by_key(|&e| self.line_key(&rank, e));
                        match sorted.iter().position(|&e| e == diags[0]) {
                            Some(2) => LocalCase::TypeOneA,
                            Some(1) => LocalCase::TypeOneB,
                            _ => LocalCase::TypeOneC,
                        }
                    }
                    2 => LocalCase::TypeTwo,
                    n => {
                        return Err(Error::InvalidDiagram(format!("3-point at vertex {v} has {n} diagonals")));
                    }
                }
            }
            _ => return Err(Error::Unsupported(format!("{k}-point at vertex {v}"))),
        };
        Ok(VertexClass { vertex: v, k, case })
    }

    /// Classifies every vertex, in vertex order.
    pub fn classify_k_points(&self) -> Result<Vec<VertexClass>> {
        self.lex_order_vertices().into_iter().map(|v| self.classify_vertex(v)).collect()
    }
}
