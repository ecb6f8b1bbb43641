//! Singularity tables and the factorizations compiled from them.
//!
//! JSON layout:
//!
//! ```json
//! {
//!   "name": "conic-line-A",
//!   "strands": 3,
//!   "components": [
//!     {"kind": "conic", "label": "C", "strands": [1, 2]},
//!     {"kind": "line", "label": "L", "strands": [3]}
//!   ],
//!   "singularities": [
//!     {"type": "tangency", "incident": ["C", "L"], "expr": "Z[2,3]^4"},
//!     {"type": "branch", "incident": ["C"], "expr": "Z[1,2]^{Z[2,3]^2}"}
//!   ]
//! }
//! ```
//!
//! `type` is one of `branch`, `node`, `node-at-infinity`, `cusp`,
//! `tangency`, `multipoint` (the last with `"k": <points>`). An optional
//! `count` says how many singularities of that type one entry stands for,
//! e.g. the three cusps of a regenerated tangency. `expr` uses the
//! half-twist grammar of [`crate::halftwist::parse_expr`].

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::word::BraidWord;
use crate::error::{Error, Result};
use crate::halftwist::parse_expr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SingularityType {
    Branch,
    Node,
    NodeAtInfinity,
    Cusp,
    Tangency,
    MultiPoint(usize),
}

impl SingularityType {
    /// Exponent of the local half-twist.
    pub fn epsilon(self) -> i64 {
        match self {
            SingularityType::Branch => 1,
            SingularityType::Node | SingularityType::NodeAtInfinity | SingularityType::MultiPoint(_) => 2,
            SingularityType::Cusp => 3,
            SingularityType::Tangency => 4,
        }
    }

    /// Contribution to the exponent sum of the product.
    pub fn degree(self) -> i64 {
        match self {
            SingularityType::MultiPoint(k) => (k * (k - 1)) as i64,
            other => other.epsilon(),
        }
    }

    pub fn name(self) -> String {
        match self {
            SingularityType::Branch => "branch".into(),
            SingularityType::Node => "node".into(),
            SingularityType::NodeAtInfinity => "node-at-infinity".into(),
            SingularityType::Cusp => "cusp".into(),
            SingularityType::Tangency => "tangency".into(),
            SingularityType::MultiPoint(k) => format!("{k}-point"),
        }
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    Line,
    Conic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSpec {
    pub kind: ComponentKind,
    pub label: String,
    /// Strands occupied by the component on the typical fiber, if declared.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub strands: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularitySpec {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default)]
    pub incident: Vec<String>,
    pub expr: String,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub count: u32,
}

fn one() -> u32 {
    1
}

fn is_one(c: &u32) -> bool {
    *c == 1
}

impl SingularitySpec {
    pub fn new(kind: &str, incident: &[&str], expr: &str) -> Self {
        SingularitySpec {
            kind: kind.to_string(),
            k: None,
            incident: incident.iter().map(|s| s.to_string()).collect(),
            expr: expr.to_string(),
            count: 1,
        }
    }

    pub fn with_count(mut self, count: u32) -> Self {
        self.count = count;
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    fn singularity_type(&self, path: &str) -> Result<SingularityType> {
        let t = match self.kind.as_str() {
            "branch" => SingularityType::Branch,
            "node" => SingularityType::Node,
            "node-at-infinity" => SingularityType::NodeAtInfinity,
            "cusp" => SingularityType::Cusp,
            "tangency" => SingularityType::Tangency,
            "multipoint" => {
                let k = self.k.ok_or_else(|| Error::Config { path: format!("{path}.k"), msg: "multipoint needs k".into() })?;
                match k {
                    0..=2 => {
                        return Err(Error::Config { path: format!("{path}.k"), msg: format!("a {k}-point is not a multipoint") })
                    }
                    3 => SingularityType::MultiPoint(3),
                    _ => return Err(Error::Unsupported(format!("{k}-points ({path})"))),
                }
            }
            other => {
                return Err(Error::Config { path: format!("{path}.type"), msg: format!("unknown singularity type `{other}`") })
            }
        };
        Ok(t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Configuration {
    #[serde(default)]
    pub name: String,
    pub strands: usize,
    #[serde(default)]
    pub components: Vec<ComponentSpec>,
    pub singularities: Vec<SingularitySpec>,
}

/// One compiled singularity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub label: String,
    pub kind: SingularityType,
    pub count: u32,
    pub expr: String,
    pub word: BraidWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub strands: usize,
    pub factors: Vec<Factor>,
}

impl Configuration {
    pub fn from_json(text: &str) -> Result<Configuration> {
        serde_json::from_str(text).map_err(|e| Error::Config { path: format!("line {} column {}", e.line(), e.column()), msg: e.to_string() })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("configurations serialize")
    }

    /// Checks labels, indices and exponent sums, and compiles every entry.
    pub fn factorization(&self) -> Result<Factorization> {
        let n = self.strands;
        if n == 0 {
            return Err(Error::Config { path: "strands".into(), msg: "must be positive".into() });
        }
        let mut labels = BTreeSet::new();
        for (ci, c) in self.components.iter().enumerate() {
            if !labels.insert(c.label.as_str()) {
                return Err(Error::Config { path: format!("components[{ci}].label"), msg: format!("duplicate label `{}`", c.label) });
            }
            if let Some(&s) = c.strands.iter().find(|&&s| s == 0 || s > n) {
                return Err(Error::Config { path: format!("components[{ci}].strands"), msg: format!("strand {s} outside 1..={n}") });
            }
        }
        let mut factors = Vec::with_capacity(self.singularities.len());
        for (si, s) in self.singularities.iter().enumerate() {
            let path = format!("singularities[{si}]");
            let kind = s.singularity_type(&path)?;
            let mut allowed = BTreeSet::new();
            let mut declared = true;
            for label in &s.incident {
                let c = self.components.iter().find(|c| &c.label == label).ok_or_else(|| Error::Config {
                    path: format!("{path}.incident"),
                    msg: format!("unknown component `{label}`"),
                })?;
                declared &= !c.strands.is_empty();
                allowed.extend(c.strands.iter().copied());
            }
            let expr = parse_expr(&s.expr).map_err(|e| Error::Config { path: format!("{path}.expr"), msg: e.to_string() })?;
            let word = expr.compile(n).map_err(|e| match e {
                Error::Unsupported(_) => e,
                other => Error::Config { path: format!("{path}.expr"), msg: other.to_string() },
            })?;
            if declared && !s.incident.is_empty() {
                if let Some(base) = expr.base_strands() {
                    if let Some(bad) = base.iter().find(|b| !allowed.contains(b)) {
                        return Err(Error::Config {
                            path: format!("{path}.expr"),
                            msg: format!("strand {bad} does not belong to the incident components"),
                        });
                    }
                }
            }
            let want = kind.degree() * s.count as i64;
            if word.exponent_sum() != want {
                return Err(Error::Config {
                    path: format!("{path}.expr"),
                    msg: format!("exponent sum {} but {} x {} contributes {want}", word.exponent_sum(), s.count, kind),
                });
            }
            let label = if s.incident.is_empty() {
                format!("{} {}", si + 1, kind)
            } else {
                format!("{} {} {}", si + 1, kind, s.incident.join("-"))
            };
            factors.push(Factor { label, kind, count: s.count, expr: s.expr.clone(), word });
        }
        Ok(Factorization { strands: n, factors })
    }
}

impl Factorization {
    pub fn new(strands: usize, factors: Vec<Factor>) -> Self {
        Factorization { strands, factors }
    }

    /// Product of the local factors in order, free-reduced. Factors at
    /// infinity are skipped.
    pub fn table_product(&self) -> BraidWord {
        self.product_where(|f| f.kind != SingularityType::NodeAtInfinity)
    }

    /// Product of every factor, including those at infinity.
    pub fn full_product(&self) -> BraidWord {
        self.product_where(|_| true)
    }

    fn product_where(&self, keep: impl Fn(&Factor) -> bool) -> BraidWord {
        let words = self.factors.iter().filter(|f| keep(f)).map(|f| &f.word);
        BraidWord::product(self.strands, words).expect("factors share the strand count").free_reduce()
    }

    /// Sum of the expected contributions of the local factors.
    pub fn expected_degree(&self) -> i64 {
        self.factors
            .iter()
            .filter(|f| f.kind != SingularityType::NodeAtInfinity)
            .map(|f| f.kind.degree() * f.count as i64)
            .sum()
    }
}
