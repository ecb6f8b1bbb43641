//! Registry of built-in local configurations.

use once_cell::sync::Lazy;

use crate::braid::word::BraidWord;
use crate::error::{Error, Result};
use crate::halftwist::parse_expr;
use crate::monodromy::builders::{full_twist, generic_line_factorization};
use crate::monodromy::config::{ComponentKind, ComponentSpec, Configuration, Factorization, SingularitySpec};

pub trait LocalConfiguration: Send + Sync {
    fn name(&self) -> &str;

    fn description(&self) -> &str;

    fn factorization(&self) -> Result<Factorization>;

    /// The simplified product this configuration is known to multiply to.
    fn stated_product(&self) -> Result<Option<BraidWord>>;

    /// The singularity table, when there is one.
    fn configuration(&self) -> Option<Configuration> {
        None
    }
}

struct Sing {
    kind: &'static str,
    incident: &'static [&'static str],
    expr: &'static str,
    count: u32,
}

const fn s(kind: &'static str, incident: &'static [&'static str], expr: &'static str) -> Sing {
    Sing { kind, incident, expr, count: 1 }
}

const fn sn(kind: &'static str, incident: &'static [&'static str], expr: &'static str, count: u32) -> Sing {
    Sing { kind, incident, expr, count }
}

/// A configuration given by its table of singularities.
pub struct Tabulated {
    name: &'static str,
    description: &'static str,
    strands: usize,
    components: &'static [(ComponentKind, &'static str, &'static [usize])],
    singularities: &'static [Sing],
    stated: Option<&'static str>,
}

impl LocalConfiguration for Tabulated {
    fn name(&self) -> &str {
        self.name
    }

    fn description(&self) -> &str {
        self.description
    }

    fn configuration(&self) -> Option<Configuration> {
        Some(Configuration {
            name: self.name.to_string(),
            strands: self.strands,
            components: self
                .components
                .iter()
                .map(|&(kind, label, strands)| ComponentSpec { kind, label: label.to_string(), strands: strands.to_vec() })
                .collect(),
            singularities: self
                .singularities
                .iter()
                .map(|x| {
                    let spec = SingularitySpec::new(x.kind, x.incident, x.expr).with_count(x.count);
                    if x.kind == "multipoint" {
                        spec.with_k(3)
                    } else {
                        spec
                    }
                })
                .collect(),
        })
    }

    fn factorization(&self) -> Result<Factorization> {
        self.configuration().expect("tabulated").factorization()
    }

    fn stated_product(&self) -> Result<Option<BraidWord>> {
        self.stated.map(|t| parse_expr(t)?.compile(self.strands)).transpose()
    }
}

/// `m` lines through a point, perturbed to general position.
pub struct GenericLines {
    name: String,
    m: usize,
}

impl GenericLines {
    pub fn new(m: usize) -> Self {
        GenericLines { name: format!("generic-lines-{m}"), m }
    }
}

impl LocalConfiguration for GenericLines {
    fn name(&self) -> &str {
        &self.name
    }

    fn description(&self) -> &str {
        "lines in general position; the product is the full twist"
    }

    fn factorization(&self) -> Result<Factorization> {
        generic_line_factorization(self.m)
    }

    fn stated_product(&self) -> Result<Option<BraidWord>> {
        full_twist(self.m).map(Some)
    }
}

use ComponentKind::{Conic, Line};

static TABULATED: &[Tabulated] = &[
    Tabulated {
        name: "triangle",
        description: "three lines meeting in three nodes",
        strands: 3,
        components: &[(Line, "L1", &[1]), (Line, "L2", &[2]), (Line, "L3", &[3])],
        singularities: &[
            s("node", &["L1", "L2"], "Z[1,2]^2"),
            s("node", &["L1", "L3"], "Zb[1,3]^2"),
            s("node", &["L2", "L3"], "Z[2,3]^2"),
        ],
        stated: Some("s1 s2^2 s1 s2^2"),
    },
    Tabulated {
        name: "four-lines",
        description: "four lines with a triple point and a node at infinity",
        strands: 4,
        components: &[(Line, "L1", &[1]), (Line, "L2", &[2]), (Line, "L3", &[3]), (Line, "L4", &[4])],
        singularities: &[
            s("node", &["L2", "L3"], "Z[2,3]^2"),
            s("node", &["L2", "L4"], "Zb[2,4]^2"),
            s("multipoint", &["L1", "L3", "L4"], "Z[1,3,4]^2"),
            s("node-at-infinity", &["L1", "L2"], "Z[1,2]^2"),
        ],
        stated: Some("s2 s3 s1 s2 (s1 s2 s3)^2"),
    },
    Tabulated {
        name: "conic-line-A",
        description: "conic tangent to a line, conic strands first",
        strands: 3,
        components: &[(Conic, "C", &[1, 2]), (Line, "L", &[3])],
        singularities: &[s("tangency", &["C", "L"], "Z[2,3]^4"), s("branch", &["C"], "Z[1,2]^{Z[2,3]^2}")],
        stated: Some("s2^2 s1 s2^2"),
    },
    Tabulated {
        name: "conic-line-B",
        description: "conic crossing a line in two nodes",
        strands: 3,
        components: &[(Conic, "C", &[1, 2]), (Line, "L", &[3])],
        singularities: &[
            s("node", &["C", "L"], "Z[2,3]^2"),
            s("node", &["C", "L"], "Z[1,3]^2"),
            s("branch", &["C"], "Z[1,2]"),
        ],
        stated: Some("s2 s1^2 s2 s1"),
    },
    Tabulated {
        name: "two-conics-A",
        description: "two tangent conics",
        strands: 4,
        components: &[(Conic, "C1", &[1, 2]), (Conic, "C2", &[3, 4])],
        singularities: &[
            s("tangency", &["C1", "C2"], "Z[2,3]^4"),
            s("branch", &["C2"], "Z[3,4]^{Z[2,3]^2}"),
            s("branch", &["C1"], "Z[1,2]^{Z[2,3]^2}"),
        ],
        stated: Some("s2^2 s3 s1 s2^2"),
    },
    Tabulated {
        name: "two-conics-B",
        description: "two conics crossing in four nodes",
        strands: 4,
        components: &[(Conic, "C1", &[1, 2]), (Conic, "C2", &[3, 4])],
        singularities: &[
            s("node", &["C1", "C2"], "Z[2,3]^2"),
            s("node", &["C1", "C2"], "Zb[2,4]^2"),
            s("node", &["C1", "C2"], "Z[1,3]^2"),
            s("node", &["C1", "C2"], "Z[1,4]^2^{Z[3,4]^-2}"),
            s("branch", &["C2"], "Z[3,4]"),
            s("branch", &["C1"], "Z[1,2]"),
        ],
        stated: Some("s2 s3^2 s1^2 s2 s3 s1 s2^2"),
    },
    Tabulated {
        name: "2pt-A",
        description: "regenerated 2-point, conic on the lower line",
        strands: 4,
        components: &[(Conic, "C", &[1, 2]), (Line, "L", &[3, 4])],
        singularities: &[
            sn("cusp", &["C", "L"], "Z[1',2]^3^{Z[2,2']} Z[1',2]^3 Z[1',2]^3^{Z[2,2']^-1}", 3),
            s("branch", &["C"], "Z[1,1']^{Z[1',2 2']^2}"),
        ],
        stated: Some("s2 s3^2 s2 (s1 s3) s2 s3^2 s2"),
    },
    Tabulated {
        name: "2pt-B",
        description: "regenerated 2-point, conic on the upper line",
        strands: 4,
        components: &[(Line, "L", &[1, 2]), (Conic, "C", &[3, 4])],
        singularities: &[
            sn("cusp", &["L", "C"], "Z[1',2]^3^{Z[1,1']} Z[1',2]^3 Z[1',2]^3^{Z[1,1']^-1}", 3),
            s("branch", &["C"], "Z[2,2']^{Z[2,1 1']^2}"),
        ],
        stated: Some("s2 s1^2 s2 (s1 s3) s2 s1^2 s2"),
    },
    Tabulated {
        name: "3pt-type1-A",
        description: "regenerated 3-point with one diagonal, conic on the last line",
        strands: 6,
        components: &[(Line, "L1", &[1, 2]), (Line, "L2", &[3, 4]), (Conic, "C", &[5, 6])],
        singularities: &[
            sn("cusp", &["C", "L2"], "s4^3 (s4^-1 s3^3 s4) (s3^2 s4^3 s3^-2)", 3),
            sn(
                "node",
                &["L1", "L2"],
                "(s4^-2 s3^-1 s2^2 s3 s4^2) (s3 s4^-2 s3^-1 s2^2 s3 s4^2 s3^-1) \
                 (s4^-2 s3^-1 s2^-1 s1^2 s2 s3 s4^2) (s3 s4^-2 s3^-1 s2^-1 s1^2 s2 s3 s4^2 s3^-1)",
                4,
            ),
            sn("cusp", &["C", "L1"], "(s4^-1 s3^-1 s2^3 s3 s4) (s4^-1 s3^-1 s2^-1 s1^3 s2 s3 s4) (s1^2 s4^-1 s3^-1 s2^3 s3 s4 s1^-2)", 3),
            s("branch", &["C"], "s4^-1 s3^-1 s2^-1 s1^-2 s2^-1 s3^-1 s4^-1 s5 s4 s3 s2 s1^2 s2 s3 s4"),
        ],
        stated: Some("s4 s3^2 s4 s2 s3 s1 s2 s4 s3^2 s2 s4 s3 s2 s1 s2 s3 s5 s4 s3 s2 s1 s1 s2 s3 s4"),
    },
    Tabulated {
        name: "3pt-type1-B",
        description: "regenerated 3-point with one diagonal, conic on the middle line",
        strands: 6,
        components: &[(Line, "L1", &[1, 2]), (Conic, "C", &[3, 4]), (Line, "L3", &[5, 6])],
        singularities: &[
            sn("cusp", &["L1", "C"], "s2^3 (s2^-1 s1^3 s2) (s1^2 s2^3 s1^-2)", 3),
            sn("cusp", &["C", "L3"], "(s5^-1 s4^3 s5) s4^3 (s5 s4^3 s5^-1)", 3),
            s("branch", &["C"], "s4^-1 s5^-2 s4^-1 s2^-1 s1^-2 s2^-1 s3 s2 s1^2 s2 s4 s5^2 s4"),
            sn(
                "node",
                &["L1", "L3"],
                "(s5^-1 s4^-1 s3 s2^2 s3^-1 s4 s5) (s4^-1 s3 s2^2 s3^-1 s4) \
                 (s5^-1 s4^-1 s3 s2^-1 s1^2 s2 s3^-1 s4 s5) (s4^-1 s3 s2^-1 s1^2 s2 s3^-1 s4)",
                4,
            ),
        ],
        stated: Some("s4 s3 s2 s1 s5 s4 s3 s2 s1 s2 s3 s4 s5 s1 s2 s3 s4 s3 s2 s1 s3 s2 s3 s2 s1 s3 s2"),
    },
    Tabulated {
        name: "3pt-type1-C",
        description: "regenerated 3-point with one diagonal, conic on the first line",
        strands: 6,
        components: &[(Conic, "C", &[1, 2]), (Line, "L2", &[3, 4]), (Line, "L3", &[5, 6])],
        singularities: &[
            sn("cusp", &["C", "L2"], "(s3^-1 s2^3 s3) s2^3 (s3 s2^3 s3^-1)", 3),
            sn(
                "node",
                &["L2", "L3"],
                "(s5^-1 s3 s2^-2 s3^-1 s4^2 s3 s2^2 s3^-1 s5) (s3 s2^-2 s3^-1 s4^2 s3 s2^2 s3^-1) \
                 (s5^-1 s3^2 s2^-2 s3^-1 s4^2 s3 s2^2 s3^-2 s5) (s3^2 s2^-2 s3^-1 s4^2 s3 s2^2 s3^-2)",
                4,
            ),
            sn("cusp", &["C", "L3"], "(s5^-1 s4 s3 s2^3 s3^-1 s4^-1 s5) (s4 s3 s2^3 s3^-1 s4^-1) (s5 s4 s3 s2^3 s3^-1 s4^-1 s5^-1)", 3),
            s("branch", &["C"], "s2^-1 s3^-1 s4^-1 s5^-2 s4^-1 s3^-1 s2^-1 s1 s2 s3 s4 s5^2 s4 s3 s2"),
        ],
        stated: None,
    },
    Tabulated {
        name: "3pt-type2",
        description: "regenerated 3-point with two diagonals",
        strands: 6,
        components: &[(Conic, "C1", &[1, 2]), (Line, "L", &[3, 4]), (Conic, "C2", &[5, 6])],
        singularities: &[
            sn("cusp", &["L", "C2"], "s4^3 (s4^-1 s3^3 s4) (s3^2 s4^3 s3^-2)", 3),
            s("branch", &["C2"], "s4^-1 s3^-2 s4^-1 s5 s4 s3^2 s4"),
            sn(
                "node",
                &["C1", "C2"],
                "(s5^-1 s4^-1 s3^-1 s2^2 s3 s4 s5) (s5^-1 s4^-1 s3^-1 s2^-1 s1^2 s2 s3 s4 s5) \
                 (s4^-1 s3^-2 s4^-2 s3^-1 s2^2 s3 s4^2 s3^2 s4) (s4^-1 s3^-2 s4^-2 s3^-1 s2^-1 s1^2 s2 s3 s4^2 s3^2 s4)",
                4,
            ),
            sn("cusp", &["C1", "L"], "(s3^-1 s2^3 s3) s2^3 (s3 s2^3 s3^-1)", 3),
            s("branch", &["C1"], "s2^-1 s3^-2 s2^-1 s1 s2 s3^2 s2"),
        ],
        stated: Some("s1 s2 s5 s4 s3 s5 s2 s3 s1 s2 (s2 s3 s4 s5) s5 s4^2 s5 s3 s4^2 s3 s4 s2 s3 s4^2 s3"),
    },
];

static REGISTRY: Lazy<Vec<Box<dyn LocalConfiguration>>> = Lazy::new(|| {
    let mut v: Vec<Box<dyn LocalConfiguration>> = Vec::new();
    for t in TABULATED {
        v.push(Box::new(Tabulated { ..*t }));
    }
    for m in 3..=5 {
        v.push(Box::new(GenericLines::new(m)));
    }
    v
});

pub fn builtins() -> &'static [Box<dyn LocalConfiguration>] {
    &REGISTRY
}

pub fn builtin(name: &str) -> Result<&'static dyn LocalConfiguration> {
    REGISTRY
        .iter()
        .find(|c| c.name() == name)
        .map(|b| b.as_ref())
        .ok_or_else(|| Error::UnknownName { kind: "configuration", name: name.to_string() })
}
