use std::collections::BTreeMap;

use once_cell::sync::Lazy;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::braid::word::BraidWord;
use crate::error::Result;
use crate::link::bracket::BracketEngine;
use crate::link::closure::{closure_components, extract_component, linking_data};
use crate::link::jones::{jones_with, torus_braid};
use crate::link::poly::LaurentPoly;

/// Closure invariants of a braid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkSummary {
    pub strands: usize,
    pub component_count: usize,
    /// 1-based strand labels of each component.
    pub components: Vec<Vec<usize>>,
    pub linking_matrix: Vec<Vec<i64>>,
    pub self_writhes: Vec<i64>,
    #[serde(serialize_with = "half_keys")]
    pub jones: LaurentPoly,
    #[serde(serialize_with = "half_keys_list")]
    pub per_component_jones: Vec<LaurentPoly>,
    pub atlas_match: String,
}

/// Key for a Jones exponent stored in units of `t^{1/2}`.
pub fn half_key(e: i32) -> String {
    format!("{e}/2")
}

fn half_keys<S: Serializer>(p: &LaurentPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut m = s.serialize_map(Some(p.terms().len()))?;
    for (&e, &c) in p.terms() {
        m.serialize_entry(&half_key(e), &c)?;
    }
    m.end()
}

fn half_keys_list<S: Serializer>(ps: &[LaurentPoly], s: S) -> std::result::Result<S::Ok, S::Error> {
    let maps: Vec<BTreeMap<String, i64>> =
        ps.iter().map(|p| p.terms().iter().map(|(&e, &c)| (half_key(e), c)).collect()).collect();
    maps.serialize(s)
}

impl LinkSummary {
    pub fn of(w: &BraidWord) -> Result<LinkSummary> {
        summarize_with(&crate::link::bracket::TemperleyLieb, w)
    }

    /// Sorted absolute linking numbers over unordered pairs of components.
    pub fn linking_profile(&self) -> Vec<i64> {
        let k = self.component_count;
        let mut v: Vec<i64> =
            (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).map(|(a, b)| self.linking_matrix[a][b].abs()).collect();
        v.sort_unstable();
        v
    }

    pub fn all_components_unknotted(&self) -> bool {
        self.per_component_jones.iter().all(LaurentPoly::is_one)
    }

    pub fn jones_text(&self) -> String {
        self.jones.render("t", 2)
    }
}

pub fn summarize(w: &BraidWord) -> Result<LinkSummary> {
    LinkSummary::of(w)
}

pub fn summarize_with(engine: &dyn BracketEngine, w: &BraidWord) -> Result<LinkSummary> {
    let components = closure_components(w);
    let (linking_matrix, self_writhes) = linking_data(w);
    let jones = jones_with(engine, w)?;
    let per_component_jones = (0..components.len())
        .map(|c| jones_with(engine, &extract_component(w, c)?))
        .collect::<Result<Vec<_>>>()?;
    let mut s = LinkSummary {
        strands: w.strands(),
        component_count: components.len(),
        components,
        linking_matrix,
        self_writhes,
        jones,
        per_component_jones,
        atlas_match: String::new(),
    };
    s.atlas_match = identify(&s);
    Ok(s)
}

struct AtlasEntry {
    name: String,
    components: usize,
    profile: Vec<i64>,
    jones: LaurentPoly,
}

fn entry(name: &str, w: BraidWord) -> AtlasEntry {
    let components = closure_components(&w);
    let (lk, _) = linking_data(&w);
    let k = components.len();
    let mut profile: Vec<i64> =
        (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).map(|(a, b)| lk[a][b].abs()).collect();
    profile.sort_unstable();
    let jones = jones_with(&crate::link::bracket::TemperleyLieb, &w).expect("atlas braids are small");
    AtlasEntry { name: name.to_string(), components: k, profile, jones: jones.normalized() }
}

static ATLAS: Lazy<Vec<AtlasEntry>> = Lazy::new(|| {
    let mut v = vec![entry("unknot", BraidWord::identity(1).unwrap())];
    for k in 2..=6 {
        v.push(entry(&format!("unlink-{k}"), BraidWord::identity(k).unwrap()));
    }
    v.push(entry("L2a1", torus_braid(2, 2).unwrap()));
    v.push(entry("L4a1 / T(2,4)", torus_braid(2, 4).unwrap()));
    for m in 3..=6 {
        v.push(entry(&format!("T({m},{m})"), torus_braid(m, m as i64).unwrap()));
    }
    v
});

/// Names of the built-in atlas entries, in matching order.
pub fn atlas_names() -> Vec<String> {
    ATLAS.iter().map(|e| e.name.clone()).collect()
}

/// Matches component count, linking profile and the Jones polynomial up to
/// mirror image and a unit factor against the built-in atlas.
pub fn identify(s: &LinkSummary) -> String {
    let j = s.jones.normalized();
    let jm = s.jones.mirror().normalized();
    let profile = s.linking_profile();
    ATLAS
        .iter()
        .find(|e| e.components == s.component_count && e.profile == profile && (e.jones == j || e.jones == jm))
        .map(|e| e.name.clone())
        .unwrap_or_else(|| "unidentified".to_string())
}
