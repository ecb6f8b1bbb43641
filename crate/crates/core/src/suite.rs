//! Regression suite over the worked examples: every row recomputes one
//! identity or closure claim and reports whether it holds.
//!
//! Rows marked [`Status::Discrepancy`] are claims that do not hold exactly
//! as stated but whose closure-level content does; the detail says which.

use serde::Serialize;

use crate::braid::markov_destabilize;
use crate::braid::word::BraidWord;
use crate::error::Result;
use crate::halftwist::{compile_chain, parse_expr, z_expansions};
use crate::link::{cable, same_up_to_relabeling, summarize, torus_braid, CableSpec, LinkSummary};
use crate::monodromy::{builtin, full_twist, generic_line_factorization};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Discrepancy,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Discrepancy => "DISCREPANCY",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteRow {
    pub anchor: &'static str,
    pub title: &'static str,
    pub status: Status,
    pub detail: String,
}

struct Outcome {
    status: Status,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { status: if ok { Status::Pass } else { Status::Fail }, detail: detail.into() }
}

pub struct Check {
    pub anchor: &'static str,
    pub title: &'static str,
    body: fn() -> Result<Outcome>,
}

impl Check {
    pub fn run(&self) -> SuiteRow {
        let (status, detail) = match (self.body)() {
            Ok(o) => (o.status, o.detail),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        SuiteRow { anchor: self.anchor, title: self.title, status, detail }
    }
}

/// Checks whose anchor contains `filter` (all of them for `None`), in
/// canonical order.
pub fn select(filter: Option<&str>) -> Vec<&'static Check> {
    CHECKS.iter().filter(|c| filter.is_none_or(|f| c.anchor.contains(f))).collect()
}

pub fn checks() -> &'static [Check] {
    CHECKS
}

fn w(n: usize, text: &str) -> Result<BraidWord> {
    parse_expr(text)?.compile(n)
}

fn product(name: &str) -> Result<BraidWord> {
    Ok(builtin(name)?.factorization()?.table_product())
}

fn stated(name: &str) -> Result<BraidWord> {
    builtin(name)?
        .stated_product()?
        .ok_or_else(|| crate::Error::Unsupported(format!("{name} has no stated product")))
}

/// Whether two closures agree on component count, Jones polynomial and the
/// linking matrix up to relabeling.
fn same_link_data(a: &LinkSummary, b: &LinkSummary) -> bool {
    a.component_count == b.component_count
        && a.jones == b.jones
        && same_up_to_relabeling(&a.linking_matrix, &b.linking_matrix)
}

fn off_diagonal(s: &LinkSummary) -> Vec<i64> {
    let k = s.component_count;
    (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).map(|(a, b)| s.linking_matrix[a][b]).collect()
}

fn describe(s: &LinkSummary) -> String {
    format!("{} components, lk {:?}, jones {}", s.component_count, s.linking_matrix, s.jones_text())
}

/// Cables `p = 2` copies of the components containing the given strands,
/// one at a time.
fn cable_strands(base: &BraidWord, plan: &[(usize, i64)]) -> Result<BraidWord> {
    let mut word = base.clone();
    // strand labels move as earlier strands are doubled, so go right to left
    let mut plan = plan.to_vec();
    plan.sort_by_key(|p| std::cmp::Reverse(p.0));
    for (strand, t) in plan {
        let comps = crate::link::closure_components(&word);
        let idx = comps.iter().position(|c| c.contains(&strand)).expect("strand exists");
        word = cable(&word, CableSpec { component: idx, p: 2, t })?.word;
    }
    Ok(word)
}

fn half_twist_expansions() -> Result<Outcome> {
    let mut count = 0;
    for n in 2..=7 {
        for i in 1..n {
            for j in i + 1..=n {
                for bar in [false, true] {
                    let [a, b] = z_expansions(i, j, bar, n)?;
                    if !a.equals(&b)? {
                        return Ok(verdict(false, format!("expansions differ for i={i} j={j} bar={bar} n={n}")));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(verdict(true, format!("{count} pairs agree for n <= 7")))
}

fn chain_full_twist() -> Result<Outcome> {
    for m in 2..=5 {
        let sq = compile_chain(1, m - 1, 2, m)?;
        let nf = sq.normal_form();
        if nf.delta_power() != 2 || !nf.factors().is_empty() || !sq.equals(&full_twist(m)?)? {
            return Ok(verdict(false, format!("chain squared is not the full twist for m={m}")));
        }
    }
    Ok(verdict(true, "chain squared equals the full twist for m <= 5"))
}

fn doubled_nodes() -> Result<Outcome> {
    let mut count = 0;
    for n in 4..=8 {
        for j in 2..=n / 2 {
            for i in 1..j {
                let pairs = [
                    (format!("Z[{i} {i}',{j}]^2"), format!("Z[{i}',{j}]^2 Z[{i},{j}]^2")),
                    (format!("Z[{i}',{j} {j}']^2"), format!("Z[{i}',{j}']^2 Z[{i}',{j}]^2")),
                    (format!("Z[{i}',{j} {j}']^-2"), format!("Z[{i}',{j}]^-2 Z[{i}',{j}']^-2")),
                    (format!("Zb[{i}',{j} {j}']^-2"), format!("Zb[{i}',{j}']^-2 Zb[{i}',{j}]^-2")),
                    (format!("Z[{i} {i}',{j}]^-2"), format!("Z[{i},{j}]^-2 Z[{i}',{j}]^-2")),
                    (format!("Z[{i} {i}',{j} {j}']^2"), format!("Z[{i}',{j} {j}']^2 Z[{i},{j} {j}']^2")),
                    (format!("Z[{i} {i}',{j} {j}']^-2"), format!("Z[{i},{j} {j}']^-2 Z[{i}',{j} {j}']^-2")),
                ];
                for (l, r) in pairs {
                    if !w(n, &l)?.equals(&w(n, &r)?)? {
                        return Ok(verdict(false, format!("{l} != {r} on {n} strands")));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(verdict(true, format!("{count} identities hold for n <= 8")))
}

fn conjugation_example() -> Result<Outcome> {
    let got = w(4, "Z[1,2]^{Z[2,4]^2 Z[2,3]^2}")?.free_reduce();
    let want = BraidWord::from_signed(4, &[-2, -3, -3, -2, 1, 2, 3, 3, 2])?;
    Ok(verdict(got == want, format!("reduced word {}", got.compact())))
}

fn generic_lines() -> Result<Outcome> {
    for m in 3..=5 {
        let f = generic_line_factorization(m)?;
        if !f.table_product().equals(&full_twist(m)?)? {
            return Ok(verdict(false, format!("m={m} product is not the full twist")));
        }
    }
    Ok(verdict(true, "node products equal the full twist for m = 3, 4, 5"))
}

fn triangle_product() -> Result<Outcome> {
    let p = product("triangle")?;
    Ok(verdict(p.equals(&w(3, "s1 s2^2 s1 s2^2")?)?, format!("product {}", p.compact())))
}

fn triangle_closure() -> Result<Outcome> {
    let s = summarize(&product("triangle")?)?;
    let ok = s.component_count == 3
        && s.all_components_unknotted()
        && off_diagonal(&s).iter().all(|&x| x == 1)
        && s.atlas_match == "T(3,3)";
    Ok(verdict(ok, format!("{}; atlas {}", describe(&s), s.atlas_match)))
}

fn four_lines_product() -> Result<Outcome> {
    let f = builtin("four-lines")?.factorization()?;
    let p = f.table_product();
    let want = w(4, "s2 s3 s1 s2 (s1 s2 s3)^2")?;
    let middle = w(4, "s2^2 (s2^-1 s3^2 s2) (s1 (s3 s2 s3)^2 s1^-1)")?;
    Ok(verdict(p.equals(&want)? && middle.equals(&want)?, format!("local product {}", p.compact())))
}

fn four_lines_closure() -> Result<Outcome> {
    let s = summarize(&product("four-lines")?)?;
    let lk = &s.linking_matrix;
    let pattern = (0..4).all(|a| (0..4).all(|b| a == b || lk[a][b] == if a + b == 1 { 0 } else { 1 }));
    Ok(verdict(s.component_count == 4 && s.all_components_unknotted() && pattern, describe(&s)))
}

fn four_lines_cable_model() -> Result<Outcome> {
    let local = summarize(&product("four-lines")?)?;
    let model = summarize(&cable_strands(&w(2, "s1^2")?, &[(1, 0), (2, 2)])?)?;
    let full = summarize(&builtin("four-lines")?.factorization()?.full_product())?;
    let ok = same_link_data(&local, &model) && full.atlas_match == "T(4,4)";
    Ok(verdict(ok, format!("Hopf with (2,0) and (2,2) cables: {}; with the node at infinity: {}", describe(&model), full.atlas_match)))
}

fn conic_line_products() -> Result<Outcome> {
    let (a, b) = (product("conic-line-A")?, product("conic-line-B")?);
    let ok = a.equals(&b)? && a.equals(&w(3, "s2^2 s1 s2^2")?)? && b.equals(&w(3, "s2 s1^2 s2 s1")?)?;
    Ok(verdict(ok, format!("A = {}, B = {}", a.compact(), b.compact())))
}

fn conic_line_closure() -> Result<Outcome> {
    let d = markov_destabilize(&product("conic-line-A")?);
    let s = summarize(&d)?;
    let ok = d.strands() == 2 && d.equals(&w(2, "s1^4")?)? && s.atlas_match == "L4a1 / T(2,4)";
    Ok(verdict(ok, format!("destabilized to {} on {} strands; atlas {}", d.compact(), d.strands(), s.atlas_match)))
}

fn two_conics_products() -> Result<Outcome> {
    let a = product("two-conics-A")?;
    let b = product("two-conics-B")?;
    let ok = a.equals(&stated("two-conics-A")?)? && b.equals(&stated("two-conics-B")?)?;
    Ok(verdict(ok, format!("tangent {}, four nodes {}", a.compact(), b.compact())))
}

fn two_conics_closure() -> Result<Outcome> {
    let s = summarize(&product("two-conics-B")?)?;
    let three = summarize(&w(3, "s2 s1^3 s2 s1^3 s2")?)?;
    let cabled = summarize(&cable(&w(2, "s1^4")?, CableSpec { component: 0, p: 2, t: 1 })?.word)?;
    let hopf = summarize(&cable_strands(&w(2, "s1^2")?, &[(1, 1), (2, 1)])?)?;
    let ok = s.jones == three.jones && same_link_data(&s, &cabled) && same_link_data(&s, &hopf);
    Ok(verdict(ok, format!("{}; matches the three-strand word and both cable models: {ok}", describe(&s))))
}

/// The four regenerated forms with `j = i + 1` on `2j` strands: left side
/// text, stated factor words, simplified word (if any).
fn branch_cusp_forms(i: usize) -> Vec<(String, Vec<String>, Option<String>)> {
    let j = i + 1;
    let (a, b, c) = (2 * i - 1, 2 * i, 2 * i + 1);
    vec![
        (
            format!("Z[{i}',{j}]^3^{{Z[{j},{j}']}} Z[{i}',{j}]^3 Z[{i}',{j}]^3^{{Z[{j},{j}']^-1}}"),
            vec![format!("s{c}^-1 s{b}^3 s{c}"), format!("s{b}^3"), format!("s{c} s{b}^3 s{c}^-1")],
            Some(format!("s{b} s{c}^3 s{b} s{c}^3 s{b}")),
        ),
        (
            format!("Z[{i},{i}']^{{Z[{i}',{j} {j}']^2}}"),
            vec![format!("(s{b} s{c}^2 s{b})^-1 s{a} (s{b} s{c}^2 s{b})")],
            None,
        ),
        (
            format!("Z[{i}',{j}]^3^{{Z[{i},{i}']}} Z[{i}',{j}]^3 Z[{i}',{j}]^3^{{Z[{i},{i}']^-1}}"),
            vec![format!("s{b}^3"), format!("s{b}^-1 s{a}^3 s{b}"), format!("s{a}^2 s{b}^3 s{a}^-2")],
            Some(format!("s{b} s{a}^3 s{b} s{a}^3 s{b}")),
        ),
        (
            format!("Z[{j},{j}']^{{Z[{j},{i} {i}']^2}}"),
            vec![format!("(s{b} s{a}^2 s{b})^-1 s{c} (s{b} s{a}^2 s{b})")],
            None,
        ),
    ]
}

fn branch_cusp_products() -> Result<Outcome> {
    for i in 1..=2 {
        let n = 2 * (i + 1);
        for (k, (lhs, rhs, simple)) in branch_cusp_forms(i).into_iter().enumerate() {
            let l = w(n, &lhs)?;
            let r = w(n, &rhs.join(" "))?;
            if !l.equals(&r)? {
                return Ok(verdict(false, format!("form {} for i={i}: {lhs} differs from its expansion", k + 1)));
            }
            if let Some(s) = simple {
                if !l.equals(&w(n, &s)?)? {
                    return Ok(verdict(false, format!("form {} for i={i} does not simplify to {s}", k + 1)));
                }
            }
        }
    }
    Ok(verdict(true, "cusp triples and branch conjugates agree with their expansions for i = 1, 2"))
}

fn branch_cusp_factors() -> Result<Outcome> {
    let mut differing = Vec::new();
    for i in 1..=2 {
        let n = 2 * (i + 1);
        for (k, (lhs, rhs, _)) in branch_cusp_forms(i).into_iter().enumerate() {
            let expr = parse_expr(&lhs)?;
            let items = match expr {
                crate::halftwist::HalfTwistExpr::Product(items) => items,
                other => vec![other],
            };
            for (f, (item, want)) in items.iter().zip(&rhs).enumerate() {
                if !item.compile(n)?.equals(&w(n, want)?)? {
                    differing.push(format!("i={i} form {} factor {}", k + 1, f + 1));
                }
            }
        }
    }
    if differing.is_empty() {
        Ok(verdict(true, "every factor matches its stated word"))
    } else {
        Ok(Outcome {
            status: Status::Discrepancy,
            detail: format!("products agree but single factors differ: {}", differing.join(", ")),
        })
    }
}

fn rotation_four_nodes() -> Result<Outcome> {
    let node = w(4, "Z[1 1',2 2']^2")?;
    let word = w(4, "s2 s1 s3 s2^2 s1 s3 s2")?;
    let rotated = word.rotate();
    let ok = node.equals(&word)?
        && rotated.equals(&w(4, "s2 s3 s1 s2^2 s3 s1 s2")?)?
        && rotated.equals(&node)?
        && same_link_data(&summarize(&word)?, &summarize(&rotated)?);
    Ok(verdict(ok, format!("rotated word {}", rotated.compact())))
}

fn rotation_cusps() -> Result<Outcome> {
    let forms = branch_cusp_forms(1);
    let left = w(4, &forms[0].0)?;
    let right = w(4, &forms[2].0)?;
    let left_branch = w(4, &forms[1].0)?;
    let right_branch = w(4, &forms[3].0)?;
    let ok = left.rotate().equals(&right)?
        && left_branch.rotate().equals(&right_branch)?
        && same_link_data(&summarize(&left)?, &summarize(&right)?);
    Ok(verdict(ok, "cusp triples and branch conjugates swap sides under rotation"))
}

fn two_point_products() -> Result<Outcome> {
    let ok = product("2pt-A")?.equals(&stated("2pt-A")?)?
        && product("2pt-B")?.equals(&stated("2pt-B")?)?
        && product("2pt-A")?.rotate().equals(&product("2pt-B")?)?;
    Ok(verdict(ok, "both cases multiply to their stated words and are rotations of each other"))
}

fn two_point_closure() -> Result<Outcome> {
    let model = summarize(&cable(&w(2, "s1^4")?, CableSpec { component: 0, p: 2, t: 1 })?.word)?;
    let mut details = Vec::new();
    let mut ok = true;
    for name in ["2pt-A", "2pt-B"] {
        let s = summarize(&product(name)?)?;
        ok &= s.component_count == 2
            && s.all_components_unknotted()
            && off_diagonal(&s) == [4]
            && same_link_data(&s, &model);
        details.push(format!("{name}: {}", describe(&s)));
    }
    Ok(verdict(ok, details.join("; ")))
}

fn type_one_products() -> Result<Outcome> {
    let mut ok = true;
    for name in ["3pt-type1-A", "3pt-type1-B"] {
        let s = stated(name)?;
        ok &= product(name)?.equals(&s)? && s.len() == 27 && s.is_positive_word();
    }
    let rot = product("3pt-type1-C")?.rotate().equals(&product("3pt-type1-A")?)?;
    Ok(verdict(ok && rot, format!("stated words reproduced; case C rotates to case A: {rot}")))
}

fn type_one_closure() -> Result<Outcome> {
    let a = summarize(&product("3pt-type1-A")?)?;
    let b = summarize(&product("3pt-type1-B")?)?;
    let shape = |s: &LinkSummary| {
        s.component_count == 3 && s.all_components_unknotted() && off_diagonal(s).iter().all(|&x| x == 4)
    };
    let ok = shape(&a) && shape(&b) && a.jones == b.jones;
    Ok(verdict(ok, describe(&a)))
}

fn type_two_product() -> Result<Outcome> {
    let p = product("3pt-type2")?;
    let s = stated("3pt-type2")?;
    let positive = p.normal_form().is_positive();
    let equal = p.equals(&s)?;
    if p.exponent_sum() == 28 && positive && equal {
        return Ok(verdict(true, "product equals the stated positive word"));
    }
    let mut letters = p.letters().to_vec();
    let conjugate_positive = (0..letters.len()).any(|_| {
        letters.rotate_left(1);
        BraidWord::new(6, letters.clone()).map(|x| x.normal_form().is_positive()).unwrap_or(false)
    });
    let same = same_link_data(&summarize(&p)?, &summarize(&s)?);
    let detail = format!(
        "exponent sum {}, positive {positive}, equals stated word {equal}, cyclic conjugate positive {conjugate_positive}, same closure data {same}",
        p.exponent_sum()
    );
    let status = if p.exponent_sum() == 28 && conjugate_positive && same { Status::Discrepancy } else { Status::Fail };
    Ok(Outcome { status, detail })
}

fn type_two_closure() -> Result<Outcome> {
    let s = summarize(&product("3pt-type2")?)?;
    let want = vec![vec![0, 1, 2, 2], vec![1, 0, 2, 2], vec![2, 2, 0, 4], vec![2, 2, 4, 0]];
    let ok = s.component_count == 4 && s.all_components_unknotted() && same_up_to_relabeling(&s.linking_matrix, &want);
    Ok(verdict(ok, describe(&s)))
}

fn type_two_cable_model() -> Result<Outcome> {
    let s = summarize(&product("3pt-type2")?)?;
    let model = summarize(&cable_strands(&torus_braid(3, 3)?, &[(1, 1), (2, 1), (3, 2)])?)?;
    Ok(verdict(same_link_data(&s, &model), format!("T(3,3) with (2,1), (2,1), (2,2) cables: {}", describe(&model))))
}

fn types_differ() -> Result<Outcome> {
    let one = summarize(&product("3pt-type1-A")?)?;
    let two = summarize(&product("3pt-type2")?)?;
    let ok = one != two && one.component_count == 3 && two.component_count == 4;
    Ok(verdict(ok, format!("{} vs {} components", one.component_count, two.component_count)))
}

static CHECKS: &[Check] = &[
    Check { anchor: "half-twist-expansions", title: "both expansions of Z and Zb agree", body: half_twist_expansions },
    Check { anchor: "chain-full-twist", title: "chain squared is the full twist", body: chain_full_twist },
    Check { anchor: "doubled-nodes", title: "regenerated node identities", body: doubled_nodes },
    Check { anchor: "conjugation-example", title: "conjugated half-twist reduces to the stated word", body: conjugation_example },
    Check { anchor: "generic-lines", title: "generic arrangements multiply to the full twist", body: generic_lines },
    Check { anchor: "triangle-product", title: "triangle product", body: triangle_product },
    Check { anchor: "triangle-closure", title: "triangle closure is T(3,3)", body: triangle_closure },
    Check { anchor: "four-lines-product", title: "four-line local product", body: four_lines_product },
    Check { anchor: "four-lines-closure", title: "four-line closure linking pattern", body: four_lines_closure },
    Check { anchor: "four-lines-cable-model", title: "four-line closure as a cabled Hopf link", body: four_lines_cable_model },
    Check { anchor: "conic-line", title: "tangent and transverse conic-line products agree", body: conic_line_products },
    Check { anchor: "conic-line", title: "conic-line closure destabilizes to L4a1", body: conic_line_closure },
    Check { anchor: "two-conics-product", title: "two-conic products", body: two_conics_products },
    Check { anchor: "two-conics-closure", title: "two-conic closure is a cabled L4a1", body: two_conics_closure },
    Check { anchor: "branch-cusp", title: "regenerated cusps and branch points", body: branch_cusp_products },
    Check { anchor: "branch-cusp-factors", title: "regenerated factors one by one", body: branch_cusp_factors },
    Check { anchor: "rotation-four-nodes", title: "rotated four-node word", body: rotation_four_nodes },
    Check { anchor: "rotation-cusps", title: "rotated cusp triples and branch points", body: rotation_cusps },
    Check { anchor: "two-point-product", title: "two-point products", body: two_point_products },
    Check { anchor: "two-point-closure", title: "two-point closure", body: two_point_closure },
    Check { anchor: "three-point-one-diagonal-product", title: "one-diagonal 3-point products", body: type_one_products },
    Check { anchor: "three-point-one-diagonal-closure", title: "one-diagonal 3-point closure", body: type_one_closure },
    Check { anchor: "three-point-two-diagonals-product", title: "two-diagonal 3-point product", body: type_two_product },
    Check { anchor: "three-point-two-diagonals-closure", title: "two-diagonal 3-point closure", body: type_two_closure },
    Check { anchor: "three-point-two-diagonals-cable-model", title: "two-diagonal closure as cabled T(3,3)", body: type_two_cable_model },
    Check { anchor: "three-point-types-differ", title: "the two 3-point types give different links", body: types_differ },
];
