use std::collections::BTreeSet;
use std::fmt;

use crate::braid::word::{BraidWord, Letter};
use crate::error::{Error, Result};

/// A point `i` or `i′` after regeneration doubles every component.
///
/// Component `i` occupies strands `2i−1` (unprimed) and `2i` (primed).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoubledIndex {
    pub base: usize,
    pub primed: bool,
}

impl DoubledIndex {
    pub fn new(base: usize, primed: bool) -> Self {
        DoubledIndex { base, primed }
    }

    pub fn strand(self) -> usize {
        doubled_strand(self)
    }
}

pub fn doubled_strand(d: DoubledIndex) -> usize {
    if d.primed {
        2 * d.base
    } else {
        2 * d.base - 1
    }
}

/// A point on the typical fiber, either a plain strand label or a doubled one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Plain(usize),
    Doubled(DoubledIndex),
}

impl Point {
    pub fn strand(self) -> usize {
        match self {
            Point::Plain(i) => i,
            Point::Doubled(d) => d.strand(),
        }
    }

    fn check(self) -> Result<()> {
        let base = match self {
            Point::Plain(i) => i,
            Point::Doubled(d) => d.base,
        };
        if base == 0 {
            return Err(Error::InvalidHalfTwist("point labels start at 1".into()));
        }
        Ok(())
    }
}

impl From<usize> for Point {
    fn from(i: usize) -> Self {
        Point::Plain(i)
    }
}

impl From<DoubledIndex> for Point {
    fn from(d: DoubledIndex) -> Self {
        Point::Doubled(d)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Plain(i) => write!(f, "{i}"),
            Point::Doubled(d) if d.primed => write!(f, "{}'", d.base),
            Point::Doubled(d) => write!(f, "{}", d.base),
        }
    }
}

/// Expression in half-twist notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HalfTwistExpr {
    /// `Z_{p_1 … p_k}^power` (or `Z̄` when `bar`): the half-twist of the listed
    /// points along a path below (above) the points in between. Two points give
    /// the usual `Z_{ij}`.
    Z { points: Vec<Point>, bar: bool, power: i64 },
    /// `Z_{A, B}^power` for two groups of points, e.g. `Z²_{ii′, j}`: the full
    /// twist of one group around the other. Only even powers are defined.
    Grouped { groups: [Vec<Point>; 2], bar: bool, power: i64 },
    /// `Z_{i i+1 … i+span}^power` on consecutive strands.
    Chain { start: usize, span: usize, power: i64 },
    /// A raw generator power `σ_index^power`.
    Sigma { index: usize, power: i64 },
    Product(Vec<HalfTwistExpr>),
    /// `base^by`, compiled as `by⁻¹ · base · by`.
    Conjugate { base: Box<HalfTwistExpr>, by: Box<HalfTwistExpr> },
    Inverse(Box<HalfTwistExpr>),
    Power { base: Box<HalfTwistExpr>, exponent: i64 },
}

impl HalfTwistExpr {
    pub fn z(i: impl Into<Point>, j: impl Into<Point>) -> Self {
        HalfTwistExpr::Z { points: vec![i.into(), j.into()], bar: false, power: 1 }
    }

    pub fn zbar(i: impl Into<Point>, j: impl Into<Point>) -> Self {
        HalfTwistExpr::Z { points: vec![i.into(), j.into()], bar: true, power: 1 }
    }

    pub fn z_multi(points: Vec<Point>) -> Self {
        HalfTwistExpr::Z { points, bar: false, power: 1 }
    }

    pub fn grouped(a: Vec<Point>, b: Vec<Point>) -> Self {
        HalfTwistExpr::Grouped { groups: [a, b], bar: false, power: 2 }
    }

    pub fn grouped_bar(a: Vec<Point>, b: Vec<Point>) -> Self {
        HalfTwistExpr::Grouped { groups: [a, b], bar: true, power: 2 }
    }

    pub fn chain(start: usize, span: usize) -> Self {
        HalfTwistExpr::Chain { start, span, power: 1 }
    }

    pub fn sigma(index: usize, power: i64) -> Self {
        HalfTwistExpr::Sigma { index, power }
    }

    /// A product of generator powers written as signed indices, e.g. `[4, 4, -3]`.
    pub fn letters(signed: &[i64]) -> Self {
        HalfTwistExpr::Product(
            signed
                .iter()
                .map(|&s| HalfTwistExpr::sigma(s.unsigned_abs() as usize, s.signum()))
                .collect(),
        )
    }

    pub fn product(items: Vec<HalfTwistExpr>) -> Self {
        HalfTwistExpr::Product(items)
    }

    pub fn conj(self, by: HalfTwistExpr) -> Self {
        HalfTwistExpr::Conjugate { base: Box::new(self), by: Box::new(by) }
    }

    pub fn inverse(self) -> Self {
        HalfTwistExpr::Inverse(Box::new(self))
    }

    /// Raises to a power. Atoms absorb the exponent; grouped twists count
    /// full twists, so `grouped(..).pow(-1)` is `Z^{-2}_{A,B}`.
    pub fn pow(self, e: i64) -> Self {
        match self {
            HalfTwistExpr::Z { points, bar, power } => HalfTwistExpr::Z { points, bar, power: power * e },
            HalfTwistExpr::Grouped { groups, bar, power } => {
                HalfTwistExpr::Grouped { groups, bar, power: power * e }
            }
            HalfTwistExpr::Chain { start, span, power } => HalfTwistExpr::Chain { start, span, power: power * e },
            HalfTwistExpr::Sigma { index, power } => HalfTwistExpr::Sigma { index, power: power * e },
            other if e == -1 => HalfTwistExpr::Inverse(Box::new(other)),
            other => HalfTwistExpr::Power { base: Box::new(other), exponent: e },
        }
    }

    /// Whether any point uses doubled labels.
    pub fn is_doubled(&self) -> bool {
        let mut found = false;
        self.visit_points(&mut |p| found |= matches!(p, Point::Doubled(_)));
        found
    }

    fn visit_points(&self, f: &mut impl FnMut(Point)) {
        match self {
            HalfTwistExpr::Z { points, .. } => points.iter().copied().for_each(&mut *f),
            HalfTwistExpr::Grouped { groups, .. } => groups.iter().flatten().copied().for_each(&mut *f),
            HalfTwistExpr::Chain { .. } | HalfTwistExpr::Sigma { .. } => {}
            HalfTwistExpr::Product(items) => items.iter().for_each(|e| e.visit_points(f)),
            HalfTwistExpr::Conjugate { base, by } => {
                base.visit_points(f);
                by.visit_points(f);
            }
            HalfTwistExpr::Inverse(e) | HalfTwistExpr::Power { base: e, .. } => e.visit_points(f),
        }
    }

    /// Strands where the braiding of this expression happens, ignoring
    /// conjugators. `None` when the expression contains raw generators.
    pub fn base_strands(&self) -> Option<BTreeSet<usize>> {
        match self {
            HalfTwistExpr::Z { points, .. } => Some(points.iter().map(|p| p.strand()).collect()),
            HalfTwistExpr::Grouped { groups, .. } => Some(groups.iter().flatten().map(|p| p.strand()).collect()),
            HalfTwistExpr::Chain { start, span, .. } => Some((*start..=start + span).collect()),
            HalfTwistExpr::Sigma { .. } => None,
            HalfTwistExpr::Product(items) => {
                let mut acc = BTreeSet::new();
                for e in items {
                    acc.extend(e.base_strands()?);
                }
                Some(acc)
            }
            HalfTwistExpr::Conjugate { base, .. } => base.base_strands(),
            HalfTwistExpr::Inverse(e) | HalfTwistExpr::Power { base: e, .. } => e.base_strands(),
        }
    }

    pub fn compile(&self, strands: usize) -> Result<BraidWord> {
        compile(self, strands)
    }
}

fn check_strand(s: usize, n: usize) -> Result<()> {
    if s == 0 || s > n {
        return Err(Error::StrandOutOfRange { index: s, strands: n });
    }
    Ok(())
}

fn sorted_strands(points: &[Point], n: usize) -> Result<Vec<usize>> {
    let mut s = Vec::with_capacity(points.len());
    for p in points {
        p.check()?;
        let x = p.strand();
        check_strand(x, n)?;
        s.push(x);
    }
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidHalfTwist(format!("repeated point in {points:?}")));
    }
    Ok(s)
}

/// Moves every listed strand except the last one rightwards until the set is
/// consecutive and ends at the last strand. Returns the moving braid and the
/// first position of the gathered block. `bar` moves with negative crossings.
fn gather(strands: &[usize], n: usize, bar: bool) -> (BraidWord, usize) {
    let k = strands.len();
    let last = strands[k - 1];
    let mut letters = Vec::new();
    for idx in (0..k - 1).rev() {
        let target = last - (k - 1 - idx);
        for p in strands[idx]..target {
            letters.push(Letter { index: p, positive: !bar });
        }
    }
    (BraidWord::from_parts_unchecked(n, letters), last + 1 - k)
}

fn chain_word(start: usize, span: usize, n: usize) -> BraidWord {
    let mut letters = Vec::new();
    for low in start..start + span {
        for idx in (low..start + span).rev() {
            letters.push(Letter::pos(idx));
        }
    }
    BraidWord::from_parts_unchecked(n, letters)
}

/// `Z_{i i+1 … i+k}^power` as a product of descending runs.
pub fn compile_chain(start: usize, span: usize, power: i64, strands: usize) -> Result<BraidWord> {
    if start == 0 || span == 0 {
        return Err(Error::InvalidHalfTwist(format!("chain needs start >= 1 and span >= 1, got ({start}, {span})")));
    }
    check_strand(start + span, strands)?;
    Ok(chain_word(start, span, strands).pow(power))
}

/// `Z_{ij}^power` (or `Z̄_{ij}^power`), expanded as
/// `(σ_i … σ_{j−2}) σ_{j−1} (σ_i … σ_{j−2})⁻¹` and its barred counterpart
/// `(σ_{j−2} … σ_i)⁻¹ σ_{j−1} (σ_{j−2} … σ_i)`.
pub fn compile_z(i: usize, j: usize, bar: bool, power: i64, strands: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j) {
        return Err(Error::InvalidHalfTwist(format!("Z needs 1 <= i < j, got ({i}, {j})")));
    }
    check_strand(j, strands)?;
    compile_points(&[i, j], bar, power, strands)
}

/// Both textbook expansions of `Z_{ij}` (or `Z̄_{ij}`); they are equal as braids.
pub fn z_expansions(i: usize, j: usize, bar: bool, strands: usize) -> Result<[BraidWord; 2]> {
    let first = compile_z(i, j, bar, 1, strands)?;
    // (σ_{i+1} … σ_{j−1})⁻¹ σ_i (σ_{i+1} … σ_{j−1}), or with the run reversed
    // and the conjugation flipped for Z̄
    let run: Vec<Letter> = (i + 1..j).map(Letter::pos).collect();
    let run = BraidWord::from_parts_unchecked(strands, run);
    let middle = BraidWord::from_parts_unchecked(strands, vec![Letter::pos(i)]);
    let second = if bar {
        let rev = BraidWord::from_parts_unchecked(strands, (i + 1..j).rev().map(Letter::pos).collect());
        middle.conjugate(&rev.inverse())?
    } else {
        middle.conjugate(&run)?
    };
    Ok([first, second])
}

fn compile_points(strands_sorted: &[usize], bar: bool, power: i64, n: usize) -> Result<BraidWord> {
    let (mover, start) = gather(strands_sorted, n, bar);
    let core = chain_word(start, strands_sorted.len() - 1, n).pow(power);
    core.conjugate(&mover.inverse())
}

fn full_twist_on(start: usize, count: usize, n: usize) -> BraidWord {
    if count < 2 {
        return BraidWord::from_parts_unchecked(n, Vec::new());
    }
    chain_word(start, count - 1, n).pow(2)
}

fn compile_grouped(groups: &[Vec<Point>; 2], bar: bool, power: i64, n: usize) -> Result<BraidWord> {
    if power % 2 != 0 {
        return Err(Error::Unsupported(format!("odd power {power} of a twist between point groups")));
    }
    let a = sorted_strands(&groups[0], n)?;
    let b = sorted_strands(&groups[1], n)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidHalfTwist("empty point group".into()));
    }
    let (low, high) = if a[0] < b[0] { (a, b) } else { (b, a) };
    if low[low.len() - 1] > high[0] {
        return Err(Error::InvalidHalfTwist(format!("interleaved point groups {low:?} and {high:?}")));
    }
    let mut all = low.clone();
    all.extend_from_slice(&high);
    let (mover, start) = gather(&all, n, bar);
    // Δ²(A ∪ B) · Δ⁻²(A) · Δ⁻²(B) on the gathered block
    let core = full_twist_on(start, all.len(), n)
        .concat(&full_twist_on(start, low.len(), n).inverse())?
        .concat(&full_twist_on(start + low.len(), high.len(), n).inverse())?;
    core.pow(power / 2).conjugate(&mover.inverse())
}

/// Compiles an expression to a braid word on `strands` strands.
///
/// Products multiply left to right; `Conjugate { base, by }` becomes
/// `by⁻¹ · base · by`, so a conjugator written as a product applies its
/// leftmost factor outermost.
pub fn compile(expr: &HalfTwistExpr, strands: usize) -> Result<BraidWord> {
    match expr {
        HalfTwistExpr::Z { points, bar, power } => {
            if points.len() < 2 {
                return Err(Error::InvalidHalfTwist("Z needs at least two points".into()));
            }
            let s = sorted_strands(points, strands)?;
            compile_points(&s, *bar, *power, strands)
        }
        HalfTwistExpr::Grouped { groups, bar, power } => compile_grouped(groups, *bar, *power, strands),
        HalfTwistExpr::Chain { start, span, power } => compile_chain(*start, *span, *power, strands),
        HalfTwistExpr::Sigma { index, power } => {
            if *index == 0 || *index >= strands {
                return Err(Error::GeneratorOutOfRange { index: *index, strands });
            }
            BraidWord::generator(strands, *index, *power)
        }
        HalfTwistExpr::Product(items) => {
            let mut acc = BraidWord::identity(strands)?;
            for e in items {
                acc = acc.concat(&compile(e, strands)?)?;
            }
            Ok(acc)
        }
        HalfTwistExpr::Conjugate { base, by } => compile(base, strands)?.conjugate(&compile(by, strands)?),
        HalfTwistExpr::Inverse(e) => Ok(compile(e, strands)?.inverse()),
        HalfTwistExpr::Power { base, exponent } => Ok(compile(base, strands)?.pow(*exponent)),
    }
}

fn write_points(f: &mut fmt::Formatter<'_>, points: &[Point]) -> fmt::Result {
    let s: Vec<String> = points.iter().map(|p| p.to_string()).collect();
    write!(f, "{}", s.join(" "))
}

fn write_power(f: &mut fmt::Formatter<'_>, power: i64) -> fmt::Result {
    if power != 1 {
        write!(f, "^{power}")?;
    }
    Ok(())
}

impl fmt::Display for HalfTwistExpr {
    /// Renders in the text grammar accepted by [`crate::halftwist::parse_expr`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HalfTwistExpr::Z { points, bar, power } => {
                write!(f, "{}[", if *bar { "Zb" } else { "Z" })?;
                let s: Vec<String> = points.iter().map(|p| p.to_string()).collect();
                write!(f, "{}]", s.join(","))?;
                write_power(f, *power)
            }
            HalfTwistExpr::Grouped { groups, bar, power } => {
                write!(f, "{}[", if *bar { "Zb" } else { "Z" })?;
                write_points(f, &groups[0])?;
                write!(f, ",")?;
                write_points(f, &groups[1])?;
                write!(f, "]")?;
                write_power(f, *power)
            }
            HalfTwistExpr::Chain { start, span, power } => {
                write!(f, "Z[{}..{}]", start, start + span)?;
                write_power(f, *power)
            }
            HalfTwistExpr::Sigma { index, power } => {
                write!(f, "s{index}")?;
                write_power(f, *power)
            }
            HalfTwistExpr::Product(items) => {
                write!(f, "(")?;
                for (k, e) in items.iter().enumerate() {
                    if k > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ")")
            }
            HalfTwistExpr::Conjugate { base, by } => write!(f, "({base})^{{{by}}}"),
            HalfTwistExpr::Inverse(e) => write!(f, "({e})^-1"),
            HalfTwistExpr::Power { base, exponent } => write!(f, "({base})^{exponent}"),
        }
    }
}
