//! Factorizations that are generated rather than tabulated.

use crate::braid::word::BraidWord;
use crate::error::{Error, Result};
use crate::halftwist::{DoubledIndex, HalfTwistExpr, Point};
use crate::monodromy::config::{Factor, Factorization, SingularityType};

/// `Δ²` on `m` strands as `(σ_1 ⋯ σ_{m−1})^m`.
pub fn full_twist(m: usize) -> Result<BraidWord> {
    if m == 0 {
        return Err(Error::InvalidStrandCount(0));
    }
    let run: Vec<i64> = (1..m as i64).collect();
    Ok(BraidWord::from_signed(m, &run)?.pow(m as i64))
}

/// `m` lines through one point, perturbed to general position: the node of
/// every pair `k < ℓ`, ordered by `ℓ` then `k`. Each node twist passes over
/// the lines between its two, as `Z̄_{13}` does in the triangle.
pub fn generic_line_factorization(m: usize) -> Result<Factorization> {
    if m < 2 {
        return Err(Error::InvalidStrandCount(m));
    }
    let mut factors = Vec::new();
    for l in 2..=m {
        for k in 1..l {
            let expr = HalfTwistExpr::zbar(k, l).pow(2);
            factors.push(Factor {
                label: format!("node L{k}-L{l}"),
                kind: SingularityType::Node,
                count: 1,
                expr: expr.to_string(),
                word: expr.compile(m)?,
            });
        }
    }
    Ok(Factorization::new(m, factors))
}

/// Which line of a node gets doubled during regeneration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeDoubling {
    First,
    Second,
    Both,
}

fn d(base: usize, primed: bool) -> Point {
    Point::Doubled(DoubledIndex::new(base, primed))
}

fn check_doubled(i: usize, j: usize, strands: usize) -> Result<()> {
    if i == 0 || i >= j {
        return Err(Error::InvalidHalfTwist(format!("need 1 <= i < j, got i={i} j={j}")));
    }
    if 2 * j > strands {
        return Err(Error::StrandOutOfRange { index: 2 * j, strands });
    }
    Ok(())
}

/// The regenerated form of the node `Z²_{ij}` when line `i`, line `j` or
/// both are doubled: `Z²_{ii′,j}`, `Z²_{i,jj′}` or `Z²_{ii′,jj′}`.
pub fn regenerate_node(i: usize, j: usize, mode: NodeDoubling, strands: usize) -> Result<HalfTwistExpr> {
    check_doubled(i, j, strands)?;
    let (a, b) = match mode {
        NodeDoubling::First => (vec![d(i, false), d(i, true)], vec![d(j, false)]),
        NodeDoubling::Second => (vec![d(i, false)], vec![d(j, false), d(j, true)]),
        NodeDoubling::Both => (vec![d(i, false), d(i, true)], vec![d(j, false), d(j, true)]),
    };
    Ok(HalfTwistExpr::grouped(a, b))
}

/// The same regenerated node written as ordinary node factors.
pub fn node_as_nodes(i: usize, j: usize, mode: NodeDoubling) -> HalfTwistExpr {
    let sq = |p: Point, q: Point| HalfTwistExpr::z(p, q).pow(2);
    let items = match mode {
        NodeDoubling::First => vec![sq(d(i, true), d(j, false)), sq(d(i, false), d(j, false))],
        NodeDoubling::Second => vec![sq(d(i, false), d(j, true)), sq(d(i, false), d(j, false))],
        NodeDoubling::Both => vec![
            sq(d(i, true), d(j, true)),
            sq(d(i, true), d(j, false)),
            sq(d(i, false), d(j, true)),
            sq(d(i, false), d(j, false)),
        ],
    };
    HalfTwistExpr::product(items)
}

/// Which pair of strands the tangency's cusps are conjugated around.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TangencySide {
    /// around `j, j′`
    Left,
    /// around `i, i′`
    Right,
}

/// The three cusps replacing the tangency of doubled conic `i` with
/// doubled line `j`: `X^c, X, X^{c⁻¹}` for `X = Z³_{i′j}`.
pub fn regenerate_tangency(i: usize, j: usize, side: TangencySide, strands: usize) -> Result<[HalfTwistExpr; 3]> {
    check_doubled(i, j, strands)?;
    let x = HalfTwistExpr::z(d(i, true), d(j, false)).pow(3);
    let c = match side {
        TangencySide::Left => HalfTwistExpr::z(d(j, false), d(j, true)),
        TangencySide::Right => HalfTwistExpr::z(d(i, false), d(i, true)),
    };
    Ok([x.clone().conj(c.clone()), x.clone(), x.conj(c.pow(-1))])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halftwist::parse_expr;

    fn w(n: usize, s: &[i64]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn generic_lines_multiply_to_full_twist() {
        for m in 2..=6 {
            let f = generic_line_factorization(m).unwrap();
            assert_eq!(f.factors.len(), m * (m - 1) / 2);
            assert!(f.table_product().equals(&full_twist(m).unwrap()).unwrap(), "m={m}");
        }
        assert!(generic_line_factorization(1).is_err());
    }

    #[test]
    fn regenerated_nodes_match_their_node_forms() {
        for n in [4, 6, 8] {
            for j in 2..=n / 2 {
                for i in 1..j {
                    for mode in [NodeDoubling::First, NodeDoubling::Second, NodeDoubling::Both] {
                        let g = regenerate_node(i, j, mode, n).unwrap().compile(n).unwrap();
                        let s = node_as_nodes(i, j, mode).compile(n).unwrap();
                        assert!(g.equals(&s).unwrap(), "{i} {j} {mode:?}");
                    }
                }
            }
        }
        assert!(regenerate_node(2, 3, NodeDoubling::Both, 4).is_err());
        assert!(regenerate_node(2, 2, NodeDoubling::Both, 4).is_err());
    }

    #[test]
    fn regenerated_node_text_round_trips() {
        let e = regenerate_node(1, 2, NodeDoubling::First, 4).unwrap();
        assert_eq!(parse_expr(&e.to_string()).unwrap().compile(4).unwrap(), e.compile(4).unwrap());
    }

    #[test]
    fn tangency_cusps_on_adjacent_pairs() {
        // conic 1,1' against line 2,2': X = σ_2³
        let left = regenerate_tangency(1, 2, TangencySide::Left, 4).unwrap();
        let words: Vec<BraidWord> = left.iter().map(|e| e.compile(4).unwrap().free_reduce()).collect();
        assert_eq!(words[1], w(4, &[2, 2, 2]));
        assert!(words[0].equals(&w(4, &[-3, 2, 2, 2, 3])).unwrap());
        assert!(words[2].equals(&w(4, &[3, 2, 2, 2, -3])).unwrap());
        let right = regenerate_tangency(1, 2, TangencySide::Right, 4).unwrap();
        let words: Vec<BraidWord> = right.iter().map(|e| e.compile(4).unwrap()).collect();
        assert!(words[0].equals(&w(4, &[-1, 2, 2, 2, 1])).unwrap());
        for ws in [&left, &right] {
            let total: i64 = ws.iter().map(|e| e.compile(4).unwrap().exponent_sum()).sum();
            assert_eq!(total, 9);
        }
    }

    #[test]
    fn full_twist_is_central() {
        let d = full_twist(4).unwrap();
        for i in 1..4 {
            let s = w(4, &[i]);
            assert!(d.concat(&s).unwrap().equals(&s.concat(&d).unwrap()).unwrap());
        }
        assert_eq!(d.normal_form().delta_power(), 2);
    }
}
