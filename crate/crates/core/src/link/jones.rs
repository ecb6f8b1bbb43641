use crate::braid::word::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::link::bracket::{BracketEngine, TemperleyLieb};
use crate::link::closure::{closure_components, component_of_strand, linking_data};
use crate::link::poly::LaurentPoly;

/// Jones polynomial of the closure, as a polynomial in `t^{1/2}`.
///
/// `V = (−A³)^{−w} ⟨L⟩` with `w` the exponent sum and `t = A⁻⁴`, so `A^k`
/// becomes `t^{-k/4}`, stored at exponent `−k/2`.
pub fn jones(w: &BraidWord) -> Result<LaurentPoly> {
    jones_with(&TemperleyLieb, w)
}

pub fn jones_with(engine: &dyn BracketEngine, w: &BraidWord) -> Result<LaurentPoly> {
    let bracket = engine.bracket(w)?;
    let writhe = w.exponent_sum();
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let normalized = bracket.shift(-3 * writhe as i32);
    let mut out = LaurentPoly::zero();
    for (&e, &c) in normalized.terms() {
        if e % 2 != 0 {
            return Err(Error::Unsupported(format!("odd A-exponent {e} in a normalized bracket")));
        }
        out.add_term(-e / 2, sign * c);
    }
    Ok(out)
}

/// `(σ_1 σ_2 ⋯ σ_{p−1})^q` on `p` strands, whose closure is the torus link `T(p, q)`.
pub fn torus_braid(p: usize, q: i64) -> Result<BraidWord> {
    if p < 2 {
        return Err(Error::InvalidStrandCount(p));
    }
    let run: Vec<i64> = (1..p as i64).collect();
    Ok(BraidWord::from_signed(p, &run)?.pow(q))
}

/// Which component to cable and how: `p` parallel copies and `t` extra
/// twists `(σ_1 ⋯ σ_{p−1})^t` among the copies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CableSpec {
    /// 0-based index into the closure components.
    pub component: usize,
    pub p: usize,
    pub t: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cable {
    pub word: BraidWord,
    /// Self-writhe of the cabled component in the input diagram. The
    /// parallel copies follow the blackboard framing, so this many full
    /// twists are already present before the extra `t`.
    pub blackboard_framing: i64,
}

/// Braid moving a block of `left` strands starting at generator `start`
/// across a block of `right` strands to its right.
fn block_cross(start: usize, left: usize, right: usize, positive: bool) -> Vec<Letter> {
    if !positive {
        let mut w = block_cross(start, right, left, true);
        w.reverse();
        return w.into_iter().map(Letter::inverse).collect();
    }
    let mut out = Vec::with_capacity(left * right);
    for k in (0..left).rev() {
        for idx in start + k..start + k + right {
            out.push(Letter::pos(idx));
        }
    }
    out
}

/// Replaces every strand of one closure component by `p` parallel strands
/// and adds the requested twists at the top of the component's first strand.
pub fn cable(w: &BraidWord, spec: CableSpec) -> Result<Cable> {
    if spec.p == 0 {
        return Err(Error::InvalidStrandCount(0));
    }
    let comps = closure_components(w);
    let comp = comps
        .get(spec.component)
        .ok_or_else(|| Error::UnknownComponent(format!("#{}", spec.component + 1)))?;
    let of = component_of_strand(&comps, w.strands());
    let width: Vec<usize> = (0..w.strands()).map(|s| if of[s] == spec.component { spec.p } else { 1 }).collect();
    let total: usize = width.iter().sum();

    let mut letters = Vec::new();
    if spec.p > 1 && spec.t != 0 {
        let first = comp[0] - 1;
        let start: usize = width[..first].iter().sum::<usize>() + 1;
        let run: Vec<Letter> = (start..start + spec.p - 1).map(Letter::pos).collect();
        let twist = BraidWord::new(total, run)?.pow(spec.t);
        letters.extend_from_slice(twist.letters());
    }
    let mut at: Vec<usize> = (0..w.strands()).collect();
    for l in w.letters() {
        let (a, b) = (at[l.index - 1], at[l.index]);
        let start: usize = at[..l.index - 1].iter().map(|&s| width[s]).sum::<usize>() + 1;
        letters.extend(block_cross(start, width[a], width[b], l.positive));
        at.swap(l.index - 1, l.index);
    }
    let (_, writhes) = linking_data(w);
    Ok(Cable { word: BraidWord::new(total, letters)?, blackboard_framing: writhes[spec.component] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::closure::linking_matrix;

    fn w(n: usize, s: &[i64]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn unknot_diagrams_have_trivial_jones() {
        assert!(jones(&w(1, &[])).unwrap().is_one());
        assert!(jones(&w(2, &[1])).unwrap().is_one());
        assert!(jones(&w(3, &[1, -2])).unwrap().is_one());
        assert!(jones(&torus_braid(4, 1).unwrap()).unwrap().is_one());
    }

    #[test]
    fn known_polynomials() {
        // positive Hopf link: −t^{1/2} − t^{5/2}
        assert_eq!(jones(&w(2, &[1, 1])).unwrap(), LaurentPoly::from_terms([(1, -1), (5, -1)]));
        // right-handed trefoil: t + t³ − t⁴
        assert_eq!(jones(&w(2, &[1, 1, 1])).unwrap(), LaurentPoly::from_terms([(2, 1), (6, 1), (8, -1)]));
        // figure eight is amphichiral
        let fig8 = jones(&w(3, &[1, -2, 1, -2])).unwrap();
        assert_eq!(fig8, fig8.mirror());
        // 2-component unlink: −t^{1/2} − t^{−1/2}
        assert_eq!(jones(&w(2, &[])).unwrap(), LaurentPoly::from_terms([(1, -1), (-1, -1)]));
    }

    #[test]
    fn torus_words() {
        assert_eq!(torus_braid(2, 4).unwrap().signed(), vec![1, 1, 1, 1]);
        assert_eq!(closure_components(&torus_braid(3, 3).unwrap()).len(), 3);
        assert!(torus_braid(1, 2).is_err());
    }

    #[test]
    fn trivial_cable_is_identity() {
        let b = w(3, &[1, 2, -1, 2, 2]);
        for c in 0..closure_components(&b).len() {
            let cab = cable(&b, CableSpec { component: c, p: 1, t: 0 }).unwrap();
            assert_eq!(cab.word, b);
        }
        assert!(cable(&b, CableSpec { component: 5, p: 2, t: 0 }).is_err());
    }

    #[test]
    fn cable_counts_components() {
        // unknot component of the Hopf link doubled
        let hopf = w(2, &[1, 1]);
        let c20 = cable(&hopf, CableSpec { component: 0, p: 2, t: 0 }).unwrap();
        assert_eq!(c20.word.strands(), 3);
        assert_eq!(closure_components(&c20.word).len(), 3);
        let c21 = cable(&hopf, CableSpec { component: 0, p: 2, t: 1 }).unwrap();
        assert_eq!(closure_components(&c21.word).len(), 2);
        assert_eq!(linking_matrix(&c21.word)[0][1], 2);
        let c22 = cable(&hopf, CableSpec { component: 0, p: 2, t: 2 }).unwrap();
        assert_eq!(closure_components(&c22.word).len(), 3);
    }

    #[test]
    fn block_crossings() {
        assert_eq!(block_cross(1, 1, 1, true), vec![Letter::pos(1)]);
        let two_one: Vec<i64> = block_cross(1, 2, 1, true).iter().map(|l| l.signed()).collect();
        assert_eq!(two_one, vec![2, 1]);
        let neg: Vec<i64> = block_cross(1, 2, 1, false).iter().map(|l| l.signed()).collect();
        assert_eq!(neg, vec![-2, -1]);
    }

    #[test]
    fn blackboard_framing_reported() {
        let b = w(2, &[1, 1, 1]);
        assert_eq!(cable(&b, CableSpec { component: 0, p: 2, t: 0 }).unwrap().blackboard_framing, 3);
    }
}
