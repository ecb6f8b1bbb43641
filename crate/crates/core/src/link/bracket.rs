//! Kauffman bracket of braid closures, in the variable `A`.
//!
//! Two engines compute the same polynomial: a sweep through the
//! Temperley–Lieb algebra (each `σ_i^{±1}` is `A^{±1}·1 + A^{∓1}·e_i`, closed
//! with the Markov trace) and the exhaustive sum over all `2^c` smoothings.

use std::collections::HashMap;

use crate::braid::word::BraidWord;
use crate::error::{Error, Result};
use crate::link::poly::LaurentPoly;

/// Largest strand count accepted by the Temperley–Lieb sweep.
pub const MAX_TL_STRANDS: usize = 10;

/// Largest crossing count accepted by the state sum.
pub const MAX_STATE_SUM_CROSSINGS: usize = 22;

/// Loop value `δ = −A² − A⁻²`.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

pub trait BracketEngine: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn bracket(&self, w: &BraidWord) -> Result<LaurentPoly>;
}

/// A Temperley–Lieb diagram on `n` strands: a perfect matching on points
/// `0..n` (top) and `n..2n` (bottom).
type Diagram = Vec<u8>;

fn identity_diagram(n: usize) -> Diagram {
    (0..2 * n).map(|p| ((p + n) % (2 * n)) as u8).collect()
}

/// Stacks `d` above `e`, returning the product and the number of closed loops.
fn compose(d: &[u8], e: &[u8], n: usize) -> (Diagram, usize) {
    // points: d top 0..n, d bottom n..2n (= e top), e bottom 2n..3n
    let mut out = vec![0u8; 2 * n];
    let mut middle_seen = vec![false; n];
    let walk = |start_in_d: bool, start: usize, seen: &mut Vec<bool>| -> usize {
        // returns the outer endpoint reached (0..n top, n..2n bottom)
        let mut in_d = start_in_d;
        let mut p = start;
        loop {
            let q = if in_d { d[p] as usize } else { e[p] as usize };
            if in_d {
                if q < n {
                    return q;
                }
                seen[q - n] = true;
                in_d = false;
                p = q - n;
            } else {
                if q >= n {
                    return q;
                }
                seen[q] = true;
                in_d = true;
                p = q + n;
            }
        }
    };
    for t in 0..n {
        let end = walk(true, t, &mut middle_seen);
        out[t] = end as u8;
        out[end] = t as u8;
    }
    for b in n..2 * n {
        let end = walk(false, b, &mut middle_seen);
        out[b] = end as u8;
        out[end] = b as u8;
    }
    let mut loops = 0;
    for m in 0..n {
        if middle_seen[m] {
            continue;
        }
        loops += 1;
        // trace the closed loop through the middle points
        let mut p = m;
        loop {
            middle_seen[p] = true;
            let q = e[p] as usize;
            middle_seen[q] = true;
            let r = d[q + n] as usize - n;
            if r == m {
                break;
            }
            p = r;
        }
    }
    (out, loops)
}

fn generator_diagram(n: usize, i: usize) -> Diagram {
    let mut d = identity_diagram(n);
    let (a, b) = (i - 1, i);
    d[a] = b as u8;
    d[b] = a as u8;
    d[n + a] = (n + b) as u8;
    d[n + b] = (n + a) as u8;
    d
}

/// Number of loops in the closure of a diagram (top `k` joined to bottom `k`).
fn closure_loops(d: &[u8], n: usize) -> usize {
    let mut seen = vec![false; 2 * n];
    let mut loops = 0;
    for s in 0..2 * n {
        if seen[s] {
            continue;
        }
        loops += 1;
        let mut p = s;
        loop {
            seen[p] = true;
            let q = d[p] as usize;
            seen[q] = true;
            let r = if q < n { q + n } else { q - n };
            if r == s {
                break;
            }
            p = r;
        }
    }
    loops
}

pub struct TemperleyLieb;

impl BracketEngine for TemperleyLieb {
    fn name(&self) -> &'static str {
        "temperley-lieb"
    }

    fn description(&self) -> &'static str {
        "letter-by-letter sweep in the Temperley-Lieb algebra with Markov trace"
    }

    fn bracket(&self, w: &BraidWord) -> Result<LaurentPoly> {
        let n = w.strands();
        if n > MAX_TL_STRANDS {
            return Err(Error::TooManyStrands { strands: n, max: MAX_TL_STRANDS });
        }
        let delta = loop_value();
        let delta_pows: Vec<LaurentPoly> = (0..=n).map(|k| delta.pow(k as u32)).collect();
        let mut state: HashMap<Diagram, LaurentPoly> = HashMap::new();
        state.insert(identity_diagram(n), LaurentPoly::one());
        let gens: Vec<Diagram> = (1..n).map(|i| generator_diagram(n, i)).collect();
        for l in w.letters() {
            let s = l.sign() as i32;
            let keep = LaurentPoly::monomial(s, 1);
            let smooth = LaurentPoly::monomial(-s, 1);
            let mut next: HashMap<Diagram, LaurentPoly> = HashMap::with_capacity(state.len() * 2);
            for (d, c) in state {
                let (e, loops) = compose(&d, &gens[l.index - 1], n);
                let ce = &(&c * &smooth) * &delta_pows[loops];
                *next.entry(e).or_default() += &ce;
                *next.entry(d).or_default() += &(&c * &keep);
            }
            next.retain(|_, c| !c.is_zero());
            state = next;
        }
        let mut total = LaurentPoly::zero();
        for (d, c) in state {
            let loops = closure_loops(&d, n);
            total += &(&c * &delta_pows[loops - 1]);
        }
        Ok(total)
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let nx = parent[y];
        parent[y] = r;
        y = nx;
    }
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra] = rb;
    }
}

pub struct StateSum;

impl BracketEngine for StateSum {
    fn name(&self) -> &'static str {
        "state-sum"
    }

    fn description(&self) -> &'static str {
        "exhaustive sum over all smoothings of the closed diagram"
    }

    fn bracket(&self, w: &BraidWord) -> Result<LaurentPoly> {
        let n = w.strands();
        let c = w.len();
        if c > MAX_STATE_SUM_CROSSINGS {
            return Err(Error::TooManyCrossings { crossings: c, max: MAX_STATE_SUM_CROSSINGS });
        }
        let node = |level: usize, pos: usize| level * n + pos;
        let delta = loop_value();
        let delta_pows: Vec<LaurentPoly> = (0..=n + c).map(|k| delta.pow(k as u32)).collect();
        // loops -> exponent of A -> count
        let mut tally: HashMap<(usize, i32), i64> = HashMap::new();
        let mut parent = vec![0usize; (c + 1) * n];
        for state in 0u64..(1u64 << c) {
            for (k, p) in parent.iter_mut().enumerate() {
                *p = k;
            }
            let mut exp = 0i32;
            for (level, l) in w.letters().iter().enumerate() {
                let (a, b) = (l.index - 1, l.index);
                for p in 0..n {
                    if p != a && p != b {
                        union(&mut parent, node(level, p), node(level + 1, p));
                    }
                }
                let smooth_e = state >> level & 1 == 1;
                if smooth_e {
                    union(&mut parent, node(level, a), node(level, b));
                    union(&mut parent, node(level + 1, a), node(level + 1, b));
                    exp -= l.sign() as i32;
                } else {
                    union(&mut parent, node(level, a), node(level + 1, a));
                    union(&mut parent, node(level, b), node(level + 1, b));
                    exp += l.sign() as i32;
                }
            }
            for p in 0..n {
                union(&mut parent, node(c, p), node(0, p));
            }
            let loops = (0..(c + 1) * n).filter(|&k| find(&mut parent, k) == k).count();
            *tally.entry((loops, exp)).or_insert(0) += 1;
        }
        let mut total = LaurentPoly::zero();
        for ((loops, exp), count) in tally {
            total += &(&LaurentPoly::monomial(exp, count) * &delta_pows[loops - 1]);
        }
        Ok(total)
    }
}

static ENGINES: &[&dyn BracketEngine] = &[&TemperleyLieb, &StateSum];

pub fn engines() -> &'static [&'static dyn BracketEngine] {
    ENGINES
}

pub fn engine(name: &str) -> Result<&'static dyn BracketEngine> {
    ENGINES
        .iter()
        .copied()
        .find(|e| e.name() == name)
        .ok_or_else(|| Error::UnknownName { kind: "bracket engine", name: name.to_string() })
}

/// Kauffman bracket of the closure using the Temperley–Lieb sweep.
pub fn kauffman_bracket(w: &BraidWord) -> Result<LaurentPoly> {
    TemperleyLieb.bracket(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &[i64]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn unknot_and_kink() {
        for e in engines() {
            assert!(e.bracket(&w(1, &[])).unwrap().is_one(), "{}", e.name());
            assert_eq!(e.bracket(&w(2, &[1])).unwrap(), LaurentPoly::monomial(3, -1));
            assert_eq!(e.bracket(&w(2, &[-1])).unwrap(), LaurentPoly::monomial(-3, -1));
            assert_eq!(e.bracket(&w(3, &[])).unwrap(), loop_value().pow(2));
        }
    }

    #[test]
    fn hopf_bracket() {
        let want = LaurentPoly::from_terms([(4, -1), (-4, -1)]);
        assert_eq!(kauffman_bracket(&w(2, &[1, 1])).unwrap(), want);
        assert_eq!(StateSum.bracket(&w(2, &[1, 1])).unwrap(), want);
    }

    #[test]
    fn engines_agree_on_small_words() {
        for s in [&[1i64, 1, 1, 1][..], &[1, -2, 1, -2], &[1, 2, 1, 2, 1, 2], &[2, 3, 1, 2, -3, -1, 2]] {
            let n = s.iter().map(|x| x.unsigned_abs() as usize).max().unwrap() + 1;
            let b = w(n, s);
            assert_eq!(TemperleyLieb.bracket(&b).unwrap(), StateSum.bracket(&b).unwrap(), "{s:?}");
        }
    }

    #[test]
    fn limits() {
        assert!(matches!(kauffman_bracket(&w(11, &[])), Err(Error::TooManyStrands { .. })));
        let long = w(2, &[1; 23]);
        assert!(matches!(StateSum.bracket(&long), Err(Error::TooManyCrossings { .. })));
        assert_eq!(engine("state-sum").unwrap().name(), "state-sum");
        assert!(engine("skein").is_err());
    }

    #[test]
    fn diagram_composition_counts_loops() {
        let e1 = generator_diagram(2, 1);
        let (sq, loops) = compose(&e1, &e1, 2);
        assert_eq!(sq, e1);
        assert_eq!(loops, 1);
        let id = identity_diagram(3);
        let e2 = generator_diagram(3, 2);
        assert_eq!(compose(&id, &e2, 3), (e2.clone(), 0));
        assert_eq!(closure_loops(&id, 3), 3);
        assert_eq!(closure_loops(&e2, 3), 2);
    }
}
