//! Left-greedy Garside normal form in `B_n`.
//!
//! Every braid is written uniquely as `Δ^k · f_1 ⋯ f_r` where each `f_i` is a
//! permutation braid (a positive braid in which any two strands cross at most
//! once), no `f_i` is trivial or equal to `Δ`, and every consecutive pair is
//! left-weighted: the starting set of `f_{i+1}` is contained in the finishing
//! set of `f_i`.
//!
//! A permutation braid is represented by its [`Permutation`], using the same
//! convention as [`BraidWord::permutation_image`]: `images[s]` is the final
//! position of the strand that starts at position `s`.

use std::fmt;

use crate::braid::perm::Permutation;
use crate::braid::word::{BraidWord, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

fn swap_perm(n: usize, i: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.swap(i, i + 1);
    p
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&x| b[x]).collect()
}

fn delta_images(n: usize) -> Vec<usize> {
    (0..n).map(|x| n - 1 - x).collect()
}

fn flip(p: &[usize]) -> Vec<usize> {
    let n = p.len();
    (0..n).map(|x| n - 1 - p[n - 1 - x]).collect()
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Generators `i` (0-based) such that `σ_i⁻¹ · s` is still positive.
fn starting_set(p: &[usize]) -> impl Iterator<Item = usize> + '_ {
    (0..p.len().saturating_sub(1)).filter(move |&i| p[i] > p[i + 1])
}

/// Generators `i` (0-based) such that `s · σ_i⁻¹` is still positive.
fn finishing_set(p: &[usize]) -> Vec<bool> {
    let inv = inverse(p);
    (0..p.len().saturating_sub(1)).map(|i| inv[i] > inv[i + 1]).collect()
}

fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &j)| i == j)
}

fn is_delta(p: &[usize]) -> bool {
    let n = p.len();
    p.iter().enumerate().all(|(i, &j)| j == n - 1 - i)
}

/// Makes the pair `(a, b)` left-weighted by sliding generators from `b` into `a`.
/// Returns whether anything moved.
fn left_weight(a: &mut Vec<usize>, b: &mut Vec<usize>) -> bool {
    let n = a.len();
    let mut moved = false;
    loop {
        let fin = finishing_set(a);
        let Some(i) = starting_set(b).find(|&i| !fin[i]) else {
            return moved;
        };
        let s = swap_perm(n, i);
        *a = compose(a, &s);
        *b = compose(&s, b);
        moved = true;
    }
}

struct Builder {
    n: usize,
    delta_power: i64,
    factors: Vec<Vec<usize>>,
}

impl Builder {
    fn push(&mut self, x: Vec<usize>) {
        self.factors.push(x);
        // sweep right-to-left until every adjacent pair is left-weighted
        loop {
            let mut changed = false;
            for j in (1..self.factors.len()).rev() {
                let (left, right) = self.factors.split_at_mut(j);
                if left_weight(&mut left[j - 1], &mut right[0]) {
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        self.tidy();
    }

    fn tidy(&mut self) {
        let leading = self.factors.iter().take_while(|f| is_delta(f)).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.delta_power += leading as i64;
        }
        while self.factors.last().is_some_and(|f| is_identity(f)) {
            self.factors.pop();
        }
        debug_assert!(self.factors.iter().all(|f| !is_identity(f)));
    }

    /// Right-multiplies by `Δ⁻¹`, which conjugates every factor by `Δ`.
    fn push_delta_inverse(&mut self) {
        for f in &mut self.factors {
            *f = flip(f);
        }
        self.delta_power -= 1;
    }
}

impl NormalForm {
    pub fn of(word: &BraidWord) -> NormalForm {
        let n = word.strands();
        let mut b = Builder { n, delta_power: 0, factors: Vec::new() };
        for l in word.letters() {
            let s = swap_perm(n, l.index - 1);
            if l.positive {
                b.push(s);
            } else {
                // σ_i⁻¹ = Δ⁻¹ · (Δ σ_i⁻¹)
                b.push_delta_inverse();
                b.push(compose(&delta_images(b.n), &s));
            }
        }
        NormalForm {
            strands: n,
            delta_power: b.delta_power,
            factors: b
                .factors
                .into_iter()
                .map(|f| Permutation::from_images(f).expect("simple factors are bijections"))
                .collect(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    /// Canonical length: number of non-`Δ` factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Whether the braid is represented by some positive word.
    pub fn is_positive(&self) -> bool {
        self.delta_power >= 0
    }

    /// Checks the structural invariants: factors are non-trivial, not `Δ`,
    /// and consecutive factors are left-weighted.
    pub fn is_valid(&self) -> bool {
        if self.factors.iter().any(|f| is_identity(f.images()) || is_delta(f.images())) {
            return false;
        }
        self.factors.windows(2).all(|pair| {
            let fin = finishing_set(pair[0].images());
            starting_set(pair[1].images()).all(|i| fin[i])
        })
    }

    /// Reduced positive word for a permutation braid.
    pub fn simple_word(strands: usize, p: &Permutation) -> BraidWord {
        let mut cur = p.images().to_vec();
        let mut rev = Vec::new();
        while !is_identity(&cur) {
            let fin = finishing_set(&cur);
            let i = fin.iter().position(|&b| b).expect("non-identity has a descent");
            cur = compose(&cur, &swap_perm(strands, i));
            rev.push(Letter::pos(i + 1));
        }
        rev.reverse();
        BraidWord::from_parts_unchecked(strands, rev)
    }

    pub fn delta_word(strands: usize) -> BraidWord {
        let p = Permutation::from_images(delta_images(strands)).expect("Δ is a bijection");
        Self::simple_word(strands, &p)
    }

    /// A word representing this normal form: `Δ^k` followed by the factors.
    pub fn to_word(&self) -> BraidWord {
        let mut w = Self::delta_word(self.strands).pow(self.delta_power);
        for f in &self.factors {
            w = w.concat(&Self::simple_word(self.strands, f)).expect("same strands");
        }
        w
    }
}

impl fmt::Display for NormalForm {
    /// `D^k . [s1 s2] . [s2]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.delta_power)?;
        for p in &self.factors {
            write!(f, " . [{}]", Self::simple_word(self.strands, p))?;
        }
        Ok(())
    }
}
