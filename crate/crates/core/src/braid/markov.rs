//! Markov destabilization.
//!
//! A braid on `n` strands whose word, after cyclic rotation, reads
//! `v · σ_{n-1}^{±1}` with `v` in `B_{n-1}` has the same closure as `v`.
//! The same holds at the left edge for `σ_1` after renumbering. The search
//! below walks a bounded neighbourhood of the word under rewrites that keep
//! the closure type (cyclic rotation, far commutation, braid relations and
//! cyclic free cancellation) looking for a form with a single letter on an
//! edge generator.

use std::collections::{HashSet, VecDeque};

use crate::braid::word::BraidWord;

/// Upper bound on words visited per destabilization step.
pub const SEARCH_LIMIT: usize = 20_000;

fn cyclic_reduce(mut w: Vec<i64>) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::with_capacity(w.len());
    for x in w.drain(..) {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    while out.len() >= 2 && out[0] == -out[out.len() - 1] {
        out.pop();
        out.remove(0);
    }
    out
}

fn neighbours(w: &[i64]) -> Vec<Vec<i64>> {
    let len = w.len();
    let mut out = Vec::new();
    if len >= 2 {
        let mut r = w[1..].to_vec();
        r.push(w[0]);
        out.push(r);
    }
    for p in 0..len.saturating_sub(1) {
        let (a, b) = (w[p], w[p + 1]);
        if (a.abs() - b.abs()).abs() >= 2 {
            let mut r = w.to_vec();
            r.swap(p, p + 1);
            out.push(r);
        }
    }
    for p in 0..len.saturating_sub(2) {
        let (a, b, c) = (w[p], w[p + 1], w[p + 2]);
        if (a.abs() - b.abs()).abs() != 1 {
            continue;
        }
        let sa = a.signum();
        let (i, j) = (a.abs(), b.abs());
        let mut r = w.to_vec();
        if a == c {
            // σ_i σ_j σ_i = σ_j σ_i σ_j (same signs)
            if a.signum() == b.signum() {
                r[p] = b;
                r[p + 1] = a;
                r[p + 2] = b;
                out.push(r);
            }
        } else if a == -c {
            // σ_i^a σ_j^b σ_i^-a = σ_j^-a σ_i^b σ_j^a
            r[p] = -sa * j;
            r[p + 1] = b.signum() * i;
            r[p + 2] = sa * j;
            out.push(r);
        }
    }
    out
}

fn single_edge_letter(w: &[i64], strands: usize) -> Option<(usize, bool)> {
    let top = strands as i64 - 1;
    for &edge in &[top, 1] {
        let hits: Vec<usize> = (0..w.len()).filter(|&p| w[p].abs() == edge).collect();
        if hits.len() == 1 {
            return Some((hits[0], edge == 1 && top != 1));
        }
    }
    None
}

fn destabilize_once(w: &[i64], strands: usize) -> Option<Vec<i64>> {
    let start = cyclic_reduce(w.to_vec());
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        if let Some((p, left_edge)) = single_edge_letter(&cur, strands) {
            let mut rest: Vec<i64> = cur[p + 1..].to_vec();
            rest.extend_from_slice(&cur[..p]);
            if left_edge {
                rest = rest.iter().map(|x| x - x.signum()).collect();
            }
            return Some(rest);
        }
        if seen.len() >= SEARCH_LIMIT {
            continue;
        }
        for nb in neighbours(&cur) {
            let nb = cyclic_reduce(nb);
            if seen.insert(nb.clone()) {
                queue.push_back(nb);
            }
        }
    }
    None
}

/// Removes strands by Markov destabilization while a destabilizable form
/// can be found. Each step drops one strand, so at most `n - 1` steps run.
pub fn markov_destabilize(word: &BraidWord) -> BraidWord {
    let mut strands = word.strands();
    let mut cur = word.signed();
    while strands > 1 {
        match destabilize_once(&cur, strands) {
            Some(next) => {
                cur = next;
                strands -= 1;
            }
            None => break,
        }
    }
    BraidWord::from_signed(strands, &cur).expect("destabilization keeps indices in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &[i64]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn conic_line_braid_destabilizes_to_t24() {
        let d = markov_destabilize(&w(3, &[2, 2, 1, 2, 2]));
        assert_eq!(d, w(2, &[1, 1, 1, 1]));
    }

    #[test]
    fn single_crossing_is_unknot() {
        assert_eq!(markov_destabilize(&w(2, &[1])), w(1, &[]));
        assert_eq!(markov_destabilize(&w(2, &[-1])), w(1, &[]));
    }

    #[test]
    fn split_strand_is_kept() {
        // closure is a 2-component unlink; no destabilization applies
        assert_eq!(markov_destabilize(&w(2, &[])), w(2, &[]));
        assert_eq!(markov_destabilize(&w(2, &[1, 1])), w(2, &[1, 1]));
    }

    #[test]
    fn rewrites_expose_single_letter() {
        // σ1σ2σ1σ2 = σ2σ1σ2σ2 has a single σ1
        let d = markov_destabilize(&w(3, &[1, 2, 1, 2]));
        assert!(d.strands() < 3);
    }
}
