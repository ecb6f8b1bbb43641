//! Components and linking numbers of braid closures.

use crate::braid::word::{BraidWord, Letter};
use crate::error::{Error, Result};

/// Link components of the closure as sets of 1-based strand labels (by
/// starting position), one per cycle of the permutation, each sorted and
/// ordered by smallest strand.
pub fn closure_components(w: &BraidWord) -> Vec<Vec<usize>> {
    w.permutation_image()
        .cycles()
        .into_iter()
        .map(|c| {
            let mut c: Vec<usize> = c.into_iter().map(|s| s + 1).collect();
            c.sort_unstable();
            c
        })
        .collect()
}

/// Component index for each starting strand (0-based).
pub(crate) fn component_of_strand(components: &[Vec<usize>], strands: usize) -> Vec<usize> {
    let mut of = vec![0; strands];
    for (k, comp) in components.iter().enumerate() {
        for &s in comp {
            of[s - 1] = k;
        }
    }
    of
}

/// Follows each crossing through the word, reporting the starting strands of
/// the two strands involved and the sign.
fn crossings(w: &BraidWord) -> Vec<(usize, usize, i64)> {
    let mut at: Vec<usize> = (0..w.strands()).collect();
    let mut out = Vec::with_capacity(w.len());
    for l in w.letters() {
        let (a, b) = (at[l.index - 1], at[l.index]);
        out.push((a, b, l.sign()));
        at.swap(l.index - 1, l.index);
    }
    out
}

/// Linking matrix (zero diagonal) and self-writhe of each component, both
/// indexed like [`closure_components`].
pub fn linking_data(w: &BraidWord) -> (Vec<Vec<i64>>, Vec<i64>) {
    let comps = closure_components(w);
    let of = component_of_strand(&comps, w.strands());
    let k = comps.len();
    let mut twice = vec![vec![0i64; k]; k];
    let mut writhe = vec![0i64; k];
    for (a, b, s) in crossings(w) {
        let (ca, cb) = (of[a], of[b]);
        if ca == cb {
            writhe[ca] += s;
        } else {
            twice[ca][cb] += s;
            twice[cb][ca] += s;
        }
    }
    let lk = twice.into_iter().map(|row| row.into_iter().map(|x| x / 2).collect()).collect();
    (lk, writhe)
}

pub fn linking_matrix(w: &BraidWord) -> Vec<Vec<i64>> {
    linking_data(w).0
}

/// The sub-braid of one closure component (0-based index into
/// [`closure_components`]): other strands are deleted together with every
/// crossing they take part in, and the rest are renumbered in order.
pub fn extract_component(w: &BraidWord, component: usize) -> Result<BraidWord> {
    let comps = closure_components(w);
    let comp = comps.get(component).ok_or_else(|| Error::UnknownComponent(format!("#{}", component + 1)))?;
    let keep: Vec<bool> = (1..=w.strands()).map(|s| comp.contains(&s)).collect();
    let mut at: Vec<usize> = (0..w.strands()).collect();
    let mut letters = Vec::new();
    for l in w.letters() {
        let (a, b) = (at[l.index - 1], at[l.index]);
        if keep[a] && keep[b] {
            // position among kept strands of the left crossing strand
            let rank = at[..l.index - 1].iter().filter(|&&s| keep[s]).count();
            letters.push(Letter { index: rank + 1, positive: l.positive });
        }
        at.swap(l.index - 1, l.index);
    }
    BraidWord::new(comp.len(), letters)
}

/// Whether two linking matrices agree after some relabeling of components.
pub fn same_up_to_relabeling(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    let mut perm: Vec<usize> = (0..n).collect();
    fn search(a: &[Vec<i64>], b: &[Vec<i64>], perm: &mut Vec<usize>, k: usize) -> bool {
        let n = a.len();
        if k == n {
            return true;
        }
        for j in k..n {
            perm.swap(k, j);
            let ok = (0..=k).all(|r| a[r][k] == b[perm[r]][perm[k]] && a[k][r] == b[perm[k]][perm[r]]);
            if ok && search(a, b, perm, k + 1) {
                return true;
            }
            perm.swap(k, j);
        }
        false
    }
    search(a, b, &mut perm, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &[i64]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn identity_closure_is_unlink() {
        assert_eq!(closure_components(&w(3, &[])), vec![vec![1], vec![2], vec![3]]);
        assert_eq!(linking_matrix(&w(3, &[])), vec![vec![0; 3]; 3]);
    }

    #[test]
    fn hopf_and_t24() {
        assert_eq!(linking_matrix(&w(2, &[1, 1])), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(linking_matrix(&w(2, &[1, 1, 1, 1])), vec![vec![0, 2], vec![2, 0]]);
        assert_eq!(linking_matrix(&w(2, &[-1, -1])), vec![vec![0, -1], vec![-1, 0]]);
    }

    #[test]
    fn self_crossings_go_to_writhe() {
        let (lk, wr) = linking_data(&w(3, &[1, 1, 1, 2, 2]));
        assert_eq!(closure_components(&w(3, &[1, 1, 1, 2, 2])), vec![vec![1, 2], vec![3]]);
        assert_eq!(wr, vec![3, 0]);
        assert_eq!(lk, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn extraction_drops_foreign_crossings() {
        let b = w(4, &[2, 3, 3, 2, 1, 1]);
        let comps = closure_components(&b);
        assert_eq!(comps.len(), 4);
        let c = extract_component(&b, 0).unwrap();
        assert_eq!(c.strands(), 1);
        assert!(c.is_empty());
        // strands 1 and 2 cross three times; strand 3 crosses strand 1 twice
        let b = w(3, &[1, 2, 2, 1, 1]);
        let comps = closure_components(&b);
        assert_eq!(comps, vec![vec![1, 2], vec![3]]);
        assert_eq!(extract_component(&b, 0).unwrap().signed(), vec![1, 1, 1]);
        assert!(extract_component(&b, 2).is_err());
    }

    #[test]
    fn relabeling() {
        let a = vec![vec![0, 1, 2], vec![1, 0, 3], vec![2, 3, 0]];
        let b = vec![vec![0, 3, 1], vec![3, 0, 2], vec![1, 2, 0]];
        assert!(same_up_to_relabeling(&a, &b));
        let c = vec![vec![0, 3, 3], vec![3, 0, 2], vec![3, 2, 0]];
        assert!(!same_up_to_relabeling(&a, &c));
    }
}
