//! Artin's faithful action of `B_n` on the free group `F_n`.
//!
//! Two braids are equal iff they induce the same automorphism, so comparing
//! the freely reduced images of the free generators decides the word problem
//! by a route that shares nothing with the Garside normal form.

use crate::braid::word::BraidWord;

/// Free-group word on generators `1..=n`; negative entries are inverses.
pub type FreeWord = Vec<i64>;

fn push_reduced(out: &mut FreeWord, x: i64) {
    if out.last() == Some(&-x) {
        out.pop();
    } else {
        out.push(x);
    }
}

fn invert(w: &[i64]) -> FreeWord {
    w.iter().rev().map(|x| -x).collect()
}

/// Images of `x_1, .., x_n` under the automorphism of `word`.
///
/// `σ_i` acts by `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i`. Letters are applied
/// as successive substitutions; the induced map on words is an anti-homomorphism,
/// which is still injective and therefore decides equality.
pub fn action(word: &BraidWord) -> Vec<FreeWord> {
    let n = word.strands() as i64;
    let mut images: Vec<FreeWord> = (1..=n).map(|k| vec![k]).collect();
    for l in word.letters() {
        let i = l.index as i64;
        let (img_i, img_next): (FreeWord, FreeWord) = if l.positive {
            (vec![i, i + 1, -i], vec![i])
        } else {
            (vec![i + 1], vec![-(i + 1), i, i + 1])
        };
        for image in images.iter_mut() {
            let mut out = FreeWord::with_capacity(image.len());
            for &x in image.iter() {
                let g = x.abs();
                let sub: FreeWord = if g == i {
                    img_i.clone()
                } else if g == i + 1 {
                    img_next.clone()
                } else {
                    vec![g]
                };
                let sub = if x > 0 { sub } else { invert(&sub) };
                for y in sub {
                    push_reduced(&mut out, y);
                }
            }
            *image = out;
        }
    }
    images
}
