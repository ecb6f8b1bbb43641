use proptest::prelude::*;

use braid_monodromy::braid::{markov_destabilize, solver, BraidWord};
use braid_monodromy::halftwist::{compile_z, HalfTwistExpr};
use braid_monodromy::link::{engine, jones, same_up_to_relabeling, summarize, LinkSummary};

/// A strand count in `lo..=hi` and a word of up to `len` letters on it.
fn word(lo: usize, hi: usize, len: usize) -> impl Strategy<Value = BraidWord> {
    (lo..=hi).prop_flat_map(move |n| {
        prop::collection::vec((1..n as i64, any::<bool>()), 0..=len).prop_map(move |v| {
            let letters: Vec<i64> = v.into_iter().map(|(g, pos)| if pos { g } else { -g }).collect();
            BraidWord::from_signed(n, &letters).unwrap()
        })
    })
}

/// Up to `k` (kind, position, generator) choices for [`rewrite`].
fn moves(k: usize) -> impl Strategy<Value = Vec<(u8, usize, usize, bool)>> {
    prop::collection::vec((0u8..4, any::<usize>(), any::<usize>(), any::<bool>()), 1..=k)
}

/// Applies relation rewrites and free insertions or cancellations; every
/// step keeps the braid the same.
fn rewrite(w: &BraidWord, steps: &[(u8, usize, usize, bool)]) -> BraidWord {
    let n = w.strands();
    let mut v = w.signed();
    for &(kind, pos, gen, sign) in steps {
        match kind {
            0 => {
                let at = pos % (v.len() + 1);
                let g = (gen % (n - 1)) as i64 + 1;
                let g = if sign { g } else { -g };
                v.splice(at..at, [g, -g]);
            }
            1 if v.len() >= 2 => {
                let at = pos % (v.len() - 1);
                if (v[at].abs() - v[at + 1].abs()).abs() >= 2 {
                    v.swap(at, at + 1);
                }
            }
            2 if v.len() >= 3 => {
                let at = pos % (v.len() - 2);
                let (a, b, c) = (v[at], v[at + 1], v[at + 2]);
                if a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1 {
                    v[at] = b;
                    v[at + 1] = a;
                    v[at + 2] = b;
                }
            }
            3 if v.len() >= 2 => {
                if let Some(at) = (0..v.len() - 1).map(|k| (k + pos) % (v.len() - 1)).find(|&k| v[k] == -v[k + 1]) {
                    v.drain(at..at + 2);
                }
            }
            _ => {}
        }
    }
    BraidWord::from_signed(n, &v).unwrap()
}

fn same_link(a: &LinkSummary, b: &LinkSummary) -> bool {
    a.component_count == b.component_count
        && a.jones == b.jones
        && same_up_to_relabeling(&a.linking_matrix, &b.linking_matrix)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn normal_form_is_canonical(w in word(2, 7, 40), steps in moves(16)) {
        prop_assert_eq!(w.normal_form(), rewrite(&w, &steps).normal_form());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn equality_survives_rewrites(w in word(2, 7, 40), steps in moves(12)) {
        let r = rewrite(&w, &steps);
        prop_assert!(w.equals(&r).unwrap());
        prop_assert_eq!(w.normal_form(), r.normal_form());
        prop_assert!(solver("artin").unwrap().equal(&w, &r).unwrap());
        prop_assert_eq!(w.permutation_image(), r.permutation_image());
        prop_assert_eq!(w.exponent_sum(), r.exponent_sum());
    }

    #[test]
    fn normal_form_agrees_with_the_artin_action(a in word(3, 3, 12), tail in word(3, 3, 4), steps in moves(6)) {
        // equal exactly when the tail is trivial, which short tails often are
        let b = rewrite(&a.concat(&tail).unwrap(), &steps);
        let garside = solver("garside").unwrap().equal(&a, &b).unwrap();
        let artin = solver("artin").unwrap().equal(&a, &b).unwrap();
        prop_assert_eq!(garside, artin);
        prop_assert_eq!(garside, solver("artin").unwrap().equal(&tail, &BraidWord::identity(3).unwrap()).unwrap());
    }

    #[test]
    fn normal_form_word_is_the_same_braid(w in word(2, 6, 30)) {
        let nf = w.normal_form();
        prop_assert!(solver("artin").unwrap().equal(&w, &nf.to_word()).unwrap());
    }

    #[test]
    fn inverse_cancels(w in word(2, 6, 25)) {
        let id = w.concat(&w.inverse()).unwrap();
        prop_assert!(id.equals(&BraidWord::identity(w.strands()).unwrap()).unwrap());
    }

    #[test]
    fn rotation_is_an_automorphism(a in word(4, 4, 15), b in word(4, 4, 15)) {
        let ab = a.concat(&b).unwrap();
        prop_assert!(ab.rotate().equals(&a.rotate().concat(&b.rotate()).unwrap()).unwrap());
        prop_assert_eq!(a.normal_form().delta_power(), a.rotate().normal_form().delta_power());
    }

    #[test]
    fn half_twists_swap_their_endpoints(n in 2usize..=7, i in 1usize..7, j in 2usize..=7, bar in any::<bool>()) {
        prop_assume!(i < j && j <= n);
        let z = compile_z(i, j, bar, 1, n).unwrap();
        prop_assert_eq!(z.exponent_sum(), 1);
        let img = z.permutation_image();
        prop_assert_eq!(img.image(i - 1), j - 1);
        prop_assert_eq!(img.image(j - 1), i - 1);
        let base = if bar { HalfTwistExpr::zbar(i, j) } else { HalfTwistExpr::z(i, j) };
        let e = HalfTwistExpr::Power { base: Box::new(base), exponent: 3 };
        let inv = HalfTwistExpr::Inverse(Box::new(e.clone())).compile(n).unwrap();
        prop_assert!(inv.equals(&e.compile(n).unwrap().inverse()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jones_survives_rewrites(w in word(2, 5, 20), steps in moves(8)) {
        prop_assert_eq!(jones(&w).unwrap(), jones(&rewrite(&w, &steps)).unwrap());
    }

    #[test]
    fn closure_survives_conjugation(w in word(2, 5, 20), by in word(5, 5, 6)) {
        let by = BraidWord::from_signed(w.strands(), &by.signed().into_iter().filter(|g| (g.unsigned_abs() as usize) < w.strands()).collect::<Vec<_>>()).unwrap();
        let c = w.conjugate(&by).unwrap();
        prop_assert!(same_link(&summarize(&w).unwrap(), &summarize(&c).unwrap()));
    }

    #[test]
    fn closure_survives_rotation(w in word(2, 5, 20)) {
        prop_assert!(same_link(&summarize(&w).unwrap(), &summarize(&w.rotate()).unwrap()));
    }

    #[test]
    fn closure_survives_stabilization(w in word(2, 5, 20), sign in prop_oneof![Just(1i64), Just(-1)]) {
        let n = w.strands();
        let s = w.widen(n + 1).unwrap().concat(&BraidWord::generator(n + 1, n, sign).unwrap()).unwrap();
        prop_assert!(same_link(&summarize(&w).unwrap(), &summarize(&s).unwrap()));
    }

    #[test]
    fn destabilization_keeps_the_closure(w in word(2, 4, 12)) {
        let d = markov_destabilize(&w);
        prop_assert!(d.strands() <= w.strands());
        prop_assert!(same_link(&summarize(&w).unwrap(), &summarize(&d).unwrap()));
    }

    #[test]
    fn bracket_engines_agree(w in word(2, 4, 10)) {
        let tl = engine("temperley-lieb").unwrap().bracket(&w).unwrap();
        let ss = engine("state-sum").unwrap().bracket(&w).unwrap();
        prop_assert_eq!(tl, ss);
    }
}
