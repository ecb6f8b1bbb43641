use braid_monodromy::braid::{BraidWord, NormalForm};
use braid_monodromy::halftwist::{compile_chain, parse_expr, z_expansions, HalfTwistExpr};

fn compiled(text: &str, n: usize) -> BraidWord {
    parse_expr(text).unwrap_or_else(|e| panic!("{text}: {e}")).compile(n).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn assert_same(lhs: &str, rhs: &str, n: usize) {
    let a = compiled(lhs, n);
    let b = compiled(rhs, n);
    assert!(a.equals(&b).unwrap(), "{lhs} != {rhs} on {n} strands");
}

#[test]
fn both_expansions_agree() {
    for n in 2..=7 {
        for i in 1..n {
            for j in i + 1..=n {
                for bar in [false, true] {
                    let [a, b] = z_expansions(i, j, bar, n).unwrap();
                    assert!(a.equals(&b).unwrap(), "Z({i},{j}) bar={bar} n={n}");
                    assert_eq!(a.exponent_sum(), 1);
                    let img = a.permutation_image();
                    for s in 1..=n {
                        let want = if s == i { j } else if s == j { i } else { s };
                        assert_eq!(img.image(s - 1), want - 1);
                    }
                }
            }
        }
    }
}

#[test]
fn chain_powers_give_full_twist() {
    for m in 2..=5 {
        // the chain is the half twist, so its square is the full twist
        let twist = compile_chain(1, m - 1, 2, m).unwrap();
        let nf = NormalForm::of(&twist);
        assert_eq!(nf.delta_power(), 2, "m={m}");
        assert!(nf.factors().is_empty());
        let direct: Vec<i64> = (0..m).flat_map(|_| 1..m as i64).collect();
        assert!(twist.equals(&BraidWord::from_signed(m, &direct).unwrap()).unwrap());
    }
}

#[test]
fn doubled_node_identities() {
    for n in 4..=8 {
        for j in 2..=n / 2 {
            for i in 1..j {
                // grouped twist of a doubled point around a single one
                assert_same(&format!("Z[{i} {i}',{j}]^2"), &format!("Z[{i}',{j}]^2 Z[{i},{j}]^2"), n);
                assert_same(&format!("Z[{i}',{j} {j}']^2"), &format!("Z[{i}',{j}']^2 Z[{i}',{j}]^2"), n);
                assert_same(&format!("Z[{i}',{j} {j}']^-2"), &format!("Z[{i}',{j}]^-2 Z[{i}',{j}']^-2"), n);
                assert_same(&format!("Zb[{i}',{j} {j}']^-2"), &format!("Zb[{i}',{j}']^-2 Zb[{i}',{j}]^-2"), n);
                assert_same(&format!("Z[{i} {i}',{j}]^-2"), &format!("Z[{i},{j}]^-2 Z[{i}',{j}]^-2"), n);
                // both points doubled
                assert_same(&format!("Z[{i} {i}',{j} {j}']^2"), &format!("Z[{i}',{j} {j}']^2 Z[{i},{j} {j}']^2"), n);
                assert_same(&format!("Z[{i} {i}',{j} {j}']^-2"), &format!("Z[{i},{j} {j}']^-2 Z[{i}',{j} {j}']^-2"), n);
                assert_same(
                    &format!("Z[{i} {i}',{j} {j}']^2"),
                    &format!("Z[{i}',{j}']^2 Z[{i}',{j}]^2 Z[{i},{j}']^2 Z[{i},{j}]^2"),
                    n,
                );
            }
        }
    }
}

#[test]
fn inverse_matches_word_inverse() {
    for text in ["Z[1,3]^2 Zb[2,4]", "Z[1,2]^{Z[2,4]^2}", "Z[1..3]^-1 s2"] {
        let e = parse_expr(text).unwrap();
        let inv = HalfTwistExpr::Inverse(Box::new(e.clone())).compile(4).unwrap();
        assert!(inv.equals(&e.compile(4).unwrap().inverse()).unwrap());
    }
}

#[test]
fn triangle_and_table_products() {
    assert!(compiled("Z[1,2]^2 Zb[1,3]^2 Z[2,3]^2", 3)
        .equals(&BraidWord::from_signed(3, &[1, 2, 2, 1, 2, 2]).unwrap())
        .unwrap());
    let want = BraidWord::from_signed(4, &[1, 3, 2, 3, 3, 2, 3, -1]).unwrap();
    assert!(compiled("Z[1,3,4]^2", 4).equals(&want).unwrap());
}
