use braid_monodromy::braid::BraidWord;
use braid_monodromy::halftwist::parse_expr;
use braid_monodromy::link::{same_up_to_relabeling, summarize};
use braid_monodromy::monodromy::*;
use braid_monodromy::Error;

fn c(n: usize, text: &str) -> BraidWord {
    parse_expr(text).unwrap().compile(n).unwrap()
}

fn product(name: &str) -> BraidWord {
    builtin(name).unwrap().factorization().unwrap().table_product()
}

fn lines(list: &[(usize, usize, EdgeKind)]) -> Vec<(usize, usize, EdgeKind)> {
    // vertices are numbered from 1 here to follow the usual v1, v2, ... names
    list.iter().map(|&(a, b, k)| (a - 1, b - 1, k)).collect()
}

/// First piece of the pillow with the second piece's diagonal lines glued
/// along the shared boundary; v10 is the second piece's centre.
fn pillow() -> DegenerationDiagram {
    use EdgeKind::*;
    let vertices = vec![(0, 2), (1, 2), (2, 2), (0, 1), (2, 1), (0, 0), (1, 0), (2, 0), (1, 1), (4, 1)];
    let edges = lines(&[
        (6, 7, Horiz),
        (7, 8, Horiz),
        (8, 5, Vert),
        (5, 3, Vert),
        (3, 2, Horiz),
        (2, 1, Horiz),
        (1, 4, Vert),
        (4, 6, Vert),
        (5, 7, Diag),
        (7, 9, Vert),
        (9, 6, Diag),
        (4, 9, Horiz),
        (9, 5, Horiz),
        (4, 2, Diag),
        (2, 9, Vert),
        (9, 3, Diag),
        (4, 7, Diag),
        (7, 10, Vert),
        (10, 8, Diag),
        (5, 10, Horiz),
        (10, 4, Horiz),
        (5, 2, Diag),
        (2, 10, Vert),
        (10, 1, Diag),
    ]);
    DegenerationDiagram::new(vertices, edges).unwrap()
}

fn order(names: &[usize]) -> Vec<usize> {
    names.iter().map(|v| v - 1).collect()
}

#[test]
fn pillow_corners_are_type_one() {
    let d = pillow().with_order((0..10).collect()).unwrap();
    for v in [1, 3, 6, 8] {
        let class = d.classify_vertex(v - 1).unwrap();
        assert_eq!(class.k, 3, "v{v}");
        assert_eq!(class.case, LocalCase::TypeOneA, "v{v}");
    }
    assert!(matches!(d.classify_k_points(), Err(Error::Unsupported(_))));
}

#[test]
fn pillow_corner_cases_follow_the_vertex_order() {
    let clockwise = pillow().with_order(order(&[1, 2, 3, 5, 8, 7, 6, 4, 9, 10])).unwrap();
    for v in [1, 3, 6, 8] {
        assert_eq!(clockwise.classify_vertex(v - 1).unwrap().case, LocalCase::TypeOneA, "v{v}");
    }
    let rows = pillow().with_order(order(&[6, 7, 8, 4, 9, 5, 1, 2, 3, 10])).unwrap();
    assert_eq!(rows.classify_vertex(0).unwrap().case, LocalCase::TypeOneA);
    assert_eq!(rows.classify_vertex(7).unwrap().case, LocalCase::TypeOneA);
    assert_eq!(rows.classify_vertex(2).unwrap().case, LocalCase::TypeOneC);
    // the diagonal through v6 ends at v9, the largest of its three far ends
    assert_eq!(rows.classify_vertex(5).unwrap().case, LocalCase::TypeOneA);
}

#[test]
fn two_diagonals_give_type_two() {
    use EdgeKind::*;
    let d = DegenerationDiagram::new(
        vec![(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1), (1, 2)],
        lines(&[(2, 4, Diag), (2, 6, Diag), (2, 5, Vert), (4, 5, Horiz), (5, 6, Horiz), (5, 7, Vert)]),
    )
    .unwrap();
    let v2 = d.classify_vertex(1).unwrap();
    assert_eq!((v2.k, v2.case), (3, LocalCase::TypeTwo));
    assert_eq!(v2.case.configuration_name(), Some("3pt-type2"));
    assert!(matches!(d.classify_vertex(4), Err(Error::Unsupported(_))));
}

#[test]
fn two_point_cases_pick_the_matching_builtin() {
    let d = DegenerationDiagram::from_json(
        r#"{"vertices":[[0,0],[1,0],[2,0],[0,1],[1,1],[2,1]],"edges":[[0,4,"diag"],[1,4,"vert"],[1,5,"diag"]]}"#,
    )
    .unwrap();
    let names: Vec<Option<&str>> =
        d.classify_k_points().unwrap().iter().map(|v| v.case.configuration_name()).collect();
    assert_eq!(names, vec![None, Some("2pt-B"), None, None, Some("2pt-A"), None]);
}

#[test]
fn four_node_word() {
    let w = c(4, "Z[1 1',2 2']^2");
    assert!(w.equals(&c(4, "s2 s1 s3 s2^2 s1 s3 s2")).unwrap());
    let expanded = node_as_nodes(1, 2, NodeDoubling::Both).compile(4).unwrap();
    assert!(w.equals(&expanded).unwrap());
}

#[test]
fn rotated_cases_are_the_opposite_constructions() {
    let a = product("2pt-A");
    let b = product("2pt-B");
    assert!(a.rotate().equals(&b).unwrap());
    let sa = summarize(&a).unwrap();
    let sb = summarize(&b).unwrap();
    assert_eq!(sa.jones, sb.jones);
    assert!(same_up_to_relabeling(&sa.linking_matrix, &sb.linking_matrix));
    // the conic-line tangency and its mirror position
    let left = regenerate_tangency(1, 2, TangencySide::Left, 4).unwrap();
    let right = regenerate_tangency(1, 2, TangencySide::Right, 4).unwrap();
    let lw = BraidWord::product(4, left.iter().map(|e| e.compile(4).unwrap()).collect::<Vec<_>>().iter()).unwrap();
    let rw = BraidWord::product(4, right.iter().map(|e| e.compile(4).unwrap()).collect::<Vec<_>>().iter()).unwrap();
    assert!(lw.equals(&c(4, "s2 s3^3 s2 s3^3 s2")).unwrap());
    assert!(rw.equals(&c(4, "s2 s1^3 s2 s1^3 s2")).unwrap());
    assert!(lw.rotate().equals(&rw).unwrap());
}

#[test]
fn type_two_closure_matches_stated_word_but_not_as_a_braid() {
    let cfg = builtin("3pt-type2").unwrap();
    let p = cfg.factorization().unwrap().table_product();
    let stated = cfg.stated_product().unwrap().unwrap();
    assert_eq!(p.exponent_sum(), 28);
    assert!(!p.equals(&stated).unwrap());
    let (sp, ss) = (summarize(&p).unwrap(), summarize(&stated).unwrap());
    assert_eq!(sp.component_count, 4);
    assert_eq!(sp.jones, ss.jones);
    assert!(same_up_to_relabeling(&sp.linking_matrix, &ss.linking_matrix));
    // a cyclic conjugate is positive even though the product is not
    assert_eq!(p.normal_form().delta_power(), -1);
    let mut letters = p.letters().to_vec();
    let positive = (0..letters.len()).any(|_| {
        letters.rotate_left(1);
        BraidWord::new(6, letters.clone()).unwrap().normal_form().is_positive()
    });
    assert!(positive);
}

#[test]
fn builtin_configurations_round_trip_through_json() {
    for b in builtins() {
        if let Some(cfg) = b.configuration() {
            let again = Configuration::from_json(&cfg.to_json()).unwrap();
            assert_eq!(again.factorization().unwrap(), cfg.factorization().unwrap(), "{}", b.name());
        }
    }
}
