//! Hand-checked galleries in A2 and B2 with their folding data frozen.

use std::collections::BTreeSet;

use alcovefold::affine::{AffineComplex, Alcove};
use alcovefold::gallery::{FoldingPattern, Gallery};
use alcovefold::moment_graph::MomentGraph;
use alcovefold::oracle::{
    check_crossing_direction_translated, enumerate_foldings, patterns_by_word, realize_pattern, shadow, x_set,
    Sweep, REDUCED_WORD_CAP,
};
use alcovefold::orientation::{fold_is_positive, gallery_is_positively_folded, WeylChamberOrientation};

fn complex(label: &str) -> AffineComplex {
    AffineComplex::from_type(label).unwrap()
}

fn gallery(cx: &AffineComplex, word: &str) -> (Vec<u8>, Gallery) {
    let w = cx.parse_word(word).unwrap();
    let g = Gallery::from_word(cx, cx.identity(), &w);
    (w, g)
}

fn folds(idxs: &[usize]) -> BTreeSet<usize> {
    idxs.iter().copied().collect()
}

fn pattern(cx: &AffineComplex, s: &str) -> FoldingPattern {
    FoldingPattern::parse(cx.root_system(), s).unwrap()
}

fn w0(cx: &AffineComplex) -> WeylChamberOrientation {
    WeylChamberOrientation::new(cx.group().longest_element())
}

const A2_WORD: &str = "s0 s2 s1 s0 s1 s2 s1 s0 s1";

#[test]
fn a2_base_gallery() {
    let cx = complex("A2");
    let (_, g) = gallery(&cx, A2_WORD);
    assert!(g.is_minimal(&cx));
    assert_eq!(g.end(), &Alcove::new(vec![3, 1], cx.group().parse("s1 s2 s1").unwrap()));
    assert_eq!(cx.chamber_of(g.end()), cx.group().parse("s2").unwrap());
}

#[test]
fn a2_single_fold_on_the_diagonal_wall() {
    let cx = complex("A2");
    let (_, g) = gallery(&cx, A2_WORD);
    let f = g.fold_set(&cx, &folds(&[3])).unwrap();
    assert_eq!(f.pattern_of(&cx), pattern(&cx, "(a1+a2)"));
    assert!(gallery_is_positively_folded(&w0(&cx), &cx, &f));
}

#[test]
fn a2_double_fold_and_its_direction() {
    let cx = complex("A2");
    let g_w = cx.group();
    let (_, g) = gallery(&cx, A2_WORD);
    let f = g.fold_set(&cx, &folds(&[3, 9])).unwrap();
    let p = pattern(&cx, "(a1+a2, a1)");
    assert_eq!(f.pattern_of(&cx), p);
    assert!(gallery_is_positively_folded(&w0(&cx), &cx, &f));
    let undirected = MomentGraph::undirected(g_w);
    let predicted = undirected.walk_undirected(g.end().spherical, &p);
    assert_eq!(predicted, f.end().spherical);
    assert_eq!(f.end().spherical, g_w.parse("s1").unwrap());
    let plain = MomentGraph::bruhat(g_w);
    assert!(plain.follow(cx.chamber_of(g.end()), &p).is_some());
}

#[test]
fn a2_negative_fold_leaves_the_shadow() {
    let cx = complex("A2");
    let o = w0(&cx);
    let (word, g) = gallery(&cx, A2_WORD);
    let f = g.fold_set(&cx, &folds(&[5])).unwrap();
    assert!(!fold_is_positive(&o, &cx, &f, 5).unwrap());
    let sh = shadow(&cx, &word, &o).unwrap();
    assert_eq!(sh.len(), 17);
    assert!(!sh.contains(f.end()));
    let report = enumerate_foldings(&cx, &g, &o).unwrap();
    assert_eq!(report.results.len(), 1 << 9);
    assert!(report.positive_patterns.contains(&pattern(&cx, "(a1+a2)")));
    assert!(report.positive_patterns.contains(&pattern(&cx, "(a1+a2, a1)")));
    let positive_ends: BTreeSet<Alcove> = report
        .results
        .iter()
        .filter(|r| r.positive)
        .map(|r| r.end.clone())
        .collect();
    assert_eq!(positive_ends, sh);
}

const B2_WORD: &str = "s1 s0 s1 s0 s2";

#[test]
fn b2_base_gallery() {
    let cx = complex("B2");
    let (_, g) = gallery(&cx, B2_WORD);
    assert!(g.is_minimal(&cx));
    assert_eq!(g.end(), &Alcove::new(vec![1, 2], cx.group().parse("s1 s2 s1").unwrap()));
    assert_eq!(cx.chamber_of(g.end()), cx.group().parse("s1").unwrap());
}

#[test]
fn b2_positive_double_fold() {
    let cx = complex("B2");
    let (_, g) = gallery(&cx, B2_WORD);
    let f = g.fold_set(&cx, &folds(&[4, 5])).unwrap();
    assert_eq!(f.pattern_of(&cx), pattern(&cx, "(2a1+a2, a2)"));
    assert!(gallery_is_positively_folded(&w0(&cx), &cx, &f));
}

#[test]
fn b2_triple_fold_with_negative_first_fold() {
    let cx = complex("B2");
    let o = w0(&cx);
    let (_, g) = gallery(&cx, B2_WORD);
    let f = g.fold_set(&cx, &folds(&[1, 4, 5])).unwrap();
    let p = pattern(&cx, "(a1, a2, 2a1+a2)");
    assert_eq!(f.pattern_of(&cx), p);
    assert!(!fold_is_positive(&o, &cx, &f, 1).unwrap());
    assert!(fold_is_positive(&o, &cx, &f, 4).unwrap());
    assert!(fold_is_positive(&o, &cx, &f, 5).unwrap());

    // not a directed path from s1, and never positive on a gallery into C_{s1}
    let s1 = cx.group().parse("s1").unwrap();
    assert!(MomentGraph::bruhat(cx.group()).follow(s1, &p).is_none());
    for entry in Sweep::new(&cx, 7).entries.iter().filter(|e| e.chamber == s1) {
        for word in &entry.words {
            assert!(realize_pattern(&cx, &cx.identity(), word, &o, p.roots()).is_none());
        }
    }
}

#[test]
fn positive_patterns_depend_on_the_chosen_gallery() {
    let cx = complex("A2");
    let g_w = cx.group();
    let o = WeylChamberOrientation::new(g_w.identity());
    let v = g_w.parse("s1 s2").unwrap();
    let x = Alcove::new(vec![-2, 0], v);
    assert_eq!(cx.chamber_of(&x), v);
    let graph = MomentGraph::modified(g_w, g_w.identity());
    let l_p = graph.longest_path_from(v).unwrap();
    assert_eq!(cx.wall_depth(&x, v), Some(l_p as i64));

    let word = cx.parse_word("s1 s0 s2 s1 s0 s1 s2 s0 s1 s2").unwrap();
    assert_eq!(cx.from_word(&word), x);
    let by_word = patterns_by_word(&cx, &x, &o, REDUCED_WORD_CAP);
    let here: BTreeSet<FoldingPattern> = by_word[&word].iter().cloned().map(FoldingPattern).collect();
    let expected: BTreeSet<FoldingPattern> = ["()", "(a1)", "(a1, a2)", "(a1+a2)"]
        .iter()
        .map(|s| pattern(&cx, s))
        .collect();
    assert_eq!(here, expected);

    let missing = pattern(&cx, "(a1+a2, a1)");
    assert!(graph.follow(v, &missing).is_some());
    assert!(by_word.values().any(|set| set.contains(&missing.0)));
    for path in graph.directed_paths_from(v).unwrap() {
        assert!(by_word.values().any(|set| set.contains(&path.0)));
    }
}

#[test]
fn a2_x_set_of_the_fundamental_chamber() {
    let cx = complex("A2");
    let g_w = cx.group();
    let e = g_w.identity();
    let rs = cx.root_system();
    let (a1, a2) = (rs.simple(1), rs.simple(2));
    let x = x_set(&cx, g_w.longest_element(), e, 10);
    assert_eq!(x.longest_path, 3);
    assert_eq!(x.chamber_alcoves.len(), 36);
    let expected: Vec<Alcove> = x
        .chamber_alcoves
        .iter()
        .filter(|a| cx.strip_index(a1, a) >= 2 && cx.strip_index(a2, a) >= 2)
        .cloned()
        .collect();
    assert_eq!(x.members, expected);
    assert_eq!(x.members.len(), 4);
    assert!(x.chamber_alcoves.iter().all(|a| !cx.in_shrunken_chamber(a, e, 3)));

    let wide = x_set(&cx, g_w.longest_element(), e, 14);
    assert_eq!(wide.members.len(), 16);
    let naive: Vec<&Alcove> = wide
        .chamber_alcoves
        .iter()
        .filter(|a| cx.in_shrunken_chamber(a, e, 3))
        .collect();
    assert_eq!(naive.len(), 4);
    assert!(naive.iter().all(|a| wide.members.contains(a)));
}

#[test]
fn translated_crossings_follow_the_local_chamber() {
    for label in ["A2", "B2", "G2"] {
        let cx = complex(label);
        for w in cx.group().elements() {
            let r = check_crossing_direction_translated(&cx, w, 6, 20, 11);
            assert!(r.success, "{label} {:?}", r.counterexamples);
            assert_eq!(r.count("galleries"), 20);
        }
    }
}
