//! Exhaustive checks over every supported type.

use std::collections::{BTreeSet, HashSet};

use alcovefold::affine::AffineComplex;
use alcovefold::moment_graph::{verify_modified_is_label_rotation, MomentGraph};
use alcovefold::root_system::{Root, RootSystem, SUPPORTED_TYPES};
use alcovefold::weyl::{WeylElement, WeylGroup};

fn groups() -> Vec<WeylGroup> {
    SUPPORTED_TYPES
        .iter()
        .map(|t| WeylGroup::from_type(t).unwrap())
        .collect()
}

#[test]
fn coxeter_relations_hold_in_finite_and_affine_groups() {
    for label in SUPPORTED_TYPES {
        let cx = AffineComplex::from_type(label).unwrap();
        let g = cx.group();
        let n = cx.rank();
        for i in 1..=n {
            for j in 1..=n {
                let m = g.root_system().coxeter_entry(i, j) as usize;
                let pair = g.mul(g.generator(i), g.generator(j));
                let mut power = g.identity();
                for k in 1..=m {
                    power = g.mul(power, pair);
                    assert_eq!(power == g.identity(), k == m, "{label} s{i}s{j}");
                }
            }
        }
        for s in 0..=n as u8 {
            assert_eq!(cx.from_word(&[s, s]), cx.identity(), "{label} s{s}^2");
            assert_eq!(cx.ell(&cx.from_word(&[s])), 1);
        }
    }
}

#[test]
fn group_orders_and_longest_elements() {
    let expected = [("A1", 2, 1), ("A2", 6, 3), ("A3", 24, 6), ("B2", 8, 4), ("B3", 48, 9), ("C3", 48, 9), ("G2", 12, 6)];
    for (label, order, l_w0) in expected {
        let g = WeylGroup::from_type(label).unwrap();
        assert_eq!(g.order(), order, "{label}");
        assert_eq!(g.length(g.longest_element()), l_w0, "{label}");
        assert_eq!(g.root_system().num_positive(), l_w0, "{label}");
        assert!(g.elements().all(|w| g.length(w) <= l_w0));
    }
}

/// Independent closure: apply simple reflections to the simple roots until
/// nothing new appears.
fn closure(rs: &RootSystem) -> BTreeSet<Root> {
    let n = rs.rank();
    let mut seen: BTreeSet<Root> = (1..=n).map(|i| Root::simple(n, i)).collect();
    let mut frontier: Vec<Root> = seen.iter().cloned().collect();
    while let Some(beta) = frontier.pop() {
        for i in 1..=n {
            let r = rs.reflect_root(i, &beta);
            if seen.insert(r.clone()) {
                frontier.push(r);
            }
        }
    }
    seen
}

#[test]
fn positive_roots_are_the_positive_part_of_the_reflection_closure() {
    for g in groups() {
        let rs = g.root_system();
        let all = closure(rs);
        let positive: BTreeSet<Root> = all.iter().filter(|r| r.is_positive()).cloned().collect();
        let table: BTreeSet<Root> = rs.positive_roots().iter().cloned().collect();
        assert_eq!(positive, table, "{}", rs.label());
        assert_eq!(all.len(), 2 * table.len());
        assert!(all.iter().all(|r| r.is_positive() || r.negated().is_positive()));
        let top = rs.root(rs.highest_root());
        assert!(rs.positive_roots().iter().all(|r| r.height() <= top.height()));
        assert_eq!(rs.coxeter_number(), top.height() + 1);
    }
}

#[test]
fn reflection_between_matches_conjugates_of_generators() {
    for g in groups() {
        let n = g.rank();
        let reflections: HashSet<WeylElement> = g
            .elements()
            .flat_map(|x| (1..=n).map(move |i| (x, i)))
            .map(|(x, i)| g.mul(g.mul(x, g.generator(i)), g.inverse(x)))
            .collect();
        assert_eq!(reflections.len(), g.root_system().num_positive());
        for u in g.elements() {
            for w in g.elements() {
                let r = g.reflection_between(u, w);
                let is_reflection = reflections.contains(&g.mul(w, g.inverse(u)));
                assert_eq!(r.is_some(), is_reflection);
                assert_eq!(r.is_some(), reflections.contains(&g.mul(g.inverse(u), w)));
                if g.distance(u, w) == 1 {
                    assert!(r.is_some());
                }
                if let Some(alpha) = r {
                    assert!(g.root_system().is_positive(alpha));
                    assert_eq!(g.mul(g.reflection(alpha), u), w);
                }
            }
        }
    }
}

#[test]
fn chamber_sides_split_the_group_and_determine_the_element() {
    for g in groups() {
        let rs = g.root_system();
        for alpha in rs.positive_ids() {
            let positive = g.elements().filter(|&v| g.chamber_side(alpha, v) == 1).count();
            assert_eq!(2 * positive, g.order());
        }
        let masks: HashSet<u64> = g.elements().map(|v| g.negative_sides(v)).collect();
        assert_eq!(masks.len(), g.order());
        for v in g.elements() {
            assert_eq!(g.element_with_sides(g.negative_sides(v)), Some(v));
            assert_eq!(g.negative_sides(v).count_ones() as usize, g.length(v));
        }
    }
}

#[test]
fn modified_graphs_have_sink_v_and_source_w_w0() {
    for g in groups() {
        let w0 = g.longest_element();
        for v in g.elements() {
            let m = MomentGraph::modified(&g, v);
            assert!(m.is_acyclic());
            assert_eq!(m.sinks(), vec![v]);
            assert_eq!(m.sources(), vec![g.mul(v, w0)]);
        }
    }
}

#[test]
fn edge_direction_follows_chamber_sides() {
    for g in groups() {
        for v in g.elements() {
            let m = MomentGraph::modified(&g, v);
            for e in m.edges() {
                assert_eq!(g.mul(g.reflection(e.label), e.tail), e.head);
                assert_eq!(g.chamber_side(e.label, e.head), g.chamber_side(e.label, v));
                assert_ne!(g.chamber_side(e.label, e.tail), g.chamber_side(e.label, v));
                assert!(g.distance(e.head, v) < g.distance(e.tail, v));
            }
        }
    }
}

#[test]
fn directed_paths_are_bounded_by_the_longest_element() {
    for g in groups() {
        let l_w0 = g.length(g.longest_element());
        for v in g.elements() {
            let m = MomentGraph::modified(&g, v);
            for u in g.elements() {
                let longest = m.longest_path_from(u).unwrap();
                assert!(longest <= l_w0);
                assert_eq!(longest, g.distance(u, v), "{} {}", g.format(u), g.format(v));
            }
        }
    }
}

#[test]
fn directed_paths_are_prefix_closed() {
    for label in ["A2", "B2", "G2", "A3"] {
        let g = WeylGroup::from_type(label).unwrap();
        for v in g.elements() {
            let m = MomentGraph::modified(&g, v);
            let paths = m.directed_paths_from(g.mul(v, g.longest_element())).unwrap();
            let set: HashSet<_> = paths.iter().cloned().collect();
            for p in &paths {
                let mut q = p.clone();
                while q.0.pop().is_some() {
                    assert!(set.contains(&q));
                }
                assert!(m.follow(g.mul(v, g.longest_element()), p).is_some());
            }
        }
    }
}

#[test]
fn undirected_graph_is_regular_and_plain_is_modified_w0() {
    for g in groups() {
        let undirected = MomentGraph::undirected(&g);
        for v in g.elements() {
            assert_eq!(undirected.degree(v), g.root_system().num_positive());
        }
        let plain = MomentGraph::bruhat(&g);
        let modified = MomentGraph::modified(&g, g.longest_element());
        assert_eq!(plain.edges(), modified.edges());
    }
}

#[test]
fn every_modified_graph_is_a_label_rotation_of_the_plain_graph() {
    for g in groups() {
        for v in g.elements() {
            let report = verify_modified_is_label_rotation(&g, v);
            assert!(report.holds, "{} {}", g.root_system().label(), g.format(v));
            assert_eq!(report.sink, Some(v));
        }
    }
}

#[test]
fn alcove_points_avoid_walls() {
    // the chosen interior point of an alcove lies on no wall
    let cx = AffineComplex::from_type("G2").unwrap();
    let rs = cx.root_system();
    for e in cx.region(2) {
        let x = cx.point(&e.alcove);
        for alpha in rs.positive_ids() {
            let p = rs.pair(rs.root(alpha), &x);
            assert_ne!(p.numer() % p.denom(), 0, "point on a wall");
        }
    }
}
