use std::sync::Arc;

use fiberscope_core::certify::{reference_ph0, reference_ph1};
use fiberscope_core::fiber_tree::{membership, sample_fiber, NerveVertex, StarFiberProblem};
use fiberscope_core::graph::{build_graph, critical_value_sequence, digraph_of, is_typical};
use fiberscope_core::io::{parse_value, Rational};
use fiberscope_core::persistence::{
    ph1_cycle, sublevel_ph0, Death, PersistenceDiagram, PersistencePoint,
};
use fiberscope_core::strings::{classify_f, enumerate_strings, glb, leq, CellularString, Octagon};
use fiberscope_core::{int, Shape, Value, VertexFunction};
use proptest::prelude::*;

fn shape() -> impl Strategy<Value = Shape> {
    prop_oneof![
        (3usize..10).prop_map(Shape::Path),
        (3usize..10).prop_map(Shape::Cycle),
        proptest::collection::vec(2usize..4, 3..5).prop_map(Shape::Star),
    ]
}

/// A shape with values in `0..range`, halved so some are fractional.
fn function(range: i64) -> impl Strategy<Value = VertexFunction> {
    shape().prop_flat_map(move |s| {
        let n = build_graph(&s).unwrap().vertex_count();
        proptest::collection::vec(0..range, n).prop_map(move |xs| {
            VertexFunction::on(&s, xs.into_iter().map(|x| Value::new(x, 2)).collect()).unwrap()
        })
    })
}

fn typical_cycle() -> impl Strategy<Value = VertexFunction> {
    (3usize..13).prop_flat_map(|n| {
        Just((0..n as i64).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |xs| {
                VertexFunction::on(&Shape::Cycle(n), xs.into_iter().map(int).collect()).unwrap()
            })
    })
}

fn map_diagram(p: &PersistenceDiagram, f: impl Fn(Value) -> Value) -> PersistenceDiagram {
    let points = p
        .points()
        .iter()
        .map(|q| match q.death {
            Death::Finite(d) => PersistencePoint::finite(f(q.birth), f(d)),
            Death::Infinite => PersistencePoint::essential(f(q.birth)),
        })
        .collect();
    PersistenceDiagram::new(p.dim(), points)
}

/// Classes of equal-valued neighbours with no strictly lower neighbour.
fn minimum_classes(z: &VertexFunction) -> usize {
    let g = z.graph();
    let n = z.len();
    let mut class: Vec<usize> = (0..n).collect();
    fn find(c: &mut [usize], mut x: usize) -> usize {
        while c[x] != x {
            x = c[x];
        }
        x
    }
    for &[a, b] in g.edges() {
        if z.value(a) == z.value(b) {
            let (ra, rb) = (find(&mut class, a), find(&mut class, b));
            class[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut has_lower = vec![false; n];
    for &[a, b] in g.edges() {
        if z.value(a) < z.value(b) {
            let r = find(&mut class, b);
            has_lower[r] = true;
        } else if z.value(b) < z.value(a) {
            let r = find(&mut class, a);
            has_lower[r] = true;
        }
    }
    (0..n)
        .filter(|&v| find(&mut class, v) == v && !has_lower[v])
        .count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn elder_rule_matches_reference(z in function(12)) {
        prop_assert_eq!(sublevel_ph0(&z).unwrap(), reference_ph0(&z));
        prop_assert_eq!(ph1_cycle(&z), reference_ph1(&z));
    }

    #[test]
    fn diagram_follows_monotone_relabelling(z in function(12), a in 1i64..5, b in -5i64..5) {
        let f = |x: Value| x * int(a) + int(b);
        let w = z.with_values(z.values().iter().map(|&x| f(x)).collect()).unwrap();
        prop_assert_eq!(sublevel_ph0(&w).unwrap(), map_diagram(&sublevel_ph0(&z).unwrap(), f));
    }

    #[test]
    fn one_point_per_minimum_class(z in function(8)) {
        prop_assert_eq!(sublevel_ph0(&z).unwrap().len(), minimum_classes(&z));
    }

    #[test]
    fn two_sided_edges_are_ties(z in function(6)) {
        let d = digraph_of(&z);
        for &[a, b] in z.graph().edges() {
            prop_assert!(d.has_arc(a, b) || d.has_arc(b, a));
            prop_assert_eq!(d.has_arc(a, b) && d.has_arc(b, a), z.value(a) == z.value(b));
        }
        let distinct = {
            let mut v = z.values().to_vec();
            v.sort();
            v.dedup();
            v.len() == z.len()
        };
        prop_assert_eq!(is_typical(&z), distinct);
    }

    #[test]
    fn cycle_extrema_alternate(z in typical_cycle()) {
        let cvs = critical_value_sequence(&z).unwrap();
        prop_assert!(cvs.alternates_cyclically());
        prop_assert_eq!(cvs.len(), 2 * sublevel_ph0(&z).unwrap().len());
    }

    #[test]
    fn rotation_keeps_the_diagram(z in typical_cycle(), k in 0usize..12) {
        let mut v = z.values().to_vec();
        let n = v.len();
        v.rotate_left(k % n);
        let w = z.with_values(v).unwrap();
        prop_assert_eq!(sublevel_ph0(&w).unwrap(), sublevel_ph0(&z).unwrap());
    }

    #[test]
    fn rational_json_round_trip(num in -10_000i64..10_000, den in 1i64..10_000) {
        let r = Rational(Value::new(num, den));
        let text = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&text).unwrap(), r);
        prop_assert_eq!(parse_value(&format!("{num}/{den}")).unwrap(), r.0);
    }
}

fn str_case() -> impl Strategy<Value = (usize, usize)> {
    (4usize..9).prop_flat_map(|n| (Just(n), 1usize..=(n - 1) / 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn string_order_is_a_partial_order((n, m) in str_case(), seed in any::<u64>()) {
        let p = enumerate_strings(n, m).unwrap();
        let els = p.elements();
        let pick = |k: u64| &els[(seed.wrapping_mul(k + 1).rotate_left(k as u32 * 7) % els.len() as u64) as usize];
        for k in 0..40 {
            let (a, b, c) = (pick(3 * k), pick(3 * k + 1), pick(3 * k + 2));
            prop_assert!(leq(a, a));
            if leq(a, b) && leq(b, a) {
                prop_assert_eq!(a, b);
            }
            if leq(a, b) && leq(b, c) {
                prop_assert!(leq(a, c));
            }
            if let Ok(g) = glb(&[a.clone(), b.clone()]) {
                prop_assert!(leq(&g, a) && leq(&g, b));
            }
        }
    }

    #[test]
    fn symmetries_preserve_validity((n, m) in str_case(), k in 0usize..9) {
        let p = enumerate_strings(n, m).unwrap();
        for s in p.elements() {
            prop_assert!(p.contains(&s.rotate(k % n)));
            prop_assert!(p.contains(&s.reversed()));
            let flipped = s.bit_flipped();
            if let Ok(f) = flipped {
                prop_assert!(CellularString::new(f.symbols().to_vec(), f.rank()).is_ok());
            }
            let q = classify_f(s);
            prop_assert!(Octagon::ALL.contains(&q));
        }
    }

    #[test]
    fn sampled_points_are_covered(n in 3usize..6, seed in any::<u64>()) {
        let p = StarFiberProblem::new(&vec![2; n]).unwrap();
        for z in sample_fiber(&p, 50, seed).unwrap() {
            prop_assert!(NerveVertex::from_membership(n, &membership(&p, &z)).is_some());
        }
    }
}

#[test]
fn shared_graph_is_reused() {
    let g = Arc::new(build_graph(&Shape::Cycle(4)).unwrap());
    let z = VertexFunction::new(Arc::clone(&g), vec![int(0); 4]).unwrap();
    assert!(Arc::ptr_eq(z.graph_arc(), &g));
}
