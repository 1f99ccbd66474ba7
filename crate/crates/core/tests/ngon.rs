use std::collections::BTreeSet;
use std::sync::Arc;

use fiberscope_core::graph::{build_graph, critical_value_sequence};
use fiberscope_core::ngon::{default_diagram, ngon_components};
use fiberscope_core::persistence::{in_fiber, PersistencePoint};
use fiberscope_core::{int, PersistenceDiagram, Shape, Value, VertexFunction};

fn permutations(items: &[Value]) -> Vec<Vec<Value>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Every arrangement of the extremal values around the `N`-gon with the
/// extra vertex strictly between its neighbours (at an offset chosen to avoid
/// ties with the integer inputs). Returns the number of
/// such points in the fiber and their critical value sequences up to
/// rotation.
fn brute(p: &PersistenceDiagram, max: Value) -> (usize, BTreeSet<Vec<Value>>) {
    let m = p.len();
    let n = 2 * m + 1;
    let mut extremal: Vec<Value> = p.points().iter().map(|q| q.birth).collect();
    extremal.extend(p.points().iter().filter_map(|q| q.death.finite()));
    extremal.push(max);
    let g = Arc::new(build_graph(&Shape::Cycle(n)).unwrap());
    let mut hits = 0;
    let mut classes = BTreeSet::new();
    for e in 0..n {
        for perm in permutations(&extremal) {
            let mut v = vec![int(0); n];
            for (j, &x) in perm.iter().enumerate() {
                v[(e + 1 + j) % n] = x;
            }
            let (a, b) = (v[(e + n - 1) % n], v[(e + 1) % n]);
            v[e] = a + (b - a) * Value::new(377, 1000);
            let z = VertexFunction::new(Arc::clone(&g), v).unwrap();
            if in_fiber(&z, p) {
                hits += 1;
                let mut seq = critical_value_sequence(&z).unwrap().values();
                let lowest = seq.iter().enumerate().min_by_key(|(_, x)| **x).unwrap().0;
                seq.rotate_left(lowest);
                classes.insert(seq);
            }
        }
    }
    (hits, classes)
}

fn check(p: &PersistenceDiagram, max: Value) {
    let r = ngon_components(p, max).unwrap();
    let (hits, classes) = brute(p, max);
    assert_eq!(r.class_count(), classes.len());
    let found: BTreeSet<Vec<Value>> = r.components.iter().map(|c| c.sequence.clone()).collect();
    assert_eq!(found, classes);
    assert_eq!(hits, r.class_count() * 2 * r.m * r.n);
    for c in &r.components {
        assert_eq!((c.vertices, c.edges), (2 * r.m * r.n, 2 * r.m * r.n));
        assert_eq!(c.betti.ranks, vec![1, 1]);
        assert!(c.failure.is_none());
    }
    assert!(r.pass());
}

#[test]
fn default_diagrams_match_brute_force() {
    for m in 1..=3 {
        let (p, max) = default_diagram(m).unwrap();
        check(&p, max);
    }
}

#[test]
fn triangle_with_one_point() {
    let p = PersistenceDiagram::ph0(int(0), &[]);
    let r = ngon_components(&p, int(4)).unwrap();
    assert_eq!((r.n, r.class_count()), (3, 1));
    check(&p, int(4));
}

#[test]
fn other_diagrams() {
    let cases = [
        (PersistenceDiagram::ph0(int(0), &[(int(2), int(3))]), int(7)),
        (
            PersistenceDiagram::ph0(int(0), &[(int(1), int(5)), (int(2), int(3))]),
            int(6),
        ),
        (
            PersistenceDiagram::ph0(int(0), &[(int(3), int(5)), (int(1), int(2))]),
            int(6),
        ),
    ];
    for (p, max) in cases {
        check(&p, max);
    }
}

#[test]
fn rejected_inputs() {
    let two_inf = PersistenceDiagram::new(
        0,
        vec![
            PersistencePoint::essential(int(0)),
            PersistencePoint::essential(int(1)),
        ],
    );
    assert!(ngon_components(&two_inf, int(5)).is_err());
    let repeated = PersistenceDiagram::ph0(int(0), &[(int(1), int(4)), (int(2), int(4))]);
    assert!(ngon_components(&repeated, int(5)).is_err());
    let (p, _) = default_diagram(2).unwrap();
    assert!(ngon_components(&p, int(4)).is_err());
    assert!(default_diagram(0).is_err());
}
