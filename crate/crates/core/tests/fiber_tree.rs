use std::sync::Arc;

use fiberscope_core::fiber_tree::{
    gamma_metrics, in_br, in_br_prime, in_br_prime_direct, is_simple_cycle, kturn_loop, membership,
    nerve, retract_br, retract_br_full, sample_fiber, signature_walk, verify_path,
    verify_path_in_fiber, NervePoset, NerveVertex, PLPath, StarFiberProblem,
};
use fiberscope_core::graph::critical_coordinates;
use fiberscope_core::homology::betti;
use fiberscope_core::persistence::in_fiber;
use fiberscope_core::{int, rat, Error, Value};

fn y() -> StarFiberProblem {
    StarFiberProblem::new(&[2, 2, 2]).unwrap()
}

fn ints(xs: &[i64]) -> Vec<Value> {
    xs.iter().map(|&x| int(x)).collect()
}

fn at(p: &StarFiberProblem, path: &PLPath, label: &str) -> fiberscope_core::VertexFunction {
    let i = path
        .checkpoint(label)
        .unwrap_or_else(|| panic!("no checkpoint {label}"));
    p.function(path.waypoints()[i].clone()).unwrap()
}

#[test]
fn br_examples_at_the_stages() {
    let p = y();
    let path = kturn_loop(&p, [0, 1, 2]).unwrap();
    let z_a = at(&p, &path, "A");
    assert_eq!(&z_a.values()[..3], &[int(1), int(4), int(0)]);
    assert!(in_br(&p, 0, &z_a).unwrap());
    assert_eq!(membership(&p, &z_a), vec![0]);
    for q in 0..3 {
        assert!(!in_br_prime(&p, q, &z_a).unwrap());
    }
    let z_b = at(&p, &path, "B");
    assert_eq!(z_b.value(0), int(0));
    assert!(in_br(&p, 0, &z_b).unwrap() && in_br(&p, 2, &z_b).unwrap());
    assert!(in_br_prime(&p, 1, &z_b).unwrap());
    let z_c = at(&p, &path, "C");
    assert!(!in_br(&p, 0, &z_c).unwrap());
    assert_eq!(membership(&p, &z_c), vec![2]);
}

#[test]
fn checkpoints_follow_the_hexagon() {
    let p = y();
    let path = kturn_loop(&p, [0, 1, 2]).unwrap();
    let expected = [
        ("A", NerveVertex::Br(0)),
        ("B", NerveVertex::BrPrime(1)),
        ("C", NerveVertex::Br(2)),
        ("A'", NerveVertex::BrPrime(0)),
        ("B'", NerveVertex::Br(1)),
        ("C'", NerveVertex::BrPrime(2)),
    ];
    for (label, v) in expected {
        let z = at(&p, &path, label);
        assert!(in_fiber(&z, &p.diagram()), "{label}");
        assert_eq!(
            NerveVertex::from_membership(3, &membership(&p, &z)),
            Some(v),
            "{label}"
        );
    }
    let walk = signature_walk(&p, &path).unwrap();
    assert!(is_simple_cycle(&walk, 6));
}

#[test]
fn kturn_loop_lies_in_the_fiber() {
    let p = y();
    let path = kturn_loop(&p, [0, 1, 2]).unwrap();
    assert!(path.len() >= 12);
    assert!(path.is_closed());
    let check = verify_path_in_fiber(&path, &p.diagram(), 100);
    assert!(check.pass, "{:?}", check.first_failure);
    assert_eq!(check.checked, 100 * (path.len() - 1) + 1);
    for w in path.waypoints().windows(2) {
        let changed = w[0].iter().zip(&w[1]).filter(|(a, b)| a != b).count();
        assert_eq!(changed, 1);
    }
}

/// Half a loop exchanges the vertices holding `v0` and `v1`.
#[test]
fn half_loop_switches_roles() {
    let p = y();
    let path = kturn_loop(&p, [0, 1, 2]).unwrap();
    let (a, a2) = (at(&p, &path, "A"), at(&p, &path, "A'"));
    assert_eq!(
        (a.value(2), a.value(1), a.value(0)),
        (int(0), int(4), int(1))
    );
    assert_eq!(
        (a2.value(2), a2.value(1), a2.value(0)),
        (int(1), int(4), int(0))
    );
    assert_eq!(critical_coordinates(&a), critical_coordinates(&a2));
}

#[test]
fn other_branch_orders_and_more_branches() {
    for lengths in [vec![2, 2, 2], vec![2, 2, 2, 2], vec![2, 2, 2, 2, 2]] {
        let p = StarFiberProblem::new(&lengths).unwrap();
        for branches in [[0, 1, 2], [2, 1, 0], [1, 2, 0]] {
            let path = kturn_loop(&p, branches).unwrap();
            assert!(verify_path_in_fiber(&path, &p.diagram(), 20).pass);
            let walk = signature_walk(&p, &path).unwrap();
            assert!(is_simple_cycle(&walk, 6), "{lengths:?} {branches:?}");
        }
    }
}

/// With longer branches the loop still stays in the fiber, but passes
/// through points in no `Br_q`.
#[test]
fn longer_branches() {
    for lengths in [vec![3, 2, 2], vec![3, 3, 3], vec![2, 4, 3]] {
        let p = StarFiberProblem::new(&lengths).unwrap();
        let path = kturn_loop(&p, [0, 1, 2]).unwrap();
        assert!(path.is_closed());
        assert!(
            verify_path_in_fiber(&path, &p.diagram(), 20).pass,
            "{lengths:?}"
        );
    }
    let p = StarFiberProblem::new(&[3, 3, 3]).unwrap();
    let path = kturn_loop(&p, [0, 1, 2]).unwrap();
    assert!(signature_walk(&p, &path).is_err());
}

/// `0, 4, 1` from the root along a branch of length 3: in the fiber, in no
/// `Br_q`.
#[test]
fn cover_fails_on_a_branch_of_length_three() {
    let p = StarFiberProblem::new(&[3, 2, 2]).unwrap();
    let z = p
        .function(vec![
            int(2),
            int(0),
            int(4),
            int(1),
            rat(5, 2),
            int(3),
            rat(11, 4),
            rat(13, 4),
        ])
        .unwrap();
    assert!(in_fiber(&z, &p.diagram()));
    assert!(membership(&p, &z).is_empty());
}

#[test]
fn invalid_inputs() {
    let p = y();
    let z = p.function(ints(&[0; 7])).unwrap();
    assert_eq!(in_br(&p, 3, &z), Err(Error::InvalidBranch(3)));
    assert_eq!(in_br_prime(&p, 5, &z), Err(Error::InvalidBranch(5)));
    assert!(StarFiberProblem::new(&[2, 2]).is_err());
    assert!(StarFiberProblem::new(&[2, 1, 2]).is_err());
    assert!(StarFiberProblem::with_values(&[2, 2, 2], int(1), int(0), int(4)).is_err());
    assert!(kturn_loop(&p, [0, 1, 3]).is_err());
    assert!(sample_fiber(&p, 0, 1).is_err());
}

#[test]
fn nerve_examples() {
    let n3 = gamma_metrics(&nerve(&y()));
    assert_eq!(
        (n3.vertices, n3.edges, n3.betti.ranks.clone()),
        (6, 6, vec![1, 1])
    );
    let p4 = StarFiberProblem::new(&[2, 2, 2, 2]).unwrap();
    assert_eq!(gamma_metrics(&nerve(&p4)).betti.b(1), 5);
    for n in 3..=8i64 {
        let g = NervePoset::new(n as usize).gamma();
        assert_eq!(g.euler_characteristic(), 3 * n - n * n);
        assert_eq!(betti(&g).b(1) as i64, n * n - 3 * n + 1);
    }
}

#[test]
fn verify_path_finds_a_bad_swap() {
    let p = y();
    let start = ints(&[1, 4, 0, 2, 3, 5, 6]);
    let mut end = start.clone();
    end.swap(1, 2);
    let path = PLPath::from_waypoints(Arc::clone(p.tree()), vec![start.clone(), end]).unwrap();
    let check = verify_path_in_fiber(&path, &p.diagram(), 100);
    assert!(!check.pass);
    let f = check.first_failure.unwrap();
    assert_eq!((f.segment, f.step), (0, 1));

    let constant =
        PLPath::from_waypoints(Arc::clone(p.tree()), vec![start.clone(), start]).unwrap();
    assert_eq!(constant.len(), 1);
    let check = verify_path_in_fiber(&constant, &p.diagram(), 100);
    assert!(check.pass);
    assert_eq!(check.checked, 1);
}

fn canonical_for(p: &StarFiberProblem, q: usize) -> Vec<Value> {
    let ray = p.ray(q).unwrap();
    let leaf = ray[ray.len() - 1];
    let next = ray[ray.len() - 2];
    let (v0, v1, v2) = p.values();
    (0..p.tree().vertex_count())
        .map(|v| {
            if v == leaf {
                v0
            } else if v == next {
                v2
            } else {
                v1
            }
        })
        .collect()
}

#[test]
fn retraction_from_c_prime() {
    let p = y();
    let path = kturn_loop(&p, [0, 1, 2]).unwrap();
    let z = at(&p, &path, "C'");
    assert!(in_br(&p, 0, &z).unwrap());
    let full = retract_br_full(&p, 0, &z).unwrap();
    assert_eq!(full.last(), &canonical_for(&p, 0)[..]);
    assert!(verify_path_in_fiber(&full, &p.diagram(), 50).pass);
    assert!(verify_path(&full, 50, |w| in_br(&p, 0, w).unwrap()).pass);
    for stage in 1..=3u8 {
        assert!(retract_br(&p, 0, &z, stage).unwrap().len() <= 2);
    }
    assert!(retract_br(&p, 0, &z, 4).is_err());
    // z_C' lies in Br'_2, outside Br_2.
    assert!(retract_br(&p, 2, &z, 1).is_err());
}

#[test]
fn canonical_point_is_fixed() {
    let p = StarFiberProblem::new(&[2, 3, 2]).unwrap();
    for q in 0..3 {
        let z = p.function(canonical_for(&p, q)).unwrap();
        assert!(in_fiber(&z, &p.diagram()));
        for stage in 1..=3 {
            assert_eq!(retract_br(&p, q, &z, stage).unwrap().len(), 1);
        }
    }
}

/// Sampled points: the retraction always stays in the fiber.
#[test]
fn retraction_stays_in_the_fiber() {
    for lengths in [vec![2, 2, 2], vec![2, 2, 2, 2]] {
        let p = StarFiberProblem::new(&lengths).unwrap();
        for z in sample_fiber(&p, 300, 17).unwrap() {
            for q in membership(&p, &z) {
                let path = retract_br_full(&p, q, &z).unwrap();
                assert_eq!(path.last(), &canonical_for(&p, q)[..]);
                assert!(verify_path_in_fiber(&path, &p.diagram(), 50).pass);
            }
        }
    }
}

/// A value above `v2` beyond the outermost `v0` passes through `v2` on its
/// way down, leaving `Br_q` for a moment.
#[test]
fn stage_one_can_leave_br() {
    let p = y();
    let z = p.function(ints(&[4, 0, 5, 1, 2, 5, 6])).unwrap();
    assert!(in_fiber(&z, &p.diagram()));
    assert!(in_br(&p, 0, &z).unwrap());
    let stage = retract_br(&p, 0, &z, 1).unwrap();
    assert!(verify_path_in_fiber(&stage, &p.diagram(), 50).pass);
    let check = verify_path(&stage, 50, |w| in_br(&p, 0, w).unwrap());
    assert!(!check.pass);
    assert_eq!(check.first_failure.unwrap().values[2], int(4));
}

#[test]
fn sampling_is_deterministic_and_in_the_fiber() {
    let p = StarFiberProblem::new(&[2, 3, 2, 2]).unwrap();
    let a = sample_fiber(&p, 200, 42).unwrap();
    let b = sample_fiber(&p, 200, 42).unwrap();
    let c = sample_fiber(&p, 200, 43).unwrap();
    assert_eq!(a.len(), 200);
    assert_eq!(a, b);
    assert_ne!(a, c);
    for z in &a {
        assert!(in_fiber(z, &p.diagram()));
        for v in z.values() {
            assert!(*v.denom() <= 16);
        }
    }
}

#[test]
fn prime_matches_direct_description() {
    for lengths in [vec![2, 2, 2], vec![2, 3, 2], vec![3, 2, 2, 3]] {
        let p = StarFiberProblem::new(&lengths).unwrap();
        for z in sample_fiber(&p, 2000, 3).unwrap() {
            for q in 0..lengths.len() {
                assert_eq!(
                    in_br_prime(&p, q, &z).unwrap(),
                    in_br_prime_direct(&p, q, &z).unwrap()
                );
            }
        }
    }
}

#[test]
fn cover_on_branches_of_length_two() {
    for n in 3..=5 {
        let p = StarFiberProblem::new(&vec![2; n]).unwrap();
        for z in sample_fiber(&p, 2000, n as u64).unwrap() {
            let m = membership(&p, &z);
            assert!(NerveVertex::from_membership(n, &m).is_some(), "{m:?}");
        }
    }
}
