use fiberscope_core::homology::{
    betti, connected_components, order_complex, order_complex_with_limit, FinitePoset,
};
use fiberscope_core::io::ComplexDoc;
use fiberscope_core::strings::{enumerate_strings, CellularString, Octagon, Selector, StringPoset};
use fiberscope_core::{Error, SimplicialComplex};

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn octagon() -> FinitePoset {
    let labels = Octagon::ALL.iter().map(ToString::to_string).collect();
    let covers: Vec<_> = Octagon::COVERS
        .iter()
        .map(|(a, b)| (a.index(), b.index()))
        .collect();
    FinitePoset::from_covers(labels, &covers).unwrap()
}

#[test]
fn octagon_complex() {
    let k = order_complex(&octagon()).unwrap();
    assert_eq!(k.counts(), vec![8, 8]);
    let b = betti(&k);
    assert_eq!((b.ranks.clone(), b.euler), (vec![1, 1], 0));
    assert_eq!(connected_components(&k), 1);
}

#[test]
fn small_complexes() {
    let chain = FinitePoset::from_covers(labels(3), &[(0, 1), (1, 2)]).unwrap();
    let k = order_complex(&chain).unwrap();
    assert_eq!(k.counts(), vec![3, 3, 1]);
    assert!(betti(&k).is_point_like());

    let anti = FinitePoset::from_covers(labels(4), &[]).unwrap();
    let k = order_complex(&anti).unwrap();
    assert_eq!(k.counts(), vec![4]);
    assert_eq!(betti(&k).ranks, vec![4, 0]);

    let point = order_complex(&FinitePoset::from_covers(labels(1), &[]).unwrap()).unwrap();
    assert_eq!(betti(&point).ranks, vec![1, 0]);

    let two_edges = SimplicialComplex::from_simplices(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
    assert_eq!(connected_components(&two_edges), 2);
}

#[test]
fn str_pipeline_examples() {
    let k = order_complex(&enumerate_strings(5, 2).unwrap().to_finite_poset()).unwrap();
    assert_eq!(betti(&k).ranks, vec![1, 1]);
    let k = order_complex(&enumerate_strings(4, 1).unwrap().to_finite_poset()).unwrap();
    assert_eq!(connected_components(&k), 1);
}

/// The image of `sub` under reversal, as a sub-poset of `whole`.
fn reversed(whole: &StringPoset, sub: &StringPoset) -> StringPoset {
    let rev: Vec<CellularString> = sub
        .elements()
        .iter()
        .map(CellularString::reversed)
        .collect();
    whole.filter(|s| rev.contains(s))
}

/// Reversal carries `Str0X` onto `StrX0`, and homology does not notice.
#[test]
fn reversal_isomorphism() {
    for (n, m) in [(6, 2), (7, 2), (8, 1)] {
        let p = enumerate_strings(n, m).unwrap();
        let a = p.subposet(Selector::Str0X);
        let b = p.subposet(Selector::StrX0);
        assert_eq!(reversed(&p, &a).elements(), b.elements());
        let ba = betti(&order_complex(&a.to_finite_poset()).unwrap());
        let bb = betti(&order_complex(&b.to_finite_poset()).unwrap());
        assert_eq!(ba, bb);
    }
}

#[test]
fn euler_and_vanishing_above_one() {
    for (n, m) in [(5, 1), (6, 2), (7, 1), (7, 3)] {
        let p = enumerate_strings(n, m).unwrap();
        let k = order_complex(&p.to_finite_poset()).unwrap();
        let b = betti(&k);
        assert_eq!(b.euler, k.euler_characteristic());
        assert!(b.ranks.iter().skip(2).all(|&r| r == 0));
        for sel in Selector::CONTRACTIBLE {
            let sub = order_complex(&p.subposet(sel).to_finite_poset()).unwrap();
            let bs = betti(&sub);
            assert_eq!(bs.ranks, vec![1, 0], "{sel} in Str({n},{m})");
            assert_eq!(bs.euler, sub.euler_characteristic());
        }
    }
}

#[test]
fn dimension_bounded_by_height() {
    let p = enumerate_strings(7, 2).unwrap().to_finite_poset();
    let k = order_complex(&p).unwrap();
    assert_eq!(k.dimension(), p.height());
    assert_eq!(p.height(), Some(3));
}

#[test]
fn simplex_guardrail() {
    let p = enumerate_strings(7, 1).unwrap().to_finite_poset();
    let total = p.chain_count();
    assert!(matches!(
        order_complex_with_limit(&p, total - 1),
        Err(Error::TooLarge { .. })
    ));
    assert_eq!(
        order_complex_with_limit(&p, total).unwrap().total() as u64,
        total
    );
}

#[test]
fn complex_json_round_trip() {
    let k = order_complex(&octagon()).unwrap();
    let doc = ComplexDoc::new(&k);
    let text = serde_json::to_string(&doc).unwrap();
    let back: ComplexDoc = serde_json::from_str(&text).unwrap();
    assert_eq!(back.to_complex().unwrap(), k);
}
