use super::*;
use crate::builtins;
use proptest::prelude::*;

fn set(elems: &[usize]) -> ElemSet {
    ElemSet::from_elems(elems.iter().map(|e| e - 1))
}

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Brute-force isomorphism by trying every relabelling.
fn isomorphic(a: &Matroid, b: &Matroid) -> bool {
    let n = a.size();
    if n != b.size() || a.bases().len() != b.bases().len() {
        return false;
    }
    let target: HashSet<ElemSet> = b.bases().iter().copied().collect();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let maps = a
            .bases()
            .iter()
            .all(|s| target.contains(&ElemSet::from_elems(s.iter().map(|e| perm[e]))));
        if maps {
            return true;
        }
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

#[test]
fn five_vector_bases_match_listed_triples() {
    let listed = [[1, 2, 3], [1, 2, 5], [1, 3, 4], [1, 3, 5], [1, 4, 5], [2, 3, 4], [2, 4, 5], [3, 4, 5]];
    let from_list =
        Matroid::from_bases(labels(5), listed.iter().map(|b| set(b)).collect()).unwrap();
    assert_eq!(from_list.rank_total(), 3);
    let from_matrix = builtins::five_vector();
    let mut expected: Vec<ElemSet> = listed.iter().map(|b| set(b)).collect();
    expected.sort_by(|a, b| a.lex_cmp(*b));
    assert_eq!(from_matrix.bases(), expected.as_slice());
    assert_eq!(from_list, from_matrix);
}

#[test]
fn single_basis_single_element() {
    let m = Matroid::from_bases(labels(1), vec![set(&[1])]).unwrap();
    assert_eq!(m.rank_total(), 1);
    assert_eq!(m.independent_count(), 2);
}

#[test]
fn exchange_violation_is_reported() {
    let err = Matroid::from_bases(labels(4), vec![set(&[1, 2]), set(&[3, 4])]).unwrap_err();
    assert!(matches!(err, Error::BasisExchangeViolation { .. }), "{err:?}");
}

#[test]
fn zero_column_is_a_loop() {
    let f = FiniteField::prime(2).unwrap();
    let m = GFMatrix::from_columns(f, &[vec![1, 0], vec![0, 0], vec![0, 1]]).unwrap();
    let mat = Matroid::from_gf_matrix(&m, None).unwrap();
    assert!(!mat.is_independent(set(&[2])));
    assert_eq!(mat.loops(), set(&[2]));
}

#[test]
fn m22_is_u23() {
    let m = builtins::m22();
    assert_eq!(m, Matroid::uniform(2, 3).unwrap());
    let pg = Matroid::projective_geometry(2, 2).unwrap();
    assert_eq!(pg.size(), 3);
    assert_eq!(pg.bases().len(), 3);
}

#[test]
fn projective_geometry_sizes() {
    let m = Matroid::projective_geometry(2, 3).unwrap();
    assert_eq!((m.size(), m.bases().len()), (7, 28));
    let p = Matroid::projective_geometry(2, 1).unwrap();
    assert_eq!((p.size(), p.bases().len()), (1, 1));
    let m32 = Matroid::projective_geometry(3, 2).unwrap();
    assert_eq!((m32.size(), m32.bases().len()), (4, 6));
    assert!(matches!(Matroid::projective_geometry(2, 6), Err(Error::GuardExceeded(_))));
}

#[test]
fn truncations() {
    let m = Matroid::projective_geometry(2, 3).unwrap();
    let t = m.truncation(2).unwrap();
    assert_eq!((t.rank_total(), t.bases().len()), (2, 21));
    assert_eq!(m.truncation(3).unwrap(), m);
    let f = builtins::five_vector().truncation(1).unwrap();
    assert_eq!((f.rank_total(), f.bases().len()), (1, 5));
    assert!(m.truncation(0).is_err());
    assert!(m.truncation(4).is_err());
}

#[test]
fn boolean_matroids() {
    let b3 = Matroid::boolean(3).unwrap();
    assert_eq!(b3.bases(), &[set(&[1, 2, 3])]);
    assert_eq!(Matroid::boolean(1).unwrap().bases(), &[set(&[1])]);
    assert_eq!(Matroid::boolean(4).unwrap().independent_count(), 16);
}

#[test]
fn fano_plane_is_m23() {
    let fano = builtins::fano_spec().build().unwrap();
    assert_eq!(fano.rank_total(), 3);
    assert!(isomorphic(&fano, &Matroid::projective_geometry(2, 3).unwrap()));
}

#[test]
fn degenerate_plane_rejected() {
    let lines = [set(&[1, 2, 3]), set(&[1, 4, 5]), set(&[2, 4, 6])];
    let err = Matroid::projective_plane(labels(6), &lines).unwrap_err();
    assert!(matches!(err, Error::AxiomViolation(_)));
}

#[test]
fn plane_of_order_three() {
    let m = builtins::plane3_spec().unwrap().build().unwrap();
    assert_eq!((m.size(), m.rank_total()), (13, 3));
    // 13 lines with C(4,3) collinear triples each
    let collinear = 13 * 4;
    assert_eq!(m.bases().len(), k_subsets(13, 3).len() - collinear);
    assert_eq!(m.bases().len(), Matroid::projective_geometry(3, 3).unwrap().bases().len());
}

#[test]
fn direct_sums() {
    let b1 = Matroid::boolean(1).unwrap();
    let s = b1.direct_sum(&b1).unwrap();
    assert_eq!(s.bases(), Matroid::boolean(2).unwrap().bases());
    let t = builtins::m22().direct_sum(&b1).unwrap();
    assert_eq!((t.rank_total(), t.bases().len()), (3, 3));
    let u = builtins::five_vector().direct_sum(&Matroid::boolean(2).unwrap()).unwrap();
    assert_eq!((u.rank_total(), u.bases().len()), (5, 8));
    assert_eq!(u.labels()[0], "1.1");
}

#[test]
fn closures() {
    let m = builtins::five_vector();
    assert_eq!(m.closure(set(&[1, 2])), set(&[1, 2, 4]));
    assert_eq!(m.closure(ElemSet::EMPTY), ElemSet::EMPTY);
    assert!(m.is_flat(set(&[1, 2, 4])));
    assert!(!m.is_flat(set(&[1, 2])));
    let pg = Matroid::projective_geometry(2, 3).unwrap();
    for pair in k_subsets(7, 2) {
        assert_eq!(pg.closure(pair).len(), 3);
    }
}

#[test]
fn class_counts() {
    let counts = |m: &Matroid| m.equivalence_classes().unwrap().counts();
    assert_eq!(counts(&builtins::five_vector()), vec![1, 5, 6, 1]);
    assert_eq!(counts(&builtins::m22()), vec![1, 3, 1]);
    assert_eq!(counts(&Matroid::boolean(3).unwrap()), vec![1, 3, 3, 1]);
    assert_eq!(counts(&Matroid::projective_geometry(2, 3).unwrap()), vec![1, 7, 7, 1]);
}

#[test]
fn classes_partition_the_family() {
    let m = builtins::five_vector();
    let c = m.equivalence_classes().unwrap();
    assert_eq!(c.total_members(), m.independent_count());
    for class in c.iter() {
        assert!(class.members.iter().all(|s| m.closure(*s) == class.flat));
    }
    // representative is the lexicographically least member
    let cls = &c.levels[2][0];
    assert_eq!(cls.representative(), set(&[1, 2]));
    assert_eq!(cls.members, vec![set(&[1, 2]), set(&[1, 4]), set(&[2, 4])]);
}

#[test]
fn axioms_hold_for_constructed_matroids() {
    for m in [
        builtins::five_vector(),
        Matroid::projective_geometry(2, 3).unwrap(),
        Matroid::boolean(4).unwrap(),
    ] {
        assert!(m.check_axioms().unwrap().ok());
    }
}

#[test]
fn bases_have_size_n_for_projective_geometries() {
    for (q, n) in [(2, 2), (2, 3), (3, 2), (4, 2), (3, 3)] {
        let m = Matroid::projective_geometry(q, n).unwrap();
        assert!(m.bases().iter().all(|b| b.len() == n));
    }
}

#[test]
fn json_specs_round_trip() {
    let text = r#"{"type":"truncation","i":2,"of":{"type":"pg","q":2,"n":3}}"#;
    let m = MatroidSpec::from_json(text).unwrap().build().unwrap();
    assert_eq!(m.bases().len(), 21);
    let echo = serde_json::to_string(&m.canonical_spec()).unwrap();
    let again = MatroidSpec::from_json(&echo).unwrap().build().unwrap();
    assert_eq!(again, m);
    let sum = r#"{"type":"direct_sum","parts":[{"type":"boolean","n":1},{"type":"boolean","n":1}]}"#;
    assert_eq!(MatroidSpec::from_json(sum).unwrap().build().unwrap().bases().len(), 1);
}

fn small_matroid() -> impl Strategy<Value = Matroid> {
    prop_oneof![
        Just(builtins::five_vector()),
        Just(Matroid::projective_geometry(2, 3).unwrap()),
        Just(Matroid::projective_geometry(3, 2).unwrap()),
        (1usize..6).prop_map(|n| Matroid::boolean(n).unwrap()),
        (1usize..6).prop_flat_map(|n| (0..=n).prop_map(move |r| Matroid::uniform(r, n).unwrap())),
    ]
}

proptest! {
    #[test]
    fn rank_is_submodular_and_unit_increase(m in small_matroid(), a in any::<u64>(), b in any::<u64>()) {
        let g = m.ground().bits();
        let (a, b) = (ElemSet(a & g), ElemSet(b & g));
        prop_assert!(m.rank(a) + m.rank(b) >= m.rank(a | b) + m.rank(a & b));
        for e in m.ground().iter() {
            let d = m.rank(a.with(e)) - m.rank(a);
            prop_assert!(d <= 1);
        }
    }

    #[test]
    fn closure_is_a_closure_operator(m in small_matroid(), a in any::<u64>(), b in any::<u64>()) {
        let g = m.ground().bits();
        let (a, b) = (ElemSet(a & g), ElemSet(b & g));
        let ca = m.closure(a);
        prop_assert!(a.is_subset(ca));
        prop_assert_eq!(m.closure(ca), ca);
        prop_assert!(ca.is_subset(m.closure(a | b)));
    }

    #[test]
    fn direct_sum_rank_is_additive(m1 in small_matroid(), m2 in small_matroid()) {
        prop_assume!(m1.size() + m2.size() <= 14);
        let s = m1.direct_sum(&m2).unwrap();
        prop_assert_eq!(s.rank_total(), m1.rank_total() + m2.rank_total());
    }
}
