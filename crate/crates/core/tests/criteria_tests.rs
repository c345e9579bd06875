mod common;

use common::{agrees, b_key, oracle_b_coefficient};
use eqcob::criteria::{
    build_linind_family, certify_action, is_nonbounding, linind_actions, subsets_by_size,
    test_indecomposable, verify_linear_independence, CoefficientKind, CriteriaError, SearchPolicy,
    Verdict,
};
use eqcob::milnor::{projective_class, MilnorAction};
use eqcob::repring::{Character, GroupHom, RepElement, RepMonomial};
use proptest::prelude::*;

const IND1: [(usize, usize); 6] = [(1, 3), (1, 4), (2, 4), (1, 5), (2, 5), (3, 5)];

fn ind2_action() -> MilnorAction {
    let hom = GroupHom::from_subsets(4, &[vec![1], vec![2], vec![3], vec![4], vec![2, 3]]).unwrap();
    MilnorAction::pulled_back(2, 5, hom).unwrap()
}

fn assert_sound(e: &RepElement, verdict: &Verdict) {
    let Some(cert) = verdict.certificate() else {
        return;
    };
    let monos: Vec<RepMonomial> = e.monomials().cloned().collect();
    let oracle = oracle_b_coefficient(e.rank(), &monos, &b_key(&cert.kind.b_index(cert.k)));
    assert!(agrees(&cert.witness, &oracle), "witness {}", cert.witness);
    assert!(!oracle.num.is_zero());
    assert!(cert.recheck(e).unwrap());
    assert!(is_nonbounding(e));
}

#[test]
fn small_certificates_are_sound() {
    for (m, n) in [(1, 3), (2, 2), (1, 2)] {
        let e = MilnorAction::standard(m, n).unwrap().eta().unwrap();
        let d = m + n - 1;
        let v = test_indecomposable(&e, d, &SearchPolicy::range(d as u32 + 1, 8)).unwrap();
        if m == 1 && n == 3 {
            assert!(v.is_proven());
        }
        assert_sound(&e, &v);
    }
    let e = projective_class(2).unwrap();
    let v = test_indecomposable(&e, 2, &SearchPolicy::range(3, 8)).unwrap();
    assert!(v.is_proven());
    assert_sound(&e, &v);
}

#[test]
fn ind1_family() {
    for (m, n) in IND1 {
        let a = MilnorAction::standard(m, n).unwrap();
        let policy = SearchPolicy::new(vec![8 + m as u32, 16 + m as u32]);
        let v = certify_action(&a, &policy).unwrap();
        let cert = v.certificate().unwrap_or_else(|| panic!("H({m},{n}) inconclusive"));
        assert_eq!(cert.degree, m + n - 1);
        assert!(cert.k as usize > cert.degree);
        assert!(is_nonbounding(&a.eta().unwrap()));
        let params = cert.params.as_ref().unwrap();
        assert_eq!((params.m, params.n), (m, n));
    }
}

#[test]
fn ind2_instance() {
    let a = ind2_action();
    assert_eq!(a.dimension(), 6);
    let v = certify_action(&a, &SearchPolicy::default_for(2, 6)).unwrap();
    let cert = v.certificate().expect("proven");
    assert_eq!(cert.degree, 6);
    assert!(cert.recheck(&a.eta().unwrap()).unwrap());
}

#[test]
fn decomposable_is_never_proven() {
    let p2 = projective_class(2).unwrap();
    let e = p2.mul(&p2).unwrap();
    let v = test_indecomposable(&e, 4, &SearchPolicy::range(5, 12)).unwrap();
    assert!(!v.is_proven());
}

#[test]
fn linind_instance() {
    let fam = build_linind_family(5, 2, 2, 4).unwrap();
    assert_eq!(fam.len(), 2);
    for (a, e) in linind_actions(5, 2, 2, 4).unwrap().iter().zip(&fam) {
        assert_eq!(a.dimension(), 5);
        let v = certify_action(a, &SearchPolicy::default_for(2, 5)).unwrap();
        assert!(v.is_proven());
        assert_eq!(&a.eta().unwrap(), e);
    }
    assert!(verify_linear_independence(&fam).unwrap());
    assert!(brute_force_independent(&fam));
}

fn brute_force_independent(es: &[RepElement]) -> bool {
    (1u32..(1 << es.len())).all(|mask| {
        let mut acc = RepElement::zero(es[0].rank()).unwrap();
        for (i, e) in es.iter().enumerate() {
            if mask & (1 << i) != 0 {
                acc = acc.add(e).unwrap();
            }
        }
        !acc.is_zero()
    })
}

#[test]
fn linind_rejects_infeasible_tuples() {
    assert!(matches!(linind_actions(4, 2, 2, 4), Err(CriteriaError::Infeasible(_))));
    assert!(matches!(linind_actions(5, 3, 2, 4), Err(CriteriaError::Infeasible(_))));
    assert!(matches!(linind_actions(5, 0, 2, 4), Err(CriteriaError::Infeasible(_))));
    assert!(matches!(linind_actions(5, 2, 2, 3), Err(CriteriaError::Infeasible(_))));
}

#[test]
fn subset_order() {
    let s = subsets_by_size(2, 4);
    assert_eq!(
        s,
        vec![
            vec![2],
            vec![3],
            vec![4],
            vec![2, 3],
            vec![2, 4],
            vec![3, 4],
            vec![2, 3, 4]
        ]
    );
}

#[test]
fn policy_validation() {
    let e = MilnorAction::standard(1, 3).unwrap().eta().unwrap();
    assert!(matches!(
        test_indecomposable(&e, 3, &SearchPolicy::new(vec![])),
        Err(CriteriaError::EmptyPolicy)
    ));
    assert!(matches!(
        test_indecomposable(&e, 3, &SearchPolicy::new(vec![9, 3])),
        Err(CriteriaError::CandidateTooSmall { k: 3, d: 3 })
    ));
    assert_eq!(SearchPolicy::default_for(1, 3).candidates(), &[9, 17, 33]);
    assert_eq!(SearchPolicy::default_for(3, 20).candidates(), &[35]);
}

#[test]
fn independence_detects_dependency() {
    let a = MilnorAction::standard(1, 3).unwrap().eta().unwrap();
    let twice = vec![a.clone(), a.clone()];
    assert!(!verify_linear_independence(&twice).unwrap());
    assert!(!verify_linear_independence(&[RepElement::zero(3).unwrap()]).unwrap());
    assert!(verify_linear_independence(&[a]).unwrap());
}

const RANK: usize = 3;

fn homogeneous(d: usize) -> impl Strategy<Value = RepElement> {
    prop::collection::vec(prop::collection::vec(1u32..(1 << RANK), d..=d), 1..5).prop_map(|ms| {
        let mut e = RepElement::zero(RANK).unwrap();
        for m in ms {
            e.toggle(RepMonomial::from_characters(
                m.into_iter().map(|x| Character::from_mask(x).unwrap()),
            ))
            .unwrap();
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn certificates_match_oracle((d, e) in (1usize..=3).prop_flat_map(|d| (Just(d), homogeneous(d)))) {
        let v = test_indecomposable(&e, d, &SearchPolicy::range(d as u32 + 1, 8)).unwrap();
        assert_sound(&e, &v);
    }

    #[test]
    fn refinement_is_monotone(
        (d, e, base, extra) in (1usize..=3).prop_flat_map(|d| (
            Just(d),
            homogeneous(d),
            prop::collection::btree_set(d as u32 + 1..14, 1..3),
            prop::collection::btree_set(d as u32 + 1..14, 0..3),
        ))
    ) {
        let small: Vec<u32> = base.iter().copied().collect();
        let big: Vec<u32> = base.union(&extra).copied().collect();
        let v1 = test_indecomposable(&e, d, &SearchPolicy::new(small)).unwrap();
        let v2 = test_indecomposable(&e, d, &SearchPolicy::new(big)).unwrap();
        if v1.is_proven() {
            prop_assert!(v2.is_proven());
        }
        if let Some(c) = v2.certificate() {
            prop_assert!(is_nonbounding(&e));
            if c.kind == CoefficientKind::Split {
                prop_assert!(d >= 2);
            }
        }
    }
}
