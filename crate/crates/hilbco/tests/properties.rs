//! Property tests for the algebraic laws the kernels must satisfy.

use num_bigint::BigInt;
use proptest::prelude::*;

use hilbco::counting::{colength, nested_length, standard_monomials};
use hilbco::hilbert::{
    fit_binomial_polynomial, hk_sequence, hs_sequence, Basis, BinomialPolynomial, HilbertSequence,
    SequenceKind,
};
use hilbco::monomial::{Monomial, MonomialIdeal};
use hilbco::ring::{LengthOptions, Ring};
use hilbco::semigroup::{AffineSemigroup, SemigroupIdeal};

fn exponents(vars: usize, max: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max, vars).prop_map(Monomial::new)
}

fn ideal(vars: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(exponents(vars, 4), 0..4)
        .prop_map(move |gens| MonomialIdeal::new(vars, gens))
}

/// A proper ideal with an Artinian quotient: pure powers plus extras.
fn artinian_ideal(vars: usize) -> impl Strategy<Value = MonomialIdeal> {
    (
        prop::collection::vec(1..=4u32, vars),
        prop::collection::vec(exponents(vars, 5), 0..3),
    )
        .prop_map(move |(powers, extra)| {
            let mut gens: Vec<Monomial> = powers
                .iter()
                .enumerate()
                .map(|(j, &p)| {
                    let mut e = vec![0u32; vars];
                    e[j] = p;
                    Monomial::new(e)
                })
                .collect();
            gens.extend(extra.into_iter().filter(|m| !m.is_one()));
            MonomialIdeal::new(vars, gens)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimalize_is_idempotent(i in ideal(3)) {
        let again = MonomialIdeal::new(3, i.generators().to_vec());
        prop_assert_eq!(i, again);
    }

    #[test]
    fn sum_and_product_and_intersection_commute(a in ideal(2), b in ideal(2)) {
        prop_assert_eq!(a.sum(&b), b.sum(&a));
        prop_assert_eq!(a.product(&b), b.product(&a));
        prop_assert_eq!(a.intersect(&b), b.intersect(&a));
    }

    #[test]
    fn product_is_associative(a in ideal(2), b in ideal(2), c in ideal(2)) {
        prop_assert_eq!(a.product(&b).product(&c), a.product(&b.product(&c)));
    }

    #[test]
    fn product_distributes_over_sum(a in ideal(2), b in ideal(2), c in ideal(2)) {
        let lhs = a.product(&b.sum(&c));
        let rhs = a.product(&b).sum(&a.product(&c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn colon_membership_adjunction(
        i in ideal(2),
        j in ideal(2),
        u in exponents(2, 5),
    ) {
        prop_assume!(!j.is_zero());
        let colon = i.colon_ideal(&j).unwrap();
        let in_colon = colon.contains_monomial(&u);
        let every_product = j.generators().iter().all(|g| i.contains_monomial(&u.times(g)));
        prop_assert_eq!(in_colon, every_product);
    }

    #[test]
    fn saturation_laws(i in artinian_ideal(2)) {
        let m = MonomialIdeal::maximal(2);
        let saturated = i.saturate(&m).unwrap();
        prop_assert!(saturated.contains_ideal(&i));
        prop_assert_eq!(saturated.colon_ideal(&m).unwrap(), saturated.clone());
        // the quotient sat/I is finite and matches direct enumeration
        let by_formula = nested_length(&i, &saturated).unwrap();
        let direct: u64 = {
            use std::collections::HashSet;
            let mut seen = HashSet::new();
            for g in saturated.generators() {
                for u in standard_monomials(&i.colon_monomial(g)).unwrap() {
                    seen.insert(g.times(&u));
                }
            }
            seen.len() as u64
        };
        prop_assert_eq!(by_formula, BigInt::from(direct));
    }

    #[test]
    fn length_additivity_over_nested_ideals(
        outer in artinian_ideal(2),
        extra in prop::collection::vec(exponents(2, 3), 1..3),
    ) {
        // inner = outer * (extra monomials + m) stays Artinian inside outer
        let bulk = MonomialIdeal::new(2, extra).sum(&MonomialIdeal::maximal(2));
        let inner = outer.product(&bulk);
        prop_assert!(outer.contains_ideal(&inner));
        let l_inner = colength(&inner).unwrap();
        let l_outer = colength(&outer).unwrap();
        let between = nested_length(&inner, &outer).unwrap();
        prop_assert_eq!(l_inner, l_outer + between);
    }

    #[test]
    fn refitting_evaluations_returns_the_coefficients(
        c0 in 1i64..8,
        c1 in -6i64..7,
        c2 in -6i64..7,
        fiber_basis in any::<bool>(),
    ) {
        let basis = if fiber_basis { Basis::Fiber } else { Basis::Samuel };
        let p = BinomialPolynomial::from_coeffs(
            2,
            vec![BigInt::from(c0), BigInt::from(c1), BigInt::from(c2)],
            basis,
        );
        let values: Vec<BigInt> = (0..=14).map(|n| p.evaluate(n)).collect();
        let table = HilbertSequence { kind: SequenceKind::Module, values, certified: true };
        let fitted = fit_binomial_polynomial(&table, 2, 4, basis).unwrap();
        prop_assert_eq!(fitted.coeffs, p.coeffs);
        prop_assert_eq!(fitted.postulation, 0);
    }
}

#[test]
fn postulation_boundary_is_sharp() {
    // corrupt the head of a polynomial table; the reported postulation
    // must point at the first honest entry
    let p =
        BinomialPolynomial::from_coeffs(1, vec![BigInt::from(3), BigInt::from(-1)], Basis::Samuel);
    let mut values: Vec<BigInt> = (0..=12).map(|n| p.evaluate(n)).collect();
    values[0] -= 1;
    values[1] += 2;
    let table = HilbertSequence {
        kind: SequenceKind::Module,
        values: values.clone(),
        certified: true,
    };
    let fitted = fit_binomial_polynomial(&table, 1, 3, Basis::Samuel).unwrap();
    assert_eq!(fitted.postulation, 2);
    assert_ne!(fitted.evaluate(1), values[1]);
    assert_eq!(fitted.evaluate(2), values[2]);
}

#[test]
fn hilbert_tables_have_non_negative_first_differences() {
    let vars: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
    let defining = MonomialIdeal::new(
        2,
        vec![Monomial::new(vec![1, 1]), Monomial::new(vec![0, 2])],
    );
    let cases = [
        (
            Ring::polynomial(vars.clone()),
            vec![vec![2u32, 0], vec![1, 1], vec![0, 3]],
        ),
        (
            Ring::monomial_quotient(vars, defining).unwrap(),
            vec![vec![1, 0], vec![0, 1]],
        ),
    ];
    for (ring, qgens) in cases {
        let q = ring
            .ideal_from_monomials(qgens.into_iter().map(Monomial::new).collect())
            .unwrap();
        let hk = hk_sequence(&ring, &q, &q, 10, None).unwrap();
        let hs = hs_sequence(&ring, &q, 10, None).unwrap();
        for table in [hk, hs] {
            for w in table.values.windows(2) {
                assert!(w[0] <= w[1], "table decreases: {:?}", table.values);
            }
        }
    }
}

#[test]
fn semigroup_membership_is_closed_under_addition() {
    let s = AffineSemigroup::new(2, vec![vec![5, 0], vec![1, 4], vec![4, 1], vec![0, 5]]).unwrap();
    let bound = 60u64;
    let members: Vec<[u64; 2]> = (0..=25u64)
        .flat_map(|x| (0..=25u64).map(move |y| [x, y]))
        .filter(|v| s.contains(v, bound).unwrap())
        .collect();
    for (i, a) in members.iter().enumerate() {
        for b in members.iter().skip(i) {
            let sum = [a[0] + b[0], a[1] + b[1]];
            assert!(
                s.contains(&sum, bound).unwrap(),
                "{a:?} + {b:?} = {sum:?} fell out of the semigroup"
            );
        }
    }
}

#[test]
fn semigroup_first_differences_eventually_step_by_the_multiplicity() {
    // the first difference of a degree-2 table with leading coefficient 5
    // eventually increases by exactly 5 per step
    let s = AffineSemigroup::new(2, vec![vec![5, 0], vec![1, 4], vec![4, 1], vec![0, 5]]).unwrap();
    let ring = Ring::semigroup_ring(s);
    let q = ring
        .ideal_from_vectors(vec![vec![5, 0], vec![0, 5]])
        .unwrap();
    let hs = hs_sequence(&ring, &q, 12, None).unwrap();
    let diffs: Vec<BigInt> = hs.values.windows(2).map(|w| &w[1] - &w[0]).collect();
    let steps: Vec<BigInt> = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    assert!(
        steps[4..].iter().all(|s| *s == BigInt::from(5)),
        "{steps:?}"
    );
}

#[test]
fn certified_counts_come_from_agreeing_boxes() {
    let s = AffineSemigroup::new(2, vec![vec![5, 0], vec![1, 4], vec![4, 1], vec![0, 5]]).unwrap();
    let q = SemigroupIdeal::new(&s, vec![vec![5, 0], vec![0, 5]]).unwrap();
    for start in [1u64, 3, 10, 40, 200] {
        let c = q.colength(start).unwrap();
        assert!(c.certified, "stuck at bound {start}");
        assert_eq!(c.value, BigInt::from(7));
    }
}

#[test]
fn reduction_then_length_matches_the_combined_ideal() {
    // lengths in R/(x) equal colengths of the combined ambient ideal
    let vars: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
    let ring = Ring::polynomial(vars);
    let x = Monomial::new(vec![3, 0]);
    let reduced = ring.reduce_mod_element(&x).unwrap();
    let q = reduced
        .ideal_from_monomials(vec![Monomial::new(vec![1, 0]), Monomial::new(vec![0, 2])])
        .unwrap();
    let via_ring = reduced
        .length_of_quotient(&q, &LengthOptions::default())
        .unwrap();
    let combined = MonomialIdeal::new(
        2,
        vec![
            Monomial::new(vec![3, 0]),
            Monomial::new(vec![1, 0]),
            Monomial::new(vec![0, 2]),
        ],
    );
    assert_eq!(via_ring, colength(&combined).unwrap());
}
