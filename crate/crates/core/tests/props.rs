//! Property tests for the structural invariants, plus the corpus-wide axiom
//! sweep.

use amalg_core::exact::{divides_in_duplication, DuplicationElement, IdealExp};
use amalg_core::ideal::{
    all_ideals, colon_ideal, ideal_closure, ideal_combine, ideal_product, IdealCombine,
};
use amalg_core::prufer::verify_content_pair;
use amalg_core::ring::{find_ring_isomorphism, make_product, make_zmod, verify_ring_axioms};
use amalg_core::PLocalRational;
use proptest::prelude::*;

fn plocal(p: u64) -> impl Strategy<Value = PLocalRational> {
    (-40i64..=40, 1i64..=40)
        .prop_filter("denominator must avoid p", move |(_, d)| d % (p as i64) != 0)
        .prop_map(move |(n, d)| PLocalRational::new(p, n, d).unwrap())
}

proptest! {
    #[test]
    fn valuation_is_additive_on_products(x in plocal(3), y in plocal(3)) {
        prop_assume!(!x.is_zero() && !y.is_zero());
        let xy = x.mul(&y).unwrap();
        prop_assert_eq!(
            xy.valuation().unwrap(),
            x.valuation().unwrap() + y.valuation().unwrap()
        );
    }

    #[test]
    fn valuation_of_sums_is_bounded_below(x in plocal(5), y in plocal(5)) {
        prop_assume!(!x.is_zero() && !y.is_zero());
        let s = x.add(&y).unwrap();
        prop_assume!(!s.is_zero());
        let min = x.valuation().unwrap().min(y.valuation().unwrap());
        prop_assert!(s.valuation().unwrap() >= min);
    }

    #[test]
    fn plocal_results_stay_canonical(x in plocal(2), y in plocal(2)) {
        use num_bigint::{BigInt, Sign};
        use num_integer::Integer;
        for r in [x.add(&y).unwrap(), x.mul(&y).unwrap(), x.sub(&y).unwrap(), x.neg()] {
            // positive, fully reduced, 2-free denominator
            prop_assert_eq!(r.denominator().sign(), Sign::Plus);
            prop_assert_eq!(r.numerator().gcd(r.denominator()), BigInt::from(1));
            prop_assert!(!r.denominator().is_multiple_of(&BigInt::from(2)));
        }
    }

    #[test]
    fn unit_multiples_divide_both_ways(
        a in -6i64..=6, diff in -3i64..=3, num_ix in 0usize..3, den_ix in 0usize..3
    ) {
        let p = 2u64;
        let exp = IdealExp::Pow(1);
        let x = DuplicationElement::from_integers(p, exp, a, a + 2 * diff).unwrap();
        prop_assume!(!x.is_zero());
        let odd = [1i64, 3, 5];
        let u = PLocalRational::new(p, odd[num_ix], odd[den_ix]).unwrap();
        let y = DuplicationElement::new(
            p, exp,
            x.first().mul(&u).unwrap(),
            x.second().mul(&u).unwrap(),
        ).unwrap();
        let fwd = divides_in_duplication(&x, &y).unwrap();
        let bwd = divides_in_duplication(&y, &x).unwrap();
        prop_assert!(fwd.is_some() && bwd.is_some());
        prop_assert!(fwd.unwrap().is_unit() && bwd.unwrap().is_unit());
    }

    #[test]
    fn mutual_divisibility_means_associates(
        a1 in -5i64..=5, d1 in -2i64..=2, a2 in -5i64..=5, d2 in -2i64..=2
    ) {
        let p = 3u64;
        let exp = IdealExp::Pow(1);
        let x = DuplicationElement::from_integers(p, exp, a1, a1 + 3 * d1).unwrap();
        let y = DuplicationElement::from_integers(p, exp, a2, a2 + 3 * d2).unwrap();
        prop_assume!(!x.is_zero());
        let fwd = divides_in_duplication(&x, &y).unwrap();
        let bwd = divides_in_duplication(&y, &x).unwrap();
        if let (Some(q1), Some(q2)) = (fwd, bwd) {
            prop_assert!(q1.is_unit() && q2.is_unit());
        }
    }

    #[test]
    fn content_is_submultiplicative(
        n in 2u64..=24,
        f in proptest::collection::vec(0u32..24, 1..4),
        g in proptest::collection::vec(0u32..24, 1..4)
    ) {
        let r = make_zmod(n).unwrap();
        let clamp = |v: &Vec<u32>| -> Vec<u32> { v.iter().map(|&x| x % n as u32).collect() };
        let check = verify_content_pair(&r, &clamp(&f), &clamp(&g)).unwrap();
        prop_assert!(check.c_fg.elements().iter().all(|&x| check.c_f_times_c_g.contains(x)));
    }

    #[test]
    fn lattice_closed_under_combinations(n in 2u64..=30) {
        let r = make_zmod(n).unwrap();
        let ideals = all_ideals(&r).unwrap();
        for i in &ideals {
            for j in &ideals {
                for kind in [IdealCombine::Sum, IdealCombine::Product, IdealCombine::Intersection] {
                    let combined = ideal_combine(&r, kind, i, j).unwrap();
                    prop_assert!(ideals.contains(&combined));
                }
            }
        }
    }

    #[test]
    fn colon_product_contained(n in 2u64..=24, a in 0u32..24, b in 0u32..24) {
        let r = make_zmod(n).unwrap();
        let i = ideal_closure(&r, &[a % n as u32]).unwrap();
        let j = ideal_closure(&r, &[b % n as u32]).unwrap();
        let c = colon_ideal(&r, &i, &j).unwrap();
        let prod = ideal_product(&r, &c, &j);
        prop_assert!(prod.elements().iter().all(|&x| i.contains(x)));
    }

    #[test]
    fn coprime_products_are_cyclic(m in 2u64..=9, n in 2u64..=9) {
        prop_assume!(num_integer::gcd(m, n) == 1);
        let prod = make_product(&make_zmod(m).unwrap(), &make_zmod(n).unwrap()).unwrap();
        prop_assert!(find_ring_isomorphism(&make_zmod(m * n).unwrap(), &prod).is_some());
    }
}

/// The ring-core invariant: every constructor output in the corpus passes
/// the axiom report, exhaustively at these orders.
#[test]
fn corpus_rings_satisfy_all_axioms() {
    let rings = amalg_core::corpus::hierarchy_rings();
    for r in &rings {
        let report = verify_ring_axioms(r);
        assert!(report.all_pass(), "axioms fail on {}", r.label());
        assert!(report.exhaustive);
    }
    println!("axioms verified on {} corpus rings", rings.len());
}

/// Nilpotents lie in the radical on every small corpus ring.
#[test]
fn radical_contains_nilpotents_across_corpus() {
    for r in amalg_core::corpus::hierarchy_rings() {
        if r.order() > 64 {
            continue;
        }
        let c = amalg_core::classify(&r).unwrap();
        for x in r.elements() {
            let mut power = x;
            let mut nilpotent = false;
            for _ in 0..r.order() {
                power = r.mul(power, x);
                if power == r.zero() {
                    nilpotent = true;
                    break;
                }
            }
            if nilpotent {
                assert!(c.radical.contains(x), "nilpotent outside radical in {}", r.label());
            }
        }
    }
}

