//! Worked examples for each public operation, written before the
//! implementation and kept as exact oracles.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use partition_engine::constraint::{ConstraintSpec, Parity};
use partition_engine::enumeration::{count, count_fe, count_fo, enumerate, fo_from_distinct};
use partition_engine::family::{family, symmetric_sum};
use partition_engine::glaisher::{f_to_r, glaisher_merge, glaisher_split, phi, phi_inverse, r_to_f};
use partition_engine::qseries::{
    euler_sum_product_check, jacobi_triple, jacobi_triple_product, pochhammer, theta_gauss, theta_pentagonal,
    ProductSpec,
};
use partition_engine::registry::Params;
use partition_engine::symmetric::{
    generate_symmetric, is_symmetric, prescribed_tail, split_by_order_parity, sylvester_general,
    sylvester_general_inverse,
};
use partition_engine::verify::{
    verify_b32_dissection, verify_b_equals_c, verify_f_equals_r, verify_f_sum_divisible, verify_fo_formula,
    verify_regular_distinct, verify_slater, verify_symmetric_distinct, verify_symmetric_even_mod16,
    verify_symmetric_odd_mod16, VerifyConfig,
};
use partition_engine::{MultiplicityView, Partition, SymmetricProfile, TruncatedSeries};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn set(items: &[&str]) -> BTreeSet<Partition> {
    items.iter().map(|s| p(s)).collect()
}

fn profile(mu: u32, gamma: u32) -> SymmetricProfile {
    SymmetricProfile::new(mu, gamma).unwrap()
}

fn ints(xs: &[i64], order: usize) -> TruncatedSeries {
    TruncatedSeries::from_ints(xs.iter().copied(), order)
}

#[test]
fn canonicalize_sorts() {
    assert_eq!(Partition::canonicalize(&[1, 5, 1]).unwrap().parts(), &[5, 1, 1]);
    assert_eq!(Partition::canonicalize(&[]).unwrap(), Partition::empty());
    assert_eq!(Partition::canonicalize(&[2, 2, 4]).unwrap().parts(), &[4, 2, 2]);
    assert!(Partition::canonicalize(&[3, 0]).is_err());
    assert!(Partition::canonicalize(&[-1]).is_err());
}

#[test]
fn conjugate_examples() {
    assert_eq!(p("3,1").conjugate(), p("2,1,1"));
    assert_eq!(Partition::empty().conjugate(), Partition::empty());
    assert!(p("4,2,1,1").is_self_conjugate());
    // the column counts of (4,2,2,1,1) are (5,3,1,1)
    assert_eq!(p("4,2,2,1,1").conjugate(), p("5,3,1,1"));
}

#[test]
fn order_examples() {
    assert_eq!(p("5,1,1,1,1,1").order(), 1);
    assert_eq!(p("3,3,2,2").order(), 2);
    assert_eq!(Partition::empty().order(), 0);
}

#[test]
fn satisfies_examples() {
    assert!(ConstraintSpec::b(3, 2).unwrap().satisfies(&p("5,1")));
    assert!(!ConstraintSpec::f(2, 1).unwrap().satisfies(&p("6,2,1,1,1,1")));
    assert!(ConstraintSpec::self_conjugate().satisfies(&p("4,2,1,1")));
    assert!(!ConstraintSpec::self_conjugate().satisfies(&p("4,2,2,1,1")));
}

#[test]
fn distinct_even_part_count_examples() {
    assert_eq!(p("6,2,2,1").distinct_even_part_count(), 2);
    assert_eq!(p("5,3,1").distinct_even_part_count(), 0);
    assert_eq!(p("4,4,4").distinct_even_part_count(), 1);
}

#[test]
fn enumerate_examples() {
    let found: BTreeSet<_> = enumerate(10, &ConstraintSpec::symmetric(profile(2, 1))).collect();
    assert_eq!(found, set(&["5,1^5", "4,2^2,1^2", "3^2,2^2"]));
    let avoiding: BTreeSet<_> = enumerate(6, &ConstraintSpec::mod16_even_order()).collect();
    assert_eq!(avoiding, set(&["4,2", "3,3", "2,2,2"]));
    for spec in [ConstraintSpec::all(), ConstraintSpec::distinct(), ConstraintSpec::b(4, 6).unwrap()] {
        assert_eq!(enumerate(0, &spec).collect::<Vec<_>>(), vec![Partition::empty()]);
    }
}

#[test]
fn count_examples() {
    assert_eq!(count(6, &ConstraintSpec::b(3, 2).unwrap()), BigUint::from(2u32));
    assert_eq!(count(6, &ConstraintSpec::c(2, 3).unwrap()), BigUint::from(2u32));
    assert_eq!(count(12, &ConstraintSpec::self_conjugate()), BigUint::from(3u32));
    assert_eq!(count(12, &ConstraintSpec::distinct_odd()), BigUint::from(3u32));
    assert_eq!(count(0, &ConstraintSpec::mod9(4).unwrap()), BigUint::from(1u32));
}

#[test]
fn fe_fo_examples() {
    assert_eq!(count_fo(2, 1).unwrap(), BigUint::from(1u32));
    assert_eq!(count_fe(2, 1).unwrap(), BigUint::from(0u32));
    for t in 1..=3 {
        let f = family("f", &Params { p: Some(2), t: Some(t), ..Params::default() }).unwrap().count_table(40);
        for n in 0..=40u32 {
            assert_eq!(count_fe(n, t).unwrap() + count_fo(n, t).unwrap(), f.counts[n as usize], "n={n} t={t}");
        }
    }
}

#[test]
fn fo_from_distinct_examples() {
    assert_eq!(fo_from_distinct(2, 1).unwrap(), BigInt::from(1));
    assert_eq!(fo_from_distinct(0, 1).unwrap(), BigInt::from(0));
    for t in 1..=3 {
        for n in 0..2 * t {
            assert_eq!(fo_from_distinct(n, t).unwrap(), BigInt::from(0));
        }
        for n in 0..=60 {
            assert_eq!(fo_from_distinct(n, t).unwrap(), BigInt::from(count_fo(n, t).unwrap()), "n={n} t={t}");
        }
    }
}

#[test]
fn glaisher_examples() {
    assert_eq!(glaisher_merge(&p("1,1,1"), 3).unwrap(), p("3"));
    assert_eq!(glaisher_merge(&p("5,1"), 2).unwrap(), p("5,1"));
    assert_eq!(glaisher_merge(&p("3,3,1,1,1,1"), 2).unwrap(), p("6,4"));
    assert_eq!(glaisher_split(&p("3"), 3).unwrap(), p("1,1,1"));
    assert_eq!(glaisher_split(&p("6,4"), 2).unwrap(), p("3,3,1,1,1,1"));
    assert_eq!(glaisher_split(&p("5,1"), 2).unwrap(), p("5,1"));
}

#[test]
fn phi_examples() {
    let image: BTreeSet<_> = enumerate(6, &ConstraintSpec::b(3, 2).unwrap())
        .map(|l| phi(&l, 3, 2).unwrap())
        .collect();
    assert_eq!(image, set(&["5,1", "3,3"]));

    let b22 = ConstraintSpec::b(2, 2).unwrap();
    for lambda in enumerate(12, &b22) {
        assert_eq!(phi(&lambda, 2, 2).unwrap(), lambda);
    }
    assert!(phi(&p("3,1"), 3, 2).is_err());

    for (pp, k) in [(3, 2), (2, 3), (4, 6)] {
        let c = ConstraintSpec::c(k, pp).unwrap();
        for n in 0..=20 {
            for mu in enumerate(n, &c) {
                assert_eq!(phi(&phi_inverse(&mu, pp, k).unwrap(), pp, k).unwrap(), mu);
            }
        }
    }
}

#[test]
fn f_to_r_examples() {
    let image = f_to_r(&p("2,2,1"), 2, 2).unwrap();
    assert_eq!(image.weight(), 5);
    assert_eq!(image.multiplicity(4), 1);
    assert!(ConstraintSpec::r(2).unwrap().satisfies(&image));
    assert_eq!(r_to_f(&image, 2, 2).unwrap(), p("2,2,1"));
    assert_eq!(f_to_r(&Partition::empty(), 3, 2).unwrap(), Partition::empty());
    assert_eq!(r_to_f(&Partition::empty(), 3, 2).unwrap(), Partition::empty());
    assert!(f_to_r(&p("2"), 2, 2).is_err());
    assert!(r_to_f(&p("1,1"), 2, 1).is_err());

    for (pp, t) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
        let (f, r) = (ConstraintSpec::f(pp, t).unwrap(), ConstraintSpec::r(pp).unwrap());
        for n in 0..=25 {
            let mut image = BTreeSet::new();
            for lambda in enumerate(n, &f) {
                let mu = f_to_r(&lambda, pp, t).unwrap();
                assert_eq!(r_to_f(&mu, pp, t).unwrap(), lambda);
                image.insert(mu);
            }
            assert_eq!(BigUint::from(image.len()), count(n, &r), "p={pp} t={t} n={n}");
        }
    }
}

#[test]
fn prescribed_tail_examples() {
    let pr = profile(2, 1);
    assert_eq!(prescribed_tail(&[5], pr).unwrap(), MultiplicityView::new([(1, 5)]));
    assert_eq!(prescribed_tail(&[4, 2], pr).unwrap(), MultiplicityView::new([(2, 1), (1, 2)]));
    assert_eq!(prescribed_tail(&[3, 3], pr).unwrap(), MultiplicityView::new([(2, 2)]));
}

#[test]
fn is_symmetric_examples() {
    assert!(is_symmetric(&p("4,2,2,1,1"), profile(2, 1)));
    assert!(!is_symmetric(&p("4,2,2,1,1"), profile(2, 0)));
    for lambda in enumerate(16, &ConstraintSpec::self_conjugate()) {
        assert!(is_symmetric(&lambda, SymmetricProfile::SELF_CONJUGATE));
    }
}

#[test]
fn sylvester_examples() {
    let pr = profile(2, 1);
    for (lambda, beta) in [("5,1^5", "10"), ("4,2^2,1^2", "8,2"), ("3^2,2^2", "6,4")] {
        assert_eq!(sylvester_general(&p(lambda), pr).unwrap(), p(beta));
        assert_eq!(sylvester_general_inverse(&p(beta), pr).unwrap(), p(lambda));
    }
    for pr in [profile(2, 0), profile(3, 2), profile(5, 4)] {
        assert_eq!(sylvester_general_inverse(&Partition::empty(), pr).unwrap(), Partition::empty());
    }
}

#[test]
fn generate_symmetric_examples() {
    let found: BTreeSet<_> = generate_symmetric(10, profile(2, 1)).collect();
    assert_eq!(found, set(&["5,1^5", "4,2^2,1^2", "3^2,2^2"]));
    assert_eq!(generate_symmetric(0, profile(4, 3)).collect::<Vec<_>>(), vec![Partition::empty()]);
}

#[test]
fn split_by_order_parity_examples() {
    let even: BTreeSet<_> = generate_symmetric(12, SymmetricProfile::SELF_CONJUGATE)
        .filter(|l| Parity::of(l.order()) == Parity::Even)
        .collect();
    assert_eq!(even, set(&["6,2,1^4", "5,3,2,1,1", "4,4,2,2"]));
    assert_eq!(split_by_order_parity(12, SymmetricProfile::SELF_CONJUGATE).0, 3);
    assert_eq!(split_by_order_parity(0, profile(3, 1)), (1, 0));
}

#[test]
fn series_ring_examples() {
    let a = ints(&[1, 1], 6);
    let b = ints(&[1, -1], 6);
    assert_eq!(a.clone() * b, ints(&[1, 0, -1], 6));
    assert!((a.clone() + (-a)).is_zero());
}

#[test]
fn pochhammer_examples() {
    let euler = pochhammer(&ProductSpec::new().poch(1, 1), 10).unwrap();
    assert_eq!(euler, ints(&[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0], 10));
    let distinct = pochhammer(&ProductSpec::new().neg_poch(1, 1), 40).unwrap();
    for n in 0..=40 {
        assert_eq!(BigUint::try_from(distinct.coeff(n as usize)).unwrap(), count(n, &ConstraintSpec::distinct()));
    }
    assert_eq!(pochhammer(&ProductSpec::new(), 12).unwrap(), TruncatedSeries::one(12));
}

#[test]
fn theta_examples() {
    let order = 300;
    assert_eq!(theta_pentagonal(order), pochhammer(&ProductSpec::new().poch(1, 1), order).unwrap());
    let mut gauss = pochhammer(&ProductSpec::new().poch(1, 1), order).unwrap();
    for e in 1..=order {
        gauss.div_binomial(false, 0, e);
    }
    assert_eq!(theta_gauss(order), gauss);
    for m in 0..=5 {
        for negative in [false, true] {
            assert_eq!(jacobi_triple(m, negative, 120), jacobi_triple_product(m, negative, 120), "m={m} neg={negative}");
        }
    }
}

#[test]
fn euler_sum_product_example() {
    assert!(euler_sum_product_check(60).passed());
}

#[test]
fn gf_examples() {
    let b32 = family("b", &Params { p: Some(3), k: Some(2), ..Params::default() }).unwrap();
    assert_eq!(b32.generating_function(20).coeff(6), BigInt::from(2));
    let g = family("symmetric", &Params { mu: Some(2), gamma: Some(1), ..Params::default() }).unwrap();
    assert_eq!(g.generating_function(20).coeff(10), BigInt::from(3));
    assert_eq!(symmetric_sum(profile(2, 1), None, 20).coeff(10), BigInt::from(3));
    let r3 = family("r", &Params { k: Some(3), ..Params::default() }).unwrap();
    let product = pochhammer(&ProductSpec::new().poch(3, 3).inv_poch(1, 1), 60).unwrap();
    assert_eq!(r3.generating_function(60), product);
    assert!(family("b", &Params { p: Some(1), k: Some(2), ..Params::default() }).is_err());
}

#[test]
fn dissect_examples() {
    let order = 270;
    let b32 = family("b", &Params { p: Some(3), k: Some(2), ..Params::default() }).unwrap();
    let lhs = b32.generating_function(order).dissect(3, 0).unwrap();
    let rhs = pochhammer(
        &ProductSpec::new().poch(9, 9).neg_poch(5, 9).neg_poch(4, 9).inv_poch(1, 1),
        lhs.order(),
    )
    .unwrap();
    assert_eq!(lhs, rhs);

    let one = TruncatedSeries::one(30);
    assert_eq!(one.dissect(4, 0).unwrap(), TruncatedSeries::one(7));
    assert!(one.dissect(4, 2).unwrap().is_zero());

    let x = b32.generating_function(60);
    let mut sum = TruncatedSeries::zero(60);
    for r in 0..5 {
        sum = sum + x.dissect(5, r).unwrap().inflate(5, r, 60);
    }
    assert_eq!(sum, x);
}

#[test]
fn identity_check_examples() {
    let cfg = VerifyConfig::default();
    assert!(verify_regular_distinct(&cfg).unwrap().passed());
    for (pp, k) in [(3, 2), (2, 4), (4, 2), (4, 6)] {
        assert!(verify_b_equals_c(&cfg, pp, k).unwrap().passed());
    }
    assert!(verify_f_equals_r(&cfg, 2, 1).unwrap().passed());
    assert!(verify_f_equals_r(&cfg, 3, 2).unwrap().passed());
    assert!(verify_f_sum_divisible(&cfg, 3, 4).unwrap().passed());
    assert!(verify_f_sum_divisible(&cfg, 2, 1).unwrap().passed());
    assert!(verify_fo_formula(&cfg, 2).unwrap().passed());
    assert!(verify_b32_dissection(&cfg).unwrap().passed());
    assert!(verify_symmetric_distinct(&cfg, 2, 0).unwrap().passed());
    assert!(verify_symmetric_distinct(&cfg, 2, 1).unwrap().passed());
    assert!(verify_symmetric_even_mod16(&cfg, 2).unwrap().passed());
    assert!(verify_symmetric_odd_mod16(&cfg, 2).unwrap().passed());
    assert!(verify_symmetric_even_mod16(&cfg, 3).is_err());
    assert!(verify_slater(&cfg).unwrap().passed());
}
