use partition_engine::constraint::ConstraintSpec;
use partition_engine::glaisher::{f_to_r, glaisher_merge, glaisher_split, phi, phi_inverse, r_to_f};
use partition_engine::qseries::TruncatedSeries;
use partition_engine::symmetric::{is_symmetric, sylvester_general, sylvester_general_inverse};
use partition_engine::{Partition, SymmetricProfile};
use proptest::prelude::*;

fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

/// Distinct parts congruent to `1+gamma` mod `mu`, returned with the profile.
fn distinct_residue() -> impl Strategy<Value = (SymmetricProfile, Partition)> {
    (2u32..=6, 0u32..=4).prop_flat_map(|(mu, gamma)| {
        prop::collection::btree_set(0u32..12, 0..6).prop_map(move |js| {
            let parts = js.into_iter().map(|j| mu * j + gamma + 1).collect();
            (SymmetricProfile::new(mu, gamma).unwrap(), Partition::from_unsorted(parts))
        })
    })
}

/// A member of B(p,k): parts not divisible by p, multiplicities below k.
fn b_member(p: u32, k: u32, budget: u32) -> impl Strategy<Value = Partition> {
    prop::collection::btree_map(1u32..=budget, 1..k, 0..5).prop_map(move |m| {
        Partition::from_multiplicities(m.into_iter().filter(|(a, _)| a % p != 0))
    })
}

fn series(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..=20, 0..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn shorthand_round_trip(lambda in partition(12, 20)) {
        let back: Partition = lambda.to_shorthand().parse().unwrap();
        prop_assert_eq!(back, lambda.clone());
        let expanded: Partition = lambda.to_string().parse().unwrap();
        prop_assert_eq!(expanded, lambda);
    }

    #[test]
    fn conjugation_is_weight_preserving_involution(lambda in partition(15, 15)) {
        let conj = lambda.conjugate();
        prop_assert_eq!(conj.weight(), lambda.weight());
        prop_assert_eq!(conj.order(), lambda.order());
        prop_assert_eq!(conj.conjugate(), lambda.clone());
        prop_assert_eq!(lambda.is_self_conjugate(), is_symmetric(&lambda, SymmetricProfile::SELF_CONJUGATE));
    }

    #[test]
    fn glaisher_invariants(lambda in partition(20, 20), k in 2u32..=5) {
        let merged = glaisher_merge(&lambda, k).unwrap();
        let split = glaisher_split(&lambda, k).unwrap();
        prop_assert_eq!(merged.weight(), lambda.weight());
        prop_assert_eq!(split.weight(), lambda.weight());
        prop_assert!(merged.multiplicities().entries().iter().all(|&(_, m)| m < k));
        prop_assert!(split.parts().iter().all(|a| a % k != 0));
        prop_assert_eq!(glaisher_split(&merged, k).unwrap(), split.clone());
        prop_assert_eq!(glaisher_merge(&split, k).unwrap(), merged);
    }

    #[test]
    fn sylvester_round_trip((profile, beta) in distinct_residue()) {
        let lambda = sylvester_general_inverse(&beta, profile).unwrap();
        prop_assert!(is_symmetric(&lambda, profile));
        prop_assert_eq!(lambda.weight(), beta.weight());
        prop_assert_eq!(lambda.order(), beta.len());
        prop_assert_eq!(sylvester_general(&lambda, profile).unwrap(), beta);
    }

    #[test]
    fn phi_round_trip_coprime(
        (p, k, lambda) in prop_oneof![Just((3u32, 2u32)), Just((2, 3)), Just((3, 4)), Just((5, 2)), Just((4, 3))]
            .prop_flat_map(|(p, k)| b_member(p, k, 15).prop_map(move |l| (p, k, l)))
    ) {
        prop_assume!(lambda.weight() <= 60);
        let mu = phi(&lambda, p, k).unwrap();
        prop_assert_eq!(mu.weight(), lambda.weight());
        prop_assert!(ConstraintSpec::c(k, p).unwrap().satisfies(&mu));
        prop_assert_eq!(phi_inverse(&mu, p, k).unwrap(), lambda);
    }

    #[test]
    fn f_to_r_round_trip(p in 2u32..=4, t in 1u32..=3, seed in partition(14, 8)) {
        // turn an arbitrary partition into a member of F(p,t)
        let f = ConstraintSpec::f(p, t).unwrap();
        let entries = seed.multiplicities().entries().iter().map(|&(a, m)| {
            if a % p == 0 { (a, t * (1 + (m - 1) % (p - 1))) } else { (a, 1 + (m - 1) % (p * t - 1)) }
        }).collect::<Vec<_>>();
        let lambda = Partition::from_multiplicities(entries);
        prop_assume!(f.satisfies(&lambda));
        let mu = f_to_r(&lambda, p, t).unwrap();
        prop_assert_eq!(mu.weight(), lambda.weight());
        prop_assert!(ConstraintSpec::r(p).unwrap().satisfies(&mu));
        prop_assert_eq!(r_to_f(&mu, p, t).unwrap(), lambda);
    }

    #[test]
    fn series_ring_laws(a in series(12), b in series(12), c in series(12)) {
        let order = 12;
        let (x, y, z) = (
            TruncatedSeries::from_ints(a.iter().copied(), order),
            TruncatedSeries::from_ints(b.iter().copied(), order),
            TruncatedSeries::from_ints(c.iter().copied(), order),
        );
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
        prop_assert!((x.clone() + (-x.clone())).is_zero());

        let product = x.clone() * y.clone();
        for n in 0..=order {
            let naive: i64 = (0..=n).map(|i| a.get(i).unwrap_or(&0) * b.get(n - i).unwrap_or(&0)).sum();
            prop_assert_eq!(product.coeff(n), naive.into());
        }
    }

    #[test]
    fn dissections_reassemble(a in series(30), d in 1usize..=6) {
        let order = 30;
        let x = TruncatedSeries::from_ints(a.iter().copied(), order);
        let mut sum = TruncatedSeries::zero(order);
        for r in 0..d {
            sum = sum + x.dissect(d, r).unwrap().inflate(d, r, order);
        }
        prop_assert_eq!(sum, x);
    }
}
