use num_bigint::BigInt;

use super::{enumerated, VerifyConfig};
use crate::bijection::{bijection, BIJECTIONS};
use crate::constraint::ConstraintSpec;
use crate::enumeration::{count_table_dp, enumerate};
use crate::error::Result;
use crate::family::{family, FAMILIES};
use crate::glaisher::{glaisher_merge, glaisher_split};
use crate::qseries::{
    euler_sum_product_check, jacobi_triple, jacobi_triple_product, pochhammer, theta_gauss, theta_pentagonal, ProductSpec,
};
use crate::registry::Params;
use crate::report::{ReportBuilder, VerificationReport};
use crate::symmetric::{is_symmetric, sylvester_general, SymmetricProfile};

const SHAPE_CAP: u32 = 25;
const BIJECTION_CAP: u32 = 20;
const BIVARIATE_ORDER: usize = 60;

fn with(f: impl FnOnce(&mut Params)) -> Params {
    let mut p = Params::default();
    f(&mut p);
    p
}

/// One parameter point for each registered family.
pub fn family_samples() -> Vec<(&'static str, Params)> {
    vec![
        ("all", Params::default()),
        ("avoid", with(|a| (a.modulus, a.residues) = (Some(5), Some(vec![0, 2])))),
        ("b", with(|a| (a.p, a.k) = (Some(3), Some(2)))),
        ("c", with(|a| (a.k, a.p) = (Some(4), Some(6)))),
        ("distinct", Params::default()),
        ("distinct-odd", Params::default()),
        ("distinct-residue", with(|a| (a.mu, a.gamma) = (Some(3), Some(2)))),
        ("f", with(|a| (a.p, a.t) = (Some(3), Some(2)))),
        ("mod16-even", Params::default()),
        ("mod16-odd", Params::default()),
        ("mod9", with(|a| a.i = Some(4))),
        ("r", with(|a| a.k = Some(3))),
        ("self-conjugate", Params::default()),
        ("symmetric", with(|a| (a.mu, a.gamma) = (Some(2), Some(1)))),
        ("symmetric-even", with(|a| (a.mu, a.gamma) = (Some(2), Some(0)))),
        ("symmetric-odd", with(|a| (a.mu, a.gamma) = (Some(4), Some(1)))),
    ]
}

/// One parameter point for each registered bijection.
pub fn bijection_samples() -> Vec<(&'static str, Params)> {
    vec![
        ("conjugate", Params::default()),
        ("f-to-r", with(|a| (a.p, a.t) = (Some(2), Some(2)))),
        ("glaisher", with(|a| a.k = Some(3))),
        ("phi", with(|a| (a.p, a.k) = (Some(2), Some(3)))),
        ("sylvester", with(|a| (a.mu, a.gamma) = (Some(2), Some(1)))),
    ]
}

/// Engine self-tests against classical identities, and every family's
/// generating function against enumeration.
pub fn verify_series_identities(cfg: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    let order = cfg.order;
    let mut classical = ReportBuilder::new("classical-identities");
    let euler = pochhammer(&ProductSpec::new().poch(1, 1), order)?;
    let pent = theta_pentagonal(order);
    let mut gauss = euler.clone();
    for e in 1..=order {
        gauss.div_binomial(false, 0, e);
    }
    let gauss_sum = theta_gauss(order);
    for n in 0..=order {
        classical.compare("pentagonal", n as u64, pent.coeff(n), euler.coeff(n));
        classical.compare("gauss", n as u64, gauss_sum.coeff(n), gauss.coeff(n));
    }
    for m in 0..=5 {
        for negative in [false, true] {
            let (sum, prod) = (jacobi_triple(m, negative, order), jacobi_triple_product(m, negative, order));
            let check = format!("triple-product-m{m}{}", if negative { "-neg" } else { "" });
            for n in 0..=order {
                classical.compare(&check, n as u64, sum.coeff(n), prod.coeff(n));
            }
        }
    }
    let euler_sum_product = euler_sum_product_check(order.min(BIVARIATE_ORDER));

    let mut families = ReportBuilder::new("family-gf-vs-enumeration");
    let samples = family_samples();
    let registered: Vec<&str> = FAMILIES.names().collect();
    let sampled: Vec<&str> = samples.iter().map(|(n, _)| *n).collect();
    families.holds("every-family-sampled", 0, registered == sampled);
    for (name, params) in samples {
        let fam = family(name, &params)?;
        let gf = fam.generating_function(order);
        let spec = fam.spec();
        for n in 0..=cfg.cap() {
            families.compare(name, n as u64, gf.coeff(n as usize), enumerated(n, &spec));
        }
    }
    Ok(vec![classical.finish(), euler_sum_product, families.finish()])
}

/// Structural invariants checked exhaustively at small weights.
pub fn verify_properties(cfg: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    let shape_cap = cfg.cap().min(SHAPE_CAP);
    let mut shapes = ReportBuilder::new("partition-shapes");
    let self_conj = SymmetricProfile::SELF_CONJUGATE;
    for n in 0..=shape_cap {
        let mut involution = true;
        let mut order_invariant = true;
        let mut shape_equiv = true;
        let mut classical_map = true;
        for lambda in enumerate(n, &ConstraintSpec::all()) {
            let conj = lambda.conjugate();
            involution &= conj.weight() == n && conj.conjugate() == lambda;
            order_invariant &= conj.order() == lambda.order();
            let symmetric = is_symmetric(&lambda, self_conj);
            shape_equiv &= symmetric == (conj == lambda);
            if symmetric {
                let classical: Vec<u32> = lambda.parts()[..lambda.order()]
                    .iter()
                    .enumerate()
                    .map(|(i, &part)| 2 * part - 2 * i as u32 - 1)
                    .collect();
                classical_map &= sylvester_general(&lambda, self_conj)?.parts() == classical.as_slice();
            }
        }
        shapes.holds("conjugation-involution", n as u64, involution);
        shapes.holds("order-conjugation-invariant", n as u64, order_invariant);
        shapes.holds("self-conjugate-iff-2-0-symmetric", n as u64, shape_equiv);
        shapes.holds("classical-sylvester", n as u64, classical_map);
        shapes.compare(
            "self-conjugate-vs-distinct-odd",
            n as u64,
            enumerated(n, &ConstraintSpec::self_conjugate()),
            enumerated(n, &ConstraintSpec::distinct_odd()),
        );
    }

    let mut maps = ReportBuilder::new("bijection-invariants");
    let samples = bijection_samples();
    let registered: Vec<&str> = BIJECTIONS.names().collect();
    maps.holds("every-bijection-sampled", 0, registered == samples.iter().map(|(n, _)| *n).collect::<Vec<_>>());
    for (name, params) in &samples {
        let b = bijection(name, params)?;
        let (domain, codomain) = (b.domain(), b.codomain());
        for n in 0..=cfg.cap().min(BIJECTION_CAP) {
            let mut ok = true;
            for lambda in enumerate(n, &domain) {
                let mu = b.forward(&lambda)?;
                ok &= mu.weight() == n && codomain.satisfies(&mu) && b.inverse(&mu)? == lambda;
            }
            maps.holds(name, n as u64, ok);
        }
    }
    for k in 2..=4 {
        for n in 0..=cfg.cap().min(BIJECTION_CAP) {
            let mut ok = true;
            for lambda in enumerate(n, &ConstraintSpec::all()) {
                let merged = glaisher_merge(&lambda, k)?;
                let split = glaisher_split(&lambda, k)?;
                ok &= merged.weight() == n && merged.multiplicities().entries().iter().all(|&(_, m)| m < k);
                ok &= split.weight() == n && split.parts().iter().all(|&a| a % k != 0);
                ok &= glaisher_split(&merged, k)? == split;
            }
            maps.holds(&format!("merge-split-k{k}"), n as u64, ok);
        }
    }

    let mut dp = ReportBuilder::new("dp-vs-enumeration");
    for (name, params) in family_samples() {
        let spec = family(name, &params)?.spec();
        match count_table_dp(cfg.cap(), &spec) {
            Some(table) => {
                for n in 0..=cfg.cap() {
                    dp.compare(name, n as u64, BigInt::from(table[n as usize].clone()), enumerated(n, &spec));
                }
            }
            None => {
                dp.holds(&format!("{name}-dp-available"), 0, false);
            }
        }
    }
    Ok(vec![shapes.finish(), maps.finish(), dp.finish()])
}
