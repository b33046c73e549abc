use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;

use super::{enumerated, family_gf, VerifyConfig};
use crate::constraint::{ConstraintSpec, Parity};
use crate::enumeration::{count_fe_fo_enumerated, count_table_dp, enumerate, fe_fo_tables, fo_from_distinct_table};
use crate::error::Result;
use crate::family::{slater_even_product, slater_odd_product, slater_sum, symmetric_sum};
use crate::glaisher::{f_to_r, phi, phi_inverse, r_to_f};
use crate::partition::Partition;
use crate::qseries::{pochhammer, ProductSpec, TruncatedSeries};
use crate::registry::Params;
use crate::report::{ReportBuilder, VerificationReport};
use crate::symmetric::{generate_symmetric, generate_symmetric_filtered, sylvester_general, sylvester_general_inverse, SymmetricProfile};

/// Largest weight for the exhaustive bijection checks.
const BIJECTION_CAP: u32 = 30;
const ROUND_TRIP_CAP: u32 = 25;
/// Enumeration of the filtered symmetric oracle walks every partition of `n`.
const FILTER_CAP: u32 = 30;

fn compare_series(report: &mut ReportBuilder, check: &str, lhs: &TruncatedSeries, rhs: &TruncatedSeries, upto: usize) {
    for n in 0..=upto {
        report.compare(check, n as u64, lhs.coeff(n), rhs.coeff(n));
    }
}

fn series(spec: ProductSpec, order: usize) -> TruncatedSeries {
    pochhammer(&spec, order).expect("well-formed product")
}

fn pq(p: u32, q: u32) -> Params {
    Params {
        p: Some(p),
        k: Some(q),
        ..Params::default()
    }
}

/// Distinct parts not divisible by 3 vs odd parts repeated at most twice.
pub fn verify_regular_distinct(cfg: &VerifyConfig) -> Result<VerificationReport> {
    let order = cfg.order;
    let mut report = ReportBuilder::new("regular-distinct").param("p", 3).param("k", 2);
    // ∏ (1 + q^(3n-1))(1 + q^(3n-2))  and  ∏_{m odd} (1 - q^(3m)) / (1 - q^m)
    let lhs = series(ProductSpec::new().neg_poch(1, 3).neg_poch(2, 3), order);
    let rhs = series(ProductSpec::new().poch(3, 6).inv_poch(1, 2), order);
    compare_series(&mut report, "series", &lhs, &rhs, order);
    let b = ConstraintSpec::b(3, 2)?;
    let odd_twice = ConstraintSpec {
        odd_only: true,
        max_multiplicity: Some(2),
        ..ConstraintSpec::all()
    };
    for n in 0..=cfg.cap() {
        let (x, y) = (enumerated(n, &b), enumerated(n, &odd_twice));
        report.compare("series-vs-enumeration", n as u64, &lhs.coeff(n as usize), &x);
        report.compare("enumeration", n as u64, x, y);
    }
    Ok(report.finish())
}

/// `b(n,p,k) = c(n,k,p)` both ways, plus bijectivity of φ per weight.
pub fn verify_b_equals_c(cfg: &VerifyConfig, p: u32, k: u32) -> Result<VerificationReport> {
    let order = cfg.order;
    let mut report = ReportBuilder::new("b-equals-c").param("p", p).param("k", k);
    let gb = family_gf("b", pq(p, k), order)?;
    let gc = family_gf("c", pq(p, k), order)?;
    compare_series(&mut report, "series", &gb, &gc, order);
    let (b, c) = (ConstraintSpec::b(p, k)?, ConstraintSpec::c(k, p)?);
    for n in 0..=cfg.cap() {
        let (x, y) = (enumerated(n, &b), enumerated(n, &c));
        report.compare("series-vs-enumeration", n as u64, &gb.coeff(n as usize), &x);
        report.compare("enumeration", n as u64, x, y);
    }
    for n in 0..=cfg.cap().min(BIJECTION_CAP) {
        let mut images = BTreeSet::new();
        let mut ok = true;
        for lambda in enumerate(n, &b) {
            let mu = phi(&lambda, p, k)?;
            ok &= mu.weight() == n && c.satisfies(&mu) && phi_inverse(&mu, p, k)? == lambda;
            images.insert(mu);
        }
        report.holds("phi-maps-into-c-and-inverts", n as u64, ok);
        report.compare("phi-image-size", n as u64, images.len(), enumerate(n, &c).count());
    }
    Ok(report.finish())
}

/// `f(n,p,t) = r(n,p)` both ways, plus the F → R round trip.
pub fn verify_f_equals_r(cfg: &VerifyConfig, p: u32, t: u32) -> Result<VerificationReport> {
    let order = cfg.order;
    let mut report = ReportBuilder::new("f-equals-r").param("p", p).param("t", t);
    let params = Params {
        p: Some(p),
        k: Some(p),
        t: Some(t),
        ..Params::default()
    };
    let gf = family_gf("f", params.clone(), order)?;
    let gr = family_gf("r", params, order)?;
    compare_series(&mut report, "series", &gf, &gr, order);
    let (f, r) = (ConstraintSpec::f(p, t)?, ConstraintSpec::r(p)?);
    for n in 0..=cfg.cap() {
        let (x, y) = (enumerated(n, &f), enumerated(n, &r));
        report.compare("series-vs-enumeration", n as u64, &gf.coeff(n as usize), &x);
        report.compare("enumeration", n as u64, x, y);
    }
    for n in 0..=cfg.cap().min(ROUND_TRIP_CAP) {
        let mut images = BTreeSet::new();
        let mut ok = true;
        for lambda in enumerate(n, &f) {
            let mu = f_to_r(&lambda, p, t)?;
            ok &= mu.weight() == n && r.satisfies(&mu) && r_to_f(&mu, p, t)? == lambda;
            images.insert(mu);
        }
        report.holds("round-trip", n as u64, ok);
        report.compare("image-size", n as u64, images.len(), enumerate(n, &r).count());
    }
    Ok(report.finish())
}

/// `Σ_{t=1}^{ℓ} f(n,p,t) = ℓ·r(n,p)`, hence divisible by `ℓ`.
pub fn verify_f_sum_divisible(cfg: &VerifyConfig, p: u32, ell: u32) -> Result<VerificationReport> {
    let order = cfg.order;
    let mut report = ReportBuilder::new("f-sum-divisible").param("p", p).param("ell", ell);
    let mut sum = TruncatedSeries::zero(order);
    for t in 1..=ell {
        let params = Params {
            p: Some(p),
            t: Some(t),
            ..Params::default()
        };
        sum = &sum + &family_gf("f", params, order)?;
    }
    let r = family_gf("r", Params { k: Some(p), ..Params::default() }, order)?.scale(&BigInt::from(ell));
    compare_series(&mut report, "series", &sum, &r, order);
    for n in 0..=order {
        report.holds("series-divisible", n as u64, sum.coeff(n).is_multiple_of(&BigInt::from(ell)));
    }
    // independent path: exact enumerated counts reduced mod ℓ
    let specs = (1..=ell).map(|t| ConstraintSpec::f(p, t)).collect::<Result<Vec<_>>>()?;
    for n in 0..=cfg.cap().min(BIJECTION_CAP) {
        let total: BigInt = specs.iter().map(|s| enumerated(n, s)).sum();
        report.holds("enumeration-divisible", n as u64, total.is_multiple_of(&BigInt::from(ell)));
        report.compare("series-vs-enumeration", n as u64, sum.coeff(n as usize), total);
    }
    Ok(report.finish())
}

/// Members of F(n,2,t) with an odd number of distinct even part sizes, against
/// `Σ_{j>=1} (-1)^(j+1) d(n - 2tj²)`.
pub fn verify_fo_formula(cfg: &VerifyConfig, t: u32) -> Result<VerificationReport> {
    let order = cfg.order as u32;
    let mut report = ReportBuilder::new("fo-formula").param("t", t);
    let (fe, fo) = fe_fo_tables(order, t)?;
    let formula = fo_from_distinct_table(order, t)?;
    for n in 0..=order as usize {
        report.compare("dp-vs-formula", n as u64, BigInt::from(fo[n].clone()), formula[n].clone());
    }
    let f = ConstraintSpec::f(2, t)?;
    for n in 0..=cfg.cap() {
        let (e, o) = count_fe_fo_enumerated(n, t)?;
        report.compare("enumerated-fo", n as u64, BigInt::from(o), formula[n as usize].clone());
        report.compare("enumerated-fe", n as u64, BigInt::from(e), BigInt::from(fe[n as usize].clone()));
        report.compare("fe-plus-fo", n as u64, BigInt::from(e + o), enumerated(n, &f));
    }
    Ok(report.finish())
}

fn b32_term(r: usize, order: usize) -> TruncatedSeries {
    let base = ProductSpec::new().poch(27, 27).inv_poch(3, 3);
    match r {
        0 => series(base.neg_poch(15, 27).neg_poch(12, 27), order),
        1 => series(base.neg_poch(21, 27).neg_poch(33, 27).binomial(false, 6), order).shift(1),
        _ => series(base.neg_poch(3, 27).neg_poch(24, 27), order).shift(2),
    }
}

/// The same three terms after `q³ → q`.
fn b32_reindexed(r: usize, order: usize) -> TruncatedSeries {
    let base = ProductSpec::new().poch(9, 9).inv_poch(1, 1);
    match r {
        0 => series(base.neg_poch(5, 9).neg_poch(4, 9), order),
        1 => series(base.neg_poch(7, 9).neg_poch(11, 9).binomial(false, 2), order),
        _ => series(base.neg_poch(1, 9).neg_poch(8, 9), order),
    }
}

/// The 3-dissection of `Σ b(n,3,2) q^n` into three product terms, and
/// `b(3n,3,2) ≡ c(n,4)`, `b(3n+2,3,2) ≡ c(n,1) (mod 2)`.
pub fn verify_b32_dissection(cfg: &VerifyConfig) -> Result<VerificationReport> {
    let order = cfg.order;
    let parity_range = order / 2;
    let mut report = ReportBuilder::new("b32-dissection");
    let b = family_gf("b", pq(3, 2), order.max(3 * parity_range + 2))?;
    let terms: Vec<TruncatedSeries> = (0..3).map(|r| b32_term(r, order)).collect();
    for (r, term) in terms.iter().enumerate() {
        for rr in 0..3 {
            if rr > order {
                continue;
            }
            let got = term.dissect(3, rr)?;
            let want = if r == rr { b.truncate(order).dissect(3, rr)? } else { TruncatedSeries::zero(got.order()) };
            for m in 0..=got.order() {
                report.compare(&format!("term{r}-residue{rr}"), (3 * m + rr) as u64, got.coeff(m), want.coeff(m));
            }
        }
        if r <= order {
            let reindexed = b32_reindexed(r, (order - r) / 3);
            let own = b.truncate(order).dissect(3, r)?;
            for m in 0..=own.order() {
                report.compare(&format!("reindexed{r}"), (3 * m + r) as u64, own.coeff(m), reindexed.coeff(m));
            }
        }
    }
    let c4 = family_gf("mod9", Params { i: Some(4), ..Params::default() }, parity_range)?;
    let c1 = family_gf("mod9", Params { i: Some(1), ..Params::default() }, parity_range)?;
    for n in 0..=parity_range {
        report.compare("parity-3n", n as u64, b.coeff(3 * n).is_odd(), c4.coeff(n).is_odd());
        report.compare("parity-3n+2", n as u64, b.coeff(3 * n + 2).is_odd(), c1.coeff(n).is_odd());
    }
    let bspec = ConstraintSpec::b(3, 2)?;
    let (c4spec, c1spec) = (ConstraintSpec::mod9(4)?, ConstraintSpec::mod9(1)?);
    for n in 0..=cfg.cap() {
        report.compare("series-vs-enumeration", n as u64, b.coeff(n as usize), enumerated(n, &bspec));
        if 3 * n + 2 <= cfg.cap() {
            let (b0, b2) = (enumerated(3 * n, &bspec), enumerated(3 * n + 2, &bspec));
            report.compare("enumerated-parity-3n", n as u64, b0.is_odd(), enumerated(n, &c4spec).is_odd());
            report.compare("enumerated-parity-3n+2", n as u64, b2.is_odd(), enumerated(n, &c1spec).is_odd());
        }
    }
    Ok(report.finish())
}

/// `g(n,μ,γ)` equals the number of partitions into distinct parts `≡ 1+γ (mod μ)`
/// that are at least `γ+1`; the sum and product forms agree; the generalized
/// Sylvester map round-trips.
pub fn verify_symmetric_distinct(cfg: &VerifyConfig, mu: u32, gamma: u32) -> Result<VerificationReport> {
    let order = cfg.order;
    let profile = SymmetricProfile::new(mu, gamma)?;
    let mut report = ReportBuilder::new("symmetric-distinct").param("mu", mu).param("gamma", gamma);
    let sum = symmetric_sum(profile, None, order);
    let prod = series(ProductSpec::new().neg_poch(gamma + 1, mu), order);
    compare_series(&mut report, "sum-vs-product", &sum, &prod, order);
    let dp = count_table_dp(order as u32, &ConstraintSpec::symmetric(profile)).expect("pure shape spec");
    for n in 0..=order {
        report.compare("dp-vs-sum", n as u64, BigInt::from(dp[n].clone()), sum.coeff(n));
    }
    let (even, odd) = (symmetric_sum(profile, Some(Parity::Even), order), symmetric_sum(profile, Some(Parity::Odd), order));
    compare_series(&mut report, "even-plus-odd", &(&even + &odd), &sum, order);
    for (parity, part) in [(Parity::Even, &even), (Parity::Odd, &odd)] {
        let dp = count_table_dp(order as u32, &ConstraintSpec::symmetric_with_parity(profile, Some(parity))).expect("pure shape spec");
        for n in 0..=order {
            report.compare(&format!("dp-vs-sum-{parity:?}"), n as u64, BigInt::from(dp[n].clone()), part.coeff(n));
        }
    }
    let distinct = ConstraintSpec::distinct_residue(profile);
    for n in 0..=cfg.cap().min(FILTER_CAP) {
        let filtered: BTreeSet<Partition> = generate_symmetric_filtered(n, profile).collect();
        let mapped: BTreeSet<Partition> = generate_symmetric(n, profile).collect();
        report.compare("filtered-vs-distinct", n as u64, filtered.len(), enumerate(n, &distinct).count());
        report.holds("generators-agree", n as u64, filtered == mapped);
        report.compare("series-vs-enumeration", n as u64, sum.coeff(n as usize), BigInt::from(filtered.len()));
    }
    for n in 0..=cfg.cap() {
        let mut ok = true;
        for beta in enumerate(n, &distinct) {
            let lambda = sylvester_general_inverse(&beta, profile)?;
            ok &= lambda.weight() == n && sylvester_general(&lambda, profile)? == beta;
            ok &= beta.parts().windows(2).all(|w| w[0] - w[1] >= mu);
        }
        report.holds("round-trip", n as u64, ok);
    }
    Ok(report.finish())
}

fn alpha_profile(alpha: u32) -> Result<SymmetricProfile> {
    let alpha = Params {
        alpha: Some(alpha),
        ..Params::default()
    }
    .even_alpha()?;
    SymmetricProfile::new(alpha, alpha / 2 - 1)
}

fn symmetric_mod16(cfg: &VerifyConfig, alpha: u32, parity: Parity) -> Result<VerificationReport> {
    let profile = alpha_profile(alpha)?;
    let (id, shift, target, family) = match parity {
        Parity::Even => ("symmetric-even-mod16", 0, slater_even_product as fn(usize) -> TruncatedSeries, "mod16-even"),
        Parity::Odd => ("symmetric-odd-mod16", alpha as usize / 2, slater_odd_product as fn(usize) -> TruncatedSeries, "mod16-odd"),
    };
    let range = cfg.order / 2;
    let a = alpha as usize;
    let mut report = ReportBuilder::new(id).param("alpha", alpha);
    let full = a * range + shift;
    let sym = symmetric_sum(profile, Some(parity), full);
    let lhs = sym.dissect(a, shift)?;
    let rhs = target(range);
    compare_series(&mut report, "series", &lhs, &rhs, range);
    for r in (0..a).filter(|&r| r != shift) {
        let other = sym.dissect(a, r)?;
        report.holds("other-residues-vanish", r as u64, other.is_zero());
    }
    let dp = count_table_dp(full as u32, &ConstraintSpec::symmetric_with_parity(profile, Some(parity))).expect("pure shape spec");
    for n in 0..=range {
        report.compare("dp-vs-series", n as u64, BigInt::from(dp[a * n + shift].clone()), rhs.coeff(n));
    }
    let spec = crate::family::family(family, &Params::default())?.spec();
    for n in 0..=cfg.cap().min(range as u32) {
        report.compare("series-vs-enumeration", n as u64, rhs.coeff(n as usize), enumerated(n, &spec));
        let weight = alpha * n + shift as u32;
        if weight <= cfg.cap() {
            let symmetric = generate_symmetric(weight, profile).filter(|l| Parity::of(l.order()) == parity).count();
            report.compare("enumeration", n as u64, BigInt::from(symmetric), enumerated(n, &spec));
        }
    }
    Ok(report.finish())
}

/// `g_e(αn, α, α/2-1)` equals the number of partitions of `n` into parts
/// avoiding `0, ±1, ±6, ±7, 8 (mod 16)`.
pub fn verify_symmetric_even_mod16(cfg: &VerifyConfig, alpha: u32) -> Result<VerificationReport> {
    symmetric_mod16(cfg, alpha, Parity::Even)
}

/// `g_o(αn + α/2, α, α/2-1)` equals the number of partitions of `n` into parts
/// avoiding `0, ±2, ±3, ±5, 8 (mod 16)`.
pub fn verify_symmetric_odd_mod16(cfg: &VerifyConfig, alpha: u32) -> Result<VerificationReport> {
    symmetric_mod16(cfg, alpha, Parity::Odd)
}

/// `Σ q^(2n²)/(q;q)_(2n)` and `Σ q^(2n(n+1))/(q;q)_(2n+1)` against their products.
pub fn verify_slater(cfg: &VerifyConfig) -> Result<VerificationReport> {
    let order = cfg.order;
    let mut report = ReportBuilder::new("slater");
    let (even_sum, even_prod) = (slater_sum(2, 0, 0, order), slater_even_product(order));
    let (odd_sum, odd_prod) = (slater_sum(2, 2, 1, order), slater_odd_product(order));
    compare_series(&mut report, "even", &even_sum, &even_prod, order);
    compare_series(&mut report, "odd", &odd_sum, &odd_prod, order);
    let (even, odd) = (ConstraintSpec::mod16_even_order(), ConstraintSpec::mod16_odd_order());
    for n in 0..=cfg.cap() {
        report.compare("even-enumeration", n as u64, even_sum.coeff(n as usize), enumerated(n, &even));
        report.compare("odd-enumeration", n as u64, odd_sum.coeff(n as usize), enumerated(n, &odd));
    }
    Ok(report.finish())
}
