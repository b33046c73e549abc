//! Named partition families: each pairs a membership predicate with a
//! generating function written from its product or sum form.
//!
//! The generating functions are deliberately *not* derived from the
//! [`ConstraintSpec`]; they are the independent series-side route that the
//! enumeration and DP counts are checked against.

use std::collections::BTreeMap;
use std::sync::LazyLock;

use crate::constraint::{ConstraintSpec, Parity, ResidueSet};
use crate::enumeration::{count_table, CountTable};
use crate::error::{invalid, Result};
use crate::qseries::{pochhammer, ProductSpec, TruncatedSeries};
use crate::registry::{Params, Registry};
use crate::symmetric::SymmetricProfile;

pub trait Family: Send + Sync {
    fn name(&self) -> &'static str;

    fn params(&self) -> BTreeMap<String, i64> {
        BTreeMap::new()
    }

    fn spec(&self) -> ConstraintSpec;

    /// Series whose coefficient of `q^n` is the number of members of weight `n`.
    fn generating_function(&self, order: usize) -> TruncatedSeries;

    fn count_table(&self, max_n: u32) -> CountTable {
        CountTable {
            family: self.name().to_string(),
            params: self.params(),
            counts: count_table(max_n, &self.spec()),
        }
    }
}

fn params_of(pairs: &[(&str, u32)]) -> BTreeMap<String, i64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v as i64)).collect()
}

/// `∏_{m: modulus ∤ m} (1 + q^m + ... + q^(max_mult·m))`
fn regular_bounded(modulus: u32, max_mult: u32, order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(order);
    for m in 1..=order {
        if m % modulus as usize != 0 {
            out.mul_geometric_block(m, max_mult as usize + 1);
        }
    }
    out
}

fn product(spec: ProductSpec, order: usize) -> TruncatedSeries {
    pochhammer(&spec, order).expect("family products are well-formed")
}

/// `Σ_s q^(μ s(s-1)/2 + s(γ+1)) / (q^μ; q^μ)_s`, optionally restricted to one parity of `s`.
pub fn symmetric_sum(profile: SymmetricProfile, parity: Option<Parity>, order: usize) -> TruncatedSeries {
    let mu = profile.mu() as usize;
    let step = profile.gamma() as usize + 1;
    let mut out = TruncatedSeries::zero(order);
    let mut inv_poch = TruncatedSeries::one(order);
    let mut s = 0usize;
    loop {
        let exp = mu * s * s.saturating_sub(1) / 2 + s * step;
        if exp > order {
            break;
        }
        if s > 0 {
            inv_poch.div_binomial(true, 0, mu * s);
        }
        if parity.map_or(true, |p| p == Parity::of(s)) {
            out = &out + &inv_poch.shift(exp);
        }
        s += 1;
    }
    out
}

/// `Σ_j q^(base·j² + lin·j) / (q;q)_(2j + extra)` as in the two Slater sums.
pub fn slater_sum(quadratic: usize, linear: usize, extra: usize, order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(order);
    let mut inv_poch = TruncatedSeries::one(order);
    let mut built = 0usize;
    let mut j = 0usize;
    loop {
        let exp = quadratic * j * j + linear * j;
        if exp > order {
            break;
        }
        while built < 2 * j + extra {
            built += 1;
            inv_poch.div_binomial(true, 0, built);
        }
        out = &out + &inv_poch.shift(exp);
        j += 1;
    }
    out
}

/// `∏ (1-q^(8n-1))(1-q^(8n-7))(1-q^(16n-10))(1-q^(16n-6))(1-q^(8n)) / (1-q^n)`
pub fn slater_even_product(order: usize) -> TruncatedSeries {
    product(
        ProductSpec::new()
            .poch(7, 8)
            .poch(1, 8)
            .poch(6, 16)
            .poch(10, 16)
            .poch(8, 8)
            .inv_poch(1, 1),
        order,
    )
}

/// `∏ (1-q^(8n-3))(1-q^(8n-5))(1-q^(16n-14))(1-q^(16n-2))(1-q^(8n)) / (1-q^n)`
pub fn slater_odd_product(order: usize) -> TruncatedSeries {
    product(
        ProductSpec::new()
            .poch(5, 8)
            .poch(3, 8)
            .poch(2, 16)
            .poch(14, 16)
            .poch(8, 8)
            .inv_poch(1, 1),
        order,
    )
}

struct BFamily {
    p: u32,
    k: u32,
}

impl Family for BFamily {
    fn name(&self) -> &'static str {
        "b"
    }
    fn params(&self) -> BTreeMap<String, i64> {
        params_of(&[("p", self.p), ("k", self.k)])
    }
    fn spec(&self) -> ConstraintSpec {
        ConstraintSpec::b(self.p, self.k).expect("validated")
    }
    fn generating_function(&self, order: usize) -> TruncatedSeries {
        regular_bounded(self.p, self.k - 1, order)
    }
}

struct CFamily {
    k: u32,
    p: u32,
}

impl Family for CFamily {
    fn name(&self) -> &'static str {
        "c"
    }
    fn params(&self) -> BTreeMap<String, i64> {
        params_of(&[("k", self.k), ("p", self.p)])
    }
    fn spec(&self) -> ConstraintSpec {
        ConstraintSpec::c(self.k, self.p).expect("validated")
    }
    fn generating_function(&self, order: usize) -> TruncatedSeries {
        regular_bounded(self.k, self.p - 1, order)
    }
}

struct RFamily {
    k: u32,
}

impl Family for RFamily {
    fn name(&self) -> &'static str {
        "r"
    }
    fn params(&self) -> BTreeMap<String, i64> {
        params_of(&[("k", self.k)])
    }
    fn spec(&self) -> ConstraintSpec {
        ConstraintSpec::r(self.k).expect("validated")
    }
    /// `∏ (1 - q^(kn)) / (1 - q^n)`
    fn generating_function(&self, order: usize) -> TruncatedSeries {
        product(ProductSpec::new().poch(self.k, self.k).inv_poch(1, 1), order)
    }
}

struct FFamily {
    p: u32,
    t: u32,
}

impl Family for FFamily {
    fn name(&self) -> &'static str {
        "f"
    }
    fn params(&self) -> BTreeMap<String, i64> {
        params_of(&[("p", self.p), ("t", self.t)])
    }
    fn spec(&self) -> ConstraintSpec {
        ConstraintSpec::f(self.p, self.t).expect("validated")
    }
    /// `∏_n (1 + q^(tpn) + ... + q^((p-1)tpn)) · ∏_{p ∤ m} (1 + q^m + ... + q^((pt-1)m))`
    fn generating_function(&self, order: usize) -> TruncatedSeries {
        let (p, t) = (self.p as usize, self.t as usize);
        let mut out = regular_bounded(self.p, self.p * self.t - 1, order);
        let mut n = 1;
        while t * p * n <= order {
            out.mul_geometric_block(t * p * n, p);
            n += 1;
        }
        out
    }
}

struct Distinct;

impl Family for Distinct {
    fn name(&self) -> &'static str {
        "distinct"
    }
    fn spec(&self) -> ConstraintSpec {
        ConstraintSpec::distinct()
    }
    fn generating_function(&self, order: usize) -> TruncatedSeries {
        product(ProductSpec::new().neg_poch(1, 1), order)
    }
}

struct DistinctOdd;

impl Family for DistinctOdd {
    fn name(&self) -> &'static str {
        "distinct-odd"
    }
    fn spec(&self) -> ConstraintSpec {
        ConstraintSpec::distinct_odd()
    }
    fn generating_function(&self, order: usize) -> TruncatedSeries {
        product(ProductSpec::new().neg_poch(1, 2), order)
    }
}

struct AllPartitions;

impl Family for AllPartitions {
    fn name(&self) -> &'static str {
        "all"
    }
    fn spec(&self) -> ConstraintSpec {
        ConstraintSpec::all()
    }
    fn generating_function(&self, order: usize) -> TruncatedSeries {
        product(ProductSpec::new().inv_poch(1, 1), order)
    }
}

struct SelfConjugate;

impl Family for SelfConjugate {
    fn name(&self) -> &'static str {
        "self-conjugate"
    }
    fn spec(&self) -> ConstraintSpec {
        ConstraintSpec::self_conjugate()
    }
    /// Durfee-square decomposition: `Σ_s q^(s²) / (q²; q²)_s`.
    fn generating_function(&self, order: usize) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(order);
        let mut s = 0usize;
        while s * s <= order {
            let inv = product(ProductSpec::new().inv_poch_finite(2, 2, s as u32), order);
            out = &out + &inv.shift(s * s);
            s += 1;
        }
        out
    }
}

struct Symmetric {
    profile: SymmetricProfile,
    parity: Option<Parity>,
    name: &'static str,
}

impl Family for Symmetric {
    fn name(&self) -> &'static str {
        self.name
    }
    fn params(&self) -> BTreeMap<String, i64> {
        params_of(&[("mu", self.profile.mu()), ("gamma", self.profile.gamma())])
    }
    fn spec(&self) -> ConstraintSpec {
        ConstraintSpec::symmetric_with_parity(self.profile, self.parity)
    }
    fn generating_function(&self, order: usize) -> TruncatedSeries {
        symmetric_sum(self.profile, self.parity, order)
    }
}

struct DistinctResidue {
    profile: SymmetricProfile,
}

impl Family for DistinctResidue {
    fn name(&self) -> &'static str {
        "distinct-residue"
    }
    fn params(&self) -> BTreeMap<String, i64> {
        params_of(&[("mu", self.profile.mu()), ("gamma", self.profile.gamma())])
    }
    fn spec(&self) -> ConstraintSpec {
        ConstraintSpec::distinct_residue(self.profile)
    }
    /// `∏_{n>=0} (1 + q^(μn + γ + 1))`
    fn generating_function(&self, order: usize) -> TruncatedSeries {
        product(
            ProductSpec::new().neg_poch(self.profile.gamma() + 1, self.profile.mu()),
            order,
        )
    }
}

struct Mod9 {
    i: u32,
}

impl Family for Mod9 {
    fn name(&self) -> &'static str {
        "mod9"
    }
    fn params(&self) -> BTreeMap<String, i64> {
        params_of(&[("i", self.i)])
    }
    fn spec(&self) -> ConstraintSpec {
        ConstraintSpec::mod9(self.i).expect("validated")
    }
    /// `(q^9;q^9)_∞ (q^i;q^9)_∞ (q^(9-i);q^9)_∞ / (q;q)_∞`
    fn generating_function(&self, order: usize) -> TruncatedSeries {
        product(
            ProductSpec::new().poch(9, 9).poch(self.i, 9).poch(9 - self.i, 9).inv_poch(1, 1),
            order,
        )
    }
}

struct Mod16 {
    even_order: bool,
}

impl Family for Mod16 {
    fn name(&self) -> &'static str {
        if self.even_order {
            "mod16-even"
        } else {
            "mod16-odd"
        }
    }
    fn spec(&self) -> ConstraintSpec {
        if self.even_order {
            ConstraintSpec::mod16_even_order()
        } else {
            ConstraintSpec::mod16_odd_order()
        }
    }
    fn generating_function(&self, order: usize) -> TruncatedSeries {
        if self.even_order {
            slater_even_product(order)
        } else {
            slater_odd_product(order)
        }
    }
}

struct Avoid {
    residues: ResidueSet,
}

impl Family for Avoid {
    fn name(&self) -> &'static str {
        "avoid"
    }
    fn params(&self) -> BTreeMap<String, i64> {
        params_of(&[("modulus", self.residues.modulus())])
    }
    fn spec(&self) -> ConstraintSpec {
        ConstraintSpec::avoiding(self.residues.clone())
    }
    /// `∏_{r allowed} 1 / (q^r; q^d)_∞`, with residue 0 starting at `q^d`.
    fn generating_function(&self, order: usize) -> TruncatedSeries {
        let d = self.residues.modulus();
        let mut spec = ProductSpec::new();
        for r in 0..d {
            if !self.residues.residues().contains(&r) {
                spec = spec.inv_poch(if r == 0 { d } else { r }, d);
            }
        }
        product(spec, order)
    }
}

fn profile(params: &Params) -> Result<SymmetricProfile> {
    SymmetricProfile::new(params.mu()?, params.gamma()?)
}

fn at_least(name: &'static str, v: u32, min: u32) -> Result<u32> {
    if v < min {
        Err(invalid(name, format!("must be >= {min}, got {v}")))
    } else {
        Ok(v)
    }
}

pub static FAMILIES: LazyLock<Registry<dyn Family>> = LazyLock::new(|| {
    let mut reg: Registry<dyn Family> = Registry::new("family");
    reg.register("b", "parts not divisible by p, each at most k-1 times (--p --k)", |a| {
        Ok(Box::new(BFamily {
            p: at_least("p", a.p()?, 2)?,
            k: at_least("k", a.k()?, 2)?,
        }))
    })
    .register("c", "parts not divisible by k, each at most p-1 times (--k --p)", |a| {
        Ok(Box::new(CFamily {
            k: at_least("k", a.k()?, 2)?,
            p: at_least("p", a.p()?, 2)?,
        }))
    })
    .register("r", "every part at most k-1 times (--k)", |a| {
        Ok(Box::new(RFamily {
            k: at_least("k", a.k()?, 2)?,
        }))
    })
    .register("f", "parts divisible by p with multiplicity jt (1<=j<p), others at most pt-1 times (--p --t)", |a| {
        Ok(Box::new(FFamily {
            p: at_least("p", a.p()?, 2)?,
            t: at_least("t", a.t()?, 1)?,
        }))
    })
    .register("distinct", "distinct parts", |_| Ok(Box::new(Distinct)))
    .register("distinct-odd", "distinct odd parts", |_| Ok(Box::new(DistinctOdd)))
    .register("all", "all partitions", |_| Ok(Box::new(AllPartitions)))
    .register("self-conjugate", "partitions equal to their conjugate", |_| Ok(Box::new(SelfConjugate)))
    .register("symmetric", "(mu,gamma)-symmetric partitions (--mu --gamma)", |a| {
        Ok(Box::new(Symmetric {
            profile: profile(a)?,
            parity: None,
            name: "symmetric",
        }))
    })
    .register("symmetric-even", "(mu,gamma)-symmetric partitions of even order (--mu --gamma)", |a| {
        Ok(Box::new(Symmetric {
            profile: profile(a)?,
            parity: Some(Parity::Even),
            name: "symmetric-even",
        }))
    })
    .register("symmetric-odd", "(mu,gamma)-symmetric partitions of odd order (--mu --gamma)", |a| {
        Ok(Box::new(Symmetric {
            profile: profile(a)?,
            parity: Some(Parity::Odd),
            name: "symmetric-odd",
        }))
    })
    .register(
        "distinct-residue",
        "distinct parts congruent to 1+gamma mod mu, all at least gamma+1 (--mu --gamma)",
        |a| Ok(Box::new(DistinctResidue { profile: profile(a)? })),
    )
    .register("mod9", "parts not congruent to 0, ±i (mod 9) (--i)", |a| {
        let i = a.i()?;
        ConstraintSpec::mod9(i)?;
        Ok(Box::new(Mod9 { i }))
    })
    .register("mod16-even", "parts not congruent to 0, ±1, ±6, ±7, 8 (mod 16)", |_| {
        Ok(Box::new(Mod16 { even_order: true }))
    })
    .register("mod16-odd", "parts not congruent to 0, ±2, ±3, ±5, 8 (mod 16)", |_| {
        Ok(Box::new(Mod16 { even_order: false }))
    })
    .register("avoid", "parts avoiding the listed residues (--modulus --residues)", |a| {
        Ok(Box::new(Avoid {
            residues: ResidueSet::new(a.modulus()?, a.residues()?.iter().copied())?,
        }))
    });
    reg
});

pub fn family(name: &str, params: &Params) -> Result<Box<dyn Family>> {
    FAMILIES.build(name, params)
}
