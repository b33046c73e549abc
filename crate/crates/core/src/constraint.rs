//! Declarative partition families.
//!
//! A [`ConstraintSpec`] is a conjunction of clauses. Most clauses are
//! *separable*: they constrain each part size and its multiplicity
//! independently, which is what lets the enumerator prune and the counting
//! DP factor over part sizes. The optional [`Shape`] clause (self-conjugate,
//! (μ,γ)-symmetric) is a whole-partition predicate.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::partition::Partition;
use crate::symmetric::{is_symmetric, SymmetricProfile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(x: usize) -> Self {
        if x % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Residues modulo `modulus` that parts must avoid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueSet {
    modulus: u32,
    residues: BTreeSet<u32>,
}

impl ResidueSet {
    pub fn new(modulus: u32, residues: impl IntoIterator<Item = u32>) -> Result<Self> {
        if modulus < 1 {
            return Err(invalid("modulus", "must be at least 1"));
        }
        let residues: BTreeSet<u32> = residues.into_iter().collect();
        if let Some(&r) = residues.iter().find(|&&r| r >= modulus) {
            return Err(invalid("residues", format!("{r} is not in [0, {modulus})")));
        }
        Ok(Self { modulus, residues })
    }

    /// Closes `base` under negation: `{0, ±i}` becomes `{0, i, d - i}`.
    pub fn symmetric(modulus: u32, base: &[u32]) -> Result<Self> {
        let mut set = Vec::new();
        for &r in base {
            let r = r % modulus.max(1);
            set.push(r);
            set.push((modulus - r) % modulus);
        }
        Self::new(modulus, set)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn residues(&self) -> &BTreeSet<u32> {
        &self.residues
    }

    pub fn forbids(&self, part: u32) -> bool {
        self.residues.contains(&(part % self.modulus))
    }
}

/// Multiplicity rule of the F(n,p,t) family: parts divisible by `p` occur
/// with multiplicity `j·t` for some `1 <= j <= p-1`; other parts at most
/// `p·t - 1` times.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityRule {
    pub p: u32,
    pub t: u32,
}

impl MultiplicityRule {
    pub fn allows(&self, part: u32, mult: u32) -> bool {
        if part % self.p == 0 {
            mult % self.t == 0 && mult / self.t >= 1 && mult / self.t < self.p
        } else {
            mult <= self.p * self.t - 1
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    SelfConjugate,
    Symmetric {
        profile: SymmetricProfile,
        order_parity: Option<Parity>,
    },
}

impl Shape {
    pub fn holds(&self, lambda: &Partition) -> bool {
        match *self {
            Shape::SelfConjugate => lambda.is_self_conjugate(),
            Shape::Symmetric {
                profile,
                order_parity,
            } => {
                is_symmetric(lambda, profile)
                    && order_parity.map_or(true, |par| Parity::of(lambda.order()) == par)
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConstraintSpec {
    /// Exclude parts divisible by this modulus.
    pub regular_modulus: Option<u32>,
    pub max_multiplicity: Option<u32>,
    pub forbidden_residues: Option<ResidueSet>,
    pub distinct: bool,
    pub odd_only: bool,
    pub min_part: Option<u32>,
    pub multiplicity_rule: Option<MultiplicityRule>,
    pub shape: Option<Shape>,
}

fn at_least(name: &'static str, value: u32, min: u32) -> Result<()> {
    if value < min {
        Err(invalid(name, format!("must be >= {min}, got {value}")))
    } else {
        Ok(())
    }
}

impl ConstraintSpec {
    /// Every partition.
    pub fn all() -> Self {
        Self::default()
    }

    /// B(·,p,k): parts not divisible by `p`, each occurring at most `k-1` times.
    pub fn b(p: u32, k: u32) -> Result<Self> {
        at_least("p", p, 2)?;
        at_least("k", k, 2)?;
        Ok(Self {
            regular_modulus: Some(p),
            max_multiplicity: Some(k - 1),
            ..Self::default()
        })
    }

    /// C(·,k,p): parts not divisible by `k`, each occurring at most `p-1` times.
    pub fn c(k: u32, p: u32) -> Result<Self> {
        at_least("k", k, 2)?;
        at_least("p", p, 2)?;
        Ok(Self {
            regular_modulus: Some(k),
            max_multiplicity: Some(p - 1),
            ..Self::default()
        })
    }

    /// R(·,k): every part occurs at most `k-1` times.
    pub fn r(k: u32) -> Result<Self> {
        at_least("k", k, 2)?;
        Ok(Self {
            max_multiplicity: Some(k - 1),
            ..Self::default()
        })
    }

    pub fn f(p: u32, t: u32) -> Result<Self> {
        at_least("p", p, 2)?;
        at_least("t", t, 1)?;
        Ok(Self {
            multiplicity_rule: Some(MultiplicityRule { p, t }),
            ..Self::default()
        })
    }

    pub fn distinct() -> Self {
        Self {
            distinct: true,
            ..Self::default()
        }
    }

    pub fn distinct_odd() -> Self {
        Self {
            distinct: true,
            odd_only: true,
            ..Self::default()
        }
    }

    pub fn self_conjugate() -> Self {
        Self {
            shape: Some(Shape::SelfConjugate),
            ..Self::default()
        }
    }

    pub fn symmetric(profile: SymmetricProfile) -> Self {
        Self::symmetric_with_parity(profile, None)
    }

    pub fn symmetric_with_parity(profile: SymmetricProfile, order_parity: Option<Parity>) -> Self {
        Self {
            shape: Some(Shape::Symmetric {
                profile,
                order_parity,
            }),
            ..Self::default()
        }
    }

    /// Parts avoiding the given residues mod `modulus`.
    pub fn avoiding(residues: ResidueSet) -> Self {
        Self {
            forbidden_residues: Some(residues),
            ..Self::default()
        }
    }

    /// Parts not congruent to `0, ±i (mod 9)`.
    pub fn mod9(i: u32) -> Result<Self> {
        if !(1..=8).contains(&i) {
            return Err(invalid("i", format!("must lie in 1..=8, got {i}")));
        }
        Ok(Self::avoiding(ResidueSet::symmetric(9, &[0, i])?))
    }

    /// Parts not congruent to `0, ±1, ±6, ±7, 8 (mod 16)`.
    pub fn mod16_even_order() -> Self {
        Self::avoiding(ResidueSet::symmetric(16, &[0, 1, 6, 7, 8]).expect("residues below 16"))
    }

    /// Parts not congruent to `0, ±2, ±3, ±5, 8 (mod 16)`.
    pub fn mod16_odd_order() -> Self {
        Self::avoiding(ResidueSet::symmetric(16, &[0, 2, 3, 5, 8]).expect("residues below 16"))
    }

    /// Distinct parts congruent to `1+γ (mod μ)`, smallest part at least `γ+1`.
    pub fn distinct_residue(profile: SymmetricProfile) -> Self {
        let mu = profile.mu();
        let keep = (1 + profile.gamma()) % mu;
        let residues = ResidueSet::new(mu, (0..mu).filter(|&r| r != keep)).expect("residues below mu");
        Self {
            forbidden_residues: Some(residues),
            distinct: true,
            min_part: Some(profile.gamma() + 1),
            ..Self::default()
        }
    }

    /// Whether the separable clauses admit `part` at all.
    pub fn admits_part(&self, part: u32) -> bool {
        if part == 0 {
            return false;
        }
        if self.regular_modulus.is_some_and(|m| part % m == 0) {
            return false;
        }
        if self.odd_only && part % 2 == 0 {
            return false;
        }
        if self.min_part.is_some_and(|m| part < m) {
            return false;
        }
        if self.forbidden_residues.as_ref().is_some_and(|r| r.forbids(part)) {
            return false;
        }
        true
    }

    /// Whether the separable clauses admit `part` with multiplicity `mult >= 1`.
    pub fn allows(&self, part: u32, mult: u32) -> bool {
        if mult == 0 {
            return true;
        }
        if !self.admits_part(part) {
            return false;
        }
        if self.distinct && mult > 1 {
            return false;
        }
        if self.max_multiplicity.is_some_and(|m| mult > m) {
            return false;
        }
        if self.multiplicity_rule.is_some_and(|rule| !rule.allows(part, mult)) {
            return false;
        }
        true
    }

    /// Largest multiplicity that could ever be allowed for `part`, if bounded.
    pub(crate) fn multiplicity_cap(&self, part: u32) -> Option<u32> {
        let mut cap: Option<u32> = None;
        let mut tighten = |c: u32| cap = Some(cap.map_or(c, |x: u32| x.min(c)));
        if self.distinct {
            tighten(1);
        }
        if let Some(m) = self.max_multiplicity {
            tighten(m);
        }
        if let Some(rule) = self.multiplicity_rule {
            if part % rule.p == 0 {
                tighten((rule.p - 1) * rule.t);
            } else {
                tighten(rule.p * rule.t - 1);
            }
        }
        cap
    }

    pub fn is_separable(&self) -> bool {
        self.shape.is_none()
    }

    pub fn satisfies(&self, lambda: &Partition) -> bool {
        let separable = lambda
            .multiplicities()
            .entries()
            .iter()
            .all(|&(part, mult)| self.allows(part, mult));
        separable && self.shape.map_or(true, |s| s.holds(lambda))
    }
}

pub fn satisfies(lambda: &Partition, spec: &ConstraintSpec) -> bool {
    spec.satisfies(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn odd_distinct_membership() {
        let spec = ConstraintSpec::b(2, 2).unwrap();
        assert!(spec.satisfies(&p("5,1")));
        assert!(!spec.satisfies(&p("5,5")));
        assert!(!spec.satisfies(&p("4,1")));
        assert_eq!(spec, ConstraintSpec::c(2, 2).unwrap());
    }

    #[test]
    fn f_family_membership() {
        let f21 = ConstraintSpec::f(2, 1).unwrap();
        assert!(!f21.satisfies(&p("6,2,1,1,1,1")));
        assert!(f21.satisfies(&p("6,2,1")));
        let f22 = ConstraintSpec::f(2, 2).unwrap();
        assert!(f22.satisfies(&p("2,2,1")));
        assert!(!f22.satisfies(&p("2,1")));
        assert!(f22.satisfies(&p("3,3,3")));
        assert!(!f22.satisfies(&p("3^4")));
        let f32 = ConstraintSpec::f(3, 2).unwrap();
        assert!(f32.satisfies(&p("3^4")));
        assert!(!f32.satisfies(&p("3^3")));
        assert!(!f32.satisfies(&p("3^6")));
    }

    #[test]
    fn self_conjugate_clause() {
        let spec = ConstraintSpec::self_conjugate();
        assert!(spec.satisfies(&p("4,2,1,1")));
        assert!(!spec.satisfies(&p("4,2,2,1,1")));
        assert!(!spec.satisfies(&p("3,1")));
        assert!(spec.satisfies(&Partition::empty()));
    }

    #[test]
    fn residue_sets_materialize_negatives() {
        let c4 = ConstraintSpec::mod9(4).unwrap();
        let set = c4.forbidden_residues.as_ref().unwrap();
        assert_eq!(set.residues().iter().copied().collect::<Vec<_>>(), vec![0, 4, 5]);
        let s2 = ConstraintSpec::mod16_even_order();
        assert_eq!(
            s2.forbidden_residues.unwrap().residues().iter().copied().collect::<Vec<_>>(),
            vec![0, 1, 6, 7, 8, 9, 10, 15]
        );
        let s3 = ConstraintSpec::mod16_odd_order();
        assert_eq!(
            s3.forbidden_residues.unwrap().residues().iter().copied().collect::<Vec<_>>(),
            vec![0, 2, 3, 5, 8, 11, 13, 14]
        );
        assert!(ResidueSet::new(9, [9]).is_err());
        assert!(ConstraintSpec::mod9(0).is_err());
    }

    #[test]
    fn distinct_residue_class() {
        let spec = ConstraintSpec::distinct_residue(SymmetricProfile::new(2, 1).unwrap());
        assert!(spec.satisfies(&p("8,2")));
        assert!(!spec.satisfies(&p("9,1")));
        assert!(!spec.satisfies(&p("4,4,2")));
        let spec = ConstraintSpec::distinct_residue(SymmetricProfile::new(3, 4).unwrap());
        // residue 5 mod 3 = 2, smallest part >= 5
        assert!(spec.satisfies(&p("8,5")));
        assert!(!spec.satisfies(&p("8,2")));
    }

    #[test]
    fn parameter_validation() {
        assert!(ConstraintSpec::b(1, 2).is_err());
        assert!(ConstraintSpec::f(2, 0).is_err());
        assert!(ConstraintSpec::r(1).is_err());
    }

    #[test]
    fn satisfies_is_repeatable() {
        let spec = ConstraintSpec::f(3, 2).unwrap();
        let x = p("6,6,5,5,5,1");
        let first = satisfies(&x, &spec);
        assert!((0..10).all(|_| satisfies(&x, &spec) == first));
    }
}
