//! (μ,γ)-symmetric partitions.
//!
//! A partition of order `s` is (μ,γ)-symmetric when everything after its
//! first `s` parts (the head) is the tail prescribed by the head:
//!
//! ```text
//! s^((μ-1)(λ_s - s) + γ), (s-1)^((μ-1)(λ_{s-1} - λ_s + 1) - 1), ..., 1^((μ-1)(λ_1 - λ_2 + 1) - 1)
//! ```
//!
//! The head alone determines the partition, and the map
//! `λ_i ↦ μ(λ_i - i) + 1 + γ` sends it onto a partition into distinct parts
//! congruent to `1+γ (mod μ)`, all at least `γ+1`. Profile (2,0) is the
//! self-conjugate case and the map is then Sylvester's.
//!
//! A head with `λ_s = s` is admitted; its size-`s` tail block then has
//! exactly `γ` copies. The empty partition is symmetric for every profile.

use std::io::Write;

use serde::Serialize;

use crate::constraint::{ConstraintSpec, Parity};
use crate::enumeration::enumerate;
use crate::error::{invalid, Error, Result};
use crate::partition::{MultiplicityView, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SymmetricProfile {
    mu: u32,
    gamma: u32,
}

impl SymmetricProfile {
    /// Profile (2,0), whose symmetric partitions are the self-conjugate ones.
    pub const SELF_CONJUGATE: SymmetricProfile = SymmetricProfile { mu: 2, gamma: 0 };

    pub fn new(mu: u32, gamma: u32) -> Result<Self> {
        if mu < 2 {
            return Err(invalid("mu", format!("must be >= 2, got {mu}")));
        }
        Ok(Self { mu, gamma })
    }

    pub fn mu(&self) -> u32 {
        self.mu
    }

    pub fn gamma(&self) -> u32 {
        self.gamma
    }

    /// Residue class `1+γ (mod μ)` of the distinct-parts side.
    pub fn residue(&self) -> u32 {
        (1 + self.gamma) % self.mu
    }
}

/// A partition cut at its order: the head `λ_1..λ_s` and the remaining parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeadTail {
    pub head: Vec<u32>,
    pub tail: MultiplicityView,
}

impl HeadTail {
    pub fn of(lambda: &Partition) -> Self {
        let s = lambda.order();
        let (head, rest) = lambda.parts().split_at(s);
        Self {
            head: head.to_vec(),
            tail: Partition::from_sorted(rest.to_vec()).multiplicities(),
        }
    }

    pub fn join(&self) -> Partition {
        Partition::from_sorted(self.head.clone()).union(&self.tail.expand())
    }
}

fn check_head(head: &[u32], map: &'static str) -> Result<()> {
    let reject = |reason: String| Error::OutsideDomain {
        map,
        partition: Partition::from_unsorted(head.to_vec()).to_string(),
        reason,
    };
    if head.is_empty() {
        return Err(reject("head must have at least one part".into()));
    }
    if head.windows(2).any(|w| w[0] < w[1]) {
        return Err(reject("head must be weakly decreasing".into()));
    }
    let s = head.len() as u32;
    if head[head.len() - 1] < s {
        return Err(reject(format!("last head part must be at least the head length {s}")));
    }
    Ok(())
}

/// The tail a head of length `s` prescribes. Zero multiplicities are absent.
pub fn prescribed_tail(head: &[u32], profile: SymmetricProfile) -> Result<MultiplicityView> {
    check_head(head, "prescribed_tail")?;
    Ok(tail_unchecked(head, profile))
}

fn tail_unchecked(head: &[u32], profile: SymmetricProfile) -> MultiplicityView {
    let s = head.len();
    let m1 = profile.mu - 1;
    let mut entries = Vec::with_capacity(s);
    entries.push((s as u32, m1 * (head[s - 1] - s as u32) + profile.gamma));
    for j in (1..s).rev() {
        // part size j sits between head parts λ_j and λ_{j+1}
        entries.push((j as u32, m1 * (head[j - 1] - head[j] + 1) - 1));
    }
    MultiplicityView::new(entries)
}

pub fn is_symmetric(lambda: &Partition, profile: SymmetricProfile) -> bool {
    if lambda.is_empty() {
        return true;
    }
    let split = HeadTail::of(lambda);
    split.tail == tail_unchecked(&split.head, profile)
}

/// `(β_1..β_s)` with `β_i = μ(λ_i - i) + 1 + γ`.
pub fn sylvester_general(lambda: &Partition, profile: SymmetricProfile) -> Result<Partition> {
    if !is_symmetric(lambda, profile) {
        return Err(Error::OutsideDomain {
            map: "sylvester_general",
            partition: lambda.to_string(),
            reason: format!("not ({},{})-symmetric", profile.mu, profile.gamma),
        });
    }
    let beta: Vec<u32> = lambda.parts()[..lambda.order()]
        .iter()
        .enumerate()
        .map(|(i, &part)| profile.mu * (part - (i as u32 + 1)) + 1 + profile.gamma)
        .collect();
    let beta = Partition::from_sorted(beta);
    debug_assert_eq!(beta.weight(), lambda.weight());
    Ok(beta)
}

pub fn sylvester_general_inverse(beta: &Partition, profile: SymmetricProfile) -> Result<Partition> {
    let reject = |reason: String| Error::OutsideDomain {
        map: "sylvester_general_inverse",
        partition: beta.to_string(),
        reason,
    };
    if !beta.is_distinct() {
        return Err(reject("parts must be distinct".into()));
    }
    let floor = profile.gamma + 1;
    if let Some(&bad) = beta.parts().iter().find(|&&b| b < floor) {
        return Err(reject(format!("part {bad} is below {floor}")));
    }
    if let Some(&bad) = beta.parts().iter().find(|&&b| (b - floor) % profile.mu != 0) {
        return Err(reject(format!("part {bad} is not congruent to {floor} mod {}", profile.mu)));
    }
    if beta.is_empty() {
        return Ok(Partition::empty());
    }
    let head: Vec<u32> = beta
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &b)| i as u32 + 1 + (b - floor) / profile.mu)
        .collect();
    let lambda = Partition::from_sorted(head.clone()).union(&tail_unchecked(&head, profile).expand());
    debug_assert_eq!(lambda.weight(), beta.weight());
    debug_assert_eq!(lambda.order(), head.len());
    Ok(lambda)
}

/// All (μ,γ)-symmetric partitions of `n`, produced by mapping the
/// distinct-parts side through the inverse bijection.
pub fn generate_symmetric(n: u32, profile: SymmetricProfile) -> impl Iterator<Item = Partition> {
    enumerate(n, &ConstraintSpec::distinct_residue(profile))
        .map(move |beta| sylvester_general_inverse(&beta, profile).expect("distinct-residue partitions are in the domain"))
}

/// Brute-force oracle: every partition of `n` filtered by [`is_symmetric`].
pub fn generate_symmetric_filtered(n: u32, profile: SymmetricProfile) -> impl Iterator<Item = Partition> {
    enumerate(n, &ConstraintSpec::all()).filter(move |l| is_symmetric(l, profile))
}

/// `(g_e, g_o)`: symmetric partitions of `n` by parity of their order.
pub fn split_by_order_parity(n: u32, profile: SymmetricProfile) -> (usize, usize) {
    let (mut even, mut odd) = (0, 0);
    for lambda in generate_symmetric(n, profile) {
        match Parity::of(lambda.order()) {
            Parity::Even => even += 1,
            Parity::Odd => odd += 1,
        }
    }
    (even, odd)
}

/// Distinct-parts partition paired with its symmetric image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrespondenceTable {
    pub n: u32,
    pub profile: SymmetricProfile,
    pub rows: Vec<(Partition, Partition)>,
}

impl CorrespondenceTable {
    pub fn build(n: u32, profile: SymmetricProfile) -> Self {
        let rows = enumerate(n, &ConstraintSpec::distinct_residue(profile))
            .map(|beta| {
                let lambda = sylvester_general_inverse(&beta, profile).expect("in domain");
                (beta, lambda)
            })
            .collect();
        Self { n, profile, rows }
    }

    /// JSON array of `[distinct, symmetric]` pairs in shorthand notation.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.rows
                .iter()
                .map(|(b, l)| serde_json::json!([b.to_shorthand(), l.to_shorthand()]))
                .collect(),
        )
    }

    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["distinct", "symmetric"])?;
        for (b, l) in &self.rows {
            w.write_record([b.to_shorthand(), l.to_shorthand()])?;
        }
        w.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn prof(mu: u32, gamma: u32) -> SymmetricProfile {
        SymmetricProfile::new(mu, gamma).unwrap()
    }

    #[test]
    fn tails_of_the_weight_ten_examples() {
        assert_eq!(prescribed_tail(&[5], prof(2, 1)).unwrap().entries(), &[(1, 5)]);
        assert_eq!(prescribed_tail(&[4, 2], prof(2, 1)).unwrap().entries(), &[(2, 1), (1, 2)]);
        assert_eq!(prescribed_tail(&[3, 3], prof(2, 1)).unwrap().entries(), &[(2, 2)]);
        assert!(prescribed_tail(&[3, 1], prof(2, 1)).is_err());
        assert!(prescribed_tail(&[], prof(2, 1)).is_err());
        assert!(prescribed_tail(&[2, 3], prof(2, 1)).is_err());
        // a square head with profile (2,0) has an empty tail
        assert!(prescribed_tail(&[2, 2], prof(2, 0)).unwrap().is_empty());
        assert_eq!(prescribed_tail(&[3, 2], prof(2, 0)).unwrap().entries(), &[(1, 1)]);
    }

    #[test]
    fn membership() {
        assert!(is_symmetric(&p("4,2,2,1,1"), prof(2, 1)));
        assert!(!is_symmetric(&p("4,2,2,1,1"), prof(2, 0)));
        assert!(is_symmetric(&p("4,2,2,1,1"), prof(2, 0)) == p("4,2,2,1,1").is_self_conjugate());
        assert!(is_symmetric(&Partition::empty(), prof(5, 3)));
        assert!(is_symmetric(&p("3,3,3"), prof(2, 0)));
    }

    #[test]
    fn table_for_ten() {
        let pairs = [("10", "5,1^5"), ("8,2", "4,2^2,1^2"), ("6,4", "3^2,2^2")];
        for (beta, lambda) in pairs {
            assert_eq!(sylvester_general(&p(lambda), prof(2, 1)).unwrap(), p(beta));
            assert_eq!(sylvester_general_inverse(&p(beta), prof(2, 1)).unwrap(), p(lambda));
        }
        let table = CorrespondenceTable::build(10, prof(2, 1));
        assert_eq!(
            table.to_json(),
            serde_json::json!([["10", "5,1^5"], ["8,2", "4,2^2,1^2"], ["6,4", "3^2,2^2"]])
        );
    }

    #[test]
    fn inverse_rejects_bad_input() {
        assert!(sylvester_general_inverse(&p("8,8"), prof(2, 1)).is_err());
        assert!(sylvester_general_inverse(&p("9,2"), prof(2, 1)).is_err());
        assert!(sylvester_general_inverse(&p("7,1"), prof(3, 3)).is_err());
        assert_eq!(sylvester_general_inverse(&Partition::empty(), prof(3, 1)).unwrap(), Partition::empty());
        assert!(sylvester_general(&p("4,2,2,1,1"), prof(2, 0)).is_err());
    }

    #[test]
    fn order_parity_split() {
        assert_eq!(split_by_order_parity(0, prof(2, 0)), (1, 0));
        let even: Vec<Partition> = generate_symmetric(12, prof(2, 0)).filter(|l| l.order() % 2 == 0).collect();
        let mut even = even;
        even.sort_by(|a, b| b.cmp(a));
        assert_eq!(even, vec![p("6,2,1^4"), p("5,3,2,1,1"), p("4,4,2,2")]);
        assert_eq!(split_by_order_parity(12, prof(2, 0)).0, 3);
    }

    #[test]
    fn generators_agree() {
        for mu in 2..=4 {
            for gamma in 0..=2 {
                for n in 0..=20 {
                    let mut a: Vec<Partition> = generate_symmetric(n, prof(mu, gamma)).collect();
                    a.sort();
                    let mut b: Vec<Partition> = generate_symmetric_filtered(n, prof(mu, gamma)).collect();
                    b.sort();
                    assert_eq!(a, b, "n = {n}, mu = {mu}, gamma = {gamma}");
                }
            }
        }
    }

    #[test]
    fn head_tail_roundtrip() {
        let x = p("4,2,2,1,1");
        let ht = HeadTail::of(&x);
        assert_eq!(ht.head, vec![4, 2]);
        assert_eq!(ht.join(), x);
    }
}
