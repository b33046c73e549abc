//! Enumeration and counting of constrained partitions.
//!
//! [`enumerate`] is the brute-force oracle: a lazy depth-first generator that
//! yields every member of a family exactly once in lexicographically
//! decreasing order of part lists. [`count_table_dp`] is the fast path, a
//! knapsack over part sizes for separable families and a head decomposition
//! for the shape families. The two must agree wherever both run.

use std::collections::BTreeMap;
use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::constraint::{ConstraintSpec, Parity, Shape};
use crate::error::Result;
use crate::partition::Partition;
use crate::symmetric::SymmetricProfile;

#[derive(Clone, Copy, Debug)]
struct Frame {
    rem: u32,
    part: u32,
    mult: u32,
}

/// Lazy stream of the partitions of `n` satisfying a spec.
#[derive(Clone, Debug)]
pub struct Partitions {
    spec: ConstraintSpec,
    n: u32,
    stack: Vec<Frame>,
    started: bool,
    done: bool,
}

impl Partitions {
    pub fn new(n: u32, spec: ConstraintSpec) -> Self {
        Self {
            spec,
            n,
            stack: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn best_mult(&self, part: u32, upper: u32) -> Option<u32> {
        (1..=upper).rev().find(|&a| self.spec.allows(part, a))
    }

    fn upper_mult(&self, part: u32, rem: u32) -> u32 {
        let fit = rem / part;
        self.spec.multiplicity_cap(part).map_or(fit, |c| c.min(fit))
    }

    fn first_candidate(&self, rem: u32, bound: u32) -> Option<(u32, u32)> {
        (1..=rem.min(bound)).rev().find_map(|m| {
            if !self.spec.admits_part(m) {
                return None;
            }
            self.best_mult(m, self.upper_mult(m, rem)).map(|a| (m, a))
        })
    }

    fn next_candidate(&self, frame: &Frame) -> Option<(u32, u32)> {
        self.best_mult(frame.part, frame.mult - 1)
            .map(|a| (frame.part, a))
            .or_else(|| self.first_candidate(frame.rem, frame.part - 1))
    }

    fn current(&self) -> Partition {
        let mut parts = Vec::new();
        for f in &self.stack {
            parts.extend(std::iter::repeat(f.part).take(f.mult as usize));
        }
        Partition::from_sorted(parts)
    }

    fn accept(&self, lambda: &Partition) -> bool {
        self.spec.shape.map_or(true, |s| s.holds(lambda))
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        // `pending` is Some((rem, bound)) when we must descend, None when we must advance.
        let mut pending = if self.started {
            None
        } else {
            self.started = true;
            if self.n == 0 {
                self.done = true;
                let empty = Partition::empty();
                return self.accept(&empty).then_some(empty);
            }
            Some((self.n, self.n))
        };
        loop {
            let choice = match pending {
                Some((rem, bound)) => self
                    .first_candidate(rem, bound)
                    .map(|(part, mult)| Frame { rem, part, mult }),
                None => {
                    let Some(top) = self.stack.pop() else {
                        self.done = true;
                        return None;
                    };
                    self.next_candidate(&top).map(|(part, mult)| Frame { part, mult, ..top })
                }
            };
            let Some(frame) = choice else {
                pending = None;
                continue;
            };
            self.stack.push(frame);
            let left = frame.rem - frame.part * frame.mult;
            if left == 0 {
                pending = None;
                let lambda = self.current();
                if self.accept(&lambda) {
                    return Some(lambda);
                }
            } else {
                pending = Some((left, frame.part - 1));
            }
        }
    }
}

/// Every partition of `n` satisfying `spec`, lexicographically decreasing.
pub fn enumerate(n: u32, spec: &ConstraintSpec) -> Partitions {
    Partitions::new(n, spec.clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    Enumerate,
    Dp,
}

/// `|{λ ⊢ n : spec(λ)}|` via the DP where supported, enumeration otherwise.
pub fn count(n: u32, spec: &ConstraintSpec) -> BigUint {
    count_table(n, spec).pop().expect("table has n+1 entries")
}

pub fn count_with(n: u32, spec: &ConstraintSpec, method: CountMethod) -> BigUint {
    match method {
        CountMethod::Enumerate => BigUint::from(enumerate(n, spec).count()),
        CountMethod::Dp => count(n, spec),
    }
}

/// Counts for `0..=max_n`.
pub fn count_table(max_n: u32, spec: &ConstraintSpec) -> Vec<BigUint> {
    count_table_dp(max_n, spec)
        .unwrap_or_else(|| (0..=max_n).map(|n| BigUint::from(enumerate(n, spec).count())).collect())
}

/// DP counts for `0..=max_n`, or `None` when the spec mixes a shape clause
/// with separable clauses (no factorization is available then).
pub fn count_table_dp(max_n: u32, spec: &ConstraintSpec) -> Option<Vec<BigUint>> {
    match spec.shape {
        None => Some(separable_counts(max_n, spec)),
        Some(shape) if *spec == ConstraintSpec { shape: Some(shape), ..ConstraintSpec::default() } => {
            let (profile, parity) = match shape {
                Shape::SelfConjugate => (SymmetricProfile::SELF_CONJUGATE, None),
                Shape::Symmetric {
                    profile,
                    order_parity,
                } => (profile, order_parity),
            };
            Some(symmetric_counts(max_n, profile, parity))
        }
        Some(_) => None,
    }
}

fn separable_counts(max_n: u32, spec: &ConstraintSpec) -> Vec<BigUint> {
    let len = max_n as usize + 1;
    let mut table = vec![BigUint::zero(); len];
    table[0] = BigUint::one();
    for part in 1..=max_n {
        if !spec.admits_part(part) {
            continue;
        }
        let cap = spec.multiplicity_cap(part).unwrap_or(u32::MAX);
        let mults: Vec<usize> = (1..=cap.min(max_n / part))
            .filter(|&a| spec.allows(part, a))
            .map(|a| (a * part) as usize)
            .collect();
        for w in (1..len).rev() {
            for &step in &mults {
                if step > w {
                    break;
                }
                let add = table[w - step].clone();
                table[w] += add;
            }
        }
    }
    table
}

/// A (μ,γ)-symmetric partition of order `s` is determined by its head
/// `λ_i = s + x_i` with `x` a partition into at most `s` parts; its weight is
/// `μ|x| + μ s(s-1)/2 + s(γ+1)`.
fn symmetric_counts(max_n: u32, profile: SymmetricProfile, parity: Option<Parity>) -> Vec<BigUint> {
    let len = max_n as usize + 1;
    let mu = profile.mu() as usize;
    let step = profile.gamma() as usize + 1;
    let mut out = vec![BigUint::zero(); len];
    if parity != Some(Parity::Odd) {
        out[0] = BigUint::one();
    }
    // at_most[m] = partitions of m into at most s parts, updated as s grows.
    let mut at_most = vec![BigUint::zero(); len];
    at_most[0] = BigUint::one();
    let mut s = 1usize;
    loop {
        let base = mu * s * (s - 1) / 2 + s * step;
        if base > max_n as usize {
            break;
        }
        for m in s..len {
            let add = at_most[m - s].clone();
            at_most[m] += add;
        }
        if parity.map_or(true, |p| p == Parity::of(s)) {
            let mut m = 0;
            while base + mu * m < len {
                out[base + mu * m] += &at_most[m];
                m += 1;
            }
        }
        s += 1;
    }
    out
}

/// Exact counts of one family over `0..=N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub family: String,
    pub params: BTreeMap<String, i64>,
    #[serde(serialize_with = "serialize_decimal")]
    pub counts: Vec<BigUint>,
}

fn serialize_decimal<S: serde::Serializer>(v: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|c| c.to_string()))
}

impl CountTable {
    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.counts.get(n)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("count table serializes")
    }

    /// CSV with header `n,count`.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["n", "count"])?;
        for (n, c) in self.counts.iter().enumerate() {
            w.write_record([n.to_string(), c.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// `(f_e, f_o)` tables over `0..=max_n`: members of F(n,2,t) split by the parity
/// of their number of distinct even part sizes.
pub fn fe_fo_tables(max_n: u32, t: u32) -> Result<(Vec<BigUint>, Vec<BigUint>)> {
    let spec = ConstraintSpec::f(2, t)?;
    let len = max_n as usize + 1;
    let mut even = vec![BigUint::zero(); len];
    let mut odd = vec![BigUint::zero(); len];
    even[0] = BigUint::one();
    for part in 1..=max_n {
        let mults: Vec<usize> = (1..=max_n / part)
            .filter(|&a| spec.allows(part, a))
            .map(|a| (a * part) as usize)
            .collect();
        let flips = part % 2 == 0;
        for w in (1..len).rev() {
            for &step in &mults {
                if step > w {
                    break;
                }
                let (from_even, from_odd) = (even[w - step].clone(), odd[w - step].clone());
                if flips {
                    even[w] += from_odd;
                    odd[w] += from_even;
                } else {
                    even[w] += from_even;
                    odd[w] += from_odd;
                }
            }
        }
    }
    Ok((even, odd))
}

pub fn count_fe(n: u32, t: u32) -> Result<BigUint> {
    Ok(fe_fo_tables(n, t)?.0.swap_remove(n as usize))
}

pub fn count_fo(n: u32, t: u32) -> Result<BigUint> {
    Ok(fe_fo_tables(n, t)?.1.swap_remove(n as usize))
}

/// `(f_e, f_o)` at `n` by filtering the enumeration of F(n,2,t).
pub fn count_fe_fo_enumerated(n: u32, t: u32) -> Result<(usize, usize)> {
    let spec = ConstraintSpec::f(2, t)?;
    let (mut e, mut o) = (0, 0);
    for lambda in enumerate(n, &spec) {
        match Parity::of(lambda.distinct_even_part_count()) {
            Parity::Even => e += 1,
            Parity::Odd => o += 1,
        }
    }
    Ok((e, o))
}

/// `Σ_{j>=1, 2tj² <= n} (-1)^{j+1} d(n - 2tj²)` for every `n` in `0..=max_n`.
pub fn fo_from_distinct_table(max_n: u32, t: u32) -> Result<Vec<BigInt>> {
    if t < 1 {
        return Err(crate::error::invalid("t", "must be >= 1"));
    }
    let d: Vec<BigInt> = count_table(max_n, &ConstraintSpec::distinct())
        .into_iter()
        .map(BigInt::from)
        .collect();
    let out = (0..=max_n as usize)
        .map(|n| {
            let mut acc = BigInt::zero();
            let mut j = 1usize;
            while 2 * t as usize * j * j <= n {
                let term = &d[n - 2 * t as usize * j * j];
                if j % 2 == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
                j += 1;
            }
            acc
        })
        .collect();
    Ok(out)
}

pub fn fo_from_distinct(n: u32, t: u32) -> Result<BigInt> {
    Ok(fo_from_distinct_table(n, t)?.swap_remove(n as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn all_partitions_brute(n: u32) -> Vec<Vec<u32>> {
        // independent recursive generator, lexicographically decreasing
        fn go(rem: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if rem == 0 {
                out.push(prefix.clone());
                return;
            }
            for first in (1..=rem.min(max)).rev() {
                prefix.push(first);
                go(rem - first, first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn unrestricted_matches_brute_order() {
        for n in 0..=15 {
            let got: Vec<Vec<u32>> = enumerate(n, &ConstraintSpec::all()).map(|l| l.parts().to_vec()).collect();
            assert_eq!(got, all_partitions_brute(n), "n = {n}");
        }
    }

    #[test]
    fn filtered_enumeration_matches_brute_filter() {
        let specs = [
            ConstraintSpec::b(3, 2).unwrap(),
            ConstraintSpec::f(3, 2).unwrap(),
            ConstraintSpec::mod9(4).unwrap(),
            ConstraintSpec::distinct_odd(),
        ];
        for spec in &specs {
            for n in 0..=18 {
                let got: Vec<Partition> = enumerate(n, spec).collect();
                let want: Vec<Partition> = all_partitions_brute(n)
                    .into_iter()
                    .map(Partition::from_sorted)
                    .filter(|l| spec.satisfies(l))
                    .collect();
                assert_eq!(got, want, "n = {n}, spec = {spec:?}");
            }
        }
    }

    #[test]
    fn symmetric_partitions_of_ten() {
        let spec = ConstraintSpec::symmetric(SymmetricProfile::new(2, 1).unwrap());
        let got: Vec<Partition> = enumerate(10, &spec).collect();
        assert_eq!(got, vec![p("5,1^5"), p("4,2^2,1^2"), p("3^2,2^2")]);
    }

    #[test]
    fn mod16_example() {
        let got: Vec<Partition> = enumerate(6, &ConstraintSpec::mod16_even_order()).collect();
        assert_eq!(got, vec![p("4,2"), p("3,3"), p("2,2,2")]);
    }

    #[test]
    fn empty_partition_always_counts() {
        for spec in [ConstraintSpec::all(), ConstraintSpec::f(5, 3).unwrap(), ConstraintSpec::self_conjugate()] {
            assert_eq!(enumerate(0, &spec).collect::<Vec<_>>(), vec![Partition::empty()]);
            assert_eq!(count(0, &spec), BigUint::one());
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(6, &ConstraintSpec::b(3, 2).unwrap()), BigUint::from(2u32));
        assert_eq!(count(6, &ConstraintSpec::c(2, 3).unwrap()), BigUint::from(2u32));
        assert_eq!(count(12, &ConstraintSpec::self_conjugate()), BigUint::from(3u32));
        assert_eq!(count(12, &ConstraintSpec::distinct_odd()), BigUint::from(3u32));
        assert_eq!(count(100, &ConstraintSpec::all()), BigUint::from(190_569_292u64));
    }

    #[test]
    fn fo_small_cases() {
        assert_eq!(count_fo(2, 1).unwrap(), BigUint::one());
        assert_eq!(count_fe_fo_enumerated(2, 1).unwrap(), (0, 1));
        assert_eq!(fo_from_distinct(2, 1).unwrap(), BigInt::one());
        assert_eq!(fo_from_distinct(0, 1).unwrap(), BigInt::zero());
        for t in 1..=3 {
            for n in 0..2 * t {
                assert!(fo_from_distinct(n, t).unwrap().is_zero());
                assert!(count_fo(n, t).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn fe_fo_dp_matches_enumeration() {
        for t in 1..=3 {
            let (fe, fo) = fe_fo_tables(24, t).unwrap();
            for n in 0..=24 {
                let (e, o) = count_fe_fo_enumerated(n, t).unwrap();
                assert_eq!((fe[n as usize].clone(), fo[n as usize].clone()), (BigUint::from(e), BigUint::from(o)));
            }
        }
    }

    #[test]
    fn count_table_serializes() {
        let table = CountTable {
            family: "b".into(),
            params: BTreeMap::from([("p".into(), 3), ("k".into(), 2)]),
            counts: count_table(6, &ConstraintSpec::b(3, 2).unwrap()),
        };
        let json = table.to_json();
        assert_eq!(json["counts"][6], "2");
        let mut buf = Vec::new();
        table.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("n,count\n0,1\n"));
        assert!(text.ends_with("6,2\n"));
    }
}
