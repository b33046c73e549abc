//! Glaisher merge/split, the map φ from B(n,p,k) onto C(n,k,p), and the
//! bijection between F(n,p,t) and R(n,p).
//!
//! For coprime `(p,k)`, φ is the normal form of the rewriting system
//! {merge `p` equal parts `a` into `p·a`; split a part `k·a` into `k` parts `a`}.
//! Merges fire before splits and the largest eligible part size acts first.
//! Its inverse is the same system with the roles of `p` and `k` swapped.
//!
//! For `gcd(p,k) > 1` the rewriting can cycle, so φ pairs the `i`-th member of
//! B(n,p,k) with the `i`-th member of C(n,k,p), both in enumeration order.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, Mutex};

use num_integer::Integer;
use serde::Serialize;

use crate::constraint::ConstraintSpec;
use crate::enumeration::enumerate;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Rewriting budget per unit of weight.
pub const STEP_BUDGET_PER_UNIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub rule: String,
    pub before: Partition,
    pub after: Partition,
}

/// Audit trail of a bijection call.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BijectionTrace {
    pub steps: Vec<TraceStep>,
}

impl BijectionTrace {
    pub fn push(&mut self, rule: impl Into<String>, before: Partition, after: Partition) {
        debug_assert_eq!(before.weight(), after.weight());
        self.steps.push(TraceStep {
            rule: rule.into(),
            before,
            after,
        });
    }

    /// Every step preserves weight and each step starts where the previous ended.
    pub fn is_consistent(&self) -> bool {
        self.steps.iter().all(|s| s.before.weight() == s.after.weight())
            && self.steps.windows(2).all(|w| w[0].after == w[1].before)
    }

    /// One JSON object per line: `{"rule": ..., "before": ..., "after": ...}`.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            out.push_str(&serde_json::to_string(step).expect("trace step serializes"));
            out.push('\n');
        }
        out
    }
}

fn check_arity(name: &'static str, value: u32) -> Result<()> {
    if value < 2 {
        return Err(crate::error::invalid(name, format!("must be >= 2, got {value}")));
    }
    Ok(())
}

struct Rewriter {
    merge_arity: Option<u32>,
    split_divisor: Option<u32>,
}

impl Rewriter {
    fn run(&self, lambda: &Partition, mut trace: Option<&mut BijectionTrace>) -> Result<Partition> {
        let mut mults: BTreeMap<u32, u32> = BTreeMap::new();
        for &(size, m) in lambda.multiplicities().entries() {
            mults.insert(size, m);
        }
        let budget = STEP_BUDGET_PER_UNIT * lambda.weight() as usize;
        let mut steps = 0usize;
        let mut current = lambda.clone();
        loop {
            let merge = self.merge_arity.and_then(|arity| {
                mults
                    .iter()
                    .rev()
                    .find(|&(_, &m)| m >= arity)
                    .map(|(&size, _)| (size, arity))
            });
            let rule = if let Some((size, arity)) = merge {
                bump(&mut mults, size, -(arity as i64));
                bump(&mut mults, size * arity, 1);
                "merge"
            } else if let Some((size, d)) = self.split_divisor.and_then(|d| {
                mults.keys().rev().find(|&&s| s % d == 0).map(|&s| (s, d))
            }) {
                bump(&mut mults, size, -1);
                bump(&mut mults, size / d, d as i64);
                "split"
            } else {
                break;
            };
            steps += 1;
            if steps > budget {
                return Err(Error::StepBudgetExceeded {
                    partition: lambda.to_string(),
                    budget,
                });
            }
            if let Some(trace) = trace.as_deref_mut() {
                let next = Partition::from_multiplicities(mults.iter().map(|(&s, &m)| (s, m)));
                trace.push(rule, current, next.clone());
                current = next;
            }
        }
        let out = Partition::from_multiplicities(mults.into_iter());
        debug_assert_eq!(out.weight(), lambda.weight());
        Ok(out)
    }
}

fn bump(mults: &mut BTreeMap<u32, u32>, size: u32, delta: i64) {
    let entry = mults.entry(size).or_insert(0);
    let next = *entry as i64 + delta;
    debug_assert!(next >= 0);
    if next == 0 {
        mults.remove(&size);
    } else {
        *entry = next as u32;
    }
}

/// Merges `k` equal parts into one until every multiplicity is below `k`.
pub fn glaisher_merge(lambda: &Partition, k: u32) -> Result<Partition> {
    glaisher_merge_traced(lambda, k, None)
}

pub fn glaisher_merge_traced(lambda: &Partition, k: u32, trace: Option<&mut BijectionTrace>) -> Result<Partition> {
    check_arity("k", k)?;
    Rewriter {
        merge_arity: Some(k),
        split_divisor: None,
    }
    .run(lambda, trace)
}

/// Splits each part `k·a` into `k` parts `a` until no part is divisible by `k`.
pub fn glaisher_split(lambda: &Partition, k: u32) -> Result<Partition> {
    glaisher_split_traced(lambda, k, None)
}

pub fn glaisher_split_traced(lambda: &Partition, k: u32, trace: Option<&mut BijectionTrace>) -> Result<Partition> {
    check_arity("k", k)?;
    Rewriter {
        merge_arity: None,
        split_divisor: Some(k),
    }
    .run(lambda, trace)
}

struct RankTable {
    forward: HashMap<Partition, Partition>,
    backward: HashMap<Partition, Partition>,
}

type RankKey = (u32, u32, u32);

static RANK_TABLES: LazyLock<Mutex<HashMap<RankKey, Arc<RankTable>>>> = LazyLock::new(Default::default);

fn rank_table(n: u32, p: u32, k: u32) -> Arc<RankTable> {
    if let Some(t) = RANK_TABLES.lock().expect("rank table lock").get(&(n, p, k)) {
        return Arc::clone(t);
    }
    let b: Vec<Partition> = enumerate(n, &ConstraintSpec::b(p, k).expect("validated")).collect();
    let c: Vec<Partition> = enumerate(n, &ConstraintSpec::c(k, p).expect("validated")).collect();
    assert_eq!(
        b.len(),
        c.len(),
        "b({n},{p},{k}) != c({n},{k},{p}); the rank bijection is undefined"
    );
    let forward = b.iter().cloned().zip(c.iter().cloned()).collect();
    let backward = c.into_iter().zip(b).collect();
    let table = Arc::new(RankTable { forward, backward });
    RANK_TABLES
        .lock()
        .expect("rank table lock")
        .entry((n, p, k))
        .or_insert(table)
        .clone()
}

pub(crate) fn require(spec: ConstraintSpec, lambda: &Partition, map: &'static str, what: &str) -> Result<()> {
    if spec.satisfies(lambda) {
        Ok(())
    } else {
        Err(Error::OutsideDomain {
            map,
            partition: lambda.to_string(),
            reason: format!("not in {what}"),
        })
    }
}

/// φ: B(n,p,k) → C(n,k,p), weight preserving and bijective per weight.
pub fn phi(lambda: &Partition, p: u32, k: u32) -> Result<Partition> {
    phi_traced(lambda, p, k, None)
}

pub fn phi_traced(lambda: &Partition, p: u32, k: u32, trace: Option<&mut BijectionTrace>) -> Result<Partition> {
    require(ConstraintSpec::b(p, k)?, lambda, "phi", &format!("B(n,{p},{k})"))?;
    let out = if p.gcd(&k) == 1 {
        Rewriter {
            merge_arity: Some(p),
            split_divisor: Some(k),
        }
        .run(lambda, trace)?
    } else {
        let out = rank_table(lambda.weight(), p, k).forward[lambda].clone();
        if let Some(trace) = trace {
            trace.push("rank", lambda.clone(), out.clone());
        }
        out
    };
    debug_assert_eq!(out.weight(), lambda.weight());
    Ok(out)
}

/// φ⁻¹: C(n,k,p) → B(n,p,k).
pub fn phi_inverse(mu: &Partition, p: u32, k: u32) -> Result<Partition> {
    phi_inverse_traced(mu, p, k, None)
}

pub fn phi_inverse_traced(mu: &Partition, p: u32, k: u32, trace: Option<&mut BijectionTrace>) -> Result<Partition> {
    require(ConstraintSpec::c(k, p)?, mu, "phi_inverse", &format!("C(n,{k},{p})"))?;
    let out = if p.gcd(&k) == 1 {
        Rewriter {
            merge_arity: Some(k),
            split_divisor: Some(p),
        }
        .run(mu, trace)?
    } else {
        let out = rank_table(mu.weight(), p, k).backward[mu].clone();
        if let Some(trace) = trace {
            trace.push("rank", mu.clone(), out.clone());
        }
        out
    };
    debug_assert_eq!(out.weight(), mu.weight());
    Ok(out)
}

/// F(n,p,t) → R(n,p): φ_{p,pt} on the parts not divisible by `p`, and each
/// block `a^(j·t)` with `p | a` becomes `(t·a)^j`.
pub fn f_to_r(lambda: &Partition, p: u32, t: u32) -> Result<Partition> {
    f_to_r_traced(lambda, p, t, None)
}

pub fn f_to_r_traced(lambda: &Partition, p: u32, t: u32, trace: Option<&mut BijectionTrace>) -> Result<Partition> {
    require(ConstraintSpec::f(p, t)?, lambda, "f_to_r", &format!("F(n,{p},{t})"))?;
    let (multiples, rest) = lambda.split_by(|a| a % p == 0);
    let mapped = phi(&rest, p, p * t)?;
    let scaled = Partition::from_multiplicities(
        multiples
            .multiplicities()
            .entries()
            .iter()
            .map(|&(a, m)| (t * a, m / t)),
    );
    let mid = mapped.union(&multiples);
    let out = mapped.union(&scaled);
    if let Some(trace) = trace {
        trace.push("phi", lambda.clone(), mid.clone());
        trace.push("scale", mid, out.clone());
    }
    debug_assert_eq!(out.weight(), lambda.weight());
    debug_assert!(ConstraintSpec::r(p)?.satisfies(&out));
    Ok(out)
}

/// R(n,p) → F(n,p,t), the inverse of [`f_to_r`]: parts `α ≡ 0 (mod pt)` with
/// multiplicity `m` become `(α/t)^(m·t)`, the rest go through φ_{p,pt}⁻¹.
pub fn r_to_f(mu: &Partition, p: u32, t: u32) -> Result<Partition> {
    r_to_f_traced(mu, p, t, None)
}

pub fn r_to_f_traced(mu: &Partition, p: u32, t: u32, trace: Option<&mut BijectionTrace>) -> Result<Partition> {
    require(ConstraintSpec::r(p)?, mu, "r_to_f", &format!("R(n,{p})"))?;
    if t < 1 {
        return Err(crate::error::invalid("t", "must be >= 1"));
    }
    let (multiples, rest) = mu.split_by(|a| a % (p * t) == 0);
    let mapped = phi_inverse(&rest, p, p * t)?;
    let scaled = Partition::from_multiplicities(
        multiples
            .multiplicities()
            .entries()
            .iter()
            .map(|&(a, m)| (a / t, m * t)),
    );
    let mid = mapped.union(&multiples);
    let out = mapped.union(&scaled);
    if let Some(trace) = trace {
        trace.push("phi-inverse", mu.clone(), mid.clone());
        trace.push("unscale", mid, out.clone());
    }
    debug_assert_eq!(out.weight(), mu.weight());
    debug_assert!(ConstraintSpec::f(p, t)?.satisfies(&out));
    Ok(out)
}
