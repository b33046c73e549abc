//! Identity checks: each compares an enumeration path (small `n`) with a
//! series path (large `n`) and reports the smallest counterexample.

mod identities;
mod properties;

use std::sync::LazyLock;

use num_bigint::BigInt;
use rayon::prelude::*;

pub use identities::{
    verify_b_equals_c, verify_b32_dissection, verify_f_equals_r, verify_f_sum_divisible, verify_fo_formula,
    verify_regular_distinct, verify_slater, verify_symmetric_distinct, verify_symmetric_even_mod16,
    verify_symmetric_odd_mod16,
};
pub use properties::{bijection_samples, family_samples, verify_properties, verify_series_identities};

use crate::constraint::ConstraintSpec;
use crate::enumeration::enumerate;
use crate::error::{Error, Result};
use crate::family::family;
use crate::qseries::TruncatedSeries;
use crate::registry::{Params, Registry};
use crate::report::VerificationReport;

pub const DEFAULT_ORDER: usize = 300;
pub const DEFAULT_ENUM_CAP: u32 = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Series truncation order.
    pub order: usize,
    /// Largest weight checked by enumeration.
    pub enum_cap: u32,
    /// Replaces a suite's default grid when its parameters are given.
    pub overrides: Params,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            order: DEFAULT_ORDER,
            enum_cap: DEFAULT_ENUM_CAP,
            overrides: Params::default(),
        }
    }
}

impl VerifyConfig {
    pub fn with_order(order: usize) -> Self {
        Self {
            order,
            ..Self::default()
        }
    }

    /// Enumeration cap, never above the series order.
    pub(crate) fn cap(&self) -> u32 {
        self.enum_cap.min(self.order as u32)
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;

    /// One report per grid point.
    fn run(&self, cfg: &VerifyConfig) -> Result<Vec<VerificationReport>>;
}

type Runner = fn(&VerifyConfig) -> Result<Vec<VerificationReport>>;

struct GridSuite {
    name: &'static str,
    run: Runner,
}

impl Suite for GridSuite {
    fn name(&self) -> &'static str {
        self.name
    }
    fn run(&self, cfg: &VerifyConfig) -> Result<Vec<VerificationReport>> {
        (self.run)(cfg)
    }
}

/// Default grid, or the single point given by two overrides.
fn grid2(a: Option<u32>, b: Option<u32>, names: (&'static str, &'static str), default: &[(u32, u32)]) -> Result<Vec<(u32, u32)>> {
    match (a, b) {
        (None, None) => Ok(default.to_vec()),
        (Some(a), Some(b)) => Ok(vec![(a, b)]),
        (None, Some(_)) => Err(Error::MissingParameter(names.0)),
        (Some(_), None) => Err(Error::MissingParameter(names.1)),
    }
}

fn grid1(a: Option<u32>, default: &[u32]) -> Vec<u32> {
    a.map_or_else(|| default.to_vec(), |a| vec![a])
}

fn product(xs: &[u32], ys: &[u32]) -> Vec<(u32, u32)> {
    xs.iter().flat_map(|&x| ys.iter().map(move |&y| (x, y))).collect()
}

fn run_grid<T: Copy + Send + Sync>(points: Vec<T>, f: impl Fn(T) -> Result<VerificationReport> + Send + Sync) -> Result<Vec<VerificationReport>> {
    points.into_par_iter().map(f).collect()
}

pub const B_EQUALS_C_GRID: [(u32, u32); 6] = [(3, 2), (2, 3), (2, 4), (4, 2), (3, 4), (4, 6)];
pub const ALPHA_GRID: [u32; 3] = [2, 4, 6];

pub static SUITES: LazyLock<Registry<dyn Suite>> = LazyLock::new(|| {
    let mut reg: Registry<dyn Suite> = Registry::new("suite");
    register_suites(&mut reg);
    reg
});

macro_rules! suite {
    ($reg:expr, $name:literal, $summary:literal, $run:expr) => {
        $reg.register($name, $summary, |_| {
            Ok(Box::new(GridSuite {
                name: $name,
                run: $run,
            }))
        });
    };
}

fn register_suites(reg: &mut Registry<dyn Suite>) {
    suite!(reg, "regular-distinct", "3-regular distinct parts vs odd parts at most twice", |cfg| {
        Ok(vec![verify_regular_distinct(cfg)?])
    });
    suite!(reg, "b-equals-c", "b(n,p,k) = c(n,k,p) and bijectivity of phi (--p --k)", |cfg| {
        let grid = grid2(cfg.overrides.p, cfg.overrides.k, ("p", "k"), &B_EQUALS_C_GRID)?;
        run_grid(grid, |(p, k)| verify_b_equals_c(cfg, p, k))
    });
    suite!(reg, "f-equals-r", "f(n,p,t) = r(n,p) and the F -> R bijection round trip (--p --t)", |cfg| {
        let grid = grid2(cfg.overrides.p, cfg.overrides.t, ("p", "t"), &product(&[2, 3, 4, 5], &[1, 2, 3]))?;
        run_grid(grid, |(p, t)| verify_f_equals_r(cfg, p, t))
    });
    suite!(reg, "f-sum-divisible", "sum of f(n,p,t) over t <= l equals l r(n,p) (--p --ell)", |cfg| {
        let grid = grid2(cfg.overrides.p, cfg.overrides.ell, ("p", "ell"), &product(&[2, 3, 4, 5], &[1, 2, 3, 4, 5]))?;
        run_grid(grid, |(p, ell)| verify_f_sum_divisible(cfg, p, ell))
    });
    suite!(reg, "fo-formula", "odd-even-part count of F(n,2,t) as an alternating sum of d(n) (--t)", |cfg| {
        run_grid(grid1(cfg.overrides.t, &[1, 2, 3]), |t| verify_fo_formula(cfg, t))
    });
    suite!(reg, "b32-dissection", "3-dissection of b(n,3,2) and its parity links to the mod 9 families", |cfg| {
        Ok(vec![verify_b32_dissection(cfg)?])
    });
    suite!(reg, "symmetric-distinct", "(mu,gamma)-symmetric vs distinct parts = 1+gamma mod mu (--mu --gamma)", |cfg| {
        let grid = grid2(cfg.overrides.mu, cfg.overrides.gamma, ("mu", "gamma"), &product(&[2, 3, 4, 5, 6], &[0, 1, 2, 3, 4]))?;
        run_grid(grid, |(mu, gamma)| verify_symmetric_distinct(cfg, mu, gamma))
    });
    suite!(reg, "symmetric-even-mod16", "even-order symmetric partitions vs parts avoiding 0,±1,±6,±7,8 mod 16 (--alpha)", |cfg| {
        run_grid(grid1(cfg.overrides.alpha, &ALPHA_GRID), |a| verify_symmetric_even_mod16(cfg, a))
    });
    suite!(reg, "symmetric-odd-mod16", "odd-order symmetric partitions vs parts avoiding 0,±2,±3,±5,8 mod 16 (--alpha)", |cfg| {
        run_grid(grid1(cfg.overrides.alpha, &ALPHA_GRID), |a| verify_symmetric_odd_mod16(cfg, a))
    });
    suite!(reg, "slater", "the two mod 16 sum-product identities", |cfg| Ok(vec![verify_slater(cfg)?]));
    suite!(reg, "series-identities", "pentagonal, Gauss, triple product and Euler identities; every family gf vs enumeration", |cfg| {
        verify_series_identities(cfg)
    });
    suite!(reg, "properties", "involutions, shape equivalences, bijection invariants, DP vs enumeration", |cfg| {
        verify_properties(cfg)
    });
}

pub fn suite(name: &str) -> Result<Box<dyn Suite>> {
    SUITES.build(name, &Params::default())
}

/// Every registered suite at its default grid, in registry order.
pub fn verify_all(cfg: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    let names: Vec<&'static str> = SUITES.names().collect();
    let per_suite: Vec<Vec<VerificationReport>> = names
        .into_par_iter()
        .map(|name| suite(name)?.run(cfg))
        .collect::<Result<_>>()?;
    Ok(per_suite.into_iter().flatten().collect())
}

pub(crate) fn enumerated(n: u32, spec: &ConstraintSpec) -> BigInt {
    BigInt::from(enumerate(n, spec).count())
}

pub(crate) fn family_gf(name: &str, params: Params, order: usize) -> Result<TruncatedSeries> {
    Ok(family(name, &params)?.generating_function(order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_lists_every_suite() {
        let names: Vec<_> = SUITES.names().collect();
        assert_eq!(names.len(), 12);
        assert!(suite("nope").is_err());
    }

    #[test]
    fn partial_overrides_are_rejected() {
        let cfg = VerifyConfig {
            overrides: Params {
                p: Some(3),
                ..Params::default()
            },
            ..VerifyConfig::with_order(20)
        };
        assert_eq!(suite("b-equals-c").unwrap().run(&cfg).err(), Some(Error::MissingParameter("k")));
    }

    #[test]
    fn small_order_everything_passes() {
        let cfg = VerifyConfig {
            order: 40,
            enum_cap: 14,
            overrides: Params::default(),
        };
        let reports = verify_all(&cfg).unwrap();
        for r in &reports {
            assert!(r.passed(), "{} {} {:?}", r.identity, r.param_string(), r.first_failure);
        }
        let again = verify_all(&cfg).unwrap();
        assert!(reports.iter().zip(&again).all(|(a, b)| a.same_outcome(b)));
    }
}
