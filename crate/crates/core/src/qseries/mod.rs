//! Exact truncated power series in `q` whose coefficients are integer
//! polynomials in an auxiliary variable `t`.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of `q^0..=q^N`
//! exactly; anything above `q^N` is dropped. Binary operations combine at the
//! smaller order.

mod product;
mod theta;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{invalid, Result};

pub use product::{pochhammer, Factor, ProductSpec};
pub use theta::{
    euler_sum_product_check, jacobi_triple, jacobi_triple_product, theta_gauss, theta_pentagonal, theta_product,
    theta_sum,
};

/// Integer polynomial in `t`; index is the `t`-degree, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TPoly(Vec<BigInt>);

impl TPoly {
    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); degree + 1];
        v[degree] = c;
        Self(v)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self(coeffs);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Coefficient of `t^d`.
    pub fn coeff(&self, d: usize) -> BigInt {
        self.0.get(d).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    /// `self += sign · t^shift · other`
    fn add_shifted(&mut self, other: &TPoly, negate: bool, shift: usize) {
        if other.is_zero() {
            return;
        }
        let need = other.0.len() + shift;
        if self.0.len() < need {
            self.0.resize(need, BigInt::zero());
        }
        for (d, c) in other.0.iter().enumerate() {
            if negate {
                self.0[d + shift] -= c;
            } else {
                self.0[d + shift] += c;
            }
        }
        self.trim();
    }

    fn mul(&self, other: &TPoly) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(out)
    }

    fn truncate(&mut self, max_degree: usize) {
        self.0.truncate(max_degree + 1);
        self.trim();
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if d == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Power series in `q` known exactly through `q^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<TPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![TPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, 0, order)
    }

    /// `c · t^t_degree · q^q_exp`, dropped when `q_exp > order`.
    pub fn monomial(c: impl Into<BigInt>, t_degree: usize, q_exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if q_exp <= order {
            s.coeffs[q_exp] = TPoly::monomial(c, t_degree);
        }
        s
    }

    /// Univariate series from integer coefficients; entries past `order` are ignored.
    pub fn from_ints<I, T>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (n, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[n] = TPoly::constant(c);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The `t^0` part of the coefficient of `q^n`.
    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).map(|p| p.coeff(0)).unwrap_or_default()
    }

    pub fn tpoly(&self, n: usize) -> &TPoly {
        &self.coeffs[n]
    }

    /// `t^0` coefficients of `q^0..=q^order`.
    pub fn int_coeffs(&self) -> Vec<BigInt> {
        (0..=self.order).map(|n| self.coeff(n)).collect()
    }

    pub fn is_univariate(&self) -> bool {
        self.coeffs.iter().all(|p| p.degree().map_or(true, |d| d == 0))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(TPoly::is_zero)
    }

    /// Drops coefficients above `q^order`.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Drops every `t^d` with `d > max_degree`.
    pub fn truncate_t(&self, max_degree: usize) -> Self {
        let mut out = self.clone();
        for p in &mut out.coeffs {
            p.truncate(max_degree);
        }
        out
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order);
        for n in k..=self.order {
            out.coeffs[n] = self.coeffs[n - k].clone();
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let factor = TPoly::constant(c.clone());
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.mul(&factor)).collect(),
        }
    }

    /// In place: `self *= 1 + sign · t^t_power · q^e`.
    pub fn mul_binomial(&mut self, negative: bool, t_power: usize, e: usize) {
        if e > self.order {
            return;
        }
        if e == 0 {
            for p in &mut self.coeffs {
                let copy = p.clone();
                p.add_shifted(&copy, negative, t_power);
            }
            return;
        }
        for n in (e..=self.order).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0].add_shifted(&lo[n - e], negative, t_power);
        }
    }

    /// In place: `self /= 1 + sign · t^t_power · q^e`, for `e >= 1`.
    pub fn div_binomial(&mut self, negative: bool, t_power: usize, e: usize) {
        assert!(e >= 1, "division by a factor with constant term other than 1");
        if e > self.order {
            return;
        }
        // c[n] -= sign t^c c[n-e], ascending so c[n-e] is already divided
        for n in e..=self.order {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0].add_shifted(&lo[n - e], !negative, t_power);
        }
    }

    /// In place: `self *= 1 + q^e + q^(2e) + ... + q^((count-1)e)`.
    pub fn mul_geometric_block(&mut self, e: usize, count: usize) {
        assert!(e >= 1);
        if count == 0 {
            *self = Self::zero(self.order);
            return;
        }
        self.mul_binomial(true, 0, e * count);
        self.div_binomial(true, 0, e);
    }

    /// `Σ_n coeff(d·n + r) q^n`, known through `q^((N - r)/d)`.
    pub fn dissect(&self, d: usize, r: usize) -> Result<Self> {
        if d == 0 {
            return Err(invalid("modulus", "must be positive"));
        }
        if r >= d {
            return Err(invalid("residue", format!("must lie in [0, {d}), got {r}")));
        }
        if r > self.order {
            return Err(invalid("residue", format!("{r} exceeds the truncation order {}", self.order)));
        }
        let order = (self.order - r) / d;
        Ok(Self {
            order,
            coeffs: (0..=order).map(|n| self.coeffs[d * n + r].clone()).collect(),
        })
    }

    /// Inverse of [`dissect`](Self::dissect): `Σ_n coeff(n) q^(d·n + r)` at `order`.
    pub fn inflate(&self, d: usize, r: usize, order: usize) -> Self {
        let mut out = Self::zero(order);
        for (n, c) in self.coeffs.iter().enumerate() {
            let at = d * n + r;
            if at > order {
                break;
            }
            out.coeffs[at] = c.clone();
        }
        out
    }

    /// Smallest `n` at which the two series differ, comparing through the smaller order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let order = self.order.min(other.order);
        (0..=order).find(|&n| self.coeffs[n] != other.coeffs[n])
    }

    /// `c0 + c1*q + c2*q^2 + ...` through `q^upto`, zero terms omitted.
    pub fn format_terms(&self, upto: usize) -> String {
        let upto = upto.min(self.order);
        let mut out = String::new();
        for n in 0..=upto {
            let c = &self.coeffs[n];
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let compound = c.0.iter().filter(|x| !x.is_zero()).count() > 1;
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, if compound { format!("({text})") } else { text }),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let q = match n {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{n}"),
            };
            if n == 0 {
                out.push_str(&body);
            } else if body == "1" {
                out.push_str(&q);
            } else {
                out.push_str(&format!("{body}*{q}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out.push_str(&format!(" + O(q^{})", self.order + 1));
        out
    }

    /// `{"order": N, "coeffs": ["...", ...]}` with decimal-string coefficients.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Wire {
            order: usize,
            coeffs: Vec<String>,
        }
        serde_json::to_value(Wire {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        })
        .expect("series serializes")
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_terms(self.order))
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let mut out = self.truncate(rhs.order);
        for (n, c) in out.coeffs.iter_mut().enumerate() {
            c.add_shifted(&rhs.coeffs[n], false, 0);
        }
        out
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let mut out = self.truncate(rhs.order);
        for (n, c) in out.coeffs.iter_mut().enumerate() {
            c.add_shifted(&rhs.coeffs[n], true, 0);
        }
        out
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        &TruncatedSeries::zero(self.order) - self
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let mut out = TruncatedSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let prod = self.coeffs[i].mul(&rhs.coeffs[j]);
                out.coeffs[i + j].add_shifted(&prod, false, 0);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        -&self
    }
}
