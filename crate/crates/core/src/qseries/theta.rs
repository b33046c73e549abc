//! Theta-type sums and the classical sum/product identities used as engine
//! self-tests.

use num_bigint::BigInt;

use super::{pochhammer, Factor, ProductSpec, TruncatedSeries};
use crate::error::{Error, Result};
use crate::report::{ReportBuilder, VerificationReport};

fn signed(n: i64, negative: bool) -> i64 {
    if negative && n.rem_euclid(2) == 1 {
        -1
    } else {
        1
    }
}

/// `1 + Σ_{n>=1} (-1)^n (q^(n(3n-1)/2) + q^(n(3n+1)/2))`
pub fn theta_pentagonal(order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(order);
    let mut n = 1usize;
    while n * (3 * n - 1) / 2 <= order {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        out = &out + &TruncatedSeries::monomial(sign, 0, n * (3 * n - 1) / 2, order);
        out = &out + &TruncatedSeries::monomial(sign, 0, n * (3 * n + 1) / 2, order);
        n += 1;
    }
    out
}

/// `Σ_{n∈Z} (-1)^n q^(n²)`
pub fn theta_gauss(order: usize) -> TruncatedSeries {
    let mut coeffs = vec![BigInt::from(0); order + 1];
    coeffs[0] = BigInt::from(1);
    let mut n = 1usize;
    while n * n <= order {
        coeffs[n * n] += if n % 2 == 0 { 2 } else { -2 };
        n += 1;
    }
    TruncatedSeries::from_ints(coeffs, order)
}

/// `Σ_{n∈Z} (±1)^n q^(base·n(n+1)/2 + shift·n)`, i.e. the triple-product sum
/// with `q → q^base` and `w = ±q^shift`. Rejects specializations that put a
/// negative power of `q` in the sum.
pub fn theta_sum(base: u32, shift: i64, negative: bool, order: usize) -> Result<TruncatedSeries> {
    if base == 0 {
        return Err(crate::error::invalid("base", "must be positive"));
    }
    let b = base as i64;
    let exponent = |n: i64| b * n * (n + 1) / 2 + shift * n;
    // the exponent is convex in n; its integer minimum sits next to the real vertex
    let vertex = -(2 * shift + b) as f64 / (2 * b) as f64;
    let center = vertex.round() as i64;
    let min = (center - 2..=center + 2).map(exponent).min().expect("nonempty");
    if min < 0 {
        return Err(Error::NegativeExponent(min));
    }
    let mut coeffs = vec![BigInt::from(0); order + 1];
    let mut n = center;
    while exponent(n) <= order as i64 || n >= center && n - center < 2 {
        let e = exponent(n);
        if e <= order as i64 {
            coeffs[e as usize] += signed(n, negative);
        }
        n += 1;
    }
    n = center - 1;
    while exponent(n) <= order as i64 || center - n < 2 {
        let e = exponent(n);
        if e <= order as i64 {
            coeffs[e as usize] += signed(n, negative);
        }
        n -= 1;
    }
    Ok(TruncatedSeries::from_ints(coeffs, order))
}

/// Product side of [`theta_sum`]:
/// `(q^b; q^b)_∞ (∓q^(b+c); q^b)_∞ (∓q^(-c); q^b)_∞`.
pub fn theta_product(base: u32, shift: i64, negative: bool, order: usize) -> Result<TruncatedSeries> {
    let b = base as i64;
    if base == 0 {
        return Err(crate::error::invalid("base", "must be positive"));
    }
    if shift > 0 || b + shift < 0 {
        return Err(Error::NegativeExponent(if shift > 0 { -shift } else { b + shift }));
    }
    let factor = |offset: i64| Factor {
        negative,
        t_power: 0,
        offset: offset as u32,
        step: base,
        inverse: false,
        terms: None,
    };
    let spec = ProductSpec::new()
        .poch(base, base)
        .with(factor(b + shift))
        .with(factor(-shift));
    pochhammer(&spec, order)
}

/// Triple-product sum at `w = ±q^m`, normalized by `q^(m(m+1)/2)` so that every
/// exponent is nonnegative: `Σ_{n∈Z} (±1)^n q^(n(n+1)/2 + m·n + m(m+1)/2)`.
pub fn jacobi_triple(m: u32, negative: bool, order: usize) -> TruncatedSeries {
    let m = m as i64;
    let mut coeffs = vec![BigInt::from(0); order + 1];
    let exponent = |n: i64| n * (n + 1) / 2 + m * n + m * (m + 1) / 2;
    // exponents are (n+m)(n+m+1)/2 >= 0, minimal at n = -m and n = -m-1
    let mut n = -m;
    while exponent(n) <= order as i64 {
        coeffs[exponent(n) as usize] += signed(n, negative);
        n += 1;
    }
    let mut n = -m - 1;
    while exponent(n) <= order as i64 {
        coeffs[exponent(n) as usize] += signed(n, negative);
        n -= 1;
    }
    TruncatedSeries::from_ints(coeffs, order)
}

/// Product side of [`jacobi_triple`] after pulling `±q^(-d)` out of every
/// factor `1 ± q^(-d)`:
/// `(±1)^m (q;q)_∞ (∓q^(m+1);q)_∞ ∏_{d=1}^{m}(1 ± q^d) (∓1;q)_∞`.
pub fn jacobi_triple_product(m: u32, negative: bool, order: usize) -> TruncatedSeries {
    let mut spec = ProductSpec::new().poch(1, 1);
    let plus = |offset: u32, terms: Option<u32>| Factor {
        negative,
        t_power: 0,
        offset,
        step: 1,
        inverse: false,
        terms,
    };
    spec = spec.with(plus(m + 1, None));
    if m > 0 {
        spec = spec.with(plus(1, Some(m)));
    }
    spec = spec.with(plus(0, None));
    let out = pochhammer(&spec, order).expect("well-formed");
    if negative && m % 2 == 1 {
        -out
    } else {
        out
    }
}

/// Compares `Σ_n t^n q^(n(n-1)/2) / (q;q)_n` with `∏_{n>=0} (1 + t q^n)` as
/// bivariate truncations: `q`-degree and `t`-degree both at most `max_order`.
pub fn euler_sum_product_check(max_order: usize) -> VerificationReport {
    let order = max_order;
    let mut lhs = TruncatedSeries::zero(order);
    let mut inv_poch = TruncatedSeries::one(order);
    for n in 0..=max_order {
        if n > 0 {
            inv_poch.div_binomial(true, 0, n);
        }
        let exp = n * n.saturating_sub(1) / 2;
        if exp > order {
            break;
        }
        let term = &TruncatedSeries::monomial(1, n, exp, order) * &inv_poch;
        lhs = &lhs + &term;
    }
    let rhs_spec = ProductSpec::new().with(Factor {
        negative: false,
        t_power: 1,
        offset: 0,
        step: 1,
        inverse: false,
        terms: None,
    });
    let rhs = pochhammer(&rhs_spec, order).expect("well-formed");
    let (lhs, rhs) = (lhs.truncate_t(max_order), rhs.truncate_t(max_order));
    let mut report = ReportBuilder::new("euler-sum-product").param("max_order", max_order as i64);
    for n in 0..=order {
        for d in 0..=max_order {
            report.compare(&format!("t^{d}"), n as u64, lhs.tpoly(n).coeff(d), rhs.tpoly(n).coeff(d));
        }
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagonal_number_theorem() {
        let euler = pochhammer(&ProductSpec::new().poch(1, 1), 300).unwrap();
        assert_eq!(theta_pentagonal(300), euler);
    }

    #[test]
    fn gauss_identity() {
        let spec = ProductSpec::new().poch(1, 1);
        let mut prod = pochhammer(&spec, 300).unwrap();
        for e in 1..=300 {
            prod.div_binomial(false, 0, e);
        }
        assert_eq!(theta_gauss(300), prod);
    }

    #[test]
    fn triple_product_all_specializations() {
        for m in 0..=5 {
            for negative in [false, true] {
                assert_eq!(
                    jacobi_triple(m, negative, 300),
                    jacobi_triple_product(m, negative, 300),
                    "m = {m}, negative = {negative}"
                );
            }
        }
        // w = -1 kills the product
        assert!(jacobi_triple(0, true, 50).is_zero());
        assert_eq!(jacobi_triple(0, false, 6).int_coeffs(), [2, 2, 0, 2, 0, 0, 2].map(BigInt::from).to_vec());
    }

    #[test]
    fn general_theta_sum() {
        // base 3, w = q^-1: the 3-regular distinct parts numerator
        let sum = theta_sum(3, -1, false, 200).unwrap();
        assert_eq!(sum, theta_product(3, -1, false, 200).unwrap());
        assert!(theta_sum(1, 1, false, 10).is_err());
        assert!(theta_sum(1, -2, false, 10).is_err());
        assert!(theta_product(3, 1, false, 10).is_err());
        for (b, c) in [(27, -12), (27, -3), (27, 6 - 27), (1, 0), (1, -1), (2, -1)] {
            assert_eq!(theta_sum(b, c, false, 150).unwrap(), theta_product(b, c, false, 150).unwrap(), "b={b} c={c}");
            assert_eq!(theta_sum(b, c, true, 150).unwrap(), theta_product(b, c, true, 150).unwrap(), "b={b} c={c}");
        }
    }

    #[test]
    fn euler_sum_product_identity() {
        let r = euler_sum_product_check(20);
        assert!(r.passed(), "{:?}", r.first_failure);
        let r = euler_sum_product_check(0);
        assert!(r.passed());
    }
}
