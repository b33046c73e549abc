use crate::error::{Error, Result};

use super::TruncatedSeries;

/// One infinite (or finite) product `∏_{n>=0} (1 ± t^c q^(a + b·n))^(±1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factor {
    /// `true` for `1 - ...`, `false` for `1 + ...`.
    pub negative: bool,
    pub t_power: u32,
    pub offset: u32,
    pub step: u32,
    /// `true` when the factor divides.
    pub inverse: bool,
    /// Number of factors, `None` for the infinite product.
    pub terms: Option<u32>,
}

/// A product of [`Factor`]s, built with Pochhammer-style helpers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProductSpec {
    pub factors: Vec<Factor>,
}

impl ProductSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, factor: Factor) -> Self {
        self.factors.push(factor);
        self
    }

    fn push(self, negative: bool, offset: u32, step: u32, inverse: bool, terms: Option<u32>) -> Self {
        self.with(Factor {
            negative,
            t_power: 0,
            offset,
            step,
            inverse,
            terms,
        })
    }

    /// `(q^a; q^b)_∞`
    pub fn poch(self, a: u32, b: u32) -> Self {
        self.push(true, a, b, false, None)
    }

    /// `(-q^a; q^b)_∞`
    pub fn neg_poch(self, a: u32, b: u32) -> Self {
        self.push(false, a, b, false, None)
    }

    /// `1 / (q^a; q^b)_∞`
    pub fn inv_poch(self, a: u32, b: u32) -> Self {
        self.push(true, a, b, true, None)
    }

    /// `(q^a; q^b)_m`
    pub fn poch_finite(self, a: u32, b: u32, m: u32) -> Self {
        self.push(true, a, b, false, Some(m))
    }

    /// `1 / (q^a; q^b)_m`
    pub fn inv_poch_finite(self, a: u32, b: u32, m: u32) -> Self {
        self.push(true, a, b, true, Some(m))
    }

    /// A single factor `1 ± q^e`.
    pub fn binomial(self, negative: bool, e: u32) -> Self {
        self.push(negative, e, 1, false, Some(1))
    }

    pub fn validate(&self) -> Result<()> {
        for f in &self.factors {
            if f.step == 0 && f.terms.is_none() {
                return Err(Error::IllFormedProduct("infinite product with step 0".into()));
            }
            if f.inverse && f.offset == 0 {
                return Err(Error::IllFormedProduct(format!(
                    "cannot divide by a factor with q-exponent 0 (t-power {})",
                    f.t_power
                )));
            }
        }
        Ok(())
    }
}

/// Expands the product exactly through `q^order`. Factors whose lowest
/// exponent exceeds `order` contribute nothing and are skipped.
pub fn pochhammer(spec: &ProductSpec, order: usize) -> Result<TruncatedSeries> {
    spec.validate()?;
    let mut out = TruncatedSeries::one(order);
    for f in &spec.factors {
        let mut n = 0u64;
        loop {
            if f.terms.is_some_and(|m| n >= m as u64) {
                break;
            }
            let e = f.offset as u64 + f.step as u64 * n;
            if e > order as u64 {
                break;
            }
            if f.inverse {
                out.div_binomial(f.negative, f.t_power as usize, e as usize);
            } else {
                out.mul_binomial(f.negative, f.t_power as usize, e as usize);
            }
            if f.step == 0 && f.terms.is_none() {
                break;
            }
            n += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::constraint::ConstraintSpec;
    use crate::enumeration::count_table;

    #[test]
    fn euler_function_has_pentagonal_signs() {
        let euler = pochhammer(&ProductSpec::new().poch(1, 1), 10).unwrap();
        let want = [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0];
        assert_eq!(euler.int_coeffs(), want.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
    }

    #[test]
    fn distinct_parts_product_matches_enumeration() {
        let series = pochhammer(&ProductSpec::new().neg_poch(1, 1), 40).unwrap();
        let counts = count_table(40, &ConstraintSpec::distinct());
        for n in 0..=40 {
            assert_eq!(series.coeff(n), BigInt::from(counts[n].clone()));
        }
    }

    #[test]
    fn empty_and_ill_formed() {
        assert_eq!(pochhammer(&ProductSpec::new(), 5).unwrap(), TruncatedSeries::one(5));
        assert!(pochhammer(&ProductSpec::new().inv_poch(0, 1), 5).is_err());
        // (1 - q^0) annihilates
        assert!(pochhammer(&ProductSpec::new().poch(0, 1), 5).unwrap().is_zero());
    }

    #[test]
    fn finite_pochhammer() {
        // (q;q)_2 = (1 - q)(1 - q^2)
        let x = pochhammer(&ProductSpec::new().poch_finite(1, 1, 2), 5).unwrap();
        assert_eq!(x.int_coeffs(), [1, -1, -1, 1, 0, 0].map(BigInt::from).to_vec());
        let mut y = pochhammer(&ProductSpec::new().inv_poch_finite(1, 1, 2), 5).unwrap();
        y = &y * &x;
        assert_eq!(y, TruncatedSeries::one(5));
    }
}
