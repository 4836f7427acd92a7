use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// A rational generating function `numerator(z) / denominator(z)` with
/// integer coefficients, expanded through the linear recurrence induced by
/// the denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    numerator: Vec<BigInt>,
    denominator: Vec<BigInt>,
}

impl RationalGF {
    pub fn new(numerator: &[i64], denominator: &[i64]) -> Result<RationalGF> {
        if denominator.first().is_none_or(|c| *c == 0) {
            return Err(Error::InvalidParameter(
                "denominator needs a nonzero constant term".into(),
            ));
        }
        Ok(RationalGF {
            numerator: numerator.iter().map(|&c| BigInt::from(c)).collect(),
            denominator: denominator.iter().map(|&c| BigInt::from(c)).collect(),
        })
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[BigInt] {
        &self.denominator
    }

    /// First `count` coefficients. Fails if the recurrence leaves the integers.
    pub fn expand(&self, count: usize) -> Result<Vec<BigInt>> {
        let d0 = &self.denominator[0];
        let mut out: Vec<BigInt> = Vec::with_capacity(count);
        for n in 0..count {
            let mut acc = self.numerator.get(n).cloned().unwrap_or_else(BigInt::zero);
            for (j, dj) in self.denominator.iter().enumerate().skip(1) {
                if j > n {
                    break;
                }
                if !dj.is_zero() {
                    acc -= dj * &out[n - j];
                }
            }
            let (q, r) = acc.div_rem(d0);
            if !r.is_zero() {
                return Err(Error::NotACount {
                    index: n,
                    value: format!("{acc}/{d0}"),
                });
            }
            out.push(q);
        }
        Ok(out)
    }

    /// Like [`expand`](Self::expand) but requires non-negative coefficients.
    pub fn expand_counts(&self, count: usize) -> Result<Vec<num_bigint::BigUint>> {
        self.expand(count)?
            .into_iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_negative() {
                    Err(Error::NotACount {
                        index,
                        value: c.to_string(),
                    })
                } else {
                    Ok(c.to_biguint().expect("non-negative"))
                }
            })
            .collect()
    }
}
