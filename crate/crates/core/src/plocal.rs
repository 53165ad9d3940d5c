//! Exact arithmetic in Z localized at a prime p: fractions whose reduced
//! denominator is coprime to p.

use crate::error::{CoreError, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of Z_(p): a reduced fraction with positive denominator not
/// divisible by p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PLocalRational {
    prime: u64,
    value: BigRational,
}

impl PLocalRational {
    /// Builds numerator/denominator, reducing to canonical form. Rejects
    /// composite p and denominators divisible by p (after reduction).
    pub fn new(prime: u64, numerator: i64, denominator: i64) -> Result<PLocalRational> {
        if !is_prime(prime) {
            return Err(CoreError::NotPrime(prime));
        }
        if denominator == 0 {
            return Err(CoreError::InvalidSample(format!("{numerator}/0")));
        }
        let value = BigRational::new(BigInt::from(numerator), BigInt::from(denominator));
        Self::from_rational(prime, value)
    }

    pub fn from_integer(prime: u64, n: i64) -> Result<PLocalRational> {
        Self::new(prime, n, 1)
    }

    pub(crate) fn from_rational(prime: u64, value: BigRational) -> Result<PLocalRational> {
        if !is_prime(prime) {
            return Err(CoreError::NotPrime(prime));
        }
        if value.denom().mod_floor(&BigInt::from(prime)).is_zero() {
            return Err(CoreError::InvalidSample(format!(
                "{value} has denominator divisible by {prime}"
            )));
        }
        Ok(PLocalRational { prime, value })
    }

    pub fn zero(prime: u64) -> Result<PLocalRational> {
        Self::from_integer(prime, 0)
    }

    pub fn one(prime: u64) -> Result<PLocalRational> {
        Self::from_integer(prime, 1)
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn numerator(&self) -> &BigInt {
        self.value.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.value.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn check_prime(&self, other: &PLocalRational) -> Result<()> {
        if self.prime == other.prime {
            Ok(())
        } else {
            Err(CoreError::PrimeMismatch(self.prime, other.prime))
        }
    }

    pub fn add(&self, other: &PLocalRational) -> Result<PLocalRational> {
        self.check_prime(other)?;
        Ok(PLocalRational {
            prime: self.prime,
            value: &self.value + &other.value,
        })
    }

    pub fn sub(&self, other: &PLocalRational) -> Result<PLocalRational> {
        self.check_prime(other)?;
        Ok(PLocalRational {
            prime: self.prime,
            value: &self.value - &other.value,
        })
    }

    pub fn mul(&self, other: &PLocalRational) -> Result<PLocalRational> {
        self.check_prime(other)?;
        Ok(PLocalRational {
            prime: self.prime,
            value: &self.value * &other.value,
        })
    }

    pub fn neg(&self) -> PLocalRational {
        PLocalRational {
            prime: self.prime,
            value: -&self.value,
        }
    }

    /// x/y inside Z_(p): None when the quotient leaves the localization,
    /// i.e. when its reduced denominator picks up a factor of p.
    pub fn try_div(&self, other: &PLocalRational) -> Result<Option<PLocalRational>> {
        self.check_prime(other)?;
        if other.is_zero() {
            return Ok(None);
        }
        let q = &self.value / &other.value;
        Ok(PLocalRational::from_rational(self.prime, q).ok())
    }

    /// A unit of Z_(p) is a nonzero element with p not dividing the
    /// numerator.
    pub fn is_unit(&self) -> bool {
        !self.is_zero()
            && !self
                .value
                .numer()
                .mod_floor(&BigInt::from(self.prime))
                .is_zero()
    }

    /// p-adic valuation: the exponent of p in the numerator (the denominator
    /// is coprime to p). Undefined on zero.
    pub fn valuation(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(CoreError::ZeroValuation);
        }
        let p = BigInt::from(self.prime);
        let mut n = self.value.numer().abs();
        let mut v = 0u64;
        while n.mod_floor(&p).is_zero() {
            n /= &p;
            v += 1;
        }
        Ok(v)
    }

    /// Membership in p^k Z_(p): zero, or valuation ≥ k.
    pub fn in_power_ideal(&self, k: u64) -> bool {
        self.is_zero() || self.valuation().expect("nonzero") >= k
    }
}

impl std::fmt::Display for PLocalRational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.value.denom().is_one() {
            write!(f, "{}", self.value.numer())
        } else {
            write!(f, "{}/{}", self.value.numer(), self.value.denom())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: u64, n: i64, d: i64) -> PLocalRational {
        PLocalRational::new(p, n, d).unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(q(2, 12, 1).valuation().unwrap(), 2);
        assert!(q(2, 3, 5).is_unit());
        let x = q(2, 2, 3);
        assert!(!x.is_unit());
        assert_eq!(x.valuation().unwrap(), 1);
    }

    #[test]
    fn addition_is_exact() {
        // 1/3 + 1/5 = 8/15, with v_2 = 3
        let s = q(2, 1, 3).add(&q(2, 1, 5)).unwrap();
        assert_eq!(s, q(2, 8, 15));
        assert_eq!(s.valuation().unwrap(), 3);
    }

    #[test]
    fn localization_rejects_bad_denominators() {
        assert!(PLocalRational::new(2, 1, 2).is_err());
        assert!(PLocalRational::new(3, 5, 9).is_err());
        assert!(PLocalRational::new(2, 1, 6).is_err());
        // 4/6 reduces to 2/3, which is fine at p = 2
        assert!(PLocalRational::new(2, 4, 6).is_ok());
        assert!(PLocalRational::new(4, 1, 1).is_err()); // 4 is not prime
    }

    #[test]
    fn zero_has_no_valuation() {
        assert!(matches!(
            q(5, 0, 1).valuation(),
            Err(CoreError::ZeroValuation)
        ));
        assert!(q(5, 0, 1).in_power_ideal(10));
    }

    #[test]
    fn division_stays_in_or_leaves_the_localization() {
        let six = q(2, 6, 1);
        let two = q(2, 2, 1);
        assert_eq!(six.try_div(&two).unwrap().unwrap(), q(2, 3, 1));
        // 2 / 6 = 1/3 is still 2-local, but 1 / 2 is not
        assert_eq!(two.try_div(&six).unwrap().unwrap(), q(2, 1, 3));
        assert!(q(2, 1, 1).try_div(&two).unwrap().is_none());
        assert!(two.try_div(&q(2, 0, 1)).unwrap().is_none());
    }

    #[test]
    fn prime_mismatch_is_rejected() {
        assert!(q(2, 1, 1).add(&q(3, 1, 1)).is_err());
    }
}
