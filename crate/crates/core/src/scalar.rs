//! Exact numbers of the form `m · 2^(e/2)`.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `mantissa · 2^(half_exponent / 2)` with a nonnegative integer mantissa.
///
/// Canonical form: the mantissa is odd, or zero with `half_exponent == 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfPowerScalar {
    mantissa: BigUint,
    half_exponent: i64,
}

impl HalfPowerScalar {
    pub fn new(mantissa: BigUint, half_exponent: i64) -> Self {
        let mut s = HalfPowerScalar {
            mantissa,
            half_exponent,
        };
        s.normalize();
        s
    }

    pub fn zero() -> Self {
        HalfPowerScalar {
            mantissa: BigUint::zero(),
            half_exponent: 0,
        }
    }

    pub fn one() -> Self {
        HalfPowerScalar {
            mantissa: BigUint::one(),
            half_exponent: 0,
        }
    }

    pub fn from_integer(n: impl Into<BigUint>) -> Self {
        Self::new(n.into(), 0)
    }

    /// `√2^e`, i.e. `2^(e/2)`.
    pub fn sqrt2_pow(e: i64) -> Self {
        HalfPowerScalar {
            mantissa: BigUint::one(),
            half_exponent: e,
        }
    }

    pub fn mantissa(&self) -> &BigUint {
        &self.mantissa
    }

    pub fn half_exponent(&self) -> i64 {
        self.half_exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    /// Multiplies by `2^(e/2)`.
    pub fn scale_half(&self, e: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        HalfPowerScalar {
            mantissa: self.mantissa.clone(),
            half_exponent: self.half_exponent + e,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.is_zero() || (self.half_exponent >= 0 && self.half_exponent % 2 == 0)
    }

    pub fn to_integer(&self) -> Option<BigUint> {
        if !self.is_integral() {
            return None;
        }
        Some(&self.mantissa << (self.half_exponent / 2) as u64)
    }

    fn normalize(&mut self) {
        if self.mantissa.is_zero() {
            self.half_exponent = 0;
            return;
        }
        let twos = self.mantissa.trailing_zeros().unwrap_or(0);
        if twos > 0 {
            self.mantissa >>= twos;
            self.half_exponent += 2 * twos as i64;
        }
    }
}

impl Mul for &HalfPowerScalar {
    type Output = HalfPowerScalar;

    fn mul(self, rhs: &HalfPowerScalar) -> HalfPowerScalar {
        HalfPowerScalar::new(
            &self.mantissa * &rhs.mantissa,
            self.half_exponent + rhs.half_exponent,
        )
    }
}

impl Mul for HalfPowerScalar {
    type Output = HalfPowerScalar;

    fn mul(self, rhs: HalfPowerScalar) -> HalfPowerScalar {
        &self * &rhs
    }
}

impl fmt::Display for HalfPowerScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.to_integer() {
            return write!(f, "{n}");
        }
        write!(f, "{}·2^({}/2)", self.mantissa, self.half_exponent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_scalar() -> impl Strategy<Value = HalfPowerScalar> {
        (0u64..1000, -8i64..8).prop_map(|(m, e)| HalfPowerScalar::new(BigUint::from(m), e))
    }

    #[test]
    fn normalization() {
        let s = HalfPowerScalar::new(BigUint::from(12u32), -1);
        assert_eq!(s.mantissa(), &BigUint::from(3u32));
        assert_eq!(s.half_exponent(), 3);
        assert!(!s.is_integral());
        let t = HalfPowerScalar::new(BigUint::from(4u32), -2);
        assert_eq!(t.to_integer(), Some(BigUint::from(2u32)));
        assert!(HalfPowerScalar::new(BigUint::zero(), -7).is_integral());
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let r = HalfPowerScalar::sqrt2_pow(1);
        assert_eq!((&r * &r).to_integer(), Some(BigUint::from(2u32)));
        assert_eq!(HalfPowerScalar::sqrt2_pow(-2).to_integer(), None);
    }

    proptest! {
        #[test]
        fn mul_commutative_associative(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn integrality_matches_value(m in 0u64..10_000, e in -6i64..6) {
            let s = HalfPowerScalar::new(BigUint::from(m), e);
            // m · 2^(e/2) is an integer iff m = 0, or after pulling twos out of m the exponent is even and >= 0
            let mut mm = m;
            let mut ee = e;
            while mm != 0 && mm % 2 == 0 { mm /= 2; ee += 2; }
            let expected = m == 0 || (ee >= 0 && ee % 2 == 0);
            prop_assert_eq!(s.is_integral(), expected);
        }
    }
}
