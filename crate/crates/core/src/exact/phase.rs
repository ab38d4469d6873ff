use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{frac, RationalQ};

/// An element of Q/Z, stored as the unique reduced fraction in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PhaseQ(RationalQ);

impl PhaseQ {
    pub fn new(value: RationalQ) -> Self {
        PhaseQ(frac(&value))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(super::rational(num, den))
    }

    pub fn zero() -> Self {
        PhaseQ(RationalQ::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn value(&self) -> &RationalQ {
        &self.0
    }

    /// Order in Q/Z, which is the reduced denominator.
    pub fn order(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(&self.0 * RationalQ::from_integer(k.clone()))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(0.0)
    }
}

impl Default for PhaseQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<RationalQ> for PhaseQ {
    fn from(value: RationalQ) -> Self {
        Self::new(value)
    }
}

impl Add for PhaseQ {
    type Output = PhaseQ;
    fn add(self, rhs: PhaseQ) -> PhaseQ {
        PhaseQ::new(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a PhaseQ> for &'a PhaseQ {
    type Output = PhaseQ;
    fn add(self, rhs: &PhaseQ) -> PhaseQ {
        PhaseQ::new(&self.0 + &rhs.0)
    }
}

impl AddAssign<&PhaseQ> for PhaseQ {
    fn add_assign(&mut self, rhs: &PhaseQ) {
        *self = &*self + rhs;
    }
}

impl Sub for PhaseQ {
    type Output = PhaseQ;
    fn sub(self, rhs: PhaseQ) -> PhaseQ {
        PhaseQ::new(self.0 - rhs.0)
    }
}

impl Neg for PhaseQ {
    type Output = PhaseQ;
    fn neg(self) -> PhaseQ {
        PhaseQ::new(-self.0)
    }
}

impl Neg for &PhaseQ {
    type Output = PhaseQ;
    fn neg(self) -> PhaseQ {
        PhaseQ::new(-&self.0)
    }
}

impl Mul<&BigInt> for &PhaseQ {
    type Output = PhaseQ;
    fn mul(self, k: &BigInt) -> PhaseQ {
        self.scale(k)
    }
}

impl fmt::Display for PhaseQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_representative() {
        assert_eq!(PhaseQ::from_ratio(-2, 5), PhaseQ::from_ratio(3, 5));
        assert_eq!(PhaseQ::from_ratio(6, 4), PhaseQ::from_ratio(1, 2));
        assert!(PhaseQ::from_ratio(7, 7).is_zero());
        assert_eq!(PhaseQ::from_ratio(3, 12).to_string(), "1/4");
        assert_eq!(PhaseQ::zero().to_string(), "0/1");
    }

    #[test]
    fn order_is_denominator() {
        assert_eq!(PhaseQ::from_ratio(4, 6).order(), &BigInt::from(3));
        assert_eq!(PhaseQ::zero().order(), &BigInt::from(1));
    }

    fn phase() -> impl Strategy<Value = PhaseQ> {
        (-50i64..50, 1i64..40).prop_map(|(n, d)| PhaseQ::from_ratio(n, d))
    }

    proptest! {
        #[test]
        fn abelian_group_laws(a in phase(), b in phase(), c in phase()) {
            prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
            prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
            prop_assert!((a.clone() + (-a.clone())).is_zero());
            prop_assert_eq!(a.clone() + PhaseQ::zero(), a.clone());
            // finite order
            prop_assert!(a.scale(a.order()).is_zero());
        }
    }
}
