//! Exact non-negative dyadic rationals: `numerator / 2^exponent`.
//!
//! All probabilities and expectations in the derandomizer are sums of terms
//! of the form `c / 2^l`, so this representation is closed under everything
//! the algorithm needs: addition, subtraction of a smaller value, integer
//! scaling, doubling, and exact comparison. The greedy choice relies on a
//! strict `>` comparison, which is why no floating point is allowed anywhere
//! on this path.
//!
//! Values are kept normalized (odd numerator or exponent 0) so numerators
//! stay small; comparison and equality are exact regardless of form.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

#[derive(Clone, Debug)]
pub struct Dyadic {
    numerator: BigUint,
    exponent: u32,
}

impl Dyadic {
    pub fn zero() -> Dyadic {
        Dyadic { numerator: BigUint::zero(), exponent: 0 }
    }

    pub fn one() -> Dyadic {
        Dyadic::from_int(1)
    }

    pub fn from_int(v: u64) -> Dyadic {
        Dyadic { numerator: BigUint::from(v), exponent: 0 }
    }

    /// `numerator / 2^exponent`, normalized.
    pub fn from_parts(numerator: BigUint, exponent: u32) -> Dyadic {
        let mut d = Dyadic { numerator, exponent };
        d.normalize();
        d
    }

    /// `numerator / 2^exponent` from machine integers.
    pub fn from_ratio(numerator: u64, exponent: u32) -> Dyadic {
        Dyadic::from_parts(BigUint::from(numerator), exponent)
    }

    pub fn numerator(&self) -> &BigUint {
        &self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Strips factors of two shared by numerator and denominator.
    fn normalize(&mut self) {
        if self.numerator.is_zero() {
            self.exponent = 0;
            return;
        }
        let shift = self.numerator.trailing_zeros().unwrap_or(0).min(self.exponent as u64);
        if shift > 0 {
            self.numerator >>= shift;
            self.exponent -= shift as u32;
        }
    }

    /// Numerator rewritten at a target exponent; `None` if that would lose
    /// precision (target smaller than the normalized exponent).
    fn numerator_at(&self, exponent: u32) -> Option<BigUint> {
        if exponent < self.exponent {
            return None;
        }
        Some(&self.numerator << (exponent - self.exponent))
    }

    pub fn double(&self) -> Dyadic {
        if self.exponent > 0 {
            Dyadic { numerator: self.numerator.clone(), exponent: self.exponent - 1 }
        } else {
            Dyadic { numerator: &self.numerator << 1u32, exponent: 0 }
        }
    }

    /// Multiplication by a non-negative integer.
    pub fn scale(&self, factor: u64) -> Dyadic {
        Dyadic::from_parts(&self.numerator * BigUint::from(factor), self.exponent)
    }

    /// Exact subtraction; `None` when the result would be negative.
    pub fn checked_sub(&self, rhs: &Dyadic) -> Option<Dyadic> {
        let exp = self.exponent.max(rhs.exponent);
        let a = self.numerator_at(exp).expect("max exponent");
        let b = rhs.numerator_at(exp).expect("max exponent");
        if a < b {
            return None;
        }
        Some(Dyadic::from_parts(a - b, exp))
    }

    /// Best-effort conversion for display and statistics; never used in the
    /// exact decision paths.
    pub fn to_f64(&self) -> f64 {
        let num = self.numerator.to_f64().unwrap_or(f64::INFINITY);
        libm::scalbn(num, -(self.exponent as i32))
    }

    /// Renders as `num/2^exp` (or just `num` when the exponent is 0).
    pub fn to_ratio_string(&self) -> String {
        use alloc::format;
        if self.exponent == 0 {
            format!("{}", self.numerator)
        } else {
            format!("{}/2^{}", self.numerator, self.exponent)
        }
    }
}

impl Add<&Dyadic> for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        let exp = self.exponent.max(rhs.exponent);
        let a = self.numerator_at(exp).expect("max exponent");
        let b = rhs.numerator_at(exp).expect("max exponent");
        Dyadic::from_parts(a + b, exp)
    }
}

impl AddAssign<&Dyadic> for Dyadic {
    fn add_assign(&mut self, rhs: &Dyadic) {
        *self = &*self + rhs;
    }
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Dyadic) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Dyadic {}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Dyadic) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Dyadic) -> Ordering {
        let exp = self.exponent.max(other.exponent);
        let a = self.numerator_at(exp).expect("max exponent");
        let b = other.numerator_at(exp).expect("max exponent");
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ratio_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comparison_is_form_independent() {
        let a = Dyadic::from_ratio(2, 1); // 2/2 = 1
        assert_eq!(a, Dyadic::one());
        assert_eq!(Dyadic::from_ratio(6, 4), Dyadic::from_ratio(3, 3));
        assert!(Dyadic::from_ratio(5, 4) < Dyadic::from_ratio(11, 5));
        assert!(Dyadic::from_ratio(3, 2) > Dyadic::from_ratio(5, 3));
    }

    #[test]
    fn add_and_sub_are_exact() {
        let a = Dyadic::from_ratio(5, 4); // 5/16
        let b = Dyadic::from_ratio(3, 3); // 3/8 = 6/16
        let s = &a + &b;
        assert_eq!(s, Dyadic::from_ratio(11, 4));
        assert_eq!(s.checked_sub(&b).unwrap(), a);
        assert_eq!(a.checked_sub(&s), None);
        assert_eq!(Dyadic::one().checked_sub(&Dyadic::one()).unwrap(), Dyadic::zero());
    }

    #[test]
    fn scale_and_double() {
        let p = Dyadic::from_ratio(3, 4); // 3/16
        assert_eq!(p.scale(4), Dyadic::from_ratio(3, 2));
        assert_eq!(p.double(), Dyadic::from_ratio(3, 3));
        assert_eq!(Dyadic::from_int(3).double(), Dyadic::from_int(6));
    }

    #[test]
    fn display_and_f64() {
        assert_eq!(Dyadic::from_ratio(5, 4).to_ratio_string(), "5/2^4");
        assert_eq!(Dyadic::from_int(7).to_ratio_string(), "7");
        assert!((Dyadic::from_ratio(5, 4).to_f64() - 0.3125).abs() < 1e-15);
        assert_eq!(Dyadic::zero().to_f64(), 0.0);
    }
}
