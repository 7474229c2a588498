use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// An element `num / den` of the fraction field `Q(x, y)`.
///
/// Stored in a normalized but not fully reduced form: the denominator carries
/// no monomial factor and has a positive leading coefficient, the common
/// integer content of numerator and denominator is removed, and the fraction
/// collapses to `q / 1` whenever the denominator divides the numerator
/// exactly. There is no multivariate gcd, so equality is decided by
/// cross-multiplication.
#[derive(Clone)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut r = RationalFunction { num, den };
        r.normalize();
        Ok(r)
    }

    pub fn zero() -> Self {
        RationalFunction { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        let (m, den) = self.den.split_monomial();
        self.den = den;
        self.num = self.num.mul_monomial(m.inverse());

        let g = self.num.content().gcd(&self.den.content());
        if !g.is_one() {
            self.num = self.num.div_integer_exact(&g);
            self.den = self.den.div_integer_exact(&g);
        }
        if self.den.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            self.num = -&self.num;
            self.den = -&self.den;
        }
        if !self.den.is_one() {
            if let Some(q) = self.num.div_exact(&self.den) {
                self.num = q;
                self.den = LaurentPoly::one();
            }
        }
    }

    /// The Laurent polynomial equal to `self`, if one exists.
    ///
    /// Since the denominator has no monomial factor, `self` lies in `R`
    /// exactly when the denominator divides the numerator.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        match self.num.try_div_exact(&self.den) {
            Ok(q) => q,
            // leading coefficient of the denominator is not a unit: the
            // content has already been stripped, use the general division
            Err(_) => self.num.div_exact(&self.den),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    fn from_parts(num: LaurentPoly, den: LaurentPoly) -> Self {
        RationalFunction::new(num, den).expect("nonzero denominator")
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(num: LaurentPoly) -> Self {
        RationalFunction { num, den: LaurentPoly::one() }
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        RationalFunction::from(LaurentPoly::from(c))
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::from_parts(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::from_parts(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::from_parts(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`RationalFunction::checked_div`] to get
/// an error instead.
impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero in Q(x, y)")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $f(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $f(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&RationalFunction> for RationalFunction {
    fn add_assign(&mut self, rhs: &RationalFunction) {
        *self = &*self + rhs;
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// `{"num":<poly>,"den":<poly>}` with both parts in normalized form.
impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire { num: self.num.clone(), den: self.den.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        RationalFunction::new(w.num, w.den).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::laurent::lp;

    fn rf(n: &str, d: &str) -> RationalFunction {
        RationalFunction::new(lp(n), lp(d)).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(rf("x^2 - 1", "x - 1"), rf("x + 1", "1"));
        let a = rf("x + y", "x*y - 3");
        assert!((&a - &a).is_zero());
        assert_eq!(rf("1", "y - 1") * rf("y - 1", "1"), RationalFunction::one());
        assert_eq!(
            RationalFunction::one().checked_div(&RationalFunction::zero()),
            Err(Error::DivisionByZero)
        );
        assert!(RationalFunction::new(lp("1"), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn normalization() {
        let r = rf("6x", "-4x^2*y + 2x^3");
        assert_eq!(r.denominator(), &lp("x - 2y"));
        assert_eq!(r.numerator(), &lp("3x^-1"));
        // exact division collapses the fraction
        assert!(rf("x^2y^2 - 1", "xy + 1").denominator().is_one());
    }

    #[test]
    fn laurent_membership() {
        assert_eq!(rf("x^2y^2 - 1", "xy + 1").as_laurent(), Some(lp("xy - 1")));
        assert_eq!(rf("1", "y - 1").as_laurent(), None);
        let f = lp("x^-1 - 7y^3");
        assert_eq!(RationalFunction::from(f.clone()).as_laurent(), Some(f));
        assert_eq!(rf("x^2", "3").as_laurent(), None);
        assert_eq!(rf("1", "x^2*y").as_laurent(), Some(lp("x^-2*y^-1")));
    }
}
