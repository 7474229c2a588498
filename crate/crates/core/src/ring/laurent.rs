use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// An element of `R = Z[x^±1, y^±1]`.
///
/// The term map never stores a zero coefficient, so two equal polynomials
/// always have identical term maps and the zero polynomial is the empty map.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), Monomial::ONE)
    }

    pub fn x() -> Self {
        Self::from(Monomial::X)
    }

    pub fn y() -> Self {
        Self::from(Monomial::Y)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), Monomial::ONE)
    }

    pub fn monomial(c: BigInt, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// Builds a polynomial from `(e_x, e_y, coefficient)` triples; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (ex, ey, c) in terms {
            p.add_term(Monomial::new(ex, ey), c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&Monomial::ONE).is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    /// Leading term under the graded lexicographic order.
    pub fn leading(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// `Some((c, m))` if this is a single term `c * m`.
    pub fn as_term(&self) -> Option<(&BigInt, Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, *m))
        } else {
            None
        }
    }

    /// A unit of `R`: `±m` for a monomial `m`.
    pub fn is_unit(&self) -> bool {
        matches!(self.as_term(), Some((c, _)) if c.abs().is_one())
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k * m, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// The largest monomial dividing every term (componentwise minimum of
    /// exponents). `None` for the zero polynomial.
    pub fn min_monomial(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |acc, m| acc.meet(m)))
    }

    /// Writes `self = m * p` with `p` a polynomial in `Z[x, y]` that is not
    /// divisible by `x` or `y`.
    pub fn split_monomial(&self) -> (Monomial, LaurentPoly) {
        match self.min_monomial() {
            None => (Monomial::ONE, LaurentPoly::zero()),
            Some(m) => (m, self.mul_monomial(m.inverse())),
        }
    }

    /// Divides every coefficient by `c`; the caller guarantees exactness.
    pub(crate) fn div_integer_exact(&self, c: &BigInt) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    debug_assert!((v % c).is_zero());
                    (*k, v / c)
                })
                .collect(),
        }
    }

    /// Exact quotient `self / g` in `R`, or `None` if `g` does not divide.
    ///
    /// Works for any nonzero divisor: both sides are cleared of monomial
    /// factors and a long division in `Z[x, y]` is run under the graded
    /// lexicographic order. If `g` divides, every remainder is a multiple of
    /// `g`, so its leading term is divisible by that of `g`; the first step
    /// where this fails proves non-divisibility.
    pub fn div_exact(&self, g: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!g.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if let Some((c, m)) = g.as_term() {
            if !self.terms.values().all(|v| (v % c).is_zero()) {
                return None;
            }
            return Some(self.div_integer_exact(c).mul_monomial(m.inverse()));
        }
        let (mf, mut rem) = self.split_monomial();
        let (mg, g0) = g.split_monomial();
        let (lm_g, lc_g) = g0.leading().map(|(m, c)| (m, c.clone()))?;
        let mut quot = LaurentPoly::zero();
        while let Some((lm_r, lc_r)) = rem.leading() {
            if !lm_r.is_multiple_of(&lm_g) {
                return None;
            }
            let (q, r) = lc_r.div_rem(&lc_g);
            if !r.is_zero() {
                return None;
            }
            let shift = lm_r / lm_g;
            rem -= &g0.mul_monomial(shift).scale(&q);
            quot.add_term(shift, q);
        }
        let quot = quot.mul_monomial(mf / mg);
        debug_assert!(&quot * g == *self);
        Some(quot)
    }

    /// Exact division restricted to divisors whose leading coefficient, after
    /// clearing monomial factors, is `±1`.
    ///
    /// Returns `Ok(None)` when `g` does not divide `self`, and an error when
    /// `g` is zero or is an unsupported divisor. The quotient is re-verified
    /// by multiplying back.
    pub fn try_div_exact(&self, g: &LaurentPoly) -> Result<Option<LaurentPoly>> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (_, g0) = g.split_monomial();
        let lc = g0.leading().map(|(_, c)| c.abs()).unwrap_or_default();
        if !lc.is_one() {
            return Err(Error::UnsupportedDivisor(g.to_string()));
        }
        let q = self.div_exact(g);
        if let Some(q) = &q {
            if &(q * g) != self {
                return Err(Error::Contradiction(format!(
                    "quotient of {self} by {g} does not multiply back"
                )));
            }
        }
        Ok(q)
    }

    /// Exact value at a rational point with nonzero coordinates.
    pub fn eval(&self, x0: &BigRational, y0: &BigRational) -> Result<BigRational> {
        if x0.is_zero() || y0.is_zero() {
            return Err(Error::ZeroEvaluationPoint);
        }
        let pow = |b: &BigRational, e: i64| -> BigRational {
            let p = num_traits::pow(b.clone(), e.unsigned_abs() as usize);
            if e < 0 {
                p.recip()
            } else {
                p
            }
        };
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| pow(x0, m.x) * pow(y0, m.y) * BigRational::from_integer(c.clone()))
            .fold(BigRational::zero(), |a, b| a + b))
    }

    /// Value at `x = y = 1`, the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Value at an integer point where `x0, y0` are nonzero and every
    /// negative power is taken in the rationals.
    pub fn eval_int(&self, x0: i64, y0: i64) -> Result<BigRational> {
        self.eval(
            &BigRational::from_integer(x0.into()),
            &BigRational::from_integer(y0.into()),
        )
    }

    /// Substitutes a monomial for each variable: `x -> mx`, `y -> my`.
    pub fn substitute(&self, mx: Monomial, my: Monomial) -> Self {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(mx.pow(m.x) * my.pow(m.y), c.clone());
        }
        out
    }
}

impl From<Monomial> for LaurentPoly {
    fn from(m: Monomial) -> Self {
        LaurentPoly::monomial(BigInt::one(), m)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::monomial(c, Monomial::ONE)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(*m1 * *m2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self += &rhs;
    }
}

impl SubAssign<LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self -= &rhs;
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

/// Human-readable form, terms in descending monomial order, e.g.
/// `x^2*y - x + 1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    terms: Vec<(i64, i64, String)>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| (m.x, m.y, c.to_string()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = Wire::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for (ex, ey, c) in wire.terms {
            let c = BigInt::from_str(&c).map_err(serde::de::Error::custom)?;
            p.add_term(Monomial::new(ex, ey), c);
        }
        Ok(p)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses expressions such as `x^2*y - 1`, `(x-1)^2*(xy+1)` or `x^-1 y`.
    /// Juxtaposition means multiplication.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            if sign < 0 {
                acc -= &t;
            } else {
                acc += &t;
            }
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c.is_ascii_digit() || c == b'x' || c == b'y' || c == b'(' => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        BigInt::from_str(digits).map_err(|_| self.error("bad integer"))
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let paren = self.peek() == Some(b'(');
        if paren {
            self.pos += 1;
        }
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        let e = self.integer()?;
        let e: i64 = i64::try_from(e).map_err(|_| self.error("exponent too large"))?;
        if paren {
            if self.peek() != Some(b')') {
                return Err(self.error("expected ')'"));
            }
            self.pos += 1;
        }
        Ok(if neg { -e } else { e })
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'x') | Some(b'y') => {
                let var = self.src[self.pos];
                self.pos += 1;
                let e = self.exponent()?;
                let m = if var == b'x' { Monomial::new(e, 0) } else { Monomial::new(0, e) };
                Ok(LaurentPoly::from(m))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                let e = self.exponent()?;
                if e < 0 {
                    let (c, m) = inner
                        .as_term()
                        .filter(|(c, _)| c.abs().is_one())
                        .ok_or_else(|| self.error("negative power of a non-unit"))?;
                    let c = c.clone();
                    return Ok(LaurentPoly::monomial(
                        num_traits::pow(c, e.unsigned_abs() as usize),
                        m.pow(e),
                    ));
                }
                Ok(inner.pow(e as u32))
            }
            Some(c) if c.is_ascii_digit() => Ok(LaurentPoly::from(self.integer()?)),
            _ => Err(self.error("expected a factor")),
        }
    }
}

/// Parses a polynomial literal, panicking on malformed input. Meant for
/// tests and examples.
pub fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap_or_else(|e| panic!("bad polynomial {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_examples() {
        assert!((lp("x - 1") + lp("1 - x")).is_zero());
        assert_eq!(LaurentPoly::zero() + lp("xy"), lp("x*y"));
        assert_eq!(lp("xy + 1") + lp("xy - 1"), lp("2xy"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(lp("x - 1") * lp("x + 1"), lp("x^2 - 1"));
        let f = lp("3x^-2y + 7 - y^4");
        assert_eq!(&f * &LaurentPoly::one(), f);
        // term-by-term expansion of (xy-1)(xy+1)
        let expected = LaurentPoly::from_terms([(2, 2, 1), (1, 1, 1), (1, 1, -1), (0, 0, -1)]);
        assert_eq!(lp("xy - 1") * lp("xy + 1"), expected);
        assert_eq!(expected, lp("x^2y^2 - 1"));
    }

    #[test]
    fn div_examples() {
        let q = lp("x^2y^2 - 1").try_div_exact(&lp("xy + 1")).unwrap().unwrap();
        assert_eq!(q, lp("xy - 1"));
        assert_eq!(&q * &lp("xy + 1"), lp("x^2y^2 - 1"));
        assert_eq!(lp("x^2y + x").try_div_exact(&lp("x")).unwrap(), Some(lp("xy + 1")));
        assert_eq!(lp("xy + 1").try_div_exact(&lp("y - 1")).unwrap(), None);
    }

    #[test]
    fn div_errors() {
        assert_eq!(lp("x").try_div_exact(&LaurentPoly::zero()), Err(Error::DivisionByZero));
        assert!(matches!(
            lp("4x^2 - 1").try_div_exact(&lp("2x + 1")),
            Err(Error::UnsupportedDivisor(_))
        ));
        // the general division handles it
        assert_eq!(lp("4x^2 - 1").div_exact(&lp("2x + 1")), Some(lp("2x - 1")));
        assert_eq!(lp("4x^2 + 1").div_exact(&lp("2x + 1")), None);
    }

    #[test]
    fn div_with_monomials_and_negative_exponents() {
        let g = lp("x^-1*y - 1");
        let q = lp("x^3 + y^-2");
        let f = &q * &g;
        assert_eq!(f.div_exact(&g), Some(q.clone()));
        assert_eq!(f.try_div_exact(&g).unwrap(), Some(q));
        // (y-1)(xy+1) has leading term x*y^2 with coefficient 1
        let d = lp("(y-1)(xy+1)");
        assert_eq!(lp("(y-1)(xy+1)(x^-3 - 5y)").try_div_exact(&d).unwrap(), Some(lp("x^-3 - 5y")));
    }

    #[test]
    fn eval_examples() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert!(lp("(x-1)(y-1)").eval(&r(1, 1), &r(1, 1)).unwrap().is_zero());
        assert_eq!(lp("xy + 1").eval(&r(1, 1), &r(1, 1)).unwrap(), r(2, 1));
        assert_eq!(lp("x^-1 y").eval(&r(2, 1), &r(3, 1)).unwrap(), r(3, 2));
        assert_eq!(lp("x").eval(&r(0, 1), &r(1, 1)), Err(Error::ZeroEvaluationPoint));
    }

    #[test]
    fn display_and_parse() {
        let f = lp("-x^2y + (1-x) + 3 y^-1");
        assert_eq!(f.to_string(), "-x^2*y - x + 1 + 3*y^-1");
        assert_eq!(lp(&f.to_string()), f);
        assert!("x +".parse::<LaurentPoly>().is_err());
        assert!("(x+1)^-1".parse::<LaurentPoly>().is_err());
        assert_eq!(lp("(-x)^-2"), lp("x^-2"));
    }

    #[test]
    fn json_format() {
        let f = lp("xy + 1 - 2x^-1");
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"terms":[[1,1,"1"],[0,0,"1"],[-1,0,"-2"]]}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        let z: LaurentPoly = serde_json::from_str(r#"{"terms":[[0,0,"0"]]}"#).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn content_and_monomial_split() {
        let f = lp("6x^2y - 4x^3y^2");
        assert_eq!(f.content(), BigInt::from(2));
        let (m, p) = f.split_monomial();
        assert_eq!(m, Monomial::new(2, 1));
        assert_eq!(p, lp("6 - 4xy"));
    }
}
