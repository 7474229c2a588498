use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Position of a point relative to a line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of(v: &BigRational) -> Sign {
        if v.is_zero() {
            Sign::Zero
        } else if v.is_positive() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }
}

/// A sign vector with one entry per line of an arrangement.
pub type SignVector = Vec<Sign>;

pub fn sign_string(v: &[Sign]) -> String {
    v.iter().map(|s| s.symbol()).collect()
}

/// A point of `Q^2`.
pub type Point = (BigRational, BigRational);

/// The line `a x_1 + b x_2 = c`, stored with coprime integer coefficients
/// and `(a, b)` lexicographically positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Line {
    pub fn new(a: BigRational, b: BigRational, c: BigRational) -> Result<Line> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::InvalidInput("a line needs (a, b) != (0, 0)".into()));
        }
        let l = [&a, &b, &c].iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let scale = |r: &BigRational| (r * BigRational::from_integer(l.clone())).to_integer();
        let (mut a, mut b, mut c) = (scale(&a), scale(&b), scale(&c));
        let g = a.gcd(&b).gcd(&c);
        a /= &g;
        b /= &g;
        c /= &g;
        if a.is_negative() || (a.is_zero() && b.is_negative()) {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(Line { a, b, c })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Line> {
        let r = |v: i64| BigRational::from_integer(v.into());
        Line::new(r(a), r(b), r(c))
    }

    /// `x_1 = t`.
    pub fn vertical(t: i64) -> Line {
        Line::from_ints(1, 0, t).expect("nonzero normal")
    }

    /// `x_2 = t`.
    pub fn horizontal(t: i64) -> Line {
        Line::from_ints(0, 1, t).expect("nonzero normal")
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// `a p_1 + b p_2 - c`.
    pub fn eval(&self, p: &Point) -> BigRational {
        let r = |v: &BigInt| BigRational::from_integer(v.clone());
        r(&self.a) * &p.0 + r(&self.b) * &p.1 - r(&self.c)
    }

    pub fn side(&self, p: &Point) -> Sign {
        Sign::of(&self.eval(p))
    }

    pub fn normal(&self) -> Point {
        (BigRational::from_integer(self.a.clone()), BigRational::from_integer(self.b.clone()))
    }

    /// The direction `(-b, a)`, the normal turned counterclockwise.
    pub fn direction(&self) -> Point {
        (BigRational::from_integer(-&self.b), BigRational::from_integer(self.a.clone()))
    }

    /// The point of the line closest to the origin.
    pub fn base_point(&self) -> Point {
        let n2 = BigRational::from_integer(&self.a * &self.a + &self.b * &self.b);
        let s = BigRational::from_integer(self.c.clone()) / n2;
        (&s * BigRational::from_integer(self.a.clone()), s * BigRational::from_integer(self.b.clone()))
    }

    /// Position of a point of the line along [`Line::direction`].
    pub fn parameter(&self, p: &Point) -> BigRational {
        let d = self.direction();
        &p.0 * &d.0 + &p.1 * &d.1
    }

    pub fn is_parallel(&self, other: &Line) -> bool {
        (&self.a * &other.b - &self.b * &other.a).is_zero()
    }

    pub fn intersection(&self, other: &Line) -> Option<Point> {
        let det = &self.a * &other.b - &self.b * &other.a;
        if det.is_zero() {
            return None;
        }
        let det = BigRational::from_integer(det);
        let x = BigRational::from_integer(&self.c * &other.b - &self.b * &other.c) / &det;
        let y = BigRational::from_integer(&self.a * &other.c - &self.c * &other.a) / &det;
        Some((x, y))
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*x1 + {}*x2 = {}", self.a, self.b, self.c)
    }
}

/// Parses `"p/q"` or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::InvalidInput(format!("{s:?} is not a rational number"));
    let r = match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::InvalidInput(format!("{s:?} has a zero denominator")));
            }
            BigRational::new(p, q)
        }
        None => BigRational::from_integer(t.parse().map_err(|_| bad())?),
    };
    Ok(r)
}

fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct WireLine {
    a: WireRational,
    b: WireRational,
    c: WireRational,
}

struct WireRational(BigRational);

impl<'de> Deserialize<'de> for WireRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map(WireRational).map_err(de::Error::custom)
    }
}

impl Serialize for WireRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rational_string(&self.0))
    }
}

/// `{"a": "1", "b": "0", "c": "2"}`, rationals as strings.
impl<'de> Deserialize<'de> for Line {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = WireLine::deserialize(d)?;
        Line::new(w.a.0, w.b.0, w.c.0).map_err(de::Error::custom)
    }
}

impl Serialize for Line {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let r = |v: &BigInt| WireRational(BigRational::from_integer(v.clone()));
        WireLine { a: r(&self.a), b: r(&self.b), c: r(&self.c) }.serialize(s)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WireArrangement {
    lines: Vec<Line>,
}

/// Parses `{"lines": [{"a": .., "b": .., "c": ..}, ...]}`. Syntax errors
/// carry the byte offset where they were detected; repeated lines are
/// rejected.
pub fn parse_arrangement(input: &str) -> Result<Vec<Line>> {
    let w: WireArrangement = serde_json::from_str(input).map_err(|e| Error::Parse {
        position: byte_offset(input, e.line(), e.column()),
        message: strip_location(&e.to_string()),
    })?;
    check_distinct(&w.lines)?;
    Ok(w.lines)
}

pub(crate) fn check_distinct(lines: &[Line]) -> Result<()> {
    for (i, l) in lines.iter().enumerate() {
        if let Some(j) = lines[..i].iter().position(|m| m == l) {
            return Err(Error::InvalidInput(format!("lines {j} and {i} are the same line {l}")));
        }
    }
    Ok(())
}

fn byte_offset(input: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let start: usize = input.split_inclusive('\n').take(line - 1).map(str::len).sum();
    (start + column).saturating_sub(1).min(input.len())
}

fn strip_location(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}
