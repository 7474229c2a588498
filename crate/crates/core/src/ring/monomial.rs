use std::cmp::Ordering;
use std::fmt;
use std::ops::{Div, Mul};

/// A monomial `x^x y^y` with integer exponents, i.e. an element of the free
/// abelian group `H` on `{x, y}`.
///
/// Monomials are totally ordered by graded lexicographic order with `x`
/// before `y`: first by total degree, then by the `x` exponent. The order is
/// compatible with multiplication, and is a well-order on monomials with
/// nonnegative exponents.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: i64,
    pub y: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };
    pub const X: Monomial = Monomial { x: 1, y: 0 };
    pub const Y: Monomial = Monomial { x: 0, y: 1 };

    pub const fn new(x: i64, y: i64) -> Self {
        Monomial { x, y }
    }

    pub fn degree(&self) -> i64 {
        self.x + self.y
    }

    pub fn inverse(&self) -> Self {
        Monomial::new(-self.x, -self.y)
    }

    pub fn pow(&self, e: i64) -> Self {
        Monomial::new(self.x * e, self.y * e)
    }

    /// Componentwise `self >= other`, i.e. `other` divides `self` in `Z[x, y]`.
    pub fn is_multiple_of(&self, other: &Monomial) -> bool {
        self.x >= other.x && self.y >= other.y
    }

    /// Componentwise minimum (the gcd in `Z[x, y]` of monomials).
    pub fn meet(&self, other: &Monomial) -> Self {
        Monomial::new(self.x.min(other.x), self.y.min(other.y))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Div for Monomial {
    type Output = Monomial;
    fn div(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.x - rhs.x, self.y - rhs.y)
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: char, e: i64) -> fmt::Result {
    match e {
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.x, self.y) {
            (0, 0) => write!(f, "1"),
            (ex, 0) => write_power(f, 'x', ex),
            (0, ey) => write_power(f, 'y', ey),
            (ex, ey) => {
                write_power(f, 'x', ex)?;
                write!(f, "*")?;
                write_power(f, 'y', ey)
            }
        }
    }
}
