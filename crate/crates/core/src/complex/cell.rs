use std::fmt;

/// A cell of a 2-dimensional CW complex, with a fixed dimension.
pub trait Cell: Clone + Ord + fmt::Debug + fmt::Display {
    fn dimension(&self) -> u8;
}

/// Cell names of `Sal(F_n)` and of `Sal(A_n)/Σ2`.
///
/// The derived order is the basis order used everywhere: `c_1..c_{n+1}`,
/// `a_1..a_n`, `b_1..b_n` for edges, then `A_{i,j}` lexicographically before
/// `B_{i,r}` lexicographically for 2-cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CellLabel {
    /// The unique vertex of `Sal(F_n)`.
    Vertex,
    C(usize),
    A1(usize),
    B1(usize),
    A2(usize, usize),
    B2(usize, u8),
    /// Vertex `P_{i,j}` of `Sal(A_n)/Σ2`, `1 <= i <= j <= n+1`.
    P(usize, usize),
    AE(usize, usize),
    AbarE(usize, usize),
    BE(usize, usize),
    BbarE(usize, usize),
    CE(usize),
    A4(usize, usize, u8),
    B4(usize, u8),
}

impl CellLabel {
    /// Whether the label is in range for the complex with parameter `n`.
    pub fn in_range(&self, n: usize) -> bool {
        use CellLabel::*;
        let pair = |i: usize, j: usize, top: usize| 1 <= i && i <= j && j <= top;
        match *self {
            Vertex => true,
            C(i) | CE(i) => (1..=n + 1).contains(&i),
            A1(i) | B1(i) => (1..=n).contains(&i),
            A2(i, j) => 1 <= i && i < j && j <= n,
            B2(i, r) | B4(i, r) => (1..=n).contains(&i) && (1..=3).contains(&r),
            P(i, j) => pair(i, j, n + 1),
            AE(i, j) | AbarE(i, j) | BE(i, j) | BbarE(i, j) => pair(i, j, n),
            A4(i, j, r) => 1 <= i && i < j && j <= n && (1..=4).contains(&r),
        }
    }
}

impl Cell for CellLabel {
    fn dimension(&self) -> u8 {
        use CellLabel::*;
        match self {
            Vertex | P(..) => 0,
            C(_) | A1(_) | B1(_) | AE(..) | AbarE(..) | BE(..) | BbarE(..) | CE(_) => 1,
            A2(..) | B2(..) | A4(..) | B4(..) => 2,
        }
    }
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CellLabel::*;
        match self {
            Vertex => write!(f, "*"),
            C(i) | CE(i) => write!(f, "c_{i}"),
            A1(i) => write!(f, "a_{i}"),
            B1(i) => write!(f, "b_{i}"),
            A2(i, j) => write!(f, "A_{{{i},{j}}}"),
            B2(i, r) | B4(i, r) => write!(f, "B_{{{i},{r}}}"),
            P(i, j) => write!(f, "P_{{{i},{j}}}"),
            AE(i, j) => write!(f, "a_{{{i},{j}}}"),
            AbarE(i, j) => write!(f, "abar_{{{i},{j}}}"),
            BE(i, j) => write!(f, "b_{{{i},{j}}}"),
            BbarE(i, j) => write!(f, "bbar_{{{i},{j}}}"),
            A4(i, j, r) => write!(f, "A_{{{i},{j},{r}}}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use CellLabel::*;

    #[test]
    fn basis_order() {
        let mut v = vec![B1(1), A1(2), C(3), A1(1), C(1)];
        v.sort();
        assert_eq!(v, vec![C(1), C(3), A1(1), A1(2), B1(1)]);
        assert!(A2(2, 3) < B2(1, 1));
        assert!(A2(1, 3) < A2(2, 3));
    }

    #[test]
    fn labels_and_ranges() {
        assert_eq!(A2(1, 2).to_string(), "A_{1,2}");
        assert_eq!(B2(3, 2).to_string(), "B_{3,2}");
        assert_eq!(C(4).to_string(), "c_4");
        assert!(C(4).in_range(3) && !C(5).in_range(3));
        assert!(!A2(2, 2).in_range(3));
        assert!(P(4, 4).in_range(3) && !P(3, 2).in_range(3));
        assert_eq!(B4(1, 3).dimension(), 2);
    }
}
