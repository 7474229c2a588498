//! Fraction-free Gauss-Jordan elimination over `Z[x^±1, y^±1]`.
//!
//! Each elimination step replaces row `k` by
//! `(p * row_k - a_kj * row_i) / d`, where `p` is the new pivot and `d` the
//! previous one. The division is exact (Sylvester's identity), so every
//! intermediate entry stays a Laurent polynomial and the reduced form has the
//! same nonzero scalar `den` at every pivot.

use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, RationalFunction};

use super::matrix::{FieldMatrix, RingMatrix};

/// Reduced row echelon form scaled by `den`: `rows[t][pivots[t]] == den` and
/// every other entry of a pivot column is zero.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<LaurentPoly>>,
    pub den: LaurentPoly,
    pub pivots: Vec<usize>,
    pub swaps: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Row-reduces `rows` (each of length `ncols`). Pivots are chosen as the
/// first nonzero entry scanning columns left to right and, within a column,
/// rows top to bottom.
pub fn rref(mut a: Vec<Vec<LaurentPoly>>, ncols: usize) -> Echelon {
    let nrows = a.len();
    let mut divisor = LaurentPoly::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut i = 0;
    for j in 0..ncols {
        if i == nrows {
            break;
        }
        let Some(l) = (i..nrows).find(|&l| !a[l][j].is_zero()) else {
            continue;
        };
        if l != i {
            a.swap(i, l);
            swaps += 1;
        }
        let pivot = a[i][j].clone();
        let pivot_row = a[i].clone();
        for (k, row) in a.iter_mut().enumerate() {
            if k == i {
                continue;
            }
            let akj = row[j].clone();
            for (c, entry) in row.iter_mut().enumerate() {
                let mut v = &pivot * &*entry;
                if !akj.is_zero() && !pivot_row[c].is_zero() {
                    v -= &akj * &pivot_row[c];
                }
                *entry = if divisor.is_one() || v.is_zero() {
                    v
                } else {
                    v.div_exact(&divisor).expect("fraction-free elimination step is exact")
                };
            }
        }
        divisor = pivot;
        pivots.push(j);
        i += 1;
    }
    Echelon { rows: a, den: divisor, pivots, swaps }
}

/// Multiplies every row by a common multiple of its denominators, giving
/// Laurent polynomial rows spanning the same row space over `Q(x, y)`.
/// Returns the rows and the per-row multipliers.
pub fn clear_denominators(rows: &[Vec<RationalFunction>]) -> (Vec<Vec<LaurentPoly>>, Vec<LaurentPoly>) {
    let mut out = Vec::with_capacity(rows.len());
    let mut factors = Vec::with_capacity(rows.len());
    for row in rows {
        let mut dens: Vec<&LaurentPoly> = Vec::new();
        for e in row {
            let d = e.denominator();
            if !d.is_one() && !dens.contains(&d) {
                dens.push(d);
            }
        }
        let l = dens.iter().fold(LaurentPoly::one(), |acc, d| &acc * *d);
        out.push(
            row.iter()
                .map(|e| {
                    if e.is_zero() {
                        LaurentPoly::zero()
                    } else {
                        e.numerator() * &l.div_exact(e.denominator()).expect("denominator divides row multiplier")
                    }
                })
                .collect(),
        );
        factors.push(l);
    }
    (out, factors)
}

fn poly_rows(a: &FieldMatrix) -> Vec<Vec<LaurentPoly>> {
    clear_denominators(&a.rows_vec()).0
}

fn dot(row: &[LaurentPoly], v: &[LaurentPoly]) -> LaurentPoly {
    row.iter()
        .zip(v)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .map(|(a, b)| a * b)
        .sum()
}

/// Reduced row echelon form of `a` after clearing denominators.
pub fn field_rref(a: &FieldMatrix) -> Echelon {
    rref(poly_rows(a), a.ncols())
}

pub fn field_rank(a: &FieldMatrix) -> usize {
    field_rref(a).rank()
}

pub fn ring_rank(a: &RingMatrix) -> usize {
    rref(a.rows_vec(), a.ncols()).rank()
}

/// A basis of `ker a` over `Q(x, y)`, one vector per free column, with a `1`
/// in that column. Every vector is verified to satisfy `a v = 0` exactly.
pub fn field_kernel(a: &FieldMatrix) -> Result<Vec<Vec<RationalFunction>>> {
    kernel_of_rows(poly_rows(a), a.ncols())
}

pub fn ring_kernel(a: &RingMatrix) -> Result<Vec<Vec<RationalFunction>>> {
    kernel_of_rows(a.rows_vec(), a.ncols())
}

/// Kernel vectors scaled to have Laurent polynomial entries: the free column
/// carries `den` and pivot columns carry the negated reduced entries.
pub fn ring_kernel_integral(a: &RingMatrix) -> Result<Vec<Vec<LaurentPoly>>> {
    let rows = a.rows_vec();
    let e = rref(rows.clone(), a.ncols());
    let basis = integral_kernel(&e, a.ncols());
    for w in &basis {
        if rows.iter().any(|r| !dot(r, w).is_zero()) {
            return Err(Error::Contradiction("kernel vector is not annihilated".into()));
        }
    }
    Ok(basis)
}

fn integral_kernel(e: &Echelon, ncols: usize) -> Vec<Vec<LaurentPoly>> {
    (0..ncols)
        .filter(|c| !e.pivots.contains(c))
        .map(|f| {
            let mut w = vec![LaurentPoly::zero(); ncols];
            w[f] = e.den.clone();
            for (t, &p) in e.pivots.iter().enumerate() {
                w[p] = -&e.rows[t][f];
            }
            w
        })
        .collect()
}

fn kernel_of_rows(rows: Vec<Vec<LaurentPoly>>, ncols: usize) -> Result<Vec<Vec<RationalFunction>>> {
    let e = rref(rows.clone(), ncols);
    let mut basis = Vec::new();
    for w in integral_kernel(&e, ncols) {
        if rows.iter().any(|r| !dot(r, &w).is_zero()) {
            return Err(Error::Contradiction("kernel vector is not annihilated".into()));
        }
        basis.push(
            w.into_iter()
                .map(|p| RationalFunction::new(p, e.den.clone()).expect("pivot is nonzero"))
                .collect(),
        );
    }
    Ok(basis)
}

/// Some solution of `a x = b`, or `None` if the system is inconsistent.
pub fn field_solve(a: &FieldMatrix, b: &[RationalFunction]) -> Result<Option<Vec<RationalFunction>>> {
    if b.len() != a.nrows() {
        return Err(Error::DimensionMismatch(format!(
            "{} rows but right-hand side of length {}",
            a.nrows(),
            b.len()
        )));
    }
    let n = a.ncols();
    let augmented: Vec<Vec<RationalFunction>> = a
        .rows_vec()
        .into_iter()
        .zip(b)
        .map(|(mut r, bi)| {
            r.push(bi.clone());
            r
        })
        .collect();
    let (rows, _) = clear_denominators(&augmented);
    let e = rref(rows.clone(), n + 1);
    if e.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut w = vec![LaurentPoly::zero(); n];
    for (t, &p) in e.pivots.iter().enumerate() {
        w[p] = e.rows[t][n].clone();
    }
    for r in &rows {
        if dot(&r[..n], &w) != &e.den * &r[n] {
            return Err(Error::Contradiction("solution does not satisfy the system".into()));
        }
    }
    Ok(Some(
        w.into_iter()
            .map(|p| RationalFunction::new(p, e.den.clone()).expect("pivot is nonzero"))
            .collect(),
    ))
}

/// Inverse of a square matrix over `Q(x, y)`.
pub fn field_inverse(a: &FieldMatrix) -> Result<FieldMatrix> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
    }
    let n = a.nrows();
    let augmented: Vec<Vec<RationalFunction>> = a
        .rows_vec()
        .into_iter()
        .enumerate()
        .map(|(i, mut r)| {
            r.extend((0..n).map(|c| if c == i { RationalFunction::one() } else { RationalFunction::zero() }));
            r
        })
        .collect();
    let (rows, _) = clear_denominators(&augmented);
    let e = rref(rows, 2 * n);
    if e.pivots.len() < n || e.pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    let mut inv = FieldMatrix::zeros(n, n);
    for t in 0..n {
        for c in 0..n {
            inv[(t, c)] = RationalFunction::new(e.rows[t][n + c].clone(), e.den.clone()).expect("pivot is nonzero");
        }
    }
    Ok(inv)
}

/// Inverse of a square matrix over `R`, failing with [`Error::NotLaurent`]
/// if some entry of the inverse is not a Laurent polynomial.
pub fn ring_inverse(a: &RingMatrix) -> Result<RingMatrix> {
    let inv = field_inverse(&FieldMatrix::from(a))?;
    let mut out = RingMatrix::zeros(a.nrows(), a.ncols());
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            out[(i, j)] = inv[(i, j)]
                .as_laurent()
                .ok_or_else(|| Error::NotLaurent(format!("inverse entry ({i}, {j}) = {}", inv[(i, j)])))?;
        }
    }
    Ok(out)
}

/// Determinant over `Q(x, y)`.
pub fn field_det(a: &FieldMatrix) -> Result<RationalFunction> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
    }
    let n = a.nrows();
    if n == 0 {
        return Ok(RationalFunction::one());
    }
    let (rows, factors) = clear_denominators(&a.rows_vec());
    let e = rref(rows, n);
    if e.rank() < n {
        return Ok(RationalFunction::zero());
    }
    let signed = if e.swaps % 2 == 0 { e.den } else { -e.den };
    let scale = factors.iter().fold(LaurentPoly::one(), |acc, f| &acc * f);
    Ok(RationalFunction::new(signed, scale).expect("row multipliers are nonzero"))
}

/// Determinant of a square matrix over `R`.
pub fn ring_det(a: &RingMatrix) -> Result<LaurentPoly> {
    let d = field_det(&FieldMatrix::from(a))?;
    d.as_laurent().ok_or_else(|| Error::Contradiction("determinant of a ring matrix left R".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::lp;
    use proptest::prelude::*;

    fn rf(n: &str, d: &str) -> RationalFunction {
        RationalFunction::new(lp(n), lp(d)).unwrap()
    }

    fn ring(rows: &[&[&str]]) -> RingMatrix {
        RingMatrix::from_rows(rows.iter().map(|r| r.iter().map(|s| lp(s)).collect()).collect()).unwrap()
    }

    /// Cofactor expansion along the first row.
    fn cofactor_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
        let n = m.len();
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut acc = LaurentPoly::zero();
        for j in 0..n {
            let minor: Vec<Vec<LaurentPoly>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &m[0][j] * &cofactor_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn kernel_of_one_by_two() {
        let a = ring(&[&["x - 1", "1 - y"]]);
        let k = ring_kernel(&a).unwrap();
        assert_eq!(k.len(), 1);
        let v = &k[0];
        // proportional to (1 - y, 1 - x)
        assert_eq!(&v[0] * &rf("1 - x", "1"), &v[1] * &rf("1 - y", "1"));
        assert!(!v[0].is_zero());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(ring_rank(&ring(&[&["x", "y"], &["x^2", "x*y"]])), 1);
        assert_eq!(ring_rank(&ring(&[&["1", "0"], &["0", "y - 1"]])), 2);
        assert_eq!(ring_rank(&RingMatrix::zeros(3, 2)), 0);
    }

    #[test]
    fn inverse_of_upper_triangular() {
        let a = ring(&[&["x", "1"], &["0", "y"]]);
        let inv = ring_inverse(&a).unwrap();
        let expected = ring(&[&["x^-1", "-x^-1*y^-1"], &["0", "y^-1"]]);
        assert!(inv.same_entries(&expected));
    }

    #[test]
    fn inverse_outside_ring() {
        let a = ring(&[&["1 + x"]]);
        assert!(matches!(ring_inverse(&a), Err(Error::NotLaurent(_))));
        let fi = field_inverse(&FieldMatrix::from(&a)).unwrap();
        assert_eq!(fi[(0, 0)], rf("1", "1 + x"));
        assert_eq!(field_inverse(&FieldMatrix::from(&ring(&[&["x", "y"], &["x", "y"]]))), Err(Error::Singular));
    }

    #[test]
    fn determinants_match_cofactor_expansion() {
        let a = ring(&[&["x", "1", "0"], &["y", "x - y", "2"], &["0", "1 - x*y", "y^-1"]]);
        assert_eq!(ring_det(&a).unwrap(), cofactor_det(&a.rows_vec()));
        let swapped = ring(&[&["0", "1"], &["1", "0"]]);
        assert_eq!(ring_det(&swapped).unwrap(), lp("-1"));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = FieldMatrix::from(&ring(&[&["x", "1"], &["0", "y - 1"]]));
        let b = vec![rf("1", "1"), rf("y", "1")];
        let x = field_solve(&a, &b).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), b);
        let s = FieldMatrix::from(&ring(&[&["1", "x"], &["2", "2x"]]));
        assert_eq!(field_solve(&s, &[rf("1", "1"), rf("1", "1")]).unwrap(), None);
    }

    #[test]
    fn field_entries_are_cleared() {
        let a = FieldMatrix::from_rows(vec![
            vec![rf("1", "x + 1"), rf("1", "y - 1")],
            vec![rf("y - 1", "1"), rf("x + 1", "1")],
        ])
        .unwrap();
        assert_eq!(field_rank(&a), 1);
        let k = field_kernel(&a).unwrap();
        assert_eq!(a.mul_vec(&k[0]).unwrap(), vec![RationalFunction::zero(), RationalFunction::zero()]);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-2i64..3, -2i64..3, -3i64..4), 0..3).prop_map(|ts| {
            LaurentPoly::from_terms(ts)
        })
    }

    fn arb_matrix() -> impl Strategy<Value = RingMatrix> {
        (1usize..4, 1usize..5).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(arb_poly(), c), r)
                .prop_map(|rows| RingMatrix::from_rows(rows).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn rank_plus_nullity(a in arb_matrix()) {
            let k = ring_kernel(&a).unwrap();
            prop_assert_eq!(ring_rank(&a) + k.len(), a.ncols());
            let fa = FieldMatrix::from(&a);
            for v in &k {
                prop_assert!(fa.mul_vec(v).unwrap().iter().all(RationalFunction::is_zero));
            }
        }

        #[test]
        fn det_agrees_with_cofactors(rows in (1usize..4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(arb_poly(), n), n))) {
            let a = RingMatrix::from_rows(rows.clone()).unwrap();
            prop_assert_eq!(ring_det(&a).unwrap(), cofactor_det(&rows));
        }
    }
}
