use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Nonzero invariant factors `d_1 | d_2 | ... | d_r` of an integer matrix,
/// all positive; `r` is the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| *d > &BigInt::from(1)).cloned().collect()
    }
}

/// Smith normal form by repeated row and column reduction.
pub fn smith_form(m: &IntMatrix) -> SmithForm {
    let mut a = m.rows_vec();
    let rows = a.len();
    let cols = m.ncols();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&p);
                if !q.is_zero() {
                    for j in t..cols {
                        let v = &q * &a[t][j];
                        a[i][j] -= v;
                    }
                }
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&p);
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        let v = &q * &row[t];
                        row[j] -= v;
                    }
                }
                dirty |= !a[t][j].is_zero();
            }
            if !dirty {
                // pivot must divide the rest of the block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_multiple_of(&p));
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = a[i][j].clone();
                            a[t][j] += v;
                        }
                        continue;
                    }
                }
            }
            // move the smallest nonzero entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.1 == t {
                a.swap(t, best.0);
            } else {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    SmithForm { factors: diag }
}

/// Whether `v` lies in the Z-span of the columns of `m`.
pub fn in_column_lattice(m: &IntMatrix, v: &[BigInt]) -> bool {
    let mut cols: Vec<Vec<BigInt>> = (0..m.ncols()).map(|j| m.column(j)).collect();
    cols.push(v.to_vec());
    let extended = IntMatrix::from_columns(m.nrows(), &cols).expect("column length matches");
    smith_form(m) == smith_form(&extended)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn diagonal_two_three() {
        assert_eq!(smith_form(&int(&[&[2, 0], &[0, 3]])).factors, big(&[1, 6]));
    }

    #[test]
    fn classic_example() {
        let m = int(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        assert_eq!(smith_form(&m).factors, big(&[2, 6, 12]));
        assert_eq!(smith_form(&int(&[&[0, 0], &[0, 0]])).rank(), 0);
    }

    #[test]
    fn lattice_membership() {
        let m = int(&[&[2, 0], &[0, 3]]);
        assert!(in_column_lattice(&m, &big(&[4, 9])));
        assert!(!in_column_lattice(&m, &big(&[1, 0])));
        assert!(!in_column_lattice(&int(&[&[1], &[1]]), &big(&[1, 0])));
    }

    /// Product of invariant factors equals the gcd of maximal minors; for a
    /// 2x2 matrix the determinant and the gcd of entries pin both factors.
    fn two_by_two_oracle(a: i64, b: i64, c: i64, d: i64) -> Vec<BigInt> {
        let g = a.gcd(&b).gcd(&c).gcd(&d);
        let det = (a * d - b * c).abs();
        match (g, det) {
            (0, _) => vec![],
            (g, 0) => big(&[g]),
            (g, det) => big(&[g, det / g]),
        }
    }

    proptest! {
        #[test]
        fn two_by_two_matches_minors(a in -20i64..20, b in -20i64..20, c in -20i64..20, d in -20i64..20) {
            let s = smith_form(&int(&[&[a, b], &[c, d]]));
            prop_assert_eq!(s.factors, two_by_two_oracle(a, b, c, d));
        }

        #[test]
        fn factors_form_divisor_chain(rows in prop::collection::vec(prop::collection::vec(-9i64..10, 4), 1..5)) {
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            let s = smith_form(&int(&refs));
            for w in s.factors.windows(2) {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }
    }
}
