use std::collections::BTreeMap;

use super::cell::CellLabel::{self, *};
use super::chain::{EdgeWord, TwistedChain};
use super::cw::{CwComplex, TwistedComplex};
use crate::error::{Error, Result};
use crate::ring::{lp, Monomial};

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("n must be at least 2, got {n}")));
    }
    Ok(())
}

/// Edges of `Sal(F_n)` in basis order: `c_1..c_{n+1}, a_1..a_n, b_1..b_n`.
pub fn fn_edges(n: usize) -> Vec<CellLabel> {
    (1..=n + 1).map(C).chain((1..=n).map(A1)).chain((1..=n).map(B1)).collect()
}

/// 2-cells of `Sal(F_n)` in basis order: `A_{i,j}` then `B_{i,r}`.
pub fn fn_faces(n: usize) -> Vec<CellLabel> {
    let a = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| A2(i, j)));
    let b = (1..=n).flat_map(|i| (1..=3).map(move |r| B2(i, r)));
    a.chain(b).collect()
}

/// The `A_{i,j}` cells alone, lexicographic in `(i, j)`.
pub fn fn_a_cells(n: usize) -> Vec<CellLabel> {
    fn_faces(n).into_iter().filter(|c| matches!(c, A2(..))).collect()
}

/// The `B_{i,r}` cells alone, lexicographic in `(i, r)`.
pub fn fn_b_cells(n: usize) -> Vec<CellLabel> {
    fn_faces(n).into_iter().filter(|c| matches!(c, B2(..))).collect()
}

/// Boundary word of a 2-cell of `Sal(F_n)`.
pub fn fn_boundary_word(cell: CellLabel) -> Result<EdgeWord> {
    Ok(match cell {
        A2(i, j) => EdgeWord::loop_of(&[B1(i), A1(j)], &[A1(j), B1(i)]),
        B2(i, 1) => EdgeWord::loop_of(&[A1(i), C(i + 1)], &[C(i), A1(i)]),
        B2(i, 2) => EdgeWord::loop_of(&[C(i + 1), B1(i)], &[C(i), A1(i)]),
        B2(i, 3) => EdgeWord::loop_of(&[C(i + 1), B1(i)], &[B1(i), C(i)]),
        other => return Err(Error::IndexOutOfRange(format!("{other} is not a 2-cell of Sal(F_n)"))),
    })
}

/// The weight `pi`: `a_i, b_i -> x` and `c_i -> y`.
pub fn fn_weight(e: &CellLabel) -> Monomial {
    match e {
        C(_) => Monomial::Y,
        _ => Monomial::X,
    }
}

/// `Sal(F_n)` as a CW complex: one vertex, `3n + 1` edges (all loops) and
/// `n(n-1)/2 + 3n` two-cells.
pub fn sal_fn_cw(n: usize) -> Result<CwComplex<CellLabel>> {
    check_n(n)?;
    let edges = fn_edges(n);
    let faces = fn_faces(n);
    let words: BTreeMap<CellLabel, EdgeWord> =
        faces.iter().map(|f| Ok((*f, fn_boundary_word(*f)?))).collect::<Result<_>>()?;
    Ok(CwComplex {
        vertices: vec![Vertex],
        endpoints: edges.iter().map(|e| (*e, (Vertex, Vertex))).collect(),
        basepoints: faces.iter().map(|f| (*f, Vertex)).collect(),
        edges,
        faces,
        words,
    })
}

/// The closed form of `d` on a 2-cell of `Sal(F_n)`:
/// `dA_{i,j} = (x-1)(a_j - b_i)`, `dB_{i,1} = (1-y)a_i - c_i + x c_{i+1}`,
/// `dB_{i,2} = -y a_i + y b_i - c_i + c_{i+1}`, `dB_{i,3} = (y-1)b_i - x c_i + c_{i+1}`.
pub fn fn_differential_closed_form(cell: CellLabel) -> Result<TwistedChain> {
    let t = |terms: &[(CellLabel, &str)]| TwistedChain::from_terms(1, terms.iter().map(|(l, c)| (*l, lp(c))));
    match cell {
        A2(i, j) => t(&[(A1(j), "x - 1"), (B1(i), "1 - x")]),
        B2(i, 1) => t(&[(A1(i), "1 - y"), (C(i), "-1"), (C(i + 1), "x")]),
        B2(i, 2) => t(&[(A1(i), "-y"), (B1(i), "y"), (C(i), "-1"), (C(i + 1), "1")]),
        B2(i, 3) => t(&[(B1(i), "y - 1"), (C(i), "-x"), (C(i + 1), "1")]),
        other => Err(Error::IndexOutOfRange(format!("{other} is not a 2-cell of Sal(F_n)"))),
    }
}

/// The 2-cells on which the computed differential differs from
/// [`fn_differential_closed_form`]; empty when all agree.
pub fn check_differential(n: usize) -> Result<Vec<CellLabel>> {
    let tc = sal_fn(n)?;
    let mut bad = Vec::new();
    for f in &tc.faces {
        if tc.differential(&TwistedChain::cell(*f))? != fn_differential_closed_form(*f)? {
            bad.push(*f);
        }
    }
    Ok(bad)
}

/// The twisted chain complex `C_*(F_n; Γ_π)`.
pub fn sal_fn(n: usize) -> Result<TwistedComplex<CellLabel>> {
    sal_fn_cw(n)?.twisted(fn_weight)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(terms: &[(CellLabel, &str)]) -> TwistedChain {
        TwistedChain::from_terms(1, terms.iter().map(|(l, p)| (*l, lp(p)))).unwrap()
    }

    fn d(tc: &TwistedComplex<CellLabel>, cell: CellLabel) -> TwistedChain {
        tc.differential(&TwistedChain::cell(cell)).unwrap()
    }

    #[test]
    fn counts() {
        let tc = sal_fn(2).unwrap();
        assert_eq!(tc.edges.len(), 7);
        assert_eq!(tc.faces.len(), 7);
        assert_eq!(sal_fn(5).unwrap().faces.len(), 10 + 15);
        assert!(sal_fn(1).is_err());
    }

    #[test]
    fn differential_formulas_n2() {
        let tc = sal_fn(2).unwrap();
        assert_eq!(d(&tc, A2(1, 2)), chain(&[(A1(2), "x - 1"), (B1(1), "1 - x")]));
        assert_eq!(d(&tc, B2(1, 1)), chain(&[(A1(1), "1 - y"), (C(1), "-1"), (C(2), "x")]));
        assert_eq!(d(&tc, B2(1, 2)), chain(&[(A1(1), "-y"), (B1(1), "y"), (C(1), "-1"), (C(2), "1")]));
        assert_eq!(d(&tc, B2(1, 3)), chain(&[(B1(1), "y - 1"), (C(1), "-x"), (C(2), "1")]));
        assert!(tc.differential(&TwistedChain::zero(2)).unwrap().is_zero());
        assert!(tc.differential(&TwistedChain::cell(Vertex)).is_err());
    }

    #[test]
    fn closed_forms() {
        for n in 2..=4 {
            assert!(check_differential(n).unwrap().is_empty());
        }
        assert!(fn_differential_closed_form(A1(1)).is_err());
    }

    #[test]
    fn untwisted_columns() {
        let tc = sal_fn(2).unwrap();
        let m = tc.untwist();
        let col = |f: CellLabel| m.column(tc.faces.iter().position(|c| *c == f).unwrap());
        let row = |e: CellLabel| tc.edges.iter().position(|c| *c == e).unwrap();
        assert!(col(A2(1, 2)).iter().all(|v| *v == 0.into()));
        let b11 = col(B2(1, 1));
        assert_eq!((b11[row(C(1))].clone(), b11[row(C(2))].clone(), b11[row(A1(1))].clone()), ((-1).into(), 1.into(), 0.into()));
        let b12 = col(B2(1, 2));
        let vals: Vec<i64> = [A1(1), B1(1), C(1), C(2)].iter().map(|e| i64::try_from(&b12[row(*e)]).unwrap()).collect();
        assert_eq!(vals, vec![-1, 1, -1, 1]);
    }

    #[test]
    fn single_vertex_is_untwisted_by_tree() {
        let tc = sal_fn(3).unwrap();
        assert_eq!(tc.weights, tc.normalized_weights);
        tc.check_square_zero().unwrap();
        assert_eq!(tc.d1[(0, 0)], lp("y - 1"));
        assert_eq!(tc.weight_summary().get("a").map(String::as_str), Some("x"));
        assert_eq!(tc.weight_summary().get("c").map(String::as_str), Some("y"));
        assert_eq!(tc.d2.nrows(), 10);
    }
}
