use std::collections::{BTreeMap, BTreeSet};

use super::cell::CellLabel::{self, *};
use super::chain::{EdgeWord, Letter};
use super::cw::CwComplex;
use super::fibre::{check_n, fn_boundary_word};
use crate::error::{Error, Result};

/// `(source, target)` of an edge of `Sal(A_n)/Σ2`.
pub fn quotient_endpoints(e: CellLabel) -> Result<(CellLabel, CellLabel)> {
    Ok(match e {
        CE(i) => (P(i, i), P(i, i)),
        AE(i, j) => (P(i, j), P(i, j + 1)),
        AbarE(i, j) => (P(i, j + 1), P(i, j)),
        BE(i, j) => (P(i + 1, j + 1), P(i, j + 1)),
        BbarE(i, j) => (P(i, j + 1), P(i + 1, j + 1)),
        other => return Err(Error::IndexOutOfRange(format!("{other} is not an edge of Sal(A_n)/S2"))),
    })
}

/// Boundary word of a 2-cell of `Sal(A_n)/Σ2`.
pub fn quotient_boundary_word(cell: CellLabel) -> Result<EdgeWord> {
    Ok(match cell {
        A4(i, j, 1) => EdgeWord::loop_of(&[BE(i, j - 1), AE(i, j)], &[AE(i + 1, j), BE(i, j)]),
        A4(i, j, 2) => EdgeWord::loop_of(&[AbarE(i + 1, j), BE(i, j - 1)], &[BE(i, j), AbarE(i, j)]),
        A4(i, j, 3) => EdgeWord::loop_of(&[AE(i, j), BbarE(i, j)], &[BbarE(i, j - 1), AE(i + 1, j)]),
        A4(i, j, 4) => EdgeWord::loop_of(&[BbarE(i, j), AbarE(i + 1, j)], &[AbarE(i, j), BbarE(i, j - 1)]),
        B4(i, 1) => EdgeWord::loop_of(&[AE(i, i), BbarE(i, i), CE(i + 1)], &[CE(i), AE(i, i), BbarE(i, i)]),
        B4(i, 2) => EdgeWord::loop_of(&[BbarE(i, i), CE(i + 1), BE(i, i)], &[AbarE(i, i), CE(i), AE(i, i)]),
        B4(i, 3) => EdgeWord::loop_of(&[CE(i + 1), BE(i, i), AbarE(i, i)], &[BE(i, i), AbarE(i, i), CE(i)]),
        other => return Err(Error::IndexOutOfRange(format!("{other} is not a 2-cell of Sal(A_n)/S2"))),
    })
}

/// `Sal(A_n)/Σ2`: vertices `P_{i,j}` (`1 <= i <= j <= n+1`), edges `c_i`,
/// `a_{i,j}`, `abar_{i,j}`, `b_{i,j}`, `bbar_{i,j}` and 2-cells
/// `A_{i,j,r}`, `B_{i,r}`. Every boundary word is checked to close up.
pub fn sal_an_mod_sigma2(n: usize) -> Result<CwComplex<CellLabel>> {
    check_n(n)?;
    let vertices: Vec<CellLabel> = (1..=n + 1).flat_map(|i| (i..=n + 1).map(move |j| P(i, j))).collect();
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
    let mut edges: Vec<CellLabel> = (1..=n + 1).map(CE).collect();
    for kind in [AE, AbarE, BE, BbarE] {
        edges.extend(pairs.iter().map(|&(i, j)| kind(i, j)));
    }
    let mut faces: Vec<CellLabel> = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            faces.extend((1..=4).map(|r| A4(i, j, r)));
        }
    }
    faces.extend((1..=n).flat_map(|i| (1..=3).map(move |r| B4(i, r))));

    let endpoints: BTreeMap<CellLabel, (CellLabel, CellLabel)> =
        edges.iter().map(|e| Ok((*e, quotient_endpoints(*e)?))).collect::<Result<_>>()?;
    let words: BTreeMap<CellLabel, EdgeWord> =
        faces.iter().map(|f| Ok((*f, quotient_boundary_word(*f)?))).collect::<Result<_>>()?;
    let basepoints = words
        .iter()
        .map(|(f, w)| {
            let first = &w.letters[0];
            let (s, t) = endpoints[&first.edge];
            (*f, if first.sign > 0 { s } else { t })
        })
        .collect();
    let cw = CwComplex { vertices, edges, endpoints, faces, words, basepoints };
    cw.check_closed()?;
    Ok(cw)
}

/// Cancels adjacent `e e^{-1}` pairs.
pub fn free_reduce(w: &EdgeWord) -> EdgeWord {
    let mut out: Vec<Letter<CellLabel>> = Vec::new();
    for l in &w.letters {
        match out.last() {
            Some(prev) if prev.edge == l.edge && prev.sign == -l.sign => {
                out.pop();
            }
            _ => out.push(l.clone()),
        }
    }
    EdgeWord { letters: out }
}

/// Checks the passage from `Sal(A_n)/Σ2` to `Sal(F_n)`.
///
/// The cells `A_{i,j,4}` form a disc `K` (Euler characteristic 1) whose
/// edges are all barred edges except `abar_{1,1}` and `bbar_{n,n}`; these two
/// hang off `K` as pendant edges ending at `P_{1,1}` and `P_{n+1,n+1}`, so
/// `K` together with them is contractible and contains every vertex and
/// every barred edge. After collapsing it, sending `a_{i,j} -> a_j` and
/// `b_{i,j} -> b_i`, the bigons `A_{i,j,2}`, `A_{i,j,3}` become trivial and
/// the remaining boundary words are exactly those of `Sal(F_n)`.
pub fn check_collapse(n: usize) -> Result<()> {
    let cw = sal_an_mod_sigma2(n)?;
    let k_faces: Vec<CellLabel> = cw.faces.iter().copied().filter(|f| matches!(f, A4(_, _, 4))).collect();
    let k_edges: BTreeSet<CellLabel> =
        k_faces.iter().flat_map(|f| cw.words[f].letters.iter().map(|l| l.edge)).collect();
    let k_vertices: BTreeSet<CellLabel> =
        k_edges.iter().flat_map(|e| [cw.endpoints[e].0, cw.endpoints[e].1]).collect();
    let chi_k = k_vertices.len() as i64 - k_edges.len() as i64 + k_faces.len() as i64;
    if chi_k != 1 {
        return Err(Error::Contradiction(format!("K has Euler characteristic {chi_k}")));
    }
    let bars: BTreeSet<CellLabel> = cw.edges.iter().copied().filter(|e| matches!(e, AbarE(..) | BbarE(..))).collect();
    let pendant: BTreeSet<CellLabel> = bars.difference(&k_edges).copied().collect();
    if pendant != BTreeSet::from([AbarE(1, 1), BbarE(n, n)]) || !k_edges.is_subset(&bars) {
        return Err(Error::Contradiction("unexpected edge set of K".into()));
    }
    let mut reached = k_vertices.clone();
    for e in &pendant {
        let (s, t) = cw.endpoints[e];
        // exactly one endpoint on K, so the edge is pendant
        if reached.contains(&s) == reached.contains(&t) {
            return Err(Error::Contradiction(format!("{e} is not a pendant edge of K")));
        }
        reached.extend([s, t]);
    }
    if reached.len() != cw.vertices.len() {
        return Err(Error::Contradiction("K misses a vertex".into()));
    }
    let collapse = |e: &CellLabel| -> Option<EdgeWord> {
        match *e {
            AE(_, j) => Some(EdgeWord::path(&[A1(j)])),
            BE(i, _) => Some(EdgeWord::path(&[B1(i)])),
            CE(i) => Some(EdgeWord::path(&[C(i)])),
            _ => None,
        }
    };
    for f in &cw.faces {
        let image = free_reduce(&cw.words[f].substitute(collapse));
        let expected = match *f {
            A4(i, j, 1) => fn_boundary_word(A2(i, j))?,
            A4(..) => EdgeWord::empty(),
            B4(i, r) => fn_boundary_word(B2(i, r))?,
            _ => unreachable!(),
        };
        if image != expected {
            return Err(Error::Contradiction(format!("collapse of {f} gives {image}, expected {expected}")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{sal_fn_cw, Cell};

    #[test]
    fn counts_n3() {
        let cw = sal_an_mod_sigma2(3).unwrap();
        assert_eq!(cw.vertices.len(), 10);
        assert_eq!(cw.edges.len(), 4 + 4 * 6);
        assert_eq!(sal_an_mod_sigma2(2).unwrap().faces.len(), 10);
        assert!(cw.vertices.iter().all(|v| v.dimension() == 0 && v.in_range(3)));
    }

    #[test]
    fn source_target_table() {
        assert_eq!(quotient_endpoints(AE(1, 2)).unwrap(), (P(1, 2), P(1, 3)));
        assert_eq!(quotient_endpoints(AbarE(1, 2)).unwrap(), (P(1, 3), P(1, 2)));
        assert_eq!(quotient_endpoints(BE(1, 2)).unwrap(), (P(2, 3), P(1, 3)));
        assert_eq!(quotient_endpoints(BbarE(1, 2)).unwrap(), (P(1, 3), P(2, 3)));
        assert_eq!(quotient_endpoints(CE(2)).unwrap(), (P(2, 2), P(2, 2)));
    }

    #[test]
    fn collapse_and_homology() {
        for n in 2..=5 {
            check_collapse(n).unwrap();
            let q = sal_an_mod_sigma2(n).unwrap();
            let f = sal_fn_cw(n).unwrap();
            assert_eq!(q.h1().rank, n + 1);
            assert!(q.h1().torsion.is_empty());
            assert_eq!(q.euler_characteristic(), f.euler_characteristic());
        }
    }
}
