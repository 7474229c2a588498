use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::braid::{check_k, lkb_generator, pair_labels, pair_matrix};
use crate::complex::CellLabel::{self, *};
use crate::complex::{fn_edges, fn_faces, fn_weight, sal_fn, word_to_chain, EdgeWord, Letter, TwistedChain, TwistedComplex};
use crate::error::{Error, Result};
use crate::homology::{e_coordinates_in, e_cycle, pairs};
use crate::linalg::{FieldMatrix, IntMatrix, RingMatrix};
use crate::ring::{lp, LaurentPoly, RationalFunction};

fn word(letters: &[(CellLabel, i8)]) -> EdgeWord {
    EdgeWord { letters: letters.iter().map(|&(edge, sign)| Letter { edge, sign }).collect() }
}

/// The image of an edge of `Sal(F_n)` under the cellular map `S_k` realizing `σ_k`.
pub fn s_edge_word(k: usize, e: CellLabel, n: usize) -> Result<EdgeWord> {
    check_k(k, n)?;
    if !fn_edges(n).contains(&e) {
        return Err(Error::IndexOutOfRange(format!("{e} is not an edge of Sal(F_{n})")));
    }
    Ok(match e {
        A1(i) if k + 1 == i => word(&[(A1(i - 1), 1)]),
        A1(i) if k == i => word(&[(A1(i), 1), (A1(i + 1), 1), (A1(i), -1)]),
        B1(i) if k + 1 == i => word(&[(B1(i), 1), (B1(i - 1), 1), (B1(i), -1)]),
        B1(i) if k == i => word(&[(B1(i + 1), 1)]),
        C(i) if k + 1 == i => word(&[(A1(i - 1), 1), (B1(i), 1), (C(i), 1), (B1(i), -1), (A1(i - 1), -1)]),
        other => word(&[(other, 1)]),
    })
}

fn lin(terms: &[(&str, &TwistedChain)]) -> TwistedChain {
    let mut out = TwistedChain::zero(2);
    for (c, u) in terms {
        out.add_scaled(&lp(c), u).expect("2-chains");
    }
    out
}

/// `U_i = (x-1)(B_{i,1} - B_{i,2} - B_{i+1,2} + B_{i+1,3}) - y A_{i,i+1}`.
pub fn u_chain(i: usize) -> TwistedChain {
    let c = TwistedChain::cell;
    lin(&[
        ("x - 1", &c(B2(i, 1))),
        ("1 - x", &c(B2(i, 2))),
        ("1 - x", &c(B2(i + 1, 2))),
        ("x - 1", &c(B2(i + 1, 3))),
        ("-y", &c(A2(i, i + 1))),
    ])
}

/// `(S_k)_*` on a 2-cell of `Sal(F_n)`.
pub fn s_face_chain(k: usize, cell: CellLabel, n: usize) -> Result<TwistedChain> {
    check_k(k, n)?;
    if !fn_faces(n).contains(&cell) {
        return Err(Error::IndexOutOfRange(format!("{cell} is not a 2-cell of Sal(F_{n})")));
    }
    let c = TwistedChain::cell;
    Ok(match cell {
        A2(i, j) if k + 1 == i => lin(&[("1 - x", &c(A2(i, j))), ("x", &c(A2(i - 1, j)))]),
        A2(i, j) if k == i && i + 1 < j => c(A2(i + 1, j)),
        A2(i, j) if k == i && i + 1 == j => u_chain(i),
        A2(i, j) if i + 1 < j && j == k + 1 => c(A2(i, j - 1)),
        A2(i, j) if k == j => lin(&[("1 - x", &c(A2(i, j))), ("x", &c(A2(i, j + 1)))]),
        B2(i, 1) if k + 1 == i => lin(&[("x", &c(B2(i, 3)))]),
        B2(i, 1) if k == i => lin(&[("1", &c(B2(i, 1))), ("x", &c(B2(i + 1, 1))), ("-x^2", &c(B2(i + 1, 3)))]),
        B2(i, 2) if k + 1 == i => lin(&[
            ("1", &u_chain(i - 1)),
            ("1", &c(B2(i, 3))),
            ("-x", &c(B2(i - 1, 1))),
            ("x", &c(B2(i - 1, 2))),
        ]),
        B2(i, 2) if k == i => lin(&[
            ("1", &c(B2(i, 1))),
            ("x", &c(B2(i + 1, 2))),
            ("-x", &c(B2(i + 1, 3))),
            ("y", &u_chain(i)),
        ]),
        B2(i, 3) if k + 1 == i => lin(&[
            ("1", &c(B2(i, 3))),
            ("x", &c(B2(i - 1, 3))),
            ("-x^2", &c(B2(i - 1, 1))),
            ("-x(y - 1)", &u_chain(i - 1)),
        ]),
        B2(i, 3) if k == i => lin(&[("y - 1", &u_chain(i)), ("x", &c(B2(i, 1)))]),
        other => c(other),
    })
}

/// A chain endomorphism of `C_*(F_n; Γ_π)` in degrees 2 and 1; columns are
/// images of basis cells.
#[derive(Clone, Debug, Serialize)]
pub struct ChainEndo {
    pub k: usize,
    pub n: usize,
    pub c2: RingMatrix,
    pub c1: RingMatrix,
}

impl ChainEndo {
    pub fn apply(&self, u: &TwistedChain) -> Result<TwistedChain> {
        let (m, basis) = match u.degree() {
            2 => (&self.c2, fn_faces(self.n)),
            1 => (&self.c1, fn_edges(self.n)),
            d => return Err(Error::DegreeMismatch { expected: 2, found: d }),
        };
        TwistedChain::from_vector(u.degree(), &basis, &m.mul_vec(&u.to_vector(&basis)?)?)
    }
}

fn labelled(m: RingMatrix, cells: &[CellLabel]) -> Result<RingMatrix> {
    let labels: Vec<String> = cells.iter().map(ToString::to_string).collect();
    m.with_labels(labels.clone(), labels)
}

/// `S_k` on chains, with the chain-map identity `d S_2 = S_1 d` and the
/// invariance `π(S_k(e)) = π(e)` of every edge checked exactly.
pub fn chain_action(k: usize, n: usize) -> Result<ChainEndo> {
    check_k(k, n)?;
    let tc = sal_fn(n)?;
    chain_action_in(&tc, k, n)
}

pub(crate) fn chain_action_in(tc: &TwistedComplex<CellLabel>, k: usize, n: usize) -> Result<ChainEndo> {
    let mut c1_cols = Vec::with_capacity(tc.edges.len());
    for e in &tc.edges {
        let w = s_edge_word(k, *e, n)?;
        if w.weight(fn_weight) != fn_weight(e) {
            return Err(Error::ChainMapFailure(format!("S_{k}({e}) = {w} changes the weight")));
        }
        c1_cols.push(word_to_chain(&w, fn_weight).to_vector(&tc.edges)?);
    }
    let c2_cols: Vec<Vec<LaurentPoly>> =
        tc.faces.iter().map(|f| s_face_chain(k, *f, n)?.to_vector(&tc.faces)).collect::<Result<_>>()?;
    let c1 = labelled(RingMatrix::from_columns(tc.edges.len(), &c1_cols)?, &tc.edges)?;
    let c2 = labelled(RingMatrix::from_columns(tc.faces.len(), &c2_cols)?, &tc.faces)?;
    let lhs = tc.d2.mul(&c2)?;
    let rhs = c1.mul(&tc.d2)?;
    if !lhs.same_entries(&rhs) {
        let j = (0..tc.faces.len()).find(|&j| lhs.column(j) != rhs.column(j)).unwrap_or(0);
        return Err(Error::ChainMapFailure(format!("d S_{k} != S_{k} d on {}", tc.faces[j])));
    }
    Ok(ChainEndo { k, n, c2, c1 })
}

/// The action of `(S_k)_*` on `ker d_2` in `E`-coordinates over `Q(x, y)`.
pub fn kernel_action(k: usize, n: usize) -> Result<FieldMatrix> {
    check_k(k, n)?;
    let tc = sal_fn(n)?;
    kernel_action_in(&tc, &chain_action_in(&tc, k, n)?, n)
}

fn kernel_action_in(tc: &TwistedComplex<CellLabel>, s: &ChainEndo, n: usize) -> Result<FieldMatrix> {
    let ps = pairs(n);
    let mut cols = Vec::with_capacity(ps.len());
    for (i, j) in &ps {
        let image = s.apply(&e_cycle(*i, *j, n)?)?;
        let coords = e_coordinates_in(tc, &image, n)?;
        cols.push(ps.iter().map(|p| coords.get(p).cloned().unwrap_or_else(RationalFunction::zero)).collect());
    }
    let labels = pair_labels("E", n);
    FieldMatrix::from_columns(ps.len(), &cols)?.with_labels(labels.clone(), labels)
}

/// `σ_k` on `V` in the basis `{E_{i,j}}`, computed from the chain map and
/// required to have entries in `Z[H]` and to equal [`lkb_generator`].
pub fn homology_action(k: usize, n: usize) -> Result<RingMatrix> {
    check_k(k, n)?;
    let tc = sal_fn(n)?;
    let s = chain_action_in(&tc, k, n)?;
    let m = kernel_action_in(&tc, &s, n)?;
    let ring = pair_matrix(n, "E", |i, j| {
        let col = pairs(n).iter().position(|p| *p == (i, j)).expect("basis pair");
        let mut image = BTreeMap::new();
        for (row, p) in pairs(n).into_iter().enumerate() {
            let v = &m[(row, col)];
            if !v.is_zero() {
                let c = v.as_laurent().ok_or_else(|| {
                    Error::NotLaurent(format!("coefficient {v} of E_{{{},{}}} in σ_{k}(E_{{{i},{j}}})", p.0, p.1))
                })?;
                image.insert(p, c);
            }
        }
        Ok(image)
    })?;
    if !ring.same_entries(&lkb_generator(k, n)?) {
        return Err(Error::Contradiction(format!("σ_{k} on the E-basis differs from ρ_{k} for n = {n}")));
    }
    Ok(ring)
}

/// The map induced by `S_k` on `H_1(F_n; Z)` in the basis
/// `[a_1], ..., [a_n], [c_1]`.
#[derive(Clone, Debug, Serialize)]
pub struct H1Action {
    pub k: usize,
    pub n: usize,
    pub matrix: IntMatrix,
    /// Whether the map swaps `[a_k]` and `[a_{k+1}]` and fixes the rest.
    pub is_transposition: bool,
}

/// Coordinates of a 1-chain of `Sal(F_n)` in `H_1`, using `[b_i] = [a_i]`
/// and `[c_i] = [c_1]`.
pub fn h1_class(v: &BTreeMap<CellLabel, BigInt>, n: usize) -> Vec<BigInt> {
    let get = |e: CellLabel| v.get(&e).cloned().unwrap_or_default();
    let mut out: Vec<BigInt> = (1..=n).map(|i| get(A1(i)) + get(B1(i))).collect();
    out.push((1..=n + 1).map(|i| get(C(i))).sum());
    out
}

pub fn h1_action(k: usize, n: usize) -> Result<H1Action> {
    let s = chain_action(k, n)?;
    let ones = s.c1.eval_at_one();
    let edges = fn_edges(n);
    let generators: Vec<CellLabel> = (1..=n).map(A1).chain([C(1)]).collect();
    let mut cols = Vec::with_capacity(generators.len());
    for g in &generators {
        let j = edges.iter().position(|e| e == g).expect("generator is an edge");
        let image: BTreeMap<CellLabel, BigInt> = edges.iter().cloned().zip(ones.column(j)).collect();
        cols.push(h1_class(&image, n));
    }
    let labels: Vec<String> = generators.iter().map(|g| format!("[{g}]")).collect();
    let matrix = IntMatrix::from_columns(n + 1, &cols)?.with_labels(labels.clone(), labels)?;
    let mut expected = IntMatrix::identity(n + 1);
    expected[(k - 1, k - 1)] = 0.into();
    expected[(k, k)] = 0.into();
    expected[(k - 1, k)] = 1.into();
    expected[(k, k - 1)] = 1.into();
    let is_transposition = matrix.same_entries(&expected);
    Ok(H1Action { k, n, matrix, is_transposition })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain1(terms: &[(CellLabel, &str)]) -> TwistedChain {
        TwistedChain::from_terms(1, terms.iter().map(|(l, p)| (*l, lp(p)))).unwrap()
    }

    #[test]
    fn edge_words() {
        assert_eq!(s_edge_word(1, A1(1), 3).unwrap().to_string(), "a_1 a_2 a_1^-1");
        assert_eq!(s_edge_word(1, C(2), 3).unwrap().to_string(), "a_1 b_2 c_2 b_2^-1 a_1^-1");
        assert_eq!(s_edge_word(1, C(1), 3).unwrap().to_string(), "c_1");
        assert!(s_edge_word(1, A1(4), 3).is_err());
    }

    #[test]
    fn chain_map_n2() {
        let s = chain_action(1, 2).unwrap();
        let b11 = s.apply(&TwistedChain::cell(B2(1, 1))).unwrap();
        let expected = TwistedChain::from_terms(2, [(B2(1, 1), lp("1")), (B2(2, 1), lp("x")), (B2(2, 3), lp("-x^2"))]);
        assert_eq!(b11, expected.unwrap());
        let a1 = s.apply(&TwistedChain::cell(A1(1))).unwrap();
        assert_eq!(a1, chain1(&[(A1(1), "1 - x"), (A1(2), "x")]));
        assert_eq!(s_edge_word(1, A1(1), 2).unwrap().weight(fn_weight), fn_weight(&A1(1)));
    }

    #[test]
    fn chain_maps_hold() {
        for n in 2..=4 {
            for k in 1..n {
                chain_action(k, n).unwrap();
            }
        }
    }

    #[test]
    fn homology_matches_formulas() {
        let m = homology_action(1, 2).unwrap();
        assert_eq!(m[(0, 0)], lp("-x^2y"));
        let m = homology_action(2, 3).unwrap();
        // columns/rows in order E_12, E_13, E_23
        assert_eq!(m.column(0), vec![lp("1 - x"), lp("x"), lp("0")]);
        let m = homology_action(2, 4).unwrap();
        let c14 = m.column(2);
        assert_eq!(c14[2], lp("1"));
        assert_eq!(c14[3], lp("-y(x - 1)^2"));
        for n in 2..=4 {
            for k in 1..n {
                homology_action(k, n).unwrap();
            }
        }
    }

    #[test]
    fn kernel_action_is_laurent() {
        let m = kernel_action(1, 3).unwrap();
        assert!(m.same_entries(&FieldMatrix::from(&lkb_generator(1, 3).unwrap())));
    }

    #[test]
    fn h1_transpositions() {
        let h = h1_action(1, 3).unwrap();
        assert!(h.is_transposition);
        assert_eq!(h.matrix.column(3), vec![0.into(), 0.into(), 0.into(), BigInt::from(1)]);
        let sq = h.matrix.mul(&h.matrix).unwrap();
        assert!(sq.same_entries(&IntMatrix::identity(4)));
        for n in 2..=5 {
            for k in 1..n {
                assert!(h1_action(k, n).unwrap().is_transposition);
            }
        }
    }
}
