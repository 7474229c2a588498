use num_bigint::BigInt;
use serde::Serialize;

use crate::complex::CellLabel::{self, *};
use crate::complex::{fn_edges, sal_fn_cw};
use crate::error::{Error, Result};
use crate::linalg::{in_column_lattice, smith_form, IntMatrix};

/// Untwisted `H_1(F_n; Z)` together with the checks behind a basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H1Report {
    pub n: usize,
    pub rank: usize,
    pub torsion: Vec<String>,
    /// Every `c_i - c_1` is a boundary.
    pub c_relations: bool,
    /// Every `b_i - a_i` is a boundary.
    pub ab_relations: bool,
    /// `a_1, ..., a_n, c_1` together with the boundaries generate `Z^E`.
    pub generates: bool,
}

impl H1Report {
    pub fn passed(&self) -> bool {
        self.rank == self.n + 1 && self.torsion.is_empty() && self.c_relations && self.ab_relations && self.generates
    }
}

fn unit_difference(edges: &[CellLabel], plus: CellLabel, minus: CellLabel) -> Vec<BigInt> {
    edges
        .iter()
        .map(|e| BigInt::from(i32::from(*e == plus) - i32::from(*e == minus)))
        .collect()
}

/// `H_1(F_n; Z)` computed by Smith normal form of the untwisted boundary,
/// with the basis `{[a_1], ..., [a_n], [c_1]}` certified.
pub fn h1_fn(n: usize) -> Result<H1Report> {
    let cw = sal_fn_cw(n)?;
    let h = cw.h1();
    let d2 = cw.boundary_2();
    let edges = fn_edges(n);
    let c_relations = (2..=n + 1).all(|i| in_column_lattice(&d2, &unit_difference(&edges, C(i), C(1))));
    let ab_relations = (1..=n).all(|i| in_column_lattice(&d2, &unit_difference(&edges, B1(i), A1(i))));
    let mut cols: Vec<Vec<BigInt>> = (0..d2.ncols()).map(|j| d2.column(j)).collect();
    for g in (1..=n).map(A1).chain([C(1)]) {
        cols.push(edges.iter().map(|e| BigInt::from(i32::from(*e == g))).collect());
    }
    let all = IntMatrix::from_columns(edges.len(), &cols)?;
    let s = smith_form(&all);
    let generates = s.rank() == edges.len() && s.factors.iter().all(|f| *f == BigInt::from(1));
    if cw.boundary_1().is_zero() {
        Ok(H1Report { n, rank: h.rank, torsion: h.torsion, c_relations, ab_relations, generates })
    } else {
        Err(Error::Contradiction("Sal(F_n) has a nonzero untwisted d_1".into()))
    }
}
