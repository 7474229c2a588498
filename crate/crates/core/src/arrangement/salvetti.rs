use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use super::facets::{sign_less, FacetComplex};
use crate::complex::{Cell, CwComplex, EdgeWord, Letter, TwistedComplex};
use crate::error::{Error, Result};
use crate::linalg::{in_column_lattice, smith_form, IntMatrix};
use crate::ring::Monomial;

/// Cells of `Sal(A)`, indexed by the facets of the arrangement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SalLabel {
    /// `w_C` for chamber `C`.
    Vertex(usize),
    /// `a(F, C)`: from `w_C` across edge facet `F` to the other chamber.
    Edge { facet: usize, from: usize },
    /// `A(P, C)` for a vertex facet `P` and a chamber `C > P`.
    Face { vertex: usize, chamber: usize },
}

impl Cell for SalLabel {
    fn dimension(&self) -> u8 {
        match self {
            SalLabel::Vertex(_) => 0,
            SalLabel::Edge { .. } => 1,
            SalLabel::Face { .. } => 2,
        }
    }
}

impl fmt::Display for SalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SalLabel::Vertex(c) => write!(f, "w_{c}"),
            SalLabel::Edge { facet, from } => write!(f, "a(F{facet},C{from})"),
            SalLabel::Face { vertex, chamber } => write!(f, "A(P{vertex},C{chamber})"),
        }
    }
}

/// The Salvetti complex of a line arrangement, with the facet data it was
/// built from.
#[derive(Clone, Debug)]
pub struct SalvettiComplex {
    pub facets: FacetComplex,
    pub cw: CwComplex<SalLabel>,
}

impl Serialize for SalvettiComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.cw.serialize(s)
    }
}

/// Builds `Sal(A)`: a vertex per chamber, two opposite edges per edge
/// facet, and for each vertex facet `P` and chamber `C > P` a 2-cell with
/// boundary `a_1 ... a_m b_m^{-1} ... b_1^{-1}`, where the `a_i` walk
/// counterclockwise from `C` to the opposite chamber `D` and the `b_i`
/// clockwise.
pub fn build_salvetti(fc: &FacetComplex) -> Result<SalvettiComplex> {
    let vertices: Vec<SalLabel> = (0..fc.chambers.len()).map(SalLabel::Vertex).collect();
    let mut edges = Vec::with_capacity(2 * fc.edges.len());
    let mut endpoints = BTreeMap::new();
    for (f, e) in fc.edges.iter().enumerate() {
        let (c, d) = e.chambers;
        for (from, to) in [(c, d), (d, c)] {
            let label = SalLabel::Edge { facet: f, from };
            edges.push(label);
            endpoints.insert(label, (SalLabel::Vertex(from), SalLabel::Vertex(to)));
        }
    }
    let mut faces = Vec::new();
    let mut words = BTreeMap::new();
    let mut basepoints = BTreeMap::new();
    for v in 0..fc.vertices.len() {
        let order = fc.cyclic_order_at_vertex(v)?;
        let len = order.len();
        let m = len / 2;
        let step = |from: usize, to: usize| -> Result<Letter<SalLabel>> {
            let f = fc.edge_between(from, to)?;
            if !sign_less(&fc.vertices[v].signs, &fc.edges[f].signs) {
                return Err(Error::Contradiction(format!("edge facet {f} does not contain vertex {v}")));
            }
            Ok(Letter { edge: SalLabel::Edge { facet: f, from }, sign: 1 })
        };
        for s in 0..len {
            let ccw = |i: usize| order[(s + i) % len];
            let cw = |i: usize| order[(s + len - i) % len];
            let a: Vec<Letter<SalLabel>> = (1..=m).map(|i| step(ccw(i - 1), ccw(i))).collect::<Result<_>>()?;
            let b: Vec<Letter<SalLabel>> = (1..=m).map(|i| step(cw(i - 1), cw(i))).collect::<Result<_>>()?;
            let word = EdgeWord { letters: a }.concat(&EdgeWord { letters: b }.inverse());
            let label = SalLabel::Face { vertex: v, chamber: order[s] };
            faces.push(label);
            words.insert(label, word);
            basepoints.insert(label, SalLabel::Vertex(order[s]));
        }
    }
    faces.sort();
    let cw = CwComplex { vertices, edges, endpoints, faces, words, basepoints };
    cw.check_closed()?;
    Ok(SalvettiComplex { facets: fc.clone(), cw })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SalvettiCounts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
}

impl SalvettiComplex {
    pub fn counts(&self) -> SalvettiCounts {
        SalvettiCounts {
            vertices: self.cw.vertices.len(),
            edges: self.cw.edges.len(),
            faces: self.cw.faces.len(),
            euler_characteristic: self.cw.euler_characteristic(),
        }
    }

    /// Checks the cell counts against the facet counts:
    /// `|vertices| = |chambers|`, `|edges| = 2 |edge facets|`,
    /// `|faces| = sum_P |chambers around P|`.
    pub fn check_counts(&self) -> Result<()> {
        let fc = &self.facets;
        let around: usize = (0..fc.vertices.len()).map(|v| 2 * fc.vertices[v].lines.len()).sum();
        let c = self.counts();
        let expected = (fc.chambers.len(), 2 * fc.edges.len(), around);
        if (c.vertices, c.edges, c.faces) != expected {
            return Err(Error::Contradiction(format!("cell counts {c:?}, expected {expected:?}")));
        }
        let chi = fc.chambers.len() as i64 - 2 * fc.edges.len() as i64 + around as i64;
        if c.euler_characteristic != chi {
            return Err(Error::Contradiction("Euler characteristic disagrees with the facet counts".into()));
        }
        Ok(())
    }

    /// The meridian loop `a(F, C) + a(F, D)` of an edge facet, as an integer 1-chain.
    pub fn meridian(&self, facet: usize) -> Vec<BigInt> {
        let (c, d) = self.facets.edges[facet].chambers;
        let mine = [SalLabel::Edge { facet, from: c }, SalLabel::Edge { facet, from: d }];
        self.cw.edges.iter().map(|e| BigInt::from(i32::from(mine.contains(e)))).collect()
    }

    /// The twisted complex where `a(F, C)` carries the weight of the line
    /// through `F`.
    pub fn twisted(&self, weight: impl Fn(usize) -> Monomial) -> Result<TwistedComplex<SalLabel>> {
        let line_of: BTreeMap<usize, usize> = self.facets.edges.iter().enumerate().map(|(f, e)| (f, e.line)).collect();
        self.cw.twisted(|e| match e {
            SalLabel::Edge { facet, .. } => weight(line_of[facet]),
            _ => Monomial::ONE,
        })
    }
}

/// The meridian relation of one edge facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeridianRelation {
    pub facet: usize,
    pub line: usize,
    /// `a(F, C) + a(F, D)` is homologous to the meridian of the first edge
    /// facet on the same line.
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SalvettiH1 {
    pub rank: usize,
    pub torsion: Vec<String>,
    pub meridians: Vec<MeridianRelation>,
    /// One meridian per line, together with the boundaries, spans the cycles.
    pub meridians_generate: bool,
}

impl SalvettiH1 {
    pub fn passed(&self, lines: usize) -> bool {
        self.rank == lines && self.torsion.is_empty() && self.meridians.iter().all(|m| m.holds) && self.meridians_generate
    }
}

/// `H_1(Sal(A); Z)` by Smith normal form, with the meridian relations.
pub fn salvetti_h1(sc: &SalvettiComplex) -> Result<SalvettiH1> {
    let h = sc.cw.h1();
    let d2 = sc.cw.boundary_2();
    let fc = &sc.facets;
    let mut first: BTreeMap<usize, usize> = BTreeMap::new();
    let mut meridians = Vec::new();
    for (f, e) in fc.edges.iter().enumerate() {
        let f0 = *first.entry(e.line).or_insert(f);
        let diff: Vec<BigInt> = sc.meridian(f).iter().zip(sc.meridian(f0)).map(|(a, b)| a - b).collect();
        meridians.push(MeridianRelation { facet: f, line: e.line, holds: in_column_lattice(&d2, &diff) });
    }
    let mut cols: Vec<Vec<BigInt>> = (0..d2.ncols()).map(|j| d2.column(j)).collect();
    cols.extend(first.values().map(|&f| sc.meridian(f)));
    let generated = smith_form(&IntMatrix::from_columns(sc.cw.edges.len(), &cols)?);
    let cycle_rank = sc.cw.edges.len() - smith_form(&sc.cw.boundary_1()).rank();
    let meridians_generate = generated.rank() == cycle_rank && generated.torsion().is_empty();
    Ok(SalvettiH1 { rank: h.rank, torsion: h.torsion, meridians, meridians_generate })
}
