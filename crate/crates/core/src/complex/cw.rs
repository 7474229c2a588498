use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::cell::Cell;
use super::chain::{word_to_chain, EdgeWord, TwistedChain};
use crate::error::{Error, Result};
use crate::linalg::{smith_form, IntMatrix, RingMatrix};
use crate::ring::{LaurentPoly, Monomial};

/// A 2-dimensional CW complex given combinatorially: directed edges with
/// endpoints, and 2-cells attached along closed edge words.
#[derive(Clone, Debug)]
pub struct CwComplex<L> {
    pub vertices: Vec<L>,
    pub edges: Vec<L>,
    /// `(source, target)` of every edge.
    pub endpoints: BTreeMap<L, (L, L)>,
    pub faces: Vec<L>,
    /// Boundary word of every 2-cell, starting at `basepoints[face]`.
    pub words: BTreeMap<L, EdgeWord<L>>,
    pub basepoints: BTreeMap<L, L>,
}

/// First homology of a complex: free rank and torsion coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H1 {
    pub rank: usize,
    pub torsion: Vec<String>,
}

impl<L: Cell> CwComplex<L> {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Checks every boundary word is an edge path closing at its basepoint.
    pub fn check_closed(&self) -> Result<()> {
        for face in &self.faces {
            let word = self
                .words
                .get(face)
                .ok_or_else(|| Error::InvalidInput(format!("2-cell {face} has no boundary word")))?;
            let start = self
                .basepoints
                .get(face)
                .ok_or_else(|| Error::InvalidInput(format!("2-cell {face} has no basepoint")))?;
            let mut at = start.clone();
            for l in &word.letters {
                let (s, t) = self
                    .endpoints
                    .get(&l.edge)
                    .ok_or_else(|| Error::InvalidInput(format!("{} is not an edge", l.edge)))?;
                let (from, to) = if l.sign > 0 { (s, t) } else { (t, s) };
                if *from != at {
                    return Err(Error::Contradiction(format!(
                        "boundary of {face} breaks at {}: path is at {at}",
                        l.edge
                    )));
                }
                at = to.clone();
            }
            if at != *start {
                return Err(Error::Contradiction(format!("boundary of {face} does not close")));
            }
        }
        Ok(())
    }

    fn index(cells: &[L]) -> BTreeMap<&L, usize> {
        cells.iter().enumerate().map(|(i, c)| (c, i)).collect()
    }

    /// Untwisted boundary `C_1 -> C_0`.
    pub fn boundary_1(&self) -> IntMatrix {
        let vi = Self::index(&self.vertices);
        let mut m = IntMatrix::zeros(self.vertices.len(), self.edges.len());
        for (j, e) in self.edges.iter().enumerate() {
            let (s, t) = &self.endpoints[e];
            m[(vi[t], j)] += BigInt::from(1);
            m[(vi[s], j)] -= BigInt::from(1);
        }
        m
    }

    /// Untwisted boundary `C_2 -> C_1`: the abelianized boundary words.
    pub fn boundary_2(&self) -> IntMatrix {
        let ei = Self::index(&self.edges);
        let mut m = IntMatrix::zeros(self.edges.len(), self.faces.len());
        for (j, f) in self.faces.iter().enumerate() {
            for l in &self.words[f].letters {
                m[(ei[&l.edge], j)] += BigInt::from(l.sign);
            }
        }
        m
    }

    /// `H_1` by Smith normal form: `rank = dim ker d_1 - rank d_2`, torsion
    /// from the invariant factors of `d_2`.
    pub fn h1(&self) -> H1 {
        let r1 = smith_form(&self.boundary_1()).rank();
        let s2 = smith_form(&self.boundary_2());
        H1 {
            rank: self.edges.len() - r1 - s2.rank(),
            torsion: s2.torsion().iter().map(ToString::to_string).collect(),
        }
    }

    /// The twisted chain complex of the regular cover with deck group `H`
    /// determined by edge weights `pi`.
    ///
    /// Vertex lifts are normalized along a spanning tree: if `h(v)` is the
    /// weight of the tree path to `v`, edge `e: u -> v` carries
    /// `g_e = h(u) pi(e) h(v)^{-1}`, so `d(e) = g_e v - u` and boundary words
    /// are evaluated with the weights `g`. For a one-vertex complex `g = pi`.
    pub fn twisted(&self, pi: impl Fn(&L) -> Monomial) -> Result<TwistedComplex<L>> {
        for w in self.words.values() {
            if w.weight(&pi) != Monomial::ONE {
                return Err(Error::InvalidInput("a boundary word has nontrivial weight".into()));
            }
        }
        let h = self.tree_potential(&pi);
        let g: BTreeMap<L, Monomial> = self
            .edges
            .iter()
            .map(|e| {
                let (s, t) = &self.endpoints[e];
                (e.clone(), h[s] * pi(e) / h[t])
            })
            .collect();
        let vi = Self::index(&self.vertices);
        let mut d1 = RingMatrix::zeros(self.vertices.len(), self.edges.len());
        for (j, e) in self.edges.iter().enumerate() {
            let (s, t) = &self.endpoints[e];
            d1[(vi[t], j)] += &LaurentPoly::from(g[e]);
            d1[(vi[s], j)] -= &LaurentPoly::one();
        }
        let face_boundaries: BTreeMap<L, TwistedChain<L>> = self
            .faces
            .iter()
            .map(|f| (f.clone(), word_to_chain(&self.words[f], |e| g[e])))
            .collect();
        let cols: Vec<Vec<LaurentPoly>> = self
            .faces
            .iter()
            .map(|f| face_boundaries[f].to_vector(&self.edges))
            .collect::<Result<_>>()?;
        let d2 = RingMatrix::from_columns(self.edges.len(), &cols)?
            .with_labels(labels(&self.edges), labels(&self.faces))?;
        let d1 = d1.with_labels(labels(&self.vertices), labels(&self.edges))?;
        Ok(TwistedComplex {
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
            faces: self.faces.clone(),
            weights: self.edges.iter().map(|e| (e.clone(), pi(e))).collect(),
            normalized_weights: g,
            face_boundaries,
            d1,
            d2,
        })
    }

    fn tree_potential(&self, pi: &impl Fn(&L) -> Monomial) -> BTreeMap<L, Monomial> {
        let mut h: BTreeMap<L, Monomial> = BTreeMap::new();
        let mut incident: BTreeMap<&L, Vec<&L>> = BTreeMap::new();
        for e in &self.edges {
            let (s, t) = &self.endpoints[e];
            incident.entry(s).or_default().push(e);
            incident.entry(t).or_default().push(e);
        }
        for root in &self.vertices {
            if h.contains_key(root) {
                continue;
            }
            h.insert(root.clone(), Monomial::ONE);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for e in incident.get(u).into_iter().flatten() {
                    let (s, t) = &self.endpoints[*e];
                    if !h.contains_key(t) {
                        h.insert(t.clone(), h[s] * pi(e));
                        queue.push_back(t);
                    } else if !h.contains_key(s) {
                        h.insert(s.clone(), h[t] / pi(e));
                        queue.push_back(s);
                    }
                }
            }
        }
        h
    }
}

fn labels<L: Cell>(cells: &[L]) -> Vec<String> {
    cells.iter().map(ToString::to_string).collect()
}

/// The twisted cellular chain complex `C_2 -> C_1 -> C_0` over `Z[H]`.
#[derive(Clone, Debug)]
pub struct TwistedComplex<L: Cell> {
    pub vertices: Vec<L>,
    pub edges: Vec<L>,
    pub faces: Vec<L>,
    /// The weight `pi(e)` of every edge.
    pub weights: BTreeMap<L, Monomial>,
    /// Weights after spanning-tree normalization; equal to `weights` when
    /// there is a single vertex.
    pub normalized_weights: BTreeMap<L, Monomial>,
    pub face_boundaries: BTreeMap<L, TwistedChain<L>>,
    pub d1: RingMatrix,
    pub d2: RingMatrix,
}

impl<L: Cell> TwistedComplex<L> {
    pub fn basis(&self, degree: u8) -> &[L] {
        match degree {
            0 => &self.vertices,
            1 => &self.edges,
            _ => &self.faces,
        }
    }

    /// The `Z[H]`-linear differential on chains of degree 1 or 2.
    pub fn differential(&self, u: &TwistedChain<L>) -> Result<TwistedChain<L>> {
        match u.degree() {
            2 => {
                let mut out = TwistedChain::zero(1);
                for (f, p) in u.terms() {
                    let b = self
                        .face_boundaries
                        .get(f)
                        .ok_or_else(|| Error::IndexOutOfRange(format!("{f} is not a 2-cell")))?;
                    out.add_scaled(p, b)?;
                }
                Ok(out)
            }
            1 => {
                let v = u.to_vector(&self.edges)?;
                TwistedChain::from_vector(0, &self.vertices, &self.d1.mul_vec(&v)?)
            }
            found => Err(Error::DegreeMismatch { expected: 2, found }),
        }
    }

    pub fn is_cycle(&self, u: &TwistedChain<L>) -> Result<bool> {
        Ok(self.differential(u)?.is_zero())
    }

    /// `d_1 d_2 = 0`, checked exactly.
    pub fn check_square_zero(&self) -> Result<()> {
        if self.d1.mul(&self.d2)?.is_zero() {
            Ok(())
        } else {
            Err(Error::Contradiction("d1 d2 is not zero".into()))
        }
    }

    /// Specialization `x = y = 1` of `d_2`.
    pub fn untwist(&self) -> IntMatrix {
        self.d2.eval_at_one()
    }

    pub fn untwist_d1(&self) -> IntMatrix {
        self.d1.eval_at_one()
    }

    /// Edge weights grouped by label family (the part of the label before
    /// `_`); a family is listed once when all of its edges share a weight.
    pub fn weight_summary(&self) -> BTreeMap<String, String> {
        let mut families: BTreeMap<String, Vec<(String, Monomial)>> = BTreeMap::new();
        for (e, m) in &self.weights {
            let label = e.to_string();
            let family = label.split(['_', '(']).next().unwrap_or(&label).to_string();
            families.entry(family).or_default().push((label, *m));
        }
        let mut out = BTreeMap::new();
        for (family, members) in families {
            if members.iter().all(|(_, m)| *m == members[0].1) {
                out.insert(family, members[0].1.to_string());
            } else {
                out.extend(members.into_iter().map(|(l, m)| (l, m.to_string())));
            }
        }
        out
    }
}

/// `{"bases":{"0":[..],"1":[..],"2":[..]},"d2":matrix,"d1":matrix,"pi":{..}}`.
impl<L: Cell> Serialize for TwistedComplex<L> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let bases: BTreeMap<&str, Vec<String>> = [
            ("0", labels(&self.vertices)),
            ("1", labels(&self.edges)),
            ("2", labels(&self.faces)),
        ]
        .into_iter()
        .collect();
        let mut st = s.serialize_struct("TwistedComplex", 4)?;
        st.serialize_field("bases", &bases)?;
        st.serialize_field("d2", &self.d2)?;
        st.serialize_field("d1", &self.d1)?;
        st.serialize_field("pi", &self.weight_summary())?;
        st.end()
    }
}

/// `{"vertices":[..],"edges":[[label,source,target],..],"faces":[[label,basepoint,word],..]}`.
impl<L: Cell> Serialize for CwComplex<L> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let edges: Vec<(String, String, String)> = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = &self.endpoints[e];
                (e.to_string(), a.to_string(), b.to_string())
            })
            .collect();
        let faces: Vec<(String, String, &EdgeWord<L>)> = self
            .faces
            .iter()
            .map(|f| (f.to_string(), self.basepoints[f].to_string(), &self.words[f]))
            .collect();
        let mut st = s.serialize_struct("CwComplex", 3)?;
        st.serialize_field("vertices", &labels(&self.vertices))?;
        st.serialize_field("edges", &edges)?;
        st.serialize_field("faces", &faces)?;
        st.end()
    }
}
