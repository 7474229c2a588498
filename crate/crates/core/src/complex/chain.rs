use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::cell::{Cell, CellLabel};
use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, Monomial};

/// A finitely supported `Z[H]`-combination of cells of one dimension.
#[derive(Clone, PartialEq, Eq)]
pub struct TwistedChain<L = CellLabel> {
    degree: u8,
    coeffs: BTreeMap<L, LaurentPoly>,
}

impl<L: Cell> TwistedChain<L> {
    pub fn zero(degree: u8) -> Self {
        TwistedChain { degree, coeffs: BTreeMap::new() }
    }

    /// The chain `1 * cell`.
    pub fn cell(cell: L) -> Self {
        let mut c = Self::zero(cell.dimension());
        c.coeffs.insert(cell, LaurentPoly::one());
        c
    }

    pub fn from_terms(degree: u8, terms: impl IntoIterator<Item = (L, LaurentPoly)>) -> Result<Self> {
        let mut c = Self::zero(degree);
        for (l, p) in terms {
            c.add_term(l, &p)?;
        }
        Ok(c)
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, cell: &L) -> LaurentPoly {
        self.coeffs.get(cell).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&L, &LaurentPoly)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &L> {
        self.coeffs.keys()
    }

    /// Adds `coeff * cell`, rejecting cells of the wrong dimension.
    pub fn add_term(&mut self, cell: L, coeff: &LaurentPoly) -> Result<()> {
        if cell.dimension() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: cell.dimension() });
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.coeffs.entry(cell).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    /// `self + factor * other`.
    pub fn add_scaled(&mut self, factor: &LaurentPoly, other: &TwistedChain<L>) -> Result<()> {
        if other.degree != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        if factor.is_zero() {
            return Ok(());
        }
        for (l, p) in &other.coeffs {
            self.add_term(l.clone(), &(factor * p))?;
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &TwistedChain<L>) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(&LaurentPoly::one(), other)?;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &TwistedChain<L>) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(&LaurentPoly::from(-1), other)?;
        Ok(out)
    }

    pub fn scale(&self, factor: &LaurentPoly) -> Self {
        if factor.is_zero() {
            return Self::zero(self.degree);
        }
        TwistedChain {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(l, p)| (l.clone(), factor * p)).collect(),
        }
    }

    /// Coordinates in the given ordered basis; fails if the support leaves it.
    pub fn to_vector(&self, basis: &[L]) -> Result<Vec<LaurentPoly>> {
        if let Some(l) = self.coeffs.keys().find(|l| !basis.contains(l)) {
            return Err(Error::IndexOutOfRange(format!("{l} is not a basis cell")));
        }
        Ok(basis.iter().map(|b| self.coeff(b)).collect())
    }

    pub fn from_vector(degree: u8, basis: &[L], v: &[LaurentPoly]) -> Result<Self> {
        if basis.len() != v.len() {
            return Err(Error::DimensionMismatch(format!("{} cells, {} coordinates", basis.len(), v.len())));
        }
        Self::from_terms(degree, basis.iter().cloned().zip(v.iter().cloned()))
    }

    /// Replaces every coefficient `f(x, y)` by `f(mx, my)`.
    pub fn substitute(&self, mx: Monomial, my: Monomial) -> Self {
        TwistedChain {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(l, p)| (l.clone(), p.substitute(mx, my)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
        }
    }
}

/// Panics when the degrees differ; see [`TwistedChain::checked_add`].
impl<L: Cell> Add for &TwistedChain<L> {
    type Output = TwistedChain<L>;
    fn add(self, rhs: &TwistedChain<L>) -> TwistedChain<L> {
        self.checked_add(rhs).expect("chains of equal degree")
    }
}

/// Panics when the degrees differ; see [`TwistedChain::checked_sub`].
impl<L: Cell> Sub for &TwistedChain<L> {
    type Output = TwistedChain<L>;
    fn sub(self, rhs: &TwistedChain<L>) -> TwistedChain<L> {
        self.checked_sub(rhs).expect("chains of equal degree")
    }
}

impl<L: Cell> Neg for &TwistedChain<L> {
    type Output = TwistedChain<L>;
    fn neg(self) -> TwistedChain<L> {
        self.scale(&LaurentPoly::from(-1))
    }
}

impl<L: Cell> fmt::Display for TwistedChain<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (l, p)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if p.is_one() {
                write!(f, "{l}")?;
            } else {
                write!(f, "({p})*{l}")?;
            }
        }
        Ok(())
    }
}

impl<L: Cell> fmt::Debug for TwistedChain<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwistedChain[{}]({self})", self.degree)
    }
}

/// `{"degree":h,"terms":[[label, poly], ...]}` in basis order.
impl<L: Cell> Serialize for TwistedChain<L> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<(String, &LaurentPoly)> = self.coeffs.iter().map(|(l, p)| (l.to_string(), p)).collect();
        let mut st = s.serialize_struct("TwistedChain", 2)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// One letter `edge^sign` of an edge path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Letter<L> {
    pub edge: L,
    pub sign: i8,
}

/// A word in the edges of a complex, read left to right as a path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeWord<L = CellLabel> {
    pub letters: Vec<Letter<L>>,
}

impl<L: Cell> EdgeWord<L> {
    pub fn empty() -> Self {
        EdgeWord { letters: Vec::new() }
    }

    /// The word of positive letters `e_1 e_2 ... e_k`.
    pub fn path(edges: &[L]) -> Self {
        EdgeWord { letters: edges.iter().map(|e| Letter { edge: e.clone(), sign: 1 }).collect() }
    }

    pub fn inverse(&self) -> Self {
        EdgeWord {
            letters: self.letters.iter().rev().map(|l| Letter { edge: l.edge.clone(), sign: -l.sign }).collect(),
        }
    }

    pub fn concat(&self, other: &EdgeWord<L>) -> Self {
        EdgeWord { letters: self.letters.iter().chain(&other.letters).cloned().collect() }
    }

    /// `u v^{-1}`, the shape of every boundary word.
    pub fn loop_of(u: &[L], v: &[L]) -> Self {
        Self::path(u).concat(&Self::path(v).inverse())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The image of the word under the weight map, a monomial of `H`.
    pub fn weight(&self, pi: impl Fn(&L) -> Monomial) -> Monomial {
        self.letters.iter().fold(Monomial::ONE, |acc, l| acc * pi(&l.edge).pow(l.sign as i64))
    }

    /// Replaces each letter by the word `f(edge)` (or its inverse), dropping
    /// letters mapped to `None`.
    pub fn substitute<M: Cell>(&self, f: impl Fn(&L) -> Option<EdgeWord<M>>) -> EdgeWord<M> {
        let mut out = EdgeWord::empty();
        for l in &self.letters {
            if let Some(w) = f(&l.edge) {
                out = out.concat(&if l.sign > 0 { w } else { w.inverse() });
            }
        }
        out
    }
}

impl<L: Cell> fmt::Display for EdgeWord<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if l.sign > 0 {
                write!(f, "{}", l.edge)?;
            } else {
                write!(f, "{}^-1", l.edge)?;
            }
        }
        Ok(())
    }
}

/// `[[label, sign], ...]`.
impl<L: Cell> Serialize for EdgeWord<L> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<(String, i8)> = self.letters.iter().map(|l| (l.edge.to_string(), l.sign)).collect();
        v.serialize(s)
    }
}

/// The twisted 1-chain of a word: letter `i` contributes `ε_i π^{(i)} α_i`,
/// where `π^{(i)}` is the weight of the prefix `α_1^{ε_1} ... α_{i-1}^{ε_{i-1}}`,
/// extended by `α_i^{-1}` when `ε_i = -1`.
pub fn word_to_chain<L: Cell>(w: &EdgeWord<L>, pi: impl Fn(&L) -> Monomial) -> TwistedChain<L> {
    let mut chain = TwistedChain::zero(1);
    let mut prefix = Monomial::ONE;
    for l in &w.letters {
        let m = pi(&l.edge);
        if l.sign > 0 {
            chain.add_term(l.edge.clone(), &LaurentPoly::from(prefix)).expect("edge letter");
            prefix = prefix * m;
        } else {
            prefix = prefix / m;
            chain.add_term(l.edge.clone(), &-LaurentPoly::from(prefix)).expect("edge letter");
        }
    }
    chain
}
