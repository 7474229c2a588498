use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::line::{check_distinct, sign_string, Line, Point, Sign, SignVector};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFacet {
    pub point: Point,
    pub signs: SignVector,
    /// Indices of the lines through the vertex.
    pub lines: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeFacet {
    /// Index of the carrier line.
    pub line: usize,
    pub point: Point,
    pub signs: SignVector,
    /// Vertex endpoints: none for a whole line, one for a ray, two for a segment.
    pub vertices: Vec<usize>,
    /// The chambers `(C, D)` on either side, `C` with the smaller sign vector.
    pub chambers: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberFacet {
    pub point: Point,
    pub signs: SignVector,
}

/// The facets of a line arrangement, each with an exact representative
/// point. Every list is sorted by sign vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetComplex {
    pub lines: Vec<Line>,
    pub vertices: Vec<VertexFacet>,
    pub edges: Vec<EdgeFacet>,
    pub chambers: Vec<ChamberFacet>,
}

/// `F < G` for sign vectors: `F` agrees with `G` wherever `F` is nonzero, and `F != G`.
pub fn sign_less(f: &[Sign], g: &[Sign]) -> bool {
    f != g && f.iter().zip(g).all(|(a, b)| *a == Sign::Zero || a == b)
}

pub fn signs_at(lines: &[Line], p: &Point) -> SignVector {
    lines.iter().map(|l| l.side(p)).collect()
}

fn add_scaled(p: &Point, t: &BigRational, d: &Point) -> Point {
    (&p.0 + t * &d.0, &p.1 + t * &d.1)
}

fn midpoint(p: &Point, q: &Point) -> Point {
    let two = BigRational::from_integer(2.into());
    ((&p.0 + &q.0) / &two, (&p.1 + &q.1) / two)
}

/// Enumerates vertices, edges and chambers of an arrangement exactly.
///
/// Edges on a line are cut at the vertices on it, with a representative at
/// each segment's midpoint and one unit of [`Line::direction`] beyond the
/// end vertices for rays. A chamber representative is found from each edge
/// by stepping off it along the normal, halving the step until the point
/// lands in the chamber adjacent to the edge.
pub fn build_facets(lines: &[Line]) -> Result<FacetComplex> {
    check_distinct(lines)?;
    let mut points: BTreeMap<Point, Vec<usize>> = BTreeMap::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if let Some(p) = lines[i].intersection(&lines[j]) {
                points.entry(p).or_default();
            }
        }
    }
    let mut vertices: Vec<VertexFacet> = points
        .into_keys()
        .map(|point| {
            let signs = signs_at(lines, &point);
            let on = (0..lines.len()).filter(|&l| signs[l] == Sign::Zero).collect();
            VertexFacet { point, signs, lines: on }
        })
        .collect();
    vertices.sort_by(|a, b| a.signs.cmp(&b.signs));

    let mut edges = Vec::new();
    for (l, line) in lines.iter().enumerate() {
        let mut on: Vec<usize> = (0..vertices.len()).filter(|&v| vertices[v].lines.contains(&l)).collect();
        on.sort_by_key(|&v| line.parameter(&vertices[v].point));
        let d = line.direction();
        let one = BigRational::one();
        let mut pieces: Vec<(Point, Vec<usize>)> = Vec::new();
        if let (Some(&first), Some(&last)) = (on.first(), on.last()) {
            pieces.push((add_scaled(&vertices[first].point, &-&one, &d), vec![first]));
            for w in on.windows(2) {
                pieces.push((midpoint(&vertices[w[0]].point, &vertices[w[1]].point), vec![w[0], w[1]]));
            }
            pieces.push((add_scaled(&vertices[last].point, &one, &d), vec![last]));
        } else {
            pieces.push((line.base_point(), Vec::new()));
        }
        for (point, vs) in pieces {
            let signs = signs_at(lines, &point);
            edges.push(EdgeFacet { line: l, point, signs, vertices: vs, chambers: (0, 0) });
        }
    }

    let max_coeff = lines
        .iter()
        .flat_map(|l| [l.a().abs(), l.b().abs(), l.c().abs()])
        .max()
        .unwrap_or_else(BigInt::zero);
    let eps0 = BigRational::new(BigInt::one(), 4 * (BigInt::one() + max_coeff) * BigInt::from(1 + lines.len()));
    let mut chamber_points: BTreeMap<SignVector, Point> = BTreeMap::new();
    let mut sides = Vec::with_capacity(edges.len());
    for e in &edges {
        let normal = lines[e.line].normal();
        let mut pair = Vec::with_capacity(2);
        for (sign, step) in [(Sign::Minus, -BigRational::one()), (Sign::Plus, BigRational::one())] {
            let mut target = e.signs.clone();
            target[e.line] = sign;
            let mut eps = &eps0 * &step;
            let point = loop {
                let p = add_scaled(&e.point, &eps, &normal);
                if signs_at(lines, &p) == target {
                    break p;
                }
                eps /= BigRational::from_integer(2.into());
            };
            chamber_points.entry(target.clone()).or_insert(point);
            pair.push(target);
        }
        sides.push(pair);
    }
    if lines.is_empty() {
        chamber_points.insert(Vec::new(), (BigRational::zero(), BigRational::zero()));
    }
    let chambers: Vec<ChamberFacet> =
        chamber_points.into_iter().map(|(signs, point)| ChamberFacet { point, signs }).collect();
    let index: BTreeMap<&SignVector, usize> = chambers.iter().enumerate().map(|(i, c)| (&c.signs, i)).collect();
    for (e, pair) in edges.iter_mut().zip(&sides) {
        e.chambers = (index[&pair[0]], index[&pair[1]]);
    }
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by(|&a, &b| edges[a].signs.cmp(&edges[b].signs));
    let edges = order.into_iter().map(|i| edges[i].clone()).collect();
    Ok(FacetComplex { lines: lines.to_vec(), vertices, edges, chambers })
}

fn half(v: &Point) -> u8 {
    if v.1.is_positive() || (v.1.is_zero() && v.0.is_positive()) {
        0
    } else {
        1
    }
}

/// Counterclockwise comparison of nonzero directions, starting from the
/// positive `x_1` axis.
fn angle_cmp(u: &Point, v: &Point) -> Ordering {
    half(u).cmp(&half(v)).then_with(|| {
        let cross = &u.0 * &v.1 - &u.1 * &v.0;
        if cross.is_positive() {
            Ordering::Less
        } else if cross.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

impl FacetComplex {
    /// Chambers `C` with `P < C`, in counterclockwise order around `P`,
    /// starting at the one with the smallest sign vector.
    pub fn cyclic_order_at_vertex(&self, v: usize) -> Result<Vec<usize>> {
        let p = self
            .vertices
            .get(v)
            .ok_or_else(|| Error::IndexOutOfRange(format!("vertex {v} of {}", self.vertices.len())))?;
        let mut around: Vec<usize> =
            (0..self.chambers.len()).filter(|&c| sign_less(&p.signs, &self.chambers[c].signs)).collect();
        let dir = |c: usize| {
            let q = &self.chambers[c].point;
            (&q.0 - &p.point.0, &q.1 - &p.point.1)
        };
        around.sort_by(|&a, &b| angle_cmp(&dir(a), &dir(b)));
        if around.len() != 2 * p.lines.len() {
            return Err(Error::Contradiction(format!(
                "{} chambers around a vertex on {} lines",
                around.len(),
                p.lines.len()
            )));
        }
        let start = (0..around.len())
            .min_by(|&a, &b| self.chambers[around[a]].signs.cmp(&self.chambers[around[b]].signs))
            .unwrap_or(0);
        around.rotate_left(start);
        Ok(around)
    }

    /// The edge facet between two chambers adjacent across one line through
    /// `v`.
    pub fn edge_between(&self, c: usize, d: usize) -> Result<usize> {
        let (sc, sd) = (&self.chambers[c].signs, &self.chambers[d].signs);
        let diff: Vec<usize> = (0..sc.len()).filter(|&i| sc[i] != sd[i]).collect();
        if diff.len() != 1 {
            return Err(Error::Contradiction(format!("chambers {c} and {d} are not adjacent")));
        }
        let mut target = sc.clone();
        target[diff[0]] = Sign::Zero;
        self.edges
            .binary_search_by(|e| e.signs.cmp(&target))
            .map_err(|_| Error::Contradiction(format!("no edge facet with signs {}", sign_string(&target))))
    }

    /// Checks that each line carries one more edge than it has vertices, that
    /// every stored sign vector is realized by its point, and that every
    /// facet has the expected number of zero signs.
    pub fn check(&self) -> Result<()> {
        for (l, _) in self.lines.iter().enumerate() {
            let v = self.vertices.iter().filter(|p| p.lines.contains(&l)).count();
            let e = self.edges.iter().filter(|e| e.line == l).count();
            if e != v + 1 {
                return Err(Error::Contradiction(format!("line {l} has {v} vertices and {e} edges")));
            }
        }
        let realized = self.vertices.iter().map(|f| (&f.point, &f.signs, 2..=self.lines.len()));
        let realized = realized
            .chain(self.edges.iter().map(|f| (&f.point, &f.signs, 1..=1)))
            .chain(self.chambers.iter().map(|f| (&f.point, &f.signs, 0..=0)));
        for (point, signs, zeros) in realized {
            if signs_at(&self.lines, point) != *signs {
                return Err(Error::Contradiction(format!("sign vector {} is not realized", sign_string(signs))));
            }
            let z = signs.iter().filter(|s| **s == Sign::Zero).count();
            if !zeros.contains(&z) {
                return Err(Error::Contradiction(format!("facet {} has {z} zero signs", sign_string(signs))));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetCounts {
    pub vertices: usize,
    pub edges: usize,
    pub chambers: usize,
}

impl FacetComplex {
    pub fn counts(&self) -> FacetCounts {
        FacetCounts { vertices: self.vertices.len(), edges: self.edges.len(), chambers: self.chambers.len() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::an_arrangement;

    fn pt(x: i64, y: i64) -> Point {
        (BigRational::from_integer(x.into()), BigRational::from_integer(y.into()))
    }

    #[test]
    fn one_line() {
        let fc = build_facets(&[Line::vertical(0)]).unwrap();
        assert_eq!(fc.counts(), FacetCounts { vertices: 0, edges: 1, chambers: 2 });
        assert_eq!(fc.edges[0].chambers, (0, 1));
        fc.check().unwrap();
    }

    #[test]
    fn crossing_lines() {
        let fc = build_facets(&[Line::vertical(0), Line::horizontal(0)]).unwrap();
        assert_eq!(fc.counts(), FacetCounts { vertices: 1, edges: 4, chambers: 4 });
        let order = fc.cyclic_order_at_vertex(0).unwrap();
        let signs: Vec<String> = order.iter().map(|&c| sign_string(&fc.chambers[c].signs)).collect();
        assert_eq!(signs, vec!["--", "+-", "++", "-+"]);
        fc.check().unwrap();
    }

    #[test]
    fn a2_vertices() {
        let fc = build_facets(&an_arrangement(2).unwrap()).unwrap();
        let pts: Vec<Point> = fc.vertices.iter().map(|v| v.point.clone()).collect();
        for p in [pt(1, 1), pt(2, 2), pt(1, 2), pt(2, 1)] {
            assert!(pts.contains(&p));
        }
        assert_eq!(fc.vertices.len(), 4);
        let deg = |p: Point| {
            let v = fc.vertices.iter().position(|v| v.point == p).unwrap();
            fc.cyclic_order_at_vertex(v).unwrap().len()
        };
        assert_eq!((deg(pt(1, 1)), deg(pt(2, 2)), deg(pt(1, 2)), deg(pt(2, 1))), (6, 6, 4, 4));
        fc.check().unwrap();
    }

    #[test]
    fn parallel_lines_and_empty() {
        let fc = build_facets(&[Line::vertical(0), Line::vertical(1), Line::vertical(5)]).unwrap();
        assert_eq!(fc.counts(), FacetCounts { vertices: 0, edges: 3, chambers: 4 });
        let fc = build_facets(&[]).unwrap();
        assert_eq!(fc.counts(), FacetCounts { vertices: 0, edges: 0, chambers: 1 });
        assert!(build_facets(&[Line::vertical(1), Line::vertical(1)]).is_err());
    }

    #[test]
    fn order_relation() {
        use Sign::*;
        assert!(sign_less(&[Zero, Plus], &[Plus, Plus]));
        assert!(!sign_less(&[Zero, Minus], &[Plus, Plus]));
        assert!(!sign_less(&[Plus, Plus], &[Plus, Plus]));
    }
}
