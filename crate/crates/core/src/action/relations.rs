use std::fmt;

use serde::Serialize;

use super::braid::{check_k, lkb_generator};
use super::chain_map::{homology_action, kernel_action};
use super::fork::fork_basis_action;
use crate::complex::check_n;
use crate::error::{Error, Result};
use crate::linalg::{field_det, FieldMatrix, Matrix, Scalar};

/// Where the braid relations are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// The matrices `ρ_k` from the closed formulas.
    Matrix,
    /// The action of the chain maps `S_k` on `ker d_2`, over `Q(x, y)`.
    Chain,
    /// The action on the `E`-basis, required to be over `Z[H]`.
    Homology,
    /// The action in the basis of fork classes.
    Fork,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Level::Matrix => "matrix",
            Level::Chain => "chain",
            Level::Homology => "homology",
            Level::Fork => "fork",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Relation {
    pub relation: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub level: Level,
    pub relations: Vec<Relation>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }
}

fn relations_of<T: Scalar>(n: usize, level: Level, gens: &[Matrix<T>]) -> Result<RelationReport> {
    let g = |k: usize| &gens[k - 1];
    let mut relations = Vec::new();
    for k in 1..n.saturating_sub(1) {
        let lhs = g(k).mul(g(k + 1))?.mul(g(k))?;
        let rhs = g(k + 1).mul(g(k))?.mul(g(k + 1))?;
        relations.push(Relation {
            relation: format!("s{k} s{} s{k} = s{} s{k} s{}", k + 1, k + 1, k + 1),
            holds: lhs.same_entries(&rhs),
        });
    }
    for k in 1..n {
        for l in k + 2..n {
            let lhs = g(k).mul(g(l))?;
            let rhs = g(l).mul(g(k))?;
            relations.push(Relation { relation: format!("s{k} s{l} = s{l} s{k}"), holds: lhs.same_entries(&rhs) });
        }
    }
    Ok(RelationReport { n, level, relations })
}

/// Checks `σ_k σ_{k+1} σ_k = σ_{k+1} σ_k σ_{k+1}` and `σ_k σ_l = σ_l σ_k`
/// for `|k - l| >= 2` on the matrices of the requested level.
pub fn check_braid_relations(n: usize, level: Level) -> Result<RelationReport> {
    check_n(n)?;
    let ks = 1..n;
    match level {
        Level::Matrix => relations_of(n, level, &ks.map(|k| lkb_generator(k, n)).collect::<Result<Vec<_>>>()?),
        Level::Homology => relations_of(n, level, &ks.map(|k| homology_action(k, n)).collect::<Result<Vec<_>>>()?),
        Level::Fork => relations_of(n, level, &ks.map(|k| fork_basis_action(k, n)).collect::<Result<Vec<_>>>()?),
        Level::Chain => relations_of(n, level, &ks.map(|k| kernel_action(k, n)).collect::<Result<Vec<_>>>()?),
    }
}

/// `det ρ_k` and whether it and its inverse are Laurent polynomials.
#[derive(Clone, Debug, Serialize)]
pub struct DetReport {
    pub k: usize,
    pub n: usize,
    pub det: String,
    pub is_unit: bool,
}

pub fn det_unit_check(k: usize, n: usize) -> Result<DetReport> {
    check_k(k, n)?;
    let d = field_det(&FieldMatrix::from(&lkb_generator(k, n)?))?;
    if d.is_zero() {
        return Err(Error::Singular);
    }
    let is_unit = d.as_laurent().is_some() && d.recip()?.as_laurent().is_some();
    Ok(DetReport { k, n, det: d.to_string(), is_unit })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_levels_n3() {
        for level in [Level::Matrix, Level::Chain, Level::Homology, Level::Fork] {
            let r = check_braid_relations(3, level).unwrap();
            assert_eq!(r.relations.len(), 1);
            assert!(r.passed(), "{level}");
        }
    }

    #[test]
    fn matrix_level_n5() {
        let r = check_braid_relations(5, Level::Matrix).unwrap();
        assert!(r.relations.iter().any(|x| x.relation == "s1 s4 = s4 s1"));
        assert_eq!(r.relations.len(), 3 + 3);
        assert!(r.passed());
        assert!(check_braid_relations(2, Level::Homology).unwrap().relations.is_empty());
    }

    #[test]
    fn determinants() {
        let d = det_unit_check(1, 2).unwrap();
        assert!(d.is_unit);
        assert_eq!(d.det, "-x^2*y");
        for n in 2..=4 {
            for k in 1..n {
                assert!(det_unit_check(k, n).unwrap().is_unit);
            }
        }
    }
}
