use serde::Serialize;

use super::chain_map::homology_action;
use crate::complex::check_n;
use crate::error::{Error, Result};
use crate::homology::pairs;
use crate::linalg::{field_rank, FieldMatrix, RingMatrix};
use crate::ring::{lp, LaurentPoly};

/// Eigenvectors of `σ_1` on `V`, checked one family at a time.
#[derive(Clone, Debug, Serialize)]
pub struct EigenReport {
    pub n: usize,
    /// `σ_1(E_{1,2}) = -x^2 y E_{1,2}`.
    pub e12_scaled: bool,
    /// `σ_1(F_j) = -x F_j` for `3 <= j <= n`.
    pub f_scaled: bool,
    /// `σ_1(G_j) = G_j` for `3 <= j <= n`.
    pub g_fixed: bool,
    /// `σ_1(E_{i,j}) = E_{i,j}` for `3 <= i < j <= n`.
    pub e_fixed: bool,
    /// Labels of the family, in the column order of `family`.
    pub labels: Vec<String>,
    /// The family in `E`-coordinates, one column per vector.
    pub family: RingMatrix,
    pub full_rank: bool,
    /// `(eigenvalue, multiplicity)` as read off the family.
    pub multiplicities: Vec<(String, usize)>,
}

impl EigenReport {
    pub fn passed(&self) -> bool {
        self.e12_scaled && self.f_scaled && self.g_fixed && self.e_fixed && self.full_rank
    }
}

fn e_vector(n: usize, terms: &[((usize, usize), LaurentPoly)]) -> Vec<LaurentPoly> {
    let mut v = vec![LaurentPoly::zero(); pairs(n).len()];
    for (p, c) in terms {
        let t = pairs(n).iter().position(|q| q == p).expect("basis pair");
        v[t] += c;
    }
    v
}

/// `F_j = (xy-1)E_{1,j} - (xy-1)E_{2,j} + y(1-x)E_{1,2}` in `E`-coordinates.
pub fn f_vector(j: usize, n: usize) -> Vec<LaurentPoly> {
    e_vector(n, &[((1, j), lp("xy - 1")), ((2, j), lp("-(xy - 1)")), ((1, 2), lp("y(1 - x)"))])
}

/// `G_j = x(x^2y+1)E_{1,j} + (x^2y+1)E_{2,j} + x^2y(1-x)E_{1,2}` in `E`-coordinates.
pub fn g_vector(j: usize, n: usize) -> Vec<LaurentPoly> {
    e_vector(n, &[((1, j), lp("x(x^2y + 1)")), ((2, j), lp("x^2y + 1")), ((1, 2), lp("x^2y(1 - x)"))])
}

fn is_eigen(m: &RingMatrix, v: &[LaurentPoly], lambda: &LaurentPoly) -> Result<bool> {
    let image = m.mul_vec(v)?;
    Ok(image.iter().zip(v).all(|(a, b)| *a == lambda * b))
}

/// Checks the eigenvectors of `σ_1` on `V`: `E_{1,2}` (eigenvalue `-x^2y`),
/// `F_j` (`-x`), `G_j` and `E_{i,j}` with `3 <= i` (`1`), and that together
/// they form a basis of `V ⊗ Q(x, y)`. Needs `n >= 3`.
pub fn eigen_structure_check(n: usize) -> Result<EigenReport> {
    check_n(n)?;
    if n < 3 {
        return Err(Error::InvalidInput(format!("the eigenvector families need n >= 3, got {n}")));
    }
    let m = homology_action(1, n)?;
    let e12 = e_vector(n, &[((1, 2), lp("1"))]);
    let fs: Vec<_> = (3..=n).map(|j| f_vector(j, n)).collect();
    let gs: Vec<_> = (3..=n).map(|j| g_vector(j, n)).collect();
    let upper: Vec<(usize, usize)> = pairs(n).into_iter().filter(|(i, _)| *i >= 3).collect();
    let es: Vec<_> = upper.iter().map(|p| e_vector(n, &[(*p, lp("1"))])).collect();

    let e12_scaled = is_eigen(&m, &e12, &lp("-x^2y"))?;
    let f_scaled = fs.iter().map(|v| is_eigen(&m, v, &lp("-x"))).collect::<Result<Vec<_>>>()?.iter().all(|b| *b);
    let g_fixed = gs.iter().map(|v| is_eigen(&m, v, &lp("1"))).collect::<Result<Vec<_>>>()?.iter().all(|b| *b);
    let e_fixed = es.iter().map(|v| is_eigen(&m, v, &lp("1"))).collect::<Result<Vec<_>>>()?.iter().all(|b| *b);

    let mut labels = vec!["E_{1,2}".to_string()];
    labels.extend((3..=n).map(|j| format!("F_{j}")));
    labels.extend((3..=n).map(|j| format!("G_{j}")));
    labels.extend(upper.iter().map(|(i, j)| format!("E_{{{i},{j}}}")));
    let cols: Vec<Vec<LaurentPoly>> = std::iter::once(e12).chain(fs).chain(gs).chain(es).collect();
    let family = RingMatrix::from_columns(pairs(n).len(), &cols)?.with_labels(
        pairs(n).iter().map(|(i, j)| format!("E_{{{i},{j}}}")).collect(),
        labels.clone(),
    )?;
    let full_rank = field_rank(&FieldMatrix::from(&family)) == pairs(n).len();
    let multiplicities = vec![
        ("-x^2*y".to_string(), 1),
        ("-x".to_string(), n - 2),
        ("1".to_string(), (n - 2) + upper.len()),
    ];
    Ok(EigenReport { n, e12_scaled, f_scaled, g_fixed, e_fixed, labels, family, full_rank, multiplicities })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n4() {
        let r = eigen_structure_check(4).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.labels, vec!["E_{1,2}", "F_3", "F_4", "G_3", "G_4", "E_{3,4}"]);
        assert_eq!(r.multiplicities[2].1, 3);
    }

    #[test]
    fn n3_and_guard() {
        let r = eigen_structure_check(3).unwrap();
        assert!(r.passed());
        assert_eq!(r.family.ncols(), 3);
        assert!(eigen_structure_check(2).is_err());
    }

    #[test]
    fn wrong_eigenvalue_is_detected() {
        let m = homology_action(1, 4).unwrap();
        assert!(!is_eigen(&m, &f_vector(3, 4), &lp("x")).unwrap());
        assert!(!is_eigen(&m, &g_vector(3, 4), &lp("-x")).unwrap());
    }
}
