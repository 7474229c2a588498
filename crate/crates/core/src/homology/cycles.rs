use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::{fn_b_cells, fn_edges, sal_fn, CellLabel, TwistedChain, TwistedComplex};
use crate::complex::CellLabel::*;
use crate::error::{Error, Result};
use crate::linalg::{ring_kernel_integral, RingMatrix};
use crate::ring::{lp, LaurentPoly, RationalFunction};

/// Index pairs `(i, j)`, `1 <= i < j <= n`, in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

/// `(y - 1)(xy + 1)`, the `A_{i,j}`-coordinate of `E_{i,j}`.
pub fn e_leading() -> LaurentPoly {
    lp("(y - 1)(xy + 1)")
}

/// The three `B`-supported chains of the basis construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VKind {
    /// boundary is a multiple of `b_i` and `c_{i+1}`
    B,
    /// boundary is a multiple of `a_i` and `c_i`
    A,
    /// boundary is a multiple of `c_i - c_{i+1}`
    Zero,
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if !(1..=n).contains(&i) {
        return Err(Error::IndexOutOfRange(format!("index {i} outside 1..={n}")));
    }
    Ok(())
}

pub(crate) fn check_pair(i: usize, j: usize, n: usize) -> Result<()> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::IndexOutOfRange(format!("pair ({i}, {j}) outside 1 <= i < j <= {n}")));
    }
    Ok(())
}

fn b_chain(i: usize, coeffs: [&str; 3]) -> TwistedChain {
    TwistedChain::from_terms(2, (1..=3u8).zip(coeffs).map(|(r, c)| (B2(i, r), lp(c)))).expect("2-cells")
}

/// `V_{i,b} = -xy B_{i,1} + x(y-1) B_{i,2} + B_{i,3}`,
/// `V_{i,a} = B_{i,1} + x(y-1) B_{i,2} - xy B_{i,3}`,
/// `V_{i,0} = -y B_{i,1} + (y-1) B_{i,2} - y B_{i,3}`.
pub fn v_chain(i: usize, kind: VKind, n: usize) -> Result<TwistedChain> {
    check_index(i, n)?;
    Ok(match kind {
        VKind::B => b_chain(i, ["-xy", "x(y - 1)", "1"]),
        VKind::A => b_chain(i, ["1", "x(y - 1)", "-xy"]),
        VKind::Zero => b_chain(i, ["-y", "y - 1", "-y"]),
    })
}

/// `E_{i,j} = (y-1)(xy+1) A_{i,j} + (x-1) V_{i,b} + (x-1) V_{j,a}
/// + sum_{i<k<j} (x-1)^2 V_{k,0}`.
pub fn e_cycle(i: usize, j: usize, n: usize) -> Result<TwistedChain> {
    check_pair(i, j, n)?;
    let x1 = lp("x - 1");
    let mut e = TwistedChain::cell(A2(i, j)).scale(&e_leading());
    e.add_scaled(&x1, &v_chain(i, VKind::B, n)?)?;
    e.add_scaled(&x1, &v_chain(j, VKind::A, n)?)?;
    let sq = &x1 * &x1;
    for k in i + 1..j {
        e.add_scaled(&sq, &v_chain(k, VKind::Zero, n)?)?;
    }
    Ok(e)
}

/// All `E_{i,j}` in lexicographic order.
pub fn e_basis(n: usize) -> Result<Vec<TwistedChain>> {
    pairs(n).into_iter().map(|(i, j)| e_cycle(i, j, n)).collect()
}

/// The matrix whose columns are the `E_{i,j}` in the 2-cell basis.
pub fn e_matrix(tc: &TwistedComplex<CellLabel>, n: usize) -> Result<RingMatrix> {
    let cols: Vec<Vec<LaurentPoly>> = e_basis(n)?.iter().map(|e| e.to_vector(&tc.faces)).collect::<Result<_>>()?;
    let labels = pairs(n).iter().map(|(i, j)| format!("E_{{{i},{j}}}")).collect();
    RingMatrix::from_columns(tc.faces.len(), &cols)?.with_labels(
        tc.faces.iter().map(ToString::to_string).collect(),
        labels,
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub n: usize,
    /// Dimension of `ker d_2` over `Q(x, y)`.
    pub rank: usize,
    /// Whether every `E_{i,j}` is a cycle.
    pub e_are_cycles: bool,
    /// Whether the `E_{i,j}` span the computed kernel.
    pub e_span_kernel: bool,
}

impl KernelReport {
    /// Rank `n(n-1)/2` with the `E`-cycles as a basis.
    pub fn passed(&self) -> bool {
        self.rank == self.n * (self.n - 1) / 2 && self.e_are_cycles && self.e_span_kernel
    }
}

/// Computes `ker d_2` over `Q(x, y)` by elimination and checks that the
/// `E_{i,j}` span it: every kernel vector is solved against the `E`-matrix.
///
/// The `A`-rows of the `E`-matrix are `(y-1)(xy+1)` times the identity, so the
/// solution is read off those rows and the full system is then re-checked
/// exactly. Since the `E_{i,j}` are cycles, spanning plus equal counts also
/// makes them a basis.
pub fn kernel_rank(n: usize) -> Result<KernelReport> {
    let tc = sal_fn(n)?;
    let kernel = ring_kernel_integral(&tc.d2)?;
    let es = e_basis(n)?;
    let e_are_cycles = es.iter().map(|e| tc.is_cycle(e)).collect::<Result<Vec<bool>>>()?.into_iter().all(|b| b);
    let mut solved = true;
    for v in &kernel {
        let u = TwistedChain::from_vector(2, &tc.faces, v)?;
        match e_coordinates_in(&tc, &u, n) {
            Ok(_) => {}
            Err(Error::Contradiction(_)) => solved = false,
            Err(e) => return Err(e),
        }
    }
    let e_span_kernel = e_are_cycles && solved && kernel.len() == es.len();
    Ok(KernelReport { n, rank: kernel.len(), e_are_cycles, e_span_kernel })
}

#[derive(Clone, Debug, Serialize)]
pub struct EtaReport {
    pub n: usize,
    /// `B` cells in the order used, `B_{i,r} > B_{i+1,s}`.
    pub order: Vec<String>,
    /// The matrix of `eta . d` restricted to the span of the `B` cells.
    pub matrix: RingMatrix,
    pub upper_triangular: bool,
    pub lower_triangular: bool,
    pub diagonal_nonzero: bool,
    /// Diagonal evaluated at `x = 2, y = 3`.
    pub diagonal_at_2_3: Vec<String>,
}

impl EtaReport {
    pub fn passed(&self) -> bool {
        (self.upper_triangular || self.lower_triangular) && self.diagonal_nonzero
    }
}

/// The map `eta: C_1 -> W` onto the span of the `B` cells.
pub fn eta(e: CellLabel, n: usize) -> Result<TwistedChain> {
    match e {
        A1(i) => {
            check_index(i, n)?;
            Ok(b_chain(i, ["-(xy - y + 1)", "-(y - 1)", "y"]))
        }
        B1(i) => {
            check_index(i, n)?;
            Ok(b_chain(i, ["-xy", "x(y - 1)", "1"]))
        }
        C(i) if i == n + 1 => Ok(TwistedChain::zero(2)),
        C(i) => {
            check_index(i, n)?;
            Ok(b_chain(i, ["-y(y - 1)", "(y - 1)^2", "-y(y - 1)"]))
        }
        other => Err(Error::IndexOutOfRange(format!("{other} is not an edge of Sal(F_n)"))),
    }
}

/// Builds the matrix of `eta . d` on the span `W` of the `B` cells, with `W`
/// ordered so that `B_{i,r}` precedes `B_{i+1,s}` in the descending sense
/// (`B_{n,*}` first), and checks it is triangular with nonzero diagonal.
pub fn verify_eta_triangular(n: usize) -> Result<EtaReport> {
    let tc = sal_fn(n)?;
    let mut order = fn_b_cells(n);
    order.sort_by_key(|c| match c {
        B2(i, r) => (std::cmp::Reverse(*i), *r),
        _ => unreachable!(),
    });
    let size = order.len();
    let mut m = RingMatrix::zeros(size, size);
    for (col, cell) in order.iter().enumerate() {
        let boundary = tc.differential(&TwistedChain::cell(*cell))?;
        let mut image = TwistedChain::zero(2);
        for e in fn_edges(n) {
            image.add_scaled(&boundary.coeff(&e), &eta(e, n)?)?;
        }
        for (row, v) in image.to_vector(&order)?.into_iter().enumerate() {
            m[(row, col)] = v;
        }
    }
    let labels: Vec<String> = order.iter().map(ToString::to_string).collect();
    let m = m.with_labels(labels.clone(), labels.clone())?;
    let upper = (0..size).all(|r| (0..r).all(|c| m[(r, c)].is_zero()));
    let lower = (0..size).all(|r| (r + 1..size).all(|c| m[(r, c)].is_zero()));
    let diagonal_nonzero = (0..size).all(|k| !m[(k, k)].is_zero());
    let diagonal_at_2_3 = (0..size)
        .map(|k| m[(k, k)].eval_int(2, 3).map(|v| v.to_string()))
        .collect::<Result<_>>()?;
    Ok(EtaReport {
        n,
        order: labels,
        matrix: m,
        upper_triangular: upper,
        lower_triangular: lower,
        diagonal_nonzero,
        diagonal_at_2_3,
    })
}

/// Coordinates of a cycle over `{E_{i,j}}`: the `A_{i,j}`-coordinate divided
/// by `(y-1)(xy+1)`. The full identity `(y-1)(xy+1) u = sum A_{i,j}(u) E_{i,j}`
/// is re-checked, which also confirms every `B`-coordinate.
pub fn e_coordinates(u: &TwistedChain, n: usize) -> Result<BTreeMap<(usize, usize), RationalFunction>> {
    let tc = sal_fn(n)?;
    e_coordinates_in(&tc, u, n)
}

pub(crate) fn e_coordinates_in(
    tc: &TwistedComplex<CellLabel>,
    u: &TwistedChain,
    n: usize,
) -> Result<BTreeMap<(usize, usize), RationalFunction>> {
    if !tc.is_cycle(u)? {
        return Err(Error::NotACycle);
    }
    let lead = e_leading();
    let mut residual = u.scale(&lead);
    let mut coords = BTreeMap::new();
    for (i, j) in pairs(n) {
        let alpha = u.coeff(&A2(i, j));
        if alpha.is_zero() {
            continue;
        }
        residual.add_scaled(&-&alpha, &e_cycle(i, j, n)?)?;
        coords.insert((i, j), RationalFunction::new(alpha, lead.clone())?);
    }
    if !residual.is_zero() {
        return Err(Error::Contradiction(format!("cycle is not a combination of the E_ij: residual {residual}")));
    }
    Ok(coords)
}

/// The `Z[H]`-coordinates over `{E_{i,j}}` if they exist, i.e. whether the
/// cycle lies in the span `V` of the `E_{i,j}`.
pub fn v_membership(u: &TwistedChain, n: usize) -> Result<Option<BTreeMap<(usize, usize), LaurentPoly>>> {
    let coords = e_coordinates(u, n)?;
    Ok(coords
        .into_iter()
        .map(|(k, v)| v.as_laurent().map(|p| (k, p)))
        .collect::<Option<BTreeMap<_, _>>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{field_solve, ring_rank, FieldMatrix};

    fn chain1(terms: &[(CellLabel, &str)]) -> TwistedChain {
        TwistedChain::from_terms(1, terms.iter().map(|(l, p)| (*l, lp(p)))).unwrap()
    }

    #[test]
    fn v_boundaries() {
        let tc = sal_fn(2).unwrap();
        let d = |k| tc.differential(&v_chain(1, k, 2).unwrap()).unwrap();
        assert_eq!(d(VKind::B), chain1(&[(B1(1), "(y - 1)(xy + 1)"), (C(2), "-(x - 1)(xy + 1)")]));
        assert_eq!(d(VKind::A), chain1(&[(A1(1), "-(y - 1)(xy + 1)"), (C(1), "(x - 1)(xy + 1)")]));
        assert_eq!(d(VKind::Zero), chain1(&[(C(1), "xy + 1"), (C(2), "-(xy + 1)")]));
        assert!(v_chain(1, VKind::B, 2).unwrap().support().all(|c| matches!(c, B2(..))));
        assert!(v_chain(3, VKind::B, 2).is_err());
    }

    #[test]
    fn e_cycles_are_cycles() {
        for n in 2..=5 {
            let tc = sal_fn(n).unwrap();
            for (i, j) in pairs(n) {
                let e = e_cycle(i, j, n).unwrap();
                assert!(tc.is_cycle(&e).unwrap(), "E_{i}{j} n={n}");
                for (l, s) in pairs(n) {
                    let c = e.coeff(&A2(l, s));
                    assert_eq!(c.is_zero(), (l, s) != (i, j));
                }
            }
        }
        assert_eq!(e_cycle(1, 2, 3).unwrap().coeff(&A2(1, 2)), lp("(y - 1)(xy + 1)"));
        assert!(e_cycle(2, 2, 3).is_err());
    }

    #[test]
    fn kernel_small() {
        for (n, r) in [(2, 1), (3, 3), (4, 6)] {
            let k = kernel_rank(n).unwrap();
            assert_eq!(k.rank, r);
            assert!(k.e_are_cycles && k.e_span_kernel);
        }
    }

    #[test]
    fn kernel_span_by_general_solve() {
        let n = 3;
        let tc = sal_fn(n).unwrap();
        let em = FieldMatrix::from(&e_matrix(&tc, n).unwrap());
        assert_eq!(ring_rank(&e_matrix(&tc, n).unwrap()), 3);
        for v in ring_kernel_integral(&tc.d2).unwrap() {
            let rhs: Vec<RationalFunction> = v.iter().map(|p| RationalFunction::from(p.clone())).collect();
            let c = field_solve(&em, &rhs).unwrap().expect("kernel vector lies in the E-span");
            let u = TwistedChain::from_vector(2, &tc.faces, &v).unwrap();
            let direct = e_coordinates_in(&tc, &u, n).unwrap();
            for (k, (i, j)) in pairs(n).iter().enumerate() {
                assert_eq!(direct.get(&(*i, *j)).cloned().unwrap_or_else(RationalFunction::zero), c[k]);
            }
        }
    }

    #[test]
    fn eta_is_triangular() {
        let r = verify_eta_triangular(2).unwrap();
        assert_eq!(r.matrix.nrows(), 6);
        assert!(r.passed());
        assert!(r.diagonal_at_2_3.iter().all(|v| v != "0"));
        assert!(eta(C(3), 2).unwrap().is_zero());
    }

    #[test]
    fn coordinates_and_membership() {
        let n = 4;
        let e = e_cycle(1, 2, n).unwrap();
        let c = e_coordinates(&e, n).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[&(1, 2)], RationalFunction::one());
        assert!(e_coordinates(&TwistedChain::zero(2), n).unwrap().is_empty());
        let scaled = e.scale(&lp("xy + 1"));
        let m = v_membership(&scaled, n).unwrap().unwrap();
        assert_eq!(m[&(1, 2)], lp("xy + 1"));
        assert_eq!(e_coordinates(&TwistedChain::cell(B2(1, 1)), n), Err(Error::NotACycle));
    }
}
