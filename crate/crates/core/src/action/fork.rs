use std::collections::BTreeMap;

use serde::Serialize;

use super::braid::{check_k, pair_labels, pair_matrix};
use super::chain_map::homology_action;
use crate::complex::CellLabel::*;
use crate::complex::{sal_fn, TwistedChain};
use crate::error::{Error, Result};
use crate::homology::{check_pair, e_coordinates_in, e_cycle, e_leading, v_chain, VKind};
use crate::linalg::{ring_inverse, RingMatrix};
use crate::ring::{lp, LaurentPoly, Monomial};

/// Which chain of the fork construction to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ForkPart {
    /// `sum_{k=p+1}^{q-1} x^{k-1} B_{k,1}`.
    X1,
    /// The chain whose boundary is `(x-1)^2(xy+1)` times that of `X1`.
    X2,
    /// The cycle `X2 - (x-1)^2(xy+1) X1`, or `x^p E_{p,q}` when `q = p+1`.
    Class,
}

fn xpow(e: usize) -> LaurentPoly {
    Monomial::X.pow(e as i64).into()
}

fn fork_factor() -> LaurentPoly {
    lp("(x - 1)^2(xy + 1)")
}

/// The chains of the standard fork `T_{p,q}`.
pub fn fork_chain(p: usize, q: usize, n: usize, part: ForkPart) -> Result<TwistedChain> {
    check_pair(p, q, n)?;
    if part != ForkPart::Class && q == p + 1 {
        return Err(Error::InvalidInput(format!("X1 and X2 need q > p + 1, got ({p}, {q})")));
    }
    let x1 = || {
        TwistedChain::from_terms(2, (p + 1..q).map(|k| (B2(k, 1), xpow(k - 1))))
    };
    let x2 = || -> Result<TwistedChain> {
        let d = e_leading();
        let xm1 = lp("x - 1");
        let mut out = v_chain(p, VKind::B, n)?.scale(&(&xpow(p) * &xm1));
        out.add_scaled(&(&xpow(q - 1) * &xm1), &v_chain(q, VKind::A, n)?)?;
        out.add_term(A2(p, q), &(&xpow(q - 1) * &d))?;
        for k in p + 1..q {
            out.add_term(A2(p, k), &-&(&(&xpow(k - 1) * &xm1) * &d))?;
        }
        Ok(out)
    };
    match part {
        ForkPart::X1 => x1(),
        ForkPart::X2 => x2(),
        ForkPart::Class if q == p + 1 => Ok(e_cycle(p, q, n)?.scale(&xpow(p))),
        ForkPart::Class => {
            let mut out = x2()?;
            out.add_scaled(&-fork_factor(), &x1()?)?;
            Ok(out)
        }
    }
}

/// The boundary identity of the fork chains, with both sides and the
/// closed form computed separately.
#[derive(Clone, Debug, Serialize)]
pub struct ForkBoundaryReport {
    pub p: usize,
    pub q: usize,
    pub n: usize,
    pub d_x2: TwistedChain,
    pub scaled_d_x1: TwistedChain,
    pub closed_form: TwistedChain,
    pub passed: bool,
}

/// Checks `d X2 = (x-1)^2(xy+1) d X1` and that both equal
/// `(x-1)^2(xy+1)(-sum x^{k-1}(y-1) a_k - x^p c_{p+1} + x^{q-1} c_q)`.
pub fn verify_fork_boundary(p: usize, q: usize, n: usize) -> Result<ForkBoundaryReport> {
    check_pair(p, q, n)?;
    if q == p + 1 {
        return Err(Error::InvalidInput(format!("the fork boundary identity needs q > p + 1, got ({p}, {q})")));
    }
    let tc = sal_fn(n)?;
    let d_x2 = tc.differential(&fork_chain(p, q, n, ForkPart::X2)?)?;
    let scaled_d_x1 = tc.differential(&fork_chain(p, q, n, ForkPart::X1)?)?.scale(&fork_factor());
    let mut closed = TwistedChain::zero(1);
    for k in p + 1..q {
        closed.add_term(A1(k), &-&(&xpow(k - 1) * &lp("y - 1")))?;
    }
    closed.add_term(C(p + 1), &-xpow(p))?;
    closed.add_term(C(q), &xpow(q - 1))?;
    let closed_form = closed.scale(&fork_factor());
    let passed = d_x2 == scaled_d_x1 && d_x2 == closed_form;
    Ok(ForkBoundaryReport { p, q, n, d_x2, scaled_d_x1, closed_form, passed })
}

/// The expected `E`-coordinates `x^{q-1}E_{p,q} - sum_{k=p+1}^{q-1} x^{k-1}(x-1)E_{p,k}`.
pub fn fork_formula(p: usize, q: usize) -> BTreeMap<(usize, usize), LaurentPoly> {
    let mut out = BTreeMap::from([((p, q), xpow(q - 1))]);
    for k in p + 1..q {
        out.insert((p, k), -&(&xpow(k - 1) * &lp("x - 1")));
    }
    out
}

/// `E`-coordinates of the fork class, required to be Laurent and to equal
/// [`fork_formula`].
pub fn fork_in_e_basis(p: usize, q: usize, n: usize) -> Result<BTreeMap<(usize, usize), LaurentPoly>> {
    let tc = sal_fn(n)?;
    let class = fork_chain(p, q, n, ForkPart::Class)?;
    let coords = e_coordinates_in(&tc, &class, n)?;
    let mut out = BTreeMap::new();
    for (k, v) in coords {
        let c = v.as_laurent().ok_or_else(|| Error::NotLaurent(format!("fork ({p}, {q}) coordinate {v}")))?;
        out.insert(k, c);
    }
    if out != fork_formula(p, q) {
        return Err(Error::Contradiction(format!("fork ({p}, {q}) has E-coordinates {out:?}")));
    }
    Ok(out)
}

/// Columns are the fork classes `(p, q)` in `E`-coordinates.
pub fn fork_change_of_basis(n: usize) -> Result<RingMatrix> {
    let m = pair_matrix(n, "E", |p, q| fork_in_e_basis(p, q, n))?;
    m.with_labels(pair_labels("E", n), pair_labels("T", n))
}

/// `σ_k` in the basis of fork classes: `P^{-1} M P` with `M` the action on
/// the `E`'s and `P` the change of basis; `P^{-1}` must be over `Z[H]`.
pub fn fork_basis_action(k: usize, n: usize) -> Result<RingMatrix> {
    check_k(k, n)?;
    let p = fork_change_of_basis(n)?;
    let p_inv = ring_inverse(&p)?;
    let m = homology_action(k, n)?;
    let labels = pair_labels("T", n);
    p_inv.mul(&m)?.mul(&p)?.with_labels(labels.clone(), labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::pairs;

    fn coords(terms: &[((usize, usize), &str)]) -> BTreeMap<(usize, usize), LaurentPoly> {
        terms.iter().map(|(k, c)| (*k, lp(c))).collect()
    }

    #[test]
    fn chains() {
        assert_eq!(fork_chain(1, 2, 3, ForkPart::Class).unwrap(), e_cycle(1, 2, 3).unwrap().scale(&lp("x")));
        assert_eq!(
            fork_chain(1, 3, 3, ForkPart::X1).unwrap(),
            TwistedChain::from_terms(2, [(B2(2, 1), lp("x"))]).unwrap()
        );
        let tc = sal_fn(3).unwrap();
        assert!(tc.is_cycle(&fork_chain(1, 3, 3, ForkPart::Class).unwrap()).unwrap());
        assert!(fork_chain(1, 2, 3, ForkPart::X1).is_err());
        assert!(fork_chain(2, 4, 3, ForkPart::Class).is_err());
    }

    #[test]
    fn boundaries() {
        for (p, q, n) in [(1, 3, 3), (1, 4, 4), (2, 4, 5)] {
            assert!(verify_fork_boundary(p, q, n).unwrap().passed);
        }
        assert!(verify_fork_boundary(1, 2, 3).is_err());
    }

    #[test]
    fn e_expansions() {
        assert_eq!(fork_in_e_basis(1, 3, 3).unwrap(), coords(&[((1, 3), "x^2"), ((1, 2), "-x(x - 1)")]));
        assert_eq!(fork_in_e_basis(1, 2, 3).unwrap(), coords(&[((1, 2), "x")]));
        assert_eq!(fork_in_e_basis(2, 4, 4).unwrap(), coords(&[((2, 4), "x^3"), ((2, 3), "-x^2(x - 1)")]));
    }

    #[test]
    fn fork_basis() {
        let m = fork_basis_action(1, 2).unwrap();
        assert_eq!(m[(0, 0)], lp("-x^2y"));
        let p = fork_change_of_basis(4).unwrap();
        for (t, (_, q)) in pairs(4).into_iter().enumerate() {
            assert_eq!(p[(t, t)], xpow(q - 1));
            assert!((t + 1..6).all(|r| p[(r, t)].is_zero()));
        }
        let a = fork_basis_action(1, 3).unwrap();
        let b = fork_basis_action(2, 3).unwrap();
        let aba = a.mul(&b).unwrap().mul(&a).unwrap();
        let bab = b.mul(&a).unwrap().mul(&b).unwrap();
        assert!(aba.same_entries(&bab));
    }
}
