use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::cycles::{check_pair, e_cycle, e_leading, pairs};
use crate::complex::CellLabel::*;
use crate::complex::{sal_fn, TwistedChain};
use crate::error::{Error, Result};
use crate::ring::{lp, LaurentPoly};

/// The order on `A_{i,j}` used by the descent: first by `j - i`, then by `i`.
pub fn a_order(p: (usize, usize), q: (usize, usize)) -> Ordering {
    (p.1 - p.0, p.0).cmp(&(q.1 - q.0, q.0))
}

fn chain2(terms: &[((usize, usize, u8), &str)]) -> TwistedChain {
    TwistedChain::from_terms(
        2,
        terms.iter().map(|&((i, j, kind), c)| (if kind == 0 { A2(i, j) } else { B2(i, kind) }, lp(c))),
    )
    .expect("2-cells")
}

/// Explicit cell form of the integral basis element `X_{i,j}`.
fn integral_x_cells(i: usize, j: usize, n: usize) -> Result<TwistedChain> {
    const A: u8 = 0;
    Ok(if j == i + 1 {
        e_cycle(i, j, n)?
    } else if i == 1 && j == 3 {
        chain2(&[
            ((1, 2, A), "xy + 1"),
            ((2, 3, A), "xy + 1"),
            ((1, 3, A), "-(xy + 1)"),
            ((2, 0, 1), "-(x - 1)"),
            ((2, 0, 2), "x^2 - 1"),
            ((2, 0, 3), "-(x - 1)"),
        ])
    } else if j == i + 2 {
        chain2(&[
            ((i - 1, i, A), "xy"),
            ((i, i + 1, A), "y(x - 1)"),
            ((i + 1, i + 2, A), "-1"),
            ((i - 1, i + 1, A), "-xy"),
            ((i, i + 2, A), "1"),
            ((i, 0, 2), "x(x - 1)"),
            ((i, 0, 3), "-(x - 1)"),
            ((i + 1, 0, 2), "-(x - 1)"),
            ((i + 1, 0, 3), "x - 1"),
        ])
    } else {
        chain2(&[((i, j, A), "1"), ((i, j - 1, A), "-1"), ((i + 1, j, A), "-1"), ((i + 1, j - 1, A), "1")])
    })
}

/// `X_{i,j}` as a combination of the `E`'s, with a common denominator:
/// returns `(den, {(l, s): coeff})` meaning `den * X_{i,j} = sum coeff E_{l,s}`.
pub fn integral_x_in_e(i: usize, j: usize) -> (LaurentPoly, BTreeMap<(usize, usize), LaurentPoly>) {
    let d = e_leading();
    let m = |v: &[((usize, usize), &str)]| v.iter().map(|(k, c)| (*k, lp(c))).collect();
    if j == i + 1 {
        (LaurentPoly::one(), m(&[((i, j), "1")]))
    } else if i == 1 && j == 3 {
        (lp("y - 1"), m(&[((1, 2), "1"), ((2, 3), "1"), ((1, 3), "-1")]))
    } else if j == i + 2 {
        (
            d,
            m(&[
                ((i - 1, i), "xy"),
                ((i, i + 1), "(x - 1)y"),
                ((i + 1, i + 2), "-1"),
                ((i - 1, i + 1), "-xy"),
                ((i, i + 2), "1"),
            ]),
        )
    } else {
        (d, m(&[((i + 1, j - 1), "1"), ((i, j - 1), "-1"), ((i + 1, j), "-1"), ((i, j), "1")]))
    }
}

/// The integral basis element `X_{i,j}` in explicit cell form, checked to be
/// a cycle and to agree exactly with its expression through the `E`'s.
pub fn integral_x(i: usize, j: usize, n: usize) -> Result<TwistedChain> {
    check_pair(i, j, n)?;
    let x = integral_x_cells(i, j, n)?;
    let (den, combo) = integral_x_in_e(i, j);
    let mut rhs = TwistedChain::zero(2);
    for ((l, s), c) in &combo {
        rhs.add_scaled(c, &e_cycle(*l, *s, n)?)?;
    }
    if x.scale(&den) != rhs {
        return Err(Error::Contradiction(format!("the two forms of X_{{{i},{j}}} differ")));
    }
    if !sal_fn(n)?.is_cycle(&x)? {
        return Err(Error::Contradiction(format!("X_{{{i},{j}}} is not a cycle")));
    }
    Ok(x)
}

/// All `X_{i,j}`, lexicographic in `(i, j)`.
pub fn integral_basis(n: usize) -> Result<BTreeMap<(usize, usize), TwistedChain>> {
    pairs(n).into_iter().map(|(i, j)| Ok(((i, j), integral_x(i, j, n)?))).collect()
}

/// Leading `A`-coefficient of `X_{i,j}` in the descent order.
fn leading_divisor(i: usize, j: usize) -> LaurentPoly {
    if j == i + 1 {
        e_leading()
    } else if i == 1 && j == 3 {
        lp("-(xy + 1)")
    } else {
        LaurentPoly::one()
    }
}

/// Coordinates of an integral cycle over `{X_{i,j}}`.
///
/// Repeatedly takes the largest `A_{i,j}` (in [`a_order`]) with nonzero
/// coefficient `alpha`, divides `alpha` exactly by the leading coefficient
/// of `X_{i,j}` (`1`, `-(xy+1)` or `(y-1)(xy+1)`), and subtracts that
/// multiple of `X_{i,j}`. Once no `A` remains the chain must be zero. A
/// failed division or a leftover `B`-chain is reported as an error.
pub fn reduce_to_integral_basis(u: &TwistedChain, n: usize) -> Result<BTreeMap<(usize, usize), LaurentPoly>> {
    let tc = sal_fn(n)?;
    if !tc.is_cycle(u)? {
        return Err(Error::NotACycle);
    }
    let basis = integral_basis(n)?;
    let mut order = pairs(n);
    order.sort_by(|p, q| a_order(*q, *p));
    let mut rest = u.clone();
    let mut coords = BTreeMap::new();
    for (i, j) in order {
        let alpha = rest.coeff(&A2(i, j));
        if alpha.is_zero() {
            continue;
        }
        let lead = leading_divisor(i, j);
        let q = alpha
            .try_div_exact(&lead)?
            .ok_or_else(|| Error::Contradiction(format!("{lead} does not divide the A_{{{i},{j}}} coefficient {alpha}")))?;
        rest.add_scaled(&-&q, &basis[&(i, j)])?;
        coords.insert((i, j), q);
    }
    if !rest.is_zero() {
        return Err(Error::Contradiction(format!("nonzero B-only remainder {rest}")));
    }
    Ok(coords)
}
