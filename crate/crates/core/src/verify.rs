//! The full verification suite: every structural claim, checked exactly for
//! `n = 2..=max_n`, plus randomized arrangement checks.
//!
//! ```
//! use lkb::verify::{run_suite, VerifyOptions};
//!
//! let rows = run_suite(&VerifyOptions { max_n: 2, seed: 0 });
//! assert!(rows.iter().all(|r| r.passed));
//! ```

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::action::{
    chain_action, check_braid_relations, det_unit_check, eigen_structure_check, fork_basis_action, fork_in_e_basis,
    h1_action, homology_action, lkb_generator_inverse, verify_fork_boundary, Level,
};
use crate::arrangement::{an_arrangement, build_facets, build_salvetti, random_arrangement, salvetti_h1, Line};
use crate::complex::{check_collapse, check_differential, sal_fn, TwistedChain};
use crate::error::{Error, Result};
use crate::homology::{
    e_cycle, h1_fn, integral_basis, integral_x, kernel_rank, pairs, reduce_to_integral_basis, v_membership,
    verify_eta_triangular,
};
use crate::report::CheckReport;
use crate::ring::{LaurentPoly, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_n: 6, seed: 0 }
    }
}

/// A small random Laurent polynomial: up to three terms with exponents in
/// `-2..=2` and coefficients in `-3..=3`.
pub fn random_laurent(rng: &mut impl Rng) -> LaurentPoly {
    let terms = rng.gen_range(0..=3);
    LaurentPoly::from_terms((0..terms).map(|_| (rng.gen_range(-3i64..=3), rng.gen_range(-2i64..=2), rng.gen_range(-2i64..=2))))
}

fn witness(v: impl Serialize) -> Option<Value> {
    Some(serde_json::to_value(v).unwrap_or(Value::Null))
}

fn run(check: &str, n: Option<usize>, f: impl FnOnce() -> Result<(bool, Option<Value>)>) -> CheckReport {
    match f() {
        Ok((passed, w)) => CheckReport::new(check, n, passed, if passed { None } else { w }),
        Err(e) => CheckReport::new(check, n, false, Some(json!({ "error": e.to_string() }))),
    }
}

fn all_k(n: usize, f: impl Fn(usize) -> Result<bool>) -> Result<(bool, Option<Value>)> {
    let mut failing = Vec::new();
    for k in 1..n {
        if !f(k)? {
            failing.push(k);
        }
    }
    Ok((failing.is_empty(), witness(json!({ "failing_k": failing }))))
}

/// `count` round trips `sum c_{i,j} X_{i,j} -> reduce -> c` with random
/// Laurent coefficients.
pub fn integral_round_trips(n: usize, count: usize, rng: &mut impl Rng) -> Result<Vec<BTreeMap<(usize, usize), LaurentPoly>>> {
    let basis = integral_basis(n)?;
    let mut failures = Vec::new();
    for _ in 0..count {
        let coeffs: BTreeMap<(usize, usize), LaurentPoly> =
            pairs(n).into_iter().map(|p| (p, random_laurent(rng))).filter(|(_, c)| !c.is_zero()).collect();
        let mut u = TwistedChain::zero(2);
        for (p, c) in &coeffs {
            u.add_scaled(c, &basis[p])?;
        }
        if reduce_to_integral_basis(&u, n)? != coeffs {
            failures.push(coeffs);
        }
    }
    Ok(failures)
}

/// Applies random positive braid words through the chain maps to random
/// elements of `V` and checks the image stays in `V`.
pub fn v_invariance(n: usize, trials: usize, rng: &mut impl Rng) -> Result<bool> {
    let maps = (1..n).map(|k| chain_action(k, n)).collect::<Result<Vec<_>>>()?;
    for _ in 0..trials {
        let mut u = TwistedChain::zero(2);
        for (i, j) in pairs(n) {
            u.add_scaled(&random_laurent(rng), &e_cycle(i, j, n)?)?;
        }
        for _ in 0..rng.gen_range(1..=4) {
            u = maps[rng.gen_range(0..maps.len())].apply(&u)?;
        }
        if v_membership(&u, n)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks an arrangement end to end: facets, Salvetti cell counts, closed
/// boundary words, and `H_1` free of rank equal to the number of lines.
pub fn check_arrangement(lines: &[Line]) -> Result<bool> {
    let fc = build_facets(lines)?;
    fc.check()?;
    let sc = build_salvetti(&fc)?;
    sc.check_counts()?;
    Ok(salvetti_h1(&sc)?.passed(lines.len()))
}

fn per_n(n: usize, seed: u64) -> Vec<CheckReport> {
    let some = Some(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut rows = Vec::new();
    rows.push(run("differential closed forms", some, || {
        let bad = check_differential(n)?;
        Ok((bad.is_empty(), witness(bad.iter().map(ToString::to_string).collect::<Vec<_>>())))
    }));
    rows.push(run("collapse of the quotient complex", some, || {
        check_collapse(n)?;
        Ok((true, None))
    }));
    rows.push(run("H1 of the fibre", some, || {
        let r = h1_fn(n)?;
        Ok((r.passed(), witness(&r)))
    }));
    rows.push(run("rational kernel spanned by E", some, || {
        let k = kernel_rank(n)?;
        let eta = verify_eta_triangular(n)?;
        let passed = k.passed() && eta.passed();
        Ok((passed, witness(json!({ "kernel": k, "eta": eta }))))
    }));
    rows.push(run("integral basis and reduction", some, || {
        integral_basis(n)?;
        let failures = integral_round_trips(n, 10, &mut rng)?;
        Ok((failures.is_empty(), witness(format!("{failures:?}"))))
    }));
    if n >= 3 {
        rows.push(run("X_{1,3} lies outside V", some, || {
            let m = v_membership(&integral_x(1, 3, n)?, n)?;
            Ok((m.is_none(), witness(format!("{m:?}"))))
        }));
    } else {
        rows.push(CheckReport::not_applicable("X_{1,3} lies outside V", some, "needs n >= 3"));
    }
    rows.push(run("LKB matrices", some, || {
        let rel = check_braid_relations(n, Level::Matrix)?;
        for k in 1..n {
            lkb_generator_inverse(k, n)?;
        }
        let dets = if n <= 4 { (1..n).map(|k| det_unit_check(k, n)).collect::<Result<Vec<_>>>()? } else { Vec::new() };
        let passed = rel.passed() && dets.iter().all(|d| d.is_unit);
        Ok((passed, witness(json!({ "relations": rel, "determinants": dets }))))
    }));
    rows.push(run("chain maps and weight invariance", some, || {
        all_k(n, |k| {
            chain_action(k, n)?;
            Ok(h1_action(k, n)?.is_transposition)
        })
    }));
    rows.push(run("action on the E-basis", some, || {
        all_k(n, |k| {
            homology_action(k, n)?;
            Ok(true)
        })
    }));
    rows.push(run("V is a sub-representation", some, || {
        let invariant = v_invariance(n, 3, &mut rng)?;
        let chain = check_braid_relations(n, Level::Chain)?;
        let homology = check_braid_relations(n, Level::Homology)?;
        let passed = invariant && chain.passed() && homology.passed();
        Ok((passed, witness(json!({ "invariant": invariant, "chain": chain, "homology": homology }))))
    }));
    if n >= 4 {
        rows.push(run("eigenvectors of sigma_1", some, || {
            let r = eigen_structure_check(n)?;
            Ok((r.passed(), witness(&r)))
        }));
    } else {
        rows.push(CheckReport::not_applicable("eigenvectors of sigma_1", some, "needs n >= 4"));
    }
    rows.push(run("fork classes", some, || {
        let mut bad = Vec::new();
        for (p, q) in pairs(n) {
            if q > p + 1 && !verify_fork_boundary(p, q, n)?.passed {
                bad.push((p, q));
            }
            fork_in_e_basis(p, q, n)?;
        }
        for k in 1..n {
            fork_basis_action(k, n)?;
        }
        let rel = check_braid_relations(n, Level::Fork)?;
        Ok((bad.is_empty() && rel.passed(), witness(json!({ "boundary_failures": bad, "relations": rel }))))
    }));
    rows
}

/// Worked examples plus `count` seeded random arrangements of at most
/// `max_lines` lines.
pub fn arrangement_checks(seed: u64, count: usize, max_lines: usize) -> CheckReport {
    run("arrangement H1 and cell counts", None, || {
        let mut bad: Vec<Value> = Vec::new();
        let examples = [vec![Line::vertical(0)], vec![Line::vertical(0), Line::horizontal(0)], an_arrangement(2)?];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let random: Vec<Vec<Line>> = (0..count).map(|_| random_arrangement(&mut rng, max_lines)).collect();
        for lines in examples.iter().chain(&random) {
            if !check_arrangement(lines)? {
                bad.push(serde_json::to_value(lines).map_err(|e| Error::InvalidInput(e.to_string()))?);
            }
        }
        let quotient_chi = crate::complex::sal_an_mod_sigma2(2)?.euler_characteristic();
        let sc = build_salvetti(&build_facets(&an_arrangement(2)?)?)?;
        let cover = sc.counts().euler_characteristic == 2 * quotient_chi;
        Ok((bad.is_empty() && cover, witness(json!({ "failing": bad, "double_cover_euler": cover }))))
    })
}

/// Runs every check for `n = 2..=max_n`, then the arrangement checks.
pub fn run_suite(opts: &VerifyOptions) -> Vec<CheckReport> {
    let mut rows = Vec::new();
    if opts.max_n < 2 {
        rows.push(CheckReport::new(
            "options",
            None,
            false,
            Some(Value::String(format!("max_n must be at least 2, got {}", opts.max_n))),
        ));
        return rows;
    }
    for n in 2..=opts.max_n {
        rows.extend(per_n(n, opts.seed));
    }
    rows.push(arrangement_checks(opts.seed, 50, 6));
    rows
}

/// Twisted complex of `Sal(F_n)` with all weights specialized to 1, for a
/// quick sanity comparison with the untwisted boundary.
pub fn untwisted_agrees(n: usize) -> Result<bool> {
    let tc = sal_fn(n)?;
    let sub: Vec<LaurentPoly> = tc.d2.rows_vec().into_iter().flatten().map(|p| p.substitute(Monomial::ONE, Monomial::ONE)).collect();
    let cw = crate::complex::sal_fn_cw(n)?;
    let b = cw.boundary_2();
    Ok(sub.iter().zip(b.rows_vec().into_iter().flatten()).all(|(p, c)| p.eval_at_one() == c))
}
