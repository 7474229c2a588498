//! Acceptance criteria 1 to 11, one line of output each. Runs without the
//! libtest harness so the lines show up in `cargo test` output.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lkb::action::{
    chain_action, check_braid_relations, eigen_structure_check, fork_basis_action, fork_in_e_basis,
    homology_action, lkb_generator, lkb_generator_inverse, verify_fork_boundary, Level,
};
use lkb::arrangement::{an_arrangement, build_facets, build_salvetti, salvetti_h1, Line, Sign};
use lkb::complex::{fn_faces, quotient_endpoints, sal_an_mod_sigma2, sal_fn, CellLabel, TwistedChain};
use lkb::homology::{h1_fn, integral_basis, integral_x, kernel_rank, pairs, v_membership, verify_eta_triangular};
use lkb::linalg::RingMatrix;
use lkb::ring::{lp, LaurentPoly};
use lkb::verify::{arrangement_checks, integral_round_trips};

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn chain(terms: &[(CellLabel, &str)]) -> TwistedChain {
    TwistedChain::from_terms(1, terms.iter().map(|(c, p)| (*c, lp(p)))).unwrap()
}

/// The four closed forms, written out term by term.
fn golden(cell: CellLabel) -> TwistedChain {
    use CellLabel::*;
    match cell {
        A2(i, j) => chain(&[(A1(j), "x - 1"), (B1(i), "1 - x")]),
        B2(i, 1) => chain(&[(A1(i), "1 - y"), (C(i), "-1"), (C(i + 1), "x")]),
        B2(i, 2) => chain(&[(A1(i), "-y"), (B1(i), "y"), (C(i), "-1"), (C(i + 1), "1")]),
        B2(i, 3) => chain(&[(B1(i), "y - 1"), (C(i), "-x"), (C(i + 1), "1")]),
        other => panic!("not a 2-cell: {other}"),
    }
}

fn criterion_1() -> Outcome {
    for n in 2..=6 {
        let tc = sal_fn(n).map_err(err)?;
        for cell in fn_faces(n) {
            let d = tc.differential(&TwistedChain::cell(cell)).map_err(err)?;
            ensure(d == golden(cell), || format!("n = {n}: d{cell} = {d}"))?;
        }
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    for n in 2..=6 {
        let k = kernel_rank(n).map_err(err)?;
        ensure(k.rank == n * (n - 1) / 2 && k.e_are_cycles && k.e_span_kernel, || format!("{k:?}"))?;
        let eta = verify_eta_triangular(n).map_err(err)?;
        ensure(eta.passed(), || format!("eta at n = {n}: {eta:?}"))?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    for n in 2..=6 {
        let h = h1_fn(n).map_err(err)?;
        ensure(h.rank == n + 1 && h.torsion.is_empty() && h.c_relations && h.ab_relations, || format!("{h:?}"))?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for n in 2..=5 {
        integral_basis(n).map_err(err)?;
        let failures = integral_round_trips(n, 100, &mut rng).map_err(err)?;
        ensure(failures.is_empty(), || format!("n = {n}: {failures:?}"))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for n in 2..=6 {
        let rel = check_braid_relations(n, Level::Matrix).map_err(err)?;
        ensure(rel.passed(), || format!("{rel:?}"))?;
        for k in 1..n {
            let g = lkb_generator(k, n).map_err(err)?;
            let inv = lkb_generator_inverse(k, n).map_err(err)?;
            let id = RingMatrix::identity(g.nrows());
            ensure(g.mul(&inv).map_err(err)?.same_entries(&id), || format!("inverse of s{k}, n = {n}"))?;
            ensure(inv.mul(&g).map_err(err)?.same_entries(&id), || format!("inverse of s{k}, n = {n}"))?;
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for n in 2..=6 {
        for k in 1..n {
            chain_action(k, n).map_err(err)?;
            let m = homology_action(k, n).map_err(err)?;
            let g = lkb_generator(k, n).map_err(err)?;
            ensure(m.same_entries(&g), || format!("s{k} at n = {n}:\n{m}"))?;
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    for n in 3..=6 {
        let m = v_membership(&integral_x(1, 3, n).map_err(err)?, n).map_err(err)?;
        ensure(m.is_none(), || format!("n = {n}: X_(1,3) has V-coordinates {m:?}"))?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for n in [4, 5] {
        let r = eigen_structure_check(n).map_err(err)?;
        ensure(r.passed(), || format!("{r:?}"))?;
    }
    Ok(())
}

/// `x^{q-1}E_{p,q} - sum_{k=p+1}^{q-1} x^{k-1}(x-1)E_{p,k}`, written out.
fn fork_expected(p: usize, q: usize) -> BTreeMap<(usize, usize), LaurentPoly> {
    let mut out = BTreeMap::new();
    out.insert((p, q), lp(&format!("x^{}", q - 1)));
    for k in p + 1..q {
        out.insert((p, k), lp(&format!("x^{} - x^{}", k - 1, k)));
    }
    out
}

fn criterion_9() -> Outcome {
    for n in 3..=6 {
        for (p, q) in pairs(n) {
            if q > p + 1 {
                let r = verify_fork_boundary(p, q, n).map_err(err)?;
                ensure(r.passed, || format!("{r:?}"))?;
            }
            let coords = fork_in_e_basis(p, q, n).map_err(err)?;
            ensure(coords == fork_expected(p, q), || format!("fork ({p}, {q}) at n = {n}: {coords:?}"))?;
        }
        for k in 1..n {
            fork_basis_action(k, n).map_err(err)?;
        }
        let rel = check_braid_relations(n, Level::Fork).map_err(err)?;
        ensure(rel.passed(), || format!("{rel:?}"))?;
    }
    Ok(())
}

fn counts(lines: &[Line]) -> Result<(usize, usize, usize, usize), String> {
    let sc = build_salvetti(&build_facets(lines).map_err(err)?).map_err(err)?;
    sc.check_counts().map_err(err)?;
    let c = sc.counts();
    Ok((c.vertices, c.edges, c.faces, salvetti_h1(&sc).map_err(err)?.rank))
}

fn criterion_10() -> Outcome {
    let report = arrangement_checks(0, 50, 6);
    ensure(report.passed, || format!("{:?}", report.witness))?;
    let one = counts(&[Line::vertical(0)])?;
    ensure(one == (2, 2, 0, 1), || format!("one line: {one:?}"))?;
    let two = counts(&[Line::vertical(0), Line::horizontal(0)])?;
    ensure(two == (4, 8, 4, 2), || format!("two lines: {two:?}"))?;
    let a2 = counts(&an_arrangement(2).map_err(err)?)?;
    ensure(a2 == (12, 30, 20, 5), || format!("A_2: {a2:?}"))
}

/// Position of a chamber of `A_n` in the quotient: the slots of `x_1` and
/// `x_2` among `1..n+1`, sorted, and whether they had to be swapped.
fn slots(lines: &[Line], signs: &[Sign], n: usize) -> (usize, usize, bool) {
    let slot = |line: fn(i64) -> Line| {
        1 + (1..=n as i64)
            .filter(|&t| signs[lines.iter().position(|l| *l == line(t)).unwrap()] == Sign::Plus)
            .count()
    };
    let (s1, s2) = (slot(Line::vertical), slot(Line::horizontal));
    let diag = lines.iter().position(|l| *l == Line::from_ints(1, -1, 0).unwrap()).unwrap();
    if signs[diag] == Sign::Plus {
        (s2, s1, true)
    } else {
        (s1, s2, false)
    }
}

fn criterion_11() -> Outcome {
    use CellLabel::*;
    let n = 3;
    let q = sal_an_mod_sigma2(n).map_err(err)?;
    ensure(q.vertices.len() == 10, || format!("{} vertices", q.vertices.len()))?;

    // every edge of Sal(A_3), pushed to the quotient, must be a quotient edge
    // with the tabulated source and target, and each quotient edge has
    // exactly two preimages
    let fc = build_facets(&an_arrangement(n).map_err(err)?).map_err(err)?;
    let sc = build_salvetti(&fc).map_err(err)?;
    let chamber = |c: usize| slots(&fc.lines, &fc.chambers[c].signs, n);
    let mut hits: BTreeMap<CellLabel, usize> = BTreeMap::new();
    for (f, e) in fc.edges.iter().enumerate() {
        let (c, d) = e.chambers;
        for (from, to) in [(c, d), (d, c)] {
            let ((i, j, mirrored), (k, l, _)) = (chamber(from), chamber(to));
            let line = &fc.lines[e.line];
            let moves_x2 = (line.a() == &0.into()) != mirrored;
            let label = if line == &Line::from_ints(1, -1, 0).unwrap() {
                CE(i)
            } else if moves_x2 {
                if l == j + 1 {
                    AE(i, j)
                } else {
                    AbarE(i, l)
                }
            } else if k + 1 == i {
                BE(k, j - 1)
            } else {
                BbarE(i, j - 1)
            };
            let expected = quotient_endpoints(label).map_err(err)?;
            ensure(expected == (P(i, j), P(k, l)), || {
                format!("edge facet {f} from chamber {from}: {label} should run {expected:?}, geometry gives P({i},{j}) -> P({k},{l})")
            })?;
            *hits.entry(label).or_default() += 1;
        }
    }
    let quotient_edges: std::collections::BTreeSet<CellLabel> = q.edges.iter().copied().collect();
    ensure(hits.keys().copied().eq(quotient_edges.iter().copied()), || format!("edge images {:?}", hits.keys()))?;
    ensure(hits.values().all(|&h| h == 2), || format!("preimage counts {hits:?}"))?;
    let c = sc.counts();
    let doubled = (2 * q.vertices.len(), 2 * q.edges.len(), 2 * q.faces.len());
    ensure((c.vertices, c.edges, c.faces) == doubled, || format!("Sal(A_3) {c:?}, quotient doubled {doubled:?}"))?;

    for n in 2..=6 {
        let k = kernel_rank(n).map_err(err)?;
        let h = h1_fn(n).map_err(err)?;
        ensure(k.rank == n * (n - 1) / 2 && h.rank == n + 1, || format!("n = {n}: ranks {} and {}", k.rank, h.rank))?;
        ensure(integral_basis(n).map_err(err)?.len() == n * (n - 1) / 2, || format!("integral basis size at n = {n}"))?;
    }
    Ok(())
}

struct Criterion {
    number: u8,
    summary: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { number: 1, summary: "differential closed forms, n = 2..6", limit: secs(1), run: criterion_1 },
        Criterion { number: 2, summary: "rank of ker d2 and the E-basis, n = 2..6", limit: secs(30), run: criterion_2 },
        Criterion { number: 3, summary: "H1 of the fibre, n = 2..6", limit: secs(5), run: criterion_3 },
        Criterion { number: 4, summary: "integral basis and 100 round trips, n = 2..5", limit: secs(60), run: criterion_4 },
        Criterion { number: 5, summary: "braid relations and inverses of the LKB matrices, n = 2..6", limit: secs(30), run: criterion_5 },
        Criterion { number: 6, summary: "chain maps and the action on the E-basis, n = 2..6", limit: secs(60), run: criterion_6 },
        Criterion { number: 7, summary: "X_{1,3} outside V, n = 3..6", limit: secs(5), run: criterion_7 },
        Criterion { number: 8, summary: "eigenvectors of sigma_1, n = 4, 5", limit: secs(30), run: criterion_8 },
        Criterion { number: 9, summary: "fork classes, n = 3..6", limit: secs(30), run: criterion_9 },
        Criterion { number: 10, summary: "50 random arrangements and the worked examples", limit: secs(60), run: criterion_10 },
        Criterion { number: 11, summary: "Sal(A_3)/S2 and its source/target table, ranks", limit: secs(60), run: criterion_11 },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= c.limit, || format!("took {elapsed:.2?}, limit {:?}", c.limit))
        });
        let status = if outcome.is_ok() { "pass" } else { "FAIL" };
        println!("criterion {:>2}  {status}  {:>8.3}s  {}", c.number, elapsed.as_secs_f64(), c.summary);
        if let Err(why) = outcome {
            failed += 1;
            println!("    {why}");
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
