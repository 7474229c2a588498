//! `lkb`: construct the Lawrence–Krammer–Bigelow matrices, the twisted
//! Salvetti complex of `F_n`, its homology and the braid action on it, and
//! run the verification suite.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad flags or input.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use lkb::action::{
    fork_basis_action, fork_change_of_basis, h1_action, homology_action, lkb_generator, lkb_word, BraidWord,
};
use lkb::arrangement::{build_facets, build_salvetti, parse_arrangement, salvetti_h1};
use lkb::complex::{check_differential, sal_fn};
use lkb::homology::{h1_fn, integral_x_in_e, kernel_rank, pairs};
use lkb::report::{render_table, Status};
use lkb::verify::{run_suite, VerifyOptions};
use lkb::Error;

#[derive(Parser, Debug)]
#[command(name = "lkb", version, about = "Exact LKB representation, Salvetti complexes and twisted homology")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Number of strands.
    #[arg(long = "n", global = true, default_value_t = 4, value_parser = clap::value_parser!(u64).range(2..))]
    n: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for the randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest n swept by `verify`.
    #[arg(long = "max-n", global = true, default_value_t = 6, value_parser = clap::value_parser!(u64).range(2..))]
    max_n: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// LKB generator matrices, or the matrix of a braid word.
    Rep {
        /// A single generator sigma_k.
        #[arg(long, conflicts_with = "word")]
        k: Option<u64>,
        /// Space-separated signed generator indices, e.g. "1 2 -1".
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
    },
    /// The twisted Salvetti complex of F_n.
    Complex,
    /// Kernel of d2, H1 of the fibre, and the integral basis.
    Homology,
    /// Action of sigma_k on H2 in the E-basis and on H1.
    Action {
        #[arg(long)]
        k: Option<u64>,
    },
    /// Fork classes: change of basis and the action in the fork basis.
    Fork {
        #[arg(long)]
        k: Option<u64>,
    },
    /// Facets, Salvetti cells and H1 of a line arrangement.
    Arrangement {
        /// Arrangement file: {"lines":[{"a":"1","b":"0","c":"2"},..]}.
        #[arg(long)]
        input: PathBuf,
        /// Include the cells and boundary words in json output.
        #[arg(long)]
        cells: bool,
    },
    /// Run every check for n = 2..max-n.
    Verify,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn check(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_) | Error::IndexOutOfRange(_) | Error::Parse { .. } => Failure::usage(e.to_string()),
            _ => Failure::check(e.to_string()),
        }
    }
}

/// Rendered output plus, when a check failed, the failure to report after
/// the output has been written.
struct Output {
    body: String,
    failure: Option<Failure>,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, failure: None }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = run(&cli).and_then(|out| {
        emit(&cli.common, &out.body)?;
        match out.failure {
            Some(f) => Err(f),
            None => Ok(()),
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(common: &Common, body: &str) -> Result<(), Failure> {
    match &common.out {
        Some(path) => {
            std::fs::write(path, body).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn to_json<T: ?Sized + Serialize>(v: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string(v).map_err(|e| Failure::check(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn check_k(k: Option<u64>, n: usize) -> Result<Vec<usize>, Failure> {
    match k {
        None => Ok((1..n).collect()),
        Some(k) if k >= 1 && (k as usize) < n => Ok(vec![k as usize]),
        Some(k) => Err(Failure::usage(format!("--k must be in 1..{}, got {k}", n - 1))),
    }
}

fn pair_key(prefix: &str, (i, j): (usize, usize)) -> String {
    format!("{prefix}_{{{i},{j}}}")
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let c = &cli.common;
    let n = c.n as usize;
    let json = c.format == Format::Json;
    match &cli.command {
        Command::Rep { k, word } => cmd_rep(n, *k, word.as_deref(), json),
        Command::Complex => cmd_complex(n, json),
        Command::Homology => cmd_homology(n, json),
        Command::Action { k } => cmd_action(n, *k, json),
        Command::Fork { k } => cmd_fork(n, *k, json),
        Command::Arrangement { input, cells } => cmd_arrangement(input, *cells, json),
        Command::Verify => cmd_verify(c.max_n as usize, c.seed, json),
    }
}

fn cmd_rep(n: usize, k: Option<u64>, word: Option<&str>, json: bool) -> Result<Output, Failure> {
    if let Some(w) = word {
        let w = BraidWord::parse(n, w)?;
        let m = lkb_word(&w)?;
        return Ok(Output::ok(if json { to_json(&m)? } else { m.to_string() }));
    }
    let ks = check_k(k, n)?;
    let mats = ks.iter().map(|&k| lkb_generator(k, n)).collect::<lkb::Result<Vec<_>>>()?;
    if k.is_some() {
        return Ok(Output::ok(if json { to_json(&mats[0])? } else { mats[0].to_string() }));
    }
    if json {
        let gens: Vec<Value> = ks.iter().zip(&mats).map(|(k, m)| json!({ "k": k, "matrix": m })).collect();
        return Ok(Output::ok(to_json(&json!({ "n": n, "generators": gens }))?));
    }
    let mut s = String::new();
    for (k, m) in ks.iter().zip(&mats) {
        let _ = writeln!(s, "s{k}:\n{m}");
    }
    Ok(Output::ok(s))
}

fn cmd_complex(n: usize, json: bool) -> Result<Output, Failure> {
    let tc = sal_fn(n)?;
    tc.check_square_zero()?;
    let bad = check_differential(n)?;
    let failure = (!bad.is_empty()).then(|| {
        let cells: Vec<String> = bad.iter().map(ToString::to_string).collect();
        Failure::check(format!("closed-form differential differs on {}", cells.join(", ")))
    });
    let body = if json {
        to_json(&tc)?
    } else {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "Sal(F_{n}): {} vertices, {} edges, {} faces",
            tc.basis(0).len(),
            tc.basis(1).len(),
            tc.basis(2).len()
        );
        let weights: Vec<String> = tc.weight_summary().into_iter().map(|(e, m)| format!("{e} -> {m}")).collect();
        let _ = writeln!(s, "weights: {}", weights.join(", "));
        let _ = writeln!(s, "d1 d2 = 0: yes");
        let _ = writeln!(s, "closed forms: {}", if bad.is_empty() { "all agree" } else { "DIFFER" });
        let _ = writeln!(s, "d2:\n{}", tc.d2);
        s
    };
    Ok(Output { body, failure })
}

fn cmd_homology(n: usize, json: bool) -> Result<Output, Failure> {
    let kernel = kernel_rank(n)?;
    let h1 = h1_fn(n)?;
    let mut basis = BTreeMap::new();
    for p in pairs(n) {
        let (den, map) = integral_x_in_e(p.0, p.1);
        let coords: BTreeMap<String, _> = map.into_iter().map(|(q, c)| (pair_key("E", q), c)).collect();
        basis.insert(pair_key("X", p), (den, coords));
    }
    let mut problems = Vec::new();
    if !kernel.passed() {
        problems.push("kernel of d2 is not spanned by the E-cycles");
    }
    if !h1.passed() {
        problems.push("H1 of the fibre disagrees");
    }
    let failure = (!problems.is_empty()).then(|| Failure::check(problems.join("; ")));
    let body = if json {
        let basis: BTreeMap<&String, Value> =
            basis.iter().map(|(k, (den, c))| (k, json!({ "denominator": den, "e_coordinates": c }))).collect();
        to_json(&json!({ "n": n, "kernel": kernel, "h1": h1, "integral_basis": basis }))?
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "ker d2 rank {}, E-cycles span the kernel: {}", kernel.rank, yes_no(kernel.e_span_kernel));
        let torsion = if h1.torsion.is_empty() { "none".to_string() } else { h1.torsion.join(", ") };
        let _ = writeln!(s, "H1(F_{n}) rank {}, torsion {torsion}", h1.rank);
        let _ = writeln!(s, "integral basis in terms of E:");
        for (k, (den, coords)) in &basis {
            let terms: Vec<String> = coords.iter().map(|(e, c)| format!("({c}) {e}")).collect();
            let _ = writeln!(s, "  ({den}) {k} = {}", terms.join(" + "));
        }
        s
    };
    Ok(Output { body, failure })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_action(n: usize, k: Option<u64>, json: bool) -> Result<Output, Failure> {
    let ks = check_k(k, n)?;
    let mut entries = Vec::new();
    let mut s = String::new();
    for &k in &ks {
        let m = homology_action(k, n)?;
        let h1 = h1_action(k, n)?;
        if json {
            entries.push(json!({ "k": k, "h2": m, "h1": h1 }));
        } else {
            let _ = writeln!(s, "s{k} on H2 (E-basis):\n{m}");
            let _ = writeln!(s, "s{k} on H1, transposition: {}\n{}", yes_no(h1.is_transposition), h1.matrix);
        }
    }
    Ok(Output::ok(if json { to_json(&json!({ "n": n, "actions": entries }))? } else { s }))
}

fn cmd_fork(n: usize, k: Option<u64>, json: bool) -> Result<Output, Failure> {
    let ks = check_k(k, n)?;
    let p = fork_change_of_basis(n)?;
    let actions = ks.iter().map(|&k| Ok((k, fork_basis_action(k, n)?))).collect::<lkb::Result<Vec<_>>>()?;
    if json {
        let actions: Vec<Value> = actions.iter().map(|(k, m)| json!({ "k": k, "matrix": m })).collect();
        return Ok(Output::ok(to_json(&json!({ "n": n, "change_of_basis": p, "actions": actions }))?));
    }
    let mut s = format!("fork classes in the E-basis:\n{p}\n");
    for (k, m) in &actions {
        let _ = writeln!(s, "s{k} in the fork basis:\n{m}");
    }
    Ok(Output::ok(s))
}

fn cmd_arrangement(input: &PathBuf, cells: bool, json: bool) -> Result<Output, Failure> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", input.display())))?;
    let lines =
        parse_arrangement(&text).map_err(|e| Failure::usage(format!("{}: {e}", input.display())))?;
    let fc = build_facets(&lines)?;
    fc.check()?;
    let sc = build_salvetti(&fc)?;
    sc.check_counts()?;
    let h1 = salvetti_h1(&sc)?;
    let fcounts = fc.counts();
    let scounts = sc.counts();
    let failure = (!h1.passed(lines.len())).then(|| {
        Failure::check(format!("H1 has rank {} and torsion {:?}, expected free of rank {}", h1.rank, h1.torsion, lines.len()))
    });
    let body = if json {
        let mut v = json!({ "facets": fcounts, "salvetti": scounts, "h1": h1 });
        if cells {
            v["complex"] = serde_json::to_value(&sc).map_err(|e| Failure::check(e.to_string()))?;
        }
        to_json(&v)?
    } else {
        let torsion = if h1.torsion.is_empty() { "none".to_string() } else { h1.torsion.join(", ") };
        format!(
            "lines {}, vertices {}, edge facets {}\nchambers {}, edges(Sal) {}, H1 rank {}\nfaces(Sal) {}, euler characteristic {}, torsion {torsion}, meridians generate {}\n",
            lines.len(),
            fc.vertices.len(),
            fc.edges.len(),
            fc.chambers.len(),
            scounts.edges,
            h1.rank,
            scounts.faces,
            scounts.euler_characteristic,
            yes_no(h1.meridians_generate),
        )
    };
    Ok(Output { body, failure })
}

fn cmd_verify(max_n: usize, seed: u64, json: bool) -> Result<Output, Failure> {
    let rows = run_suite(&VerifyOptions { max_n, seed });
    let failure = rows.iter().find(|r| r.status == Status::Fail).map(|r| {
        let n = r.n.map(|n| format!(" (n = {n})")).unwrap_or_default();
        let witness = r.witness.as_ref().map(Value::to_string).unwrap_or_else(|| "none".into());
        Failure::check(format!("check failed: {}{n}; witness: {witness}", r.check))
    });
    let body = if json {
        to_json(&rows)?
    } else {
        let failed = rows.iter().filter(|r| r.status == Status::Fail).count();
        format!("{}{} checks, {failed} failed\n", render_table(&rows), rows.len())
    };
    Ok(Output { body, failure })
}
