//! Real line arrangements: exact facet enumeration and the Salvetti complex.
//!
//! ```
//! use lkb::arrangement::{an_arrangement, build_facets, build_salvetti, salvetti_h1};
//!
//! let sc = build_salvetti(&build_facets(&an_arrangement(2).unwrap()).unwrap()).unwrap();
//! assert_eq!(sc.counts().faces, 20);
//! assert_eq!(salvetti_h1(&sc).unwrap().rank, 5);
//! ```

mod facets;
mod line;
mod salvetti;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

pub use facets::{build_facets, sign_less, signs_at, ChamberFacet, EdgeFacet, FacetComplex, FacetCounts, VertexFacet};
pub use line::{parse_arrangement, parse_rational, sign_string, Line, Point, Sign, SignVector};
pub use salvetti::{
    build_salvetti, salvetti_h1, MeridianRelation, SalLabel, SalvettiComplex, SalvettiCounts, SalvettiH1,
};

use crate::complex::check_n;
use crate::error::Result;

/// `A_n`: the lines `x_1 = t`, `x_2 = t` for `t = 1..n`, and `x_1 = x_2`.
pub fn an_arrangement(n: usize) -> Result<Vec<Line>> {
    check_n(n)?;
    let mut lines: Vec<Line> = (1..=n as i64).map(Line::vertical).collect();
    lines.extend((1..=n as i64).map(Line::horizontal));
    lines.push(Line::from_ints(1, -1, 0)?);
    Ok(lines)
}

/// Up to `max_lines` distinct random lines with small rational coefficients.
pub fn random_arrangement(rng: &mut impl Rng, max_lines: usize) -> Vec<Line> {
    let count = rng.gen_range(1..=max_lines.max(1));
    let mut lines: Vec<Line> = Vec::with_capacity(count);
    while lines.len() < count {
        let mut q = |lo: i64, hi: i64| {
            BigRational::new(BigInt::from(rng.gen_range(lo..=hi)), BigInt::from(rng.gen_range(1..=3)))
        };
        let (a, b, c) = (q(-3, 3), q(-3, 3), q(-4, 4));
        if let Ok(l) = Line::new(a, b, c) {
            if !lines.contains(&l) {
                lines.push(l);
            }
        }
    }
    lines
}
