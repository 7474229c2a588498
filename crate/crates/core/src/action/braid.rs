use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::complex::check_n;
use crate::error::{Error, Result};
use crate::homology::pairs;
use crate::linalg::{ring_inverse, RingMatrix};
use crate::ring::{lp, LaurentPoly};

/// A word in the Artin generators of `B_n`; letter `k > 0` is `σ_k` and
/// `k < 0` is `σ_{|k|}^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidWord {
    pub n: usize,
    pub letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i64>) -> Result<Self> {
        check_n(n)?;
        for &k in &letters {
            if k == 0 || k.unsigned_abs() as usize >= n {
                return Err(Error::IndexOutOfRange(format!("generator {k} in B_{n}")));
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    /// Parses space-separated signed indices such as `"1 2 -1"`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for token in s.split(' ') {
            if !token.is_empty() {
                let k = i64::from_str(token).map_err(|_| Error::Parse {
                    position: offset,
                    message: format!("expected a signed generator index, found {token:?}"),
                })?;
                if k == 0 || k.unsigned_abs() as usize >= n {
                    return Err(Error::Parse {
                        position: offset,
                        message: format!("generator {k} is out of range for {n} strands"),
                    });
                }
                letters.push(k);
            }
            offset += token.len() + 1;
        }
        Self::new(n, letters)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        BraidWord { n: self.n, letters: self.letters.iter().rev().map(|k| -k).collect() }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|k| if *k > 0 { format!("s{k}") } else { format!("s{}^-1", -k) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub(crate) fn check_k(k: usize, n: usize) -> Result<()> {
    check_n(n)?;
    if k == 0 || k >= n {
        return Err(Error::IndexOutOfRange(format!("generator index {k} in B_{n}")));
    }
    Ok(())
}

/// Labels `e_{i,j}` of the basis, lexicographic in `(i, j)`.
pub fn pair_labels(prefix: &str, n: usize) -> Vec<String> {
    pairs(n).iter().map(|(i, j)| format!("{prefix}_{{{i},{j}}}")).collect()
}

/// `ρ_k(e_{i,j})` as a combination of basis vectors.
pub fn rho_image(k: usize, i: usize, j: usize) -> BTreeMap<(usize, usize), LaurentPoly> {
    let kk = (k, k + 1);
    let terms: Vec<((usize, usize), &str)> = if k + 1 == i {
        vec![((i - 1, j), "x"), ((i, j), "1 - x")]
    } else if k == i && i + 1 < j {
        vec![((i + 1, j), "1"), (kk, "-xy(x - 1)")]
    } else if k == i && i + 1 == j {
        vec![(kk, "-x^2y")]
    } else if i < k && k + 1 < j {
        vec![((i, j), "1"), (kk, "-y(x - 1)^2")]
    } else if i < k && k + 1 == j {
        vec![((i, j - 1), "1"), (kk, "-xy(x - 1)")]
    } else if k == j {
        vec![((i, j + 1), "x"), ((i, j), "1 - x")]
    } else {
        vec![((i, j), "1")]
    };
    terms.into_iter().map(|(p, c)| (p, lp(c))).collect()
}

/// Assembles a matrix whose column for `e_{i,j}` is `images[(i, j)]`.
pub(crate) fn pair_matrix(
    n: usize,
    prefix: &str,
    image: impl Fn(usize, usize) -> Result<BTreeMap<(usize, usize), LaurentPoly>>,
) -> Result<RingMatrix> {
    let ps = pairs(n);
    let index: BTreeMap<(usize, usize), usize> = ps.iter().enumerate().map(|(t, p)| (*p, t)).collect();
    let mut m = RingMatrix::zeros(ps.len(), ps.len());
    for (col, (i, j)) in ps.iter().enumerate() {
        for (p, c) in image(*i, *j)? {
            let row = *index
                .get(&p)
                .ok_or_else(|| Error::IndexOutOfRange(format!("({}, {}) is not a basis pair for n = {n}", p.0, p.1)))?;
            m[(row, col)] = c;
        }
    }
    let labels = pair_labels(prefix, n);
    m.with_labels(labels.clone(), labels)
}

/// The LKB matrix `ρ_k` on `V = ⊕ R e_{i,j}`; column `(i, j)` is `ρ_k(e_{i,j})`.
pub fn lkb_generator(k: usize, n: usize) -> Result<RingMatrix> {
    check_k(k, n)?;
    pair_matrix(n, "e", |i, j| Ok(rho_image(k, i, j)))
}

/// `ρ_k^{-1}`, inverted over `Q(x, y)`; a non-Laurent entry is an error.
pub fn lkb_generator_inverse(k: usize, n: usize) -> Result<RingMatrix> {
    let m = lkb_generator(k, n)?;
    let labels = pair_labels("e", n);
    ring_inverse(&m)?.with_labels(labels.clone(), labels)
}

/// Product of generator matrices over a word, first letter leftmost.
pub fn word_product(
    w: &BraidWord,
    generator: impl Fn(usize) -> Result<RingMatrix>,
    inverse: impl Fn(usize) -> Result<RingMatrix>,
) -> Result<RingMatrix> {
    let dim = pairs(w.n).len();
    let mut cache: BTreeMap<i64, RingMatrix> = BTreeMap::new();
    let mut out = RingMatrix::identity(dim);
    for &k in &w.letters {
        if !cache.contains_key(&k) {
            let idx = k.unsigned_abs() as usize;
            let g = if k > 0 { generator(idx)? } else { inverse(idx)? };
            cache.insert(k, g);
        }
        out = out.mul(&cache[&k])?;
    }
    Ok(out)
}

/// `ρ(w)` for a braid word.
pub fn lkb_word(w: &BraidWord) -> Result<RingMatrix> {
    let labels = pair_labels("e", w.n);
    word_product(w, |k| lkb_generator(k, w.n), |k| lkb_generator_inverse(k, w.n))?.with_labels(labels.clone(), labels)
}
