//! Exact rational matrices.
//!
//! Every public index in this module is 1-based: row `i` of an `n × n`
//! matrix satisfies `1 <= i <= n`. Storage is row-major and 0-based.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` into a rational in lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("not an integer: {t:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(parse_int(p)?, q))
        }
    }
}

/// Canonical text form: `"p/q"` in lowest terms, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// A strictly increasing subset of `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    n: usize,
    elems: Vec<usize>,
}

impl IndexSet {
    pub fn new(n: usize, elems: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = elems.iter().find(|&&e| e == 0 || e > n) {
            return Err(Error::OutOfBounds {
                index: bad,
                bound: n,
            });
        }
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndexSet(format!(
                "{elems:?} is not strictly increasing"
            )));
        }
        Ok(IndexSet { n, elems })
    }

    /// Builds a set from unsorted, possibly repeated elements.
    pub fn from_unsorted(n: usize, elems: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = elems.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        IndexSet::new(n, v)
    }

    pub fn full(n: usize) -> Self {
        IndexSet {
            n,
            elems: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elems.binary_search(&e).is_ok()
    }

    pub fn intersection(&self, other: &IndexSet) -> Vec<usize> {
        self.elems
            .iter()
            .copied()
            .filter(|&e| other.contains(e))
            .collect()
    }

    /// Elements of `self` that are not in `other`.
    pub fn difference(&self, other: &IndexSet) -> Vec<usize> {
        self.elems
            .iter()
            .copied()
            .filter(|&e| !other.contains(e))
            .collect()
    }

    /// All `k`-subsets of `{1, …, n}` in lexicographic order.
    pub fn subsets(n: usize, k: usize) -> impl Iterator<Item = IndexSet> {
        (1..=n)
            .combinations(k)
            .map(move |elems| IndexSet { n, elems })
    }
}

/// Serialized as the bare element list.
impl Serialize for IndexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elems.serialize(s)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.elems.iter().join(","))
    }
}

/// Dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixFile", into = "MatrixFile")]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}×{cols} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor for integer matrices.
    pub fn from_ints<const C: usize>(rows: &[[i64; C]]) -> Self {
        let entries = rows.iter().flatten().map(|&v| rational(v)).collect();
        ExactMatrix {
            rows: rows.len(),
            cols: C,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub(crate) fn at(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    /// Entry at 1-based position `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> Result<&Rational> {
        if i == 0 || i > self.rows {
            return Err(Error::OutOfBounds {
                index: i,
                bound: self.rows,
            });
        }
        if j == 0 || j > self.cols {
            return Err(Error::OutOfBounds {
                index: j,
                bound: self.cols,
            });
        }
        Ok(self.at(i - 1, j - 1))
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) -> Result<()> {
        self.entry(i, j)?;
        let cols = self.cols;
        self.entries[(i - 1) * cols + (j - 1)] = value;
        Ok(())
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        self.entries
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[Rational]>::to_vec)
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.at(r, c).clone());
            }
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.at(r, c) == self.at(c, r)))
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = Rational::zero();
                for t in 0..self.cols {
                    let a = self.at(r, t);
                    if a.is_zero() {
                        continue;
                    }
                    acc += a * rhs.at(t, c);
                }
                out.entries[r * rhs.cols + c] = acc;
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<Rational> {
        self.require_square()?;
        Ok((0..self.rows).map(|i| self.at(i, i)).sum())
    }

    pub fn entry_sum(&self) -> Rational {
        self.entries.iter().sum()
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "expected a square matrix, got {}×{}",
                self.rows, self.cols
            )))
        }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_vecs() {
            writeln!(f, "[{}]", row.iter().join(", "))?;
        }
        Ok(())
    }
}

/// On-disk JSON layout of a matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl From<ExactMatrix> for MatrixFile {
    fn from(m: ExactMatrix) -> Self {
        MatrixFile {
            rows: m.rows,
            cols: m.cols,
            entries: m
                .row_vecs()
                .iter()
                .map(|row| row.iter().map(format_rational).collect())
                .collect(),
        }
    }
}

impl TryFrom<MatrixFile> for ExactMatrix {
    type Error = Error;

    fn try_from(file: MatrixFile) -> Result<Self> {
        if file.entries.len() != file.rows || file.entries.iter().any(|r| r.len() != file.cols) {
            return Err(Error::Dimension(format!(
                "entries do not form a {}×{} grid",
                file.rows, file.cols
            )));
        }
        let entries = file
            .entries
            .iter()
            .flatten()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        ExactMatrix::new(file.rows, file.cols, entries)
    }
}

pub fn matrix_to_json(m: &ExactMatrix) -> String {
    serde_json::to_string(m).expect("matrix serialization cannot fail")
}

pub fn matrix_from_json(s: &str) -> Result<ExactMatrix> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// `T[i][j] = 1 + sgn(i - j)`: zero above the diagonal, one on it, two below.
pub fn t_matrix(n: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..=r {
            m.entries[r * n + c] = rational(if r == c { 1 } else { 2 });
        }
    }
    m
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled by the lcm of its denominators so the
/// elimination runs over integers; every Bareiss division is then exact.
pub fn determinant(m: &ExactMatrix) -> Result<Rational> {
    m.require_square()?;
    let n = m.rows;
    if n == 0 {
        return Ok(Rational::one());
    }

    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for r in 0..n {
        let row = &m.entries[r * n..(r + 1) * n];
        let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        a.push(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
        scale *= lcm;
    }

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Rational::zero()),
            }
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot_row[k].clone();
    }

    let mut det = a[n - 1][n - 1].clone();
    if negate {
        det = -det;
    }
    Ok(Rational::new(det, scale))
}

/// Determinant by Laplace expansion along the first row. Factorial cost;
/// kept as an independent check on [`determinant`] for small matrices.
pub fn determinant_by_cofactors(m: &ExactMatrix) -> Result<Rational> {
    m.require_square()?;
    let rows: Vec<usize> = (0..m.rows).collect();
    let cols: Vec<usize> = (0..m.cols).collect();
    Ok(laplace(m, &rows, &cols))
}

fn laplace(m: &ExactMatrix, rows: &[usize], cols: &[usize]) -> Rational {
    match rows.len() {
        0 => Rational::one(),
        1 => m.at(rows[0], cols[0]).clone(),
        _ => {
            let mut acc = Rational::zero();
            for (pos, &c) in cols.iter().enumerate() {
                let a = m.at(rows[0], c);
                if a.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = a * laplace(m, &rows[1..], &rest);
                if pos % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

pub fn submatrix(m: &ExactMatrix, rows: &IndexSet, cols: &IndexSet) -> Result<ExactMatrix> {
    let check = |set: &IndexSet, bound: usize| match set.elems().iter().find(|&&e| e > bound) {
        Some(&e) => Err(Error::OutOfBounds { index: e, bound }),
        None => Ok(()),
    };
    check(rows, m.rows)?;
    check(cols, m.cols)?;
    let entries = rows
        .elems()
        .iter()
        .flat_map(|&i| {
            cols.elems()
                .iter()
                .map(move |&j| m.at(i - 1, j - 1).clone())
        })
        .collect();
    ExactMatrix::new(rows.len(), cols.len(), entries)
}

/// `|m_{rows, cols}|`, the determinant of the selected submatrix.
pub fn minor(m: &ExactMatrix, rows: &IndexSet, cols: &IndexSet) -> Result<Rational> {
    if rows.len() != cols.len() {
        return Err(Error::Dimension(format!(
            "minor needs equal cardinalities, got {} rows and {} cols",
            rows.len(),
            cols.len()
        )));
    }
    determinant(&submatrix(m, rows, cols)?)
}

/// Symmetric `n × n` integer matrix with entries uniform in `[-bound, bound]`.
pub fn random_symmetric(n: usize, seed: u64, entry_bound: u32) -> ExactMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = i64::from(entry_bound);
    let mut m = ExactMatrix::zeros(n, n);
    for r in 0..n {
        for c in r..n {
            let v = rational(rng.random_range(-b..=b));
            m.entries[c * n + r] = v.clone();
            m.entries[r * n + c] = v;
        }
    }
    m
}

/// General (not necessarily symmetric) `n × n` integer matrix.
pub fn random_matrix(n: usize, seed: u64, entry_bound: u32) -> ExactMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = i64::from(entry_bound);
    let entries = (0..n * n)
        .map(|_| rational(rng.random_range(-b..=b)))
        .collect();
    ExactMatrix {
        rows: n,
        cols: n,
        entries,
    }
}
