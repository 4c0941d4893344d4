//! Sums of `k × k` minors and the interlacing index-set machinery.
//!
//! For `I, J ⊆ {1..n}` with `|I| = |J| = k`, `I ≤ J` means
//! `i₁ ≤ j₁ ≤ i₂ ≤ j₂ ≤ … ≤ i_k ≤ j_k` and `p(I, J) = k − |I ∩ J|`.
//! The three sums compared here are
//!
//! * the principal `k × k` minors of `TX`,
//! * all `k × k` minors of `X`,
//! * `S = Σ_{I ≤ J} 2^{p(I,J)} |X_{IJ}|`.
//!
//! The first always equals `S`; the second equals `S` when `X` is symmetric.
//! Everything is brute-force enumeration so the results can serve as oracles.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{minor, t_matrix, ExactMatrix, IndexSet, Rational};

/// Largest `n` the sum routines accept unless the caller raises the limit.
pub const DEFAULT_MAX_N: usize = 12;

/// Classification of an index-set pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexPairClass {
    pub rows: IndexSet,
    pub cols: IndexSet,
    pub p: usize,
    pub interlacing: bool,
}

impl IndexPairClass {
    pub fn new(rows: &IndexSet, cols: &IndexSet) -> Result<Self> {
        Ok(IndexPairClass {
            p: p_value(rows, cols)?,
            interlacing: is_interlacing(rows, cols)?,
            rows: rows.clone(),
            cols: cols.clone(),
        })
    }
}

fn same_shape(i: &IndexSet, j: &IndexSet) -> Result<()> {
    if i.len() != j.len() {
        return Err(Error::Dimension(format!(
            "index sets {i} and {j} have different sizes"
        )));
    }
    if i.n() != j.n() {
        return Err(Error::Dimension(format!(
            "index sets live in different ambient sizes {} and {}",
            i.n(),
            j.n()
        )));
    }
    Ok(())
}

/// `I ≤ J`.
pub fn is_interlacing(i: &IndexSet, j: &IndexSet) -> Result<bool> {
    same_shape(i, j)?;
    let (a, b) = (i.elems(), j.elems());
    let mut prev = 0;
    for (&x, &y) in a.iter().zip(b) {
        if x < prev || y < x {
            return Ok(false);
        }
        prev = y;
    }
    Ok(true)
}

/// `i'₁ < j'₁ < i'₂ < … < i'_p < j'_p` on plain sorted slices.
pub fn is_strictly_interlacing(i: &[usize], j: &[usize]) -> bool {
    if i.len() != j.len() {
        return false;
    }
    let mut prev = None;
    for (&x, &y) in i.iter().zip(j) {
        if prev.is_some_and(|p| x <= p) || y <= x {
            return false;
        }
        prev = Some(y);
    }
    true
}

pub fn p_value(i: &IndexSet, j: &IndexSet) -> Result<usize> {
    same_shape(i, j)?;
    Ok(i.len() - i.intersection(j).len())
}

/// Closed form for `|T_{JI}|`: `2^p` when `I ≤ J`, zero otherwise.
pub fn t_minor_formula(i: &IndexSet, j: &IndexSet) -> Result<Rational> {
    if is_interlacing(i, j)? {
        Ok(Rational::from_integer(BigInt::one() << p_value(i, j)?))
    } else {
        Ok(Rational::zero())
    }
}

fn check_sum_args(m: &ExactMatrix, k: usize, max_n: usize) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "expected a square matrix, got {}×{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n > max_n {
        return Err(Error::TooLarge { n, limit: max_n });
    }
    if k == 0 || k > n {
        return Err(Error::Domain(format!("k = {k} must lie in 1..={n}")));
    }
    Ok(n)
}

pub(crate) fn principal_sum_limited(m: &ExactMatrix, k: usize, max_n: usize) -> Result<Rational> {
    let n = check_sum_args(m, k, max_n)?;
    let mut acc = Rational::zero();
    for j in IndexSet::subsets(n, k) {
        acc += minor(m, &j, &j)?;
    }
    Ok(acc)
}

pub(crate) fn all_sum_limited(m: &ExactMatrix, k: usize, max_n: usize) -> Result<Rational> {
    let n = check_sum_args(m, k, max_n)?;
    let mut acc = Rational::zero();
    for i in IndexSet::subsets(n, k) {
        for j in IndexSet::subsets(n, k) {
            acc += minor(m, &i, &j)?;
        }
    }
    Ok(acc)
}

pub(crate) fn interlacing_sum_limited(m: &ExactMatrix, k: usize, max_n: usize) -> Result<Rational> {
    let n = check_sum_args(m, k, max_n)?;
    let mut acc = Rational::zero();
    for i in IndexSet::subsets(n, k) {
        for j in IndexSet::subsets(n, k) {
            if is_interlacing(&i, &j)? {
                let weight = BigInt::one() << p_value(&i, &j)?;
                acc += minor(m, &i, &j)? * weight;
            }
        }
    }
    Ok(acc)
}

/// Sum of the principal `k × k` minors of `m`.
pub fn sum_principal_minors(m: &ExactMatrix, k: usize) -> Result<Rational> {
    principal_sum_limited(m, k, DEFAULT_MAX_N)
}

/// Sum of all `k × k` minors of `m`, principal and non-principal.
pub fn sum_all_minors(m: &ExactMatrix, k: usize) -> Result<Rational> {
    all_sum_limited(m, k, DEFAULT_MAX_N)
}

/// `Σ_{I ≤ J} 2^{p(I,J)} |m_{IJ}|`.
pub fn interlacing_sum(m: &ExactMatrix, k: usize) -> Result<Rational> {
    interlacing_sum_limited(m, k, DEFAULT_MAX_N)
}

/// Checks `|(AB)_{rows,cols}| = Σ_I |A_{rows,I}| |B_{I,cols}|`.
pub fn cauchy_binet_check(
    a: &ExactMatrix,
    b: &ExactMatrix,
    rows: &IndexSet,
    cols: &IndexSet,
) -> Result<bool> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::Dimension(
            "Cauchy-Binet check needs two square matrices of equal size".into(),
        ));
    }
    if rows.len() != cols.len() {
        return Err(Error::Dimension(format!(
            "row set {rows} and column set {cols} differ in size"
        )));
    }
    let n = a.rows();
    let lhs = minor(&a.mul(b)?, rows, cols)?;
    let mut rhs = Rational::zero();
    for mid in IndexSet::subsets(n, rows.len()) {
        let left = minor(a, rows, &mid)?;
        if left.is_zero() {
            continue;
        }
        rhs += left * minor(b, &mid, cols)?;
    }
    Ok(lhs == rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Accept non-symmetric input. Only the `TX` / interlacing equality is
    /// then expected to hold.
    pub allow_nonsymmetric: bool,
    pub max_n: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            allow_nonsymmetric: false,
            max_n: DEFAULT_MAX_N,
        }
    }
}

/// The three sums for one `(X, k)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub n: usize,
    pub k: usize,
    #[serde(rename = "principal_of_TX", with = "crate::serde_rational")]
    pub principal_of_tx: Rational,
    #[serde(rename = "all_of_X", with = "crate::serde_rational")]
    pub all_of_x: Rational,
    #[serde(rename = "interlacing_S", with = "crate::serde_rational")]
    pub interlacing_s: Rational,
    pub all_equal: bool,
}

impl IdentityReport {
    /// Principal minors of `TX` agree with the interlacing sum. Holds for any `X`.
    pub fn principal_matches_interlacing(&self) -> bool {
        self.principal_of_tx == self.interlacing_s
    }

    /// All minors of `X` agree with the interlacing sum. Needs symmetric `X`.
    pub fn all_matches_interlacing(&self) -> bool {
        self.all_of_x == self.interlacing_s
    }
}

/// Computes the three sums for `x` and `k` and reports whether they agree.
pub fn verify_identity(x: &ExactMatrix, k: usize, opts: &VerifyOptions) -> Result<IdentityReport> {
    let n = check_sum_args(x, k, opts.max_n)?;
    if !opts.allow_nonsymmetric && !x.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let tx = t_matrix(n).mul(x)?;
    let principal_of_tx = principal_sum_limited(&tx, k, opts.max_n)?;
    let all_of_x = all_sum_limited(x, k, opts.max_n)?;
    let interlacing_s = interlacing_sum_limited(x, k, opts.max_n)?;
    let all_equal = principal_of_tx == all_of_x && all_of_x == interlacing_s;
    Ok(IdentityReport {
        n,
        k,
        principal_of_tx,
        all_of_x,
        interlacing_s,
        all_equal,
    })
}
