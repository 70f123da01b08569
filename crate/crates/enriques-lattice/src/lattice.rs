//! Integral lattices as symmetric Gram matrices, with exact arithmetic.
//!
//! A lattice here is a free abelian group of finite rank carrying an
//! integer-valued symmetric bilinear form, represented by its Gram matrix.
//! Determinants use fraction-free Bareiss elimination over big integers;
//! signatures use symmetric congruence diagonalization over exact rationals.
//! No floating point enters any computation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("unknown standard lattice")]
    UnknownStandardLattice,
    #[error("degenerate twist")]
    DegenerateTwist,
    #[error("degenerate lattice")]
    DegenerateLattice,
    #[error("gram matrix not square: row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("gram matrix not symmetric at ({i},{j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("line {line}: {detail}")]
    Parse { line: usize, detail: String },
}

/// Inertia of a nondegenerate symmetric form: counts of positive and
/// negative diagonal entries after diagonalization over the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub positive_count: usize,
    pub negative_count: usize,
}

/// A free abelian group of finite rank with an integer symmetric bilinear
/// form given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerLattice {
    rank: usize,
    gram: Vec<Vec<i64>>,
}

impl IntegerLattice {
    /// Builds a lattice from a square symmetric integer matrix.
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        let rank = gram.len();
        for (i, row) in gram.iter().enumerate() {
            if row.len() != rank {
                return Err(LatticeError::NotSquare {
                    row: i,
                    found: row.len(),
                    expected: rank,
                });
            }
        }
        for i in 0..rank {
            for j in (i + 1)..rank {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::NotSymmetric { i, j });
                }
            }
        }
        Ok(IntegerLattice { rank, gram })
    }

    /// The rank-0 lattice, the identity element of [`direct_sum`].
    /// Its determinant is 1 by the empty-product convention.
    pub fn rank_zero() -> Self {
        IntegerLattice {
            rank: 0,
            gram: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn gram_entry(&self, i: usize, j: usize) -> i64 {
        self.gram[i][j]
    }

    /// Intersection number of two vectors written in the lattice basis.
    /// Accumulates in 128-bit arithmetic; panics only on overflow past
    /// 64 bits, which no in-scope input approaches.
    pub fn dot(&self, x: &[i64], y: &[i64]) -> i64 {
        assert_eq!(x.len(), self.rank, "vector length mismatch");
        assert_eq!(y.len(), self.rank, "vector length mismatch");
        let mut acc: i128 = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += x[i] as i128 * self.gram[i][j] as i128 * y[j] as i128;
            }
        }
        i64::try_from(acc).expect("intersection number exceeds 64 bits")
    }

    /// Gram matrix of the sublattice spanned by the given vectors
    /// (written in this lattice's basis).
    pub fn restricted_gram(&self, basis: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let k = basis.len();
        let mut g = vec![vec![0i64; k]; k];
        for i in 0..k {
            for j in i..k {
                let v = self.dot(&basis[i], &basis[j]);
                g[i][j] = v;
                g[j][i] = v;
            }
        }
        g
    }
}

/// Gram matrix of the hyperbolic plane `U`.
fn gram_u() -> Vec<Vec<i64>> {
    vec![vec![0, 1], vec![1, 0]]
}

/// Negative definite `E8` Gram matrix: the negated Cartan matrix, nodes
/// numbered with the branch node in position 4 (edges 1-3, 3-4, 4-5, 5-6,
/// 6-7, 7-8 and 2-4). The sign convention makes `U^3 + E8^2` have
/// signature (3,19).
fn gram_e8() -> Vec<Vec<i64>> {
    let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
    let mut g = vec![vec![0i64; 8]; 8];
    for i in 0..8 {
        g[i][i] = -2;
    }
    for &(i, j) in &edges {
        g[i][j] = 1;
        g[j][i] = 1;
    }
    g
}

/// One of the named standard lattices: `U`, `E8`, `K3` (= U^3 + E8^2,
/// signature (3,19)) or `ENRIQUES` (= U + E8, signature (1,9)).
pub fn standard_lattice(name: &str) -> Result<IntegerLattice, LatticeError> {
    match name {
        "U" => IntegerLattice::new(gram_u()),
        "E8" => IntegerLattice::new(gram_e8()),
        "ENRIQUES" => {
            let u = IntegerLattice::new(gram_u())?;
            let e8 = IntegerLattice::new(gram_e8())?;
            Ok(direct_sum(&u, &e8))
        }
        "K3" => {
            let u = IntegerLattice::new(gram_u())?;
            let e8 = IntegerLattice::new(gram_e8())?;
            let mut l = IntegerLattice::rank_zero();
            for part in [&u, &u, &u, &e8, &e8] {
                l = direct_sum(&l, part);
            }
            Ok(l)
        }
        _ => Err(LatticeError::UnknownStandardLattice),
    }
}

/// Block-diagonal sum of two lattices.
pub fn direct_sum(a: &IntegerLattice, b: &IntegerLattice) -> IntegerLattice {
    let n = a.rank + b.rank;
    let mut gram = vec![vec![0i64; n]; n];
    for i in 0..a.rank {
        for j in 0..a.rank {
            gram[i][j] = a.gram[i][j];
        }
    }
    for i in 0..b.rank {
        for j in 0..b.rank {
            gram[a.rank + i][a.rank + j] = b.gram[i][j];
        }
    }
    IntegerLattice { rank: n, gram }
}

/// The lattice with the same underlying group and the form multiplied
/// by `k`. The determinant scales by `k^rank`.
pub fn twist(l: &IntegerLattice, k: i64) -> Result<IntegerLattice, LatticeError> {
    if k == 0 {
        return Err(LatticeError::DegenerateTwist);
    }
    let gram = l
        .gram
        .iter()
        .map(|row| {
            row.iter()
                .map(|&e| e.checked_mul(k).expect("twist overflows 64 bits"))
                .collect()
        })
        .collect();
    Ok(IntegerLattice { rank: l.rank, gram })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeProperties {
    pub even: bool,
    pub unimodular: bool,
    pub det: BigInt,
    pub signature: Signature,
}

/// Parity, unimodularity, exact determinant and signature of a
/// nondegenerate lattice.
pub fn lattice_properties(l: &IntegerLattice) -> Result<LatticeProperties, LatticeError> {
    let det = determinant(&to_bigint(&l.gram));
    if det.is_zero() {
        return Err(LatticeError::DegenerateLattice);
    }
    let even = (0..l.rank).all(|i| l.gram[i][i] % 2 == 0);
    let unimodular = det.abs().is_one();
    let signature = signature_of(&l.gram)?;
    Ok(LatticeProperties {
        even,
        unimodular,
        det,
        signature,
    })
}

pub(crate) fn to_bigint(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
        .collect()
}

/// Exact determinant by fraction-free Bareiss elimination.
pub(crate) fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Inertia by symmetric congruence diagonalization over exact rationals
/// (Sylvester's law: any invertible congruence preserves the signs).
pub(crate) fn signature_of(gram: &[Vec<i64>]) -> Result<Signature, LatticeError> {
    let n = gram.len();
    let mut a: Vec<Vec<BigRational>> = gram
        .iter()
        .map(|row| {
            row.iter()
                .map(|&e| BigRational::from_integer(BigInt::from(e)))
                .collect()
        })
        .collect();
    let mut positive_count = 0usize;
    let mut negative_count = 0usize;
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                // Symmetric swap of rows and columns k and j.
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // All trailing diagonal entries vanish; fold row/column j
                // into k, giving diagonal entry 2*a[k][j] != 0.
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] += v;
                }
            } else {
                return Err(LatticeError::DegenerateLattice);
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_zero() {
            return Err(LatticeError::DegenerateLattice);
        }
        for j in (k + 1)..n {
            if a[j][k].is_zero() {
                continue;
            }
            let f = &a[j][k] / &pivot;
            for c in k..n {
                let sub = &f * &a[k][c];
                a[j][c] -= sub;
            }
            for r in k..n {
                let sub = &f * &a[r][k];
                a[r][j] -= sub;
            }
        }
        if pivot.is_positive() {
            positive_count += 1;
        } else {
            negative_count += 1;
        }
    }
    Ok(Signature {
        positive_count,
        negative_count,
    })
}

/// Parses the shared integer-matrix text format: first nonblank
/// non-comment line holds the row count `m`, followed by `m` rows of
/// space-separated integers. Lines starting with `#` are comments.
pub fn parse_int_matrix(text: &str) -> Result<Vec<Vec<i64>>, LatticeError> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut expected: Option<usize> = None;
    let mut width: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = idx + 1;
        match expected {
            None => {
                let m: usize = line.parse().map_err(|_| LatticeError::Parse {
                    line: lineno,
                    detail: format!("expected a row count, found `{line}`"),
                })?;
                expected = Some(m);
            }
            Some(m) => {
                if rows.len() == m {
                    return Err(LatticeError::Parse {
                        line: lineno,
                        detail: format!("expected {m} rows, found extra data"),
                    });
                }
                let mut row = Vec::new();
                for tok in line.split_whitespace() {
                    let v: i64 = tok.parse().map_err(|_| LatticeError::Parse {
                        line: lineno,
                        detail: format!("expected an integer, found `{tok}`"),
                    })?;
                    row.push(v);
                }
                if let Some(w) = width {
                    if row.len() != w {
                        return Err(LatticeError::Parse {
                            line: lineno,
                            detail: format!("expected {w} entries, found {}", row.len()),
                        });
                    }
                } else {
                    width = Some(row.len());
                }
                rows.push(row);
            }
        }
    }
    let m = expected.ok_or(LatticeError::Parse {
        line: 0,
        detail: "missing row count line".to_string(),
    })?;
    if rows.len() != m {
        return Err(LatticeError::Parse {
            line: 0,
            detail: format!("expected {m} rows, found {}", rows.len()),
        });
    }
    Ok(rows)
}

/// Parses a lattice from the matrix text format; the matrix must be
/// square (width equal to the declared row count) and symmetric.
pub fn parse_lattice_text(text: &str) -> Result<IntegerLattice, LatticeError> {
    IntegerLattice::new(parse_int_matrix(text)?)
}

/// Canonical text form: row count, then one line per Gram row with
/// single-space separators. `parse_lattice_text` round-trips it exactly.
pub fn format_matrix_text(m: &[Vec<i64>]) -> String {
    let mut out = String::new();
    out.push_str(&m.len().to_string());
    out.push('\n');
    for row in m {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn format_lattice_text(l: &IntegerLattice) -> String {
    format_matrix_text(l.gram())
}
