//! Linear algebra over GF(2) on quotients `L/2L`, plus quadratic forms
//! with values mod 4 refining bilinear forms mod 2.
//!
//! Subspaces are stored as canonical reduced-row-echelon bases of bit
//! vectors, so two subspaces are equal exactly when their representations
//! are byte-identical. Ambient dimensions stay at or below 22 throughout
//! this crate, comfortably inside a single machine word per vector.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum F2Error {
    #[error("vector length {found} does not match ambient dimension {ambient}")]
    DimensionMismatch { found: usize, ambient: usize },
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("vector does not lie in the subspace")]
    NotInSubspace,
    #[error("quadratic form data inconsistent: {0}")]
    Inconsistent(String),
}

/// A subspace of GF(2)^ambient_dim with a canonical reduced-row-echelon
/// basis. Bit `i` of a row is coordinate `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct F2Subspace {
    ambient_dim: usize,
    basis: Vec<u64>,
}

impl F2Subspace {
    /// The zero subspace.
    pub fn zero(ambient_dim: usize) -> Self {
        assert!(ambient_dim <= 64, "ambient dimension exceeds one word");
        F2Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    /// Canonical subspace spanned by the given bit vectors.
    pub fn from_rows(rows: impl IntoIterator<Item = u64>, ambient_dim: usize) -> Self {
        assert!(ambient_dim <= 64, "ambient dimension exceeds one word");
        let mask = mask_of(ambient_dim);
        let mut basis: Vec<u64> = Vec::new();
        for row in rows {
            insert_row(&mut basis, row & mask);
        }
        F2Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical basis rows, pivots in increasing position.
    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    /// Remainder of `v` after reduction by the basis; zero iff `v` lies in
    /// the subspace.
    pub fn reduce(&self, v: u64) -> u64 {
        let mut v = v & mask_of(self.ambient_dim);
        for &row in &self.basis {
            let pivot = row & row.wrapping_neg();
            if v & pivot != 0 {
                v ^= row;
            }
        }
        v
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    /// Coordinates of `v` over the canonical basis, if `v` lies in the
    /// subspace. With a reduced echelon basis the coordinate on row `i` is
    /// the bit of `v` at that row's pivot.
    pub fn coordinates(&self, v: u64) -> Result<Vec<u8>, F2Error> {
        let v = v & mask_of(self.ambient_dim);
        let mut coords = vec![0u8; self.basis.len()];
        let mut rebuilt = 0u64;
        for (i, &row) in self.basis.iter().enumerate() {
            let pivot = row & row.wrapping_neg();
            if v & pivot != 0 {
                coords[i] = 1;
                rebuilt ^= row;
            }
        }
        if rebuilt == v {
            Ok(coords)
        } else {
            Err(F2Error::NotInSubspace)
        }
    }

    /// Sum of subspaces (span of the union).
    pub fn sum(&self, other: &F2Subspace) -> Result<F2Subspace, F2Error> {
        check_ambient(self, other)?;
        Ok(F2Subspace::from_rows(
            self.basis.iter().chain(other.basis.iter()).copied(),
            self.ambient_dim,
        ))
    }
}

fn mask_of(ambient_dim: usize) -> u64 {
    if ambient_dim == 64 {
        u64::MAX
    } else {
        (1u64 << ambient_dim) - 1
    }
}

fn check_ambient(a: &F2Subspace, b: &F2Subspace) -> Result<(), F2Error> {
    if a.ambient_dim != b.ambient_dim {
        return Err(F2Error::AmbientMismatch {
            left: a.ambient_dim,
            right: b.ambient_dim,
        });
    }
    Ok(())
}

/// Inserts a row into a reduced-echelon basis kept sorted by pivot
/// position, maintaining full reduction above and below.
fn insert_row(basis: &mut Vec<u64>, mut row: u64) {
    for &b in basis.iter() {
        let pivot = b & b.wrapping_neg();
        if row & pivot != 0 {
            row ^= b;
        }
    }
    if row == 0 {
        return;
    }
    let pivot = row & row.wrapping_neg();
    for b in basis.iter_mut() {
        if *b & pivot != 0 {
            *b ^= row;
        }
    }
    let pos = basis
        .iter()
        .position(|&b| (b & b.wrapping_neg()) > pivot)
        .unwrap_or(basis.len());
    basis.insert(pos, row);
}

/// Reduces integer vectors mod 2 and spans them in GF(2)^ambient_dim.
pub fn span_mod2(vectors: &[Vec<i64>], ambient_dim: usize) -> Result<F2Subspace, F2Error> {
    let mut rows = Vec::with_capacity(vectors.len());
    for v in vectors {
        if v.len() != ambient_dim {
            return Err(F2Error::DimensionMismatch {
                found: v.len(),
                ambient: ambient_dim,
            });
        }
        let mut bits = 0u64;
        for (i, &e) in v.iter().enumerate() {
            if e.rem_euclid(2) == 1 {
                bits |= 1 << i;
            }
        }
        rows.push(bits);
    }
    Ok(F2Subspace::from_rows(rows, ambient_dim))
}

/// Intersection of two subspaces by the Zassenhaus block trick: rows
/// `(v | v)` for `a` and `(w | 0)` for `b` are reduced with left-block
/// priority; rows whose left block vanished have right blocks spanning
/// the intersection.
pub fn intersect(a: &F2Subspace, b: &F2Subspace) -> Result<F2Subspace, F2Error> {
    check_ambient(a, b)?;
    let n = a.ambient_dim;
    let mut rows: Vec<u128> = Vec::new();
    for &v in &a.basis {
        rows.push(((v as u128) << n) | v as u128);
    }
    for &w in &b.basis {
        rows.push((w as u128) << n);
    }
    // Echelon form with most-significant-bit pivots, so the left block is
    // eliminated first.
    let mut echelon: Vec<u128> = Vec::new();
    for mut row in rows {
        for &e in &echelon {
            let pivot = 127 - e.leading_zeros();
            if row >> pivot & 1 == 1 {
                row ^= e;
            }
        }
        if row != 0 {
            echelon.push(row);
            echelon.sort_by_key(|e| std::cmp::Reverse(*e));
        }
    }
    let left_mask = (mask_of(n) as u128) << n;
    let inter_rows = echelon
        .iter()
        .filter(|&&e| e & left_mask == 0)
        .map(|&e| (e & mask_of(n) as u128) as u64);
    let result = F2Subspace::from_rows(inter_rows, n);
    debug_assert_eq!(
        result.dim() + a.sum(b).unwrap().dim(),
        a.dim() + b.dim(),
        "modular dimension identity"
    );
    Ok(result)
}

/// The subspace {x in `inside` : pairing(x, y) = 0 for all y in `of`}.
/// The pairing is evaluated on ambient bit vectors and reduced mod 2.
pub fn orthogonal_complement_in(
    pairing: impl Fn(u64, u64) -> u8,
    inside: &F2Subspace,
    of: &F2Subspace,
) -> Result<F2Subspace, F2Error> {
    check_ambient(inside, of)?;
    let d = inside.dim();
    // Constraint matrix: one row per basis vector of `of`, one column per
    // basis vector of `inside`.
    let constraints: Vec<u64> = of
        .basis
        .iter()
        .map(|&y| {
            let mut row = 0u64;
            for (i, &x) in inside.basis.iter().enumerate() {
                if pairing(x, y) & 1 == 1 {
                    row |= 1 << i;
                }
            }
            row
        })
        .collect();
    let kernel = kernel_f2(&constraints, d);
    let rows = kernel.into_iter().map(|coeffs| {
        let mut v = 0u64;
        for (i, &x) in inside.basis.iter().enumerate() {
            if coeffs >> i & 1 == 1 {
                v ^= x;
            }
        }
        v
    });
    Ok(F2Subspace::from_rows(rows, inside.ambient_dim))
}

/// Kernel basis of a GF(2) matrix given as rows of column bits.
pub(crate) fn kernel_f2(rows: &[u64], ncols: usize) -> Vec<u64> {
    let mut echelon: Vec<u64> = Vec::new();
    for &r in rows {
        insert_row(&mut echelon, r & mask_of(ncols));
    }
    let pivots: Vec<usize> = echelon
        .iter()
        .map(|&r| r.trailing_zeros() as usize)
        .collect();
    let mut kernel = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = 1u64 << free;
        for (row_idx, &row) in echelon.iter().enumerate() {
            if row >> free & 1 == 1 {
                v |= 1 << pivots[row_idx];
            }
        }
        kernel.push(v);
    }
    kernel
}

/// Solves `M x = rhs` over GF(2), where `M` is given as rows of column
/// bits. Returns one solution when the system is consistent.
pub(crate) fn solve_f2(rows: &[u64], rhs: u64, ncols: usize) -> Option<u64> {
    // Augment each row with its right-hand bit just past the columns.
    debug_assert!(ncols < 64);
    let mut aug: Vec<u64> = Vec::new();
    for (i, &r) in rows.iter().enumerate() {
        let bit = (rhs >> i & 1) << ncols;
        insert_row(&mut aug, (r & mask_of(ncols)) | bit);
    }
    let mut x = 0u64;
    for &row in &aug {
        let body = row & mask_of(ncols);
        if body == 0 {
            if row >> ncols & 1 == 1 {
                return None; // inconsistent: 0 = 1
            }
            continue;
        }
        // Reduced echelon: each pivot determined directly by its row.
        let pivot = body.trailing_zeros() as usize;
        // Substitute already-fixed free/pivot variables to the right.
        let mut val = row >> ncols & 1;
        for j in (pivot + 1)..ncols {
            if body >> j & 1 == 1 {
                val ^= x >> j & 1;
            }
        }
        if val == 1 {
            x |= 1 << pivot;
        }
    }
    // Free variables default to zero.
    // Verify, since insert_row keeps reduced form but rhs bits ride along.
    for (i, &r) in rows.iter().enumerate() {
        let prod = ((r & mask_of(ncols)) & x).count_ones() as u64 & 1;
        if prod != (rhs >> i & 1) {
            return None;
        }
    }
    Some(x)
}

/// A quadratic form with values mod 4 on a GF(2) subspace, refining a
/// symmetric bilinear form mod 2 through
/// `q(x + y) = q(x) + q(y) + 2 b(x, y) (mod 4)`.
///
/// Values are stored on the canonical basis and extended by the
/// refinement law; exhaustive tabulation is only used by oracle tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mod4Quadratic {
    space: F2Subspace,
    basis_values: Vec<u8>,
    bilinear: Vec<Vec<u8>>,
}

impl Mod4Quadratic {
    pub fn new(
        space: F2Subspace,
        basis_values: Vec<u8>,
        bilinear: Vec<Vec<u8>>,
    ) -> Result<Self, F2Error> {
        let d = space.dim();
        if basis_values.len() != d || bilinear.len() != d {
            return Err(F2Error::Inconsistent(format!(
                "expected {d} basis values and a {d}x{d} bilinear matrix"
            )));
        }
        for (i, row) in bilinear.iter().enumerate() {
            if row.len() != d {
                return Err(F2Error::Inconsistent(format!(
                    "bilinear row {i} has length {}, expected {d}",
                    row.len()
                )));
            }
        }
        for i in 0..d {
            if basis_values[i] > 3 {
                return Err(F2Error::Inconsistent(format!(
                    "basis value {i} not reduced mod 4"
                )));
            }
            for j in 0..d {
                if bilinear[i][j] > 1 {
                    return Err(F2Error::Inconsistent(format!(
                        "bilinear entry ({i},{j}) not reduced mod 2"
                    )));
                }
                if bilinear[i][j] != bilinear[j][i] {
                    return Err(F2Error::Inconsistent(format!(
                        "bilinear form not symmetric at ({i},{j})"
                    )));
                }
            }
            if bilinear[i][i] != basis_values[i] % 2 {
                return Err(F2Error::Inconsistent(format!(
                    "refinement law needs b(x,x) = q(x) mod 2 on basis vector {i}"
                )));
            }
        }
        Ok(Mod4Quadratic {
            space,
            basis_values,
            bilinear,
        })
    }

    pub fn space(&self) -> &F2Subspace {
        &self.space
    }

    /// q on an arbitrary element of the space, extended from the basis by
    /// the refinement law.
    pub fn value(&self, v: u64) -> Result<u8, F2Error> {
        let coords = self.space.coordinates(v)?;
        let selected: Vec<usize> = (0..coords.len()).filter(|&i| coords[i] == 1).collect();
        let mut q: u8 = 0;
        for (pos, &i) in selected.iter().enumerate() {
            q = (q + self.basis_values[i]) % 4;
            for &j in &selected[pos + 1..] {
                q = (q + 2 * self.bilinear[i][j]) % 4;
            }
        }
        Ok(q)
    }

    pub fn bilinear_value(&self, v: u64, w: u64) -> Result<u8, F2Error> {
        let cv = self.space.coordinates(v)?;
        let cw = self.space.coordinates(w)?;
        let mut b = 0u8;
        for i in 0..cv.len() {
            if cv[i] == 0 {
                continue;
            }
            for j in 0..cw.len() {
                if cw[j] == 1 {
                    b ^= self.bilinear[i][j];
                }
            }
        }
        Ok(b)
    }

    /// True when q takes only even values, i.e. lands in {0, 2} mod 4.
    /// Parity of q is linear, so checking the basis suffices.
    pub fn is_even(&self) -> bool {
        self.basis_values.iter().all(|&v| v % 2 == 0)
    }

    /// GF(2) dimension of the radical of the bilinear form.
    pub fn radical_dim(&self) -> usize {
        let d = self.space.dim();
        let rows: Vec<u64> = (0..d)
            .map(|i| {
                let mut r = 0u64;
                for j in 0..d {
                    if self.bilinear[i][j] == 1 {
                        r |= 1 << j;
                    }
                }
                r
            })
            .collect();
        kernel_f2(&rows, d).len()
    }
}
