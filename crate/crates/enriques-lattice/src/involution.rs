//! Involutions of integer lattices and their invariant calculus: fixed and
//! anti-fixed sublattices, the triple (r, a, delta), the characteristic
//! element, the quadratic and bilinear descent forms, and the extension
//! invariants of an involution relative to an invariant sublattice.
//!
//! All computations are exact. The eigenlattices come from unimodular
//! column reduction over the integers, so they are primitive by
//! construction; delta is computed along two independent routes that must
//! agree before a triple is returned.

use crate::f2::{
    intersect, orthogonal_complement_in, solve_f2, span_mod2, F2Subspace, Mod4Quadratic,
};
use crate::lattice::{determinant, to_bigint, IntegerLattice};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvolutionError {
    #[error("involution matrix must be {expected}x{expected}")]
    MatrixSize { expected: usize },
    #[error("not an involution")]
    NotInvolution,
    #[error("not an isometry")]
    NotIsometry,
    #[error("characteristic element requires unimodular lattice")]
    RequiresUnimodular,
    #[error("triple invariants require an even unimodular lattice")]
    RequiresEvenUnimodular,
    #[error("extension invariants require a unimodular ambient lattice")]
    ExtensionRequiresUnimodular,
    #[error("invariant computation inconsistent: {0}")]
    Inconsistent(String),
    #[error("sublattice basis vector {index} has length {found}, expected {expected}")]
    SublatticeVectorSize {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("sublattice basis not linearly independent")]
    SublatticeDependent,
    #[error("sublattice not primitive")]
    SublatticeNotPrimitive,
    #[error("sublattice not invariant under the involution")]
    SublatticeNotInvariant,
    #[error("invariant a - h_plus - h_minus must be 0 or 1, got {0}")]
    AlphaOutOfRange(i64),
}

/// An order-2 isometry of an integer lattice. The matrix acts on column
/// coordinate vectors; column j is the image of basis vector j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeInvolution {
    lattice: IntegerLattice,
    matrix: Vec<Vec<i64>>,
}

impl LatticeInvolution {
    pub fn lattice(&self) -> &IntegerLattice {
        &self.lattice
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    /// Image of a coordinate vector under the involution.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        matvec(&self.matrix, x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EigenSign {
    Plus,
    Minus,
}

impl EigenSign {
    fn factor(self) -> i64 {
        match self {
            EigenSign::Plus => 1,
            EigenSign::Minus => -1,
        }
    }
}

/// The invariant triple (r, a, delta) of an involution on an even
/// unimodular lattice: r is the rank of the fixed sublattice, a the GF(2)
/// dimension of the descent group A, and delta records whether the
/// quadratic form on A takes an odd value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct K3Triple {
    pub r: u32,
    pub a: u32,
    pub delta: u8,
}

/// Invariants of an involution sigma relative to a primitive
/// sigma-invariant sublattice S.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionInvariants {
    pub h_plus: u32,
    pub h_minus: u32,
    pub gamma: u32,
    pub alpha: u8,
    pub delta_sigma_s: u8,
    pub delta_sigma_cap: u8,
    /// Class of the characteristic element over the sublattice basis
    /// mod 2, present exactly when `delta_sigma_s == 0`.
    pub s_sigma_class: Option<Vec<u8>>,
}

/// Checks that `m` is an order-2 isometry of `l` and packages the pair.
pub fn validate_involution(
    l: &IntegerLattice,
    m: &[Vec<i64>],
) -> Result<LatticeInvolution, InvolutionError> {
    let n = l.rank();
    if m.len() != n || m.iter().any(|row| row.len() != n) {
        return Err(InvolutionError::MatrixSize { expected: n });
    }
    let square = matmul(m, m);
    if square != identity_matrix(n) {
        return Err(InvolutionError::NotInvolution);
    }
    let preserved = matmul(&matmul(&transpose(m), l.gram()), m);
    if preserved != l.gram() {
        return Err(InvolutionError::NotIsometry);
    }
    Ok(LatticeInvolution {
        lattice: l.clone(),
        matrix: m.to_vec(),
    })
}

/// Basis of the eigenlattice {x : phi(x) = sign * x}, the saturated integer
/// kernel of (matrix - sign * I). Kernels of integer matrices are saturated
/// as subgroups, so the basis spans a primitive sublattice.
pub fn eigenlattice(inv: &LatticeInvolution, sign: EigenSign) -> Vec<Vec<i64>> {
    let mut d = inv.matrix.clone();
    for (i, row) in d.iter_mut().enumerate() {
        row[i] -= sign.factor();
    }
    integer_kernel(&d)
}

/// The unique class s in L/2L with x . phi(x) = s . x (mod 2) for all x.
/// Returned as one bit per ambient coordinate.
pub fn characteristic_element(inv: &LatticeInvolution) -> Result<Vec<u8>, InvolutionError> {
    Ok(bits_to_vec(
        characteristic_bits(inv)?,
        inv.rank(),
    ))
}

fn characteristic_bits(inv: &LatticeInvolution) -> Result<u64, InvolutionError> {
    let n = inv.rank();
    let gram = inv.lattice.gram();
    if determinant(&to_bigint(gram)).abs() != BigInt::one() {
        return Err(InvolutionError::RequiresUnimodular);
    }
    // Equation i: sum_j s_j gram[i][j] = e_i . phi(e_i) = (gram * matrix)[i][i].
    let mut rows = Vec::with_capacity(n);
    let mut rhs = 0u64;
    for i in 0..n {
        let mut row = 0u64;
        for j in 0..n {
            if gram[i][j].rem_euclid(2) == 1 {
                row |= 1 << j;
            }
        }
        rows.push(row);
        let mut diag: i128 = 0;
        for k in 0..n {
            diag += gram[i][k] as i128 * inv.matrix[k][i] as i128;
        }
        if diag.rem_euclid(2) == 1 {
            rhs |= 1 << i;
        }
    }
    solve_f2(&rows, rhs, n).ok_or_else(|| {
        InvolutionError::Inconsistent(
            "characteristic system unsolvable over a unimodular Gram matrix".into(),
        )
    })
}

/// Delta decided by whether the characteristic element vanishes.
pub fn delta_from_characteristic_element(
    inv: &LatticeInvolution,
) -> Result<u8, InvolutionError> {
    Ok(u8::from(characteristic_bits(inv)? != 0))
}

/// Delta decided by whether the quadratic form on A takes an odd value.
pub fn delta_from_quadratic_form(inv: &LatticeInvolution) -> Result<u8, InvolutionError> {
    require_even_unimodular(inv)?;
    let data = descent_data(inv)?;
    Ok(u8::from(!data.form.is_even()))
}

/// The quadratic form q with values mod 4 on the descent group A, refining
/// the bilinear form b mod 2.
pub fn discriminant_form(inv: &LatticeInvolution) -> Result<Mod4Quadratic, InvolutionError> {
    require_even_unimodular(inv)?;
    Ok(descent_data(inv)?.form)
}

fn require_even_unimodular(inv: &LatticeInvolution) -> Result<(), InvolutionError> {
    let props = crate::lattice::lattice_properties(&inv.lattice)
        .map_err(|_| InvolutionError::RequiresEvenUnimodular)?;
    if !props.even || !props.unimodular {
        return Err(InvolutionError::RequiresEvenUnimodular);
    }
    Ok(())
}

/// The triple (r, a, delta) of an involution on an even unimodular
/// lattice. Delta is computed both from the quadratic form and from the
/// characteristic element; disagreement, or a determinant that fails the
/// 2^a cross-check, aborts with an inconsistency error.
pub fn k3_triple(inv: &LatticeInvolution) -> Result<K3Triple, InvolutionError> {
    require_even_unimodular(inv)?;
    let data = descent_data(inv)?;
    let n = inv.rank();
    let r = data.plus.len();
    let a = data.a_space.dim();
    if a > r || a > n - r {
        return Err(InvolutionError::Inconsistent(format!(
            "a = {a} exceeds an eigenlattice rank (r = {r}, rank = {n})"
        )));
    }
    let from_form = u8::from(!data.form.is_even());
    let from_char = u8::from(characteristic_bits(inv)? != 0);
    if from_form != from_char {
        return Err(InvolutionError::Inconsistent(format!(
            "delta routes disagree: quadratic form gives {from_form}, \
             characteristic element gives {from_char}"
        )));
    }
    Ok(K3Triple {
        r: r as u32,
        a: a as u32,
        delta: from_form,
    })
}

/// Invariants of sigma relative to the primitive invariant sublattice
/// spanned by `s_basis`: dimensions of H_+ and H_-, the pairing defect
/// gamma, the extension defect alpha, and the two characteristic-element
/// membership flags.
pub fn extension_invariants(
    inv: &LatticeInvolution,
    s_basis: &[Vec<i64>],
) -> Result<ExtensionInvariants, InvolutionError> {
    let n = inv.rank();
    for (index, v) in s_basis.iter().enumerate() {
        if v.len() != n {
            return Err(InvolutionError::SublatticeVectorSize {
                index,
                found: v.len(),
                expected: n,
            });
        }
    }
    if determinant(&to_bigint(inv.lattice.gram())).abs() != BigInt::one() {
        return Err(InvolutionError::ExtensionRequiresUnimodular);
    }
    let k = s_basis.len();

    let factors = smith_invariant_factors(&columns_to_matrix(s_basis, n));
    let rank = factors.iter().filter(|f| !f.is_zero()).count();
    if rank < k {
        return Err(InvolutionError::SublatticeDependent);
    }
    if factors.iter().any(|f| *f != BigInt::one()) {
        return Err(InvolutionError::SublatticeNotPrimitive);
    }

    // sigma restricted to S: solve sigma(b_j) = sum_i c[i][j] b_i exactly.
    let mut c = vec![vec![0i64; k]; k];
    for j in 0..k {
        let target = inv.apply(&s_basis[j]);
        let coeffs = rational_solve(s_basis, &target)
            .ok_or(InvolutionError::SublatticeNotInvariant)?;
        for (i, x) in coeffs.into_iter().enumerate() {
            if !x.is_integer() {
                return Err(InvolutionError::SublatticeNotInvariant);
            }
            c[i][j] = x
                .to_integer()
                .to_i64()
                .expect("restricted involution entry fits in i64");
        }
    }
    debug_assert_eq!(matmul(&c, &c), identity_matrix(k), "restriction squares to identity");

    // S_plus and S_minus: kernels of (c -+ I) mapped back to ambient coordinates.
    let eigen_basis = |sign: i64| -> Vec<Vec<i64>> {
        let mut d = c.clone();
        for (i, row) in d.iter_mut().enumerate() {
            row[i] -= sign;
        }
        integer_kernel(&d)
            .into_iter()
            .map(|y| linear_combination(s_basis, &y))
            .collect()
    };
    let s_plus = eigen_basis(1);
    let s_minus = eigen_basis(-1);

    let data = descent_data(inv)?;
    let a = data.a_space.dim();

    let image = |vectors: &[Vec<i64>]| -> Result<F2Subspace, InvolutionError> {
        span_mod2(vectors, n).map_err(|e| InvolutionError::Inconsistent(e.to_string()))
    };
    let s_plus_img = image(&s_plus)?;
    let s_minus_img = image(&s_minus)?;
    debug_assert_eq!(
        s_plus_img.dim(),
        s_plus.len(),
        "primitive sublattice injects mod 2"
    );
    let h_plus_space = intersect(&s_plus_img, &data.a_space)
        .map_err(|e| InvolutionError::Inconsistent(e.to_string()))?;
    let h_minus_space = intersect(&s_minus_img, &data.a_space)
        .map_err(|e| InvolutionError::Inconsistent(e.to_string()))?;
    let h_plus = h_plus_space.dim();
    let h_minus = h_minus_space.dim();

    // gamma = h_minus - dim {x in H_- : b(x, H_+) = 0}.
    let form = &data.form;
    let pairing = |x: u64, y: u64| -> u8 {
        form.bilinear_value(x, y)
            .expect("H subspaces lie inside the descent group")
    };
    let perp = orthogonal_complement_in(pairing, &h_minus_space, &h_plus_space)
        .map_err(|e| InvolutionError::Inconsistent(e.to_string()))?;
    let gamma = h_minus - perp.dim();

    let alpha = a as i64 - h_plus as i64 - h_minus as i64;
    if alpha != 0 && alpha != 1 {
        return Err(InvolutionError::AlphaOutOfRange(alpha));
    }

    let s_bits = characteristic_bits(inv)?;
    let s_img = image(s_basis)?;
    let cap = intersect(&s_plus_img, &s_minus_img)
        .map_err(|e| InvolutionError::Inconsistent(e.to_string()))?;
    let delta_sigma_s = u8::from(!s_img.contains(s_bits));
    let delta_sigma_cap = u8::from(!cap.contains(s_bits));

    let s_sigma_class = if delta_sigma_s == 0 {
        let rows = mod2_coordinate_rows(s_basis, n);
        let coeffs = solve_f2(&rows, s_bits, k).ok_or_else(|| {
            InvolutionError::Inconsistent(
                "characteristic element reported inside S/2S but has no coordinates".into(),
            )
        })?;
        Some(bits_to_vec(coeffs, k))
    } else {
        None
    };

    debug_assert!(gamma <= h_minus);
    debug_assert!(
        !(delta_sigma_s == 1 && delta_sigma_cap == 0),
        "membership in the intersection image implies membership in S/2S"
    );
    Ok(ExtensionInvariants {
        h_plus: h_plus as u32,
        h_minus: h_minus as u32,
        gamma: gamma as u32,
        alpha: alpha as u8,
        delta_sigma_s,
        delta_sigma_cap,
        s_sigma_class,
    })
}

/// Mod-2 data of an involution: eigenlattice bases, the descent group
/// A = (L_+/2L_+) intersect (L_-/2L_-) inside L/2L, and the quadratic form
/// on A built from integer lifts into the fixed sublattice.
struct DescentData {
    plus: Vec<Vec<i64>>,
    a_space: F2Subspace,
    form: Mod4Quadratic,
}

fn descent_data(inv: &LatticeInvolution) -> Result<DescentData, InvolutionError> {
    let n = inv.rank();
    let plus = eigenlattice(inv, EigenSign::Plus);
    let minus = eigenlattice(inv, EigenSign::Minus);
    if plus.len() + minus.len() != n {
        return Err(InvolutionError::Inconsistent(format!(
            "eigenlattice ranks {} + {} do not sum to the ambient rank {n}",
            plus.len(),
            minus.len()
        )));
    }
    let plus_img = span_mod2(&plus, n).map_err(|e| InvolutionError::Inconsistent(e.to_string()))?;
    let minus_img =
        span_mod2(&minus, n).map_err(|e| InvolutionError::Inconsistent(e.to_string()))?;
    let a_space =
        intersect(&plus_img, &minus_img).map_err(|e| InvolutionError::Inconsistent(e.to_string()))?;
    let a = a_space.dim();

    let expected = BigInt::one() << a;
    for (label, basis) in [("L_+", &plus), ("L_-", &minus)] {
        let det = determinant(&to_bigint(&inv.lattice.restricted_gram(basis))).abs();
        if det != expected {
            return Err(InvolutionError::Inconsistent(format!(
                "|det {label}| = {det} but dim A = {a} demands 2^{a}"
            )));
        }
    }

    // Lift each basis class of A into the fixed sublattice and read off
    // q(v) = (v.v)/2 mod 4 and b(v, w) = (v.w)/2 mod 2.
    let coord_rows = mod2_coordinate_rows(&plus, n);
    let lifts: Vec<Vec<i64>> = a_space
        .basis()
        .iter()
        .map(|&class| {
            let coeffs = solve_f2(&coord_rows, class, plus.len()).ok_or_else(|| {
                InvolutionError::Inconsistent(
                    "descent class has no lift into the fixed sublattice".into(),
                )
            })?;
            Ok(linear_combination(&plus, &bits_to_i64(coeffs, plus.len())))
        })
        .collect::<Result<_, InvolutionError>>()?;

    let mut values = Vec::with_capacity(a);
    let mut bilinear = vec![vec![0u8; a]; a];
    for i in 0..a {
        for j in i..a {
            let prod = inv.lattice.dot(&lifts[i], &lifts[j]);
            if prod.rem_euclid(2) != 0 {
                return Err(InvolutionError::Inconsistent(format!(
                    "lifted descent classes {i} and {j} have odd product {prod}"
                )));
            }
            let half = prod / 2;
            if i == j {
                values.push(half.rem_euclid(4) as u8);
            }
            let bit = half.rem_euclid(2) as u8;
            bilinear[i][j] = bit;
            bilinear[j][i] = bit;
        }
    }
    let form = Mod4Quadratic::new(a_space.clone(), values, bilinear)
        .map_err(|e| InvolutionError::Inconsistent(e.to_string()))?;
    if form.radical_dim() != 0 {
        return Err(InvolutionError::Inconsistent(
            "bilinear form degenerate on the descent group".into(),
        ));
    }
    Ok(DescentData { plus, a_space, form })
}

/// Basis of the integer kernel of `d` (rows are equations), found by
/// unimodular column reduction with a tracked transform. The returned
/// basis generates the full kernel subgroup, which is saturated.
pub(crate) fn integer_kernel(d: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rows = d.len();
    let cols = if rows == 0 { 0 } else { d[0].len() };
    let mut a: Vec<Vec<i128>> = d
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let mut v: Vec<Vec<i128>> = (0..cols)
        .map(|i| (0..cols).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut col = 0;
    for r in 0..rows {
        if col == cols {
            break;
        }
        loop {
            let mut pivot = None;
            for j in col..cols {
                if a[r][j] != 0
                    && pivot.is_none_or(|p: usize| a[r][j].unsigned_abs() < a[r][p].unsigned_abs())
                {
                    pivot = Some(j);
                }
            }
            let Some(p) = pivot else { break };
            let mut residue = false;
            for j in col..cols {
                if j == p || a[r][j] == 0 {
                    continue;
                }
                let q = a[r][j] / a[r][p];
                for row in a.iter_mut() {
                    let sub = q * row[p];
                    row[j] -= sub;
                }
                for row in v.iter_mut() {
                    let sub = q * row[p];
                    row[j] -= sub;
                }
                if a[r][j] != 0 {
                    residue = true;
                }
            }
            if !residue {
                for row in a.iter_mut() {
                    row.swap(p, col);
                }
                for row in v.iter_mut() {
                    row.swap(p, col);
                }
                col += 1;
                break;
            }
        }
    }
    (col..cols)
        .map(|j| {
            debug_assert!((0..rows).all(|r| a[r][j] == 0), "kernel column is annihilated");
            (0..cols)
                .map(|i| i64::try_from(v[i][j]).expect("kernel entry fits in i64"))
                .collect()
        })
        .collect()
}

/// Invariant factors (up to sign) of an integer matrix, in divisibility
/// order, one per nonzero diagonal of the Smith normal form.
pub(crate) fn smith_invariant_factors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a = to_bigint(m);
    let mut factors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let mut pos = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero()
                    && pos.is_none_or(|(pi, pj): (usize, usize)| {
                        a[i][j].abs() < a[pi][pj].abs()
                    })
                {
                    pos = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pos else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut residue = false;
        for i in (t + 1)..rows {
            if a[i][t].is_zero() {
                continue;
            }
            let q = &a[i][t] / &a[t][t];
            if !q.is_zero() {
                for j in t..cols {
                    let sub = &q * &a[t][j];
                    a[i][j] -= sub;
                }
            }
            if !a[i][t].is_zero() {
                residue = true;
            }
        }
        for j in (t + 1)..cols {
            if a[t][j].is_zero() {
                continue;
            }
            let q = &a[t][j] / &a[t][t];
            if !q.is_zero() {
                for i in t..rows {
                    let sub = &q * &a[i][t];
                    a[i][j] -= sub;
                }
            }
            if !a[t][j].is_zero() {
                residue = true;
            }
        }
        if residue {
            continue;
        }
        // Divisibility fixup: fold in any row holding a non-multiple.
        let mut divisible = true;
        'scan: for i in (t + 1)..rows {
            for j in (t + 1)..cols {
                if !(&a[i][j] % &a[t][t]).is_zero() {
                    for j2 in t..cols {
                        let add = a[i][j2].clone();
                        a[t][j2] += add;
                    }
                    divisible = false;
                    break 'scan;
                }
            }
        }
        if !divisible {
            continue;
        }
        factors.push(a[t][t].abs());
        t += 1;
    }
    factors
}

/// Solves `sum_i x_i basis_i = target` over the rationals, or None when the
/// target lies outside the span. Free coordinates of a dependent basis are
/// set to zero.
fn rational_solve(basis: &[Vec<i64>], target: &[i64]) -> Option<Vec<BigRational>> {
    let k = basis.len();
    let n = target.len();
    let mut aug: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..k)
                .map(|j| BigRational::from(BigInt::from(basis[j][i])))
                .chain(std::iter::once(BigRational::from(BigInt::from(target[i]))))
                .collect()
        })
        .collect();
    let mut pivot_row_of = vec![None; k];
    let mut next = 0;
    for c in 0..k {
        let Some(r) = (next..n).find(|&r| !aug[r][c].is_zero()) else {
            continue;
        };
        aug.swap(next, r);
        let inv = aug[next][c].recip();
        for x in aug[next].iter_mut() {
            *x *= &inv;
        }
        for r2 in 0..n {
            if r2 == next || aug[r2][c].is_zero() {
                continue;
            }
            let f = aug[r2][c].clone();
            for c2 in 0..=k {
                let sub = &f * &aug[next][c2];
                aug[r2][c2] -= sub;
            }
        }
        pivot_row_of[c] = Some(next);
        next += 1;
    }
    for r in next..n {
        if !aug[r][k].is_zero() {
            return None;
        }
    }
    Some(
        (0..k)
            .map(|c| match pivot_row_of[c] {
                Some(r) => aug[r][k].clone(),
                None => BigRational::zero(),
            })
            .collect(),
    )
}

pub(crate) fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let m = if n == 0 { 0 } else { b[0].len() };
    let inner = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc: i128 = 0;
                    for k in 0..inner {
                        acc += a[i][k] as i128 * b[k][j] as i128;
                    }
                    i64::try_from(acc).expect("matrix product entry fits in i64")
                })
                .collect()
        })
        .collect()
}

pub(crate) fn matvec(m: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| {
            let mut acc: i128 = 0;
            for (a, b) in row.iter().zip(x) {
                acc += *a as i128 * *b as i128;
            }
            i64::try_from(acc).expect("matrix-vector entry fits in i64")
        })
        .collect()
}

pub(crate) fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    (0..cols).map(|j| (0..rows).map(|i| m[i][j]).collect()).collect()
}

pub(crate) fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Rows indexed by ambient coordinate; bit j of row i is vector j's
/// coordinate i mod 2. Feeding these to the GF(2) solver expresses a class
/// over the given vectors.
fn mod2_coordinate_rows(vectors: &[Vec<i64>], n: usize) -> Vec<u64> {
    (0..n)
        .map(|i| {
            let mut row = 0u64;
            for (j, v) in vectors.iter().enumerate() {
                if v[i].rem_euclid(2) == 1 {
                    row |= 1 << j;
                }
            }
            row
        })
        .collect()
}

fn linear_combination(vectors: &[Vec<i64>], coeffs: &[i64]) -> Vec<i64> {
    let n = vectors.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            let mut acc: i128 = 0;
            for (v, &c) in vectors.iter().zip(coeffs) {
                acc += v[i] as i128 * c as i128;
            }
            i64::try_from(acc).expect("combination entry fits in i64")
        })
        .collect()
}

fn bits_to_vec(bits: u64, len: usize) -> Vec<u8> {
    (0..len).map(|i| (bits >> i & 1) as u8).collect()
}

fn bits_to_i64(bits: u64, len: usize) -> Vec<i64> {
    (0..len).map(|i| (bits >> i & 1) as i64).collect()
}

fn columns_to_matrix(columns: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| columns.iter().map(|c| c[i]).collect())
        .collect()
}
