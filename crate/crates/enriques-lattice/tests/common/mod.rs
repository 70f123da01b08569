//! Shared corpus of lattice involutions: named fixtures on U+U, U+E8 and
//! the K3 lattice, plus seeded random conjugates by products of
//! reflections in (-2)-vectors.

#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use enriques_lattice::involution::{validate_involution, LatticeInvolution};
use enriques_lattice::lattice::{direct_sum, standard_lattice, IntegerLattice};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn negate(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    m.iter()
        .map(|row| row.iter().map(|&x| -x).collect())
        .collect()
}

pub fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

/// Permutation matrix exchanging the coordinate ranges starting at `a`
/// and `b`, each of length `len`.
pub fn swap_ranges(n: usize, a: usize, b: usize, len: usize) -> Vec<Vec<i64>> {
    let mut m = identity_matrix(n);
    for i in 0..len {
        m[a + i][a + i] = 0;
        m[b + i][b + i] = 0;
        m[a + i][b + i] = 1;
        m[b + i][a + i] = 1;
    }
    m
}

/// Block-diagonal matrix acting as `block` on `len` coordinates starting
/// at `start` and as the identity elsewhere.
pub fn embed_block(n: usize, start: usize, block: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let len = block.len();
    let mut m = identity_matrix(n);
    for i in 0..len {
        for j in 0..len {
            m[start + i][start + j] = block[i][j];
        }
    }
    m
}

/// Reflection x -> x + (x . v) v in a vector v of square -2; an
/// integral involutive isometry of any lattice containing v.
pub fn reflection_in(l: &IntegerLattice, v: &[i64]) -> Vec<Vec<i64>> {
    assert_eq!(l.dot(v, v), -2, "reflection needs a (-2)-vector");
    let n = l.rank();
    let mut m = identity_matrix(n);
    for j in 0..n {
        let e_j: Vec<i64> = (0..n).map(|k| i64::from(k == j)).collect();
        let c = l.dot(&e_j, v);
        for i in 0..n {
            m[i][j] += c * v[i];
        }
    }
    m
}

/// All (-2)-vectors of the form e_i or e_i +- e_j over the basis.
pub fn root_pool(l: &IntegerLattice) -> Vec<Vec<i64>> {
    let n = l.rank();
    let mut pool = Vec::new();
    let basis = |i: usize| -> Vec<i64> { (0..n).map(|k| i64::from(k == i)).collect() };
    for i in 0..n {
        let v = basis(i);
        if l.dot(&v, &v) == -2 {
            pool.push(v);
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for s in [1i64, -1] {
                let mut v = basis(i);
                v[j] += s;
                if l.dot(&v, &v) == -2 {
                    pool.push(v);
                }
            }
        }
    }
    pool
}

/// Conjugates `m` by a product of `count` seeded random reflections.
/// Reflections are involutions, so the inverse of the product is the
/// reversed product and everything stays integral.
pub fn conjugate_by_reflections(
    l: &IntegerLattice,
    m: &[Vec<i64>],
    seed: u64,
    count: usize,
) -> Vec<Vec<i64>> {
    let pool = root_pool(l);
    assert!(!pool.is_empty(), "lattice has no short roots to reflect in");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let word: Vec<&Vec<i64>> = (0..count)
        .map(|_| pool.choose(&mut rng).expect("pool is nonempty"))
        .collect();
    let mut r = identity_matrix(l.rank());
    for v in &word {
        r = matmul(&r, &reflection_in(l, v));
    }
    let mut r_inv = identity_matrix(l.rank());
    for v in word.iter().rev() {
        r_inv = matmul(&r_inv, &reflection_in(l, v));
    }
    matmul(&r_inv, &matmul(m, &r))
}

/// One corpus entry: a validated involution, its display label, and the
/// label of the fixture it is conjugate to (itself for base fixtures).
pub struct CorpusEntry {
    pub label: String,
    pub base: String,
    pub inv: LatticeInvolution,
}

fn push_entry(out: &mut Vec<CorpusEntry>, l: &IntegerLattice, label: &str, m: Vec<Vec<i64>>) {
    let inv = validate_involution(l, &m)
        .unwrap_or_else(|e| panic!("fixture {label} should be a valid involution: {e}"));
    out.push(CorpusEntry {
        label: label.to_string(),
        base: label.to_string(),
        inv,
    });
}

fn uu() -> IntegerLattice {
    let u = standard_lattice("U").expect("U is standard");
    direct_sum(&u, &u)
}

fn base_fixtures() -> Vec<CorpusEntry> {
    let mut out = Vec::new();

    let uu = uu();
    let u_swap = vec![vec![0, 1], vec![1, 0]];
    let u_neg_swap = vec![vec![0, -1], vec![-1, 0]];
    push_entry(&mut out, &uu, "uu_identity", identity_matrix(4));
    push_entry(&mut out, &uu, "uu_negation", negate(&identity_matrix(4)));
    push_entry(&mut out, &uu, "uu_factor_swap", swap_ranges(4, 0, 2, 2));
    push_entry(&mut out, &uu, "uu_first_hyperbolic_swap", embed_block(4, 0, &u_swap));
    push_entry(
        &mut out,
        &uu,
        "uu_both_hyperbolic_swaps",
        matmul(&embed_block(4, 0, &u_swap), &embed_block(4, 2, &u_swap)),
    );
    push_entry(
        &mut out,
        &uu,
        "uu_mixed_sign_swaps",
        matmul(&embed_block(4, 0, &u_swap), &embed_block(4, 2, &u_neg_swap)),
    );
    push_entry(
        &mut out,
        &uu,
        "uu_factor_swap_negated",
        negate(&swap_ranges(4, 0, 2, 2)),
    );

    let enr = standard_lattice("ENRIQUES").expect("ENRIQUES is standard");
    push_entry(&mut out, &enr, "ue8_identity", identity_matrix(10));
    push_entry(&mut out, &enr, "ue8_negation", negate(&identity_matrix(10)));
    push_entry(
        &mut out,
        &enr,
        "ue8_negated_hyperbolic_factor",
        embed_block(10, 0, &negate(&identity_matrix(2))),
    );
    push_entry(
        &mut out,
        &enr,
        "ue8_negated_e8_factor",
        embed_block(10, 2, &negate(&identity_matrix(8))),
    );
    push_entry(
        &mut out,
        &enr,
        "ue8_hyperbolic_swap",
        embed_block(10, 0, &u_swap),
    );
    let enr_roots = root_pool(&enr);
    push_entry(
        &mut out,
        &enr,
        "ue8_root_reflection",
        reflection_in(&enr, &enr_roots[1]),
    );
    push_entry(
        &mut out,
        &enr,
        "ue8_negated_root_reflection",
        negate(&reflection_in(&enr, &enr_roots[2])),
    );

    let k3 = standard_lattice("K3").expect("K3 is standard");
    let mut enriques_action = vec![vec![0i64; 22]; 22];
    enriques_action[0][0] = -1;
    enriques_action[1][1] = -1;
    for i in 0..2 {
        enriques_action[4 + i][2 + i] = 1;
        enriques_action[2 + i][4 + i] = 1;
    }
    for i in 0..8 {
        enriques_action[14 + i][6 + i] = 1;
        enriques_action[6 + i][14 + i] = 1;
    }
    push_entry(&mut out, &k3, "k3_identity", identity_matrix(22));
    push_entry(&mut out, &k3, "k3_negation", negate(&identity_matrix(22)));
    push_entry(&mut out, &k3, "k3_enriques_action", enriques_action);
    push_entry(
        &mut out,
        &k3,
        "k3_first_hyperbolic_swap",
        embed_block(22, 0, &u_swap),
    );
    push_entry(
        &mut out,
        &k3,
        "k3_hyperbolic_factor_swap",
        swap_ranges(22, 2, 4, 2),
    );
    push_entry(&mut out, &k3, "k3_e8_factor_swap", swap_ranges(22, 6, 14, 8));
    push_entry(
        &mut out,
        &k3,
        "k3_negated_hyperbolic_factor",
        embed_block(22, 0, &negate(&identity_matrix(2))),
    );
    let k3_roots = root_pool(&k3);
    push_entry(
        &mut out,
        &k3,
        "k3_root_reflection",
        reflection_in(&k3, &k3_roots[0]),
    );
    push_entry(
        &mut out,
        &k3,
        "k3_mixed_root_reflection",
        reflection_in(&k3, k3_roots.last().expect("K3 has roots")),
    );

    out
}

/// Base fixtures plus two seeded reflection-conjugates of each: at least
/// fifty validated involutions across U+U, U+E8 and the K3 lattice.
pub fn involution_corpus() -> Vec<CorpusEntry> {
    let mut out = base_fixtures();
    let bases: Vec<(String, IntegerLattice, Vec<Vec<i64>>)> = out
        .iter()
        .map(|e| {
            (
                e.label.clone(),
                e.inv.lattice().clone(),
                e.inv.matrix().to_vec(),
            )
        })
        .collect();
    for (i, (label, l, m)) in bases.iter().enumerate() {
        for (j, seed) in [(1u64, 0x5eed_0001u64), (2u64, 0x5eed_0002u64)] {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ i as u64);
            let count = rng.gen_range(3..=8);
            let conj = conjugate_by_reflections(l, m, seed.wrapping_add(i as u64 * 97), count);
            let conj_label = format!("{label}_conjugate_{j}");
            let inv = validate_involution(l, &conj).unwrap_or_else(|e| {
                panic!("conjugate {conj_label} should stay a valid involution: {e}")
            });
            out.push(CorpusEntry {
                label: conj_label,
                base: label.clone(),
                inv,
            });
        }
    }
    out
}
