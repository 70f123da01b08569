//! Classification calculus for real Enriques surfaces: the admissible
//! theta triples, the relations tying the invariants of the two lifts
//! sigma and tau-sigma of a real structure, the non-orientable-component
//! count formulas, a machine-readable classification table with a full
//! row checker, and the derivation of the realized/unresolved lists of
//! topological types.
//!
//! The bundled table is a transcription frozen in `data/`; the checker is
//! the defense against transcription defects, so a failing check on a
//! bundled row is reported, never patched over silently.

use crate::involution::K3Triple;
use crate::topology::{
    euler, nonorientable_count, orientation_cover, parse_surface_type, triple_from_type,
    SurfaceType,
};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("line {line}: {detail}")]
    Parse { line: usize, detail: String },
    #[error("relations unsatisfiable")]
    RelationsUnsatisfiable,
    #[error("unknown theta triple")]
    UnknownTheta,
}

/// Invariant triple of the real structure acting on the Enriques lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThetaTriple {
    pub r: u32,
    pub a: u32,
    pub delta: u8,
}

impl fmt::Display for ThetaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.a, self.delta)
    }
}

const THETA_TRIPLES: [ThetaTriple; 16] = {
    const fn t(r: u32, a: u32, delta: u8) -> ThetaTriple {
        ThetaTriple { r, a, delta }
    }
    [
        t(1, 1, 1),
        t(2, 2, 1),
        t(3, 3, 1),
        t(4, 4, 1),
        t(5, 5, 1),
        t(9, 1, 1),
        t(8, 2, 1),
        t(7, 3, 1),
        t(6, 4, 1),
        t(0, 0, 0),
        t(8, 2, 0),
        t(5, 3, 1),
        t(6, 2, 1),
        t(7, 1, 1),
        t(4, 2, 0),
        t(8, 0, 0),
    ]
};

/// The 16 admissible theta triples, in published order.
pub fn theta_triples() -> &'static [ThetaTriple] {
    &THETA_TRIPLES
}

/// Invariants of the partner lift: given sigma's triple and the theta
/// triple, the other lift has r' = 12 + 2 r(theta) - r, a' = 10 +
/// 2 a(theta) + 2 gamma + 2 alpha - a, and delta' = delta(theta) - delta
/// mod 2.
pub fn partner_triple(
    sigma: K3Triple,
    theta: ThetaTriple,
    gamma: u32,
    alpha: u8,
) -> Result<K3Triple, ClassifyError> {
    debug_assert!(alpha <= 1);
    let r = 12 + 2 * theta.r as i64 - sigma.r as i64;
    let a = 10 + 2 * theta.a as i64 + 2 * gamma as i64 + 2 * alpha as i64 - sigma.a as i64;
    if r < 0 || a < 0 {
        return Err(ClassifyError::RelationsUnsatisfiable);
    }
    let delta = (theta.delta as i64 - sigma.delta as i64).rem_euclid(2) as u8;
    Ok(K3Triple {
        r: r as u32,
        a: a as u32,
        delta,
    })
}

/// Non-orientable component count of the common quotient when both real
/// loci are nonempty: 1 + alpha (2 delta_cap - 1) + gamma.
pub fn s_nor_formula(alpha: u8, delta_cap: u8, gamma: u32) -> i64 {
    1 + alpha as i64 * (2 * delta_cap as i64 - 1) + gamma as i64
}

/// Upper bound for the non-orientable component count when one real locus
/// is empty: 2 - alpha + gamma.
pub fn s_nor_bound(alpha: u8, gamma: u32) -> i64 {
    2 - alpha as i64 + gamma as i64
}

/// The three delta flags of one lift as stated in a table row; `None`
/// means the source leaves the flag unstated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DeltaFlags {
    pub delta: Option<u8>,
    pub delta_s: Option<u8>,
    pub delta_cap: Option<u8>,
}

impl DeltaFlags {
    pub fn unstated() -> Self {
        DeltaFlags::default()
    }

    /// Closure under the flag implications
    /// delta = 0 => delta_S = 0 and delta_cap = 0, and
    /// delta_S = 1 => delta = 1 and delta_cap = 1,
    /// together with their contrapositives. Idempotent and
    /// order-independent; a contradiction yields the offending rule.
    pub fn closed(mut self) -> Result<Self, String> {
        fn set(slot: &mut Option<u8>, value: u8, rule: &str) -> Result<bool, String> {
            match *slot {
                None => {
                    *slot = Some(value);
                    Ok(true)
                }
                Some(v) if v == value => Ok(false),
                Some(v) => Err(format!("{rule}, but it is stated as {v}")),
            }
        }
        loop {
            let mut changed = false;
            if self.delta == Some(0) {
                changed |= set(&mut self.delta_s, 0, "delta=0 forces delta_S=0")?;
                changed |= set(&mut self.delta_cap, 0, "delta=0 forces delta_cap=0")?;
            }
            if self.delta_s == Some(1) {
                changed |= set(&mut self.delta, 1, "delta_S=1 forces delta=1")?;
                changed |= set(&mut self.delta_cap, 1, "delta_S=1 forces delta_cap=1")?;
            }
            if self.delta_cap == Some(1) {
                changed |= set(&mut self.delta, 1, "delta_cap=1 forces delta=1")?;
            }
            if self.delta_cap == Some(0) {
                changed |= set(&mut self.delta_s, 0, "delta_cap=0 forces delta_S=0")?;
            }
            if !changed {
                return Ok(self);
            }
        }
    }
}

/// One or-branch of a row: the two quotient halves and their union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub y_sigma: SurfaceType,
    pub y_tausigma: SurfaceType,
    pub y: SurfaceType,
}

/// One transcribed classification-table record. Flags are stored exactly
/// as stated so that formatting reproduces the source line; the checker
/// applies the implication closure on the fly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub id: String,
    pub theta: ThetaTriple,
    pub alpha: u8,
    pub x_sigma: SurfaceType,
    pub flags_sigma: DeltaFlags,
    pub x_tausigma: SurfaceType,
    pub flags_tausigma: DeltaFlags,
    pub branches: Vec<Branch>,
}

/// Result of one named consistency check on a row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// All checks run on one row; the row passes iff every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowReport {
    pub row_id: String,
    pub checks: Vec<CheckResult>,
}

impl RowReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSummary {
    pub total: usize,
    pub passed: usize,
    pub reports: Vec<RowReport>,
}

/// Deltas of the two lifts after resolution, with notes about how
/// unstated values were filled in.
struct DeltaResolution {
    sigma: u8,
    tausigma: u8,
    notes: Vec<String>,
}

/// Shapes whose triple admits only one delta: the empty locus and a pair
/// of tori force delta = 0, a single torus forces delta = 1.
fn shape_forced_delta(t: &SurfaceType) -> Option<u8> {
    if t.is_empty() {
        return Some(0);
    }
    let comps = t.components();
    let tori = comps.iter().filter(|c| c.orientable && c.genus == 1).count();
    if comps.len() == 2 && tori == 2 {
        return Some(0);
    }
    if comps.len() == 1 && tori == 1 {
        return Some(1);
    }
    None
}

fn resolve_deltas(row: &TableRow, closed_sigma: &DeltaFlags, closed_tau: &DeltaFlags) -> DeltaResolution {
    let parity = |known: u8| (row.theta.delta as i64 - known as i64).rem_euclid(2) as u8;
    let mut notes = Vec::new();
    let (sigma, tausigma) = match (closed_sigma.delta, closed_tau.delta) {
        (Some(s), Some(t)) => (s, t),
        (Some(s), None) => {
            notes.push("delta(tausigma) resolved by parity with theta".into());
            (s, parity(s))
        }
        (None, Some(t)) => {
            notes.push("delta(sigma) resolved by parity with theta".into());
            (parity(t), t)
        }
        (None, None) => {
            if let Some(s) = shape_forced_delta(&row.x_sigma) {
                notes.push("delta(sigma) forced by its shape, partner by parity".into());
                (s, parity(s))
            } else if let Some(t) = shape_forced_delta(&row.x_tausigma) {
                notes.push("delta(tausigma) forced by its shape, partner by parity".into());
                (parity(t), t)
            } else {
                notes.push(
                    "deltas unstated and not forced by shape; assuming delta(sigma)=0".into(),
                );
                (0, parity(0))
            }
        }
    };
    DeltaResolution { sigma, tausigma, notes }
}

/// delta_cap of one lift: the stated (closed) flag, or 0 when the
/// resolved delta vanishes, since delta = 0 forces delta_cap = 0.
fn effective_delta_cap(closed: &DeltaFlags, resolved_delta: u8) -> Option<u8> {
    closed
        .delta_cap
        .or(if resolved_delta == 0 { Some(0) } else { None })
}

/// Runs all consistency checks on one row. Checks that depend on an
/// earlier failed check are omitted rather than reported as failures:
/// the sum and parity relations need both triples, and the two
/// non-orientable-count checks additionally need the derived gamma.
pub fn check_row(row: &TableRow) -> RowReport {
    let mut checks = Vec::new();

    let theta_ok = theta_triples().contains(&row.theta);
    checks.push(CheckResult {
        name: "theta_listed",
        passed: theta_ok,
        detail: if theta_ok {
            format!("theta {} is among the 16 admissible triples", row.theta)
        } else {
            format!("theta {} is not among the 16 admissible triples", row.theta)
        },
    });

    let closed = (|| -> Result<(DeltaFlags, DeltaFlags), String> {
        Ok((row.flags_sigma.closed()?, row.flags_tausigma.closed()?))
    })();

    let mut triples = None;
    match &closed {
        Err(conflict) => checks.push(CheckResult {
            name: "triples",
            passed: false,
            detail: format!("flag implication violated: {conflict}"),
        }),
        Ok((closed_sigma, closed_tau)) => {
            let res = resolve_deltas(row, closed_sigma, closed_tau);
            let sigma_triple = triple_from_type(&row.x_sigma, res.sigma);
            let tau_triple = triple_from_type(&row.x_tausigma, res.tausigma);
            match (sigma_triple, tau_triple) {
                (Ok(s), Ok(t)) => {
                    let mut detail = format!(
                        "sigma ({},{},{}) from {}, tausigma ({},{},{}) from {}",
                        s.r, s.a, s.delta, row.x_sigma, t.r, t.a, t.delta, row.x_tausigma
                    );
                    for note in &res.notes {
                        detail.push_str("; ");
                        detail.push_str(note);
                    }
                    checks.push(CheckResult { name: "triples", passed: true, detail });
                    triples = Some((s, t, res, closed_sigma, closed_tau));
                }
                (sig, tau) => {
                    let mut problems = Vec::new();
                    if let Err(e) = sig {
                        problems.push(format!(
                            "x_sigma = {} with delta {}: {e}",
                            row.x_sigma, res.sigma
                        ));
                    }
                    if let Err(e) = tau {
                        problems.push(format!(
                            "x_tausigma = {} with delta {}: {e}",
                            row.x_tausigma, res.tausigma
                        ));
                    }
                    checks.push(CheckResult {
                        name: "triples",
                        passed: false,
                        detail: problems.join("; "),
                    });
                }
            }
        }
    }

    let mut gamma = None;
    if let Some((sig, tau, res, closed_sigma, closed_tau)) = &triples {
        let rank_sum = sig.r as i64 + tau.r as i64;
        let rank_expected = 12 + 2 * row.theta.r as i64;
        checks.push(CheckResult {
            name: "rank_sum",
            passed: rank_sum == rank_expected,
            detail: format!("r(sigma) + r(tausigma) = {rank_sum}, expected {rank_expected}"),
        });

        let numerator =
            sig.a as i64 + tau.a as i64 - 10 - 2 * row.theta.a as i64 - 2 * row.alpha as i64;
        if numerator >= 0 && numerator % 2 == 0 {
            gamma = Some((numerator / 2) as u32);
            checks.push(CheckResult {
                name: "a_sum",
                passed: true,
                detail: format!("gamma = {} derived from the a-relation", numerator / 2),
            });
        } else {
            checks.push(CheckResult {
                name: "a_sum",
                passed: false,
                detail: format!(
                    "a-relation needs 2 gamma = {numerator} with gamma a nonnegative integer"
                ),
            });
        }

        let parity = (sig.delta + tau.delta) % 2;
        checks.push(CheckResult {
            name: "delta_parity",
            passed: parity == row.theta.delta,
            detail: format!(
                "delta(sigma) + delta(tausigma) = {parity} mod 2, theta has {}",
                row.theta.delta
            ),
        });

        if let Some(gamma) = gamma {
            let sigma_empty = row.x_sigma.is_empty();
            let tau_empty = row.x_tausigma.is_empty();
            if !sigma_empty && !tau_empty {
                checks.push(check_s_nor_formula(
                    row,
                    gamma,
                    res,
                    closed_sigma,
                    closed_tau,
                ));
            } else if sigma_empty != tau_empty {
                let (empty_flags, empty_delta) = if sigma_empty {
                    (closed_sigma, res.sigma)
                } else {
                    (closed_tau, res.tausigma)
                };
                checks.push(check_s_nor_bound(row, gamma, empty_flags, empty_delta));
            }
            // Both sides empty: neither counting law applies.
        }
    }

    checks.push(check_covering(row));
    checks.push(check_euler_sum(row));

    RowReport {
        row_id: row.id.clone(),
        checks,
    }
}

fn check_covering(row: &TableRow) -> CheckResult {
    let mut problems = Vec::new();
    for (i, b) in row.branches.iter().enumerate() {
        let cover_sigma = orientation_cover(&b.y_sigma);
        if cover_sigma != row.x_sigma {
            problems.push(format!(
                "branch {}: cover of y_sigma is {cover_sigma}, x_sigma is {}",
                i + 1,
                row.x_sigma
            ));
        }
        let cover_tau = orientation_cover(&b.y_tausigma);
        if cover_tau != row.x_tausigma {
            problems.push(format!(
                "branch {}: cover of y_tausigma is {cover_tau}, x_tausigma is {}",
                i + 1,
                row.x_tausigma
            ));
        }
        let union = SurfaceType::from_components(
            b.y_sigma
                .components()
                .iter()
                .chain(b.y_tausigma.components())
                .copied(),
        );
        if union != b.y {
            problems.push(format!(
                "branch {}: y_sigma and y_tausigma unite to {union}, y is {}",
                i + 1,
                b.y
            ));
        }
    }
    CheckResult {
        name: "covering",
        passed: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("all {} branches cover consistently", row.branches.len())
        } else {
            problems.join("; ")
        },
    }
}

fn check_s_nor_formula(
    row: &TableRow,
    gamma: u32,
    res: &DeltaResolution,
    closed_sigma: &DeltaFlags,
    closed_tau: &DeltaFlags,
) -> CheckResult {
    let (candidates, mut notes): (Vec<u8>, Vec<String>) =
        match effective_delta_cap(closed_sigma, res.sigma) {
            Some(v) => (vec![v], Vec::new()),
            None => match effective_delta_cap(closed_tau, res.tausigma) {
                Some(v) => (
                    vec![v],
                    vec!["delta_cap taken from the tausigma flags".into()],
                ),
                None => (
                    vec![0, 1],
                    vec!["delta_cap unstated on both lifts; trying both values".into()],
                ),
            },
        };
    let mut problems = Vec::new();
    for (i, b) in row.branches.iter().enumerate() {
        let count = nonorientable_count(&b.y) as i64;
        let matched: Vec<u8> = candidates
            .iter()
            .copied()
            .filter(|&c| s_nor_formula(row.alpha, c, gamma) == count)
            .collect();
        if matched.is_empty() {
            let values: Vec<String> = candidates
                .iter()
                .map(|&c| s_nor_formula(row.alpha, c, gamma).to_string())
                .collect();
            problems.push(format!(
                "branch {}: {} has {count} non-orientable components, formula gives {}",
                i + 1,
                b.y,
                values.join(" or ")
            ));
        } else if candidates.len() > 1 {
            notes.push(format!("branch {}: matched with delta_cap={}", i + 1, matched[0]));
        }
    }
    let mut detail = if problems.is_empty() {
        format!(
            "counts match 1 + alpha(2 delta_cap - 1) + gamma with alpha={}, gamma={gamma}",
            row.alpha
        )
    } else {
        problems.join("; ")
    };
    for note in notes {
        detail.push_str("; ");
        detail.push_str(&note);
    }
    CheckResult {
        name: "s_nor_formula",
        passed: problems.is_empty(),
        detail,
    }
}

fn check_s_nor_bound(
    row: &TableRow,
    gamma: u32,
    empty_flags: &DeltaFlags,
    empty_delta: u8,
) -> CheckResult {
    let bound = s_nor_bound(row.alpha, gamma);
    let mut problems = Vec::new();
    if effective_delta_cap(empty_flags, empty_delta) == Some(1) {
        problems.push("the empty lift must have delta_cap = 0".to_string());
    }
    for (i, b) in row.branches.iter().enumerate() {
        let count = nonorientable_count(&b.y) as i64;
        if count > bound {
            problems.push(format!(
                "branch {}: {} has {count} non-orientable components, bound is {bound}",
                i + 1,
                b.y
            ));
        }
    }
    CheckResult {
        name: "s_nor_bound",
        passed: problems.is_empty(),
        detail: if problems.is_empty() {
            format!(
                "counts at most 2 - alpha + gamma = {bound} and the empty lift has delta_cap = 0"
            )
        } else {
            problems.join("; ")
        },
    }
}

fn check_euler_sum(row: &TableRow) -> CheckResult {
    let x_sum = euler(&row.x_sigma) + euler(&row.x_tausigma);
    let mut problems = Vec::new();
    for (i, b) in row.branches.iter().enumerate() {
        let doubled = 2 * euler(&b.y);
        if doubled != x_sum {
            problems.push(format!(
                "branch {}: 2 euler(y) = {doubled}, euler(x_sigma) + euler(x_tausigma) = {x_sum}",
                i + 1
            ));
        }
    }
    CheckResult {
        name: "euler_sum",
        passed: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("euler(x_sigma) + euler(x_tausigma) = {x_sum} doubles every branch")
        } else {
            problems.join("; ")
        },
    }
}

/// Checks every row and aggregates pass counts; reports keep row order.
pub fn verify_table(rows: &[TableRow]) -> TableSummary {
    let reports: Vec<RowReport> = rows.iter().map(check_row).collect();
    let passed = reports.iter().filter(|r| r.passed()).count();
    TableSummary {
        total: rows.len(),
        passed,
        reports,
    }
}

/// Realized and still-unresolved quotient types derived from the table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeLists {
    pub realized: Vec<SurfaceType>,
    pub unresolved: Vec<SurfaceType>,
}

/// A type is realized when some row forces it: the row has a single
/// branch, or every branch agrees on the same composite y. All other
/// branch values remain unresolved candidates.
pub fn derive_type_lists(rows: &[TableRow]) -> TypeLists {
    let mut realized: Vec<SurfaceType> = Vec::new();
    let mut candidates: Vec<SurfaceType> = Vec::new();
    for row in rows {
        for b in &row.branches {
            if !candidates.contains(&b.y) {
                candidates.push(b.y.clone());
            }
        }
        if let Some(first) = row.branches.first() {
            if row.branches.iter().all(|b| b.y == first.y) && !realized.contains(&first.y) {
                realized.push(first.y.clone());
            }
        }
    }
    let mut unresolved: Vec<SurfaceType> = candidates
        .into_iter()
        .filter(|y| !realized.contains(y))
        .collect();
    sort_types(&mut realized);
    sort_types(&mut unresolved);
    TypeLists { realized, unresolved }
}

/// Canonical list order: non-orientable count, then total genus, then
/// component count, then the structural order as the final tiebreak.
fn sort_types(types: &mut [SurfaceType]) {
    types.sort_by(|x, y| {
        let key = |t: &SurfaceType| {
            (
                nonorientable_count(t),
                t.components().iter().map(|c| c.genus as u64).sum::<u64>(),
                t.components().len(),
            )
        };
        key(x).cmp(&key(y)).then_with(|| x.cmp(y))
    });
}

/// One admissible combination of lift invariants for a theta triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionCandidate {
    pub sigma: K3Triple,
    pub tausigma: K3Triple,
    pub gamma: u32,
    pub alpha: u8,
}

/// Exhaustive necessary-conditions scan: all (sigma, tausigma, gamma,
/// alpha) with both triples in the genus formula's domain, both fixed
/// ranks in 1..=20 (hyperbolicity of the fixed lattice on both lifts),
/// and the partner derived through the sum relations. The output is a
/// superset of the geometrically realizable actions; deciding
/// realizability needs genus conditions outside this calculus.
pub fn enumerate_candidates(theta: ThetaTriple) -> Result<Vec<ActionCandidate>, ClassifyError> {
    if !theta_triples().contains(&theta) {
        return Err(ClassifyError::UnknownTheta);
    }
    let mut out = Vec::new();
    for r in 1..=20u32 {
        for a in 0..=r.min(22 - r) {
            if (r + a) % 2 != 0 {
                continue;
            }
            for delta in 0..=1u8 {
                let sigma = K3Triple { r, a, delta };
                if crate::topology::k3_real_type(sigma).is_err() {
                    continue;
                }
                for gamma in 0..=10u32 {
                    for alpha in 0..=1u8 {
                        let Ok(partner) = partner_triple(sigma, theta, gamma, alpha) else {
                            continue;
                        };
                        if partner.r < 1 || partner.r > 20 {
                            continue;
                        }
                        if crate::topology::k3_real_type(partner).is_err() {
                            continue;
                        }
                        out.push(ActionCandidate {
                            sigma,
                            tausigma: partner,
                            gamma,
                            alpha,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Parses the one-record-per-line table format. Blank lines and `#`
/// comments are skipped; each record must read
/// `theta=(r,a,d); alpha=A; Xs=...; fs=...; Xts=...; fts=...; Y=...`
/// with flags as a possibly-empty `d:V,dS:V,dCap:V` subset in that order
/// and `|`-separated branches `Ys:<s>/Yts:<s>/<s>`. Rows violating the
/// flag implications are rejected.
pub fn parse_table(text: &str) -> Result<Vec<TableRow>, ClassifyError> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        rows.push(parse_row(raw, line, rows.len() + 1)?);
    }
    Ok(rows)
}

fn parse_row(text: &str, line: usize, seq: usize) -> Result<TableRow, ClassifyError> {
    let err = |detail: String| ClassifyError::Parse { line, detail };
    let fields: Vec<&str> = text.split("; ").collect();
    if fields.len() != 7 {
        return Err(err(format!(
            "expected 7 `; `-separated fields, found {}",
            fields.len()
        )));
    }
    let keys = ["theta", "alpha", "Xs", "fs", "Xts", "fts", "Y"];
    let mut values = Vec::with_capacity(7);
    for (field, key) in fields.iter().zip(keys) {
        let Some(value) = field.strip_prefix(key).and_then(|s| s.strip_prefix('=')) else {
            return Err(err(format!("expected `{key}=`, found `{field}`")));
        };
        values.push(value);
    }

    let theta_body = values[0]
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| err(format!("expected `(r,a,d)`, found `{}`", values[0])))?;
    let parts: Vec<&str> = theta_body.split(',').collect();
    if parts.len() != 3 {
        return Err(err(format!("theta needs three numbers, found `{theta_body}`")));
    }
    let number = |s: &str, what: &str| -> Result<u32, ClassifyError> {
        s.parse()
            .map_err(|_| err(format!("{what} is not a number: `{s}`")))
    };
    let theta = ThetaTriple {
        r: number(parts[0], "theta r")?,
        a: number(parts[1], "theta a")?,
        delta: bit(parts[2], "theta delta", &err)?,
    };
    let alpha = bit(values[1], "alpha", &err)?;
    let surface = |s: &str, what: &str| -> Result<SurfaceType, ClassifyError> {
        parse_surface_type(s).map_err(|e| err(format!("{what}: {e}")))
    };
    let x_sigma = surface(values[2], "Xs")?;
    let flags_sigma = parse_flags(values[3], &err)?;
    let x_tausigma = surface(values[4], "Xts")?;
    let flags_tausigma = parse_flags(values[5], &err)?;

    for (flags, what) in [(&flags_sigma, "fs"), (&flags_tausigma, "fts")] {
        if let Err(conflict) = flags.closed() {
            return Err(err(format!("flag implication violated in {what}: {conflict}")));
        }
    }

    let mut branches = Vec::new();
    for branch_text in values[6].split('|') {
        let parts: Vec<&str> = branch_text.split('/').collect();
        if parts.len() != 3 {
            return Err(err(format!(
                "branch needs `Ys:<s>/Yts:<s>/<s>`, found `{branch_text}`"
            )));
        }
        let y_sigma_text = parts[0]
            .strip_prefix("Ys:")
            .ok_or_else(|| err(format!("expected `Ys:`, found `{}`", parts[0])))?;
        let y_tau_text = parts[1]
            .strip_prefix("Yts:")
            .ok_or_else(|| err(format!("expected `Yts:`, found `{}`", parts[1])))?;
        branches.push(Branch {
            y_sigma: surface(y_sigma_text, "Ys")?,
            y_tausigma: surface(y_tau_text, "Yts")?,
            y: surface(parts[2], "Y")?,
        });
    }
    if branches.is_empty() {
        return Err(err("a row needs at least one branch".into()));
    }

    Ok(TableRow {
        id: format!("row {seq:03}"),
        theta,
        alpha,
        x_sigma,
        flags_sigma,
        x_tausigma,
        flags_tausigma,
        branches,
    })
}

fn bit(
    s: &str,
    what: &str,
    err: &impl Fn(String) -> ClassifyError,
) -> Result<u8, ClassifyError> {
    match s {
        "0" => Ok(0),
        "1" => Ok(1),
        _ => Err(err(format!("{what} must be 0 or 1, found `{s}`"))),
    }
}

fn parse_flags(
    s: &str,
    err: &impl Fn(String) -> ClassifyError,
) -> Result<DeltaFlags, ClassifyError> {
    let mut flags = DeltaFlags::unstated();
    if s.is_empty() {
        return Ok(flags);
    }
    let mut next_allowed = 0;
    for token in s.split(',') {
        let Some((key, value)) = token.split_once(':') else {
            return Err(err(format!("flag needs `key:value`, found `{token}`")));
        };
        let slot = match key {
            "d" => 0,
            "dS" => 1,
            "dCap" => 2,
            _ => return Err(err(format!("unknown flag `{key}`"))),
        };
        if slot < next_allowed {
            return Err(err(format!(
                "flag `{key}` repeated or out of canonical order d, dS, dCap"
            )));
        }
        next_allowed = slot + 1;
        let v = bit(value, key, err)?;
        match slot {
            0 => flags.delta = Some(v),
            1 => flags.delta_s = Some(v),
            _ => flags.delta_cap = Some(v),
        }
    }
    Ok(flags)
}

/// Formats a row in the exact record syntax `parse_table` reads. Parsing
/// a canonical line and formatting the row reproduces the line.
pub fn format_row(row: &TableRow) -> String {
    let flags = |f: &DeltaFlags| {
        let mut parts = Vec::new();
        if let Some(v) = f.delta {
            parts.push(format!("d:{v}"));
        }
        if let Some(v) = f.delta_s {
            parts.push(format!("dS:{v}"));
        }
        if let Some(v) = f.delta_cap {
            parts.push(format!("dCap:{v}"));
        }
        parts.join(",")
    };
    let branches: Vec<String> = row
        .branches
        .iter()
        .map(|b| format!("Ys:{}/Yts:{}/{}", b.y_sigma, b.y_tausigma, b.y))
        .collect();
    format!(
        "theta={}; alpha={}; Xs={}; fs={}; Xts={}; fts={}; Y={}",
        row.theta,
        row.alpha,
        row.x_sigma,
        flags(&row.flags_sigma),
        row.x_tausigma,
        flags(&row.flags_tausigma),
        branches.join("|")
    )
}

pub fn format_table(rows: &[TableRow]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&format_row(row));
        out.push('\n');
    }
    out
}

/// Parses a list of surface types, one per line, with `#` comments.
pub fn parse_type_list(text: &str) -> Result<Vec<SurfaceType>, ClassifyError> {
    let mut types = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        types.push(parse_surface_type(trimmed).map_err(|e| ClassifyError::Parse {
            line: idx + 1,
            detail: e.to_string(),
        })?);
    }
    Ok(types)
}

/// The transcribed classification table bundled with the crate.
pub fn bundled_table_text() -> &'static str {
    include_str!("../data/classification_table.txt")
}

pub fn bundled_table() -> Vec<TableRow> {
    parse_table(bundled_table_text()).expect("bundled table parses")
}

/// The published list of realized quotient types.
pub fn bundled_realized_types_text() -> &'static str {
    include_str!("../data/realized_types.txt")
}

pub fn bundled_realized_types() -> Vec<SurfaceType> {
    parse_type_list(bundled_realized_types_text()).expect("bundled realized list parses")
}

/// The published list of types left unresolved.
pub fn bundled_unresolved_types_text() -> &'static str {
    include_str!("../data/unresolved_types.txt")
}

pub fn bundled_unresolved_types() -> Vec<SurfaceType> {
    parse_type_list(bundled_unresolved_types_text()).expect("bundled unresolved list parses")
}
