//! Topological types of compact surfaces and their disjoint unions:
//! parsing and canonical printing, Euler characteristic, total Z/2
//! homology dimension, the correspondence between K3 involution triples
//! and fixed-locus types, and orientation double-cover combinatorics.
//!
//! `T{g}` is the orientable surface of genus g, `U{g}` the non-orientable
//! surface with Euler characteristic 1 - g; `empty` is the empty locus.

use crate::involution::K3Triple;
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TopologyError {
    #[error("syntax error at byte {position}: {detail}")]
    Syntax { position: usize, detail: String },
    #[error("triple not realizable by the genus formula")]
    UnrealizableTriple,
    #[error("not a K3 real-locus type")]
    NotRealLocusType,
    #[error("delta must be 0 or 1")]
    BadDelta,
    #[error("orientation quotients require an orientable surface")]
    NonOrientableCover,
}

/// One connected component: T_genus when orientable, U_genus otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceComponent {
    pub orientable: bool,
    pub genus: u32,
}

impl SurfaceComponent {
    pub fn euler(&self) -> i64 {
        if self.orientable {
            2 - 2 * self.genus as i64
        } else {
            1 - self.genus as i64
        }
    }

    pub fn homology_dim(&self) -> i64 {
        if self.orientable {
            2 + 2 * self.genus as i64
        } else {
            2 + self.genus as i64
        }
    }
}

impl Ord for SurfaceComponent {
    /// Canonical order: non-orientable components first, then genus
    /// descending, so `2U0+3T0` and `U8+U0` print straight off the sort.
    fn cmp(&self, other: &Self) -> Ordering {
        self.orientable
            .cmp(&other.orientable)
            .then(other.genus.cmp(&self.genus))
    }
}

impl PartialOrd for SurfaceComponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite multiset of components in canonical order; the empty multiset
/// is the empty real locus. Equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceType {
    components: Vec<SurfaceComponent>,
}

impl SurfaceType {
    pub fn empty() -> Self {
        SurfaceType { components: Vec::new() }
    }

    pub fn from_components(components: impl IntoIterator<Item = SurfaceComponent>) -> Self {
        let mut components: Vec<SurfaceComponent> = components.into_iter().collect();
        components.sort();
        SurfaceType { components }
    }

    pub fn components(&self) -> &[SurfaceComponent] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("empty");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.components.len() {
            let c = self.components[i];
            let mut run = 1;
            while i + run < self.components.len() && self.components[i + run] == c {
                run += 1;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if run >= 2 {
                write!(f, "{run}")?;
            }
            write!(f, "{}{}", if c.orientable { 'T' } else { 'U' }, c.genus)?;
            i += run;
        }
        Ok(())
    }
}

/// Parses the surface-type grammar `empty | term (+ term)*` with
/// term = `[multiplicity >= 2] (T|U) genus`. The result is canonical, so
/// printing after parsing normalizes order and multiplicities.
pub fn parse_surface_type(text: &str) -> Result<SurfaceType, TopologyError> {
    if text == "empty" {
        return Ok(SurfaceType::empty());
    }
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut components = Vec::new();
    loop {
        let (component, multiplicity) = parse_term(bytes, &mut pos)?;
        for _ in 0..multiplicity {
            components.push(component);
        }
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'+' {
            return Err(TopologyError::Syntax {
                position: pos,
                detail: "expected `+` between terms".into(),
            });
        }
        pos += 1;
    }
    Ok(SurfaceType::from_components(components))
}

fn parse_term(bytes: &[u8], pos: &mut usize) -> Result<(SurfaceComponent, u32), TopologyError> {
    let start = *pos;
    let multiplicity = if bytes.get(*pos).is_some_and(u8::is_ascii_digit) {
        let value = parse_number(bytes, pos)?;
        if value < 2 {
            return Err(TopologyError::Syntax {
                position: start,
                detail: format!("multiplicity must be at least 2, found {value}"),
            });
        }
        value
    } else {
        1
    };
    let orientable = match bytes.get(*pos) {
        Some(b'T') => true,
        Some(b'U') => false,
        _ => {
            return Err(TopologyError::Syntax {
                position: *pos,
                detail: "expected `T` or `U`".into(),
            })
        }
    };
    *pos += 1;
    if !bytes.get(*pos).is_some_and(u8::is_ascii_digit) {
        return Err(TopologyError::Syntax {
            position: *pos,
            detail: "expected a genus".into(),
        });
    }
    let genus = parse_number(bytes, pos)?;
    Ok((SurfaceComponent { orientable, genus }, multiplicity))
}

fn parse_number(bytes: &[u8], pos: &mut usize) -> Result<u32, TopologyError> {
    let start = *pos;
    while bytes.get(*pos).is_some_and(u8::is_ascii_digit) {
        *pos += 1;
    }
    let run = &bytes[start..*pos];
    if run.len() > 1 && run[0] == b'0' {
        return Err(TopologyError::Syntax {
            position: start,
            detail: "leading zero".into(),
        });
    }
    std::str::from_utf8(run)
        .expect("digit run is ascii")
        .parse()
        .map_err(|_| TopologyError::Syntax {
            position: start,
            detail: "number out of range".into(),
        })
}

/// Sum of component Euler characteristics; the empty locus has zero.
pub fn euler(t: &SurfaceType) -> i64 {
    t.components.iter().map(SurfaceComponent::euler).sum()
}

/// Total dimension of H_*( . ; Z/2) over the components.
pub fn homology_dim(t: &SurfaceType) -> i64 {
    t.components.iter().map(SurfaceComponent::homology_dim).sum()
}

/// Number of non-orientable components, with multiplicity.
pub fn nonorientable_count(t: &SurfaceType) -> usize {
    t.components.iter().filter(|c| !c.orientable).count()
}

/// Fixed-locus type of a K3 involution with the given triple: empty for
/// (10,10,0), a pair of tori for (10,8,0), and otherwise one surface of
/// genus (22-r-a)/2 together with (r-a)/2 spheres.
pub fn k3_real_type(t: K3Triple) -> Result<SurfaceType, TopologyError> {
    let (r, a) = (t.r as i64, t.a as i64);
    let result = if (t.r, t.a, t.delta) == (10, 10, 0) {
        SurfaceType::empty()
    } else if (t.r, t.a, t.delta) == (10, 8, 0) {
        SurfaceType::from_components([
            SurfaceComponent { orientable: true, genus: 1 },
            SurfaceComponent { orientable: true, genus: 1 },
        ])
    } else {
        let genus_part = 22 - r - a;
        let sphere_part = r - a;
        if genus_part < 0 || genus_part % 2 != 0 || sphere_part < 0 || sphere_part % 2 != 0 {
            return Err(TopologyError::UnrealizableTriple);
        }
        let g = (genus_part / 2) as u32;
        let k = sphere_part / 2;
        let mut components = vec![SurfaceComponent { orientable: true, genus: g }];
        components.extend(std::iter::repeat_n(
            SurfaceComponent { orientable: true, genus: 0 },
            k as usize,
        ));
        SurfaceType::from_components(components)
    };
    assert_eq!(
        euler(&result),
        2 * (r - 10),
        "euler characteristic must equal 2(r - 10)"
    );
    if !result.is_empty() {
        assert_eq!(
            homology_dim(&result),
            24 - 2 * a,
            "total Z/2 homology must equal 24 - 2a"
        );
    }
    Ok(result)
}

/// Inverse of `k3_real_type` on its image shapes. Delta is an input since
/// the genus formula does not determine it.
pub fn triple_from_type(t: &SurfaceType, delta: u8) -> Result<K3Triple, TopologyError> {
    if delta > 1 {
        return Err(TopologyError::BadDelta);
    }
    if t.is_empty() {
        return if delta == 0 {
            Ok(K3Triple { r: 10, a: 10, delta: 0 })
        } else {
            Err(TopologyError::NotRealLocusType)
        };
    }
    let two_tori = t.components.len() == 2
        && t.components
            .iter()
            .all(|c| c.orientable && c.genus == 1);
    if two_tori {
        return if delta == 0 {
            Ok(K3Triple { r: 10, a: 8, delta: 0 })
        } else {
            Err(TopologyError::NotRealLocusType)
        };
    }
    if t.components.iter().any(|c| !c.orientable) {
        return Err(TopologyError::NotRealLocusType);
    }
    let positive_genus: Vec<u32> = t
        .components
        .iter()
        .filter(|c| c.genus > 0)
        .map(|c| c.genus)
        .collect();
    let spheres = (t.components.len() - positive_genus.len()) as i64;
    let (g, k) = match positive_genus.as_slice() {
        [] => (0, spheres - 1),
        [g] => (*g as i64, spheres),
        _ => return Err(TopologyError::NotRealLocusType),
    };
    let r = 11 - g + k;
    let a = 11 - g - k;
    if a < 0 {
        return Err(TopologyError::NotRealLocusType);
    }
    if (r, a) == (10, 10) && delta == 0 {
        // T_1 with delta 0 would collide with the empty locus's triple.
        return Err(TopologyError::NotRealLocusType);
    }
    Ok(K3Triple {
        r: r as u32,
        a: a as u32,
        delta,
    })
}

/// Orientation double cover: each U_g lifts to one T_g, each T_g to two
/// disjoint copies of itself.
pub fn orientation_cover(t: &SurfaceType) -> SurfaceType {
    let mut components = Vec::new();
    for c in &t.components {
        let lifted = SurfaceComponent { orientable: true, genus: c.genus };
        components.push(lifted);
        if c.orientable {
            components.push(lifted);
        }
    }
    SurfaceType::from_components(components)
}

/// All surface types whose orientation cover is `x`: per genus with
/// multiplicity m in `x`, j pairs become j tori and the remaining m - 2j
/// components descend to U's. Purely combinatorial; which quotients occur
/// geometrically is decided elsewhere.
pub fn quotient_candidates(x: &SurfaceType) -> Result<Vec<SurfaceType>, TopologyError> {
    if x.components.iter().any(|c| !c.orientable) {
        return Err(TopologyError::NonOrientableCover);
    }
    // Genus -> multiplicity, in canonical (descending) order.
    let mut groups: Vec<(u32, u32)> = Vec::new();
    for c in &x.components {
        match groups.last_mut() {
            Some((g, m)) if *g == c.genus => *m += 1,
            _ => groups.push((c.genus, 1)),
        }
    }
    let mut partial: Vec<Vec<SurfaceComponent>> = vec![Vec::new()];
    for &(genus, m) in &groups {
        let mut extended = Vec::new();
        for j in 0..=m / 2 {
            let mut choice = Vec::new();
            choice.extend(std::iter::repeat_n(
                SurfaceComponent { orientable: true, genus },
                j as usize,
            ));
            choice.extend(std::iter::repeat_n(
                SurfaceComponent { orientable: false, genus },
                (m - 2 * j) as usize,
            ));
            for p in &partial {
                let mut next = p.clone();
                next.extend_from_slice(&choice);
                extended.push(next);
            }
        }
        partial = extended;
    }
    let mut result: Vec<SurfaceType> = partial
        .into_iter()
        .map(SurfaceType::from_components)
        .collect();
    result.sort();
    debug_assert!(result
        .iter()
        .all(|y| orientation_cover(y) == *x && euler(x) == 2 * euler(y)));
    Ok(result)
}
