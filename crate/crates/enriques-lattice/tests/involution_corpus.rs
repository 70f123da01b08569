//! Cross-checks of the involution invariants on a corpus of fixtures and
//! seeded reflection-conjugates: the rank of the discriminant group
//! against the fixed-lattice determinant, the two delta routes against
//! each other, and invariance of the whole triple under conjugation.

mod common;

use std::collections::HashMap;

use common::{involution_corpus, CorpusEntry};
use enriques_lattice::involution::{
    delta_from_characteristic_element, delta_from_quadratic_form, eigenlattice, k3_triple,
    EigenSign, K3Triple,
};
use enriques_lattice::lattice::{lattice_properties, IntegerLattice};
use num_bigint::BigInt;

fn fixed_lattice_determinant(entry: &CorpusEntry) -> BigInt {
    let basis = eigenlattice(&entry.inv, EigenSign::Plus);
    if basis.is_empty() {
        return BigInt::from(1);
    }
    let gram = entry.inv.lattice().restricted_gram(&basis);
    let fixed = IntegerLattice::new(gram)
        .unwrap_or_else(|e| panic!("{}: fixed lattice should be well formed: {e}", entry.label));
    lattice_properties(&fixed)
        .unwrap_or_else(|e| panic!("{}: fixed lattice should be nondegenerate: {e}", entry.label))
        .det
}

#[test]
fn corpus_is_large_and_spans_three_ambient_lattices() {
    let corpus = involution_corpus();
    assert!(
        corpus.len() >= 50,
        "corpus should hold at least 50 involutions, got {}",
        corpus.len()
    );
    let mut ranks: Vec<usize> = corpus.iter().map(|e| e.inv.rank()).collect();
    ranks.sort_unstable();
    ranks.dedup();
    assert_eq!(ranks, [4, 10, 22], "corpus should cover U+U, U+E8 and K3");
}

#[test]
fn discriminant_rank_equals_log2_of_fixed_lattice_determinant() {
    for entry in involution_corpus() {
        let triple = k3_triple(&entry.inv)
            .unwrap_or_else(|e| panic!("{}: triple should compute: {e}", entry.label));
        let det = fixed_lattice_determinant(&entry);
        let expected = BigInt::from(1) << triple.a;
        assert_eq!(
            det.magnitude(),
            expected.magnitude(),
            "{}: |det| of the fixed lattice should be 2^a = 2^{}, got {det}",
            entry.label,
            triple.a
        );
    }
}

#[test]
fn both_delta_routes_agree_on_every_corpus_entry() {
    for entry in involution_corpus() {
        let via_form = delta_from_quadratic_form(&entry.inv)
            .unwrap_or_else(|e| panic!("{}: quadratic-form delta: {e}", entry.label));
        let via_element = delta_from_characteristic_element(&entry.inv)
            .unwrap_or_else(|e| panic!("{}: characteristic-element delta: {e}", entry.label));
        assert_eq!(
            via_form, via_element,
            "{}: the two delta computations must agree",
            entry.label
        );
    }
}

#[test]
fn conjugate_involutions_share_the_triple_of_their_base_fixture() {
    let corpus = involution_corpus();
    let mut base_triples: HashMap<&str, K3Triple> = HashMap::new();
    for entry in &corpus {
        if entry.base == entry.label {
            let triple = k3_triple(&entry.inv)
                .unwrap_or_else(|e| panic!("{}: triple should compute: {e}", entry.label));
            base_triples.insert(entry.label.as_str(), triple);
        }
    }
    let mut conjugates = 0;
    for entry in &corpus {
        if entry.base == entry.label {
            continue;
        }
        conjugates += 1;
        let triple = k3_triple(&entry.inv)
            .unwrap_or_else(|e| panic!("{}: triple should compute: {e}", entry.label));
        assert_eq!(
            Some(&triple),
            base_triples.get(entry.base.as_str()),
            "{}: conjugation must not change the triple",
            entry.label
        );
    }
    assert!(conjugates >= 25, "expected plenty of conjugate entries");
}

#[test]
fn known_fixture_triples_appear_in_the_corpus() {
    let corpus = involution_corpus();
    let triple_of = |label: &str| -> K3Triple {
        let entry = corpus
            .iter()
            .find(|e| e.label == label)
            .unwrap_or_else(|| panic!("fixture {label} should be in the corpus"));
        k3_triple(&entry.inv).unwrap_or_else(|e| panic!("{label}: triple should compute: {e}"))
    };
    assert_eq!(
        triple_of("uu_first_hyperbolic_swap"),
        K3Triple { r: 3, a: 1, delta: 1 },
        "swapping one hyperbolic plane fixes a (2)-line plus the other plane"
    );
    assert_eq!(
        triple_of("k3_enriques_action"),
        K3Triple { r: 10, a: 10, delta: 0 },
        "the free Enriques involution has the even triple (10,10,0)"
    );
    assert_eq!(
        triple_of("k3_negation"),
        K3Triple { r: 0, a: 0, delta: 0 },
        "negation fixes nothing"
    );
    assert_eq!(
        triple_of("k3_root_reflection"),
        K3Triple { r: 21, a: 1, delta: 1 },
        "a single root reflection fixes a corank-1 sublattice"
    );
}
