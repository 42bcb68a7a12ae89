//! Small structures enumerated exhaustively for the checkers and the
//! `invariants` command.

use crate::ba::{ElemSet, FcElem, FcIdeal, IndexSet, Powerset};
use crate::contact::{check_axioms, from_atom_relation, ContactTriple};
use crate::ideals::Pseudolattice;
use crate::lba::LocalPair;
use crate::topo::{all_topologies, partition_topologies, FinSpace};

/// Every topology on at most `max_points` points, smallest first.
pub fn spaces(max_points: usize) -> Vec<FinSpace> {
    (0..=max_points).flat_map(all_topologies).collect()
}

/// Zero-dimensional topologies: those generated by a partition.
pub fn zero_dimensional_spaces(max_points: usize) -> Vec<FinSpace> {
    (0..=max_points).flat_map(partition_topologies).collect()
}

pub fn discrete_spaces(max_points: usize) -> Vec<FinSpace> {
    (0..=max_points).map(FinSpace::discrete).collect()
}

fn ideals(alg: Powerset) -> Vec<ElemSet> {
    alg.elements().map(|x| alg.down(x)).collect()
}

/// Every `(P(n), I)` with `I` a dense ideal, `n ≤ max_atoms`.
pub fn local_pairs(max_atoms: usize) -> Vec<LocalPair> {
    let mut out = Vec::new();
    for n in 0..=max_atoms {
        let alg = Powerset::new(n).expect("small");
        for j in ideals(alg) {
            if let Ok(p) = LocalPair::new(alg, j) {
                out.push(p);
            }
        }
    }
    out
}

/// Reflexive symmetric atom relations (graphs on the atoms) with every
/// ideal as bounded part, `n ≤ max_atoms`.
pub fn atom_relation_triples(max_atoms: usize) -> Vec<ContactTriple> {
    let mut out = Vec::new();
    for n in 0..=max_atoms {
        let alg = Powerset::new(n).expect("small");
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for code in 0u32..1 << edges.len() {
            let chosen: Vec<(usize, usize)> = (0..edges.len())
                .filter(|k| code >> k & 1 == 1)
                .map(|k| edges[k])
                .collect();
            for j in ideals(alg) {
                out.push(from_atom_relation(alg, &chosen, j).expect("valid atom pairs"));
            }
        }
    }
    out
}

/// The members of [`atom_relation_triples`] that are local contact algebras.
pub fn lca_corpus(max_atoms: usize) -> Vec<ContactTriple> {
    atom_relation_triples(max_atoms)
        .into_iter()
        .filter(|t| check_axioms(t).lca())
        .collect()
}

/// The members of [`atom_relation_triples`] that are contact algebras.
pub fn contact_corpus(max_atoms: usize) -> Vec<ContactTriple> {
    atom_relation_triples(max_atoms)
        .into_iter()
        .filter(|t| check_axioms(t).contact())
        .collect()
}

/// Named pseudolattices: powersets, ideals of powersets, chains, and a
/// product; `chain3` is not a generalized Boolean pseudolattice.
pub fn pseudolattices() -> Vec<(String, Pseudolattice)> {
    let mut out = Vec::new();
    for n in 0..=3 {
        let alg = Powerset::new(n).expect("small");
        out.push((format!("P({n})"), Pseudolattice::from_powerset(alg).expect("small")));
        for j in ideals(alg) {
            let g = alg.principal_generator(&j).expect("finite ideals are principal");
            if g != alg.one() {
                out.push((
                    format!("P({n}) below {g}"),
                    Pseudolattice::from_ideal(alg, &j).expect("small"),
                ));
            }
        }
    }
    for k in 1..=4 {
        out.push((format!("chain({k})"), Pseudolattice::chain(k).expect("small")));
    }
    out.push(("chain3".into(), Pseudolattice::chain3()));
    let two = Pseudolattice::chain(2).expect("small");
    out.push(("chain(2) x chain(2)".into(), two.product(&two).expect("small")));
    out
}

/// Ideals of FinCofin(ℕ) used by the symbolic checks.
pub fn fc_ideals() -> Vec<(String, FcIdeal)> {
    vec![
        ("Fin".into(), FcIdeal::fin()),
        ("all".into(), FcIdeal::all()),
        ("Fin(evens)".into(), FcIdeal::FinOf(IndexSet::evens())),
        ("Fin(N minus {0})".into(), FcIdeal::FinOf(IndexSet::cofinite_of([0]))),
        ("below N minus {1}".into(), FcIdeal::principal(FcElem::cofinite_of([1]))),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(spaces(3).len(), 1 + 1 + 4 + 29);
        assert_eq!(all_topologies(4).len(), 355);
        assert_eq!(zero_dimensional_spaces(3).len(), 1 + 1 + 2 + 5);
        // a finite dense ideal is the whole algebra
        assert_eq!(local_pairs(4).len(), 5);
        assert!(local_pairs(4).iter().all(|p| p.ideal.len() == p.algebra.size()));
    }

    #[test]
    fn finite_lcas_are_overlap() {
        let lcas = lca_corpus(3);
        assert_eq!(lcas.len(), 4);
        for t in &lcas {
            assert_eq!(t.bounded.len(), t.algebra.size());
            for a in t.algebra.elements() {
                for b in t.algebra.elements() {
                    assert_eq!(t.contact(a, b), !t.algebra.meet(a, b).is_zero());
                }
            }
        }
        assert_eq!(contact_corpus(3).len(), atom_relation_triples(3).len());
    }

    #[test]
    fn pseudolattice_names_unique() {
        let p = pseudolattices();
        let names: std::collections::BTreeSet<&str> = p.iter().map(|(n, _)| n.as_str()).collect();
        assert_eq!(names.len(), p.len());
    }
}
