//! Total maps between finite powersets and the Boolean homomorphism checker.

use serde::Serialize;

use crate::ba::powerset::{Elem, Powerset};
use crate::error::{Error, Result};
use crate::verdict::Verdict;

/// A total function between two finite powersets, stored as a table over
/// the source elements in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructMap {
    pub source: Powerset,
    pub target: Powerset,
    table: Vec<Elem>,
}

/// First law a map breaks, in checking order: `0`, `1`, complements, then
/// meets and joins over pairs in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HomViolation {
    Zero,
    One,
    Complement(Elem),
    Meet(Elem, Elem),
    Join(Elem, Elem),
}

impl StructMap {
    pub fn from_table(source: Powerset, target: Powerset, table: Vec<Elem>) -> Result<Self> {
        if table.len() != source.size() {
            return Err(Error::Structure(format!(
                "table has {} entries, source has {} elements",
                table.len(),
                source.size()
            )));
        }
        if let Some(bad) = table.iter().find(|&&e| !target.contains(e)) {
            return Err(Error::Membership(format!("{bad:?} is not in the target")));
        }
        Ok(StructMap {
            source,
            target,
            table,
        })
    }

    pub fn from_fn(source: Powerset, target: Powerset, f: impl Fn(Elem) -> Elem) -> Result<Self> {
        Self::from_table(source, target, source.elements().map(f).collect())
    }

    /// The Boolean homomorphism dual to a map of atoms `target → source`:
    /// `φ(a) = { j : atom_map[j] ∈ a }`.
    pub fn from_atom_map(source: Powerset, target: Powerset, atom_map: &[usize]) -> Result<Self> {
        if atom_map.len() != target.atom_count() {
            return Err(Error::Structure("atom map must cover every target atom".into()));
        }
        if let Some(&bad) = atom_map.iter().find(|&&i| i >= source.atom_count()) {
            return Err(Error::Membership(format!("source has no atom {bad}")));
        }
        Self::from_fn(source, target, |a| {
            Elem::from_atoms((0..atom_map.len()).filter(|&j| a.contains(atom_map[j])))
        })
    }

    pub fn identity(alg: Powerset) -> Self {
        StructMap {
            source: alg,
            target: alg,
            table: alg.elements().collect(),
        }
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.table[a.0 as usize]
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &StructMap) -> Result<StructMap> {
        if first.target != self.source {
            return Err(Error::Structure("composition of mismatched maps".into()));
        }
        StructMap::from_fn(first.source, self.target, |a| self.apply(first.apply(a)))
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.table.iter().all(|e| seen.insert(*e))
    }

    pub fn is_surjective(&self) -> bool {
        let img: std::collections::BTreeSet<Elem> = self.table.iter().copied().collect();
        img.len() == self.target.size()
    }

    /// For a Boolean homomorphism, the source atom each target atom lies
    /// under. `None` when the map is not of that shape.
    pub fn atom_preimages(&self) -> Option<Vec<usize>> {
        (0..self.target.atom_count())
            .map(|j| {
                let hits: Vec<usize> = (0..self.source.atom_count())
                    .filter(|&i| self.apply(Elem::atom(i)).contains(j))
                    .collect();
                (hits.len() == 1).then(|| hits[0])
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<StructMap> {
        if !(self.is_injective() && self.is_surjective()) {
            return None;
        }
        let mut table = vec![Elem::ZERO; self.target.size()];
        for a in self.source.elements() {
            table[self.apply(a).0 as usize] = a;
        }
        Some(StructMap {
            source: self.target,
            target: self.source,
            table,
        })
    }
}

/// Verify that `map` preserves `0`, `1`, complement, meet and join.
pub fn hom_check(map: &StructMap) -> Verdict<HomViolation> {
    let (s, t) = (map.source, map.target);
    if map.apply(s.zero()) != t.zero() {
        return Verdict::Fails(HomViolation::Zero);
    }
    if map.apply(s.one()) != t.one() {
        return Verdict::Fails(HomViolation::One);
    }
    for a in s.elements() {
        if map.apply(s.complement(a)) != t.complement(map.apply(a)) {
            return Verdict::Fails(HomViolation::Complement(a));
        }
    }
    for a in s.elements() {
        for b in s.elements() {
            if map.apply(s.meet(a, b)) != t.meet(map.apply(a), map.apply(b)) {
                return Verdict::Fails(HomViolation::Meet(a, b));
            }
            if map.apply(s.join(a, b)) != t.join(map.apply(a), map.apply(b)) {
                return Verdict::Fails(HomViolation::Join(a, b));
            }
        }
    }
    Verdict::Holds
}

/// Every Boolean homomorphism `source → target`, one per function from
/// target atoms to source atoms, in lexicographic order of that function.
pub fn all_homs(source: Powerset, target: Powerset) -> Vec<StructMap> {
    let (m, n) = (source.atom_count(), target.atom_count());
    if m == 0 {
        return if n == 0 {
            vec![StructMap::identity(source)]
        } else {
            Vec::new()
        };
    }
    let count = m.pow(n as u32);
    (0..count)
        .map(|mut code| {
            let mut g = vec![0; n];
            for slot in g.iter_mut().rev() {
                *slot = code % m;
                code /= m;
            }
            StructMap::from_atom_map(source, target, &g).expect("valid atom map")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_hom() {
        let p3 = Powerset::new(3).unwrap();
        assert!(hom_check(&StructMap::identity(p3)).holds());
    }

    #[test]
    fn atom_to_top_embedding() {
        // Powerset(1) → Powerset(2): the single atom goes to the top.
        let p1 = Powerset::new(1).unwrap();
        let p2 = Powerset::new(2).unwrap();
        let map = StructMap::from_table(p1, p2, vec![Elem(0), Elem(0b11)]).unwrap();
        assert!(hom_check(&map).holds());
        assert_eq!(map.atom_preimages(), Some(vec![0, 0]));
    }

    #[test]
    fn swap_breaks_zero() {
        let p1 = Powerset::new(1).unwrap();
        let map = StructMap::from_table(p1, p1, vec![Elem(1), Elem(0)]).unwrap();
        assert_eq!(hom_check(&map), Verdict::Fails(HomViolation::Zero));
    }

    #[test]
    fn enumeration_is_complete_for_small_cases() {
        // Compare against all total tables that pass the checker.
        for m in 0..=2 {
            for n in 0..=2 {
                let (s, t) = (Powerset::new(m).unwrap(), Powerset::new(n).unwrap());
                let tables = (t.size() as u64).pow(s.size() as u32);
                let mut brute = Vec::new();
                for mut code in 0..tables {
                    let mut table = Vec::new();
                    for _ in 0..s.size() {
                        table.push(Elem((code % t.size() as u64) as u32));
                        code /= t.size() as u64;
                    }
                    let map = StructMap::from_table(s, t, table).unwrap();
                    if hom_check(&map).holds() {
                        brute.push(map.table().to_vec());
                    }
                }
                let mut fast: Vec<Vec<Elem>> =
                    all_homs(s, t).iter().map(|h| h.table().to_vec()).collect();
                fast.sort();
                brute.sort();
                assert_eq!(fast, brute, "m = {m}, n = {n}");
            }
        }
    }

    #[test]
    fn composition_and_inverse() {
        let p2 = Powerset::new(2).unwrap();
        let swap = StructMap::from_atom_map(p2, p2, &[1, 0]).unwrap();
        let id = swap.after(&swap).unwrap();
        assert_eq!(id, StructMap::identity(p2));
        assert_eq!(swap.inverse().unwrap(), swap);
    }
}
