//! Finite powerset Boolean algebras over an atom index set.
//!
//! Elements are bitmasks over atoms `0..n`. The canonical order on elements
//! is the numeric order of the mask, which makes every search and witness
//! in this crate deterministic.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::search::{min_hitting_set, SearchCap};
use crate::verdict::Verdict;

/// Hard cap on the number of atoms of a materialized powerset.
pub const MAX_ATOMS: usize = 16;

/// An element of a finite powerset algebra: the set of atoms below it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Elem(pub u32);

pub type ElemSet = BTreeSet<Elem>;

impl Elem {
    pub const ZERO: Elem = Elem(0);

    pub fn atom(i: usize) -> Elem {
        Elem(1 << i)
    }

    pub fn from_atoms<I: IntoIterator<Item = usize>>(atoms: I) -> Elem {
        Elem(atoms.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, atom: usize) -> bool {
        self.0 >> atom & 1 == 1
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn count(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Atom indices in increasing order.
    pub fn atoms(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    pub fn single_atom(self) -> Option<usize> {
        (self.count() == 1).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.atoms().collect()
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.atoms().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Elem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Elem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let atoms = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = atoms.iter().find(|&&i| i >= 32) {
            return Err(serde::de::Error::custom(format!("atom index {bad} out of range")));
        }
        Ok(Elem::from_atoms(atoms))
    }
}

/// The Boolean algebra of all subsets of `{0, …, n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Powerset {
    atoms: usize,
}

impl Powerset {
    pub fn new(atoms: usize) -> Result<Self> {
        Self::with_cap(atoms, MAX_ATOMS)
    }

    /// Like [`Powerset::new`] but with a caller-chosen cap (never above 31).
    pub fn with_cap(atoms: usize, cap: usize) -> Result<Self> {
        let cap = cap.min(31);
        if atoms > cap {
            return Err(Error::Size {
                what: "atom count",
                got: atoms,
                cap,
            });
        }
        Ok(Powerset { atoms })
    }

    pub fn atom_count(&self) -> usize {
        self.atoms
    }

    pub fn size(&self) -> usize {
        1 << self.atoms
    }

    pub fn is_trivial(&self) -> bool {
        self.atoms == 0
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem(((1u64 << self.atoms) - 1) as u32)
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        Elem(a.0 & b.0)
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        Elem(a.0 | b.0)
    }

    pub fn complement(&self, a: Elem) -> Elem {
        Elem(!a.0 & self.one().0)
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        a.0 & !b.0 == 0
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 & !self.one().0 == 0
    }

    pub fn join_all<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(Elem::ZERO, |acc, e| self.join(acc, e))
    }

    pub fn meet_all<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(self.one(), |acc, e| self.meet(acc, e))
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.size() as u32).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.size() as u32).map(Elem)
    }

    pub fn atoms(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.atoms).map(Elem::atom)
    }

    pub fn all(&self) -> ElemSet {
        self.elements().collect()
    }

    pub fn down(&self, a: Elem) -> ElemSet {
        self.elements().filter(|&x| self.leq(x, a)).collect()
    }

    pub fn up(&self, a: Elem) -> ElemSet {
        self.elements().filter(|&x| self.leq(a, x)).collect()
    }

    pub fn check_members(&self, s: &ElemSet) -> Result<()> {
        match s.iter().find(|&&e| !self.contains(e)) {
            Some(e) => Err(Error::Membership(format!(
                "{e:?} is not an element of Powerset({})",
                self.atoms
            ))),
            None => Ok(()),
        }
    }

    pub fn is_ideal(&self, s: &ElemSet) -> bool {
        s.contains(&Elem::ZERO)
            && s.iter().all(|&a| {
                self.contains(a)
                    && self.elements().all(|x| !self.leq(x, a) || s.contains(&x))
                    && s.iter().all(|&b| s.contains(&self.join(a, b)))
            })
    }

    pub fn is_filter(&self, s: &ElemSet) -> bool {
        s.contains(&self.one())
            && s.iter().all(|&a| {
                self.contains(a)
                    && self.elements().all(|x| !self.leq(a, x) || s.contains(&x))
                    && s.iter().all(|&b| s.contains(&self.meet(a, b)))
            })
    }

    pub fn require_ideal(&self, s: &ElemSet) -> Result<()> {
        self.check_members(s)?;
        if self.is_ideal(s) {
            Ok(())
        } else {
            Err(Error::Structure(format!("{s:?} is not an ideal")))
        }
    }

    /// Prime in the Boolean sense: proper, and contains `a` or `a*` for each `a`.
    pub fn is_prime_ideal(&self, s: &ElemSet) -> bool {
        self.is_ideal(s)
            && !s.contains(&self.one())
            && self
                .elements()
                .all(|a| s.contains(&a) || s.contains(&self.complement(a)))
    }

    /// `Some(a)` when `s = ↓(a)`.
    pub fn principal_generator(&self, s: &ElemSet) -> Option<Elem> {
        let top = self.join_all(s.iter().copied());
        (s.contains(&top) && *s == self.down(top)).then_some(top)
    }

    /// Every nonzero element has a nonzero minorant in `s`.
    ///
    /// The witness is the first nonzero element disjoint from every member
    /// of `s` when there is one, since that shows `s` missing a whole region;
    /// otherwise it is the first nonzero element without a minorant.
    pub fn is_dense_subset(&self, s: &ElemSet) -> Result<Verdict<Elem>> {
        self.check_members(s)?;
        let lacks_minorant = |a: Elem| !s.iter().any(|&m| !m.is_zero() && self.leq(m, a));
        let witness = self
            .nonzero_elements()
            .find(|&a| s.iter().all(|&m| self.meet(m, a).is_zero()))
            .or_else(|| self.nonzero_elements().find(|&a| lacks_minorant(a)));
        Ok(Verdict::from_witness(witness))
    }

    /// Minimum dense subset by exhaustive search (increasing cardinality,
    /// lexicographic within a cardinality).
    pub fn pi_weight(&self) -> Result<(usize, ElemSet)> {
        self.pi_weight_with_cap(SearchCap::default())
    }

    pub fn pi_weight_with_cap(&self, cap: SearchCap) -> Result<(usize, ElemSet)> {
        let universe: Vec<Elem> = self.nonzero_elements().collect();
        let constraints: Vec<Vec<usize>> = universe
            .iter()
            .map(|&a| {
                universe
                    .iter()
                    .enumerate()
                    .filter(|(_, &m)| self.leq(m, a))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let chosen = min_hitting_set(universe.len(), &constraints, cap)?
            .expect("the set of all nonzero elements is always dense");
        let set: ElemSet = chosen.into_iter().map(|i| universe[i]).collect();
        Ok((set.len(), set))
    }

    pub fn principal_ultrafilter(&self, atom: usize) -> ElemSet {
        self.elements().filter(|a| a.contains(atom)).collect()
    }

    /// Ultrafilters, one per atom, in atom order. Empty for the trivial algebra.
    pub fn ultrafilters(&self) -> Vec<ElemSet> {
        (0..self.atoms)
            .map(|i| self.principal_ultrafilter(i))
            .collect()
    }

    /// Ultrafilters meeting the ideal `ideal`.
    pub fn bounded_ultrafilters(&self, ideal: &ElemSet) -> Result<Vec<ElemSet>> {
        self.require_ideal(ideal)?;
        Ok(self
            .ultrafilters()
            .into_iter()
            .filter(|u| u.iter().any(|a| ideal.contains(a)))
            .collect())
    }

    /// The atom generating a principal ultrafilter given extensionally.
    pub fn ultrafilter_atom(&self, u: &ElemSet) -> Option<usize> {
        let bottom = self.meet_all(u.iter().copied());
        bottom.single_atom().filter(|_| u.contains(&bottom))
    }
}

/// Brute-force enumeration of every filter of a small powerset, used as an
/// oracle independent of the atom-indexed ultrafilter routine.
pub fn all_filters_brute(alg: &Powerset) -> Vec<ElemSet> {
    let n = alg.size();
    assert!(n <= 16, "brute-force filter enumeration limited to 4 atoms");
    (0u64..1 << n)
        .map(|bits| {
            (0..n as u32)
                .filter(|i| bits >> i & 1 == 1)
                .map(Elem)
                .collect::<ElemSet>()
        })
        .filter(|s| alg.is_filter(s))
        .collect()
}

/// Brute-force enumeration of every ideal of a small powerset.
pub fn all_ideals_brute(alg: &Powerset) -> Vec<ElemSet> {
    let n = alg.size();
    assert!(n <= 16, "brute-force ideal enumeration limited to 4 atoms");
    (0u64..1 << n)
        .map(|bits| {
            (0..n as u32)
                .filter(|i| bits >> i & 1 == 1)
                .map(Elem)
                .collect::<ElemSet>()
        })
        .filter(|s| alg.is_ideal(s))
        .collect()
}
