//! The finite–cofinite algebra over ℕ, handled symbolically.
//!
//! Elements are finite sets or complements of finite sets. Index families
//! that parametrize ideals `Fin(S)` are eventually periodic subsets of ℕ,
//! which is enough to name the non-representable simple ideal `Fin(evens)`
//! next to the finite and cofinite ones.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::verdict::Verdict;

/// A finite subset of ℕ, or the complement of one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FcElem {
    support: BTreeSet<u64>,
    cofinite: bool,
}

impl FcElem {
    pub fn finite<I: IntoIterator<Item = u64>>(it: I) -> Self {
        FcElem {
            support: it.into_iter().collect(),
            cofinite: false,
        }
    }

    /// `ℕ \ it`.
    pub fn cofinite_of<I: IntoIterator<Item = u64>>(it: I) -> Self {
        FcElem {
            support: it.into_iter().collect(),
            cofinite: true,
        }
    }

    pub fn zero() -> Self {
        Self::finite([])
    }

    pub fn one() -> Self {
        Self::cofinite_of([])
    }

    pub fn singleton(k: u64) -> Self {
        Self::finite([k])
    }

    /// The listed indices: members when finite, non-members when cofinite.
    pub fn support(&self) -> &BTreeSet<u64> {
        &self.support
    }

    pub fn is_cofinite(&self) -> bool {
        self.cofinite
    }

    pub fn is_finite(&self) -> bool {
        !self.cofinite
    }

    pub fn is_zero(&self) -> bool {
        !self.cofinite && self.support.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.cofinite && self.support.is_empty()
    }

    pub fn contains(&self, k: u64) -> bool {
        self.support.contains(&k) != self.cofinite
    }

    pub fn complement(&self) -> Self {
        FcElem {
            support: self.support.clone(),
            cofinite: !self.cofinite,
        }
    }

    pub fn meet(&self, other: &Self) -> Self {
        match (self.cofinite, other.cofinite) {
            (false, false) => Self::finite(self.support.intersection(&other.support).copied()),
            (false, true) => Self::finite(self.support.difference(&other.support).copied()),
            (true, false) => Self::finite(other.support.difference(&self.support).copied()),
            (true, true) => Self::cofinite_of(self.support.union(&other.support).copied()),
        }
    }

    pub fn join(&self, other: &Self) -> Self {
        self.complement().meet(&other.complement()).complement()
    }

    pub fn leq(&self, other: &Self) -> bool {
        self.meet(&other.complement()).is_zero()
    }

    /// Least index in the element, if any.
    pub fn first_index(&self) -> Option<u64> {
        if self.cofinite {
            (0..).find(|k| !self.support.contains(k))
        } else {
            self.support.first().copied()
        }
    }
}

impl fmt::Debug for FcElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.support.iter().map(|k| k.to_string()).collect();
        if self.cofinite {
            write!(f, "cof{{{}}}", body.join(","))
        } else {
            write!(f, "{{{}}}", body.join(","))
        }
    }
}

impl fmt::Display for FcElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for FcElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.cofinite {
            let mut m = s.serialize_map(Some(1))?;
            m.serialize_entry("cofinite_of", &self.support)?;
            m.end()
        } else {
            self.support.serialize(s)
        }
    }
}

impl<'de> Deserialize<'de> for FcElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Finite(BTreeSet<u64>),
            Cofinite { cofinite_of: BTreeSet<u64> },
        }
        Ok(match Repr::deserialize(d)? {
            Repr::Finite(s) => FcElem::finite(s),
            Repr::Cofinite { cofinite_of } => FcElem::cofinite_of(cofinite_of),
        })
    }
}

/// An eventually periodic subset of ℕ: `k` is a member iff
/// `(k mod modulus ∈ residues) XOR (k ∈ exceptions)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IndexSet {
    modulus: u64,
    residues: BTreeSet<u64>,
    exceptions: BTreeSet<u64>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl IndexSet {
    pub fn finite<I: IntoIterator<Item = u64>>(it: I) -> Self {
        IndexSet {
            modulus: 1,
            residues: BTreeSet::new(),
            exceptions: it.into_iter().collect(),
        }
    }

    pub fn cofinite_of<I: IntoIterator<Item = u64>>(it: I) -> Self {
        IndexSet {
            modulus: 1,
            residues: [0].into(),
            exceptions: it.into_iter().collect(),
        }
    }

    pub fn all() -> Self {
        Self::cofinite_of([])
    }

    pub fn empty() -> Self {
        Self::finite([])
    }

    /// `{ k : k mod modulus ∈ residues }`.
    pub fn periodic<I: IntoIterator<Item = u64>>(modulus: u64, residues: I) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        IndexSet {
            modulus,
            residues: residues.into_iter().filter(|r| *r < modulus).collect(),
            exceptions: BTreeSet::new(),
        }
        .normalized()
    }

    pub fn evens() -> Self {
        Self::periodic(2, [0])
    }

    /// The set of indices an element covers.
    pub fn of_elem(e: &FcElem) -> Self {
        if e.is_cofinite() {
            Self::cofinite_of(e.support().iter().copied())
        } else {
            Self::finite(e.support().iter().copied())
        }
    }

    pub fn contains(&self, k: u64) -> bool {
        self.residues.contains(&(k % self.modulus)) != self.exceptions.contains(&k)
    }

    fn periodic_part(&self, k: u64) -> bool {
        self.residues.contains(&(k % self.modulus))
    }

    fn combine(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Self {
        let m = self.modulus / gcd(self.modulus, other.modulus) * other.modulus;
        let residues: BTreeSet<u64> = (0..m)
            .filter(|&r| op(self.periodic_part(r), other.periodic_part(r)))
            .collect();
        let mut out = IndexSet {
            modulus: m,
            residues,
            exceptions: BTreeSet::new(),
        };
        for &k in self.exceptions.union(&other.exceptions) {
            if op(self.contains(k), other.contains(k)) != out.periodic_part(k) {
                out.exceptions.insert(k);
            }
        }
        out.normalized()
    }

    fn normalized(mut self) -> Self {
        let m = self.modulus;
        let period = (1..=m)
            .filter(|d| m.is_multiple_of(*d))
            .find(|&d| (0..m).all(|r| self.residues.contains(&r) == self.residues.contains(&(r % d))))
            .unwrap_or(m);
        // The periodic part is unchanged by shrinking to the period, so the
        // exceptions stay as they are.
        self.residues.retain(|&r| r < period);
        self.modulus = period;
        self
    }

    pub fn complement(&self) -> Self {
        self.combine(&IndexSet::all(), |a, _| !a)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && b)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a || b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.intersection(&other.complement()).is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty() && self.exceptions.is_empty()
    }

    pub fn is_all(&self) -> bool {
        self.complement().is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn is_cofinite(&self) -> bool {
        self.residues.len() as u64 == self.modulus
    }

    /// The element of FinCofin with exactly these indices, when there is one.
    pub fn as_elem(&self) -> Option<FcElem> {
        if self.is_finite() {
            Some(FcElem::finite(self.exceptions.iter().copied()))
        } else if self.is_cofinite() {
            Some(FcElem::cofinite_of(self.exceptions.iter().copied()))
        } else {
            None
        }
    }

    /// Past this index membership repeats with the period, so a property
    /// of single indices that holds on `0..decision_bound()` holds on ℕ.
    pub fn decision_bound(&self) -> u64 {
        self.exceptions.last().map_or(0, |k| k + 1) + self.modulus
    }

    /// Past this index membership in both sets repeats with a common period.
    pub fn joint_decision_bound(&self, other: &Self) -> u64 {
        let last = |s: &Self| s.exceptions.last().map_or(0, |k| k + 1);
        last(self).max(last(other)) + self.modulus / gcd(self.modulus, other.modulus) * other.modulus
    }

    /// Least index outside the set, if any.
    pub fn first_missing(&self) -> Option<u64> {
        if self.is_all() {
            return None;
        }
        (0..self.decision_bound()).find(|&k| !self.contains(k))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(e) = self.as_elem() {
            return write!(f, "{e:?}");
        }
        let r: Vec<String> = self.residues.iter().map(|k| k.to_string()).collect();
        write!(f, "{{k : k mod {} in {{{}}}}}", self.modulus, r.join(","))?;
        if !self.exceptions.is_empty() {
            write!(f, " xor {:?}", self.exceptions)?;
        }
        Ok(())
    }
}

/// An ideal of FinCofin(ℕ).
///
/// Every ideal whose members are all finite is `Fin(S)` for `S` the union of
/// its members; the others are principal ideals of cofinite generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FcIdeal {
    /// Finite sets contained in the index family.
    FinOf(IndexSet),
    /// `↓(a)` for a cofinite `a`.
    Principal(FcElem),
}

impl FcIdeal {
    pub fn fin() -> Self {
        FcIdeal::FinOf(IndexSet::all())
    }

    pub fn all() -> Self {
        FcIdeal::Principal(FcElem::one())
    }

    pub fn principal(a: FcElem) -> Self {
        if a.is_finite() {
            FcIdeal::FinOf(IndexSet::of_elem(&a))
        } else {
            FcIdeal::Principal(a)
        }
    }

    pub fn contains(&self, e: &FcElem) -> bool {
        match self {
            FcIdeal::FinOf(s) => e.is_finite() && e.support().iter().all(|&k| s.contains(k)),
            FcIdeal::Principal(a) => e.leq(a),
        }
    }

    /// Whether `{k}` belongs to the ideal.
    fn has_singleton(&self, k: u64) -> bool {
        self.contains(&FcElem::singleton(k))
    }

    /// Every nonzero element has a nonzero minorant in the ideal. The witness
    /// is a singleton outside it, which then has no such minorant.
    pub fn density(&self) -> Verdict<FcElem> {
        let missing = match self {
            FcIdeal::FinOf(s) => s.first_missing(),
            FcIdeal::Principal(a) => a.support().first().copied(),
        };
        Verdict::from_witness(missing.map(FcElem::singleton))
    }

    /// Generator of the ideal if it is principal.
    pub fn principal_generator(&self) -> Option<FcElem> {
        match self {
            FcIdeal::FinOf(s) => s.is_finite().then(|| s.as_elem().expect("finite")),
            FcIdeal::Principal(a) => Some(a.clone()),
        }
    }

    /// Prime means proper and containing `a` or `a*` for every `a`. The
    /// witness is an element with neither.
    pub fn primality(&self) -> Verdict<FcElem> {
        match self {
            FcIdeal::FinOf(s) => Verdict::from_witness(s.first_missing().map(FcElem::singleton)),
            FcIdeal::Principal(a) => {
                let missing: Vec<u64> = a.support().iter().copied().collect();
                match missing.len() {
                    0 => Verdict::Fails(FcElem::one()),
                    1 => Verdict::Holds,
                    _ => Verdict::Fails(FcElem::singleton(missing[0])),
                }
            }
        }
    }

    pub fn is_proper(&self) -> bool {
        !self.contains(&FcElem::one())
    }
}

/// An ultrafilter of FinCofin(ℕ): principal at an index, or the filter of
/// cofinite sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FcUltrafilter {
    Principal(u64),
    Cofinite,
}

impl FcUltrafilter {
    pub fn contains(&self, e: &FcElem) -> bool {
        match self {
            FcUltrafilter::Principal(k) => e.contains(*k),
            FcUltrafilter::Cofinite => e.is_cofinite(),
        }
    }

    /// Meets the ideal.
    pub fn is_bounded(&self, ideal: &FcIdeal) -> bool {
        match self {
            FcUltrafilter::Principal(k) => ideal.has_singleton(*k),
            FcUltrafilter::Cofinite => matches!(ideal, FcIdeal::Principal(_)),
        }
    }
}

/// Descriptor of a family of ultrafilters: the principal ones at the
/// listed indices, plus possibly the cofinite one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UltrafilterFamily {
    pub principal_at: IndexSet,
    pub cofinite: bool,
}

impl UltrafilterFamily {
    pub fn all() -> Self {
        UltrafilterFamily {
            principal_at: IndexSet::all(),
            cofinite: true,
        }
    }

    pub fn contains(&self, u: &FcUltrafilter) -> bool {
        match u {
            FcUltrafilter::Principal(k) => self.principal_at.contains(*k),
            FcUltrafilter::Cofinite => self.cofinite,
        }
    }
}

pub fn ultrafilters() -> UltrafilterFamily {
    UltrafilterFamily::all()
}

pub fn bounded_ultrafilters(ideal: &FcIdeal) -> UltrafilterFamily {
    let principal_at = match ideal {
        FcIdeal::FinOf(s) => s.clone(),
        FcIdeal::Principal(a) => IndexSet::of_elem(a),
    };
    UltrafilterFamily {
        principal_at,
        cofinite: FcUltrafilter::Cofinite.is_bounded(ideal),
    }
}

/// Every finite subset of `0..window` together with its complement, in a
/// fixed order. Symbolic identities are spot-checked on these samples.
pub fn sample_elements(window: u64) -> Vec<FcElem> {
    assert!(window <= 12, "sample window too large");
    let mut out = Vec::new();
    for bits in 0u64..1 << window {
        let set: Vec<u64> = (0..window).filter(|i| bits >> i & 1 == 1).collect();
        out.push(FcElem::finite(set.clone()));
        out.push(FcElem::cofinite_of(set));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn members(s: &IndexSet, upto: u64) -> Vec<u64> {
        (0..upto).filter(|&k| s.contains(k)).collect()
    }

    #[test]
    fn elem_laws_on_samples() {
        let xs = sample_elements(3);
        for a in &xs {
            assert_eq!(a.complement().complement(), *a);
            assert!(a.meet(&a.complement()).is_zero());
            assert!(a.join(&a.complement()).is_one());
            for b in &xs {
                assert_eq!(a.meet(b).complement(), a.complement().join(&b.complement()));
                for k in 0..5 {
                    assert_eq!(a.meet(b).contains(k), a.contains(k) && b.contains(k));
                    assert_eq!(a.join(b).contains(k), a.contains(k) || b.contains(k));
                }
                assert_eq!(a.leq(b), a.meet(b) == *a);
            }
        }
    }

    #[test]
    fn valid_elements_from_construction() {
        let a = FcElem::finite([0, 1]);
        let b = FcElem::cofinite_of([5]);
        assert!(a.leq(&b));
        assert!(!b.contains(5) && b.contains(6));
        assert_eq!(format!("{b}"), "cof{5}");
        assert_eq!(serde_json::to_string(&b).unwrap(), r#"{"cofinite_of":[5]}"#);
        let back: FcElem = serde_json::from_str(r#"{"cofinite_of":[5]}"#).unwrap();
        assert_eq!(back, b);
        let back: FcElem = serde_json::from_str("[1,0]").unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn index_set_operations_match_membership() {
        let sets = vec![
            IndexSet::evens(),
            IndexSet::periodic(3, [1]),
            IndexSet::finite([1, 2, 7]),
            IndexSet::cofinite_of([0, 4]),
            IndexSet::periodic(6, [0, 2, 4]),
        ];
        for s in &sets {
            for t in &sets {
                let (i, u) = (s.intersection(t), s.union(t));
                for k in 0..40 {
                    assert_eq!(i.contains(k), s.contains(k) && t.contains(k));
                    assert_eq!(u.contains(k), s.contains(k) || t.contains(k));
                }
            }
            assert_eq!(members(&s.complement().complement(), 30), members(s, 30));
        }
        // modulus 6 with residues {0,2,4} reduces to the evens
        assert_eq!(IndexSet::periodic(6, [0, 2, 4]), IndexSet::evens());
        assert!(IndexSet::evens().as_elem().is_none());
        assert_eq!(IndexSet::evens().union(&IndexSet::evens().complement()), IndexSet::all());
    }

    #[test]
    fn fin_is_dense_prime_non_principal() {
        let fin = FcIdeal::fin();
        assert!(fin.density().holds());
        assert!(fin.primality().holds());
        assert!(fin.principal_generator().is_none());
        assert!(fin.is_proper());
    }

    #[test]
    fn other_ideals() {
        let evens = FcIdeal::FinOf(IndexSet::evens());
        assert_eq!(evens.density(), Verdict::Fails(FcElem::singleton(1)));
        let max = FcIdeal::principal(FcElem::cofinite_of([3]));
        assert!(max.primality().holds());
        assert_eq!(max.density(), Verdict::Fails(FcElem::singleton(3)));
        assert!(FcIdeal::all().density().holds());
        assert!(!FcIdeal::all().primality().holds());
        assert_eq!(
            FcIdeal::principal(FcElem::finite([2])),
            FcIdeal::FinOf(IndexSet::finite([2]))
        );
    }

    #[test]
    fn bounded_ultrafilters_of_fin() {
        let b = bounded_ultrafilters(&FcIdeal::fin());
        assert!(!b.cofinite);
        assert!(b.principal_at.is_all());
        for k in 0..10 {
            let u = FcUltrafilter::Principal(k);
            assert!(u.is_bounded(&FcIdeal::fin()));
            assert!(u.contains(&FcElem::singleton(k)));
        }
        // The cofinite ultrafilter contains no finite set, so misses Fin.
        let cof = FcUltrafilter::Cofinite;
        assert!(sample_elements(4)
            .iter()
            .filter(|e| FcIdeal::fin().contains(e))
            .all(|e| !cof.contains(e)));
        assert!(bounded_ultrafilters(&FcIdeal::all()).cofinite);
    }
}
