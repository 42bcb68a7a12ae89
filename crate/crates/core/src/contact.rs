//! Contact relations on finite powersets and local contact algebras.
//!
//! A relation is stored as a bit matrix over all element pairs, so carriers
//! are capped at [`RELATION_MAX_ATOMS`] atoms unless a larger cap is asked
//! for explicitly.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::ba::{Elem, ElemSet, Powerset};
use crate::error::{Error, Result};
use crate::search::{min_hitting_set, SearchCap};
use crate::verdict::Verdict;

pub const RELATION_MAX_ATOMS: usize = 8;

/// A binary relation on the elements of a powerset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    size: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub fn empty(alg: Powerset) -> Result<Self> {
        Self::empty_with_cap(alg, RELATION_MAX_ATOMS)
    }

    pub fn empty_with_cap(alg: Powerset, cap: usize) -> Result<Self> {
        let cap = cap.min(12);
        if alg.atom_count() > cap {
            return Err(Error::Size {
                what: "atoms for an element-level relation",
                got: alg.atom_count(),
                cap,
            });
        }
        let size = alg.size();
        Ok(Relation {
            size,
            bits: vec![0; (size * size).div_ceil(64)],
        })
    }

    pub fn from_fn(alg: Powerset, f: impl Fn(Elem, Elem) -> bool) -> Result<Self> {
        let mut r = Self::empty(alg)?;
        for a in alg.elements() {
            for b in alg.elements() {
                if f(a, b) {
                    r.insert(a, b);
                }
            }
        }
        Ok(r)
    }

    pub fn from_pairs<I: IntoIterator<Item = (Elem, Elem)>>(alg: Powerset, pairs: I) -> Result<Self> {
        let mut r = Self::empty(alg)?;
        for (a, b) in pairs {
            if !alg.contains(a) || !alg.contains(b) {
                return Err(Error::Membership(format!("pair ({a}, {b}) outside the algebra")));
            }
            r.insert(a, b);
        }
        Ok(r)
    }

    fn index(&self, a: Elem, b: Elem) -> usize {
        a.0 as usize * self.size + b.0 as usize
    }

    pub fn insert(&mut self, a: Elem, b: Elem) {
        let i = self.index(a, b);
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, a: Elem, b: Elem) {
        let i = self.index(a, b);
        self.bits[i / 64] &= !(1 << (i % 64));
    }

    pub fn holds(&self, a: Elem, b: Elem) -> bool {
        let i = self.index(a, b);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn pairs(&self) -> Vec<(Elem, Elem)> {
        let n = self.size as u32;
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (Elem(a), Elem(b))))
            .filter(|&(a, b)| self.holds(a, b))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

impl Serialize for Relation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.pairs().serialize(s)
    }
}

/// `(A, ρ, ⅅ)`: a powerset, a relation on it, and the bounded elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContactTriple {
    pub algebra: Powerset,
    pub rho: Relation,
    pub bounded: ElemSet,
}

impl ContactTriple {
    pub fn new(algebra: Powerset, rho: Relation, bounded: ElemSet) -> Result<Self> {
        if rho.size != algebra.size() {
            return Err(Error::Structure("relation and algebra sizes differ".into()));
        }
        algebra.check_members(&bounded)?;
        Ok(ContactTriple {
            algebra,
            rho,
            bounded,
        })
    }

    pub fn contact(&self, a: Elem, b: Elem) -> bool {
        self.rho.holds(a, b)
    }

    /// `a ≪ b` iff `a` is not in contact with `b*`.
    pub fn well_inside(&self, a: Elem, b: Elem) -> bool {
        !self.rho.holds(a, self.algebra.complement(b))
    }

    pub fn is_bounded(&self, a: Elem) -> bool {
        self.bounded.contains(&a)
    }

    /// Same triple with the atoms renamed by `perm` (atom `i` becomes
    /// `perm[i]`).
    pub fn relabel(&self, perm: &[usize]) -> ContactTriple {
        let alg = self.algebra;
        let mv = |a: Elem| Elem::from_atoms(a.atoms().map(|i| perm[i]));
        let rho = Relation::from_pairs(alg, self.rho.pairs().into_iter().map(|(a, b)| (mv(a), mv(b))))
            .expect("same algebra");
        ContactTriple {
            algebra: alg,
            rho,
            bounded: self.bounded.iter().map(|&a| mv(a)).collect(),
        }
    }
}

/// `a ρ_s b` iff `a ∧ b ≠ 0`, with `ⅅ = I`. Requires `I` to be a dense ideal.
pub fn rho_s(alg: Powerset, ideal: &ElemSet) -> Result<ContactTriple> {
    alg.require_ideal(ideal)?;
    if let Verdict::Fails(w) = alg.is_dense_subset(ideal)? {
        return Err(Error::Precondition(format!(
            "not a local Boolean algebra: nothing nonzero of the ideal lies below {w}"
        )));
    }
    let rho = Relation::from_fn(alg, |a, b| !alg.meet(a, b).is_zero())?;
    ContactTriple::new(alg, rho, ideal.clone())
}

/// `a ρ b` iff some atom of `a` is `R`-related to some atom of `b`, after
/// closing `R` to a reflexive symmetric relation.
pub fn from_atom_relation(alg: Powerset, pairs: &[(usize, usize)], bounded: ElemSet) -> Result<ContactTriple> {
    let n = alg.atom_count();
    if let Some(&(x, y)) = pairs.iter().find(|&&(x, y)| x >= n || y >= n) {
        return Err(Error::Membership(format!("atom pair ({x}, {y}) outside 0..{n}")));
    }
    let mut nbr: Vec<u32> = (0..n).map(|i| 1 << i).collect();
    for &(x, y) in pairs {
        nbr[x] |= 1 << y;
        nbr[y] |= 1 << x;
    }
    let rho = Relation::from_fn(alg, |a, b| a.atoms().any(|x| nbr[x] & b.0 != 0))?;
    ContactTriple::new(alg, rho, bounded)
}

/// Which axiom families hold, each with the first violation found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub c1: Verdict<(Elem, Elem)>,
    pub c2: Verdict<(Elem, Elem)>,
    pub c3: Verdict<(Elem, Elem, Elem)>,
    pub c4: Verdict<(Elem, Elem)>,
    pub interpolation: Verdict<(Elem, Elem)>,
    pub extension: Verdict<Elem>,
    pub bounded_ideal: Verdict<String>,
    pub bc1: Verdict<(Elem, Elem)>,
    pub bc2: Verdict<(Elem, Elem)>,
    pub bc3: Verdict<Elem>,
}

impl AxiomReport {
    pub fn contact(&self) -> bool {
        self.c1.holds() && self.c2.holds() && self.c3.holds() && self.c4.holds()
    }

    pub fn nca(&self) -> bool {
        self.contact() && self.interpolation.holds() && self.extension.holds()
    }

    pub fn lca(&self) -> bool {
        self.contact()
            && self.bounded_ideal.holds()
            && self.bc1.holds()
            && self.bc2.holds()
            && self.bc3.holds()
    }

    /// Finite algebras are complete.
    pub fn clca(&self) -> bool {
        self.lca()
    }

    /// Named axioms that fail, in a fixed order.
    pub fn failures(&self) -> Vec<&'static str> {
        let all = [
            ("C1", self.c1.holds()),
            ("C2", self.c2.holds()),
            ("C3", self.c3.holds()),
            ("C4", self.c4.holds()),
            ("interpolation", self.interpolation.holds()),
            ("extension", self.extension.holds()),
            ("bounded ideal", self.bounded_ideal.holds()),
            ("BC1", self.bc1.holds()),
            ("BC2", self.bc2.holds()),
            ("BC3", self.bc3.holds()),
        ];
        all.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect()
    }
}

pub fn check_axioms(t: &ContactTriple) -> AxiomReport {
    let alg = t.algebra;
    let els: Vec<Elem> = alg.elements().collect();
    let find2 = |p: &dyn Fn(Elem, Elem) -> bool| {
        Verdict::from_witness(
            els.iter()
                .flat_map(|&a| els.iter().map(move |&b| (a, b)))
                .find(|&(a, b)| p(a, b)),
        )
    };
    let c1 = find2(&|a, b| t.contact(a, b) && (a.is_zero() || b.is_zero()));
    let c2 = find2(&|a, b| t.contact(a, b) && !t.contact(b, a));
    let mut c3 = Verdict::Holds;
    'c3: for &a in &els {
        for &b in &els {
            for &c in &els {
                if t.contact(a, alg.join(b, c)) != (t.contact(a, b) || t.contact(a, c)) {
                    c3 = Verdict::Fails((a, b, c));
                    break 'c3;
                }
            }
        }
    }
    let c4 = find2(&|a, b| !alg.meet(a, b).is_zero() && !t.contact(a, b));
    let interpolation = find2(&|a, c| {
        t.well_inside(a, c) && !els.iter().any(|&b| t.well_inside(a, b) && t.well_inside(b, c))
    });
    let extension = Verdict::from_witness(
        els.iter()
            .copied()
            .find(|&a| !a.is_zero() && !els.iter().any(|&b| !b.is_zero() && t.well_inside(b, a))),
    );
    let bounded_ideal = if alg.is_ideal(&t.bounded) {
        Verdict::Holds
    } else {
        Verdict::Fails(format!("{:?} is not an ideal", t.bounded))
    };
    let bnd: Vec<Elem> = t.bounded.iter().copied().collect();
    let bc1 = Verdict::from_witness(
        bnd.iter()
            .flat_map(|&a| els.iter().map(move |&c| (a, c)))
            .find(|&(a, c)| {
                t.well_inside(a, c) && !bnd.iter().any(|&b| t.well_inside(a, b) && t.well_inside(b, c))
            }),
    );
    let bc2 = find2(&|a, b| {
        t.contact(a, b) && !bnd.iter().any(|&b2| alg.leq(b2, b) && t.contact(a, b2))
    });
    let bc3 = Verdict::from_witness(
        els.iter()
            .copied()
            .find(|&a| !a.is_zero() && !bnd.iter().any(|&b| !b.is_zero() && t.well_inside(b, a))),
    );
    AxiomReport {
        c1,
        c2,
        c3,
        c4,
        interpolation,
        extension,
        bounded_ideal,
        bc1,
        bc2,
        bc3,
    }
}

/// `A_S = {a | a ≪ a}`.
pub fn a_s(t: &ContactTriple) -> ElemSet {
    t.algebra.elements().filter(|&a| t.well_inside(a, a)).collect()
}

/// The triple `(A, ρ, A)` with `a ≪ b` iff some `c ∈ A0` has `a ≤ c ≤ b`.
#[derive(Clone, Debug)]
pub struct FromSubalgebra {
    pub triple: ContactTriple,
    pub nca: bool,
    /// `A_S` of the result coincides with `A0`.
    pub a_s_matches: bool,
    pub weight: usize,
}

pub fn contact_from_dense_subalgebra(alg: Powerset, sub: &ElemSet) -> Result<FromSubalgebra> {
    alg.check_members(sub)?;
    let closed = sub.contains(&alg.zero())
        && sub.contains(&alg.one())
        && sub.iter().all(|&a| {
            sub.contains(&alg.complement(a))
                && sub.iter().all(|&b| sub.contains(&alg.join(a, b)))
        });
    if !closed {
        return Err(Error::Precondition(format!("{sub:?} is not a Boolean subalgebra")));
    }
    if let Verdict::Fails(w) = alg.is_dense_subset(sub)? {
        return Err(Error::Precondition(format!(
            "subalgebra is not dense, witness {w}"
        )));
    }
    let wi = |a: Elem, b: Elem| sub.iter().any(|&c| alg.leq(a, c) && alg.leq(c, b));
    let rho = Relation::from_fn(alg, |a, b| !wi(a, alg.complement(b)))?;
    let triple = ContactTriple::new(alg, rho, alg.all())?;
    let nca = check_axioms(&triple).nca();
    let a_s_matches = a_s(&triple) == *sub;
    let weight = weight(&triple)?.0;
    Ok(FromSubalgebra {
        triple,
        nca,
        a_s_matches,
        weight,
    })
}

/// The two equivalent base conditions, each with its first failing pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseReport {
    pub by_definition: Verdict<(Elem, Elem)>,
    pub by_interpolation: Verdict<(Elem, Elem)>,
}

impl BaseReport {
    pub fn agree(&self) -> bool {
        self.by_definition.holds() == self.by_interpolation.holds()
    }

    pub fn is_base(&self) -> bool {
        self.by_definition.holds()
    }
}

/// `𝓑 ⊆ ⅅ` is a base: for `a, c ∈ ⅅ` with `a ≪ c` some `b ∈ 𝓑` has
/// `a ≤ b ≤ c` (equivalently `a ≪ b ≪ c`).
pub fn is_base(t: &ContactTriple, base: &ElemSet) -> Result<BaseReport> {
    if let Some(b) = base.iter().find(|b| !t.bounded.contains(b)) {
        return Err(Error::Membership(format!("{b} is not a bounded element")));
    }
    let alg = t.algebra;
    let pairs: Vec<(Elem, Elem)> = t
        .bounded
        .iter()
        .flat_map(|&a| t.bounded.iter().map(move |&c| (a, c)))
        .filter(|&(a, c)| t.well_inside(a, c))
        .collect();
    let by_definition = Verdict::from_witness(
        pairs
            .iter()
            .copied()
            .find(|&(a, c)| !base.iter().any(|&b| alg.leq(a, b) && alg.leq(b, c))),
    );
    let by_interpolation = Verdict::from_witness(
        pairs
            .iter()
            .copied()
            .find(|&(a, c)| !base.iter().any(|&b| t.well_inside(a, b) && t.well_inside(b, c))),
    );
    Ok(BaseReport {
        by_definition,
        by_interpolation,
    })
}

/// Minimum base by exhaustive search: increasing size, then lexicographic
/// in canonical element order.
pub fn weight(t: &ContactTriple) -> Result<(usize, ElemSet)> {
    weight_with_cap(t, SearchCap::default())
}

pub fn weight_with_cap(t: &ContactTriple, cap: SearchCap) -> Result<(usize, ElemSet)> {
    let alg = t.algebra;
    let cands: Vec<Elem> = t.bounded.iter().copied().collect();
    let mut reqs = Vec::new();
    for &a in &cands {
        for &c in &cands {
            if t.well_inside(a, c) {
                reqs.push(
                    (0..cands.len())
                        .filter(|&i| alg.leq(a, cands[i]) && alg.leq(cands[i], c))
                        .collect::<Vec<usize>>(),
                );
            }
        }
    }
    let pick = min_hitting_set(cands.len(), &reqs, cap)?.ok_or_else(|| {
        Error::Precondition("some pair a ≪ c has no element between them".into())
    })?;
    let set: ElemSet = pick.into_iter().map(|i| cands[i]).collect();
    Ok((set.len(), set))
}

/// The four equivalent density conditions on a subset `𝓑` of an LCA.
pub fn density_conditions(t: &ContactTriple, b: &ElemSet) -> [bool; 4] {
    let alg = t.algebra;
    let dense = alg.is_dense_subset(b).map(|v| v.holds()).unwrap_or(false);
    let wi_minorant = alg
        .nonzero_elements()
        .all(|a| b.iter().any(|&x| !x.is_zero() && t.well_inside(x, a)));
    let is_join = |a: Elem| alg.join_all(b.iter().copied().filter(|&x| t.well_inside(x, a))) == a;
    let bounded_joins = t.bounded.iter().filter(|a| !a.is_zero()).all(|&a| is_join(a));
    let all_joins = alg.nonzero_elements().all(is_join);
    [dense, wi_minorant, bounded_joins, all_joins]
}

/// Product of finitely many triples. Atoms of the factors are laid out one
/// block after another; `ρ` holds when it holds in some coordinate.
pub fn product(ts: &[ContactTriple]) -> Result<ContactTriple> {
    let offsets: Vec<usize> = ts
        .iter()
        .scan(0, |acc, t| {
            let o = *acc;
            *acc += t.algebra.atom_count();
            Some(o)
        })
        .collect();
    let total: usize = ts.iter().map(|t| t.algebra.atom_count()).sum();
    let alg = Powerset::new(total)?;
    let coord = |a: Elem, k: usize| {
        let n = ts[k].algebra.atom_count();
        Elem((a.0 >> offsets[k]) & ((1u32 << n) - 1))
    };
    let rho = Relation::from_fn(alg, |a, b| {
        (0..ts.len()).any(|k| ts[k].contact(coord(a, k), coord(b, k)))
    })?;
    let bounded = alg
        .elements()
        .filter(|&a| (0..ts.len()).all(|k| ts[k].is_bounded(coord(a, k))))
        .collect();
    ContactTriple::new(alg, rho, bounded)
}

/// `C_ρ = ρ ∪ {(a, b) | a ∉ ⅅ, b ∉ ⅅ}`.
pub fn alexandroff_extension(t: &ContactTriple) -> Relation {
    let mut c = t.rho.clone();
    for &a in t.algebra.all().difference(&t.bounded) {
        for &b in t.algebra.all().difference(&t.bounded) {
            c.insert(a, b);
        }
    }
    c
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Cluster {
    pub members: ElemSet,
    pub bounded: bool,
}

/// Which cluster axiom a set breaks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClusterViolation {
    Empty,
    PairNotInContact(Elem, Elem),
    NotJoinPrime(Elem, Elem),
    NotMaximal(Elem),
}

/// The cluster axioms for `σ` with respect to a contact relation `c`.
pub fn cluster_check(alg: Powerset, c: &Relation, sigma: &ElemSet) -> Verdict<ClusterViolation> {
    if sigma.is_empty() {
        return Verdict::Fails(ClusterViolation::Empty);
    }
    for &a in sigma {
        for &b in sigma {
            if !c.holds(a, b) {
                return Verdict::Fails(ClusterViolation::PairNotInContact(a, b));
            }
        }
    }
    for a in alg.elements() {
        for b in alg.elements() {
            if sigma.contains(&alg.join(a, b)) && !sigma.contains(&a) && !sigma.contains(&b) {
                return Verdict::Fails(ClusterViolation::NotJoinPrime(a, b));
            }
        }
    }
    for a in alg.elements() {
        if !sigma.contains(&a) && sigma.iter().all(|&b| c.holds(a, b)) {
            return Verdict::Fails(ClusterViolation::NotMaximal(a));
        }
    }
    Verdict::Holds
}

/// `σ_u = {a | a C b for all b ∈ u}`.
pub fn sigma_of(alg: Powerset, c: &Relation, u: &ElemSet) -> ElemSet {
    alg.elements().filter(|&a| u.iter().all(|&b| c.holds(a, b))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClusterSet {
    pub clusters: Vec<Cluster>,
    /// On carriers with at most 16 elements, every subset is tested and
    /// the first cluster not produced from an ultrafilter is reported.
    pub exhaustive_check: Option<Verdict<ElemSet>>,
}

/// Clusters of `(A, C_ρ)` generated as `σ_u` over ultrafilters `u`, kept if
/// they satisfy the cluster axioms.
pub fn clusters(t: &ContactTriple) -> ClusterSet {
    let alg = t.algebra;
    let c = alexandroff_extension(t);
    let found: BTreeSet<ElemSet> = alg
        .ultrafilters()
        .iter()
        .map(|u| sigma_of(alg, &c, u))
        .filter(|s| cluster_check(alg, &c, s).holds())
        .collect();
    let exhaustive_check = (alg.size() <= 16).then(|| {
        Verdict::from_witness(
            clusters_exhaustive(alg, &c)
                .expect("small carrier")
                .into_iter()
                .find(|s| !found.contains(s)),
        )
    });
    ClusterSet {
        clusters: found
            .into_iter()
            .map(|members| Cluster {
                bounded: members.iter().any(|a| t.bounded.contains(a)),
                members,
            })
            .collect(),
        exhaustive_check,
    }
}

pub fn bounded_clusters(t: &ContactTriple) -> Vec<Cluster> {
    clusters(t).clusters.into_iter().filter(|c| c.bounded).collect()
}

/// Every subset of a carrier with at most 16 elements that satisfies the
/// cluster axioms.
pub fn clusters_exhaustive(alg: Powerset, c: &Relation) -> Result<Vec<ElemSet>> {
    if alg.size() > 16 {
        return Err(Error::Size {
            what: "elements for exhaustive cluster search",
            got: alg.size(),
            cap: 16,
        });
    }
    let n = alg.size();
    let mut out = Vec::new();
    for code in 1u64..1 << n {
        let sigma: ElemSet = (0..n as u32).filter(|i| code >> i & 1 == 1).map(Elem).collect();
        if cluster_check(alg, c, &sigma).holds() {
            out.push(sigma);
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize) -> Powerset {
        Powerset::new(n).unwrap()
    }

    #[test]
    fn rho_s_is_lca() {
        for n in 0..=3 {
            let t = rho_s(p(n), &p(n).all()).unwrap();
            let r = check_axioms(&t);
            assert!(r.contact() && r.nca() && r.lca() && r.clca(), "n = {n}: {:?}", r.failures());
        }
    }

    #[test]
    fn rho_s_pair_count() {
        let t = rho_s(p(2), &p(2).all()).unwrap();
        // among the three nonzero elements only {0},{1} are disjoint
        assert_eq!(t.rho.len(), 7);
        assert!(rho_s(p(0), &p(0).all()).unwrap().rho.is_empty());
    }

    #[test]
    fn rho_s_needs_dense_ideal() {
        let a = p(2);
        assert!(matches!(rho_s(a, &a.down(Elem(1))), Err(Error::Precondition(_))));
    }

    #[test]
    fn c4_violation() {
        let a = p(2);
        let mut t = rho_s(a, &a.all()).unwrap();
        t.rho.remove(Elem(1), Elem(1));
        let r = check_axioms(&t);
        assert_eq!(r.c4, Verdict::Fails((Elem(1), Elem(1))));
        assert!(!r.contact());
    }

    #[test]
    fn atom_relation_contact() {
        let a = p(2);
        let t = from_atom_relation(a, &[(0, 1)], a.all()).unwrap();
        let r = check_axioms(&t);
        assert!(r.contact());
        assert!(!r.lca(), "an atom in contact with another atom is not well inside itself");
        assert_eq!(a_s(&t), [Elem(0), Elem(0b11)].into());
        let c = clusters(&t);
        assert_eq!(c.clusters.len(), 1);
        assert_eq!(c.exhaustive_check, Some(Verdict::Holds));
    }

    #[test]
    fn a_s_simple_cases() {
        let t = rho_s(p(3), &p(3).all()).unwrap();
        assert_eq!(a_s(&t), p(3).all());
        let t = rho_s(p(0), &p(0).all()).unwrap();
        assert_eq!(a_s(&t), [Elem(0)].into());
    }

    #[test]
    fn weights_of_rho_s() {
        let t = rho_s(p(2), &p(2).all()).unwrap();
        let (w, b) = weight(&t).unwrap();
        assert_eq!(w, 4);
        assert_eq!(b, p(2).all());
        // 0 ≪ 0, so the trivial algebra needs {0}
        let t = rho_s(p(0), &p(0).all()).unwrap();
        assert_eq!(weight(&t).unwrap().0, 1);
        assert!(!is_base(&t, &ElemSet::new()).unwrap().is_base());
    }

    #[test]
    fn base_membership_error() {
        let a = p(2);
        let t = from_atom_relation(a, &[], [Elem(0)].into()).unwrap();
        assert!(matches!(is_base(&t, &[Elem(1)].into()), Err(Error::Membership(_))));
    }

    #[test]
    fn dense_subalgebra_construction() {
        let a = p(2);
        let r = contact_from_dense_subalgebra(a, &a.all()).unwrap();
        assert_eq!(r.triple, rho_s(a, &a.all()).unwrap());
        assert!(r.nca && r.a_s_matches);
        assert_eq!(r.weight, 4);
        let a3 = p(3);
        let gen: ElemSet = [Elem(0), Elem(0b001), Elem(0b110), Elem(0b111)].into();
        match contact_from_dense_subalgebra(a3, &gen) {
            Err(Error::Precondition(m)) => assert!(m.contains("{1}"), "{m}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn products() {
        let one = rho_s(p(1), &p(1).all()).unwrap();
        let prod = product(&[one.clone(), one.clone()]).unwrap();
        assert_eq!(prod, rho_s(p(2), &p(2).all()).unwrap());
        let triv = rho_s(p(0), &p(0).all()).unwrap();
        assert_eq!(product(&[one.clone(), triv]).unwrap(), one);
        assert_eq!(product(&[]).unwrap().algebra.atom_count(), 0);
    }

    #[test]
    fn clusters_of_rho_s() {
        let a = p(2);
        let t = rho_s(a, &a.all()).unwrap();
        let b = bounded_clusters(&t);
        let members: Vec<ElemSet> = b.into_iter().map(|c| c.members).collect();
        assert_eq!(members, a.bounded_ultrafilters(&a.all()).unwrap());
        assert_eq!(alexandroff_extension(&t), t.rho);
    }

    #[test]
    fn four_cycle_has_no_clusters() {
        let a = p(4);
        let t = from_atom_relation(a, &[(0, 1), (1, 2), (2, 3), (3, 0)], a.all()).unwrap();
        let c = clusters(&t);
        assert!(c.clusters.is_empty());
        assert!(clusters_exhaustive(a, &t.rho).unwrap().is_empty());
        assert_eq!(c.exhaustive_check, Some(Verdict::Holds));
    }

    #[test]
    fn ultrafilter_clusters_complete_on_small_graphs() {
        let a = p(3);
        let edges = [(0, 1), (0, 2), (1, 2)];
        for code in 0..8 {
            let es: Vec<_> = (0..3).filter(|k| code >> k & 1 == 1).map(|k| edges[k]).collect();
            let t = from_atom_relation(a, &es, a.all()).unwrap();
            assert_eq!(clusters(&t).exhaustive_check, Some(Verdict::Holds), "{es:?}");
        }
    }
}
