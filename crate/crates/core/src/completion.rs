//! δ-ideals, the frame `I(A, ρ, ⅅ)` and its prime elements, and
//! LCA-completions: existence through the dual space, the formulas that pin
//! down the contact relation of a completion, and uniqueness up to
//! isomorphism.
//!
//! A finite algebra has no proper dense extension, so over finite carriers
//! a completion is an isomorphic copy. The formulas are still evaluated in
//! full there, and over FinCofin(ℕ) inside `P(ℕ)` in [`fc`].

use serde::Serialize;

use crate::ba::{all_homs, hom_check, ConcreteBa, Elem, ElemSet, StructMap};
use crate::contact::{check_axioms, is_base, AxiomReport, ContactTriple, Relation};
use crate::duality::{psi_a, psi_t};
use crate::error::{Error, Result};
use crate::topo::{FinSpace, PointSet};
use crate::verdict::Verdict;

/// An ideal `J ⊆ ⅅ` with every member well inside another member.
pub fn is_delta_ideal(t: &ContactTriple, j: &ElemSet) -> bool {
    t.algebra.is_ideal(j)
        && j.is_subset(&t.bounded)
        && j.iter().all(|&a| j.iter().any(|&b| t.well_inside(a, b)))
}

/// All δ-ideals, ordered by generator. Ideals of a finite powerset are
/// principal, so each is `↓x` for some `x`.
pub fn delta_ideals(t: &ContactTriple) -> Vec<ElemSet> {
    t.algebra
        .elements()
        .map(|x| t.algebra.down(x))
        .filter(|j| is_delta_ideal(t, j))
        .collect()
}

/// Prime in the frame of δ-ideals: `J₁ ∩ J₂ ⊆ J` forces `J₁ ⊆ J` or
/// `J₂ ⊆ J`. The top of the frame is never prime.
pub fn is_prime_element(frame: &[ElemSet], j: &ElemSet) -> bool {
    let top = frame.iter().max_by_key(|k| k.len());
    if top == Some(j) {
        return false;
    }
    frame.iter().all(|j1| {
        frame.iter().all(|j2| {
            let meet: ElemSet = j1.intersection(j2).copied().collect();
            !meet.is_subset(j) || j1.is_subset(j) || j2.is_subset(j)
        })
    })
}

pub fn prime_elements(t: &ContactTriple) -> Vec<ElemSet> {
    let frame = delta_ideals(t);
    frame.iter().filter(|j| is_prime_element(&frame, j)).cloned().collect()
}

/// Injective Boolean homomorphism that preserves and reflects contact and
/// boundedness. The witness names the first failure.
pub fn lca_embedding_check(src: &ContactTriple, tgt: &ContactTriple, phi: &StructMap) -> Verdict<String> {
    if phi.source != src.algebra || phi.target != tgt.algebra {
        return Verdict::Fails("map does not run between these algebras".into());
    }
    if let Verdict::Fails(v) = hom_check(phi) {
        return Verdict::Fails(format!("not a homomorphism: {v:?}"));
    }
    if !phi.is_injective() {
        return Verdict::Fails("not injective".into());
    }
    for a in src.algebra.elements() {
        if src.is_bounded(a) != tgt.is_bounded(phi.apply(a)) {
            return Verdict::Fails(format!("boundedness of {a} is not preserved"));
        }
        for b in src.algebra.elements() {
            if src.contact(a, b) != tgt.contact(phi.apply(a), phi.apply(b)) {
                return Verdict::Fails(format!("contact of ({a}, {b}) is not preserved"));
            }
        }
    }
    Verdict::Holds
}

/// `φ(ⅅ)` is a base (dV-dense) of the target.
pub fn is_dv_dense(src: &ContactTriple, tgt: &ContactTriple, phi: &StructMap) -> Result<bool> {
    let image: ElemSet = src.bounded.iter().map(|&a| phi.apply(a)).collect();
    if !image.is_subset(&tgt.bounded) {
        return Ok(false);
    }
    Ok(is_base(tgt, &image)?.is_base())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletionChecks {
    pub embedding: Verdict<String>,
    pub dv_dense: bool,
    pub clca: bool,
}

impl CompletionChecks {
    pub fn holds(&self) -> bool {
        self.embedding.holds() && self.dv_dense && self.clca
    }
}

/// `(λ^g, (RC(X), ρ_X, CR(X)))` with `X = Ψ^a(T)`.
#[derive(Clone, Debug)]
pub struct CompletionPair {
    pub dual: FinSpace,
    pub rc: ConcreteBa<PointSet>,
    pub target: ContactTriple,
    pub embedding: StructMap,
    pub checks: CompletionChecks,
}

pub fn lca_completion(t: &ContactTriple) -> Result<CompletionPair> {
    let dual = psi_a(t)?;
    let pt = psi_t(&dual.space)?;
    let mut table = Vec::with_capacity(t.algebra.size());
    for a in t.algebra.elements() {
        let l = dual.lambda(a);
        table.push(pt.rc.encode(&l).ok_or_else(|| {
            Error::Structure(format!("λ^g({a}) is not regular closed"))
        })?);
    }
    let embedding = StructMap::from_table(t.algebra, pt.triple.algebra, table)?;
    let checks = checks_for(t, &pt.triple, &embedding)?;
    Ok(CompletionPair {
        dual: dual.space,
        rc: pt.rc,
        target: pt.triple,
        embedding,
        checks,
    })
}

fn checks_for(t: &ContactTriple, target: &ContactTriple, phi: &StructMap) -> Result<CompletionChecks> {
    Ok(CompletionChecks {
        embedding: lca_embedding_check(t, target, phi),
        dv_dense: is_dv_dense(t, target, phi)?,
        clca: check_axioms(target).clca(),
    })
}

/// `J ↦ {a ∈ A | φ(a) ∈ J}` for a δ-ideal `J` of the completion.
pub fn restrict_delta(phi: &StructMap, j: &ElemSet) -> ElemSet {
    phi.source.elements().filter(|&a| j.contains(&phi.apply(a))).collect()
}

/// `J ↦ ↓_B(φ(J))`.
pub fn extend_delta(phi: &StructMap, j: &ElemSet) -> ElemSet {
    let b = phi.target;
    b.elements()
        .filter(|&x| j.iter().any(|&a| b.leq(x, phi.apply(a))))
        .collect()
}

/// The correspondences between δ-ideals of an LCA and of a completion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    /// Bounded elements of the completion are `↓φ(ⅅ)`, and pull back to `ⅅ`.
    pub bounded_down: bool,
    /// Restriction gives δ-ideals and `↓(J ∩ A) = J`.
    pub restrict_roundtrip: bool,
    /// Extension gives δ-ideals and `A ∩ ↓J = J`.
    pub extend_roundtrip: bool,
    pub primes_restrict: bool,
    pub primes_extend: bool,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.bounded_down
            && self.restrict_roundtrip
            && self.extend_roundtrip
            && self.primes_restrict
            && self.primes_extend
    }
}

pub fn completion_lemma(t: &ContactTriple, target: &ContactTriple, phi: &StructMap) -> Result<LemmaReport> {
    let checks = checks_for(t, target, phi)?;
    if !checks.embedding.holds() || !checks.dv_dense {
        return Err(Error::Precondition(format!(
            "not a dense LCA-embedding: {:?}, dV-dense {}",
            checks.embedding, checks.dv_dense
        )));
    }
    let bounded_down = extend_delta(phi, &t.bounded) == target.bounded
        && restrict_delta(phi, &target.bounded) == t.bounded;
    let small = delta_ideals(t);
    let big = delta_ideals(target);
    let restrict_roundtrip = big.iter().all(|j| {
        let r = restrict_delta(phi, j);
        is_delta_ideal(t, &r) && extend_delta(phi, &r) == *j
    });
    let extend_roundtrip = small.iter().all(|j| {
        let e = extend_delta(phi, j);
        is_delta_ideal(target, &e) && restrict_delta(phi, &e) == *j
    });
    let primes_restrict = big
        .iter()
        .filter(|j| is_prime_element(&big, j))
        .all(|j| is_prime_element(&small, &restrict_delta(phi, j)));
    let primes_extend = small
        .iter()
        .filter(|j| is_prime_element(&small, j))
        .all(|j| is_prime_element(&big, &extend_delta(phi, j)));
    Ok(LemmaReport {
        bounded_down,
        restrict_roundtrip,
        extend_roundtrip,
        primes_restrict,
        primes_extend,
    })
}

/// The relation `η` on `B ⊇ φ(A)` determined by the two case formulas.
#[derive(Clone, Debug)]
pub struct ExtendedContact {
    pub eta: ContactTriple,
    /// Pairs `(a₁, b₁)` decided by the bounded case and by the prime-element
    /// case respectively.
    pub case1_pairs: usize,
    pub case2_pairs: usize,
    /// `φ(a) η φ(b)` iff `a ρ b`.
    pub restricts_to_rho: Verdict<(Elem, Elem)>,
    pub axioms: AxiomReport,
}

pub fn extend_contact(t: &ContactTriple, phi: &StructMap) -> Result<ExtendedContact> {
    if phi.source != t.algebra {
        return Err(Error::Structure("embedding does not start at the algebra".into()));
    }
    if let Verdict::Fails(v) = hom_check(phi) {
        return Err(Error::Precondition(format!("not a homomorphism: {v:?}")));
    }
    let b = phi.target;
    let image: ElemSet = t.algebra.elements().map(|a| phi.apply(a)).collect();
    if !phi.is_injective() || !b.is_dense_subset(&image)?.holds() {
        return Err(Error::Precondition("the algebra is not embedded densely".into()));
    }
    let bounded_b: ElemSet = b
        .elements()
        .filter(|&x| t.bounded.iter().any(|&a| b.leq(x, phi.apply(a))))
        .collect();
    let case1 = |a1: Elem, b1: Elem| {
        t.bounded.iter().any(|&a| {
            b.leq(a1, phi.apply(a))
                && t.bounded
                    .iter()
                    .any(|&c| t.well_inside(a, c) && b.leq(phi.apply(c), b1))
        })
    };
    let primes: Vec<ElemSet> = prime_elements(t)
        .iter()
        .map(|j| extend_delta(phi, j))
        .collect();
    let case2 = |a1: Elem, b1: Elem| {
        let a1c = b.complement(a1);
        primes.iter().all(|jb| {
            bounded_b
                .iter()
                .filter(|x| !jb.contains(x))
                .any(|&x| case1(x, a1c) || case1(x, b1))
        })
    };
    let (mut n1, mut n2) = (0, 0);
    let mut wi = vec![false; b.size() * b.size()];
    for a1 in b.elements() {
        for b1 in b.elements() {
            let v = if bounded_b.contains(&a1) {
                n1 += 1;
                case1(a1, b1)
            } else {
                n2 += 1;
                case2(a1, b1)
            };
            wi[a1.0 as usize * b.size() + b1.0 as usize] = v;
        }
    }
    let rho = Relation::from_fn(b, |x, y| !wi[x.0 as usize * b.size() + b.complement(y).0 as usize])?;
    let eta = ContactTriple::new(b, rho, bounded_b)?;
    let restricts_to_rho = Verdict::from_witness(
        t.algebra
            .elements()
            .flat_map(|x| t.algebra.elements().map(move |y| (x, y)))
            .find(|&(x, y)| eta.contact(phi.apply(x), phi.apply(y)) != t.contact(x, y)),
    );
    let axioms = check_axioms(&eta);
    Ok(ExtendedContact {
        eta,
        case1_pairs: n1,
        case2_pairs: n2,
        restricts_to_rho,
        axioms,
    })
}

/// Outcome of searching for an LCA-isomorphism `η` with `ψ = η ∘ φ`.
#[derive(Clone, Debug)]
pub struct Equivalence {
    pub iso: Option<StructMap>,
    pub certificate: String,
}

/// Searches atom bijections of the two targets. Contact on a finite algebra
/// is decided by atoms, so partial assignments are pruned on atom pairs and
/// atom boundedness.
pub fn completions_equivalent(c1: &CompletionPair, c2: &CompletionPair) -> Equivalence {
    let (t1, t2) = (&c1.target, &c2.target);
    let n = t1.algebra.atom_count();
    if n != t2.algebra.atom_count() {
        return Equivalence {
            iso: None,
            certificate: format!("targets have {} and {} atoms", n, t2.algebra.atom_count()),
        };
    }
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut tried = 0usize;
    let found = search(0, &mut perm, &mut used, t1, t2, &mut tried, &|perm| {
        let eta = StructMap::from_atom_map(t1.algebra, t2.algebra, &inverse(perm)).expect("bijection");
        c1.embedding.source == c2.embedding.source
            && c1
                .embedding
                .source
                .elements()
                .all(|a| eta.apply(c1.embedding.apply(a)) == c2.embedding.apply(a))
            && lca_embedding_check(t1, t2, &eta).holds()
    });
    match found {
        Some(p) => Equivalence {
            iso: Some(StructMap::from_atom_map(t1.algebra, t2.algebra, &inverse(&p)).expect("bijection")),
            certificate: format!("isomorphism found after {tried} complete assignments"),
        },
        None => Equivalence {
            iso: None,
            certificate: format!("no isomorphism among {tried} complete assignments"),
        },
    }
}

fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &j) in perm.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

fn search(
    i: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    t1: &ContactTriple,
    t2: &ContactTriple,
    tried: &mut usize,
    accept: &dyn Fn(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    let n = perm.len();
    if i == n {
        *tried += 1;
        return accept(perm).then(|| perm.clone());
    }
    let ai = Elem::atom(i);
    for j in 0..n {
        if used[j] || t1.is_bounded(ai) != t2.is_bounded(Elem::atom(j)) {
            continue;
        }
        let consistent = (0..=i).all(|k| {
            let pk = if k == i { j } else { perm[k] };
            t1.contact(ai, Elem::atom(k)) == t2.contact(Elem::atom(j), Elem::atom(pk))
        });
        if !consistent {
            continue;
        }
        used[j] = true;
        perm[i] = j;
        if let Some(p) = search(i + 1, perm, used, t1, t2, tried, accept) {
            return Some(p);
        }
        used[j] = false;
    }
    perm[i] = usize::MAX;
    None
}

/// A completion with its target relabelled by an atom permutation.
pub fn relabel_completion(c: &CompletionPair, perm: &[usize]) -> Result<CompletionPair> {
    let target = c.target.relabel(perm);
    let alg = target.algebra;
    let mv = StructMap::from_atom_map(alg, alg, &inverse(perm))?;
    let embedding = mv.after(&c.embedding)?;
    Ok(CompletionPair {
        dual: c.dual.relabel(perm),
        rc: c.rc.clone(),
        checks: c.checks.clone(),
        target,
        embedding,
    })
}

/// An LCA-embedding `T → C` with dV-dense bounded image, by exhaustive
/// search over Boolean homomorphisms.
pub fn dense_embedding(t: &ContactTriple, c: &ContactTriple) -> Result<Option<StructMap>> {
    let space = (c.algebra.atom_count() as f64).powi(t.algebra.atom_count() as i32);
    if space > 65536.0 {
        return Err(Error::Size {
            what: "homomorphisms to search",
            got: space as usize,
            cap: 65536,
        });
    }
    for h in all_homs(t.algebra, c.algebra) {
        if lca_embedding_check(t, c, &h).holds() && is_dv_dense(t, c, &h)? {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// Dual spaces of `T` and `T′` are homeomorphic iff `T` embeds densely in
/// the completion of `T′`. Returns both sides of the equivalence.
pub fn dual_criterion(t: &ContactTriple, t2: &ContactTriple) -> Result<(bool, bool)> {
    let homeo = crate::topo::find_homeomorphism(&psi_a(t)?.space, &psi_a(t2)?.space).is_some();
    let c2 = lca_completion(t2)?;
    let emb = dense_embedding(t, &c2.target)?.is_some();
    Ok((homeo, emb))
}

/// The completion of `(FinCofin(ℕ), ρ_s, Fin(ℕ))` inside `P(ℕ)`, with the
/// elements of `P(ℕ)` restricted to eventually periodic sets.
pub mod fc {
    use crate::ba::fincofin::IndexSet;

    /// `a₁ ≪_η b₁` for an infinite `a₁` by the prime-element formula. The
    /// prime δ-ideals of `Fin(ℕ)` are `Fin(ℕ \ {k})`, and the bounded
    /// elements of `P(ℕ)` outside `↓Fin(ℕ \ {k})` are the finite sets
    /// containing `k`. Among these `{k}` lies below every other, and the
    /// bounded case `x ≪ y` reduces to `x ⊆ y`, so `{k}` decides the
    /// existential.
    pub fn case2_well_inside(a1: &IndexSet, b1: &IndexSet) -> bool {
        let a1c = a1.complement();
        let singleton_below = |k: u64, s: &IndexSet| s.contains(k);
        let bound = a1.joint_decision_bound(b1);
        (0..bound).all(|k| singleton_below(k, &a1c) || singleton_below(k, b1))
    }

    /// `a₁ ≪_η b₁` for a finite `a₁` by the bounded formula: some finite
    /// `a ⊆ c` sit between, which holds iff `a₁ ⊆ b₁`.
    pub fn case1_well_inside(a1: &IndexSet, b1: &IndexSet) -> bool {
        a1.is_subset(b1)
    }

    pub fn well_inside(a1: &IndexSet, b1: &IndexSet) -> bool {
        if a1.is_finite() {
            case1_well_inside(a1, b1)
        } else {
            case2_well_inside(a1, b1)
        }
    }

    /// Sample subsets of ℕ, including ones outside FinCofin(ℕ).
    pub fn sample_sets() -> Vec<IndexSet> {
        vec![
            IndexSet::empty(),
            IndexSet::all(),
            IndexSet::finite([0, 3]),
            IndexSet::cofinite_of([1]),
            IndexSet::evens(),
            IndexSet::evens().complement(),
            IndexSet::periodic(3, [0]),
            IndexSet::periodic(3, [0, 1]),
            IndexSet::evens().union(&IndexSet::finite([1])),
            IndexSet::periodic(4, [0]),
        ]
    }

    /// The formulas reproduce `ρ_s` on `P(ℕ)`: `a ≪ b` iff `a ⊆ b`. Returns
    /// the first sample pair where they differ.
    pub fn check_against_rho_s() -> Option<(IndexSet, IndexSet)> {
        let s = sample_sets();
        for a in &s {
            for b in &s {
                if well_inside(a, b) != a.is_subset(b) {
                    return Some((a.clone(), b.clone()));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ba::Powerset;
    use crate::contact::{from_atom_relation, rho_s};

    fn p(n: usize) -> Powerset {
        Powerset::new(n).unwrap()
    }

    fn full(n: usize) -> ContactTriple {
        rho_s(p(n), &p(n).all()).unwrap()
    }

    #[test]
    fn delta_ideals_of_rho_s() {
        let t = full(2);
        let d = delta_ideals(&t);
        assert_eq!(d.len(), 4);
        let primes = prime_elements(&t);
        assert_eq!(primes, vec![p(2).down(Elem(0b01)), p(2).down(Elem(0b10))]);
        // On P(1) the bottom ideal is prime: the frame is a two-element chain.
        assert_eq!(prime_elements(&full(1)), vec![p(1).down(Elem(0))]);
        assert!(prime_elements(&full(0)).is_empty());
    }

    #[test]
    fn completion_of_finite_lca() {
        for n in 0..=3 {
            let t = full(n);
            let c = lca_completion(&t).unwrap();
            assert!(c.checks.holds(), "n = {n}");
            assert_eq!(c.target.algebra.atom_count(), n);
            let l = completion_lemma(&t, &c.target, &c.embedding).unwrap();
            assert!(l.holds(), "{l:?}");
        }
    }

    #[test]
    fn non_lca_rejected() {
        let t = from_atom_relation(p(2), &[(0, 1)], p(2).all()).unwrap();
        match lca_completion(&t) {
            Err(Error::Precondition(m)) => assert!(m.contains("BC3"), "{m}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn extension_is_idempotent() {
        for n in 0..=3 {
            let t = full(n);
            let e = extend_contact(&t, &StructMap::identity(p(n))).unwrap();
            assert_eq!(e.eta, t);
            assert!(e.restricts_to_rho.holds());
            assert_eq!(e.case2_pairs, 0);
        }
    }

    #[test]
    fn unbounded_rows_use_the_prime_formula() {
        let a = p(2);
        let t = ContactTriple::new(a, full(2).rho, a.down(Elem(0b01))).unwrap();
        let e = extend_contact(&t, &StructMap::identity(a)).unwrap();
        assert_eq!(e.case1_pairs, 8);
        assert_eq!(e.case2_pairs, 8);
        assert!(e.axioms.c2.holds());
    }

    #[test]
    fn extension_rejects_non_dense() {
        let t = full(1);
        let phi = StructMap::from_atom_map(p(1), p(2), &[0, 0]).unwrap();
        assert!(matches!(extend_contact(&t, &phi), Err(Error::Precondition(_))));
        let t0 = full(0);
        assert!(extend_contact(&t0, &StructMap::identity(p(0))).is_ok());
    }

    #[test]
    fn completions_are_equivalent() {
        let t = full(3);
        let c1 = lca_completion(&t).unwrap();
        let c2 = lca_completion(&t).unwrap();
        assert!(completions_equivalent(&c1, &c2).iso.is_some());
        let c3 = relabel_completion(&c1, &[1, 2, 0]).unwrap();
        assert!(c3.checks.holds());
        let eq = completions_equivalent(&c1, &c3);
        assert!(eq.iso.is_some(), "{}", eq.certificate);
        let other = lca_completion(&full(2)).unwrap();
        let eq = completions_equivalent(&c1, &other);
        assert!(eq.iso.is_none());
        assert!(eq.certificate.contains("atoms"));
    }

    #[test]
    fn dual_criterion_small() {
        for m in 0..=3 {
            for n in 0..=3 {
                let (h, e) = dual_criterion(&full(m), &full(n)).unwrap();
                assert_eq!(h, m == n);
                assert_eq!(h, e);
            }
        }
    }

    #[test]
    fn fincofin_formulas_give_rho_s() {
        assert_eq!(fc::check_against_rho_s(), None);
    }
}
