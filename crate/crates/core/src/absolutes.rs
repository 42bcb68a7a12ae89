//! Absolutes and co-absoluteness of finite spaces, the adjoint pair of a
//! skeletal map, Ponomarev's embedding conditions, σ-disjoint dense sets and
//! π-bases, and dense subsets of a given size.

use serde::Serialize;

use crate::ba::{Elem, ElemSet, Powerset, StructMap};
use crate::contact::rho_s;
use crate::duality::psi_a;
use crate::error::{Error, Result};
use crate::ideals::IsoCheck;
use crate::topo::{classify_map, find_homeomorphism, point_set, FinSpace, PointSet, SpaceMap};
use crate::verdict::Verdict;

/// Stone space of a finite algebra given by its subset of `alg`: points are
/// ultrafilters (one per atom), with the sets `{u | a ∈ u}` as open base.
fn stone_space(alg: Powerset) -> Result<FinSpace> {
    let ultra = alg.ultrafilters();
    let n = ultra.len();
    FinSpace::from_open_subbase(n, alg.elements().map(|a| point_set((0..n).filter(|&i| ultra[i].contains(&a)))))
}

#[derive(Clone, Debug, Serialize)]
pub struct AbsoluteWitness {
    /// `S^a(RC(X))`.
    pub space: FinSpace,
    /// `RC(X) → RC(Y)`, `F ↦ {u | F ∈ u}`, in canonical coordinates.
    pub rc_iso: Vec<Elem>,
    pub rc_iso_check: IsoCheck,
    pub extremally_disconnected: bool,
    /// `Ψ^a(RC(X), ρ_s, RC(X))` is homeomorphic to `S^a(RC(X))`.
    pub via_contact: bool,
}

impl AbsoluteWitness {
    pub fn holds(&self) -> bool {
        self.rc_iso_check.holds() && self.extremally_disconnected && self.via_contact
    }
}

pub fn absolute_space(x: &FinSpace) -> Result<AbsoluteWitness> {
    let rc = x.rc_algebra();
    let alg = rc.algebra();
    let space = stone_space(alg)?;
    let ultra = alg.ultrafilters();
    let rc_y = space.rc_algebra();
    let map = StructMap::from_fn(alg, rc_y.algebra(), |a| {
        let l = point_set((0..ultra.len()).filter(|&i| ultra[i].contains(&a)));
        rc_y.encode(&l).unwrap_or(Elem(0))
    })?;
    let rc_iso_check = IsoCheck::of(&map);
    let other = psi_a(&rho_s(alg, &alg.all())?)?;
    Ok(AbsoluteWitness {
        extremally_disconnected: space.is_extremally_disconnected(),
        via_contact: find_homeomorphism(&space, &other.space).is_some(),
        rc_iso: map.table().to_vec(),
        rc_iso_check,
        space,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Coabsolute {
    pub holds: bool,
    /// `RC(X) → RC(Y)` matching atoms in order, when the algebras are isomorphic.
    pub iso: Option<Vec<Elem>>,
}

/// Finite spaces are co-absolute iff their regular closed algebras are
/// isomorphic, which for finite algebras means equal atom counts.
pub fn coabsolute(x: &FinSpace, y: &FinSpace) -> Result<Coabsolute> {
    let (a, b) = (x.rc_algebra().algebra(), y.rc_algebra().algebra());
    if a.atom_count() != b.atom_count() {
        return Ok(Coabsolute {
            holds: false,
            iso: None,
        });
    }
    let ident: Vec<usize> = (0..a.atom_count()).collect();
    let map = StructMap::from_atom_map(a, b, &ident)?;
    debug_assert!(IsoCheck::of(&map).holds());
    Ok(Coabsolute {
        holds: true,
        iso: Some(map.table().to_vec()),
    })
}

/// `ψ(F) = cl f(F)` and `φ(G) = cl f⁻¹(int G)` between `RC(X)` and `RC(Y)`.
#[derive(Clone, Debug, Serialize)]
pub struct AdjointPair {
    pub psi: Vec<Elem>,
    pub phi: Vec<Elem>,
    /// `F ⊆ φ(ψ(F))` for every `F`; the witness is a failing `F`.
    pub unit: Verdict<Elem>,
    /// `ψ(φ(G)) ⊆ G` for every `G`.
    pub counit: Verdict<Elem>,
    /// `ψ` is a Boolean isomorphism.
    pub psi_iso: bool,
}

pub fn adjoint_pair(f: &SpaceMap) -> Result<AdjointPair> {
    let report = classify_map(f);
    let flags = report
        .flags
        .ok_or_else(|| Error::Precondition(format!("map is not continuous: {:?}", report.continuity)))?;
    if !flags.skeletal {
        return Err(Error::Precondition("map is not skeletal".into()));
    }
    let (x, y) = (&f.source, &f.target);
    let (rx, ry) = (x.rc_algebra(), y.rc_algebra());
    let (ax, ay) = (rx.algebra(), ry.algebra());
    let mut psi = Vec::with_capacity(ax.size());
    for a in ax.elements() {
        let s = y.closure(f.image(*rx.decode(a)));
        psi.push(ry.encode(&s).ok_or_else(|| {
            Error::Structure(format!("closure of the image of {:?} is not regular closed", rx.decode(a)))
        })?);
    }
    let phi: Vec<Elem> = ay
        .elements()
        .map(|g| {
            let s = x.closure(f.preimage(y.interior(*ry.decode(g))));
            rx.encode(&s).expect("closures of open sets are regular closed")
        })
        .collect();
    let unit = Verdict::from_witness(
        ax.elements()
            .find(|&a| !ax.leq(a, phi[psi[a.0 as usize].0 as usize])),
    );
    let counit = Verdict::from_witness(
        ay.elements()
            .find(|&g| !ay.leq(psi[phi[g.0 as usize].0 as usize], g)),
    );
    let psi_iso = ax.atom_count() == ay.atom_count()
        && StructMap::from_table(ax, ay, psi.clone()).is_ok_and(|m| IsoCheck::of(&m).holds());
    Ok(AdjointPair {
        psi,
        phi,
        unit,
        counit,
        psi_iso,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PonomarevReport {
    pub preserves_joins: Verdict<(Elem, Elem)>,
    /// `φ(0) = 0` and only `1` goes to `1`.
    pub zero_and_one: bool,
    pub dense_image: Verdict<Elem>,
    /// Present when all three conditions hold.
    pub conclusion: Option<PonomarevConclusion>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PonomarevConclusion {
    pub injective_homomorphism: bool,
    pub pi_weights_equal: bool,
    /// The source is finite, hence complete, so this should hold too.
    pub isomorphism: bool,
}

impl PonomarevReport {
    pub fn conditions_hold(&self) -> bool {
        self.conclusion.is_some()
    }
}

pub fn ponomarev_embedding_check(src: Powerset, tgt: Powerset, table: &[Elem]) -> Result<PonomarevReport> {
    if table.len() != src.size() || table.iter().any(|&b| !tgt.contains(b)) {
        return Err(Error::Membership("table does not map the source into the target".into()));
    }
    let f = |a: Elem| table[a.0 as usize];
    let preserves_joins = Verdict::from_witness(
        src.elements()
            .flat_map(|a| src.elements().map(move |b| (a, b)))
            .find(|&(a, b)| f(src.join(a, b)) != tgt.join(f(a), f(b))),
    );
    let zero_and_one = f(src.zero()) == tgt.zero()
        && src.elements().all(|a| (f(a) == tgt.one()) == (a == src.one()));
    let image: ElemSet = table.iter().copied().collect();
    let dense_image = tgt.is_dense_subset(&image)?;
    let conclusion = if preserves_joins.holds() && zero_and_one && dense_image.holds() {
        let map = StructMap::from_table(src, tgt, table.to_vec())?;
        let check = IsoCheck::of(&map);
        Some(PonomarevConclusion {
            injective_homomorphism: check.homomorphism.holds() && map.is_injective(),
            pi_weights_equal: src.pi_weight()?.0 == tgt.pi_weight()?.0,
            isomorphism: check.holds(),
        })
    } else {
        None
    };
    Ok(PonomarevReport {
        preserves_joins,
        zero_and_one,
        dense_image,
        conclusion,
    })
}

/// A dense subset split into levels of pairwise disjoint elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaDecomposition<T> {
    pub levels: Vec<Vec<T>>,
}

impl<T> SigmaDecomposition<T> {
    pub fn level_count(&self) -> usize {
        self.levels.len()
    }
}

/// The atoms form one disjoint level; the trivial algebra needs none.
pub fn sigma_disjoint_dense(alg: Powerset) -> SigmaDecomposition<Elem> {
    let atoms: Vec<Elem> = alg.atoms().collect();
    SigmaDecomposition {
        levels: if atoms.is_empty() { vec![] } else { vec![atoms] },
    }
}

pub fn is_sigma_disjoint_dense(alg: Powerset, d: &SigmaDecomposition<Elem>) -> Result<bool> {
    let disjoint = d.levels.iter().all(|l| {
        l.iter().enumerate().all(|(i, &a)| {
            !a.is_zero() && l[i + 1..].iter().all(|&b| alg.meet(a, b).is_zero())
        })
    });
    let all: ElemSet = d.levels.iter().flatten().copied().collect();
    Ok(disjoint && alg.is_dense_subset(&all)?.holds())
}

/// The minimal nonempty open sets are pairwise disjoint and every nonempty
/// open set contains one, so they form a one-level π-base.
pub fn sigma_disjoint_pi_base(x: &FinSpace) -> SigmaDecomposition<PointSet> {
    let nonempty: Vec<PointSet> = x.opens().iter().copied().filter(|&u| u != 0).collect();
    let minimal: Vec<PointSet> = nonempty
        .iter()
        .copied()
        .filter(|&u| !nonempty.iter().any(|&v| v != u && v & !u == 0))
        .collect();
    SigmaDecomposition {
        levels: if minimal.is_empty() { vec![] } else { vec![minimal] },
    }
}

pub fn is_sigma_disjoint_pi_base(x: &FinSpace, d: &SigmaDecomposition<PointSet>) -> bool {
    let disjoint = d.levels.iter().all(|l| {
        l.iter().enumerate().all(|(i, &u)| {
            u != 0 && x.is_open(u) && l[i + 1..].iter().all(|&v| u & v == 0)
        })
    });
    let all: Vec<PointSet> = d.levels.iter().flatten().copied().collect();
    disjoint && x.is_pi_base(&all)
}

#[derive(Clone, Debug, Serialize)]
pub enum DenseCriterion {
    /// No dense subset of the requested size.
    Impossible { pi_weight: usize, size: usize },
    Built {
        dense: ElemSet,
        /// The subalgebra generated by `dense`.
        subalgebra: ElemSet,
        /// Stone dual of the subalgebra.
        space: FinSpace,
        /// `A → RC(X)` in canonical coordinates.
        rc_iso: Vec<Elem>,
        rc_iso_check: IsoCheck,
    },
}

fn generated_subalgebra(alg: Powerset, gens: &ElemSet) -> ElemSet {
    let mut s: ElemSet = gens.clone();
    s.insert(alg.zero());
    s.insert(alg.one());
    loop {
        let mut next = s.clone();
        for &a in &s {
            next.insert(alg.complement(a));
            for &b in &s {
                next.insert(alg.meet(a, b));
            }
        }
        if next.len() == s.len() {
            return s;
        }
        s = next;
    }
}

/// A dense subset of `alg` with exactly `tau` elements, and the dual of the
/// subalgebra it generates, whose regular closed algebra is `alg` again.
pub fn dense_subset_criterion(alg: Powerset, tau: usize) -> Result<DenseCriterion> {
    let (pw, base) = alg.pi_weight()?;
    if tau < pw || tau > alg.size() {
        return Ok(DenseCriterion::Impossible {
            pi_weight: pw,
            size: alg.size(),
        });
    }
    let mut dense = base;
    for a in alg.elements() {
        if dense.len() == tau {
            break;
        }
        dense.insert(a);
    }
    let subalgebra = generated_subalgebra(alg, &dense);
    let sub_atoms: Vec<Elem> = subalgebra
        .iter()
        .copied()
        .filter(|&a| !a.is_zero() && !subalgebra.iter().any(|&b| !b.is_zero() && b != a && alg.leq(b, a)))
        .collect();
    let n = sub_atoms.len();
    let space = FinSpace::from_open_subbase(
        n,
        subalgebra
            .iter()
            .map(|&b| point_set((0..n).filter(|&i| alg.leq(sub_atoms[i], b)))),
    )?;
    let rc = space.rc_algebra();
    let map = StructMap::from_fn(alg, rc.algebra(), |a| {
        let s = point_set((0..n).filter(|&i| alg.leq(sub_atoms[i], a)));
        rc.encode(&space.closure(space.interior(s))).unwrap_or(Elem(0))
    })?;
    Ok(DenseCriterion::Built {
        rc_iso_check: IsoCheck::of(&map),
        rc_iso: map.table().to_vec(),
        dense,
        subalgebra,
        space,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topo::{all_topologies, continuous_maps};

    fn p(n: usize) -> Powerset {
        Powerset::new(n).unwrap()
    }

    /// Three points, RC of four elements: two open points sharing a closed one.
    fn vee() -> FinSpace {
        FinSpace::new(3, [0b000, 0b001, 0b010, 0b011, 0b111]).unwrap()
    }

    #[test]
    fn absolute_examples() {
        let d = absolute_space(&FinSpace::discrete(3)).unwrap();
        assert!(d.holds());
        assert!(find_homeomorphism(&d.space, &FinSpace::discrete(3)).is_some());
        let s = absolute_space(&FinSpace::sierpinski()).unwrap();
        assert_eq!(s.space.point_count(), 1);
        let v = absolute_space(&vee()).unwrap();
        assert_eq!(vee().rc_algebra().len(), 4);
        assert!(find_homeomorphism(&v.space, &FinSpace::discrete(2)).is_some());
    }

    #[test]
    fn absolutes_on_small_spaces() {
        for n in 0..=3 {
            for x in all_topologies(n) {
                let w = absolute_space(&x).unwrap();
                assert!(w.holds(), "{x:?}");
                let ww = absolute_space(&w.space).unwrap();
                assert!(find_homeomorphism(&w.space, &ww.space).is_some());
            }
        }
    }

    #[test]
    fn coabsolute_examples() {
        let d2 = FinSpace::discrete(2);
        assert!(coabsolute(&d2, &d2).unwrap().holds);
        assert!(!coabsolute(&d2, &FinSpace::sierpinski()).unwrap().holds);
        let c = coabsolute(&d2, &vee()).unwrap();
        assert!(c.holds);
        assert_eq!(c.iso.unwrap().len(), 4);
    }

    #[test]
    fn adjoint_pairs() {
        let x = vee();
        let id = adjoint_pair(&SpaceMap::identity(x.clone())).unwrap();
        assert!(id.psi_iso);
        assert_eq!(id.psi, id.phi);
        for n in 0..=3 {
            for x in all_topologies(n) {
                for y in all_topologies(n) {
                    for f in continuous_maps(&x, &y) {
                        let flags = classify_map(&f).flags.unwrap();
                        match adjoint_pair(&f) {
                            Ok(a) => {
                                assert!(a.unit.holds() && a.counit.holds(), "{f:?}");
                                if flags.mr {
                                    assert!(a.psi_iso, "{f:?}");
                                }
                            }
                            Err(Error::Precondition(_)) => assert!(!flags.skeletal),
                            Err(e) => panic!("{e}"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn ponomarev_examples() {
        let a = p(2);
        let id: Vec<Elem> = a.elements().collect();
        let r = ponomarev_embedding_check(a, a, &id).unwrap();
        assert!(r.conclusion.unwrap().isomorphism);
        let not_dense: Vec<Elem> = p(1).elements().map(|e| if e.is_zero() { Elem(0) } else { Elem(3) }).collect();
        let r = ponomarev_embedding_check(p(1), a, &not_dense).unwrap();
        assert_eq!(r.dense_image, Verdict::Fails(Elem(1)));
        assert!(r.conclusion.is_none());
    }

    #[test]
    fn sigma_disjoint() {
        let d = sigma_disjoint_dense(p(3));
        assert_eq!(d.level_count(), 1);
        assert_eq!(d.levels[0].len(), 3);
        assert!(is_sigma_disjoint_dense(p(3), &d).unwrap());
        assert_eq!(sigma_disjoint_dense(p(0)).level_count(), 0);
        for n in 0..=3 {
            for x in all_topologies(n) {
                assert!(is_sigma_disjoint_pi_base(&x, &sigma_disjoint_pi_base(&x)));
            }
        }
    }

    #[test]
    fn dense_subsets_by_size() {
        match dense_subset_criterion(p(2), 2).unwrap() {
            DenseCriterion::Built { dense, space, rc_iso_check, .. } => {
                assert_eq!(dense, [Elem(1), Elem(2)].into());
                assert!(find_homeomorphism(&space, &FinSpace::discrete(2)).is_some());
                assert!(rc_iso_check.holds());
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            dense_subset_criterion(p(2), 1).unwrap(),
            DenseCriterion::Impossible { pi_weight: 2, .. }
        ));
        match dense_subset_criterion(p(2), 4).unwrap() {
            DenseCriterion::Built { rc_iso_check, .. } => assert!(rc_iso_check.holds()),
            other => panic!("{other:?}"),
        }
    }
}
