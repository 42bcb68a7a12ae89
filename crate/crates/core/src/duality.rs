//! The duality functors between local Boolean algebras and finite spaces
//! (`Θ^t`, `Θ^a`), their unit and counit, the contact-algebra duals `Ψ^t`,
//! `Ψ^a`, perfect maps, and products of LCAs against sums of spaces.
//!
//! Finite spaces stand in for locally compact zero-dimensional spaces; the
//! genuinely non-compact behaviour is only reached through FinCofin(ℕ) in
//! [`fc`].

use serde::Serialize;

use crate::ba::powerset::all_filters_brute;
use crate::ba::{ConcreteBa, Elem, ElemSet, Powerset, StructMap};
use crate::contact::{self, bounded_clusters, check_axioms, ContactTriple, Relation};
use crate::error::{Error, Result};
use crate::ideals::IsoCheck;
use crate::lba::{classify_pair, morphism_flags, LocalPair, MorphismFlags};
use crate::topo::{find_homeomorphism, point_set, FinSpace, PointSet, SpaceMap};
use crate::verdict::Verdict;

/// `Θ^t(X) = (CO(X), CK(X))`.
#[derive(Clone, Debug)]
pub struct ThetaT {
    pub co: ConcreteBa<PointSet>,
    pub pair: LocalPair,
    pub zlba: bool,
}

pub fn theta_t(x: &FinSpace) -> Result<ThetaT> {
    let co = x.co_algebra();
    let alg = co.algebra();
    let ideal: ElemSet = x
        .clopen_compact()
        .iter()
        .map(|s| co.encode(s).expect("clopen"))
        .collect();
    let pair = LocalPair::new(alg, ideal)?;
    let zlba = classify_pair(alg, &pair.ideal)?.zlba.holds();
    Ok(ThetaT { co, pair, zlba })
}

/// `Θ^t(f)(G) = f⁻¹(G)`, from `Θ^t(Y)` to `Θ^t(X)`.
#[derive(Clone, Debug)]
pub struct ThetaTMor {
    pub source: ThetaT,
    pub target: ThetaT,
    pub map: StructMap,
    pub flags: MorphismFlags,
    /// For finite spaces perfect means continuous and closed, since every
    /// point inverse is compact.
    pub perfect: bool,
}

pub fn theta_t_mor(f: &SpaceMap) -> Result<ThetaTMor> {
    if let Verdict::Fails(v) = f.continuity() {
        return Err(Error::Precondition(format!(
            "map is not continuous: preimage of {:?} is not open",
            crate::topo::point_list(v)
        )));
    }
    let ty = theta_t(&f.target)?;
    let tx = theta_t(&f.source)?;
    let map = StructMap::from_fn(ty.pair.algebra, tx.pair.algebra, |g| {
        tx.co
            .encode(&f.preimage(*ty.co.decode(g)))
            .expect("preimages of clopen sets are clopen")
    })?;
    let flags = morphism_flags(&ty.pair, &tx.pair, &map)?;
    Ok(ThetaTMor {
        perfect: f.is_closed_map(),
        source: ty,
        target: tx,
        map,
        flags,
    })
}

/// `Θ^a(B, I)`: bounded ultrafilters with the topology generated by
/// `λ^g(a) = {u | a ∈ u}`, `a ∈ I`. Point `i` is the ultrafilter at atom
/// `atoms[i]`.
#[derive(Clone, Debug)]
pub struct ThetaA {
    pub space: FinSpace,
    pub atoms: Vec<usize>,
    /// `{λ^g(a) | a ∈ I}` is an open base of the result.
    pub base_check: bool,
}

impl ThetaA {
    pub fn lambda(&self, a: Elem) -> PointSet {
        point_set((0..self.atoms.len()).filter(|&i| a.contains(self.atoms[i])))
    }

    pub fn point_of_atom(&self, atom: usize) -> Option<usize> {
        self.atoms.iter().position(|&x| x == atom)
    }
}

pub fn theta_a(pair: &LocalPair) -> Result<ThetaA> {
    let alg = pair.algebra;
    let atoms: Vec<usize> = (0..alg.atom_count())
        .filter(|&i| pair.ideal.contains(&Elem::atom(i)))
        .collect();
    let n = atoms.len();
    let lambda = |a: Elem| point_set((0..n).filter(|&i| a.contains(atoms[i])));
    let base: Vec<PointSet> = pair.ideal.iter().map(|&a| lambda(a)).collect();
    let space = FinSpace::from_open_subbase(n, base.iter().copied())?;
    let base_check = space.is_base(&base);
    Ok(ThetaA {
        space,
        atoms,
        base_check,
    })
}

/// `Θ^a(φ)(u′) = φ⁻¹(u′)`, from `Θ^a(B₁, J)` to `Θ^a(B, I)`.
#[derive(Clone, Debug)]
pub struct ThetaAMor {
    pub map: SpaceMap,
    /// `f_φ(λ^g(φ(a))) ⊆ λ^g(a)` for every `a ∈ I`; witness `a`.
    pub image_inclusion: Verdict<Elem>,
}

pub fn theta_a_mor(source: &LocalPair, target: &LocalPair, phi: &StructMap) -> Result<ThetaAMor> {
    let flags = morphism_flags(source, target, phi)?;
    if let Verdict::Fails(v) = flags.homomorphism {
        return Err(Error::Precondition(format!("not a Boolean homomorphism: {v:?}")));
    }
    if let Verdict::Fails(b) = flags.lba {
        return Err(Error::Precondition(format!(
            "condition (LBA) fails: {b} lies under no image of the source ideal"
        )));
    }
    let ts = theta_a(source)?;
    let tt = theta_a(target)?;
    let pre = phi
        .atom_preimages()
        .ok_or_else(|| Error::Structure("homomorphism without atom preimages".into()))?;
    let table = tt
        .atoms
        .iter()
        .map(|&j| {
            ts.point_of_atom(pre[j]).ok_or_else(|| {
                Error::Precondition(format!("preimage of the ultrafilter at {j} is unbounded"))
            })
        })
        .collect::<Result<Vec<usize>>>()?;
    let map = SpaceMap::new(tt.space.clone(), ts.space.clone(), table)?;
    let image_inclusion = Verdict::from_witness(source.ideal.iter().copied().find(|&a| {
        let img = map.image(tt.lambda(phi.apply(a)));
        img & !ts.lambda(a) != 0
    }));
    Ok(ThetaAMor {
        map,
        image_inclusion,
    })
}

/// `t_X(x) = u_x = {G ∈ CO(X) | x ∈ G}` into `Θ^a(Θ^t(X))`.
#[derive(Clone, Debug)]
pub struct UnitWitness {
    pub map: SpaceMap,
    pub continuous: bool,
    pub homeomorphism: bool,
}

pub fn unit_tx(x: &FinSpace) -> Result<UnitWitness> {
    let tt = theta_t(x)?;
    let ta = theta_a(&tt.pair)?;
    let atoms = tt.co.atoms();
    let table = (0..x.point_count())
        .map(|p| {
            let atom = atoms
                .iter()
                .position(|&s| s >> p & 1 == 1)
                .expect("clopen atoms cover X");
            ta.point_of_atom(atom).expect("every atom is bounded")
        })
        .collect();
    let map = SpaceMap::new(x.clone(), ta.space.clone(), table)?;
    let continuous = map.continuity().holds();
    let bijective = {
        let img: std::collections::BTreeSet<usize> = map.table().iter().copied().collect();
        img.len() == x.point_count() && x.point_count() == ta.space.point_count()
    };
    let homeomorphism = continuous
        && bijective
        && x.opens().iter().all(|&u| ta.space.is_open(map.image(u)));
    Ok(UnitWitness {
        map,
        continuous,
        homeomorphism,
    })
}

/// `Θ^a(Θ^t(f)) ∘ t_X = t_Y ∘ f`, witness a point of `X`.
pub fn unit_naturality(f: &SpaceMap) -> Result<Verdict<usize>> {
    let tf = theta_t_mor(f)?;
    let taf = theta_a_mor(&tf.source.pair, &tf.target.pair, &tf.map)?;
    let tx = unit_tx(&f.source)?;
    let ty = unit_tx(&f.target)?;
    Ok(Verdict::from_witness((0..f.source.point_count()).find(|&p| {
        taf.map.apply(tx.map.apply(p)) != ty.map.apply(f.apply(p))
    })))
}

/// `λ^C(b) = λ^g(b)` into `Θ^t(Θ^a(B, I))`.
#[derive(Clone, Debug)]
pub struct CounitWitness {
    pub map: StructMap,
    pub iso: IsoCheck,
    /// `λ^g(I) = CK(Θ^a(B, I))`.
    pub ideal_onto_ck: bool,
    /// A clopen set outside `λ^g(B)`, if any.
    pub missing_clopen: Option<PointSet>,
}

pub fn counit_lambda(pair: &LocalPair) -> Result<CounitWitness> {
    let ta = theta_a(pair)?;
    let tt = theta_t(&ta.space)?;
    let mut table = Vec::with_capacity(pair.algebra.size());
    for b in pair.algebra.elements() {
        let l = ta.lambda(b);
        table.push(tt.co.encode(&l).ok_or_else(|| {
            Error::Structure(format!("λ^g({b}) is not clopen"))
        })?);
    }
    let map = StructMap::from_table(pair.algebra, tt.pair.algebra, table)?;
    let iso = IsoCheck::of(&map);
    let ideal_image: ElemSet = pair.ideal.iter().map(|&a| map.apply(a)).collect();
    let image: ElemSet = pair.algebra.elements().map(|a| map.apply(a)).collect();
    let missing_clopen = tt
        .pair
        .algebra
        .elements()
        .find(|e| !image.contains(e))
        .map(|e| *tt.co.decode(e));
    Ok(CounitWitness {
        ideal_onto_ck: ideal_image == tt.pair.ideal,
        map,
        iso,
        missing_clopen,
    })
}

/// `Ψ^t(X) = (RC(X), ρ_X, CR(X))` with `F ρ_X G` iff `F ∩ G ≠ ∅`.
#[derive(Clone, Debug)]
pub struct PsiT {
    pub rc: ConcreteBa<PointSet>,
    pub triple: ContactTriple,
}

pub fn psi_t(x: &FinSpace) -> Result<PsiT> {
    let rc = x.rc_algebra();
    let alg = rc.algebra();
    let rho = Relation::from_fn(alg, |a, b| rc.decode(a) & rc.decode(b) != 0)?;
    let bounded = x
        .compact_regular_closed()
        .iter()
        .map(|s| rc.encode(s).expect("regular closed"))
        .collect();
    let triple = ContactTriple::new(alg, rho, bounded)?;
    Ok(PsiT { rc, triple })
}

/// `Ψ^a(T)`: bounded clusters of `(A, C_ρ)`, topologized by the closed
/// subbase `λ^g(a) = {σ | a ∈ σ}`.
#[derive(Clone, Debug)]
pub struct PsiA {
    pub space: FinSpace,
    pub points: Vec<ElemSet>,
    /// `{int λ^g(a) | a ∈ ⅅ}` is an open base of the result.
    pub open_base_check: bool,
}

impl PsiA {
    pub fn lambda(&self, a: Elem) -> PointSet {
        point_set((0..self.points.len()).filter(|&i| self.points[i].contains(&a)))
    }
}

pub fn psi_a(t: &ContactTriple) -> Result<PsiA> {
    let report = check_axioms(t);
    if !report.lca() {
        return Err(Error::Precondition(format!(
            "not a local contact algebra: {} fails",
            report.failures().join(", ")
        )));
    }
    let points: Vec<ElemSet> = bounded_clusters(t).into_iter().map(|c| c.members).collect();
    let n = points.len();
    let lambda = |a: Elem| point_set((0..n).filter(|&i| points[i].contains(&a)));
    let space = FinSpace::from_closed_subbase(n, t.algebra.elements().map(lambda))?;
    let base: Vec<PointSet> = t.bounded.iter().map(|&a| space.interior(lambda(a))).collect();
    let open_base_check = space.is_base(&base);
    Ok(PsiA {
        space,
        points,
        open_base_check,
    })
}

/// `Θ^a(φ)` for a (PLBA) morphism together with the preimage identity
/// `λ^g(φ(a)) = f_φ⁻¹(λ^g(a))` on the source ideal.
#[derive(Clone, Debug)]
pub struct PerfectWitness {
    pub map: SpaceMap,
    pub perfect: bool,
    pub preimage_identity: Verdict<Elem>,
}

pub fn perfect_duality_check(source: &LocalPair, target: &LocalPair, phi: &StructMap) -> Result<PerfectWitness> {
    let flags = morphism_flags(source, target, phi)?;
    if let Verdict::Fails(a) = flags.plba {
        return Err(Error::Precondition(format!(
            "condition (PLBA) fails: image of {a} leaves the target ideal"
        )));
    }
    let m = theta_a_mor(source, target, phi)?;
    let ts = theta_a(source)?;
    let tt = theta_a(target)?;
    let preimage_identity = Verdict::from_witness(
        source
            .ideal
            .iter()
            .copied()
            .find(|&a| tt.lambda(phi.apply(a)) != m.map.preimage(ts.lambda(a))),
    );
    Ok(PerfectWitness {
        perfect: m.map.continuity().holds() && m.map.is_closed_map(),
        map: m.map,
        preimage_identity,
    })
}

/// `Ψ^a(∏ T_γ)` against the sum `⨁ Ψ^a(T_γ)`. The map sends `σ` in the
/// `γ`-th summand to `{a | a_γ ∈ σ}`.
#[derive(Clone, Debug)]
pub struct ProductSum {
    pub sum: FinSpace,
    pub product_dual: FinSpace,
    pub map: Option<SpaceMap>,
    pub homeomorphism: bool,
}

pub fn product_sum_check(ts: &[ContactTriple]) -> Result<ProductSum> {
    let prod = contact::product(ts)?;
    let pd = psi_a(&prod)?;
    let duals = ts.iter().map(psi_a).collect::<Result<Vec<_>>>()?;
    let mut sum = FinSpace::new(0, [0])?;
    for d in &duals {
        sum = sum.sum(&d.space)?;
    }
    let mut offset = 0;
    let mut table = Vec::new();
    for (k, d) in duals.iter().enumerate() {
        let n = ts[k].algebra.atom_count();
        let coord = |a: Elem| Elem((a.0 >> offset) & ((1u32 << n) - 1));
        for sigma in &d.points {
            let lifted: ElemSet = prod.algebra.elements().filter(|&a| sigma.contains(&coord(a))).collect();
            table.push(pd.points.iter().position(|p| *p == lifted));
        }
        offset += n;
    }
    let table: Option<Vec<usize>> = table.into_iter().collect();
    let map = table.and_then(|t| SpaceMap::new(sum.clone(), pd.space.clone(), t).ok());
    let homeomorphism = map.as_ref().is_some_and(|m| {
        let img: std::collections::BTreeSet<usize> = m.table().iter().copied().collect();
        img.len() == sum.point_count()
            && sum.point_count() == pd.space.point_count()
            && m.continuity().holds()
            && sum.opens().iter().all(|&u| pd.space.is_open(m.image(u)))
    });
    Ok(ProductSum {
        sum,
        product_dual: pd.space,
        map,
        homeomorphism,
    })
}

/// The Stone dual of a small powerset computed without atoms: maximal
/// proper filters from a brute-force filter list, with the topology
/// generated by `{u | a ∈ u}`.
pub fn stone_dual(alg: Powerset) -> Result<FinSpace> {
    if alg.atom_count() > 4 {
        return Err(Error::Size {
            what: "atoms for the brute-force Stone dual",
            got: alg.atom_count(),
            cap: 4,
        });
    }
    let proper: Vec<ElemSet> = all_filters_brute(&alg)
        .into_iter()
        .filter(|f| !f.contains(&alg.zero()))
        .collect();
    let ultra: Vec<&ElemSet> = proper
        .iter()
        .filter(|f| !proper.iter().any(|g| g != *f && f.is_subset(g)))
        .collect();
    let n = ultra.len();
    let base = alg
        .elements()
        .map(|a| point_set((0..n).filter(|&i| ultra[i].contains(&a))));
    FinSpace::from_open_subbase(n, base)
}

/// `Θ^a(B, B)` is homeomorphic to the Stone dual of `B`.
pub fn stone_restriction_matches(alg: Powerset) -> Result<bool> {
    let ta = theta_a(&LocalPair::full(alg))?;
    Ok(find_homeomorphism(&ta.space, &stone_dual(alg)?).is_some())
}

/// Duals of the symbolic pairs `(FinCofin(ℕ), I)`.
pub mod fc {
    use super::*;
    use crate::ba::fincofin::{bounded_ultrafilters, FcElem, FcIdeal, UltrafilterFamily};

    /// The dual space of `(FinCofin(ℕ), I)` by description: which
    /// ultrafilters are points, and whether each principal point is
    /// isolated by `λ^g({k})`.
    #[derive(Clone, Debug, PartialEq, Eq, Serialize)]
    pub struct SymbolicSpace {
        pub points: UltrafilterFamily,
        pub discrete: bool,
        pub compact: bool,
    }

    impl SymbolicSpace {
        /// `λ^g({k}) = {u_k}`: the singleton `{k}` lies in exactly one
        /// ultrafilter.
        pub fn isolating_set(&self, k: u64) -> Option<FcElem> {
            self.points.principal_at.contains(k).then(|| FcElem::singleton(k))
        }
    }

    pub fn theta_a(ideal: &FcIdeal) -> Result<SymbolicSpace> {
        if let Verdict::Fails(w) = ideal.density() {
            return Err(Error::Precondition(format!(
                "not a local Boolean algebra: nothing in the ideal lies below {w}"
            )));
        }
        let points = bounded_ultrafilters(ideal);
        Ok(SymbolicSpace {
            discrete: !points.cofinite,
            compact: points.cofinite,
            points,
        })
    }

    /// Perfect-map check for `φ: (A, A) → (FinCofin(ℕ), J)`, `A` finite:
    /// rejected when (PLBA) fails.
    pub fn perfect_duality_check(
        source: &LocalPair,
        phi: &dyn Fn(Elem) -> FcElem,
        target: &FcIdeal,
    ) -> Result<()> {
        let (lba, plba) = crate::lba::fc::morphism_flags_into(source, phi, target);
        if let Verdict::Fails(b) = lba {
            return Err(Error::Precondition(format!("condition (LBA) fails at {b}")));
        }
        if let Verdict::Fails(a) = plba {
            return Err(Error::Precondition(format!(
                "condition (PLBA) fails: φ({a}) = {} is not in the target ideal",
                phi(a)
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ba::all_homs;
    use crate::contact::rho_s;

    fn p(n: usize) -> Powerset {
        Powerset::new(n).unwrap()
    }

    #[test]
    fn theta_t_examples() {
        let t = theta_t(&FinSpace::discrete(2)).unwrap();
        assert_eq!(t.pair, LocalPair::full(p(2)));
        assert!(t.zlba);
        let t = theta_t(&FinSpace::sierpinski()).unwrap();
        assert_eq!(t.pair, LocalPair::full(p(1)));
        let f = SpaceMap::identity(FinSpace::discrete(3));
        let m = theta_t_mor(&f).unwrap();
        assert_eq!(m.map, StructMap::identity(p(3)));
        assert!(m.flags.lba.holds() && m.flags.plba.holds() && m.perfect);
    }

    #[test]
    fn theta_t_needs_continuity() {
        let f = SpaceMap::new(FinSpace::sierpinski(), FinSpace::sierpinski(), vec![1, 0]).unwrap();
        assert!(matches!(theta_t_mor(&f), Err(Error::Precondition(_))));
    }

    #[test]
    fn theta_a_examples() {
        let t = theta_a(&LocalPair::full(p(3))).unwrap();
        assert_eq!(t.space, FinSpace::discrete(3));
        assert!(t.base_check);
        let m = theta_a_mor(&LocalPair::full(p(2)), &LocalPair::full(p(2)), &StructMap::identity(p(2))).unwrap();
        assert_eq!(m.map, SpaceMap::identity(FinSpace::discrete(2)));
        assert!(m.image_inclusion.holds());
    }

    #[test]
    fn fincofin_dual_is_discrete() {
        let s = fc::theta_a(&FcIdeal::fin()).unwrap();
        assert!(s.discrete && !s.compact);
        assert_eq!(s.isolating_set(7), Some(FcElem::singleton(7)));
        let s = fc::theta_a(&FcIdeal::all()).unwrap();
        assert!(s.compact);
    }

    use crate::ba::fincofin::{FcElem, FcIdeal};

    #[test]
    fn units_and_counits() {
        let u = unit_tx(&FinSpace::discrete(3)).unwrap();
        assert!(u.homeomorphism);
        assert_eq!(u.map.table(), &[0, 1, 2]);
        let c = counit_lambda(&LocalPair::full(p(2))).unwrap();
        assert!(c.iso.holds() && c.ideal_onto_ck && c.missing_clopen.is_none());
        let u = unit_tx(&FinSpace::from_partition(&[0, 0, 1])).unwrap();
        assert!(u.continuous && !u.homeomorphism);
    }

    #[test]
    fn unit_square_for_a_collapse() {
        let f = SpaceMap::new(FinSpace::discrete(3), FinSpace::discrete(2), vec![0, 1, 1]).unwrap();
        assert!(unit_naturality(&f).unwrap().holds());
    }

    #[test]
    fn psi_examples() {
        let t = rho_s(p(3), &p(3).all()).unwrap();
        let d = psi_a(&t).unwrap();
        assert_eq!(d.space, FinSpace::discrete(3));
        assert!(d.open_base_check);
        assert_eq!(psi_t(&FinSpace::discrete(3)).unwrap().triple, t);
        for n in 0..=4 {
            let x = FinSpace::discrete(n);
            let back = psi_a(&psi_t(&x).unwrap().triple).unwrap();
            assert!(find_homeomorphism(&back.space, &x).is_some());
        }
        let bad = contact::from_atom_relation(p(2), &[(0, 1)], p(2).all()).unwrap();
        assert!(matches!(psi_a(&bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn perfect_maps() {
        let a = LocalPair::full(p(2));
        let w = perfect_duality_check(&a, &a, &StructMap::identity(p(2))).unwrap();
        assert!(w.perfect && w.preimage_identity.holds());
        // P(1) → P(2) sending 1 to 1: dual is the collapse of two points.
        let b = LocalPair::full(p(1));
        for h in all_homs(p(1), p(2)) {
            let w = perfect_duality_check(&b, &a, &h).unwrap();
            assert!(w.perfect && w.preimage_identity.holds());
            assert_eq!(w.map.table(), &[0, 0]);
        }
        let phi = |x: Elem| if x.is_zero() { FcElem::zero() } else { FcElem::one() };
        let e = fc::perfect_duality_check(&b, &phi, &FcIdeal::fin()).unwrap_err();
        assert!(e.to_string().contains("PLBA"), "{e}");
    }

    #[test]
    fn products_and_sums() {
        let one = rho_s(p(1), &p(1).all()).unwrap();
        let w = product_sum_check(&[one.clone(), one.clone()]).unwrap();
        assert!(w.homeomorphism);
        assert_eq!(w.sum, FinSpace::discrete(2));
        assert!(product_sum_check(&[one]).unwrap().homeomorphism);
        let e = product_sum_check(&[]).unwrap();
        assert_eq!(e.sum.point_count(), 0);
        assert!(e.homeomorphism);
    }

    #[test]
    fn stone_dual_agrees() {
        for n in 0..=3 {
            assert!(stone_restriction_matches(p(n)).unwrap());
        }
    }
}
