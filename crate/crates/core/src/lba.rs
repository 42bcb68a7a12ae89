//! Local Boolean algebras `(A, I)`: classification, the morphism conditions
//! (LBA) and (PLBA), and the equivalences between prime LBAs, ZLBAs and
//! generalized Boolean pseudolattices.
//!
//! Over a finite algebra a dense ideal is the whole algebra, so every finite
//! LBA has the form `(A, A)`. The finite–cofinite pair `(FinCofin(ℕ), Fin(ℕ))`
//! is where the classes come apart; it has its own module [`fc`].

use serde::Serialize;

use crate::ba::{all_homs, hom_check, ConcreteBa, Elem, ElemSet, HomViolation, Powerset, StructMap};
use crate::contact::{self, rho_s};
use crate::error::{Error, Result};
use crate::ideals::{bounded_subalgebra, embed_e, members, sigma_zlba, Embedding, Ideal, IsoCheck, Pseudolattice, Sigma};
use crate::verdict::Verdict;

/// `(A, I)` with `I` a dense ideal of the powerset `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalPair {
    pub algebra: Powerset,
    pub ideal: ElemSet,
}

impl LocalPair {
    pub fn new(algebra: Powerset, ideal: ElemSet) -> Result<Self> {
        algebra.require_ideal(&ideal)?;
        if let Verdict::Fails(w) = algebra.is_dense_subset(&ideal)? {
            return Err(Error::Precondition(format!(
                "not a local Boolean algebra: ideal is not dense, witness {w}"
            )));
        }
        Ok(LocalPair { algebra, ideal })
    }

    /// `(A, A)`.
    pub fn full(algebra: Powerset) -> Self {
        LocalPair {
            algebra,
            ideal: algebra.all(),
        }
    }

    pub fn is_prime(&self) -> bool {
        self.ideal.len() == self.algebra.size() || self.algebra.is_prime_ideal(&self.ideal)
    }
}

/// Membership in each class, with a witness string for every failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairClass {
    pub lba: Verdict<String>,
    pub plba: Verdict<String>,
    pub zlba: Verdict<String>,
    /// Between any `a ≪ b` of the ideal (for `ρ_s`) sits some `c` of the
    /// ideal with `c ≪ c`.
    pub dzlc: Verdict<String>,
}

fn not_lba(lba: &Verdict<String>) -> Verdict<String> {
    Verdict::Fails(format!("not an LBA ({})", lba.witness().cloned().unwrap_or_default()))
}

pub fn classify_pair(alg: Powerset, ideal: &ElemSet) -> Result<PairClass> {
    alg.check_members(ideal)?;
    let lba = if !alg.is_ideal(ideal) {
        Verdict::Fails(format!("{ideal:?} is not an ideal"))
    } else {
        alg.is_dense_subset(ideal)?.map(|w| w.to_string())
    };
    if !lba.holds() {
        let f = not_lba(&lba);
        return Ok(PairClass {
            lba,
            plba: f.clone(),
            zlba: f.clone(),
            dzlc: f,
        });
    }
    let pair = LocalPair {
        algebra: alg,
        ideal: ideal.clone(),
    };
    let plba = if pair.is_prime() {
        Verdict::Holds
    } else {
        Verdict::Fails(
            alg.elements()
                .find(|&a| !ideal.contains(&a) && !ideal.contains(&alg.complement(a)))
                .map(|a| a.to_string())
                .unwrap_or_else(|| "ideal is not prime".into()),
        )
    };
    // A finite algebra has every join, so each simple ideal of I has one.
    let zlba = Verdict::Holds;
    let t = rho_s(alg, ideal)?;
    let dzlc = Verdict::from_witness(
        ideal
            .iter()
            .flat_map(|&a| ideal.iter().map(move |&b| (a, b)))
            .find(|&(a, b)| {
                t.well_inside(a, b)
                    && !ideal
                        .iter()
                        .any(|&c| t.well_inside(c, c) && alg.leq(a, c) && alg.leq(c, b))
            })
            .map(|(a, b)| format!("({a}, {b})")),
    );
    Ok(PairClass {
        lba,
        plba,
        zlba,
        dzlc,
    })
}

/// For a prime ideal: dense and non-principal, which always coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeDenseReport {
    pub dense: bool,
    pub non_principal: bool,
    /// The trivial algebra, where `I = A` and primality is vacuous.
    pub degenerate: bool,
}

impl PrimeDenseReport {
    pub fn equivalent(&self) -> bool {
        self.degenerate || self.dense == self.non_principal
    }
}

pub fn prime_dense_criterion(alg: Powerset, ideal: &ElemSet) -> Result<PrimeDenseReport> {
    alg.require_ideal(ideal)?;
    let dense = alg.is_dense_subset(ideal)?.holds();
    let non_principal = alg.principal_generator(ideal).is_none();
    if alg.is_trivial() {
        return Ok(PrimeDenseReport {
            dense,
            non_principal,
            degenerate: true,
        });
    }
    if !alg.is_prime_ideal(ideal) {
        return Err(Error::Precondition(format!("{ideal:?} is not a prime ideal")));
    }
    Ok(PrimeDenseReport {
        dense,
        non_principal,
        degenerate: false,
    })
}

/// A Boolean homomorphism between local pairs, with the two conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismFlags {
    pub homomorphism: Verdict<HomViolation>,
    /// Every `b ∈ J` lies below `φ(a)` for some `a ∈ I`; witness `b`.
    pub lba: Verdict<Elem>,
    /// `φ(I) ⊆ J`; witness `a`.
    pub plba: Verdict<Elem>,
}

pub fn morphism_flags(source: &LocalPair, target: &LocalPair, map: &StructMap) -> Result<MorphismFlags> {
    if map.source != source.algebra || map.target != target.algebra {
        return Err(Error::Structure("map does not run between these algebras".into()));
    }
    let lba = Verdict::from_witness(target.ideal.iter().copied().find(|&b| {
        !source
            .ideal
            .iter()
            .any(|&a| target.algebra.leq(b, map.apply(a)))
    }));
    let plba = Verdict::from_witness(
        source
            .ideal
            .iter()
            .copied()
            .find(|&a| !target.ideal.contains(&map.apply(a))),
    );
    Ok(MorphismFlags {
        homomorphism: hom_check(map),
        lba,
        plba,
    })
}

/// Unique Boolean extension of a poset isomorphism `ψ: J → I`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub map: StructMap,
    pub embedding: bool,
    /// `φ(B) = B_A(I)`.
    pub image_is_bounded_subalgebra: bool,
    /// Number of Boolean homomorphisms `B → A` agreeing with `ψ` on `J`,
    /// when the search space is small enough to exhaust.
    pub extensions_found: Option<usize>,
}

/// `ψ` given as pairs `(j, ψ(j))`, one for each `j ∈ J`.
pub fn extend_poset_iso(source: &LocalPair, target: &LocalPair, psi: &[(Elem, Elem)]) -> Result<Extension> {
    let (b, a) = (source.algebra, target.algebra);
    if !source.is_prime() {
        return Err(Error::Precondition("source pair is not prime".into()));
    }
    let mut table = std::collections::BTreeMap::new();
    for &(x, y) in psi {
        if !source.ideal.contains(&x) || !target.ideal.contains(&y) {
            return Err(Error::Precondition(format!("({x}, {y}) is not a pair of ideal elements")));
        }
        if table.insert(x, y).is_some() {
            return Err(Error::Precondition(format!("{x} is mapped twice")));
        }
    }
    if table.len() != source.ideal.len() {
        return Err(Error::Precondition("ψ is not defined on the whole ideal".into()));
    }
    let image: ElemSet = table.values().copied().collect();
    if image != target.ideal {
        return Err(Error::Precondition("ψ is not a bijection onto the target ideal".into()));
    }
    for (&x1, &y1) in &table {
        for (&x2, &y2) in &table {
            if b.leq(x1, x2) != a.leq(y1, y2) {
                return Err(Error::Precondition(format!(
                    "ψ does not preserve and reflect {x1} ≤ {x2}"
                )));
            }
        }
    }
    let map = StructMap::from_fn(b, a, |x| match table.get(&x) {
        Some(&y) => y,
        None => a.complement(table[&b.complement(x)]),
    })?;
    let embedding = map.is_injective() && hom_check(&map).holds();
    let image: ElemSet = b.elements().map(|x| map.apply(x)).collect();
    let image_is_bounded_subalgebra = image == bounded_subalgebra(a, &target.ideal)?;
    let space = (a.atom_count() as f64).powi(b.atom_count() as i32);
    let extensions_found = (space <= 4096.0).then(|| {
        all_homs(b, a)
            .iter()
            .filter(|h| table.iter().all(|(&x, &y)| h.apply(x) == y))
            .count()
    });
    Ok(Extension {
        map,
        embedding,
        image_is_bounded_subalgebra,
        extensions_found,
    })
}

/// `E^z(B, I) = (B_B(I), I)`, with `B_B(I)` in its own coordinates.
#[derive(Clone, Debug)]
pub struct EzImage {
    pub pair: LocalPair,
    /// Coordinates of `B_B(I)` as a subalgebra of `B`.
    pub coords: ConcreteBa<Elem>,
    /// The result is a prime LBA.
    pub verified: bool,
}

pub fn functor_ez(source: &LocalPair) -> Result<EzImage> {
    let b = source.algebra;
    let sub = bounded_subalgebra(b, &source.ideal)?;
    let coords = ConcreteBa::new(sub.iter().copied().collect::<Vec<_>>(), |x, y| b.leq(*x, *y), |x, y| {
        b.join(*x, *y)
    })?;
    let alg = coords.algebra();
    let ideal: ElemSet = source
        .ideal
        .iter()
        .map(|x| coords.encode(x).expect("ideal lies in B_B(I)"))
        .collect();
    let pair = LocalPair::new(alg, ideal)?;
    let verified = classify_pair(alg, &pair.ideal)?.plba.holds();
    Ok(EzImage {
        pair,
        coords,
        verified,
    })
}

/// `E^z(φ)`: the restriction of `φ` to the bounded subalgebras.
pub fn functor_ez_map(src: &EzImage, tgt: &EzImage, phi: &StructMap) -> Result<StructMap> {
    StructMap::from_fn(src.pair.algebra, tgt.pair.algebra, |x| {
        let y = phi.apply(*src.coords.decode(x));
        tgt.coords.encode(&y).unwrap_or(Elem::ZERO)
    })
    .and_then(|m| {
        let ok = src
            .pair
            .algebra
            .elements()
            .all(|x| tgt.coords.encode(&phi.apply(*src.coords.decode(x))).is_some());
        if ok {
            Ok(m)
        } else {
            Err(Error::Precondition("φ does not map B_B(I) into the target's B_B(J)".into()))
        }
    })
}

/// `E^p(A, I) = (Si(I), e_I(I))`, materialized through `B_{Si(I)}(e_I(I))`.
#[derive(Clone, Debug)]
pub struct EpImage {
    pub lattice: Pseudolattice,
    pub embedding: Embedding,
    pub pair: LocalPair,
    /// `B_{Si(I)}(e_I(I))` is all of `Si(I)`.
    pub representable_is_whole: bool,
    /// The result is a ZLBA.
    pub verified: bool,
}

pub fn functor_ep(source: &LocalPair) -> Result<EpImage> {
    if !source.is_prime() {
        return Err(Error::Precondition("E^p needs a prime LBA".into()));
    }
    let lattice = Pseudolattice::from_ideal(source.algebra, &source.ideal)?;
    let embedding = embed_e(&lattice)?;
    let si = embedding.si.algebra();
    let image = embedding.image();
    let representable_is_whole = bounded_subalgebra(si, &image)?.len() == si.size();
    let pair = LocalPair::new(si, image)?;
    let verified = embedding.verified() && classify_pair(si, &pair.ideal)?.zlba.holds();
    Ok(EpImage {
        lattice,
        embedding,
        pair,
        representable_is_whole,
        verified,
    })
}

/// `E^p(φ)(J₁) = ⋃{↓φ(a) | a ∈ J₁}`.
pub fn functor_ep_map(
    src: &EpImage,
    tgt: &EpImage,
    phi: &StructMap,
) -> Result<StructMap> {
    let (l1, l2) = (&src.lattice, &tgt.lattice);
    let image_of = |j1: Ideal| -> Result<Ideal> {
        let mut j2: Ideal = 0;
        for i in members(j1) {
            let a = l1.elem(i).expect("built from elements");
            let fa = l2.index_of(phi.apply(a)).ok_or_else(|| {
                Error::Precondition(format!("φ({a}) leaves the target ideal"))
            })?;
            j2 |= l2.down(fa);
        }
        Ok(j2)
    };
    let si1 = &src.embedding.si;
    let si2 = &tgt.embedding.si;
    let mut table = Vec::with_capacity(si1.algebra().size());
    for x in si1.algebra().elements() {
        let j2 = image_of(si1.decode(x))?;
        table.push(si2.encode(j2).ok_or_else(|| {
            Error::Precondition("image ideal is not simple".into())
        })?);
    }
    StructMap::from_table(si1.algebra(), si2.algebra(), table)
}

/// `E^l(A, I) = I` as a pseudolattice.
pub fn functor_el(source: &LocalPair) -> Result<Pseudolattice> {
    if !source.is_prime() {
        return Err(Error::Precondition("E^l needs a prime LBA".into()));
    }
    let p = Pseudolattice::from_ideal(source.algebra, &source.ideal)?;
    if !p.is_gbpl().gbpl {
        return Err(Error::Structure("ideal of a prime LBA is not a GBPL".into()));
    }
    Ok(p)
}

/// `E^l(φ) = φ|I` as a table of element indices.
pub fn functor_el_map(src: &Pseudolattice, tgt: &Pseudolattice, phi: &StructMap) -> Result<Vec<usize>> {
    (0..src.len())
        .map(|i| {
            let a = src.elem(i).expect("built from elements");
            tgt.index_of(phi.apply(a))
                .ok_or_else(|| Error::Precondition(format!("φ({a}) leaves the target ideal")))
        })
        .collect()
}

/// `E^g(P) = (B_{Si(P)}(e_P(P)), e_P(P))`.
#[derive(Clone, Debug)]
pub struct EgImage {
    pub embedding: Embedding,
    /// `B_{Si(P)}(e_P(P))` as a subalgebra of `Si(P)`.
    pub coords: ConcreteBa<Elem>,
    pub pair: LocalPair,
    pub verified: bool,
}

pub fn functor_eg(p: &Pseudolattice) -> Result<EgImage> {
    let embedding = embed_e(p)?;
    let si = embedding.si.algebra();
    let sub = bounded_subalgebra(si, &embedding.image())?;
    let coords = ConcreteBa::new(sub.iter().copied().collect::<Vec<_>>(), |x, y| si.leq(*x, *y), |x, y| {
        si.join(*x, *y)
    })?;
    let ideal: ElemSet = embedding
        .table
        .iter()
        .map(|x| coords.encode(x).expect("e_P(P) lies in B"))
        .collect();
    let pair = LocalPair::new(coords.algebra(), ideal)?;
    let verified = embedding.verified() && pair.is_prime();
    Ok(EgImage {
        embedding,
        coords,
        pair,
        verified,
    })
}

/// `E^g(ψ)`: the extension of `↓a ↦ ↓ψ(a)` to the bounded subalgebras.
pub fn functor_eg_map(src: &EgImage, tgt: &EgImage, psi: &[usize]) -> Result<StructMap> {
    let b1 = src.pair.algebra;
    let b2 = tgt.pair.algebra;
    let on_ideal = |x: Elem| -> Option<Elem> {
        let e = src.coords.decode(x);
        let i = src.embedding.table.iter().position(|t| t == e)?;
        let y = tgt.embedding.table[*psi.get(i)?];
        tgt.coords.encode(&y)
    };
    let mut table = Vec::with_capacity(b1.size());
    for x in b1.elements() {
        let y = match on_ideal(x) {
            Some(y) => y,
            None => b2.complement(on_ideal(b1.complement(x)).ok_or_else(|| {
                Error::Precondition(format!("{x} is neither in the ideal nor a complement of it"))
            })?),
        };
        table.push(y);
    }
    StructMap::from_table(b1, b2, table)
}

/// `e_{(A,I)}: A → B_{Si(I)}(e_I(I))`, with `a ↦ ↓a` on `I` and
/// `a* ↦ (↓a)*`, in the coordinates of [`functor_ep`].
#[derive(Clone, Debug)]
pub struct PairUnit {
    pub map: StructMap,
    pub check: IsoCheck,
    /// `e_{(A,I)}(I) = e_I(I)`.
    pub ideal_onto: bool,
}

pub fn unit_e(source: &LocalPair, ep: &EpImage) -> Result<PairUnit> {
    let a = source.algebra;
    let si = ep.pair.algebra;
    let l = &ep.lattice;
    let e_of = |x: Elem| l.index_of(x).map(|i| ep.embedding.table[i]);
    let map = StructMap::from_fn(a, si, |x| match e_of(x) {
        Some(y) => y,
        None => si.complement(e_of(a.complement(x)).expect("prime pair")),
    })?;
    let check = IsoCheck::of(&map);
    let image: ElemSet = source.ideal.iter().map(|&x| map.apply(x)).collect();
    Ok(PairUnit {
        ideal_onto: image == ep.pair.ideal,
        map,
        check,
    })
}

/// `Σ_{(B,I)}` and the naturality square for the composite `E^p ∘ E^z`.
#[derive(Clone, Debug)]
pub struct PairCounit {
    pub sigma: Sigma,
    pub inverse: Option<StructMap>,
}

pub fn counit_sigma(source: &LocalPair) -> Result<PairCounit> {
    let sigma = sigma_zlba(source.algebra, &source.ideal)?;
    let inverse = sigma.map.inverse();
    Ok(PairCounit { sigma, inverse })
}

/// Naturality of `e` for `φ: (A₁, I₁) → (A₂, I₂)`:
/// `e_{(A₂,I₂)} ∘ φ = E^z(E^p(φ)) ∘ e_{(A₁,I₁)}`. Returns the first element
/// where the square fails.
pub fn unit_naturality(
    s1: &LocalPair,
    s2: &LocalPair,
    phi: &StructMap,
) -> Result<Verdict<Elem>> {
    let (ep1, ep2) = (functor_ep(s1)?, functor_ep(s2)?);
    let (u1, u2) = (unit_e(s1, &ep1)?, unit_e(s2, &ep2)?);
    let (ez1, ez2) = (functor_ez(&ep1.pair)?, functor_ez(&ep2.pair)?);
    let phi_p = functor_ep_map(&ep1, &ep2, phi)?;
    let phi_zp = functor_ez_map(&ez1, &ez2, &phi_p)?;
    Ok(Verdict::from_witness(s1.algebra.elements().find(|&x| {
        let left = ez2.coords.encode(&u2.map.apply(phi.apply(x)));
        let right = phi_zp.apply(ez1.coords.encode(&u1.map.apply(x)).expect("unit lands in B"));
        left != Some(right)
    })))
}

/// Naturality of `Σ` for `φ: (B₁, I₁) → (B₂, I₂)`:
/// `Σ₂ ∘ E^p(E^z(φ)) = φ ∘ Σ₁`, witness in `Si(I₁)` coordinates.
pub fn counit_naturality(
    s1: &LocalPair,
    s2: &LocalPair,
    phi: &StructMap,
) -> Result<Verdict<Elem>> {
    let (ez1, ez2) = (functor_ez(s1)?, functor_ez(s2)?);
    let phi_z = functor_ez_map(&ez1, &ez2, phi)?;
    let (ep1, ep2) = (functor_ep(&ez1.pair)?, functor_ep(&ez2.pair)?);
    let phi_pz = functor_ep_map(&ep1, &ep2, &phi_z)?;
    // Σ for the composite, read back in B coordinates.
    let sigma = |ez: &EzImage, ep: &EpImage, j: Elem| -> Elem {
        let alg = ez.pair.algebra;
        let joined = alg.join_all(
            members(ep.embedding.si.decode(j)).map(|i| ep.lattice.elem(i).expect("built from elements")),
        );
        *ez.coords.decode(joined)
    };
    Ok(Verdict::from_witness(ep1.pair.algebra.elements().find(|&j| {
        sigma(&ez2, &ep2, phi_pz.apply(j)) != phi.apply(sigma(&ez1, &ep1, j))
    })))
}

/// `E^l ∘ E^g ≅ id`: `e_P` is a pseudolattice isomorphism onto `e_P(P)`.
pub fn el_eg_roundtrip(p: &Pseudolattice) -> Result<bool> {
    let eg = functor_eg(p)?;
    let back = functor_el(&eg.pair)?;
    Ok(eg.embedding.verified() && back.len() == p.len())
}

/// `E^g ∘ E^l ≅ id` on a prime LBA: the unit `e_{(A,I)}` is an iso onto
/// `E^g(I)`.
pub fn eg_el_roundtrip(source: &LocalPair) -> Result<bool> {
    let p = functor_el(source)?;
    let eg = functor_eg(&p)?;
    let ep = functor_ep(source)?;
    let u = unit_e(source, &ep)?;
    Ok(u.check.holds() && u.ideal_onto && eg.pair.algebra.size() == source.algebra.size())
}

/// Composition of two maps as local-pair morphisms, with the flags of the
/// composite.
pub fn compose_flags(a: &LocalPair, c: &LocalPair, f: &StructMap, g: &StructMap) -> Result<MorphismFlags> {
    morphism_flags(a, c, &g.after(f)?)
}

/// `ψ` pairs for an atom relabelling of full pairs, `x ↦ perm(x)`.
pub fn relabel_pairs(alg: Powerset, perm: &[usize]) -> Vec<(Elem, Elem)> {
    alg.elements()
        .map(|x| (x, Elem::from_atoms(x.atoms().map(|i| perm[i]))))
        .collect()
}

/// Contact algebra of a local pair, re-exported for convenience.
pub fn contact_of(pair: &LocalPair) -> Result<contact::ContactTriple> {
    rho_s(pair.algebra, &pair.ideal)
}

/// The pair `(FinCofin(ℕ), I)` handled symbolically.
pub mod fc {
    use super::*;
    use crate::ba::fincofin::{sample_elements, FcElem, FcIdeal, IndexSet};
    use crate::ideals::fin;

    pub fn classify(ideal: &FcIdeal) -> PairClass {
        let lba = ideal.density().map(|w| w.to_string());
        if !lba.holds() {
            let f = not_lba(&lba);
            return PairClass {
                lba,
                plba: f.clone(),
                zlba: f.clone(),
                dzlc: f,
            };
        }
        let plba = if !ideal.is_proper() {
            Verdict::Holds
        } else {
            ideal.primality().map(|w| w.to_string())
        };
        // Dense ideals of FinCofin(ℕ) contain every finite set, so Fin(evens)
        // is always a simple ideal of I and has no join.
        let zlba = Verdict::Fails(format!("Fin({:?})", IndexSet::evens()));
        // For ρ_s, a ≪ b means a ≤ b and c = a lies between.
        PairClass {
            lba,
            plba,
            zlba,
            dzlc: Verdict::Holds,
        }
    }

    /// The simple ideal `Fin(evens)` of `Fin(ℕ)` and the fact that it has
    /// no join in FinCofin(ℕ).
    pub fn zlba_witness() -> (IndexSet, Option<FcElem>) {
        let s = IndexSet::evens();
        let j = fin::join_in_fincofin(&s);
        (s, j)
    }

    pub fn prime_dense_criterion(ideal: &FcIdeal) -> Result<PrimeDenseReport> {
        if let Verdict::Fails(w) = ideal.primality() {
            return Err(Error::Precondition(format!("not a prime ideal, witness {w}")));
        }
        Ok(PrimeDenseReport {
            dense: ideal.density().holds(),
            non_principal: ideal.principal_generator().is_none(),
            degenerate: false,
        })
    }

    /// Extension of `ψ: Fin(ℕ) → Fin(ℕ)` to FinCofin(ℕ): `a* ↦ ψ(a)*`.
    pub fn extend(psi: impl Fn(&FcElem) -> FcElem) -> impl Fn(&FcElem) -> FcElem {
        move |a| {
            if a.is_finite() {
                psi(a)
            } else {
                psi(&a.complement()).complement()
            }
        }
    }

    /// Checks `extend(psi)` is a Boolean homomorphism on all elements built
    /// from indices below `window`; witness is a failing pair.
    pub fn check_extension(
        phi: &dyn Fn(&FcElem) -> FcElem,
        window: u64,
    ) -> Verdict<(FcElem, FcElem)> {
        let els = sample_elements(window);
        for a in &els {
            if phi(&a.complement()) != phi(a).complement() {
                return Verdict::Fails((a.clone(), a.complement()));
            }
            for b in &els {
                if phi(&a.meet(b)) != phi(a).meet(&phi(b)) || phi(&a.join(b)) != phi(a).join(&phi(b)) {
                    return Verdict::Fails((a.clone(), b.clone()));
                }
            }
        }
        Verdict::Holds
    }

    /// `e_{(A,I)}(a) = Fin(a)`: finite `a` goes to `↓a` and cofinite `a` to
    /// `¬↓(a*)`. Both are `Fin` of the index set of `a`.
    pub fn unit_e(a: &FcElem) -> IndexSet {
        if a.is_finite() {
            fin::embed(a).expect("finite")
        } else {
            fin::pseudocomplement(&fin::embed(&a.complement()).expect("finite"))
        }
    }

    /// `e_{(A,I)}` is a Boolean isomorphism onto the representable simple
    /// ideals `Fin(S)`, `S` finite or cofinite, checked on a window.
    pub fn check_unit(window: u64) -> Verdict<FcElem> {
        let els = sample_elements(window);
        for a in &els {
            let e = unit_e(a);
            let back = fin::representable(&e).ok();
            let ok = back.as_ref() == Some(a)
                && fin::is_simple(&e)
                && unit_e(&a.complement()) == fin::pseudocomplement(&e)
                && els.iter().all(|b| {
                    unit_e(&a.meet(b)) == fin::ideal_meet(&e, &unit_e(b))
                        && unit_e(&a.join(b)) == fin::ideal_join(&e, &unit_e(b))
                });
            if !ok {
                return Verdict::Fails(a.clone());
            }
        }
        Verdict::Holds
    }

    /// `E^l(FinCofin(ℕ), Fin(ℕ)) = Fin(ℕ)`, a GBPL: relative complements
    /// and simple principal ideals, on a window.
    pub fn el_is_gbpl(window: u64) -> bool {
        fin::relative_complements(window).holds() && fin::principal_ideals_simple(window).holds()
    }

    /// (LBA) and (PLBA) for `φ: (A, A) → (FinCofin(ℕ), J)` with `A` finite.
    /// Witnesses are FinCofin elements.
    pub fn morphism_flags_into(
        source: &LocalPair,
        phi: &dyn Fn(Elem) -> FcElem,
        target: &FcIdeal,
    ) -> (Verdict<FcElem>, Verdict<Elem>) {
        let top = phi(source.algebra.join_all(source.ideal.iter().copied()));
        let lba = match target {
            FcIdeal::FinOf(s) => Verdict::from_witness(
                IndexSet::of_elem(&top)
                    .complement()
                    .intersection(s)
                    .complement()
                    .first_missing()
                    .map(FcElem::singleton),
            ),
            FcIdeal::Principal(g) => {
                if g.leq(&top) {
                    Verdict::Holds
                } else {
                    Verdict::Fails(g.clone())
                }
            }
        };
        let plba = Verdict::from_witness(
            source
                .ideal
                .iter()
                .copied()
                .find(|&a| !target.contains(&phi(a))),
        );
        (lba, plba)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ba::fincofin::{FcElem, FcIdeal, IndexSet};

    fn p(n: usize) -> Powerset {
        Powerset::new(n).unwrap()
    }

    #[test]
    fn full_pairs_classify() {
        for n in 0..=3 {
            let c = classify_pair(p(n), &p(n).all()).unwrap();
            assert!(c.lba.holds() && c.plba.holds() && c.zlba.holds() && c.dzlc.holds());
        }
    }

    #[test]
    fn non_dense_ideal() {
        let a = p(2);
        let c = classify_pair(a, &a.down(Elem(0b01))).unwrap();
        assert_eq!(c.lba, Verdict::Fails("{1}".into()));
        assert!(!c.plba.holds());
        assert!(LocalPair::new(a, a.down(Elem(0b01))).is_err());
    }

    #[test]
    fn fincofin_pair() {
        let c = fc::classify(&FcIdeal::fin());
        assert!(c.lba.holds() && c.plba.holds() && c.dzlc.holds());
        assert!(c.zlba.witness().unwrap().contains("Fin("));
        let (s, j) = fc::zlba_witness();
        assert_eq!(s, IndexSet::evens());
        assert_eq!(j, None);
        let r = fc::prime_dense_criterion(&FcIdeal::fin()).unwrap();
        assert!(r.dense && r.non_principal);
    }

    #[test]
    fn prime_dense_examples() {
        let a = p(3);
        let r = prime_dense_criterion(a, &a.down(Elem(0b011))).unwrap();
        assert!(!r.dense && !r.non_principal && r.equivalent());
        let r = prime_dense_criterion(p(0), &p(0).all()).unwrap();
        assert!(r.degenerate);
        assert!(matches!(
            prime_dense_criterion(a, &a.down(Elem(0b001))),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn extension_identity_and_relabel() {
        let a = p(2);
        let full = LocalPair::full(a);
        let id: Vec<_> = a.elements().map(|x| (x, x)).collect();
        let e = extend_poset_iso(&full, &full, &id).unwrap();
        assert_eq!(e.map, StructMap::identity(a));
        assert!(e.embedding && e.image_is_bounded_subalgebra);
        assert_eq!(e.extensions_found, Some(1));

        let b = p(3);
        let perm = [2, 0, 1];
        let e = extend_poset_iso(&LocalPair::full(b), &LocalPair::full(b), &relabel_pairs(b, &perm)).unwrap();
        assert_eq!(e.map.apply(Elem(0b001)), Elem(0b100));
        assert_eq!(e.extensions_found, Some(1));

        let bad = vec![(Elem(0), Elem(0)), (Elem(1), Elem(1)), (Elem(2), Elem(3)), (Elem(3), Elem(2))];
        assert!(matches!(extend_poset_iso(&full, &full, &bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn fc_identity_extension() {
        let phi = fc::extend(|a: &FcElem| a.clone());
        assert!(fc::check_extension(&phi, 5).holds());
        let c = FcElem::cofinite_of([1]);
        assert_eq!(phi(&c), c);
    }

    #[test]
    fn functors_on_small_pairs() {
        let a = LocalPair::full(p(2));
        let ez = functor_ez(&a).unwrap();
        assert_eq!(ez.pair, a);
        assert!(ez.verified);
        let ep = functor_ep(&a).unwrap();
        assert!(ep.verified && ep.representable_is_whole);
        assert_eq!(ep.pair.algebra.atom_count(), 2);
        let u = unit_e(&a, &ep).unwrap();
        assert!(u.check.holds() && u.ideal_onto);
        let el = functor_el(&a).unwrap();
        assert!(el.is_gbpl().gbpl);
        assert!(el_eg_roundtrip(&el).unwrap());
        assert!(eg_el_roundtrip(&a).unwrap());
        let c = counit_sigma(&a).unwrap();
        assert!(c.sigma.check.holds() && c.inverse.is_some());
    }

    #[test]
    fn fc_functors() {
        assert!(fc::check_unit(5).holds());
        assert!(fc::el_is_gbpl(4));
        assert_eq!(fc::unit_e(&FcElem::cofinite_of([0])), IndexSet::cofinite_of([0]));
    }

    #[test]
    fn non_plba_morphism() {
        let src = LocalPair::full(p(1));
        let phi = |x: Elem| if x.is_zero() { FcElem::zero() } else { FcElem::one() };
        let (lba, plba) = fc::morphism_flags_into(&src, &phi, &FcIdeal::fin());
        assert!(lba.holds());
        assert_eq!(plba, Verdict::Fails(Elem(1)));
    }

    #[test]
    fn naturality_on_all_small_homs() {
        for m in 0..=2 {
            for n in 0..=2 {
                let (s1, s2) = (LocalPair::full(p(m)), LocalPair::full(p(n)));
                for h in all_homs(p(m), p(n)) {
                    let f = morphism_flags(&s1, &s2, &h).unwrap();
                    assert!(f.homomorphism.holds() && f.lba.holds() && f.plba.holds());
                    assert!(unit_naturality(&s1, &s2, &h).unwrap().holds());
                    assert!(counit_naturality(&s1, &s2, &h).unwrap().holds());
                }
            }
        }
    }
}
