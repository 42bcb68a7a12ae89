//! Ideals of distributive {0}-pseudolattices: pseudocomplements, simple
//! ideals, relative complements, and the maps `a ↦ ↓a` and `J ↦ ⋁J`.
//!
//! Finite pseudolattices are explicit order tables with at most 64
//! elements, so an ideal is a `u64` mask over element indices. The
//! pseudolattice `Fin(ℕ)` is handled through its index families.

use serde::Serialize;

use crate::ba::fincofin::{sample_elements, FcElem, IndexSet};
use crate::ba::{hom_check, Elem, ElemSet, HomViolation, Powerset, StructMap};
use crate::error::{Error, Result};
use crate::topo::{FinSpace, PointSet};
use crate::verdict::Verdict;

pub const MAX_ELEMENTS: usize = 64;

/// An ideal as a mask over element indices.
pub type Ideal = u64;

/// A finite distributive lattice with bottom, given by its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pseudolattice {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    bottom: usize,
    /// When built from a powerset or one of its ideals, the element each
    /// index stands for.
    elems: Option<Vec<Elem>>,
}

impl Pseudolattice {
    /// Build from an order relation, computing meets and joins. Fails if
    /// some pair lacks a meet or join, or if the lattice is not
    /// distributive.
    pub fn from_order(names: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Structure("a pseudolattice needs a bottom element".into()));
        }
        if n > MAX_ELEMENTS {
            return Err(Error::Size {
                what: "pseudolattice elements",
                got: n,
                cap: MAX_ELEMENTS,
            });
        }
        for a in 0..n {
            if !leq[a][a] {
                return Err(Error::Structure(format!("order is not reflexive at {}", names[a])));
            }
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::Structure(format!(
                        "{} and {} are distinct but equivalent",
                        names[a], names[b]
                    )));
                }
                for c in 0..n {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return Err(Error::Structure("order is not transitive".into()));
                    }
                }
            }
        }
        let bound = |lower: bool, a: usize, b: usize| -> Option<usize> {
            let ok = |x: usize| {
                if lower {
                    leq[x][a] && leq[x][b]
                } else {
                    leq[a][x] && leq[b][x]
                }
            };
            (0..n).filter(|&x| ok(x)).find(|&x| {
                (0..n).filter(|&y| ok(y)).all(|y| if lower { leq[y][x] } else { leq[x][y] })
            })
        };
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                meet[a][b] = bound(true, a, b).ok_or_else(|| {
                    Error::Structure(format!("{} and {} have no meet", names[a], names[b]))
                })?;
                join[a][b] = bound(false, a, b).ok_or_else(|| {
                    Error::Structure(format!("{} and {} have no join", names[a], names[b]))
                })?;
            }
        }
        let bottom = (0..n)
            .find(|&x| (0..n).all(|y| leq[x][y]))
            .ok_or_else(|| Error::Structure("no bottom element".into()))?;
        let p = Pseudolattice {
            names,
            leq,
            meet,
            join,
            bottom,
            elems: None,
        };
        if let Some((a, b, c)) = p.distributivity_failure() {
            return Err(Error::Structure(format!(
                "not distributive at {}, {}, {}",
                p.names[a], p.names[b], p.names[c]
            )));
        }
        Ok(p)
    }

    fn from_elems(elems: Vec<Elem>) -> Result<Self> {
        let names = elems.iter().map(|e| e.to_string()).collect();
        let leq = elems
            .iter()
            .map(|a| elems.iter().map(|b| a.0 & !b.0 == 0).collect())
            .collect();
        let mut p = Self::from_order(names, leq)?;
        p.elems = Some(elems);
        Ok(p)
    }

    pub fn from_powerset(alg: Powerset) -> Result<Self> {
        Self::from_elems(alg.elements().collect())
    }

    /// The ideal `I` of `alg` as a pseudolattice in its own right.
    pub fn from_ideal(alg: Powerset, ideal: &ElemSet) -> Result<Self> {
        alg.require_ideal(ideal)?;
        Self::from_elems(ideal.iter().copied().collect())
    }

    /// `0 < 1 < … < k-1`.
    pub fn chain(k: usize) -> Result<Self> {
        let names = (0..k).map(|i| format!("c{i}")).collect();
        let leq = (0..k).map(|a| (0..k).map(|b| a <= b).collect()).collect();
        Self::from_order(names, leq)
    }

    /// The three-element chain `0 < m < 1`.
    pub fn chain3() -> Self {
        let names = vec!["0".into(), "m".into(), "1".into()];
        let leq = (0..3).map(|a| (0..3).map(|b| a <= b).collect()).collect();
        Self::from_order(names, leq).expect("chains are distributive")
    }

    /// Coordinatewise product.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let (n, m) = (self.len(), other.len());
        let names = (0..n * m)
            .map(|k| format!("({},{})", self.names[k / m], other.names[k % m]))
            .collect();
        let leq = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| self.leq[x / m][y / m] && other.leq[x % m][y % m])
                    .collect()
            })
            .collect();
        Self::from_order(names, leq)
    }

    fn distributivity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.meet[a][self.join[b][c]];
                    let rhs = self.join[self.meet[a][b]][self.meet[a][c]];
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        (0..self.len()).fold(self.bottom, |m, a| self.join[m][a])
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    /// The powerset element an index stands for, if the pseudolattice came
    /// from a powerset.
    pub fn elem(&self, a: usize) -> Option<Elem> {
        self.elems.as_ref().map(|e| e[a])
    }

    pub fn index_of(&self, e: Elem) -> Option<usize> {
        self.elems.as_ref()?.iter().position(|&x| x == e)
    }

    pub fn all(&self) -> Ideal {
        mask_of(0..self.len())
    }

    pub fn down(&self, a: usize) -> Ideal {
        mask_of((0..self.len()).filter(|&x| self.leq[x][a]))
    }

    pub fn is_ideal(&self, j: Ideal) -> bool {
        let m: Vec<usize> = members(j).collect();
        j >> self.bottom & 1 == 1
            && m.iter().all(|&a| self.down(a) & !j == 0)
            && m.iter().all(|&a| m.iter().all(|&b| j >> self.join[a][b] & 1 == 1))
    }

    pub fn require_ideal(&self, j: Ideal) -> Result<()> {
        if j & !self.all() != 0 {
            return Err(Error::Membership("ideal mentions a non-element".into()));
        }
        if !self.is_ideal(j) {
            return Err(Error::Structure(format!("{} is not an ideal", self.show(j))));
        }
        Ok(())
    }

    /// All ideals. In a finite lattice each is `↓a` for its largest member;
    /// listed in element order of that generator.
    pub fn ideals(&self) -> Vec<Ideal> {
        (0..self.len()).map(|a| self.down(a)).collect()
    }

    /// All ideals by testing every subset, as an independent oracle.
    pub fn ideals_brute(&self) -> Vec<Ideal> {
        assert!(self.len() <= 20, "brute-force ideal enumeration limited to 20 elements");
        (0u64..1 << self.len()).filter(|&j| self.is_ideal(j)).collect()
    }

    /// Join in the ideal lattice: `{x | x ≤ a ∨ b, a ∈ J, b ∈ K}`.
    pub fn ideal_join(&self, j: Ideal, k: Ideal) -> Ideal {
        let mut out = 0;
        for a in members(j) {
            for b in members(k) {
                out |= self.down(self.join[a][b]);
            }
        }
        out
    }

    /// `¬J = {a | a ∧ b = 0 for all b ∈ J}`.
    pub fn pseudocomplement(&self, j: Ideal) -> Result<Ideal> {
        self.require_ideal(j)?;
        Ok(mask_of(
            (0..self.len()).filter(|&a| members(j).all(|b| self.meet[a][b] == self.bottom)),
        ))
    }

    /// `J ∨ ¬J` is everything.
    pub fn is_simple(&self, j: Ideal) -> Result<bool> {
        let neg = self.pseudocomplement(j)?;
        Ok(self.ideal_join(j, neg) == self.all())
    }

    /// The simple ideals with their Boolean structure (order by inclusion,
    /// join in the ideal lattice).
    pub fn simple_ideals(&self) -> SimpleIdeals {
        let members: Vec<Ideal> = self
            .ideals()
            .into_iter()
            .filter(|&j| self.is_simple(j).expect("enumerated ideals are ideals"))
            .collect();
        let ba = crate::ba::ConcreteBa::new(
            members.clone(),
            |a, b| a & !b == 0,
            |a, b| self.ideal_join(*a, *b),
        )
        .expect("simple ideals form a Boolean algebra");
        SimpleIdeals { members, ba }
    }

    /// Relative complements in every interval; the witness `(a, b, c)` has
    /// `b ≤ a ≤ c` and no `x` with `a ∧ x = b`, `a ∨ x = c`.
    pub fn relative_complements(&self) -> Verdict<(usize, usize, usize)> {
        let n = self.len();
        for c in 0..n {
            for b in (0..n).filter(|&b| self.leq[b][c]) {
                for a in (0..n).filter(|&a| self.leq[b][a] && self.leq[a][c]) {
                    if !(0..n).any(|x| self.meet[a][x] == b && self.join[a][x] == c) {
                        return Verdict::Fails((a, b, c));
                    }
                }
            }
        }
        Verdict::Holds
    }

    /// Every principal ideal is simple; witness is a generator that fails.
    pub fn principal_ideals_simple(&self) -> Verdict<usize> {
        Verdict::from_witness(
            (0..self.len()).find(|&a| !self.is_simple(self.down(a)).expect("principal ideal")),
        )
    }

    pub fn is_gbpl(&self) -> GbplReport {
        let by_intervals = self.relative_complements();
        let by_principal_ideals = self.principal_ideals_simple();
        let agree = by_intervals.holds() == by_principal_ideals.holds();
        GbplReport {
            gbpl: by_intervals.holds() && agree,
            by_intervals: by_intervals.map(|(a, b, c)| {
                [self.names[a].clone(), self.names[b].clone(), self.names[c].clone()]
            }),
            by_principal_ideals: by_principal_ideals.map(|a| self.names[a].clone()),
            agree,
        }
    }

    pub fn show(&self, j: Ideal) -> String {
        let names: Vec<&str> = members(j).map(|a| self.names[a].as_str()).collect();
        format!("{{{}}}", names.join(", "))
    }
}

pub fn members(j: Ideal) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| j >> i & 1 == 1)
}

fn mask_of<I: IntoIterator<Item = usize>>(it: I) -> Ideal {
    it.into_iter().fold(0, |m, i| m | 1 << i)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GbplReport {
    pub gbpl: bool,
    pub by_intervals: Verdict<[String; 3]>,
    pub by_principal_ideals: Verdict<String>,
    /// The two characterizations gave the same answer.
    pub agree: bool,
}

/// `Si(P)`: the simple ideals as a Boolean algebra in canonical coordinates.
#[derive(Clone, Debug)]
pub struct SimpleIdeals {
    pub members: Vec<Ideal>,
    pub ba: crate::ba::ConcreteBa<Ideal>,
}

impl SimpleIdeals {
    pub fn algebra(&self) -> Powerset {
        self.ba.algebra()
    }

    pub fn encode(&self, j: Ideal) -> Option<Elem> {
        self.ba.encode(&j)
    }

    pub fn decode(&self, e: Elem) -> Ideal {
        *self.ba.decode(e)
    }
}

/// `e_P(a) = ↓a` as a map into `Si(P)`, with its verified properties.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub si: SimpleIdeals,
    /// `table[a]` is the canonical element of `Si(P)` for `↓a`.
    pub table: Vec<Elem>,
    pub injective: bool,
    pub preserves_bottom: bool,
    /// Meets and joins, with the first failing pair of indices.
    pub preserves_operations: Verdict<(usize, usize)>,
    /// Image is an ideal of `Si(P)`.
    pub image_is_ideal: bool,
    /// Image is dense in `Si(P)`; witness in `Si(P)` coordinates.
    pub image_dense: Verdict<Elem>,
}

impl Embedding {
    pub fn image(&self) -> ElemSet {
        self.table.iter().copied().collect()
    }

    /// `(Si(P), e_P(P))` is a local Boolean algebra.
    pub fn is_lba(&self) -> bool {
        self.image_is_ideal && self.image_dense.holds()
    }

    pub fn verified(&self) -> bool {
        self.injective && self.preserves_bottom && self.preserves_operations.holds() && self.is_lba()
    }
}

pub fn embed_e(p: &Pseudolattice) -> Result<Embedding> {
    let report = p.is_gbpl();
    if !report.gbpl {
        return Err(Error::Precondition(format!(
            "not a generalized Boolean pseudolattice: {:?}",
            report.by_intervals
        )));
    }
    let si = p.simple_ideals();
    let table: Vec<Elem> = (0..p.len())
        .map(|a| si.encode(p.down(a)).expect("principal ideals are simple"))
        .collect();
    let alg = si.algebra();
    let injective = {
        let s: ElemSet = table.iter().copied().collect();
        s.len() == table.len()
    };
    let preserves_bottom = table[p.bottom()] == alg.zero();
    let mut bad = None;
    'outer: for a in 0..p.len() {
        for b in 0..p.len() {
            if table[p.meet(a, b)] != alg.meet(table[a], table[b])
                || table[p.join(a, b)] != alg.join(table[a], table[b])
            {
                bad = Some((a, b));
                break 'outer;
            }
        }
    }
    let image: ElemSet = table.iter().copied().collect();
    Ok(Embedding {
        image_is_ideal: alg.is_ideal(&image),
        image_dense: alg.is_dense_subset(&image)?,
        si,
        table,
        injective,
        preserves_bottom,
        preserves_operations: Verdict::from_witness(bad),
    })
}

/// `B_A(I) = I ∪ {a* | a ∈ I}`; `I` may be all of `A`.
pub fn bounded_subalgebra(alg: Powerset, ideal: &ElemSet) -> Result<ElemSet> {
    alg.require_ideal(ideal)?;
    Ok(ideal
        .iter()
        .flat_map(|&a| [a, alg.complement(a)])
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BOf {
    pub members: ElemSet,
    pub is_subalgebra: bool,
    /// `I` is a prime ideal of `B_A(I)`.
    pub ideal_prime: bool,
}

/// `B_A(I)` for a proper ideal, with its checks.
pub fn b_of(alg: Powerset, ideal: &ElemSet) -> Result<BOf> {
    alg.require_ideal(ideal)?;
    if ideal.contains(&alg.one()) {
        return Err(Error::Properness("B_A(I) needs a proper ideal".into()));
    }
    let members = bounded_subalgebra(alg, ideal)?;
    let is_subalgebra = members.contains(&alg.zero())
        && members.contains(&alg.one())
        && members.iter().all(|&a| {
            members.contains(&alg.complement(a))
                && members
                    .iter()
                    .all(|&b| members.contains(&alg.meet(a, b)) && members.contains(&alg.join(a, b)))
        });
    let ideal_prime = !ideal.contains(&alg.one())
        && members
            .iter()
            .all(|&a| ideal.contains(&a) || ideal.contains(&alg.complement(a)));
    Ok(BOf {
        members,
        is_subalgebra,
        ideal_prime,
    })
}

/// Result of checking that a map between finite Boolean algebras is an
/// isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoCheck {
    pub bijective: bool,
    pub homomorphism: Verdict<HomViolation>,
}

impl IsoCheck {
    pub fn of(map: &StructMap) -> Self {
        IsoCheck {
            bijective: map.is_injective() && map.is_surjective(),
            homomorphism: hom_check(map),
        }
    }

    pub fn holds(&self) -> bool {
        self.bijective && self.homomorphism.holds()
    }
}

/// `Σ_{(B,I)}: Si(I) → B`, `J ↦ ⋁_B J`, as a table in `Si(I)` coordinates.
#[derive(Clone, Debug)]
pub struct Sigma {
    pub si: SimpleIdeals,
    pub map: StructMap,
    pub check: IsoCheck,
}

pub fn sigma_zlba(alg: Powerset, ideal: &ElemSet) -> Result<Sigma> {
    alg.require_ideal(ideal)?;
    if let Verdict::Fails(w) = alg.is_dense_subset(ideal)? {
        return Err(Error::Precondition(format!(
            "not a local Boolean algebra: ideal is not dense, witness {w}"
        )));
    }
    let p = Pseudolattice::from_ideal(alg, ideal)?;
    let si = p.simple_ideals();
    let map = StructMap::from_fn(si.algebra(), alg, |e| {
        alg.join_all(members(si.decode(e)).map(|i| p.elem(i).expect("built from elements")))
    })?;
    let check = IsoCheck::of(&map);
    Ok(Sigma { si, map, check })
}

/// `Si(CK(X)) → CO(X)`, `J ↦ ⋁_{RC(X)} J`.
#[derive(Clone, Debug)]
pub struct StoneSigma {
    pub si: SimpleIdeals,
    /// Canonical coordinates of `CO(X)`.
    pub co: crate::ba::ConcreteBa<PointSet>,
    pub map: StructMap,
    pub check: IsoCheck,
}

pub fn sigma_stone(x: &FinSpace) -> Result<StoneSigma> {
    let co = x.co_algebra();
    let ck: Vec<PointSet> = x.clopen_compact();
    let names = ck.iter().map(|s| format!("{:?}", crate::topo::point_list(*s))).collect();
    let leq = ck
        .iter()
        .map(|a| ck.iter().map(|b| a & !b == 0).collect())
        .collect();
    let p = Pseudolattice::from_order(names, leq)?;
    let si = p.simple_ideals();
    let rc = x.rc_algebra();
    let map = StructMap::from_fn(si.algebra(), co.algebra(), |e| {
        // join in RC(X) of the members, computed in RC coordinates
        let rc_alg = rc.algebra();
        let joined = rc_alg.join_all(
            members(si.decode(e)).map(|i| rc.encode(&ck[i]).expect("clopen sets are regular closed")),
        );
        co.encode(rc.decode(joined)).expect("joins of clopen sets are clopen")
    })?;
    let check = IsoCheck::of(&map);
    Ok(StoneSigma { si, co, map, check })
}

/// Operations on ideals `Fin(S)` of the pseudolattice `Fin(ℕ)`.
pub mod fin {
    use super::*;

    /// `¬Fin(S) = Fin(ℕ \ S)`.
    pub fn pseudocomplement(s: &IndexSet) -> IndexSet {
        s.complement()
    }

    pub fn ideal_join(s: &IndexSet, t: &IndexSet) -> IndexSet {
        s.union(t)
    }

    pub fn ideal_meet(s: &IndexSet, t: &IndexSet) -> IndexSet {
        s.intersection(t)
    }

    /// Every `Fin(S)` is simple: `Fin(S) ∨ Fin(ℕ \ S) = Fin(ℕ)`.
    pub fn is_simple(s: &IndexSet) -> bool {
        ideal_join(s, &pseudocomplement(s)).is_all()
    }

    /// `Fin(S)` is principal iff `S` is finite, with generator `S`.
    pub fn principal_generator(s: &IndexSet) -> Option<FcElem> {
        s.is_finite().then(|| s.as_elem().expect("finite"))
    }

    /// The FinCofin element with index set `S`, when it exists. Only
    /// finite and cofinite `S` are representable.
    pub fn representable(s: &IndexSet) -> Result<FcElem> {
        s.as_elem().ok_or_else(|| {
            Error::Representability(format!("Fin({s:?}) is neither Fin(finite) nor Fin(cofinite)"))
        })
    }

    /// `⋁ Fin(S)` in FinCofin(ℕ): exists iff `S` is finite or cofinite.
    pub fn join_in_fincofin(s: &IndexSet) -> Option<FcElem> {
        s.as_elem()
    }

    /// `e(a) = ↓a = Fin(a)` for a finite set `a`.
    pub fn embed(a: &FcElem) -> Result<IndexSet> {
        if a.is_cofinite() {
            return Err(Error::Membership(format!("{a} is not a member of Fin(ℕ)")));
        }
        Ok(IndexSet::of_elem(a))
    }

    /// Relative complements in `Fin(ℕ)`: for `b ≤ a ≤ c`, the element
    /// `(c \ a) ∪ b` works. Checked on every triple of finite subsets of
    /// `0..window`.
    pub fn relative_complements(window: u64) -> Verdict<[FcElem; 3]> {
        let fins: Vec<FcElem> = sample_elements(window)
            .into_iter()
            .filter(|e| e.is_finite())
            .collect();
        for c in &fins {
            for b in fins.iter().filter(|b| b.leq(c)) {
                for a in fins.iter().filter(|a| b.leq(a) && a.leq(c)) {
                    let x = c.meet(&a.complement()).join(b);
                    if a.meet(&x) != *b || a.join(&x) != *c {
                        return Verdict::Fails([a.clone(), b.clone(), c.clone()]);
                    }
                }
            }
        }
        Verdict::Holds
    }

    /// Principal ideals `Fin(F)` are simple, checked on finite `F ⊆ 0..window`.
    pub fn principal_ideals_simple(window: u64) -> Verdict<FcElem> {
        Verdict::from_witness(
            sample_elements(window)
                .into_iter()
                .filter(|e| e.is_finite())
                .find(|e| !is_simple(&IndexSet::of_elem(e))),
        )
    }
}
