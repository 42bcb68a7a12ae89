//! Finite topological spaces, their regular closed / regular open / clopen
//! algebras, and the irreducibility taxonomy of continuous maps.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::ba::ConcreteBa;
use crate::error::{Error, Result};
use crate::search::{min_hitting_set, Combinations, SearchCap};
use crate::verdict::Verdict;

/// A set of points as a bit mask.
pub type PointSet = u32;

pub const MAX_POINTS: usize = 16;

fn full(n: usize) -> PointSet {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn bits(s: PointSet) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| s >> i & 1 == 1)
}

pub fn point_list(s: PointSet) -> Vec<usize> {
    bits(s).collect()
}

pub fn point_set<I: IntoIterator<Item = usize>>(it: I) -> PointSet {
    it.into_iter().fold(0, |m, i| m | 1 << i)
}

/// A topology on `{0, …, n-1}` given by its full family of open sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FinSpace {
    points: usize,
    opens: Vec<PointSet>,
}

impl FinSpace {
    /// Validate an open-set family: must contain `∅` and `X` and be closed
    /// under pairwise union and intersection.
    pub fn new<I: IntoIterator<Item = PointSet>>(points: usize, opens: I) -> Result<Self> {
        if points > MAX_POINTS {
            return Err(Error::Size {
                what: "points",
                got: points,
                cap: MAX_POINTS,
            });
        }
        let x = full(points);
        let set: BTreeSet<PointSet> = opens.into_iter().collect();
        if let Some(bad) = set.iter().find(|&&u| u & !x != 0) {
            return Err(Error::Structure(format!(
                "open set {:?} mentions a point outside 0..{points}",
                point_list(*bad)
            )));
        }
        if !set.contains(&0) || !set.contains(&x) {
            return Err(Error::Structure("open sets must include the empty set and X".into()));
        }
        for &u in &set {
            for &v in &set {
                if !set.contains(&(u | v)) || !set.contains(&(u & v)) {
                    return Err(Error::Structure(format!(
                        "open sets {:?} and {:?} are not closed under union and intersection",
                        point_list(u),
                        point_list(v)
                    )));
                }
            }
        }
        Ok(FinSpace {
            points,
            opens: set.into_iter().collect(),
        })
    }

    /// The topology generated by a family of open sets.
    pub fn from_open_subbase<I: IntoIterator<Item = PointSet>>(points: usize, sub: I) -> Result<Self> {
        let x = full(points);
        let sub: Vec<PointSet> = sub.into_iter().collect();
        let mut fam: BTreeSet<PointSet> = [0, x].into();
        fam.extend(sub.iter().copied());
        close_under(&mut fam, |a, b| a & b);
        close_under(&mut fam, |a, b| a | b);
        Self::new(points, fam)
    }

    /// The topology whose closed sets are generated by `sub` under finite
    /// unions and arbitrary intersections.
    pub fn from_closed_subbase<I: IntoIterator<Item = PointSet>>(points: usize, sub: I) -> Result<Self> {
        let x = full(points);
        Self::from_open_subbase(points, sub.into_iter().map(|f| x & !f))
    }

    pub fn discrete(n: usize) -> Self {
        Self::new(n, 0..=full(n)).expect("powerset is a topology")
    }

    pub fn indiscrete(n: usize) -> Self {
        Self::new(n, [0, full(n)]).expect("indiscrete topology")
    }

    /// Points `a = 0`, `b = 1`; opens `∅, {a}, X`.
    pub fn sierpinski() -> Self {
        Self::new(2, [0, 0b01, 0b11]).expect("Sierpiński space")
    }

    /// Opens are unions of blocks of the partition given by `block[i]`.
    pub fn from_partition(block: &[usize]) -> Self {
        let n = block.len();
        let ids: BTreeSet<usize> = block.iter().copied().collect();
        let blocks: Vec<PointSet> = ids
            .iter()
            .map(|b| point_set((0..n).filter(|&i| block[i] == *b)))
            .collect();
        Self::from_open_subbase(n, blocks).expect("partition topology")
    }

    /// Opens are the up-sets of a preorder given as `leq[x]` = points above `x`.
    pub fn from_preorder(points: usize, above: &[PointSet]) -> Result<Self> {
        let opens = (0..=full(points)).filter(|&u| bits(u).all(|x| above[x] & !u == 0));
        Self::new(points, opens)
    }

    pub fn point_count(&self) -> usize {
        self.points
    }

    pub fn full(&self) -> PointSet {
        full(self.points)
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn closed_sets(&self) -> Vec<PointSet> {
        let mut v: Vec<PointSet> = self.opens.iter().map(|u| self.full() & !u).collect();
        v.sort_unstable();
        v
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.is_open(self.full() & !s)
    }

    pub fn interior(&self, s: PointSet) -> PointSet {
        self.opens.iter().filter(|&&u| u & !s == 0).fold(0, |m, u| m | u)
    }

    pub fn closure(&self, s: PointSet) -> PointSet {
        self.full() & !self.interior(self.full() & !s)
    }

    /// The smallest open set containing `x`.
    pub fn min_neighbourhood(&self, x: usize) -> PointSet {
        self.opens
            .iter()
            .filter(|&&u| u >> x & 1 == 1)
            .fold(self.full(), |m, u| m & u)
    }

    pub fn regular_closed(&self) -> Vec<PointSet> {
        sorted_unique(self.opens.iter().map(|&u| self.closure(u)))
    }

    pub fn regular_open(&self) -> Vec<PointSet> {
        sorted_unique(self.opens.iter().map(|&u| self.interior(self.closure(u))))
    }

    pub fn clopen(&self) -> Vec<PointSet> {
        self.opens.iter().copied().filter(|&u| self.is_closed(u)).collect()
    }

    /// Clopen compact sets; every subset of a finite space is compact.
    pub fn clopen_compact(&self) -> Vec<PointSet> {
        self.clopen()
    }

    /// Compact regular closed sets; all of them on a finite space.
    pub fn compact_regular_closed(&self) -> Vec<PointSet> {
        self.regular_closed()
    }

    /// `RC(X)` with join `∪`, meet `cl(int(F ∩ G))`, complement `cl(X \ F)`.
    pub fn rc_algebra(&self) -> ConcreteBa<PointSet> {
        ConcreteBa::new(self.regular_closed(), |a, b| a & !b == 0, |a, b| a | b)
            .expect("regular closed sets form a Boolean algebra")
    }

    pub fn rc_meet(&self, f: PointSet, g: PointSet) -> PointSet {
        self.closure(self.interior(f & g))
    }

    pub fn rc_complement(&self, f: PointSet) -> PointSet {
        self.closure(self.full() & !f)
    }

    /// `RO(X)` with join `int(cl(U ∪ V))`.
    pub fn ro_algebra(&self) -> ConcreteBa<PointSet> {
        ConcreteBa::new(
            self.regular_open(),
            |a, b| a & !b == 0,
            |a, b| self.interior(self.closure(a | b)),
        )
        .expect("regular open sets form a Boolean algebra")
    }

    pub fn co_algebra(&self) -> ConcreteBa<PointSet> {
        ConcreteBa::new(self.clopen(), |a, b| a & !b == 0, |a, b| a | b)
            .expect("clopen sets form a Boolean algebra")
    }

    /// Every open set is a union of clopen sets.
    pub fn is_zero_dimensional(&self) -> bool {
        let co = self.clopen();
        self.opens
            .iter()
            .all(|&u| co.iter().filter(|&&c| c & !u == 0).fold(0, |m, c| m | c) == u)
    }

    /// Minimum base by exhaustive search, candidates in increasing mask order.
    pub fn weight(&self) -> Result<(usize, Vec<PointSet>)> {
        let cands: Vec<PointSet> = self.opens.iter().copied().filter(|&u| u != 0).collect();
        let mut reqs = Vec::new();
        for &u in &self.opens {
            for x in bits(u) {
                reqs.push(
                    (0..cands.len())
                        .filter(|&i| cands[i] >> x & 1 == 1 && cands[i] & !u == 0)
                        .collect(),
                );
            }
        }
        let pick = min_hitting_set(cands.len(), &reqs, SearchCap::default())?.expect("opens form a base");
        Ok((pick.len(), pick.into_iter().map(|i| cands[i]).collect()))
    }

    pub fn is_base(&self, fam: &[PointSet]) -> bool {
        self.opens.iter().all(|&u| {
            bits(u).all(|x| fam.iter().any(|&b| b >> x & 1 == 1 && b & !u == 0))
        })
    }

    pub fn is_pi_base(&self, fam: &[PointSet]) -> bool {
        self.opens
            .iter()
            .filter(|&&u| u != 0)
            .all(|&u| fam.iter().any(|&b| b != 0 && b & !u == 0))
    }

    /// Minimum π-base by exhaustive search.
    pub fn pi_weight(&self) -> Result<(usize, Vec<PointSet>)> {
        let cands: Vec<PointSet> = self.opens.iter().copied().filter(|&u| u != 0).collect();
        let reqs: Vec<Vec<usize>> = cands
            .iter()
            .map(|&u| (0..cands.len()).filter(|&i| cands[i] & !u == 0).collect())
            .collect();
        let pick = min_hitting_set(cands.len(), &reqs, SearchCap::default())?.expect("opens form a π-base");
        Ok((pick.len(), pick.into_iter().map(|i| cands[i]).collect()))
    }

    /// Minimum size of a base containing `∅` and closed under finite unions,
    /// by exhaustive search over families of open sets.
    pub fn union_closed_weight(&self) -> Result<(usize, Vec<PointSet>)> {
        let cap = 16;
        if self.opens.len() > cap {
            return Err(Error::Size {
                what: "open sets for union-closed base search",
                got: self.opens.len(),
                cap,
            });
        }
        let n = self.opens.len();
        for k in 1..=n {
            for pick in Combinations::new(n, k) {
                let fam: Vec<PointSet> = pick.iter().map(|&i| self.opens[i]).collect();
                let closed = fam.contains(&0)
                    && fam.iter().all(|&a| fam.iter().all(|&b| fam.contains(&(a | b))));
                if closed && self.is_base(&fam) {
                    return Ok((k, fam));
                }
            }
        }
        unreachable!("the full topology is a union-closed base")
    }

    pub fn is_semiregular(&self) -> bool {
        self.is_base(&self.regular_open())
    }

    pub fn is_pi_semiregular(&self) -> bool {
        self.is_pi_base(&self.regular_open())
    }

    /// Every open set has open closure.
    pub fn is_extremally_disconnected(&self) -> bool {
        self.opens.iter().all(|&u| self.is_open(self.closure(u)))
    }

    /// `x ≤ y` iff `x ∈ cl{y}`; returned as `above[x]`, the set of `y ≥ x`.
    pub fn specialization(&self) -> Vec<PointSet> {
        (0..self.points)
            .map(|x| point_set((0..self.points).filter(|&y| self.closure(1 << y) >> x & 1 == 1)))
            .collect()
    }

    /// DOT rendering of the specialization order (edges of the Hasse diagram,
    /// drawn from lower to higher points).
    pub fn specialization_dot(&self, name: &str) -> String {
        let above = self.specialization();
        let mut out = format!("digraph {name} {{\n");
        for x in 0..self.points {
            out.push_str(&format!("  p{x};\n"));
        }
        for x in 0..self.points {
            for y in bits(above[x]).filter(|&y| y != x) {
                let strict = |a: usize, b: usize| above[a] >> b & 1 == 1 && above[b] >> a & 1 == 0;
                let covered = strict(x, y)
                    && !(0..self.points).any(|z| strict(x, z) && strict(z, y));
                let equivalent = above[y] >> x & 1 == 1;
                if covered || (equivalent && x < y) {
                    out.push_str(&format!("  p{x} -> p{y};\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// Disjoint sum: points of `self` first, then those of `other`.
    pub fn sum(&self, other: &FinSpace) -> Result<FinSpace> {
        let shift = self.points;
        let opens: Vec<PointSet> = self
            .opens
            .iter()
            .flat_map(|&u| other.opens.iter().map(move |&v| u | v << shift))
            .collect();
        FinSpace::new(self.points + other.points, opens)
    }

    /// Image of the topology under a point permutation.
    pub fn relabel(&self, perm: &[usize]) -> FinSpace {
        let opens = self.opens.iter().map(|&u| point_set(bits(u).map(|x| perm[x])));
        FinSpace::new(self.points, opens).expect("relabeling preserves topologies")
    }
}

fn sorted_unique<I: IntoIterator<Item = PointSet>>(it: I) -> Vec<PointSet> {
    let s: BTreeSet<PointSet> = it.into_iter().collect();
    s.into_iter().collect()
}

fn close_under(fam: &mut BTreeSet<PointSet>, op: impl Fn(PointSet, PointSet) -> PointSet) {
    loop {
        let cur: Vec<PointSet> = fam.iter().copied().collect();
        let before = fam.len();
        for &a in &cur {
            for &b in &cur {
                fam.insert(op(a, b));
            }
        }
        if fam.len() == before {
            return;
        }
    }
}

/// A point map between finite spaces, as a table `map[x] = f(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceMap {
    pub source: FinSpace,
    pub target: FinSpace,
    map: Vec<usize>,
}

impl SpaceMap {
    pub fn new(source: FinSpace, target: FinSpace, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.point_count() {
            return Err(Error::Structure(format!(
                "map lists {} images for {} points",
                map.len(),
                source.point_count()
            )));
        }
        if let Some(&y) = map.iter().find(|&&y| y >= target.point_count()) {
            return Err(Error::Membership(format!("target has no point {y}")));
        }
        Ok(SpaceMap { source, target, map })
    }

    pub fn identity(x: FinSpace) -> Self {
        let map = (0..x.point_count()).collect();
        SpaceMap {
            source: x.clone(),
            target: x,
            map,
        }
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn image(&self, s: PointSet) -> PointSet {
        point_set(bits(s).map(|x| self.map[x]))
    }

    pub fn preimage(&self, t: PointSet) -> PointSet {
        point_set((0..self.map.len()).filter(|&x| t >> self.map[x] & 1 == 1))
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &SpaceMap) -> Result<SpaceMap> {
        if first.target != self.source {
            return Err(Error::Structure("composition of mismatched maps".into()));
        }
        SpaceMap::new(
            first.source.clone(),
            self.target.clone(),
            first.map.iter().map(|&y| self.map[y]).collect(),
        )
    }

    /// Preimages of opens are open; witness is the first open set whose
    /// preimage is not.
    pub fn continuity(&self) -> Verdict<PointSet> {
        Verdict::from_witness(
            self.target
                .opens()
                .iter()
                .copied()
                .find(|&v| !self.source.is_open(self.preimage(v))),
        )
    }

    pub fn is_closed_map(&self) -> bool {
        self.source
            .closed_sets()
            .iter()
            .all(|&f| self.target.is_closed(self.image(f)))
    }

    /// `f♯(U) = {y | f⁻¹(y) ⊆ U}`, checked against `Y \ f(X \ U)`.
    pub fn f_sharp(&self, u: PointSet) -> PointSet {
        let by_fibres = point_set(
            (0..self.target.point_count()).filter(|&y| self.preimage(1 << y) & !u == 0),
        );
        let by_image = self.target.full() & !self.image(self.source.full() & !u);
        assert_eq!(by_fibres, by_image, "the two descriptions of f-sharp disagree");
        by_fibres
    }
}

/// Map properties, each computed from its definition; the `_by_*` fields
/// are the alternative characterizations kept for cross-checking.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapFlags {
    pub closed: bool,
    /// Closed and continuous; compactness of fibres is automatic here.
    pub perfect: bool,
    pub surjective: bool,
    pub dense_image: bool,
    pub irreducible: bool,
    pub pi_map: bool,
    pub quasi_pi: bool,
    pub quasi_pi_by_closed_sets: bool,
    pub mr: bool,
    pub mr_by_regular_closed: bool,
    pub skeletal: bool,
    pub skeletal_by_regular_open: bool,
}

impl MapFlags {
    /// Implications between the flags that fail on this map.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if self.pi_map && !self.quasi_pi {
            v.push("pi-map but not quasi-pi");
        }
        if self.quasi_pi && !self.mr {
            v.push("quasi-pi but not MR");
        }
        if self.mr && !self.skeletal {
            v.push("MR but not skeletal");
        }
        if self.quasi_pi != self.quasi_pi_by_closed_sets {
            v.push("quasi-pi characterizations disagree");
        }
        if self.mr != self.mr_by_regular_closed {
            v.push("MR characterizations disagree");
        }
        if self.skeletal != self.skeletal_by_regular_open {
            v.push("skeletal characterizations disagree");
        }
        if self.closed && self.quasi_pi != self.pi_map {
            v.push("closed map with quasi-pi differing from pi");
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapReport {
    pub continuity: Verdict<PointSet>,
    /// Present only for continuous maps.
    pub flags: Option<MapFlags>,
}

pub fn classify_map(f: &SpaceMap) -> MapReport {
    let continuity = f.continuity();
    if !continuity.holds() {
        return MapReport {
            continuity,
            flags: None,
        };
    }
    let (x, y) = (&f.source, &f.target);
    let nonempty_opens: Vec<PointSet> = x.opens().iter().copied().filter(|&u| u != 0).collect();
    let nonempty_ro: Vec<PointSet> = x.regular_open().into_iter().filter(|&u| u != 0).collect();
    let closed = f.is_closed_map();
    let surjective = f.image(x.full()) == y.full();
    let dense_image = y.closure(f.image(x.full())) == y.full();
    let irreducible = surjective
        && x
            .closed_sets()
            .iter()
            .filter(|&&c| c != x.full())
            .all(|&c| f.image(c) != y.full());
    let sharp_ok = |u: &PointSet| y.interior(f.f_sharp(*u)) != 0;
    let quasi_pi = dense_image && nonempty_opens.iter().all(sharp_ok);
    let mr = dense_image && nonempty_ro.iter().all(sharp_ok);
    let image_dense_of = |c: &PointSet| y.closure(f.image(*c)) != y.full();
    let quasi_pi_by_closed_sets = dense_image
        && x.closed_sets()
            .iter()
            .filter(|&&c| c != x.full())
            .all(image_dense_of);
    let mr_by_regular_closed = dense_image
        && x.regular_closed()
            .iter()
            .filter(|&&c| c != x.full())
            .all(image_dense_of);
    let skel = |u: &PointSet| y.interior(y.closure(f.image(*u))) != 0;
    MapReport {
        continuity,
        flags: Some(MapFlags {
            closed,
            perfect: closed,
            surjective,
            dense_image,
            irreducible,
            pi_map: closed && irreducible,
            quasi_pi,
            quasi_pi_by_closed_sets,
            mr,
            mr_by_regular_closed,
            skeletal: nonempty_opens.iter().all(skel),
            skeletal_by_regular_open: nonempty_ro.iter().all(skel),
        }),
    }
}

/// Every map `X → Y` as a table, in lexicographic order.
pub fn all_point_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    if m == 0 {
        return Vec::new();
    }
    let total = m.pow(n as u32);
    (0..total)
        .map(|mut code| {
            let mut t = vec![0; n];
            for slot in t.iter_mut().rev() {
                *slot = code % m;
                code /= m;
            }
            t
        })
        .collect()
}

pub fn continuous_maps(x: &FinSpace, y: &FinSpace) -> Vec<SpaceMap> {
    all_point_maps(x.point_count(), y.point_count())
        .into_iter()
        .map(|t| SpaceMap::new(x.clone(), y.clone(), t).expect("table in range"))
        .filter(|f| f.continuity().holds())
        .collect()
}

/// A homeomorphism `X → Y` as a point table, if one exists.
pub fn find_homeomorphism(x: &FinSpace, y: &FinSpace) -> Option<Vec<usize>> {
    if x.point_count() != y.point_count() || x.opens().len() != y.opens().len() {
        return None;
    }
    let n = x.point_count();
    // Points can only correspond when their minimal neighbourhoods and
    // closures have equal sizes.
    let sig = |s: &FinSpace, p: usize| {
        (
            s.min_neighbourhood(p).count_ones(),
            s.closure(1 << p).count_ones(),
        )
    };
    let sx: Vec<_> = (0..n).map(|p| sig(x, p)).collect();
    let sy: Vec<_> = (0..n).map(|p| sig(y, p)).collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        i: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        sx: &[(u32, u32)],
        sy: &[(u32, u32)],
        x: &FinSpace,
        y: &FinSpace,
    ) -> bool {
        if i == perm.len() {
            return x.relabel(perm) == *y;
        }
        for j in 0..perm.len() {
            if !used[j] && sx[i] == sy[j] {
                used[j] = true;
                perm[i] = j;
                if go(i + 1, perm, used, sx, sy, x, y) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    go(0, &mut perm, &mut used, &sx, &sy, x, y).then_some(perm)
}

/// Every topology on `n` points (labeled), via their specialization
/// preorders, in a fixed order.
pub fn all_topologies(n: usize) -> Vec<FinSpace> {
    assert!(n <= 5, "topology enumeration limited to 5 points");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for code in 0u64..1 << pairs.len() {
        let mut above: Vec<PointSet> = (0..n).map(|x| 1 << x).collect();
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if code >> k & 1 == 1 {
                above[a] |= 1 << b;
            }
        }
        let transitive = (0..n).all(|a| bits(above[a]).all(|b| above[b] & !above[a] == 0));
        if !transitive {
            continue;
        }
        let space = FinSpace::from_preorder(n, &above).expect("up-sets form a topology");
        if seen.insert(space.opens.clone()) {
            out.push(space);
        }
    }
    out
}

/// Topologies whose open sets are the unions of blocks of a partition.
pub fn partition_topologies(n: usize) -> Vec<FinSpace> {
    // restricted growth strings enumerate set partitions once each
    fn grow(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<FinSpace>) {
        if prefix.len() == n {
            out.push(FinSpace::from_partition(prefix));
            return;
        }
        let next = prefix.iter().max().map_or(0, |m| m + 1);
        for b in 0..=next {
            prefix.push(b);
            grow(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), n, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_point() -> FinSpace {
        // opens ∅, {0}, {1}, {0,1}, X
        FinSpace::new(3, [0, 0b001, 0b010, 0b011, 0b111]).unwrap()
    }

    #[test]
    fn rejects_bad_families() {
        assert!(FinSpace::new(2, [0, 0b01, 0b10, 0b11]).is_ok());
        assert!(FinSpace::new(2, [0, 0b01, 0b10]).is_err());
        assert!(FinSpace::new(2, [0b01, 0b11]).is_err());
        assert!(FinSpace::new(3, [0, 0b011, 0b110, 0b111]).is_err());
    }

    #[test]
    fn algebras_of_small_spaces() {
        let d2 = FinSpace::discrete(2);
        assert_eq!(d2.regular_closed().len(), 4);
        assert_eq!(d2.clopen().len(), 4);
        let s = FinSpace::sierpinski();
        assert_eq!(s.closure(0b01), 0b11);
        assert_eq!(s.regular_closed(), vec![0, 0b11]);
        assert_eq!(s.clopen(), vec![0, 0b11]);
        assert_eq!(three_point().rc_algebra().len(), 4);
    }

    #[test]
    fn rc_operations_match_encoding() {
        for n in 0..=3 {
            for x in all_topologies(n) {
                let rc = x.rc_algebra();
                let alg = rc.algebra();
                for a in alg.elements() {
                    let f = *rc.decode(a);
                    assert_eq!(rc.encode(&x.rc_complement(f)), Some(alg.complement(a)));
                    for b in alg.elements() {
                        let g = *rc.decode(b);
                        assert_eq!(rc.encode(&x.rc_meet(f, g)), Some(alg.meet(a, b)));
                    }
                }
                let ro = x.ro_algebra();
                assert_eq!(ro.len(), rc.len());
            }
        }
    }

    #[test]
    fn topology_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| all_topologies(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 4, 29, 355]);
        let parts: Vec<usize> = (0..=4).map(|n| partition_topologies(n).len()).collect();
        assert_eq!(parts, vec![1, 1, 2, 5, 15]);
        assert!(partition_topologies(4).iter().all(|x| x.is_zero_dimensional()));
    }

    #[test]
    fn brute_force_topologies_on_three_points() {
        // Independent count: every family of subsets containing ∅ and X that
        // is closed under ∪ and ∩.
        let mut count = 0;
        for code in 0u32..1 << 6 {
            let mut fam = vec![0u32, 7];
            for k in 0..6 {
                if code >> k & 1 == 1 {
                    fam.push(k + 1);
                }
            }
            if FinSpace::new(3, fam).is_ok() {
                count += 1;
            }
        }
        assert_eq!(count, 29);
    }

    #[test]
    fn f_sharp_examples() {
        let d2 = FinSpace::discrete(2);
        let id = SpaceMap::identity(d2.clone());
        assert_eq!(id.f_sharp(0b01), 0b01);
        let c = SpaceMap::new(d2, FinSpace::discrete(1), vec![0, 0]).unwrap();
        assert_eq!(c.f_sharp(0b01), 0);
        assert_eq!(c.f_sharp(0b11), 0b1);
    }

    #[test]
    fn classification_examples() {
        let id = classify_map(&SpaceMap::identity(FinSpace::sierpinski()));
        let f = id.flags.unwrap();
        assert!(f.pi_map && f.mr && f.skeletal);

        // {a} ↪ Sierpiński
        let emb = SpaceMap::new(FinSpace::discrete(1), FinSpace::sierpinski(), vec![0]).unwrap();
        let f = classify_map(&emb).flags.unwrap();
        assert!(f.quasi_pi && !f.pi_map && !f.closed);
        assert!(f.violations().is_empty());

        let c = SpaceMap::new(FinSpace::discrete(2), FinSpace::discrete(1), vec![0, 0]).unwrap();
        let f = classify_map(&c).flags.unwrap();
        assert!(f.closed && !f.irreducible && !f.mr);

        // not continuous: swap in Sierpiński
        let swap = SpaceMap::new(FinSpace::sierpinski(), FinSpace::sierpinski(), vec![1, 0]).unwrap();
        let r = classify_map(&swap);
        assert_eq!(r.continuity, Verdict::Fails(0b01));
        assert!(r.flags.is_none());
    }

    #[test]
    fn weights() {
        for n in 1..=4 {
            let d = FinSpace::discrete(n);
            assert_eq!(d.weight().unwrap().0, n);
            assert_eq!(d.pi_weight().unwrap().0, n);
        }
        // In the Sierpiński space cl{a} = X, so RO = {∅, X} and the open
        // set {a} contains no nonempty regular open set.
        let s = FinSpace::sierpinski();
        assert_eq!(s.regular_open(), vec![0, 0b11]);
        assert!(!s.is_pi_semiregular());
        let i2 = FinSpace::indiscrete(2);
        assert!(i2.is_pi_semiregular());
        assert!(i2.is_semiregular());
        assert_eq!(FinSpace::discrete(2).union_closed_weight().unwrap().0, 4);
        assert_eq!(FinSpace::discrete(0).union_closed_weight().unwrap().0, 1);
    }

    #[test]
    fn homeomorphisms() {
        let s = FinSpace::sierpinski();
        let flipped = s.relabel(&[1, 0]);
        assert_ne!(s, flipped);
        assert_eq!(find_homeomorphism(&s, &flipped), Some(vec![1, 0]));
        assert_eq!(find_homeomorphism(&s, &FinSpace::discrete(2)), None);
        let sum = FinSpace::discrete(1).sum(&FinSpace::discrete(2)).unwrap();
        assert_eq!(sum, FinSpace::discrete(3));
    }

    #[test]
    fn dot_output() {
        let dot = FinSpace::sierpinski().specialization_dot("X");
        assert!(dot.contains("p1 -> p0"));
    }
}
